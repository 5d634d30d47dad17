"""Exhaustive and random generation of (subcubic) trees.

Exhaustive generation grows every class of order ``n-1`` by one leaf at each
vertex below the degree cap and deduplicates by canonical code. Removing any
leaf never raises a degree, so every capped tree of order ``n`` is reached.
Representatives are rebuilt from their codes and yielded in code order, which
makes the stream independent of how it was produced.

Random generation uses SplitMix64 so that seeds reproduce across languages:

    state += 0x9E3779B97F4A7C15                  (mod 2**64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9     (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB     (mod 2**64)
    return z ^ (z >> 31)

A choice among ``k`` candidates takes ``next() % k`` (candidates in ascending
label order). The grower starts from K1 and, for each new vertex ``i = 1..n-1``,
joins it to a chosen existing vertex of degree < 3. This samples growth
histories, not isomorphism classes uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Literal

from .tree import Tree, canonical_code, tree_from_code

__all__ = [
    "GenConfig",
    "GeneratorCeilingError",
    "SplitMix64",
    "DEFAULT_CEILING",
    "enumerate_subcubic",
    "enumerate_trees",
    "class_codes",
    "random_subcubic",
    "random_tree",
]

DEFAULT_CEILING = 18
_MASK = (1 << 64) - 1


class GeneratorCeilingError(ValueError):
    pass


@dataclass(frozen=True)
class GenConfig:
    n: int
    mode: Literal["exhaustive", "random"] = "exhaustive"
    seed: int = 0
    max_degree_cap: int | None = 3
    ceiling: int = DEFAULT_CEILING

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.mode == "exhaustive" and self.n > self.ceiling:
            raise GeneratorCeilingError(f"n={self.n} exceeds exhaustive ceiling {self.ceiling}")

    def generate(self) -> Iterator[Tree]:
        if self.mode == "random":
            yield random_tree(self.n, self.seed, self.max_degree_cap)
        else:
            yield from enumerate_trees(self.n, self.max_degree_cap, self.ceiling)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        return self.next() % k


@lru_cache(maxsize=None)
def class_codes(n: int, cap: int | None = 3) -> tuple[bytes, ...]:
    """Sorted canonical codes of all trees of order ``n`` with max degree <= ``cap``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return (b"()",)
    limit = cap if cap is not None else n
    found: set[bytes] = set()
    for code in class_codes(n - 1, cap):
        t = tree_from_code(code)
        edges = list(t.edges)
        for v in range(t.n):
            if t.degree(v) < limit:
                found.add(canonical_code(Tree.from_edges(n, edges + [(v, n - 1)])))
    return tuple(sorted(found))


def enumerate_trees(n: int, max_degree_cap: int | None = 3, ceiling: int = DEFAULT_CEILING) -> Iterator[Tree]:
    """One representative per isomorphism class, in canonical-code order."""
    if not 1 <= n <= ceiling:
        raise GeneratorCeilingError(f"n={n} outside 1..{ceiling}")
    for code in class_codes(n, max_degree_cap):
        yield tree_from_code(code)


def enumerate_subcubic(n: int, ceiling: int = DEFAULT_CEILING) -> Iterator[Tree]:
    return enumerate_trees(n, 3, ceiling)


def random_tree(n: int, seed: int, max_degree_cap: int | None = 3) -> Tree:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = SplitMix64(seed)
    deg = [0] * n
    edges = []
    limit = max_degree_cap if max_degree_cap is not None else n
    for i in range(1, n):
        cands = [v for v in range(i) if deg[v] < limit]
        v = cands[rng.below(len(cands))]
        deg[v] += 1
        deg[i] += 1
        edges.append((v, i))
    return Tree.from_edges(n, edges)


def random_subcubic(n: int, seed: int) -> Tree:
    return random_tree(n, seed, 3)
