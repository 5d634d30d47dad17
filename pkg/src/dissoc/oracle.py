"""Brute-force ground truth for maximum dissociation sets.

Independent of :mod:`dissoc.engine`: it searches vertex subsets directly and
knows nothing about rooted states.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .tree import Tree

__all__ = ["OracleResult", "OracleSizeError", "brute_force", "scan_all_subsets", "DEFAULT_HARD_CAP"]

DEFAULT_HARD_CAP = 24


class OracleSizeError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    psi: int
    phi: int
    sets: list[list[int]]


def _result(best: int, masks: list[int], n: int) -> OracleResult:
    sets = sorted([v for v in range(n) if m >> v & 1] for m in masks)
    return OracleResult(best, len(sets), sets)


def _bfs_order(t: Tree) -> list[int]:
    order = [0]
    seen = {0}
    for v in order:
        for w in t.adjacency[v]:
            if w not in seen:
                seen.add(w)
                order.append(w)
    return order


def brute_force(t: Tree, hard_cap: int = DEFAULT_HARD_CAP) -> OracleResult:
    """All maximum dissociation sets by pruned include/exclude search."""
    if t.n > hard_cap:
        raise OracleSizeError(f"brute force refuses n={t.n} > hard_cap={hard_cap}")
    ptr = [0]
    idx: list[int] = []
    for nb in t.adjacency:
        idx.extend(nb)
        ptr.append(len(idx))
    # BFS order puts each vertex right after its neighbourhood is mostly decided
    best, masks = _kernels.mds_search(t.n, _bfs_order(t), ptr, idx)
    return _result(best, masks, t.n)


def scan_all_subsets(t: Tree, hard_cap: int = 16) -> OracleResult:
    """Unpruned scan of all 2^n subsets; the reference for the pruned search."""
    n = t.n
    if n > hard_cap:
        raise OracleSizeError(f"subset scan refuses n={n} > hard_cap={hard_cap}")
    nbr = [sum(1 << w for w in t.adjacency[v]) for v in range(n)]
    best = -1
    masks: list[int] = []
    for m in range(1 << n):
        if any(m >> v & 1 and (nbr[v] & m).bit_count() > 1 for v in range(n)):
            continue
        size = m.bit_count()
        if size > best:
            best, masks = size, [m]
        elif size == best:
            masks.append(m)
    return _result(best, masks, n)
