"""Dissociation number, maximum-set counts, root profiles and enumeration on trees.

Everything is driven by one three-state dynamic program per rooted tree
(see :func:`run_dp`). Counts are plain Python integers, so they never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from . import _kernels
from ._kernels import FORCE_IN, FORCE_OUT, FREE
from .tree import LabelRangeError, RootedTree, Tree, delete_leaf, root_at

__all__ = [
    "StateValue",
    "INFEASIBLE",
    "VertexTable",
    "RootProfile",
    "Enumeration",
    "run_dp",
    "psi",
    "phi",
    "psi_phi",
    "root_profile",
    "iter_mds",
    "enumerate_mds",
    "is_dissociation_set",
    "tau3",
    "lemma31_check",
]


class StateValue(NamedTuple):
    """Best size within a subtree under one state, and how many sets achieve it.

    ``size`` is ``None`` for an infeasible state (whose count is 0).
    """

    size: int | None
    count: int

    @property
    def feasible(self) -> bool:
        return self.size is not None


INFEASIBLE = StateValue(None, 0)


def _sv(size: int, count: int) -> StateValue:
    return INFEASIBLE if size < 0 else StateValue(size, count)


@dataclass(frozen=True)
class VertexTable:
    """Per-vertex DP states.

    ``excluded[v]``: v not in the set. ``in_free[v]``: v in the set with no
    chosen child. ``in_paired[v]``: v in the set with exactly one chosen child.
    """

    rooted: RootedTree
    excluded: tuple[StateValue, ...]
    in_free: tuple[StateValue, ...]
    in_paired: tuple[StateValue, ...]

    def best(self, v: int) -> StateValue:
        """Combined optimum over the three states of ``v`` (counts of tied states add)."""
        states = (self.excluded[v], self.in_free[v], self.in_paired[v])
        size = max((s.size for s in states if s.feasible), default=None)
        if size is None:
            return INFEASIBLE
        return StateValue(size, sum(s.count for s in states if s.size == size))


@dataclass(frozen=True)
class RootProfile:
    vertex: int
    psi: int
    phi_out: int
    phi_in0: int
    phi_in1: int

    @property
    def phi(self) -> int:
        return self.phi_out + self.phi_in0 + self.phi_in1


class Enumeration(NamedTuple):
    sets: list[list[int]]
    truncated: bool


def _raw(rt: RootedTree, forced=None):
    ptr, idx = rt.flat_children
    return _kernels.dp_tables(rt.n, rt.postorder, ptr, idx, forced)


def run_dp(rt: RootedTree) -> VertexTable:
    es, ec, fs, fc, ps, pc = _raw(rt)
    return VertexTable(
        rt,
        tuple(map(_sv, es, ec)),
        tuple(map(_sv, fs, fc)),
        tuple(map(_sv, ps, pc)),
    )


def _root_best(raw, r: int) -> tuple[int, int]:
    es, ec, fs, fc, ps, pc = raw
    size = max(es[r], fs[r], ps[r])
    if size < 0:
        return -1, 0
    count = (ec[r] if es[r] == size else 0) + (fc[r] if fs[r] == size else 0) + (pc[r] if ps[r] == size else 0)
    return size, count


def psi_phi(t: Tree, root: int = 0) -> tuple[int, int]:
    """``(psi, phi)`` from a single DP pass rooted at ``root``."""
    rt = root_at(t, root)
    return _root_best(_raw(rt), rt.root)


def psi(t: Tree) -> int:
    return psi_phi(t)[0]


def phi(t: Tree) -> int:
    """Number of maximum dissociation sets."""
    return psi_phi(t)[1]


def tau3(t: Tree) -> int:
    """Minimum 3-path vertex cover size, the complement of a maximum dissociation set."""
    return t.n - psi(t)


def root_profile(t: Tree, v: int) -> RootProfile:
    """Split the maximum sets by how ``v`` takes part: absent, isolated, or paired."""
    rt = root_at(t, v)
    es, ec, fs, fc, ps, pc = raw = _raw(rt)
    size, _ = _root_best(raw, v)
    return RootProfile(
        vertex=v,
        psi=size,
        phi_out=ec[v] if es[v] == size else 0,
        phi_in0=fc[v] if fs[v] == size else 0,
        phi_in1=pc[v] if ps[v] == size else 0,
    )


def is_dissociation_set(t: Tree, s: Iterable[int]) -> bool:
    chosen = set(s)
    for v in chosen:
        if not 0 <= v < t.n:
            raise LabelRangeError(f"vertex label {v} out of range 0..{t.n - 1}")
    return all(sum(w in chosen for w in t.adjacency[v]) <= 1 for v in chosen)


def iter_mds(t: Tree) -> Iterator[list[int]]:
    """Lazily yield every maximum dissociation set in lexicographic order of sorted labels.

    Vertices are decided in label order, "in" before "out", which is exactly
    lexicographic order on equal-length sorted lists. A constrained DP run counts
    the maximum sets compatible with each partial decision, so dead branches are
    never entered.
    """
    rt = root_at(t, 0)
    n = t.n
    target, total = _root_best(_raw(rt), 0)
    forced = [FREE] * n

    def compatible() -> int:
        size, count = _root_best(_raw(rt, forced), 0)
        return count if size == target else 0

    def rec(i: int, count: int) -> Iterator[list[int]]:
        if i == n:
            yield [v for v in range(n) if forced[v] == FORCE_IN]
            return
        forced[i] = FORCE_IN
        with_i = compatible()
        if with_i:
            yield from rec(i + 1, with_i)
        if count - with_i:
            forced[i] = FORCE_OUT
            yield from rec(i + 1, count - with_i)
        forced[i] = FREE

    yield from rec(0, total)


def enumerate_mds(t: Tree, limit: int | None = None) -> Enumeration:
    if limit is not None and limit < 1:
        raise ValueError("limit must be >= 1")
    out: list[list[int]] = []
    for s in iter_mds(t):
        if limit is not None and len(out) == limit:
            return Enumeration(out, True)
        out.append(s)
    return Enumeration(out, False)


def lemma31_check(t: Tree) -> tuple[int, bool]:
    """Check the leaf inequalities on every leaf ``v`` with ``psi(t - v) == psi(t)``.

    For each such leaf: ``phi_out <= min(phi_in0, phi_in1)`` and ``3 * phi_out <= phi``.
    Returns ``(qualifying leaves, all inequalities held)``.
    """
    if t.n < 2:
        return 0, True
    p = psi(t)
    checked = 0
    ok = True
    for v in t.leaves():
        if psi(delete_leaf(t, v)) != p:
            continue
        checked += 1
        prof = root_profile(t, v)
        if not (prof.phi_out <= min(prof.phi_in0, prof.phi_in1) and 3 * prof.phi_out <= prof.phi):
            ok = False
    return checked, ok
