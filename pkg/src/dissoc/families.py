"""Builders for the extremal subcubic families and their predicted (order, psi, phi).

Pendant-edge families hang a two-vertex edge from every chosen vertex of a
base path; chain families grow K1 or K2 by repeated P5 attachments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Literal

from .bounds import InfeasiblePairError, phi_bound_sharp, psi_lower, psi_upper_subcubic, seq_f, seq_g
from .tree import Tree, attach_p5, attach_pendant_edge, canonical_code, path

__all__ = [
    "FamilyPrediction",
    "FamilySpec",
    "AttachPolicy",
    "lowest_label_policy",
    "highest_label_policy",
    "seeded_policy",
    "build_T",
    "build_T1",
    "build_T2",
    "build_chain",
    "build_family",
    "build_extremal",
    "chain_closure",
    "KINDS",
]

AttachPolicy = Callable[[Tree], int]
KINDS = ("T", "T1", "T2", "K1chain", "K2chain")


@dataclass(frozen=True)
class FamilyPrediction:
    n: int
    psi: int
    phi: int


def lowest_label_policy(t: Tree) -> int:
    """Lowest-labeled vertex of degree < 3."""
    for v in range(t.n):
        if t.degree(v) < 3:
            return v
    raise AssertionError("tree has no vertex of degree < 3")


def highest_label_policy(t: Tree) -> int:
    for v in range(t.n - 1, -1, -1):
        if t.degree(v) < 3:
            return v
    raise AssertionError("tree has no vertex of degree < 3")


def seeded_policy(seed: int) -> AttachPolicy:
    """Pick uniformly among vertices of degree < 3 using the portable generator."""
    from .treegen import SplitMix64

    rng = SplitMix64(seed)

    def pick(t: Tree) -> int:
        cands = [v for v in range(t.n) if t.degree(v) < 3]
        assert cands, "tree has no vertex of degree < 3"
        return cands[rng.below(len(cands))]

    return pick


@dataclass(frozen=True)
class FamilySpec:
    kind: Literal["T", "T1", "T2", "K1chain", "K2chain"]
    param: int
    attach_policy: AttachPolicy = field(default=lowest_label_policy, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}; expected one of {KINDS}")
        lo = 0 if self.kind.endswith("chain") else 1
        if self.param < lo:
            raise ValueError(f"family {self.kind} needs parameter >= {lo}, got {self.param}")


def _pendant_family(base_len: int, hosts: range) -> Tree:
    t = path(base_len)
    for v in hosts:
        t = attach_pendant_edge(t, v)
    return t


def _check_ell(ell: int) -> None:
    if ell < 1:
        raise ValueError(f"family parameter must be >= 1, got {ell}")


def build_T(ell: int) -> tuple[Tree, FamilyPrediction]:
    """Path of order ell with a pendant edge on every vertex."""
    _check_ell(ell)
    return _pendant_family(ell, range(ell)), FamilyPrediction(3 * ell, 2 * ell, seq_f(ell + 1))


def build_T1(ell: int) -> tuple[Tree, FamilyPrediction]:
    """Path of order ell+1 with pendant edges on all vertices except the last endvertex."""
    _check_ell(ell)
    return _pendant_family(ell + 1, range(ell)), FamilyPrediction(3 * ell + 1, 2 * ell + 1, seq_g(ell))


def build_T2(ell: int) -> tuple[Tree, FamilyPrediction]:
    """Path of order ell+2 with pendant edges on the interior vertices."""
    _check_ell(ell)
    return _pendant_family(ell + 2, range(1, ell + 1)), FamilyPrediction(3 * ell + 2, 2 * ell + 2, seq_f(ell))


def _attach_many(t: Tree, m: int, policy: AttachPolicy) -> Tree:
    for _ in range(m):
        t = attach_p5(t, policy(t))
    return t


def build_chain(base: Literal["K1", "K2"], m: int, policy: AttachPolicy = lowest_label_policy) -> tuple[Tree, FamilyPrediction]:
    """K1 or K2 grown by ``m`` P5 attachments at policy-chosen vertices."""
    if m < 0:
        raise ValueError(f"attachment count must be >= 0, got {m}")
    if base == "K2":
        t = path(2)
        pred = FamilyPrediction(2 + 5 * m, 2 + 4 * m, 1)
    elif base == "K1":
        t = path(1)
        n, p = 1 + 5 * m, 1 + 4 * m
        pred = FamilyPrediction(n, p, phi_bound_sharp(n, p))
    else:
        raise ValueError(f"chain base must be 'K1' or 'K2', got {base!r}")
    return _attach_many(t, m, policy), pred


def build_family(spec: FamilySpec) -> tuple[Tree, FamilyPrediction]:
    if spec.kind == "T":
        return build_T(spec.param)
    if spec.kind == "T1":
        return build_T1(spec.param)
    if spec.kind == "T2":
        return build_T2(spec.param)
    return build_chain(spec.kind[:2], spec.param, spec.attach_policy)


def build_extremal(n: int, psi: int, policy: AttachPolicy = lowest_label_policy) -> list[tuple[Tree, FamilyPrediction]]:
    """One tree per construction variant that should attain the sharp count bound at (n, psi).

    The number of P5 attachments is always derived from the order, ``(n - n_base) / 5``.
    """
    if n < 1 or not psi_lower(n) <= psi <= psi_upper_subcubic(n):
        raise InfeasiblePairError(f"(n={n}, psi={psi}) outside [ceil(2n/3), floor((4n+2)/5)]")
    bound = phi_bound_sharp(n, psi)
    bases: list[Tree] = []
    if 3 * psi == 2 * n:
        bases.append(build_T(psi // 2)[0])
    elif 5 * psi < 4 * n:
        if psi % 2 == 0:
            bases.append(build_T((4 * n - 5 * psi) // 2)[0])
            bases.append(build_T2((4 * n - 5 * psi + 2) // 2)[0])
        else:
            bases.append(build_T1((4 * n - 5 * psi + 1) // 2)[0])
    elif 5 * psi == 4 * n:
        bases.append(path(5))
        bases.append(build_T2(1)[0])
    elif 5 * psi == 4 * n + 1:
        bases.append(path(1))
    else:  # 5 * psi == 4 * n + 2
        bases.append(path(2))
    out = []
    for base in bases:
        extra = n - base.n
        if extra < 0 or extra % 5:
            raise InfeasiblePairError(f"base of order {base.n} cannot reach order {n} by P5 attachments")
        out.append((_attach_many(base, extra // 5, policy), FamilyPrediction(n, psi, bound)))
    return out


def chain_closure(base: Literal["K1", "K2"], m: int) -> dict[bytes, Tree]:
    """Every isomorphism class reachable from the base by ``m`` P5 attachments at vertices of degree < 3."""
    level = {canonical_code(t): t for t in [path(1 if base == "K1" else 2)]}
    for _ in range(m):
        nxt: dict[bytes, Tree] = {}
        for t in level.values():
            for v in range(t.n):
                if t.degree(v) < 3:
                    s = attach_p5(t, v)
                    nxt.setdefault(canonical_code(s), s)
        level = nxt
    return dict(sorted(level.items()))
