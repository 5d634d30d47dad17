"""The recurrence sequences f and g and every closed-form bound on psi and phi.

All comparisons are exact: the decimal constants 1.466 and 1.29 are taken as
the rationals 1466/1000 and 129/100 and compared by integer cross-multiplication.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

__all__ = [
    "seq_f",
    "seq_g",
    "psi_lower",
    "psi_upper_subcubic",
    "phi_bound_sharp",
    "phi_bound_checks",
    "pow_bound_holds",
    "BoundReport",
    "InfeasiblePairError",
]


class InfeasiblePairError(ValueError):
    """No subcubic tree can have this (order, dissociation number) pair."""


_F = [1, 1, 3]
_G = [1, 2, 4]


def _extend(seq: list[int], k: int) -> int:
    if k < 0:
        raise ValueError(f"sequence index must be >= 0, got {k}")
    while len(seq) <= k:
        seq.append(seq[-1] + 2 * seq[-2] + seq[-3])
    return seq[k]


def seq_f(k: int) -> int:
    """f(0)=1, f(1)=1, f(2)=3, f(k) = f(k-1) + 2 f(k-2) + f(k-3)."""
    return _extend(_F, k)


def seq_g(k: int) -> int:
    """g(0)=1, g(1)=2, g(2)=4, same recurrence as f."""
    return _extend(_G, k)


def psi_lower(n: int) -> int:
    """ceil(2n/3): every tree of order n has at least this dissociation number."""
    return (2 * n + 2) // 3


def psi_upper_subcubic(n: int) -> int:
    """floor((4n+2)/5): the largest dissociation number of a subcubic tree of order n."""
    return (4 * n + 2) // 5


def pow_bound_holds(value: int, num: int, den: int, exponent: int) -> bool:
    """Exactly decide ``value <= (num/den) ** exponent``."""
    if exponent >= 0:
        return value * den**exponent <= num**exponent
    return value * num ** (-exponent) <= den ** (-exponent)


def phi_bound_sharp(n: int, psi: int) -> int:
    """Largest possible number of maximum dissociation sets over subcubic trees with this (n, psi)."""
    if n < 1 or not psi_lower(n) <= psi <= psi_upper_subcubic(n):
        raise InfeasiblePairError(f"(n={n}, psi={psi}) outside [ceil(2n/3), floor((4n+2)/5)]")
    if psi % 2 == 0:
        num, seq = 4 * n - 5 * psi + 2, seq_f
    else:
        num, seq = 4 * n - 5 * psi + 1, seq_g
    if num % 2 or num < 0:
        raise InfeasiblePairError(f"(n={n}, psi={psi}) gives non-integral sequence index {num}/2")
    return seq(num // 2)


@dataclass(frozen=True)
class BoundReport:
    n: int
    psi: int
    phi: int
    lower_ok: bool
    upper_ok: bool
    thm32_ok: bool
    cor_n_ok: bool
    cor_psi_ok: bool
    sharp_bound: int | None
    sharp_ok: bool
    sharp_attained: bool

    @property
    def all_ok(self) -> bool:
        return all((self.lower_ok, self.upper_ok, self.thm32_ok, self.cor_n_ok, self.cor_psi_ok, self.sharp_ok))

    def as_dict(self) -> dict:
        return asdict(self)


def phi_bound_checks(n: int, psi: int, phi: int) -> BoundReport:
    try:
        sharp = phi_bound_sharp(n, psi)
    except InfeasiblePairError:
        sharp = None
    return BoundReport(
        n=n,
        psi=psi,
        phi=phi,
        lower_ok=psi >= psi_lower(n),
        upper_ok=psi <= psi_upper_subcubic(n),
        thm32_ok=pow_bound_holds(phi, 1466, 1000, 4 * n - 5 * psi + 2),
        cor_n_ok=pow_bound_holds(phi, 129, 100, n + 1),
        cor_psi_ok=pow_bound_holds(phi, 1466, 1000, psi + 2),
        sharp_bound=sharp,
        sharp_ok=sharp is not None and phi <= sharp,
        sharp_attained=sharp is not None and phi == sharp,
    )
