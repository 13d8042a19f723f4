"""The representation ring, its wrong-way map onto the fusion ring, and
the Verlinde ideal.

The map sends an irreducible class to the signed alcove folding of its
highest weight.  Its kernel (the Verlinde ideal) is exposed as a
membership test; an independent Weyl-character oracle evaluates characters
at the rational torus points ``(mu + rho)/k`` where ideal members must
vanish.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .alcove import FusionContext, affine_reduce
from .errors import ContextMismatch, NotDominant, RankTooLarge, SingularPoint
from .fusion import CharElement, FusionElement, _unit_phase
from .rootsystem import RootSystem, Weight, is_dominant, signed_weyl_orbit

_CHAR_RANK_CAP = 4
_DENOM_FLOOR = 1e-9

# signed Weyl orbits of shifted weights, keyed by (type, weight)
_ORBIT_CACHE: dict[tuple[str, Weight], dict[Weight, int]] = {}


def iota_shriek(ctx: FusionContext, x: CharElement) -> FusionElement:
    """Wrong-way map from the representation ring onto the fusion ring:
    linear extension of the signed alcove folding of highest weights."""
    acc: dict[Weight, int] = {}
    for lam, c in x.items():
        if len(lam) != ctx.rs.rank:
            raise ContextMismatch(
                f"label {lam} has {len(lam)} entries, context rank is {ctx.rs.rank}")
        red, s = affine_reduce(ctx, lam)
        if s:
            acc[red] = acc.get(red, 0) + c * s
    return FusionElement(ctx, acc)


def ideal_member(ctx: FusionContext, x: CharElement) -> bool:
    """Verlinde-ideal membership: true iff the wrong-way image vanishes."""
    return iota_shriek(ctx, x).is_zero()


def _signed_orbit(rs: RootSystem, y: Weight) -> dict[Weight, int]:
    key = (rs.name, y)
    orbit = _ORBIT_CACHE.get(key)
    if orbit is None:
        orbit = _ORBIT_CACHE.setdefault(key, signed_weyl_orbit(rs, y))
    return orbit


def _ip_label(rs: RootSystem, x: Sequence[int], p: Sequence[Fraction]) -> Fraction:
    # basic inner product of an integer vector with a rational vector
    q = rs.quad_form
    n = rs.rank
    total = Fraction(0)
    for i in range(n):
        if x[i]:
            row = q[i]
            total += x[i] * sum(row[j] * p[j] for j in range(n) if p[j])
    return total


def _alternating_sum(rs: RootSystem, y: Weight, point: tuple[Fraction, ...]) -> complex:
    total = 0j
    for v, sgn in _signed_orbit(rs, y).items():
        total += sgn * _unit_phase(_ip_label(rs, v, point))
    return total


def char_value(rs: RootSystem, lam: Sequence[int], point: Sequence) -> complex:
    """Weyl character formula at a rational point of the weight space.

    Evaluates chi_lam at the torus element attached to ``point`` (labels,
    exact rationals) as the quotient of alternating sums over the Weyl
    orbits of ``lam + rho`` and ``rho``.  The exponent arguments are exact;
    only the final exponentials are floating point.
    """
    if rs.rank > _CHAR_RANK_CAP:
        raise RankTooLarge(f"character oracle limited to rank <= {_CHAR_RANK_CAP}")
    lam = tuple(int(x) for x in lam)
    if not is_dominant(lam):
        raise NotDominant(f"highest weight {lam} is not dominant")
    if len(point) != rs.rank:
        raise ValueError(f"expected {rs.rank} coordinates, got {len(point)}")
    p = tuple(Fraction(x) for x in point)
    rho = rs.rho
    den = _alternating_sum(rs, rho, p)
    if abs(den) <= _DENOM_FLOOR:
        raise SingularPoint(f"Weyl denominator vanishes at {p}")
    num = _alternating_sum(rs, tuple(l + 1 for l in lam), p)
    return num / den
