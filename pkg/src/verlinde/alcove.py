"""Level truncation and alcove combinatorics.

A fusion ring at level ``l`` is based on the dominant weights of level at
most ``l`` (the weights of the closed fundamental alcove scaled by ``l``).
Folding an arbitrary weight into that alcove under the rho-shifted affine
Weyl group at shifted level ``k = l + h_vee`` is the reflection step of
the Kac-Walton fusion algorithm; it either lands on a wall (sign 0) or
reaches a unique alcove representative with a determinant sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidLevel, LevelOverflow, LevelZero, NotDominant
from .rootsystem import (
    RootSystem,
    Weight,
    _MAX_REDUCE_STEPS,
    _reflect,
    is_dominant,
    level,
    weights_with_level_bound,
)


def level_weights(rs: RootSystem, ell: int) -> list[Weight]:
    """Dominant weights of level at most ``ell``, sorted lexicographically."""
    if ell < 0:
        raise InvalidLevel(f"fusion level must be >= 0, got {ell}")
    return weights_with_level_bound(rs, ell, floor=0)


class FusionContext:
    """A root system together with a fusion level and its enumerated basis.

    Immutable after construction (the only mutable state is internal
    memoisation of products, which is value-transparent), so instances can
    be shared freely.  ``basis`` is sorted lexicographically; ``index``
    maps each basis weight to its position.
    """

    __slots__ = ("rs", "fusion_level", "twist_level", "basis", "index",
                 "_pair_cache", "_smatrix")

    def __init__(self, rs: RootSystem, fusion_level: int):
        if fusion_level < 0:
            raise InvalidLevel(f"fusion level must be >= 0, got {fusion_level}")
        self.rs = rs
        self.fusion_level = fusion_level
        self.twist_level = fusion_level + rs.dual_coxeter
        self.basis: tuple[Weight, ...] = tuple(level_weights(rs, fusion_level))
        self.index: dict[Weight, int] = {w: i for i, w in enumerate(self.basis)}
        self._pair_cache: dict = {}
        self._smatrix = None

    @property
    def key(self) -> tuple[str, int, int]:
        """Value identity of the ring: type plus fusion level."""
        return (self.rs.series, self.rs.rank, self.fusion_level)

    def __repr__(self) -> str:
        return f"FusionContext({self.rs.name}, level={self.fusion_level})"

    def require_basis(self, mu: Sequence[int]) -> Weight:
        """Validate that ``mu`` indexes a basis element and return it as a
        tuple."""
        w = tuple(int(x) for x in mu)
        if len(w) != self.rs.rank:
            raise NotDominant(f"expected {self.rs.rank} labels, got {len(w)}")
        if not is_dominant(w):
            raise NotDominant(f"weight {w} has a negative label")
        if level(self.rs, w) > self.fusion_level:
            raise LevelOverflow(
                f"weight {w} has level {level(self.rs, w)} > {self.fusion_level}")
        return w


_CONTEXT_CACHE: dict[tuple[str, int, int], FusionContext] = {}


def fusion_context(rs: RootSystem, fusion_level: int) -> FusionContext:
    """Shared FusionContext for (rs, level); repeated calls return the same
    instance so product caches accumulate."""
    key = (rs.series, rs.rank, fusion_level)
    ctx = _CONTEXT_CACHE.get(key)
    if ctx is None:
        ctx = _CONTEXT_CACHE.setdefault(key, FusionContext(rs, fusion_level))
    return ctx


def affine_reduce(ctx: FusionContext, x: Sequence[int]) -> tuple[Weight | None, int]:
    """Fold ``x`` into the level-``l`` alcove under the rho-shifted affine
    Weyl group at shifted level ``k``.

    Alternates finite dominant reduction with the reflection in the affine
    wall ``{level = k}`` until ``x + rho`` lies in the closed scaled alcove.
    Each reflection flips the sign.  A final position on any wall (a zero
    label, or level exactly k) means the orbit carries no alcove
    representative: the result is ``(None, 0)``.
    """
    rs = ctx.rs
    cartan = rs.cartan
    marks = rs.theta_covector_marks
    theta = rs.theta
    k = ctx.twist_level
    y = [int(v) + 1 for v in x]
    sign = 1
    for _ in range(_MAX_REDUCE_STEPS):
        i = next((j for j, yj in enumerate(y) if yj < 0), None)
        if i is not None:
            _reflect(cartan, i, y)
            sign = -sign
            continue
        lv = sum(a * yj for a, yj in zip(marks, y))
        if lv > k:
            # reflection in the affine wall: y -> y - (level(y) - k) * theta
            exc = lv - k
            for j in range(rs.rank):
                y[j] -= exc * theta[j]
            sign = -sign
            continue
        break
    else:
        raise RuntimeError("affine reduction did not terminate")
    if any(yj == 0 for yj in y) or sum(a * yj for a, yj in zip(marks, y)) == k:
        return None, 0
    return tuple(yj - 1 for yj in y), sign


@dataclass(frozen=True)
class AlcovePosition:
    """Position of a basis weight inside the closed fundamental alcove.

    ``barycentric`` holds the scaled labels ``mu_i / l`` followed by the
    affine coordinate ``1 - level(mu)/l``; ``walls`` is the set of closed
    alcove walls through the point, 0 denoting the affine wall.  The
    stabilizer class is ``"T"`` for interior points, ``"K"`` for the
    origin vertex, and ``"K_{...}"`` listing the walls otherwise.
    """

    barycentric: tuple[Fraction, ...]
    walls: frozenset[int]
    stabilizer: str


def alcove_position(ctx: FusionContext, mu: Sequence[int]) -> AlcovePosition:
    """Alcove data of the conjugacy class attached to a basis weight."""
    ell = ctx.fusion_level
    if ell == 0:
        raise LevelZero("alcove positions need a positive fusion level")
    w = ctx.require_basis(mu)
    lv = level(ctx.rs, w)
    bary = tuple(Fraction(c, ell) for c in w) + (Fraction(ell - lv, ell),)
    walls = frozenset(i + 1 for i, c in enumerate(w) if c == 0) | (
        frozenset([0]) if lv == ell else frozenset())
    if not walls:
        stab = "T"
    elif all(c == 0 for c in w):
        stab = "K"
    else:
        stab = "K_{" + ",".join(str(i) for i in sorted(walls)) + "}"
    return AlcovePosition(barycentric=bary, walls=walls, stabilizer=stab)
