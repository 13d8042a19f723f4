"""Root systems of the classical and exceptional series in Dynkin-label
coordinates.

Weights are plain tuples of integers holding Dynkin labels, i.e. the
coordinates in the basis of fundamental weights.  Row ``i`` of the Cartan
matrix is then the label vector of the simple root ``alpha_i``, and the
simple reflection ``s_i`` acts by ``s_i(x)_j = x_j - x_i * cartan[i][j]``.

All arithmetic is exact: the quadratic form of the basic inner product
(long roots of square length 2) is a matrix of fractions, and every
reduction to the dominant chamber is integer label pushing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidType

Weight = tuple[int, ...]
RationalVector = tuple[Fraction, ...]

# admissible ranks per series letter
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_MAX_REDUCE_STEPS = 1_000_000


def _chain_edges(rank: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(rank - 1)]


def _cartan_matrix(series: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with rows ``cartan[i][j] = <alpha_i, alpha_j^vee>``."""
    a = [[2 * (i == j) for j in range(rank)] for i in range(rank)]
    if series in ("A", "B", "C"):
        edges = _chain_edges(rank)
    elif series == "D":
        edges = _chain_edges(rank - 1) + [(rank - 3, rank - 1)]
    elif series == "E":
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if rank >= 7:
            edges.append((5, 6))
        if rank == 8:
            edges.append((6, 7))
    elif series == "F":
        edges = _chain_edges(rank)
    else:  # G
        edges = [(0, 1)]
    for i, j in edges:
        a[i][j] = a[j][i] = -1
    # multiple bonds; the -2/-3 entry sits in the row of the longer root
    if series == "B":
        a[rank - 2][rank - 1] = -2
    elif series == "C":
        a[rank - 1][rank - 2] = -2
    elif series == "F":
        a[1][2] = -2
    elif series == "G":
        a[0][1] = -3
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Diagonal ``d_i = (alpha_i, alpha_i)/2`` normalised to 1 on long roots.

    Determined by the symmetry requirement ``cartan[i][j] * d_j ==
    cartan[j][i] * d_i``, propagated over the Dynkin graph.
    """
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                todo.append(j)
    assert all(x is not None for x in d), "Dynkin graph must be connected"
    top = max(d)  # type: ignore[type-var]
    return tuple(x / top for x in d)  # type: ignore[operator]


def _invert_rational(mat: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination."""
    n = len(mat)
    work = [[Fraction(x) for x in row] + [Fraction(i == j) for j in range(n)]
            for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if work[r][col] != 0)
        work[col], work[pivot] = work[pivot], work[col]
        pv = work[col][col]
        work[col] = [x / pv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def _positive_roots_alpha(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, built height by height.

    A root beta extends to beta + alpha_i exactly when the alpha_i-string
    through beta reaches further up, i.e. when p - <beta, alpha_i^vee> >= 1
    with p the number of steps the string extends downwards.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    by_height: dict[int, set[tuple[int, ...]]] = {1: set(simple)}
    known = set(simple)
    h = 1
    while by_height.get(h):
        for beta in by_height[h]:
            labels = [sum(beta[i] * cartan[i][j] for i in range(n)) for j in range(n)]
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                if p - labels[i] >= 1:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in known:
                        known.add(cand)
                        by_height.setdefault(h + 1, set()).add(cand)
        h += 1
    # simple roots first in index order, then by height, lexicographic within
    out: list[tuple[int, ...]] = list(simple)
    for height in sorted(by_height):
        if height > 1:
            out.extend(sorted(by_height[height]))
    return out


@dataclass(frozen=True, repr=False)
class RootSystem:
    """Immutable root datum of a simple compact Lie group.

    Attributes
    ----------
    series, rank : identification of the type, e.g. ``("A", 2)``.
    cartan : Cartan matrix; row ``i`` holds the Dynkin labels of ``alpha_i``.
    quad_form : matrix of the basic inner product on weight labels,
        ``quad_form = cartan^{-1} . diag(d)`` with long roots of length
        squared 2.  Symmetric and positive definite.
    simple_roots : label vectors of the simple roots (the Cartan rows).
    positive_roots : label vectors of all positive roots, by height.
    rho : half sum of positive roots, always ``(1, ..., 1)``.
    theta : highest root in labels.
    theta_covector_marks : dual marks ``a^vee_i``; pairing a weight with
        the coroot of theta is ``sum(a^vee_i * x_i)``.
    dual_coxeter : dual Coxeter number ``1 + sum(theta_covector_marks)``.
    """

    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    quad_form: tuple[tuple[Fraction, ...], ...]
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    rho: Weight
    theta: Weight
    theta_covector_marks: tuple[int, ...]
    dual_coxeter: int
    _weight_system_cache: dict = field(default_factory=dict, compare=False)
    _dimension_cache: dict = field(default_factory=dict, compare=False)

    def __repr__(self) -> str:
        return f"RootSystem({self.series}{self.rank})"

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"


def build_root_system(series: str, rank: int) -> RootSystem:
    """Construct the root system of the given series letter and rank.

    Parameters
    ----------
    series : one of ``"A".."G"`` (case insensitive).
    rank : positive integer within the admissible range of the series.

    Raises
    ------
    InvalidType
        If the series letter is unknown or the rank is out of range.
    """
    series = str(series).upper()
    if series not in _RANK_RANGE:
        raise InvalidType(f"unknown series {series!r}")
    lo, hi = _RANK_RANGE[series]
    if not isinstance(rank, int) or rank < lo or (hi is not None and rank > hi):
        raise InvalidType(f"rank {rank} out of range for series {series}")

    cartan = _cartan_matrix(series, rank)
    d = _symmetrizer(cartan)
    inv = _invert_rational([[Fraction(x) for x in row] for row in cartan])
    quad = tuple(tuple(inv[i][j] * d[j] for j in range(rank)) for i in range(rank))
    assert all(quad[i][j] == quad[j][i] for i in range(rank) for j in range(rank))

    alpha_roots = _positive_roots_alpha(cartan)
    labels = tuple(
        tuple(sum(c[i] * cartan[i][j] for i in range(rank)) for j in range(rank))
        for c in alpha_roots
    )
    heights = [sum(c) for c in alpha_roots]
    top = max(heights)
    assert heights.count(top) == 1, "highest root must be unique"
    marks = alpha_roots[heights.index(top)]
    theta = labels[heights.index(top)]
    covector = []
    for m, di in zip(marks, d):
        dual_mark = m * di
        assert dual_mark.denominator == 1
        covector.append(int(dual_mark))

    return RootSystem(
        series=series,
        rank=rank,
        cartan=cartan,
        quad_form=quad,
        simple_roots=labels[:rank],
        positive_roots=labels,
        rho=(1,) * rank,
        theta=theta,
        theta_covector_marks=tuple(covector),
        dual_coxeter=1 + sum(covector),
    )


def from_type_string(text: str) -> RootSystem:
    """Parse a type string such as ``"A1"`` or ``"g2"`` (case insensitive)."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*([0-9]+)\s*", text or "")
    if not m:
        raise InvalidType(f"cannot parse type string {text!r}")
    return build_root_system(m.group(1).upper(), int(m.group(2)))


def inner_product(rs: RootSystem, x: Sequence, y: Sequence) -> Fraction:
    """Basic inner product of two label vectors, exact."""
    q = rs.quad_form
    n = rs.rank
    if len(x) != n or len(y) != n:
        raise ValueError(f"expected label vectors of length {n}")
    total = Fraction(0)
    for i in range(n):
        if x[i]:
            row = q[i]
            total += x[i] * sum(row[j] * y[j] for j in range(n) if y[j])
    return total


def level(rs: RootSystem, x: Sequence) -> int:
    """Pairing of a weight with the coroot of the highest root."""
    return sum(a * xi for a, xi in zip(rs.theta_covector_marks, x))


def is_dominant(x: Iterable) -> bool:
    return all(xi >= 0 for xi in x)


def _reflect(cartan, i: int, v: list) -> None:
    # in-place simple reflection s_i on label coordinates
    vi = v[i]
    row = cartan[i]
    for j in range(len(v)):
        v[j] -= vi * row[j]


def dominant_reduce(rs: RootSystem, x: Sequence[int]) -> tuple[Weight, int]:
    """Signed reduction of ``x`` to the dominant chamber after a rho shift.

    Returns ``(w(x + rho) - rho, det w)`` for the unique Weyl element
    making ``x + rho`` dominant.  If ``x + rho`` lies on a reflection wall
    the orbit carries no sign and the result is ``(x, 0)`` with the input
    returned unchanged.
    """
    cartan = rs.cartan
    y = [xi + 1 for xi in x]
    sign = 1
    for _ in range(_MAX_REDUCE_STEPS):
        i = next((j for j, yj in enumerate(y) if yj < 0), None)
        if i is None:
            break
        _reflect(cartan, i, y)
        sign = -sign
    else:
        raise RuntimeError("dominant reduction did not terminate")
    if any(yj == 0 for yj in y):
        return tuple(x), 0
    return tuple(yj - 1 for yj in y), sign


def weyl_dominant(rs: RootSystem, x: Sequence[int]) -> Weight:
    """Dominant representative of the plain (unshifted) Weyl orbit."""
    cartan = rs.cartan
    y = list(x)
    for _ in range(_MAX_REDUCE_STEPS):
        i = next((j for j, yj in enumerate(y) if yj < 0), None)
        if i is None:
            return tuple(y)
        _reflect(cartan, i, y)
    raise RuntimeError("dominant reduction did not terminate")


def signed_weyl_orbit(rs: RootSystem, y: Sequence[int]) -> dict[Weight, int]:
    """Full Weyl orbit of a strictly dominant ``y`` with determinant signs.

    The orbit of a regular weight is free, so each element carries the
    sign of the unique group element reaching it.
    """
    if any(yi <= 0 for yi in y):
        raise ValueError("signed orbit needs a strictly dominant weight")
    cartan = rs.cartan
    start = tuple(y)
    seen: dict[Weight, int] = {start: 1}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            s = seen[v]
            for i in range(rs.rank):
                w = list(v)
                _reflect(cartan, i, w)
                tw = tuple(w)
                if tw not in seen:
                    seen[tw] = -s
                    nxt.append(tw)
        frontier = nxt
    return seen


def weights_with_level_bound(rs: RootSystem, bound: int, floor: int = 0) -> list[Weight]:
    """All weights with labels >= floor and level <= bound, sorted
    lexicographically."""
    marks = rs.theta_covector_marks
    out: list[Weight] = []

    def rec(prefix: list[int], used: int, pos: int) -> None:
        if pos == rs.rank:
            out.append(tuple(prefix))
            return
        a = marks[pos]
        top = (bound - used - floor * sum(marks[pos + 1:])) // a
        for v in range(floor, top + 1):
            prefix.append(v)
            rec(prefix, used + a * v, pos + 1)
            prefix.pop()

    if bound >= floor * sum(marks):
        rec([], 0, 0)
    return out
