"""Root datum construction and exact weight arithmetic.

Covers: Cartan/quadratic-form fixtures for A1, A2, C2, G2 (frozen from an
independent inverse-Cartan computation), dual Coxeter numbers and positive
root counts across all series, the signed rho-shifted dominant reduction,
and plain Weyl-orbit reduction.
"""

import random
from fractions import Fraction

import pytest

from verlinde import (
    InvalidType,
    build_root_system,
    dominant_reduce,
    from_type_string,
    inner_product,
    is_dominant,
    level,
    signed_weyl_orbit,
    weyl_dominant,
)

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)
C2 = build_root_system("C", 2)
G2 = build_root_system("G", 2)


def test_build_examples():
    assert A1.dual_coxeter == 2
    assert A1.theta == (2,)
    assert A1.rho == (1,)
    assert A2.dual_coxeter == 3
    assert A2.theta == (1, 1)


@pytest.mark.parametrize("series,rank", [("A", 0), ("Z", 1), ("E", 9), ("E", 5),
                                         ("D", 3), ("F", 3), ("G", 1), ("B", 1)])
def test_build_rejects_bad_types(series, rank):
    with pytest.raises(InvalidType):
        build_root_system(series, rank)


def test_type_string_parsing():
    assert from_type_string("a2").name == "A2"
    assert from_type_string(" G2 ").name == "G2"
    for bad in ("", "A", "2A", "H3", "A-1"):
        with pytest.raises(InvalidType):
            from_type_string(bad)


def test_inner_product_examples():
    assert inner_product(A1, (1,), (1,)) == Fraction(1, 2)
    assert inner_product(A2, (0, 0), (5, -3)) == 0
    assert inner_product(A2, (1, 0), (0, 1)) == Fraction(1, 3)


def test_quad_form_fixtures():
    # frozen from an independent exact inverse-Cartan computation,
    # normalised so long roots have squared length 2
    q = Fraction
    assert A1.quad_form == ((q(1, 2),),)
    assert A2.quad_form == ((q(2, 3), q(1, 3)), (q(1, 3), q(2, 3)))
    assert C2.quad_form == ((q(1, 2), q(1, 2)), (q(1, 2), q(1)))
    assert G2.quad_form == ((q(2), q(1)), (q(1), q(2, 3)))


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "B3", "C2", "C3",
                                  "D4", "E6", "E7", "E8", "F4", "G2"])
def test_cartan_and_form_invariants(name):
    rs = from_type_string(name)
    n = rs.rank
    for i in range(n):
        assert rs.cartan[i][i] == 2
        for j in range(n):
            if i != j:
                assert rs.cartan[i][j] <= 0
            assert rs.quad_form[i][j] == rs.quad_form[j][i]
    # positive definiteness via leading principal minors, exact
    for m in range(1, n + 1):
        assert _det([row[:m] for row in rs.quad_form[:m]]) > 0
    assert rs.simple_roots == rs.cartan
    # every simple root has squared length 2 (long) or less
    lengths = [inner_product(rs, a, a) for a in rs.simple_roots]
    assert max(lengths) == 2
    assert inner_product(rs, rs.theta, rs.theta) == 2


def _det(mat):
    mat = [list(row) for row in mat]
    n = len(mat)
    d = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            d = -d
        d *= mat[col][col]
        inv = 1 / Fraction(mat[col][col])
        for r in range(col + 1, n):
            f = mat[r][col] * inv
            mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    return d


POSITIVE_ROOT_COUNTS = {
    "A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9, "C2": 4, "C3": 9,
    "D4": 12, "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6,
}

DUAL_COXETER = {
    "A1": 2, "A2": 3, "A3": 4, "B2": 3, "B3": 5, "C2": 3, "C3": 4,
    "D4": 6, "E6": 12, "E7": 18, "E8": 30, "F4": 9, "G2": 4,
}


@pytest.mark.parametrize("name", sorted(POSITIVE_ROOT_COUNTS))
def test_root_counts_and_dual_coxeter(name):
    rs = from_type_string(name)
    assert len(rs.positive_roots) == POSITIVE_ROOT_COUNTS[name]
    assert rs.dual_coxeter == DUAL_COXETER[name]
    assert level(rs, rs.rho) == rs.dual_coxeter - 1
    assert sum(rs.theta_covector_marks) == rs.dual_coxeter - 1
    assert level(rs, rs.theta) == 2


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "D4", "E6"])
def test_theta_length_simply_laced(name):
    rs = from_type_string(name)
    assert inner_product(rs, rs.theta, rs.theta) == 2


def test_dominant_reduce_examples():
    assert dominant_reduce(A1, (3,)) == ((3,), 1)
    assert dominant_reduce(A1, (-1,)) == ((-1,), 0)
    assert dominant_reduce(A1, (-3,)) == ((1,), -1)


def test_dominant_reduce_random_properties():
    rng = random.Random(20240817)
    for rs in (A1, A2, C2, G2):
        n = rs.rank
        for _ in range(250):
            x = tuple(rng.randint(-20, 20) for _ in range(n))
            red, sign = dominant_reduce(rs, x)
            if sign == 0:
                assert red == x
            else:
                assert all(c >= 0 for c in red)
                # strictly dominant after the rho shift: no zero labels
                assert all(c + 1 > 0 for c in red)
                assert dominant_reduce(rs, red) == (red, 1)
                # a single finite reflection of x + rho flips the sign
                i = rng.randrange(n)
                y = [v + 1 for v in x]
                yi = y[i]
                refl = tuple(y[j] - yi * rs.cartan[i][j] - 1 for j in range(n))
                if refl != x:
                    assert dominant_reduce(rs, refl) == (red, -sign)


def test_weyl_dominant():
    assert weyl_dominant(A1, (-5,)) == (5,)
    assert weyl_dominant(A2, (1, 1)) == (1, 1)
    assert weyl_dominant(A2, (-1, 1)) == (1, 0)
    rng = random.Random(7)
    for rs in (A2, C2, G2):
        for _ in range(100):
            x = tuple(rng.randint(-9, 9) for _ in range(rs.rank))
            w = weyl_dominant(rs, x)
            assert is_dominant(w)
            assert inner_product(rs, w, w) == inner_product(rs, x, x)


WEYL_GROUP_ORDERS = {"A1": 2, "A2": 6, "C2": 8, "G2": 12, "A3": 24, "B3": 48}


@pytest.mark.parametrize("name", sorted(WEYL_GROUP_ORDERS))
def test_signed_weyl_orbit(name):
    rs = from_type_string(name)
    orbit = signed_weyl_orbit(rs, rs.rho)
    assert len(orbit) == WEYL_GROUP_ORDERS[name]
    assert sum(orbit.values()) == 0  # equally many even and odd elements
    assert orbit[rs.rho] == 1


def test_signed_weyl_orbit_rejects_singular():
    with pytest.raises(ValueError):
        signed_weyl_orbit(A2, (1, 0))
