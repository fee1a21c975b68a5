"""Series layer tests: algebra to truncation, substitution, serialization.

The multiplication oracle is an untruncated dict convolution written from
scratch; random series are small enough that the full product is cheap.
"""

from __future__ import annotations

import random

import pytest

from eisentheta.eisenstein import ZERO, EisInt, UnitPower
from eisentheta.builders import build_a, build_b, build_c
from eisentheta.series import (
    SUB_DOUBLE,
    SUB_IDENTITY,
    SUB_INV_Z,
    SUB_W_ZINV3,
    Monomial,
    SubstitutionError,
    SubstitutionSpec,
    TriSeries,
    TruncationError,
)


def random_series(rnd: random.Random, order3: int = 9, terms: int = 8) -> TriSeries:
    data = {}
    for _ in range(terms):
        m = Monomial(rnd.randint(0, order3), rnd.randint(-6, 6), rnd.randint(-6, 6))
        data[m] = EisInt(rnd.randint(-3, 3), rnd.randint(-3, 3))
    return TriSeries(order3, data)


def brute_convolution(s: TriSeries, t: TriSeries) -> dict[Monomial, EisInt]:
    """Full product of the stored terms, no truncation anywhere."""
    out: dict[Monomial, EisInt] = {}
    for m1, c1 in s.terms.items():
        for m2, c2 in t.terms.items():
            key = Monomial(m1.q3 + m2.q3, m1.z3 + m2.z3, m1.w3 + m2.w3)
            out[key] = out.get(key, ZERO) + c1 * c2
    return {m: c for m, c in out.items() if not c.is_zero()}


def test_add_sub_basics():
    rnd = random.Random(1)
    s = random_series(rnd)
    zero = TriSeries.zero(s.order3)
    assert s + zero == s
    assert (s - s) == zero
    assert -s + s == zero


def test_add_example_from_builders():
    lhs = build_a(1).specialize(z=True, w=True)
    rhs = build_b(1, 1).specialize(z=True, w=True)
    total = lhs + rhs
    assert total.coeff(Monomial(0, 0, 0)) == EisInt(2, 0)
    assert total.coeff(Monomial(3, 0, 0)) == EisInt(3, 0)


def test_scale_unit():
    s = TriSeries.constant(1, 6)
    assert s.scale(UnitPower(0)) == s
    assert s.scale(UnitPower(1)).coeff(Monomial(0, 0, 0)) == EisInt(0, 1)
    t = TriSeries.constant(EisInt(1, 1), 6)
    assert t.scale(UnitPower(1)).coeff(Monomial(0, 0, 0)) == EisInt(-1, 0)


def test_mul_identity_and_thirds_exponents():
    rnd = random.Random(2)
    s = random_series(rnd)
    one = TriSeries.constant(1, s.order3)
    assert s * one == s

    third = TriSeries(4, {Monomial(1, 3, 0): EisInt(1, 0)})  # q^(1/3) * z
    sq = third * third
    assert sq.terms == {Monomial(2, 6, 0): EisInt(1, 0)}


def test_cube_constant_term():
    a = build_a(2)
    cube = a * a * a
    assert cube.coeff(Monomial(0, 0, 0)) == EisInt(1, 0)


def test_truncation_soundness_against_brute_force():
    rnd = random.Random(3)
    for _ in range(40):
        s = random_series(rnd, order3=7, terms=6)
        t = random_series(rnd, order3=7, terms=6)
        product = s * t
        full = brute_convolution(s, t)
        for m, c in full.items():
            if m.q3 <= product.order3:
                assert product.coeff(m) == c
        for m in product.terms:
            assert product.coeff(m) == full.get(m, ZERO)


def test_ring_axioms_to_truncation():
    rnd = random.Random(4)
    for _ in range(25):
        s = random_series(rnd)
        t = random_series(rnd)
        u = random_series(rnd)
        assert s + t == t + s
        assert (s + t) + u == s + (t + u)
        assert s * t == t * s
        assert (s * t) * u == s * (t * u)
        assert s * (t + u) == s * t + s * u


def test_substitution_monomial_maps():
    s = TriSeries(6, {Monomial(3, 6, 0): EisInt(1, 0)})
    assert s.substitute(SUB_IDENTITY) == s

    swapped = s.substitute(SUB_W_ZINV3)  # x(q, w, z**-3)
    assert swapped.terms == {Monomial(3, 0, 6): EisInt(1, 0)}
    assert swapped.order3 == 6

    t = TriSeries(3, {Monomial(1, 0, -2): EisInt(1, 0)})
    doubled = t.substitute(SUB_DOUBLE)
    assert doubled.terms == {Monomial(2, 0, -4): EisInt(1, 0)}
    assert doubled.order3 == 6


def test_substitution_rejects_bad_specs():
    with pytest.raises(SubstitutionError):
        SubstitutionSpec(q_pow=0)
    with pytest.raises(SubstitutionError):
        SubstitutionSpec(q_pow=-1)
    # a thirds-exponent image applied off the grid is rejected, not rounded
    frac = SubstitutionSpec(1, (1, 0), (0, 3))
    with pytest.raises(SubstitutionError):
        TriSeries(3, {Monomial(0, 1, 0): EisInt(1, 0)}).substitute(frac)


def test_substitution_functoriality():
    rnd = random.Random(5)
    for sub in (SUB_DOUBLE, SUB_W_ZINV3, SUB_INV_Z):
        for _ in range(10):
            s = random_series(rnd, order3=6, terms=5)
            t = random_series(rnd, order3=6, terms=5)
            assert (s * t).substitute(sub) == s.substitute(sub) * t.substitute(sub)


def test_specialize():
    rnd = random.Random(6)
    s = random_series(rnd)
    assert s.specialize() == s
    collapsed = s.specialize(z=True, w=True)
    assert all(m.z3 == 0 and m.w3 == 0 for m in collapsed.terms)

    a = build_a(1).specialize(z=True, w=True)
    assert a.terms == {Monomial(0, 0, 0): EisInt(1, 0), Monomial(3, 0, 0): EisInt(6, 0)}
    b = build_b(1, 1).specialize(z=True, w=True)
    assert b.terms == {Monomial(0, 0, 0): EisInt(1, 0), Monomial(3, 0, 0): EisInt(-3, 0)}


def test_equal_to_order_and_first_difference():
    a = build_a(6)
    assert a.difference_to_order(a, 6) is None
    assert a.equal_to_order(a.substitute(SUB_INV_Z), 6)

    # a vs the twisted series: the first differing monomial among the six
    # norm-1 units is the lexicographically least, q*z^-2 from alpha = -1,
    # where chi(-1) = w^2
    b = build_b(1, 1)
    diff = build_a(1).difference_to_order(b, 1)
    assert diff is not None
    assert diff.monomial == Monomial(3, -6, 0)
    assert diff.left == EisInt(1, 0)
    assert diff.right == EisInt(-1, -1)


def test_equal_to_order_contract():
    a = build_a(2)
    b = build_a(4)
    with pytest.raises(TruncationError):
        a.difference_to_order(b, 3)
    with pytest.raises(TruncationError):
        b.difference_to_order(a, 3)
    assert a.difference_to_order(b, 2) is None


def test_serialization_round_trip_and_format():
    empty = TriSeries.zero(9)
    assert empty.to_dict() == {"order3": 9, "terms": []}
    assert TriSeries.from_json(empty.to_json()) == empty

    one = TriSeries.constant(1, 0)
    assert one.to_dict() == {
        "order3": 0,
        "terms": [{"q3": 0, "z3": 0, "w3": 0, "re": 1, "om": 0}],
    }

    c1 = build_c(1, 1)
    assert c1.to_dict() == {
        "order3": 3,
        "terms": [
            {"q3": 1, "z3": -3, "w3": 1, "re": 1, "om": 0},
            {"q3": 1, "z3": 0, "w3": -2, "re": 1, "om": 0},
            {"q3": 1, "z3": 3, "w3": 1, "re": 1, "om": 0},
        ],
    }

    rnd = random.Random(7)
    for _ in range(20):
        s = random_series(rnd)
        assert TriSeries.from_json(s.to_json()) == s


def test_csv_rows_sorted():
    rows = list(build_c(1, 1).to_csv_rows())
    assert rows[0] == "q3,z3,w3,re,om"
    assert rows[1:] == ["1,-3,1,1,0", "1,0,-2,1,0", "1,3,1,1,0"]


def test_zero_coefficients_always_purged():
    s = TriSeries(3, {Monomial(0, 0, 0): ZERO, Monomial(3, 0, 0): EisInt(2, 0)})
    assert len(s) == 1
    t = s - s
    assert len(t) == 0 and t == TriSeries.zero(3)


def test_terms_above_order_are_dropped():
    s = TriSeries(3, {Monomial(6, 0, 0): EisInt(1, 0), Monomial(3, 0, 0): EisInt(1, 0)})
    assert set(s.terms) == {Monomial(3, 0, 0)}
    with pytest.raises(ValueError):
        TriSeries(3, {Monomial(-1, 0, 0): EisInt(1, 0)})
