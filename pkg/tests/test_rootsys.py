import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hwbound.rootsys import (
    InvalidLieType,
    LieType,
    all_types,
    build,
    canonical_weight,
    check_weight,
    count_weights_of_height,
    diagram_automorphism_orbits,
    dominant_weights_of_height,
    fundamental,
    nilradical_indices,
    weight_orbit,
)

TYPES = all_types(8)
N_POSITIVE = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n,
              "D": lambda n: n * (n - 1)}
EXCEPTIONAL_POSITIVE = {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_positive_root_count(t):
    rs = build(t)
    want = EXCEPTIONAL_POSITIVE.get(str(t)) or N_POSITIVE[t.family](t.rank)
    assert len(rs.positive_roots) == want


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_fundamental_weights_dual_to_coroots(t):
    rs = build(t)
    for i, lam in enumerate(rs.fundamental_weights):
        for j, a in enumerate(rs.simple_roots):
            assert rs.pair(lam, a) == (1 if i == j else 0)


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_rho_pairs_to_root_height(t):
    # <rho, alpha^vee> is the height of the coroot; (rho, alpha) scales with the root length
    rs = build(t)
    for k, alpha in enumerate(rs.positive_roots):
        assert rs.pair(rs.rho, alpha) == sum(rs.coroot_coeffs[k])
        if t.simply_laced:
            assert rs.pair(rs.rho, alpha) == rs.root_height(k)


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_form_is_integral_with_gcd_one(t):
    rs = build(t)
    vals = {rs.inner(a, b) for a in rs.positive_roots for b in rs.positive_roots}
    assert all(v.denominator == 1 for v in vals)
    g = math.gcd(*(int(v) for v in vals))
    # A1 and C2 keep the scale of their family (see decisions ledger)
    assert g == (2 if str(t) in ("A1", "C2") else 1)


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_pairings_with_weights_are_integral(t):
    rs = build(t)
    for lam in rs.fundamental_weights:
        for alpha in rs.positive_roots:
            p = rs.inner(lam, [2 * x for x in alpha])
            assert p.denominator == 1
            if t.family != "B" and str(t) != "A1":
                assert rs.inner(lam, alpha).denominator == 1


def test_highest_root_values():
    rs = build(LieType("B", 3))
    assert rs.inner(rs.rho, rs.highest_root) == 4
    rs = build(LieType("E", 8))
    assert rs.inner(rs.rho, rs.highest_root) == 29
    rs = build(LieType("G", 2))
    assert rs.inner(rs.rho, rs.highest_root) == 9


@pytest.mark.parametrize("spec", ["A0", "B1", "C1", "D3", "E5", "E9", "F5", "G3", "X2", "", "B"])
def test_invalid_types_rejected(spec):
    with pytest.raises(InvalidLieType):
        LieType.parse(spec)


def test_parse_round_trip():
    for t in TYPES:
        assert LieType.parse(str(t)) == t


def test_check_weight_rejects_bad_input():
    rs = build(LieType("A", 2))
    with pytest.raises(ValueError):
        check_weight(rs, (1, -1))
    with pytest.raises(ValueError):
        check_weight(rs, (1, 0, 0))


def test_nilradical_sizes():
    rs = build(LieType("A", 4))
    assert [len(nilradical_indices(rs, j)) for j in range(1, 5)] == [4, 6, 6, 4]
    with pytest.raises(IndexError):
        nilradical_indices(rs, 5)
    rs = build(LieType("E", 8))
    assert len(nilradical_indices(rs, 8)) == 57


def test_diagram_orbits():
    assert sorted(map(sorted, diagram_automorphism_orbits(LieType("D", 4)))) == [[1, 3, 4], [2]]
    assert sorted(map(sorted, diagram_automorphism_orbits(LieType("E", 6)))) == [[1, 6], [2], [3, 5], [4]]
    assert len(diagram_automorphism_orbits(LieType("B", 5))) == 5


def test_weight_orbit_and_canonical_form():
    t = LieType("D", 4)
    assert weight_orbit(t, (1, 0, 0, 0)) == {(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)}
    assert canonical_weight(t, (0, 0, 0, 1)) == (1, 0, 0, 0)


@given(st.integers(1, 6), st.integers(0, 5))
def test_simplex_enumeration_matches_binomial(n, t):
    ws = list(dominant_weights_of_height(n, t))
    assert len(ws) == len(set(ws)) == count_weights_of_height(n, t)
    assert all(sum(w) == t and len(w) == n for w in ws)


def test_fundamental_helper():
    assert fundamental(4, 2, 3) == (0, 3, 0, 0)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_rescaling_leaves_pairings_invariant(t, data):
    rs = build(t)
    c = data.draw(st.fractions(min_value=Fraction(1, 7), max_value=7).filter(bool))
    k = data.draw(st.integers(0, len(rs.positive_roots) - 1))
    lam = rs.weight(data.draw(st.lists(st.integers(0, 4), min_size=t.rank, max_size=t.rank)))
    alpha = rs.positive_roots[k]
    assert rs.pair([c * x for x in lam], [c * x for x in alpha]) == rs.pair(lam, alpha)
