import pytest

from hwbound.classify import classify_bounded, pq_catalogue
from hwbound.dims import weyl_dim
from hwbound.duality import duality_indicator
from hwbound.rootsys import LieType, build, canonical_weight
from hwbound.tables import (
    TABLE1_MISSING,
    TABLE1_NOT_BOUNDED,
    TABLE6_PRINTED,
    describe_pq_match,
    hand_built_problems,
    smallest_instance,
    table1_expected,
    table1_types,
)

T = LieType.parse


def _computed(t):
    return {canonical_weight(t, m.weight): m.dim for m in classify_bounded(t).nonzero}


@pytest.mark.parametrize("t", table1_types(3, 12), ids=str)
def test_table1_with_errata_matches_computation(t):
    assert table1_expected(t, corrected=True) == _computed(t)


def test_table1_printed_differences_are_exactly_the_errata():
    diff = {}
    for t in table1_types(3, 12):
        printed, got = table1_expected(t), _computed(t)
        if printed != got:
            diff[str(t)] = ({w: d for w, d in printed.items() if got.get(w) != d},
                            {w: d for w, d in got.items() if printed.get(w) != d})
    assert set(diff) == {"A3", "B3", "B8", "B9", "C3", "C5"} | {f"D{n}" for n in range(4, 13)}
    assert diff["A3"] == ({(0, 2, 0): 45}, {(0, 2, 0): 20, **TABLE1_MISSING["A3"]})
    assert set(diff["B3"][0]) == set(TABLE1_NOT_BOUNDED["B3"]) and diff["B3"][1] == {}
    assert diff["B8"] == ({(0,) * 7 + (1,): 256}, {})
    assert diff["C3"] == ({}, TABLE1_MISSING["C3"])
    assert diff["C5"] == ({}, TABLE1_MISSING["C5"])
    for n in range(4, 13):
        w = (2,) + (0,) * (n - 1)
        assert diff[f"D{n}"] == ({w: (2 * n - 1) * (n - 1)}, {w: (2 * n - 1) * (n + 1)})


def test_c_lambda3_reading():
    for n in range(3, 13):
        t = T(f"C{n}")
        assert table1_expected(t, corrected=True, c_l3="qualified") == _computed(t)
    t = T("C6")
    assert table1_expected(t, corrected=True, c_l3="unqualified") != _computed(t)


# --- hand-built b' sequences -----------------------------------------------------

@pytest.mark.parametrize("t", [LieType(f, n) for f in "ABCD" for n in range(4 if f == "D" else 3, 11)], ids=str)
def test_corrected_sequences_are_certificates(t):
    n = t.rank
    for j in range(1, n + 1):
        assert hand_built_problems(t, j, "corrected") == [], (t, j)


@pytest.mark.parametrize("family", "ABCD")
def test_printed_sequences_defects(family):
    n = 5
    t = LieType(family, n)
    status = {j: hand_built_problems(t, j, "printed") for j in range(1, n + 1)}
    assert status[1] == []
    for j in range(2, n):
        assert any("is not in R_" in p for p in status[j]), (t, j)
    last = status[n]
    if family == "B":
        assert last == []
    elif family == "C":
        assert last == [f"b_{2 * n - 1} has no image"]
    elif family == "D":
        assert "targets are not distinct" in last
    else:
        assert any("is not in R_" in p for p in last)


# --- Table 6 -----------------------------------------------------------------------

def test_d10_symmetric_square_is_unmatched():
    t = T("D10")
    w = (2,) + (0,) * 9
    d = weyl_dim(build(t), w)
    assert d == 209 == 11 * 19
    assert describe_pq_match(t, w, d) == "UNMATCHED"
    assert [m.weight for m in pq_catalogue(t, 10 ** 4) if m.tag == "UNMATCHED"] == [w]


def test_d_row_dimension_formula_is_off():
    row = next(r for r in TABLE6_PRINTED if r.label == "D_{a+1} 2l1")
    p, t, w = smallest_instance(row)
    assert (p, str(t)) == (3, "D4")
    assert row.dim(p) == 21 and weyl_dim(build(t), w) == 35
    for a in range(3, 12):
        assert weyl_dim(build(T(f"D{a + 1}")), (2,) + (0,) * a) == (2 * a + 1) * (a + 2)


def test_a_natural_row_sign():
    row = next(r for r in TABLE6_PRINTED if r.label == "A_{pq-1} l1")
    assert row.sign == "-"
    for d in (4, 6, 9, 10):
        t, w = row.instantiate(d)
        assert duality_indicator(t, w).sign == "o"


def test_a2_dimension_six_is_ambiguous():
    assert describe_pq_match(T("A2"), (2, 0), 6).endswith("AMBIGUOUS")


def test_every_other_row_is_hit_at_its_smallest_parameter():
    broken = set()
    for row in TABLE6_PRINTED:
        found = smallest_instance(row)
        assert found is not None, row.label
        p, t, w = found
        d = weyl_dim(build(t), w)
        hits = {canonical_weight(t, m.weight) for m in pq_catalogue(t, max(d, 2))}
        if d != row.dim(p) or canonical_weight(t, w) not in hits:
            broken.add(row.label)
    assert broken == {"D_{a+1} 2l1"}
