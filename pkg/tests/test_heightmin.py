import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from hwbound.heightmin import (
    EnumerationCapExceeded,
    InjectionCertificate,
    certificate_problems,
    composite_slope,
    find_injection,
    lemma33_holds,
    min_dim_at_height,
    termwise_dominates,
    verify_lemma2_numeric,
    verify_theorem1,
)
from hwbound.matching import hall_violator, max_matching
from hwbound.rootsys import LieType, all_types, build, unit

T = LieType.parse


def test_min_dim_examples():
    m = min_dim_at_height(build(T("D4")), 1)
    assert m.min_dim == 8 and m.minimizing_weights == {(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)}
    m = min_dim_at_height(build(T("F4")), 1)
    assert m.min_dim == 26 and m.minimizing_weights == {(0, 0, 0, 1)}
    m = min_dim_at_height(build(T("A3")), 2)
    assert m.min_dim == 10 and m.minimizing_weights == {(2, 0, 0), (0, 0, 2)}
    with pytest.raises(ValueError):
        min_dim_at_height(build(T("A3")), 0)


def test_height_minimum_examples():
    r = verify_theorem1(build(T("A2")), 3)
    # 4 weights of height exactly 3; 10 counts heights 0..3
    assert r.enumerated == 4 and r.observed_min == 10 and r.passed
    assert sum(verify_theorem1(build(T("A2")), h).enumerated for h in (1, 2, 3)) + 1 == 10
    assert r.observed_minimizers == {(3, 0), (0, 3)}
    r = verify_theorem1(build(T("G2")), 2)
    assert r.enumerated == 3 and r.observed_min == 27 and r.passed and r.lemma1_holds


def test_enumeration_cap():
    with pytest.raises(EnumerationCapExceeded) as exc:
        verify_theorem1(build(T("E8")), 3, cap=100)
    assert exc.value.needed == 120


@pytest.mark.parametrize("t", all_types(5), ids=str)
def test_height_minimum_brute_force(t):
    rs = build(t)
    for h in (1, 2, 3):
        r = verify_theorem1(rs, h)
        assert r.passed and r.lemma1_holds


# --- injections --------------------------------------------------------------

CLASSICAL = [t for t in all_types(8, exceptional=False)]


@pytest.mark.parametrize("t", CLASSICAL + [T(x) for x in ("E6", "E7", "E8", "F4", "G2")], ids=str)
def test_find_injection_everywhere(t):
    rs = build(t)
    for j in range(1, t.rank + 1):
        cert = find_injection(rs, j)
        assert certificate_problems(rs, cert) == []
        expect_fallback = t.family == "B" and j == t.rank
        assert cert.full != expect_fallback, (t, j)


def test_b5_fallback_roots():
    rs = build(T("B5"))
    cert = find_injection(rs, 5)
    fb = cert.fallback
    e1, e5 = unit(5, 1), unit(5, 5)
    assert tuple(rs.positive_roots[fb.source]) == tuple(e1)
    targets = {tuple(rs.positive_roots[k]) for k in fb.targets}
    assert targets == {tuple(e1), tuple(a + b for a, b in zip(e1, e5))}
    assert fb.slope >= 0


def test_a_type_is_rho_preserving():
    for n in range(2, 8):
        rs = build(T(f"A{n}"))
        for j in range(1, n + 1):
            cert = find_injection(rs, j)
            for a, b in cert.root_pairs(rs):
                assert rs.pair(rs.rho, a) == rs.pair(rs.rho, b)


def test_certificate_json_round_trip():
    for name, j in (("E7", 3), ("B4", 4), ("C3", 2)):
        rs = build(T(name))
        cert = find_injection(rs, j)
        back = InjectionCertificate.from_json(cert.to_json())
        assert back == cert
        assert back.to_json() == cert.to_json()


def test_tampered_certificate_is_rejected():
    rs = build(T("D5"))
    cert = find_injection(rs, 2)
    (a, b), *rest = cert.mapping
    bad = InjectionCertificate(cert.lie_type, cert.s, cert.j, tuple([(a, rest[0][1])] + rest))
    assert certificate_problems(rs, bad)


@pytest.mark.parametrize("t", [T(x) for x in ("A6", "C5", "D6", "E6", "F4")], ids=str)
def test_certificates_imply_termwise_domination(t):
    rs = build(t)
    for j in range(1, t.rank + 1):
        cert = find_injection(rs, j)
        assert all(termwise_dominates(rs, cert, h) for h in range(0, 30, 3))


def test_numeric_comparison_examples():
    assert verify_lemma2_numeric(build(T("C4")), 2, 10).passed
    r = verify_lemma2_numeric(build(T("E6")), 4, 5)
    assert r.passed and r.strict
    r = verify_lemma2_numeric(build(T("B4")), 1, 6)
    assert r.passed and all(a == b for _, a, b in r.comparisons)


@settings(max_examples=300)
@given(st.integers(3, 20), st.integers(0, 100))
def test_composite_inequality(n, t):
    assert lemma33_holds(n, t)


@given(st.integers(1, 30), st.integers(0, 10), st.integers(1, 30), st.integers(0, 10),
       st.integers(1, 30), st.integers(0, 10), st.integers(0, 50))
def test_composite_slope_decides_inequality(p, q, p1, q1, p2, q2, t):
    from fractions import Fraction
    if composite_slope(p, q, p1, q1, p2, q2) >= 0:
        assert Fraction(p + q * t, p) <= Fraction(p1 + q1 * t, p1) * Fraction(p2 + q2 * t, p2)


# --- matching oracle ---------------------------------------------------------

graphs = st.integers(1, 7).flatmap(lambda nl: st.integers(1, 7).flatmap(
    lambda nr: st.tuples(st.just(nr), st.lists(st.lists(st.integers(0, nr - 1), unique=True, max_size=nr),
                                                min_size=nl, max_size=nl))))


@settings(max_examples=300)
@given(graphs)
def test_matching_size_agrees_with_networkx(g):
    nr, adj = g
    match = max_matching(adj, nr)
    used = [v for v in match if v is not None]
    assert len(used) == len(set(used))
    assert all(v in adj[u] for u, v in enumerate(match) if v is not None)
    G = nx.Graph()
    left = [("L", u) for u in range(len(adj))]
    G.add_nodes_from(left)
    G.add_nodes_from(("R", v) for v in range(nr))
    G.add_edges_from((("L", u), ("R", v)) for u, vs in enumerate(adj) for v in vs)
    size = len(nx.bipartite.hopcroft_karp_matching(G, top_nodes=left)) // 2
    assert len(used) == size
    X, N = hall_violator(adj, match)
    if size < len(adj):
        assert len(N) < len(X)
        assert N == {v for u in X for v in adj[u]}
    else:
        assert X == set() and N == set()
