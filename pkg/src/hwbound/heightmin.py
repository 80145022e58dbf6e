"""Least dimension at a given height, its brute-force check, and injection certificates.

For a node ``j`` let ``R_j`` be the positive roots with nonzero ``alpha_j``
coefficient.  Writing ``p(alpha) = <rho, alpha^vee>`` and
``q_j(alpha) = <lambda_j, alpha^vee>``, the Weyl formula gives

    dim V(t lambda_j) = prod_{alpha in R_j} (p(alpha) + t q_j(alpha)) / p(alpha).

An injection ``phi: R_s -> R_j`` with ``p(alpha) <= p(phi alpha)`` and
``q_s(alpha) <= q_j(phi alpha)`` dominates the numerator of ``f_s`` factor by
factor.  Such maps are found here by bipartite matching.  When one source root
has no admissible partner (``B_n`` with ``j = n``) it is paired with two
targets whose combined factor dominates its own for every ``t >= 0``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from hwbound.dims import ExactPolynomial, min_fundamental, weyl_dim
from hwbound.matching import hall_violator, max_matching
from hwbound.rootsys import (
    LieType,
    RootSystemData,
    build,
    count_weights_of_height,
    dominant_weights_of_height,
    fundamental,
    nilradical_indices,
)

DEFAULT_ENUMERATION_CAP = 2_000_000


class EnumerationCapExceeded(RuntimeError):
    def __init__(self, needed: int, cap: int):
        super().__init__(f"enumeration needs {needed} weights, cap is {cap}")
        self.needed = needed
        self.cap = cap


class NoCertificate(RuntimeError):
    """No injection (plain or composite) exists for this node."""

    def __init__(self, lie_type, j, hall_sources, hall_targets):
        super().__init__(
            f"{lie_type} j={j}: Hall violation, {len(hall_sources)} sources "
            f"see only {len(hall_targets)} targets"
        )
        self.hall_sources = hall_sources
        self.hall_targets = hall_targets


# --- least dimension at a given height -----------------------------------

@dataclass(frozen=True)
class HeightMinimum:
    lie_type: LieType
    t: int
    minimizing_weights: frozenset[tuple[int, ...]]
    min_dim: int


def min_dim_at_height(rs: RootSystemData, t: int) -> HeightMinimum:
    """Least ``dim V(lambda)`` over dominant weights of height ``t``, with its minimizers."""
    if t < 1:
        raise ValueError("height must be >= 1")
    rep = min_fundamental(rs)
    n = rs.rank
    return HeightMinimum(
        lie_type=rs.lie_type,
        t=t,
        minimizing_weights=frozenset(fundamental(n, s, t) for s in rep.orbit),
        min_dim=weyl_dim(rs, fundamental(n, rep.s, t)),
    )


@dataclass(frozen=True)
class Theorem1Report:
    lie_type: LieType
    t: int
    enumerated: int
    observed_min: int
    observed_minimizers: frozenset[tuple[int, ...]]
    expected: HeightMinimum
    support_one_min: int

    @property
    def passed(self) -> bool:
        return (self.observed_min == self.expected.min_dim
                and self.observed_minimizers == self.expected.minimizing_weights)

    @property
    def lemma1_holds(self) -> bool:
        """The simplex minimum is already attained by some ``t lambda_j``."""
        return self.observed_min == self.support_one_min


def verify_theorem1(rs: RootSystemData, t: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Theorem1Report:
    """Brute force over all ``C(n+t-1, t)`` weights of height ``t``."""
    needed = count_weights_of_height(rs.rank, t)
    if needed > cap:
        raise EnumerationCapExceeded(needed, cap)
    best, argbest, count = None, set(), 0
    for w in dominant_weights_of_height(rs.rank, t):
        count += 1
        d = weyl_dim(rs, w)
        if best is None or d < best:
            best, argbest = d, {w}
        elif d == best:
            argbest.add(w)
    support_one = min(weyl_dim(rs, fundamental(rs.rank, j, t)) for j in range(1, rs.rank + 1))
    return Theorem1Report(
        lie_type=rs.lie_type,
        t=t,
        enumerated=count,
        observed_min=best,
        observed_minimizers=frozenset(argbest),
        expected=min_dim_at_height(rs, t),
        support_one_min=support_one,
    )


# --- injection certificates R_s -> R_j -------------------------------------

def composite_slope(p: int, q: int, p1: int, q1: int, p2: int, q2: int) -> int:
    """Coefficient deciding ``(p+qt)/p <= (p1+q1 t)/p1 * (p2+q2 t)/p2`` on ``t >= 0``.

    The difference, scaled by ``p p1 p2``, equals ``c t + p q1 q2 t^2`` with ``c``
    returned here; the inequality holds for all ``t >= 0`` iff ``c >= 0``.
    """
    return p * (p1 * q2 + p2 * q1) - p1 * p2 * q


@dataclass(frozen=True)
class CompositeFallback:
    source: int
    targets: tuple[int, int]
    slope: int
    instance: str


@dataclass(frozen=True)
class InjectionCertificate:
    """A verified map ``R_s -> R_j``; roots are indices into ``rs.positive_roots``."""

    lie_type: LieType
    s: int
    j: int
    mapping: tuple[tuple[int, int], ...]
    fallback: CompositeFallback | None = None
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def full(self) -> bool:
        return self.fallback is None

    def root_pairs(self, rs: RootSystemData | None = None):
        rs = rs or build(self.lie_type)
        return [(rs.positive_roots[a], rs.positive_roots[b]) for a, b in self.mapping]

    def to_json(self) -> str:
        rs = build(self.lie_type)
        coeffs = rs.positive_root_coeffs
        doc = {
            "type": str(self.lie_type),
            "s": self.s,
            "j": self.j,
            "mapping": [[list(coeffs[a]), list(coeffs[b])] for a, b in self.mapping],
            "fallback": None if self.fallback is None else {
                "source": list(coeffs[self.fallback.source]),
                "targets": [list(coeffs[x]) for x in self.fallback.targets],
                "slope": self.fallback.slope,
                "instance": self.fallback.instance,
            },
        }
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "InjectionCertificate":
        doc = json.loads(text)
        t = LieType.parse(doc["type"])
        rs = build(t)
        idx = {c: k for k, c in enumerate(rs.positive_root_coeffs)}
        mapping = tuple((idx[tuple(a)], idx[tuple(b)]) for a, b in doc["mapping"])
        fb = doc["fallback"]
        fallback = None
        if fb is not None:
            fallback = CompositeFallback(
                source=idx[tuple(fb["source"])],
                targets=tuple(idx[tuple(x)] for x in fb["targets"]),
                slope=fb["slope"],
                instance=fb["instance"],
            )
        return cls(t, doc["s"], doc["j"], mapping, fallback)


def _pq(rs: RootSystemData, k: int, node: int) -> tuple[int, int]:
    cc = rs.coroot_coeffs[k]
    return sum(cc), cc[node - 1]


def certificate_problems(rs: RootSystemData, cert: InjectionCertificate) -> list[str]:
    """Everything wrong with a certificate; empty means it is valid."""
    s, j = cert.s, cert.j
    src_set, tgt_set = set(nilradical_indices(rs, s)), set(nilradical_indices(rs, j))
    out = []
    sources = [a for a, _ in cert.mapping]
    targets = [b for _, b in cert.mapping]
    if cert.fallback is not None:
        sources.append(cert.fallback.source)
        targets.extend(cert.fallback.targets)
    if sorted(sources) != sorted(src_set):
        out.append("sources do not cover R_s exactly once")
    if len(set(targets)) != len(targets):
        out.append("targets are not distinct")
    for b in targets:
        if b not in tgt_set:
            out.append(f"target {rs.positive_root_coeffs[b]} is not in R_{j}")
    for a, b in cert.mapping:
        if a not in src_set or b not in tgt_set:
            continue
        pa, qa = _pq(rs, a, s)
        pb, qb = _pq(rs, b, j)
        if pa > pb:
            out.append(f"condition (1) fails: {rs.positive_root_coeffs[a]} -> {rs.positive_root_coeffs[b]}")
        if qa > qb:
            out.append(f"condition (2) fails: {rs.positive_root_coeffs[a]} -> {rs.positive_root_coeffs[b]}")
    fb = cert.fallback
    if fb is not None and all(x in tgt_set for x in fb.targets):
        p, q = _pq(rs, fb.source, s)
        (p1, q1), (p2, q2) = (_pq(rs, x, j) for x in fb.targets)
        slope = composite_slope(p, q, p1, q1, p2, q2)
        if slope < 0 or slope != fb.slope:
            out.append("composite factor inequality fails")
        lhs = ExactPolynomial.linear(1, Fraction(q, p))
        rhs = ExactPolynomial.linear(1, Fraction(q1, p1)) * ExactPolynomial.linear(1, Fraction(q2, p2))
        if not (rhs - lhs).nonnegative_coefficients():
            out.append("composite difference has a negative coefficient")
        if any(rhs(t) < lhs(t) for t in range(0, 2 * rs.rank + 1)):
            out.append("composite inequality fails at a sample point")
    return out


def _above(rs: RootSystemData, hi: int, lo: int) -> bool:
    return all(x >= y for x, y in zip(rs.positive_root_coeffs[hi], rs.positive_root_coeffs[lo]))


def find_injection(rs: RootSystemData, j: int) -> InjectionCertificate:
    """Certificate that ``dim V(t lambda_j) >= dim V(t lambda_s)`` for every ``t``."""
    s = min_fundamental(rs).s
    sources = nilradical_indices(rs, s)
    targets = nilradical_indices(rs, j)
    src_pq = [_pq(rs, a, s) for a in sources]
    tgt_pq = [_pq(rs, b, j) for b in targets]
    # prefer the tightest admissible partner: smallest p, then root order
    tgt_order = sorted(range(len(targets)), key=lambda v: (tgt_pq[v][0], tgt_pq[v][1], v))

    def admissible(u, v):
        return src_pq[u][0] <= tgt_pq[v][0] and src_pq[u][1] <= tgt_pq[v][1]

    def solve(skip_src=(), skip_tgt=()):
        live = [u for u in range(len(sources)) if u not in skip_src]
        adj = [[v for v in tgt_order if v not in skip_tgt and admissible(u, v)] for u in live]
        match = max_matching(adj, len(targets))
        return live, adj, match

    live, adj, match = solve()
    if all(m is not None for m in match):
        mapping = tuple(sorted((sources[u], targets[m]) for u, m in zip(live, match)))
        return InjectionCertificate(rs.lie_type, s, j, mapping)

    hall_x, hall_n = hall_violator(adj, match)
    isolated = [u for u in range(len(sources)) if not adj[u]]
    candidates = isolated or sorted(hall_x)
    for u in candidates:
        p, q = src_pq[u]
        firsts = [v for v in tgt_order if p <= tgt_pq[v][0]]
        for v1 in firsts:
            rest = [v for v in tgt_order if v != v1]
            rest.sort(key=lambda v: (not _above(rs, targets[v], targets[v1]), tgt_pq[v][0], v))
            for v2 in rest:
                (p1, q1), (p2, q2) = tgt_pq[v1], tgt_pq[v2]
                slope = composite_slope(p, q, p1, q1, p2, q2)
                if slope < 0:
                    continue
                live2, _, match2 = solve(skip_src={u}, skip_tgt={v1, v2})
                if any(m is None for m in match2):
                    continue
                mapping = tuple(sorted((sources[a], targets[m]) for a, m in zip(live2, match2)))
                instance = (f"({p}+{q}t)/{p} <= ({p1}+{q1}t)/{p1} * ({p2}+{q2}t)/{p2}, "
                            f"slope {slope}")
                fb = CompositeFallback(sources[u], (targets[v1], targets[v2]), slope, instance)
                return InjectionCertificate(rs.lie_type, s, j, mapping, fb)
    raise NoCertificate(rs.lie_type, j, {sources[u] for u in hall_x}, {targets[v] for v in hall_n})


@dataclass(frozen=True)
class Lemma2Report:
    lie_type: LieType
    j: int
    s: int
    comparisons: tuple[tuple[int, int, int], ...]

    @property
    def passed(self) -> bool:
        return all(dj >= ds for _, dj, ds in self.comparisons)

    @property
    def strict(self) -> bool:
        return all(dj > ds for _, dj, ds in self.comparisons)


def verify_lemma2_numeric(rs: RootSystemData, j: int, t_max: int) -> Lemma2Report:
    """Compare ``dim V(t lambda_j)`` with ``dim V(t lambda_s)`` for ``t = 1 .. t_max``."""
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    s = min_fundamental(rs).s
    n = rs.rank
    rows = tuple(
        (t, weyl_dim(rs, fundamental(n, j, t)), weyl_dim(rs, fundamental(n, s, t)))
        for t in range(1, t_max + 1)
    )
    return Lemma2Report(rs.lie_type, j, s, rows)


def lemma33_holds(n: int, t: int) -> bool:
    """``(2t+2n-1)/(2n-1) <= (t+2n-1)/(2n-1) * (t+n)/n`` in exact arithmetic."""
    lhs = Fraction(2 * t + 2 * n - 1, 2 * n - 1)
    rhs = Fraction(t + 2 * n - 1, 2 * n - 1) * Fraction(t + n, n)
    return lhs <= rhs


def termwise_dominates(rs: RootSystemData, cert: InjectionCertificate, t: int) -> bool:
    """Each matched numerator factor of ``f_s(t)`` is at most its partner's in ``f_j(t)``."""
    for a, b in cert.mapping:
        pa, qa = _pq(rs, a, cert.s)
        pb, qb = _pq(rs, b, cert.j)
        if pa + t * qa > pb + t * qb:
            return False
    return True


def certificate_from_roots(rs: RootSystemData, j: int, pairs: Sequence, fallback=None) -> InjectionCertificate:
    """Build a certificate from ambient-vector pairs, e.g. a hand-written construction.

    ``fallback`` is ``(source, (target1, target2))`` in ambient vectors.
    """
    s = min_fundamental(rs).s
    mapping = tuple((rs.root_index(a), rs.root_index(b)) for a, b in pairs)
    fb = None
    if fallback is not None:
        src, (t1, t2) = fallback
        a, b1, b2 = rs.root_index(src), rs.root_index(t1), rs.root_index(t2)
        p, q = _pq(rs, a, s)
        (p1, q1), (p2, q2) = _pq(rs, b1, j), _pq(rs, b2, j)
        fb = CompositeFallback(a, (b1, b2), composite_slope(p, q, p1, q1, p2, q2), "hand-built")
    return InjectionCertificate(rs.lie_type, s, j, mapping, fb)
