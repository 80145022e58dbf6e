"""Weights with ``dim V(lambda) <= bound(lambda)^2`` and the semiprime catalogue.

Completeness of ``classify_bounded`` rests on the height minimum: every weight of height
``t`` has dimension at least ``f_s(t)``, while its bound is at most
``Bmax(t) = c_0 + t max_i c_i``.  Height ``t`` is skipped when
``D(t) = f_s(t) - Bmax(t)^2 > 0`` and the scan stops at the first ``t`` where
the Taylor-shifted ``D(t + u)`` has only nonnegative coefficients, which proves
``D > 0`` from there on.

``A_1`` and ``A_2`` have infinitely many solutions.  They are returned as
``FamilyDescriptor`` lines, each certified by a polynomial with nonnegative
coefficients, plus a finite residue certified by shifted bivariate
polynomials.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from hwbound.dims import ExactPolynomial, f_poly, min_fundamental, weyl_dim
from hwbound.duality import DualityIndicator, duality_indicator
from hwbound.primes import is_semiprime
from hwbound.rootsys import (
    LieType,
    RootSystemData,
    build,
    canonical_weight,
    check_weight,
    dominant_weights_of_height,
    fundamental,
    weight_orbit,
)

BOUND_KINDS = ("long", "short", "prime")
MAX_SCAN_HEIGHT = 10_000


# --- bounds ------------------------------------------------------------------

@dataclass(frozen=True)
class BoundValue:
    """``long_bound = (rho+lambda, alpha_h)``; ``short_bound = (rho+lambda, 2 beta)`` (type B only);
    ``prime_bound = <rho+lambda, theta^vee>``, the largest Weyl numerator factor."""

    long_bound: int
    short_bound: int | None
    prime_bound: int

    def get(self, kind: str) -> int:
        if kind == "long":
            return self.long_bound
        if kind == "prime":
            return self.prime_bound
        if kind == "short":
            if self.short_bound is None:
                raise ValueError("short bound is only defined for type B")
            return self.short_bound
        raise ValueError(f"unknown bound kind {kind!r}")

    def as_dict(self) -> dict:
        return {"long": self.long_bound, "short": self.short_bound, "prime": self.prime_bound}


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise AssertionError(f"non-integral bound coefficient {x}")
    return int(x)


def bound_form(rs: RootSystemData, kind: str) -> tuple[int, tuple[int, ...]]:
    """``(c_0, (c_1..c_n))`` with ``bound(lambda) = c_0 + sum c_i a_i``."""
    if kind == "long":
        v = rs.highest_root
        return _as_int(rs.inner(rs.rho, v)), tuple(_as_int(rs.inner(l, v)) for l in rs.fundamental_weights)
    if kind == "short":
        if rs.lie_type.family != "B":
            raise ValueError("short bound is only defined for type B")
        v = tuple(2 * x for x in rs.highest_short_root)
        return _as_int(rs.inner(rs.rho, v)), tuple(_as_int(rs.inner(l, v)) for l in rs.fundamental_weights)
    if kind == "prime":
        top = max(rs.coroot_coeffs, key=sum)
        if any(any(c > d for c, d in zip(cc, top)) for cc in rs.coroot_coeffs):
            raise AssertionError("highest coroot does not dominate")
        return sum(top), tuple(top)
    raise ValueError(f"unknown bound kind {kind!r}")


def _eval_form(form, w) -> int:
    c0, cs = form
    return c0 + sum(c * a for c, a in zip(cs, w))


def bound_value(rs: RootSystemData, w: Sequence[int]) -> BoundValue:
    w = check_weight(rs, w)
    short = _eval_form(bound_form(rs, "short"), w) if rs.lie_type.family == "B" else None
    return BoundValue(
        long_bound=_eval_form(bound_form(rs, "long"), w),
        short_bound=short,
        prime_bound=_eval_form(bound_form(rs, "prime"), w),
    )


def classification_kind(lie_type: LieType) -> str:
    """Bound that reproduces the rank-2 and exceptional classifications.

    For ``F_4`` and ``G_2`` the stated linear forms ``2a+3b+5`` and ``<= 4t+11``
    are the highest-coroot pairing, not ``(rho+lambda, alpha_h)``.
    """
    return "prime" if lie_type.family in "FG" else "long"


# --- results -----------------------------------------------------------------

@dataclass(frozen=True)
class ClassifiedModule:
    lie_type: LieType
    weight: tuple[int, ...]
    dim: int
    bound: BoundValue
    duality: DualityIndicator
    orbit: tuple[tuple[int, ...], ...] = ()
    tag: str = ""

    @property
    def height(self) -> int:
        return sum(self.weight)

    def as_dict(self) -> dict:
        return {
            "type": str(self.lie_type),
            "rank": self.lie_type.rank,
            "coefficients": list(self.weight),
            "dim": str(self.dim),
            "bound": self.bound.as_dict(),
            "duality": str(self.duality),
            "orbit": [list(o) for o in self.orbit],
            "tag": self.tag,
        }


def make_module(rs: RootSystemData, w: Sequence[int], tag: str = "") -> ClassifiedModule:
    w = check_weight(rs, w)
    t = rs.lie_type
    return ClassifiedModule(
        lie_type=t,
        weight=w,
        dim=weyl_dim(rs, w),
        bound=bound_value(rs, w),
        duality=duality_indicator(t, w),
        orbit=tuple(sorted(weight_orbit(t, w), reverse=True)),
        tag=tag,
    )


@dataclass(frozen=True)
class FamilyDescriptor:
    """The line ``origin + u * direction`` (``u >= 0``), entirely inside the bounded region.

    ``certificate`` is ``bound^2 - dim`` along the line as a polynomial in ``u``;
    its coefficients are all nonnegative.
    """

    name: str
    lie_type: LieType
    origin: tuple[int, ...]
    direction: tuple[int, ...]
    constraint: str
    dim_formula: str
    certificate: ExactPolynomial

    def instantiate(self, u: int) -> tuple[int, ...]:
        if u < 0:
            raise ValueError("family parameter must be >= 0")
        return tuple(o + u * d for o, d in zip(self.origin, self.direction))

    def contains(self, w: Sequence[int]) -> bool:
        us = {(a - o) // d if d else None for a, o, d in zip(w, self.origin, self.direction)}
        fixed_ok = all(a == o for a, o, d in zip(w, self.origin, self.direction) if d == 0)
        us.discard(None)
        return fixed_ok and len(us) == 1 and min(us) >= 0 and self.instantiate(us.pop()) == tuple(w)


@dataclass(frozen=True)
class HeightStep:
    t: int
    excess: Fraction  # D(t) = f_s(t) - Bmax(t)^2
    enumerated: bool


@dataclass(frozen=True)
class CutoffCertificate:
    kind: str
    base: int
    slope: int
    f_s: ExactPolynomial
    steps: tuple[HeightStep, ...]
    stop_height: int
    shifted: ExactPolynomial

    def bmax(self, t: int) -> int:
        return self.base + self.slope * t

    def is_sound(self) -> bool:
        d = self.f_s - _square(ExactPolynomial.linear(self.base, self.slope))
        return (d(self.stop_height) > 0
                and self.shifted == d.shift(self.stop_height)
                and self.shifted.nonnegative_coefficients())


@dataclass(frozen=True)
class ClassificationResult:
    lie_type: LieType
    kind: str
    modules: tuple[ClassifiedModule, ...]
    families: tuple[FamilyDescriptor, ...] = ()
    cutoff: CutoffCertificate | None = None
    notes: tuple[str, ...] = ()

    @property
    def nonzero(self) -> tuple[ClassifiedModule, ...]:
        return tuple(m for m in self.modules if any(m.weight))

    def weights(self) -> set[tuple[int, ...]]:
        return {m.weight for m in self.modules}

    def orbit_classes(self, nonzero: bool = True) -> set[tuple[int, ...]]:
        mods = self.nonzero if nonzero else self.modules
        return {canonical_weight(self.lie_type, m.weight) for m in mods}


def _square(p: ExactPolynomial) -> ExactPolynomial:
    return p * p


def height_cutoff(rs: RootSystemData, kind: str):
    """Yield ``(t, excess)`` for heights that must be enumerated; return the certificate."""
    c0, cs = bound_form(rs, kind)
    slope = max(cs)
    s = min_fundamental(rs).s
    fs = f_poly(rs, s)
    d = fs - _square(ExactPolynomial.linear(c0, slope))
    steps = []
    for t in range(MAX_SCAN_HEIGHT):
        ex = d(t)
        if ex > 0:
            shifted = d.shift(t)
            if shifted.nonnegative_coefficients():
                return CutoffCertificate(kind, c0, slope, fs, tuple(steps), t, shifted)
            steps.append(HeightStep(t, ex, False))
        else:
            steps.append(HeightStep(t, ex, True))
    raise RuntimeError(f"{rs.lie_type}: no height cutoff below {MAX_SCAN_HEIGHT}")


# --- polynomials in the weight coordinates -----------------------------------

MPoly = dict  # exponent tuple -> Fraction


def _mp_mul(p: MPoly, q: MPoly) -> MPoly:
    out: MPoly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _mp_linear(const, coeffs) -> MPoly:
    k = len(coeffs)
    out = {(0,) * k: Fraction(const)} if const else {}
    for i, c in enumerate(coeffs):
        if c:
            out[tuple(1 if j == i else 0 for j in range(k))] = Fraction(c)
    return out


def excess_poly(rs: RootSystemData, kind: str, origin: Sequence[int], free: Sequence[int]) -> MPoly:
    """``bound^2 - dim`` at ``origin + sum_{i in free} u_i e_i`` as a polynomial in the ``u_i``."""
    one = {(0,) * len(free): Fraction(1)}
    num = one
    den = 1
    for cc in rs.coroot_coeffs:
        const = sum(c * (o + 1) for c, o in zip(cc, origin))
        num = _mp_mul(num, _mp_linear(const, [cc[i] for i in free]))
        den *= sum(cc)
    c0, cs = bound_form(rs, kind)
    b = _mp_linear(_eval_form((c0, cs), origin), [cs[i] for i in free])
    out = _mp_mul(b, b)
    for e, c in num.items():
        out[e] = out.get(e, 0) - c / den
    return {e: c for e, c in out.items() if c}


def _nonneg(p: MPoly) -> bool:
    return all(c >= 0 for c in p.values())


def _nonpos(p: MPoly) -> bool:
    return all(c <= 0 for c in p.values())


def _univariate(p: MPoly) -> ExactPolynomial:
    deg = max((e[0] for e in p), default=0)
    return ExactPolynomial(tuple(p.get((k,), Fraction(0)) for k in range(deg + 1)))


# --- classification ------------------------------------------------------------

def _rank_one_families(rs: RootSystemData, kind: str) -> tuple[FamilyDescriptor, ...]:
    cert = excess_poly(rs, kind, (0,), (0,))
    if not _nonneg(cert):
        raise AssertionError("A1: bound^2 - dim is not nonnegative along the line")
    return (FamilyDescriptor("a >= 0", rs.lie_type, (0,), (1,), "a any", "a+1", _univariate(cert)),)


def _rank_two_lines(rs: RootSystemData, kind: str) -> tuple[FamilyDescriptor, ...]:
    out = []
    for node, value in ((0, 0), (0, 1), (1, 0), (1, 1)):
        origin = [0, 0]
        origin[node] = value
        free = 1 - node
        direction = [0, 0]
        direction[free] = 1
        cert = excess_poly(rs, kind, origin, (free,))
        if not _nonneg(cert):
            raise AssertionError(f"line {'ab'[node]}={value} is not inside the bounded region")
        u = "ab"[free]
        dim = ExactPolynomial.interpolate(
            [weyl_dim(rs, [o + k * d for o, d in zip(origin, direction)]) for k in range(4)])
        out.append(FamilyDescriptor(
            name=f"{'ab'[node]}={value}",
            lie_type=rs.lie_type,
            origin=tuple(origin),
            direction=tuple(direction),
            constraint=f"{'ab'[node]} = {value}, {u} >= 0",
            dim_formula=_poly_str(dim, u),
            certificate=_univariate(cert),
        ))
    return tuple(out)


def _poly_str(p: ExactPolynomial, var: str) -> str:
    terms = []
    for k, c in enumerate(p.coefficients):
        if not c:
            continue
        coef = str(c)
        terms.append(coef if k == 0 else f"{coef}*{var}" + (f"^{k}" if k > 1 else ""))
    return " + ".join(reversed(terms)) or "0"


def _residue_scan(rs: RootSystemData, kind: str, lo: int) -> list[tuple[int, int]]:
    """Points with both coordinates ``>= lo`` in the bounded region, with stop certificates."""
    found = []
    for a in range(lo, MAX_SCAN_HEIGHT):
        quad = excess_poly(rs, kind, (a, lo), (0, 1))
        if quad.get((0, 0), 0) < 0 and _nonpos(quad):
            return found
        for b in range(lo, MAX_SCAN_HEIGHT):
            row = excess_poly(rs, kind, (a, b), (1,))
            if row.get((0,), 0) >= 0:
                found.append((a, b))
            elif _nonpos(row):
                break
        else:
            raise RuntimeError("residue row did not terminate")
    raise RuntimeError("residue scan did not terminate")


def classify_bounded(lie_type: LieType, kind: str | None = None) -> ClassificationResult:
    """All ``lambda`` (zero included) with ``dim V(lambda) <= bound(lambda)^2``.

    Diagram-automorphic images are listed separately; each module carries its
    orbit.  Output is sorted lexicographically by weight.
    """
    kind = kind or classification_kind(lie_type)
    rs = build(lie_type)
    if lie_type == LieType("A", 1):
        fams = _rank_one_families(rs, kind)
        return ClassificationResult(lie_type, kind, (), fams,
                                    notes=("every weight qualifies; see the family",))
    if lie_type == LieType("A", 2):
        fams = _rank_two_lines(rs, kind)
        residue = _residue_scan(rs, kind, 2)
        mods = tuple(make_module(rs, w) for w in sorted(residue))
        return ClassificationResult(lie_type, kind, mods, fams,
                                    notes=("finite residue a, b >= 2 plus the four lines",))
    cert = height_cutoff(rs, kind)
    form = bound_form(rs, kind)
    hits = []
    for step in cert.steps:
        if not step.enumerated:
            continue
        for w in dominant_weights_of_height(rs.rank, step.t):
            b = _eval_form(form, w)
            if weyl_dim(rs, w) <= b * b:
                hits.append(w)
    mods = tuple(make_module(rs, w) for w in sorted(hits))
    return ClassificationResult(lie_type, kind, mods, (), cert)


def family_window(res: ClassificationResult, dim_cap: int) -> list[tuple[int, ...]]:
    """Finite window of the family lines: points with dimension ``<= dim_cap``."""
    rs = build(res.lie_type)
    seen = set()
    for fam in res.families:
        u = 0
        while True:
            w = fam.instantiate(u)
            if weyl_dim(rs, w) > dim_cap:
                break
            seen.add(w)
            u += 1
    return sorted(seen)


# --- semiprime catalogue ---------------------------------------------------------

def pq_catalogue(lie_type: LieType, dim_cap: int) -> list[ClassifiedModule]:
    """Every ``lambda`` with ``dim V(lambda) = pq <= dim_cap``, tagged with its table rows.

    A prime factor of ``dim V(lambda)`` divides a Weyl numerator factor, so
    ``pq <= prime_bound^2`` and the prime-bound classification contains the
    answer.
    """
    from hwbound.tables import describe_pq_match

    if dim_cap < 1:
        raise ValueError("dim_cap must be positive")
    res = classify_bounded(lie_type, "prime")
    rs = build(lie_type)
    pts = set(m.weight for m in res.modules) | set(family_window(res, dim_cap))
    out = []
    for w in sorted(pts):
        d = weyl_dim(rs, w)
        if d <= dim_cap and is_semiprime(d):
            out.append(make_module(rs, w, tag=describe_pq_match(lie_type, w, d)))
    return out


def search_dimension(lie_type: LieType, d: int, height_cap: int) -> list[tuple[int, ...]]:
    """All weights of height ``<= height_cap`` with dimension exactly ``d``."""
    rs = build(lie_type)
    s = min_fundamental(rs).s
    out = []
    for t in range(height_cap + 1):
        # every weight of height t has dim >= dim V(t lambda_s)
        if weyl_dim(rs, fundamental(rs.rank, s, t)) > d:
            break
        out.extend(w for w in dominant_weights_of_height(rs.rank, t) if weyl_dim(rs, w) == d)
    return sorted(out)


def semiprime_scan(lie_type: LieType, max_height: int, dim_cap: int) -> list[ClassifiedModule]:
    """Brute-force scan of heights ``<= max_height`` for semiprime dimensions ``<= dim_cap``."""
    from hwbound.tables import describe_pq_match

    rs = build(lie_type)
    s = min_fundamental(rs).s
    out = []
    for t in range(max_height + 1):
        if weyl_dim(rs, fundamental(rs.rank, s, t)) > dim_cap:
            break
        for w in dominant_weights_of_height(rs.rank, t):
            d = weyl_dim(rs, w)
            if d <= dim_cap and is_semiprime(d):
                out.append(make_module(rs, w, tag=describe_pq_match(lie_type, w, d)))
    return sorted(out, key=lambda m: m.weight)


# --- rendering -------------------------------------------------------------------

def modules_to_json(mods: Iterable[ClassifiedModule]) -> str:
    return json.dumps([m.as_dict() for m in mods], indent=2, sort_keys=True) + "\n"


def weight_label(w: Sequence[int]) -> str:
    terms = []
    for i, a in enumerate(w, start=1):
        if a == 1:
            terms.append(f"l{i}")
        elif a:
            terms.append(f"{a}l{i}")
    return " + ".join(terms) or "0"


def render_text(res: ClassificationResult, nonzero: bool = True) -> str:
    """Plain table: one line per orbit, in the layout type | weight | dim."""
    mods = res.nonzero if nonzero else res.modules
    seen = set()
    lines = [f"{'type':<6} {'weight':<24} {'dim':>10}  {'bound':>6}  duality"]
    for m in sorted(mods, key=lambda m: (m.dim, m.weight)):
        key = canonical_weight(m.lie_type, m.weight)
        if key in seen:
            continue
        seen.add(key)
        extra = f"  (+{len(m.orbit) - 1} image)" if len(m.orbit) > 1 else ""
        b = m.bound.get(res.kind)
        lines.append(f"{str(m.lie_type):<6} {weight_label(key):<24} {m.dim:>10}  {b:>6}  {m.duality}{extra}")
    for f in res.families:
        lines.append(f"{str(f.lie_type):<6} {'family ' + f.constraint:<24} {f.dim_formula}")
    return "\n".join(lines) + "\n"
