"""Published tables as data, with matchers and the hand-built injection sequences.

Each table is transcribed as printed; known misprints are kept and the
corrected variants are stored next to them, so tests can show exactly where a
printed entry and the computation part ways.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from hwbound.dims import ExactPolynomial
from hwbound.primes import is_prime
from hwbound.rootsys import LieType, canonical_weight, fundamental, unit, vadd, vsub

# --- Table 1: nonzero weights with dim <= (rho+lambda, alpha_h)^2, rank >= 3 ---


@dataclass(frozen=True)
class Table1Row:
    family: str
    label: str
    weight: Callable[[int], tuple[int, ...]]
    dim: Callable[[int], int]
    ranks: Callable[[int], bool] = lambda n: True


def _w(n: int, **coeffs) -> tuple[int, ...]:
    """Weight from keyword coefficients ``l1=2, ln=1``; ``ln``/``lm`` mean nodes n and n-1."""
    out = [0] * n
    for key, a in coeffs.items():
        node = {"ln": n, "lm": n - 1}.get(key) or int(key[1:])
        out[node - 1] += a
    return tuple(out)


TABLE1_PRINTED: tuple[Table1Row, ...] = (
    Table1Row("A", "l1", lambda n: _w(n, l1=1), lambda n: n + 1),
    Table1Row("A", "2l1", lambda n: _w(n, l1=2), lambda n: (n + 1) * (n + 2) // 2),
    Table1Row("A", "l2", lambda n: _w(n, l2=1), lambda n: n * (n + 1) // 2),
    Table1Row("A", "l1+ln", lambda n: _w(n, l1=1, ln=1), lambda n: n * (n + 2)),
    Table1Row("A", "l3", lambda n: _w(n, l3=1), lambda n: math.comb(n + 1, 3), lambda n: 3 <= n <= 7),
    Table1Row("A", "3l1", lambda n: _w(n, l1=3), lambda n: math.comb(n + 3, 3), lambda n: 3 <= n <= 5),
    Table1Row("A", "4l1", lambda n: _w(n, l1=4), lambda n: 35, lambda n: n == 3),
    Table1Row("A", "5l1", lambda n: _w(n, l1=5), lambda n: 56, lambda n: n == 3),
    Table1Row("A", "l1+l2", lambda n: _w(n, l1=1, l2=1), lambda n: 20, lambda n: n == 3),
    Table1Row("A", "2l2", lambda n: _w(n, l2=2), lambda n: 45, lambda n: n == 3),
    Table1Row("B", "l1", lambda n: _w(n, l1=1), lambda n: 2 * n + 1),
    Table1Row("B", "2l1", lambda n: _w(n, l1=2), lambda n: n * (2 * n + 3)),
    Table1Row("B", "l2", lambda n: _w(n, l2=1), lambda n: n * (2 * n + 1)),
    Table1Row("B", "ln", lambda n: _w(n, ln=1), lambda n: 2 ** n, lambda n: 3 <= n <= 9),
    Table1Row("B", "2l3", lambda n: _w(n, l3=2), lambda n: 35, lambda n: n == 3),
    Table1Row("B", "l1+l3", lambda n: _w(n, l1=1, l3=1), lambda n: 48, lambda n: n == 3),
    Table1Row("B", "3l1", lambda n: _w(n, l1=3), lambda n: 77, lambda n: n == 3),
    Table1Row("B", "3l3", lambda n: _w(n, l3=3), lambda n: 112, lambda n: n == 3),
    Table1Row("C", "l1", lambda n: _w(n, l1=1), lambda n: 2 * n),
    Table1Row("C", "2l1", lambda n: _w(n, l1=2), lambda n: n * (2 * n + 1)),
    Table1Row("C", "l2", lambda n: _w(n, l2=1), lambda n: (n - 1) * (2 * n + 1)),
    Table1Row("C", "3l1", lambda n: _w(n, l1=3), lambda n: math.comb(2 * n + 2, 3), lambda n: 3 <= n <= 5),
    # the range qualifier is printed on the 3l1 line only; see C_L3_READINGS
    Table1Row("C", "l3", lambda n: _w(n, l3=1), lambda n: math.comb(2 * n, 3) - 2 * n, lambda n: 3 <= n <= 5),
    Table1Row("C", "l4", lambda n: _w(n, l4=1), lambda n: 42, lambda n: n == 4),
    Table1Row("C", "l1+l2", lambda n: _w(n, l1=1, l2=1), lambda n: 64, lambda n: n == 3),
    Table1Row("D", "l1", lambda n: _w(n, l1=1), lambda n: 2 * n),
    Table1Row("D", "2l1", lambda n: _w(n, l1=2), lambda n: (2 * n - 1) * (n - 1)),
    Table1Row("D", "l2", lambda n: _w(n, l2=1), lambda n: n * (2 * n - 1)),
    Table1Row("D", "ln", lambda n: _w(n, ln=1), lambda n: 2 ** (n - 1), lambda n: 4 <= n <= 9),
    Table1Row("E6", "l1", lambda n: _w(n, l1=1), lambda n: 27),
    Table1Row("E6", "l2", lambda n: _w(n, l2=1), lambda n: 78),
    Table1Row("E7", "l7", lambda n: _w(n, l7=1), lambda n: 56),
    Table1Row("E7", "l1", lambda n: _w(n, l1=1), lambda n: 133),
    Table1Row("E8", "l8", lambda n: _w(n, l8=1), lambda n: 248),
    Table1Row("F4", "l4", lambda n: _w(n, l4=1), lambda n: 26),
    Table1Row("F4", "l1", lambda n: _w(n, l1=1), lambda n: 52),
)

C_L3_READINGS = {
    "qualified": lambda n: 3 <= n <= 5,
    "unqualified": lambda n: n >= 3,
}

# Entries where the computation disagrees with the printed table, as
# (type, row label) -> computed replacement (None means the row is absent).
TABLE1_ERRATA: dict[tuple[str, str], object] = {
    ("A3", "2l2"): 20,
    ("B8", "ln"): None,
    ("B9", "ln"): None,
    **{(f"D{n}", "2l1"): (2 * n - 1) * (n + 1) for n in range(4, 13)},
}

# printed rows that fail the bound (they satisfy only the relaxed B bound)
TABLE1_NOT_BOUNDED: dict[str, tuple[tuple[int, ...], ...]] = {
    "B3": ((1, 0, 1), (3, 0, 0), (0, 0, 3)),
}

# weights that satisfy the bound but are not printed
TABLE1_MISSING: dict[str, dict[tuple[int, ...], int]] = {
    "A3": {(2, 0, 1): 36},
    "C3": {(1, 0, 1): 70, (0, 2, 0): 90, (0, 0, 2): 84, (4, 0, 0): 126, (5, 0, 0): 252},
    "C5": {(0, 0, 0, 0, 1): 132},
}


def _row_applies(row: Table1Row, t: LieType) -> bool:
    if len(row.family) > 1:
        return row.family == str(t)
    return row.family == t.family and row.ranks(t.rank)


def table1_expected(t: LieType, corrected: bool = False, c_l3: str = "qualified") -> dict[tuple[int, ...], int]:
    """Printed Table 1 at one concrete type: canonical weight -> dimension."""
    out: dict[tuple[int, ...], int] = {}
    for row in TABLE1_PRINTED:
        applies = _row_applies(row, t)
        if row.family == "C" and row.label == "l3":
            applies = t.family == "C" and C_L3_READINGS[c_l3](t.rank)
        if not applies:
            continue
        w = canonical_weight(t, row.weight(t.rank))
        dim = row.dim(t.rank)
        if corrected and (str(t), row.label) in TABLE1_ERRATA:
            dim = TABLE1_ERRATA[(str(t), row.label)]
            if dim is None:
                continue
        # repeated rows (e.g. A3 l3 is the dual of l1) must agree
        if out.get(w, dim) != dim:
            raise AssertionError(f"{t}: rows disagree at {w}")
        out[w] = dim
    if corrected:
        for w in TABLE1_NOT_BOUNDED.get(str(t), ()):
            out.pop(w, None)
        out.update(TABLE1_MISSING.get(str(t), {}))
    return out


def table1_types(lo: int = 3, hi: int = 12) -> list[LieType]:
    types = [LieType(f, n) for f in "ABCD" for n in range(max(lo, 4 if f == "D" else lo), hi + 1)]
    return types + [LieType(f, n) for f, n in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2))
                    if not (f == "G")]


# --- Table 3: symplectic fundamental weights --------------------------------

TABLE3_PRINTED = (
    ("A", "n = 1 mod 4", "(n+1)/2"),
    ("B", "n = 1, 2 mod 4", "n"),
    ("C", "", "i odd"),
    ("D", "n = 2 mod 4", "n-1, n"),
    ("E7", "", "2,5,7"),
)


def table3_nodes(t: LieType) -> frozenset[int]:
    """Table 3 evaluated at a concrete type."""
    n = t.rank
    if t.family == "A" and n % 4 == 1:
        return frozenset({(n + 1) // 2})
    if t.family == "B" and n % 4 in (1, 2):
        return frozenset({n})
    if t.family == "C":
        return frozenset(i for i in range(1, n + 1) if i % 2)
    if t.family == "D" and n % 4 == 2:
        return frozenset({n - 1, n})
    if str(t) == "E7":
        return frozenset({2, 5, 7})
    return frozenset()


# --- Table 4: f(t) with dim V(t lambda_s) = f(t)/f(0) for exceptional types ---


def _lin(a, b=1) -> ExactPolynomial:
    return ExactPolynomial.linear(a, b)


def _prod(lo: int, hi: int) -> ExactPolynomial:
    return ExactPolynomial.product(_lin(j) for j in range(lo, hi + 1))


E7_READINGS = {
    # the second product's factor taken as (t+j): degree 26
    "index": lambda: _prod(1, 17) * _prod(5, 13),
    # the second product's factor taken literally, nine copies of (t+9): degree 26
    "literal": lambda: _prod(1, 17) * ExactPolynomial.product(_lin(9) for _ in range(5, 14)),
    # (t+j) over 5..13 followed by a separate (t+9): degree 27
    "extra": lambda: _prod(1, 17) * _prod(5, 13) * _lin(9),
}

TABLE4 = {
    "G2": (lambda: _prod(1, 4) * _lin(5, 2), 5),
    "F4": (lambda: _prod(1, 10) * _prod(4, 7) * _lin(11, 2), 15),
    "E6": (lambda: _prod(1, 11) * _prod(4, 8), 16),
    "E7": (E7_READINGS["extra"], 27),
    "E8": (lambda: _prod(1, 28) * _prod(6, 23) * _prod(10, 19) * _lin(29, 2), 57),
}


def table4_ratio(f: ExactPolynomial, t: int) -> Fraction:
    return f(t) / f(0)


# --- Table 6: dim V(lambda) = pq ------------------------------------------


@dataclass(frozen=True)
class Table6Row:
    block: str  # "any", "a(2a+1)", ..., or a sporadic value
    label: str  # e.g. "A_{2a-1} 2l1"
    family: str
    rank: Callable[[int], int | None]
    weight: Callable[[int, int], tuple[int, ...]]  # (param, rank) -> weight
    dim: Callable[[int], int]
    admissible: Callable[[int], bool]
    sign: str  # "+", "-", "o"

    def instantiate(self, param: int):
        n = self.rank(param)
        if n is None:
            return None
        try:
            t = LieType(self.family, n)
        except ValueError:
            return None
        return t, self.weight(param, n)


def _pq_any(d: int) -> bool:
    from hwbound.primes import is_semiprime
    return is_semiprime(d) is not None


def _both_prime(*xs: int) -> bool:
    return all(x > 0 and is_prime(x) for x in xs)


def _if(cond: bool, v):
    return v if cond else None


_BLOCKS = {
    "any": (lambda d: d, _pq_any),
    "a(2a+1)": (lambda a: a * (2 * a + 1), lambda a: _both_prime(a, 2 * a + 1)),
    "a(2a-1)": (lambda a: a * (2 * a - 1), lambda a: _both_prime(a, 2 * a - 1)),
    "a(a+2)": (lambda a: a * (a + 2), lambda a: _both_prime(a, a + 2)),
    "a(2a+3)": (lambda a: a * (2 * a + 3), lambda a: _both_prime(a, 2 * a + 3)),
}


def _row(block, label, family, rank, weight, sign, extra=lambda p: True):
    dim, ok = _BLOCKS[block]
    return Table6Row(block, label, family, rank, weight, dim, lambda p: ok(p) and extra(p), sign)


def _fixed(value, label, t, w, sign):
    fam, n = t[0], int(t[1:])
    return Table6Row(str(value), label, fam, lambda p: n, lambda p, m: w, lambda p: value,
                     lambda p: p == value, sign)


TABLE6_PRINTED: tuple[Table6Row, ...] = (
    _row("any", "A_1 (pq-1)l1", "A", lambda d: 1, lambda d, n: (d - 1,), "o"),
    _row("any", "A_{pq-1} l1", "A", lambda d: d - 1, lambda d, n: _w(n, l1=1), "-"),
    _row("any", "C_{pq/2} l1", "C", lambda d: _if(d % 2 == 0, d // 2), lambda d, n: _w(n, l1=1), "-"),
    _row("any", "B_{(pq-1)/2} l1", "B", lambda d: _if(d % 2 == 1, (d - 1) // 2), lambda d, n: _w(n, l1=1), "+"),
    _row("any", "D_{pq/2} l1", "D", lambda d: _if(d % 2 == 0, d // 2), lambda d, n: _w(n, l1=1), "+"),
    _row("a(2a+1)", "A_{2a-1} 2l1", "A", lambda a: 2 * a - 1, lambda a, n: _w(n, l1=2), "o"),
    _row("a(2a+1)", "A_{2a} l2", "A", lambda a: 2 * a, lambda a, n: _w(n, l2=1), "o"),
    _row("a(2a+1)", "B_a l2", "B", lambda a: a, lambda a, n: _w(n, l2=1), "+", lambda a: a > 2),
    _row("a(2a+1)", "C_a 2l1", "C", lambda a: a, lambda a, n: _w(n, l1=2), "+"),
    _row("a(2a+1)", "A_2 (2a-1)l1", "A", lambda a: 2, lambda a, n: (2 * a - 1, 0), "o"),
    _row("a(2a+1)", "D_{a+1} 2l1", "D", lambda a: a + 1, lambda a, n: _w(n, l1=2), "+"),
    _row("a(2a-1)", "A_{2a-2} 2l1", "A", lambda a: 2 * a - 2, lambda a, n: _w(n, l1=2), "o"),
    _row("a(2a-1)", "A_{2a-1} l2", "A", lambda a: 2 * a - 1, lambda a, n: _w(n, l2=1), "o", lambda a: a > 2),
    _row("a(2a-1)", "A_3 l2", "A", lambda a: _if(a == 2, 3), lambda a, n: _w(n, l2=1), "+"),
    _row("a(2a-1)", "A_2 (2a-2)l1", "A", lambda a: 2, lambda a, n: (2 * a - 2, 0), "o"),
    _row("a(2a-1)", "D_a l2", "D", lambda a: a, lambda a, n: _w(n, l2=1), "+"),
    _row("a(a+2)", "A_a l1+ln", "A", lambda a: a, lambda a, n: _w(n, l1=1, ln=1), "+"),
    _row("a(a+2)", "A_2 (a-1)l1+l2", "A", lambda a: 2, lambda a, n: (a - 1, 1), "o"),
    _row("a(2a+3)", "B_a 2l1", "B", lambda a: a, lambda a, n: _w(n, l1=2), "+"),
    _row("a(2a+3)", "C_{a+1} l2", "C", lambda a: a + 1, lambda a, n: _w(n, l2=1), "+"),
    _fixed(14, "C_2 2l2", "C2", (0, 2), "+"),
    _fixed(14, "C_3 l3", "C3", (0, 0, 1), "-"),
    _fixed(14, "G_2 l2", "G2", (0, 1), "+"),
    _fixed(26, "F_4 l4", "F4", (0, 0, 0, 1), "+"),
    _fixed(35, "A_3 4l1", "A3", (4, 0, 0), "o"),
    _fixed(35, "A_4 3l1", "A4", (3, 0, 0, 0), "o"),
    _fixed(35, "A_6 l3", "A6", (0, 0, 1, 0, 0, 0), "o"),
    _fixed(35, "B_3 2l3", "B3", (0, 0, 2), "+"),
    _fixed(35, "C_2 2l1+l2", "C2", (2, 1), "+"),
    _fixed(35, "C_2 4l1", "C2", (4, 0), "+"),
    _fixed(55, "C_2 4l2", "C2", (0, 4), "+"),
    _fixed(77, "B_3 3l1", "B3", (3, 0, 0), "+"),
    _fixed(77, "G_2 2l2", "G2", (0, 2), "+"),
    _fixed(77, "G_2 3l1", "G2", (3, 0), "+"),
    _fixed(91, "C_2 5l2", "C2", (0, 5), "+"),
    _fixed(133, "E_7 l1", "E7", (1, 0, 0, 0, 0, 0, 0), "+"),
)


def _candidate_params(row: Table6Row, t: LieType, d: int) -> list[int]:
    if row.block == "any":
        return [d]
    if not row.block.startswith("a("):
        return [int(row.block)]
    out = []
    a = 1
    while row.dim(a) <= d:
        if row.dim(a) == d:
            out.append(a)
        a += 1
    return out


def table6_matches(t: LieType, w: Sequence[int], d: int) -> list[Table6Row]:
    """Rows whose instantiation is ``(t, w)`` up to diagram automorphism, with dimension ``d``."""
    key = canonical_weight(t, w)
    hits = []
    for row in TABLE6_PRINTED:
        if row.family != t.family:
            continue
        for p in _candidate_params(row, t, d):
            if not row.admissible(p) or row.dim(p) != d:
                continue
            inst = row.instantiate(p)
            if inst is None or inst[0] != t:
                continue
            if canonical_weight(t, inst[1]) == key:
                hits.append(row)
                break
    return hits


CLAUSE_FORMS = {
    "(1) a(a+2)": lambda a: (a * (a + 2), (a, a + 2)),
    "(2) a(2a-1)": lambda a: (a * (2 * a - 1), (a, 2 * a - 1)),
    "(3) a(2a+1)": lambda a: (a * (2 * a + 1), (a, 2 * a + 1)),
    "(4) a(2a+3)": lambda a: (a * (2 * a + 3), (a, 2 * a + 3)),
}
SPORADIC = (26, 77, 133)


def corollary_clauses(t: LieType, w: Sequence[int], d: int) -> list[str]:
    """Clauses of the pq corollary that ``(t, w, d)`` satisfies (rank >= 2 only)."""
    if t.rank < 2:
        return []
    out = []
    natural = {"A": {fundamental(t.rank, 1), fundamental(t.rank, t.rank)}}.get(
        t.family, {fundamental(t.rank, 1)})
    if t.family in "ABCD" and tuple(w) in natural:
        out.append("natural")
    for name, form in CLAUSE_FORMS.items():
        a = 1
        while True:
            val, factors = form(a)
            if val > d:
                break
            if val == d and _both_prime(*factors):
                out.append(name)
                break
            a += 1
    if d in SPORADIC:
        out.append("(5) sporadic")
    return out


def describe_pq_match(t: LieType, w: Sequence[int], d: int) -> str:
    rows = table6_matches(t, w, d)
    clauses = corollary_clauses(t, w, d)
    parts = []
    if rows:
        parts.append("row " + " | ".join(r.label for r in rows))
    if clauses:
        parts.append("clause " + ", ".join(clauses))
    if not parts:
        return "UNMATCHED"
    if len(rows) > 1:
        parts.append("AMBIGUOUS")
    return "; ".join(parts)


def smallest_instance(row: Table6Row, limit: int = 200):
    """First admissible parameter for which the row names a valid type."""
    params = range(4, 10 ** 4) if row.block == "any" else range(1, limit)
    if not row.block.startswith("a(") and row.block != "any":
        params = [int(row.block)]
    for p in params:
        if row.admissible(p) and row.instantiate(p) is not None:
            t, w = row.instantiate(p)
            return p, t, w
    return None


# --- hand-built injections R_s -> R_j for classical types --------------------


def _e(dim: int, i: int, c=1):
    return unit(dim, i, c)


def _ambient(t: LieType) -> int:
    return t.rank + 1 if t.family == "A" else t.rank


def source_sequence(t: LieType) -> list:
    """``b_1, b_2, ...``: the roots of ``u_1`` ordered so that ``<rho, b_i^vee> = i``."""
    n, m = t.rank, _ambient(t)
    e = lambda i: _e(m, i)
    if t.family == "A":
        return [vsub(e(1), e(i + 1)) for i in range(1, n + 1)]
    b = [vsub(e(1), e(i + 1)) for i in range(1, n)]
    if t.family == "B":
        return b + [vadd(e(1), e(2 * n - i)) for i in range(n, 2 * n - 1)] + [e(1)]
    if t.family == "C":
        return b + [_e(m, 1, 2)] + [vadd(e(1), e(2 * n + 1 - i)) for i in range(n + 1, 2 * n)]
    if t.family == "D":
        return b + [vadd(e(1), e(2 * n - i)) for i in range(n, 2 * n - 1)]
    raise ValueError("hand-built sequences exist for classical types only")


def target_sequence(t: LieType, j: int, variant: str = "corrected"):
    """``(b'_1, b'_2, ..., fallback)`` for node ``j``; ``None`` marks an undefined entry.

    ``variant='printed'`` follows the printed index ranges literally.
    """
    n, m = t.rank, _ambient(t)
    e = lambda i: _e(m, i)
    b = source_sequence(t)
    L = len(b)
    seq = [None] * L
    fallback = None
    f = t.family
    if j == 1:
        return list(b), None
    printed = variant == "printed"
    if f == "C" and j == n:
        for k in range(1, n + 1):
            seq[k - 1] = _e(m, n + 1 - k, 2)
        last = L - 1 if printed else L  # printed range stops short of 2n-1
        for i in range(n + 1, last + 1):
            seq[i - 1] = b[i - 1]
        return seq, None
    if f == "D" and j == n:
        if printed:
            seq[0] = vadd(e(n - 2), e(n - 1))
            for k in range(2, n):
                seq[k - 1] = vadd(e(n - k), e(n))
        else:
            for k in range(1, n - 1):
                seq[k - 1] = vadd(e(n - k), e(n))
            seq[n - 2] = vadd(e(2), e(3))
        for k in range(n, L + 1):
            seq[k - 1] = b[k - 1]
        return seq, None
    if f == "B" and j == n:
        for mm in range(1, n + 1):
            seq[2 * mm - 2] = e(n + 1 - mm)
        for mm in range(1, n):
            seq[2 * mm - 1] = vadd(e(n - mm), e(n - mm + 1))
        fallback = (b[L - 1], (seq[L - 1], vadd(e(1), e(n))))
        return seq, fallback
    # j < n for A, B, C, D (and j = n for A)
    if printed and f == "C":
        for k in range(1, j):
            seq[k - 1] = vsub(e(j + 1 - k), e(j + 1))
        seq[j - 1] = vsub(e(1), e(j))
        for i in range(j + 1, L + 1):
            seq[i - 1] = b[i - 1]
        return seq, None
    if printed:
        # b'_k = e_{j-k} - e_j (k < j) and b'_i = b_i from i = j (j-1 for B)
        for k in range(1, j):
            seq[k - 1] = vsub(e(j - k), e(j))
        start = j - 1 if f == "B" else j
        for i in range(start, L + 1):
            seq[i - 1] = b[i - 1]
        return seq, None
    for k in range(1, j + 1):
        seq[k - 1] = vsub(e(j + 1 - k), e(j + 1))
    for i in range(j + 1, L + 1):
        seq[i - 1] = b[i - 1]
    return seq, None


def _flip_last(v):
    return tuple(v[:-1]) + (-v[-1],)


def hand_built_pairs(t: LieType, j: int, variant: str = "corrected"):
    """``(pairs, fallback, gaps)`` for the hand-built map ``R_1 -> R_j``.

    ``gaps`` lists source positions left without a target.  For ``D_n`` with
    ``j = n-1`` the ``j = n`` construction is transported by the diagram
    symmetry ``e_n -> -e_n`` (the printed text treats only ``j <= n-2``).
    """
    flip = t.family == "D" and j == t.rank - 1 and variant == "corrected"
    seq, fallback = target_sequence(t, t.rank if flip else j, variant)
    b = source_sequence(t)
    pairs, gaps = [], []
    for k, (x, y) in enumerate(zip(b, seq), start=1):
        if fallback is not None and k == len(b):
            continue
        if y is None:
            gaps.append(k)
            continue
        pairs.append((_flip_last(x), _flip_last(y)) if flip else (x, y))
    return pairs, fallback, gaps


def hand_built_problems(t: LieType, j: int, variant: str = "corrected") -> list[str]:
    """Why the hand-built map fails to be a certificate (empty when it is one)."""
    from hwbound.heightmin import certificate_from_roots, certificate_problems
    from hwbound.rootsys import build

    rs = build(t)
    pairs, fallback, gaps = hand_built_pairs(t, j, variant)
    out = [f"b_{k} has no image" for k in gaps]
    for x, y in pairs:
        if tuple(y) not in rs._index:
            out.append(f"image {tuple(map(str, y))} is not a positive root")
    if out:
        return out
    return certificate_problems(rs, certificate_from_roots(rs, j, pairs, fallback))
