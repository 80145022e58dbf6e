"""Exact root-system data for the simple complex Lie algebras.

Everything here is exact: ambient coordinates are tuples of
``fractions.Fraction`` and no floating point is ever produced.  Nodes of the
Dynkin diagram are numbered as in Bourbaki's planches and the public API is
1-based (``j = 1 .. rank``), matching the usual ``lambda_1 .. lambda_n``.

Ambient realizations:

* ``A_n``  -- ``R^{n+1}``, roots ``e_i - e_k``; weights live in the trace-zero
  hyperplane, e.g. ``lambda_1 = e_1 - (1/(n+1)) sum e_k``.
* ``B_n``, ``C_n``, ``D_n`` -- ``R^n`` with the textbook ``e_i`` roots.
* ``G_2`` -- the plane ``x_1 + x_2 + x_3 = 0`` in ``R^3``.
* ``F_4`` -- ``R^4``.
* ``E_6``, ``E_7``, ``E_8`` -- the E8 lattice in ``R^8``; ``E_6``/``E_7`` use the
  first six/seven E8 simple roots, which is Bourbaki's realization.

The invariant form is the ambient dot product multiplied by ``form_scale``,
chosen so that inner products of roots are integers with gcd 1.  The two
rank <= 2 types where that gcd would be 2 on the nose (``A_1`` and ``C_2``)
keep their family's normalization instead.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]

FAMILIES = "ABCDEFG"


class InvalidLieType(ValueError):
    """Raised for a family/rank combination that is not a simple Lie algebra."""


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper() if isinstance(self.family, str) else self.family
        object.__setattr__(self, "family", fam)
        n = self.rank
        if fam not in FAMILIES:
            raise InvalidLieType(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not isinstance(n, int) or n < 1:
            raise InvalidLieType(f"rank must be a positive integer, got {n!r}")
        if fam == "B" and n == 2:
            raise InvalidLieType("B2 is presented as C2 (rank >= 3 required for B)")
        rules = {
            "A": (n >= 1, "A requires rank >= 1"),
            "B": (n >= 3, "B requires rank >= 3"),
            "C": (n >= 2, "C requires rank >= 2"),
            "D": (n >= 4, "D requires rank >= 4"),
            "E": (n in (6, 7, 8), "E requires rank in {6, 7, 8}"),
            "F": (n == 4, "F requires rank = 4"),
            "G": (n == 2, "G requires rank = 2"),
        }
        ok, msg = rules[fam]
        if not ok:
            raise InvalidLieType(f"{fam}{n}: {msg}")

    @classmethod
    def parse(cls, spec: str) -> "LieType":
        """Parse ``"C3"``, ``"e7"``, ``"A_4"``."""
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", spec)
        if m is None:
            raise InvalidLieType(f"cannot parse Lie type {spec!r}; use e.g. 'C3' or 'E7'")
        fam, n = m.group(1).upper(), int(m.group(2))
        if fam == "B" and n == 2:
            raise InvalidLieType("B2 is not used; write C2 instead (B2 and C2 coincide)")
        return cls(fam, n)

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def all_types(max_rank: int, exceptional: bool = True) -> list[LieType]:
    """Every valid type of rank <= max_rank, in a fixed order."""
    out = []
    for fam, lo in (("A", 1), ("B", 3), ("C", 2), ("D", 4)):
        out.extend(LieType(fam, n) for n in range(lo, max_rank + 1))
    if exceptional:
        for fam, n in (("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)):
            if n <= max_rank:
                out.append(LieType(fam, n))
    return out


# --- exact vector helpers -------------------------------------------------

def vec(*xs) -> Vec:
    return tuple(Fraction(x) for x in xs)


def unit(dim: int, i: int, c=1) -> Vec:
    """``c * e_i`` in ``R^dim`` (i is 1-based)."""
    v = [Fraction(0)] * dim
    v[i - 1] = Fraction(c)
    return tuple(v)


def vadd(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def vsub(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def vscale(c, x: Sequence[Fraction]) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in x)


def vsum(vs: Iterable[Vec], dim: int) -> Vec:
    acc = (Fraction(0),) * dim
    for v in vs:
        acc = vadd(acc, v)
    return acc


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def _frac_gcd(xs: Iterable[Fraction]) -> Fraction:
    num, den = 0, 1
    for x in xs:
        num = math.gcd(num, x.numerator)
        den = den * x.denominator // math.gcd(den, x.denominator)
    return Fraction(num, den)


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# --- simple roots per type ------------------------------------------------

def _simple_roots(t: LieType) -> list[Vec]:
    n = t.rank
    fam = t.family
    if fam == "A":
        d = n + 1
        return [vsub(unit(d, i), unit(d, i + 1)) for i in range(1, n + 1)]
    if fam in "BCD":
        base = [vsub(unit(n, i), unit(n, i + 1)) for i in range(1, n)]
        last = {
            "B": unit(n, n),
            "C": unit(n, n, 2),
            "D": vadd(unit(n, n - 1), unit(n, n)),
        }[fam]
        return base + [last]
    if fam == "G":
        return [vec(1, -1, 0), vec(-2, 1, 1)]
    if fam == "F":
        h = Fraction(1, 2)
        return [vec(0, 1, -1, 0), vec(0, 0, 1, -1), vec(0, 0, 0, 1), vec(h, -h, -h, -h)]
    if fam == "E":
        h = Fraction(1, 2)
        e8 = [
            vec(h, -h, -h, -h, -h, -h, -h, h),
            vec(1, 1, 0, 0, 0, 0, 0, 0),
        ] + [vsub(unit(8, i), unit(8, i - 1)) for i in range(2, 8)]
        return e8[:n]
    raise AssertionError(fam)


# --- the data record ------------------------------------------------------

@dataclass(frozen=True)
class RootSystemData:
    """Immutable root data for one simple type.

    ``positive_root_coeffs[k]`` gives the k-th positive root in the simple-root
    basis and ``coroot_coeffs[k]`` its coroot in the simple-coroot basis, so
    ``<lambda_i, alpha_k^vee> = coroot_coeffs[k][i]``.
    """

    lie_type: LieType
    simple_roots: tuple[Vec, ...]
    positive_roots: tuple[Vec, ...]
    positive_root_coeffs: tuple[tuple[int, ...], ...]
    coroot_coeffs: tuple[tuple[int, ...], ...]
    fundamental_weights: tuple[Vec, ...]
    rho: Vec
    highest_root: Vec
    highest_short_root: Vec
    form_scale: Fraction
    cartan: tuple[tuple[int, ...], ...]
    _index: dict = field(default=None, repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def ambient_dim(self) -> int:
        return len(self.rho)

    def inner(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        """The invariant form ``(x, y)``, normalized to gcd 1 on the root lattice."""
        return self.form_scale * dot(x, y)

    def pair(self, lam: Sequence[Fraction], alpha: Sequence[Fraction]) -> Fraction:
        """``<lam, alpha> = 2 (lam, alpha) / (alpha, alpha)``."""
        aa = dot(alpha, alpha)
        if aa == 0:
            raise ValueError("pairing with the zero vector")
        return 2 * dot(lam, alpha) / aa

    def weight(self, coeffs: Sequence[int]) -> Vec:
        """Ambient vector of ``sum a_i lambda_i``."""
        check_weight(self, coeffs)
        return vsum((vscale(a, w) for a, w in zip(coeffs, self.fundamental_weights)), self.ambient_dim)

    def root_index(self, root: Sequence[Fraction]) -> int:
        """Position of a positive root in ``positive_roots``."""
        return self._index[tuple(Fraction(x) for x in root)]

    def is_long(self, k: int) -> bool:
        return dot(self.positive_roots[k], self.positive_roots[k]) == dot(self.highest_root, self.highest_root)

    def root_height(self, k: int) -> int:
        return sum(self.positive_root_coeffs[k])


@lru_cache(maxsize=None)
def build(lie_type: LieType) -> RootSystemData:
    """Construct the full root data of ``lie_type`` (cached; the result is immutable)."""
    if not isinstance(lie_type, LieType):
        raise TypeError("build() expects a LieType")
    simple = _simple_roots(lie_type)
    n = lie_type.rank
    norms = [dot(a, a) for a in simple]
    cartan = tuple(
        tuple(int(2 * dot(simple[i], simple[j]) / norms[j]) for j in range(n)) for i in range(n)
    )

    # positive roots in simple-root coordinates, grown by alpha-strings
    simple_coeffs = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    found = set(simple_coeffs)
    layer = list(simple_coeffs)
    ordered = list(simple_coeffs)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                down = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in found:
                        down += 1
                    else:
                        break
                pairing = sum(beta[k] * cartan[k][i] for k in range(n))
                if down - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        nxt.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
        ordered.extend(nxt)
        layer = nxt

    dim = len(simple[0])
    pos = [vsum((vscale(c, a) for c, a in zip(coeffs, simple)), dim) for coeffs in ordered]
    coroots = []
    for coeffs, root in zip(ordered, pos):
        rr = dot(root, root)
        cc = [Fraction(coeffs[k]) * norms[k] / rr for k in range(n)]
        assert all(c.denominator == 1 for c in cc)
        coroots.append(tuple(int(c) for c in cc))

    inv = _invert([[Fraction(x) for x in row] for row in cartan])
    fund = [vsum((vscale(inv[i][k], simple[k]) for k in range(n)), dim) for i in range(n)]

    rho = vsum(fund, dim)
    half_sum = vscale(Fraction(1, 2), vsum(pos, dim))
    if rho != half_sum:
        raise AssertionError(f"{lie_type}: rho mismatch")

    heights = [sum(c) for c in ordered]
    top = max(range(len(pos)), key=lambda k: heights[k])
    short_len = min(dot(r, r) for r in pos)
    shorts = [k for k in range(len(pos)) if dot(pos[k], pos[k]) == short_len]
    top_short = max(shorts, key=lambda k: heights[k])

    g = _frac_gcd(dot(x, y) for x in pos for y in pos)
    if str(lie_type) in ("A1", "C2"):
        # gcd is 2 here; keep the normalization of the rest of the family so
        # that e.g. (rho, alpha_h) = 2n holds for C_2 exactly as for C_n
        g = Fraction(1)
    data = RootSystemData(
        lie_type=lie_type,
        simple_roots=tuple(simple),
        positive_roots=tuple(pos),
        positive_root_coeffs=tuple(ordered),
        coroot_coeffs=tuple(coroots),
        fundamental_weights=tuple(fund),
        rho=rho,
        highest_root=pos[top],
        highest_short_root=pos[top_short],
        form_scale=1 / g,
        cartan=cartan,
        _index={r: k for k, r in enumerate(pos)},
    )
    return data


def check_weight(rs: RootSystemData, coeffs: Sequence[int]) -> tuple[int, ...]:
    """Validate a dominant weight given by its fundamental-weight coefficients."""
    w = tuple(coeffs)
    if len(w) != rs.rank:
        raise ValueError(f"{rs.lie_type}: weight needs {rs.rank} coefficients, got {len(w)}")
    if any((not isinstance(a, int)) or a < 0 for a in w):
        raise ValueError(f"dominant weight coefficients must be non-negative integers: {w}")
    return w


def height(w: Sequence[int]) -> int:
    """Height of a dominant weight: the sum of its coefficients."""
    return sum(w)


def fundamental(rank: int, j: int, t: int = 1) -> tuple[int, ...]:
    """Coefficient vector of ``t * lambda_j`` (j is 1-based)."""
    return tuple(t if i == j else 0 for i in range(1, rank + 1))


def nilradical_roots(rs: RootSystemData, j: int) -> list[Vec]:
    """Positive roots whose ``alpha_j`` coefficient is nonzero (the roots of ``u_j``)."""
    return [rs.positive_roots[k] for k in nilradical_indices(rs, j)]


def nilradical_indices(rs: RootSystemData, j: int) -> list[int]:
    if not 1 <= j <= rs.rank:
        raise IndexError(f"node {j} out of range 1..{rs.rank}")
    return [k for k, c in enumerate(rs.positive_root_coeffs) if c[j - 1] != 0]


# --- Dynkin diagram automorphisms -----------------------------------------

@lru_cache(maxsize=None)
def diagram_automorphisms(lie_type: LieType) -> tuple[tuple[int, ...], ...]:
    """All node permutations preserving the Cartan matrix, as 1-based images.

    ``sigma[i - 1]`` is the image of node ``i``.  The identity comes first.
    """
    cartan = build(lie_type).cartan
    n = lie_type.rank
    # visit nodes so that each one (after the first) touches an earlier one
    order = [0]
    while len(order) < n:
        for v in range(n):
            if v not in order and any(cartan[v][u] != 0 for u in order):
                order.append(v)
                break
    found = []

    def extend(assign: dict[int, int]):
        if len(assign) == n:
            found.append(tuple(assign[i] + 1 for i in range(n)))
            return
        v = order[len(assign)]
        used = set(assign.values())
        for img in range(n):
            if img in used or cartan[img][img] != cartan[v][v]:
                continue
            if all(cartan[v][u] == cartan[img][assign[u]] and cartan[u][v] == cartan[assign[u]][img]
                   for u in assign):
                assign[v] = img
                extend(assign)
                del assign[v]

    extend({})
    found.sort(key=lambda s: (s != tuple(range(1, n + 1)), s))
    return tuple(found)


def diagram_automorphism_orbits(lie_type: LieType) -> list[frozenset[int]]:
    """Partition of ``{1..n}`` into orbits of the diagram automorphism group."""
    seen: set[int] = set()
    orbits = []
    for i in range(1, lie_type.rank + 1):
        if i in seen:
            continue
        orb = frozenset(s[i - 1] for s in diagram_automorphisms(lie_type))
        seen |= orb
        orbits.append(orb)
    return orbits


def apply_automorphism(sigma: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    """Permute weight coefficients: node i's coefficient moves to node sigma(i)."""
    out = [0] * len(w)
    for i, a in enumerate(w):
        out[sigma[i] - 1] = a
    return tuple(out)


def weight_orbit(lie_type: LieType, w: Sequence[int]) -> frozenset[tuple[int, ...]]:
    return frozenset(apply_automorphism(s, w) for s in diagram_automorphisms(lie_type))


def canonical_weight(lie_type: LieType, w: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically largest weight in the diagram-automorphism orbit of ``w``."""
    return max(weight_orbit(lie_type, w))


def dominant_weights_of_height(rank: int, t: int):
    """All ``a in Z_{>=0}^rank`` with ``sum a = t``, in lexicographically decreasing order."""
    if rank == 1:
        yield (t,)
        return
    for first in range(t, -1, -1):
        for rest in dominant_weights_of_height(rank - 1, t - first):
            yield (first,) + rest


def count_weights_of_height(rank: int, t: int) -> int:
    return math.comb(rank + t - 1, t)


__all__ = [
    "InvalidLieType", "LieType", "RootSystemData", "Vec", "all_types", "apply_automorphism",
    "build", "canonical_weight", "check_weight", "count_weights_of_height",
    "diagram_automorphism_orbits", "diagram_automorphisms", "dominant_weights_of_height",
    "dot", "fundamental", "height", "nilradical_indices", "nilradical_roots", "unit", "vadd",
    "vec", "vscale", "vsub", "vsum", "weight_orbit",
]
