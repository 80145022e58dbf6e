"""Self-duality and orthogonal/symplectic type of ``V(lambda)``.

Two independent routes are provided and tested against each other:

* ``duality_indicator`` uses the involution ``-w_0`` (computed from simple
  reflections) for self-duality, and the parity of ``sum_{i in B} a_i`` where
  ``B`` is the tabulated set of symplectic fundamental weights.
* ``duality_closed_form`` evaluates the per-family closed conditions as printed.

``duality_by_coweight`` is a third, table-free oracle: a self-dual module is
symplectic iff ``<lambda, 2 rho^vee>`` is odd.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from hwbound.rootsys import LieType, build, check_weight


class DualityIndicator(str, enum.Enum):
    NOT_SELF_DUAL = "not-self-dual"
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"

    def __str__(self) -> str:
        return self.value

    @property
    def sign(self) -> str:
        return {"not-self-dual": "o", "orthogonal": "+", "symplectic": "-"}[self.value]


def _reflect(cartan, w: list[int], i: int) -> list[int]:
    # fundamental-weight coordinates: alpha_i has coordinates cartan[i]
    c = w[i]
    return [x - c * a for x, a in zip(w, cartan[i])]


@lru_cache(maxsize=None)
def longest_element_word(lie_type: LieType) -> tuple[int, ...]:
    """A reduced word for ``w_0`` (0-based nodes), found by descending from ``rho``."""
    rs = build(lie_type)
    cartan = [[int(x) for x in row] for row in rs.cartan]
    v = [1] * rs.rank
    word = []
    while True:
        i = next((k for k, x in enumerate(v) if x > 0), None)
        if i is None:
            break
        v = _reflect(cartan, v, i)
        word.append(i)
    if v != [-1] * rs.rank or len(word) != len(rs.positive_roots):
        raise AssertionError(f"{lie_type}: descent from rho did not reach -rho")
    return tuple(reversed(word))


@lru_cache(maxsize=None)
def duality_permutation(lie_type: LieType) -> tuple[int, ...]:
    """``-w_0`` as a permutation of nodes: entry ``i-1`` is the 1-based image of node ``i``."""
    rs = build(lie_type)
    cartan = [[int(x) for x in row] for row in rs.cartan]
    n = rs.rank
    image = []
    for j in range(n):
        w = [1 if k == j else 0 for k in range(n)]
        for i in longest_element_word(lie_type):
            w = _reflect(cartan, w, i)
        w = [-x for x in w]
        if sorted(w) != [0] * (n - 1) + [1]:
            raise AssertionError(f"{lie_type}: -w0 does not permute fundamental weights")
        image.append(w.index(1) + 1)
    return tuple(image)


def dual_weight(lie_type: LieType, w: Sequence[int]) -> tuple[int, ...]:
    """Highest weight of ``V(lambda)^*``."""
    perm = duality_permutation(lie_type)
    out = [0] * len(w)
    for i, a in enumerate(w):
        out[perm[i] - 1] = a
    return tuple(out)


def is_self_dual(lie_type: LieType, w: Sequence[int]) -> bool:
    w = check_weight(build(lie_type), w)
    return dual_weight(lie_type, w) == w


def symplectic_fundamentals(lie_type: LieType) -> frozenset[int]:
    """Nodes ``i`` with ``V(lambda_i)`` symplectic."""
    f, n = lie_type.family, lie_type.rank
    if f == "A":
        return frozenset({(n + 1) // 2}) if n % 4 == 1 else frozenset()
    if f == "B":
        return frozenset({n}) if n % 4 in (1, 2) else frozenset()
    if f == "C":
        return frozenset(range(1, n + 1, 2))
    if f == "D":
        return frozenset({n - 1, n}) if n % 4 == 2 else frozenset()
    if f == "E" and n == 7:
        return frozenset({2, 5, 7})
    return frozenset()


def duality_indicator(lie_type: LieType, w: Sequence[int]) -> DualityIndicator:
    if not is_self_dual(lie_type, w):
        return DualityIndicator.NOT_SELF_DUAL
    odd = sum(w[i - 1] for i in symplectic_fundamentals(lie_type)) % 2
    return DualityIndicator.SYMPLECTIC if odd else DualityIndicator.ORTHOGONAL


def duality_closed_form(lie_type: LieType, w: Sequence[int], e6_as_printed: bool = False) -> DualityIndicator:
    """The per-family closed conditions, transcribed row by row.

    ``e6_as_printed`` uses the printed E6 pairs ``a1=a6, a2=a5``; the default
    uses ``a1=a6, a3=a5``, the pairs swapped by the Bourbaki diagram symmetry.
    """
    w = check_weight(build(lie_type), w)
    f, n = lie_type.family, lie_type.rank
    a = (None,) + w  # 1-based
    sd, sp = True, False
    if f == "A":
        sd = all(a[i] == a[n + 1 - i] for i in range(1, n + 1))
        k1 = ((n if n % 2 else n - 1) - 1) // 2 + 1
        sp = n % 4 == 1 and a[k1] % 2 == 1
    elif f == "B":
        sp = n % 4 in (1, 2) and a[n] % 2 == 1
    elif f == "C":
        top = n if n % 2 else n - 1
        sp = sum(a[i] for i in range(1, top + 1, 2)) % 2 == 1
    elif f == "D" and n % 2 == 0:
        sp = n % 4 == 2 and (a[n - 1] + a[n]) % 2 == 1
    elif f == "D":
        sd = a[n - 1] == a[n]
    elif f == "E" and n == 6:
        sd = a[1] == a[6] and (a[2] == a[5] if e6_as_printed else a[3] == a[5])
    elif f == "E" and n == 7:
        sp = (a[2] + a[5] + a[7]) % 2 == 1
    if not sd:
        return DualityIndicator.NOT_SELF_DUAL
    return DualityIndicator.SYMPLECTIC if sp else DualityIndicator.ORTHOGONAL


def coweight_parity(lie_type: LieType, w: Sequence[int]) -> int:
    """``<lambda, 2 rho^vee>``, the sum of ``<lambda, alpha^vee>`` over positive roots."""
    rs = build(lie_type)
    w = check_weight(rs, w)
    return sum(sum(c * x for c, x in zip(cc, w)) for cc in rs.coroot_coeffs)


def duality_by_coweight(lie_type: LieType, w: Sequence[int]) -> DualityIndicator:
    if not is_self_dual(lie_type, w):
        return DualityIndicator.NOT_SELF_DUAL
    if coweight_parity(lie_type, w) % 2:
        return DualityIndicator.SYMPLECTIC
    return DualityIndicator.ORTHOGONAL


@dataclass(frozen=True)
class SymplecticFundamentalSet:
    lie_type: LieType
    nodes: frozenset[int]


def symplectic_fundamental_set(lie_type: LieType) -> SymplecticFundamentalSet:
    return SymplecticFundamentalSet(lie_type, symplectic_fundamentals(lie_type))
