"""Maximum bipartite matching by augmenting paths, with a Hall-violator witness."""

from __future__ import annotations

from typing import Sequence


def max_matching(adj: Sequence[Sequence[int]], n_right: int) -> list[int | None]:
    """Kuhn's algorithm.

    ``adj[u]`` lists the right vertices admissible for left vertex ``u``, in order
    of preference.  Returns ``match[u]`` (a right vertex or ``None``).  Output is
    deterministic for a given ``adj``.
    """
    owner: list[int | None] = [None] * n_right
    match: list[int | None] = [None] * len(adj)

    def augment(u: int, seen: list[bool]) -> bool:
        for v in adj[u]:
            if seen[v]:
                continue
            seen[v] = True
            if owner[v] is None or augment(owner[v], seen):
                owner[v] = u
                match[u] = v
                return True
        return False

    for u in range(len(adj)):
        augment(u, [False] * n_right)
    return match


def hall_violator(adj: Sequence[Sequence[int]], match: Sequence[int | None]) -> tuple[set[int], set[int]]:
    """Left set ``X`` with ``|N(X)| < |X|`` for a maximum matching that is not perfect.

    ``X`` is everything reachable from unmatched left vertices by alternating
    paths; ``N(X)`` is then fully matched into ``X`` minus the free vertices.
    Returns ``(X, N(X))``; both empty when the matching saturates the left side.
    """
    owner = {v: u for u, v in enumerate(match) if v is not None}
    frontier = [u for u, v in enumerate(match) if v is None]
    left, right = set(frontier), set()
    while frontier:
        u = frontier.pop()
        for v in adj[u]:
            if v in right:
                continue
            right.add(v)
            w = owner.get(v)
            if w is not None and w not in left:
                left.add(w)
                frontier.append(w)
    return left, right
