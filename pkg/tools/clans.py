"""Offline curation helper: orbit hypergraphs of the inner involutions of
odd and even special linear groups via signed-matching combinatorics.

Orbits of the upper triangular subgroup on the space of (p,q)-decompositions
are parameterized by strings over {+, -} with k disjoint matched pairs
(p-k plus signs, q-k minus signs).  The length of a string is the sum over
matched pairs (i < j) of (j - i) minus the number of pairs (s < t) with
i < s < j < t; the rank-one moves at adjacent positions (i, i+1) are:

  equal signs           -> singleton edge (kind G)
  opposite signs        -> triple edge with the freshly matched string (kind T)
  pair matched at (i,i+1) -> the same triple edge
  sign next to pair end -> swap edge (kind U)
  ends of two pairs     -> swap edge (kind U)

This file is not part of the installed package; it exists so the shipped
catalog data for the rank-4 entry can be regenerated and audited.  Its
output is validated against the drawn rank-2 graph before being trusted.
"""

from __future__ import annotations

import itertools

PLUS = "+"
MINUS = "-"
PAIR_LETTERS = "abcdefgh"


def canonical(clan: tuple) -> tuple:
    """Renumber matched pairs by first occurrence."""
    mapping = {}
    out = []
    for tok in clan:
        if tok in (PLUS, MINUS):
            out.append(tok)
        else:
            if tok not in mapping:
                mapping[tok] = PAIR_LETTERS[len(mapping)]
            out.append(mapping[tok])
    return tuple(out)


def all_clans(p: int, q: int) -> list[tuple]:
    n = p + q
    out = set()
    for k in range(min(p, q) + 1):
        for positions in itertools.combinations(range(n), 2 * k):
            for matching in _matchings(list(positions)):
                rest = [i for i in range(n) if i not in positions]
                for plus_pos in itertools.combinations(rest, p - k):
                    clan = [MINUS] * n
                    for idx, (a, b) in enumerate(matching):
                        clan[a] = clan[b] = PAIR_LETTERS[idx]
                    for i in plus_pos:
                        clan[i] = PLUS
                    out.add(canonical(tuple(clan)))
    return sorted(out)


def _matchings(positions: list) -> list:
    if not positions:
        return [[]]
    first = positions[0]
    out = []
    for j in range(1, len(positions)):
        partner = positions[j]
        rest = positions[1:j] + positions[j + 1:]
        for sub in _matchings(rest):
            out.append([(first, partner)] + sub)
    return out


def pairs_of(clan: tuple) -> list[tuple[int, int]]:
    where: dict = {}
    out = []
    for i, tok in enumerate(clan):
        if tok in (PLUS, MINUS):
            continue
        if tok in where:
            out.append((where[tok], i))
        else:
            where[tok] = i
    return out


def clan_length(clan: tuple) -> int:
    ps = pairs_of(clan)
    total = 0
    for (i, j) in ps:
        crossings = sum(1 for (s, t) in ps if i < s < j < t)
        total += (j - i) - crossings
    return total


def _swap(clan: tuple, i: int) -> tuple:
    out = list(clan)
    out[i], out[i + 1] = out[i + 1], out[i]
    return canonical(tuple(out))


def edge_at(clan: tuple, i: int):
    """Members and kind of the rank-one move edge at positions (i, i+1)."""
    c, d = clan[i], clan[i + 1]
    signs = (PLUS, MINUS)
    if c in signs and d in signs:
        if c == d:
            return frozenset({clan}), "G"
        base = list(clan)
        fresh = "z"
        base[i] = base[i + 1] = fresh
        paired = canonical(tuple(base))
        other = list(clan)
        other[i], other[i + 1] = d, c
        return frozenset({clan, canonical(tuple(other)), paired}), "T"
    if c not in signs and c == d:
        lo = list(clan)
        hi = list(clan)
        lo[i], lo[i + 1] = PLUS, MINUS
        hi[i], hi[i + 1] = MINUS, PLUS
        return frozenset({clan, canonical(tuple(lo)), canonical(tuple(hi))}), "T"
    return frozenset({clan, _swap(clan, i)}), "U"


def clan_hypergraph_data(p: int, q: int) -> dict:
    """Hypergraph JSON dict (vertices ranked by length, labeled edges)."""
    clans = all_clans(p, q)
    n = p + q
    vertices = [{"id": "".join(c), "rank": clan_length(c)} for c in clans]
    edges = []
    seen = set()
    for clan in clans:
        for i in range(n - 1):
            members, kind = edge_at(clan, i)
            key = (i, members)
            if key in seen:
                continue
            seen.add(key)
            edges.append({
                "label": f"s{i + 1}",
                "members": sorted("".join(m) for m in members),
                "type": kind,
            })
    edges.sort(key=lambda e: (e["label"], e["members"]))
    return {
        "vertices": sorted(vertices, key=lambda v: v["id"]),
        "labels": [f"s{i + 1}" for i in range(n - 1)],
        "edges": edges,
        "mode": "algebraically_closed",
    }
