"""Randomized closed-mode hypergraphs that satisfy the type axioms.

Graphs are assembled from the rank-one building blocks that actually occur
(point, torus triple, normalizer pair, group pair, and the four-cycle),
combined by products and quotients by internal symmetries.  Both
operations preserve the dimension theorem and support-function
consistency, so the output behaves like a genuine orbit hypergraph rather
than an arbitrary axiom-satisfying edge system.
"""

from __future__ import annotations

import random

from .hypergraph import (
    OrbitHypergraph,
    make_hypergraph,
    product,
    quotient_by_automorphisms,
)


def atom_point(label: str = "a") -> OrbitHypergraph:
    return make_hypergraph([("v", 0)], [(label, {"v"}, "G")])


def atom_torus_triple(label: str = "a") -> OrbitHypergraph:
    return make_hypergraph([("c1", 0), ("c2", 0), ("o", 1)],
                           [(label, {"c1", "c2", "o"}, "T")])


def atom_normalizer_pair(label: str = "a") -> OrbitHypergraph:
    return make_hypergraph([("c", 0), ("o", 1)], [(label, {"c", "o"}, "N")])


def atom_group_pair(labels=("a", "b")) -> OrbitHypergraph:
    la, lb = labels
    return make_hypergraph([("e", 0), ("s", 1)],
                           [(la, {"e", "s"}, "U"), (lb, {"e", "s"}, "U")])


def atom_four_cycle(labels=("a", "b")) -> OrbitHypergraph:
    la, lb = labels
    return make_hypergraph(
        [("w", 2), ("x", 1), ("y", 1), ("z", 0)],
        [(la, {"w", "x"}, "U"), (la, {"y", "z"}, "N"),
         (lb, {"w", "y"}, "U"), (lb, {"x", "z"}, "N")])


_ATOMS = (
    ("point", atom_point, 1, False),
    ("triple", atom_torus_triple, 1, True),
    ("pair", atom_normalizer_pair, 1, False),
    ("group", atom_group_pair, 2, False),
    ("cycle", atom_four_cycle, 2, False),
)


def random_valid_hypergraph(rng: random.Random) -> OrbitHypergraph:
    """One random closed-mode hypergraph with 1 to 3 factors.

    With some probability a torus-triple factor is folded by its closed
    swap, which turns its edge into a normalizer pair inside the product.
    """
    k = rng.randint(1, 3)
    graph = None
    swap_factors: list[int] = []
    for idx in range(k):
        name, build, nlabels, swappable = _ATOMS[rng.randrange(len(_ATOMS))]
        factor = build(f"f{idx}a") if nlabels == 1 else build((f"f{idx}a", f"f{idx}b"))
        graph = factor if graph is None else product(graph, factor)
        if swappable and rng.random() < 0.5:
            swap_factors.append(idx)
    for i in swap_factors:
        flip = {"c1": "c2", "c2": "c1"}
        mapping = {}
        for v in graph.vertices:
            parts = v.split(",")
            parts[i] = flip.get(parts[i], parts[i])
            mapping[v] = ",".join(parts)
        graph = quotient_by_automorphisms(graph, [mapping])
    return graph
