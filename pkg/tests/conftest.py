"""Shared fixtures and the independent rank oracle.

The oracle computes matrix rank by modular elimination over two large
primes, an implementation path disjoint from the package's rational
elimination; kernel dimensions asserted in the tests are cross-checked
through it.
"""

from __future__ import annotations

import importlib.util
import os
import sys

import pytest

TOOLS_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "tools")

ORACLE_PRIMES = (1_000_000_007, 998_244_353)


def rank_mod_p(rows, p):
    m = [[x % p for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        pivot = None
        for i in range(rank, len(m)):
            if m[i][c] % p:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def oracle_kernel_dim(graph):
    """Kernel dimension of the edge-sum constraints by modular elimination."""
    from orbitharmonics.hypergraph import constraint_matrix

    rows = constraint_matrix(graph)
    n = len(graph.vertices)
    dims = {n - rank_mod_p(rows, p) for p in ORACLE_PRIMES}
    assert len(dims) == 1, "oracle primes disagree"
    return dims.pop()


@pytest.fixture(scope="session")
def catalog():
    from orbitharmonics.catalog import default_catalog

    return default_catalog()


@pytest.fixture(scope="session")
def clans_module():
    path = os.path.join(TOOLS_DIR, "clans.py")
    spec = importlib.util.spec_from_file_location("clans", path)
    module = importlib.util.module_from_spec(spec)
    sys.modules.setdefault("clans", module)
    spec.loader.exec_module(module)
    return module
