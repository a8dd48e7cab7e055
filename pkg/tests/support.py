"""Shared fixtures and brute-force oracles for the test suite."""

from __future__ import annotations

import itertools
import random

from linkdet.generators import random_corpus, random_plane_map
from linkdet.graph import SignedMultigraph
from linkdet.planemap import PlaneMap, build_plane_map
from linkdet.unionfind import UnionFind

# Filled by test_acceptance, printed by the terminal summary hook in conftest.
ACCEPTANCE_LINES: list[str] = []

TRIANGLE = SignedMultigraph.from_pairs(3, [(0, 1), (1, 2), (2, 0)])
P2 = SignedMultigraph.from_pairs(2, [(0, 1), (0, 1)])
ISTHMUS = SignedMultigraph.from_pairs(2, [(0, 1)])
LOOP = SignedMultigraph.from_pairs(1, [(0, 0)])


def corpus(seed: int, count: int, max_edges: int, min_edges: int = 1) -> list[PlaneMap]:
    return random_corpus(seed, count, max_edges=max_edges, min_edges=min_edges)


def wheel(spokes: int) -> PlaneMap:
    """Hub 0 and rim 1..spokes; spoke j is edge j, rim edge j is spokes + j."""
    m = spokes
    rotations = [[2 * j for j in range(m)]]
    for j in range(m):
        rim_out = 2 * (m + j)              # rim edge from rim vertex j to j + 1
        rim_in = 2 * (m + (j - 1) % m) + 1
        rotations.append([2 * j + 1, rim_in, rim_out])
    return build_plane_map(rotations)


def dense_map(rng: random.Random, n_edges: int) -> PlaneMap:
    return random_plane_map(rng, n_edges, pendant=0.5, loop=0.0, simple_chords=True)


def brute_spanning_trees(g: SignedMultigraph) -> list[int]:
    """Every edge subset that is acyclic, connected and spanning, by exhaustion."""
    out = []
    need = g.vertex_count - 1
    for mask in range(1 << g.n_vars):
        if mask.bit_count() != need:
            continue
        uf = UnionFind(g.vertex_count)
        ok = True
        for e in g.edges:
            if mask >> e.id & 1 and not uf.union(e.u, e.v):
                ok = False
                break
        if ok and uf.components == 1:
            out.append(mask)
    return out


def map_automorphisms(m: PlaneMap, reversing: bool) -> list[tuple[int, ...]]:
    """All dart permutations commuting with the opposite-dart involution and
    sending the rotation to itself (or to its inverse when ``reversing``).

    A map automorphism of a connected map is fixed by the image of one dart.
    """
    n = m.n_darts
    rot, inv = m.rotation, m.inverse_rotation
    target_rot = inv if reversing else rot
    found = []
    for x in range(n):
        tau = [-1] * n
        tau[0] = x
        stack = [0]
        ok = True
        while stack and ok:
            d = stack.pop()
            for a, b in ((d ^ 1, tau[d] ^ 1), (rot[d], target_rot[tau[d]]), (inv[d], rot[tau[d]] if reversing else inv[tau[d]])):
                if tau[a] == -1:
                    tau[a] = b
                    stack.append(a)
                elif tau[a] != b:
                    ok = False
                    break
        if ok and sorted(tau) == list(range(n)):
            found.append(tuple(tau))
    return found


def all_rotation_systems(vertex_darts: list[list[int]]):
    """Every rotation system on the given dart sets (first dart kept in front)."""
    choices = [[[c[0], *p] for p in itertools.permutations(c[1:])] if c else [[]] for c in vertex_darts]
    yield from itertools.product(*choices)
