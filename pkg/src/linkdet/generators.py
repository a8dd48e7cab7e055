"""Random connected spherical maps for property tests and benchmarks."""

from __future__ import annotations

import random

from .planemap import PlaneMap, build_plane_map, permutation_cycles, rotation_from_cycles


def _insert_after(rotations, owner, anchor, dart):
    v = owner[anchor]
    cyc = rotations[v]
    cyc.insert(cyc.index(anchor) + 1, dart)
    owner[dart] = v


def random_plane_map(rng: random.Random, n_edges: int, pendant: float = 0.35,
                     loop: float = 0.08, signed: bool = True,
                     simple_chords: bool = False) -> PlaneMap:
    """Grow a spherical map one edge at a time.

    Each new edge is a pendant edge to a fresh vertex, a loop in a corner, or
    a chord between two corners of one face, so every step keeps the map on
    the sphere.  Chords between corners at the same vertex give loops and
    chords parallel to existing edges give multi-edges.  With
    ``simple_chords`` a chord is redrawn until its corners lie at different
    vertices (when the face allows it), which gives denser tree sets.
    """
    rotations: list[list[int]] = [[]]
    owner: dict[int, int] = {}
    for i in range(n_edges):
        a, b = 2 * i, 2 * i + 1
        if i == 0:
            if rng.random() < loop:
                rotations[0] = [a, b]
                owner[a] = owner[b] = 0
            else:
                rotations[0] = [a]
                rotations.append([b])
                owner[a], owner[b] = 0, 1
            continue
        darts = 2 * i
        r = rng.random()
        if r < pendant:
            _insert_after(rotations, owner, rng.randrange(darts), a)
            rotations.append([b])
            owner[b] = len(rotations) - 1
        elif r < pendant + loop:
            y = rng.randrange(darts)
            _insert_after(rotations, owner, y, a)
            _insert_after(rotations, owner, a, b)
        else:
            rot = rotation_from_cycles(rotations, darts)
            faces = permutation_cycles([rot[d ^ 1] for d in range(darts)])
            face = rng.choice(faces)
            # The corner entered by face dart x lies just after dart x ^ 1.
            y1 = rng.choice(face) ^ 1
            y2 = rng.choice(face) ^ 1
            if simple_chords:
                others = [x ^ 1 for x in face if owner[x ^ 1] != owner[y1]]
                if others:
                    y2 = rng.choice(others)
            _insert_after(rotations, owner, y1, a)
            _insert_after(rotations, owner, a if y2 == y1 else y2, b)
    signs = [rng.choice((1, -1)) for _ in range(n_edges)] if signed else None
    return build_plane_map(rotations, signs=signs)


def random_corpus(seed: int, count: int, max_edges: int = 12, min_edges: int = 1) -> list[PlaneMap]:
    rng = random.Random(seed)
    return [random_plane_map(rng, rng.randint(min_edges, max_edges)) for _ in range(count)]
