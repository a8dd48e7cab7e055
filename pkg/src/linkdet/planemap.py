"""Combinatorial maps on the sphere, their duals and medial maps.

Edge ``e`` owns the darts ``2e`` and ``2e + 1``; dart ``2e`` sits at the first
endpoint of ``e`` and ``2e + 1`` at the second, and ``d ^ 1`` is the opposite
dart.  ``rotation[d]`` is the next dart counterclockwise around the vertex of
``d``.  Faces are the orbits of ``d -> rotation[d ^ 1]``; each face lies on the
right of the darts of its orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import MapError
from .graph import Edge, SignedMultigraph

BLACK = "black"
WHITE = "white"


def permutation_cycles(perm: Sequence[int]) -> list[list[int]]:
    """Cycles of ``perm``, each starting at its smallest element, ordered by that element."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        cycles.append(cyc)
    return cycles


@dataclass(frozen=True, eq=False)
class PlaneMap:
    """A connected map on the sphere with one sign per edge."""

    vertex_rotations: tuple[tuple[int, ...], ...]
    signs: tuple[int, ...]

    def __eq__(self, other):
        if not isinstance(other, PlaneMap):
            return NotImplemented
        return (self.vertex_rotations, self.signs) == (other.vertex_rotations, other.signs)

    def __hash__(self):
        return hash((self.vertex_rotations, self.signs))

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_rotations)

    @cached_property
    def rotation(self) -> tuple[int, ...]:
        return tuple(rotation_from_cycles(self.vertex_rotations, self.n_darts))

    @property
    def n_darts(self) -> int:
        return sum(len(c) for c in self.vertex_rotations)

    @property
    def n_edges(self) -> int:
        return len(self.rotation) // 2

    @cached_property
    def inverse_rotation(self) -> tuple[int, ...]:
        inv = [0] * self.n_darts
        for d, nxt in enumerate(self.rotation):
            inv[nxt] = d
        return tuple(inv)

    @cached_property
    def dart_vertex(self) -> tuple[int, ...]:
        owner = [0] * self.n_darts
        for v, cyc in enumerate(self.vertex_rotations):
            for d in cyc:
                owner[d] = v
        return tuple(owner)

    @cached_property
    def face_permutation(self) -> tuple[int, ...]:
        rot = self.rotation
        return tuple(rot[d ^ 1] for d in range(self.n_darts))

    @cached_property
    def face_cycles(self) -> list[list[int]]:
        if self.n_darts == 0:
            return [[]]
        return permutation_cycles(self.face_permutation)

    @cached_property
    def dart_face(self) -> tuple[int, ...]:
        owner = [0] * self.n_darts
        for f, cyc in enumerate(self.face_cycles):
            for d in cyc:
                owner[d] = f
        return tuple(owner)

    @property
    def face_count(self) -> int:
        return len(self.face_cycles)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.dart_vertex[2 * e], self.dart_vertex[2 * e + 1]

    @cached_property
    def graph(self) -> SignedMultigraph:
        edges = tuple(Edge(e, *self.endpoints(e), self.signs[e]) for e in range(self.n_edges))
        return SignedMultigraph(self.vertex_count, edges)

    def euler_characteristic(self) -> int:
        return self.vertex_count - self.n_edges + self.face_count

    def with_signs(self, signs: Sequence[int]) -> "PlaneMap":
        return build_plane_map(self.vertex_rotations, signs=signs)

    def relabeled(self, edge_perm: Sequence[int], flips: Sequence[bool] | None = None) -> "PlaneMap":
        """Rename edge ``e`` to ``edge_perm[e]``, optionally swapping its two darts.

        Vertex numbering is unchanged.
        """
        if flips is None:
            flips = [False] * self.n_edges
        dmap = [0] * self.n_darts
        for e in range(self.n_edges):
            t = edge_perm[e]
            dmap[2 * e] = 2 * t + int(flips[e])
            dmap[2 * e + 1] = 2 * t + 1 - int(flips[e])
        signs = [0] * self.n_edges
        for e in range(self.n_edges):
            signs[edge_perm[e]] = self.signs[e]
        return build_plane_map([[dmap[d] for d in cyc] for cyc in self.vertex_rotations],
                               signs=signs)


def rotation_from_cycles(cycles: Sequence[Sequence[int]], n_darts: int) -> list[int]:
    rot = [-1] * n_darts
    for cyc in cycles:
        for i, d in enumerate(cyc):
            if not 0 <= d < n_darts:
                raise MapError(f"dart {d} outside 0..{n_darts - 1}")
            if rot[d] != -1:
                raise MapError(f"dart {d} appears twice in the rotation system")
            rot[d] = cyc[(i + 1) % len(cyc)]
    missing = [d for d, r in enumerate(rot) if r == -1]
    if missing:
        raise MapError(f"darts {missing} are missing from the rotation system")
    return rot


def build_plane_map(vertex_rotations: Sequence[Sequence[int]],
                    edges: Sequence[tuple[int, int]] | None = None,
                    signs: Sequence[int] | None = None) -> PlaneMap:
    """Validate a rotation system and return the spherical map it describes.

    ``vertex_rotations[v]`` lists the darts at vertex ``v`` in counterclockwise
    order.  When ``edges`` is given, dart ``2e`` must sit at ``edges[e][0]``
    and dart ``2e + 1`` at ``edges[e][1]``.  The map must be connected and have
    Euler characteristic 2.
    """
    vertex_count = len(vertex_rotations)
    n_darts = sum(len(c) for c in vertex_rotations)
    if n_darts % 2:
        raise MapError("odd number of darts")
    n_edges = n_darts // 2
    if edges is not None and len(edges) != n_edges:
        raise MapError(f"{len(edges)} edges listed but the rotation has {n_darts} darts")
    rotation_from_cycles(vertex_rotations, n_darts)
    if vertex_count == 0:
        raise MapError("a map needs at least one vertex")
    if n_edges and any(len(c) == 0 for c in vertex_rotations):
        raise MapError("isolated vertex in a map with edges")

    owner = {}
    for v, cyc in enumerate(vertex_rotations):
        for d in cyc:
            owner[d] = v
    if edges is not None:
        for e, (u, v) in enumerate(edges):
            if owner[2 * e] != u or owner[2 * e + 1] != v:
                raise MapError(f"darts of edge {e} are not at its endpoints ({u}, {v})")

    if signs is None:
        signs = [1] * n_edges
    signs = tuple(int(s) for s in signs)
    if len(signs) != n_edges or any(s not in (1, -1) for s in signs):
        raise MapError("need one sign (+1 or -1) per edge")

    m = PlaneMap(tuple(_normalise_cycle(c) for c in vertex_rotations), signs)
    if n_edges and not m.graph.is_connected():
        raise MapError("map is not connected")
    chi = m.euler_characteristic()
    if chi != 2:
        raise MapError(f"map has Euler characteristic {chi} (genus {(2 - chi) // 2}); only spherical maps are supported")
    return m


def _normalise_cycle(cyc) -> tuple[int, ...]:
    if not cyc:
        return ()
    i = cyc.index(min(cyc))
    return tuple(cyc[i:]) + tuple(cyc[:i])


def plane_map_from_graph(g: SignedMultigraph, vertex_rotations: Sequence[Sequence[int]]) -> PlaneMap:
    """Attach a rotation system to ``g``; vertex ``v`` of ``g`` owns ``vertex_rotations[v]``."""
    if g.edge_ids != list(range(g.n_vars)):
        raise MapError("plane maps need dense edge ids 0..n-1 in order")
    if len(vertex_rotations) != g.vertex_count:
        raise MapError(f"rotation lists {len(vertex_rotations)} vertices, graph has {g.vertex_count}")
    owner = {}
    for v, cyc in enumerate(vertex_rotations):
        for d in cyc:
            owner[d] = v
    for e in g.edges:
        if owner.get(2 * e.id) != e.u or owner.get(2 * e.id + 1) != e.v:
            raise MapError(f"darts of edge {e.id} are not at its endpoints ({e.u}, {e.v})")
    return build_plane_map(vertex_rotations, signs=[e.sign for e in g.edges])


def faces(m: PlaneMap) -> list[list[int]]:
    return [list(c) for c in m.face_cycles]


def dual(m: PlaneMap) -> PlaneMap:
    """Planar dual: faces become vertices, edge ``e`` crosses edge ``e``, signs flip.

    The dual rotation is the face permutation itself, so taking the dual twice
    returns exactly the original rotation.
    """
    return build_plane_map(m.face_cycles if m.n_darts else [[]], signs=[-s for s in m.signs])


def same_map_up_to_vertex_labels(a: PlaneMap, b: PlaneMap) -> bool:
    return a.rotation == b.rotation and a.signs == b.signs


# ---------------------------------------------------------------------------
# Medial maps

@dataclass(frozen=True, eq=False)
class MedialMap:
    """Medial map of ``source``: medial vertex ``e`` sits on source edge ``e``.

    Medial edge ``d`` is the corner between source darts ``d`` and
    ``rotation[d]``.  Medial dart ``2d`` sits on the medial vertex of source
    edge ``d // 2`` and ``2d + 1`` on that of ``rotation[d] // 2``.
    """

    source: PlaneMap
    map: PlaneMap
    opposite: tuple[int, ...]
    face_colors: tuple[str, ...]

    @property
    def signs(self) -> tuple[int, ...]:
        """Sign of each medial vertex (crossing), inherited from the source edge."""
        return self.source.signs

    @property
    def black_faces(self) -> list[int]:
        return [f for f, c in enumerate(self.face_colors) if c == BLACK]

    @property
    def white_faces(self) -> list[int]:
        return [f for f, c in enumerate(self.face_colors) if c == WHITE]

    def crossing_darts(self, v: int) -> list[int]:
        """Darts at medial vertex ``v`` in counterclockwise order NE, NW, SW, SE.

        Taking the source edge as pointing east, the first two darts border the
        face to its north, the middle two its first endpoint and the last and
        first its second endpoint.
        """
        return list(self._crossing_order[v])

    @cached_property
    def _crossing_order(self):
        return tuple(_crossing_darts(self.source, e) for e in range(self.source.n_edges))


def _crossing_darts(m: PlaneMap, e: int) -> tuple[int, int, int, int]:
    d0, d1 = 2 * e, 2 * e + 1
    inv = m.inverse_rotation
    return (2 * inv[d1] + 1, 2 * d0, 2 * inv[d0] + 1, 2 * d1)


def medial(m: PlaneMap) -> MedialMap:
    """Build the 4-regular medial map with its canonical checkerboard colouring.

    Black faces correspond to vertices of ``m`` and white faces to faces of
    ``m``; medial vertex ``e`` inherits the sign of edge ``e``.
    """
    if m.n_edges == 0:
        raise MapError("the medial map of an edgeless map is empty")
    order = [_crossing_darts(m, e) for e in range(m.n_edges)]
    med = build_plane_map([list(c) for c in order])
    opposite = [0] * med.n_darts
    for quad in order:
        for i in range(4):
            opposite[quad[i]] = quad[(i + 2) % 4]
    # A medial face has the source vertex of its corners on its right exactly
    # when it is traced by odd darts.
    colors = []
    for cyc in med.face_cycles:
        parities = {d & 1 for d in cyc}
        if len(parities) != 1:
            raise AssertionError("medial face mixes corner orientations")
        colors.append(BLACK if parities == {1} else WHITE)
    if colors.count(BLACK) != m.vertex_count or colors.count(WHITE) != m.face_count:
        raise AssertionError("checkerboard colouring does not match vertices and faces")
    return MedialMap(m, med, tuple(opposite), tuple(colors))


def _count_strands(next_dart: Sequence[int]) -> int:
    # Each closed curve is traced once in each direction.
    return len(permutation_cycles(next_dart)) // 2


def link_components(m: PlaneMap | MedialMap) -> int:
    """Number of closed curves in the link diagram, by going straight through every crossing."""
    med = m if isinstance(m, MedialMap) else (medial(m) if m.n_edges else None)
    if med is None:
        return 1
    opp = med.opposite
    return _count_strands([opp[x ^ 1] for x in range(med.map.n_darts)])


def trace_state_circles(med: MedialMap, state: int) -> int:
    """Circles left after smoothing every crossing according to ``state``.

    Bit ``e`` set means crossing ``e`` is smoothed so that the two black
    regions at its ends merge (the Tait-graph edge is contracted); clear means
    the two white regions merge (the edge is deleted).
    """
    partner = [0] * med.map.n_darts
    for e in range(med.source.n_edges):
        ne, nw, sw, se = med.crossing_darts(e)
        if state >> e & 1:
            pairs = ((ne, nw), (sw, se))
        else:
            pairs = ((ne, se), (nw, sw))
        for a, b in pairs:
            partner[a] = b
            partner[b] = a
    return _count_strands([partner[x ^ 1] for x in range(med.map.n_darts)])
