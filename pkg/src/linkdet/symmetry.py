"""Antipodal involutions of medial maps and the determinant of symmetric links.

An antipodal involution is given by its action on the darts of the medial
map.  The antipodal map of the sphere reverses orientation, so a dart
permutation ``t`` realises it combinatorially when ``t`` commutes with the
opposite-dart involution and conjugates the rotation to its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .errors import PreconditionError
from .fh import det_via_fh
from .graph import SignedMultigraph, matrix_tree_signed, signed_tree_count, spanning_tree_masks
from .kauffman import bracket_at_primitive8, det_via_bracket
from .planemap import MedialMap, PlaneMap, build_plane_map, link_components, medial

PRESERVING = "preserving"
REVERSING = "reversing"
MIXED = "mixed"


@dataclass(frozen=True)
class MapInvolution:
    """A dart permutation of a medial map with the vertex and edge actions it induces.

    ``vertices[v]`` is the image of medial vertex ``v`` (equivalently of edge
    ``v`` of the Tait graph) and ``edges[e]`` the image of medial edge ``e``.
    """

    darts: tuple[int, ...]
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @classmethod
    def from_darts(cls, med: MedialMap, darts: Sequence[int]) -> "MapInvolution":
        darts = tuple(int(d) for d in darts)
        n = med.map.n_darts
        if len(darts) != n or sorted(darts) != list(range(n)):
            raise ValueError(f"dart map must be a permutation of 0..{n - 1}")
        dv = med.map.dart_vertex
        vertices = [-1] * med.map.vertex_count
        for d, img in enumerate(darts):
            target = dv[img]
            if vertices[dv[d]] not in (-1, target):
                raise ValueError(f"darts at medial vertex {dv[d]} go to different vertices")
            vertices[dv[d]] = target
        edges = [-1] * med.map.n_edges
        for d, img in enumerate(darts):
            if edges[d >> 1] not in (-1, img >> 1):
                raise ValueError(f"the two darts of medial edge {d >> 1} go to different edges")
            edges[d >> 1] = img >> 1
        return cls(darts, tuple(vertices), tuple(edges))

    @classmethod
    def from_tait(cls, med: MedialMap, vertex_perm: Sequence[int],
                  edge_perm: Sequence[int]) -> "MapInvolution":
        """Lift a vertex and edge permutation of the Tait graph to the medial map.

        Such an involution maps black faces to black faces, so it is always
        colour-preserving.  Loops, whose two darts share a vertex, are oriented
        so that the lifted map reverses the rotation when possible.
        """
        src = med.source
        nv, ne = src.vertex_count, src.n_edges
        if sorted(vertex_perm) != list(range(nv)) or sorted(edge_perm) != list(range(ne)):
            raise ValueError("vertex and edge maps must be permutations")
        dv = src.dart_vertex
        choices = []
        for d in range(src.n_darts):
            e2 = edge_perm[d >> 1]
            options = [x for x in (2 * e2, 2 * e2 + 1) if dv[x] == vertex_perm[dv[d]]]
            if not options:
                raise ValueError(f"edge {d >> 1} cannot follow vertex {dv[d]} to edge {e2}")
            choices.append(options)
        loops = [e for e in range(ne) if len(choices[2 * e]) == 2]
        best = None
        for flips in product((0, 1), repeat=len(loops)):
            tau = [opts[0] for opts in choices]
            for e, f in zip(loops, flips):
                tau[2 * e], tau[2 * e + 1] = choices[2 * e][f], choices[2 * e][1 - f]
            if best is None:
                best = tau
            if _reverses(src, tau):
                best = tau
                break
        inv = src.inverse_rotation
        darts = [0] * med.map.n_darts
        for d in range(src.n_darts):
            y = inv[best[d]]
            darts[2 * d] = 2 * y + 1
            darts[2 * d + 1] = 2 * y
        return cls.from_darts(med, darts)


def _reverses(m: PlaneMap, tau: Sequence[int]) -> bool:
    rot, inv = m.rotation, m.inverse_rotation
    return all(tau[d ^ 1] == tau[d] ^ 1 and tau[rot[d]] == inv[tau[d]] for d in range(m.n_darts))


def _action(pairs) -> str:
    kinds = {a == b for a, b in pairs}
    if kinds == {True}:
        return PRESERVING
    if kinds == {False}:
        return REVERSING
    return MIXED


@dataclass(frozen=True)
class SymmetryReport:
    is_automorphism: bool
    is_involution: bool
    fixed_point_free: bool
    sign_action: str
    face_color_action: str
    component_count: int
    vertex_count_parity: str
    black_face_count: int
    fixed: dict = field(default_factory=dict)
    violations: tuple[str, ...] = ()

    @property
    def is_antipodal(self) -> bool:
        return self.is_automorphism and self.is_involution and self.fixed_point_free

    def to_json(self) -> dict:
        return {
            "is_automorphism": self.is_automorphism,
            "is_involution": self.is_involution,
            "fixed_point_free": self.fixed_point_free,
            "sign_action": self.sign_action,
            "face_color_action": self.face_color_action,
            "component_count": self.component_count,
            "vertex_count_parity": self.vertex_count_parity,
            "black_face_count": self.black_face_count,
            "fixed": self.fixed,
            "violations": list(self.violations),
        }


def face_action(med: MedialMap, inv: MapInvolution) -> list[int] | None:
    """Image of each medial face, or None if some face is not sent to a single face."""
    m = med.map
    df = m.dart_face
    images = []
    for cyc in m.face_cycles:
        targets = {df[inv.darts[x] ^ 1] for x in cyc}
        if len(targets) != 1:
            return None
        images.append(targets.pop())
    return images


def analyze_involution(med: MedialMap, inv: MapInvolution) -> SymmetryReport:
    m = med.map
    n = m.n_darts
    t = inv.darts
    rot, irot = m.rotation, m.inverse_rotation
    is_automorphism = all(t[x ^ 1] == t[x] ^ 1 and t[rot[x]] == irot[t[x]] for x in range(n))
    is_involution = all(t[t[x]] == x for x in range(n))

    faces = face_action(med, inv)
    fixed = {
        "vertices": [v for v, w in enumerate(inv.vertices) if v == w],
        "edges": [e for e, f in enumerate(inv.edges) if e == f],
        "faces": [] if faces is None else [f for f, g in enumerate(faces) if f == g],
    }
    fixed_point_free = faces is not None and not any(fixed.values())

    signs = med.signs
    sign_action = _action((signs[v], signs[w]) for v, w in enumerate(inv.vertices))
    if faces is None:
        color_action = MIXED
    else:
        colors = med.face_colors
        color_action = _action((colors[f], colors[g]) for f, g in enumerate(faces))

    violations = []
    if is_automorphism and is_involution and fixed_point_free and color_action == MIXED:
        violations.append("face colour action of a fixed-point-free automorphism is mixed")
    black = len(med.black_faces)
    if is_automorphism and fixed_point_free and color_action == PRESERVING and black % 2:
        violations.append("colour-preserving antipodal map with an odd number of black faces")

    return SymmetryReport(
        is_automorphism=is_automorphism,
        is_involution=is_involution,
        fixed_point_free=fixed_point_free,
        sign_action=sign_action,
        face_color_action=color_action,
        component_count=link_components(med),
        vertex_count_parity="even" if med.source.vertex_count % 2 == 0 else "odd",
        black_face_count=black,
        fixed=fixed,
        violations=tuple(violations),
    )


ADMISSIBLE = {(PRESERVING, REVERSING), (REVERSING, PRESERVING)}


def is_centrally_symmetric_presentation(med: MedialMap, inv: MapInvolution) -> bool:
    """Fixed-point-free antipodal involution that preserves colours and flips signs, or vice versa."""
    r = analyze_involution(med, inv)
    return r.is_antipodal and (r.face_color_action, r.sign_action) in ADMISSIBLE


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    details: dict

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details}


def check_parity_law(med: MedialMap, inv: MapInvolution) -> Verdict:
    """Component count is even exactly when the involution preserves face colours."""
    r = analyze_involution(med, inv)
    if not r.is_antipodal:
        raise PreconditionError("parity law needs a fixed-point-free involutive automorphism")
    even = r.component_count % 2 == 0
    preserving = r.face_color_action == PRESERVING
    return Verdict("parity-law", even == preserving and r.face_color_action != MIXED, {
        "components": r.component_count,
        "components_even": even,
        "face_color_action": r.face_color_action,
    })


def check_even_component_determinant(g: SignedMultigraph, med: MedialMap,
                                     inv: MapInvolution) -> Verdict:
    """Even component count forces determinant 0, witnessed by a sign-flipping tree involution."""
    if g.edges != med.source.graph.edges or g.vertex_count != med.source.vertex_count:
        raise PreconditionError("graph does not match the source of the medial map")
    r = analyze_involution(med, inv)
    if not (r.is_antipodal and (r.face_color_action, r.sign_action) in ADMISSIBLE):
        raise PreconditionError("not a centrally symmetric presentation")
    if r.component_count % 2:
        raise PreconditionError(f"the link has {r.component_count} components, an odd number")

    dets = {
        "trees": abs(signed_tree_count(g)),
        "matrix": abs(matrix_tree_signed(g)),
        "fh": det_via_fh(g),
        "bracket": det_via_bracket(g),
    }
    if len(g.edges) <= 16:
        dets["state_sum"] = bracket_at_primitive8(g).abs_int()

    edge_map = inv.vertices
    signs = g.signs
    trees = spanning_tree_masks(g)
    tree_set = set(trees)
    failures = []
    for t in trees:
        image = 0
        sign_t = sign_img = 1
        for e in range(g.n_vars):
            if t >> e & 1:
                image |= 1 << edge_map[e]
                sign_t *= signs[e]
                sign_img *= signs[edge_map[e]]
        if image not in tree_set:
            failures.append(f"image of tree {t:#x} is not a tree")
        elif sign_img != -sign_t:
            failures.append(f"tree {t:#x} and its image have the same sign")
    vertex_even = g.vertex_count % 2 == 0
    passed = all(v == 0 for v in dets.values()) and vertex_even and not failures
    return Verdict("even-component-determinant", passed, {
        "determinants": dets,
        "vertex_count": g.vertex_count,
        "trees": len(trees),
        "failures": failures,
    })


# ---------------------------------------------------------------------------
# Symmetric families

@dataclass(frozen=True)
class SymmetricInstance:
    name: str
    plane_map: PlaneMap
    medial: MedialMap
    involution: MapInvolution

    @property
    def graph(self) -> SignedMultigraph:
        return self.plane_map.graph


def parallel_family(k: int) -> SymmetricInstance:
    """Two poles joined by ``2k`` meridians; the first ``k`` edges positive, the rest negative.

    The antipodal map swaps the poles and sends meridian ``j`` to ``j + k``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    m = 2 * k
    north = [2 * j for j in range(m)]
    south = [2 * j + 1 for j in reversed(range(m))]
    signs = [1] * k + [-1] * k
    pm = build_plane_map([north, south], signs=signs)
    med = medial(pm)
    inv = MapInvolution.from_tait(med, [1, 0], [(j + k) % m for j in range(m)])
    return SymmetricInstance(f"parallel-{m}", pm, med, inv)


def cycle_family(k: int, signs: Sequence[int] | None = None) -> SymmetricInstance:
    """The ``2k``-cycle on the equator with the half-turn-and-reflect involution.

    Default signs are ``+`` on the first ``k`` edges and ``-`` on the others,
    so opposite edges carry opposite signs.
    """
    if k < 1:
        raise ValueError("k must be positive")
    m = 2 * k
    rotations = [[2 * j, 2 * ((j - 1) % m) + 1] for j in range(m)]
    if signs is None:
        signs = [1] * k + [-1] * k
    pm = build_plane_map(rotations, edges=[(j, (j + 1) % m) for j in range(m)], signs=signs)
    med = medial(pm)
    shift = [(j + k) % m for j in range(m)]
    inv = MapInvolution.from_tait(med, shift, shift)
    return SymmetricInstance(f"cycle-{m}", pm, med, inv)
