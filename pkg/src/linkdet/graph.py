"""Edge-signed multigraphs and signed spanning-tree counting.

Edges carry immutable integer ids.  An id is simultaneously the index of the
edge in a signature vector, the variable index of the FH polynomial and the bit
position in every edge-subset bitmask, so deletion and contraction never
renumber edges.  Vertices, on the other hand, are renumbered densely after a
contraction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import DisconnectedGraphError
from .unionfind import UnionFind


class EdgeKind(enum.Enum):
    LOOP = "loop"
    ISTHMUS = "isthmus"
    ORDINARY = "ordinary"


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    sign: int = 1

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class SignedMultigraph:
    """A multigraph with one sign in {+1, -1} per edge.

    ``n_vars`` is the size of the edge-id universe.  It defaults to the number
    of edges and is inherited by every minor, so a minor's edges still index
    into signatures and polynomials of the original graph.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    n_vars: int = field(default=-1)

    def __post_init__(self):
        edges = tuple(self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n_vars < 0:
            object.__setattr__(self, "n_vars", len(edges))
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        seen = set()
        for e in edges:
            if not 0 <= e.id < self.n_vars:
                raise ValueError(f"edge id {e.id} outside 0..{self.n_vars - 1}")
            if e.id in seen:
                raise ValueError(f"duplicate edge id {e.id}")
            seen.add(e.id)
            if not (0 <= e.u < self.vertex_count and 0 <= e.v < self.vertex_count):
                raise ValueError(f"edge {e.id} has an endpoint outside 0..{self.vertex_count - 1}")
            if e.sign not in (1, -1):
                raise ValueError(f"edge {e.id} has sign {e.sign!r}, expected +1 or -1")

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs: Sequence[tuple[int, int]],
                   signs: Sequence[int] | None = None) -> "SignedMultigraph":
        """Build a graph whose edge ``i`` joins ``pairs[i]``."""
        if signs is None:
            signs = [1] * len(pairs)
        if len(signs) != len(pairs):
            raise ValueError("one sign per edge is required")
        edges = tuple(Edge(i, u, v, s) for i, ((u, v), s) in enumerate(zip(pairs, signs)))
        return cls(vertex_count, edges)

    def __len__(self):
        return len(self.edges)

    @property
    def edge_ids(self) -> list[int]:
        return [e.id for e in self.edges]

    def edge(self, eid: int) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise KeyError(f"unknown edge id {eid}")

    @property
    def signs(self) -> tuple[int, ...]:
        """Signature vector indexed by edge id; ids not present read as +1."""
        out = [1] * self.n_vars
        for e in self.edges:
            out[e.id] = e.sign
        return tuple(out)

    def with_signs(self, signs: Sequence[int]) -> "SignedMultigraph":
        signs = resolve_signature(self, signs)
        return SignedMultigraph(self.vertex_count,
                                tuple(Edge(e.id, e.u, e.v, signs[e.id]) for e in self.edges),
                                self.n_vars)

    def negated(self) -> "SignedMultigraph":
        return self.with_signs([-s for s in self.signs])

    def is_connected(self) -> bool:
        return component_count(self) <= 1


# ---------------------------------------------------------------------------
# Signatures and bitmasks

def signs_to_mask(signs: Sequence[int]) -> int:
    """Bitmask with bit ``i`` set exactly when ``signs[i] == -1``."""
    mask = 0
    for i, s in enumerate(signs):
        if s == -1:
            mask |= 1 << i
        elif s != 1:
            raise ValueError(f"sign {s!r} at position {i} is not +1 or -1")
    return mask


def mask_to_signs(mask: int, n: int) -> tuple[int, ...]:
    return tuple(-1 if mask >> i & 1 else 1 for i in range(n))


def mask_to_ids(mask: int) -> list[int]:
    ids = []
    i = 0
    while mask:
        if mask & 1:
            ids.append(i)
        mask >>= 1
        i += 1
    return ids


def ids_to_mask(ids) -> int:
    mask = 0
    for i in ids:
        mask |= 1 << i
    return mask


def resolve_signature(g: SignedMultigraph, signs: Sequence[int] | None) -> tuple[int, ...]:
    """Validate an explicit signature, or fall back to the graph's own signs."""
    if signs is None:
        return g.signs
    signs = tuple(int(s) for s in signs)
    if len(signs) != g.n_vars:
        raise ValueError(f"signature has length {len(signs)}, expected {g.n_vars}")
    for s in signs:
        if s not in (1, -1):
            raise ValueError(f"sign {s!r} is not +1 or -1")
    return signs


def is_alternating(signs: Sequence[int]) -> bool:
    """True when every sign agrees (the empty signature counts as alternating)."""
    return len(set(signs)) <= 1


# ---------------------------------------------------------------------------
# Minors

def delete(g: SignedMultigraph, eid: int) -> SignedMultigraph:
    g.edge(eid)
    return SignedMultigraph(g.vertex_count, tuple(e for e in g.edges if e.id != eid), g.n_vars)


def contract(g: SignedMultigraph, eid: int) -> SignedMultigraph:
    """Identify the endpoints of ``eid`` and drop it.

    The surviving vertex is the smaller endpoint; vertices above the removed
    one shift down by one.  Edges parallel to ``eid`` become loops.
    """
    target = g.edge(eid)
    if target.is_loop:
        raise ValueError(f"cannot contract loop {eid}")
    keep, gone = sorted((target.u, target.v))

    def relabel(x):
        if x == gone:
            return keep
        return x - 1 if x > gone else x

    edges = tuple(Edge(e.id, relabel(e.u), relabel(e.v), e.sign) for e in g.edges if e.id != eid)
    return SignedMultigraph(g.vertex_count - 1, edges, g.n_vars)


def component_count(g: SignedMultigraph, skip: int | None = None) -> int:
    uf = UnionFind(g.vertex_count)
    for e in g.edges:
        if e.id != skip:
            uf.union(e.u, e.v)
    return uf.components


def classify_edge(g: SignedMultigraph, eid: int) -> EdgeKind:
    e = g.edge(eid)
    if e.is_loop:
        return EdgeKind.LOOP
    if component_count(g, skip=eid) > component_count(g):
        return EdgeKind.ISTHMUS
    return EdgeKind.ORDINARY


def require_connected(g: SignedMultigraph) -> None:
    if g.vertex_count == 0 or not g.is_connected():
        raise DisconnectedGraphError(
            f"graph with {g.vertex_count} vertices and {len(g.edges)} edges is not connected")


# ---------------------------------------------------------------------------
# Spanning trees

def tree_sort_key(mask: int) -> tuple[int, ...]:
    return tuple(mask_to_ids(mask))


def spanning_tree_masks(g: SignedMultigraph) -> list[int]:
    """All spanning trees as edge bitmasks, in lexicographic order of their id lists."""
    require_connected(g)
    n_vertices = g.vertex_count
    need = n_vertices - 1
    if need == 0:
        return [0]
    edges = sorted((e.id, e.u, e.v) for e in g.edges if not e.is_loop)
    m = len(edges)
    out = []

    # label[v] is the component id of v among the chosen edges; merging
    # relabels, which is cheap because desk-scale graphs have few vertices.
    def spans(i, label):
        uf = UnionFind(n_vertices)
        for x in range(n_vertices):
            uf.union(x, label[x])
        for _, u, v in edges[i:]:
            if uf.union(u, v) and uf.components == 1:
                return True
        return uf.components == 1

    def rec(i, label, chosen, mask):
        if chosen == need:
            out.append(mask)
            return
        if m - i < need - chosen:
            return
        eid, u, v = edges[i]
        lu, lv = label[u], label[v]
        if lu != lv:
            merged = [lu if x == lv else x for x in label]
            rec(i + 1, merged, chosen + 1, mask | (1 << eid))
        if spans(i + 1, label):
            rec(i + 1, label, chosen, mask)

    rec(0, list(range(n_vertices)), 0, 0)
    return out


def spanning_trees(g: SignedMultigraph) -> Iterator[int]:
    """Yield every spanning tree of ``g`` exactly once as an edge bitmask.

    Trees come out in lexicographic order of their sorted edge-id tuples, so
    the triangle yields ``{0,1}, {0,2}, {1,2}``.
    """
    yield from spanning_tree_masks(g)


def tree_count(g: SignedMultigraph) -> int:
    return len(spanning_tree_masks(g))


def tree_sign(mask: int, signs: Sequence[int]) -> int:
    s = 1
    for i in mask_to_ids(mask):
        s *= signs[i]
    return s


def signed_tree_count(g: SignedMultigraph, signs: Sequence[int] | None = None) -> int:
    """Number of positive spanning trees minus number of negative ones.

    Its absolute value is the determinant of the link whose Tait graph is
    ``(g, signs)``.
    """
    signs = resolve_signature(g, signs)
    neg = signs_to_mask(signs)
    total = 0
    for mask in spanning_tree_masks(g):
        total += -1 if (mask & neg).bit_count() & 1 else 1
    return total


# ---------------------------------------------------------------------------
# Weighted matrix-tree oracle

def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def signed_laplacian(g: SignedMultigraph, signs: Sequence[int] | None = None) -> list[list[int]]:
    """Laplacian with edge weight equal to the edge sign; loops contribute nothing."""
    signs = resolve_signature(g, signs)
    n = g.vertex_count
    lap = [[0] * n for _ in range(n)]
    for e in g.edges:
        if e.is_loop:
            continue
        w = signs[e.id]
        lap[e.u][e.u] += w
        lap[e.v][e.v] += w
        lap[e.u][e.v] -= w
        lap[e.v][e.u] -= w
    return lap


def matrix_tree_signed(g: SignedMultigraph, signs: Sequence[int] | None = None) -> int:
    """Signed tree count via the weighted matrix-tree theorem.

    Removes the row and column of vertex 0; the weighted matrix-tree theorem
    makes the minor equal to the sum over trees of the product of weights, so
    this agrees exactly (including sign) with :func:`signed_tree_count`.
    """
    require_connected(g)
    lap = signed_laplacian(g, signs)
    minor = [row[1:] for row in lap[1:]]
    return bareiss_determinant(minor)
