"""Kauffman bracket state sums evaluated exactly at A = exp(i*pi/4).

Crossings of the diagram are the edges of the Tait graph.  A state is a
bitmask over edge ids: a set bit contracts the edge (the smoothing joining
the black regions at its ends), a clear bit deletes it.
"""

from __future__ import annotations

import cmath
from collections import Counter
from dataclasses import dataclass
from math import isqrt
from typing import Sequence

from .errors import LimitExceededError
from .graph import (
    SignedMultigraph,
    require_connected,
    resolve_signature,
    signs_to_mask,
    spanning_tree_masks,
)
from .unionfind import UnionFind

# State sums are enumerated in pure Python; 2^16 states take about a second.
STATE_LIMIT = 16


@dataclass(frozen=True)
class CyclotomicInt:
    """``c0 + c1*z + c2*z^2 + c3*z^3`` with ``z = exp(i*pi/4)``, so ``z^4 = -1``."""

    c0: int = 0
    c1: int = 0
    c2: int = 0
    c3: int = 0

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.c0, self.c1, self.c2, self.c3)

    @classmethod
    def zeta(cls, k: int = 1) -> "CyclotomicInt":
        k %= 8
        c = [0, 0, 0, 0]
        c[k % 4] = 1 if k < 4 else -1
        return cls(*c)

    @classmethod
    def of(cls, n: int) -> "CyclotomicInt":
        return cls(n)

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt(other)
        return CyclotomicInt(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(*(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(*(a * other for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        out = [0] * 4
        for i in range(4):
            if a[i]:
                for j in range(4):
                    k = i + j
                    if k < 4:
                        out[k] += a[i] * b[j]
                    else:
                        out[k - 4] -= a[i] * b[j]
        return CyclotomicInt(*out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("only units have inverses; use times_zeta for negative powers of z")
        result, base = CyclotomicInt(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def times_zeta(self, k: int = 1) -> "CyclotomicInt":
        """Multiply by ``z^k``; one step rotates ``(c0, c1, c2, c3) -> (-c3, c0, c1, c2)``."""
        c0, c1, c2, c3 = self.coeffs
        for _ in range(k % 8):
            c0, c1, c2, c3 = -c3, c0, c1, c2
        return CyclotomicInt(c0, c1, c2, c3)

    def conjugate(self) -> "CyclotomicInt":
        # conj(z^k) = z^-k = -z^(4-k)
        c0, c1, c2, c3 = self.coeffs
        return CyclotomicInt(c0, -c3, -c2, -c1)

    def norm_squared(self) -> "CyclotomicInt":
        """``|x|^2`` as an element of Z[sqrt 2] inside Z[z]."""
        return self * self.conjugate()

    def is_rational(self) -> bool:
        return self.c1 == self.c2 == self.c3 == 0

    def abs_int(self) -> int:
        """``|x|`` for elements whose modulus is a rational integer."""
        sq = self.norm_squared()
        if not sq.is_rational():
            raise ValueError(f"|{self}|^2 = {sq} is irrational")
        r = isqrt(sq.c0)
        if r * r != sq.c0:
            raise ValueError(f"|{self}| = sqrt({sq.c0}) is not an integer")
        return r

    def __complex__(self):
        z = cmath.exp(1j * cmath.pi / 4)
        return sum(c * z ** k for k, c in enumerate(self.coeffs))

    def __str__(self):
        terms = [f"{c}" if k == 0 else f"{c}*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


ZERO = CyclotomicInt()
ONE = CyclotomicInt(1)
# -A^2 - A^-2 at A = z, computed in the ring rather than assumed.
LOOP_VALUE = -CyclotomicInt.zeta(2) - CyclotomicInt.zeta(-2)


@dataclass(frozen=True)
class State:
    """Smoothing statistics of one state.

    ``c_pos`` counts contracted positive edges, ``d_neg`` deleted negative
    edges, and so on; ``alpha`` and ``beta`` count the two smoothing types
    and ``circles`` is the number of loops left after smoothing.
    """

    mask: int
    c_pos: int
    c_neg: int
    d_pos: int
    d_neg: int
    circles: int

    @property
    def alpha(self) -> int:
        return self.c_pos + self.d_neg

    @property
    def beta(self) -> int:
        return self.c_neg + self.d_pos

    @property
    def n_pos(self) -> int:
        return self.c_pos + self.d_pos

    @property
    def n_neg(self) -> int:
        return self.c_neg + self.d_neg

    @property
    def monocyclic(self) -> bool:
        return self.circles == 1


def _check_state(g: SignedMultigraph, state: int):
    if state < 0 or state >> g.n_vars:
        raise ValueError(f"state {state:#b} has bits beyond the {g.n_vars} edges")


def state_circles(g: SignedMultigraph, state: int) -> int:
    """Circles of a state: components plus nullity of the contracted subgraph.

    The contracted subgraph keeps every vertex of ``g``; with ``k`` components
    and ``m`` edges it leaves ``k + (m - |V| + k)`` circles.
    """
    require_connected(g)
    _check_state(g, state)
    uf = UnionFind(g.vertex_count)
    chosen = 0
    for e in g.edges:
        if state >> e.id & 1:
            uf.union(e.u, e.v)
            chosen += 1
    k = uf.components
    return k + chosen - g.vertex_count + k


def state_stats(g: SignedMultigraph, state: int, signs: Sequence[int] | None = None) -> State:
    signs = resolve_signature(g, signs)
    _check_state(g, state)
    c_pos = c_neg = d_pos = d_neg = 0
    for e in g.edges:
        contracted = state >> e.id & 1
        if signs[e.id] == 1:
            if contracted:
                c_pos += 1
            else:
                d_pos += 1
        elif contracted:
            c_neg += 1
        else:
            d_neg += 1
    return State(state, c_pos, c_neg, d_pos, d_neg, state_circles(g, state))


def _state_space(g: SignedMultigraph, limit: int):
    require_connected(g)
    if g.n_vars > limit:
        raise LimitExceededError(
            f"state sum over 2^{g.n_vars} states, over the limit of 2^{limit}")
    present = 0
    for e in g.edges:
        present |= 1 << e.id
    # Enumerate submasks of the present edges in ascending order.
    sub = 0
    while True:
        yield sub
        if sub == present:
            return
        sub = (sub - present) & present


def state_weight(st: State) -> CyclotomicInt:
    """``A^(alpha - beta) * (-A^2 - A^-2)^(circles - 1)`` at ``A = z``."""
    return LOOP_VALUE ** (st.circles - 1) * CyclotomicInt.zeta(st.alpha - st.beta)


def _circle_counter(g: SignedMultigraph):
    nv = g.vertex_count
    ends = [(e.id, e.u, e.v) for e in g.edges]

    def circles(state: int) -> int:
        parent = list(range(nv))
        k, chosen = nv, 0
        for eid, u, v in ends:
            if state >> eid & 1:
                chosen += 1
                while parent[u] != u:
                    u = parent[u]
                while parent[v] != v:
                    v = parent[v]
                if u != v:
                    parent[u] = v
                    k -= 1
        return 2 * k + chosen - nv

    return circles


def bracket_at_primitive8(g: SignedMultigraph, signs: Sequence[int] | None = None,
                          monocyclic_only: bool = False,
                          limit: int = STATE_LIMIT) -> CyclotomicInt:
    """Exact bracket value at ``A = exp(i*pi/4)`` by summing over all states.

    With ``monocyclic_only`` only one-circle states are summed; the loop value
    vanishes at this ``A``, so both routes must give the same element.
    """
    signs = resolve_signature(g, signs)
    pos = 0
    for e in g.edges:
        if signs[e.id] == 1:
            pos |= 1 << e.id
    n = len(g.edges)
    circles = _circle_counter(g)
    # An edge adds +1 to alpha - beta when its smoothing agrees with its sign.
    buckets: Counter = Counter()
    for state in _state_space(g, limit):
        c = circles(state)
        if monocyclic_only and c != 1:
            continue
        buckets[c, (n - 2 * (state ^ pos).bit_count()) % 8] += 1
    total = ZERO
    for (c, k), mult in buckets.items():
        total = total + (LOOP_VALUE ** (c - 1)).times_zeta(k) * mult
    return total


def monocyclic_states(g: SignedMultigraph, limit: int = STATE_LIMIT) -> list[int]:
    return [s for s in _state_space(g, limit) if state_circles(g, s) == 1]


def tree_phase_sum(g: SignedMultigraph, signs: Sequence[int] | None = None) -> int:
    """``sum over spanning trees T of (-1)^(number of negative edges of T)``."""
    signs = resolve_signature(g, signs)
    neg = signs_to_mask(signs)
    return sum(-1 if (t & neg).bit_count() & 1 else 1 for t in spanning_tree_masks(g))


def bracket_phase_exponent(g: SignedMultigraph, signs: Sequence[int] | None = None) -> int:
    """Exponent ``k`` with ``<D> = z^k * sum_T (-1)^c_neg(T)``.

    A spanning tree has ``|V| - 1`` edges, so a monocyclic state has
    ``d_pos = c_neg + n_pos - |V| + 1`` and ``alpha - beta = n - 2 n_pos + 2|V| - 2 - 4 c_neg``.
    """
    signs = resolve_signature(g, signs)
    n = len(g.edges)
    n_pos = sum(1 for e in g.edges if signs[e.id] == 1)
    return n - 2 * n_pos + 2 * g.vertex_count - 2


def bracket_from_trees(g: SignedMultigraph, signs: Sequence[int] | None = None) -> CyclotomicInt:
    """Closed form of the bracket at ``A = z`` as a unit times the signed tree sum."""
    signs = resolve_signature(g, signs)
    return CyclotomicInt(tree_phase_sum(g, signs)).times_zeta(bracket_phase_exponent(g, signs))


def det_via_bracket(g: SignedMultigraph, signs: Sequence[int] | None = None) -> int:
    """Determinant as ``|sum over trees of (-1)^c_neg(T)|``.

    Monocyclic states are exactly the states whose contracted edges form a
    spanning tree, and ``c_neg(T)`` is the number of negative tree edges.
    """
    require_connected(g)
    return abs(tree_phase_sum(g, signs))
