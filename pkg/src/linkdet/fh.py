"""The FH polynomial of a graph and its Walsh-Hadamard spectrum.

The FH polynomial is the multilinear integer polynomial whose value at a
0/1 point ``u`` is the Walsh-Hadamard transform of the spanning-tree
indicator, ``sum over trees T of (-1)^(|T & u|)``.  Evaluated at the point
whose bits mark the negative edges it gives the signed tree count, hence the
link determinant up to sign.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .errors import LimitExceededError
from .graph import (
    EdgeKind,
    SignedMultigraph,
    classify_edge,
    contract,
    delete,
    require_connected,
    resolve_signature,
    spanning_tree_masks,
)

DEFAULT_LIMIT = 24


def _monomial_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


@dataclass(frozen=True)
class FHPolynomial:
    """Multilinear polynomial ``sum coeff * prod_{i in mask} x_i`` over ``n_vars`` variables.

    ``terms`` maps monomial bitmasks to nonzero integer coefficients and is
    kept in canonical order: by degree, then by numeric bitmask.
    """

    n_vars: int
    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {m: c for m, c in self.terms.items() if c}
        for m in cleaned:
            if m < 0 or m >> self.n_vars:
                raise ValueError(f"monomial {m:#b} uses a variable outside 0..{self.n_vars - 1}")
        ordered = dict(sorted(cleaned.items(), key=lambda mc: _monomial_key(mc[0])))
        object.__setattr__(self, "terms", ordered)

    @classmethod
    def constant(cls, n_vars: int, value: int = 1) -> "FHPolynomial":
        return cls(n_vars, {0: value})

    def __eq__(self, other):
        if not isinstance(other, FHPolynomial):
            return NotImplemented
        return self.n_vars == other.n_vars and list(self.terms.items()) == list(other.terms.items())

    def __hash__(self):
        return hash((self.n_vars, tuple(self.terms.items())))

    def __add__(self, other: "FHPolynomial") -> "FHPolynomial":
        _check_vars(self, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return FHPolynomial(self.n_vars, out)

    def __mul__(self, other: "FHPolynomial") -> "FHPolynomial":
        # x_i^2 = x_i, so monomials multiply by OR-ing their masks.
        _check_vars(self, other)
        out: dict[int, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 | m2
                out[m] = out.get(m, 0) + c1 * c2
        return FHPolynomial(self.n_vars, out)

    def times_sign_factor(self, var: int) -> "FHPolynomial":
        """Multiply by ``1 - 2*x_var``."""
        bit = 1 << var
        out = dict(self.terms)
        for m, c in self.terms.items():
            if m & bit:
                # x_var * x_var = x_var: c*x_var*(1 - 2x_var) = -c*x_var
                out[m] = out.get(m, 0) - 2 * c
            else:
                out[m | bit] = out.get(m | bit, 0) - 2 * c
        return FHPolynomial(self.n_vars, out)

    def evaluate(self, point: Sequence[int]) -> int:
        return evaluate(self, point)

    def to_json(self) -> dict:
        return {
            "n_vars": self.n_vars,
            "terms": [{"vars": _bits(m), "coeff": c} for m, c in self.terms.items()],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "FHPolynomial":
        terms = {}
        for t in doc["terms"]:
            mask = 0
            for i in t["vars"]:
                mask |= 1 << i
            terms[mask] = terms.get(mask, 0) + int(t["coeff"])
        return cls(int(doc["n_vars"]), terms)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for idx, (m, c) in enumerate(self.terms.items()):
            mag = abs(c)
            names = [f"x{i}" for i in _bits(m)]
            if not names:
                body = str(mag)
            elif mag == 1:
                body = "*".join(names)
            else:
                body = "*".join([str(mag)] + names)
            if idx == 0:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _check_vars(p, q):
    if p.n_vars != q.n_vars:
        raise ValueError(f"polynomials over {p.n_vars} and {q.n_vars} variables")


def _point_mask(point: Sequence[int], n_vars: int) -> int:
    if len(point) != n_vars:
        raise ValueError(f"point has length {len(point)}, expected {n_vars}")
    mask = 0
    for i, x in enumerate(point):
        if x not in (0, 1):
            raise ValueError(f"coordinate {i} is {x!r}, expected 0 or 1")
        if x:
            mask |= 1 << i
    return mask


# ---------------------------------------------------------------------------
# Construction

def fh_explicit(g: SignedMultigraph) -> FHPolynomial:
    """Expand ``sum over trees T of prod_{i in T} (1 - 2 x_i)``.

    A tree contributes ``(-2)^|S|`` to every monomial ``S`` contained in it.
    """
    terms: dict[int, int] = {}
    for tree in spanning_tree_masks(g):
        sub = tree
        while True:
            terms[sub] = terms.get(sub, 0) + (-2) ** sub.bit_count()
            if sub == 0:
                break
            sub = (sub - 1) & tree
    return FHPolynomial(g.n_vars, terms)


def _memo_key(g: SignedMultigraph):
    return (g.vertex_count, tuple(sorted((e.id, min(e.u, e.v), max(e.u, e.v)) for e in g.edges)))


def fh_recursive(g: SignedMultigraph, memoize: bool = False) -> FHPolynomial:
    """FH polynomial by loop/isthmus factorisation and deletion-contraction.

    Loops contribute a factor 1 and are dropped.  An isthmus ``e`` contributes
    ``1 - 2 x_e`` and is contracted (so the remainder stays connected).  The
    lowest-id ordinary edge is then split as
    ``FH(G) = FH(G - e) + (1 - 2 x_e) FH(G / e)``.
    """
    require_connected(g)
    cache: dict | None = {} if memoize else None
    return _fh_rec(g, cache)


def _fh_rec(g: SignedMultigraph, cache) -> FHPolynomial:
    if cache is not None:
        key = _memo_key(g)
        hit = cache.get(key)
        if hit is not None:
            return hit
    factors = []
    h = g
    while True:
        for e in h.edges:
            kind = classify_edge(h, e.id)
            if kind is EdgeKind.LOOP:
                h = delete(h, e.id)
                break
            if kind is EdgeKind.ISTHMUS:
                factors.append(e.id)
                h = contract(h, e.id)
                break
        else:
            break
    if h.edges:
        e = min(h.edges, key=lambda x: x.id).id
        result = _fh_rec(delete(h, e), cache) + _fh_rec(contract(h, e), cache).times_sign_factor(e)
    else:
        result = FHPolynomial.constant(g.n_vars)
    for var in factors:
        result = result.times_sign_factor(var)
    if cache is not None:
        cache[key] = result
    return result


# ---------------------------------------------------------------------------
# Evaluation

def evaluate(p: FHPolynomial, point: Sequence[int]) -> int:
    mask = _point_mask(point, p.n_vars)
    return sum(c for m, c in p.terms.items() if m & mask == m)


def direct_transform(g: SignedMultigraph, point: Sequence[int]) -> int:
    """``sum over trees T of (-1)^(u . v_T)`` evaluated straight from the definition."""
    mask = _point_mask(point, g.n_vars)
    return sum(-1 if (t & mask).bit_count() & 1 else 1 for t in spanning_tree_masks(g))


def signature_point(signs: Sequence[int]) -> tuple[int, ...]:
    """The 0/1 point with coordinate ``(1 - sign) / 2``."""
    return tuple((1 - s) // 2 for s in signs)


def det_via_fh(g: SignedMultigraph, signs: Sequence[int] | None = None,
               poly: FHPolynomial | None = None) -> int:
    signs = resolve_signature(g, signs)
    if poly is None:
        poly = fh_explicit(g)
    return abs(evaluate(poly, signature_point(signs)))


def parity_form(g: SignedMultigraph, point: Sequence[int]) -> tuple[int, int]:
    """Count spanning trees meeting ``{i : point[i] = 1}`` evenly and oddly."""
    mask = _point_mask(point, g.n_vars)
    even = odd = 0
    for t in spanning_tree_masks(g):
        if (t & mask).bit_count() & 1:
            odd += 1
        else:
            even += 1
    return even, odd


# ---------------------------------------------------------------------------
# Spectrum

@dataclass(frozen=True)
class SpectrumReport:
    """Determinant value -> number of edge signatures attaining it."""

    counts: Mapping[int, int]
    n_edges: int
    restrict_first_bit: int | None = None
    signed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "counts", dict(sorted(self.counts.items())))

    @property
    def universe(self) -> int:
        return 1 << (self.n_edges - (self.restrict_first_bit is not None))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def note(self) -> str:
        if self.restrict_first_bit is None:
            return f"all {self.universe} signatures"
        return f"the {self.universe} signatures with x0 = {self.restrict_first_bit}"

    def to_json(self) -> dict:
        return {
            "n_edges": self.n_edges,
            "universe": self.universe,
            "restrict_first_bit": self.restrict_first_bit,
            "signed": self.signed,
            "counts": {str(k): v for k, v in self.counts.items()},
        }


def support_indicator(masks, n_vars: int) -> np.ndarray:
    """0/1 array of length 2^n_vars with ones at ``masks``.

    Repeated masks accumulate, so a multiset of monomials is also accepted.
    """
    arr = np.zeros(1 << n_vars, dtype=np.int64)
    for m in masks:
        arr[m] += 1
    return arr


def tree_indicator(g: SignedMultigraph) -> np.ndarray:
    return support_indicator(spanning_tree_masks(g), g.n_vars)


def fwht(values: np.ndarray) -> np.ndarray:
    """In-place unnormalised Walsh-Hadamard transform of a length-2^n array.

    Output index ``u`` holds ``sum_x values[x] * (-1)^popcount(x & u)``.
    """
    n = values.shape[0]
    if n & (n - 1):
        raise ValueError("length must be a power of two")
    h = 1
    while h < n:
        view = values.reshape(-1, 2, h)
        lo = view[:, 0, :].copy()
        hi = view[:, 1, :]
        view[:, 0, :] += hi
        lo -= hi
        view[:, 1, :] = lo
        h *= 2
    return values


def fh_table(g: SignedMultigraph, limit: int = DEFAULT_LIMIT) -> np.ndarray:
    """FH value at every 0/1 point, indexed by the point's bitmask."""
    require_connected(g)
    _check_limit(g.n_vars, limit)
    return _transform(tree_indicator(g))


def _check_limit(n_vars, limit):
    if n_vars > limit:
        raise LimitExceededError(
            f"spectrum needs 2^{n_vars} points, over the limit of 2^{limit}")


def _transform(arr):
    # Every butterfly value is bounded by the support size.
    if int(np.abs(arr).sum()) > 2 ** 62:
        raise OverflowError("support too large for 64-bit butterflies")
    return fwht(arr)


def _aggregate(values, n_vars, restrict_first_bit, signed):
    if restrict_first_bit not in (None, 0, 1):
        raise ValueError("restrict_first_bit must be None, 0 or 1")
    if restrict_first_bit is not None:
        if n_vars == 0:
            raise ValueError("cannot restrict the first coordinate without variables")
        values = values[restrict_first_bit::2]
    if not signed:
        values = np.abs(values)
    keys, counts = np.unique(values, return_counts=True)
    return SpectrumReport({int(k): int(c) for k, c in zip(keys, counts)},
                          n_vars, restrict_first_bit, signed)


def spectrum(g: SignedMultigraph, restrict_first_bit: int | None = None,
             limit: int = DEFAULT_LIMIT, signed: bool = False) -> SpectrumReport:
    """Multiset of |FH(u)| (or FH(u) when ``signed``) over all 0/1 points ``u``.

    ``restrict_first_bit`` keeps only the points whose coordinate 0 equals the
    given bit.
    """
    return _aggregate(fh_table(g, limit), g.n_vars, restrict_first_bit, signed)


def support_spectrum(masks, n_vars: int, restrict_first_bit: int | None = None,
                     limit: int = DEFAULT_LIMIT, signed: bool = False) -> SpectrumReport:
    """Spectrum of the transform of an arbitrary support (or multiset) of bitmasks."""
    _check_limit(n_vars, limit)
    return _aggregate(_transform(support_indicator(masks, n_vars)), n_vars,
                      restrict_first_bit, signed)


def brute_force_spectrum(g: SignedMultigraph, restrict_first_bit: int | None = None) -> Counter:
    """Spectrum by evaluating the transform point by point (slow reference)."""
    counts: Counter = Counter()
    trees = spanning_tree_masks(g)
    for u in range(1 << g.n_vars):
        if restrict_first_bit is not None and (u & 1) != restrict_first_bit:
            continue
        counts[abs(sum(-1 if (t & u).bit_count() & 1 else 1 for t in trees))] += 1
    return counts
