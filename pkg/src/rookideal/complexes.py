"""Simplicial complexes as facet antichains.

Covers both directions of the Stanley-Reisner correspondence, induced
subcomplexes, exact minimal-vertex-cover enumeration (branch and bound on
facets) and the induced-matching regularity lower bound.

The void complex (no facets at all) and the irrelevant complex (only facet
the empty set) are distinct and both representable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .monomials import Monomial, MonomialIdeal, VariableSet, min_gens


def _mask_of(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet antichain over an ordered vertex set."""

    vertices: VariableSet
    facets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_facets(cls, vertices: VariableSet, sets) -> "SimplicialComplex":
        """Canonicalize: dedupe, drop faces contained in other faces, sort."""
        masks = set()
        for s in sets:
            m = _mask_of(s)
            if m >> vertices.count:
                raise ValueError("facet vertex out of range")
            masks.add(m)
        maximal = [m for m in masks if not any(m != o and m & o == m for o in masks)]
        facets = sorted((tuple(_bits(m)) for m in maximal), key=lambda f: (len(f), f))
        return cls(vertices, tuple(facets))

    @classmethod
    def full_simplex(cls, vertices: VariableSet) -> "SimplicialComplex":
        return cls(vertices, (tuple(range(vertices.count)),))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == ((),)

    @property
    def dim(self) -> int | None:
        """Dimension; None for the void complex, -1 for the irrelevant complex."""
        if self.is_void:
            return None
        return max(len(f) for f in self.facets) - 1

    def facet_masks(self) -> tuple[int, ...]:
        return tuple(_mask_of(f) for f in self.facets)

    def contains_face(self, face) -> bool:
        m = _mask_of(face)
        return any(m & f == m for f in self.facet_masks())

    def induced(self, subset) -> "SimplicialComplex":
        """Induced subcomplex on a vertex subset: the faces contained in it."""
        a = _mask_of(subset)
        if a >> self.vertices.count:
            raise ValueError("subset is not a vertex subset")
        if self.is_void:
            return self
        return SimplicialComplex.from_facets(
            self.vertices, [tuple(_bits(f & a)) for f in self.facet_masks()]
        )


def facet_ideal_of_complex(cx: SimplicialComplex) -> MonomialIdeal:
    """Squarefree ideal generated by the facet products (void -> zero ideal,
    irrelevant -> unit ideal)."""
    return min_gens([Monomial.from_support(cx.vertices, f) for f in cx.facets], cx.vertices)


def _minimal_transversals(facet_masks: tuple[int, ...]) -> list[int]:
    """All inclusion-minimal vertex sets meeting every facet mask.

    Depth-first over facets, branching on the vertices of the first uncovered
    facet. Every chosen vertex keeps a running bitset of facets it alone meets;
    a branch dies the moment some vertex loses its last witness facet, so every
    emitted set is minimal. State lives in facet-index bitsets, which keeps the
    per-node cost flat even with hundreds of facets.
    """
    nfacets = len(facet_masks)
    all_facets = (1 << nfacets) - 1
    facets_of: dict[int, int] = {}
    for idx, f in enumerate(facet_masks):
        for v in _bits(f):
            facets_of[v] = facets_of.get(v, 0) | (1 << idx)
    results: set[int] = set()

    def extend(cover: int, covered: int, privates: list[int]):
        if covered == all_facets:
            results.add(cover)
            return
        low = (~covered & all_facets) & -(~covered & all_facets)
        first = facet_masks[low.bit_length() - 1]
        for v in _bits(first):
            fv = facets_of[v]
            trimmed = []
            for p in privates:
                p &= ~fv
                if not p:
                    break
                trimmed.append(p)
            else:
                # the first uncovered facet is a fresh witness for v itself
                trimmed.append(fv & ~covered)
                extend(cover | (1 << v), covered | fv, trimmed)

    extend(0, 0, [])
    return sorted(results)


def minimal_vertex_covers(cx: SimplicialComplex) -> tuple[tuple[int, ...], ...]:
    """All minimal vertex covers, canonically sorted."""
    if cx.is_void:
        raise ValueError("the void complex has no facets to cover")
    covers = _minimal_transversals(cx.facet_masks())
    return tuple(sorted(tuple(_bits(m)) for m in covers))


def sr_complex_of_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """Complex whose faces are the monomial-free vertex subsets of a squarefree
    ideal; its facets are the complements of the ideal's minimal primes."""
    if not ideal.is_squarefree:
        raise ValueError("Stanley-Reisner complex requires a squarefree ideal")
    if ideal.is_unit:
        raise ValueError("the unit ideal has no Stanley-Reisner complex")
    if ideal.is_zero:
        return SimplicialComplex.full_simplex(ideal.ambient)
    everything = frozenset(range(ideal.ambient.count))
    return SimplicialComplex.from_facets(
        ideal.ambient, [everything - set(p) for p in ideal.minimal_primes()]
    )


def sr_ideal_of_complex(cx: SimplicialComplex) -> MonomialIdeal:
    """Ideal generated by the products over the minimal non-faces.

    A set is a non-face exactly when it meets the complement of every facet,
    so the minimal non-faces are the minimal transversals of those complements.
    """
    if cx.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ideal")
    n = cx.vertices.count
    full = (1 << n) - 1
    complements = tuple(full & ~f for f in cx.facet_masks())
    if any(c == 0 for c in complements):
        return MonomialIdeal.zero(cx.vertices)
    nonfaces = _minimal_transversals(complements)
    return min_gens(
        [Monomial.from_support(cx.vertices, tuple(_bits(m))) for m in nonfaces],
        cx.vertices,
    )


def induced_matching_bound(
    cx: SimplicialComplex, k_max: int = 3
) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Best value of |union of facets| - k over induced matchings of size <= k_max.

    An induced matching is a set of pairwise disjoint facets such that no other
    facet of the complex fits inside their union (the facet set of the complex
    restricted to the union is the matching itself). Returns the maximum and
    one witness; (0, ()) when the complex has no facets.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    masks = cx.facet_masks()
    best = 0
    witness: tuple[tuple[int, ...], ...] = ()
    for k in range(1, k_max + 1):
        for combo in itertools.combinations(range(len(masks)), k):
            union = 0
            ok = True
            for idx in combo:
                if union & masks[idx]:
                    ok = False
                    break
                union |= masks[idx]
            if not ok:
                continue
            value = bin(union).count("1") - k
            if value <= best:
                continue
            chosen = {masks[idx] for idx in combo}
            if all(f & union != f or f in chosen for f in masks):
                best = value
                witness = tuple(cx.facets[idx] for idx in combo)
    return best, witness
