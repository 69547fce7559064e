"""Wide subcategories, torsion classes and orthogonal collections.

Subcategories are handled extensionally as frozensets of indecomposables;
add-closure is implicit.  The three enumerations here (orthogonal
collections, torsion classes, wide subcategories) are independent routes to
the same count and are cross-checked against each other in the test battery.
"""
from __future__ import annotations

import warnings
from functools import lru_cache

from .algebra import Indec, NakayamaAlgebra, list_indecomposables, sort_modules
from .modcat import (
    ext_dim,
    extension_middles,
    gen_closure,
    hom_dim,
    hom_positions,
    map_cokernel,
    map_kernel,
    quotients,
)

Subcat = frozenset  # of Indec


class NotWide(ValueError):
    """Input set fails a wide-subcategory closure axiom."""


class NotTorsion(ValueError):
    """Input set fails a torsion-class closure axiom."""


def is_brick(algebra: NakayamaAlgebra, x: Indec) -> bool:
    return hom_dim(algebra, x, x) == 1


def is_orthogonal_collection(algebra: NakayamaAlgebra, mods) -> bool:
    mods = list(mods)
    for x in mods:
        if not is_brick(algebra, x):
            return False
    return all(
        hom_dim(algebra, x, y) == 0 for x in mods for y in mods if x != y
    )


def is_torsion_class(algebra: NakayamaAlgebra, cat: Subcat) -> bool:
    for x in cat:
        if not set(quotients(algebra, x)) <= cat:
            return False
    for xsub in cat:
        for xquot in cat:
            for middle in extension_middles(algebra, xsub, xquot):
                if not set(middle) <= cat:
                    return False
    return True


def is_wide(algebra: NakayamaAlgebra, cat: Subcat) -> bool:
    """Kernel, cokernel and extension closure, checked on indecomposables."""
    for y in cat:
        for x in cat:
            for v in hom_positions(algebra, y, x):
                ker = map_kernel(algebra, y, x, v)
                if ker is not None and ker not in cat:
                    return False
                cok = map_cokernel(algebra, y, x, v)
                if cok is not None and cok not in cat:
                    return False
    for xsub in cat:
        for xquot in cat:
            for middle in extension_middles(algebra, xsub, xquot):
                if not set(middle) <= cat:
                    return False
    return True


# -- the presentation-inverting orthogonals (Sigma^* and *C) --------------


def presentation_becomes_iso(algebra: NakayamaAlgebra, x: Indec, c: Indec) -> bool:
    """Is Hom(sigma_0^x, c): Hom(P_0^x, c) -> Hom(P_1^x, c) bijective?

    In position bases the map shifts v to v + t (t the presentation shift),
    killing positions that run past the socle.  Bijectivity is: no position
    maps to zero, and every target position is hit.  For projective x the
    condition degenerates to Hom(x, c) = 0.
    """
    if algebra.is_projective(x):
        return hom_dim(algebra, x, c) == 0
    t = x.length
    p0 = algebra.projective(x.vertex)
    p1_vertex = algebra.factor(p0, t)
    v0 = hom_positions(algebra, p0, c)
    v1 = hom_positions(algebra, algebra.projective(p1_vertex), c)
    return all(v + t < c.length for v in v0) and all(w >= t for w in v1)


def sigma_star(algebra: NakayamaAlgebra, sigma) -> Subcat:
    """Sigma^*: the module category of the localisation at Sigma."""
    sigma = list(sigma)
    return frozenset(
        c
        for c in list_indecomposables(algebra)
        if all(presentation_becomes_iso(algebra, x, c) for x in sigma)
    )


def lower_star(algebra: NakayamaAlgebra, cat) -> Subcat:
    """*C: the modules whose presentation becomes invertible against C."""
    cat = list(cat)
    return frozenset(
        x
        for x in list_indecomposables(algebra)
        if all(presentation_becomes_iso(algebra, x, c) for c in cat)
    )


# -- simples of a wide subcategory and its inverse -------------------------


def _simple_members(algebra: NakayamaAlgebra, cat: Subcat) -> Subcat:
    out = set()
    for x in cat:
        # x is category-simple iff every nonzero map out is injective,
        # i.e. the image rad^v(c) always has full length x.length
        if all(
            c.length - v == x.length
            for c in cat
            for v in hom_positions(algebra, x, c)
        ):
            out.add(x)
    return frozenset(out)


def simples_of_wide(algebra: NakayamaAlgebra, cat: Subcat, *, check: bool = True) -> Subcat:
    """The members admitting no non-injective nonzero map into the category."""
    if check and not is_wide(algebra, cat):
        raise NotWide(f"{sort_modules(cat)} is not wide")
    return _simple_members(algebra, cat)


def wide_from_collection(algebra: NakayamaAlgebra, collection) -> Subcat:
    """The wide subcategory whose simple objects are the given collection.

    Objects are the uniserial stackings of collection members along
    consecutive tops; this is the extension closure and inverts
    simples_of_wide.
    """
    coll = frozenset(collection)
    out: set[Indec] = set()
    for x in list_indecomposables(algebra):
        if _stacks_from(algebra, x, coll):
            out.add(x)
    return frozenset(out)


def _stacks_from(algebra: NakayamaAlgebra, x: Indec, coll: frozenset) -> bool:
    t = x.length
    pos = 0
    while pos < t:
        for piece in range(1, t - pos + 1):
            y = Indec(algebra.factor(x, pos), piece)
            if y in coll:
                pos += piece
                break
        else:
            return False
    return True


# -- torsion classes, alpha and beta ---------------------------------------


def alpha(algebra: NakayamaAlgebra, tors: Subcat, *, check: bool = True) -> Subcat:
    """Widest exact abelian subcategory inside a torsion class.

    x stays iff the kernel of every map from the class into x lies in the
    class; indecomposable sources suffice.
    """
    if check and not is_torsion_class(algebra, tors):
        raise NotTorsion(f"{sort_modules(tors)} is not a torsion class")
    out = set()
    for x in tors:
        ok = True
        for y in tors:
            for v in hom_positions(algebra, y, x):
                ker = map_kernel(algebra, y, x, v)
                if ker is not None and ker not in tors:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(x)
    return frozenset(out)


def _close_once(algebra: NakayamaAlgebra, gen: frozenset) -> frozenset:
    """Quotient-close, then add all uniserial stackings of two members."""
    out = set(gen)
    for x in list_indecomposables(algebra):
        if x in out:
            continue
        for j in range(1, x.length):
            if Indec(x.vertex, j) in gen and Indec(algebra.factor(x, j), x.length - j) in gen:
                out.add(x)
                break
    closed = set()
    for x in out:
        closed.update(quotients(algebra, x))
    return frozenset(closed)


def beta(algebra: NakayamaAlgebra, cat) -> Subcat:
    """Smallest torsion class containing cat: Gen-closure plus one extension
    sweep.  One sweep is expected to suffice; a diagnostic warning fires (and
    iteration continues to the fixpoint) if it ever does not."""
    current = gen_closure(algebra, cat)
    current = _close_once(algebra, current)
    steps = 0
    while True:
        nxt = _close_once(algebra, current)
        if nxt == current:
            break
        current = nxt
        steps += 1
    if steps > 0:
        warnings.warn(
            f"beta needed {steps + 1} closure sweeps on {sort_modules(cat)}",
            RuntimeWarning,
        )
    return current


def beta_sweeps(algebra: NakayamaAlgebra, cat) -> tuple[Subcat, bool]:
    """(smallest torsion class, whether a single sweep already closed it)."""
    first = _close_once(algebra, gen_closure(algebra, cat))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        full = beta(algebra, cat)
    return full, first == full


def ext_projectives(algebra: NakayamaAlgebra, tors: Subcat, *, check: bool = True) -> tuple[Indec, ...]:
    if check and not is_torsion_class(algebra, tors):
        raise NotTorsion(f"{sort_modules(tors)} is not a torsion class")
    return tuple(
        x
        for x in sort_modules(tors)
        if all(ext_dim(algebra, x, m, 1) == 0 for m in tors)
    )


def split_projectives(algebra: NakayamaAlgebra, tors: Subcat, *, check: bool = True) -> tuple[Indec, ...]:
    """Members onto which every epi from the class splits: uniserially, those
    with no strictly longer class member sharing their top."""
    if check and not is_torsion_class(algebra, tors):
        raise NotTorsion(f"{sort_modules(tors)} is not a torsion class")
    return tuple(
        x
        for x in sort_modules(tors)
        if not any(y.vertex == x.vertex and y.length > x.length for y in tors)
    )


# -- exhaustive enumerations ------------------------------------------------


@lru_cache(maxsize=None)
def enumerate_orth_collections(algebra: NakayamaAlgebra) -> tuple[Subcat, ...]:
    """All orthogonal collections, by backtracking over bricks in canonical
    order; output sorted for determinism."""
    bricks = [x for x in list_indecomposables(algebra) if is_brick(algebra, x)]
    found: list[frozenset] = []

    def extend(chosen: list[Indec], start: int) -> None:
        found.append(frozenset(chosen))
        for i in range(start, len(bricks)):
            cand = bricks[i]
            if all(
                hom_dim(algebra, cand, x) == 0 and hom_dim(algebra, x, cand) == 0
                for x in chosen
            ):
                chosen.append(cand)
                extend(chosen, i + 1)
                chosen.pop()

    extend([], 0)
    return tuple(sorted(found, key=sort_modules))


@lru_cache(maxsize=None)
def enumerate_torsion_classes(algebra: NakayamaAlgebra) -> tuple[Subcat, ...]:
    """Scan quotient-closed sets (one length threshold per vertex), keeping
    the extension-closed ones.

    Extension closure only ever forces additional members, so requirements
    on already-fixed vertices prune immediately and requirements on later
    vertices propagate as lower bounds.
    """
    inds = list_indecomposables(algebra)
    pairs_needed: dict[tuple[Indec, Indec], tuple[Indec, ...]] = {}
    for xsub in inds:
        for xquot in inds:
            req = {
                m
                for middle in extension_middles(algebra, xsub, xquot)
                for m in middle
                if m not in (xsub, xquot)
            }
            pairs_needed[(xsub, xquot)] = tuple(req)

    kupisch = algebra.kupisch
    n = algebra.n
    found: list[frozenset] = []

    def extend(v: int, thresholds: list[int], need: list[int]) -> None:
        if v > n:
            found.append(
                frozenset(
                    Indec(u, t)
                    for u in range(1, n + 1)
                    for t in range(1, thresholds[u - 1] + 1)
                )
            )
            return
        for k in range(need[v - 1], kupisch[v - 1] + 1):
            new_need = need.copy()
            new_mods = [Indec(v, t) for t in range(1, k + 1)]
            old_mods = [
                Indec(u, t)
                for u in range(1, v)
                for t in range(1, thresholds[u - 1] + 1)
            ]
            ok = True
            for x in new_mods:
                partners = old_mods + new_mods
                for y in partners:
                    for pair in ((x, y), (y, x)):
                        for m in pairs_needed[pair]:
                            u, t = m.vertex, m.length
                            if u < v:
                                if t > thresholds[u - 1]:
                                    ok = False
                                    break
                            elif u == v:
                                if t > k:
                                    ok = False
                                    break
                            else:
                                if t > new_need[u - 1]:
                                    new_need[u - 1] = t
                        if not ok:
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                extend(v + 1, thresholds + [k], new_need)

    extend(1, [], [0] * n)
    return tuple(sorted(found, key=sort_modules))


@lru_cache(maxsize=None)
def enumerate_wide(algebra: NakayamaAlgebra) -> tuple[Subcat, ...]:
    return tuple(
        sorted(
            (wide_from_collection(algebra, coll) for coll in enumerate_orth_collections(algebra)),
            key=sort_modules,
        )
    )
