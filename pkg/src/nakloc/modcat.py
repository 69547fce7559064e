"""Exact Hom/Ext combinatorics of uniserial modules.

A nonzero map M(b,s) -> M(a,t) factors as "quotient, then submodule": it is
determined by its image rad^v M(a,t), so Hom spaces carry canonical position
bases.  Everything below (syzygies, Ext by dimension shift, AR translate,
extension middle terms) is position arithmetic over those bases; the linear
algebra oracle re-derives the same numbers from explicit matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Indec, NakayamaAlgebra, list_indecomposables


class ProjectiveHasNoTau(ValueError):
    """The Auslander-Reiten translate is undefined on projectives."""


@dataclass(frozen=True)
class ProjPresentation:
    """Minimal projective presentation P_1 -> P_0 -> X -> 0.

    For non-projective X = M(a,t) the map P_{a+t} -> P_a has image rad^t P_a,
    recorded as ``shift = t``; for projective X the domain is zero.
    """

    domain: Indec | None
    codomain: Indec
    shift: int


@lru_cache(maxsize=None)
def hom_positions(algebra: NakayamaAlgebra, x: Indec, y: Indec) -> tuple[int, ...]:
    """Positions v with rad^v(y) a common quotient-of-x / submodule-of-y."""
    if algebra.component_index(x.vertex) != algebra.component_index(y.vertex):
        return ()
    return tuple(
        v
        for v in range(y.length)
        if algebra.factor(y, v) == x.vertex and y.length - v <= x.length
    )


def hom_dim(algebra: NakayamaAlgebra, x: Indec, y: Indec) -> int:
    return len(hom_positions(algebra, x, y))


def quotients(algebra: NakayamaAlgebra, x: Indec) -> tuple[Indec, ...]:
    return tuple(Indec(x.vertex, u) for u in range(1, x.length + 1))


def submodules(algebra: NakayamaAlgebra, x: Indec) -> tuple[Indec, ...]:
    return tuple(Indec(algebra.factor(x, v), x.length - v) for v in range(x.length))


def comp_factor_mult(algebra: NakayamaAlgebra, x: Indec, vertex: int) -> int:
    return sum(1 for k in range(x.length) if algebra.factor(x, k) == vertex)


def map_kernel(algebra: NakayamaAlgebra, x: Indec, y: Indec, v: int) -> Indec | None:
    """Kernel of the position-v map x -> y, or None for the zero kernel."""
    image_len = y.length - v
    if image_len == x.length:
        return None
    return Indec(algebra.factor(x, image_len), x.length - image_len)


def map_cokernel(algebra: NakayamaAlgebra, x: Indec, y: Indec, v: int) -> Indec | None:
    return Indec(y.vertex, v) if v > 0 else None


def proj_presentation(algebra: NakayamaAlgebra, x: Indec) -> ProjPresentation:
    algebra.check_module(x)
    if algebra.is_projective(x):
        return ProjPresentation(None, x, 0)
    p0 = algebra.projective(x.vertex)
    p1 = algebra.projective(algebra.factor(p0, x.length))
    return ProjPresentation(p1, p0, x.length)


def syzygy(algebra: NakayamaAlgebra, x: Indec) -> Indec | None:
    """Omega(x) = rad^t P_a, or None when x is projective."""
    if algebra.is_projective(x):
        return None
    c = algebra.c(x.vertex)
    return Indec(algebra.factor(algebra.projective(x.vertex), x.length), c - x.length)


@lru_cache(maxsize=None)
def _ext1(algebra: NakayamaAlgebra, x: Indec, y: Indec) -> int:
    if algebra.is_projective(x):
        return 0
    om = syzygy(algebra, x)
    p0 = algebra.projective(x.vertex)
    return (
        hom_dim(algebra, om, y)
        - hom_dim(algebra, p0, y)
        + hom_dim(algebra, x, y)
    )


@lru_cache(maxsize=None)
def omega_orbit(algebra: NakayamaAlgebra, x: Indec) -> tuple[tuple[Indec, ...], int]:
    """(orbit, mu): iterated syzygies until 0 or a repeat at index mu.

    A repeat never occurs when the orbit terminates; mu is len(orbit) then.
    """
    orbit: list[Indec] = [x]
    seen = {x: 0}
    while True:
        nxt = syzygy(algebra, orbit[-1])
        if nxt is None:
            return tuple(orbit), len(orbit)
        if nxt in seen:
            return tuple(orbit), seen[nxt]
        seen[nxt] = len(orbit)
        orbit.append(nxt)


def omega_power(algebra: NakayamaAlgebra, x: Indec, i: int) -> Indec | None:
    """Omega^i(x) with eventual-periodicity shortcut; None once zero."""
    orbit, mu = omega_orbit(algebra, x)
    if i < len(orbit):
        return orbit[i]
    period = len(orbit) - mu
    if period == 0:
        return None
    return orbit[mu + (i - mu) % period]


def ext_dim(algebra: NakayamaAlgebra, x: Indec, y: Indec, i: int) -> int:
    """dim Ext^i(x, y), by dimension shift along the syzygy orbit."""
    if i < 1:
        raise ValueError("ext_dim needs i >= 1")
    if i == 1:
        return _ext1(algebra, x, y)
    shifted = omega_power(algebra, x, i - 1)
    return 0 if shifted is None else _ext1(algebra, shifted, y)


def proj_dim(algebra: NakayamaAlgebra, x: Indec) -> int | float:
    """Projective dimension; math.inf when the syzygy orbit cycles."""
    orbit, mu = omega_orbit(algebra, x)
    if mu < len(orbit):
        return float("inf")
    return len(orbit) - 1


def tau(algebra: NakayamaAlgebra, x: Indec) -> Indec:
    """AR translate of a non-projective module: shift the top one step."""
    if algebra.is_projective(x):
        raise ProjectiveHasNoTau(f"{x} is projective")
    nxt = algebra.shift(x.vertex, 1)
    assert nxt is not None  # t < c[a] forces room below
    return algebra.check_module(Indec(nxt, x.length))


def gen_closure(algebra: NakayamaAlgebra, gens) -> frozenset[Indec]:
    """Indecomposables generated by gens: all quotients of members."""
    out: set[Indec] = set()
    for x in gens:
        out.update(quotients(algebra, x))
    return frozenset(out)


@lru_cache(maxsize=None)
def extension_middles(
    algebra: NakayamaAlgebra, xsub: Indec, xquot: Indec
) -> tuple[tuple[Indec, ...], ...]:
    """Middle terms of extensions 0 -> xsub -> E -> xquot -> 0.

    The split middle comes first.  A non-split middle stacks xquot on top of
    xsub inside one uniserial Y1 = M(a2, u) and leaves the cut-off quotient
    of xsub as a second summand; u runs over the lengths compatible with the
    vertex arithmetic, giving exactly dim Ext^1(xquot, xsub) of them.
    """
    a1, t1 = xsub.vertex, xsub.length
    a2, t2 = xquot.vertex, xquot.length
    middles: list[tuple[Indec, ...]] = [tuple(sorted((xsub, xquot)))]
    if algebra.component_index(a1) != algebra.component_index(a2):
        return tuple(middles)
    comp = algebra.component_of(a1)
    lo = max(t1, t2)
    hi = min(algebra.c(a2), t1 + t2)
    for u in range(lo + 1, hi + 1):
        # xsub must embed as rad^{u-t1} of M(a2, u)
        if algebra.factor(Indec(a2, u), u - t1) != a1:
            continue
        y1 = Indec(a2, u)
        if u == t1 + t2:
            middles.append((y1,))
        else:
            middles.append(tuple(sorted((y1, Indec(a1, t1 + t2 - u)))))
    return tuple(middles)


def ext1_middle_count(algebra: NakayamaAlgebra, xsub: Indec, xquot: Indec) -> int:
    return len(extension_middles(algebra, xsub, xquot)) - 1


# -- stable maps and injectives (used by the AR-duality checks) ----------


@lru_cache(maxsize=None)
def injectives(algebra: NakayamaAlgebra) -> tuple[Indec, ...]:
    return tuple(x for x in list_indecomposables(algebra) if algebra.is_injective(x))


@lru_cache(maxsize=None)
def stable_hom_dim_mod_injectives(algebra: NakayamaAlgebra, x: Indec, y: Indec) -> int:
    """dim of Hom(x,y) modulo maps factoring through an injective module.

    A position-p map factors through an injective iff p = w1 + w2 splits
    across some indecomposable injective E admitting both halves.
    """
    through: set[int] = set()
    for e in injectives(algebra):
        for w1 in hom_positions(algebra, x, e):
            for w2 in hom_positions(algebra, e, y):
                if w1 + w2 < y.length:
                    through.add(w1 + w2)
    positions = set(hom_positions(algebra, x, y))
    assert through <= positions
    return len(positions - through)
