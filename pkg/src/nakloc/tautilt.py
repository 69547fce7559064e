"""Support tau-tilting modules and their bijection with localisations.

A support pair (T, E) is a basic tau-tilting module over the idempotent
quotient killing the vertex set E.  The enumeration goes through torsion
classes (Ext-projectives) and is re-derived by brute force over tau-rigid
sets; the two must coincide, which is asserted on every call.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Indec, NakayamaAlgebra, module_label, quotient_by_vertices, sort_modules
from .localise import Localisation, StructureViolation, canonicalise
from .modcat import ext_dim, gen_closure, hom_dim, proj_dim, tau
from .poset import HasseQuiver, hasse_quiver
from .subcats import (
    Subcat,
    alpha,
    beta,
    enumerate_torsion_classes,
    ext_projectives,
    lower_star,
    split_projectives,
)


@dataclass(frozen=True, order=True)
class SupportTauTilting:
    """Basic module list plus the killed vertex set (support complement)."""

    modules: tuple[Indec, ...]
    killed: frozenset[int]

    def label(self, algebra: NakayamaAlgebra) -> str:
        body = "+".join(module_label(algebra, x) for x in self.modules) or "0"
        return body

    def as_json(self, algebra: NakayamaAlgebra) -> dict:
        return {
            "T": [module_label(algebra, x) for x in self.modules],
            "support_killed": sorted(self.killed),
        }


def is_tau_rigid(algebra: NakayamaAlgebra, modules) -> bool:
    """Hom(x, tau y) = 0 over all summand pairs with y non-projective."""
    mods = list(modules)
    for y in mods:
        if algebra.is_projective(y):
            continue
        ty = tau(algebra, y)
        if any(hom_dim(algebra, x, ty) != 0 for x in mods):
            return False
    return True


def is_tilting_classical(algebra: NakayamaAlgebra, modules) -> bool:
    """pd <= 1, no self-extensions, and as many summands as simples."""
    mods = set(modules)
    if len(mods) != algebra.n:
        return False
    if any(proj_dim(algebra, x) > 1 for x in mods):
        return False
    return all(ext_dim(algebra, x, y, 1) == 0 for x in mods for y in mods)


def support_of(algebra: NakayamaAlgebra, tors) -> frozenset[int]:
    """Vertices appearing as a composition factor somewhere in the class."""
    out = set()
    for x in tors:
        out.update(algebra.factors(x))
    return frozenset(out)


def stt_from_torsion(algebra: NakayamaAlgebra, tors: Subcat) -> SupportTauTilting:
    t = ext_projectives(algebra, tors, check=False)
    killed = frozenset(algebra.vertices()) - support_of(algebra, tors)
    return SupportTauTilting(tuple(sort_modules(t)), killed)


def torsion_from_stt(algebra: NakayamaAlgebra, stt: SupportTauTilting) -> Subcat:
    return gen_closure(algebra, stt.modules)


def _tau_rigid_sets(algebra: NakayamaAlgebra, size: int) -> list[tuple[Indec, ...]]:
    """All tau-rigid subsets of the given size, by compatibility backtracking."""
    from .algebra import list_indecomposables

    cands = [
        x
        for x in list_indecomposables(algebra)
        if algebra.is_projective(x) or hom_dim(algebra, x, tau(algebra, x)) == 0
    ]

    def compatible(x: Indec, y: Indec) -> bool:
        if not algebra.is_projective(y) and hom_dim(algebra, x, tau(algebra, y)):
            return False
        if not algebra.is_projective(x) and hom_dim(algebra, y, tau(algebra, x)):
            return False
        return True

    out: list[tuple[Indec, ...]] = []

    def extend(chosen: list[Indec], start: int) -> None:
        if len(chosen) == size:
            out.append(tuple(chosen))
            return
        for i in range(start, len(cands)):
            if len(cands) - i < size - len(chosen):
                break
            if all(compatible(cands[i], x) for x in chosen):
                chosen.append(cands[i])
                extend(chosen, i + 1)
                chosen.pop()

    extend([], 0)
    return out


def _enumerate_stt_bruteforce(algebra: NakayamaAlgebra) -> set[SupportTauTilting]:
    """tau-tilting pairs over every idempotent quotient, found directly."""
    out: set[SupportTauTilting] = set()
    vertices = list(algebra.vertices())
    from itertools import combinations

    for k in range(len(vertices) + 1):
        for killed_tuple in combinations(vertices, k):
            killed = frozenset(killed_tuple)
            quotient, emb = quotient_by_vertices(algebra, killed)
            want = algebra.n - len(killed)
            for mods in _tau_rigid_sets(quotient, want):
                lifted = tuple(sort_modules(emb.module(x) for x in mods))
                out.add(SupportTauTilting(lifted, killed))
    return out


@lru_cache(maxsize=None)
def enumerate_stt(algebra: NakayamaAlgebra) -> tuple[SupportTauTilting, ...]:
    """All support tau-tilting pairs, via torsion classes, cross-checked
    against the brute-force tau-rigid enumeration."""
    via_torsion = {
        stt_from_torsion(algebra, tors) for tors in enumerate_torsion_classes(algebra)
    }
    brute = _enumerate_stt_bruteforce(algebra)
    key = lambda s: (s.modules, tuple(sorted(s.killed)))
    if via_torsion != brute:
        raise StructureViolation(
            "torsion-class and tau-rigid enumerations disagree: "
            f"{sorted(via_torsion ^ brute, key=key)}"
        )
    return tuple(sorted(via_torsion, key=key))


def psi(algebra: NakayamaAlgebra, stt: SupportTauTilting) -> Localisation:
    """The localisation at the trivial side of the wide part of Gen T."""
    tors = torsion_from_stt(algebra, stt)
    wide = alpha(algebra, tors, check=False)
    loc = canonicalise(algebra, lower_star(algebra, wide))
    if loc.xcat != wide:
        raise StructureViolation("psi image category mismatch")
    return loc


def psi_inverse(algebra: NakayamaAlgebra, loc: Localisation) -> SupportTauTilting:
    tors = beta(algebra, loc.xcat)
    return stt_from_torsion(algebra, tors)


def sigma_prime(algebra: NakayamaAlgebra, stt: SupportTauTilting) -> frozenset[Indec]:
    """Killed projectives plus the non-split-projective summands in Gen T;
    localising there recovers psi(stt)."""
    tors = torsion_from_stt(algebra, stt)
    split = set(split_projectives(algebra, tors, check=False))
    out = {algebra.projective(v) for v in stt.killed}
    out.update(x for x in stt.modules if x not in split)
    return frozenset(out)


def hasse_stt(algebra: NakayamaAlgebra) -> HasseQuiver:
    """Hasse quiver of Gen-inclusion, arrows from larger to smaller, nodes
    labelled by the basic module lists."""
    stts = enumerate_stt(algebra)
    keyed = sorted(
        ((torsion_from_stt(algebra, s), s) for s in stts),
        key=lambda pair: (-len(pair[0]), pair[1]),
    )
    return hasse_quiver(
        [tors for tors, _ in keyed], [s.label(algebra) for _, s in keyed]
    )
