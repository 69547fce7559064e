"""Exhaustive invariant suites over a battery of small algebras.

Each check function appends human-readable failures; ``run_battery`` drives
everything over the uniform families up to the requested bounds plus a fixed
list of non-uniform Kupisch series.  The oracle sweeps (explicit matrices
over a prime field) are optional because they dominate the runtime.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import inf

import numpy as np

from . import oracle
from .algebra import (
    Indec,
    NakayamaAlgebra,
    build_cycle,
    build_line,
    from_kupisch,
    list_indecomposables,
    quotient_by_vertices,
    sort_modules,
)
from .arcs import (
    enumerate_arc_diagrams,
    from_arc_diagram,
    geometric_violation,
    to_arc_diagram,
)
from .localise import (
    canonicalise,
    classify_homological_selfinjective,
    compose_with_quotient,
    enumerate_uniloc,
    w_property_violation,
    wtilde_property_violation,
)
from .modcat import (
    comp_factor_mult,
    ext1_middle_count,
    ext_dim,
    extension_middles,
    gen_closure,
    hom_dim,
    hom_positions,
    omega_orbit,
    omega_power,
    proj_dim,
    stable_hom_dim_mod_injectives,
    syzygy,
    tau,
)
from .subcats import (
    alpha,
    beta_sweeps,
    enumerate_orth_collections,
    enumerate_torsion_classes,
    enumerate_wide,
    ext_projectives,
    is_torsion_class,
    is_wide,
    lower_star,
    sigma_star,
    simples_of_wide,
    split_projectives,
    wide_from_collection,
)
from .tautilt import (
    enumerate_stt,
    is_tau_rigid,
    is_tilting_classical,
    psi,
    psi_inverse,
    sigma_prime,
    stt_from_torsion,
    torsion_from_stt,
)


@dataclass
class Failure:
    algebra: str
    check: str
    detail: str

    def __str__(self) -> str:
        return f"[{self.algebra}] {self.check}: {self.detail}"


NONUNIFORM_SPECS = [
    [("line", (2, 3, 2, 1))],
    [("line", (3, 2, 2, 1))],
    [("line", (2, 2, 3, 2, 1))],
    [("line", (4, 3, 2, 2, 1))],
    [("cycle", (3, 3, 2))],
    [("cycle", (4, 4, 4, 3))],
    [("cycle", (2, 3, 3))],
    [("cycle", (5, 4, 4, 3))],
    [("line", (2, 1)), ("line", (1,))],
    [("cycle", (2, 2)), ("line", (2, 2, 1))],
]


def battery_algebras(
    nmax: int, hmax: int, include_nonuniform: bool = True
) -> list[tuple[str, NakayamaAlgebra]]:
    out: list[tuple[str, NakayamaAlgebra]] = []
    seen = set()
    for n in range(1, nmax + 1):
        for h in range(2, hmax + 1):
            for name, alg in (
                (f"A_{n}^{h}", build_line(n, h)),
                (f"A~_{n}^{h}", build_cycle(n, h)),
            ):
                if alg not in seen:
                    seen.add(alg)
                    out.append((name, alg))
    if include_nonuniform:
        for i, spec in enumerate(NONUNIFORM_SPECS, start=1):
            alg = from_kupisch(spec)
            if alg not in seen:
                seen.add(alg)
                out.append((f"NU{i}:{alg.as_text()}", alg))
    return out


# ---------------------------------------------------------------- modcat --


def check_modcat(name: str, algebra: NakayamaAlgebra, fails: list[Failure]) -> None:
    inds = list_indecomposables(algebra)
    if len(inds) != sum(algebra.kupisch):
        fails.append(Failure(name, "indec-count", f"{len(inds)} != {sum(algebra.kupisch)}"))
    for x in inds:
        for i in algebra.vertices():
            proj = algebra.projective(i)
            if hom_dim(algebra, proj, x) != comp_factor_mult(algebra, x, i):
                fails.append(Failure(name, "hom-from-projective", f"{proj} -> {x}"))
        # syzygy orbit terminates or cycles; projective dimension consistent
        orbit, mu = omega_orbit(algebra, x)
        if mu == len(orbit) and proj_dim(algebra, x) != len(orbit) - 1:
            fails.append(Failure(name, "proj-dim", f"{x}"))
        if mu < len(orbit) and proj_dim(algebra, x) != inf:
            fails.append(Failure(name, "proj-dim-inf", f"{x}"))
    for x in inds:
        for y in inds:
            middles = ext1_middle_count(algebra, x, y)
            if middles != ext_dim(algebra, y, x, 1):
                fails.append(
                    Failure(name, "middle-count", f"sub={x} quot={y}: {middles} != ext")
                )
            if not algebra.is_projective(x):
                lhs = ext_dim(algebra, x, y, 1)
                rhs = stable_hom_dim_mod_injectives(algebra, y, tau(algebra, x))
                if lhs != rhs:
                    fails.append(Failure(name, "ar-duality", f"{x},{y}: {lhs} != {rhs}"))
    _check_hereditary_euler(name, algebra, fails)
    _check_syzygy_periodicity(name, algebra, fails)
    _check_quotient_composition(name, algebra, fails)


def _is_hereditary_line(algebra: NakayamaAlgebra) -> bool:
    return all(comp.shape == "line" for comp in algebra.components) and all(
        algebra.c(v) == (algebra.component_of(v).size - (v - algebra._starts[algebra.component_index(v)]))
        for v in algebra.vertices()
    )


def _check_hereditary_euler(name, algebra, fails) -> None:
    if not _is_hereditary_line(algebra):
        return
    inds = list_indecomposables(algebra)
    arrows = [
        (v, algebra.shift(v, 1))
        for v in algebra.vertices()
        if algebra.shift(v, 1) is not None and algebra.component_of(v).shape == "line"
    ]

    def dim_vector(x: Indec) -> list[int]:
        vec = [0] * algebra.n
        for k in range(x.length):
            vec[algebra.factor(x, k) - 1] += 1
        return vec

    for x in inds:
        dx = dim_vector(x)
        for y in inds:
            dy = dim_vector(y)
            euler = sum(a * b for a, b in zip(dx, dy)) - sum(
                dx[s - 1] * dy[t - 1] for (s, t) in arrows
            )
            if hom_dim(algebra, x, y) - ext_dim(algebra, x, y, 1) != euler:
                fails.append(Failure(name, "euler-form", f"{x},{y}"))


def _check_syzygy_periodicity(name, algebra, fails) -> None:
    """Self-injective cyclic case: the exact return times of the syzygy."""
    if len(algebra.components) != 1 or algebra.components[0].shape != "cycle":
        return
    comp = algebra.components[0]
    if len(set(comp.kupisch)) != 1:
        return
    n, h = comp.size, comp.kupisch[0]
    for x in list_indecomposables(algebra):
        if algebra.is_projective(x):
            continue
        s = x.length
        for z in range(1, 2 * n + 3):
            if 2 * s != h:
                predicted = z % 2 == 0 and (z // 2) * h % n == 0
            else:
                predicted = z * s % n == 0
            actual = omega_power(algebra, x, z) == x
            if actual != predicted:
                fails.append(Failure(name, "syzygy-period", f"{x}, z={z}"))
            # the one-dimensionality of Ext^z(M,M) needs rank >= 2 (the
            # local algebra has higher-dimensional endomorphism rings)
            elif predicted and n >= 2 and ext_dim(algebra, x, x, z) != 1:
                fails.append(Failure(name, "syzygy-ext-one", f"{x}, z={z}"))


def _check_quotient_composition(name, algebra, fails) -> None:
    quot, emb = quotient_by_vertices(algebra, frozenset())
    if quot != algebra:
        fails.append(Failure(name, "quotient-empty", "quotient by nothing changed the algebra"))
    rng = random.Random(13)
    verts = list(algebra.vertices())
    for _ in range(min(4, len(verts))):
        e1 = frozenset(rng.sample(verts, rng.randint(0, len(verts))))
        e2 = frozenset(rng.sample(verts, rng.randint(0, len(verts)))) - e1
        q1, emb1 = quotient_by_vertices(algebra, e1)
        q12, emb12 = quotient_by_vertices(q1, frozenset(emb1.preimage(algebra.simple(v)).vertex for v in e2))
        q_joint, emb_joint = quotient_by_vertices(algebra, e1 | e2)
        mods_two_step = {emb1.module(emb12.module(x)) for x in list_indecomposables(q12)}
        mods_joint = {emb_joint.module(x) for x in list_indecomposables(q_joint)}
        if mods_two_step != mods_joint:
            fails.append(Failure(name, "quotient-composition", f"E1={sorted(e1)}, E2={sorted(e2)}"))


def check_modcat_oracle(name: str, algebra: NakayamaAlgebra, fails: list[Failure]) -> None:
    inds = list_indecomposables(algebra)
    for x in inds:
        for y in inds:
            if hom_dim(algebra, x, y) != oracle.hom_dim_lin(algebra, x, y):
                fails.append(Failure(name, "oracle-hom", f"{x},{y}"))
            lin = oracle.ext1_dim_lin(algebra, x, y)
            if ext_dim(algebra, x, y, 1) != lin:
                fails.append(Failure(name, "oracle-ext1", f"{x},{y}"))
            if algebra.is_projective(x):
                continue
            om, p0 = syzygy(algebra, x), algebra.projective(x.vertex)
            formula = (
                oracle.hom_dim_lin(algebra, om, y)
                - oracle.hom_dim_lin(algebra, p0, y)
                + oracle.hom_dim_lin(algebra, x, y)
            )
            if formula != lin:
                fails.append(Failure(name, "oracle-ext1-routes", f"{x},{y}"))
    # field independence spot check
    for x in inds[:3]:
        for y in inds[:3]:
            if oracle.hom_dim_lin(algebra, x, y, p=2) != oracle.hom_dim_lin(algebra, x, y):
                fails.append(Failure(name, "oracle-field-independence", f"{x},{y}"))


# --------------------------------------------------------------- subcats --


def check_subcats(name: str, algebra: NakayamaAlgebra, fails: list[Failure]) -> None:
    colls = enumerate_orth_collections(algebra)
    torsions = enumerate_torsion_classes(algebra)
    wides = enumerate_wide(algebra)
    if not len(colls) == len(torsions) == len(wides):
        fails.append(
            Failure(
                name,
                "count-equalities",
                f"orth={len(colls)} torsion={len(torsions)} wide={len(wides)}",
            )
        )
    if len(set(wides)) != len(wides):
        fails.append(Failure(name, "wide-distinct", "collections map to equal wides"))
    for cat in wides:
        if not is_wide(algebra, cat):
            fails.append(Failure(name, "wide-closure", f"{sort_modules(cat)}"))
        simples = simples_of_wide(algebra, cat, check=False)
        if wide_from_collection(algebra, simples) != cat:
            fails.append(Failure(name, "wide-roundtrip", f"{sort_modules(cat)}"))
    for coll in colls:
        if simples_of_wide(algebra, wide_from_collection(algebra, coll), check=False) != coll:
            fails.append(Failure(name, "collection-roundtrip", f"{sort_modules(coll)}"))
    for tors in torsions:
        if not is_torsion_class(algebra, tors):
            fails.append(Failure(name, "torsion-closure", f"{sort_modules(tors)}"))
        wide = alpha(algebra, tors, check=False)
        if not is_wide(algebra, wide):
            fails.append(Failure(name, "alpha-wide", f"{sort_modules(tors)}"))
        back, one_sweep = beta_sweeps(algebra, wide)
        if back != tors:
            fails.append(Failure(name, "beta-alpha", f"{sort_modules(tors)}"))
        if not one_sweep:
            fails.append(Failure(name, "beta-one-sweep", f"{sort_modules(wide)}"))
        split = split_projectives(algebra, tors, check=False)
        extp = ext_projectives(algebra, tors, check=False)
        if not set(split) <= set(extp):
            fails.append(Failure(name, "split-in-ext", f"{sort_modules(tors)}"))
        for x in split:
            if not any(Indec(x.vertex, u) in wide for u in range(1, x.length + 1)):
                fails.append(Failure(name, "split-quotient-in-alpha", f"{x}"))
    for cat in wides:
        tors = beta_sweeps(algebra, cat)[0]
        if alpha(algebra, tors, check=False) != cat:
            fails.append(Failure(name, "alpha-beta", f"{sort_modules(cat)}"))
    _check_beta_is_smallest(name, algebra, torsions, wides, fails)


def _check_beta_is_smallest(name, algebra, torsions, wides, fails) -> None:
    # torsion classes are intersection-closed, so the smallest one containing
    # a set is the intersection of all that do
    for cat in wides:
        candidates = [tors for tors in torsions if cat <= tors]
        smallest = frozenset.intersection(*candidates) if candidates else None
        got = beta_sweeps(algebra, cat)[0]
        if smallest is None or got != smallest or smallest not in set(torsions):
            fails.append(Failure(name, "beta-smallest", f"{sort_modules(cat)}"))


def check_alpha_decomposable_oracle(
    name: str, algebra: NakayamaAlgebra, fails: list[Failure]
) -> None:
    """Kernels of random maps from decomposable sources stay in the class."""
    rng = random.Random(7)
    p = oracle.DEFAULT_P
    for tors in enumerate_torsion_classes(algebra)[:16]:
        members = sort_modules(tors)
        if len(members) < 2:
            continue
        wide = alpha(algebra, tors, check=False)
        for x in sort_modules(wide):
            for _ in range(3):
                y1, y2 = rng.choice(members), rng.choice(members)
                vy = oracle.realize(algebra, [y1, y2], p)
                vx = oracle.realize(algebra, [x], p)
                basis = oracle.hom_space(vy, vx)
                if not basis:
                    continue
                coeffs = [rng.randrange(p) for _ in basis]
                g = [
                    sum(c * phi[i] for c, phi in zip(coeffs, basis)) % p
                    for i in range(algebra.n)
                ]
                g = [np.asarray(m, dtype=np.int64) for m in g]
                ker = oracle.kernel_representation(g, vy, vx)
                for summand in oracle.decompose(ker):
                    if summand not in tors:
                        fails.append(
                            Failure(
                                name,
                                "alpha-decomposable-kernel",
                                f"x={x}, y={y1}+{y2}: kernel summand {summand}",
                            )
                        )


# -------------------------------------------------------------- localise --


def check_localise(name: str, algebra: NakayamaAlgebra, fails: list[Failure]) -> None:
    locs = enumerate_uniloc(algebra)
    colls = set(enumerate_orth_collections(algebra))
    if len(locs) != len(colls):
        fails.append(Failure(name, "uniloc-count", f"{len(locs)} != {len(colls)}"))
    if {loc.simples for loc in locs} != colls:
        fails.append(Failure(name, "simples-index", "simples do not exhaust collections"))
    if {loc.mainnak_collection for loc in locs} != colls:
        fails.append(Failure(name, "mainnak-index", "deformed sets do not exhaust collections"))
    for loc in locs:
        if sigma_star(algebra, lower_star(algebra, loc.xcat)) != loc.xcat:
            fails.append(Failure(name, "fixpoint", f"{loc}"))
        if not is_wide(algebra, loc.xcat):
            fails.append(Failure(name, "xcat-wide", f"{loc}"))
        bad = w_property_violation(algebra, loc.w)
        if bad:
            fails.append(Failure(name, "w-properties", f"{loc}: {bad}"))
        bad = wtilde_property_violation(algebra, loc.wtilde)
        if bad:
            fails.append(Failure(name, "wtilde-properties", f"{loc}: {bad}"))
        _check_trivial_closure(name, algebra, loc, fails)
        if loc.dim_ab != sum(x.length for x in loc.ab):
            fails.append(Failure(name, "dim-ab", f"{loc}"))
        if loc.surjective != _is_full_quotient_cat(algebra, loc):
            fails.append(Failure(name, "surjective-flag", f"{loc}"))
        if loc.annihilated:
            locq, emb = compose_with_quotient(algebra, loc)
            # the inverse localises at the transported trivial set plus the
            # killed projectives
            sigma = frozenset(emb.module(x) for x in locq.trivial) | {
                algebra.projective(v) for v in loc.annihilated
            }
            if canonicalise(algebra, sigma) != loc:
                fails.append(Failure(name, "quotient-roundtrip", f"{loc}"))
    if _is_hereditary_line(algebra):
        for loc in locs:
            if loc.pure != loc.injective:
                fails.append(Failure(name, "pure-vs-injective", f"{loc}"))
    # every annihilation is realised: localising at projectives is surjective
    from itertools import combinations

    verts = list(algebra.vertices())
    for k in range(len(verts) + 1):
        for killed in combinations(verts, k):
            loc = canonicalise(algebra, frozenset(algebra.projective(v) for v in killed))
            if not loc.surjective:
                fails.append(Failure(name, "projective-loc-surjective", f"E={killed}"))
    _check_homological_classification(name, algebra, fails)


def _check_trivial_closure(name, algebra, loc, fails) -> None:
    trivial = loc.trivial
    for x in trivial:
        for y in trivial:
            for middle in extension_middles(algebra, x, y):
                if not set(middle) <= trivial:
                    fails.append(Failure(name, "trivial-extensions", f"{x},{y}"))
            # injections x -> y with cokernel of projective dimension <= 1
            for v in hom_positions(algebra, x, y):
                if y.length - v != x.length or v == 0:
                    continue
                coker = Indec(y.vertex, v)
                if proj_dim(algebra, coker) <= 1 and coker not in trivial:
                    fails.append(Failure(name, "trivial-cokernels", f"{x} -> {y}"))


def _is_full_quotient_cat(algebra, loc) -> bool:
    allowed = frozenset(algebra.vertices()) - loc.annihilated
    full = frozenset(
        x
        for x in list_indecomposables(algebra)
        if set(algebra.factors(x)) <= allowed
    )
    return loc.xcat == full


def _check_homological_classification(name, algebra, fails) -> None:
    if len(algebra.components) != 1 or algebra.components[0].shape != "cycle":
        return
    if len(set(algebra.components[0].kupisch)) != 1:
        return
    classified = {loc.xcat for loc in classify_homological_selfinjective(algebra)}
    generic = {loc.xcat for loc in enumerate_uniloc(algebra) if loc.homological}
    if classified != generic:
        fails.append(
            Failure(
                name,
                "homological-classification",
                f"classified {len(classified)} generic {len(generic)}",
            )
        )


def check_localise_oracle(name: str, algebra: NakayamaAlgebra, fails: list[Failure]) -> None:
    """End(_AB) has the dimension of B, and the unit map of each vertex has
    the predicted kernel; on hereditary instances the tilting comparison
    add(B + B/A) = add(T) holds for pure localisations."""
    hereditary = _is_hereditary_line(algebra)
    for loc in enumerate_uniloc(algebra):
        if loc.ab and oracle.end_dim_lin(algebra, list(loc.ab)) != loc.dim_ab:
            fails.append(Failure(name, "oracle-end-dim", f"{loc}"))
        coker_summands: set[Indec] = set()
        ok_unit = True
        for v in algebra.vertices():
            got = _unit_cokernel(algebra, loc, v, fails, name)
            if got is None:
                ok_unit = False
                continue
            ker_summands, cok = got
            expected_ker = _expected_unit_kernel(algebra, loc, v)
            if ker_summands != expected_ker:
                fails.append(
                    Failure(name, "unit-kernel", f"{loc} P_{v}: {ker_summands} != {expected_ker}")
                )
            coker_summands.update(cok)
        if hereditary and loc.pure and ok_unit:
            t = set(psi_inverse(algebra, loc).modules)
            if set(loc.ab) | coker_summands != t:
                fails.append(
                    Failure(
                        name,
                        "hereditary-tilting-comparison",
                        f"{loc}: {sort_modules(set(loc.ab) | coker_summands)} != {sort_modules(t)}",
                    )
                )


def _expected_unit_kernel(algebra, loc, v) -> tuple[Indec, ...]:
    u = loc.unit_kernels[v - 1]
    c = algebra.c(v)
    if u >= c:
        return ()
    return (Indec(algebra.factor(algebra.projective(v), u), c - u),)


def _unit_cokernel(algebra, loc, v, fails, name):
    """Build the unit P_v -> B (x) P_v explicitly and decompose its kernel
    and cokernel; returns None if the universal property fails."""
    p = oracle.DEFAULT_P
    proj = algebra.projective(v)
    target = list(loc.reflections[v - 1])
    vp = oracle.realize(algebra, [proj], p)
    vr = oracle.realize(algebra, target, p)
    # component maps: occurrence k of vertex v in the top slice of each
    # reflection summand is hit by the position-k map
    g = [np.zeros((vr.dims[i], vp.dims[i]), dtype=np.int64) for i in range(algebra.n)]
    simples_by_cover: dict[tuple[Indec, int], Indec] = {}
    copy_count: dict[Indec, int] = {}
    cover_to_simple = {}
    for y in loc.simples:
        yb = loc.from_base[y]
        cover_to_simple[loc.to_base[loc.algebra.projective(yb.vertex)]] = y
    for summand in target:
        copy = copy_count.get(summand, 0)
        copy_count[summand] = copy + 1
        simples_by_cover[(summand, copy)] = cover_to_simple[summand]
    occurrence: dict[Indec, int] = {}
    for (summand, copy), y in sorted(simples_by_cover.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        # choose the next unused occurrence position of v inside y
        k = occurrence.get(y, 0)
        positions = [j for j in range(y.length) if algebra.factor(y, j) == v]
        pos = positions[k] if k < len(positions) else None
        occurrence[y] = k + 1
        if pos is None:
            fails.append(Failure(name, "unit-occurrence", f"{loc} P_{v}"))
            return None
        for step in range(proj.length):
            if pos + step >= summand.length:
                break
            src_vertex = algebra.factor(proj, step)
            src_idx = [b for b in vp.basis[src_vertex - 1]].index((proj, 0, step))
            tgt_vertex = algebra.factor(summand, pos + step)
            tgt_idx = vr.basis[tgt_vertex - 1].index((summand, copy, pos + step))
            g[tgt_vertex - 1][tgt_idx, src_idx] = 1
    if not _is_unit(algebra, loc, v, g, vp, vr, p):
        fails.append(Failure(name, "unit-universal-property", f"{loc} P_{v}"))
        return None
    ker = oracle.decompose(oracle.kernel_representation(g, vp, vr))
    cok = oracle.decompose(oracle.cokernel_representation(g, vp, vr))
    return ker, set(cok)


def _is_unit(algebra, loc, v, g, vp, vr, p) -> bool:
    """Composition with g must identify Hom(B(x)P_v, Y) with Hom(P_v, Y)."""
    for y in loc.xcat:
        vy = oracle.realize(algebra, [y], p)
        dim_direct = oracle.hom_dim_lin(algebra, algebra.projective(v), y, p)
        basis = oracle.hom_space(vr, vy)
        if len(basis) != dim_direct:
            return False
        composed = []
        for phi in basis:
            composed.append(
                np.concatenate(
                    [
                        (np.asarray(phi[i]) @ g[i] % p).reshape(-1)
                        for i in range(algebra.n)
                    ]
                )
                if algebra.n
                else np.zeros(0, dtype=np.int64)
            )
        if not composed:
            if dim_direct != 0:
                return False
            continue
        rank = oracle._rank(np.array(composed, dtype=np.int64), p)
        if rank != dim_direct:
            return False
    return True


# --------------------------------------------------------------- tautilt --


def check_tautilt(name: str, algebra: NakayamaAlgebra, fails: list[Failure]) -> None:
    stts = enumerate_stt(algebra)
    locs = enumerate_uniloc(algebra)
    torsions = enumerate_torsion_classes(algebra)
    if len(stts) != len(locs):
        fails.append(Failure(name, "stt-count", f"{len(stts)} != {len(locs)}"))
    gen_by_stt = {}
    loc_by_stt = {}
    for stt in stts:
        tors = torsion_from_stt(algebra, stt)
        gen_by_stt[stt] = tors
        if not is_torsion_class(algebra, tors):
            fails.append(Failure(name, "gen-torsion", f"{stt}"))
        if stt_from_torsion(algebra, tors) != stt:
            fails.append(Failure(name, "stt-torsion-roundtrip", f"{stt}"))
        if not is_tau_rigid(algebra, stt.modules):
            fails.append(Failure(name, "stt-tau-rigid", f"{stt}"))
        loc = psi(algebra, stt)
        loc_by_stt[stt] = loc
        if psi_inverse(algebra, loc) != stt:
            fails.append(Failure(name, "psi-roundtrip", f"{stt}"))
        if loc.pure != (not stt.killed):
            fails.append(Failure(name, "purity-support", f"{stt}"))
        if loc.annihilated != stt.killed:
            fails.append(Failure(name, "annihilated-support", f"{stt}"))
        if canonicalise(algebra, sigma_prime(algebra, stt)) != loc:
            fails.append(Failure(name, "sigma-prime-contract", f"{stt}"))
        _check_summand_trivial(name, algebra, stt, loc, fails)
    if set(gen_by_stt.values()) != set(torsions):
        fails.append(Failure(name, "stt-vs-torsion", "Gen images do not exhaust torsion classes"))
    for loc in locs:
        if psi(algebra, psi_inverse(algebra, loc)) != loc:
            fails.append(Failure(name, "psi-inverse-roundtrip", f"{loc}"))
    # tau-order refines the localisation order
    for s1 in stts:
        for s2 in stts:
            if loc_by_stt[s1].xcat <= loc_by_stt[s2].xcat and not gen_by_stt[s1] <= gen_by_stt[s2]:
                fails.append(Failure(name, "order-refinement", f"{s1} vs {s2}"))
    # classical tilting modules are support tau-tilting with full support
    stt_index = {(frozenset(s.modules), s.killed) for s in stts}
    from itertools import combinations

    inds = list_indecomposables(algebra)
    if len(inds) <= 16:
        for mods in combinations(inds, algebra.n):
            if is_tilting_classical(algebra, mods):
                if (frozenset(mods), frozenset()) not in stt_index:
                    fails.append(Failure(name, "tilting-is-stt", f"{mods}"))


def _check_summand_trivial(name, algebra, stt, loc, fails) -> None:
    # trivial summands of T are exactly its non-split-projectives, and a
    # trivial module lies in add T iff it lies in Gen T iff in Gen(xcat)
    tors = torsion_from_stt(algebra, stt)
    split = set(split_projectives(algebra, tors, check=False))
    mods = set(stt.modules)
    for t in stt.modules:
        if (t not in split) != (t in loc.trivial):
            fails.append(Failure(name, "splitproj-vs-trivial", f"{stt}: {t}"))
    gen_xcat = gen_closure(algebra, loc.xcat)
    for x in loc.trivial:
        if not ((x in mods) == (x in tors) == (x in gen_xcat)):
            fails.append(Failure(name, "trivial-in-addT", f"{stt}: {x}"))


# ------------------------------------------------------------------ arcs --


def check_arcs(name: str, algebra: NakayamaAlgebra, fails: list[Failure]) -> None:
    try:
        from .arcs import _uniform_family

        shape, n, h = _uniform_family(algebra)
    except Exception:
        return
    diagrams = enumerate_arc_diagrams(shape, n, h)
    locs = enumerate_uniloc(algebra)
    if len(diagrams) != len(locs):
        fails.append(Failure(name, "arc-count", f"{len(diagrams)} != {len(locs)}"))
    for diagram in diagrams:
        if geometric_violation(diagram) is not None:
            fails.append(Failure(name, "arc-geometry", f"{diagram}"))
        if to_arc_diagram(algebra, from_arc_diagram(algebra, diagram)) != diagram:
            fails.append(Failure(name, "arc-roundtrip", f"{diagram}"))
    wanted = {to_arc_diagram(algebra, loc.wtilde) for loc in locs}
    if wanted != set(diagrams):
        fails.append(Failure(name, "arc-vs-wtilde", "enumerated diagrams mismatch"))
    geo = _enumerate_geometric(shape, n, h)
    if set(diagrams) != geo:
        fails.append(
            Failure(name, "arc-rules-equivalence", f"{len(diagrams)} vs {len(geo)} geometric")
        )


def _enumerate_geometric(shape: str, n: int, h: int):
    """Independent enumeration straight from the drawing rules."""
    from itertools import combinations

    from .arcs import ArcDiagram

    bound = min(n - 1, h - 1)
    arcs = []
    for i in range(1, n + 1):
        for length in range(1, bound + 1):
            if shape == "line":
                if i + length <= n:
                    arcs.append((i + length, i))
            else:
                arcs.append(((i - 1 + length) % n + 1, i))
    arc_sets: list[tuple] = []

    def extend(chosen: list, start: int) -> None:
        arc_sets.append(tuple(sorted(chosen)))
        for i in range(start, len(arcs)):
            cand = arcs[i]
            trial = ArcDiagram(shape, n, tuple(sorted(chosen + [cand])), ())
            if geometric_violation(trial) is None:
                chosen.append(cand)
                extend(chosen, i + 1)
                chosen.pop()

    extend([], 0)
    out = set()
    for chosen in arc_sets:
        used = {v for arc in chosen for v in arc}
        free = [v for v in range(1, n + 1) if v not in used]
        for k2 in range(len(free) + 1):
            for loops in combinations(free, k2):
                out.add(ArcDiagram(shape, n, chosen, tuple(sorted(loops))))
    return out


# ----------------------------------------------------------------- driver --


def check_algebra(
    name: str, algebra: NakayamaAlgebra, *, oracle_checks: bool = False
) -> list[Failure]:
    fails: list[Failure] = []
    check_modcat(name, algebra, fails)
    check_subcats(name, algebra, fails)
    check_localise(name, algebra, fails)
    check_tautilt(name, algebra, fails)
    check_arcs(name, algebra, fails)
    if oracle_checks:
        check_modcat_oracle(name, algebra, fails)
        check_localise_oracle(name, algebra, fails)
        check_alpha_decomposable_oracle(name, algebra, fails)
    return fails


def run_battery(
    nmax: int,
    hmax: int,
    *,
    oracle_checks: bool = False,
    include_nonuniform: bool = True,
    progress=None,
) -> list[Failure]:
    fails: list[Failure] = []
    for name, algebra in battery_algebras(nmax, hmax, include_nonuniform):
        got = check_algebra(name, algebra, oracle_checks=oracle_checks)
        fails.extend(got)
        if progress is not None:
            progress(name, got)
    return fails
