"""Universal localisations of Nakayama algebras, up to epiclasses.

An epiclass is canonically keyed by its module category ``xcat`` inside the
base module category; everything else on the record (trivial modules, their
per-vertex minimal set W, the chain-deformed set W~, the orthogonal
collection indexing it, the reconstructed basic algebra B with its
A-module structure) is a derived view.  ``canonicalise`` builds the whole
record from any generating set of modules.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd, lcm

from .algebra import (
    Indec,
    NakayamaAlgebra,
    Component,
    VertexEmbedding,
    quotient_by_vertices,
    module_label,
    sort_modules,
)
from .modcat import (
    comp_factor_mult,
    ext_dim,
    omega_orbit,
    submodules,
)
from .poset import HasseQuiver, hasse_quiver
from .subcats import (
    Subcat,
    enumerate_orth_collections,
    lower_star,
    sigma_star,
    simples_of_wide,
    wide_from_collection,
)


class InvalidMap(ValueError):
    """A projective-to-projective map with impossible vertex arithmetic."""


class PropertyViolation(AssertionError):
    """A minimal trivial set breaking one of its structural properties."""


class StructureViolation(AssertionError):
    """Reconstruction produced something that is not a Nakayama datum."""


class NotSelfInjective(ValueError):
    pass


class NotAnnihilating(ValueError):
    pass


def map_to_modules(
    algebra: NakayamaAlgebra, maps: list[tuple[int, int, int]]
) -> frozenset[Indec]:
    """Translate maps P_b -> P_a with image rad^l P_a into their cokernels.

    Shift l = 0 is an isomorphism and contributes nothing; zero maps are
    rejected (annihilate by passing projectives directly instead).
    """
    out = set()
    for (b, a, shift) in maps:
        if not (1 <= a <= algebra.n and 1 <= b <= algebra.n):
            raise InvalidMap(f"vertex out of range in ({b}, {a}, {shift})")
        if shift < 0 or shift >= algebra.c(a):
            raise InvalidMap(f"map ({b}->{a}, rad^{shift}) is zero or out of range")
        if algebra.shift(a, shift) != b:
            raise InvalidMap(f"no map P_{b} -> P_{a} with image rad^{shift}")
        if shift > 0:
            out.add(Indec(a, shift))
    return frozenset(out)


def phi(algebra: NakayamaAlgebra, x: Indec) -> Indec:
    """Length-shift bijection on indecomposables: projectives to their tops,
    anything else one step longer."""
    if algebra.is_projective(x):
        return algebra.simple(x.vertex)
    return Indec(x.vertex, x.length + 1)


def phi_inverse(algebra: NakayamaAlgebra, x: Indec) -> Indec:
    if x.length >= 2:
        return Indec(x.vertex, x.length - 1)
    return algebra.projective(x.vertex)


# -- minimal trivial sets and their deformation ----------------------------


def minimal_trivials(algebra: NakayamaAlgebra, trivial: Subcat) -> Subcat:
    """Per vertex, the shortest trivial quotient of the projective; the
    projective itself (annihilation) counts as length zero and wins."""
    out = set()
    for v in algebra.vertices():
        proj = algebra.projective(v)
        if proj in trivial:
            out.add(proj)
            continue
        for t in range(1, algebra.c(v)):
            if Indec(v, t) in trivial:
                out.add(Indec(v, t))
                break
    return frozenset(out)


def _source(algebra: NakayamaAlgebra, x: Indec) -> int:
    """Vertex of the presentation domain P_1 of a non-projective module."""
    v = algebra.shift(x.vertex, x.length)
    assert v is not None
    return v


def _covered(algebra: NakayamaAlgebra, arc: Indec) -> frozenset[int]:
    """Vertices of the closed presentation span top..domain of an arc."""
    return frozenset(algebra.factor(arc, p) for p in range(arc.length + 1))


def _interior(algebra: NakayamaAlgebra, arc: Indec) -> frozenset[int]:
    return frozenset(algebra.factor(arc, p) for p in range(1, arc.length))


def _pair_shape(algebra: NakayamaAlgebra, x: Indec, y: Indec) -> str:
    """Relative position of two presentation arcs: separated, consecutive
    (sharing exactly the head-to-tail point), nested, or crossing."""
    cx, cy = _covered(algebra, x), _covered(algebra, y)
    meet = cx & cy
    if not meet:
        return "separated"
    if cx <= _interior(algebra, y) or cy <= _interior(algebra, x):
        return "nested"
    if len(meet) == 1:
        v = next(iter(meet))
        if (v == x.vertex and v == _source(algebra, y)) or (
            v == y.vertex and v == _source(algebra, x)
        ):
            return "consecutive"
    return "crossing"


def w_property_violation(algebra: NakayamaAlgebra, w) -> str | None:
    """Check the structural properties of a minimal trivial set.

    Across both quiver shapes these say: distinct tops, non-projective
    lengths below the component size, distinct presentation domains, no
    presentation passing over a projective member, no chain closing into an
    endomorphism, and any two presentation arcs separated, consecutive or
    properly covering one another.  None means fine.
    """
    w = list(w)
    tops = [x.vertex for x in w]
    if len(set(tops)) != len(tops):
        return "top-series clash"
    nonproj = [x for x in w if not algebra.is_projective(x)]
    proj_vertices = {x.vertex for x in w if algebra.is_projective(x)}
    for x in nonproj:
        if x.length > algebra.component_of(x.vertex).size - 1:
            return "(1)"
    sources = [_source(algebra, x) for x in nonproj]
    if len(set(sources)) != len(sources):
        return "(4)"
    for x in nonproj:
        if _covered(algebra, x) & proj_vertices:
            return "(3)"
    by_top = {x.vertex: x for x in nonproj}
    for x in nonproj:
        seen = {x}
        cur = x
        while True:
            nxt = by_top.get(_source(algebra, cur))
            if nxt is None:
                break
            if nxt in seen:
                return "(2)"
            seen.add(nxt)
            cur = nxt
    for i, x in enumerate(nonproj):
        for y in nonproj[i + 1 :]:
            if _pair_shape(algebra, x, y) == "crossing":
                return "(5)"
    return None


def wtilde_property_violation(algebra: NakayamaAlgebra, wt) -> str | None:
    """Check the structural properties of a deformed set: as for the
    minimal set, but presentations may not even be consecutive, and loops
    may sit strictly inside arcs (never on their endpoints)."""
    wt = list(wt)
    tops = [x.vertex for x in wt]
    if len(set(tops)) != len(tops):
        return "top-series clash"
    nonproj = [x for x in wt if not algebra.is_projective(x)]
    proj_vertices = {x.vertex for x in wt if algebra.is_projective(x)}
    for x in nonproj:
        if x.length > algebra.component_of(x.vertex).size - 1:
            return "(1')"
    sources = [_source(algebra, x) for x in nonproj]
    if len(set(sources)) != len(sources):
        return "(3')"
    top_set = {x.vertex for x in nonproj}
    for x in nonproj:
        src = _source(algebra, x)
        if src in top_set or src in proj_vertices:
            return "(2')"
    for i, x in enumerate(nonproj):
        for y in nonproj[i + 1 :]:
            if _pair_shape(algebra, x, y) not in ("separated", "nested"):
                return "(4')"
    return None


def chains(algebra: NakayamaAlgebra, w) -> tuple[tuple[Indec, ...], ...]:
    """Maximal composable runs of presentations inside w, in composition
    order (each member's presentation domain is the next member's cover)."""
    violation = w_property_violation(algebra, w)
    if violation is not None:
        raise PropertyViolation(violation)
    nonproj = [x for x in sort_modules(w) if not algebra.is_projective(x)]
    by_top = {x.vertex: x for x in nonproj}
    sources = {_source(algebra, x) for x in nonproj}
    out = []
    for x in nonproj:
        if x.vertex in sources:  # some presentation feeds into x: not a chain head
            continue
        chain = [x]
        while True:
            nxt = by_top.get(_source(algebra, chain[-1]))
            if nxt is None:
                break
            chain.append(nxt)
        out.append(tuple(chain))
    return tuple(out)


def w_tilde(algebra: NakayamaAlgebra, w) -> Subcat:
    """Deform w: each maximal chain becomes its long composite's cokernel
    plus the in-between projective covers; projectives pass through."""
    out = {x for x in w if algebra.is_projective(x)}
    for chain in chains(algebra, w):
        total = sum(x.length for x in chain)
        head = chain[0]
        if total >= algebra.c(head.vertex):
            raise PropertyViolation(
                f"chain composite at P_{head.vertex} is zero (total shift {total})"
            )
        out.add(Indec(head.vertex, total))
        out.update(algebra.projective(x.vertex) for x in chain[1:])
    violation = wtilde_property_violation(algebra, out)
    if violation is not None:
        raise PropertyViolation(violation)
    return frozenset(out)


# -- the localisation record ------------------------------------------------


@dataclass(frozen=True, eq=False)
class Localisation:
    """One epiclass of universal localisations of ``base``.

    ``algebra`` is the localised ring, basic and up to Morita equivalence;
    ``dict_pairs`` matches its indecomposables with the members of ``xcat``;
    ``reflections[i]`` is the localised ring tensored with P_{i+1}, as a
    multiset of base modules, and ``ab`` their direct sum _AB.
    """

    base: NakayamaAlgebra
    xcat: Subcat
    trivial: Subcat
    w: Subcat
    wtilde: Subcat
    mainnak_collection: Subcat
    simples: Subcat
    algebra: NakayamaAlgebra
    dict_pairs: tuple[tuple[Indec, Indec], ...]
    reflections: tuple[tuple[Indec, ...], ...]
    ab: tuple[Indec, ...]
    unit_kernels: tuple[int, ...]
    annihilated: frozenset[int]
    pure: bool
    injective: bool
    surjective: bool
    semisimple: bool

    def __eq__(self, other) -> bool:
        if not isinstance(other, Localisation):
            return NotImplemented
        return self.base == other.base and self.xcat == other.xcat

    def __hash__(self) -> int:
        return hash((self.base, self.xcat))

    @cached_property
    def to_base(self) -> dict[Indec, Indec]:
        """Indecomposables of the localised ring to base modules."""
        return dict(self.dict_pairs)

    @cached_property
    def from_base(self) -> dict[Indec, Indec]:
        return {v: k for k, v in self.dict_pairs}

    @property
    def dim_ab(self) -> int:
        return sum(x.length for x in self.ab)

    @cached_property
    def homological(self) -> bool:
        """Ext agreement in all degrees between base and localised ring,
        decided on the eventual period of the syzygy orbits."""
        a, b = self.base, self.algebra
        for x in self.xcat:
            xb = self.from_base[x]
            orbit_a, mu_a = omega_orbit(a, x)
            orbit_b, mu_b = omega_orbit(b, xb)
            per_a = max(len(orbit_a) - mu_a, 1)
            per_b = max(len(orbit_b) - mu_b, 1)
            bound = max(mu_a, mu_b) + lcm(per_a, per_b) + 1
            for y in self.xcat:
                yb = self.from_base[y]
                for i in range(1, bound + 1):
                    if ext_dim(a, x, y, i) != ext_dim(b, xb, yb, i):
                        return False
        return True

    @property
    def flags(self) -> dict:
        return {
            "pure": self.pure,
            "injective": self.injective,
            "surjective": self.surjective,
            "semisimple": self.semisimple,
            "homological": self.homological,
            "annihilated_vertices": sorted(self.annihilated),
        }

    def trivial_label(self) -> str:
        if not self.trivial:
            return "{0}"
        return "{" + ",".join(module_label(self.base, x) for x in sort_modules(self.trivial)) + "}"

    def __repr__(self) -> str:
        return f"Localisation(xcat={sort_modules(self.xcat)})"


def canonicalise(algebra: NakayamaAlgebra, sigma) -> Localisation:
    """The epiclass of the universal localisation at a set of modules."""
    sigma = frozenset(sigma)
    for x in sigma:
        algebra.check_module(x)
    return _from_xcat(algebra, sigma_star(algebra, sigma))


@lru_cache(maxsize=None)
def _from_xcat(algebra: NakayamaAlgebra, xcat: Subcat) -> Localisation:
    trivial = lower_star(algebra, xcat)
    w = minimal_trivials(algebra, trivial)
    wtilde = w_tilde(algebra, w)
    mainnak = frozenset(phi(algebra, x) for x in wtilde)
    simples = simples_of_wide(algebra, xcat, check=False)
    b, dict_pairs = reconstruct_algebra(algebra, xcat, simples)
    reflections, ab, units = _module_structure(algebra, xcat, simples, b, dict_pairs)
    annihilated = frozenset(
        v for v in algebra.vertices() if not reflections[v - 1]
    )
    return Localisation(
        base=algebra,
        xcat=xcat,
        trivial=trivial,
        w=w,
        wtilde=wtilde,
        mainnak_collection=mainnak,
        simples=simples,
        algebra=b,
        dict_pairs=dict_pairs,
        reflections=reflections,
        ab=ab,
        unit_kernels=units,
        annihilated=annihilated,
        pure=not annihilated,
        injective=all(units[v - 1] == algebra.c(v) for v in algebra.vertices()),
        surjective=all(
            s in xcat for x in xcat for s in submodules(algebra, x)
        ),
        semisimple=xcat <= simples,
    )


def reconstruct_algebra(
    algebra: NakayamaAlgebra, xcat: Subcat, simples: Subcat
) -> tuple[NakayamaAlgebra, tuple[tuple[Indec, Indec], ...]]:
    """Rebuild the localised ring as a basic Nakayama datum.

    Vertices are the category-simples of xcat, arrows the Ext^1-successors,
    Kupisch entries the lengths of the simples-filtrations of the
    Ext-projective members.  Any failure of these to assemble would
    falsify the theory and raises StructureViolation.
    """
    if not xcat:
        return NakayamaAlgebra(()), ()
    simp = sort_modules(simples)
    succ: dict[Indec, Indec] = {}
    pred: dict[Indec, Indec] = {}
    for y in simp:
        targets = [z for z in simp if ext_dim(algebra, y, z, 1) != 0]
        if len(targets) > 1:
            raise StructureViolation(f"vertex {y} has {len(targets)} outgoing arrows")
        if targets:
            succ[y] = targets[0]
            if targets[0] in pred:
                raise StructureViolation(f"vertex {targets[0]} has two incoming arrows")
            pred[targets[0]] = y

    # walk components: lines from their sources, cycles from their minimum
    remaining = set(simp)
    comp_vertex_lists: list[tuple[str, list[Indec]]] = []
    for y in simp:
        if y in remaining and y not in pred:
            run = [y]
            remaining.discard(y)
            while run[-1] in succ:
                run.append(succ[run[-1]])
                remaining.discard(run[-1])
            comp_vertex_lists.append(("line", run))
    while remaining:
        start = min(remaining)
        run = [start]
        remaining.discard(start)
        cur = succ[start]
        while cur != start:
            run.append(cur)
            remaining.discard(cur)
            cur = succ[cur]
        comp_vertex_lists.append(("cycle", run))
    comp_vertex_lists.sort(key=lambda item: min(item[1]))

    filtration = {x: _simples_filtration(algebra, x, simp, xcat) for x in xcat}
    projectives = [
        x
        for x in sort_modules(xcat)
        if all(ext_dim(algebra, x, m, 1) == 0 for m in xcat)
    ]
    cover = {}
    for x in projectives:
        top = filtration[x][0]
        if top in cover:
            raise StructureViolation(f"two Ext-projectives cover {top}")
        cover[top] = x
    if set(cover) != set(simp):
        raise StructureViolation("Ext-projectives do not match category simples")

    components = []
    dict_pairs: list[tuple[Indec, Indec]] = []
    vertex = 0
    for shape, run in comp_vertex_lists:
        kupisch = []
        for y in run:
            vertex += 1
            steps = filtration[cover[y]]
            if steps[0] != y:
                raise StructureViolation("filtration top mismatch")
            kupisch.append(len(steps))
            prefix = 0
            for u, piece in enumerate(steps, start=1):
                prefix += piece.length
                dict_pairs.append((Indec(vertex, u), Indec(cover[y].vertex, prefix)))
        try:
            components.append(Component(shape, tuple(kupisch)))
        except Exception as exc:  # invalid Kupisch datum
            raise StructureViolation(f"reconstructed series invalid: {exc}") from exc
    b = NakayamaAlgebra(tuple(components))
    image = {x for _, x in dict_pairs}
    if image != set(xcat) or len(dict_pairs) != len(xcat):
        raise StructureViolation("localised-ring indecomposables do not match xcat")
    return b, tuple(dict_pairs)


def _simples_filtration(
    algebra: NakayamaAlgebra, x: Indec, simp: tuple[Indec, ...], xcat: Subcat
) -> tuple[Indec, ...]:
    """Strip the unique simples-member quotient until nothing is left."""
    steps = []
    cur: Indec | None = x
    while cur is not None:
        tops = [y for y in simp if y.vertex == cur.vertex and y.length <= cur.length]
        if len(tops) != 1:
            raise StructureViolation(f"no unique simple top for {cur}")
        y = tops[0]
        steps.append(y)
        if y.length == cur.length:
            cur = None
        else:
            cur = Indec(algebra.factor(cur, y.length), cur.length - y.length)
            if cur not in xcat:
                raise StructureViolation(f"filtration kernel {cur} left the category")
    return tuple(steps)


def _module_structure(algebra, xcat, simples, b, dict_pairs):
    to_base = dict(dict_pairs)
    from_base = {v: k for k, v in dict_pairs}
    cover_of = {}
    for y in simples:
        yb = from_base[y]
        cover_of[y] = to_base[b.projective(yb.vertex)]
    reflections = []
    for v in algebra.vertices():
        r = []
        for y in sort_modules(simples):
            r.extend([cover_of[y]] * comp_factor_mult(algebra, y, v))
        reflections.append(tuple(sorted(r)))
    ab = tuple(sorted(x for r in reflections for x in r))
    units = []
    for v in algebra.vertices():
        best = 0
        for x in xcat:
            for pos in range(x.length):
                if algebra.factor(x, pos) == v:
                    best = max(best, x.length - pos)
        units.append(best)
    return tuple(reflections), ab, tuple(units)


def predicates(algebra: NakayamaAlgebra, loc: Localisation) -> dict:
    return loc.flags


def is_homological(algebra: NakayamaAlgebra, loc: Localisation) -> bool:
    return loc.homological


def module_of_localisation(
    algebra: NakayamaAlgebra, loc: Localisation
) -> tuple[tuple[Indec, ...], tuple[tuple[Indec, ...], ...], tuple[int, ...]]:
    return loc.ab, loc.reflections, loc.unit_kernels


# -- enumeration and order --------------------------------------------------


def localisation_of_collection(algebra: NakayamaAlgebra, collection) -> Localisation:
    """The unique epiclass whose module category has the given simples."""
    wide = wide_from_collection(algebra, collection)
    loc = canonicalise(algebra, lower_star(algebra, wide))
    if loc.xcat != wide:
        raise StructureViolation(
            f"localising at *C did not return C for collection {sort_modules(collection)}"
        )
    return loc


@lru_cache(maxsize=None)
def enumerate_uniloc(algebra: NakayamaAlgebra) -> tuple[Localisation, ...]:
    """One localisation per orthogonal collection, sorted by the collection
    indexing them through the deformed minimal trivial sets."""
    locs = [
        localisation_of_collection(algebra, coll)
        for coll in enumerate_orth_collections(algebra)
    ]
    seen = {loc.mainnak_collection for loc in locs}
    if len(seen) != len(locs) or seen != set(enumerate_orth_collections(algebra)):
        raise StructureViolation("deformed trivial sets do not index the epiclasses")
    return tuple(sorted(locs, key=lambda l: sort_modules(l.mainnak_collection)))


def hasse_uniloc(algebra: NakayamaAlgebra) -> HasseQuiver:
    """Hasse quiver of the epiclass order (inclusion of module categories),
    arrows from larger to smaller, nodes labelled by trivial sets."""
    locs = enumerate_uniloc(algebra)
    order = sorted(locs, key=lambda l: (-len(l.xcat), sort_modules(l.trivial)))
    return hasse_quiver([l.xcat for l in order], [l.trivial_label() for l in order])


def compose_with_quotient(
    algebra: NakayamaAlgebra, loc: Localisation
) -> tuple[Localisation, VertexEmbedding]:
    """Transport an annihilating localisation to one of the idempotent
    quotient killing the same vertices."""
    if not loc.annihilated:
        raise NotAnnihilating("localisation annihilates no vertex")
    quotient, emb = quotient_by_vertices(algebra, loc.annihilated)
    xq = frozenset(emb.preimage(x) for x in loc.xcat)
    locq = canonicalise(quotient, lower_star(quotient, xq))
    if locq.xcat != xq:
        raise StructureViolation("transported category is not a localisation category")
    return locq, emb


# -- homological classification over self-injective cyclic algebras --------


def classify_homological_selfinjective(algebra: NakayamaAlgebra) -> tuple[Localisation, ...]:
    """All homological epiclasses of a connected self-injective algebra:
    identity and zero, the semisimple ones (orthogonal collections of
    projectives, present iff the Loewy length is at most the rank), and the
    periodic simple-set ones governed by gcd(rank, Loewy length)."""
    if len(algebra.components) != 1 or algebra.components[0].shape != "cycle":
        raise NotSelfInjective(f"{algebra} is not a connected self-injective datum")
    comp = algebra.components[0]
    if len(set(comp.kupisch)) != 1:
        raise NotSelfInjective("Kupisch series is not constant")
    n, h = comp.size, comp.kupisch[0]
    out = [canonicalise(algebra, frozenset())]
    projs = set(algebra.projectives())
    semisimple_collections = [
        coll
        for coll in enumerate_orth_collections(algebra)
        if coll and coll <= projs
    ]
    for coll in semisimple_collections:
        out.append(canonicalise(algebra, lower_star(algebra, coll)))
    d = gcd(n, h)
    if d != 1 and h > 2:
        kmax = d - 2 if h == d else d - 1
        from itertools import combinations

        for k in range(1, kmax + 1):
            for base_set in combinations(range(1, d + 1), k):
                sigma = frozenset(
                    algebra.simple(i + r * d) for i in base_set for r in range(n // d)
                )
                out.append(canonicalise(algebra, sigma))
    out.append(canonicalise(algebra, frozenset(projs)))
    return tuple(out)
