import pytest

from nakloc import (
    Indec,
    InvalidMap,
    NotAnnihilating,
    NotSelfInjective,
    build_cycle,
    build_line,
    canonicalise,
    chains,
    classify_homological_selfinjective,
    compose_with_quotient,
    enumerate_uniloc,
    hasse_uniloc,
    list_indecomposables,
    map_to_modules,
    parse_modules,
    phi,
    phi_inverse,
    w_tilde,
)

A32 = build_line(3, 2)
A2 = build_line(2, 2)
C33 = build_cycle(3, 3)


def _mods(*pairs):
    return frozenset(Indec(a, t) for a, t in pairs)


def test_map_to_modules():
    assert map_to_modules(A32, [(3, 2, 1)]) == _mods((2, 1))
    assert map_to_modules(A32, [(1, 1, 0)]) == frozenset()
    assert map_to_modules(A2, [(2, 1, 1)]) == _mods((1, 1))
    with pytest.raises(InvalidMap):
        map_to_modules(A32, [(3, 1, 1)])  # wrong domain vertex
    with pytest.raises(InvalidMap):
        map_to_modules(A32, [(3, 1, 2)])  # shift reaches the zero map


def test_phi_bijection():
    assert phi(A32, Indec(3, 1)) == Indec(3, 1)  # simple projective to its top
    assert phi(A32, Indec(2, 1)) == Indec(2, 2)
    assert phi(A32, Indec(1, 1)) == Indec(1, 2)
    assert phi(C33, Indec(1, 2)) == Indec(1, 3)
    for A in (A32, C33):
        for x in list_indecomposables(A):
            assert phi_inverse(A, phi(A, x)) == x
            assert phi(A, phi_inverse(A, x)) == x


def test_canonicalise_example_golden():
    loc = canonicalise(A32, _mods((2, 1)))
    assert loc.trivial == _mods((2, 1))
    assert loc.w == _mods((2, 1))
    assert loc.wtilde == _mods((2, 1))
    assert loc.mainnak_collection == _mods((2, 2))
    assert loc.simples == _mods((1, 1), (2, 2))
    assert loc.ab == (Indec(1, 1), Indec(2, 2), Indec(2, 2))
    assert loc.dim_ab == 5
    assert [c.kupisch for c in loc.algebra.components] == [(1,), (1,)]
    assert loc.pure and not loc.injective and not loc.surjective


def test_canonicalise_identity_and_zero():
    ident = canonicalise(A32, frozenset())
    assert ident.trivial == frozenset()
    assert ident.algebra == A32
    assert ident.pure and ident.injective and ident.surjective and ident.homological
    zero = canonicalise(A32, frozenset(A32.projectives()))
    assert zero.xcat == frozenset()
    assert zero.w == frozenset(A32.projectives())
    assert zero.algebra.components == ()
    assert zero.annihilated == {1, 2, 3}
    assert zero.homological


def test_w_tilde_chain():
    A33 = build_line(3, 3)
    w = _mods((1, 1), (2, 1))
    assert chains(A33, w) == ((Indec(1, 1), Indec(2, 1)),)
    assert w_tilde(A33, w) == _mods((1, 2), (2, 2))
    # no composable presentations: unchanged
    assert w_tilde(A33, _mods((1, 1),)) == _mods((1, 1))
    # degenerate chains never appear canonically: over the short line the
    # composite of both arrows is zero and canonicalise absorbs everything
    loc = canonicalise(A32, _mods((1, 1), (2, 1)))
    assert loc.w == frozenset(A32.projectives())


def test_module_structure_injectivity():
    loc = canonicalise(A2, _mods((1, 1)))
    assert loc.reflections == ((Indec(1, 2),), (Indec(1, 2),))
    assert loc.unit_kernels == (2, 1)
    assert loc.injective and loc.pure


def test_reconstruct_cycle():
    loc = canonicalise(build_cycle(6, 3), _mods((1, 1), (4, 1)))
    assert [c.shape for c in loc.algebra.components] == ["cycle"]
    assert loc.algebra.kupisch == (2, 2, 2, 2)
    assert loc.homological


def test_predicates_flags():
    loc = canonicalise(A32, _mods((2, 2)))  # localise at the projective P_2
    assert loc.surjective
    assert loc.annihilated == {2}
    assert not loc.pure
    assert not loc.homological  # the unique non-homological epiclass here
    others = [l for l in enumerate_uniloc(A32) if not l.homological]
    assert others == [loc]


def test_field_has_two_localisations():
    K = build_line(1, 2)
    locs = enumerate_uniloc(K)
    assert len(locs) == 2


def test_two_collection_indexings_differ():
    # the deformed-set indexing and the category-simples indexing are both
    # bijective but are different bijections; the S_2 localisation witnesses
    loc = canonicalise(A32, _mods((2, 1)))
    assert loc.mainnak_collection != loc.simples
    locs = enumerate_uniloc(A32)
    colls = {frozenset(l.mainnak_collection) for l in locs}
    assert colls == {frozenset(l.simples) for l in locs}
    assert len(colls) == len(locs)


def test_enumerate_uniloc_counts():
    assert len(enumerate_uniloc(A2)) == 5
    assert {frozenset(l.trivial) for l in enumerate_uniloc(A2)} == {
        frozenset(),
        _mods((1, 1)),
        _mods((1, 2)),
        _mods((2, 1)),
        _mods((1, 1), (1, 2), (2, 1)),
    }
    assert len(enumerate_uniloc(C33)) == 20


def test_hasse_uniloc_matches_figure():
    quiver = hasse_uniloc(A2)
    assert set(quiver.labels) == {"{0}", "{S1}", "{P1}", "{P2}", "{S1,P1,P2}"}
    edges = {(quiver.labels[i], quiver.labels[j]) for i, j in quiver.edges}
    assert edges == {
        ("{0}", "{S1}"),
        ("{0}", "{P1}"),
        ("{0}", "{P2}"),
        ("{S1}", "{S1,P1,P2}"),
        ("{P1}", "{S1,P1,P2}"),
        ("{P2}", "{S1,P1,P2}"),
    }


def test_compose_with_quotient():
    loc = canonicalise(A2, _mods((2, 1)))  # annihilates vertex 2
    locq, emb = compose_with_quotient(A2, loc)
    assert locq.base.kupisch == (1,)
    assert locq.xcat == frozenset({Indec(1, 1)})  # identity localisation of K
    with pytest.raises(NotAnnihilating):
        compose_with_quotient(A2, canonicalise(A2, frozenset()))


def test_classify_homological():
    with pytest.raises(NotSelfInjective):
        classify_homological_selfinjective(A32)
    cls = classify_homological_selfinjective(build_cycle(6, 3))
    assert len(cls) == 14
    nontrivial = [
        loc
        for loc in cls
        if not loc.semisimple and loc.xcat and len(loc.xcat) != len(list_indecomposables(loc.base))
    ]
    assert sorted(sorted(l.trivial) for l in nontrivial) == [
        sorted(_mods((1, 1), (4, 1))),
        sorted(_mods((2, 1), (5, 1))),
        sorted(_mods((3, 1), (6, 1))),
    ]
    # h > n coprime: only identity and zero
    assert len(classify_homological_selfinjective(build_cycle(2, 5))) == 2
    assert len(classify_homological_selfinjective(build_cycle(3, 3))) == 8


def test_localise_via_parse():
    loc = canonicalise(A32, parse_modules(A32, "M(2,1)"))
    assert loc.dim_ab == 5


def test_property_violations_are_named():
    from nakloc import PropertyViolation

    A33 = build_line(3, 3)
    with pytest.raises(PropertyViolation, match="top-series"):
        chains(A33, _mods((1, 1), (1, 2)))
    with pytest.raises(PropertyViolation, match=r"\(4\)"):
        w_tilde(build_cycle(4, 4), _mods((1, 1), (4, 2)))  # shared domain P_2
    with pytest.raises(PropertyViolation, match=r"\(3\)"):
        w_tilde(A33, _mods((1, 2), (2, 2)))  # projective under the arc
    with pytest.raises(PropertyViolation, match=r"\(5\)"):
        w_tilde(build_line(4, 4), _mods((1, 2), (2, 2)))  # crossing arcs
    with pytest.raises(PropertyViolation, match=r"\(1\)"):
        w_tilde(build_cycle(2, 4), _mods((1, 2),))  # length past the rank
    with pytest.raises(PropertyViolation, match=r"\(2\)"):
        w_tilde(build_cycle(4, 4), _mods((1, 2), (3, 2)))  # chain closes up


def test_threaded_use_is_consistent():
    from concurrent.futures import ThreadPoolExecutor

    def job(_):
        A = build_line(3, 2)  # equal value, fresh object
        return tuple(sorted(loc.trivial_label() for loc in enumerate_uniloc(A)))

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(job, range(16)))
    assert len(set(results)) == 1
