import pytest

from nakloc import (
    Indec,
    NotTorsion,
    alpha,
    beta,
    build_cycle,
    build_line,
    enumerate_orth_collections,
    enumerate_torsion_classes,
    enumerate_wide,
    ext_projectives,
    is_orthogonal_collection,
    is_torsion_class,
    is_wide,
    lower_star,
    sigma_star,
    simples_of_wide,
    split_projectives,
    wide_from_collection,
)
from nakloc.subcats import beta_sweeps

A32 = build_line(3, 2)
A2 = build_line(2, 2)
C33 = build_cycle(3, 3)
C63 = build_cycle(6, 3)


def _mods(*pairs):
    return frozenset(Indec(a, t) for a, t in pairs)


def test_sigma_star_examples():
    assert sigma_star(A32, _mods((2, 1))) == _mods((1, 1), (2, 2))
    assert sigma_star(A32, frozenset()) == frozenset(
        _mods((1, 1), (1, 2), (2, 1), (2, 2), (3, 1))
    )
    assert sigma_star(A2, _mods((1, 1))) == _mods((1, 2))


def test_lower_star_examples():
    assert lower_star(A32, _mods((1, 1), (2, 2))) == _mods((2, 1))
    assert lower_star(A32, frozenset(sigma_star(A32, frozenset()))) == frozenset()
    assert lower_star(A32, frozenset()) == frozenset(
        _mods((1, 1), (1, 2), (2, 1), (2, 2), (3, 1))
    )


def test_simples_of_wide():
    wide = _mods((1, 1), (2, 2))
    assert simples_of_wide(A32, wide) == wide
    full = sigma_star(A32, frozenset())
    assert simples_of_wide(A32, full) == _mods((1, 1), (2, 1), (3, 1))
    assert simples_of_wide(A32, frozenset()) == frozenset()


def test_wide_from_collection():
    assert wide_from_collection(A32, _mods((1, 1), (2, 2))) == _mods((1, 1), (2, 2))
    assert wide_from_collection(A32, _mods((1, 1), (2, 1), (3, 1))) == frozenset(
        _mods((1, 1), (1, 2), (2, 1), (2, 2), (3, 1))
    )
    # the length-8 wide subcategory of the six-cycle at {S_1, S_4}
    big = wide_from_collection(
        C63, _mods((1, 1), (4, 1), (2, 2), (5, 2))
    )
    assert len(big) == 8
    assert simples_of_wide(C63, big) == _mods((1, 1), (4, 1), (2, 2), (5, 2))


def test_alpha_examples():
    tors = _mods((1, 2), (1, 1))
    assert alpha(A2, tors) == _mods((1, 2))
    full = frozenset(sigma_star(A2, frozenset()))
    assert alpha(A2, full) == full
    assert alpha(A2, frozenset()) == frozenset()
    with pytest.raises(NotTorsion):
        alpha(A2, _mods((1, 2)))  # not quotient-closed


def test_beta_examples():
    assert beta(A2, _mods((1, 2))) == _mods((1, 2), (1, 1))
    assert beta(A2, frozenset()) == frozenset()
    got = beta(A32, _mods((1, 1), (2, 2)))
    # brute-force smallest torsion class containing the wide subcategory
    candidates = [
        t for t in enumerate_torsion_classes(A32) if _mods((1, 1), (2, 2)) <= t
    ]
    assert got == frozenset.intersection(*candidates)
    assert beta_sweeps(A32, _mods((1, 1), (2, 2)))[1] is True


def test_projectives_of_torsion_classes():
    full = frozenset(sigma_star(A2, frozenset()))
    assert set(ext_projectives(A2, full)) == {Indec(1, 2), Indec(2, 1)}
    assert set(split_projectives(A2, full)) == {Indec(1, 2), Indec(2, 1)}
    tors = _mods((1, 2), (1, 1))
    assert set(ext_projectives(A2, tors)) == {Indec(1, 2), Indec(1, 1)}
    assert set(split_projectives(A2, tors)) == {Indec(1, 2)}
    C = build_cycle(3, 3)
    tors = frozenset(
        _mods((1, 3), (1, 2), (1, 1), (3, 3), (3, 2), (3, 1))
    )
    assert set(ext_projectives(C, tors)) == _mods((1, 3), (3, 3), (1, 1))


def test_enumeration_counts():
    assert len(enumerate_orth_collections(A32)) == 12
    assert len(enumerate_orth_collections(C33)) == 20
    assert len(enumerate_orth_collections(build_line(1, 2))) == 2
    assert len(enumerate_torsion_classes(A32)) == 12
    assert len(enumerate_torsion_classes(A2)) == 5
    assert len(enumerate_wide(A32)) == 12
    assert len(enumerate_torsion_classes(C33)) == 20


def test_closure_errors():
    from nakloc import NotWide

    with pytest.raises(NotWide):
        simples_of_wide(A2, _mods((1, 2), (1, 1)))  # kernel S_2 missing
    with pytest.raises(NotTorsion):
        ext_projectives(A2, _mods((1, 2)))
    with pytest.raises(NotTorsion):
        split_projectives(A2, _mods((1, 2)))


def test_collections_are_orthogonal_and_wides_wide():
    for coll in enumerate_orth_collections(C33):
        assert is_orthogonal_collection(C33, coll)
    for wide in enumerate_wide(C33):
        assert is_wide(C33, wide)
    for tors in enumerate_torsion_classes(C33):
        assert is_torsion_class(C33, tors)
