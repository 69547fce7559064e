import pytest

from nakloc import (
    Indec,
    InvalidKupisch,
    build_cycle,
    build_line,
    from_kupisch,
    list_indecomposables,
    module_label,
    parse_algebra,
    parse_modules,
    quotient_by_vertices,
)


def test_build_line_caps_at_path_length():
    assert build_line(3, 2).kupisch == (2, 2, 1)
    assert build_line(1, 2).kupisch == (1,)
    # h >= n gives the hereditary path algebra
    assert build_line(3, 5).kupisch == (3, 2, 1)


def test_build_cycle():
    assert build_cycle(3, 3).kupisch == (3, 3, 3)
    assert build_cycle(6, 3).kupisch == (3,) * 6
    local = build_cycle(1, 4)
    assert local.kupisch == (4,)
    assert local.components[0].shape == "cycle"


def test_from_kupisch_validation():
    assert from_kupisch([("line", (2, 2, 1))]) == build_line(3, 2)
    with pytest.raises(InvalidKupisch):
        from_kupisch([("line", (3, 1, 1))])  # c1 > c2 + 1
    # cycle (2,3) satisfies both cyclic constraints
    from_kupisch([("cycle", (2, 3))])
    with pytest.raises(InvalidKupisch):
        from_kupisch([("cycle", (3, 1))])
    with pytest.raises(InvalidKupisch):
        from_kupisch([("line", (2, 2))])  # last projective not simple
    with pytest.raises(InvalidKupisch):
        from_kupisch([("line", (1, 1))])  # arrow killed on a line


def test_list_indecomposables():
    assert len(list_indecomposables(build_line(3, 2))) == 5
    assert list_indecomposables(build_line(1, 2)) == (Indec(1, 1),)
    assert len(list_indecomposables(build_cycle(3, 3))) == 9
    # ordering is (vertex, length)
    inds = list_indecomposables(build_line(3, 2))
    assert inds == (Indec(1, 1), Indec(1, 2), Indec(2, 1), Indec(2, 2), Indec(3, 1))


def test_quotient_by_vertices_line():
    A = build_line(3, 2)
    B, emb = quotient_by_vertices(A, {2})
    assert [c.kupisch for c in B.components] == [(1,), (1,)]
    assert emb.module(Indec(1, 1)) == Indec(1, 1)
    assert emb.module(Indec(2, 1)) == Indec(3, 1)


def test_quotient_by_vertices_cycle_cut():
    A = build_cycle(3, 3)
    B, emb = quotient_by_vertices(A, {1})
    assert [c.shape for c in B.components] == ["line"]
    assert B.kupisch == (2, 1)
    assert emb.module(Indec(1, 2)) == Indec(2, 2)


def test_quotient_identity_and_zero():
    A = build_cycle(3, 3)
    same, emb = quotient_by_vertices(A, set())
    assert same == A
    zero, _ = quotient_by_vertices(A, {1, 2, 3})
    assert zero.components == ()
    assert zero.n == 0


def test_shift_and_factors():
    A = build_cycle(3, 3)
    assert A.factors(Indec(2, 2)) == (2, 3)
    assert A.factors(Indec(3, 2)) == (3, 1)
    L = build_line(3, 2)
    assert L.shift(3, 1) is None
    assert L.factors(Indec(2, 2)) == (2, 3)


def test_parse_algebra_roundtrip():
    for text in ["line:3,2", "cycle:6,3", "kupisch:line=2,2,1;cycle=3,3"]:
        A = parse_algebra(text)
        assert parse_algebra(A.as_text()) == A
        assert parse_algebra(str(A.as_json()).replace("'", '"')) == A


def test_kupisch_constraints_match_radical_validity():
    # among admissible data, acceptance is exactly "rad P_i is a valid module"
    from itertools import product

    for m in (1, 2, 3, 4):
        for kup in product(range(1, 5), repeat=m):
            for shape in ("line", "cycle"):
                if shape == "line":
                    admissible = kup[-1] == 1 and all(c >= 2 for c in kup[:-1])
                else:
                    admissible = all(c >= 2 for c in kup)
                if not admissible:
                    continue
                rad_ok = all(
                    kup[i] - 1 <= kup[(i + 1) % m]
                    for i in range(m)
                    if kup[i] >= 2 and (shape == "cycle" or i + 1 < m)
                ) and (shape == "cycle" or all(kup[i] < 2 or i + 1 < m for i in range(m)))
                try:
                    from_kupisch([(shape, kup)])
                    accepted = True
                except InvalidKupisch:
                    accepted = False
                assert accepted == rad_ok, (shape, kup)


def test_parse_modules_and_labels():
    A = build_cycle(3, 3)
    mods = parse_modules(A, "M(1,2), S2, P3")
    assert mods == frozenset({Indec(1, 2), Indec(2, 1), Indec(3, 3)})
    assert module_label(A, Indec(1, 2)) == "P1/rad^2P1"
    assert module_label(A, Indec(2, 1)) == "S2"
    assert module_label(A, Indec(3, 3)) == "P3"
    # a simple projective renders as P
    K2 = build_line(2, 2)
    assert module_label(K2, Indec(2, 1)) == "P2"
    with pytest.raises(ValueError):
        parse_modules(A, "M(1,9)")
    assert parse_modules(A, "") == frozenset()
    assert parse_modules(A, '[{"vertex": 1, "length": 2}]') == frozenset({Indec(1, 2)})
