import math

import pytest

from nakloc import (
    Indec,
    ProjectiveHasNoTau,
    build_cycle,
    build_line,
    comp_factor_mult,
    ext_dim,
    extension_middles,
    gen_closure,
    hom_dim,
    proj_dim,
    proj_presentation,
    quotients,
    submodules,
    syzygy,
    tau,
)
from nakloc.modcat import omega_power


A32 = build_line(3, 2)
A2 = build_line(2, 2)
C33 = build_cycle(3, 3)


def test_hom_dim_examples():
    assert hom_dim(A32, Indec(3, 1), Indec(2, 2)) == 1  # P_3 -> P_2
    for A in (A32, C33):
        for v in A.vertices():
            assert hom_dim(A, A.simple(v), A.simple(v)) == 1
            for w in A.vertices():
                if w != v:
                    assert hom_dim(A, A.simple(v), A.simple(w)) == 0


def test_end_dim_on_cycles_is_ceil():
    for n in (2, 3):
        for h in (2, 3, 4, 5):
            A = build_cycle(n, h)
            for x in (Indec(1, t) for t in range(1, h + 1)):
                assert hom_dim(A, x, x) == math.ceil(x.length / n)


def test_presentation_and_syzygy():
    pres = proj_presentation(A2, Indec(1, 1))
    assert (pres.domain, pres.codomain, pres.shift) == (Indec(2, 1), Indec(1, 2), 1)
    assert syzygy(A2, Indec(1, 1)) == Indec(2, 1)
    assert syzygy(A2, Indec(1, 2)) is None
    # the cyclic length-1 simples have syzygy period two
    assert syzygy(C33, Indec(1, 1)) == Indec(2, 2)
    assert syzygy(C33, Indec(2, 2)) == Indec(1, 1)
    assert omega_power(C33, Indec(1, 1), 2) == Indec(1, 1)


def test_ext_examples():
    assert ext_dim(A2, Indec(1, 1), Indec(1, 2), 1) == 0
    assert ext_dim(A32, Indec(1, 1), Indec(2, 1), 1) == 1
    # self-extension of period-z modules on the self-injective cycle
    assert ext_dim(C33, Indec(1, 1), Indec(1, 1), 2) == 1


def test_tau():
    assert tau(A2, Indec(1, 1)) == Indec(2, 1)
    assert tau(C33, Indec(1, 2)) == Indec(2, 2)
    assert tau(C33, Indec(3, 1)) == Indec(1, 1)
    with pytest.raises(ProjectiveHasNoTau):
        tau(A2, Indec(1, 2))


def test_quotients_submodules_factors():
    assert quotients(A32, Indec(1, 2)) == (Indec(1, 1), Indec(1, 2))
    assert submodules(A32, Indec(1, 2)) == (Indec(1, 2), Indec(2, 1))
    assert comp_factor_mult(C33, Indec(2, 2), 3) == 1
    assert comp_factor_mult(A32, Indec(2, 2), 1) == 0


def test_gen_closure():
    assert gen_closure(A2, {Indec(1, 2), Indec(1, 1)}) == frozenset(
        {Indec(1, 2), Indec(1, 1)}
    )
    everything = gen_closure(A32, A32.projectives())
    assert len(everything) == 5
    assert gen_closure(A32, ()) == frozenset()


def test_extension_middles_examples():
    # 0 -> P_2 -> P_1 -> S_1 -> 0 over the two-vertex line
    middles = extension_middles(A2, Indec(2, 1), Indec(1, 1))
    assert middles == ((Indec(1, 1), Indec(2, 1)), (Indec(1, 2),))
    # across components / non-adjacent pairs only the split middle remains
    assert extension_middles(A32, Indec(1, 1), Indec(1, 2)) == (
        (Indec(1, 1), Indec(1, 2)),
    )
    A33 = build_line(3, 3)
    middles = extension_middles(A33, Indec(3, 1), Indec(1, 2))
    assert middles[1:] == ((Indec(1, 3),),)
    # the AR sequence of M(1,2) over the hereditary 3-line has a split middle pair
    middles = extension_middles(A33, Indec(2, 2), Indec(1, 2))
    assert (Indec(1, 3), Indec(2, 1)) in middles


def test_proj_dim():
    assert proj_dim(A32, Indec(1, 1)) == 2
    assert proj_dim(A32, Indec(1, 2)) == 0
    assert proj_dim(C33, Indec(1, 1)) == math.inf
