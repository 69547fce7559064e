from nakloc import (
    Indec,
    SupportTauTilting,
    build_cycle,
    build_line,
    canonicalise,
    enumerate_stt,
    hasse_stt,
    is_tau_rigid,
    is_tilting_classical,
    psi,
    psi_inverse,
    sigma_prime,
    stt_from_torsion,
    torsion_from_stt,
)

A32 = build_line(3, 2)
A2 = build_line(2, 2)
C33 = build_cycle(3, 3)


def _mods(*pairs):
    return frozenset(Indec(a, t) for a, t in pairs)


def _stt(pairs, killed=()):
    return SupportTauTilting(tuple(sorted(Indec(a, t) for a, t in pairs)), frozenset(killed))


def test_is_tau_rigid():
    assert is_tau_rigid(C33, C33.projectives())
    assert is_tau_rigid(C33, _mods((1, 3), (3, 3), (1, 1)))
    assert not is_tau_rigid(C33, _mods((1, 1), (2, 1)))


def test_is_tilting_classical():
    assert is_tilting_classical(A32, A32.projectives())
    assert is_tilting_classical(A32, _mods((2, 2), (1, 2), (2, 1)))
    assert not is_tilting_classical(A32, _mods((1, 2), (2, 2), (1, 1)))  # pd S_1 = 2


def test_enumerate_counts():
    assert len(enumerate_stt(A2)) == 5
    stts = enumerate_stt(C33)
    assert len(stts) == 20
    assert sum(1 for s in stts if not s.killed) == 10


def test_psi_examples():
    loc1 = psi(A2, _stt([(1, 2), (1, 1)]))
    assert loc1.trivial == _mods((1, 1))
    loc2 = psi(A2, _stt([(1, 1)], killed={2}))
    assert loc2.trivial == _mods((2, 1))
    ident = psi(A2, _stt([(1, 2), (2, 1)]))
    assert ident.trivial == frozenset()
    loc3 = psi(C33, _stt([(1, 3), (3, 3), (1, 1)]))
    assert loc3.trivial == _mods((1, 1))


def test_psi_roundtrip_small():
    for A in (A2, A32, C33):
        for stt in enumerate_stt(A):
            assert psi_inverse(A, psi(A, stt)) == stt


def test_sigma_prime_table_rows():
    assert sigma_prime(C33, _stt([(1, 3), (1, 2), (1, 1)])) == _mods((1, 1), (1, 2))
    assert sigma_prime(C33, _stt([(1, 3), (2, 3), (3, 3)])) == frozenset()
    assert sigma_prime(C33, _stt([(2, 3), (2, 2), (2, 1)])) == _mods((2, 1), (2, 2))
    assert sigma_prime(C33, _stt([(1, 3), (1, 2), (2, 1)])) == _mods((1, 2))
    for stt in enumerate_stt(C33):
        assert canonicalise(C33, sigma_prime(C33, stt)) == psi(C33, stt)


def test_torsion_roundtrip():
    for A in (A2, C33):
        for stt in enumerate_stt(A):
            assert stt_from_torsion(A, torsion_from_stt(A, stt)) == stt


def test_hasse_stt_matches_figure():
    quiver = hasse_stt(A2)
    assert set(quiver.labels) == {"P1+P2", "S1+P1", "S1", "P2", "0"}
    edges = {(quiver.labels[i], quiver.labels[j]) for i, j in quiver.edges}
    assert edges == {
        ("P1+P2", "S1+P1"),
        ("P1+P2", "P2"),
        ("S1+P1", "S1"),
        ("S1", "0"),
        ("P2", "0"),
    }


def test_order_incomparability_witness():
    t1 = _stt([(1, 2), (1, 1)])
    t2 = _stt([(1, 1)], killed={2})
    assert torsion_from_stt(A2, t2) <= torsion_from_stt(A2, t1)
    x1, x2 = psi(A2, t1).xcat, psi(A2, t2).xcat
    assert not (x1 <= x2 or x2 <= x1)
