"""Brute-force verifier: explicit quiver representations over a prime field.

Hom and Ext dimensions are recomputed here by solving dense intertwiner
systems with Gaussian elimination mod p, independently of the position
combinatorics in :mod:`nakloc.modcat`.  Deliberately slow and simple; meant
for tests and ``verify --oracle`` runs only.  All structure constants of
uniserial modules are 0/1, so dimensions do not depend on the field; the
default p = 101 is spot-checked against p = 2.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Indec, NakayamaAlgebra
from .modcat import proj_presentation, syzygy

DEFAULT_P = 101


def _arrows(algebra: NakayamaAlgebra) -> list[tuple[int, int]]:
    arrows = []
    for v in algebra.vertices():
        w = algebra.shift(v, 1)
        if w is not None and (algebra.component_of(v).shape == "cycle" or w != v):
            arrows.append((v, w))
    return arrows


@dataclass
class Representation:
    """dims[v-1] and one matrix per arrow (rows: target basis, cols: source)."""

    algebra: NakayamaAlgebra
    p: int
    dims: list[int]
    mats: dict[tuple[int, int], np.ndarray]
    basis: list[list[tuple[Indec, int, int]]]  # per vertex: (summand, copy, position)


def realize(algebra: NakayamaAlgebra, modules, p: int = DEFAULT_P) -> Representation:
    """Canonical 0/1 realisation: M(a,t) has one basis vector per position,
    arrows acting as index shifts; direct sums are block-wise."""
    dims = [0] * algebra.n
    basis: list[list[tuple[Indec, int, int]]] = [[] for _ in range(algebra.n)]
    counted: dict[Indec, int] = {}
    index: dict[tuple[Indec, int, int], int] = {}
    for x in modules:
        algebra.check_module(x)
        copy = counted.get(x, 0)
        counted[x] = copy + 1
        for k in range(x.length):
            v = algebra.factor(x, k)
            index[(x, copy, k)] = dims[v - 1]
            dims[v - 1] += 1
            basis[v - 1].append((x, copy, k))
    mats = {}
    for (v, w) in _arrows(algebra):
        mat = np.zeros((dims[w - 1], dims[v - 1]), dtype=np.int64)
        for (x, copy, k) in basis[v - 1]:
            if k + 1 < x.length:  # factor k+1 of x sits at vertex w by uniseriality
                mat[index[(x, copy, k + 1)], index[(x, copy, k)]] = 1
        mats[(v, w)] = mat
    return Representation(algebra, p, dims, mats, basis)


# -- mod-p linear algebra --------------------------------------------------


def _rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Row-reduce mod p; returns (reduced matrix, pivot columns)."""
    m = mat.copy() % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i, c] % p), None)
        if pivot is None:
            continue
        m[[r, pivot]] = m[[pivot, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def _rank(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    return len(_rref(mat, p)[1])


def _nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of the kernel mod p."""
    rows, cols = mat.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    m, pivots = _rref(mat, p)
    free = [c for c in range(cols) if c not in pivots]
    out = np.zeros((cols, len(free)), dtype=np.int64)
    for j, c in enumerate(free):
        out[c, j] = 1
        for r, pc in enumerate(pivots):
            out[pc, j] = (-m[r, c]) % p
    return out


def _hom_system(v: Representation, w: Representation) -> tuple[np.ndarray, list[tuple[int, int, int]]]:
    """Equations phi_target . f_alpha = g_alpha . phi_source, unknowns phi_v."""
    algebra = v.algebra
    offsets = []
    total = 0
    for i in range(algebra.n):
        offsets.append(total)
        total += w.dims[i] * v.dims[i]
    rows = []
    layout = [(i, w.dims[i], v.dims[i]) for i in range(algebra.n)]
    for (a, b) in _arrows(algebra):
        fv, gw = v.mats[(a, b)], w.mats[(a, b)]
        for r in range(w.dims[b - 1]):
            for c in range(v.dims[a - 1]):
                row = np.zeros(total, dtype=np.int64)
                # (phi_b f)_rc
                for k in range(v.dims[b - 1]):
                    if fv[k, c]:
                        row[offsets[b - 1] + r * v.dims[b - 1] + k] += fv[k, c]
                # -(g phi_a)_rc
                for k in range(w.dims[a - 1]):
                    if gw[r, k]:
                        row[offsets[a - 1] + k * v.dims[a - 1] + c] -= gw[r, k]
                rows.append(row)
    sys = np.array(rows, dtype=np.int64) if rows else np.zeros((0, total), dtype=np.int64)
    return sys, layout


def hom_space(v: Representation, w: Representation) -> list[list[np.ndarray]]:
    """Basis of Hom(v, w) as per-vertex matrix tuples."""
    sys, layout = _hom_system(v, w)
    null = _nullspace(sys, v.p)
    out = []
    for j in range(null.shape[1]):
        vec = null[:, j]
        mats, pos = [], 0
        for (_, dw, dv) in layout:
            mats.append(vec[pos : pos + dw * dv].reshape(dw, dv))
            pos += dw * dv
        out.append(mats)
    return out


def hom_dim_lin(algebra: NakayamaAlgebra, x, y, p: int = DEFAULT_P) -> int:
    """dim Hom via the intertwiner system; x, y: Indec or iterables of them."""
    vx = realize(algebra, _as_list(x), p)
    vy = realize(algebra, _as_list(y), p)
    sys, _ = _hom_system(vx, vy)
    total = sys.shape[1]
    return total - _rank(sys, p)


def _as_list(x) -> list[Indec]:
    return [x] if isinstance(x, Indec) else list(x)


def end_dim_lin(algebra: NakayamaAlgebra, modules, p: int = DEFAULT_P) -> int:
    return hom_dim_lin(algebra, modules, modules, p)


def ext1_dim_lin(algebra: NakayamaAlgebra, x: Indec, y: Indec, p: int = DEFAULT_P) -> int:
    """dim Ext^1 as the cokernel of Hom(P_0, y) -> Hom(Omega x, y).

    The syzygy inclusion rad^t P_0 -> P_0 is explicit in the canonical bases,
    so the restriction map is an honest matrix whose rank is computed mod p.
    """
    if algebra.is_projective(x):
        return 0
    pres = proj_presentation(algebra, x)
    om = syzygy(algebra, x)
    p0 = pres.codomain
    vom, vp0, vy = (realize(algebra, [m], p) for m in (om, p0, y))
    # inclusion om -> p0: position k of om is position k + t of p0
    incl = {
        v: np.zeros((vp0.dims[v - 1], vom.dims[v - 1]), dtype=np.int64)
        for v in algebra.vertices()
    }
    for k in range(om.length):
        v = algebra.factor(om, k)
        # canonical realisations list positions in order, one module each
        row = [pos for (_, _, pos) in vp0.basis[v - 1]].index(k + pres.shift)
        col = [pos for (_, _, pos) in vom.basis[v - 1]].index(k)
        incl[v][row, col] = 1
    hom_p0 = hom_space(vp0, vy)
    hom_om = hom_space(vom, vy)
    if not hom_om:
        return 0
    # express each restricted basis map in the flat coordinates of Hom(om, y)
    def flat(mats):
        return np.concatenate([m.reshape(-1) for m in mats]) if mats else np.zeros(0, dtype=np.int64)

    restricted = [
        flat([(phi[v - 1] @ incl[v]) % p for v in algebra.vertices()]) for phi in hom_p0
    ]
    dim_hom_om = len(hom_om)
    if not restricted:
        return dim_hom_om
    rank = _rank(np.array(restricted, dtype=np.int64), p)
    return dim_hom_om - rank


def decompose(rep: Representation) -> tuple[Indec, ...]:
    """Krull-Schmidt decomposition of a representation into uniserials.

    mult M(a,t) = (#positions at a dying after exactly t steps) minus those
    with a predecessor, read off from ranks of iterated arrow composites.
    """
    algebra, p = rep.algebra, rep.p
    maxlen = max(algebra.kupisch, default=0)

    def composite_rank(a: int, steps: int) -> int:
        if steps == 0:
            return rep.dims[a - 1]
        mat = np.eye(rep.dims[a - 1], dtype=np.int64)
        v = a
        for _ in range(steps):
            w = algebra.shift(v, 1)
            if w is None:
                return 0
            mat = rep.mats[(v, w)] @ mat % p
            v = w
        return _rank(mat, p)

    def exact(a: int, t: int) -> int:  # positions at a with remaining length t
        return composite_rank(a, t - 1) - composite_rank(a, t)

    out: list[Indec] = []
    for a in algebra.vertices():
        for t in range(1, maxlen + 1):
            prev = algebra.shift(a, -1)
            tops = exact(a, t) - (exact(prev, t + 1) if prev is not None else 0)
            out.extend([Indec(a, t)] * tops)
    assert sum(x.length for x in out) == sum(rep.dims)
    return tuple(sorted(out))


def kernel_representation(
    g: list[np.ndarray], v: Representation, w: Representation
) -> Representation:
    """Kernel subrepresentation of an intertwiner g: v -> w."""
    algebra, p = v.algebra, v.p
    bases = [_nullspace(g[i], p) for i in range(algebra.n)]
    dims = [b.shape[1] for b in bases]
    mats = {}
    for (a, b) in _arrows(algebra):
        ka, kb = bases[a - 1], bases[b - 1]
        image = v.mats[(a, b)] @ ka % p
        # solve kb . m = image
        m = np.zeros((kb.shape[1], ka.shape[1]), dtype=np.int64)
        if kb.shape[1]:
            full, pivots = _rref(np.hstack([kb, image]), p)
            for r, pc in enumerate(pivots):
                if pc < kb.shape[1]:
                    m[pc] = full[r, kb.shape[1] :]
                else:
                    raise ArithmeticError("image not contained in kernel subspace")
        elif image.size and image.any():
            raise ArithmeticError("image not contained in kernel subspace")
        mats[(a, b)] = m
    return Representation(algebra, p, dims, mats, [[] for _ in range(algebra.n)])


def cokernel_representation(
    g: list[np.ndarray], v: Representation, w: Representation
) -> Representation:
    """Quotient representation w / im(g)."""
    algebra, p = w.algebra, w.p
    projections = [_quotient_projection(g[i] % p, w.dims[i], p) for i in range(algebra.n)]
    dims = [proj.shape[0] for proj in projections]
    mats = {}
    for (a, b) in _arrows(algebra):
        pa, pb = projections[a - 1], projections[b - 1]
        # induced map on quotients: pb . w_map . section(pa)
        sec = _section(pa, p)
        mats[(a, b)] = pb @ w.mats[(a, b)] @ sec % p
    return Representation(algebra, p, dims, mats, [[] for _ in range(algebra.n)])


def _quotient_projection(img: np.ndarray, dim: int, p: int) -> np.ndarray:
    """Matrix whose rows are coordinates on a complement of the column span."""
    if img.size == 0 or not img.any():
        return np.eye(dim, dtype=np.int64)
    m, pivots = _rref(img.T % p, p)  # row space of img^T = column space coords
    pivot_set = set(pivots)
    free = [c for c in range(dim) if c not in pivot_set]
    proj = np.zeros((len(free), dim), dtype=np.int64)
    for j, c in enumerate(free):
        proj[j, c] = 1
        # subtract the pivot combination reproducing coordinate c
        for r, pc in enumerate(pivots):
            proj[j, pc] = (-m[r, c]) % p
    return proj


def _section(proj: np.ndarray, p: int) -> np.ndarray:
    """Right inverse of a full-row-rank projection matrix."""
    rows, cols = proj.shape
    if rows == 0:
        return np.zeros((cols, 0), dtype=np.int64)
    full, pivots = _rref(proj, p)
    sec = np.zeros((cols, rows), dtype=np.int64)
    for r, pc in enumerate(pivots):
        sec[pc, r] = 1
    # correct: proj @ sec should be identity in rref coordinates
    correction = _modinv_matrix(proj @ sec % p, p)
    return sec @ correction % p


def _modinv_matrix(mat: np.ndarray, p: int) -> np.ndarray:
    n = mat.shape[0]
    aug = np.hstack([mat % p, np.eye(n, dtype=np.int64)])
    full, pivots = _rref(aug, p)
    if pivots[:n] != list(range(n)):
        raise ArithmeticError("matrix not invertible mod p")
    return full[:, n:]
