"""Tableaux of linear Pfaffian systems: prolongation, characters, involutivity.

A tableau is a subspace A of W (x) V*, given by basis matrices (rows W,
columns V).  Elements of A (x) V* are W-valued bilinear maps on V; the
Spencer map delta skew-symmetrizes, its kernel is the prolongation A^(1).
Cartan's test compares dim A^(1) against the sum of the flag-intersected
dimensions A_j for a generic flag; equality is involutivity.
"""

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg

FLAG_SEED = 7
COORDINATE_FLAG_BUDGET = 24
RANDOM_FLAG_COUNT = 16


@dataclass
class Tableau:
    dim_V: int
    dim_W: int
    basis: list  # list of dim_W x dim_V matrices, linearly independent

    def __post_init__(self):
        for M in self.basis:
            if len(M) != self.dim_W or any(len(row) != self.dim_V for row in M):
                raise ValueError("basis matrix has wrong shape")
        flat = [self.flatten(M) for M in self.basis]
        if flat and linalg.rank(flat) != len(flat):
            raise ValueError("tableau basis is linearly dependent")

    def flatten(self, M):
        return [Fraction(x) for row in M for x in row]

    @property
    def dim(self):
        return len(self.basis)


def full_tableau(dim_V, dim_W):
    basis = []
    for w in range(dim_W):
        for v in range(dim_V):
            M = linalg.zeros(dim_W, dim_V)
            M[w][v] = Fraction(1)
            basis.append(M)
    return Tableau(dim_V, dim_W, basis)


def zero_tableau(dim_V, dim_W):
    return Tableau(dim_V, dim_W, [])


def cauchy_riemann_tableau():
    """n = 2, W two-dimensional, A = {[[a, b], [-b, a]]}."""
    return Tableau(2, 2, [
        [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]],
        [[Fraction(0), Fraction(1)], [Fraction(-1), Fraction(0)]],
    ])


def _delta_matrix(t):
    """Matrix of the skew-symmetrization A (x) V* -> W (x) Lambda^2 V*.

    Columns follow the basis (a, j) of A (x) V* (a-major); rows follow
    (w, i < j) of W (x) Lambda^2 V*.
    """
    n, w = t.dim_V, t.dim_W
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    cols = []
    for M in t.basis:
        for j0 in range(n):
            # element B(v_a, v_b) = M[:, a] * delta(b == j0); skew part
            col = []
            for wi in range(w):
                for (i, j) in pairs:
                    col.append(M[wi][i] * (1 if j == j0 else 0)
                               - M[wi][j] * (1 if i == j0 else 0))
            cols.append(col)
    return [[cols[c][r] for c in range(len(cols))] for r in range(w * len(pairs))]


def prolong(t):
    """Basis of A^(1) = (A (x) V*) cap (W (x) S^2 V*).

    Returned as coefficient vectors over the (a, j) basis of A (x) V*;
    use prolongation_bilinear to expand one into a symmetric W-valued form.
    """
    if t.dim == 0:
        return []
    if t.dim_V == 1:
        return [linalg.unit_vector(t.dim, a) for a in range(t.dim)]
    return linalg.kernel_basis(_delta_matrix(t), t.dim * t.dim_V)


def prolongation_bilinear(t, coeffs):
    """Expand an A^(1) coefficient vector into B[w][i][j], symmetric in (i, j)."""
    n, w = t.dim_V, t.dim_W
    B = [[[Fraction(0)] * n for _ in range(n)] for _ in range(w)]
    for a, M in enumerate(t.basis):
        for j0 in range(n):
            c = coeffs[a * n + j0]
            if c:
                for wi in range(w):
                    for i in range(n):
                        if M[wi][i]:
                            B[wi][i][j0] += c * M[wi][i]
    for wi in range(w):
        for i in range(n):
            for j in range(n):
                assert B[wi][i][j] == B[wi][j][i]
    return B


def prolongation_dim(t):
    return len(prolong(t))


def _flag_dims(t, flag):
    """dim A_j for j = 1..n-1 along the ordered flag basis of V."""
    if t.dim == 0:
        return [0] * (t.dim_V - 1)
    rows = []
    for M in t.basis:
        row = []
        for v in flag:
            row.extend(linalg.mat_vec(M, v))
        rows.append(row)
    # incremental ranks over column blocks of width dim_W
    M = linalg._scaled_int_rows(rows)
    dims = []
    nr = len(M)
    r = 0
    prev = 1
    for blk in range(t.dim_V - 1):
        hi = (blk + 1) * t.dim_W
        c = blk * t.dim_W
        while c < hi:
            piv = None
            for i in range(r, nr):
                if M[i][c]:
                    piv = i
                    break
            if piv is not None:
                M[r], M[piv] = M[piv], M[r]
                pivot = M[r][c]
                ncol = len(M[0])
                for i in range(r + 1, nr):
                    if any(M[i][c:]):
                        Mi, Mr = M[i], M[r]
                        mic = Mi[c]
                        for j in range(c, ncol):
                            Mi[j] = (pivot * Mi[j] - mic * Mr[j]) // prev
                prev = pivot
                r += 1
            c += 1
        dims.append(t.dim - r)
    return dims


def _candidate_flags(t, seed):
    n = t.dim_V
    coord = [linalg.unit_vector(n, j) for j in range(n)]
    flags = []
    for perm in itertools.islice(itertools.permutations(range(n)),
                                 COORDINATE_FLAG_BUDGET):
        flags.append([coord[j] for j in perm])
    rng = random.Random(seed)
    for _ in range(RANDOM_FLAG_COUNT):
        flag = [[Fraction(rng.randint(-9, 9)) for _ in range(n)] for _ in range(n)]
        if linalg.rank(flag) == n:
            flags.append(flag)
    return flags


def cartan_characters(t, seed=FLAG_SEED):
    """[dim A_0, ..., dim A_{n-1}] for a character-maximizing generic flag.

    Sweeps all coordinate flags up to a budget plus seeded random rational
    flags, keeping the flag that lexicographically minimizes
    (dim A_1, ..., dim A_{n-1}); generic means exactly this rank-extremal
    behaviour.
    """
    if t.dim_V == 1:
        return [t.dim]
    best = None
    for flag in _candidate_flags(t, seed):
        dims = _flag_dims(t, flag)
        if best is None or dims < best:
            best = dims
    return [t.dim] + best


@dataclass
class InvolutivityReport:
    dim_A: int
    characters: list      # dim A_j, j = 0..n-1
    dim_prolongation: int
    bound: int            # sum of characters
    involutive: bool
    character_of_generality: int | None  # r with A_{r-1} != A_r = A_{r+1}
    generality_dim: int | None           # s_r = dim A_{r-1} - dim A_r


def is_involutive(t, seed=FLAG_SEED):
    """Cartan's test: dim A^(1) <= sum_j dim A_j, involutive iff equality."""
    chars = cartan_characters(t, seed)
    dim_p = prolongation_dim(t)
    bound = sum(chars)
    assert dim_p <= bound, "Cartan inequality violated; flag search is broken"
    dims = chars + [0]
    r = None
    for j in range(len(dims) - 1, 0, -1):
        if dims[j - 1] > dims[j]:
            r = j
            break
    return InvolutivityReport(
        dim_A=t.dim,
        characters=chars,
        dim_prolongation=dim_p,
        bound=bound,
        involutive=dim_p == bound,
        character_of_generality=r,
        generality_dim=None if r is None else dims[r - 1] - dims[r],
    )


def torsion_quotient_dim(t):
    """dim of W (x) Lambda^2 V* / delta(A (x) V*).

    rank delta = n dim A - dim A^(1) by rank-nullity.
    """
    n, w = t.dim_V, t.dim_W
    full = w * n * (n - 1) // 2
    return full - (n * t.dim - prolongation_dim(t))


# ---------- the second-order tableau of a quadratic form ----------

@dataclass
class StabilizerPair:
    dim_r: int
    tableau_r_perp: Tableau


def stabilizer_and_tableau(f2, dim_T, dim_N):
    """Stabilizer of F2 in gl(L) + gl(T) + gl(N) and the complement tableau.

    f2[mu][i][j] (symmetric in i, j) are the components of
    F2 in L (x) S^2 T* (x) N with the one-dimensional L factor trivialized.
    The stabilizer r is the exact kernel of the Leibniz action; its trace-form
    complement maps into W (x) V* with V = L* (x) T and
    W = (L* (x) N) + (T* (x) N), the L* (x) N rows landing in the first
    derived system (identically zero columns).
    """
    n, a = dim_T, dim_N
    if len(f2) != a or any(len(m) != n or any(len(r) != n for r in m) for m in f2):
        raise ValueError("f2 has inconsistent block dimensions")
    for mu in range(a):
        for i in range(n):
            for j in range(n):
                if f2[mu][i][j] != f2[mu][j][i]:
                    raise ValueError("f2 is not symmetric")

    dim_block = 1 + n * n + a * a

    def action(x):
        """x = (xL, xT, xN) flattened; returns (x.F2)[mu][i][j]."""
        xL = x[0]
        xT = [x[1 + i * n: 1 + (i + 1) * n] for i in range(n)]
        xN = [x[1 + n * n + m * a: 1 + n * n + (m + 1) * a] for m in range(a)]
        out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(a)]
        for mu in range(a):
            for i in range(n):
                for j in range(n):
                    v = xL * f2[mu][i][j]
                    for nu in range(a):
                        v += xN[mu][nu] * f2[nu][i][j]
                    for k in range(n):
                        v -= f2[mu][k][j] * xT[k][i] + f2[mu][i][k] * xT[k][j]
                    out[mu][i][j] = v
        return out

    rows = []
    for b in range(dim_block):
        x = linalg.unit_vector(dim_block, b)
        img = action(x)
        rows.append([img[mu][i][j] for mu in range(a) for i in range(n)
                     for j in range(i, n)])
    # r = kernel of the action, as row vectors in the block space
    r_basis = linalg.kernel_basis([[rows[b][c] for b in range(dim_block)]
                                   for c in range(len(rows[0]))], dim_block)
    # verify annihilation exactly
    for v in r_basis:
        img = action(v)
        assert all(x == 0 for m in img for row in m for x in row)
    # trace form on the block space is the standard dot product in these coords
    perp = linalg.kernel_basis(r_basis, dim_block) if r_basis else \
        [linalg.unit_vector(dim_block, b) for b in range(dim_block)]

    basis = []
    for y in perp:
        img = action(y)
        M = linalg.zeros(a + n * a, n)
        for mu in range(a):
            for k in range(n):
                for i in range(n):
                    M[a + k * a + mu][i] = img[mu][k][i]
        basis.append(M)
    keep = linalg.independent_subset([Fraction(x) for row in M for x in row]
                                     for M in basis)
    t = Tableau(n, a + n * a, [basis[i] for i in keep])
    assert len(r_basis) + len(perp) == dim_block
    return StabilizerPair(len(r_basis), t)


# ---------- reduced prolongation ----------

def reduced_prolongation(t, bracket_image):
    """(dim A^(1)_red, discarded rank) for a supplied bracket image.

    bracket_image vectors live in flat W (x) V* (x) V* coordinates
    (index (w, i, j) row-major) and must lie inside A (x) V*; the quotient
    is by the part of their span inside ker delta, and the rank falling
    outside ker delta is reported separately.
    """
    n, w = t.dim_V, t.dim_W
    avstar = []
    for a, M in enumerate(t.basis):
        for j0 in range(n):
            vec = [Fraction(0)] * (w * n * n)
            for wi in range(w):
                for i in range(n):
                    if M[wi][i]:
                        vec[(wi * n + i) * n + j0] = M[wi][i]
            avstar.append(vec)
    coords = []
    for v in bracket_image:
        c = linalg.solve_in_span(avstar, [Fraction(x) for x in v]) if avstar else None
        if c is None:
            raise ValueError("bracket image vector lies outside A (x) V*")
        coords.append(c)
    prol = prolong(t)
    if not coords:
        return len(prol), 0
    inside = linalg.intersect(prol, coords) if prol else []
    discarded = linalg.rank(coords) - len(inside)
    return len(prol) - len(inside), discarded


def reduced_prolongation_dim(t, bracket_image):
    return reduced_prolongation(t, bracket_image)[0]


# ---------- JSON interface ----------

def _parse_rational(s):
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s))


def tableau_from_json(doc):
    """{"dim_V": n, "dim_W": w, "basis": [[row-major "p/q" strings]]}."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    n = int(doc["dim_V"])
    w = int(doc["dim_W"])
    basis = []
    for flat in doc["basis"]:
        if len(flat) != n * w:
            raise ValueError("basis entry has wrong length")
        vals = [_parse_rational(x) for x in flat]
        basis.append([vals[r * n:(r + 1) * n] for r in range(w)])
    return Tableau(n, w, basis)


def tableau_to_json(t):
    return {
        "dim_V": t.dim_V,
        "dim_W": t.dim_W,
        "basis": [[str(x) for x in t.flatten(M)] for M in t.basis],
    }
