"""Weight systems, tensor decompositions, g-perp, and explicit module matrices.

All weights are tuples of fundamental coordinates (global across factors).
Explicit modules are built on a weight basis by closing under the lowering
operators, with the contravariant form deciding linear dependence exactly.
The form is positive definite over Q on these modules, so a zero residual
norm is equivalent to membership in the span.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .rootsys import RootSystem, build


@dataclass(frozen=True)
class IrrComponent:
    highest_weight: tuple
    multiplicity: int = 1


def _depth(rs, lam, nu):
    """Height of lam - nu in the root lattice (None if not in the cone)."""
    diff = tuple(a - b for a, b in zip(lam, nu))
    coords = rs.root_coords_of_weight(diff)
    if any(c.denominator != 1 or c < 0 for c in coords):
        return None
    return int(sum(coords))


def _in_weight_polytope(rs, lam, nu):
    return _depth(rs, lam, rs.dominant_representative(nu)) is not None


def weight_multiplicities(rs, lam):
    """Full weight system of the irreducible module V_lam (Freudenthal).

    Returns {weight: multiplicity}; total multiplicity equals weyl_dim(lam).
    """
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    # enumerate the weight system: BFS downward by simple roots
    alpha_fund = [tuple(rs.cartan[j][i] for j in range(rs.rank))
                  for i in range(rs.rank)]
    weights = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for af in alpha_fund:
                c = tuple(a - b for a, b in zip(w, af))
                if c not in weights and _in_weight_polytope(rs, lam, c):
                    weights.add(c)
                    nxt.append(c)
        frontier = nxt
    dominants = sorted((w for w in weights if rs.is_dominant(w)),
                       key=lambda w: (_depth(rs, lam, w), w))
    # Freudenthal recursion, top down
    pos_fund = [rs.fund_coords_of_root(r.coords) for r in rs.positive_roots]
    rho = rs.rho
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    c_top = rs.inner(lam_rho, lam_rho)
    mult = {lam: 1}
    for mu in dominants:
        if mu == lam:
            continue
        total = Fraction(0)
        for af in pos_fund:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, af))
                if nu not in weights:
                    break
                m = mult[rs.dominant_representative(nu)]
                total += 2 * m * rs.inner(nu, af)
                k += 1
        mu_rho = tuple(a + b for a, b in zip(mu, rho))
        denom = c_top - rs.inner(mu_rho, mu_rho)
        m = total / denom
        assert m.denominator == 1 and m > 0
        mult[mu] = int(m)
    out = {w: mult[rs.dominant_representative(w)] for w in weights}
    assert sum(out.values()) == rs.weyl_dim(lam)
    return out


def tensor_decompose(rs, lam, mu):
    """Decompose V_lam (x) V_mu into irreducibles (Brauer-Klimyk).

    Returns a list of IrrComponent sorted by highest weight; the dimension
    identity sum(mult * dim) = dim(lam) * dim(mu) is asserted.
    """
    lam, mu = tuple(lam), tuple(mu)
    if rs.weyl_dim(mu) < rs.weyl_dim(lam):
        lam, mu = mu, lam
    rho = rs.rho
    acc = {}
    for nu, m in weight_multiplicities(rs, lam).items():
        xi = tuple(a + b + c for a, b, c in zip(nu, mu, rho))
        dom, sign = rs.dominize_signed(xi)
        if sign == 0:
            continue
        hw = tuple(a - b for a, b in zip(dom, rho))
        acc[hw] = acc.get(hw, 0) + sign * m
    comps = []
    for hw in sorted(acc):
        if acc[hw]:
            assert acc[hw] > 0
            comps.append(IrrComponent(hw, acc[hw]))
    total = sum(c.multiplicity * rs.weyl_dim(c.highest_weight) for c in comps)
    assert total == rs.weyl_dim(lam) * rs.weyl_dim(mu)
    return comps


def gperp_decompose(rs, lam):
    """Decompose sl(U) minus the represented algebra, U = V_lam.

    Computes V_lam* (x) V_lam, drops one trivial summand (gl -> sl) and one
    adjoint summand per simple factor (the algebra itself).
    """
    lam = tuple(lam)
    n = rs.weyl_dim(lam)
    if n < 2:
        raise ValueError("module must have dimension >= 2")
    comps = {c.highest_weight: c.multiplicity
             for c in tensor_decompose(rs, rs.dual_weight(lam), lam)}
    zero = tuple([0] * rs.rank)
    if comps.get(zero, 0) < 1:
        raise ValueError("no trivial summand found in U* (x) U")
    comps[zero] -= 1
    for s in range(len(rs.factors)):
        adj = rs.adjoint_weight(s)
        if comps.get(adj, 0) < 1:
            raise ValueError(
                f"adjoint summand {adj} missing from U* (x) U; "
                "the weight does not act faithfully on factor "
                f"{rs.factors[s]}")
        comps[adj] -= 1
    out = [IrrComponent(hw, m) for hw, m in sorted(comps.items()) if m]
    total = sum(c.multiplicity * rs.weyl_dim(c.highest_weight) for c in out)
    assert total == n * n - 1 - rs.dim_g()
    return out


# ---------- explicit modules ----------

DEFAULT_ORACLE_BOUND = 30


@dataclass
class RepMatrices:
    """Chevalley generator matrices on an explicit weight basis."""
    rs: RootSystem
    highest_weight: tuple
    dimension: int
    basis_weights: list  # weight tuple per basis vector
    e: list  # one matrix per simple node
    f: list
    h: list  # diagonal


def construct_rep(rs, lam, bound=DEFAULT_ORACLE_BOUND):
    """Exact matrices for V_lam, built by lowering-operator closure.

    Walks the weight system top down.  Each new weight space is spanned by
    f_i applied to the basis one level up; the contravariant Gram matrix
    (computed without ever leaving the already-built part) detects exact
    linear dependence.  Freudenthal multiplicities double-check every level.
    """
    lam = tuple(lam)
    dim = rs.weyl_dim(lam)
    if bound is not None and dim > bound:
        raise ValueError(f"dim V_lam = {dim} exceeds the oracle bound {bound}")
    wsys = weight_multiplicities(rs, lam)
    alpha_fund = [tuple(rs.cartan[j][i] for j in range(rs.rank))
                  for i in range(rs.rank)]
    order = sorted(wsys, key=lambda w: (_depth(rs, lam, w), w))

    basis = {}      # weight -> list of global ids
    gram = {}       # weight -> Gram matrix (rows/cols follow basis order)
    e_coords = {}   # (i, vid) -> coords in basis(weight + alpha_i)
    f_coords = {}   # (i, vid) -> coords in basis(weight - alpha_i)
    weight_of = []

    def add_vector(w):
        vid = len(weight_of)
        weight_of.append(w)
        basis.setdefault(w, []).append(vid)
        return vid

    top = add_vector(lam)
    gram[lam] = [[Fraction(1)]]
    for nu in order:
        if nu == lam:
            continue
        ups = [(i, tuple(a + b for a, b in zip(nu, af)))
               for i, af in enumerate(alpha_fund)]
        cands = [(i, up, b) for i, up in ups if up in basis for b in basis[up]]
        # e_j action of each candidate f_i b, as coords in basis(nu + alpha_j)
        cand_e = []
        for (i, up, b) in cands:
            per_j = {}
            for j, upj in ups:
                if upj not in basis:
                    continue
                coords = [Fraction(0)] * len(basis[upj])
                # f_i (e_j b): e_j b lives two levels up
                upij = tuple(a + b2 for a, b2 in zip(upj, alpha_fund[i]))
                if upij in basis:
                    eb = e_coords.get((j, b))
                    if eb:
                        for k, c in enumerate(eb):
                            if c:
                                fk = f_coords.get((i, basis[upij][k]))
                                if fk:
                                    for t, c2 in enumerate(fk):
                                        coords[t] += c * c2
                # + delta_ij * (nu + alpha_i)(h_j) * b
                if i == j:
                    hval = up[j]
                    if hval:
                        coords[basis[up].index(b)] += Fraction(hval)
                per_j[j] = coords
            cand_e.append(per_j)

        def pairing(x_idx, y_idx):
            # <f_i b, y> = <b, e_i y>
            i, up, b = cands[x_idx]
            ey = cand_e[y_idx].get(i)
            if not ey:
                return Fraction(0)
            row = basis[up].index(b)
            g = gram[up]
            return sum((c * g[row][k] for k, c in enumerate(ey) if c), Fraction(0))

        chosen = []
        G = []
        for x in range(len(cands)):
            p = [pairing(x, y) for y in chosen]
            sq = pairing(x, x)
            if chosen:
                coeffs = linalg.solve_in_span(
                    [[G[r][c] for r in range(len(chosen))] for c in range(len(chosen))], p)
                resid = sq - sum(a * b for a, b in zip(p, coeffs))
            else:
                coeffs = []
                resid = sq
            i, up, b = cands[x]
            if resid != 0:
                # new basis vector
                for r, pr in zip(G, p):
                    r.append(pr)
                G.append(p + [sq])
                vid = add_vector(nu)
                chosen.append(x)
                f_coords[(i, b)] = [Fraction(0)] * (len(chosen) - 1) + [Fraction(1)]
                for j, pe in cand_e[x].items():
                    e_coords[(j, vid)] = pe
            else:
                f_coords[(i, b)] = coeffs
        # pad earlier f_coords rows to the final length
        for (i, up, b) in cands:
            fc = f_coords[(i, b)]
            if len(fc) < len(chosen):
                fc.extend([Fraction(0)] * (len(chosen) - len(fc)))
        assert len(chosen) == wsys[nu], (nu, len(chosen), wsys[nu])
        gram[nu] = G

    assert len(weight_of) == dim
    E = [linalg.zeros(dim, dim) for _ in range(rs.rank)]
    F = [linalg.zeros(dim, dim) for _ in range(rs.rank)]
    H = [linalg.zeros(dim, dim) for _ in range(rs.rank)]
    for vid, w in enumerate(weight_of):
        for i in range(rs.rank):
            H[i][vid][vid] = Fraction(w[i])
            down = tuple(a - b for a, b in zip(w, alpha_fund[i]))
            fc = f_coords.get((i, vid))
            if fc and down in basis:
                for k, c in enumerate(fc):
                    if c:
                        F[i][basis[down][k]][vid] = c
            up = tuple(a + b for a, b in zip(w, alpha_fund[i]))
            ec = e_coords.get((i, vid))
            if ec and up in basis:
                for k, c in enumerate(ec):
                    if c:
                        E[i][basis[up][k]][vid] = c
    return RepMatrices(rs, lam, dim, weight_of, E, F, H)


def commutator(A, B):
    AB = linalg.matmul(A, B)
    BA = linalg.matmul(B, A)
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(AB, BA)]


def root_vector_matrices(rep):
    """Matrices for one chosen root vector per root, via iterated brackets.

    For a non-simple positive root alpha = beta + alpha_i (the decomposition
    recorded during root enumeration) the vectors are e_alpha = [e_i, e_beta]
    and f_alpha = [f_i, f_beta].  The same recipe must be used wherever
    structure constants are needed, so bases stay consistent across modules.
    """
    rs = rep.rs
    emat = {}
    fmat = {}
    for idx, r in enumerate(rs.positive_roots):
        if r.parent is None:
            i = r.coords.index(1)
            emat[r.coords] = rep.e[i]
            fmat[r.coords] = rep.f[i]
        else:
            pidx, i = r.parent
            beta = rs.positive_roots[pidx].coords
            emat[r.coords] = commutator(rep.e[i], emat[beta])
            fmat[r.coords] = commutator(rep.f[i], fmat[beta])
    return emat, fmat


@lru_cache(maxsize=None)
def _companion_factor_rep(family, rank):
    """Smallest faithful module of a simple factor, for structure constants."""
    rs = build([(family, rank)])
    if family == "E":
        node = {6: 0, 7: 6, 8: 7}[rank]
    elif family == "F":
        node = 3
    else:
        node = 0
    lam = tuple(1 if i == node else 0 for i in range(rank))
    return construct_rep(rs, lam, bound=None)


def structure_constants(rs, root_list):
    """Bracket table for the span of {f_alpha : alpha in root_list}.

    Returns {(a, b): {c: coeff}} for a < b meaning
    [f_{alpha_a}, f_{alpha_b}] = sum coeff * f_{alpha_c}.  Computed inside a
    faithful companion module of each factor; cross-factor brackets vanish.
    """
    root_list = [tuple(r) for r in root_list]
    index = {r: k for k, r in enumerate(root_list)}
    factor_of = {r.coords: r.factor for r in rs.positive_roots}
    companion_f = {}
    for s, fac in enumerate(rs.factors):
        rep = _companion_factor_rep(fac.family, fac.rank)
        _, fm = root_vector_matrices(rep)
        off = rs.offsets[s]
        n = fac.rank
        for coords, M in fm.items():
            glob = tuple(coords[i - off] if off <= i < off + n else 0
                         for i in range(rs.rank))
            companion_f[glob] = M
    table = {}
    for a in range(len(root_list)):
        for b in range(a + 1, len(root_list)):
            ra, rb = root_list[a], root_list[b]
            if factor_of[ra] != factor_of[rb]:
                table[(a, b)] = {}
                continue
            gamma = tuple(x + y for x, y in zip(ra, rb))
            br = commutator(companion_f[ra], companion_f[rb])
            if gamma not in index:
                if gamma in companion_f:
                    raise ValueError("bracket leaves the requested span")
                assert all(x == 0 for row in br for x in row)
                table[(a, b)] = {}
                continue
            target = companion_f[gamma]
            coeff = None
            for i, row in enumerate(target):
                for j, x in enumerate(row):
                    if x:
                        coeff = br[i][j] / x
                        break
                if coeff is not None:
                    break
            assert coeff is not None
            for i, row in enumerate(target):
                for j, x in enumerate(row):
                    assert br[i][j] == coeff * x
            table[(a, b)] = {index[gamma]: coeff} if coeff else {}
    return table
