"""Root systems and Weyl combinatorics for semisimple types, Bourbaki numbering.

Conventions, fixed once and used everywhere:
  * cartan[i][j] = <alpha_i^vee, alpha_j>; column j holds the fundamental
    coordinates of alpha_j.
  * Weights are stored in fundamental-weight coordinates (tuples, one block
    per simple factor, concatenated in declaration order).
  * Roots are stored in simple-root coordinates.
  * The invariant form is normalized per simple factor so the highest root
    has squared length 2.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg

FAMILIES = "ABCDEFG"


@dataclass(frozen=True)
class SimpleFactor:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = (
            (f == "A" and n >= 1)
            or (f in "BC" and n >= 2)
            or (f == "D" and n >= 3)
            or (f == "E" and n in (6, 7, 8))
            or (f == "F" and n == 4)
            or (f == "G" and n == 2)
        )
        if not ok:
            raise ValueError(f"no simple type {f}{n}")

    def __str__(self):
        return f"{self.family}{self.rank}"


def _cartan_simple(factor):
    """Integer Cartan matrix of one simple factor, Bourbaki numbering."""
    f, n = factor.family, factor.rank
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = 2

    def bond(i, j, a=-1, b=-1):
        A[i][j] = a
        A[j][i] = b

    if f in "ABCFG":
        for i in range(n - 1):
            bond(i, i + 1)
    if f == "B":
        bond(n - 2, n - 1, -1, -2)  # alpha_n short
    elif f == "C":
        bond(n - 2, n - 1, -2, -1)  # alpha_n long
    elif f == "D":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 3, n - 2)
        bond(n - 3, n - 1)
        A[n - 2][n - 1] = A[n - 1][n - 2] = 0
    elif f == "E":
        # chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif f == "F":
        bond(1, 2, -1, -2)  # alpha_3, alpha_4 short
    elif f == "G":
        bond(0, 1, -3, -1)  # alpha_1 short
    return A


def _lengths_simple(factor):
    """Half squared lengths d_i = (a_i, a_i)/2, long roots normalized to 1."""
    f, n = factor.family, factor.rank
    d = [Fraction(1)] * n
    if f == "B":
        d[n - 1] = Fraction(1, 2)
    elif f == "C":
        for i in range(n - 1):
            d[i] = Fraction(1, 2)
    elif f == "F":
        d[2] = d[3] = Fraction(1, 2)
    elif f == "G":
        d[0] = Fraction(1, 3)
    return d


@dataclass(frozen=True)
class PositiveRoot:
    coords: tuple  # simple-root coordinates, global (ints)
    factor: int
    height: int
    parent: tuple | None  # (index of beta in positive_roots, simple index i) with root = beta + alpha_i


class RootSystem:
    """Root data for a semisimple product, factors block-concatenated."""

    def __init__(self, factors):
        self.factors = [f if isinstance(f, SimpleFactor) else SimpleFactor(*f)
                        for f in factors]
        if not self.factors:
            raise ValueError("empty factor list")
        self.rank = sum(f.rank for f in self.factors)
        self.offsets = []
        off = 0
        for f in self.factors:
            self.offsets.append(off)
            off += f.rank
        self.cartan = self._block_cartan()
        self.inverse_cartan = _invert(self.cartan)
        self.d = []
        for f in self.factors:
            self.d.extend(_lengths_simple(f))
        self.positive_roots = self._enumerate_positive_roots()
        self._root_index = {r.coords: i for i, r in enumerate(self.positive_roots)}
        self.weyl_vector = tuple([1] * self.rank)
        self.rho = self.weyl_vector
        self.highest_root_per_factor = [self._highest_root(s)
                                        for s in range(len(self.factors))]
        self._norm_factor = self._norm_normalizers()
        # (omega_i, omega_j) before the per-factor theta normalization
        self._gram = [[self.inverse_cartan[j][i] * self.d[j] for j in range(self.rank)]
                      for i in range(self.rank)]

    def _block_cartan(self):
        C = [[0] * self.rank for _ in range(self.rank)]
        for f, off in zip(self.factors, self.offsets):
            block = _cartan_simple(f)
            for i in range(f.rank):
                for j in range(f.rank):
                    C[off + i][off + j] = block[i][j]
        return C

    def _enumerate_positive_roots(self):
        roots = []
        seen = {}
        for i in range(self.rank):
            coords = tuple(1 if j == i else 0 for j in range(self.rank))
            seen[coords] = len(roots)
            roots.append(PositiveRoot(coords, self.factor_of_node(i), 1, None))
        frontier = list(range(self.rank))
        while frontier:
            new_frontier = []
            for ri in frontier:
                root = roots[ri]
                for i in range(self.rank):
                    if self.factor_of_node(i) != root.factor:
                        continue
                    cand = list(root.coords)
                    cand[i] += 1
                    cand = tuple(cand)
                    if cand in seen:
                        continue
                    # root string: cand is a root iff p - <root, alpha_i^vee> > 0
                    p = 0
                    lower = list(root.coords)
                    while True:
                        lower[i] -= 1
                        t = tuple(lower)
                        if all(x == 0 for x in t) or t in seen:
                            p += 1
                        else:
                            break
                    pairing = sum(root.coords[j] * self.cartan[i][j]
                                  for j in range(self.rank))
                    if p - pairing > 0:
                        seen[cand] = len(roots)
                        roots.append(PositiveRoot(cand, root.factor,
                                                  root.height + 1, (ri, i)))
                        new_frontier.append(len(roots) - 1)
            frontier = new_frontier
        order = sorted(range(len(roots)), key=lambda k: (roots[k].height, roots[k].coords))
        remap = {old: new for new, old in enumerate(order)}
        return [PositiveRoot(roots[k].coords, roots[k].factor, roots[k].height,
                             None if roots[k].parent is None
                             else (remap[roots[k].parent[0]], roots[k].parent[1]))
                for k in order]

    def _highest_root(self, s):
        best = None
        for r in self.positive_roots:
            if r.factor == s and (best is None or r.height > best.height):
                best = r
        # the highest root dominates every positive root of the factor coordinatewise
        for r in self.positive_roots:
            if r.factor == s:
                assert all(b >= c for b, c in zip(best.coords, r.coords))
        return best.coords

    def _norm_normalizers(self):
        """Per-node scale so each factor's highest root gets squared length 2."""
        scale = [Fraction(1)] * self.rank
        for s, f in enumerate(self.factors):
            theta = self.highest_root_per_factor[s]
            nn = self._raw_norm2(theta)
            for i in range(f.rank):
                scale[self.offsets[s] + i] = Fraction(2) / nn
        return scale

    def _raw_norm2(self, root_coords):
        return sum(root_coords[i] * root_coords[j] * self.d[i] * self.cartan[i][j]
                   for i in range(self.rank) for j in range(self.rank)
                   if root_coords[i] and root_coords[j])

    # ---------- node / factor bookkeeping ----------

    def factor_of_node(self, i):
        for s in range(len(self.factors) - 1, -1, -1):
            if i >= self.offsets[s]:
                return s
        raise IndexError(i)

    def fund_coords_of_root(self, root_coords):
        """Fundamental coordinates of a root given in simple-root coordinates."""
        return tuple(sum(self.cartan[i][j] * root_coords[j] for j in range(self.rank))
                     for i in range(self.rank))

    def root_coords_of_weight(self, weight):
        """Simple-root coordinates (rational) of a weight in fundamental coords."""
        return tuple(sum(self.inverse_cartan[i][j] * weight[j] for j in range(self.rank))
                     for i in range(self.rank))

    # ---------- pairings ----------

    def pair_coroot(self, weight, root_coords):
        """<weight, alpha^vee> for a root alpha; exact rational."""
        num = sum(weight[j] * root_coords[j] * self.d[j] for j in range(self.rank)
                  if weight[j] and root_coords[j])
        return 2 * num / self._raw_norm2(root_coords)

    def inner(self, w1, w2):
        """Invariant form on weights, highest root squared length 2 per factor."""
        total = Fraction(0)
        for i in range(self.rank):
            if not w1[i]:
                continue
            for j in range(self.rank):
                if w2[j]:
                    total += Fraction(w1[i]) * Fraction(w2[j]) \
                        * self._gram[i][j] * self._norm_factor[j]
        return total

    # ---------- Weyl machinery ----------

    def is_dominant(self, weight):
        return all(c >= 0 for c in weight)

    def reflect(self, i, weight):
        """Simple reflection sigma_i acting linearly on a weight."""
        ci = weight[i]
        if not ci:
            return tuple(weight)
        return tuple(weight[j] - ci * self.cartan[j][i] for j in range(self.rank))

    def affine_action(self, i, weight):
        """sigma_i . mu = sigma_i(mu + rho) - rho."""
        shifted = tuple(c + 1 for c in weight)
        return tuple(c - 1 for c in self.reflect(i, shifted))

    def dominant_representative(self, weight):
        """The dominant Weyl-orbit representative of a weight."""
        w = tuple(weight)
        while True:
            for i in range(self.rank):
                if w[i] < 0:
                    w = self.reflect(i, w)
                    break
            else:
                return w

    def dominize_signed(self, weight):
        """(dominant rep, det sign), or (None, 0) if the weight lies on a wall."""
        w = tuple(weight)
        sign = 1
        while True:
            for i in range(self.rank):
                if w[i] == 0:
                    return None, 0
                if w[i] < 0:
                    w = self.reflect(i, w)
                    sign = -sign
                    break
            else:
                return w, sign

    def weyl_orbit(self, weight):
        """Full Weyl orbit of a weight (set of tuples)."""
        seen = {tuple(weight)}
        frontier = [tuple(weight)]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    r = self.reflect(i, w)
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        return seen

    def weyl_dim(self, weight):
        """Weyl dimension formula; weight must be dominant integral."""
        if not self.is_dominant(weight):
            raise ValueError(f"weight {weight} is not dominant")
        dim = Fraction(1)
        rho = self.rho
        for r in self.positive_roots:
            num = self.pair_coroot(tuple(a + b for a, b in zip(weight, rho)), r.coords)
            den = self.pair_coroot(rho, r.coords)
            dim *= num / den
        assert dim.denominator == 1 and dim > 0
        return int(dim)

    def casimir(self, weight):
        """<lam, lam + 2 rho> with each factor's highest root of squared length 2."""
        if not self.is_dominant(weight):
            raise ValueError(f"weight {weight} is not dominant")
        shifted = tuple(c + 2 for c in weight)
        return self.inner(weight, shifted)

    def dual_weight(self, weight):
        """Highest weight of the dual module, via the diagram involution."""
        out = list(weight)
        for f, off in zip(self.factors, self.offsets):
            n = f.rank
            block = list(weight[off:off + n])
            if f.family == "A":
                block = block[::-1]
            elif f.family == "D" and n % 2 == 1:
                block[n - 2], block[n - 1] = block[n - 1], block[n - 2]
            elif f.family == "E" and n == 6:
                block[0], block[5] = block[5], block[0]
                block[2], block[4] = block[4], block[2]
            out[off:off + n] = block
        return tuple(out)

    def adjoint_weight(self, s=0):
        """Highest weight of factor s's adjoint module, in global coordinates."""
        return self.fund_coords_of_root(self.highest_root_per_factor[s])

    def dim_g(self):
        return sum(2 * sum(1 for r in self.positive_roots if r.factor == s) + f.rank
                   for s, f in enumerate(self.factors))

    def __repr__(self):
        return "x".join(str(f) for f in self.factors)


def _invert(int_matrix):
    n = len(int_matrix)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(int_matrix)]
    for c in range(n):
        piv = next(i for i in range(c, n) if M[i][c])
        M[c], M[piv] = M[piv], M[c]
        pv = M[c][c]
        M[c] = [x / pv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return [row[n:] for row in M]


def build(factors):
    """Build a RootSystem from a list of SimpleFactor (or (family, rank) pairs)."""
    return RootSystem(factors)


def parse_type(text):
    """Parse 'A2', 'A1xA1', 'A1,A1' into a RootSystem."""
    parts = text.replace("x", ",").split(",")
    factors = []
    for p in parts:
        p = p.strip().upper()
        if len(p) < 2 or p[0] not in FAMILIES or not p[1:].isdigit():
            raise ValueError(f"cannot parse simple type {p!r}")
        factors.append(SimpleFactor(p[0], int(p[1:])))
    return build(factors)
