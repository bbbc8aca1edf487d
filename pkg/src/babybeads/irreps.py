"""Explicit matrix models: seminormal irreducibles, skew modules, induction.

Conventions.  A MatrixRep of S_n stores the images of s_1, ..., s_{n-1}
(0-based: gens[i] is the image of (i, i+1)).  Young subgroups are placed
on consecutive letters: S_a x S_b inside S_{a+b} is S_a on the first a
letters and S_b on the last b.  The seminormal basis is adapted to the chain
S_1 < S_2 < ... < S_n on initial segments, so restricting to S_a on the
first letters is block diagonal and skew modules S^{lam/alpha} come out with
S_{n-a} acting on the last letters.
"""

from fractions import Fraction
from functools import lru_cache

from . import exactlinalg as la
from . import perms
from .characters import ClassFunction
from .partitions import contains, partitions_of, removable_cells, size

fmpq_mat = la.fmpq_mat


# ------------------------------------------------------------ tableaux

@lru_cache(maxsize=None)
def standard_tableaux(lam):
    """Standard tableaux of shape lam, as row words (row of letter k).

    Grouped by the cell holding the last letter, so the restriction to
    S_{n-1} is block diagonal with blocks in removable-cell order.
    """
    if size(lam) == 0:
        return ((),)
    out = []
    for row, _ in removable_cells(lam):
        smaller = list(lam)
        smaller[row] -= 1
        smaller = tuple(p for p in smaller if p)
        for t in standard_tableaux(smaller):
            out.append(t + (row,))
    return tuple(out)


def _cols(word):
    seen = {}
    cols = []
    for r in word:
        cols.append(seen.get(r, 0))
        seen[r] = seen.get(r, 0) + 1
    return cols


# ------------------------------------------------------------- MatrixRep

class MatrixRep:
    """A representation of S_n given by matrices for s_1, ..., s_{n-1}."""

    def __init__(self, degree, dim, gens, labels=None):
        self.degree = degree
        self.dim = dim
        self.gens = [la.as_matrix(g) for g in gens]
        self.labels = labels
        self._cache = {}
        if len(self.gens) != max(degree - 1, 0):
            raise ValueError("need %d generators, got %d" % (max(degree - 1, 0), len(self.gens)))

    def matrix(self, p):
        """Image of the permutation p (a tuple of length degree)."""
        p = tuple(p)
        M = self._cache.get(p)
        if M is None:
            M = la.identity(self.dim)
            for i in perms.reduced_word(p):
                M = M * self.gens[i]
            if len(self._cache) < 5000:
                self._cache[p] = M
        return M

    def character(self):
        vals = {}
        for mu in partitions_of(self.degree):
            vals[mu] = la.to_fraction(la.trace(self.matrix(perms.class_representative(mu))))
        return ClassFunction(self.degree, vals)

    def relation_defects(self):
        """Generators that fail s^2 = 1, braid or commutation relations."""
        I = la.identity(self.dim)
        bad = []
        g = self.gens
        for i in range(len(g)):
            if g[i] * g[i] != I:
                bad.append(("square", i))
            if i + 1 < len(g) and g[i] * g[i + 1] * g[i] != g[i + 1] * g[i] * g[i + 1]:
                bad.append(("braid", i))
            for j in range(i + 2, len(g)):
                if g[i] * g[j] != g[j] * g[i]:
                    bad.append(("commute", i, j))
        return bad

    def restrict(self, offset, degree):
        """Restriction to S_degree acting on letters offset, ..., offset+degree-1."""
        return MatrixRep(degree, self.dim, self.gens[offset:offset + max(degree - 1, 0)], self.labels)


class EquivariantMap:
    def __init__(self, source, target, matrix):
        self.source, self.target = source, target
        self.matrix = la.as_matrix(matrix)
        if (self.matrix.nrows(), self.matrix.ncols()) != (target.dim, source.dim):
            raise ValueError("shape mismatch")

    def residuals(self):
        return [self.matrix * a - b * self.matrix for a, b in zip(self.source.gens, self.target.gens)]

    def is_equivariant(self):
        return all(la.is_zero(r) for r in self.residuals())

    def rank(self):
        return la.rank(self.matrix)


def trivial_rep(n):
    return MatrixRep(n, 1, [la.identity(1)] * max(n - 1, 0))


def sign_rep(n):
    return MatrixRep(n, 1, [-la.identity(1)] * max(n - 1, 0))


def zero_rep(n):
    return MatrixRep(n, 0, [fmpq_mat(0, 0)] * max(n - 1, 0))


# ----------------------------------------------------- seminormal form

@lru_cache(maxsize=None)
def seminormal(lam):
    """Young's seminormal form of S^lam over the rationals."""
    lam = tuple(lam)
    n = size(lam)
    tabs = standard_tableaux(lam)
    index = {t: k for k, t in enumerate(tabs)}
    cols = {t: _cols(t) for t in tabs}
    d = len(tabs)
    gens = []
    for i in range(n - 1):
        M = fmpq_mat(d, d)
        for t in tabs:
            k = index[t]
            r1, r2 = t[i], t[i + 1]
            c1, c2 = cols[t][i], cols[t][i + 1]
            a = (c2 - r2) - (c1 - r1)
            if r1 == r2:
                M[k, k] = 1
            elif c1 == c2:
                M[k, k] = -1
            else:
                swapped = t[:i] + (r2, r1) + t[i + 2:]
                k2 = index[swapped]
                M[k, k] = la.fmpq(1, a)
                if r1 < r2:
                    M[k2, k] = 1
                else:
                    M[k2, k] = 1 - la.fmpq(1, a * a)
        gens.append(M)
    return MatrixRep(n, d, gens, list(tabs))


def pieri_block(lam, sub):
    """Basis positions of S^lam spanning the copy of S^sub, |sub| = |lam| - 1.

    These are the tableaux with the last letter in the cell lam/sub; in that
    block the first n-2 generators act exactly as in seminormal(sub).
    """
    if size(sub) != size(lam) - 1 or not contains(sub, lam):
        raise ValueError("%r is not lam minus a cell" % (sub,))
    row = next(i for i in range(len(lam)) if i >= len(sub) or sub[i] < lam[i])
    return [k for k, t in enumerate(standard_tableaux(lam)) if t[-1] == row]


def pieri_inclusion(sub, lam):
    """The S_{n-1}-map S^sub -> S^lam restricted to the first n-1 letters."""
    src, tgt = seminormal(sub), seminormal(lam)
    block = pieri_block(lam, sub)
    M = fmpq_mat(tgt.dim, src.dim)
    for j, k in enumerate(block):
        M[k, j] = 1
    return EquivariantMap(src, tgt.restrict(0, size(sub)), M)


def pieri_projection(lam, sub):
    """The S_{n-1}-map S^lam -> S^sub, left inverse of pieri_inclusion."""
    src, tgt = seminormal(lam), seminormal(sub)
    block = pieri_block(lam, sub)
    M = fmpq_mat(tgt.dim, src.dim)
    for j, k in enumerate(block):
        M[j, k] = 1
    return EquivariantMap(src.restrict(0, size(sub)), tgt, M)


# ------------------------------------------------------- constructions

def tensor(A, B):
    """Diagonal (inner) tensor product of two reps of the same S_n."""
    if A.degree != B.degree:
        raise ValueError("degree mismatch")
    return MatrixRep(A.degree, A.dim * B.dim, [la.kron(a, b) for a, b in zip(A.gens, B.gens)])


def direct_sum(reps, degree=None):
    if degree is None:
        degree = reps[0].degree
    dim = sum(r.dim for r in reps)
    gens = [la.block_diag([r.gens[i] for r in reps]) if reps else fmpq_mat(0, 0)
            for i in range(max(degree - 1, 0))]
    return MatrixRep(degree, dim, gens)


def subrep(R, B):
    """The action of R on the R-stable column span of B (full column rank)."""
    B = la.as_matrix(B)
    W = la.SubspaceBasis.span(B.transpose())
    C = W.coordinates(B)
    Cinv = C.inv() if C.nrows() else C
    gens = []
    for g in R.gens:
        # g B = B A, coordinates via W: C A = coords(g B)
        gens.append(Cinv * W.coordinates(g * B) if B.ncols() else fmpq_mat(0, 0))
    return MatrixRep(R.degree, B.ncols(), gens)


def intertwiners(A, B):
    """Basis of Hom_G(A, B), as a list of B.dim x A.dim matrices.

    Solves g_B X = X g_A for every generator; the solution basis is read off
    the reduced echelon form, so it is canonical.
    """
    if A.degree != B.degree:
        raise ValueError("degree mismatch")
    da, db = A.dim, B.dim
    if da == 0 or db == 0:
        return []
    n = da * db
    # vec(X) row-major: X[i, j] -> i*da + j; g_B X - X g_A
    eqs = []
    for ga, gb in zip(A.gens, B.gens):
        E = la.kron(gb, la.identity(da)) - la.kron(la.identity(db), ga.transpose())
        eqs.append(E)
    if not eqs:
        K = la.identity(n)
    else:
        K = la.nullspace(la.vstack(eqs, cols=n))
    S = la.SubspaceBasis.span(K.transpose(), ambient_dim=n)
    out = []
    for r in range(S.dim()):
        X = fmpq_mat(db, da)
        for i in range(db):
            for j in range(da):
                X[i, j] = S.rows[r, i * da + j]
        out.append(X)
    return out


class SkewModule(MatrixRep):
    """S^{lam/alpha} = Hom_{S_a}(S^alpha, S^lam) with S_{n-a} on the last letters.

    basis[k] is the intertwiner (a dim(lam) x dim(alpha) matrix) for basis
    vector k; the S_{n-a}-action is postcomposition with seminormal(lam).
    """

    def __init__(self, lam, alpha):
        self.lam, self.alpha = tuple(lam), tuple(alpha)
        n, a = size(lam), size(alpha)
        if a > n:
            raise ValueError("|alpha| > |lam|")
        R = seminormal(self.lam)
        self.ambient = R
        if not contains(self.alpha, self.lam):
            self.basis = []
        else:
            self.basis = intertwiners(seminormal(self.alpha), R.restrict(0, a))
        da = irrep_dim(self.alpha)
        self._flat = la.SubspaceBasis.span(
            la.as_matrix([self._vec(X) for X in self.basis]) if self.basis else fmpq_mat(0, R.dim * da),
            ambient_dim=R.dim * da)
        gens = [self.act_matrix(R.gens[a + j]) for j in range(max(n - a - 1, 0))]
        MatrixRep.__init__(self, n - a, len(self.basis), gens)

    @staticmethod
    def _vec(X):
        return [X[i, j] for i in range(X.nrows()) for j in range(X.ncols())]

    def coordinates(self, Xs):
        """Coordinates of a list of intertwiners in the basis (columns)."""
        d = len(self.basis)
        if not Xs:
            return fmpq_mat(d, 0)
        V = la.as_matrix([self._vec(X) for X in Xs]).transpose()
        C = self._flat.coordinates(V)
        # the echelon basis of the flat span is the basis itself (canonical rref)
        return C

    def act_matrix(self, g):
        """Matrix of postcomposition by g (an ambient matrix) on the basis."""
        if not self.basis:
            return fmpq_mat(0, 0)
        return self.coordinates([g * X for X in self.basis])

    def element(self, coords):
        """The intertwiner with the given coordinate column."""
        X = fmpq_mat(self.ambient.dim, irrep_dim(self.alpha))
        for k, T in enumerate(self.basis):
            c = coords[k, 0]
            if c != 0:
                X += c * T
        return X


def irrep_dim(lam):
    return len(standard_tableaux(tuple(lam)))


@lru_cache(maxsize=None)
def skew_module(lam, alpha):
    return SkewModule(tuple(lam), tuple(alpha))


def _normalise(M):
    """Scale so the first nonzero entry in row-major order is 1."""
    for x in M.entries():
        if x != 0:
            return M * (1 / x)
    return M


def skew_surjection(lam, beta, alpha):
    """The canonical S_{n-a}-map S^{lam/beta} -> S^{lam/alpha}, |alpha| = |beta| + 1.

    In the intertwiner model an S_{a-1}-map T: S^beta -> S^lam goes to the
    S_a-map sum_c c T pi c^{-1}, summing over coset representatives of
    S_a / S_{a-1} and with pi: S^alpha -> S^beta the Pieri projection.
    This is the adjunction-then-tensor construction read through duality.
    """
    lam, beta, alpha = tuple(lam), tuple(beta), tuple(alpha)
    a = size(alpha)
    if size(beta) != a - 1 or not contains(beta, alpha) or not contains(alpha, lam):
        raise ValueError("need beta < alpha <= lam with |alpha| = |beta| + 1")
    src, tgt = skew_module(lam, beta), skew_module(lam, alpha)
    R = seminormal(lam)
    Ra = seminormal(alpha)
    pi = pieri_projection(alpha, beta).matrix
    n = size(lam)
    cosets = [perms.transposition(n, k, a - 1) for k in range(a)]
    imgs = []
    for T in src.basis:
        X = fmpq_mat(R.dim, Ra.dim)
        for c in cosets:
            X += R.matrix(c) * T * pi * Ra.matrix(perms.inverse(c[:a]))
        imgs.append(X)
    M = tgt.coordinates(imgs)
    src_res = src.restrict(1, src.degree - 1)
    return EquivariantMap(src_res, tgt, _normalise(M))


# -------------------------------------------------- invariants, induction

def s2_invariants(R, t):
    """Fixed space of an involution t commuting with R, with the induced action.

    Returns (rep, B) with B the inclusion (columns span the invariants).
    """
    t = la.as_matrix(t)
    I = la.identity(R.dim)
    if t * t != I:
        raise ValueError("auxiliary action is not an involution")
    for g in R.gens:
        if g * t != t * g:
            raise ValueError("auxiliary S_2-action does not commute")
    B = la.nullspace(t - I)
    return subrep(R, B), B


def _coset_rep(n, k):
    """Left coset representatives of S_{n-1} (first letters) in S_n."""
    return perms.transposition(n, k, n - 1)


def induce_matrix(R):
    """Induce a rep of S_{n-1} (first n-1 letters) to S_n on the coset basis.

    Basis: c_k (x) v for k = 0..n-1 with c_k = (k, n-1); block k holds c_k.
    """
    n = R.degree + 1
    d = R.dim
    gens = []
    for i in range(n - 1):
        g = perms.adjacent(n, i)
        M = fmpq_mat(n * d, n * d)
        for k in range(n):
            kk = g[k]
            h = perms.compose(perms.inverse(_coset_rep(n, kk)), perms.compose(g, _coset_rep(n, k)))
            assert h[n - 1] == n - 1
            H = R.matrix(h[:n - 1])
            for a in range(d):
                for b in range(d):
                    v = H[a, b]
                    if v != 0:
                        M[kk * d + a, k * d + b] = v
        gens.append(M)
    return MatrixRep(n, n * d, gens)


def induce_map(f, target):
    """Adjoint of an S_{n-1}-map f: R -> target restricted, on induce_matrix(R)."""
    n = target.degree
    R = f.source
    if R.degree != n - 1:
        raise ValueError("degree mismatch")
    blocks = [target.matrix(_coset_rep(n, k)) * f.matrix for k in range(n)]
    return EquivariantMap(induce_matrix(R), target, la.hstack(blocks, rows=target.dim))


# ------------------------------------------------ two-sided representations

class BiRep:
    """A representation of S_m x S_n: commuting generator lists for each side."""

    def __init__(self, m, n, dim, left, right):
        self.m, self.n, self.dim = m, n, dim
        self.left = MatrixRep(m, dim, left)
        self.right = MatrixRep(n, dim, right)

    def matrix(self, sigma, pi):
        return self.left.matrix(sigma) * self.right.matrix(pi)

    def class_traces(self):
        out = {}
        for mu in partitions_of(self.m):
            A = self.left.matrix(perms.class_representative(mu))
            for nu in partitions_of(self.n):
                out[(mu, nu)] = la.to_fraction(la.trace(A * self.right.matrix(perms.class_representative(nu))))
        return out

    def decompose(self):
        from .characters import decompose_pair
        return decompose_pair(self.class_traces(), self.m, self.n)


def outer(A, B):
    """The outer tensor product A boxtimes B of a rep of S_m and one of S_n."""
    IA, IB = la.identity(A.dim), la.identity(B.dim)
    return BiRep(A.degree, B.degree, A.dim * B.dim,
                 [la.kron(g, IB) for g in A.gens], [la.kron(IA, g) for g in B.gens])
