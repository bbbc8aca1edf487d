"""Exact rational linear algebra on top of FLINT's fmpq_mat.

Dense matrices are flint.fmpq_mat throughout.  RationalMatrix is a small
sparse builder for assembling structure maps entry by entry; call .dense()
before doing algebra.  Subspaces are kept as reduced row echelon forms, which
are canonical, so results never depend on the order vectors were supplied in.
"""

from fractions import Fraction

import flint

fmpq_mat = flint.fmpq_mat
fmpq = flint.fmpq


def q(x):
    """Coerce an int, Fraction or fmpq to fmpq."""
    if isinstance(x, fmpq):
        return x
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    return fmpq(x)


def to_fraction(x):
    x = q(x)
    return Fraction(int(x.p), int(x.q))


class RationalMatrix:
    """Sparse rational matrix: {(row, col): value}, zeros never stored."""

    def __init__(self, rows, cols, entries=None):
        self.rows, self.cols = rows, cols
        self.entries = {}
        for (i, j), v in (entries or {}).items():
            self.add(i, j, v)

    def add(self, i, j, v):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("entry (%d, %d) outside %dx%d" % (i, j, self.rows, self.cols))
        v = self.entries.get((i, j), 0) + Fraction(v)
        if v:
            self.entries[(i, j)] = v
        else:
            self.entries.pop((i, j), None)

    def dense(self):
        flat = [fmpq(0)] * (self.rows * self.cols)
        for (i, j), v in self.entries.items():
            flat[i * self.cols + j] = q(v)
        return fmpq_mat(self.rows, self.cols, flat)

    @classmethod
    def from_dense(cls, M):
        M = as_matrix(M)
        out = cls(M.nrows(), M.ncols())
        for i in range(M.nrows()):
            for j in range(M.ncols()):
                v = M[i, j]
                if v != 0:
                    out.entries[(i, j)] = to_fraction(v)
        return out


def as_matrix(M):
    if isinstance(M, fmpq_mat):
        return M
    if isinstance(M, RationalMatrix):
        return M.dense()
    if isinstance(M, flint.fmpz_mat):
        return fmpq_mat(M)
    rows = [list(r) for r in M]
    if not rows:
        return fmpq_mat(0, 0)
    return fmpq_mat(len(rows), len(rows[0]), [q(x) for r in rows for x in r])


def zeros(r, c):
    return fmpq_mat(r, c)


def identity(n):
    M = fmpq_mat(n, n)
    for i in range(n):
        M[i, i] = 1
    return M


def hstack(blocks, rows=None):
    blocks = [as_matrix(b) for b in blocks]
    if rows is None:
        rows = blocks[0].nrows() if blocks else 0
    cols = sum(b.ncols() for b in blocks)
    out = fmpq_mat(rows, cols)
    off = 0
    for b in blocks:
        if b.nrows() != rows:
            raise ValueError("row mismatch in hstack")
        for i in range(rows):
            for j in range(b.ncols()):
                v = b[i, j]
                if v != 0:
                    out[i, off + j] = v
        off += b.ncols()
    return out


def vstack(blocks, cols=None):
    blocks = [as_matrix(b) for b in blocks]
    if cols is None:
        cols = blocks[0].ncols() if blocks else 0
    return hstack([b.transpose() for b in blocks], rows=cols).transpose()


def block_diag(blocks):
    blocks = [as_matrix(b) for b in blocks]
    r = sum(b.nrows() for b in blocks)
    c = sum(b.ncols() for b in blocks)
    out = fmpq_mat(r, c)
    oi = oj = 0
    for b in blocks:
        for i in range(b.nrows()):
            for j in range(b.ncols()):
                v = b[i, j]
                if v != 0:
                    out[oi + i, oj + j] = v
        oi += b.nrows()
        oj += b.ncols()
    return out


def kron(A, B):
    A, B = as_matrix(A), as_matrix(B)
    ar, ac, br, bc = A.nrows(), A.ncols(), B.nrows(), B.ncols()
    out = fmpq_mat(ar * br, ac * bc)
    bent = [(k, l, B[k, l]) for k in range(br) for l in range(bc) if B[k, l] != 0]
    for i in range(ar):
        for j in range(ac):
            a = A[i, j]
            if a == 0:
                continue
            for k, l, b in bent:
                out[i * br + k, j * bc + l] = a * b
    return out


def select_rows(M, idx):
    M = as_matrix(M)
    out = fmpq_mat(len(idx), M.ncols())
    for r, i in enumerate(idx):
        for j in range(M.ncols()):
            out[r, j] = M[i, j]
    return out


def select_cols(M, idx):
    return select_rows(as_matrix(M).transpose(), idx).transpose()


def is_zero(M):
    M = as_matrix(M)
    return all(x == 0 for x in M.entries())


def trace(M):
    M = as_matrix(M)
    return sum((M[i, i] for i in range(min(M.nrows(), M.ncols()))), fmpq(0))


def rank(M):
    M = as_matrix(M)
    if M.nrows() == 0 or M.ncols() == 0:
        return 0
    return M.rank()


def _rref(M):
    if M.nrows() == 0 or M.ncols() == 0:
        return M, 0
    return M.rref()


class SubspaceBasis:
    """Subspace of Q^d stored as the nonzero rows of its reduced echelon form."""

    def __init__(self, ambient_dim, rows=None, pivots=None):
        self.ambient_dim = ambient_dim
        self.rows = rows if rows is not None else fmpq_mat(0, ambient_dim)
        self.pivots = list(pivots or [])

    @classmethod
    def span(cls, vectors, ambient_dim=None):
        """Span of the rows of a matrix (or of a list of row vectors)."""
        V = as_matrix(vectors)
        if ambient_dim is None:
            ambient_dim = V.ncols()
        if V.nrows() == 0:
            return cls(ambient_dim)
        R, r = _rref(V)
        rows = select_rows(R, range(r))
        pivots = []
        for i in range(r):
            j = pivots[-1] + 1 if pivots else 0
            while rows[i, j] == 0:
                j += 1
            pivots.append(j)
        return cls(ambient_dim, rows, pivots)

    def dim(self):
        return len(self.pivots)

    def __len__(self):
        return self.dim()

    def vectors(self):
        """Basis vectors as the columns of a d x r matrix."""
        return self.rows.transpose()

    def reduce(self, V):
        """Reduce the columns of V modulo the subspace (zero at the pivots)."""
        V = as_matrix(V)
        if not self.pivots:
            return V
        coeff = select_rows(V, self.pivots)
        return V - self.rows.transpose() * coeff

    def coordinates(self, V):
        """Coordinates of the columns of V in this basis; raises if outside."""
        V = as_matrix(V)
        coeff = select_rows(V, self.pivots)
        if not is_zero(V - self.rows.transpose() * coeff):
            raise ValueError("vector not in subspace")
        return coeff

    def contains(self, V):
        return is_zero(self.reduce(V))

    def __eq__(self, other):
        return (self.ambient_dim == other.ambient_dim and self.pivots == other.pivots
                and self.rows == other.rows)


def image_basis(M):
    """Echelon basis of the column space of M."""
    M = as_matrix(M)
    return SubspaceBasis.span(M.transpose(), ambient_dim=M.nrows())


def nullspace(M):
    """Basis of {x : M x = 0}, as the columns of a matrix, read off the rref."""
    M = as_matrix(M)
    n = M.ncols()
    R, r = _rref(M)
    pivots = []
    for i in range(r):
        j = pivots[-1] + 1 if pivots else 0
        while R[i, j] == 0:
            j += 1
        pivots.append(j)
    free = [j for j in range(n) if j not in set(pivots)]
    out = fmpq_mat(n, len(free))
    for k, f in enumerate(free):
        out[f, k] = 1
        for i, p in enumerate(pivots):
            out[p, k] = -R[i, f]
    return out


def cokernel(M):
    """Coordinate complement of the column space and the projection onto it.

    Returns (free, P): free lists the non-pivot coordinates, which index a
    basis of the quotient, and P maps ambient vectors to quotient coordinates.
    """
    M = as_matrix(M)
    W = image_basis(M)
    piv = set(W.pivots)
    free = [j for j in range(M.nrows()) if j not in piv]
    P = fmpq_mat(len(free), M.nrows())
    for k, j in enumerate(free):
        P[k, j] = 1
        for i, p in enumerate(W.pivots):
            v = W.rows[i, j]
            if v != 0:
                P[k, p] = -v
    return free, P


def restricted_trace(g, W, check=True):
    """Trace of g on the g-stable subspace W."""
    g = as_matrix(g)
    if W.dim() == 0:
        return fmpq(0)
    G = g * W.vectors()
    if check and not W.contains(G):
        raise ValueError("subspace is not stable under the action")
    return sum((G[p, i] for i, p in enumerate(W.pivots)), fmpq(0))


def quotient_trace(g, W, check=True):
    """Trace of g on the quotient of the ambient space by W."""
    return trace(g) - restricted_trace(g, W, check)


def signed_perm_trace(perm, signs):
    """Trace of the signed permutation e_k -> signs[k] e_{perm[k]}."""
    return sum(s for k, (p, s) in enumerate(zip(perm, signs)) if p == k)


def signed_perm_restricted_trace(perm, signs, W):
    """Trace of a signed permutation on a stable subspace W (no check).

    (g w_i)[p_i] = signs[k] w_i[k] with perm[k] = p_i, so only one entry of
    each basis row is needed.
    """
    inv = [0] * len(perm)
    for k, p in enumerate(perm):
        inv[p] = k
    total = fmpq(0)
    for i, p in enumerate(W.pivots):
        k = inv[p]
        v = W.rows[i, k]
        if v != 0:
            total += signs[k] * v
    return total


def signed_perm_matrix(perm, signs):
    n = len(perm)
    M = fmpq_mat(n, n)
    for k, (p, s) in enumerate(zip(perm, signs)):
        M[p, k] = s
    return M


def solve_in_span(B, V):
    """Coefficients X with B X = V, for B of full column rank."""
    B, V = as_matrix(B), as_matrix(V)
    W = SubspaceBasis.span(B.transpose())
    if W.dim() != B.ncols():
        raise ValueError("columns are not independent")
    # B = W^T C for the square invertible C, so B X = V means C X = coords(V).
    C = W.coordinates(B)
    return C.solve(W.coordinates(V)) if C.nrows() else fmpq_mat(0, V.ncols())
