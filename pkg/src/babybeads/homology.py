"""H_0-type cokernels: the quotient of a module at (W, Z) by the images of
everything coming in from one-point-smaller W.

Two engines compute the same S_N x S_n decompositions.

* The direct engine assembles the incoming images as rows, reduces them to
  echelon form and reads characters off as ambient trace minus the trace on
  the image, one class pair at a time.  It is limited by the ambient
  dimension (a few thousand).

* The Frobenius engine uses that the ambient is a transitive (signed)
  permutation module k[G/H] twisted by a character chi of the stabiliser, and
  that the incoming image is generated by a single vector Phi(x0).  Then

      mult of S^rho x S^gamma = dim { w in (S^rho x S^gamma)^(H, chi) :
                                       sum_k c_k g_k w = 0 },

  where Phi(x0) = sum_k c_k g_k y0.  Everything lives inside one irreducible
  at a time, so N = 7 and 8 are cheap.
"""

import os
from collections import Counter
from math import factorial

from . import beads as bd
from . import exactlinalg as la
from . import perms
from .characters import ClassFunction, chi, decompose, decompose_pair
from .irreps import BiRep, irrep_dim, seminormal
from .partitions import partitions_of

DEFAULT_MAX_N = int(os.environ.get("BABYBEADS_MAX_N", "8"))
DIRECT_MAX_DIM = 6000
MODELS = ("hfi_tr", "beads", "beads_signed")


class SizeCapError(ValueError):
    pass


# ------------------------------------------------------------ direct engine

class H0Problem:
    """A signed-permutation module with the columns of its incoming maps.

    action(sigma, pi) returns (perm, signs) on the basis; incoming is a list
    of sparse columns {row: value}, one per source basis vector, over all
    one-point-smaller subsets.
    """

    def __init__(self, N, n, basis, action, incoming, name=""):
        self.N, self.n = N, n
        self.basis = basis
        self.action = action
        self.name = name
        seen = set()
        self.incoming = []
        for col in incoming:
            key = tuple(sorted((k, v) for k, v in col.items() if v))
            if key and key not in seen:
                seen.add(key)
                self.incoming.append(dict(key))
        self._image = None

    @property
    def dim(self):
        return len(self.basis)

    def incoming_matrix(self):
        """Rows are the incoming image vectors."""
        M = la.fmpq_mat(len(self.incoming), self.dim)
        for r, col in enumerate(self.incoming):
            for k, v in col.items():
                M[r, k] = la.q(v)
        return M

    def image(self):
        if self._image is None:
            self._image = la.SubspaceBasis.span(self.incoming_matrix(), ambient_dim=self.dim)
        return self._image

    def generator_matrices(self):
        """Signed permutation matrices of the adjacent transpositions."""
        N, n = self.N, self.n
        out = []
        for i in range(N - 1):
            out.append(la.signed_perm_matrix(*self.action(perms.adjacent(N, i), perms.identity(n))))
        for j in range(n - 1):
            out.append(la.signed_perm_matrix(*self.action(perms.identity(N), perms.adjacent(n, j))))
        return out

    def image_is_stable(self):
        W = self.image()
        return all(W.contains(g * W.vectors()) for g in self.generator_matrices())


def h0_cokernel(p):
    """(quotient dimension, traces on class pairs) of an H0Problem."""
    W = p.image()
    traces = {}
    for mu in partitions_of(p.N):
        s = perms.class_representative(mu)
        for nu in partitions_of(p.n):
            perm, signs = p.action(s, perms.class_representative(nu))
            t = la.signed_perm_trace(perm, signs) - la.signed_perm_restricted_trace(perm, signs, W)
            traces[(mu, nu)] = la.to_fraction(t)
    return p.dim - W.dim(), traces


def decompose_direct(p):
    _, traces = h0_cokernel(p)
    return decompose_pair(traces, p.N, p.n)


def hfi_problem(a, b):
    """k hom_FI(a, b)^tr with all incoming maps from a - {j}; group S_a x S_b."""
    basis, cols = bd.hfi_incoming(a, b)
    index = {f: i for i, f in enumerate(basis)}

    def action(sigma, pi):
        return [index[bd.act_injection(f, sigma, pi)] for f in basis], [1] * len(basis)

    return H0Problem(a, b, basis, action, cols, "hfi_tr")


def _columns(M):
    cols = {}
    for (i, j), v in M.entries.items():
        cols.setdefault(j, {})[i] = v
    return [cols[j] for j in sorted(cols)]


def beads_problem(N, n, signed=False):
    """k Beads(N, n) or Beads^{+-}(N, n) with the maps from every N - {j}."""
    if signed:
        sb = bd.SignedBeads(N, n)
        basis, action = sb.basis, sb.action
    else:
        basis = bd.enumerate_beads(N, n)
        index = {a: i for i, a in enumerate(basis)}

        def action(sigma, pi):
            return [index[bd.act_beads(a, sigma, pi)] for a in basis], [1] * len(basis)
    cols = []
    if basis:
        for j in range(N):
            _, tgt, M = bd.beads_fi_map(N, n, j, signed)
            assert tgt == basis
            cols.extend(_columns(M))
    return H0Problem(N, n, basis, action, cols, "beads_signed" if signed else "beads")


def problem(N, n, model):
    if model == "hfi_tr":
        return hfi_problem(N, n)
    if model == "beads":
        return beads_problem(N, n, False)
    if model == "beads_signed":
        return beads_problem(N, n, True)
    raise ValueError("unknown model %r" % (model,))


# --------------------------------------------------------- isotypical slices

def isotypical_projector(p, rho):
    """The central idempotent of S^rho for the S_N-action, as a sparse matrix."""
    N = p.N
    d = irrep_dim(rho)
    scale = la.fmpq(d, factorial(N))
    P = {}
    ident = perms.identity(p.n)
    for sigma in perms.all_perms(N):
        c = chi(rho, perms.cycle_type(sigma))  # chi(g^-1) = chi(g) here
        if not c:
            continue
        perm, signs = p.action(sigma, ident)
        for k, (r, s) in enumerate(zip(perm, signs)):
            P[(r, k)] = P.get((r, k), 0) + c * s
    M = la.fmpq_mat(p.dim, p.dim)
    for (r, k), v in P.items():
        if v:
            M[r, k] = scale * v
    return M


class Slice:
    """The S^rho-isotypic part of an H0Problem: ambient slice and image slice."""

    def __init__(self, p, rho):
        self.problem, self.rho = p, tuple(rho)
        self.projector = isotypical_projector(p, rho)
        self.ambient = la.image_basis(self.projector)
        W = p.image()
        self.image = la.image_basis(self.projector * W.vectors()) if W.dim() else la.SubspaceBasis(p.dim)

    def dims(self):
        return self.ambient.dim(), self.image.dim()

    def decompose(self):
        """Multiplicities of S^gamma in Hom_{S_N}(S^rho, H_0), over S_n."""
        p, d = self.problem, irrep_dim(self.rho)
        vals = {}
        ident = perms.identity(p.N)
        for nu in partitions_of(p.n):
            perm, signs = p.action(ident, perms.class_representative(nu))
            t = (la.signed_perm_restricted_trace(perm, signs, self.ambient)
                 - la.signed_perm_restricted_trace(perm, signs, self.image))
            vals[nu] = la.to_fraction(t) / d
        return decompose(ClassFunction(p.n, vals))


def isotypical_slice(p, rho):
    return Slice(p, rho)


# --------------------------------------------------------- Frobenius engine

def _closure(gens):
    """All elements of the group generated by (sigma, pi, chi) triples."""
    if not gens:
        return []
    N, n = len(gens[0][0]), len(gens[0][1])
    start = (perms.identity(N), perms.identity(n))
    seen = {start: 1}
    frontier = [start]
    while frontier:
        nxt = []
        for s, p in frontier:
            c = seen[(s, p)]
            for gs, gp, gc in gens:
                h = (perms.compose(gs, s), perms.compose(gp, p))
                if h not in seen:
                    seen[h] = c * gc
                    nxt.append(h)
                elif seen[h] != c * gc:
                    raise ValueError("chi is not well defined on the stabiliser")
        frontier = nxt
    return [(s, p, c) for (s, p), c in seen.items()]


def _eigenspace(mats, signs, dim):
    """Joint eigenspace {v : M v = s v for all (M, s)} as columns."""
    if not mats:
        return la.identity(dim)
    eqs = [M - s * la.identity(dim) for M, s in zip(mats, signs)]
    return la.nullspace(la.vstack(eqs, cols=dim))


class TransitiveH0:
    """Cokernel of G.Phi(x0) inside Ind_H^G chi, for G = S_N x S_n.

    stabiliser: generators (sigma, pi, chi) of H with its character.
    terms: (sigma, pi, c) with Phi(x0) = sum c (sigma, pi) y0.
    Generators with pi = id (or sigma = id) must generate a normal subgroup
    of H; this holds for every model built here.
    """

    def __init__(self, N, n, stabiliser, terms, name=""):
        self.N, self.n = N, n
        self.stabiliser = list(stabiliser)
        self.terms = list(terms)
        self.name = name
        self._classes = None

    def _class_counts(self):
        if self._classes is None:
            elts = _closure(self.stabiliser) or [(perms.identity(self.N), perms.identity(self.n), 1)]
            cnt = Counter((perms.cycle_type(s), perms.cycle_type(p), c) for s, p, c in elts)
            self._classes = (len(elts), cnt)
        return self._classes

    def stabiliser_order(self):
        return self._class_counts()[0]

    def ambient_multiplicity(self, rho, gamma):
        order, cnt = self._class_counts()
        total = sum(k * c * chi(rho, a) * chi(gamma, b) for (a, b, c), k in cnt.items())
        if total % order:
            raise ArithmeticError("non-integral multiplicity")
        return total // order

    def invariants(self, rho, gamma):
        """Basis of (S^rho x S^gamma)^(H, chi) as d_rho x d_gamma matrices."""
        A, B = seminormal(rho), seminormal(gamma)
        idN, idn = perms.identity(self.N), perms.identity(self.n)
        left = [(s, c) for s, p, c in self.stabiliser if p == idn]
        right = [(p, c) for s, p, c in self.stabiliser if s == idN and p != idn]
        mixed = [(s, p, c) for s, p, c in self.stabiliser if p != idn and s != idN]
        BL = _eigenspace([A.matrix(s) for s, _ in left], [c for _, c in left], A.dim)
        BR = _eigenspace([B.matrix(p) for p, _ in right], [c for _, c in right], B.dim)
        ul, ur = BL.ncols(), BR.ncols()
        if ul == 0 or ur == 0:
            return []
        eqs = []
        for s, p, c in mixed:
            Al = la.solve_in_span(BL, A.matrix(s) * BL)
            Br = la.solve_in_span(BR, B.matrix(p) * BR)
            eqs.append(la.kron(Al, Br) - c * la.identity(ul * ur))
        K = la.nullspace(la.vstack(eqs, cols=ul * ur)) if eqs else la.identity(ul * ur)
        out = []
        for k in range(K.ncols()):
            Y = la.fmpq_mat(ul, ur)
            for i in range(ul):
                for j in range(ur):
                    Y[i, j] = K[i * ur + j, k]
            out.append(BL * Y * BR.transpose())
        return out

    def multiplicity(self, rho, gamma):
        amb = self.ambient_multiplicity(rho, gamma)
        if amb == 0:
            return 0
        if not self.terms:
            return amb
        inv = self.invariants(rho, gamma)
        if len(inv) != amb:
            raise ArithmeticError("invariant count %d disagrees with character %d" % (len(inv), amb))
        A, B = seminormal(rho), seminormal(gamma)
        mats = [(c, A.matrix(s), B.matrix(p).transpose()) for s, p, c in self.terms]
        rows = []
        for X in inv:
            C = la.zeros(A.dim, B.dim)
            for c, As, Bt in mats:
                C += c * (As * X * Bt)
            rows.append(C.entries())
        return amb - la.rank(la.as_matrix(rows))

    def slice(self, rho):
        """{gamma: mult} for one rho."""
        out = {}
        for gamma in partitions_of(self.n):
            m = self.multiplicity(rho, gamma)
            if m:
                out[gamma] = m
        return out

    def decompose(self):
        out = {}
        for rho in partitions_of(self.N):
            for gamma, m in self.slice(rho).items():
                out[(rho, gamma)] = m
        return out


class EmptyH0:
    def __init__(self, N, n):
        self.N, self.n = N, n

    def slice(self, rho):
        return {}

    def decompose(self):
        return {}


def beads_transitive(N, n, signed=False):
    """Frobenius data for k Beads(N, n) or Beads^{+-}(N, n)."""
    d = N - n
    if d < 0 or d > n:
        return EmptyH0(N, n)
    s = n - d
    y0 = tuple((2 * i, 2 * i + 1) for i in range(d)) + tuple((2 * d + j,) for j in range(s))
    idN, idn = perms.identity(N), perms.identity(n)
    gens = []
    if signed:
        # swapping the beads of a doubled column fixes y0 up to sign
        for i in range(d):
            gens.append((perms.transposition(N, 2 * i, 2 * i + 1), idn, -1))
    for i in range(d - 1):
        sig = perms.compose(perms.transposition(N, 2 * i, 2 * i + 2),
                            perms.transposition(N, 2 * i + 1, 2 * i + 3))
        gens.append((sig, perms.transposition(n, i, i + 1), 1))
    for j in range(d, n - 1):
        gens.append((perms.transposition(N, 2 * d + j - d, 2 * d + j - d + 1), perms.transposition(n, j, j + 1), 1))
    for sig, pi, _ in gens:
        if bd.canonical(bd.act_beads(y0, sig, pi))[0] != y0:
            raise AssertionError("bad stabiliser generator")
    terms = []
    if d >= 1:
        x0 = tuple((2 * i, 2 * i + 1) for i in range(d - 1)) + tuple((2 * d - 2 + j,) for j in range(s + 1))
        singles = list(range(d - 1, n))
        for c in singles:
            z = x0[:c] + ((x0[c][0], N - 1),) + x0[c + 1:]
            pi = list(range(n))
            pi[d - 1] = c
            rest = [k for k in singles if k != c]
            for j, k in zip(range(d, n), rest):
                pi[j] = k
            sig = [None] * N
            for j in range(n):
                for src, dst in zip(y0[j], z[pi[j]]):
                    sig[src] = dst
            sig, pi = tuple(sig), tuple(pi)
            if bd.act_beads(y0, sig, pi) != z:
                raise AssertionError("bad coset representative")
            terms.append((sig, pi, 1))
    return TransitiveH0(N, n, gens, terms, "beads_signed" if signed else "beads")


def hfi_transitive(a, b):
    """Frobenius data for k hom_FI(a, b)^tr over S_a x S_b."""
    if a > b:
        return EmptyH0(a, b)
    ida = perms.identity(a)
    gens = [(perms.adjacent(a, i), perms.adjacent(b, i), 1) for i in range(a - 1)]
    gens += [(ida, perms.adjacent(b, j), 1) for j in range(a, b - 1)]
    terms = []
    if a >= 1:
        for y in range(a - 1, b):
            terms.append((ida, perms.transposition(b, a - 1, y), 1))
    return TransitiveH0(a, b, gens, terms, "hfi_tr")


def transitive(N, n, model):
    if model == "hfi_tr":
        return hfi_transitive(N, n)
    if model == "beads":
        return beads_transitive(N, n, False)
    if model == "beads_signed":
        return beads_transitive(N, n, True)
    raise ValueError("unknown model %r" % (model,))


# ---------------------------------------------------------------- front end

def ambient_dim(N, n, model):
    if model == "hfi_tr":
        return factorial(n) // factorial(n - N) if N <= n else 0
    if model == "beads":
        return bd.bead_count(N, n)
    return bd.signed_bead_count(N, n)


def decompose_h0(N, n, model="beads_signed", rho=None, engine="auto", max_N=None):
    """S_N x S_n decomposition of the H_0 quotient, assembled slice by slice.

    engine: "frobenius", "direct", "slice" (projector, small N only) or
    "auto" (frobenius).  With rho given, only that slice is returned, still
    keyed by (rho, gamma).
    """
    if model not in MODELS:
        raise ValueError("unknown model %r" % (model,))
    cap = DEFAULT_MAX_N if max_N is None else max_N
    if max(N, n if model == "hfi_tr" else 0) > cap:
        raise SizeCapError("N = %d exceeds the cap %d" % (max(N, n), cap))
    rhos = [tuple(rho)] if rho is not None else partitions_of(N)
    if engine in ("auto", "frobenius"):
        T = transitive(N, n, model)
        out = {}
        for r in rhos:
            for gamma, m in T.slice(r).items():
                out[(r, gamma)] = m
        return out
    if ambient_dim(N, n, model) > DIRECT_MAX_DIM:
        raise SizeCapError("ambient dimension %d too large for the direct engine" % ambient_dim(N, n, model))
    p = problem(N, n, model)
    if engine == "direct":
        full = decompose_direct(p) if p.dim else {}
        return {k: v for k, v in full.items() if k[0] in rhos}
    if engine == "slice":
        out = {}
        for r in rhos:
            if not p.dim:
                continue
            for gamma, m in Slice(p, r).decompose().items():
                out[(r, gamma)] = m
        return out
    raise ValueError("unknown engine %r" % (engine,))


# ------------------------------------------- antisymmetrised induction

class WalledInput:
    """Values of a module on the walled category, in standard coordinates.

    value(m, n) is a BiRep of S_m x S_n; omega(m, n) is the matrix of the
    standard morphism value(m-1, n-1) -> value(m, n), which adds one point
    to each side (the last letter of each) and matches them.
    """

    def __init__(self, value, omega, name=""):
        self._value, self._omega = value, omega
        self.name = name
        self._cache = {}

    def value(self, m, n):
        key = ("v", m, n)
        if key not in self._cache:
            self._cache[key] = self._value(m, n)
        return self._cache[key]

    def omega(self, m, n):
        key = ("w", m, n)
        if key not in self._cache:
            self._cache[key] = la.as_matrix(self._omega(m, n))
        return self._cache[key]


def _one_dim(m, n, sl, sr):
    return BiRep(m, n, 1, [la.as_matrix([[sl]])] * max(m - 1, 0), [la.as_matrix([[sr]])] * max(n - 1, 0))


def constant_input():
    return WalledInput(lambda m, n: _one_dim(m, n, 1, 1), lambda m, n: [[1]], "constant")


def sign_input():
    """Or(X) (x) Or(Y), the new point of each side wedged on at the end."""
    return WalledInput(lambda m, n: _one_dim(m, n, -1, -1), lambda m, n: [[1]], "sgn x sgn")


def _hc_quotient(m, n):
    basis, cols = bd.hfi_incoming(m, n)
    index = {f: i for i, f in enumerate(basis)}
    D = len(basis)
    if cols:
        M = la.fmpq_mat(D, len(cols))
        for j, col in enumerate(cols):
            for i, v in col.items():
                M[i, j] = la.q(v)
    else:
        M = la.fmpq_mat(D, 0)
    free, P = la.cokernel(M) if D else ([], la.fmpq_mat(0, 0))
    L = la.fmpq_mat(D, len(free))
    for k, j in enumerate(free):
        L[j, k] = 1
    return basis, index, P, L


def hc_input():
    """H_0 of k hom_FI(-, -)^tr, the quotient at (m, n) of k hom_FI(m, n)."""
    def perm_matrix(basis, index, sigma, pi):
        G = la.fmpq_mat(len(basis), len(basis))
        for k, f in enumerate(basis):
            G[index[bd.act_injection(f, sigma, pi)], k] = 1
        return G

    def value(m, n):
        basis, index, P, L = _hc_quotient(m, n)
        d = L.ncols()
        left = [P * perm_matrix(basis, index, perms.adjacent(m, i), perms.identity(n)) * L for i in range(m - 1)]
        right = [P * perm_matrix(basis, index, perms.identity(m), perms.adjacent(n, j)) * L for j in range(n - 1)]
        return BiRep(m, n, d, left, right)

    def omega(m, n):
        sb, _, sP, sL = _hc_quotient(m - 1, n - 1)
        tb, tindex, tP, tL = _hc_quotient(m, n)
        W = la.fmpq_mat(len(tb), len(sb))
        for k, f in enumerate(sb):
            W[tindex[f + (n - 1,)], k] = 1
        return tP * W * sL

    return WalledInput(value, omega, "H^C hom_FI^tr")


def _position(seq):
    return {x: i for i, x in enumerate(seq)}


def lad_int(F, s, t):
    """The antisymmetrised induction of F at (s, t), as an S_s x S_t-module.

    Cokernel of F(iota^1) + F(iota^2) from the black vertices (X', Y', lam)
    to the white vertices kappa in hom_FI(t, s).  Returns a BiDecomposition.
    """
    if s < t:
        return {}
    m, n = s - t, t
    M = F.value(m, n)
    dM = M.dim
    kappas = bd.enumerate_injections(t, s)
    kidx = {k: i for i, k in enumerate(kappas)}
    comp = [sorted(set(range(s)) - set(k)) for k in kappas]
    D = len(kappas) * dM
    if D == 0:
        return {}
    columns = []
    if m >= 1 and n >= 1:
        Mp = F.value(m - 1, n - 1)
        om = F.omega(m, n)
        for x1 in range(s):
            for x2 in range(x1 + 1, s):
                Xp = [x for x in range(s) if x not in (x1, x2)]
                for y in range(t):
                    Yp = [j for j in range(t) if j != y]
                    for lam in bd.enumerate_injections(t - 1, s - 2, Xp):
                        a = sorted(set(Xp) - set(lam))
                        block = la.fmpq_mat(D, Mp.dim)
                        for xe, xo in ((x1, x2), (x2, x1)):
                            kap = list(lam)
                            kap.insert(y, xe)
                            kap = tuple(kap)
                            A = _position(comp[kidx[kap]])
                            alpha = tuple(A[v] for v in a) + (A[xo],)
                            beta = tuple(Yp) + (y,)
                            # alpha, beta send standard letters to target positions
                            R = M.matrix(alpha, beta) * om
                            off = kidx[kap] * dM
                            for i in range(dM):
                                for j in range(Mp.dim):
                                    if R[i, j] != 0:
                                        block[off + i, j] += R[i, j]
                        columns.append(block)
    img = la.image_basis(la.hstack(columns, rows=D)) if columns else la.SubspaceBasis(D)
    traces = {}
    for mu in partitions_of(s):
        sigma = perms.class_representative(mu)
        for nu in partitions_of(t):
            pi = perms.class_representative(nu)
            G = la.fmpq_mat(D, D)
            for k, kap in enumerate(kappas):
                kap2 = tuple(sigma[kap[perms.inverse(pi)[j]]] for j in range(t))
                k2 = kidx[kap2]
                A2 = _position(comp[k2])
                alpha = tuple(A2[sigma[v]] for v in comp[k])
                R = M.matrix(alpha, pi)
                for i in range(dM):
                    for j in range(dM):
                        if R[i, j] != 0:
                            G[k2 * dM + i, k * dM + j] = R[i, j]
            traces[(mu, nu)] = la.to_fraction(la.quotient_trace(G, img))
    return decompose_pair(traces, s, t)
