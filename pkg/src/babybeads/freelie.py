"""Free Lie algebra oracle for multilinear H_0(Lie(V); M^{(x) n}).

Lie elements on a set of distinct letters are stored in the Lyndon basis:
{word: coeff} with word a Lyndon word, i.e. (letters being distinct) a
word starting with its smallest letter.  The bracketing of a Lyndon word
is the standard one (split off the longest proper Lyndon suffix).  Its
expansion in the tensor algebra has the word itself as smallest term with
coefficient 1, which is what makes rewriting into the basis triangular.

M is either the whole free Lie algebra or its truncation Lie_{<=2}, where
brackets of length >= 3 are zero.
"""

import os
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from . import exactlinalg as la
from . import perms
from .characters import decompose_pair
from .partitions import partitions_of

MAX_N_FREE = int(os.environ.get("BABYBEADS_MAX_N_FREE", "6"))
MAX_N_TRUNCATED = int(os.environ.get("BABYBEADS_MAX_N_TRUNCATED", "6"))


# ------------------------------------------------------------- Lyndon basis

def is_lyndon(word):
    return len(word) > 0 and word[0] == min(word) and len(set(word)) == len(word)


def lyndon_basis(letters):
    """Lyndon words on a set of distinct letters: (k-1)! of them."""
    letters = sorted(letters)
    if not letters:
        return []
    first, rest = letters[0], letters[1:]
    return [(first,) + p for p in permutations(rest)]


def standard_factorization(word):
    """(u, v) with v the longest proper Lyndon suffix of the Lyndon word."""
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise ValueError("single letters have no factorization")


@lru_cache(maxsize=None)
def expand_lyndon(word):
    """The bracketed Lyndon word as a polynomial {word: coeff} in the tensor algebra."""
    if len(word) == 1:
        return {word: 1}
    u, v = standard_factorization(word)
    return _commutator(expand_lyndon(u), expand_lyndon(v))


def _commutator(a, b):
    out = {}
    for x, c in a.items():
        for y, d in b.items():
            out[x + y] = out.get(x + y, 0) + c * d
            out[y + x] = out.get(y + x, 0) - c * d
    return {w: c for w, c in out.items() if c}


def expand(elem):
    out = {}
    for w, c in elem.items():
        for x, d in expand_lyndon(w).items():
            out[x] = out.get(x, 0) + c * d
    return {w: c for w, c in out.items() if c}


def to_lyndon(poly):
    """Rewrite a multilinear Lie polynomial in the Lyndon basis.

    Raises if poly is not a Lie element.
    """
    poly = {w: c for w, c in poly.items() if c}
    out = {}
    while poly:
        w = min(poly)
        if not is_lyndon(w):
            raise ValueError("not a Lie element: leading word %r" % (w,))
        c = poly[w]
        out[w] = c
        for x, d in expand_lyndon(w).items():
            v = poly.get(x, 0) - c * d
            if v:
                poly[x] = v
            else:
                poly.pop(x, None)
    return out


def bracket(x, y):
    """[x, y] of Lie elements in the Lyndon basis."""
    return to_lyndon(_commutator(expand(x), expand(y)))


def relabel(elem, sigma):
    """Apply the letter substitution sigma, back in the Lyndon basis."""
    poly = {}
    for w, c in expand(elem).items():
        k = tuple(sigma[a] for a in w)
        poly[k] = poly.get(k, 0) + c
    return to_lyndon(poly)


# --------------------------------------------------------- tensor modules

def _ordered_set_partitions(letters, n, max_block=None):
    letters = tuple(letters)
    if n == 0:
        if not letters:
            yield ()
        return
    if len(letters) < n:
        return
    # the block holding the first letter is placed at each of the n positions
    first, rest = letters[0], letters[1:]
    from itertools import combinations
    for k in range(len(rest) + 1):
        if max_block is not None and k + 1 > max_block:
            break
        for others in combinations(rest, k):
            block = (first,) + others
            remaining = tuple(x for x in rest if x not in others)
            for tail in _ordered_set_partitions(remaining, n - 1, max_block):
                for pos in range(n):
                    yield tail[:pos] + (block,) + tail[pos:]


def tensor_basis(letters, n, truncated=False):
    """Basis of the multilinear part of M^{(x) n} on the given letters."""
    out = []
    for blocks in _ordered_set_partitions(sorted(letters), n, 2 if truncated else None):
        choices = [lyndon_basis(b) for b in blocks]
        stack = [()]
        for ch in choices:
            stack = [s + (w,) for s in stack for w in ch]
        out.extend(stack)
    return sorted(set(out))


class TensorModule:
    """The multilinear part of M^{(x) n} in degree N, with its S_N x S_n action."""

    def __init__(self, N, n, truncated=False):
        self.N, self.n, self.truncated = N, n, truncated
        self.basis = tensor_basis(range(N), n, truncated)
        self.index = {b: i for i, b in enumerate(self.basis)}

    @property
    def dim(self):
        return len(self.basis)

    def act(self, k, sigma, pi):
        """g . basis[k] as {index: coeff}: relabel letters, move factor i to pi(i)."""
        factors = [None] * self.n
        for i, w in enumerate(self.basis[k]):
            factors[pi[i]] = relabel({w: 1}, sigma)
        out = {(): 1}
        for f in factors:
            nxt = {}
            for t, c in out.items():
                for w, d in f.items():
                    nxt[t + (w,)] = nxt.get(t + (w,), 0) + c * d
            out = nxt
        return {self.index[t]: c for t, c in out.items() if c}

    def action_columns(self, sigma, pi):
        return [self.act(k, sigma, pi) for k in range(self.dim)]


def differential_rows(N, n, truncated=False):
    """Images of x_j (x) w, for all j and all basis tensors w on the other letters."""
    target = TensorModule(N, n, truncated)
    rows = []
    for j in range(N):
        others = [x for x in range(N) if x != j]
        for w in tensor_basis(others, n, truncated):
            img = {}
            for i, wi in enumerate(w):
                if truncated and len(wi) >= 2:
                    continue
                br = bracket({(j,): 1}, {wi: 1})
                for u, c in br.items():
                    t = w[:i] + (u,) + w[i + 1:]
                    k = target.index[t]
                    img[k] = img.get(k, 0) + c
            img = {k: c for k, c in img.items() if c}
            if img:
                rows.append(img)
    return target, rows


def _sparse_rows_matrix(rows, dim):
    M = la.fmpq_mat(len(rows), dim)
    for r, row in enumerate(rows):
        for k, v in row.items():
            M[r, k] = la.q(v)
    return M


def _restricted_trace(cols, W):
    """Trace of the sparse map (given by columns) on the stable subspace W."""
    if W.dim() == 0:
        return Fraction(0)
    rows = {p: {} for p in W.pivots}
    for k, col in enumerate(cols):
        for r, v in col.items():
            if r in rows:
                rows[r][k] = v
    total = la.fmpq(0)
    for i, p in enumerate(W.pivots):
        for k, v in rows[p].items():
            x = W.rows[i, k]
            if x != 0:
                total += la.q(v) * x
    return la.to_fraction(total)


class FreeLieH0:
    """Cokernel of the differential V (x) M^{(x) n} -> M^{(x) n}, multilinear part."""

    def __init__(self, N, n, truncated=False, check_caps=True):
        cap = MAX_N_TRUNCATED if truncated else MAX_N_FREE
        if check_caps and N > cap:
            raise ValueError("N = %d exceeds the %s cap %d" % (N, "truncated" if truncated else "free", cap))
        self.N, self.n, self.truncated = N, n, truncated
        self.module, self.rows = differential_rows(N, n, truncated)
        D = self.module.dim
        self.image = la.SubspaceBasis.span(_sparse_rows_matrix(self.rows, D), ambient_dim=D) \
            if self.rows else la.SubspaceBasis(D)

    @property
    def dim(self):
        return self.module.dim - self.image.dim()

    def class_traces(self):
        out = {}
        for mu in partitions_of(self.N):
            s = perms.class_representative(mu)
            for nu in partitions_of(self.n):
                cols = self.module.action_columns(s, perms.class_representative(nu))
                amb = sum((Fraction(c.get(k, 0)) for k, c in enumerate(cols)), Fraction(0))
                out[(mu, nu)] = amb - _restricted_trace(cols, self.image)
        return out

    def decompose(self):
        if self.module.dim == 0:
            return {}
        return decompose_pair(self.class_traces(), self.N, self.n)


@lru_cache(maxsize=None)
def _h0_table(N, n, truncated):
    return tuple(sorted(FreeLieH0(N, n, truncated).decompose().items()))


def h0_multilinear(N, n, truncated=False):
    """{rho: {gamma: mult}}: the S_N x S_n decomposition grouped by rho."""
    out = {}
    for (rho, gamma), c in _h0_table(N, n, truncated):
        out.setdefault(rho, {})[gamma] = c
    return out


def truncation_comparison(rho, n):
    rho = tuple(rho)
    N = sum(rho)
    free = h0_multilinear(N, n, False).get(rho, {})
    trunc = h0_multilinear(N, n, True).get(rho, {})
    return {"free": free, "truncated": trunc,
            "free_mult": sum(free.values()), "truncated_mult": sum(trunc.values()),
            "equal": free == trunc}
