"""Injections, baby bead arrangements and their structure maps.

Labels and columns are 0-based internally.  An arrangement is a tuple of n
columns, each a tuple (bottom,) or (bottom, top) of labels.  The group
S_N x S_n acts on the left: (sigma, pi) sends column c to position pi(c) and
relabels every bead by sigma, keeping bottom and top in place.

In the signed quotient a doubled column with its beads swapped is minus the
original; the canonical representative has bottom < top in every column.
"""

from itertools import combinations, permutations
from math import comb, factorial

from . import exactlinalg as la
from . import perms


# ------------------------------------------------------------- injections

def enumerate_injections(a, b, targets=None):
    """All injections {0..a-1} -> targets (default {0..b-1}), as value tuples."""
    if targets is None:
        targets = range(b)
    return [tuple(p) for p in permutations(targets, a)]


def act_injection(f, sigma, pi):
    """(sigma, pi) . f = pi o f o sigma^{-1}."""
    inv = perms.inverse(sigma)
    return tuple(pi[f[inv[i]]] for i in range(len(f)))


def transpose_structure_map(a, b):
    """k hom(a, b) -> k hom(a+1, b): [f] goes to the sum of its extensions.

    The new source point is a; rows index hom(a+1, b), columns hom(a, b).
    """
    src = enumerate_injections(a, b)
    tgt = enumerate_injections(a + 1, b)
    index = {f: i for i, f in enumerate(tgt)}
    M = la.RationalMatrix(len(tgt), len(src))
    for j, f in enumerate(src):
        for y in range(b):
            if y not in f:
                M.add(index[f + (y,)], j, 1)
    return M


def hfi_incoming(a, b):
    """Images of all k hom(a - {j}, b) -> k hom(a, b), as sparse columns.

    A map on a - {j} is stored by its values on the remaining points in
    increasing order; its image sums over the values of the new point j.
    """
    tgt = enumerate_injections(a, b)
    index = {f: i for i, f in enumerate(tgt)}
    cols = []
    for j in range(a):
        for g in enumerate_injections(a - 1, b):
            col = {}
            for y in range(b):
                if y in g:
                    continue
                f = g[:j] + (y,) + g[j:]
                col[index[f]] = col.get(index[f], 0) + 1
            cols.append(col)
    return tgt, cols


# ------------------------------------------------------------- arrangements

def bead_count(N, n):
    d = N - n
    if d < 0 or d > n:
        return 0
    return comb(n, d) * factorial(N)


def signed_bead_count(N, n):
    d = N - n
    if d < 0 or d > n:
        return 0
    return comb(n, d) * factorial(N) // 2 ** d


def iter_beads(N, n, labels=None, signed=False):
    """Arrangements of the given labels (default 0..N-1) into n columns."""
    if labels is None:
        labels = tuple(range(N))
    labels = tuple(labels)
    N = len(labels)
    d = N - n
    if d < 0 or d > n:
        return
    for doubled in combinations(range(n), d):
        dset = set(doubled)
        for word in permutations(labels):
            cols, k, ok = [], 0, True
            for c in range(n):
                if c in dset:
                    if signed and word[k] > word[k + 1]:
                        ok = False
                        break
                    cols.append((word[k], word[k + 1]))
                    k += 2
                else:
                    cols.append((word[k],))
                    k += 1
            if ok:
                yield tuple(cols)


def enumerate_beads(N, n, labels=None, signed=False):
    return sorted(iter_beads(N, n, labels, signed))


def act_beads(arr, sigma, pi):
    out = [None] * len(arr)
    for c, col in enumerate(arr):
        out[pi[c]] = tuple(sigma[x] for x in col)
    return tuple(out)


def canonical(arr):
    """Signed canonical form: (arrangement with bottom < top, sign)."""
    sign = 1
    cols = []
    for col in arr:
        if len(col) == 2 and col[0] > col[1]:
            sign = -sign
            col = (col[1], col[0])
        cols.append(col)
    return tuple(cols), sign


def beads_fi_map(N, n, new_label, signed=False):
    """k Beads(labels - {new_label}, n) -> k Beads(labels, n).

    An arrangement goes to the sum, over its singleton columns, of the
    arrangement with new_label placed on top of that column.  Returns
    (source basis, target basis, sparse matrix).
    """
    labels = [x for x in range(N) if x != new_label]
    src = enumerate_beads(N - 1, n, labels, signed)
    tgt = enumerate_beads(N, n, None, signed)
    index = {a: i for i, a in enumerate(tgt)}
    M = la.RationalMatrix(len(tgt), len(src))
    for j, arr in enumerate(src):
        for c, col in enumerate(arr):
            if len(col) == 1:
                new = arr[:c] + ((col[0], new_label),) + arr[c + 1:]
                s = 1
                if signed:
                    new, s = canonical(new)
                M.add(index[new], j, s)
    return src, tgt, M


def iota_plus_tau(N, n, removed_pair, removed_column):
    """k Beads(N-2 labels, n-1) -> k Beads(N, n), iota + tau.

    The new doubled column sits at position removed_column and carries the
    two labels of removed_pair, once in each order.  Returns
    (source basis, target basis, sparse matrix).
    """
    x, y = removed_pair
    labels = [l for l in range(N) if l not in (x, y)]
    src = enumerate_beads(N - 2, n - 1, labels)
    tgt = enumerate_beads(N, n)
    index = {a: i for i, a in enumerate(tgt)}
    M = la.RationalMatrix(len(tgt), len(src))
    c = removed_column
    for j, arr in enumerate(src):
        for col in ((x, y), (y, x)):
            M.add(index[arr[:c] + (col,) + arr[c:]], j, 1)
    return src, tgt, M


class SignedBeads:
    """Basis of Beads^{+-}(N, n) and the signed-permutation action on it."""

    def __init__(self, N, n):
        self.N, self.n = N, n
        self.basis = enumerate_beads(N, n, signed=True)
        self.index = {a: i for i, a in enumerate(self.basis)}

    def __len__(self):
        return len(self.basis)

    def projection(self):
        """Matrix of k Beads(N, n) -> Beads^{+-}(N, n), with the unsigned basis."""
        full = enumerate_beads(self.N, self.n)
        P = la.RationalMatrix(len(self.basis), len(full))
        for j, arr in enumerate(full):
            can, s = canonical(arr)
            P.add(self.index[can], j, s)
        return full, P

    def action(self, sigma, pi):
        """(perm, signs): basis k goes to signs[k] times basis perm[k]."""
        out_p, out_s = [], []
        for arr in self.basis:
            can, s = canonical(act_beads(arr, sigma, pi))
            out_p.append(self.index[can])
            out_s.append(s)
        return out_p, out_s


def antisymmetrize(N, n):
    """(signed basis, projection from k Beads, action function)."""
    sb = SignedBeads(N, n)
    _, P = sb.projection()
    return sb.basis, P, sb.action


def fmt_arrangement(arr):
    """Columns bottom-to-top with 1-based labels, e.g. [1;3] [2]."""
    return " ".join("[" + ";".join(str(x + 1) for x in col) + "]" for col in arr)
