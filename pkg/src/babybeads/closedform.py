"""Closed-form decompositions and the explicit map computing isotypical parts.

Everything here is evaluated from characters, except general_isotypical,
which builds the S_n-equivariant map between skew-tensor modules as honest
matrices and returns its cokernel.
"""

import random
from dataclasses import dataclass, field

from . import exactlinalg as la
from . import perms
from .characters import (ClassFunction, add_into, decompose, induce_decomposition, skew_decomposition,
                         tensor_decomposition)
from .irreps import (EquivariantMap, direct_sum, induce_map, pieri_inclusion, s2_invariants,
                     seminormal, skew_module, skew_surjection, tensor)
from .partitions import contains, hat, partitions_of, sequence_partition, size, transpose


@dataclass
class IsotypicalReport:
    N: int
    n: int
    rho: tuple
    decomposition: dict = field(default_factory=dict)
    provenance: str = ""


def _first(lam):
    return lam[0] if lam else 0


def _hook(head, ones):
    """head followed by `ones` ones; None when ones < 0 (not a partition)."""
    return None if ones < 0 else tuple(head) + (1,) * ones


def _from_sequences(seqs):
    """Multiset of partitions, skipping entries that are not partitions."""
    out = {}
    for seq in seqs:
        if seq is None:
            continue
        lam = sequence_partition(seq)
        if lam is not None:
            out[lam] = out.get(lam, 0) + 1
    return out


# --------------------------------------------------------- hom_FI values

def thm_calc(a, b):
    """H_0 of k hom_FI(-, b)^tr at a: sum over lam |- b with lam_1 = b - a.

    For a = b >= 1 no partition qualifies and the value is zero; the brute
    cokernel agrees.
    """
    if a > b or a < 0:
        return {}
    return {(hat(lam), lam): 1 for lam in partitions_of(b) if _first(lam) == b - a}


def full_khom(a, b):
    """k hom_FI(a, b) as S_a x S_b-module: S^nu x S^lam with hat(lam) <= nu <= lam."""
    if a > b or a < 0:
        return {}
    out = {}
    for lam in partitions_of(b):
        for nu in partitions_of(a):
            if contains(nu, lam) and contains(hat(lam), nu):
                out[(nu, lam)] = 1
    return out


def cor_beads_h(N, n):
    """H_0 of k Beads(-, n) at N: sum_rho S^rho x sum_lam S^{rho/hat lam} (x) S^lam."""
    if not n <= N <= 2 * n:
        return {}
    out = {}
    for lam in partitions_of(n):
        if _first(lam) != 2 * n - N:
            continue
        mu = hat(lam)
        for rho in partitions_of(N):
            if not contains(mu, rho):
                continue
            for gamma, c in tensor_decomposition(skew_decomposition(rho, mu), {lam: 1}, n).items():
                out[(rho, gamma)] = out.get((rho, gamma), 0) + c
    return out


# ------------------------------------------------- the explicit cokernel

def codomain_labels(rho, n):
    """lam |- n with lam_1 = 2n - N and hat(lam) <= rho."""
    N = size(rho)
    return [lam for lam in partitions_of(n) if _first(lam) == 2 * n - N and contains(hat(lam), rho)]


def domain_labels(rho, n):
    """lam' |- n - 1 with lam'_1 = 2n - N and hat(lam') <= rho."""
    N = size(rho)
    if n < 1:
        return []
    return [lam for lam in partitions_of(n - 1) if lam and _first(lam) == 2 * n - N and contains(hat(lam), rho)]


def _codomain_rep(rho, lam):
    return tensor(skew_module(rho, hat(lam)), seminormal(lam))


def _invariants(rho, lam_p):
    """(S^{rho/hat lam'})^{S_2} as a rep of S_{n-1}, with its inclusion."""
    N = size(rho)
    mu_p = hat(lam_p)
    m = size(mu_p) + 1
    n = N - m
    S = skew_module(rho, mu_p)
    t = S.act_matrix(seminormal(rho).matrix(perms.transposition(N, m - 1, N - 1)))
    return s2_invariants(S.restrict(1, n - 1), t)


def component_map(rho, lam_p, lam):
    """The S_{n-1}-map (S^{rho/hat lam'})^{S_2} (x) S^{lam'} -> S^{rho/hat lam} (x) S^lam.

    Skew surjection after the invariants, tensored with the Pieri inclusion.
    """
    inv, B = _invariants(rho, lam_p)
    sk = skew_surjection(rho, hat(lam_p), hat(lam)).matrix * B
    pi = pieri_inclusion(lam_p, lam).matrix
    target = _codomain_rep(rho, lam)
    n = target.degree
    return EquivariantMap(tensor(inv, seminormal(lam_p)), target.restrict(0, n - 1), la.kron(sk, pi))


@dataclass
class IsotypicalMap:
    rho: tuple
    n: int
    codomain: list
    domain: list
    blocks: dict
    matrix: object
    target: object

    def rank(self):
        return la.rank(self.matrix)

    def domain_dim(self):
        return self.matrix.ncols()


def isotypical_map(rho, n, scales=None):
    """Assemble the full induced map; scales rescales the (lam', lam) blocks."""
    rho = tuple(rho)
    cod = codomain_labels(rho, n)
    dom = domain_labels(rho, n)
    reps = [_codomain_rep(rho, lam) for lam in cod]
    target = direct_sum(reps, n) if reps else None
    offsets, off = [], 0
    for R in reps:
        offsets.append(off)
        off += R.dim
    total = off
    cols = []
    blocks = {}
    for lp in dom:
        inv, _ = _invariants(rho, lp)
        width = n * inv.dim * len(seminormal(lp).labels)
        col = la.fmpq_mat(total, width)
        for k, lam in enumerate(cod):
            if not contains(lp, lam):
                continue
            f = component_map(rho, lp, lam)
            F = induce_map(f, reps[k]).matrix
            c = 1 if scales is None else scales.get((lp, lam), 1)
            blocks[(lp, lam)] = F
            for i in range(F.nrows()):
                for j in range(F.ncols()):
                    v = F[i, j]
                    if v != 0:
                        col[offsets[k] + i, j] = c * v
        cols.append(col)
    matrix = la.hstack(cols, rows=total) if cols else la.fmpq_mat(total, 0)
    return IsotypicalMap(rho, n, cod, dom, blocks, matrix, target)


def general_isotypical(rho, n, scales=None):
    """The rho-isotypical part of H_0 of Beads^{+-}(N, -) at n, over S_n."""
    rho = tuple(rho)
    N = size(rho)
    rep = IsotypicalReport(N, n, rho, {}, "explicit cokernel")
    if n < 0 or not n <= N <= 2 * n:
        return rep
    F = isotypical_map(rho, n, scales)
    if F.target is None:
        return rep
    W = la.image_basis(F.matrix)
    vals = {}
    for nu in partitions_of(n):
        g = F.target.matrix(perms.class_representative(nu))
        vals[nu] = la.to_fraction(la.quotient_trace(g, W))
    rep.decomposition = decompose(ClassFunction(n, vals))
    return rep


def random_scales(rho, n, seed=0):
    rng = random.Random(seed)
    out = {}
    for lp in domain_labels(rho, n):
        for lam in codomain_labels(rho, n):
            if contains(lp, lam):
                out[(lp, lam)] = la.fmpq(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
    return out


def codomain_decomposition(rho, n):
    out = {}
    for lam in codomain_labels(rho, n):
        add_into(out, tensor_decomposition(skew_decomposition(rho, hat(lam)), {lam: 1}, n))
    return out


def domain_decomposition(rho, n):
    """Character-level value of the domain: induced invariants (x) S^{lam'}."""
    out = {}
    for lp in domain_labels(rho, n):
        inv, _ = _invariants(rho, lp)
        if inv.dim == 0:
            continue
        d = decompose(inv.character())
        add_into(out, induce_decomposition(tensor_decomposition(d, {lp: 1}, n - 1), n))
    return out


# ------------------------------------------------------------ rho = (1^N), (2,1^{N-2})

def thm_1N(N, n):
    m = N - n
    d = {}
    if 0 <= m and 2 * m < N:
        d = _from_sequences([_hook((m + 1,), N - 2 * m - 1)])
    return IsotypicalReport(N, n, (1,) * N, d, "(1^N) closed form")


def thm_21(N, n):
    if N <= 2:
        raise ValueError("needs N > 2")
    m = N - n
    k = N - 2 * m
    if m == 0:
        seqs = [_hook((2,), N - 2)]
    elif m == 1 and N == 3:
        seqs = []
    elif m == 1:
        seqs = [_hook((2,), N - 3), _hook((3,), N - 4), _hook((2, 2), N - 5)]
    elif m > 1 and k >= 2:
        seqs = [_hook((m + 1,), k - 1), _hook((m + 2,), k - 2), _hook((m, 2), k - 2), _hook((m + 1, 2), k - 3)]
    else:
        seqs = []
    return IsotypicalReport(N, n, (2,) + (1,) * (N - 2), _from_sequences(seqs), "(2,1^{N-2}) closed form")


def int_isotyp_21(N, m):
    """Closed form of the codomain for rho = (2,1^{N-2}), as a multiset."""
    k = N - 2 * m
    if m == 0:
        return _from_sequences([_hook((2,), N - 2)])
    if m == 1 and N == 3:
        return {(2,): 1, (1, 1): 1}
    if k <= 0:
        return {}
    if k == 1:
        return _from_sequences([(m + 1,), (m, 1)])
    if m == 1:
        seqs = [_hook((1,), N - 2), _hook((2,), N - 3), _hook((2,), N - 3),
                _hook((3,), N - 4), _hook((2, 2), N - 5)]
    else:
        seqs = [_hook((m + 1,), k - 1), _hook((m + 1,), k - 1), _hook((m,), k),
                _hook((m + 2,), k - 2), _hook((m, 2), k - 2), _hook((m, 2), k - 2),
                _hook((m + 1, 2), k - 3)]
    return _from_sequences(seqs)


def relations_21(N, m):
    """Closed form of the domain for rho = (2,1^{N-2}), as a multiset."""
    if m == 0 or N <= 2 * m:
        return {}
    if m == 1:
        seqs = [_hook((1,), N - 2), _hook((2,), N - 3)]
    else:
        k = N - 2 * m
        seqs = [_hook((m + 1,), k - 1), _hook((m, 2), k - 2), _hook((m,), k)]
    return _from_sequences(seqs)


# ------------------------------------------------------ lad of constant / sign

def ldm_triv(s, t):
    if s * t <= 0:
        raise ValueError("needs s t > 0")
    if s == t:
        return {(lam, lam): 1 for lam in partitions_of(s)}
    if s == t + 1:
        return {((1,) * s, (1,) * t): 1}
    return {}


def ldm_sgn(s, t):
    if s * t <= 0:
        raise ValueError("needs s t > 0")
    if s < t:
        return {}
    if s == t:
        return {(transpose(lam), lam): 1 for lam in partitions_of(s)}
    return {((1,) * s, (t,)): 1}


# ------------------------------------------------------------- skew values

def identify_skew_21(N, mu):
    """S^{(2,1^{N-2})/mu} for mu |- m, as a tag (kind, n).

    kind is "sgn" (sgn_n), "sgn_up" (sgn_{n-1} induced to S_n), "triv"
    (N = m, mu = rho), "rho" (m = 0) or "zero".
    """
    if N <= 2:
        raise ValueError("needs N > 2")
    mu = tuple(mu)
    m = size(mu)
    n = N - m
    rho = (2,) + (1,) * (N - 2)
    if m == N:
        return ("triv", 0) if mu == rho else ("zero", 0)
    if m >= 2 and mu == (2,) + (1,) * (m - 2):
        return ("sgn", n)
    if m >= 1 and mu == (1,) * m:
        return ("sgn_up", n)
    if m == 0:
        # mu = (1^0) is excluded: the skew module is S^rho itself
        return ("rho", n)
    return ("zero", n)


def tagged_decomposition(tag):
    """The S_n-decomposition named by an identify_skew_21 tag."""
    kind, n = tag
    if kind == "sgn":
        return {(1,) * n: 1}
    if kind == "sgn_up":
        return induce_decomposition({(1,) * (n - 1): 1}, n) if n >= 1 else {}
    if kind == "triv":
        return {(): 1}
    if kind == "rho":
        return {(2,) + (1,) * (n - 2): 1}
    return {}
