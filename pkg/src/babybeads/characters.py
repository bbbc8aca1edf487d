"""Characters of symmetric groups and the matrix-free decomposition path.

Irreducible characters come from the Murnaghan-Nakayama rule on beta-sets.
Littlewood-Richardson and Kronecker coefficients are read off by decomposing
induced and product characters, which is slow in theory but plenty fast for
partitions of size up to a dozen.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .partitions import contains, partitions_of, size, transpose


# ---------------------------------------------------------------- classes

@lru_cache(maxsize=None)
def z(mu):
    """Order of the centraliser of a permutation of cycle type mu."""
    out = 1
    for k in set(mu):
        m = mu.count(k)
        out *= k ** m * factorial(m)
    return out


def class_size(mu):
    return factorial(size(mu)) // z(mu)


def _merge(alpha, beta):
    return tuple(sorted(alpha + beta, reverse=True))


@lru_cache(maxsize=None)
def _splits(mu):
    """Ways to split the cycles of mu into two groups, with multiplicity.

    Returns tuples (alpha, beta, c) where c = z(mu) / (z(alpha) z(beta)).
    """
    kinds = sorted(set(mu), reverse=True)
    mult = [mu.count(k) for k in kinds]
    out = [((), (), 1)]
    for k, m in zip(kinds, mult):
        nxt = []
        for a, b, c in out:
            for j in range(m + 1):
                nxt.append((a + (k,) * j, b + (k,) * (m - j), c * comb(m, j)))
        out = nxt
    return tuple(out)


# ------------------------------------------------- Murnaghan-Nakayama rule

def _beta(lam):
    l = len(lam)
    return tuple(lam[i] + l - 1 - i for i in range(l))


def _from_beta(beta):
    beta = sorted(beta, reverse=True)
    l = len(beta)
    return tuple(p for p in (beta[i] - (l - 1 - i) for i in range(l)) if p > 0)


@lru_cache(maxsize=None)
def chi(lam, mu):
    """chi^lam evaluated on the class of cycle type mu."""
    if size(lam) != size(mu):
        raise ValueError("degree mismatch: %r vs %r" % (lam, mu))
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    beta = _beta(lam)
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in bset:
            continue
        height = sum(1 for x in beta if c < x < b)
        new = [x for x in beta if x != b] + [c]
        total += (-1) ** height * chi(_from_beta(new), rest)
    return total


# ------------------------------------------------------------ class functions

class ClassFunction:
    """A rational-valued class function on S_n, keyed by cycle type."""

    def __init__(self, n, values):
        self.n = n
        classes = partitions_of(n)
        self.values = {mu: Fraction(values.get(mu, 0)) for mu in classes}
        if len(values) > len(classes) or any(mu not in self.values for mu in values):
            raise ValueError("values not indexed by the cycle types of S_%d" % n)

    def __getitem__(self, mu):
        return self.values[mu]

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("degree mismatch: S_%d vs S_%d" % (self.n, other.n))

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.n, {mu: v + other.values[mu] for mu, v in self.values.items()})

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(self.n, {mu: v - other.values[mu] for mu, v in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.n, {mu: v * other.values[mu] for mu, v in self.values.items()})
        return ClassFunction(self.n, {mu: v * other for mu, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and self.n == other.n and self.values == other.values

    def __repr__(self):
        return "ClassFunction(%d, %r)" % (self.n, self.values)

    def degree(self):
        return self.values[(1,) * self.n] if self.n else self.values[()]


def irreducible_character(lam):
    n = size(lam)
    return ClassFunction(n, {mu: chi(lam, mu) for mu in partitions_of(n)})


def character_table(n):
    return {lam: irreducible_character(lam) for lam in partitions_of(n)}


def trivial_character(n):
    return irreducible_character((n,) if n else ())


def sign_character(n):
    return irreducible_character((1,) * n)


def inner_product(f, g):
    f._check(g)
    total = Fraction(0)
    for mu in partitions_of(f.n):
        total += f.values[mu] * g.values[mu] / z(mu)
    return total


def decompose(f):
    """Multiplicities of the irreducibles in f; raises if f is not a character."""
    out = {}
    for lam in partitions_of(f.n):
        c = inner_product(f, irreducible_character(lam))
        if c.denominator != 1 or c < 0:
            raise ValueError("not a character: <f, chi^%r> = %s" % (lam, c))
        if c:
            out[lam] = int(c)
    return out


def character_of(decomp, n):
    """Character of a direct sum given as {lam: multiplicity}."""
    f = ClassFunction(n, {})
    for lam, c in decomp.items():
        if size(lam) != n:
            raise ValueError("%r is not a partition of %d" % (lam, n))
        f = f + c * irreducible_character(lam)
    return f


# --------------------------------------------------- induction, restriction

def induce(f, g):
    """Induce f (on S_a) boxtimes g (on S_b) up to S_{a+b}."""
    n = f.n + g.n
    vals = {}
    for mu in partitions_of(n):
        total = Fraction(0)
        for alpha, beta, c in _splits(mu):
            if size(alpha) == f.n:
                total += c * f.values[alpha] * g.values[beta]
        vals[mu] = total
    return ClassFunction(n, vals)


def induce_from(f, n):
    """Induce from S_{f.n} (any standard embedding) to S_n."""
    return induce(f, trivial_character(n - f.n))


def restrict(f, a):
    """Restriction of f to S_a x S_{n-a}, as a function on class pairs."""
    return {(alpha, beta): f.values[_merge(alpha, beta)]
            for alpha in partitions_of(a) for beta in partitions_of(f.n - a)}


def restrict_to(f, a):
    """Restriction of f to S_a (fixing the remaining letters)."""
    return ClassFunction(a, {alpha: f.values[alpha + (1,) * (f.n - a)] for alpha in partitions_of(a)})


def decompose_pair(values, a, b):
    """Decompose a class function on S_a x S_b given on class pairs."""
    out = {}
    for alpha in partitions_of(a):
        ca = irreducible_character(alpha)
        for beta in partitions_of(b):
            cb = irreducible_character(beta)
            total = Fraction(0)
            for mu in partitions_of(a):
                for nu in partitions_of(b):
                    total += values[(mu, nu)] * ca.values[mu] * cb.values[nu] / (z(mu) * z(nu))
            if total.denominator != 1 or total < 0:
                raise ValueError("not a character at (%r, %r): %s" % (alpha, beta, total))
            if total:
                out[(alpha, beta)] = int(total)
    return out


@lru_cache(maxsize=None)
def _induced_product(alpha, beta):
    return decompose(induce(irreducible_character(alpha), irreducible_character(beta)))


def littlewood_richardson(lam, alpha, beta):
    if size(alpha) + size(beta) != size(lam):
        return 0
    if not (contains(alpha, lam) and contains(beta, lam)):
        return 0
    return _induced_product(alpha, beta).get(lam, 0)


def skew_decomposition(lam, alpha):
    """S^{lam/alpha} as a module for S_{|lam|-|alpha|}."""
    if size(alpha) > size(lam):
        raise ValueError("|alpha| > |lam|")
    if not contains(alpha, lam):
        return {}
    out = {}
    for beta in partitions_of(size(lam) - size(alpha)):
        c = littlewood_richardson(lam, alpha, beta)
        if c:
            out[beta] = c
    return out


def skew_character(lam, alpha):
    return character_of(skew_decomposition(lam, alpha), size(lam) - size(alpha))


@lru_cache(maxsize=None)
def _kronecker(nu, lam):
    return decompose(irreducible_character(nu) * irreducible_character(lam))


def kronecker(nu, lam):
    if size(nu) != size(lam):
        raise ValueError("degree mismatch: %r vs %r" % (nu, lam))
    return dict(_kronecker(nu, lam))


def tensor_decomposition(d1, d2, n):
    """Decomposition of the diagonal tensor product of two S_n-modules."""
    out = {}
    for a, x in d1.items():
        for b, y in d2.items():
            for g, c in _kronecker(a, b).items():
                out[g] = out.get(g, 0) + x * y * c
    return out


def induce_decomposition(decomp, n):
    """Induce a module given by its decomposition from S_k up to S_n."""
    k = None
    f = None
    for lam, c in decomp.items():
        k = size(lam)
        break
    if k is None:
        return {}
    f = character_of(decomp, k)
    return decompose(induce_from(f, n))


def restrict_decomposition(decomp, k):
    """Restrict a module given by its decomposition from S_n to S_k."""
    if not decomp:
        return {}
    n = size(next(iter(decomp)))
    return decompose(restrict_to(character_of(decomp, n), k))


def induced_bimodule_decomposition(mu, nu):
    """k S_{m+n} (x)_{S_m} (S^mu boxtimes S^nu) as an S_{m+n} x S_n-module."""
    m, n = size(mu), size(nu)
    out = {}
    for rho in partitions_of(m + n):
        skew = skew_decomposition(rho, mu)
        for gamma, c in tensor_decomposition(skew, {nu: 1}, n).items():
            out[(rho, gamma)] = c
    return out


def transpose_decomposition(decomp):
    return {transpose(lam): c for lam, c in decomp.items()}


def add_into(target, other, scale=1):
    for k, v in other.items():
        target[k] = target.get(k, 0) + scale * v
        if target[k] == 0:
            del target[k]
    return target
