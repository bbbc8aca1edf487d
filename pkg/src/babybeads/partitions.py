"""Partitions as plain tuples of positive integers.

The empty tuple is the partition of 0.  Everything here works on tuples so
that partitions hash, sort and print without ceremony.
"""

from functools import lru_cache
from math import factorial


def is_partition(parts):
    parts = tuple(parts)
    if any((not isinstance(p, int)) or p <= 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def partition(parts):
    """Normalise a sequence to a partition tuple, dropping trailing zeros."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if not is_partition(parts):
        raise ValueError("not a partition: %r" % (parts,))
    return parts


def size(lam):
    return sum(lam)


@lru_cache(maxsize=None)
def _partitions(n, largest):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n):
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("negative size")
    return list(_partitions(n, n))


def contains(mu, lam):
    """mu <= lam in the containment order (diagram inclusion)."""
    if len(mu) > len(lam):
        return False
    return all(a <= b for a, b in zip(mu, lam))


def hat(lam):
    """Remove the first part."""
    return tuple(lam[1:])


def transpose(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def concat(t, mu):
    """The partition (t, mu_1, mu_2, ...)."""
    if mu and t < mu[0]:
        raise ValueError("concat needs t >= mu_1, got t=%d, mu=%r" % (t, mu))
    if t <= 0:
        if mu:
            raise ValueError("concat needs t >= mu_1, got t=%d, mu=%r" % (t, mu))
        return ()
    return (t,) + tuple(mu)


def sequence_partition(seq):
    """Read an integer sequence as a partition, or None if it is not one.

    Trailing zeros are allowed, so (3, 0) reads as (3); negative entries or
    increases give None (the module indexed by a non-partition is zero).
    """
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    if any(s <= 0 for s in seq):
        return None
    if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
        return None
    return tuple(seq)


def hook_lengths(lam):
    conj = transpose(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def irrep_dimension(lam):
    """Number of standard tableaux of shape lam (hook length formula)."""
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    return factorial(size(lam)) // prod


def addable_cells(lam):
    cells = []
    for i in range(len(lam) + 1):
        row = lam[i] if i < len(lam) else 0
        if i == 0 or lam[i - 1] > row:
            cells.append((i, row))
    return cells


def removable_cells(lam):
    return [(i, lam[i] - 1) for i in range(len(lam))
            if i == len(lam) - 1 or lam[i] > lam[i + 1]]


def add_cell(lam, row):
    parts = list(lam) + [0]
    parts[row] += 1
    return partition(parts)


def remove_cell(lam, row):
    parts = list(lam)
    parts[row] -= 1
    return partition(parts)


def fmt(lam):
    """Canonical text form, e.g. [3,1,1]; [] for the empty partition."""
    return "[" + ",".join(str(p) for p in lam) + "]"


def parse(text):
    """Inverse of fmt; also accepts (3,1,1) and bare 3,1,1."""
    t = text.strip()
    if t[:1] in "[(" and t[-1:] in "])":
        t = t[1:-1]
    t = t.strip()
    if not t:
        return ()
    try:
        parts = [int(s) for s in t.split(",")]
    except ValueError:
        raise ValueError("malformed partition: %r" % text)
    if not is_partition(parts):
        raise ValueError("malformed partition: %r" % text)
    return tuple(parts)
