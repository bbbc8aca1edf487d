"""Permutations of {0, ..., n-1} stored as tuples, p[i] = image of i.

Composition is (p * q)(i) = p(q(i)), so groups act on the left.  Labels in
the mathematical text run from 1; here they run from 0.
"""


def identity(n):
    return tuple(range(n))


def compose(p, q):
    return tuple(p[i] for i in q)


def inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def transposition(n, i, j):
    p = list(range(n))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def adjacent(n, i):
    """The simple transposition s_i = (i, i+1), 0-based."""
    return transposition(n, i, i + 1)


def reduced_word(p):
    """Indices i_1, ..., i_k with p = s_{i_1} s_{i_2} ... s_{i_k}."""
    p = list(p)
    word = []
    while True:
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                break
        else:
            break
        p[i], p[i + 1] = p[i + 1], p[i]
        word.append(i)
    word.reverse()
    return word


def cycle_type(p):
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                k += 1
            lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def sign(p):
    return -1 if (len(p) - len(cycle_type(p))) % 2 else 1


def class_representative(mu):
    """Cycles in decreasing length, filled with consecutive integers."""
    n = sum(mu)
    p = list(range(n))
    start = 0
    for k in mu:
        for i in range(k):
            p[start + i] = start + (i + 1) % k
        start += k
    return tuple(p)


def embed(p, n, offset):
    """Let p act on the letters offset, ..., offset+len(p)-1 inside S_n."""
    q = list(range(n))
    for i, j in enumerate(p):
        q[offset + i] = offset + j
    return tuple(q)


def all_perms(n):
    from itertools import permutations
    return [tuple(p) for p in permutations(range(n))]
