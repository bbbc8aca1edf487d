from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from babybeads import freelie as fl
from babybeads import homology as hm
from babybeads import perms
from babybeads.characters import ClassFunction, decompose
from babybeads.partitions import partitions_of


def right_normed(word):
    """[w1, [w2, [..., wk]]] expanded in the tensor algebra, by hand."""
    poly = {word[-1:]: 1}
    for x in reversed(word[:-1]):
        out = {}
        for w, c in poly.items():
            out[(x,) + w] = out.get((x,) + w, 0) + c
            out[w + (x,)] = out.get(w + (x,), 0) - c
        poly = {w: c for w, c in out.items() if c}
    return poly


@pytest.mark.parametrize("k", range(1, 8))
def test_dimension(k):
    basis = fl.lyndon_basis(range(k))
    assert len(basis) == factorial(k - 1)
    assert all(fl.is_lyndon(w) for w in basis)


def test_lyndon_words_by_rotation():
    # Lyndon means strictly smaller than all proper rotations
    for w in permutations(range(5)):
        rot = all(w < w[i:] + w[:i] for i in range(1, 5))
        assert fl.is_lyndon(w) == rot


def test_standard_factorization():
    assert fl.standard_factorization((0, 1)) == ((0,), (1,))
    assert fl.standard_factorization((0, 2, 1)) == ((0, 2), (1,))
    assert fl.standard_factorization((0, 1, 2)) == ((0,), (1, 2))


def test_antisymmetry_and_jacobi():
    x, y, z, w = ({(i,): 1} for i in range(4))
    assert fl.bracket(x, x) == {}
    assert fl.bracket(x, y) == {(0, 1): 1} and fl.bracket(y, x) == {(0, 1): -1}
    letters = [{(i,): 1} for i in range(4)]
    for a, b, c in permutations(range(4), 3):
        X, Y, Z = letters[a], letters[b], letters[c]
        total = {}
        for t in (fl.bracket(X, fl.bracket(Y, Z)), fl.bracket(Y, fl.bracket(Z, X)),
                  fl.bracket(Z, fl.bracket(X, Y))):
            for k, v in t.items():
                total[k] = total.get(k, 0) + v
        assert {k: v for k, v in total.items() if v} == {}
    # with a two-letter element in the mix
    XY = fl.bracket(x, y)
    total = {}
    for t in (fl.bracket(XY, fl.bracket(z, w)), fl.bracket(z, fl.bracket(w, XY)),
              fl.bracket(w, fl.bracket(XY, z))):
        for k, v in t.items():
            total[k] = total.get(k, 0) + v
    assert {k: v for k, v in total.items() if v} == {}


def test_rewriting_round_trip():
    # every right-normed bracket is a Lie element; its Lyndon expansion
    # expands back to the same tensor
    for w in permutations(range(5)):
        poly = right_normed(w)
        assert fl.expand(fl.to_lyndon(poly)) == poly
    with pytest.raises(ValueError):
        fl.to_lyndon({(1, 0): 1})


def lie_character(N):
    vals = {}
    basis = fl.lyndon_basis(range(N))
    index = {w: i for i, w in enumerate(basis)}
    for mu in partitions_of(N):
        s = perms.class_representative(mu)
        tr = 0
        for w in basis:
            tr += fl.relabel({w: 1}, s).get(w, 0)
        vals[mu] = Fraction(tr)
    return ClassFunction(N, vals)


@pytest.mark.parametrize("N", range(1, 7))
def test_lie_character_sign_and_trivial(N):
    d = decompose(lie_character(N))
    assert ((1,) * N in d) == (N in (1, 2))
    assert ((N,) in d) == (N == 1)
    if N == 3:
        assert d == {(2, 1): 1}


def test_differential_is_equivariant():
    # S_N x S_n permutes the image rows: the image span is stable
    from babybeads import exactlinalg as la
    for N, n, tr in [(3, 2, False), (4, 2, False), (4, 3, True), (4, 2, True)]:
        H = fl.FreeLieH0(N, n, tr)
        D = H.module.dim
        for i in range(N - 1):
            cols = H.module.action_columns(perms.adjacent(N, i), perms.identity(n))
            G = la.fmpq_mat(D, D)
            for k, col in enumerate(cols):
                for r, v in col.items():
                    G[r, k] = v
            assert H.image.contains(G * H.image.vectors())
        for j in range(n - 1):
            cols = H.module.action_columns(perms.identity(N), perms.adjacent(n, j))
            G = la.fmpq_mat(D, D)
            for k, col in enumerate(cols):
                for r, v in col.items():
                    G[r, k] = v
            assert H.image.contains(G * H.image.vectors())


@pytest.mark.parametrize("N", range(1, 6))
def test_abelianization(N):
    want = {(1,): {(1,): 1}} if N == 1 else {}
    assert fl.h0_multilinear(N, 1, False) == want


def test_truncated_example():
    assert fl.h0_multilinear(5, 4, True)[(1,) * 5] == {(2, 1, 1): 1}


@pytest.mark.parametrize("N", range(1, 6))
def test_truncated_oracle_equals_signed_beads(N):
    for n in range(1, N + 1):
        table = fl.h0_multilinear(N, n, True)
        flat = {(r, g): c for r, sl in table.items() for g, c in sl.items()}
        assert flat == hm.decompose_h0(N, n)


def test_non_example():
    c = fl.truncation_comparison((2, 2), 2)
    assert (c["free_mult"], c["truncated_mult"], c["equal"]) == (1, 0, False)


@pytest.mark.parametrize("N", range(1, 6))
def test_truncation_theorems(N):
    shapes = [(1,) * N] + ([(2,) + (1,) * (N - 2)] if N >= 2 else [])
    for rho in shapes:
        for n in range(1, N + 1):
            assert fl.truncation_comparison(rho, n)["equal"]


def test_cap():
    with pytest.raises(ValueError):
        fl.FreeLieH0(fl.MAX_N_FREE + 1, 2)
