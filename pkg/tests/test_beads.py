from itertools import permutations
from math import factorial

import pytest

from babybeads import beads as bd
from babybeads import exactlinalg as la
from babybeads import perms
from babybeads.characters import decompose_pair
from babybeads.partitions import partitions_of


def brute_arrangements(N, n):
    """Every way to cut a word of the labels into n columns of size 1 or 2."""
    out = set()
    for word in permutations(range(N)):
        def cut(i, cols):
            if i == N:
                if len(cols) == n:
                    out.add(tuple(cols))
                return
            cut(i + 1, cols + [(word[i],)])
            if i + 1 < N:
                cut(i + 2, cols + [(word[i], word[i + 1])])
        cut(0, [])
    return out


def test_counts():
    assert len(bd.enumerate_injections(2, 3)) == 6
    assert bd.enumerate_beads(3, 1) == []
    assert bd.bead_count(8, 5) == 403200
    assert bd.signed_bead_count(8, 5) == 50400


@pytest.mark.parametrize("N", range(0, 7))
def test_enumeration_against_brute_force(N):
    for n in range(0, N + 2):
        got = bd.enumerate_beads(N, n)
        assert len(got) == len(set(got)) == bd.bead_count(N, n)
        assert set(got) == brute_arrangements(N, n)
        signed = bd.enumerate_beads(N, n, signed=True)
        assert len(signed) == bd.signed_bead_count(N, n)
        assert set(signed) == {bd.canonical(a)[0] for a in got}


def test_signed_dimension_as_quotient_rank():
    # Beads^{+-}(N, n) as k Beads modulo phi + (swap) phi, for N <= 5
    for N in range(1, 6):
        for n in range(1, N + 1):
            full = bd.enumerate_beads(N, n)
            if not full:
                continue
            index = {a: i for i, a in enumerate(full)}
            rows = []
            for a in full:
                for c, col in enumerate(a):
                    if len(col) == 2:
                        b = a[:c] + ((col[1], col[0]),) + a[c + 1:]
                        r = [0] * len(full)
                        r[index[a]] += 1
                        r[index[b]] += 1
                        rows.append(r)
            rel = la.rank(rows) if rows else 0
            assert len(full) - rel == bd.signed_bead_count(N, n)
    assert len(bd.SignedBeads(8, 5)) == 50400
    for N in range(1, 6):
        assert len(bd.SignedBeads(N, N)) == factorial(N)


def test_transpose_structure_maps():
    M = bd.transpose_structure_map(0, 2).dense()
    assert M.nrows() == 2 and M.ncols() == 1 and M[0, 0] == 1 and M[1, 0] == 1
    M = bd.transpose_structure_map(1, 2).dense()
    assert all(sum(M[i, j] for i in range(M.nrows())) == 1 for j in range(M.ncols()))
    # two steps at once: each generator goes to every injection 2 -> 3
    two = bd.transpose_structure_map(1, 3).dense() * bd.transpose_structure_map(0, 3).dense()
    assert [two[i, 0] for i in range(6)] == [1] * 6


def test_fi_map_examples():
    src, tgt, M = bd.beads_fi_map(2, 1, 1)
    assert src == [((0,),)] and tgt[0] == ((0, 1),)
    D = M.dense()
    assert D[tgt.index(((0, 1),)), 0] == 1 and D[tgt.index(((1, 0),)), 0] == 0
    src, tgt, M = bd.beads_fi_map(5, 3, 4)
    D = M.dense()
    for j, a in enumerate(src):
        nonzero = sum(1 for i in range(D.nrows()) if D[i, j] != 0)
        assert nonzero == sum(1 for col in a if len(col) == 1)


def test_fi_map_equivariance_over_beads_4_3():
    # relabel by sigma fixing the new label, move columns by pi
    N, n, new = 4, 3, 3
    src, tgt, M = bd.beads_fi_map(N, n, new)
    D = M.dense()
    si = {a: i for i, a in enumerate(src)}
    ti = {a: i for i, a in enumerate(tgt)}
    for sigma in permutations(range(3)):
        sigma = sigma + (3,)
        for pi in permutations(range(n)):
            for j, a in enumerate(src):
                b = bd.act_beads(a, sigma, pi)
                for i, t in enumerate(tgt):
                    if D[i, j] != 0:
                        assert D[ti[bd.act_beads(t, sigma, pi)], si[b]] == D[i, j]


def test_iota_plus_tau():
    src, tgt, M = bd.iota_plus_tau(2, 1, (0, 1), 0)
    D = M.dense()
    assert src == [()] and D[tgt.index(((0, 1),)), 0] == 1 and D[tgt.index(((1, 0),)), 0] == 1
    # independence of the order of the two new labels, exhaustively at (4, 2)
    for x in range(4):
        for y in range(x + 1, 4):
            for c in range(2):
                assert bd.iota_plus_tau(4, 2, (x, y), c)[2].entries == \
                    bd.iota_plus_tau(4, 2, (y, x), c)[2].entries


def test_signed_projection_kills_iota_plus_tau():
    for N, n in [(2, 1), (3, 2), (4, 2), (4, 3), (5, 3)]:
        full, P = bd.SignedBeads(N, n).projection()
        for c in range(n):
            _, tgt, M = bd.iota_plus_tau(N, n, (N - 2, N - 1), c)
            assert tgt == full
            assert la.is_zero(P.dense() * M.dense())


def test_projection_intertwines():
    sb = bd.SignedBeads(4, 3)
    full, P = sb.projection()
    P = P.dense()
    fi = {a: i for i, a in enumerate(full)}
    for sigma in perms.all_perms(4):
        for pi in perms.all_perms(3):
            G = la.zeros(len(full), len(full))
            for j, a in enumerate(full):
                G[fi[bd.act_beads(a, sigma, pi)], j] = 1
            p, s = sb.action(sigma, pi)
            assert la.signed_perm_matrix(p, s) * P == P * G


def test_beads_2_1_character():
    sb = bd.SignedBeads(2, 1)
    traces = {}
    for mu in partitions_of(2):
        p, s = sb.action(perms.class_representative(mu), (0,))
        traces[(mu, (1,))] = la.signed_perm_trace(p, s)
    assert decompose_pair(traces, 2, 1) == {((1, 1), (1,)): 1}


def test_permutation_character_is_induced():
    # k Beads(N, n) against k S_N (x)_{S_m} k hom(m, n), m = N - n: induction
    # from S_m x S_n, the S_n sitting diagonally on the last n letters and on
    # the columns, via the induced character formula
    for N, n in [(2, 1), (3, 2), (4, 2), (4, 3), (5, 3), (5, 4)]:
        m = N - n
        arrs = bd.enumerate_beads(N, n)
        homs = bd.enumerate_injections(m, n)
        GN, Gn = perms.all_perms(N), perms.all_perms(n)
        for mu in partitions_of(N):
            s = perms.class_representative(mu)
            for nu in partitions_of(n):
                p = perms.class_representative(nu)
                fixed = sum(1 for a in arrs if bd.act_beads(a, s, p) == a)
                total = 0
                for x in GN:
                    h = perms.compose(perms.inverse(x), perms.compose(s, x))
                    if any(h[i] >= m for i in range(m)):
                        continue
                    k = tuple(h[i] - m for i in range(m, N))
                    for t in Gn:
                        if perms.compose(perms.inverse(t), perms.compose(p, t)) != k:
                            continue
                        total += sum(1 for f in homs if bd.act_injection(f, h[:m], k) == f)
                H = factorial(m) * factorial(n)
                assert total % H == 0
                assert fixed == total // H


def test_fmt():
    assert bd.fmt_arrangement(((0, 2), (1,))) == "[1;3] [2]"
