import pytest

from babybeads import closedform as cf
from babybeads import exactlinalg as la
from babybeads import homology as hm
from babybeads import perms
from babybeads.characters import induce_decomposition, skew_decomposition
from babybeads.partitions import irrep_dimension, partitions_of

ONES = lambda N: (1,) * N
HOOK = lambda N: (2,) + (1,) * (N - 2)


def dim2(dec):
    return sum(m * irrep_dimension(a) * irrep_dimension(b) for (a, b), m in dec.items())


def dim1(dec):
    return sum(m * irrep_dimension(a) for a, m in dec.items())


def test_calc_examples():
    assert cf.thm_calc(1, 2) == {((1,), (1, 1)): 1}
    assert cf.full_khom(1, 2) == {((1,), (2,)): 1, ((1,), (1, 1)): 1}
    assert cf.thm_calc(3, 2) == {} and cf.full_khom(3, 2) == {}


@pytest.mark.parametrize("b", range(1, 5))
def test_calc_diagonal_is_zero(b):
    # no lam |- b has lam_1 = 0, and the brute cokernel vanishes as well
    assert cf.thm_calc(b, b) == {}
    assert hm.decompose_h0(b, b, "hfi_tr", engine="direct") == {}
    assert hm.h0_cokernel(hm.hfi_problem(b, b))[0] == 0


@pytest.mark.parametrize("b", range(1, 6))
def test_full_khom_is_the_permutation_module(b):
    for a in range(b + 1):
        p = hm.hfi_problem(a, b)
        _, traces = hm.h0_cokernel(hm.H0Problem(a, b, p.basis, p.action, []))
        from babybeads.characters import decompose_pair
        assert decompose_pair(traces, a, b) == cf.full_khom(a, b)


def test_cor_beads_examples():
    assert cf.cor_beads_h(2, 1) == {}
    assert cf.cor_beads_h(2, 2) == hm.decompose_h0(2, 2, "beads", engine="direct")
    assert cf.cor_beads_h(2, 2) == {((2,), (2,)): 1, ((1, 1), (1, 1)): 1}


@pytest.mark.parametrize("N", range(1, 6))
def test_cor_beads_against_brute_dimension(N):
    for n in range(1, N + 1):
        dim, _ = hm.h0_cokernel(hm.beads_problem(N, n))
        assert dim2(cf.cor_beads_h(N, n)) == dim


def test_closed_examples():
    assert cf.thm_1N(7, 4).decomposition == {(4,): 1}
    assert cf.thm_21(6, 5).decomposition == {(2, 1, 1, 1): 1, (3, 1, 1): 1, (2, 2, 1): 1}
    assert cf.thm_21(3, 2).decomposition == {}
    with pytest.raises(ValueError):
        cf.thm_21(2, 1)


@pytest.mark.parametrize("N", range(1, 8))
def test_general_isotypical_on_the_two_families(N):
    for n in range(0, N + 2):
        assert cf.general_isotypical(ONES(N), n).decomposition == cf.thm_1N(N, n).decomposition
        if N >= 3:
            assert cf.general_isotypical(HOOK(N), n).decomposition == cf.thm_21(N, n).decomposition


@pytest.mark.parametrize("N", range(1, 8))
def test_sign_family_has_no_relations(N):
    for n in range(1, N + 1):
        F = cf.isotypical_map(ONES(N), n)
        assert F.rank() == 0


@pytest.mark.parametrize("N", range(1, 7))
def test_trivial_rho(N):
    for n in range(0, N + 1):
        got = cf.general_isotypical((N,), n).decomposition
        assert got == ({(N,): 1} if n == N else {})


@pytest.mark.parametrize("N", range(3, 9))
def test_hook_codomain_and_domain_lists(N):
    for n in range(1, N + 1):
        m = N - n
        assert cf.codomain_decomposition(HOOK(N), n) == cf.int_isotyp_21(N, m)
        assert cf.domain_decomposition(HOOK(N), n) == cf.relations_21(N, m)
        F = cf.isotypical_map(HOOK(N), n)
        assert F.rank() == F.domain_dim() == dim1(cf.relations_21(N, m))
        # the cokernel is codomain minus domain, entry by entry
        diff = dict(cf.int_isotyp_21(N, m))
        for lam, c in cf.relations_21(N, m).items():
            diff[lam] -= c
        assert {k: v for k, v in diff.items() if v} == cf.thm_21(N, n).decomposition


def test_components_are_equivariant():
    for rho, n in [((2, 1, 1, 1), 3), ((3, 2, 1), 4), ((2, 2, 1), 3), ((3, 1, 1, 1), 4)]:
        F = cf.isotypical_map(rho, n)
        for (lp, lam) in F.blocks:
            f = cf.component_map(rho, lp, lam)
            assert f.is_equivariant()
        for lp in F.domain:
            inv, B = cf._invariants(rho, lp)
            assert inv.relation_defects() == []


@pytest.mark.parametrize("rho,n", [((3, 2, 1), 4), ((2, 2, 1, 1), 4), ((3, 1, 1, 1), 4),
                                   ((2, 2, 2), 4), ((3, 3), 4), ((2, 2, 1), 3)])
def test_rescaling_leaves_the_cokernel(rho, n):
    base = cf.general_isotypical(rho, n).decomposition
    for seed in range(3):
        sc = cf.random_scales(rho, n, seed)
        assert cf.general_isotypical(rho, n, sc).decomposition == base


@pytest.mark.parametrize("N", range(1, 7))
def test_master_equivalence_small(N):
    for n in range(1, N + 1):
        T = hm.transitive(N, n, "beads_signed")
        total = 0
        for rho in partitions_of(N):
            g = cf.general_isotypical(rho, n).decomposition
            assert g == T.slice(rho)
            total += irrep_dimension(rho) * dim1(g)
        if N <= 5:
            assert total == hm.h0_cokernel(hm.beads_problem(N, n, True))[0]


def test_ldm_examples():
    assert cf.ldm_triv(3, 2) == {((1, 1, 1), (1, 1)): 1}
    assert cf.ldm_triv(3, 1) == {}
    assert cf.ldm_sgn(3, 1) == {((1, 1, 1), (1,)): 1}
    with pytest.raises(ValueError):
        cf.ldm_triv(0, 2)


@pytest.mark.parametrize("s", range(1, 5))
def test_lad_of_constant_and_sign(s):
    for t in range(1, 5):
        assert hm.lad_int(hm.constant_input(), s, t) == cf.ldm_triv(s, t)
        assert hm.lad_int(hm.sign_input(), s, t) == cf.ldm_sgn(s, t)


def test_hc_input_omega_is_equivariant():
    F = hm.hc_input()
    for m in range(1, 4):
        for n in range(m, 5):
            src, tgt, W = F.value(m - 1, n - 1), F.value(m, n), F.omega(m, n)
            for i in range(m - 2):
                assert W * src.left.gens[i] == tgt.left.gens[i] * W
            for j in range(n - 2):
                assert W * src.right.gens[j] == tgt.right.gens[j] * W


@pytest.mark.parametrize("N", range(1, 6))
def test_lad_of_hc_is_the_signed_beads_value(N):
    for n in range(1, N + 1):
        assert hm.lad_int(hm.hc_input(), N, n) == hm.decompose_h0(N, n)


def test_identify_skew():
    assert cf.identify_skew_21(6, (2, 1)) == ("sgn", 3)
    assert cf.tagged_decomposition(("sgn", 3)) == {(1, 1, 1): 1}
    assert cf.identify_skew_21(5, (1, 1)) == ("sgn_up", 3)
    assert cf.tagged_decomposition(("sgn_up", 3)) == {(1, 1, 1): 1, (2, 1): 1}
    assert cf.identify_skew_21(5, (3,)) == ("zero", 2)
    assert cf.identify_skew_21(4, (2, 1, 1)) == ("triv", 0)


@pytest.mark.parametrize("N", range(3, 9))
def test_identify_skew_against_littlewood_richardson(N):
    rho = HOOK(N)
    for m in range(0, N + 1):
        for mu in partitions_of(m):
            tag = cf.identify_skew_21(N, mu)
            assert cf.tagged_decomposition(tag) == skew_decomposition(rho, mu)
