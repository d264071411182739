import math

import pytest

from matroid_chow import chow, matroid as mt
from matroid_chow.shapes import (
    SkewShape,
    complement,
    descent_set,
    partitions_in_box,
    ribbon_from_composition,
    transpose,
)
from matroid_chow.symfunc import SchurExpansion
from matroid_chow.tableaux import count_permutations_with_descents, count_syt_with_num_descents

from conftest import FIGURE3_PATHS, compositions, named_corpus, random_matroids


class TestSnakeClass:
    def test_example_dual_expansion(self):
        expect = {
            (5, 2, 1): 1, (5, 1, 1, 1): 1, (4, 3, 1): 1, (4, 2, 2): 1,
            (4, 2, 1, 1): 2, (3, 3, 1, 1): 1, (3, 2, 2, 1): 1,
        }
        for method in ("ribbon", "syt", "recursion"):
            c = chow.sc_snake((2, 1, 2, 3), method=method)
            assert c.dual_coefficients() == expect, method
            assert (c.k, c.n, c.m) == (4, 9, 12)

    def test_methods_agree_through_size_7(self):
        for size in range(1, 8):
            for b in compositions(size):
                r = chow.sc_snake(b, method="ribbon")
                assert r.coeffs == chow.sc_snake(b, method="syt").coeffs
                assert r.coeffs == chow.sc_snake(b, method="recursion").coeffs

    def test_minimal_is_single_hook_term(self):
        for k, n in [(2, 5), (3, 6), (2, 7)]:
            c = chow.sc_general(mt.minimal(k, n))
            hook = (n - k,) + (1,) * (k - 1)
            assert c.dual_coefficients() == {hook: 1}

    def test_single_row(self):
        c = chow.sc_snake((4,))
        assert c.dual_coefficients() == {(4,): 1}
        assert c.m == 0


class TestLatticePathClass:
    def test_figure3_is_sum_of_snakes(self, figure3):
        got = chow.sc_lattice_path(FIGURE3_PATHS)
        acc: dict = {}
        for b in [(2, 3, 1), (3, 2, 1), (4, 1, 1)]:
            for nu, v in chow.sc_snake(b).dual_coefficients().items():
                acc[nu] = acc.get(nu, 0) + v
        assert got.dual_coefficients() == acc
        assert chow.sc_general(figure3).coeffs == got.coeffs

    def test_methods_agree(self):
        for spec in (
            SkewShape((3, 3), ()),
            SkewShape((4, 4, 4), (2, 1)),
            ribbon_from_composition((2, 1, 2)),
            FIGURE3_PATHS,
        ):
            a = chow.sc_lattice_path(spec, method="transversal")
            b = chow.sc_lattice_path(spec, method="snakes")
            assert a.coeffs == b.coeffs, spec

    def test_uniform_shape(self):
        c = chow.sc_lattice_path(SkewShape((3, 3), ()))
        assert c.coeffs.coeffs == {(2,): 3, (1, 1): 1}

    def test_ribbon_shape_reduces_to_snake(self):
        b = (2, 1, 2)
        assert chow.sc_lattice_path(ribbon_from_composition(b)).coeffs == chow.sc_snake(b).coeffs

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            chow.sc_lattice_path(SkewShape((2, 2), (2,)))


class TestNestedClass:
    def test_uniform_chain(self):
        for k, n in [(2, 5), (3, 6), (1, 4), (3, 7)]:
            assert chow.sc_nested(((n, k),), n).coeffs == chow.sc_uniform(k, n).coeffs

    def test_appendix_displays(self):
        assert chow.sc_nested(((2, 1), (4, 2), (7, 3)), 7).coeffs.coeffs == {
            (4, 2): 3, (3, 3): 5, (4, 1, 1): 2, (3, 2, 1): 5, (2, 2, 2): 1}
        assert chow.sc_nested(((4, 2), (7, 3)), 7).coeffs.coeffs == {
            (4, 2): 5, (3, 3): 7, (4, 1, 1): 3, (3, 2, 1): 6, (2, 2, 2): 1}
        assert chow.sc_nested(((2, 1), (7, 3)), 7).coeffs.coeffs == {
            (4, 2): 3, (3, 3): 6, (4, 1, 1): 2, (3, 2, 1): 6, (2, 2, 2): 1}

    def test_equals_realization(self):
        for chain, n in [(((2, 1), (4, 2), (7, 3)), 7), (((3, 1), (6, 3)), 6),
                         (((2, 1), (5, 2), (8, 3)), 8)]:
            m = mt.nested_from_chain(chain, n)
            assert chow.sc_nested(chain, n).coeffs == chow.sc_general(m).coeffs

    def test_rejects_inconsistent_chain(self):
        with pytest.raises(ValueError):
            chow.sc_nested(((3, 1), (4, 2), (7, 3)), 7)  # one new element, rank +1
        with pytest.raises(ValueError):
            chow.sc_nested(((2, 1),), 7)  # does not end at the ground set


class TestUniformClass:
    def test_klyachko_example(self):
        c = chow.sc_uniform(2, 5)
        assert c.coeffs.coeffs == {(2,): 3, (1, 1): 1}
        assert c.m == 2

    def test_rank_one(self):
        c = chow.sc_uniform(1, 5)
        assert c.m == 0 and c.coeffs.coeffs == {(): 1}

    def test_coefficients_are_descent_counts(self):
        k, n = 3, 6
        c = chow.sc_uniform(k, n)
        for nu in partitions_in_box(n - 1, k, n - k):
            assert c.dual_coefficient(nu) == count_syt_with_num_descents(nu, k - 1)


class TestGeneral:
    def test_appendix(self, appendix):
        c = chow.sc_general(appendix)
        assert c.coeffs.coeffs == {
            (4, 2): 1, (3, 3): 2, (4, 1, 1): 1, (3, 2, 1): 3, (2, 2, 2): 1}
        assert (c.k, c.n, c.m) == (3, 7, 6)

    def test_agrees_with_families(self):
        assert chow.sc_general(mt.uniform(3, 6)).coeffs == chow.sc_uniform(3, 6).coeffs
        for b in [(2, 1, 2), (1, 2, 3), (4, 1)]:
            assert chow.sc_general(mt.snake(b)).coeffs == chow.sc_snake(b).coeffs

    def test_loop_coloop_multipliers(self):
        base = chow.sc_general(mt.uniform(2, 5))
        loop = chow.sc_general(mt.uniform(2, 5).add_loop())
        # adding a loop prepends a full column to every shape
        assert loop.coeffs.coeffs == {(3, 1): 3, (2, 2): 1}
        assert loop.m == base.m + 2
        coloop = chow.sc_general(mt.uniform(2, 5).add_coloop())
        # adding a coloop stacks a full-width row on top
        assert coloop.coeffs.coeffs == {(3, 2): 3, (3, 1, 1): 1}
        assert coloop.m == base.m + 3
        # the dual expansion never moves
        assert loop.dual_coefficients() == base.dual_coefficients()
        assert coloop.dual_coefficients() == base.dual_coefficients()

    def test_trivial_matroids(self):
        for m in [mt.uniform(0, 1), mt.uniform(1, 1), mt.uniform(3, 3), mt.uniform(0, 2)]:
            c = chow.sc_general(m)
            assert c.coeffs.coeffs == {(): 1}
            assert c.m == 0

    def test_degree_bookkeeping(self):
        for m in named_corpus(7):
            c = chow.sc_general(m)
            kappa = m.num_components()
            assert c.m == m.rank * (m.n - m.rank) - (m.n - kappa)
            for p in c.coeffs.support():
                assert sum(p) == c.m

    def test_rejects_disconnected_core(self):
        with pytest.raises(chow.DisconnectedCoreError):
            chow.sc_general(mt.direct_sum(mt.uniform(1, 2), mt.uniform(1, 2)))

    def test_nonnegative_on_random_matroids(self):
        for m in random_matroids(20, 7, seed=11):
            c = chow.sc_general(m)
            assert all(v >= 0 for v in c.coeffs.coeffs.values()), m


class TestTransforms:
    def test_poincare_dual(self):
        c = chow.sc_uniform(2, 5)
        d = chow.poincare_dual(c)
        assert d.coeffs.coeffs == {(3, 1): 3, (2, 2): 1}
        assert chow.poincare_dual(d).coeffs == c.coeffs

    def test_matroid_duality(self):
        assert chow.transform_dual_matroid(chow.sc_uniform(2, 5)).coeffs == chow.sc_uniform(3, 5).coeffs
        c24 = chow.sc_general(mt.uniform(2, 4))
        assert chow.transform_dual_matroid(c24).coeffs == c24.coeffs  # self-dual

    def test_duality_on_corpus(self):
        for m in named_corpus(6) + random_matroids(8, 6, seed=3):
            lhs = chow.transform_dual_matroid(chow.sc_general(m))
            rhs = chow.sc_general(m.dual())
            assert lhs.coeffs == rhs.coeffs, m

    def test_snake_duality_via_transposed_ribbon(self):
        from matroid_chow.shapes import composition_of_ribbon

        for b in [(2, 1, 2), (3, 2), (1, 2, 2)]:
            b_t = composition_of_ribbon(ribbon_from_composition(b).transpose())
            lhs = chow.transform_dual_matroid(chow.sc_snake(b))
            assert lhs.coeffs == chow.sc_snake(b_t).coeffs


class TestInvariants:
    def test_beta_examples(self, appendix):
        assert chow.beta_from_chow(chow.sc_uniform(2, 5)) == 3
        for b in [(3,), (2, 1, 2), (1, 1, 1, 2)]:
            assert chow.beta_from_chow(chow.sc_snake(b)) == 1
        assert chow.beta_from_chow(chow.sc_general(appendix)) == 2

    def test_beta_matches_rank_sum_on_corpus(self):
        for m in named_corpus(7):
            if m.rank == 0:
                continue
            assert chow.beta_from_chow(chow.sc_general(m)) == m.beta(), m

    def test_volume_examples(self):
        assert chow.volume_from_chow(chow.sc_general(mt.uniform(1, 2))) == 1
        for b in [(2, 1, 2), (1, 2, 3), (2, 1, 2, 3)]:
            got = chow.volume_from_chow(chow.sc_snake(b))
            want = count_permutations_with_descents(descent_set(b).as_set(), sum(b))
            assert got == want

    def test_volume_of_lattice_paths_by_brute_force(self, figure3):
        from itertools import permutations as perms

        intervals = mt.transversal_intervals(FIGURE3_PATHS)

        def is_transversal(d):
            xs = sorted(d)
            return len(xs) == len(intervals) and all(
                c <= x <= e for x, (c, e) in zip(xs, intervals)
            )

        count = 0
        for p in perms(range(1, 7)):
            d = {i + 1 for i in range(5) if p[i] > p[i + 1]}
            if is_transversal(d):
                count += 1
        assert chow.volume_from_chow(chow.sc_general(figure3)) == count

    def test_support_examples(self):
        assert (3, 3) not in chow.support_of(chow.sc_snake((1, 2, 3)))
        supp = chow.support_of(chow.sc_snake((2, 1, 5, 1)))
        assert (3, 2, 2, 2) not in supp
        assert supp == {(6, 2, 1), (6, 1, 1, 1), (5, 3, 1), (5, 2, 2), (5, 2, 1, 1)}
        assert chow.support_of(chow.sc_general(mt.minimal(3, 7))) == {(4, 1, 1)}

    def test_support_bounds_sweep(self):
        for size in range(1, 8):
            for b in compositions(size):
                assert chow.check_support_bounds(b), b


class TestPaving:
    def test_closed_form_example(self):
        assert chow.uniform_eta_m(3, 7, 0) == 10
        assert mt.uniform(3, 7).beta() == 10 == math.comb(5, 2)

    def test_uniform_correction_is_empty(self):
        for k, n in [(2, 5), (3, 6)]:
            for m_ in range(0, min(k - 1, n - k)):
                assert chow.paving_schubert(mt.uniform(k, n), m_) == chow.uniform_eta_m(k, n, m_)

    def test_positive_on_fixtures(self):
        from itertools import combinations

        fixtures = [
            mt.Matroid(6, [b for b in combinations(range(1, 7), 3) if not set(b) <= {1, 2, 3, 4}]),
            mt.Matroid(7, [b for b in combinations(range(1, 8), 3) if not set(b) <= {1, 2, 3}]),
            mt.Matroid(
                7,
                [
                    b
                    for b in combinations(range(1, 8), 3)
                    if not set(b) <= {1, 2, 3} and not set(b) <= {4, 5, 6}
                ],
            ),
        ]
        for m in fixtures:
            assert m.is_paving() and m.is_connected()
            cls = chow.sc_general(m)
            for deg in range(0, min(m.rank - 1, m.n - m.rank)):
                value = chow.paving_schubert(m, deg)
                assert value > 0
                assert value == cls.dual_coefficient(chow.eta_m_partition(m.rank, m.n, deg))

    def test_rejects_non_paving(self, appendix):
        with pytest.raises(ValueError):
            chow.paving_schubert(appendix, 0)


class TestIdentities:
    def test_main_identity_on_snakes(self):
        for size in range(2, 7):
            for b in compositions(size):
                if len(b) < 2:
                    continue
                assert chow.check_main_identity(mt.snake(b[:-1]), b[-1]), b

    @pytest.mark.parametrize("b", [1, 2, 3])
    def test_main_identity_uniform(self, b):
        assert chow.check_main_identity(mt.uniform(2, 4), b)

    def test_product_identities(self):
        assert chow.check_product_identities(2, 5)
        assert chow.check_product_identities(2, 3)  # single trivial term

    def test_beta_volume_conjecture(self):
        holds, eq = chow.check_beta_volume_conjecture(mt.uniform(2, 4))
        assert holds and eq
        holds, eq = chow.check_beta_volume_conjecture(mt.uniform(2, 5))
        assert holds and not eq
        for k, n in [(2, 6), (3, 7), (1, 5)]:
            holds, eq = chow.check_beta_volume_conjecture(mt.minimal(k, n))
            assert holds and eq


class TestSerialization:
    def test_json_roundtrip(self):
        c = chow.sc_general(mt.snake((2, 1, 2)))
        text = c.to_json()
        again = chow.ChowClass.from_json(text)
        assert again == c and again.to_json() == text

    def test_render(self):
        assert chow.sc_uniform(2, 5).render() == "3*s[2] + 1*s[1,1]"
