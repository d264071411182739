import math
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from matroid_chow import tableaux as tb
from matroid_chow.shapes import descent_set, partitions_in_box, partitions_of

from conftest import compositions


def brute_descent_counts(eta, key):
    """Independent oracle: filter full enumeration by descent statistic."""
    counts = 0
    for t in tb.enumerate_syt(eta):
        if key(tb.descent_set_of(t).as_set()):
            counts += 1
    return counts


class TestEnumeration:
    @pytest.mark.parametrize(
        "eta, count", [((2, 2), 2), ((6,), 1), ((3, 1), 3), ((1, 1, 1), 1)]
    )
    def test_counts(self, eta, count):
        tableaux = list(tb.enumerate_syt(eta))
        assert len(tableaux) == count
        assert len({str(t) for t in tableaux}) == count

    def test_matches_hook_formula_through_size_7(self):
        for size in range(8):
            for eta in partitions_of(size):
                assert len(list(tb.enumerate_syt(eta))) == tb.hook_length_count(eta)

    def test_validation(self):
        with pytest.raises(ValueError):
            tb.StandardTableau(((2, 1),))
        with pytest.raises(ValueError):
            tb.StandardTableau(((1, 3), (2, 2)))


class TestDescent:
    def test_examples(self):
        assert tuple(tb.descent_set_of(tb.StandardTableau(((1, 2, 3), (4,))))) == (3,)
        assert tuple(tb.descent_set_of(tb.StandardTableau(((1, 3), (2, 4))))) == (1, 3)
        assert tuple(tb.descent_set_of(tb.StandardTableau(((1, 2, 3, 4),)))) == ()


class TestCountWithDescents:
    def test_paper_coefficient(self):
        assert tb.count_syt_with_descents((4, 2, 1, 1), {2, 3, 5}) == 2
        assert tb.count_syt_with_descents((3, 3), {2, 3, 5}) == 0

    def test_hooks_have_unique_tableau(self):
        # any composition's descent set fills a matching hook uniquely
        for b in [(4, 1, 1), (2, 2, 2), (1, 3, 1), (3, 2)]:
            k, n = len(b), sum(b) + 1
            hook = (n - k,) + (1,) * (k - 1)
            assert tb.count_syt_with_descents(hook, descent_set(b).as_set()) == 1

    def test_against_enumeration(self):
        for eta in [(3, 2), (2, 2, 1), (3, 1, 1), (4, 2)]:
            n = sum(eta)
            for d in _all_subsets(range(1, n)):
                want = brute_descent_counts(eta, lambda s: s == frozenset(d))
                assert tb.count_syt_with_descents(eta, d) == want

    def test_total_over_descent_sets_is_tableau_count(self):
        for eta in [(3, 2, 1), (4, 2), (2, 2, 2), (5, 1)]:
            n = sum(eta)
            total = sum(
                tb.count_syt_with_descents(eta, d) for d in _all_subsets(range(1, n))
            )
            assert total == tb.hook_length_count(eta)


class TestCountWithNumDescents:
    @pytest.mark.parametrize(
        "eta, d, count", [((3, 1), 1, 3), ((2, 2), 1, 1), ((5,), 0, 1)]
    )
    def test_examples(self, eta, d, count):
        assert tb.count_syt_with_num_descents(eta, d) == count

    def test_against_enumeration(self):
        for eta in [(3, 2), (2, 2, 1), (4, 1, 1)]:
            for d in range(sum(eta)):
                want = brute_descent_counts(eta, lambda s: len(s) == d)
                assert tb.count_syt_with_num_descents(eta, d) == want


class TestTransversal:
    def test_degenerate_intervals_reduce_to_exact_descents(self):
        for eta in [(3, 2), (4, 2, 1)]:
            for d in [(1, 3), (2, 4), (1, 2)]:
                if max(d) >= sum(eta):
                    continue
                assert tb.count_syt_transversal(
                    eta, [(x, x) for x in d]
                ) == tb.count_syt_with_descents(eta, set(d))

    def test_examples(self):
        assert tb.count_syt_transversal((3, 1), [(1, 3)]) == 3
        assert tb.count_syt_transversal((2, 2), [(1, 3)]) == 1

    def test_against_enumeration(self):
        intervals = [(1, 2), (3, 5)]

        def is_transversal(s):
            xs = sorted(s)
            return len(xs) == 2 and 1 <= xs[0] <= 2 and 3 <= xs[1] <= 5

        for eta in [(4, 2), (3, 2, 1), (2, 2, 2)]:
            want = brute_descent_counts(eta, is_transversal)
            assert tb.count_syt_transversal(eta, intervals) == want

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            tb.count_syt_transversal((3, 1), [(2, 4), (1, 3)])


class TestKostka:
    def test_examples(self):
        assert tb.kostka((2, 1), (1, 1, 1)) == 2
        assert tb.kostka((3, 2), (3, 2)) == 1
        assert tb.kostka((2, 2, 2), (3, 3)) == 0

    def test_rejects_size_mismatch(self):
        with pytest.raises(ValueError):
            tb.kostka((2, 1), (1, 1))

    @settings(max_examples=40, deadline=None)
    @given(st.permutations([1, 2, 3]))
    def test_content_symmetry_small(self, perm):
        b = tuple(perm)
        for eta in partitions_of(6):
            assert tb.kostka(eta, b) == tb.kostka(eta, (1, 2, 3))

    def test_positive_iff_dominates_sorted_content(self):
        from matroid_chow.shapes import dominance_leq

        for b in [(2, 2, 1), (1, 3, 1), (2, 1, 1, 1)]:
            sorted_b = tuple(sorted(b, reverse=True))
            for eta in partitions_of(sum(b)):
                positive = tb.kostka(eta, b) > 0
                assert positive == dominance_leq(sorted_b, eta)


class TestHookLength:
    def test_examples(self):
        assert tb.hook_length_count((2, 2)) == 2
        assert tb.hook_length_count((1,)) == 1
        assert tb.hook_length_count(()) == 1

    def test_hook_closed_form(self):
        for a in range(1, 6):
            for m in range(0, 4):
                eta = (a,) + (1,) * m
                assert tb.hook_length_count(eta) == math.comb(a - 1 + m, m)


class TestPermutationDescents:
    def test_examples(self):
        assert tb.count_permutations_with_descents(set(), 6) == 1
        assert tb.count_permutations_with_descents({1}, 2) == 1

    def test_total_is_factorial(self):
        for m in range(1, 8):
            total = sum(
                tb.count_permutations_with_descents(d, m)
                for d in _all_subsets(range(1, m))
            )
            assert total == math.factorial(m)

    def test_rsk_counting_identity(self):
        # permutations with a given descent set, refined by insertion shape
        for m in range(1, 7):
            for d in _all_subsets(range(1, m)):
                direct = tb.count_permutations_with_descents(d, m)
                via_shapes = sum(
                    tb.hook_length_count(eta) * tb.count_syt_with_descents(eta, d)
                    for eta in partitions_of(m)
                )
                assert direct == via_shapes


class TestGesselViennot:
    def test_examples(self):
        assert tb.gessel_viennot(set(), 5) == 1
        assert tb.gessel_viennot({1}, 3) == 1

    def test_matches_brute_force_through_s7(self):
        for n in range(2, 9):
            for d in _all_subsets(range(1, n - 1)):
                assert tb.gessel_viennot(d, n) == tb.count_permutations_with_descents(
                    d, n - 1
                ), (n, d)

    def test_named_example(self):
        assert tb.gessel_viennot({2, 3, 5}, 9) == tb.count_permutations_with_descents(
            {2, 3, 5}, 8
        )


def _all_subsets(rng):
    items = list(rng)
    out = [frozenset()]
    for x in items:
        out += [s | {x} for s in out]
    return out
