import itertools
import math
import random

import pytest

import descents.cosets
from descents import (
    Composition,
    GeneratorSubset,
    OrderedPresentation,
    Permutation,
    all_generator_subsets,
    contingency_tables,
    enumerate_double_set,
    enumerate_left_reps,
    graph_of_subset,
    intersect,
    intersection_table,
    is_left_rep,
    ordered_presentation,
    predicted_presentation,
    subset_to_composition,
    verify_subset_pair,
)

from _oracles import filter_left_reps, young_subgroup


def test_is_left_rep_matches_filter():
    for n in range(1, 6):
        group = list(itertools.permutations(range(1, n + 1)))
        for k in all_generator_subsets(n):
            want = set(filter_left_reps(n, k.members))
            got = {p for p in group
                   if is_left_rep(Permutation(p, check=False), k)}
            assert got == want


def test_enumerate_left_reps_matches_filter():
    for n in range(1, 7):
        for k in all_generator_subsets(n):
            reps = [x.images for x in enumerate_left_reps(k)]
            assert reps == filter_left_reps(n, k.members)


def test_enumerate_left_reps_is_sorted():
    # the filter oracle emits lexicographic order by construction; also
    # check it explicitly for one mid-sized case
    k = GeneratorSubset(7, {1, 2, 5})
    reps = [x.images for x in enumerate_left_reps(k)]
    assert reps == sorted(reps)


def test_left_rep_count_is_multinomial():
    for n in range(1, 7):
        for k in all_generator_subsets(n):
            parts = subset_to_composition(k).parts
            want = math.factorial(n)
            for p in parts:
                want //= math.factorial(p)
            assert sum(1 for _ in enumerate_left_reps(k)) == want


def test_enumerate_left_reps_bound():
    with pytest.raises(ValueError):
        next(enumerate_left_reps(GeneratorSubset(13, {1})))
    it = enumerate_left_reps(GeneratorSubset(13, set(range(1, 13))),
                             max_degree=13)
    assert next(it) == Permutation.identity(13)


def test_double_set_matches_filter():
    for n in range(1, 6):
        for j in all_generator_subsets(n):
            jm = j.members
            for k in all_generator_subsets(n):
                want = []
                for p in filter_left_reps(n, k.members):
                    x = Permutation(p, check=False)
                    if all(x.inverse().images[h - 1] < x.inverse().images[h]
                           for h in jm):
                        want.append(p)
                got = [x.images for x in enumerate_double_set(j, k)]
                assert got == want


def test_double_set_degree_mismatch():
    with pytest.raises(ValueError):
        list(enumerate_double_set(GeneratorSubset(3), GeneratorSubset(4)))


def test_intersection_table_margins():
    for n in range(2, 6):
        for j in all_generator_subsets(n):
            for k in all_generator_subsets(n):
                for x in enumerate_double_set(j, k):
                    z = intersection_table(x, j, k)
                    assert z.row_margins == subset_to_composition(k)
                    assert z.col_margins == subset_to_composition(j)


def test_intersection_table_small_example():
    # n=3, J={2} (components {1},{2,3}), K={1} (components {1,2},{3});
    # worked by hand: the double set is {123, 231} and the two tables are
    # the two matrices with row sums 2,1 and column sums 1,2
    j = GeneratorSubset(3, {2})
    k = GeneratorSubset(3, {1})
    tables = {x.images: intersection_table(x, j, k).entries
              for x in enumerate_double_set(j, k)}
    assert tables == {
        (1, 2, 3): ((1, 1), (0, 1)),
        (2, 3, 1): ((0, 2), (1, 0)),
    }


def test_intersection_table_bijective_onto_margin_matrices():
    for n in range(1, 7):
        for j in all_generator_subsets(n):
            kappa = subset_to_composition(j)
            for k in all_generator_subsets(n):
                nu = subset_to_composition(k)
                image = [intersection_table(x, j, k)
                         for x in enumerate_double_set(j, k)]
                assert len(set(image)) == len(image), "table repeated"
                assert set(image) == set(contingency_tables(nu, kappa))


def test_intersection_table_rejects_non_representative():
    j = GeneratorSubset(3, {2})
    k = GeneratorSubset(3, {1})
    with pytest.raises(ValueError):
        intersection_table(Permutation((3, 2, 1)), j, k)


def test_predicted_presentation_matches_graph_components():
    rng = random.Random(19)
    for n in range(2, 7):
        subsets = all_generator_subsets(n)
        for _ in range(12):
            j = rng.choice(subsets)
            k = rng.choice(subsets)
            for x in enumerate_double_set(j, k):
                predicted = predicted_presentation(x, j, k)
                computed = ordered_presentation(
                    intersect(graph_of_subset(j).image_under(x.inverse()),
                              graph_of_subset(k)))
                assert predicted == computed


def test_presentation_subgroup_matches_young_oracle():
    for n in range(1, 6):
        for k in all_generator_subsets(n):
            blocks = ordered_presentation(graph_of_subset(k)).blocks
            got = {p.images
                   for p in descents.cosets._presentation_subgroup(blocks)}
            assert got == set(young_subgroup(n, k.members))


def test_verify_subset_pair_passes_everywhere_small():
    for n in range(1, 5):
        for j in all_generator_subsets(n):
            for k in all_generator_subsets(n):
                report = verify_subset_pair(j, k)
                assert report.passed
                assert report.failure_count == 0
                assert "parabolic" in report.checks
                assert report.witnesses == sum(
                    1 for _ in enumerate_double_set(j, k))


def test_verify_pair_parabolic_auto_off_above_five():
    report = verify_subset_pair(GeneratorSubset(6, {1, 2}),
                                GeneratorSubset(6, {4}))
    assert report.passed
    assert report.checks == ("presentation", "reading-word")


def test_verify_pair_bound_and_override():
    with pytest.raises(ValueError):
        verify_subset_pair(GeneratorSubset(7), GeneratorSubset(7))
    report = verify_subset_pair(GeneratorSubset(7, set(range(1, 7))),
                                GeneratorSubset(7, set(range(1, 7))),
                                max_degree=7)
    assert report.passed
    assert report.witnesses == 1


def test_verify_pair_report_text_and_record():
    j = GeneratorSubset(3, {2})
    k = GeneratorSubset(3, {1})
    report = verify_subset_pair(j, k)
    assert report.to_text() == "PASS n=3 J={2} K={1} witnesses=2"
    rec = report.record()
    assert rec["passed"] is True
    assert rec["witnesses"] == 2
    assert rec["failures"] == []
    assert rec["checks"] == ["presentation", "reading-word", "parabolic"]


def test_verify_pair_collects_failures(monkeypatch):
    # force a wrong prediction to exercise the failure plumbing
    def bogus(x, j, k):
        return OrderedPresentation([list(range(1, j.n + 1))])

    monkeypatch.setattr(descents.cosets, "predicted_presentation", bogus)
    j = GeneratorSubset(4, {})
    k = GeneratorSubset(4, {})
    report = verify_subset_pair(j, k, max_failures=5)
    assert not report.passed
    assert report.witnesses == 24
    assert report.failure_count > 5
    assert len(report.failures) == 5
    assert report.failures[0].check in ("presentation", "reading-word")
    text = report.to_text()
    assert text.startswith("FAIL")
    assert "more" in text
