"""Both kernel backends must be interchangeable.

The pure-Python module always imports; the compiled one may be missing
(source install without a compiler), so parity tests skip gracefully in
that case while everything else runs against whichever backend is active.
"""

import itertools
import os
import random
import subprocess
import sys

import pytest

from descents import backend
from descents import _kernels_py as pure

compiled = pytest.importorskip(
    "descents._kernels", reason="compiled kernels unavailable")

from _oracles import brute_tables, naive_convolve


def random_items(n, count, rng, lo=-9, hi=9):
    group = list(itertools.permutations(range(1, n + 1)))
    return [(rng.choice(group), rng.randint(lo, hi)) for _ in range(count)]


def as_dict(items):
    acc = {}
    for images, c in items:
        acc[images] = acc.get(images, 0) + c
    return {k: v for k, v in acc.items() if v}


def test_active_backend_is_reported():
    assert backend.backend_name() in ("pure", "cython")
    assert pure.BACKEND == "pure"
    assert compiled.BACKEND == "cython"


@pytest.mark.parametrize("n", [1, 2, 4, 6])
def test_convolve_parity_dense(n):
    rng = random.Random(100 + n)
    a = random_items(n, 8, rng)
    b = random_items(n, 8, rng)
    got_pure = pure.convolve(n, a, b)
    got_comp = compiled.convolve(n, a, b)
    assert got_pure == got_comp
    assert got_pure == naive_convolve(as_dict(a).items(), as_dict(b).items())


def test_convolve_parity_sparse_path():
    # degree 10 exercises the dict-keyed path in the compiled kernel
    n, rng = 10, random.Random(77)
    base = list(range(1, n + 1))
    def pick():
        images = base[:]
        rng.shuffle(images)
        return tuple(images)
    a = [(pick(), rng.randint(-4, 4)) for _ in range(12)]
    b = [(pick(), rng.randint(-4, 4)) for _ in range(12)]
    got_pure = pure.convolve(n, a, b)
    got_comp = compiled.convolve(n, a, b)
    assert got_pure == got_comp
    assert got_pure == naive_convolve(as_dict(a).items(), as_dict(b).items())


@pytest.mark.parametrize("kernel", [pure, compiled])
def test_convolve_overflow(kernel):
    items = [((2, 1), 2**62)]
    with pytest.raises(OverflowError):
        kernel.convolve(2, items, items)


@pytest.mark.parametrize("kernel", [pure, compiled])
def test_convolve_coefficient_range_check(kernel):
    good = [((1, 2), 1)]
    bad = [((1, 2), 2**63)]
    with pytest.raises(OverflowError):
        kernel.convolve(2, bad, good)


def test_convolve_cancellation():
    a = [((2, 1, 3), 5), ((1, 2, 3), -1)]
    b = [((1, 2, 3), 1)]
    c = [((2, 1, 3), -5), ((1, 2, 3), 1)]
    for kernel in (pure, compiled):
        combined = kernel.convolve(3, a + c, b)
        assert combined == {}


TABLE_CASES = [
    ((1,), (1,)),
    ((2, 1), (1, 2)),
    ((2, 2), (1, 2, 1)),
    ((3, 1, 2), (2, 2, 2)),
    ((1, 1, 1, 1), (2, 2)),
    ((5,), (2, 3)),
    ((2, 1, 3), (1, 2, 2, 1)),
]


@pytest.mark.parametrize("nu,kappa", TABLE_CASES)
def test_enumerate_tables_parity_and_brute_force(nu, kappa):
    got_pure = pure.enumerate_tables(nu, kappa)
    got_comp = compiled.enumerate_tables(nu, kappa)
    assert got_pure == got_comp
    assert set(got_pure) == brute_tables(nu, kappa)
    assert len(set(got_pure)) == len(got_pure)


@pytest.mark.parametrize("nu,kappa", TABLE_CASES)
def test_enumerate_tables_order(nu, kappa):
    # emission order: flattened row-major entries, lexicographically
    # decreasing
    flat = [tuple(v for row in t for v in row)
            for t in pure.enumerate_tables(nu, kappa)]
    assert flat == sorted(flat, reverse=True)


@pytest.mark.parametrize("kernel", [pure, compiled])
def test_enumerate_tables_margin_validation(kernel):
    with pytest.raises(ValueError):
        kernel.enumerate_tables((2, 1), (4,))
    with pytest.raises(ValueError):
        kernel.enumerate_tables((0, 3), (3,))
    with pytest.raises(ValueError):
        kernel.enumerate_tables((), ())


@pytest.mark.parametrize("nu,kappa", TABLE_CASES)
def test_reading_word_counts_parity(nu, kappa):
    n = sum(nu)
    got_pure = pure.reading_word_counts(nu, kappa, n)
    got_comp = compiled.reading_word_counts(nu, kappa, n)
    assert got_pure == got_comp
    assert all(0 <= mask < (1 << (n - 1)) for mask in got_pure)
    assert sum(got_pure.values()) == len(pure.enumerate_tables(nu, kappa))


@pytest.mark.parametrize("nu,kappa", TABLE_CASES)
def test_sum_reading_multinomials_parity(nu, kappa):
    n = sum(nu)
    assert (pure.sum_reading_multinomials(nu, kappa, n)
            == compiled.sum_reading_multinomials(nu, kappa, n))


def test_forced_pure_backend_subprocess():
    env = dict(os.environ, DESCENTS_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from descents import backend; print(backend.backend_name())"],
        capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "pure"


def test_backend_dispatch_matches_active_module():
    name = backend.backend_name()
    module = compiled if name == "cython" else pure
    assert backend.convolve is module.convolve
    assert backend.enumerate_tables is module.enumerate_tables
    assert backend.reading_word_counts is module.reading_word_counts
    assert backend.sum_reading_multinomials is module.sum_reading_multinomials
