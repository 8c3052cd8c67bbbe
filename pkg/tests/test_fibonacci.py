from concurrent.futures import ThreadPoolExecutor

import pytest

from fibseries.fibonacci import fib, fib_upto, locate, sum_fib_prefix


@pytest.mark.parametrize("n, expected", [(2, 1), (3, 2), (4, 3), (5, 5), (6, 8), (10, 55)])
def test_fib_values(n, expected):
    assert fib(n) == expected


@pytest.mark.parametrize("bad", [1, 0, -4])
def test_fib_rejects_small_index(bad):
    with pytest.raises(ValueError):
        fib(bad)


def test_fib_rejects_non_int():
    with pytest.raises(TypeError):
        fib(3.0)


def test_fib_beyond_64_bits():
    assert fib(93) == 12200160415121876738
    assert fib(94) > 2**64


def test_fib_strictly_increasing():
    vals = [fib(n) for n in range(2, 200)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("n, expected", [(2, 1), (4, 6), (6, 19)])
def test_sum_fib_prefix_examples(n, expected):
    assert sum_fib_prefix(n) == expected


def test_sum_fib_prefix_matches_direct_sum():
    for n in range(2, 91):
        assert sum_fib_prefix(n) == sum(fib(k) for k in range(2, n + 1))


def test_sum_fib_prefix_rejects_small_index():
    with pytest.raises(ValueError):
        sum_fib_prefix(1)


@pytest.mark.parametrize("m, expected", [(1, 2), (2, 3), (4, 4), (12, 6), (13, 7)])
def test_locate_examples(m, expected):
    assert locate(m) == expected


def test_locate_rejects_zero():
    with pytest.raises(ValueError):
        locate(0)


def test_locate_brackets_every_m():
    for m in range(1, 10**5 + 1):
        n = locate(m)
        assert fib(n) <= m < fib(n + 1)


def test_locate_at_boundaries_of_huge_values():
    for n in (100, 500, 1000):
        assert locate(fib(n)) == n
        assert locate(fib(n) - 1) == n - 1
        assert locate(fib(n + 1) - 1) == n


def test_fib_upto():
    assert fib_upto(0) == []
    assert fib_upto(12) == [1, 2, 3, 5, 8]


def test_concurrent_growth_is_consistent():
    indices = list(range(3000, 3400))
    with ThreadPoolExecutor(max_workers=8) as pool:
        got = list(pool.map(fib, indices))
    a, b = 1, 2  # F_2, F_3
    expected = {2: 1, 3: 2}
    for k in range(4, 3400):
        a, b = b, a + b
        expected[k] = b
    assert got == [expected[n] for n in indices]
