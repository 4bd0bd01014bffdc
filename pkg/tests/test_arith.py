from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cdgraphs.arith import ONE, FactoredInt, FactorError, is_prime, trial_factor

SMALL_PRIMES = [p for p in range(2, 2000) if all(p % d for d in range(2, int(p**0.5) + 1))]


def test_is_prime_small():
    assert [n for n in range(2000) if is_prime(n)] == SMALL_PRIMES


@pytest.mark.parametrize(
    "n", [97685839, 262657, 292561, 74912328481, 599479, 131071, 11119, 2143]
)
def test_construction_primes(n):
    assert is_prime(n)
    assert trial_factor(n) == {n: 1}


def test_composites():
    assert not is_prime(2**51 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert not is_prime(1)


def test_rejects_composite_factor():
    with pytest.raises(FactorError):
        FactoredInt(((4, 1),))
    with pytest.raises(FactorError):
        FactoredInt(((5, 1), (3, 1)))


def test_exact_division():
    a = FactoredInt.of({3: 2, 7: 1})
    assert (a / FactoredInt.of({3: 1})).value == 21
    with pytest.raises(FactorError):
        FactoredInt.of({3: 1}) / FactoredInt.of({7: 1})


def test_str():
    assert str(ONE) == "1"
    assert str(FactoredInt.of({3: 1, 23: 15})) == "3*23^15"


@given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=1, max_value=10**6))
def test_multiplication_matches_integers(a, b):
    fa, fb = FactoredInt.from_int(a), FactoredInt.from_int(b)
    assert (fa * fb).value == a * b
    assert fa.divides(fa * fb)
    assert (fa * fb) / fb == fa
