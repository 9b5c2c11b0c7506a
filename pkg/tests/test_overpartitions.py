import pytest
from pydantic import ValidationError

from qverify.overpartitions import (
    CongruenceClaim,
    overpartition_gf,
    overpartition_oracle,
    scan_congruence,
)
from qverify.series import reduce_mod


def test_oracle_small_values():

    assert overpartition_oracle(0) == [1]
    assert overpartition_oracle(10) == [1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232]


def test_oracle_rejects_negative_bound():

    with pytest.raises(ValueError):
        overpartition_oracle(-1)


def test_oracle_matches_generating_function():

    assert overpartition_oracle(2000) == overpartition_gf(2000).coefficients()


def test_overpartition_counts_are_even():

    counts = overpartition_oracle(2000)
    assert all(c % 2 == 0 for c in counts[1:])
    parity = reduce_mod(overpartition_gf(300), 2).coefficients()
    assert parity == [1] + [0] * 300


@pytest.mark.parametrize(
    "a, b, m, n_max",
    [
        (40, 35, 40, 100),
        (4, 3, 8, 500),
        (8, 7, 64, 500),
        (40, 35, 5, 50),
    ],
)
def test_known_congruences_hold(a, b, m, n_max):

    assert scan_congruence(CongruenceClaim(a=a, b=b, m=m, n_max=n_max)) == []


def test_false_claim_has_witnesses():

    claim = CongruenceClaim(a=2, b=0, m=3, n_max=20)
    violations = scan_congruence(claim)
    assert violations
    assert violations[0].n == 0
    assert violations[0].residue == 1
    assert [v.n for v in violations] == sorted(v.n for v in violations)
    counts = overpartition_oracle(40)
    assert all(counts[2 * v.n] % 3 == v.residue for v in violations)


def test_exact_scan_agrees_with_modular_scan():

    claim = CongruenceClaim(a=5, b=2, m=7, n_max=60)
    assert scan_congruence(claim, exact=True) == scan_congruence(claim)


@pytest.mark.parametrize(
    "fields",
    [
        dict(a=0, b=0, m=5, n_max=10),
        dict(a=4, b=4, m=5, n_max=10),
        dict(a=4, b=-1, m=5, n_max=10),
        dict(a=4, b=3, m=1, n_max=10),
        dict(a=4, b=3, m=5, n_max=-1),
    ],
)
def test_invalid_claims(fields):

    with pytest.raises(ValidationError):
        CongruenceClaim(**fields)
