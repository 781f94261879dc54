import pytest

from qdissect import oracle
from qdissect.congruence import (CongruenceClaim, FOUR_DISSECTION_TABLE,
                                 check_claim, covers, published_claims,
                                 published_suite, scan)
from qdissect.report import VerificationReport, reports_to_json


def test_claim_label_and_validation():
    c = CongruenceClaim(5, 1, 3, 9, 4)
    assert c.label == "S_{5,1}(9n+3) = 0 mod 4"
    assert c.source == "scanned"
    with pytest.raises(ValueError):
        CongruenceClaim(5, 3, 0, 9, 4)
    with pytest.raises(ValueError):
        CongruenceClaim(5, 1, 9, 9, 4)
    with pytest.raises(ValueError):
        CongruenceClaim(5, 1, 0, 9, 4, source="folklore")


def test_check_claim_verified():
    rep = check_claim(CongruenceClaim(5, 1, 3, 9, 4, "mod9-K2-i1"), 50)
    assert rep.verified
    assert rep.to_dict()["bound"] == "verified up to n=50"


@pytest.mark.parametrize("a", [3, 6])
def test_singular_progressions_mod3(a):
    assert check_claim(CongruenceClaim(6, 3, a, 9, 3), 200).verified
    assert check_claim(CongruenceClaim(3, 1, a, 9, 3, "singular-3-1",
                                       "Qbar"), 200).verified


def test_trivial_modulus():
    assert check_claim(CongruenceClaim(7, 2, 0, 1, 1), 30).verified


def test_failing_claim_counterexample_matches_oracle():
    # S_{5,1}(1) = 1 is not 0 mod 4
    rep = check_claim(CongruenceClaim(5, 1, 1, 4, 4), 20)
    assert not rep.verified
    c = rep.counterexample
    assert c.exponent <= oracle.DESK_SCALE
    assert oracle.s_count(5, 1, c.exponent) == c.coefficient
    assert c.coefficient % 4


def test_failed_report_requires_evidence():
    with pytest.raises(ValueError):
        VerificationReport("x", {}, 10, "failed")


@pytest.mark.parametrize("n_max", [5, 20, 60])
def test_check_claim_monotone(n_max):
    c = CongruenceClaim(8, 2, 5, 9, 4)
    assert check_claim(c, 60).verified
    assert check_claim(c, n_max).verified


def test_published_claims_cover_cases():
    claims = published_claims(20)
    sources = {c.source for c in claims}
    assert sources == {"mod9-K2-i1", "mod9-K2-i2", "mod3-K0-i0",
                       "mod9-K2-i0", "mod4", "singular-3-1"}
    assert CongruenceClaim(8, 2, 5, 9, 4, "mod9-K2-i2") in claims
    assert CongruenceClaim(8, 2, 8, 9, 4, "mod9-K2-i2") in claims
    assert published_claims(1) == []
    assert published_suite(1, 50) == []


def test_four_table_residues():
    assert FOUR_DISSECTION_TABLE[(0, 0)] == (2, 3)


def test_suite_json_deterministic():
    a = reports_to_json(published_suite(8, 30))
    b = reports_to_json(published_suite(8, 30))
    assert a == b


def test_scan_finds_nine_progressions():
    found = scan(range(2, 13), None, 9, 4, 100)
    for claim in published_claims(12):
        if claim.d in (3, 9) and claim.family == "S":
            assert covers(found, claim), claim.label
    assert all(f.source == "scanned" for f in found)


def test_scan_finds_four_progressions_for_even_K():
    found = scan(range(2, 21), None, 4, 4, 100)
    for claim in published_claims(20):
        if claim.d == 4 and claim.K % 2 == 0:
            assert covers(found, claim), claim.label


def test_odd_K_has_no_mod4_progression_at_base_4():
    odd = [K for K in range(3, 21, 2)]
    assert scan(odd, None, 4, 4, 100) == []


@pytest.mark.parametrize("K,i,n,value", [(11, 4, 1, 55), (15, 4, 2, 279)])
def test_odd_K_counterexamples(K, i, n, value):
    rep = check_claim(CongruenceClaim(K, i, 3, 4, 4, "mod4"), 50)
    assert not rep.verified
    assert (rep.counterexample.n, rep.counterexample.coefficient) == (n, value)
    assert oracle.s_count(K, i, 4 * n + 3) == value


@pytest.mark.parametrize("K,a", [(4, 3), (12, 3), (20, 3), (10, 2), (18, 2)])
def test_unlisted_progressions_at_half_K(K, a):
    # seen by the scanner only; not among the published families
    assert check_claim(CongruenceClaim(K, K // 2, a, 4, 4), 200).verified
    assert CongruenceClaim(K, K // 2, a, 4, 4, "mod4") not in published_claims(20)


def test_scan_degenerate_bound():
    # S_{5,1} starts 1, 1, 2, 4: only the residue 3 has a zero first term
    found = scan([5], [1], 4, 4, 0)
    assert [c.a for c in found] == [3]


def test_covers_logic():
    found = [CongruenceClaim(6, 1, a, 9, 4) for a in (2, 5, 8)]
    assert covers(found, CongruenceClaim(6, 1, 2, 3, 4))
    assert not covers(found[:2], CongruenceClaim(6, 1, 2, 3, 4))
    assert not covers(found, CongruenceClaim(6, 1, 2, 3, 8))
