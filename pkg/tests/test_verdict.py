import itertools

import pytest

from coincalc import (
    DescriptorError,
    Fact,
    INFINITE,
    InvariantBundle,
    Provenance,
    Truth,
    UNKNOWN,
    Verdict,
    combine_and,
    user_fact,
    validate_bundle,
)
from coincalc.verdict import truth_and


def test_combine_and_examples():
    y, n, u = user_fact("yes"), user_fact("no"), user_fact("unknown")
    assert combine_and([y, y]).truth is Truth.YES
    assert combine_and([y, u]).truth is Truth.UNKNOWN
    assert combine_and([n, u]).truth is Truth.NO
    assert combine_and([y]).provenance == Provenance.rule("kleene-and")


def test_combine_and_rejects_empty():
    with pytest.raises(DescriptorError):
        combine_and([])


def test_kleene_conjunction_algebra():
    values = (Truth.YES, Truth.NO, Truth.UNKNOWN)
    for a, b in itertools.product(values, repeat=2):
        assert truth_and(a, b) is truth_and(b, a)
        assert truth_and(a, a) is a
    for a, b, c in itertools.product(values, repeat=3):
        assert truth_and(truth_and(a, b), c) is truth_and(a, truth_and(b, c))


def test_fact_provenance_required():
    with pytest.raises(DescriptorError):
        Provenance("guess")
    with pytest.raises(KeyError):
        Provenance.rule("NotARule")
    assert Fact(Truth.YES, Provenance.table("stem:3")).is_yes()


def test_verdict_invariants():
    with pytest.raises(DescriptorError):
        Verdict(3)  # known value needs a trace
    with pytest.raises(DescriptorError):
        Verdict(INFINITE)
    with pytest.raises(KeyError):
        Verdict(3, ("NotARule",))
    with pytest.raises(DescriptorError):
        Verdict(-1, ("Thm1.8",))
    assert Verdict.unknown().value is UNKNOWN
    assert Verdict.finite(3, ("Thm1.8",)).known()


def _bundle(**kwargs):
    fields = {}
    for name, value in kwargs.items():
        if value is None:
            fields[name] = Verdict.unknown()
        elif value is INFINITE:
            fields[name] = Verdict.infinite(("Thm1.8",))
        else:
            fields[name] = Verdict.finite(value, ("Thm1.8",))
    return InvariantBundle(**fields)


def test_validate_bundle_accepts_partial_chain():
    b = _bundle(mcc=2, n_sharp=1)
    assert validate_bundle(b, target_dim=3) == []


def test_validate_bundle_chain_violation():
    b = _bundle(n=1, n_tilde=0)
    assert validate_bundle(b, target_dim=3) == ["Thm3.6(iii): Ñ ≥ N"]


def test_validate_bundle_reidemeister_violation():
    b = _bundle(mcc=5, reidemeister=2)
    violations = validate_bundle(b, target_dim=3)
    assert violations == ["Thm3.6(iv): MCC ≤ Reidemeister"]
    # the upper bound is not claimed for surface targets
    assert validate_bundle(b, target_dim=2) == []


def test_validate_bundle_nonadjacent_pairs():
    # MC known, MCC unknown, N# known: the chain still constrains MC >= N#
    b = _bundle(mc=1, n_sharp=2)
    assert validate_bundle(b, target_dim=3) == ["Thm3.6(iii): MC ≥ N#"]


def test_validate_bundle_infinite_is_top():
    b = _bundle(mc=INFINITE, mcc=4, reidemeister=INFINITE)
    assert validate_bundle(b, target_dim=3) == []
    b = _bundle(mcc=INFINITE, reidemeister=7)
    assert validate_bundle(b, target_dim=3) \
        == ["Thm3.6(iv): MCC ≤ Reidemeister"]
