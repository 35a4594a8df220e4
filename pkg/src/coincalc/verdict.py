"""Three-valued facts, extended-natural verdicts, and invariant bundles.

Every family engine answers through these types: a Fact is a Yes/No/Unknown
proposition with provenance, a Verdict is a finite/infinite/unknown count
with a justification trace of registered rule identifiers, and an
InvariantBundle collects the seven invariants of one pair of maps.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DescriptorError
from .rules import REGISTRY


class Truth(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @classmethod
    def from_str(cls, text: str) -> "Truth":
        try:
            return cls(text)
        except ValueError:
            raise DescriptorError(
                f"truth value must be 'yes', 'no' or 'unknown', got {text!r}"
            ) from None


def truth_and(a: Truth, b: Truth) -> Truth:
    # strong Kleene: No dominates, Unknown absorbs Yes
    if a is Truth.NO or b is Truth.NO:
        return Truth.NO
    if a is Truth.UNKNOWN or b is Truth.UNKNOWN:
        return Truth.UNKNOWN
    return Truth.YES


def truth_not(a: Truth) -> Truth:
    if a is Truth.YES:
        return Truth.NO
    if a is Truth.NO:
        return Truth.YES
    return Truth.UNKNOWN


@dataclass(frozen=True)
class Provenance:
    """Where a Fact came from: the user, a fact-base entry, or a rule."""

    kind: str  # "user" | "table" | "rule"
    ref: str = ""

    def __post_init__(self):
        if self.kind not in ("user", "table", "rule"):
            raise DescriptorError(f"invalid provenance kind {self.kind!r}")
        if self.kind == "rule" and self.ref not in REGISTRY:
            raise KeyError(f"unregistered rule identifier: {self.ref!r}")
        if self.kind == "table" and not self.ref:
            raise DescriptorError("table provenance requires an entry id")

    @classmethod
    def user(cls) -> "Provenance":
        return cls("user")

    @classmethod
    def table(cls, entry_id: str) -> "Provenance":
        return cls("table", entry_id)

    @classmethod
    def rule(cls, rule_id: str) -> "Provenance":
        return cls("rule", rule_id)


@dataclass(frozen=True)
class Fact:
    truth: Truth
    provenance: Provenance

    def is_yes(self) -> bool:
        return self.truth is Truth.YES

    def is_no(self) -> bool:
        return self.truth is Truth.NO

    def is_unknown(self) -> bool:
        return self.truth is Truth.UNKNOWN


def yes(provenance: Provenance) -> Fact:
    return Fact(Truth.YES, provenance)


def no(provenance: Provenance) -> Fact:
    return Fact(Truth.NO, provenance)


def unknown_fact(provenance: Provenance | None = None) -> Fact:
    return Fact(Truth.UNKNOWN, provenance or Provenance.user())


def user_fact(text: str) -> Fact:
    return Fact(Truth.from_str(text), Provenance.user())


def combine_and(facts: Sequence[Fact]) -> Fact:
    """Strong Kleene conjunction of a nonempty list of facts."""
    if not facts:
        raise DescriptorError("combine_and requires at least one fact")
    truth = Truth.YES
    for f in facts:
        truth = truth_and(truth, f.truth)
    return Fact(truth, Provenance.rule("kleene-and"))


class Special(enum.Enum):
    INFINITE = "infinite"
    UNKNOWN = "unknown"


INFINITE = Special.INFINITE
UNKNOWN = Special.UNKNOWN

# an extended natural is an int >= 0, INFINITE, or UNKNOWN
ExtNat = int | Special


def ext_known(value: ExtNat) -> bool:
    return value is not UNKNOWN


def ext_le(a: ExtNat, b: ExtNat) -> bool:
    """a <= b for known extended naturals (INFINITE is the top element)."""
    if a is UNKNOWN or b is UNKNOWN:
        raise ValueError("cannot compare unknown values")
    if b is INFINITE:
        return True
    if a is INFINITE:
        return False
    return a <= b


@dataclass(frozen=True)
class Verdict:
    """An extended-natural answer plus the rule identifiers justifying it.

    Finite and Infinite verdicts must carry a nonempty trace; every trace
    entry must be a registered rule identifier.
    """

    value: ExtNat
    trace: tuple[str, ...] = ()

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(
            self.value, (int, Special)
        ):
            raise DescriptorError(f"invalid verdict value {self.value!r}")
        if isinstance(self.value, int) and self.value < 0:
            raise DescriptorError("verdict values are nonnegative")
        if self.value is not UNKNOWN and not self.trace:
            raise DescriptorError(
                "a finite or infinite verdict needs a nonempty trace"
            )
        for rule_id in self.trace:
            if rule_id not in REGISTRY:
                raise KeyError(f"unregistered rule identifier: {rule_id!r}")

    @classmethod
    def finite(cls, value: int, trace: Iterable[str]) -> "Verdict":
        return cls(value, tuple(trace))

    @classmethod
    def infinite(cls, trace: Iterable[str]) -> "Verdict":
        return cls(INFINITE, tuple(trace))

    @classmethod
    def unknown(cls, trace: Iterable[str] = ()) -> "Verdict":
        return cls(UNKNOWN, tuple(trace))

    def known(self) -> bool:
        return self.value is not UNKNOWN


_UNKNOWN_VERDICT = Verdict.unknown()


@dataclass(frozen=True)
class InvariantBundle:
    """The seven invariants of one pair of maps, each as a Verdict."""

    mc: Verdict = _UNKNOWN_VERDICT
    mcc: Verdict = _UNKNOWN_VERDICT
    n_sharp: Verdict = _UNKNOWN_VERDICT
    n_tilde: Verdict = _UNKNOWN_VERDICT
    n: Verdict = _UNKNOWN_VERDICT
    n_z: Verdict = _UNKNOWN_VERDICT
    reidemeister: Verdict = _UNKNOWN_VERDICT


# bundle fields in decreasing chain order, with display names
CHAIN_FIELDS = (
    ("mc", "MC"),
    ("mcc", "MCC"),
    ("n_sharp", "N#"),
    ("n_tilde", "Ñ"),
    ("n", "N"),
    ("n_z", "N^Z"),
)

ALL_FIELDS = CHAIN_FIELDS + (("reidemeister", "Reidemeister"),)


def validate_bundle(bundle: InvariantBundle, target_dim: int) -> list[str]:
    """Check the inequality chain MC >= MCC >= N# >= Ntilde >= N >= N^Z and,
    for target dimension != 2, MCC <= Reidemeister.  Unknown values are
    vacuously compatible.  Returns one message per violated pair."""
    violations = []
    for i in range(len(CHAIN_FIELDS)):
        hi_field, hi_name = CHAIN_FIELDS[i]
        hi = getattr(bundle, hi_field)
        if not hi.known():
            continue
        for j in range(i + 1, len(CHAIN_FIELDS)):
            lo_field, lo_name = CHAIN_FIELDS[j]
            lo = getattr(bundle, lo_field)
            if not lo.known():
                continue
            if not ext_le(lo.value, hi.value):
                violations.append(f"Thm3.6(iii): {hi_name} ≥ {lo_name}")
    if target_dim != 2:
        mcc, reid = bundle.mcc, bundle.reidemeister
        if mcc.known() and reid.known() and not ext_le(mcc.value, reid.value):
            violations.append("Thm3.6(iv): MCC ≤ Reidemeister")
    return violations
