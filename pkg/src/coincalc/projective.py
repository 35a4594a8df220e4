"""The seven-case decision table for pairs S^m -> KP(n').

K is the real, complex or quaternionic field (d = 1, 2, 4); the descriptor
facts speak about the canonical lifted classes.  Exactly one of the seven
conditions holds for a consistent, fully determined descriptor; the engine
rejects contradictions naming the clashing rows and answers Unknown while
the discriminating facts are unknown.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .errors import DescriptorError
from .verdict import (
    Fact,
    InvariantBundle,
    Provenance,
    Truth,
    Verdict,
    truth_and,
    truth_not,
    no,
    unknown_fact,
    yes,
)


class ProjectiveField(enum.Enum):
    R = ("R", 1)
    C = ("C", 2)
    H = ("H", 4)

    def __init__(self, letter: str, d: int):
        self.letter = letter
        self.d = d

    @classmethod
    def from_str(cls, text: str) -> "ProjectiveField":
        for member in cls:
            if member.letter == text:
                return member
        raise DescriptorError("field must be one of 'R', 'C', 'H'")


@dataclass(frozen=True)
class ProjectivePairDescriptor:
    field: ProjectiveField
    n_prime: int
    m: int
    fprime_homotopic: Fact = unknown_fact()        # f1' ~ f2', base point free
    lift2_in_ker_del: Fact = unknown_fact()        # lift killed by boundary
    lift2_in_ker_Edel: Fact = unknown_fact()       # killed after suspension
    lift2_antipodal_selfhomotopic: Fact = unknown_fact()  # R only
    lifts_differ_by_suspension: Fact = unknown_fact()     # R only
    lifts_equal: Fact = unknown_fact()                    # C/H only

    def __post_init__(self):
        if self.n_prime < 2:
            raise DescriptorError(
                "n' >= 2 required; projective lines are spheres, use the "
                "sphere engine"
            )
        if self.m < 2:
            raise DescriptorError("m >= 2 required")

    @property
    def n(self) -> int:
        """Real dimension of the target."""
        return self.n_prime * self.field.d


def _sync(name_a, a: Fact, name_b, b: Fact, *, rule: Provenance):
    """Two facts that must agree: derive the unknown one, reject conflicts."""
    if a.is_unknown() and not b.is_unknown():
        return Fact(b.truth, rule), b
    if b.is_unknown() and not a.is_unknown():
        return a, Fact(a.truth, rule)
    if not a.is_unknown() and a.truth is not b.truth:
        raise DescriptorError(f"{name_a} and {name_b} must agree")
    return a, b


def resolve(d: ProjectivePairDescriptor) -> ProjectivePairDescriptor:
    rule = Provenance.rule("Thm4.5")
    kd, ked = d.lift2_in_ker_del, d.lift2_in_ker_Edel
    if kd.is_yes():
        if ked.is_no():
            raise DescriptorError(
                "lift2_in_ker_del = yes forces lift2_in_ker_Edel = yes "
                "(the kernel of the boundary sits inside the kernel of "
                "its suspension)"
            )
        if ked.is_unknown():
            ked = yes(rule)
    if ked.is_no() and kd.is_unknown():
        kd = no(rule)

    anti = d.lift2_antipodal_selfhomotopic
    lifts_equal = d.lifts_equal
    if d.field is ProjectiveField.R:
        # antipodal self-homotopy of the lift is detected by the suspended
        # boundary, so the two facts carry the same information
        anti, ked = _sync("lift2_antipodal_selfhomotopic", anti,
                          "lift2_in_ker_Edel", ked, rule=rule)
        if kd.is_unknown() and ked.is_no():
            kd = no(rule)
    else:
        # downstairs homotopy is equivalent to equality of the lifts
        lifts_equal, fprime = _sync(
            "lifts_equal", lifts_equal,
            "fprime_homotopic", d.fprime_homotopic, rule=rule)
        return replace(d, lift2_in_ker_del=kd, lift2_in_ker_Edel=ked,
                       lifts_equal=lifts_equal, fprime_homotopic=fprime)
    return replace(d, lift2_in_ker_del=kd, lift2_in_ker_Edel=ked,
                   lift2_antipodal_selfhomotopic=anti)


def _row_conditions(d: ProjectivePairDescriptor) -> dict[int, Truth]:
    f = d.fprime_homotopic.truth
    kd = d.lift2_in_ker_del.truth
    ked = d.lift2_in_ker_Edel.truth
    conds = {
        1: truth_and(f, kd),
        2: truth_and(truth_and(f, ked), truth_not(kd)),
    }
    if d.field is ProjectiveField.R:
        anti = d.lift2_antipodal_selfhomotopic.truth
        susp = d.lifts_differ_by_suspension.truth
        conds[3] = truth_and(f, truth_not(anti))
        conds[4] = truth_and(truth_not(f), susp)
        conds[5] = truth_and(truth_not(f), truth_not(susp))
    else:
        eq = d.lifts_equal.truth
        conds[6] = truth_and(eq, truth_not(ked))
        conds[7] = truth_not(eq)
    return conds


def projective_classify(d: ProjectivePairDescriptor):
    """The unique matching row 1..7, or Special.UNKNOWN while the
    discriminating facts are unknown."""
    from .verdict import UNKNOWN

    d = resolve(d)
    conds = _row_conditions(d)
    matches = [row for row, t in conds.items() if t is Truth.YES]
    if len(matches) > 1:
        raise DescriptorError(
            "contradictory facts: descriptor claims rows "
            + " and ".join(str(r) for r in matches)
        )
    if len(matches) == 1:
        return matches[0]
    if any(t is Truth.UNKNOWN for t in conds.values()):
        return UNKNOWN
    raise DescriptorError(
        "contradictory facts: no row of the seven-case table matches"
    )


# (N#, MCC, MC) per row; None marks an infinite MC
_ROW_TRIPLES = {
    1: (0, 0, 0),
    2: (0, 1, 1),
    3: (1, 1, 1),
    4: (2, 2, 2),
    5: (2, 2, None),
    6: (1, 1, 1),
    7: (1, 1, None),
}


def projective_invariants(d: ProjectivePairDescriptor) -> InvariantBundle:
    row = projective_classify(d)
    reid_count = 2 if d.field is ProjectiveField.R else 1
    reid = Verdict.finite(reid_count, ("Reid3.5",))
    pending = Verdict.unknown(("Prop7.2-valueset",))

    if not isinstance(row, int):
        u = Verdict.unknown(("Thm4.5",))
        return InvariantBundle(mc=u, mcc=u, n_sharp=u, n_tilde=pending,
                               n=pending, n_z=pending, reidemeister=reid)

    n_sharp_v, mcc_v, mc_v = _ROW_TRIPLES[row]
    trace = ("Thm4.5", f"Table4.7-row{row}")
    mc = (Verdict.infinite(trace) if mc_v is None
          else Verdict.finite(mc_v, trace))
    return InvariantBundle(
        mc=mc,
        mcc=Verdict.finite(mcc_v, trace),
        n_sharp=Verdict.finite(n_sharp_v, trace),
        n_tilde=pending, n=pending, n_z=pending,
        reidemeister=reid,
    )


def del_vanishes_by_dimension(field: ProjectiveField, n_prime: int) -> Fact:
    """Vanishing criterion for the boundary homomorphism of KP(n'): Yes
    exactly when n = n'd is not divisible by 2d, i.e. when n' is odd.
    The criterion never proves nonvanishing, so the alternative is Unknown."""
    if n_prime < 1:
        raise DescriptorError("n' must be >= 1")
    rule = Provenance.rule("Prop1.14")
    if (n_prime * field.d) % (2 * field.d):
        return yes(rule)
    return unknown_fact(rule)
