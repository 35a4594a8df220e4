"""Decision engine for the Wecken condition and related criteria.

The Wecken condition for (m, N) asks that the boundary image in the
homotopy of the fiber sphere meets the suspension kernel trivially; it is
covering-invariant, so sphere and spherical-space-form targets are decided
from (m, n) alone.  Dispatch is first-match over the registered rules
R1..R7 with a startup assertion that overlapping rules agree; R8 is the
honest fallback Unknown.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConsistencyError, DescriptorError
from .tables import get_factbase
from .verdict import (
    INFINITE,
    Fact,
    Provenance,
    Truth,
    no,
    unknown_fact,
    yes,
)


class TargetFamily(enum.Enum):
    SPHERE = "Sphere"
    SPACE_FORM = "SphericalSpaceForm"
    GENERAL = "GeneralN"

    @classmethod
    def from_str(cls, text: str) -> "TargetFamily":
        for member in cls:
            if member.value == text:
                return member
        raise DescriptorError(
            "target_family must be 'Sphere', 'SphericalSpaceForm' or "
            "'GeneralN'"
        )


@dataclass(frozen=True)
class WeckenQuery:
    m: int
    n: int
    target_family: TargetFamily = TargetFamily.SPHERE
    # GeneralN only:
    noncompact_or_chi_zero: Fact = unknown_fact()
    pi1_size: int | object | None = None
    orientable: Fact = unknown_fact()
    closed: bool | None = None

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise DescriptorError("dimensions must be >= 1")


def _rules_fired(q: WeckenQuery) -> list[tuple[str, Truth]]:
    """All rules that fire on the query, as (rule id, verdict) pairs.

    Rules whose justification lives on the sphere (boundary computations
    through the tangent sphere bundle of S^n) apply to sphere-covered
    targets only; rules that merely need the suspension kernel to vanish
    apply to every target.
    """
    m, n = q.m, q.n
    covered = q.target_family is not TargetFamily.GENERAL
    fired: list[tuple[str, Truth]] = []

    if n % 2 == 1 or (q.target_family is TargetFamily.GENERAL
                      and q.noncompact_or_chi_zero.is_yes()):
        fired.append(("R1", Truth.YES))
    if m < 2 * n - 2:
        fired.append(("R2", Truth.YES))
    if m <= n + 4:
        if (m, n) != (10, 6):
            fired.append(("R3", Truth.YES))
        elif covered:
            entry = get_factbase().pinpoint("pi_10_S^6")
            if entry is not None and entry.is_trivial.is_yes():
                fired.append(("R3", Truth.YES))
    if m == n + 5:
        if m != 11:
            fired.append(("R4", Truth.YES))
        elif covered:
            fired.append(("R4", Truth.NO))
    if m == 2 * n - 2 and n % 2 == 0:
        if n in (2, 4, 8):
            fired.append(("R5", Truth.YES))  # suspension kernel is trivial
        elif covered:
            if n in (16, 32, 64):
                fired.append(("R5", Truth.NO))
            elif n == 128:
                fired.append(("R5", Truth.UNKNOWN))
            else:
                fired.append(("R5", Truth.YES))
    if m == 2 * n - 1 and covered:
        if n % 4 == 2 and n >= 6:
            fired.append(("R6", Truth.NO))
        else:
            fired.append(("R6", Truth.YES))
    if m in (2 * n + 2, 2 * n + 3) and n not in (4, 6) and covered:
        fired.append(("R7", Truth.YES))
    return fired


def overlap_disagreements(limit: int = 64) -> list[str]:
    """Scan the (m, n) grid for overlapping rules that disagree."""
    problems = []
    for n in range(1, limit + 1):
        for m in range(1, limit + 1):
            fired = _rules_fired(WeckenQuery(m, n, TargetFamily.SPHERE))
            verdicts = {t for _, t in fired}
            if len(verdicts) > 1:
                detail = ", ".join(f"{r}={t.value}" for r, t in fired)
                problems.append(f"(m={m}, n={n}): {detail}")
    return problems


@lru_cache(maxsize=1)
def _assert_rule_consistency() -> bool:
    problems = overlap_disagreements()
    if problems:
        raise ConsistencyError(
            "overlapping Wecken rules disagree: " + "; ".join(problems)
        )
    return True


def wecken_condition(q: WeckenQuery) -> Fact:
    """First-match dispatch over R1..R7; R8 (Unknown) when nothing fires."""
    _assert_rule_consistency()
    fired = _rules_fired(q)
    if not fired:
        return unknown_fact(Provenance.rule("R8"))
    rule_id, truth = fired[0]
    return Fact(truth, Provenance.rule(rule_id))


@dataclass(frozen=True)
class CoincidenceProducingReport:
    """Conditions (ii), (iii), (iii'), (iii'') of the one-map looseness
    chain: small-deformation looseness implies looseness implies not
    coincidence producing, the last detected by the punctured-target image
    of the boundary class."""

    loose_by_small_deformation: Fact  # (ii)
    loose: Fact                       # (iii)
    not_coincidence_producing: Fact   # (iii')
    j_image_vanishes: Fact            # (iii'')
    implications: tuple[str, ...]


def coincidence_producing_criterion(
    del_zero: Fact, j_injective: Fact, j_of_del_zero: Fact
) -> CoincidenceProducingReport:
    rule = Provenance.rule("Thm1.26")

    if del_zero.is_yes():
        if j_of_del_zero.is_no():
            raise DescriptorError(
                "del_zero = yes forces j_of_del_zero = yes"
            )
        if j_of_del_zero.is_unknown():
            j_of_del_zero = yes(rule)
    if j_injective.is_yes():
        collapse = Provenance.rule("Cond1.27")
        if (not del_zero.is_unknown() and not j_of_del_zero.is_unknown()
                and del_zero.truth is not j_of_del_zero.truth):
            raise DescriptorError(
                "j injective makes del_zero and j_of_del_zero equivalent"
            )
        if del_zero.is_unknown() and not j_of_del_zero.is_unknown():
            del_zero = Fact(j_of_del_zero.truth, collapse)
        if j_of_del_zero.is_unknown() and not del_zero.is_unknown():
            j_of_del_zero = Fact(del_zero.truth, collapse)

    ii = del_zero
    iii_second = Fact(j_of_del_zero.truth, rule)
    iii_prime = iii_second

    notes = ["(ii) => (iii) => (iii')", "(iii') <=> (iii'')"]
    if ii.is_yes():
        iii = yes(rule)
    elif iii_prime.is_no():
        iii = no(rule)
    elif j_injective.is_yes():
        iii = Fact(ii.truth, Provenance.rule("Cond1.27"))
        notes.append("(ii) <=> (iii'') collapses the chain")
    else:
        iii = unknown_fact(rule)

    return CoincidenceProducingReport(
        loose_by_small_deformation=ii,
        loose=iii,
        not_coincidence_producing=iii_prime,
        j_image_vanishes=iii_second,
        implications=tuple(notes),
    )


def nsharp_restrictions(
    n: int,
    m: int,
    pi1_size: int | object,
    orientable: Fact,
    closed: bool,
    chi_zero: Fact,
    e_del_nonzero: Fact,
    no_loose_selfmap_and_i_not_onto: Fact = unknown_fact(),
) -> Fact:
    """Can N#(f, f) be nonzero for maps S^m -> N?  Answers No when one of
    the necessary restrictions fails and Unknown otherwise; the restrictions
    are necessary but not sufficient, so Yes is never emitted."""
    # (a) dimension parity
    dims_ok = (n % 2 == 0 and m >= n >= 4) or (m == 2 and n == 2)
    if not dims_ok:
        return no(Provenance.rule("Thm1.33a"))
    # (b) fundamental group
    if pi1_size is INFINITE or (isinstance(pi1_size, int) and pi1_size >= 3):
        return no(Provenance.rule("Thm1.33b"))
    if pi1_size == 2 and orientable.is_yes():
        return no(Provenance.rule("Thm1.33b"))
    # (c) closed target with nonzero Euler characteristic and E o del != 0
    if not closed or chi_zero.is_yes() or e_del_nonzero.is_no():
        return no(Provenance.rule("Thm1.33c"))
    # (d) caller-supplied
    if no_loose_selfmap_and_i_not_onto.is_no():
        return no(Provenance.rule("Thm1.33d"))
    return unknown_fact(Provenance.rule("Thm1.33"))


@dataclass(frozen=True)
class NielsenValueSet:
    """Possible values of the four Nielsen numbers for pairs from S^m."""

    values: tuple[int | object, ...]
    rule: str = "Thm1.34"


def nielsen_value_set(pi1_count: int | object,
                      restrictions_ok: Fact) -> NielsenValueSet:
    """Value set {0, k} (restrictions violated) or {0, 1, k} (possibly
    satisfiable), where k is the number of elements of the fundamental
    group."""
    if pi1_count is not INFINITE and (
            not isinstance(pi1_count, int) or pi1_count < 1):
        raise DescriptorError("pi1_count must be a positive count or "
                              "infinite")
    values: list[int | object] = [0]
    if not restrictions_ok.is_no():
        values.append(1)
    if pi1_count is INFINITE:
        values.append(INFINITE)
    elif pi1_count not in values:
        values.append(pi1_count)
    return NielsenValueSet(tuple(values))


def fixed_point_wecken(dim: int, chi: int) -> Fact:
    """Classical fixed point theory: the minimum number of fixed points
    equals the Nielsen number for every selfmap iff the manifold is not a
    surface of strictly negative Euler characteristic."""
    if dim < 1:
        raise DescriptorError("dimension must be >= 1")
    rule = Provenance.rule("Ex3.9")
    if dim == 2 and chi < 0:
        return no(rule)
    return yes(rule)
