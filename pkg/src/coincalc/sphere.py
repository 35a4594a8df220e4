"""All seven invariants for pairs of maps between spheres.

A pair S^m -> S^n is described either by the two mapping degrees (only
meaningful for m = n) or by four homotopy-theoretic facts about the
difference class: whether it vanishes, whether it desuspends, and whether
its stabilized suspension / stabilized Hopf-James invariants are nonzero.
The engine never decides those memberships itself; they are exactly the
hard inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DescriptorError
from .verdict import (
    Fact,
    InvariantBundle,
    Provenance,
    Truth,
    Verdict,
    unknown_fact,
    yes,
)


@dataclass(frozen=True)
class SphereClassDescriptor:
    """Pair of maps S^m -> S^n, reduced to the difference class.

    ``degrees`` holds (d1, d2) and is required exactly when m = n; the
    difference class is then d1 - (-1)^(n+1) * d2 (the antipodal map has
    degree (-1)^(n+1)).  Otherwise the four facts describe the class
    [f] = [f1'] - [a o f2'].
    """

    m: int
    n: int
    degrees: tuple[int, int] | None = None
    f1_homotopic_a_f2: Fact = unknown_fact()
    in_suspension_image: Fact = unknown_fact()
    stable_suspension_nonzero: Fact = unknown_fact()
    some_stable_hopf_james_nonzero: Fact = unknown_fact()

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise DescriptorError("sphere dimensions must be >= 1")
        if (self.degrees is not None) != (self.m == self.n):
            raise DescriptorError(
                "degrees are required exactly when m = n "
                "(facts mode covers m != n)"
            )


@dataclass(frozen=True)
class _Resolved:
    homotopic: Fact
    in_suspension: Fact
    stable_nonzero: Fact
    hopf_james_nonzero: Fact
    degree_gap: int | None  # |difference class degree| for m = n = 1


def _resolve(d: SphereClassDescriptor) -> _Resolved:
    rule = Provenance.rule("Thm1.7e")
    if d.degrees is not None:
        d1, d2 = d.degrees
        antipodal_degree = (-1) ** (d.n + 1)
        diff = d1 - antipodal_degree * d2
        t = Truth.NO if diff == 0 else Truth.YES
        return _Resolved(
            homotopic=Fact(Truth.YES if diff == 0 else Truth.NO, rule),
            in_suspension=yes(rule),  # suspension is onto pi_n(S^n)
            stable_nonzero=Fact(t, rule),
            hopf_james_nonzero=Fact(t, rule),
            degree_gap=abs(d1 - d2) if d.n == 1 else None,
        )

    homotopic = d.f1_homotopic_a_f2
    if d.m < d.n or (d.n == 1 and d.m >= 2):
        # pi_m(S^n) = 0 here, so the difference class must vanish
        if not homotopic.is_yes():
            raise DescriptorError(
                "for m < n (and for n = 1 < m) the difference class is "
                "forced to vanish: f1_homotopic_a_f2 must be yes"
            )
    stable = d.stable_suspension_nonzero
    hopf_james = d.some_stable_hopf_james_nonzero
    if stable.is_yes():
        if hopf_james.is_no():
            raise DescriptorError(
                "stable_suspension_nonzero = yes forces "
                "some_stable_hopf_james_nonzero = yes (the stabilized "
                "suspension is the first Hopf-James invariant)"
            )
        if hopf_james.is_unknown():
            hopf_james = yes(rule)
    return _Resolved(homotopic, d.in_suspension_image, stable, hopf_james,
                     degree_gap=None)


def sphere_invariants(d: SphereClassDescriptor) -> InvariantBundle:
    r = _resolve(d)
    m, n = d.m, d.n
    hom = r.homotopic.truth

    # Reidemeister number
    if n >= 2:
        reid = Verdict.finite(1, ("Thm1.7a",))
    elif m == 1:
        gap = r.degree_gap
        reid = (Verdict.infinite(("Thm1.7a",)) if gap == 0
                else Verdict.finite(gap, ("Thm1.7a",)))
    else:
        # n = 1 < m: both maps are nullhomotopic
        reid = Verdict.infinite(("Thm1.7a",))

    # MCC = N#
    if m == n == 1:
        mcc = Verdict.finite(abs(d.degrees[0] - d.degrees[1]), ("Thm1.7c",))
    elif hom is Truth.YES:
        mcc = Verdict.finite(0, ("Thm1.7c",))
    elif hom is Truth.NO:
        mcc = Verdict(reid.value, ("Thm1.7c",))
    else:
        mcc = Verdict.unknown(("Thm1.7c", "needs:f1_homotopic_a_f2"))
    n_sharp = mcc

    # MC
    if m == n == 1:
        mc = Verdict.finite(abs(d.degrees[0] - d.degrees[1]), ("Thm1.7b",))
    elif hom is Truth.YES:
        mc = Verdict.finite(0, ("Thm1.7b",))
    elif hom is Truth.UNKNOWN:
        mc = Verdict.unknown(("Thm1.7b", "needs:f1_homotopic_a_f2"))
    elif m == n:  # n >= 2, nonzero class, always a suspension
        mc = Verdict.finite(1, ("Thm1.7b",))
    else:  # m > n >= 2, nonzero class
        susp = r.in_suspension.truth
        if susp is Truth.YES:
            mc = Verdict.finite(1, ("Thm1.7b",))
        elif susp is Truth.NO:
            mc = Verdict.infinite(("Thm1.7b",))
        else:
            mc = Verdict.unknown(("Thm1.7b", "needs:in_suspension_image"))

    # the three weaker Nielsen numbers
    if n == 1 or hom is Truth.YES:
        # all six minimum/Nielsen numbers coincide
        base = mc if mc.known() else mcc
        equal = Verdict(base.value, ("Thm1.7d",))
        n_tilde = n_ = n_z = equal
    elif hom is Truth.NO:
        n_tilde = _one_iff(r.hopf_james_nonzero,
                           "needs:some_stable_hopf_james_nonzero")
        n_ = _one_iff(r.stable_nonzero, "needs:stable_suspension_nonzero")
        if m > n:
            n_z = Verdict.finite(0, ("Thm1.7e",))
        else:
            n_z = Verdict.finite(1, ("Ex3.9-derived",))
    else:
        pending = Verdict.unknown(("Thm1.7e", "needs:f1_homotopic_a_f2"))
        n_tilde = n_ = n_z = pending

    return InvariantBundle(mc=mc, mcc=mcc, n_sharp=n_sharp, n_tilde=n_tilde,
                           n=n_, n_z=n_z, reidemeister=reid)


def _one_iff(fact: Fact, needs: str) -> Verdict:
    if fact.is_yes():
        return Verdict.finite(1, ("Thm1.7e",))
    if fact.is_no():
        return Verdict.finite(0, ("Thm1.7e",))
    return Verdict.unknown(("Thm1.7e", needs))
