"""Invariants for maps from spheres to spherical space forms S^n/G.

The descriptor carries the homotopy-theoretic facts about one pair
(f1, f2): whether the maps are (freely) homotopic, whether the boundary
class and its suspension vanish, and in the two critical dimension settings
the Kervaire invariant and the Hopf invariant mod 4 of a lift.  The engine
checks fact consistency (odd n forces a vanishing boundary, a vanishing
boundary forces a vanishing suspended boundary, groups of order >= 3 only
act on odd spheres) but never computes a boundary homomorphism itself.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import DescriptorError
from .tables import KervaireStatus, get_factbase
from .verdict import (
    Fact,
    InvariantBundle,
    Provenance,
    Truth,
    Verdict,
    no,
    truth_and,
    truth_not,
    unknown_fact,
    yes,
)


@dataclass(frozen=True)
class SpaceFormPairDescriptor:
    """Pair of maps S^m -> S^n/G with #G = group_order.

    The boundary facts are lifting-invariant, so they may be supplied for
    the space form or for its sphere cover interchangeably.
    """

    m: int
    n: int
    group_order: int
    homotopic: Fact = unknown_fact()
    del_zero: Fact = unknown_fact()       # boundary class vanishes
    e_del_zero: Fact = unknown_fact()     # suspended boundary vanishes
    kervaire_one: Fact = unknown_fact()   # only meaningful for m = 2n-2
    hopf_mod4: int | None = None          # only meaningful for m = 2n-1
    in_psE_image: Fact = unknown_fact()   # [f1]-[f2] in p_* E(pi)

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise DescriptorError("dimensions must be >= 1")
        if self.group_order < 1:
            raise DescriptorError("group order must be a positive integer")
        if self.group_order >= 3 and self.n % 2 == 0:
            raise DescriptorError(
                "no group of order >= 3 acts freely on an even sphere "
                "(the Euler characteristic of the quotient would not be "
                "an integer multiple)"
            )
        if self.hopf_mod4 is not None:
            if self.hopf_mod4 not in (0, 1, 2, 3):
                raise DescriptorError("hopf_mod4 must lie in {0, 1, 2, 3}")
            if self.hopf_mod4 % 2:
                raise DescriptorError(
                    "the Hopf invariant maps onto 2Z: odd residues mod 4 "
                    "are invalid"
                )


def resolve(d: SpaceFormPairDescriptor) -> SpaceFormPairDescriptor:
    """Apply forced derivations, rejecting contradictory descriptors."""
    rule = Provenance.rule("Thm1.15")
    del_zero, e_del = d.del_zero, d.e_del_zero

    if d.n % 2 == 1:
        if del_zero.is_no():
            raise DescriptorError(
                "odd n: the target has zero Euler characteristic, so the "
                "boundary class vanishes; del_zero cannot be no"
            )
        if del_zero.is_unknown():
            del_zero = yes(rule)
    if d.m == 1 or 2 <= d.m < d.n:
        # the boundary homomorphism is zero for m = 1 by convention, and
        # below the target dimension every class already vanishes
        if del_zero.is_no():
            raise DescriptorError(
                "m = 1 or m < n: the boundary class is forced to vanish; "
                "del_zero cannot be no"
            )
        if del_zero.is_unknown():
            del_zero = yes(rule)
    if del_zero.is_yes():
        if e_del.is_no():
            raise DescriptorError(
                "del_zero = yes forces e_del_zero = yes (suspension of 0)"
            )
        if e_del.is_unknown():
            e_del = yes(rule)
    if e_del.is_no() and del_zero.is_unknown():
        del_zero = no(rule)  # contrapositive

    homotopic = d.homotopic
    if 2 <= d.m < d.n:
        if homotopic.is_no():
            raise DescriptorError(
                "2 <= m < n: every map is nullhomotopic, so the pair is "
                "homotopic; homotopic cannot be no"
            )
        if homotopic.is_unknown():
            homotopic = yes(Provenance.rule("Thm1.10"))

    in_image = d.in_psE_image
    if homotopic.is_yes():
        if in_image.is_no():
            raise DescriptorError(
                "homotopic maps have vanishing class difference, which "
                "lies in every subgroup: in_psE_image cannot be no"
            )
        if in_image.is_unknown():
            in_image = yes(Provenance.rule("Prop4.3"))

    return replace(d, homotopic=homotopic, del_zero=del_zero,
                   e_del_zero=e_del, in_psE_image=in_image)


def spaceform_pair_invariants(d: SpaceFormPairDescriptor) -> InvariantBundle:
    if d.group_order == 1:
        raise DescriptorError(
            "trivial group: the target is a sphere; use the sphere engine"
        )
    if d.n == 1:
        raise DescriptorError(
            "circle space forms are circles; use the sphere engine"
        )
    d = resolve(d)
    hom, e_del, del_zero = d.homotopic, d.e_del_zero, d.del_zero

    if d.m >= 2:
        reid = Verdict.finite(d.group_order, ("Thm1.10",))
    else:
        reid = Verdict.unknown()

    exception = (hom.is_yes() and del_zero.is_no() and e_del.is_yes())
    if exception:
        from .wecken import TargetFamily, WeckenQuery, wecken_condition

        certificate = wecken_condition(
            WeckenQuery(d.m, d.n, TargetFamily.SPACE_FORM))
        if certificate.is_yes():
            raise DescriptorError(
                f"facts claim a nonzero boundary class with vanishing "
                f"suspension, but the Wecken condition is certified at "
                f"(m, n) = ({d.m}, {d.n}); no such class exists"
            )
        # loose upstairs but coincidence producing downstairs
        mcc = Verdict.finite(1, ("Thm1.10", "Cor1.19"))
        n_sharp = Verdict.finite(0, ("Thm1.10", "Cor1.19"))
    elif hom.is_yes():
        if e_del.is_yes():
            if del_zero.is_yes():
                mcc = n_sharp = Verdict.finite(0, ("Thm1.10",))
            else:  # del_zero unknown: N# is settled, MCC is not
                n_sharp = Verdict.finite(0, ("Thm1.10",))
                mcc = Verdict.unknown(
                    ("Thm1.10", "Cor1.19", "needs:del_zero"))
        elif e_del.is_no():
            mcc = n_sharp = Verdict.finite(1, ("Thm1.10",))
        else:
            mcc = n_sharp = Verdict.unknown(("Thm1.10", "needs:e_del_zero"))
    elif hom.is_no():
        if d.m < d.n:
            mcc = n_sharp = Verdict.finite(0, ("Thm1.10",))
        else:
            mcc = n_sharp = Verdict.finite(d.group_order, ("Thm1.10",))
    else:
        if d.m < d.n:  # only m = 1 reaches this with homotopic unknown
            mcc = n_sharp = Verdict.finite(0, ("Thm1.10",))
        else:
            mcc = n_sharp = Verdict.unknown(("Thm1.10", "needs:homotopic"))

    mc = _minimum_points(d, mcc)
    pending = Verdict.unknown(("Prop7.2-valueset",))
    return InvariantBundle(mc=mc, mcc=mcc, n_sharp=n_sharp,
                           n_tilde=pending, n=pending, n_z=pending,
                           reidemeister=reid)


def _minimum_points(d: SpaceFormPairDescriptor, mcc: Verdict) -> Verdict:
    if d.homotopic.is_yes():
        # selfcoincidence setting: MC = MCC
        if mcc.known():
            return Verdict(mcc.value, ("Thm1.15",))
        return Verdict.unknown(("Thm1.15",) + mcc.trace[1:])
    if d.n % 2 == 1 and d.n >= 3 and d.m >= 2:
        return spaceform_mc(d)
    return Verdict.unknown()


def spaceform_mc(d: SpaceFormPairDescriptor) -> Verdict:
    """MC for odd-dimensional space forms: infinite outside the
    suspension-projection image, 0 for homotopic maps or m < n, the group
    order otherwise."""
    if d.n % 2 == 0 or d.n < 3:
        raise DescriptorError("spaceform_mc needs an odd target, n >= 3")
    if d.m < 2:
        raise DescriptorError("spaceform_mc needs m >= 2")
    d = resolve(d)
    if d.in_psE_image.is_no():
        return Verdict.infinite(("Prop4.3",))
    if d.homotopic.is_yes() or d.m < d.n:
        return Verdict.finite(0, ("Prop4.3",))
    if d.in_psE_image.is_unknown():
        return Verdict.unknown(("Prop4.3", "needs:in_psE_image"))
    if d.homotopic.is_no():
        return Verdict.finite(d.group_order, ("Prop4.3",))
    return Verdict.unknown(("Prop4.3", "needs:homotopic"))


@dataclass(frozen=True)
class SelfCoincidenceReport:
    """The five conditions of the selfcoincidence chain, as facts.

    (i) the boundary class vanishes; (ii) loose by small deformation;
    (iii) loose, i.e. MCC = 0; (iv) N# = 0; (v) the suspended boundary
    vanishes.  (i) <=> (ii) and (iv) <=> (v) always; (iii) <=> (iv) when
    the group order is not 2.  ``mcc_zero_by_cor_1_19`` resolves (iii)
    in the remaining gap, where the chain alone is silent.
    """

    del_vanishes: Fact            # (i)
    loose_by_small_deformation: Fact  # (ii)
    loose: Fact                   # (iii), from the chain alone
    n_sharp_zero: Fact            # (iv)
    e_del_vanishes: Fact          # (v)
    mcc_zero_by_cor_1_19: Fact | None
    implications: tuple[str, ...]


_CHAIN_NOTES = (
    "(i) <=> (ii)",
    "(ii) => (iii)",
    "(iii) => (iv)",
    "(iv) <=> (v)",
)


def selfcoincidence_chain(d: SpaceFormPairDescriptor) -> SelfCoincidenceReport:
    if not d.homotopic.is_yes():
        raise DescriptorError("the selfcoincidence chain needs homotopic = yes")
    d = resolve(d)
    rule = Provenance.rule("Thm1.15")
    i = ii = Fact(d.del_zero.truth, rule)
    iv = v = Fact(d.e_del_zero.truth, rule)

    notes = list(_CHAIN_NOTES)
    resolution = None
    if d.del_zero.is_yes():
        iii = yes(rule)
    elif d.e_del_zero.is_no():
        iii = no(rule)
    elif d.group_order != 2:
        iii = Fact(iv.truth, rule)
        notes.append("(iii) <=> (iv) since the group order is not 2")
    else:
        iii = unknown_fact(rule)
        if d.del_zero.is_no() and d.e_del_zero.is_yes():
            resolution = no(Provenance.rule("Cor1.19"))
            notes.append(
                "(iii) resolved to no by the exceptional-case equivalences"
            )

    return SelfCoincidenceReport(
        del_vanishes=i,
        loose_by_small_deformation=ii,
        loose=iii,
        n_sharp_zero=iv,
        e_del_vanishes=v,
        mcc_zero_by_cor_1_19=resolution,
        implications=tuple(notes),
    )


def kervaire_case(d: SpaceFormPairDescriptor) -> Fact:
    """Looseness of (f, f) in the first critical setting m = 2n-2: loose
    iff the suspended boundary vanishes and the Kervaire invariant of the
    lift is zero.  n = 128 is accepted and answers Unknown."""
    if d.m != 2 * d.n - 2:
        raise DescriptorError("kervaire_case needs m = 2n-2")
    if d.n % 2:
        raise DescriptorError("kervaire_case needs even n")
    if d.n in (2, 4, 8):
        raise DescriptorError(
            "n = 2, 4, 8: the suspension has trivial kernel and the "
            "ordinary selfcoincidence chain already decides looseness"
        )
    if d.group_order != 2:
        raise DescriptorError("kervaire_case needs a group of order 2")
    d = resolve(d)

    kervaire = d.kervaire_one
    status = get_factbase().kervaire_status(d.n)
    if status.status is KervaireStatus.NONE_EXISTS:
        if kervaire.is_yes():
            raise DescriptorError(
                f"kervaire_one = yes contradicts the vanishing theorem "
                f"for n = {d.n}"
            )
        vanishing_rule = "Browder" if d.n & (d.n - 1) else "HHR"
        kervaire = no(Provenance.rule(vanishing_rule))

    truth = truth_and(d.e_del_zero.truth, truth_not(kervaire.truth))
    if truth is Truth.UNKNOWN and d.n == 128:
        return Fact(truth, Provenance.rule("HHR-open"))
    return Fact(truth, Provenance.rule("Thm1.20"))


def hopf_case(d: SpaceFormPairDescriptor) -> Fact:
    """Looseness of (f, f) in the second critical setting m = 2n-1,
    n = 2 mod 4, n >= 6: loose iff the suspended boundary vanishes and the
    Hopf invariant of the lift is divisible by 4."""
    if d.m != 2 * d.n - 1:
        raise DescriptorError("hopf_case needs m = 2n-1")
    if d.n % 4 != 2 or d.n < 6:
        raise DescriptorError("hopf_case needs n = 2 mod 4 and n >= 6")
    if d.group_order != 2:
        raise DescriptorError("hopf_case needs a group of order 2")
    if d.hopf_mod4 is None:
        raise DescriptorError("hopf_case needs hopf_mod4")
    d = resolve(d)

    divisible = Truth.YES if d.hopf_mod4 == 0 else Truth.NO
    truth = truth_and(d.e_del_zero.truth, divisible)
    return Fact(truth, Provenance.rule("Thm1.22"))
