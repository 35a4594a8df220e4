"""Invariants for pairs of maps into tori.

Torus-to-torus pairs get complete answers from the image determinant of the
H1 difference; for a general closed source only the Reidemeister number, the
bound chain and (conditionally) N^Z are determined, and the rest is emitted
as Unknown rather than as fake intervals.  The only input consumed is the
difference homomorphism f1* - f2* on H1, stored as an integer matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DescriptorError
from .lattice import IntMatrix, abs_det_of_image, cokernel
from .verdict import (
    Fact,
    InvariantBundle,
    Truth,
    Verdict,
    unknown_fact,
)


@dataclass(frozen=True)
class TorusPairDescriptor:
    """Pair of maps M^m -> T^n, reduced to the H1 difference matrix.

    ``h1_matrix`` has n rows; its columns generate the image of f1* - f2*.
    For a torus source the columns are indexed by the m generators of
    H1(T^m), so cols = m.  The two cohomology facts only matter when
    ``source_is_torus`` is false.
    """

    m: int
    n: int
    h1_matrix: IntMatrix
    source_is_torus: bool
    top_cohomology_pullback_nonzero: Fact = unknown_fact()
    det_kills_top: Fact = unknown_fact()

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise DescriptorError("dimensions must be >= 1")
        if self.h1_matrix.rows != self.n:
            raise DescriptorError(
                f"h1_matrix must have n = {self.n} rows, "
                f"got {self.h1_matrix.rows}"
            )
        if self.source_is_torus and self.h1_matrix.cols != self.m:
            raise DescriptorError(
                "torus source: h1_matrix needs one column per source "
                f"generator (m = {self.m}, got {self.h1_matrix.cols})"
            )


def torus_invariants(d: TorusPairDescriptor) -> InvariantBundle:
    det = abs_det_of_image(d.h1_matrix)
    card = cokernel(d.h1_matrix).cardinality()

    if d.source_is_torus:
        reid = Verdict((card), ("Thm1.8",))
        value = Verdict.finite(det, ("Thm1.8",))
        if d.m == d.n or det == 0:
            mc = Verdict.finite(det, ("Thm1.8",))
        else:
            mc = Verdict.infinite(("Thm1.8",))
        return InvariantBundle(mc=mc, mcc=value, n_sharp=value,
                               n_tilde=value, n=value, n_z=value,
                               reidemeister=reid)

    # general closed source: Reidemeister is still the cokernel size
    reid = Verdict((card), ("Reid3.5", "Thm3.7"))
    top = d.top_cohomology_pullback_nonzero.truth

    if top is Truth.YES:
        n_z = Verdict.finite(det, ("Thm3.7",))
    elif top is Truth.NO:
        if d.det_kills_top.is_yes():
            n_z = Verdict.finite(0, ("Thm3.7",))
        else:
            n_z = Verdict.unknown(("Thm3.7", "needs:det_kills_top"))
    else:
        n_z = Verdict.unknown(
            ("Thm3.7", "needs:top_cohomology_pullback_nonzero"))

    if d.n != 2 and top is Truth.YES:
        value = Verdict.finite(det, ("Thm3.7",))
        return InvariantBundle(mc=Verdict.unknown(("Thm3.7",)), mcc=value,
                               n_sharp=value, n_tilde=value, n=value,
                               n_z=n_z, reidemeister=reid)

    pending = Verdict.unknown(
        ("Thm3.7", "needs:top_cohomology_pullback_nonzero"))
    return InvariantBundle(mc=Verdict.unknown(("Thm3.7",)), mcc=pending,
                           n_sharp=pending, n_tilde=pending, n=pending,
                           n_z=n_z, reidemeister=reid)


def bound_chain_note(d: TorusPairDescriptor) -> str:
    """Human-readable record of the bound chain for general sources."""
    det = abs_det_of_image(d.h1_matrix)
    middle = " ≥ MCC" if d.n != 2 else " ≥ MCC (needs n ≠ 2)"
    return (f"Thm3.7 bounds: Reidemeister ≥ |det| = {det}{middle} "
            "≥ N# ≥ Ñ ≥ N ≥ N^Z")


def circle_target_mcc(image_generator: int) -> Verdict:
    """MCC for maps into the circle: the nonnegative generator of the image
    of f1* - f2* on H1.  The four Nielsen numbers take the same value, and
    the pair is loose iff the generator is 0."""
    if isinstance(image_generator, bool) or not isinstance(
            image_generator, int) or image_generator < 0:
        raise DescriptorError("the image generator is a nonnegative integer")
    return Verdict.finite(image_generator, ("Cor3.8",))
