"""Selfcoincidence invariants of the Stiefel-to-Grassmann projection.

For the canonical projection V_{r,k} -> G_{r,k} (oriented target or not)
with r >= 2k >= 2, the five invariants MC = MCC = N# = Ntilde = N are all 0
or all 1, decided by whether twice the Euler number of the Grassmannian
kills the framed bordism class of SO(k).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DescriptorError
from .tables import get_factbase
from .verdict import InvariantBundle, Truth, Verdict


@dataclass(frozen=True)
class StiefelQuery:
    r: int
    k: int
    oriented_target: bool = False

    def __post_init__(self):
        if self.k < 1 or self.r < 2 * self.k:
            raise DescriptorError("need r >= 2k >= 2")


def grassmann_euler(r: int, k: int) -> int:
    """Euler number of the Grassmannian of k-planes in R^r: zero when k is
    odd and r even, binomial(floor(r/2), floor(k/2)) otherwise."""
    if not 1 <= k <= r:
        raise DescriptorError("need 1 <= k <= r")
    if k % 2 == 1 and r % 2 == 0:
        return 0
    return comb(r // 2, k // 2)


_COROLLARY = {2: "Cor1.3", 3: "Cor1.4", 5: "Cor1.5"}


def stiefel_selfcoincidence(q: StiefelQuery) -> InvariantBundle:
    """One shared verdict for MC, MCC, N#, Ntilde and N; N^Z is not decided
    by the underlying theorem and stays Unknown.  The answer is identical
    for the oriented and nonoriented Grassmannian (the factor two in the
    criterion already accounts for the double cover)."""
    chi = grassmann_euler(q.r, q.k)
    fact = get_factbase().two_chi_so_vanishes(q.k, chi)

    trace = ["Thm1.2"]
    if q.k in _COROLLARY:
        trace.append(_COROLLARY[q.k])
    if fact.provenance.kind == "rule":
        trace.append(fact.provenance.ref)

    if fact.truth is Truth.YES:
        trace.append("Prop5.1")  # value 0 is loose by small deformation
        shared = Verdict.finite(0, trace)
    elif fact.truth is Truth.NO:
        shared = Verdict.finite(1, trace)
    else:
        shared = Verdict.unknown(trace)

    return InvariantBundle(
        mc=shared, mcc=shared, n_sharp=shared, n_tilde=shared, n=shared,
        n_z=Verdict.unknown(("Thm1.2",)),
        reidemeister=Verdict.unknown(),
    )
