#!/usr/bin/env python3
"""Selfcoincidence of the frame-forgetting projection V_{r,k} -> G_{r,k}.

Whether the projection can be pushed off itself is decided by one framed
bordism class: twice the Euler number of the Grassmannian times the
invariantly framed SO(k).  This script sweeps the three classified frame
counts and shows where the obstruction lives.
"""

from coincalc import (
    StiefelQuery,
    UNKNOWN,
    grassmann_euler,
    stiefel_selfcoincidence,
    two_chi_so_vanishes,
)


def verdict(r, k):
    return stiefel_selfcoincidence(StiefelQuery(r, k)).mcc


def sweep(k, rs, law):
    print(f"\nk = {k} frames ({law})")
    cells = []
    for r in rs:
        value = verdict(r, k).value
        mark = "?" if value is UNKNOWN else str(value)
        cells.append(f"r={r}:{mark}")
    print("  " + "  ".join(cells))


print("Euler numbers of small Grassmannians:")
for r, k in [(4, 2), (6, 3), (7, 3), (11, 5), (23, 11)]:
    print(f"  chi(G_{{{r},{k}}}) = {grassmann_euler(r, k)}")

sweep(2, range(5, 21), "always loose: twice an even-frame class dies")
sweep(3, range(7, 50, 6), "loose iff r is even or r = 1 mod 12")
sweep(5, range(10, 31), "loose iff r != 5 mod 6")

print("\nWhy: the framed class of SO(3) has order 12, so 2*chi*[SO(3)]")
print("vanishes exactly when 6 divides chi = (r-1)/2 for odd r:")
for chi in (3, 6, 10, 12):
    print(f"  chi = {chi:2d}: 2*chi*[SO(3)] = 0 is "
          f"{two_chi_so_vanishes(3, chi).truth.value}")

print("\nAt k = 11 the order of the framed class is an open problem, and")
print("the calculator says so instead of guessing:")
b = stiefel_selfcoincidence(StiefelQuery(23, 11))
print(f"  (r, k) = (23, 11): value {b.mcc.value.value}, "
      f"trace {list(b.mcc.trace)}")
