"""Exact integer linear algebra: Smith normal form, image determinants,
cokernels, and a brute-force coset-counting oracle.

Everything runs on Python's arbitrary-precision integers; no intermediate
value is allowed to overflow because none can.  The Smith reduction is the
gcd-pivot algorithm with explicit transform accumulation, so the factorization
D = U * A * V is returned and can be checked exactly.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from math import gcd, prod
from typing import NamedTuple, Sequence

from .errors import DescriptorError
from .verdict import INFINITE, ExtNat

# the oracle enumerates one coset representative per element of a finite
# quotient; refuse quotients past desk scale rather than thrash
_ORACLE_REGION_CAP = 5_000_000


def _check_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DescriptorError(f"matrix entries must be integers, got {x!r}")
    return x


@dataclass(frozen=True)
class IntMatrix:
    """Rectangular integer matrix, row-major, immutable."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DescriptorError("matrix needs at least one row and column")
        if len(self.entries) != self.rows * self.cols:
            raise DescriptorError(
                f"expected {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        for x in self.entries:
            _check_int(x)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        if not rows or not rows[0]:
            raise DescriptorError("matrix needs at least one row and column")
        width = len(rows[0])
        flat = []
        for row in rows:
            if len(row) != width:
                raise DescriptorError("ragged rows in matrix literal")
            flat.extend(row)
        return cls(len(rows), width, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0
                               for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int]) -> "IntMatrix":
        n = len(diag)
        return cls(n, n, tuple(diag[i] if i == j else 0
                               for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols])
                for i in range(self.rows)]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def neg(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols,
                         tuple(-x for x in self.entries))

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DescriptorError("matrix shapes do not compose")
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                out.append(sum(a[i][k] * b[k][j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))


def det_cofactor(m: IntMatrix) -> int:
    """Exact determinant by cofactor expansion (intended for sizes <= 5)."""
    if m.rows != m.cols:
        raise DescriptorError("determinant needs a square matrix")
    return _det_rows(m.to_rows())


def _det_rows(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    sign = 1
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += sign * rows[0][j] * _det_rows(minor)
        sign = -sign
    return total


@dataclass(frozen=True)
class FGAbelianGroup:
    """Finitely generated abelian group in invariant-factor form.

    torsion is the chain d_1 | d_2 | ... with every d_i >= 2; the group is
    Z/d_1 + ... + Z/d_k + Z^free_rank.
    """

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        if self.free_rank < 0:
            raise DescriptorError("free rank must be nonnegative")
        previous = None
        for d in self.torsion:
            _check_int(d)
            if d < 2:
                raise DescriptorError("torsion coefficients must be >= 2")
            if previous is not None and d % previous:
                raise DescriptorError(
                    f"torsion chain broken: {previous} does not divide {d}"
                )
            previous = d

    def cardinality(self) -> ExtNat:
        if self.free_rank:
            return INFINITE
        return prod(self.torsion) if self.torsion else 1

    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0


class SmithNormalForm(NamedTuple):
    d: IntMatrix  # diagonal, nonnegative, divisibility chain
    u: IntMatrix  # rows x rows, det +-1
    v: IntMatrix  # cols x cols, det +-1

    @property
    def divisors(self) -> tuple[int, ...]:
        """The nonzero diagonal entries d_1 | d_2 | ..."""
        k = min(self.d.rows, self.d.cols)
        return tuple(x for x in (self.d.at(i, i) for i in range(k)) if x)


def smith_normal_form(a: IntMatrix) -> SmithNormalForm:
    """Diagonalize by unimodular transforms: returns (D, U, V) with
    D = U * a * V, diagonal entries nonnegative and sorted by divisibility."""
    r, c = a.rows, a.cols
    d = a.to_rows()
    u = IntMatrix.identity(r).to_rows()
    v = IntMatrix.identity(c).to_rows()

    def row_sub(i, k, q):  # row_i -= q * row_k
        if q:
            d[i] = [x - q * y for x, y in zip(d[i], d[k])]
            u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    def col_sub(j, k, q):  # col_j -= q * col_k
        if q:
            for row in d:
                row[j] -= q * row[k]
            for row in v:
                row[j] -= q * row[k]

    def swap_rows(i, k):
        if i != k:
            d[i], d[k] = d[k], d[i]
            u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        if j != k:
            for row in d:
                row[j], row[k] = row[k], row[j]
            for row in v:
                row[j], row[k] = row[k], row[j]

    t = 0
    while t < min(r, c):
        # pick the absolutely smallest nonzero entry of the submatrix
        pivot = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = d[i][j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break  # submatrix is zero; trailing diagonal entries stay 0
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        dirty = False
        for i in range(t + 1, r):
            if d[i][t]:
                row_sub(i, t, d[i][t] // d[t][t])
                if d[i][t]:
                    dirty = True
        for j in range(t + 1, c):
            if d[t][j]:
                col_sub(j, t, d[t][j] // d[t][t])
                if d[t][j]:
                    dirty = True
        if dirty:
            continue  # a remainder smaller than the pivot appeared

        # pivot must divide the whole remaining submatrix
        offender = None
        for i in range(t + 1, r):
            if any(d[i][j] % d[t][t] for j in range(t + 1, c)):
                offender = i
                break
        if offender is not None:
            row_sub(t, offender, -1)  # pull the offending row into row t
            continue
        t += 1

    for i in range(min(r, c)):
        if d[i][i] < 0:
            d[i] = [-x for x in d[i]]
            u[i] = [-x for x in u[i]]

    return SmithNormalForm(
        IntMatrix.from_rows(d), IntMatrix.from_rows(u), IntMatrix.from_rows(v)
    )


def abs_det_of_image(a: IntMatrix) -> int:
    """|det| of any square matrix whose columns generate the column lattice
    of ``a`` inside Z^rows; 0 when the lattice has rank below ``rows``."""
    divisors = smith_normal_form(a).divisors
    if len(divisors) < a.rows:
        return 0
    return prod(divisors)


def cokernel(a: IntMatrix) -> FGAbelianGroup:
    """Z^rows modulo the column lattice of ``a``, in invariant-factor form."""
    divisors = smith_normal_form(a).divisors
    return FGAbelianGroup(
        torsion=tuple(d for d in divisors if d >= 2),
        free_rank=a.rows - len(divisors),
    )


def _rank_by_minors(rows: list[list[int]]) -> int:
    """Exact rank: the largest k with a nonzero k x k minor.  Independent of
    the Smith reduction; only sensible for desk-scale matrices."""
    r, c = len(rows), len(rows[0])
    for k in range(min(r, c), 0, -1):
        for row_idx in itertools.combinations(range(r), k):
            for col_idx in itertools.combinations(range(c), k):
                sub = [[rows[i][j] for j in col_idx] for i in row_idx]
                if _det_rows(sub):
                    return k
    return 0


def _adjugate(rows: list[list[int]]) -> list[list[int]]:
    n = len(rows)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [rows[p][q] for q in range(n) if q != j]
                for p in range(n) if p != i
            ]
            adj[j][i] = (-1) ** (i + j) * _det_rows(minor)
    return adj


def cokernel_bruteforce_oracle(a: IntMatrix, box: int) -> ExtNat:
    """Count the cosets of the column lattice of ``a`` in Z^rows by explicit
    enumeration and union-find; INFINITE when the column rank is deficient.

    Desk-scale only: rows, cols <= 4 and every |entry| <= box.  The region
    enumerated is one representative per coset of a full-rank square
    sublattice, so its size is bounded by the Hadamard bound of ``a`` and is
    never too small by construction.  Deliberately avoids the Smith routine:
    rank comes from cofactor minors and coset identity from the adjugate.
    """
    if a.rows > 4 or a.cols > 4:
        raise DescriptorError("oracle is desk-scale only: rows, cols <= 4")
    if any(abs(x) > box for x in a.entries):
        raise DescriptorError(f"entry exceeds the declared box bound {box}")

    rows = a.to_rows()
    r = a.rows
    if _rank_by_minors(rows) < r:
        return INFINITE

    # full-rank square column submatrix S; |det S| bounds the region
    det_s = 0
    for col_idx in itertools.combinations(range(a.cols), r):
        sub = [[rows[i][j] for j in col_idx] for i in range(r)]
        det_s = _det_rows(sub)
        if det_s:
            square = sub
            break
    s = abs(det_s)
    if s > _ORACLE_REGION_CAP:
        raise DescriptorError("quotient region exceeds desk scale")

    adj = _adjugate(square)

    def key(vec):
        # injective on Z^r modulo the span of S: adj * S = det(S) * I
        return tuple(
            sum(adj[i][j] * vec[j] for j in range(r)) % s for i in range(r)
        )

    # enumerate all s cosets of span(S) by unit steps from the origin
    origin = (0,) * r
    seen = {key(origin): origin}
    queue = deque([origin])
    while queue:
        z = queue.popleft()
        for i in range(r):
            for step in (1, -1):
                w = list(z)
                w[i] += step
                w = tuple(w)
                kw = key(w)
                if kw not in seen:
                    seen[kw] = w
                    queue.append(w)
    assert len(seen) == s

    # union-find: quotient further by all columns of ``a``
    parent = {k: k for k in seen}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    columns = [a.column(j) for j in range(a.cols)]
    for k, z in seen.items():
        for col in columns:
            shifted = tuple(z[i] + col[i] for i in range(r))
            union(k, key(shifted))

    return sum(1 for k in parent if find(k) == k)
