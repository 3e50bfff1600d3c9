"""Exact linear algebra over the integers.

Smith normal form with unimodular transforms, kernels, cokernels and the
finitely generated abelian groups they present.  Python ints are used
throughout, so nothing overflows.

Coordinates of a :class:`FGAbelianGroup` list the torsion summands first
(in divisibility order) and the free summands after them, matching the
way groups such as ``Z/2 + Z/2 + Z`` are written.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None):
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            out[i][i] = d
        return cls.from_rows(out, cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def column(self, j: int) -> list[int]:
        return [self[i, j] for i in range(self.rows)]

    def columns(self) -> list[list[int]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.to_rows(), other.to_rows()
        out = [[sum(a[i][t] * b[t][j] for t in range(self.cols)) for j in range(other.cols)]
               for i in range(self.rows)]
        return IntegerMatrix.from_rows(out, other.cols)

    def apply(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum(self[i, j] * v[j] for j in range(self.cols)) for i in range(self.rows)]

    def determinant(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        # Bareiss fraction-free elimination
        m = self.to_rows()
        n, sign, prev = self.rows, 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1] if n else 1


def hstack(*mats: IntegerMatrix) -> IntegerMatrix:
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ValueError("row count mismatch")
    data = [sum((m.to_rows()[i] for m in mats), []) for i in range(rows)]
    return IntegerMatrix.from_rows(data, sum(m.cols for m in mats))


def matrix_from_columns(cols: Sequence[Sequence[int]], rows: int) -> IntegerMatrix:
    return IntegerMatrix.from_rows([[c[i] for c in cols] for i in range(rows)], len(cols))


def smith_normal_form(A: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Return ``(U, D, V)`` with ``U @ A @ V == D`` and U, V unimodular."""
    U, D, V, _ = _snf(A)
    return U, D, V


def _snf(A: IntegerMatrix):
    """Smith form with the inverse of the left transform tracked alongside."""
    m, n = A.rows, A.cols
    D = A.to_rows()
    U = IntegerMatrix.identity(m).to_rows()
    Uinv = IntegerMatrix.identity(m).to_rows()
    V = IntegerMatrix.identity(n).to_rows()

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]
        for r in Uinv:
            r[i], r[j] = r[j], r[i]

    def row_add(dst, src, c):  # row dst += c * row src
        if c == 0:
            return
        D[dst] = [x + c * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]
        for r in Uinv:
            r[src] -= c * r[dst]

    def row_neg(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]
        for r in Uinv:
            r[i] = -r[i]

    def col_swap(i, j):
        for mat in (D, V):
            for r in mat:
                r[i], r[j] = r[j], r[i]

    def col_add(dst, src, c):
        if c == 0:
            return
        for mat in (D, V):
            for r in mat:
                r[dst] += c * r[src]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    row_add(i, t, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    col_add(j, t, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        done = False
            if done:
                # divisibility: the pivot must divide every remaining entry
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if D[i][j] % D[t][t]), None)
                if bad is None:
                    break
                row_add(t, bad[0], 1)
                continue
            nonzero = [(abs(D[i][t]), i, t) for i in range(t, m) if D[i][t]]
            nonzero += [(abs(D[t][j]), t, j) for j in range(t, n) if D[t][j]]
            _, pi, pj = min(nonzero)
            if pi != t:
                row_swap(t, pi)
            if pj != t:
                col_swap(t, pj)
        if D[t][t] < 0:
            row_neg(t)
        t += 1

    as_mat = IntegerMatrix.from_rows
    return as_mat(U, m), as_mat(D, n), as_mat(V, n), as_mat(Uinv, m)


def invariant_factors(A: IntegerMatrix) -> list[int]:
    _, D, _ = smith_normal_form(A)
    return [D[i, i] for i in range(min(D.rows, D.cols)) if D[i, i]]


def matrix_rank(A: IntegerMatrix) -> int:
    return len(invariant_factors(A))


def kernel(A: IntegerMatrix) -> IntegerMatrix:
    """Columns form a Z-basis of ``{v : A v = 0}``."""
    _, D, V, _ = _snf(A)
    r = sum(1 for i in range(min(D.rows, D.cols)) if D[i, i])
    cols = [V.column(j) for j in range(r, A.cols)]
    return matrix_from_columns(cols, A.cols)


def column_space_basis(G: IntegerMatrix) -> IntegerMatrix:
    """Columns form a Z-basis of the lattice spanned by the columns of G."""
    _, D, _, Uinv = _snf(G)
    basis = []
    for i in range(min(D.rows, D.cols)):
        d = D[i, i]
        if d:
            basis.append([x * d for x in Uinv.column(i)])
    return matrix_from_columns(basis, G.rows)


def solve_in_lattice(B: IntegerMatrix, v: Sequence[int]) -> list[int] | None:
    """Integer coefficients c with ``B c = v``, or None when v is not in the lattice of B."""
    U, D, V, _ = _snf(B)
    w = U.apply(v)
    y = [0] * B.cols
    for i in range(B.rows):
        d = D[i, i] if i < B.cols else 0
        if d == 0:
            if w[i] != 0:
                return None
        else:
            if w[i] % d:
                return None
            y[i] = w[i] // d
    return V.apply(y)


@dataclass(frozen=True)
class FGAbelianGroup:
    """Finitely generated abelian group ``Z/d1 + ... + Z/dt + Z^rank``."""

    rank: int
    torsion: tuple[int, ...] = ()
    generators: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise ValueError("negative rank")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"invariant factors must be >= 2, got {self.torsion}")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain: {self.torsion}")
        if self.generators is not None:
            object.__setattr__(self, "generators", tuple(self.generators))
            if len(self.generators) != self.ngens:
                raise ValueError("generator label count does not match the group")

    @property
    def ngens(self) -> int:
        return len(self.torsion) + self.rank

    @property
    def orders(self) -> tuple[int, ...]:
        """Order of each coordinate, 0 meaning infinite."""
        return self.torsion + (0,) * self.rank

    def is_trivial(self) -> bool:
        return self.ngens == 0

    def is_free(self) -> bool:
        return not self.torsion

    def element(self, coords: Iterable[int]) -> "GroupElement":
        return GroupElement(self, tuple(coords))

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.ngens)

    def with_generators(self, labels: Sequence[str]) -> "FGAbelianGroup":
        return FGAbelianGroup(self.rank, self.torsion, tuple(labels))

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.rank
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupElement:
    group: FGAbelianGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != self.group.ngens:
            raise ValueError(f"expected {self.group.ngens} coordinates, got {len(coords)}")
        coords = tuple(c % d if d else c for c, d in zip(coords, self.group.orders))
        object.__setattr__(self, "coords", coords)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if other.group != self.group:
            raise ValueError("elements of different groups")
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-a for a in self.coords))

    def __mul__(self, n: int) -> "GroupElement":
        return GroupElement(self.group, tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class Quotient:
    """``Z^n / im(A)`` together with maps in and out of normal form coordinates.

    ``projection`` sends a vector of Z^n to group coordinates; ``section``
    has one column per group coordinate giving a representative in Z^n.
    """

    group: FGAbelianGroup
    projection: IntegerMatrix
    section: IntegerMatrix

    def project(self, v: Sequence[int]) -> GroupElement:
        return self.group.element(self.projection.apply(v))

    def lift(self, x: GroupElement) -> list[int]:
        return self.section.apply(list(x.coords))


def quotient(A: IntegerMatrix) -> Quotient:
    m = A.rows
    U, D, _, Uinv = _snf(A)
    diag = [D[i, i] if i < D.cols else 0 for i in range(m)]
    tors = [i for i in range(m) if diag[i] > 1]
    free = [i for i in range(m) if diag[i] == 0]
    proj_rows, sec_cols = [], []
    for i in tors:
        proj_rows.append([x % diag[i] for x in U.to_rows()[i]])
        sec_cols.append(Uinv.column(i))
    for i in free:
        row, col = U.to_rows()[i], Uinv.column(i)
        lead = next((x for x in row if x), 0)
        if lead < 0:
            row, col = [-x for x in row], [-x for x in col]
        proj_rows.append(row)
        sec_cols.append(col)
    group = FGAbelianGroup(len(free), tuple(diag[i] for i in tors))
    proj = IntegerMatrix.from_rows(proj_rows, m)
    # prefer a standard basis vector as representative when one projects exactly
    images = [[x % d if d else x for x, d in zip(proj.column(j), group.orders)] for j in range(m)]
    for c in range(group.ngens):
        target = [int(i == c) for i in range(group.ngens)]
        hit = next((j for j in range(m) if images[j] == target), None)
        if hit is not None:
            sec_cols[c] = [int(i == hit) for i in range(m)]
    return Quotient(group, proj, matrix_from_columns(sec_cols, m))


def cokernel(A: IntegerMatrix) -> FGAbelianGroup:
    """``Z^rows / im(A)`` in invariant-factor form; see :func:`quotient` for the maps."""
    return quotient(A).group


def presented_group(orders: Sequence[int], extra_relations: Sequence[Sequence[int]] = ()) -> Quotient:
    """Quotient of ``Z^len(orders)`` by ``orders[i] * e_i`` and any extra relation vectors."""
    n = len(orders)
    rels = [[orders[i] if j == i else 0 for j in range(n)] for i in range(n) if orders[i]]
    rels += [list(r) for r in extra_relations]
    return quotient(matrix_from_columns(rels, n))


def direct_sum(*groups: FGAbelianGroup) -> Quotient:
    """Normal form of a direct sum; the quotient's Z^n is the concatenated coordinates."""
    orders = [o for g in groups for o in g.orders]
    return presented_group(orders)
