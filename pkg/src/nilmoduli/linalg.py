"""Exact dense linear algebra over Q or F_p.

Matrices are lists of row lists whose entries are field scalars
(Fraction or Fp); nothing here ever touches floating point.  The
workhorse is RowSpace, an incrementally maintained reduced row echelon
form used for span membership, canonical subspace bases and rank.
"""

from __future__ import annotations


class RowSpace:
    """A subspace of k^ncols kept in reduced row echelon form.

    Rows are inserted one at a time; each insertion reduces the vector
    against the current rows, and on success normalizes the new pivot to 1
    and back-substitutes into the older rows.  The resulting basis is the
    canonical RREF of the span, so two equal subspaces produce identical
    row lists.
    """

    def __init__(self, field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: list[list] = []      # kept sorted by pivot column
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: list) -> list:
        """Return the residual of vec after elimination by the current rows."""
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for k in range(p, self.ncols):
                    if row[k]:
                        v[k] = v[k] - c * row[k]
        return v

    def insert(self, vec: list) -> bool:
        """Add vec to the span; returns True if it increased the rank."""
        v = self.reduce(vec)
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            return False
        lead = v[piv]
        if lead != self.field.one:
            v = [c / lead for c in v]
        # clear the new pivot column in the existing rows
        for row in self.rows:
            c = row[piv]
            if c:
                for k in range(piv, self.ncols):
                    if v[k]:
                        row[k] = row[k] - c * v[k]
        at = next((i for i, p in enumerate(self.pivots) if p > piv), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, piv)
        return True

    def extend(self, vecs) -> None:
        for v in vecs:
            self.insert(v)

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def basis(self) -> list[tuple]:
        return [tuple(r) for r in self.rows]


def rref(field, rows):
    """Canonical RREF of a list of row vectors: (rows, pivots)."""
    space = RowSpace(field, len(rows[0]) if rows else 0)
    space.extend(rows)
    return space.basis(), tuple(space.pivots)


def nullspace(field, rows, ncols: int):
    """Basis of the right null space {x : M x = 0} of the matrix with the
    given rows.  Computed from the RREF by the standard non-pivot trick."""
    space = RowSpace(field, ncols)
    space.extend(rows)
    piv_of_col = {p: i for i, p in enumerate(space.pivots)}
    basis = []
    for free in range(ncols):
        if free in piv_of_col:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for p, r in piv_of_col.items():
            v[p] = -space.rows[r][free]
        basis.append(v)
    return basis


def identity_matrix(field, n: int):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def zero_matrix(field, n: int, m: int | None = None):
    m = n if m is None else m
    return [[field.zero] * m for _ in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            s = None
            for t in range(k):
                if ai[t]:
                    term = ai[t] * b[t][j]
                    s = term if s is None else s + term
            row.append(s if s is not None else ai[0] * 0)
        out.append(row)
    return out


def mat_vec(a, v):
    return [sum_entries(row, v) for row in a]


def sum_entries(row, v):
    s = row[0] * v[0]
    for t in range(1, len(row)):
        if row[t]:
            s = s + row[t] * v[t]
    return s


def mat_inv(field, a):
    """Inverse of a square matrix, or None if singular."""
    n = len(a)
    aug = [list(a[i]) + [field.one if j == i else field.zero for j in range(n)]
           for i in range(n)]
    col = 0
    for i in range(n):
        r = next((r for r in range(i, n) if aug[r][col]), None)
        if r is None:
            return None
        aug[i], aug[r] = aug[r], aug[i]
        lead = aug[i][col]
        if lead != field.one:
            aug[i] = [c / lead for c in aug[i]]
        for r2 in range(n):
            if r2 != i and aug[r2][col]:
                c = aug[r2][col]
                aug[r2] = [x - c * y for x, y in zip(aug[r2], aug[i])]
        col += 1
    return [row[n:] for row in aug]


def mat_eq(a, b) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def transpose(a):
    return [list(col) for col in zip(*a)]


def column_rank(field, a) -> int:
    space = RowSpace(field, len(a))
    for col in transpose(a):
        space.insert(col)
    return space.rank
