"""Ideals of the truncated algebra as canonical linear subspaces.

An ideal is stored as the reduced row echelon basis of its coefficient
span over the ordered monomial basis, together with the generators it
was built from.  RREF is unique for the fixed monomial order, so ideal
equality is literal equality of basis matrices.

Because the monomial order is graded, multiplication by a generator
moves every basis column strictly to the right.  Two structural
consequences are used throughout: the span of an ideal's rows with pivot
degree >= j is exactly its intersection with m^j, and the span of the
per-row lowest-degree components is exactly the associated graded ideal.
"""

from __future__ import annotations

from .algebra import (AlgebraContext, NilPolynomial, Automorphism,
                      InternalCheckError, make_context, linear_polynomial)
from .linalg import RowSpace, nullspace


class Ideal:
    __slots__ = ("ctx", "rows", "pivots", "generators")

    def __init__(self, ctx: AlgebraContext, rows, pivots, generators):
        self.ctx = ctx
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)
        self.generators = tuple(generators)

    # --- basic data ------------------------------------------------------
    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def colength(self) -> int:
        return self.ctx.dim - self.rank

    def basis_polynomials(self) -> list[NilPolynomial]:
        return [NilPolynomial.from_vector(self.ctx, r) for r in self.rows]

    def complement_monomials(self) -> list[int]:
        """Indices of the non-pivot monomials, the canonical coset basis of
        the quotient algebra, in monomial order."""
        pivset = set(self.pivots)
        return [i for i in range(self.ctx.dim) if i not in pivset]

    def _space(self) -> RowSpace:
        sp = RowSpace(self.ctx.field, self.ctx.dim)
        sp.rows = [list(r) for r in self.rows]
        sp.pivots = list(self.pivots)
        return sp

    def reduce(self, f: NilPolynomial) -> NilPolynomial:
        """Canonical representative of f modulo the ideal (supported on the
        complement monomials)."""
        self.ctx.check_same(f.ctx)
        return NilPolynomial.from_vector(self.ctx, self._space().reduce(f.to_vector()))

    def contains(self, f: NilPolynomial) -> bool:
        return self.reduce(f).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        sp = self._space()
        return all(sp.contains(list(r)) for r in other.rows)

    def verify_closure(self) -> None:
        """Check x_i * row stays in the span for every generator and row."""
        sp = self._space()
        for i in range(self.ctx.q):
            shift = self.ctx.shift[i]
            for row in self.rows:
                prod = [self.ctx.field.zero] * self.ctx.dim
                for idx, c in enumerate(row):
                    if c:
                        tgt = shift[idx]
                        if tgt is not None:
                            prod[tgt] = prod[tgt] + c
                if not sp.contains(prod):
                    raise InternalCheckError(
                        f"span is not closed under multiplication by x{i+1}")

    # --- subspace calculus ------------------------------------------------
    def sum(self, other: "Ideal") -> "Ideal":
        self.ctx.check_same(other.ctx)
        sp = self._space()
        sp.extend(list(r) for r in other.rows)
        return Ideal(self.ctx, sp.basis(), sp.pivots,
                     self.generators + other.generators)

    def product(self, other: "Ideal") -> "Ideal":
        """The ideal spanned by pairwise products.

        Generated by the pairwise products of the two generator lists,
        which span the same ideal as products of basis vectors.
        """
        self.ctx.check_same(other.ctx)
        gens = [g * h for g in self.generators for h in other.generators]
        return ideal_from_generators(self.ctx, gens)

    def intersect(self, other: "Ideal") -> "Ideal":
        """Intersection via stacked complements: each row space is cut out
        by its complement functionals, so the intersection is the null
        space of the two functional stacks together."""
        self.ctx.check_same(other.ctx)
        field, dim = self.ctx.field, self.ctx.dim
        funcs = (nullspace(field, [list(r) for r in self.rows], dim)
                 + nullspace(field, [list(r) for r in other.rows], dim))
        vecs = nullspace(field, funcs, dim)
        out = ideal_from_span(self.ctx, vecs)
        return out

    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.ctx.same(other.ctx)
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ctx.q, self.ctx.n, self.rows))

    def __repr__(self):
        gens = ", ".join(repr(g) for g in self.generators[:4])
        more = ", ..." if len(self.generators) > 4 else ""
        return (f"Ideal(colength={self.colength}, rank={self.rank}, "
                f"generators=[{gens}{more}])")


def ideal_from_generators(ctx: AlgebraContext, gens) -> Ideal:
    """Ideal generated by the given elements: the span of all monomial
    multiples m * g with |m| <= n - 1, which is closed by construction."""
    gens = list(gens)
    for g in gens:
        ctx.check_same(g.ctx)
    sp = RowSpace(ctx.field, ctx.dim)
    for g in gens:
        base = g.to_vector()
        for mono in range(ctx.dim):
            vec = _monomial_multiple(ctx, base, mono)
            if vec is not None:
                sp.insert(vec)
    return Ideal(ctx, sp.basis(), sp.pivots, gens)


def _monomial_multiple(ctx, vec, mono_idx):
    """Coefficient vector of (monomial at mono_idx) * (poly with vector vec),
    or None when the product truncates to zero."""
    exp = ctx.monomials[mono_idx]
    if mono_idx == 0:
        return list(vec)
    out = [ctx.field.zero] * ctx.dim
    hit = False
    for idx, c in enumerate(vec):
        if not c:
            continue
        tgt = idx
        for i, k in enumerate(exp):
            for _ in range(k):
                tgt = ctx.shift[i][tgt]
                if tgt is None:
                    break
            if tgt is None:
                break
        if tgt is not None:
            out[tgt] = out[tgt] + c
            hit = True
    return out if hit else None


def ideal_from_span(ctx: AlgebraContext, vectors, generators=None,
                    check: bool = False) -> Ideal:
    """Ideal whose underlying subspace is spanned by the given coefficient
    vectors.  The span must already be closed under multiplication by the
    generators (pass check=True to verify)."""
    sp = RowSpace(ctx.field, ctx.dim)
    sp.extend(vectors)
    gens = (list(generators) if generators is not None
            else [NilPolynomial.from_vector(ctx, r) for r in sp.basis()])
    out = Ideal(ctx, sp.basis(), sp.pivots, gens)
    if check:
        out.verify_closure()
    return out


def zero_ideal(ctx: AlgebraContext) -> Ideal:
    return Ideal(ctx, (), (), ())


def base_ideal(ctx: AlgebraContext) -> Ideal:
    """The ideal generated by x_2, ..., x_q (zero ideal when q = 1); its
    quotient is the one-variable truncated algebra, so its colength is n."""
    gens = [NilPolynomial.variable(ctx, i) for i in range(2, ctx.q + 1)]
    return ideal_from_generators(ctx, gens)


def power_of_max_ideal(ctx: AlgebraContext, j: int) -> Ideal:
    """m^j: the span of all monomials of total degree >= j (0 <= j <= n)."""
    if not 0 <= j <= ctx.n:
        raise ValueError(f"power {j} out of range 0..{ctx.n}")
    start = ctx.deg_start[j] if j < ctx.n else ctx.dim
    rows = []
    for idx in range(start, ctx.dim):
        vec = [ctx.field.zero] * ctx.dim
        vec[idx] = ctx.field.one
        rows.append(vec)
    if j == 0:
        gens = [NilPolynomial.one(ctx)]
    else:
        end = ctx.deg_start[j + 1] if j < ctx.n else start
        gens = [NilPolynomial.monomial(ctx, ctx.monomials[i])
                for i in range(start, min(end, ctx.dim))]
    return Ideal(ctx, rows, list(range(start, ctx.dim)), gens)


def apply_automorphism(sigma: Automorphism, ideal: Ideal) -> Ideal:
    """Image ideal sigma(I).  Since sigma is a linear bijection the images
    of the basis rows span the image, which is again an ideal."""
    sigma.ctx.check_same(ideal.ctx)
    vecs = [sigma(p).to_vector() for p in ideal.basis_polynomials()]
    gens = [sigma(g) for g in ideal.generators]
    return ideal_from_span(ideal.ctx, vecs, generators=gens)


def associated_graded(ideal: Ideal) -> Ideal:
    """Span of the lowest-degree components of the elements of the ideal.

    With the graded monomial order, the rows of pivot degree >= d span
    exactly I intersect m^d, so the lowest-degree components of the RREF
    rows give a basis; the result is closed and colength is preserved.
    """
    ctx = ideal.ctx
    vecs = []
    for row, piv in zip(ideal.rows, ideal.pivots):
        d = ctx.degree_of_index(piv)
        lo = ctx.deg_start[d]
        hi = ctx.deg_start[d + 1] if d + 1 <= ctx.n - 1 else ctx.dim
        vec = [c if lo <= i < hi else ctx.field.zero for i, c in enumerate(row)]
        vecs.append(vec)
    out = ideal_from_span(ctx, vecs)
    if out.rank != ideal.rank:
        raise InternalCheckError("associated graded changed the colength")
    return out


def truncate(ideal: Ideal, m: int) -> Ideal:
    """Image of the ideal in the smaller algebra truncated at degree m
    (2 <= m < n): drop all terms of degree >= m and re-span."""
    ctx = ideal.ctx
    if not 2 <= m < ctx.n:
        raise ValueError(f"truncation order {m} out of range 2..{ctx.n - 1}")
    tgt = make_context(ctx.q, m, ctx.field)
    vecs = []
    for p in ideal.basis_polynomials():
        q = NilPolynomial(tgt, {e: c for e, c in p.terms.items() if sum(e) < m})
        vecs.append(q.to_vector())
    gens = [NilPolynomial(tgt, {e: c for e, c in g.terms.items() if sum(e) < m})
            for g in ideal.generators]
    return ideal_from_span(tgt, vecs, generators=[g for g in gens if not g.is_zero()])


def _regularity_samples(ctx: AlgebraContext):
    """Deterministic coefficient vectors that decide whether some linear
    combination u of the generators satisfies u^(n-1) outside/inside a
    given set.  Unit vectors come first (cheap common witnesses); then,
    over Q, the integer grid {0..n-1}^q, which is a sound identity test
    because each coefficient appears with degree <= n-1; over F_p the
    whole space F_p^q is exhausted.
    """
    from itertools import product
    field, q, n = ctx.field, ctx.q, ctx.n
    for i in range(q):
        yield [field.one if j == i else field.zero for j in range(q)]
    rng = range(n) if field.name == "Q" else range(field_p(field))
    for a in product(rng, repeat=q):
        yield [field.scalar(v) for v in a]


def field_p(field) -> int:
    return field.p


def is_arr(ideal: Ideal) -> bool:
    """True iff the ideal has colength n and some linear combination u of
    the generators satisfies u^(n-1) not in the ideal.

    Linear u suffice: adding any element of m^2 to u perturbs u^(n-1) only
    by terms of degree >= n, which are zero.
    """
    ctx = ideal.ctx
    if ideal.colength != ctx.n:
        return False
    return regular_parameter(ideal) is not None


def regular_parameter(ideal: Ideal):
    """Coefficients a with (sum a_i x_i)^(n-1) not in the ideal, or None."""
    ctx = ideal.ctx
    for a in _regularity_samples(ctx):
        u = linear_polynomial(ctx, a)
        if u.is_zero():
            continue
        if not ideal.contains(u ** (ctx.n - 1)):
            return a
    return None


def is_linear_ideal(ideal: Ideal) -> bool:
    """True iff the ideal is not contained in m^2, i.e. some element has a
    nonzero linear part.  Kept separate from is_arr on purpose: the two
    predicates agree for colength-n ideals in two variables but diverge
    for q >= 3 (see tests)."""
    ctx = ideal.ctx
    if any(ctx.degree_of_index(p) == 0 for p in ideal.pivots):
        return False  # contains a unit: the whole algebra
    return any(ctx.degree_of_index(p) == 1 for p in ideal.pivots)
