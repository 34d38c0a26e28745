"""Finite-dimensional associative algebras given by structure constants.

An algebra is a multiplication tensor mu (e_i e_j = sum_k mu[i,j,k] e_k)
plus the coordinate vector of the unit.  Everything downstream (axiom
checks, centers, characters) is exact linear algebra over the chosen
field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import gfpoly
from .checks import Report
from .errors import UsageError
from .fields import CyclotomicField, PrimeField, Rationals
from .linalg import Matrix, Subspace, unit_vector, vec_add, vec_is_zero, vec_scale
from .tensors import SparseTensor3


class AlgebraPresentation:
    def __init__(self, field, dim, mul: SparseTensor3, unit, names=None):
        if mul.dims != (dim, dim, dim):
            raise UsageError("multiplication tensor has wrong dimensions")
        if len(unit) != dim:
            raise UsageError("unit vector has wrong length")
        self.field = field
        self.dim = dim
        self.mul = mul
        self.unit = list(unit)
        self.names = list(names) if names else [f"e{i}" for i in range(dim)]

    def basis_product(self, i, j):
        return self.mul.pair_index().get((i, j), [])

    def product(self, u, v):
        f = self.field
        out = [f.zero] * self.dim
        for i, a in enumerate(u):
            if f.is_zero(a):
                continue
            for j, b in enumerate(v):
                if f.is_zero(b):
                    continue
                ab = f.mul(a, b)
                for k, c in self.basis_product(i, j):
                    out[k] = f.add(out[k], f.mul(ab, c))
        return out

    def product_many(self, vectors):
        acc = list(self.unit)
        for v in vectors:
            acc = self.product(acc, v)
        return acc

    def left_mult_matrix(self, v):
        """Matrix of x -> v * x."""
        cols = [self.product(v, unit_vector(self.field, self.dim, j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols)

    def right_mult_matrix(self, v):
        cols = [self.product(unit_vector(self.field, self.dim, j), v) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols)

    def is_commutative(self):
        for (i, j), terms in sorted(self.mul.pair_index().items()):
            for k, c in terms:
                if self.mul.get(j, i, k) != c:
                    return False
        return True

    def __repr__(self):
        return f"Algebra(dim {self.dim} over {self.field!r})"


def verify_algebra(A: AlgebraPresentation) -> Report:
    """Associativity and two-sided unit law, with the first violating
    basis triple as witness."""
    rep = Report()
    f = A.field
    d = A.dim
    ok = True
    witness = None
    for i in range(d):
        e_i = unit_vector(f, d, i)
        got = A.product(A.unit, e_i)
        if got != e_i:
            ok, witness = False, {"side": "left", "basis": A.names[i]}
            break
        got = A.product(e_i, A.unit)
        if got != e_i:
            ok, witness = False, {"side": "right", "basis": A.names[i]}
            break
    rep.add("unit law", ok, witness)

    ok = True
    witness = None
    basis = [unit_vector(f, d, i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            ij = A.product(basis[i], basis[j])
            for k in range(d):
                lhs = A.product(ij, basis[k])
                rhs = A.product(basis[i], A.product(basis[j], basis[k]))
                if lhs != rhs:
                    ok = False
                    witness = {"triple": (i, j, k)}
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("associativity", ok, witness)
    return rep


def center(A: AlgebraPresentation) -> Subspace:
    """Solutions of [x, e_j] = 0 for every basis e_j, canonical RREF."""
    f = A.field
    d = A.dim
    rows = []
    for j in range(d):
        e_j = unit_vector(f, d, j)
        L = A.left_mult_matrix(e_j)   # x -> e_j x
        R = A.right_mult_matrix(e_j)  # x -> x e_j
        diff = R - L
        rows.extend(diff.rows)
    return Subspace(f, d, Matrix(f, rows).nullspace())


def span_closure(A: AlgebraPresentation, vectors, left=True, right=True, include=()):
    """Smallest subspace containing vectors closed under the requested
    basis multiplications; terminates in at most dim steps."""
    f = A.field
    current = Subspace(f, A.dim, list(vectors) + [list(v) for v in include])
    while True:
        new_vecs = current.vectors()
        added = []
        for v in current.vectors():
            for i in range(A.dim):
                e_i = unit_vector(f, A.dim, i)
                if left:
                    added.append(A.product(e_i, v))
                if right:
                    added.append(A.product(v, e_i))
        bigger = Subspace(f, A.dim, new_vecs + added)
        if bigger.dim == current.dim:
            return current
        current = bigger


def two_sided_ideal(A: AlgebraPresentation, generators) -> Subspace:
    return span_closure(A, generators, left=True, right=True)


def left_ideal(A: AlgebraPresentation, generators) -> Subspace:
    return span_closure(A, generators, left=True, right=False)


def subalgebra_closure(A: AlgebraPresentation, vectors, with_unit=True) -> Subspace:
    f = A.field
    seed = [list(v) for v in vectors]
    if with_unit:
        seed.append(list(A.unit))
    current = Subspace(f, A.dim, seed)
    while True:
        vecs = current.vectors()
        prods = [A.product(u, v) for u in vecs for v in vecs]
        bigger = Subspace(f, A.dim, vecs + prods)
        if bigger.dim == current.dim:
            return current
        current = bigger


def quotient_algebra(A: AlgebraPresentation, ideal: Subspace):
    """Quotient by a two-sided ideal: (B, projection, section).

    The quotient basis is the set of non-pivot coordinates of the ideal's
    RREF, the section lifts them coordinate-wise.
    """
    f = A.field
    comp = ideal.complement_indices()
    qdim = len(comp)
    proj = Matrix.zeros(f, qdim, A.dim)
    for r, i in enumerate(comp):
        proj.rows[r][i] = f.one
    # pivot coordinates reduce into the complement
    for row, pc in zip(ideal.basis.rows, ideal.pivots):
        for r, i in enumerate(comp):
            proj.rows[r][pc] = f.neg(row[i])
    section = Matrix.zeros(f, A.dim, qdim)
    for r, i in enumerate(comp):
        section.rows[i][r] = f.one
    mul = SparseTensor3(f, (qdim, qdim, qdim))
    for s in range(qdim):
        for t in range(qdim):
            prod = proj.apply(_basis_product_vec(A, comp[s], comp[t]))
            for k, c in enumerate(prod):
                if not f.is_zero(c):
                    mul.set(s, t, k, c)
    unit = proj.apply(A.unit)
    names = [f"[{A.names[i]}]" for i in comp]
    B = AlgebraPresentation(f, qdim, mul, unit, names)
    return B, proj, section


def _basis_product_vec(A, i, j):
    f = A.field
    out = [f.zero] * A.dim
    for k, c in A.basis_product(i, j):
        out[k] = c
    return out


def abelianization(A: AlgebraPresentation):
    """Quotient by the two-sided ideal generated by all commutators."""
    f = A.field
    gens = []
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            ij = _basis_product_vec(A, i, j)
            ji = _basis_product_vec(A, j, i)
            comm = [f.sub(a, b) for a, b in zip(ij, ji)]
            if not vec_is_zero(f, comm):
                gens.append(comm)
    if not gens:
        return A, Matrix.identity(f, A.dim), Matrix.identity(f, A.dim)
    ideal = two_sided_ideal(A, gens)
    return quotient_algebra(A, ideal)


# ----------------------------------------------------------------------
# characters: one-dimensional representations
# ----------------------------------------------------------------------

def minimal_polynomial(M: Matrix):
    """Monic minimal polynomial of a square matrix, ascending coefficients."""
    f = M.field
    n = M.nrows
    if n == 0:
        return [f.one]
    powers = [Matrix.identity(f, n)]
    flat_rows = [sum(powers[0].rows, [])]
    for m in range(1, n + 2):
        powers.append(powers[-1] @ M)
        target = sum(powers[-1].rows, [])
        # try to express A^m in previous powers
        cols = Matrix(f, flat_rows).transpose()
        sol = cols.solve(target)
        if sol is not None:
            coeffs = [f.neg(c) for c in sol] + [f.one]
            return coeffs
        flat_rows.append(target)
    raise AssertionError("minimal polynomial not found (unreachable)")


def _rational_roots(poly):
    """All roots in Q with multiplicity; complete by the rational root test."""
    roots = []
    f = list(poly)
    # strip roots at zero
    while len(f) > 1 and f[0] == 0:
        roots.append(Fraction(0))
        f = f[1:]
    while len(f) > 1:
        # integer-scale the polynomial
        lcm = 1
        for c in f:
            lcm = lcm * c.denominator // _gcd_int(lcm, c.denominator)
        g = [int(c * lcm) for c in f]
        a0, an = abs(g[0]), abs(g[-1])
        found = None
        for num in sorted(_divisors(a0)):
            for den in sorted(_divisors(an)):
                for sgn in (1, -1):
                    cand = Fraction(sgn * num, den)
                    if _poly_eval_frac(f, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        f = _deflate_frac(f, found)
    return roots, f


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    if n == 0:
        return []
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _poly_eval_frac(f, x):
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _deflate_frac(f, root):
    out = [Fraction(0)] * (len(f) - 1)
    acc = Fraction(0)
    for i in range(len(f) - 1, 0, -1):
        acc = f[i] + acc * root
        out[i - 1] = acc
    return out


def _poly_eval_field(field, f, x):
    acc = field.zero
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def _deflate_field(field, f, root):
    out = [field.zero] * (len(f) - 1)
    acc = field.zero
    for i in range(len(f) - 1, 0, -1):
        acc = field.add(f[i], field.mul(acc, root))
        out[i - 1] = acc
    return out


def field_roots(field, poly):
    """Roots of poly in the field: (roots with multiplicity, cofactor,
    certified) where certified means the root list is provably complete.

    GF(p) uses full factorization, the rationals use the rational root
    test; cyclotomic fields scan roots of unity and rational candidates,
    so completeness there is certified only when the cofactor splits off
    entirely.
    """
    if isinstance(field, PrimeField):
        rts = gfpoly.roots(field.p, [c % field.p for c in poly])
        flat = []
        for r, m in rts:
            flat.extend([r] * m)
        cof = list(poly)
        for r in flat:
            cof = _deflate_field(field, cof, r)
        return flat, cof, True
    if isinstance(field, Rationals):
        roots, cof = _rational_roots([Fraction(c) for c in poly])
        return roots, cof, True
    if isinstance(field, CyclotomicField):
        candidates = list(field.roots_of_unity())
        candidates.append(field.zero)
        for q in (2, 3, -2, -3):
            candidates.append(field.from_rational(Fraction(q)))
        f = list(poly)
        roots = []
        progress = True
        while len(f) > 1 and progress:
            progress = False
            for cand in candidates:
                if field.is_zero(_poly_eval_field(field, f, cand)):
                    roots.append(cand)
                    f = _deflate_field(field, f, cand)
                    progress = True
                    break
        certified = len(f) <= 1
        return roots, f, certified
    raise UsageError(f"unsupported field {field!r}")


@dataclass
class CharacterList:
    characters: list
    complete: bool
    obstructions: list
    report: Report


def characters(A: AlgebraPresentation, supplied=None) -> CharacterList:
    """All algebra maps A -> k that are visible over the ground field.

    Strategy: quotient by the commutator ideal, then refine the dual of
    the abelianization into joint generalized eigenspaces of the
    transposed multiplication operators; each final piece determines one
    candidate eigenvalue tuple, verified exhaustively on basis pairs.
    Complete over prime fields; over the rationals and cyclotomic fields
    a partial-result flag is set when a minimal polynomial fails to split.

    A user-supplied list (for fields where enumeration is not promised)
    is verified functional by functional and then trusted as complete.
    """
    f = A.field
    if supplied is not None:
        rep = Report()
        accepted = []
        for idx, chi in enumerate(supplied):
            chi = [f.parse(c) if isinstance(c, str) else c for c in chi]
            ok = _is_character(A, chi)
            rep.add(f"supplied functional {idx} is a character", ok)
            if not ok:
                raise UsageError(f"supplied functional {idx} is not an algebra map")
            accepted.append(chi)
        return CharacterList(accepted, True, [], rep)
    B, proj, _section = abelianization(A)
    obstructions = []
    all_split = True

    pieces = [Subspace.full(f, B.dim)]
    for j in range(B.dim):
        Mt = B.left_mult_matrix(unit_vector(f, B.dim, j)).transpose()
        new_pieces = []
        for W in pieces:
            if W.dim == 0:
                continue
            # restrict Mt to W: solve coordinates in the W basis
            basis_cols = Matrix(f, W.vectors()).transpose()
            img_cols = []
            for v in W.vectors():
                img = Mt.apply(v)
                coord = basis_cols.solve(img)
                if coord is None:
                    raise AssertionError("piece not invariant (unreachable)")
                img_cols.append(coord)
            Aw = Matrix.from_columns(f, img_cols)
            mp = minimal_polynomial(Aw)
            roots, cof, certified = field_roots(f, mp)
            if len(cof) > 1:
                all_split = False
                shown = _poly_show(f, cof)
                if shown not in obstructions:
                    obstructions.append(shown)
            for lam in sorted(set(roots), key=lambda x: _scalar_sort_key(f, x)):
                shifted = Aw - Matrix.identity(f, W.dim).scale(lam)
                powered = _matrix_power(shifted, W.dim)
                kern = powered.nullspace()
                vecs = []
                for co in kern:
                    combo = [f.zero] * B.dim
                    for c, bv in zip(co, W.vectors()):
                        combo = vec_add(f, combo, vec_scale(f, c, bv))
                    vecs.append(combo)
                piece = Subspace(f, B.dim, vecs)
                if piece.dim:
                    new_pieces.append(piece)
            # pieces for irreducible cofactors carry no k-valued characters
            # when root extraction is certified; either way they are dropped
        pieces = new_pieces
    # each piece yields one eigenvalue tuple
    rep = Report()
    found = []
    for W in pieces:
        if W.dim == 0:
            continue
        w = W.vectors()[0]
        chi_B = []
        consistent = True
        for j in range(B.dim):
            Mt = B.left_mult_matrix(unit_vector(f, B.dim, j)).transpose()
            img = Mt.apply(w)
            lam = None
            for a, b in zip(img, w):
                if not f.is_zero(b):
                    lam = f.div(a, b)
                    break
            if lam is None:
                lam = f.zero
            chi_B.append(lam)
        # pull back along the abelianization projection
        chi = proj.transpose().apply(chi_B)
        if _is_character(A, chi):
            found.append(chi)
        else:
            consistent = False
        rep.add(f"piece dim {W.dim} yields a character", consistent)
    uniq = []
    for chi in found:
        if chi not in uniq:
            uniq.append(chi)
    uniq.sort(key=lambda v: [_scalar_sort_key(f, c) for c in v])
    complete = isinstance(f, PrimeField) or all_split
    rep.add("multiplicativity verified on all basis pairs", True)
    return CharacterList(uniq, complete, obstructions, rep)


def _is_character(A, chi):
    f = A.field
    one = f.sum(f.mul(c, u) for c, u in zip(chi, A.unit))
    if not f.is_one(one):
        return False
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = f.sum(f.mul(c, chi[k]) for k, c in A.basis_product(i, j))
            if lhs != f.mul(chi[i], chi[j]):
                return False
    return True


def _matrix_power(M: Matrix, e: int) -> Matrix:
    acc = Matrix.identity(M.field, M.nrows)
    for _ in range(e):
        acc = acc @ M
    return acc


def _scalar_sort_key(field, x):
    return str(field.show(x))


def _poly_show(field, poly):
    return "[" + ", ".join(field.show(c) for c in poly) + "]"
