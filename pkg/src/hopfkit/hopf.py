"""Hopf algebras by structure constants and the operations on them.

Conventions, fixed once for the whole package:

* ``mul[i,j,k]``:   e_i e_j = sum_k mul[i,j,k] e_k,
* ``comul[i,j,k]``: Delta(e_i) = sum_{j,k} comul[i,j,k] e_j (x) e_k,
* ``antipode``:     matrix columns are images, S(e_j) = sum_i S[i][j] e_i,
* elements of H (x) H are sparse dicts (i, j) -> scalar on the flat basis
  e_i (x) e_j, and similarly for triple tensors.

The antipode is optional input; when absent it is computed as the
convolution inverse of the identity by one linear solve, and a singular
system is reported as "no antipode" rather than raised.
"""

from __future__ import annotations

from .algebra import (
    AlgebraPresentation,
    characters,
    center,
    left_ideal,
    quotient_algebra,
    verify_algebra,
)
from .checks import Report
from .errors import StructureError, UsageError
from .linalg import Matrix, Subspace, unit_vector
from .tensors import SparseTensor3

# ----------------------------------------------------------------------
# sparse tensor-square / tensor-cube arithmetic
# ----------------------------------------------------------------------


def _put(field, acc, key, val):
    cur = acc.get(key)
    new = field.add(cur, val) if cur is not None else val
    if field.is_zero(new):
        acc.pop(key, None)
    else:
        acc[key] = new


def tt_unit(H) -> dict:
    f = H.field
    out = {}
    for i, a in enumerate(H.unit):
        if f.is_zero(a):
            continue
        for j, b in enumerate(H.unit):
            if not f.is_zero(b):
                _put(f, out, (i, j), f.mul(a, b))
    return out


def tt_outer(H, u, v) -> dict:
    f = H.field
    out = {}
    for i, a in enumerate(u):
        if f.is_zero(a):
            continue
        for j, b in enumerate(v):
            if not f.is_zero(b):
                _put(f, out, (i, j), f.mul(a, b))
    return out


def tt_mul(H, A: dict, B: dict) -> dict:
    f = H.field
    bp = H.algebra.basis_product
    out = {}
    for (i, j), a in A.items():
        for (k, l), b in B.items():
            ab = f.mul(a, b)
            for m, cm in bp(i, k):
                left = f.mul(ab, cm)
                for n, cn in bp(j, l):
                    _put(f, out, (m, n), f.mul(left, cn))
    return out


def tt_flip(A: dict) -> dict:
    return {(j, i): v for (i, j), v in A.items()}


def tt_apply(field, A: dict, M1, M2) -> dict:
    """Apply linear maps legwise; None means identity on that leg."""
    out = {}
    for (i, j), v in A.items():
        col1 = [(i, field.one)] if M1 is None else [
            (r, M1.rows[r][i]) for r in range(M1.nrows) if not field.is_zero(M1.rows[r][i])
        ]
        col2 = [(j, field.one)] if M2 is None else [
            (r, M2.rows[r][j]) for r in range(M2.nrows) if not field.is_zero(M2.rows[r][j])
        ]
        for r1, a in col1:
            va = field.mul(v, a)
            for r2, b in col2:
                _put(field, out, (r1, r2), field.mul(va, b))
    return out


def t3_mul(H, A: dict, B: dict) -> dict:
    f = H.field
    bp = H.algebra.basis_product
    out = {}
    for (i, j, k), a in A.items():
        for (l, m, n), b in B.items():
            ab = f.mul(a, b)
            for p, cp in bp(i, l):
                vp = f.mul(ab, cp)
                for q, cq in bp(j, m):
                    vq = f.mul(vp, cq)
                    for r, cr in bp(k, n):
                        _put(f, out, (p, q, r), f.mul(vq, cr))
    return out


def t3_embed(field, A: dict, spots, unit_vec) -> dict:
    """Place a tensor-square element on two of three legs, the unit on
    the remaining leg; spots is one of (0,1), (0,2), (1,2)."""
    other = ({0, 1, 2} - set(spots)).pop()
    out = {}
    for (i, j), v in A.items():
        for u, a in enumerate(unit_vec):
            if field.is_zero(a):
                continue
            key = [None, None, None]
            key[spots[0]] = i
            key[spots[1]] = j
            key[other] = u
            _put(field, out, tuple(key), field.mul(v, a))
    return out


def comul_leg(H, A: dict, leg: int) -> dict:
    """Apply the comultiplication to one leg of a tensor square."""
    f = H.field
    ci = H.comul.first_index()
    out = {}
    for (i, j), v in A.items():
        src = i if leg == 0 else j
        for (p, q, c) in ci.get(src, []):
            vv = f.mul(v, c)
            key = (p, q, j) if leg == 0 else (i, p, q)
            _put(f, out, key, vv)
    return out


# ----------------------------------------------------------------------
# the HopfAlgebra container
# ----------------------------------------------------------------------


class HopfAlgebra:
    def __init__(self, algebra: AlgebraPresentation, comul: SparseTensor3, counit, antipode=None, names=None):
        self.algebra = algebra
        self.field = algebra.field
        self.dim = algebra.dim
        if comul.dims != (self.dim,) * 3:
            raise UsageError("comultiplication tensor has wrong dimensions")
        if len(counit) != self.dim:
            raise UsageError("counit vector has wrong length")
        self.comul = comul
        self.counit = list(counit)
        self.antipode = antipode
        if names:
            self.algebra.names = list(names)

    @property
    def names(self):
        return self.algebra.names

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def mul(self):
        return self.algebra.mul

    def comul_of(self, vec) -> dict:
        f = self.field
        out = {}
        ci = self.comul.first_index()
        for i, a in enumerate(vec):
            if f.is_zero(a):
                continue
            for (j, k, c) in ci.get(i, []):
                _put(f, out, (j, k), f.mul(a, c))
        return out

    def counit_of(self, vec):
        f = self.field
        return f.sum(f.mul(a, e) for a, e in zip(vec, self.counit))

    def apply_antipode(self, vec):
        if self.antipode is None:
            raise UsageError("this Hopf algebra has no antipode")
        return self.antipode.apply(vec)

    def basis_comul(self, i):
        return self.comul.first_index().get(i, [])

    def delta_square(self, i):
        """(Delta (x) id) Delta e_i as a list of (p, q, r, c)."""
        f = self.field
        out = {}
        for (j, k, c) in self.basis_comul(i):
            for (p, q, c2) in self.basis_comul(j):
                _put(f, out, (p, q, k), f.mul(c, c2))
        return sorted(out.items())

    def is_cocommutative(self):
        for (i, j, k), v in self.comul.items_sorted():
            if self.comul.get(i, k, j) != v:
                return False
        return True

    def __repr__(self):
        return f"HopfAlgebra(dim {self.dim} over {self.field!r})"


def solve_antipode(H: HopfAlgebra):
    """Convolution inverse of the identity, or None if the linear system
    is singular (the bialgebra has no antipode)."""
    f = H.field
    d = H.dim
    rows = []
    rhs = []
    mul_pi = H.mul.pair_index()
    for i in range(d):
        terms = H.basis_comul(i)
        for t in range(d):
            row = [f.zero] * (d * d)
            for (j, k, c) in terms:
                for s in range(d):
                    for (tt, mv) in mul_pi.get((s, k), []):
                        if tt == t:
                            col = s * d + j
                            row[col] = f.add(row[col], f.mul(c, mv))
            rows.append(row)
            rhs.append(f.mul(H.counit[i], H.unit[t]))
    sol = Matrix(f, rows).solve(rhs)
    if sol is None:
        return None
    S = Matrix.zeros(f, d, d)
    for s in range(d):
        for j in range(d):
            S.rows[s][j] = sol[s * d + j]
    # the solve produces a left convolution inverse; confirm the right law
    if not _antipode_ok(H, S):
        return None
    return S


def _antipode_ok(H, S):
    f = H.field
    d = H.dim
    for i in range(d):
        left = [f.zero] * d
        right = [f.zero] * d
        for (j, k, c) in H.basis_comul(i):
            sj = S.column(j)
            prod = H.algebra.product(sj, unit_vector(f, d, k))
            for t in range(d):
                left[t] = f.add(left[t], f.mul(c, prod[t]))
            sk = S.column(k)
            prod = H.algebra.product(unit_vector(f, d, j), sk)
            for t in range(d):
                right[t] = f.add(right[t], f.mul(c, prod[t]))
        target = [f.mul(H.counit[i], u) for u in H.unit]
        if left != target or right != target:
            return False
    return True


def verify_hopf(H: HopfAlgebra) -> Report:
    """Full axiom run; failures carry the first violating basis index."""
    f = H.field
    d = H.dim
    rep = Report()
    rep.extend(verify_algebra(H.algebra))

    ok, wit = True, None
    for i in range(d):
        lhs = {}
        rhs = {}
        for (j, k, c) in H.basis_comul(i):
            for (p, q, c2) in H.basis_comul(j):
                _put(f, lhs, (p, q, k), f.mul(c, c2))
            for (p, q, c2) in H.basis_comul(k):
                _put(f, rhs, (j, p, q), f.mul(c, c2))
        if lhs != rhs:
            ok, wit = False, {"basis": H.names[i]}
            break
    rep.add("coassociativity", ok, wit)

    ok, wit = True, None
    for i in range(d):
        left = [f.zero] * d
        right = [f.zero] * d
        for (j, k, c) in H.basis_comul(i):
            left[k] = f.add(left[k], f.mul(c, H.counit[j]))
            right[j] = f.add(right[j], f.mul(c, H.counit[k]))
        e_i = unit_vector(f, d, i)
        if left != e_i or right != e_i:
            ok, wit = False, {"basis": H.names[i]}
            break
    rep.add("counit law", ok, wit)

    ok = H.comul_of(H.unit) == tt_unit(H)
    rep.add("comultiplication of the unit", ok)
    ok, wit = True, None
    for i in range(d):
        for j in range(d):
            lhs = {}
            for (k, c) in H.algebra.basis_product(i, j):
                for (p, q, c2) in H.basis_comul(k):
                    _put(f, lhs, (p, q), f.mul(c, c2))
            rhs = tt_mul(H, dict(_basis_tt(H, i)), dict(_basis_tt(H, j)))
            if lhs != rhs:
                ok, wit = False, {"pair": (H.names[i], H.names[j])}
                break
        if not ok:
            break
    rep.add("comultiplication is an algebra map", ok, wit)

    ok = f.is_one(H.counit_of(H.unit))
    wit = None
    if ok:
        for i in range(d):
            for j in range(d):
                lhs = f.sum(f.mul(c, H.counit[k]) for (k, c) in H.algebra.basis_product(i, j))
                if lhs != f.mul(H.counit[i], H.counit[j]):
                    ok, wit = False, {"pair": (H.names[i], H.names[j])}
                    break
            if not ok:
                break
    rep.add("counit is an algebra map", ok, wit)

    if H.antipode is None:
        solved = solve_antipode(H)
        if solved is None:
            rep.add("antipode exists", False, "convolution system is singular")
            return rep
        H.antipode = solved
        rep.add("antipode exists", True, "computed by convolution inversion")
    else:
        rep.add("antipode exists", True)
    rep.add("antipode law", _antipode_ok(H, H.antipode))
    return rep


def _basis_tt(H, i):
    return [((j, k), c) for (j, k, c) in H.basis_comul(i)]


# ----------------------------------------------------------------------
# morphisms
# ----------------------------------------------------------------------


class HopfMorphism:
    def __init__(self, source: HopfAlgebra, target: HopfAlgebra, matrix: Matrix):
        if matrix.shape != (target.dim, source.dim):
            raise UsageError(
                f"morphism matrix must be {target.dim}x{source.dim}, got {matrix.shape}"
            )
        if source.field != target.field:
            raise UsageError("morphism endpoints live over different fields")
        self.source = source
        self.target = target
        self.matrix = matrix
        self._report = None

    def __call__(self, vec):
        return self.matrix.apply(vec)

    def verify(self) -> Report:
        if self._report is None:
            self._report = verify_morphism(self)
        return self._report

    @property
    def verified(self) -> bool:
        return self._report is not None and self._report.ok

    def is_surjective(self):
        return self.matrix.rank() == self.target.dim

    def is_injective(self):
        return self.matrix.rank() == self.source.dim

    def __repr__(self):
        return f"HopfMorphism({self.source!r} -> {self.target!r})"


def identity_morphism(H: HopfAlgebra) -> HopfMorphism:
    return HopfMorphism(H, H, Matrix.identity(H.field, H.dim))


def verify_morphism(fmor: HopfMorphism) -> Report:
    """Intertwining with multiplication, unit, comultiplication, counit
    on all basis pairs (a bijective such map then preserves S as well)."""
    rep = Report()
    A, B, M = fmor.source, fmor.target, fmor.matrix
    f = A.field
    rep.add("sends unit to unit", M.apply(A.unit) == B.unit)

    ok, wit = True, None
    images = [M.column(i) for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = [f.zero] * B.dim
            for (k, c) in A.algebra.basis_product(i, j):
                img = images[k]
                for t in range(B.dim):
                    lhs[t] = f.add(lhs[t], f.mul(c, img[t]))
            rhs = B.algebra.product(images[i], images[j])
            if lhs != rhs:
                ok, wit = False, {"pair": (A.names[i], A.names[j])}
                break
        if not ok:
            break
    rep.add("multiplicative", ok, wit)

    ok, wit = True, None
    for i in range(A.dim):
        lhs = tt_apply(f, dict(_basis_tt(A, i)), M, M)
        rhs = B.comul_of(images[i])
        if lhs != rhs:
            ok, wit = False, {"basis": A.names[i]}
            break
    rep.add("comultiplicative", ok, wit)

    ok, wit = True, None
    for i in range(A.dim):
        if B.counit_of(images[i]) != A.counit[i]:
            ok, wit = False, {"basis": A.names[i]}
            break
    rep.add("preserves counit", ok, wit)
    return rep


# ----------------------------------------------------------------------
# duals, tensor products, op/cop
# ----------------------------------------------------------------------


def dual_hopf(H: HopfAlgebra) -> HopfAlgebra:
    """The dual Hopf algebra on dual-basis coordinates: multiplication is
    the transpose of the comultiplication and vice versa."""
    f = H.field
    d = H.dim
    mul = SparseTensor3(f, (d, d, d))
    for (i, j, k), v in H.comul.items_sorted():
        mul.set(j, k, i, v)
    comul = SparseTensor3(f, (d, d, d))
    for (i, j, k), v in H.mul.items_sorted():
        comul.set(k, i, j, v)
    if H.antipode is None:
        raise UsageError("dual requires an antipode")
    names = [f"{n}*" for n in H.names]
    alg = AlgebraPresentation(f, d, mul, list(H.counit), names)
    return HopfAlgebra(alg, comul, list(H.unit), H.antipode.transpose(), names)


def tensor_hopf(H1: HopfAlgebra, H2: HopfAlgebra) -> HopfAlgebra:
    """Componentwise structure on the flat-indexed tensor basis
    e_i (x) e_j -> i * dim2 + j."""
    if H1.field != H2.field:
        raise UsageError("tensor factors live over different fields")
    f = H1.field
    d1, d2 = H1.dim, H2.dim
    d = d1 * d2
    mul = SparseTensor3(f, (d, d, d))
    for (i, k, m), v1 in H1.mul.items_sorted():
        for (j, l, n), v2 in H2.mul.items_sorted():
            mul.set(i * d2 + j, k * d2 + l, m * d2 + n, f.mul(v1, v2))
    comul = SparseTensor3(f, (d, d, d))
    for (i, p, q), v1 in H1.comul.items_sorted():
        for (j, r, s), v2 in H2.comul.items_sorted():
            comul.set(i * d2 + j, p * d2 + r, q * d2 + s, f.mul(v1, v2))
    unit = [f.zero] * d
    for i, a in enumerate(H1.unit):
        for j, b in enumerate(H2.unit):
            unit[i * d2 + j] = f.mul(a, b)
    counit = [f.mul(H1.counit[i], H2.counit[j]) for i in range(d1) for j in range(d2)]
    names = [f"{a}@{b}" for a in H1.names for b in H2.names]
    if H1.antipode is None or H2.antipode is None:
        antipode = None
    else:
        antipode = H1.antipode.kron(H2.antipode)
    alg = AlgebraPresentation(f, d, mul, unit, names)
    return HopfAlgebra(alg, comul, counit, antipode, names)


def op_cop(H: HopfAlgebra, variant: str):
    """Flip the multiplication (op) or the comultiplication (cop), keeping
    the antipode as given; returns (hopf, report, s_inverse_repairs).

    The verifier reports whether the antipode law holds with the stated S
    and, on failure, whether substituting the inverse of S repairs it.
    """
    f = H.field
    d = H.dim
    if variant == "op":
        mul = SparseTensor3(f, (d, d, d))
        for (i, j, k), v in H.mul.items_sorted():
            mul.set(j, i, k, v)
        alg = AlgebraPresentation(f, d, mul, list(H.unit), list(H.names))
        out = HopfAlgebra(alg, H.comul, list(H.counit), H.antipode, list(H.names))
    elif variant == "cop":
        comul = SparseTensor3(f, (d, d, d))
        for (i, j, k), v in H.comul.items_sorted():
            comul.set(i, k, j, v)
        out = HopfAlgebra(H.algebra, comul, list(H.counit), H.antipode, list(H.names))
    else:
        raise UsageError("variant must be 'op' or 'cop'")
    rep = verify_hopf(out)
    repaired = None
    if not rep.ok and H.antipode is not None:
        inv = H.antipode.inverse()
        if inv is not None and _antipode_ok(out, inv):
            repaired = True
            rep.add("antipode law holds with S inverse instead", True)
        else:
            repaired = False
    return out, rep, repaired


# ----------------------------------------------------------------------
# group-likes
# ----------------------------------------------------------------------


class GroupLikeData:
    def __init__(self, elements, table, orders, central_flags, complete, report):
        self.elements = elements
        self.table = table
        self.orders = orders
        self.central_flags = central_flags
        self.complete = complete
        self.report = report

    def __len__(self):
        return len(self.elements)


def grouplikes(H: HopfAlgebra, supplied=None) -> GroupLikeData:
    """Group-like elements, found as characters of the dual algebra and
    re-verified against Delta(g) = g (x) g and eps(g) = 1.  A verified
    user-supplied list is accepted where enumeration is not promised."""
    f = H.field
    dual = dual_hopf(H)
    chars = characters(dual.algebra, supplied=supplied)
    rep = Report()
    elements = []
    for chi in chars.characters:
        g = list(chi)  # coordinates of g in the basis of H
        ok = H.comul_of(g) == tt_outer(H, g, g) and f.is_one(H.counit_of(g))
        rep.add("group-like verified", ok, None if ok else {"element": g})
        if ok:
            elements.append(g)
    # group table
    table = []
    for gi in elements:
        row = []
        for gj in elements:
            prod = H.algebra.product(gi, gj)
            row.append(elements.index(prod) if prod in elements else None)
        table.append(row)
    rep.add("group-likes closed under product", all(all(x is not None for x in r) for r in table))
    orders = []
    for g in elements:
        acc = list(g)
        order = None
        for k in range(1, H.dim + 2):
            if acc == H.unit:
                order = k
                break
            acc = H.algebra.product(acc, g)
        orders.append(order)
    Z = center(H.algebra)
    central_flags = [Z.contains(g) for g in elements]
    return GroupLikeData(elements, table, orders, central_flags, chars.complete, rep)


# ----------------------------------------------------------------------
# coinvariants and coideal subalgebras
# ----------------------------------------------------------------------


def coinvariants(H: HopfAlgebra, pi: HopfMorphism, side: str = "right") -> Subspace:
    """Right: solutions of (id (x) pi) Delta h = h (x) 1; left mirrors it."""
    f = H.field
    d = H.dim
    K = pi.target
    P = pi.matrix
    unit_K = K.unit
    rows = []
    ci = H.comul.first_index()
    if side == "right":
        for j in range(d):
            for b in range(K.dim):
                row = [f.zero] * d
                for i in range(d):
                    acc = f.zero
                    for (jj, k, c) in ci.get(i, []):
                        if jj == j:
                            acc = f.add(acc, f.mul(c, P.rows[b][k]))
                    if i == j:
                        acc = f.sub(acc, unit_K[b])
                    row[i] = acc
                rows.append(row)
    elif side == "left":
        for k in range(d):
            for b in range(K.dim):
                row = [f.zero] * d
                for i in range(d):
                    acc = f.zero
                    for (j, kk, c) in ci.get(i, []):
                        if kk == k:
                            acc = f.add(acc, f.mul(c, P.rows[b][j]))
                    if i == k:
                        acc = f.sub(acc, unit_K[b])
                    row[i] = acc
                rows.append(row)
    else:
        raise UsageError("side must be 'right' or 'left'")
    return Subspace(f, d, Matrix(f, rows).nullspace())


def is_normal_left_coideal_subalgebra(H: HopfAlgebra, L: Subspace) -> Report:
    """Clauses: (a) unital subalgebra, (b) Delta(L) in H (x) L,
    (c) stability under the adjoint action h_(1) l S(h_(2))."""
    rep = Report()
    f = H.field
    vecs = L.vectors()
    ok, wit = L.contains(H.unit), None
    for u in vecs:
        for v in vecs:
            if not L.contains(H.algebra.product(u, v)):
                ok, wit = False, {"pair": (u, v)}
                break
        if not ok:
            break
    rep.add("subalgebra", ok, wit)

    ok, wit = True, None
    for v in vecs:
        tt = H.comul_of(v)
        by_first = {}
        for (j, k), c in tt.items():
            by_first.setdefault(j, [f.zero] * H.dim)[k] = c
        for j, w in sorted(by_first.items()):
            if not L.contains(w):
                ok, wit = False, {"vector": v, "first_leg": H.names[j]}
                break
        if not ok:
            break
    rep.add("left coideal", ok, wit)

    ok, wit = True, None
    if H.antipode is None:
        ok, wit = False, "no antipode available"
    else:
        for i in range(H.dim):
            terms = H.basis_comul(i)
            for v in vecs:
                out = [f.zero] * H.dim
                for (p, q, c) in terms:
                    sq = H.antipode.column(q)
                    mid = H.algebra.product(v, sq)
                    full = H.algebra.product(unit_vector(f, H.dim, p), mid)
                    for t in range(H.dim):
                        out[t] = f.add(out[t], f.mul(c, full[t]))
                if not L.contains(out):
                    ok, wit = False, {"basis": H.names[i], "vector": v}
                    break
            if not ok:
                break
    rep.add("adjoint stability", ok, wit)
    return rep


class QuotientData:
    def __init__(self, projection: HopfMorphism, section: Matrix, ideal: Subspace, quotient: HopfAlgebra):
        self.projection = projection
        self.section = section
        self.ideal = ideal
        self.quotient = quotient

    def __repr__(self):
        return f"QuotientData(dim {self.quotient.dim} of {self.projection.source.dim})"


def quotient_by_coideal(H: HopfAlgebra, L: Subspace) -> QuotientData:
    """Quotient of H by the Hopf ideal generated by L cap ker(eps).

    Raises StructureError with a witness when the ideal fails to be a
    two-sided coideal stable under S (the signal that L was not a normal
    left coideal subalgebra).
    """
    f = H.field
    d = H.dim
    eps_kernel = Subspace(f, d, Matrix(f, [list(H.counit)]).nullspace())
    Lplus = L.intersect(eps_kernel)
    ideal = left_ideal(H.algebra, Lplus.vectors()) if Lplus.dim else Subspace.zero(f, d)

    # two-sidedness, coideal property, counit vanishing, S-stability
    for v in ideal.vectors():
        for i in range(d):
            if not ideal.contains(H.algebra.product(v, unit_vector(f, d, i))):
                raise StructureError("ideal is not right-stable", witness={"vector": v, "basis": H.names[i]})
        if not f.is_zero(H.counit_of(v)):
            raise StructureError("counit does not vanish on the ideal", witness={"vector": v})
        if H.antipode is not None and not ideal.contains(H.apply_antipode(v)):
            raise StructureError("ideal is not antipode-stable", witness={"vector": v})

    B, proj, section = quotient_algebra(H.algebra, ideal)
    qd = B.dim
    for v in ideal.vectors():
        img = tt_apply(f, H.comul_of(v), proj, proj)
        if img:
            raise StructureError("ideal is not a coideal", witness={"vector": v})

    comul = SparseTensor3(f, (qd, qd, qd))
    comp = ideal.complement_indices()
    for t in range(qd):
        img = tt_apply(f, dict(_basis_tt(H, comp[t])), proj, proj)
        for (j, k), v in sorted(img.items()):
            comul.set(t, j, k, v)
    counit = [H.counit[i] for i in comp]
    antipode = None
    if H.antipode is not None:
        antipode = proj @ H.antipode @ section
    K = HopfAlgebra(B, comul, counit, antipode, B.names)
    projection = HopfMorphism(H, K, proj)
    projection.verify()
    if not projection.verified:
        raise StructureError("quotient projection failed to be a Hopf map",
                             witness=projection.verify().first_failure().name)
    if (proj @ section) != Matrix.identity(f, qd):
        raise AssertionError("projection composed with section is not the identity")
    return QuotientData(projection, section, ideal, K)


# ----------------------------------------------------------------------
# skew-primitives and desk-scale isomorphism search
# ----------------------------------------------------------------------


def skew_primitive_space(H: HopfAlgebra, g, h) -> Subspace:
    """Solutions of Delta(v) = v (x) g + h (x) v for group-likes g, h."""
    f = H.field
    d = H.dim
    rows = {}
    for i in range(d):
        for (j, k, c) in H.basis_comul(i):
            rows.setdefault((j, k), [f.zero] * d)[i] = f.add(
                rows.setdefault((j, k), [f.zero] * d)[i], c
            )
    eqs = []
    keys = set(rows)
    for j in range(d):
        for k in range(d):
            if not (f.is_zero(g[k]) and f.is_zero(h[j])) or (j, k) in keys:
                row = list(rows.get((j, k), [f.zero] * d))
                row[j] = f.sub(row[j], g[k])
                row[k] = f.sub(row[k], h[j])
                eqs.append(row)
    return Subspace(f, d, Matrix(f, eqs).nullspace())


def _iso_scalar_grid(field):
    from fractions import Fraction

    from .fields import CyclotomicField, PrimeField

    if isinstance(field, PrimeField) and field.p <= 13:
        return [x for x in range(1, field.p)]
    if isinstance(field, CyclotomicField):
        grid = [u for u in field.roots_of_unity()]
        grid += [field.from_rational(Fraction(v)) for v in (2, -2)]
        return grid
    return [field.parse(s) for s in ("1", "-1", "2", "-2", "1/2", "-1/2", "3", "-3")]


def _signature(H: HopfAlgebra):
    gl = grouplikes(H)
    return (
        H.dim,
        H.algebra.is_commutative(),
        H.is_cocommutative(),
        center(H.algebra).dim,
        tuple(sorted(o for o in gl.orders if o is not None)),
        gl.complete,
    )


def _word_basis(H: HopfAlgebra, gens):
    """Products of generators spanning H, as (words, vectors); None if the
    generators do not generate."""
    f = H.field
    words = [()]
    vectors = [list(H.unit)]
    span = Subspace(f, H.dim, vectors)
    frontier = [()]
    while span.dim < H.dim and frontier:
        new_frontier = []
        for w in frontier:
            base = vectors[words.index(w)]
            for gi, gvec in enumerate(gens):
                cand = H.algebra.product(base, gvec)
                if not span.contains(cand):
                    word = w + (gi,)
                    words.append(word)
                    vectors.append(cand)
                    span = Subspace(f, H.dim, vectors)
                    new_frontier.append(word)
                    if span.dim == H.dim:
                        break
            if span.dim == H.dim:
                break
        frontier = new_frontier
    if span.dim != H.dim:
        return None
    return words, vectors


def find_hopf_isomorphism(A: HopfAlgebra, B: HopfAlgebra, grid=None):
    """Search for a verified Hopf isomorphism A -> B at desk scale.

    Group-likes are matched by order, skew-primitive generators by their
    group-like type with images scanned over a fixed scalar grid; every
    candidate is extended along a word basis and fully verified.  Returns
    a verified HopfMorphism or None (the search is sound, not complete).
    """
    import itertools

    f = A.field
    if _signature(A) != _signature(B):
        return None
    glA, glB = grouplikes(A), grouplikes(B)
    gens = []
    gen_kinds = []
    nontrivial = [(g, o) for g, o in zip(glA.elements, glA.orders) if g != A.unit]
    for g, o in nontrivial:
        gens.append(g)
        gen_kinds.append(("grouplike", o))
    span = subalgebra_closure_of(A, gens)
    if span.dim < A.dim:
        pairs = [(g, h) for g in glA.elements for h in glA.elements]
        for g, h in pairs:
            P = skew_primitive_space(A, g, h)
            for v in P.vectors():
                if not span.contains(v):
                    gens.append(v)
                    gen_kinds.append(("skew", (glA.elements.index(g), glA.elements.index(h))))
                    span = subalgebra_closure_of(A, gens)
                    if span.dim == A.dim:
                        break
            if span.dim == A.dim:
                break
    if span.dim < A.dim:
        return None
    wb = _word_basis(A, gens)
    if wb is None:
        return None
    words, vectors = wb
    word_matrix = Matrix.from_columns(f, vectors)

    grid = grid if grid is not None else _iso_scalar_grid(f)
    candidate_sets = []
    for kind, datum in gen_kinds:
        if kind == "grouplike":
            cands = [g for g, o in zip(glB.elements, glB.orders) if o == datum]
        else:
            gi, hi = datum
            gB = _matched_grouplike(glA, glB, gi)
            hB = _matched_grouplike(glA, glB, hi)
            cands = []
            for gB_el in gB:
                for hB_el in hB:
                    P = skew_primitive_space(B, gB_el, hB_el)
                    for w in P.vectors():
                        for alpha in grid:
                            cands.append([f.mul(alpha, x) for x in w])
        if not cands:
            return None
        candidate_sets.append(cands)

    for assignment in itertools.product(*candidate_sets):
        img_cols = []
        for w in words:
            vec = list(B.unit)
            for gi in w:
                vec = B.algebra.product(vec, list(assignment[gi]))
            img_cols.append(vec)
        img_matrix = Matrix.from_columns(f, img_cols)
        M = _solve_change_of_basis(word_matrix, img_matrix)
        if M is None or M.rank() != A.dim:
            continue
        mor = HopfMorphism(A, B, M)
        if mor.verify().ok:
            return mor
    return None


def _matched_grouplike(glA, glB, idx):
    order = glA.orders[idx]
    return [g for g, o in zip(glB.elements, glB.orders) if o == order]


def _solve_change_of_basis(word_matrix: Matrix, img_matrix: Matrix):
    """M with M @ word_matrix = img_matrix."""
    f = word_matrix.field
    wt = word_matrix.transpose()
    cols = []
    for r in range(img_matrix.nrows):
        sol = wt.solve(img_matrix.row(r))
        if sol is None:
            return None
        cols.append(sol)
    # rows of M solve word_matrix^T m_r = img_row; assemble M from rows
    return Matrix(f, cols)


def subalgebra_closure_of(H: HopfAlgebra, vectors) -> Subspace:
    from .algebra import subalgebra_closure

    return subalgebra_closure(H.algebra, vectors, with_unit=True)


# ----------------------------------------------------------------------
# extensions
# ----------------------------------------------------------------------


def verify_extension(iota: HopfMorphism, pi: HopfMorphism) -> Report:
    """The four clauses of a Hopf algebra extension A -> H -> K."""
    rep = Report()
    A, H = iota.source, iota.target
    K = pi.target
    f = H.field
    rep.add("injective inclusion", iota.is_injective())
    rep.add("surjective projection", pi.is_surjective())
    image = Subspace(f, H.dim, [iota.matrix.column(i) for i in range(A.dim)])
    coinv = coinvariants(H, pi, "right")
    rep.add("image equals right coinvariants", image == coinv)
    eps_kernel_A = Subspace(f, A.dim, Matrix(f, [list(A.counit)]).nullspace())
    aplus_in_H = [iota.matrix.apply(v) for v in eps_kernel_A.vectors()]
    hap = left_ideal(H.algebra, aplus_in_H) if aplus_in_H else Subspace.zero(f, H.dim)
    kernel = Subspace(f, H.dim, pi.matrix.nullspace())
    rep.add("kernel equals H times A-plus", hap == kernel)
    return rep
