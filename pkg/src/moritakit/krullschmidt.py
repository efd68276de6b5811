"""Radicals, indecomposable decompositions, isomorphism and add-closure tests."""

from __future__ import annotations

import random
from dataclasses import dataclass

from sympy.polys.domains import GF as sympy_GF
from sympy.polys.domains import QQ as sympy_QQ
from sympy.polys.matrices import DomainMatrix
from sympy import Poly, Symbol

from .algebra import Algebra, with_idempotents
from .errors import InternalError, NotSplit, UnsupportedCharacteristic
from .exactlin import Matrix, Subspace, inverse, null_vectors, rank, to_fraction
from .modules import (
    Module,
    ModuleHom,
    end_algebra,
    hom_space,
    image_module,
    kernel_module,
    regular_module,
    submodule,
)


def _check_characteristic(dim: int, p: int) -> None:
    if p and p <= dim:
        raise UnsupportedCharacteristic(
            f"radical needs characteristic 0 or a prime above the dimension {dim}, got {p}")


def algebra_radical(b: Algebra) -> Subspace:
    """Kernel of the trace form ``(x, y) -> Tr(L_{xy})``."""
    n, f = b.dim, b.field
    _check_characteristic(n, f.characteristic)
    tau = [m.trace() for m in b.left_matrices()]
    gram: list[dict] = []
    for i in range(n):
        row = {}
        for j in range(n):
            s = 0
            for k, c in b.mult[i][j].items():
                s += c * tau[k]
            s = f(s)
            if s:
                row[j] = s
        gram.append(row)
    return Subspace.from_vectors(null_vectors(gram, n, f), n, f)


def end_radical(m: Module):
    """``(HomSpace, radical subspace)`` for ``End(m)`` via the trace form on ``m``."""
    if "end_rad" not in m._cache:
        hs = hom_space(m, m)
        f = m.field
        _check_characteristic(m.dim, f.characteristic)
        basis = hs.basis
        r = len(basis)
        gram = []
        for i in range(r):
            row = {}
            for j in range(r):
                s = basis[i].trace_of_product(basis[j])
                if s:
                    row[j] = s
            gram.append(row)
        ker = null_vectors(gram, r, f)
        m._cache["end_rad"] = (hs, Subspace.from_vectors(ker, r, f))
    return m._cache["end_rad"]


def is_local_end(m: Module) -> bool:
    hs, rad = end_radical(m)
    return hs.dim - rad.dim == 1


# ---------------------------------------------------------------------------
# decomposition


@dataclass
class Summand:
    module: Module
    inclusion: ModuleHom  # summand -> m
    projection: ModuleHom  # m -> summand


@dataclass
class Decomposition:
    module: Module
    pieces: list[Summand]  # one per indecomposable summand, with repetition
    classes: list[list[int]]  # indices of pieces grouped by isomorphism type

    @property
    def summands(self) -> list[tuple[Module, int]]:
        return [(self.pieces[c[0]].module, len(c)) for c in self.classes]

    def certificate_ok(self) -> bool:
        m = self.module
        f = m.field
        total = Matrix.zeros(m.dim, m.dim, f)
        for s in self.pieces:
            if not (s.projection.matrix @ s.inclusion.matrix).is_identity():
                return False
            total = total + s.inclusion.matrix @ s.projection.matrix
        for i, s in enumerate(self.pieces):
            for j, t in enumerate(self.pieces):
                if i != j and not (t.projection.matrix @ s.inclusion.matrix).is_zero():
                    return False
        return total.is_identity() if m.dim else True


def _charpoly(mat: Matrix):
    f = mat.field
    p = f.characteristic
    if p:
        dom = sympy_GF(p)
        rows = [[dom(int(mat[i, j])) for j in range(mat.ncols)] for i in range(mat.nrows)]
    else:
        dom = sympy_QQ
        rows = [[dom(to_fraction(mat[i, j]).numerator, to_fraction(mat[i, j]).denominator)
                 for j in range(mat.ncols)] for i in range(mat.nrows)]
    dm = DomainMatrix(rows, (mat.nrows, mat.ncols), dom)
    coeffs = dm.charpoly()
    x = Symbol("x")
    return Poly([dom.to_sympy(c) for c in coeffs], x, modulus=p if p else None)


def _splitting_eigenvalue(mat: Matrix):
    """A rational eigenvalue ``lam`` with charpoly not a power of ``(x - lam)``."""
    if mat.nrows == 0:
        return None
    poly = _charpoly(mat)
    f = mat.field
    roots = poly.ground_roots()
    if not roots:
        return None
    if len(roots) == 1 and sum(roots.values()) == poly.degree():
        return None
    lam = min(roots, key=lambda r: (abs(r), r))
    if f.characteristic:
        return f(int(lam))
    return f(str(lam))


def _shifted_power(mat: Matrix, lam) -> Matrix:
    f = mat.field
    n = mat.nrows
    psi = mat - Matrix.identity(n, f).scale(lam)
    return psi.power(n)


def _split_once(m: Module, seed: int):
    """Find a nontrivial Fitting split ``m = ker psi^n + im psi^n`` or return None."""
    hs, rad = end_radical(m)
    f = m.field
    basis = hs.basis
    candidates = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            candidates.append(basis[i] @ basis[j])
    rng = random.Random(seed)
    for _ in range(12):
        coeffs = [f(rng.randint(-3, 3)) for _ in basis]
        candidates.append(hs.element(coeffs))
    for phi in candidates:
        lam = _splitting_eigenvalue(phi)
        if lam is None:
            continue
        q = _shifted_power(phi, lam)
        h = ModuleHom(m, m, q)
        ker = kernel_module(h)
        img = image_module(h)
        if ker[0].dim and img[0].dim:
            return ker, img
    return None


def _radical_series_vector(m: Module) -> tuple:
    from .homological import radical_submodule

    dims = []
    cur = m
    while cur.dim:
        r = radical_submodule(cur)
        dims.append(cur.dim - r.dim)
        if r.dim == cur.dim:
            break
        cur = submodule(cur, r)[0]
    return tuple(dims)


def _decompose_pieces(m: Module, inc: Matrix, proj: Matrix, out: list, seed: int) -> None:
    if m.dim == 0:
        return
    if is_local_end(m):
        out.append((m, inc, proj))
        return
    split = _split_once(m, seed)
    if split is None:
        raise NotSplit(f"could not split {m.name or 'a module'} of dimension {m.dim}; "
                       "its endomorphism algebra may not be split over the field")
    (k, kinc), (i, iinc) = split
    # projections onto each part along the other
    both = Matrix.from_columns(kinc.matrix.columns() + iinc.matrix.columns(), m.dim, m.field)
    binv = inverse(both)
    kproj = binv.select_rows(list(range(k.dim)))
    iproj = binv.select_rows(list(range(k.dim, m.dim)))
    _decompose_pieces(k, inc @ kinc.matrix, kproj @ proj, out, seed + 1)
    _decompose_pieces(i, inc @ iinc.matrix, iproj @ proj, out, seed + 2)


def decompose(m: Module, seed: int = 0) -> Decomposition:
    if "decomp" in m._cache:
        return m._cache["decomp"]
    f = m.field
    raw: list = []
    ident = Matrix.identity(m.dim, f)
    _decompose_pieces(m, ident, ident, raw, seed)
    pieces = [Summand(s, ModuleHom(s, m, i), ModuleHom(m, s, p)) for s, i, p in raw]
    keyed = sorted(range(len(pieces)),
                   key=lambda k: (pieces[k].module.dim, _radical_series_vector(pieces[k].module), k))
    pieces = [pieces[k] for k in keyed]
    classes: list[list[int]] = []
    for k, s in enumerate(pieces):
        for c in classes:
            if _iso_indecomposable(pieces[c[0]].module, s.module):
                c.append(k)
                break
        else:
            classes.append([k])
    d = Decomposition(m, pieces, classes)
    m._cache["decomp"] = d
    return d


def _iso_indecomposable(x: Module, y: Module) -> bool:
    if x.dim != y.dim:
        return False
    if x.dim == 0:
        return True
    if x.weight_dims() != y.weight_dims():
        return False
    h1 = hom_space(x, y)
    if not h1.dim:
        return False
    h2 = hom_space(y, x)
    # End(x) is local and split: g o f is invertible iff its trace is nonzero
    for g in h2.basis:
        for f in h1.basis:
            if g.trace_of_product(f):
                return True
    return False


def is_isomorphic(x: Module, y: Module) -> bool:
    if x.algebra is not y.algebra or x.side != y.side:
        return False
    if x.dim != y.dim:
        return False
    if x.dim == 0:
        return True
    if x.weight_dims() != y.weight_dims():
        return False
    dx, dy = decompose(x), decompose(y)
    if len(dx.pieces) != len(dy.pieces):
        return False
    used = [False] * len(dy.classes)
    for cx in dx.classes:
        mx = dx.pieces[cx[0]].module
        for k, cy in enumerate(dy.classes):
            if used[k] or len(cy) != len(cx):
                continue
            if _iso_indecomposable(mx, dy.pieces[cy[0]].module):
                used[k] = True
                break
        else:
            return False
    return True


def find_isomorphism(x: Module, y: Module) -> Matrix | None:
    """An explicit isomorphism between indecomposables, if any."""
    if x.dim != y.dim:
        return None
    h1 = hom_space(x, y)
    for f in h1.basis:
        if rank(f) == x.dim:
            return f
    for g in hom_space(y, x).basis:
        for f in h1.basis:
            if (g @ f).trace():
                # g o f is invertible, so f is injective between equal dimensions
                return f
    return None


def add_membership(x: Module, m: Module) -> bool:
    if x.dim == 0:
        return True
    dm = decompose(m)
    reps = [s for s, _ in dm.summands]
    for s, _ in decompose(x).summands:
        if not any(_iso_indecomposable(s, r) for r in reps):
            return False
    return True


def add_equal(m: Module, n: Module) -> bool:
    return add_membership(m, n) and add_membership(n, m)


def indecomposable_types(m: Module) -> list[Module]:
    return [s for s, _ in decompose(m).summands]


# ---------------------------------------------------------------------------
# idempotents


def lift_primitive_idempotents(b: Algebra) -> Algebra:
    """``b`` with a complete set of orthogonal primitive idempotents.

    The regular module is split into indecomposables; the images of the unit
    under the projection idempotents are primitive and sum to the unit.
    """
    if b.idempotents_primitive:
        reg = regular_module(b, "left")
        ok = True
        for e in b.idempotents:
            sub = Subspace.from_vectors(b.right_mult(e).columns(), b.dim, b.field)
            if not is_local_end(submodule(reg, sub)[0]):
                ok = False
                break
        if ok:
            return b
    if "lifted" in b._cache:
        return b._cache["lifted"]
    reg = regular_module(b, "left")
    d = decompose(reg)
    idem = []
    for s in d.pieces:
        pi = s.inclusion.matrix @ s.projection.matrix
        idem.append(pi.apply(b.unit))
    # left module endomorphisms of A are right multiplications, so pi(1) = e
    # with pi(x) = x e; these e are orthogonal idempotents summing to one
    for k, e in enumerate(idem):
        if b.mul(e, e) != e:
            raise InternalError("lifted element is not idempotent")
    names = [str(k + 1) for k in range(len(idem))]
    lifted = with_idempotents(b, idem, names, True)
    b._cache["lifted"] = lifted
    return lifted


def end_algebra_lifted(m: Module) -> tuple[Algebra, Decomposition]:
    """``End(m)^op`` with primitive idempotents from a decomposition of ``m``.

    The idempotent for a summand is ``iota o pi`` written in the Hom basis.
    """
    if "end_lifted" in m._cache:
        return m._cache["end_lifted"]
    b = end_algebra(m)
    hs = b._cache["end_of"][1]
    d = decompose(m)
    idem = []
    names = []
    for k, s in enumerate(d.pieces):
        e = s.inclusion.matrix @ s.projection.matrix
        idem.append({i: c for i, c in enumerate(hs.coords(e)) if c})
        names.append(str(k + 1))
    lifted = with_idempotents(b, idem, names, True)
    lifted._cache["end_of"] = b._cache["end_of"]
    lifted._cache["end_decomposition"] = d
    m._cache["end_lifted"] = (lifted, d)
    return lifted, d
