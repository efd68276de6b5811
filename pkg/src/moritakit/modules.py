"""Modules and bimodules given by action matrices.

A module stores one matrix per basis element of its algebra.  Left modules
satisfy ``act(ab) = act(a) act(b)``; right modules satisfy
``act(ab) = act(b) act(a)``, which makes them left modules over the opposite
algebra with the very same matrices.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import Algebra, Idempotent, combine, opposite_algebra
from .errors import DimensionMismatch, SchemaError
from .exactlin import (
    FieldDesc,
    Matrix,
    Subspace,
    block_diag,
    inverse,
    null_vectors,
    rref_rows,
)

LEFT, RIGHT = "left", "right"


class Module:
    __slots__ = ("algebra", "side", "dim", "action", "name", "_cache")

    def __init__(self, algebra: Algebra, side: str, dim: int, action: list[Matrix], name: str = ""):
        if side not in (LEFT, RIGHT):
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        self.algebra = algebra
        self.side = side
        self.dim = dim
        self.action = action
        self.name = name
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"Module({self.name or '?'}, {self.side}, dim={self.dim})"

    @property
    def field(self) -> FieldDesc:
        return self.algebra.field

    def act(self, x: dict) -> Matrix:
        """Action matrix of an arbitrary algebra element."""
        return combine(self.action, x, self.dim, self.dim, self.field)

    def act_on(self, x: dict, v: dict) -> dict:
        """``x . v`` without forming the action matrix of ``x``."""
        out: dict = {}
        for k, c in x.items():
            for i, y in self.action[k].apply(v).items():
                out[i] = out.get(i, 0) + c * y
        p = self.field.characteristic
        if p:
            return {i: y % p for i, y in out.items() if y % p}
        return {i: y for i, y in out.items() if y}

    def idempotent_action(self, t: int) -> Matrix:
        key = ("idem", t)
        if key not in self._cache:
            self._cache[key] = self.act(self.algebra.idempotents[t])
        return self._cache[key]

    def generator_actions(self) -> list[tuple[int, int, Matrix]]:
        if "gens" not in self._cache:
            self._cache["gens"] = [(u, t, self.act(g)) for u, t, g in self.algebra.generators()]
        return self._cache["gens"]

    def weight_frame(self):
        """Basis adapted to ``M = sum_t e_t M``.

        Returns ``(blocks, S, S_inv)`` where ``blocks[t]`` is the list of column
        indices of ``S`` spanning ``e_t M`` (for right modules ``M e_t``).
        """
        if "frame" not in self._cache:
            f = self.field
            cols: list[dict] = []
            blocks = []
            diagonal = True
            for t in range(len(self.algebra.idempotents)):
                e = self.idempotent_action(t)
                rows, _ = rref_rows(e.transpose().rows, self.dim, f)
                blocks.append(list(range(len(cols), len(cols) + len(rows))))
                for r in rows:
                    if len(r) != 1:
                        diagonal = False
                cols.extend(rows)
            if len(cols) != self.dim:
                raise DimensionMismatch("idempotent images do not fill the module")
            s = Matrix.from_columns(cols, self.dim, f)
            sinv = s.transpose() if diagonal else inverse(s)
            self._cache["frame"] = (blocks, s, sinv)
        return self._cache["frame"]

    def framed_generators(self) -> list[tuple[int, int, dict]]:
        """Generator actions in the weight frame, cut to their one nonzero block.

        Entries are ``(u, t, {(row, col): value})`` with ``u, t`` the row and
        column blocks.
        """
        if "framed" not in self._cache:
            blocks, s, sinv = self.weight_frame()
            out = []
            for u, t, g in self.generator_actions():
                if self.side == RIGHT:
                    u, t = t, u
                out.append((u, t, _blocks_of(sinv @ g @ s, blocks, blocks).get((u, t), {})))
            self._cache["framed"] = out
        return self._cache["framed"]

    def weight_dims(self) -> list[int]:
        return [len(b) for b in self.weight_frame()[0]]

    def as_opposite(self) -> Module:
        """The same data viewed over the opposite algebra with the other side."""
        side = RIGHT if self.side == LEFT else LEFT
        return Module(opposite_algebra(self.algebra), side, self.dim, self.action, self.name)

    def identity(self) -> ModuleHom:
        return ModuleHom(self, self, Matrix.identity(self.dim, self.field))

    def zero_hom(self, other: Module) -> ModuleHom:
        return ModuleHom(self, other, Matrix.zeros(other.dim, self.dim, self.field))


class ModuleHom:
    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: Module, target: Module, matrix: Matrix):
        if matrix.shape != (target.dim, source.dim):
            raise DimensionMismatch(f"hom matrix {matrix.shape} for {source.dim} -> {target.dim}")
        self.source = source
        self.target = target
        self.matrix = matrix

    def __repr__(self) -> str:
        return f"ModuleHom({self.source!r} -> {self.target!r})"

    def compose(self, first: ModuleHom) -> ModuleHom:
        """``self`` after ``first``."""
        return ModuleHom(first.source, self.target, self.matrix @ first.matrix)

    __matmul__ = compose

    def is_intertwiner(self) -> bool:
        m = self.matrix
        return all(m @ a == b @ m for a, b in zip(self.source.action, self.target.action))


class Bimodule:
    """Commuting left ``left_algebra`` and right ``right_algebra`` actions."""

    __slots__ = ("left_algebra", "right_algebra", "dim", "left_action", "right_action", "name", "_cache")

    def __init__(self, left_algebra: Algebra, right_algebra: Algebra, dim: int,
                 left_action: list[Matrix], right_action: list[Matrix], name: str = ""):
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.dim = dim
        self.left_action = left_action
        self.right_action = right_action
        self.name = name
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"Bimodule({self.name or '?'}, dim={self.dim})"

    def left_module(self) -> Module:
        if "left" not in self._cache:
            self._cache["left"] = Module(self.left_algebra, LEFT, self.dim, self.left_action, self.name)
        return self._cache["left"]

    def right_module(self) -> Module:
        if "right" not in self._cache:
            self._cache["right"] = Module(self.right_algebra, RIGHT, self.dim, self.right_action, self.name)
        return self._cache["right"]


class HomSpace:
    """Basis of ``Hom(source, target)`` with coordinates read off pivots."""

    def __init__(self, source: Module, target: Module, basis: list[Matrix], space: Subspace):
        self.source = source
        self.target = target
        self.basis = basis
        self.space = space

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def homs(self) -> list[ModuleHom]:
        return [ModuleHom(self.source, self.target, m) for m in self.basis]

    def coords(self, m: Matrix) -> list:
        return self.space.coords(m.flatten())

    def contains(self, m: Matrix) -> bool:
        return self.space.contains_vector(m.flatten())

    def element(self, coeffs) -> Matrix:
        f = self.source.field
        v: dict = {}
        for c, row in zip(coeffs, self.space.rows):
            if c:
                for k, x in row.items():
                    v[k] = v.get(k, 0) + c * x
        p = f.characteristic
        v = {k: (x % p if p else x) for k, x in v.items()}
        return Matrix.unflatten({k: x for k, x in v.items() if x}, self.target.dim, self.source.dim, f)


# ---------------------------------------------------------------------------
# constructions


def regular_module(a: Algebra, side: str = LEFT) -> Module:
    key = ("regular", side)
    if key not in a._cache:
        mats = a.left_matrices() if side == LEFT else a.right_matrices()
        a._cache[key] = Module(a, side, a.dim, mats, "A" if side == LEFT else "A_A")
    return a._cache[key]


def submodule(m: Module, sub: Subspace, name: str = "") -> tuple[Module, ModuleHom]:
    """Restriction to an invariant subspace, with the inclusion."""
    f = m.field
    rows = sub.rows
    d = len(rows)
    action = []
    for mat in m.action:
        cols = []
        for r in rows:
            cols.append({k: c for k, c in enumerate(sub.coords(mat.apply(r))) if c})
        action.append(Matrix.from_columns(cols, d, f))
    s = Module(m.algebra, m.side, d, action, name)
    inc = Matrix.from_columns(rows, m.dim, f)
    return s, ModuleHom(s, m, inc)


def quotient(m: Module, sub: Subspace, name: str = "") -> tuple[Module, ModuleHom]:
    """``m / sub`` on the free columns of ``sub``, with the projection."""
    f = m.field
    free = sub.free_columns()
    pos = {c: k for k, c in enumerate(free)}
    d = len(free)

    def project(v: dict) -> dict:
        r = sub.reduce(v)
        return {pos[j]: x for j, x in r.items()}

    action = []
    for mat in m.action:
        cols = [project(mat.apply({c: f.one})) for c in free]
        action.append(Matrix.from_columns(cols, d, f))
    q = Module(m.algebra, m.side, d, action, name)
    proj = Matrix.from_columns([project({j: f.one}) for j in range(m.dim)], d, f)
    return q, ModuleHom(m, q, proj)


def image_module(h: ModuleHom, name: str = "") -> tuple[Module, ModuleHom]:
    sub = Subspace.from_vectors(h.matrix.columns(), h.target.dim, h.target.field)
    return submodule(h.target, sub, name)


def kernel_module(h: ModuleHom, name: str = "") -> tuple[Module, ModuleHom]:
    sub = Subspace.from_vectors(null_vectors(h.matrix.rows, h.source.dim, h.source.field),
                                h.source.dim, h.source.field)
    return submodule(h.source, sub, name)


def cokernel_module(h: ModuleHom, name: str = "") -> tuple[Module, ModuleHom]:
    sub = Subspace.from_vectors(h.matrix.columns(), h.target.dim, h.target.field)
    return quotient(h.target, sub, name)


def projective_indecomposable(a: Algebra, i: int, side: str = LEFT) -> Module:
    """``A e_i`` (left) or ``e_i A`` (right)."""
    key = ("proj", i, side)
    if key not in a._cache:
        e = a.idempotents[i]
        # A e_i is the image of right multiplication by e_i
        op = a.right_mult(e) if side == LEFT else a.left_mult(e)
        sub = Subspace.from_vectors(op.columns(), a.dim, a.field)
        label = a.idempotent_names[i]
        name = f"P{label}" if side == LEFT else f"e{label}A"
        a._cache[key] = submodule(regular_module(a, side), sub, name)[0]
    return a._cache[key]


def dual_module(m: Module, name: str = "") -> Module:
    side = RIGHT if m.side == LEFT else LEFT
    return Module(m.algebra, side, m.dim, [x.transpose() for x in m.action], name or f"D({m.name})")


def injective_indecomposable(a: Algebra, i: int, side: str = LEFT) -> Module:
    """``D(e_i A)`` (left) or ``D(A e_i)`` (right)."""
    key = ("inj", i, side)
    if key not in a._cache:
        other = RIGHT if side == LEFT else LEFT
        label = a.idempotent_names[i]
        a._cache[key] = dual_module(projective_indecomposable(a, i, other), f"I{label}")
    return a._cache[key]


def simple_module(a: Algebra, i: int, side: str = LEFT) -> Module:
    p = projective_indecomposable(a, i, side)
    rad = _radical_subspace(p)
    return quotient(p, rad, f"S{a.idempotent_names[i]}")[0]


def _radical_subspace(m: Module) -> Subspace:
    from .homological import radical_submodule

    return radical_submodule(m)


def direct_sum(ms: Sequence[Module], name: str = "", algebra: Algebra | None = None,
               side: str = LEFT) -> tuple[Module, list[ModuleHom], list[ModuleHom]]:
    if not ms:
        if algebra is None:
            raise ValueError("the empty direct sum needs an algebra")
        return zero_module(algebra, side), [], []
    a, side = ms[0].algebra, ms[0].side
    for m in ms:
        if m.algebra is not a or m.side != side:
            raise DimensionMismatch("direct sum of modules over different algebras or sides")
    f = a.field
    n = sum(m.dim for m in ms)
    action = [block_diag([m.action[k] for m in ms], f) for k in range(a.dim)]
    s = Module(a, side, n, action, name or "+".join(m.name or "?" for m in ms))
    inj, proj = [], []
    off = 0
    for m in ms:
        i_rows: list[dict] = [{} for _ in range(n)]
        p_rows: list[dict] = [{} for _ in range(m.dim)]
        for k in range(m.dim):
            i_rows[off + k] = {k: f.one}
            p_rows[k] = {off + k: f.one}
        inj.append(ModuleHom(m, s, Matrix(n, m.dim, f, i_rows)))
        proj.append(ModuleHom(s, m, Matrix(m.dim, n, f, p_rows)))
        off += m.dim
    return s, inj, proj


def zero_module(a: Algebra, side: str = LEFT) -> Module:
    return Module(a, side, 0, [Matrix(0, 0, a.field, []) for _ in range(a.dim)], "0")


def sum_of(ms: Sequence[Module], name: str = "") -> Module:
    return direct_sum(ms, name)[0]


def power(m: Module, k: int) -> Module:
    if k == 0:
        return zero_module(m.algebra, m.side)
    return sum_of([m] * k, f"{m.name}^{k}" if k > 1 else m.name)


def transport(m: Module, s: Matrix, name: str = "") -> Module:
    """Module with basis change: new action ``s^-1 act s``."""
    sinv = inverse(s)
    return Module(m.algebra, m.side, m.dim, [sinv @ x @ s for x in m.action], name or m.name)


# ---------------------------------------------------------------------------
# Hom spaces


def _blocks_of(mat: Matrix, row_blocks, col_blocks) -> dict:
    """Split a matrix written in weight frames into ``(u, t) -> {(r, c): x}``."""
    row_of = {}
    for u, blk in enumerate(row_blocks):
        for k, i in enumerate(blk):
            row_of[i] = (u, k)
    col_of = {}
    for t, blk in enumerate(col_blocks):
        for k, j in enumerate(blk):
            col_of[j] = (t, k)
    out: dict = {}
    for i, r in enumerate(mat.rows):
        u, rk = row_of[i]
        for j, x in r.items():
            t, ck = col_of[j]
            out.setdefault((u, t), {})[(rk, ck)] = x
    return out


def hom_space(m: Module, n: Module) -> HomSpace:
    """All intertwiners ``m -> n`` as a canonical basis."""
    if m.algebra is not n.algebra or m.side != n.side:
        raise DimensionMismatch("Hom between modules over different algebras or sides")
    key = ("hom", id(n))
    hit = m._cache.get(key)
    if hit is not None and hit[0] is n:
        return hit[1]
    f = m.field
    a = m.algebra
    if m.dim == 0 or n.dim == 0:
        hs = HomSpace(m, n, [], Subspace.zero(n.dim * m.dim, f))
        m._cache[key] = (n, hs)
        return hs
    bm, sm, sminv = m.weight_frame()
    bn, sn, sninv = n.weight_frame()
    nt = len(bm)
    md = [len(b) for b in bm]
    nd = [len(b) for b in bn]
    # unknown X_t[r][c] (r in e_t n, c in e_t m)
    offset = []
    total = 0
    for t in range(nt):
        offset.append(total)
        total += nd[t] * md[t]
    if total == 0:
        hs = HomSpace(m, n, [], Subspace.zero(n.dim * m.dim, f))
        m._cache[key] = (n, hs)
        return hs

    def var(t, r, c):
        return offset[t] + r * md[t] + c

    p = f.characteristic
    eqs = []
    for (u, t, bgm), (_, _, bgn) in zip(m.framed_generators(), n.framed_generators()):
        # X_u * g_m - g_n * X_t on the block e_t m -> e_u n
        if not (md[t] and nd[u]):
            continue
        gm_cols: dict = {}
        for (k, c), x in bgm.items():
            gm_cols.setdefault(c, []).append((k, x))
        gn_rows: dict = {}
        for (r, k), x in bgn.items():
            gn_rows.setdefault(r, []).append((k, x))
        for r in range(nd[u]):
            gr = gn_rows.get(r, ())
            for c in range(md[t]):
                eq: dict = {}
                for k, x in gm_cols.get(c, ()):
                    v = var(u, r, k)
                    eq[v] = eq.get(v, 0) + x
                for k, x in gr:
                    v = var(t, k, c)
                    eq[v] = eq.get(v, 0) - x
                if p:
                    eq = {v: x % p for v, x in eq.items() if x % p}
                else:
                    eq = {v: x for v, x in eq.items() if x}
                if eq:
                    eqs.append(eq)
    sols = null_vectors(eqs, total, f)
    # back to the original bases: X = S_n X' S_m^-1
    col_of = []
    for t in range(nt):
        for r in range(nd[t]):
            for c in range(md[t]):
                col_of.append((bn[t][r], bm[t][c]))
    flats = []
    for s in sols:
        rows: list[dict] = [{} for _ in range(n.dim)]
        for v, x in s.items():
            i, j = col_of[v]
            rows[i][j] = x
        xm = sn @ Matrix(n.dim, m.dim, f, rows) @ sminv
        flats.append(xm.flatten())
    red, piv = rref_rows(flats, n.dim * m.dim, f)
    space = Subspace(n.dim * m.dim, f, red, piv)
    basis = [Matrix.unflatten(r, n.dim, m.dim, f) for r in red]
    hs = HomSpace(m, n, basis, space)
    m._cache[key] = (n, hs)
    return hs


def hom_module(src: Module, tgt: Module, acting: Algebra, ops: Sequence[Matrix], name: str = "") -> Module:
    """``Hom(src, tgt)`` as a left module over ``acting`` via ``c.f = f o ops[c]``.

    ``ops`` must be a right action of ``acting`` on ``src`` by endomorphisms.
    """
    hs = hom_space(src, tgt)
    f = src.field
    d = hs.dim
    action = []
    for op in ops:
        cols = []
        for h in hs.basis:
            cols.append({k: c for k, c in enumerate(hs.coords(h @ op)) if c})
        action.append(Matrix.from_columns(cols, d, f))
    mod = Module(acting, LEFT, d, action, name)
    mod._cache["hom_of"] = hs
    return mod


def end_algebra(m: Module) -> Algebra:
    """``End(m)^op``: the product of ``f`` then ``g`` is the composite ``g o f``."""
    if "end" not in m._cache:
        hs = hom_space(m, m)
        f = m.field
        basis = hs.basis
        r = len(basis)
        mult = []
        for fi in basis:
            row = []
            for gj in basis:
                row.append({k: c for k, c in enumerate(hs.coords(gj @ fi)) if c})
            mult.append(row)
        unit = {k: c for k, c in enumerate(hs.coords(Matrix.identity(m.dim, f))) if c}
        labels = [f"f{k}" for k in range(r)]
        b = Algebra(f, mult, labels, unit, [unit], False, ["1"], None, f"End({m.name})^op")
        b._cache["end_of"] = (m, hs)
        m._cache["end"] = b
    return m._cache["end"]


def endo_ops(b: Algebra) -> list[Matrix]:
    """Matrices on ``m`` of the basis of ``b = End(m)^op``."""
    return b._cache["end_of"][1].basis


# ---------------------------------------------------------------------------
# tensor products, duals, annihilators


def tensor_over(x: Bimodule, n: Module, name: str = "") -> Module:
    """``x (tensor over A) n`` for a (C, A)-bimodule ``x`` and a left A-module ``n``."""
    a = x.right_algebra
    if n.algebra is not a or n.side != LEFT:
        raise DimensionMismatch("tensor_over needs a left module over the bimodule's right algebra")
    f = a.field
    c_alg = x.left_algebra
    xr = x.right_module()
    bx, sx, sxinv = xr.weight_frame()
    bn, sn, sninv = n.weight_frame()
    nt = len(bx)
    xd = [len(b) for b in bx]
    nd = [len(b) for b in bn]
    offset = []
    total = 0
    for t in range(nt):
        offset.append(total)
        total += xd[t] * nd[t]

    def var(t, i, j):
        return offset[t] + i * nd[t] + j

    p = f.characteristic
    rels = []
    for (t, u, bgx), (_, _, bgn) in zip(xr.framed_generators(), n.framed_generators()):
        # g = e_u g e_t; p in x e_u, q in e_t n:  (p.g) (x) q - p (x) (g.q)
        gx_cols: dict = {}
        for (k, c), val in bgx.items():
            gx_cols.setdefault(c, []).append((k, val))
        gn_cols: dict = {}
        for (k, c), val in bgn.items():
            gn_cols.setdefault(c, []).append((k, val))
        for i in range(xd[u]):
            for j in range(nd[t]):
                rel: dict = {}
                for k, val in gx_cols.get(i, ()):
                    v = var(t, k, j)
                    rel[v] = rel.get(v, 0) + val
                for k, val in gn_cols.get(j, ()):
                    v = var(u, i, k)
                    rel[v] = rel.get(v, 0) - val
                if p:
                    rel = {v: y % p for v, y in rel.items() if y % p}
                else:
                    rel = {v: y for v, y in rel.items() if y}
                if rel:
                    rels.append(rel)
    red, piv = rref_rows(rels, total, f)
    sub = Subspace(total, f, red, piv)
    free = sub.free_columns()
    pos = {c: k for k, c in enumerate(free)}
    d = len(free)
    where = []
    for t in range(nt):
        for i in range(xd[t]):
            for j in range(nd[t]):
                where.append((t, i, j))
    # left action of C on x, written in the right weight frame
    action = []
    for lmat in x.left_action:
        blocks = _blocks_of(sxinv @ lmat @ sx, bx, bx)
        cols = []
        for col in free:
            t, i, j = where[col]
            img: dict = {}
            for (k, c), val in blocks.get((t, t), {}).items():
                if c == i:
                    img[var(t, k, j)] = val
            r = sub.reduce(img)
            cols.append({pos[v]: y for v, y in r.items()})
        action.append(Matrix.from_columns(cols, d, f))
    return Module(c_alg, LEFT, d, action, name or f"{x.name}(x){n.name}")


def annihilator(m: Module) -> Subspace:
    a = m.algebra
    cols = [mat.flatten() for mat in m.action]
    # kernel of the map A -> End(m), b_i |-> act(b_i)
    rows: dict[int, dict] = {}
    for i, col in enumerate(cols):
        for k, x in col.items():
            rows.setdefault(k, {})[i] = x
    return Subspace.from_vectors(null_vectors(list(rows.values()), a.dim, a.field), a.dim, a.field)


def is_faithful(m: Module) -> bool:
    return annihilator(m).dim == 0


def dual_bimodule_of_algebra(a: Algebra) -> Bimodule:
    """``DA`` with ``(a.phi.a')(x) = phi(a' x a)``."""
    if "DA" not in a._cache:
        left = [r.transpose() for r in a.right_matrices()]
        right = [l.transpose() for l in a.left_matrices()]
        a._cache["DA"] = Bimodule(a, a, a.dim, left, right, "DA")
    return a._cache["DA"]


def regular_bimodule(a: Algebra) -> Bimodule:
    return Bimodule(a, a, a.dim, a.left_matrices(), a.right_matrices(), "A")


def validate_module(m: Module, full: bool = False) -> list[str]:
    """Violations of the module axioms.

    By default only products with generators are checked, which suffices
    because the generators and idempotents generate the algebra.
    """
    a, out = m.algebra, []
    f = m.field
    if len(m.action) != a.dim:
        return [f"expected {a.dim} action matrices, got {len(m.action)}"]
    for k, mat in enumerate(m.action):
        if mat.shape != (m.dim, m.dim):
            out.append(f"action of {a.labels[k]} has shape {mat.shape}")
    if out:
        return out
    if not m.act(a.unit).is_identity() and m.dim:
        out.append("unit does not act as the identity")
    if full:
        left_factors = [{i: f.one} for i in range(a.dim)]
    else:
        left_factors = [g for _, _, g in a.generators()] + list(a.idempotents)
    for x in left_factors:
        ax = m.act(x)
        for j in range(a.dim):
            prod = a.mul(x, {j: f.one})
            want = m.act(prod)
            got = ax @ m.action[j] if m.side == LEFT else m.action[j] @ ax
            if got != want:
                out.append(f"action not multiplicative at ({a.element_str(x)}, {a.labels[j]})")
                if len(out) > 10:
                    return out
    return out


def validate_bimodule(x: Bimodule) -> list[str]:
    out = [f"left: {v}" for v in validate_module(x.left_module())]
    out += [f"right: {v}" for v in validate_module(x.right_module())]
    for l in x.left_action:
        for r in x.right_action:
            if l @ r != r @ l:
                out.append("left and right actions do not commute")
                return out
    return out


def module_from_spec(a: Algebra, spec: str) -> Module:
    """Parse ``P1+P2``, ``I3``, ``S2``, ``regular``, ``D(regular)``."""
    spec = spec.strip()
    if not spec:
        raise SchemaError("empty module spec", "--module")
    parts = [s.strip() for s in spec.split("+")]
    mods = []
    names = a.idempotent_names
    for part in parts:
        if part == "regular":
            mods.append(regular_module(a))
        elif part == "D(regular)":
            mods.append(dual_bimodule_of_algebra(a).left_module())
        elif len(part) >= 2 and part[0] in "PIS" and part[1:] in names:
            i = names.index(part[1:])
            mods.append({"P": projective_indecomposable, "I": injective_indecomposable,
                         "S": simple_module}[part[0]](a, i))
        else:
            raise SchemaError(f"cannot parse module spec term {part!r}", "--module")
    if len(mods) == 1:
        return mods[0]
    return sum_of(mods, spec)


def idempotent_projective(a: Algebra, e: Idempotent) -> Module:
    """``A e`` for a subset idempotent, as a sum of the ``A e_i``."""
    return sum_of([projective_indecomposable(a, i) for i in e.subset],
                  "+".join(f"P{a.idempotent_names[i]}" for i in e.subset))
