"""Radical layers, covers, envelopes and dominant dimension."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, Idempotent, opposite_algebra
from .exactlin import Echelon, Matrix, Subspace, null_vectors, rref_rows
from .modules import (
    LEFT,
    Module,
    ModuleHom,
    cokernel_module,
    dual_module,
    is_faithful,
    projective_indecomposable,
    regular_module,
    sum_of,
    zero_module,
)


def _radical_actions(m: Module) -> list[Matrix]:
    a = m.algebra
    return [m.act(r) for r in a.radical().rows]


def radical_submodule(m: Module) -> Subspace:
    """``J m`` as a subspace of ``m``."""
    if "rad" not in m._cache:
        vecs = []
        for x in _radical_actions(m):
            vecs.extend(c for c in x.columns() if c)
        m._cache["rad"] = Subspace.from_vectors(vecs, m.dim, m.field)
    return m._cache["rad"]


def socle_submodule(m: Module) -> Subspace:
    """Vectors killed by ``J``."""
    if "soc" not in m._cache:
        acts = _radical_actions(m)
        rows = [r for x in acts for r in x.rows if r]
        m._cache["soc"] = Subspace.from_vectors(null_vectors(rows, m.dim, m.field), m.dim, m.field)
    return m._cache["soc"]


def _class_vertex_dims(m: Module, sub: Subspace) -> list[int]:
    """``dim e_t sub`` for one representative ``t`` per vertex class."""
    a = m.algebra
    out = []
    for t in a.class_representatives():
        e = m.idempotent_action(t)
        vecs = [e.apply(r) for r in sub.rows]
        out.append(len(rref_rows([v for v in vecs if v], m.dim, m.field)[0]))
    return out


def top_multiplicities(m: Module) -> list[int]:
    """Multiplicity of each simple (one per vertex class) in ``m / rad m``.

    For a primitive idempotent of a split algebra ``e_t S(t)`` is a line, so
    the multiplicity is ``dim e_t m - dim e_t rad m``.
    """
    full = _class_vertex_dims(m, Subspace.full(m.dim, m.field))
    rad = _class_vertex_dims(m, radical_submodule(m))
    return [x - y for x, y in zip(full, rad)]


def socle_multiplicities(m: Module) -> list[int]:
    return _class_vertex_dims(m, socle_submodule(m))


def _top_generators(m: Module) -> list[tuple[int, dict]]:
    """Vectors of ``e_t m`` lifting a basis of ``e_t`` top, per vertex class."""
    a = m.algebra
    span = Echelon(m.dim, m.field)
    for r in radical_submodule(m).rows:
        span.insert(r)
    out = []
    for t in a.class_representatives():
        for col in m.idempotent_action(t).columns():
            if col and span.insert(col):
                out.append((t, col))
    return out


def projective_cover(m: Module) -> tuple[Module, ModuleHom]:
    a = m.algebra
    f = m.field
    if "cover" in m._cache:
        return m._cache["cover"]
    if m.dim == 0:
        z = zero_module(a, m.side)
        out = (z, ModuleHom(z, m, Matrix.zeros(0, 0, f)))
    else:
        gens = _top_generators(m)
        pieces = [projective_indecomposable(a, t, m.side) for t, _ in gens]
        cover = sum_of(pieces, "+".join(p.name for p in pieces))
        cols = []
        for t, x in gens:
            # basis vector b of P(t) goes to b.x
            for r in _proj_basis(a, t, m.side):
                cols.append(m.act_on(r, x))
        out = (cover, ModuleHom(cover, m, Matrix.from_columns(cols, m.dim, f)))
        out[0]._cache["cover_vertices"] = [t for t, _ in gens]
    m._cache["cover"] = out
    return out


def _proj_basis(a: Algebra, t: int, side: str) -> list[dict]:
    key = ("proj_basis", t, side)
    if key not in a._cache:
        e = a.idempotents[t]
        op = a.right_mult(e) if side == LEFT else a.left_mult(e)
        a._cache[key] = rref_rows(op.columns(), a.dim, a.field)[0]
    return a._cache[key]


def injective_envelope(m: Module) -> tuple[Module, ModuleHom]:
    """Dual of the projective cover of the dual; terms are sums of ``I(t)``."""
    if "envelope" not in m._cache:
        p, pi = projective_cover(dual_module(m))
        names = [f"I{m.algebra.idempotent_names[t]}" for t in p._cache.get("cover_vertices", [])]
        e = dual_module(p, "+".join(names) or "0")
        m._cache["envelope"] = (e, ModuleHom(m, e, pi.matrix.transpose()))
    return m._cache["envelope"]


def is_projective(m: Module) -> bool:
    if m.dim == 0:
        return True
    p, _ = projective_cover(m)
    return p.dim == m.dim


def is_injective(m: Module) -> bool:
    if m.dim == 0:
        return True
    return is_projective(dual_module(m))


@dataclass
class Resolution:
    base: Module
    terms: list[Module]
    maps: list[ModuleHom]
    minimal: bool = True
    complete: bool = False


@dataclass
class AtLeast:
    cap: int

    def __str__(self) -> str:
        return f">={self.cap}"


@dataclass
class DomdimResult:
    value: object  # int or AtLeast
    witness: Resolution
    first_nonprojective: int | None
    projective_flags: list[bool] = dc_field(default_factory=list)

    def at_least(self, n: int) -> bool:
        if isinstance(self.value, AtLeast):
            return self.value.cap >= n
        return self.value >= n

    def to_json(self):
        if isinstance(self.value, AtLeast):
            return {"at_least": self.value.cap}
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def minimal_injective_resolution(m: Module, cap: int) -> Resolution:
    """Terms ``I_0 .. I_k`` with ``k < cap``; complete when a cokernel vanishes."""
    terms, maps = [], []
    cur = m
    prev = None
    complete = False
    for _ in range(cap):
        if cur.dim == 0:
            complete = True
            break
        e, iota = injective_envelope(cur)
        mat = iota.matrix if prev is None else iota.matrix @ prev
        src = m if prev is None else terms[-1]
        maps.append(ModuleHom(src, e, mat))
        terms.append(e)
        q, proj = cokernel_module(iota)
        cur, prev = q, proj.matrix
    else:
        complete = cur.dim == 0
    return Resolution(m, terms, maps, True, complete)


def dominant_dimension(a: Algebra, cap: int = 10, side: str = LEFT) -> DomdimResult:
    """Leading projective terms of the minimal injective resolution of the regular module.

    The right-hand version works with the opposite algebra.
    """
    key = ("domdim", cap, side)
    if key in a._cache:
        return a._cache[key]
    base = a if side == LEFT else opposite_algebra(a)
    m = regular_module(base, LEFT)
    terms, maps, flags = [], [], []
    cur, prev = m, None
    value, first = None, None
    complete = False
    for t in range(cap):
        if cur.dim == 0:
            complete = True
            break
        e, iota = injective_envelope(cur)
        src = m if prev is None else terms[-1]
        maps.append(ModuleHom(src, e, iota.matrix if prev is None else iota.matrix @ prev))
        terms.append(e)
        proj = is_projective(e)
        flags.append(proj)
        if not proj:
            value, first = t, t
            break
        q, pr = cokernel_module(iota)
        cur, prev = q, pr.matrix
    if value is None:
        value = AtLeast(cap)
    res = DomdimResult(value, Resolution(m, terms, maps, True, complete), first, flags)
    a._cache[key] = res
    return res


def qf3_minimal_faithful(a: Algebra) -> tuple[Module, Idempotent] | None:
    key = "qf3"
    if key not in a._cache:
        picked = []
        for t in a.class_representatives():
            p = projective_indecomposable(a, t)
            if is_injective(p):
                picked.append(t)
        out = None
        if picked:
            mods = [projective_indecomposable(a, t) for t in picked]
            pm = sum_of(mods, "+".join(x.name for x in mods))
            if is_faithful(pm):
                out = (pm, Idempotent(tuple(picked)))
        a._cache[key] = out
    return a._cache[key]
