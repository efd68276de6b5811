"""Finite-dimensional algebras given by structure constants.

Algebras are built from bound quiver presentations (paths are composed right
to left, like maps: the path ``("b", "a")`` means ``b`` after ``a``), and can
be cut down to corner algebras ``eAe`` or flipped to the opposite algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .errors import CapNotNilpotent, NonAdmissible, NotIdempotentSubset, SchemaError
from .exactlin import QQ, Echelon, FieldDesc, Matrix, Subspace, parse_rational, rref_rows, vec_add

Path = tuple  # arrow names, leftmost applied last


@dataclass
class QuiverPresentation:
    field: FieldDesc
    vertices: list[str]
    arrows: list[tuple[str, str, str]]  # (name, source, target)
    relations: list[list[tuple[object, tuple[str, ...]]]] = dc_field(default_factory=list)
    nilpotency_cap: int = 2

    def arrow_map(self) -> dict[str, tuple[str, str]]:
        return {name: (s, t) for name, s, t in self.arrows}

    def path_ends(self, path: Sequence[str]) -> tuple[str, str]:
        """(source, target) of a composable path; raises SchemaError otherwise."""
        amap = self.arrow_map()
        for a in path:
            if a not in amap:
                raise SchemaError(f"unknown arrow {a!r}", "relations")
        for left, right in zip(path, path[1:]):
            if amap[right][1] != amap[left][0]:
                raise SchemaError(f"path {'*'.join(path)} is not composable", "relations")
        return amap[path[-1]][0], amap[path[0]][1]

    def check(self) -> None:
        if not self.vertices:
            raise SchemaError("at least one vertex is required", "vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise SchemaError("duplicate vertex names", "vertices")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise SchemaError("duplicate arrow names", "arrows")
        vs = set(self.vertices)
        for name, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise SchemaError(f"arrow {name!r} has an undeclared endpoint", "arrows")
        if self.nilpotency_cap < 2:
            raise SchemaError("must be at least 2", "nilpotency_cap")
        for rel in self.relations:
            ends = set()
            for coeff, path in rel:
                if len(path) < 2:
                    raise NonAdmissible(f"relation term {'*'.join(path) or '(vertex)'} has length < 2")
                ends.add(self.path_ends(path))
            if len(ends) > 1:
                raise SchemaError("relation terms must share source and target", "relations")

    def to_json(self) -> dict:
        f = self.field
        return {
            "field": f.to_json(),
            "vertices": list(self.vertices),
            "arrows": [{"name": n, "from": s, "to": t} for n, s, t in self.arrows],
            "relations": [
                [{"coeff": f.fmt(f(c)), "path": list(path)} for c, path in rel] for rel in self.relations
            ],
            "nilpotency_cap": self.nilpotency_cap,
        }

    @classmethod
    def from_json(cls, obj) -> QuiverPresentation:
        if not isinstance(obj, dict):
            raise SchemaError("top level must be an object")
        for key in ("vertices", "arrows", "nilpotency_cap"):
            if key not in obj:
                raise SchemaError("missing", key)
        unknown = set(obj) - {"field", "vertices", "arrows", "relations", "nilpotency_cap", "name"}
        if unknown:
            raise SchemaError("unknown key", sorted(unknown)[0])
        fobj = obj.get("field", {"kind": "rationals", "characteristic": 0})
        try:
            fld = FieldDesc(fobj["kind"], int(fobj.get("characteristic", 0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(str(exc), "field") from None
        verts = obj["vertices"]
        if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
            raise SchemaError("must be a list of strings", "vertices")
        arrows = []
        for a in obj["arrows"]:
            try:
                arrows.append((str(a["name"]), str(a["from"]), str(a["to"])))
            except (KeyError, TypeError):
                raise SchemaError("each arrow needs name, from and to", "arrows") from None
        rels = []
        for rel in obj.get("relations", []):
            if not isinstance(rel, list) or not rel:
                raise SchemaError("each relation is a non-empty list of terms", "relations")
            terms = []
            for term in rel:
                try:
                    coeff, path = term["coeff"], term["path"]
                except (KeyError, TypeError):
                    raise SchemaError("each term needs coeff and path", "relations") from None
                if isinstance(coeff, int):
                    coeff = str(coeff)
                if not isinstance(coeff, str):
                    raise SchemaError("coefficients are strings", "relations")
                terms.append((parse_rational(coeff), tuple(str(x) for x in path)))
            rels.append(terms)
        cap = obj["nilpotency_cap"]
        if not isinstance(cap, int):
            raise SchemaError("must be an integer", "nilpotency_cap")
        pres = cls(fld, list(verts), arrows, rels, cap)
        pres.check()
        return pres


@dataclass(frozen=True)
class Idempotent:
    """Sum of a subset of an algebra's distinguished idempotents."""

    subset: tuple[int, ...]

    def vector(self, a: Algebra) -> dict:
        v: dict = {}
        for i in self.subset:
            v = vec_add(v, a.idempotents[i], a.field)
        return v

    def names(self, a: Algebra) -> list[str]:
        return [a.idempotent_names[i] for i in self.subset]

    @classmethod
    def of(cls, a: Algebra, items: Iterable) -> Idempotent:
        idx = []
        for x in items:
            if isinstance(x, str):
                if x not in a.idempotent_names:
                    raise NotIdempotentSubset(f"no idempotent named {x!r}")
                idx.append(a.idempotent_names.index(x))
            elif isinstance(x, int) and 0 <= x < len(a.idempotents):
                idx.append(x)
            else:
                raise NotIdempotentSubset(f"bad idempotent index {x!r}")
        if len(set(idx)) != len(idx):
            raise NotIdempotentSubset("repeated idempotent in subset")
        return cls(tuple(sorted(idx)))


class Algebra:
    """Unital associative algebra with basis ``b_0..b_{n-1}``.

    ``mult[i][j]`` holds the product ``b_i b_j`` as a sparse coordinate dict.
    """

    def __init__(self, field: FieldDesc, mult, labels, unit: dict, idempotents: list[dict],
                 idempotents_primitive: bool, idempotent_names: list[str] | None = None,
                 radical_hint: Subspace | None = None, name: str = ""):
        self.field = field
        self.mult = mult
        self.dim = len(labels)
        self.labels = list(labels)
        self.unit = unit
        self.idempotents = idempotents
        self.idempotents_primitive = idempotents_primitive
        self.idempotent_names = idempotent_names or [str(i + 1) for i in range(len(idempotents))]
        self.radical_hint = radical_hint
        self.name = name
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"Algebra({self.name or 'unnamed'}, dim={self.dim}, over {self.field})"

    # elements -----------------------------------------------------------
    def basis_vector(self, i: int) -> dict:
        return {i: self.field.one}

    def mul(self, x: dict, y: dict) -> dict:
        acc: dict = {}
        mult = self.mult
        for i, a in x.items():
            mi = mult[i]
            for j, b in y.items():
                ab = a * b
                for k, c in mi[j].items():
                    acc[k] = acc.get(k, 0) + ab * c
        p = self.field.characteristic
        if p:
            return {k: v % p for k, v in acc.items() if v % p}
        return {k: v for k, v in acc.items() if v}

    def element_str(self, x: dict) -> str:
        if not x:
            return "0"
        f = self.field
        return " + ".join(f"{f.fmt(c)}*{self.labels[i]}" for i, c in sorted(x.items()))

    # multiplication matrices ------------------------------------------
    def left_matrices(self) -> list[Matrix]:
        """``L_i`` with ``L_i @ y = b_i y``."""
        if "left" not in self._cache:
            n, f = self.dim, self.field
            mats = []
            for i in range(n):
                rows: list[dict] = [{} for _ in range(n)]
                for j in range(n):
                    for k, c in self.mult[i][j].items():
                        rows[k][j] = c
                mats.append(Matrix(n, n, f, rows))
            self._cache["left"] = mats
        return self._cache["left"]

    def right_matrices(self) -> list[Matrix]:
        """``R_i`` with ``R_i @ y = y b_i``."""
        if "right" not in self._cache:
            n, f = self.dim, self.field
            mats = []
            for i in range(n):
                rows: list[dict] = [{} for _ in range(n)]
                for j in range(n):
                    for k, c in self.mult[j][i].items():
                        rows[k][j] = c
                mats.append(Matrix(n, n, f, rows))
            self._cache["right"] = mats
        return self._cache["right"]

    def left_mult(self, x: dict) -> Matrix:
        return combine(self.left_matrices(), x, self.dim, self.dim, self.field)

    def right_mult(self, x: dict) -> Matrix:
        return combine(self.right_matrices(), x, self.dim, self.dim, self.field)

    # structure ----------------------------------------------------------
    def is_commutative(self) -> bool:
        return all(self.mult[i][j] == self.mult[j][i] for i in range(self.dim) for j in range(i))

    def structure_equal(self, other: Algebra) -> bool:
        return (self.field == other.field and self.dim == other.dim and self.mult == other.mult
                and self.unit == other.unit and self.idempotents == other.idempotents)

    def opposite(self) -> Algebra:
        return opposite_algebra(self)

    def radical(self) -> Subspace:
        """Jacobson radical (presentation hint when known, else the trace form)."""
        if "radical" not in self._cache:
            if self.radical_hint is not None:
                self._cache["radical"] = self.radical_hint
            else:
                from .krullschmidt import algebra_radical

                self._cache["radical"] = algebra_radical(self)
        return self._cache["radical"]

    def peirce_pieces(self) -> list[tuple[int, int, dict]]:
        """Spanning set of homogeneous elements ``(u, t, x)`` with ``x = e_u x e_t``."""
        if "peirce" not in self._cache:
            n, f = self.dim, self.field
            idem = self.idempotents
            left = [self.left_mult(e) for e in idem]
            right = [self.right_mult(e) for e in idem]
            out = []
            for u in range(len(idem)):
                for t in range(len(idem)):
                    vecs = []
                    m = left[u] @ right[t]
                    cols = m.transpose().rows
                    vecs = [c for c in cols if c]
                    rows, _ = rref_rows(vecs, n, f)
                    out.extend((u, t, r) for r in rows)
            out.sort(key=lambda item: (min(item[2]), item[0], item[1]))
            self._cache["peirce"] = out
        return self._cache["peirce"]

    def generators(self) -> list[tuple[int, int, dict]]:
        """Homogeneous elements that, with the idempotents, generate the algebra."""
        if "gens" not in self._cache:
            n, f = self.dim, self.field
            span = Echelon(n, f)
            elems: list[dict] = []
            gens: list[tuple[int, int, dict]] = []
            idem = list(self.idempotents)

            def close(queue):
                while queue:
                    w = queue.pop()
                    if w and span.insert(w):
                        elems.append(w)
                        for h in idem:
                            queue.append(self.mul(h, w))
                        for _, _, g in gens:
                            queue.append(self.mul(g, w))

            close(list(idem) + [self.unit])
            for u, t, x in self.peirce_pieces():
                if len(span) == n:
                    break
                if span.contains(x):
                    continue
                gens.append((u, t, x))
                close([x] + [self.mul(x, w) for w in elems])
            self._cache["gens"] = gens
        return self._cache["gens"]

    def vertex_classes(self) -> list[list[int]]:
        """Group primitive idempotents with isomorphic projectives ``Ae_i``."""
        if "classes" not in self._cache:
            rad = self.radical()
            n = len(self.idempotents)
            parent = list(range(n))

            def find(i):
                while parent[i] != i:
                    i = parent[i]
                return i

            for u in range(n):
                for t in range(u + 1, n):
                    # e_u A e_t and e_t A e_u both leave the radical iff Ae_u = Ae_t
                    if _outside_radical(self, u, t, rad) and _outside_radical(self, t, u, rad):
                        parent[find(t)] = find(u)
            groups: dict[int, list[int]] = {}
            for i in range(n):
                groups.setdefault(find(i), []).append(i)
            self._cache["classes"] = sorted(groups.values())
        return self._cache["classes"]

    def class_representatives(self) -> list[int]:
        return [c[0] for c in self.vertex_classes()]

    def is_basic(self) -> bool:
        return len(self.vertex_classes()) == len(self.idempotents)


def _outside_radical(a: Algebra, u: int, t: int, rad: Subspace) -> bool:
    for uu, tt, x in a.peirce_pieces():
        if uu == u and tt == t and not rad.contains_vector(x):
            return True
    return False


def combine(mats: Sequence[Matrix], coeffs: dict, nrows: int, ncols: int, field: FieldDesc) -> Matrix:
    """``sum_k coeffs[k] * mats[k]``."""
    if len(coeffs) == 1:
        (k, c), = coeffs.items()
        if c == 1:
            return mats[k]
    p = field.characteristic
    rows: list[dict] = [{} for _ in range(nrows)]
    for k, c in coeffs.items():
        for i, r in enumerate(mats[k].rows):
            if not r:
                continue
            acc = rows[i]
            for j, x in r.items():
                acc[j] = acc.get(j, 0) + c * x
    if p:
        rows = [{j: v % p for j, v in r.items() if v % p} for r in rows]
    else:
        rows = [{j: v for j, v in r.items() if v} for r in rows]
    return Matrix(nrows, ncols, field, rows)


# ---------------------------------------------------------------------------
# construction from a bound quiver


def _path_label(path: tuple) -> str:
    return "*".join(path)


def build_algebra(pres: QuiverPresentation, name: str = "") -> Algebra:
    pres.check()
    f = pres.field
    N = pres.nilpotency_cap
    amap = pres.arrow_map()
    src = {a: s for a, (s, _) in amap.items()}
    tgt = {a: t for a, (_, t) in amap.items()}

    monomials = set()
    polys = []
    for rel in pres.relations:
        terms: dict[tuple, object] = {}
        for c, path in rel:
            c = f(c)
            terms[path] = terms.get(path, 0) + c
        if f.characteristic:
            terms = {k: v % f.characteristic for k, v in terms.items()}
        terms = {k: v for k, v in terms.items() if v}
        if len(terms) == 1:
            monomials.add(next(iter(terms)))
        elif terms:
            polys.append(terms)

    # surviving paths: nonzero modulo the monomial relations, length <= N
    by_len: list[list[tuple]] = [[]]
    by_len.append([(a,) for a, _, _ in pres.arrows])
    for length in range(2, N + 1):
        nxt = []
        for q in by_len[-1]:
            t = tgt[q[0]]
            for a, s, _ in pres.arrows:
                if s != t:
                    continue
                cand = (a,) + q
                if any(cand[:k] in monomials for k in range(2, length + 1)):
                    continue
                nxt.append(cand)
        by_len.append(nxt)
    surviving = [p for level in by_len for p in level]
    surviving.sort(key=lambda p: (len(p), p))

    def ends(p):
        return src[p[-1]], tgt[p[0]]

    # columns ordered largest first so echelon pivots are leading terms
    desc = sorted(surviving, key=lambda p: (len(p), p), reverse=True)
    col = {p: i for i, p in enumerate(desc)}
    ncols = len(desc)

    def concat(left: tuple, right: tuple):
        if src[left[-1]] != tgt[right[0]]:
            return None
        return left + right

    span = Echelon(ncols, f)
    if polys:
        queue = []
        for terms in polys:
            v = {col[p]: c for p, c in terms.items() if p in col}
            queue.append(v)
        while queue:
            w = queue.pop()
            if not w or not span.insert(w):
                continue
            for a, _, _ in pres.arrows:
                for side in (0, 1):
                    out: dict = {}
                    for j, c in w.items():
                        p = desc[j]
                        q = concat((a,), p) if side == 0 else concat(p, (a,))
                        if q is not None and q in col:
                            out[col[q]] = out.get(col[q], 0) + c
                    if f.characteristic:
                        out = {k: v % f.characteristic for k, v in out.items() if v % f.characteristic}
                    else:
                        out = {k: v for k, v in out.items() if v}
                    if out:
                        queue.append(out)

    for p in by_len[N] if N < len(by_len) else []:
        if not span.contains({col[p]: f.one}):
            raise CapNotNilpotent(
                f"path {_path_label(p)} of length {N} does not reduce; raise nilpotency_cap")

    ideal = span.subspace()
    pivset = set(ideal.pivots)
    normal = [p for p in surviving if col[p] not in pivset]
    verts = pres.vertices
    nv = len(verts)
    index = {p: nv + k for k, p in enumerate(normal)}
    labels = ["e" + v for v in verts] + [_path_label(p) for p in normal]
    dim = len(labels)
    one = f.one

    def reduce_path(p: tuple) -> dict:
        if p not in col:
            return {}
        r = ideal.reduce({col[p]: one})
        return {index[desc[j]]: c for j, c in r.items()}

    vidx = {v: i for i, v in enumerate(verts)}
    elements = [("v", v) for v in verts] + [("p", p) for p in normal]

    def product(x, y) -> dict:
        kx, ex = x
        ky, ey = y
        if kx == "v" and ky == "v":
            return {vidx[ex]: one} if ex == ey else {}
        if kx == "v":
            return reduce_path(ey) if ends(ey)[1] == ex else {}
        if ky == "v":
            return reduce_path(ex) if ends(ex)[0] == ey else {}
        q = concat(ex, ey)
        return reduce_path(q) if q is not None else {}

    mult = [[product(x, y) for y in elements] for x in elements]
    unit = {i: one for i in range(nv)}
    idem = [{i: one} for i in range(nv)]
    rad = Subspace(dim, f, [{i: one} for i in range(nv, dim)], list(range(nv, dim)))
    alg = Algebra(f, mult, labels, unit, idem, True, list(verts), rad, name)
    alg._cache["presentation"] = pres
    return alg


# ---------------------------------------------------------------------------
# derived algebras


def corner_algebra(a: Algebra, e) -> tuple[Algebra, Matrix]:
    """``eAe`` for ``e`` a sum of distinguished idempotents, with its inclusion into ``a``."""
    if not isinstance(e, Idempotent):
        e = Idempotent.of(a, e)
    if not e.subset:
        raise NotIdempotentSubset("empty idempotent")
    f = a.field
    ev = e.vector(a)
    m = a.left_mult(ev) @ a.right_mult(ev)
    rows, piv = rref_rows([c for c in m.transpose().rows if c], a.dim, f)
    sub = Subspace(a.dim, f, rows, piv)
    d = len(rows)
    mult = [[sub.coords(a.mul(x, y)) for y in rows] for x in rows]
    mult = [[{k: c for k, c in enumerate(v) if c} for v in row] for row in mult]

    def coords(x):
        return {k: c for k, c in enumerate(sub.coords(x)) if c}

    labels = []
    for k, r in enumerate(rows):
        if len(r) == 1 and next(iter(r.values())) == 1:
            labels.append(a.labels[next(iter(r))])
        else:
            labels.append(f"c{k}")
    idem = [coords(a.idempotents[i]) for i in e.subset]
    unit = coords(ev)
    rad_vecs = [a.mul(a.mul(ev, r), ev) for r in a.radical().rows]
    rad = Subspace.from_vectors([coords(v) for v in rad_vecs if v], d, f)
    c = Algebra(f, mult, labels, unit, idem, a.idempotents_primitive,
                [a.idempotent_names[i] for i in e.subset], rad,
                f"{a.name or 'A'}[{'+'.join(e.names(a))}]")
    inclusion = Matrix.from_columns(rows, a.dim, f)
    c._cache["corner_of"] = (a, e, inclusion)
    return c, inclusion


def opposite_algebra(a: Algebra) -> Algebra:
    if "opposite" not in a._cache:
        n = a.dim
        mult = [[dict(a.mult[j][i]) for j in range(n)] for i in range(n)]
        op = Algebra(a.field, mult, a.labels, dict(a.unit), [dict(e) for e in a.idempotents],
                     a.idempotents_primitive, list(a.idempotent_names), a.radical_hint,
                     (a.name or "A") + "^op")
        if "radical" in a._cache:
            op._cache["radical"] = a._cache["radical"]
        op._cache["opposite"] = a
        a._cache["opposite"] = op
    return a._cache["opposite"]


def with_idempotents(a: Algebra, idempotents: list[dict], names: list[str] | None = None,
                     primitive: bool = True) -> Algebra:
    """Same structure constants, new distinguished idempotents."""
    b = Algebra(a.field, a.mult, a.labels, a.unit, idempotents, primitive, names,
                a.radical_hint, a.name)
    for key in ("radical", "left", "right", "end_of"):
        if key in a._cache:
            b._cache[key] = a._cache[key]
    return b


def validate_algebra(a: Algebra) -> list[str]:
    """Violations of the algebra axioms; empty when everything holds."""
    out = []
    n, f = a.dim, a.field
    mult = a.mult
    for i in range(n):
        for j in range(n):
            bij = mult[i][j]
            for k in range(n):
                lhs: dict = {}
                for m, c in bij.items():
                    lhs = vec_add(lhs, mult[m][k], f, c)
                rhs: dict = {}
                for m, c in mult[j][k].items():
                    rhs = vec_add(rhs, mult[i][m], f, c)
                if lhs != rhs:
                    out.append(f"associativity fails on ({a.labels[i]}, {a.labels[j]}, {a.labels[k]})")
                    if len(out) > 20:
                        return out
    for i in range(n):
        b = {i: f.one}
        if a.mul(a.unit, b) != b or a.mul(b, a.unit) != b:
            out.append(f"unit does not fix {a.labels[i]}")
    total: dict = {}
    for e in a.idempotents:
        total = vec_add(total, e, f)
    if total != {k: v for k, v in a.unit.items() if v}:
        out.append("idempotents do not sum to the unit")
    for s, e in enumerate(a.idempotents):
        for t, g in enumerate(a.idempotents):
            prod = a.mul(e, g)
            want = e if s == t else {}
            if prod != want:
                out.append(f"idempotents {a.idempotent_names[s]}, {a.idempotent_names[t]} not orthogonal")
    return out
