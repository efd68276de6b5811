"""Pure-Python elimination kernel.

Rows are sparse ``{column: value}`` dicts.  For ``p == 0`` values are
``gmpy2.mpq``; for a prime ``p`` they are ints in ``[0, p)``.  The result is
the reduced row echelon form (pivot entries equal to one) with rows sorted by
pivot column.
"""

from __future__ import annotations

from gmpy2 import mpq

_ONE = mpq(1)


def rref_rows(rows, ncols, p=0):
    basis = {}
    for src in rows:
        if not src:
            continue
        row = dict(src)
        hit = [c for c in row if c in basis]
        if p:
            for c in hit:
                f = row.get(c)
                if not f:
                    continue
                for j, v in basis[c].items():
                    nv = (row.get(j, 0) - f * v) % p
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
        else:
            for c in hit:
                f = row.get(c)
                if not f:
                    continue
                for j, v in basis[c].items():
                    nv = row.get(j, 0) - f * v
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
        if not row:
            continue
        piv = min(row)
        if p:
            inv = pow(row[piv], -1, p)
            row = {j: v * inv % p for j, v in row.items()}
        else:
            inv = _ONE / row[piv]
            if inv != 1:
                row = {j: v * inv for j, v in row.items()}
        # keep the basis fully reduced
        for other in basis.values():
            f = other.get(piv)
            if not f:
                continue
            for j, v in row.items():
                if p:
                    nv = (other.get(j, 0) - f * v) % p
                else:
                    nv = other.get(j, 0) - f * v
                if nv:
                    other[j] = nv
                else:
                    other.pop(j, None)
        basis[piv] = row
    pivots = sorted(basis)
    return [basis[c] for c in pivots], pivots
