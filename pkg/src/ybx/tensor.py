"""Sparse exact matrices on tensor products of small vector spaces.

A ShapedMatrix carries a tuple of leg dimensions; row and column indices
are mixed-radix words over those legs (row-major strides).  Storage is
dict-of-rows, keeping only nonzero entries, because most operators in
this toolkit are permutation-like.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .rings import RING_Q, Ring, rat, value_from_json, value_to_json

__all__ = [
    "ShapedMatrix",
    "SingularMatrixError",
    "e_matrix",
    "perm_p",
    "kron",
    "embed_pair",
    "embed_single",
    "commutator",
    "matrix_power",
    "poly_coeff",
    "poly_map",
    "export_coo_json",
    "import_coo_json",
    "export_dense_csv",
    "import_dense_csv",
]


class SingularMatrixError(ArithmeticError):
    pass


def _strides(legs):
    out = []
    acc = 1
    for d in reversed(legs):
        out.append(acc)
        acc *= d
    return tuple(reversed(out))


def _split(idx, legs, strides):
    word = []
    for s in strides:
        word.append(idx // s)
        idx %= s
    return tuple(word)


def _join(word, strides):
    return sum(w * s for w, s in zip(word, strides))


class ShapedMatrix:
    __slots__ = ("legs", "ring", "rows")

    def __init__(self, legs, ring: Ring, rows=None):
        self.legs = tuple(int(d) for d in legs)
        self.ring = ring
        self.rows = rows if rows is not None else {}

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, legs, ring=RING_Q):
        return cls(legs, ring)

    @classmethod
    def identity(cls, legs, ring=RING_Q):
        dim = 1
        for d in legs:
            dim *= d
        one = ring.one()
        return cls(legs, ring, {i: {i: one} for i in range(dim)})

    @classmethod
    def from_entries(cls, legs, ring, triples):
        """Build from (row, col, value) triples; values are accumulated."""
        m = cls(legs, ring)
        for r, c, v in triples:
            m._acc(r, c, ring.coerce(v))
        return m

    @classmethod
    def from_dense(cls, legs, ring, dense):
        m = cls(legs, ring)
        for r, row in enumerate(dense):
            for c, v in enumerate(row):
                v = ring.coerce(v)
                if not _is_zero(v):
                    m.rows.setdefault(r, {})[c] = v
        return m

    # -- basics -------------------------------------------------------

    @property
    def dim(self):
        d = 1
        for n in self.legs:
            d *= n
        return d

    def entry(self, r, c):
        row = self.rows.get(r)
        if row is None:
            return self.ring.zero()
        return row.get(c, self.ring.zero())

    def _acc(self, r, c, v):
        if _is_zero(v):
            return
        row = self.rows.setdefault(r, {})
        w = row.get(c)
        w = v if w is None else w + v
        if _is_zero(w):
            del row[c]
            if not row:
                del self.rows[r]
        else:
            row[c] = w

    def nnz(self):
        return sum(len(row) for row in self.rows.values())

    @property
    def is_zero(self):
        return not self.rows

    def entries(self):
        for r in sorted(self.rows):
            row = self.rows[r]
            for c in sorted(row):
                yield r, c, row[c]

    def dense(self):
        out = [[self.ring.zero() for _ in range(self.dim)] for _ in range(self.dim)]
        for r, c, v in self.entries():
            out[r][c] = v
        return out

    def copy(self):
        return ShapedMatrix(
            self.legs, self.ring, {r: dict(row) for r, row in self.rows.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, ShapedMatrix):
            return NotImplemented
        return self.legs == other.legs and self.rows == other.rows

    def __hash__(self):
        return hash(
            (
                self.legs,
                frozenset(
                    (r, c, _hashable(v))
                    for r, row in self.rows.items()
                    for c, v in row.items()
                ),
            )
        )

    def __repr__(self):
        return f"ShapedMatrix(legs={self.legs}, ring={self.ring.name}, nnz={self.nnz()})"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        self._check_compat(other)
        out = self.copy()
        for r, row in other.rows.items():
            for c, v in row.items():
                out._acc(r, c, v)
        return out

    def __sub__(self, other):
        self._check_compat(other)
        out = self.copy()
        for r, row in other.rows.items():
            for c, v in row.items():
                out._acc(r, c, -v)
        return out

    def __neg__(self):
        return ShapedMatrix(
            self.legs,
            self.ring,
            {r: {c: -v for c, v in row.items()} for r, row in self.rows.items()},
        )

    def scale(self, a):
        a = self.ring.coerce(a)
        if _is_zero(a):
            return ShapedMatrix(self.legs, self.ring)
        return ShapedMatrix(
            self.legs,
            self.ring,
            {r: {c: a * v for c, v in row.items()} for r, row in self.rows.items()},
        )

    def __matmul__(self, other):
        self._check_compat(other)
        out = ShapedMatrix(self.legs, self.ring)
        brows = other.rows
        for r, arow in self.rows.items():
            acc = {}
            for k, a in arow.items():
                brow = brows.get(k)
                if brow is None:
                    continue
                for c, b in brow.items():
                    w = acc.get(c)
                    p = a * b
                    acc[c] = p if w is None else w + p
            cleaned = {c: v for c, v in acc.items() if not _is_zero(v)}
            if cleaned:
                out.rows[r] = cleaned
        return out

    def _check_compat(self, other):
        if not isinstance(other, ShapedMatrix):
            raise TypeError("expected a ShapedMatrix")
        if self.legs != other.legs:
            raise ValueError(f"leg mismatch: {self.legs} vs {other.legs}")
        if self.ring is not other.ring:
            raise ValueError(f"ring mismatch: {self.ring.name} vs {other.ring.name}")

    def trace(self):
        acc = self.ring.zero()
        for r, row in self.rows.items():
            v = row.get(r)
            if v is not None:
                acc = acc + v
        return acc

    def transpose(self):
        out = ShapedMatrix(self.legs, self.ring)
        for r, row in self.rows.items():
            for c, v in row.items():
                out.rows.setdefault(c, {})[r] = v
        return out

    def map_entries(self, fn, ring=None):
        """Apply fn to every stored entry, optionally changing rings."""
        ring = ring or self.ring
        out = ShapedMatrix(self.legs, ring)
        for r, row in self.rows.items():
            for c, v in row.items():
                out._acc(r, c, fn(v))
        return out

    def to_ring(self, ring):
        return self.map_entries(ring.coerce, ring)

    # -- tensor-leg operations -----------------------------------------

    def partial_trace(self, leg):
        """Trace out one leg; the result keeps the remaining legs in order."""
        legs = self.legs
        assert 0 <= leg < len(legs)
        new_legs = legs[:leg] + legs[leg + 1 :]
        st = _strides(legs)
        new_st = _strides(new_legs) if new_legs else ()
        out = ShapedMatrix(new_legs if new_legs else (1,), self.ring)
        for r, row in self.rows.items():
            rw = _split(r, legs, st)
            for c, v in row.items():
                cw = _split(c, legs, st)
                if rw[leg] != cw[leg]:
                    continue
                rr = rw[:leg] + rw[leg + 1 :]
                cc = cw[:leg] + cw[leg + 1 :]
                if new_legs:
                    out._acc(_join(rr, new_st), _join(cc, new_st), v)
                else:
                    out._acc(0, 0, v)
        return out

    def partial_transpose(self, leg):
        """Transpose the row/column indices of a single leg."""
        legs = self.legs
        assert 0 <= leg < len(legs)
        st = _strides(legs)
        out = ShapedMatrix(legs, self.ring)
        for r, row in self.rows.items():
            rw = _split(r, legs, st)
            for c, v in row.items():
                cw = _split(c, legs, st)
                nr = list(rw)
                nc = list(cw)
                nr[leg], nc[leg] = cw[leg], rw[leg]
                out._acc(_join(nr, st), _join(nc, st), v)
        return out

    def block(self, leg, r_idx, c_idx):
        """Extract the (r_idx, c_idx) block of one leg as a matrix on the
        remaining legs."""
        legs = self.legs
        new_legs = legs[:leg] + legs[leg + 1 :]
        if not new_legs:
            new_legs = (1,)
        st = _strides(legs)
        new_st = _strides(new_legs)
        out = ShapedMatrix(new_legs, self.ring)
        for r, row in self.rows.items():
            rw = _split(r, legs, st)
            if rw[leg] != r_idx:
                continue
            for c, v in row.items():
                cw = _split(c, legs, st)
                if cw[leg] != c_idx:
                    continue
                rr = rw[:leg] + rw[leg + 1 :]
                cc = cw[:leg] + cw[leg + 1 :]
                out._acc(_join(rr, new_st) if rr else 0, _join(cc, new_st) if cc else 0, v)
        return out

    # -- rational linear algebra ----------------------------------------

    def invert(self):
        """Exact inverse over the rationals via Gauss-Jordan elimination."""
        if self.ring is not RING_Q:
            raise ValueError("exact inversion is implemented over Q only")
        n = self.dim
        a = [row[:] for row in self.dense()]
        inv = [
            [Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                raise SingularMatrixError(f"singular at column {col}")
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            p = a[col][col]
            a[col] = [v / p for v in a[col]]
            inv[col] = [v / p for v in inv[col]]
            for r in range(n):
                if r == col or not a[r][col]:
                    continue
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
                inv[r] = [v - f * w for v, w in zip(inv[r], inv[col])]
        return ShapedMatrix.from_dense(self.legs, RING_Q, inv)

    def rank(self):
        if self.ring is not RING_Q:
            raise ValueError("rank is implemented over Q only")
        a = [row[:] for row in self.dense()]
        n = self.dim
        rank = 0
        for col in range(n):
            piv = next((r for r in range(rank, n) if a[r][col]), None)
            if piv is None:
                continue
            a[rank], a[piv] = a[piv], a[rank]
            p = a[rank][col]
            a[rank] = [v / p for v in a[rank]]
            for r in range(n):
                if r != rank and a[r][col]:
                    f = a[r][col]
                    a[r] = [v - f * w for v, w in zip(a[r], a[rank])]
            rank += 1
            if rank == n:
                break
        return rank


def _is_zero(v):
    if isinstance(v, Fraction):
        return v == 0
    return v.is_zero


def _hashable(v):
    return v if isinstance(v, Fraction) else frozenset(v.c.items())


def e_matrix(n, x, y, ring=RING_Q):
    """Elementary matrix unit e_{x,y} on one leg of dimension n."""
    return ShapedMatrix((n,), ring, {x: {y: ring.one()}})


def perm_p(n, ring=RING_Q):
    """The permutation (flip) operator on two legs of dimension n."""
    out = ShapedMatrix((n, n), ring)
    one = ring.one()
    for x in range(n):
        for y in range(n):
            out.rows.setdefault(x * n + y, {})[y * n + x] = one
    return out


def kron(a: ShapedMatrix, b: ShapedMatrix) -> ShapedMatrix:
    if a.ring is not b.ring:
        raise ValueError("ring mismatch in kron")
    legs = a.legs + b.legs
    bd = b.dim
    out = ShapedMatrix(legs, a.ring)
    for ra, rowa in a.rows.items():
        for ca, va in rowa.items():
            for rb, rowb in b.rows.items():
                r = ra * bd + rb
                dest = out.rows.setdefault(r, {})
                for cb, vb in rowb.items():
                    dest[ca * bd + cb] = va * vb
    for r in [r for r, row in out.rows.items() if not row]:
        del out.rows[r]
    return out


def embed_pair(a: ShapedMatrix, i, j, total) -> ShapedMatrix:
    """Place a two-leg operator on legs (i, j) of a `total`-leg space,
    identity elsewhere.  All legs share the operator's leg dimension."""
    assert len(a.legs) == 2 and a.legs[0] == a.legs[1]
    assert i != j and 0 <= i < total and 0 <= j < total
    d = a.legs[0]
    legs = (d,) * total
    st = _strides(legs)
    others = [k for k in range(total) if k not in (i, j)]
    out = ShapedMatrix(legs, a.ring)
    ast = _strides(a.legs)
    fillers = [()]
    for _ in others:
        fillers = [f + (t,) for f in fillers for t in range(d)]
    for r, row in a.rows.items():
        r1, r2 = _split(r, a.legs, ast)
        for c, v in row.items():
            c1, c2 = _split(c, a.legs, ast)
            for fill in fillers:
                rw = [0] * total
                cw = [0] * total
                rw[i], rw[j] = r1, r2
                cw[i], cw[j] = c1, c2
                for k, t in zip(others, fill):
                    rw[k] = t
                    cw[k] = t
                out.rows.setdefault(_join(rw, st), {})[_join(cw, st)] = v
    return out


def embed_single(a: ShapedMatrix, i, total) -> ShapedMatrix:
    """Place a one-leg operator on leg i of a `total`-leg space."""
    assert len(a.legs) == 1
    d = a.legs[0]
    legs = (d,) * total
    st = _strides(legs)
    others = [k for k in range(total) if k != i]
    out = ShapedMatrix(legs, a.ring)
    fillers = [()]
    for _ in others:
        fillers = [f + (t,) for f in fillers for t in range(d)]
    for r, row in a.rows.items():
        for c, v in row.items():
            for fill in fillers:
                rw = [0] * total
                cw = [0] * total
                rw[i], cw[i] = r, c
                for k, t in zip(others, fill):
                    rw[k] = t
                    cw[k] = t
                out.rows.setdefault(_join(rw, st), {})[_join(cw, st)] = v
    return out


def commutator(a, b):
    return a @ b - b @ a


def matrix_power(a: ShapedMatrix, k: int) -> ShapedMatrix:
    if k < 0:
        return matrix_power(a.invert(), -k)
    out = ShapedMatrix.identity(a.legs, a.ring)
    for _ in range(k):
        out = out @ a
    return out


def poly_coeff(m: ShapedMatrix, k: int) -> ShapedMatrix:
    """Rational coefficient matrix of l^k for a matrix over Q[l]."""
    out = ShapedMatrix(m.legs, RING_Q)
    for r, row in m.rows.items():
        for c, v in row.items():
            a = v.coeff(k)
            if a:
                out.rows.setdefault(r, {})[c] = a
    return out


def poly_map(m: ShapedMatrix, fn, ring) -> ShapedMatrix:
    return m.map_entries(fn, ring)


# -- serialization ----------------------------------------------------


def export_coo_json(m: ShapedMatrix, path=None):
    obj = {
        "schema": "ybx/1",
        "legs": list(m.legs),
        "ring": m.ring.name,
        "entries": [[r, c, value_to_json(m.ring, v)] for r, c, v in m.entries()],
    }
    if path is not None:
        with open(path, "w") as fh:
            json.dump(obj, fh, indent=1)
    return obj


def import_coo_json(obj_or_path):
    from .rings import RING_BY_NAME

    if isinstance(obj_or_path, str):
        with open(obj_or_path) as fh:
            obj = json.load(fh)
    else:
        obj = obj_or_path
    if obj.get("schema") != "ybx/1":
        raise ValueError("unsupported schema")
    ring = RING_BY_NAME[obj["ring"]]
    m = ShapedMatrix(tuple(obj["legs"]), ring)
    for r, c, v in obj["entries"]:
        m._acc(r, c, value_from_json(ring, v))
    return m


def _cell_str(ring, v):
    obj = value_to_json(ring, v)
    if isinstance(obj, str):
        return obj
    return json.dumps(obj, separators=(",", ":"))


def _cell_parse(ring, s):
    s = s.strip()
    if ring is RING_Q:
        return rat(s)
    return value_from_json(ring, json.loads(s))


def export_dense_csv(m: ShapedMatrix, path):
    """Dense delimited dump; header row records legs and ring so the file
    round-trips bit-exactly."""
    with open(path, "w") as fh:
        fh.write("#legs=" + " ".join(map(str, m.legs)) + ";ring=" + m.ring.name + "\n")
        for row in m.dense():
            fh.write("\t".join(_cell_str(m.ring, v) for v in row) + "\n")


def import_dense_csv(path):
    from .rings import RING_BY_NAME

    with open(path) as fh:
        header = fh.readline().strip()
        assert header.startswith("#legs=")
        legs_part, ring_part = header[1:].split(";")
        legs = tuple(int(t) for t in legs_part.split("=")[1].split())
        ring = RING_BY_NAME[ring_part.split("=")[1]]
        m = ShapedMatrix(legs, ring)
        for r, line in enumerate(fh):
            cells = line.rstrip("\n").split("\t")
            for c, cell in enumerate(cells):
                v = _cell_parse(ring, cell)
                if not _is_zero(v):
                    m.rows.setdefault(r, {})[c] = v
    return m
