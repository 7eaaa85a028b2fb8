"""Exact linear maps between tensor powers of coordinate spaces.

A :class:`LinMap` of shape ``(dst_dim, src_dim)`` is a matrix acting on column
vectors.  Composition is ``g @ f`` (apply ``f`` first).  Tensor products use
one global index convention: the basis vector ``e_i (x) e_j`` of a product of
spaces with dimensions ``(a, b)`` has flat index ``i*b + j``, so :func:`kron`
is the ordinary Kronecker product.

Entries are stored column-by-column as sparse dicts.  Doubles of 36-dim
algebras compose maps whose dense Kronecker factors would hold tens of
millions of zeros, so only nonzero entries are kept.
"""

from __future__ import annotations

from functools import reduce
from itertools import product

from .errors import DimensionMismatch, NotRankOne, Singular
from .scalars import invert

__all__ = [
    "LinMap",
    "compose",
    "compose_kron",
    "kron_compose",
    "kron",
    "swap",
    "permute_factors",
    "identity",
    "kernel_basis",
    "rank",
    "rank_one_factor",
    "invert_matrix",
    "solve",
]


def _clean(col):
    return {i: v for i, v in col.items() if v != 0}


class LinMap:
    """Immutable exact matrix, ``dst_dim`` rows by ``src_dim`` columns."""

    __slots__ = ("dst_dim", "src_dim", "_cols", "_hash")

    def __init__(self, dst_dim: int, src_dim: int, cols=None, _trusted: bool = False):
        if dst_dim < 0 or src_dim < 0:
            raise ValueError("dimensions must be non-negative")
        self.dst_dim = dst_dim
        self.src_dim = src_dim
        if cols is None:
            cols = [{} for _ in range(src_dim)]
        elif not _trusted:
            cols = [_clean(dict(c)) for c in cols]
            if len(cols) != src_dim:
                raise DimensionMismatch(f"expected {src_dim} columns, got {len(cols)}")
            for c in cols:
                for i in c:
                    if not 0 <= i < dst_dim:
                        raise DimensionMismatch(f"row index {i} out of range for {dst_dim} rows")
        self._cols = tuple(cols)
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_rows(cls, rows, src_dim=None):
        rows = [list(r) for r in rows]
        if src_dim is None:
            src_dim = len(rows[0]) if rows else 0
        cols = [{} for _ in range(src_dim)]
        for i, row in enumerate(rows):
            if len(row) != src_dim:
                raise DimensionMismatch("ragged rows")
            for j, v in enumerate(row):
                if v != 0:
                    cols[j][i] = v
        return cls(len(rows), src_dim, cols, _trusted=True)

    @classmethod
    def from_entries(cls, dst_dim, src_dim, entries):
        """Build from a mapping ``{(row, col): value}``; repeated keys are summed."""
        cols = [{} for _ in range(src_dim)]
        for (i, j), v in entries.items():
            if not (0 <= i < dst_dim and 0 <= j < src_dim):
                raise DimensionMismatch(f"entry {(i, j)} outside {dst_dim}x{src_dim}")
            cols[j][i] = cols[j].get(i, 0) + v
        return cls(dst_dim, src_dim, [_clean(c) for c in cols], _trusted=True)

    @classmethod
    def column(cls, values):
        values = list(values)
        return cls(len(values), 1, [{i: v for i, v in enumerate(values) if v != 0}], _trusted=True)

    @classmethod
    def row(cls, values):
        values = list(values)
        return cls(1, len(values), [({0: v} if v != 0 else {}) for v in values], _trusted=True)

    @classmethod
    def scalar(cls, value):
        return cls(1, 1, [{0: value} if value != 0 else {}], _trusted=True)

    @classmethod
    def zero(cls, dst_dim, src_dim):
        return cls(dst_dim, src_dim)

    # -- access -------------------------------------------------------------
    @property
    def shape(self):
        return (self.dst_dim, self.src_dim)

    def col(self, j: int) -> dict:
        """Nonzero entries of column ``j`` as ``{row: value}`` (do not mutate)."""
        return self._cols[j]

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.dst_dim and 0 <= j < self.src_dim):
            raise IndexError(key)
        return self._cols[j].get(i, 0)

    def items(self):
        """Iterate ``((row, col), value)`` over nonzero entries, column-major."""
        for j, c in enumerate(self._cols):
            for i in sorted(c):
                yield (i, j), c[i]

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self._cols)

    def to_rows(self):
        rows = [[0] * self.src_dim for _ in range(self.dst_dim)]
        for j, c in enumerate(self._cols):
            for i, v in c.items():
                rows[i][j] = v
        return rows

    def column_values(self, j: int = 0):
        c = self._cols[j]
        return [c.get(i, 0) for i in range(self.dst_dim)]

    def row_values(self, i: int = 0):
        return [c.get(i, 0) for c in self._cols]

    def is_zero(self) -> bool:
        return all(not c for c in self._cols)

    # -- algebra ------------------------------------------------------------
    def __matmul__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return compose(self, other)

    def __add__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        cols = []
        for a, b in zip(self._cols, other._cols):
            c = dict(a)
            for i, v in b.items():
                c[i] = c.get(i, 0) + v
            cols.append(_clean(c))
        return LinMap(self.dst_dim, self.src_dim, cols, _trusted=True)

    def __neg__(self):
        return LinMap(self.dst_dim, self.src_dim, [{i: -v for i, v in c.items()} for c in self._cols], _trusted=True)

    def __sub__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        if isinstance(k, LinMap):
            return NotImplemented
        if k == 0:
            return LinMap.zero(self.dst_dim, self.src_dim)
        return LinMap(self.dst_dim, self.src_dim, [{i: v * k for i, v in c.items()} for c in self._cols], _trusted=True)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * invert(k)

    def tensor(self, other):
        return kron(self, other)

    @property
    def T(self):
        cols = [{} for _ in range(self.dst_dim)]
        for j, c in enumerate(self._cols):
            for i, v in c.items():
                cols[i][j] = v
        return LinMap(self.src_dim, self.dst_dim, cols, _trusted=True)

    def apply(self, vector):
        """Apply to a dense coordinate list, returning a dense list."""
        if len(vector) != self.src_dim:
            raise DimensionMismatch("vector length does not match src_dim")
        out = [0] * self.dst_dim
        for j, x in enumerate(vector):
            if x == 0:
                continue
            for i, v in self._cols[j].items():
                out[i] += v * x
        return out

    def as_scalar(self):
        if self.shape != (1, 1):
            raise DimensionMismatch(f"{self.shape} map is not a scalar")
        return self._cols[0].get(0, 0)

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return self.shape == other.shape and self._cols == other._cols

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, tuple(frozenset(c.items()) for c in self._cols)))
        return self._hash

    def first_difference(self, other):
        """First entry ``(row, col, self_value, other_value)`` where the maps differ."""
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        for j, (a, b) in enumerate(zip(self._cols, other._cols)):
            if a != b:
                for i in sorted(set(a) | set(b)):
                    if a.get(i, 0) != b.get(i, 0):
                        return (i, j, a.get(i, 0), b.get(i, 0))
        return None

    def __repr__(self):
        return f"LinMap({self.dst_dim}x{self.src_dim}, nnz={self.nnz})"

    def __str__(self):
        return "\n".join("[" + ", ".join(str(v) for v in r) + "]" for r in self.to_rows())


# ----------------------------------------------------------------------------
# structural maps


def identity(d: int) -> LinMap:
    return LinMap(d, d, [{j: 1} for j in range(d)], _trusted=True)


def compose(g: LinMap, f: LinMap) -> LinMap:
    """The composite ``g o f``; requires ``f.dst_dim == g.src_dim``."""
    if f.dst_dim != g.src_dim:
        raise DimensionMismatch(f"cannot compose {g.shape} after {f.shape}")
    gcols = g._cols
    cols = []
    for fc in f._cols:
        acc = {}
        for k, a in fc.items():
            for i, b in gcols[k].items():
                acc[i] = acc.get(i, 0) + b * a
        cols.append(_clean(acc))
    return LinMap(g.dst_dim, f.src_dim, cols, _trusted=True)


def _kron2(f: LinMap, g: LinMap) -> LinMap:
    gd = g.dst_dim
    cols = []
    for fc in f._cols:
        for gc in g._cols:
            col = {}
            for i1, a in fc.items():
                base = i1 * gd
                for i2, b in gc.items():
                    col[base + i2] = a * b
            cols.append(col)
    return LinMap(f.dst_dim * g.dst_dim, f.src_dim * g.src_dim, cols, _trusted=True)


def kron(*maps: LinMap) -> LinMap:
    """Tensor product of maps with the ``i*b + j`` flat-index convention."""
    if not maps:
        return LinMap.scalar(1)
    return reduce(_kron2, maps)


def _tensor_cols(cols, dst_dims):
    """Kronecker product of several column dicts."""
    out = {0: 1}
    for c, dd in zip(cols, dst_dims):
        nxt = {}
        for i, a in out.items():
            base = i * dd
            for k, b in c.items():
                nxt[base + k] = a * b
        out = nxt
    return out


def _multi_index(idx, dims):
    parts = []
    for dd in reversed(dims):
        idx, r = divmod(idx, dd)
        parts.append(r)
    return parts[::-1]


def compose_kron(g: LinMap, *maps: LinMap) -> LinMap:
    """``g o (m_1 (x) ... (x) m_k)`` without building the Kronecker product."""
    dst_dims = [m.dst_dim for m in maps]
    total_dst = 1
    for dd in dst_dims:
        total_dst *= dd
    if total_dst != g.src_dim:
        raise DimensionMismatch(f"cannot compose {g.shape} after a tensor of shape ({total_dst}, ...)")
    gcols = g._cols
    cols = []
    for js in product(*[m._cols for m in maps]):
        acc = {}
        for k, a in _tensor_cols(js, dst_dims).items():
            for i, b in gcols[k].items():
                acc[i] = acc.get(i, 0) + b * a
        cols.append(_clean(acc))
    src = 1
    for m in maps:
        src *= m.src_dim
    return LinMap(g.dst_dim, src, cols, _trusted=True)


def kron_compose(maps, f: LinMap) -> LinMap:
    """``(m_1 (x) ... (x) m_k) o f`` without building the Kronecker product."""
    maps = list(maps)
    src_dims = [m.src_dim for m in maps]
    dst_dims = [m.dst_dim for m in maps]
    total_src = 1
    total_dst = 1
    for a, b in zip(src_dims, dst_dims):
        total_src *= a
        total_dst *= b
    if total_src != f.dst_dim:
        raise DimensionMismatch("tensor factors do not match the target of f")
    mcols = [m._cols for m in maps]
    cache = {}
    cols = []
    for fc in f._cols:
        acc = {}
        for k, a in fc.items():
            col = cache.get(k)
            if col is None:
                parts = _multi_index(k, src_dims)
                col = _tensor_cols([mc[p] for mc, p in zip(mcols, parts)], dst_dims)
                cache[k] = col
            for i, b in col.items():
                acc[i] = acc.get(i, 0) + b * a
        cols.append(_clean(acc))
    return LinMap(total_dst, f.src_dim, cols, _trusted=True)


def permute_factors(dims, perm) -> LinMap:
    """Permutation map on ``V_0 (x) ... (x) V_{k-1}``.

    Output factor ``t`` is input factor ``perm[t]``; ``dims`` are the input
    factor dimensions.
    """
    dims = list(dims)
    perm = list(perm)
    if sorted(perm) != list(range(len(dims))):
        raise ValueError(f"{perm} is not a permutation of {len(dims)} factors")
    out_dims = [dims[p] for p in perm]
    total = 1
    for d in dims:
        total *= d
    cols = [None] * total
    for src_idx, multi in enumerate(product(*[range(d) for d in dims])):
        dst = 0
        for t, p in enumerate(perm):
            dst = dst * out_dims[t] + multi[p]
        cols[src_idx] = {dst: 1}
    return LinMap(total, total, cols, _trusted=True)


def swap(a: int, b: int) -> LinMap:
    """The symmetry ``e_i (x) e_j -> e_j (x) e_i`` on an ``a``-by-``b`` product."""
    return permute_factors([a, b], [1, 0])


# ----------------------------------------------------------------------------
# elimination


def _rref_rows(rows, ncols):
    """Gauss-Jordan on sparse rows in place; returns (rows, pivot columns)."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        p = None
        for k in range(r, nrows):
            if rows[k].get(c, 0) != 0:
                p = k
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = invert(prow[c])
        if inv != 1:
            prow = {j: v * inv for j, v in prow.items()}
            rows[r] = prow
        for k in range(nrows):
            if k == r:
                continue
            f = rows[k].get(c, 0)
            if f == 0:
                continue
            row = rows[k]
            for j, v in prow.items():
                nv = row.get(j, 0) - f * v
                if nv == 0:
                    row.pop(j, None)
                else:
                    row[j] = nv
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def _rows_of(m: LinMap):
    rows = [{} for _ in range(m.dst_dim)]
    for j, c in enumerate(m._cols):
        for i, v in c.items():
            rows[i][j] = v
    return rows


def rank(m: LinMap) -> int:
    _, pivots = _rref_rows(_rows_of(m), m.src_dim)
    return len(pivots)


def kernel_basis(m: LinMap):
    """Exact basis of the right null space as ``src_dim x 1`` columns.

    Each vector's first nonzero coordinate is 1; vectors are ordered by the
    position of that leading coordinate.
    """
    rows, pivots = _rref_rows(_rows_of(m), m.src_dim)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.src_dim):
        if free in pivot_set:
            continue
        vec = {free: 1}
        for r, pc in enumerate(pivots):
            v = rows[r].get(free, 0)
            if v != 0:
                vec[pc] = -v
        lead = min(vec)
        scale = invert(vec[lead])
        if scale != 1:
            vec = {i: v * scale for i, v in vec.items()}
        basis.append(LinMap(m.src_dim, 1, [vec], _trusted=True))
    basis.sort(key=lambda b: min(b.col(0)))
    return basis


def solve(a: LinMap, b: LinMap):
    """A particular solution ``x`` of ``a @ x == b``, or ``None`` if inconsistent.

    Free variables are set to zero.
    """
    if a.dst_dim != b.dst_dim:
        raise DimensionMismatch(f"system {a.shape} with right-hand side {b.shape}")
    n = a.src_dim
    rows = _rows_of(a)
    for i, r in enumerate(_rows_of(b)):
        for j, v in r.items():
            rows[i][n + j] = v
    rows, pivots = _rref_rows(rows, n)
    for r in rows[len(pivots):]:
        if r:
            return None
    cols = [{} for _ in range(b.src_dim)]
    for r, pc in enumerate(pivots):
        for j, v in rows[r].items():
            if j >= n:
                cols[j - n][pc] = v
    return LinMap(n, b.src_dim, [_clean(c) for c in cols], _trusted=True)


def invert_matrix(m: LinMap) -> LinMap:
    if m.dst_dim != m.src_dim:
        raise DimensionMismatch(f"cannot invert non-square {m.shape} map")
    x = solve(m, identity(m.dst_dim))
    if x is None:
        raise Singular("matrix is singular")
    return x


def rank_one_factor(m: LinMap):
    """Factor a rank-one map as ``col @ row`` with ``col``'s first nonzero entry 1."""
    if rank(m) != 1:
        raise NotRankOne("map does not have rank one")
    j = next(j for j, c in enumerate(m._cols) if c)
    c = m.col(j)
    lead = min(c)
    scale = invert(c[lead])
    u = LinMap(m.dst_dim, 1, [{i: v * scale for i, v in c.items()}], _trusted=True)
    # every column is a multiple of u; the multiple is read off at the lead row
    row = [{0: col[lead]} if col.get(lead, 0) != 0 else {} for col in m._cols]
    v = LinMap(1, m.src_dim, row, _trusted=True)
    return u, v
