"""Dense and sparse exact linear algebra.

Vectors are sparse dicts ``{index: scalar}`` with no explicit zeros;
matrices come in two flavours: the public :class:`DenseMatrix` (row-major
scalar list) and internal lists of sparse rows.  Subspaces are stored as
canonical reduced row echelon bases, so equality of subspaces is equality
of representations.
"""

from __future__ import annotations

from .fields import Field

Vec = dict  # {int: scalar}, zero entries omitted


# ---------------------------------------------------------------------------
# sparse vector helpers

def vec_iadd(acc: Vec, v: Vec, c=None) -> None:
    """acc += c*v in place (c=None means 1)."""
    if c is None:
        for j, x in v.items():
            s = acc.get(j)
            s = x if s is None else s + x
            if s:
                acc[j] = s
            else:
                acc.pop(j, None)
    else:
        if not c:
            return
        for j, x in v.items():
            s = acc.get(j)
            t = c * x
            s = t if s is None else s + t
            if s:
                acc[j] = s
            else:
                acc.pop(j, None)


def vec_scale(v: Vec, c) -> Vec:
    if not c:
        return {}
    return {j: c * x for j, x in v.items()}


def vec_sub(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for j, x in b.items():
        s = out.get(j)
        s = -x if s is None else s - x
        if s:
            out[j] = s
        else:
            out.pop(j, None)
    return out


def vec_eq(a: Vec, b: Vec) -> bool:
    return a == b


def vec_tensor(a: Vec, b: Vec, dim_b: int) -> Vec:
    """a (x) b under the fixed ordering (i, j) -> i*dim_b + j."""
    out = {}
    for i, x in a.items():
        base = i * dim_b
        for j, y in b.items():
            out[base + j] = x * y
    return out


def vec_from_list(entries) -> Vec:
    return {j: x for j, x in enumerate(entries) if x}


def vec_to_list(v: Vec, n: int, field: Field):
    out = [field.zero] * n
    for j, x in v.items():
        out[j] = x
    return out


# ---------------------------------------------------------------------------
# dense matrices

class DenseMatrix:
    """Row-major exact matrix; maps column vectors: (M @ v)[i] = sum_j M[i][j} v[j]."""

    __slots__ = ("rows", "cols", "field", "data")

    def __init__(self, rows: int, cols: int, field: Field, data):
        if len(data) != rows * cols:
            raise ValueError("entry count %d != %d x %d" % (len(data), rows, cols))
        self.rows = rows
        self.cols = cols
        self.field = field
        self.data = data

    @classmethod
    def from_rows(cls, field: Field, rows):
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(row)
        return cls(r, c, field, flat)

    @classmethod
    def identity(cls, n: int, field: Field):
        data = [field.zero] * (n * n)
        for i in range(n):
            data[i * n + i] = field.one
        return cls(n, n, field, data)

    @classmethod
    def zero(cls, rows: int, cols: int, field: Field):
        return cls(rows, cols, field, [field.zero] * (rows * cols))

    @classmethod
    def from_cols(cls, field: Field, cols, nrows: int):
        """Build from a list of sparse column vectors."""
        ncols = len(cols)
        data = [field.zero] * (nrows * ncols)
        for j, col in enumerate(cols):
            for i, x in col.items():
                data[i * ncols + j] = x
        return cls(nrows, ncols, field, data)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i: int) -> Vec:
        base = i * self.cols
        return {j: self.data[base + j] for j in range(self.cols) if self.data[base + j]}

    def col(self, j: int) -> Vec:
        return {i: self.data[i * self.cols + j] for i in range(self.rows) if self.data[i * self.cols + j]}

    def sparse_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def sparse_cols(self):
        return [self.col(j) for j in range(self.cols)]

    def apply(self, v: Vec) -> Vec:
        out = {}
        for j, x in v.items():
            vec_iadd(out, self.col(j), x)
        return out

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch %dx%d @ %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        cols = [self.apply(other.col(j)) for j in range(other.cols)]
        return DenseMatrix.from_cols(self.field, cols, self.rows)

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._same_shape(other)
        return DenseMatrix(self.rows, self.cols, self.field,
                           [a + b for a, b in zip(self.data, other.data)])

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._same_shape(other)
        return DenseMatrix(self.rows, self.cols, self.field,
                           [a - b for a, b in zip(self.data, other.data)])

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __eq__(self, other):
        return (isinstance(other, DenseMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __repr__(self):
        return "DenseMatrix(%dx%d over %r)" % (self.rows, self.cols, self.field)

    def to_lists(self):
        return [[self.data[i * self.cols + j] for j in range(self.cols)] for i in range(self.rows)]


class Trilinear:
    """Coefficients of a bilinear map V_a (x) V_b -> V_c on basis pairs."""

    __slots__ = ("dims", "coeffs")

    def __init__(self, dims, coeffs):
        a, b, c = dims
        if len(coeffs) != a * b * c:
            raise ValueError("coefficient count %d != %d*%d*%d" % (len(coeffs), a, b, c))
        self.dims = (a, b, c)
        self.coeffs = coeffs

    @classmethod
    def from_nested(cls, field: Field, nested):
        a = len(nested)
        b = len(nested[0]) if a else 0
        c = len(nested[0][0]) if b else 0
        flat = []
        for plane in nested:
            for row in plane:
                flat.extend(row)
        return cls((a, b, c), flat)

    def pair(self, i: int, j: int) -> Vec:
        a, b, c = self.dims
        base = (i * b + j) * c
        return {k: self.coeffs[base + k] for k in range(c) if self.coeffs[base + k]}

    def to_nested(self):
        a, b, c = self.dims
        return [[[self.coeffs[(i * b + j) * c + k] for k in range(c)]
                 for j in range(b)] for i in range(a)]


# ---------------------------------------------------------------------------
# reduced row echelon form and subspaces

def rref_rows(rows, field: Field):
    """Canonical RREF of a list of sparse rows: list of (pivot, row) sorted by pivot."""
    basis = []  # (pivot, row) sorted by pivot
    for r in rows:
        r = dict(r)
        for p, row in basis:
            c = r.get(p)
            if c:
                for j, x in row.items():
                    s = r.get(j)
                    t = c * x
                    s = -t if s is None else s - t
                    if s:
                        r[j] = s
                    else:
                        r.pop(j, None)
        if not r:
            continue
        pivot = min(r)
        inv = r[pivot]
        if inv != field.one:
            r = {j: x / inv for j, x in r.items()}
        for p, row in basis:
            c = row.get(pivot)
            if c:
                for j, x in r.items():
                    s = row.get(j)
                    t = c * x
                    s = -t if s is None else s - t
                    if s:
                        row[j] = s
                    else:
                        row.pop(j, None)
        basis.append((pivot, r))
        basis.sort(key=lambda pr: pr[0])
    return basis


class Subspace:
    """Subspace of an ambient coordinate space, held as a canonical RREF basis."""

    __slots__ = ("ambient", "field", "pivots", "rows")

    def __init__(self, ambient: int, field: Field, basis_rows):
        self.ambient = ambient
        self.field = field
        reduced = rref_rows(basis_rows, field)
        self.pivots = [p for p, _ in reduced]
        self.rows = [r for _, r in reduced]

    @classmethod
    def full(cls, ambient: int, field: Field):
        return cls(ambient, field, [{i: field.one} for i in range(ambient)])

    @classmethod
    def zero(cls, ambient: int, field: Field):
        return cls(ambient, field, [])

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> DenseMatrix:
        data = [self.field.zero] * (self.dim * self.ambient)
        for i, row in enumerate(self.rows):
            for j, x in row.items():
                data[i * self.ambient + j] = x
        return DenseMatrix(self.dim, self.ambient, self.field, data)

    def reduce(self, v: Vec) -> Vec:
        """Remainder of v after elimination against the basis."""
        r = dict(v)
        for p, row in zip(self.pivots, self.rows):
            c = r.get(p)
            if c:
                for j, x in row.items():
                    s = r.get(j)
                    t = c * x
                    s = -t if s is None else s - t
                    if s:
                        r[j] = s
                    else:
                        r.pop(j, None)
        return r

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def coords(self, v: Vec):
        """Coordinates of v in the RREF basis, or None if v is outside."""
        cs = [v.get(p, self.field.zero) for p in self.pivots]
        check = dict(v)
        for c, row in zip(cs, self.rows):
            if c:
                vec_iadd(check, row, -c)
        if check:
            return None
        return cs

    def from_coords(self, cs) -> Vec:
        out = {}
        for c, row in zip(cs, self.rows):
            vec_iadd(out, row, c)
        return out

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.pivots == other.pivots and self.rows == other.rows)

    def __repr__(self):
        return "Subspace(dim %d of %d)" % (self.dim, self.ambient)


def kernel_from_cols(cols, ncols: int, nrows: int, field: Field) -> Subspace:
    """Null space of the linear map whose j-th column is cols[j]."""
    # transpose the sparse columns into equation rows
    rows_map = {}
    for j, col in enumerate(cols):
        for i, x in col.items():
            rows_map.setdefault(i, {})[j] = x
    reduced = rref_rows(list(rows_map.values()), field)
    pivots = {p for p, _ in reduced}
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = {f: field.one}
        for p, row in reduced:
            c = row.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return Subspace(ncols, field, basis)


def kernel_of(m: DenseMatrix) -> Subspace:
    """Null space of m, with canonical RREF basis."""
    return kernel_from_cols(m.sparse_cols(), m.cols, m.rows, m.field)


def image_of(m: DenseMatrix) -> Subspace:
    """Column space of m, with canonical RREF basis."""
    return Subspace(m.rows, m.field, m.sparse_cols())


def image_from_cols(cols, nrows: int, field: Field) -> Subspace:
    return Subspace(nrows, field, cols)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection of two subspaces of the same ambient space."""
    if a.ambient != b.ambient:
        raise ValueError("ambient dimension mismatch: %d vs %d" % (a.ambient, b.ambient))
    # x = sum u_i a_i lies in b  iff  sum u_i reduce_b(a_i) = 0
    residues = [b.reduce(row) for row in a.rows]
    ker = kernel_from_cols(residues, len(a.rows), a.ambient, a.field)
    basis = [a.from_coords(vec_to_list(u, a.dim, a.field)) for u in ker.rows]
    return Subspace(a.ambient, a.field, basis)


def tensor_map(f: DenseMatrix, g: DenseMatrix) -> DenseMatrix:
    """Kronecker product f (x) g for the ordering (i, j) -> i*dim2 + j."""
    if f.field != g.field:
        raise ValueError("field mismatch")
    rows = f.rows * g.rows
    cols = f.cols * g.cols
    data = [f.field.zero] * (rows * cols)
    for i in range(f.rows):
        for j in range(f.cols):
            a = f.data[i * f.cols + j]
            if not a:
                continue
            for k in range(g.rows):
                base_r = i * g.rows + k
                for l in range(g.cols):
                    b = g.data[k * g.cols + l]
                    if b:
                        data[base_r * cols + (j * g.cols + l)] = a * b
    return DenseMatrix(rows, cols, f.field, data)


def rank_of(m: DenseMatrix) -> int:
    return len(rref_rows(m.sparse_rows(), m.field))
