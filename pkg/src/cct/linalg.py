"""Exact dense linear algebra over Q, F_p and Z.

Matrices are small (everything in this project stays well below 200x200), so
dense Gaussian elimination is used throughout.  Over F_p the entries live in
an int64 numpy array and the row operations are vectorised; over Q (and in
integer mode) the entries are Fractions / ints in an object array.  Integer
matrices support Smith normal form and saturated integer kernels; field
operations reject integer mode.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import LinalgError
from .fields import FieldSpec

__all__ = ["ExactMatrix", "kernel_basis", "rank", "solve", "integer_kernel", "smith_normal_form"]


class ExactMatrix:
    """A dense exact matrix.  ``field is None`` means integer (Z) mode."""

    __slots__ = ("field", "a")

    def __init__(self, field: FieldSpec | None, data):
        self.field = field
        if isinstance(data, np.ndarray):
            arr = data
        else:
            rows = [list(r) for r in data]
            ncols = len(rows[0]) if rows else 0
            arr = np.empty((len(rows), ncols), dtype=object)
            for i, r in enumerate(rows):
                if len(r) != ncols:
                    raise LinalgError("ragged rows")
                for j, x in enumerate(r):
                    arr[i, j] = x
        if field is not None and field.is_fp:
            arr = np.asarray(arr, dtype=np.int64) % field.p
        else:
            arr = np.asarray(arr, dtype=object)
            if field is not None:
                conv = np.vectorize(lambda x: Fraction(x), otypes=[object])
                if arr.size:
                    arr = conv(arr)
        self.a = arr

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, field, rows, cols):
        if field is not None and field.is_fp:
            return cls(field, np.zeros((rows, cols), dtype=np.int64))
        arr = np.empty((rows, cols), dtype=object)
        z = Fraction(0) if field is not None else 0
        arr[:] = z
        return cls(field, arr)

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        one = field.one() if field is not None else 1
        for i in range(n):
            m.a[i, i] = one
        return m

    @classmethod
    def column(cls, field, vec):
        return cls(field, [[x] for x in vec])

    # -- basic structure ----------------------------------------------------

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    def copy(self):
        return ExactMatrix(self.field, self.a.copy())

    def tolist(self):
        return [list(r) for r in self.a]

    def transpose(self):
        return ExactMatrix(self.field, self.a.T.copy())

    def is_zero(self) -> bool:
        if self.a.size == 0:
            return True
        return not np.any(self.a != (0 if self._int_mode else self._zero))

    @property
    def _int_mode(self):
        return self.field is None or self.field.is_fp

    @property
    def _zero(self):
        return 0 if self._int_mode else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return bool(np.all(self.a == other.a))

    def __hash__(self):
        return hash((self.shape, tuple(self.a.flat)))

    def __repr__(self):
        return f"ExactMatrix({self.tolist()!r})"

    # -- arithmetic ----------------------------------------------------------

    def _wrap(self, arr):
        m = ExactMatrix.__new__(ExactMatrix)
        m.field = self.field
        if self.field is not None and self.field.is_fp:
            arr = arr % self.field.p
        m.a = arr
        return m

    def __add__(self, other):
        return self._wrap(self.a + other.a)

    def __sub__(self, other):
        return self._wrap(self.a - other.a)

    def __neg__(self):
        return self._wrap(-self.a)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise LinalgError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.a.size == 0 or other.a.size == 0:
            return ExactMatrix.zeros(self.field, self.rows, other.cols)
        return self._wrap(self.a @ other.a)

    def scale(self, c):
        arr = self.a * c
        return self._wrap(arr)

    @staticmethod
    def hstack(mats):
        mats = list(mats)
        field = mats[0].field
        return ExactMatrix(field, np.hstack([m.a for m in mats]))

    @staticmethod
    def vstack(mats):
        mats = list(mats)
        field = mats[0].field
        return ExactMatrix(field, np.vstack([m.a for m in mats]))

    # -- elimination ----------------------------------------------------------

    def _require_field(self, op):
        if self.field is None:
            raise LinalgError(f"{op} requires a field; integer-mode input rejected")

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot column list)."""
        if self.field is None:
            # rank-type questions on integer matrices are answered over Q
            return ExactMatrix(FieldSpec("rationals"), self.a).rref()
        if self.field.is_fp:
            r, piv = _rref_fp(self.a.copy(), self.field.p)
        else:
            r, piv = _rref_frac(self.a.copy())
        return self._wrap_field(r), piv

    def _wrap_field(self, arr):
        m = ExactMatrix.__new__(ExactMatrix)
        m.field = self.field if self.field is not None else FieldSpec("rationals")
        m.a = arr
        return m


def _rref_fp(a: np.ndarray, p: int):
    a = a % p
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        a -= np.outer(col, a[r])
        a %= p
        pivots.append(c)
        r += 1
    return a, pivots


def _rref_frac(a: np.ndarray):
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        i = None
        for k in range(r, nrows):
            if a[k, c] != 0:
                i = k
                break
        if i is None:
            continue
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * (Fraction(1) / Fraction(a[r, c]))
        for k in range(nrows):
            if k != r and a[k, c] != 0:
                a[k] = a[k] - a[k, c] * a[r]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: ExactMatrix) -> int:
    """Rank of a matrix over a field (integer matrices are ranked over Q)."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, piv = m.rref()
    return len(piv)


def kernel_basis(m: ExactMatrix):
    """Basis of the right null space of a matrix over a field.

    Returns a list of vectors (tuples of scalars); its length is
    cols - rank.  Integer-mode input is rejected.
    """
    m._require_field("kernel_basis")
    f = m.field
    n = m.cols
    if m.rows == 0:
        return [tuple(f.one() if j == i else f.zero() for j in range(n)) for i in range(n)]
    r, pivots = m.rref()
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for c in free:
        v = [f.zero()] * n
        v[c] = f.one()
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(r.a[i, c] if not f.is_fp else int(r.a[i, c]))
        basis.append(tuple(v))
    return basis


def solve(m: ExactMatrix, b):
    """One exact solution x of m x = b, or None if the system is inconsistent."""
    m._require_field("solve")
    f = m.field
    bcol = b if isinstance(b, ExactMatrix) else ExactMatrix.column(f, list(b))
    aug = ExactMatrix.hstack([m, bcol])
    r, pivots = aug.rref()
    n = m.cols
    if any(pc >= n for pc in pivots):
        return None
    x = [f.zero()] * n
    for i, pc in enumerate(pivots):
        val = r.a[i, n]
        x[pc] = int(val) if f.is_fp else val
    return tuple(x)


def solve_matrix(m: ExactMatrix, b: ExactMatrix):
    """X with m @ X = b (columnwise solve), or None if any column fails."""
    m._require_field("solve")
    f = m.field
    aug = ExactMatrix.hstack([m, b])
    r, pivots = aug.rref()
    n = m.cols
    if any(pc >= n for pc in pivots):
        return None
    x = ExactMatrix.zeros(f, n, b.cols)
    for i, pc in enumerate(pivots):
        x.a[pc, :] = r.a[i, n:]
    return x


# -- integer (Z) lattice routines ------------------------------------------


def smith_normal_form(m: ExactMatrix):
    """Smith normal form of an integer matrix.

    Returns (U, D, V) with U @ m @ V = D, U and V unimodular, D diagonal with
    each diagonal entry dividing the next.
    """
    if m.field is not None:
        raise LinalgError("smith_normal_form expects an integer-mode matrix")
    d = np.array([[int(x) for x in row] for row in m.a], dtype=object) if m.a.size else m.a.astype(object).copy()
    if m.a.size == 0:
        d = np.zeros(m.shape, dtype=object)
    nrows, ncols = m.shape
    u = np.eye(nrows, dtype=object)
    v = np.eye(ncols, dtype=object)

    def pivot_nonzero(t):
        for i in range(t, nrows):
            for j in range(t, ncols):
                if d[i, j] != 0:
                    return i, j
        return None

    t = 0
    while t < min(nrows, ncols):
        pos = pivot_nonzero(t)
        if pos is None:
            break
        i, j = pos
        if i != t:
            d[[t, i]] = d[[i, t]]
            u[[t, i]] = u[[i, t]]
        if j != t:
            d[:, [t, j]] = d[:, [j, t]]
            v[:, [t, j]] = v[:, [j, t]]
        while True:
            done = True
            for i in range(t + 1, nrows):
                if d[i, t] != 0:
                    q = d[i, t] // d[t, t]
                    d[i] -= q * d[t]
                    u[i] -= q * u[t]
                    if d[i, t] != 0:
                        d[[t, i]] = d[[i, t]]
                        u[[t, i]] = u[[i, t]]
                        done = False
            for j in range(t + 1, ncols):
                if d[t, j] != 0:
                    q = d[t, j] // d[t, t]
                    d[:, j] -= q * d[:, t]
                    v[:, j] -= q * v[:, t]
                    if d[t, j] != 0:
                        d[:, [t, j]] = d[:, [j, t]]
                        v[:, [t, j]] = v[:, [j, t]]
                        done = False
            if done:
                break
        if d[t, t] < 0:
            d[t] = -d[t]
            u[t] = -u[t]
        t += 1
    # enforce the divisibility chain
    for t in range(min(nrows, ncols) - 1):
        a, b = d[t, t], d[t + 1, t + 1]
        if a != 0 and b % a != 0:
            # fold b into position t via one more reduction round
            d[:, t] += d[:, t + 1]
            v[:, t] += v[:, t + 1]
            return smith_normal_form(ExactMatrix(None, d))
    return ExactMatrix(None, u), ExactMatrix(None, d), ExactMatrix(None, v)


def integer_kernel(m: ExactMatrix):
    """Saturated Z-basis of {x : m x = 0} for an integer matrix.

    Computed through Smith normal form, so the returned lattice is pure: no
    vector outside the span has a nonzero multiple inside it.
    """
    if m.field is not None:
        raise LinalgError("integer_kernel expects an integer-mode matrix")
    if m.cols == 0:
        return []
    if m.rows == 0:
        eye = np.eye(m.cols, dtype=object)
        return [tuple(int(x) for x in eye[:, j]) for j in range(m.cols)]
    _, d, v = smith_normal_form(m)
    basis = []
    for j in range(m.cols):
        diag = d.a[j, j] if j < min(d.rows, d.cols) else 0
        if diag == 0:
            basis.append(tuple(int(x) for x in v.a[:, j]))
    return basis
