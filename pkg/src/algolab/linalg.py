"""Exact linear algebra over the rationals.

Matrices are lists of rows; entries are ints or Fractions and all arithmetic
is exact.  The library-wide convention is that vectors are rows and maps act
on the right: the image of v under M is v @ M (``vec_mat``).
"""

from fractions import Fraction


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def copy_matrix(a):
    return [row[:] for row in a]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    if not a:
        return []
    n = len(b)
    if n == 0:
        return [[] for _ in a]
    bt = transpose(b)
    out = []
    for row in a:
        out.append([sum(x * y for x, y in zip(row, col)) for col in bt])
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a):
    return [[-x for x in row] for row in a]


def vec_mat(v, a):
    if not a:
        return []
    cols = len(a[0])
    out = [0] * cols
    for x, row in zip(v, a):
        if x:
            for j, y in enumerate(row):
                if y:
                    out[j] += x * y
    return out


def mat_pow(a, k):
    n = len(a)
    result = identity(n)
    base = copy_matrix(a)
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def rref(a):
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a):
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def row_space_basis(a):
    r, pivots = rref(a)
    return [r[i] for i in range(len(pivots))]


def right_nullspace(a):
    """Basis (as rows) of {x : a @ x^T = 0}."""
    if not a:
        return []
    cols = len(a[0])
    r, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][fc]
        basis.append(v)
    return basis


def left_nullspace(a):
    """Basis (as rows) of {v : v @ a = 0}."""
    if not a:
        return []
    if not a[0]:
        return [list(row) for row in identity(len(a))]
    return right_nullspace(transpose(a))


class RowSolver:
    """Expresses vectors as combinations of a fixed list of rows.

    Precomputes an rref of the rows with a transform so that membership tests
    and coordinate extraction are cheap and exact.
    """

    def __init__(self, rows, ncols):
        self.ncols = ncols
        self.nrows = len(rows)
        aug = [[Fraction(x) for x in row] + [Fraction(0)] * self.nrows for row in rows]
        for i in range(self.nrows):
            aug[i][ncols + i] = Fraction(1)
        self._red = []
        self._pivots = []
        r = 0
        for c in range(ncols):
            pivot = None
            for i in range(r, self.nrows):
                if aug[i][c]:
                    pivot = i
                    break
            if pivot is None:
                continue
            aug[r], aug[pivot] = aug[pivot], aug[r]
            pv = aug[r][c]
            if pv != 1:
                aug[r] = [x / pv for x in aug[r]]
            for i in range(self.nrows):
                if i != r and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
            self._pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        self._rank = r
        self._aug = aug

    @property
    def rank(self):
        return self._rank

    def reduce(self, v):
        """Returns (residue, coeffs) with v = coeffs @ rows + residue."""
        w = [Fraction(x) for x in v]
        coeffs = [Fraction(0)] * self.nrows
        for i, c in enumerate(self._pivots):
            if w[c]:
                f = w[c]
                row = self._aug[i]
                for j in range(self.ncols):
                    if row[j]:
                        w[j] -= f * row[j]
                for j in range(self.nrows):
                    if row[self.ncols + j]:
                        coeffs[j] += f * row[self.ncols + j]
        return w, coeffs

    def contains(self, v):
        residue, _ = self.reduce(v)
        return not any(residue)

    def coefficients(self, v):
        """Coefficients of v over the original rows, or None if outside."""
        residue, coeffs = self.reduce(v)
        if any(residue):
            return None
        return coeffs


def det(a):
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    result = Fraction(1)
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        result *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def inverse(a):
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(0)] * n for row in a]
    for i in range(n):
        aug[i][n + i] = Fraction(1)
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red[:n]]


def is_positive_definite(a):
    """Sylvester criterion for a symmetric rational matrix."""
    n = len(a)
    for k in range(1, n + 1):
        minor = [row[:k] for row in a[:k]]
        if det(minor) <= 0:
            return False
    return True
