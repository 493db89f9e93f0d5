"""Independent exact-rational linear algebra used as a test oracle.

Deliberately self-contained: nothing here imports the package under
test, so determinants, kernels, and minimal-support dependencies come
from a second, unrelated code path.
"""

from fractions import Fraction
from itertools import combinations


def det(rows):
    """Determinant by fraction-exact Gaussian elimination."""
    n = len(rows)
    mat = [[Fraction(x) for x in row] for row in rows]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            sign = -sign
        result *= mat[col][col]
        for r in range(col + 1, n):
            factor = mat[r][col] / mat[col][col]
            if factor:
                for c in range(col, n):
                    mat[r][c] -= factor * mat[col][c]
    return sign * result


def rref(rows):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return mat, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def kernel_basis(rows):
    """Basis vectors of the right null space, one per free column."""
    mat, pivots = rref(rows)
    ncols = len(rows[0]) if rows else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, p in enumerate(pivots):
            vec[p] = -mat[i][f]
        basis.append(tuple(vec))
    return basis


def _columns_to_rows(columns):
    height = len(columns[0])
    return [[col[i] for col in columns] for i in range(height)]


def minimal_dependencies(columns):
    """Minimal-support linear dependencies among the given columns.

    Returns a dict mapping each minimal dependent index set (a circuit
    of the column matroid) to its coefficient tuple, normalized so the
    first nonzero coefficient is 1; the coefficient vector on a minimal
    dependent set is unique up to scale.
    """
    m = len(columns)
    found = {}
    for size in range(1, m + 1):
        for picks in combinations(range(m), size):
            if any(circuit <= set(picks) for circuit in found):
                continue
            sub = [columns[i] for i in picks]
            if rank(_columns_to_rows(sub)) == size:
                continue
            kernel = kernel_basis(_columns_to_rows(sub))
            assert len(kernel) == 1, "minimality forces a line"
            coeffs = kernel[0]
            lead = next(x for x in coeffs if x != 0)
            coeffs = tuple(x / lead for x in coeffs)
            full = [Fraction(0)] * m
            for slot, index in enumerate(picks):
                full[index] = coeffs[slot]
            found[frozenset(picks)] = tuple(full)
    return found
