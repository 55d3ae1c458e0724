"""Dense real-matrix primitives.

Determinants, characteristic polynomials, eigenvalues, principal minors and
numerical rank, shared by every higher-level module. Index sets are 1-based
sorted tuples, matching the usual row/column numbering of matrix notation.

All functions are pure: they never mutate their arguments, so they are safe
to call concurrently.
"""

import itertools
from dataclasses import dataclass

import numpy as np

#: Dimension cap for full principal-minor enumeration (2**n - 1 subsets).
MINOR_ENUMERATION_CAP = 20

#: Default relative pivot threshold for numerical rank decisions.
RANK_TOL = 1e-9

#: Default relative tolerance for eigenvalue agreement.
EIGENVALUE_TOL = 1e-8

IndexSet = tuple[int, ...]


class EnumerationCapError(ValueError):
    """Refusal to enumerate subsets of a matrix that is too large."""

    def __init__(self, n: int, cap: int, what: str = "principal-minor enumeration"):
        self.n = n
        self.cap = cap
        super().__init__(f"{what} refused for n={n}: the cap is n <= {cap}")


def as_matrix(entries) -> np.ndarray:
    """Validate and return a square matrix of finite floats.

    Accepts anything ``np.asarray`` accepts (nested lists, arrays). Rejects
    non-square shapes, empty matrices and non-finite entries.
    """
    m = np.asarray(entries, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise ValueError("matrix dimension must be at least 1")
    if not np.isfinite(m).all():
        raise ValueError("matrix entries must be finite (no NaN or infinity)")
    return m


def as_index_set(alpha, n: int) -> IndexSet:
    """Normalize ``alpha`` to a sorted 1-based tuple within {1, ..., n}."""
    members = tuple(sorted({int(i) for i in alpha}))
    if not members:
        raise ValueError("index set must be non-empty")
    if members[0] < 1 or members[-1] > n:
        raise ValueError(f"index set {members} out of range for dimension {n}")
    return members


def complement(alpha, n: int) -> IndexSet:
    """Complement of an index set inside {1, ..., n} (may be empty)."""
    chosen = set(as_index_set(alpha, n))
    return tuple(i for i in range(1, n + 1) if i not in chosen)


def index_sets(n: int, min_size: int = 1, max_size: int | None = None):
    """Yield every index subset of {1, ..., n}, size-then-lex ordered."""
    top = n if max_size is None else max_size
    for size in range(min_size, top + 1):
        yield from itertools.combinations(range(1, n + 1), size)


def submatrix(M, rows, cols) -> np.ndarray:
    """Block of ``M`` keeping the given rows and columns (1-based).

    The result may be rectangular; entry values are preserved exactly.
    """
    m = np.asarray(M, dtype=float)
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {m.shape}")
    r = as_index_set(rows, m.shape[0])
    c = as_index_set(cols, m.shape[1])
    return m[np.ix_([i - 1 for i in r], [j - 1 for j in c])]


def determinant(M) -> float:
    """Determinant via pivoted LU elimination; exact for 1x1 matrices."""
    m = as_matrix(M)
    if m.shape[0] == 1:
        return float(m[0, 0])
    with np.errstate(divide="ignore", invalid="ignore"):
        # Singular input is a valid question with answer 0, not a warning.
        return float(np.linalg.det(m))


def principal_minor(M, alpha) -> float:
    """Determinant of the principal submatrix on rows and columns ``alpha``."""
    return determinant(submatrix(M, alpha, alpha))


@dataclass(frozen=True)
class MinorTable:
    """All principal minors of a matrix, keyed by 1-based index subsets.

    A complete table holds exactly the 2**n - 1 non-empty subsets; singleton
    entries equal the diagonal entries of the source matrix.
    """

    n: int
    values: dict[IndexSet, float]

    def __getitem__(self, alpha) -> float:
        return self.values[as_index_set(alpha, self.n)]

    def __len__(self) -> int:
        return len(self.values)


def all_principal_minors(M, max_n: int | None = None) -> MinorTable:
    """Complete principal-minor table over all non-empty index subsets.

    Refuses matrices above the enumeration cap (``max_n`` overrides the
    default of ``MINOR_ENUMERATION_CAP``) rather than truncating silently.
    """
    m = as_matrix(M)
    n = m.shape[0]
    cap = MINOR_ENUMERATION_CAP if max_n is None else max_n
    if n > cap:
        raise EnumerationCapError(n, cap)
    values: dict[IndexSet, float] = {}
    with np.errstate(divide="ignore", invalid="ignore"):
        for alpha in index_sets(n):
            if len(alpha) == 1:
                values[alpha] = float(m[alpha[0] - 1, alpha[0] - 1])
            else:
                idx = [i - 1 for i in alpha]
                values[alpha] = float(np.linalg.det(m[np.ix_(idx, idx)]))
    return MinorTable(n=n, values=values)


def principal_minor_sums(M, max_n: int | None = None) -> np.ndarray:
    """Sums of principal minors by size: entry j is the sum over |alpha| = j.

    Entry 0 is 1 by convention. Exponential in n, so capped like
    ``all_principal_minors``; serves as the ground-truth path for
    characteristic polynomials at small dimension.
    """
    table = all_principal_minors(M, max_n=max_n)
    sums = np.zeros(table.n + 1)
    sums[0] = 1.0
    for alpha, value in table.values.items():
        sums[len(alpha)] += value
    return sums


def _coefficients_from_minor_sums(sums: np.ndarray) -> np.ndarray:
    # Coefficient of t**k is (-1)**k * (sum of minors of size n - k), so the
    # polynomial is det(M - t*I): leading coefficient (-1)**n, constant det(M).
    n = len(sums) - 1
    return np.array([(-1.0) ** k * sums[n - k] for k in range(n + 1)])


def _minor_sums_from_traces(m: np.ndarray) -> np.ndarray:
    # Newton-identity recursion on power traces p_k = tr(M**k):
    #   k * e_k = sum_{i=1..k} (-1)**(i-1) * e_{k-i} * p_i
    # where e_k equals the sum of principal minors of size k.
    n = m.shape[0]
    powers = np.empty(n + 1)
    acc = np.eye(n)
    for k in range(1, n + 1):
        acc = acc @ m
        powers[k] = np.trace(acc)
    sums = np.zeros(n + 1)
    sums[0] = 1.0
    for k in range(1, n + 1):
        total = 0.0
        for i in range(1, k + 1):
            total += (-1.0) ** (i - 1) * sums[k - i] * powers[i]
        sums[k] = total / k
    return sums


def characteristic_polynomial(M, method: str = "trace",
                              max_n: int | None = None) -> np.ndarray:
    """Characteristic polynomial det(M - t*I) as a coefficient array.

    Position k holds the coefficient of t**k; the constant term is det(M)
    and the leading coefficient is (-1)**n.

    ``method="trace"`` uses the Newton-identity recursion on power traces and
    works at any dimension. ``method="minors"`` sums explicit principal
    minors by size, which is exponential and capped, and acts as an
    independent cross-check of the trace path.
    """
    m = as_matrix(M)
    if method == "trace":
        sums = _minor_sums_from_traces(m)
    elif method == "minors":
        sums = principal_minor_sums(m, max_n=max_n)
    else:
        raise ValueError(f"unknown method {method!r}; use 'trace' or 'minors'")
    return _coefficients_from_minor_sums(sums)


def eigenvalues(M) -> np.ndarray:
    """All n eigenvalues with multiplicity, as a complex array.

    Computed by the dense nonsymmetric solver (Hessenberg reduction plus
    implicitly shifted QR iteration). Raises ``numpy.linalg.LinAlgError``
    if the iteration fails to converge; complex eigenvalues of real input
    come in conjugate pairs.
    """
    return np.linalg.eigvals(as_matrix(M))


def spectral_radius(M) -> float:
    """Largest eigenvalue modulus of ``M``."""
    return float(np.abs(eigenvalues(M)).max())


def rank_at_most(B, r: int, tol: float = RANK_TOL) -> bool:
    """Whether the numerical rank of ``B`` is at most ``r``.

    Gaussian elimination with full pivoting; a pivot counts only while its
    magnitude exceeds ``tol`` times the largest entry of the original block.
    Rectangular blocks are fine.
    """
    if r < 0:
        raise ValueError("rank bound must be nonnegative")
    a = np.array(B, dtype=float)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("matrix entries must be finite (no NaN or infinity)")
    if a.size == 0:
        return True
    threshold = tol * np.abs(a).max()
    rank = 0
    while min(a.shape) > 0:
        i, j = np.unravel_index(np.abs(a).argmax(), a.shape)
        if abs(a[i, j]) <= threshold:
            break
        rank += 1
        if rank > r:
            return False
        a[[0, i], :] = a[[i, 0], :]
        a[:, [0, j]] = a[:, [j, 0]]
        a = a[1:, :] - np.outer(a[1:, 0] / a[0, 0], a[0, :])
        a = a[:, 1:]
    return rank <= r
