"""Clans, partial transposes, and classification of minor-equal pairs.

An index subset alpha with 2 <= |alpha| <= n - 2 is a clan of K when both
off-diagonal blocks K[alpha, alpha^c] and K[alpha^c, alpha] have rank at
most 1, say v @ b.T and c @ w.T. Swapping the roles of v and w while
transposing the diagonal block on alpha produces a partial transpose of K,
a transformation that preserves every principal minor and therefore the
whole effective spectrum. Matrices of size up to 3 have no clans.

For two nonnegative matrices whose principal minors all coincide, the
classifier reports the known structural explanations: entrywise equality
for symmetric pairs, diagonal similarity (to K or to K.T) when K is
irreducible and clan-free, and an explicit "clan-obstructed" outcome when
clans make the relation genuinely non-unique.
"""

from dataclasses import dataclass

import numpy as np

from .core import (
    EnumerationCapError,
    IndexSet,
    as_index_set,
    as_matrix,
    complement,
    index_sets,
    submatrix,
)
from .spectral import EqualityVerdict, minors_equal
from .structure import (
    SimilarityWitness,
    atomic_part,
    diagonal_similarity_witness,
    is_irreducible,
)

__all__ = [
    "CLAN_ENUMERATION_CAP",
    "Clan",
    "Classification",
    "RankOneFactorError",
    "rank1_factor",
    "clan_at",
    "find_clans",
    "is_clan_free",
    "partial_transpose",
    "verify_partial_transpose_invariance",
    "classify_minor_equal_pair",
]

#: Dimension cap for exhaustive clan scans (2**n subsets).
CLAN_ENUMERATION_CAP = 16

#: Default relative tolerance for rank-1 block detection.
CLAN_RANK_TOL = 1e-9


class RankOneFactorError(ValueError):
    """A block is not rank 1; carries a nonvanishing 2x2 witness minor."""

    def __init__(self, rows: tuple[int, int], cols: tuple[int, int], minor: float):
        self.rows = rows
        self.cols = cols
        self.minor = minor
        super().__init__(
            f"block has rank above 1: the 2x2 minor on rows {rows} and "
            f"columns {cols} equals {minor:.6g}")


def rank1_factor(B, tol: float = CLAN_RANK_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Factor a (possibly rectangular) block as an outer product u @ v.T.

    The choice is canonical and deterministic: u is the column holding the
    block's largest entry magnitude, rescaled so that entry is exactly 1,
    and v is the matching row. A zero block yields two zero vectors. If the
    reconstruction misses an entry by more than ``tol`` times the largest
    entry magnitude, the block has rank above 1 and a
    :class:`RankOneFactorError` carrying an offending 2x2 minor is raised.
    """
    block = np.asarray(B, dtype=float)
    if block.ndim != 2:
        raise ValueError(f"expected a matrix block, got shape {block.shape}")
    if not np.isfinite(block).all():
        raise ValueError("block entries must be finite")
    m, k = block.shape
    top = float(np.abs(block).max(initial=0.0))
    if top == 0.0:
        return np.zeros(m), np.zeros(k)
    pivot_col = int(np.abs(block).max(axis=0).argmax())
    pivot_row = int(np.abs(block[:, pivot_col]).argmax())
    pivot = block[pivot_row, pivot_col]
    u = block[:, pivot_col] / pivot
    v = block[pivot_row, :].copy()
    residual = block - np.outer(u, v)
    worst = np.abs(residual)
    if worst.max() > tol * top:
        i, j = np.unravel_index(worst.argmax(), worst.shape)
        minor = block[pivot_row, pivot_col] * block[i, j] \
            - block[i, pivot_col] * block[pivot_row, j]
        raise RankOneFactorError(rows=(pivot_row + 1, int(i) + 1),
                                 cols=(pivot_col + 1, int(j) + 1),
                                 minor=float(minor))
    return u, v


@dataclass(frozen=True)
class Clan:
    """A clan subset together with rank-1 factors of its two blocks.

    With the indices of ``alpha`` ordered first, the matrix reads

        [[ A,        v @ b.T ],
         [ c @ w.T,  B       ]]

    where A is the diagonal block on alpha and B the one on its complement.
    """

    alpha: IndexSet
    v: np.ndarray
    b: np.ndarray
    c: np.ndarray
    w: np.ndarray

    def transposed(self) -> "Clan":
        """The clan structure describing the partial transpose's output.

        The transform swaps the roles of v and w, so applying the partial
        transpose again with this clan recovers the original matrix.
        """
        return Clan(alpha=self.alpha, v=self.w, b=self.b, c=self.c, w=self.v)


def clan_at(K, alpha, tol: float = CLAN_RANK_TOL) -> Clan | None:
    """The clan on subset ``alpha``, or None when alpha is not a clan.

    Not a clan means the size constraint 2 <= |alpha| <= n - 2 fails or
    one of the two off-diagonal blocks has rank above 1.
    """
    k = as_matrix(K)
    n = k.shape[0]
    a = as_index_set(alpha, n)
    if not 2 <= len(a) <= n - 2:
        return None
    rest = complement(a, n)
    try:
        v, b = rank1_factor(submatrix(k, a, rest), tol=tol)
        c, w = rank1_factor(submatrix(k, rest, a), tol=tol)
    except RankOneFactorError:
        return None
    return Clan(alpha=a, v=v, b=b, c=c, w=w)


def _iter_clans(K, tol: float, max_n: int | None):
    k = as_matrix(K)
    n = k.shape[0]
    cap = CLAN_ENUMERATION_CAP if max_n is None else max_n
    if n > cap:
        raise EnumerationCapError(n, cap, what="clan enumeration")
    for alpha in index_sets(n, min_size=2, max_size=n - 2):
        clan = clan_at(k, alpha, tol=tol)
        if clan is not None:
            yield clan


def find_clans(K, tol: float = CLAN_RANK_TOL, max_n: int | None = None) -> list[Clan]:
    """All clans of K, in size-then-lex order of their subsets.

    Exhaustive over subsets, hence capped (default n <= 16). A clan's
    complement is itself a clan and is reported separately. Matrices of
    size up to 3 have no room for a clan and yield an empty list.
    """
    return list(_iter_clans(K, tol, max_n))


def is_clan_free(K, tol: float = CLAN_RANK_TOL, max_n: int | None = None) -> bool:
    """Whether K has no clan at all."""
    return next(_iter_clans(K, tol, max_n), None) is None


def partial_transpose(K, clan: Clan, tol: float = CLAN_RANK_TOL) -> np.ndarray:
    """Apply the clan's partial transpose to K.

    Writing K in the block form of :class:`Clan`, the result is

        [[ A.T,      w @ b.T ],
         [ c @ v.T,  B       ]]

    mapped back to the original index order. The clan is re-verified
    against K before transforming. The output is generally not unique
    across factor choices; this one is determined by the clan's factors.
    """
    k = as_matrix(K)
    n = k.shape[0]
    a = as_index_set(clan.alpha, n)
    if not 2 <= len(a) <= n - 2:
        raise ValueError(f"clan subset {a} must have size between 2 and {n - 2}")
    rest = complement(a, n)
    rows = [i - 1 for i in a]
    cols = [j - 1 for j in rest]
    bound = tol * max(1.0, float(np.abs(k).max()))
    upper = k[np.ix_(rows, cols)]
    lower = k[np.ix_(cols, rows)]
    if np.abs(upper - np.outer(clan.v, clan.b)).max(initial=0.0) > bound \
            or np.abs(lower - np.outer(clan.c, clan.w)).max(initial=0.0) > bound:
        raise ValueError("clan factors do not reproduce the matrix blocks")
    result = k.copy()
    result[np.ix_(rows, rows)] = k[np.ix_(rows, rows)].T
    result[np.ix_(rows, cols)] = np.outer(clan.w, clan.b)
    result[np.ix_(cols, rows)] = np.outer(clan.c, clan.v)
    return result


def verify_partial_transpose_invariance(K, K2, tol: float = 1e-9,
                                        max_n: int | None = None) -> EqualityVerdict:
    """Check that two matrices have equal spectra on every index subset.

    Principal submatrices of a partial-transpose pair are again partial
    transposes of each other, so all of their spectra must agree; spectrum
    equality of every submatrix pair is equivalent to the equality of the
    two principal-minor tables, which is what gets compared.
    """
    a = as_matrix(K)
    b = as_matrix(K2)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    cap = CLAN_ENUMERATION_CAP if max_n is None else max_n
    if a.shape[0] > cap:
        raise EnumerationCapError(a.shape[0], cap,
                                  what="submatrix-spectra verification")
    return minors_equal(a, b, tol=tol, max_n=cap)


@dataclass(frozen=True)
class Classification:
    """Structural explanation for a pair with identical principal minors.

    ``kind`` is one of ``identical``, ``diagonally-similar-to-K``,
    ``diagonally-similar-to-K-transpose``, ``clan-obstructed`` or
    ``unresolved``; any claimed similarity carries its verified witness.
    """

    kind: str
    witness: SimilarityWitness | None = None


def _is_symmetric(m: np.ndarray, tol: float) -> bool:
    return bool(np.abs(m - m.T).max() <= tol * max(1.0, float(np.abs(m).max())))


def classify_minor_equal_pair(K, K2, tol: float = 1e-9,
                              max_n: int | None = None) -> Classification:
    """Explain how a nonnegative minor-equal pair (K, K2) is related.

    Requires both matrices nonnegative and all principal minors equal
    (re-verified, raising otherwise). Symmetric pairs must be entrywise
    identical; for symmetric K the atomic part of K2 must be diagonally
    similar to K; for irreducible clan-free K the only possibilities are
    diagonal similarity to K or to K.T, and both are attempted. When K has
    a clan, uniqueness can genuinely fail and the pair is reported as
    clan-obstructed without guessing further. Anything else, including a
    claimed relation that fails its numerical verification, comes back
    unresolved.
    """
    a = as_matrix(K)
    b = as_matrix(K2)
    if (a < 0).any() or (b < 0).any():
        raise ValueError("classification applies to nonnegative matrices only")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    cap = CLAN_ENUMERATION_CAP if max_n is None else max_n
    if a.shape[0] > cap:
        raise EnumerationCapError(a.shape[0], cap, what="pair classification")
    verdict = minors_equal(a, b, tol=tol, max_n=max(cap, a.shape[0]))
    if not verdict.equal:
        raise ValueError("principal minors differ (first mismatch at subset "
                         f"{verdict.witness}); classification needs a minor-equal pair")

    scale = max(1.0, float(np.abs(a).max()), float(np.abs(b).max()))
    sym_a = _is_symmetric(a, tol)
    if sym_a and _is_symmetric(b, tol):
        if np.abs(a - b).max() <= tol * scale:
            return Classification(kind="identical")
        return Classification(kind="unresolved")
    if sym_a:
        witness = diagonal_similarity_witness(atomic_part(b), a, tol=tol)
        if witness is not None:
            return Classification(kind="diagonally-similar-to-K", witness=witness)
        return Classification(kind="unresolved")
    clan_free = is_clan_free(a, max_n=cap)
    if is_irreducible(a) and clan_free:
        witness = diagonal_similarity_witness(b, a, tol=tol)
        if witness is not None:
            return Classification(kind="diagonally-similar-to-K", witness=witness)
        witness = diagonal_similarity_witness(b, a.T, tol=tol)
        if witness is not None:
            return Classification(kind="diagonally-similar-to-K-transpose",
                                  witness=witness)
        return Classification(kind="unresolved")
    if not clan_free:
        return Classification(kind="clan-obstructed")
    return Classification(kind="unresolved")
