"""Graph-theoretic structure of a matrix.

The adjacency digraph of K has an edge (i, j) whenever K_ij is nonzero
(above the pattern tolerance). K is irreducible when that digraph is
strongly connected; the maximal irreducible index sets, called atoms here,
are its strongly connected components. Keeping only the entries whose
endpoints share an atom gives the atomic part of K, which preserves the
effective spectrum. The module also searches for diagonal-similarity
witnesses, the scaling transformations that preserve effective spectra.
"""

from dataclasses import dataclass

import numpy as np

from .core import IndexSet, as_matrix

__all__ = [
    "Digraph",
    "Partition",
    "SimilarityWitness",
    "pattern_tolerance",
    "adjacency_digraph",
    "is_irreducible",
    "atoms",
    "atomic_part",
    "is_completely_reducible",
    "diagonal_similarity_witness",
]

#: Relative factor for the default zero-pattern tolerance.
PATTERN_TOL_REL = 1e-12


@dataclass(frozen=True)
class Digraph:
    """Directed graph on vertices {1, ..., n}; self-loops allowed."""

    n: int
    edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class Partition:
    """Disjoint index sets covering {1, ..., n}, ordered by smallest member."""

    n: int
    blocks: tuple[IndexSet, ...]


@dataclass(frozen=True)
class SimilarityWitness:
    """Diagonal d with K = diag(d) @ K2 @ diag(d)^-1 up to ``residual``.

    ``residual`` is the largest absolute value of K_ij * d_j - d_i * K2_ij.
    The scaling is normalized to 1 at the smallest index of each weakly
    connected component of the zero pattern; it is unique only up to one
    factor per component.
    """

    d: np.ndarray
    residual: float


def pattern_tolerance(K, pattern_tol: float | None = None) -> float:
    """Resolve the zero-pattern threshold for ``K``.

    Defaults to ``PATTERN_TOL_REL`` times the largest entry magnitude so
    that pattern decisions stay stable for computed (rounded) input. Pass 0
    to treat only exact zeros as absent entries.
    """
    if pattern_tol is not None:
        if pattern_tol < 0:
            raise ValueError("pattern tolerance must be nonnegative")
        return float(pattern_tol)
    k = np.asarray(K, dtype=float)
    return PATTERN_TOL_REL * float(np.abs(k).max(initial=0.0))


def adjacency_digraph(K, pattern_tol: float | None = None) -> Digraph:
    """Digraph with an edge (i, j) whenever |K_ij| exceeds the tolerance."""
    k = as_matrix(K)
    tol = pattern_tolerance(k, pattern_tol)
    rows, cols = np.nonzero(np.abs(k) > tol)
    edges = frozenset((int(i) + 1, int(j) + 1) for i, j in zip(rows, cols))
    return Digraph(n=k.shape[0], edges=edges)


def _successors(k: np.ndarray, tol: float) -> list[list[int]]:
    mask = np.abs(k) > tol
    return [[int(j) for j in np.nonzero(mask[i])[0]] for i in range(k.shape[0])]


def _strongly_connected_components(succ: list[list[int]]) -> list[list[int]]:
    # Iterative Tarjan; components come out in reverse topological order and
    # are re-sorted by the caller.
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component.append(w)
                    if w == v:
                        break
                components.append(sorted(component))
    return components


def is_irreducible(K, pattern_tol: float | None = None) -> bool:
    """Whether the adjacency digraph is strongly connected.

    Equivalently, every proper index split has a nonzero off-diagonal
    block in each direction. 1x1 matrices are irreducible regardless of
    their entry (there is no proper split).
    """
    k = as_matrix(K)
    tol = pattern_tolerance(k, pattern_tol)
    return len(_strongly_connected_components(_successors(k, tol))) == 1


def atoms(K, pattern_tol: float | None = None) -> Partition:
    """Maximal irreducible index sets: the strongly connected components."""
    k = as_matrix(K)
    tol = pattern_tolerance(k, pattern_tol)
    components = _strongly_connected_components(_successors(k, tol))
    blocks = sorted((tuple(i + 1 for i in comp) for comp in components),
                    key=lambda block: block[0])
    return Partition(n=k.shape[0], blocks=tuple(blocks))


def atomic_part(K, pattern_tol: float | None = None) -> np.ndarray:
    """Copy of K keeping only entries whose endpoints share an atom.

    Idempotent, and preserves the effective spectrum of K.
    """
    k = as_matrix(K)
    tol = pattern_tolerance(k, pattern_tol)
    components = _strongly_connected_components(_successors(k, tol))
    labels = np.empty(k.shape[0], dtype=int)
    for tag, comp in enumerate(components):
        labels[comp] = tag
    return np.where(labels[:, None] == labels[None, :], k, 0.0)


def is_completely_reducible(K, pattern_tol: float | None = None) -> bool:
    """Whether K equals its atomic part within the pattern tolerance.

    Equivalently, whenever a directed path joins i to j there is also one
    from j back to i.
    """
    k = as_matrix(K)
    tol = pattern_tolerance(k, pattern_tol)
    return bool((np.abs(k - atomic_part(k, tol)) <= tol).all())


def diagonal_similarity_witness(K, K2, tol: float = 1e-9,
                                pattern_tol: float | None = None) -> SimilarityWitness | None:
    """Search for a nonsingular diagonal D with K = D @ K2 @ D^-1.

    The zero patterns must coincide, and along every edge the entry ratios
    must be consistent (every cycle product must match). The scaling is
    built by fixing 1 at a root of each weakly connected component of the
    pattern graph, propagating ratios along a spanning tree in either edge
    orientation, then verifying all edges; absent when verification fails.
    For nonnegative matrices the returned scaling is automatically positive.
    """
    a = as_matrix(K)
    b = as_matrix(K2)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    n = a.shape[0]
    if pattern_tol is None:
        scale = max(float(np.abs(a).max()), float(np.abs(b).max()))
        ptol = PATTERN_TOL_REL * scale
    else:
        ptol = float(pattern_tol)
    mask_a = np.abs(a) > ptol
    mask_b = np.abs(b) > ptol
    if (mask_a != mask_b).any():
        return None

    neighbors = mask_a | mask_a.T
    d = np.zeros(n)
    for root in range(n):
        if d[root] != 0.0:
            continue
        d[root] = 1.0
        frontier = [root]
        while frontier:
            i = frontier.pop()
            for j in np.nonzero(neighbors[i])[0]:
                if d[j] != 0.0:
                    continue
                if mask_a[i, j]:
                    d[j] = d[i] * b[i, j] / a[i, j]
                else:
                    d[j] = d[i] * a[j, i] / b[j, i]
                frontier.append(int(j))

    residual = float(np.abs(a * d[None, :] - d[:, None] * b).max())
    bound = tol * max(1.0, float(np.abs(a).max()), float(np.abs(b).max()))
    if residual > bound or (d == 0.0).any():
        return None
    return SimilarityWitness(d=d, residual=residual)
