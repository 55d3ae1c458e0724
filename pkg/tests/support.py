"""Shared generators and brute-force oracles for the test suite.

The oracles stay deliberately independent of the library paths they check:
irreducibility goes through reachability closure instead of component
search, clan detection through explicit 2x2 minors instead of elimination,
and maximal irreducible sets through exhaustive subset enumeration.
"""

import itertools

import numpy as np

from effspec import complement, index_sets, submatrix


def random_nonnegative(rng, n, density=0.65, low=0.2, high=1.2):
    """Random nonnegative matrix with a Bernoulli zero pattern."""
    values = rng.uniform(low, high, (n, n))
    mask = rng.random((n, n)) < density
    return np.where(mask, values, 0.0)


def random_positive(rng, n, low=0.1, high=1.1):
    return rng.uniform(low, high, (n, n))


def random_clan_instance(rng, n, m=None, low=-1.0, high=1.0):
    """Matrix built from the clan block form, with alpha leading.

    Returns (K, alpha, v, b, c, w) where alpha = (1, ..., m), the two
    off-diagonal blocks are exactly outer products, and the diagonal
    blocks are generic.
    """
    if m is None:
        m = int(rng.integers(2, n - 1))
    assert 2 <= m <= n - 2
    a_block = rng.uniform(low, high, (m, m))
    b_block = rng.uniform(low, high, (n - m, n - m))
    v = rng.uniform(low, high, m)
    b = rng.uniform(low, high, n - m)
    c = rng.uniform(low, high, n - m)
    w = rng.uniform(low, high, m)
    matrix = np.block([[a_block, np.outer(v, b)], [np.outer(c, w), b_block]])
    return matrix, tuple(range(1, m + 1)), v, b, c, w


def rank_le_one_by_minors(block, tol=1e-9):
    """Rank <= 1 test from first principles: all 2x2 minors must vanish.

    Minors scale as squared entries, so the threshold is relative to the
    squared largest entry magnitude.
    """
    block = np.asarray(block, dtype=float)
    top = float(np.abs(block).max(initial=0.0))
    if top == 0.0:
        return True
    threshold = tol * top * top
    m, k = block.shape
    for i1, i2 in itertools.combinations(range(m), 2):
        for j1, j2 in itertools.combinations(range(k), 2):
            minor = block[i1, j1] * block[i2, j2] - block[i1, j2] * block[i2, j1]
            if abs(minor) > threshold:
                return False
    return True


def brute_force_clan_subsets(K, tol=1e-9):
    """All clan subsets found by the 2x2-minor criterion."""
    K = np.asarray(K, dtype=float)
    n = K.shape[0]
    found = []
    for alpha in index_sets(n, min_size=2, max_size=n - 2):
        rest = complement(alpha, n)
        if rank_le_one_by_minors(submatrix(K, alpha, rest), tol) \
                and rank_le_one_by_minors(submatrix(K, rest, alpha), tol):
            found.append(alpha)
    return found


def reachability(K, pattern_tol=0.0):
    """Boolean closure: entry (i, j) true when a directed path joins i to j."""
    adjacency = np.abs(np.asarray(K, dtype=float)) > pattern_tol
    n = adjacency.shape[0]
    closure = adjacency.copy()
    for mid in range(n):
        closure |= np.outer(closure[:, mid], closure[mid, :])
    return closure


def irreducible_by_closure(K, pattern_tol=0.0):
    """Strong connectivity via reachability closure (vacuous at size 1)."""
    n = np.asarray(K).shape[0]
    if n == 1:
        return True
    closure = reachability(K, pattern_tol)
    off_diagonal = ~np.eye(n, dtype=bool)
    return bool(closure[off_diagonal].all())


def maximal_irreducible_sets(K, pattern_tol=0.0):
    """Inclusion-maximal subsets inducing a strongly connected block.

    Exhaustive over all subsets; meant for n <= 6.
    """
    K = np.asarray(K, dtype=float)
    n = K.shape[0]
    irreducible = [alpha for alpha in index_sets(n)
                   if irreducible_by_closure(submatrix(K, alpha, alpha), pattern_tol)]
    maximal = []
    for alpha in irreducible:
        members = set(alpha)
        if not any(members < set(other) for other in irreducible):
            maximal.append(alpha)
    return sorted(maximal, key=lambda block: block[0])
