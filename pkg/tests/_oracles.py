"""Independent oracles used to freeze expected values: kept free of the library's
search/enumeration code paths so cross-checks mean something."""

from functools import lru_cache


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Set partitions of an n-set into k blocks, by the standard recurrence."""
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    if k in (0, n):
        return 1
    return binom(n - 1, k - 1) + binom(n - 1, k)


def catalan(n: int) -> int:
    return binom(2 * n, n) // (n + 1)


def definitional_positions(parent) -> list[int]:
    """Rank every vertex by the two-clause lexicographic definition alone.

    Uses only predecessor chains and pairwise comparisons; no preorder
    machinery, so it is an independent check of the canonical numbering.
    """
    n = len(parent)

    def chain(v):
        out = [v]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return list(reversed(out))

    def less(v, w):
        if v == w:
            return False
        cv, cw = chain(v), chain(w)
        if v in cw:
            return True
        if w in cv:
            return False
        depth = 0
        while cv[depth] == cw[depth]:
            depth += 1
        return cv[depth] < cw[depth]  # sibling order is id order

    ranks = []
    for v in range(n):
        ranks.append(sum(1 for w in range(n) if less(w, v)))
    return ranks
