"""Exhaustive reference implementations.

These are deliberately naive (enumerate every subsequence, explore every swap
sequence) and share no code with the fast paths they are used to check.
"""

from collections import deque
from itertools import combinations, product

import numpy as np

from .core import CuspidalRep, Segment, is_linked
from .series import HALF, PrincipalSeries


def _as_segment(f):
    return f.segment if not isinstance(f, CuspidalRep) else Segment(f, 1)


def required_chain(d):
    """``nu^(-1/2) a(d), ..., nu^(1/2) b(d)`` as cuspidal representations."""
    return [d.base.twist(t - HALF) for t in range(d.rel_length + 1)]


def brute_is_bad_to(ps: PrincipalSeries, d) -> bool:
    want = required_chain(d)
    facs = list(ps.factors)
    for idx in combinations(range(len(facs)), len(want)):
        if all(facs[i] == w for i, w in zip(idx, want)):
            return True
    return False


def count_chain_embeddings(ps: PrincipalSeries, d) -> int:
    """Number of index tuples spelling the required chain (dynamic programming)."""
    want = required_chain(d)
    ways = [1] + [0] * len(want)
    for f in ps.factors:
        for t in range(len(want), 0, -1):
            if f == want[t - 1]:
                ways[t] += ways[t - 1]
    return ways[-1]


def brute_chain_batch(words, length):
    """Vectorised subsequence search over every index combination."""
    words = np.asarray(words)
    n, width = words.shape
    out = np.zeros(n, dtype=bool)
    if length == 0:
        out[:] = True
        return out
    target = np.arange(length)
    for idx in combinations(range(width), length):
        out |= np.all(words[:, idx] == target, axis=1)
    return out


def commutation_class(ps: PrincipalSeries) -> set:
    """Every ordering reachable by swapping adjacent unlinked factors (BFS)."""
    startt = tuple(ps.factors)
    seen = {startt}
    queue = deque([startt])
    while queue:
        word = queue.popleft()
        for p in range(len(word) - 1):
            x, y = word[p], word[p + 1]
            if x == y or is_linked(_as_segment(x), _as_segment(y)):
                continue
            nxt = word[:p] + (y, x) + word[p + 2:]
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def brute_commutation_equivalent(ps1, ps2) -> bool:
    return tuple(ps2.factors) in commutation_class(ps1)


def brute_segment_partitions(n):
    """All ways to cut a length-``n`` segment into consecutive blocks of
    length 1 or 2 with at most one block of length 2, by filtering all
    ``2**(n-1)`` cut patterns."""
    found = []
    for cuts in product((0, 1), repeat=n - 1):
        blocks, run = [], 1
        for cut in cuts:
            if cut:
                blocks.append(run)
                run = 1
            else:
                run += 1
        blocks.append(run)
        if max(blocks) <= 2 and blocks.count(2) <= 1:
            found.append(tuple(blocks))
    return found
