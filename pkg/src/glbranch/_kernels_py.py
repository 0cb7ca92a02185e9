"""Pure-Python versions of the matching kernels.

Words are sequences of integer labels; label ``t`` stands for the ``t``-th
element of the chain being searched for and any negative label is ignored.
"""

import numpy as np


def chain_contains(word, length):
    """True iff ``0, 1, ..., length-1`` occurs in ``word`` as a subsequence."""
    want = 0
    if length <= 0:
        return True
    for label in word:
        if label == want:
            want += 1
            if want == length:
                return True
    return False


def chain_contains_batch(words, length):
    words = np.asarray(words)
    out = np.zeros(words.shape[0], dtype=bool)
    for i, row in enumerate(words.tolist()):
        out[i] = chain_contains(row, length)
    return out


def chain_match_positions(word, length):
    """Leftmost positions realising the chain, or ``None``."""
    want = 0
    hits = []
    if length <= 0:
        return hits
    for pos, label in enumerate(word):
        if label == want:
            hits.append(pos)
            want += 1
            if want == length:
                return hits
    return None
