import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from glbranch import kernels
from glbranch._kernels_py import (
    chain_contains,
    chain_contains_batch,
    chain_match_positions,
)
from glbranch.brute import brute_chain_batch

compiled = pytest.mark.skipif(kernels.compiled_impl is None, reason="extension not built")

words = st.lists(st.integers(-1, 5), max_size=12)


@given(words, st.integers(0, 6))
def test_match_positions_agree_with_contains(word, length):
    hits = chain_match_positions(word, length)
    assert (hits is not None) == chain_contains(word, length)
    if hits:
        assert [word[p] for p in hits] == list(range(length))
        assert hits == sorted(hits)


def test_batch_against_exhaustive_search():
    rng = np.random.default_rng(0)
    w = rng.integers(-1, 4, size=(3000, 7))
    for length in range(0, 5):
        assert np.array_equal(chain_contains_batch(w, length), brute_chain_batch(w, length))


def test_ignored_labels_do_not_matter():
    assert chain_contains([0, -1, 1, -1, 2], 3)
    assert chain_contains([0, 1, 2], 3) == chain_contains([-1, 0, -1, 1, 2, -1], 3)


@compiled
@given(words, st.integers(0, 6))
def test_compiled_single_word_matches_python(word, length):
    impl = kernels.compiled_impl
    assert impl.chain_contains(word, length) == chain_contains(word, length)
    assert impl.chain_match_positions(word, length) == chain_match_positions(word, length)


@compiled
def test_compiled_batch_matches_python():
    rng = np.random.default_rng(1)
    for width in (1, 5, 9):
        w = rng.integers(-1, 6, size=(2000, width))
        for length in range(0, 7):
            got = kernels.compiled_impl.chain_contains_batch(w, length)
            assert got.dtype == bool
            assert np.array_equal(got, chain_contains_batch(w, length))


@compiled
def test_compiled_backend_is_default():
    assert kernels.BACKEND == "compiled"
    assert kernels.chain_contains_batch is kernels.compiled_impl.chain_contains_batch


def test_env_var_forces_python_backend():
    env = dict(os.environ, GLBRANCH_PURE_PYTHON="1")
    code = "from glbranch import kernels; print(kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
