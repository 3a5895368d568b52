"""Hypothesis strategies for walks on small complete digraphs with self-loops."""

from hypothesis import strategies as st

from walkhopf import Forest, Walk


def walks(max_vertices: int = 4, max_len: int = 9):
    return st.lists(st.integers(1, max_vertices), min_size=1, max_size=max_len + 1).map(Walk)


def forests(max_words: int = 3, max_vertices: int = 4, max_len: int = 5):
    return st.lists(walks(max_vertices, max_len), min_size=0, max_size=max_words).map(Forest)
