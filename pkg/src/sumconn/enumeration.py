"""Isomorph-free exhaustive generation of trees and unicyclic graphs.

Free trees come from the Wright/Richmond/Odlyzko/McKay successor algorithm
on level sequences: a rooted tree is the list of depths in preorder, and a
level sequence represents a free tree exactly when the root's first
subtree is no "larger" (height, then size, then lexicographic order) than
the rest of the tree.  Unicyclic graphs are produced by adding every
possible chord to every free tree and deduplicating by canonical code.

Results are materialized and ordered by canonical code so that repeated
runs, reports, and CLI output are reproducible.
"""

from __future__ import annotations

from functools import lru_cache

from .canon import canonical_code
from .graphs import Graph, SizeLimitError, graph_from_edges

MAX_TREE_VERTICES = 16
MAX_UNICYCLIC_VERTICES = 14

DeltaFilter = int | tuple[int, int] | None


def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    """Beyer-Hedetniemi successor of a rooted-tree level sequence."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split_first_subtree(seq: list[int]) -> tuple[list[int], list[int]]:
    """First subtree of the root (depths shifted up) and the remainder."""
    cut = len(seq)
    seen_one = False
    for i, depth in enumerate(seq):
        if depth == 1:
            if seen_one:
                cut = i
                break
            seen_one = True
    left = [seq[i] - 1 for i in range(1, cut)]
    rest = [0] + seq[cut:]
    return left, rest


def _next_free(candidate: list[int]) -> list[int] | None:
    """Advance a rooted level sequence to the next valid free-tree form."""
    left, rest = _split_first_subtree(candidate)
    left_height = max(left)
    rest_height = max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False
    if valid:
        return candidate
    p = len(left)
    successor = _next_rooted(candidate, p)
    if candidate[p] > 2:
        assert successor is not None
        new_left, _ = _split_first_subtree(successor)
        suffix = list(range(1, max(new_left) + 2))
        successor[-len(suffix) :] = suffix
    return successor


def _level_sequence_edges(seq: list[int]) -> list[tuple[int, int]]:
    edges: list[tuple[int, int]] = []
    stack: list[int] = []
    for v, depth in enumerate(seq):
        while stack and seq[stack[-1]] >= depth:
            stack.pop()
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return edges


def _free_tree_level_sequences(n: int):
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        if seq is None:
            return
        yield seq
        seq = _next_rooted(seq)


@lru_cache(maxsize=None)
def _all_trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (graph_from_edges(1, []),)
    graphs = [
        graph_from_edges(n, _level_sequence_edges(seq))
        for seq in _free_tree_level_sequences(n)
    ]
    graphs.sort(key=canonical_code)
    return tuple(graphs)


@lru_cache(maxsize=None)
def _all_unicyclic(n: int) -> tuple[Graph, ...]:
    found: dict[bytes, Graph] = {}
    for tree in _all_trees(n):
        present = set(tree.edges)
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) in present:
                    continue
                g = graph_from_edges(n, tree.edges + ((u, v),))
                found.setdefault(canonical_code(g), g)
    return tuple(found[code] for code in sorted(found))


def _admits(g: Graph, delta: DeltaFilter) -> bool:
    if delta is None:
        return True
    top = max((len(nbrs) for nbrs in g.adjacency), default=0)
    if isinstance(delta, tuple):
        lo, hi = delta
        return lo <= top <= hi
    return top == delta


def enumerate_trees(n: int, delta: DeltaFilter = None) -> list[Graph]:
    """One representative per isomorphism class of free trees on n vertices,
    optionally filtered by maximum degree (exact value or inclusive range),
    ordered by canonical code."""
    if not 1 <= n <= MAX_TREE_VERTICES:
        raise SizeLimitError(f"tree enumeration supports 1 <= n <= {MAX_TREE_VERTICES}")
    return [g for g in _all_trees(n) if _admits(g, delta)]


def enumerate_unicyclic(n: int, delta: DeltaFilter = None) -> list[Graph]:
    """One representative per isomorphism class of connected unicyclic graphs
    on n vertices, optionally filtered by maximum degree, ordered by
    canonical code."""
    if not 3 <= n <= MAX_UNICYCLIC_VERTICES:
        raise SizeLimitError(
            f"unicyclic enumeration supports 3 <= n <= {MAX_UNICYCLIC_VERTICES}"
        )
    return [g for g in _all_unicyclic(n) if _admits(g, delta)]
