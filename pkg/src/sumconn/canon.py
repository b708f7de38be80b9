"""Canonical codes for connected graphs: equal codes iff isomorphic.

A code is the byte encoding of a canonically relabeled edge set, prefixed
by the vertex count.  Trees use a centroid-rooted AHU encoding; unicyclic
graphs canonicalize the cycle under rotation and reflection with AHU codes
for the subtrees hanging off each cycle vertex; everything else falls back
to individualization-refinement search.  The specialized paths keep the
enumeration workloads fast; the generic path is a safety net.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import (
    Graph,
    MAX_VERTICES,
    NotConnectedError,
    SizeLimitError,
    graph_from_edges,
    is_connected,
    is_tree,
    is_unicyclic,
    unique_cycle,
)

CanonicalCode = bytes


@lru_cache(maxsize=1 << 18)
def canonical_code(g: Graph) -> CanonicalCode:
    """Label-invariant identifier of the isomorphism class of ``g``."""
    if g.n > MAX_VERTICES:
        raise SizeLimitError(f"canonical codes support at most {MAX_VERTICES} vertices")
    if not is_connected(g):
        raise NotConnectedError("canonical codes are defined for connected graphs only")
    if is_tree(g):
        edges = _tree_canonical_edges(g)
    elif is_unicyclic(g):
        edges = _unicyclic_canonical_edges(g)
    else:
        edges = _generic_canonical_edges(g)
    out = bytearray([g.n])
    for u, v in sorted(edges):
        out.append(u)
        out.append(v)
    return bytes(out)


def canonical_form(g: Graph) -> Graph:
    """Canonically relabeled copy of ``g`` (identical for isomorphic inputs)."""
    code = canonical_code(g)
    n = code[0]
    edges = [(code[i], code[i + 1]) for i in range(1, len(code), 2)]
    return graph_from_edges(n, edges)


# -- trees ---------------------------------------------------------------


def _tree_centers(adj: tuple[tuple[int, ...], ...]) -> list[int]:
    """The one or two middle vertices left after repeated leaf peeling."""
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(nbrs) for nbrs in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt: list[int] = []
        for u in layer:
            deg[u] = 0
            for w in adj[u]:
                if deg[w] > 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return layer


def _rooted_code(adj, root: int, parent: int) -> str:
    children = sorted(_rooted_code(adj, w, root) for w in adj[root] if w != parent)
    return "(" + "".join(children) + ")"


def _parse_paren(code: str, first_label: int) -> tuple[int, list[tuple[int, int]], int]:
    """Rebuild the rooted tree a paren string denotes.

    Returns (root label, edges, next free label); children are created in
    the order they appear, which is the sorted order the encoder used.
    """
    stack: list[int] = []
    edges: list[tuple[int, int]] = []
    nxt = first_label
    root = first_label
    for ch in code:
        if ch == "(":
            v = nxt
            nxt += 1
            if stack:
                edges.append((stack[-1], v))
            else:
                root = v
            stack.append(v)
        else:
            stack.pop()
    return root, edges, nxt


def _tree_canonical_edges(g: Graph) -> list[tuple[int, int]]:
    best = min(_rooted_code(g.adjacency, c, -1) for c in _tree_centers(g.adjacency))
    _, edges, _ = _parse_paren(best, 0)
    return edges


# -- unicyclic graphs ------------------------------------------------------


def _unicyclic_canonical_edges(g: Graph) -> list[tuple[int, int]]:
    cycle = unique_cycle(g)
    on_cycle = set(cycle)
    # AHU code of the pendant tree rooted at each cycle vertex (cycle edges
    # masked out so the cycle neighbors do not count as children).
    forest_adj = tuple(
        tuple(w for w in g.adjacency[v] if not (v in on_cycle and w in on_cycle))
        for v in range(g.n)
    )
    codes = [_rooted_code(forest_adj, c, -1) for c in cycle]
    k = len(codes)
    best: tuple[str, ...] | None = None
    for direction in (1, -1):
        for start in range(k):
            candidate = tuple(codes[(start + direction * i) % k] for i in range(k))
            if best is None or candidate < best:
                best = candidate
    assert best is not None
    edges: list[tuple[int, int]] = []
    roots: list[int] = []
    nxt = 0
    for code in best:
        root, sub_edges, nxt = _parse_paren(code, nxt)
        roots.append(root)
        edges.extend(sub_edges)
    for i in range(k):
        edges.append((roots[i], roots[(i + 1) % k]))
    return edges


# -- generic connected graphs ----------------------------------------------


def _refine(adj, colors: list[int]) -> list[int]:
    """Equitable refinement: repeatedly split classes by neighbor colors."""
    n = len(adj)
    while True:
        sig = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v])))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [rank[sig[v]] for v in range(n)]
        if new == colors:
            return new
        colors = new


def _generic_canonical_edges(g: Graph) -> list[tuple[int, int]]:
    adj = g.adjacency
    n = g.n
    best: list[tuple[int, int]] | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        if len(set(colors)) == n:
            relabeled = sorted(
                (min(colors[u], colors[v]), max(colors[u], colors[v]))
                for u, v in g.edges
            )
            if best is None or relabeled < best:
                best = relabeled
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        for v in range(n):
            if colors[v] == target:
                branched = list(colors)
                branched[v] = -1
                search(_refine(adj, branched))

    search(_refine(adj, [0] * n))
    assert best is not None
    return best
