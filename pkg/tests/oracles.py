"""Independent reference implementations used only by the tests.

Everything here is deliberately written from scratch rather than imported
from the package: labeled-tree enumeration via Prufer sequences, a
separate AHU-style string encoder, a separate unicyclic class key, and
brute-force isomorphism classes by permutation-orbit closure.  Counts and
class structures computed here cross-check the production enumerators and
canonical codes without sharing their code paths.
"""

from __future__ import annotations

import heapq
from functools import lru_cache
from itertools import combinations, permutations, product

Edge = tuple[int, int]


def prufer_decode(seq: tuple[int, ...], n: int) -> list[Edge]:
    """Labeled tree on n >= 2 vertices from a Prufer sequence of length n-2."""
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    heap = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(heap)
    edges: list[Edge] = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((min(leaf, x), max(leaf, x)))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(heap, x)
    a = heapq.heappop(heap)
    b = heapq.heappop(heap)
    edges.append((min(a, b), max(a, b)))
    return edges


def adjacency_from_edges(n: int, edges: list[Edge]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _centers(adj: list[list[int]]) -> list[int]:
    """Vertices of minimum eccentricity, via one BFS per vertex."""
    n = len(adj)
    ecc = [0] * n
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if dist[w] < 0:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        ecc[s] = max(dist)
    radius = min(ecc)
    return [v for v in range(n) if ecc[v] == radius]


def tree_key(adj: list[list[int]]) -> str:
    """Label-invariant string for a free tree (bracket encoding)."""

    def enc(v: int, parent: int) -> str:
        subs = sorted(enc(w, v) for w in adj[v] if w != parent)
        return "[" + "".join(subs) + "]"

    return min(enc(c, -1) for c in _centers(adj))


def _cycle_by_dfs(adj: list[list[int]]) -> list[int]:
    """Cycle of a unicyclic graph from the first DFS back edge."""
    n = len(adj)
    parent = [-2] * n
    parent[0] = -1
    stack = [(0, -1)]
    back: tuple[int, int] | None = None
    while stack and back is None:
        v, par = stack.pop()
        for w in adj[v]:
            if w == par:
                continue
            if parent[w] == -2:
                parent[w] = v
                stack.append((w, v))
            else:
                back = (v, w)
                break
    assert back is not None
    v, w = back
    # Climb both endpoints' ancestor chains to their meeting point.
    anc_v = []
    x = v
    while x != -1:
        anc_v.append(x)
        x = parent[x]
    anc_set = set(anc_v)
    path_w = []
    x = w
    while x not in anc_set:
        path_w.append(x)
        x = parent[x]
    meet = x
    cycle = anc_v[: anc_v.index(meet) + 1] + list(reversed(path_w))
    return cycle


def unicyclic_key(n: int, edges: list[Edge]) -> str:
    """Label-invariant string for a connected unicyclic graph."""
    adj = adjacency_from_edges(n, edges)
    ring = _cycle_by_dfs(adj)
    cycle_set = set(ring)

    def enc(v: int, parent: int) -> str:
        subs = sorted(
            enc(w, v) for w in adj[v] if w != parent and w not in cycle_set
        )
        return "[" + "".join(subs) + "]"

    codes = [enc(v, -1) for v in ring]
    k = len(codes)
    best = None
    for direction in (1, -1):
        for shift in range(k):
            cand = "|".join(codes[(shift + direction * i) % k] for i in range(k))
            if best is None or cand < best:
                best = cand
    return f"{k}:{best}"


@lru_cache(maxsize=None)
def labeled_tree_classes(n: int) -> dict[str, list[Edge]]:
    """One representative per free-tree class, from all n**(n-2) labeled trees."""
    if n == 1:
        return {"[]": []}
    if n == 2:
        return {"[[]]": [(0, 1)]}
    reps: dict[str, list[Edge]] = {}
    for seq in product(range(n), repeat=n - 2):
        edges = prufer_decode(seq, n)
        key = tree_key(adjacency_from_edges(n, edges))
        if key not in reps:
            reps[key] = edges
    return reps


def labeled_unicyclic_class_count(n: int) -> int:
    """Unicyclic class count via labeled trees plus every chord."""
    keys: set[str] = set()
    for edges in labeled_tree_classes(n).values():
        present = set(edges)
        for u, v in combinations(range(n), 2):
            if (u, v) in present:
                continue
            keys.add(unicyclic_key(n, edges + [(u, v)]))
    return len(keys)


def _connected(n: int, edges: tuple[Edge, ...]) -> bool:
    if n == 1:
        return True
    adj = adjacency_from_edges(n, list(edges))
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def connected_graph_orbit_classes(n: int, edge_count: int | None = None) -> list[tuple[Edge, ...]]:
    """Ground-truth isomorphism classes of connected graphs on n vertices.

    Pure permutation-orbit closure over all labeled graphs; no canonical
    codes involved.  Exponential, intended for n <= 6.
    """
    all_pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    seen: set[frozenset[Edge]] = set()
    reps: list[tuple[Edge, ...]] = []
    for bits in range(1 << len(all_pairs)):
        edges = tuple(p for i, p in enumerate(all_pairs) if bits >> i & 1)
        if edge_count is not None and len(edges) != edge_count:
            continue
        if not _connected(n, edges):
            continue
        key = frozenset(edges)
        if key in seen:
            continue
        reps.append(edges)
        for perm in perms:
            seen.add(
                frozenset(
                    (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges
                )
            )
    return reps
