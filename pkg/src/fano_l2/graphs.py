"""Simple graphs with bitmask adjacency, plus the extremal graph families used as
references for two-edge-star maximization.

Vertices are 0-indexed. All constructors validate and the objects are immutable:
mutating operations return new graphs.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator


def all_pairs(n: int) -> list[tuple[int, int]]:
    """Lexicographically ordered vertex pairs of an n-vertex graph."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


class SimpleGraph:
    """Undirected simple graph stored as one adjacency bitmask row per vertex."""

    __slots__ = ("n", "_rows", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        rows = [0] * n
        edge_set: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in edge_set:
                raise ValueError(f"duplicate edge {e}")
            edge_set.add(e)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self._rows = tuple(rows)
        self._edges = tuple(sorted(edge_set))

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
            return False
        return bool(self._rows[u] >> v & 1)

    def row(self, v: int) -> int:
        """Adjacency bitmask of vertex v."""
        return self._rows[v]

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self._rows)

    def neighbors(self, v: int) -> Iterator[int]:
        row = self._rows[v]
        while row:
            low = row & -row
            yield low.bit_length() - 1
            row ^= low

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.edge_count})"

    # ----- calculus -------------------------------------------------------

    def norm_p(self, p: float) -> int | float:
        """Sum of degree^p over vertices. Exact integer for integral p >= 1."""
        if p < 1:
            raise ValueError(f"norm exponent must be >= 1, got {p}")
        degs = self.degrees()
        if float(p).is_integer():
            q = int(p)
            return sum(d**q for d in degs)
        return float(sum(d ** float(p) for d in degs if d))

    def star_count(self, k: int) -> int:
        """Number of k-edge stars, counted as C(degree, k) summed over vertices."""
        if k < 1:
            raise ValueError(f"star size must be >= 1, got {k}")
        return sum(comb(d, k) for d in self.degrees())

    # ----- transforms -----------------------------------------------------

    def remove_vertex(self, v: int) -> SimpleGraph:
        """Graph with v deleted; remaining vertices are shifted down to 0..n-2."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside range")

        def shift(x: int) -> int:
            return x if x < v else x - 1

        kept = [(shift(a), shift(b)) for a, b in self._edges if v not in (a, b)]
        return SimpleGraph(self.n - 1, kept)

    def complement(self) -> SimpleGraph:
        comp = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self._rows[u] >> v & 1
        ]
        return SimpleGraph(self.n, comp)

    # ----- structural checks ---------------------------------------------

    def is_independent_set(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return all(not (self._rows[v] & mask) for v in range(self.n) if mask >> v & 1)

    def triangle(self) -> tuple[int, int, int] | None:
        """Some triangle as a sorted vertex triple, or None."""
        for u, v in self._edges:
            common = self._rows[u] & self._rows[v]
            if common:
                w = (common & -common).bit_length() - 1
                return tuple(sorted((u, v, w)))  # type: ignore[return-value]
        return None

    def bipartition(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        """A proper 2-coloring as (side0, side1), or None if an odd cycle exists."""
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] != -1:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                u = stack.pop()
                for w in self.neighbors(u):
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        stack.append(w)
                    elif color[w] == color[u]:
                        return None
        side0 = tuple(v for v in range(self.n) if color[v] == 0)
        side1 = tuple(v for v in range(self.n) if color[v] == 1)
        return side0, side1


# ----- reference families -------------------------------------------------


def clique_plus_isolated(n: int, k: int) -> SimpleGraph:
    """A k-clique on the first k vertices, the remaining n-k vertices isolated."""
    if not 0 <= k <= n:
        raise ValueError(f"clique size {k} outside 0..{n}")
    return SimpleGraph(n, [(u, v) for u in range(k) for v in range(u + 1, k)])


def complete_minus_clique(n: int, k: int) -> SimpleGraph:
    """Complement of ``clique_plus_isolated``: K_n with the edges inside the
    first k vertices removed. The first k vertices form an independent set."""
    return clique_plus_isolated(n, k).complement()


def complete_split_plus_isolated(n: int, k: int, ell: int) -> SimpleGraph:
    """``complete_minus_clique(k + ell, k)`` padded with n-k-ell isolated vertices.

    The independent part has k vertices of degree ell, the clique part has ell
    vertices of degree k+ell-1, so the edge count is C(k+ell, 2) - C(k, 2).
    """
    if k < 0 or ell < 0 or k + ell > n:
        raise ValueError(f"parts ({k},{ell}) do not fit into {n} vertices")
    core = complete_minus_clique(k + ell, k)
    return SimpleGraph(n, core.edges())


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    """K_{a,b} on a+b vertices with sides {0..a-1} and {a..a+b-1}."""
    if a < 0 or b < 0:
        raise ValueError("side sizes must be nonnegative")
    return SimpleGraph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def quasi_complete(n: int, m: int) -> SimpleGraph:
    """The m-edge graph filling a clique greedily: a maximal clique on the first
    k vertices with C(k,2) <= m, plus vertex k joined to the first m - C(k,2)
    clique vertices."""
    if not 0 <= m <= comb(n, 2):
        raise ValueError(f"edge count {m} outside 0..{comb(n, 2)}")
    k = 0
    while comb(k + 1, 2) <= m:
        k += 1
    rest = m - comb(k, 2)
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    edges += [(u, k) for u in range(rest)]
    return SimpleGraph(n, edges)


def quasi_star(n: int, m: int) -> SimpleGraph:
    """Complement of ``quasi_complete(n, C(n,2) - m)``: full-degree vertices are
    added one dominated edge at a time."""
    return quasi_complete(n, comb(n, 2) - m).complement()
