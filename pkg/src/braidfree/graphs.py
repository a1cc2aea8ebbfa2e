"""Edge-bicolored and directed graphs: construction, induced subgraphs,
canonical forms and exhaustive census of small graphs.

Vertices are 1-based throughout.  A coloring is total: every unordered pair
{i,j} carries exactly one of Absent/Plus/Minus, so "no edge" is a first-class
value and pattern checks are direct lookups.  Canonical keys are computed by
brute-force minimisation over all vertex relabelings, optionally composed
with the global Plus/Minus swap; this is exact and fast enough at desk scale
(the largest exhaustive census is on 5 vertices).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum


class EdgeColor(IntEnum):
    ABSENT = 0
    PLUS = 1
    MINUS = 2


ABSENT = int(EdgeColor.ABSENT)
PLUS = int(EdgeColor.PLUS)
MINUS = int(EdgeColor.MINUS)

# color involution: Plus <-> Minus, Absent fixed
SWAPPED = (ABSENT, MINUS, PLUS)

MAX_CANONICAL_VERTICES = 7   # brute-force minimum over n! relabelings
MAX_CENSUS_VERTICES = 5      # exhaustive census over 3^C(n,2) colorings


class UnsupportedSizeError(ValueError):
    """Input exceeds the exhaustive-search limits of this toolkit."""


def pair_list(n: int) -> list[tuple[int, int]]:
    """Unordered pairs {i,j}, 1 <= i < j <= n, in row-major upper-triangle order."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


@dataclass(frozen=True)
class EdgeBicoloredGraph:
    """A graph on vertices 1..n whose edges split into Plus and Minus classes.

    ``mat[i][j]`` holds the color code of the pair {i,j} (row and column 0 are
    unused padding); the matrix is symmetric with zero diagonal.
    """

    n: int
    mat: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be positive")
        if len(self.mat) != self.n + 1 or any(len(row) != self.n + 1 for row in self.mat):
            raise ValueError("color matrix has wrong shape")
        for i in range(1, self.n + 1):
            if self.mat[i][i] != ABSENT:
                raise ValueError("self-loops are not allowed")
            for j in range(i + 1, self.n + 1):
                if self.mat[i][j] != self.mat[j][i]:
                    raise ValueError("color matrix must be symmetric")
                if self.mat[i][j] not in (ABSENT, PLUS, MINUS):
                    raise ValueError("unknown edge color code")

    @classmethod
    def from_edges(cls, n: int, plus=(), minus=()) -> "EdgeBicoloredGraph":
        mat = [[ABSENT] * (n + 1) for _ in range(n + 1)]
        seen = set()
        for color, edges in ((PLUS, plus), (MINUS, minus)):
            for i, j in edges:
                if not (1 <= i <= n and 1 <= j <= n) or i == j:
                    raise ValueError(f"bad edge ({i},{j}) on {n} vertices")
                key = (min(i, j), max(i, j))
                if key in seen:
                    raise ValueError(f"duplicate edge {key}")
                seen.add(key)
                mat[i][j] = mat[j][i] = color
        return cls(n, tuple(tuple(row) for row in mat))

    @classmethod
    def from_digits(cls, n: int, digits) -> "EdgeBicoloredGraph":
        """Build from the upper-triangle color codes in row-major order."""
        pairs = pair_list(n)
        digits = tuple(digits)
        if len(digits) != len(pairs):
            raise ValueError("digit string length does not match C(n,2)")
        mat = [[ABSENT] * (n + 1) for _ in range(n + 1)]
        for (i, j), d in zip(pairs, digits):
            if d not in (ABSENT, PLUS, MINUS):
                raise ValueError("unknown edge color code")
            mat[i][j] = mat[j][i] = d
        return cls(n, tuple(tuple(row) for row in mat))

    def color(self, i: int, j: int) -> int:
        return self.mat[i][j]

    def digits(self) -> tuple[int, ...]:
        """Upper-triangle color codes in row-major order (the key serialization)."""
        return tuple(self.mat[i][j] for i, j in pair_list(self.n))

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self, color: int) -> list[tuple[int, int]]:
        return [(i, j) for i, j in pair_list(self.n) if self.mat[i][j] == color]

    def plus_edges(self) -> list[tuple[int, int]]:
        return self.edges(PLUS)

    def minus_edges(self) -> list[tuple[int, int]]:
        return self.edges(MINUS)

    def edge_balance(self) -> int:
        """|E^+| - |E^-|."""
        d = self.digits()
        return sum(1 for c in d if c == PLUS) - sum(1 for c in d if c == MINUS)


def induced_subgraph(g: EdgeBicoloredGraph, subset) -> EdgeBicoloredGraph:
    """Induced subgraph on ``subset``, relabeled order-preservingly to 1..|subset|."""
    vs = sorted(set(subset))
    if not vs:
        raise ValueError("vertex subset must be nonempty")
    if vs[0] < 1 or vs[-1] > g.n:
        raise ValueError("vertex out of range")
    m = len(vs)
    mat = [[ABSENT] * (m + 1) for _ in range(m + 1)]
    for a in range(m):
        row = g.mat[vs[a]]
        for b in range(a + 1, m):
            mat[a + 1][b + 1] = mat[b + 1][a + 1] = row[vs[b]]
    return EdgeBicoloredGraph(m, tuple(tuple(row) for row in mat))


def color_swap(g: EdgeBicoloredGraph) -> EdgeBicoloredGraph:
    """Exchange Plus and Minus on every edge (an involution)."""
    mat = tuple(tuple(SWAPPED[c] for c in row) for row in g.mat)
    return EdgeBicoloredGraph(g.n, mat)


def permute_graph(g: EdgeBicoloredGraph, perm) -> EdgeBicoloredGraph:
    """Relabel vertices: the image graph colors {perm[i],perm[j]} as g colors {i,j}.

    ``perm`` maps 1..n to 1..n (a sequence of length n, or n+1 with a dummy
    leading entry).
    """
    if len(perm) == g.n:
        perm = (0, *perm)
    if sorted(perm[1:]) != list(g.vertices()):
        raise ValueError("not a permutation of the vertices")
    n = g.n
    mat = [[ABSENT] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            c = g.mat[i][j]
            mat[perm[i]][perm[j]] = mat[perm[j]][perm[i]] = c
    return EdgeBicoloredGraph(n, tuple(tuple(row) for row in mat))


def _pair_slot_maps(n: int) -> list[tuple[int, ...]]:
    """For every vertex permutation, the induced permutation of pair slots.

    Slot t of the image equals slot map[t] of the source, i.e. applying
    ``image[m[t]] = digits[t]`` realizes permute_graph on digit strings.
    """
    pairs = pair_list(n)
    index = {p: t for t, p in enumerate(pairs)}
    maps = []
    for perm in itertools.permutations(range(1, n + 1)):
        full = (0, *perm)
        maps.append(tuple(
            index[(full[i], full[j])] if full[i] < full[j] else index[(full[j], full[i])]
            for i, j in pairs))
    return maps


def canonical_key(g: EdgeBicoloredGraph, include_swap: bool = True) -> bytes:
    """Minimum serialization over all relabelings (and the color swap if set).

    Equal keys characterize isomorphism up to relabeling (composed with the
    global swap when ``include_swap``).
    """
    if g.n > MAX_CANONICAL_VERTICES:
        raise UnsupportedSizeError(
            f"canonicalization supports at most {MAX_CANONICAL_VERTICES} vertices")
    digits = g.digits()
    nslots = len(digits)
    variants = [digits]
    if include_swap:
        variants.append(tuple(SWAPPED[c] for c in digits))
    best = None
    for m in _pair_slot_maps(g.n):
        for var in variants:
            img = [0] * nslots
            for t in range(nslots):
                img[m[t]] = var[t]
            timg = tuple(img)
            if best is None or timg < best:
                best = timg
    return bytes([g.n]) + bytes(best)


@dataclass(frozen=True)
class GraphClass:
    """One isomorphism(+swap) class: canonical key, a representative whose own
    key equals it, and the number of labeled colorings in the class."""

    canonical_key: bytes
    representative: EdgeBicoloredGraph
    labeled_count: int


def enumerate_classes(n: int, include_swap: bool = True) -> list[GraphClass]:
    """All coloring classes on n vertices, exhaustively, sorted by canonical key.

    The labeled counts partition the 3^C(n,2) colorings exactly.
    """
    if not 1 <= n <= MAX_CENSUS_VERTICES:
        raise UnsupportedSizeError(
            f"exhaustive census supports 1..{MAX_CENSUS_VERTICES} vertices")
    nslots = n * (n - 1) // 2
    maps = _pair_slot_maps(n)
    # codes treat slot 0 as the most significant base-3 digit, so the
    # enumeration index below *is* the code of the digit tuple
    weights = [3 ** (nslots - 1 - t) for t in range(nslots)]
    seen = bytearray(3 ** nslots)
    classes = []
    for code, digits in enumerate(itertools.product((0, 1, 2), repeat=nslots)):
        if seen[code]:
            continue
        orbit = set()
        variants = [digits]
        if include_swap:
            variants.append(tuple(SWAPPED[c] for c in digits))
        for m in maps:
            for var in variants:
                img = [0] * nslots
                for t in range(nslots):
                    img[m[t]] = var[t]
                orbit.add(tuple(img))
        best = min(orbit)
        for member in orbit:
            seen[sum(d * w for d, w in zip(member, weights))] = 1
        classes.append(GraphClass(
            canonical_key=bytes([n]) + bytes(best),
            representative=EdgeBicoloredGraph.from_digits(n, best),
            labeled_count=len(orbit)))
    classes.sort(key=lambda c: c.canonical_key)
    return classes


@dataclass(frozen=True)
class DirectedGraph:
    """A loop-free directed graph on vertices 1..n; (i,j) and (j,i) may coexist."""

    n: int
    arcs: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be positive")
        for i, j in self.arcs:
            if i == j:
                raise ValueError("loops are not allowed")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"arc ({i},{j}) out of range")

    @classmethod
    def from_arcs(cls, n: int, arcs) -> "DirectedGraph":
        arcs = [tuple(a) for a in arcs]
        if len(arcs) != len(set(arcs)):
            raise ValueError("duplicate arcs")
        return cls(n, frozenset(arcs))

    def has_arc(self, i: int, j: int) -> bool:
        return (i, j) in self.arcs
