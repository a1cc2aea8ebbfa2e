"""Bicolor-eliminability decided two independent ways.

The ordering route searches for a vertex ranking that avoids the two
forbidden triple patterns below; the structural route checks chordality of
both one-colored graphs, eliminability of every 4-vertex induced subgraph,
and the absence of the two induced obstruction shapes (mountains and hills).
The two verdicts must always agree; a disagreement is an internal bug, not a
mathematical outcome.

Forbidden patterns for a triple (i, j, k) with k ranked above i and j, for a
color s in {Plus, Minus}:

  (1)  {i,k} and {j,k} both have color s but {i,j} does not;
  (2)  {k,i} has color s, {i,j} has the opposite color, {k,j} is absent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import (ABSENT, MINUS, PLUS, SWAPPED, EdgeBicoloredGraph,
                     induced_subgraph)


@dataclass(frozen=True)
class Ordering:
    """A bijection from vertices 1..n to ranks 1..n.

    ``ranks[v-1]`` is the rank of vertex v; ``by_rank[r-1]`` is the vertex of
    rank r.
    """

    ranks: tuple[int, ...]
    by_rank: tuple[int, ...]

    def __post_init__(self):
        n = len(self.ranks)
        if sorted(self.ranks) != list(range(1, n + 1)):
            raise ValueError("ranks must be a bijection onto 1..n")
        if tuple(self.ranks[v - 1] for v in self.by_rank) != tuple(range(1, n + 1)):
            raise ValueError("ranks and by_rank are inconsistent")

    @classmethod
    def from_ranks(cls, ranks) -> "Ordering":
        ranks = tuple(ranks)
        by_rank = [0] * len(ranks)
        for v, r in enumerate(ranks, start=1):
            by_rank[r - 1] = v
        return cls(ranks, tuple(by_rank))

    @classmethod
    def from_by_rank(cls, by_rank) -> "Ordering":
        by_rank = tuple(by_rank)
        ranks = [0] * len(by_rank)
        for r, v in enumerate(by_rank, start=1):
            ranks[v - 1] = r
        return cls(tuple(ranks), by_rank)

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        seq = tuple(range(1, n + 1))
        return cls(seq, seq)

    @property
    def n(self) -> int:
        return len(self.ranks)

    def rank_of(self, v: int) -> int:
        return self.ranks[v - 1]

    def vertex_at(self, r: int) -> int:
        return self.by_rank[r - 1]


def _triple_bad(a: int, b: int, c: int) -> bool:
    # a = color(i,k), b = color(j,k), c = color(i,j); k is the top vertex
    if a:
        if a == b:
            return c != a
        if not b and c == SWAPPED[a]:
            return True
    return b != ABSENT and not a and c == SWAPPED[b]


def is_valid_ordering(g: EdgeBicoloredGraph, nu: Ordering) -> bool:
    """True iff no triple with its top-ranked vertex matches pattern (1) or (2)."""
    if nu.n != g.n:
        raise ValueError("ordering size does not match the graph")
    mat = g.mat
    by = nu.by_rank
    for top in range(2, g.n):
        k = by[top]
        row_k = mat[k]
        for x in range(top):
            i = by[x]
            a = row_k[i]
            row_i = mat[i]
            for y in range(x + 1, top):
                j = by[y]
                if _triple_bad(a, row_k[j], row_i[j]):
                    return False
    return True


def _sink_ok(mat, v: int, members) -> bool:
    # May v take the top rank among ``members``? Only edges inside the triple
    # matter, so this is independent of how the complement was ranked.
    row_v = mat[v]
    m = len(members)
    for x in range(m):
        i = members[x]
        if i == v:
            continue
        a = row_v[i]
        row_i = mat[i]
        for y in range(x + 1, m):
            j = members[y]
            if j == v:
                continue
            if _triple_bad(a, row_v[j], row_i[j]):
                return False
    return True


def find_ordering(g: EdgeBicoloredGraph):
    """Some bicolor-elimination ordering of g, or None.

    Backtracking over sink-eligible vertices from the top rank down, memoized
    on the remaining vertex set: whether a set can fill the bottom ranks does
    not depend on the arrangement chosen above it.
    """
    n = g.n
    mat = g.mat
    full = (1 << n) - 1
    memo: dict[int, list | None] = {}

    def suffix(mask: int, count: int):
        if count <= 2:
            return [v + 1 for v in range(n) if mask >> v & 1]
        cached = memo.get(mask, 0)
        if cached != 0:
            return cached
        members = [v + 1 for v in range(n) if mask >> v & 1]
        result = None
        for v in members:
            if _sink_ok(mat, v, members):
                rest = suffix(mask ^ (1 << (v - 1)), count - 1)
                if rest is not None:
                    result = rest + [v]
                    break
        memo[mask] = result
        return result

    order = suffix(full, n)
    return None if order is None else Ordering.from_by_rank(order)


def iter_valid_orderings(g: EdgeBicoloredGraph):
    """All bicolor-elimination orderings of g (exhaustive; use for small n)."""
    for perm in itertools.permutations(range(1, g.n + 1)):
        nu = Ordering.from_by_rank(perm)
        if is_valid_ordering(g, nu):
            yield nu


def tilde_degrees(g: EdgeBicoloredGraph, nu: Ordering) -> tuple[int, ...]:
    """Signed degree of each vertex toward the lower-ranked vertices, by rank.

    Entry r-1 counts Plus edges minus Minus edges from the rank-r vertex to
    vertices of smaller rank.  Only meaningful along elimination orderings,
    so an invalid ordering is rejected.
    """
    if not is_valid_ordering(g, nu):
        raise ValueError("not a bicolor-elimination ordering for this graph")
    mat = g.mat
    by = nu.by_rank
    degs = []
    for r in range(g.n):
        row = mat[by[r]]
        d = 0
        for x in range(r):
            c = row[by[x]]
            if c == PLUS:
                d += 1
            elif c == MINUS:
                d -= 1
        degs.append(d)
    return tuple(degs)


@dataclass(frozen=True)
class Filtration:
    """An edge-by-edge build-up of a graph through valid intermediate stages.

    ``steps[0]`` is edgeless, ``steps[-1]`` is the full graph, consecutive
    steps differ by exactly one edge, every step admits the shared ordering,
    and the additions proceed block by block: all edges incident to the
    rank-r vertex (toward lower ranks) are added before any edge of a higher
    block.
    """

    steps: tuple[EdgeBicoloredGraph, ...]
    added_edges: tuple[tuple[tuple[int, int], int], ...]
    ordering: Ordering


def complete_filtration(g: EdgeBicoloredGraph, nu: Ordering) -> Filtration:
    """Build a complete filtration by reversing maximal-edge deletions.

    Repeatedly take the highest-ranked vertex l with edges to lower ranks;
    among its lower neighbors with the precedence  i < j  when {i,j} and
    {i,l} share a color while {j,l} has the other one, delete the edge {j,l}
    for a maximal j (ties broken toward the largest vertex index, so the
    reversed additions list each block smallest partner first).  Every
    intermediate stage is checked against the ordering; a failure there is an
    internal bug.
    """
    if not is_valid_ordering(g, nu):
        raise ValueError("not a bicolor-elimination ordering for this graph")
    n = g.n
    mat = [list(row) for row in g.mat]
    by = nu.by_rank
    deletions = []
    for top in range(n - 1, 0, -1):
        l = by[top]
        row_l = mat[l]
        while True:
            nb = [by[x] for x in range(top) if row_l[by[x]]]
            if not nb:
                break
            maximal = []
            for j in nb:
                cjl = row_l[j]
                row_j = mat[j]
                # j is maximal unless some i has {j,i} colored like {j,l}
                # while {i,l} carries the other color
                if not any(row_j[i] == cjl and row_l[i] == SWAPPED[cjl]
                           for i in nb if i != j):
                    maximal.append(j)
            # the precedence is a partial order on the neighbors, so maximal
            # elements always exist under a valid ordering
            if not maximal:
                raise AssertionError("edge-deletion precedence has no maximal element")
            j = max(maximal)
            deletions.append(((min(j, l), max(j, l)), row_l[j]))
            mat[l][j] = mat[j][l] = ABSENT
    additions = tuple(reversed(deletions))

    build = [[ABSENT] * (n + 1) for _ in range(n + 1)]
    steps = [EdgeBicoloredGraph(n, tuple(tuple(r) for r in build))]
    for (i, j), color in additions:
        build[i][j] = build[j][i] = color
        step = EdgeBicoloredGraph(n, tuple(tuple(r) for r in build))
        if not is_valid_ordering(step, nu):
            raise AssertionError("filtration stage lost the elimination ordering")
        steps.append(step)
    if steps[-1] != g:
        raise AssertionError("filtration did not rebuild the input graph")
    return Filtration(tuple(steps), additions, nu)


def is_chordal_one_color(g: EdgeBicoloredGraph, color: int) -> bool:
    """Chordality of the one-colored graph (V, E^color) by simplicial elimination.

    A graph is chordal iff its vertices admit an elimination order; greedily
    removing any vertex whose neighborhood is a clique is exact.
    """
    adj = {v: {u for u in g.vertices() if g.mat[v][u] == color}
           for v in g.vertices()}
    remaining = set(g.vertices())
    while remaining:
        for v in sorted(remaining):
            nb = adj[v] & remaining
            if all(b in adj[a] for a, b in itertools.combinations(sorted(nb), 2)):
                remaining.discard(v)
                break
        else:
            return False
    return True


def find_bad_quadruple(g: EdgeBicoloredGraph):
    """Some 4-vertex subset whose induced subgraph admits no ordering, or None."""
    for quad in itertools.combinations(g.vertices(), 4):
        if find_ordering(induced_subgraph(g, quad)) is None:
            return quad
    return None


@dataclass(frozen=True)
class MountainWitness:
    sigma: int                    # spoke color; the ridge path has the other color
    path: tuple[int, ...]
    omega: int


@dataclass(frozen=True)
class HillWitness:
    sigma: int
    path: tuple[int, ...]
    omega1: int
    omega2: int


def find_mountain(g: EdgeBicoloredGraph):
    """Search for an induced mountain: a path v_1..v_m (m >= 3) in one color
    with a hub joined by the other color to the interior vertices only; every
    remaining pair among the chosen vertices must be absent."""
    mat = g.mat
    vs = list(g.vertices())
    for sigma in (PLUS, MINUS):
        ridge = SWAPPED[sigma]
        for omega in vs:
            row_w = mat[omega]

            def extend(path, used):
                last = path[-1]
                row_last = mat[last]
                for u in vs:
                    if u == omega or used >> u & 1:
                        continue
                    if row_last[u] != ridge:
                        continue
                    # u may touch no earlier path vertex except its predecessor
                    if any(mat[u][p] for p in path[:-1]):
                        continue
                    wu = row_w[u]
                    if len(path) >= 2 and wu == ABSENT:
                        return MountainWitness(sigma, (*path, u), omega)
                    if wu == sigma:
                        found = extend((*path, u), used | 1 << u)
                        if found is not None:
                            return found
                return None

            for start in vs:
                if start == omega or row_w[start] != ABSENT:
                    continue
                found = extend((start,), 1 << start | 1 << omega)
                if found is not None:
                    return found
    return None


def find_hill(g: EdgeBicoloredGraph):
    """Search for an induced hill: a path v_1..v_m (m >= 2) in one color with
    two hubs joined to each other and to overlapping path prefixes/suffixes in
    the other color; remaining pairs absent."""
    mat = g.mat
    vs = list(g.vertices())
    for sigma in (PLUS, MINUS):
        ridge = SWAPPED[sigma]
        for omega1, omega2 in itertools.permutations(vs, 2):
            if mat[omega1][omega2] != sigma:
                continue
            row1 = mat[omega1]
            row2 = mat[omega2]

            def extend(path, used):
                last = path[-1]
                row_last = mat[last]
                for u in vs:
                    if used >> u & 1:
                        continue
                    if row_last[u] != ridge or row2[u] != sigma:
                        continue
                    if any(mat[u][p] for p in path[:-1]):
                        continue
                    w1u = row1[u]
                    if w1u == ABSENT:
                        return HillWitness(sigma, (*path, u), omega1, omega2)
                    if w1u == sigma:
                        found = extend((*path, u), used | 1 << u)
                        if found is not None:
                            return found
                return None

            for start in vs:
                if start in (omega1, omega2):
                    continue
                if row1[start] != sigma or row2[start] != ABSENT:
                    continue
                found = extend((start,), 1 << start | 1 << omega1 | 1 << omega2)
                if found is not None:
                    return found
    return None


@dataclass(frozen=True)
class StructuralReport:
    """Outcome of the three structural conditions with explicit witnesses."""

    chordal_plus: bool
    chordal_minus: bool
    bad_quadruple: tuple | None
    mountain: MountainWitness | None
    hill: HillWitness | None

    @property
    def passes(self) -> bool:
        return (self.chordal_plus and self.chordal_minus
                and self.bad_quadruple is None
                and self.mountain is None and self.hill is None)


def structural_check(g: EdgeBicoloredGraph) -> StructuralReport:
    """Full structural report (all three conditions evaluated, with witnesses)."""
    return StructuralReport(
        chordal_plus=is_chordal_one_color(g, PLUS),
        chordal_minus=is_chordal_one_color(g, MINUS),
        bad_quadruple=find_bad_quadruple(g),
        mountain=find_mountain(g),
        hill=find_hill(g),
    )


def structurally_eliminable(g: EdgeBicoloredGraph) -> bool:
    """Short-circuit structural verdict (no witnesses collected)."""
    return (is_chordal_one_color(g, PLUS)
            and is_chordal_one_color(g, MINUS)
            and find_bad_quadruple(g) is None
            and find_mountain(g) is None
            and find_hill(g) is None)


@dataclass(frozen=True)
class EliminabilityResult:
    eliminable: bool
    ordering: Ordering | None
    structural: StructuralReport


def is_eliminable(g: EdgeBicoloredGraph) -> EliminabilityResult:
    """Decide eliminability by both routes and insist they agree."""
    nu = find_ordering(g)
    report = structural_check(g)
    if (nu is not None) != report.passes:
        raise AssertionError(
            "ordering search and structural characterization disagree on "
            f"{g.digits()}; this is a bug")
    return EliminabilityResult(nu is not None, nu, report)
