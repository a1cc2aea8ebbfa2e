"""Deformations of the braid arrangement encoded by directed graphs.

A digraph G on vertices 1..l+1 and a level k define the affine arrangement
x_i - x_j = -k - e(i,j), -k, ..., k, k + e(j,i) (i < j), where e(i,j) is 1
exactly when the arc (i,j) is present.  Coning adds a homogenizing
coordinate and the infinity hyperplane; restricting to infinity with
hyperplane-counting multiplicities lands back in the multi-braid setting, at
level k+1 with Plus / Absent / Minus recording two / one / zero arcs between
a pair.

The verdict is three-way.  Conditions (A1)/(A2) holding proves the cone free
(this is the proven direction of Athanasiadis's conjectured
characterization); a restriction that falls outside the free classification
proves the cone non-free; anything else is reported Undetermined, never
guessed from the conjecture.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import EdgeBicoloredGraph, DirectedGraph
from .multibraid import FREE, NONFREE, MultiBraidSpec, Verdict, classify
from .oracle import MultiArrangement

UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class DeformationSpec:
    digraph: DirectedGraph
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")


@dataclass(frozen=True)
class AffineArrangement:
    """Deduplicated affine hyperplanes (normal, constant): normal . x = constant."""

    dim: int
    hyperplanes: tuple[tuple[tuple[int, ...], int], ...]


@dataclass(frozen=True)
class DeformationVerdict:
    status: str                      # Free | NonFree | Undetermined
    a1: bool
    a2: bool
    witness_triple: tuple | None
    ziegler: MultiBraidSpec
    ziegler_verdict: Verdict
    note: str


def check_a1_a2(g: DirectedGraph):
    """Scan all triples i, j < h for the two local arc conditions.

    (A1): an arc (i,j) forces (i,h) or (h,j).
    (A2): arcs (i,h) and (h,j) force (i,j).
    Returns (a1, a2, first failing triple or None).
    """
    a1 = a2 = True
    witness = None
    arcs = g.arcs
    for h in range(1, g.n + 1):
        for i in range(1, h):
            for j in range(1, h):
                if i == j:
                    continue
                if a1 and (i, j) in arcs and (i, h) not in arcs and (h, j) not in arcs:
                    a1 = False
                    witness = witness or (i, j, h)
                if a2 and (i, h) in arcs and (h, j) in arcs and (i, j) not in arcs:
                    a2 = False
                    witness = witness or (i, j, h)
    return a1, a2, witness


def _constants(spec: DeformationSpec, i: int, j: int) -> list[int]:
    e_ij = 1 if spec.digraph.has_arc(i, j) else 0
    e_ji = 1 if spec.digraph.has_arc(j, i) else 0
    vals = set(range(-spec.k, spec.k + 1))
    vals.add(-spec.k - e_ij)
    vals.add(spec.k + e_ji)
    return sorted(vals)


def build_and_cone(spec: DeformationSpec):
    """The affine arrangement of the deformation and its cone.

    The cone lives in one more coordinate z: each affine sheet
    x_i - x_j = c becomes x_i - x_j - c z = 0, and the infinity hyperplane
    z = 0 joins in.  Every hyperplane of the cone is simple (multiplicity 1).
    """
    n = spec.digraph.n
    if n < 2:
        raise ValueError("a deformation needs at least two vertices")
    affine = []
    coned = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            normal = [0] * n
            normal[i - 1] = 1
            normal[j - 1] = -1
            for c in _constants(spec, i, j):
                affine.append((tuple(normal), c))
                coned.append((tuple(normal) + (-c,), 1))
    coned.append(((0,) * n + (1,), 1))
    return (AffineArrangement(n, tuple(affine)),
            MultiArrangement(n + 1, tuple(coned)))


def ziegler_spec(spec: DeformationSpec) -> MultiBraidSpec:
    """The restriction to infinity with hyperplane-counting multiplicities,
    encoded as a multi-braid spec.

    The pair {i,j} receives one hyperplane per distinct constant, i.e.
    2k + 1 + e(i,j) + e(j,i); with level k+1 this is Plus for two arcs,
    Absent for one and Minus for none.
    """
    n = spec.digraph.n
    plus = []
    minus = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            arcs = (spec.digraph.has_arc(i, j)) + (spec.digraph.has_arc(j, i))
            if arcs == 2:
                plus.append((i, j))
            elif arcs == 0:
                minus.append((i, j))
    graph = EdgeBicoloredGraph.from_edges(n, plus=plus, minus=minus)
    return MultiBraidSpec(spec.k + 1, (0,) * n, graph)


def deformation_verdict(spec: DeformationSpec) -> DeformationVerdict:
    """Three-way verdict for the coned deformation.

    (A1) and (A2) together prove freeness.  Otherwise, if the restriction to
    infinity is non-free (its graph not bicolor-eliminable), the cone cannot
    be free either, since a free cone has a free restriction.  A failed
    (A1)/(A2) with an eliminable restriction stays Undetermined: the converse
    direction of Athanasiadis's conjecture is open.
    """
    a1, a2, witness = check_a1_a2(spec.digraph)
    z = ziegler_spec(spec)
    zv = classify(z)
    if a1 and a2:
        if zv.status != FREE:
            raise AssertionError(
                "conditions (A1)/(A2) hold but the infinity restriction is not "
                "free; this is a bug")
        return DeformationVerdict(
            FREE, a1, a2, witness, z, zv,
            "conditions (A1) and (A2) hold, so the cone is free")
    if zv.status == NONFREE:
        return DeformationVerdict(
            NONFREE, a1, a2, witness, z, zv,
            "the restriction to infinity is non-free, so the cone is non-free")
    return DeformationVerdict(
        UNDETERMINED, a1, a2, witness, z, zv,
        "conditions (A1)/(A2) fail but the restriction to infinity is free; "
        "the converse direction of Athanasiadis's conjecture is open, so no "
        "verdict is claimed")
