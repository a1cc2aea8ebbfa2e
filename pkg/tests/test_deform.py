"""Braid deformations from digraphs: the arc conditions, coning, the
restriction to infinity, and the three-way verdict."""

import itertools

from braidfree import (DeformationSpec, DirectedGraph, UNDETERMINED,
                       build_and_cone, check_a1_a2, classify,
                       deformation_verdict, ziegler_spec)
from braidfree.graphs import ABSENT, MINUS, PLUS
from braidfree.multibraid import FREE, NONFREE


def digraph(n, arcs):
    return DirectedGraph.from_arcs(n, arcs)


def all_digraphs(n):
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        yield digraph(n, [p for p, b in zip(pairs, bits) if b])


def test_check_a1_a2_examples():
    assert check_a1_a2(digraph(4, []))[:2] == (True, True)
    complete = digraph(4, [(i, j) for i in range(1, 5) for j in range(1, 5) if i != j])
    assert check_a1_a2(complete)[:2] == (True, True)
    a1, a2, witness = check_a1_a2(digraph(3, [(1, 2)]))
    assert (a1, a2) == (False, True) and witness == (1, 2, 3)


def test_build_and_cone_examples():
    aff, cone = build_and_cone(DeformationSpec(digraph(2, []), 0))
    assert len(aff.hyperplanes) == 1
    assert len(cone.hyperplanes) == 2

    aff, _ = build_and_cone(DeformationSpec(digraph(2, [(1, 2), (2, 1)]), 0))
    assert sorted(c for _, c in aff.hyperplanes) == [-1, 0, 1]

    aff, _ = build_and_cone(DeformationSpec(digraph(2, [(1, 2)]), 1))
    assert sorted(c for _, c in aff.hyperplanes) == [-2, -1, 0, 1]


def test_cone_is_simple_and_counts_match():
    for g in (digraph(3, [(1, 2)]), digraph(3, [(1, 2), (2, 1), (3, 1)])):
        spec = DeformationSpec(g, 0)
        aff, cone = build_and_cone(spec)
        assert all(m == 1 for _, m in cone.hyperplanes)
        assert len(cone.hyperplanes) == len(aff.hyperplanes) + 1
        # total restricted multiplicity equals the number of affine sheets
        assert ziegler_spec(spec).multiplicity_sum == len(aff.hyperplanes)


def test_ziegler_spec_examples():
    z = ziegler_spec(DeformationSpec(digraph(3, []), 0))
    assert z.k == 1 and set(z.multiplicities().values()) == {1}
    assert all(z.graph.mat[i][j] == MINUS for i in range(1, 4) for j in range(i + 1, 4))

    complete = digraph(3, [(i, j) for i in range(1, 4) for j in range(1, 4) if i != j])
    z = ziegler_spec(DeformationSpec(complete, 0))
    assert set(z.multiplicities().values()) == {3}
    assert all(z.graph.mat[i][j] == PLUS for i in range(1, 4) for j in range(i + 1, 4))

    z = ziegler_spec(DeformationSpec(digraph(3, [(1, 2)]), 0))
    assert z.graph.mat[1][2] == ABSENT
    assert z.graph.mat[1][3] == MINUS and z.graph.mat[2][3] == MINUS
    assert z.multiplicities() == {(1, 2): 2, (1, 3): 1, (2, 3): 1}


def test_deformation_verdict_examples():
    complete = digraph(4, [(i, j) for i in range(1, 5) for j in range(1, 5) if i != j])
    assert deformation_verdict(DeformationSpec(complete, 0)).status == FREE
    assert deformation_verdict(DeformationSpec(digraph(4, []), 0)).status == FREE

    v = deformation_verdict(DeformationSpec(digraph(3, [(1, 2)]), 0))
    assert not v.a1 and v.a2
    # every 3-vertex restriction graph passes elimination, so this one is
    # undetermined rather than non-free
    assert v.status == UNDETERMINED
    assert v.ziegler_verdict.status == FREE


def test_nonfree_branch_exists_on_four_vertices():
    # a single arc on 4 vertices: the restriction graph is K4 minus an edge
    # in Minus with one Absent pair
    v = deformation_verdict(DeformationSpec(digraph(4, [(1, 2)]), 0))
    assert not v.a1
    assert v.status in (NONFREE, UNDETERMINED)
    assert v.status == (NONFREE if v.ziegler_verdict.status == NONFREE else UNDETERMINED)


def test_conditions_imply_eliminable_restriction_exhaustive():
    # over every digraph on up to 4 vertices: (A1) and (A2) force the
    # restriction graph into the free classification
    for n in (2, 3, 4):
        for g in all_digraphs(n):
            a1, a2, _ = check_a1_a2(g)
            if a1 and a2:
                spec = DeformationSpec(g, 0)
                assert classify(ziegler_spec(spec)).status == FREE
                assert deformation_verdict(spec).status == FREE


def test_level_shifts_ziegler_level():
    z = ziegler_spec(DeformationSpec(digraph(3, [(1, 2)]), 2))
    assert z.k == 3
    assert z.multiplicities()[(1, 2)] == 2 * 2 + 1 + 1
