"""Shared fixtures: the groupoid fixture set, Hopf group algebras, and the
three quantum transformation groupoid instances used across the suite."""

from __future__ import annotations

import pytest

from frobkit.whopf import (
    QTGInput,
    connected_groupoid,
    cyclic_group_table,
    disjoint_union,
    group_groupoid,
    groupoid_algebra,
    hopf_group_algebra,
    pair_groupoid,
    qtg_build,
    separable_group_algebra,
    separable_matrix_algebra,
    trivial_action,
    trivial_groupoid,
    trivial_hopf,
)


def build_groupoid_fixture_set():
    """Groupoids with <= 3 objects and <= 2 parallel morphisms per hom-fibre."""
    z2 = cyclic_group_table(2)
    fixtures = {
        "point": trivial_groupoid(),
        "two_points": disjoint_union(trivial_groupoid(), trivial_groupoid()),
        "three_points": disjoint_union(
            disjoint_union(trivial_groupoid(), trivial_groupoid()),
            trivial_groupoid(),
        ),
        "z2_loop": group_groupoid(z2),
        "pair2": pair_groupoid(2),
        "pair3": pair_groupoid(3),
        "pair2_x_z2": connected_groupoid(2, z2),
        "pair3_x_z2": connected_groupoid(3, z2),
        "z2_plus_point": disjoint_union(group_groupoid(z2), trivial_groupoid()),
        "pair2_plus_point": disjoint_union(pair_groupoid(2), trivial_groupoid()),
    }
    return fixtures


@pytest.fixture(scope="session")
def groupoid_fixtures():
    return build_groupoid_fixture_set()


@pytest.fixture(scope="session")
def groupoid_algebras(groupoid_fixtures):
    return {name: groupoid_algebra(g) for name, g in groupoid_fixtures.items()}


@pytest.fixture(scope="session")
def hopf_group_algebras():
    return {n: hopf_group_algebra(cyclic_group_table(n)) for n in range(1, 5)}


def build_qtg_instances():
    """The three instances: (k, M_2), (k, kZ/2), (kZ/2, kZ/2, trivial)."""
    out = {}
    L = trivial_hopf()
    B, e, om = separable_matrix_algebra(2)
    out["k_mat2"] = QTGInput(L, B, e, om, trivial_action(B, L))
    B2, e2, om2 = separable_group_algebra(cyclic_group_table(2))
    out["k_kz2"] = QTGInput(L, B2, e2, om2, trivial_action(B2, L))
    L2 = hopf_group_algebra(cyclic_group_table(2))
    out["kz2_kz2"] = QTGInput(L2, B2, e2, om2, trivial_action(B2, L2))
    return out


@pytest.fixture(scope="session")
def qtg_instances():
    return build_qtg_instances()


@pytest.fixture(scope="session")
def qtg_built(qtg_instances):
    return {name: qtg_build(q) for name, q in qtg_instances.items()}
