"""Closed-form graphs against brute-force enumeration, family by family."""

from __future__ import annotations

import math

import pytest

from powergraph.arith import Sequence, iterated_gcd
from powergraph.fgraph import hanging_tree_census
from powergraph.groups import (
    AbelianGroup,
    CyclicGroup,
    DihedralGroup,
    FlowerType,
    PGLGroup,
    QuaternionGroup,
    parse_group,
)
from powergraph.oracle import brute_force_details, brute_force_graph
from powergraph.structural import (
    PseudoFlower,
    abelian_graph,
    central_tree,
    central_tree_rules,
    cyclic_graph,
    flower_graph,
    pgl_graph,
    pgl_type,
    pseudo_flower_graph,
    quaternion_graph,
    quaternion_type,
    semidirect_graph,
    semidirect_type,
    structural_graph,
)
from powergraph.tree import elementary_tree, render_tree


class TestCyclic:
    def test_identity_exponent(self):
        # t = 1 mod n fixes everything
        res = cyclic_graph(13, 14)
        assert res.graph.component_count == 13
        assert res.graph.periodic_count == 13

    def test_golden_91_14(self):
        res = cyclic_graph(91, 14)
        assert res.graph.vertex_count == 91
        # 14 = 1 mod 13, so all 13 periodic points are fixed, each with T(7)
        assert res.graph.component_count == 13
        assert res.central_tree == elementary_tree((7,))
        assert res.method == "cyclic"

    @pytest.mark.parametrize("n", [1, 2, 12, 24, 30])
    @pytest.mark.parametrize("t", [1, 2, 3, 6, 10])
    def test_against_enumeration(self, n, t):
        assert cyclic_graph(n, t).graph == brute_force_graph(CyclicGroup(n), t)


class TestAbelian:
    def test_golden_6x12_t14(self):
        res = abelian_graph([6, 12], 14)
        assert res.central_tree == elementary_tree((4, 2))
        census = hanging_tree_census(res.graph)
        assert census == {elementary_tree((4, 2)).canonical_code(): 9}
        assert res.graph == brute_force_graph(AbelianGroup([6, 12]), 14)
        assert res.graph == brute_force_graph(parse_group("units:91"), 14)

    @pytest.mark.parametrize(
        "orders,t",
        [((2, 4), 2), ((2, 2, 2), 2), ((3, 9), 3), ((4, 6), 10), ((5, 25), 10)],
    )
    def test_against_enumeration(self, orders, t):
        assert abelian_graph(orders, t).graph == brute_force_graph(
            AbelianGroup(orders), t
        )

    def test_mixed_chain_product(self):
        # per-factor gcd chains multiply coordinatewise into the hung tree
        res = abelian_graph([6, 12], 14)
        assert iterated_gcd(6, 14) == Sequence((2,))
        assert iterated_gcd(12, 14) == Sequence((2, 2))
        assert res.central_tree == elementary_tree((4, 2))


class TestQuaternion:
    def test_type(self):
        assert quaternion_type(6) == FlowerType(2, (4,) * 6 + (12,))
        assert quaternion_type(2) == FlowerType(2, (4, 4, 4))

    def test_golden_q24_t3(self):
        res = quaternion_graph(6, 3)
        brute = brute_force_graph(QuaternionGroup(6), 3)
        assert res.graph == brute
        assert res.graph.vertex_count == 24
        assert res.central_tree == elementary_tree((3,))
        assert res.graph.component_count == 9

    def test_golden_q48_t10(self):
        res = quaternion_graph(12, 10)
        assert res.graph == brute_force_graph(QuaternionGroup(12), 10)
        # central tree: T(2,2,2) with 24 extra leaves summed two levels down
        det = brute_force_details(QuaternionGroup(12), 10)
        assert res.central_tree == det.tree_at(QuaternionGroup(12).identity)
        assert res.central_tree.node_count == 32

    @pytest.mark.parametrize("n", range(2, 11))
    @pytest.mark.parametrize("t", [2, 3, 4, 5, 6, 10, 12])
    def test_against_enumeration(self, n, t):
        assert quaternion_graph(n, t).graph == brute_force_graph(
            QuaternionGroup(n), t
        )

    def test_odd_t_regimes(self):
        # t = 1 mod 4 keeps the two order-4 fixed classes; t = 3 mod 4 fuses them
        g5 = quaternion_graph(6, 5).graph
        g3 = quaternion_graph(6, 3).graph
        assert g5 != g3


class TestSemidirect:
    def test_type_golden(self):
        assert semidirect_type(65, 4, 8) == FlowerType(1, (4,) * 65 + (65,))
        assert semidirect_type(7, 3, 2) == FlowerType(1, (3,) * 7 + (7,))

    def test_type_requires_condition(self):
        with pytest.raises(ValueError):
            semidirect_type(9, 3, 4)

    def test_golden_65_4_8_t10(self):
        res = semidirect_graph(65, 4, 8, 10)
        assert res.graph.vertex_count == 260
        assert res.graph == brute_force_graph(
            parse_group("semidirect:n=65,m=4,s=8"), 10
        )
        # central tree = T(5) + 65.T(2,2): 5 + 65*3 nodes
        assert res.central_tree.node_count == 200
        assert res.central_expression == "T(5) + 65.T(2,2)"

    @pytest.mark.parametrize(
        "n,m,s,t",
        [(7, 3, 2, 2), (7, 3, 2, 6), (13, 4, 5, 4), (5, 4, 2, 6), (65, 4, 8, 2)],
    )
    def test_against_enumeration(self, n, m, s, t):
        assert semidirect_graph(n, m, s, t).graph == brute_force_graph(
            parse_group(f"semidirect:n={n},m={m},s={s}"), t
        )


class TestPGL:
    def test_type_golden(self):
        assert pgl_type(5) == FlowerType(
            1, (4,) * 15 + (5,) * 6 + (6,) * 10
        )
        assert pgl_type(3) == FlowerType(1, (2,) * 6 + (3,) * 4 + (4,) * 3)

    @pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
    def test_type_size_is_group_order(self, q):
        assert pgl_type(q).size == q**3 - q

    def test_closed_form_needs_q_at_least_4(self):
        with pytest.raises(ValueError):
            pgl_graph(3, 2)

    def test_golden_pgl25_t2(self):
        res = pgl_graph(5, 2)
        assert res.graph == brute_force_graph(PGLGroup(5), 2)
        assert len(hanging_tree_census(res.graph)) == 3
        assert res.central_expression == "15.T(2,2) + 10.T(2)"

    @pytest.mark.parametrize("q,t", [(4, 2), (4, 3), (5, 3), (5, 10), (7, 2), (7, 7)])
    def test_against_enumeration(self, q, t):
        assert pgl_graph(q, t).graph == brute_force_graph(PGLGroup(q), t)

    def test_p_divides_t_branch(self):
        # unipotent petals collapse into the central tree when p | t
        res = pgl_graph(5, 5)
        assert res.graph == brute_force_graph(PGLGroup(5), 5)


class TestPseudoFlower:
    def test_layout(self):
        ft = FlowerType(2, (4, 4, 4, 6))
        pf = PseudoFlower(ft)
        assert pf.size == ft.size == 12
        succ = pf.successor_table(3)
        assert len(succ) == 12
        assert ((succ >= 0) & (succ < 12)).all()
        assert succ[0] == 0  # identity is fixed

    def test_pistil_closed(self):
        ft = FlowerType(4, (8, 12))
        pf = PseudoFlower(ft)
        succ = pf.successor_table(6)
        assert (succ[: ft.pistil] < ft.pistil).all()

    def test_models_quaternion_groups(self):
        # the glued model and the real group have identical power-map graphs
        for n, t in [(2, 2), (3, 2), (3, 3), (6, 10), (5, 4)]:
            assert pseudo_flower_graph(quaternion_type(n), t) == brute_force_graph(
                QuaternionGroup(n), t
            )

    def test_models_dihedral_groups(self):
        for n, t in [(3, 2), (8, 2), (9, 3), (12, 6)]:
            ft = semidirect_type(n, 2, n - 1)
            assert pseudo_flower_graph(ft, t) == brute_force_graph(
                DihedralGroup(n), t
            )


class TestCentralTreeRules:
    def test_single_petal(self):
        tree, expr = central_tree_rules(FlowerType(2, (8,)), 2)
        assert tree == elementary_tree(iterated_gcd(8, 2))
        assert expr == "T(2,2,2)"

    def test_coprime_pistil_sums_petals(self):
        ft = FlowerType(1, (4, 4, 6))
        tree, expr = central_tree_rules(ft, 2)
        assert tree == central_tree(ft, 2)
        assert "T(" in expr

    def test_agrees_with_enumeration_when_applicable(self):
        types = [
            FlowerType(1, (2, 2, 2)),
            FlowerType(2, (4, 4, 4)),
            FlowerType(2, (4, 4, 4, 6)),
            FlowerType(1, (3, 3, 3, 3, 7)),
            FlowerType(3, (9, 9, 12)),
            FlowerType(4, (8, 8, 12)),
        ]
        checked = 0
        for ft in types:
            for t in range(1, 13):
                out = central_tree_rules(ft, t)
                if out is None:
                    continue
                checked += 1
                assert out[0] == central_tree(ft, t), (ft, t)
        assert checked > 30

    def test_quaternion_even_exponent_defeats_rules(self):
        # t = 2 mod 4: the order-4 petals can never be dropped
        for n in range(2, 9):
            for t in (2, 6, 10):
                assert central_tree_rules(quaternion_type(n), t) is None

    def test_extra_leaf_credit(self):
        # petal 4 divides t = 4, so it drops and credits 4 - 2 root leaves
        ft = FlowerType(2, (4, 8))
        tree, expr = central_tree_rules(ft, 4)
        assert tree == central_tree(ft, 4)
        assert tree.node_count == 10  # T(4,2) plus two extra leaves
        assert "<2x.>" in expr


class TestDispatch:
    @pytest.mark.parametrize(
        "spec,method",
        [
            ("cyclic:20", "cyclic"),
            ("abelian:6x12", "abelian"),
            ("units:91", "abelian"),
            ("quaternion:24", "quaternion"),
            ("pgl2:5", "pgl2"),
            ("dihedral:12", "semidirect"),
            ("semidirect:n=65,m=4,s=8", "semidirect"),
            ("pgl2:3", "flower"),
            ("dihedral:4", "flower"),
        ],
    )
    def test_method_selection(self, spec, method):
        g = parse_group(spec)
        res = structural_graph(g, 3)
        assert res is not None
        assert res.method == method
        assert res.graph == brute_force_graph(g, 3)

    def test_no_theorem(self):
        g = parse_group("semidirect:n=9,m=3,s=4")
        assert structural_graph(g, 3) is None

    def test_flower_graph_direct(self):
        res = flower_graph(quaternion_type(3), 2)
        assert res.method == "flower"
        assert res.graph == brute_force_graph(QuaternionGroup(3), 2)

    def test_central_expression_renders(self):
        res = structural_graph(parse_group("quaternion:48"), 10)
        assert res.central_tree is not None
        assert render_tree(res.central_tree)  # non-empty printable form


def test_tree_count_bound():
    # a flower of k petals shows at most k + 1 distinct hanging trees
    for spec in ["quaternion:24", "quaternion:48", "pgl2:5", "dihedral:20"]:
        g = parse_group(spec)
        res = structural_graph(g, 6)
        dec_petals = {
            "quaternion:24": 7,
            "quaternion:48": 13,
            "pgl2:5": 31,
            "dihedral:20": 11,
        }[spec]
        assert len(hanging_tree_census(res.graph)) <= dec_petals + 1
