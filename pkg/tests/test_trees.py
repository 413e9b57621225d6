import itertools

import pytest

from schubert import (
    MarchTree,
    NodeCeilingExceeded,
    Permutation,
    TreeNode,
    build_tree,
    leaf_summary,
    signed_expansion,
    symmetric_group,
    to_dot,
    to_json,
    to_text,
    unique_labeled_leaf,
)

ID = Permutation.identity()


def parse_map(pairs: dict[str, int]) -> dict[Permutation, int]:
    return {Permutation.parse(text): value for text, value in pairs.items()}


def paths(tree: MarchTree) -> dict[tuple, Permutation | None]:
    """Map march-set addresses to labels."""
    out: dict[tuple, Permutation | None] = {}

    def walk(node: TreeNode, address: tuple) -> None:
        out[address] = node.label
        for child in node.children:
            walk(child, address + (child.march,))

    walk(tree.root, ())
    return out


class TestFigure2:
    def setup_method(self):
        self.tree = build_tree(Permutation.parse("321465"), 2, "K")

    def test_shape(self):
        root = self.tree.root
        assert root.label == Permutation.parse("321465")
        assert [c.march for c in root.children] == [(4,)]
        child = root.children[0]
        assert child.label == Permutation.parse("321546")
        assert [c.march for c in child.children] == [
            (1,),
            (2,),
            (3,),
            (1, 2),
            (1, 3),
            (2, 3),
            (1, 2, 3),
        ]
        targets = {c.march: c.label for c in child.children}
        assert targets == {
            (1,): Permutation.parse("421356"),
            (2,): Permutation.parse("341256"),
            (3,): Permutation.parse("324156"),
            (1, 2): Permutation.parse("431256"),
            (1, 3): Permutation.parse("423156"),
            (2, 3): Permutation.parse("342156"),
            (1, 2, 3): Permutation.parse("432156"),
        }

    def test_leaf_summary(self):
        summary = leaf_summary(self.tree)
        assert summary.counts == parse_map({"421356": 1, "341256": 1, "431256": 1})
        assert summary.null_count == 4
        assert summary.total() == 7

    def test_signed_expansion(self):
        assert signed_expansion(self.tree, 4) == parse_map(
            {"421356": 1, "341256": 1, "431256": -1}
        )


class TestFigure1:
    def test_shape_and_leaves(self):
        tree = build_tree(Permutation.parse("34127658"), 4, "K")
        labeled = [n for n in tree.nodes() if n.label is not None]
        assert len(labeled) == 18
        assert all(n.label is not None for n in tree.nodes())
        summary = leaf_summary(tree)
        assert summary.null_count == 0
        assert summary.counts == parse_map(
            {
                "46123578": 1,
                "36142578": 1,
                "35162478": 1,
                "34261578": 1,
                "46132578": 1,
                "36152478": 1,
                "36241578": 1,
                "35261478": 1,
                "36251478": 1,
            }
        )

    def test_example_3_signs(self):
        tree = build_tree(Permutation.parse("34127658"), 4, "K")
        expansion = signed_expansion(tree, 7)
        assert sorted(expansion.values()) == [-1, -1, -1, -1, 1, 1, 1, 1, 1]

    def test_complete_edge_structure(self):
        tree = build_tree(Permutation.parse("34127658"), 4, "K")
        edges = set()

        def walk(node):
            for child in node.children:
                edges.add((node.label, child.march, child.label))
                walk(child)

        walk(tree.root)
        expected = {
            ("34127658", (2,), "35127468"),
            ("34127658", (4,), "34157268"),
            ("34127658", (2, 4), "35147268"),
            ("35127468", (2,), "36125478"),
            ("35127468", (4,), "35162478"),
            ("35127468", (2, 4), "36152478"),
            ("34157268", (4,), "34165278"),
            ("35147268", (2,), "36145278"),
            ("35147268", (4,), "35164278"),
            ("35147268", (2, 4), "36154278"),
            ("36125478", (1,), "46123578"),
            ("36125478", (4,), "36142578"),
            ("36125478", (1, 4), "46132578"),
            ("34165278", (3,), "34261578"),
            ("36145278", (3,), "36241578"),
            ("35164278", (3,), "35261478"),
            ("36154278", (3,), "36251478"),
        }
        assert edges == {
            (Permutation.parse(a), march, Permutation.parse(b))
            for a, march, b in expected
        }


class TestBasics:
    def test_identity_is_a_single_node(self):
        tree = build_tree(ID, 3, "K")
        assert tree.root.is_leaf() and tree.root.label == ID
        summary = leaf_summary(tree)
        assert summary.counts == {ID: 1} and summary.null_count == 0
        assert signed_expansion(tree, 0) == {ID: 1}

    def test_leaf_descent_split(self):
        for beta in symmetric_group(4):
            for t in (1, 2, 3):
                for node in build_tree(beta, t, "K").nodes():
                    if node.label is None:
                        assert node.is_leaf()
                    elif node.is_leaf():
                        assert (node.label.last_descent() or 0) <= t
                    else:
                        assert node.label.last_descent() > t

    def test_cohomology_children_are_single_marches(self):
        tree = build_tree(Permutation.parse("321465"), 2, "cohomology")
        for node in tree.nodes():
            for child in node.children:
                assert len(child.march) <= 1

    def test_node_ceiling(self):
        with pytest.raises(NodeCeilingExceeded):
            build_tree(Permutation.parse("34127658"), 4, "K", node_ceiling=5)

    def test_mode_and_level_validation(self):
        with pytest.raises(ValueError):
            build_tree(ID, 0, "K")
        with pytest.raises(ValueError):
            build_tree(ID, 1, "quantum")


class TestPruning:
    def test_larger_level_tree_embeds_in_smaller(self):
        # Raising t prunes the tree: every vertex of the level-s tree
        # appears at the same march address, with the same label, in the
        # level-t tree for t <= s.
        for beta in symmetric_group(4):
            for t, s in itertools.combinations_with_replacement((1, 2, 3), 2):
                small = paths(build_tree(beta, s, "K"))
                big = paths(build_tree(beta, t, "K"))
                for address, label in small.items():
                    assert address in big
                    assert big[address] == label


class TestSingleLeafFamilies:
    def test_vexillary_bound_on_s5(self):
        for beta in symmetric_group(5):
            if not beta.is_vexillary():
                continue
            for s in (1, 2, 3, 4):
                summary = leaf_summary(build_tree(beta, s, "K"))
                assert sum(summary.counts.values()) <= 1

    def test_grassmannian_stabilization_on_s4(self):
        for pi in symmetric_group(4):
            s = pi.grassmannian_descent()
            if s is None:
                continue
            for n in range(5):
                summary = leaf_summary(build_tree(pi.stabilize(n), s, "K"))
                assert summary.counts == {pi: 1}

    def test_unique_labeled_leaf_examples(self):
        assert unique_labeled_leaf(Permutation.parse("3214"), 4, 4) == Permutation.parse(
            "12463578"
        )
        assert unique_labeled_leaf(ID, 2, 3) == ID
        assert unique_labeled_leaf(Permutation.parse("132"), 2, 3) == Permutation.parse("132")

    def test_unique_labeled_leaf_rejects_oversized_window(self):
        with pytest.raises(ValueError):
            unique_labeled_leaf(Permutation.parse("2143"), 2, 3)

    def test_unique_labeled_leaf_none_when_multiple(self):
        # 2143 is the minimal non-vexillary window; its stabilized K tree
        # has three labeled leaves at level 2.
        assert unique_labeled_leaf(Permutation.parse("2143"), 2, 4) is None


class TestSerialization:
    def test_deterministic_across_builds(self):
        a = build_tree(Permutation.parse("321465"), 2, "K")
        b = build_tree(Permutation.parse("321465"), 2, "K")
        assert to_dot(a) == to_dot(b)
        assert to_json(a) == to_json(b)
        assert to_text(a) == to_text(b)

    def test_dot_snapshot(self):
        tree = build_tree(Permutation.parse("321546"), 2, "K", node_ceiling=100)
        dot = to_dot(tree)
        assert dot.startswith("digraph march_tree {")
        assert 'n0 [label="32154"];' in dot
        assert 'n0 -> n1 [label="1"];' in dot
        assert dot.count("∅") == 4

    def test_json_shape(self):
        import json

        tree = build_tree(Permutation.parse("132"), 1, "K")
        obj = json.loads(to_json(tree))
        assert obj["label"] == "132"
        assert obj["march"] == []
        assert obj["children"][0]["label"] == "21"
        assert obj["children"][0]["march"] == [1]

    def test_text_snapshot(self):
        tree = build_tree(Permutation.parse("132"), 1, "K")
        assert to_text(tree) == "132\n  --1--> 21"

    def test_full_dot_snapshot(self):
        tree = build_tree(Permutation.parse("132"), 1, "K")
        assert to_dot(tree) == (
            "digraph march_tree {\n"
            '  n0 [label="132"];\n'
            '  n0 -> n1 [label="1"];\n'
            '  n1 [label="21"];\n'
            "}"
        )

    def test_null_leaf_serialization(self):
        tree = build_tree(Permutation.parse("231"), 1, "K")
        assert to_text(tree) == "231\n  ----> ∅"
        assert '[label="∅"]' in to_dot(tree)
        import json

        obj = json.loads(to_json(tree))
        assert obj["children"][0]["label"] is None
        assert obj["children"][0]["march"] == []
