import math

import pytest

from metasylv.errors import AlphabetError
from metasylv.metasylvester import (
    enumerate_classes,
    tree_code,
    tree_inversions,
)
from metasylv.trees import (
    DecreasingTree,
    TreeNode,
    dt,
    enumerate_trees,
    reading_word,
    tree_from_code,
    tree_inversions_of_tree,
)
from metasylv.weak_order import MPermutation


def mp(s: str, n: int, m: int) -> MPermutation:
    return MPermutation(n, m, tuple(int(c) for c in s))


EXAMPLE_TREE = {"arity": 3, "tree": {"label": 6, "children": [
    {"label": 3, "children": [None, None,
                              {"label": 1, "children": [None, None, None]}]},
    {"label": 2, "children": [None, None, None]},
    {"label": 5, "children": [None,
                              {"label": 4, "children": [None, None, None]},
                              None]}]}}


class TestDt:
    def test_maximal_word(self):
        assert dt(mp("331162265445", 6, 2)).to_dict() == EXAMPLE_TREE

    def test_any_class_member(self):
        assert dt(mp("133126245465", 6, 2)).to_dict() == EXAMPLE_TREE

    def test_single_node(self):
        tree = dt(mp("1", 1, 1))
        assert tree.root == TreeNode(1, (None, None))


class TestReadingWord:
    def test_example_tree_reading(self):
        assert reading_word(DecreasingTree.from_dict(EXAMPLE_TREE)) == \
            mp("331162265445", 6, 2)

    def test_single_node(self):
        tree = DecreasingTree(3, TreeNode(1, (None, None, None)))
        assert reading_word(tree) == mp("11", 1, 2)

    def test_large_example_tree(self):
        word = "555592222444333349881111866668997777"
        sigma = mp(word, 9, 4)
        assert reading_word(dt(sigma)) == sigma


class TestTreeInversionsOfTree:
    def test_example_tree_membership(self):
        got = tree_inversions_of_tree(DecreasingTree.from_dict(EXAMPLE_TREE)).triples
        assert {(4, 5, 1), (2, 3, 1), (2, 3, 2)} <= got
        assert (1, 2, 1) not in got and (1, 2, 2) not in got

    def test_first_slot_comb_sorted(self):
        comb = TreeNode(3, (TreeNode(2, (TreeNode(1, (None,) * 3),
                                         None, None)), None, None))
        got = tree_inversions_of_tree(DecreasingTree(3, comb))
        assert got.triples == frozenset()

    def test_example_tree_total(self):
        got = tree_inversions_of_tree(DecreasingTree.from_dict(EXAMPLE_TREE))
        assert len(got.triples) == 2 + 3 + 0 + 3 + 2 + 0

    def test_agrees_through_reading_word(self):
        for cls in enumerate_classes(3, 2):
            tree = dt(cls.canonical)
            assert tree_inversions_of_tree(tree) == tree_inversions(cls.canonical)


class TestEnumeration:
    def test_3_2_count(self):
        assert sum(1 for _ in enumerate_trees(3, 3)) == 15

    def test_single(self):
        assert sum(1 for _ in enumerate_trees(1, 5)) == 1

    def test_binary_factorial(self):
        assert sum(1 for _ in enumerate_trees(4, 2)) == math.factorial(4)


class TestRoundtrips:
    def test_dt_reading_word_identity(self):
        for n, m in [(3, 2), (2, 3), (4, 1)]:
            for tree in enumerate_trees(n, m + 1):
                assert dt(reading_word(tree)) == tree

    def test_reading_word_dt_is_maxclass(self):
        for cls in enumerate_classes(3, 2):
            assert reading_word(dt(cls.canonical)) == cls.canonical

    def test_tree_from_code_matches_decode(self):
        # the insertion route and the co-code decode route must agree
        for cls in enumerate_classes(3, 2):
            code = tree_code(cls)
            assert tree_from_code(3, 2, code.entries) == dt(cls.canonical)

    def test_tree_from_code_larger(self):
        for cls in enumerate_classes(2, 4):
            code = tree_code(cls)
            assert tree_from_code(2, 4, code.entries) == dt(cls.canonical)


class TestValidation:
    def test_label_gap(self):
        with pytest.raises(AlphabetError):
            DecreasingTree(2, TreeNode(3, (TreeNode(1, (None, None)), None)))

    def test_increasing_child(self):
        with pytest.raises(AlphabetError):
            DecreasingTree(2, TreeNode(1, (TreeNode(2, (None, None)), None)))

    def test_wrong_arity(self):
        with pytest.raises(AlphabetError):
            DecreasingTree(3, TreeNode(1, (None, None)))

    def test_dot_export_mentions_every_label(self):
        dot = DecreasingTree.from_dict(EXAMPLE_TREE).to_dot()
        for label in "123456":
            assert f"n{label}" in dot
