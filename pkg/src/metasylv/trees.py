"""Planar decreasing (m+1)-ary trees and their bijections with classes.

Every internal node has a fixed number of child slots (the arity); empty
slots are explicit, so "the j-th subtree" is always well defined.  Labels
1..n each appear once and decrease away from the root.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import AlphabetError
from .metasylvester import TreeInversionSet, tree_inversions
from .weak_order import MPermutation


@dataclass(frozen=True)
class TreeNode:
    label: int
    children: tuple[Optional["TreeNode"], ...]


@dataclass(frozen=True)
class DecreasingTree:
    arity: int
    root: TreeNode

    def __post_init__(self) -> None:
        if self.arity < 2:
            raise AlphabetError("arity must be at least 2")
        labels = _collect_labels(self.root, self.arity)
        n = len(labels)
        if labels != set(range(1, n + 1)):
            raise AlphabetError(f"labels must be exactly 1..{n}: {sorted(labels)}")
        if self.root.label != n:
            raise AlphabetError("root must carry the largest label")

    @property
    def n(self) -> int:
        return len(_collect_labels(self.root, self.arity))

    @property
    def m(self) -> int:
        return self.arity - 1

    def to_dict(self) -> dict:
        return {"arity": self.arity, "tree": _node_to_dict(self.root)}

    @classmethod
    def from_dict(cls, data: dict) -> "DecreasingTree":
        return cls(data["arity"], _node_from_dict(data["tree"]))

    def to_dot(self) -> str:
        lines = ["digraph decreasing_tree {", "  node [shape=circle];"]
        leaf_id = [0]

        def emit(node: TreeNode) -> None:
            lines.append(f"  n{node.label} [label=\"{node.label}\"];")
            for child in node.children:
                if child is None:
                    leaf_id[0] += 1
                    lines.append(
                        f"  leaf{leaf_id[0]} [shape=point, label=\"\"];")
                    lines.append(f"  n{node.label} -> leaf{leaf_id[0]};")
                else:
                    emit(child)
                    lines.append(f"  n{node.label} -> n{child.label};")

        emit(self.root)
        lines.append("}")
        return "\n".join(lines) + "\n"


def _collect_labels(node: TreeNode, arity: int) -> set[int]:
    if len(node.children) != arity:
        raise AlphabetError(f"node {node.label} has {len(node.children)} slots, "
                            f"expected {arity}")
    labels = {node.label}
    for child in node.children:
        if child is not None:
            if child.label >= node.label:
                raise AlphabetError(
                    f"label {child.label} not below its parent {node.label}")
            labels |= _collect_labels(child, arity)
    return labels


def _node_to_dict(node: Optional[TreeNode]):
    if node is None:
        return None
    return {"label": node.label,
            "children": [_node_to_dict(c) for c in node.children]}


def _node_from_dict(data) -> Optional[TreeNode]:
    if data is None:
        return None
    return TreeNode(data["label"],
                    tuple(_node_from_dict(c) for c in data["children"]))


# ---------------------------------------------------------------------------
# bijections with m-permutations

def dt(sigma: MPermutation) -> DecreasingTree:
    """Decreasing tree of an m-permutation; constant on its class."""
    inv = tree_inversions(sigma)
    root = _build(frozenset(range(1, sigma.n + 1)), inv.triples, sigma.m)
    return DecreasingTree(sigma.m + 1, root)


def _build(labels: frozenset[int], triples, m: int) -> TreeNode:
    r = max(labels)
    groups: list[list[int]] = [[] for _ in range(m + 1)]
    for a in labels:
        if a == r:
            continue
        j = sum(1 for i in range(1, m + 1) if (a, r, i) in triples)
        groups[j].append(a)
    children = tuple(
        _build(frozenset(g), triples, m) if g else None for g in groups)
    return TreeNode(r, children)


def reading_word(tree: DecreasingTree) -> MPermutation:
    """Traverse T1, root, T2, root, ..., root, T_{m+1}."""
    word: list[int] = []

    def visit(node: Optional[TreeNode]) -> None:
        if node is None:
            return
        for idx, child in enumerate(node.children):
            if idx > 0:
                word.append(node.label)
            visit(child)

    visit(tree.root)
    return MPermutation(tree.n, tree.m, tuple(word))


def tree_inversions_of_tree(tree: DecreasingTree) -> TreeInversionSet:
    """Read tree-inversions directly off the tree.

    (a, b, i) holds when a lies in the j-th subtree of b with j > i, or
    when a is in a strictly righter subtree than b below a common node.
    """
    m = tree.m
    triples: set[tuple[int, int, int]] = set()

    def walk(node: TreeNode) -> set[int]:
        b = node.label
        child_sets = []
        for j, child in enumerate(node.children, start=1):
            labels = walk(child) if child is not None else set()
            for a in labels:
                for i in range(1, j):
                    triples.add((a, b, i))
            child_sets.append(labels)
        for j1 in range(len(child_sets)):
            for j2 in range(j1 + 1, len(child_sets)):
                for left in child_sets[j1]:
                    for right in child_sets[j2]:
                        if right < left:
                            for i in range(1, m + 1):
                                triples.add((right, left, i))
        return set().union(*child_sets, {b})

    walk(tree.root)
    return TreeInversionSet(tree.n, m, frozenset(triples))


# ---------------------------------------------------------------------------
# construction by leaf-slot insertion

def _leaf_slots(node: TreeNode) -> Iterator[tuple[int, ...]]:
    """Paths of empty slots in left-to-right traversal order."""
    for idx, child in enumerate(node.children):
        if child is None:
            yield (idx,)
        else:
            for path in _leaf_slots(child):
                yield (idx,) + path


def _insert(node: TreeNode, path: tuple[int, ...], label: int,
            arity: int) -> TreeNode:
    idx = path[0]
    if len(path) == 1:
        new_child = TreeNode(label, (None,) * arity)
    else:
        new_child = _insert(node.children[idx], path[1:], label, arity)
    children = node.children[:idx] + (new_child,) + node.children[idx + 1:]
    return TreeNode(node.label, children)


def tree_from_code(n: int, m: int, entries: tuple[int, ...]) -> DecreasingTree:
    """Build a tree by inserting n, n-1, ..., 1; label a takes slot entries[a-1].

    Slot k in left-to-right order creates exactly k tree-inversions for the
    inserted label, which makes this the code-to-tree bijection.
    """
    arity = m + 1
    root = TreeNode(n, (None,) * arity)
    for a in range(n - 1, 0, -1):
        slots = list(_leaf_slots(root))
        root = _insert(root, slots[entries[a - 1]], a, arity)
    return DecreasingTree(arity, root)


def enumerate_trees(n: int, arity: int) -> Iterator[DecreasingTree]:
    """All decreasing trees on labels 1..n with the given arity."""
    if n < 1 or arity < 2:
        raise AlphabetError("need n >= 1 and arity >= 2")
    m = arity - 1

    def rec(root: TreeNode, a: int) -> Iterator[TreeNode]:
        if a == 0:
            yield root
            return
        for path in _leaf_slots(root):
            yield from rec(_insert(root, path, a, arity), a - 1)

    for root in rec(TreeNode(n, (None,) * arity), n - 1):
        yield DecreasingTree(arity, root)
