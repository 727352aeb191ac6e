"""Chains of permutations realizing metasylvester classes.

A chain is a weakly increasing m-tuple (s(m) <= ... <= s(1)) of classical
permutations of size n whose pairwise quotients avoid the pattern 231.
Slot i of the chain carries exactly the (a, b, i) tree-inversions, which
makes the chain picture a faithful relabeling of the class lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import InvalidChain, ShapeMismatch
from .metasylvester import (
    MetasylvesterClass,
    TreeInversionSet,
    enumerate_classes,
    validate_tree_inversions,
    word_from_tree_inversions,
)
from .trees import DecreasingTree, TreeNode
from .weak_order import (
    CoCode,
    Permutation,
    coinv_of_word,
    perm_leq,
    word_from_coinv,
)


def avoids_231(p: Permutation) -> bool:
    w = p.word
    n = len(w)
    return not any(w[k] < w[i] < w[j]
                   for i in range(n)
                   for j in range(i + 1, n)
                   for k in range(j + 1, n))


def quotient_contains_231_subwords(lower: Permutation, upper: Permutation) -> bool:
    """Subword criterion for lower^-1 * upper containing 231 (lower <= upper).

    Looks for a < b < c appearing as a..b..c in lower and b..c..a in upper,
    or as a..c..b in lower and c..b..a in upper.  Used as an independent
    oracle for the composition test.
    """
    pos_l = {v: i for i, v in enumerate(lower.word)}
    pos_u = {v: i for i, v in enumerate(upper.word)}
    n = lower.n
    for a in range(1, n - 1):
        for b in range(a + 1, n):
            for c in range(b + 1, n + 1):
                if (pos_l[a] < pos_l[b] < pos_l[c]
                        and pos_u[b] < pos_u[c] < pos_u[a]):
                    return True
                if (pos_l[a] < pos_l[c] < pos_l[b]
                        and pos_u[c] < pos_u[b] < pos_u[a]):
                    return True
    return False


def is_meta_chain(perms: Sequence[Permutation]) -> bool:
    """Check both chain invariants on a candidate (s(m), ..., s(1))."""
    if not perms:
        raise ShapeMismatch("empty chain")
    n = perms[0].n
    if any(p.n != n for p in perms):
        raise ShapeMismatch("all permutations must share the same size")
    for low, high in zip(perms, perms[1:]):
        if not perm_leq(low, high):
            return False
    # perms[k] = s(m-k); for i < j the quotient s(j)^-1 s(i) must avoid 231
    for kj in range(len(perms)):
        for ki in range(kj + 1, len(perms)):
            quot = perms[kj].inverse().compose(perms[ki])
            if not avoids_231(quot):
                return False
    return True


@dataclass(frozen=True)
class MetaChain:
    """A metasylvester m-chain, stored as (s(m), s(m-1), ..., s(1))."""

    n: int
    m: int
    perms: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        if len(self.perms) != self.m:
            raise InvalidChain(f"expected {self.m} permutations, got {len(self.perms)}")
        if any(p.n != self.n for p in self.perms):
            raise InvalidChain("permutation sizes do not match n")
        if not is_meta_chain(self.perms):
            raise InvalidChain("chain invariants violated")

    def slot(self, i: int) -> Permutation:
        """The permutation s(i), 1-based from the top of the tuple order."""
        if not 1 <= i <= self.m:
            raise InvalidChain(f"slot {i} outside 1..{self.m}")
        return self.perms[self.m - i]

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m,
                "perms": [list(p.word) for p in self.perms]}

    @classmethod
    def from_dict(cls, data: dict) -> "MetaChain":
        return cls(data["n"], data["m"],
                   tuple(Permutation(tuple(w)) for w in data["perms"]))


def cinv(chain: MetaChain) -> TreeInversionSet:
    """Tree-inversions {(a, b, i) : (a, b) co-inversion of s(i)}."""
    triples = set()
    for i in range(1, chain.m + 1):
        for a, b in coinv_of_word(chain.slot(i).word):
            triples.add((a, b, i))
    return TreeInversionSet(chain.n, chain.m, frozenset(triples))


def psi(chain: MetaChain) -> MetasylvesterClass:
    """The metasylvester class whose tree-inversions are cinv(chain)."""
    inv = cinv(chain)
    if not validate_tree_inversions(inv):
        raise InvalidChain(f"cinv is not a valid tree-inversion set: {inv.to_dict()}")
    return MetasylvesterClass(word_from_tree_inversions(inv), inv)


def psi_inverse(cls: MetasylvesterClass) -> MetaChain:
    """Slice the class inversions by occurrence index and decode each slot."""
    perms = []
    for i in range(cls.m, 0, -1):
        pairs = frozenset((a, b) for (a, b, j) in cls.inversions.triples if j == i)
        perms.append(Permutation(word_from_coinv(pairs, cls.n)))
    return MetaChain(cls.n, cls.m, tuple(perms))


def chain_from_tree(tree: DecreasingTree) -> MetaChain:
    """Extract the chain by the i-th traversal of the tree.

    Slot i visits subtrees 1..i, then the node, then subtrees i+1..m+1.
    """
    m = tree.m
    perms = []
    for i in range(m, 0, -1):
        out: list[int] = []
        _traverse_slot(tree.root, i, out)
        perms.append(Permutation(tuple(out)))
    return MetaChain(tree.n, m, tuple(perms))


def _traverse_slot(node: Optional[TreeNode], i: int, out: list[int]) -> None:
    if node is None:
        return
    for j, child in enumerate(node.children, start=1):
        _traverse_slot(child, i, out)
        if j == i:
            out.append(node.label)


def chain_leq(c1: MetaChain, c2: MetaChain) -> bool:
    """Componentwise right weak order."""
    if (c1.n, c1.m) != (c2.n, c2.m):
        raise ShapeMismatch(f"shapes differ: ({c1.n},{c1.m}) vs ({c2.n},{c2.m})")
    return all(perm_leq(p, q) for p, q in zip(c1.perms, c2.perms))


def enumerate_chains(n: int, m: int) -> Iterator[MetaChain]:
    """All chains, through the class enumeration and the inverse bijection."""
    for cls in enumerate_classes(n, m):
        yield psi_inverse(cls)


def enumerate_chains_brute(n: int, m: int) -> Iterator[MetaChain]:
    """Oracle enumeration filtering all m-tuples of permutations."""
    from itertools import permutations, product

    perms = [Permutation(w) for w in permutations(range(1, n + 1))]
    for tup in product(perms, repeat=m):
        if is_meta_chain(tup):
            yield MetaChain(n, m, tup)
