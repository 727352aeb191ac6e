"""The sylvester congruence, ballot paths and the m-Tamari lattice.

Three routes to the same lattice are implemented: ballot paths under
rotation, the reversed suborder on sylvester-maximal m-permutations, and
the sylvester quotient of the metasylvester lattice.  A fourth picture,
chains of Dyck paths, ties ballot paths to permutation chains and supplies
the labels used to certify the isomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Union

from .chains import psi_inverse
from .errors import AlphabetError, ShapeMismatch, StabilityViolation
from .metasylvester import (
    MetasylvesterClass,
    class_of,
    enumerate_classes,
)
from .weak_order import (
    MPermutation,
    Permutation,
    coinversions,
    enumerate_mpermutations,
)

@dataclass(frozen=True, order=True)
class BallotPath:
    """A path of n N-steps and n*m E-steps staying above the slope-1/m line."""

    n: int
    m: int
    steps: str

    def __post_init__(self) -> None:
        if sorted(set(self.steps)) not in ([], ["E"], ["N"], ["E", "N"]):
            raise AlphabetError(f"steps must be over N/E: {self.steps!r}")
        if self.steps.count("N") != self.n or self.steps.count("E") != self.n * self.m:
            raise AlphabetError(
                f"expected {self.n} N and {self.n * self.m} E steps: {self.steps!r}")
        up = 0
        for s in self.steps:
            up += self.m if s == "N" else -1
            if up < 0:
                raise AlphabetError(f"path dips below the line: {self.steps!r}")


@dataclass(frozen=True, order=True)
class DyckPath:
    """A balanced u/d word whose prefixes never go negative."""

    steps: str

    def __post_init__(self) -> None:
        up = 0
        for s in self.steps:
            if s == "u":
                up += 1
            elif s == "d":
                up -= 1
            else:
                raise AlphabetError(f"steps must be over u/d: {self.steps!r}")
            if up < 0:
                raise AlphabetError(f"unbalanced prefix: {self.steps!r}")
        if up != 0:
            raise AlphabetError(f"path does not return to zero: {self.steps!r}")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2


@dataclass(frozen=True)
class DyckChain:
    """m Dyck paths of semilength n, componentwise Tamari comparable."""

    n: int
    m: int
    paths: tuple[DyckPath, ...]

    def __post_init__(self) -> None:
        if len(self.paths) != self.m:
            raise ShapeMismatch(f"expected {self.m} paths, got {len(self.paths)}")
        if any(p.semilength != self.n for p in self.paths):
            raise ShapeMismatch("all paths must have semilength n")

    def to_list(self) -> list[str]:
        return [p.steps for p in self.paths]


@dataclass(frozen=True)
class BinaryTree:
    """An unlabeled binary tree; the sylvester class shape of a word."""

    left: Optional["BinaryTree"]
    right: Optional["BinaryTree"]


# ---------------------------------------------------------------------------
# sylvester congruence

def sylv_neighbors(sigma: MPermutation) -> set[MPermutation]:
    """One sylvester rewriting: swap adjacent a, c (a <= b < c, b later)."""
    w = sigma.word
    out = set()
    for k in range(len(w) - 1):
        x, y = w[k], w[k + 1]
        if x == y:
            continue
        a, c = min(x, y), max(x, y)
        if any(a <= b < c for b in w[k + 2:]):
            out.add(MPermutation(sigma.n, sigma.m, w[:k] + (y, x) + w[k + 2:]))
    return out


def sylv_class(sigma: MPermutation) -> set[MPermutation]:
    seen = {sigma}
    frontier = [sigma]
    while frontier:
        nxt = []
        for tau in frontier:
            for nb in sylv_neighbors(tau):
                if nb not in seen:
                    seen.add(nb)
                    nxt.append(nb)
        frontier = nxt
    return seen


def is_sylv_maximal(sigma: MPermutation) -> bool:
    """No increasing sylvester rewriting applies."""
    w = sigma.word
    for k in range(len(w) - 1):
        if w[k] < w[k + 1] and any(w[k] <= b < w[k + 1] for b in w[k + 2:]):
            return False
    return True


def sylv_maxclass(sigma: MPermutation) -> MPermutation:
    cls = sylv_class(sigma)
    best = max(cls, key=lambda t: (len(coinversions(t).pairs), t.word))
    if not is_sylv_maximal(best):
        raise StabilityViolation(f"class of {sigma.word} has no maximal element")
    return best


# ---------------------------------------------------------------------------
# binary search tree insertion

def bst_insert(word: Union[MPermutation, Permutation, tuple[int, ...]]) -> BinaryTree:
    """Shape of the search tree built by right-to-left insertion.

    Keys less than or equal to a node descend to the right, larger keys to
    the left, so the increasing word yields the right comb.  The shape is
    constant on sylvester classes.
    """
    if isinstance(word, (MPermutation, Permutation)):
        word = word.word
    root: Optional[list] = None  # mutable [key, left, right]

    def insert(node, key):
        if node is None:
            return [key, None, None]
        if key <= node[0]:
            node[2] = insert(node[2], key)
        else:
            node[1] = insert(node[1], key)
        return node

    for key in reversed(word):
        root = insert(root, key)

    def freeze(node) -> Optional[BinaryTree]:
        if node is None:
            return None
        return BinaryTree(freeze(node[1]), freeze(node[2]))

    out = freeze(root)
    assert out is not None
    return out


# In-order emission: left subtree, up, right subtree, down.  This reading
# makes the chain of a class equal the split of its ballot path, which is
# what certifies the lattice isomorphisms below.  "mirror" swaps children.
DYCK_CONVENTION = "inorder"


def dyck_of_binary_tree(tree: Optional[BinaryTree],
                        convention: Optional[str] = None) -> DyckPath:
    """Dyck path of a binary tree; the flag picks the mirror image."""
    conv = convention or DYCK_CONVENTION
    if conv not in ("inorder", "mirror"):
        raise AlphabetError(f"unknown convention {conv!r}")

    def emit(node: Optional[BinaryTree]) -> str:
        if node is None:
            return ""
        first, second = ((node.left, node.right) if conv == "inorder"
                         else (node.right, node.left))
        return emit(first) + "u" + emit(second) + "d"

    return DyckPath(emit(tree))


def dyck_chain_of_class(cls: MetasylvesterClass) -> DyckChain:
    """Map each chain slot through BST insertion to a Dyck path.

    Slot 1 of the result is the image of the lowest chain entry.
    """
    chain = psi_inverse(cls)
    paths = tuple(dyck_of_binary_tree(bst_insert(p)) for p in chain.perms)
    return DyckChain(cls.n, cls.m, paths)


# ---------------------------------------------------------------------------
# ballot paths and rotation

def enumerate_ballot_paths(n: int, m: int) -> Iterator[BallotPath]:
    """All m-ballot paths of size n, lexicographic with E < N."""
    total_n, total_e = n, n * m

    def rec(prefix: list[str], up: int, left_n: int, left_e: int) -> Iterator[BallotPath]:
        if left_n == 0 and left_e == 0:
            yield BallotPath(n, m, "".join(prefix))
            return
        if left_e and up >= 1:
            prefix.append("E")
            yield from rec(prefix, up - 1, left_n, left_e - 1)
            prefix.pop()
        if left_n:
            prefix.append("N")
            yield from rec(prefix, up + m, left_n - 1, left_e)
            prefix.pop()

    yield from rec([], 0, total_n, total_e)


def _primitive_excursion_end(steps: str, start: int, m: int) -> int:
    """End index (exclusive) of the shortest factor from start back to the line."""
    dn = de = 0
    for j in range(start, len(steps)):
        if steps[j] == "N":
            dn += 1
        else:
            de += 1
        if de == m * dn:
            return j + 1
    raise StabilityViolation(f"no excursion closes at {start} in {steps!r}")


def rotation_covers(path: BallotPath) -> set[BallotPath]:
    """Swap each E-step with the primitive excursion that follows it."""
    s = path.steps
    out = set()
    for k in range(len(s) - 1):
        if s[k] == "E" and s[k + 1] == "N":
            end = _primitive_excursion_end(s, k + 1, path.m)
            out.add(BallotPath(path.n, path.m,
                               s[:k] + s[k + 1:end] + "E" + s[end:]))
    return out


def dyck_rotation_covers(path: DyckPath) -> set[DyckPath]:
    """Tamari covers on Dyck paths (the m = 1 rotation, u = N, d = E)."""
    as_ballot = BallotPath(path.semilength, 1,
                           path.steps.replace("u", "N").replace("d", "E"))
    return {DyckPath(p.steps.replace("N", "u").replace("E", "d"))
            for p in rotation_covers(as_ballot)}


@lru_cache(maxsize=None)
def _tamari_leq_table(n: int) -> dict[str, frozenset[str]]:
    """steps -> all Tamari-greater-or-equal step words, for semilength n."""
    paths = [DyckPath(p.steps.replace("N", "u").replace("E", "d"))
             for p in enumerate_ballot_paths(n, 1)]
    above: dict[str, set[str]] = {p.steps: {p.steps} for p in paths}
    covers = {p.steps: dyck_rotation_covers(p) for p in paths}
    changed = True
    while changed:
        changed = False
        for p in paths:
            acc = above[p.steps]
            before = len(acc)
            for q in covers[p.steps]:
                acc |= above[q.steps]
            changed = changed or len(acc) != before
    return {k: frozenset(v) for k, v in above.items()}


def tamari_leq(p: DyckPath, q: DyckPath) -> bool:
    if p.semilength != q.semilength:
        raise ShapeMismatch("semilengths differ")
    return q.steps in _tamari_leq_table(p.semilength)[p.steps]


def dyck_chain_leq(c1: DyckChain, c2: DyckChain) -> bool:
    if (c1.n, c1.m) != (c2.n, c2.m):
        raise ShapeMismatch("shapes differ")
    return all(tamari_leq(p, q) for p, q in zip(c1.paths, c2.paths))


def split_ballot_path(path: BallotPath) -> DyckChain:
    """Split an m-ballot path into m Dyck paths of semilength n.

    Each N-step becomes m up steps (copy k feeding output path k), each
    E-step one down step routed to the path of its matching up step.
    """
    m = path.m
    buckets: list[list[str]] = [[] for _ in range(m)]
    stack: list[int] = []  # copy index of each open up step
    for s in path.steps:
        if s == "N":
            for k in range(m):
                buckets[k].append("u")
                stack.append(k)
        else:
            k = stack.pop()
            buckets[k].append("d")
    paths = tuple(DyckPath("".join(b)) for b in buckets)
    return DyckChain(path.n, path.m, paths)


# ---------------------------------------------------------------------------
# helpers shared with the lattice construction

def sylvester_maximal_mpermutations(n: int, m: int) -> list[MPermutation]:
    return [s for s in enumerate_mpermutations(n, m) if is_sylv_maximal(s)]


def sylvester_groups(n: int, m: int) -> dict[MPermutation, list[MetasylvesterClass]]:
    """Metasylvester classes grouped under their sylvester-maximal element."""
    groups: dict[MPermutation, list[MetasylvesterClass]] = {}
    for cls in enumerate_classes(n, m):
        groups.setdefault(sylv_maxclass(cls.canonical), []).append(cls)
    return groups


def mperm_of_string(s: str, n: int, m: int) -> MPermutation:
    return MPermutation(n, m, tuple(int(c) for c in s))


# ---------------------------------------------------------------------------
# the m-Tamari lattice, three ways

@dataclass(frozen=True)
class MTamariRealizations:
    """The three diagrams plus explicit label-to-label isomorphisms."""

    ballot: "LatticeDiagram"
    maxperm: "LatticeDiagram"
    quotient: "LatticeDiagram"
    ballot_to_maxperm: dict[str, str]
    maxperm_to_quotient: dict[str, str]


def _chain_label(chain: DyckChain) -> str:
    return "|".join(chain.to_list())


def mtamari_lattice(n: int, m: int, max_nm: int = 9) -> MTamariRealizations:
    """Build the m-Tamari lattice as ballot paths, maximal words and quotient.

    All three diagrams are oriented the m-Tamari way: the weak-order
    minimum of the maximal words sits at the top.
    """
    from .diagram import LatticeDiagram, diagram_from_covers, diagram_from_leq, word_label
    from .errors import SizeLimit

    if n * m > max_nm:
        raise SizeLimit(f"n*m = {n * m} exceeds the cap {max_nm}")

    ballot = diagram_from_covers(
        "mtamari", enumerate_ballot_paths(n, m),
        lambda p: p.steps, rotation_covers)

    from .weak_order import weak_leq
    maxima = sylvester_maximal_mpermutations(n, m)
    maxperm = diagram_from_leq(
        "mtamari", maxima, word_label,
        lambda s, t: weak_leq(t, s))

    from .metasylvester import meta_leq
    groups = sylvester_groups(n, m)
    group_items = sorted(groups.items(), key=lambda kv: word_label(kv[0]))

    def group_leq(g1, g2):
        # m-Tamari orientation: reversed quotient of the metasylvester order
        return any(meta_leq(c2, c1) for c1 in g1[1] for c2 in g2[1])

    quotient = diagram_from_leq("mtamari", group_items,
                                lambda kv: word_label(kv[0]), group_leq)

    chain_of_path = {_chain_label(split_ballot_path(p)): p.steps
                     for p in enumerate_ballot_paths(n, m)}
    ballot_to_maxperm: dict[str, str] = {}
    for sigma in maxima:
        label = _chain_label(dyck_chain_of_class(class_of(sigma)))
        if label not in chain_of_path:
            raise StabilityViolation(
                f"dyck chain of {sigma.word} matches no ballot path: {label}")
        ballot_to_maxperm[chain_of_path[label]] = word_label(sigma)
    if len(ballot_to_maxperm) != len(maxima):
        raise StabilityViolation("ballot paths and maximal words do not biject")

    maxperm_to_quotient = {lab: lab for lab in maxperm.elements}
    if set(quotient.elements) != set(maxperm.elements):
        raise StabilityViolation("quotient labels differ from maximal words")

    return MTamariRealizations(ballot, maxperm, quotient,
                               ballot_to_maxperm, maxperm_to_quotient)
