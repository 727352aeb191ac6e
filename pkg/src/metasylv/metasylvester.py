"""The metasylvester congruence and the lattice on maximal class elements.

The congruence is generated by two adjacent-swap rewritings on m-permutations:

    a c ... a  ==  c a ... a           (a < c, a later occurrence of a)
    b ... a c ... b  ==  b ... c a ... b   (a < b < c)

Each class carries a unique weak-order maximum (the words avoiding the
sub-word a...b...a with a < b) and is identified by its set of
tree-inversions: triples (a, b, i) meaning every a follows the i-th b.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import CodeRangeError, ShapeMismatch, StabilityViolation
from .weak_order import (
    CoCode,
    MPermutation,
    Permutation,
    _check_shape,
    coinversions,
    destandardize,
    perm_from_cocode,
    weak_join,
    weak_leq,
    weak_meet,
)

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class TreeInversionSet:
    """Triples (a, b, i) with a < b and 1 <= i <= m identifying a class."""

    n: int
    m: int
    triples: frozenset[Triple]

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m,
                "triples": sorted([a, b, i] for (a, b, i) in self.triples)}

    @classmethod
    def from_dict(cls, data: dict) -> "TreeInversionSet":
        return cls(data["n"], data["m"],
                   frozenset((a, b, i) for a, b, i in data["triples"]))


@dataclass(frozen=True)
class TreeCode:
    """Per-letter tree-inversion counts; a bijective encoding of a class."""

    n: int
    m: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.n:
            raise CodeRangeError(f"expected {self.n} entries, got {len(self.entries)}")
        for i, v in enumerate(self.entries, start=1):
            if not 0 <= v <= (self.n - i) * self.m:
                raise CodeRangeError(
                    f"entry v_{i}={v} outside 0..{(self.n - i) * self.m}")

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "entries": list(self.entries)}


def contains_aba(word: tuple[int, ...]) -> bool:
    """True if the word has a sub-word a...b...a with a < b."""
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, v in enumerate(word):
        first.setdefault(v, pos)
        last[v] = pos
    for v in first:
        if any(word[p] > v for p in range(first[v] + 1, last[v])):
            return True
    return False


@dataclass(frozen=True)
class MetasylvesterClass:
    """A metasylvester class, held by its maximal element and inversions."""

    canonical: MPermutation
    inversions: TreeInversionSet

    def __post_init__(self) -> None:
        if contains_aba(self.canonical.word):
            raise StabilityViolation(
                f"canonical element {self.canonical.word} is not maximal")
        if tree_inversions(self.canonical) != self.inversions:
            raise StabilityViolation("inversions do not match the canonical element")

    @property
    def n(self) -> int:
        return self.canonical.n

    @property
    def m(self) -> int:
        return self.canonical.m


# ---------------------------------------------------------------------------
# rewriting

def rewrite_neighbors(sigma: MPermutation) -> set[MPermutation]:
    """All words one elementary rewriting away (either rule, either way)."""
    w = sigma.word
    out = set()
    for k in range(len(w) - 1):
        x, y = w[k], w[k + 1]
        if x == y:
            continue
        a, c = min(x, y), max(x, y)
        ok = a in w[k + 2:]
        if not ok:
            later = set(w[k + 2:])
            earlier = set(w[:k])
            ok = any(b in later and b in earlier for b in range(a + 1, c))
        if ok:
            out.add(MPermutation(sigma.n, sigma.m,
                                 w[:k] + (y, x) + w[k + 2:]))
    return out


def meta_class(sigma: MPermutation) -> set[MPermutation]:
    """The full congruence class, by closure under rewritings."""
    seen = {sigma}
    frontier = [sigma]
    while frontier:
        nxt = []
        for tau in frontier:
            for nb in rewrite_neighbors(tau):
                if nb not in seen:
                    seen.add(nb)
                    nxt.append(nb)
        frontier = nxt
    return seen


# ---------------------------------------------------------------------------
# tree-inversions

def close_triples(triples: set[Triple]) -> frozenset[Triple]:
    """Closure under (a,b,j) & (b,c,i) -> (a,c,i)."""
    by_first: dict[int, set[tuple[int, int]]] = {}
    for a, b, i in triples:
        by_first.setdefault(a, set()).add((b, i))
    changed = True
    while changed:
        changed = False
        for a, rest in by_first.items():
            new = set()
            for b, _j in rest:
                new |= by_first.get(b, set())
            if not new <= rest:
                rest |= new
                changed = True
    return frozenset((a, b, i) for a, rest in by_first.items() for b, i in rest)


def tree_inversions(sigma: MPermutation) -> TreeInversionSet:
    """Tree-inversions of any m-permutation.

    Seeded by the co-inversions of the last occurrence of each letter, then
    closed under the transitivity condition; constant on congruence classes.
    """
    seed = {(a, b, j) for (a, i, b, j) in coinversions(sigma).pairs
            if i == sigma.m}
    return TreeInversionSet(sigma.n, sigma.m, close_triples(seed))


def validate_tree_inversions(s: TreeInversionSet) -> bool:
    """The three conditions a valid set of tree-inversions must satisfy."""
    t = s.triples
    for a, b, i in t:
        if not (1 <= a < b <= s.n and 1 <= i <= s.m):
            return False
    for a, b, j in t:
        if any((a, b, i) not in t for i in range(1, j)):
            return False
    for a, b, j in t:
        for b2, c, i in t:
            if b2 == b and (a, c, i) not in t:
                return False
    for a, c, i in t:
        for b in range(a + 1, c):
            if (b, c, i) not in t and any((a, b, j) not in t
                                          for j in range(1, s.m + 1)):
                return False
    return True


def word_from_tree_inversions(s: TreeInversionSet) -> MPermutation:
    """The maximal class element whose tree-inversions are exactly s."""
    counts = [0] * s.n
    for a, _b, _i in s.triples:
        counts[a - 1] += 1
    entries = tuple(counts[a] for a in range(s.n) for _ in range(s.m))
    pi = perm_from_cocode(CoCode(entries))
    sigma = destandardize(pi, s.n, s.m)
    if tree_inversions(sigma) != s:
        raise StabilityViolation(f"invalid tree-inversion set: {sorted(s.triples)}")
    return sigma


def maxclass(sigma: MPermutation) -> MPermutation:
    """The unique weak-order maximum of the class of sigma."""
    return word_from_tree_inversions(tree_inversions(sigma))


def minclass(sigma: MPermutation) -> MPermutation:
    """The unique weak-order minimum, by scanning the whole class."""
    cls = meta_class(sigma)
    best = min(cls, key=lambda t: (len(coinversions(t).pairs), t.word))
    if not all(weak_leq(best, t) for t in cls):
        raise StabilityViolation(f"class of {sigma.word} has no unique minimum")
    return best


def class_of(sigma: MPermutation) -> MetasylvesterClass:
    """The metasylvester class containing sigma."""
    inv = tree_inversions(sigma)
    return MetasylvesterClass(word_from_tree_inversions(inv), inv)


# ---------------------------------------------------------------------------
# codes

def tree_code(cls: MetasylvesterClass) -> TreeCode:
    counts = [0] * cls.n
    for a, _b, _i in cls.inversions.triples:
        counts[a - 1] += 1
    return TreeCode(cls.n, cls.m, tuple(counts))


def from_tree_code(code: TreeCode) -> MetasylvesterClass:
    """Inverse of tree_code: expand to a co-code and decode."""
    entries = tuple(v for v in code.entries for _ in range(code.m))
    pi = perm_from_cocode(CoCode(entries))
    sigma = destandardize(pi, code.n, code.m)
    cls = class_of(sigma)
    if tree_code(cls) != code:
        raise StabilityViolation(f"code {code.entries} did not round-trip")
    return cls


def count_classes(n: int, m: int) -> int:
    """Product formula (1+m)(1+2m)...(1+(n-1)m)."""
    out = 1
    for k in range(1, n):
        out *= 1 + k * m
    return out


def enumerate_codes(n: int, m: int) -> Iterator[TreeCode]:
    entries = [0] * n

    def rec(i: int) -> Iterator[TreeCode]:
        if i == n:
            yield TreeCode(n, m, tuple(entries))
            return
        for v in range((n - i - 1) * m + 1):
            entries[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def enumerate_classes(n: int, m: int) -> Iterator[MetasylvesterClass]:
    for code in enumerate_codes(n, m):
        yield from_tree_code(code)


# ---------------------------------------------------------------------------
# lattice structure on classes

def meta_leq(c1: MetasylvesterClass, c2: MetasylvesterClass) -> bool:
    return weak_leq(c1.canonical, c2.canonical)


def _assert_max(sigma: MPermutation) -> MPermutation:
    if contains_aba(sigma.word):
        raise StabilityViolation(
            f"{sigma.word} left the set of maximal class elements")
    return sigma


def meta_join(c1: MetasylvesterClass, c2: MetasylvesterClass) -> MetasylvesterClass:
    return class_of(_assert_max(weak_join(c1.canonical, c2.canonical)))


def meta_meet(c1: MetasylvesterClass, c2: MetasylvesterClass) -> MetasylvesterClass:
    return class_of(_assert_max(weak_meet(c1.canonical, c2.canonical)))


def meta_covers(cls: MetasylvesterClass) -> set[MetasylvesterClass]:
    """Upper covers in the metasylvester lattice, read off the canonical word.

    With sigma = u a1 v am b w (a < b, the block of a immediately followed
    by b), the cover moves b in front of the block: u b a1 v am w.
    """
    w = cls.canonical.word
    first = {}
    count: dict[int, int] = {}
    for pos, v in enumerate(w):
        first.setdefault(v, pos)
        count[v] = count.get(v, 0) + 1
    m = cls.m
    seen: dict[int, int] = {}
    out = set()
    for k in range(1, len(w)):
        prev = w[k - 1]
        seen[prev] = seen.get(prev, 0) + 1
        b = w[k]
        if b > prev and seen[prev] == m:
            q = first[prev]
            mu = w[:q] + (b,) + w[q:k] + w[k + 1:]
            out.add(class_of(MPermutation(cls.n, cls.m, mu)))
    return out


def check_shape(c1: MetasylvesterClass, c2: MetasylvesterClass) -> None:
    _check_shape(c1.canonical, c2.canonical)


def mperm_standardized_chain_slice(sigma: MPermutation, i: int) -> Permutation:
    """Subword of the i-th occurrences of each letter, as a permutation."""
    seen = [0] * sigma.n
    out = []
    for v in sigma.word:
        seen[v - 1] += 1
        if seen[v - 1] == i:
            out.append(v)
    return Permutation(tuple(out))
