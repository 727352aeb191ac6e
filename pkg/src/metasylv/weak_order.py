"""m-permutations and the right weak order on them.

An m-permutation of size n is a shuffle of the multiset {1^m, ..., n^m}.
Standardization embeds them as a lower ideal of the right weak order on
permutations of size n*m, which makes meet and join available.  All order
computations go through co-inversion sets: sets of pairs (a, b) with a < b
such that b appears before a.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import AlphabetError, MultiplicityError, ShapeMismatch, StabilityViolation

Word = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    """A classical permutation of {1..n}, stored as its one-line word."""

    word: Word

    def __post_init__(self) -> None:
        n = len(self.word)
        if sorted(self.word) != list(range(1, n + 1)):
            raise AlphabetError(f"not a permutation of 1..{n}: {self.word}")

    @property
    def n(self) -> int:
        return len(self.word)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, v in enumerate(self.word):
            inv[v - 1] = pos + 1
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self * other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ShapeMismatch("composition needs equal sizes")
        return Permutation(tuple(self.word[v - 1] for v in other.word))

    def to_dict(self) -> dict:
        return {"n": self.n, "word": list(self.word)}


@dataclass(frozen=True, order=True)
class MPermutation:
    """A permutation of the multiset 1^m ... n^m."""

    n: int
    m: int
    word: Word

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise AlphabetError("n and m must be positive")
        if any(not 1 <= v <= self.n for v in self.word):
            raise AlphabetError(f"letters outside 1..{self.n}: {self.word}")
        counts = [0] * self.n
        for v in self.word:
            counts[v - 1] += 1
        if any(c != self.m for c in counts):
            raise MultiplicityError(
                f"each letter must occur exactly {self.m} times: {self.word}"
            )

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "word": list(self.word)}

    @classmethod
    def from_dict(cls, data: dict) -> "MPermutation":
        return make_mpermutation(data["word"], data["n"], data["m"])


@dataclass(frozen=True)
class CoInversionSet:
    """Occurrence-level co-inversions of an m-permutation.

    A member (a, i, b, j) with a < b means the j-th b precedes the i-th a.
    """

    n: int
    m: int
    pairs: frozenset[tuple[int, int, int, int]]

    def to_list(self) -> list[list[int]]:
        return sorted([a, i, b, j] for (a, i, b, j) in self.pairs)


@dataclass(frozen=True)
class CoCode:
    """Per-letter co-inversion counts of a classical permutation."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for i, v in enumerate(self.entries, start=1):
            if not 0 <= v <= n - i:
                raise AlphabetError(f"entry v_{i}={v} out of range 0..{n - i}")


def make_mpermutation(word, n: int, m: int) -> MPermutation:
    """Validate a letter sequence as an m-permutation."""
    word = tuple(int(v) for v in word)
    if len(word) != n * m:
        raise MultiplicityError(f"word length {len(word)} != n*m = {n * m}")
    return MPermutation(n, m, word)


def mperm_from_string(s: str) -> MPermutation:
    """Parse a word of single-digit letters, inferring n and m."""
    word = tuple(int(c) for c in s)
    n = max(word)
    m = len(word) // n
    return make_mpermutation(word, n, m)


# ---------------------------------------------------------------------------
# classical co-inversion calculus

def coinv_of_word(word: Word) -> frozenset[tuple[int, int]]:
    """Pairs (a, b), a < b, with b before a in the word."""
    out = set()
    for p, b in enumerate(word):
        for a in word[p + 1:]:
            if a < b:
                out.add((a, b))
    return frozenset(out)


def close_coinv(pairs: set[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    """Transitive closure under (a,b),(b,c) -> (a,c)."""
    succ: dict[int, set[int]] = {}
    for a, b in pairs:
        succ.setdefault(a, set()).add(b)
    changed = True
    while changed:
        changed = False
        for a, bs in succ.items():
            new = set()
            for b in bs:
                new |= succ.get(b, set())
            if not new <= bs:
                bs |= new
                changed = True
    return frozenset((a, b) for a, bs in succ.items() for b in bs)


def is_coinv_set(pairs: frozenset[tuple[int, int]], n: int) -> bool:
    """Check the two defining conditions of a co-inversion set."""
    for a, b in pairs:
        for b2, c in pairs:
            if b2 == b and (a, c) not in pairs and a < c:
                return False
    for a, c in pairs:
        for b in range(a + 1, c):
            if (a, b) not in pairs and (b, c) not in pairs:
                return False
    return True


def cocode(pi: Permutation) -> CoCode:
    """The vector v with v_i = number of co-inversions (i, *)."""
    counts = [0] * pi.n
    for a, _b in coinv_of_word(pi.word):
        counts[a - 1] += 1
    return CoCode(tuple(counts))


def perm_from_cocode(code: CoCode) -> Permutation:
    """Decode a co-code by inserting letters n, n-1, ..., 1.

    When letter a is inserted, the word contains only larger letters, so
    placing it at index v_a puts exactly v_a larger letters before it.
    """
    n = len(code.entries)
    word: list[int] = []
    for a in range(n, 0, -1):
        word.insert(code.entries[a - 1], a)
    return Permutation(tuple(word))


def word_from_coinv(pairs: frozenset[tuple[int, int]], n: int) -> Word:
    counts = [0] * n
    for a, _b in pairs:
        counts[a - 1] += 1
    word = perm_from_cocode(CoCode(tuple(counts))).word
    if coinv_of_word(word) != pairs:
        raise StabilityViolation(f"not a valid co-inversion set: {sorted(pairs)}")
    return word


def perm_leq(p: Permutation, q: Permutation) -> bool:
    """Right weak order on classical permutations."""
    if p.n != q.n:
        raise ShapeMismatch(f"sizes differ: {p.n} vs {q.n}")
    return coinv_of_word(p.word) <= coinv_of_word(q.word)


def _join_words(w1: Word, w2: Word) -> Word:
    return word_from_coinv(close_coinv(set(coinv_of_word(w1)) | set(coinv_of_word(w2))),
                           len(w1))


def _complement(word: Word) -> Word:
    n = len(word)
    return tuple(n + 1 - v for v in word)


def _meet_words(w1: Word, w2: Word) -> Word:
    # The complement is an order-reversing involution, so the meet is the
    # complemented join of the complements.
    return _complement(_join_words(_complement(w1), _complement(w2)))


def perm_join(p: Permutation, q: Permutation) -> Permutation:
    if p.n != q.n:
        raise ShapeMismatch(f"sizes differ: {p.n} vs {q.n}")
    return Permutation(_join_words(p.word, q.word))


def perm_meet(p: Permutation, q: Permutation) -> Permutation:
    if p.n != q.n:
        raise ShapeMismatch(f"sizes differ: {p.n} vs {q.n}")
    return Permutation(_meet_words(p.word, q.word))


# ---------------------------------------------------------------------------
# m-permutation layer

def standardize(sigma: MPermutation) -> Permutation:
    """Map the i-th occurrence of letter v to (v-1)*m + i."""
    seen = [0] * sigma.n
    out = []
    for v in sigma.word:
        seen[v - 1] += 1
        out.append((v - 1) * sigma.m + seen[v - 1])
    return Permutation(tuple(out))


def destandardize(pi: Permutation, n: int, m: int) -> MPermutation:
    """Inverse of standardize on the ideal of m-permutations."""
    word = tuple((v - 1) // m + 1 for v in pi.word)
    mperm = make_mpermutation(word, n, m)
    if standardize(mperm) != pi:
        raise StabilityViolation(f"{pi.word} is not the standardization of an m-permutation")
    return mperm


def coinversions(sigma: MPermutation) -> CoInversionSet:
    """All occurrence pairs (a, i, b, j): the j-th b precedes the i-th a."""
    seen = [0] * sigma.n
    placed: list[tuple[int, int]] = []
    pairs = set()
    for v in sigma.word:
        seen[v - 1] += 1
        i = seen[v - 1]
        for b, j in placed:
            if b > v:
                pairs.add((v, i, b, j))
        placed.append((v, i))
    return CoInversionSet(sigma.n, sigma.m, frozenset(pairs))


def validate_coinversions(cs: CoInversionSet) -> bool:
    """Check transitivity, betweenness and occurrence monotonicity."""
    pairs = cs.pairs
    by_ab = {}
    for a, i, b, j in pairs:
        by_ab.setdefault((a, b), set()).add((i, j))
    # occurrence monotonicity
    for a, i, b, j in pairs:
        for k in range(i + 1, cs.m + 1):
            if (a, k, b, j) not in pairs:
                return False
    # transitivity and betweenness on the standardized letters
    std_pairs = frozenset(((a - 1) * cs.m + i, (b - 1) * cs.m + j)
                          for a, i, b, j in pairs)
    return is_coinv_set(std_pairs, cs.n * cs.m)


def weak_leq(sigma: MPermutation, mu: MPermutation) -> bool:
    """True iff the co-inversions of sigma are contained in those of mu."""
    _check_shape(sigma, mu)
    return coinversions(sigma).pairs <= coinversions(mu).pairs


def weak_join(sigma: MPermutation, mu: MPermutation) -> MPermutation:
    _check_shape(sigma, mu)
    joined = _join_words(standardize(sigma).word, standardize(mu).word)
    return destandardize(Permutation(joined), sigma.n, sigma.m)


def weak_meet(sigma: MPermutation, mu: MPermutation) -> MPermutation:
    _check_shape(sigma, mu)
    met = _meet_words(standardize(sigma).word, standardize(mu).word)
    return destandardize(Permutation(met), sigma.n, sigma.m)


def weak_covers(sigma: MPermutation) -> set[MPermutation]:
    """Upper covers: swap adjacent positions k, k+1 with word[k] < word[k+1]."""
    out = set()
    w = sigma.word
    for k in range(len(w) - 1):
        if w[k] < w[k + 1]:
            out.add(MPermutation(sigma.n, sigma.m,
                                 w[:k] + (w[k + 1], w[k]) + w[k + 2:]))
    return out


def enumerate_mpermutations(n: int, m: int) -> Iterator[MPermutation]:
    """All m-permutations of size n in lexicographic order of the word."""
    counts = [m] * n
    word: list[int] = []
    total = n * m

    def rec() -> Iterator[MPermutation]:
        if len(word) == total:
            yield MPermutation(n, m, tuple(word))
            return
        for v in range(1, n + 1):
            if counts[v - 1]:
                counts[v - 1] -= 1
                word.append(v)
                yield from rec()
                word.pop()
                counts[v - 1] += 1

    yield from rec()


def count_mpermutations(n: int, m: int) -> int:
    from math import factorial
    return factorial(n * m) // factorial(m) ** n


def _check_shape(sigma: MPermutation, mu: MPermutation) -> None:
    if (sigma.n, sigma.m) != (mu.n, mu.m):
        raise ShapeMismatch(
            f"shapes differ: ({sigma.n},{sigma.m}) vs ({mu.n},{mu.m})")
