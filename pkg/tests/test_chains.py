import pytest

from metasylv.chains import (
    MetaChain,
    avoids_231,
    chain_from_tree,
    chain_leq,
    cinv,
    enumerate_chains,
    enumerate_chains_brute,
    is_meta_chain,
    psi,
    psi_inverse,
    quotient_contains_231_subwords,
)
from metasylv.errors import InvalidChain
from metasylv.metasylvester import (
    class_of,
    count_classes,
    enumerate_classes,
    meta_leq,
    mperm_standardized_chain_slice,
    validate_tree_inversions,
)
from metasylv.trees import dt
from metasylv.weak_order import MPermutation, Permutation


def mp(s: str, n: int, m: int) -> MPermutation:
    return MPermutation(n, m, tuple(int(c) for c in s))


def chain(*words: tuple[int, ...]) -> MetaChain:
    n = len(words[0])
    return MetaChain(n, len(words), tuple(Permutation(w) for w in words))


class TestChainValidity:
    def test_valid_pair(self):
        assert is_meta_chain((Permutation((2, 1, 3)), Permutation((2, 3, 1))))

    def test_excluded_pair(self):
        assert not is_meta_chain((Permutation((1, 2, 3)), Permutation((2, 3, 1))))

    def test_constant_chain(self):
        s = Permutation((3, 1, 2))
        assert is_meta_chain((s, s, s))

    def test_invalid_chain_raises(self):
        with pytest.raises(InvalidChain):
            chain((1, 2, 3), (2, 3, 1))


class TestCinv:
    def test_worked_example(self):
        got = cinv(chain((2, 1, 3), (2, 3, 1)))
        assert got.triples == {(1, 2, 1), (1, 3, 1), (1, 2, 2)}

    def test_identity_chain(self):
        ident = Permutation((1, 2, 3))
        assert cinv(chain(ident.word, ident.word)).triples == frozenset()

    def test_large_example_chain_matches_tree(self):
        word = mp("555592222444333349881111866668997777", 9, 4)
        cls = class_of(word)
        assert cinv(psi_inverse(cls)) == cls.inversions

    def test_always_valid(self):
        for cls in enumerate_classes(3, 2):
            assert validate_tree_inversions(cinv(psi_inverse(cls)))


class TestPsi:
    def test_worked_example(self):
        assert psi(chain((2, 1, 3), (2, 3, 1))).canonical == mp("223113", 3, 2)

    def test_sorted_class(self):
        got = psi_inverse(class_of(mp("112233", 3, 2)))
        assert all(p.word == (1, 2, 3) for p in got.perms)

    def test_large_example_column(self):
        cls = class_of(mp("555592222444333349881111866668997777", 9, 4))
        got = psi_inverse(cls)
        # displayed top line is slot m, bottom line is slot 1
        assert got.perms == (Permutation((5, 2, 3, 4, 1, 6, 8, 9, 7)),
                             Permutation((5, 2, 4, 3, 1, 8, 6, 9, 7)),
                             Permutation((5, 2, 4, 3, 9, 8, 1, 6, 7)),
                             Permutation((5, 9, 2, 4, 3, 8, 1, 6, 7)))

    def test_mutually_inverse(self):
        for cls in enumerate_classes(3, 2):
            assert psi(psi_inverse(cls)).canonical == cls.canonical

    def test_slot_subword_identity(self):
        for cls in enumerate_classes(3, 2):
            c = psi_inverse(cls)
            for i in range(1, 3):
                assert c.slot(i) == \
                    mperm_standardized_chain_slice(cls.canonical, i)


class TestChainFromTree:
    def test_large_example_slot1(self):
        tree = dt(mp("555592222444333349881111866668997777", 9, 4))
        got = chain_from_tree(tree)
        assert got.slot(1).word == (5, 9, 2, 4, 3, 8, 1, 6, 7)

    def test_single_node(self):
        tree = dt(mp("111", 1, 3))
        assert all(p.word == (1,) for p in chain_from_tree(tree).perms)

    def test_example_tree_first_occurrence_subword(self):
        tree = dt(mp("331162265445", 6, 2))
        got = chain_from_tree(tree)
        assert got.slot(1).word == (3, 1, 6, 2, 5, 4)

    def test_equals_psi_inverse(self):
        for cls in enumerate_classes(3, 2):
            assert chain_from_tree(dt(cls.canonical)).perms == \
                psi_inverse(cls).perms


class TestOrder:
    def test_reflexive(self):
        c = chain((2, 1, 3), (2, 3, 1))
        assert chain_leq(c, c)

    def test_order_isomorphism(self):
        items = [(cls, psi_inverse(cls)) for cls in enumerate_classes(3, 2)]
        for c1, ch1 in items:
            for c2, ch2 in items:
                assert chain_leq(ch1, ch2) == meta_leq(c1, c2)


class TestEnumeration:
    def test_count_15(self):
        assert sum(1 for _ in enumerate_chains(3, 2)) == 15

    def test_excluded_pairs_for_3_2(self):
        got = {tuple(p.word for p in c.perms) for c in enumerate_chains(3, 2)}
        from itertools import permutations
        from metasylv.weak_order import perm_leq
        perms = [Permutation(w) for w in permutations((1, 2, 3))]
        expected = {(a.word, b.word) for a in perms for b in perms
                    if perm_leq(a, b)
                    and (a.word, b.word) not in {((1, 2, 3), (2, 3, 1)),
                                                 ((1, 3, 2), (3, 2, 1))}}
        assert got == expected

    def test_brute_matches_production(self):
        for n in range(1, 5):
            for m in range(1, 4):
                brute = sum(1 for _ in enumerate_chains_brute(n, m))
                assert brute == count_classes(n, m)


class Test231Oracles:
    def test_agreement_on_comparable_pairs(self):
        from itertools import permutations
        from metasylv.weak_order import perm_leq
        for wa in permutations((1, 2, 3, 4)):
            for wb in permutations((1, 2, 3, 4)):
                a, b = Permutation(wa), Permutation(wb)
                if perm_leq(a, b):
                    via_comp = not avoids_231(a.inverse().compose(b))
                    assert via_comp == quotient_contains_231_subwords(a, b)
