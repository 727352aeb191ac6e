import json

from metasylv.diagram import (
    LatticeDiagram,
    diagram_from_covers,
    diagram_from_leq,
    find_isomorphism,
    metasylvester_lattice_diagram,
    weak_lattice_diagram,
)


class TestWeakDiagram:
    def test_2_2_shape(self):
        d = weak_lattice_diagram(2, 2)
        assert len(d.elements) == 6 and len(d.covers) == 6

    def test_2_2_edges(self):
        d = weak_lattice_diagram(2, 2)
        assert d.cover_labels() == {("1122", "1212"), ("1212", "2112"),
                                    ("1212", "1221"), ("2112", "2121"),
                                    ("1221", "2121"), ("2121", "2211")}

    def test_standardization_twin_below_3412(self):
        # the (2,2) ideal maps edge-for-edge onto the S4 ideal below 3412
        from itertools import permutations
        from metasylv.weak_order import (
            MPermutation, Permutation, coinv_of_word, standardize)
        top = coinv_of_word((3, 4, 1, 2))
        ideal = [Permutation(w) for w in permutations((1, 2, 3, 4))
                 if coinv_of_word(w) <= top]
        twin = diagram_from_leq(
            "weak", ideal, lambda p: "".join(map(str, p.word)),
            lambda p, q: coinv_of_word(p.word) <= coinv_of_word(q.word))
        d = weak_lattice_diagram(2, 2)
        std = {lab: "".join(map(str, standardize(
            MPermutation(2, 2, tuple(int(c) for c in lab))).word))
            for lab in d.elements}
        assert {(std[a], std[b]) for a, b in d.cover_labels()} == \
            twin.cover_labels()


class TestMetasylvesterDiagram:
    def test_3_2_shape(self):
        d = metasylvester_lattice_diagram(3, 2)
        assert len(d.elements) == 15 and len(d.covers) == 20
        assert d.is_lattice()


class TestLatticeDiagram:
    def test_json_roundtrip(self):
        d = weak_lattice_diagram(2, 2)
        again = LatticeDiagram.from_dict(json.loads(json.dumps(d.to_dict())))
        assert again == d

    def test_dot_deterministic(self):
        d = metasylvester_lattice_diagram(3, 2)
        assert d.to_dot() == d.to_dot()
        assert "rankdir=BT" in d.to_dot()

    def test_not_a_lattice_detected(self):
        # two maximal elements: no join for the two minima
        d = LatticeDiagram("weak", ("a", "b", "c", "d"),
                           ((0, 2), (0, 3), (1, 2), (1, 3)))
        assert not d.is_lattice()

    def test_find_isomorphism(self):
        d = metasylvester_lattice_diagram(3, 2)
        mapping = find_isomorphism(d, d)
        assert mapping is not None
        other = LatticeDiagram("weak", ("x", "y"), ((0, 1),))
        assert find_isomorphism(d, other) is None
