"""Conversions between the representations of a metasylvester class.

Every representation converts through the class itself, so any pair of
representations composes through a single hub.  An arbitrary m-permutation
first passes through its maximal class element, and a chain of Dyck paths
identifies the sylvester-maximal class in its fiber.
"""

from __future__ import annotations

from typing import Optional

from .chains import MetaChain, psi, psi_inverse
from .errors import AlphabetError, MetasylvError, ShapeMismatch
from .metasylvester import (
    MetasylvesterClass,
    TreeCode,
    TreeInversionSet,
    class_of,
    from_tree_code,
    tree_code,
    word_from_tree_inversions,
    validate_tree_inversions,
)
from .trees import DecreasingTree, dt, reading_word
from .tamari import (
    DyckChain,
    DyckPath,
    dyck_chain_of_class,
    is_sylv_maximal,
)
from .weak_order import MPermutation

REPRESENTATIONS = ("mperm", "maxclass", "tree", "inversions", "code",
                   "chain", "dyck-chain")


def _shape(payload, n: Optional[int], m: Optional[int]) -> tuple[int, int]:
    if isinstance(payload, dict) and "n" in payload and "m" in payload:
        return payload["n"], payload["m"]
    if n is None or m is None:
        raise AlphabetError("payload carries no shape; pass n and m")
    return n, m


def _word(payload) -> tuple[int, ...]:
    if isinstance(payload, (str, int)):
        return tuple(int(c) for c in str(payload))
    if isinstance(payload, dict):
        return _word(payload["word"])
    return tuple(int(v) for v in payload)


def to_class(rep: str, payload, n: Optional[int] = None,
             m: Optional[int] = None) -> MetasylvesterClass:
    """Parse a JSON payload in the given representation down to its class."""
    try:
        if rep in ("mperm", "maxclass"):
            pn, pm = _shape(payload, n, m)
            sigma = MPermutation(pn, pm, _word(payload))
            cls = class_of(sigma)
            if rep == "maxclass" and cls.canonical != sigma:
                raise AlphabetError(
                    f"{sigma.word} is not the maximal element of its class")
            return cls
        if rep == "tree":
            tree = DecreasingTree.from_dict(payload)
            return class_of(reading_word(tree))
        if rep == "inversions":
            inv = TreeInversionSet.from_dict(payload)
            if not validate_tree_inversions(inv):
                raise AlphabetError(f"invalid tree-inversion set: {payload}")
            return MetasylvesterClass(word_from_tree_inversions(inv), inv)
        if rep == "code":
            if isinstance(payload, dict):
                code = TreeCode(payload["n"], payload["m"],
                                tuple(payload["entries"]))
            else:
                pn, pm = _shape(payload, n, m)
                code = TreeCode(pn, pm, tuple(payload))
            return from_tree_code(code)
        if rep == "chain":
            if isinstance(payload, dict):
                chain = MetaChain.from_dict(payload)
            else:
                pn, pm = _shape(payload, n, m)
                chain = MetaChain.from_dict({"n": pn, "m": pm, "perms": payload})
            return psi(chain)
        if rep == "dyck-chain":
            return _class_of_dyck_chain(payload, n, m)
    except MetasylvError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise AlphabetError(f"malformed {rep} payload: {exc}") from exc
    raise ShapeMismatch(f"unknown representation {rep!r}")


def from_class(rep: str, cls: MetasylvesterClass):
    """Serialize a class into the given representation as plain JSON data."""
    if rep in ("mperm", "maxclass"):
        return {"n": cls.n, "m": cls.m, "word": list(cls.canonical.word)}
    if rep == "tree":
        return dt(cls.canonical).to_dict()
    if rep == "inversions":
        return cls.inversions.to_dict()
    if rep == "code":
        return tree_code(cls).to_dict()
    if rep == "chain":
        return psi_inverse(cls).to_dict()
    if rep == "dyck-chain":
        chain = dyck_chain_of_class(cls)
        return {"n": cls.n, "m": cls.m, "paths": chain.to_list()}
    raise ShapeMismatch(f"unknown representation {rep!r}")


def convert(from_rep: str, to_rep: str, payload,
            n: Optional[int] = None, m: Optional[int] = None):
    if from_rep not in REPRESENTATIONS:
        raise ShapeMismatch(f"unknown representation {from_rep!r}")
    if to_rep not in REPRESENTATIONS:
        raise ShapeMismatch(f"unknown representation {to_rep!r}")
    return from_class(to_rep, to_class(from_rep, payload, n, m))


def _class_of_dyck_chain(payload, n: Optional[int],
                         m: Optional[int]) -> MetasylvesterClass:
    """The sylvester-maximal class mapping to the given chain of Dyck paths.

    The Dyck-path picture is a quotient: several classes share a chain, and
    the sylvester-maximal one is the canonical preimage.
    """
    if isinstance(payload, dict):
        pn, pm = payload["n"], payload["m"]
        paths = payload["paths"]
    else:
        pn, pm = _shape(payload, n, m)
        paths = payload
    target = DyckChain(pn, pm, tuple(DyckPath(p) for p in paths))
    from .metasylvester import enumerate_classes

    for cls in enumerate_classes(pn, pm):
        if not is_sylv_maximal(cls.canonical):
            continue
        if dyck_chain_of_class(cls).to_list() == target.to_list():
            return cls
    raise AlphabetError(f"no class realizes the dyck chain {paths}")
