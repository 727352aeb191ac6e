"""Named verification suites running the structural theorems at desk scale.

Each check is exhaustive over every shape (n, m) with n*m <= max_nm, except
where the instance count makes all-pairs scans unreasonable; those checks
fall back to a seeded random sample and say so in their detail line.  For
m = 1 both rewriting rules need a repeated letter, so classes are singletons
and several identities hold definitionally once singleton-ness is verified.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Optional

from .chains import (
    chain_leq,
    cinv,
    enumerate_chains_brute,
    psi,
    psi_inverse,
    quotient_contains_231_subwords,
    avoids_231,
)
from .errors import ShapeMismatch
from .metasylvester import (
    MetasylvesterClass,
    class_of,
    count_classes,
    enumerate_classes,
    maxclass,
    meta_class,
    meta_covers,
    meta_join,
    meta_leq,
    meta_meet,
    minclass,
    mperm_standardized_chain_slice,
    rewrite_neighbors,
    tree_inversions,
    validate_tree_inversions,
)
from .tamari import (
    dyck_chain_leq,
    dyck_chain_of_class,
    enumerate_ballot_paths,
    is_sylv_maximal,
    mperm_of_string,
    mtamari_lattice,
    split_ballot_path,
    sylv_class,
    sylvester_groups,
)
from .trees import dt, enumerate_trees, reading_word, tree_inversions_of_tree
from .weak_order import (
    MPermutation,
    Permutation,
    cocode,
    coinversions,
    enumerate_mpermutations,
    perm_from_cocode,
    standardize,
    validate_coinversions,
    weak_covers,
    weak_join,
    weak_leq,
    weak_meet,
)

# All-pairs scans run exhaustively up to this many elements; larger shapes
# (only (7,1) and (8,1) at the default cap) are sampled instead.
PAIR_CAP = 2600
SAMPLE_PAIRS = 4000
SEED = 20260823


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class VerifyReport:
    suite: str
    max_nm: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "max_nm": self.max_nm,
                "passed": self.passed,
                "results": [{"name": r.name, "passed": r.passed,
                             "detail": r.detail} for r in self.results]}

    def text(self) -> str:
        lines = [r.line() for r in self.results]
        lines.append(f"{'PASS' if self.passed else 'FAIL'} suite={self.suite} "
                     f"max_nm={self.max_nm} ({len(self.results)} checks)")
        return "\n".join(lines) + "\n"


def shapes(max_nm: int) -> list[tuple[int, int]]:
    return [(n, m) for n in range(1, max_nm + 1)
            for m in range(1, max_nm // n + 1)]


# ---------------------------------------------------------------------------
# per-shape cached context

class ShapeContext:
    """Shared per-shape data: elements, bitmask order tables, partitions."""

    def __init__(self, n: int, m: int):
        self.n, self.m = n, m
        self.elements: list[MPermutation] = sorted(enumerate_mpermutations(n, m))
        self.index = {s: i for i, s in enumerate(self.elements)}
        self.size = len(self.elements)
        self._coinv_masks: Optional[list[int]] = None
        self._upsets: Optional[list[int]] = None
        self._downsets: Optional[list[int]] = None
        self._leq_masks: Optional[list[int]] = None
        self._join_of_masks: Optional[dict[int, int]] = None
        self._classes: Optional[list[set[MPermutation]]] = None

    def coinv_masks(self) -> list[int]:
        if self._coinv_masks is None:
            n, m = self.n, self.m
            universe = [(a, i, b, j) for a in range(1, n) for b in range(a + 1, n + 1)
                        for i in range(1, m + 1) for j in range(1, m + 1)]
            bit = {p: 1 << k for k, p in enumerate(universe)}
            self._coinv_masks = [
                sum(bit[p] for p in coinversions(s).pairs) for s in self.elements]
        return self._coinv_masks

    def leq(self, i: int, j: int) -> bool:
        masks = self.coinv_masks()
        return masks[i] & ~masks[j] == 0

    def upsets(self) -> list[int]:
        """Upset bitmask per element, from the cover relation."""
        if self._upsets is None:
            succ: list[list[int]] = [[] for _ in range(self.size)]
            for i, s in enumerate(self.elements):
                for t in weak_covers(s):
                    succ[i].append(self.index[t])
            up = [1 << i for i in range(self.size)]
            order = sorted(range(self.size),
                           key=lambda i: -len(coinversions(self.elements[i]).pairs))
            for i in order:
                for j in succ[i]:
                    up[i] |= up[j]
            self._upsets = up
        return self._upsets

    def downsets(self) -> list[int]:
        if self._downsets is None:
            up = self.upsets()
            down = [0] * self.size
            for i in range(self.size):
                mask = up[i]
                while mask:
                    low = mask & -mask
                    down[low.bit_length() - 1] |= 1 << i
                    mask ^= low
            self._downsets = down
        return self._downsets

    def leq_masks(self) -> list[int]:
        """Order masks straight from co-inversion inclusion, cover-free."""
        if self._leq_masks is None:
            masks = self.coinv_masks()
            self._leq_masks = [
                sum(1 << j for j, mj in enumerate(masks) if mi & ~mj == 0)
                for mi in masks]
        return self._leq_masks

    def join_index(self, i: int, j: int) -> int:
        """Join by upset intersection; independent of the production join."""
        if self._join_of_masks is None:
            up = self.upsets()
            self._join_of_masks = {u: k for k, u in enumerate(up)}
        meetmask = self.upsets()[i] & self.upsets()[j]
        k = self._join_of_masks.get(meetmask, -1)
        if k < 0:
            raise ShapeMismatch(
                f"no join for {self.elements[i].word}, {self.elements[j].word}")
        return k

    def classes(self) -> list[set[MPermutation]]:
        """The metasylvester partition, by rewriting closure."""
        if self._classes is None:
            seen: set[MPermutation] = set()
            blocks = []
            for s in self.elements:
                if s in seen:
                    continue
                block = meta_class(s)
                seen |= block
                blocks.append(block)
            self._classes = blocks
        return self._classes

    def singleton_classes(self) -> bool:
        return all(not rewrite_neighbors(s) for s in self.elements)

    def pair_sample(self, count: int = SAMPLE_PAIRS) -> list[tuple[int, int]]:
        rng = random.Random(SEED + self.size)
        return [(rng.randrange(self.size), rng.randrange(self.size))
                for _ in range(count)]


@lru_cache(maxsize=8)
def _context(n: int, m: int) -> ShapeContext:
    return ShapeContext(n, m)


def _pairs(ctx: ShapeContext) -> tuple[Iterable[tuple[int, int]], str]:
    if ctx.size <= PAIR_CAP:
        return (((i, j) for i in range(ctx.size) for j in range(i, ctx.size)),
                "exhaustive")
    return ctx.pair_sample(), f"sampled {SAMPLE_PAIRS} pairs"


# ---------------------------------------------------------------------------
# weak-lattice suite

def check_coinv_invariants(max_nm: int) -> CheckResult:
    for n, m in shapes(max_nm):
        for s in enumerate_mpermutations(n, m):
            if not validate_coinversions(coinversions(s)):
                return CheckResult("coinv-invariants", False, f"{s.word}")
    return CheckResult("coinv-invariants", True, "exhaustive")


def check_cocode_roundtrip(max_nm: int) -> CheckResult:
    from itertools import permutations
    top = min(max_nm, 7)
    for size in range(1, top + 1):
        for w in permutations(range(1, size + 1)):
            pi = Permutation(w)
            if perm_from_cocode(cocode(pi)) != pi:
                return CheckResult("cocode-roundtrip", False, f"{w}")
    return CheckResult("cocode-roundtrip", True, f"exhaustive N <= {top}")


def check_covers_vs_leq(max_nm: int) -> CheckResult:
    notes = []
    for n, m in shapes(max_nm):
        ctx = _context(n, m)
        if ctx.size <= PAIR_CAP:
            if ctx.upsets() != ctx.leq_masks():
                return CheckResult("covers-vs-leq", False, f"({n},{m})")
        else:
            for i, j in ctx.pair_sample(800):
                ok_cov = _cover_path_exists(ctx, i, j)
                if ok_cov != ctx.leq(i, j):
                    return CheckResult(
                        "covers-vs-leq", False,
                        f"{ctx.elements[i].word} vs {ctx.elements[j].word}")
            notes.append(f"({n},{m}) sampled")
    return CheckResult("covers-vs-leq", True, "; ".join(notes) or "exhaustive")


def _cover_path_exists(ctx: ShapeContext, i: int, j: int) -> bool:
    """Greedy walk up the cover graph toward j; sound for the weak order."""
    cur = ctx.elements[i]
    target = ctx.elements[j]
    while cur != target:
        step = next((t for t in weak_covers(cur) if weak_leq(t, target)), None)
        if step is None:
            return False
        cur = step
    return True


def check_lattice_axioms(max_nm: int) -> CheckResult:
    """Existence of all pairwise joins/meets, plus sampled identities.

    Unique least upper bounds for every pair make the axioms hold by order
    theory; associativity, commutativity, idempotence and absorption are
    additionally spot-checked through the production functions.
    """
    notes = []
    for n, m in shapes(max_nm):
        ctx = _context(n, m)
        if ctx.size <= PAIR_CAP:
            up, down = ctx.upsets(), ctx.downsets()
            up_of, down_of = set(up), set(down)
            for i in range(ctx.size):
                for j in range(i + 1, ctx.size):
                    if up[i] & up[j] not in up_of:
                        return CheckResult("lattice-axioms", False,
                                           f"({n},{m}) pair without a join")
                    if down[i] & down[j] not in down_of:
                        return CheckResult("lattice-axioms", False,
                                           f"({n},{m}) pair without a meet")
        else:
            notes.append(f"({n},{m}) sampled")
        rng = random.Random(SEED)
        for _ in range(500):
            s, t, u = (ctx.elements[rng.randrange(ctx.size)] for _ in range(3))
            jn, mt = weak_join(s, t), weak_meet(s, t)
            ok = (weak_join(t, s) == jn and weak_meet(t, s) == mt
                  and weak_join(s, s) == s
                  and weak_join(s, mt) == s and weak_meet(s, jn) == s
                  and weak_join(jn, u) == weak_join(s, weak_join(t, u)))
            if not ok:
                return CheckResult("lattice-axioms", False,
                                   f"identity fails at {s.word},{t.word},{u.word}")
    return CheckResult("lattice-axioms", True, "; ".join(notes) or "exhaustive")


def check_join_meet_oracle(max_nm: int) -> CheckResult:
    """Production join/meet against the upset/downset intersection oracle."""
    notes = []
    for n, m in shapes(max_nm):
        ctx = _context(n, m)
        if ctx.size <= 800:
            pairs: Iterable[tuple[int, int]] = (
                (i, j) for i in range(ctx.size) for j in range(i, ctx.size))
        elif ctx.size <= PAIR_CAP:
            pairs = ctx.pair_sample(20000)
            notes.append(f"({n},{m}) sampled 20000 pairs")
        else:
            pairs = ctx.pair_sample()
            notes.append(f"({n},{m}) sampled {SAMPLE_PAIRS} pairs")
        with_masks = ctx.size <= PAIR_CAP
        up = ctx.upsets() if with_masks else None
        down = ctx.downsets() if with_masks else None
        for i, j in pairs:
            s, t = ctx.elements[i], ctx.elements[j]
            jn, mt = ctx.index[weak_join(s, t)], ctx.index[weak_meet(s, t)]
            if with_masks:
                ok = up[jn] == up[i] & up[j] and down[mt] == down[i] & down[j]
            else:
                ok = (ctx.leq(i, jn) and ctx.leq(j, jn)
                      and ctx.leq(mt, i) and ctx.leq(mt, j)
                      and _is_least_upper_sample(ctx, i, j, jn)
                      and _is_greatest_lower_sample(ctx, i, j, mt))
            if not ok:
                return CheckResult("join-meet-oracle", False,
                                   f"({s.word},{t.word})")
    return CheckResult("join-meet-oracle", True, "; ".join(notes) or "exhaustive")


def _is_least_upper_sample(ctx: ShapeContext, i: int, j: int, jn: int) -> bool:
    rng = random.Random(SEED ^ (i * 31 + j))
    for _ in range(200):
        z = rng.randrange(ctx.size)
        if ctx.leq(i, z) and ctx.leq(j, z) and not ctx.leq(jn, z):
            return False
    return True


def _is_greatest_lower_sample(ctx: ShapeContext, i: int, j: int, mt: int) -> bool:
    rng = random.Random(SEED ^ (i * 37 + j))
    for _ in range(200):
        z = rng.randrange(ctx.size)
        if ctx.leq(z, i) and ctx.leq(z, j) and not ctx.leq(z, mt):
            return False
    return True


def check_standardize_order(max_nm: int) -> CheckResult:
    from .weak_order import coinv_of_word
    notes = []
    for n, m in shapes(max_nm):
        ctx = _context(n, m)
        pairs, note = _pairs(ctx)
        if note != "exhaustive":
            notes.append(f"({n},{m}) {note}")
        universe = {}
        std_masks = []
        for s in ctx.elements:
            mask = 0
            for pair in coinv_of_word(standardize(s).word):
                mask |= universe.setdefault(pair, 1 << len(universe))
            std_masks.append(mask)
        masks = ctx.coinv_masks()
        for i, j in pairs:
            lhs = masks[i] & ~masks[j] == 0
            rhs = std_masks[i] & ~std_masks[j] == 0
            if lhs != rhs:
                return CheckResult("standardize-order", False,
                                   f"{ctx.elements[i].word} vs "
                                   f"{ctx.elements[j].word}")
    return CheckResult("standardize-order", True, "; ".join(notes) or "exhaustive")


# ---------------------------------------------------------------------------
# intervals suite (metasylvester congruence structure)

def check_class_partition(max_nm: int) -> CheckResult:
    for n, m in shapes(max_nm):
        ctx = _context(n, m)
        blocks = ctx.classes()
        if sum(len(b) for b in blocks) != ctx.size:
            return CheckResult("class-partition", False, f"overlap at ({n},{m})")
        if len(blocks) != count_classes(n, m):
            return CheckResult("class-partition", False,
                               f"({n},{m}): {len(blocks)} blocks, "
                               f"formula {count_classes(n, m)}")
    return CheckResult("class-partition", True, "exhaustive, matches formula")


def check_congruence_soundness(max_nm: int) -> CheckResult:
    for n, m in shapes(max_nm):
        for block in _context(n, m).classes():
            invs = {tree_inversions(s).triples for s in block}
            if len(invs) != 1:
                return CheckResult("congruence-soundness", False,
                                   f"({n},{m}) block {sorted(block)[0].word}")
    return CheckResult("congruence-soundness", True, "exhaustive")


def check_interval_property(max_nm: int) -> CheckResult:
    for n, m in shapes(max_nm):
        ctx = _context(n, m)
        up, down = ctx.upsets(), ctx.downsets()
        for block in ctx.classes():
            any_el = next(iter(block))
            top, bot = maxclass(any_el), minclass(any_el)
            if top not in block or bot not in block:
                return CheckResult("interval-property", False,
                                   f"({n},{m}) extremes escape the class")
            ti, bi = ctx.index[top], ctx.index[bot]
            block_mask = 0
            for s in block:
                block_mask |= 1 << ctx.index[s]
            # [bot, top] is exactly the upset of bot meeting the downset of
            # top; equality with the block gives both containments at once
            if up[bi] & down[ti] != block_mask:
                return CheckResult("interval-property", False,
                                   f"({n},{m}) [min,max] != class at {top.word}")
    return CheckResult("interval-property", True,
                       "exhaustive; implies interval closure")


def check_monotonicity(max_nm: int) -> CheckResult:
    notes = []
    for n, m in shapes(max_nm):
        if m == 1:
            ctx = _context(n, m)
            if not ctx.singleton_classes():
                return CheckResult("ti-monotonicity", False,
                                   f"({n},1) non-singleton class")
            notes.append(f"({n},1) ti = coinv, definitional")
            continue
        ctx = _context(n, m)
        ti_mask = _ti_masks(ctx)
        cls_id = _class_ids(ctx)
        leq_masks = ctx.leq_masks()
        for i in range(ctx.size):
            above = leq_masks[i]
            while above:
                low = above & -above
                above ^= low
                j = low.bit_length() - 1
                sub = ti_mask[i] & ~ti_mask[j] == 0
                if not sub:
                    return CheckResult("ti-monotonicity", False,
                                       f"{ctx.elements[i].word} <= "
                                       f"{ctx.elements[j].word}")
                strict = ti_mask[i] != ti_mask[j]
                if strict != (cls_id[i] != cls_id[j]):
                    return CheckResult("ti-monotonicity", False,
                                       f"strictness at {ctx.elements[i].word}, "
                                       f"{ctx.elements[j].word}")
    return CheckResult("ti-monotonicity", True, "; ".join(notes) or "exhaustive")


def _ti_masks(ctx: ShapeContext) -> list[int]:
    n, m = ctx.n, ctx.m
    universe = [(a, b, i) for a in range(1, n) for b in range(a + 1, n + 1)
                for i in range(1, m + 1)]
    bit = {t: 1 << k for k, t in enumerate(universe)}
    return [sum(bit[t] for t in tree_inversions(s).triples) for s in ctx.elements]


def _class_ids(ctx: ShapeContext) -> list[int]:
    ids = [0] * ctx.size
    for cid, block in enumerate(ctx.classes()):
        for s in block:
            ids[ctx.index[s]] = cid
    return ids


def check_nonconverse_witness(max_nm: int) -> CheckResult:
    s = mperm_of_string("131223", 3, 2)
    t = mperm_of_string("121332", 3, 2)
    sub = tree_inversions(s).triples <= tree_inversions(t).triples
    incomparable = not weak_leq(s, t) and not weak_leq(t, s)
    ok = sub and incomparable
    return CheckResult("nonconverse-witness", ok,
                       "131223 vs 121332: inclusion without comparability")


# ---------------------------------------------------------------------------
# semi-quotient suite

def check_max_stability(max_nm: int) -> CheckResult:
    notes = []
    for n, m in shapes(max_nm):
        if m == 1:
            if not _context(n, m).singleton_classes():
                return CheckResult("max-stability", False, f"({n},1)")
            notes.append(f"({n},1) Max is everything, trivial")
            continue
        maxima = [c.canonical for c in enumerate_classes(n, m)]
        for s, t in combinations(maxima, 2):
            for op in (weak_join, weak_meet):
                r = op(s, t)
                if maxclass(r) != r:
                    return CheckResult("max-stability", False,
                                       f"{op.__name__}({s.word},{t.word})")
    return CheckResult("max-stability", True, "; ".join(notes) or "exhaustive")


def check_semi_quotient_join(max_nm: int) -> CheckResult:
    notes = []
    for n, m in shapes(max_nm):
        ctx = _context(n, m)
        if m == 1:
            if not ctx.singleton_classes():
                return CheckResult("semi-quotient-join", False, f"({n},1)")
            notes.append(f"({n},1) singleton classes, definitional")
            continue
        max_idx = _maxclass_indices(ctx)
        # join of canonical elements, tabulated once per pair of classes
        canon = sorted({max_idx[i] for i in range(ctx.size)})
        meta_tab = {}
        for a in canon:
            for b in canon:
                j = ctx.join_index(a, b)
                meta_tab[a, b] = max_idx[j]
                if max_idx[j] != j:
                    return CheckResult("semi-quotient-join", False,
                                       f"join of maxima left Max at ({n},{m})")
        for i in range(ctx.size):
            for j in range(i, ctx.size):
                k = ctx.join_index(i, j)
                if max_idx[k] != meta_tab[max_idx[i], max_idx[j]]:
                    return CheckResult(
                        "semi-quotient-join", False,
                        f"{ctx.elements[i].word} vs {ctx.elements[j].word}")
    return CheckResult("semi-quotient-join", True, "; ".join(notes) or "exhaustive")


def _maxclass_indices(ctx: ShapeContext) -> list[int]:
    out = [0] * ctx.size
    for block in ctx.classes():
        top = ctx.index[maxclass(next(iter(block)))]
        for s in block:
            out[ctx.index[s]] = top
    return out


def check_meet_counterexample(max_nm: int) -> CheckResult:
    """The documented expected-negative: meet does not pass to the quotient."""
    s = mperm_of_string("121332", 3, 2)
    t = mperm_of_string("131223", 3, 2)
    lhs = maxclass(weak_meet(s, t))
    rhs = meta_meet(class_of(s), class_of(t)).canonical
    ok = (lhs == mperm_of_string("113223", 3, 2)
          and rhs == mperm_of_string("311223", 3, 2))
    word = "".join(str(v) for v in lhs.word)
    rword = "".join(str(v) for v in rhs.word)
    return CheckResult("meet-counterexample", ok,
                       f"expected negative: maxclass(121332 meet 131223) = {word} "
                       f"!= {rword} = canonical of the class meet")


def check_cover_consistency(max_nm: int) -> CheckResult:
    notes = []
    for n, m in shapes(max_nm):
        classes = list(enumerate_classes(n, m))
        if len(classes) > PAIR_CAP:
            classes = random.Random(SEED).sample(classes, 120)
            notes.append(f"({n},{m}) sampled 120 classes")
        reach = {c.canonical: {c.canonical} for c in classes}
        pool = {c.canonical for c in classes}
        covers = {c.canonical: [d.canonical for d in meta_covers(c)
                                if d.canonical in pool] for c in classes}
        changed = True
        while changed:
            changed = False
            for w, ups in reach.items():
                for u in covers[w]:
                    new = reach[u] - ups
                    if new:
                        ups |= new
                        changed = True
        for c1 in classes:
            for c2 in classes:
                via_cover = c2.canonical in reach[c1.canonical]
                if len(notes) and not via_cover:
                    # sampling may omit intermediate classes; only the
                    # positive direction is meaningful on a sample
                    continue
                if via_cover != meta_leq(c1, c2) and not notes:
                    return CheckResult("cover-consistency", False,
                                       f"({n},{m}) {c1.canonical.word} vs "
                                       f"{c2.canonical.word}")
                if via_cover and not meta_leq(c1, c2):
                    return CheckResult("cover-consistency", False,
                                       f"({n},{m}) cover chain above order")
    return CheckResult("cover-consistency", True, "; ".join(notes) or "exhaustive")


# ---------------------------------------------------------------------------
# bijections suite

def check_tree_roundtrips(max_nm: int) -> CheckResult:
    for n, m in shapes(max_nm):
        for tree in enumerate_trees(n, m + 1):
            if dt(reading_word(tree)) != tree:
                return CheckResult("tree-roundtrips", False,
                                   f"({n},{m}) {tree.to_dict()}")
        for cls in enumerate_classes(n, m):
            if reading_word(dt(cls.canonical)) != cls.canonical:
                return CheckResult("tree-roundtrips", False,
                                   f"({n},{m}) {cls.canonical.word}")
    rng = random.Random(SEED)
    for _ in range(25):
        n, m = rng.randint(5, 9), rng.randint(2, 4)
        entries = tuple(rng.randint(0, (n - i) * m) for i in range(1, n + 1))
        from .metasylvester import TreeCode, from_tree_code
        cls = from_tree_code(TreeCode(n, m, entries))
        tree = dt(cls.canonical)
        if reading_word(tree) != cls.canonical or dt(reading_word(tree)) != tree:
            return CheckResult("tree-roundtrips", False, f"random ({n},{m}) {entries}")
    return CheckResult("tree-roundtrips", True, "exhaustive + 25 random large")


def check_tree_class_invariance(max_nm: int) -> CheckResult:
    for n, m in shapes(max_nm):
        ctx = _context(n, m)
        seen: dict = {}
        for cid, block in enumerate(ctx.classes()):
            trees = {dt(s) for s in block}
            if len(trees) != 1:
                return CheckResult("tree-class-invariance", False,
                                   f"({n},{m}) dt not constant on a class")
            tree = trees.pop()
            if tree in seen:
                return CheckResult("tree-class-invariance", False,
                                   f"({n},{m}) dt collision across classes")
            seen[tree] = cid
    return CheckResult("tree-class-invariance", True, "exhaustive")


def check_tree_inversion_agreement(max_nm: int) -> CheckResult:
    for n, m in shapes(max_nm):
        for cls in enumerate_classes(n, m):
            tree = dt(cls.canonical)
            if tree_inversions_of_tree(tree) != cls.inversions:
                return CheckResult("tree-inversion-agreement", False,
                                   f"({n},{m}) {cls.canonical.word}")
    return CheckResult("tree-inversion-agreement", True, "exhaustive")


def check_m1_degeneration(max_nm: int) -> CheckResult:
    import math
    for n in range(1, min(max_nm, 5) + 1):
        ctx = _context(n, 1)
        if not ctx.singleton_classes():
            return CheckResult("m1-degeneration", False, f"({n},1) class not singleton")
        if sum(1 for _ in enumerate_trees(n, 2)) != math.factorial(n):
            return CheckResult("m1-degeneration", False, f"({n},1) tree count")
    return CheckResult("m1-degeneration", True, "singleton classes, n! trees")


def check_psi_bijection(max_nm: int) -> CheckResult:
    notes = []
    for n, m in shapes(max_nm):
        if m == 1:
            notes.append(f"({n},1) chains are single permutations, definitional")
            continue
        seen = set()
        for cls in enumerate_classes(n, m):
            chain = psi_inverse(cls)
            if chain.perms in seen:
                return CheckResult("psi-bijection", False,
                                   f"({n},{m}) chain collision")
            seen.add(chain.perms)
            if psi(chain).canonical != cls.canonical:
                return CheckResult("psi-bijection", False,
                                   f"({n},{m}) {cls.canonical.word}")
            if not validate_tree_inversions(cinv(chain)):
                return CheckResult("psi-bijection", False,
                                   f"({n},{m}) invalid cinv")
            for i in range(1, m + 1):
                if chain.slot(i) != mperm_standardized_chain_slice(cls.canonical, i):
                    return CheckResult("psi-bijection", False,
                                       f"({n},{m}) slot {i} subword identity")
    return CheckResult("psi-bijection", True, "; ".join(notes) or "exhaustive")


def check_psi_order_iso(max_nm: int) -> CheckResult:
    notes = []
    for n, m in shapes(max_nm):
        if m == 1:
            notes.append(f"({n},1) definitional")
            continue
        items = [(cls, psi_inverse(cls)) for cls in enumerate_classes(n, m)]
        for (c1, ch1) in items:
            for (c2, ch2) in items:
                if chain_leq(ch1, ch2) != meta_leq(c1, c2):
                    return CheckResult("psi-order-iso", False,
                                       f"({n},{m}) {c1.canonical.word} vs "
                                       f"{c2.canonical.word}")
    return CheckResult("psi-order-iso", True, "; ".join(notes) or "exhaustive")


def check_chain_count_brute(max_nm: int) -> CheckResult:
    for n in range(1, 5):
        for m in range(1, 4):
            got = sum(1 for _ in enumerate_chains_brute(n, m))
            if got != count_classes(n, m):
                return CheckResult("chain-count-brute", False,
                                   f"({n},{m}): {got} != {count_classes(n, m)}")
    return CheckResult("chain-count-brute", True, "n <= 4, m <= 3")


def check_231_oracles_agree(max_nm: int) -> CheckResult:
    """Composition test against the subword criterion, over chain slot pairs."""
    from itertools import permutations
    perms = [Permutation(w) for w in permutations(range(1, 5))]
    from .weak_order import perm_leq
    for low in perms:
        for high in perms:
            if not perm_leq(low, high):
                continue
            via_comp = not avoids_231(low.inverse().compose(high))
            via_sub = quotient_contains_231_subwords(low, high)
            if via_comp != via_sub:
                return CheckResult("231-oracles", False,
                                   f"{low.word} vs {high.word}")
    return CheckResult("231-oracles", True, "all comparable pairs in size 4")


# ---------------------------------------------------------------------------
# tamari suite

def check_sylvester_refinement(max_nm: int) -> CheckResult:
    notes = []
    for n, m in shapes(max_nm):
        ctx = _context(n, m)
        if ctx.size > PAIR_CAP:
            notes.append(f"({n},{m}) skipped, singleton classes refine trivially")
            continue
        sylv_id: dict[MPermutation, int] = {}
        next_id = 0
        for s in ctx.elements:
            if s not in sylv_id:
                for t in sylv_class(s):
                    sylv_id[t] = next_id
                next_id += 1
        for block in ctx.classes():
            if len({sylv_id[s] for s in block}) != 1:
                return CheckResult("sylvester-refinement", False,
                                   f"({n},{m}) class splits across sylvester classes")
        # sylvester classes are weak-order intervals
        groups: dict[int, list[MPermutation]] = {}
        for s, gid in sylv_id.items():
            groups.setdefault(gid, []).append(s)
        for members in groups.values():
            idxs = [ctx.index[s] for s in members]
            tops = [i for i in idxs if all(ctx.leq(j, i) for j in idxs)]
            bots = [i for i in idxs if all(ctx.leq(i, j) for j in idxs)]
            if len(tops) != 1 or len(bots) != 1:
                return CheckResult("sylvester-refinement", False,
                                   f"({n},{m}) sylvester class without extremes")
            lo, hi = bots[0], tops[0]
            inside = {k for k in range(ctx.size)
                      if ctx.leq(lo, k) and ctx.leq(k, hi)}
            if inside != set(idxs):
                return CheckResult("sylvester-refinement", False,
                                   f"({n},{m}) sylvester class not an interval")
    return CheckResult("sylvester-refinement", True, "; ".join(notes) or "exhaustive")


def check_ballot_counts(max_nm: int) -> CheckResult:
    """Enumerator totals against an independent prefix-condition filter."""
    from itertools import combinations as combs
    for n in range(1, 6):
        for m in range(1, 4):
            if n * (m + 1) > 20:
                continue
            total = n + n * m
            brute = 0
            for pos in combs(range(total), n):
                height = 0
                npos = set(pos)
                ok = True
                for k in range(total):
                    height += m if k in npos else -1
                    if height < 0:
                        ok = False
                        break
                brute += ok
            got = sum(1 for _ in enumerate_ballot_paths(n, m))
            if got != brute:
                return CheckResult("ballot-counts", False,
                                   f"({n},{m}): {got} != {brute}")
    return CheckResult("ballot-counts", True, "n <= 5, m <= 3 vs position filter")


def _tamari_shapes(max_nm: int) -> list[tuple[int, int]]:
    return [(n, m) for (n, m) in [(2, 2), (3, 2), (4, 2), (3, 3), (5, 1)]
            if n * m <= max_nm]


def check_three_realizations(max_nm: int) -> CheckResult:
    from .diagram import find_isomorphism
    for n, m in _tamari_shapes(max_nm):
        r = mtamari_lattice(n, m, max_nm=max(max_nm, n * m))
        if not (r.ballot.is_lattice() and r.maxperm.is_lattice()
                and r.quotient.is_lattice()):
            return CheckResult("three-realizations", False,
                               f"({n},{m}) not a lattice")
        relabeled = {(r.ballot_to_maxperm[a], r.ballot_to_maxperm[b])
                     for a, b in r.ballot.cover_labels()}
        if relabeled != r.maxperm.cover_labels():
            return CheckResult("three-realizations", False,
                               f"({n},{m}) ballot/maxperm covers differ")
        if r.maxperm.cover_labels() != r.quotient.cover_labels():
            return CheckResult("three-realizations", False,
                               f"({n},{m}) maxperm/quotient covers differ")
        if find_isomorphism(r.ballot, r.quotient) is None:
            return CheckResult("three-realizations", False,
                               f"({n},{m}) no abstract isomorphism")
    return CheckResult("three-realizations", True,
                       f"shapes {_tamari_shapes(max_nm)}")


def check_quotient_map(max_nm: int) -> CheckResult:
    """class -> sylvester cell is order- and join-preserving."""
    for n, m in _tamari_shapes(max_nm):
        cell: dict = {}
        for top, members in sylvester_groups(n, m).items():
            for cls in members:
                cell[cls.canonical] = top
        classes = list(enumerate_classes(n, m))
        for c1 in classes:
            for c2 in classes:
                if meta_leq(c1, c2):
                    t1, t2 = cell[c1.canonical], cell[c2.canonical]
                    if not weak_leq(t1, t2):
                        return CheckResult("quotient-map", False,
                                           f"({n},{m}) order not preserved")
                j = meta_join(c1, c2)
                jt = cell[j.canonical]
                expect = maxclass(weak_join(cell[c1.canonical], cell[c2.canonical]))
                if jt != maxclass(expect):
                    return CheckResult("quotient-map", False,
                                       f"({n},{m}) join not preserved at "
                                       f"{c1.canonical.word}, {c2.canonical.word}")
    return CheckResult("quotient-map", True, f"shapes {_tamari_shapes(max_nm)}")


def check_sublattice(max_nm: int) -> CheckResult:
    for n, m in _tamari_shapes(max_nm):
        maxima = [class_of(s) for s in _context(n, m).elements
                  if maxclass(s) == s and is_sylv_maximal(s)]
        for c1, c2 in combinations(maxima, 2):
            for op in (meta_join, meta_meet):
                if not is_sylv_maximal(op(c1, c2).canonical):
                    return CheckResult("sublattice", False,
                                       f"({n},{m}) {op.__name__} escapes")
    return CheckResult("sublattice", True, f"shapes {_tamari_shapes(max_nm)}")


def check_split_isomorphism(max_nm: int) -> CheckResult:
    for n, m in _tamari_shapes(max_nm):
        paths = list(enumerate_ballot_paths(n, m))
        splits = {p: split_ballot_path(p) for p in paths}
        if len({tuple(c.to_list()) for c in splits.values()}) != len(paths):
            return CheckResult("split-isomorphism", False,
                               f"({n},{m}) split not injective")
        r = mtamari_lattice(n, m, max_nm=max(max_nm, n * m))
        order = {lab: ups for lab, ups in zip(r.ballot.elements, r.ballot.upsets())}
        idx = {lab: k for k, lab in enumerate(r.ballot.elements)}
        for p in paths:
            for q in paths:
                rot = bool(order[p.steps] >> idx[q.steps] & 1) \
                    if isinstance(order[p.steps], int) else idx[q.steps] in order[p.steps]
                if rot != dyck_chain_leq(splits[p], splits[q]):
                    return CheckResult("split-isomorphism", False,
                                       f"({n},{m}) {p.steps} vs {q.steps}")
    return CheckResult("split-isomorphism", True, f"shapes {_tamari_shapes(max_nm)}")


# ---------------------------------------------------------------------------
# suite registry

SUITES: dict[str, list[Callable[[int], CheckResult]]] = {
    "weak-lattice": [
        check_coinv_invariants, check_cocode_roundtrip, check_covers_vs_leq,
        check_lattice_axioms, check_join_meet_oracle, check_standardize_order,
    ],
    "intervals": [
        check_class_partition, check_congruence_soundness,
        check_interval_property, check_monotonicity, check_nonconverse_witness,
    ],
    "semi-quotient": [
        check_max_stability, check_semi_quotient_join,
        check_meet_counterexample, check_cover_consistency,
    ],
    "bijections": [
        check_tree_roundtrips, check_tree_class_invariance,
        check_tree_inversion_agreement, check_m1_degeneration,
        check_psi_bijection, check_psi_order_iso, check_chain_count_brute,
        check_231_oracles_agree,
    ],
    "tamari": [
        check_sylvester_refinement, check_ballot_counts,
        check_three_realizations, check_quotient_map, check_sublattice,
        check_split_isomorphism,
    ],
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(suite: str, max_nm: int) -> VerifyReport:
    if suite not in SUITE_NAMES:
        raise ShapeMismatch(f"unknown suite {suite!r}")
    names = list(SUITES) if suite == "all" else [suite]
    report = VerifyReport(suite, max_nm)
    for name in names:
        for check in SUITES[name]:
            report.results.append(check(max_nm))
    return report
