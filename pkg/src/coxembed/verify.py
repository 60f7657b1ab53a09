"""Independent verification tools.

Todd-Coxeter coset enumeration (orders, indices, permutation
representations), abelianization via integer Smith normal form,
presentation matching up to generator bijection with inversions, and
per-instance verdict reports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .presentations import EmbeddingInstance, Presentation
from .schreier import check_hom, evaluated_kernel_presentation, image_rank, raw_kernel_presentation, transversal
from .tietze import SimplifyConfig, simplify
from .words import Word, free_reduce, invert, relator_nf

DEFAULT_MAX_COSETS = 50_000


class _Budget(Exception):
    pass


@dataclass(frozen=True)
class CosetTable:
    """Result of a coset enumeration.

    ``status`` is ``complete`` or ``budget-exceeded``.  For complete
    tables, ``fwd[g][c]`` / ``bwd[g][c]`` give the action of generator g
    and its inverse on coset c (0-based; coset 0 is the subgroup), and
    ``num_cosets`` is the index.  ``num_defined`` counts every coset ever
    defined, including ones merged away by coincidences.
    """

    status: str
    num_cosets: Optional[int]
    num_defined: int
    fwd: Optional[Tuple[Tuple[int, ...], ...]]
    bwd: Optional[Tuple[Tuple[int, ...], ...]]
    has_subgroup: bool

    @property
    def complete(self) -> bool:
        return self.status == "complete"


def todd_coxeter(
    pres: Presentation,
    subgroup_words: Sequence[Word] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> CosetTable:
    """HLT-style enumeration of the cosets of the subgroup generated by
    ``subgroup_words`` in the group presented by ``pres``.

    Scans the subgroup words at coset 0, then every relator at every live
    coset in definition order, defining cosets on demand and merging
    coincidences with a union-find (smallest index survives).  Exceeding
    ``max_cosets`` defined cosets is a status, not an error; it is the
    unavoidable outcome for infinite-index inputs.
    """
    ngens = pres.rank
    ncols = 2 * ngens

    def cols(w: Word) -> Tuple[int, ...]:
        out = []
        for l in w:
            g = abs(l) - 1
            if g >= ngens:
                raise ValueError(f"letter {l} outside alphabet of rank {ngens}")
            out.append(2 * g + (0 if l > 0 else 1))
        return tuple(out)

    rel_paths = [cols(r) for r in pres.relators]
    sub_paths = [cols(free_reduce(w)) for w in subgroup_words]

    table = [[-1] * ncols]
    labels = [0]

    def find(c: int) -> int:
        while labels[c] != c:
            labels[c] = labels[labels[c]]
            c = labels[c]
        return c

    def define(c: int, d: int) -> int:
        if len(table) >= max_cosets:
            raise _Budget
        n = len(table)
        labels.append(n)
        table.append([-1] * ncols)
        table[c][d] = n
        table[n][d ^ 1] = c
        return n

    def unify(a: int, b: int) -> None:
        stack = [(a, b)]
        while stack:
            a, b = stack.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            labels[b] = a
            row_a, row_b = table[a], table[b]
            for d in range(ncols):
                nb = row_b[d]
                if nb >= 0:
                    na = row_a[d]
                    if na < 0:
                        row_a[d] = nb
                    else:
                        stack.append((na, nb))

    def scan_and_fill(alpha: int, path: Tuple[int, ...]) -> None:
        # standard two-ended scan: walk defined entries forward from the
        # start and backward from the end, then close the single gap as a
        # deduction, define one coset to shrink a wider gap, or merge the
        # two ends on a complete scan
        f = find(alpha)
        b = f
        i, j = 0, len(path) - 1
        while True:
            while i <= j:
                nxt = table[f][path[i]]
                if nxt < 0:
                    break
                f = find(nxt)
                i += 1
            if i > j:
                if f != b:
                    unify(f, b)
                return
            while j >= i:
                nxt = table[b][path[j] ^ 1]
                if nxt < 0:
                    break
                b = find(nxt)
                j -= 1
            if j < i:
                unify(f, b)
                return
            if j == i:
                d = path[i]
                if table[f][d] >= 0:
                    unify(table[f][d], b)
                elif table[b][d ^ 1] >= 0:
                    unify(table[b][d ^ 1], f)
                else:
                    table[f][d] = b
                    table[b][d ^ 1] = f
                return
            f = define(f, path[i])
            i += 1

    try:
        for path in sub_paths:
            scan_and_fill(0, path)
        i = 0
        while i < len(table):
            if find(i) == i:
                for path in rel_paths:
                    scan_and_fill(i, path)
                    if find(i) != i:
                        break
                if find(i) == i:
                    for d in range(ncols):
                        if table[i][d] < 0:
                            define(i, d)
            i += 1
    except _Budget:
        return CosetTable("budget-exceeded", None, len(table), None, None, bool(sub_paths))

    live = [c for c in range(len(table)) if find(c) == c]
    index_of = {c: k for k, c in enumerate(live)}
    fwd = tuple(
        tuple(index_of[find(table[c][2 * g])] for c in live) for g in range(ngens)
    )
    bwd = tuple(
        tuple(index_of[find(table[c][2 * g + 1])] for c in live) for g in range(ngens)
    )
    result = CosetTable("complete", len(live), len(table), fwd, bwd, bool(sub_paths))
    _assert_closed(result, pres, subgroup_words)
    return result


def _assert_closed(tab: CosetTable, pres: Presentation, subgroup_words: Sequence[Word]) -> None:
    """Completeness invariants: relators trace to the identity at every
    coset and subgroup words fix coset 0."""
    for r in pres.relators:
        for c in range(tab.num_cosets):
            e = c
            for l in r:
                e = tab.fwd[l - 1][e] if l > 0 else tab.bwd[-l - 1][e]
            if e != c:
                raise AssertionError("relator trace does not close")
    for w in subgroup_words:
        e = 0
        for l in free_reduce(w):
            e = tab.fwd[l - 1][e] if l > 0 else tab.bwd[-l - 1][e]
        if e != 0:
            raise AssertionError("subgroup word does not fix coset 0")


def group_order(pres: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> Optional[int]:
    """Order of the presented group, or None when the budget is exceeded."""
    tab = todd_coxeter(pres, (), max_cosets)
    return tab.num_cosets if tab.complete else None


def regular_rep(tab: CosetTable) -> Tuple[Tuple[int, ...], ...]:
    """Generator actions as permutations from a complete, no-subgroup table."""
    if not tab.complete:
        raise ValueError("coset table is incomplete")
    if tab.has_subgroup:
        raise ValueError("regular representation needs an empty subgroup")
    return tab.fwd


def word_holds(rep: Sequence[Sequence[int]], w: Word) -> bool:
    """True iff the permutation product of the word's letters is the identity."""
    npoints = len(rep[0]) if rep else 0
    inverses: Dict[int, Tuple[int, ...]] = {}

    def inv_perm(g: int) -> Tuple[int, ...]:
        if g not in inverses:
            p = rep[g]
            q = [0] * len(p)
            for i, j in enumerate(p):
                q[j] = i
            inverses[g] = tuple(q)
        return inverses[g]

    for start in range(npoints):
        e = start
        for l in w:
            g = abs(l) - 1
            if g >= len(rep):
                raise ValueError(f"letter {l} outside alphabet of rank {len(rep)}")
            e = rep[g][e] if l > 0 else inv_perm(g)[e]
        if e != start:
            return False
    return True


# ---------------------------------------------------------------------------
# Smith normal form and abelianization


def smith_normal_form(rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns ``(d_1, ..., d_k)`` with ``k = min(rows, cols)``, each
    ``d_i >= 0`` and ``d_i | d_{i+1}``, computed by integer row/column
    operations with unit determinant.
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    for row in a:
        if len(row) != n:
            raise ValueError("ragged matrix")
    t = 0
    while t < m and t < n:
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
        if piv is None:
            break
        pi, pj = piv
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            progressed = False
            for i in range(m):
                if i != t and a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        progressed = True
            for j in range(n):
                if j != t and a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        progressed = True
            if progressed:
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
        t += 1
    return tuple(a[i][i] if i < t else 0 for i in range(min(m, n)))


@dataclass(frozen=True)
class AbelianInvariants:
    """Free rank plus torsion coefficients forming a divisibility chain."""

    free_rank: int
    torsion: Tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be >= 0")
        tors = tuple(self.torsion)
        for d in tors:
            if d < 2:
                raise ValueError("torsion coefficients must be >= 2")
        for x, y in zip(tors, tors[1:]):
            if y % x:
                raise ValueError("torsion coefficients must form a divisibility chain")
        object.__setattr__(self, "torsion", tors)


def abelianization(pres: Presentation) -> AbelianInvariants:
    """Invariants of the abelianized group via the exponent-sum matrix."""
    if not pres.relators:
        return AbelianInvariants(pres.rank, ())
    rows = []
    for r in pres.relators:
        row = [0] * pres.rank
        for l in r:
            row[abs(l) - 1] += 1 if l > 0 else -1
        rows.append(row)
    diag = smith_normal_form(rows)
    nonzero = [d for d in diag if d]
    return AbelianInvariants(pres.rank - len(nonzero), tuple(d for d in nonzero if d > 1))


# ---------------------------------------------------------------------------
# presentation matching


def _nf_multiset(relators, mapping=None) -> Tuple[Word, ...]:
    out = []
    for r in relators:
        if mapping is not None:
            r = tuple(
                mapping[abs(l) - 1] if l > 0 else -mapping[abs(l) - 1] for l in r
            )
        out.append(relator_nf(r))
    return tuple(sorted(out))


def match_presentations(p: Presentation, q: Presentation):
    """Search generator bijections composed with per-generator inversion
    for one making the relator normal-form multisets equal.

    Returns a tuple of ``(target index, sign)`` per generator of ``p``, or
    None.  The first match in deterministic order is returned; rank above
    8 is rejected.
    """
    if p.rank != q.rank:
        return None
    n = p.rank
    if n > 8:
        raise ValueError("match search is bounded at rank 8")
    p_nf = [relator_nf(r) for r in p.relators]
    q_set = _nf_multiset(q.relators)
    if tuple(sorted(len(w) for w in p_nf)) != tuple(sorted(len(w) for w in q_set)):
        return None
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            mapping = tuple((perm[g] + 1) * signs[g] for g in range(n))
            if _nf_multiset(p_nf, mapping) == q_set:
                return tuple(zip(perm, signs))
    return None


# ---------------------------------------------------------------------------
# instance verification


@dataclass(frozen=True)
class Budgets:
    max_cosets: int = DEFAULT_MAX_COSETS
    max_passes: int = 100
    max_relator_length: int = 1000

    def __post_init__(self):
        if self.max_cosets <= 0 or self.max_passes <= 0 or self.max_relator_length <= 0:
            raise ValueError("budgets must be positive")


@dataclass
class VerifyReport:
    """Aggregated per-instance checks; verdict passes iff every enabled
    check passes.  Finite checks that exhaust the coset budget are
    reported as skipped, never as failures."""

    family: str
    params: dict
    hom_valid: bool
    image_rank: int
    transversal_size: int
    evaluated_generators: int
    evaluated_relator_nf_match: bool
    raw_generators_after_simplify: int
    raw_matched: bool
    finite: Optional[dict]
    split_section: bool
    verdict: str

    def to_dict(self) -> dict:
        return {
            "instance": {"family": self.family, "params": self.params},
            "hom_valid": self.hom_valid,
            "image_rank": self.image_rank,
            "transversal_size": self.transversal_size,
            "evaluated": {
                "generators": self.evaluated_generators,
                "relator_nf_match": self.evaluated_relator_nf_match,
            },
            "raw": {
                "generators_after_simplify": self.raw_generators_after_simplify,
                "matched": self.raw_matched,
            },
            "finite": self.finite if self.finite is not None else "skipped",
            "split_section": self.split_section,
            "verdict": self.verdict,
        }


def expand_kernel_word(w: Word, defining: Sequence[Word]) -> Word:
    """Substitute each kernel letter by its ambient defining word."""
    parts = []
    for l in w:
        d = defining[abs(l) - 1]
        parts.extend(d if l > 0 else invert(d))
    return free_reduce(parts)


def evaluated_matches_expected(kernel: Presentation, expected: Presentation) -> bool:
    """Relator normal-form multiset equality under the name identification
    between an evaluated kernel and its expected presentation."""
    if sorted(kernel.gens) != sorted(expected.gens):
        return False
    index = {name: k for k, name in enumerate(expected.gens)}
    mapping = tuple(index[name] + 1 for name in kernel.gens)
    remapped = _nf_multiset(kernel.relators, mapping)
    return remapped == _nf_multiset(expected.relators)


def verify_instance(inst: EmbeddingInstance, budgets: Optional[Budgets] = None) -> VerifyReport:
    """Run the full check battery for one embedding instance."""
    b = budgets or Budgets()
    n = inst.hom.n
    hom_valid = check_hom(inst.ambient, inst.hom)
    rank = image_rank(inst.hom)
    trans = transversal(inst.ambient, inst.hom, inst.transversal_gens)

    evaluated = evaluated_kernel_presentation(inst)
    ev_gens = evaluated.presentation.rank
    ev_match = evaluated_matches_expected(evaluated.presentation, inst.expected_kernel)

    raw = raw_kernel_presentation(inst.ambient, inst.hom, inst.transversal_gens)
    cfg = SimplifyConfig(max_passes=b.max_passes, max_relator_length=b.max_relator_length)
    simplified, _ = simplify(raw.presentation, cfg)
    raw_gens = simplified.rank

    def _matches(p: Presentation, q: Presentation) -> bool:
        try:
            return match_presentations(p, q) is not None
        except ValueError:
            return False

    raw_matched = _matches(simplified, inst.expected_kernel)
    if not raw_matched:
        # the expected presentation may carry redundant generators
        # (order-one pair relators) or sign-variant relator classes of
        # involutions; compare canonicalized forms instead
        flip_cfg = SimplifyConfig(
            max_passes=b.max_passes,
            max_relator_length=b.max_relator_length,
            involution_flips=True,
        )
        raw_matched = _matches(
            simplify(simplified, flip_cfg)[0], simplify(inst.expected_kernel, flip_cfg)[0]
        )

    finite: Optional[dict] = None
    finite_ok = True
    ambient_table = todd_coxeter(inst.ambient, (), b.max_cosets)
    if ambient_table.complete:
        kernel_order = group_order(inst.expected_kernel, b.max_cosets)
        index_table = todd_coxeter(inst.ambient, inst.expected_words, b.max_cosets)
        if kernel_order is not None and index_table.complete:
            rep = regular_rep(ambient_table)
            relators_hold = all(
                word_holds(rep, expand_kernel_word(r, inst.expected_words))
                for r in inst.expected_kernel.relators
            )
            ambient_order = ambient_table.num_cosets
            index = index_table.num_cosets
            product_ok = ambient_order == (1 << n) * kernel_order and index == (1 << n)
            finite = {
                "ambient_order": ambient_order,
                "kernel_order": kernel_order,
                "index": index,
                "product_ok": product_ok,
                "relators_hold": relators_hold,
            }
            finite_ok = product_ok and relators_hold

    basis = tuple(1 << i for i in range(n))
    split_images = tuple(inst.hom.images[g] for g in inst.transversal_gens) == basis
    sub = set(inst.transversal_gens)
    split_relators = all(
        inst.hom.word_image(r) == 0
        for r in inst.ambient.relators
        if all(abs(l) - 1 in sub for l in r)
    )
    split_section = split_images and split_relators

    checks = [
        hom_valid,
        rank == n,
        trans.size == (1 << n),
        ev_gens == inst.expected_kernel.rank,
        ev_match,
        raw_matched,
        finite_ok,
        split_section,
    ]
    verdict = "pass" if all(checks) else "fail"
    return VerifyReport(
        family=inst.family,
        params=inst.params,
        hom_valid=hom_valid,
        image_rank=rank,
        transversal_size=trans.size,
        evaluated_generators=ev_gens,
        evaluated_relator_nf_match=ev_match,
        raw_generators_after_simplify=raw_gens,
        raw_matched=raw_matched,
        finite=finite,
        split_section=split_section,
        verdict=verdict,
    )
