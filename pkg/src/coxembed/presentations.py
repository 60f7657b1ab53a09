"""Presentations, Coxeter matrices and the group-family constructors.

Provides the presentation text DSL (parser and serializer), extended
naturals with ``inf`` labels, Coxeter / power-commutator parameter
objects, homomorphisms onto elementary abelian 2-groups, and the four
embedding-instance builders (``thm1``, ``prop2``, ``klein``, ``artin``)
that bundle an ambient presentation with its expected kernel.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Sequence, Tuple

from .words import (
    Word,
    commutator,
    concat,
    cyclic_reduce,
    free_reduce,
    invert,
    letter,
    power,
)

INF = math.inf

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def is_finite(v) -> bool:
    return v != INF


def extnat_str(v) -> str:
    return "inf" if v == INF else str(v)


def parse_extnat(text: str):
    text = text.strip()
    if text == "inf":
        return INF
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"bad extended-natural entry {text!r}") from None


def parse_vector_text(text: str) -> Tuple:
    """Comma-separated extended naturals, e.g. ``2,3,inf``."""
    return tuple(parse_extnat(part) for part in text.split(","))


def parse_matrix_text(text: str) -> Tuple[Tuple, ...]:
    """One comma-separated row per line; blank lines ignored."""
    rows = []
    for raw in text.splitlines():
        if raw.strip():
            rows.append(parse_vector_text(raw))
    if not rows:
        raise ValueError("empty matrix")
    return tuple(rows)


class ParseError(ValueError):
    """Syntax error in presentation text, with source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# presentation DSL
#
# presentation := "<" genlist "|" relatorlist? ">"
# genlist      := name ("," name)*
# relatorlist  := word ("," word)*
# word         := factor+
# factor       := atom ("^" int)?
# atom         := name | "(" word ")" | "[" word "," word "]"
# "[u,v]" expands to u v u^-1 v^-1; whitespace insignificant.

_PUNCT = "<>|,^()[]"


def _tokenize(text: str):
    tokens = []
    i, line, col = 0, 1, 1
    while i < len(text):
        c = text[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
        elif c in " \t\r":
            i += 1
            col += 1
        elif c in _PUNCT:
            tokens.append((c, c, line, col))
            i += 1
            col += 1
        elif c.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], line, col))
            col += j - i
            i = j
        elif c.isdigit() or (c == "-" and i + 1 < len(text) and text[i + 1].isdigit()):
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), line, col))
            col += j - i
            i = j
        else:
            raise ParseError(f"unexpected character {c!r}", line, col)
    tokens.append(("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2], tok[3])
        return tok

    def fail(self, message: str):
        tok = self.peek()
        raise ParseError(message, tok[2], tok[3])


def _parse_word(p: _Parser, gmap: Dict[str, int]) -> Word:
    factors = [_parse_factor(p, gmap)]
    while p.peek()[0] in ("name", "(", "["):
        factors.append(_parse_factor(p, gmap))
    return concat(*factors)


def _parse_factor(p: _Parser, gmap: Dict[str, int]) -> Word:
    atom = _parse_atom(p, gmap)
    if p.peek()[0] == "^":
        p.next()
        tok = p.expect("int")
        k = tok[1]
        if k < 0:
            return power(invert(atom), -k)
        return power(atom, k)
    return atom


def _parse_atom(p: _Parser, gmap: Dict[str, int]) -> Word:
    tok = p.next()
    if tok[0] == "name":
        if tok[1] not in gmap:
            raise ParseError(f"unknown generator {tok[1]!r}", tok[2], tok[3])
        return (letter(gmap[tok[1]]),)
    if tok[0] == "(":
        w = _parse_word(p, gmap)
        p.expect(")")
        return w
    if tok[0] == "[":
        u = _parse_word(p, gmap)
        p.expect(",")
        v = _parse_word(p, gmap)
        p.expect("]")
        return commutator(u, v)
    raise ParseError(f"expected a word, found {tok[1]!r}", tok[2], tok[3])


@dataclass(frozen=True)
class Presentation:
    """Generator names plus relator words over that alphabet.

    Relators are freely and cyclically reduced at construction; empty
    relators are dropped.  Values are immutable.
    """

    gens: Tuple[str, ...]
    relators: Tuple[Word, ...] = ()

    def __post_init__(self):
        gens = tuple(self.gens)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator name")
        for name in gens:
            if not _NAME_RE.match(name):
                raise ValueError(f"bad generator name {name!r}")
        rels = []
        for w in self.relators:
            for l in w:
                if l == 0 or abs(l) > len(gens):
                    raise ValueError(f"letter {l} outside alphabet of rank {len(gens)}")
            r = cyclic_reduce(w)
            if r:
                rels.append(r)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def rank(self) -> int:
        return len(self.gens)

    def gen_index(self, name: str) -> int:
        try:
            return self.gens.index(name)
        except ValueError:
            raise ValueError(f"unknown generator {name!r}") from None

    def word(self, text: str) -> Word:
        """Parse a bare word in this presentation's alphabet."""
        return parse_word(text, self.gens)

    def word_str(self, w: Sequence[int]) -> str:
        return serialize_word(w, self.gens)

    def rename(self, names: Sequence[str]) -> "Presentation":
        if len(names) != len(self.gens):
            raise ValueError("rename needs one name per generator")
        return Presentation(tuple(names), self.relators)

    def __str__(self) -> str:
        return serialize_presentation(self)


def parse_presentation(text: str) -> Presentation:
    """Parse ``< a, b | a^2, [a,b]^2 >`` style presentation text."""
    p = _Parser(text)
    p.expect("<")
    names = [p.expect("name")[1]]
    while p.peek()[0] == ",":
        p.next()
        names.append(p.expect("name")[1])
    seen = set()
    for name in names:
        if name in seen:
            p.fail(f"duplicate generator name {name!r}")
        seen.add(name)
    gmap = {name: i for i, name in enumerate(names)}
    p.expect("|")
    relators = []
    if p.peek()[0] != ">":
        relators.append(_parse_word(p, gmap))
        while p.peek()[0] == ",":
            p.next()
            relators.append(_parse_word(p, gmap))
    p.expect(">")
    p.expect("end")
    return Presentation(tuple(names), tuple(relators))


def parse_word(text: str, gens: Sequence[str]) -> Word:
    p = _Parser(text)
    gmap = {name: i for i, name in enumerate(gens)}
    w = _parse_word(p, gmap)
    p.expect("end")
    return w


def serialize_word(w: Sequence[int], gens: Sequence[str]) -> str:
    """Space-separated syllable form, e.g. ``a^2 b^-1``."""
    parts = []
    run_letter, run_len = 0, 0
    for l in list(w) + [0]:
        if l == run_letter:
            run_len += 1
            continue
        if run_letter:
            name = gens[gen_of_checked(run_letter, gens)]
            exp = run_len * (1 if run_letter > 0 else -1)
            parts.append(name if exp == 1 else f"{name}^{exp}")
        run_letter, run_len = l, 1
    return " ".join(parts)


def gen_of_checked(l: int, gens: Sequence[str]) -> int:
    g = abs(l) - 1
    if g >= len(gens):
        raise ValueError(f"letter {l} outside alphabet of rank {len(gens)}")
    return g


def serialize_presentation(pres: Presentation) -> str:
    gens = ", ".join(pres.gens)
    rels = ", ".join(serialize_word(w, pres.gens) for w in pres.relators)
    if rels:
        return f"< {gens} | {rels} >"
    return f"< {gens} | >"


# ---------------------------------------------------------------------------
# parameter objects


def _check_symmetric(entries, minimum, what):
    n = len(entries)
    for i, row in enumerate(entries):
        if len(row) != n:
            raise ValueError(f"{what} must be square")
        for j, v in enumerate(row):
            if i == j:
                continue
            if v != entries[j][i]:
                raise ValueError(f"{what} must be symmetric")
            if v != INF and (not isinstance(v, int) or v < minimum):
                raise ValueError(f"{what} entries must be >= {minimum} or inf, got {v!r}")


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of edge labels ``m_ij >= 2`` or inf; diagonal 1."""

    entries: Tuple[Tuple, ...]

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        _check_symmetric(entries, 2, "Coxeter matrix")
        entries = tuple(
            tuple(1 if i == j else v for j, v in enumerate(row))
            for i, row in enumerate(entries)
        )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows) -> "CoxeterMatrix":
        """Build from raw rows, ignoring whatever is on the diagonal."""
        rows = tuple(tuple(r) for r in rows)
        return cls(tuple(
            tuple(1 if i == j else v for j, v in enumerate(row))
            for i, row in enumerate(rows)
        ))

    @classmethod
    def from_pairs(cls, n: int, labels: Dict[Tuple[int, int], object], default=2) -> "CoxeterMatrix":
        rows = [[default] * n for _ in range(n)]
        for (i, j), m in labels.items():
            rows[i][j] = m
            rows[j][i] = m
        return cls.from_rows(rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int):
        return self.entries[i][j]

    def pairs(self):
        """Yield ``(i, j, m_ij)`` for i < j."""
        for i in range(self.n):
            for j in range(i + 1, self.n):
                yield i, j, self.entries[i][j]

    @property
    def is_even(self) -> bool:
        return all(m == INF or m % 2 == 0 for _, _, m in self.pairs())

    def rows_str(self):
        return [[extnat_str(v) for v in row] for row in self.entries]


@dataclass(frozen=True)
class PcSpec:
    """Rank, commutator powers ``n_ij >= 1`` or inf, generator orders.

    Generator orders ``p_i`` may be any integer >= 1 or inf; note that an
    order of 1 kills its generator, which the presentation constructor
    accepts but the embedding builders reject.
    """

    powers: Tuple[Tuple, ...]
    orders: Tuple

    def __post_init__(self):
        powers = tuple(tuple(row) for row in self.powers)
        _check_symmetric(powers, 1, "commutator-power matrix")
        powers = tuple(
            tuple(INF if i == j else v for j, v in enumerate(row))
            for i, row in enumerate(powers)
        )
        orders = tuple(self.orders)
        if len(orders) != len(powers):
            raise ValueError("need one generator order per generator")
        for p in orders:
            if p != INF and (not isinstance(p, int) or p < 1):
                raise ValueError(f"generator order must be >= 1 or inf, got {p!r}")
        object.__setattr__(self, "powers", powers)
        object.__setattr__(self, "orders", orders)

    @classmethod
    def from_rows(cls, rows, orders) -> "PcSpec":
        rows = tuple(tuple(r) for r in rows)
        fixed = tuple(
            tuple(INF if i == j else v for j, v in enumerate(row))
            for i, row in enumerate(rows)
        )
        return cls(fixed, tuple(orders))

    @classmethod
    def from_pairs(cls, n: int, powers: Dict[Tuple[int, int], object], orders, default=INF) -> "PcSpec":
        rows = [[default] * n for _ in range(n)]
        for (i, j), v in powers.items():
            rows[i][j] = v
            rows[j][i] = v
        return cls.from_rows(rows, orders)

    @property
    def n(self) -> int:
        return len(self.powers)

    def pairs(self):
        for i in range(self.n):
            for j in range(i + 1, self.n):
                yield i, j, self.powers[i][j]


@dataclass(frozen=True)
class RewriteRules:
    """Involution letters, commuting pairs and a total letter order.

    Encodes exactly the relations used to evaluate Schreier words inside
    the ambient group: squares of involutions and commutations.
    """

    involutions: frozenset
    commuting: frozenset
    letter_order: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.letter_order)
        if sorted(self.letter_order) != list(range(n)):
            raise ValueError("letter order must be a permutation of the generators")
        for g in self.involutions:
            if not 0 <= g < n:
                raise ValueError(f"involution letter {g} outside alphabet")
        pairs = set()
        for pair in self.commuting:
            a, b = pair
            if a == b:
                raise ValueError("commuting pair must contain two distinct generators")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"commuting pair {pair} outside alphabet")
            pairs.add((min(a, b), max(a, b)))
        object.__setattr__(self, "involutions", frozenset(self.involutions))
        object.__setattr__(self, "commuting", frozenset(pairs))
        object.__setattr__(self, "letter_order", tuple(self.letter_order))

    def rank_of(self) -> Dict[int, int]:
        return {g: k for k, g in enumerate(self.letter_order)}


@dataclass(frozen=True)
class HomZ2n:
    """Generator-wise map onto (a subgroup of) ``Z_2^n``.

    Images are bitmasks; the image of a word is the XOR of its letters'
    images, signs irrelevant mod 2.
    """

    n: int
    images: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        images = tuple(self.images)
        for v in images:
            if not 0 <= v < (1 << self.n):
                raise ValueError(f"image {v} outside Z_2^{self.n}")
        object.__setattr__(self, "images", images)

    def word_image(self, w: Sequence[int]) -> int:
        v = 0
        for l in w:
            g = abs(l) - 1
            if g >= len(self.images):
                raise ValueError("missing generator image")
            v ^= self.images[g]
        return v

    def bits(self, v: int) -> str:
        return "".join("1" if (v >> i) & 1 else "0" for i in range(self.n))


def gf2_rank(vectors: Iterable[int]) -> int:
    """Rank over GF(2) of a set of bitmask vectors."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


@dataclass(frozen=True)
class EmbeddingInstance:
    """An ambient presentation bundled with a hom onto ``Z_2^n``, the
    transversal generator subset, rewrite rules, and the expected kernel
    with the defining words of its generators."""

    family: str
    ambient: Presentation
    hom: HomZ2n
    transversal_gens: Tuple[int, ...]
    rules: RewriteRules
    expected_kernel: Presentation
    expected_words: Tuple[Word, ...]
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.hom.images) != self.ambient.rank:
            raise ValueError("hom must cover every ambient generator")
        for r in self.ambient.relators:
            if self.hom.word_image(r) != 0:
                raise ValueError("hom does not kill every ambient relator")
        if len(self.expected_words) != self.expected_kernel.rank:
            raise ValueError("one expected word per expected kernel generator")
        sub = [self.hom.images[g] for g in self.transversal_gens]
        if gf2_rank(sub) != gf2_rank(self.hom.images):
            raise ValueError("transversal generators do not span the image")
        object.__setattr__(self, "transversal_gens", tuple(self.transversal_gens))
        object.__setattr__(self, "expected_words", tuple(tuple(w) for w in self.expected_words))


# ---------------------------------------------------------------------------
# family constructors


def _names(prefix: str, n: int) -> Tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(n))


def coxeter_presentation(matrix: CoxeterMatrix) -> Presentation:
    """Generators ``s_i`` with ``s_i^2`` and ``(s_i s_j)^{m_ij}`` relators.

    Infinite labels contribute no relator.
    """
    n = matrix.n
    rels = [power((letter(i),), 2) for i in range(n)]
    for i, j, m in matrix.pairs():
        if is_finite(m):
            rels.append(power((letter(i), letter(j)), m))
    return Presentation(_names("s", n), tuple(rels))


def pc_presentation(spec: PcSpec) -> Presentation:
    """Generators ``g_i`` with ``[g_i,g_j]^{n_ij}`` and ``g_i^{p_i}`` relators."""
    n = spec.n
    rels = []
    for i, j, nij in spec.pairs():
        if is_finite(nij):
            rels.append(power(commutator((letter(i),), (letter(j),)), nij))
    for i, p in enumerate(spec.orders):
        if is_finite(p):
            rels.append(power((letter(i),), p))
    return Presentation(_names("g", n), tuple(rels))


def _alternating(i: int, j: int, m: int) -> Word:
    return tuple(letter(i if k % 2 == 0 else j) for k in range(m))


def artin_presentation(matrix: CoxeterMatrix) -> Presentation:
    """Generators ``a_i`` with braid relators ``(a_i a_j a_i ...)(a_j a_i a_j ...)^-1``,
    ``m_ij`` letters per block, for finite labels only."""
    n = matrix.n
    rels = []
    for i, j, m in matrix.pairs():
        if is_finite(m):
            rels.append(concat(_alternating(i, j, m), invert(_alternating(j, i, m))))
    return Presentation(_names("a", n), tuple(rels))


def _double_names(n: int) -> Tuple[str, ...]:
    return _names("r", n) + _names("s", n)


def _double_relators(matrix: CoxeterMatrix, orders) -> Tuple[Word, ...]:
    """Relators of the rank-2n ambient: involutions, commuting copies,
    ``(s_i s_j)^{m_ij}`` and ``(s_i r_i)^{p_i}``."""
    n = matrix.n
    r = lambda i: letter(i)
    s = lambda i: letter(n + i)
    rels = [power((r(i),), 2) for i in range(n)]
    rels += [power((s(i),), 2) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rels.append(power((r(i), r(j)), 2))
    for i in range(n):
        for j in range(n):
            if i != j:
                rels.append(power((r(i), s(j)), 2))
    for i, j, m in matrix.pairs():
        if is_finite(m):
            rels.append(power((s(i), s(j)), m))
    for i, p in enumerate(orders):
        if is_finite(p):
            rels.append(power((s(i), r(i)), p))
    return tuple(rels)


def _double_rules(n: int) -> RewriteRules:
    commuting = set()
    for i in range(n):
        for j in range(i + 1, n):
            commuting.add((i, j))
    for i in range(n):
        for j in range(n):
            if i != j:
                commuting.add((min(i, n + j), max(i, n + j)))
    return RewriteRules(
        involutions=frozenset(range(2 * n)),
        commuting=frozenset(commuting),
        letter_order=tuple(range(2 * n)),
    )


def _check_orders(orders, n: int, minimum: int = 2):
    orders = tuple(orders)
    if len(orders) != n:
        raise ValueError(f"need {n} generator orders, got {len(orders)}")
    for p in orders:
        if p != INF and (not isinstance(p, int) or p < minimum):
            raise ValueError(f"generator order must be >= {minimum} or inf, got {p!r}")
    return orders


def _matrix_params(matrix: CoxeterMatrix, orders=None) -> dict:
    params = {"m": [[v if v != INF else "inf" for v in row] for row in matrix.entries]}
    if orders is not None:
        params["p"] = [p if p != INF else "inf" for p in orders]
    return params


def build_thm1_instance(matrix: CoxeterMatrix, orders) -> EmbeddingInstance:
    """Even-label double construction whose kernel is a power-commutator
    group with powers ``m_ij / 2`` and the given generator orders."""
    if not matrix.is_even:
        raise ValueError("all finite labels must be even")
    n = matrix.n
    orders = _check_orders(orders, n)
    ambient = Presentation(_double_names(n), _double_relators(matrix, orders))
    hom = HomZ2n(n, tuple(1 << i for i in range(n)) * 2)
    halved = [[INF] * n for _ in range(n)]
    for i, j, m in matrix.pairs():
        if is_finite(m):
            halved[i][j] = halved[j][i] = m // 2
    expected = pc_presentation(PcSpec.from_rows(halved, orders)).rename(_names("a", n))
    expected_words = tuple((letter(n + i), letter(i)) for i in range(n))
    return EmbeddingInstance(
        family="thm1",
        ambient=ambient,
        hom=hom,
        transversal_gens=tuple(range(n)),
        rules=_double_rules(n),
        expected_kernel=expected,
        expected_words=expected_words,
        params=_matrix_params(matrix, orders),
    )


def build_prop2_instance(matrix: CoxeterMatrix, orders) -> EmbeddingInstance:
    """Double construction over any Coxeter matrix, even generator orders;
    the kernel is again a Coxeter group on ``s_i`` and ``t_i = r_i s_i r_i``."""
    n = matrix.n
    orders = _check_orders(orders, n)
    for p in orders:
        if p != INF and p % 2 != 0:
            raise ValueError("finite generator orders must be even")
    ambient = Presentation(_double_names(n), _double_relators(matrix, orders))
    hom = HomZ2n(n, tuple(1 << i for i in range(n)) + (0,) * n)
    s = lambda i: letter(i)
    t = lambda i: letter(n + i)
    rels = [power((s(i),), 2) for i in range(n)]
    rels += [power((t(i),), 2) for i in range(n)]
    for i, p in enumerate(orders):
        if is_finite(p):
            rels.append(power((s(i), t(i)), p // 2))
    for i, j, m in matrix.pairs():
        if is_finite(m):
            rels.append(power((s(i), s(j)), m))
    for i in range(n):
        for j in range(n):
            if i != j and is_finite(matrix.entry(i, j)):
                rels.append(power((s(i), t(j)), matrix.entry(i, j)))
    for i, j, m in matrix.pairs():
        if is_finite(m):
            rels.append(power((t(i), t(j)), m))
    expected = Presentation(_names("s", n) + _names("t", n), tuple(rels))
    amb_r = lambda i: letter(i)
    amb_s = lambda i: letter(n + i)
    expected_words = tuple((amb_s(i),) for i in range(n)) + tuple(
        (amb_r(i), amb_s(i), amb_r(i)) for i in range(n)
    )
    return EmbeddingInstance(
        family="prop2",
        ambient=ambient,
        hom=hom,
        transversal_gens=tuple(range(n)),
        rules=_double_rules(n),
        expected_kernel=expected,
        expected_words=expected_words,
        params=_matrix_params(matrix, orders),
    )


def build_klein_instance() -> EmbeddingInstance:
    """Product of two infinite dihedral groups mapping onto ``Z_2^2`` with
    the Klein bottle group as kernel."""
    gens = ("r1", "s1", "r2", "s2")
    r1, s1, r2, s2 = (letter(i) for i in range(4))
    rels = [
        power((r1,), 2),
        power((s1,), 2),
        power((r2,), 2),
        power((s2,), 2),
        power((r1, r2), 2),
        power((r1, s2), 2),
        power((s1, r2), 2),
        power((s1, s2), 2),
    ]
    ambient = Presentation(gens, tuple(rels))
    hom = HomZ2n(2, (0b01, 0b11, 0b10, 0b10))
    rules = RewriteRules(
        involutions=frozenset(range(4)),
        commuting=frozenset({(0, 2), (0, 3), (1, 2), (1, 3)}),
        letter_order=(0, 1, 2, 3),
    )
    expected = Presentation(("a", "b"), (free_reduce((-1, 2, 1, 2)),))
    expected_words = ((s1, r1, r2), (s2, r2))
    return EmbeddingInstance(
        family="klein",
        ambient=ambient,
        hom=hom,
        transversal_gens=(0, 2),
        rules=rules,
        expected_kernel=expected,
        expected_words=expected_words,
        params={},
    )


def build_artin_instance(matrix: CoxeterMatrix) -> EmbeddingInstance:
    """Involution-generated ambient with relators ``w(i,j) w(j,i)^-1`` whose
    kernel is the Artin group of the matrix.  The braid-type relators make
    this a generalized Coxeter presentation rather than a Coxeter one."""
    n = matrix.n
    r = lambda i: letter(i)
    s = lambda i: letter(n + i)

    def braid_word(i: int, j: int, m: int) -> Word:
        out = []
        for k in range(m):
            idx = i if k % 2 == 0 else j
            out.extend((s(idx), r(idx)))
        return tuple(out)

    rels = [power((r(i),), 2) for i in range(n)]
    rels += [power((s(i),), 2) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rels.append(commutator((r(i),), (r(j),)))
    for i in range(n):
        for j in range(n):
            if i != j:
                rels.append(commutator((r(i),), (s(j),)))
    for i, j, m in matrix.pairs():
        if is_finite(m):
            rels.append(concat(braid_word(i, j, m), invert(braid_word(j, i, m))))
    ambient = Presentation(_double_names(n), tuple(rels))
    hom = HomZ2n(n, tuple(1 << i for i in range(n)) * 2)
    expected = artin_presentation(matrix)
    expected_words = tuple((s(i), r(i)) for i in range(n))
    return EmbeddingInstance(
        family="artin",
        ambient=ambient,
        hom=hom,
        transversal_gens=tuple(range(n)),
        rules=_double_rules(n),
        expected_kernel=expected,
        expected_words=expected_words,
        params=_matrix_params(matrix),
    )
