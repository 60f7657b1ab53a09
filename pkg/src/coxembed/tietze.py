"""Presentation simplification by Tietze transformations.

Relator normalization (canonical form, deduplication, deterministic
ordering) and greedy single-occurrence generator elimination with a
growth bound.  Every step preserves the presented group; the trace
records the steps and carries a defining-word table expressing each
original generator over the survivors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .presentations import Presentation, serialize_word
from .words import Word, concat, free_reduce, invert, relator_nf, word_key


@dataclass(frozen=True)
class SimplifyConfig:
    max_passes: int = 100
    max_relator_length: int = 1000
    eliminate: bool = True
    # rewrite g^-1 to g for generators with a square relator; off by
    # default so relator shapes like [a,b]^2 survive verbatim
    involution_flips: bool = False

    def __post_init__(self):
        if self.max_passes <= 0 or self.max_relator_length <= 0:
            raise ValueError("bounds must be positive")


@dataclass
class SimplifyTrace:
    """Step log plus the defining-word table carried through eliminations.

    ``defining`` maps every original generator name to its expression as
    a word over the surviving generators.
    """

    steps: List[Tuple] = field(default_factory=list)
    defining: Dict[str, str] = field(default_factory=dict)
    bounded: bool = False

    def to_dict(self) -> dict:
        return {
            "steps": [list(s) for s in self.steps],
            "defining": dict(self.defining),
            "bounded": self.bounded,
        }


def normalize_relators(pres: Presentation) -> Presentation:
    """Replace each relator by its normal form, drop empties, dedupe, and
    sort by length then letter order."""
    seen = set()
    out = []
    for r in pres.relators:
        nf = relator_nf(r)
        if nf and nf not in seen:
            seen.add(nf)
            out.append(nf)
    out.sort(key=lambda w: (len(w), word_key(w)))
    return Presentation(pres.gens, tuple(out))


def _flip_involutions(pres: Presentation) -> Presentation:
    """Rewrite ``g^-1`` to ``g`` wherever the square relator ``g g`` is
    present.  Group-preserving (the square witnesses g = g^-1) and lets
    sign-variant relator classes merge under normalization."""
    squares = {r[0] for r in pres.relators if len(r) == 2 and r[0] == r[1] and r[0] > 0}
    if not squares:
        return pres
    rels = tuple(
        tuple(-l if l < 0 and -l in squares else l for l in r) for r in pres.relators
    )
    return Presentation(pres.gens, rels)


def _normalize_step(pres: Presentation) -> Presentation:
    seen = set()
    while pres not in seen:
        seen.add(pres)
        normalized = normalize_relators(pres)
        flipped = _flip_involutions(normalized)
        if flipped == normalized:
            return normalized
        pres = flipped
    return normalize_relators(pres)


def _substitute(w: Word, g: int, replacement: Word) -> Word:
    out: list[int] = []
    for l in w:
        if abs(l) - 1 == g:
            out.extend(replacement if l > 0 else invert(replacement))
        else:
            out.append(l)
    return free_reduce(out)


def _drop_generator(w: Word, g: int) -> Word:
    return tuple(l - 1 if l > g + 1 else (l + 1 if l < -(g + 1) else l) for l in w)


def _solve(r: Word, g: int) -> Word:
    """Solve the relator ``r`` (containing g exactly once) for g."""
    occ = [k for k, l in enumerate(r) if abs(l) - 1 == g]
    if len(occ) != 1:
        raise ValueError(f"generator occurs {len(occ)} times in the relator, need exactly 1")
    k = occ[0]
    u, v = r[:k], r[k + 1 :]
    if r[k] > 0:
        return concat(invert(u), invert(v))
    return concat(v, u)


def _eliminate(pres: Presentation, g: int, r_index: int) -> Tuple[Presentation, Word]:
    r = pres.relators[r_index]
    replacement = _solve(r, g)
    new_rels = []
    for idx, w in enumerate(pres.relators):
        if idx == r_index:
            continue
        new_rels.append(_drop_generator(_substitute(w, g, replacement), g))
    names = pres.gens[:g] + pres.gens[g + 1 :]
    return Presentation(names, tuple(new_rels)), replacement


def eliminate_generator(pres: Presentation, g: int, r_index: int) -> Presentation:
    """Remove generator ``g`` using relator ``r_index``, in which it must
    occur exactly once; the presented group is unchanged."""
    return _eliminate(pres, g, r_index)[0]


def _single_occurrence_gens(r: Word):
    counts: Dict[int, int] = {}
    for l in r:
        counts[abs(l) - 1] = counts.get(abs(l) - 1, 0) + 1
    return sorted(g for g, c in counts.items() if c == 1)


def simplify(pres: Presentation, cfg: Optional[SimplifyConfig] = None) -> Tuple[Presentation, SimplifyTrace]:
    """Iterate relator normalization and bounded greedy elimination.

    At each elimination step the shortest relator with a single-occurrence
    generator is used, choosing within it the generator whose elimination
    least grows the total relator length; eliminations pushing any relator
    past ``max_relator_length`` are rejected.  Stops when no step applies
    or ``max_passes`` is reached (flagged in the trace).  With
    ``involution_flips`` enabled, normalization additionally rewrites
    ``g^-1`` to ``g`` for generators whose square is a relator, merging
    sign-variant relator classes.
    """
    cfg = cfg or SimplifyConfig()
    normalize = _normalize_step if cfg.involution_flips else normalize_relators
    trace = SimplifyTrace()
    # index-based defining words, remapped as generators disappear
    defining: Dict[str, Word] = {name: ((i + 1),) for i, name in enumerate(pres.gens)}

    before = len(pres.relators)
    current = normalize(pres)
    if len(current.relators) != before:
        trace.steps.append(("dedupe", before - len(current.relators)))
    trace.steps.append(("reduce",))

    passes = 0
    while cfg.eliminate and passes < cfg.max_passes:
        chosen = None
        for ri, r in enumerate(current.relators):
            singles = _single_occurrence_gens(r)
            if not singles:
                continue
            total_other = {
                g: sum(1 for w in current.relators for l in w if abs(l) - 1 == g) - 1
                for g in singles
            }
            rep_len = len(r) - 1
            ranked = sorted(singles, key=lambda g: (total_other[g] * (rep_len - 1), g))
            for g in ranked:
                candidate, replacement = _eliminate(current, g, ri)
                if any(len(w) > cfg.max_relator_length for w in candidate.relators):
                    continue
                chosen = (g, ri, candidate, replacement)
                break
            if chosen:
                break
        if not chosen:
            break
        g, ri, candidate, replacement = chosen
        name = current.gens[g]
        trace.steps.append(
            (
                "eliminate",
                name,
                serialize_word(current.relators[ri], current.gens),
                serialize_word(replacement, current.gens),
            )
        )
        for key, w in defining.items():
            defining[key] = _drop_generator(_substitute(w, g, replacement), g)
        emptied = len(current.relators) - 1 - len(candidate.relators)
        if emptied:
            trace.steps.append(("drop-empty", emptied))
        before = len(candidate.relators)
        current = normalize(candidate)
        removed = before - len(current.relators)
        if removed:
            trace.steps.append(("dedupe", removed))
        trace.steps.append(("reduce",))
        passes += 1
    else:
        if cfg.eliminate and any(_single_occurrence_gens(r) for r in current.relators):
            trace.bounded = True

    trace.defining = {
        name: serialize_word(w, current.gens) or "1" for name, w in defining.items()
    }
    return current, trace
