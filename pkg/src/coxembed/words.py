"""Free-group words over an indexed alphabet.

A letter is a nonzero integer: ``g + 1`` stands for generator ``g``
(0-based) and ``-(g + 1)`` for its inverse.  A word is a tuple of letters
that is freely reduced; the empty tuple is the identity.  Generator
display names live at the presentation level, so everything here is pure
index arithmetic and all values are immutable.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

Word = Tuple[int, ...]


def letter(gen: int, sign: int = 1) -> int:
    """Encode generator index ``gen`` with the given sign.

    >>> letter(0), letter(2, -1)
    (1, -3)
    """
    if gen < 0:
        raise ValueError("generator index must be >= 0")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return (gen + 1) * sign


def gen_of(let: int) -> int:
    """Generator index of a letter."""
    return abs(let) - 1


def sign_of(let: int) -> int:
    return 1 if let > 0 else -1


def free_reduce(letters: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs to a fixpoint.

    The single-stack pass resolves nested cancellations:

    >>> free_reduce([1, 2, -2, -1, 3])
    (3,)
    """
    out: list[int] = []
    for let in letters:
        if let == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -let:
            out.pop()
        else:
            out.append(let)
    return tuple(out)


def invert(w: Sequence[int]) -> Word:
    """Reverse the word and flip every sign."""
    return tuple(-l for l in reversed(w))


def concat(*words: Sequence[int]) -> Word:
    """Freely reduced juxtaposition of any number of words."""
    joined: list[int] = []
    for w in words:
        joined.extend(w)
    return free_reduce(joined)


def power(w: Sequence[int], k: int) -> Word:
    """k-fold concatenation, ``k >= 0``.  ``power(w, 0)`` is the identity."""
    if k < 0:
        raise ValueError("negative exponent; invert first")
    return free_reduce(tuple(free_reduce(w)) * k)


def commutator(x: Sequence[int], y: Sequence[int]) -> Word:
    """The commutator x y x^-1 y^-1."""
    return concat(x, y, invert(x), invert(y))


def cyclic_reduce(w: Sequence[int]) -> Word:
    """Strip matching first/last letter pairs after free reduction.

    >>> cyclic_reduce([-2, 1, 2])
    (1,)
    """
    v = list(free_reduce(w))
    while len(v) >= 2 and v[0] == -v[-1]:
        v = v[1:-1]
    return tuple(v)


def letter_key(let: int) -> Tuple[int, int]:
    """Total order on letters: generator index ascending, + before -."""
    return (abs(let), 0 if let > 0 else 1)


def word_key(w: Sequence[int]) -> Tuple[Tuple[int, int], ...]:
    return tuple(letter_key(l) for l in w)


def rotations(w: Sequence[int]):
    """All cyclic rotations of ``w`` (just ``w`` itself when empty)."""
    w = tuple(w)
    if not w:
        yield w
        return
    for i in range(len(w)):
        yield w[i:] + w[:i]


def relator_nf(w: Sequence[int]) -> Word:
    """Canonical form of a relator up to rotation and inversion.

    Cyclically reduces ``w``, then returns the minimum over all rotations
    of the result and of its inverse under the letter order of
    :func:`letter_key`.  Constant on the orbit of a word under rotation,
    inversion and free conjugation.
    """
    v = cyclic_reduce(w)
    if not v:
        return ()
    candidates = list(rotations(v)) + list(rotations(invert(v)))
    return min(candidates, key=word_key)
