"""Free-group action of braid words: the first equality oracle.

Braids on n strands act on the free group F_n = <x_1, ..., x_n>.  The
generator sigma_i is sent to the automorphism

    x_i     |-> x_i x_{i+1} x_i^-1
    x_{i+1} |-> x_i
    x_j     |-> x_j            otherwise,

and sigma_i^-1 to its inverse substitution.  A word acts left-to-right:
the image of a free generator under u v is its image under u with every
letter then substituted through v.  This action is faithful, so two words
are equal as braids exactly when all n generator images agree; that is
what `words_act_equally` decides.  It shares nothing with the Garside
normal form in `normalform`, which keeps the two equality routes
independent.
"""

from __future__ import annotations

from .words import BraidWord, WordError

# A free word is a freely reduced tuple of (generator index 1..n, sign).
FreeWord = tuple[tuple[int, int], ...]


def free_word_reduce(letters) -> FreeWord:
    out: list[tuple[int, int]] = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def free_word_inverse(w: FreeWord) -> FreeWord:
    return tuple((g, -s) for g, s in reversed(w))


def _letter_images(index: int, sign: int) -> dict[int, FreeWord]:
    """Images of the moved generators under one Artin letter."""
    i = index
    if sign == 1:
        return {
            i: ((i, 1), (i + 1, 1), (i, -1)),
            i + 1: ((i, 1),),
        }
    return {
        i: ((i + 1, 1),),
        i + 1: ((i + 1, -1), (i, 1), (i + 1, 1)),
    }


def _substitute(word: FreeWord, images: dict[int, FreeWord]) -> FreeWord:
    out: list[tuple[int, int]] = []
    for g, s in word:
        image = images.get(g)
        if image is None:
            piece: FreeWord = ((g, s),)
        elif s == 1:
            piece = image
        else:
            piece = free_word_inverse(image)
        for letter in piece:
            if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
                out.pop()
            else:
                out.append(letter)
    return tuple(out)


def generator_images(w: BraidWord) -> tuple[FreeWord, ...]:
    """Images of x_1..x_n under the automorphism induced by w.

    Each image is freely reduced, so the returned tuple is a canonical
    description of the automorphism.
    """
    images: list[FreeWord] = [((g, 1),) for g in range(1, w.n + 1)]
    for index, sign in w.letters:
        step = _letter_images(index, sign)
        images = [_substitute(img, step) for img in images]
    return tuple(images)


def words_act_equally(u: BraidWord, v: BraidWord) -> bool:
    """True iff u and v induce the same free-group automorphism."""
    if u.n != v.n:
        raise WordError(f"strand counts differ: {u.n} vs {v.n}")
    return generator_images(u) == generator_images(v)


def action_key(w: BraidWord) -> str:
    """Canonical text for the induced automorphism (for grouping words)."""
    return "|".join(
        ",".join(f"{g * s}" for g, s in img) for img in generator_images(w)
    )
