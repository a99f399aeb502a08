"""Permutations in one-line notation and their descent-based statistics.

A permutation of [n] = {1, ..., n} is a tuple of the values pi_1, ..., pi_n.
Positions and values are both 1-based in every public set.  Wherever a letter
is classified by its neighbours, the boundary convention pi_0 = pi_{n+1} = 0
applies.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

Perm = tuple[int, ...]


class InvalidPermutationError(ValueError):
    """The given word is not a permutation of {1, ..., n}."""


def as_permutation(word: Iterable[int]) -> Perm:
    """Validate a word and return it as a permutation tuple.

    >>> as_permutation([2, 1, 3])
    (2, 1, 3)
    """
    p = tuple(int(v) for v in word)
    if len(p) < 1:
        raise InvalidPermutationError("a permutation must have length >= 1")
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InvalidPermutationError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def all_permutations(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def inverse(p: Perm) -> Perm:
    """The group inverse: the word q with q[p_i] = i.

    >>> inverse((2, 3, 5, 4, 1, 9, 7, 8, 6))
    (5, 1, 2, 4, 3, 9, 7, 8, 6)
    """
    q = [0] * len(p)
    for i, v in enumerate(p, start=1):
        q[v - 1] = i
    return tuple(q)


def descent_positions(p: Perm) -> frozenset[int]:
    """Positions i in [n-1] with p_i > p_{i+1}."""
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def descent_tops(p: Perm) -> frozenset[int]:
    """The larger value p_i of each descent."""
    return frozenset(p[i - 1] for i in range(1, len(p)) if p[i - 1] > p[i])


def descent_bottoms(p: Perm) -> frozenset[int]:
    """The smaller value p_{i+1} of each descent."""
    return frozenset(p[i] for i in range(1, len(p)) if p[i - 1] > p[i])


@dataclass(frozen=True)
class StatProfile:
    """Descent statistics of a permutation and of its inverse.

    ``dt_mod_set`` holds the descent tops each lowered by one, so it lives in
    [n-1] like the descent positions do.  ``dt_hat_set`` is the variant
    (DT u {p_n}) \\ {n}, which also lives in [n-1]; it has the same size as
    ``dt_set`` because n is a descent top exactly when p_n != n.
    """

    des_set: frozenset[int]
    dt_set: frozenset[int]
    db_set: frozenset[int]
    dt_mod_set: frozenset[int]
    dt_hat_set: frozenset[int]
    ides_set: frozenset[int]
    idt_set: frozenset[int]
    idb_set: frozenset[int]
    idt_mod_set: frozenset[int]
    des: int
    maj: int
    imaj_b: int
    imaj_t: int


def stat_profile(p: Perm) -> StatProfile:
    """All descent sets of p and of its inverse, plus the three major indices."""
    n = len(p)
    q = inverse(p)
    des = descent_positions(p)
    dt = descent_tops(p)
    db = descent_bottoms(p)
    ides = descent_positions(q)
    idt = descent_tops(q)
    idb = descent_bottoms(q)
    dt_mod = frozenset(v - 1 for v in dt)
    idt_mod = frozenset(v - 1 for v in idt)
    dt_hat = frozenset((dt | {p[-1]}) - {n})
    return StatProfile(
        des_set=des,
        dt_set=dt,
        db_set=db,
        dt_mod_set=dt_mod,
        dt_hat_set=dt_hat,
        ides_set=ides,
        idt_set=idt,
        idb_set=idb,
        idt_mod_set=idt_mod,
        des=len(des),
        maj=sum(des),
        imaj_b=sum(idb),
        imaj_t=sum(idt_mod),
    )


class LetterClass(Enum):
    VALLEY = "valley"
    PEAK = "peak"
    DOUBLE_DESCENT = "double_descent"
    DOUBLE_ASCENT = "double_ascent"


def classify_letters(p: Perm) -> tuple[LetterClass, ...]:
    """Class of each letter i in [n-1] from the neighbours of its position.

    Entry i-1 describes letter i; the largest letter n is excluded.  With
    pi_0 = pi_{n+1} = 0, letter i is a valley if both neighbours are larger,
    a peak if both are smaller (zero counts as smaller), and a double
    descent/ascent if it is passed downwards/upwards.
    """
    n = len(p)
    pos = {v: i for i, v in enumerate(p)}
    out = []
    for i in range(1, n):
        k = pos[i]
        left = p[k - 1] if k >= 1 else 0
        right = p[k + 1] if k + 1 < n else 0
        if left > i and right > i:
            out.append(LetterClass.VALLEY)
        elif left < i and right < i:
            out.append(LetterClass.PEAK)
        elif left > i > right:
            out.append(LetterClass.DOUBLE_DESCENT)
        else:
            out.append(LetterClass.DOUBLE_ASCENT)
    return tuple(out)


def is_baxter(p: Perm) -> bool:
    """Whether p avoids the vincular patterns 2-41-3 and 3-14-2.

    Both patterns pin "41" (resp. "14") to an adjacent pair and ask for one
    earlier and one later letter strictly between the pair values, ordered
    against the pair.  For each adjacent pair it therefore suffices to scan
    the prefix for the most extreme in-window letter and the suffix for a
    partner, which keeps the whole check at O(n^2).

    >>> is_baxter((2, 4, 1, 3))
    False
    >>> is_baxter((2, 3, 5, 4, 1, 9, 7, 8, 6))
    True
    """
    n = len(p)
    for j in range(n - 1):
        a, b = p[j], p[j + 1]
        if a > b:
            # 2-41-3: some earlier x and later y with b < x < y < a
            best = None
            for i in range(j):
                if b < p[i] < a and (best is None or p[i] < best):
                    best = p[i]
            if best is not None and any(best < p[k] < a for k in range(j + 2, n)):
                return False
        else:
            # 3-14-2: some earlier x and later y with a < y < x < b
            best = None
            for i in range(j):
                if a < p[i] < b and (best is None or p[i] > best):
                    best = p[i]
            if best is not None and any(a < p[k] < best for k in range(j + 2, n)):
                return False
    return True


def is_baxter_bruteforce(p: Perm) -> bool:
    """Quadruple-loop transcription of the pattern definition.

    Kept as a differential-testing oracle for :func:`is_baxter`; do not use
    it on anything large.
    """
    n = len(p)
    for j in range(n - 1):
        for i in range(j):
            for k in range(j + 2, n):
                if p[j + 1] < p[i] < p[k] < p[j]:
                    return False
                if p[j] < p[k] < p[i] < p[j + 1]:
                    return False
    return True


def left_to_right_maxima(p: Perm) -> tuple[int, ...]:
    """Positions of the letters larger than everything before them."""
    out = []
    seen = 0
    for i, v in enumerate(p, start=1):
        if v > seen:
            out.append(i)
            seen = v
    return tuple(out)


def right_to_left_maxima(p: Perm) -> tuple[int, ...]:
    """Positions of the letters larger than everything after them."""
    out = []
    seen = 0
    for i in range(len(p), 0, -1):
        if p[i - 1] > seen:
            out.append(i)
            seen = p[i - 1]
    return tuple(sorted(out))


def insertion_slots(p: Perm) -> tuple[int, ...]:
    """1-based positions where the next maximum may be inserted.

    Allowed slots sit immediately before a left-to-right maximum or
    immediately after a right-to-left maximum.  The two slot families are
    disjoint: a slot between p_{i} and p_{i+1} would need p_i to beat every
    later letter and p_{i+1} to beat every earlier one at once.
    """
    slots = [j for j in left_to_right_maxima(p)]
    slots += [i + 1 for i in right_to_left_maxima(p)]
    return tuple(sorted(slots))


def generate_baxter(n: int) -> list[Perm]:
    """All Baxter permutations of [n], without filtering.

    Grown by repeatedly inserting the new maximum m into every allowed slot
    of every permutation of the previous generation.  The order is
    deterministic: breadth-first over parents, slots taken left to right.

    >>> generate_baxter(3)[:3]
    [(3, 2, 1), (2, 3, 1), (2, 1, 3)]
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    level: list[Perm] = [(1,)]
    for m in range(2, n + 1):
        level = [
            s[: pos - 1] + (m,) + s[pos - 1 :]
            for s in level
            for pos in insertion_slots(s)
        ]
    return level


@dataclass(frozen=True)
class ShapeFlags:
    alternating: bool
    reverse_alternating: bool
    genocchi: bool


def shape_flags(p: Perm) -> ShapeFlags:
    """Alternating / reverse-alternating / Genocchi tests.

    Alternating means the descents sit exactly at the even positions of
    [n-1], reverse alternating at the odd ones.  Genocchi uses the pointwise
    rule: every step descends exactly when its left letter is even.  For
    n = 1 there is nothing to compare, so all three flags are vacuously true.
    """
    n = len(p)
    des = descent_positions(p)
    evens = frozenset(range(2, n, 2))
    odds = frozenset(range(1, n, 2))
    genocchi = all((p[i] > p[i + 1]) == (p[i] % 2 == 0) for i in range(n - 1))
    return ShapeFlags(des == evens, des == odds, genocchi)
