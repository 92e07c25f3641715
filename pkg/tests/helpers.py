"""Shared generators for the property tests.  Everything is seeded so
failures replay exactly."""

import itertools
import random

from codecat import Code


def random_code(rng: random.Random, n: int, max_words: int,
                force_empty_word: bool = False) -> Code:
    """A nonempty code on [n] with at most max_words words."""
    universe = list(range(1 << n))
    k = rng.randint(1, min(max_words, len(universe)))
    words = set(rng.sample(universe, k))
    if force_empty_word:
        words.add(0)
    return Code(n, words)


def random_codes(count: int, seed: int, n: int, max_words: int, **kw):
    rng = random.Random(seed)
    return [random_code(rng, n, max_words, **kw) for _ in range(count)]


def intersection_closure(code: Code) -> Code:
    masks = set(code.mask_set)
    frontier = True
    while frontier:
        frontier = False
        for a, b in itertools.combinations(sorted(masks), 2):
            if a & b not in masks:
                masks.add(a & b)
                frontier = True
    return Code(code.n, masks)


def all_nonempty_codes(n: int, max_words: int):
    """Every code on [n] with 1..max_words words, as Code objects."""
    universe = list(range(1 << n))
    for k in range(1, max_words + 1):
        for combo in itertools.combinations(universe, k):
            yield Code(n, combo)


def induced_image_words(code: Code, trunk_members_list) -> set[int]:
    """Word masks of the map c -> {j : c in T_j}, computed with plain bit
    twiddling (kept separate from the library's Morphism machinery so the
    enumeration tests have an independent reference)."""
    out = set()
    for c in code.mask_set:
        w = 0
        for j, members in enumerate(trunk_members_list):
            if c in members:
                w |= 1 << j
        out.add(w)
    return out
