"""
Closures of braid words as link codes.

A word is a sequence of non-zero integers: ``i`` stands for the generator
acting on strand positions i and i+1 (1-based), ``-i`` for its inverse.
For a positive letter the strand entering from position i+1 passes over;
for a negative letter the strand from position i does. Letter t becomes
crossing t+1.
"""
import random
from typing import List, Sequence

from knotlab.core.errors import ValidationError

from .codes import LinkCode, Pass


def from_braid(word: Sequence[int], strands: int) -> LinkCode:
    """Close a braid word into a link code, components ordered by start position."""
    if strands < 1:
        raise ValidationError(f"need at least one strand, got {strands}")
    for letter in word:
        if letter == 0 or abs(letter) >= strands:
            raise ValidationError(f"generator {letter} invalid on {strands} strands")

    components: List[List[Pass]] = []
    visited = set()
    for start in range(strands):
        if start in visited:
            continue
        component: List[Pass] = []
        pos = start
        while pos not in visited:
            visited.add(pos)
            for t, letter in enumerate(word):
                a = abs(letter) - 1
                if pos not in (a, a + 1):
                    continue
                sign = 1 if letter > 0 else -1
                over = (pos == a + 1) if letter > 0 else (pos == a)
                component.append(Pass(t + 1, over, sign))
                pos = a + 1 if pos == a else a
        components.append(component)
    return LinkCode.build(components)


def random_braid_word(rng: random.Random, strands: int, length: int) -> List[int]:
    return [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(length)]
