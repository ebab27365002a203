"""Brute-force ground truth: exhaustive enumerators kept too simple to be wrong.

Three independent oracles cross-check the recurrence table and the series
coefficients:

* weighted Dyck paths, by filtering all 2^n step sequences;
* walks on an explicitly built truncated tree, by pushing a count
  distribution one step at a time;
* products of free-group generators, by enumerating all (2g)^n words and
  freely reducing each one.

Each enumeration refuses inputs whose state space exceeds ``max_states``
(default 10^7) with :class:`FeasibilityError`: these are desk-scale
verification tools, not production counters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .recurrence import WeightConfig

__all__ = [
    "DEFAULT_MAX_STATES",
    "FeasibilityError",
    "LatticePath",
    "TruncatedTree",
    "weight_and_poids",
    "irreducible_components",
    "enumerate_dyck",
    "tree_walk_count",
    "tree_walk_distribution",
    "reduce_word",
    "is_reduced",
    "free_group_count",
]

DEFAULT_MAX_STATES = 10_000_000


class FeasibilityError(RuntimeError):
    """An exhaustive enumeration was refused because its state space is too big."""


@dataclass(frozen=True)
class LatticePath:
    """A U/D step sequence whose running height never goes negative."""

    steps: str

    def __post_init__(self) -> None:
        height = 0
        for k, step in enumerate(self.steps):
            if step == "U":
                height += 1
            elif step == "D":
                height -= 1
            else:
                raise ValueError(f"step {k} is {step!r}; only 'U' and 'D' are allowed")
            if height < 0:
                raise ValueError(f"path {self.steps!r} dips below the x-axis after step {k}")

    def __len__(self) -> int:
        return len(self.steps)

    def heights(self) -> list[int]:
        """Height after each step (length == number of steps)."""
        out = []
        height = 0
        for step in self.steps:
            height += 1 if step == "U" else -1
            out.append(height)
        return out

    @property
    def final_height(self) -> int:
        return self.steps.count("U") - self.steps.count("D")


def weight_and_poids(path: LatticePath, weights: WeightConfig) -> tuple[Fraction, Fraction]:
    """(weight, poids) of a path: c1 per U; c2 per D, or c3 when the D lands
    at height 0.  The t-exponent is implicit in the path length."""
    weight = Fraction(1)
    poids = Fraction(1)
    height = 0
    for step in path.steps:
        if step == "U":
            height += 1
            weight *= weights.c1
            poids *= weights.c1
        else:
            height -= 1
            weight *= weights.c2
            poids *= weights.c3 if height == 0 else weights.c2
    return weight, poids


def irreducible_components(path: LatticePath) -> list[LatticePath]:
    """Split an axis-ending path at its returns to height 0.

    Each component starts and ends on the axis and stays strictly above it
    in between; their concatenation is the original path.
    """
    if path.final_height != 0:
        raise ValueError(f"path {path.steps!r} ends at height {path.final_height}, not 0")
    components = []
    height = 0
    start = 0
    for k, step in enumerate(path.steps):
        height += 1 if step == "U" else -1
        if height == 0:
            components.append(LatticePath(path.steps[start : k + 1]))
            start = k + 1
    return components


@lru_cache(maxsize=None)
def _poids_by_end_height(weights: WeightConfig, n: int) -> dict[int, Fraction]:
    """Sum of poids over all valid length-n paths, keyed by final height."""
    sums: dict[int, Fraction] = {}
    for steps in itertools.product("UD", repeat=n):
        height = 0
        poids = Fraction(1)
        valid = True
        for step in steps:
            if step == "U":
                height += 1
                poids *= weights.c1
            else:
                height -= 1
                if height < 0:
                    valid = False
                    break
                poids *= weights.c3 if height == 0 else weights.c2
        if valid:
            sums[height] = sums.get(height, Fraction(0)) + poids
    return sums


def enumerate_dyck(
    weights: WeightConfig, i: int, n: int, max_states: int = DEFAULT_MAX_STATES
) -> Fraction:
    """Poids-sum over all valid length-n paths ending at height i.

    Iterates over all 2^n step sequences and filters, on purpose: the point
    of this oracle is independence from any counting cleverness under test.
    """
    if i < 0 or n < 0:
        raise ValueError("height and length must be non-negative")
    if 2**n > max_states:
        raise FeasibilityError(f"2^{n} step sequences exceed the ceiling of {max_states}")
    return _poids_by_end_height(weights, n).get(i, Fraction(0))


class TruncatedTree:
    """The m-regular tree, explicitly built out to a fixed depth.

    The root has m children and every deeper internal vertex has m-1, so
    each vertex has degree m once its parent is counted.  Vertices are
    numbered in construction order, level by level, left to right.
    """

    def __init__(self, m: int, depth: int):
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"tree degree must be an integer >= 1, got {m!r}")
        if depth < 0:
            raise ValueError("depth must be >= 0")
        self.m = m
        self.depth = depth
        self.parent: list[int | None] = [None]
        self.children: list[list[int]] = [[]]
        self.distance: list[int] = [0]
        self.levels: list[list[int]] = [[0]]
        for d in range(1, depth + 1):
            level: list[int] = []
            for v in self.levels[d - 1]:
                fanout = m if v == 0 else m - 1
                for _ in range(fanout):
                    w = len(self.parent)
                    self.parent.append(v)
                    self.children.append([])
                    self.distance.append(d)
                    self.children[v].append(w)
                    level.append(w)
            self.levels.append(level)

    def vertex_count(self) -> int:
        return len(self.parent)

    def neighbors(self, v: int) -> list[int]:
        parent = self.parent[v]
        return self.children[v] if parent is None else [parent, *self.children[v]]


def _tree_size(m: int, depth: int) -> int:
    total = 1
    level = 0
    for d in range(1, depth + 1):
        level = m if d == 1 else level * (m - 1)
        total += level
    return total


@lru_cache(maxsize=None)
def _tree_distribution(m: int, n: int) -> tuple[TruncatedTree, tuple[int, ...]]:
    """Counts of length-n walks from the root to every vertex, by push."""
    tree = TruncatedTree(m, n)
    counts = [0] * tree.vertex_count()
    counts[0] = 1
    for _ in range(n):
        fresh = [0] * len(counts)
        for v, c in enumerate(counts):
            if c:
                for w in tree.neighbors(v):
                    fresh[w] += c
        counts = fresh
    return tree, tuple(counts)


def tree_walk_count(m: int, i: int, n: int, max_states: int = DEFAULT_MAX_STATES) -> int:
    """Number of length-n walks on the m-regular tree from the root to one
    fixed vertex at distance i (the first-built vertex of that level; the
    count is the same at every vertex of the level, a symmetry the test
    suite spot-checks).

    The tree is truncated at depth n, which loses nothing: no length-n walk
    leaves that ball.
    """
    if i < 0 or n < 0:
        raise ValueError("distance and length must be non-negative")
    if i > n:
        return 0
    if _tree_size(m, n) > max_states:
        raise FeasibilityError(
            f"the depth-{n} ball of the {m}-regular tree exceeds {max_states} vertices"
        )
    tree, counts = _tree_distribution(m, n)
    if not tree.levels[i]:
        return 0
    return counts[tree.levels[i][0]]


def tree_walk_distribution(
    m: int, n: int, max_states: int = DEFAULT_MAX_STATES
) -> tuple[TruncatedTree, tuple[int, ...]]:
    """The full end-vertex count distribution after n steps, with its tree."""
    if n < 0:
        raise ValueError("length must be non-negative")
    if _tree_size(m, n) > max_states:
        raise FeasibilityError(
            f"the depth-{n} ball of the {m}-regular tree exceeds {max_states} vertices"
        )
    return _tree_distribution(m, n)


def reduce_word(letters: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a word over generators +k and inverses -k.

    Stack discipline: push each letter, pop when it cancels the letter on
    top.  The result has no adjacent cancelling pair and reducing again is
    a no-op.
    """
    stack: list[int] = []
    for x in letters:
        if not isinstance(x, int) or x == 0:
            raise ValueError(f"letters are nonzero integers +-k, got {x!r}")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def is_reduced(word: Sequence[int]) -> bool:
    return all(word[k] != -word[k + 1] for k in range(len(word) - 1))


def free_group_count(
    g: int, target: Sequence[int], n: int, max_states: int = DEFAULT_MAX_STATES
) -> int:
    """Number of length-n products of the 2g generators/inverses of the free
    group on g letters whose free reduction equals ``target``.

    Equals the walk count A_{2g}(len(target), n) on the 2g-regular tree, for
    any choice of reduced target of that length; the test suite checks the
    word-choice independence empirically.
    """
    if not isinstance(g, int) or g < 1:
        raise ValueError(f"need at least one generator, got g={g!r}")
    if n < 0:
        raise ValueError("length must be non-negative")
    target = tuple(target)
    for x in target:
        if not isinstance(x, int) or x == 0 or abs(x) > g:
            raise ValueError(f"target letter {x!r} outside the +-1..+-{g} alphabet")
    if not is_reduced(target):
        raise ValueError(f"target word {target!r} is not reduced")
    if (2 * g) ** n > max_states:
        raise FeasibilityError(f"(2*{g})^{n} words exceed the ceiling of {max_states}")
    alphabet = tuple(range(1, g + 1)) + tuple(range(-1, -g - 1, -1))
    count = 0
    for word in itertools.product(alphabet, repeat=n):
        if reduce_word(word) == target:
            count += 1
    return count
