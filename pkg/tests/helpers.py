"""Shared brute-force enumeration utilities for the test suite."""

from __future__ import annotations

import random

from oblivion import (
    And,
    Atom,
    BeliefState,
    Bottom,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Signature,
    Top,
    all_worlds,
    canonical_formula,
)


def sub_signatures(sig: Signature) -> list[Signature]:
    out = []
    for mask in range(2 ** len(sig)):
        out.append(Signature(a for i, a in enumerate(sig.atoms) if mask >> i & 1))
    return out


def all_model_sets(sig: Signature, include_empty: bool = True) -> list[BeliefState]:
    worlds = list(all_worlds(sig))
    start = 0 if include_empty else 1
    return [
        BeliefState(sig, frozenset(w for i, w in enumerate(worlds) if mask >> i & 1))
        for mask in range(start, 2 ** len(worlds))
    ]


def all_canonical_formulas(sig: Signature) -> list[Formula]:
    return [canonical_formula(bs) for bs in all_model_sets(sig)]


def random_formula(rng: random.Random, sig: Signature, depth: int) -> Formula:
    """A random AST; leaves are atoms or constants, depth bounds nesting."""
    if depth == 0 or not sig.atoms or rng.random() < 0.25:
        roll = rng.random()
        if not sig.atoms or roll < 0.08:
            return Top()
        if roll < 0.16:
            return Bottom()
        return Atom(rng.choice(sig.atoms))
    kind = rng.randrange(5)
    if kind == 0:
        return Not(random_formula(rng, sig, depth - 1))
    left = random_formula(rng, sig, depth - 1)
    right = random_formula(rng, sig, depth - 1)
    node = (And, Or, Implies, Iff)[kind - 1]
    return node(left, right)


def random_model_set(rng: random.Random, sig: Signature, nonempty: bool = False) -> BeliefState:
    worlds = list(all_worlds(sig))
    lower = 1 if nonempty else 0
    mask = rng.randrange(lower, 2 ** len(worlds))
    return BeliefState(sig, frozenset(w for i, w in enumerate(worlds) if mask >> i & 1))
