"""Propositional logic core: signatures, formulas, worlds, and model sets.

Formula grammar (precedence low to high; `->` and `<->` associate to the
right, `&` and `|` to the left):

    formula ::= iff
    iff     ::= impl ( '<->' impl )*
    impl    ::= disj ( '->' disj )*
    disj    ::= conj ( '|' conj )*
    conj    ::= unary ( '&' unary )*
    unary   ::= '!' unary | '(' formula ')' | 'true' | 'false' | atom
    atom    ::= [a-z][a-z0-9_]*

A World is one total truth assignment over a Signature; a BeliefState is a set
of worlds and stands in for a deductively closed theory. Everything that the
belief-change literature phrases on theories (consequence, equivalence,
restriction to a sub-language) is computed here on model sets, never on
syntax. Reduction projects a model set down to a sub-signature by dropping
bits; expansion completes it up to a super-signature with every combination of
values for the new atoms.

Signatures keep their atoms sorted, so world enumeration is stable: the first
atom is the most significant bit, and worlds over `{b, f, p}` enumerate as
`-b -f -p`, `-b -f p`, ..., `b f p`. World text is space-separated literals
with a `-` prefix for a false atom; parsing accepts the literals in any order.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Union

from .errors import (
    FormulaSyntaxError,
    SignatureError,
    SignatureMismatchError,
    UnknownAtomError,
)

DEFAULT_MAX_ATOMS = 24

_ATOM_NAME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
_RESERVED_NAMES = frozenset({"true", "false"})


def max_signature_atoms() -> int:
    """Current signature size cap.

    Defaults to 24; the OBLIVION_MAX_ATOMS environment variable may lower it
    (never raise it). World enumeration is 2^n, so the cap exists to make
    oversized brute-force requests fail loudly instead of hanging.
    """
    raw = os.environ.get("OBLIVION_MAX_ATOMS")
    if raw is None:
        return DEFAULT_MAX_ATOMS
    try:
        value = int(raw)
    except ValueError:
        raise SignatureError(
            f"OBLIVION_MAX_ATOMS must be an integer, got {raw!r}"
        ) from None
    if value < 0:
        raise SignatureError("OBLIVION_MAX_ATOMS must be non-negative")
    return min(value, DEFAULT_MAX_ATOMS)


@dataclass(frozen=True)
class Signature:
    """An ordered set of distinct atom names, kept sorted lexicographically."""

    atoms: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        names = sorted(self.atoms)
        for name in names:
            if not _ATOM_NAME_RE.match(name):
                raise SignatureError(
                    f"invalid atom name {name!r} (expected [a-z][a-z0-9_]*)"
                )
            if name in _RESERVED_NAMES:
                raise SignatureError(f"atom name {name!r} is reserved")
        for left, right in zip(names, names[1:]):
            if left == right:
                raise SignatureError(f"duplicate atom {left!r}")
        cap = max_signature_atoms()
        if len(names) > cap:
            raise SignatureError(
                f"signature has {len(names)} atoms, cap is {cap}"
            )
        object.__setattr__(self, "atoms", tuple(names))
        object.__setattr__(self, "_positions", {a: i for i, a in enumerate(names)})

    def position(self, atom: str) -> int:
        try:
            return self._positions[atom]  # type: ignore[attr-defined]
        except KeyError:
            raise UnknownAtomError(atom, context=f"signature {self}") from None

    def __contains__(self, atom: str) -> bool:
        return atom in self._positions  # type: ignore[attr-defined]

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def __str__(self) -> str:
        return " ".join(self.atoms) if self.atoms else "(empty)"

    def is_subset_of(self, other: "Signature") -> bool:
        return all(a in other for a in self.atoms)

    def union(self, other: "Signature") -> "Signature":
        return Signature(set(self.atoms) | set(other.atoms))

    def intersection(self, other: "Signature") -> "Signature":
        return Signature(a for a in self.atoms if a in other)

    def minus(self, other: "Signature") -> "Signature":
        return Signature(a for a in self.atoms if a not in other)


@dataclass(frozen=True)
class World:
    """One truth assignment; bits[i] is the value of signature.atoms[i]."""

    signature: Signature
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if len(self.bits) != len(self.signature):
            raise SignatureMismatchError(
                f"world has {len(self.bits)} bits for {len(self.signature)} atoms"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise SignatureMismatchError("world bits must be 0 or 1")

    @classmethod
    def from_index(cls, signature: Signature, index: int) -> "World":
        n = len(signature)
        bits = tuple((index >> (n - 1 - i)) & 1 for i in range(n))
        return cls(signature, bits)

    @classmethod
    def from_text(cls, text: str, signature: Signature) -> "World":
        """Parse space-separated literals like `-b f p` (any literal order)."""
        seen: dict[str, int] = {}
        for token in text.split():
            value = 1
            name = token
            if token.startswith("-"):
                value = 0
                name = token[1:]
            if name not in signature:
                raise UnknownAtomError(name, context=f"world {text!r}")
            if name in seen:
                raise SignatureMismatchError(
                    f"duplicate literal for atom {name!r} in world {text!r}"
                )
            seen[name] = value
        missing = [a for a in signature if a not in seen]
        if missing:
            raise SignatureMismatchError(
                f"world {text!r} is missing atoms: {' '.join(missing)}"
            )
        return cls(signature, tuple(seen[a] for a in signature))

    @property
    def index(self) -> int:
        n = len(self.bits)
        value = 0
        for i, bit in enumerate(self.bits):
            value |= bit << (n - 1 - i)
        return value

    def value(self, atom: str) -> bool:
        return bool(self.bits[self.signature.position(atom)])

    def restrict(self, sub: Signature) -> "World":
        """Drop the bits of atoms outside `sub` (requires sub to be nested)."""
        if not sub.is_subset_of(self.signature):
            raise SignatureMismatchError(
                f"cannot restrict world over {{{self.signature}}} to {{{sub}}}"
            )
        return World(sub, tuple(self.bits[self.signature.position(a)] for a in sub))

    def text(self) -> str:
        return " ".join(
            a if bit else f"-{a}" for a, bit in zip(self.signature, self.bits)
        )

    def __str__(self) -> str:
        return self.text()


def all_worlds(signature: Signature) -> Iterator[World]:
    """Enumerate all 2^n worlds in ascending index order."""
    for bits in product((0, 1), repeat=len(signature)):
        yield World(signature, bits)


# --- Formula AST ---


class Formula:
    """Base class for formula AST nodes."""

    __slots__ = ()

    def __str__(self) -> str:
        return render_formula(self)  # type: ignore[arg-type]


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


def formula_atoms(formula: Formula) -> frozenset[str]:
    """The set of atom names mentioned in a formula."""
    if isinstance(formula, Atom):
        return frozenset((formula.name,))
    if isinstance(formula, Not):
        return formula_atoms(formula.operand)
    if isinstance(formula, (And, Or, Implies, Iff)):
        return formula_atoms(formula.left) | formula_atoms(formula.right)
    return frozenset()


# --- Parsing ---

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<name>[a-z][a-z0-9_]*)"
    r"|(?P<iff><->)"
    r"|(?P<implies>->)"
    r"|(?P<not>!)"
    r"|(?P<and>&)"
    r"|(?P<or>\|)"
    r"|(?P<lparen>\()"
    r"|(?P<rparen>\))"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int  # 1-based column


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        match = _TOKEN_RE.match(text, i)
        if match is None:
            raise FormulaSyntaxError(f"unexpected character {text[i]!r}", i + 1)
        kind = match.lastgroup or ""
        if kind != "ws":
            token_text = match.group()
            if kind == "name" and token_text in _RESERVED_NAMES:
                kind = token_text
            tokens.append(_Token(kind, token_text, i + 1))
        i = match.end()
    tokens.append(_Token("eof", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self._tokens = _tokenize(text)
        self._pos = 0

    def _peek(self) -> _Token:
        return self._tokens[self._pos]

    def _advance(self) -> _Token:
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def parse(self) -> Formula:
        formula = self._iff()
        trailing = self._peek()
        if trailing.kind != "eof":
            raise FormulaSyntaxError(
                f"unexpected {trailing.text!r} after formula", trailing.position
            )
        return formula

    def _iff(self) -> Formula:
        left = self._implies()
        if self._peek().kind == "iff":
            self._advance()
            return Iff(left, self._iff())
        return left

    def _implies(self) -> Formula:
        left = self._or()
        if self._peek().kind == "implies":
            self._advance()
            return Implies(left, self._implies())
        return left

    def _or(self) -> Formula:
        node = self._and()
        while self._peek().kind == "or":
            self._advance()
            node = Or(node, self._and())
        return node

    def _and(self) -> Formula:
        node = self._unary()
        while self._peek().kind == "and":
            self._advance()
            node = And(node, self._unary())
        return node

    def _unary(self) -> Formula:
        token = self._peek()
        if token.kind == "not":
            self._advance()
            return Not(self._unary())
        if token.kind == "lparen":
            self._advance()
            inner = self._iff()
            closing = self._peek()
            if closing.kind != "rparen":
                raise FormulaSyntaxError("expected ')'", closing.position)
            self._advance()
            return inner
        if token.kind == "true":
            self._advance()
            return Top()
        if token.kind == "false":
            self._advance()
            return Bottom()
        if token.kind == "name":
            self._advance()
            return Atom(token.text)
        what = repr(token.text) if token.text else "end of input"
        raise FormulaSyntaxError(f"expected a formula, found {what}", token.position)


def parse_formula(text: str) -> Formula:
    """Parse formula text into an AST; raises FormulaSyntaxError with position."""
    return _Parser(text).parse()


_PRECEDENCE = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Atom: 6, Top: 6, Bottom: 6}
_BINARY_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}
_RIGHT_ASSOC = (Iff, Implies)


def render_formula(formula: Formula) -> str:
    """Minimal-parentheses text; parse_formula(render_formula(f)) == f."""
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Top):
        return "true"
    if isinstance(formula, Bottom):
        return "false"
    if isinstance(formula, Not):
        inner = render_formula(formula.operand)
        if _PRECEDENCE[type(formula.operand)] < _PRECEDENCE[Not]:
            inner = f"({inner})"
        return f"!{inner}"
    if isinstance(formula, (And, Or, Implies, Iff)):
        prec = _PRECEDENCE[type(formula)]
        right_assoc = isinstance(formula, _RIGHT_ASSOC)
        left = render_formula(formula.left)
        left_prec = _PRECEDENCE[type(formula.left)]
        if left_prec < prec or (left_prec == prec and right_assoc):
            left = f"({left})"
        right = render_formula(formula.right)
        right_prec = _PRECEDENCE[type(formula.right)]
        if right_prec < prec or (right_prec == prec and not right_assoc):
            right = f"({right})"
        return f"{left} {_BINARY_SYMBOL[type(formula)]} {right}"
    raise TypeError(f"not a formula node: {formula!r}")


# --- Semantics ---


def evaluate(world: World, formula: Formula) -> bool:
    """Truth value of `formula` in `world`; unknown atoms raise by name."""
    if isinstance(formula, Atom):
        return world.value(formula.name)
    if isinstance(formula, Not):
        return not evaluate(world, formula.operand)
    if isinstance(formula, And):
        return evaluate(world, formula.left) and evaluate(world, formula.right)
    if isinstance(formula, Or):
        return evaluate(world, formula.left) or evaluate(world, formula.right)
    if isinstance(formula, Implies):
        return not evaluate(world, formula.left) or evaluate(world, formula.right)
    if isinstance(formula, Iff):
        return evaluate(world, formula.left) == evaluate(world, formula.right)
    if isinstance(formula, Top):
        return True
    if isinstance(formula, Bottom):
        return False
    raise TypeError(f"not a formula node: {formula!r}")


@dataclass(frozen=True)
class BeliefState:
    """A set of worlds over one signature; extensional form of a closed theory.

    The empty world set represents an inconsistent belief set; operations that
    require consistency must check for themselves.
    """

    signature: Signature
    worlds: frozenset[World]

    def __post_init__(self) -> None:
        object.__setattr__(self, "worlds", frozenset(self.worlds))
        for world in self.worlds:
            if world.signature != self.signature:
                raise SignatureMismatchError(
                    f"world {world.text()!r} is not over signature {{{self.signature}}}"
                )

    @classmethod
    def full(cls, signature: Signature) -> "BeliefState":
        return cls(signature, frozenset(all_worlds(signature)))

    @classmethod
    def empty(cls, signature: Signature) -> "BeliefState":
        return cls(signature, frozenset())

    def sorted_worlds(self) -> list[World]:
        return sorted(self.worlds, key=lambda w: w.bits)

    def world_texts(self) -> list[str]:
        return [w.text() for w in self.sorted_worlds()]

    def to_json_dict(self) -> dict:
        return {"signature": list(self.signature.atoms), "worlds": self.world_texts()}


FormulaOrFormulas = Union[Formula, Iterable[Formula]]


def models(formulas: FormulaOrFormulas, signature: Signature) -> BeliefState:
    """Worlds over `signature` satisfying the formula (or every formula given)."""
    items = [formulas] if isinstance(formulas, Formula) else list(formulas)
    satisfied = frozenset(
        w for w in all_worlds(signature) if all(evaluate(w, f) for f in items)
    )
    if not satisfied:
        # Makes sure unknown atoms surface even when nothing was evaluated
        # (empty conjunction) or evaluation short-circuited past them.
        for f in items:
            for atom in formula_atoms(f):
                signature.position(atom)
    return BeliefState(signature, satisfied)


def entails(state: BeliefState, formula: Formula) -> bool:
    """True iff every world of `state` satisfies `formula` (vacuous on empty)."""
    for atom in formula_atoms(formula):
        state.signature.position(atom)
    return all(evaluate(w, formula) for w in state.worlds)


def equivalent(left: BeliefState, right: BeliefState) -> bool:
    """World-set equality; the two states must share a signature."""
    if left.signature != right.signature:
        raise SignatureMismatchError(
            f"cannot compare states over {{{left.signature}}} and {{{right.signature}}}"
        )
    return left.worlds == right.worlds


def canonical_formula(state: BeliefState) -> Formula:
    """A syntactic representative: disjunction of world conjunctions.

    The empty state maps to `false`, the full state to `true`; otherwise each
    world becomes a conjunction of literals in signature order and the worlds
    are joined in enumeration order.
    """
    if not state.worlds:
        return Bottom()
    if len(state.worlds) == 2 ** len(state.signature):
        return Top()
    disjuncts = []
    for world in state.sorted_worlds():
        literals: list[Formula] = [
            Atom(a) if bit else Not(Atom(a))
            for a, bit in zip(state.signature, world.bits)
        ]
        conj = literals[0]
        for lit in literals[1:]:
            conj = And(conj, lit)
        disjuncts.append(conj)
    formula = disjuncts[0]
    for disjunct in disjuncts[1:]:
        formula = Or(formula, disjunct)
    return formula


def reduce_worlds(state: BeliefState, sub: Signature) -> BeliefState:
    """Project the model set down to `sub`: drop outside bits, deduplicate."""
    if not sub.is_subset_of(state.signature):
        raise SignatureMismatchError(
            f"{{{sub}}} is not a sub-signature of {{{state.signature}}}"
        )
    return BeliefState(sub, frozenset(w.restrict(sub) for w in state.worlds))


def expand_worlds(state: BeliefState, superset: Signature) -> BeliefState:
    """Complete the model set up to `superset`: all values for new atoms."""
    if not state.signature.is_subset_of(superset):
        raise SignatureMismatchError(
            f"{{{state.signature}}} is not a sub-signature of {{{superset}}}"
        )
    old_positions = [superset.position(a) for a in state.signature]
    new_positions = [
        i for i, a in enumerate(superset.atoms) if a not in state.signature
    ]
    expanded = set()
    for world in state.worlds:
        base = [0] * len(superset)
        for pos, bit in zip(old_positions, world.bits):
            base[pos] = bit
        for combo in product((0, 1), repeat=len(new_positions)):
            bits = list(base)
            for pos, bit in zip(new_positions, combo):
                bits[pos] = bit
            expanded.add(World(superset, tuple(bits)))
    return BeliefState(superset, frozenset(expanded))


def elementary_equivalent(first: World, second: World, exceptions: Signature) -> bool:
    """True iff the worlds agree on every atom outside `exceptions`."""
    if first.signature != second.signature:
        raise SignatureMismatchError(
            "elementary equivalence needs worlds over the same signature"
        )
    return all(
        first.bits[i] == second.bits[i]
        for i, atom in enumerate(first.signature)
        if atom not in exceptions
    )
