"""Knowledge-level forgetting of atoms, computed on model sets.

`forget_reduced` removes a set of atoms and lands in the reduced language
(model set = reduction of the prior models); `forget_original` closes that
result back over the original signature (model set = expansion back up).
`boole_forget` is the classic substitute-and-disjoin variable elimination,
kept purely syntactic here; `check_boole_equivalence` bridges the two routes
semantically, which is what the test suites lean on.

Knowledge-base file format (.kb): UTF-8, one formula per line, `#` starts a
comment, blank lines are ignored. A `sig: p b f` header pins the signature;
without one it is the sorted union of mentioned atoms.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .errors import FileFormatError, FormulaSyntaxError, UnknownAtomError
from .logic import (
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
    expand_worlds,
    formula_atoms,
    models,
    parse_formula,
    reduce_worlds,
)


@dataclass(frozen=True)
class KnowledgeBase:
    """A finite set of formulas over an explicit signature."""

    signature: Signature
    formulas: tuple[Formula, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "formulas", tuple(self.formulas))
        for formula in self.formulas:
            for atom in formula_atoms(formula):
                self.signature.position(atom)

    @classmethod
    def from_formulas(
        cls, formulas: Iterable[Formula], signature: Signature | None = None
    ) -> "KnowledgeBase":
        items = tuple(formulas)
        if signature is None:
            mentioned: set[str] = set()
            for formula in items:
                mentioned |= formula_atoms(formula)
            signature = Signature(mentioned)
        return cls(signature, items)

    def models(self) -> BeliefState:
        return models(self.formulas, self.signature)


def forget_reduced(kb: KnowledgeBase, atoms: Signature) -> BeliefState:
    """Forget `atoms`, landing in the reduced language over the rest.

    Atoms outside the knowledge base's signature are ignored. An inconsistent
    knowledge base yields the empty state over the reduced signature (the
    result is then the whole reduced language).
    """
    keep = kb.signature.minus(atoms)
    return reduce_worlds(kb.models(), keep)


def forget_original(kb: KnowledgeBase, atoms: Signature) -> BeliefState:
    """Forget `atoms` but state the result over the original signature.

    The result's model set is closed under flipping the forgotten atoms, so it
    carries no information about them.
    """
    return expand_worlds(forget_reduced(kb, atoms), kb.signature)


def substitute(formula: Formula, atom: str, value: bool) -> Formula:
    """Replace every occurrence of `atom` by true/false; no simplification."""
    replacement: Formula = Top() if value else Bottom()

    def walk(node: Formula) -> Formula:
        if isinstance(node, Atom):
            return replacement if node.name == atom else node
        if isinstance(node, Not):
            return Not(walk(node.operand))
        if isinstance(node, And):
            return And(walk(node.left), walk(node.right))
        if isinstance(node, Or):
            return Or(walk(node.left), walk(node.right))
        if isinstance(node, Implies):
            return Implies(walk(node.left), walk(node.right))
        if isinstance(node, Iff):
            return Iff(walk(node.left), walk(node.right))
        return node

    return walk(formula)


def boole_forget(formula: Formula, atom: str) -> Formula:
    """Variable elimination by substitution: formula[atom/true] | formula[atom/false]."""
    return Or(substitute(formula, atom, True), substitute(formula, atom, False))


def check_boole_equivalence(
    formula: Formula, atom: str, signature: Signature | None = None
) -> bool:
    """True iff substitution-based and model-level forgetting of `atom` agree.

    Comparison happens over the full signature: the models of boole_forget
    against the expansion of the reduced-language result.
    """
    if signature is None:
        signature = Signature(formula_atoms(formula) | {atom})
    if atom not in signature:
        raise UnknownAtomError(atom, context=f"signature {signature}")
    kb = KnowledgeBase(signature, (formula,))
    substituted = models(boole_forget(formula, atom), signature)
    reduced_then_expanded = forget_original(kb, Signature((atom,)))
    return substituted.worlds == reduced_then_expanded.worlds


_SIG_HEADER = "sig:"


def loads_kb(text: str, source: str = "<string>") -> KnowledgeBase:
    """Parse .kb text; errors carry line numbers."""
    pinned: Signature | None = None
    parsed: list[tuple[int, Formula]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith(_SIG_HEADER):
            if pinned is not None:
                raise FileFormatError("duplicate sig header", lineno, source)
            try:
                pinned = Signature(line[len(_SIG_HEADER) :].split())
            except Exception as exc:
                raise FileFormatError(str(exc), lineno, source) from exc
            continue
        try:
            parsed.append((lineno, parse_formula(line)))
        except FormulaSyntaxError as exc:
            raise FileFormatError(str(exc), lineno, source) from exc
    mentioned: set[str] = set()
    for _, formula in parsed:
        mentioned |= formula_atoms(formula)
    if pinned is None:
        signature = Signature(mentioned)
    else:
        signature = pinned
        for lineno, formula in parsed:
            for atom in formula_atoms(formula):
                if atom not in signature:
                    raise FileFormatError(
                        f"atom {atom!r} is not in the pinned signature", lineno, source
                    )
    return KnowledgeBase(signature, tuple(f for _, f in parsed))


def load_kb(path: str | Path) -> KnowledgeBase:
    path = Path(path)
    return loads_kb(path.read_text(encoding="utf-8"), source=str(path))
