"""Executable checkers for the forgetting postulate families.

Three families are covered, all evaluated on model sets (never on syntax):

* DFP-1..7, the knowledge-base level properties of atom forgetting:
  monotony, entailment preservation, closure of the result, idempotent
  repetition, union-versus-intersection, iterated equals simultaneous, and
  the reduced/original-language bridge. DFP-3 holds by representation here
  (belief states are model sets, hence closed) and is reported as such.

* DFPes-1..6, the same properties for operators that take an epistemic state
  (a ranking function) and a set of atoms to a state over the remaining
  atoms. Marginalisation satisfies all six; `check_most_specific` verifies
  that it is also the most informative compliant operator on an instance.

* DFPes-L-1..6, the transfer to forgetting a *formula* from a state at the
  belief level, with an explicit success postulate (after forgetting a
  non-tautology, it is no longer believed). `triviality_census` enumerates
  every belief-level operator over a small signature and checks the six
  postulates against all instances; the surviving operators are exactly the
  ones whose output beliefs are tautological.

Belief-set intersection is computed as the union of the model sets (the
theory of a union of model sets is the intersection of the theories), and
comparisons across different signatures go through reduction/expansion.
Violated reports carry a complete witness that `replay_report` can re-check.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Sequence

from .errors import (
    OblivionError,
    OperatorContractError,
    SignatureMismatchError,
    SizeCapError,
)
from .forgetting import KnowledgeBase, forget_original, forget_reduced
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
    World,
    all_worlds,
    canonical_formula,
    entails,
    expand_worlds,
    formula_atoms,
    models,
    parse_formula,
    reduce_worlds,
    render_formula,
)
from .ocf import Ocf, beliefs, lift, make_ocf, marginalise, ocf_from_beliefs

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class PostulateReport:
    """Outcome of one postulate check; violations carry a replayable witness."""

    postulate: str
    status: str
    witness: dict | None = None
    note: str | None = None

    @property
    def violated(self) -> bool:
        return self.status == VIOLATED

    def to_json_dict(self) -> dict:
        return {
            "postulate": self.postulate,
            "status": self.status,
            "witness": self.witness,
            "note": self.note,
        }


@dataclass(frozen=True)
class SignatureForgetOperator:
    """An operator taking (ranking over Sigma, atoms P) to a ranking over Sigma minus P."""

    name: str
    apply: Callable[[Ocf, Signature], Ocf]

    def forget(self, state: Ocf, atoms: Signature) -> Ocf:
        result = self.apply(state, atoms)
        expected = state.signature.minus(atoms)
        if result.signature != expected:
            raise OperatorContractError(
                f"operator {self.name!r} returned a state over {{{result.signature}}}, "
                f"expected {{{expected}}}"
            )
        return result


@dataclass(frozen=True)
class FormulaForgetOperator:
    """A belief-level operator taking (belief state, formula) to a belief state."""

    name: str
    apply: Callable[[BeliefState, Formula], BeliefState]

    def forget(self, state: BeliefState, formula: Formula) -> BeliefState:
        result = self.apply(state, formula)
        if result.signature != state.signature:
            raise OperatorContractError(
                f"operator {self.name!r} changed the signature from "
                f"{{{state.signature}}} to {{{result.signature}}}"
            )
        return result


# --- Built-in operators ---


def marginalisation_operator() -> SignatureForgetOperator:
    def apply(state: Ocf, atoms: Signature) -> Ocf:
        return marginalise(state, state.signature.minus(atoms))

    return SignatureForgetOperator("marginalisation", apply)


def uniform_eraser_operator() -> SignatureForgetOperator:
    """Forgets everything: the output ranks all remaining worlds 0."""

    def apply(state: Ocf, atoms: Signature) -> Ocf:
        keep = state.signature.minus(atoms)
        return Ocf(keep, tuple([0] * (2 ** len(keep))))

    return SignatureForgetOperator("uniform-eraser", apply)


def trivial_formula_operator() -> FormulaForgetOperator:
    """Returns the full world set: posterior beliefs are always tautological."""

    def apply(state: BeliefState, formula: Formula) -> BeliefState:
        return BeliefState.full(state.signature)

    return FormulaForgetOperator("trivial", apply)


def identity_formula_operator() -> FormulaForgetOperator:
    """Forgets nothing; a negative control for the success postulate."""

    def apply(state: BeliefState, formula: Formula) -> BeliefState:
        return state

    return FormulaForgetOperator("identity", apply)


def contraction_formula_operator() -> FormulaForgetOperator:
    """Full-meet style contraction: add every countermodel of the formula."""

    def apply(state: BeliefState, formula: Formula) -> BeliefState:
        counter = models(Not(formula), state.signature)
        return BeliefState(state.signature, state.worlds | counter.worlds)

    return FormulaForgetOperator("contraction", apply)


SIGNATURE_OPERATORS: dict[str, Callable[[], SignatureForgetOperator]] = {
    "marginalisation": marginalisation_operator,
    "uniform-eraser": uniform_eraser_operator,
}

FORMULA_OPERATORS: dict[str, Callable[[], FormulaForgetOperator]] = {
    "trivial": trivial_formula_operator,
    "identity": identity_formula_operator,
    "contraction": contraction_formula_operator,
}


def get_signature_operator(name: str) -> SignatureForgetOperator:
    try:
        return SIGNATURE_OPERATORS[name]()
    except KeyError:
        raise OblivionError(
            f"unknown signature operator {name!r}; built-ins: "
            f"{', '.join(sorted(SIGNATURE_OPERATORS))}"
        ) from None


def get_formula_operator(name: str) -> FormulaForgetOperator:
    try:
        return FORMULA_OPERATORS[name]()
    except KeyError:
        raise OblivionError(
            f"unknown formula operator {name!r}; built-ins: "
            f"{', '.join(sorted(FORMULA_OPERATORS))}"
        ) from None


# --- Witness plumbing ---


def _atoms_list(sig: Signature) -> list[str]:
    return list(sig.atoms)


def _state_payload(state: BeliefState) -> list[str]:
    return state.world_texts()

def _ocf_payload(state: Ocf) -> dict:
    return state.to_json_dict()


def _report(postulate, ok, witness, note=None) -> PostulateReport:
    """Build a report; `witness` may be a dict or a zero-argument factory so
    that hot sweeps only pay for witness construction on violations."""
    if ok:
        return PostulateReport(postulate, HOLDS, None, note)
    payload = witness() if callable(witness) else witness
    return PostulateReport(postulate, VIOLATED, payload, note)


def sub_signatures(sig: Signature) -> list[Signature]:
    """All sub-signatures, in a deterministic (bitmask) order."""
    out = []
    for mask in range(2 ** len(sig)):
        out.append(Signature(a for i, a in enumerate(sig.atoms) if mask >> i & 1))
    return out


# --- DFP-1..7 on knowledge bases ---


def check_dfp(
    kb: KnowledgeBase, kb2: KnowledgeBase, p: Signature, p2: Signature
) -> list[PostulateReport]:
    """Evaluate DFP-1..7 on one instance; DFP-4 quantifies its P' ⊆ P internally."""
    if kb.signature != kb2.signature:
        raise SignatureMismatchError("the two knowledge bases must share a signature")
    sig = kb.signature

    def witness(postulate: str, lhs: BeliefState, rhs: BeliefState, **extra) -> dict:
        payload = {
            "family": "dfp",
            "postulate": postulate,
            "signature": _atoms_list(sig),
            "kb": [render_formula(f) for f in kb.formulas],
            "kb2": [render_formula(f) for f in kb2.formulas],
            "p": _atoms_list(p),
            "p2": _atoms_list(p2),
            "lhs": _state_payload(lhs),
            "rhs": _state_payload(rhs),
        }
        payload.update(extra)
        return payload

    reports = []
    prior = kb.models()
    keep = sig.minus(p)
    f_p = forget_reduced(kb, p)

    # DFP-1: nothing new is believed after forgetting.
    expanded = expand_worlds(f_p, sig)
    reports.append(
        _report("DFP-1", prior.worlds <= expanded.worlds, witness("DFP-1", prior, expanded))
    )

    # DFP-2: entailment between knowledge bases survives forgetting.
    if prior.worlds <= kb2.models().worlds:
        f2 = forget_reduced(kb2, p)
        reports.append(
            _report("DFP-2", f_p.worlds <= f2.worlds, witness("DFP-2", f_p, f2))
        )
    else:
        reports.append(
            PostulateReport("DFP-2", HOLDS, note="precondition not met; holds vacuously")
        )

    # DFP-3: the result is deductively closed over the reduced signature.
    reports.append(
        PostulateReport(
            "DFP-3",
            HOLDS,
            note="holds by representation: belief states are model sets, hence closed",
        )
    )

    # DFP-4: forgetting P' ⊆ P first changes nothing.
    dfp4 = PostulateReport("DFP-4", HOLDS)
    for p_prime in sub_signatures(p.intersection(sig)):
        inner = forget_reduced(kb, p_prime)
        again = _forget_state_reduced(inner, p)
        if again.worlds != f_p.worlds:
            dfp4 = _report(
                "DFP-4",
                False,
                witness("DFP-4", f_p, again, p_prime=_atoms_list(p_prime)),
            )
            break
    reports.append(dfp4)

    # DFP-5: forgetting a union is the intersection of the belief sets.
    union = p.union(p2)
    common = sig.minus(union)
    lhs = forget_reduced(kb, union)
    first = reduce_worlds(f_p, common)
    second = reduce_worlds(forget_reduced(kb, p2), common)
    model_ok = lhs.worlds == (first.worlds & second.worlds)
    meet = BeliefState(common, first.worlds | second.worlds)
    belief_ok = entails(meet, canonical_formula(lhs)) and entails(
        lhs, canonical_formula(meet)
    )
    reports.append(
        _report("DFP-5", model_ok and belief_ok, witness("DFP-5", lhs, meet))
    )

    # DFP-6: simultaneous forgetting equals iterated forgetting.
    chained = _forget_state_reduced(f_p, p2)
    reports.append(
        _report("DFP-6", lhs.worlds == chained.worlds, witness("DFP-6", lhs, chained))
    )

    # DFP-7: restricting the original-language result recovers the reduced one.
    back = reduce_worlds(forget_original(kb, p), keep)
    reports.append(
        _report("DFP-7", f_p.worlds == back.worlds, witness("DFP-7", f_p, back))
    )
    return reports


def _forget_state_reduced(state: BeliefState, atoms: Signature) -> BeliefState:
    """Forget atoms in a belief state by routing through its canonical formula."""
    kb = KnowledgeBase(state.signature, (canonical_formula(state),))
    return forget_reduced(kb, atoms)


# --- DFPes-1..6 on epistemic states ---


def check_dfpes_signature(
    op: SignatureForgetOperator,
    k1: Ocf,
    k2: Ocf,
    p: Signature,
    p1: Signature,
    p2: Signature,
) -> list[PostulateReport]:
    """Evaluate DFPes-1..6 for `op` on one instance.

    DFPes-3 quantifies over all P' ⊆ P internally and reports the worst case.
    Cross-signature belief comparisons are done on model sets via reduction.
    """
    if k1.signature != k2.signature:
        raise SignatureMismatchError("the two states must share a signature")
    sig = k1.signature

    def witness(postulate: str, lhs: Iterable[World], rhs: Iterable[World], **extra) -> dict:
        payload = {
            "family": "dfpes-signature",
            "postulate": postulate,
            "operator": op.name,
            "signature": _atoms_list(sig),
            "state": _ocf_payload(k1),
            "state2": _ocf_payload(k2),
            "p": _atoms_list(p),
            "p1": _atoms_list(p1),
            "p2": _atoms_list(p2),
            "lhs": sorted(w.text() for w in lhs),
            "rhs": sorted(w.text() for w in rhs),
        }
        payload.update(extra)
        return payload

    reports = []
    keep = sig.minus(p)
    out_p = op.forget(k1, p)
    bel_out = beliefs(out_p)

    # DFPes-1: prior beliefs entail posterior beliefs.
    reduced_prior = reduce_worlds(beliefs(k1), keep)
    reports.append(
        _report(
            "DFPes-1",
            reduced_prior.worlds <= bel_out.worlds,
            witness("DFPes-1", reduced_prior.worlds, bel_out.worlds),
        )
    )

    # DFPes-2: entailment between states survives forgetting.
    if beliefs(k1).worlds <= beliefs(k2).worlds:
        other = beliefs(op.forget(k2, p))
        reports.append(
            _report(
                "DFPes-2",
                bel_out.worlds <= other.worlds,
                witness("DFPes-2", bel_out.worlds, other.worlds),
            )
        )
    else:
        reports.append(
            PostulateReport("DFPes-2", HOLDS, note="precondition not met; holds vacuously")
        )

    # DFPes-3: forgetting P' ⊆ P first, then P, changes nothing.
    dfpes3 = PostulateReport("DFPes-3", HOLDS)
    for p_prime in sub_signatures(p.intersection(sig)):
        twice = beliefs(op.forget(op.forget(k1, p_prime), p))
        if twice.worlds != bel_out.worlds:
            dfpes3 = _report(
                "DFPes-3",
                False,
                witness(
                    "DFPes-3",
                    bel_out.worlds,
                    twice.worlds,
                    p_prime=_atoms_list(p_prime),
                ),
            )
            break
    reports.append(dfpes3)

    # DFPes-4: forgetting a union = intersection of the separate belief sets.
    union = p1.union(p2)
    common = sig.minus(union)
    out_union = op.forget(k1, union)
    lhs_union = beliefs(out_union)
    first = reduce_worlds(beliefs(op.forget(k1, p1)), common)
    second = reduce_worlds(beliefs(op.forget(k1, p2)), common)
    reports.append(
        _report(
            "DFPes-4",
            lhs_union.worlds == (first.worlds | second.worlds),
            witness("DFPes-4", lhs_union.worlds, first.worlds | second.worlds),
        )
    )

    # DFPes-5: forgetting a union = forgetting one part, then the other.
    chained = beliefs(op.forget(op.forget(k1, p1), p2))
    reports.append(
        _report(
            "DFPes-5",
            lhs_union.worlds == chained.worlds,
            witness("DFPes-5", lhs_union.worlds, chained.worlds),
        )
    )

    # DFPes-6: lift the result back, restrict the language, get it again.
    lifted = lift(out_p, sig)
    back = reduce_worlds(beliefs(lifted), keep)
    reports.append(
        _report(
            "DFPes-6",
            bel_out.worlds == back.worlds,
            witness("DFPes-6", bel_out.worlds, back.worlds),
        )
    )
    return reports


def check_most_specific(
    op: SignatureForgetOperator, k: Ocf, p: Signature
) -> PostulateReport:
    """Marginal beliefs entail the operator's beliefs (minimal-change bound).

    Meaningful for operators that satisfy DFPes-1..6 on the instance family;
    the note records whether the bound is an equality or strict.
    """
    keep = k.signature.minus(p)
    marginal = beliefs(marginalise(k, keep))
    others = beliefs(op.forget(k, p))
    ok = marginal.worlds <= others.worlds
    note = None
    if ok:
        note = "equality" if marginal.worlds == others.worlds else "strict"
    witness = {
        "family": "dfpes-signature",
        "postulate": "most-specific",
        "operator": op.name,
        "signature": _atoms_list(k.signature),
        "state": _ocf_payload(k),
        "state2": _ocf_payload(k),
        "p": _atoms_list(p),
        "p1": [],
        "p2": [],
        "lhs": sorted(w.text() for w in marginal.worlds),
        "rhs": sorted(w.text() for w in others.worlds),
    }
    return _report("most-specific", ok, witness, note)


# --- DFPes-L-1..6 on belief states and formulas ---


def check_dfpes_formula(
    op: FormulaForgetOperator,
    s1: BeliefState,
    s2: BeliefState,
    phi: Formula,
    psi: Formula,
) -> list[PostulateReport]:
    """Evaluate DFPes-L-1..6 for `op` on one instance.

    DFPes-L-3 is instantiated with the derived pair (phi & psi, psi), whose
    precondition always holds, and additionally with (phi, psi) when
    phi entails psi.
    """
    if s1.signature != s2.signature:
        raise SignatureMismatchError("the two states must share a signature")
    sig = s1.signature
    for formula in (phi, psi):
        for atom in formula_atoms(formula):
            sig.position(atom)

    def witness(postulate: str, lhs: Iterable[World], rhs: Iterable[World], **extra) -> dict:
        payload = {
            "family": "dfpes-formula",
            "postulate": postulate,
            "operator": op.name,
            "signature": _atoms_list(sig),
            "state": _state_payload(s1),
            "state2": _state_payload(s2),
            "phi": render_formula(phi),
            "psi": render_formula(psi),
            "lhs": sorted(w.text() for w in lhs),
            "rhs": sorted(w.text() for w in rhs),
        }
        payload.update(extra)
        return payload

    reports = []
    out_phi = op.forget(s1, phi)

    # DFPes-L-1: prior beliefs entail posterior beliefs.
    reports.append(
        _report(
            "DFPes-L-1",
            s1.worlds <= out_phi.worlds,
            witness("DFPes-L-1", s1.worlds, out_phi.worlds),
        )
    )

    # DFPes-L-2: entailment between states survives forgetting.
    if s1.worlds <= s2.worlds:
        other = op.forget(s2, phi)
        reports.append(
            _report(
                "DFPes-L-2",
                out_phi.worlds <= other.worlds,
                witness("DFPes-L-2", out_phi.worlds, other.worlds),
            )
        )
    else:
        reports.append(
            PostulateReport("DFPes-L-2", HOLDS, note="precondition not met; holds vacuously")
        )

    # DFPes-L-3: forgetting a weaker formula first changes nothing.
    conj = And(phi, psi)
    lhs3 = op.forget(s1, conj)
    rhs3 = op.forget(op.forget(s1, psi), conj)
    ok3 = lhs3.worlds == rhs3.worlds
    wit3 = witness("DFPes-L-3", lhs3.worlds, rhs3.worlds, pair="(phi & psi, psi)")
    if ok3 and models(phi, sig).worlds <= models(psi, sig).worlds:
        rhs3b = op.forget(op.forget(s1, psi), phi)
        ok3 = out_phi.worlds == rhs3b.worlds
        if not ok3:
            wit3 = witness("DFPes-L-3", out_phi.worlds, rhs3b.worlds, pair="(phi, psi)")
    reports.append(_report("DFPes-L-3", ok3, wit3))

    # DFPes-L-4: forgetting a disjunction = intersection of the belief sets.
    disj = Or(phi, psi)
    out_disj = op.forget(s1, disj)
    joined = out_phi.worlds | op.forget(s1, psi).worlds
    reports.append(
        _report(
            "DFPes-L-4",
            out_disj.worlds == joined,
            witness("DFPes-L-4", out_disj.worlds, joined),
        )
    )

    # DFPes-L-5: forgetting a disjunction = forgetting one part, then the other.
    chained = op.forget(out_phi, psi)
    reports.append(
        _report(
            "DFPes-L-5",
            out_disj.worlds == chained.worlds,
            witness("DFPes-L-5", out_disj.worlds, chained.worlds),
        )
    )

    # DFPes-L-6: success; a forgotten non-tautology is no longer believed.
    phi_models = models(phi, sig)
    if len(phi_models.worlds) == 2 ** len(sig):
        reports.append(
            PostulateReport(
                "DFPes-L-6", HOLDS, note="phi is tautological; holds vacuously"
            )
        )
    else:
        reports.append(
            _report(
                "DFPes-L-6",
                not (out_phi.worlds <= phi_models.worlds),
                witness("DFPes-L-6", out_phi.worlds, phi_models.worlds),
            )
        )
    return reports


def check_syntax_independence(
    op: FormulaForgetOperator, s: BeliefState, phi: Formula, psi: Formula
) -> PostulateReport:
    """Equivalent formulas must forget to equivalent beliefs."""
    sig = s.signature
    if models(phi, sig).worlds != models(psi, sig).worlds:
        return PostulateReport(
            "syntax-independence",
            NOT_APPLICABLE,
            note="phi and psi are not equivalent",
        )
    out_phi = op.forget(s, phi)
    out_psi = op.forget(s, psi)
    witness = {
        "family": "dfpes-formula",
        "postulate": "syntax-independence",
        "operator": op.name,
        "signature": _atoms_list(sig),
        "state": _state_payload(s),
        "state2": _state_payload(s),
        "phi": render_formula(phi),
        "psi": render_formula(psi),
        "lhs": out_phi.world_texts(),
        "rhs": out_psi.world_texts(),
    }
    return _report("syntax-independence", out_phi.worlds == out_psi.worlds, witness)


def check_conjunction_collapse(
    op: FormulaForgetOperator, s: BeliefState, phi: Formula, psi: Formula
) -> PostulateReport:
    """Forgetting phi, psi, or phi & psi all coincide for compliant operators.

    The check is gated: if the operator does not pass DFPes-L-1..6 over its
    signature (exhaustively up to two atoms, sampled above), the report is
    not-applicable rather than a claim either way.
    """
    sig = s.signature
    gate = _formula_operator_compliance_gate(op, sig)
    if gate is not None:
        return PostulateReport(
            "conjunction-collapse",
            NOT_APPLICABLE,
            note=f"operator fails the DFPes-L suite ({gate}); collapse not implied",
        )
    out_phi = op.forget(s, phi)
    out_conj = op.forget(s, And(phi, psi))
    out_psi = op.forget(s, psi)
    ok = out_phi.worlds == out_conj.worlds == out_psi.worlds
    witness = {
        "family": "dfpes-formula",
        "postulate": "conjunction-collapse",
        "operator": op.name,
        "signature": _atoms_list(sig),
        "state": _state_payload(s),
        "state2": _state_payload(s),
        "phi": render_formula(phi),
        "psi": render_formula(psi),
        "lhs": out_phi.world_texts(),
        "rhs": out_conj.world_texts(),
    }
    return _report("conjunction-collapse", ok, witness)


def _formula_operator_compliance_gate(
    op: FormulaForgetOperator, sig: Signature
) -> str | None:
    """None if the operator passes the DFPes-L suite over `sig`, else the
    first failing postulate id."""
    if len(sig) <= 2:
        result = run_dfpes_formula_suite(op, exhaustive=len(sig), signature=sig)
    else:
        result = run_dfpes_formula_suite(
            op, random_instances=200, seed=0, atoms=len(sig), signature=sig
        )
    if result.violations:
        return result.violations[0].postulate
    return None


# --- Suites ---


@dataclass(frozen=True)
class SuiteResult:
    """Aggregated outcome of a postulate sweep."""

    suite: str
    operator: str | None
    mode: dict
    checks: dict[str, int]
    violation_counts: dict[str, int]
    violations: tuple[PostulateReport, ...]

    MAX_STORED_PER_POSTULATE = 10

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def total_violations(self) -> int:
        return sum(self.violation_counts.values())

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "operator": self.operator,
            "mode": self.mode,
            "checks": self.checks,
            "violation_counts": self.violation_counts,
            "violations": [r.to_json_dict() for r in self.violations],
            "ok": self.ok,
        }


class _Tally:
    """Collects per-postulate counts and a capped list of violated reports."""

    def __init__(self) -> None:
        self.checks: dict[str, int] = {}
        self.violation_counts: dict[str, int] = {}
        self.stored: list[PostulateReport] = []

    def add(self, report: PostulateReport) -> None:
        self.checks[report.postulate] = self.checks.get(report.postulate, 0) + 1
        if report.violated:
            count = self.violation_counts.get(report.postulate, 0) + 1
            self.violation_counts[report.postulate] = count
            if count <= SuiteResult.MAX_STORED_PER_POSTULATE:
                self.stored.append(report)

    def result(self, suite: str, operator: str | None, mode: dict) -> SuiteResult:
        return SuiteResult(
            suite,
            operator,
            mode,
            dict(sorted(self.checks.items())),
            dict(sorted(self.violation_counts.items())),
            tuple(self.stored),
        )


def generic_signature(n: int) -> Signature:
    """The n-atom sweep signature: single letters a, b, c, ..."""
    if n > len(string.ascii_lowercase):
        raise SizeCapError(f"no generic signature with {n} atoms")
    return Signature(string.ascii_lowercase[:n])


def all_belief_states(sig: Signature, include_empty: bool = True) -> list[BeliefState]:
    """Every belief state over `sig`, in ascending world-bitmask order."""
    worlds = list(all_worlds(sig))
    start = 0 if include_empty else 1
    states = []
    for mask in range(start, 2 ** len(worlds)):
        states.append(
            BeliefState(
                sig, frozenset(w for i, w in enumerate(worlds) if mask >> i & 1)
            )
        )
    return states


def _mode_error() -> OblivionError:
    return OblivionError("choose exactly one of exhaustive=<atoms> or random_instances=<count>")


def run_dfp_suite(
    *,
    exhaustive: int | None = None,
    random_instances: int | None = None,
    seed: int = 0,
    atoms: int = 3,
) -> SuiteResult:
    """Sweep DFP-1..7 for the model-level forgetting operator.

    Exhaustive mode quantifies over every model set over an n-atom signature
    (n <= 3) with every pair of forgotten atom sets; DFP-2 runs on every
    entailing pair of model sets. Random mode draws seeded knowledge bases
    made of random formulas.
    """
    if (exhaustive is None) == (random_instances is None):
        raise _mode_error()
    if exhaustive is not None:
        if exhaustive > 3:
            raise SizeCapError("exhaustive DFP sweeps are capped at 3 atoms")
        return _dfp_exhaustive(exhaustive)
    return _dfp_random(random_instances, seed, atoms)


def _dfp_exhaustive(n: int) -> SuiteResult:
    sig = generic_signature(n)
    tally = _Tally()
    states = all_belief_states(sig)
    kbs = [KnowledgeBase(sig, (canonical_formula(bs),)) for bs in states]
    subs = sub_signatures(sig)
    model_cache = [kb.models() for kb in kbs]
    forget_cache: dict[tuple[int, int], BeliefState] = {}

    def forgotten(i: int, pi: int) -> BeliefState:
        key = (i, pi)
        if key not in forget_cache:
            forget_cache[key] = forget_reduced(kbs[i], subs[pi])
        return forget_cache[key]

    def witness(postulate: str, i: int, j: int, pi: int, p2i: int, lhs, rhs, **extra) -> dict:
        payload = {
            "family": "dfp",
            "postulate": postulate,
            "signature": _atoms_list(sig),
            "kb": [render_formula(f) for f in kbs[i].formulas],
            "kb2": [render_formula(f) for f in kbs[j].formulas],
            "p": _atoms_list(subs[pi]),
            "p2": _atoms_list(subs[p2i]),
            "lhs": sorted(w.text() for w in lhs),
            "rhs": sorted(w.text() for w in rhs),
        }
        payload.update(extra)
        return payload

    # DFP-1 and DFP-7 over every (state, P).
    for i in range(len(states)):
        for pi in range(len(subs)):
            f_p = forgotten(i, pi)
            expanded = expand_worlds(f_p, sig)
            tally.add(
                _report(
                    "DFP-1",
                    model_cache[i].worlds <= expanded.worlds,
                    lambda: witness("DFP-1", i, i, pi, 0,
                                    model_cache[i].worlds, expanded.worlds),
                )
            )
            back = reduce_worlds(forget_original(kbs[i], subs[pi]), sig.minus(subs[pi]))
            tally.add(
                _report(
                    "DFP-7",
                    f_p.worlds == back.worlds,
                    lambda: witness("DFP-7", i, i, pi, 0, f_p.worlds, back.worlds),
                )
            )
            tally.add(
                PostulateReport(
                    "DFP-3",
                    HOLDS,
                    note="holds by representation: belief states are model sets, hence closed",
                )
            )

    # DFP-2 over every entailing pair of model sets.
    masks = list(range(len(states)))
    for j in masks:
        sub_mask = j
        while True:
            i = sub_mask
            for pi in range(len(subs)):
                tally.add(
                    _report(
                        "DFP-2",
                        forgotten(i, pi).worlds <= forgotten(j, pi).worlds,
                        lambda: witness(
                            "DFP-2", i, j, pi, 0,
                            forgotten(i, pi).worlds, forgotten(j, pi).worlds,
                        ),
                    )
                )
            if sub_mask == 0:
                break
            sub_mask = (sub_mask - 1) & j

    # DFP-4 over every (state, P, P' ⊆ P).
    for i in range(len(states)):
        for pi, p in enumerate(subs):
            f_p = forgotten(i, pi)
            for p_prime in sub_signatures(p):
                inner = _forget_state_reduced(model_cache[i], p_prime)
                again = _forget_state_reduced(inner, p)
                tally.add(
                    _report(
                        "DFP-4",
                        again.worlds == f_p.worlds,
                        lambda: witness(
                            "DFP-4", i, i, pi, 0, f_p.worlds, again.worlds,
                            p_prime=_atoms_list(p_prime),
                        ),
                    )
                )

    # DFP-5 and DFP-6 over every (state, P, P2).
    rng = random.Random(0)
    for i in range(len(states)):
        for pi, p in enumerate(subs):
            for p2i, p2 in enumerate(subs):
                union = p.union(p2)
                union_index = subs.index(union)
                common = sig.minus(union)
                lhs = forgotten(i, union_index)
                first = reduce_worlds(forgotten(i, pi), common)
                second = reduce_worlds(forgotten(i, p2i), common)
                ok5 = lhs.worlds == (first.worlds & second.worlds)
                if ok5 and (n <= 2 or rng.random() < 0.15):
                    # The belief-set reading: theory intersection, checked by
                    # entailment both ways on canonical formulas.
                    meet = BeliefState(common, first.worlds | second.worlds)
                    ok5 = entails(meet, canonical_formula(lhs)) and entails(
                        lhs, canonical_formula(meet)
                    )
                tally.add(
                    _report(
                        "DFP-5", ok5,
                        lambda: witness("DFP-5", i, i, pi, p2i, lhs.worlds,
                                        first.worlds & second.worlds),
                    )
                )
                chained = _forget_state_reduced(forgotten(i, pi), p2)
                tally.add(
                    _report(
                        "DFP-6",
                        lhs.worlds == chained.worlds,
                        lambda: witness("DFP-6", i, i, pi, p2i,
                                        lhs.worlds, chained.worlds),
                    )
                )

    return tally.result("dfp", None, {"exhaustive": n})


def _random_formula(rng: random.Random, sig: Signature, depth: int) -> Formula:
    if depth == 0 or not sig.atoms or rng.random() < 0.3:
        roll = rng.random()
        if roll < 0.1 or not sig.atoms:
            return Top() if rng.random() < 0.5 else Bottom()
        return Atom(rng.choice(sig.atoms))
    kind = rng.randrange(5)
    if kind == 0:
        return Not(_random_formula(rng, sig, depth - 1))
    left = _random_formula(rng, sig, depth - 1)
    right = _random_formula(rng, sig, depth - 1)
    node = (And, Or, Implies, Iff)[kind - 1]
    return node(left, right)


def _random_kb(rng: random.Random, sig: Signature) -> KnowledgeBase:
    count = rng.randrange(1, 4)
    return KnowledgeBase(
        sig, tuple(_random_formula(rng, sig, 3) for _ in range(count))
    )


def _random_sub_signature(rng: random.Random, sig: Signature) -> Signature:
    return Signature(a for a in sig.atoms if rng.random() < 0.5)


def _dfp_random(count: int, seed: int, atoms: int) -> SuiteResult:
    sig = generic_signature(atoms)
    rng = random.Random(seed)
    tally = _Tally()
    for _ in range(count):
        kb = _random_kb(rng, sig)
        if rng.random() < 0.5 and len(kb.formulas) > 1:
            # Dropping formulas weakens the base, so kb entails kb2.
            kept = tuple(f for f in kb.formulas if rng.random() < 0.7)
            kb2 = KnowledgeBase(sig, kept)
        else:
            kb2 = _random_kb(rng, sig)
        p = _random_sub_signature(rng, sig)
        p2 = _random_sub_signature(rng, sig)
        for report in check_dfp(kb, kb2, p, p2):
            tally.add(report)
    return tally.result("dfp", None, {"random": count, "seed": seed, "atoms": atoms})


def run_dfpes_signature_suite(
    op: SignatureForgetOperator,
    *,
    exhaustive: int | None = None,
    random_instances: int | None = None,
    seed: int = 0,
    atoms: int = 3,
    max_rank: int = 5,
) -> SuiteResult:
    """Sweep DFPes-1..6 (plus the most-specific bound) for `op`.

    Exhaustive mode runs every 0/1 ranking over an n-atom signature (n <= 3),
    every atom set P with every P' ⊆ P, every (P1, P2) pair, and every
    entailing pair of rankings for DFPes-2. Beliefs only depend on the rank-0
    worlds, so 0/1 rankings exhaust the belief-relevant state space. The
    most-specific reports are downgraded to not-applicable if the operator
    violated any of the six postulates.
    """
    if (exhaustive is None) == (random_instances is None):
        raise _mode_error()
    if exhaustive is not None:
        if exhaustive > 3:
            raise SizeCapError("exhaustive DFPes sweeps are capped at 3 atoms")
        return _dfpes_signature_exhaustive(op, exhaustive)
    return _dfpes_signature_random(op, random_instances, seed, atoms, max_rank)


def _dfpes_signature_exhaustive(op: SignatureForgetOperator, n: int) -> SuiteResult:
    sig = generic_signature(n)
    tally = _Tally()
    worlds = list(all_worlds(sig))
    subs = sub_signatures(sig)
    state_list = all_belief_states(sig, include_empty=False)
    ocfs = [ocf_from_beliefs(bs) for bs in state_list]

    out_cache: dict[tuple[int, int], Ocf] = {}
    bel_cache: dict[tuple[int, int], BeliefState] = {}

    def out(si: int, pi: int) -> Ocf:
        key = (si, pi)
        if key not in out_cache:
            out_cache[key] = op.forget(ocfs[si], subs[pi])
        return out_cache[key]

    def bel(si: int, pi: int) -> BeliefState:
        key = (si, pi)
        if key not in bel_cache:
            bel_cache[key] = beliefs(out(si, pi))
        return bel_cache[key]

    def witness(postulate: str, si: int, sj: int, pi: int, p1i: int, p2i: int,
                lhs, rhs, **extra) -> dict:
        payload = {
            "family": "dfpes-signature",
            "postulate": postulate,
            "operator": op.name,
            "signature": _atoms_list(sig),
            "state": _ocf_payload(ocfs[si]),
            "state2": _ocf_payload(ocfs[sj]),
            "p": _atoms_list(subs[pi]),
            "p1": _atoms_list(subs[p1i]),
            "p2": _atoms_list(subs[p2i]),
            "lhs": sorted(w.text() for w in lhs),
            "rhs": sorted(w.text() for w in rhs),
        }
        payload.update(extra)
        return payload

    sub_index = {s.atoms: i for i, s in enumerate(subs)}
    any_violation = False

    # DFPes-1 and DFPes-6 over every (state, P).
    for si in range(len(ocfs)):
        for pi, p in enumerate(subs):
            keep = sig.minus(p)
            reduced_prior = reduce_worlds(beliefs(ocfs[si]), keep)
            ok1 = reduced_prior.worlds <= bel(si, pi).worlds
            tally.add(
                _report("DFPes-1", ok1,
                        lambda: witness("DFPes-1", si, si, pi, 0, 0,
                                        reduced_prior.worlds, bel(si, pi).worlds))
            )
            lifted = lift(out(si, pi), sig)
            back = reduce_worlds(beliefs(lifted), keep)
            ok6 = bel(si, pi).worlds == back.worlds
            tally.add(
                _report("DFPes-6", ok6,
                        lambda: witness("DFPes-6", si, si, pi, 0, 0,
                                        bel(si, pi).worlds, back.worlds))
            )
            any_violation = any_violation or not (ok1 and ok6)

    # DFPes-2 over every entailing pair of 0/1 rankings.
    # State index si encodes the zero-set bitmask si + 1.
    for sj in range(len(ocfs)):
        mask_j = sj + 1
        sub_mask = mask_j
        while sub_mask:
            si = sub_mask - 1
            for pi in range(len(subs)):
                ok = bel(si, pi).worlds <= bel(sj, pi).worlds
                tally.add(
                    _report("DFPes-2", ok,
                            lambda: witness("DFPes-2", si, sj, pi, 0, 0,
                                            bel(si, pi).worlds, bel(sj, pi).worlds))
                )
                any_violation = any_violation or not ok
            sub_mask = (sub_mask - 1) & mask_j

    # DFPes-3 over every (state, P, P' ⊆ P).
    for si in range(len(ocfs)):
        for pi, p in enumerate(subs):
            for p_prime in sub_signatures(p):
                p_prime_i = sub_index[p_prime.atoms]
                twice = beliefs(op.forget(out(si, p_prime_i), p))
                ok = twice.worlds == bel(si, pi).worlds
                tally.add(
                    _report("DFPes-3", ok,
                            lambda: witness("DFPes-3", si, si, pi, 0, 0,
                                            bel(si, pi).worlds, twice.worlds,
                                            p_prime=_atoms_list(p_prime)))
                )
                any_violation = any_violation or not ok

    # DFPes-4 and DFPes-5 over every (state, P1, P2).
    for si in range(len(ocfs)):
        for p1i, p1 in enumerate(subs):
            for p2i, p2 in enumerate(subs):
                union = p1.union(p2)
                union_i = sub_index[union.atoms]
                common = sig.minus(union)
                lhs = bel(si, union_i)
                first = reduce_worlds(bel(si, p1i), common)
                second = reduce_worlds(bel(si, p2i), common)
                ok4 = lhs.worlds == (first.worlds | second.worlds)
                tally.add(
                    _report("DFPes-4", ok4,
                            lambda: witness("DFPes-4", si, si, union_i, p1i, p2i,
                                            lhs.worlds, first.worlds | second.worlds))
                )
                chained = beliefs(op.forget(out(si, p1i), p2))
                ok5 = lhs.worlds == chained.worlds
                tally.add(
                    _report("DFPes-5", ok5,
                            lambda: witness("DFPes-5", si, si, union_i, p1i, p2i,
                                            lhs.worlds, chained.worlds))
                )
                any_violation = any_violation or not (ok4 and ok5)

    # Most-specific bound, meaningful only when the six postulates held.
    for si in range(len(ocfs)):
        for pi, p in enumerate(subs):
            report = check_most_specific(op, ocfs[si], p)
            if any_violation:
                report = PostulateReport(
                    "most-specific",
                    NOT_APPLICABLE,
                    note="operator violated the DFPes suite; bound not implied",
                )
            tally.add(report)

    return tally.result("dfpes-sig", op.name, {"exhaustive": n})


def _random_ocf(rng: random.Random, sig: Signature, max_rank: int) -> Ocf:
    ranks = [rng.randrange(max_rank + 1) for _ in range(2 ** len(sig))]
    low = min(ranks)
    return Ocf(sig, tuple(r - low for r in ranks))


def _dfpes_signature_random(
    op: SignatureForgetOperator, count: int, seed: int, atoms: int, max_rank: int
) -> SuiteResult:
    sig = generic_signature(atoms)
    rng = random.Random(seed)
    tally = _Tally()
    world_count = 2 ** len(sig)
    for _ in range(count):
        k1 = _random_ocf(rng, sig, max_rank)
        if rng.random() < 0.5:
            # Push extra worlds to rank 0 so that beliefs(k1) entails beliefs(k2).
            ranks = list(k1.ranks)
            for i in range(world_count):
                if rng.random() < 0.3:
                    ranks[i] = 0
            k2 = Ocf(sig, tuple(ranks))
        else:
            k2 = _random_ocf(rng, sig, max_rank)
        p = _random_sub_signature(rng, sig)
        p1 = _random_sub_signature(rng, sig)
        p2 = _random_sub_signature(rng, sig)
        violated_here = False
        for report in check_dfpes_signature(op, k1, k2, p, p1, p2):
            tally.add(report)
            violated_here = violated_here or report.violated
        specific = check_most_specific(op, k1, p)
        if violated_here:
            specific = PostulateReport(
                "most-specific",
                NOT_APPLICABLE,
                note="operator violated the DFPes suite; bound not implied",
            )
        tally.add(specific)
    return tally.result(
        "dfpes-sig", op.name,
        {"random": count, "seed": seed, "atoms": atoms, "max_rank": max_rank},
    )


def run_dfpes_formula_suite(
    op: FormulaForgetOperator,
    *,
    exhaustive: int | None = None,
    random_instances: int | None = None,
    seed: int = 0,
    atoms: int = 3,
    signature: Signature | None = None,
) -> SuiteResult:
    """Sweep DFPes-L-1..6 for `op` over consistent belief states.

    Exhaustive mode (n <= 2 atoms) quantifies over every nonempty belief
    state and every canonical formula class, testing DFPes-L-3 on every
    entailing formula pair and DFPes-L-4/5 on every pair. Random mode draws
    seeded states and syntactically varied formulas.
    """
    if (exhaustive is None) == (random_instances is None):
        raise _mode_error()
    if exhaustive is not None:
        if exhaustive > 2:
            raise SizeCapError("exhaustive DFPes-L sweeps are capped at 2 atoms")
        sig = signature if signature is not None else generic_signature(exhaustive)
        if len(sig) != exhaustive:
            raise OblivionError("signature size does not match the exhaustive bound")
        return _dfpes_formula_exhaustive(op, sig)
    sig = signature if signature is not None else generic_signature(atoms)
    return _dfpes_formula_random(op, random_instances, seed, sig)


def _dfpes_formula_exhaustive(op: FormulaForgetOperator, sig: Signature) -> SuiteResult:
    tally = _Tally()
    class_states = all_belief_states(sig)  # index = world bitmask
    class_formulas = [canonical_formula(bs) for bs in class_states]
    states = all_belief_states(sig, include_empty=False)

    def witness(postulate: str, s1: BeliefState, s2: BeliefState,
                phi: Formula, psi: Formula, lhs, rhs) -> dict:
        return {
            "family": "dfpes-formula",
            "postulate": postulate,
            "operator": op.name,
            "signature": _atoms_list(sig),
            "state": _state_payload(s1),
            "state2": _state_payload(s2),
            "phi": render_formula(phi),
            "psi": render_formula(psi),
            "lhs": sorted(w.text() for w in lhs),
            "rhs": sorted(w.text() for w in rhs),
        }

    out_cache: dict[tuple[frozenset, int], BeliefState] = {}

    def out(state: BeliefState, ci: int) -> BeliefState:
        key = (state.worlds, ci)
        if key not in out_cache:
            out_cache[key] = op.forget(state, class_formulas[ci])
        return out_cache[key]

    full_mask = len(class_states) - 1

    for s1 in states:
        # DFPes-L-1 and DFPes-L-6 over every formula class.
        for ci, phi in enumerate(class_formulas):
            result = out(s1, ci)
            tally.add(
                _report("DFPes-L-1", s1.worlds <= result.worlds,
                        lambda: witness("DFPes-L-1", s1, s1, phi, phi,
                                        s1.worlds, result.worlds))
            )
            if ci != full_mask:
                phi_worlds = class_states[ci].worlds
                tally.add(
                    _report("DFPes-L-6", not (result.worlds <= phi_worlds),
                            lambda: witness("DFPes-L-6", s1, s1, phi, phi,
                                            result.worlds, phi_worlds))
                )
        # DFPes-L-3 over entailing class pairs (phi entails psi).
        for cj in range(len(class_states)):
            ci = cj
            while True:
                phi, psi = class_formulas[ci], class_formulas[cj]
                lhs = out(s1, ci)
                rhs = op.forget(out(s1, cj), phi)
                tally.add(
                    _report("DFPes-L-3", lhs.worlds == rhs.worlds,
                            lambda: witness("DFPes-L-3", s1, s1, phi, psi,
                                            lhs.worlds, rhs.worlds))
                )
                if ci == 0:
                    break
                ci = (ci - 1) & cj
        # DFPes-L-4 and DFPes-L-5 over every class pair.
        for ci, phi in enumerate(class_formulas):
            for cj, psi in enumerate(class_formulas):
                disj = Or(phi, psi)
                out_disj = op.forget(s1, disj)
                joined = out(s1, ci).worlds | out(s1, cj).worlds
                tally.add(
                    _report("DFPes-L-4", out_disj.worlds == joined,
                            lambda: witness("DFPes-L-4", s1, s1, phi, psi,
                                            out_disj.worlds, joined))
                )
                chained = op.forget(out(s1, ci), psi)
                tally.add(
                    _report("DFPes-L-5", out_disj.worlds == chained.worlds,
                            lambda: witness("DFPes-L-5", s1, s1, phi, psi,
                                            out_disj.worlds, chained.worlds))
                )

    # DFPes-L-2 over every entailing state pair and formula class.
    for s2 in states:
        mask2 = _worlds_mask(s2, sig)
        sub_mask = mask2
        while sub_mask:
            s1 = class_states[sub_mask]
            for ci, phi in enumerate(class_formulas):
                ok = out(s1, ci).worlds <= out(s2, ci).worlds
                tally.add(
                    _report("DFPes-L-2", ok,
                            lambda: witness("DFPes-L-2", s1, s2, phi, phi,
                                            out(s1, ci).worlds, out(s2, ci).worlds))
                )
            sub_mask = (sub_mask - 1) & mask2

    return tally.result("dfpes-formula", op.name, {"exhaustive": len(sig)})


def _worlds_mask(state: BeliefState, sig: Signature) -> int:
    mask = 0
    for world in state.worlds:
        mask |= 1 << world.index
    return mask


def _dfpes_formula_random(
    op: FormulaForgetOperator, count: int, seed: int, sig: Signature
) -> SuiteResult:
    rng = random.Random(seed)
    tally = _Tally()
    worlds = list(all_worlds(sig))
    full_mask = 2 ** len(worlds) - 1

    def random_state() -> BeliefState:
        mask = rng.randrange(1, full_mask + 1)
        return BeliefState(
            sig, frozenset(w for i, w in enumerate(worlds) if mask >> i & 1)
        )

    for _ in range(count):
        s1 = random_state()
        if rng.random() < 0.5:
            extra = rng.randrange(full_mask + 1)
            s2 = BeliefState(
                sig,
                s1.worlds
                | frozenset(w for i, w in enumerate(worlds) if extra >> i & 1),
            )
        else:
            s2 = random_state()
        phi = _random_formula(rng, sig, 3)
        psi = _random_formula(rng, sig, 3)
        for report in check_dfpes_formula(op, s1, s2, phi, psi):
            tally.add(report)
    return tally.result(
        "dfpes-formula", op.name,
        {"random": count, "seed": seed, "atoms": len(sig)},
    )


# --- The operator census ---


@dataclass(frozen=True)
class CensusReport:
    """Result of enumerating every belief-level operator over a signature."""

    signature: Signature
    state_count: int
    formula_class_count: int
    operator_count: int
    survivors: tuple[dict, ...]
    first_failure_counts: dict[str, int]

    @property
    def survivor_count(self) -> int:
        return len(self.survivors)

    def to_json_dict(self) -> dict:
        return {
            "signature": _atoms_list(self.signature),
            "states": self.state_count,
            "formula_classes": self.formula_class_count,
            "operators": self.operator_count,
            "survivors": list(self.survivors),
            "first_failure_counts": self.first_failure_counts,
        }


def triviality_census(sig: Signature) -> CensusReport:
    """Enumerate all belief-level forgetting operators over `sig` and keep the
    ones satisfying DFPes-L-1..6 against every instance.

    An operator is a function from (consistent belief state, formula class)
    to a consistent belief state; formula classes are model sets, which is
    exhaustive because the postulates force syntax independence. Operators
    are encoded as flat tables: slot = state_index * class_count +
    class_index, value = output state index, with states enumerated as
    nonempty world bitmasks 1..2^w-1 in ascending order and classes as
    bitmasks 0..2^w-1.
    """
    if len(sig) > 2:
        raise SizeCapError("the operator census is capped at 2 atoms")
    worlds = list(all_worlds(sig))
    world_count = len(worlds)
    full_mask = (1 << world_count) - 1
    state_masks = list(range(1, full_mask + 1))
    class_count = full_mask + 1
    state_count = len(state_masks)
    operator_count = state_count ** (state_count * class_count)

    # Instance tables for the postulate checks, all as bitmask arithmetic.
    subset_state_pairs = [
        (i, j)
        for i in range(state_count)
        for j in range(state_count)
        if state_masks[i] & ~state_masks[j] == 0 and i != j
    ]
    entail_class_pairs = [
        (c1, c2) for c2 in range(class_count) for c1 in range(class_count)
        if c1 & ~c2 == 0
    ]
    class_pairs = [(c1, c2) for c1 in range(class_count) for c2 in range(class_count)]
    full_state = state_count - 1  # the all-worlds state has the largest mask
    C = class_count

    def first_failure(table: tuple[int, ...]) -> str | None:
        # DFPes-L-1, all-worlds row first: it forces output = all worlds,
        # which kills most tables within a few lookups.
        base = full_state * C
        for ci in range(C):
            if full_mask & ~state_masks[table[base + ci]]:
                return "DFPes-L-1"
        for si in range(state_count - 1):
            sm = state_masks[si]
            b = si * C
            for ci in range(C):
                if sm & ~state_masks[table[b + ci]]:
                    return "DFPes-L-1"
        # DFPes-L-2
        for i, j in subset_state_pairs:
            bi, bj = i * C, j * C
            for ci in range(C):
                if state_masks[table[bi + ci]] & ~state_masks[table[bj + ci]]:
                    return "DFPes-L-2"
        # DFPes-L-3
        for si in range(state_count):
            b = si * C
            for c1, c2 in entail_class_pairs:
                if table[b + c1] != table[table[b + c2] * C + c1]:
                    return "DFPes-L-3"
        # DFPes-L-4
        for si in range(state_count):
            b = si * C
            for c1, c2 in class_pairs:
                if state_masks[table[b + (c1 | c2)]] != (
                    state_masks[table[b + c1]] | state_masks[table[b + c2]]
                ):
                    return "DFPes-L-4"
        # DFPes-L-5
        for si in range(state_count):
            b = si * C
            for c1, c2 in class_pairs:
                if table[b + (c1 | c2)] != table[table[b + c1] * C + c2]:
                    return "DFPes-L-5"
        # DFPes-L-6
        for si in range(state_count):
            b = si * C
            for ci in range(C - 1):  # every class except the tautology
                if state_masks[table[b + ci]] & ~ci == 0:
                    return "DFPes-L-6"
        return None

    survivors: list[dict] = []
    failure_counts: dict[str, int] = {}
    for table in product(range(state_count), repeat=state_count * class_count):
        failed = first_failure(table)
        if failed is None:
            survivors.append(_render_census_survivor(sig, worlds, state_masks, table, C))
        else:
            failure_counts[failed] = failure_counts.get(failed, 0) + 1

    return CensusReport(
        sig,
        state_count,
        class_count,
        operator_count,
        tuple(survivors),
        dict(sorted(failure_counts.items())),
    )


def _mask_texts(mask: int, worlds: Sequence[World]) -> list[str]:
    return [w.text() for i, w in enumerate(worlds) if mask >> i & 1]


def _render_census_survivor(
    sig: Signature,
    worlds: Sequence[World],
    state_masks: Sequence[int],
    table: tuple[int, ...],
    class_count: int,
) -> dict:
    full = len(state_masks) - 1
    constant_top = all(value == full for value in table)
    entries = []
    for si, sm in enumerate(state_masks):
        for ci in range(class_count):
            formula = canonical_formula(
                BeliefState(
                    sig,
                    frozenset(w for i, w in enumerate(worlds) if ci >> i & 1),
                )
            )
            entries.append(
                {
                    "state": _mask_texts(sm, worlds),
                    "formula": render_formula(formula),
                    "result": _mask_texts(state_masks[table[si * class_count + ci]], worlds),
                }
            )
    return {
        "description": "constant-top" if constant_top else "non-trivial",
        "raw": list(table),
        "table": entries,
    }


def operator_from_census_table(
    sig: Signature, table: Sequence[int]
) -> FormulaForgetOperator:
    """Wrap a census-encoded operator table as a FormulaForgetOperator."""
    worlds = list(all_worlds(sig))
    full_mask = (1 << len(worlds)) - 1
    state_count = full_mask
    class_count = full_mask + 1
    if len(table) != state_count * class_count:
        raise OblivionError(
            f"census table over {{{sig}}} needs {state_count * class_count} entries"
        )
    if any(not 0 <= v < state_count for v in table):
        raise OblivionError("census table values must be state indices")

    def apply(state: BeliefState, formula: Formula) -> BeliefState:
        mask = _worlds_mask(state, sig)
        if mask == 0:
            raise OblivionError("census operators are defined on consistent states only")
        class_mask = _worlds_mask(models(formula, sig), sig)
        out_mask = table[(mask - 1) * class_count + class_mask] + 1
        return BeliefState(
            sig, frozenset(w for i, w in enumerate(worlds) if out_mask >> i & 1)
        )

    return FormulaForgetOperator("census-table", apply)


# --- Witness replay ---


def replay_report(
    witness: dict,
    *,
    signature_operator: SignatureForgetOperator | None = None,
    formula_operator: FormulaForgetOperator | None = None,
) -> PostulateReport:
    """Re-run the single postulate check a witness came from.

    Operators are resolved from the witness's operator name unless an
    operator instance is passed explicitly (required for non-built-ins).
    """
    family = witness["family"]
    postulate = witness["postulate"]
    sig = Signature(witness["signature"])
    if family == "dfp":
        kb = KnowledgeBase(sig, tuple(parse_formula(t) for t in witness["kb"]))
        kb2 = KnowledgeBase(sig, tuple(parse_formula(t) for t in witness["kb2"]))
        reports = check_dfp(kb, kb2, Signature(witness["p"]), Signature(witness["p2"]))
    elif family == "dfpes-signature":
        op = signature_operator or get_signature_operator(witness["operator"])
        k1 = _ocf_from_payload(witness["state"])
        k2 = _ocf_from_payload(witness["state2"]) if witness.get("state2") else k1
        p = Signature(witness["p"])
        if postulate == "most-specific":
            return check_most_specific(op, k1, p)
        reports = check_dfpes_signature(
            op, k1, k2, p, Signature(witness["p1"]), Signature(witness["p2"])
        )
    elif family == "dfpes-formula":
        fop = formula_operator or get_formula_operator(witness["operator"])
        s1 = _state_from_payload(sig, witness["state"])
        s2 = _state_from_payload(sig, witness["state2"]) if witness.get("state2") else s1
        phi = parse_formula(witness["phi"])
        psi = parse_formula(witness["psi"])
        if postulate == "syntax-independence":
            return check_syntax_independence(fop, s1, phi, psi)
        if postulate == "conjunction-collapse":
            return check_conjunction_collapse(fop, s1, phi, psi)
        reports = check_dfpes_formula(fop, s1, s2, phi, psi)
    else:
        raise OblivionError(f"unknown witness family {family!r}")
    for report in reports:
        if report.postulate == postulate:
            return report
    raise OblivionError(f"no report produced for postulate {postulate!r}")


def _ocf_from_payload(payload: dict) -> Ocf:
    sig = Signature(payload["signature"])
    pairs = [
        (World.from_text(text, sig), rank) for text, rank in payload["ranks"].items()
    ]
    return make_ocf(sig, pairs)


def _state_from_payload(sig: Signature, texts: Iterable[str]) -> BeliefState:
    return BeliefState(sig, frozenset(World.from_text(t, sig) for t in texts))
