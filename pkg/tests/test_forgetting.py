"""Model-level forgetting, variable elimination, and the DFP properties."""

from __future__ import annotations

import pytest

from oblivion import (
    And,
    Atom,
    Bottom,
    FileFormatError,
    Implies,
    KnowledgeBase,
    Or,
    Signature,
    Top,
    UnknownAtomError,
    World,
    all_worlds,
    boole_forget,
    canonical_formula,
    check_boole_equivalence,
    check_dfp,
    evaluate,
    forget_original,
    forget_reduced,
    loads_kb,
    parse_formula,
    reduce_worlds,
    run_dfp_suite,
    substitute,
)
from helpers import all_canonical_formulas, all_model_sets, sub_signatures

SIG = Signature(["p", "b", "f"])
GAMMA_TEXT = "sig: p b f\np -> b\nf -> !p\nf -> b\n!f -> (p | !b)\n"
GAMMA_KB = loads_kb(GAMMA_TEXT)
P = Signature(["p"])


# --- KnowledgeBase and the .kb format ---


def test_kb_rejects_atoms_outside_signature():
    with pytest.raises(UnknownAtomError):
        KnowledgeBase(Signature(["p"]), (parse_formula("q"),))


def test_kb_from_formulas_derives_signature():
    kb = KnowledgeBase.from_formulas([parse_formula("p -> b")])
    assert kb.signature.atoms == ("b", "p")


def test_loads_kb_union_signature_without_header():
    kb = loads_kb("p -> b\nf | p\n")
    assert kb.signature.atoms == ("b", "f", "p")


def test_loads_kb_header_pins_signature():
    kb = loads_kb("sig: p q\np\n")
    assert kb.signature.atoms == ("p", "q")
    assert len(kb.models().worlds) == 2


def test_loads_kb_comments_and_blanks():
    kb = loads_kb("# header comment\n\np -> b  # trailing comment\n")
    assert [str(f) for f in kb.formulas] == ["p -> b"]


def test_loads_kb_error_line_numbers():
    with pytest.raises(FileFormatError) as err:
        loads_kb("p -> b\np -> (\n")
    assert err.value.line == 2
    with pytest.raises(FileFormatError) as err:
        loads_kb("sig: p\nsig: q\n")
    assert err.value.line == 2
    with pytest.raises(FileFormatError) as err:
        loads_kb("sig: p\nq -> p\n")
    assert err.value.line == 2


def test_empty_kb_is_tautological():
    kb = loads_kb("sig: p\n")
    assert len(kb.models().worlds) == 2


# --- forget_reduced / forget_original ---


def test_forget_reduced_worked_example():
    assert forget_reduced(GAMMA_KB, P).world_texts() == ["-b -f", "b -f", "b f"]


def test_forget_reduced_nothing_is_identity():
    assert forget_reduced(GAMMA_KB, Signature([])).worlds == GAMMA_KB.models().worlds


def test_forget_reduced_everything():
    result = forget_reduced(GAMMA_KB, SIG)
    assert result.signature == Signature([])
    assert len(result.worlds) == 1  # consistent base: the single empty world
    contradiction = loads_kb("sig: p\np\n!p\n")
    assert forget_reduced(contradiction, Signature(["p"])).worlds == frozenset()


def test_forget_ignores_atoms_outside_signature():
    wide = Signature(["p", "q"])
    assert forget_reduced(GAMMA_KB, wide).worlds == \
        forget_reduced(GAMMA_KB, P).worlds


def test_forget_inconsistent_base_gives_empty_state():
    contradiction = loads_kb("sig: p b\np\n!p\n")
    result = forget_reduced(contradiction, Signature(["p"]))
    assert result.signature.atoms == ("b",)
    assert result.worlds == frozenset()


def test_forget_original_worked_example():
    assert forget_original(GAMMA_KB, P).world_texts() == [
        "-b -f -p", "-b -f p", "b -f -p", "b -f p", "b f -p", "b f p",
    ]


def test_forget_original_nothing_is_identity():
    assert forget_original(GAMMA_KB, Signature([])).worlds == GAMMA_KB.models().worlds


def test_forget_original_closed_under_flips_of_forgotten_atom():
    sig = SIG
    flip = sig.position("p")
    for bs in all_model_sets(sig, include_empty=False):
        kb = KnowledgeBase(sig, (canonical_formula(bs),))
        result = forget_original(kb, P)
        for world in result.worlds:
            bits = list(world.bits)
            bits[flip] = 1 - bits[flip]
            assert World(sig, tuple(bits)) in result.worlds


# --- Substitution and variable elimination ---


def test_substitute_replaces_atom():
    assert substitute(parse_formula("p & b"), "p", True) == And(Top(), Atom("b"))


def test_substitute_absent_atom_is_identity():
    formula = parse_formula("p & b")
    assert substitute(formula, "q", False) == formula


def test_substitute_false():
    assert substitute(parse_formula("p -> b"), "p", False) == Implies(Bottom(), Atom("b"))


def test_boole_forget_is_syntactic_disjunction():
    assert boole_forget(parse_formula("p & b"), "p") == Or(
        And(Top(), Atom("b")), And(Bottom(), Atom("b"))
    )
    assert boole_forget(parse_formula("b"), "p") == Or(Atom("b"), Atom("b"))


def test_boole_forget_semantics_by_truth_table():
    sig = Signature(["p", "b"])
    result = boole_forget(parse_formula("p & b"), "p")
    for world in all_worlds(sig):
        assert evaluate(world, result) == evaluate(world, parse_formula("b"))
    self_forget = boole_forget(parse_formula("p"), "p")
    assert all(evaluate(w, self_forget) for w in all_worlds(Signature(["p"])))


def test_check_boole_equivalence_examples():
    assert check_boole_equivalence(parse_formula("p & b"), "p")
    assert check_boole_equivalence(Top(), "p", Signature(["p"]))
    with pytest.raises(UnknownAtomError):
        check_boole_equivalence(parse_formula("p"), "q", Signature(["p"]))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_boole_equivalence_exhaustive(n):
    sig = Signature([chr(ord("a") + i) for i in range(n)])
    for formula in all_canonical_formulas(sig):
        for atom in sig:
            assert check_boole_equivalence(formula, atom, sig)


# --- DFP properties ---


def test_check_dfp_worked_example_all_hold():
    reports = check_dfp(GAMMA_KB, GAMMA_KB, P, Signature(["b"]))
    assert [r.postulate for r in reports] == [f"DFP-{i}" for i in range(1, 8)]
    assert all(r.status == "holds" for r in reports)
    assert "representation" in next(r.note for r in reports if r.postulate == "DFP-3")


def test_check_dfp_empty_sets_trivial():
    empty = Signature([])
    reports = check_dfp(GAMMA_KB, GAMMA_KB, empty, empty)
    assert all(r.status == "holds" for r in reports)


def test_check_dfp_vacuous_entailment_is_noted():
    stronger = loads_kb("sig: p b f\np\nb\n!f\n")
    reports = check_dfp(GAMMA_KB, stronger, P, P)
    dfp2 = next(r for r in reports if r.postulate == "DFP-2")
    assert dfp2.status == "holds"
    assert "vacuously" in dfp2.note


def test_dfp_random_instances_all_hold():
    result = run_dfp_suite(random_instances=200, seed=42)
    assert result.ok
    assert result.checks["DFP-1"] == 200


def test_dfp_exhaustive_two_atoms():
    result = run_dfp_suite(exhaustive=2)
    assert result.ok
    assert result.checks == {
        "DFP-1": 64, "DFP-2": 324, "DFP-3": 64, "DFP-4": 144,
        "DFP-5": 256, "DFP-6": 256, "DFP-7": 64,
    }


def test_dfp_exhaustive_three_atoms():
    result = run_dfp_suite(exhaustive=3)
    assert result.ok
    assert result.checks == {
        "DFP-1": 2048, "DFP-2": 52488, "DFP-3": 2048, "DFP-4": 6912,
        "DFP-5": 16384, "DFP-6": 16384, "DFP-7": 2048,
    }


def test_dfp_five_reduced_intersection_restatement():
    # The reduced-model intersection form of the union property, checked
    # directly against the forgetting pipeline on every 2-atom instance.
    sig = Signature(["a", "b"])
    for bs in all_model_sets(sig):
        kb = KnowledgeBase(sig, (canonical_formula(bs),))
        for p1 in sub_signatures(sig):
            for p2 in sub_signatures(sig):
                union = p1.union(p2)
                common = sig.minus(union)
                lhs = forget_reduced(kb, union)
                first = reduce_worlds(forget_reduced(kb, p1), common)
                second = reduce_worlds(forget_reduced(kb, p2), common)
                assert lhs.worlds == first.worlds & second.worlds
