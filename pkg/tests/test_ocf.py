"""Ranking functions: construction, queries, marginalisation, lifting."""

from __future__ import annotations

import random

import pytest

from oblivion import (
    BeliefState,
    FileFormatError,
    InconsistentBeliefsError,
    Ocf,
    OcfValidationError,
    Rank,
    Signature,
    SignatureMismatchError,
    UnknownAtomError,
    World,
    all_worlds,
    beliefs,
    believes,
    dumps_ocf,
    expand_worlds,
    lift,
    loads_ocf,
    make_ocf,
    marginalise,
    ocf_from_beliefs,
    parse_formula,
    rank_of,
    reduce_worlds,
)
from helpers import all_canonical_formulas, all_model_sets, sub_signatures

SIG = Signature(["p", "b", "f"])
KAPPA_TEXT = """sig: p b f
-p -b -f : 0
p b -f : 0
-p b f : 0
p -b -f : 1
-p -b f : 1
p -b f : 1
p b f : 2
-p b -f : 2
"""
KAPPA = loads_ocf(KAPPA_TEXT)


def world(text: str, sig: Signature = SIG) -> World:
    return World.from_text(text, sig)


# --- Rank ---


def test_rank_ordering():
    assert Rank(0) < Rank(1) < Rank.INFINITE
    assert not Rank.INFINITE < Rank.INFINITE
    assert Rank(2) == Rank(2)
    assert Rank.INFINITE.is_infinite


def test_rank_validation():
    with pytest.raises(OcfValidationError):
        Rank(-1)


# --- Construction ---


def test_make_ocf_worked_example_is_valid():
    pairs = [(w, KAPPA.ranks[w.index]) for w in all_worlds(SIG)]
    assert make_ocf(SIG, pairs) == KAPPA


def test_make_ocf_uniform_zero():
    sig = Signature(["p"])
    state = make_ocf(sig, [(w, 0) for w in all_worlds(sig)])
    assert state.ranks == (0, 0)


def test_make_ocf_unnormalized_rejected():
    sig = Signature(["p"])
    pairs = [(world("p", sig), 1), (world("-p", sig), 2)]
    with pytest.raises(OcfValidationError) as err:
        make_ocf(sig, pairs)
    assert "normalized" in str(err.value)


def test_make_ocf_missing_and_duplicate_worlds():
    sig = Signature(["p"])
    with pytest.raises(OcfValidationError) as err:
        make_ocf(sig, [(world("p", sig), 0)])
    assert "missing" in str(err.value)
    with pytest.raises(OcfValidationError) as err:
        make_ocf(sig, [(world("p", sig), 0), (world("p", sig), 1)])
    assert "duplicate" in str(err.value)


def test_ocf_validation_direct():
    with pytest.raises(OcfValidationError):
        Ocf(Signature(["p"]), (0,))
    with pytest.raises(OcfValidationError):
        Ocf(Signature(["p"]), (1, 2))
    with pytest.raises(OcfValidationError):
        Ocf(Signature(["p"]), (0, -1))


# --- Queries ---


def test_rank_of_worked_example():
    assert rank_of(KAPPA, parse_formula("!b & f")) == Rank(1)
    assert rank_of(KAPPA, parse_formula("true")) == Rank(0)
    assert rank_of(KAPPA, parse_formula("false")) == Rank.INFINITE


def test_rank_of_unknown_atom():
    with pytest.raises(UnknownAtomError):
        rank_of(KAPPA, parse_formula("q"))


def test_rank_of_disjunction_is_min():
    rng = random.Random(99)
    formulas = all_canonical_formulas(SIG)
    for _ in range(300):
        phi = rng.choice(formulas)
        psi = rng.choice(formulas)
        combined = rank_of(KAPPA, parse_formula(f"({phi}) | ({psi})"))
        assert combined == min(rank_of(KAPPA, phi), rank_of(KAPPA, psi))


def test_beliefs_worked_example():
    assert beliefs(KAPPA).world_texts() == ["-b -f -p", "b -f p", "b f -p"]


def test_beliefs_uniform_and_singleton():
    sig = Signature(["p"])
    uniform = Ocf(sig, (0, 0))
    assert beliefs(uniform).worlds == BeliefState.full(sig).worlds
    pointed = Ocf(sig, (0, 3))
    assert beliefs(pointed).world_texts() == ["-p"]


def test_believes_examples():
    assert believes(KAPPA, parse_formula("f -> b"))
    assert believes(KAPPA, parse_formula("true"))
    assert not believes(KAPPA, parse_formula("b"))


# --- Marginalisation and lifting ---


def test_marginalise_worked_example():
    marginal = marginalise(KAPPA, Signature(["b", "f"]))
    assert marginal.to_json_dict()["ranks"] == {
        "-b -f": 0, "-b f": 1, "b -f": 0, "b f": 0,
    }


def test_marginalise_identity_and_empty():
    assert marginalise(KAPPA, SIG) == KAPPA
    empty = marginalise(KAPPA, Signature([]))
    assert empty.ranks == (0,)


def test_marginalise_requires_sub_signature():
    with pytest.raises(SignatureMismatchError):
        marginalise(KAPPA, Signature(["q"]))


def test_lift_worked_example():
    marginal = marginalise(KAPPA, Signature(["b", "f"]))
    lifted = lift(marginal, SIG)
    assert lifted.to_json_dict()["ranks"] == {
        "-b -f -p": 0, "-b -f p": 0, "-b f -p": 1, "-b f p": 1,
        "b -f -p": 0, "b -f p": 0, "b f -p": 0, "b f p": 0,
    }


def test_lift_identity_and_uniform():
    assert lift(KAPPA, SIG) == KAPPA
    uniform = Ocf(Signature(["b"]), (0, 0))
    assert lift(uniform, Signature(["b", "f"])).ranks == (0, 0, 0, 0)


def test_lift_requires_super_signature():
    with pytest.raises(SignatureMismatchError):
        lift(KAPPA, Signature(["b", "f"]))


def test_lift_then_marginalise_recovers_ranks():
    rng = random.Random(7)
    sig = Signature(["a", "b", "c"])
    for _ in range(100):
        ranks = [rng.randrange(5) for _ in range(8)]
        low = min(ranks)
        state = Ocf(sig, tuple(r - low for r in ranks))
        for sub in sub_signatures(sig):
            small = marginalise(state, sub)
            assert marginalise(lift(small, sig), sub) == small


def test_marginalise_composes():
    rng = random.Random(8)
    sig = Signature(["a", "b", "c"])
    for _ in range(100):
        ranks = [rng.randrange(4) for _ in range(8)]
        low = min(ranks)
        state = Ocf(sig, tuple(r - low for r in ranks))
        for mid in sub_signatures(sig):
            for small in sub_signatures(mid):
                assert marginalise(marginalise(state, mid), small) == \
                    marginalise(state, small)


# --- Building states from beliefs ---


def test_ocf_from_beliefs_roundtrip():
    gamma_models = beliefs(KAPPA)
    rebuilt = ocf_from_beliefs(gamma_models)
    assert beliefs(rebuilt).worlds == gamma_models.worlds
    assert set(rebuilt.ranks) == {0, 1}


def test_ocf_from_beliefs_full_set_is_uniform():
    state = ocf_from_beliefs(BeliefState.full(SIG))
    assert state.ranks == (0,) * 8


def test_ocf_from_beliefs_rejects_empty():
    with pytest.raises(InconsistentBeliefsError):
        ocf_from_beliefs(BeliefState.empty(SIG))


# --- Belief properties at small scale (the full sweep is in acceptance) ---


def test_marginal_beliefs_are_reduced_beliefs_two_atoms():
    sig = Signature(["a", "b"])
    for bs in all_model_sets(sig, include_empty=False):
        state = ocf_from_beliefs(bs)
        for sub in sub_signatures(sig):
            assert beliefs(marginalise(state, sub)).worlds == \
                reduce_worlds(beliefs(state), sub).worlds


def test_lifted_beliefs_are_expanded_beliefs_two_atoms():
    sig = Signature(["a", "b"])
    for bs in all_model_sets(sig, include_empty=False):
        state = ocf_from_beliefs(bs)
        for sub in sub_signatures(sig):
            small = marginalise(state, sub)
            assert beliefs(lift(small, sig)).worlds == \
                expand_worlds(beliefs(small), sig).worlds


def test_marginal_believes_iff_prior_believes_two_atoms():
    sig = Signature(["a", "b"])
    for bs in all_model_sets(sig, include_empty=False):
        state = ocf_from_beliefs(bs)
        for sub in sub_signatures(sig):
            marginal = marginalise(state, sub)
            for formula in all_canonical_formulas(sub):
                assert believes(marginal, formula) == believes(state, formula)


# --- File format ---


def test_ocf_text_roundtrip():
    assert loads_ocf(dumps_ocf(KAPPA)) == KAPPA


def test_ocf_loader_errors():
    with pytest.raises(FileFormatError):
        loads_ocf("p : 0\n")  # no header
    with pytest.raises(FileFormatError) as err:
        loads_ocf("sig: p\np : 0\n")  # missing -p
    assert "missing" in str(err.value)
    with pytest.raises(FileFormatError):
        loads_ocf("sig: p\np : 1\n-p : 2\n")  # unnormalized
    with pytest.raises(FileFormatError):
        loads_ocf("sig: p\np : zero\n-p : 0\n")
    with pytest.raises(FileFormatError):
        loads_ocf("sig: p\np : 0\np : 1\n-p : 0\n")
    with pytest.raises(FileFormatError):
        loads_ocf("sig: p\np 0\n-p 0\n")


def test_ocf_json_export():
    payload = KAPPA.to_json_dict()
    assert payload["signature"] == ["b", "f", "p"]
    assert payload["ranks"]["b -f p"] == 0
    assert len(payload["ranks"]) == 8
