"""Ranking functions over worlds: queries, beliefs, marginalisation, lifting.

An Ocf assigns every world over its signature a non-negative integer rank,
with at least one world at rank 0 (normalization). Rank reads as
implausibility: the rank-0 worlds are the most plausible ones and their theory
is what the state believes. Marginalisation to a sub-signature gives each
shorter world the minimum rank among its extensions; lifting to a
super-signature ranks each world by its reduction, so the new atoms carry no
information. Marginalising a lifted state recovers it exactly; lifting a
marginal does not recover the discarded rank structure.

OCF file format (.ocf): a `sig: p b f` header, then one `<world> : <rank>`
line per world (e.g. `-b -f p : 2`). `#` comments and blank lines are
ignored; the loader enforces totality and normalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from pathlib import Path
from typing import ClassVar, Iterable, Iterator

from .errors import (
    FileFormatError,
    InconsistentBeliefsError,
    OcfValidationError,
    SignatureMismatchError,
)
from .logic import (
    BeliefState,
    Formula,
    Signature,
    World,
    all_worlds,
    entails,
    evaluate,
    formula_atoms,
)


@total_ordering
@dataclass(frozen=True)
class Rank:
    """A formula rank: a finite non-negative integer, or infinite.

    The infinite rank only arises from `rank_of` on unsatisfiable formulas
    (the minimum over an empty model set); world ranks are always finite.
    """

    value: int | None = None  # None encodes the infinite rank

    INFINITE: ClassVar["Rank"]

    def __post_init__(self) -> None:
        if self.value is not None and (not isinstance(self.value, int) or self.value < 0):
            raise OcfValidationError(f"rank value must be a non-negative integer, got {self.value!r}")

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __lt__(self, other: "Rank") -> bool:
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.value < other.value  # type: ignore[operator]

    def __repr__(self) -> str:
        return "Rank.INFINITE" if self.is_infinite else f"Rank({self.value})"


Rank.INFINITE = Rank(None)


@dataclass(frozen=True)
class Ocf:
    """A total, normalized ranking of all worlds over a signature.

    `ranks[i]` is the rank of the world with enumeration index `i`.
    """

    signature: Signature
    ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ranks", tuple(self.ranks))
        expected = 2 ** len(self.signature)
        if len(self.ranks) != expected:
            raise OcfValidationError(
                f"ranking over {{{self.signature}}} needs {expected} ranks, got {len(self.ranks)}"
            )
        for rank in self.ranks:
            if not isinstance(rank, int) or rank < 0:
                raise OcfValidationError(f"world rank must be a non-negative integer, got {rank!r}")
        if min(self.ranks) != 0:
            raise OcfValidationError(
                f"ranking is not normalized: minimum rank is {min(self.ranks)}, expected 0"
            )

    def rank_of_world(self, world: World) -> int:
        if world.signature != self.signature:
            raise SignatureMismatchError(
                f"world {world.text()!r} is not over {{{self.signature}}}"
            )
        return self.ranks[world.index]

    def worlds(self) -> Iterator[World]:
        return all_worlds(self.signature)

    def items(self) -> Iterator[tuple[World, int]]:
        for world in all_worlds(self.signature):
            yield world, self.ranks[world.index]

    def to_json_dict(self) -> dict:
        return {
            "signature": list(self.signature.atoms),
            "ranks": {world.text(): rank for world, rank in self.items()},
        }


def make_ocf(signature: Signature, assignments: Iterable[tuple[World, int]]) -> Ocf:
    """Build a validated Ocf from explicit (world, rank) pairs.

    The assignments must cover every world over the signature exactly once and
    reach rank 0 somewhere.
    """
    size = 2 ** len(signature)
    ranks: list[int | None] = [None] * size
    for world, rank in assignments:
        if world.signature != signature:
            raise SignatureMismatchError(
                f"world {world.text()!r} is not over signature {{{signature}}}"
            )
        if ranks[world.index] is not None:
            raise OcfValidationError(f"duplicate world {world.text()!r}")
        ranks[world.index] = rank
    for index, rank in enumerate(ranks):
        if rank is None:
            missing = World.from_index(signature, index)
            raise OcfValidationError(f"missing world {missing.text()!r}")
    return Ocf(signature, tuple(ranks))  # type: ignore[arg-type]


def rank_of(state: Ocf, formula: Formula) -> Rank:
    """Minimum rank over the formula's models; infinite when there are none."""
    for atom in formula_atoms(formula):
        state.signature.position(atom)
    best: int | None = None
    for world, rank in state.items():
        if evaluate(world, formula) and (best is None or rank < best):
            best = rank
    return Rank.INFINITE if best is None else Rank(best)


def beliefs(state: Ocf) -> BeliefState:
    """The rank-0 worlds: the models of what the state believes."""
    return BeliefState(
        state.signature,
        frozenset(world for world, rank in state.items() if rank == 0),
    )


def believes(state: Ocf, formula: Formula) -> bool:
    """True iff every most-plausible world satisfies the formula."""
    return entails(beliefs(state), formula)


def _projection_positions(signature: Signature, sub: Signature) -> list[int]:
    return [signature.position(atom) for atom in sub]


def marginalise(state: Ocf, sub: Signature) -> Ocf:
    """Restrict to `sub`: each shorter world gets its extensions' minimum rank."""
    if not sub.is_subset_of(state.signature):
        raise SignatureMismatchError(
            f"{{{sub}}} is not a sub-signature of {{{state.signature}}}"
        )
    n = len(state.signature)
    positions = _projection_positions(state.signature, sub)
    shifts = [n - 1 - p for p in positions]
    out: list[int | None] = [None] * (2 ** len(sub))
    for index, rank in enumerate(state.ranks):
        sub_index = 0
        for shift in shifts:
            sub_index = (sub_index << 1) | ((index >> shift) & 1)
        if out[sub_index] is None or rank < out[sub_index]:  # type: ignore[operator]
            out[sub_index] = rank
    return Ocf(sub, tuple(out))  # type: ignore[arg-type]


def lift(state: Ocf, superset: Signature) -> Ocf:
    """Extend to `superset`: each world is ranked by its reduction."""
    if not state.signature.is_subset_of(superset):
        raise SignatureMismatchError(
            f"{{{state.signature}}} is not a sub-signature of {{{superset}}}"
        )
    n = len(superset)
    positions = _projection_positions(superset, state.signature)
    shifts = [n - 1 - p for p in positions]
    out = []
    for index in range(2 ** n):
        sub_index = 0
        for shift in shifts:
            sub_index = (sub_index << 1) | ((index >> shift) & 1)
        out.append(state.ranks[sub_index])
    return Ocf(superset, tuple(out))


def ocf_from_beliefs(state: BeliefState) -> Ocf:
    """The 0/1 ranking believing exactly the given (consistent) state.

    Beliefs depend only on the rank-0 worlds, so this minimal representative
    is enough wherever only posterior beliefs matter.
    """
    if not state.worlds:
        raise InconsistentBeliefsError(
            "cannot build a ranking from an empty world set (no world can take rank 0)"
        )
    member = frozenset(w.index for w in state.worlds)
    ranks = tuple(0 if i in member else 1 for i in range(2 ** len(state.signature)))
    return Ocf(state.signature, ranks)


_SIG_HEADER = "sig:"


def loads_ocf(text: str, source: str = "<string>") -> Ocf:
    """Parse .ocf text; enforces totality and normalization."""
    signature: Signature | None = None
    pairs: list[tuple[World, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith(_SIG_HEADER):
            if signature is not None:
                raise FileFormatError("duplicate sig header", lineno, source)
            try:
                signature = Signature(line[len(_SIG_HEADER) :].split())
            except Exception as exc:
                raise FileFormatError(str(exc), lineno, source) from exc
            continue
        if signature is None:
            raise FileFormatError("expected a `sig:` header before rank lines", lineno, source)
        if ":" not in line:
            raise FileFormatError("expected `<world> : <rank>`", lineno, source)
        world_text, _, rank_text = line.rpartition(":")
        try:
            rank = int(rank_text.strip())
        except ValueError:
            raise FileFormatError(f"invalid rank {rank_text.strip()!r}", lineno, source) from None
        try:
            world = World.from_text(world_text.strip(), signature)
        except Exception as exc:
            raise FileFormatError(str(exc), lineno, source) from exc
        pairs.append((world, rank))
    if signature is None:
        raise FileFormatError("missing `sig:` header", 1, source)
    try:
        return make_ocf(signature, pairs)
    except OcfValidationError as exc:
        raise FileFormatError(str(exc), len(text.splitlines()) or 1, source) from exc


def load_ocf(path: str | Path) -> Ocf:
    path = Path(path)
    return loads_ocf(path.read_text(encoding="utf-8"), source=str(path))


def dumps_ocf(state: Ocf) -> str:
    lines = [f"sig: {' '.join(state.signature.atoms)}"]
    lines.extend(f"{world.text()} : {rank}" for world, rank in state.items())
    return "\n".join(lines) + "\n"
