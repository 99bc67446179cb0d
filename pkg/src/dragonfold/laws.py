"""Executable checks for the algebra behind the two dragon constructions.

Every law that the equivalence proof of the two constructions rests on is
checked mechanically here, either exhaustively or over seeded random cases.
Each check returns a LawReport; the same seed, bounds, and case count always
reproduce the same cases and therefore the same report. Laws whose
hypotheses require an odd-length curve additionally run a small
deterministic probe over even lengths and record the counterexample it
finds, demonstrating that the side condition is load-bearing rather than
decorative.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator

from . import construct
from .core import LR, RL, AlternatingStream, interleave, curve_map_inv, curve_reverse

LAW_IDS = (
    "eq2",
    "eq3",
    "eq4",
    "eq5",
    "naturality",
    "duality1",
    "duality2",
    "length",
    "prefix",
    "equivalence",
)

# Hard ceilings: the exhaustive equivalence check doubles per instruction,
# and the length/prefix checks materialize curves of 2**n - 1 turns.
EQUIVALENCE_MAX_LEN = 16
CLASSIC_MAX_ORDER = 20

_STREAMS = (("lr", LR), ("rl", RL))
_BITS_TO_TURNS = str.maketrans("01", "LR")
_BITS_TO_ROTS = str.maketrans("01", "CA")


@dataclass(frozen=True)
class CaseFailure:
    """One counterexample: the inputs in text encoding and both sides."""

    case: int
    inputs: str
    expected: str
    actual: str
    mismatch: int | None

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "inputs": self.inputs,
            "expected": self.expected,
            "actual": self.actual,
            "first_mismatch": self.mismatch,
        }


@dataclass(frozen=True)
class Probe:
    """Outcome of the even-length side-condition search for one law."""

    cases_tried: int
    counterexample: CaseFailure | None

    @property
    def found(self) -> bool:
        return self.counterexample is not None

    def to_json(self) -> dict:
        ce = self.counterexample
        return {
            "cases_tried": self.cases_tried,
            "counterexample": None if ce is None else ce.to_json(),
        }


@dataclass(frozen=True)
class LawReport:
    law_id: str
    seed: int | None
    cases_run: int
    failures: tuple[CaseFailure, ...]
    probe: Probe | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        seed = "-" if self.seed is None else str(self.seed)
        line = (
            f"{self.law_id:<12} cases={self.cases_run:<8} "
            f"failures={len(self.failures):<4} seed={seed}"
        )
        if self.probe is not None:
            state = "even-length counterexample found" if self.probe.found else "NO counterexample"
            line += f"  [probe: {state} in {self.probe.cases_tried} tries]"
        return line

    def to_json(self) -> dict:
        data = {
            "law_id": self.law_id,
            "seed": self.seed,
            "cases_run": self.cases_run,
            "passed": self.passed,
            "failures": [f.to_json() for f in self.failures],
        }
        if self.probe is not None:
            data["probe"] = self.probe.to_json()
        return data


def _random_word(rng: random.Random, n: int, table: dict) -> str:
    if n == 0:
        return ""
    return format(rng.getrandbits(n), f"0{n}b").translate(table)


@dataclass(frozen=True)
class CaseGenerator:
    """Deterministic random-case source.

    Backed by random.Random (a Mersenne Twister), so a given seed and size
    bounds reproduce the identical case sequence on any platform.
    """

    seed: int = 42
    size_bounds: tuple[int, int] = (0, 999)

    def __post_init__(self) -> None:
        lo, hi = self.size_bounds
        if not 0 <= lo <= hi:
            raise ValueError(f"bad size bounds: {self.size_bounds}")

    def rng(self) -> random.Random:
        return random.Random(self.seed)

    def curve(self, rng: random.Random, odd: bool = False) -> str:
        """A random curve with length inside the bounds; odd length only
        when asked (laws with a parity side condition ask)."""
        lo, hi = self.size_bounds
        if odd:
            lo = lo if lo % 2 else lo + 1
            if lo > hi:
                raise ValueError(f"no odd length inside bounds {self.size_bounds}")
            n = rng.randrange(lo, hi + 1, 2)
        else:
            n = rng.randint(lo, hi)
        return _random_word(rng, n, _BITS_TO_TURNS)

    def rots(self, rng: random.Random, max_len: int) -> str:
        """A random instruction list of length 0..max_len."""
        return _random_word(rng, rng.randint(0, max_len), _BITS_TO_ROTS)


def _first_mismatch(a: str, b: str) -> int:
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    return min(len(a), len(b))


def _failure(case: int, inputs: str, expected: str, actual: str) -> CaseFailure:
    return CaseFailure(case, inputs, expected, actual, _first_mismatch(expected, actual))


def _check_cases(
    law_id: str,
    gen: CaseGenerator,
    cases: int,
    run_case: Callable[[random.Random, int], Iterable[tuple[str, str, str]]],
    probe: Probe | None = None,
) -> LawReport:
    """Drive one seeded check: run_case yields (inputs, expected, actual)
    triples for case index i, one triple per checked variant."""
    rng = gen.rng()
    failures = []
    for i in range(cases):
        for inputs, expected, actual in run_case(rng, i):
            if expected != actual:
                failures.append(_failure(i, inputs, expected, actual))
    return LawReport(law_id, gen.seed, cases, tuple(failures), probe)


def _even_words(max_len: int) -> Iterator[str]:
    for n in range(0, max_len + 1, 2):
        for word in product("LR", repeat=n):
            yield "".join(word)


def check_eq2(gen: CaseGenerator, cases: int = 1000) -> LawReport:
    """Interleaving distributes over splitting the curve at a middle turn,
    provided the left part has odd length; both stream phases are checked.

    The attached probe searches even-length left parts and records the
    violation it finds: with an even split the right block comes out with
    the wrong stream phase.
    """

    def run(rng: random.Random, _: int) -> Iterator[tuple[str, str, str]]:
        xs = gen.curve(rng, odd=True)
        z = rng.choice("LR")
        ys = gen.curve(rng)
        for name, s in _STREAMS:
            lhs = interleave(s, xs + z + ys)
            rhs = interleave(s, xs) + z + interleave(s, ys)
            yield f"stream={name} xs={xs} z={z} ys={ys}", lhs, rhs

    return _check_cases("eq2", gen, cases, run, probe=_probe_eq2())


def _probe_eq2() -> Probe:
    tried = 0
    for xs in _even_words(4):
        for z in "LR":
            for ys in ("", "L", "R", "LL"):
                tried += 1
                lhs = interleave(LR, xs + z + ys)
                rhs = interleave(LR, xs) + z + interleave(LR, ys)
                if lhs != rhs:
                    return Probe(tried, _failure(tried - 1, f"stream=lr xs={xs} z={z} ys={ys}", lhs, rhs))
    return Probe(tried, None)


def check_eq3(gen: CaseGenerator, cases: int = 1000) -> LawReport:
    """Inverting the curve before interleaving equals interleaving with the
    phase-flipped stream and inverting afterwards. Holds for every length."""

    def run(rng: random.Random, _: int) -> Iterator[tuple[str, str, str]]:
        xs = gen.curve(rng)
        for name, s in _STREAMS:
            lhs = interleave(s, curve_map_inv(xs))
            rhs = curve_map_inv(interleave(s.map_inv(), xs))
            yield f"stream={name} xs={xs}", lhs, rhs

    return _check_cases("eq3", gen, cases, run)


def check_eq4(gen: CaseGenerator, cases: int = 1000) -> LawReport:
    """Reversing an interleaved curve equals interleaving the inverted
    stream into the reversed curve, for odd-length curves.

    The probe shows even lengths break it: the reversal then starts on the
    wrong stream phase.
    """

    def run(rng: random.Random, _: int) -> Iterator[tuple[str, str, str]]:
        xs = gen.curve(rng, odd=True)
        for name, s in _STREAMS:
            lhs = curve_reverse(interleave(s, xs))
            rhs = interleave(s.map_inv(), curve_reverse(xs))
            yield f"stream={name} xs={xs}", lhs, rhs

    return _check_cases("eq4", gen, cases, run, probe=_probe_eq4())


def _probe_eq4() -> Probe:
    tried = 0
    for xs in _even_words(6):
        tried += 1
        lhs = curve_reverse(interleave(LR, xs))
        rhs = interleave(RL, curve_reverse(xs))
        if lhs != rhs:
            return Probe(tried, _failure(tried - 1, f"stream=lr xs={xs}", lhs, rhs))
    return Probe(tried, None)


def check_eq5(gen: CaseGenerator, cases: int = 1000) -> LawReport:
    """The doubling pattern of an unfold round commutes with interleaving:
    creasing the doubled curve equals doubling the creased curve around the
    same pivot. Holds for every curve; all four stream/pivot pairs run."""

    def run(rng: random.Random, _: int) -> Iterator[tuple[str, str, str]]:
        xs = gen.curve(rng)
        for name, s in _STREAMS:
            creased = interleave(s, xs)
            for pivot in "LR":
                lhs = interleave(s, xs + pivot + curve_map_inv(curve_reverse(xs)))
                rhs = creased + pivot + curve_map_inv(curve_reverse(creased))
                yield f"stream={name} pivot={pivot} xs={xs}", lhs, rhs

    return _check_cases("eq5", gen, cases, run)


def _identity(xs: str) -> str:
    return xs


def _same_stream(s: AlternatingStream) -> AlternatingStream:
    return s


def _flip_stream(s: AlternatingStream) -> AlternatingStream:
    return s.map_inv()


# On a two-letter alphabet every turn function is built from these two.
_TURN_FUNCTIONS = (
    ("id", _identity, _same_stream),
    ("inv", curve_map_inv, _flip_stream),
)


def check_naturality(gen: CaseGenerator, cases: int = 1000) -> LawReport:
    """Mapping a turn function over an interleaved curve equals interleaving
    the mapped stream into the mapped curve, for both turn functions."""

    def run(rng: random.Random, _: int) -> Iterator[tuple[str, str, str]]:
        xs = gen.curve(rng)
        for name, s in _STREAMS:
            for fname, on_curve, on_stream in _TURN_FUNCTIONS:
                lhs = on_curve(interleave(s, xs))
                rhs = interleave(on_stream(s), on_curve(xs))
                yield f"f={fname} stream={name} xs={xs}", lhs, rhs

    return _check_cases("naturality", gen, cases, run)


def check_duality1() -> LawReport:
    """Base agreement of the two constructions: one unfold step from the
    empty curve equals one fold step onto it. Only two cases exist, so the
    check is exhaustive rather than random."""
    failures = []
    for i, r in enumerate("CA"):
        expected = construct.unfold_step(r, "")
        actual = construct.fold_step("", r)
        if expected != actual:
            failures.append(_failure(i, f"r={r}", expected, actual))
    return LawReport("duality1", None, 2, tuple(failures))


def check_duality2(gen: CaseGenerator, cases: int = 1000) -> LawReport:
    """Step interchange: unfolding after a fold step equals folding after
    an unfold step, for every curve and every instruction pair."""

    def run(rng: random.Random, _: int) -> Iterator[tuple[str, str, str]]:
        ts = gen.curve(rng)
        for r in "CA":
            for s in "CA":
                lhs = construct.unfold_step(r, construct.fold_step(ts, s))
                rhs = construct.fold_step(construct.unfold_step(r, ts), s)
                yield f"r={r} s={s} ts={ts}", lhs, rhs

    return _check_cases("duality2", gen, cases, run)


def check_duality_conditions(gen: CaseGenerator, cases: int = 1000) -> tuple[LawReport, LawReport]:
    """Both premises of the fold-duality argument, as one call."""
    return check_duality1(), check_duality2(gen, cases)


def check_equivalence_exhaustive(max_len: int = 12) -> LawReport:
    """dragon_unfold and dragon_fold agree on every instruction list of
    length 0..max_len; all 2**(max_len+1) - 1 lists are enumerated."""
    if not 0 <= max_len <= EQUIVALENCE_MAX_LEN:
        raise ValueError(f"max_len must be between 0 and {EQUIVALENCE_MAX_LEN}")
    failures = []
    count = 0
    for n in range(max_len + 1):
        for bits in product("CA", repeat=n):
            rs = "".join(bits)
            expected = construct.dragon_unfold(rs)
            actual = construct.dragon_fold(rs)
            if expected != actual:
                failures.append(_failure(count, f"rots={rs}", expected, actual))
            count += 1
    return LawReport("equivalence", None, count, tuple(failures))


def check_length(gen: CaseGenerator, cases: int = 1000, max_n: int = CLASSIC_MAX_ORDER,
                 max_rot_len: int = 16) -> LawReport:
    """A curve built from k instructions has exactly 2**k - 1 turns: checked
    for every classic order up to max_n and for random instruction lists."""
    if not 0 <= max_n <= CLASSIC_MAX_ORDER:
        raise ValueError(f"max_n must be between 0 and {CLASSIC_MAX_ORDER}")
    failures = []
    count = 0
    for n in range(max_n + 1):
        got = len(construct.dragon_fold(construct.classic_instructions(n)))
        want = 2**n - 1
        if got != want:
            failures.append(CaseFailure(count, f"rots={'C' * n}", str(want), str(got), None))
        count += 1
    rng = gen.rng()
    for _ in range(cases):
        rs = gen.rots(rng, max_rot_len)
        got = len(construct.dragon_fold(rs))
        want = 2 ** len(rs) - 1
        if got != want:
            failures.append(CaseFailure(count, f"rots={rs}", str(want), str(got), None))
        count += 1
    return LawReport("length", gen.seed, count, tuple(failures))


def check_prefix(max_n: int = 16, index_limit: int = 100_000) -> LawReport:
    """Prefix coherence of the infinite dragon curve.

    For each order up to max_n: the classic curve is a prefix of the next
    order's curve, and stream_prefix reproduces it exactly. On top of that
    the O(log i) positional formula is compared against the materialized
    prefix at every position up to index_limit.
    """
    if not 0 <= max_n <= CLASSIC_MAX_ORDER:
        raise ValueError(f"max_n must be between 0 and {CLASSIC_MAX_ORDER}")
    failures = []
    count = 0
    for n in range(max_n + 1):
        cur = construct.dragon_fold(construct.classic_instructions(n))
        nxt = construct.dragon_fold(construct.classic_instructions(n + 1))
        if nxt[: len(cur)] != cur:
            failures.append(_failure(count, f"n={n} (prefix of next order)", cur, nxt[: len(cur)]))
        got = construct.stream_prefix(2**n - 1)
        if got != cur:
            failures.append(_failure(count, f"n={n} (stream_prefix)", cur, got))
        count += 1
    materialized = construct.stream_prefix(index_limit)
    for i in range(1, index_limit + 1):
        turn = construct.stream_turn_at(i).value
        if turn != materialized[i - 1]:
            failures.append(CaseFailure(count, f"i={i}", materialized[i - 1], turn, None))
        count += 1
    return LawReport("prefix", None, count, tuple(failures))


def check_length_and_prefix(max_n: int = CLASSIC_MAX_ORDER, gen: CaseGenerator | None = None,
                            cases: int = 1000) -> tuple[LawReport, LawReport]:
    """Both counting laws, as one call."""
    if gen is None:
        gen = CaseGenerator()
    return check_length(gen, cases, max_n), check_prefix(min(max_n, 16))


def run_all(seed: int = 42, cases: int = 1000, max_len: int = 12,
            size_bounds: tuple[int, int] = (0, 999),
            laws: Iterable[str] | None = None) -> list[LawReport]:
    """Run the selected laws (default: all) and return reports in the
    canonical LAW_IDS order."""
    selected = set(LAW_IDS) if laws is None else set(laws)
    unknown = selected - set(LAW_IDS)
    if unknown:
        raise ValueError(f"unknown law ids: {sorted(unknown)}")
    gen = CaseGenerator(seed, size_bounds)
    checks: dict[str, Callable[[], LawReport]] = {
        "eq2": lambda: check_eq2(gen, cases),
        "eq3": lambda: check_eq3(gen, cases),
        "eq4": lambda: check_eq4(gen, cases),
        "eq5": lambda: check_eq5(gen, cases),
        "naturality": lambda: check_naturality(gen, cases),
        "duality1": check_duality1,
        "duality2": lambda: check_duality2(gen, cases),
        "length": lambda: check_length(gen, cases),
        "prefix": check_prefix,
        "equivalence": lambda: check_equivalence_exhaustive(max_len),
    }
    return [checks[law]() for law in LAW_IDS if law in selected]


def render_text(reports: Iterable[LawReport], max_failures_shown: int = 3) -> str:
    """Human-readable report: one summary line per law, then details for
    the first few failures of any law that has them."""
    lines = []
    failed = 0
    total = 0
    for report in reports:
        total += 1
        lines.append(report.summary())
        if not report.passed:
            failed += 1
            shown = report.failures[:max_failures_shown]
            for f in shown:
                lines.append(f"    case {f.case}: {f.inputs}")
                lines.append(f"      expected {f.expected}")
                lines.append(f"      actual   {f.actual}")
                if f.mismatch is not None:
                    lines.append(f"      first mismatch at index {f.mismatch}")
            rest = len(report.failures) - len(shown)
            if rest:
                lines.append(f"    ... and {rest} more failure(s)")
    verdict = "all laws passed" if failed == 0 else f"{failed} of {total} laws FAILED"
    lines.append(verdict)
    return "\n".join(lines) + "\n"
