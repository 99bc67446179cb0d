"""Acceptance suite: one test per shipped guarantee, with timing bounds.

Each test prints a single verdict line (visible under pytest -s or in the
failure report) and asserts both the result and its time budget. Run with:

    pytest tests/test_acceptance.py -v -s
"""

import random
import time
from pathlib import Path

from dragonfold import construct
from dragonfold.cli import main
from dragonfold.construct import (
    classic_instructions,
    dragon_fold,
    dragon_unfold,
    stream_prefix,
    stream_turn_at,
)
from dragonfold.core import LR, curve_reverse, interleave
from dragonfold.geometry import curve_to_path, distinct_undirected_edges, endpoint
from dragonfold.laws import (
    CaseGenerator,
    check_duality_conditions,
    check_eq2,
    check_eq3,
    check_eq4,
    check_eq5,
    check_equivalence_exhaustive,
    check_length,
    check_naturality,
)
from dragonfold.paperfold import creases
from dragonfold.render import path_to_svg

GOLDEN = Path(__file__).parent / "golden"

FIGURE_LISTS = ("CACACACACACA", "ACAACAAACCCC")


def _verdict(num: int, ok: bool, detail: str) -> None:
    print(f"criterion {num:02d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num:02d}: {detail}"


def test_criterion_01_known_curves():
    expected = ["L", "LLR", "LLRLLRR", "LLRLLRRLLLRRLRR"]
    start = time.perf_counter()
    got = [dragon_unfold(classic_instructions(n)) for n in range(1, 5)]
    elapsed = time.perf_counter() - start
    ok = got == expected and elapsed < 0.001
    _verdict(1, ok, f"orders 1..4 exact in {elapsed * 1e6:.0f} us (bound 1 ms)")


def test_criterion_02_exhaustive_equivalence():
    start = time.perf_counter()
    report = check_equivalence_exhaustive(12)
    elapsed = time.perf_counter() - start
    ok = report.passed and report.cases_run == 8191 and elapsed < 10.0
    _verdict(2, ok, f"{report.cases_run} instruction lists, "
                    f"{len(report.failures)} mismatches, {elapsed:.2f}s (bound 10 s)")


def test_criterion_03_length_law():
    start = time.perf_counter()
    report = check_length(CaseGenerator(42), cases=1000, max_n=20, max_rot_len=16)
    elapsed = time.perf_counter() - start
    ok = report.passed and report.cases_run == 21 + 1000 and elapsed < 5.0
    _verdict(3, ok, f"classic n<=20 plus 1000 random lists |rs|<=16, "
                    f"{len(report.failures)} failures, {elapsed:.2f}s (bound 5 s)")


def test_criterion_04_law_suite():
    gen = CaseGenerator(seed=42, size_bounds=(0, 999))
    start = time.perf_counter()
    reports = [
        check_eq2(gen, 1000),
        check_eq3(gen, 1000),
        check_eq4(gen, 1000),
        check_eq5(gen, 1000),
        check_naturality(gen, 1000),
        *check_duality_conditions(gen, 1000),
    ]
    elapsed = time.perf_counter() - start
    failures = sum(len(r.failures) for r in reports)
    probes_found = (reports[0].probe is not None and reports[0].probe.found
                    and reports[2].probe is not None and reports[2].probe.found)
    ok = failures == 0 and probes_found and elapsed < 10.0
    _verdict(4, ok, f"7 law reports, {failures} failures, both parity probes "
                    f"found even-length counterexamples, {elapsed:.2f}s (bound 10 s)")


def test_criterion_05_worked_examples():
    # symbolic turns a..e frozen to a=L b=R c=R z=L d=R e=L
    symbols = {"a": "L", "b": "R", "c": "R", "z": "L", "d": "R", "e": "L"}

    def expand(template: str) -> str:
        return "".join(symbols.get(token, token) for token in template.split())

    six = expand("a b c z d e")
    interleaved = interleave(LR, six)
    want_interleaved = expand("L a R b L c R z L d R e L")

    three = expand("a b c")
    reversed_form = curve_reverse(interleave(LR, three))
    promoted_form = interleave(LR.map_inv(), curve_reverse(three))
    want_reversed = expand("R c L b R a L")

    ok = (interleaved == want_interleaved
          and reversed_form == want_reversed
          and promoted_form == want_reversed)
    _verdict(5, ok, f"interleave example -> {interleaved}, "
                    f"reverse example -> {reversed_form}, both bit-exact")


def test_criterion_06_stream_laws():
    start = time.perf_counter()
    prefix_ok = all(
        stream_prefix(2**n - 1) == dragon_fold(classic_instructions(n))
        for n in range(17)
    )
    big = stream_prefix(100_000)
    index_ok = all(stream_turn_at(i).value == big[i - 1] for i in range(1, 100_001))
    elapsed = time.perf_counter() - start
    ok = prefix_ok and index_ok and elapsed < 5.0
    _verdict(6, ok, f"prefixes agree for n<=16 and positions 1..100000, "
                    f"{elapsed:.2f}s (bound 5 s)")


def test_criterion_07_paperfold_oracle():
    start = time.perf_counter()
    agree = all(creases(n) == dragon_fold(classic_instructions(n)) for n in range(13))
    elapsed = time.perf_counter() - start
    ok = agree and elapsed < 5.0
    _verdict(7, ok, f"strip-folding creases equal the curve for n<=12, "
                    f"{elapsed:.2f}s (bound 5 s)")


def test_criterion_08_geometry():
    start = time.perf_counter()
    a, b = 1, 0  # (1+i)**0, tracked by the Gaussian-integer recurrence
    endpoints_ok = True
    for n in range(21):
        point = endpoint(curve_to_path(dragon_fold(classic_instructions(n))))
        if (point.x, point.y) != (a, b):
            endpoints_ok = False
            break
        a, b = a - b, a + b
    edge_curves = [dragon_fold(classic_instructions(n)) for n in range(13)]
    edge_curves += [dragon_fold(rs) for rs in FIGURE_LISTS]
    edges_ok = all(distinct_undirected_edges(curve_to_path(xs)) for xs in edge_curves)
    elapsed = time.perf_counter() - start
    ok = endpoints_ok and edges_ok and elapsed < 10.0
    _verdict(8, ok, f"endpoints match (1+i)^n for n<=20, edges distinct on "
                    f"classics <=12 and both figure lists, {elapsed:.2f}s (bound 10 s)")


def test_criterion_09_rendering_goldens():
    svg8 = path_to_svg(curve_to_path(dragon_fold(classic_instructions(8))))
    vertex_count = len(svg8.split('points="')[1].split('"')[0].split())
    # 2**8 segments means 2**8 + 1 polyline points
    count_ok = vertex_count == 2**8 + 1 == 257

    golden_ok = svg8.encode("utf-8") == (GOLDEN / "classic_order8.svg").read_bytes()
    fig_a = path_to_svg(curve_to_path(dragon_fold(FIGURE_LISTS[0])))
    fig_b = path_to_svg(curve_to_path(dragon_fold(FIGURE_LISTS[1])))
    golden_ok = (golden_ok
                 and fig_a.encode("utf-8") == (GOLDEN / "alternating_ca12.svg").read_bytes()
                 and fig_b.encode("utf-8") == (GOLDEN / "mixed_acaacaaacccc.svg").read_bytes())

    ok = count_ok and golden_ok
    _verdict(9, ok, f"order-8 polyline has {vertex_count} points (2^8 segments), "
                    f"three golden files match byte-for-byte")


def test_criterion_10_cli_contract(capsys, monkeypatch):
    rng = random.Random(1234)
    identical = True
    for _ in range(100):
        n = rng.randint(0, 12)
        rs = "".join(rng.choice("CA") for _ in range(n))
        main(["generate", "--method", "unfold", "--rots", rs])
        unfolded = capsys.readouterr().out
        main(["generate", "--method", "fold", "--rots", rs])
        folded = capsys.readouterr().out
        if unfolded != folded or not unfolded.endswith("\n"):
            identical = False
            break

    clean_exit = main(["verify", "--law", "all", "--max-len", "10",
                       "--cases", "200", "--seed", "11"])
    capsys.readouterr()

    original = construct.fold_step

    def sabotaged(ts, r):
        out = original(ts, r)
        return out[:-1] + ("L" if out.endswith("R") else "R") if out else out

    monkeypatch.setattr(construct, "fold_step", sabotaged)
    broken_exit = main(["verify", "--law", "all", "--max-len", "5",
                        "--cases", "20", "--seed", "11"])
    capsys.readouterr()
    monkeypatch.undo()

    ok = identical and clean_exit == 0 and broken_exit == 1
    _verdict(10, ok, f"unfold/fold stdout byte-identical over 100 random lists, "
                     f"verify exit {clean_exit} clean / {broken_exit} mutated")
