"""Depth-sweep benchmark harness with CSV output and growth-factor analysis."""

from __future__ import annotations

import csv
import gc
import io
import os
import statistics
import threading
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .engine import GameRules, SelectorKind, build_selectors, optimal_play


@dataclass(frozen=True)
class BenchRow:
    game: str
    selector: str
    depth: int
    seconds: float
    outcome: str


@dataclass
class BenchReport:
    rows: List[BenchRow] = field(default_factory=list)
    metadata: Dict[str, str] = field(default_factory=dict)

    def sorted_rows(self) -> List[BenchRow]:
        return sorted(self.rows, key=lambda r: (r.game, r.selector, r.depth))


def _timed_solve(rules: GameRules, kind: SelectorKind, depth: int):
    # Collect up front and pause the cycle collector so stray GC pauses
    # do not distort per-depth timings.
    gc.collect()
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter()
        play = optimal_play(rules, build_selectors(rules, kind, depth))
        elapsed = time.perf_counter() - start
    finally:
        if was_enabled:
            gc.enable()
    return elapsed, rules.payoff(play)


def run_benchmark(
    game: str,
    rules_for_depth: Callable[[int], GameRules],
    kind: SelectorKind,
    depth_range: Sequence[int],
    repetitions: int = 1,
    timeout: Optional[float] = None,
) -> BenchReport:
    """Time optimal_play end-to-end per depth, keeping the median of
    ``repetitions`` runs.

    ``rules_for_depth`` maps a depth to the rules to solve at that depth
    (fixed rules for connect/chess sweeps; per-gap-count puzzles for
    sudoku).  A depth exceeding ``timeout`` is recorded as a truncated
    row and the sweep continues.
    """
    if not depth_range:
        raise ValueError("depth_range must be nonempty")
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    report = BenchReport(
        metadata={
            "cores": str(os.cpu_count() or 1),
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S"),
        }
    )
    for depth in depth_range:
        rules = rules_for_depth(depth)
        times: List[float] = []
        outcome = None
        timed_out = False
        for _ in range(repetitions):
            result: list = []

            def attempt():
                result.append(_timed_solve(rules, kind, depth))

            if timeout is None:
                attempt()
            else:
                worker = threading.Thread(target=attempt, daemon=True)
                worker.start()
                worker.join(timeout)
                if worker.is_alive():
                    timed_out = True
                    break
            elapsed, outcome = result[0]
            times.append(elapsed)
        if timed_out:
            report.rows.append(
                BenchRow(game, kind.value, depth, float(timeout), "timeout")
            )
            continue
        report.rows.append(
            BenchRow(game, kind.value, depth, statistics.median(times), repr(outcome))
        )
    report.rows = report.sorted_rows()
    return report


def growth_factors(report: BenchReport) -> Dict[Tuple[str, str], List[Tuple[int, float]]]:
    """Consecutive time ratios per (game, selector) series.

    Each entry pairs a depth with time(depth) / time(previous depth).
    Series with fewer than two rows contribute an empty list.
    """
    series: Dict[Tuple[str, str], List[BenchRow]] = {}
    for row in report.sorted_rows():
        series.setdefault((row.game, row.selector), []).append(row)
    factors: Dict[Tuple[str, str], List[Tuple[int, float]]] = {}
    for key, rows in series.items():
        factors[key] = [
            (b.depth, b.seconds / a.seconds) for a, b in zip(rows, rows[1:])
        ]
    return factors


CSV_HEADER = ["game", "selector", "depth", "seconds", "outcome"]


def to_csv(report: BenchReport) -> str:
    """UTF-8 CSV with '#'-prefixed metadata lines before the header."""
    buf = io.StringIO()
    for key in sorted(report.metadata):
        buf.write(f"# {key}={report.metadata[key]}\n")
    writer = csv.writer(buf)
    writer.writerow(CSV_HEADER)
    for row in report.sorted_rows():
        writer.writerow([row.game, row.selector, row.depth, repr(row.seconds), row.outcome])
    return buf.getvalue()


def from_csv(text: str) -> BenchReport:
    report = BenchReport()
    lines = text.splitlines()
    data_lines = []
    for line in lines:
        if line.startswith("#"):
            key, _, value = line.lstrip("# ").partition("=")
            report.metadata[key] = value
        elif line.strip():
            data_lines.append(line)
    reader = csv.reader(data_lines)
    header = next(reader, None)
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {header}")
    for record in reader:
        game, selector, depth, seconds, outcome = record
        report.rows.append(BenchRow(game, selector, int(depth), float(seconds), outcome))
    return report
