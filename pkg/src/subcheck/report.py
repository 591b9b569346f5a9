"""Algorithm dispatch and verdict rendering (JSON dict and human-readable text)."""

from __future__ import annotations

import dataclasses
import time
from typing import Any, Optional

from .checker import FIGURE1, WITNESS, find_witness_fast, find_witness_naive
from .choice import check_completeness
from .model import Outcome, PreferenceList, Verdict
from .oracle import brute_force_check

ALGORITHMS = ("fast", "naive", "brute")

EXIT_CODES = {
    Outcome.SUBSTITUTABLE: 0,
    Outcome.NOT_SUBSTITUTABLE: 1,
    Outcome.NOT_COHERENT: 2,
}


def check(plist: PreferenceList, algorithm: str = "fast", mode: str = WITNESS) -> Verdict:
    """Run one of the three deciders.  Only ``fast`` supports ``mode="figure1"``."""
    if algorithm == "fast":
        return find_witness_fast(plist, mode)
    if mode != WITNESS:
        raise ValueError(f"mode {mode!r} is only available with the fast algorithm")
    if algorithm == "naive":
        return find_witness_naive(plist)
    if algorithm == "brute":
        v = brute_force_check(plist)
        if v.coherent:
            rep = check_completeness(plist)
            v = dataclasses.replace(v, complete=rep.complete, incompleteness=rep.first_failure)
        return v
    raise ValueError(f"unknown algorithm {algorithm!r}")


def timed_check(plist: PreferenceList, algorithm: str = "fast", mode: str = WITNESS) -> tuple[Verdict, int]:
    start = time.perf_counter_ns()
    verdict = check(plist, algorithm, mode)
    return verdict, time.perf_counter_ns() - start


def report_dict(plist: PreferenceList, verdict: Verdict, elapsed_ns: int = 0) -> dict[str, Any]:
    u = plist.universe
    witness: Optional[dict] = None
    violation: Optional[dict] = None
    if verdict.witness is not None:
        w = verdict.witness
        witness = {
            "X": u.names_of(plist[w.x_rank]),
            "Y": u.names_of(plist[w.y_rank]),
            "x": u.name(w.x_elem),
        }
    if verdict.violation is not None:
        v = verdict.violation
        violation = {"A": u.names_of(v.A), "B": u.names_of(v.B), "x": u.name(v.x_elem)}
    return {
        "verdict": verdict.outcome.value,
        "coherent": verdict.coherent,
        "complete": verdict.complete,
        "n": plist.n,
        "universe_size": plist.m,
        "empty_appended": plist.empty_appended,
        "algorithm": verdict.algorithm,
        "mode": verdict.mode,
        "witness": witness,
        "violation": violation,
        "elapsed_ns": int(elapsed_ns),
    }


def format_report(plist: PreferenceList, verdict: Verdict, elapsed_ns: Optional[int] = None) -> str:
    u = plist.universe
    fmt = u.format
    head = verdict.outcome.value.replace("_", " ").upper()
    timing = "" if elapsed_ns is None else f", {elapsed_ns / 1e6:.3f} ms"
    lines = [f"{head}  [{verdict.algorithm}, {verdict.mode} mode{timing}]"]
    if verdict.incoherent_pair is not None:
        i, j = verdict.incoherent_pair
        lines.append(f"  member {i} {fmt(plist[i])} is contained in later member {j} {fmt(plist[j])}")
    if verdict.witness is not None:
        w = verdict.witness
        lines.append(
            f"  witness: X = {fmt(plist[w.x_rank])} (rank {w.x_rank}), "
            f"Y = {fmt(plist[w.y_rank])} (rank {w.y_rank}), x = {u.name(w.x_elem)}"
        )
    if verdict.violation is not None:
        v = verdict.violation
        x = u.name(v.x_elem)
        lines.append(
            f"  violation: A = {fmt(v.A)} ⊆ B = {fmt(v.B)}; {x} is chosen from B but not from A"
        )
    if verdict.complete is False and verdict.incompleteness is not None:
        r, d, need = verdict.incompleteness
        lines.append(f"  incomplete: member {r} {fmt(plist[r])} has {d} subsets on the list, needs {need}")
    appended = " (empty set appended)" if plist.empty_appended else ""
    complete = {True: "complete", False: "incomplete", None: "completeness unknown"}[verdict.complete]
    coherent = "coherent" if verdict.coherent else "not coherent"
    lines.append(f"  N = {plist.n}{appended}, |U| = {plist.m}, {coherent}, {complete}")
    return "\n".join(lines)


__all__ = ["ALGORITHMS", "EXIT_CODES", "FIGURE1", "WITNESS", "check", "timed_check",
           "report_dict", "format_report"]
