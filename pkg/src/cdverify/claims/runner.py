"""
Ledger runner and report serialization.

Claims are independent, so they may be evaluated in worker processes; the
report is always assembled in natural id order and, unless timings are
requested, contains nothing that depends on scheduling.
"""
from __future__ import annotations

import json
import re
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Sequence

from .ast import Claim
from .evaluator import ASSUMED, REFUTED, SKIPPED, VERIFIED, ClaimResult, evaluate_claim


def natural_key(ident: str):
    """Sort key treating digit runs numerically: c2 < c10."""
    return [(0, int(part), "") if part.isdigit() else (1, 0, part)
            for part in re.split(r"(\d+)", ident) if part]


def _evaluate(args):
    claim, budget = args
    return evaluate_claim(claim, budget)


def run_ledger(claims: Sequence[Claim], jobs: int = 1, budget: Optional[float] = None) -> List[ClaimResult]:
    """Evaluate every claim; ``budget`` is per claim, in CPU seconds."""
    work = [(c, budget) for c in claims]
    if jobs <= 1 or len(work) <= 1:
        results = [_evaluate(w) for w in work]
    else:
        # biggest first would be nicer, but ledger order is a fine proxy
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate, work, chunksize=1))
    return sorted(results, key=lambda r: natural_key(r.id))


def summary(results: Iterable[ClaimResult]) -> dict:
    counts = {VERIFIED: 0, REFUTED: 0, SKIPPED: 0, ASSUMED: 0}
    for r in results:
        counts[r.status] += 1
    return counts


def exit_code(results: Sequence[ClaimResult]) -> int:
    """0 all checked claims verified, 1 any refuted, 3 any skipped."""
    counts = summary(results)
    if counts[REFUTED]:
        return 1
    if counts[SKIPPED]:
        return 3
    return 0


def format_text(results: Sequence[ClaimResult], timings: bool = False) -> str:
    lines = []
    for r in results:
        lines.append(f"{r.kind} {r.id}: {r.status}")
        lines.append(f"  anchor: {r.anchor}")
        if r.description:
            lines.append(f"  description: {r.description}")
        if r.status != ASSUMED:
            scope = f"bounded, {r.scope}" if r.scope else "closed"
            lines.append(f"  scope: {scope}")
            lines.append(f"  points: {r.points}")
        if r.status == REFUTED:
            lines.append(f"  counterexample: {r.witness_text or '(no parameters)'}")
        if r.reason:
            lines.append(f"  reason: {r.reason}")
        if timings:
            lines.append(f"  elapsed-ms: {r.elapsed_ms:.1f}")
    counts = summary(results)
    lines.append(
        f"{len(results)} entries: {counts[VERIFIED]} verified, {counts[REFUTED]} refuted, "
        f"{counts[SKIPPED]} skipped, {counts[ASSUMED]} assumed"
    )
    return "\n".join(lines) + "\n"


def format_machine(results: Sequence[ClaimResult], timings: bool = False) -> str:
    """One JSON object per line with a fixed key order."""
    out = []
    for r in results:
        record = {
            "id": r.id,
            "kind": r.kind,
            "status": r.status,
            "anchor": r.anchor,
            "scope": r.scope,
            "points": r.points,
            "witness": dict(r.witness) if r.witness is not None else None,
            "reason": r.reason,
        }
        if timings:
            record["elapsed_ms"] = round(r.elapsed_ms, 1)
        out.append(json.dumps(record, ensure_ascii=False))
    return "".join(line + "\n" for line in out)
