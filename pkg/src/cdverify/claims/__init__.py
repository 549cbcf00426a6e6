"""Claim ledgers: a small quantified-arithmetic language and its evaluator."""

from .ast import Claim
from .evaluator import ClaimResult, evaluate_claim
from .parser import parse_claim, parse_ledger
from .runner import exit_code, format_machine, format_text, run_ledger

__all__ = [
    "Claim",
    "ClaimResult",
    "evaluate_claim",
    "exit_code",
    "format_machine",
    "format_text",
    "parse_claim",
    "parse_ledger",
    "run_ledger",
]
