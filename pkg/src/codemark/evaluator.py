"""Metrics: bit/message accuracy, capacity, syntax validity, test pass rate.

The similarity-degradation column reports mean whitespace-stripped edit
similarity between original and final text. It is a cheap, parser-free
stand-in for grammar-based code-similarity scores and is labeled
distinctly so nobody mistakes it for one.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .corpus import CodeSnippet
from .features import extract_profile, sim_sem
from .gateway import _balanced, run_test_command
from .lexer import tokenize


def bit_acc(pairs) -> float:
    """Fraction of matching bits across all (true, extracted) pairs."""
    pairs = [(str(a), str(b)) for a, b in pairs]
    if not pairs:
        raise ValueError("no pairs")
    total = 0
    matched = 0
    for i, (a, b) in enumerate(pairs):
        if len(a) != len(b):
            raise ValueError(f"pair {i} has unequal lengths: {a!r} vs {b!r}")
        total += len(a)
        matched += sum(1 for x, y in zip(a, b) if x == y)
    return matched / total


def msg_acc(pairs) -> float:
    """Fraction of pairs recovered fully intact."""
    pairs = [(str(a), str(b)) for a, b in pairs]
    if not pairs:
        raise ValueError("no pairs")
    for i, (a, b) in enumerate(pairs):
        if len(a) != len(b):
            raise ValueError(f"pair {i} has unequal lengths: {a!r} vs {b!r}")
    return sum(1 for a, b in pairs if a == b) / len(pairs)


def syntax_check(snippet: CodeSnippet, validator_command: str | None = None) -> bool:
    """Necessary-condition syntax check: balanced brackets outside literals
    and no unterminated string literal. An external validator command, when
    configured and runnable, overrides the built-in verdict."""
    if validator_command:
        verdict = run_test_command(snippet, validator_command)
        if verdict is not None:
            return verdict
    tokens = tokenize(snippet.text, snippet.language)
    for t in tokens:
        if t.kind == "string" and not _terminated(t.text):
            return False
    return _balanced(tokens)


def _terminated(literal: str) -> bool:
    body = literal
    while body and body[0] not in "\"'`":
        body = body[1:]  # strip prefix letters (f, r, b...)
    if len(body) < 2:
        return False
    q = body[0]
    if body.startswith(q * 3):
        return len(body) >= 6 and body.endswith(q * 3)
    return body.endswith(q) and not body.endswith("\\" + q)


def run_tests(snippet: CodeSnippet, test_command_template: str, timeout: float = 20.0):
    """Pass/fail of the snippet's own test command; None when the runtime is
    missing (reported separately, excluded from the pass-rate denominator)."""
    return run_test_command(snippet, test_command_template, timeout=timeout)


@dataclass
class RunArtifact:
    """Everything the reporter may know about one snippet's run."""

    snippet_id: str
    true_bits: str | None = None
    extracted_bits: str | None = None
    original: CodeSnippet | None = None
    final: CodeSnippet | None = None  # watermarked or attacked text
    embed_success: bool = True


@dataclass
class MetricReport:
    bit_acc: float | None
    msg_acc: float | None
    bpf: float | None
    syntax_rate: float | None
    pass_rate: float | None
    pass_skipped: int
    sim_degradation: float | None
    n_snippets: int
    n_failures: int

    def to_dict(self) -> dict:
        def r(x):
            return None if x is None else round(x, 6)

        return {
            "bit_acc": r(self.bit_acc),
            "msg_acc": r(self.msg_acc),
            "bpf": r(self.bpf),
            "syntax_rate": r(self.syntax_rate),
            "pass_rate": r(self.pass_rate),
            "pass_skipped": self.pass_skipped,
            "sim_degradation": r(self.sim_degradation),
            "n_snippets": self.n_snippets,
            "n_failures": self.n_failures,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        rows = [
            ("snippets", str(self.n_snippets)),
            ("embed failures", str(self.n_failures)),
            ("bit accuracy", _pct(self.bit_acc)),
            ("message accuracy", _pct(self.msg_acc)),
            ("bits per function", "-" if self.bpf is None else f"{self.bpf:.2f}"),
            ("syntax valid", _pct(self.syntax_rate)),
            ("tests passed", _pct(self.pass_rate) + f"  (skipped {self.pass_skipped})"),
            ("similarity retained", _pct(self.sim_degradation)),
        ]
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{name:<{width}}  {value}" for name, value in rows)


def _pct(x: float | None) -> str:
    return "-" if x is None else f"{100.0 * x:.2f}%"


def report(
    artifacts: list[RunArtifact],
    test_commands: dict[str, str] | None = None,
    jobs: int = 1,
) -> MetricReport:
    """Aggregate run artifacts into one deterministic report."""
    if not artifacts:
        raise ValueError("no artifacts to report on")
    ids = [a.snippet_id for a in artifacts]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate snippet ids in artifacts")
    for a in artifacts:
        for snip in (a.original, a.final):
            if snip is not None and snip.id != a.snippet_id:
                raise ValueError(f"artifact {a.snippet_id!r} references snippet {snip.id!r}")

    pairs = [
        (a.true_bits, a.extracted_bits)
        for a in artifacts
        if a.true_bits is not None and a.extracted_bits is not None
    ]
    acc = bit_acc(pairs) if pairs else None
    macc = msg_acc(pairs) if pairs else None

    successes = [a for a in artifacts if a.embed_success and a.true_bits is not None]
    bpf = (
        sum(len(a.true_bits) for a in successes) / len(successes) if successes else None
    )

    finals = [a.final for a in artifacts if a.final is not None]
    syntax_rate = (
        sum(1 for s in finals if syntax_check(s)) / len(finals) if finals else None
    )

    pass_rate = None
    pass_skipped = 0
    if test_commands and finals:
        targets = [s for s in finals if s.language in test_commands]
        results = _run_many(targets, test_commands, jobs)
        ran = [v for v in results if v is not None]
        pass_skipped = len(results) - len(ran)
        pass_rate = (sum(1 for v in ran if v) / len(ran)) if ran else None

    sims = [
        sim_sem(extract_profile(a.original), extract_profile(a.final))
        for a in artifacts
        if a.original is not None and a.final is not None
    ]
    sim_degradation = sum(sims) / len(sims) if sims else None

    return MetricReport(
        bit_acc=acc,
        msg_acc=macc,
        bpf=bpf,
        syntax_rate=syntax_rate,
        pass_rate=pass_rate,
        pass_skipped=pass_skipped,
        sim_degradation=sim_degradation,
        n_snippets=len(artifacts),
        n_failures=sum(1 for a in artifacts if not a.embed_success),
    )


def _run_many(snippets, test_commands, jobs):
    def one(s):
        return run_test_command(s, test_commands[s.language])

    if jobs <= 1:
        return [one(s) for s in snippets]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(one, snippets))
