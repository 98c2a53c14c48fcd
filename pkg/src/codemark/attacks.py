"""Removal attacks used for robustness evaluation.

Three adversaries: random variable renaming (a fraction p of the variable
set), random semantics-preserving transformations (up to k draws from the
deterministic rule pool), and model-driven paraphrasing. The attacker never
sees the watermark record; its rule pool is simply every deterministic rule,
so coincidental overlap with embedded rules is possible and is a legitimate
source of decoding error.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import gateway, rules
from .corpus import CodeSnippet
from .features import extract_profile
from .lexer import tokenize


@dataclass(frozen=True)
class AttackSpec:
    kind: str  # rename | transform | paraphrase
    p: float | None = None
    k: int | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("rename", "transform", "paraphrase"):
            raise ValueError(f"unknown attack kind {self.kind!r}")
        if self.kind == "rename" and not (self.p and 0.0 < self.p <= 1.0):
            raise ValueError("rename attack needs p in (0, 1]")
        if self.kind == "transform" and not (self.k and self.k >= 1):
            raise ValueError("transform attack needs k >= 1")


@dataclass
class AttackResult:
    snippet: CodeSnippet
    metadata: dict


def rename_attack(snippet: CodeSnippet, p: float, seed: int) -> AttackResult:
    """Rename ceil(p * |V|) randomly chosen variable identifiers to var_<i>.

    V is the snippet's variable set as the retrieval features define it, so
    the function name itself is never targeted. Deterministic per seed.
    """
    if not 0.0 < p <= 1.0:
        raise ValueError("p must be in (0, 1]")
    variables = sorted(extract_profile(snippet).var_set)
    meta = {"kind": "rename", "p": p, "seed": seed, "renamed": []}
    if not variables:
        meta["warning"] = "snippet has no variable identifiers"
        return AttackResult(snippet, meta)
    count = math.ceil(p * len(variables))
    rng = random.Random(seed)
    targets = rng.sample(variables, count)
    tokens = tokenize(snippet.text, snippet.language)
    existing = {t.text for t in tokens if t.kind == "ident"}
    mapping: dict[str, str] = {}
    idx = 0
    for name in targets:
        while True:
            fresh = f"var_{idx}"
            idx += 1
            if fresh not in existing and fresh not in mapping.values():
                break
        mapping[name] = fresh
    new_text = "".join(
        mapping.get(t.text, t.text) if t.kind == "ident" else t.text for t in tokens
    )
    meta["renamed"] = [{"from": old, "to": new} for old, new in sorted(mapping.items())]
    return AttackResult(snippet.with_text(new_text), meta)


def transform_attack(snippet: CodeSnippet, k: int, seed: int) -> AttackResult:
    """Apply up to k random deterministic rules, drawn without replacement.

    Each draw is uniform over the rules still applicable to the current
    text, so the attack applies exactly k transformations unless
    applicability runs out first. Semantics preservation is inherited from
    the rules engine.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = random.Random(seed)
    pool = list(rules.catalog().deterministic_rules())
    current = snippet
    applied: list[str] = []
    while len(applied) < k:
        candidates = [r for r in pool if rules.is_applicable(r, current)]
        if not candidates:
            break
        pick = rng.choice(candidates)
        pool.remove(pick)
        current = rules.apply(pick, current)
        applied.append(pick.rule_id)
    meta = {"kind": "transform", "k": k, "seed": seed, "applied_rules": applied}
    return AttackResult(current, meta)


def paraphrase_attack(backend: gateway.Backend, snippet: CodeSnippet) -> AttackResult:
    """Adaptive de-watermarking: a model rewrites the code freely.

    The attacker is not obligated to preserve any toolkit invariant; the
    reply's code block is taken verbatim. Mock backends refuse.
    """
    new_text = gateway.paraphrase(backend, snippet)
    meta = {"kind": "paraphrase", "backend": backend.label}
    return AttackResult(snippet.with_text(new_text), meta)


def run_attack(spec: AttackSpec, snippet: CodeSnippet, backend: gateway.Backend | None = None) -> AttackResult:
    if spec.kind == "rename":
        return rename_attack(snippet, spec.p, spec.seed)
    if spec.kind == "transform":
        return transform_attack(snippet, spec.k, spec.seed)
    if backend is None:
        raise ValueError("paraphrase attack needs a backend")
    return paraphrase_attack(backend, snippet)
