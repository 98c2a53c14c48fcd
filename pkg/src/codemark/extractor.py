"""Watermark extraction: retrieval, plan reconstruction, differential decoding.

Extraction never sees the embedding record. It locates the most similar
unmarked original in the candidate codebase, rebuilds the same per-bit rule
plan that embedding would have produced for that original, and then replays
each bit's rule: if applying it moves the running reconstruction closer to
the watermarked code, the bit is 1 and the reconstruction advances.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .corpus import CandidateCodebase, CodeSnippet
from .embedder import EmbeddingPlan, WatermarkBits, allocate, plan, select_rule
from .features import (
    SimilarityWeights,
    _edit_sim,
    all_sims,
    extract_profile,
    sim_sem,
    sim_struct,
)
from .gateway import Backend

LOW_CONFIDENCE_SCORE = 0.5


@dataclass(frozen=True)
class RetrievalResult:
    match: CodeSnippet
    score: float
    breakdown: dict[str, float]
    runner_up_score: float

    @property
    def low_confidence(self) -> bool:
        return self.score < LOW_CONFIDENCE_SCORE


@dataclass(frozen=True)
class DecodingPolicy:
    margin: float = 0.0  # required similarity improvement before a bit reads 1
    tie_rule: str = "bit=0 on non-improvement"

    def __post_init__(self) -> None:
        if not 0.0 <= self.margin <= 1.0:
            raise ValueError("margin must be in [0, 1]")


@dataclass
class BitEvidence:
    bit: int
    rule_id: str | None
    sim_before: float
    sim_after: float
    decision: int


@dataclass
class ExtractionResult:
    bits: WatermarkBits
    evidence: list[BitEvidence] = field(default_factory=list)
    retrieval: RetrievalResult | None = None

    @property
    def low_confidence(self) -> bool:
        return self.retrieval is not None and self.retrieval.low_confidence

    def to_dict(self) -> dict:
        out = {
            "bits": str(self.bits),
            "evidence": [
                {
                    "bit": e.bit,
                    "rule_id": e.rule_id,
                    "sim_before": round(e.sim_before, 6),
                    "sim_after": round(e.sim_after, 6),
                    "decision": e.decision,
                }
                for e in self.evidence
            ],
        }
        if self.retrieval is not None:
            out["score"] = round(self.retrieval.score, 6)
            out["match_id"] = self.retrieval.match.id
            out["low_confidence"] = self.low_confidence
        return out


def retrieve(
    c1: CodeSnippet, codebase: CandidateCodebase, weights: SimilarityWeights | None = None
) -> RetrievalResult:
    """Best-scoring candidate original for the watermarked snippet.

    Linear scan; ties go to the smallest snippet id (codebase order).
    """
    if len(codebase) == 0:
        raise ValueError("candidate codebase is empty")
    w = weights or SimilarityWeights()
    query = extract_profile(c1)
    best = None
    best_score = -1.0
    best_sims = (0.0, 0.0, 0.0, 0.0)
    runner_up = 0.0
    for cand in codebase:
        sims = all_sims(extract_profile(cand), query)
        score = w.alpha * sims[0] + w.beta * sims[1] + w.gamma * sims[2] + w.delta * sims[3]
        if score > best_score:
            runner_up = best_score if best is not None else 0.0
            best, best_score, best_sims = cand, score, sims
        elif score > runner_up:
            runner_up = score
    return RetrievalResult(
        match=best,
        score=best_score,
        breakdown={
            "name": best_sims[0],
            "vars": best_sims[1],
            "struct": best_sims[2],
            "sem": best_sims[3],
        },
        runner_up_score=max(runner_up, 0.0),
    )


def reconstruct_plan(backend: Backend, c_hat: CodeSnippet, n: int) -> EmbeddingPlan:
    """Identical procedure to embedding-side planning, run on the match."""
    return plan(backend, c_hat, n)


def decode(
    backend: Backend,
    c1: CodeSnippet,
    c_hat: CodeSnippet,
    plan_: EmbeddingPlan,
    policy: DecodingPolicy | None = None,
) -> ExtractionResult:
    """Replay the per-bit rules on the match and read each bit from whether
    the replay moves the reconstruction closer to the watermarked code."""
    policy = policy or DecodingPolicy()
    cands = allocate(plan_)
    target = extract_profile(c1)
    current = c_hat
    used: set[str] = set()
    bits: list[int] = []
    evidence: list[BitEvidence] = []
    for slot, cand in zip(plan_.per_bit, cands):
        rule, transformed = select_rule(backend, current, cand, used)
        if rule is None:
            bits.append(0)
            evidence.append(BitEvidence(slot.bit_index, None, 0.0, 0.0, 0))
            continue
        cur_prof = extract_profile(current)
        new_prof = extract_profile(transformed)
        s_before = sim_sem(cur_prof, target)
        s_after = sim_sem(new_prof, target)
        decision = _improved(
            s_before,
            s_after,
            lambda: (sim_struct(cur_prof, target), sim_struct(new_prof, target)),
            lambda: (
                _edit_sim(current.text, c1.text),
                _edit_sim(transformed.text, c1.text),
            ),
            policy.margin,
        )
        bits.append(decision)
        evidence.append(BitEvidence(slot.bit_index, rule.rule_id, s_before, s_after, decision))
        if decision == 1:
            current = transformed
            used.add(rule.rule_id)
    return ExtractionResult(bits=WatermarkBits(tuple(bits)), evidence=evidence)


_TIE = 1e-9


def _improved(s_before, s_after, struct_pair, raw_pair, margin) -> int:
    """1 iff the transformation strictly improved similarity to the target.

    Whitespace-stripped similarity decides; structural counts break ties;
    raw-text similarity decides last (whitespace-only rules live there).
    """
    d = s_after - s_before
    if d > margin + _TIE:
        return 1
    if d < -_TIE:
        return 0
    t_before, t_after = struct_pair()
    dt = t_after - t_before
    if dt > margin + _TIE:
        return 1
    if dt < -_TIE:
        return 0
    r_before, r_after = raw_pair()
    return 1 if r_after > r_before + margin + _TIE else 0


def extract(
    backend: Backend,
    c1: CodeSnippet,
    codebase: CandidateCodebase,
    weights: SimilarityWeights | None = None,
    n: int = 4,
    policy: DecodingPolicy | None = None,
) -> ExtractionResult:
    """Full pipeline: retrieve the original, rebuild its plan, decode bits."""
    retrieval = retrieve(c1, codebase, weights)
    plan_ = reconstruct_plan(backend, retrieval.match, n)
    result = decode(backend, c1, retrieval.match, plan_, policy)
    result.retrieval = retrieval
    return result
