"""Watermark embedding: category scheduling, rule allocation, iterative apply.

Bits are assigned to rule categories round-robin (naming, loops, math,
organization, then repeat). For each 1-bit, the highest-ranked applicable
rule of its category is applied after a semantics check, walking down the
ranked list on failure; a bit whose category offers nothing falls back to an
organization rule, which is applicable to essentially any snippet.

Rule allocation is positional: the j-th bit drawing from a given ranked list
is assigned that list's j-th rule, independently of the bit values. This
keeps the rule-to-bit mapping recoverable at extraction time, where bit
values are unknown: a usage-based "next free rule" scheme would make
(w_j=0, w_k=1) indistinguishable from (w_j=1, w_k=0) whenever positions j
and k draw from the same list.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .corpus import CodeSnippet, WatermarkRecord
from .errors import EmbeddingFailed
from .gateway import Backend, rank_rules, transform, verify_semantics
from .rules import CATEGORIES, TransformationRule, catalog

MOCK_CREATED_AT = "1970-01-01T00:00:00+00:00"  # fixed: mock runs are byte-reproducible
WALK_CAP = 5  # candidate rules tried per bit before falling back


@dataclass(frozen=True)
class WatermarkBits:
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) < 1:
            raise ValueError("watermark needs at least one bit")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    @classmethod
    def from_string(cls, s: str) -> "WatermarkBits":
        if not s or any(ch not in "01" for ch in s):
            raise ValueError(f"not a bitstring: {s!r}")
        return cls(tuple(int(ch) for ch in s))

    @classmethod
    def random(cls, n: int, rng: random.Random) -> "WatermarkBits":
        return cls(tuple(rng.getrandbits(1) for _ in range(n)))


def category_for_bit(k: int) -> str:
    """Category of 1-based bit position k: round-robin over the four families."""
    return CATEGORIES[(k - 1) % len(CATEGORIES)].name


@dataclass
class BitSlot:
    bit_index: int  # 1-based
    category: str
    ranked_rules: list[str]  # rule ids, best first
    chosen: str | None = None


@dataclass
class EmbeddingPlan:
    per_bit: list[BitSlot]
    fallback_rules: list[str]  # organization ranking on the base snippet

    @property
    def n(self) -> int:
        return len(self.per_bit)


def plan(backend: Backend, snippet: CodeSnippet, n: int) -> EmbeddingPlan:
    """Rank candidate rules per bit position for this snippet."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ranked_by_cat: dict[str, list[str]] = {}
    slots = []
    for k in range(1, n + 1):
        cat = category_for_bit(k)
        if cat not in ranked_by_cat:
            ranked_by_cat[cat] = [r.rule_id for r in rank_rules(backend, snippet, cat)]
        slots.append(BitSlot(bit_index=k, category=cat, ranked_rules=list(ranked_by_cat[cat])))
    if "organization" not in ranked_by_cat:
        ranked_by_cat["organization"] = [
            r.rule_id for r in rank_rules(backend, snippet, "organization")
        ]
    return EmbeddingPlan(per_bit=slots, fallback_rules=list(ranked_by_cat["organization"]))


@dataclass
class BitCandidates:
    """Static walk lists for one bit, shared by embedding and decoding."""

    assigned: str | None  # this bit's own rule, None when the lists ran dry
    walk: list[str]  # assigned rule plus unassigned same-list rules, capped
    org_pool: list[str]  # unassigned organization rules (one attempt allowed)
    is_fallback: bool  # True when even the assigned rule is an organization fallback


def allocate(plan_: EmbeddingPlan) -> list[BitCandidates]:
    """Disjoint positional rule assignment for every bit (see module docstring)."""
    counters: dict[str, int] = {}
    picks: list[tuple[str, int, bool]] = []  # (source category, index, is_fallback)
    for slot in plan_.per_bit:
        primary = slot.ranked_rules
        idx = counters.get(slot.category, 0)
        if primary and idx < len(primary):
            counters[slot.category] = idx + 1
            picks.append((slot.category, idx, False))
        else:
            oidx = counters.get("organization", 0)
            counters["organization"] = oidx + 1
            picks.append(("organization", oidx, True))

    org_list = plan_.fallback_rules
    lists = {slot.category: slot.ranked_rules for slot in plan_.per_bit}
    lists["organization"] = org_list
    tails = {cat: lst[counters.get(cat, 0) :] for cat, lst in lists.items()}
    org_tail = tails["organization"]

    out = []
    for slot, (source, idx, is_fallback) in zip(plan_.per_bit, picks):
        src_list = lists[source]
        assigned = src_list[idx] if idx < len(src_list) else None
        walk = ([assigned] if assigned else []) + tails[source]
        walk = walk[:WALK_CAP]
        pool = [] if source == "organization" else list(org_tail)
        out.append(BitCandidates(assigned, walk, pool, is_fallback))
    return out


def _try_rule(backend, snippet, rule):
    """Transformed snippet if the rule applies and verifies, else None."""
    verdict = transform(backend, snippet, rule)
    if not verdict.rule_confirmed:
        return None
    candidate = snippet.with_text(verdict.output_text)
    if not verify_semantics(backend, snippet, candidate):
        return False  # applicable but rejected; caller decides whether to walk on
    return candidate


def select_rule(backend, current: CodeSnippet, cands: BitCandidates, used: set[str]):
    """The (rule, transformed snippet) the embedding walk picks at this state.

    Pure given a mock backend, so extraction replays it exactly. Returns
    (None, None) when nothing is applicable.
    """
    cat = catalog()
    for rid in cands.walk:
        if rid in used:
            continue
        result = _try_rule(backend, current, cat.get(rid))
        if result is None or result is False:
            continue
        return cat.get(rid), result
    for rid in cands.org_pool:
        if rid in used:
            continue
        rule = cat.get(rid)
        result = _try_rule(backend, current, rule)
        if result is None:
            continue
        if result is False:
            return None, None  # one fallback attempt only
        return rule, result
    return None, None


@dataclass
class BitStatus:
    bit: int
    status: str  # applied | skipped | fallback | failed
    rule_id: str | None = None


@dataclass
class EmbeddingOutcome:
    snippet_id: str
    bits: WatermarkBits
    watermarked: CodeSnippet | None
    record: WatermarkRecord | None
    per_bit_status: list[BitStatus] = field(default_factory=list)

    @property
    def success(self) -> bool:
        return self.watermarked is not None


def embed(
    backend: Backend,
    snippet: CodeSnippet,
    bits: WatermarkBits,
    plan_: EmbeddingPlan | None = None,
    created_at: str | None = None,
) -> EmbeddingOutcome:
    """Embed ``bits`` into ``snippet``; raises EmbeddingFailed if any bit fails."""
    if plan_ is None:
        plan_ = plan(backend, snippet, bits.n)
    if plan_.n != bits.n:
        raise ValueError(f"plan covers {plan_.n} bits, watermark has {bits.n}")
    cands = allocate(plan_)
    current = snippet
    used: set[str] = set()
    statuses: list[BitStatus] = []
    per_bit_rules: list[dict] = []
    failed = False
    for slot, cand, bit in zip(plan_.per_bit, cands, bits):
        k = slot.bit_index
        if bit == 0:
            statuses.append(BitStatus(k, "skipped", cand.assigned))
            per_bit_rules.append({"bit": k, "rule_id": cand.assigned, "applied": False})
            continue
        rule, transformed = select_rule(backend, current, cand, used)
        if rule is None:
            statuses.append(BitStatus(k, "failed"))
            per_bit_rules.append({"bit": k, "rule_id": None, "applied": False})
            failed = True
            continue
        slot.chosen = rule.rule_id
        used.add(rule.rule_id)
        current = transformed
        status = "applied" if rule.category.name == slot.category and not cand.is_fallback else "fallback"
        statuses.append(BitStatus(k, status, rule.rule_id))
        per_bit_rules.append({"bit": k, "rule_id": rule.rule_id, "applied": True})

    if failed:
        outcome = EmbeddingOutcome(snippet.id, bits, None, None, statuses)
        exc = EmbeddingFailed(
            f"snippet {snippet.id!r}: bits "
            + ",".join(str(s.bit) for s in statuses if s.status == "failed")
            + " could not be embedded"
        )
        exc.outcome = outcome
        raise exc

    record = WatermarkRecord(
        snippet_id=snippet.id,
        bits=str(bits),
        per_bit_rules=tuple(per_bit_rules),
        backend=backend.label,
        created_at=created_at or (MOCK_CREATED_AT if backend.kind == "mock" else _utc_now()),
    )
    return EmbeddingOutcome(snippet.id, bits, current, record, statuses)


def _utc_now() -> str:
    import datetime

    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")


def embed_batch(backend, codebase, bit_source, n: int = 4) -> list[EmbeddingOutcome]:
    """Embed every snippet independently.

    ``bit_source`` is an int seed (uniform random bits per snippet, drawn in
    codebase iteration order) or an explicit list of WatermarkBits matching
    the codebase length. Per-snippet failures are collected, not raised.
    """
    snippets = list(codebase)
    if isinstance(bit_source, int):
        rng = random.Random(bit_source)
        all_bits = [WatermarkBits.random(n, rng) for _ in snippets]
    else:
        all_bits = list(bit_source)
        if len(all_bits) != len(snippets):
            raise ValueError(f"{len(all_bits)} watermarks for {len(snippets)} snippets")
    outcomes = []
    for snippet, bits in zip(snippets, all_bits):
        try:
            outcomes.append(embed(backend, snippet, bits))
        except EmbeddingFailed as exc:
            outcomes.append(exc.outcome)
    return outcomes
