"""Transformation rule catalog and the deterministic engine.

The catalog holds 29 sub-rules in four categories: naming (6), loops (6),
math (7), organization (10). A rule either carries a deterministic
transformer (a pure function of the snippet text) or is marked
engine-unsupported, in which case only an LLM backend can apply it.

Within each category the rules are listed in static priority order; ranking
and fallback selection elsewhere in the toolkit rely on this order being
stable across releases.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from typing import Callable

from ..errors import EngineUnsupported, NotApplicable
from ..features import _profile
from . import loops, naming, organization
from .mathexpr import MATH_RULES

Transformer = Callable[[str, str], str]


@dataclass(frozen=True)
class RuleCategory:
    id: int
    name: str


CATEGORIES = (
    RuleCategory(1, "naming"),
    RuleCategory(2, "loops"),
    RuleCategory(3, "math"),
    RuleCategory(4, "organization"),
)
CATEGORY_BY_NAME = {c.name: c for c in CATEGORIES}


@dataclass(frozen=True)
class TransformationRule:
    rule_id: str
    category: RuleCategory
    description: str
    reversible_hint: bool = False
    transformer: Transformer | None = None

    @property
    def deterministic(self) -> bool:
        return self.transformer is not None


def _r(rule_id, cat, description, transformer=None, reversible=False):
    return TransformationRule(
        rule_id=rule_id,
        category=CATEGORY_BY_NAME[cat],
        description=description,
        reversible_hint=reversible,
        transformer=transformer,
    )


_RULES = (
    # naming: every matching identifier is renamed consistently at all sites
    _r("naming.camel_to_snake", "naming",
       "Rename camelCase identifiers to snake_case, e.g. testStream to test_stream",
       naming.camel_to_snake, reversible=True),
    _r("naming.snake_to_camel", "naming",
       "Rename snake_case identifiers to camelCase, e.g. my_var to myVar",
       naming.snake_to_camel, reversible=True),
    _r("naming.to_pascal", "naming",
       "Rename lowercase-leading identifiers to PascalCase, e.g. remove to Remove",
       naming.to_pascal),
    _r("naming.to_upper", "naming",
       "Rename identifiers to UPPERCASE, e.g. value to VALUE",
       naming.to_upper, reversible=True),
    _r("naming.to_lower", "naming",
       "Rename mixed-case identifiers to lowercase, e.g. Value to value",
       naming.to_lower, reversible=True),
    _r("naming.add_suffix", "naming",
       "Append a Val suffix to identifiers, e.g. data to dataVal",
       naming.add_suffix),
    # loops
    _r("loops.for_to_while", "loops",
       "Rewrite a counted for loop as an equivalent while loop",
       loops.for_to_while, reversible=True),
    _r("loops.while_to_do_while", "loops",
       "Rewrite a while loop as a guarded do-while loop",
       loops.while_to_do_while),
    _r("loops.while_to_for", "loops",
       "Rewrite a while loop as a for loop", reversible=True),
    _r("loops.flatten_nested", "loops",
       "Flatten a nested counting loop into a single loop over the product range"),
    _r("loops.step_increment", "loops",
       "Change the loop step and rescale the bound, e.g. i++ with doubled stride"),
    _r("loops.reverse_loop", "loops",
       "Reverse the iteration direction of an order-insensitive loop"),
    # math: engine-unsupported, LLM only
    *[_r(rid, "math", desc, reversible=rid in ("math.factorization", "math.expand_distributive"))
      for rid, desc in MATH_RULES],
    # organization
    _r("organization.add_braces", "organization",
       "Wrap unbraced if/else bodies in braces, e.g. if(a) return; to if(a){ return; }",
       organization.add_braces),
    _r("organization.optimize_conditional", "organization",
       "Invert a simple comparison in an if condition, e.g. a > b to !(a <= b)",
       organization.optimize_conditional),
    _r("organization.split_decl", "organization",
       "Split a multi-name declaration, e.g. int x=0,y=1; to int x=0; int y=1;",
       organization.split_decl),
    _r("organization.reorder_decl", "organization",
       "Reverse runs of adjacent independent declarations",
       organization.reorder_decl, reversible=True),
    _r("organization.swap_params", "organization",
       "Swap the two parameters of the function and of every call site",
       organization.swap_params, reversible=True),
    _r("organization.inline_temp", "organization",
       "Inline a single-use temporary into its return, e.g. int t=x+y; return t; to return x+y;",
       organization.inline_temp),
    _r("organization.reorder_cond", "organization",
       "Swap the operands of a pure two-term condition, e.g. a && b to b && a",
       organization.reorder_cond, reversible=True),
    _r("organization.format_spacing", "organization",
       "Normalize spacing around assignments, e.g. int x=5; to int x = 5;",
       organization.format_spacing),
    _r("organization.adjust_op_space", "organization",
       "Normalize spacing around binary operators, e.g. x=y+z; to x = y + z;",
       organization.adjust_op_space),
    _r("organization.insert_blank_line", "organization",
       "Insert one blank line after the first non-blank line",
       organization.insert_blank_line),
)


@dataclass(frozen=True)
class RuleCatalog:
    rules: tuple[TransformationRule, ...]

    def __iter__(self):
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def get(self, rule_id: str) -> TransformationRule:
        for r in self.rules:
            if r.rule_id == rule_id:
                return r
        raise KeyError(rule_id)

    def category_rules(self, category: str | RuleCategory) -> tuple[TransformationRule, ...]:
        name = category.name if isinstance(category, RuleCategory) else category
        return tuple(r for r in self.rules if r.category.name == name)

    def deterministic_rules(self) -> tuple[TransformationRule, ...]:
        return tuple(r for r in self.rules if r.deterministic)


_CATALOG = RuleCatalog(_RULES)


def catalog() -> RuleCatalog:
    """The full static rule catalog; the same object on every call."""
    return _CATALOG


@functools.lru_cache(maxsize=8192)
def _transform_cached(rule_id: str, text: str, language: str) -> str:
    rule = _CATALOG.get(rule_id)
    assert rule.transformer is not None
    return rule.transformer(text, language)


def transformed_text(rule: TransformationRule, snippet) -> str:
    """Result text of the rule on the snippet (may equal the input)."""
    if rule.transformer is None:
        raise EngineUnsupported(
            f"{rule.rule_id} has no deterministic transformer; use an LLM backend"
        )
    return _transform_cached(rule.rule_id, snippet.text, snippet.language)


def is_applicable(rule: TransformationRule, snippet) -> bool:
    """True iff applying the rule would change the snippet text."""
    if rule.transformer is None:
        return False
    return transformed_text(rule, snippet) != snippet.text


def apply(rule: TransformationRule, snippet):
    """Apply the rule at every qualifying site, returning a new snippet."""
    new_text = transformed_text(rule, snippet)
    if new_text == snippet.text:
        raise NotApplicable(f"{rule.rule_id} does not change snippet {snippet.id!r}")
    return snippet.with_text(new_text)


def closer(candidate_text: str, baseline_text: str, target_text: str, language: str) -> bool:
    """Is ``candidate`` strictly closer to ``target`` than ``baseline`` is?

    Compared on whitespace-stripped edit similarity first; structural token
    counts break near-ties; raw-text edit similarity decides last, which is
    what distinguishes whitespace-only transformations.
    """
    from ..features import _edit_sim, sim_sem, sim_struct

    cand = _profile(candidate_text, language)
    base = _profile(baseline_text, language)
    target = _profile(target_text, language)
    s_after = sim_sem(cand, target)
    s_before = sim_sem(base, target)
    if abs(s_after - s_before) > 1e-9:
        return s_after > s_before
    t_after = sim_struct(cand, target)
    t_before = sim_struct(base, target)
    if abs(t_after - t_before) > 1e-9:
        return t_after > t_before
    return _edit_sim(candidate_text, target_text) > _edit_sim(baseline_text, target_text)


def detect(rule: TransformationRule, before, after) -> bool:
    """Deterministic judgment: was ``rule`` plausibly applied to turn
    ``before`` into ``after``? True iff applying it to ``before`` lands
    strictly closer to ``after``."""
    if not rule.deterministic or not is_applicable(rule, before):
        return False
    transformed = transformed_text(rule, before)
    if transformed == after.text:
        return True
    return closer(transformed, before.text, after.text, before.language)


def export_catalog() -> str:
    """JSON description of the catalog for documentation tooling."""
    payload = [
        {
            "rule_id": r.rule_id,
            "category": r.category.name,
            "description": r.description,
            "deterministic": r.deterministic,
        }
        for r in _CATALOG
    ]
    return json.dumps(payload, indent=2)
