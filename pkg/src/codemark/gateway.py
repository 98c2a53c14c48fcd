"""Backends: the deterministic mock engine and a remote chat-completion client.

The mock backend delegates every judgment to the rules engine and is fully
offline and reproducible; it is the default everywhere. The remote backend
renders versioned prompt templates, posts them to a chat-completion
endpoint, and parses the reply's last fenced code block.
"""

from __future__ import annotations

import json
import os
import re
import shlex
import subprocess
import tempfile
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

import requests

from . import rules as rules_mod
from .corpus import CodeSnippet
from .errors import MockUnsupported, NetworkError, NotApplicable, ParseError
from .lexer import tokenize
from .rules import TransformationRule, catalog, is_applicable, transformed_text

PROMPT_VERSION = "1.0"
DEFAULT_API_KEY_ENV = "CODEMARK_API_KEY"


@dataclass(frozen=True)
class ProviderConfig:
    endpoint_url: str
    model_name: str
    api_key_env: str = DEFAULT_API_KEY_ENV
    temperature: float = 0.0
    timeout: float = 60.0
    max_retries: int = 3
    requests_per_minute: int = 60

    def __post_init__(self) -> None:
        if not 0.0 <= self.temperature <= 2.0:
            raise ValueError("temperature must be in [0, 2]")
        if self.max_retries < 0:
            raise ValueError("max_retries must be >= 0")


@dataclass(frozen=True)
class TransformVerdict:
    output_text: str
    rule_confirmed: bool
    notes: str = ""

    def __post_init__(self) -> None:
        if self.rule_confirmed and not self.output_text:
            raise ValueError("confirmed verdict requires non-empty output")


class _RateLimiter:
    """Token bucket: at most ``rate`` acquisitions per minute."""

    def __init__(self, rate_per_minute: int):
        self.capacity = max(1, rate_per_minute)
        self.tokens = float(self.capacity)
        self.fill_per_sec = self.capacity / 60.0
        self.updated = time.monotonic()
        self.lock = threading.Lock()

    def acquire(self) -> None:
        while True:
            with self.lock:
                now = time.monotonic()
                self.tokens = min(self.capacity, self.tokens + (now - self.updated) * self.fill_per_sec)
                self.updated = now
                if self.tokens >= 1.0:
                    self.tokens -= 1.0
                    return
                wait = (1.0 - self.tokens) / self.fill_per_sec
            time.sleep(wait)


@dataclass
class Backend:
    """kind is "mock" or "remote"; remote requires a ProviderConfig."""

    kind: str = "mock"
    provider: ProviderConfig | None = None
    test_commands: dict[str, str] = field(default_factory=dict)
    _limiter: _RateLimiter | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if self.kind not in ("mock", "remote"):
            raise ValueError(f"unknown backend kind {self.kind!r}")
        if self.kind == "remote":
            if self.provider is None:
                raise ValueError("remote backend needs a ProviderConfig")
            self._limiter = _RateLimiter(self.provider.requests_per_minute)

    @property
    def label(self) -> str:
        if self.kind == "mock":
            return "mock"
        return f"remote:{self.provider.model_name}"


def mock_backend(test_commands: dict[str, str] | None = None) -> Backend:
    return Backend(kind="mock", test_commands=dict(test_commands or {}))


# --- prompt templates (versioned; do not edit without bumping PROMPT_VERSION)

EMBED_PROMPT_TEMPLATE = """\
Role: You are a skilled programmer capable of rewriting code while preserving
its functionality and syntax correctness.

Description: Given a source code and a randomly generated watermark bitstring,
apply semantic-preserving transformations to embed the watermark.

Rules:
- For each bit w_k = 1, apply exactly one transformation from the k-th selected
  sub-rule.
- If w_k = 0, leave the code unchanged for that position.
- Follow transformation-specific constraints.
- No functionality changes or added comments are allowed.

Example:
Input: w = (1, 0, 0, 1) and sub-rules {{CamelCase to snake_case, for to while,
group ops, insert blank line}}
Output: Transformed code applying rules 1 and 4, skipping 2 and 3.

Task:
Given the code below, the bitstring w = ({bits_csv}), and the sub-rule list
{{{rule_list}}}, output the watermarked code in a fenced code block.

Sub-rules by bit position:
{rule_lines}

Code:
```{language}
{code}
```
"""

EXTRACT_PROMPT_TEMPLATE = """\
Role: You are an expert in identifying subtle transformations between source
code versions.

Description: Given an original and a watermarked code, determine which
transformations occurred to recover the embedded watermark.

Rules:
- For each bit position k, compare original and transformed code using
  sub-rule T_k.
- Set w_k = 1 if the rule was applied, otherwise w_k = 0.
- Justify decisions based on code structure and semantic consistency.

Example:
Input: Code pair {{Original, Watermarked}}, sub-rules {{T}}
Output: w = (1, 0, 0, 1) with justification per bit.

Task:
Recover w = (w_1, ..., w_{n}) from the comparison between [ORIGINAL] and
[TRANSFORMED] based on this sub-rule sequence:
{rule_lines}

[ORIGINAL]
```{language}
{original}
```

[TRANSFORMED]
```{language}
{watermarked}
```
"""

TRANSFORM_PROMPT_TEMPLATE = """\
Role: You are a skilled programmer capable of rewriting code while preserving
its functionality and syntax correctness.

Task: Apply exactly one transformation to the code below: {description}.
Do not change behavior, do not add comments, do not touch string literals.
If the transformation does not apply to this code, return the code unchanged.
Reply with the resulting code in a fenced code block.

Code:
```{language}
{code}
```
"""

RANK_PROMPT_TEMPLATE = """\
Role: You are a skilled programmer assessing which rewrites suit a given code.

Task: Rank the following transformation rules from most to least suitable for
the code below. Omit rules that cannot apply. Reply with one rule id per line.

Rules:
{rule_lines}

Code:
```{language}
{code}
```
"""

VERIFY_PROMPT_TEMPLATE = """\
Role: You are a meticulous code reviewer.

Task: Decide whether the two versions below have identical input-output
behavior under all inputs. Reply with exactly YES or NO on the first line.

[BEFORE]
```{language}
{before}
```

[AFTER]
```{language}
{after}
```
"""


def render_embed_prompt(snippet: CodeSnippet, bits, sub_rules: list[TransformationRule]) -> str:
    """Instantiate the embedding prompt for one snippet.

    ``bits`` is a WatermarkBits or any sequence of 0/1. One sub-rule per bit.
    """
    values = list(getattr(bits, "bits", bits))
    if len(sub_rules) != len(values):
        raise ValueError(f"{len(sub_rules)} sub-rules for {len(values)} bits")
    if not values:
        raise ValueError("empty watermark")
    bits_csv = ", ".join(str(int(b)) for b in values)
    rule_list = ", ".join(r.rule_id for r in sub_rules)
    rule_lines = "\n".join(
        f"  w_{k}: {r.rule_id} ({r.description})" for k, r in enumerate(sub_rules, start=1)
    )
    return EMBED_PROMPT_TEMPLATE.format(
        bits_csv=bits_csv,
        rule_list=rule_list,
        rule_lines=rule_lines,
        language=snippet.language,
        code=snippet.text,
    )


def render_extract_prompt(
    original: CodeSnippet, watermarked: CodeSnippet, sub_rules: list[TransformationRule]
) -> str:
    if not sub_rules:
        raise ValueError("sub-rule list is empty")
    rule_lines = "\n".join(
        f"  w_{k}: {r.rule_id} ({r.description})" for k, r in enumerate(sub_rules, start=1)
    )
    return EXTRACT_PROMPT_TEMPLATE.format(
        n=len(sub_rules),
        rule_lines=rule_lines,
        language=original.language,
        original=original.text,
        watermarked=watermarked.text,
    )


# --- remote plumbing

_CODE_BLOCK_RE = re.compile(r"```[^\n`]*\n(.*?)```", re.DOTALL)


def extract_code_block(reply: str) -> str:
    """Last fenced code block of a completion reply."""
    blocks = _CODE_BLOCK_RE.findall(reply)
    if not blocks:
        raise ParseError("no fenced code block in reply")
    return blocks[-1].rstrip("\n") + "\n"


def _chat(backend: Backend, prompt: str) -> str:
    """One chat completion with retry on transport errors."""
    cfg = backend.provider
    key = os.environ.get(cfg.api_key_env, "")
    headers = {"Content-Type": "application/json"}
    if key:
        headers["Authorization"] = f"Bearer {key}"
    body = {
        "model": cfg.model_name,
        "temperature": cfg.temperature,
        "messages": [{"role": "user", "content": prompt}],
    }
    last_err: Exception | None = None
    for _ in range(cfg.max_retries + 1):
        backend._limiter.acquire()
        try:
            resp = requests.post(
                cfg.endpoint_url, headers=headers, data=json.dumps(body), timeout=cfg.timeout
            )
            resp.raise_for_status()
            payload = resp.json()
            return payload["choices"][0]["message"]["content"]
        except (requests.RequestException, KeyError, IndexError, ValueError) as exc:
            last_err = exc
    raise NetworkError(f"endpoint {cfg.endpoint_url} failed after retries: {last_err}")


def _chat_code(backend: Backend, prompt: str) -> str:
    """Chat completion whose reply must contain a code block; retries parse failures."""
    cfg = backend.provider
    last_err: Exception | None = None
    for _ in range(cfg.max_retries + 1):
        reply = _chat(backend, prompt)
        try:
            return extract_code_block(reply)
        except ParseError as exc:
            last_err = exc
    raise ParseError(f"no code block after retries: {last_err}")


# --- operations

def transform(backend: Backend, snippet: CodeSnippet, rule: TransformationRule) -> TransformVerdict:
    """Apply one rule through the backend."""
    if backend.kind == "mock":
        if rule.transformer is None:
            return TransformVerdict(snippet.text, False, "engine-unsupported rule")
        new_text = transformed_text(rule, snippet)
        if new_text == snippet.text:
            return TransformVerdict(snippet.text, False, "not applicable")
        return TransformVerdict(new_text, True, "")
    prompt = TRANSFORM_PROMPT_TEMPLATE.format(
        description=f"{rule.rule_id}: {rule.description}",
        language=snippet.language,
        code=snippet.text,
    )
    out = _chat_code(backend, prompt)
    changed = out.strip() != snippet.text.strip()
    return TransformVerdict(out, changed, "" if changed else "model returned code unchanged")


def rank_rules(backend: Backend, snippet: CodeSnippet, category: str) -> list[TransformationRule]:
    """Applicable rules of one category, best first.

    Mock ranking is the catalog's static priority filtered by applicability.
    Remote ranking is the model's order, re-filtered by the engine wherever a
    deterministic transformer exists.
    """
    cat_rules = catalog().category_rules(category)
    if not cat_rules:
        raise ValueError(f"unknown category {category!r}")
    if backend.kind == "mock":
        return [r for r in cat_rules if is_applicable(r, snippet)]
    prompt = RANK_PROMPT_TEMPLATE.format(
        rule_lines="\n".join(f"  {r.rule_id}: {r.description}" for r in cat_rules),
        language=snippet.language,
        code=snippet.text,
    )
    reply = _chat(backend, prompt)
    by_id = {r.rule_id: r for r in cat_rules}
    ranked = []
    for line in reply.splitlines():
        rid = line.strip().strip("-*").strip()
        if rid in by_id and by_id[rid] not in ranked:
            ranked.append(by_id[rid])
    return [r for r in ranked if not r.deterministic or is_applicable(r, snippet)]


def verify_semantics(backend: Backend, before: CodeSnippet, after: CodeSnippet) -> bool:
    """Did the rewrite preserve behavior?

    Mock: structural check (literals and comments untouched, bracket balance
    preserved), plus execution of a configured per-language test command when
    one exists. Remote: the model judges.
    """
    if before.text == after.text:
        return True
    if backend.kind == "remote":
        prompt = VERIFY_PROMPT_TEMPLATE.format(
            language=before.language, before=before.text, after=after.text
        )
        reply = _chat(backend, prompt)
        return reply.strip().upper().startswith("YES")
    if not _structural_ok(before, after):
        return False
    command = backend.test_commands.get(before.language)
    if command:
        verdict = run_test_command(after, command)
        if verdict is not None:
            return verdict
    return True


def _structural_ok(before: CodeSnippet, after: CodeSnippet) -> bool:
    bt = tokenize(before.text, before.language)
    at = tokenize(after.text, after.language)
    masked_before = [t.text for t in bt if t.kind in ("string", "comment", "directive")]
    masked_after = [t.text for t in at if t.kind in ("string", "comment", "directive")]
    if masked_before != masked_after:
        return False
    # rewrites may add or drop matched bracket pairs, but never unbalance
    return _balanced(at) or not _balanced(bt)


def _balanced(tokens) -> bool:
    pairs = {"(": ")", "{": "}", "[": "]"}
    stack: list[str] = []
    for t in tokens:
        if t.kind != "op":
            continue
        if t.text in pairs:
            stack.append(pairs[t.text])
        elif t.text in pairs.values():
            if not stack or stack.pop() != t.text:
                return False
    return not stack


_EXT = {"c": ".c", "cpp": ".cpp", "java": ".java", "javascript": ".js", "python": ".py"}


def run_test_command(snippet: CodeSnippet, command_template: str, timeout: float = 20.0) -> bool | None:
    """Write the snippet to a temp workspace and run the command on it.

    The template's ``{file}`` placeholder receives the snippet path. Returns
    True/False for pass/fail, or None when the runtime is unavailable.
    """
    suffix = _EXT.get(snippet.language, ".txt")
    runner = shlex.split(command_template.split()[0])[0] if command_template.split() else ""
    with tempfile.TemporaryDirectory(prefix="codemark-run-") as tmp:
        base = Path(snippet.id).name or "snippet"
        if not base.endswith(suffix):
            base = Path(base).stem + suffix
        path = Path(tmp) / base
        path.write_text(snippet.text, encoding="utf-8")
        cmd = command_template.format(file=str(path))
        try:
            proc = subprocess.run(
                cmd, shell=True, capture_output=True, timeout=timeout, cwd=tmp
            )
        except subprocess.TimeoutExpired:
            return False
        except OSError:
            return None
        if proc.returncode == 127 or (b"not found" in proc.stderr and runner.encode() in proc.stderr):
            return None  # missing runtime, not a test failure
        return proc.returncode == 0


def paraphrase(backend: Backend, snippet: CodeSnippet) -> str:
    """Model-driven rewrite used by the adaptive de-watermarking attack."""
    if backend.kind == "mock":
        raise MockUnsupported("paraphrase requires a remote backend")
    prompt = TRANSFORM_PROMPT_TEMPLATE.format(
        description="rewrite the code freely while preserving its exact behavior",
        language=snippet.language,
        code=snippet.text,
    )
    return _chat_code(backend, prompt)
