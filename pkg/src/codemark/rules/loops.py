"""Loop-rewriting transformations (category 2).

Two deterministic transformers are provided: counted-for to while, and
while to a guarded do-while. Both are conservative: a loop is rewritten
only when the rewrite is provably behavior-preserving from surface syntax
alone, otherwise the site is left untouched. The remaining loop rules in
the catalog have no deterministic transformer.
"""

from __future__ import annotations

from ..lexer import KEYWORDS, Token, tokenize
from ._scan import (
    ASSIGN_OPS,
    assigns_to,
    line_indent,
    match_bracket,
    next_code,
    range_has,
    span_text,
    split_on,
)

_MAX_PASSES = 20


def for_to_while(text: str, language: str) -> str:
    convert = _py_pass if language == "python" else _c_pass
    for _ in range(_MAX_PASSES):
        new = convert(text, language)
        if new == text:
            return text
        text = new
    return text


def while_to_do_while(text: str, language: str) -> str:
    if language == "python":
        return text
    for _ in range(_MAX_PASSES):
        new = _while_pass(text, language)
        if new == text:
            return text
        text = new
    return text


def _indent_at(text: str, pos: int) -> str:
    start = text.rfind("\n", 0, pos) + 1
    head = text[start:pos]
    return head if head.strip() == "" else ""


def _first_content_indent(block: str, fallback: str) -> str:
    for line in block.splitlines():
        if line.strip():
            return line_indent(line)
    return fallback


def _c_pass(text: str, language: str) -> str:
    tokens = tokenize(text, language)
    edits: list[tuple[int, int, str]] = []
    guard = -1
    for i, tok in enumerate(tokens):
        if tok.kind != "ident" or tok.text != "for" or tok.start <= guard:
            continue
        edit = _c_for_site(text, tokens, i)
        if edit is None:
            continue
        edits.append(edit)
        guard = edit[1]
    return _apply_edits(text, edits)


def _c_for_site(text: str, tokens: list[Token], i: int) -> tuple[int, int, str] | None:
    op = next_code(tokens, i)
    if op is None or tokens[op].text != "(":
        return None
    close = match_bracket(tokens, op)
    if close is None:
        return None
    header = split_on(tokens, op + 1, close, ";")
    if len(header) != 3:
        return None  # range-for / for-in / for-of headers have no two semicolons
    (init_lo, init_hi), (cond_lo, cond_hi), (step_lo, step_hi) = header
    if not any(tokens[j].kind in ("ident", "number", "op") for j in range(cond_lo, cond_hi)):
        return None  # empty condition: while(1) changes nothing semantically but skip anyway
    if len(split_on(tokens, step_lo, step_hi, ",")) != 1:
        return None  # 'i++, j++' is not a statement in Java

    b = next_code(tokens, close)
    if b is None:
        return None
    tok_start = tokens[i].start
    indent = _indent_at(text, tok_start)
    init_src = span_text(text, tokens, init_lo, init_hi).strip()
    hoisted = _declared_name(tokens, init_lo, init_hi)
    cond_src = span_text(text, tokens, cond_lo, cond_hi).strip()
    step_src = span_text(text, tokens, step_lo, step_hi).strip()
    head = (init_src + ";\n" + indent) if init_src else ""

    if tokens[b].text == "{":
        body_close = match_bracket(tokens, b)
        if body_close is None:
            return None
        if range_has(tokens, b, body_close, {"continue"}):
            return None  # 'continue' would skip the relocated step
        if hoisted and _used_outside(tokens, hoisted, tokens[i].start, tokens[body_close].end):
            return None  # hoisting the declaration would collide or leak
        inner = text[tokens[b].end : tokens[body_close].start]
        body_indent = _first_content_indent(inner, indent + "    ")
        if step_src:
            inner = inner.rstrip() + "\n" + body_indent + step_src + ";\n" + indent
        replacement = head + "while (" + cond_src + ") {" + inner + "}"
        return (tok_start, tokens[body_close].end, replacement)

    # unbraced single-statement body
    if tokens[b].kind == "ident" and tokens[b].text in ("if", "for", "while", "do", "switch", "try"):
        return None
    semi = None
    depth = 0
    for j in range(b, len(tokens)):
        t = tokens[j]
        if t.kind != "op":
            if t.kind == "ident" and t.text == "continue":
                return None
            continue
        if t.text in "([{":
            depth += 1
        elif t.text in ")]}":
            if depth == 0:
                return None
            depth -= 1
        elif t.text == ";" and depth == 0:
            semi = j
            break
        elif t.text == "{":
            return None
    if semi is None:
        return None
    if hoisted and _used_outside(tokens, hoisted, tokens[i].start, tokens[semi].end):
        return None
    stmt_src = text[tokens[b].start : tokens[semi].end]
    tail = (" " + step_src + ";") if step_src else ""
    replacement = head + "while (" + cond_src + ") { " + stmt_src + tail + " }"
    return (tok_start, tokens[semi].end, replacement)


def _declared_name(tokens: list[Token], lo: int, hi: int) -> str | None:
    """Name declared by a for-init like ``int i = 0``; None for plain assignments."""
    code = [tokens[j] for j in range(lo, hi) if tokens[j].kind in ("ident", "number", "op")]
    for k, t in enumerate(code):
        if t.kind == "op" and t.text == "=":
            idents = [c for c in code[:k] if c.kind == "ident"]
            return idents[-1].text if len(idents) >= 2 else None
    return None


def _used_outside(tokens: list[Token], name: str, span_start: int, span_end: int) -> bool:
    return any(
        t.kind == "ident" and t.text == name and not (span_start <= t.start < span_end)
        for t in tokens
    )


def _py_pass(text: str, language: str) -> str:
    tokens = tokenize(text, "python")
    lines = text.splitlines(keepends=True)
    # char offset of each line start, for mapping tokens to lines
    starts = [0]
    for ln in lines:
        starts.append(starts[-1] + len(ln))

    for i, tok in enumerate(tokens):
        if tok.kind != "ident" or tok.text != "for":
            continue
        rewritten = _py_for_site(text, tokens, i, lines, starts)
        if rewritten is not None:
            return rewritten
    return text


def _line_of(starts: list[int], pos: int) -> int:
    lo, hi = 0, len(starts) - 1
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if starts[mid] <= pos:
            lo = mid
        else:
            hi = mid
    return lo


def _py_for_site(text, tokens, i, lines, starts):
    var_i = next_code(tokens, i)
    if var_i is None or tokens[var_i].kind != "ident":
        return None
    var = tokens[var_i].text
    in_i = next_code(tokens, var_i)
    if in_i is None or tokens[in_i].text != "in":
        return None
    rng_i = next_code(tokens, in_i)
    if rng_i is None or tokens[rng_i].text != "range":
        return None
    op = next_code(tokens, rng_i)
    if op is None or tokens[op].text != "(":
        return None
    close = match_bracket(tokens, op)
    if close is None:
        return None
    colon = next_code(tokens, close)
    if colon is None or tokens[colon].text != ":":
        return None

    args = split_on(tokens, op + 1, close, ",")
    if not 1 <= len(args) <= 3:
        return None
    for lo, hi in args:
        if lo >= hi:
            return None
        for j in range(lo, hi):
            t = tokens[j]
            if t.kind == "op" and t.text not in ("+", "-", "*", "%"):
                return None  # no calls or indexing: the bound is re-evaluated every pass
            if t.kind == "ident" and t.text in KEYWORDS:
                return None
            if t.kind in ("string", "comment"):
                return None
    if len(args) == 1:
        start_src, stop = "0", args[0]
    else:
        start_src = span_text(text, tokens, *args[0]).strip()
        stop = args[1]
    stop_src = span_text(text, tokens, *stop).strip()
    step_src = "1"
    if len(args) == 3:
        lo, hi = args[2]
        if hi - lo != 1 or tokens[lo].kind != "number" or not tokens[lo].text.isdigit():
            return None
        if int(tokens[lo].text) <= 0:
            return None
        step_src = tokens[lo].text

    for_line = _line_of(starts, tokens[i].start)
    if _line_of(starts, tokens[colon].end - 1) != for_line:
        return None  # multi-line header
    header_line = lines[for_line]
    indent = line_indent(header_line)
    # inline body ('for ...: stmt') is left alone
    after_colon = text[tokens[colon].end : starts[for_line + 1]] if for_line + 1 < len(starts) else ""
    if after_colon.strip() and not after_colon.lstrip().startswith("#"):
        return None

    # collect the indented body
    body_end = for_line + 1
    last_content = None
    j = for_line + 1
    while j < len(lines):
        stripped = lines[j].strip()
        if not stripped:
            j += 1
            continue
        if len(line_indent(lines[j])) <= len(indent):
            break
        last_content = j
        j += 1
    if last_content is None:
        return None
    body_end = last_content + 1
    if j < len(lines) and line_indent(lines[j]) == indent and lines[j].lstrip().startswith("else"):
        return None  # for/else clause

    body_lo = starts[for_line + 1]
    body_hi = starts[body_end]
    body_token_range = [k for k, t in enumerate(tokens) if body_lo <= t.start < body_hi]
    if not body_token_range:
        return None
    blo, bhi = body_token_range[0], body_token_range[-1] + 1
    if range_has(tokens, blo, bhi, {"continue"}):
        return None
    guarded = {var} | {
        tokens[k].text for lo, hi in args for k in range(lo, hi) if tokens[k].kind == "ident"
    }
    for name in guarded:
        if assigns_to(tokens, blo, bhi, name):
            return None
    # the counter ends one step past the last iteration, so it must be dead after the loop
    for k in range(len(tokens)):
        t = tokens[k]
        if t.start >= body_hi and t.kind == "ident" and t.text == var:
            return None

    body_indent = _first_content_indent("".join(lines[for_line + 1 : body_end]), indent + "    ")
    init_line = f"{indent}{var} = {start_src}\n"
    while_line = f"{indent}while {var} < {stop_src}:\n"
    incr = f"{var} += {step_src}" if step_src != "1" else f"{var} += 1"
    incr_line = f"{body_indent}{incr}\n"
    new_lines = list(lines[:for_line])
    new_lines.append(init_line)
    new_lines.append(while_line)
    body_lines = list(lines[for_line + 1 : body_end])
    if body_lines and not body_lines[-1].endswith("\n"):
        body_lines[-1] += "\n"
    new_lines.extend(body_lines)
    new_lines.append(incr_line)
    new_lines.extend(lines[body_end:])
    out = "".join(new_lines)
    if out.endswith("\n") and not text.endswith("\n"):
        out = out[:-1]
    return out


_COND_FORBIDDEN = frozenset({"(", "++", "--", ","}) | ASSIGN_OPS


def _while_pass(text: str, language: str) -> str:
    tokens = tokenize(text, language)
    edits: list[tuple[int, int, str]] = []
    guard = -1
    for i, tok in enumerate(tokens):
        if tok.kind != "ident" or tok.text != "while" or tok.start <= guard:
            continue
        op = next_code(tokens, i)
        if op is None or tokens[op].text != "(":
            continue
        close = match_bracket(tokens, op)
        if close is None:
            continue
        body_open = next_code(tokens, close)
        if body_open is None or tokens[body_open].text != "{":
            continue  # do-while tails and unbraced bodies are skipped
        cond_code = [tokens[j] for j in range(op + 1, close) if tokens[j].kind in ("ident", "number", "op")]
        if not cond_code:
            continue
        if any(t.kind == "op" and t.text in _COND_FORBIDDEN for t in cond_code):
            continue  # condition must be side-effect free: it is evaluated once more
        body_close = match_bracket(tokens, body_open)
        if body_close is None:
            continue
        cond_src = span_text(text, tokens, op + 1, close).strip()
        inner = text[tokens[body_open].end : tokens[body_close].start]
        replacement = (
            "if (" + cond_src + ") { do {" + inner + "} while (" + cond_src + "); }"
        )
        edits.append((tok.start, tokens[body_close].end, replacement))
        guard = tokens[body_close].end
    return _apply_edits(text, edits)


def _apply_edits(text: str, edits: list[tuple[int, int, str]]) -> str:
    for start, end, replacement in reversed(edits):
        text = text[:start] + replacement + text[end:]
    return text
