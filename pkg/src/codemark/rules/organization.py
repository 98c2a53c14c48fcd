"""Code-organization transformations (category 4).

Ten deterministic transformers over statement layout, conditionals, and
spacing. Each one transforms every qualifying site, and qualifies a site
only when the rewrite is behavior-preserving from surface syntax alone.
"""

from __future__ import annotations

from ..features import function_name
from ..lexer import CODE_KINDS, KEYWORDS, Token, tokenize
from ._rename import interpolated_names
from ._scan import (
    ASSIGN_OPS,
    CONTROL_KEYWORDS,
    match_bracket,
    next_code,
    prev_code,
    span_text,
    split_on,
)

_INVERSE_CMP = {"<": ">=", ">": "<=", "<=": ">", ">=": "<", "==": "!=", "!=": "=="}
_CMP_OPS = frozenset(_INVERSE_CMP)
_BLOCK_OPENERS = frozenset({"if", "for", "while", "do", "switch", "try", "else"})


def _apply_edits(text: str, edits: list[tuple[int, int, str]]) -> str:
    for start, end, replacement in sorted(edits, reverse=True):
        text = text[:start] + replacement + text[end:]
    return text


def _statements(tokens: list[Token]) -> list[tuple[int, int]]:
    """Brace-free ';'-terminated statements as (first_token, semicolon) index pairs."""
    out = []
    start = None
    depth = 0
    for i, t in enumerate(tokens):
        if t.kind not in CODE_KINDS:
            continue
        if start is None:
            if t.kind == "op" and t.text in "{};":
                continue
            start = i
            depth = 0
        if t.kind != "op":
            continue
        if t.text in ("(", "["):
            depth += 1
        elif t.text in (")", "]"):
            depth -= 1
        elif t.text in ("{", "}"):
            start = None
        elif t.text == ";" and depth == 0:
            out.append((start, i))
            start = None
    return out


def _brace_context(tokens: list[Token]) -> list[int | None]:
    """For each token, the index of its innermost enclosing '{' (None at top level)."""
    ctx: list[int | None] = []
    stack: list[int] = []
    for i, t in enumerate(tokens):
        ctx.append(stack[-1] if stack else None)
        if t.kind == "op":
            if t.text == "{":
                stack.append(i)
            elif t.text == "}" and stack:
                stack.pop()
    return ctx


def _is_body_brace(tokens: list[Token], brace_idx: int | None) -> bool:
    """True when the brace opens a statement block rather than a type or literal."""
    if brace_idx is None:
        return False
    p = prev_code(tokens, brace_idx)
    if p is None:
        return False
    t = tokens[p]
    if t.kind == "op" and t.text == ")":
        return True
    return t.kind == "ident" and t.text in ("else", "do", "try", "finally")


# --- add_braces -------------------------------------------------------------

def add_braces(text: str, language: str) -> str:
    if language == "python":
        return text
    tokens = tokenize(text, language)
    edits = []
    guard = -1
    for i, tok in enumerate(tokens):
        if tok.kind != "ident" or tok.text not in ("if", "else") or tok.start <= guard:
            continue
        if tok.text == "if":
            op = next_code(tokens, i)
            if op is None or tokens[op].text != "(":
                continue
            close = match_bracket(tokens, op)
            if close is None:
                continue
            b = next_code(tokens, close)
        else:
            b = next_code(tokens, i)
        if b is None:
            continue
        bt = tokens[b]
        if bt.kind == "op" and bt.text == "{":
            continue
        if bt.kind == "ident" and bt.text in _BLOCK_OPENERS:
            continue  # else-if chains and nested control statements are left alone
        semi = _simple_statement_end(tokens, b)
        if semi is None:
            continue
        stmt_src = text[tokens[b].start : tokens[semi].end]
        edits.append((tokens[b].start, tokens[semi].end, "{ " + stmt_src + " }"))
        guard = tokens[semi].end
    return _apply_edits(text, edits)


def _simple_statement_end(tokens: list[Token], b: int) -> int | None:
    depth = 0
    for j in range(b, len(tokens)):
        t = tokens[j]
        if t.kind != "op":
            continue
        if t.text in ("(", "["):
            depth += 1
        elif t.text in (")", "]"):
            if depth == 0:
                return None
            depth -= 1
        elif t.text in ("{", "}"):
            return None
        elif t.text == ";" and depth == 0:
            return j
    return None


# --- optimize_conditional ---------------------------------------------------

_COND_BLOCKERS_C = frozenset({"&&", "||", "!", "?", ":", ",", ";"}) | ASSIGN_OPS
_COND_BLOCKERS_PY = frozenset({",", ";"}) | ASSIGN_OPS
_COND_BLOCKER_WORDS = frozenset({"and", "or", "not", "in", "is", "if", "else", "lambda"})


def optimize_conditional(text: str, language: str) -> str:
    """Invert the comparison of a simple if-condition: ``a > b`` to ``!(a <= b)``.

    Requires a totally ordered comparison (no NaN operands). Applies only
    when the condition holds exactly one comparison and no logical glue.
    """
    tokens = tokenize(text, language)
    edits = []
    if language == "python":
        keywords = ("if", "elif")
    else:
        keywords = ("if",)
    for i, tok in enumerate(tokens):
        if tok.kind != "ident" or tok.text not in keywords:
            continue
        if language == "python":
            region = _py_condition_region(tokens, i)
        else:
            op = next_code(tokens, i)
            if op is None or tokens[op].text != "(":
                continue
            close = match_bracket(tokens, op)
            if close is None:
                continue
            region = (op + 1, close)
        if region is None:
            continue
        lo, hi = region
        edit = _invert_comparison(text, tokens, lo, hi, language)
        if edit is not None:
            edits.append(edit)
    return _apply_edits(text, edits)


def _py_condition_region(tokens: list[Token], i: int) -> tuple[int, int] | None:
    depth = 0
    for j in range(i + 1, len(tokens)):
        t = tokens[j]
        if t.kind != "op":
            continue
        if t.text in "([{":
            depth += 1
        elif t.text in ")]}":
            depth -= 1
        elif t.text == ":" and depth == 0:
            return (i + 1, j)
    return None


def _invert_comparison(text, tokens, lo, hi, language) -> tuple[int, int, str] | None:
    blockers = _COND_BLOCKERS_PY if language == "python" else _COND_BLOCKERS_C
    cmp_idx = None
    depth = 0
    first = last = None
    for j in range(lo, hi):
        t = tokens[j]
        if t.kind not in CODE_KINDS:
            continue
        if first is None:
            first = j
        last = j
        if t.kind == "op":
            if t.text in "([{":
                depth += 1
            elif t.text in ")]}":
                depth -= 1
            elif depth == 0:
                if t.text in blockers:
                    return None
                if t.text in _CMP_OPS:
                    if cmp_idx is not None:
                        return None  # chained comparison
                    cmp_idx = j
        elif t.kind == "ident" and depth == 0 and t.text in _COND_BLOCKER_WORDS:
            return None
    if cmp_idx is None or first is None or cmp_idx in (first, last):
        return None
    a_src = text[tokens[first].start : tokens[cmp_idx - 1].end].strip()
    b_src = text[tokens[cmp_idx + 1].start : tokens[last].end].strip()
    if not a_src or not b_src:
        return None
    inv = _INVERSE_CMP[tokens[cmp_idx].text]
    neg = "not " if language == "python" else "!"
    new = f"{neg}({a_src} {inv} {b_src})"
    return (tokens[first].start, tokens[last].end, new)


# --- reorder_decl -----------------------------------------------------------

def reorder_decl(text: str, language: str) -> str:
    """Reverse runs of adjacent declarations with no interdependencies."""
    if language == "python":
        return text
    tokens = tokenize(text, language)
    ctx = _brace_context(tokens)
    stmts = _statements(tokens)
    decls = [s for s in stmts if _is_independent_decl(tokens, *s)]
    edits = []
    run: list[tuple[int, int]] = []

    def flush() -> None:
        if len(run) >= 2:
            spans = [(tokens[lo].start, tokens[hi].end) for lo, hi in run]
            texts = [text[s:e] for s, e in spans]
            gaps = [text[spans[k][1] : spans[k + 1][0]] for k in range(len(spans) - 1)]
            rebuilt = texts[-1]
            for k in range(len(spans) - 2, -1, -1):
                rebuilt += gaps[k] + texts[k]
            edits.append((spans[0][0], spans[-1][1], rebuilt))
        run.clear()

    for s in decls:
        if not _is_body_brace(tokens, ctx[s[0]]):
            flush()
            continue
        if run:
            prev_lo, prev_hi = run[-1]
            adjacent = (
                ctx[s[0]] == ctx[prev_lo]
                and text[tokens[prev_hi].end : tokens[s[0]].start].strip() == ""
            )
            if not adjacent:
                flush()
        run.append(s)
    flush()
    return _apply_edits(text, edits)


def _is_independent_decl(tokens: list[Token], lo: int, hi: int) -> bool:
    code = [tokens[j] for j in range(lo, hi) if tokens[j].kind in CODE_KINDS]
    eq_pos = None
    for k, t in enumerate(code):
        if t.kind == "op" and t.text == "=":
            eq_pos = k
            break
        if t.kind == "op" and t.text not in ("*", "&"):
            return False
        if t.kind == "ident" and t.text in CONTROL_KEYWORDS:
            return False
    head = code if eq_pos is None else code[:eq_pos]
    idents = [t for t in head if t.kind == "ident"]
    if len(idents) < 2 or head[-1].kind != "ident":
        return False  # need at least a type word and a name
    if eq_pos is not None:
        init = code[eq_pos + 1 :]
        if not init:
            return False
        for t in init:
            if t.kind == "ident":
                return False  # initializer must not read other names
            if t.kind == "op" and t.text not in ("+", "-", "*", "/"):
                return False
    return True


# --- swap_params ------------------------------------------------------------

def swap_params(text: str, language: str) -> str:
    """Swap the two parameters of the snippet's function, and both arguments
    at every call, when every site is simple enough to reorder safely."""
    fn = function_name(text, language)
    if not fn:
        return text
    tokens = tokenize(text, language)
    sites = []
    saw_def = False
    for i, tok in enumerate(tokens):
        if tok.kind != "ident" or tok.text != fn:
            continue
        op = next_code(tokens, i)
        if op is None or tokens[op].text != "(":
            continue
        close = match_bracket(tokens, op)
        if close is None:
            return text
        after = next_code(tokens, close)
        after_text = tokens[after].text if after is not None else ""
        is_def = after_text in ("{", ":", "->")
        saw_def = saw_def or is_def
        segs = split_on(tokens, op + 1, close, ",")
        if len(segs) != 2:
            return text
        for lo, hi in segs:
            code = [tokens[j] for j in range(lo, hi) if tokens[j].kind in CODE_KINDS]
            if not code:
                return text
            for t in code:
                if t.kind == "op" and (t.text in ASSIGN_OPS or t.text in ("<", ">", "++", "--", "{")):
                    return text
                if not is_def and t.kind == "op" and t.text == "(":
                    return text  # reordering nested calls would reorder effects
        sites.append(segs)
    if not sites or not saw_def:
        return text  # swapping calls of a function defined elsewhere breaks them
    edits = []
    for (lo1, hi1), (lo2, hi2) in sites:
        a = span_text(text, tokens, lo1, hi1).strip()
        b = span_text(text, tokens, lo2, hi2).strip()
        edits.append((tokens[lo1].start, tokens[hi2 - 1].end, f"{b}, {a}"))
    return _apply_edits(text, edits)


# --- format_spacing ---------------------------------------------------------

def format_spacing(text: str, language: str) -> str:
    """Exactly one space on each side of every plain '=' (same line only)."""
    tokens = tokenize(text, language)
    return _space_ops(text, tokens, lambda i, t: t.text == "=")


def _space_ops(text: str, tokens: list[Token], want) -> str:
    edits = []
    for i, t in enumerate(tokens):
        if t.kind != "op" or not want(i, t):
            continue
        left = t.start
        while left > 0 and text[left - 1] in " \t":
            left -= 1
        right = t.end
        while right < len(text) and text[right] in " \t":
            right += 1
        if left == 0 or text[left - 1] == "\n":
            continue  # operator starts the line: leave the indentation alone
        if right >= len(text) or text[right] == "\n":
            continue
        desired = f" {t.text} "
        if text[left:right] != desired:
            edits.append((left, right, desired))
    return _apply_edits(text, edits)


# --- reorder_cond -----------------------------------------------------------

_PURE_FORBIDDEN = frozenset(
    {"(", "[", ".", "->", "::", "++", "--", "/", "%", "*", "?", ":"}
) | ASSIGN_OPS


def reorder_cond(text: str, language: str) -> str:
    """Swap the operands of a two-term pure conjunction or disjunction."""
    tokens = tokenize(text, language)
    py = language == "python"
    heads = ("if", "elif", "while") if py else ("if", "while")
    edits = []
    for i, tok in enumerate(tokens):
        if tok.kind != "ident" or tok.text not in heads:
            continue
        if py:
            region = _py_condition_region(tokens, i)
        else:
            op = next_code(tokens, i)
            if op is None or tokens[op].text != "(":
                continue
            close = match_bracket(tokens, op)
            if close is None:
                continue
            region = (op + 1, close)
        if region is None:
            continue
        edit = _swap_bool_operands(text, tokens, *region, py)
        if edit is not None:
            edits.append(edit)
    return _apply_edits(text, edits)


def _swap_bool_operands(text, tokens, lo, hi, py) -> tuple[int, int, str] | None:
    logic_idx = None
    first = last = None
    for j in range(lo, hi):
        t = tokens[j]
        if t.kind == "string" or t.kind == "comment":
            return None
        if t.kind not in CODE_KINDS:
            continue
        if first is None:
            first = j
        last = j
        if t.kind == "op" and t.text in _PURE_FORBIDDEN:
            return None
        is_logic = (py and t.kind == "ident" and t.text in ("and", "or")) or (
            not py and t.kind == "op" and t.text in ("&&", "||")
        )
        if is_logic:
            if logic_idx is not None:
                return None
            logic_idx = j
        elif t.kind == "ident" and t.text in KEYWORDS and t.text not in ("not", "true", "false", "True", "False", "None", "null", "nullptr"):
            return None
    if logic_idx is None or first is None or logic_idx in (first, last):
        return None
    a = text[tokens[first].start : tokens[logic_idx - 1].end].strip()
    b = text[tokens[logic_idx + 1].start : tokens[last].end].strip()
    if not a or not b:
        return None
    op_text = tokens[logic_idx].text
    return (tokens[first].start, tokens[last].end, f"{b} {op_text} {a}")


# --- insert_blank_line ------------------------------------------------------

def insert_blank_line(text: str, language: str) -> str:
    lines = text.splitlines(keepends=True)
    for i, line in enumerate(lines):
        if line.strip():
            if not line.endswith("\n"):
                lines[i] = line + "\n"
            lines.insert(i + 1, "\n")
            return "".join(lines)
    return text


# --- adjust_op_space --------------------------------------------------------

_SPACED_OPS = frozenset({"+", "-", "*", "/", "%", "<", ">", "<=", ">=", "==", "!="})


def adjust_op_space(text: str, language: str) -> str:
    """Single spaces around binary arithmetic and comparison operators."""
    tokens = tokenize(text, language)

    def want(i: int, t: Token) -> bool:
        if t.text not in _SPACED_OPS:
            return False
        p = prev_code(tokens, i)
        if p is None:
            return False
        pt = tokens[p]
        if pt.kind == "ident":
            return pt.text not in KEYWORDS  # 'return -1' keeps its unary minus
        if pt.kind == "number" or pt.kind == "string":
            return True
        return pt.kind == "op" and pt.text in (")", "]")

    return _space_ops(text, tokens, want)


# --- inline_temp ------------------------------------------------------------

def inline_temp(text: str, language: str) -> str:
    """Collapse ``T tmp = expr; return tmp;`` into ``return expr;`` when the
    temporary is used nowhere else."""
    tokens = tokenize(text, language)
    if language == "python":
        return _inline_temp_py(text, tokens)
    counts: dict[str, int] = {}
    for t in tokens:
        if t.kind == "ident":
            counts[t.text] = counts.get(t.text, 0) + 1
    protected = interpolated_names(tokens)
    stmts = _statements(tokens)
    edits = []
    for k in range(len(stmts) - 1):
        (lo1, hi1), (lo2, hi2) = stmts[k], stmts[k + 1]
        if text[tokens[hi1].end : tokens[lo2].start].strip() != "":
            continue
        name_expr = _decl_assign_shape(tokens, lo1, hi1, require_type=True)
        if name_expr is None:
            continue
        name, expr_lo, expr_hi = name_expr
        code2 = [tokens[j] for j in range(lo2, hi2) if tokens[j].kind in CODE_KINDS]
        if len(code2) != 2 or code2[0].text != "return" or code2[1].text != name:
            continue
        if counts.get(name, 0) != 2 or name in protected:
            continue
        expr_src = text[tokens[expr_lo].start : tokens[expr_hi - 1].end].strip()
        edits.append((tokens[lo1].start, tokens[hi2].end, f"return {expr_src};"))
    return _apply_edits(text, edits)


def _decl_assign_shape(tokens, lo, hi, require_type: bool):
    """Match ``type... name = expr`` inside [lo, hi); returns (name, expr_lo, expr_hi)."""
    code_idx = [j for j in range(lo, hi) if tokens[j].kind in CODE_KINDS]
    eq = None
    for pos, j in enumerate(code_idx):
        t = tokens[j]
        if t.kind == "op" and t.text == "=":
            eq = pos
            break
        if t.kind == "op" and t.text not in ("*", "&"):
            return None
        if t.kind == "ident" and t.text in CONTROL_KEYWORDS:
            return None
    if eq is None or eq == len(code_idx) - 1:
        return None
    head = [tokens[j] for j in code_idx[:eq]]
    idents = [t for t in head if t.kind == "ident"]
    min_idents = 2 if require_type else 1
    if len(idents) < min_idents or head[-1].kind != "ident" or head[-1].text in KEYWORDS:
        return None
    name = head[-1].text
    expr_lo, expr_hi = code_idx[eq] + 1, hi
    for j in range(expr_lo, expr_hi):
        t = tokens[j]
        if t.kind == "op" and (t.text in ASSIGN_OPS or t.text == "{"):
            return None
    if not any(tokens[j].kind in CODE_KINDS for j in range(expr_lo, expr_hi)):
        return None
    return (name, expr_lo, expr_hi)


def _inline_temp_py(text: str, tokens: list[Token]) -> str:
    counts: dict[str, int] = {}
    for t in tokens:
        if t.kind == "ident":
            counts[t.text] = counts.get(t.text, 0) + 1
    protected = interpolated_names(tokens)
    lines = text.splitlines(keepends=True)
    starts = [0]
    for ln in lines:
        starts.append(starts[-1] + len(ln))
    by_line: list[list[Token]] = [[] for _ in lines]
    for t in tokens:
        if t.kind in CODE_KINDS:
            li = 0
            while li + 1 < len(starts) and starts[li + 1] <= t.start:
                li += 1
            if li < len(by_line):
                by_line[li].append(t)
    edits = []
    for i in range(len(lines) - 1):
        cur, nxt = by_line[i], by_line[i + 1]
        if len(cur) < 3 or len(nxt) != 2:
            continue
        if nxt[0].text != "return" or nxt[0].kind != "ident":
            continue
        if not (cur[0].kind == "ident" and cur[0].text not in KEYWORDS):
            continue
        if not (cur[1].kind == "op" and cur[1].text == "="):
            continue
        name = cur[0].text
        if nxt[1].text != name or counts.get(name, 0) != 2 or name in protected:
            continue
        indent_cur = lines[i][: len(lines[i]) - len(lines[i].lstrip(" \t"))]
        indent_nxt = lines[i + 1][: len(lines[i + 1]) - len(lines[i + 1].lstrip(" \t"))]
        if indent_cur != indent_nxt:
            continue
        if any(t.kind == "op" and (t.text in ASSIGN_OPS or t.text == ";") for t in cur[2:]):
            continue
        expr_src = text[cur[2].start : cur[-1].end].strip()
        newline = "\n" if lines[i + 1].endswith("\n") else ""
        edits.append((starts[i], starts[i + 2], f"{indent_cur}return {expr_src}{newline}"))
    return _apply_edits(text, edits)


# --- split_decl -------------------------------------------------------------

_TYPE_FORBIDDEN = CONTROL_KEYWORDS | frozenset(
    {"new", "delete", "typedef", "using", "import", "from", "throw", "assert"}
)


def split_decl(text: str, language: str) -> str:
    """Split ``int x = 0, y = 1;`` into one declaration per name."""
    if language == "python":
        return text
    tokens = tokenize(text, language)
    edits = []
    for lo, hi in _statements(tokens):
        segs = split_on(tokens, lo, hi, ",")
        if len(segs) < 2:
            continue
        first = _split_head(tokens, *segs[0])
        if first is None:
            continue
        type_hi, decl1_lo = first
        type_src = span_text(text, tokens, lo, type_hi).strip()
        if not type_src:
            continue
        ok = _valid_declarator(tokens, decl1_lo, segs[0][1]) and all(
            _valid_declarator(tokens, s_lo, s_hi) for s_lo, s_hi in segs[1:]
        )
        if not ok:
            continue
        pieces = [span_text(text, tokens, lo, segs[0][1]).strip()]
        for s_lo, s_hi in segs[1:]:
            pieces.append(type_src + " " + span_text(text, tokens, s_lo, s_hi).strip())
        edits.append((tokens[lo].start, tokens[hi].end, "; ".join(pieces) + ";"))
    return _apply_edits(text, edits)


def _split_head(tokens, lo, hi):
    """Locate the boundary between the type words and the first declarator."""
    code_idx = [j for j in range(lo, hi) if tokens[j].kind in CODE_KINDS]
    if not code_idx:
        return None
    eq = next(
        (j for j in code_idx if tokens[j].kind == "op" and tokens[j].text == "="), None
    )
    name = None
    if eq is not None:
        before = [j for j in code_idx if j < eq and tokens[j].kind == "ident"]
        name = before[-1] if before else None
    else:
        idents = [j for j in code_idx if tokens[j].kind == "ident"]
        name = idents[-1] if idents else None
    if name is None:
        return None
    decl_lo = name
    k = code_idx.index(name)
    while k > 0 and tokens[code_idx[k - 1]].kind == "op" and tokens[code_idx[k - 1]].text == "*":
        k -= 1
        decl_lo = code_idx[k]
    type_idx = code_idx[:k]
    if not type_idx:
        return None
    for j in type_idx:
        t = tokens[j]
        if t.kind != "ident" or t.text in _TYPE_FORBIDDEN:
            return None
    return (type_idx[-1] + 1, decl_lo)


def _valid_declarator(tokens, lo, hi) -> bool:
    code_idx = [j for j in range(lo, hi) if tokens[j].kind in CODE_KINDS]
    if not code_idx:
        return False
    k = 0
    while k < len(code_idx) and tokens[code_idx[k]].kind == "op" and tokens[code_idx[k]].text == "*":
        k += 1
    if k >= len(code_idx) or tokens[code_idx[k]].kind != "ident":
        return False
    if tokens[code_idx[k]].text in KEYWORDS:
        return False
    k += 1
    while k < len(code_idx) and tokens[code_idx[k]].kind == "op" and tokens[code_idx[k]].text == "[":
        # consume one bracket group
        depth = 0
        while k < len(code_idx):
            t = tokens[code_idx[k]]
            if t.kind == "op" and t.text == "[":
                depth += 1
            elif t.kind == "op" and t.text == "]":
                depth -= 1
                if depth == 0:
                    k += 1
                    break
            k += 1
        else:
            return False
    if k == len(code_idx):
        return True
    if not (tokens[code_idx[k]].kind == "op" and tokens[code_idx[k]].text == "="):
        return False
    init = code_idx[k + 1 :]
    if not init:
        return False
    for j in init:
        t = tokens[j]
        if t.kind == "op" and (t.text in ASSIGN_OPS or t.text == "{"):
            return False
    return True
