"""Token-stream scanning helpers shared by the transformation engine."""

from __future__ import annotations

import re

from ..lexer import CODE_KINDS, Token

OPEN_TO_CLOSE = {"(": ")", "{": "}", "[": "]"}
CLOSERS = {")", "(", "}", "{", "]", "["}

ASSIGN_OPS = frozenset(
    {"=", "+=", "-=", "*=", "/=", "%=", "//=", "**=", "&=", "|=", "^=", "<<=", ">>=", ":="}
)

CONTROL_KEYWORDS = frozenset(
    {"if", "else", "elif", "for", "while", "do", "switch", "case", "return",
     "break", "continue", "goto", "try", "catch", "throw", "raise", "yield"}
)


def code_indices(tokens: list[Token]) -> list[int]:
    return [i for i, t in enumerate(tokens) if t.kind in CODE_KINDS]


def next_code(tokens: list[Token], i: int) -> int | None:
    """Index of the first code token strictly after position ``i``."""
    for j in range(i + 1, len(tokens)):
        if tokens[j].kind in CODE_KINDS:
            return j
    return None


def prev_code(tokens: list[Token], i: int) -> int | None:
    for j in range(i - 1, -1, -1):
        if tokens[j].kind in CODE_KINDS:
            return j
    return None


def match_bracket(tokens: list[Token], open_idx: int) -> int | None:
    """Index of the token closing the bracket opened at ``open_idx``."""
    opener = tokens[open_idx].text
    closer = OPEN_TO_CLOSE[opener]
    depth = 0
    for j in range(open_idx, len(tokens)):
        t = tokens[j]
        if t.kind != "op":
            continue
        if t.text == opener:
            depth += 1
        elif t.text == closer:
            depth -= 1
            if depth == 0:
                return j
    return None


def split_on(tokens: list[Token], lo: int, hi: int, separator: str) -> list[tuple[int, int]]:
    """Split the half-open token range [lo, hi) on ``separator`` ops at depth 0.

    Returns (start, end) index ranges of each segment, separators excluded.
    """
    segments = []
    depth = 0
    seg_start = lo
    for j in range(lo, hi):
        t = tokens[j]
        if t.kind != "op":
            continue
        if t.text in "([{":
            depth += 1
        elif t.text in ")]}":
            depth -= 1
        elif depth == 0 and t.text == separator:
            segments.append((seg_start, j))
            seg_start = j + 1
    segments.append((seg_start, hi))
    return segments


def span_text(text: str, tokens: list[Token], lo: int, hi: int) -> str:
    """Source substring covering tokens [lo, hi), trimmed of outer whitespace."""
    if lo >= hi:
        return ""
    return text[tokens[lo].start : tokens[hi - 1].end]


def range_has(tokens: list[Token], lo: int, hi: int, texts: set[str] | frozenset[str]) -> bool:
    return any(tokens[j].kind in CODE_KINDS and tokens[j].text in texts for j in range(lo, hi))


def assigns_to(tokens: list[Token], lo: int, hi: int, name: str) -> bool:
    """True if ``name`` is directly followed by an assignment operator in the range."""
    for j in range(lo, hi):
        t = tokens[j]
        if t.kind == "ident" and t.text == name:
            k = next_code(tokens, j)
            if k is not None and k < hi and tokens[k].kind == "op" and tokens[k].text in ASSIGN_OPS:
                return True
    return False


def line_indent(line: str) -> str:
    return line[: len(line) - len(line.lstrip(" \t"))]


_WORD_RE = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")


def words_in(text: str) -> set[str]:
    return set(_WORD_RE.findall(text))
