"""Consistent identifier renaming shared by all naming rules.

An identifier is renamed at every occurrence outside literals and comments,
or not at all. Identifiers are skipped when renaming could change meaning
or break compilation:

  - reserved words of any supported language and a standard-library denylist
  - leading-underscore names (Python dunders and private conventions)
  - names with any member-access occurrence (after ``.``, ``->``, ``::``)
  - names referenced inside f-string or template-literal interpolations
  - renames whose target collides with an existing or already-assigned name
"""

from __future__ import annotations

import re
from typing import Callable

from ..lexer import KEYWORDS, RENAME_DENYLIST, Token, tokenize
from ._scan import prev_code, words_in

_IDENT_RE = re.compile(r"^[A-Za-z_$][A-Za-z0-9_$]*$")
_MEMBER_OPS = frozenset({".", "->", "::"})
_INTERP_RE = re.compile(r"\$?\{([^{}]*)\}")


def interpolated_names(tokens: list[Token]) -> set[str]:
    """Identifiers referenced inside f-string / template-literal holes."""
    names: set[str] = set()
    for t in tokens:
        if t.kind != "string":
            continue
        first_quote = min((p for p in (t.text.find(q) for q in "\"'`") if p >= 0), default=0)
        is_fstring = "f" in t.text[:first_quote].lower()
        is_template = t.text.startswith("`")
        if not (is_fstring or is_template):
            continue
        for m in _INTERP_RE.finditer(t.text):
            names |= words_in(m.group(1))
    return names


def renameable_names(tokens: list[Token]) -> list[str]:
    """Candidate identifiers in order of first occurrence."""
    member: set[str] = set()
    order: list[str] = []
    seen: set[str] = set()
    protected = interpolated_names(tokens)
    for i, t in enumerate(tokens):
        if t.kind != "ident":
            continue
        p = prev_code(tokens, i)
        if p is not None and tokens[p].kind == "op" and tokens[p].text in _MEMBER_OPS:
            member.add(t.text)
        if t.text in seen:
            continue
        seen.add(t.text)
        order.append(t.text)
    out = []
    for name in order:
        if name in KEYWORDS or name in RENAME_DENYLIST:
            continue
        if name.startswith("_") or name in member or name in protected:
            continue
        out.append(name)
    return out


def rename_by(text: str, language: str, target_of: Callable[[str], str | None]) -> str:
    """Rename every matching identifier via ``target_of``; returns new text.

    ``target_of`` maps a candidate name to its replacement, or None when the
    rule does not apply to that name. Collisions are dropped, first come
    first served, so the result is always a valid consistent renaming.
    """
    tokens = tokenize(text, language)
    existing = {t.text for t in tokens if t.kind == "ident"}
    mapping: dict[str, str] = {}
    taken: set[str] = set()
    for name in renameable_names(tokens):
        new = target_of(name)
        if new is None or new == name or not _IDENT_RE.match(new):
            continue
        if new in KEYWORDS or new in RENAME_DENYLIST:
            continue
        if new in existing or new in taken:
            continue
        mapping[name] = new
        taken.add(new)
    if not mapping:
        return text
    parts = []
    for t in tokens:
        if t.kind == "ident" and t.text in mapping:
            parts.append(mapping[t.text])
        else:
            parts.append(t.text)
    return "".join(parts)
