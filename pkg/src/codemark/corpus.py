"""Snippet model, directory ingest, and JSONL persistence.

A snippet is one function-level source file. A candidate codebase is a
deduplicated, id-sorted collection of snippets that extraction searches for
the original of a watermarked function.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Iterator

LANGUAGES = ("c", "cpp", "java", "javascript", "python", "unknown")

_EXT_TO_LANG = {
    ".c": "c",
    ".h": "c",
    ".cpp": "cpp",
    ".cc": "cpp",
    ".cxx": "cpp",
    ".hpp": "cpp",
    ".java": "java",
    ".js": "javascript",
    ".mjs": "javascript",
    ".py": "python",
}


class CorpusError(Exception):
    """Unreadable path or malformed persisted codebase."""


def content_hash(text: str) -> str:
    """Stable 64-bit hash of the text, hex encoded."""
    return hashlib.blake2b(text.encode("utf-8"), digest_size=8).hexdigest()


def language_for_path(path: str | Path) -> str:
    return _EXT_TO_LANG.get(Path(path).suffix.lower(), "unknown")


@dataclass(frozen=True)
class CodeSnippet:
    id: str
    language: str
    text: str
    origin: str = "synthetic"
    content_hash: str = ""

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError(f"snippet {self.id!r} has empty text")
        expected = content_hash(self.text)
        if not self.content_hash:
            object.__setattr__(self, "content_hash", expected)
        elif self.content_hash != expected:
            raise ValueError(f"snippet {self.id!r} hash does not match its text")

    def with_text(self, text: str, id_suffix: str = "") -> "CodeSnippet":
        """Derived snippet with new text (hash recomputed)."""
        return replace(
            self,
            id=self.id + id_suffix,
            text=text,
            content_hash=content_hash(text),
        )


@dataclass
class CandidateCodebase:
    snippets: list[CodeSnippet] = field(default_factory=list)
    skipped_files: int = 0

    def __post_init__(self) -> None:
        self.snippets = sorted(self.snippets, key=lambda s: s.id)
        self._by_id = {s.id: s for s in self.snippets}
        if len(self._by_id) != len(self.snippets):
            seen: set[str] = set()
            dupes = sorted({s.id for s in self.snippets if s.id in seen or seen.add(s.id)})
            raise ValueError(f"duplicate snippet ids in codebase: {dupes[:3]}")

    def __iter__(self) -> Iterator[CodeSnippet]:
        return iter(self.snippets)

    def __len__(self) -> int:
        return len(self.snippets)

    def get(self, snippet_id: str) -> CodeSnippet | None:
        return self._by_id.get(snippet_id)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CandidateCodebase):
            return NotImplemented
        return self.snippets == other.snippets


@dataclass(frozen=True)
class WatermarkRecord:
    snippet_id: str
    bits: str  # string of '0'/'1'
    per_bit_rules: tuple[dict, ...]  # {bit, rule_id, applied}
    backend: str  # "mock" or "remote:<model>"
    created_at: str  # ISO-8601

    def __post_init__(self) -> None:
        if len(self.per_bit_rules) != len(self.bits):
            raise ValueError(
                f"record for {self.snippet_id!r}: {len(self.per_bit_rules)} rule "
                f"entries for {len(self.bits)} bits"
            )


def ingest_directory(path: str | Path, language_filter: Iterable[str] | None = None) -> CandidateCodebase:
    """Build a codebase from a directory tree, one snippet per file.

    Language is inferred from the extension; files whose language is not in
    ``language_filter`` (when given) are skipped. Duplicate contents (by
    hash) keep the first-seen file only. Undecodable files are skipped and
    counted. Deterministic: files are visited in sorted relative-path order.
    """
    root = Path(path)
    if not root.is_dir():
        raise CorpusError(f"not a readable directory: {root}")
    wanted = set(language_filter) if language_filter else None

    files = sorted(p for p in root.rglob("*") if p.is_file())
    snippets: list[CodeSnippet] = []
    seen_hashes: set[str] = set()
    skipped = 0
    for p in files:
        lang = language_for_path(p)
        if wanted is not None and lang not in wanted:
            continue
        try:
            text = p.read_text(encoding="utf-8")
        except (UnicodeDecodeError, OSError):
            skipped += 1
            continue
        if not text:
            skipped += 1
            continue
        h = content_hash(text)
        if h in seen_hashes:
            continue
        seen_hashes.add(h)
        rel = p.relative_to(root).as_posix()
        snippets.append(CodeSnippet(id=rel, language=lang, text=text, origin=str(p)))
    return CandidateCodebase(snippets, skipped_files=skipped)


def save_codebase(cb: CandidateCodebase, path: str | Path) -> None:
    """Write one JSON record per line: {id, language, text, origin, content_hash}."""
    payload_lines = []
    for s in cb:
        payload_lines.append(
            json.dumps(
                {
                    "id": s.id,
                    "language": s.language,
                    "text": s.text,
                    "origin": s.origin,
                    "content_hash": s.content_hash,
                },
                ensure_ascii=False,
            )
        )
    _atomic_write(Path(path), "".join(line + "\n" for line in payload_lines))


def load_codebase(path: str | Path) -> CandidateCodebase:
    p = Path(path)
    if not p.is_file():
        raise CorpusError(f"no such codebase file: {p}")
    snippets = []
    with p.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                rec = json.loads(line)
                snippets.append(
                    CodeSnippet(
                        id=rec["id"],
                        language=rec["language"],
                        text=rec["text"],
                        origin=rec.get("origin", "synthetic"),
                        content_hash=rec.get("content_hash", ""),
                    )
                )
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise CorpusError(f"line {lineno}: parse failure ({exc})") from exc
    return CandidateCodebase(snippets)


def save_records(records: Iterable[WatermarkRecord], path: str | Path) -> None:
    lines = []
    for r in records:
        lines.append(
            json.dumps(
                {
                    "snippet_id": r.snippet_id,
                    "bits": r.bits,
                    "per_bit_rules": list(r.per_bit_rules),
                    "backend": r.backend,
                    "created_at": r.created_at,
                },
                ensure_ascii=False,
            )
        )
    _atomic_write(Path(path), "".join(line + "\n" for line in lines))


def load_records(path: str | Path) -> list[WatermarkRecord]:
    p = Path(path)
    if not p.is_file():
        raise CorpusError(f"no such records file: {p}")
    out = []
    with p.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                rec = json.loads(line)
                out.append(
                    WatermarkRecord(
                        snippet_id=rec["snippet_id"],
                        bits=rec["bits"],
                        per_bit_rules=tuple(rec["per_bit_rules"]),
                        backend=rec["backend"],
                        created_at=rec["created_at"],
                    )
                )
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise CorpusError(f"line {lineno}: parse failure ({exc})") from exc
    return out


def _atomic_write(path: Path, data: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(data, encoding="utf-8")
    os.replace(tmp, path)
