"""Retrieval features and similarity scoring.

Four features are extracted per snippet: the function name, the set of
variable identifiers, a fixed-vocabulary vector of structural token counts,
and the whitespace-stripped source text. Candidate originals are ranked by
a convex combination of four similarities over those features: normalized
edit similarity on names, Jaccard on variable sets, cosine on structure
vectors, and normalized edit similarity on the stripped text.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .lexer import CODE_KINDS, KEYWORDS, tokenize

# Fixed, ordered structural vocabulary. Keywords and punctuation only, so
# the counts are untouched by identifier renaming.
STRUCT_VOCAB = (
    "for", "while", "do", "if", "else", "switch", "case", "return",
    "break", "continue", "try", "catch", "def", "function",
    "{", "}", "(", ")", "[", "]", ";",
    "=", "==", "<", ">", "+", "-", "*", "/",
)
_STRUCT_INDEX = {tok: i for i, tok in enumerate(STRUCT_VOCAB)}

DEFAULT_WEIGHTS_FILE = "codemark-weights.json"


@dataclass(frozen=True)
class FeatureProfile:
    fn_name: str
    var_set: frozenset[str]
    struct_vec: tuple[int, ...]
    norm_text: str


@dataclass(frozen=True)
class SimilarityWeights:
    alpha: float = 0.25
    beta: float = 0.25
    gamma: float = 0.25
    delta: float = 0.25

    def __post_init__(self) -> None:
        for v in (self.alpha, self.beta, self.gamma, self.delta):
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"weight {v} outside [0, 1]")
        if abs(self.alpha + self.beta + self.gamma + self.delta - 1.0) > 1e-9:
            raise ValueError("weights must sum to 1")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def save(self, path: str | Path) -> None:
        payload = {
            "alpha": self.alpha, "beta": self.beta,
            "gamma": self.gamma, "delta": self.delta,
        }
        Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "SimilarityWeights":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(data["alpha"], data["beta"], data["gamma"], data["delta"])


def function_name(text: str, language: str = "unknown") -> str:
    """First identifier directly before a '(' at bracket depth zero.

    Keywords do not qualify, so ``if (x)`` never names a function. Returns
    "" when no such identifier exists.
    """
    toks = [t for t in tokenize(text, language) if t.kind in CODE_KINDS]
    depth = 0
    prev = None
    for t in toks:
        if t.kind == "op" and t.text in "([{":
            if t.text == "(" and depth == 0 and prev is not None:
                if prev.kind == "ident" and prev.text not in KEYWORDS:
                    return prev.text
            depth += 1
        elif t.kind == "op" and t.text in ")]}":
            depth -= 1
        prev = t
    return ""


def extract_profile(snippet) -> FeatureProfile:
    """Compute the four retrieval features of a snippet.

    Accepts anything with ``text`` and ``language`` attributes.
    """
    return _profile(snippet.text, snippet.language)


@functools.lru_cache(maxsize=4096)
def _profile(text: str, language: str) -> FeatureProfile:
    toks = tokenize(text, language)
    fn = function_name(text, language)
    var_set = {
        t.text
        for t in toks
        if t.kind == "ident" and t.text not in KEYWORDS and t.text != fn
    }
    counts = [0] * len(STRUCT_VOCAB)
    for t in toks:
        if t.kind in CODE_KINDS:
            idx = _STRUCT_INDEX.get(t.text)
            if idx is not None:
                counts[idx] += 1
    norm = "".join(text.split())
    return FeatureProfile(fn, frozenset(var_set), tuple(counts), norm)


def lev_dist(a: str, b: str) -> int:
    """Unit-cost character-level edit distance (insert/delete/substitute)."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    if len(a) < len(b):
        a, b = b, a  # iterate over the longer string, keep rows short
    bb = np.frombuffer(b.encode("utf-32-le"), dtype=np.uint32)
    prev = np.arange(len(b) + 1, dtype=np.int64)
    offsets = np.arange(1, len(b) + 1, dtype=np.int64)
    for i, ca in enumerate(a, start=1):
        cost = (bb != ord(ca)).astype(np.int64)
        cur = np.empty(len(b) + 1, dtype=np.int64)
        cur[0] = i
        # deletion and substitution have no in-row dependency
        cur[1:] = np.minimum(prev[1:] + 1, prev[:-1] + cost)
        # insertion is a running minimum: cur[j] = min_i<=j (cur[i] + j - i)
        np.minimum(cur[1:], offsets + np.minimum.accumulate(cur[:-1] - np.arange(len(b), dtype=np.int64)), out=cur[1:])
        prev = cur
    return int(prev[-1])


def _edit_sim(a: str, b: str) -> float:
    if not a and not b:
        return 1.0
    m = max(len(a), len(b))
    if m == 0:
        return 1.0
    return 1.0 - lev_dist(a, b) / m


def sim_name(p: FeatureProfile, q: FeatureProfile) -> float:
    """Edit similarity between function names; 1 if both empty, 0 if one is."""
    if not p.fn_name and not q.fn_name:
        return 1.0
    if not p.fn_name or not q.fn_name:
        return 0.0
    return _edit_sim(p.fn_name, q.fn_name)


def sim_vars(p: FeatureProfile, q: FeatureProfile) -> float:
    """Jaccard similarity of the variable-identifier sets."""
    if not p.var_set and not q.var_set:
        return 1.0
    union = p.var_set | q.var_set
    if not union:
        return 1.0
    return len(p.var_set & q.var_set) / len(union)


def sim_struct(p: FeatureProfile, q: FeatureProfile) -> float:
    """Cosine similarity of structural token-count vectors."""
    u = np.asarray(p.struct_vec, dtype=np.float64)
    v = np.asarray(q.struct_vec, dtype=np.float64)
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 and nv == 0.0:
        return 1.0
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return min(1.0, float(np.dot(u, v) / (nu * nv)))


def sim_sem(p: FeatureProfile, q: FeatureProfile) -> float:
    """Edit similarity between whitespace-stripped source texts."""
    return _edit_sim(p.norm_text, q.norm_text)


def all_sims(p: FeatureProfile, q: FeatureProfile) -> tuple[float, float, float, float]:
    return (sim_name(p, q), sim_vars(p, q), sim_struct(p, q), sim_sem(p, q))


def combined_score(p: FeatureProfile, q: FeatureProfile, w: SimilarityWeights) -> float:
    s = all_sims(p, q)
    return (
        w.alpha * s[0] + w.beta * s[1] + w.gamma * s[2] + w.delta * s[3]
    )


def weight_grid(step: int = 10) -> list[SimilarityWeights]:
    """All weight vectors on the simplex grid with denominator ``step``.

    For step=10 this is the 286-point grid {0, 0.1, ..., 1.0}^4, sum 1,
    enumerated in lexicographic order of (alpha, beta, gamma, delta).
    """
    grid = []
    for a, b, c in itertools.product(range(step + 1), repeat=3):
        d = step - a - b - c
        if d < 0:
            continue
        grid.append(SimilarityWeights(a / step, b / step, c / step, d / step))
    return grid


def grid_search_weights(dev_pairs, codebase, step: int = 10) -> SimilarityWeights:
    """Pick the weight vector maximizing top-1 retrieval accuracy.

    ``dev_pairs`` is a list of (snippet, true_original_id). Ties on accuracy
    are broken by the higher mean margin between the best and second-best
    score, then by lexicographically smallest weight vector. Deterministic.
    """
    pairs = list(dev_pairs)
    if not pairs:
        raise ValueError("dev set is empty")
    candidates = list(codebase)
    if not candidates:
        raise ValueError("codebase is empty")
    for _, true_id in pairs:
        if codebase.get(true_id) is None:
            raise ValueError(f"dev pair references unknown snippet id {true_id!r}")

    cand_profiles = [extract_profile(c) for c in candidates]
    true_idx = np.array(
        [next(i for i, c in enumerate(candidates) if c.id == true_id) for _, true_id in pairs]
    )
    # sims[p, d, f]: per dev-pair p, candidate d, feature f
    sims = np.empty((len(pairs), len(candidates), 4))
    for pi, (snippet, _) in enumerate(pairs):
        prof = extract_profile(snippet)
        for di, cprof in enumerate(cand_profiles):
            sims[pi, di, :] = all_sims(prof, cprof)

    grid = weight_grid(step)
    best: tuple[float, float] | None = None
    best_w = grid[0]
    for w in grid:
        scores = sims @ np.asarray(w.as_tuple())  # (pairs, candidates)
        # argmax with smallest-id tie-break: candidates are in id order
        top = np.argmax(scores, axis=1)
        acc = float(np.mean(top == true_idx))
        if len(candidates) > 1:
            part = np.partition(scores, -2, axis=1)
            margins = part[:, -1] - part[:, -2]
        else:
            margins = scores[:, 0] - 0.0
        margin = float(np.mean(margins))
        key = (acc, margin)
        if best is None or key > best:  # strictly better; first grid point wins ties
            best = key
            best_w = w
    return best_w
