"""Command-line front end.

Exit codes: 0 success, 1 operational failure, 2 usage error. Machine-readable
results go to the output files; a short human summary goes to stdout and
diagnostics to stderr. Mock-backend runs with a fixed seed are
byte-reproducible.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import attacks, evaluator, extractor, rules
from .corpus import (
    CodeSnippet,
    CorpusError,
    ingest_directory,
    language_for_path,
    load_codebase,
    load_records,
    save_codebase,
    save_records,
)
from .embedder import WatermarkBits, embed_batch
from .errors import CodemarkError
from .extractor import DecodingPolicy
from .features import DEFAULT_WEIGHTS_FILE, SimilarityWeights, grid_search_weights
from .gateway import DEFAULT_API_KEY_ENV, Backend, ProviderConfig

_SKIP_EXTS = {".json", ".jsonl"}  # sidecar outputs, never treated as snippets


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        return 2
    try:
        args.func(args, parser)
        return 0
    except (CodemarkError, CorpusError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="codemark", description=__doc__)
    p.add_argument("--config", help="JSON config file; flags override its values")
    sub = p.add_subparsers(dest="command")

    sp = sub.add_parser("ingest", help="build a codebase file from a directory of functions")
    sp.add_argument("directory")
    sp.add_argument("-o", "--output", required=True)
    sp.add_argument("--lang", action="append", help="keep only these languages")
    sp.set_defaults(func=_cmd_ingest)

    sp = sub.add_parser("embed", help="watermark every snippet of a codebase")
    sp.add_argument("-c", "--codebase", required=True)
    sp.add_argument("--bits", help="fixed bitstring for every snippet")
    sp.add_argument("--seed", type=int, help="seed for per-snippet random bits")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--backend", choices=["mock", "remote"], default=None)
    sp.add_argument("-o", "--output", required=True, help="output directory")
    sp.set_defaults(func=_cmd_embed)

    sp = sub.add_parser("extract", help="recover watermarks by comparing against a codebase")
    sp.add_argument("-c", "--codebase", required=True)
    sp.add_argument("-i", "--input", required=True, help="watermarked snippet file or directory")
    sp.add_argument("--weights", help="similarity weights JSON")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--backend", choices=["mock", "remote"], default=None)
    sp.add_argument("--margin", type=float, default=None)
    sp.add_argument("-o", "--output", required=True, help="results JSONL")
    sp.set_defaults(func=_cmd_extract)

    sp = sub.add_parser("attack", help="apply a removal attack to watermarked snippets")
    sp.add_argument("-i", "--input", required=True)
    sp.add_argument("--kind", required=True, choices=["rename", "transform", "paraphrase"])
    sp.add_argument("--p", type=float, help="fraction of variables to rename")
    sp.add_argument("--k", type=int, help="number of random transformations")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--backend", choices=["mock", "remote"], default=None)
    sp.add_argument("-o", "--output", required=True, help="output directory")
    sp.set_defaults(func=_cmd_attack)

    sp = sub.add_parser("eval", help="score extraction results against embedding records")
    sp.add_argument("--records", required=True)
    sp.add_argument("--results", required=True)
    sp.add_argument("-c", "--codebase", help="originals, enables similarity column")
    sp.add_argument("--final", help="directory of watermarked/attacked snippets")
    sp.add_argument("--tests", help="JSON file of per-language test command templates")
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("-o", "--output", required=True, help="report JSON")
    sp.set_defaults(func=_cmd_eval)

    sp = sub.add_parser("pipeline", help="embed, optionally attack, extract, and score")
    sp.add_argument("-c", "--codebase", required=True)
    sp.add_argument("--attack", choices=["rename", "transform", "paraphrase"])
    sp.add_argument("--p", type=float)
    sp.add_argument("--k", type=int)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--backend", choices=["mock", "remote"], default=None)
    sp.add_argument("--weights", help="similarity weights JSON")
    sp.add_argument("--tests", help="JSON file of per-language test command templates")
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("-o", "--output", required=True, help="report JSON")
    sp.set_defaults(func=_cmd_pipeline)

    sp = sub.add_parser("tune-weights", help="grid-search similarity weights on a dev set")
    sp.add_argument("-c", "--codebase", required=True)
    sp.add_argument("--dev", required=True, help="JSONL of {text, language, true_id}")
    sp.add_argument("-o", "--output", required=True)
    sp.set_defaults(func=_cmd_tune)

    sp = sub.add_parser("rules", help="rule catalog utilities")
    sp.add_argument("action", choices=["export"])
    sp.add_argument("-o", "--output", help="write JSON here instead of stdout")
    sp.set_defaults(func=_cmd_rules)

    return p


# --- config handling

_DEFAULTS = {
    "backend": "mock",
    "n": 4,
    "seed": 42,
    "margin": 0.0,
    "jobs": 1,
    "endpoint_url": "",
    "model": "",
    "api_key_env": DEFAULT_API_KEY_ENV,
    "temperature": 0.0,
    "timeout": 60.0,
    "max_retries": 3,
    "requests_per_minute": 60,
    "test_commands": {},
    "weights": None,
}


def _load_config(args) -> dict:
    cfg = dict(_DEFAULTS)
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            cfg.update(json.load(fh))
    for key in ("backend", "n", "seed", "margin", "jobs"):
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    return cfg


def _backend_from(cfg: dict, parser) -> Backend:
    if cfg["backend"] == "mock":
        return Backend(kind="mock", test_commands=dict(cfg.get("test_commands") or {}))
    if not cfg["endpoint_url"] or not cfg["model"]:
        parser.error("remote backend needs endpoint_url and model in --config")
    provider = ProviderConfig(
        endpoint_url=cfg["endpoint_url"],
        model_name=cfg["model"],
        api_key_env=cfg.get("api_key_env", DEFAULT_API_KEY_ENV),
        temperature=float(cfg.get("temperature", 0.0)),
        timeout=float(cfg.get("timeout", 60.0)),
        max_retries=int(cfg.get("max_retries", 3)),
        requests_per_minute=int(cfg.get("requests_per_minute", 60)),
    )
    return Backend(kind="remote", provider=provider, test_commands=dict(cfg.get("test_commands") or {}))


def _weights_from(cfg: dict, path_arg: str | None) -> SimilarityWeights:
    path = path_arg or cfg.get("weights")
    if path and isinstance(path, str):
        return SimilarityWeights.load(path)
    if isinstance(path, dict):
        return SimilarityWeights(path["alpha"], path["beta"], path["gamma"], path["delta"])
    if Path(DEFAULT_WEIGHTS_FILE).is_file():
        return SimilarityWeights.load(DEFAULT_WEIGHTS_FILE)
    return SimilarityWeights()


def _atomic_write_text(path: Path, data: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(data, encoding="utf-8")
    os.replace(tmp, path)


def _read_snippets(input_path: str) -> list[CodeSnippet]:
    p = Path(input_path)
    if p.is_dir():
        out = []
        for f in sorted(p.rglob("*")):
            if not f.is_file() or f.suffix.lower() in _SKIP_EXTS:
                continue
            text = f.read_text(encoding="utf-8")
            out.append(
                CodeSnippet(
                    id=f.relative_to(p).as_posix(),
                    language=language_for_path(f),
                    text=text,
                    origin=str(f),
                )
            )
        if not out:
            raise CorpusError(f"no snippet files under {p}")
        return out
    if not p.is_file():
        raise CorpusError(f"no such file or directory: {p}")
    return [
        CodeSnippet(
            id=p.name, language=language_for_path(p), text=p.read_text(encoding="utf-8"), origin=str(p)
        )
    ]


def _write_snippet_files(snippets, outdir: Path) -> None:
    for s in snippets:
        _atomic_write_text(outdir / s.id, s.text)


# --- subcommands

def _cmd_ingest(args, parser) -> None:
    cb = ingest_directory(args.directory, language_filter=args.lang)
    save_codebase(cb, args.output)
    print(f"ingested {len(cb)} snippets -> {args.output}")
    if cb.skipped_files:
        print(f"skipped {cb.skipped_files} unreadable/empty files", file=sys.stderr)


def _cmd_embed(args, parser) -> None:
    cfg = _load_config(args)
    backend = _backend_from(cfg, parser)
    cb = load_codebase(args.codebase)
    n = int(cfg["n"])
    if args.bits is not None:
        if len(args.bits) != n:
            parser.error(f"--bits has length {len(args.bits)}, expected n={n}")
        try:
            fixed = WatermarkBits.from_string(args.bits)
        except ValueError as exc:
            parser.error(str(exc))
        bit_source = [fixed] * len(cb)
    else:
        bit_source = int(cfg["seed"])
    outcomes = embed_batch(backend, cb, bit_source, n=n)
    outdir = Path(args.output)
    good = [o for o in outcomes if o.success]
    _write_snippet_files([o.watermarked for o in good], outdir)
    save_records([o.record for o in good], outdir / "records.jsonl")
    print(f"embedded {len(good)}/{len(outcomes)} snippets -> {outdir}")
    for o in outcomes:
        if not o.success:
            failed_bits = [s.bit for s in o.per_bit_status if s.status == "failed"]
            print(f"failed: {o.snippet_id} (bits {failed_bits})", file=sys.stderr)


def _cmd_extract(args, parser) -> None:
    cfg = _load_config(args)
    backend = _backend_from(cfg, parser)
    cb = load_codebase(args.codebase)
    if len(cb) == 0:
        raise CodemarkError("candidate codebase is empty")
    weights = _weights_from(cfg, args.weights)
    policy = DecodingPolicy(margin=float(cfg["margin"]))
    snippets = _read_snippets(args.input)
    lines = []
    for s in snippets:
        res = extractor.extract(backend, s, cb, weights, n=int(cfg["n"]), policy=policy)
        payload = {"snippet_id": s.id, **res.to_dict()}
        lines.append(json.dumps(payload, ensure_ascii=False))
    _atomic_write_text(Path(args.output), "".join(line + "\n" for line in lines))
    print(f"extracted {len(snippets)} watermarks -> {args.output}")


def _cmd_attack(args, parser) -> None:
    cfg = _load_config(args)
    if args.kind == "rename" and args.p is None:
        parser.error("--kind rename needs --p")
    if args.kind == "transform" and args.k is None:
        parser.error("--kind transform needs --k")
    backend = _backend_from(cfg, parser) if args.kind == "paraphrase" else None
    seed = int(cfg["seed"] if args.seed is None else args.seed)
    spec = attacks.AttackSpec(kind=args.kind, p=args.p, k=args.k, seed=seed)
    snippets = _read_snippets(args.input)
    outdir = Path(args.output)
    meta_lines = []
    attacked = []
    for s in snippets:
        result = attacks.run_attack(spec, s, backend)
        attacked.append(result.snippet)
        meta_lines.append(json.dumps({"snippet_id": s.id, **result.metadata}, ensure_ascii=False))
    _write_snippet_files(attacked, outdir)
    _atomic_write_text(outdir / "attack-metadata.jsonl", "".join(line + "\n" for line in meta_lines))
    print(f"attacked {len(attacked)} snippets ({args.kind}) -> {outdir}")


def _cmd_eval(args, parser) -> None:
    cfg = _load_config(args)
    records = {r.snippet_id: r for r in load_records(args.records)}
    results = _load_results(args.results)
    originals = load_codebase(args.codebase) if args.codebase else None
    finals = (
        {s.id: s for s in _read_snippets(args.final)} if args.final else {}
    )
    artifacts = []
    for sid, rec in sorted(records.items()):
        artifacts.append(
            evaluator.RunArtifact(
                snippet_id=sid,
                true_bits=rec.bits,
                extracted_bits=results.get(sid),
                original=originals.get(sid) if originals else None,
                final=finals.get(sid),
            )
        )
    test_commands = _load_tests(args.tests, cfg)
    rep = evaluator.report(artifacts, test_commands=test_commands, jobs=int(cfg["jobs"]))
    _atomic_write_text(Path(args.output), rep.to_json() + "\n")
    print(rep.to_table())


def _load_results(path: str) -> dict[str, str]:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                rec = json.loads(line)
                out[rec["snippet_id"]] = rec["bits"]
    return out


def _load_tests(path: str | None, cfg: dict) -> dict[str, str] | None:
    if path:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    return cfg.get("test_commands") or None


def _cmd_pipeline(args, parser) -> None:
    cfg = _load_config(args)
    backend = _backend_from(cfg, parser)
    cb = load_codebase(args.codebase)
    if len(cb) == 0:
        raise CodemarkError("candidate codebase is empty")
    weights = _weights_from(cfg, args.weights)
    n = int(cfg["n"])
    seed = int(cfg["seed"] if args.seed is None else args.seed)
    policy = DecodingPolicy(margin=float(cfg["margin"]))

    outcomes = embed_batch(backend, cb, seed, n=n)
    spec = None
    if args.attack:
        if args.attack == "rename" and args.p is None:
            parser.error("--attack rename needs --p")
        if args.attack == "transform" and args.k is None:
            parser.error("--attack transform needs --k")
        spec = attacks.AttackSpec(kind=args.attack, p=args.p, k=args.k, seed=seed)

    artifacts = []
    for outcome in outcomes:
        original = cb.get(outcome.snippet_id)
        if not outcome.success:
            artifacts.append(
                evaluator.RunArtifact(outcome.snippet_id, str(outcome.bits), None, original, None, False)
            )
            continue
        final = outcome.watermarked
        if spec is not None:
            final = attacks.run_attack(spec, final, backend).snippet
        res = extractor.extract(backend, final, cb, weights, n=n, policy=policy)
        artifacts.append(
            evaluator.RunArtifact(
                outcome.snippet_id, str(outcome.bits), str(res.bits), original, final, True
            )
        )
    test_commands = _load_tests(args.tests, cfg)
    rep = evaluator.report(artifacts, test_commands=test_commands, jobs=int(cfg["jobs"]))
    _atomic_write_text(Path(args.output), rep.to_json() + "\n")
    attacked = f" after {args.attack} attack" if args.attack else ""
    print(f"pipeline over {len(cb)} snippets{attacked} (seed {seed}, n={n})")
    print(rep.to_table())


def _cmd_tune(args, parser) -> None:
    cb = load_codebase(args.codebase)
    pairs = []
    with open(args.dev, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            snippet = CodeSnippet(
                id=rec.get("id", f"dev-{len(pairs)}"),
                language=rec.get("language", "unknown"),
                text=rec["text"],
            )
            pairs.append((snippet, rec["true_id"]))
    weights = grid_search_weights(pairs, cb)
    weights.save(args.output)
    print(
        f"weights alpha={weights.alpha} beta={weights.beta} "
        f"gamma={weights.gamma} delta={weights.delta} -> {args.output}"
    )


def _cmd_rules(args, parser) -> None:
    payload = rules.export_catalog()
    if args.output:
        _atomic_write_text(Path(args.output), payload + "\n")
        print(f"wrote rule catalog -> {args.output}")
    else:
        print(payload)


if __name__ == "__main__":
    sys.exit(main())
