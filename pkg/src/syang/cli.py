"""Command-line front end: ``python -m syang <command> ...``.

Exit codes: 0 success, 1 property failure, 2 input error,
3 unsupported factorization. Results are cached under ``$SYANG_CACHE_DIR``
(default ``./.syang-cache``), keyed by the SHA-256 of the canonical job
manifest; ``--no-cache`` recomputes and cross-checks any cached copy.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from . import __version__
from .exactmath import q_from_str, q_to_str
from .glmn import NotRealizedError, build_irrep, vector_rep
from .serialize import (
    SchemaError,
    canonical_dumps,
    content_hash,
    element_from_json,
    element_to_json,
    factors_to_json,
    verdict_to_json,
    weight_from_json,
    weight_to_json,
    ymodule_from_json,
    ymodule_to_json,
)
from .superalgebra import GradingContext, straighten
from .verify import SUITES, suite_relations
from .weights import UNSUPPORTED, UnsupportedFactorization, check_finite_dim, evaluation_weight, factor_into_fundamentals
from .yangian_modules import (
    InducedData,
    evaluation_rep,
    induced_module_truncated,
    irreducible_quotient,
    maximal_space_dimension,
    maximal_vectors,
    shifted_tensor,
    verify_defining_relations,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3


class InputError(ValueError):
    pass


# -- argument helpers ------------------------------------------------------------


def _ctx(text: str | None) -> GradingContext | None:
    if text is None:
        return None
    try:
        m, n = (int(x) for x in text.split(","))
        return GradingContext(m, n)
    except ValueError as exc:
        raise InputError(f"--ctx expects M,N with M, N >= 1, got {text!r}") from exc


def _rationals(text: str | None) -> list[Fraction] | None:
    if text is None:
        return None
    try:
        return [q_from_str(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"expected comma-separated rationals, got {text!r}") from exc


def _load(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def _need_ctx(args) -> GradingContext:
    ctx = _ctx(args.ctx)
    if ctx is None:
        raise InputError("--ctx M,N is required")
    return ctx


# -- commands (each returns (outputs, exit_code)) ------------------------------------


def cmd_straighten(args, inputs):
    ctx, pairs = element_from_json(inputs["element"], _ctx(args.ctx))
    try:
        x = straighten(ctx, pairs) if pairs else straighten(ctx, [])
    except IndexError as exc:
        raise InputError(str(exc)) from exc
    return element_to_json(x), EXIT_OK


def _gl_module(ctx, args):
    if args.gl_weight is None:
        return vector_rep(ctx)
    mu = _rationals(args.gl_weight)
    try:
        return build_irrep(ctx, args.copies, mu, q_from_str(args.twist))
    except NotRealizedError as exc:
        raise InputError(str(exc)) from exc


def cmd_eval_rep(args, inputs):
    ctx = _need_ctx(args)
    W = evaluation_rep(_gl_module(ctx, args))
    return ymodule_to_json(W), EXIT_OK


def cmd_tensor(args, inputs):
    alphas = _rationals(args.alphas)
    if not alphas:
        raise InputError("--alphas is required")
    if alphas[0] != 0:
        raise InputError("the first entry of --alphas must be 0")
    if inputs["modules"]:
        factors = [ymodule_from_json(d) for d in inputs["modules"]]
        if len(factors) == 1:
            factors = factors * len(alphas)
    else:
        factors = [evaluation_rep(vector_rep(_need_ctx(args)))] * len(alphas)
    if len(factors) != len(alphas):
        raise InputError(f"{len(factors)} modules but {len(alphas)} shifts")
    W = shifted_tensor(factors, alphas)
    rep = verify_defining_relations(W, args.level_max or 4)
    out = ymodule_to_json(W)
    out["relations"] = {"passed": rep.passed, "checked": rep.checked, "counterexample": rep.counterexample}
    return out, EXIT_OK if rep.passed else EXIT_FAIL


def cmd_irrep(args, inputs):
    W = ymodule_from_json(inputs["module"])
    mv = maximal_vectors(W)
    if not mv:
        raise InputError("module has no maximal vector with rational weight")
    res = irreducible_quotient(W, mv[0])
    out = ymodule_to_json(res.module)
    out["quotient"] = {
        "cyclic_dim": res.cyclic_dim,
        "maximal_submodule_dim": res.maximal_submodule_dim,
        "maximal_space_dim": res.maximal_space_dim,
        "highest_weight": weight_to_json(mv[0].weight),
    }
    return out, EXIT_OK if res.maximal_space_dim == 1 else EXIT_FAIL


def cmd_hw(args, inputs):
    W = ymodule_from_json(inputs["module"])
    mv = maximal_vectors(W)
    return {
        "count": len(mv),
        "raising_kernel_dim": maximal_space_dimension(W),
        "maximal_vectors": [
            {"vector": [q_to_str(x) for x in h.vector], "weight": weight_to_json(h.weight)} for h in mv
        ],
    }, EXIT_OK


def _weight_input(args, inputs):
    if inputs.get("weight") is not None:
        return weight_from_json(inputs["weight"], _ctx(args.ctx))
    if args.mu is not None:
        return evaluation_weight(_need_ctx(args), _rationals(args.mu))
    raise InputError("give a weight file or --mu")


def cmd_check_fd(args, inputs):
    L = _weight_input(args, inputs)
    v = check_finite_dim(L)
    out = {"weight": weight_to_json(L), "verdict": verdict_to_json(v)}
    if v.status == UNSUPPORTED:
        return out, EXIT_UNSUPPORTED
    if v.finite:
        try:
            f, factors = factor_into_fundamentals(L, v.data)
            out["factorization"] = factors_to_json(f, factors)
        except UnsupportedFactorization as exc:
            out["factorization"] = {"status": UNSUPPORTED, "reason": str(exc)}
            return out, EXIT_UNSUPPORTED
    return out, EXIT_OK


def cmd_induced(args, inputs):
    L = _weight_input(args, inputs)
    if args.cutoff < 1:
        raise InputError("--cutoff must be >= 1")
    data = InducedData.one_dimensional(L.ctx, L)
    res = induced_module_truncated(L.ctx, data, args.cutoff)
    out = {
        "status": "stabilized" if res.stabilized else "experimental-unstabilized",
        "experimental": True,
        "cutoff": res.cutoff,
        "ambient_dim": res.ambient_dim,
        "quotient_dim": res.quotient_dim,
        "consistent": res.consistent,
        "stabilized": res.stabilized,
        "note": res.note,
        "highest_weight": weight_to_json(res.highest_weight) if res.highest_weight else None,
        "module": ymodule_to_json(res.module) if res.module else None,
    }
    return out, EXIT_OK


def cmd_verify(args, inputs):
    ctx = _need_ctx(args)
    suite = args.suite
    if suite == "relations" and inputs["modules"]:
        mods = [(f"module[{i}]", ymodule_from_json(d)) for i, d in enumerate(inputs["modules"])]
        rep = suite_relations(ctx, args.level_max or 4, mods)
    elif suite == "pbw":
        rep = SUITES[suite](ctx, seed=args.seed, level_max=args.level_max or 3)
    elif suite == "relations":
        rep = suite_relations(ctx, args.level_max or 4)
    elif suite == "hopf":
        rep = SUITES[suite](ctx)
    else:
        rep = SUITES[suite](ctx, seed=args.seed)
    return rep.to_json(), EXIT_OK if rep.passed else EXIT_FAIL


COMMANDS: dict[str, Callable] = {
    "straighten": cmd_straighten,
    "eval-rep": cmd_eval_rep,
    "tensor": cmd_tensor,
    "irrep": cmd_irrep,
    "hw": cmd_hw,
    "check-fd": cmd_check_fd,
    "induced": cmd_induced,
    "verify": cmd_verify,
}


# -- cache -------------------------------------------------------------------------


def cache_dir() -> Path:
    return Path(os.environ.get("SYANG_CACHE_DIR", "./.syang-cache"))


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _manifest(args, inputs) -> dict:
    flags = {k: v for k, v in sorted(vars(args).items()) if k not in {"out", "no_cache", "func", "files"}}
    return {"command": args.command, "ctx": args.ctx, "seed": getattr(args, "seed", None), "flags": flags, "inputs": inputs}


def run(args) -> tuple[dict, int]:
    """Execute one job with caching; returns ``(outputs, exit_code)``."""
    inputs = _gather_inputs(args)
    manifest = _manifest(args, inputs)
    key = content_hash(manifest)
    path = cache_dir() / f"{key}.json"
    if not args.no_cache and path.exists():
        try:
            record = json.loads(path.read_text())
            return record["outputs"], record["exit_code"]
        except (OSError, json.JSONDecodeError, KeyError):
            pass  # unreadable entry: recompute and overwrite
    start = time.perf_counter()
    outputs, code = COMMANDS[args.command](args, inputs)
    outputs = json.loads(canonical_dumps(outputs))
    record = {
        "manifest": manifest,
        "cache_key": key,
        "outputs": outputs,
        "exit_code": code,
        "timings_ms": round(1000 * (time.perf_counter() - start), 3),
        "kernel_version": __version__,
    }
    if args.no_cache and path.exists():
        try:
            cached = json.loads(path.read_text())
            if canonical_dumps(cached.get("outputs")) != canonical_dumps(outputs):
                print("warning: cached result differs from recomputation", file=sys.stderr)
                code = max(code, EXIT_FAIL)
        except (OSError, json.JSONDecodeError):
            pass
    _atomic_write(path, canonical_dumps(record))
    return outputs, code


def _gather_inputs(args) -> dict:
    files = list(getattr(args, "files", None) or [])
    if args.command == "straighten":
        if len(files) != 1:
            raise InputError("straighten takes exactly one element file")
        return {"element": _load(files[0])}
    if args.command in ("irrep", "hw"):
        if len(files) != 1:
            raise InputError(f"{args.command} takes exactly one module file")
        return {"module": _load(files[0])}
    if args.command in ("check-fd", "induced"):
        if len(files) > 1:
            raise InputError(f"{args.command} takes at most one weight file")
        return {"weight": _load(files[0]) if files else None}
    return {"modules": [_load(f) for f in files]}


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="syang", description="Exact computations in the super Yangian Y(gl(M|N)).")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, files_help=None, nargs="*", lead=None):
        sp.add_argument("--ctx", help="M,N")
        sp.add_argument("--out", help="write JSON here instead of stdout")
        sp.add_argument("--no-cache", action="store_true", help="recompute and cross-check the cache")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--level-max", type=int, default=None)
        if lead:
            sp.add_argument(lead[0], **lead[1])
        if files_help:
            sp.add_argument("files", nargs=nargs, help=files_help)
        return sp

    common(sub.add_parser("straighten", help="PBW normal form of an element"), "element JSON file", "+")
    ev = common(sub.add_parser("eval-rep", help="evaluation module of a gl(M|N) irrep"))
    ev.add_argument("--gl-weight", help="highest weight mu (default: the vector representation)")
    ev.add_argument("--copies", type=int, default=2, help="tensor power of V to cut the irrep from")
    ev.add_argument("--twist", default="0", help="one-dimensional twist C[c]")
    tn = common(sub.add_parser("tensor", help="shifted tensor product of modules"), "module JSON files")
    tn.add_argument("--alphas", help="comma-separated shifts, first entry 0")
    common(sub.add_parser("irrep", help="irreducible quotient at the top maximal vector"), "module JSON file", "+")
    common(sub.add_parser("hw", help="maximal vectors and highest weights"), "module JSON file", "+")
    fd = common(sub.add_parser("check-fd", help="finite-dimensionality verdict for a highest weight"), "weight JSON file")
    fd.add_argument("--mu", help="evaluation weight (-1)^[a] + mu_a/x instead of a file")
    ind = common(sub.add_parser("induced", help="truncated induced module on a one-dimensional V0"), "weight JSON file")
    ind.add_argument("--mu", help="evaluation weight instead of a file")
    ind.add_argument("--cutoff", type=int, default=3)
    common(
        sub.add_parser("verify", help="run a verification suite"),
        "module JSON files (relations suite)",
        lead=("suite", {"choices": sorted(SUITES)}),
    )
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # positional files placed after flags are left over by argparse
        if extra and hasattr(args, "files") and not any(x.startswith("-") for x in extra):
            args.files = list(args.files or []) + extra
        elif extra:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        outputs, code = run(args)
    except (InputError, SchemaError, ValueError, IndexError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = canonical_dumps(outputs) + "\n"
    if args.out:
        _atomic_write(Path(args.out), text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
