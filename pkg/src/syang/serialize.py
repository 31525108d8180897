"""Canonical JSON encodings for every kernel object.

Rationals are strings ``"p/q"`` (``"p"`` when integral). Output of
:func:`canonical_dumps` is byte-stable: sorted keys, no whitespace variance.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any

from .exactmath import Polynomial, RatFun, RatFunMatrix, SparseMatrix, q_from_str, q_to_str
from .glmn import GlModule
from .superalgebra import AlgebraElement, GradingContext
from .superalgebra.algebra import expand_factors, group_factors
from .weights import DrinfeldData, FundamentalFactor, HighestWeight, Verdict
from .yangian_modules import YModule


class SchemaError(ValueError):
    """Payload does not match the expected shape."""


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def content_hash(obj: Any) -> str:
    return hashlib.sha256(canonical_dumps(obj).encode()).hexdigest()


def _need(d: dict, key: str):
    if not isinstance(d, dict) or key not in d:
        raise SchemaError(f"missing key {key!r}")
    return d[key]


def _q(x) -> Fraction:
    try:
        return q_from_str(x)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {x!r}") from exc


# -- scalars and polynomials ---------------------------------------------------


def poly_to_json(p: Polynomial) -> dict:
    return {"var": p.var, "coeffs": [q_to_str(c) for c in p.coeffs]}


def poly_from_json(d: dict) -> Polynomial:
    return Polynomial([_q(c) for c in _need(d, "coeffs")], d.get("var", "x"))


def ratfun_to_json(f: RatFun) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def ratfun_from_json(d: dict) -> RatFun:
    if isinstance(d, (str, int)):
        return RatFun(_q(d))
    return RatFun(poly_from_json(_need(d, "num")), poly_from_json(_need(d, "den")))


def sparse_to_json(m: SparseMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[i, j, q_to_str(v)] for (i, j), v in sorted(m.entries.items())],
    }


def sparse_from_json(d: dict) -> SparseMatrix:
    try:
        return SparseMatrix(int(d["rows"]), int(d["cols"]), {(int(i), int(j)): _q(v) for i, j, v in d["entries"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad sparse matrix: {exc}") from exc


def ratmatrix_to_json(m: RatFunMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[i, j, ratfun_to_json(f)] for (i, j), f in m.entries().items()],
    }


def ratmatrix_from_json(d: dict) -> RatFunMatrix:
    try:
        entries = {(int(i), int(j)): ratfun_from_json(f) for i, j, f in d["entries"]}
        return RatFunMatrix.from_entries(int(d["rows"]), int(d["cols"]), entries, "u")
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"bad rational matrix: {exc}") from exc


# -- algebra elements ----------------------------------------------------------


def ctx_from_json(d: dict) -> GradingContext:
    try:
        return GradingContext(int(d["M"]), int(d["N"]))
    except (KeyError, TypeError) as exc:
        raise SchemaError("bad ctx") from exc


def element_to_json(x: AlgebraElement) -> dict:
    terms = []
    for mono, c in sorted(x.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
        factors = [{"a": a, "b": b, "n": n, "k": k} for a, b, n, k in group_factors(mono)]
        terms.append({"coeff": q_to_str(c), "monomial": factors})
    return {"ctx": x.ctx.as_dict(), "terms": terms}


def element_from_json(d: dict, ctx: GradingContext | None = None):
    """Returns ``(ctx, [(coeff, word), ...])``; the words need not be ordered."""
    ctx = ctx or ctx_from_json(_need(d, "ctx"))
    out = []
    for t in _need(d, "terms"):
        try:
            word = expand_factors((f["a"], f["b"], f["n"], f.get("k", 1)) for f in t["monomial"])
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"bad monomial factor: {exc}") from exc
        out.append((_q(t.get("coeff", "1")), word))
    return ctx, out


# -- modules -------------------------------------------------------------------


def _pair_key(a: int, b: int) -> str:
    return f"{a},{b}"


def _parse_pair(key: str) -> tuple[int, int]:
    try:
        a, b = key.split(",")
        return int(a), int(b)
    except ValueError as exc:
        raise SchemaError(f"bad pair key {key!r}") from exc


def glmodule_to_json(W: GlModule) -> dict:
    try:
        weights = [[q_to_str(x) for x in w] for w in W.weights]
    except ValueError:
        weights = None
    return {
        "ctx": W.ctx.as_dict(),
        "dim": W.dim,
        "parity": list(W.parity),
        "weights": weights,
        "label": W.label,
        "action": {_pair_key(a, b): sparse_to_json(m) for (a, b), m in sorted(W.action.items())},
    }


def glmodule_from_json(d: dict) -> GlModule:
    ctx = ctx_from_json(_need(d, "ctx"))
    action = {_parse_pair(k): sparse_from_json(v) for k, v in _need(d, "action").items()}
    return GlModule(ctx, tuple(_need(d, "parity")), action, d.get("label", ""))


def ymodule_to_json(W: YModule) -> dict:
    prov = dict(W.provenance)
    return {
        "ctx": W.ctx.as_dict(),
        "dim": W.dim,
        "parity": list(W.parity),
        "action": {_pair_key(a, b): ratmatrix_to_json(m) for (a, b), m in sorted(W.action.items())},
        "provenance": prov,
        "alphas": prov.get("alphas", []),
    }


def ymodule_from_json(d: dict) -> YModule:
    ctx = ctx_from_json(_need(d, "ctx"))
    parity = tuple(int(p) for p in _need(d, "parity"))
    action = {_parse_pair(k): ratmatrix_from_json(v) for k, v in _need(d, "action").items()}
    for key, m in action.items():
        if m.shape != (len(parity), len(parity)):
            raise SchemaError(f"action {key} has shape {m.shape}")
    try:
        return YModule(ctx, parity, action, d.get("provenance", {}))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


# -- weights -------------------------------------------------------------------


def weight_to_json(L: HighestWeight) -> dict:
    return {"ctx": L.ctx.as_dict(), "components": [ratfun_to_json(c) for c in L.components]}


def weight_from_json(d: dict, ctx: GradingContext | None = None) -> HighestWeight:
    ctx = ctx or ctx_from_json(_need(d, "ctx"))
    comps = []
    for c in _need(d, "components"):
        f = ratfun_from_json(c)
        comps.append(RatFun(Polynomial(f.num.coeffs, "x"), Polynomial(f.den.coeffs, "x")))
    try:
        return HighestWeight(ctx, tuple(comps))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def drinfeld_to_json(D: DrinfeldData) -> dict:
    out = {
        "P": {str(a): poly_to_json(p) for a, p in sorted(D.P.items())},
        "QtildeM": poly_to_json(D.Qtilde_M),
        "QM": poly_to_json(D.Q_M),
    }
    if D.r1 is not None:
        out["r1"] = [q_to_str(r) for r in D.r1]
        out["r2"] = [q_to_str(r) for r in D.r2]
    return out


def verdict_to_json(v: Verdict) -> dict:
    out = {"status": v.status, "witness": _jsonable(v.witness)}
    if v.data is not None:
        out["drinfeld"] = drinfeld_to_json(v.data)
    return out


def factors_to_json(f: RatFun, factors: list[FundamentalFactor]) -> dict:
    return {
        "twist": ratfun_to_json(f),
        "factors": [{"t": x.t, "i": x.i, "weight": weight_to_json(x.weight)} for x in factors],
    }


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return q_to_str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return obj
