"""Coefficient file formats.

Structured text objects with every float rendered at 17 significant
digits, which round-trips IEEE doubles exactly and keeps files diffable:

    { "b": [...], "d": [...] }         line recurrence pairs
    { "alpha": [[re, im], ...] }       circle coefficients
    { "v": [...] }                     LU pivot sequence

Perturbations travel as tagged objects, e.g.
{ "kind": "co_dilated", "k": 1, "lambda": 0.5 }.
"""

from __future__ import annotations

import json

from .errors import OrthoError
from .oprl import RealRecurrence
from .opuc import VerblunskySeq
from .perturb import (
    AntiAssociated,
    Associated,
    CoDilated,
    CoRecursive,
    KModification,
    Sieve,
)
from .szego import VSeq


def fmt(x: float) -> str:
    """One float at 17 significant digits (exact double round-trip)."""
    return format(float(x), ".17g")


def _num_list(xs) -> str:
    return "[" + ", ".join(fmt(x) for x in xs) + "]"


def _pair_list(zs) -> str:
    return "[" + ", ".join(f"[{fmt(z.real)}, {fmt(z.imag)}]" for z in zs) + "]"


def dumps_recurrence(rc: RealRecurrence) -> str:
    return '{"b": %s, "d": %s}\n' % (_num_list(rc.b), _num_list(rc.d))


def dumps_verblunsky(vs: VerblunskySeq) -> str:
    return '{"alpha": %s}\n' % _pair_list(vs.alpha)


def dumps_vseq(v: VSeq) -> str:
    return '{"v": %s}\n' % _num_list(v.v)


def dumps_coefficients(obj) -> str:
    if isinstance(obj, RealRecurrence):
        return dumps_recurrence(obj)
    if isinstance(obj, VerblunskySeq):
        return dumps_verblunsky(obj)
    if isinstance(obj, VSeq):
        return dumps_vseq(obj)
    raise TypeError(f"cannot serialize {type(obj)!r}")


def loads_coefficients(text: str):
    """Parse any of the three coefficient objects, detected by key."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise OrthoError(f"malformed coefficient file: {exc}") from exc
    if not isinstance(data, dict):
        raise OrthoError("coefficient file must hold a single object")
    if "alpha" in data:
        return VerblunskySeq(tuple(complex(re, im) for re, im in data["alpha"]))
    if "b" in data and "d" in data:
        return RealRecurrence(tuple(data["b"]), tuple(data["d"]))
    if "v" in data:
        return VSeq(tuple(data["v"]))
    raise OrthoError(f"unrecognized coefficient keys: {sorted(data)}")


def _complex_from_obj(value) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, list) and len(value) == 2:
        return complex(value[0], value[1])
    raise OrthoError(f"expected a number or [re, im] pair, got {value!r}")


def spec_from_obj(obj: dict):
    """One tagged perturbation object -> its dataclass."""
    kind = obj.get("kind")
    if kind == "co_dilated":
        return CoDilated(int(obj["k"]), float(obj["lambda"]))
    if kind == "co_recursive":
        return CoRecursive(int(obj["k"]), float(obj["tau"]))
    if kind == "k_modification":
        return KModification(int(obj["k"]), _complex_from_obj(obj["eta"]))
    if kind == "associated":
        return Associated(int(obj["k"]))
    if kind == "anti_associated":
        if "xi" in obj:
            return AntiAssociated(xi=tuple(_complex_from_obj(x) for x in obj["xi"]))
        return AntiAssociated(pre_b=tuple(float(x) for x in obj.get("pre_b", ())),
                              pre_d=tuple(float(x) for x in obj.get("pre_d", ())))
    if kind == "sieve":
        return Sieve(int(obj["ell"]))
    raise OrthoError(f"unknown perturbation kind: {kind!r}")


def spec_to_obj(spec) -> dict:
    if isinstance(spec, CoDilated):
        return {"kind": "co_dilated", "k": spec.k, "lambda": spec.lam}
    if isinstance(spec, CoRecursive):
        return {"kind": "co_recursive", "k": spec.k, "tau": spec.tau}
    if isinstance(spec, KModification):
        return {"kind": "k_modification", "k": spec.k,
                "eta": [spec.eta.real, spec.eta.imag]}
    if isinstance(spec, Associated):
        return {"kind": "associated", "k": spec.k}
    if isinstance(spec, AntiAssociated):
        if spec.xi:
            return {"kind": "anti_associated",
                    "xi": [[x.real, x.imag] for x in spec.xi]}
        return {"kind": "anti_associated",
                "pre_b": list(spec.pre_b), "pre_d": list(spec.pre_d)}
    if isinstance(spec, Sieve):
        return {"kind": "sieve", "ell": spec.ell}
    raise TypeError(f"cannot serialize {type(spec)!r}")


def specs_from_text(text: str) -> list:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise OrthoError(f"malformed perturbation file: {exc}") from exc
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise OrthoError("perturbation file must hold an object or a list")
    return [spec_from_obj(obj) for obj in data]
