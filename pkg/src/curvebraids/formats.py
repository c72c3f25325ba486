"""Text and JSON forms of braids, bands, free words, presentations, branches and curves.

Text forms::

    B4: 1 2 -1 3                         braid word
    B4: (3^3) (3 -2 : 1) (2) (3 2 : -1)  band representation
    F4: 1 -2 3                           free word
    gens: 2; rel: x1 x2 -x1; rel: x2 x2  presentation
    m=4; w = t^6 + t^7 + (3/2 + 1/2 i) t^9

Every JSON object carries a ``"type"`` tag so that any command's output can be
fed to a command that consumes the same type.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .artin import FreeWord
from .braid import Band, BandRepresentation, BraidWord
from .errors import FormatError
from .knotgroup.abelian import AbelianInvariants
from .knotgroup.presentation import GroupPresentation
from .monodromy import PolyCurve
from .puiseux import BranchParam

__all__ = [
    "parse_braid",
    "format_braid",
    "parse_band",
    "format_band",
    "parse_brep",
    "format_brep",
    "parse_free_word",
    "format_free_word",
    "parse_presentation",
    "format_presentation",
    "parse_branch",
    "format_branch",
    "to_json",
    "from_json",
    "dumps",
    "loads",
    "parse_any",
]


def _ints(tokens, what):
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise FormatError(f"bad {what}: {exc}") from None


def _header(text, letter):
    m = re.fullmatch(rf"\s*{letter}\s*(\d+)\s*:(.*)", text, re.S)
    if not m:
        raise FormatError(f"expected '{letter}<n>: ...', got {text.strip()[:40]!r}")
    return int(m.group(1)), m.group(2)


# braids

def parse_braid(text: str) -> BraidWord:
    n, body = _header(text, "B")
    if "(" in body:
        raise FormatError("band notation found; use parse_brep")
    try:
        return BraidWord(n, _ints(body.split(), "braid letter"))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_braid(b: BraidWord) -> str:
    return str(b)


# bands

_BAND = re.compile(r"\(\s*(?:([-\d\s]*?)\s*:)?\s*(-?\d+)\s*(?:\^\s*(\d+))?\s*\)")


def _band_from_match(n, m) -> Band:
    conj = _ints(m.group(1).split(), "conjugator") if m.group(1) else []
    core = int(m.group(2))
    power = int(m.group(3)) if m.group(3) else 1
    if core == 0:
        raise FormatError("band core must be nonzero")
    try:
        return Band(n, tuple(conj), abs(core), 1 if core > 0 else -1, power)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def parse_band(text: str, strands: int) -> Band:
    m = _BAND.fullmatch(text.strip())
    if not m:
        raise FormatError(f"not a band: {text!r}")
    return _band_from_match(strands, m)


def format_band(b: Band) -> str:
    core = f"{b.sign * b.core}" + (f"^{b.power}" if b.power > 1 else "")
    if b.conjugator:
        return "(" + " ".join(map(str, b.conjugator)) + " : " + core + ")"
    return f"({core})"


def parse_brep(text: str) -> BandRepresentation:
    n, body = _header(text, "B")
    bands = []
    pos = 0
    for m in _BAND.finditer(body):
        if body[pos : m.start()].strip():
            raise FormatError(f"unexpected text {body[pos:m.start()].strip()!r}")
        bands.append(_band_from_match(n, m))
        pos = m.end()
    if body[pos:].strip():
        raise FormatError(f"unexpected text {body[pos:].strip()!r}")
    return BandRepresentation(n, tuple(bands))


def format_brep(r: BandRepresentation) -> str:
    return f"B{r.strands}: " + " ".join(format_band(b) for b in r.bands)


# free words

def parse_free_word(text: str) -> FreeWord:
    n, body = _header(text, "F")
    try:
        return FreeWord(n, _ints(body.split(), "free word letter"))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_free_word(w: FreeWord) -> str:
    return str(w)


# presentations

_LETTER = re.compile(r"(-?)x?(\d+)")


def parse_presentation(text: str) -> GroupPresentation:
    parts = [p.strip() for p in re.split(r"[;\n]", text) if p.strip()]
    if not parts or not parts[0].startswith("gens"):
        raise FormatError("presentation must start with 'gens: <g>'")
    try:
        gens = int(parts[0].split(":", 1)[1])
    except (IndexError, ValueError):
        raise FormatError(f"bad generator count in {parts[0]!r}") from None
    rels = []
    for part in parts[1:]:
        key, _, body = part.partition(":")
        if key.strip() != "rel":
            raise FormatError(f"expected 'rel: ...', got {part!r}")
        word = []
        for tok in body.split():
            m = _LETTER.fullmatch(tok)
            if not m:
                raise FormatError(f"bad relator letter {tok!r}")
            word.append(-int(m.group(2)) if m.group(1) else int(m.group(2)))
        rels.append(tuple(word))
    try:
        return GroupPresentation(gens, tuple(rels))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_presentation(p: GroupPresentation) -> str:
    return str(p)


# branches

_TERM = re.compile(r"(?:\(([^()]*)\)|(-?\d+(?:/\d+)?))?\s*\*?\s*t\s*\^\s*(\d+)")


def _parse_coefficient(text: str) -> tuple[Fraction, Fraction]:
    s = text.replace(" ", "")
    if not s:
        return Fraction(1), Fraction(0)
    re_s, im_s = s, "0"
    if s.endswith("i"):
        body = s[:-1].rstrip("*")
        cut = max(body.rfind("+"), body.rfind("-"))
        re_s, im_s = (body[:cut], body[cut:]) if cut > 0 else ("0", body)
        if im_s in ("", "+", "-"):
            im_s += "1"
    try:
        return Fraction(re_s), Fraction(im_s)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad coefficient {text!r}") from None


def parse_branch(text: str) -> BranchParam:
    m = re.fullmatch(r"\s*m\s*=\s*(\d+)\s*;\s*w\s*=\s*(.+?)\s*", text, re.S)
    if not m:
        raise FormatError("expected 'm=<m>; w = t^<n> + ...'")
    mm = int(m.group(1))
    terms = []
    depth, start, body = 0, 0, m.group(2)
    for i, ch in enumerate(body):
        depth += ch == "("
        depth -= ch == ")"
        if ch == "+" and depth == 0:
            terms.append(body[start:i])
            start = i + 1
    terms.append(body[start:])
    exps = {}
    for term in terms:
        t = _TERM.fullmatch(term.strip())
        if not t:
            raise FormatError(f"bad term {term.strip()!r}")
        coeff = _parse_coefficient(t.group(1) if t.group(1) is not None else (t.group(2) or ""))
        k = int(t.group(3))
        if k in exps:
            raise FormatError(f"exponent {k} repeated")
        exps[k] = coeff
    n = min(exps)
    if exps[n] != (1, 0):
        raise FormatError("leading term must be t^n with coefficient 1")
    del exps[n]
    try:
        return BranchParam(mm, n, exps)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_branch(b: BranchParam) -> str:
    return str(b)


# JSON

def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def to_json(obj) -> dict[str, Any]:
    if isinstance(obj, BraidWord):
        return {"type": "braid", "strands": obj.strands, "word": list(obj.letters)}
    if isinstance(obj, Band):
        return {
            "type": "band",
            "strands": obj.strands,
            "conjugator": list(obj.conjugator),
            "core": obj.core,
            "sign": obj.sign,
            "power": obj.power,
        }
    if isinstance(obj, BandRepresentation):
        bands = []
        for b in obj.bands:
            d = to_json(b)
            del d["type"], d["strands"]
            bands.append(d)
        return {"type": "brep", "strands": obj.strands, "bands": bands}
    if isinstance(obj, FreeWord):
        return {"type": "free_word", "rank": obj.rank, "word": list(obj.letters)}
    if isinstance(obj, GroupPresentation):
        return {
            "type": "presentation",
            "generators": obj.generators,
            "relators": [list(r) for r in obj.relators],
        }
    if isinstance(obj, AbelianInvariants):
        return {"type": "abelian", "free_rank": obj.free_rank, "torsion": list(obj.torsion)}
    if isinstance(obj, BranchParam):
        return {
            "type": "branch",
            "m": obj.m,
            "n": obj.n,
            "coeffs": [
                {"k": k, "re": _frac(re), "im": _frac(im)} for k, (re, im) in obj.coeffs.items()
            ],
        }
    if isinstance(obj, PolyCurve):
        return {
            "type": "poly",
            "monomials": [
                {"zi": zi, "wj": wj, "re": _frac(c[0]), "im": _frac(c[1])}
                for zi, wj, c in obj.monomials
            ],
        }
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def _rational(v) -> Fraction:
    try:
        return Fraction(str(v))
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad rational {v!r}") from None


def _guess_type(d):
    if "type" in d:
        return d["type"]
    if "monomials" in d:
        return "poly"
    if "bands" in d:
        return "brep"
    if "relators" in d:
        return "presentation"
    if "rank" in d:
        return "free_word"
    if "m" in d and "n" in d:
        return "branch"
    if "word" in d:
        return "braid"
    raise FormatError("cannot tell what this JSON object describes")


def from_json(d: dict[str, Any]):
    if not isinstance(d, dict):
        raise FormatError("expected a JSON object")
    kind = _guess_type(d)
    try:
        if kind == "braid":
            return BraidWord(int(d["strands"]), tuple(d["word"]))
        if kind == "band":
            return Band(
                int(d["strands"]), tuple(d.get("conjugator", ())), int(d["core"]),
                int(d.get("sign", 1)), int(d.get("power", 1)),
            )
        if kind == "brep":
            n = int(d["strands"])
            return BandRepresentation(
                n, tuple(from_json({**b, "type": "band", "strands": n}) for b in d["bands"])
            )
        if kind == "free_word":
            return FreeWord(int(d["rank"]), tuple(d["word"]))
        if kind == "presentation":
            return GroupPresentation(int(d["generators"]), tuple(tuple(r) for r in d["relators"]))
        if kind == "abelian":
            return AbelianInvariants(int(d["free_rank"]), tuple(d["torsion"]))
        if kind == "branch":
            coeffs = {
                int(c["k"]): (_rational(c.get("re", 0)), _rational(c.get("im", 0)))
                for c in d.get("coeffs", ())
            }
            return BranchParam(int(d["m"]), int(d["n"]), coeffs)
        if kind == "poly":
            return PolyCurve(
                tuple(
                    (int(t["zi"]), int(t["wj"]), (_rational(t.get("re", 0)), _rational(t.get("im", 0))))
                    for t in d["monomials"]
                )
            )
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad {kind} JSON: {exc}") from None
    raise FormatError(f"unknown type {kind!r}")


def dumps(obj) -> str:
    return json.dumps(to_json(obj), sort_keys=True)


def loads(text: str):
    try:
        return from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None


def parse_any(text: str):
    """Recognize any of the text or JSON forms above."""
    s = text.strip()
    if not s:
        raise FormatError("empty input")
    if s.startswith("{"):
        return loads(s)
    if s.startswith("gens"):
        return parse_presentation(s)
    if s.startswith("m"):
        return parse_branch(s)
    if s.startswith("F"):
        return parse_free_word(s)
    if s.startswith("B"):
        return parse_brep(s) if "(" in s else parse_braid(s)
    raise FormatError(f"unrecognized input {s[:40]!r}")
