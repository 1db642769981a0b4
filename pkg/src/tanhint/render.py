"""Text, LaTeX and JSON renderings of closed forms.

JSON carries coefficients as ``"num/den"`` strings so the wire format stays
exact::

    {"m":2,"n":2,"terms":[{"s":3,"coeff":"14"}]}
"""

from __future__ import annotations

import json

from .closed_form import IntegralSpec, ZetaCombination, validate_spec
from .exact_arith import format_rational, parse_rational

FORMATS = ("text", "json", "latex")


def _join_signed(pieces: list[tuple[bool, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for i, (negative, body) in enumerate(pieces):
        if i == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def to_text(zc: ZetaCombination) -> str:
    """``56/3*zeta(3)/pi^2 - 124*zeta(5)/pi^4``"""
    pieces = []
    for s, c in zc:
        mag = format_rational(abs(c))
        head = "" if mag == "1" else f"{mag}*"
        pieces.append((c < 0, f"{head}zeta({s})/pi^{s - 1}"))
    return _join_signed(pieces)


def to_latex(zc: ZetaCombination) -> str:
    r"""``\frac{56\,\zeta(3)}{3\,\pi^{2}} - \frac{124\,\zeta(5)}{\pi^{4}}``"""
    pieces = []
    for s, c in zc:
        num, den = abs(c.numerator), c.denominator
        top = r"\zeta(%d)" % s if num == 1 else r"%d\,\zeta(%d)" % (num, s)
        bottom = r"\pi^{%d}" % (s - 1) if den == 1 else r"%d\,\pi^{%d}" % (den, s - 1)
        pieces.append((c < 0, r"\frac{%s}{%s}" % (top, bottom)))
    return _join_signed(pieces)


def to_json_obj(spec: IntegralSpec, zc: ZetaCombination) -> dict:
    return {
        "m": spec.m,
        "n": spec.n,
        "terms": [{"s": s, "coeff": format_rational(c)} for s, c in zc],
    }


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def to_json(spec: IntegralSpec, zc: ZetaCombination) -> str:
    return dumps(to_json_obj(spec, zc))


def from_json_obj(obj: dict) -> tuple[IntegralSpec, ZetaCombination]:
    try:
        spec = validate_spec(obj["m"], obj["n"])
        terms = [(t["s"], parse_rational(t["coeff"])) for t in obj["terms"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed closed-form JSON: {exc!r}") from None
    zc = ZetaCombination(tuple(terms))
    if [s for s, _ in zc] != [s for s, _ in terms]:
        raise ValueError("terms must be sorted by s, unique and nonzero")
    return spec, zc


def from_json(text: str) -> tuple[IntegralSpec, ZetaCombination]:
    return from_json_obj(json.loads(text))


def render(spec: IntegralSpec, zc: ZetaCombination, fmt: str) -> str:
    if fmt == "text":
        return f"{spec} = {to_text(zc)}"
    if fmt == "latex":
        return to_latex(zc)
    if fmt == "json":
        return to_json(spec, zc)
    raise ValueError(f"unknown output format {fmt!r}; expected one of {', '.join(FORMATS)}")


__all__ = [
    "FORMATS",
    "to_text",
    "to_latex",
    "to_json",
    "to_json_obj",
    "from_json",
    "from_json_obj",
    "render",
    "dumps",
]
