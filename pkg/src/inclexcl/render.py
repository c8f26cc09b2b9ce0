"""Rendering a decided identity as text, LaTeX or JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .charset import CharSet, indices_of, mask_of
from .evaluate import format_sequence, format_set, indicator_sequence
from .iel import IelDecision, IsLike

JSON_KEYS = ("n", "expression", "characteristic_set", "iel", "cardinalities",
             "coefficients", "witness_in", "witness_out")


@dataclass(frozen=True)
class IdentityReport:
    n: int
    expression: str
    characteristic_set: tuple[tuple[int, ...], ...]
    iel: bool
    cardinalities: tuple[int, ...]
    coefficients: Optional[tuple[int, ...]] = None
    witness_in: Optional[tuple[int, ...]] = None
    witness_out: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.iel != (self.coefficients is not None):
            raise ValueError("coefficients are present exactly when iel is true")
        if self.iel == (self.witness_in is not None) or \
                (self.witness_in is None) != (self.witness_out is None):
            raise ValueError("witnesses are present exactly when iel is false")


def build_report(expression: str, s: CharSet, decision: IelDecision) -> IdentityReport:
    n = s.arity
    cards = tuple(sorted({m.bit_count() for m in s}))
    charset_ = tuple(tuple(x) for x in s.serialize())
    if isinstance(decision, IsLike):
        return IdentityReport(n, expression, charset_, True, cards,
                              coefficients=tuple(decision.coeffs))
    return IdentityReport(n, expression, charset_, False, cards,
                          witness_in=tuple(indices_of(decision.witness_in)),
                          witness_out=tuple(indices_of(decision.witness_out)))


def _terms(coeffs: Sequence[int], n: int, term: str, times: str) -> str:
    parts = []
    for k, c in enumerate(coeffs, start=1):
        if c == 0:
            continue
        mag = abs(c)
        body = term.format(n=n, k=k) if mag == 1 else f"{mag}{times}{term.format(n=n, k=k)}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def render_text(r: IdentityReport) -> str:
    """``|E(A)| = i_{3,2}(A) - 2*i_{3,3}(A)``, or why no such identity exists."""
    if r.iel:
        return "|E(A)| = " + _terms(r.coefficients, r.n, "i_{{{n},{k}}}(A)", "*")
    seq_in = indicator_sequence(mask_of(r.witness_in), r.n)
    seq_out = indicator_sequence(mask_of(r.witness_out), r.n)
    size = len(r.witness_in)
    return (
        f"not inclusion-exclusion-like: {format_set(r.witness_in)} ∈ S but "
        f"{format_set(r.witness_out)} ∉ S, both of cardinality {size}\n"
        f"indicator sequences {format_sequence(seq_in)} and {format_sequence(seq_out)} "
        f"share i_{{{r.n},k}} = C({size},k) but |E| = 1 vs 0")


def _latex_set(indices: Sequence[int]) -> str:
    return r"\{" + ",".join(map(str, indices)) + r"\}"


def render_latex(r: IdentityReport) -> str:
    if r.iel:
        rhs = _terms(r.coefficients, r.n, r"i_{{{n},{k}}}(\mathcal{{A}})", r"\,")
        return r"\left|E(\mathcal{A})\right| = " + rhs
    return (
        _latex_set(r.witness_in) + r" \in \mathcal{S}, \quad "
        + _latex_set(r.witness_out) + r" \notin \mathcal{S}, \quad |"
        + _latex_set(r.witness_in) + "| = |" + _latex_set(r.witness_out)
        + r"| \;\Rightarrow\; E \text{ is not inclusion-exclusion-like}")


def report_to_dict(r: IdentityReport) -> dict:
    d = {
        "n": r.n,
        "expression": r.expression,
        "characteristic_set": [list(s) for s in r.characteristic_set],
        "iel": r.iel,
        "cardinalities": list(r.cardinalities),
    }
    if r.iel:
        d["coefficients"] = list(r.coefficients)
    else:
        d["witness_in"] = list(r.witness_in)
        d["witness_out"] = list(r.witness_out)
    return d


def render_json(r: IdentityReport) -> str:
    return json.dumps(report_to_dict(r), ensure_ascii=False)


def parse_report_json(text: str) -> IdentityReport:
    """Inverse of :func:`render_json`."""
    d = json.loads(text)
    unknown = set(d) - set(JSON_KEYS)
    if unknown:
        raise ValueError(f"unknown report keys: {sorted(unknown)}")

    def ints(key):
        return None if key not in d else tuple(d[key])

    return IdentityReport(
        n=d["n"],
        expression=d["expression"],
        characteristic_set=tuple(tuple(s) for s in d["characteristic_set"]),
        iel=d["iel"],
        cardinalities=tuple(d["cardinalities"]),
        coefficients=ints("coefficients"),
        witness_in=ints("witness_in"),
        witness_out=ints("witness_out"),
    )


RENDERERS = {"text": render_text, "latex": render_latex, "json": render_json}
