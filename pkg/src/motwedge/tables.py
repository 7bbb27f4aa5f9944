"""Text dumps of the packaged tables, each with a parser that reads the dump back."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .a2model import RULES, A2Element, format_rules, parse_a2_element, parse_rules, phi_named
from .errors import OpaqueImage, ParseError
from . import tokens
from .grading import TriDegree, factors_degree
from .localized import EXT_LOCAL, L_named, LocalPolynomial, format_polynomial, parse_polynomial
from .wedge import HIGHER_WEIGHT, HigherWeightEntry, LambdaRow, lambda_table

TABLE_NAMES = ("lambda", "phi", "L", "higher-weight", "rules")

PHI_NAMES = ("tau", "h1", "h2", "d0", "e0", "i", "k", "r", "l", "m",
             "Dh1*d0", "Dh1*e0", "tau*g", "tau*g^2", "tau*Dh1*g", "e0*g")
L_NAMES = ("h1", "P*h1", "P^2*h1", "d0", "P*d0", "P^2*d0", "e0", "P*e0", "P^2*e0", "e0*g")
OPAQUE = "opaque"


def _rows(text: str, width: int, kind: str) -> list[list[str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.startswith("#"):
            continue
        parts = raw.split("\t")
        if len(parts) != width:
            raise ParseError(f"{kind} table line {lineno}: expected {width} fields")
        out.append(parts)
    return out


def _deg(parts: list[str]) -> TriDegree:
    try:
        return TriDegree(*(int(x) for x in parts))
    except ValueError as exc:
        raise ParseError(f"bad degree {parts}") from exc


# --- lambda -------------------------------------------------------------

def dump_lambda(rows: Optional[list[LambdaRow]] = None) -> str:
    rows = lambda_table() if rows is None else rows
    lines = ["# motwedge-lambda v1", "# name\ts\tf\tw\tcitation"]
    lines += [f"{r.name}\t{r.degree.stem}\t{r.degree.filtration}\t{r.degree.weight}\twedge-main" for r in rows]
    return "\n".join(lines) + "\n"


def parse_lambda(text: str) -> list[LambdaRow]:
    return [LambdaRow(p[0], _deg(p[1:4])) for p in _rows(text, 5, "lambda")]


# --- phi ----------------------------------------------------------------

@dataclass(frozen=True)
class PhiRow:
    name: str
    degree: TriDegree
    image: Optional[A2Element]  # None when the image is not known


def phi_table() -> list[PhiRow]:
    rows = []
    for name in PHI_NAMES:
        try:
            image: Optional[A2Element] = phi_named(name)
        except OpaqueImage:
            image = None
        rows.append(PhiRow(name, factors_degree(tokens.parse_product(name)), image))
    return rows


def dump_phi(rows: Optional[list[PhiRow]] = None) -> str:
    rows = phi_table() if rows is None else rows
    lines = ["# motwedge-phi v1", "# name\ts\tf\tw\timage\tcitation"]
    for r in rows:
        image = OPAQUE if r.image is None else str(r.image)
        cite = "phi-values" if r.image is not None else "phi-values:unknown-image"
        lines.append(f"{r.name}\t{r.degree.stem}\t{r.degree.filtration}\t{r.degree.weight}\t{image}\t{cite}")
    return "\n".join(lines) + "\n"


def parse_phi(text: str) -> list[PhiRow]:
    return [PhiRow(p[0], _deg(p[1:4]), None if p[4] == OPAQUE else parse_a2_element(p[4]))
            for p in _rows(text, 6, "phi")]


# --- L-values -------------------------------------------------------------

@dataclass(frozen=True)
class LRow:
    name: str
    value: LocalPolynomial


def l_table() -> list[LRow]:
    return [LRow(name, L_named(name)) for name in L_NAMES]


def dump_l(rows: Optional[list[LRow]] = None) -> str:
    rows = l_table() if rows is None else rows
    lines = ["# motwedge-L v1", "# name\tlocalization\tcitation"]
    lines += [f"{r.name}\t{format_polynomial(r.value)}\tL-values" for r in rows]
    return "\n".join(lines) + "\n"


def parse_l(text: str) -> list[LRow]:
    return [LRow(p[0], parse_polynomial(p[1], EXT_LOCAL)) for p in _rows(text, 3, "L")]


# --- higher weight ----------------------------------------------------------

def dump_higher_weight(rows: Optional[tuple[HigherWeightEntry, ...]] = None) -> str:
    rows = HIGHER_WEIGHT if rows is None else rows
    lines = ["# motwedge-higher-weight v1", "# wedge\twedge_weight\telement\tweight\tcitation"]
    lines += [f"{r.wedge}\t{r.wedge_weight}\t{r.element}\t{r.weight}\thigher-weight" for r in rows]
    return "\n".join(lines) + "\n"


def parse_higher_weight(text: str) -> tuple[HigherWeightEntry, ...]:
    try:
        return tuple(HigherWeightEntry(p[0], int(p[1]), p[2], int(p[3])) for p in _rows(text, 5, "higher-weight"))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


# --- dispatch -------------------------------------------------------------

DUMPERS = {
    "lambda": (dump_lambda, parse_lambda, lambda_table),
    "phi": (dump_phi, parse_phi, phi_table),
    "L": (dump_l, parse_l, l_table),
    "higher-weight": (dump_higher_weight, parse_higher_weight, lambda: HIGHER_WEIGHT),
    "rules": (format_rules, parse_rules, lambda: RULES),
}


def dump(name: str) -> str:
    return DUMPERS[name][0]()


def parse(name: str, text: str):
    return DUMPERS[name][1](text)


def current(name: str):
    return DUMPERS[name][2]()
