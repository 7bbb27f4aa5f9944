"""The wedge chart: dot enumeration, regular/irregular classification, labels, SVG and TSV output."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import tokens
from .binary import alpha
from .errors import CollisionError, DomainError, ParseError
from .grading import data_dir, wedge_member_degree
from .wedge import HIGHER_WEIGHT, LAMBDA_NAMES, tau_form

TSV_HEADER = "stem\tfiltration\tweight\tlabel\tclass\tlambda\ti\tj"
REGULAR = "Regular"
IRREGULAR = "Irregular"
LABELED_THROUGH = 70  # packaged labels cover stems up to here
MIN_STEM = 40

RED = "#ff0000"
GRAY = "#808080"


@dataclass(frozen=True)
class ChartDot:
    stem: int
    filtration: int
    weight: int
    label: str
    cls: str
    lam: str
    i: int
    j: int
    synthesized: bool = False

    @property
    def provenance(self) -> tuple[str, int, int]:
        return (self.lam, self.i, self.j)

    @property
    def position(self) -> tuple[int, int]:
        return (self.stem, self.filtration)


def in_cone(stem: int, filtration: int) -> bool:
    """Below f = s/2 - 12 and on or to the left of s = 5f."""
    return stem <= 5 * filtration and 2 * filtration <= stem - 24


# --- labels ----------------------------------------------------------------

def parse_label_table(text: str) -> dict[tuple[int, int], str]:
    out: dict[tuple[int, int], str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected stem, filtration, label")
        key = (int(parts[0]), int(parts[1]))
        if key in out:
            raise ParseError(f"line {lineno}: duplicate position {key}")
        out[key] = tokens.canonical(parts[2])
    return out


@lru_cache(maxsize=None)
def _labels_at(path: str) -> dict[tuple[int, int], str]:
    with open(path, encoding="utf-8") as fh:
        return parse_label_table(fh.read())


def packaged_labels() -> dict[tuple[int, int], str]:
    return dict(_labels_at(str(data_dir() / "wedge_labels.tsv")))


_HIGHER = {row.wedge: row.element for row in HIGHER_WEIGHT}


def synthesize_label(lam: str, i: int, j: int) -> str:
    """Name for P^i g^j lambda: the merged product, or the higher-weight element times P^i."""
    if j == 0 and lam in _HIGHER:
        parts = _HIGHER[lam].split(".")
        parts[0] = tokens.format_product(tokens.multiply(tokens.parse_product(parts[0]), (("P", i),)))
        return ".".join(parts)
    return tokens.format_product(tokens.multiply(tokens.parse_product(lam), (("P", i), ("g", j))))


def label(dot: ChartDot) -> str:
    return dot.label


# --- classification ------------------------------------------------------

def classify_provenance(lam: str, i: int, j: int) -> str:
    form = tau_form(lam)
    if form is None or i != 0:
        return REGULAR
    kind, t, k = form
    k += j
    if kind == "e0g":
        return IRREGULAR if alpha(t + k) > t else REGULAR
    return IRREGULAR if alpha(1 + t + k) > t else REGULAR


def classify(dot: ChartDot) -> str:
    return classify_provenance(dot.lam, dot.i, dot.j)


# --- enumeration -----------------------------------------------------------

def enumerate_dots(stem_max: int) -> list[ChartDot]:
    """All wedge dots with stem <= stem_max, ordered by stem then filtration."""
    if stem_max < MIN_STEM:
        raise DomainError(f"stem_max must be at least {MIN_STEM}")
    labels = packaged_labels()
    found: dict[tuple[int, int], tuple[str, int, int, int]] = {}
    for lam in LAMBDA_NAMES:
        j = 0
        while wedge_member_degree(lam, 0, j).stem <= stem_max:
            i = 0
            while True:
                d = wedge_member_degree(lam, i, j)
                if d.stem > stem_max:
                    break
                key = (d.stem, d.filtration)
                if key in found:
                    other = found[key]
                    raise CollisionError(
                        f"({d.stem},{d.filtration}) is reached by ({other[0]},{other[1]},{other[2]}) and ({lam},{i},{j})")
                found[key] = (lam, i, j, d.weight)
                i += 1
            j += 1
    dots = []
    for (s, f), (lam, i, j, w) in sorted(found.items()):
        if not in_cone(s, f):
            raise AssertionError(f"dot ({s},{f}) lies outside the wedge cone")
        packaged = labels.get((s, f)) if s <= LABELED_THROUGH else None
        name = packaged if packaged is not None else synthesize_label(lam, i, j)
        dots.append(ChartDot(s, f, w, name, classify_provenance(lam, i, j), lam, i, j,
                             synthesized=packaged is None))
    return dots


# --- output --------------------------------------------------------------

def emit_tsv(dots: list[ChartDot]) -> str:
    lines = [TSV_HEADER]
    for d in dots:
        lines.append("\t".join([str(d.stem), str(d.filtration), str(d.weight), tokens.display(d.label),
                                d.cls, tokens.display(d.lam), str(d.i), str(d.j)]))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Geometry:
    unit: float = 0.65         # chart units per grid step, as in the printed chart
    px_per_unit: float = 40.0
    radius: float = 0.06
    margin: int = 2
    tick: int = 2
    show_labels: bool = False


def _even_floor(x: int) -> int:
    return x - x % 2


def emit_svg(dots: list[ChartDot], geometry: Optional[Geometry] = None) -> str:
    if not dots:
        raise DomainError("cannot draw an empty chart")
    g = geometry or Geometry()
    scale = g.unit * g.px_per_unit
    s_lo = _even_floor(min(d.stem for d in dots)) - g.margin
    s_hi = max(d.stem for d in dots) + g.margin
    f_lo = _even_floor(min(d.filtration for d in dots)) - g.margin
    f_hi = max(d.filtration for d in dots) + g.margin
    width = (s_hi - s_lo) * scale
    height = (f_hi - f_lo) * scale

    def x(s: float) -> str:
        return f"{(s - s_lo) * scale:.2f}"

    def y(f: float) -> str:
        return f"{(f_hi - f) * scale:.2f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2f}" height="{height:.2f}" '
        f'viewBox="0 0 {width:.2f} {height:.2f}">',
        '<g class="grid" stroke="#dddddd" stroke-width="0.5">',
    ]
    for s in range(s_lo, s_hi + 1, g.tick):
        out.append(f'<line x1="{x(s)}" y1="{y(f_lo)}" x2="{x(s)}" y2="{y(f_hi)}"/>')
    for f in range(f_lo, f_hi + 1, g.tick):
        out.append(f'<line x1="{x(s_lo)}" y1="{y(f)}" x2="{x(s_hi)}" y2="{y(f)}"/>')
    out.append("</g>")
    out.append('<g class="ticks" font-family="sans-serif" font-size="9" fill="#000000">')
    for s in range(s_lo, s_hi + 1, g.tick):
        out.append(f'<text x="{x(s)}" y="{height - 2:.2f}" text-anchor="middle">{s}</text>')
    for f in range(f_lo, f_hi + 1, g.tick):
        out.append(f'<text x="2" y="{y(f)}" dominant-baseline="middle">{f}</text>')
    out.append("</g>")
    out.append('<g class="dots">')
    r = max(g.radius * g.px_per_unit, 1.0)
    for d in dots:
        color = RED if d.cls == IRREGULAR else GRAY
        out.append(f'<circle cx="{x(d.stem)}" cy="{y(d.filtration)}" r="{r:.2f}" fill="{color}">'
                   f'<title>{tokens.display(d.label)} ({d.stem},{d.filtration},{d.weight})</title></circle>')
    out.append("</g>")
    if g.show_labels:
        out.append('<g class="labels" font-family="serif" font-size="7">')
        for d in dots:
            out.append(f'<text x="{x(d.stem)}" y="{float(y(d.filtration)) + 3 * r + 4:.2f}" '
                       f'text-anchor="middle">{tokens.display(d.label)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
