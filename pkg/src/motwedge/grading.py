"""Trigraded (stem, filtration, weight) degrees and the packaged degree tables."""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Optional

from . import tokens
from .errors import ParseError, UnknownName

DATA_ENV = "MOTWEDGE_DATA_DIR"
TABLE_VERSION = "motwedge-generators v1"


@dataclass(frozen=True, order=True)
class TriDegree:
    stem: int
    filtration: int
    weight: int

    def __add__(self, other: "TriDegree") -> "TriDegree":
        if not isinstance(other, TriDegree):
            return NotImplemented
        return TriDegree(self.stem + other.stem, self.filtration + other.filtration, self.weight + other.weight)

    def __sub__(self, other: "TriDegree") -> "TriDegree":
        return TriDegree(self.stem - other.stem, self.filtration - other.filtration, self.weight - other.weight)

    def __mul__(self, n: int) -> "TriDegree":
        if not isinstance(n, int):
            return NotImplemented
        return TriDegree(self.stem * n, self.filtration * n, self.weight * n)

    __rmul__ = __mul__

    @property
    def chow(self) -> int:
        return self.stem + self.filtration - 2 * self.weight

    @property
    def coweight(self) -> int:
        return self.stem - self.weight

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.stem, self.filtration, self.weight)

    def __str__(self) -> str:
        return f"({self.stem},{self.filtration},{self.weight})"


ZERO = TriDegree(0, 0, 0)

# Increments used by the wedge operations P^i g^j.
P_STEP = TriDegree(8, 4, 4)
G_STEP = TriDegree(20, 4, 12)


def deg_add(a: TriDegree, b: TriDegree) -> TriDegree:
    return a + b


def chow_degree(d: TriDegree) -> int:
    return d.chow


def coweight(d: TriDegree) -> int:
    return d.coweight


def chow_zero_lift(s_cl: int, f_cl: int) -> TriDegree:
    """Motivic degree of the Chow-degree-zero image of a classical class in (s, f)."""
    if s_cl < 0 or f_cl < 0:
        raise ValueError("classical degrees are non-negative")
    return TriDegree(2 * s_cl + f_cl, f_cl, s_cl + f_cl)


def classical_vanishes(s_cl: int, f_cl: int) -> bool:
    """The classical vanishing fact used for the g-power sets.

    Only the degrees (8j, 4j) are covered; everything else returns False,
    meaning "no packaged fact", not "non-zero".  The j = 0 case is reported
    as stated for all j >= 0, although classical Ext contains the unit there.
    """
    return s_cl >= 0 and f_cl >= 0 and s_cl == 2 * f_cl and f_cl % 4 == 0


@dataclass(frozen=True)
class GeneratorInfo:
    name: str
    degree: Optional[TriDegree]
    source: str

    @property
    def display(self) -> str:
        try:
            return tokens.display(self.name)
        except ParseError:
            return self.name


# --- data file ------------------------------------------------------------

def data_dir() -> Path:
    override = os.environ.get(DATA_ENV)
    if override:
        return Path(override)
    return Path(__file__).parent / "data" / "v1"


def parse_generator_table(text: str) -> dict[str, GeneratorInfo]:
    """Parse the plain-text generator table. Blank lines and ``#`` comments are skipped."""
    table: dict[str, GeneratorInfo] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 5:
            raise ParseError(f"line {lineno}: expected 5 tab-separated fields, got {len(parts)}")
        name, s, f, w, source = parts
        if (s, f, w) == ("-", "-", "-"):
            degree = None
        else:
            try:
                degree = TriDegree(int(s), int(f), int(w))
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad degree field") from exc
        if name in table:
            raise ParseError(f"line {lineno}: duplicate name {name!r}")
        table[name] = GeneratorInfo(name, degree, source)
    return table


def dump_generator_table(table: dict[str, GeneratorInfo] | Iterable[GeneratorInfo]) -> str:
    rows = table.values() if isinstance(table, dict) else table
    out = [f"# {TABLE_VERSION}", "# name\ts\tf\tw\tsource"]
    for info in rows:
        if info.degree is None:
            s = f = w = "-"
        else:
            s, f, w = info.degree.as_tuple()
        out.append(f"{info.name}\t{s}\t{f}\t{w}\t{info.source}")
    return "\n".join(out) + "\n"


@lru_cache(maxsize=None)
def _load_table(path: str) -> dict[str, GeneratorInfo]:
    return parse_generator_table(Path(path).read_text(encoding="utf-8"))


def generator_table() -> dict[str, GeneratorInfo]:
    return dict(_load_table(str(data_dir() / "generators.tsv")))


# --- lookup ---------------------------------------------------------------

_V_RE = re.compile(r"^v(\d+)$")


def v_degree(n: int) -> TriDegree:
    """Degree of v_n in the h1-localized rings, n >= 2."""
    if n < 2:
        raise ValueError("v_n is defined for n >= 2")
    return TriDegree(2 ** (n + 1) - 2, 1, 2 ** n - 1)


def factors_degree(factors: tokens.Factors) -> TriDegree:
    """Degree of a product of atoms, using the atom rows of the table."""
    table = generator_table()
    total = ZERO
    for atom, e in factors:
        info = table.get(atom)
        if info is None or info.degree is None:
            raise UnknownName(f"no degree for atom {atom!r}")
        total = total + info.degree * e
    return total


# one-parameter rows: shape without the parameter -> (parameter atom, family)
_FAMILIES = {
    (("d0", 1),): ("P", "P^i*d0"),
    (("e0", 1),): ("P", "P^i*e0"),
    (("h1", 1),): ("P", "P^k*h1"),
    (("h2", 1),): ("g", "h2*g^j"),
}


def lookup_generator(name: str) -> GeneratorInfo:
    """Degree and source of a packaged symbol.

    Accepts the ASCII or display spelling.  Besides the fixed rows, the
    one-parameter families ``P^i*d0``, ``P^i*e0``, ``P^k*h1``, ``h2*g^j`` and
    the localized generators ``v<n>`` are resolved from their degree formulas.
    """
    table = generator_table()
    if name in table:
        return table[name]
    m = _V_RE.match(name.strip())
    if m:
        n = int(m.group(1))
        if n >= 2:
            return GeneratorInfo(f"v{n}", v_degree(n), "h1-local:v_n")
        raise UnknownName(f"unknown symbol {name!r}")
    try:
        factors = tokens.parse_product(name)
    except ParseError:
        raise UnknownName(f"unknown symbol {name!r}") from None
    canon = tokens.format_product(factors)
    if canon in table:
        return table[canon]
    for param in ("P", "g"):
        rest = tuple((a, e) for a, e in factors if a != param)
        fam = _FAMILIES.get(rest)
        if fam is not None and fam[0] == param:
            return GeneratorInfo(canon, factors_degree(factors), f"phi-values:{fam[1]}")
    raise UnknownName(f"unknown symbol {name!r}")


def degree_of(name: str) -> TriDegree:
    info = lookup_generator(name)
    if info.degree is None:
        raise UnknownName(f"symbol {name!r} has no assigned degree")
    return info.degree


def wedge_member_degree(lam: GeneratorInfo | str | TriDegree, i: int, j: int) -> TriDegree:
    """Degree of the elements of P^i g^j lambda."""
    if i < 0 or j < 0:
        raise ValueError("i and j must be non-negative")
    if isinstance(lam, str):
        base = degree_of(lam)
    elif isinstance(lam, GeneratorInfo):
        if lam.degree is None:
            raise UnknownName(f"symbol {lam.name!r} has no assigned degree")
        base = lam.degree
    else:
        base = lam
    return base + P_STEP * i + G_STEP * j
