"""A partial model of Ext over A(2): named generators, F2 sums and a rewrite system.

The model contains exactly the relations needed to check the witness
constructions for the wedge sets:

    R1  d0^2          -> P g + h1^3 Dh1
    R2  e0^2          -> g d0
    R3  tau h1^3 Dh1  -> 0          (inferred; see ``Rule.inferred``)
    R4  h1^3 n^2      -> 0
    R5  h1^3 tau g    -> 0

Each rule strictly lowers ``2*exp(d0) + 3*exp(e0)`` or deletes the monomial,
so normalization terminates.  The model is not a presentation of the whole
ring: a failed comparison means "not derivable here", nothing more.
"""

from __future__ import annotations

import random
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from . import tokens
from .errors import OpaqueImage, ParseError, UnknownName
from .grading import TriDegree, ZERO

# image-ring generators in canonical order
GENERATORS = ("tau", "P", "h1", "h2", "Dh1", "d0", "e0", "g", "n")
OPAQUE_L = "phi(l)"

DEGREES = {
    "tau": TriDegree(0, 0, -1),
    "P": TriDegree(8, 4, 4),
    "h1": TriDegree(1, 1, 1),
    "h2": TriDegree(3, 1, 2),
    "Dh1": TriDegree(25, 5, 13),
    "d0": TriDegree(14, 4, 8),
    "e0": TriDegree(17, 4, 10),
    "g": TriDegree(20, 4, 12),
    "n": TriDegree(15, 3, 8),
    OPAQUE_L: TriDegree(32, 7, 18),
}

_ORDER = {name: i for i, name in enumerate(GENERATORS)}


def _key(name: str) -> tuple:
    return (_ORDER.get(name, len(GENERATORS)), name)


@dataclass(frozen=True)
class A2Monomial:
    exps: tuple = ()  # ((generator, exponent), ...), canonical order, exponents > 0

    @classmethod
    def of(cls, **exps: int) -> "A2Monomial":
        return cls.from_dict(exps)

    @classmethod
    def from_dict(cls, exps: dict) -> "A2Monomial":
        for name, e in exps.items():
            if e < 0:
                raise ValueError("exponents are non-negative")
            if name not in DEGREES:
                raise UnknownName(f"no image-ring generator {name!r}")
        return cls(tuple(sorted(((n, e) for n, e in exps.items() if e), key=lambda p: _key(p[0]))))

    def exponent(self, name: str) -> int:
        return dict(self.exps).get(name, 0)

    def degree(self) -> TriDegree:
        total = ZERO
        for name, e in self.exps:
            total = total + DEGREES[name] * e
        return total

    def __mul__(self, other: "A2Monomial") -> "A2Monomial":
        exps = dict(self.exps)
        for name, e in other.exps:
            exps[name] = exps.get(name, 0) + e
        return A2Monomial.from_dict(exps)

    def __pow__(self, n: int) -> "A2Monomial":
        return A2Monomial.from_dict({name: e * n for name, e in self.exps})

    def divides(self, other: "A2Monomial") -> bool:
        theirs = dict(other.exps)
        return all(theirs.get(name, 0) >= e for name, e in self.exps)

    def quotient(self, divisor: "A2Monomial") -> "A2Monomial":
        exps = dict(self.exps)
        for name, e in divisor.exps:
            exps[name] -= e
        return A2Monomial.from_dict(exps)

    def rank(self) -> int:
        return 2 * self.exponent("d0") + 3 * self.exponent("e0")

    def sort_key(self) -> tuple:
        return tuple((_key(n), e) for n, e in self.exps)

    def format(self, unicode: bool = False) -> str:
        if not self.exps:
            return "1"
        parts = []
        for name, e in self.exps:
            if unicode and name in tokens.DISPLAY:
                parts.append(tokens.DISPLAY[name] + (tokens.superscript(e) if e != 1 else ""))
            else:
                parts.append(name if e == 1 else f"{name}^{e}")
        return ("" if unicode else "*").join(parts)

    def __str__(self) -> str:
        return self.format()


ONE = A2Monomial()


@dataclass(frozen=True)
class A2Element:
    terms: frozenset = frozenset()

    @classmethod
    def of(cls, monos: Iterable[A2Monomial]) -> "A2Element":
        counts = Counter(monos)
        return cls(frozenset(m for m, c in counts.items() if c % 2))

    @classmethod
    def mono(cls, m: A2Monomial) -> "A2Element":
        return cls(frozenset([m]))

    def __add__(self, other: "A2Element") -> "A2Element":
        return A2Element(self.terms ^ other.terms)

    def __mul__(self, other: "A2Element") -> "A2Element":
        return A2Element.of(a * b for a in self.terms for b in other.terms)

    def __pow__(self, n: int) -> "A2Element":
        out = A2Element.mono(ONE)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[A2Monomial]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list[A2Monomial]:
        return sorted(self.terms, key=A2Monomial.sort_key)

    def format(self, unicode: bool = False) -> str:
        if not self.terms:
            return "0"
        return " + ".join(m.format(unicode) for m in self.sorted_terms())

    def __str__(self) -> str:
        return self.format()


ZERO_ELEMENT = A2Element()

_A2_FACTOR = re.compile(r"^(phi\(l\)|[A-Za-z]+\d?)(?:\^(\d+))?$")


def parse_a2_monomial(text: str) -> A2Monomial:
    text = text.strip()
    if text == "1":
        return ONE
    exps: dict[str, int] = {}
    for piece in text.split("*"):
        m = _A2_FACTOR.match(piece.strip())
        if not m or m.group(1) not in DEGREES:
            raise ParseError(f"bad image-ring factor {piece!r}")
        exps[m.group(1)] = exps.get(m.group(1), 0) + int(m.group(2) or 1)
    return A2Monomial.from_dict(exps)


def parse_a2_element(text: str) -> A2Element:
    text = text.strip()
    if text == "0":
        return ZERO_ELEMENT
    return A2Element.of(parse_a2_monomial(t) for t in text.split("+"))


# --- images of named Ext elements -------------------------------------------

# Indecomposable Ext elements whose image is a single generator-level monomial.
# P, g and Dh1 are not among them: no Ext element maps to P, g^j or Dh1 g^k.
_PHI_ATOMS = {
    "tau": A2Monomial.of(tau=1),
    "h1": A2Monomial.of(h1=1),
    "h2": A2Monomial.of(h2=1),
    "d0": A2Monomial.of(d0=1),
    "e0": A2Monomial.of(e0=1),
    "i": A2Monomial.of(P=1, n=1),
    "k": A2Monomial.of(d0=1, n=1),
    "r": A2Monomial.of(n=2),
    "m": A2Monomial.of(n=1, g=1),
}

# Named Ext elements whose image is a product involving P, g or Dh1.
_PHI_COMPOUNDS = {
    "Dh1*d0": A2Monomial.of(Dh1=1, d0=1),
    "Dh1*e0": A2Monomial.of(Dh1=1, e0=1),
    "tau*g": A2Monomial.of(tau=1, g=1),
    "tau*g^2": A2Monomial.of(tau=1, g=2),
    "tau*Dh1*g": A2Monomial.of(tau=1, Dh1=1, g=1),
    "e0*g": A2Monomial.of(e0=1, g=1),
}

# one-parameter families P^i d0, P^i e0, P^k h1, h2 g^j: (base atom, parameter)
_PHI_FAMILIES = (("d0", "P"), ("e0", "P"), ("h1", "P"), ("h2", "g"))

EXT_ELEMENTS = tuple(_PHI_ATOMS) + ("l",) + tuple(_PHI_COMPOUNDS) + ("P^i*d0", "P^i*e0", "P^k*h1", "h2*g^j")


def _decompose(exps: dict[str, int]) -> Optional[list[A2Monomial]]:
    """Split a product into named Ext elements, or None if that is impossible."""
    free = {a: e for a, e in exps.items() if e}
    if all(a in _PHI_ATOMS for a in free):
        return [_PHI_ATOMS[a] ** e for a, e in free.items()]
    candidates: list[tuple[dict[str, int], A2Monomial]] = []
    for name, img in _PHI_COMPOUNDS.items():
        candidates.append((dict(tokens.parse_product(name)), img))
    for base, param in _PHI_FAMILIES:
        if free.get(param, 0) and free.get(base, 0):
            p = free[param]
            candidates.append(({base: 1, param: p}, A2Monomial.from_dict({base: 1, param: p})))
    for need, img in candidates:
        if all(free.get(a, 0) >= e for a, e in need.items()):
            rest = _decompose({a: free.get(a, 0) - need.get(a, 0) for a in free})
            if rest is not None:
                return [img] + rest
    return None


def phi_factors(factors: tokens.Factors) -> A2Monomial:
    exps = dict(factors)
    if exps.get("l"):
        raise OpaqueImage("the image of l is not known; witnesses involving l are not checked")
    unknown = [a for a in exps if a not in _PHI_ATOMS and a not in GENERATORS]
    if unknown:
        raise UnknownName(f"{unknown[0]!r} is not a named element of Ext")
    parts = _decompose(exps)
    if parts is None:
        raise UnknownName(f"{tokens.format_product(factors)!r} is not a product of named Ext elements")
    out = ONE
    for img in parts:
        out = out * img
    return out


def phi_named(name: str) -> A2Element:
    """Image under the restriction map of a named Ext element or a product of them.

    Products of named elements may be written with ``.`` between them
    (``e0.e0*g``); the map is multiplicative.  Within one factor the
    product is split into named elements automatically.
    """
    out = ONE
    for part in name.split("."):
        try:
            factors = tokens.parse_product(part)
        except ParseError as exc:
            raise UnknownName(str(exc)) from None
        out = out * phi_factors(factors)
    return A2Element.mono(out)


def a2_image(name: str) -> A2Element:
    """The A(2)-side monomial named by a symbolic product such as ``tau*Dh1*g`` or ``d0*r``.

    Unlike :func:`phi_named` this does not ask for an Ext element: P, g and
    Dh1 stand for themselves and i, k, r, m are replaced by their images.
    """
    out = ONE
    for part in name.split("."):
        try:
            factors = tokens.parse_product(part)
        except ParseError as exc:
            raise UnknownName(str(exc)) from None
        for atom, e in factors:
            if atom == "l":
                raise OpaqueImage("the image of l is not known")
            if atom in _PHI_ATOMS:
                out = out * _PHI_ATOMS[atom] ** e
            elif atom in GENERATORS:
                out = out * A2Monomial.of(**{atom: e})
            else:
                raise UnknownName(f"{atom!r} has no A(2) image")
    return A2Element.mono(out)


# --- rewrite rules ---------------------------------------------------------

@dataclass(frozen=True)
class Rule:
    name: str
    pattern: A2Monomial
    rhs: A2Element
    citation: str
    inferred: bool = False

    def __post_init__(self):
        deg = self.pattern.degree()
        for m in self.rhs.terms:
            if m.degree() != deg:
                raise ValueError(f"rule {self.name} does not preserve degree")

    def applies(self, m: A2Monomial) -> bool:
        return self.pattern.divides(m)

    def apply(self, m: A2Monomial) -> A2Element:
        q = m.quotient(self.pattern)
        return A2Element.of(t * q for t in self.rhs.terms)


RULES: tuple[Rule, ...] = (
    Rule("R1", A2Monomial.of(d0=2), parse_a2_element("P*g + h1^3*Dh1"), "d0-squared"),
    Rule("R2", A2Monomial.of(e0=2), parse_a2_element("d0*g"), "e0-squared"),
    Rule("R3", A2Monomial.of(tau=1, h1=3, Dh1=1), ZERO_ELEMENT, "tau-h1cubed-Dh1", inferred=True),
    Rule("R4", A2Monomial.of(h1=3, n=2), ZERO_ELEMENT, "h1cubed-n-squared"),
    Rule("R5", A2Monomial.of(tau=1, h1=3, g=1), ZERO_ELEMENT, "h1cubed-tau-g"),
)

RULE_NOTES = {
    "d0-squared": "d0^2 = P g + h1^3 Dh1 (used in P^i(Pg + h1^3 Dh1))",
    "e0-squared": "e0^2 = g d",
    "tau-h1cubed-Dh1": "tau h1^3 Dh1 = 0 (dropped term in tau P^(i-1)(Pg + h1^3 Dh1) = tau P^i g)",
    "h1cubed-n-squared": "h1^3 n^2 g^j = 0",
    "h1cubed-tau-g": "h1^3 tau g^j = 0",
}


@dataclass
class Step:
    rule: str
    monomial: A2Monomial
    produced: A2Element


def normalize(e: A2Element, rng: Optional[random.Random] = None, trace: Optional[list] = None,
              rules: tuple[Rule, ...] = RULES) -> A2Element:
    """Rewrite to the fixpoint of ``rules``.

    Without ``rng`` the first rule (in priority order) applicable to the
    first monomial (in canonical order) fires.  With ``rng`` a random
    applicable (rule, monomial) pair fires, which is how order independence
    is tested.
    """
    current = e
    while True:
        if rng is None:
            choice = None
            for rule in rules:
                for m in current.sorted_terms():
                    if rule.applies(m):
                        choice = (rule, m)
                        break
                if choice:
                    break
        else:
            options = [(rule, m) for m in current.sorted_terms() for rule in rules if rule.applies(m)]
            choice = rng.choice(options) if options else None
        if choice is None:
            return current
        rule, m = choice
        produced = rule.apply(m)
        if trace is not None:
            trace.append(Step(rule.name, m, produced))
        current = current + A2Element.mono(m) + produced


def is_normal(e: A2Element, rules: tuple[Rule, ...] = RULES) -> bool:
    return not any(rule.applies(m) for m in e.terms for rule in rules)


def target_image(lam: str, i: int, j: int) -> A2Element:
    """P^i g^j phi(lambda); ``lam`` may be ``1``."""
    if i < 0 or j < 0:
        raise ValueError("i and j must be non-negative")
    return A2Element.mono(A2Monomial.of(P=i, g=j)) * a2_image(lam)


def verify_witness(witness: str, target: tuple[str, int, int], rng: Optional[random.Random] = None) -> bool:
    """Does phi(witness) agree with P^i g^j phi(lambda) after normalization?"""
    lam, i, j = target
    lhs = normalize(phi_named(witness), rng)
    rhs = normalize(target_image(lam, i, j), rng)
    return lhs == rhs


# --- table dump --------------------------------------------------------------

def format_rules(rules: tuple[Rule, ...] = RULES) -> str:
    lines = ["# motwedge-rules v1", "# name\tpattern\treplacement\tcitation\tstatus"]
    for r in rules:
        lines.append("\t".join([r.name, str(r.pattern), str(r.rhs), r.citation, "inferred" if r.inferred else "cited"]))
    return "\n".join(lines) + "\n"


def parse_rules(text: str) -> tuple[Rule, ...]:
    out = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 5:
            raise ParseError(f"bad rule line {line!r}")
        name, pat, rhs, cit, status = parts
        out.append(Rule(name, parse_a2_monomial(pat), parse_a2_element(rhs), cit, status == "inferred"))
    return tuple(out)
