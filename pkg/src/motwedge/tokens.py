"""ASCII names for Ext elements and their Unicode display forms.

A name is a product of atoms, each with an optional non-negative exponent.
The canonical ASCII form joins factors with ``*`` in a fixed atom order and
writes exponents as ``^n``; for example ``tau*Dh1*e0^2``.  The parser also
accepts the display form (``τΔh₁e₀²``), juxtaposition (``d0e0r``), ``·`` as
a separator and braces or parentheses around exponents.
"""

from __future__ import annotations

from .errors import ParseError

# Canonical atom order.  Juxtaposed names in the chart labels (``d₀gr``,
# ``PΔh₁e₀``) follow this order too.
ATOM_ORDER = ("tau", "P", "h1", "h2", "Dh1", "d0", "e0", "g", "i", "k", "r", "l", "m", "n")

DISPLAY = {
    "tau": "τ",
    "P": "P",
    "h1": "h₁",
    "h2": "h₂",
    "Dh1": "Δh₁",
    "d0": "d₀",
    "e0": "e₀",
    "g": "g",
    "i": "i",
    "k": "k",
    "r": "r",
    "l": "l",
    "m": "m",
    "n": "n",
}

_ALIASES = {
    "tau": "tau",
    "τ": "tau",
    "P": "P",
    "h1": "h1",
    "h₁": "h1",
    "h2": "h2",
    "h₂": "h2",
    "Dh1": "Dh1",
    "Delta_h1": "Dh1",
    "Deltah1": "Dh1",
    "Δh1": "Dh1",
    "Δh₁": "Dh1",
    "d0": "d0",
    "d₀": "d0",
    "d": "d0",
    "e0": "e0",
    "e₀": "e0",
    "g": "g",
    "i": "i",
    "k": "k",
    "r": "r",
    "l": "l",
    "m": "m",
    "n": "n",
}
# longest alias first so that "d0" wins over "d"
_ALIAS_KEYS = sorted(_ALIASES, key=len, reverse=True)

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_FROM_SUPERSCRIPT = {c: str(i) for i, c in enumerate("⁰¹²³⁴⁵⁶⁷⁸⁹")}
_SEPARATORS = " *·\t"

Factors = tuple  # tuple[tuple[str, int], ...] in ATOM_ORDER


def superscript(n: int) -> str:
    return str(n).translate(_SUPERSCRIPT)


def _read_exponent(text: str, pos: int) -> tuple[int, int]:
    if pos < len(text) and text[pos] in _FROM_SUPERSCRIPT:
        end = pos
        while end < len(text) and text[end] in _FROM_SUPERSCRIPT:
            end += 1
        return int("".join(_FROM_SUPERSCRIPT[c] for c in text[pos:end])), end
    if pos >= len(text) or text[pos] != "^":
        return 1, pos
    pos += 1
    close = None
    if pos < len(text) and text[pos] in "({":
        close = ")" if text[pos] == "(" else "}"
        pos += 1
    end = pos
    while end < len(text) and text[end].isdigit():
        end += 1
    if end == pos:
        raise ParseError(f"expected a non-negative integer exponent at position {pos} in {text!r}")
    value = int(text[pos:end])
    if close is not None:
        if end >= len(text) or text[end] != close:
            raise ParseError(f"unbalanced exponent bracket in {text!r}")
        end += 1
    return value, end


def parse_product(text: str) -> Factors:
    """Parse a product name into canonical ``((atom, exponent), ...)`` form.

    ``"1"`` and the empty string denote the unit.  Zero exponents are dropped
    and repeated atoms are merged.
    """
    text = text.strip()
    if text in ("", "1"):
        return ()
    exps: dict[str, int] = {}
    pos = 0
    while pos < len(text):
        if text[pos] in _SEPARATORS:
            pos += 1
            continue
        for key in _ALIAS_KEYS:
            if text.startswith(key, pos):
                atom = _ALIASES[key]
                pos += len(key)
                break
        else:
            raise ParseError(f"unrecognised symbol at position {pos} in {text!r}")
        exp, pos = _read_exponent(text, pos)
        exps[atom] = exps.get(atom, 0) + exp
    return tuple((a, exps[a]) for a in ATOM_ORDER if exps.get(a, 0) > 0)


def format_product(factors: Factors, unicode: bool = False) -> str:
    if not factors:
        return "1"
    if unicode:
        return "".join(DISPLAY[a] + (superscript(e) if e != 1 else "") for a, e in factors)
    return "*".join(a if e == 1 else f"{a}^{e}" for a, e in factors)


def canonical(text: str) -> str:
    """Canonical ASCII form of a product name."""
    return format_product(parse_product(text))


def display(text: str) -> str:
    """Unicode display form of a product name (``tau*g^2`` -> ``τg²``).

    Products of several named elements separated by ``.`` are displayed with
    a middle dot between the parts.
    """
    return "·".join(format_product(parse_product(part), unicode=True) for part in text.split("."))


def multiply(a: Factors, b: Factors) -> Factors:
    exps = dict(a)
    for atom, e in b:
        exps[atom] = exps.get(atom, 0) + e
    return tuple((x, exps[x]) for x in ATOM_ORDER if exps.get(x, 0) > 0)


def power(a: Factors, n: int) -> Factors:
    return tuple((x, e * n) for x, e in a if e * n > 0)


def exponent(factors: Factors, atom: str) -> int:
    return dict(factors).get(atom, 0)
