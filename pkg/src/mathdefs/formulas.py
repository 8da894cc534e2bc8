"""Tokenize texvc/TeX formula source and extract normalized identifiers.

Identifier normalization is deliberately conservative: ``\\text{}``-style
bodies are dropped before analysis, subscripts longer than one character
are stripped (the base letter survives), superscripts never contribute,
and a configurable blacklist removes single letters and operator names
that are too common in running prose to match reliably.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from importlib import resources

logger = logging.getLogger(__name__)

# TeX control sequences whose brace argument is plain prose, not math.
TEXT_COMMANDS = frozenset(
    {"text", "mathrm", "mbox", "textrm", "textit", "texttt", "textbf", "hbox"}
)

GREEK = {
    "alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ",
    "epsilon": "ε", "varepsilon": "ε", "zeta": "ζ", "eta": "η",
    "theta": "θ", "vartheta": "θ", "iota": "ι", "kappa": "κ",
    "lambda": "λ", "mu": "μ", "nu": "ν", "xi": "ξ", "omicron": "ο",
    "pi": "π", "varpi": "π", "rho": "ρ", "varrho": "ρ",
    "sigma": "σ", "varsigma": "σ", "tau": "τ", "upsilon": "υ",
    "phi": "φ", "varphi": "φ", "chi": "χ", "psi": "ψ", "omega": "ω",
    "Gamma": "Γ", "Delta": "Δ", "Theta": "Θ", "Lambda": "Λ",
    "Xi": "Ξ", "Pi": "Π", "Sigma": "Σ", "Upsilon": "Υ",
    "Phi": "Φ", "Psi": "Ψ", "Omega": "Ω",
}

# Reverse map for prose aliases; prefer the plain name over var* forms.
GREEK_NAMES = {}
for _name, _char in GREEK.items():
    if _char not in GREEK_NAMES or not _name.startswith("var"):
        GREEK_NAMES.setdefault(_char, _name)

_LATIN = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"


@dataclass(frozen=True)
class TexToken:
    """One lexical unit of a formula.

    kind is one of: control, letter, digit, lbrace, rbrace, sub, sup,
    text (opaque ``\\text{...}`` body), symbol.
    """

    kind: str
    value: str


def tokenize_tex(tex: str) -> list[TexToken]:
    """Split TeX source into classified tokens; whitespace is discarded.

    Never raises: unbalanced braces tokenize best-effort to the end of
    the string (a debug message is logged).
    """
    tokens: list[TexToken] = []
    i, n = 0, len(tex)
    depth = 0
    while i < n:
        ch = tex[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "\\":
            j = i + 1
            while j < n and tex[j] in _LATIN:
                j += 1
            if j == i + 1:
                # escaped single char such as \{ or \,
                name = tex[i + 1 : i + 2]
                tokens.append(TexToken("control", name))
                i = min(i + 2, n)
                continue
            name = tex[i + 1 : j]
            i = j
            if name in TEXT_COMMANDS:
                body, i = _read_group(tex, i)
                tokens.append(TexToken("text", body))
            else:
                tokens.append(TexToken("control", name))
            continue
        if ch == "{":
            depth += 1
            tokens.append(TexToken("lbrace", ch))
        elif ch == "}":
            depth -= 1
            tokens.append(TexToken("rbrace", ch))
        elif ch == "_":
            tokens.append(TexToken("sub", ch))
        elif ch == "^":
            tokens.append(TexToken("sup", ch))
        elif ch in _LATIN:
            tokens.append(TexToken("letter", ch))
        elif ch.isdigit():
            tokens.append(TexToken("digit", ch))
        elif ch in GREEK_NAMES:
            # literal Greek characters occasionally appear in texvc input
            tokens.append(TexToken("control", GREEK_NAMES[ch]))
        else:
            tokens.append(TexToken("symbol", ch))
        i += 1
    if depth != 0:
        logger.debug("unbalanced braces in formula: %r", tex)
    return tokens


def _read_group(tex: str, i: int) -> tuple[str, int]:
    """Read an optionally braced argument starting at index i.

    Returns (content, next index). Whitespace before the argument is
    skipped; an unterminated group extends to the end of the string.
    """
    n = len(tex)
    while i < n and tex[i].isspace():
        i += 1
    if i >= n:
        return "", i
    if tex[i] != "{":
        return tex[i], i + 1
    depth = 0
    j = i
    while j < n:
        if tex[j] == "{":
            depth += 1
        elif tex[j] == "}":
            depth -= 1
            if depth == 0:
                return tex[i + 1 : j], j + 1
        j += 1
    logger.debug("unterminated group in formula: %r", tex[i:])
    return tex[i + 1 :], n


class Blacklist:
    """Immutable set of symbol names that must never become identifiers.

    Entries are single letters too common in English prose plus the
    names of operators, constants, and functions.
    """

    def __init__(self, entries):
        self.entries = frozenset(entries)
        if not self.entries:
            raise ValueError("blacklist must not be empty")

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def from_file(cls, path) -> "Blacklist":
        entries = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    entries.append(line)
        return cls(entries)

    @classmethod
    def default(cls) -> "Blacklist":
        ref = resources.files("mathdefs.data").joinpath("blacklist.txt")
        with resources.as_file(ref) as path:
            return cls.from_file(path)


@dataclass(frozen=True)
class Identifier:
    """A normalized single-letter symbol, e.g. ``E``, ``σ``, or ``x_0``."""

    symbol: str
    display: str

    @property
    def base(self) -> str:
        return self.symbol.split("_", 1)[0]

    @property
    def subscript(self) -> str | None:
        if "_" in self.symbol:
            return self.symbol.split("_", 1)[1]
        return None

    def prose_aliases(self) -> frozenset[str]:
        """Surface forms that count as a mention of this identifier."""
        aliases = {self.symbol}
        base = self.base
        if base in GREEK_NAMES:
            name = GREEK_NAMES[base]
            sub = self.subscript
            aliases.add(name if sub is None else f"{name}_{sub}")
        return frozenset(aliases)


@dataclass
class Formula:
    """One ``<math/>`` block with its extracted identifier set."""

    block_index: int
    tex: str
    identifiers: list[Identifier] = field(default_factory=list)


def _render_subscript(arg: list[TexToken]) -> str | None:
    """Render a subscript argument to the string a reader would see.

    Returns None when the subscript contains anything beyond plain
    letters, digits, or Greek letters (commands, operators, nesting);
    such subscripts are always treated as removable annotations.
    """
    out = []
    for tok in arg:
        if tok.kind in ("letter", "digit"):
            out.append(tok.value)
        elif tok.kind == "control" and tok.value in GREEK:
            out.append(GREEK[tok.value])
        elif tok.kind in ("lbrace", "rbrace"):
            continue
        else:
            return None
    return "".join(out)


def _take_argument(tokens: list[TexToken], i: int) -> tuple[list[TexToken], int]:
    """Collect the argument of a ``_``/``^`` marker starting at i."""
    n = len(tokens)
    if i >= n:
        return [], i
    if tokens[i].kind == "lbrace":
        depth = 0
        j = i
        while j < n:
            if tokens[j].kind == "lbrace":
                depth += 1
            elif tokens[j].kind == "rbrace":
                depth -= 1
                if depth == 0:
                    return tokens[i : j + 1], j + 1
            j += 1
        return tokens[i:], n
    return [tokens[i]], i + 1


def extract_identifiers(tex: str, blacklist: Blacklist | None = None) -> list[Identifier]:
    """Extract the ordered, deduplicated identifier set of a formula.

    Rules, applied in order: opaque text bodies are dropped; a letter or
    Greek-letter command is an identifier candidate; a subscript is kept
    only when it renders to exactly one character, otherwise the bare
    base letter is kept; superscript arguments are skipped wholesale (a
    letter inside ``^{...}`` is never an identifier); primes are kept in
    the display form but not the symbol; blacklisted symbols (matched on
    the symbol itself and, for Greek, its spelled-out name) are removed.
    """
    if blacklist is None:
        blacklist = Blacklist.default()
    tokens = [t for t in tokenize_tex(tex) if t.kind != "text"]
    found: list[Identifier] = []
    seen: set[str] = set()
    i, n = 0, len(tokens)
    while i < n:
        tok = tokens[i]
        base = None
        display = None
        if tok.kind == "letter":
            base, display = tok.value, tok.value
        elif tok.kind == "control" and tok.value in GREEK:
            base, display = GREEK[tok.value], "\\" + tok.value
        if base is None:
            if tok.kind in ("sub", "sup"):
                # scripts on a non-letter base (groups, \sum limits):
                # their contents never contribute identifiers
                _, i = _take_argument(tokens, i + 1)
            else:
                i += 1
            continue
        i += 1
        subscript = None
        sub_display = ""
        primes = 0
        while i < n:
            if tokens[i].kind == "symbol" and tokens[i].value == "'":
                primes += 1
                i += 1
                continue
            if tokens[i].kind == "control" and tokens[i].value == "prime":
                primes += 1
                i += 1
                continue
            if tokens[i].kind == "sup":
                _, i = _take_argument(tokens, i + 1)
                continue
            if tokens[i].kind == "sub":
                arg, i = _take_argument(tokens, i + 1)
                rendered = _render_subscript(arg)
                if rendered is not None and len(rendered) == 1:
                    subscript = rendered
                    sub_display = "_" + rendered
                continue
            break
        symbol = base if subscript is None else f"{base}_{subscript}"
        display = display + "'" * primes + sub_display
        ident = Identifier(symbol=symbol, display=display)
        if symbol in seen:
            continue
        if symbol in blacklist:
            continue
        if any(alias in blacklist for alias in ident.prose_aliases()):
            continue
        seen.add(symbol)
        found.append(ident)
    return found


def analyze_formulas(math_blocks, blacklist: Blacklist | None = None) -> list[Formula]:
    """Run identifier extraction over ``(block_index, tex)`` pairs."""
    if blacklist is None:
        blacklist = Blacklist.default()
    return [
        Formula(block_index=k, tex=tex, identifiers=extract_identifiers(tex, blacklist))
        for k, tex in math_blocks
    ]


def document_identifiers(parsed, blacklist: Blacklist | None = None) -> list[Identifier]:
    """Union of all formula identifiers in first-occurrence order."""
    seen: set[str] = set()
    out: list[Identifier] = []
    for formula in analyze_formulas(parsed.math_blocks, blacklist):
        for ident in formula.identifiers:
            if ident.symbol not in seen:
                seen.add(ident.symbol)
                out.append(ident)
    return out
