"""Plain-text format for bracket polynomials.

One term per line, ``coeff : s1 s2 ... sn ; s1 ... sn ; ...``.  The
coefficient and colon may be left out (coefficient 1).  Blank lines and
anything after ``#`` are ignored.  An optional header line
``symbols=m base=0|1`` fixes the number of symbols and whether labels
start at 0 (as in ``[0123]``); internally symbols always start at 1.
"""

import re

from .core import BracketPolynomial, normalize_monomial
from .errors import ParseError, SymbolRangeError

_HEADER = re.compile(r"^\s*(symbols\s*=\s*\d+|base\s*=\s*[01])(\s+(symbols\s*=\s*\d+|base\s*=\s*[01]))*\s*$")


def _parse_header(line, lineno):
    opts = {}
    for part in line.split():
        key, _, value = part.partition("=")
        opts[key.strip()] = int(value)
    if "base" in opts and opts["base"] not in (0, 1):
        raise ParseError("base must be 0 or 1", lineno)
    return opts


def parse_tableau_file(text):
    """Parse text into a normalized bracket polynomial.

    Raises ``ParseError`` (with the line number) on malformed lines and
    ``SymbolRangeError`` for labels outside the declared range.
    """
    m = None
    base = 1
    header_allowed = True
    acc = {}
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if _HEADER.match(line):
            if not header_allowed:
                raise ParseError("header must come before any term", lineno)
            opts = _parse_header(line, lineno)
            m = opts.get("symbols", m)
            base = opts.get("base", base)
            continue
        header_allowed = False
        if line == "0":
            continue  # the zero polynomial
        coeff = 1
        body = line
        if ":" in line:
            head, _, body = line.partition(":")
            try:
                coeff = int(head.strip())
            except ValueError:
                raise ParseError(f"bad coefficient {head.strip()!r}", lineno) from None
        rows = []
        for chunk in body.split(";"):
            try:
                row = [int(tok) for tok in chunk.split()]
            except ValueError:
                raise ParseError(f"non-integer symbol in {chunk.strip()!r}", lineno) from None
            if not row:
                raise ParseError("empty row", lineno)
            rows.append([s - base + 1 for s in row])
        if len({len(r) for r in rows}) != 1:
            raise ParseError("rows of unequal length", lineno)
        if width is not None and len(rows[0]) != width:
            raise ParseError(f"width {len(rows[0])} differs from earlier width {width}", lineno)
        width = len(rows[0])
        for row in rows:
            for s in row:
                if s < 1 or (m is not None and s > m):
                    raise SymbolRangeError(f"line {lineno}: symbol {s + base - 1} out of range")
        norm = normalize_monomial(rows, coeff)
        if norm is None:
            continue
        c, t = norm
        v = acc.get(t, 0) + c
        if v:
            acc[t] = v
        else:
            acc.pop(t, None)
    return BracketPolynomial(acc)


def serialize_polynomial(p, base=1, header=False):
    """Text form of ``p``, largest term first; ``"0"`` for the zero polynomial."""
    if not p:
        return "0\n"
    lines = []
    if header or base != 1:
        m = max(s for _, t in p for row in t for s in row)
        lines.append(f"symbols={m} base={base}")
    for c, t in p:
        rows = " ; ".join(" ".join(str(s + base - 1) for s in row) for row in t)
        lines.append(f"{c} : {rows}")
    return "\n".join(lines) + "\n"


def parse_cases_file(text):
    """Split a cases file into ``{name: BracketPolynomial}``.

    A line ``== name`` starts a new case; a file without such lines is a
    single case called ``case``.  A header line before the first case
    applies to all cases.
    """
    cases = {}
    preamble, name, chunk, start = [], None, [], 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith("=="):
            if name is not None:
                cases[name] = _parse_chunk(preamble, chunk, start)
            name = raw[2:].strip()
            if not name or name in cases:
                raise ParseError(f"missing or repeated case name {name!r}", lineno)
            chunk, start = [], lineno + 1
        elif name is None:
            preamble.append(raw)
        else:
            chunk.append(raw)
    if name is None:
        return {"case": parse_tableau_file(text)} if text.strip() else {}
    cases[name] = _parse_chunk(preamble, chunk, start)
    return cases


def _parse_chunk(preamble, chunk, start):
    header = [line for line in preamble if line.split("#", 1)[0].strip()]
    for line in header:
        if not _HEADER.match(line.split("#", 1)[0]):
            raise ParseError(f"only a header may precede the first case: {line.strip()!r}")
    try:
        return parse_tableau_file("\n".join(header + chunk))
    except ParseError as exc:
        if exc.line is None:
            raise
        # report the position in the whole file
        shift = start - 1 - len(header)
        raise ParseError(str(exc).split(": ", 1)[1], exc.line + shift) from None


def serialize_cases(cases, base=1):
    """Inverse of ``parse_cases_file``."""
    return "".join(f"== {name}\n" + serialize_polynomial(p, base) for name, p in cases.items())
