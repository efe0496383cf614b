"""Surface syntax and JSON forms for quaternionic polynomials.

The expression language is deliberately small: `*` always means the star
product, coefficients are quaternions assembled from rational literals and
the units i, j, k, and the variables are either the one-variable `q` or the
pair `q1`, `q2`. Canonical printing puts coefficients to the right of the
monomials, mirroring the q^n a_n normal form, and parse(print(p)) lowers
back to p exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExprSyntaxError, MixedVariableError, SchemaError
from .orefield import OreFrac
from .polyone import Poly1, RealPoly
from .polytwo import VAR_Q1, VAR_Q2, Poly2
from .quaternion import ONE, Quaternion, Rational

SCHEMA_VERSION = 1

# ---------------------------------------------------------------------------
# syntax trees


@dataclass(frozen=True)
class RationalLit:
    value: object  # Rational


@dataclass(frozen=True)
class UnitLit:
    name: str  # "i" | "j" | "k"


@dataclass(frozen=True)
class Var:
    name: str  # "q" | "q1" | "q2"


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Sub:
    lhs: object
    rhs: object


@dataclass(frozen=True)
class StarMul:
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Conj:
    arg: object


@dataclass(frozen=True)
class Symm:
    arg: object


@dataclass(frozen=True)
class Paren:
    arg: object


# ---------------------------------------------------------------------------
# lexer

_UNITS = ("i", "j", "k")
_VARS = ("q", "q1", "q2")
_NAMES = ("conj", "symm")
_SYMBOLS = "+-*^()"
_DIGITS = "0123456789"


class _Token:
    __slots__ = ("kind", "text", "start", "end")

    def __init__(self, kind, text, start, end):
        self.kind = kind
        self.text = text
        self.start = start
        self.end = end

    def __repr__(self):
        return f"_Token({self.kind}, {self.text!r}, {self.start})"


def _tokenize(text: str) -> list[_Token]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch in " \t\r\n":
            pos += 1
            continue
        if ch in _SYMBOLS:
            toks.append(_Token(ch, ch, pos, pos + 1))
            pos += 1
            continue
        # ASCII digits only: str.isdigit also accepts characters such as
        # superscript digits that int() rejects.
        if ch in _DIGITS:
            start = pos
            while pos < n and text[pos] in _DIGITS:
                pos += 1
            if pos < n and text[pos] == "/":
                den_start = pos + 1
                if den_start < n and text[den_start] in _DIGITS:
                    pos = den_start
                    while pos < n and text[pos] in _DIGITS:
                        pos += 1
                    if int(text[den_start:pos]) == 0:
                        raise ExprSyntaxError("zero denominator in rational literal", start)
            toks.append(_Token("number", text[start:pos], start, pos))
            continue
        if ch.isalpha():
            start = pos
            while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            word = text[start:pos]
            if word in _UNITS:
                toks.append(_Token("unit", word, start, pos))
            elif word in _VARS:
                toks.append(_Token("var", word, start, pos))
            elif word in _NAMES:
                toks.append(_Token("name", word, start, pos))
            else:
                raise ExprSyntaxError(f"unknown name {word!r}", start)
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", pos)
    toks.append(_Token("end", "", n, n))
    return toks


# ---------------------------------------------------------------------------
# parser: additive < multiplicative < unary minus < power < atoms

_MAX_DEPTH = 200


class _Parser:
    __slots__ = ("toks", "pos")

    def __init__(self, toks):
        self.toks = toks
        self.pos = 0

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def take(self) -> _Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: tuple[str, ...]):
        tok = self.peek()
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ExprSyntaxError(f"unexpected {what}", tok.start, expected)

    def expr(self, depth=0):
        if depth > _MAX_DEPTH:
            raise ExprSyntaxError("expression nested too deeply", self.peek().start)
        node = self.term(depth + 1)
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.term(depth + 1)
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self, depth):
        if depth > _MAX_DEPTH:
            raise ExprSyntaxError("expression nested too deeply", self.peek().start)
        node = self.factor(depth + 1)
        while self.peek().kind == "*":
            self.take()
            node = StarMul(node, self.factor(depth + 1))
        return node

    def factor(self, depth):
        if depth > _MAX_DEPTH:
            raise ExprSyntaxError("expression nested too deeply", self.peek().start)
        if self.peek().kind == "-":
            self.take()
            return Neg(self.factor(depth + 1))
        return self.power(depth + 1)

    def power(self, depth):
        node = self.atom(depth + 1)
        if self.peek().kind == "^":
            self.take()
            tok = self.peek()
            if tok.kind != "number" or "/" in tok.text:
                self.fail(("non-negative integer exponent",))
            self.take()
            node = Pow(node, int(tok.text))
        return node

    def atom(self, depth):
        if depth > _MAX_DEPTH:
            raise ExprSyntaxError("expression nested too deeply", self.peek().start)
        tok = self.peek()
        if tok.kind == "number":
            self.take()
            lit = RationalLit(_rat_of_token(tok.text))
            nxt = self.peek()
            # a unit glued to a number ("2i", "3/2k") is one literal factor
            if nxt.kind == "unit" and nxt.start == tok.end:
                self.take()
                return StarMul(lit, UnitLit(nxt.text))
            return lit
        if tok.kind == "unit":
            self.take()
            return UnitLit(tok.text)
        if tok.kind == "var":
            self.take()
            return Var(tok.text)
        if tok.kind == "name":
            self.take()
            if self.peek().kind != "(":
                self.fail(("(",))
            self.take()
            inner = self.expr(depth + 1)
            if self.peek().kind != ")":
                self.fail((")",))
            self.take()
            return Conj(inner) if tok.text == "conj" else Symm(inner)
        if tok.kind == "(":
            # grouping does not leave a Paren node behind; the constructor
            # stays available for hand-built trees and lowers transparently
            self.take()
            inner = self.expr(depth + 1)
            if self.peek().kind != ")":
                self.fail((")",))
            self.take()
            return inner
        self.fail(("number", "i/j/k", "q/q1/q2", "conj", "symm", "("))


def _rat_of_token(text: str):
    if "/" in text:
        num, den = text.split("/")
        return Rational(int(num), int(den))
    return Rational(int(text))


def parse(text: str):
    """Parse the surface syntax into an Expr tree.

    Total on arbitrary strings: anything malformed raises ExprSyntaxError
    carrying the byte offset and the expected-token set.
    """
    parser = _Parser(_tokenize(text))
    node = parser.expr()
    if parser.peek().kind != "end":
        parser.fail(("operator", "end of input"))
    return node


# ---------------------------------------------------------------------------
# lowering


def variables(node) -> frozenset:
    if isinstance(node, Var):
        return frozenset((node.name,))
    if isinstance(node, (Neg, Conj, Symm, Paren)):
        return variables(node.arg)
    if isinstance(node, (Add, Sub, StarMul)):
        return variables(node.lhs) | variables(node.rhs)
    if isinstance(node, Pow):
        return variables(node.base)
    return frozenset()


_UNIT_VALUES = {
    "i": Quaternion(0, 1, 0, 0),
    "j": Quaternion(0, 0, 1, 0),
    "k": Quaternion(0, 0, 0, 1),
}


def _lower_in(node, env: dict):
    if isinstance(node, RationalLit):
        return env["const"](Quaternion(node.value))
    if isinstance(node, UnitLit):
        return env["const"](_UNIT_VALUES[node.name])
    if isinstance(node, Var):
        return env[node.name]
    if isinstance(node, Paren):
        return _lower_in(node.arg, env)
    if isinstance(node, Neg):
        return -_lower_in(node.arg, env)
    if isinstance(node, Add):
        return _lower_in(node.lhs, env) + _lower_in(node.rhs, env)
    if isinstance(node, Sub):
        return _lower_in(node.lhs, env) - _lower_in(node.rhs, env)
    if isinstance(node, StarMul):
        return _lower_in(node.lhs, env) * _lower_in(node.rhs, env)
    if isinstance(node, Pow):
        return _lower_in(node.base, env).star_pow(node.exponent)
    if isinstance(node, Conj):
        return _lower_in(node.arg, env).conj()
    if isinstance(node, Symm):
        return env["symm"](_lower_in(node.arg, env))
    raise TypeError(f"not an expression node: {node!r}")


_ENV1 = {
    "const": Poly1.const,
    "q": Poly1((Quaternion(0), ONE)),
    "symm": lambda p: p.symm().to_poly1(),
}
_ENV2 = {
    "const": Poly2.const,
    "q1": VAR_Q1,
    "q2": VAR_Q2,
    "symm": lambda p: p.symm(),
}


def lower(node):
    """Expr -> Poly1 or Poly2 by its variable set; constants lower to Poly1."""
    used = variables(node)
    if "q" in used and used & {"q1", "q2"}:
        raise MixedVariableError("expression mixes q with q1/q2")
    if used <= {"q"}:
        return _lower_in(node, _ENV1)
    return _lower_in(node, _ENV2)


def lower1(node) -> Poly1:
    used = variables(node)
    if used - {"q"}:
        raise MixedVariableError("expected a polynomial in q alone")
    return _lower_in(node, _ENV1)


def lower2(node) -> Poly2:
    used = variables(node)
    if "q" in used:
        raise MixedVariableError("expected a polynomial in q1, q2")
    return _lower_in(node, _ENV2)


# ---------------------------------------------------------------------------
# canonical printer


def _comp_pieces(c: Quaternion) -> list[tuple[int, str]]:
    """Signed single-component pieces of a constant, like -1j or 3/2."""
    pieces = []
    for value, unit in ((c.w, ""), (c.x, "i"), (c.y, "j"), (c.z, "k")):
        if not value:
            continue
        sign = 1 if value > 0 else -1
        pieces.append((sign, f"{abs(value)}{unit}"))
    return pieces


def _mono_text(n: int, m: int, one_var: bool) -> str:
    if one_var:
        return "" if n == 0 else ("q" if n == 1 else f"q^{n}")
    parts = []
    if n:
        parts.append("q1" if n == 1 else f"q1^{n}")
    if m:
        parts.append("q2" if m == 1 else f"q2^{m}")
    return "*".join(parts)


def _term_pieces(mono: str, c: Quaternion) -> list[tuple[int, str]]:
    pieces = _comp_pieces(c)
    if not mono:
        return pieces
    if len(pieces) == 1:
        sign, text = pieces[0]
        if text == "1":
            return [(sign, mono)]
        return [(sign, f"{mono}*{text}")]
    joined = _join_pieces(pieces)
    return [(1, f"{mono}*({joined})")]


def _join_pieces(pieces: list[tuple[int, str]]) -> str:
    out = []
    for idx, (sign, text) in enumerate(pieces):
        if idx == 0:
            out.append(f"-{text}" if sign < 0 else text)
        else:
            out.append(f" - {text}" if sign < 0 else f" + {text}")
    return "".join(out)


def _term_list(p) -> list[tuple[int, int, Quaternion, bool]]:
    # graded lexicographic order on (n, m), constants first
    if isinstance(p, Poly1):
        return [(n, 0, c, True) for n, c in enumerate(p.coeffs) if c]
    terms = [
        (n, m, c, False)
        for n, row in enumerate(p.coeffs)
        for m, c in enumerate(row)
        if c
    ]
    terms.sort(key=lambda t: (t[0] + t[1], t[0], t[1]))
    return terms


def print_poly(p) -> str:
    """Canonical text form; parse(print_poly(p)) lowers back to p."""
    pieces = []
    for n, m, c, one_var in _term_list(p):
        pieces.extend(_term_pieces(_mono_text(n, m, one_var), c))
    if not pieces:
        return "0"
    return _join_pieces(pieces)


def _latex_rat(value) -> str:
    num, den = value.numerator, value.denominator
    if den == 1:
        return str(num)
    if num < 0:
        return f"-\\tfrac{{{-num}}}{{{den}}}"
    return f"\\tfrac{{{num}}}{{{den}}}"


def _latex_mono(n: int, m: int, one_var: bool) -> str:
    def power(base, e):
        return "" if e == 0 else (base if e == 1 else f"{base}^{{{e}}}")

    if one_var:
        return power("q", n)
    return power("q_1", n) + power("q_2", m)


def print_latex(p) -> str:
    """Plain LaTeX form of the same canonical ordering; no round-trip law."""
    chunks = []
    for n, m, c, one_var in _term_list(p):
        mono = _latex_mono(n, m, one_var)
        comp = [
            (1 if v > 0 else -1, f"{_latex_rat(abs(v))}{u}")
            for v, u in ((c.w, ""), (c.x, "i"), (c.y, "j"), (c.z, "k"))
            if v
        ]
        if not mono:
            chunks.extend(comp)
        elif len(comp) == 1:
            sign, text = comp[0]
            chunks.append((sign, mono if text == "1" else f"{mono}\\,{text}"))
        else:
            chunks.append((1, f"{mono}\\,\\left({_join_pieces(comp)}\\right)"))
    if not chunks:
        return "0"
    return _join_pieces(chunks)


# ---------------------------------------------------------------------------
# JSON forms (versioned)


def _rat_text(value) -> str:
    return str(value)


def _rat_value(raw):
    if isinstance(raw, bool):
        raise SchemaError(f"not a rational: {raw!r}")
    if isinstance(raw, int):
        return Rational(raw)
    if isinstance(raw, str):
        try:
            if "/" in raw:
                num, den = raw.split("/")
                return Rational(int(num), int(den))
            return Rational(int(raw))
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"not a rational: {raw!r}") from exc
    raise SchemaError(f"not a rational: {raw!r}")


def _quat_json(c: Quaternion) -> list[str]:
    return [_rat_text(c.w), _rat_text(c.x), _rat_text(c.y), _rat_text(c.z)]


def _quat_value(raw) -> Quaternion:
    if not isinstance(raw, (list, tuple)) or len(raw) != 4:
        raise SchemaError(f"quaternion must be a 4-element list, got {raw!r}")
    return Quaternion(*(_rat_value(v) for v in raw))


def _check_header(doc, schema: str):
    if not isinstance(doc, dict):
        raise SchemaError("document must be an object")
    if doc.get("schema") != schema:
        raise SchemaError(f"expected schema {schema!r}, got {doc.get('schema')!r}")
    if doc.get("version") != SCHEMA_VERSION:
        raise SchemaError(f"unsupported version {doc.get('version')!r}")


def poly1_to_json(p: Poly1) -> dict:
    return {
        "schema": "skewres/poly1",
        "version": SCHEMA_VERSION,
        "coeffs": [_quat_json(c) for c in p.coeffs],
    }


def poly1_from_json(doc) -> Poly1:
    _check_header(doc, "skewres/poly1")
    coeffs = doc.get("coeffs")
    if not isinstance(coeffs, list):
        raise SchemaError("coeffs must be a list")
    return Poly1([_quat_value(c) for c in coeffs])


def poly2_to_json(p: Poly2) -> dict:
    return {
        "schema": "skewres/poly2",
        "version": SCHEMA_VERSION,
        "grid": [[_quat_json(c) for c in row] for row in p.coeffs],
    }


def poly2_from_json(doc) -> Poly2:
    _check_header(doc, "skewres/poly2")
    grid = doc.get("grid")
    if not isinstance(grid, list) or any(not isinstance(row, list) for row in grid):
        raise SchemaError("grid must be a list of rows")
    return Poly2([[_quat_value(c) for c in row] for row in grid])


def _real_json(rp: RealPoly) -> list[str]:
    return [_rat_text(c) for c in rp.coeffs]


def matrix_to_json(mat) -> dict:
    return {
        "schema": "skewres/matrix",
        "version": SCHEMA_VERSION,
        "entries": [
            [{"den": [_quat_json(c) for c in e.den.coeffs],
              "num": [_quat_json(c) for c in e.num.coeffs]} for e in row]
            for row in mat.entries
        ],
    }


def matrix_from_json(doc):
    from .dieudonne import SkewMatrix

    _check_header(doc, "skewres/matrix")
    entries = doc.get("entries")
    if not isinstance(entries, list) or any(not isinstance(row, list) for row in entries):
        raise SchemaError("entries must be a list of rows")
    rows = []
    for row in entries:
        out = []
        for cell in row:
            if not isinstance(cell, dict) or set(cell) != {"den", "num"}:
                raise SchemaError("matrix entries need den and num")
            den = Poly1([_quat_value(c) for c in cell["den"]])
            num = Poly1([_quat_value(c) for c in cell["num"]])
            out.append(OreFrac(den, num))
        rows.append(out)
    return SkewMatrix(rows)


def report_to_json(report, include_representative: bool = True) -> dict:
    """ResultantReport as a JSON document; representative extraction is the
    only potentially slow field and can be switched off."""
    num, den = report.sdet
    doc = {
        "schema": "skewres/resultant",
        "version": SCHEMA_VERSION,
        "wrt": report.wrt,
        "size": report.sylvester.nrows,
        "is_zero": report.is_zero,
        "sdet": {"num": _real_json(num), "den": _real_json(den)},
        "sylvester": matrix_to_json(report.sylvester),
    }
    if include_representative:
        rep = report.representative
        doc["representative"] = None if rep is None else poly1_to_json(rep)
    return doc
