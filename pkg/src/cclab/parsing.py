"""Expression and system-definition parsing.

The expression grammar builds exact ``Poly2`` values directly (no AST is
kept).  It accepts integer literals, ratio literals such as ``13/6``, the two
declared variable names, binary ``+ - * /``, unary minus, ``^`` with a
nonnegative integer exponent, and parentheses.  Multiplication is always
explicit: ``2x`` is a syntax error, ``2*x`` is not.  Precedence, tightest
first: ``^``, unary minus, ``* /``, binary ``+ -``; ``^`` associates to the
right, everything else to the left.

Division is only defined by a nonzero numeric value: the right operand of
``/`` must fold to a rational constant.  ``x/2`` and ``(x+y)/(1/2)`` are
fine; ``1/x`` is rejected with a semantic diagnostic.

Failures raise :class:`ParseError` carrying a :class:`ParseDiagnostic` with a
byte offset into the input, a message, and a coarse kind (``lex``,
``syntax`` or ``semantic``).  The parser is total: any input up to 64 KiB
either parses or produces a diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import Poly2
from .systems import PlanarSystem

MAX_INPUT_BYTES = 65536
MAX_EXPONENT = 9999
MAX_DEPTH = 200


@dataclass(frozen=True)
class ParseDiagnostic:
    byte_offset: int
    message: str
    kind: str  # "lex" | "syntax" | "semantic"


class ParseError(Exception):
    def __init__(self, diagnostic: ParseDiagnostic):
        super().__init__(f"{diagnostic.kind} error at byte {diagnostic.byte_offset}: "
                         f"{diagnostic.message}")
        self.diagnostic = diagnostic


def _fail(offset: int, message: str, kind: str):
    raise ParseError(ParseDiagnostic(offset, message, kind))


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "ident" | "op" | "end"
    text: str
    offset: int


_OPERATOR_CHARS = set("+-*/^()")


def _is_digit(ch: str) -> bool:
    return "0" <= ch <= "9"


def _is_word(ch: str) -> bool:
    return "a" <= ch <= "z" or "A" <= ch <= "Z" or ch == "_"


def _byte_offset(text: str, index: int) -> int:
    """Byte offset of character index ``index`` in UTF-8."""
    return len(text[:index].encode("utf-8"))


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        start = i
        if _is_digit(ch):
            while i < n and _is_digit(text[i]):
                i += 1
            if i < n and _is_word(text[i]):
                _fail(_byte_offset(text, i), "malformed numeric literal", "lex")
            tokens.append(_Token("int", text[start:i], _byte_offset(text, start)))
            continue
        if _is_word(ch):
            while i < n and (_is_word(text[i]) or _is_digit(text[i])):
                i += 1
            tokens.append(_Token("ident", text[start:i], _byte_offset(text, start)))
            continue
        if ch in _OPERATOR_CHARS:
            tokens.append(_Token("op", ch, _byte_offset(text, start)))
            i += 1
            continue
        _fail(_byte_offset(text, start), f"unexpected character {ch!r}", "lex")
    tokens.append(_Token("end", "", _byte_offset(text, n)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], varnames: tuple[str, str], base_offset: int):
        self.tokens = tokens
        self.pos = 0
        self.varnames = varnames
        self.base = base_offset
        self.depth = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, tok: _Token, message: str, kind: str):
        _fail(self.base + tok.offset, message, kind)

    # binary +, - at precedence 1; *, / at precedence 2
    def parse_sum(self) -> Poly2:
        left = self.parse_product()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                right = self.parse_product()
                left = left + right if tok.text == "+" else left - right
            else:
                return left

    def parse_product(self) -> Poly2:
        left = self.parse_unary()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.advance()
                left = left * self.parse_unary()
            elif tok.kind == "op" and tok.text == "/":
                self.advance()
                divisor_tok = self.peek()
                divisor = self.parse_unary()
                value = divisor.constant_value()
                if value is None:
                    self.fail(divisor_tok, "division by a non-literal expression",
                              "semantic")
                if value == 0:
                    self.fail(divisor_tok, "division by zero", "semantic")
                left = left.scale(Fraction(1) / value)
            else:
                return left

    def parse_unary(self) -> Poly2:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            self.depth += 1
            if self.depth > MAX_DEPTH:
                self.fail(tok, "expression nesting too deep", "syntax")
            result = -self.parse_unary()
            self.depth -= 1
            return result
        return self.parse_power()

    def parse_power(self) -> Poly2:
        base = self.parse_atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            exp_tok = self.peek()
            self.depth += 1
            if self.depth > MAX_DEPTH:
                self.fail(exp_tok, "expression nesting too deep", "syntax")
            exponent = self.parse_unary()  # right-associative: x^2^3 == x^(2^3)
            self.depth -= 1
            value = exponent.constant_value()
            if value is None or value.denominator != 1 or value < 0:
                self.fail(exp_tok, "exponent must be a nonnegative integer", "semantic")
            if value > MAX_EXPONENT:
                self.fail(exp_tok, f"exponent exceeds the supported maximum "
                                   f"({MAX_EXPONENT})", "semantic")
            return base ** int(value)
        return base

    def parse_atom(self) -> Poly2:
        tok = self.advance()
        if tok.kind == "int":
            return Poly2.constant(int(tok.text), self.varnames)
        if tok.kind == "ident":
            if tok.text not in self.varnames:
                self.fail(tok, f"unknown variable {tok.text!r}; declared variables are "
                               f"{self.varnames[0]!r} and {self.varnames[1]!r}",
                          "semantic")
            return Poly2.variable(tok.text, self.varnames)
        if tok.kind == "op" and tok.text == "(":
            self.depth += 1
            if self.depth > MAX_DEPTH:
                self.fail(tok, "expression nesting too deep", "syntax")
            inner = self.parse_sum()
            self.depth -= 1
            closer = self.advance()
            if not (closer.kind == "op" and closer.text == ")"):
                self.fail(closer, "expected ')'", "syntax")
            return inner
        if tok.kind == "end":
            self.fail(tok, "unexpected end of input", "syntax")
        self.fail(tok, f"unexpected token {tok.text!r}", "syntax")
        raise AssertionError("unreachable")


def parse_expression(
    text: str, varnames: tuple[str, str], base_offset: int = 0
) -> Poly2:
    """Parse one expression into an exact polynomial over ``varnames``."""
    if len(text.encode("utf-8")) > MAX_INPUT_BYTES:
        _fail(base_offset, "input exceeds 64 KiB", "lex")
    try:
        tokens = _tokenize(text)
    except ParseError as exc:
        d = exc.diagnostic
        raise ParseError(ParseDiagnostic(d.byte_offset + base_offset, d.message,
                                         d.kind)) from None
    parser = _Parser(tokens, varnames, base_offset)
    result = parser.parse_sum()
    trailing = parser.peek()
    if trailing.kind != "end":
        parser.fail(trailing, f"unexpected token {trailing.text!r} after expression"
                              " (multiplication must be written with '*')", "syntax")
    return result


def parse_rational(text: str) -> Fraction:
    """Parse a standalone rational such as ``-80/289`` (used by the CLI)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(ParseDiagnostic(0, f"not a rational number: {text!r}",
                                         "lex")) from None


# --- system definition files -------------------------------------------------
#
# Format, one declaration per line ('#' starts a comment, blank lines ignored):
#
#     vars: x y
#     dx = -y + x*(x^2 + y^2 - 1)
#     dy = x + y*(x^2 + y^2 - 1)
#     label = optional free text
#
# The component lines are named after the declared variables ("du = ..." when
# the variables are u and v).  Offsets in diagnostics are byte offsets into
# the full file text.


def parse_system(text: str, label: str | None = None) -> PlanarSystem:
    """Parse a system definition file into a :class:`PlanarSystem`."""
    if len(text.encode("utf-8")) > MAX_INPUT_BYTES:
        _fail(0, "input exceeds 64 KiB", "lex")
    varnames: tuple[str, str] | None = None
    components: dict[str, Poly2] = {}
    file_label: str | None = None
    offset = 0
    for raw_line in text.split("\n"):
        line_start = offset
        offset += len(raw_line.encode("utf-8")) + 1
        line = raw_line.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.strip()
        indent = len(line) - len(line.lstrip())
        content_start = line_start + len(line[:indent].encode("utf-8"))
        if stripped.startswith("vars:"):
            if varnames is not None:
                _fail(content_start, "duplicate vars declaration", "semantic")
            names = stripped[len("vars:"):].split()
            if len(names) != 2:
                _fail(content_start, "vars line must declare exactly two variables",
                      "semantic")
            if not all(n.isidentifier() for n in names) or names[0] == names[1]:
                _fail(content_start, f"invalid variable declaration: {names}",
                      "semantic")
            varnames = (names[0], names[1])
            continue
        if "=" not in stripped:
            _fail(content_start, f"unrecognized line: {stripped!r}", "syntax")
        key, _, rhs = line.partition("=")
        key_name = key.strip()
        if key_name == "label":
            file_label = rhs.strip()
            continue
        if varnames is None:
            _fail(content_start, "vars must be declared before the components",
                  "semantic")
        expected = {f"d{varnames[0]}": varnames[0], f"d{varnames[1]}": varnames[1]}
        if key_name not in expected:
            _fail(content_start, f"unrecognized key {key_name!r}; expected one of "
                                 f"{sorted(expected)} or 'label'", "semantic")
        if expected[key_name] in components:
            _fail(content_start, f"duplicate component {key_name!r}", "semantic")
        rhs_offset = line_start + len((raw_line.split("#", 1)[0][:len(key) + 1])
                                      .encode("utf-8"))
        components[expected[key_name]] = parse_expression(rhs, varnames, rhs_offset)
    if varnames is None:
        _fail(0, "missing vars declaration", "semantic")
    missing = [v for v in varnames if v not in components]
    if missing:
        _fail(len(text.encode("utf-8")),
              f"missing component d{missing[0]}", "semantic")
    try:
        return PlanarSystem(
            components[varnames[0]],
            components[varnames[1]],
            varnames,
            label if label is not None else file_label,
        )
    except ValueError as exc:
        _fail(0, str(exc), "semantic")
        raise AssertionError("unreachable")
