"""Text grammar for polynomials in t and x.

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('-' | '+') factor | atom ('^' INT)?
    atom   := INT | 't' | 'x' | '(' expr ')'

Parsing yields a bivariate integer polynomial as a dict {(deg_x, deg_t): coeff};
callers reduce it to Z[t], F_p[t], or a quadratic map.
"""

from __future__ import annotations

import re

from ..errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    text = text.replace("−", "-")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            ch = m.group(2)
            if ch not in "+-*^()tx":
                raise ParseError(f"unexpected character {ch!r}", m.start(2))
            tokens.append((ch, ch, m.start(2)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def _add(a: dict, b: dict, sign=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
        if out[k] == 0:
            del out[k]
    return out


def _mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + v1 * v2
    return {k: v for k, v in out.items() if v}


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        acc = self.term()
        while self.peek()[0] in "+-" and self.peek()[0] != "end":
            op = self.take()[0]
            acc = _add(acc, self.term(), 1 if op == "+" else -1)
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = _mul(acc, self.factor())
        return acc

    def factor(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return {k: -v for k, v in self.factor().items()}
        if kind == "+":
            self.take()
            return self.factor()
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            e = self.take("int")[1]
            out = {(0, 0): 1}
            for _ in range(e):
                out = _mul(out, base)
            return out
        return base

    def atom(self):
        kind, value, pos = self.take()
        if kind == "int":
            return {(0, 0): value} if value else {}
        if kind == "t":
            return {(0, 1): 1}
        if kind == "x":
            return {(1, 0): 1}
        if kind == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {value!r}", pos)


def parse_bivariate(text: str) -> dict:
    """Parse into {(deg_x, deg_t): integer coefficient}."""
    parser = _Parser(text)
    result = parser.expr()
    tok = parser.peek()
    if tok[0] != "end":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    return result


def parse_int_coeffs(text: str) -> list[int]:
    """Parse a polynomial in t alone into ascending integer coefficients."""
    terms = parse_bivariate(text)
    if any(i for i, _ in terms):
        raise ParseError("x is not allowed in a polynomial in t", text.find("x"))
    n = max((j for _, j in terms), default=-1) + 1
    coeffs = [0] * n
    for (_, j), v in terms.items():
        coeffs[j] = v
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _monomial(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def format_terms(coeffs, var: str = "t") -> str:
    """Format ascending coefficients (ints or preformatted strings) in descending order."""
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if isinstance(c, int):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mono = _monomial(var, e)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        else:
            if c is None:
                continue
            mono = _monomial(var, e)
            parts.append(("+", f"({c})*{mono}" if mono else f"({c})"))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


def format_poly(f, var: str = "t") -> str:
    """Format a Poly (residues in [0, p)) or IntPoly."""
    from .poly import Poly

    if isinstance(f, Poly):
        if f.desc.k == 1 or f.is_prime_field():
            return format_terms([int(v) for v in f.c[0]], var)
        coeffs = []
        for e in f.coeffs():
            if e.is_zero():
                coeffs.append(None)
            elif e.coords[1] == 0:
                coeffs.append(str(e.coords[0]))
            else:
                coeffs.append(str(e))
        return format_terms(coeffs, var)
    return format_terms(list(f.coeffs), var)
