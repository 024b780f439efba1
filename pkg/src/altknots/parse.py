"""Parser for knot expressions such as ``T(3,7) - T(4,5)`` or ``2*T(3,7) + 3*K[2]``.

Grammar (whitespace-insensitive)::

    expr := [sign] term (op [sign] term)*      op := '+' | '-' | '#'
    term := [integer '*'] atom
    atom := 'T(' int ',' int ')' | 'K[' int ']' | 'M(' path ')' | 'D(' name ')'

``-`` is the mirror (concordance inverse) and ``#`` is connected sum.  An
empty string or ``0`` is the unknot.
"""

from __future__ import annotations

from pathlib import Path

from .knots import Declared, DeltaKnot, KnotExpr, MatrixKnot, Torus, UnknownDeclared, declared
from .seifert import InvalidSeifertMatrix, load_matrix
from .upsilon import NotCoprime

__all__ = ["ParseError", "parse_expr", "render_expr"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


def _linecol(src: str, pos: int) -> tuple[int, int]:
    line = src.count("\n", 0, pos) + 1
    col = pos - (src.rfind("\n", 0, pos) + 1) + 1
    return line, col


class _Parser:
    def __init__(self, src: str, matrix_dir):
        self.src = src
        self.pos = 0
        self.matrix_dir = Path(matrix_dir) if matrix_dir else None

    def error(self, msg, pos=None, cls=ParseError):
        line, col = _linecol(self.src, self.pos if pos is None else pos)
        if cls is ParseError:
            raise ParseError(msg, line, col)
        raise cls(f"{msg} (line {line}, column {col})")

    def ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def integer(self) -> int:
        self.ws()
        start = self.pos
        if self.pos < len(self.src) and self.src[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        text = self.src[start:self.pos]
        if not text or text == "-":
            self.pos = start
            self.error("expected an integer")
        return int(text)

    def balanced(self, close: str) -> str:
        """Raw text up to the matching close paren; nested parens allowed."""
        start = self.pos
        depth = 0
        while self.pos < len(self.src):
            ch = self.src[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0:
                    text = self.src[start:self.pos].strip()
                    self.pos += 1
                    return text
                depth -= 1
            self.pos += 1
        self.error("unterminated argument", start)

    def atom(self):
        self.ws()
        start = self.pos
        head = self.peek()
        if head == "T":
            self.pos += 1
            self.expect("(")
            p = self.integer()
            self.expect(",")
            q = self.integer()
            self.expect(")")
            p, q = sorted((p, q))
            try:
                return Torus(p, q)
            except NotCoprime as exc:
                self.error(str(exc), start, NotCoprime)
            except ValueError as exc:
                self.error(str(exc), start)
        if head == "K":
            self.pos += 1
            self.expect("[")
            n = self.integer()
            self.expect("]")
            if n < 1:
                self.error("K[n] needs n >= 1", start)
            return DeltaKnot(n)
        if head == "M":
            self.pos += 1
            self.expect("(")
            path = self.balanced(")")
            full = Path(path)
            if self.matrix_dir is not None and not full.is_absolute():
                full = self.matrix_dir / full
            try:
                V = load_matrix(full)
            except FileNotFoundError:
                self.error(f"matrix file not found: {full}", start)
            except InvalidSeifertMatrix as exc:
                self.error(f"bad matrix file {full}: {exc}", start)
            return MatrixKnot(V, path)
        if head == "D":
            self.pos += 1
            self.expect("(")
            name = self.balanced(")")
            try:
                declared(name)
            except UnknownDeclared:
                self.error(f"unknown declared knot {name!r}", start)
            return Declared(name)
        self.error(f"expected T(p,q), K[n], M(path) or D(name), found {head or 'end of input'!r}")

    def term(self):
        self.ws()
        coeff = 1
        if self.peek().isdigit():
            coeff = self.integer()
            self.expect("*")
        return coeff, self.atom()

    def signed_term(self):
        sign = 1
        while self.peek() in ("-", "+"):
            if self.peek() == "-":
                sign = -sign
            self.pos += 1
        c, a = self.term()
        return sign * c, a

    def expr(self) -> KnotExpr:
        if self.peek() == "" or self.src.strip() == "0":
            return KnotExpr()
        terms = [self.signed_term()]
        while self.peek():
            op = self.peek()
            if op not in "+-#":
                self.error(f"expected '+', '-' or '#', found {op!r}")
            self.pos += 1
            c, a = self.signed_term()
            terms.append((-c if op == "-" else c, a))
        return KnotExpr(terms)


def parse_expr(src: str, matrix_dir=None) -> KnotExpr:
    return _Parser(src, matrix_dir).expr()


def render_expr(K: KnotExpr) -> str:
    return K.render()
