#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import re
from dataclasses import dataclass

from segrezeta.arith.polynomial import PolynomialRing
from segrezeta.arith.primefield import DEFAULT_MODULUS, PrimeField
from segrezeta.core.errors import ParseError, PreconditionViolation
from segrezeta.groebner.ideal import Ideal

TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")
NAME = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


@dataclass(frozen=True)
class IdealFile:
    """contents of an ideal file"""

    characteristic: int
    variables: tuple
    generators: tuple
    ideal: Ideal


class _Token:

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column


class ExpressionParser:
    """recursive descent parser for integer polynomials with + - * ^ and
    parentheses. Products must be written with an explicit *."""

    def __init__(self, ring, text, line, column):
        """prepares parsing of one line fragment

        @param ring PolynomialRing the variables are looked up in
        @param text the fragment
        @param line line number of the fragment in the file, starting at 1
        @param column column of the first character of the fragment, starting at 1
        """
        self.ring = ring
        self.line = line
        self.tokens = self.__tokenize(text, column)
        self.pos = 0


    def __tokenize(self, text, column):
        tokens = []
        pos = 0
        while pos < len(text):
            match = TOKEN.match(text, pos)
            if match is None:
                break
            if match.group(1) is not None:
                tokens.append(_Token("int", match.group(1), self.line, column + match.start(1)))
            elif match.group(2) is not None:
                tokens.append(_Token("name", match.group(2), self.line, column + match.start(2)))
            else:
                tokens.append(_Token("op", match.group(3), self.line, column + match.start(3)))
            pos = match.end()
        tokens.append(_Token("end", "", self.line, column + len(text.rstrip())))
        return tokens


    def __peek(self):
        return self.tokens[self.pos]


    def __next(self):
        token = self.tokens[self.pos]
        self.pos = self.pos + 1
        return token


    def __error(self, token, message):
        return ParseError(message, token.line, token.column)


    def parse_list(self):
        """parses expression (',' expression)* up to the end of the fragment

        @return list of (polynomial, source text, token of its start)
        """
        result = []
        while True:
            start = self.__peek()
            first = self.pos
            poly = self.__expression()
            text = self.__text(first, self.pos)
            result.append((poly, text, start))
            token = self.__next()
            if token.kind == "end":
                return result
            if token.text != ",":
                raise self.__error(token, "expected an operator or ',' but found \"" + token.text + "\"")


    def __text(self, first, last):
        out = ""
        for token in self.tokens[first:last]:
            if token.kind == "op" and token.text in "+-":
                out += " " + token.text + " "
            else:
                out += token.text
        return out.strip()


    def __expression(self):
        result = self.__term()
        while self.__peek().text in ("+", "-") and self.__peek().kind == "op":
            op = self.__next().text
            term = self.__term()
            result = result + term if op == "+" else result - term
        return result


    def __term(self):
        result = self.__unary()
        while self.__peek().kind == "op" and self.__peek().text == "*":
            self.__next()
            result = result * self.__unary()
        return result


    def __unary(self):
        token = self.__peek()
        if token.kind == "op" and token.text in ("+", "-"):
            self.__next()
            value = self.__unary()
            return -value if token.text == "-" else value
        return self.__power()


    def __power(self):
        base = self.__atom()
        if self.__peek().kind == "op" and self.__peek().text == "^":
            self.__next()
            exponent = self.__next()
            if exponent.kind != "int":
                raise self.__error(exponent, "expected a nonnegative integer exponent")
            return base ** int(exponent.text)
        return base


    def __atom(self):
        token = self.__next()
        if token.kind == "int":
            return self.ring.constant(int(token.text))
        if token.kind == "name":
            if token.text not in self.ring.variables:
                raise self.__error(token, "unknown variable \"" + token.text + "\"")
            return self.ring.variable(token.text)
        if token.kind == "op" and token.text == "(":
            value = self.__expression()
            closing = self.__next()
            if closing.text != ")":
                raise self.__error(closing, "expected \")\"")
            return value
        if token.kind == "end":
            raise self.__error(token, "unexpected end of expression")
        raise self.__error(token, "unexpected \"" + token.text + "\"")


def _strip_comment(line):
    index = line.find("#")
    return line if index < 0 else line[:index]


def parse_ideal_file(text, characteristic=None):
    """parses an ideal file.

    Header lines "char: <prime>" and "vars: <names>" are followed by
    "gens:" and the generators, separated by commas or line breaks.
    Everything after a # is a comment.

    @param text file contents
    @param characteristic used when the file has no char: line, 32003 if not specified
    @return IdealFile
    """
    char_value = None
    variables = None
    gens_start = None
    lines = [line.rstrip("\r") for line in text.split("\n")]

    for number, raw in enumerate(lines, start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        column = len(key) + len(line) - len(line.lstrip()) + 2
        if not sep or key not in ("char", "vars", "gens"):
            raise ParseError("expected \"char:\", \"vars:\" or \"gens:\"", number, len(line) - len(line.lstrip()) + 1)
        if key == "char":
            value = rest.strip()
            if not value.isdigit():
                raise ParseError("characteristic must be a positive integer, got \"" + value + "\"", number, column)
            char_value = int(value)
            try:
                PrimeField(char_value)
            except PreconditionViolation:
                raise ParseError("characteristic " + value + " is not a prime below 2^31", number, column)
        elif key == "vars":
            names = [n for n in re.split(r"[\s,]+", rest.strip()) if n]
            if not names:
                raise ParseError("no variables declared", number, column)
            for name in names:
                if not NAME.match(name):
                    raise ParseError("invalid variable name \"" + name + "\"", number, column)
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable names", number, column)
            variables = names
        else:
            gens_start = (number, line.index(":") + 2)
            break

    if variables is None:
        raise ParseError("missing \"vars:\" line", 1, 1)
    if gens_start is None:
        raise ParseError("missing \"gens:\" line", len(lines), 1)

    if char_value is None:
        char_value = characteristic if characteristic is not None else DEFAULT_MODULUS
    ring = PolynomialRing(PrimeField(char_value), variables)

    generators = []
    sources = []
    first_line, first_column = gens_start
    for number in range(first_line, len(lines) + 1):
        line = _strip_comment(lines[number - 1])
        column = 1
        if number == first_line:
            line = line[first_column - 1:]
            column = first_column
        if not line.strip():
            continue
        for poly, source, start in ExpressionParser(ring, line, number, column).parse_list():
            if not poly.is_homogeneous():
                raise ParseError("generator \"" + source + "\" is not homogeneous", start.line, start.column)
            generators.append(poly)
            sources.append(source)

    if not generators:
        raise ParseError("no generators after \"gens:\"", first_line, first_column)
    return IdealFile(char_value, tuple(variables), tuple(sources), Ideal(ring, generators))


def parse_ideal(text, characteristic=None):
    """the ideal defined by an ideal file, see parse_ideal_file"""
    return parse_ideal_file(text, characteristic).ideal


def format_ideal(ideal):
    """ideal file text that parses back to an equal ideal"""
    out = "char: " + str(ideal.ring.field.modulus) + "\n"
    out += "vars: " + " ".join(ideal.ring.variables) + "\n"
    out += "gens:\n"
    for g in ideal.generators:
        out += str(g) + "\n"
    return out
