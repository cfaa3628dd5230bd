"""Polynomial grammar.

    expr   :: ['+' | '-'] term (('+' | '-') term)*
    term   :: factor (('*' | '/') factor)*
    factor :: base ['^' uint]
    base   :: ident | int | '(' expr ')'

Division is only allowed by a nonzero constant, which is how rational
coefficients are written (``3/4*x``).
"""
import logging
from functools import lru_cache

import pyparsing as pp

from engines.polycore.polynomial import MAX_EXPONENT, Polynomial
from engines.polycore.rings import RingSpec
from utils.errors import ExponentOverflowError, PolynomialParseError, UnknownVariableError

logger = logging.getLogger(__name__)


class PolynomialParser:
    def __init__(self, spec: RingSpec):
        self.spec = spec

        integer = pp.Word(pp.nums)
        ident = pp.Word(pp.alphas + "_", pp.alphanums + "_")
        exponent = pp.Word(pp.nums)
        lpar = pp.Suppress("(")
        rpar = pp.Suppress(")")
        addop = pp.one_of("+ -")
        multop = pp.one_of("* /")

        expr = pp.Forward()
        base = (
            ident.copy().set_parse_action(self._variable)
            | integer.copy().set_parse_action(self._integer)
            | (lpar + expr + rpar)
        )
        factor = (base + pp.Opt("^" + exponent)).set_parse_action(self._power)
        term = (factor + pp.ZeroOrMore(multop + factor)).set_parse_action(self._product)
        expr <<= (pp.Opt(addop) + term + pp.ZeroOrMore(addop + term)).set_parse_action(self._sum)
        self.grammar = expr + pp.StringEnd()

    def _variable(self, s, loc, toks):
        name = toks[0]
        if name not in self.spec.index:
            raise UnknownVariableError(name, loc)
        return Polynomial.variable(self.spec, name)

    def _integer(self, s, loc, toks):
        return Polynomial.constant(self.spec, int(toks[0]))

    def _power(self, s, loc, toks):
        if len(toks) == 1:
            return toks[0]
        exponent = int(toks[2])
        if exponent > MAX_EXPONENT:
            raise ExponentOverflowError(f"Exponent {exponent} exceeds {MAX_EXPONENT} at position {loc}")
        return toks[0] ** exponent

    def _product(self, s, loc, toks):
        result = toks[0]
        for i in range(1, len(toks), 2):
            op, operand = toks[i], toks[i + 1]
            if op == "*":
                result = result * operand
                continue
            if operand.total_degree() != 0:
                raise PolynomialParseError("Division by a non-constant expression", loc)
            divisor = operand.coefficient((0,) * self.spec.ngens)
            if not divisor:
                raise PolynomialParseError("Division by zero", loc)
            result = result * (self.spec.field.one() / divisor)
        return result

    def _sum(self, s, loc, toks):
        items = list(toks)
        sign = "+"
        if isinstance(items[0], str):
            sign = items.pop(0)
        result = -items[0] if sign == "-" else items[0]
        for i in range(1, len(items), 2):
            result = result + items[i + 1] if items[i] == "+" else result - items[i + 1]
        return result

    def parse(self, text: str) -> Polynomial:
        try:
            return self.grammar.parse_string(text, parse_all=True)[0]
        except pp.ParseBaseException as e:
            logger.debug(f"Failed to parse {text!r}: {e}")
            raise PolynomialParseError(f"Syntax error: {e.msg}", e.loc) from None


@lru_cache(maxsize=64)
def _parser_for(spec: RingSpec) -> PolynomialParser:
    return PolynomialParser(spec)


def parse_poly(text: str, ring: RingSpec) -> Polynomial:
    """Parse text into the canonical Polynomial it denotes"""
    return _parser_for(ring).parse(text)
