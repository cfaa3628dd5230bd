from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.rings import PolyElement

from engines.polycore.rings import RingSpec
from engines.polycore.scalars import Scalar, as_raw_vector
from utils.errors import (
    DimensionMismatchError,
    ExponentOverflowError,
    FieldMismatchError,
    InhomogeneousInputError,
    RingMismatchError,
)

MAX_EXPONENT = 2 ** 16 - 1

Monomial = Tuple[int, ...]


class Polynomial:
    """Exact multivariate polynomial over a RingSpec.

    Wraps a sympy PolyElement: a dict monomial -> nonzero coefficient, so two
    equal polynomials are structurally identical.
    """

    __slots__ = ("spec", "element")

    def __init__(self, spec: RingSpec, element: PolyElement, homogeneous: bool = False):
        for monom in element.itermonoms():
            if monom and max(monom) > MAX_EXPONENT:
                raise ExponentOverflowError(f"Exponent {max(monom)} exceeds {MAX_EXPONENT}")
        self.spec = spec
        self.element = element
        if homogeneous and not self.is_homogeneous():
            raise InhomogeneousInputError(f"Polynomial {self} is not homogeneous")

    # construction

    @classmethod
    def zero(cls, spec: RingSpec) -> "Polynomial":
        return cls(spec, spec.sympy_ring.zero)

    @classmethod
    def one(cls, spec: RingSpec) -> "Polynomial":
        return cls(spec, spec.sympy_ring.one)

    @classmethod
    def constant(cls, spec: RingSpec, value: Any) -> "Polynomial":
        return cls(spec, spec.sympy_ring.ground_new(spec.field.convert(value)))

    @classmethod
    def variable(cls, spec: RingSpec, name: Union[str, int]) -> "Polynomial":
        index = name if isinstance(name, int) else spec.index[name]
        return cls(spec, spec.sympy_ring.gens[index])

    @classmethod
    def variables(cls, spec: RingSpec) -> List["Polynomial"]:
        return [cls(spec, g) for g in spec.sympy_ring.gens]

    @classmethod
    def from_terms(cls, spec: RingSpec, terms: Mapping[Monomial, Any]) -> "Polynomial":
        ring = spec.sympy_ring
        return cls(spec, ring.from_dict({tuple(m): spec.field.convert(c) for m, c in terms.items()}))

    @classmethod
    def linear_form(cls, spec: RingSpec, coefficients: Sequence[Any]) -> "Polynomial":
        if len(coefficients) != spec.ngens:
            raise DimensionMismatchError(f"Expected {spec.ngens} coefficients, got {len(coefficients)}")
        ring = spec.sympy_ring
        element = ring.zero
        for gen, c in zip(ring.gens, coefficients):
            element += gen * spec.field.convert(c)
        return cls(spec, element)

    # arithmetic

    def _coerce(self, other: Any) -> PolyElement:
        if isinstance(other, Polynomial):
            if other.spec != self.spec:
                if other.spec.field != self.spec.field:
                    raise FieldMismatchError(f"Cannot combine {self.spec.field.name} and {other.spec.field.name} polynomials")
                raise RingMismatchError(f"Cannot combine polynomials from {self.spec} and {other.spec}")
            return other.element
        if isinstance(other, (int, Fraction, Scalar)):
            return self.spec.sympy_ring.ground_new(self.spec.field.convert(other))
        raise RingMismatchError(f"Cannot combine a polynomial with {type(other).__name__}")

    def __add__(self, other: Any) -> "Polynomial":
        return Polynomial(self.spec, self.element + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Polynomial":
        return Polynomial(self.spec, self.element - self._coerce(other))

    def __rsub__(self, other: Any) -> "Polynomial":
        return Polynomial(self.spec, self._coerce(other) - self.element)

    def __mul__(self, other: Any) -> "Polynomial":
        return Polynomial(self.spec, self.element * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.spec, -self.element)

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("Negative exponent")
        top = max((max(m) for m in self.element.itermonoms() if m), default=0)
        if top * exponent > MAX_EXPONENT:
            raise ExponentOverflowError(f"Exponent {top * exponent} exceeds {MAX_EXPONENT}")
        return Polynomial(self.spec, self.element ** exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.spec == other.spec and self.element == other.element
        if isinstance(other, int):
            return self.element == self.spec.sympy_ring.ground_new(self.spec.field.convert(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec, frozenset(self.element.items())))

    def __bool__(self) -> bool:
        return bool(self.element)

    # inspection

    @property
    def is_zero(self) -> bool:
        return not self.element

    def terms(self) -> List[Tuple[Monomial, Scalar]]:
        """Terms in decreasing order under the ring's monomial order"""
        return [(m, Scalar(c, self.spec.field)) for m, c in self.element.terms()]

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.element.terms()]

    def coefficient(self, monomial: Sequence[int]) -> Scalar:
        return Scalar(self.element.get(tuple(monomial), self.spec.field.domain.zero), self.spec.field)

    def leading_monomial(self) -> Monomial:
        return self.element.LM

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial"""
        return max((sum(m) for m in self.element.itermonoms()), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.element.itermonoms()}) <= 1

    def bidegree(self) -> Optional[Tuple[int, int]]:
        """Common bidegree of all terms, or None when there is none"""
        degrees = {self.spec.bidegree_of(m) for m in self.element.itermonoms()}
        if len(degrees) != 1:
            return None
        return degrees.pop()

    def is_bihomogeneous(self) -> bool:
        return self.spec.grading_split is not None and (self.is_zero or self.bidegree() is not None)

    # operations

    def diff(self, var_index: int) -> "Polynomial":
        return poly_diff(self, var_index)

    def evaluate(self, point: Sequence[Any]) -> Scalar:
        return poly_eval(self, point)

    def subst(self, assignment: Mapping[Union[str, int], "Polynomial"], target: Optional[RingSpec] = None) -> "Polynomial":
        return poly_subst(self, assignment, target)

    def normalized(self) -> "Polynomial":
        return normalize(self)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r}, {self.spec!r})"


def poly_eval(f: Polynomial, point: Sequence[Any]) -> Scalar:
    """Exact value of f at point"""
    spec = f.spec
    if len(point) != spec.ngens:
        raise DimensionMismatchError(f"Point has {len(point)} coordinates, ring has {spec.ngens} variables")
    values = as_raw_vector(point, spec.field)
    total = spec.field.domain.zero
    for monom, coeff in f.element.iterterms():
        term = coeff
        for value, e in zip(values, monom):
            if e:
                term *= value ** e
        total += term
    return Scalar(total, spec.field)


def poly_diff(f: Polynomial, var_index: int) -> Polynomial:
    """Formal partial derivative with respect to variable var_index"""
    if not 0 <= var_index < f.spec.ngens:
        raise IndexError(f"Variable index {var_index} out of range for {f.spec.ngens} variables")
    return Polynomial(f.spec, f.element.diff(f.spec.sympy_ring.gens[var_index]))


def poly_subst(
    f: Polynomial,
    assignment: Mapping[Union[str, int], Polynomial],
    target: Optional[RingSpec] = None,
) -> Polynomial:
    """Substitute polynomials for variables; unassigned variables map to the
    same-named variable of the target ring."""
    target = target or f.spec
    if target.field != f.spec.field:
        raise FieldMismatchError(f"Cannot substitute from {f.spec.field.name} into {target.field.name}")
    images: List[PolyElement] = []
    for i, name in enumerate(f.spec.names):
        image = assignment.get(name, assignment.get(i))
        if image is None:
            if name not in target.index:
                raise RingMismatchError(f"No image for variable {name} in {target}")
            images.append(target.sympy_ring.gens[target.index[name]])
            continue
        if image.spec != target:
            if image.spec.field != target.field:
                raise FieldMismatchError(f"Image of {name} lives over {image.spec.field.name}")
            raise RingMismatchError(f"Image of {name} is not in {target}")
        images.append(image.element)

    ring = target.sympy_ring
    powers: Dict[Tuple[int, int], PolyElement] = {}
    result = ring.zero
    for monom, coeff in f.element.iterterms():
        term = ring.ground_new(coeff)
        for i, e in enumerate(monom):
            if e:
                if (i, e) not in powers:
                    powers[(i, e)] = images[i] ** e
                term = term * powers[(i, e)]
        result += term
    return Polynomial(target, result)


def normalize(f: Polynomial) -> Polynomial:
    """Monic over F_p; content-free integer form with positive leading coefficient over Q"""
    if f.is_zero:
        return f
    field = f.spec.field
    if not field.is_rational:
        return Polynomial(f.spec, f.element.monic())
    coeffs = [field.to_python(c) for c in f.element.coeffs()]
    denominator = 1
    for c in coeffs:
        denominator = denominator * c.denominator // gcd(denominator, c.denominator)
    numerators = [int(c * denominator) for c in coeffs]
    content = 0
    for n in numerators:
        content = gcd(content, n)
    lead = field.to_python(f.element.LC)
    scale = Fraction(denominator, content) * (1 if lead > 0 else -1)
    return f * scale


def _format_coefficient(value: Union[int, Fraction]) -> str:
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def format_poly(f: Polynomial) -> str:
    """Canonical text form under the ring order; parse_poly reads it back exactly"""
    if f.is_zero:
        return "0"
    field = f.spec.field
    pieces: List[str] = []
    for monom, coeff in f.element.terms():
        value = field.to_python(coeff)
        negative = value < 0
        magnitude = -value if negative else value
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(f.spec.names, monom)
            if e
        ]
        if not factors:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coefficient(magnitude)] + factors)
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)
