from fractions import Fraction
from typing import Any, List, Sequence, Union

import numpy as np
from sympy import isprime
from sympy.polys.domains import GF, QQ

from utils.errors import FieldMismatchError, PreconditionError

# Window used for random rationals; draws are integers so all samples stay exact
RATIONAL_SAMPLE_BOUND = 50
MACHINE_WORD = 2 ** 63


class Field:
    """A prime field F_p (odd p below 2^63) or the rationals (characteristic 0)"""

    def __init__(self, characteristic: int = 0):
        if characteristic:
            if characteristic == 2 or characteristic >= MACHINE_WORD or not isprime(characteristic):
                raise PreconditionError(f"Characteristic must be an odd prime below 2^63, got {characteristic}")
            self.domain = GF(characteristic, symmetric=False)
        else:
            self.domain = QQ
        self.characteristic = characteristic

    @classmethod
    def from_config(cls, char: str, prime: int) -> "Field":
        if char == "Q":
            return cls(0)
        if char == "p":
            return cls(prime)
        raise PreconditionError(f"Unknown characteristic flag: {char}")

    @property
    def name(self) -> str:
        return f"GF({self.characteristic})" if self.characteristic else "QQ"

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(("Field", self.characteristic))

    def __repr__(self) -> str:
        return f"Field({self.name})"

    def convert(self, value: Any) -> Any:
        """Convert an int, Fraction, Scalar or domain element to a raw domain element"""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"Scalar over {value.field.name} used over {self.name}")
            return value.value
        if isinstance(value, Fraction):
            if self.characteristic:
                return self.domain(value.numerator) / self.domain(value.denominator)
            return QQ(value.numerator, value.denominator)
        if isinstance(value, (int, np.integer)):
            return self.domain(int(value))
        return self.domain.convert(value)

    def __call__(self, value: Any) -> "Scalar":
        return Scalar(self.convert(value), self)

    def zero(self) -> "Scalar":
        return Scalar(self.domain.zero, self)

    def one(self) -> "Scalar":
        return Scalar(self.domain.one, self)

    def random_element(self, rng: np.random.Generator) -> Any:
        if self.characteristic:
            return self.domain(int(rng.integers(0, self.characteristic)))
        return QQ(int(rng.integers(-RATIONAL_SAMPLE_BOUND, RATIONAL_SAMPLE_BOUND + 1)))

    def random_nonzero(self, rng: np.random.Generator) -> Any:
        while True:
            value = self.random_element(rng)
            if value:
                return value

    def random_vector(self, rng: np.random.Generator, n: int) -> List[Any]:
        return [self.random_element(rng) for _ in range(n)]

    def to_python(self, value: Any) -> Union[int, Fraction]:
        """Raw domain element as int (residue in [0, p)) or Fraction"""
        if self.characteristic:
            return int(value)
        return Fraction(int(value.numerator), int(value.denominator))

    def format(self, value: Any) -> str:
        py = self.to_python(value)
        return str(py)


class Scalar:
    """Exact element of a Field; mixing fields is an error, never a coercion"""

    __slots__ = ("value", "field")

    def __init__(self, value: Any, field: Field):
        self.value = value
        self.field = field

    def _other(self, other: Any) -> Any:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"Cannot combine {self.field.name} with {other.field.name}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.convert(other)
        raise FieldMismatchError(f"Cannot combine a scalar over {self.field.name} with {type(other).__name__}")

    def __add__(self, other: Any) -> "Scalar":
        return Scalar(self.value + self._other(other), self.field)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Scalar":
        return Scalar(self.value - self._other(other), self.field)

    def __rsub__(self, other: Any) -> "Scalar":
        return Scalar(self._other(other) - self.value, self.field)

    def __mul__(self, other: Any) -> "Scalar":
        return Scalar(self.value * self._other(other), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Scalar":
        divisor = self._other(other)
        if not divisor:
            raise ZeroDivisionError("Division by zero scalar")
        return Scalar(self.value / divisor, self.field)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.value, self.field)

    def __pow__(self, exponent: int) -> "Scalar":
        return Scalar(self.value ** exponent, self.field)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.convert(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.field.to_python(self.value)))

    def __bool__(self) -> bool:
        return bool(self.value)

    def __int__(self) -> int:
        return int(self.field.to_python(self.value))

    def to_python(self) -> Union[int, Fraction]:
        return self.field.to_python(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.field.format(self.value)}, {self.field.name})"

    def __str__(self) -> str:
        return self.field.format(self.value)


def as_raw_vector(point: Sequence[Any], field: Field) -> List[Any]:
    """Convert a point given as Scalars, ints or Fractions to raw domain elements"""
    return [field.convert(value) for value in point]
