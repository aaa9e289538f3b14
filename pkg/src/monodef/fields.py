"""Exact coefficient fields: the rationals and prime fields."""

from __future__ import annotations

import re

import numpy as np
from gmpy2 import is_prime, mpq

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class FieldError(ValueError):
    pass


class Field:
    """Base class. Elements are plain Python objects (``mpq`` or ``int``)."""

    name: str

    def __call__(self, x):
        raise NotImplementedError

    def reduce(self, x):
        return x

    def reduce_array(self, arr: np.ndarray) -> np.ndarray:
        return arr

    def inv(self, x):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def parse(self, s):
        raise NotImplementedError

    def random_element(self, rng, bound: int = 3):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def array(self, values, shape=None) -> np.ndarray:
        flat = [self(v) for v in values]
        out = np.empty(len(flat), dtype=object)
        out[:] = flat
        if shape is not None:
            out = out.reshape(tuple(shape))
        return out

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(tuple(shape), dtype=object)
        out.fill(self.zero)
        return out

    def to_json(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash(repr(self.to_json()))

    def __repr__(self):
        return self.name


class Rationals(Field):
    name = "Q"

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise FieldError(f"refusing floating-point value {x!r}")
        return mpq(x)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / mpq(x)

    def format(self, x) -> str:
        return str(mpq(x))

    def parse(self, s: str):
        m = _RATIONAL.match(s)
        if not m:
            raise FieldError(f"not an exact rational: {s!r}")
        num, den = m.groups()
        if den is not None and int(den) == 0:
            raise FieldError(f"zero denominator in {s!r}")
        return mpq(int(num), int(den) if den is not None else 1)

    def random_element(self, rng, bound: int = 3):
        # mostly small integers, occasionally a proper fraction
        num = rng.randint(-bound, bound)
        if rng.random() < 0.2:
            return mpq(num, rng.randint(1, bound))
        return mpq(num)

    def to_json(self):
        return "Q"


class PrimeField(Field):
    def __init__(self, p: int):
        p = int(p)
        if p < 2 or not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise FieldError(f"refusing floating-point value {x!r}")
        if isinstance(x, (int, np.integer)):
            return int(x) % self.p
        q = mpq(x)
        return int(q.numerator) * pow(int(q.denominator), -1, self.p) % self.p

    def reduce(self, x):
        return x % self.p

    def reduce_array(self, arr: np.ndarray) -> np.ndarray:
        return arr % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(int(x), -1, self.p)

    def format(self, x) -> str:
        return str(int(x) % self.p)

    def parse(self, s: str):
        m = _RATIONAL.match(s)
        if not m:
            raise FieldError(f"not an exact residue: {s!r}")
        num, den = m.groups()
        den = int(den) if den is not None else 1
        if den % self.p == 0:
            raise FieldError(f"denominator divisible by {self.p} in {s!r}")
        return int(num) * pow(den, -1, self.p) % self.p

    def random_element(self, rng, bound: int = 3):
        return rng.randrange(self.p)

    def to_json(self):
        return {"Fp": self.p}


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_json(obj) -> Field:
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"Fp"} and isinstance(obj["Fp"], int):
        return PrimeField(obj["Fp"])
    raise FieldError(f"unknown field description {obj!r}; expected \"Q\" or {{\"Fp\": p}}")
