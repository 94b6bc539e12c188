"""Scalar coefficient rings for the deformed Fock-space computations.

Three regimes are used throughout the package, selected by :class:`Mode`:

* formal mode -- scalars are :class:`QPoly`, polynomials in the deformation
  parameter ``q`` with exact integer/rational coefficients.  This is the
  default; identities checked in this mode are polynomial identities.
* exact numeric mode -- ``q`` is pinned to a rational in (-1, 1) and scalars
  are ``fractions.Fraction``.
* floating mode -- ``q`` is a float in (-1, 1) and scalars are floats (or
  complex, when complex vector coordinates are in play).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

ExactCoeff = Union[int, Fraction]


def _check_exact(c) -> None:
    if not isinstance(c, (int, Fraction)) or isinstance(c, bool):
        raise TypeError(f"exact coefficient expected, got {type(c).__name__}")


class QPoly:
    """Polynomial in ``q`` with exact coefficients, stored densely ascending.

    Immutable; trailing zero coefficients are stripped so equality is
    structural.  Mixed int/Fraction coefficients are allowed (they compare
    and hash consistently in Python).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            _check_exact(c)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: ExactCoeff) -> "QPoly":
        return cls((c,))

    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def q_power(cls, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power")
        return cls((0,) * k + (1,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> ExactCoeff:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == (() if other == 0 else (other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power")
        out = QPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self) -> "QPoly":
        return self

    def at(self, q):
        """Evaluate at a numeric ``q`` (Horner); exact when ``q`` is exact."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def coeff_strings(self) -> list[str]:
        """Coefficients as decimal strings, ascending powers."""
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            var = "q" if k == 1 else f"q^{k}"
            if c == 1:
                term = var
            elif c == -1:
                term = f"-{var}"
            elif isinstance(c, Fraction) and c.denominator != 1:
                term = f"({c}){var}"
            else:
                term = f"{c}{var}"
            parts.append(term)
        text = "+".join(parts)
        return text.replace("+-", "-")

    def __repr__(self) -> str:
        return f"QPoly({self.coeffs!r})"


def conjugate(x):
    """Complex conjugate; the identity on exact scalars and QPoly."""
    return x.conjugate()


@dataclass(frozen=True, eq=False)
class Mode:
    """Coefficient-ring selector.

    ``q is None`` means formal mode (QPoly scalars).  A Fraction pins ``q``
    to an exact rational, a float to numeric mode; both must lie in (-1, 1).
    Equality distinguishes the ring, not just the value: the exact rational
    1/2 and the float 0.5 are different modes.
    """

    q: Fraction | float | None = None

    def __eq__(self, other):
        if not isinstance(other, Mode):
            return NotImplemented
        return type(self.q) is type(other.q) and self.q == other.q

    def __hash__(self):
        return hash((type(self.q), self.q))

    def __post_init__(self):
        q = self.q
        if q is None:
            return
        if isinstance(q, int) and not isinstance(q, bool):
            object.__setattr__(self, "q", Fraction(q))
            q = self.q
        if not isinstance(q, (Fraction, float)):
            raise TypeError("q must be None, a Fraction or a float")
        if not -1 < q < 1:
            raise ValueError(f"q must lie in (-1, 1), got {q}")

    @property
    def is_formal(self) -> bool:
        return self.q is None

    @property
    def is_exact(self) -> bool:
        return self.q is None or isinstance(self.q, Fraction)

    def zero(self):
        return QPoly.zero() if self.q is None else self.q * 0

    def one(self):
        return QPoly.one() if self.q is None else self.q**0

    def q_power(self, k: int):
        if self.q is None:
            return QPoly.q_power(k)
        return self.q**k

    def coerce(self, c):
        """Lift an exact number into this mode's scalar ring."""
        if self.q is None:
            return QPoly.const(c) if not isinstance(c, QPoly) else c
        if isinstance(self.q, Fraction):
            return Fraction(c)
        return complex(c).real if not isinstance(c, complex) else c


FORMAL = Mode()


def parse_q(text: str) -> Mode:
    """Parse a command-line ``q``: '' -> formal, 'p/r' -> exact, decimal -> float."""
    text = text.strip()
    if text in ("", "formal"):
        return FORMAL
    if "/" in text or ("." not in text and "e" not in text.lower()):
        return Mode(Fraction(text))
    return Mode(float(text))
