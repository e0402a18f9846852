"""Digit strings in base b and base -b, and the digit-wise operators on them.

Digits are stored least-significant first: ``digits[i]`` is the coefficient
of ``b**i`` (or ``(-b)**i``).  Values are plain Python ints, so nothing
overflows.

Every operator here is computed directly from the expansions and never
touches a transducer; the machine constructors are checked against these.
"""

from __future__ import annotations

from typing import Iterable


class DomainError(ValueError):
    """Raised for arguments outside an operation's domain."""


def check_radix(b: int) -> int:
    """Return ``b`` if it is a usable radix (an int >= 2), else raise."""
    if isinstance(b, bool) or not isinstance(b, int):
        raise DomainError(f"radix must be an integer, got {b!r}")
    if b < 2:
        # base 1 has digit set {0}: nothing but 0 is representable
        raise DomainError(f"radix must be >= 2, got {b}")
    return b


class DigitString(tuple):
    """Immutable digit sequence over ``{0, ..., radix-1}``, LSB first.

    Compares equal to a plain tuple holding the same digits, so
    ``to_base(10, 2) == (0, 1, 0, 1)``.
    """

    def __new__(cls, digits: Iterable[int] = (), radix: int = 2):
        check_radix(radix)
        digits = tuple(int(d) for d in digits)
        for d in digits:
            if not 0 <= d < radix:
                raise DomainError(f"digit {d} out of range for radix {radix}")
        self = super().__new__(cls, digits)
        self.radix = radix
        return self

    def __repr__(self):
        return f"DigitString({list(self)!r}, radix={self.radix})"

    def canonical(self) -> DigitString:
        """Strip trailing (most significant) zeros."""
        k = len(self)
        while k and self[k - 1] == 0:
            k -= 1
        return self if k == len(self) else DigitString(self[:k], self.radix)

    @property
    def is_canonical(self) -> bool:
        return not self or self[-1] != 0

    def padded(self, width: int) -> DigitString:
        """Append zeros so the string has at least ``width`` digits."""
        extra = width - len(self)
        if extra <= 0:
            return self
        return DigitString(tuple(self) + (0,) * extra, self.radix)


def to_base(n: int, b: int) -> DigitString:
    """Canonical base-``b`` expansion of ``n >= 0``."""
    check_radix(b)
    if n < 0:
        raise DomainError(f"base {b} expansion needs n >= 0, got {n}")
    digits = []
    while n:
        n, r = divmod(n, b)
        digits.append(r)
    return DigitString(digits, b)


def to_negabase(z: int, b: int) -> DigitString:
    """Canonical base-``(-b)`` expansion of any integer ``z``."""
    check_radix(b)
    digits = []
    while z:
        r = z % b
        digits.append(r)
        z = (z - r) // -b
    return DigitString(digits, b)


def _check_digits(digits, b):
    if isinstance(digits, DigitString):
        if b is not None and check_radix(b) != digits.radix:
            raise DomainError(
                f"digit string has radix {digits.radix}, expected {b}")
        return digits
    if b is None:
        raise DomainError("radix required for a plain digit sequence")
    return DigitString(digits, b)


def from_base(digits, b: int | None = None) -> int:
    """Evaluate ``sum(d_i * b**i)``.  ``b`` defaults to the string's radix."""
    ds = _check_digits(digits, b)
    value = 0
    for d in reversed(ds):
        value = value * ds.radix + d
    return value


def from_negabase(digits, b: int | None = None) -> int:
    """Evaluate ``sum(d_i * (-b)**i)``."""
    ds = _check_digits(digits, b)
    value = 0
    for d in reversed(ds):
        value = value * -ds.radix + d
    return value


def _zip_pad(xs, ys):
    width = max(len(xs), len(ys))
    return zip(tuple(xs) + (0,) * (width - len(xs)),
               tuple(ys) + (0,) * (width - len(ys)))


def oplus_neg(x: int, y: int, b: int) -> int:
    """Add the base ``-b`` digits of ``x`` and ``y`` mod ``b``; read the
    result in base ``+b``.  Defined for all integers; the result is >= 0."""
    xs, ys = to_negabase(x, b), to_negabase(y, b)
    return from_base([(p + q) % b for p, q in _zip_pad(xs, ys)], b)


def ominus(x: int, y: int, b: int) -> int:
    """Subtract base-``b`` digits of ``y`` from those of ``x`` mod ``b``.

    For ``b == 2`` this is bitwise XOR.
    """
    if x < 0 or y < 0:
        raise DomainError(f"ominus needs non-negative arguments, got {x}, {y}")
    xs, ys = to_base(x, b), to_base(y, b)
    return from_base([(p - q) % b for p, q in _zip_pad(xs, ys)], b)


def double_bar(n: int, b: int) -> int:
    """Replace every nonzero base-``b`` digit of ``n`` by 1."""
    if n < 0:
        raise DomainError(f"double_bar needs n >= 0, got {n}")
    return from_base([min(d, 1) for d in to_base(n, b)], b)


def render(digits: DigitString, pad: int | None = None) -> str:
    """MSB-first text form.

    Bases up to 10 give a contiguous string (``"1010"``); larger bases use
    comma-separated decimal digits (``"1,15,0"``).  Zero renders as ``"0"``
    unless padding asks for more.
    """
    ds = digits.padded(pad) if pad else digits
    if not ds:
        ds = DigitString((0,), ds.radix)
    sep = "" if ds.radix <= 10 else ","
    return sep.join(str(d) for d in reversed(ds))


def parse(text: str, b: int) -> DigitString:
    """Inverse of :func:`render`; leading zeros are kept."""
    check_radix(b)
    text = text.strip()
    if not text:
        raise DomainError("empty digit string")
    try:
        if "," in text or b > 10:
            msb = [int(part) for part in text.split(",")]
        else:
            msb = [int(ch) for ch in text]
    except ValueError:
        raise DomainError(f"cannot parse digits from {text!r}") from None
    return DigitString(reversed(msb), b)
