from __future__ import annotations

from fractions import Fraction

from ..errors import DegenerateDimension


def field_size_lower_bound(n: int, k: int) -> Fraction | float:
    """Smallest field size compatible with correcting n-2k+1 insdel errors.

    (1/2) * (n / ((2k-1)(k-1)))^((2k-1)/(k-1)).  The exponent is an integer
    only for k = 2, where the value is returned as an exact ``Fraction``;
    otherwise a float.
    """
    if k < 2:
        raise DegenerateDimension("the bound is undefined for k = 1")
    base = Fraction(n, (2 * k - 1) * (k - 1))
    num, den = 2 * k - 1, k - 1
    if num % den == 0:
        return base ** (num // den) / 2
    return 0.5 * float(base) ** (num / den)
