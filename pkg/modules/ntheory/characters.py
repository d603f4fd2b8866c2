from typing import Union

from models.forms import Discriminant
from .arithmetic import divisors


def _jacobi(a: int, n: int) -> int:
    # n odd and positive
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), defined for every pair of integers.

    (a|0) is 1 for a = +-1 and 0 otherwise; (a|-1) is the sign of a; the
    factor at 2 is 0 for even a, 1 for a = +-1 mod 8 and -1 for a = +-3 mod 8.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0

    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1

    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result

    if n == 1:
        return result
    return result * _jacobi(a, n)


def char_divisor_sum(n: int, D: Union[Discriminant, int]) -> int:
    """sum_{d|n} (-D|d)."""
    negD = -int(D)
    return sum(kronecker(negD, d) for d in divisors(n))
