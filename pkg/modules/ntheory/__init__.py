from .arithmetic import FactorMap, factorize, is_prime, is_squarefree, is_square, moebius, divisors
from .characters import kronecker, char_divisor_sum

__all__ = [
    'FactorMap', 'factorize', 'is_prime', 'is_squarefree', 'is_square', 'moebius', 'divisors',
    'kronecker', 'char_divisor_sum',
]
