"""Small integer helpers: primality, prime powers, divisors, Moebius."""

from .errors import ValidationError


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q):
    """Return ``(p, k)`` with ``q == p**k`` and p prime.

    Raises ValidationError if q is not a prime power >= 2.
    """
    if not isinstance(q, int) or isinstance(q, bool) or q < 2:
        raise ValidationError(f"q must be an integer prime power >= 2, got {q!r}")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValidationError(f"q = {q} is not a prime power")
    return p, k


def check_prime_power(q):
    prime_power(q)
    return q


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius(n):
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


# str(int) and int(str) refuse more than ~4300 digits by default; split the
# work into chunks below that limit instead of touching the global setting.
_CHUNK_BITS = 8000
_CHUNK_DIGITS = 2000


def int_to_str(n):
    if n < 0:
        return "-" + int_to_str(-n)
    if n.bit_length() <= _CHUNK_BITS:
        return str(n)
    half = int(n.bit_length() * 0.30103) // 2
    hi, lo = divmod(n, 10**half)
    if hi == 0:
        return int_to_str(lo)
    return int_to_str(hi) + int_to_str(lo).zfill(half)


def str_to_int(s):
    s = s.strip()
    if s.startswith("-"):
        return -str_to_int(s[1:])
    if s.startswith("+"):
        s = s[1:]
    if len(s) <= _CHUNK_DIGITS:
        return int(s)
    half = len(s) // 2
    return str_to_int(s[:-half]) * 10**half + str_to_int(s[-half:])
