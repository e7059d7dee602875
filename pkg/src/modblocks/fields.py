"""Small finite fields GF(p^m) with an integer element encoding.

An element is a single integer code in ``[0, q)`` with ``q = p^m``: the
base-p digits of the code are the coefficients of the polynomial
representative, so the prime subfield occupies the codes ``0..p-1`` and
addition/multiplication of codes below ``p`` agree with plain mod-p
arithmetic.  Prime fields compute directly on residues; extension fields
are table-driven (log/antilog construction), which keeps vectorized numpy
code and the jitted kernels agnostic of the field degree.

Extension tables are only built for ``q <= MAX_TABLE_ORDER``; nothing in
the package needs larger splitting fields at desk scale.
"""

from __future__ import annotations

import functools
import math

import numpy as np

from .errors import OrderLimitExceeded

MAX_TABLE_ORDER = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def multiplicative_order(a: int, n: int) -> int:
    """Order of a modulo n; requires gcd(a, n) = 1."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not invertible mod {n}")
    # Start from the group order and strip unnecessary prime factors.
    phi = 1
    m = n
    for r in prime_factors(n):
        k = p_part(m, r)
        phi *= (k // r) * (r - 1)
    order = phi
    for r in prime_factors(phi):
        while order % r == 0 and pow(a, order // r, n) == 1:
            order //= r
    return order


def splitting_degree(p: int, exponent: int) -> int:
    """Extension degree m so that GF(p^m) contains the e'-th roots of unity,
    where e' is the p'-part of the given group exponent.  Such a field splits
    every group of that exponent and all of its quotients."""
    e = exponent
    while e % p == 0:
        e //= p
    if e == 1:
        return 1
    return multiplicative_order(p, e)


# ---------------------------------------------------------------------------
# dense polynomial helpers over GF(p), lists of ints with c[i] the x^i coeff


def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, f, p):
    # f monic
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        c = a[-1]
        if c:
            shift = len(a) - 1 - df
            for i, fi in enumerate(f):
                a[shift + i] = (a[shift + i] - c * fi) % p
        a.pop()
    return _ptrim(a)


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        if len(a) >= len(b):
            inv = pow(b[-1], p - 2, p)
            bm = [(c * inv) % p for c in b]
            a = _pmod(a, bm, p)
        a, b = b, a
    return a


def _ppow(base, e, f, p):
    result = [1]
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _is_irreducible(f, p):
    # f monic of degree m >= 1: irreducible iff x^(p^m) = x mod f and
    # gcd(x^(p^(m/r)) - x, f) = 1 for every prime r | m.
    m = len(f) - 1
    x = [0, 1]
    r = x
    powers = {}
    for k in range(1, m + 1):
        r = _ppow(r, p, f, p)
        powers[k] = r
    top = list(powers[m])
    while len(top) < 2:
        top.append(0)
    top[1] = (top[1] - 1) % p
    if _ptrim(top):
        return False
    for d in prime_factors(m):
        r = list(powers[m // d])
        while len(r) < 2:
            r.append(0)
        r[1] = (r[1] - 1) % p
        g = _pgcd(f, _ptrim(r), p)
        if len(g) - 1 != 0:
            return False
    return True


def irreducible_polynomial(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible of degree m over GF(p)."""
    for t in range(p ** m):
        coeffs = []
        v = t
        for _ in range(m):
            coeffs.append(v % p)
            v //= p
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise RuntimeError(f"no irreducible polynomial of degree {m} over GF({p})")


# ---------------------------------------------------------------------------


class FieldSpec:
    """Arithmetic context for GF(p^m) on integer element codes.

    Prime fields (m = 1) work directly on residues.  Extension fields carry
    add/mul/neg/inv lookup tables shared with the jitted kernels.
    """

    def __init__(self, p: int, m: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.m = m
        self.q = p ** m
        if m == 1:
            self.modulus = None
        else:
            if self.q > MAX_TABLE_ORDER:
                raise OrderLimitExceeded(
                    f"GF({p}^{m}) has order {self.q} > {MAX_TABLE_ORDER}"
                )
            if modulus is None:
                modulus = irreducible_polynomial(p, m)
            else:
                modulus = tuple(c % p for c in modulus)
                if len(modulus) != m + 1 or modulus[-1] != 1:
                    raise ValueError("modulus must be monic of degree m")
                if not _is_irreducible(list(modulus), p):
                    raise ValueError("modulus is reducible")
            self.modulus = modulus
            self._build_tables()

    # table construction -----------------------------------------------

    def _encode(self, coeffs) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + (c % self.p)
        return code

    def _decode(self, code: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(code % self.p)
            code //= self.p
        return out

    def _scalar_mul(self, a: int, b: int) -> int:
        prod = _pmod(_pmul(self._decode(a), self._decode(b), self.p),
                     list(self.modulus), self.p)
        prod += [0] * (self.m - len(prod))
        return self._encode(prod)

    def _build_tables(self):
        p, q = self.p, self.q
        # digits: (q, m) base-p expansion of every code
        codes = np.arange(q, dtype=np.int64)
        digits = np.empty((q, self.m), dtype=np.int64)
        v = codes.copy()
        for i in range(self.m):
            digits[:, i] = v % p
            v //= p
        pw = p ** np.arange(self.m, dtype=np.int64)

        self.add_t = ((digits[:, None, :] + digits[None, :, :]) % p) @ pw
        self.neg_t = ((-digits) % p) @ pw

        # multiplicative structure via a generator of the cyclic unit group
        gen = self._find_generator()
        exp = np.empty(q - 1, dtype=np.int64)
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            acc = self._scalar_mul(acc, gen)
        if acc != 1:
            raise RuntimeError("generator order mismatch")
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1, dtype=np.int64)

        self.mul_t = np.zeros((q, q), dtype=np.int64)
        idx = (log[1:, None] + log[None, 1:]) % (q - 1)
        self.mul_t[1:, 1:] = exp[idx]

        self.inv_t = np.zeros(q, dtype=np.int64)
        self.inv_t[1:] = exp[(q - 1 - log[1:]) % (q - 1)]

        self.frob_t = np.zeros(q, dtype=np.int64)
        self.frob_t[1:] = exp[(log[1:] * p) % (q - 1)]

    def _find_generator(self) -> int:
        target = self.q - 1
        checks = [target // r for r in prime_factors(target)]
        for cand in range(2, self.q):
            if all(self._scalar_pow(cand, c) != 1 for c in checks):
                return cand
        raise RuntimeError("no generator found")

    def _scalar_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._scalar_mul(result, a)
            a = self._scalar_mul(a, a)
            e >>= 1
        return result

    # arithmetic ---------------------------------------------------------

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        return self.add_t[a, b]

    def sub(self, a, b):
        if self.m == 1:
            return (a - b) % self.p
        return self.add_t[a, self.neg_t[b]]

    def neg(self, a):
        if self.m == 1:
            return (-a) % self.p
        return self.neg_t[a]

    def mul(self, a, b):
        if self.m == 1:
            return (a * b) % self.p
        return self.mul_t[a, b]

    def inv_scalar(self, a: int) -> int:
        a = int(a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return int(self.inv_t[a])

    def pow_scalar(self, a: int, e: int) -> int:
        a = int(a)
        if e < 0:
            a, e = self.inv_scalar(a), -e
        if self.m == 1:
            return pow(a, e, self.p)
        return self._scalar_pow(a, e)

    def frobenius(self, a):
        """Elementwise p-th power."""
        if self.m == 1:
            return np.asarray(a) % self.p
        return self.frob_t[a]

    def from_int(self, k: int) -> int:
        """Image of the integer k under Z -> GF(p^m) (prime-subfield code)."""
        return k % self.p

    def sum(self, arr, axis=None):
        arr = np.asarray(arr)
        if self.m == 1:
            return arr.sum(axis=axis) % self.p
        if axis is None:
            out = 0
            for v in arr.ravel():
                out = int(self.add_t[out, v])
            return out
        moved = np.moveaxis(arr, axis, 0)
        out = np.zeros(moved.shape[1:], dtype=np.int64)
        for chunk in moved:
            out = self.add_t[out, chunk]
        return out

    def dot(self, a, b):
        """Exact matrix/vector product over the field."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            inner = a.shape[-1]
            # float64 matmul is exact while accumulated products stay < 2^53
            if inner * (self.p - 1) ** 2 < 2 ** 53:
                return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64) % self.p
            return (a @ b) % self.p
        a2 = a.reshape(-1, a.shape[-1])
        b2 = b.reshape(b.shape[0], -1)
        out = np.zeros((a2.shape[0], b2.shape[1]), dtype=np.int64)
        for k in range(a2.shape[0]):
            acc = out[k]
            for t in range(b2.shape[0]):
                c = int(a2[k, t])
                if c:
                    acc = self.add_t[acc, self.mul_t[c, b2[t]]]
            out[k] = acc
        return out.reshape(a.shape[:-1] + b.shape[1:])

    def element_coeffs(self, code: int) -> tuple[int, ...]:
        if self.m == 1:
            return (int(code) % self.p,)
        return tuple(self._decode(int(code)))

    def element_from_coeffs(self, coeffs) -> int:
        if self.m == 1:
            return coeffs[0] % self.p
        return self._encode(list(coeffs))

    # identity -----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"


@functools.lru_cache(maxsize=None)
def GF(p: int, m: int = 1) -> FieldSpec:
    """Cached field constructor with the deterministic default modulus."""
    return FieldSpec(p, m)
