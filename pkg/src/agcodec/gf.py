"""Exact arithmetic in small finite fields GF(p^m).

Nonzero elements are stored by discrete logarithm with respect to a fixed
generator ``a`` of the multiplicative group, so multiplication, division and
exponentiation are table lookups.  Addition goes through the polynomial
(coefficient-vector) representation; for small fields a full addition table
is precomputed.

Textual form of an element, used by all vector files and traces:

    "0"            the zero element
    "1", "2", ...  elements of the prime subfield
    "a^k"          the k-th power of the generator (k >= 1); "a" == "a^1"

Default moduli: the table ``_DEFAULT_MODULI`` below fixes the reduction
polynomial for common (p, m) pairs; in particular GF(9) is built with
x^2 - x - 1, i.e. a^2 = a + 1.  For any other (p, m) the default is the
first monic polynomial of degree m (coefficient vectors, constant term
first, ordered as base-p integers) that is irreducible with x a generator
of the multiplicative group.
"""

from __future__ import annotations

import itertools
from typing import Optional, Sequence

#: Largest supported field order.  Keeps the exp/log tables small; the codes
#: handled here live over fields of order at most a few hundred anyway.
ORDER_CAP = 1 << 16

# Reduction polynomials, as coefficient tuples (constant term first, monic).
_DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),                    # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),                 # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),              # x^4 + x + 1
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),  # x^8 + x^4 + x^3 + x^2 + 1
    (3, 2): (2, 2, 1),                    # x^2 - x - 1, so a^2 = a + 1
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomial helpers over GF(p).  Polynomials are tuples of ints in [0, p),
# constant term first, with no trailing zeros (except the zero polynomial ()).
# ---------------------------------------------------------------------------

def _poly_trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mod(num: Sequence[int], den: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of num / den over GF(p); den must be nonzero."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c == 0:
            continue
        factor = (c * inv_lead) % p
        for i, d in enumerate(den):
            num[k - dd + i] = (num[k - dd + i] - factor * d) % p
    return _poly_trim(num)


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(modulus) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = tuple(low) + (1,)
            if not _poly_mod(modulus, divisor, p):
                return False
    return True


class Field:
    """The finite field GF(p^m).

    Immutable after construction; elements are plain values, so a Field and
    its elements can be shared freely across threads.
    """

    __slots__ = ("p", "m", "order", "modulus", "_exp", "_log", "_neg_log",
                 "_add_table", "_elements")

    def __init__(self, p: int, m: int = 1,
                 modulus: Optional[Sequence[int]] = None) -> None:
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m <= 0:
            raise ValueError(f"extension degree must be positive, got {m}")
        order = p ** m
        if order > ORDER_CAP:
            raise ValueError(f"field order {order} exceeds cap {ORDER_CAP}")
        self.p = p
        self.m = m
        self.order = order
        if modulus is None:
            modulus = self._default_modulus(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError(
                    f"modulus must be monic of degree {m}, got {modulus}")
            if not _is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus
        self._build_tables()

    # -- construction internals --------------------------------------------

    @staticmethod
    def _default_modulus(p: int, m: int) -> tuple[int, ...]:
        if m == 1:
            return (0, 1)  # the field is GF(p) itself; any degree-1 poly works
        table = _DEFAULT_MODULI.get((p, m))
        if table is not None:
            return table
        for packed in range(p ** m):
            low = tuple((packed // p ** k) % p for k in range(m))
            candidate = low + (1,)
            if _is_irreducible(candidate, p):
                field_try = object.__new__(Field)
                field_try.p, field_try.m, field_try.order = p, m, p ** m
                field_try.modulus = candidate
                if field_try._packed_order(p) == p ** m - 1:
                    return candidate
        raise ValueError(f"no primitive polynomial found for GF({p}^{m})")

    def _unpack(self, v: int) -> list[int]:
        digits = []
        for _ in range(self.m):
            v, r = divmod(v, self.p)
            digits.append(r)
        return digits

    def _vec_add(self, u: int, v: int) -> int:
        if self.p == 2:
            return u ^ v
        du, dv = self._unpack(u), self._unpack(v)
        packed = 0
        for k in range(self.m - 1, -1, -1):
            packed = packed * self.p + (du[k] + dv[k]) % self.p
        return packed

    def _raw_mul(self, u: int, v: int) -> int:
        """Product of two packed vectors, reduced by the modulus."""
        p, m = self.p, self.m
        du, dv = self._unpack(u), self._unpack(v)
        prod = [0] * (2 * m - 1)
        for i, a in enumerate(du):
            if a:
                for j, b in enumerate(dv):
                    prod[i + j] = (prod[i + j] + a * b) % p
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(m):
                    prod[k - m + i] = (prod[k - m + i] - c * self.modulus[i]) % p
        packed = 0
        for k in range(m - 1, -1, -1):
            packed = packed * p + prod[k]
        return packed

    def _raw_pow(self, v: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._raw_mul(out, v)
            v = self._raw_mul(v, v)
            e >>= 1
        return out

    def _packed_order(self, start: int) -> int:
        """Multiplicative order of the packed value ``start``."""
        n = self.order - 1
        order = n
        for ell in _prime_factors(n):
            while order % ell == 0 and self._raw_pow(start, order // ell) == 1:
                order //= ell
        return order

    def _build_tables(self) -> None:
        q = self.order
        # the multiplicative group is cyclic, so this search always succeeds
        generator = next(v for v in range(1, q)
                         if self._packed_order(v) == q - 1)
        exp = [0] * max(q - 1, 1)
        log: dict[int, int] = {}
        acc = 1
        for k in range(max(q - 1, 1)):
            exp[k] = acc
            log[acc] = k
            acc = self._raw_mul(acc, generator)
        if len(log) != q - 1 and q > 2:
            raise ValueError("generator does not span the multiplicative group")
        self._exp = exp
        self._log = log
        self._neg_log = 0 if self.p == 2 else (q - 1) // 2
        if q <= 256:
            self._add_table = [[self._vec_add(u, v) for v in range(q)]
                               for u in range(q)]
        else:
            self._add_table = None
        self._elements = tuple(self._from_packed(v) for v in range(q))

    # -- public surface ------------------------------------------------------

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, -1)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def generator(self) -> "FieldElement":
        """The generator ``a``: first element (in enumeration order) whose
        multiplicative order is p^m - 1."""
        return FieldElement(self, 1 if self.order > 2 else 0)

    def element(self, value: int) -> "FieldElement":
        """The prime-subfield element value mod p."""
        return self._from_packed(value % self.p)

    def from_log(self, k: int) -> "FieldElement":
        return FieldElement(self, k % (self.order - 1))

    def _from_packed(self, v: int) -> "FieldElement":
        if v == 0:
            return FieldElement(self, -1)
        return FieldElement(self, self._log[v])

    def elements(self) -> tuple["FieldElement", ...]:
        """All p^m elements, zero first, then by packed coefficient vector."""
        return self._elements

    def parse(self, text: str) -> "FieldElement":
        """Parse the textual element grammar ("0", "2", "a", "a^5", ...)."""
        tok = text.strip()
        if tok.isdigit():
            return self.element(int(tok))
        if tok == "a":
            return self.generator
        if tok.startswith("a^") and tok[2:].isdigit():
            return self.generator ** int(tok[2:])
        raise ValueError(f"malformed field element token {text!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"


class FieldElement:
    """A field element: zero, or a power a^k of the field generator."""

    __slots__ = ("field", "_k")

    def __init__(self, field: Field, k: int) -> None:
        self.field = field
        self._k = k  # -1 encodes zero

    @property
    def is_zero(self) -> bool:
        return self._k < 0

    @property
    def log(self) -> int:
        """Discrete logarithm; undefined (raises) for zero."""
        if self._k < 0:
            raise ValueError("the zero element has no discrete logarithm")
        return self._k

    def _packed(self) -> int:
        return 0 if self._k < 0 else self.field._exp[self._k]

    def _require_same_field(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise ValueError(f"operands from different fields: {self!r}, {other!r}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._require_same_field(other)
        f = self.field
        u, v = self._packed(), other._packed()
        s = f._add_table[u][v] if f._add_table is not None else f._vec_add(u, v)
        return f._from_packed(s)

    def __neg__(self) -> "FieldElement":
        if self._k < 0:
            return self
        f = self.field
        return FieldElement(f, (self._k + f._neg_log) % (f.order - 1))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._require_same_field(other)
        if self._k < 0 or other._k < 0:
            return self.field.zero
        return FieldElement(self.field,
                            (self._k + other._k) % (self.field.order - 1))

    def inverse(self) -> "FieldElement":
        if self._k < 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return FieldElement(self.field, (-self._k) % (self.field.order - 1))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._require_same_field(other)
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        if self._k < 0:
            if e > 0:
                return self
            if e == 0:
                return self.field.one  # 0^0 == 1, so monomials evaluate sanely
            raise ZeroDivisionError("negative power of zero")
        return FieldElement(self.field, (self._k * e) % (self.field.order - 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self._k == other._k and self.field == other.field

    def __hash__(self) -> int:
        return hash((self._k, self.field.p, self.field.m))

    def __str__(self) -> str:
        if self._k < 0:
            return "0"
        packed = self._packed()
        if packed < self.field.p:
            return str(packed)
        return f"a^{self._k}"

    def __repr__(self) -> str:
        return str(self)


def canonical_key(elem: FieldElement) -> tuple[int, int]:
    """Sort key for the documented element order: 0, 1, a^1, a^2, ..."""
    if elem.is_zero:
        return (0, 0)
    return (1, elem.log)
