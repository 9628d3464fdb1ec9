"""Exact arithmetic in GF(p^m) and in relative extensions GF(q^t).

Fields are built as towers: a prime field GF(p), optionally an extension
GF(q) = GF(p)[x]/(f), and on top of that further extensions such as
GF(q^2) = GF(q)[y]/(g).  Elements are plain Python ints in
``range(field.order)``: the base-s digits of the int (s = order of the
field one level down) are the coordinates of the element in the
polynomial basis, ascending powers.  Two consequences of this encoding
are used throughout the library:

* an element of a tower subfield is represented by the *same* int at
  every level above it, and
* the base-p digits of an int are exactly the coordinates of the
  element over the prime field.

Arithmetic is table-driven for small fields (the only kind this library
targets) and falls back to direct polynomial reduction above the table
threshold.  Field objects are immutable and safe to share across
threads; all operations are pure functions.
"""

from __future__ import annotations

import itertools
from functools import reduce

from .errors import DivisionByZero, NonPrimeModulus, ReduciblePolynomial

#: orders up to which add/mul/inv/trace tables are precomputed
_TABLE_MAX = 512


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n):
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
# polynomial helpers over an arbitrary Field
#
# Polynomials are tuples of field ints, ascending powers, no trailing zeros
# (the zero polynomial is the empty tuple).
# ---------------------------------------------------------------------------

def _ptrim(u):
    i = len(u)
    while i > 0 and u[i - 1] == 0:
        i -= 1
    return tuple(u[:i])


def _padd(F, u, v):
    n = max(len(u), len(v))
    u = tuple(u) + (0,) * (n - len(u))
    v = tuple(v) + (0,) * (n - len(v))
    return _ptrim([F.add(a, b) for a, b in zip(u, v)])


def _pmul(F, u, v):
    if not u or not v:
        return ()
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            if b:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return _ptrim(out)


def _pdivmod(F, u, v):
    """Quotient and remainder of u by v (v nonzero)."""
    u = list(u)
    dv = len(v) - 1
    inv_lead = F.inv(v[-1])
    q = [0] * max(0, len(u) - dv)
    while len(_ptrim(u)) - 1 >= dv and u:
        u = list(_ptrim(u))
        if len(u) - 1 < dv:
            break
        c = F.mul(u[-1], inv_lead)
        s = len(u) - 1 - dv
        q[s] = c
        for j, b in enumerate(v):
            u[s + j] = F.sub(u[s + j], F.mul(c, b))
    return _ptrim(q), _ptrim(u)


def _pgcd(F, u, v):
    while v:
        _, u, v = None, v, _pdivmod(F, u, v)[1]
    if not u:
        return ()
    c = F.inv(u[-1])
    return tuple(F.mul(c, a) for a in u)


def _pmulmod(F, u, v, mod):
    return _pdivmod(F, _pmul(F, u, v), mod)[1]


def _ppowmod(F, u, e, mod):
    r = (1,)
    u = _pdivmod(F, u, mod)[1]
    while e:
        if e & 1:
            r = _pmulmod(F, r, u, mod)
        u = _pmulmod(F, u, u, mod)
        e >>= 1
    return r


def is_irreducible(base: "Field", poly) -> bool:
    """Rabin's irreducibility test for a monic polynomial over ``base``.

    ``poly`` has degree d and is irreducible iff x^(s^d) = x mod poly
    and gcd(x^(s^(d/r)) - x, poly) = 1 for every prime divisor r of d,
    where s = base.order.
    """
    poly = tuple(poly)
    d = len(poly) - 1
    if d < 1 or poly[-1] != 1:
        return False
    if d == 1:
        return True
    s = base.order
    x = (0, 1)
    for r in _prime_factors(d):
        h = _ppowmod(base, x, s ** (d // r), poly)
        g = _pgcd(base, _padd(base, h, tuple(base.neg(c) for c in x)), poly)
        if g != (1,):
            return False
    h = _ppowmod(base, x, s ** d, poly)
    return _padd(base, h, tuple(base.neg(c) for c in x)) == ()


def smallest_irreducible(base: "Field", degree: int):
    """Lexicographically smallest monic irreducible of given degree.

    Monic polynomials are ordered by their ascending coefficient tuple
    (c_0, ..., c_{degree-1}); the scan is exhaustive and deterministic.
    """
    for coeffs in itertools.product(range(base.order), repeat=degree):
        poly = coeffs + (1,)
        if is_irreducible(base, poly):
            return poly
    raise ReduciblePolynomial(
        f"no irreducible polynomial of degree {degree} over GF({base.order})?"
    )


# ---------------------------------------------------------------------------
# Field
# ---------------------------------------------------------------------------

class Field:
    """A finite field in tower representation.

    A Field is either a prime field GF(p) (``base is None``) or the
    quotient ``base[y]/(poly)`` with ``poly`` a monic irreducible of
    degree ``deg`` over ``base``.  Elements are ints in
    ``range(order)``; see the module docstring for the encoding.
    """

    __slots__ = (
        "p", "base", "poly", "deg", "order", "abs_deg",
        "_add_t", "_mul_t", "_inv_t", "_trace_t", "_np_add", "_np_mul",
        "_mul_gen",
    )

    def __init__(self, p: int, base: "Field | None" = None, poly=None):
        if base is None:
            if not is_prime(p):
                raise NonPrimeModulus(f"{p} is not prime")
            self.p = p
            self.base = None
            self.poly = None
            self.deg = 1
            self.order = p
            self.abs_deg = 1
        else:
            poly = tuple(int(c) for c in poly)
            d = len(poly) - 1
            if d < 1 or poly[-1] != 1:
                raise ReduciblePolynomial("defining polynomial must be monic of degree >= 1")
            if any(not (0 <= c < base.order) for c in poly):
                raise ReduciblePolynomial("polynomial coefficients outside the base field")
            if not is_irreducible(base, poly):
                raise ReduciblePolynomial(
                    f"polynomial {list(poly)} is reducible over GF({base.order})"
                )
            self.p = base.p
            self.base = base
            self.poly = poly
            self.deg = d
            self.order = base.order ** d
            self.abs_deg = base.abs_deg * d
        self._add_t = self._mul_t = self._inv_t = self._trace_t = None
        self._np_add = self._np_mul = None
        self._mul_gen = None
        if self.order <= _TABLE_MAX:
            self._build_tables()

    # -- representation helpers ------------------------------------------

    def rel_coords(self, x: int):
        """Coordinates of x over the base field, ascending powers."""
        s = self.base.order if self.base else self.p
        out = []
        for _ in range(self.deg):
            x, r = divmod(x, s)
            out.append(r)
        return tuple(out)

    def from_rel_coords(self, coords) -> int:
        s = self.base.order if self.base else self.p
        x = 0
        for c in reversed(coords):
            x = x * s + c
        return x

    def p_coords(self, x: int):
        """Coordinates of x over the prime field (base-p digits)."""
        out = []
        for _ in range(self.abs_deg):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def from_p_coords(self, coords) -> int:
        x = 0
        for c in reversed(coords):
            x = x * self.p + c
        return x

    def tower(self):
        """Chain of fields from self down to the prime field."""
        chain = [self]
        while chain[-1].base is not None:
            chain.append(chain[-1].base)
        return chain

    def has_subfield(self, sub: "Field") -> bool:
        return any(f is sub or f == sub for f in self.tower())

    def decompose(self, x: int, sub: "Field"):
        """Coordinates of x over a tower subfield, ascending powers."""
        if not self.has_subfield(sub):
            raise ValueError("not a subfield in this tower")
        e = self.order
        k = 0
        while e > 1:
            e //= sub.order
            k += 1
        if sub.order ** k != self.order:
            raise ValueError("subfield order does not divide evenly")
        out = []
        for _ in range(k):
            x, r = divmod(x, sub.order)
            out.append(r)
        return tuple(out)

    def compose(self, coords, sub: "Field") -> int:
        x = 0
        for c in reversed(coords):
            x = x * sub.order + c
        return x

    def in_subfield(self, x: int, sub: "Field") -> bool:
        """True iff x lies in the given tower subfield."""
        return all(c == 0 for c in self.decompose(x, sub)[1:])

    # -- arithmetic --------------------------------------------------------

    def elements(self):
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        t = self._add_t
        if t is not None:
            return t[a][b]
        return self._add_direct(a, b)

    def _add_direct(self, a, b):
        if self.base is None:
            return (a + b) % self.p
        s = self.base.order
        out, mult = 0, 1
        for _ in range(self.deg):
            a, ra = divmod(a, s)
            b, rb = divmod(b, s)
            out += self.base.add(ra, rb) * mult
            mult *= s
        return out

    def neg(self, a: int) -> int:
        if self.base is None:
            return (-a) % self.p
        s = self.base.order
        out, mult = 0, 1
        for _ in range(self.deg):
            a, ra = divmod(a, s)
            out += self.base.neg(ra) * mult
            mult *= s
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        t = self._mul_t
        if t is not None:
            return t[a][b]
        return self._mul_direct(a, b)

    def _mul_direct(self, a, b):
        if self.base is None:
            return (a * b) % self.p
        B, d = self.base, self.deg
        u, v = self.rel_coords(a), self.rel_coords(b)
        conv = [0] * (2 * d - 1)
        for i, ca in enumerate(u):
            if ca == 0:
                continue
            for j, cb in enumerate(v):
                if cb:
                    conv[i + j] = B.add(conv[i + j], B.mul(ca, cb))
        # reduce modulo the monic defining polynomial
        for i in range(2 * d - 2, d - 1, -1):
            c = conv[i]
            if c == 0:
                continue
            conv[i] = 0
            for j in range(d):
                conv[i - d + j] = B.sub(conv[i - d + j], B.mul(c, self.poly[j]))
        return self.from_rel_coords(conv[:d])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        t = self._inv_t
        if t is not None:
            return t[a]
        return self.pow(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def frobenius(self, a: int) -> int:
        """The p-power map a -> a^p (a field automorphism)."""
        return self.pow(a, self.p)

    def frobenius_base(self, a: int) -> int:
        """The base-order power map a -> a^s with s = |base field|."""
        s = self.base.order if self.base else self.p
        return self.pow(a, s)

    def trace_to_prime(self, x: int) -> int:
        """Absolute trace sum_{i=0}^{M-1} x^(p^i) as an int in range(p)."""
        t = self._trace_t
        if t is not None:
            return t[x]
        return self._trace_direct(x)

    def _trace_direct(self, x):
        acc, y = x, x
        for _ in range(self.abs_deg - 1):
            y = self.frobenius(y)
            acc = self.add(acc, y)
        coords = self.p_coords(acc)
        if any(coords[1:]):
            raise ArithmeticError("trace left the prime field; arithmetic bug")
        return coords[0]

    def multiplicative_generator(self) -> int:
        """Smallest int generating the multiplicative group."""
        if self._mul_gen is not None:
            return self._mul_gen
        target = self.order - 1
        for g in range(1, self.order):
            e, x = 1, g
            while x != 1:
                x = self.mul(x, g)
                e += 1
            if e == target:
                self._mul_gen = g
                return g
        raise ArithmeticError("no multiplicative generator found; arithmetic bug")

    # -- distinguished basis of a quadratic extension ----------------------

    @property
    def gamma(self) -> int:
        """The class of the extension variable; with 1 it spans self over base."""
        if self.base is None:
            raise AttributeError("prime fields have no distinguished gamma")
        return self.base.order

    def split(self, v: int):
        """Coordinates (a, b) with v = a*1 + b*gamma, for degree-2 extensions."""
        if self.base is None or self.deg != 2:
            raise AttributeError("split is defined on quadratic extensions only")
        b, a = divmod(v, self.base.order)
        return a, b

    def unsplit(self, a: int, b: int) -> int:
        if self.base is None or self.deg != 2:
            raise AttributeError("unsplit is defined on quadratic extensions only")
        return a + b * self.base.order

    # -- tables ------------------------------------------------------------

    def _build_tables(self):
        n = self.order
        self._mul_t = tuple(
            tuple(self._mul_direct(a, b) for b in range(n)) for a in range(n)
        )
        self._add_t = tuple(
            tuple(self._add_direct(a, b) for b in range(n)) for a in range(n)
        )
        inv = [0] * n
        for a in range(1, n):
            inv[a] = self.pow(a, n - 2)
        self._inv_t = tuple(inv)
        self._trace_t = tuple(self._trace_direct(x) for x in range(n))

    def np_tables(self):
        """(add, mul) tables as numpy arrays, for vectorized enumeration."""
        if self._np_add is None:
            import numpy as np

            if self.order > _TABLE_MAX:
                raise CodeTooLargeForTables(self.order)
            self._np_add = np.array(self._add_t, dtype=np.uint16)
            self._np_mul = np.array(self._mul_t, dtype=np.uint16)
        return self._np_add, self._np_mul

    # -- identity ------------------------------------------------------------

    def _key(self):
        if self.base is None:
            return ("prime", self.p)
        return ("ext", self.base._key(), self.poly)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.base is None:
            return f"GF({self.p})"
        return f"GF({self.order})"


class CodeTooLargeForTables(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# public constructors
# ---------------------------------------------------------------------------

def prime_field(p: int) -> Field:
    """GF(p) for a prime p."""
    return Field(p)


def field_make(p: int, m: int, poly) -> Field:
    """GF(p^m) as GF(p)[x]/(poly); poly monic of degree m, ascending coeffs.

    For m = 1 any monic linear polynomial is accepted and the prime field
    itself is returned.
    """
    if not is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    if m < 1:
        raise ReduciblePolynomial("extension degree must be >= 1")
    poly = tuple(int(c) for c in poly)
    if len(poly) != m + 1 or poly[-1] != 1:
        raise ReduciblePolynomial(f"need a monic polynomial of degree {m}")
    base = Field(p)
    if m == 1:
        return base
    return Field(p, base, poly)


def ext_field_make(base: Field, t: int, poly=None) -> Field:
    """GF(q^t) as base[y]/(poly); canonical poly when none is given."""
    if t < 2:
        raise ReduciblePolynomial("relative extension degree must be >= 2")
    if poly is None:
        poly = smallest_irreducible(base, t)
    return Field(base.p, base, poly)


def quad_ext_make(base: Field) -> Field:
    """GF(q^2) over GF(q) with the lexicographically smallest monic
    irreducible quadratic; gamma is the class of the variable."""
    ext = ext_field_make(base, 2)
    g = ext.gamma
    if ext.pow(g, base.order) == g:
        raise ArithmeticError("gamma fixed by the base Frobenius; arithmetic bug")
    return ext


def rel_trace_and_split(ext: Field, v: int):
    """Unique (a, b) over the base field with v = a*1 + b*gamma."""
    return ext.split(v)


# ---------------------------------------------------------------------------
# JSON codecs
# ---------------------------------------------------------------------------

def field_to_json(F: Field) -> dict:
    if F.base is None:
        return {"p": F.p, "m": 1, "poly": [0, 1]}
    if F.base.base is not None:
        raise ValueError("only absolute fields GF(p^m) serialize with this codec")
    return {"p": F.p, "m": F.deg, "poly": list(F.poly)}


def field_from_json(obj: dict) -> Field:
    p, m = int(obj["p"]), int(obj["m"])
    poly = obj.get("poly")
    if poly is None:
        poly = [0, 1] if m == 1 else list(smallest_irreducible(Field(p), m))
    return field_make(p, m, poly)


def elem_to_json(F: Field, x: int):
    """Serialize an element as nested coordinate lists (ints at GF(p))."""
    if F.base is None:
        return int(x)
    return [elem_to_json(F.base, c) for c in F.rel_coords(x)]


def elem_from_json(F: Field, obj) -> int:
    if F.base is None:
        x = int(obj)
        if not 0 <= x < F.p:
            raise ValueError(f"residue {x} outside GF({F.p})")
        return x
    if not isinstance(obj, (list, tuple)) or len(obj) != F.deg:
        raise ValueError(f"need {F.deg} coordinates for an element of GF({F.order})")
    return F.from_rel_coords([elem_from_json(F.base, c) for c in obj])
