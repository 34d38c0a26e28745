"""Exact ground fields: rationals, prime fields GF(p), and cyclotomic quotients.

A field object owns the arithmetic; scalars are plain immutable Python
values in a canonical form that is unique per field element:

* rationals        -- ``fractions.Fraction`` (always reduced),
* GF(p)            -- ``int`` in ``[0, p)``,
* cyclotomic(n)    -- tuple of ``Fraction`` of length deg(Phi_n), the
                      coefficients of the residue mod the n-th cyclotomic
                      polynomial, lowest degree first.

All operations are pure and never leave canonical form, so ``==`` on raw
values is exact equality in the field.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import UsageError


def is_prime(n: int) -> bool:
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


# ----------------------------------------------------------------------
# rational polynomial helpers (ascending coefficient lists of Fraction),
# used only to build and reduce cyclotomic moduli
# ----------------------------------------------------------------------

def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod(a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b) and _poly_trim(a):
        k = len(a) - len(b)
        f = a[-1] * inv_lead
        q[k] = f
        for i, bi in enumerate(b):
            a[k + i] -= f * bi
        _poly_trim(a)
    return _poly_trim(q), a


_CYCLOTOMIC_CACHE: dict[int, list] = {}


def cyclotomic_polynomial(n: int):
    """Coefficients of Phi_n over the rationals, ascending, via the
    recursive division x^n - 1 = prod_{d | n} Phi_d."""
    if n < 1:
        raise UsageError("cyclotomic index must be >= 1")
    if n in _CYCLOTOMIC_CACHE:
        return list(_CYCLOTOMIC_CACHE[n])
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(num, cyclotomic_polynomial(d))
            if r:
                raise AssertionError("cyclotomic division left a remainder")
            num = q
    _CYCLOTOMIC_CACHE[n] = list(num)
    return num


class Field:
    """Common interface for the exact ground fields."""

    kind = "abstract"

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_one(self, a) -> bool:
        return a == self.one

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def from_int(self, k: int):
        return self.mul_int(self.one, k)

    def mul_int(self, a, k: int):
        if k == 0:
            return self.zero
        acc = self.zero
        neg = k < 0
        for _ in range(abs(k)):
            acc = self.add(acc, a)
        return self.neg(acc) if neg else acc

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        acc, base = self.one, a
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def multiplicative_order(self, a, bound: int = 10000):
        """Order of a in the multiplicative group, or None past the bound."""
        if self.is_zero(a):
            raise UsageError("zero has no multiplicative order")
        acc = a
        for k in range(1, bound + 1):
            if self.is_one(acc):
                return k
            acc = self.mul(acc, a)
        return None

    def to_json(self) -> dict:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash(tuple(sorted(self.to_json().items())))


class Rationals(Field):
    kind = "rationals"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in the rationals")
        return 1 / a

    def parse(self, text: str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad rational scalar {text!r}: {exc}") from None

    def show(self, a) -> str:
        return str(a)

    def to_json(self):
        return {"kind": "rationals"}

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    kind = "prime_field"

    @property
    def characteristic(self):
        return self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def parse(self, text: str):
        text = text.strip()
        m = re.fullmatch(r"(-?\d+)\s*/\s*(-?\d+)", text)
        try:
            if m:
                return self.div(int(m.group(1)) % self.p, int(m.group(2)) % self.p)
            return int(text) % self.p
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad GF({self.p}) scalar {text!r}: {exc}") from None

    def show(self, a) -> str:
        return str(a)

    def elements(self):
        return range(self.p)

    def to_json(self):
        return {"kind": "prime_field", "p": self.p}

    def __repr__(self):
        return f"GF({self.p})"


def _parse_cyclo_term(raw: str):
    """One additive term: rational, z, z^k, or rational [*] z[^k]."""
    t = raw.strip()
    sign = 1
    while t and t[0] in "+-":
        if t[0] == "-":
            sign = -sign
        t = t[1:].strip()
    if not t:
        raise UsageError(f"empty cyclotomic scalar term {raw!r}")
    if "z" in t:
        coef_part, _, tail = t.partition("z")
        coef_part = coef_part.strip()
        if coef_part.endswith("*"):
            coef_part = coef_part[:-1].strip()
        coef = Fraction(coef_part) if coef_part else Fraction(1)
        tail = tail.strip()
        if tail.startswith("^"):
            exp = int(tail[1:])
        elif tail:
            raise UsageError(f"bad cyclotomic scalar term {raw!r}")
        else:
            exp = 1
        return sign * coef, exp
    return sign * Fraction(t), 0


class CyclotomicField(Field):
    """Q[z] / (Phi_n(z)); ``z`` is a primitive n-th root of unity."""

    kind = "cyclotomic"
    characteristic = 0

    def __init__(self, n: int):
        if n < 1:
            raise UsageError("cyclotomic index must be >= 1")
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1
        self.zero = tuple([Fraction(0)] * self.degree)
        one = [Fraction(0)] * self.degree
        one[0] = Fraction(1)
        self.one = tuple(one)
        # x^k mod Phi_n for k up to 2*(deg-1), precomputed for products
        self._xpow = []
        cur = [Fraction(0)] * self.degree
        cur[0] = Fraction(1)
        for _ in range(2 * self.degree - 1):
            self._xpow.append(tuple(cur))
            cur = [Fraction(0)] + cur
            lead = cur.pop()  # coefficient at x^degree
            if lead:
                for i in range(self.degree):
                    cur[i] -= lead * self.modulus[i]

    @property
    def generator(self):
        if self.degree == 1:
            # Phi_1 = x - 1 or Phi_2 = x + 1: z is rational
            return tuple([-self.modulus[0]])
        g = [Fraction(0)] * self.degree
        g[1] = Fraction(1)
        return tuple(g)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        acc = [Fraction(0)] * self.degree
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj == 0:
                    continue
                for k, ck in enumerate(self._xpow[i + j]):
                    if ck:
                        acc[k] += ai * bj * ck
        return tuple(acc)

    def inv(self, a):
        if all(x == 0 for x in a):
            raise ZeroDivisionError(f"division by zero in Q(z_{self.n})")
        # extended Euclid in Q[x] against the (irreducible) modulus
        r0, r1 = list(self.modulus), _poly_trim(list(a))
        t0, t1 = [], [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _poly_trim(
                [
                    (t0[i] if i < len(t0) else Fraction(0))
                    - sum(
                        q[j] * t1[i - j]
                        for j in range(len(q))
                        if 0 <= i - j < len(t1)
                    )
                    for i in range(max(len(t0), len(q) + len(t1) - 1))
                ]
            )
        if len(r0) != 1:
            raise ZeroDivisionError("element is a zero divisor (modulus not coprime)")
        scale = 1 / r0[0]
        out = [Fraction(0)] * self.degree
        for i, c in enumerate(t0):
            out[i] = c * scale
        return tuple(out)

    def from_rational(self, q: Fraction):
        out = [Fraction(0)] * self.degree
        out[0] = Fraction(q)
        return tuple(out)

    def parse(self, text: str):
        text = text.strip().replace("-", "+-")
        if text.startswith("+"):
            text = text[1:]
        acc = self.zero
        for raw in text.split("+"):
            if not raw.strip():
                continue
            try:
                coef, exp = _parse_cyclo_term(raw)
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"bad cyclotomic scalar term {raw!r}: {exc}") from None
            term = self.from_rational(coef)
            if exp:
                term = self.mul(term, self.pow(self.generator, exp))
            acc = self.add(acc, term)
        return acc

    def show(self, a) -> str:
        parts = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                var = "z" if i == 1 else f"z^{i}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f"+{p}" if not p.startswith("-") else p
        return out

    def roots_of_unity(self):
        """All elements +/- z^j; contains every root of unity of the field."""
        out = []
        cur = self.one
        for _ in range(self.n):
            out.append(cur)
            out.append(self.neg(cur))
            cur = self.mul(cur, self.generator)
        seen, uniq = set(), []
        for v in out:
            if v not in seen:
                seen.add(v)
                uniq.append(v)
        return uniq

    def to_json(self):
        return {"kind": "cyclotomic", "n": self.n}

    def __repr__(self):
        return f"Q(z_{self.n})"


def field_from_json(data: dict) -> Field:
    if not isinstance(data, dict) or "kind" not in data:
        raise UsageError(f"bad field description {data!r}")
    kind = data["kind"]
    extra = set(data) - {"kind", "p", "n"}
    if extra:
        raise UsageError(f"unknown field keys {sorted(extra)}")
    if kind == "rationals":
        return Rationals()
    if kind in ("prime_field", "gfp"):
        if "p" not in data:
            raise UsageError("prime_field needs key 'p'")
        return PrimeField(int(data["p"]))
    if kind == "cyclotomic":
        if "n" not in data:
            raise UsageError("cyclotomic needs key 'n'")
        return CyclotomicField(int(data["n"]))
    raise UsageError(f"unknown field kind {kind!r}")
