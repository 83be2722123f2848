"""Exact arithmetic foundations: squarefree twists, half-integer quadratic
surds, and symbolic power-tower integers.

Everything here is integer or rational exact.  No floats: field-equality
verdicts downstream must be certificates, not approximations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class CapacityError(ValueError):
    """Input is valid but beyond a configured desk-scale guard."""


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# factorization / squarefree machinery


# Trial division bail-out: beyond this we cannot certify a cofactor prime.
_TRIAL_LIMIT = 10**6


def factorize(m: int) -> dict[int, int]:
    """Prime factorization of m >= 1 by trial division.

    Inputs in this package are smooth over a small prime set or below 1e8,
    so trial division is exact and fast.  Raises if a cofactor survives
    that cannot be certified prime.
    """
    if m < 1:
        raise ValueError(f"factorize requires m >= 1, got {m}")
    out: dict[int, int] = {}
    while m % 2 == 0:
        out[2] = out.get(2, 0) + 1
        m //= 2
    d = 3
    while d * d <= m:
        if d > _TRIAL_LIMIT:
            raise ValueError(f"cofactor {m} too large to factor by trial division")
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def star(m: int) -> int:
    """Twist an odd integer to the representative of +-m that is 1 mod 4."""
    if m % 2 == 0:
        raise ValueError(f"star is defined for odd integers, got {m}")
    return m if m % 4 == 1 else -m


def squarefree_kernel(m: int) -> int:
    """Product of the primes dividing m to an odd power; m // kernel is square."""
    k = 1
    for p, e in factorize(m).items():
        if e % 2:
            k *= p
    return k


def disc_class(d: int) -> int:
    """Class of the twisted discriminant of odd d >= 1 in Q*/(Q*)^2.

    Equals star(squarefree_kernel(d)): odd squares are 1 mod 8, so d and its
    kernel agree mod 8 and the twist sign carries over to the kernel.
    """
    if d < 1:
        raise ValueError(f"disc_class requires d >= 1, got {d}")
    if d % 2 == 0:
        raise ValueError(f"disc_class requires odd d, got {d}")
    return star(squarefree_kernel(d))


def is_signed_squarefree(v: int) -> bool:
    """True iff v is nonzero and no prime square divides |v|."""
    if v == 0:
        return False
    return squarefree_kernel(abs(v)) == abs(v)


# ---------------------------------------------------------------------------
# quadratic field elements (u + v*sqrt(D)) / 2


@dataclass(frozen=True, eq=False)
class QuadElement:
    """Exact algebraic integer (u + v*sqrt(D))/2 in Q(sqrt(D)), D = 1 mod 4.

    u = v (mod 2) so the value lies in the ring of integers; v = 0 encodes
    the rational u/2 and normalizes D to 1.  D is a signed squarefree
    integer; constructors in this package derive it from disc_class.
    """

    u: int
    v: int
    D: int = 1

    def __post_init__(self) -> None:
        if self.D % 4 != 1:
            raise ValueError(f"radicand must be 1 mod 4, got {self.D}")
        if (self.u - self.v) % 2 != 0:
            raise ValueError(f"u and v must have equal parity, got ({self.u},{self.v})")
        if self.D == 1 and self.v != 0:
            # sqrt(1) = 1: fold into the rational part
            object.__setattr__(self, "u", self.u + self.v)
            object.__setattr__(self, "v", 0)
        if self.v == 0 and self.D != 1:
            object.__setattr__(self, "D", 1)

    @staticmethod
    def from_int(k: int) -> "QuadElement":
        return QuadElement(2 * k, 0, 1)

    @staticmethod
    def coerce(x: "QuadElement | int") -> "QuadElement":
        return x if isinstance(x, QuadElement) else QuadElement.from_int(x)

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.u, 2)

    def _join_radicand(self, other: "QuadElement") -> int:
        if self.v and other.v and self.D != other.D:
            raise ValueError(f"mixed radicands {self.D} and {other.D}")
        return self.D if self.v else other.D

    def __add__(self, other: "QuadElement | int") -> "QuadElement":
        other = QuadElement.coerce(other)
        D = self._join_radicand(other)
        return QuadElement(self.u + other.u, self.v + other.v, D)

    __radd__ = __add__

    def __neg__(self) -> "QuadElement":
        return QuadElement(-self.u, -self.v, self.D)

    def __sub__(self, other: "QuadElement | int") -> "QuadElement":
        return self + (-QuadElement.coerce(other))

    def __rsub__(self, other: int) -> "QuadElement":
        return QuadElement.coerce(other) - self

    def __mul__(self, other: "QuadElement | int") -> "QuadElement":
        other = QuadElement.coerce(other)
        D = self._join_radicand(other)
        uu = self.u * other.u + self.v * other.v * D
        vv = self.u * other.v + self.v * other.u
        # closure of the half-integer ring: both numerators are even
        assert uu % 2 == 0 and vv % 2 == 0
        return QuadElement(uu // 2, vv // 2, D)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadElement":
        """Algebraic conjugate: flips the sign of the surd."""
        return QuadElement(self.u, -self.v, self.D)

    def complex_conjugate(self) -> "QuadElement":
        """Complex conjugate: identity for real surds (D > 0)."""
        return self.conjugate() if self.D < 0 else self

    def norm(self) -> Fraction:
        """Field norm to Q: value times its algebraic conjugate."""
        return Fraction(self.u * self.u - self.v * self.v * self.D, 4)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.v == 0 and self.u == 2 * other
        if isinstance(other, Fraction):
            return self.v == 0 and Fraction(self.u, 2) == other
        if isinstance(other, QuadElement):
            return (self.u, self.v, self.D) == (other.u, other.v, other.D)
        return NotImplemented

    def __hash__(self) -> int:
        if self.v == 0:
            return hash(Fraction(self.u, 2))
        return hash((self.u, self.v, self.D))

    def __str__(self) -> str:
        if self.v == 0:
            return str(self.u // 2) if self.u % 2 == 0 else f"{self.u}/2"
        return f"({self.u}{self.v:+d}√{self.D})/2"

    __repr__ = __str__


def qf_arith(a: QuadElement, b: QuadElement | None = None, kind: str = "add"):
    """Dispatch exact arithmetic on quadratic elements.

    kind: add | mul (binary), conj | norm (unary, b ignored).
    """
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "conj":
        return a.conjugate()
    if kind == "norm":
        return a.norm()
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# symbolic power towers: offset + 2^2^...^top
#
# T(h, t) denotes the pure tower with h twos: T(0, t) = t, T(h, t) = 2^T(h-1, t).
# Comparisons below never materialize a value beyond a bit-size cap; verdicts
# on non-materializable towers come from exact margin certificates (powers of
# two with distinct integer exponents differ by at least a factor of two).


def _tower_capped(height: int, top: int, cap_bits: int) -> int | None:
    """T(height, top) materialized iff the value fits in cap_bits bits."""
    v = top
    if height >= 1 and v.bit_length() > cap_bits:
        return None
    for _ in range(height):
        if v >= cap_bits:
            return None
        v = 1 << v
    return v if v.bit_length() <= cap_bits else None


def _mat(height: int, top: int, cap_bits: int) -> int | None:
    """Like _tower_capped, but height 0 always yields the in-memory top."""
    if height == 0:
        return top
    return _tower_capped(height, top, cap_bits)


def _cmp_tower_vs_int(h: int, t: int, x: int) -> int:
    """Sign of T(h, t) - x for x >= 1, by iterated bit-length descent."""
    if h == 0:
        return _sign(t - x)
    # T = 2^w with w = T(h-1, t); x < 2^b for b = bitlength(x)
    b = x.bit_length()
    if _cmp_tower_vs_int(h - 1, t, b) >= 0:
        return 1  # w >= b implies 2^w >= 2^b > x
    w = _mat(h - 1, t, b.bit_length() + 2)  # w < b, so it is machine-small
    assert w is not None
    return _sign((1 << w) - x)


def _cmp_pure(h1: int, t1: int, h2: int, t2: int) -> int:
    """Sign of T(h1, t1) - T(h2, t2)."""
    while h1 > 0 and h2 > 0:  # 2^x is strictly increasing
        h1 -= 1
        h2 -= 1
    if h1 == 0 and h2 == 0:
        return _sign(t1 - t2)
    if h1 == 0:
        return -_cmp_tower_vs_int(h2, t2, t1)
    return _cmp_tower_vs_int(h1, t1, t2)


def _cmp_pow2_vs_int(s: int, eh: int, et: int, x: int) -> int:
    """Sign of s*2^E - x with E = T(eh, et) and s >= 1."""
    if x < 1:
        return 1
    b = x.bit_length()
    if eh >= 1 and _cmp_tower_vs_int(eh, et, b) >= 0:
        return 1  # E >= b: s*2^E >= 2^b > x
    e = _mat(eh, et, b.bit_length() + 2)
    assert e is not None
    if e >= b:
        return 1
    return _sign(s * (1 << e) - x)


def _cmp_shifted(sa: int, ah: int, at: int, sb: int, bh: int, bt: int) -> int:
    """Sign of sa*2^A - sb*2^B with A = T(ah, at), B = T(bh, bt)."""
    cap = max(21, sa.bit_length() + 8, sb.bit_length() + 8)
    ea = _mat(ah, at, cap)
    eb = _mat(bh, bt, cap)
    if ea is not None and eb is None:
        eb = _mat(bh, bt, (ea + sa.bit_length() + 65).bit_length())
        if eb is None:  # B > A + bits(sa) + 64: the b side certifiably wins
            return -1
    elif eb is not None and ea is None:
        ea = _mat(ah, at, (eb + sb.bit_length() + 65).bit_length())
        if ea is None:
            return 1
    if ea is not None and eb is not None:
        g = ea - eb
        if g >= 0:
            if g >= sb.bit_length():
                return 1  # sa*2^g >= 2^g > sb
            return _sign((sa << g) - sb)
        if -g >= sa.bit_length():
            return -1
        return _sign(sa - (sb << -g))
    # both exponents are towers of height >= 1 exceeding 2^cap: they are
    # powers of two, so if they differ, the gap dwarfs both scale factors
    c = _cmp_pure(ah, at, bh, bt)
    if c == 0:
        return _sign(sa - sb)
    return c


def _cmp_scaled(sa: int, ha: int, ta: int, sb: int, hb: int, tb: int) -> int:
    """Sign of sa*T(ha, ta) - sb*T(hb, tb) for sa, sb >= 1."""
    if ha == 0 and hb == 0:
        return _sign(sa * ta - sb * tb)
    if ha == 0:
        return -_cmp_pow2_vs_int(sb, hb - 1, tb, sa * ta)
    if hb == 0:
        return _cmp_pow2_vs_int(sa, ha - 1, ta, sb * tb)
    return _cmp_shifted(sa, ha - 1, ta, sb, hb - 1, tb)


def _cmp_scaled_vs_int(s: int, h: int, t: int, x: int) -> int:
    """Sign of s*T(h, t) - x."""
    if h == 0:
        return _sign(s * t - x)
    return _cmp_pow2_vs_int(s, h - 1, t, x)


def _body_bits_ok(height: int, top: int, scale: int, cap_bits: int) -> int | None:
    """The tower body (no offset) as an int iff it fits in cap_bits bits."""
    if height == 0:
        return top if top.bit_length() <= cap_bits else None
    e_tower = _tower_capped(height - 1, top, max(cap_bits.bit_length() + 1, 8))
    if e_tower is None:
        return None
    e = scale * e_tower
    if e >= cap_bits:
        return None
    return 1 << e


@dataclass(frozen=True, eq=False)
class TowerInt:
    """Nonnegative integer offset + 2^2^...^top with `height` twos.

    height = 0 denotes offset + top.  For height >= 1 the topmost exponent
    may carry an integer multiplier `scale` (how k-th powers of pure towers
    are represented): the value is offset + 2**(scale * T(height-1, top)).

    Canonical form: a body that fits in 64 bits collapses into a plain
    height-0 integer; otherwise the height is raised while the top is an
    exact power of two, so 2^2^16 and 2^65536 normalize identically.
    Ordering and equality follow the denoted integers via tower_cmp.
    """

    offset: int
    height: int
    top: int
    scale: int = 1

    def __post_init__(self) -> None:
        if self.offset < 0 or self.height < 0 or self.top < 1 or self.scale < 1:
            raise ValueError(f"malformed tower ({self.offset},{self.height},{self.top},{self.scale})")
        if self.height == 0 and self.scale != 1:
            raise ValueError("scale requires height >= 1")
        self._canonicalize()

    def _canonicalize(self) -> None:
        offset, height, top, scale = self.offset, self.height, self.top, self.scale
        while True:
            body = _body_bits_ok(height, top, scale, 64)
            if body is not None:
                offset, height, top, scale = 0, 0, offset + body, 1
                break
            if height >= 2 and top == 1:  # T(k, 1) = T(k-1, 2)
                height -= 1
                top = 2
                continue
            if height == 1 and scale != 1:  # 2^(s*t) at height 1
                top *= scale
                scale = 1
                continue
            if height == 2 and scale % 2 == 0:  # 2^(2s*2^t) = 2^(s*2^(t+1))
                scale //= 2
                top += 1
                continue
            if height >= 1 and scale == 1 and top >= 4 and top & (top - 1) == 0:
                height += 1
                top = top.bit_length() - 1
                continue
            break
        if height == 0 and offset:
            top += offset
            offset = 0
        for k, v in (("offset", offset), ("height", height), ("top", top), ("scale", scale)):
            object.__setattr__(self, k, v)

    # -- materialization ----------------------------------------------------

    def value_capped(self, cap_bits: int = 1 << 22) -> int | None:
        """The denoted integer, or None if it needs more than ~cap_bits bits."""
        body = _body_bits_ok(self.height, self.top, self.scale, cap_bits)
        return None if body is None else self.offset + body

    def value(self) -> int:
        v = self.value_capped()
        if v is None:
            raise CapacityError(f"{self} is too large to materialize")
        return v

    # -- ordering -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            if other < 1:
                return False
            other = TowerInt(0, 0, other)
        if not isinstance(other, TowerInt):
            return NotImplemented
        return tower_cmp(self, other) == 0

    __hash__ = None  # equality is by denoted value; not usable as a dict key

    def __lt__(self, other: "TowerInt") -> bool:
        return tower_cmp(self, other) < 0

    def __le__(self, other: "TowerInt") -> bool:
        return tower_cmp(self, other) <= 0

    def __gt__(self, other: "TowerInt") -> bool:
        return tower_cmp(self, other) > 0

    def __ge__(self, other: "TowerInt") -> bool:
        return tower_cmp(self, other) >= 0

    def __str__(self) -> str:
        if self.height == 0:
            return str(self.top)
        inner = "2^" * (self.height - 1) + str(self.top)
        body = f"2^{inner}" if self.scale == 1 else f"2^({self.scale}*{inner})"
        return f"{self.offset}+{body}" if self.offset else body

    __repr__ = __str__

    def to_json_dict(self) -> dict:
        d = {"offset": json_int(self.offset), "height": self.height,
             "top": json_int(self.top)}
        if self.scale != 1:
            d["scale"] = json_int(self.scale)
        return d


def json_int(x: int):
    """Ints that may exceed 64 bits serialize as decimal strings."""
    return x if -(2**63) < x < 2**63 else str(x)


def tower_pow(x: TowerInt, k: int) -> TowerInt:
    """x**k as a TowerInt; a symbolic (height >= 1) x must have zero offset."""
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    if x.height == 0:
        return TowerInt(0, 0, x.top**k)
    if x.offset != 0:
        raise ValueError("cannot exponentiate a symbolic tower with an offset")
    return TowerInt(0, x.height, x.top, x.scale * k)


def tower_cmp(a: TowerInt, b: TowerInt) -> int:
    """Total order on denoted integers: -1, 0, or 1.

    Materializes both sides when they fit; otherwise decides on the tower
    bodies (powers of two with enormous exponents) after certifying that
    the winning margin exceeds any offset difference.
    """
    cap = max(1 << 22,
              a.offset.bit_length() + 65, b.offset.bit_length() + 65,
              (a.top.bit_length() if a.height == 0 else 0) + 65,
              (b.top.bit_length() if b.height == 0 else 0) + 65)
    va = a.value_capped(cap)
    vb = b.value_capped(cap)
    if va is not None and vb is not None:
        return _sign(va - vb)
    if vb is not None:  # a's body alone needs >= cap bits
        va = a.value_capped(vb.bit_length() + 66)
        if va is not None:
            return _sign(va - vb)
        return 1  # body(a) >= 2^(bits(vb)+66) > vb
    if va is not None:
        vb = b.value_capped(va.bit_length() + 66)
        if vb is not None:
            return _sign(va - vb)
        return -1
    # both bodies are non-materializable powers of two: compare exponents;
    # distinct integer exponents make the bodies differ by >= a factor of 2,
    # i.e. by >= 2^(cap-1), which exceeds both offsets by construction of cap
    c = _cmp_scaled(a.scale, a.height - 1, a.top, b.scale, b.height - 1, b.top)
    if c == 0:
        return _sign(a.offset - b.offset)
    return c
