"""Exact arithmetic in Z[j, sqrt(p)] with j^2 = -1, plus Gauss sums.

An element is a0 + a1 j + (b0 + b1 j) sqrt(p).  The formal sqrt(p) is the
square root of p fixed by the quadratic Gauss sum: G_1 for p = 1 mod 4 and
j^-1 G_1 for p = 3 mod 4.  Under the embedding j -> i (counterclockwise
quarter turn) that is the positive real root.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

# Gaussian integers as (re, im) pairs


def _gmul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _gadd(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    return (x[0] + y[0], x[1] + y[1])


def _gdivisible(x: tuple[int, int], d: int) -> bool:
    return x[0] % d == 0 and x[1] % d == 0


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, math.isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def eps_of(p: int) -> int:
    """The sign with p = eps (mod 4)."""
    require_odd_prime(p)
    return 1 if p % 4 == 1 else -1


@dataclass(frozen=True)
class QuarticElem:
    a0: int
    a1: int
    b0: int
    b1: int
    p: int

    @classmethod
    def of(cls, p: int, a0: int = 0, a1: int = 0, b0: int = 0, b1: int = 0) -> QuarticElem:
        require_odd_prime(p)
        return cls(a0, a1, b0, b1, p)

    @classmethod
    def j(cls, p: int) -> QuarticElem:
        return cls.of(p, 0, 1)

    @classmethod
    def sqrt_p(cls, p: int) -> QuarticElem:
        return cls.of(p, 0, 0, 1)

    @property
    def rational(self) -> tuple[int, int]:
        """The Z[j] part a0 + a1 j."""
        return (self.a0, self.a1)

    @property
    def irrational(self) -> tuple[int, int]:
        """The coefficient b0 + b1 j of sqrt(p)."""
        return (self.b0, self.b1)

    @property
    def in_gaussian(self) -> bool:
        return self.b0 == 0 and self.b1 == 0

    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.a0, self.a1, self.b0, self.b1)

    def _coerce(self, other) -> QuarticElem:
        if isinstance(other, QuarticElem):
            if other.p != self.p:
                raise ValueError(f"mismatched primes {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return QuarticElem(other, 0, 0, 0, self.p)
        if isinstance(other, RootOfUnity4):
            return other.elem(self.p)
        return NotImplemented

    def __add__(self, other) -> QuarticElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuarticElem(self.a0 + o.a0, self.a1 + o.a1, self.b0 + o.b0, self.b1 + o.b1, self.p)

    __radd__ = __add__

    def __neg__(self) -> QuarticElem:
        return QuarticElem(-self.a0, -self.a1, -self.b0, -self.b1, self.p)

    def __sub__(self, other) -> QuarticElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other) -> QuarticElem:
        return (-self) + other

    def __mul__(self, other) -> QuarticElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        alpha, beta = self.rational, self.irrational
        gamma, delta = o.rational, o.irrational
        bd = _gmul(beta, delta)
        rat = _gadd(_gmul(alpha, gamma), (self.p * bd[0], self.p * bd[1]))
        irr = _gadd(_gmul(alpha, delta), _gmul(beta, gamma))
        return QuarticElem(rat[0], rat[1], irr[0], irr[1], self.p)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QuarticElem:
        if e < 0:
            raise ValueError("negative powers are not in the ring")
        out, base = QuarticElem(1, 0, 0, 0, self.p), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate_sqrt(self) -> QuarticElem:
        """sqrt(p) -> -sqrt(p)."""
        return QuarticElem(self.a0, self.a1, -self.b0, -self.b1, self.p)

    def to_complex(self) -> complex:
        r = math.sqrt(self.p)
        return complex(self.a0 + self.b0 * r, self.a1 + self.b1 * r)

    def __str__(self) -> str:
        def g(x: tuple[int, int]) -> str:
            if x[1] == 0:
                return str(x[0])
            if x[0] == 0:
                return f"{x[1]}j"
            return f"({x[0]}{x[1]:+}j)"

        rat, irr = self.rational, self.irrational
        parts = []
        if rat != (0, 0):
            parts.append(g(rat))
        if irr != (0, 0):
            parts.append(f"{g(irr)}*sqrt({self.p})")
        return " + ".join(parts) or "0"


def ring_mul(x: QuarticElem, y: QuarticElem) -> QuarticElem:
    return x * y


_ROOT_NAMES = ("1", "j", "-1", "-j")


@dataclass(frozen=True)
class RootOfUnity4:
    """j^e for e mod 4."""

    e: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "e", self.e % 4)

    @classmethod
    def parse(cls, name: str) -> RootOfUnity4:
        try:
            return cls(_ROOT_NAMES.index(name.strip()))
        except ValueError:
            raise ValueError(f"not a fourth root of unity: {name!r}") from None

    @classmethod
    def sign(cls, s: int) -> RootOfUnity4:
        if s not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return cls(0 if s == 1 else 2)

    def __mul__(self, other: RootOfUnity4) -> RootOfUnity4:
        if not isinstance(other, RootOfUnity4):
            return NotImplemented
        return RootOfUnity4(self.e + other.e)

    def __pow__(self, n: int) -> RootOfUnity4:
        return RootOfUnity4(self.e * n)

    def __neg__(self) -> RootOfUnity4:
        return RootOfUnity4(self.e + 2)

    def inverse(self) -> RootOfUnity4:
        return RootOfUnity4(-self.e)

    def gaussian(self) -> tuple[int, int]:
        return ((1, 0), (0, 1), (-1, 0), (0, -1))[self.e]

    def elem(self, p: int) -> QuarticElem:
        g = self.gaussian()
        return QuarticElem(g[0], g[1], 0, 0, p)

    def __str__(self) -> str:
        return _ROOT_NAMES[self.e]


ONE, J, MINUS_ONE, MINUS_J = (RootOfUnity4(e) for e in range(4))
ALL_ROOTS = (ONE, MINUS_ONE, J, MINUS_J)


def half_power(p: int, a: int) -> QuarticElem:
    """(p^(1/2))^a = p^(a//2) sqrt(p)^(a%2)."""
    if a < 0:
        raise ValueError("exponent must be non-negative")
    q, r = divmod(a, 2)
    return QuarticElem.of(p, p**q if r == 0 else 0, 0, p**q if r else 0, 0)


def reduced_half_power(p: int, a: int) -> QuarticElem:
    """(p^(1/2))^a with the integer power p^(a//2) replaced by eps^(a//2).

    Congruent to ``half_power(p, a)`` modulo 4 in the ring of algebraic
    integers; only integer powers of p are touched.
    """
    if a < 0:
        raise ValueError("exponent must be non-negative")
    q, r = divmod(a, 2)
    s = eps_of(p) ** q
    return QuarticElem.of(p, 0 if r else s, 0, s if r else 0, 0)


def p_term(root: RootOfUnity4, p: int, half_exp: int, reduce: bool = False) -> QuarticElem:
    """root * p^(half_exp/2), exactly or with integer p-powers reduced."""
    power = reduced_half_power(p, half_exp) if reduce else half_power(p, half_exp)
    return root.elem(p) * power


def reduce_mod4_rational(x: QuarticElem) -> tuple[int, int, int, int]:
    """Coefficientwise residues mod 4.

    Exact only as a statement about Z[j] (when the sqrt(p) part vanishes);
    build inputs with ``reduced_half_power`` to replace p^m by eps^m first.
    """
    return tuple(c % 4 for c in x.coeffs())


def gaussian_divisible(x: QuarticElem, d: int) -> bool:
    """d | x coefficientwise, for x in Z[j] (where this is exact)."""
    if not x.in_gaussian:
        raise ValueError("element has a sqrt(p) component")
    return _gdivisible(x.rational, d)


def divides(d: int, x: QuarticElem) -> bool:
    """Whether x/d is an algebraic integer.

    Over Q(j) the element x/d = (alpha + beta sqrt p)/d has trace 2 alpha/d
    and norm (alpha^2 - p beta^2)/d^2; since Z[j] is integrally closed, x/d
    is integral exactly when both lie in Z[j].
    """
    if d == 0:
        raise ZeroDivisionError("divisor must be non-zero")
    alpha, beta = x.rational, x.irrational
    if beta == (0, 0):
        return _gdivisible(alpha, d)
    trace = (2 * alpha[0], 2 * alpha[1])
    a2, b2 = _gmul(alpha, alpha), _gmul(beta, beta)
    norm = (a2[0] - x.p * b2[0], a2[1] - x.p * b2[1])
    return _gdivisible(trace, d) and _gdivisible(norm, d * d)


# -- Gauss sums --------------------------------------------------------------


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def _polymulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    s = len(f) - 1
    prod = [0] * (2 * s - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    # f is monic; reduce from the top
    for d in range(len(prod) - 1, s - 1, -1):
        c = prod[d] % p
        if c:
            for i in range(s + 1):
                prod[d - s + i] -= c * f[i]
    return [c % p for c in prod[:s]]


def _polypow(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    s = len(f) - 1
    out = [1] + [0] * (s - 1)
    while e:
        if e & 1:
            out = _polymulmod(out, a, f, p)
        a = _polymulmod(a, a, f, p)
        e >>= 1
    return out


def _primitive_modulus(p: int, s: int) -> list[int]:
    """A monic degree-s polynomial over F_p in which x is a primitive root."""
    q = p**s
    one = [1] + [0] * (s - 1)
    x = [0, 1] + [0] * (s - 2)
    for code in range(p**s):
        low = [(code // p**i) % p for i in range(s)]
        f = low + [1]
        if low[0] == 0:
            continue
        if _polypow(x, q - 1, f, p) != one:
            continue
        if all(_polypow(x, (q - 1) // r, f, p) != one for r in _prime_factors(q - 1)):
            return f
    raise RuntimeError("no primitive polynomial found")


GAUSS_FIELD_LIMIT = 10**4


def gauss_sum_complex(p: int, s: int = 1) -> complex:
    """sum over F_{p^s}^x of theta_s(x) chi_s(x), chi_1(x) = exp(2 pi i x/p)."""
    require_odd_prime(p)
    if s < 1 or p**s > GAUSS_FIELD_LIMIT:
        raise ValueError(f"need s >= 1 and p^s <= {GAUSS_FIELD_LIMIT}")
    if s == 1:
        terms = [
            (1 if pow(x, (p - 1) // 2, p) == 1 else -1, 2 * math.pi * x / p) for x in range(1, p)
        ]
    else:
        f = _primitive_modulus(p, s)
        # trace is F_p-linear: tabulate it on the monomial basis
        basis_trace = []
        for d in range(s):
            mono = [0] * s
            mono[d] = 1
            total, cur = [0] * s, mono
            for _ in range(s):
                total = [(u + v) % p for u, v in zip(total, cur)]
                cur = _polypow(cur, p, f, p)
            if any(total[1:]):
                raise AssertionError("trace left the prime field")
            basis_trace.append(total[0])
        terms = []
        cur = [1] + [0] * (s - 1)
        x = [0, 1] + [0] * (s - 2)
        for i in range(p**s - 1):
            tr = sum(c * t for c, t in zip(cur, basis_trace)) % p
            terms.append((1 if i % 2 == 0 else -1, 2 * math.pi * tr / p))
            cur = _polymulmod(cur, x, f, p)
    re = math.fsum(sgn * math.cos(ang) for sgn, ang in terms)
    im = math.fsum(sgn * math.sin(ang) for sgn, ang in terms)
    return complex(re, im)


@dataclass(frozen=True)
class GaussReport:
    p: int
    s: int
    value: complex
    modulus_error: float
    verdict: str
    matches_law: bool

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "s": self.s,
            "re": self.value.real,
            "im": self.value.imag,
            "modulus_sq": abs(self.value) ** 2,
            "modulus_error": self.modulus_error,
            "verdict": self.verdict,
            "matches_law": self.matches_law,
        }

    @classmethod
    def from_json(cls, d: dict) -> GaussReport:
        return cls(d["p"], d["s"], complex(d["re"], d["im"]), d["modulus_error"],
                   d["verdict"], d["matches_law"])


def _verdict(z: complex, scale: float, tol: float = 1e-9) -> str:
    if abs(z.imag) < tol * scale:
        return "real-positive" if z.real > 0 else "real-negative"
    if abs(z.real) < tol * scale:
        return "imaginary-positive" if z.imag > 0 else "imaginary-negative"
    return "other"


def expected_gauss(p: int, s: int = 1) -> complex:
    """G_1 = sqrt(p) (p = 1 mod 4) or i sqrt(p) (p = 3 mod 4); G_s = -(-G_1)^s."""
    g1 = math.sqrt(p) if eps_of(p) == 1 else 1j * math.sqrt(p)
    return -((-g1) ** s)


def gauss_sum_numeric(p: int, s: int = 1, tol: float = 1e-9) -> GaussReport:
    g = gauss_sum_complex(p, s)
    q = p**s
    err = abs(abs(g) ** 2 - q)
    want = expected_gauss(p, s)
    return GaussReport(
        p=p,
        s=s,
        value=g,
        modulus_error=err,
        verdict=_verdict(g, math.sqrt(q)),
        matches_law=abs(g - want) <= tol * math.sqrt(q) and err <= tol * q,
    )


@dataclass(frozen=True)
class SqrtConvention:
    p: int
    eps: int
    rule: str
    numeric: float
    positive_real: bool


def sqrt_p_convention(p: int) -> SqrtConvention:
    """How the formal sqrt(p) sits against G_1 under j -> i."""
    e = eps_of(p)
    g = gauss_sum_complex(p)
    val = g if e == 1 else g / 1j
    ok = abs(val.imag) < 1e-9 * math.sqrt(p) and abs(val.real - math.sqrt(p)) < 1e-9 * math.sqrt(p)
    return SqrtConvention(
        p=p,
        eps=e,
        rule="G_1" if e == 1 else "j^-1 G_1",
        numeric=val.real,
        positive_real=ok,
    )


def root_to_complex(r: RootOfUnity4) -> complex:
    return cmath.exp(0.5j * math.pi * r.e)
