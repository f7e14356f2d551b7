"""Dense multivector arithmetic for low-dimensional real Clifford algebras.

Blades are bitmasks: bit ``i-1`` set means generator ``e_i`` is a factor, and
factors are always taken in ascending index order. A multivector stores one
binary64 coefficient per blade, so ``Cl(p, q)`` with ``p + q <= 4`` carries at
most 16 numbers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from numbers import Real
from typing import Iterable, Mapping

import numpy as np

MAX_DIM = 4


class CliffordError(ValueError):
    """Base class for rejected inputs."""


class SignatureError(CliffordError):
    pass


class ParityError(CliffordError):
    """An even (or odd) element was required."""


# --------------------------------------------------------------------------
# signature and blade tables


@dataclass(frozen=True)
class Signature:
    """``p`` generators squaring to +1 followed by ``q`` squaring to -1."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise SignatureError(f"signature counts must be integers, got {self.p!r}, {self.q!r}")
        if self.p < 0 or self.q < 0 or self.p + self.q > MAX_DIM:
            raise SignatureError(f"unsupported signature ({self.p},{self.q}); need p,q >= 0 and p+q <= {MAX_DIM}")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return 1 << self.n

    def square(self, i: int) -> int:
        """``e_i**2`` for the 1-based generator index ``i``."""
        if not 1 <= i <= self.n:
            raise CliffordError(f"generator index {i} out of range for {self}")
        return 1 if i <= self.p else -1

    @property
    def squares(self) -> tuple[int, ...]:
        return tuple(self.square(i) for i in range(1, self.n + 1))

    @property
    def blade_names(self) -> tuple[str, ...]:
        return tuple(blade_name(m) for m in range(self.dim))

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q})"

    # convenience constructors -------------------------------------------------

    def zero(self) -> "Multivector":
        return Multivector(self, np.zeros(self.dim))

    def scalar(self, value: float) -> "Multivector":
        c = np.zeros(self.dim)
        c[0] = value
        return Multivector(self, c)

    def blade(self, name: str | int, coeff: float = 1.0) -> "Multivector":
        """Basis blade by mask or name. Names may list indices in any order
        (``"e31"``); the reordering sign is folded into the coefficient."""
        if isinstance(name, (int, np.integer)):
            mask, sign = int(name), 1
            if not 0 <= mask < self.dim:
                raise CliffordError(f"blade mask {mask} out of range for {self}")
        else:
            mask, sign = _parse_word(self, name)
        c = np.zeros(self.dim)
        c[mask] = sign * coeff
        return Multivector(self, c)

    def vector(self, components: Iterable[float]) -> "Multivector":
        comps = list(components)
        if len(comps) != self.n:
            raise CliffordError(f"{self} vectors have {self.n} components, got {len(comps)}")
        c = np.zeros(self.dim)
        for i, v in enumerate(comps):
            c[1 << i] = v
        return Multivector(self, c)

    def basis(self) -> list["Multivector"]:
        return [self.blade(m) for m in range(self.dim)]

    def pseudoscalar(self) -> "Multivector":
        return self.blade(self.dim - 1)

    def from_dict(self, coeffs: Mapping[str, float]) -> "Multivector":
        out = self.zero()
        for name, v in coeffs.items():
            out = out + self.blade(name, v)
        return out


CL30 = Signature(3, 0)
CL03 = Signature(0, 3)
CL13 = Signature(1, 3)


def grade_of(mask: int) -> int:
    return int(mask).bit_count()


def blade_name(mask: int) -> str:
    if mask == 0:
        return "1"
    return "e" + "".join(str(i + 1) for i in range(MAX_DIM) if mask >> i & 1)


def _parse_word(sig: Signature, name: str) -> tuple[int, int]:
    name = name.strip()
    if name == "1":
        return 0, 1
    if not name.startswith("e") or not name[1:].isdigit():
        raise CliffordError(f"bad blade name {name!r}")
    mask, sign = 0, 1
    for ch in name[1:]:
        i = int(ch)
        if not 1 <= i <= sig.n:
            raise CliffordError(f"blade {name!r} uses generator e{i} outside {sig}")
        s, mask = blade_product(mask, 1 << (i - 1), sig.squares)
        sign *= s
    return mask, sign


def blade_product(a: int, b: int, squares: tuple[int, ...]) -> tuple[int, int]:
    """Sign and mask of the product of canonical blades ``a`` and ``b``."""
    swaps = 0
    x = a >> 1
    while x:
        swaps += (x & b).bit_count()
        x >>= 1
    sign = -1 if swaps & 1 else 1
    common = a & b
    i = 0
    while common:
        if common & 1:
            sign *= squares[i]
        common >>= 1
        i += 1
    return sign, a ^ b


@lru_cache(maxsize=None)
def _tables(sig: Signature) -> dict[str, np.ndarray]:
    dim = sig.dim
    squares = sig.squares
    # product as (a outer b).ravel() @ prod
    prod = np.zeros((dim * dim, dim))
    signs = np.zeros((dim, dim), dtype=int)
    for a in range(dim):
        for b in range(dim):
            s, m = blade_product(a, b, squares)
            prod[a * dim + b, m] = s
            signs[a, b] = s
    grades = np.array([grade_of(m) for m in range(dim)])
    rev = np.array([(-1) ** (g * (g - 1) // 2) for g in grades], dtype=float)
    inv = np.array([(-1) ** g for g in grades], dtype=float)
    metric = np.array(
        [math.prod(squares[i] for i in range(sig.n) if m >> i & 1) for m in range(dim)], dtype=float
    )
    for arr in (prod, signs, grades, rev, inv, metric):
        arr.setflags(write=False)
    return {"prod": prod, "signs": signs, "grades": grades, "rev": rev, "inv": inv, "metric": metric}


def multiplication_table(sig: Signature) -> list[list[tuple[int, int]]]:
    """``table[a][b] = (sign, mask)`` for canonical blades, ordered by mask."""
    squares = sig.squares
    return [[blade_product(a, b, squares) for b in range(sig.dim)] for a in range(sig.dim)]


# --------------------------------------------------------------------------
# the multivector value type


class Multivector:
    """Immutable element of ``Cl(p, q)``.

    ``*`` is the geometric product, ``~x`` the reversion. Scalars (Python or
    numpy reals) mix freely with multivectors in ``+``, ``-`` and ``*``.
    """

    __slots__ = ("sig", "coeffs")
    __array_ufunc__ = None  # keep numpy scalars from hijacking the operators

    sig: Signature
    coeffs: np.ndarray

    def __init__(self, sig: Signature, coeffs) -> None:
        arr = np.array(coeffs, dtype=float)
        if arr.shape != (sig.dim,):
            raise CliffordError(f"{sig} needs {sig.dim} coefficients, got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "Multivector | None":
        if isinstance(other, Multivector):
            if other.sig != self.sig:
                raise SignatureError(f"signature mismatch: {self.sig} vs {other.sig}")
            return other
        if isinstance(other, (Real, np.floating, np.integer)):
            return self.sig.scalar(float(other))
        if isinstance(other, CenterScalar):
            return other.to_multivector(self.sig)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Multivector(self.sig, self.coeffs + o.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Multivector(self.sig, self.coeffs - o.coeffs)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Multivector(self.sig, o.coeffs - self.coeffs)

    def __neg__(self):
        return Multivector(self.sig, -self.coeffs)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (Real, np.floating, np.integer)):
            return Multivector(self.sig, self.coeffs * float(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return geometric_product(self, o)

    def __rmul__(self, other):
        if isinstance(other, (Real, np.floating, np.integer)):
            return Multivector(self.sig, self.coeffs * float(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return geometric_product(o, self)

    def __truediv__(self, other):
        if isinstance(other, (Real, np.floating, np.integer)):
            return Multivector(self.sig, self.coeffs / float(other))
        return NotImplemented

    def __invert__(self):
        return reversion(self)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None  # type: ignore[assignment]

    # -- accessors -------------------------------------------------------

    def __getitem__(self, blade: str | int) -> float:
        if isinstance(blade, str):
            mask, sign = _parse_word(self.sig, blade)
            return sign * float(self.coeffs[mask])
        return float(self.coeffs[blade])

    @property
    def scalar(self) -> float:
        return float(self.coeffs[0])

    def grade(self, k: int) -> "Multivector":
        return grade_projection(self, k)

    def even(self) -> "Multivector":
        g = _tables(self.sig)["grades"]
        return Multivector(self.sig, np.where(g % 2 == 0, self.coeffs, 0.0))

    def odd(self) -> "Multivector":
        g = _tables(self.sig)["grades"]
        return Multivector(self.sig, np.where(g % 2 == 1, self.coeffs, 0.0))

    def is_even(self, tol: float = 0.0) -> bool:
        return float(np.max(np.abs(self.odd().coeffs), initial=0.0)) <= tol

    def reverse(self) -> "Multivector":
        return reversion(self)

    def involute(self) -> "Multivector":
        return grade_involution(self)

    def conjugate(self) -> "Multivector":
        return conjugation(self)

    def norm_inf(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def norm(self) -> float:
        """Euclidean norm of the coefficient vector."""
        return float(np.linalg.norm(self.coeffs))

    def allclose(self, other, atol: float = 1e-12) -> bool:
        return (self - other).norm_inf() <= atol

    def __repr__(self) -> str:
        return f"Multivector({self.sig}, {format_multivector(self)})"

    def __str__(self) -> str:
        return format_multivector(self)


def format_multivector(a: Multivector, digits: int = 12) -> str:
    terms = []
    for mask, c in enumerate(a.coeffs):
        if c == 0:
            continue
        c = round(float(c), digits)
        if c == 0:
            continue
        name = blade_name(mask)
        if name == "1":
            terms.append(f"{c:+g}")
        elif c == 1:
            terms.append(f"+{name}")
        elif c == -1:
            terms.append(f"-{name}")
        else:
            terms.append(f"{c:+g}*{name}")
    if not terms:
        return "0"
    s = " ".join(terms)
    return s[1:] if s.startswith("+") else s


# --------------------------------------------------------------------------
# operations


def _check_same(a: Multivector, b: Multivector) -> None:
    if a.sig != b.sig:
        raise SignatureError(f"signature mismatch: {a.sig} vs {b.sig}")


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    _check_same(a, b)
    prod = _tables(a.sig)["prod"]
    return Multivector(a.sig, np.outer(a.coeffs, b.coeffs).ravel() @ prod)


def grade_projection(a: Multivector, k: int) -> Multivector:
    if not 0 <= k <= a.sig.n:
        raise CliffordError(f"grade {k} out of range 0..{a.sig.n}")
    g = _tables(a.sig)["grades"]
    return Multivector(a.sig, np.where(g == k, a.coeffs, 0.0))


def reversion(a: Multivector) -> Multivector:
    return Multivector(a.sig, a.coeffs * _tables(a.sig)["rev"])


def grade_involution(a: Multivector) -> Multivector:
    return Multivector(a.sig, a.coeffs * _tables(a.sig)["inv"])


def conjugation(a: Multivector) -> Multivector:
    t = _tables(a.sig)
    return Multivector(a.sig, a.coeffs * t["rev"] * t["inv"])


def extended_metric(a: Multivector, b: Multivector) -> float:
    """Bilinear extension of the vector metric: Gram determinant on blades,
    zero between different grades. Basis blades are mutually orthogonal, so
    this reduces to a signed coefficient dot product."""
    _check_same(a, b)
    return float(np.sum(a.coeffs * b.coeffs * _tables(a.sig)["metric"]))


def commutator(a: Multivector, b: Multivector) -> Multivector:
    return a * b - b * a


EXP_CLOSED_FORM_TOL = 1e-12


def mv_exp(a: Multivector) -> Multivector:
    """Exponential; closed form whenever ``a*a`` is a real scalar."""
    sq = a * a
    lam = sq.scalar
    rest = (sq - lam).norm_inf()
    scale = a.norm() ** 2
    if scale == 0.0:
        return a.sig.scalar(1.0)
    if rest <= EXP_CLOSED_FORM_TOL * scale:
        if lam < 0:
            w = math.sqrt(-lam)
            return math.cos(w) + a * (math.sin(w) / w)
        if lam > 0:
            w = math.sqrt(lam)
            return math.cosh(w) + a * (math.sinh(w) / w)
        return 1.0 + a
    return _exp_series(a)


def _exp_series(a: Multivector, rtol: float = 1e-14) -> Multivector:
    size = float(np.sum(np.abs(a.coeffs)))
    s = max(0, math.ceil(math.log2(size)) + 1) if size > 0 else 0
    b = a / (2.0**s)
    total = a.sig.scalar(1.0)
    term = a.sig.scalar(1.0)
    for k in range(1, 60):
        term = term * b / k
        total = total + term
        if term.norm_inf() <= rtol * 1e-2 * total.norm_inf():
            break
    for _ in range(s):
        total = total * total
    return total


# --------------------------------------------------------------------------
# the centre of Cl(3,0)


@dataclass(frozen=True)
class CenterScalar:
    """``re + im*e123`` in Cl(3,0); multiplies like a complex number."""

    re: float = 0.0
    im: float = 0.0

    @classmethod
    def from_complex(cls, z: complex) -> "CenterScalar":
        z = complex(z)
        return cls(z.real, z.imag)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def _other(self, other) -> "CenterScalar | None":
        if isinstance(other, CenterScalar):
            return other
        if isinstance(other, (Real, np.floating, np.integer)):
            return CenterScalar(float(other), 0.0)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CenterScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CenterScalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CenterScalar(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return self.to_multivector(other.sig) * other
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CenterScalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self) -> "CenterScalar":
        return CenterScalar(self.re, -self.im)

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def to_multivector(self, sig: Signature = CL30) -> Multivector:
        if sig != CL30:
            raise SignatureError("CenterScalar lives in Cl(3,0)")
        c = np.zeros(8)
        c[0], c[7] = self.re, self.im
        return Multivector(CL30, c)

    def isclose(self, other, atol: float = 1e-12) -> bool:
        o = self._other(other)
        return abs(self - o) <= atol


I30 = CL30.pseudoscalar()


def center_decompose(a: Multivector) -> tuple[CenterScalar, Multivector]:
    """Split a Cl(3,0) element into its central part (grades 0 and 3) and
    the grade-1/2 remainder."""
    if a.sig != CL30:
        raise SignatureError(f"center_decompose needs Cl(3,0), got {a.sig}")
    z = CenterScalar(float(a.coeffs[0]), float(a.coeffs[7]))
    return z, a - z.to_multivector()


# --------------------------------------------------------------------------
# JSON


def to_json(a: Multivector) -> dict:
    coeffs = {}
    for mask, c in enumerate(a.coeffs):
        c = float(c)
        if c != 0.0 or math.copysign(1.0, c) < 0:
            coeffs[blade_name(mask)] = c
    return {"signature": [a.sig.p, a.sig.q], "coeffs": coeffs}


def from_json(data: Mapping) -> Multivector:
    try:
        p, q = data["signature"]
        raw = data.get("coeffs", {})
    except (KeyError, TypeError, ValueError) as exc:
        raise CliffordError(f"malformed multivector JSON: {exc}") from exc
    sig = Signature(int(p), int(q))
    c = np.zeros(sig.dim)
    for name, v in raw.items():
        mask, sign = _parse_word(sig, name)
        if sign != 1 or blade_name(mask) != name:
            raise CliffordError(f"blade name {name!r} is not in ascending canonical form")
        c[mask] = float(v)
    return Multivector(sig, c)
