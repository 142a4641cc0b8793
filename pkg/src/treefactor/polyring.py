"""Exact sparse multivariate Laurent polynomials over the integers.

A polynomial is a finite map from monomials to nonzero arbitrary-precision
integer coefficients; a monomial is a finite map from variables to nonzero
(possibly negative) integer exponents.  Both are kept canonical at all
times: no zero coefficients, no zero exponents, exponent lists sorted by
the fixed variable order.

Variables come in five indexed families, totally ordered by family tag and
then by indices:

    q1 < q2 < ... < x1 < x2 < ... < y1 < ... < x(1,1) < x(1,2) < ...
                                              < e(1,2) < e(1,3) < ...

Monomials are compared in graded lexicographic order: total degree first,
then exponent vectors lexicographically with earlier variables more
significant.  Division is plain single-divisor division under that order;
Laurent inputs are normalized first by the minimal monomial shift that
clears negative exponents, so a zero remainder is exactly divisibility in
the Laurent ring.

Heavy products and quotients run on a packed representation: an exponent
vector is encoded into a single integer with the total degree in the top
limb, so monomial multiplication is integer addition and graded-lex
comparison is integer comparison.  The packing is private; the public
types below never expose it.
"""

from __future__ import annotations

import heapq
import json
import re
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union


class DivisionByZero(ZeroDivisionError):
    """Division of a polynomial by the zero polynomial."""


class NotDivisible(ArithmeticError):
    """Exact division failed; carries the first stuck term as witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NonInvertibleSubstitution(ValueError):
    """A variable with negative exponent was bound to a non-unit."""


class Family(IntEnum):
    Q = 0
    X = 1
    Y = 2
    XD = 3
    E = 4


_FAMILY_ARITY = {Family.Q: 1, Family.X: 1, Family.Y: 1, Family.XD: 2, Family.E: 2}
_FAMILY_PREFIX = {Family.Q: "q", Family.X: "x", Family.Y: "y", Family.XD: "x", Family.E: "e"}


@dataclass(frozen=True)
class Variable:
    """An indexed variable; E-family endpoints are stored smaller-first."""

    family: Family
    indices: tuple[int, ...]

    def __post_init__(self):
        arity = _FAMILY_ARITY[self.family]
        if len(self.indices) != arity:
            raise ValueError(f"{self.family.name} variables take {arity} indices")
        if any(i < 1 for i in self.indices):
            raise ValueError("variable indices are positive integers")
        if self.family is Family.E:
            u, v = self.indices
            if u == v:
                raise ValueError("edge variables have distinct endpoints")
            if u > v:
                object.__setattr__(self, "indices", (v, u))

    @property
    def _key(self) -> tuple:
        return (int(self.family), self.indices)

    def __lt__(self, other: "Variable") -> bool:
        return self._key < other._key

    def render(self) -> str:
        if self.family in (Family.XD, Family.E):
            a, b = self.indices
            return f"{_FAMILY_PREFIX[self.family]}({a},{b})"
        return f"{_FAMILY_PREFIX[self.family]}{self.indices[0]}"

    _PATTERN = re.compile(
        r"^(?:(?P<fam>[qxy])(?P<i>\d+)|(?P<fam2>[xe])\((?P<a>\d+),(?P<b>\d+)\))$"
    )

    @classmethod
    def parse(cls, text: str) -> "Variable":
        m = cls._PATTERN.match(text)
        if not m:
            raise ValueError(f"not a variable: {text!r}")
        if m.group("fam"):
            fam = {"q": Family.Q, "x": Family.X, "y": Family.Y}[m.group("fam")]
            return cls(fam, (int(m.group("i")),))
        fam = {"x": Family.XD, "e": Family.E}[m.group("fam2")]
        return cls(fam, (int(m.group("a")), int(m.group("b"))))


def q(i: int) -> Variable:
    return Variable(Family.Q, (i,))


def x(i: int) -> Variable:
    return Variable(Family.X, (i,))


def y(i: int) -> Variable:
    return Variable(Family.Y, (i,))


def xd(direction: int, member: int) -> Variable:
    return Variable(Family.XD, (direction, member))


def evar(u: int, v: int) -> Variable:
    return Variable(Family.E, (u, v))


@dataclass(frozen=True)
class Monomial:
    """Product of variable powers; exponents nonzero, sorted by variable."""

    exps: tuple[tuple[Variable, int], ...] = ()

    @classmethod
    def of(cls, exps: Union[Mapping[Variable, int], Iterable[tuple[Variable, int]]]) -> "Monomial":
        acc: dict[Variable, int] = {}
        items = exps.items() if isinstance(exps, Mapping) else exps
        for v, e in items:
            acc[v] = acc.get(v, 0) + e
        clean = tuple(sorted(((v, e) for v, e in acc.items() if e), key=lambda p: p[0]._key))
        return cls(clean)

    @property
    def is_one(self) -> bool:
        return not self.exps

    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def as_dict(self) -> dict[Variable, int]:
        return dict(self.exps)

    def variables(self) -> tuple[Variable, ...]:
        return tuple(v for v, _ in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.is_one:
            return other
        if other.is_one:
            return self
        acc = dict(self.exps)
        for v, e in other.exps:
            ne = acc.get(v, 0) + e
            if ne:
                acc[v] = ne
            else:
                del acc[v]
        return Monomial(tuple(sorted(acc.items(), key=lambda p: p[0]._key)))

    def __pow__(self, k: int) -> "Monomial":
        if k == 0:
            return Monomial()
        return Monomial(tuple((v, e * k) for v, e in self.exps))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return self * (other ** -1)

    def render(self) -> str:
        if self.is_one:
            return "1"
        parts = []
        for v, e in self.exps:
            parts.append(v.render() if e == 1 else f"{v.render()}^{e}")
        return "*".join(parts)


_ONE_MONO = Monomial()


def _term_sort_key(mono: Monomial, pos: Mapping[Variable, int], nv: int):
    dense = [0] * nv
    for v, e in mono.exps:
        dense[pos[v]] = e
    return (mono.degree(), tuple(dense))


class Polynomial:
    """Canonical integer-coefficient Laurent polynomial."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls({_ONE_MONO: 1})

    @classmethod
    def integer(cls, c: int) -> "Polynomial":
        return cls({_ONE_MONO: c})

    @classmethod
    def variable(cls, v: Variable, exp: int = 1) -> "Polynomial":
        return cls({Monomial.of({v: exp}): 1})

    @classmethod
    def monomial(cls, m: Monomial, coeff: int = 1) -> "Polynomial":
        return cls({m: coeff})

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def n_terms(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def variables(self) -> set[Variable]:
        out: set[Variable] = set()
        for m in self._terms:
            out.update(m.variables())
        return out

    def min_exponents(self) -> dict[Variable, int]:
        """Per-variable minimum exponent over all terms (variables present only)."""
        mins: dict[Variable, int] = {}
        for m in self._terms:
            for v, e in m.exps:
                if v not in mins or e < mins[v]:
                    mins[v] = e
        return mins

    def canonical_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending graded-lex order."""
        if not self._terms:
            return []
        vars_sorted = sorted(self.variables(), key=lambda v: v._key)
        pos = {v: i for i, v in enumerate(vars_sorted)}
        nv = len(vars_sorted)
        return sorted(
            self._terms.items(),
            key=lambda t: _term_sort_key(t[0], pos, nv),
            reverse=True,
        )

    def leading_term(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return self.canonical_terms()[0]

    def as_int(self) -> int:
        if not self._terms:
            return 0
        if len(self._terms) == 1 and _ONE_MONO in self._terms:
            return self._terms[_ONE_MONO]
        raise ValueError("polynomial is not constant")

    def is_nonneg(self) -> tuple[bool, Optional[tuple[Monomial, int]]]:
        """All coefficients >= 0?  Witness is the largest offending term."""
        for m, c in self.canonical_terms():
            if c < 0:
                return (False, (m, c))
        return (True, None)

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.integer(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # mutable-dict backed; equality is structural

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.integer(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            nc = acc.get(m, 0) + c
            if nc:
                acc[m] = nc
            else:
                del acc[m]
        out = Polynomial.__new__(Polynomial)
        out._terms = acc
        return out

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        out = Polynomial.__new__(Polynomial)
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.integer(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero()
            out = Polynomial.__new__(Polynomial)
            out._terms = {m: c * other for m, c in self._terms.items()}
            return out
        if not isinstance(other, Polynomial):
            return NotImplemented
        return _mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            if len(self._terms) == 1:
                (m, c), = self._terms.items()
                if c in (1, -1):
                    return Polynomial.monomial(m ** k, c if k % 2 else 1)
            raise ValueError("negative power of a non-unit polynomial")
        result = Polynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k >>= 1
        return result

    # -- substitution ------------------------------------------------------

    def substitute(self, bindings: Mapping[Variable, Union["Polynomial", int, Variable, Monomial]]) -> "Polynomial":
        """Replace bound variables by polynomials; unbound variables pass through.

        A variable occurring with a negative exponent may only be bound to
        an invertible monomial (single term, coefficient +-1).
        """
        coerced: dict[Variable, Polynomial] = {}
        for v, val in bindings.items():
            coerced[v] = _coerce_poly(val)
        power_cache: dict[tuple[Variable, int], Polynomial] = {}

        def bound_power(v: Variable, e: int) -> Polynomial:
            key = (v, e)
            hit = power_cache.get(key)
            if hit is not None:
                return hit
            b = coerced[v]
            if e >= 0:
                val = b ** e
            else:
                if len(b._terms) != 1:
                    raise NonInvertibleSubstitution(
                        f"{v.render()} has negative exponent; binding must be a monomial"
                    )
                (m, c), = b._terms.items()
                if c not in (1, -1):
                    raise NonInvertibleSubstitution(
                        f"{v.render()} has negative exponent; binding coefficient must be a unit"
                    )
                val = Polynomial.monomial(m ** e, c if e % 2 else 1)
            power_cache[key] = val
            return val

        total = Polynomial.zero()
        for mono, coeff in self._terms.items():
            unbound: list[tuple[Variable, int]] = []
            factors: list[Polynomial] = []
            for v, e in mono.exps:
                if v in coerced:
                    factors.append(bound_power(v, e))
                else:
                    unbound.append((v, e))
            term = Polynomial.monomial(Monomial(tuple(unbound)), coeff)
            for f in factors:
                term = term * f
            total = total + term
        return total

    # -- serialization -----------------------------------------------------

    def render(self) -> str:
        terms = self.canonical_terms()
        if not terms:
            return "0"
        chunks: list[str] = []
        for i, (m, c) in enumerate(terms):
            mag = abs(c)
            if m.is_one:
                body = str(mag)
            elif mag == 1:
                body = m.render()
            else:
                body = f"{mag}*{m.render()}"
            if i == 0:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(chunks)

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return cls.zero()
        pieces = re.split(r"\s([+-])\s", s)
        terms: dict[Monomial, int] = {}
        sign = 1
        idx = 0
        while idx < len(pieces):
            chunk = pieces[idx]
            mono, coeff = _parse_term(chunk)
            coeff *= sign
            terms[mono] = terms.get(mono, 0) + coeff
            if idx + 1 < len(pieces):
                sign = 1 if pieces[idx + 1] == "+" else -1
            idx += 2
        return cls(terms)

    def to_json_obj(self) -> list:
        out = []
        for m, c in self.canonical_terms():
            out.append({"coeff": str(c), "exps": [[v.render(), e] for v, e in m.exps]})
        return out

    @classmethod
    def from_json_obj(cls, obj) -> "Polynomial":
        terms: dict[Monomial, int] = {}
        for entry in obj:
            mono = Monomial.of([(Variable.parse(vs), int(e)) for vs, e in entry["exps"]])
            terms[mono] = terms.get(mono, 0) + int(entry["coeff"])
        return cls(terms)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, s: str) -> "Polynomial":
        return cls.from_json_obj(json.loads(s))

    def __repr__(self) -> str:
        return f"Polynomial({self.render()})"


def _coerce_poly(val) -> Polynomial:
    if isinstance(val, Polynomial):
        return val
    if isinstance(val, int):
        return Polynomial.integer(val)
    if isinstance(val, Variable):
        return Polynomial.variable(val)
    if isinstance(val, Monomial):
        return Polynomial.monomial(val)
    raise TypeError(f"cannot coerce {val!r} to Polynomial")


_TERM_FACTOR = re.compile(
    r"^(?P<int>\d+)$|^(?P<var>[qxye]\d+|[xe]\(\d+,\d+\))(?:\^(?P<exp>-?\d+))?$"
)


def _parse_term(chunk: str) -> tuple[Monomial, int]:
    s = chunk.strip()
    coeff = 1
    if s.startswith("-"):
        coeff = -1
        s = s[1:].strip()
    if not s:
        raise ValueError(f"bad term: {chunk!r}")
    exps: list[tuple[Variable, int]] = []
    for factor in s.split("*"):
        m = _TERM_FACTOR.match(factor.strip())
        if not m:
            raise ValueError(f"bad factor {factor!r} in term {chunk!r}")
        if m.group("int") is not None:
            coeff *= int(m.group("int"))
        else:
            v = Variable.parse(m.group("var"))
            e = int(m.group("exp")) if m.group("exp") is not None else 1
            exps.append((v, e))
    return Monomial.of(exps), coeff


# ---------------------------------------------------------------------------
# Packed exponent-vector kernels.
#
# A monomial over an ordered variable list (v0, ..., v_{nv-1}) with
# nonnegative exponents e_i packs into the integer
#
#     ((deg << B*nv) | e_0 << B*(nv-1) | ... | e_{nv-1})
#
# with B bits per limb, so integer order on keys is graded-lex order and
# key addition is monomial multiplication.  Exponents must stay below
# 2**(B-1); the sizes this package produces stay orders of magnitude under
# that.
# ---------------------------------------------------------------------------

_PACK_BITS = 24
_PACK_MASK = (1 << _PACK_BITS) - 1
_PACK_LIMIT = 1 << (_PACK_BITS - 1)


class _PackCtx:
    __slots__ = ("vars", "pos", "nv")

    def __init__(self, variables: Sequence[Variable]):
        self.vars = tuple(variables)
        self.pos = {v: i for i, v in enumerate(self.vars)}
        self.nv = len(self.vars)

    def pack_terms(self, poly: Polynomial, offsets: Optional[Sequence[int]] = None) -> dict[int, int]:
        nv = self.nv
        pos = self.pos
        out: dict[int, int] = {}
        for mono, coeff in poly._terms.items():
            dense = list(offsets) if offsets is not None else [0] * nv
            for v, e in mono.exps:
                dense[pos[v]] += e
            key = 0
            deg = 0
            for e in dense:
                if e < 0 or e >= _PACK_LIMIT:
                    raise AssertionError("exponent out of packing range")
                key = (key << _PACK_BITS) | e
                deg += e
            key |= deg << (_PACK_BITS * nv)
            out[key] = coeff
        return out

    def unpack_key(self, key: int) -> list[int]:
        nv = self.nv
        exps = [0] * nv
        for i in range(nv - 1, -1, -1):
            exps[i] = key & _PACK_MASK
            key >>= _PACK_BITS
        return exps

    def unpack_terms(self, packed: Mapping[int, int], offsets: Optional[Sequence[int]] = None) -> Polynomial:
        terms: dict[Monomial, int] = {}
        for key, coeff in packed.items():
            exps = self.unpack_key(key)
            if offsets is not None:
                exps = [e - o for e, o in zip(exps, offsets)]
            mono = Monomial.of([(v, e) for v, e in zip(self.vars, exps) if e])
            terms[mono] = coeff
        return Polynomial(terms)


def _pmul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: dict[int, int] = {}
    get = out.get
    bi = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bi:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def _psub(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out = dict(a)
    for k, c in b.items():
        nc = out.get(k, 0) - c
        if nc:
            out[k] = nc
        else:
            out.pop(k, None)
    return out


class _PackedStuck(Exception):
    def __init__(self, key: int, coeff: int):
        self.key = key
        self.coeff = coeff


def _pdiv_exact(f: dict[int, int], g: dict[int, int], ctx: _PackCtx) -> dict[int, int]:
    """Quotient f/g when exact; raises _PackedStuck at the first stuck term.

    Keys are popped in strictly decreasing graded-lex order; every key a
    reduction introduces is strictly smaller than the key being reduced,
    so a stuck leading term can never cancel later and is a definitive
    non-divisibility witness.
    """
    if not g:
        raise DivisionByZero("division by zero polynomial")
    if not f:
        return {}
    kg = max(g)
    cg = g[kg]
    gexp = ctx.unpack_key(kg)
    gitems = [(k, c) for k, c in g.items() if k != kg]
    work = dict(f)
    heap = [-k for k in work]
    heapq.heapify(heap)
    quotient: dict[int, int] = {}
    while heap:
        k = -heapq.heappop(heap)
        c = work.get(k)
        if not c:
            continue
        fexp = ctx.unpack_key(k)
        if any(fe < ge for fe, ge in zip(fexp, gexp)) or c % cg != 0:
            raise _PackedStuck(k, c)
        kq = k - kg
        cq = c // cg
        quotient[kq] = quotient.get(kq, 0) + cq
        del work[k]
        for kgi, cgi in gitems:
            kk = kq + kgi
            nc = work.get(kk, 0) - cq * cgi
            if nc:
                if kk not in work:
                    heapq.heappush(heap, -kk)
                work[kk] = nc
            else:
                work.pop(kk, None)
    if work:
        k = max(work)
        raise _PackedStuck(k, work[k])
    return {k: c for k, c in quotient.items() if c}


def _nonneg_offsets(p: Polynomial, variables: Sequence[Variable]) -> list[int]:
    mins = p.min_exponents()
    return [max(0, -mins.get(v, 0)) for v in variables]


def _full_offsets(p: Polynomial, variables: Sequence[Variable]) -> list[int]:
    """Shift every variable so its minimum exponent lands exactly on zero.

    Division needs the full shift, not just clearing negatives: the minimum
    exponent of an exact product is the sum of the factors' minima, so with
    both operands normalized to minimum zero the true quotient is an
    ordinary polynomial.  Clearing only negatives can leave the divisor
    with a positive floor the quotient would have to borrow against.
    """
    counts: dict[Variable, int] = {}
    mins: dict[Variable, int] = {}
    for m in p._terms:
        for v, e in m.exps:
            counts[v] = counts.get(v, 0) + 1
            if v not in mins or e < mins[v]:
                mins[v] = e
    n_terms = len(p._terms)
    out = []
    for v in variables:
        if counts.get(v, 0) == n_terms:
            out.append(-mins[v])
        else:
            # absent in some term means an implicit zero exponent there
            out.append(-min(0, mins.get(v, 0)))
    return out


def _mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero or b.is_zero:
        return Polynomial.zero()
    # single-monomial fast path; matrix-vector products live here
    if a.n_terms == 1 or b.n_terms == 1:
        if b.n_terms == 1:
            small, big = b, a
        else:
            small, big = a, b
        (sm, sc), = small._terms.items()
        out = Polynomial.__new__(Polynomial)
        out._terms = {m * sm: c * sc for m, c in big._terms.items()}
        return out
    variables = sorted(a.variables() | b.variables(), key=lambda v: v._key)
    ctx = _PackCtx(variables)
    off_a = _nonneg_offsets(a, variables)
    off_b = _nonneg_offsets(b, variables)
    packed = _pmul(ctx.pack_terms(a, off_a), ctx.pack_terms(b, off_b))
    total_off = [oa + ob for oa, ob in zip(off_a, off_b)]
    return ctx.unpack_terms(packed, total_off)


def div_exact(n: Union[Polynomial, int], d: Union[Polynomial, int]) -> Polynomial:
    """Exact quotient n/d in the Laurent ring; NotDivisible if inexact.

    Each operand is divided through by its monomial content (the
    per-variable minimum exponent, whatever its sign) before ordinary
    division, and the quotient is shifted back.  Divisibility is decided
    in the Laurent ring itself, where every monomial is a unit: the
    content of an exact quotient is the difference of the operand
    contents, so the shifted division never needs negative exponents.
    """
    n = _coerce_poly(n)
    d = _coerce_poly(d)
    if d.is_zero:
        raise DivisionByZero("division by zero polynomial")
    if n.is_zero:
        return Polynomial.zero()
    variables = sorted(n.variables() | d.variables(), key=lambda v: v._key)
    ctx = _PackCtx(variables)
    off_n = _full_offsets(n, variables)
    off_d = _full_offsets(d, variables)
    try:
        packed_q = _pdiv_exact(ctx.pack_terms(n, off_n), ctx.pack_terms(d, off_d), ctx)
    except _PackedStuck as stuck:
        exps = ctx.unpack_key(stuck.key)
        shifted = [e - o for e, o in zip(exps, off_n)]
        mono = Monomial.of([(v, e) for v, e in zip(variables, shifted) if e])
        raise NotDivisible(
            f"remainder term {Polynomial.monomial(mono, stuck.coeff).render()} is not reducible",
            witness=(mono, stuck.coeff),
        ) from None
    quotient_off = [on - od for on, od in zip(off_n, off_d)]
    return ctx.unpack_terms(packed_q, quotient_off)


def poly_sum(items: Iterable[Union[Polynomial, int]]) -> Polynomial:
    total = Polynomial.zero()
    for item in items:
        total = total + _coerce_poly(item)
    return total


def poly_product(items: Iterable[Union[Polynomial, int]]) -> Polynomial:
    total = Polynomial.one()
    for item in items:
        total = total * _coerce_poly(item)
    return total
