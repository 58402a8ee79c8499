"""Exact polynomials and rational functions with linear-form denominators.

Polynomials live in ``Q[v_0, ..., v_{n-1}]``; in this package the variables
are the simple roots ``y_1..y_r`` followed by ``ħ`` (rendered ``h``).

A :class:`FracElem` is a numerator polynomial over a multiset of primitive
integer linear forms.  Because denominators are factored by construction,
reduction only needs exact division by linear forms.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

# exponents are packed into one int, SHIFT bits per variable
SHIFT = 16
MASK = (1 << SHIFT) - 1

Coeff = int | Fraction


class ResidueOrderError(ArithmeticError):
    """Pole of order at least two along the requested hyperplane."""


class NotDivisibleError(ArithmeticError):
    pass


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _div(a, c):
    if type(a) is int and type(c) is int and a % c == 0:
        return a // c
    return _norm(Fraction(a) / c)


def pack(exps: Sequence[int]) -> int:
    k = 0
    for i, e in enumerate(exps):
        k |= e << (SHIFT * i)
    return k


def unpack(key: int, n: int) -> tuple[int, ...]:
    return tuple((key >> (SHIFT * i)) & MASK for i in range(n))


def _var_exp(key: int, v: int) -> int:
    return (key >> (SHIFT * v)) & MASK


def variable_names(n: int) -> list[str]:
    """Names used for rendering: ``y`` (or ``y1..yr``) followed by ``h``."""
    r = n - 1
    if r == 1:
        return ["y", "h"]
    return [f"y{i + 1}" for i in range(r)] + ["h"]


class PolyElem:
    """Sparse polynomial with rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[int, Coeff] | None = None):
        self.nvars = nvars
        self.terms: dict[int, Coeff] = {k: _norm(c) for k, c in (terms or {}).items() if c != 0}

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "PolyElem":
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "PolyElem":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c: Coeff) -> "PolyElem":
        return cls._raw(nvars, {0: _norm(c)} if c != 0 else {})

    @classmethod
    def one(cls, nvars: int) -> "PolyElem":
        return cls.const(nvars, 1)

    @classmethod
    def var(cls, nvars: int, i: int) -> "PolyElem":
        return cls._raw(nvars, {1 << (SHIFT * i): 1})

    @classmethod
    def linear(cls, coeffs: Sequence[Coeff], const: Coeff = 0) -> "PolyElem":
        terms = {1 << (SHIFT * i): _norm(c) for i, c in enumerate(coeffs) if c != 0}
        if const != 0:
            terms[0] = _norm(const)
        return cls._raw(len(coeffs), terms)

    @classmethod
    def monomial(cls, exps: Sequence[int], c: Coeff = 1) -> "PolyElem":
        return cls._raw(len(exps), {pack(exps): _norm(c)} if c != 0 else {})

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self) -> Coeff:
        return self.terms.get(0, 0)

    def items(self) -> Iterable[tuple[tuple[int, ...], Coeff]]:
        for k, c in self.terms.items():
            yield unpack(k, self.nvars), c

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(unpack(k, self.nvars)) for k in self.terms)

    def degree_in(self, v: int) -> int:
        if not self.terms:
            return -1
        return max(_var_exp(k, v) for k in self.terms)

    def homogeneous_part(self, deg: int) -> "PolyElem":
        n = self.nvars
        return PolyElem._raw(n, {k: c for k, c in self.terms.items() if sum(unpack(k, n)) == deg})

    def truncate(self, max_deg: int, variables: Sequence[int] | None = None) -> "PolyElem":
        """Drop terms whose degree in ``variables`` (default: all) exceeds ``max_deg``."""
        vs = range(self.nvars) if variables is None else variables
        return PolyElem._raw(self.nvars, {k: c for k, c in self.terms.items()
                                          if sum(_var_exp(k, v) for v in vs) <= max_deg})

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyElem):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: other} if other != 0 else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "PolyElem":
        return PolyElem._raw(self.nvars, {k: -c for k, c in self.terms.items()})

    def __add__(self, other) -> "PolyElem":
        if not isinstance(other, PolyElem):
            other = PolyElem.const(self.nvars, other)
        if len(self.terms) < len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for k, c in b.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v == 0:
                    del out[k]
                else:
                    out[k] = _norm(v) if type(v) is Fraction else v
        return PolyElem._raw(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other) -> "PolyElem":
        if not isinstance(other, PolyElem):
            other = PolyElem.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other) -> "PolyElem":
        return (-self) + other

    def scale(self, c: Coeff) -> "PolyElem":
        if c == 0:
            return PolyElem.zero(self.nvars)
        if c == 1:
            return self
        c = _norm(c)
        if type(c) is int:
            return PolyElem._raw(self.nvars, {k: v * c for k, v in self.terms.items()})
        return PolyElem._raw(self.nvars, {k: _norm(v * c) for k, v in self.terms.items()})

    def __mul__(self, other) -> "PolyElem":
        if not isinstance(other, PolyElem):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return PolyElem.zero(self.nvars)
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, Coeff] = {}
        get = out.get
        for k2, c2 in b.items():
            for k1, c1 in a.items():
                k = k1 + k2
                out[k] = get(k, 0) + c1 * c2
        return PolyElem._raw(self.nvars, {k: _norm(c) for k, c in out.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PolyElem":
        r = PolyElem.one(self.nvars)
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    # -- division by a linear polynomial -----------------------------------

    def divmod_linear(self, coeffs: Sequence[Coeff], pivot: int | None = None):
        """Divide by ``sum coeffs[i] v_i`` treating ``v_pivot`` as main variable.

        Returns ``(quotient, remainder)``; the remainder is free of ``v_pivot``.
        """
        if pivot is None:
            pivot = choose_pivot(coeffs)
        c = coeffs[pivot]
        sh = SHIFT * pivot
        groups: dict[int, dict[int, Coeff]] = {}
        for k, v in self.terms.items():
            e = (k >> sh) & MASK
            groups.setdefault(e, {})[k - (e << sh)] = v
        if not groups:
            return PolyElem.zero(self.nvars), PolyElem.zero(self.nvars)
        rest = [(1 << (SHIFT * i), _norm(a)) for i, a in enumerate(coeffs) if i != pivot and a != 0]
        top = max(groups)
        q: dict[int, Coeff] = {}
        cur = dict(groups.get(top, {}))
        unit = c in (1, -1)
        for j in range(top, 0, -1):
            # q_{j-1} = cur / c ; cur = groups[j-1] - rest * q_{j-1}
            qj = {k: (v * c if unit else _div(v, c)) for k, v in cur.items()}
            nxt = dict(groups.get(j - 1, {}))
            for k, v in qj.items():
                q[k + ((j - 1) << sh)] = v
                for m, a in rest:
                    kk = k + m
                    val = nxt.get(kk, 0) - a * v
                    if val == 0:
                        nxt.pop(kk, None)
                    else:
                        nxt[kk] = val
            cur = nxt
        return (PolyElem._raw(self.nvars, {k: _norm(v) for k, v in q.items() if v != 0}),
                PolyElem._raw(self.nvars, {k: _norm(v) for k, v in cur.items() if v != 0}))

    def divide_linear(self, coeffs: Sequence[Coeff]) -> "PolyElem | None":
        """Exact quotient by a linear form, or ``None`` if it does not divide."""
        q, r = self.divmod_linear(coeffs)
        return None if r.terms else q

    # -- substitution -------------------------------------------------------

    def substitute(self, images: Sequence["PolyElem"]) -> "PolyElem":
        """Replace variable ``i`` by ``images[i]``."""
        n = self.nvars
        out_n = images[0].nvars if images else n
        identity = [i for i, im in enumerate(images)
                    if im.terms == {1 << (SHIFT * i): 1} and out_n == n]
        moving = [i for i in range(n) if i not in identity]
        if not moving:
            return self
        powers: list[list[PolyElem]] = [[PolyElem.one(out_n)] for _ in range(n)]
        result: dict[int, Coeff] = {}
        fixed_mask = 0
        for i in identity:
            fixed_mask |= MASK << (SHIFT * i)
        # group terms by the exponents of the moving variables
        grouped: dict[int, dict[int, Coeff]] = {}
        for k, c in self.terms.items():
            mk = k & ~fixed_mask
            grouped.setdefault(mk, {})[k & fixed_mask] = c
        for mk, rest in grouped.items():
            p = PolyElem._raw(out_n, dict(rest))
            for i in moving:
                e = _var_exp(mk, i)
                if e:
                    pw = powers[i]
                    while len(pw) <= e:
                        pw.append(pw[-1] * images[i])
                    p = p * pw[e]
            for k, c in p.terms.items():
                result[k] = result.get(k, 0) + c
        return PolyElem._raw(out_n, {k: _norm(c) for k, c in result.items() if c != 0})

    def substitute_linear(self, images: Sequence[Sequence[Coeff]]) -> "PolyElem":
        """Substitute ``v_i -> sum_j images[i][j] v_j``."""
        return self.substitute([PolyElem.linear(im) for im in images])

    def restrict(self, coeffs: Sequence[Coeff], pivot: int) -> "PolyElem":
        """Restrict to the hyperplane ``sum coeffs[i] v_i = 0`` by eliminating ``v_pivot``."""
        c = coeffs[pivot]
        images = []
        for i in range(self.nvars):
            if i == pivot:
                images.append(PolyElem.linear([0 if j == pivot else _div(-a, c)
                                               for j, a in enumerate(coeffs)]))
            else:
                images.append(PolyElem.var(self.nvars, i))
        return self.substitute(images)

    def evaluate(self, point: Sequence[Coeff]) -> Coeff:
        total: Coeff = 0
        for k, c in self.terms.items():
            t = c
            for i, e in enumerate(unpack(k, self.nvars)):
                if e:
                    t = t * point[i] ** e
            total += t
        return _norm(total) if type(total) is Fraction else total

    def derivative(self, v: int) -> "PolyElem":
        out = {}
        sh = SHIFT * v
        for k, c in self.terms.items():
            e = (k >> sh) & MASK
            if e:
                out[k - (1 << sh)] = c * e
        return PolyElem._raw(self.nvars, out)

    # -- rendering ----------------------------------------------------------

    def sorted_terms(self):
        n = self.nvars
        items = [(unpack(k, n), c) for k, c in self.terms.items()]
        items.sort(key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
        return items

    def render(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or variable_names(self.nvars)
        parts = []
        for exps, c in self.sorted_terms():
            mono = "".join(names[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e)
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}{mono}" if type(c) is int else f"({c}){mono}"
            parts.append(s)
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self) -> str:
        return f"PolyElem({self.render()})"


def choose_pivot(coeffs: Sequence[Coeff]) -> int:
    """First coordinate with coefficient ±1, else the first nonzero one."""
    first = None
    for i, c in enumerate(coeffs):
        if c in (1, -1):
            return i
        if first is None and c != 0:
            first = i
    if first is None:
        raise ValueError("zero linear form")
    return first


class LinForm(tuple):
    """Primitive integer covector whose first nonzero entry is positive."""

    __slots__ = ()

    @staticmethod
    def normalize(coeffs: Sequence[Coeff]) -> tuple[Coeff, "LinForm"]:
        """Split ``coeffs`` as ``scalar * form``."""
        fr = [Fraction(c) for c in coeffs]
        if all(c == 0 for c in fr):
            raise ValueError("zero linear form")
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in fr]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        first = next(c for c in ints if c != 0)
        if first < 0:
            g = -g
        form = LinForm(c // g for c in ints)
        return _norm(Fraction(g, den)), form

    def poly(self) -> PolyElem:
        p = _LIN_POLY.get(self)
        if p is None:
            p = PolyElem.linear(self)
            _LIN_POLY[self] = p
        return p

    def render(self, names: Sequence[str] | None = None) -> str:
        return self.poly().render(names)


_LIN_POLY: dict[LinForm, PolyElem] = {}
_NORM_CACHE: dict[tuple, tuple] = {}


def linform(coeffs: Sequence[Coeff]) -> tuple[Coeff, LinForm]:
    key = tuple(coeffs)
    r = _NORM_CACHE.get(key)
    if r is None:
        r = LinForm.normalize(key)
        _NORM_CACHE[key] = r
    return r


class FracElem:
    """Reduced fraction ``num / prod L^m`` with primitive linear forms ``L``."""

    __slots__ = ("num", "den")

    def __init__(self, num: PolyElem, den: Mapping[LinForm, int] | None = None, reduce: bool = True):
        den = {L: m for L, m in (den or {}).items() if m > 0}
        if reduce:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: PolyElem, den: dict) -> "FracElem":
        f = object.__new__(cls)
        f.num = num
        f.den = den
        return f

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "FracElem":
        return cls._raw(PolyElem.zero(nvars), {})

    @classmethod
    def one(cls, nvars: int) -> "FracElem":
        return cls._raw(PolyElem.one(nvars), {})

    @classmethod
    def const(cls, nvars: int, c: Coeff) -> "FracElem":
        return cls._raw(PolyElem.const(nvars, c), {})

    @classmethod
    def from_poly(cls, p: PolyElem) -> "FracElem":
        return cls._raw(p, {})

    @classmethod
    def linear(cls, coeffs: Sequence[Coeff]) -> "FracElem":
        return cls._raw(PolyElem.linear(coeffs), {})

    @classmethod
    def reciprocal_linear(cls, coeffs: Sequence[Coeff]) -> "FracElem":
        """``1 / (sum coeffs[i] v_i)``."""
        s, L = linform(coeffs)
        return cls._raw(PolyElem.const(len(coeffs), _div(1, s)), {L: 1})

    @property
    def nvars(self) -> int:
        return self.num.nvars

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num.terms

    def __bool__(self) -> bool:
        return bool(self.num.terms)

    def is_polynomial(self) -> bool:
        return not self.den

    def pole_order(self, coeffs: Sequence[Coeff]) -> int:
        return self.den.get(linform(coeffs)[1], 0)

    def denominator_forms(self) -> dict[LinForm, int]:
        return dict(self.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, FracElem):
            return self.den == other.den and self.num.terms == other.num.terms
        if isinstance(other, PolyElem):
            return not self.den and self.num == other
        if isinstance(other, (int, Fraction)):
            return not self.den and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, frozenset(self.den.items())))

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "FracElem":
        return FracElem._raw(-self.num, self.den)

    def __add__(self, other) -> "FracElem":
        if not isinstance(other, FracElem):
            other = _coerce(other, self.nvars)
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den == other.den:
            num, den = _reduce(self.num + other.num, dict(self.den))
            return FracElem._raw(num, den)
        den = dict(self.den)
        for L, m in other.den.items():
            if den.get(L, 0) < m:
                den[L] = m
        na = _times_forms(self.num, den, self.den)
        nb = _times_forms(other.num, den, other.den)
        num, den = _reduce(na + nb, den)
        return FracElem._raw(num, den)

    __radd__ = __add__

    def __sub__(self, other) -> "FracElem":
        if not isinstance(other, FracElem):
            other = _coerce(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other) -> "FracElem":
        return (-self) + other

    def __mul__(self, other) -> "FracElem":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return FracElem.zero(self.nvars)
            return FracElem._raw(self.num.scale(other), self.den)
        if isinstance(other, PolyElem):
            other = FracElem._raw(other, {})
        if not isinstance(other, FracElem):
            return NotImplemented
        if not self.num.terms or not other.num.terms:
            return FracElem.zero(self.nvars)
        a_num, a_den = self.num, dict(self.den)
        b_num, b_den = other.num, dict(other.den)
        # cancel forms of one denominator against the other numerator
        if a_den and b_num.degree() > 0:
            b_num, a_den = _reduce(b_num, a_den)
        if b_den and a_num.degree() > 0:
            a_num, b_den = _reduce(a_num, b_den)
        den = a_den
        for L, m in b_den.items():
            den[L] = den.get(L, 0) + m
        return FracElem._raw(a_num * b_num, {L: m for L, m in den.items() if m})

    __rmul__ = __mul__

    def divide_by_linform(self, coeffs: Sequence[Coeff]) -> "FracElem":
        return self * FracElem.reciprocal_linear(coeffs)

    def scale(self, c: Coeff) -> "FracElem":
        return self * c

    # -- transformations ----------------------------------------------------

    def transform(self, images: Sequence[Sequence[Coeff]]) -> "FracElem":
        """Apply the invertible linear substitution ``v_i -> images[i]``.

        ``images[i]`` is a coefficient vector.  The substitution must be
        invertible; reduced form is then preserved.
        """
        n = self.nvars
        num = self.num.substitute([PolyElem.linear(im) for im in images])
        den: dict[LinForm, int] = {}
        scalar: Coeff = 1
        for L, m in self.den.items():
            img = [sum(L[i] * images[i][j] for i in range(n)) for j in range(n)]
            s, L2 = linform(img)
            den[L2] = den.get(L2, 0) + m
            scalar = scalar * s**m
        if scalar != 1:
            num = num.scale(_div(1, scalar))
        return FracElem._raw(num, den)

    def restrict(self, coeffs: Sequence[Coeff], pivot: int | None = None) -> "FracElem":
        """Restrict to the hyperplane ``coeffs = 0``; the form must not be a pole."""
        if pivot is None:
            pivot = choose_pivot(coeffs)
        _, L0 = linform(coeffs)
        if L0 in self.den:
            raise ZeroDivisionError("restriction to a polar hyperplane")
        num = self.num.restrict(coeffs, pivot)
        out = FracElem._raw(num, {})
        c = coeffs[pivot]
        for L, m in self.den.items():
            t = _div(L[pivot], c)
            img = [0 if j == pivot else L[j] - t * coeffs[j] for j in range(len(L))]
            s, L2 = linform(img)
            out = out * FracElem._raw(PolyElem.const(len(L), _div(1, s**m)), {L2: m})
        return out

    def residue(self, coeffs: Sequence[Coeff], pivot: int | None = None) -> "FracElem":
        """``Res_χ f = (χ f)|_{χ=0}`` for ``χ = sum coeffs[i] v_i``.

        The result has no dependence on ``v_pivot``.
        """
        if pivot is None:
            pivot = choose_pivot(coeffs)
        s, L = linform(coeffs)
        m = self.den.get(L, 0)
        if m == 0:
            return FracElem.zero(self.nvars)
        if m > 1:
            raise ResidueOrderError(f"pole of order {m} along {L.render()}")
        rest = dict(self.den)
        del rest[L]
        g = FracElem._raw(self.num.scale(s), rest)
        return g.restrict(coeffs, pivot)

    def evaluate(self, point: Sequence[Coeff]) -> Coeff:
        d: Coeff = 1
        for L, m in self.den.items():
            v = sum(a * b for a, b in zip(L, point))
            if v == 0:
                raise ZeroDivisionError("evaluation on a polar hyperplane")
            d = d * v**m
        return _norm(Fraction(self.num.evaluate(point)) / d)

    # -- rendering ----------------------------------------------------------

    def render(self, names: Sequence[str] | None = None) -> str:
        names = names or variable_names(self.nvars)
        num = self.num.render(names)
        if not self.den:
            return num
        if len(self.num.terms) > 1:
            num = f"({num})"
        factors = []
        for L in sorted(self.den, key=lambda L: tuple(-c for c in L[:-1]) + (L[-1],)):
            m = self.den[L]
            factors.append(f"[{L.render(names)}]" + (f"^{m}" if m > 1 else ""))
        return f"{num} / " + "·".join(factors)

    def __repr__(self) -> str:
        return f"FracElem({self.render()})"

    def __str__(self) -> str:
        return self.render()


def _coerce(x, nvars: int) -> FracElem:
    if isinstance(x, FracElem):
        return x
    if isinstance(x, PolyElem):
        return FracElem._raw(x, {})
    if isinstance(x, (int, Fraction)):
        return FracElem.const(nvars, x)
    raise TypeError(f"cannot coerce {type(x).__name__} to FracElem")


def _times_forms(num: PolyElem, target: Mapping[LinForm, int], have: Mapping[LinForm, int]) -> PolyElem:
    for L, m in target.items():
        k = m - have.get(L, 0)
        if k > 0:
            p = L.poly()
            for _ in range(k):
                num = num * p
    return num


def _reduce(num: PolyElem, den: dict[LinForm, int]) -> tuple[PolyElem, dict[LinForm, int]]:
    if not num.terms:
        return num, {}
    if not den or num.is_constant():
        return num, den
    for L in list(den):
        m = den[L]
        while m:
            q = num.divide_linear(L)
            if q is None:
                break
            num = q
            m -= 1
        if m:
            den[L] = m
        else:
            del den[L]
        if num.is_constant():
            break
    return num, den


def frac_arith(a: FracElem, op: str, b: FracElem | None = None) -> FracElem:
    """Dispatch ``add``, ``mul`` or ``neg``."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unsupported operation {op!r}")


def residue(f: FracElem, coeffs: Sequence[Coeff], pivot: int | None = None) -> FracElem:
    return f.residue(coeffs, pivot)


def is_polynomial(f: FracElem) -> bool:
    return f.is_polynomial()
