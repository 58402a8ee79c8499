"""GKM classes on the extended affine Weyl group and the two Cherednik actions.

A class of level ``d`` is a finitely supported map ``x -> f_x`` from ``W ⋉ Λ``
to rational functions in the simple roots and ``ħ``.  It is *valid* when

(i)  ``f_x · prod_{α>0} prod_{k=-d}^{d-1} (^xα + kħ)`` is a polynomial, and
(ii) ``f_x + f_{x s_{α,k}}`` has no pole along ``^x(α + kħ)``.

The left (CS) action of the trigonometric Cherednik algebra at parameter
``c = d`` and the right (ECM) action at ``c = 0`` are implemented by explicit
localization formulas; the relation checks in :func:`verify_relations`
exercise both on random valid classes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, NamedTuple, Sequence

from .affine import (
    AffineCharacter,
    AffineWeylElement,
    act_char,
    affine_reflection,
    ball,
    braid_orders,
    finite,
    identity,
    length_zero_elements,
    node_permutation,
    reduced_decomposition,
    simple_affine_reflections,
    simple_affine_roots,
    translation,
)
from .exactfrac import FracElem, LinForm, PolyElem, linform
from .rootsys import RootSystem


class IsotypicError(ValueError):
    """Input class does not satisfy the required isotypic predicate."""


class InvariantError(AssertionError):
    """An output violated a property that holds by construction."""


# -- coordinates -----------------------------------------------------------------

def nvars(rs: RootSystem) -> int:
    return rs.rank + 1


def char_coeffs(rs: RootSystem, chi: AffineCharacter) -> tuple:
    """Coefficients of ``λ + kħ`` in the variables (simple roots, ``ħ``)."""
    cache = _cache(rs, "_char_coeffs")
    r = cache.get(chi)
    if r is None:
        r = cache[chi] = tuple(rs.to_simple(chi[0])) + (chi[1],)
    return r


def char_poly(rs: RootSystem, chi: AffineCharacter) -> PolyElem:
    return PolyElem.linear(char_coeffs(rs, chi))


def hbar(rs: RootSystem) -> PolyElem:
    return PolyElem.var(nvars(rs), rs.rank)


def _cache(rs: RootSystem, name: str) -> dict:
    d = rs.__dict__.get(name)
    if d is None:
        d = {}
        rs.__dict__[name] = d
    return d


def variable_images(x: AffineWeylElement) -> tuple:
    """Images of the variables under ``x`` as coefficient vectors."""
    rs = x.rs
    cache = _cache(rs, "_var_images")
    r = cache.get(x)
    if r is None:
        n = rs.rank
        ims = []
        for a in rs.simple_roots:
            ims.append(char_coeffs(rs, act_char(x, AffineCharacter(a, 0))))
        ims.append((0,) * n + (1,))
        r = tuple(ims)
        cache[x] = r
    return r


def act_frac(x: AffineWeylElement, f: FracElem) -> FracElem:
    """``^x f``: the ring automorphism induced by ``x`` on rational functions."""
    if x.is_identity() or f.is_zero():
        return f
    return f.transform(variable_images(x))


def act_poly(x: AffineWeylElement, p: PolyElem) -> PolyElem:
    return p.substitute([PolyElem.linear(im) for im in variable_images(x)])


# -- edges --------------------------------------------------------------------

class EdgeData(NamedTuple):
    source: AffineWeylElement
    target: AffineWeylElement
    alpha: tuple
    k: int
    character: AffineCharacter
    form: LinForm


def _reflections(rs: RootSystem, d: int) -> list[tuple[tuple, int, AffineWeylElement]]:
    cache = _cache(rs, "_affine_refl")
    r = cache.get(d)
    if r is None:
        r = [(a, k, affine_reflection(rs, a, k)) for a in rs.positive_roots for k in range(-d, d)]
        cache[d] = r
    return r


def edges_at(x: AffineWeylElement, d: int) -> list[EdgeData]:
    """The ``|R⁺|·2d`` GKM edges at ``x``: partners ``x s_{α,k}``, ``-d <= k <= d-1``."""
    rs = x.rs
    cache = _cache(rs, "_edges")
    key = (x, d)
    r = cache.get(key)
    if r is None:
        r = []
        for a, k, s in _reflections(rs, d):
            chi = act_char(x, AffineCharacter(a, k))
            r.append(EdgeData(x, x * s, a, k, chi, linform(char_coeffs(rs, chi))[1]))
        cache[key] = r
    return r


def allowed_forms(x: AffineWeylElement, d: int) -> frozenset:
    rs = x.rs
    cache = _cache(rs, "_allowed")
    key = (x, d)
    r = cache.get(key)
    if r is None:
        r = frozenset(e.form for e in edges_at(x, d))
        cache[key] = r
    return r


# -- classes ------------------------------------------------------------------

class GkmClass:
    """A finitely supported map ``W ⋉ Λ -> Field`` at level ``d``."""

    __slots__ = ("rs", "d", "entries")

    def __init__(self, rs: RootSystem, d: int, entries: Mapping[AffineWeylElement, FracElem] | None = None):
        self.rs = rs
        self.d = d
        n = nvars(rs)
        clean = {}
        for x, f in (entries or {}).items():
            if not isinstance(f, FracElem):
                f = FracElem.const(n, f) if isinstance(f, (int, Fraction)) else FracElem.from_poly(f)
            if not f.is_zero():
                clean[x] = f
        self.entries: dict[AffineWeylElement, FracElem] = clean

    @classmethod
    def _raw(cls, rs, d, entries) -> "GkmClass":
        c = object.__new__(cls)
        c.rs, c.d, c.entries = rs, d, entries
        return c

    @classmethod
    def indicator(cls, x: AffineWeylElement, d: int) -> "GkmClass":
        """``a^x``: entry 1 at ``x``, zero elsewhere."""
        return cls._raw(x.rs, d, {x: FracElem.one(nvars(x.rs))})

    @classmethod
    def zero(cls, rs: RootSystem, d: int) -> "GkmClass":
        return cls._raw(rs, d, {})

    def __getitem__(self, x: AffineWeylElement) -> FracElem:
        f = self.entries.get(x)
        return f if f is not None else FracElem.zero(nvars(self.rs))

    @property
    def support(self) -> list[AffineWeylElement]:
        return sorted(self.entries, key=AffineWeylElement.key)

    def is_zero(self) -> bool:
        return not self.entries

    def _check(self, other: "GkmClass") -> None:
        if other.rs is not self.rs or other.d != self.d:
            raise ValueError("classes of different root systems or levels")

    def __add__(self, other: "GkmClass") -> "GkmClass":
        self._check(other)
        out = dict(self.entries)
        for x, f in other.entries.items():
            g = out.get(x)
            s = f if g is None else g + f
            if s.is_zero():
                out.pop(x, None)
            else:
                out[x] = s
        return GkmClass._raw(self.rs, self.d, out)

    def __neg__(self) -> "GkmClass":
        return GkmClass._raw(self.rs, self.d, {x: -f for x, f in self.entries.items()})

    def __sub__(self, other: "GkmClass") -> "GkmClass":
        return self + (-other)

    def scale(self, c) -> "GkmClass":
        """Multiply every entry by a scalar, polynomial or rational function."""
        out = {}
        for x, f in self.entries.items():
            g = f * c
            if not g.is_zero():
                out[x] = g
        return GkmClass._raw(self.rs, self.d, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GkmClass):
            return NotImplemented
        return self.rs is other.rs and self.d == other.d and self.entries == other.entries

    def __hash__(self):  # pragma: no cover - mutable-looking container
        raise TypeError("GkmClass is not hashable")

    def with_level(self, d: int) -> "GkmClass":
        return GkmClass._raw(self.rs, d, dict(self.entries))

    def to_json(self) -> dict:
        return {
            "system": self.rs.label(),
            "d": self.d,
            "entries": [{"x": str(x), "f": self.entries[x].render()} for x in self.support],
        }

    def __repr__(self) -> str:
        body = ", ".join(f"{x}: {self.entries[x]}" for x in self.support)
        return f"GkmClass(d={self.d}, {{{body}}})"


# -- membership ---------------------------------------------------------------

@dataclass
class MembershipResult:
    ok: bool
    violations: list[dict] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def membership(xi: GkmClass, max_violations: int = 5) -> MembershipResult:
    """Check conditions (i) and (ii) at the support and its edge neighbours."""
    d = xi.d
    viol: list[dict] = []
    n = nvars(xi.rs)
    zero = FracElem.zero(n)
    for x in xi.support:
        f = xi.entries[x]
        allowed = allowed_forms(x, d)
        for L, m in f.den.items():
            if m > 1 or L not in allowed:
                viol.append({"kind": "pole", "x": str(x), "form": L.render(), "order": m})
        if viol:
            if len(viol) >= max_violations:
                break
            continue
        for e in edges_at(x, d):
            g = xi.entries.get(e.target, zero)
            if e.form not in f.den and e.form not in g.den:
                continue
            s = f + g
            if e.form in s.den:
                viol.append({"kind": "residue", "x": str(x), "partner": str(e.target),
                             "form": e.form.render(),
                             "residue": s.residue(e.form).render()})
                if len(viol) >= max_violations:
                    break
        if len(viol) >= max_violations:
            break
    return MembershipResult(not viol, viol)


# -- CS action ----------------------------------------------------------------

class Reflection(NamedTuple):
    """Simple affine reflection ``s_i`` (``i = 0`` is the affine node)."""
    i: int


class Weight(NamedTuple):
    """Multiplication by the character ``λ + kħ``."""
    chi: AffineCharacter


class LengthZero(NamedTuple):
    """A length-zero element ``π``."""
    pi: AffineWeylElement


Generator = Reflection | Weight | LengthZero


def _add_entry(out: dict, x, f: FracElem) -> None:
    if f.is_zero():
        return
    g = out.get(x)
    if g is None:
        out[x] = f
    else:
        s = g + f
        if s.is_zero():
            del out[x]
        else:
            out[x] = s


def cs_apply(g, xi: GkmClass) -> GkmClass:
    """Left action of a generator of the algebra at ``c = d``.

    ``(s ξ)_x = (dħ/^xa) ξ_x + ((^{xs}a - dħ)/^{xs}a) ξ_{xs}``,
    ``(λ ξ)_x = ^xλ ξ_x`` and ``(π ξ)_x = ξ_{xπ}``.
    """
    rs, d = xi.rs, xi.d
    out: dict = {}
    if isinstance(g, Reflection):
        s = simple_affine_reflections(rs)[g.i]
        a = simple_affine_roots(rs)[g.i]
        dh = PolyElem.monomial((0,) * rs.rank + (1,), d)
        for x, f in xi.entries.items():
            xs = x * s
            if d == 0:
                _add_entry(out, xs, f)
                continue
            ax = char_coeffs(rs, act_char(x, a))
            t = f * FracElem.reciprocal_linear(ax) * dh
            _add_entry(out, x, t)
            _add_entry(out, xs, f - t)
    elif isinstance(g, Weight):
        for x, f in xi.entries.items():
            _add_entry(out, x, f * char_poly(rs, act_char(x, g.chi)))
    elif isinstance(g, LengthZero):
        inv = g.pi.inverse()
        for x, f in xi.entries.items():
            out[x * inv] = f
    elif isinstance(g, AffineWeylElement):
        return cs_apply_element(g, xi)
    else:
        raise TypeError(f"not a generator: {g!r}")
    return GkmClass._raw(rs, d, out)


def cs_apply_element(x: AffineWeylElement, xi: GkmClass) -> GkmClass:
    """Left action of a group element through a reduced expression."""
    pi, word = reduced_decomposition(x, "character")
    out = xi
    for i in reversed(word):
        out = cs_apply(Reflection(i), out)
    if not pi.is_identity():
        out = cs_apply(LengthZero(pi), out)
    return out


def cs_word(word: Sequence, xi: GkmClass) -> GkmClass:
    """Apply ``g_1 g_2 ... g_k`` (rightmost first)."""
    out = xi
    for g in reversed(word):
        out = cs_apply(g, out)
    return out


# -- ECM action ---------------------------------------------------------------

def ecm_apply(xi: GkmClass, g) -> GkmClass:
    """Right action: ``(ξ·y)_x = ^{y⁻¹} ξ_{yx}``; ring elements multiply entries."""
    rs = xi.rs
    if isinstance(g, AffineWeylElement):
        inv = g.inverse()
        return GkmClass._raw(rs, xi.d, {inv * x: act_frac(inv, f) for x, f in xi.entries.items()})
    if isinstance(g, AffineCharacter):
        g = char_poly(rs, g)
    if isinstance(g, (PolyElem, FracElem, int, Fraction)):
        return xi.scale(g)
    raise TypeError(f"not an ECM generator: {g!r}")


# -- isotypic parts -----------------------------------------------------------

def _finite_orbit(xi: GkmClass) -> list[tuple[int, GkmClass]]:
    """``[(sign(w), w·ξ)]`` over the finite Weyl group."""
    rs = xi.rs
    res = {0: xi}
    order = [0]
    for w in rs.weyl[1:]:
        i = w.word[0]
        rest = rs.mul(rs.simple_reflection(i), w)  # s_i w has shorter word
        res[w.index] = cs_apply(Reflection(i + 1), res[rest.index])
        order.append(w.index)
    return [(rs.weyl[i].sign, res[i]) for i in order]


def project_isotypic(xi: GkmClass, kind: str) -> GkmClass:
    """``|W|⁻¹ Σ_w (±1)^w w·ξ`` for ``kind`` in ``{'triv', 'sign'}``."""
    if kind not in ("triv", "sign"):
        raise ValueError(f"unknown isotypic kind {kind!r}")
    total = GkmClass.zero(xi.rs, xi.d)
    for sgn, c in _finite_orbit(xi):
        total = total + (c if kind == "triv" or sgn == 1 else -c)
    return total.scale(Fraction(1, xi.rs.order))


def _simple_pairs(xi: GkmClass):
    rs = xi.rs
    for i in range(rs.rank):
        s = finite(rs, rs.simple_reflection(i))
        a = AffineCharacter(rs.simple_roots[i], 0)
        pts = set(xi.entries) | {x * s for x in xi.entries}
        for x in pts:
            yield x, x * s, a


def is_sign(xi: GkmClass) -> bool:
    """``f_x = -f_{xs}`` for every simple Dynkin reflection."""
    return all(xi[x] == -xi[xs] for x, xs, _ in _simple_pairs(xi))


def is_triv(xi: GkmClass) -> bool:
    """``(^xα + dħ) f_{xs} = (^xα - dħ) f_x`` for every simple Dynkin reflection."""
    rs, d = xi.rs, xi.d
    h = hbar(rs).scale(d)
    for x, xs, a in _simple_pairs(xi):
        ax = char_poly(rs, act_char(x, a))
        if xi[xs] * (ax + h) != xi[x] * (ax - h):
            return False
    return True


# -- the map Υ ----------------------------------------------------------------

def upsilon_poly(rs: RootSystem, d: int) -> PolyElem:
    """``υ = prod_{α>0} (α + dħ)``."""
    p = PolyElem.one(nvars(rs))
    for a in rs.positive_roots:
        p = p * char_poly(rs, AffineCharacter(a, d))
    return p


def upsilon(xi: GkmClass, check: bool = True) -> GkmClass:
    """Sign-isotypic level ``d+1`` to trivial-isotypic level ``d``: ``f_x -> ^xυ f_x``."""
    d = xi.d - 1
    if d < 0:
        raise ValueError("upsilon needs a class of level at least 1")
    if check and not is_sign(xi):
        raise IsotypicError("input class is not sign-isotypic")
    u = upsilon_poly(xi.rs, d)
    out = {x: f * act_poly(x, u) for x, f in xi.entries.items()}
    res = GkmClass._raw(xi.rs, d, out)
    if check:
        if not membership(res):
            raise InvariantError("upsilon output fails membership")
        if not is_triv(res):
            raise InvariantError("upsilon output is not trivial-isotypic")
    return res


def upsilon_inverse(xi: GkmClass, check: bool = True) -> GkmClass:
    """Inverse of :func:`upsilon` on trivial-isotypic classes."""
    d = xi.d
    if check and not is_triv(xi):
        raise IsotypicError("input class is not trivial-isotypic")
    rs = xi.rs
    out = {}
    for x, f in xi.entries.items():
        g = f
        for a in rs.positive_roots:
            g = g * FracElem.reciprocal_linear(char_coeffs(rs, act_char(x, AffineCharacter(a, d))))
        out[x] = g
    res = GkmClass._raw(rs, d + 1, out)
    if check:
        if not membership(res):
            raise InvariantError("upsilon_inverse output fails membership")
        if not is_sign(res):
            raise InvariantError("upsilon_inverse output is not sign-isotypic")
    return res


# -- affine cells -------------------------------------------------------------

def is_positive_affine(rs: RootSystem, chi: AffineCharacter) -> bool:
    """``λ + kħ`` is a root of the Iwahori: ``k > 0``, or ``k = 0`` and ``λ > 0``."""
    return chi.k > 0 or (chi.k == 0 and rs.is_positive_root(chi.lam))


def reference_weights(rs: RootSystem, d: int) -> list[AffineCharacter]:
    """``(R⁺ - rħ)_{1<=r<=d}`` together with ``(R⁻ - rħ)_{0<=r<=d-1}``."""
    out = []
    for r in range(1, d + 1):
        out += [AffineCharacter(a, -r) for a in rs.positive_roots]
    for r in range(0, d):
        out += [AffineCharacter(tuple(-c for c in a), -r) for a in rs.positive_roots]
    return out


def cell_weights(x: AffineWeylElement, d: int) -> list[AffineCharacter]:
    """Tangent weights of the affine cell at ``x``: positive roots among ``x·X_d``."""
    rs = x.rs
    out = []
    for chi in reference_weights(rs, d):
        c = act_char(x, chi)
        if is_positive_affine(rs, c):
            out.append(c)
    return sorted(out)


def swap_condition(x: AffineWeylElement, a: AffineCharacter, d: int) -> bool:
    """``a`` does not lie in ``x·X_d``."""
    a = AffineCharacter(tuple(a[0]), a[1])
    return all(act_char(x, chi) != a for chi in reference_weights(x.rs, d))


def fundamental_class_diagonal(w: AffineWeylElement, d: int) -> FracElem:
    """``1 / prod`` of the cell weights at ``w``."""
    rs = w.rs
    f = FracElem.one(nvars(rs))
    for chi in cell_weights(w, d):
        f = f * FracElem.reciprocal_linear(char_coeffs(rs, chi))
    return f


# -- random classes -----------------------------------------------------------

def cs_generators(rs: RootSystem) -> list:
    gens: list = [Reflection(i) for i in range(rs.rank + 1)]
    r = rs.rank
    gens += [Weight(AffineCharacter(tuple(int(i == j) for j in range(r)), 0)) for i in range(r)]
    gens.append(Weight(AffineCharacter((0,) * r, 1)))
    gens += [LengthZero(p) for p in length_zero_elements(rs)[1:]]
    return gens


def ecm_group_generators(rs: RootSystem) -> list[AffineWeylElement]:
    gens = list(simple_affine_reflections(rs))
    r = rs.rank
    gens += [translation(rs, tuple(int(i == j) for j in range(r))) for i in range(r)]
    gens += length_zero_elements(rs)[1:]
    return gens


def ecm_ring_generators(rs: RootSystem) -> list[AffineCharacter]:
    r = rs.rank
    out = [AffineCharacter(tuple(int(i == j) for j in range(r)), 0) for i in range(r)]
    out.append(AffineCharacter((0,) * r, 1))
    return out


def random_element(rs: RootSystem, rng: random.Random, radius: int) -> AffineWeylElement:
    gens = simple_affine_reflections(rs)
    pis = length_zero_elements(rs)
    x = rng.choice(pis)
    for _ in range(rng.randint(0, radius)):
        x = x * rng.choice(gens)
    return x


def random_class(rs: RootSystem, d: int, rng: random.Random, word_length: int = 6,
                 radius: int = 3) -> GkmClass:
    """A valid class built from an indicator class by a random generator word."""
    xi = GkmClass.indicator(random_element(rs, rng, radius), d)
    cs = cs_generators(rs)
    refl = [g for g in cs if not isinstance(g, Weight)]
    weights = [g for g in cs if isinstance(g, Weight)]
    ecm = ecm_group_generators(rs)
    ring = ecm_ring_generators(rs)
    steps = rng.randint(min(3, word_length), word_length)
    for _ in range(steps):
        u = rng.random()
        if u < 0.6:
            xi = cs_apply(rng.choice(refl), xi)
        elif u < 0.75:
            xi = ecm_apply(xi, rng.choice(ecm))
        elif u < 0.85:
            xi = cs_apply(rng.choice(weights), xi)
        elif u < 0.95:
            xi = ecm_apply(xi, rng.choice(ring))
        else:
            other = GkmClass.indicator(random_element(rs, rng, radius), d)
            xi = xi + other.scale(rng.choice([1, -1, 2]))
    if xi.is_zero():
        xi = GkmClass.indicator(identity(rs), d)
    return xi


# -- relation suite -----------------------------------------------------------

@dataclass
class Check:
    name: str
    samples: int = 0
    failures: int = 0
    witness: dict | None = None

    @property
    def status(self) -> str:
        return "pass" if self.failures == 0 else "fail"

    def record(self, ok: bool, witness: Callable[[], dict]) -> None:
        self.samples += 1
        if not ok:
            self.failures += 1
            if self.witness is None:
                self.witness = witness()

    def to_json(self) -> dict:
        out = {"name": self.name, "samples": self.samples, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _gen_str(g) -> str:
    if isinstance(g, Reflection):
        return f"s{g.i}"
    if isinstance(g, Weight):
        return f"chi{list(g.chi.lam)}+{g.chi.k}h"
    if isinstance(g, LengthZero):
        return f"pi({g.pi})"
    if isinstance(g, AffineCharacter):
        return f"chi{list(g.lam)}+{g.k}h"
    return str(g)


def cs_relation_instances(rs: RootSystem):
    """``(name, lhs_word, rhs)`` triples for the CS relations, as callables on classes."""
    r = rs.rank
    refl = [Reflection(i) for i in range(r + 1)]
    cors = [rs.minimal_coroot] + list(rs.simple_coroots)
    basis = [AffineCharacter(tuple(int(i == j) for j in range(r)), 0) for i in range(r)]
    out = []
    for s in refl:
        out.append((f"cs.involution[s{s.i}]", lambda xi, s=s: cs_apply(s, cs_apply(s, xi)), lambda xi: xi))
    for (i, j), m in braid_orders(rs).items():
        if m is None:
            continue
        wi = [refl[i], refl[j]] * m
        wj = [refl[j], refl[i]] * m
        out.append((f"cs.braid[s{i},s{j}]",
                    lambda xi, w=wi[:m]: cs_word(w, xi), lambda xi, w=wj[:m]: cs_word(w, xi)))
    for s in refl:
        simple = simple_affine_reflections(rs)[s.i]
        for lam in basis:
            lam_s = act_char(simple, lam)
            cval = rs.pair(cors[s.i], lam[0])

            def lhs(xi, s=s, lam=lam, lam_s=lam_s):
                return cs_apply(s, cs_apply(Weight(lam), xi)) - cs_apply(Weight(lam_s), cs_apply(s, xi))

            def rhs(xi, cval=cval):
                return xi.scale(hbar(rs).scale(xi.d * cval))

            out.append((f"cs.cross[s{s.i},{_gen_str(Weight(lam))}]", lhs, rhs))
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            out.append((f"cs.weights_commute[{a},{b}]",
                        lambda xi, a=a, b=b: cs_word([Weight(basis[a]), Weight(basis[b])], xi),
                        lambda xi, a=a, b=b: cs_word([Weight(basis[b]), Weight(basis[a])], xi)))
    pis = length_zero_elements(rs)
    for p in pis[1:]:
        sigma = node_permutation(p)
        for i in range(r + 1):
            out.append((f"cs.pi_conj[{p},s{i}]",
                        lambda xi, p=p, i=i: cs_word([LengthZero(p), refl[i]], xi),
                        lambda xi, p=p, i=i, j=sigma[i]: cs_word([refl[j], LengthZero(p)], xi)))
        for lam in basis:
            out.append((f"cs.pi_weight[{p},{_gen_str(Weight(lam))}]",
                        lambda xi, p=p, lam=lam: cs_word([LengthZero(p), Weight(lam)], xi),
                        lambda xi, p=p, lam=lam: cs_word([Weight(act_char(p, lam)), LengthZero(p)], xi)))
        for q in pis[1:]:
            pq = p * q
            out.append((f"cs.pi_product[{p},{q}]",
                        lambda xi, p=p, q=q: cs_word([LengthZero(p), LengthZero(q)], xi),
                        lambda xi, pq=pq: cs_apply_element(pq, xi)))
    return out


def ecm_relation_instances(rs: RootSystem):
    group = ecm_group_generators(rs)
    ring = ecm_ring_generators(rs)
    out = []
    for g in group:
        for lam in ring:
            lam_g = act_char(g, lam)
            out.append((f"ecm.cross[{g},{_gen_str(lam)}]",
                        lambda xi, g=g, lam=lam: ecm_apply(ecm_apply(xi, g), lam),
                        lambda xi, g=g, lam_g=lam_g: ecm_apply(ecm_apply(xi, lam_g), g)))
    for g in group:
        for h in group:
            gh = g * h
            out.append((f"ecm.group_law[{g},{h}]",
                        lambda xi, g=g, h=h: ecm_apply(ecm_apply(xi, g), h),
                        lambda xi, gh=gh: ecm_apply(xi, gh)))
    return out


def verify_relations(rs: RootSystem, d: int, sample_count: int = 50, ball_radius: int = 3,
                     seed: int = 0, word_length: int = 6) -> dict:
    """Check the CS relations, the ECM relations, their commutation and membership closure.

    Returns a report ``{system, d, seed, checks: [...]}``.
    """
    rng = random.Random(f"{rs.label()}:{d}:{seed}")
    samples = [random_class(rs, d, rng, word_length, ball_radius) for _ in range(sample_count)]
    checks: dict[str, Check] = {}

    def chk(name: str) -> Check:
        c = checks.get(name)
        if c is None:
            c = checks[name] = Check(name)
        return c

    cs_rel = cs_relation_instances(rs)
    ecm_rel = ecm_relation_instances(rs)
    cs_gens = cs_generators(rs)
    ecm_gens: list = ecm_group_generators(rs) + ecm_ring_generators(rs)
    for idx, xi in enumerate(samples):
        def wit(extra: dict, xi=xi, idx=idx) -> dict:
            return {"sample": idx, "class": xi.to_json(), **extra}

        m = membership(xi)
        chk("sample.membership").record(bool(m), lambda: wit({"violations": m.violations}))
        for name, lhs, rhs in cs_rel + ecm_rel:
            chk(name.split("[")[0]).record(lhs(xi) == rhs(xi), lambda name=name: wit({"relation": name}))
        left = {i: cs_apply(g, xi) for i, g in enumerate(cs_gens)}
        right = {j: ecm_apply(xi, h) for j, h in enumerate(ecm_gens)}
        for i, g in enumerate(cs_gens):
            chk("closure.cs").record(bool(membership(left[i])), lambda g=g: wit({"generator": _gen_str(g)}))
        for j, h in enumerate(ecm_gens):
            chk("closure.ecm").record(bool(membership(right[j])), lambda h=h: wit({"generator": _gen_str(h)}))
        for i, g in enumerate(cs_gens):
            for j, h in enumerate(ecm_gens):
                ok = cs_apply(g, right[j]) == ecm_apply(left[i], h)
                chk("bimodule.commute").record(
                    ok, lambda g=g, h=h: wit({"cs": _gen_str(g), "ecm": _gen_str(h)}))
    return {
        "system": rs.label(),
        "d": d,
        "seed": seed,
        "checks": [c.to_json() for c in checks.values()],
    }


def verify_regular_bimodule(rs: RootSystem, radius: int = 4) -> dict:
    """At ``d = 0``: ``g·a^z·y = a^{y⁻¹ z g⁻¹}`` on indicator classes.

    Exhaustive over ``g, y`` in the length ball with ``z = e``, and over ``z``
    in the ball with ``g, y`` running through the group generators.
    """
    extended = rs.lattice != "coroot"
    elems = ball(rs, radius, "character", extended=extended)
    gens = ecm_group_generators(rs)
    e = identity(rs)
    chk = Check("bimodule.regular")

    def test(g, z, y):
        lhs = ecm_apply(cs_apply_element(g, GkmClass.indicator(z, 0)), y)
        want = GkmClass.indicator(y.inverse() * z * g.inverse(), 0)
        chk.record(lhs == want, lambda: {"g": str(g), "z": str(z), "y": str(y),
                                         "got": lhs.to_json()})

    for g in elems:
        for y in elems:
            test(g, e, y)
    for z in elems:
        for g in gens:
            for y in gens:
                test(g, z, y)
    return {"system": rs.label(), "d": 0, "radius": radius, "checks": [chk.to_json()]}


def verify_upsilon(rs: RootSystem, d: int, sample_count: int = 20, seed: int = 0,
                   word_length: int = 4, ball_radius: int = 2) -> dict:
    """Round trips of Υ on projected random classes.

    Sign parts at level ``d+1`` go to trivial parts at level ``d`` and back;
    trivial parts at level ``d`` go to sign parts at level ``d+1`` and back.
    """
    rng = random.Random(f"upsilon:{rs.label()}:{d}:{seed}")
    fwd = Check("upsilon.sign_to_triv")
    back = Check("upsilon.triv_to_sign")
    skipped = 0

    def nonzero(level: int, kind: str) -> GkmClass:
        nonlocal skipped
        while True:
            xi = project_isotypic(random_class(rs, level, rng, word_length, ball_radius), kind)
            if not xi.is_zero():
                return xi
            skipped += 1

    for idx in range(sample_count):
        xi = nonzero(d + 1, "sign")
        try:
            eta = upsilon(xi)
            ok = eta.d == d and upsilon_inverse(eta) == xi
            err = None
        except (IsotypicError, InvariantError) as exc:
            ok, err = False, str(exc)
        fwd.record(ok, lambda xi=xi, err=err: {"sample": idx, "class": xi.to_json(), "error": err})

        zeta = nonzero(d, "triv")
        try:
            th = upsilon_inverse(zeta)
            ok = th.d == d + 1 and upsilon(th) == zeta
            err = None
        except (IsotypicError, InvariantError) as exc:
            ok, err = False, str(exc)
        back.record(ok, lambda zeta=zeta, err=err: {"sample": idx, "class": zeta.to_json(), "error": err})
    return {"system": rs.label(), "d": d, "seed": seed, "zero_projections_skipped": skipped,
            "checks": [fwd.to_json(), back.to_json()]}
