"""
Exact arithmetic in the degenerate cyclotomic Hecke algebra of type
G(ell, 1, r) over the rationals.

The algebra is generated by s_1..s_{r-1} (symmetric group relations),
pairwise commuting x_1..x_r with the mixed relations

    s_i x_j = x_j s_i            (j != i, i+1)
    s_i x_{i+1} = x_i s_i + 1
    s_i x_i = x_{i+1} s_i - 1

and the cyclotomic relation (x_1 - omega_1)...(x_1 - omega_ell) = 0 with
integral parameters omega. Every element is kept in normal form on the basis

    x_1^{a_1} ... x_r^{a_r} . w        0 <= a_i <= ell-1,  w in S_r,

of size ell^r * r!. Multiplication pushes x's to the left with the mixed
relations and rewrites overflowing powers x_j^ell through cached expansions.
The x_j^ell cache is populated once at context construction (warm-up);
elements are immutable values and every operation is deterministic. The
remaining per-context lookup caches fill in lazily but idempotently, so
concurrent use after warm-up is safe under the interpreter lock.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from itertools import product

from .combinatorics import (
    Perm,
    all_perms,
    perm_identity,
    perm_inverse,
    perm_is_valid,
    perm_mul,
    perm_reduced_word,
    perm_simple,
)

Exps = tuple[int, ...]
TermKey = tuple[Exps, Perm]

# s.x^p.y^q -> sum coef * x^alpha y^beta s^eps, for adjacent variables x, y.
# Independent of the position of the reflection and of the context.
_EXCHANGE: dict[tuple[int, int], tuple[tuple[int, int, int, int], ...]] = {}


def _exchange(p: int, q: int) -> tuple[tuple[int, int, int, int], ...]:
    """Expansion of s.x_i^p.x_{i+1}^q as (alpha, beta, eps, coef) terms."""
    got = _EXCHANGE.get((p, q))
    if got is not None:
        return got
    acc: dict[tuple[int, int, int], int] = {}

    def put(a: int, b: int, e: int, c: int) -> None:
        key = (a, b, e)
        acc[key] = acc.get(key, 0) + c
        if acc[key] == 0:
            del acc[key]

    if p == 0 and q == 0:
        put(0, 0, 1, 1)
    elif p > 0:
        # s.x = y.s - 1
        for a, b, e, c in _exchange(p - 1, q):
            put(a, b + 1, e, c)
        put(p - 1, q, 0, -1)
    else:
        # s.y = x.s + 1
        for a, b, e, c in _exchange(0, q - 1):
            put(a + 1, b, e, c)
        put(0, q - 1, 0, 1)
    out = tuple(sorted((a, b, e, c) for (a, b, e), c in acc.items()))
    _EXCHANGE[(p, q)] = out
    return out


class AlgebraContext:
    """
    Fixed (ell, r, omega) with all rewriting caches. Constructing the context
    performs the warm-up (normal forms of x_j^ell for every j); if
    ``cache_dir`` or the CELLULAR_HECKE_CACHE environment variable points at
    a directory, the warm-up is persisted there and reloaded on the next run.
    """

    def __init__(self, ell: int, r: int, omega: tuple[int, ...],
                 cache_dir: str | None = None):
        if ell < 1 or r < 1:
            raise ValueError("need ell >= 1 and r >= 1")
        omega = tuple(int(w) for w in omega)
        if len(omega) != ell:
            raise ValueError("omega must have length ell")
        self.ell = ell
        self.r = r
        self.omega = omega
        self._push: dict[tuple[Perm, Exps], dict[TermKey, Fraction]] = {}
        self._xred: dict[Exps, dict[TermKey, Fraction]] = {}
        self._basis: list[TermKey] | None = None
        self._basis_index: dict[TermKey, int] | None = None
        if cache_dir is None:
            cache_dir = os.environ.get("CELLULAR_HECKE_CACHE")
        self._xl = self._warm_up(cache_dir)

    # -- construction of elements -------------------------------------------

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return self.from_permutation(perm_identity(self.r))

    def from_permutation(self, w: Perm) -> "Element":
        if not perm_is_valid(w) or len(w) != self.r:
            raise ValueError(f"not a permutation of 1..{self.r}: {w}")
        return Element(self, {((0,) * self.r, tuple(w)): Fraction(1)})

    def from_x_monomial(self, exps: tuple[int, ...]) -> "Element":
        """x_1^{a_1}...x_r^{a_r}, reduced if any a_i >= ell."""
        exps = tuple(int(a) for a in exps)
        if len(exps) != self.r or any(a < 0 for a in exps):
            raise ValueError(f"bad exponent vector {exps}")
        ident = perm_identity(self.r)
        if all(a < self.ell for a in exps):
            return Element(self, {(exps, ident): Fraction(1)})
        return Element(self, dict(self._x_reduce(exps)))

    def generator_s(self, i: int) -> "Element":
        return self.from_permutation(perm_simple(self.r, i))

    def generator_x(self, k: int) -> "Element":
        if not 1 <= k <= self.r:
            raise ValueError(f"x_{k} out of range")
        exps = [0] * self.r
        exps[k - 1] = 1
        return self.from_x_monomial(tuple(exps))

    def scalar(self, c) -> "Element":
        return self.one() * Fraction(c)

    # -- normal-form basis ----------------------------------------------------

    def dimension(self) -> int:
        n = 1
        for i in range(1, self.r + 1):
            n *= i
        return n * self.ell ** self.r

    def basis(self) -> list[TermKey]:
        """All (exponents, permutation) keys, in a fixed order."""
        if self._basis is None:
            exps = sorted(product(range(self.ell), repeat=self.r))
            perms = all_perms(self.r)
            self._basis = [(e, w) for e in exps for w in perms]
            self._basis_index = {key: i for i, key in enumerate(self._basis)}
        return self._basis

    def basis_index(self) -> dict[TermKey, int]:
        self.basis()
        return self._basis_index

    def to_vector(self, h: "Element") -> list[Fraction]:
        idx = self.basis_index()
        vec = [Fraction(0)] * len(idx)
        for key, coef in h.terms.items():
            vec[idx[key]] = coef
        return vec

    # -- rewriting machinery --------------------------------------------------

    def _warm_up(self, cache_dir: str | None) -> list[dict[TermKey, Fraction]]:
        if cache_dir:
            loaded = self._load_cache(cache_dir)
            if loaded is not None:
                return loaded
        ell, r = self.ell, self.r
        # monic expansion of (X - omega_1)...(X - omega_ell)
        poly = [Fraction(1)]
        for w in self.omega:
            poly = [Fraction(0)] + poly
            poly = [poly[k] - w * poly[k + 1] if k + 1 < len(poly) else poly[k]
                    for k in range(len(poly) - 1)] + [poly[-1]]
        # x_1^ell = -sum_{k<ell} poly[k] x_1^k
        ident = perm_identity(r)

        def xpow1(k: int) -> Exps:
            return (k,) + (0,) * (r - 1)

        xl: list[dict[TermKey, Fraction]] = []
        first = {}
        for k in range(ell):
            if poly[k]:
                first[(xpow1(k), ident)] = -poly[k]
        xl.append(first)
        # x_j^ell = s.x_{j-1}^ell.s + sum_m x_{j-1}^{ell-1-m} x_j^m s,
        # with s = s_{j-1}; every term reduces using lower-index caches only.
        for j in range(2, r + 1):
            s = perm_simple(r, j - 1)
            cur: dict[TermKey, Fraction] = {}
            for (c, u), coef in xl[j - 2].items():
                for alpha, beta, eps, icoef in _exchange(c[j - 2], c[j - 1]):
                    c2 = list(c)
                    c2[j - 2], c2[j - 1] = alpha, beta
                    perm = perm_mul(perm_mul(s, u), s) if eps else perm_mul(u, s)
                    key = (tuple(c2), perm)
                    val = cur.get(key, Fraction(0)) + coef * icoef
                    if val:
                        cur[key] = val
                    elif key in cur:
                        del cur[key]
            for m in range(ell):
                e = [0] * r
                e[j - 2], e[j - 1] = ell - 1 - m, m
                key = (tuple(e), s)
                val = cur.get(key, Fraction(0)) + 1
                if val:
                    cur[key] = val
                elif key in cur:
                    del cur[key]
            xl.append(cur)
        if cache_dir:
            self._save_cache(cache_dir, xl)
        return xl

    def _x_reduce(self, exps: Exps) -> dict[TermKey, Fraction]:
        """Normal form of the commutative monomial x^exps."""
        got = self._xred.get(exps)
        if got is not None:
            return got
        over = next(j for j, a in enumerate(exps) if a >= self.ell)
        rest = list(exps)
        rest[over] -= self.ell
        out: dict[TermKey, Fraction] = {}
        for (c, u), coef in self._xl[over].items():
            merged = tuple(a + b for a, b in zip(rest, c))
            if all(a < self.ell for a in merged):
                _acc(out, (merged, u), coef)
            else:
                for (d, z), coef2 in self._x_reduce(merged).items():
                    _acc(out, (d, perm_mul(z, u)), coef * coef2)
        self._xred[exps] = out
        return out

    def _push_through(self, w: Perm, exps: Exps) -> dict[TermKey, Fraction]:
        """Normal form of w . x^exps (x's pushed to the left of the perm)."""
        key = (w, exps)
        got = self._push.get(key)
        if got is not None:
            return got
        cur: dict[TermKey, Fraction] = {(exps, perm_identity(self.r)): Fraction(1)}
        for i in reversed(perm_reduced_word(w)):
            s = perm_simple(self.r, i)
            nxt: dict[TermKey, Fraction] = {}
            for (c, u), coef in cur.items():
                for alpha, beta, eps, icoef in _exchange(c[i - 1], c[i]):
                    c2 = list(c)
                    c2[i - 1], c2[i] = alpha, beta
                    c2t = tuple(c2)
                    perm = perm_mul(s, u) if eps else u
                    val = coef * icoef
                    if all(a < self.ell for a in c2t):
                        _acc(nxt, (c2t, perm), val)
                    else:
                        for (d, z), coef2 in self._x_reduce(c2t).items():
                            _acc(nxt, (d, perm_mul(z, perm)), val * coef2)
            cur = nxt
        self._push[key] = cur
        return cur

    def _mono_mul(self, a: Exps, w: Perm, b: Exps, v: Perm) -> dict[TermKey, Fraction]:
        """Normal form of (x^a w)(x^b v)."""
        out: dict[TermKey, Fraction] = {}
        for (c, u), coef in self._push_through(w, b).items():
            merged = tuple(p + q for p, q in zip(a, c))
            uv = perm_mul(u, v)
            if all(e < self.ell for e in merged):
                _acc(out, (merged, uv), coef)
            else:
                for (d, z), coef2 in self._x_reduce(merged).items():
                    _acc(out, (d, perm_mul(z, uv)), coef * coef2)
        return out

    # -- cache persistence ----------------------------------------------------

    def _cache_path(self, cache_dir: str) -> str:
        tag = f"xl-{self.ell}-{self.r}-" + "_".join(str(w) for w in self.omega)
        return os.path.join(cache_dir, tag + ".json")

    def _load_cache(self, cache_dir: str):
        path = self._cache_path(cache_dir)
        if not os.path.exists(path):
            return None
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if data.get("ell") != self.ell or data.get("r") != self.r \
                or tuple(data.get("omega", ())) != self.omega:
            return None
        out = []
        for terms in data["xl"]:
            d = {}
            for a, w, coef in terms:
                d[(tuple(a), tuple(w))] = _parse_coef(coef)
            out.append(d)
        return out

    def _save_cache(self, cache_dir: str, xl) -> None:
        os.makedirs(cache_dir, exist_ok=True)
        data = {
            "ell": self.ell,
            "r": self.r,
            "omega": list(self.omega),
            "xl": [
                sorted([list(a), list(w), _format_coef(c)]
                       for (a, w), c in terms.items())
                for terms in xl
            ],
        }
        with open(self._cache_path(cache_dir), "w", encoding="utf-8") as fh:
            json.dump(data, fh, sort_keys=True)

    def __repr__(self) -> str:
        return f"AlgebraContext(ell={self.ell}, r={self.r}, omega={self.omega})"


def _acc(d: dict, key, val) -> None:
    cur = d.get(key, 0) + val
    if cur:
        d[key] = cur
    elif key in d:
        del d[key]


def _format_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _parse_coef(text: str) -> Fraction:
    return Fraction(text)


class Element:
    """
    A finite rational combination of normal-form monomials. Immutable by
    convention; all arithmetic returns fresh elements.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: dict[TermKey, Fraction]):
        self.ctx = ctx
        self.terms = terms

    def _check(self, other: "Element") -> None:
        if self.ctx is not other.ctx:
            raise ValueError("elements belong to different algebra contexts")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.terms)
        for key, coef in other.terms.items():
            _acc(out, key, coef)
        return Element(self.ctx, out)

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.terms)
        for key, coef in other.terms.items():
            _acc(out, key, -coef)
        return Element(self.ctx, out)

    def __neg__(self) -> "Element":
        return Element(self.ctx, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            out: dict[TermKey, Fraction] = {}
            for (a, w), c1 in self.terms.items():
                for (b, v), c2 in other.terms.items():
                    c12 = c1 * c2
                    for key, c3 in self.ctx._mono_mul(a, w, b, v).items():
                        _acc(out, key, c12 * c3)
            return Element(self.ctx, out)
        coef = Fraction(other)
        if coef == 0:
            return self.ctx.zero()
        return Element(self.ctx, {k: coef * c for k, c in self.terms.items()})

    def __rmul__(self, other):
        # scalars commute with everything; Element*Element handled by __mul__
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.ctx is other.ctx
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (a, w), c in sorted(self.terms.items()):
            xs = ".".join(f"x{i+1}^{e}" for i, e in enumerate(a) if e)
            bits.append(f"{c}*{xs or '1'}*{w}")
        return " + ".join(bits)


def add(h1: Element, h2: Element) -> Element:
    return h1 + h2


def scale(c, h: Element) -> Element:
    return h * Fraction(c)


def star(h: Element) -> Element:
    """
    The anti-automorphism fixing every s_i and every x_k: reverses products,
    sends x^a . w to w^{-1} . x^a (then renormalizes).
    """
    ctx = h.ctx
    out: dict[TermKey, Fraction] = {}
    for (a, w), coef in h.terms.items():
        for key, c2 in ctx._push_through(perm_inverse(w), a).items():
            _acc(out, key, coef * c2)
    return Element(ctx, out)


def tau_hat(h: Element) -> Fraction:
    """Coefficient of x_1^{ell-1}...x_r^{ell-1} . 1 in normal form."""
    ctx = h.ctx
    top = ((ctx.ell - 1,) * ctx.r, perm_identity(ctx.r))
    return h.terms.get(top, Fraction(0))


def pairing(h1: Element, h2: Element) -> Fraction:
    """The symmetric bilinear form tau_hat(h1 . star(h2))."""
    h1._check(h2)
    return tau_hat(h1 * star(h2))


def defining_relations(ctx: AlgebraContext) -> list[tuple[str, Element]]:
    """
    Every defining relation as a (name, element) pair; all elements must be
    zero after normalization.
    """
    r, ell = ctx.r, ctx.ell
    one = ctx.one()
    s = {i: ctx.generator_s(i) for i in range(1, r)}
    x = {k: ctx.generator_x(k) for k in range(1, r + 1)}
    rels: list[tuple[str, Element]] = []
    for i in range(1, r):
        rels.append((f"s{i}^2 = 1", s[i] * s[i] - one))
    for i in range(1, r - 1):
        rels.append(
            (f"braid s{i} s{i+1}",
             s[i] * s[i + 1] * s[i] - s[i + 1] * s[i] * s[i + 1])
        )
    for i in range(1, r):
        for j in range(i + 2, r):
            rels.append((f"s{i} s{j} commute", s[i] * s[j] - s[j] * s[i]))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            rels.append((f"x{i} x{j} commute", x[i] * x[j] - x[j] * x[i]))
    for i in range(1, r):
        for j in range(1, r + 1):
            if j not in (i, i + 1):
                rels.append((f"s{i} x{j} commute", s[i] * x[j] - x[j] * s[i]))
    for i in range(1, r):
        rels.append(
            (f"x{i} s{i} - s{i} x{i+1} = -1",
             x[i] * s[i] - s[i] * x[i + 1] + one)
        )
        rels.append(
            (f"s{i} x{i} - x{i+1} s{i} = -1",
             s[i] * x[i] - x[i + 1] * s[i] + one)
        )
    f = one
    for w in ctx.omega:
        f = f * (x[1] - one * Fraction(w))
    rels.append((f"cyclotomic degree {ell}", f))
    return rels


def verify_basis(ctx: AlgebraContext, pair_sample: int = 300,
                 triple_sample: int = 200, seed: int = 0) -> bool:
    """
    Confirm the normal-form basis: size ell^r * r!, closure of sampled basis
    products under the normal form, and associativity on sampled triples.
    """
    import random

    basis = ctx.basis()
    if len(basis) != ctx.dimension():
        return False
    rng = random.Random(seed)
    n = len(basis)

    def elem(i: int) -> Element:
        return Element(ctx, {basis[i]: Fraction(1)})

    for _ in range(pair_sample):
        i, j = rng.randrange(n), rng.randrange(n)
        prod = elem(i) * elem(j)
        for (a, w) in prod.terms:
            if len(a) != ctx.r or any(not 0 <= e < ctx.ell for e in a):
                return False
            if not perm_is_valid(w):
                return False
    for _ in range(triple_sample):
        i, j, k = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        if (elem(i) * elem(j)) * elem(k) != elem(i) * (elem(j) * elem(k)):
            return False
    return True
