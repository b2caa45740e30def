"""Exact multivariate Laurent polynomial and rational function arithmetic.

The coefficient field is the rationals (stdlib Fraction).  A polynomial lives
in variables x1..xn (Laurent, integer exponents of either sign), y1..yn
(ordinary, nonnegative exponents), and two central parameters c and h.

Monomials are keyed by (x-exponents, y-exponents, c-exponent, h-exponent).
The canonical form of a polynomial never stores a zero coefficient, and the
canonical term order is descending lexicographic on
(y-exponents, x-exponents, c-exponent, h-exponent).

Rational functions keep a factored denominator: a multiset of linear forms
y_r - y_s + a*h + b*c with r < s.  Any sign flip needed to normalise a form
to r < s is absorbed into the numerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
import itertools


@dataclass(frozen=True)
class VarContext:
    """Ambient variable set: n pairs (x_i, y_i) plus optional parameters."""

    n: int
    has_c: bool = True
    has_h: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one variable pair")


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


class LaurentPoly:
    """Immutable exact polynomial; do not mutate .terms after construction."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        clean = {}
        for key, coeff in terms.items():
            coeff = _as_fraction(coeff)
            if coeff:
                clean[key] = coeff
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, {})

    @classmethod
    def const(cls, ctx, value):
        zero = (0,) * ctx.n
        return cls(ctx, {(zero, zero, 0, 0): _as_fraction(value)})

    @classmethod
    def one(cls, ctx):
        return cls.const(ctx, 1)

    @classmethod
    def monomial(cls, ctx, xe=None, ye=None, ce=0, he=0, coeff=1):
        xe = tuple(xe) if xe is not None else (0,) * ctx.n
        ye = tuple(ye) if ye is not None else (0,) * ctx.n
        if len(xe) != ctx.n or len(ye) != ctx.n:
            raise ValueError("exponent vector length mismatch")
        if any(e < 0 for e in ye):
            raise ValueError("y exponents must be nonnegative")
        if ce and not ctx.has_c:
            raise ValueError("context has no c parameter")
        if he and not ctx.has_h:
            raise ValueError("context has no h parameter")
        return cls(ctx, {(xe, ye, ce, he): coeff})

    @classmethod
    def x(cls, ctx, i, power=1):
        xe = [0] * ctx.n
        xe[i] = power
        return cls.monomial(ctx, xe=xe)

    @classmethod
    def y(cls, ctx, i, power=1):
        ye = [0] * ctx.n
        ye[i] = power
        return cls.monomial(ctx, ye=ye)

    @classmethod
    def c(cls, ctx):
        return cls.monomial(ctx, ce=1)

    @classmethod
    def h(cls, ctx):
        return cls.monomial(ctx, he=1)

    # -- basic queries -------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.ctx, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def is_constant(self):
        zero = (0,) * self.ctx.n
        return all(k == (zero, zero, 0, 0) for k in self.terms)

    def constant_value(self):
        zero = (0,) * self.ctx.n
        return self.terms.get((zero, zero, 0, 0), Fraction(0))

    def coefficient(self, xe, ye, ce=0, he=0):
        return self.terms.get((tuple(xe), tuple(ye), ce, he), Fraction(0))

    def y_degree(self):
        if not self.terms:
            return -1
        return max(sum(ye) for _, ye, _, _ in self.terms)

    def total_weight(self, y_weight=2, c_weight=2, h_weight=2):
        """Degrees of all terms under deg y = deg c = deg h = y_weight (x ignored)."""
        return {
            sum(ye) * y_weight + ce * c_weight + he * h_weight
            for _, ye, ce, he in self.terms
        }

    def x_support(self):
        return {xe for xe, _, _, _ in self.terms}

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.ctx, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key, Fraction(0)) + coeff
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return LaurentPoly(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.ctx, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if not other:
                return LaurentPoly.zero(self.ctx)
            return LaurentPoly(self.ctx, {k: v * other for k, v in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for (xe1, ye1, ce1, he1), c1 in self.terms.items():
            for (xe2, ye2, ce2, he2), c2 in other.terms.items():
                key = (
                    tuple(a + b for a, b in zip(xe1, xe2)),
                    tuple(a + b for a, b in zip(ye1, ye2)),
                    ce1 + ce2,
                    he1 + he2,
                )
                acc = out.get(key, Fraction(0)) + c1 * c2
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return LaurentPoly(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LaurentPoly.one(self.ctx)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self):
        return f"LaurentPoly({poly_to_text(self)})"


# -- substitutions and group actions -----------------------------------


def act_perm(w, f):
    """Apply a permutation to variables: x_j -> x_{w(j)}, y_j -> y_{w(j)}.

    w is a tuple of images, 0-indexed: position j maps to w[j].  On exponent
    vectors this transports e to e' with e'_{w(j)} = e_j.
    """
    n = f.ctx.n
    out = {}
    for (xe, ye, ce, he), coeff in f.terms.items():
        nxe = [0] * n
        nye = [0] * n
        for j in range(n):
            nxe[w[j]] = xe[j]
            nye[w[j]] = ye[j]
        out[(tuple(nxe), tuple(nye), ce, he)] = coeff
    return LaurentPoly(f.ctx, out)


def shift_y(f, lam):
    """Substitute y_i -> y_i + h * lam_i (x variables untouched)."""
    if not any(lam):
        return f
    out = {}
    for (xe, ye, ce, he), coeff in f.terms.items():
        expanded = [(coeff, ye, he)]
        for i, step in enumerate(lam):
            if step == 0:
                continue
            nxt = []
            for cur_coeff, cur_ye, cur_he in expanded:
                k = cur_ye[i]
                if k == 0:
                    nxt.append((cur_coeff, cur_ye, cur_he))
                    continue
                for b in range(k + 1):
                    scale = comb(k, b) * Fraction(step) ** (k - b)
                    nye = cur_ye[:i] + (b,) + cur_ye[i + 1 :]
                    nxt.append((cur_coeff * scale, nye, cur_he + (k - b)))
            expanded = nxt
        for cur_coeff, cur_ye, cur_he in expanded:
            key = (xe, cur_ye, ce, cur_he)
            acc = out.get(key, Fraction(0)) + cur_coeff
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return LaurentPoly(f.ctx, out)


def act(g, f):
    """Extended affine action: act((w, lam), f) = shift by lam after w.

    The permutation substitutes first (y_j -> y_{w(j)}, same on x), then the
    translation part shifts y_i -> y_i + h * lam_i.  Composition satisfies
    act(g1 * g2, f) = act(g1, act(g2, f)) for the product
    (w1, l1)(w2, l2) = (w1 w2, l1 + w1 l2).
    """
    w, lam = g
    return shift_y(act_perm(w, f), lam)


def subst_params(f, c_sign=1, c_to_h=0, h_sign=1):
    """Substitute c -> c_sign*c + c_to_h*h and h -> h_sign*h."""
    out = {}
    for (xe, ye, ce, he), coeff in f.terms.items():
        base_coeff = coeff * Fraction(h_sign) ** he
        if ce == 0 or c_to_h == 0:
            key = (xe, ye, ce, he)
            acc = out.get(key, Fraction(0)) + base_coeff * Fraction(c_sign) ** ce
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
            continue
        for k in range(ce + 1):
            scale = (
                comb(ce, k)
                * Fraction(c_sign) ** k
                * Fraction(c_to_h) ** (ce - k)
            )
            key = (xe, ye, k, he + ce - k)
            acc = out.get(key, Fraction(0)) + base_coeff * scale
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return LaurentPoly(f.ctx, out)


def eval_params(f, c_value=None, h_value=None):
    """Specialise c and/or h to exact scalars (None leaves a parameter alone)."""
    out = {}
    for (xe, ye, ce, he), coeff in f.terms.items():
        if c_value is not None:
            coeff = coeff * _as_fraction(c_value) ** ce
            ce = 0
        if h_value is not None:
            coeff = coeff * _as_fraction(h_value) ** he
            he = 0
        if not coeff:
            continue
        key = (xe, ye, ce, he)
        acc = out.get(key, Fraction(0)) + coeff
        if acc:
            out[key] = acc
        else:
            out.pop(key, None)
    return LaurentPoly(f.ctx, out)


def perm_sign(w):
    inversions = sum(
        1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]
    )
    return -1 if inversions & 1 else 1


def project_isotypic(f, d):
    """Average over S_n acting diagonally on x and y, twisted by sign^d.

    d even gives the symmetriser, d odd the antisymmetriser.
    """
    n = f.ctx.n
    total = LaurentPoly.zero(f.ctx)
    count = 0
    for w in itertools.permutations(range(n)):
        g = act_perm(w, f)
        if d % 2 and perm_sign(w) < 0:
            g = -g
        total = total + g
        count += 1
    return total * Fraction(1, count)


# -- linear forms and factored rational functions ----------------------


@dataclass(frozen=True, order=True)
class LinearForm:
    """The form y_r - y_s + a*h + b*c with r < s (0-indexed)."""

    r: int
    s: int
    a: int = 0
    b: int = 0

    def __post_init__(self):
        if not self.r < self.s:
            raise ValueError("stored form requires r < s; use LinearForm.make")

    @staticmethod
    def make(r, s, a=0, b=0):
        """Normalised form plus the sign absorbed by flipping to r < s."""
        if r == s:
            raise ValueError("degenerate form")
        if r < s:
            return LinearForm(r, s, a, b), 1
        return LinearForm(s, r, -a, -b), -1

    def to_poly(self, ctx):
        f = LaurentPoly.y(ctx, self.r) - LaurentPoly.y(ctx, self.s)
        if self.a:
            f = f + LaurentPoly.h(ctx) * self.a
        if self.b:
            f = f + LaurentPoly.c(ctx) * self.b
        return f

    def transform(self, w, lam):
        """Image under act((w, lam), .) together with the normalising sign."""
        nr, ns = w[self.r], w[self.s]
        na = self.a + lam[nr] - lam[ns]
        return LinearForm.make(nr, ns, na, self.b)

    def shifted(self, lam):
        return LinearForm(self.r, self.s, self.a + lam[self.r] - lam[self.s], self.b)

    def subst_c(self, c_sign, c_to_h):
        return LinearForm(self.r, self.s, self.a + self.b * c_to_h, self.b * c_sign)

    def text(self):
        parts = [f"y{self.r + 1} - y{self.s + 1}"]
        for value, name in ((self.a, "h"), (self.b, "c")):
            if value:
                mag = f"{abs(value)}*{name}" if abs(value) != 1 else name
                parts.append(("+ " if value > 0 else "- ") + mag)
        return " ".join(parts)


def exact_divide(f, form):
    """Divide f by a linear form, returning the quotient or None.

    Synthetic division in y_r against y_r = y_s - a*h - b*c; the remainder
    must vanish identically for the division to count as exact.
    """
    if not f:
        return f
    ctx = f.ctx
    r = form.r
    by_degree = {}
    for (xe, ye, ce, he), coeff in f.terms.items():
        k = ye[r]
        stripped = (xe, ye[:r] + (0,) + ye[r + 1 :], ce, he)
        bucket = by_degree.setdefault(k, {})
        bucket[stripped] = bucket.get(stripped, Fraction(0)) + coeff
    top = max(by_degree)
    if top == 0:
        return None
    levels = [
        LaurentPoly(ctx, by_degree.get(k, {})) for k in range(top + 1)
    ]
    t = LaurentPoly.y(ctx, form.s)
    if form.a:
        t = t - LaurentPoly.h(ctx) * form.a
    if form.b:
        t = t - LaurentPoly.c(ctx) * form.b
    quotient_levels = [None] * top
    carry = levels[top]
    for k in range(top - 1, -1, -1):
        quotient_levels[k] = carry
        carry = levels[k] + t * carry
    if carry:
        return None
    y_r = LaurentPoly.y(ctx, r)
    out = LaurentPoly.zero(ctx)
    power = LaurentPoly.one(ctx)
    for k in range(top):
        out = out + quotient_levels[k] * power
        power = power * y_r
    return out


class RationalFunction:
    """Numerator polynomial over a multiset of linear forms.

    Construction cancels every denominator factor that divides the numerator
    exactly, so a polynomial-valued function always ends with an empty
    denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=()):
        den = sorted(den)
        changed = True
        while changed and num and den:
            changed = False
            for idx, form in enumerate(den):
                q = exact_divide(num, form)
                if q is not None:
                    num = q
                    del den[idx]
                    changed = True
                    break
        if not num:
            den = []
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", tuple(den))

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def from_poly(cls, f):
        return cls(f, ())

    @classmethod
    def zero(cls, ctx):
        return cls(LaurentPoly.zero(ctx), ())

    @classmethod
    def one(cls, ctx):
        return cls(LaurentPoly.one(ctx), ())

    @property
    def ctx(self):
        return self.num.ctx

    def is_zero(self):
        return not self.num

    def is_polynomial(self):
        return not self.den

    def den_poly(self):
        out = LaurentPoly.one(self.ctx)
        for form in self.den:
            out = out * form.to_poly(self.ctx)
        return out

    def __add__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalFunction(
                other if isinstance(other, LaurentPoly) else LaurentPoly.const(self.ctx, other)
            )
        if not isinstance(other, RationalFunction):
            return NotImplemented
        from collections import Counter

        mine, theirs = Counter(self.den), Counter(other.den)
        union = mine | theirs
        scale_self = LaurentPoly.one(self.ctx)
        for form, mult in (union - mine).items():
            for _ in range(mult):
                scale_self = scale_self * form.to_poly(self.ctx)
        scale_other = LaurentPoly.one(self.ctx)
        for form, mult in (union - theirs).items():
            for _ in range(mult):
                scale_other = scale_other * form.to_poly(self.ctx)
        num = self.num * scale_self + other.num * scale_other
        return RationalFunction(num, tuple(union.elements()))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalFunction(
                other if isinstance(other, LaurentPoly) else LaurentPoly.const(self.ctx, other)
            )
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.num * other, self.den)
        if isinstance(other, LaurentPoly):
            return RationalFunction(self.num * other, self.den)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalFunction(
                other if isinstance(other, LaurentPoly) else LaurentPoly.const(self.ctx, other)
            )
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def act(self, g):
        """Extended affine action on both numerator and denominator forms."""
        w, lam = g
        num = act(g, self.num)
        den = []
        for form in self.den:
            nform, sign = form.transform(w, lam)
            den.append(nform)
            if sign < 0:
                num = -num
        return RationalFunction(num, den)

    def shifted(self, lam):
        """Substitute y_i -> y_i + h*lam_i."""
        return RationalFunction(
            shift_y(self.num, lam), [form.shifted(lam) for form in self.den]
        )

    def subst_c(self, c_sign=1, c_to_h=0):
        return RationalFunction(
            subst_params(self.num, c_sign=c_sign, c_to_h=c_to_h),
            [form.subst_c(c_sign, c_to_h) for form in self.den],
        )

    def __repr__(self):
        if not self.den:
            return f"RatFn({poly_to_text(self.num)})"
        den_text = " * ".join(f"({form.text()})" for form in self.den)
        return f"RatFn(({poly_to_text(self.num)}) / {den_text})"


# -- local Taylor data ---------------------------------------------------


def taylor_pair(f, pair, order):
    """Expand along the diagonal of a variable pair up to the given order.

    Multiplies by the x_i power needed to clear negative exponents (a unit at
    the diagonal point, so vanishing orders are unchanged), substitutes
    x_i = x_j + u and y_i = y_j + v, and returns the coefficient of u^a v^b
    for every a + b < order as a map (a, b) -> LaurentPoly.
    """
    i, j = pair
    if i == j:
        raise ValueError("pair must be distinct indices")
    out = {
        (a, b): LaurentPoly.zero(f.ctx)
        for a in range(order)
        for b in range(order - a)
    }
    if not f.terms:
        return out
    clear = max(0, -min(xe[i] for xe, _, _, _ in f.terms))
    acc = {key: dict() for key in out}
    for (xe, ye, ce, he), coeff in f.terms.items():
        ei = xe[i] + clear
        fi = ye[i]
        for a in range(min(ei, order - 1) + 1):
            ca = comb(ei, a)
            for b in range(min(fi, order - 1 - a) + 1):
                scale = coeff * ca * comb(fi, b)
                nxe = list(xe)
                nxe[i] = 0
                nxe[j] += ei - a
                nye = list(ye)
                nye[i] = 0
                nye[j] += fi - b
                key = (tuple(nxe), tuple(nye), ce, he)
                bucket = acc[(a, b)]
                total = bucket.get(key, Fraction(0)) + scale
                if total:
                    bucket[key] = total
                else:
                    bucket.pop(key, None)
    for key, bucket in acc.items():
        out[key] = LaurentPoly(f.ctx, bucket)
    return out


# -- text form ------------------------------------------------------------


def _term_sort_key(key):
    xe, ye, ce, he = key
    return (ye, xe, ce, he)


def poly_to_text(f):
    if not f.terms:
        return "0"
    pieces = []
    for key in sorted(f.terms, key=_term_sort_key, reverse=True):
        xe, ye, ce, he = key
        coeff = f.terms[key]
        factors = []
        for idx, e in enumerate(ye):
            if e == 0:
                continue
            factors.append(f"y{idx + 1}" + (f"^{e}" if e != 1 else ""))
        for idx, e in enumerate(xe):
            if e == 0:
                continue
            factors.append(f"x{idx + 1}" + (f"^{e}" if e != 1 else ""))
        if ce:
            factors.append("c" + (f"^{ce}" if ce != 1 else ""))
        if he:
            factors.append("h" + (f"^{he}" if he != 1 else ""))
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        pieces.append(("-" if coeff < 0 else "+", body))
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


class ParseError(ValueError):
    """Syntax error with a 1-based character position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (position {position})")
        self.position = position


class _Parser:
    def __init__(self, text, ctx):
        self.text = text
        self.ctx = ctx
        self.pos = 0

    def error(self, message):
        raise ParseError(message, self.pos + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self):
        self.skip_ws()
        if self.pos < len(self.text):
            return self.text[self.pos]
        return ""

    def take_int(self, allow_sign=False):
        self.skip_ws()
        start = self.pos
        if allow_sign and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def parse_factor(self):
        self.skip_ws()
        ch = self.peek()
        if not ch:
            self.error("expected a number, variable, or '('")
        if ch.isdigit():
            numer = self.take_int()
            if self.peek() == "/":
                self.pos += 1
                denom = self.take_int()
                if denom == 0:
                    self.error("zero denominator")
                return LaurentPoly.const(self.ctx, Fraction(numer, denom))
            return LaurentPoly.const(self.ctx, numer)
        if ch in "xy":
            self.pos += 1
            index = self.take_int()
            if not 1 <= index <= self.ctx.n:
                self.error(f"variable index out of range 1..{self.ctx.n}")
            power = 1
            if self.peek() == "^":
                self.pos += 1
                power = self.take_int(allow_sign=True)
            if ch == "x":
                return LaurentPoly.x(self.ctx, index - 1, power)
            if power < 0:
                self.error("negative power of a y variable")
            return LaurentPoly.y(self.ctx, index - 1) ** power
        if ch in "ch":
            if ch == "c" and not self.ctx.has_c:
                self.error("context has no c parameter")
            if ch == "h" and not self.ctx.has_h:
                self.error("context has no h parameter")
            self.pos += 1
            power = 1
            if self.peek() == "^":
                self.pos += 1
                power = self.take_int(allow_sign=True)
            if power < 0:
                self.error(f"negative power of {ch}")
            base = LaurentPoly.c(self.ctx) if ch == "c" else LaurentPoly.h(self.ctx)
            return base ** power
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        self.error("expected a number, variable, or '('")

    def parse_term(self):
        out = self.parse_factor()
        while self.peek() == "*":
            self.pos += 1
            out = out * self.parse_factor()
        return out

    def parse_expr(self):
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        elif self.peek() == "+":
            self.pos += 1
        out = self.parse_term() * sign
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                out = out + self.parse_term()
            elif ch == "-":
                self.pos += 1
                out = out - self.parse_term()
            else:
                return out

    def parse(self):
        out = self.parse_expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return out


def parse_poly(text, ctx):
    """Parse the canonical text form back into a polynomial."""
    return _Parser(text, ctx).parse()
