"""Difference-reflection operators in the polynomial representation.

An operator is a finite sum of terms f_(w,lam) * u^lam * w where w is a
permutation, u^lam shifts y_i by h*lam_i, and the coefficient f is a rational
function acting by multiplication on the left.  Composition follows
(f * g1) o (g * g2) = f * act(g1, g) * (g1 g2), i.e. coefficients picked up
from the right factor are transported through the left factor's group part.

The distinguished generators are

    sigma_i = s_i + (c / (y_i - y_{i+1})) (s_i - 1)
    pi      = u^{e_1} w_c,  acting by f(y_1,..,y_n) -> f(y_2,..,y_n,y_1 + h)
    y_k     = multiplication by y_k

which satisfy sigma_i^2 = 1, the braid relations, the cross relations
sigma_i y_k - y_{s_i(k)} sigma_i = c (delta_{k,i+1} - delta_{k,i}), the pi
relations pi y_i = y_{i+1} pi (i < n), pi y_n = (y_1 + h) pi, and
pi^n = u^{(1,..,1)}.

Words in these generators support the degree-reversing anti-involution
phi(sigma_i) = -sigma_{n-i}, phi(y_i) = y_{n+1-i}, phi(pi) = pi, which sends
h to -h on explicit scalar coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .poly import (
    LaurentPoly,
    LinearForm,
    ParseError,
    RationalFunction,
    VarContext,
    act,
    parse_poly,
    poly_to_text,
    subst_params,
)
from .weyl import (
    ExtAffineElt,
    all_perms,
    identity_perm,
    perm_inv,
    perm_mul,
    perm_on_vector,
    reduced_word,
    transposition,
)


class NotPolynomialPreserving(ValueError):
    """Raised when applying an operator leaves a nonzero denominator."""


class DiffReflOp:
    """Finite sum of rational coefficients times extended affine group elements."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        clean = {}
        for key, coeff in terms.items():
            if isinstance(coeff, LaurentPoly):
                coeff = RationalFunction.from_poly(coeff)
            if not coeff.is_zero():
                clean[key] = coeff
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("DiffReflOp is immutable")

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, {})

    @classmethod
    def identity(cls, ctx):
        key = (identity_perm(ctx.n), (0,) * ctx.n)
        return cls(ctx, {key: RationalFunction.one(ctx)})

    def __add__(self, other):
        if not isinstance(other, DiffReflOp):
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            if key in out:
                out[key] = out[key] + coeff
            else:
                out[key] = coeff
        return DiffReflOp(self.ctx, out)

    def __neg__(self):
        return DiffReflOp(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, DiffReflOp):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        """Left multiplication by a scalar, polynomial, or rational function."""
        if isinstance(scalar, (int, Fraction, LaurentPoly, RationalFunction)):
            return DiffReflOp(
                self.ctx, {k: v * scalar for k, v in self.terms.items()}
            )
        return NotImplemented

    __rmul__ = __mul__

    def compose(self, other):
        """Operator product self o other (other acts first)."""
        out = {}
        for (w1, l1), f1 in self.terms.items():
            g1 = (w1, l1)
            for (w2, l2), f2 in other.terms.items():
                key = (
                    perm_mul(w1, w2),
                    tuple(a + b for a, b in zip(l1, perm_on_vector(w1, l2))),
                )
                coeff = f1 * f2.act(g1)
                if key in out:
                    out[key] = out[key] + coeff
                else:
                    out[key] = coeff
        return DiffReflOp(self.ctx, out)

    def __matmul__(self, other):
        return self.compose(other)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, DiffReflOp):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        zero = RationalFunction.zero(self.ctx)
        for key in keys:
            a = self.terms.get(key, zero)
            b = other.terms.get(key, zero)
            if not (a - b).is_zero():
                return False
        return True

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms)))

    def apply(self, f):
        """Apply to a polynomial; raises NotPolynomialPreserving on failure."""
        total = RationalFunction.zero(self.ctx)
        for (w, lam), coeff in self.terms.items():
            total = total + coeff * act((w, lam), f)
        if not total.is_polynomial():
            raise NotPolynomialPreserving(
                f"result is not polynomial: {total!r}"
            )
        return total.num

    def spherical_collapse(self):
        """Sum coefficients over the permutation part, keyed by translation.

        On symmetric inputs the operator acts through this collapsed family:
        op(f) = sum_lam collapse[lam] * shift_lam(f) whenever f is symmetric.
        """
        out = {}
        for (w, lam), coeff in self.terms.items():
            if lam in out:
                out[lam] = out[lam] + coeff
            else:
                out[lam] = coeff
        return {lam: coeff for lam, coeff in out.items() if not coeff.is_zero()}

    def subst_c(self, c_sign=1, c_to_h=0):
        return DiffReflOp(
            self.ctx,
            {k: v.subst_c(c_sign, c_to_h) for k, v in self.terms.items()},
        )

    def __repr__(self):
        return op_to_text(self)


def op_to_text(op):
    if not op.terms:
        return "0"
    pieces = []
    for key in sorted(op.terms, key=lambda k: (k[1], k[0])):
        w, lam = key
        coeff = op.terms[key]
        if coeff.is_polynomial():
            coeff_text = f"({poly_to_text(coeff.num)})"
        else:
            den_text = " * ".join(f"({form.text()})" for form in coeff.den)
            coeff_text = f"(({poly_to_text(coeff.num)}) / {den_text})"
        lam_text = "[" + ",".join(str(v) for v in lam) + "]"
        w_text = "[" + ",".join(str(v + 1) for v in w) + "]"
        pieces.append(f"{coeff_text} * u^{lam_text} * {w_text}")
    return " + ".join(pieces)


# -- generators ------------------------------------------------------------


def _c_param(ctx, c_shift):
    out = LaurentPoly.c(ctx)
    if c_shift:
        out = out + LaurentPoly.h(ctx) * c_shift
    return out


def op_scalar(ctx, value):
    if isinstance(value, (int, Fraction)):
        value = LaurentPoly.const(ctx, value)
    key = (identity_perm(ctx.n), (0,) * ctx.n)
    return DiffReflOp(ctx, {key: RationalFunction.from_poly(value)})


def op_perm(ctx, w):
    return DiffReflOp(ctx, {(tuple(w), (0,) * ctx.n): RationalFunction.one(ctx)})


def op_u(ctx, lam):
    return DiffReflOp(
        ctx, {(identity_perm(ctx.n), tuple(lam)): RationalFunction.one(ctx)}
    )


def op_y(ctx, i):
    key = (identity_perm(ctx.n), (0,) * ctx.n)
    return DiffReflOp(ctx, {key: RationalFunction.from_poly(LaurentPoly.y(ctx, i))})


def op_sigma(ctx, i, c_shift=0, corrupt=False):
    """Reflection generator sigma_i for adjacent positions (0-indexed i).

    With c_shift = m the parameter c is replaced by c + m*h throughout.
    corrupt flips one coefficient sign, giving a deliberately wrong operator
    for negative controls.
    """
    n = ctx.n
    if not 0 <= i < n - 1:
        raise ValueError("reflection index out of range")
    cc = _c_param(ctx, c_shift)
    form = LinearForm(i, i + 1)
    g = form.to_poly(ctx)
    zero = (0,) * n
    swap_coeff = RationalFunction(g + cc, [form])
    id_coeff = RationalFunction(cc if corrupt else -cc, [form])
    return DiffReflOp(
        ctx,
        {
            (transposition(n, i), zero): swap_coeff,
            (identity_perm(n), zero): id_coeff,
        },
    )


def op_pi(ctx):
    n = ctx.n
    w_c = tuple((j + 1) % n for j in range(n))
    lam = (1,) + (0,) * (n - 1)
    return DiffReflOp(ctx, {(w_c, lam): RationalFunction.one(ctx)})


def op_pi_inv(ctx):
    n = ctx.n
    w_c = tuple((j + 1) % n for j in range(n))
    lam = (1,) + (0,) * (n - 1)
    g = ExtAffineElt(w_c, lam).inverse()
    return DiffReflOp(ctx, {(g.w, g.lam): RationalFunction.one(ctx)})


def op_sigma_w(ctx, w, c_shift=0):
    """sigma_w along a reduced word; well defined by the braid relations."""
    out = DiffReflOp.identity(ctx)
    for i in reduced_word(w):
        out = out.compose(op_sigma(ctx, i, c_shift))
    return out


def op_symmetrizer(ctx, c_shift=0):
    """Average of sigma_w over the symmetric group (an idempotent)."""
    n = ctx.n
    total = DiffReflOp.zero(ctx)
    for w in all_perms(n):
        total = total + op_sigma_w(ctx, w, c_shift)
    return total * Fraction(1, factorial(n))


def op_plain_symmetrizer(ctx):
    """Average of the plain permutation operators."""
    n = ctx.n
    total = DiffReflOp.zero(ctx)
    for w in all_perms(n):
        total = total + op_perm(ctx, w)
    return total * Fraction(1, factorial(n))


def delta_poly(ctx, c_mult=0):
    """Product of the positive root forms, optionally c-deformed.

    With c_mult=0 this is the Vandermonde prod_{r<s}(y_r - y_s); with
    c_mult=1 it is prod_{r<s}(y_r - y_s + c), which generates the image of
    the sign idempotent inside the polynomial representation.
    """
    out = LaurentPoly.one(ctx)
    shift = LaurentPoly.c(ctx) * c_mult if c_mult else None
    for r in range(ctx.n):
        for s in range(r + 1, ctx.n):
            form = LaurentPoly.y(ctx, r) - LaurentPoly.y(ctx, s)
            if shift is not None:
                form = form + shift
            out = out * form
    return out


# -- generator words --------------------------------------------------------


def word_sigma(i):
    return ("s", i)


def word_to_text(word):
    pieces = []
    for token in word:
        kind = token[0]
        if kind == "s":
            pieces.append(f"s{token[1] + 1}")
        elif kind == "pi":
            pieces.append("pi" if token[1] == 1 else "pi^-1")
        elif kind == "y":
            pieces.append(f"y{token[1] + 1}")
        elif kind == "scalar":
            pieces.append(f"({poly_to_text(token[1])})")
        else:
            raise ValueError(f"unknown token {token!r}")
    return " ".join(pieces)


def parse_word(text, ctx):
    """Parse a space-separated generator word such as "s1 pi y2 (c + h)"."""
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos] in " \t":
            pos += 1
            continue
        if text[pos] == "(":
            depth, start = 1, pos + 1
            pos += 1
            while pos < n and depth:
                if text[pos] == "(":
                    depth += 1
                elif text[pos] == ")":
                    depth -= 1
                pos += 1
            if depth:
                raise ParseError("unbalanced parenthesis", start)
            inner = text[start : pos - 1]
            try:
                scalar = parse_poly(inner, ctx)
            except ParseError as exc:
                raise ParseError(str(exc).split(" (position")[0], start + exc.position)
            tokens.append(("scalar", scalar))
            continue
        end = pos
        while end < n and text[end] not in " \t":
            end += 1
        piece = text[pos:end]
        if piece == "pi":
            tokens.append(("pi", 1))
        elif piece == "pi^-1":
            tokens.append(("pi", -1))
        elif piece and piece[0] in "sy" and piece[1:].isdigit():
            index = int(piece[1:])
            limit = ctx.n - 1 if piece[0] == "s" else ctx.n
            if not 1 <= index <= limit:
                raise ParseError(f"index out of range 1..{limit}", pos + 2)
            tokens.append((piece[0], index - 1))
        else:
            raise ParseError(f"unknown generator {piece!r}", pos + 1)
        pos = end
    return tuple(tokens)


def evaluate_word(ctx, word, c_shift=0):
    """Compose generator operators left to right (rightmost acts first)."""
    out = DiffReflOp.identity(ctx)
    for token in word:
        kind = token[0]
        if kind == "s":
            step = op_sigma(ctx, token[1], c_shift)
        elif kind == "pi":
            step = op_pi(ctx) if token[1] == 1 else op_pi_inv(ctx)
        elif kind == "y":
            step = op_y(ctx, token[1])
        elif kind == "scalar":
            scalar = token[1]
            if c_shift:
                scalar = subst_params(scalar, c_to_h=c_shift)
            step = op_scalar(ctx, scalar)
        else:
            raise ValueError(f"unknown token {token!r}")
        out = out.compose(step)
    return out


def evaluate_word_sum(ctx, word_sum, c_shift=0):
    total = DiffReflOp.zero(ctx)
    for coeff, word in word_sum:
        total = total + evaluate_word(ctx, word, c_shift) * coeff
    return total


def phi_word(word, n):
    """Anti-involution on a word: reverse, s_i -> -s_{n-i}, y_i -> y_{n+1-i}.

    The accumulated sign is returned as a leading scalar token, and h -> -h
    is applied inside scalar coefficients.
    """
    sign = 1
    out = []
    for token in reversed(word):
        kind = token[0]
        if kind == "s":
            sign = -sign
            out.append(("s", n - 2 - token[1]))
        elif kind == "pi":
            out.append(token)
        elif kind == "y":
            out.append(("y", n - 1 - token[1]))
        elif kind == "scalar":
            out.append(("scalar", subst_params(token[1], h_sign=-1)))
        else:
            raise ValueError(f"unknown token {token!r}")
    return sign, tuple(out)


def phi_word_sum(word_sum, n):
    out = []
    for coeff, word in word_sum:
        sign, new_word = phi_word(word, n)
        out.append((coeff * sign, new_word))
    return out


def symmetrizer_word_sum(n):
    scale = Fraction(1, factorial(n))
    return [
        (scale, tuple(("s", i) for i in reduced_word(w))) for w in all_perms(n)
    ]


def x_word(n, i):
    """Word for the commuting difference generator X_i (1-indexed i)."""
    if not 1 <= i <= n:
        raise ValueError("index out of range")
    left = [("s", k - 1) for k in range(i - 1, 0, -1)]
    right = [("s", k - 1) for k in range(n - 1, i - 1, -1)]
    return tuple(left + [("pi", 1)] + right)


def x_omega_word(n, m):
    """Word for X^{omega_m} = X_1 X_2 ... X_m."""
    out = []
    for i in range(1, m + 1):
        out.extend(x_word(n, i))
    return tuple(out)


def e_lambda_word_sum(n, m):
    """Word sum for the idempotent sandwich around X^{omega_m}."""
    sandwich = symmetrizer_word_sum(n)
    middle = x_omega_word(n, m)
    out = []
    for c1, w1 in sandwich:
        for c2, w2 in sandwich:
            out.append((c1 * c2, w1 + middle + w2))
    return out


# -- idempotent sandwich in closed form -------------------------------------


def minuscule_level(lam):
    """Return m if lam is the 0/1 dominant vector with m leading ones."""
    lam = tuple(lam)
    m = sum(lam)
    if any(v not in (0, 1) for v in lam):
        return None
    if lam != (1,) * m + (0,) * (len(lam) - m):
        return None
    return m


def e_lambda(ctx, lam, mode="closed", c_shift=0):
    """Spherical shift element for a minuscule dominant coweight.

    generators mode composes symmetrizer o X^{omega_m} o symmetrizer from the
    generator words.  closed mode builds the equivalent localized expression

        plain-symmetrizer o (h_lam .) o u^lam o symmetrizer

    with h_lam the product of (y_alpha - c)/y_alpha over the positive roots
    pairing to 1 with lam.
    """
    n = ctx.n
    lam = tuple(lam)
    m = minuscule_level(lam)
    if m is None:
        raise ValueError("coweight must be dominant with entries in {0, 1}")
    if mode == "generators":
        e_op = op_symmetrizer(ctx, c_shift)
        out = e_op
        if m:
            out = out.compose(evaluate_word(ctx, x_omega_word(n, m), c_shift))
            out = out.compose(e_op)
        return out
    if mode != "closed":
        raise ValueError("mode must be 'closed' or 'generators'")
    cc = _c_param(ctx, c_shift)
    weight_factor = RationalFunction.one(ctx)
    for r in range(n):
        for s in range(r + 1, n):
            if lam[r] - lam[s] == 1:
                form = LinearForm(r, s)
                weight_factor = weight_factor * RationalFunction(
                    form.to_poly(ctx) - cc, [form]
                )
    out = op_u(ctx, lam).compose(op_symmetrizer(ctx, c_shift))
    out = DiffReflOp(ctx, {k: weight_factor * v for k, v in out.terms.items()})
    return op_plain_symmetrizer(ctx).compose(out)


# -- relation checks ---------------------------------------------------------


def verify_relations(n, corrupt=False):
    """Check the defining relations; returns (label, ok, witness) triples."""
    ctx = VarContext(n)
    sigmas = [op_sigma(ctx, i, corrupt=corrupt) for i in range(n - 1)]
    pi = op_pi(ctx)
    ys = [op_y(ctx, k) for k in range(n)]
    ident = DiffReflOp.identity(ctx)
    c_op = op_scalar(ctx, LaurentPoly.c(ctx))
    results = []

    def record(label, lhs, rhs):
        diff = lhs - rhs
        ok = diff.is_zero()
        results.append((label, ok, None if ok else op_to_text(diff)))

    for i in range(n - 1):
        record(f"s{i+1}^2 = id", sigmas[i].compose(sigmas[i]), ident)
    for i in range(n - 2):
        record(
            f"s{i+1} s{i+2} s{i+1} = s{i+2} s{i+1} s{i+2}",
            sigmas[i].compose(sigmas[i + 1]).compose(sigmas[i]),
            sigmas[i + 1].compose(sigmas[i]).compose(sigmas[i + 1]),
        )
    for i in range(n - 1):
        for j in range(i + 2, n - 1):
            record(
                f"s{i+1} s{j+1} = s{j+1} s{i+1}",
                sigmas[i].compose(sigmas[j]),
                sigmas[j].compose(sigmas[i]),
            )
    for i in range(n - 1):
        s_i = transposition(n, i)
        for k in range(n):
            delta = (1 if k == i + 1 else 0) - (1 if k == i else 0)
            lhs = sigmas[i].compose(ys[k]) - ys[s_i[k]].compose(sigmas[i])
            rhs = c_op * Fraction(delta) if delta else DiffReflOp.zero(ctx)
            record(f"s{i+1} y{k+1} cross relation", lhs, rhs)
    h_poly = LaurentPoly.h(ctx)
    for k in range(n):
        if k < n - 1:
            record(
                f"pi y{k+1} = y{k+2} pi",
                pi.compose(ys[k]),
                ys[k + 1].compose(pi),
            )
        else:
            shifted = op_scalar(ctx, LaurentPoly.y(ctx, 0) + h_poly)
            record(
                f"pi y{n} = (y1 + h) pi",
                pi.compose(ys[k]),
                shifted.compose(pi),
            )
    power = ident
    for _ in range(n):
        power = power.compose(pi)
    record("pi^n = u^[1,..,1]", power, op_u(ctx, (1,) * n))
    return results


def phi_image_op(ctx, m):
    """Evaluate phi of the idempotent sandwich without expanding all words.

    phi reverses words, and the sandwich is a palindrome of sums, so the
    image factors as phi(symmetrizer) o phi(middle) o phi(symmetrizer).
    """
    n = ctx.n
    phi_e = evaluate_word_sum(ctx, phi_word_sum(symmetrizer_word_sum(n), n))
    out = phi_e
    if m:
        sign, middle = phi_word(x_omega_word(n, m), n)
        out = out.compose(evaluate_word(ctx, middle)).compose(phi_e) * sign
    return out


def phi_shift_check(n, m):
    """Check the parameter-shift identity for the m-th fundamental coweight.

    The sign idempotent sends polynomials onto multiples of the deformed
    product D_c = prod_{r<s}(y_r - y_s + c), so D_c (not the plain
    Vandermonde) is how the intertwiner between the symmetric subspaces at
    parameters c and c - h acts in the polynomial representation.  The
    identity checked here, as operators on symmetric polynomials, is

        phi(E_{m,c}) o D_c = (-1)^(m(n-m)) . D_c o E_{m, c-h},

    where the sign comes from phi(X_i) = (-1)^(n-1) X_{n+1-i}.  Returns
    (ok, witness_text).
    """
    ctx = VarContext(n)
    lam = (1,) * m + (0,) * (n - m)
    dc_op = op_scalar(ctx, delta_poly(ctx, c_mult=1))
    sign = -1 if (m * (n - m)) % 2 else 1
    sym_inputs = op_plain_symmetrizer(ctx)
    lhs = phi_image_op(ctx, m).compose(dc_op)
    rhs = dc_op.compose(e_lambda(ctx, lam, "generators", c_shift=-1)) * sign
    diff = (lhs - rhs).compose(sym_inputs)
    ok = diff.is_zero()
    return ok, None if ok else op_to_text(diff)
