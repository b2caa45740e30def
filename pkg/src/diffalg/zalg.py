"""Difference-operator algebras attached to torus characters and coweights.

Two constructions live here, plus the bridge between them.

The abelian side starts from a rank-r torus with a finite list of integer
characters (``AbelianMatter``).  The algebra is spanned by dressed hopping
generators ``f(xi) . i_r_j^lam``: a Laurent-polynomial dressing in the torus
coordinates times a generator carrying an integer coweight ``lam`` and a pair
of framing tags ``(i, j)``.  Products concatenate tags, add coweights, shift
the dressing, and pick up an explicit polynomial factor for every character;
``abelian_embed`` realises everything as difference operators in the torus
coordinates, where composition is the ordinary (twisted) convolution.

The nonabelian side works with Weyl-group-equivariant families of rational
functions indexed by a coweight orbit (``SphericalClass``).  Those come from
two sources: a localized product formula (``class_localized``), exact exactly
when the coweight is minuscule, and a commutative-limit construction
(``class_commutative``) available for any root datum, where the parameters
are switched off and classes multiply by plain convolution.

``match_conventions`` searches for the parameter dictionary (sign of c,
shift of c by multiples of h, orientation sign per root pair) that makes the
localized family agree with the spherical difference operators built in
:mod:`diffalg.daha`, and raises ``NoDictionary`` when no unique dictionary
exists.  ``split_coweight`` and ``verify_factorization`` implement the
leading-coefficient factorization of a commutative-limit class into the
classes of the balanced pieces of its coweight.
"""

from fractions import Fraction

from .poly import (
    LaurentPoly,
    LinearForm,
    RationalFunction,
    VarContext,
    act_perm,
    poly_to_text,
    shift_y,
)
from .weyl import RootData, all_perms, perm_on_vector
from . import daha


class TagMismatch(ValueError):
    """Raised when combining elements whose framing tags do not line up."""


class NoDictionary(RuntimeError):
    """Raised when no unique convention dictionary matches two constructions."""


# -- abelian side ----------------------------------------------------------


class AbelianMatter:
    """A torus of given rank with a list of integer characters.

    The torus coordinates are the y-variables of the ambient context; the
    characters are integer vectors pairing with coweights.
    """

    def __init__(self, rank, characters):
        self.rank = rank
        self.characters = tuple(tuple(ch) for ch in characters)
        for ch in self.characters:
            if len(ch) != rank:
                raise ValueError("character length must match the rank")
        self.ctx = VarContext(rank)

    @classmethod
    def from_config(cls, data):
        """Build from a mapping with keys ``rank`` and ``characters``."""
        return cls(int(data["rank"]), data["characters"])

    def __eq__(self, other):
        if not isinstance(other, AbelianMatter):
            return NotImplemented
        return self.rank == other.rank and self.characters == other.characters

    def __hash__(self):
        return hash((self.rank, self.characters))

    def weight(self, ell, lam):
        """Integer pairing of the ell-th character with a coweight."""
        ch = self.characters[ell]
        return sum(ch[t] * lam[t] for t in range(self.rank))

    def xi(self, ell):
        """The ell-th character as a linear polynomial in the coordinates."""
        out = LaurentPoly.zero(self.ctx)
        for t, coeff in enumerate(self.characters[ell]):
            if coeff:
                out = out + LaurentPoly.y(self.ctx, t) * coeff
        return out

    def interval_factor(self, ell, lo, hi):
        """prod_{t = lo+1 .. hi} (xi_ell + c + t h), the empty product if hi <= lo."""
        out = LaurentPoly.one(self.ctx)
        base = self.xi(ell) + LaurentPoly.c(self.ctx)
        step = LaurentPoly.h(self.ctx)
        for t in range(lo + 1, hi + 1):
            out = out * (base + step * t)
        return out


class AbelianZElt:
    """Finite sum of dressed generators f(y) . i_r_j^lam with fixed tags."""

    __slots__ = ("matter", "i", "j", "terms")

    def __init__(self, matter, i, j, terms):
        clean = {}
        for lam, f in terms.items():
            lam = tuple(lam)
            if len(lam) != matter.rank:
                raise ValueError("coweight length must match the rank")
            if f:
                clean[lam] = f
        object.__setattr__(self, "matter", matter)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AbelianZElt is immutable")

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, AbelianZElt):
            return NotImplemented
        if self.matter != other.matter:
            raise TagMismatch("cannot add elements over different matter data")
        if (self.i, self.j) != (other.i, other.j):
            raise TagMismatch(
                f"cannot add tags ({self.i},{self.j}) and ({other.i},{other.j})"
            )
        terms = dict(self.terms)
        for lam, f in other.terms.items():
            terms[lam] = terms[lam] + f if lam in terms else f
        return AbelianZElt(self.matter, self.i, self.j, terms)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        if not isinstance(other, AbelianZElt):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AbelianZElt):
            return abelian_product(self, other)
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return AbelianZElt(
                self.matter,
                self.i,
                self.j,
                {lam: f * other for lam, f in self.terms.items()},
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AbelianZElt):
            return NotImplemented
        return (
            self.matter == other.matter
            and (self.i, self.j) == (other.i, other.j)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.matter, self.i, self.j, frozenset(self.terms.items())))

    def degree(self):
        """Total degree: coordinates count 2, a generator counts its weights.

        The degree of ``f . i_r_j^lam`` is twice the (uniform) total degree of
        f plus ``sum_ell |<xi_ell, lam> + i - j|``.  Raises ValueError when the
        element is not homogeneous.
        """
        degrees = set()
        for lam, f in self.terms.items():
            base = sum(
                abs(self.matter.weight(ell, lam) + self.i - self.j)
                for ell in range(len(self.matter.characters))
            )
            for (_, ye, ce, he) in f.terms:
                degrees.add(base + 2 * (sum(ye) + ce + he))
        if not degrees:
            return 0
        if len(degrees) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(degrees)}")
        return degrees.pop()

    def text(self):
        if not self.terms:
            return "0"
        pieces = []
        for lam in sorted(self.terms):
            lam_text = ",".join(str(v) for v in lam)
            pieces.append(
                f"({poly_to_text(self.terms[lam])}) * r{self.i}_{self.j}^[{lam_text}]"
            )
        return " + ".join(pieces)

    def __repr__(self):
        return self.text()


def r_generator(matter, i, j, lam, coeff=None):
    """The dressed generator coeff(y) . i_r_j^lam (default dressing 1)."""
    if coeff is None:
        coeff = LaurentPoly.one(matter.ctx)
    elif isinstance(coeff, (int, Fraction)):
        coeff = LaurentPoly.const(matter.ctx, coeff)
    return AbelianZElt(matter, i, j, {tuple(lam): coeff})


def abelian_product(a, b):
    """Product of dressed generators with matching inner tags.

    Termwise, with weights L = <xi_ell, lam> and M = <xi_ell, mu>,

        (f . i_r_j^lam) (g . j_r_k^mu)
            = shift_mu(f) g prod_ell A_ell . i_r_k^(lam+mu)

    where, setting p = L + M + i, q = M + j, r = k, the factor A_ell is the
    product of (xi_ell + c + t h) over t in (max(p,r), max(p,q,r)] and over
    t in (min(p,q,r), min(p,r)].  Both intervals are integer ranges, so the
    product always stays polynomial.
    """
    if a.matter != b.matter:
        raise TagMismatch("cannot multiply elements over different matter data")
    if a.j != b.i:
        raise TagMismatch(f"inner tags disagree: {a.j} vs {b.i}")
    matter = a.matter
    count = len(matter.characters)
    out = {}
    for lam, f in a.terms.items():
        for mu, g in b.terms.items():
            coeff = shift_y(f, mu) * g
            for ell in range(count):
                big_l = matter.weight(ell, lam)
                big_m = matter.weight(ell, mu)
                p = big_l + big_m + a.i
                q = big_m + a.j
                r = b.j
                coeff = coeff * matter.interval_factor(ell, max(p, r), max(p, q, r))
                coeff = coeff * matter.interval_factor(ell, min(p, q, r), min(p, r))
            key = tuple(x + y for x, y in zip(lam, mu))
            out[key] = out[key] + coeff if key in out else coeff
    return AbelianZElt(matter, a.i, b.j, out)


def abelian_embed(a):
    """Realise an element as a difference operator in the torus coordinates.

    Returns a map lam -> LaurentPoly; the operator sends a polynomial f(y)
    to sum_lam coeff_lam(y) * f(y + h lam).  Each generator i_r_j^lam embeds
    as prod_ell F_ell u^lam with F_ell = prod_{t = L+i+1 .. j} (xi_ell + c + t h)
    for L = <xi_ell, lam> (empty when j <= L + i).  The embedding reverses
    the order of products: embed(a * b) = embed(b) then embed(a) as
    operators, which is exactly ``embed_compose(embed(a), embed(b))``.
    """
    matter = a.matter
    out = {}
    for lam, f in a.terms.items():
        coeff = f
        for ell in range(len(matter.characters)):
            big_l = matter.weight(ell, lam)
            coeff = coeff * matter.interval_factor(ell, big_l + a.i, a.j)
        if coeff:
            out[lam] = out[lam] + coeff if lam in out else coeff
    return {lam: f for lam, f in out.items() if f}


def embed_compose(first, second):
    """Compose difference operators, the first argument acting first.

    Both arguments are maps lam -> coeff as produced by ``abelian_embed``;
    the result is (second o first), i.e. out[lam + mu] collects
    second_mu(y) * first_lam(y + h mu).
    """
    out = {}
    for lam, f in first.items():
        for mu, g in second.items():
            coeff = g * shift_y(f, mu)
            key = tuple(x + y for x, y in zip(lam, mu))
            out[key] = out[key] + coeff if key in out else coeff
    return {lam: f for lam, f in out.items() if f}


# -- nonabelian side -------------------------------------------------------


class SphericalClass:
    """Equivariant family of rational coefficients indexed by a coweight orbit.

    Such a family acts on symmetric polynomials by
    f |-> sum_lam coeff_lam * f(y + h lam).  The ``exact`` flag records
    whether the construction that produced the family is exact (rather than a
    leading-term approximation).
    """

    __slots__ = ("ctx", "i", "j", "terms", "exact")

    def __init__(self, ctx, i, j, terms, exact=True):
        clean = {}
        for lam, coeff in terms.items():
            lam = tuple(lam)
            if len(lam) != ctx.n:
                raise ValueError("coweight length must match the variable count")
            if not coeff.is_zero():
                clean[lam] = coeff
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, name, value):
        raise AttributeError("SphericalClass is immutable")

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, SphericalClass):
            return NotImplemented
        if (self.i, self.j) != (other.i, other.j):
            raise TagMismatch(
                f"cannot add tags ({self.i},{self.j}) and ({other.i},{other.j})"
            )
        terms = dict(self.terms)
        for lam, coeff in other.terms.items():
            terms[lam] = terms[lam] + coeff if lam in terms else coeff
        return SphericalClass(
            self.ctx, self.i, self.j, terms, self.exact and other.exact
        )

    def __eq__(self, other):
        if not isinstance(other, SphericalClass):
            return NotImplemented
        if (self.i, self.j) != (other.i, other.j):
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[lam] == other.terms[lam] for lam in self.terms)

    def __mul__(self, other):
        if isinstance(other, SphericalClass):
            return spherical_compose(self, other)
        return NotImplemented

    def is_equivariant(self):
        """Check that permuting the coweight permutes the coefficients."""
        n = self.ctx.n
        zero = (0,) * n
        for w in all_perms(n):
            for lam, coeff in self.terms.items():
                image = perm_on_vector(w, lam)
                expect = self.terms.get(image)
                if expect is None or coeff.act((w, zero)) != expect:
                    return False
        return True

    def text(self):
        if not self.terms:
            return "0"
        pieces = []
        for lam in sorted(self.terms):
            coeff = self.terms[lam]
            if coeff.is_polynomial():
                coeff_text = f"({poly_to_text(coeff.num)})"
            else:
                den_text = " * ".join(f"({form.text()})" for form in coeff.den)
                coeff_text = f"(({poly_to_text(coeff.num)}) / {den_text})"
            lam_text = ",".join(str(v) for v in lam)
            pieces.append(f"{coeff_text} * u^[{lam_text}]")
        return " + ".join(pieces)

    def __repr__(self):
        return self.text()


def spherical_compose(a, b):
    """Composition of two families as difference operators (a acting after b)."""
    if a.ctx != b.ctx:
        raise ValueError("mismatched variable contexts")
    if a.j != b.i:
        raise TagMismatch(f"inner tags disagree: {a.j} vs {b.i}")
    terms = {}
    for lam, f in a.terms.items():
        for mu, g in b.terms.items():
            coeff = f * g.shifted(lam)
            key = tuple(x + y for x, y in zip(lam, mu))
            terms[key] = terms[key] + coeff if key in terms else coeff
    return SphericalClass(a.ctx, a.i, b.j, terms, a.exact and b.exact)


def class_localized(lam, f, i, j):
    """Localized product formula for the class of a dressed coweight.

    For each coweight lam' = w(lam) in the orbit the coefficient is

        (w f) * N(lam') / D(lam')

    where N runs over ordered pairs r != s with gap = lam'_r - lam'_s + i < j
    and contributes prod_{l=0}^{j-gap-1} (y_r - y_s + (gap + l) h + c), and D
    runs over ordered pairs with lam'_r - lam'_s = m > 0 and contributes
    prod_{l=0}^{m-1} (y_s - y_r + l h).  The formula is exact precisely when
    lam is minuscule (all coordinate gaps at most 1); otherwise the family
    only records the leading behaviour and the class is flagged inexact.

    The dressing f must be invariant under the stabilizer of lam.
    """
    lam = tuple(lam)
    n = len(lam)
    ctx = VarContext(n)
    if isinstance(f, (int, Fraction)):
        f = LaurentPoly.const(ctx, f)
    if f.ctx != ctx:
        raise ValueError("dressing lives in the wrong variable context")
    for w in all_perms(n):
        if perm_on_vector(w, lam) == lam and act_perm(w, f) != f:
            raise ValueError("dressing is not stabilizer-invariant")
    reps = {}
    for w in all_perms(n):
        image = perm_on_vector(w, lam)
        if image not in reps:
            reps[image] = w
    terms = {}
    for lam2, w in reps.items():
        num = act_perm(w, f)
        den = []
        for r in range(n):
            for s in range(n):
                if r == s:
                    continue
                gap = lam2[r] - lam2[s] + i
                for l in range(j - gap):
                    factor = (
                        LaurentPoly.y(ctx, r)
                        - LaurentPoly.y(ctx, s)
                        + LaurentPoly.h(ctx) * (gap + l)
                        + LaurentPoly.c(ctx)
                    )
                    num = num * factor
                for l in range(lam2[r] - lam2[s]):
                    form, sign = LinearForm.make(s, r, l, 0)
                    den.append(form)
                    if sign < 0:
                        num = -num
        terms[lam2] = RationalFunction(num, den)
    minuscule = max(lam) - min(lam) <= 1
    return SphericalClass(ctx, i, j, terms, exact=minuscule)


def class_commutative(lam, f, d, roots=None, normalization="reduced"):
    """Commutative-limit class of a dressed coweight for any root datum.

    With the parameters switched off, the class of ``f . u^lam`` at level d
    is the signed average

        (1/|W|) sum_w det(w)^d  w(f * prod_alpha alpha^(d - |<alpha, lam>|)) u^(w lam)

    with the product over positive roots whose pairing with lam is smaller
    than d in absolute value.  ``normalization`` chooses between this
    ``"reduced"`` form and the ``"raw"`` form, which is the reduced form
    multiplied coefficientwise by the d-th power of the product of all
    positive root forms.  Returns a map coweight -> LaurentPoly.
    """
    lam = tuple(lam)
    if roots is None:
        roots = RootData.type_a(len(lam))
    if roots.rank != len(lam):
        raise ValueError("coweight length must match the root datum rank")
    if normalization not in ("reduced", "raw"):
        raise ValueError(f"unknown normalization: {normalization!r}")
    ctx = f.ctx if isinstance(f, LaurentPoly) else VarContext(roots.rank)
    if isinstance(f, (int, Fraction)):
        f = LaurentPoly.const(ctx, f)
    base = f
    for root in roots.positive_roots:
        value = abs(roots.root_value(root, lam))
        if value < d:
            base = base * roots.root_form(ctx, root) ** (d - value)
    out = {}
    for m in roots.elements:
        g = roots.act_matrix(m, base)
        if d % 2 and roots.det(m) < 0:
            g = -g
        key = tuple(
            sum(row[t] * lam[t] for t in range(roots.rank)) for row in m
        )
        out[key] = out[key] + g if key in out else g
    scale = Fraction(1, roots.order())
    out = {key: g * scale for key, g in out.items() if g}
    if normalization == "raw":
        bulk = roots.vandermonde(ctx) ** d
        out = {key: g * bulk for key, g in out.items()}
    return out


def commutative_compose(a, b):
    """Product of commutative-limit classes: plain convolution of terms."""
    out = {}
    for lam, f in a.items():
        for mu, g in b.items():
            key = tuple(x + y for x, y in zip(lam, mu))
            coeff = f * g
            out[key] = out[key] + coeff if key in out else coeff
    return {key: f for key, f in out.items() if f}


def commutative_limit(coeff):
    """Specialise a rational coefficient at c = h = 0.

    Every denominator form degenerates to a plain root form y_r - y_s, which
    never vanishes identically, so the limit always exists.
    """
    num = LaurentPoly(
        coeff.num.ctx,
        {
            (xe, ye, 0, 0): value
            for (xe, ye, ce, he), value in coeff.num.terms.items()
            if ce == 0 and he == 0
        },
    )
    den = [LinearForm(form.r, form.s, 0, 0) for form in coeff.den]
    return RationalFunction(num, den)


# -- coweight splitting and factorization ----------------------------------


class CoweightSplit:
    """A coweight written as a sum of d balanced pieces."""

    __slots__ = ("lam", "d", "parts")

    def __init__(self, lam, d, parts):
        object.__setattr__(self, "lam", tuple(lam))
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "parts", tuple(tuple(p) for p in parts))

    def __setattr__(self, name, value):
        raise AttributeError("CoweightSplit is immutable")

    def check(self):
        """Return a list of violated balance conditions (empty when valid)."""
        bad = []
        n = len(self.lam)
        for t in range(n):
            if sum(part[t] for part in self.parts) != self.lam[t]:
                bad.append(f"parts do not sum to the coweight at index {t}")
        for r in range(n):
            for s in range(r + 1, n):
                gap = abs(self.lam[r] - self.lam[s])
                matches = sum(1 for part in self.parts if part[r] == part[s])
                if gap < self.d and self.d - gap != matches:
                    bad.append(
                        f"pair ({r},{s}): expected {self.d - gap} equal parts, got {matches}"
                    )
                if gap > self.d and matches:
                    bad.append(f"pair ({r},{s}): expected no equal parts, got {matches}")
        return bad

    def __repr__(self):
        parts = " + ".join(str(list(p)) for p in self.parts)
        return f"CoweightSplit({list(self.lam)} = {parts})"


def split_coweight(lam, d):
    """Split a coweight into d pieces by balanced division of each entry.

    Entry by entry, lam_t = d q_t + r_t with 0 <= r_t < d, and the k-th piece
    takes q_t + 1 for k < r_t and q_t otherwise.  The result satisfies the
    balance conditions reported by ``CoweightSplit.check``.
    """
    if d <= 0:
        raise ValueError("the number of pieces must be positive")
    lam = tuple(lam)
    pieces = []
    for k in range(d):
        piece = []
        for value in lam:
            q, r = divmod(value, d)
            piece.append(q + 1 if k < r else q)
        pieces.append(tuple(piece))
    split = CoweightSplit(lam, d, pieces)
    bad = split.check()
    if bad:
        raise ValueError("; ".join(bad))
    return split


def _perm_stabilizer_size(lam):
    return sum(1 for w in all_perms(len(lam)) if perm_on_vector(w, lam) == lam)


def verify_factorization(lam, d, n=None):
    """Compare leading coefficients of a raw class against its split product.

    Computes the raw commutative-limit class of lam at level d and the
    convolution of the level-1 raw classes of the split pieces, then compares
    the coefficients at the dominant coweight (the sorted tuple).  The two
    agree up to sign after dividing out the predicted stabilizer scale

        |Stab(lam)| * |W|^(d-1) / prod_k |Stab(mu_k)|.

    Returns a dict with keys ok, sign, scale, coweight and, on failure,
    lhs/rhs witness texts.
    """
    lam = tuple(lam)
    if n is None:
        n = len(lam)
    elif n != len(lam):
        raise ValueError("coweight length does not match n")
    roots = RootData.type_a(n)
    ctx = VarContext(n)
    one = LaurentPoly.one(ctx)
    split = split_coweight(lam, d)
    lhs = class_commutative(lam, one, d, roots, "raw")
    rhs = {(0,) * n: one}
    for part in split.parts:
        rhs = commutative_compose(rhs, class_commutative(part, one, 1, roots, "raw"))
    target = tuple(sorted(lam, reverse=True))
    lead_l = lhs.get(target)
    lead_r = rhs.get(target)
    out = {"coweight": target, "split": split.parts}
    if lead_l is None or lead_r is None:
        out.update(ok=False, sign=None, scale=None)
        return out
    denom = 1
    for part in split.parts:
        denom *= _perm_stabilizer_size(part)
    scale = Fraction(
        _perm_stabilizer_size(lam) * roots.order() ** (d - 1), denom
    )
    want = lead_r * scale
    if not lead_l - want:
        sign = 1
    elif not lead_l + want:
        sign = -1
    else:
        sign = None
    out.update(ok=sign is not None, sign=sign, scale=scale)
    if sign is None:
        out["lhs"] = poly_to_text(lead_l)
        out["rhs"] = poly_to_text(want)
    return out


# -- matching the two constructions ----------------------------------------


def epsilon(x, i, j):
    """Vanishing-order exponent of a matter weight under the tag change i -> j."""
    return max(x + i, j) - (x + i) - max(x, 0)


def epsilon_pair_total(x, i, j):
    """Closed form for epsilon(x, i, j) + epsilon(-x, i, j)."""
    gap = abs(j - i)
    if abs(x) >= gap:
        return j - i
    return (j - i) + gap - abs(x)


def _distinct_pairs(lam):
    n = len(lam)
    return sum(
        1 for r in range(n) for s in range(r + 1, n) if lam[r] != lam[s]
    )


def match_conventions(n, shift_range=2):
    """Find the dictionary aligning the localized and spherical conventions.

    Probes with the first fundamental coweight (1, 0, ..., 0) at tags (0, 0).
    The spherical side is the collapsed symmetric action of the closed-form
    operator from :mod:`diffalg.daha`, scaled by orbit size over stabilizer
    size; the localized side is ``class_localized``.  The search box covers a
    sign for c, a shift of c by m*h with |m| <= shift_range, and a global
    orientation sign applied once per pair of distinct coweight entries.

    Returns {"c_sign": +-1, "h_shift": m, "pair_sign": +-1}.  Raises
    ``NoDictionary`` when no substitution in the box matches, or when two
    substitutions with different effects both match.
    """
    ctx = VarContext(n)
    lam = (1,) + (0,) * (n - 1)
    collapsed = daha.e_lambda(ctx, lam, "closed").spherical_collapse()
    scale = Fraction(
        len(list(all_perms(n))), _perm_stabilizer_size(lam)
    )
    target = {
        mu: RationalFunction(coeff.num * scale, coeff.den)
        for mu, coeff in collapsed.items()
    }
    localized = class_localized(lam, 1, 0, 0)
    if set(target) != set(localized.terms):
        raise NoDictionary(
            f"orbit supports differ: {sorted(target)} vs {sorted(localized.terms)}"
        )
    hits = []
    for pair_sign in (1, -1):
        for c_sign in (1, -1):
            for m in range(-shift_range, shift_range + 1):
                transformed = {}
                for mu, coeff in localized.terms.items():
                    image = coeff.subst_c(c_sign=c_sign, c_to_h=m)
                    if pair_sign < 0 and _distinct_pairs(mu) % 2:
                        image = RationalFunction(-image.num, image.den)
                    transformed[mu] = image
                if all(transformed[mu] == target[mu] for mu in target):
                    hits.append(
                        (
                            {"c_sign": c_sign, "h_shift": m, "pair_sign": pair_sign},
                            tuple(sorted((mu, repr(f)) for mu, f in transformed.items())),
                        )
                    )
    if not hits:
        raise NoDictionary("no substitution in the search box matches")
    effects = {effect for _, effect in hits}
    if len(effects) > 1:
        raise NoDictionary("ambiguous: substitutions with different effects match")
    hits.sort(
        key=lambda item: (
            -item[0]["pair_sign"],
            -item[0]["c_sign"],
            abs(item[0]["h_shift"]),
            item[0]["h_shift"],
        )
    )
    return hits[0][0]
