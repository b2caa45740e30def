"""Symbolic powers of the diagonal ideal and their graded slices.

The ring is the Laurent/polynomial ring in x_1..x_n (invertible) and
y_1..y_n.  For a root datum the ideal I^(d) is the d-th symbolic power of
the ideal of the union of the codimension-two loci {alpha^vee = 1, y_alpha = 0};
in type A these are the pairwise diagonals {x_r = x_s, y_r = y_s}.
Membership is decided exactly by Taylor expansion along each diagonal after
clearing x-denominators by a unit, which characterises the power ideal
monomially.

Antisymmetric determinants Delta_S indexed by finite plane subsets S give
explicit elements; ``delta_S_schur`` rebuilds them from Schur polynomials of
the grouped rows (bialternant form) and reports the proportionality scalar.

``graded_dimension`` computes exact bases of windowed slices of e_d I^(d)
(sign-power isotypic part intersected with the symbolic power) by solving
the linear conditions over the rationals, and ``verify_spanning`` compares
the slice with the span of the commutative-limit classes from
:mod:`diffalg.zalg`.
"""

import itertools
from fractions import Fraction

from .poly import (
    LaurentPoly,
    LinearForm,
    VarContext,
    act_perm,
    exact_divide,
    perm_sign,
    poly_to_text,
    taylor_pair,
)
from .weyl import RootData, all_perms
from .zalg import class_commutative


class UnsupportedRootData(ValueError):
    """Raised when an operation needs root data it does not support."""


class WindowTooLarge(ValueError):
    """Raised when a window exceeds the configured monomial cap."""


# -- exact linear algebra ---------------------------------------------------


def rref(rows):
    """Row-reduce a list of Fraction lists in place; returns (rows, pivots).

    The input rows are copied; the output rows are the nonzero rows of the
    reduced row echelon form and pivots maps pivot column -> row index.
    """
    rows = [list(row) for row in rows if any(row)]
    pivots = {}
    row_at = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = None
        for r in range(row_at, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[row_at], rows[pivot] = rows[pivot], rows[row_at]
        lead = rows[row_at][col]
        rows[row_at] = [v / lead for v in rows[row_at]]
        for r in range(len(rows)):
            if r != row_at and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[row_at])]
        pivots[col] = row_at
        row_at += 1
        if row_at == len(rows):
            break
    return [row for row in rows[:row_at]], pivots


def nullspace(rows, width):
    """Basis of the kernel of the given constraint rows (Fraction lists)."""
    reduced, pivots = rref(rows)
    free = [col for col in range(width) if col not in pivots]
    basis = []
    for col in free:
        vec = [Fraction(0)] * width
        vec[col] = Fraction(1)
        for pcol, prow in pivots.items():
            vec[pcol] = -reduced[prow][col]
        basis.append(vec)
    return basis


def span_dimension(vectors):
    """Rank of a list of Fraction vectors."""
    reduced, _ = rref(vectors)
    return len(reduced)


# -- plane subsets and determinants ----------------------------------------


class PlaneSubset:
    """A list of distinct plane points (a, b): y-exponent a >= 0, x-exponent b.

    The order of the points is kept as given, because the sign of the
    associated determinant depends on it; ``sorted_points`` is the canonical
    descending presentation.
    """

    __slots__ = ("points",)

    def __init__(self, points):
        pts = tuple((int(a), int(b)) for a, b in points)
        if len(set(pts)) != len(pts):
            raise ValueError("plane points must be pairwise distinct")
        if any(a < 0 for a, _ in pts):
            raise ValueError("y-exponents must be nonnegative")
        object.__setattr__(self, "points", pts)

    def __setattr__(self, name, value):
        raise AttributeError("PlaneSubset is immutable")

    @property
    def n(self):
        return len(self.points)

    def sorted_points(self):
        return tuple(sorted(self.points, reverse=True))

    def __eq__(self, other):
        if not isinstance(other, PlaneSubset):
            return NotImplemented
        return self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"PlaneSubset({list(self.points)})"


def delta_S_direct(S):
    """The antisymmetric determinant (1/n!) det(y_i^{a_j} x_i^{b_j})."""
    n = S.n
    ctx = VarContext(n)
    out = LaurentPoly.zero(ctx)
    for w in itertools.permutations(range(n)):
        xe = [0] * n
        ye = [0] * n
        for i in range(n):
            a, b = S.points[w[i]]
            ye[i] = a
            xe[i] = b
        term = LaurentPoly.monomial(
            ctx, xe=tuple(xe), ye=tuple(ye), coeff=Fraction(perm_sign(w))
        )
        out = out + term
    return out * Fraction(1, _factorial(n))


def _factorial(n):
    out = 1
    for t in range(2, n + 1):
        out *= t
    return out


def schur_poly(ctx, var_indices, mu):
    """Schur polynomial s_mu in the listed y-variables, by the bialternant."""
    m = len(var_indices)
    exps = [mu[j] + (m - 1 - j) for j in range(m)]
    num = LaurentPoly.zero(ctx)
    for w in itertools.permutations(range(m)):
        ye = [0] * ctx.n
        for pos in range(m):
            ye[var_indices[pos]] = exps[w[pos]]
        num = num + LaurentPoly.monomial(
            ctx, ye=tuple(ye), coeff=Fraction(perm_sign(w))
        )
    for r, s in itertools.combinations(var_indices, 2):
        quotient = exact_divide(num, LinearForm(r, s, 0, 0))
        if quotient is None:
            raise ArithmeticError("bialternant numerator not divisible")
        num = quotient
    return num


def delta_S_schur(S):
    """Rebuild Delta_S from Schur polynomials of the grouped rows.

    Groups the points by x-exponent; each group of size m with y-exponents
    a_1 > ... > a_m contributes the Schur polynomial of the partition
    (a_1-(m-1), ..., a_m) in its own block of variables, an in-group
    Vandermonde, and x-exponent b on the block.  The antisymmetrized product
    is proportional to ``delta_S_direct``; returns (polynomial, scalar) with
    polynomial = scalar * delta_S_direct(S).  The scalar depends on the group
    sizes and the chosen order of S.
    """
    n = S.n
    ctx = VarContext(n)
    groups = {}
    for a, b in S.points:
        groups.setdefault(b, []).append(a)
    core = LaurentPoly.one(ctx)
    xe = [0] * n
    next_var = 0
    for b in sorted(groups):
        avals = sorted(groups[b], reverse=True)
        m = len(avals)
        block = list(range(next_var, next_var + m))
        mu = tuple(avals[t] - (m - 1 - t) for t in range(m))
        core = core * schur_poly(ctx, block, mu)
        for r, s in itertools.combinations(block, 2):
            core = core * (LaurentPoly.y(ctx, r) - LaurentPoly.y(ctx, s))
        for t in block:
            xe[t] = b
        next_var += m
    core = core * LaurentPoly.monomial(ctx, xe=tuple(xe))
    alt = LaurentPoly.zero(ctx)
    for w in all_perms(n):
        piece = act_perm(w, core)
        if perm_sign(w) < 0:
            piece = -piece
        alt = alt + piece
    alt = alt * Fraction(1, _factorial(n))
    direct = delta_S_direct(S)
    if not alt or not direct:
        raise ArithmeticError("determinant vanished; S is not a valid subset")
    key = next(iter(direct.terms))
    if key not in alt.terms:
        raise ArithmeticError("Schur route is not proportional to the determinant")
    scalar = alt.terms[key] / direct.terms[key]
    if alt != direct * scalar:
        raise ArithmeticError("Schur route is not proportional to the determinant")
    return alt, scalar


# -- symbolic powers ---------------------------------------------------------


class IdealSpec:
    """The d-th symbolic power of the diagonal ideal for a root datum."""

    __slots__ = ("roots", "d")

    def __init__(self, roots, d):
        if d < 0:
            raise ValueError("the symbolic power must be nonnegative")
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "d", int(d))

    def __setattr__(self, name, value):
        raise AttributeError("IdealSpec is immutable")

    def __repr__(self):
        return f"IdealSpec({self.roots.kind}{self.roots.rank}, d={self.d})"


def membership(f, spec):
    """Exact membership test for I^(d); returns (bool, witness).

    For every pairwise diagonal {x_r = x_s, y_r = y_s} the Taylor
    coefficients of f below total order d must vanish; the witness of a
    failure is the first nonvanishing coefficient.  Only type A root data
    (any rank, including rank 1) are supported.
    """
    if spec.roots.kind != "A":
        raise UnsupportedRootData(
            f"membership supports type A root data, not {spec.roots.kind}"
        )
    if spec.d == 0:
        return True, None
    n = spec.roots.rank
    if f.ctx.n != n:
        raise ValueError("polynomial and root datum rank disagree")
    for r in range(n):
        for s in range(r + 1, n):
            coeffs = taylor_pair(f, (r, s), spec.d)
            for order in sorted(coeffs):
                if coeffs[order]:
                    witness = {
                        "pair": (r + 1, s + 1),
                        "order": order,
                        "coefficient": poly_to_text(coeffs[order]),
                    }
                    return False, witness
    return True, None


# -- windows and graded slices ----------------------------------------------


class Window:
    """An x-exponent box [x_min, x_max]^n with total y-degree at most y_max."""

    __slots__ = ("x_min", "x_max", "y_max")

    def __init__(self, x_min, x_max, y_max):
        if x_max < x_min:
            raise ValueError("empty x-exponent box")
        if y_max < 0:
            raise ValueError("negative y-degree bound")
        object.__setattr__(self, "x_min", int(x_min))
        object.__setattr__(self, "x_max", int(x_max))
        object.__setattr__(self, "y_max", int(y_max))

    def __setattr__(self, name, value):
        raise AttributeError("Window is immutable")

    def monomial_keys(self, n):
        """All (x-exponents, y-exponents) keys in the window, sorted."""
        xs = itertools.product(range(self.x_min, self.x_max + 1), repeat=n)
        ys = [
            ye
            for ye in itertools.product(range(self.y_max + 1), repeat=n)
            if sum(ye) <= self.y_max
        ]
        return sorted((xe, ye) for xe in xs for ye in ys)

    def contains(self, f):
        for xe, ye, ce, he in f.terms:
            if ce or he:
                return False
            if any(e < self.x_min or e > self.x_max for e in xe):
                return False
            if sum(ye) > self.y_max:
                return False
        return True

    def as_dict(self):
        return {"x_min": self.x_min, "x_max": self.x_max, "y_max": self.y_max}

    def __repr__(self):
        return f"Window(x in [{self.x_min},{self.x_max}], y-deg <= {self.y_max})"


class GradedSlice:
    """An exact basis of a windowed slice, with its monomial coordinates."""

    __slots__ = ("window", "columns", "basis", "dimension")

    def __init__(self, window, columns, basis):
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "columns", tuple(columns))
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "dimension", len(basis))

    def __setattr__(self, name, value):
        raise AttributeError("GradedSlice is immutable")

    def export(self):
        """Matrix layout: row per basis element, column per window monomial."""
        ctx = self.basis[0].ctx if self.basis else None
        rows = []
        for f in self.basis:
            row = []
            for xe, ye in self.columns:
                row.append(str(f.terms.get((xe, ye, 0, 0), Fraction(0))))
            rows.append(row)
        labels = []
        for xe, ye in self.columns:
            if ctx is None:
                ctx = VarContext(len(xe))
            labels.append(poly_to_text(LaurentPoly.monomial(ctx, xe=xe, ye=ye)))
        return {
            "window": self.window.as_dict(),
            "columns": labels,
            "rows": rows,
            "dimension": self.dimension,
        }


def graded_dimension(spec, d_isotypic, window, cap=6000):
    """Exact basis of the windowed slice of e_d I^(d).

    The slice is the set of polynomials supported on the window that are
    isotypic for the sign^d character (when ``d_isotypic`` is not None) and
    lie in the symbolic power I^(spec.d).  Both conditions are linear; the
    kernel is computed exactly over the rationals.  Raises WindowTooLarge
    when the window has more than ``cap`` monomials.
    """
    roots = spec.roots
    n = roots.rank
    ctx = VarContext(n)
    keys = window.monomial_keys(n)
    if len(keys) > cap:
        raise WindowTooLarge(f"window has {len(keys)} monomials (cap {cap})")
    index = {key: t for t, key in enumerate(keys)}
    width = len(keys)
    constraints = []

    if d_isotypic is not None:
        images = []
        for xe, ye in keys:
            mono = LaurentPoly.monomial(ctx, xe=xe, ye=ye)
            images.append(roots.project(mono, d_isotypic))
        targets = {}
        for t, image in enumerate(images):
            for (xe, ye, ce, he), value in image.terms.items():
                targets.setdefault((xe, ye), {})[t] = value
        seen = set(targets)
        seen.update(index)
        for tkey in sorted(seen):
            row = [Fraction(0)] * width
            for t, value in targets.get(tkey, {}).items():
                row[t] += value
            if tkey in index:
                row[index[tkey]] -= 1
            if any(row):
                constraints.append(row)

    if spec.d > 0:
        if roots.kind != "A":
            raise UnsupportedRootData(
                f"symbolic-power slices support type A root data, not {roots.kind}"
            )
        clear = max(0, -window.x_min)
        for r in range(n):
            for s in range(r + 1, n):
                residual_rows = {}
                for t, (xe, ye) in enumerate(keys):
                    shifted = list(xe)
                    shifted[r] += clear
                    mono = LaurentPoly.monomial(ctx, xe=tuple(shifted), ye=ye)
                    coeffs = taylor_pair(mono, (r, s), spec.d)
                    for order, poly in coeffs.items():
                        for key, value in poly.terms.items():
                            row = residual_rows.setdefault(
                                (order, key), [Fraction(0)] * width
                            )
                            row[t] += value
                for rkey in sorted(residual_rows):
                    constraints.append(residual_rows[rkey])

    basis_vectors = nullspace(constraints, width)
    basis = []
    for vec in basis_vectors:
        terms = {}
        for t, value in enumerate(vec):
            if value:
                xe, ye = keys[t]
                terms[(xe, ye, 0, 0)] = value
        basis.append(LaurentPoly(ctx, terms))
    return GradedSlice(window, keys, basis)


def verify_containment(n, d, lam_bound, f_degree, normalization="raw"):
    """Check that every commutative class of level d lies in e_d I^(d).

    Sweeps dominant coweights with entries bounded by ``lam_bound`` in
    absolute value and monomial dressings of total degree at most
    ``f_degree``; every class polynomial must pass membership for I^(d).
    Returns a dict with counts and the list of failures (empty when ok).

    The default checks the raw normalization, which is the form the level-d
    classes take as actual elements of the graded piece.  The reduced
    normalization divides out the discriminant power and stays inside the
    ideal only when every coweight gap |lam_r - lam_s| is at most 1 (or when
    d = 1, where antisymmetry alone forces the vanishing); callers probing
    that regime should restrict the sweep accordingly.
    """
    roots = RootData.type_a(n)
    spec = IdealSpec(roots, d)
    ctx = VarContext(n)
    checked = 0
    failures = []
    dominants = [
        lam
        for lam in itertools.product(range(lam_bound, -lam_bound - 1, -1), repeat=n)
        if all(lam[t] >= lam[t + 1] for t in range(n - 1))
    ]
    dressings = [
        ye
        for ye in itertools.product(range(f_degree + 1), repeat=n)
        if sum(ye) <= f_degree
    ]
    for lam in dominants:
        for ye in dressings:
            f = LaurentPoly.monomial(ctx, ye=ye)
            cls = class_commutative(lam, f, d, roots, normalization=normalization)
            poly = LaurentPoly.zero(ctx)
            for lam2, coeff in cls.items():
                poly = poly + coeff * LaurentPoly.monomial(ctx, xe=lam2)
            if not poly:
                continue
            checked += 1
            ok, witness = membership(poly, spec)
            if not ok:
                failures.append({"lam": lam, "dressing": ye, "witness": witness})
    return {"ok": not failures, "checked": checked, "failures": failures}


def verify_spanning(n, d, window):
    """Compare the class span with the e_d I^(d) slice on a window.

    Generates reduced commutative classes over coweights inside the window
    box, keeps those supported on the window, verifies containment for each,
    and row-reduces their coordinate vectors against the exact slice basis
    from ``graded_dimension``.  Returns a dict with both dimensions.
    """
    roots = RootData.type_a(n)
    spec = IdealSpec(roots, d)
    ctx = VarContext(n)
    slice_ = graded_dimension(spec, d, window)
    keys = list(slice_.columns)
    index = {key: t for t, key in enumerate(keys)}
    dominants = [
        lam
        for lam in itertools.product(
            range(window.x_max, window.x_min - 1, -1), repeat=n
        )
        if all(lam[t] >= lam[t + 1] for t in range(n - 1))
    ]
    dressings = [
        ye
        for ye in itertools.product(range(window.y_max + 1), repeat=n)
        if sum(ye) <= window.y_max
    ]
    vectors = []
    generators = 0
    failures = []
    for lam in dominants:
        for ye in dressings:
            f = LaurentPoly.monomial(ctx, ye=ye)
            cls = class_commutative(lam, f, d, roots)
            poly = LaurentPoly.zero(ctx)
            for lam2, coeff in cls.items():
                poly = poly + coeff * LaurentPoly.monomial(ctx, xe=lam2)
            if not poly or not window.contains(poly):
                continue
            generators += 1
            ok, witness = membership(poly, spec)
            if not ok:
                failures.append({"lam": lam, "dressing": ye, "witness": witness})
                continue
            row = [Fraction(0)] * len(keys)
            for (xe, ye2, ce, he), value in poly.terms.items():
                row[index[(xe, ye2)]] = value
            vectors.append(row)
    span_dim = span_dimension(vectors) if vectors else 0
    return {
        "ok": not failures and span_dim == slice_.dimension,
        "span_dim": span_dim,
        "slice_dim": slice_.dimension,
        "generators": generators,
        "failures": failures,
    }
