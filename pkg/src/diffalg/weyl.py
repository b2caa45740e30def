"""Permutations, extended affine elements, and small integer root data.

Permutations are tuples of images, 0-indexed: w[j] is where position j goes.
The extended affine element (w, lam) acts on polynomials by applying w first
and then the translation lam (see poly.act); the group law matching that
action order is (w1, l1) * (w2, l2) = (w1 w2, l1 + w1 l2).

Root data for ranks beyond type A are given by explicit integer matrices for
the Weyl group together with integer coefficient vectors for the positive
roots, enough for symmetrised class constructions and dimension counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import itertools

from .poly import LaurentPoly, act_perm, perm_sign, shift_y


def identity_perm(n):
    return tuple(range(n))


def perm_mul(w1, w2):
    """Composite doing w2 first: (w1 w2)(j) = w1(w2(j))."""
    return tuple(w1[w2[j]] for j in range(len(w1)))


def perm_inv(w):
    out = [0] * len(w)
    for j, image in enumerate(w):
        out[image] = j
    return tuple(out)


def transposition(n, i):
    """Adjacent swap s_i exchanging positions i and i+1 (0-indexed)."""
    out = list(range(n))
    out[i], out[i + 1] = out[i + 1], out[i]
    return tuple(out)


def all_perms(n):
    return list(itertools.permutations(range(n)))


def perm_on_vector(w, lam):
    """Transport a vector: (w lam) has entry lam_i at position w(i)."""
    out = [0] * len(lam)
    for i, value in enumerate(lam):
        out[w[i]] = value
    return tuple(out)


def reduced_word(w):
    """A reduced word in adjacent transpositions, as a list of indices."""
    w = list(w)
    n = len(w)
    word = []
    # bubble the permutation back to the identity, recording swaps
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i)
                changed = True
    word.reverse()
    return word


@dataclass(frozen=True)
class ExtAffineElt:
    """Pair (w, lam) of a permutation and an integer translation vector."""

    w: tuple
    lam: tuple

    @staticmethod
    def identity(n):
        return ExtAffineElt(identity_perm(n), (0,) * n)

    def __mul__(self, other):
        return ExtAffineElt(
            perm_mul(self.w, other.w),
            tuple(a + b for a, b in zip(self.lam, perm_on_vector(self.w, other.lam))),
        )

    def inverse(self):
        winv = perm_inv(self.w)
        return ExtAffineElt(
            winv, tuple(-v for v in perm_on_vector(winv, self.lam))
        )

    def act(self, f):
        return shift_y(act_perm(self.w, f), self.lam)

    def pair(self):
        return (self.w, self.lam)


# -- integer root data ---------------------------------------------------


def _mat_vec(m, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def _mat_mul(a, b):
    size = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size))
        for i in range(size)
    )


def _mat_det(m):
    if len(m) == 1:
        return m[0][0]
    if len(m) == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j, top in enumerate(m[0]):
        if not top:
            continue
        minor = tuple(row[:j] + row[j + 1 :] for row in m[1:])
        total += (-1) ** j * top * _mat_det(minor)
    return total


def _close_group(generators, size_limit=64):
    identity = tuple(
        tuple(1 if i == j else 0 for j in range(len(generators[0])))
        for i in range(len(generators[0]))
    )
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for m in frontier:
            for g in generators:
                prod = _mat_mul(g, m)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
        if len(seen) > size_limit:
            raise RuntimeError("group closure exceeded expected size")
    return sorted(seen)


@dataclass(frozen=True)
class RootData:
    """Integer realisation of a finite reflection group on rank variables.

    kind is "A", "B2", or "G2".  elements holds every group element as an
    integer matrix; positive_roots holds coefficient vectors of the positive
    root linear forms in the y variables.
    """

    kind: str
    rank: int
    elements: tuple
    positive_roots: tuple

    @staticmethod
    def from_config(data):
        """Build from a mapping with key ``kind`` (A, B2, G2) and, for kind A,
        ``rank``."""
        kind = str(data["kind"]).upper()
        if kind == "A":
            return RootData.type_a(int(data["rank"]))
        if kind == "B2":
            return RootData.b2()
        if kind == "G2":
            return RootData.g2()
        raise ValueError(f"unknown root datum kind: {data['kind']!r}")

    @staticmethod
    def type_a(n):
        mats = []
        for w in itertools.permutations(range(n)):
            mats.append(
                tuple(
                    tuple(1 if w[j] == i else 0 for j in range(n)) for i in range(n)
                )
            )
        roots = []
        for r in range(n):
            for s in range(r + 1, n):
                vec = [0] * n
                vec[r], vec[s] = 1, -1
                roots.append(tuple(vec))
        return RootData("A", n, tuple(sorted(mats)), tuple(roots))

    @staticmethod
    def b2():
        swap = ((0, 1), (1, 0))
        flip = ((1, 0), (0, -1))
        roots = ((1, -1), (0, 1), (1, 0), (1, 1))
        return RootData("B2", 2, tuple(_close_group([swap, flip], 8)), roots)

    @staticmethod
    def g2():
        # simple reflections on the root lattice basis (short a1, long a2)
        s1 = ((-1, 3), (0, 1))
        s2 = ((1, 0), (1, -1))
        roots = ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))
        return RootData("G2", 2, tuple(_close_group([s1, s2], 12)), roots)

    def order(self):
        return len(self.elements)

    def det(self, m):
        return _mat_det(m)

    def act_matrix(self, m, f):
        """Group element as substitution: y_j -> sum_i m[i][j] y_i, x^e -> x^(m e)."""
        ctx = f.ctx
        columns = [
            sum(
                (LaurentPoly.y(ctx, i) * m[i][j] for i in range(self.rank)),
                LaurentPoly.zero(ctx),
            )
            for j in range(self.rank)
        ]
        out = LaurentPoly.zero(ctx)
        for (xe, ye, ce, he), coeff in f.terms.items():
            piece = LaurentPoly.monomial(
                ctx, xe=_mat_vec(m, xe), ce=ce, he=he, coeff=coeff
            )
            for j, e in enumerate(ye):
                if e:
                    piece = piece * columns[j] ** e
            out = out + piece
        return out

    def orbit(self, lam):
        return sorted({_mat_vec(m, lam) for m in self.elements})

    def stabilizer_size(self, lam):
        return sum(1 for m in self.elements if _mat_vec(m, lam) == tuple(lam))

    def root_form(self, ctx, root):
        return sum(
            (LaurentPoly.y(ctx, i) * coeff for i, coeff in enumerate(root) if coeff),
            LaurentPoly.zero(ctx),
        )

    def root_value(self, root, lam):
        return sum(a * b for a, b in zip(root, lam))

    def vandermonde(self, ctx):
        out = LaurentPoly.one(ctx)
        for root in self.positive_roots:
            out = out * self.root_form(ctx, root)
        return out

    def project(self, f, d):
        """Average of sign^d-twisted translates over the whole group."""
        total = LaurentPoly.zero(f.ctx)
        for m in self.elements:
            g = self.act_matrix(m, f)
            if d % 2 and _mat_det(m) < 0:
                g = -g
            total = total + g
        return total * Fraction(1, len(self.elements))

    def pairs(self):
        """Index pairs (r, s) of type A roots; only valid for kind A."""
        if self.kind != "A":
            raise ValueError("index pairs only exist for type A root data")
        return [
            (r, s) for r in range(self.rank) for s in range(r + 1, self.rank)
        ]
