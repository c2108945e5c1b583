"""Chow rings of orthogonal grassmannians and partial flag varieties of a
split quadric.

For a split quadric X of dimension n, put d = n // 2.  The orthogonal
grassmannians G_0 = X, G_1, ..., G_d and the partial flag varieties F(I),
I a subset of {0..d}, are homogeneous spaces for a group with Weyl group
B_{d+1} (n odd) or D_{d+1} (n even).  Their Chow rings are computed inside
the rational coinvariant algebra:

* the point class of the full flag variety is represented by the product of
  the positive roots divided by |W|;
* the Schubert class attached to w is obtained from it by the divided
  difference of w^{-1} w_0, and classes on F(I) are the Schubert classes of
  minimal coset representatives;
* products are expanded by applying divided-difference words and reading off
  constant terms; every extracted coefficient must be an integer (these
  varieties have torsion-free Chow groups), and a fractional value raises
  immediately since it can only come from a convention bug;
* pushforward along F(I) -> F(J) is the divided difference of
  w_0(P_J) w_0(P_I), which acts on the Schubert basis combinatorially, so no
  polynomial work is needed there.

For n even the two rulings of maximal isotropic subspaces are both modeled:
the `orientation` flag picks which component the model calls G_d, and the
middle class l_d on X is wired to it so that a generic member of G_d meets
the subspace representing l_d in exactly one point (this is the choice that
makes deg(z^d_0) = 1, and it flips between the same and the opposite family
according to n mod 4).

Sign conventions not forced by the mathematics (the Chern roots of the
tautological bundles and c_1(O(1)) on F(i-1,i)) are pinned by the classical
pullback identities relating Z- and W-classes on consecutive grassmannians;
``validate_conventions`` re-derives those identities and is the build gate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from quadchow.polyring import (
    Polynomial,
    constant,
    divided_difference,
    divided_difference_word,
    variable,
)
from quadchow.weyl import SignedPermutation, WeylGroup, make_group

__all__ = [
    "QuadricContext",
    "FlagModel",
    "FlagCycle",
    "UnionCycle",
    "QuadricGeometry",
    "build_flag_model",
    "build_geometry",
]

MIN_N = 3
MAX_N = 8


@dataclass(frozen=True)
class QuadricContext:
    """Global parameters shared by every model attached to one quadric."""

    n: int
    orientation: int | None = None

    def __post_init__(self):
        if self.n % 2 == 0:
            if self.orientation not in (1, -1):
                object.__setattr__(self, "orientation", 1)
        else:
            object.__setattr__(self, "orientation", None)

    @property
    def d(self) -> int:
        return self.n // 2

    @property
    def family(self) -> str:
        return "B" if self.n % 2 else "D"

    @property
    def rank(self) -> int:
        return self.d + 1


class FlagCycle:
    """A cycle on F(I), stored by its integer (or mod-2) Schubert coefficients."""

    __slots__ = ("model", "I", "coeffs", "p")

    def __init__(self, model: "FlagModel", I, coeffs: Mapping, p: int = 0):
        self.model = model
        self.I = frozenset(I)
        self.p = p
        clean = {}
        for w, c in coeffs.items():
            c = c % 2 if p == 2 else int(c)
            if c:
                clean[w] = c
        self.coeffs = clean

    # -- linear structure ----------------------------------------------------

    def _check(self, other: "FlagCycle") -> None:
        if self.model is not other.model or self.I != other.I or self.p != other.p:
            raise ValueError("model/I mismatch")

    def __add__(self, other: "FlagCycle") -> "FlagCycle":
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return FlagCycle(self.model, self.I, out, self.p)

    def __sub__(self, other: "FlagCycle") -> "FlagCycle":
        return self + other.scale(-1)

    def scale(self, c: int) -> "FlagCycle":
        return FlagCycle(
            self.model, self.I, {w: c * v for w, v in self.coeffs.items()}, self.p
        )

    def __mul__(self, other: "FlagCycle") -> "FlagCycle":
        self._check(other)
        out: dict = {}
        for u, cu in self.coeffs.items():
            for v, cv in other.coeffs.items():
                for w, c in self.model.basis_product(self.I, u, v).items():
                    out[w] = out.get(w, 0) + cu * cv * c
        return FlagCycle(self.model, self.I, out, self.p)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FlagCycle)
            and self.model is other.model
            and self.I == other.I
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((id(self.model), self.I, self.p, frozenset(self.coeffs.items())))

    # -- grading ---------------------------------------------------------------

    def codimensions(self) -> set[int]:
        return {self.model.group.length(w) for w in self.coeffs}

    def is_homogeneous(self) -> bool:
        return len(self.codimensions()) <= 1

    def codim(self) -> int:
        degs = self.codimensions()
        if len(degs) > 1:
            raise ValueError("inhomogeneous cycle")
        return degs.pop() if degs else -1

    def mod2(self) -> "FlagCycle":
        return FlagCycle(self.model, self.I, self.coeffs, 2)

    def rep(self) -> Polynomial:
        poly = constant(self.model.group.rank, 0)
        for w, c in self.coeffs.items():
            poly = poly + self.model.schubert_rep(w).scale(c)
        return poly

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for w in sorted(self.coeffs, key=lambda u: (self.model.group.length(u), u.window)):
            parts.append(f"{self.coeffs[w]}*S{w.window}")
        tag = " (mod 2)" if self.p == 2 else ""
        return " + ".join(parts) + tag


class FlagModel:
    """All Chow-ring data for the flag varieties of one split quadric."""

    def __init__(self, n: int, orientation: int | None = None, validate: bool = True):
        if not MIN_N <= n <= MAX_N:
            raise ValueError("n out of range (supported: %d..%d)" % (MIN_N, MAX_N))
        self.ctx = QuadricContext(n, orientation)
        self.n = n
        self.d = self.ctx.d
        self.group: WeylGroup = make_group(self.ctx.family, self.ctx.rank)
        m = self.group.rank
        prod = constant(m, Fraction(1, len(self.group)))
        for root in self.group.positive_roots:
            lin = Polynomial(
                m,
                {
                    tuple(1 if k == j else 0 for k in range(m)): Fraction(c)
                    for j, c in enumerate(root)
                    if c
                },
            )
            prod = prod * lin
        self.point_rep: Polynomial = prod
        self._reps: dict[tuple[int, ...], Polynomial] = {
            self.group.longest_element.window: self.point_rep
        }
        self._pair_products: dict = {}
        self._push_ops: dict = {}
        self._x_middle: tuple[SignedPermutation, SignedPermutation] | None = None
        self._identify_quadric_basis()
        if validate:
            self.validate_conventions()

    # -- index bookkeeping ---------------------------------------------------

    def cut_nodes(self, I: Iterable[int]) -> frozenset[int]:
        """Simple-reflection indices removed from the parabolic for F(I)."""
        m = self.group.rank
        nodes: set[int] = set()
        for i in I:
            if not 0 <= i <= self.d:
                raise ValueError("flag index out of range: %r" % (i,))
            if self.ctx.family == "B" or i <= self.d - 2:
                nodes.add(i + 1)
            elif i == self.d - 1:
                nodes.update((m - 1, m))
            else:  # i == d, type D: one ruling component, picked by orientation
                nodes.add(m if self.ctx.orientation == 1 else m - 1)
        return frozenset(nodes)

    def parabolic(self, I: Iterable[int]) -> frozenset[int]:
        return frozenset(range(1, self.group.rank + 1)) - self.cut_nodes(I)

    def basis(self, I: Iterable[int]) -> tuple[SignedPermutation, ...]:
        return self.group.min_coset_reps(self.parabolic(I))

    def dim_flag(self, I: Iterable[int]) -> int:
        g = self.group
        return g.length(g.longest_element) - g.length(
            g.parabolic_longest(self.parabolic(I))
        )

    def top_element(self, I: Iterable[int]) -> SignedPermutation:
        g = self.group
        return g.longest_element * g.parabolic_longest(self.parabolic(I))

    def zero(self, I: Iterable[int], p: int = 0) -> FlagCycle:
        return FlagCycle(self, I, {}, p)

    def fundamental(self, I: Iterable[int], p: int = 0) -> FlagCycle:
        return FlagCycle(self, I, {self.group.identity: 1}, p)

    def point_class(self, I: Iterable[int], p: int = 0) -> FlagCycle:
        return FlagCycle(self, I, {self.top_element(I): 1}, p)

    # -- Schubert representatives and expansion -------------------------------

    def schubert_rep(self, w: SignedPermutation) -> Polynomial:
        """Polynomial representative of the Schubert class of w (codim = length)."""
        cached = self._reps.get(w.window)
        if cached is not None:
            return cached
        g = self.group
        lw = g.length(w)
        for i, s in enumerate(g.simple_reflections, start=1):
            ws = w * s
            if g.length(ws) > lw:
                rep = divided_difference(g, i, self.schubert_rep(ws))
                self._reps[w.window] = rep
                return rep
        raise AssertionError("unreachable: every non-longest element has an ascent")

    def expand(self, poly: Polynomial, I: Iterable[int], p: int = 0) -> FlagCycle:
        """Express a polynomial representative in the Schubert basis of F(I).

        Every coefficient must come out integral; a fractional coefficient is a
        hard error (it means the class does not live on F(I), or a convention
        broke).
        """
        I = frozenset(I)
        g = self.group
        out: dict[SignedPermutation, int] = {}
        if poly.is_zero():
            return FlagCycle(self, I, out, p)
        degrees = {sum(e) for e in poly.coeffs}
        top = self.dim_flag(I)
        candidates = self.basis(I)
        for k in sorted(degrees):
            if k > top:
                continue
            for w in candidates:
                if g.length(w) != k:
                    continue
                c = divided_difference_word(
                    g, g.reduced_word(w), poly
                ).constant_term()
                if c:
                    if c.denominator != 1:
                        raise ArithmeticError(
                            "nonintegral Schubert coefficient %s at %r" % (c, w.window)
                        )
                    out[w] = int(c)
        return FlagCycle(self, I, out, p)

    def basis_product(self, I, u: SignedPermutation, v: SignedPermutation) -> dict:
        I = frozenset(I)
        if u.window > v.window:
            u, v = v, u
        key = (I, u.window, v.window)
        cached = self._pair_products.get(key)
        if cached is None:
            g = self.group
            if g.length(u) + g.length(v) > self.dim_flag(I):
                cached = {}
            else:
                poly = self.schubert_rep(u) * self.schubert_rep(v)
                cached = self.expand(poly, I).coeffs
            self._pair_products[key] = cached
        return cached

    # -- functoriality ---------------------------------------------------------

    def pullback(self, target_I: Iterable[int], x: FlagCycle) -> FlagCycle:
        """Pullback along F(target_I) -> F(J); requires J contained in target_I."""
        target_I = frozenset(target_I)
        if not x.I <= target_I:
            raise ValueError("pullback requires J to be a subset of I")
        if not self.cut_nodes(x.I) <= self.cut_nodes(target_I):
            raise ValueError("pullback requires nested parabolics")
        return FlagCycle(self, target_I, x.coeffs, x.p)

    def pushforward(self, target_J: Iterable[int], x: FlagCycle) -> FlagCycle:
        """Pushforward along F(I) -> F(J) for J contained in I.

        On the Schubert basis this is combinatorial: decompose w over the
        target parabolic as w = u * p; the class survives exactly when p is
        the longest element of W_{P_J} with no descent in P_I, in which case
        it maps to the Schubert class of u.
        """
        target_J = frozenset(target_J)
        if not target_J <= x.I:
            raise ValueError("pushforward requires J to be a subset of I")
        if not self.cut_nodes(target_J) <= self.cut_nodes(x.I):
            raise ValueError("pushforward requires nested parabolics")
        g = self.group
        key = (frozenset(x.I), target_J)
        v = self._push_ops.get(key)
        if v is None:
            v = g.parabolic_longest(self.parabolic(target_J)) * g.parabolic_longest(
                self.parabolic(x.I)
            )
            self._push_ops[key] = v
        par = self.parabolic(target_J)
        out: dict[SignedPermutation, int] = {}
        for w, c in x.coeffs.items():
            u, p = g.parabolic_decompose(w, par)
            if p == v:
                out[u] = out.get(u, 0) + c
        return FlagCycle(self, target_J, out, x.p)

    def deg(self, x: FlagCycle) -> int:
        """Degree homomorphism: coefficient of the point class in top codimension."""
        top = self.top_element(x.I)
        return x.coeffs.get(top, 0)

    def deg_product(self, classes: list[FlagCycle]) -> int:
        """deg of a product, via one representative product and one extraction."""
        if not classes:
            raise ValueError("empty product")
        I = classes[0].I
        p = classes[0].p
        total = 0
        for x in classes:
            total += x.codim()
        if total != self.dim_flag(I):
            return 0
        g = self.group
        poly = classes[0].rep()
        for x in classes[1:]:
            if x.I != I:
                raise ValueError("model/I mismatch")
            poly = poly * x.rep()
        c = divided_difference_word(
            g, g.reduced_word(self.top_element(I)), poly
        ).constant_term()
        if c.denominator != 1:
            raise ArithmeticError("nonintegral degree %s" % (c,))
        return int(c) % 2 if p == 2 else int(c)

    # -- the quadric inside the model -------------------------------------------

    def _identify_quadric_basis(self) -> None:
        g = self.group
        by_codim: dict[int, list[SignedPermutation]] = {}
        for w in self.basis([0]):
            by_codim.setdefault(g.length(w), []).append(w)
        self._x_by_codim = by_codim
        if self.n % 2 == 0:
            mids = by_codim[self.d]
            if len(mids) != 2:
                raise AssertionError("expected two middle classes on an even quadric")
            # Push the point class of the chosen G_d component down to X; that
            # is the middle class of the same ruling family as G_d.
            pt = self.point_class([self.d])
            same = self.pushforward([0], self.pullback([0, self.d], pt))
            if len(same.coeffs) != 1 or set(same.coeffs.values()) != {1}:
                raise AssertionError("ruling identification failed")
            (w_same,) = same.coeffs
            (w_other,) = [w for w in mids if w != w_same]
            # l_d is the ruling a generic member of G_d meets in a point:
            # the same family iff the rank d+1 is odd, i.e. iff 4 | n.
            if self.n % 4 == 0:
                self._x_middle = (w_same, w_other)
            else:
                self._x_middle = (w_other, w_same)
            total = self.expand(variable(g.rank, 1) ** self.d, [0])
            if total.coeffs != {mids[0]: 1, mids[1]: 1}:
                raise AssertionError("h^d should split as l_d + l_d'")

    def h_class(self, p: int = 0) -> FlagCycle:
        """The hyperplane class on X = G_0."""
        (w,) = self._x_by_codim[1]
        return FlagCycle(self, [0], {w: 1}, p)

    def h_power(self, k: int, p: int = 0) -> FlagCycle:
        """h^k on X, for 0 <= k <= n (expanded in the Schubert basis)."""
        if not 0 <= k <= self.n:
            raise ValueError("hyperplane power out of range")
        return self.expand(variable(self.group.rank, 1) ** k, [0], p)

    def l_class(self, b: int, p: int = 0) -> FlagCycle:
        """The class of a b-dimensional isotropic subspace on X (oriented at b = d)."""
        if not 0 <= b <= self.d:
            raise ValueError("isotropic dimension out of range")
        if self.n % 2 == 0 and b == self.d:
            return FlagCycle(self, [0], {self._x_middle[0]: 1}, p)
        (w,) = self._x_by_codim[self.n - b]
        return FlagCycle(self, [0], {w: 1}, p)

    def lp_class(self, p: int = 0) -> FlagCycle:
        """The other ruling class l_d' (n even only)."""
        if self.n % 2:
            raise ValueError("second ruling exists only for even n")
        return FlagCycle(self, [0], {self._x_middle[1]: 1}, p)

    # -- distinguished classes ---------------------------------------------------

    def pullpush_x_to_g(self, i: int, x: FlagCycle) -> FlagCycle:
        """The correspondence X -> G_i through F(0, i) applied to a class on X."""
        return self.pushforward([i], self.pullback([0, i], x))

    def pullpush_g_to_x(self, i: int, x: FlagCycle) -> FlagCycle:
        return self.pushforward([0], self.pullback([0, i], x))

    def class_Z(self, i: int, j: int, p: int = 0) -> FlagCycle:
        """Z^i_j on G_i: pull l_{n-i-j} through F(0,i) and push down.

        Out-of-range j gives the natural zero class rather than an error only
        when the l-index merely overflows codimension (j > n - i); the lower
        bound is a genuine range error.
        """
        if not 0 <= i <= self.d:
            raise ValueError("grassmannian index out of range")
        if j > self.n - i:
            return self.zero([i], p)
        if j < self.n - i - self.d:
            raise ValueError("Z index out of range")
        x = self.l_class(self.n - i - j, p)
        if i == 0:
            return x
        return self.pullpush_x_to_g(i, x)

    def class_W(self, i: int, j: int, p: int = 0) -> FlagCycle:
        """W^i_j on G_i (and W^0_j = h^j); zero for negative j.

        The distinguished range is j + i <= d, but the defining pull-push of
        h^{j+i} makes sense whenever the power exists and is what the degree
        computations on products use, so any j + i <= n is accepted.
        """
        if not 0 <= i <= self.d:
            raise ValueError("grassmannian index out of range")
        if j < 0:
            return self.zero([i], p)
        if i == 0:
            return self.h_power(j, p)
        if j + i > self.n:
            raise ValueError("W index out of range")
        return self.pullpush_x_to_g(i, self.h_power(j + i, p))

    def taut_chern_roots(self, i: int) -> list[Polynomial]:
        """Chern roots of the rank i+1 tautological subbundle on G_i."""
        m = self.group.rank
        roots = [variable(m, j).scale(-1) for j in range(1, i + 2)]
        if self.ctx.family == "D" and i == self.d and self.ctx.orientation == -1:
            roots[-1] = variable(m, m)
        return roots

    def chern_taut(self, i: int, j: int, p: int = 0) -> FlagCycle:
        """c_j of the tautological bundle on G_i."""
        if not 0 <= j <= i + 1:
            raise ValueError("Chern index out of range")
        roots = self.taut_chern_roots(i)
        poly = _elementary_symmetric(roots, j, self.group.rank)
        return self.expand(poly, [i], p)

    def chern_quot(self, i: int, j: int, p: int = 0) -> FlagCycle:
        """c_j of the quotient of the trivial bundle by the tautological one."""
        rank_q = self.n + 2 - (i + 1)
        if not 0 <= j <= rank_q:
            raise ValueError("Chern index out of range")
        negroots = [r.scale(-1) for r in self.taut_chern_roots(i)]
        poly = _complete_homogeneous(negroots, j, self.group.rank)
        return self.expand(poly, [i], p)

    def class_O1(self, i: int, p: int = 0) -> FlagCycle:
        """c_1(O(1)) of the projective bundle F(i-1, i) -> G_i."""
        if not 1 <= i <= self.d:
            raise ValueError("bundle index out of range")
        m = self.group.rank
        poly = variable(m, i + 1).scale(-1)
        if self.ctx.family == "D" and i == self.d and self.ctx.orientation == -1:
            poly = variable(m, m)
        return self.expand(poly, [i - 1, i], p)

    # -- convention gate -----------------------------------------------------------

    def lemma_pullback_identities(self, i: int) -> list[tuple[str, FlagCycle, FlagCycle]]:
        """The four classical identities on F(i-1, i) that pin every sign choice.

        Returns (label, lhs, rhs) triples; all must be exact equalities.
        """
        I = [i - 1, i]
        xi = self.class_O1(i)
        pull_up = lambda x: self.pullback(I, x)  # noqa: E731
        out = []
        # (i) the full pull-push of h^i is the fundamental class of G_i
        out.append(("W^i_0=[G_i]", self.class_W(i, 0), self.fundamental([i])))
        # (ii) Z-classes on consecutive grassmannians
        lo = self.n - i + 1 - self.d
        for j in range(lo, self.n - i + 2):
            lhs = pull_up(self.class_Z(i - 1, j))
            rhs = xi * pull_up(self.class_Z(i, j - 1)) + pull_up(self.class_Z(i, j))
            out.append((f"Z-ladder j={j}", lhs, rhs))
        # (iii) W-classes below the top
        for j in range(0, self.d - i + 1):
            lhs = pull_up(self.class_W(i - 1, j))
            rhs = xi * pull_up(self.class_W(i, j - 1)) + pull_up(self.class_W(i, j))
            out.append((f"W-ladder j={j}", lhs, rhs))
        # (iv) the top W-class picks up a doubled Z-term
        lhs = pull_up(self.class_W(i - 1, self.d - i + 1))
        rhs = xi * pull_up(self.class_W(i, self.d - i)) + pull_up(
            self.class_Z(i, self.d - i + 1)
        ).scale(2)
        out.append(("top W-ladder", lhs, rhs))
        return out

    def validate_conventions(self) -> None:
        for i in range(1, self.d + 1):
            for label, lhs, rhs in self.lemma_pullback_identities(i):
                if lhs != rhs:
                    raise ArithmeticError(
                        "sign-convention gate failed at i=%d (%s)" % (i, label)
                    )


def _elementary_symmetric(roots: list[Polynomial], j: int, m: int) -> Polynomial:
    if j == 0:
        return constant(m, 1)
    acc = [constant(m, 1)] + [Polynomial(m) for _ in range(j)]
    for r in roots:
        for k in range(min(j, len(roots)), 0, -1):
            acc[k] = acc[k] + acc[k - 1] * r
    return acc[j]


def _complete_homogeneous(roots: list[Polynomial], j: int, m: int) -> Polynomial:
    if j == 0:
        return constant(m, 1)
    acc = [constant(m, 1)] + [Polynomial(m) for _ in range(j)]
    for r in roots:
        powers = [constant(m, 1)]
        for _ in range(j):
            powers.append(powers[-1] * r)
        new = [Polynomial(m) for _ in range(j + 1)]
        for k in range(j + 1):
            for a in range(k + 1):
                new[k] = new[k] + powers[a] * acc[k - a]
        acc = new
    return acc[j]


@lru_cache(maxsize=None)
def _cached_model(n: int, orientation: int | None, validate: bool) -> FlagModel:
    return FlagModel(n, orientation, validate)


def build_flag_model(
    n: int, orientation: int | None = None, validate: bool = True
) -> FlagModel:
    """Build (and cache) the flag-variety model for the split quadric of dim n."""
    if n % 2 == 0 and orientation is None:
        orientation = 1
    if n % 2 == 1:
        orientation = None
    return _cached_model(n, orientation, validate)


class UnionCycle:
    """A cycle on F(I), with one part per connected component.

    For n odd, or when d is not in I, F(I) is connected and there is a single
    part on the primary model.  For n even with d in I the variety of maximal
    isotropic subspaces contributes both ruling components, and the cycle
    carries one FlagCycle per sheet (sheet 0 on the primary-orientation model,
    sheet 1 on the opposite one).  Degrees and pushforwards to connected
    targets sum over the sheets.
    """

    __slots__ = ("geometry", "I", "parts")

    def __init__(self, geometry: "QuadricGeometry", I, parts: tuple[FlagCycle, ...]):
        self.geometry = geometry
        self.I = frozenset(I)
        self.parts = tuple(parts)
        if len(self.parts) != len(geometry.sheets(self.I)):
            raise ValueError("wrong number of sheet parts")

    def _check(self, other: "UnionCycle") -> None:
        if self.geometry is not other.geometry or self.I != other.I:
            raise ValueError("model/I mismatch")

    def __add__(self, other: "UnionCycle") -> "UnionCycle":
        self._check(other)
        return UnionCycle(
            self.geometry, self.I, tuple(a + b for a, b in zip(self.parts, other.parts))
        )

    def __sub__(self, other: "UnionCycle") -> "UnionCycle":
        return self + other.scale(-1)

    def scale(self, c: int) -> "UnionCycle":
        return UnionCycle(self.geometry, self.I, tuple(x.scale(c) for x in self.parts))

    def __mul__(self, other: "UnionCycle") -> "UnionCycle":
        self._check(other)
        return UnionCycle(
            self.geometry, self.I, tuple(a * b for a, b in zip(self.parts, other.parts))
        )

    def mod2(self) -> "UnionCycle":
        return UnionCycle(self.geometry, self.I, tuple(x.mod2() for x in self.parts))

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.parts)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, UnionCycle)
            and self.geometry is other.geometry
            and self.I == other.I
            and self.parts == other.parts
        )

    def __hash__(self) -> int:
        return hash((id(self.geometry), self.I, self.parts))

    def codim(self) -> int:
        degs = set()
        for x in self.parts:
            if not x.is_zero():
                degs.add(x.codim())
        if len(degs) > 1:
            raise ValueError("inhomogeneous cycle")
        return degs.pop() if degs else -1

    def __repr__(self) -> str:
        if len(self.parts) == 1:
            return repr(self.parts[0])
        return " (+) ".join(repr(x) for x in self.parts)


class QuadricGeometry:
    """Sheet-aware front end over the flag models of one split quadric.

    Holds the primary-orientation model and, for even n, the opposite one; the
    global middle class l_d is the primary model's choice.  All Chow-ring
    operations below take and return :class:`UnionCycle`, summing over the two
    ruling components wherever the geometry is disconnected.
    """

    def __init__(self, n: int, orientation: int = 1, validate: bool = True):
        self.n = n
        self.d = n // 2
        self.primary = build_flag_model(n, orientation, validate)
        self.ctx = self.primary.ctx
        self.group = self.primary.group
        if n % 2 == 0:
            self.secondary: FlagModel | None = build_flag_model(
                n, -self.primary.ctx.orientation, validate
            )
        else:
            self.secondary = None
        if validate and self.secondary is not None:
            self._validate_union_conventions()

    # -- sheets ------------------------------------------------------------

    def split(self, I: Iterable[int]) -> bool:
        return self.secondary is not None and self.d in frozenset(I)

    def sheets(self, I: Iterable[int]) -> tuple[FlagModel, ...]:
        if self.split(I):
            return (self.primary, self.secondary)
        return (self.primary,)

    def wrap(self, *parts: FlagCycle) -> UnionCycle:
        return UnionCycle(self, parts[0].I, parts)

    def from_primary(self, x: FlagCycle) -> UnionCycle:
        """Lift a cycle on a connected F(I) (computed on the primary model)."""
        if self.split(x.I):
            raise ValueError("F(I) is disconnected; supply both sheet parts")
        return UnionCycle(self, x.I, (x,))

    def transfer(self, x: FlagCycle, model: FlagModel) -> FlagCycle:
        # Shared connected spaces have literally the same Schubert data in
        # both models (same Weyl group object, same representatives).
        return FlagCycle(model, x.I, x.coeffs, x.p)

    # -- basic classes -------------------------------------------------------

    def zero(self, I, p: int = 0) -> UnionCycle:
        return UnionCycle(self, I, tuple(M.zero(I, p) for M in self.sheets(I)))

    def fundamental(self, I, p: int = 0) -> UnionCycle:
        return UnionCycle(self, I, tuple(M.fundamental(I, p) for M in self.sheets(I)))

    def point_class(self, I, p: int = 0) -> UnionCycle:
        # On a disconnected variety this is the point of the primary sheet.
        sheets = self.sheets(I)
        parts = [sheets[0].point_class(I, p)]
        parts.extend(M.zero(I, p) for M in sheets[1:])
        return UnionCycle(self, I, tuple(parts))

    def global_l(self, model: FlagModel, b: int, p: int = 0) -> FlagCycle:
        """The class l_b on X in `model` labels, under the global orientation."""
        if self.n % 2 == 0 and b == self.d:
            (w,) = self.primary.l_class(self.d).coeffs
            return FlagCycle(model, [0], {w: 1}, p)
        return model.l_class(b, p)

    def h_class(self, p: int = 0) -> UnionCycle:
        return self.from_primary(self.primary.h_class(p))

    def h_power(self, k: int, p: int = 0) -> UnionCycle:
        return self.from_primary(self.primary.h_power(k, p))

    def l_class(self, b: int, p: int = 0) -> UnionCycle:
        return self.from_primary(self.global_l(self.primary, b, p))

    def lp_class(self, p: int = 0) -> UnionCycle:
        return self.from_primary(self.primary.lp_class(p))

    # -- functoriality ---------------------------------------------------------

    def pullback(self, target_I, x: UnionCycle) -> UnionCycle:
        target_I = frozenset(target_I)
        if not x.I <= target_I:
            raise ValueError("pullback requires J to be a subset of I")
        targets = self.sheets(target_I)
        if len(x.parts) == len(targets):
            parts = tuple(
                M.pullback(target_I, px) for M, px in zip(targets, x.parts)
            )
        elif len(x.parts) == 1 and len(targets) == 2:
            parts = tuple(
                M.pullback(target_I, self.transfer(x.parts[0], M)) for M in targets
            )
        else:
            raise ValueError("cannot pull back from a disconnected space")
        return UnionCycle(self, target_I, parts)

    def pushforward(self, target_J, x: UnionCycle) -> UnionCycle:
        target_J = frozenset(target_J)
        if not target_J <= x.I:
            raise ValueError("pushforward requires J to be a subset of I")
        targets = self.sheets(target_J)
        if len(x.parts) == len(targets):
            parts = tuple(
                M.pushforward(target_J, px) for M, px in zip(targets, x.parts)
            )
            return UnionCycle(self, target_J, parts)
        if len(x.parts) == 2 and len(targets) == 1:
            # Disconnected source over a connected target: add the sheets.
            total = self.primary.pushforward(target_J, x.parts[0])
            other = x.parts[1].model.pushforward(target_J, x.parts[1])
            total = total + self.transfer(other, self.primary)
            return UnionCycle(self, target_J, (total,))
        raise ValueError("inconsistent sheet data")

    def deg(self, x: UnionCycle) -> int:
        total = sum(px.model.deg(px) for px in x.parts)
        return total % 2 if any(px.p == 2 for px in x.parts) else total

    def deg_product(self, classes: list[UnionCycle]) -> int:
        I = classes[0].I
        if any(x.I != I for x in classes):
            raise ValueError("model/I mismatch")
        total = 0
        p = 0
        for sheet in range(len(classes[0].parts)):
            parts = [x.parts[sheet] for x in classes]
            p = parts[0].p
            total += parts[0].model.deg_product(parts)
        return total % 2 if p == 2 else total

    # -- distinguished classes ----------------------------------------------------

    def class_Z(self, i: int, j: int, p: int = 0) -> UnionCycle:
        if not 0 <= i <= self.d:
            raise ValueError("grassmannian index out of range")
        if j < self.n - i - self.d:
            raise ValueError("Z index out of range")
        parts = []
        for M in self.sheets([i]):
            if j > self.n - i:
                parts.append(M.zero([i], p))
                continue
            x = self.global_l(M, self.n - i - j, p)
            parts.append(x if i == 0 else M.pullpush_x_to_g(i, x))
        return UnionCycle(self, [i], tuple(parts))

    def class_W(self, i: int, j: int, p: int = 0) -> UnionCycle:
        return UnionCycle(
            self, [i], tuple(M.class_W(i, j, p) for M in self.sheets([i]))
        )

    def chern_taut(self, i: int, j: int, p: int = 0) -> UnionCycle:
        return UnionCycle(
            self, [i], tuple(M.chern_taut(i, j, p) for M in self.sheets([i]))
        )

    def chern_quot(self, i: int, j: int, p: int = 0) -> UnionCycle:
        return UnionCycle(
            self, [i], tuple(M.chern_quot(i, j, p) for M in self.sheets([i]))
        )

    def class_O1(self, i: int, p: int = 0) -> UnionCycle:
        return UnionCycle(
            self, [i - 1, i], tuple(M.class_O1(i, p) for M in self.sheets([i]))
        )

    def pullpush_through(self, i: int, x: UnionCycle) -> UnionCycle:
        """pi_{(i-1,_i)*} o pi*_{(i-1,i_)}: CH(G_i) -> CH(F(i-1,i)) -> CH(G_{i-1})."""
        up = self.pullback([i - 1, i], x)
        return self.pushforward([i - 1], up)

    def mod2(self, x: UnionCycle) -> UnionCycle:
        return x.mod2()

    # -- gates ----------------------------------------------------------------------

    def _validate_union_conventions(self) -> None:
        """Lemma-2.4-shaped identities at i = d, per sheet, in the global naming."""
        n, d = self.n, self.d
        for M in self.sheets([d]):
            xi = M.class_O1(d)
            I = [d - 1, d]

            def gz(i, j, M=M):
                if j > n - i:
                    return M.zero([i])
                x = self.global_l(M, n - i - j)
                return x if i == 0 else M.pullpush_x_to_g(i, x)

            for j in range(n - d + 1 - d, n - d + 2):
                lhs = M.pullback(I, gz(d - 1, j))
                rhs = xi * M.pullback(I, gz(d, j - 1)) + M.pullback(I, gz(d, j))
                if lhs != rhs:
                    raise ArithmeticError(
                        "union convention gate failed (Z-ladder, j=%d)" % j
                    )
            lhs = M.pullback(I, M.class_W(d - 1, 1))
            rhs = xi * M.pullback(I, M.class_W(d, 0)) + M.pullback(I, gz(d, 1)).scale(2)
            if lhs != rhs:
                raise ArithmeticError("union convention gate failed (top W-ladder)")


@lru_cache(maxsize=None)
def _cached_geometry(n: int, orientation: int, validate: bool) -> QuadricGeometry:
    return QuadricGeometry(n, orientation, validate)


def build_geometry(n: int, orientation: int = 1, validate: bool = True) -> QuadricGeometry:
    """Build (and cache) the sheet-aware geometry for the split quadric of dim n."""
    return _cached_geometry(n, orientation, validate)
