"""Mixed cycles on (flag variety) x (quadric power), and the correspondences
built from the point-subspace incidence.

A mixed cycle on F(I) x X^m is stored in the Kunneth basis: coefficients are
indexed by pairs (Schubert representative on F(I), basis monomial on X^m),
with one coefficient dictionary per connected component of F(I) (two sheets
when n is even and d is in I, else one).  Because both factors are cellular,
pullback and pushforward act independently on the two tensor legs, and
pushing the flag leg all the way down to a point is just reading off the
point-class coefficient sheet by sheet.

The incidence class of pairs (subspace, point on it) inside G_i x X is not
computed from an embedding; it is assembled from its Kunneth expansion, whose
coefficient on a basis monomial b of X is the pull-push to G_i of the Poincare
dual of b.  That assembly is validated against the intrinsic characterisation
(its correspondence action on X-classes must reproduce the raw pull-push maps)
by ``validate_incidence``; a mismatch is a hard error in the Kunneth
bookkeeping, not a tolerance issue.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from quadchow.quadpow import (
    Correspondence,
    Mono,
    QuadCycle,
    Sym,
    basis_symbols,
    delta_i,
    dual1,
    external,
    h_power_cycle,
    pair_deg,
    rho_i,
)
from quadchow.quadpow import _mul_mono
from quadchow.schubert import (
    FlagCycle,
    FlagModel,
    QuadricGeometry,
    UnionCycle,
)
from quadchow.weyl import SignedPermutation

__all__ = [
    "MixedCycle",
    "symbol_class",
    "flag_cycle_to_quad",
    "incidence_class",
    "validate_incidence",
    "eta",
    "theta",
    "theta_action",
    "action_via_pullpush",
    "alpha",
    "theta_prime",
    "eta_pushdown",
    "eta_pushdown_expansion",
    "degree_congruence",
]

MixedKey = tuple[SignedPermutation, Mono]


def symbol_class(
    geometry: QuadricGeometry, model: FlagModel, s: Sym, p: int = 0
) -> FlagCycle:
    """The X-class of a quadric-power basis symbol, in `model` labels, under the
    global orientation."""
    kind, idx = s
    if kind == "h":
        return model.h_power(idx, p)
    if kind == "l":
        return geometry.global_l(model, idx, p)
    (w,) = geometry.primary.lp_class().coeffs
    return FlagCycle(model, [0], {w: 1}, p)


def _x_window_table(geometry: QuadricGeometry) -> dict[tuple[int, ...], Sym]:
    table: dict[tuple[int, ...], Sym] = {}
    for s in basis_symbols(geometry.ctx):
        fc = symbol_class(geometry, geometry.primary, s)
        (w,) = fc.coeffs
        table[w.window] = s
    return table


def flag_cycle_to_quad(geometry: QuadricGeometry, x) -> QuadCycle:
    """Translate a cycle on X = G_0 from Schubert to quadric-power coordinates."""
    if isinstance(x, UnionCycle):
        if x.I != frozenset([0]):
            raise ValueError("expected a cycle on X")
        x = x.parts[0]
    table = _x_window_table(geometry)
    out: dict[Mono, int] = {}
    for w, c in x.coeffs.items():
        out[(table[w.window],)] = c
    return QuadCycle(geometry.ctx, 1, out, x.p)


class MixedCycle:
    """A cycle on F(I) x X^m in the Kunneth basis, one part per sheet."""

    __slots__ = ("geometry", "I", "arity", "parts", "p")

    def __init__(
        self,
        geometry: QuadricGeometry,
        I,
        arity: int,
        parts: Sequence[Mapping[MixedKey, int]],
        p: int = 0,
    ):
        self.geometry = geometry
        self.I = frozenset(I)
        self.arity = arity
        self.p = p
        if len(parts) != len(geometry.sheets(self.I)):
            raise ValueError("wrong number of sheet parts")
        clean = []
        for part in parts:
            cp: dict[MixedKey, int] = {}
            for key, c in part.items():
                c = c % 2 if p == 2 else int(c)
                if c:
                    cp[key] = c
            clean.append(cp)
        self.parts = tuple(clean)

    # -- linear and ring structure ----------------------------------------

    def _check(self, other: "MixedCycle") -> None:
        if (
            self.geometry is not other.geometry
            or self.I != other.I
            or self.arity != other.arity
            or self.p != other.p
        ):
            raise ValueError("model/I mismatch")

    def __add__(self, other: "MixedCycle") -> "MixedCycle":
        self._check(other)
        parts = []
        for a, b in zip(self.parts, other.parts):
            out = dict(a)
            for key, c in b.items():
                out[key] = out.get(key, 0) + c
            parts.append(out)
        return MixedCycle(self.geometry, self.I, self.arity, parts, self.p)

    def __sub__(self, other: "MixedCycle") -> "MixedCycle":
        return self + other.scale(-1)

    def scale(self, c: int) -> "MixedCycle":
        return MixedCycle(
            self.geometry,
            self.I,
            self.arity,
            [{k: c * v for k, v in part.items()} for part in self.parts],
            self.p,
        )

    def __mul__(self, other: "MixedCycle") -> "MixedCycle":
        self._check(other)
        ctx = self.geometry.ctx
        parts = []
        for model, a, b in zip(self.geometry.sheets(self.I), self.parts, other.parts):
            out: dict[MixedKey, int] = {}
            for (w1, m1), c1 in a.items():
                for (w2, m2), c2 in b.items():
                    flag = model.basis_product(self.I, w1, w2)
                    if not flag:
                        continue
                    quad = _mul_mono(ctx, m1, m2)
                    for w, cf in flag.items():
                        for mono, cq in quad.items():
                            key = (w, mono)
                            out[key] = out.get(key, 0) + c1 * c2 * cf * cq
            parts.append(out)
        return MixedCycle(self.geometry, self.I, self.arity, parts, self.p)

    def mod2(self) -> "MixedCycle":
        return MixedCycle(self.geometry, self.I, self.arity, self.parts, 2)

    def is_zero(self) -> bool:
        return all(not part for part in self.parts)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MixedCycle)
            and self.geometry is other.geometry
            and self.I == other.I
            and self.arity == other.arity
            and self.p == other.p
            and self.parts == other.parts
        )

    def __hash__(self) -> int:
        return hash(
            (id(self.geometry), self.I, self.arity, self.p)
            + tuple(frozenset(part.items()) for part in self.parts)
        )

    def __repr__(self) -> str:
        terms = sum(len(p) for p in self.parts)
        return "<MixedCycle F(%s) x X^%d, %d terms%s>" % (
            ",".join(map(str, sorted(self.I))),
            self.arity,
            terms,
            " mod 2" if self.p == 2 else "",
        )

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_flag(
        cls, x: UnionCycle, arity: int, p: int | None = None
    ) -> "MixedCycle":
        """x (x) [X^arity]."""
        geom = x.geometry
        unit = (("h", 0),) * arity
        parts = [
            {(w, unit): c for w, c in part.coeffs.items()} for part in x.parts
        ]
        return cls(geom, x.I, arity, parts, x.parts[0].p if p is None else p)

    @classmethod
    def from_quad(
        cls, geometry: QuadricGeometry, I, x: QuadCycle
    ) -> "MixedCycle":
        """[F(I)] (x) x."""
        sheets = geometry.sheets(I)
        ident = geometry.group.identity
        parts = [
            {(ident, mono): c for mono, c in x.coeffs.items()} for _ in sheets
        ]
        return cls(geometry, I, x.m, parts, x.p)

    # -- the two tensor legs ---------------------------------------------------

    def pull_flag(self, target_I) -> "MixedCycle":
        """Pullback along the flag projection F(target_I) -> F(I)."""
        geom = self.geometry
        target_I = frozenset(target_I)
        targets = geom.sheets(target_I)
        if len(self.parts) == len(targets):
            parts = list(self.parts)
        elif len(self.parts) == 1 and len(targets) == 2:
            parts = [self.parts[0], self.parts[0]]
        else:
            raise ValueError("cannot pull back from a disconnected space")
        # minimal representatives stay minimal for the bigger cut set
        return MixedCycle(geom, target_I, self.arity, parts, self.p)

    def push_flag(self, target_J) -> "MixedCycle":
        geom = self.geometry
        target_J = frozenset(target_J)
        targets = geom.sheets(target_J)
        out_parts: list[dict[MixedKey, int]] = [{} for _ in targets]
        for model, part in zip(geom.sheets(self.I), self.parts):
            by_mono: dict[Mono, dict[SignedPermutation, int]] = {}
            for (w, mono), c in part.items():
                by_mono.setdefault(mono, {})[w] = c
            for mono, coeffs in by_mono.items():
                fc = FlagCycle(model, self.I, coeffs, self.p)
                pushed = model.pushforward(target_J, fc)
                tgt = 0
                if len(targets) == 2:
                    tgt = 0 if model is targets[0] else 1
                for w, c in pushed.coeffs.items():
                    key = (w, mono)
                    out_parts[tgt][key] = out_parts[tgt].get(key, 0) + c
        return MixedCycle(geom, target_J, self.arity, out_parts, self.p)

    def push_to_quad(self) -> QuadCycle:
        """Integrate the flag leg over F(I); sheets add."""
        geom = self.geometry
        out: dict[Mono, int] = {}
        for model, part in zip(geom.sheets(self.I), self.parts):
            top = model.top_element(self.I)
            for (w, mono), c in part.items():
                if w == top:
                    out[mono] = out.get(mono, 0) + c
        return QuadCycle(geom.ctx, self.arity, out, self.p)

    def pull_x(self, m_target: int, slots: Sequence[int]) -> "MixedCycle":
        """Pullback along the X-power projection hitting the listed slots."""
        slots = tuple(slots)
        parts = []
        for part in self.parts:
            out: dict[MixedKey, int] = {}
            for (w, mono), c in part.items():
                new = [("h", 0)] * m_target
                for s, t in zip(mono, slots):
                    new[t] = s
                key = (w, tuple(new))
                out[key] = out.get(key, 0) + c
            parts.append(out)
        return MixedCycle(self.geometry, self.I, m_target, parts, self.p)

    def push_x(self, keep: Sequence[int]) -> "MixedCycle":
        """Pushforward integrating the dropped X-slots."""
        keep = tuple(keep)
        drop = [t for t in range(self.arity) if t not in keep]
        parts = []
        for part in self.parts:
            out: dict[MixedKey, int] = {}
            for (w, mono), c in part.items():
                if any(mono[t] != ("l", 0) for t in drop):
                    continue
                key = (w, tuple(mono[t] for t in keep))
                out[key] = out.get(key, 0) + c
            parts.append(out)
        return MixedCycle(self.geometry, self.I, len(keep), parts, self.p)

    def permute_x(self, perm: Sequence[int]) -> "MixedCycle":
        parts = []
        for part in self.parts:
            out: dict[MixedKey, int] = {}
            for (w, mono), c in part.items():
                new = [None] * self.arity
                for t, s in enumerate(mono):
                    new[perm[t]] = s
                key = (w, tuple(new))
                out[key] = out.get(key, 0) + c
            parts.append(out)
        return MixedCycle(self.geometry, self.I, self.arity, parts, self.p)

    # -- correspondence actions ---------------------------------------------------

    def action_on_flag(self, x: UnionCycle) -> QuadCycle:
        """View as a correspondence F(I) -> X^m and act on a flag cycle."""
        geom = self.geometry
        out: dict[Mono, int] = {}
        for model, part, xp in zip(geom.sheets(self.I), self.parts, x.parts):
            for (w, mono), c in part.items():
                d = model.deg(xp * FlagCycle(model, self.I, {w: 1}, xp.p))
                if d:
                    out[mono] = out.get(mono, 0) + c * d
        return QuadCycle(geom.ctx, self.arity, out, self.p)

    def action_on_quad(self, x: QuadCycle) -> UnionCycle:
        """View as a correspondence X^m -> F(I) and act on a quadric-power cycle."""
        geom = self.geometry
        ctx = geom.ctx
        parts = []
        for model, part in zip(geom.sheets(self.I), self.parts):
            out: dict[SignedPermutation, int] = {}
            for (w, mono), c in part.items():
                for xmono, cx in x.coeffs.items():
                    factor = 1
                    for s, t in zip(xmono, mono):
                        factor *= pair_deg(ctx, s, t)
                        if not factor:
                            break
                    if factor:
                        out[w] = out.get(w, 0) + c * cx * factor
            parts.append(FlagCycle(model, self.I, out, self.p))
        return UnionCycle(geom, self.I, tuple(parts))

    def id_times_action(self, x: QuadCycle) -> "MixedCycle":
        """Act on the last `arity` X-slots of x, keeping the leading slots.

        This is the operator (Id on X^{r}) x (this correspondence): the input
        lives on X^{r + arity}, the output on F(I) x X^{r}.
        """
        geom = self.geometry
        ctx = geom.ctx
        r = x.m - self.arity
        if r < 0:
            raise ValueError("arity mismatch")
        parts = []
        for part in self.parts:
            out: dict[MixedKey, int] = {}
            for (w, mono), c in part.items():
                for xmono, cx in x.coeffs.items():
                    factor = 1
                    for s, t in zip(xmono[r:], mono):
                        factor *= pair_deg(ctx, s, t)
                        if not factor:
                            break
                    if factor:
                        key = (w, xmono[:r])
                        out[key] = out.get(key, 0) + c * cx * factor
            parts.append(out)
        return MixedCycle(geom, self.I, r, parts, self.p)


# -- the incidence class and its derivates ------------------------------------------


_incidence_cache: dict = {}


def incidence_class(geometry: QuadricGeometry, i: int, p: int = 0) -> MixedCycle:
    """The class of {(subspace, point on it)} in G_i x X, via its Kunneth expansion.

    The coefficient on the X-basis monomial b is the pull-push to G_i of the
    Poincare dual of b; for i = 0 this reduces to the diagonal of X.
    """
    if not 0 <= i <= geometry.d:
        raise ValueError("grassmannian index out of range")
    key = (id(geometry), i, p)
    cached = _incidence_cache.get(key)
    if cached is not None:
        return cached
    ctx = geometry.ctx
    parts = []
    for model in geometry.sheets([i]):
        part: dict[MixedKey, int] = {}
        for s in basis_symbols(ctx):
            x = symbol_class(geometry, model, dual1(ctx, s), p)
            zc = x if i == 0 else model.pullpush_x_to_g(i, x)
            for w, c in zc.coeffs.items():
                part[(w, (s,))] = c
        parts.append(part)
    out = MixedCycle(geometry, [i], 1, parts, p)
    _incidence_cache[key] = out
    return out


def validate_incidence(geometry: QuadricGeometry, i: int) -> None:
    """Check the assembled incidence class acts as the raw pull-push maps."""
    ctx = geometry.ctx
    inc = incidence_class(geometry, i)
    for s in basis_symbols(ctx):
        x = QuadCycle(ctx, 1, {(s,): 1})
        got = inc.action_on_quad(x)
        expected_parts = []
        for model in geometry.sheets([i]):
            fc = symbol_class(geometry, model, s)
            expected_parts.append(fc if i == 0 else model.pullpush_x_to_g(i, fc))
        expected = UnionCycle(geometry, frozenset([i]), tuple(expected_parts))
        if got != expected:
            raise ArithmeticError(
                "incidence Kunneth bookkeeping failed at i=%d on %r" % (i, s)
            )


def eta(geometry: QuadricGeometry, i: int, p: int = 0) -> MixedCycle:
    """Product over the i factor-pullbacks of the incidence class, on G_i x X^i."""
    if not 1 <= i <= geometry.d:
        raise ValueError("index out of range")
    inc = incidence_class(geometry, i, p)
    total = None
    for j in range(i):
        factor = inc.pull_x(i, [j])
        total = factor if total is None else total * factor
    return total


def theta(geometry: QuadricGeometry, i: int, p: int = 0) -> MixedCycle:
    """The incidence correspondence class on G_i x X^{i+1}."""
    if not 1 <= i <= geometry.d:
        raise ValueError("index out of range")
    inc = incidence_class(geometry, i, p)
    total = None
    for j in range(i + 1):
        factor = inc.pull_x(i + 1, [j])
        total = factor if total is None else total * factor
    return total


def theta_action(geometry: QuadricGeometry, i: int, p: int = 0) -> QuadCycle:
    """The direct route: theta_i as a correspondence G_i -> X^{i+1} applied to
    the top Z-class."""
    z = geometry.class_Z(i, geometry.n - i, p)
    return theta(geometry, i, p).action_on_flag(z)


def action_via_pullpush(geometry: QuadricGeometry, i: int, x: QuadCycle) -> QuadCycle:
    """The push-pull route through G_i x X^i for the action of
    (theta_i)_*(top Z) on a cycle of X."""
    n = geometry.n
    p = x.p
    parts = []
    for model in geometry.sheets([i]):
        acc = model.zero([i], p)
        for (s,), c in x.coeffs.items():
            fc = symbol_class(geometry, model, s, p).scale(c)
            acc = acc + (fc if i == 0 else model.pullpush_x_to_g(i, fc))
        parts.append(acc)
    zx = UnionCycle(geometry, frozenset([i]), tuple(parts))
    zx = zx * geometry.class_Z(i, n - i, p)
    mixed = MixedCycle.from_flag(zx, i) * eta(geometry, i, p)
    return mixed.push_to_quad()


def alpha(geometry: QuadricGeometry, i: int, p: int = 0) -> Correspondence:
    """theta-action plus the symmetrized h-chain, as a correspondence X -> X^i."""
    cyc = theta_action(geometry, i, p) + rho_i(geometry.ctx, i, p)
    return Correspondence(cyc, 1, i)


def theta_prime(geometry: QuadricGeometry, i: int) -> MixedCycle:
    """The mod-2 correspondence X^2 -> F(0,i) built from the split diagonal
    and the incidence class (arity 2; X-slots are the two sources)."""
    if not 1 <= i <= geometry.d:
        raise ValueError("index out of range")
    ctx = geometry.ctx
    I = frozenset([0, i])
    diag = delta_i(ctx, 1, p=2)
    inc = incidence_class(geometry, i, p=2)
    parts = []
    for model, inc_part in zip(geometry.sheets(I), _sheet_parts(inc, geometry, I)):
        out: dict[MixedKey, int] = {}
        for (w_g, (b,)), c1 in inc_part.items():
            # sigma_w pulled from G_i, times the pullback from X of the second
            # diagonal slot; Kunneth X-slots are (first diagonal slot, b).
            for (u, v), c2 in diag.coeffs.items():
                vi = symbol_class(geometry, model, v, 2)
                flag = model.pullback(I, vi) * model.pullback(
                    I, FlagCycle(model, [i], {w_g: 1}, 2)
                )
                for w, cf in flag.coeffs.items():
                    key = (w, (u, b))
                    out[key] = out.get(key, 0) + c1 * c2 * cf
        parts.append(out)
    return MixedCycle(geometry, I, 2, parts, 2)


def _sheet_parts(inc: MixedCycle, geometry: QuadricGeometry, I) -> tuple:
    """Match incidence sheet data to the sheets of a bigger flag space."""
    if len(geometry.sheets(I)) == len(inc.parts):
        return inc.parts
    if len(inc.parts) == 1:
        return inc.parts * len(geometry.sheets(I))
    raise ValueError("inconsistent sheet data")


def eta_pushdown(geometry: QuadricGeometry, i: int, k: int) -> QuadCycle:
    """The mixed pushforward of (W-part . top-z . eta_i) down to X^i, mod 2."""
    n = geometry.n
    wz = geometry.class_W(i, k - i, 2) * geometry.class_Z(i, n - i, 2)
    mixed = MixedCycle.from_flag(wz, i) * eta(geometry, i, 2)
    return mixed.push_to_quad()


def eta_pushdown_expansion(geometry: QuadricGeometry, i: int, k: int) -> QuadCycle:
    """The double-sum rewriting of the same cycle through G_{i-1} x X^{i-1}."""
    n, ctx = geometry.n, geometry.ctx
    if not 2 <= i <= geometry.d or not i <= k <= geometry.d:
        raise ValueError("index out of range")
    eta_prev = eta(geometry, i - 1, 2)
    z_prev = geometry.class_Z(i - 1, n - i + 1, 2)
    total: QuadCycle | None = None
    for m in range(0, k + 1):
        inner = geometry.zero([i - 1], 2)
        for j in range(max(i - m, 0), min(k - m, i) + 1):
            sigma_j = geometry.pushforward(
                [i - 1],
                geometry.pullback([i - 1, i], geometry.class_Z(i, n - 2 * i + j, 2)),
            )
            inner = inner + geometry.class_W(i - 1, k - m - j, 2) * sigma_j
        inner = inner * z_prev
        q = (MixedCycle.from_flag(inner, i - 1) * eta_prev).push_to_quad()
        term = external(q, h_power_cycle(ctx, m, 2))
        total = term if total is None else total + term
    return total


def degree_congruence(
    geometry: QuadricGeometry, i: int, k: int, m: int, a: Sequence[int]
) -> int:
    """deg((top-Z . prod of Z's) . (sum_j W^i_{k-m-j} c_j(T_i))) mod 2 on G_i."""
    n, d = geometry.n, geometry.d
    if not 1 <= i <= d - 1:
        raise ValueError("index out of range")
    if not (i + 1 <= k <= d and 1 <= m <= i):
        raise ValueError("index out of range")
    a = tuple(a)
    if len(a) != i or any(not 0 <= aj <= d for aj in a) or list(a) != sorted(a):
        raise ValueError("expected a sorted tuple of i indices in 0..d")
    classes = [geometry.class_Z(i, n - i)]
    classes += [geometry.class_Z(i, n - i - aj) for aj in a]
    s = geometry.zero([i])
    for j in range(0, i - m + 1):
        s = s + geometry.class_W(i, k - m - j) * geometry.chern_taut(i, j)
    if s.is_zero():
        return 0
    return geometry.deg_product(classes + [s]) % 2
