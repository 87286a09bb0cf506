"""Irreducible representations of GL(2,F_q) and PGL(2,F_q): exact character
tables, Frobenius-Schur indicators, contragredients and fusion coefficients.

Character values are exact elements of Q(zeta_n), n = q^2 - 1, stored
internally as short monomial lists (coefficient, power-of-zeta) so the
large class-weighted sums stay in integer arithmetic until the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chars import enumerate_M, enumerate_N
from .cyclo import CycNumber
from .grp import ConjClass

Monomials = tuple  # ((coeff, power), ...) in zeta_{q^2-1}


@dataclass(frozen=True)
class Irrep:
    group: str  # "gl" | "pgl"
    kind: str  # linear | principal | steinberg | cuspidal
    params: tuple  # character exponents


def _merge(pairs) -> Monomials:
    acc: dict[int, int] = {}
    for c, k in pairs:
        acc[k] = acc.get(k, 0) + c
    return tuple((c, k) for k, c in sorted(acc.items(), key=lambda kv: kv[0]) if c)


class CharacterTable:
    """The exact character table of one group context."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.group = ctx.group
        self.q = ctx.q
        self.n = ctx.ext.order - 1  # conductor of all table values
        self.order = ctx.order
        self.irreps = self._enumerate_irreps()
        self.dims = [self._dim(pi) for pi in self.irreps]
        assert sum(d * d for d in self.dims) == self.order
        assert len(self.irreps) == len(ctx.classes)
        self.irrep_index = {pi: i for i, pi in enumerate(self.irreps)}
        self._rows = [
            [self._monomials(pi, c) for c in ctx.classes] for pi in self.irreps
        ]
        self._fs = [self._fs_rule(pi) for pi in self.irreps]

    # -- irrep lists ------------------------------------------------------

    def _enumerate_irreps(self) -> list[Irrep]:
        q = self.q
        ne = self.n
        out: list[Irrep] = []
        if self.group == "gl":
            for a in range(q - 1):
                out.append(Irrep("gl", "linear", (a,)))
            for a in range(q - 1):
                for b in range(a + 1, q - 1):
                    out.append(Irrep("gl", "principal", (a, b)))
            for a in range(q - 1):
                out.append(Irrep("gl", "steinberg", (a,)))
            seen = set()
            for a in range(ne):
                if a % (q + 1) == 0 or a in seen:  # non-primitive or already seen
                    continue
                seen.update({a, (a * q) % ne})
                out.append(Irrep("gl", "cuspidal", (a,)))
        else:
            out.append(Irrep("pgl", "linear", (0,)))
            if q % 2:
                out.append(Irrep("pgl", "linear", ((q - 1) // 2,)))
            for orbit in enumerate_M(self.ctx.ext):
                out.append(Irrep("pgl", "principal", (orbit.rep.exponent,)))
            out.append(Irrep("pgl", "steinberg", (0,)))
            if q % 2:
                out.append(Irrep("pgl", "steinberg", ((q - 1) // 2,)))
            for orbit in enumerate_N(self.ctx.ext):
                out.append(Irrep("pgl", "cuspidal", (orbit.rep.exponent,)))
        return out

    def _dim(self, pi: Irrep) -> int:
        q = self.q
        return {"linear": 1, "principal": q + 1, "steinberg": q, "cuspidal": q - 1}[pi.kind]

    def dim(self, pi: Irrep) -> int:
        return self.dims[self.irrep_index[pi]]

    # -- table values -----------------------------------------------------

    def _lift(self, pi: Irrep, c: ConjClass) -> tuple[Irrep, ConjClass]:
        """PGL irreps/classes as GL ones (trivial central character lifts)."""
        q = self.q
        gl_kind = {"identity": "central", "unipotent": "unipotent",
                   "diagonal": "diagonal", "elliptic": "elliptic"}[c.kind]
        if c.kind == "identity":
            gc = ConjClass("gl", "central", (1,))
        elif c.kind == "unipotent":
            gc = ConjClass("gl", "unipotent", (1,))
        elif c.kind == "diagonal":
            gc = ConjClass("gl", gl_kind, (c.params[0], 1))
        else:
            gc = ConjClass("gl", gl_kind, c.params)
        if pi.kind == "principal":
            a = pi.params[0]
            gp = Irrep("gl", "principal", (a, (-a) % (q - 1)))
        else:
            gp = Irrep("gl", pi.kind, pi.params)
        return gp, gc

    def _monomials(self, pi: Irrep, c: ConjClass) -> Monomials:
        if self.group == "pgl":
            pi, c = self._lift(pi, c)
        F, E, q, n = self.ctx.field, self.ctx.ext, self.q, self.n

        def base_pow(a: int, x: int) -> int:
            return (a * F.dlog(x) * (q + 1)) % n

        def ext_pow(a: int, lam: int) -> int:
            return (a * E.dlog(lam)) % n

        kind = pi.kind
        if kind == "linear":
            (a,) = pi.params
            if c.kind == "central" or c.kind == "unipotent":
                return _merge([(1, base_pow(2 * a, c.params[0]))])
            if c.kind == "diagonal":
                x, y = c.params
                return _merge([(1, base_pow(a, F.mul(x, y)))])
            return _merge([(1, base_pow(a, E.norm(c.params[0])))])
        if kind == "principal":
            a, b = pi.params
            if c.kind == "central":
                return _merge([(q + 1, base_pow(a + b, c.params[0]))])
            if c.kind == "unipotent":
                return _merge([(1, base_pow(a + b, c.params[0]))])
            if c.kind == "diagonal":
                x, y = c.params
                return _merge([
                    (1, (base_pow(a, x) + base_pow(b, y)) % n),
                    (1, (base_pow(a, y) + base_pow(b, x)) % n),
                ])
            return ()
        if kind == "steinberg":
            (a,) = pi.params
            if c.kind == "central":
                return _merge([(q, base_pow(2 * a, c.params[0]))])
            if c.kind == "unipotent":
                return ()
            if c.kind == "diagonal":
                x, y = c.params
                return _merge([(1, base_pow(a, F.mul(x, y)))])
            return _merge([(-1, base_pow(a, E.norm(c.params[0])))])
        if kind == "cuspidal":
            (a,) = pi.params
            if c.kind == "central":
                return _merge([(q - 1, ext_pow(a, E.embed(c.params[0])))])
            if c.kind == "unipotent":
                return _merge([(-1, ext_pow(a, E.embed(c.params[0])))])
            if c.kind == "diagonal":
                return ()
            lam = c.params[0]
            return _merge([(-1, ext_pow(a, lam)), (-1, ext_pow(a, E.frobenius(lam)))])
        raise ValueError(f"unknown irrep kind {kind}")

    def monomials(self, pi: Irrep, c: ConjClass) -> Monomials:
        return self._rows[self.irrep_index[pi]][self.ctx.class_index[c]]

    def value(self, pi: Irrep, c: ConjClass) -> CycNumber:
        if pi.group != self.group or c.group != self.group:
            raise ValueError("irrep/class from a different group context")
        return CycNumber.from_monomials(self.n, self.monomials(pi, c))

    # -- Frobenius-Schur ----------------------------------------------------

    def _fs_rule(self, pi: Irrep) -> int:
        if self.group == "pgl":
            return 1
        q = self.q
        m = q - 1
        if pi.kind in ("linear", "steinberg"):
            return 1 if (2 * pi.params[0]) % m == 0 else 0
        if pi.kind == "principal":
            a, b = pi.params
            if (a + b) % m == 0:
                return 1
            if q % 2 and {a, b} == {0, m // 2}:
                return 1
            return 0
        # cuspidal: +1 exactly when the restriction to F^x is trivial
        return 1 if pi.params[0] % m == 0 else 0

    def fs_indicator(self, pi: Irrep) -> int:
        return self._fs[self.irrep_index[pi]]

    def fs_defining_sum(self, pi: Irrep) -> int:
        """(1/|G|) sum over g of chi(g^2), via class squares."""
        from .grp import mat_mul  # local to avoid cycles in readers

        ctx = self.ctx
        F = ctx.field
        acc: dict[int, int] = {}
        row = self._rows[self.irrep_index[pi]]
        for ci, c in enumerate(ctx.classes):
            rep = ctx.representative(c)
            sq_cls = ctx.classify(mat_mul(F, rep, rep))
            w = ctx.sizes[ci]
            for coef, k in row[ctx.class_index[sq_cls]]:
                acc[k] = acc.get(k, 0) + w * coef
        val = CycNumber(self.n, acc) * Fraction(1, self.order)
        r = val.as_rational()
        assert r is not None and r.denominator == 1, "FS sum must be an integer"
        return int(r)

    # -- duals and tensor twists -------------------------------------------

    def contragredient(self, pi: Irrep) -> Irrep:
        q = self.q
        m = q - 1
        ne = self.n
        if self.group == "pgl":
            return pi  # every PGL irrep here is self-dual
        if pi.kind in ("linear", "steinberg"):
            return Irrep("gl", pi.kind, ((-pi.params[0]) % m,))
        if pi.kind == "principal":
            a, b = ((-pi.params[0]) % m, (-pi.params[1]) % m)
            return Irrep("gl", "principal", (min(a, b), max(a, b)))
        a = (-pi.params[0]) % ne
        return Irrep("gl", "cuspidal", (min(a, (a * q) % ne),))

    def tensor_with_linear(self, a: int, pi: Irrep) -> Irrep:
        """chi_a (x) pi, for a GL irrep pi."""
        q = self.q
        m = q - 1
        if pi.kind == "linear":
            return Irrep("gl", "linear", ((a + pi.params[0]) % m,))
        if pi.kind == "principal":
            u, v = sorted(((a + pi.params[0]) % m, (a + pi.params[1]) % m))
            return Irrep("gl", "principal", (u, v))
        if pi.kind == "steinberg":
            return Irrep("gl", "steinberg", ((a + pi.params[0]) % m,))
        ne = self.n
        b = (pi.params[0] + a * (q + 1)) % ne
        return Irrep("gl", "cuspidal", (min(b, (b * q) % ne),))

    # -- brackets and fusion -------------------------------------------------

    def _bracket(self, pis) -> Fraction:
        """(1/|G|) sum over g of the product of the (unconjugated) characters."""
        ctx = self.ctx
        n = self.n
        rows = [self._rows[self.irrep_index[pi]] for pi in pis]
        acc: dict[int, int] = {}
        for ci in range(len(ctx.classes)):
            w = ctx.sizes[ci]
            prod = [(w, 0)]
            for row in rows:
                monos = row[ci]
                if not monos:
                    prod = []
                    break
                prod = [
                    (c1 * c2, (k1 + k2) % n) for c1, k1 in prod for c2, k2 in monos
                ]
            for coef, k in prod:
                acc[k] = acc.get(k, 0) + coef
        val = CycNumber(n, acc) * Fraction(1, self.order)
        r = val.as_rational()
        if r is None:
            raise ArithmeticError("character bracket is not rational: table bug")
        return r

    def pair_bracket(self, p1: Irrep, p2: Irrep) -> Fraction:
        return self._bracket((p1, p2))

    def triple_bracket(self, p1: Irrep, p2: Irrep, p3: Irrep) -> Fraction:
        return self._bracket((p1, p2, p3))

    def fusion_coeff(self, p1: Irrep, p2: Irrep, p3: Irrep) -> int:
        """Multiplicity of p3 inside p1 (x) p2."""
        v = self.triple_bracket(p1, p2, self.contragredient(p3))
        assert v.denominator == 1 and v >= 0, "fusion coefficient must be a non-negative integer"
        return int(v)

    # -- closed forms ----------------------------------------------------------

    def _delta_base(self, *exps: int) -> int:
        return 1 if sum(exps) % (self.q - 1) == 0 else 0

    def _delta_ext(self, *exps: int) -> int:
        return 1 if sum(exps) % self.n == 0 else 0

    def closed_form_pair(self, p1: Irrep, p2: Irrep) -> int:
        """Orthogonality-derived pair bracket <pi pi'>."""
        if self.group != "gl":
            raise ValueError("closed forms are stated for the GL context")
        q = self.q
        if p1.kind != p2.kind:
            return 0
        if p1.kind in ("linear", "steinberg"):
            return self._delta_base(p1.params[0], p2.params[0])
        if p1.kind == "principal":
            (a, b), (c, d) = p1.params, p2.params
            return self._delta_base(a, c) * self._delta_base(b, d) + self._delta_base(
                a, d
            ) * self._delta_base(b, c)
        a, b = p1.params[0], p2.params[0]
        return self._delta_ext(a, b) + self._delta_ext(a, b * q)

    def closed_form_triple(self, p1: Irrep, p2: Irrep, p3: Irrep) -> int:
        """The explicit triple bracket <pi pi' pi''>, no linear arguments."""
        if self.group != "gl":
            raise ValueError("closed forms are stated for the GL context")
        if any(p.kind == "linear" for p in (p1, p2, p3)):
            raise ValueError("reduce linear tensor factors first (reduced_bracket)")
        q = self.q
        qp = q + 1
        order = {"principal": 0, "steinberg": 1, "cuspidal": 2}
        ps = sorted((p1, p2, p3), key=lambda p: order[p.kind])
        kinds = tuple(p.kind for p in ps)
        d, dE = self._delta_base, self._delta_ext

        if kinds == ("principal", "principal", "principal"):
            (m1, m2), (n1, n2), (r1, r2) = ps[0].params, ps[1].params, ps[2].params
            return (
                d(m1, m2, n1, n2, r1, r2)
                + d(m1, n1, r1) * d(m2, n2, r2)
                + d(m2, n1, r1) * d(m1, n2, r2)
                + d(m1, n2, r1) * d(m2, n1, r2)
                + d(m1, n1, r2) * d(m2, n2, r1)
            )
        if kinds == ("principal", "principal", "steinberg"):
            (m1, m2), (n1, n2), (r,) = ps[0].params, ps[1].params, ps[2].params
            return (
                d(m1, m2, n1, n2, 2 * r)
                + d(m1, n1, r) * d(m2, n2, r)
                + d(m1, n2, r) * d(m2, n1, r)
            )
        if kinds == ("principal", "principal", "cuspidal"):
            (m1, m2), (n1, n2), (r,) = ps[0].params, ps[1].params, ps[2].params
            return d(m1, m2, n1, n2, r)  # r restricted: exponents add mod q-1
        if kinds == ("principal", "steinberg", "steinberg"):
            (m1, m2), (nn,), (r,) = ps[0].params, ps[1].params, ps[2].params
            return d(m1, m2, 2 * nn, 2 * r) + d(m1, nn, r) * d(m2, nn, r)
        if kinds == ("steinberg", "steinberg", "steinberg"):
            (m,), (nn,), (r,) = ps[0].params, ps[1].params, ps[2].params
            return d(2 * m, 2 * nn, 2 * r)
        if kinds == ("principal", "steinberg", "cuspidal"):
            (m1, m2), (nn,), (r,) = ps[0].params, ps[1].params, ps[2].params
            return d(m1, m2, 2 * nn, r)
        if kinds == ("principal", "cuspidal", "cuspidal"):
            (m1, m2), (nn,), (r,) = ps[0].params, ps[1].params, ps[2].params
            return d(m1, m2, nn, r)
        if kinds == ("steinberg", "steinberg", "cuspidal"):
            (m,), (nn,), (r,) = ps[0].params, ps[1].params, ps[2].params
            return d(2 * m, 2 * nn, r)
        if kinds == ("steinberg", "cuspidal", "cuspidal"):
            (m,), (nn,), (r,) = ps[0].params, ps[1].params, ps[2].params
            # the base character enters through the norm: exponent m*(q+1)
            val = d(2 * m, nn, r) - dE(m * qp, nn, r) - dE(m * qp, nn, r * q)
            assert val in (0, 1)
            return val
        if kinds == ("cuspidal", "cuspidal", "cuspidal"):
            (m,), (nn,), (r,) = ps[0].params, ps[1].params, ps[2].params
            val = d(m, nn, r) - (
                dE(m, nn, r)
                + dE(m * q, nn, r)
                + dE(m, nn * q, r)
                + dE(m, nn, r * q)
            )
            assert val in (0, 1)
            return val
        raise AssertionError(f"unreachable kinds {kinds}")

    def reduced_bracket(self, p1: Irrep, p2: Irrep, p3: Irrep) -> int:
        """Closed-form triple bracket for arbitrary kinds, reducing linear
        factors through the tensor-twist rules."""
        pis = [p1, p2, p3]
        linear = [p for p in pis if p.kind == "linear"]
        rest = [p for p in pis if p.kind != "linear"]
        if not linear:
            return self.closed_form_triple(p1, p2, p3)
        a = sum(p.params[0] for p in linear) % (self.q - 1)
        if not rest:
            return self._delta_base(a)
        if len(rest) == 1:
            # <chi_a pi> vanishes for every pi of dimension > 1
            return 0
        # two non-linear factors: twist one of them and use the pair bracket
        twisted = self.tensor_with_linear(a, rest[0])
        return self.closed_form_pair(twisted, rest[1])
