"""Representation zeta functions for GL(2,F_q) and PGL(2,F_q).

Every evaluator comes in two flavours: a generic sum driven by the exact
character table, and a closed form in q.  Integer arguments give exact
rationals; other arguments go through complex floats.

Three of the published closed forms needed repair to agree with the
character table (each mismatch is caught by the generic/closed equality
tests): the unipotent one-insertion forms use the cuspidal dimension
q - 1 in their last denominator, and the all-elliptic r-insertion forms
carry the quadratic-character terms spelled out in `_insert_elliptic_*`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from numbers import Integral

from .chars import epsilon_E_value, epsilon_value
from .cyclo import CycNumber
from .grp import ConjClass
from .reptheory import CharacterTable


class ClosedFormUnavailable(ValueError):
    """The insertion pattern has no published closed form."""


def _is_int(s) -> bool:
    return isinstance(s, Integral)


def _ipow(base: int, s, shift: int = 0):
    """base^(-(s+shift)), exact for integral s, complex otherwise."""
    if _is_int(s):
        return Fraction(base) ** (-(int(s) + shift))
    return complex(base) ** (-(s + shift))


def zeta(table: CharacterTable, s):
    """Sum of dim(pi)^(-s) over the irreducible representations."""
    if _is_int(s):
        return sum((Fraction(d) ** (-int(s)) for d in table.dims), Fraction(0))
    return sum(complex(d) ** (-s) for d in table.dims)


def zeta_fs(table: CharacterTable, eps: int, s):
    """zeta restricted to irreps with the given Frobenius-Schur indicator."""
    if eps not in (-1, 0, 1):
        raise ValueError("eps must be -1, 0 or +1")
    dims = [d for d, pi in zip(table.dims, table.irreps) if table.fs_indicator(pi) == eps]
    if _is_int(s):
        return sum((Fraction(d) ** (-int(s)) for d in dims), Fraction(0))
    return sum(complex(d) ** (-s) for d in dims)


def zeta_insert(table: CharacterTable, insertions, s):
    """Generic r-insertion zeta: sum of prod chi_pi(gamma_j) / dim^(s+r)."""
    insertions = tuple(insertions)
    if not insertions:
        raise ValueError("need at least one insertion")
    for c in insertions:
        if c.group != table.group:
            raise ValueError("insertion from a different group context")
    r = len(insertions)
    n = table.n
    cols = [table.ctx.class_index[c] for c in insertions]
    if _is_int(s):
        acc: dict[int, Fraction] = {}
        for i, pi in enumerate(table.irreps):
            w = Fraction(table.dims[i]) ** (-(int(s) + r))
            prod = [(w, 0)]
            for ci in cols:
                monos = table._rows[i][ci]
                if not monos:
                    prod = []
                    break
                prod = [(c1 * c2, (k1 + k2) % n) for c1, k1 in prod for c2, k2 in monos]
            for coef, k in prod:
                acc[k] = acc.get(k, 0) + coef
        val = CycNumber(n, acc).as_rational()
        if val is None:
            raise ArithmeticError("insertion zeta is not rational: table bug")
        return val
    total = 0j
    for i, pi in enumerate(table.irreps):
        term = complex(table.dims[i]) ** (-(s + r))
        for ci, c in zip(cols, insertions):
            term *= CycNumber.from_monomials(n, table._rows[i][ci]).to_float()
        total += term
    return total


def zeta_insert_elements(table: CharacterTable, matrices, s):
    """Convenience wrapper: classify raw matrices, then insert their classes."""
    classes = [table.ctx.classify(m) for m in matrices]
    return zeta_insert(table, classes, s)


# -- closed forms -------------------------------------------------------------


def zeta_closed_gl(q: int, s):
    return (
        (q - 1)
        + Fraction(q - 1) * (q - 2) / 2 * _ipow(q + 1, s)
        + (q - 1) * _ipow(q, s)
        + Fraction(q - 1) * q / 2 * _ipow(q - 1, s)
    )


def zeta_closed_pgl(q: int, s):
    if q % 2:
        return (
            2
            + Fraction(q - 3, 2) * _ipow(q + 1, s)
            + 2 * _ipow(q, s)
            + Fraction(q - 1, 2) * _ipow(q - 1, s)
        )
    return (
        1
        + Fraction(q - 2, 2) * _ipow(q + 1, s)
        + _ipow(q, s)
        + Fraction(q, 2) * _ipow(q - 1, s)
    )


def zeta_fs_closed_gl(q: int, eps: int, s):
    if eps == -1:
        return Fraction(0)
    if eps == 1:
        if q % 2:
            return (
                2
                + Fraction(q - 1, 2) * _ipow(q + 1, s)
                + 2 * _ipow(q, s)
                + Fraction(q - 1, 2) * _ipow(q - 1, s)
            )
        return (
            1
            + Fraction(q - 2, 2) * _ipow(q + 1, s)
            + _ipow(q, s)
            + Fraction(q, 2) * _ipow(q - 1, s)
        )
    return zeta_closed_gl(q, s) - zeta_fs_closed_gl(q, 1, s)


def zeta_fs_closed_pgl(q: int, eps: int, s):
    if eps in (-1, 0):
        return Fraction(0)
    return zeta_closed_pgl(q, s)


def _deltas(table, x) -> tuple[int, int]:
    """([x == 1], [x^2 == 1]) for a base-field element."""
    F = table.ctx.field
    return (1 if x == 1 else 0, 1 if F.mul(x, x) == 1 else 0)


def _gl_insert_closed(table: CharacterTable, c: ConjClass, s):
    q = table.q
    F, E = table.ctx.field, table.ctx.ext
    half = Fraction(1, 2)
    if c.kind == "central":
        x = c.params[0]
        dx, dx2 = _deltas(table, x)
        return (
            (q - 1) * dx2
            + half * _ipow(q + 1, s) * ((q - 1) ** 2 * dx - (q - 1) * dx2)
            + _ipow(q, s) * (q - 1) * dx2
            + half * _ipow(q - 1, s) * ((q * q - 1) * dx - (q - 1) * dx2)
        )
    if c.kind == "unipotent":
        x = c.params[0]
        dx, dx2 = _deltas(table, x)
        return (
            (q - 1) * dx2
            + half * _ipow(q + 1, s, 1) * ((q - 1) ** 2 * dx - (q - 1) * dx2)
            - half * _ipow(q - 1, s, 1) * ((q * q - 1) * dx - (q - 1) * dx2)
        )
    if c.kind == "diagonal":
        x, y = c.params
        dx = 1 if x == 1 else 0
        dy = 1 if y == 1 else 0
        dxy = 1 if F.mul(x, y) == 1 else 0
        return (
            (q - 1) * dxy
            + _ipow(q + 1, s, 1) * ((q - 1) ** 2 * dx * dy - (q - 1) * dxy)
            + _ipow(q, s, 1) * (q - 1) * dxy
        )
    lam = c.params[0]
    dnorm = 1 if E.norm(lam) == 1 else 0
    dlam = 1 if lam == E.pack(1, 0) else 0  # always 0 for elliptic parameters
    return (
        (q - 1) * dnorm
        - (q - 1) * _ipow(q, s, 1) * dnorm
        - (q * q - 1) * _ipow(q - 1, s, 1) * dlam
        + (q - 1) * _ipow(q - 1, s, 1) * dnorm
    )


def _pgl_insert_unipotent(table: CharacterTable, s):
    # last denominator is the cuspidal dimension q - 1
    q = table.q
    if q % 2:
        return (
            2
            + Fraction(q - 3, 2) * _ipow(q + 1, s, 1)
            - Fraction(q - 1, 2) * _ipow(q - 1, s, 1)
        )
    return (
        1
        + Fraction(q - 2, 2) * _ipow(q + 1, s, 1)
        - Fraction(q, 2) * _ipow(q - 1, s, 1)
    )


def _pgl_insert_diagonal(table: CharacterTable, xs: tuple, s):
    q = table.q
    F, E = table.ctx.field, table.ctx.ext
    r = len(xs)
    half = Fraction(1, 2)
    eta_sum = 0
    for signs in product((1, -1), repeat=r):
        prod = 1
        for x, sg in zip(xs, signs):
            prod = F.mul(prod, x if sg == 1 else F.inv(x))
        term = (q - 1) * (1 if prod == 1 else 0) - 1
        if q % 2:
            term -= epsilon_value(E, prod)
        eta_sum += term
    main = 1 + _ipow(q, s, r)
    if q % 2:
        x_all = 1
        for x in xs:
            x_all = F.mul(x_all, x)
        main = main * (1 + epsilon_value(E, x_all))
    return main + half * _ipow(q + 1, s, r) * eta_sum


def _pgl_insert_elliptic(table: CharacterTable, lams: tuple, s):
    q = table.q
    F, E = table.ctx.field, table.ctx.ext
    r = len(lams)
    half = Fraction(1, 2)
    sign = (-1) ** r
    eta_sum = 0
    for flags in product((False, True), repeat=r):
        prod = E.pack(1, 0)
        for lam, conj in zip(lams, flags):
            prod = E.mul(prod, E.frobenius(lam) if conj else lam)
        term = (q + 1) * (1 if E.in_base(prod) else 0) - 1
        if q % 2:
            term -= epsilon_E_value(E, prod)
        eta_sum += term
    main = 1 + sign * _ipow(q, s, r)
    if q % 2:
        norms = 1
        for lam in lams:
            norms = F.mul(norms, E.norm(lam))
        main = main * (1 + epsilon_value(E, norms))
    return main + sign * half * _ipow(q - 1, s, r) * eta_sum


def _pgl_insert_mixed(table: CharacterTable, xs: tuple, lams: tuple, s):
    q = table.q
    F, E = table.ctx.field, table.ctx.ext
    r = len(xs) + len(lams)
    n_ell = len(lams)
    main = 1 + (-1) ** n_ell * _ipow(q, s, r)
    if q % 2 == 0:
        return main
    prod = 1
    for x in xs:
        prod = F.mul(prod, x)
    for lam in lams:
        prod = F.mul(prod, E.norm(lam))
    return main * (1 + epsilon_value(E, prod))


def zeta_insert_closed(table: CharacterTable, insertions, s):
    """Closed-form r-insertion zeta; raises when no closed form applies."""
    insertions = tuple(insertions)
    if not insertions:
        raise ValueError("need at least one insertion")
    r = len(insertions)
    if table.group == "gl":
        if r != 1:
            raise ClosedFormUnavailable("GL closed forms cover one insertion")
        return _gl_insert_closed(table, insertions[0], s)
    kinds = tuple(c.kind for c in insertions)
    if r == 1 and kinds == ("unipotent",):
        return _pgl_insert_unipotent(table, s)
    if all(k == "diagonal" for k in kinds):
        return _pgl_insert_diagonal(table, tuple(c.params[0] for c in insertions), s)
    if all(k == "elliptic" for k in kinds):
        return _pgl_insert_elliptic(table, tuple(c.params[0] for c in insertions), s)
    if set(kinds) == {"diagonal", "elliptic"}:
        xs = tuple(c.params[0] for c in insertions if c.kind == "diagonal")
        lams = tuple(c.params[0] for c in insertions if c.kind == "elliptic")
        return _pgl_insert_mixed(table, xs, lams, s)
    raise ClosedFormUnavailable(f"no closed form for insertion pattern {kinds}")


# -- quantum double -----------------------------------------------------------


def zeta_double(table: CharacterTable, s):
    """zeta of the Drinfeld double of GL(2,F_q): sum over pairs of a
    conjugacy class and an irreducible of its centralizer."""
    if table.group != "gl":
        raise ValueError("the double is computed for the GL context")
    ctx = table.ctx
    total = Fraction(0) if _is_int(s) else 0j
    for ci, c in enumerate(ctx.classes):
        cent = ctx.centralizer(c)
        osize = ctx.sizes[ci]
        if cent.structure == "full":
            # irreps of the full group, each Pi = (O, rho) of dim |O|*dim(rho)
            for d in table.dims:
                total += _ipow(osize * d, s)
        else:
            # abelian centralizer: |C| one-dimensional characters
            total += cent.order * _ipow(osize, s)
    return total


def zeta_double_closed(q: int, s):
    # Denominator bases are the dimensions |O|*dim(rho) of the double's
    # irreps, i.e. the orbit sizes for the abelian-centralizer classes.
    return (
        (q - 1) ** 2
        + Fraction((q - 1) ** 2 * (q - 2), 2) * _ipow(q + 1, s)
        + (q - 1) ** 2 * _ipow(q, s)
        + Fraction((q - 1) ** 2 * q, 2) * _ipow(q - 1, s)
        + q * (q - 1) ** 2 * _ipow(q * q - 1, s)
        + Fraction((q - 1) ** 3 * (q - 2), 2) * _ipow(q * (q + 1), s)
        + Fraction(q * (q - 1) ** 2 * (q + 1), 2) * _ipow(q * (q - 1), s)
    )
