from collections import Counter
from fractions import Fraction

import pytest

from conftest import char_table, group_table
from gl2zeta.cyclo import CycNumber
from gl2zeta.grp import ConjClass
from gl2zeta.oracle import brute_fs, brute_fusion
from gl2zeta.reptheory import Irrep

ALL_Q = [2, 3, 4, 5, 7, 8, 9]


def test_irrep_counts_and_dims():
    for q in ALL_Q:
        T = char_table("gl", q)
        by_kind = Counter(pi.kind for pi in T.irreps)
        assert by_kind["linear"] == q - 1
        assert by_kind["principal"] == (q - 1) * (q - 2) // 2
        assert by_kind["steinberg"] == q - 1
        assert by_kind["cuspidal"] == q * (q - 1) // 2
        assert sum(d * d for d in T.dims) == T.order
        assert len(T.irreps) == len(T.ctx.classes)


def test_small_dimension_lists():
    assert sorted(char_table("gl", 2).dims) == [1, 1, 2]  # S3
    assert sorted(char_table("gl", 3).dims) == [1, 1, 2, 2, 2, 3, 3, 4]
    assert sorted(char_table("pgl", 3).dims) == [1, 1, 2, 3, 3]  # S4
    assert sorted(char_table("pgl", 2).dims) == [1, 1, 2]


def test_pgl_irrep_lists():
    for q in ALL_Q:
        T = char_table("pgl", q)
        by_kind = Counter(pi.kind for pi in T.irreps)
        if q % 2:
            assert by_kind["linear"] == 2
            assert by_kind["principal"] == (q - 3) // 2
            assert by_kind["steinberg"] == 2
            assert by_kind["cuspidal"] == (q - 1) // 2
        else:
            assert by_kind["linear"] == 1
            assert by_kind["principal"] == (q - 2) // 2
            assert by_kind["steinberg"] == 1
            assert by_kind["cuspidal"] == q // 2
        assert sum(d * d for d in T.dims) == T.order


def test_identity_column_is_dimension():
    for q in (2, 3, 4, 5):
        for g in ("gl", "pgl"):
            T = char_table(g, q)
            ide = T.ctx.classes[0]
            for pi in T.irreps:
                assert T.value(pi, ide).as_rational() == T.dim(pi)


def test_gl_table_entries():
    """Spot checks straight from the displayed character table."""
    q = 5
    T = char_table("gl", q)
    ctx = T.ctx
    F, E = ctx.field, ctx.ext
    from gl2zeta.chars import MulChar, value_power

    n = T.n
    for a in range(q - 1):
        mu = MulChar(q - 1, a)
        lin = Irrep("gl", "linear", (a,))
        st = Irrep("gl", "steinberg", (a,))
        for c in ctx.classes:
            if c.kind == "central":
                x = c.params[0]
                want = CycNumber(n, {value_power(mu.pow(2), x, E): 1})
                assert T.value(lin, c) == want
                assert T.value(st, c) == want * q
            elif c.kind == "unipotent":
                assert T.value(st, c).is_zero()
            elif c.kind == "diagonal":
                x, y = c.params
                want = CycNumber(n, {value_power(mu, F.mul(x, y), E): 1})
                assert T.value(lin, c) == want
                assert T.value(st, c) == want
            else:
                lam = c.params[0]
                want = CycNumber(n, {value_power(mu, E.norm(lam), E): 1})
                assert T.value(lin, c) == want
                assert T.value(st, c) == -1 * want
    # principal on a split class: mu1(x)mu2(y) + mu1(y)mu2(x)
    pi = next(p for p in T.irreps if p.kind == "principal")
    m1 = MulChar(q - 1, pi.params[0])
    m2 = MulChar(q - 1, pi.params[1])
    for c in ctx.classes:
        if c.kind == "diagonal":
            x, y = c.params
            want = CycNumber.from_monomials(
                n,
                [
                    (1, (value_power(m1, x, E) + value_power(m2, y, E)) % n),
                    (1, (value_power(m1, y, E) + value_power(m2, x, E)) % n),
                ],
            )
            assert T.value(pi, c) == want
        elif c.kind == "elliptic":
            assert T.value(pi, c).is_zero()
    # cuspidal: -nu(lam) - nu(conj lam) on elliptic, 0 on split
    cu = next(p for p in T.irreps if p.kind == "cuspidal")
    nu = MulChar(q * q - 1, cu.params[0])
    for c in ctx.classes:
        if c.kind == "elliptic":
            lam = c.params[0]
            want = CycNumber.from_monomials(
                n,
                [
                    (-1, value_power(nu, lam, E)),
                    (-1, value_power(nu, E.frobenius(lam), E)),
                ],
            )
            assert T.value(cu, c) == want
        elif c.kind == "diagonal":
            assert T.value(cu, c).is_zero()


def test_pgl_table_odd_q_matches_displayed_form():
    """Hard-coded displayed table for odd q: rows chi_1, chi_eps, I(mu,1),
    St, St_eps, C_nu on identity/unipotent/diag(x,1)/elliptic."""
    q = 5
    T = char_table("pgl", q)
    ctx = T.ctx
    F, E = ctx.field, ctx.ext
    from gl2zeta.chars import MulChar, epsilon_value, value_power

    n = T.n
    for c in ctx.classes:
        for pi in T.irreps:
            got = T.value(pi, c)
            if c.kind == "identity":
                want = CycNumber.from_rational(n, T.dim(pi))
            elif c.kind == "unipotent":
                want = CycNumber.from_rational(
                    n,
                    {"linear": 1, "principal": 1, "steinberg": 0, "cuspidal": -1}[
                        pi.kind
                    ],
                )
            elif c.kind == "diagonal":
                x = c.params[0]
                if pi.kind == "linear":
                    want = CycNumber.from_rational(
                        n, 1 if pi.params[0] == 0 else epsilon_value(E, x)
                    )
                elif pi.kind == "principal":
                    mu = MulChar(q - 1, pi.params[0])
                    want = CycNumber.from_monomials(
                        n,
                        [
                            (1, value_power(mu, x, E)),
                            (1, value_power(mu.inv(), x, E)),
                        ],
                    )
                elif pi.kind == "steinberg":
                    want = CycNumber.from_rational(
                        n, 1 if pi.params[0] == 0 else epsilon_value(E, x)
                    )
                else:
                    want = CycNumber.zero(n)
            else:
                lam = c.params[0]
                eps_norm = epsilon_value(E, E.norm(lam))
                if pi.kind == "linear":
                    want = CycNumber.from_rational(
                        n, 1 if pi.params[0] == 0 else eps_norm
                    )
                elif pi.kind == "principal":
                    want = CycNumber.zero(n)
                elif pi.kind == "steinberg":
                    want = CycNumber.from_rational(
                        n, -1 if pi.params[0] == 0 else -eps_norm
                    )
                else:
                    nu = MulChar(q * q - 1, pi.params[0])
                    want = CycNumber.from_monomials(
                        n,
                        [
                            (-1, value_power(nu, lam, E)),
                            (-1, value_power(nu, E.frobenius(lam), E)),
                        ],
                    )
            assert got == want, (pi, c)


def test_pgl_table_even_q_matches_displayed_form():
    q = 4
    T = char_table("pgl", q)
    ctx = T.ctx
    E = ctx.ext
    from gl2zeta.chars import MulChar, value_power

    n = T.n
    for c in ctx.classes:
        for pi in T.irreps:
            got = T.value(pi, c)
            if c.kind == "identity":
                want = CycNumber.from_rational(n, T.dim(pi))
            elif c.kind == "unipotent":
                want = CycNumber.from_rational(
                    n,
                    {"linear": 1, "principal": 1, "steinberg": 0, "cuspidal": -1}[
                        pi.kind
                    ],
                )
            elif c.kind == "diagonal":
                x = c.params[0]
                if pi.kind == "principal":
                    mu = MulChar(q - 1, pi.params[0])
                    want = CycNumber.from_monomials(
                        n,
                        [(1, value_power(mu, x, E)), (1, value_power(mu.inv(), x, E))],
                    )
                elif pi.kind == "cuspidal":
                    want = CycNumber.zero(n)
                else:
                    want = CycNumber.from_rational(n, 1)
            else:
                lam = c.params[0]
                assert E.norm(lam) == 1  # canonical norm-1 representative
                if pi.kind == "linear":
                    want = CycNumber.from_rational(n, 1)
                elif pi.kind == "principal":
                    want = CycNumber.zero(n)
                elif pi.kind == "steinberg":
                    want = CycNumber.from_rational(n, -1)
                else:
                    nu = MulChar(q * q - 1, pi.params[0])
                    want = CycNumber.from_monomials(
                        n,
                        [
                            (-1, value_power(nu, lam, E)),
                            (-1, value_power(nu, E.frobenius(lam), E)),
                        ],
                    )
            assert got == want, (pi, c)


def test_char_value_independent_of_orbit_representative():
    for q in (3, 4, 5):
        T = char_table("gl", q)
        ctx = T.ctx
        E = ctx.ext
        ne = q * q - 1
        for pi in T.irreps:
            if pi.kind == "principal":
                a, b = pi.params
                swapped_rows = []
                for c in ctx.classes:
                    alt = T._monomials(Irrep("gl", "principal", (b, a)), c)
                    assert CycNumber.from_monomials(T.n, alt) == T.value(pi, c)
            elif pi.kind == "cuspidal":
                a = pi.params[0]
                conj = (a * q) % ne
                for c in ctx.classes:
                    alt = T._monomials(Irrep("gl", "cuspidal", (conj,)), c)
                    assert CycNumber.from_monomials(T.n, alt) == T.value(pi, c)
        # class side: elliptic lam vs conj(lam)
        for c in ctx.classes:
            if c.kind != "elliptic":
                continue
            alt_cls = ConjClass("gl", "elliptic", (E.frobenius(c.params[0]),))
            for pi in T.irreps:
                assert CycNumber.from_monomials(
                    T.n, T._monomials(pi, alt_cls)
                ) == T.value(pi, c)


@pytest.mark.parametrize("q", ALL_Q)
@pytest.mark.parametrize("g", ["gl", "pgl"])
def test_row_orthogonality(g, q):
    T = char_table(g, q)
    ctx = T.ctx
    n = T.n
    nirr = len(T.irreps)
    for i in range(nirr):
        for j in range(i, nirr):
            acc = {}
            for ci in range(len(ctx.classes)):
                w = ctx.sizes[ci]
                for c1, k1 in T._rows[i][ci]:
                    for c2, k2 in T._rows[j][ci]:
                        k = (k1 - k2) % n
                        acc[k] = acc.get(k, 0) + w * c1 * c2
            got = (CycNumber(n, acc) * Fraction(1, T.order)).as_rational()
            assert got == (1 if i == j else 0)


@pytest.mark.parametrize("q", ALL_Q)
@pytest.mark.parametrize("g", ["gl", "pgl"])
def test_column_orthogonality(g, q):
    T = char_table(g, q)
    ctx = T.ctx
    n = T.n
    ncls = len(ctx.classes)
    for a in range(ncls):
        for b in range(a, ncls):
            acc = {}
            for i in range(len(T.irreps)):
                for c1, k1 in T._rows[i][a]:
                    for c2, k2 in T._rows[i][b]:
                        k = (k1 - k2) % n
                        acc[k] = acc.get(k, 0) + c1 * c2
            got = CycNumber(n, acc).as_rational()
            want = Fraction(T.order, ctx.sizes[a]) if a == b else Fraction(0)
            assert got == want


@pytest.mark.parametrize("q", ALL_Q)
def test_fs_rules_match_defining_sum(q):
    for g in ("gl", "pgl"):
        T = char_table(g, q)
        for pi in T.irreps:
            rule = T.fs_indicator(pi)
            assert rule in (0, 1)  # -1 never occurs
            assert rule == T.fs_defining_sum(pi)
            if g == "pgl":
                assert rule == 1


def test_fs_examples():
    T = char_table("gl", 3)
    assert T.fs_indicator(Irrep("gl", "linear", (0,))) == 1
    # cuspidal with nontrivial restriction -> 0
    cusp = next(
        pi for pi in T.irreps if pi.kind == "cuspidal" and pi.params[0] % 2 == 1
    )
    assert T.fs_indicator(cusp) == 0
    # I(1, eps) -> +1 (q odd)
    assert T.fs_indicator(Irrep("gl", "principal", (0, 1))) == 1


@pytest.mark.parametrize("q", ALL_Q)
def test_involution_dimension_identity(q):
    T = char_table("gl", q)
    t = q * q - 1 if q % 2 == 0 else q * q + q + 1
    assert 1 + t == sum(
        d for d, pi in zip(T.dims, T.irreps) if T.fs_indicator(pi) != 0
    )


def test_fs_element_level_small_q():
    for g, q in (("gl", 2), ("gl", 3), ("pgl", 3), ("gl", 4), ("pgl", 5)):
        T = char_table(g, q)
        table = group_table(g, q)
        for pi in T.irreps:
            assert brute_fs(table, T, pi) == T.fs_indicator(pi)


def test_contragredient():
    for g, q in (("gl", 3), ("gl", 4), ("gl", 5), ("pgl", 3), ("pgl", 4)):
        T = char_table(g, q)
        for pi in T.irreps:
            cg = T.contragredient(pi)
            assert cg in T.irrep_index
            assert T.contragredient(cg) == pi
            for c in T.ctx.classes:
                assert T.value(cg, c) == T.value(pi, c).conj()
    T = char_table("gl", 3)
    assert T.contragredient(Irrep("gl", "linear", (0,))) == Irrep("gl", "linear", (0,))
    assert T.contragredient(Irrep("gl", "steinberg", (1,))) == Irrep(
        "gl", "steinberg", (1,)
    )


def test_pgl_values_equal_gl_values_on_lifts():
    for q in (3, 4, 5, 7, 8):
        P = char_table("pgl", q)
        G = char_table("gl", q)
        for pi in P.irreps:
            gl_pi, _ = P._lift(pi, P.ctx.classes[0])
            for c in P.ctx.classes:
                _, gl_c = P._lift(pi, c)
                got = P.value(pi, c)
                want = CycNumber.from_monomials(G.n, G._monomials(gl_pi, gl_c))
                assert got == want


# -- fusion ------------------------------------------------------------------


@pytest.mark.parametrize("q", [3, 4, 5])
def test_fusion_closed_forms_exhaustive(q):
    T = char_table("gl", q)
    irr = T.irreps
    for i in range(len(irr)):
        for j in range(i, len(irr)):
            for k in range(j, len(irr)):
                got = T.triple_bracket(irr[i], irr[j], irr[k])
                assert got.denominator == 1 and got >= 0
                assert got == T.reduced_bracket(irr[i], irr[j], irr[k])


def test_fusion_element_level_oracle_q3():
    T = char_table("gl", 3)
    table = group_table("gl", 3)
    irr = T.irreps
    for i in range(len(irr)):
        for j in range(i, len(irr)):
            for k in range(j, len(irr)):
                assert T.triple_bracket(irr[i], irr[j], irr[k]) == brute_fusion(
                    table, T, irr[i], irr[j], irr[k]
                )


def test_pair_bracket_closed_forms():
    for q in (3, 4, 5):
        T = char_table("gl", q)
        irr = T.irreps
        for p1 in irr:
            for p2 in irr:
                assert T.pair_bracket(p1, p2) == T.closed_form_pair(p1, p2)
                # orthogonality reading: <pi pi'> = [pi' = contragredient pi]
                assert T.closed_form_pair(p1, p2) == (
                    1 if p2 == T.contragredient(p1) else 0
                )


def test_steinberg_cube():
    for q in (2, 3, 4, 5):
        T = char_table("gl", q)
        st = Irrep("gl", "steinberg", (0,))
        assert T.triple_bracket(st, st, st) == 1


def test_cuspidal_cube_q3_element_sum():
    T = char_table("gl", 3)
    table = group_table("gl", 3)
    cu = next(pi for pi in T.irreps if pi.kind == "cuspidal" and pi.params[0] % 2 == 0)
    got = T.triple_bracket(cu, cu, cu)
    assert got == brute_fusion(table, T, cu, cu, cu)


def test_bracket_symmetry():
    T = char_table("gl", 4)
    irr = T.irreps
    import random

    rng = random.Random(2)
    for _ in range(40):
        a, b, c = rng.choice(irr), rng.choice(irr), rng.choice(irr)
        v = T.triple_bracket(a, b, c)
        assert v == T.triple_bracket(b, a, c) == T.triple_bracket(c, b, a)


def test_closed_form_triple_rejects_linear():
    T = char_table("gl", 3)
    lin = Irrep("gl", "linear", (0,))
    st = Irrep("gl", "steinberg", (0,))
    with pytest.raises(ValueError):
        T.closed_form_triple(lin, st, st)
    # the reduction helper handles it
    assert T.reduced_bracket(lin, st, st) == T.triple_bracket(lin, st, st)


def test_last_two_bracket_families_are_zero_or_one():
    """The St-C-C and C-C-C closed forms carry minus signs but must land
    in {0,1}; checked exhaustively (the formulas assert it as well)."""
    for q in (3, 4, 5):
        T = char_table("gl", q)
        sts = [p for p in T.irreps if p.kind == "steinberg"]
        cus = [p for p in T.irreps if p.kind == "cuspidal"]
        for s in sts:
            for c1 in cus:
                for c2 in cus:
                    assert T.closed_form_triple(s, c1, c2) in (0, 1)
        for c1 in cus:
            for c2 in cus:
                for c3 in cus:
                    assert T.closed_form_triple(c1, c2, c3) in (0, 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_fusion_dimension_identity(q):
    T = char_table("gl", q)
    irr = T.irreps
    for i in range(len(irr)):
        for j in range(i, len(irr)):
            total = sum(
                T.fusion_coeff(irr[i], irr[j], irr[k]) * T.dims[k]
                for k in range(len(irr))
            )
            assert total == T.dims[i] * T.dims[j]


def test_tensor_with_linear_is_permutation():
    for q in (3, 4, 5):
        T = char_table("gl", q)
        for a in range(q - 1):
            lin = Irrep("gl", "linear", (a,))
            for pi in T.irreps:
                twist = T.tensor_with_linear(a, pi)
                assert twist in T.irrep_index
                for rho in T.irreps:
                    coeff = T.fusion_coeff(lin, pi, rho)
                    assert coeff == (1 if rho == twist else 0)
