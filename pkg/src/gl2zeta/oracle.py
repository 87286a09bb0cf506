"""Brute-force verification engine.

Everything here is element-level enumeration over an explicit group table:
commutator counts, squaring counts, homomorphism counts, conjugation
orbits.  It shares only the field/matrix arithmetic with the formula-side
modules and never consults the character table, so agreement between the
two paths is a genuine cross-check.

Hom-set counts are assembled as exact integer convolutions of class
functions built by enumeration, so only the theta-building loops are
bounded by the cap; genus and boundary count are then free.
"""

from __future__ import annotations

from fractions import Fraction

from .ffield import CapExceeded
from .grp import ConjClass, mat_inv, mat_mul

DEFAULT_ELEMENT_CAP = 1200


class ClassFunction:
    """Exact function on conjugacy classes (values indexed by class order)."""

    def __init__(self, ctx, values):
        values = list(values)
        if len(values) != len(ctx.classes):
            raise ValueError("class function must cover every class")
        self.ctx = ctx
        self.values = values

    def __call__(self, c: ConjClass):
        return self.values[self.ctx.class_index[c]]

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.ctx is other.ctx and all(
            a == b for a, b in zip(self.values, other.values)
        )

    def __repr__(self):
        return f"ClassFunction({self.values})"


class GroupTable:
    """Explicit element list with multiplication, inverse and class data."""

    def __init__(self, ctx, cap: int = DEFAULT_ELEMENT_CAP):
        if ctx.order > cap:
            raise CapExceeded(
                f"|{ctx.group}(2,F_{ctx.q})| = {ctx.order} exceeds the enumeration cap {cap}"
            )
        self.ctx = ctx
        F = ctx.field
        self.elements = list(ctx.enumerate_group())
        assert len(self.elements) == ctx.order
        self.index = {m: i for i, m in enumerate(self.elements)}
        self.n = len(self.elements)
        normalize = ctx.normalize if ctx.group == "pgl" else (lambda m: m)
        self._normalize = normalize
        self.identity = self.index[normalize((1, 0, 0, 1))]
        self.inv = [self.index[normalize(mat_inv(F, m))] for m in self.elements]
        self.class_of = [ctx.class_index[ctx.classify(m)] for m in self.elements]
        self._mul_rows: dict[int, list[int]] = {}
        self._theta: dict[str, list[int]] = {}
        self._struct = None

    def mul(self, i: int, j: int) -> int:
        row = self._mul_rows.get(i)
        if row is None:
            F = self.ctx.field
            mi = self.elements[i]
            row = [
                self.index[self._normalize(mat_mul(F, mi, mj))] for mj in self.elements
            ]
            self._mul_rows[i] = row
        return row[j]

    # -- enumerative class functions --------------------------------------

    def theta_torus(self) -> ClassFunction:
        """theta(k) = #{(A,B): A B A^-1 B^-1 = k}, by full pair enumeration."""
        if "torus" not in self._theta:
            counts = [0] * len(self.ctx.classes)
            per_element = [0] * self.n
            for a in range(self.n):
                row_a = [self.mul(a, b) for b in range(self.n)]
                for b in range(self.n):
                    # [a,b] = (ab)(ba)^-1
                    k = self.mul(row_a[b], self.inv[self.mul(b, a)])
                    per_element[k] += 1
            for k, cnt in enumerate(per_element):
                counts[self.class_of[k]] += cnt
            sizes = self.ctx.sizes
            values = [counts[ci] // sizes[ci] for ci in range(len(counts))]
            assert [v * s for v, s in zip(values, sizes)] == counts, "not a class function"
            assert sum(counts) == self.n * self.n
            self._theta["torus"] = values
        return ClassFunction(self.ctx, self._theta["torus"])

    def theta_square(self) -> ClassFunction:
        """theta(g) = #{h: h^2 = g}."""
        if "square" not in self._theta:
            per_element = [0] * self.n
            for h in range(self.n):
                per_element[self.mul(h, h)] += 1
            counts = [0] * len(self.ctx.classes)
            for k, cnt in enumerate(per_element):
                counts[self.class_of[k]] += cnt
            sizes = self.ctx.sizes
            values = [counts[ci] // sizes[ci] for ci in range(len(counts))]
            assert [v * s for v, s in zip(values, sizes)] == counts
            assert sum(counts) == self.n
            self._theta["square"] = values
        return ClassFunction(self.ctx, self._theta["square"])

    def delta_identity(self) -> ClassFunction:
        values = [0] * len(self.ctx.classes)
        values[self.class_of[self.identity]] = 1
        return ClassFunction(self.ctx, values)

    def class_indicator(self, c: ConjClass) -> ClassFunction:
        values = [0] * len(self.ctx.classes)
        values[self.ctx.class_index[c]] = 1
        return ClassFunction(self.ctx, values)

    # -- convolution -------------------------------------------------------

    def _structure_constants(self):
        """K[A][B][C] = #{(a,b) in A x B : ab = rep(C)} (counting convolution)."""
        if self._struct is None:
            ncls = len(self.ctx.classes)
            K = [[[0] * ncls for _ in range(ncls)] for _ in range(ncls)]
            cls = self.class_of
            for a in range(self.n):
                ca = cls[a]
                Ka = K[ca]
                for b in range(self.n):
                    Ka[cls[b]][cls[self.mul(a, b)]] += 1
            sizes = self.ctx.sizes
            for A in range(ncls):
                for B in range(ncls):
                    for C in range(ncls):
                        assert K[A][B][C] % sizes[C] == 0
                        K[A][B][C] //= sizes[C]
            self._struct = K
        return self._struct

    def convolve(self, f: ClassFunction, g: ClassFunction) -> ClassFunction:
        """Counting convolution (f * g)(x) = sum over ab = x of f(a) g(b)."""
        K = self._structure_constants()
        ncls = len(self.ctx.classes)
        out = [0] * ncls
        for A in range(ncls):
            fa = f.values[A]
            if not fa:
                continue
            KA = K[A]
            for B in range(ncls):
                gb = g.values[B]
                if not gb:
                    continue
                w = fa * gb
                row = KA[B]
                for C in range(ncls):
                    if row[C]:
                        out[C] += w * row[C]
        return ClassFunction(self.ctx, out)


# -- hom-set counting ---------------------------------------------------------


def _theta_range_worker(args):
    group, q, kind, start, stop, cap = args
    from .grp import make_context

    table = GroupTable(make_context(group, q), cap=cap)
    per = [0] * table.n
    if kind == "torus":
        for a in range(start, stop):
            for b in range(table.n):
                per[table.mul(table.mul(a, b), table.inv[table.mul(b, a)])] += 1
    else:
        for h in range(start, stop):
            per[table.mul(h, h)] += 1
    return per


def compute_theta(table: GroupTable, kind: str, jobs: int = 1) -> ClassFunction:
    """theta_torus / theta_square, optionally split over worker processes
    by disjoint element-index ranges (integer-sum reduction)."""
    if kind not in ("torus", "square"):
        raise ValueError("kind must be 'torus' or 'square'")
    if jobs <= 1 or table.n < 64:
        return table.theta_torus() if kind == "torus" else table.theta_square()
    if kind in table._theta:
        return ClassFunction(table.ctx, table._theta[kind])
    import multiprocessing

    ctx = table.ctx
    bounds = [table.n * i // jobs for i in range(jobs + 1)]
    args = [
        (ctx.group, ctx.q, kind, bounds[i], bounds[i + 1], max(ctx.order, 2))
        for i in range(jobs)
    ]
    with multiprocessing.Pool(jobs) as pool:
        partials = pool.map(_theta_range_worker, args)
    per_element = [sum(col) for col in zip(*partials)]
    counts = [0] * len(ctx.classes)
    for k, cnt in enumerate(per_element):
        counts[table.class_of[k]] += cnt
    values = [counts[ci] // ctx.sizes[ci] for ci in range(len(counts))]
    assert [v * s for v, s in zip(values, ctx.sizes)] == counts
    table._theta[kind] = values
    return ClassFunction(ctx, values)


def brute_hom_count(table: GroupTable, spec) -> int:
    """|Hom(pi_1(surface), G)| with optional boundary-class constraints."""
    if not spec.orientable and spec.genus < 1:
        raise ValueError("non-orientable surfaces need genus >= 1")
    f = table.delta_identity()
    theta = table.theta_torus() if spec.orientable else table.theta_square()
    for _ in range(spec.genus):
        f = table.convolve(f, theta)
    for c in spec.boundaries:
        f = table.convolve(f, table.class_indicator(c))
    val = f(table.ctx.classes[table.class_of[table.identity]])
    assert val >= 0
    return val


def _hom_count_subset(table: GroupTable, members: list[int], spec) -> int:
    """|Hom| into the subgroup given by element indices, boundaries still
    constrained to the ambient conjugacy classes.  Element-space dynamic
    programming; fine for the small centralizers this is used on."""
    mset = set(members)
    pos = {g: i for i, g in enumerate(members)}
    m = len(members)
    if spec.orientable:
        theta = [0] * m
        for a in members:
            for b in members:
                k = table.mul(table.mul(a, b), table.inv[table.mul(b, a)])
                theta[pos[k]] += 1
    else:
        theta = [0] * m
        for h in members:
            theta[pos[table.mul(h, h)]] += 1
    vec = [0] * m
    vec[pos[table.identity]] = 1
    for _ in range(spec.genus):
        out = [0] * m
        for i, g in enumerate(members):
            vi = vec[i]
            if not vi:
                continue
            for j, h in enumerate(members):
                if theta[j]:
                    out[pos[table.mul(g, h)]] += vi * theta[j]
        vec = out
    for c in spec.boundaries:
        ci = table.ctx.class_index[c]
        sel = [g for g in members if table.class_of[g] == ci]
        out = [0] * m
        for i, g in enumerate(members):
            vi = vec[i]
            if not vi:
                continue
            for h in sel:
                out[pos[table.mul(g, h)]] += vi
        vec = out
    return vec[pos[table.identity]]


def brute_quotient_count(table: GroupTable, spec, method: str = "burnside") -> int:
    """|Hom(...)/Ad G| by Burnside over centralizers, or by explicit orbit
    partition of the Hom-set (method="orbits", tiny cases only)."""
    if method == "orbits":
        return _orbit_quotient_count(table, spec)
    if method != "burnside":
        raise ValueError("method must be 'burnside' or 'orbits'")
    total = 0
    for ci, c in enumerate(table.ctx.classes):
        rep = next(g for g in range(table.n) if table.class_of[g] == ci)
        members = [h for h in range(table.n) if table.mul(h, rep) == table.mul(rep, h)]
        fixed = _hom_count_subset(table, members, spec)
        total += table.ctx.sizes[ci] * fixed
    assert total % table.n == 0, "Burnside sum must divide evenly"
    return total // table.n


def _orbit_quotient_count(table: GroupTable, spec) -> int:
    tuples = _enumerate_hom_tuples(table, spec)
    seen: set[tuple] = set()
    orbits = 0
    for t in tuples:
        if t in seen:
            continue
        orbits += 1
        for p in range(table.n):
            pinv = table.inv[p]
            conj = tuple(table.mul(table.mul(p, g), pinv) for g in t)
            seen.add(conj)
    return orbits


def _enumerate_hom_tuples(table: GroupTable, spec) -> list[tuple]:
    """All solutions of the surface-group relation, as element-index tuples.

    Exponential in genus; guarded by a hard size check.
    """
    n = table.n
    g, r = spec.genus, len(spec.boundaries)
    size = 2 * g + r if spec.orientable else g + r
    if n**size > 4_000_000:
        raise CapExceeded("orbit enumeration too large; use method='burnside'")
    boundary_sets = [
        [x for x in range(n) if table.class_of[x] == table.ctx.class_index[c]]
        for c in spec.boundaries
    ]
    out = []

    def extend(prefix: tuple, acc: int, depth: int):
        # acc = product of the relator so far
        if depth == size:
            if acc == table.identity:
                out.append(prefix)
            return
        if spec.orientable and depth < 2 * g:
            if depth % 2 == 0:
                for a in range(n):
                    extend(prefix + (a,), acc, depth + 1)
            else:
                a = prefix[-1]
                for b in range(n):
                    comm = table.mul(table.mul(a, b), table.inv[table.mul(b, a)])
                    extend(prefix + (b,), table.mul(acc, comm), depth + 1)
            return
        if not spec.orientable and depth < g:
            for x in range(n):
                extend(prefix + (x,), table.mul(acc, table.mul(x, x)), depth + 1)
            return
        bi = depth - (2 * g if spec.orientable else g)
        for x in boundary_sets[bi]:
            extend(prefix + (x,), table.mul(acc, x), depth + 1)

    extend((), table.identity, 0)
    return out


# -- element-level spectral checks ---------------------------------------------


def brute_fs(table: GroupTable, char_table, pi) -> int:
    """(1/|G|) sum over g of chi_pi(g^2), as an element-level sum."""
    from .cyclo import CycNumber

    n = char_table.n
    acc: dict[int, int] = {}
    for g in range(table.n):
        sq_cls = table.class_of[table.mul(g, g)]
        for coef, k in char_table._rows[char_table.irrep_index[pi]][sq_cls]:
            acc[k] = acc.get(k, 0) + coef
    val = (CycNumber(n, acc) * Fraction(1, table.n)).as_rational()
    if val is None or val.denominator != 1:
        raise ArithmeticError("Frobenius-Schur sum is not an integer: table bug")
    return int(val)


def brute_fusion(table: GroupTable, char_table, p1, p2, p3) -> int:
    """(1/|G|) sum over g of chi1 chi2 chi3 (g), element level."""
    from .cyclo import CycNumber

    n = char_table.n
    rows = [char_table._rows[char_table.irrep_index[p]] for p in (p1, p2, p3)]
    acc: dict[int, int] = {}
    for g in range(table.n):
        ci = table.class_of[g]
        prod = [(1, 0)]
        for row in rows:
            monos = row[ci]
            if not monos:
                prod = []
                break
            prod = [(c1 * c2, (k1 + k2) % n) for c1, k1 in prod for c2, k2 in monos]
        for coef, k in prod:
            acc[k] = acc.get(k, 0) + coef
    val = (CycNumber(n, acc) * Fraction(1, table.n)).as_rational()
    if val is None or val.denominator != 1:
        raise ArithmeticError("fusion sum is not an integer: table bug")
    return int(val)
