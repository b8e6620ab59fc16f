"""
Cellular structures on the degenerate cyclotomic Hecke algebra.

Four families of cellular bases are realized, all indexed by pairs of
standard tableaux of multipartition shapes:

- kind "m":   d(s)^{-1} . pi_[lam] . (trivial/sign Young sums twisted by c) . d(t)
- kind "n":   d(s)^{-1} . pi~_[lam] . (sign/trivial Young sums twisted by c) . d(t)
- kind "mxi": the c = 0 "m" family with the omega entries permuted by xi
- kind "nxi": the c = 0 "n" family with the omega entries permuted by xi

From a family we compute the change of basis to the monomial basis (its
invertibility doubles as the spanning proof), cell modules with generator
matrices and Gram forms, simple quotients, joint generalized x-eigenvalues
(blocks), contragredient duals and exact intertwiner spaces. Everything is a
rational matrix; no floats anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraContext, Element, tau_hat
from .combinatorics import (
    Multipartition,
    Perm,
    Tableau,
    bracket,
    conjugate,
    d_of,
    enumerate_multipartitions,
    mp_size,
    perm_inverse,
    perm_is_valid,
    perm_mul,
    perm_sign,
    row_reading_tableau,
    standard_tableaux,
    tableau_shape,
    w_lambda,
)
from .linalg import (
    Matrix,
    SingularMatrixError,
    inverse,
    left_nullspace,
    mat_identity,
    mat_pow,
    mat_sub,
    rank,
    rref,
    solve_left,
    transpose,
    vec_mat,
)


@dataclass(frozen=True)
class BasisFamily:
    kind: str                      # "m" | "n" | "mxi" | "nxi"
    c: tuple[int, ...] | None = None
    xi: Perm | None = None

    def __post_init__(self):
        if self.kind in ("m", "n"):
            if self.c is None or any(b not in (0, 1) for b in self.c):
                raise ValueError("m/n family needs a 01-sequence c")
            if self.xi is not None:
                raise ValueError("m/n family takes no xi")
        elif self.kind in ("mxi", "nxi"):
            if self.xi is None or not perm_is_valid(self.xi):
                raise ValueError("mxi/nxi family needs a permutation xi")
            if self.c is not None:
                raise ValueError("mxi/nxi family takes no c")
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")

    def label(self) -> str:
        if self.kind in ("m", "n"):
            return f"{self.kind}[{','.join(map(str, self.c))}]"
        return f"{self.kind}[{','.join(map(str, self.xi))}]"


def family_m(c: tuple[int, ...]) -> BasisFamily:
    return BasisFamily("m", c=tuple(c))


def family_n(c: tuple[int, ...]) -> BasisFamily:
    return BasisFamily("n", c=tuple(c))


def family_m_xi(xi: Perm) -> BasisFamily:
    return BasisFamily("mxi", xi=tuple(xi))


def family_n_xi(xi: Perm) -> BasisFamily:
    return BasisFamily("nxi", xi=tuple(xi))


# ---------------------------------------------------------------------------
# seed elements


def row_stabilizer(lam: Multipartition, component: int) -> list[Perm]:
    """Row stabilizer of the given component of the top tableau, in S_r."""
    r = mp_size(lam)
    top = row_reading_tableau(lam)
    rows = [row for row in top[component]]
    perms = []
    for choice in itertools.product(
        *[itertools.permutations(row) for row in rows]
    ):
        images = list(range(1, r + 1))
        for row, img in zip(rows, choice):
            for a, b in zip(row, img):
                images[a - 1] = b
        perms.append(tuple(images))
    return perms


def young_sum(ctx: AlgebraContext, lam: Multipartition,
              use_sign: tuple[bool, ...]) -> Element:
    """
    Product over components of the row-stabilizer sums of the top tableau,
    trivial or sign-weighted per component.
    """
    out = ctx.one()
    for i in range(len(lam)):
        terms = {}
        for w in row_stabilizer(lam, i):
            coef = Fraction(perm_sign(w)) if use_sign[i] else Fraction(1)
            terms[((0,) * ctx.r, w)] = coef
        out = out * Element(ctx, terms)
    return out


def x_lambda_c(ctx: AlgebraContext, lam: Multipartition,
               c: tuple[int, ...]) -> Element:
    """Trivial sums on c_i = 0 components, sign sums on c_i = 1 components."""
    return young_sum(ctx, lam, tuple(bool(b) for b in c))


def y_lambda_c(ctx: AlgebraContext, lam: Multipartition,
               c: tuple[int, ...]) -> Element:
    """Sign sums on c_i = 0 components, trivial sums on c_i = 1 components."""
    return young_sum(ctx, lam, tuple(not b for b in c))


def _pi_factor(ctx: AlgebraContext, a: int, w: int) -> Element:
    """(x_1 - w)(x_2 - w)...(x_a - w); the empty product for a = 0."""
    out = ctx.one()
    for m in range(1, a + 1):
        out = out * (ctx.generator_x(m) - ctx.one() * Fraction(w))
    return out


def pi_bracket(ctx: AlgebraContext, lam: Multipartition,
               omega: tuple[int, ...] | None = None) -> Element:
    """
    Ordered product of the block factors: the i-th factor kills the first
    a_i variables at the (i+1)-st parameter, i = 1..ell-1.
    """
    om = ctx.omega if omega is None else omega
    a = bracket(lam)
    out = ctx.one()
    for i in range(1, ctx.ell):
        out = out * _pi_factor(ctx, a[i], om[i])
    return out


def pi_tilde_bracket(ctx: AlgebraContext, lam: Multipartition,
                     omega: tuple[int, ...] | None = None) -> Element:
    """Companion product running through the parameters in reverse order."""
    om = ctx.omega if omega is None else omega
    a = bracket(lam)
    out = ctx.one()
    for i in range(1, ctx.ell):
        out = out * _pi_factor(ctx, a[i], om[ctx.ell - 1 - i])
    return out


def family_omega(ctx: AlgebraContext, family: BasisFamily) -> tuple[int, ...]:
    """Parameter vector used inside the block factors of this family."""
    if family.kind in ("mxi", "nxi"):
        return tuple(ctx.omega[family.xi[i] - 1] for i in range(ctx.ell))
    return ctx.omega


def cell_seed(ctx: AlgebraContext, family: BasisFamily,
              lam: Multipartition) -> Element:
    """
    The s = t = top-tableau cellular element of the family at ``lam``.

    For the n-type families the per-component twist is read through the
    component reversal (the twist of slot i sits on the mirror slot), which
    is what makes the m/n pairing unitriangular for every twist sequence;
    with the aligned reading the unitriangularity fails already at
    (ell, r) = (2, 2) with mixed twists.
    """
    om = family_omega(ctx, family)
    ell = ctx.ell
    if family.kind == "m":
        return pi_bracket(ctx, lam, om) * x_lambda_c(ctx, lam, family.c)
    if family.kind == "n":
        crev = tuple(reversed(family.c))
        return pi_tilde_bracket(ctx, lam, om) * y_lambda_c(ctx, lam, crev)
    if family.kind == "mxi":
        return pi_bracket(ctx, lam, om) * x_lambda_c(ctx, lam, (0,) * ell)
    return pi_tilde_bracket(ctx, lam, om) * y_lambda_c(ctx, lam, (0,) * ell)


def dual_family(family: BasisFamily) -> BasisFamily:
    """The opposite-type family with the same parameters (m <-> n)."""
    if family.kind == "m":
        return family_n(family.c)
    if family.kind == "n":
        return family_m(family.c)
    if family.kind == "mxi":
        return family_n_xi(family.xi)
    return family_m_xi(family.xi)


def _right_translate(h: Element, v: Perm) -> Element:
    """h . v for a plain permutation v (stays in normal form)."""
    return Element(
        h.ctx, {(a, perm_mul(w, v)): c for (a, w), c in h.terms.items()}
    )


def cellular_element(ctx: AlgebraContext, family: BasisFamily,
                     s: Tableau, t: Tableau) -> Element:
    """d(s)^{-1} . seed(shape) . d(t) for standard s, t of a common shape."""
    lam = tableau_shape(s)
    if tableau_shape(t) != lam:
        raise ValueError("tableaux have different shapes")
    left = ctx.from_permutation(perm_inverse(d_of(s)))
    return _right_translate(left * cell_seed(ctx, family, lam), d_of(t))


def z_element(ctx: AlgebraContext, c: tuple[int, ...],
              lam: Multipartition) -> Element:
    """m-seed(lam) . w_lam . n-seed(lam'), the pairing witness of the label."""
    m_seed = cell_seed(ctx, family_m(c), lam)
    n_seed = cell_seed(ctx, family_n(c), conjugate(lam))
    return _right_translate(m_seed, w_lambda(lam)) * n_seed


# ---------------------------------------------------------------------------
# full-family realization (change of basis, expansions)


class FamilyRealization:
    """
    Every cellular element of one family expanded over the monomial basis,
    with the inverse change of basis cached. Built once per (context, family)
    and immutable afterwards.
    """

    def __init__(self, ctx: AlgebraContext, family: BasisFamily):
        self.ctx = ctx
        self.family = family
        self.labels = enumerate_multipartitions(ctx.ell, ctx.r)
        self.tableaux = [standard_tableaux(lam) for lam in self.labels]
        self.top_index = [
            tabs.index(row_reading_tableau(lam))
            for lam, tabs in zip(self.labels, self.tableaux)
        ]
        self.cells: list[tuple[int, int, int]] = []
        self.elements: list[Element] = []
        matrix_rows: list[list[Fraction]] = []
        for li, lam in enumerate(self.labels):
            seed = cell_seed(ctx, family, lam)
            tabs = self.tableaux[li]
            for si, s in enumerate(tabs):
                left = ctx.from_permutation(perm_inverse(d_of(s))) * seed
                for ti, t in enumerate(tabs):
                    elem = _right_translate(left, d_of(t))
                    self.cells.append((li, si, ti))
                    self.elements.append(elem)
                    matrix_rows.append(ctx.to_vector(elem))
        self.cell_index = {cell: i for i, cell in enumerate(self.cells)}
        self.change_of_basis: Matrix = matrix_rows
        try:
            self.change_of_basis_inv = inverse(matrix_rows)
        except SingularMatrixError as exc:
            raise SingularMatrixError(
                f"cellular family {family.label()} does not span "
                f"H({ctx.ell},{ctx.r})"
            ) from exc

    def expand(self, h: Element) -> list[Fraction]:
        """Coordinates of ``h`` in the cellular basis."""
        return vec_mat(self.ctx.to_vector(h), self.change_of_basis_inv)

    def element(self, li: int, si: int, ti: int) -> Element:
        return self.elements[self.cell_index[(li, si, ti)]]

    def label_index(self, lam: Multipartition) -> int:
        return self.labels.index(lam)


def realization(ctx: AlgebraContext, family: BasisFamily) -> FamilyRealization:
    cache = getattr(ctx, "_cellular_realizations", None)
    if cache is None:
        cache = {}
        ctx._cellular_realizations = cache
    if family not in cache:
        cache[family] = FamilyRealization(ctx, family)
    return cache[family]


def cellular_change_of_basis(ctx: AlgebraContext,
                             family: BasisFamily) -> Matrix:
    """Cellular elements over the monomial basis; invertibility enforced."""
    return realization(ctx, family).change_of_basis


# ---------------------------------------------------------------------------
# modules


@dataclass
class ModuleRealization:
    """Generator matrices of a right module, row-vector convention."""
    ctx: AlgebraContext
    s_action: list[Matrix]
    x_action: list[Matrix]

    @property
    def dim(self) -> int:
        if self.x_action:
            return len(self.x_action[0])
        return 0


@dataclass
class CellModuleRealization:
    ctx: AlgebraContext
    family: BasisFamily
    label: Multipartition
    basis: list[Tableau]
    s_action: list[Matrix]
    x_action: list[Matrix]
    gram: Matrix

    @property
    def dim(self) -> int:
        return len(self.basis)


def cell_module(ctx: AlgebraContext, family: BasisFamily,
                lam: Multipartition) -> CellModuleRealization:
    """
    Cell module of the family at ``lam``: the generator action is read off
    the cellular expansion of (top-row cell element) * generator, keeping
    only same-label coefficients with the left tableau fixed.
    """
    real = realization(ctx, family)
    li = real.label_index(lam)
    tabs = real.tableaux[li]
    top = real.top_index[li]
    rows = [real.element(li, top, si) for si in range(len(tabs))]

    def action_matrix(gen: Element) -> Matrix:
        mat = []
        for si in range(len(tabs)):
            coords = real.expand(rows[si] * gen)
            mat.append(
                [coords[real.cell_index[(li, top, ui)]]
                 for ui in range(len(tabs))]
            )
        return mat

    s_action = [action_matrix(ctx.generator_s(i)) for i in range(1, ctx.r)]
    x_action = [action_matrix(ctx.generator_x(k)) for k in range(1, ctx.r + 1)]

    gram = []
    for si in range(len(tabs)):
        row = []
        for ti in range(len(tabs)):
            coords = real.expand(rows[si] * real.element(li, ti, top))
            row.append(coords[real.cell_index[(li, top, top)]])
        gram.append(row)
    return CellModuleRealization(
        ctx, family, lam, tabs, s_action, x_action, gram
    )


def gram_via_trace(ctx: AlgebraContext, family: BasisFamily,
                   lam: Multipartition) -> Matrix:
    """
    Independent route to the Gram matrix: pair the cell products against the
    diagonal opposite-type element at the dual minimal tableau and read the
    trace form. The unitriangular pairing makes this extract exactly the
    top-diagonal cellular coefficient.
    """
    lam_d = conjugate(lam)
    w = w_lambda(lam_d)
    partner = cell_seed(ctx, dual_family(family), lam_d)
    x = ctx.from_permutation(perm_inverse(w)) * partner \
        * ctx.from_permutation(w)
    real = realization(ctx, family)
    li = real.label_index(lam)
    tabs = real.tableaux[li]
    top = real.top_index[li]
    out = []
    for si in range(len(tabs)):
        left = real.element(li, top, si)
        out.append(
            [tau_hat(left * real.element(li, ti, top) * x)
             for ti in range(len(tabs))]
        )
    return out


def simple_dim(ctx: AlgebraContext, family: BasisFamily,
               lam: Multipartition) -> int:
    """Rank of the Gram form; zero means the label carries no simple."""
    return rank(cell_module(ctx, family, lam).gram)


def simple_module(module: CellModuleRealization) -> ModuleRealization:
    """
    Quotient of the cell module by the radical of its Gram form, realized on
    the pivot coordinates of the reduced Gram matrix.
    """
    gram = module.gram
    _, pivots = rref(gram)
    if not pivots:
        raise ValueError(f"zero module requested at label {module.label}")
    picked = [gram[j] for j in pivots]

    def quotient(mat: Matrix) -> Matrix:
        out = []
        for j in pivots:
            image = vec_mat(mat[j], gram)
            out.append(solve_left(image, picked))
        return out

    return ModuleRealization(
        module.ctx,
        [quotient(m) for m in module.s_action],
        [quotient(m) for m in module.x_action],
    )


def contragredient(module) -> ModuleRealization:
    """
    Dual module: the anti-automorphism fixes every generator, so the dual
    action is simply the transposed matrices.
    """
    return ModuleRealization(
        module.ctx,
        [transpose(m) for m in module.s_action],
        [transpose(m) for m in module.x_action],
    )


def intertwiner_dim(mod_a, mod_b) -> int:
    """
    Dimension of the space of module maps, solved exactly from the commuting
    equations for s_1..s_{r-1} and x_1 (these generate the algebra).
    """
    if mod_a.ctx is not mod_b.ctx:
        raise ValueError("modules live over different contexts")
    da, db = mod_a.dim, mod_b.dim
    if da == 0 or db == 0:
        return 0
    gens = list(zip(
        mod_a.s_action + [mod_a.x_action[0]],
        mod_b.s_action + [mod_b.x_action[0]],
    ))
    rows = []
    for ga, gb in gens:
        for i in range(da):
            for j in range(db):
                row = [Fraction(0)] * (da * db)
                for p in range(da):
                    row[p * db + j] += ga[i][p]
                for q in range(db):
                    row[i * db + q] -= gb[q][j]
                rows.append(row)
    return da * db - rank(rows)


def block_of(module) -> dict[tuple[int, ...], int]:
    """
    Joint generalized eigenvalues of the commuting x_k action with their
    multiplicities. Eigenvalues must be integers drawn from the content
    window of the parameters; anything else raises.
    """
    ctx = module.ctx
    n = module.dim
    if n == 0:
        return {}
    lo = min(ctx.omega) - ctx.r
    hi = max(ctx.omega) + ctx.r
    spaces: list[tuple[Matrix, tuple[int, ...]]] = [(mat_identity(n), ())]
    for k in range(ctx.r):
        x = module.x_action[k]
        nxt = []
        for basis_rows, prefix in spaces:
            restricted = [
                solve_left(vec_mat(row, x), basis_rows) for row in basis_rows
            ]
            d = len(basis_rows)
            for t in range(lo, hi + 1):
                shifted = mat_sub(restricted,
                                  [[Fraction(t if i == j else 0)
                                    for j in range(d)] for i in range(d)])
                kernel = left_nullspace(mat_pow(shifted, d))
                if kernel:
                    vecs = [vec_mat(cvec, basis_rows) for cvec in kernel]
                    nxt.append((vecs, prefix + (t,)))
        spaces = nxt
    total = sum(len(v) for v, _ in spaces)
    if total != n:
        raise ValueError(
            "non-integer generalized eigenvalue: are the parameters integral?"
        )
    return {prefix: len(v) for v, prefix in sorted(spaces, key=lambda p: p[1])}


def block_alpha(module) -> tuple[int, ...]:
    """
    Sorted residue multiset shared by every generalized eigenvalue vector of
    the module; defined only when the module lies in a single block.
    """
    vecs = block_of(module)
    alphas = {tuple(sorted(v)) for v in vecs}
    if len(alphas) > 1:
        raise ValueError("module meets several blocks")
    return alphas.pop() if alphas else ()


def subcell_module(ctx: AlgebraContext, c: tuple[int, ...],
                   lam: Multipartition) -> ModuleRealization:
    """
    The right ideal generated by the pairing witness of ``lam``, realized on
    the basis z . d(t) over standard tableaux of the dual shape.
    """
    z = z_element(ctx, c, lam)
    tabs = standard_tableaux(conjugate(lam))
    vectors = [ctx.to_vector(_right_translate(z, d_of(t))) for t in tabs]
    if rank(vectors) != len(tabs):
        raise ValueError("pairing-witness translates are dependent")

    def action_matrix(gen: Element) -> Matrix:
        out = []
        for t in tabs:
            prod = _right_translate(z, d_of(t)) * gen
            out.append(solve_left(ctx.to_vector(prod), vectors))
        return out

    return ModuleRealization(
        ctx,
        [action_matrix(ctx.generator_s(i)) for i in range(1, ctx.r)],
        [action_matrix(ctx.generator_x(k)) for k in range(1, ctx.r + 1)],
    )


# ---------------------------------------------------------------------------
# family-level tables


def nonzero_simple_labels(ctx: AlgebraContext,
                          family: BasisFamily) -> list[Multipartition]:
    return [
        lam for lam in enumerate_multipartitions(ctx.ell, ctx.r)
        if simple_dim(ctx, family, lam) > 0
    ]


def simples_table(ctx: AlgebraContext, family: BasisFamily) -> list[dict]:
    """Rows (label, family, cell dim, simple dim, block) for every label."""
    rows = []
    for lam in enumerate_multipartitions(ctx.ell, ctx.r):
        module = cell_module(ctx, family, lam)
        rows.append({
            "lambda": lam,
            "family": family.label(),
            "dim_cell": module.dim,
            "dim_simple": rank(module.gram),
            "block": list(block_alpha(module)),
        })
    return rows
