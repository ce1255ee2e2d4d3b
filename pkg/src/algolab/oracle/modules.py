"""Right modules over structure-constant algebras.

A module is stored per vertex: ``dims[x]`` is the dimension of M e_x, and a
basis element b in e_u A e_v acts by a block matrix M_u -> M_v (row-vector
convention).  All maps between modules are families of per-vertex blocks,
which keeps every linear-algebra step block-local.
"""

from typing import Dict, List, Optional, Tuple

from ..errors import InvalidParams
from ..linalg import (
    RowSolver,
    left_nullspace,
    mat_mul,
    rref,
    transpose,
    vec_mat,
    zeros,
)


class RightModule:
    def __init__(self, alg, dims, act, check=False):
        self.alg = alg
        self.dims = tuple(dims)
        # act[t]: block matrix of size dims[row_idem[t]] x dims[col_idem[t]]
        self.act = {t: blk for t, blk in act.items() if blk}
        if check:
            self.verify(full=True)

    @property
    def total_dim(self):
        return sum(self.dims)

    @property
    def dim_vector(self):
        return self.dims

    def is_zero(self):
        return self.total_dim == 0

    def block(self, t):
        """Action block of basis element t, a dims[u] x dims[v] matrix."""
        blk = self.act.get(t)
        if blk is not None:
            return blk
        u, v = self.alg.row_idem[t], self.alg.col_idem[t]
        if t == self.alg.idempotent_indices[u] and u == v:
            return [
                [1 if i == j else 0 for j in range(self.dims[u])]
                for i in range(self.dims[u])
            ]
        return zeros(self.dims[u], self.dims[v])

    def verify(self, full=False, samples=50, rng_seed=11):
        """Action respects the multiplication tensor: rho(a) rho(b) agrees
        with the tensor expansion of ab for basis pairs."""
        import random

        alg = self.alg
        pairs = []
        if full:
            pairs = [
                (i, j)
                for i in range(alg.dim)
                for j in range(alg.dim)
                if alg.col_idem[i] == alg.row_idem[j]
            ]
        else:
            rng = random.Random(rng_seed)
            for _ in range(samples):
                pairs.append((rng.randrange(alg.dim), rng.randrange(alg.dim)))
        for i, j in pairs:
            if alg.col_idem[i] != alg.row_idem[j]:
                continue
            lhs = mat_mul(self.block(i), self.block(j))
            u = alg.row_idem[i]
            v = alg.col_idem[j]
            rhs = zeros(self.dims[u], self.dims[v])
            for k, c in alg.product_of_basis(i, j):
                blk = self.block(k)
                for r in range(self.dims[u]):
                    for s in range(self.dims[v]):
                        rhs[r][s] += c * blk[r][s]
            if lhs != rhs:
                raise InvalidParams(
                    f"module action violates the tensor at pair "
                    f"({alg.labels[i]}, {alg.labels[j]})"
                )
        return True


class ModuleMap:
    """A module map as per-vertex blocks; missing blocks are zero."""

    def __init__(self, source, target, blocks):
        self.source = source
        self.target = target
        self.blocks = dict(blocks)

    def block(self, x):
        blk = self.blocks.get(x)
        if blk is not None:
            return blk
        return zeros(self.source.dims[x], self.target.dims[x])

    def compose(self, other):
        """self then other."""
        out = {}
        for x in range(self.source.alg.nvert):
            if self.source.dims[x] and other.target.dims[x]:
                out[x] = mat_mul(self.block(x), other.block(x))
        return ModuleMap(self.source, other.target, out)

    def is_zero(self):
        return all(
            all(not e for row in blk for e in row) for blk in self.blocks.values()
        )


# -- constructions of standard modules -----------------------------------------


def projective_module(alg, x) -> Tuple[RightModule, List[List[int]]]:
    """P_x = e_x A.  Also returns, per vertex v, the list of algebra basis
    indices spanning e_x A e_v (the coordinate order of the module basis)."""
    basis_at = [
        list(alg.basis_by_pair.get((x, v), [])) for v in range(alg.nvert)
    ]
    pos = {}
    for v in range(alg.nvert):
        for i, t in enumerate(basis_at[v]):
            pos[t] = i
    dims = tuple(len(b) for b in basis_at)
    act = {}
    for t in range(alg.dim):
        u, v = alg.row_idem[t], alg.col_idem[t]
        if not dims[u] or not dims[v]:
            continue
        blk = zeros(dims[u], dims[v])
        nonzero = False
        for i, p in enumerate(basis_at[u]):
            for k, c in alg.product_of_basis(p, t):
                blk[i][pos[k]] += c
                nonzero = True
        if nonzero:
            act[t] = blk
    return RightModule(alg, dims, act), basis_at


def simple_module(alg, x) -> RightModule:
    dims = tuple(1 if v == x else 0 for v in range(alg.nvert))
    act = {}
    return RightModule(alg, dims, act)


def regular_module(alg) -> Tuple[RightModule, List[List[int]]]:
    """A as a right module over itself; basis grouped by column vertex."""
    basis_at = [[] for _ in range(alg.nvert)]
    for t in range(alg.dim):
        basis_at[alg.col_idem[t]].append(t)
    pos = {}
    for v in range(alg.nvert):
        for i, t in enumerate(basis_at[v]):
            pos[t] = i
    dims = tuple(len(b) for b in basis_at)
    act = {}
    for t in range(alg.dim):
        u, v = alg.row_idem[t], alg.col_idem[t]
        blk = zeros(dims[u], dims[v])
        nonzero = False
        for i, p in enumerate(basis_at[u]):
            for k, c in alg.product_of_basis(p, t):
                blk[i][pos[k]] += c
                nonzero = True
        if nonzero:
            act[t] = blk
    return RightModule(alg, dims, act), basis_at


def dual_module(m: RightModule) -> RightModule:
    """D(M) as a right module over the opposite algebra: same graded
    dimensions, transposed action blocks."""
    op = m.alg.opposite()
    act = {}
    for t in range(m.alg.dim):
        if t in m.act:
            act[t] = transpose(m.act[t])
    return RightModule(op, m.dims, act)


def injective_module(alg, x) -> RightModule:
    """I_x = D(A e_x) = the dual of the projective at x over the opposite."""
    p, _ = projective_module(alg.opposite(), x)
    return dual_module(p)


def da_module(alg) -> RightModule:
    """DA as a right A-module (the dual of the regular module of the
    opposite algebra)."""
    reg_op, _ = regular_module(alg.opposite())
    return dual_module(reg_op)


# -- submodules, quotients, socles, tops ---------------------------------------


def radical_subspace(m: RightModule):
    """Per-vertex row bases of M rad(A)."""
    rows = [[] for _ in range(m.alg.nvert)]
    for t in m.alg.radical_indices:
        blk = m.act.get(t)
        if blk is None:
            continue
        v = m.alg.col_idem[t]
        for row in blk:
            if any(row):
                rows[v].append(row)
    out = []
    for v in range(m.alg.nvert):
        if rows[v]:
            red, pivots = rref(rows[v])
            out.append([red[i] for i in range(len(pivots))])
        else:
            out.append([])
    return out


def top_data(m: RightModule):
    """(multiplicities per vertex, generator vectors per vertex): generators
    are coordinate vectors of M at the vertex completing M rad to M."""
    rad = radical_subspace(m)
    mults = []
    gens = []
    for x in range(m.alg.nvert):
        solver = RowSolver(rad[x], m.dims[x]) if m.dims[x] else None
        chosen = []
        if solver is not None:
            for i in range(m.dims[x]):
                e = [0] * m.dims[x]
                e[i] = 1
                if not solver.contains(e):
                    chosen.append(e)
                    solver = RowSolver(rad[x] + [  # extend and continue
                        *chosen
                    ], m.dims[x])
        mults.append(len(chosen))
        gens.append(chosen)
    return mults, gens


def socle_data(m: RightModule):
    """(multiplicities per vertex, socle basis per vertex): vectors killed by
    every radical basis element."""
    mults = []
    basis = []
    for x in range(m.alg.nvert):
        if m.dims[x] == 0:
            mults.append(0)
            basis.append([])
            continue
        stacked = []
        for t in m.alg.radical_indices:
            if m.alg.row_idem[t] != x:
                continue
            blk = m.act.get(t)
            if blk is None:
                continue
            stacked.append(blk)
        if not stacked:
            mults.append(m.dims[x])
            basis.append([list(r) for r in _identity(m.dims[x])])
            continue
        wide = [sum((list(blk[i]) for blk in stacked), []) for i in range(m.dims[x])]
        kern = left_nullspace(wide)
        mults.append(len(kern))
        basis.append(kern)
    return mults, basis


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def submodule(m: RightModule, vectors_per_vertex):
    """The submodule spanned by the given per-vertex row vectors, which must
    already be action-closed.  Returns (module, inclusion map)."""
    solvers = []
    bases = []
    for x in range(m.alg.nvert):
        rows = vectors_per_vertex[x]
        if rows:
            red, pivots = rref(rows)
            basis = [red[i] for i in range(len(pivots))]
        else:
            basis = []
        bases.append(basis)
        solvers.append(RowSolver(basis, m.dims[x]) if m.dims[x] else None)
    dims = tuple(len(b) for b in bases)
    act = {}
    for t, blk in m.act.items():
        u, v = m.alg.row_idem[t], m.alg.col_idem[t]
        if not dims[u] or not m.dims[v]:
            continue
        sub_blk = []
        nonzero = False
        for row in bases[u]:
            img = vec_mat(row, blk)
            coeffs = solvers[v].coefficients(img) if dims[v] else None
            if coeffs is None:
                if any(img):
                    raise InvalidParams("subspace is not action-closed")
                coeffs = []
            if any(coeffs):
                nonzero = True
            sub_blk.append(list(coeffs))
        if nonzero:
            act[t] = sub_blk
    sub = RightModule(m.alg, dims, act)
    incl = ModuleMap(sub, m, {x: bases[x] for x in range(m.alg.nvert) if bases[x]})
    return sub, incl


def quotient_module(m: RightModule, sub_vectors_per_vertex):
    """M / span(sub vectors).  Returns (module, projection map)."""
    reps = []
    proj_solvers = []
    sub_bases = []
    for x in range(m.alg.nvert):
        rows = sub_vectors_per_vertex[x]
        if rows:
            red, pivots = rref(rows)
            sub_basis = [red[i] for i in range(len(pivots))]
        else:
            sub_basis = []
        sub_bases.append(sub_basis)
        chosen = []
        span = list(sub_basis)
        solver = RowSolver(span, m.dims[x]) if m.dims[x] else None
        for i in range(m.dims[x]):
            e = [0] * m.dims[x]
            e[i] = 1
            if not solver.contains(e):
                chosen.append(e)
                span = span + [e]
                solver = RowSolver(span, m.dims[x])
        reps.append(chosen)
        # solver over sub_basis + chosen: coefficients give the projection
        proj_solvers.append(
            RowSolver(sub_basis + chosen, m.dims[x]) if m.dims[x] else None
        )
    dims = tuple(len(r) for r in reps)

    def project(x, vec):
        if not dims[x]:
            return []
        coeffs = proj_solvers[x].coefficients(vec)
        if coeffs is None:
            raise AssertionError("projection solver is not full rank")
        return list(coeffs[len(sub_bases[x]):])

    act = {}
    for t, blk in m.act.items():
        u, v = m.alg.row_idem[t], m.alg.col_idem[t]
        if not dims[u] or not dims[v]:
            continue
        q_blk = []
        nonzero = False
        for row in reps[u]:
            img = vec_mat(row, blk)
            pr = project(v, img)
            if any(pr):
                nonzero = True
            q_blk.append(pr)
        if nonzero:
            act[t] = q_blk
    quot = RightModule(m.alg, dims, act)
    proj_blocks = {}
    for x in range(m.alg.nvert):
        if m.dims[x] and dims[x]:
            proj_blocks[x] = [
                project(x, [1 if i == j else 0 for j in range(m.dims[x])])
                for i in range(m.dims[x])
            ]
    return quot, ModuleMap(m, quot, proj_blocks)


def direct_sum(modules):
    """Direct sum with per-summand offsets: returns (module, offsets) where
    offsets[i][x] is the start of summand i inside vertex slice x."""
    if not modules:
        raise InvalidParams("empty direct sum")
    alg = modules[0].alg
    nv = alg.nvert
    offsets = []
    dims = [0] * nv
    for m in modules:
        offsets.append(tuple(dims))
        for x in range(nv):
            dims[x] += m.dims[x]
    act = {}
    for t in range(alg.dim):
        u, v = alg.row_idem[t], alg.col_idem[t]
        if not dims[u] or not dims[v]:
            continue
        blk = zeros(dims[u], dims[v])
        nonzero = False
        for m, off in zip(modules, offsets):
            sub = m.act.get(t)
            if sub is None:
                continue
            for i in range(m.dims[u]):
                for j in range(m.dims[v]):
                    if sub[i][j]:
                        blk[off[u] + i][off[v] + j] = sub[i][j]
                        nonzero = True
        if nonzero:
            act[t] = blk
    return RightModule(alg, tuple(dims), act), offsets


# -- hom spaces ------------------------------------------------------------------


def hom_space(m: RightModule, n: RightModule) -> List[ModuleMap]:
    """Basis of Hom_A(M, N) by solving the per-arrow commutation equations
    over all algebra basis elements."""
    alg = m.alg
    nv = alg.nvert
    # unknown layout: per vertex x, a dims_m[x] x dims_n[x] block
    offsets = []
    total = 0
    for x in range(nv):
        offsets.append(total)
        total += m.dims[x] * n.dims[x]
    if total == 0:
        return []

    def var(x, i, j):
        return offsets[x] + i * n.dims[x] + j

    rows = []
    for t in range(alg.dim):
        u, v = alg.row_idem[t], alg.col_idem[t]
        if t == alg.idempotent_indices[u] and u == v:
            continue
        mb = m.block(t)
        nb = n.block(t)
        # act_m[t] . phi_v = phi_u . act_n[t]  (blocks M_u x N_v)
        for i in range(m.dims[u]):
            for j in range(n.dims[v]):
                row = [0] * total
                any_entry = False
                for k in range(m.dims[v]):
                    if mb[i][k]:
                        row[var(v, k, j)] += mb[i][k]
                        any_entry = True
                for k in range(n.dims[u]):
                    if nb[k][j]:
                        row[var(u, i, k)] -= nb[k][j]
                        any_entry = True
                if any_entry:
                    rows.append(row)
    if rows:
        from ..linalg import right_nullspace

        sols = right_nullspace(rows)
    else:
        sols = [list(r) for r in _identity(total)]
    maps = []
    for sol in sols:
        blocks = {}
        for x in range(nv):
            if m.dims[x] and n.dims[x]:
                blk = [
                    [sol[var(x, i, j)] for j in range(n.dims[x])]
                    for i in range(m.dims[x])
                ]
                if any(any(r) for r in blk):
                    blocks[x] = blk
        maps.append(ModuleMap(m, n, blocks))
    return maps


# -- complexes --------------------------------------------------------------------


class ModuleComplex:
    """A bounded complex; modules[i] sits in degree start + i."""

    def __init__(self, modules, diffs, start=0):
        self.modules = list(modules)
        self.diffs = list(diffs)  # diffs[i]: modules[i] -> modules[i+1]
        self.start = start
        if len(self.diffs) != max(len(self.modules) - 1, 0):
            raise InvalidParams("differential count mismatch")
        for i, d in enumerate(self.diffs):
            if d.source is not self.modules[i] or d.target is not self.modules[i + 1]:
                raise InvalidParams("differential endpoints mismatch")
        for i in range(len(self.diffs) - 1):
            if not self.diffs[i].compose(self.diffs[i + 1]).is_zero():
                raise InvalidParams("d^2 != 0")

    def cohomology(self, index):
        """H^(start+index) as a module (kernel mod image at position index)."""
        m = self.modules[index]
        nv = m.alg.nvert
        # kernel of the outgoing differential
        if index < len(self.diffs):
            out = self.diffs[index]
            kernels = []
            for x in range(nv):
                if m.dims[x] == 0:
                    kernels.append([])
                elif out.target.dims[x] == 0:
                    kernels.append([list(r) for r in _identity(m.dims[x])])
                else:
                    kernels.append(left_nullspace(out.block(x)))
        else:
            kernels = [
                [list(r) for r in _identity(m.dims[x])] if m.dims[x] else []
                for x in range(nv)
            ]
        # image of the incoming differential
        images = [[] for _ in range(nv)]
        if index > 0:
            inc = self.diffs[index - 1]
            for x in range(nv):
                if inc.source.dims[x] and m.dims[x]:
                    blk = inc.block(x)
                    for row in blk:
                        if any(row):
                            images[x].append(list(row))
        ksub, incl = submodule(m, kernels)
        if ksub.total_dim == 0:
            return ksub
        # rewrite image vectors in kernel coordinates
        img_in_k = [[] for _ in range(nv)]
        solvers = {
            x: RowSolver(incl.blocks.get(x, []), m.dims[x])
            for x in range(nv)
            if ksub.dims[x]
        }
        for x in range(nv):
            for vec in images[x]:
                coeffs = solvers[x].coefficients(vec) if ksub.dims[x] else None
                if coeffs is None:
                    raise AssertionError("image is not inside the kernel")
                img_in_k[x].append(list(coeffs))
        h, _ = quotient_module(ksub, img_in_k)
        return h

    def nonzero_cohomology(self):
        out = []
        for i in range(len(self.modules)):
            h = self.cohomology(i)
            if not h.is_zero():
                out.append((self.start + i, h))
        return out
