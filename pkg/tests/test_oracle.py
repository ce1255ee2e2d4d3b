import math
from fractions import Fraction

import pytest

from algolab.errors import InvalidAlgebra, NotSerreFormal, NotTriangular
from algolab.nakayama import tnl_kupisch
from algolab.oracle import (
    QuiverPresentation,
    StructureConstantAlgebra,
    build_replicated,
    compile_bound_quiver,
    dual_numbers_presentation,
    gorenstein_non_formal_presentation,
    hom_space,
    hom_vanishing_gate,
    homological_report,
    injective_module,
    inverse_nakayama,
    kronecker_presentation,
    kupisch_of,
    kupisch_presentation,
    linear_an_presentation,
    nakayama_functor,
    nu_inverse_derived,
    parse_presentation,
    projective_module,
    serre_formal_check,
    simple_module,
    socle_data,
    tits_positive_roots,
    tnl_presentation,
)
from algolab.oracle.homology import (
    codomdim_of_dual_regular,
    ext_against_regular,
    identify_module,
    left_mult_map,
    module_dims,
)
from algolab.oracle.modules import (
    ModuleComplex,
    ModuleMap,
    da_module,
    direct_sum,
    dual_module,
    quotient_module,
    regular_module,
    top_data,
)


def test_compile_dimensions():
    assert compile_bound_quiver(linear_an_presentation(3)).dim == 6
    assert compile_bound_quiver(tnl_presentation(4, 3)).dim == 9
    assert compile_bound_quiver(gorenstein_non_formal_presentation()).dim == 7
    assert compile_bound_quiver(kronecker_presentation()).dim == 4
    assert compile_bound_quiver(dual_numbers_presentation()).dim == 2


def test_compile_infinite_dimensional():
    from algolab.errors import InfiniteDimensional

    pres = QuiverPresentation(1, [("x", 1, 1)])  # loop with no relations
    with pytest.raises(InfiniteDimensional):
        compile_bound_quiver(pres, degree_bound=12)


def test_compile_commutative_square():
    pres = parse_presentation(
        "vertices: 4; arrows: a:1->2; b:2->4; c:1->3; d:3->4; relations: a*b - c*d"
    )
    alg = compile_bound_quiver(pres)
    assert alg.dim == 9  # 4 vertices + 4 arrows + 1 length-2 class


def test_full_associativity_on_medium_algebra():
    alg = compile_bound_quiver(tnl_presentation(8, 4), verify=False)
    alg.verify_structure(full=True)


def test_radical_cross_assertion():
    # trace-form radical (char 0) spans exactly the non-idempotent classes
    for pres in [tnl_presentation(5, 3), gorenstein_non_formal_presentation(), kronecker_presentation()]:
        alg = compile_bound_quiver(pres)
        rad = alg.trace_form_radical()
        assert len(rad) == len(alg.radical_indices)
        support = {i for v in rad for i, x in enumerate(v) if x}
        assert support <= set(alg.radical_indices)


def test_module_action_verification():
    alg = compile_bound_quiver(tnl_presentation(4, 3))
    p, _ = projective_module(alg, 1)
    assert p.verify(full=True)
    assert dual_module(p).verify(full=True)


def test_json_roundtrip():
    alg = compile_bound_quiver(tnl_presentation(4, 3))
    back = StructureConstantAlgebra.from_json(alg.to_json())
    assert back.dim == alg.dim
    assert back.mult == alg.mult
    assert back.idempotent_indices == alg.idempotent_indices


def test_presentation_parser():
    pres = parse_presentation(
        "vertices: 4; arrows: a1:1->2; b1:1->2; a2:2->3; b2:2->3; a3:3->4; b3:3->4; "
        "relations: a1*a2; b1*b2; a1*b2 - b1*a2; a2*a3; b2*b3; a2*b3 - b2*a3; len>=3"
    )
    alg = compile_bound_quiver(pres)
    assert alg.dim == 12  # the Kronecker replicated presentation at m = 1


def test_replicated_matches_presentation_for_kronecker():
    kr = compile_bound_quiver(kronecker_presentation())
    built = build_replicated(kr, 1)
    assert built.dim == 12
    pres = parse_presentation(
        "vertices: 4; arrows: a1:1->2; b1:1->2; a2:2->3; b2:2->3; a3:3->4; b3:3->4; "
        "relations: a1*a2; b1*b2; a1*b2 - b1*a2; a2*a3; b2*b3; a2*b3 - b2*a3; len>=3"
    )
    compiled = compile_bound_quiver(pres)
    rb, rc = homological_report(built), homological_report(compiled)
    assert (rb.gldim, rb.domdim, rb.idim_right) == (rc.gldim, rc.domdim, rc.idim_right)
    assert sorted(sorted(r) for r in built.cartan_dims()) == sorted(
        sorted(r) for r in compiled.cartan_dims()
    )


def test_replicated_dimension_and_kupisch():
    ka2 = compile_bound_quiver(linear_an_presentation(2))
    for m in range(0, 4):
        assert build_replicated(ka2, m).dim == (2 * m + 1) * 3
    assert str(kupisch_of(build_replicated(ka2, 2))) == "[3,3,3,3,2,1]"


def test_homological_report_values():
    t63 = compile_bound_quiver(tnl_presentation(6, 3))
    rep = homological_report(t63)
    assert rep.gldim == 3 and rep.domdim == 3
    assert rep.idim_right == rep.idim_left == 3
    assert rep.qf3 and rep.qf2
    kr1 = build_replicated(compile_bound_quiver(kronecker_presentation()), 1)
    rep = homological_report(kr1)
    assert rep.gldim == 3 and rep.domdim == 2
    assert not rep.qf2  # e_3 A^(1) has socle S_4 + S_4


def test_semisimple_and_disconnected():
    pres = QuiverPresentation(2, [])
    alg = compile_bound_quiver(pres)
    rep = homological_report(alg)
    assert rep.gldim == 0 and rep.domdim is math.inf
    assert not alg.is_connected()
    with pytest.raises(InvalidAlgebra):
        serre_formal_check(alg)


def test_nakayama_functor_defining_property():
    for pres in [tnl_presentation(4, 3), linear_an_presentation(3), gorenstein_non_formal_presentation()]:
        alg = compile_bound_quiver(pres)
        for x in range(alg.nvert):
            p, _ = projective_module(alg, x)
            tag = identify_module(alg, nakayama_functor(alg, p))
            assert tag.as_i == alg.vertex_labels[x]
            tag = identify_module(alg, inverse_nakayama(alg, injective_module(alg, x)))
            assert tag.as_p == alg.vertex_labels[x]


def test_inverse_nakayama_vanishing_on_t63():
    t63 = compile_bound_quiver(tnl_presentation(6, 3))
    # S_5 and S_6 have no injective cover component: Hom(DA, S) = 0
    assert inverse_nakayama(t63, simple_module(t63, 4)).is_zero()
    assert inverse_nakayama(t63, simple_module(t63, 5)).is_zero()
    # S_1 = I_1 there, so Hom(DA, S_1) = P_1
    tag = identify_module(t63, inverse_nakayama(t63, simple_module(t63, 0)))
    assert tag.as_p == "e1"


def test_nu_inverse_derived_cases():
    # hereditary, non-injective indecomposable: single cohomology tau^-(M)
    # in degree 1 (the stalk sits one step to the right)
    ka3 = compile_bound_quiver(linear_an_presentation(3))
    p3, _ = projective_module(ka3, 2)  # S_3, non-injective
    cohs = nu_inverse_derived(ka3, p3)
    assert len(cohs) == 1 and cohs[0][0] == 1
    assert cohs[0][1].dims == (0, 1, 0)  # tau^-(S_3) = S_2
    # injective module: concentrated in degree 0
    i1 = injective_module(ka3, 0)
    cohs = nu_inverse_derived(ka3, i1)
    assert len(cohs) == 1 and cohs[0][0] == 0
    assert identify_module(ka3, cohs[0][1]).as_p == "e1"


def test_gorenstein_non_formal_regression():
    alg = compile_bound_quiver(gorenstein_non_formal_presentation())
    rep = homological_report(alg)
    assert rep.idim_right == 1 and rep.idim_left == 1  # 1-Iwanaga-Gorenstein
    p2, _ = projective_module(alg, 1)
    cohs = nu_inverse_derived(alg, p2)
    assert sorted(d for d, _ in cohs) == [0, 1]
    verdict = serre_formal_check(alg, horizon=4)
    assert verdict.kind == "not_serre_formal"
    assert verdict.witness.simple == "e2"
    assert verdict.witness.power == 1
    assert verdict.witness.degrees == frozenset({0, 1})


def test_serre_formal_check_tnl():
    t73 = compile_bound_quiver(tnl_presentation(7, 3))
    assert serre_formal_check(t73, horizon=8).kind == "serre_formal"
    t63 = compile_bound_quiver(tnl_presentation(6, 3))
    verdict = serre_formal_check(t63, horizon=8)
    assert verdict.kind == "not_serre_formal"


def test_profile_from_oracle_raises_with_witness():
    from algolab.serre import profile_from_oracle

    alg = compile_bound_quiver(gorenstein_non_formal_presentation())
    with pytest.raises(NotSerreFormal) as excinfo:
        profile_from_oracle(alg, 4)
    assert excinfo.value.degrees == frozenset({0, 1})


def test_tits_positive_roots():
    assert len(tits_positive_roots(compile_bound_quiver(linear_an_presentation(2)), 2)) == 3
    t43 = compile_bound_quiver(tnl_presentation(4, 3))
    assert len(tits_positive_roots(t43, 2)) == 9
    t64 = compile_bound_quiver(tnl_presentation(6, 4))  # A_3^(1)
    assert len(tits_positive_roots(t64, 2)) == 18
    with pytest.raises(NotTriangular):
        tits_positive_roots(compile_bound_quiver(dual_numbers_presentation()))


def test_hom_vanishing_gate():
    alt = compile_bound_quiver(QuiverPresentation(3, [("a", 1, 2), ("b", 3, 2)]))
    report = hom_vanishing_gate(alt)
    assert report.gate and sorted(report.e_vertices) == ["e1", "e2", "e3"]
    t43 = compile_bound_quiver(tnl_presentation(4, 3))
    report = hom_vanishing_gate(t43)
    assert report.gate and sorted(report.e_vertices) == ["e3", "e4"]
    dn = compile_bound_quiver(dual_numbers_presentation())
    report = hom_vanishing_gate(dn)
    assert report.gate and report.e_vertices == []  # self-injective: e = 0


def test_gate_failure_witness():
    # loop a at vertex 1 with b: 1 -> 2 and a^2 = ab = 0:
    # no projective is injective yet Hom(DA, A) is nonzero
    pres = QuiverPresentation(
        2,
        [("a", 1, 1), ("b", 1, 2)],
        relations=[((1, ("a", "a")),), ((1, ("a", "b")),)],
        max_path_length=4,
    )
    alg = compile_bound_quiver(pres)
    report = hom_vanishing_gate(alg)
    assert not report.gate
    assert report.witness is not None
    assert sorted(report.e_vertices) == ["e1", "e2"]


def test_hom_space_dimensions():
    alg = compile_bound_quiver(tnl_presentation(4, 3))
    for x in range(4):
        for y in range(4):
            px, _ = projective_module(alg, x)
            py, _ = projective_module(alg, y)
            expected = len(alg.basis_by_pair.get((y, x), ()))
            assert len(hom_space(px, py)) == expected


def test_domdim_codomdim_duality():
    for pres in [tnl_presentation(6, 3), tnl_presentation(5, 2), gorenstein_non_formal_presentation()]:
        alg = compile_bound_quiver(pres)
        rep = homological_report(alg)
        assert codomdim_of_dual_regular(alg) == rep.domdim


def test_left_idim_equals_right_idim_when_finite():
    for n, l in [(4, 2), (5, 3), (6, 3), (7, 3)]:
        rep = homological_report(compile_bound_quiver(tnl_presentation(n, l)))
        assert rep.idim_left == rep.idim_right


def test_coresolution_complex_recovers_module():
    # applying the identity (no Nakayama twist) to the dual resolution:
    # the complex of projectives over the opposite algebra has cohomology
    # DM concentrated at the end
    from algolab.oracle.homology import injective_coresolution
    from algolab.oracle.modules import RightModule
    from algolab.oracle.homology import left_mult_map

    alg = compile_bound_quiver(tnl_presentation(4, 3))
    m, _ = projective_module(alg, 3)  # S_4
    cores = injective_coresolution(alg, m, 16)
    op = alg.opposite()
    cache = {}

    def proj_cache(x):
        if x not in cache:
            cache[x] = projective_module(op, x)
        return cache[x]

    modules = []
    offsets_list = []
    for term in cores.terms:
        mods = [proj_cache(x)[0] for x in term]
        mod, offs = direct_sum(mods)
        modules.append(mod)
        offsets_list.append(offs)
    # descending differentials Q_{j+1} -> Q_j; reverse into an ascending complex
    rev_modules = list(reversed(modules))
    rev_diffs = []
    nsteps = len(cores.syms)
    for j, sym in enumerate(cores.syms):
        src = modules[j + 1]
        dst = modules[j]
        blocks = {
            v: [[0] * dst.dims[v] for _ in range(src.dims[v])]
            for v in range(op.nvert)
            if src.dims[v] and dst.dims[v]
        }
        for r, row in enumerate(sym):
            u = cores.terms[j + 1][r]
            for s, w in enumerate(row):
                if w is None:
                    continue
                x = cores.terms[j][s]
                p_src, p_dst, lblocks = left_mult_map(op, w, u, x, proj_cache)
                for v, blk in lblocks.items():
                    if v not in blocks:
                        continue
                    off_r = offsets_list[j + 1][r][v]
                    off_s = offsets_list[j][s][v]
                    for a in range(p_src.dims[v]):
                        for b in range(p_dst.dims[v]):
                            if blk[a][b]:
                                blocks[v][off_r + a][off_s + b] += blk[a][b]
        rev_diffs.append(ModuleMap(src, dst, blocks))
    maps = list(reversed(rev_diffs))
    cx = ModuleComplex(rev_modules, maps)
    cohs = cx.nonzero_cohomology()
    dm = dual_module(m)
    assert len(cohs) == 1
    assert cohs[0][0] == len(modules) - 1
    assert cohs[0][1].dims == dm.dims


def test_ext_against_regular():
    ka2 = compile_bound_quiver(linear_an_presentation(2))
    s1 = simple_module(ka2, 0)
    assert ext_against_regular(ka2, s1, 2) == [0, 1, 0]
    p1, _ = projective_module(ka2, 0)
    exts = ext_against_regular(ka2, p1, 2)
    assert exts[1] == 0 and exts[2] == 0
    assert exts[0] == 1  # Hom(P_1, A) = A e_1 is one-dimensional for kA_2


def test_da_module_socle():
    alg = compile_bound_quiver(tnl_presentation(4, 3))
    da = da_module(alg)
    assert da.total_dim == alg.dim
    reg, _ = regular_module(alg)
    assert sum(da.dims) == sum(reg.dims)


def test_bound_truncation_reports():
    from algolab.errors import ResolutionBoundExceeded

    t63 = compile_bound_quiver(tnl_presentation(6, 3))
    rep = homological_report(t63, bound=1)
    assert rep.gldim == ">1"
    s6 = simple_module(t63, 5)  # idim 3
    with pytest.raises(ResolutionBoundExceeded):
        nu_inverse_derived(t63, s6, bound=0)
    verdict = serre_formal_check(t63, horizon=4, bound=1)
    assert verdict.kind == "inconclusive"


def test_profile_bound_passthrough():
    from algolab.errors import ResolutionBoundExceeded
    from algolab.serre import profile_from_oracle

    t73 = compile_bound_quiver(tnl_presentation(7, 3))
    with pytest.raises(ResolutionBoundExceeded):
        profile_from_oracle(t73, 4, bound=0)
