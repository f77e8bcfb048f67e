#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonproj/laws.hpp"
#include "nonproj/models.hpp"
#include "nonproj/ringops.hpp"
#include "test_helpers.hpp"

using namespace nonproj;

namespace {

TorusDatum datum_n2() { return build_torus(ZPoly{1, 1, 0, 0, 1}); }

Subspace span_of_classes(const GradedAlgebra& a, const std::vector<int>& classes, int deg) {
    QMat rows(static_cast<int>(classes.size()), a.dim(deg));
    for (size_t r = 0; r < classes.size(); ++r) {
        auto v = a.coords(Elem::basis(classes[r]), deg);
        for (int c = 0; c < a.dim(deg); ++c) rows.at(static_cast<int>(r), c) = v[c];
    }
    return Subspace::span_of_rows(rows);
}

}  // namespace

TEST_CASE("X model, level 1: betti numbers and laws") {
    auto m = build_X_model(datum_n2(), 1);
    CHECK(m.algebra->dim(1) == 8);
    CHECK(m.algebra->dim(2) == 32);             // C(8,2) + 4
    CHECK(m.algebra->dim(3) == 56 + 4 * 4);     // C(8,3) + 4 b1(T^2)
    CHECK(m.algebra->dim(8) == 1);
    CHECK(m.point_classes.empty());
    CHECK(verify_algebra_laws(*m.algebra, {.pair_budget = 20000, .triple_budget = 6000}).ok());
}

TEST_CASE("X model: cup kernels equal restriction kernels on all four centers") {
    auto m = build_X_model(datum_n2(), 1);
    for (const auto& c : m.subtorus_centers) {
        REQUIRE(c.h2_classes.size() == 1);
        Subspace k = cup_kernel(*m.algebra, Elem::basis(c.h2_classes[0]), 1);
        CHECK(k == c.h1_kernel);
        CHECK(k.dim() == 4);
    }
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            CHECK(m.subtorus_centers[i]
                      .h1_kernel.intersect(m.subtorus_centers[j].h1_kernel)
                      .is_zero());
    // cup by zero keeps everything
    CHECK(cup_kernel(*m.algebra, Elem(), 1).dim() == 8);
}

TEST_CASE("X model: Albanese criterion and Gysin identity") {
    auto m = build_X_model(datum_n2(), 1);
    auto ext = exterior_subring_map(m.algebra);
    CHECK(ext.top_degree_isomorphism);
    for (int d = 1; d <= 3; ++d) CHECK(ext.map.injective_in_degree(d));

    GysinAdjoint adj(ext.map);
    QMat comp = adj.degree_matrix(2) * ext.map.degree_matrix(2);
    CHECK(comp == QMat::identity(28));

    // kernel of the adjoint in degree 2 = span of the exceptional classes
    Subspace ker = kernel_basis(adj.degree_matrix(2));
    std::vector<int> excl;
    for (int g = 0; g < 4; ++g) excl.push_back(m.subtorus_centers[g].h2_classes[0]);
    CHECK(ker == span_of_classes(*m.algebra, excl, 2));

    // the torus model's exterior map is an isomorphism in every degree and
    // its adjoint is the inverse
    auto torus = std::make_shared<ExteriorAlgebra>(4);
    auto text = exterior_subring_map(torus);
    CHECK(text.top_degree_isomorphism);
    GysinAdjoint tadj(text.map);
    for (int d = 0; d <= 4; ++d) {
        CHECK(text.map.rank_in_degree(d) == torus->dim(d));
        CHECK(tadj.degree_matrix(d) * text.map.degree_matrix(d) == QMat::identity(torus->dim(d)));
        CHECK(text.map.degree_matrix(d) * tadj.degree_matrix(d) == QMat::identity(torus->dim(d)));
    }
}

TEST_CASE("X model obstruction subspaces, level 1 and level 2") {
    auto m1 = build_X_model(datum_n2(), 1);
    auto obs1 = obstruction_subspaces(*m1.algebra);
    CHECK(obs1.p.dim() == 4);
    CHECK(obs1.p0.dim() == 0);

    auto m2 = build_X_model(datum_n2(), 2);
    CHECK(m2.num_x_points == 3);
    CHECK(m2.num_y_points == 0);
    CHECK(m2.algebra->dim(2) == 35);
    CHECK(m2.algebra->dim(1) == 8);
    CHECK(m2.algebra->dim(3) == m1.algebra->dim(3));  // points do not affect H^3
    auto obs2 = obstruction_subspaces(*m2.algebra);
    CHECK(obs2.p.dim() == 7);
    CHECK(obs2.p0.dim() == 3);
    CHECK(obs2.p0 == span_of_classes(*m2.algebra, m2.point_classes, 2));
    CHECK(obs2.p.contains(obs2.p0));

    ExteriorAlgebra torus(4);
    CHECK(obstruction_subspaces(torus).p.dim() == 0);

    CHECK(verify_algebra_laws(*m2.algebra, {.pair_budget = 20000, .triple_budget = 5000}).ok());
}

TEST_CASE("noninjective locus components: X and X1") {
    auto m = build_X_model(datum_n2(), 1);
    std::vector<LocusClass> classes;
    for (const auto& c : m.subtorus_centers)
        classes.push_back({c.h2_classes[0], c.name,
                           cup_kernel(*m.algebra, Elem::basis(c.h2_classes[0]), 1)});
    auto comps = noninjective_locus_components(classes);
    REQUIRE(comps.size() == 4);
    for (const auto& c : comps) CHECK(c.dim == 1);

    auto x1 = build_X1_model(datum_n2(), {1, 2, 3, 4});
    CHECK(x1.algebra->dim(2) == 32 + 6);
    std::vector<LocusClass> classes1;
    for (const auto& c : x1.subtorus_centers)
        for (int idx : c.h2_classes)
            classes1.push_back({idx, c.name, cup_kernel(*x1.algebra, Elem::basis(idx), 1)});
    auto comps1 = noninjective_locus_components(classes1);
    REQUIRE(comps1.size() == 4);
    std::vector<int> dims;
    for (const auto& c : comps1) dims.push_back(c.dim);
    CHECK(dims == std::vector<int>{1, 2, 3, 4});

    CHECK(noninjective_locus_components({}).empty());
    CHECK(verify_algebra_laws(*x1.algebra, {.pair_budget = 15000, .triple_budget = 4000}).ok());
}

TEST_CASE("X x F model") {
    auto m = build_XF_model(datum_n2(), 1);
    CHECK(m.algebra->dim(1) == 10);
    REQUIRE(m.point_classes.size() == 1);
    Subspace l = cup_kernel(*m.algebra, Elem::basis(m.point_classes[0]), 1);
    CHECK(l.dim() == 8);
    CHECK(l == m.point_kernels[0]);
    for (const auto& c : m.subtorus_centers) {
        Subspace k = cup_kernel(*m.algebra, Elem::basis(c.h2_classes[0]), 1);
        CHECK(k.dim() == 4);
        CHECK(l.contains(k));
    }
    CHECK(verify_algebra_laws(*m.algebra, {.pair_budget = 15000, .triple_budget = 4000}).ok());
}

TEST_CASE("decomposable spans") {
    ExteriorAlgebra e4(4);
    auto full = Subspace::full(e4.dim(2));
    auto res = decomposable_span(e4, full);
    CHECK(res.exact);
    CHECK(res.span == full);

    KummerAlgebra k(3);
    QMat row1(1, k.dim(2));
    auto v = k.coords(k.point_class(0), 2);
    for (int c = 0; c < k.dim(2); ++c) row1.at(0, c) = v[c];
    auto res1 = decomposable_span(k, Subspace::span_of_rows(row1));
    CHECK(res1.exact);
    CHECK(res1.span.is_zero());

    QMat row3(3, k.dim(2));
    for (int x = 0; x < 3; ++x) {
        auto vx = k.coords(k.point_class(x), 2);
        for (int c = 0; c < k.dim(2); ++c) row3.at(x, c) = vx[c];
    }
    auto res3 = decomposable_span(k, Subspace::span_of_rows(row3));
    CHECK(res3.exact);
    CHECK(res3.span.is_zero());

    auto res0 = decomposable_span(e4, Subspace::zero(e4.dim(2)));
    CHECK(res0.exact);
    CHECK(res0.span.is_zero());
}

TEST_CASE("q form on the torus: hyperbolic of signature (3,3)") {
    ExteriorAlgebra e4(4);
    Elem zero;
    CHECK(q_form_matrix(e4, zero).is_zero());
    QMat q = q_form_matrix(e4, Elem::basis(e4.unit_index()));
    auto rep = isotropy_report(q, Subspace::full(6));
    CHECK(rep.rank == 6);
    CHECK(rep.positive == 3);
    CHECK(rep.negative == 3);
    CHECK(rep.isotropic_witness.has_value());

    QMat hyp{{1, 0}, {0, -1}};
    auto rep2 = isotropy_report(hyp, Subspace::full(2));
    CHECK(rep2.positive == 1);
    CHECK(rep2.negative == 1);
    REQUIRE(rep2.isotropic_witness.has_value());
    CHECK_FALSE(rep2.totally_isotropic_plane);

    auto rep3 = isotropy_report(QMat(2, 2), Subspace::full(2));
    CHECK(rep3.rank == 0);
    CHECK(rep3.totally_isotropic_plane);

    auto rep4 = isotropy_report(QMat{{1, 0}, {0, 1}}, Subspace::full(2));
    CHECK_FALSE(rep4.isotropic_witness.has_value());
    CHECK_FALSE(rep4.totally_isotropic_plane);
    CHECK(rep4.positive == 2);

    // q_c symmetry for random degree-2 classes
    Rng rng(55);
    KummerAlgebra k(2);
    for (int t = 0; t < 5; ++t) {
        Elem c;
        for (int i : k.basis_indices(2))
            if (rng.below(3) == 0) c.accumulate(i, Rat(rng.range(-2, 2)));
        c.normalize();
        QMat g = q_form_matrix(k, c);
        CHECK(g == g.transpose());
    }
}

TEST_CASE("X2 model: structure, vanishing spot checks, negative control") {
    TorusDatum t = build_torus(ZPoly{1, 1, 0, 0, 0, 0, 1});
    X2Model m = build_X2_model(t, {});
    CHECK(m.kummer->dim(2) == 79);
    CHECK(m.kk->dim(2) == 158);
    CHECK(m.algebra->dim(2) == 160);
    CHECK(m.algebra->dim(1) == 0);
    CHECK(m.algebra->top_degree() == 12);
    CHECK(m.algebra->dim(12) == 1);

    CHECK(m.diag_restriction.check(4000).ok());
    auto second = std::dynamic_pointer_cast<const BlowupAlgebra>(m.algebra);
    REQUIRE(second);
    auto first = std::dynamic_pointer_cast<const BlowupAlgebra>(second->base_ptr());
    REQUIRE(first);
    auto filter = [&](int i) { return first->is_tau(i); };
    CHECK(m.graph_restriction.check(4000, 7, filter).ok());

    std::vector<Elem> cs = {Elem::basis(m.h_diag), Elem::basis(m.h_graph),
                            Elem::basis(m.ex_left[3]), Elem::basis(m.ex_right[7])};
    for (const auto& c : cs) {
        for (int i : {0, 3, 7}) {
            Elem a = Elem::basis(m.a2_left[i]);
            Elem b = Elem::basis(m.a2_right[(i + 2) % 15]);
            CHECK(sgn(q_form_value(*m.algebra, c, a, b)) == 0);
            CHECK(sgn(q_form_value(*m.algebra, c, a, a)) == 0);
        }
    }

    CHECK(verify_algebra_laws(*m.algebra, {.pair_budget = 3000, .triple_budget = 800}).ok());

    // tampered normal data (invariant c_1) must break the vanishing
    X2ChernConfig bad;
    bad.tamper_invariant_c1 = true;
    X2Model mb = build_X2_model(t, bad);
    bool some_nonzero = false;
    for (int i = 0; i < 15 && !some_nonzero; ++i)
        for (int j = 0; j < 15 && !some_nonzero; ++j)
            if (sgn(q_form_value(*mb.algebra, Elem::basis(mb.h_diag), Elem::basis(mb.a2_left[i]),
                                 Elem::basis(mb.a2_right[j]))) != 0)
                some_nonzero = true;
    CHECK(some_nonzero);
}

TEST_CASE("qc table: parallel equals serial") {
    TorusDatum t = build_torus(ZPoly{1, 1, 0, 0, 0, 0, 1});
    X2Model m = build_X2_model(t, {});
    std::vector<Elem> cs;
    cs.push_back(Elem::basis(m.h_diag));
    cs.push_back(Elem::basis(m.h_graph));
    for (int x = 0; x < 6; ++x) cs.push_back(Elem::basis(m.ex_left[x]));
    std::vector<Elem> v;
    for (int i = 0; i < 8; ++i) v.push_back(Elem::basis(m.a2_left[i]));
    for (int i = 0; i < 8; ++i) v.push_back(Elem::basis(m.a2_right[i]));
    auto ser = qc_vanishing_table_serial(*m.algebra, cs, v);
    auto par = qc_vanishing_table(*m.algebra, cs, v, true);
    CHECK(ser.all_zero);
    CHECK(par.all_zero);
    CHECK(ser.nonzero_entries == par.nonzero_entries);
}
