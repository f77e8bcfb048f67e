#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonproj/algebra.hpp"
#include "nonproj/kummer.hpp"
#include "nonproj/laws.hpp"
#include "nonproj/morphism.hpp"
#include "test_helpers.hpp"

using namespace nonproj;

TEST_CASE("exterior algebra dims, signs, integration") {
    ExteriorAlgebra e2(2);
    CHECK(e2.betti() == std::vector<int>{1, 2, 1});
    Elem e1 = e2.generator(0), f = e2.generator(1);
    CHECK(e2.mul(e1, f) == e2.mul(f, e1).scaled(Rat(-1)));
    CHECK(e2.mul(e1, e1).is_zero());

    ExteriorAlgebra e8(8);
    CHECK(e8.total_dim() == 256);
    CHECK(e8.dim(4) == 70);
    // integral of the full wedge is 1 under the standard orientation
    Elem vol = Elem::basis(e8.index_of_mask(0xFF));
    CHECK(e8.integrate(vol) == 1);
    Elem prod = Elem::basis(e8.unit_index());
    for (int i = 0; i < 8; ++i) prod = e8.mul(prod, e8.generator(i));
    CHECK(e8.integrate(prod) == 1);
    CHECK(verify_algebra_laws(e8, {.pair_budget = 4000, .triple_budget = 4000}).ok());
}

TEST_CASE("tensor model matches the exterior algebra on Q^2 (x) Q^2") {
    auto a = std::make_shared<ExteriorAlgebra>(2);
    auto b = std::make_shared<ExteriorAlgebra>(2);
    TensorAlgebra t(a, b);
    ExteriorAlgebra e4(4);
    CHECK(t.betti() == e4.betti());

    std::vector<Elem> gens = {t.embed_left(a->generator(0)), t.embed_left(a->generator(1)),
                              t.embed_right(b->generator(0)), t.embed_right(b->generator(1))};
    Elem top = Elem::basis(t.unit_index());
    for (const Elem& g : gens) top = t.mul(top, g);
    CHECK(t.integrate(top) == 1);
    // pairing spot check across the two factors: (f1 f3).(f2 f4) = -vol
    Elem x = t.mul(gens[0], gens[2]);
    Elem y = t.mul(gens[1], gens[3]);
    CHECK(t.integrate(t.mul(x, y)) == -1);
    CHECK(verify_algebra_laws(t, {.pair_budget = 2000, .triple_budget = 2000}).ok());

    // A (x) Q = A
    auto triv = std::make_shared<ExteriorAlgebra>(0);
    TensorAlgebra at(a, triv);
    CHECK(at.betti() == a->betti());

    // Kunneth in degree 1: b1 of a product adds
    CHECK(t.dim(1) == a->dim(1) + b->dim(1));
}

TEST_CASE("invariant even part") {
    EvenExteriorAlgebra inv(6);
    CHECK(inv.betti() == std::vector<int>{1, 0, 15, 0, 15, 0, 1});
    // squares of decomposable degree-2 classes stay zero
    Elem d = Elem::basis(inv.basis_indices(2)[0]);
    CHECK(inv.mul(d, d).is_zero());
    // wedge^2 x wedge^4 pairing is nondegenerate
    QMat g = inv.pairing_matrix(2);
    CHECK(g.rank() == 15);
    CHECK(verify_algebra_laws(inv, {.pair_budget = 2000, .triple_budget = 2000}).ok());
}

TEST_CASE("projective space model") {
    TruncatedPolynomialAlgebra p2(2);
    CHECK(p2.betti() == std::vector<int>{1, 0, 1, 0, 1});
    CHECK(p2.dim(1) == 0);  // simply connected
    Elem h = Elem::basis(p2.basis_indices(2)[0]);
    CHECK(p2.integrate(p2.mul(h, h)) == 1);
    CHECK(p2.mul(h, p2.mul(h, h)).is_zero());
    CHECK(verify_algebra_laws(p2).ok());
}

TEST_CASE("kummer model") {
    KummerAlgebra k(3);
    CHECK(k.dim(0) == 1);
    CHECK(k.dim(1) == 0);  // simply connected
    CHECK(k.dim(2) == 15 + 64);
    CHECK(k.top_degree() == 6);
    CHECK(k.dim(6) == 1);
    CHECK_THROWS_AS(KummerAlgebra(1), Error);

    // point classes: e_x e_y = 0, e_x . invariant+ = 0, powers per the
    // point-blow-up relation
    Elem e0 = k.point_class(0), e1 = k.point_class(1);
    CHECK(k.mul(e0, e1).is_zero());
    Elem inv2 = Elem::basis(k.basis_indices(2)[0]);
    CHECK(k.is_invariant(k.basis_indices(2)[0]));
    CHECK(k.mul(e0, inv2).is_zero());
    CHECK(k.integrate(k.power(e0, 3)) == 1);  // (-1)^{n-1} = +1 for n = 3
    CHECK(k.power(e0, 4).is_zero());
    // half-integration on the invariant part
    std::uint32_t full = (1u << 6) - 1;
    CHECK(k.integrate(k.from_even_mask(full)) == Rat(1, 2));

    for (int d = 0; d <= 3; ++d) {
        QMat g = k.pairing_matrix(2 * d);
        CHECK(g.rows() == g.cols());
        CHECK(g.rank() == g.rows());
    }
    CHECK(verify_algebra_laws(k, {.pair_budget = 20000, .triple_budget = 8000}).ok());
}

TEST_CASE("kummer self-map pullback is a ring morphism") {
    ZPoly f{1, 1, 0, 0, 0, 0, 1};
    auto k = std::make_shared<KummerAlgebra>(3);
    AlgebraMorphism psi = kummer_selfmap_pullback(k, f.companion());
    auto rep = psi.check(4000);
    CHECK(rep.ok());
    // invertible in every degree (phi is unimodular for this f)
    AlgebraMorphism inv = invert_morphism(psi);
    for (int d : {2, 4}) {
        QMat prod = inv.degree_matrix(d) * psi.degree_matrix(d);
        CHECK(prod == QMat::identity(k->dim(d)));
    }
}

TEST_CASE("morphism checker flags non-multiplicative maps") {
    auto e2 = std::make_shared<ExteriorAlgebra>(2);
    auto e4 = std::make_shared<ExteriorAlgebra>(4);
    AlgebraMorphism good = AlgebraMorphism::from_generator_images(
        e2, e4, {e4->generator(0), e4->generator(1)});
    CHECK(good.check().ok());
    // tampered image table breaks multiplicativity
    std::vector<Elem> imgs(e2->total_dim());
    for (int i = 0; i < e2->total_dim(); ++i) imgs[i] = good.image(i);
    imgs[e2->index_of_mask(0b11)] = Elem::basis(e4->index_of_mask(0b1100));
    AlgebraMorphism bad(e2, e4, imgs);
    CHECK_FALSE(bad.check().ok());
}

TEST_CASE("parallel and serial law checks agree") {
    KummerAlgebra k(2);
    LawOptions serial{.pair_budget = 3000, .triple_budget = 3000, .parallel = false, .seed = 5};
    LawOptions par{.pair_budget = 3000, .triple_budget = 3000, .parallel = true, .seed = 5};
    auto r1 = verify_algebra_laws(k, serial);
    auto r2 = verify_algebra_laws(k, par);
    CHECK(r1.ok());
    CHECK(r2.ok());
    CHECK(r1.pairs_checked == r2.pairs_checked);
    CHECK(r1.triples_checked == r2.triples_checked);
}
