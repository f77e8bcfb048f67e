#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonproj/lattice.hpp"
#include "nonproj/similarity.hpp"
#include "nonproj/subspace.hpp"
#include "nonproj/zpoly.hpp"
#include "test_helpers.hpp"

using namespace nonproj;
using nonproj::testing::cofactor_det;
using nonproj::testing::random_unimodular;

TEST_CASE("kernel of injective and rank-deficient maps") {
    CHECK(kernel_basis(QMat::identity(4)).dim() == 0);

    QMat row{{1, 1}};
    Subspace k = kernel_basis(row);
    CHECK(k.dim() == 1);
    CHECK(k.contains(std::vector<Rat>{Rat(1), Rat(-1)}));

    // companion(x^4+x+1) - I has det = +-f(1) = +-3, so the kernel is zero
    ZPoly f{1, 1, 0, 0, 1};
    ZMat m = f.companion() - ZMat::identity(4);
    CHECK(cofactor_det(m) != 0);
    CHECK(abs(cofactor_det(m)) == abs(f.eval(Int(1))));
    CHECK(kernel_basis(m.to_q()).dim() == 0);
}

TEST_CASE("rank-nullity on random matrices") {
    Rng rng(21);
    for (int t = 0; t < 25; ++t) {
        int rows = 1 + static_cast<int>(rng.below(5));
        int cols = 1 + static_cast<int>(rng.below(5));
        QMat m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = Rat(rng.range(-3, 3));
        CHECK(m.rank() + kernel_basis(m).dim() == cols);
    }
}

TEST_CASE("subspace sum and intersection") {
    Subspace x = Subspace::span_of_rows(QMat{{1, 0}});
    Subspace y = Subspace::span_of_rows(QMat{{0, 1}});
    CHECK(x.intersect(y).dim() == 0);
    CHECK(x.sum(y) == Subspace::full(2));
    CHECK(x.intersect(x) == x);
    CHECK(x.sum(x) == x);

    // dimension formula on random spans
    Rng rng(22);
    for (int t = 0; t < 20; ++t) {
        int amb = 4 + static_cast<int>(rng.below(3));
        auto rand_space = [&] {
            QMat m(2 + static_cast<int>(rng.below(3)), amb);
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < amb; ++c) m.at(r, c) = Rat(rng.range(-2, 2));
            return Subspace::span_of_rows(m);
        };
        Subspace a = rand_space(), b = rand_space();
        CHECK(a.dim() + b.dim() == a.intersect(b).dim() + a.sum(b).dim());
        CHECK(a.sum(b).contains(a));
        CHECK(a.contains(a.intersect(b)));
    }
}

TEST_CASE("canonical representation makes equality syntactic") {
    QMat b1{{1, 1, 0}, {0, 2, 2}};
    QMat b2{{2, 2, 0}, {1, 3, 2}, {3, 3, 0}};
    CHECK(Subspace::span_of_rows(b1) == Subspace::span_of_rows(b2));
}

TEST_CASE("kernel of pr1 meets kernel of pr1+pr2 trivially in Q^8") {
    // n = 2 instance, by direct elimination
    QMat pr1(4, 8), sum(4, 8);
    for (int i = 0; i < 4; ++i) {
        pr1.at(i, i) = 1;
        sum.at(i, i) = 1;
        sum.at(i, 4 + i) = 1;
    }
    CHECK(kernel_basis(pr1).intersect(kernel_basis(sum)).dim() == 0);
}

TEST_CASE("saturation") {
    IntegerLattice l = IntegerLattice::span_of_rows(ZMat{{2, 0}});
    IntegerLattice s = l.saturate();
    CHECK(s.rank() == 1);
    CHECK(s.contains({Int(1), Int(0)}));

    // already primitive lattices are fixed
    IntegerLattice p = IntegerLattice::span_of_rows(ZMat{{1, 2, 3}, {0, 1, 1}});
    CHECK(p.saturate() == p);

    // index-8 sublattice of Z^2 saturates to the full lattice; the Smith form
    // is the oracle for the index
    IntegerLattice q = IntegerLattice::span_of_rows(ZMat{{2, 2}, {0, 4}});
    auto inv = smith_normal_form(q.basis());
    Int idx = inv[0] * inv[1];
    CHECK(idx == 8);
    CHECK(q.saturation_index() == idx);
    CHECK(q.saturate() == IntegerLattice::full(2));

    // idempotence and finite index on random lattices
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        ZMat m(2 + static_cast<int>(rng.below(2)), 4);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < 4; ++c) m.at(r, c) = Int(rng.range(-4, 4));
        IntegerLattice lat = IntegerLattice::span_of_rows(m);
        IntegerLattice sat = lat.saturate();
        CHECK(sat.saturate() == sat);
        CHECK(sat.rank() == lat.rank());
        CHECK(sat.is_primitive());
        // saturation contains the lattice
        for (int r = 0; r < lat.rank(); ++r) {
            std::vector<Int> v(4);
            for (int c = 0; c < 4; ++c) v[c] = lat.basis().at(r, c);
            CHECK(sat.contains(v));
        }
    }
}

TEST_CASE("smith normal form") {
    auto inv = smith_normal_form(ZMat{{2, 0}, {0, 3}});
    CHECK(inv == std::vector<Int>{Int(1), Int(6)});
    CHECK(smith_normal_form(ZMat::identity(3)) == std::vector<Int>(3, Int(1)));
    CHECK(smith_normal_form(ZMat(2, 3)) == std::vector<Int>(2, Int(0)));

    Rng rng(24);
    for (int t = 0; t < 15; ++t) {
        ZMat m(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.at(r, c) = Int(rng.range(-5, 5));
        auto d = smith_normal_form(m);
        // divisibility chain
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            if (sgn(d[i + 1]) == 0) continue;
            CHECK(sgn(d[i]) != 0);
            CHECK(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
        }
        // invariant under unimodular multiplication
        ZMat l = random_unimodular(rng, 3), r = random_unimodular(rng, 3);
        CHECK(smith_normal_form(l * m * r) == d);
        // product of invariants = |det|
        Int prod = 1;
        for (const Int& x : d) prod *= x;
        CHECK(prod == abs(m.det()));
        CHECK(m.det() == cofactor_det(m));
    }
}

TEST_CASE("similarity: transpose, witnesses, counterexamples") {
    Rng rng(25);
    for (int t = 0; t < 10; ++t) {
        int n = 2 + static_cast<int>(rng.below(3));
        QMat m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.at(r, c) = Rat(rng.range(-3, 3));
        auto res = similar(m, m.transpose());
        CHECK(res.similar);
        REQUIRE(res.witness.has_value());
        // witness check is the oracle: g m g^{-1} = m^T exactly
        CHECK(*res.witness * m == m.transpose() * *res.witness);
        CHECK(sgn(res.witness->det()) != 0);
    }

    QMat id = QMat::identity(2);
    QMat unip{{1, 1}, {0, 1}};
    CHECK_FALSE(similar(id, unip).similar);

    // conjugates of a companion matrix
    ZPoly f{1, 1, 0, 0, 1};
    QMat comp = f.companion().to_q();
    for (int t = 0; t < 5; ++t) {
        QMat g = random_unimodular(rng, 4).to_q();
        QMat conj = g * comp * g.inverse();
        auto res = similar(comp, conj);
        CHECK(res.similar);
        CHECK(*res.witness * comp == conj * *res.witness);
    }

    // symmetric + transitive spot check
    QMat a{{0, -1}, {1, 0}};
    QMat g{{1, 2}, {1, 3}};
    QMat b = g * a * g.inverse();
    CHECK(similar(a, b).similar);
    CHECK(similar(b, a).similar);
    CHECK(similar(a, a).similar);

    CHECK_THROWS_AS(similar(QMat(2, 3), QMat(2, 3)), Error);
}

TEST_CASE("invariant factors of a companion matrix") {
    // the companion matrix of f has single invariant factor f
    ZPoly f{3, 1, 2, 1};
    auto inv = invariant_factors(f.companion().to_q());
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == f.to_q());
    // identity has n linear invariant factors
    auto inv_id = invariant_factors(QMat::identity(3));
    CHECK(inv_id.size() == 3);
}
