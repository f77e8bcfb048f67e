#include "nonproj/kummer.hpp"

#include <bit>

namespace nonproj {

namespace {

std::string point_label(int x, int k, int n) {
    std::string s = "ex{";
    for (int b = 0; b < 2 * n; ++b) s += (x & (1 << b)) ? '1' : '0';
    s += "}";
    if (k > 1) s += "^" + std::to_string(k);
    return s;
}

std::string even_label(std::uint32_t mask) {
    if (mask == 0) return "1";
    std::string s = "w";
    for (int b = 0; b < 32; ++b)
        if (mask & (1u << b)) s += "." + std::to_string(b + 1);
    return s;
}

}  // namespace

KummerAlgebra::KummerAlgebra(int n) : n_(n) {
    if (n < 2) throw Error("Kummer model needs n >= 2");
    if (n > 8) throw Error("Kummer model rank out of the supported desk range");
    int m = 2 * n;
    set_top(m);
    inv_index_of_mask_.assign(1u << m, -1);
    for (int deg = 0; deg <= m; deg += 2)
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            if (std::popcount(mask) != deg) continue;
            int idx = add_basis_element(deg, even_label(mask));
            mask_of_.push_back(mask);
            inv_index_of_mask_[mask] = idx;
            kind_.push_back(-1);
            if (deg == m) vol_index_ = idx;
        }
    exc_index_.assign(static_cast<size_t>(num_points()) * (n - 1), -1);
    for (int x = 0; x < num_points(); ++x)
        for (int k = 1; k <= n - 1; ++k) {
            int idx = add_basis_element(2 * k, point_label(x, k, n));
            exc_index_[static_cast<size_t>(x) * (n - 1) + (k - 1)] = idx;
            kind_.push_back(x * (n - 1) + (k - 1));
            mask_of_.push_back(0);
        }
}

int KummerAlgebra::invariant_index(std::uint32_t mask) const {
    int idx = inv_index_of_mask_[mask];
    if (idx < 0) throw Error("mask is not an even invariant basis element");
    return idx;
}

std::uint32_t KummerAlgebra::mask_of_invariant(int index) const {
    if (!is_invariant(index)) throw Error("not an invariant basis element");
    return mask_of_[index];
}

std::pair<int, int> KummerAlgebra::exceptional_of(int index) const {
    int k = kind_[index];
    if (k < 0) throw Error("not an exceptional basis element");
    return {k / (n_ - 1), k % (n_ - 1) + 1};
}

Elem KummerAlgebra::from_even_mask(std::uint32_t mask, const Rat& c) const {
    return Elem::basis(invariant_index(mask), c);
}

Elem KummerAlgebra::mul_basis(int i, int j) const {
    bool inv_i = is_invariant(i), inv_j = is_invariant(j);
    if (inv_i && inv_j) {
        std::uint32_t a = mask_of_[i], b = mask_of_[j];
        if (a & b) return Elem();
        return Elem::basis(inv_index_of_mask_[a | b],
                           Rat(ExteriorAlgebra::sign_of_merge(a, b)));
    }
    if (inv_i || inv_j) {
        // positive-degree invariant classes restrict trivially to the point
        // centers, so they annihilate every exceptional summand
        int inv = inv_i ? i : j, exc = inv_i ? j : i;
        if (degree_of(inv) > 0) return Elem();
        return Elem::basis(exc);
    }
    auto [x, a] = exceptional_of(i);
    auto [y, b] = exceptional_of(j);
    if (x != y) return Elem();
    int k = a + b;
    if (k <= n_ - 1) return Elem::basis(exceptional_index(x, k));
    if (k == n_) {
        // point-blow-up relation: e_x^n = (-1)^{n-1} [pt], and the point class
        // of the degree-2 quotient integrates to 1, i.e. equals 2 vol
        return Elem::basis(vol_index_, Rat((n_ % 2) ? 2 : -2));
    }
    return Elem();
}

Rat KummerAlgebra::integrate_basis(int i) const {
    return i == vol_index_ ? Rat(1, 2) : Rat(0);
}

AlgebraMorphism kummer_selfmap_pullback(const std::shared_ptr<const KummerAlgebra>& k,
                                        const ZMat& phi) {
    int m = 2 * k->n();
    if (phi.rows() != m || phi.cols() != m) throw Error("endomorphism size mismatch");

    // invert phi mod 2 to get the half-period permutation
    std::vector<std::uint32_t> inv_rows(m);  // rows of phi^{-1} mod 2 as bitmasks
    {
        // Gauss-Jordan over F_2 on [phi | I]
        std::vector<std::uint32_t> rows(m);
        for (int r = 0; r < m; ++r) {
            std::uint32_t bits = 0;
            for (int c = 0; c < m; ++c)
                if (mpz_odd_p(phi.at(r, c).get_mpz_t())) bits |= 1u << c;
            rows[r] = bits;
            inv_rows[r] = 1u << r;
        }
        for (int col = 0; col < m; ++col) {
            int p = -1;
            for (int r = col; r < m; ++r)
                if (rows[r] & (1u << col)) { p = r; break; }
            if (p < 0) throw Error("phi is singular mod 2; half-period action undefined");
            std::swap(rows[p], rows[col]);
            std::swap(inv_rows[p], inv_rows[col]);
            for (int r = 0; r < m; ++r) {
                if (r == col || !(rows[r] & (1u << col))) continue;
                rows[r] ^= rows[col];
                inv_rows[r] ^= inv_rows[col];
            }
        }
    }
    auto apply_inv_mod2 = [&](int x) {
        std::uint32_t y = 0;
        for (int r = 0; r < m; ++r)
            if (std::popcount(inv_rows[r] & static_cast<std::uint32_t>(x)) % 2) y |= 1u << r;
        return static_cast<int>(y);
    };

    // generator images on the torus H^1: e_i -> sum_j phi_{ij} e_j (the
    // transpose action in column convention), wedged through the full
    // exterior algebra and projected into the even part
    ExteriorAlgebra full(m);
    std::vector<Elem> gen(m);
    for (int i = 0; i < m; ++i) {
        Elem g;
        for (int j = 0; j < m; ++j) {
            if (sgn(phi.at(i, j)) == 0) continue;
            g.accumulate(full.index_of_mask(1u << j), Rat(phi.at(i, j)));
        }
        g.normalize();
        gen[i] = g;
    }

    std::vector<Elem> images(k->total_dim());
    for (int idx = 0; idx < k->total_dim(); ++idx) {
        if (k->is_invariant(idx)) {
            std::uint32_t mask = k->mask_of_invariant(idx);
            Elem acc = Elem::basis(full.index_of_mask(0));
            for (int b = 0; b < m; ++b)
                if (mask & (1u << b)) acc = full.mul(acc, gen[b]);
            Elem img;
            for (const auto& t : acc.terms())
                img.accumulate(k->invariant_index(full.mask_of(t.index)), t.coeff);
            img.normalize();
            images[idx] = img;
        } else {
            auto [x, kk] = k->exceptional_of(idx);
            images[idx] = Elem::basis(k->exceptional_index(apply_inv_mod2(x), kk));
        }
    }
    return AlgebraMorphism(k, k, std::move(images));
}

AlgebraMorphism invert_morphism(const AlgebraMorphism& m) {
    if (m.src().total_dim() != m.dst().total_dim())
        throw Error("cannot invert: dimension mismatch");
    std::vector<Elem> images(m.src().total_dim());
    for (int deg = 0; deg <= m.src().top_degree(); ++deg) {
        if (m.src().dim(deg) == 0) continue;
        QMat mat = m.degree_matrix(deg);
        QMat inv = mat.inverse();
        for (int c = 0; c < m.src().dim(deg); ++c) {
            std::vector<Rat> col(inv.rows());
            for (int r = 0; r < inv.rows(); ++r) col[r] = inv.at(r, c);
            images[m.dst().basis_indices(deg)[c]] = m.src().from_coords(col, deg);
        }
    }
    return AlgebraMorphism(m.dst_ptr(), m.src_ptr(), std::move(images));
}

}  // namespace nonproj
