#include "nonproj/roots.hpp"

#include <algorithm>
#include <cmath>

namespace nonproj {

namespace {

std::complex<double> eval_c(const ZPoly& f, std::complex<double> z) {
    std::complex<double> v = 0;
    for (int i = f.degree(); i >= 0; --i) v = v * z + f.coeff(i).get_d();
    return v;
}

}  // namespace

RootSystem isolate_roots(const ZPoly& f, const IsolateOptions& opts) {
    auto prop = check_property_P(f);
    if (!prop.holds)
        throw Error("root isolation requires condition (P): " + prop.diagnosis);
    int deg = f.degree();

    // Durand-Kerner from a deterministic non-real spiral
    std::vector<std::complex<double>> z(deg);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (int i = 0; i < deg; ++i) {
        acc *= seed;
        z[i] = acc;
    }
    for (int it = 0; it < opts.max_iterations; ++it) {
        double worst = 0.0;
        for (int i = 0; i < deg; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= z[i] - z[j];
            std::complex<double> w = eval_c(f, z[i]) / denom;
            z[i] -= w;
            worst = std::max(worst, std::abs(w));
        }
        if (worst < 1e-15) break;
    }

    RootSystem rs;
    rs.boxes.resize(deg);
    for (int i = 0; i < deg; ++i) {
        std::complex<double> denom(1.0, 0.0);
        for (int j = 0; j < deg; ++j)
            if (j != i) denom *= z[i] - z[j];
        // Weierstrass a-posteriori bound: disks of radius deg*|W_i| around the
        // approximations cover all roots; disjoint disks isolate one root each.
        double radius = deg * std::abs(eval_c(f, z[i]) / denom);
        rs.boxes[i] = {z[i], radius};
    }
    for (int i = 0; i < deg; ++i)
        for (int j = i + 1; j < deg; ++j) {
            double gap = std::abs(rs.boxes[i].center - rs.boxes[j].center);
            if (gap <= rs.boxes[i].radius + rs.boxes[j].radius)
                throw Error("root isolation failed: boxes overlap (refinement exhausted)");
        }
    for (int i = 0; i < deg; ++i)
        if (std::abs(rs.boxes[i].center.imag()) <= rs.boxes[i].radius)
            throw Error("root isolation failed: box touches the real axis");

    // conjugate pairing by nearest mirror image
    std::vector<bool> used(deg, false);
    for (int i = 0; i < deg; ++i) {
        if (used[i] || rs.boxes[i].center.imag() < 0) continue;
        int best = -1;
        double best_d = 0;
        for (int j = 0; j < deg; ++j) {
            if (used[j] || j == i || rs.boxes[j].center.imag() > 0) continue;
            double dist = std::abs(std::conj(rs.boxes[i].center) - rs.boxes[j].center);
            if (best < 0 || dist < best_d) {
                best = j;
                best_d = dist;
            }
        }
        if (best < 0) throw Error("conjugate pairing failed");
        if (best_d > rs.boxes[i].radius + rs.boxes[best].radius)
            throw Error("conjugate pairing failed: mirror image not within certified radius");
        used[i] = used[best] = true;
        rs.pairs.emplace_back(i, best);
    }
    if (static_cast<int>(rs.pairs.size()) * 2 != deg)
        throw Error("conjugate pairing failed: odd leftover");

    rs.selection.resize(rs.pairs.size());
    for (size_t k = 0; k < rs.pairs.size(); ++k) {
        bool lower = k < opts.select_lower.size() && opts.select_lower[k];
        rs.selection[k] = lower ? rs.pairs[k].second : rs.pairs[k].first;
    }
    return rs;
}

double eigenvalue_product_separation(const RootSystem& rs) {
    int n = rs.n_pairs();
    std::vector<std::complex<double>> prods;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            prods.push_back(rs.selected_root(i) * std::conj(rs.selected_root(j)));
    double best = -1;
    for (size_t a = 0; a < prods.size(); ++a)
        for (size_t b = a + 1; b < prods.size(); ++b) {
            double d = std::abs(prods[a] - prods[b]);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

}  // namespace nonproj
