#include "nonproj/algebra.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace nonproj {

Elem Elem::basis(int index, const Rat& c) {
    Elem e;
    if (sgn(c) != 0) e.terms_.push_back({index, c});
    return e;
}

Rat Elem::coeff(int index) const {
    for (const Term& t : terms_)
        if (t.index == index) return t.coeff;
    return Rat(0);
}

Elem& Elem::add_scaled(const Elem& other, const Rat& s) {
    if (sgn(s) == 0 || other.is_zero()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
        if (j == other.terms_.size() ||
            (i < terms_.size() && terms_[i].index < other.terms_[j].index)) {
            merged.push_back(terms_[i++]);
        } else if (i == terms_.size() || other.terms_[j].index < terms_[i].index) {
            merged.push_back({other.terms_[j].index, other.terms_[j].coeff * s});
            ++j;
        } else {
            Rat c = terms_[i].coeff + other.terms_[j].coeff * s;
            if (sgn(c) != 0) merged.push_back({terms_[i].index, c});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Elem Elem::scaled(const Rat& s) const {
    Elem e;
    if (sgn(s) == 0) return e;
    e.terms_ = terms_;
    for (Term& t : e.terms_) t.coeff *= s;
    return e;
}

void Elem::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.index < b.index; });
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (!out.empty() && out.back().index == t.index) out.back().coeff += t.coeff;
        else out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return sgn(t.coeff) == 0; }),
              out.end());
    terms_ = std::move(out);
}

int GradedAlgebra::add_basis_element(int degree, std::string label) {
    int index = static_cast<int>(degree_of_.size());
    degree_of_.push_back(degree);
    labels_.push_back(std::move(label));
    by_degree_[degree].push_back(index);
    return index;
}

int GradedAlgebra::degree_of(const Elem& e) const {
    if (e.is_zero()) throw Error("degree of zero element is undefined");
    int d = degree_of_[e.terms().front().index];
    for (const auto& t : e.terms())
        if (degree_of_[t.index] != d) throw Error("element is not degree-homogeneous");
    return d;
}

Elem GradedAlgebra::mul(const Elem& a, const Elem& b) const {
    Elem out;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            if (degree_of_[ta.index] + degree_of_[tb.index] > top_) continue;
            Elem prod = mul_basis(ta.index, tb.index);
            out.add_scaled(prod, ta.coeff * tb.coeff);
        }
    return out;
}

Elem GradedAlgebra::power(const Elem& a, int k) const {
    Elem out = Elem::basis(unit_index());
    for (int i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

Rat GradedAlgebra::integrate(const Elem& e) const {
    Rat s = 0;
    for (const auto& t : e.terms())
        if (degree_of_[t.index] == top_) s += t.coeff * integrate_basis(t.index);
    return s;
}

std::vector<int> GradedAlgebra::betti() const {
    std::vector<int> b(top_ + 1);
    for (int d = 0; d <= top_; ++d) b[d] = dim(d);
    return b;
}

std::vector<Rat> GradedAlgebra::coords(const Elem& e, int deg) const {
    std::vector<Rat> v(dim(deg));
    const auto& idx = by_degree_[deg];
    for (const auto& t : e.terms()) {
        auto it = std::lower_bound(idx.begin(), idx.end(), t.index);
        if (it == idx.end() || *it != t.index)
            throw Error("element has a component outside the requested degree");
        v[it - idx.begin()] = t.coeff;
    }
    return v;
}

Elem GradedAlgebra::from_coords(const std::vector<Rat>& v, int deg) const {
    if (static_cast<int>(v.size()) != dim(deg)) throw Error("coordinate size mismatch");
    Elem e;
    for (size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) e.accumulate(by_degree_[deg][i], v[i]);
    e.normalize();
    return e;
}

QMat GradedAlgebra::pairing_matrix(int deg) const {
    int comp = top_ - deg;
    QMat g(dim(deg), dim(comp));
    for (int r = 0; r < dim(deg); ++r)
        for (int c = 0; c < dim(comp); ++c)
            g.at(r, c) = pair(Elem::basis(by_degree_[deg][r]), Elem::basis(by_degree_[comp][c]));
    return g;
}

namespace {

std::string mask_label(std::uint32_t mask) {
    if (mask == 0) return "1";
    std::string s = "e";
    bool first = true;
    for (int b = 0; b < 32; ++b)
        if (mask & (1u << b)) {
            if (!first) s += ".";
            s += std::to_string(b + 1);
            first = false;
        }
    return s;
}

}  // namespace

ExteriorAlgebra::ExteriorAlgebra(int m) : m_(m) {
    if (m < 0 || m > 16) throw Error("exterior algebra rank out of the supported desk range");
    set_top(m);
    mask_of_.reserve(1u << m);
    index_of_mask_.assign(1u << m, -1);
    for (int deg = 0; deg <= m; ++deg)
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            if (std::popcount(mask) != deg) continue;
            int idx = add_basis_element(deg, mask_label(mask));
            mask_of_.push_back(mask);
            index_of_mask_[mask] = idx;
        }
}

int ExteriorAlgebra::sign_of_merge(std::uint32_t a, std::uint32_t b) {
    // (-1)^{#{(x,y) in a x b : x > y}}
    int inversions = 0;
    for (std::uint32_t bits = b; bits; bits &= bits - 1) {
        int y = std::countr_zero(bits);
        inversions += std::popcount(a >> (y + 1));
    }
    return (inversions % 2) ? -1 : 1;
}

Elem ExteriorAlgebra::mul_basis(int i, int j) const {
    std::uint32_t a = mask_of_[i], b = mask_of_[j];
    if (a & b) return Elem();
    return Elem::basis(index_of_mask_[a | b], Rat(sign_of_merge(a, b)));
}

Rat ExteriorAlgebra::integrate_basis(int i) const {
    return mask_of_[i] == (1u << m_) - 1 ? Rat(1) : Rat(0);
}

TensorAlgebra::TensorAlgebra(std::shared_ptr<const GradedAlgebra> a,
                             std::shared_ptr<const GradedAlgebra> b)
    : a_(std::move(a)), b_(std::move(b)) {
    set_top(a_->top_degree() + b_->top_degree());
    pair_index_.assign(static_cast<size_t>(a_->total_dim()) * b_->total_dim(), -1);
    for (int deg = 0; deg <= top_degree(); ++deg)
        for (int da = 0; da <= std::min(deg, a_->top_degree()); ++da) {
            int db = deg - da;
            if (db > b_->top_degree()) continue;
            for (int ia : a_->basis_indices(da))
                for (int ib : b_->basis_indices(db)) {
                    int idx = add_basis_element(deg, a_->label(ia) + "(x)" + b_->label(ib));
                    pair_index_[static_cast<size_t>(ia) * b_->total_dim() + ib] = idx;
                    comp_.push_back({ia, ib});
                }
        }
}

Elem TensorAlgebra::embed_left(const Elem& e) const {
    Elem out;
    int unit = b_->unit_index();
    for (const auto& t : e.terms()) out.accumulate(pair_index(t.index, unit), t.coeff);
    out.normalize();
    return out;
}

Elem TensorAlgebra::embed_right(const Elem& e) const {
    Elem out;
    int unit = a_->unit_index();
    for (const auto& t : e.terms()) out.accumulate(pair_index(unit, t.index), t.coeff);
    out.normalize();
    return out;
}

Elem TensorAlgebra::mul_basis(int i, int j) const {
    auto [a1, b1] = comp_[i];
    auto [a2, b2] = comp_[j];
    int sign = (b_->degree_of(b1) % 2) && (a_->degree_of(a2) % 2) ? -1 : 1;
    Elem pa = a_->mul_basis(a1, a2);
    if (pa.is_zero()) return Elem();
    Elem pb = b_->mul_basis(b1, b2);
    if (pb.is_zero()) return Elem();
    Elem out;
    for (const auto& ta : pa.terms())
        for (const auto& tb : pb.terms())
            out.accumulate(pair_index(ta.index, tb.index), ta.coeff * tb.coeff * sign);
    out.normalize();
    return out;
}

Rat TensorAlgebra::integrate_basis(int i) const {
    auto [ia, ib] = comp_[i];
    return a_->integrate_basis(ia) * b_->integrate_basis(ib);
}

EvenExteriorAlgebra::EvenExteriorAlgebra(int m) : full_(m) {
    if (m % 2 != 0) throw Error("invariant even part expects an even number of generators");
    set_top(m);
    from_full_.assign(full_.total_dim(), -1);
    for (int deg = 0; deg <= m; deg += 2)
        for (int fi : full_.basis_indices(deg)) {
            int idx = add_basis_element(deg, full_.label(fi));
            to_full_.push_back(fi);
            from_full_[fi] = idx;
        }
}

Elem EvenExteriorAlgebra::mul_basis(int i, int j) const {
    Elem p = full_.mul_basis(to_full_[i], to_full_[j]);
    Elem out;
    for (const auto& t : p.terms()) out.accumulate(from_full_[t.index], t.coeff);
    out.normalize();
    return out;
}

Rat EvenExteriorAlgebra::integrate_basis(int i) const {
    return full_.integrate_basis(to_full_[i]);
}

TruncatedPolynomialAlgebra::TruncatedPolynomialAlgebra(int m) : m_(m) {
    if (m < 1) throw Error("projective space model needs m >= 1");
    set_top(2 * m);
    for (int k = 0; k <= m; ++k)
        add_basis_element(2 * k, k == 0 ? "1" : (k == 1 ? "h" : "h^" + std::to_string(k)));
}

Elem TruncatedPolynomialAlgebra::mul_basis(int i, int j) const {
    return (i + j <= m_) ? Elem::basis(i + j) : Elem();
}

Rat TruncatedPolynomialAlgebra::integrate_basis(int i) const {
    return i == m_ ? Rat(1) : Rat(0);
}

}  // namespace nonproj
