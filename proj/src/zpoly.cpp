#include "nonproj/zpoly.hpp"

#include <sstream>

namespace nonproj {

void QPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

QPoly QPoly::constant(const Rat& v) {
    QPoly p;
    if (sgn(v) != 0) p.c_ = {v};
    return p;
}

const Rat& QPoly::coeff(int i) const {
    static const Rat zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

Rat QPoly::eval(const Rat& x) const {
    Rat v = 0;
    for (int i = degree(); i >= 0; --i) v = v * x + c_[i];
    return v;
}

QPoly QPoly::derivative() const {
    if (degree() < 1) return QPoly();
    std::vector<Rat> d(degree());
    for (int i = 1; i <= degree(); ++i) d[i - 1] = c_[i] * Rat(i);
    return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> d = c_;
    Rat inv = 1 / lead();
    for (Rat& x : d) x *= inv;
    return QPoly(std::move(d));
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> d(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < d.size(); ++i) d[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return QPoly(std::move(d));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    std::vector<Rat> d = c_;
    for (Rat& x : d) x = -x;
    return QPoly(std::move(d));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> d(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(d));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quot;
    int db = b.degree();
    if (a.degree() >= db) quot.assign(a.degree() - db + 1, Rat(0));
    Rat inv = 1 / b.lead();
    for (int i = a.degree(); i >= db; --i) {
        if (static_cast<int>(rem.size()) <= i || sgn(rem[i]) == 0) continue;
        Rat f = rem[i] * inv;
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
    }
    q = QPoly(std::move(quot));
    r = QPoly(std::move(rem));
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return x.monic();
}

std::string QPoly::str() const {
    std::ostringstream os;
    if (is_zero()) return "0";
    for (int i = degree(); i >= 0; --i) {
        if (sgn(c_[i]) == 0) continue;
        if (i != degree()) os << (sgn(c_[i]) > 0 ? " + " : " - ");
        else if (sgn(c_[i]) < 0) os << "-";
        Rat a = abs(c_[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

void ZPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

const Int& ZPoly::coeff(int i) const {
    static const Int zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

Int ZPoly::eval(const Int& x) const {
    Int v = 0;
    for (int i = degree(); i >= 0; --i) v = v * x + c_[i];
    return v;
}

ZPoly ZPoly::derivative() const {
    if (degree() < 1) return ZPoly();
    std::vector<Int> d(degree());
    for (int i = 1; i <= degree(); ++i) d[i - 1] = c_[i] * i;
    return ZPoly(std::move(d));
}

QPoly ZPoly::to_q() const {
    std::vector<Rat> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = Rat(c_[i]);
    return QPoly(std::move(d));
}

ZMat ZPoly::companion() const {
    if (!is_monic()) throw Error("companion matrix requires a monic polynomial");
    int n = degree();
    ZMat m(n, n);
    for (int i = 1; i < n; ++i) m.at(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) m.at(i, n - 1) = -c_[i];
    return m;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return ZPoly();
    std::vector<Int> d(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
    return ZPoly(std::move(d));
}

std::string ZPoly::str() const { return to_q().str(); }

bool is_squarefree(const ZPoly& f) {
    if (f.degree() < 1) return !f.is_zero();
    return QPoly::gcd(f.to_q(), f.to_q().derivative()).degree() == 0;
}

int sturm_real_root_count(const ZPoly& f) {
    if (f.is_zero()) throw Error("Sturm count of the zero polynomial");
    if (!is_squarefree(f)) throw Error("Sturm count requires a squarefree polynomial");
    if (f.degree() == 0) return 0;
    // Sturm chain: p0 = f, p1 = f', p_{k+1} = -rem(p_{k-1}, p_k)
    std::vector<QPoly> chain{f.to_q(), f.to_q().derivative()};
    while (!chain.back().is_zero()) {
        QPoly q, r;
        QPoly::divmod(chain[chain.size() - 2], chain.back(), q, r);
        chain.push_back(-r);
    }
    chain.pop_back();
    // sign variations at -inf and +inf from leading terms
    auto variations = [&chain](bool at_minus_inf) {
        int var = 0, prev = 0;
        for (const QPoly& p : chain) {
            int s = sgn(p.lead());
            if (at_minus_inf && p.degree() % 2 == 1) s = -s;
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    };
    return variations(true) - variations(false);
}

PropertyPResult check_property_P(const ZPoly& f) {
    if (!f.is_monic()) throw Error("condition (P) requires a monic polynomial");
    if (f.degree() % 2 != 0 || f.degree() == 0)
        throw Error("condition (P) requires even degree (odd degree forces a real root)");
    PropertyPResult res;
    res.squarefree = is_squarefree(f);
    if (!res.squarefree) {
        res.holds = false;
        res.diagnosis = "repeated roots: gcd(f, f') is non-constant";
        return res;
    }
    res.real_roots = sturm_real_root_count(f);
    if (res.real_roots != 0) {
        res.holds = false;
        res.diagnosis = "has " + std::to_string(res.real_roots) + " real roots";
        return res;
    }
    res.holds = true;
    res.diagnosis = "all roots simple and non-real";
    return res;
}

Int resultant(const ZPoly& f, const ZPoly& g) {
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return Int(0);
    if (m == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), f.coeff(0).get_mpz_t(), n);
        return r;
    }
    if (n == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), g.coeff(0).get_mpz_t(), m);
        return r;
    }
    ZMat syl(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) syl.at(i, i + j) = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) syl.at(n + i, i + j) = g.coeff(n - j);
    return syl.det();
}

Int discriminant(const ZPoly& f) {
    if (!f.is_monic()) throw Error("discriminant formula here assumes a monic polynomial");
    int d = f.degree();
    if (d < 1) return Int(0);
    Int res = resultant(f, f.derivative());
    if ((d * (d - 1) / 2) % 2 == 1) res = -res;
    return res;
}

IntersectionCounts intersection_counts(const ZMat& phi) {
    if (phi.rows() != phi.cols()) throw Error("endomorphism matrix must be square");
    Int d1 = (phi - ZMat::identity(phi.rows())).det();
    Int d2 = phi.det();
    if (sgn(d1) == 0)
        throw Error("non-transverse: det(phi - I) = 0 (graph meets the diagonal in positive dimension)");
    if (sgn(d2) == 0) throw Error("non-transverse: det(phi) = 0");
    return {abs(d1), abs(d2)};
}

}  // namespace nonproj
