#include "nonproj/modp.hpp"

#include <algorithm>

namespace nonproj {

namespace {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a % p, p - 2, p); }

}  // namespace

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::reduce(const ZPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        Int m = f.coeff(i) % Int(static_cast<unsigned long>(p));
        if (sgn(m) < 0) m += Int(static_cast<unsigned long>(p));
        c[i] = m.get_ui();
    }
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    std::uint64_t inv = invmod(c_.back(), p_);
    std::vector<std::uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = mulmod(c_[i], inv, p_);
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::mul(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return FpPoly(p_);
    std::vector<std::uint64_t> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = (c[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
    }
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::mod(const FpPoly& m) const {
    if (m.is_zero()) throw Error("mod by zero polynomial");
    std::vector<std::uint64_t> r = c_;
    int dm = m.degree();
    std::uint64_t inv = invmod(m.c_.back(), p_);
    for (int i = static_cast<int>(r.size()) - 1; i >= dm; --i) {
        if (r[i] == 0) continue;
        std::uint64_t f = mulmod(r[i], inv, p_);
        for (int j = 0; j <= dm; ++j) {
            std::uint64_t sub = mulmod(f, m.c_[j], p_);
            r[i - dm + j] = (r[i - dm + j] + p_ - sub) % p_;
        }
    }
    r.resize(std::min<size_t>(r.size(), dm));
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::sub(const FpPoly& o) const {
    std::vector<std::uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        std::uint64_t a = i < c_.size() ? c_[i] : 0;
        std::uint64_t b = i < o.c_.size() ? o.c_[i] : 0;
        c[i] = (a + p_ - b) % p_;
    }
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a.mod(b);
        a = b;
        b = r;
    }
    return a.monic();
}

FpPoly FpPoly::pow_x_p(const FpPoly& base, const FpPoly& m) {
    // base^p mod m by square-and-multiply
    FpPoly r(m.p(), {1});
    FpPoly sq = base;
    std::uint64_t e = m.p();
    while (e) {
        if (e & 1) r = r.mul(sq).mod(m);
        sq = sq.mul(sq).mod(m);
        e >>= 1;
    }
    return r;
}

FpPoly FpPoly::divexact(const FpPoly& d) const {
    if (d.is_zero()) throw Error("division by zero polynomial");
    std::vector<std::uint64_t> r = c_;
    int dd = d.degree();
    int dq = degree() - dd;
    if (dq < 0) throw Error("divexact: degree mismatch");
    std::vector<std::uint64_t> q(dq + 1, 0);
    std::uint64_t inv = invmod(d.c_.back(), p_);
    for (int i = degree(); i >= dd; --i) {
        if (r[i] == 0) continue;
        std::uint64_t f = mulmod(r[i], inv, p_);
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j) {
            std::uint64_t sub = mulmod(f, d.c_[j], p_);
            r[i - dd + j] = (r[i - dd + j] + p_ - sub) % p_;
        }
    }
    for (std::uint64_t x : r)
        if (x != 0) throw Error("divexact: division not exact");
    return FpPoly(p_, std::move(q));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<bool> sieve(bound + 1, true);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return primes;
}

std::vector<int> factor_pattern_mod_p(const ZPoly& f, std::uint64_t p) {
    FpPoly fp = FpPoly::reduce(f, p);
    if (fp.degree() != f.degree())
        throw Error("leading coefficient vanishes mod p");
    fp = fp.monic();
    // distinct-degree factorization: p does not divide disc(f), so f mod p is
    // squarefree and each stage's gcd splits off all factors of that degree.
    std::vector<int> pattern;
    FpPoly w = FpPoly::x(p).mod(fp);
    FpPoly rem = fp;
    for (int d = 1; rem.degree() > 0 && d <= rem.degree(); ++d) {
        w = FpPoly::pow_x_p(w, fp);
        FpPoly g = FpPoly::gcd(w.sub(FpPoly::x(p).mod(fp)), rem);
        if (g.degree() > 0) {
            if (g.degree() % d != 0) throw Error("distinct-degree factorization mismatch");
            for (int k = 0; k < g.degree() / d; ++k) pattern.push_back(d);
            rem = rem.divexact(g);
        }
    }
    if (rem.degree() > 0) pattern.push_back(rem.degree());
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

}  // namespace nonproj
