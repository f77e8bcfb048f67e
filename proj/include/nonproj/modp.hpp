#pragma once

#include <cstdint>
#include <vector>

#include "nonproj/zpoly.hpp"

namespace nonproj {

// Dense polynomial over F_p, p an odd-or-2 prime below 2^31.
// Coefficients constant-term first, leading coefficient nonzero.
class FpPoly {
public:
    FpPoly(std::uint64_t p) : p_(p) {}
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> c) : p_(p), c_(std::move(c)) { trim(); }

    static FpPoly reduce(const ZPoly& f, std::uint64_t p);
    static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

    std::uint64_t p() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    FpPoly monic() const;
    FpPoly mul(const FpPoly& o) const;
    FpPoly mod(const FpPoly& m) const;
    FpPoly sub(const FpPoly& o) const;
    static FpPoly gcd(FpPoly a, FpPoly b);
    // x^(p^k) mod m, by repeated Frobenius
    static FpPoly pow_x_p(const FpPoly& base, const FpPoly& m);
    FpPoly divexact(const FpPoly& d) const;

private:
    void trim();
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Degrees of the irreducible factors of f mod p (sorted ascending).
// Requires p not dividing disc(f); callers check and report otherwise.
std::vector<int> factor_pattern_mod_p(const ZPoly& f, std::uint64_t p);

}  // namespace nonproj
