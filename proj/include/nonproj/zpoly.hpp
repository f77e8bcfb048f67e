#pragma once

#include <vector>

#include "nonproj/matrix.hpp"

namespace nonproj {

// Univariate polynomial over Q, coefficients constant-term first.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly zero() { return QPoly(); }
    static QPoly constant(const Rat& v);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int i) const;
    const Rat& lead() const { return c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;
    QPoly derivative() const;
    QPoly monic() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // division with remainder; divisor must be nonzero
    static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
    static QPoly gcd(const QPoly& a, const QPoly& b);  // monic gcd

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Univariate polynomial over Z, coefficients constant-term first.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    ZPoly(std::initializer_list<long> coeffs);

    // x^n + (lower), from the list of lower coefficients
    static ZPoly from_coeff_list(const std::vector<Int>& coeffs) { return ZPoly(coeffs); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Int& coeff(int i) const;
    const std::vector<Int>& coeffs() const { return c_; }

    Int eval(const Int& x) const;
    ZPoly derivative() const;
    QPoly to_q() const;
    ZMat companion() const;  // monic only

    ZPoly operator*(const ZPoly& o) const;
    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

    std::string str() const;

private:
    void trim();
    std::vector<Int> c_;
};

bool is_squarefree(const ZPoly& f);

// Number of distinct real roots by Sturm's theorem.  Throws Error if f is not
// squarefree (reported distinctly, as the chain is only valid then).
int sturm_real_root_count(const ZPoly& f);

struct PropertyPResult {
    bool holds = false;
    std::string diagnosis;
    bool squarefree = false;
    int real_roots = -1;
};

// Condition: all eigenvalues simple, none real.  Requires monic even degree.
PropertyPResult check_property_P(const ZPoly& f);

// Resultant via Bareiss determinant of the Sylvester matrix.
Int resultant(const ZPoly& f, const ZPoly& g);
// disc(f) = (-1)^{d(d-1)/2} Res(f, f') for monic f.
Int discriminant(const ZPoly& f);

struct IntersectionCounts {
    Int diagonal_graph;  // N = |det(phi - I)|
    Int graph_factor;    // |det phi|
};

// Transversal intersection counts for the graph of an endomorphism; throws on
// a vanishing determinant (non-transverse configuration).
IntersectionCounts intersection_counts(const ZMat& phi);

}  // namespace nonproj
