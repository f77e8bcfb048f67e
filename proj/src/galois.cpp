#include "nonproj/galois.hpp"

#include <algorithm>

#include "nonproj/modp.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace nonproj {

std::string to_string(GaloisVerdict v) {
    switch (v) {
        case GaloisVerdict::Certified: return "certified";
        case GaloisVerdict::Refuted: return "refuted";
        default: return "inconclusive";
    }
}

ZPoly resolvent_cubic(const ZPoly& f) {
    if (f.degree() != 4) throw Error("resolvent cubic requires degree 4");
    if (!f.is_monic()) throw Error("resolvent cubic requires a monic quartic");
    if (sgn(f.coeff(3)) != 0)
        throw Error("resolvent cubic requires a depressed quartic (zero cubic term)");
    Int p = f.coeff(2), q = f.coeff(1), r = f.coeff(0);
    return ZPoly({4 * p * r - q * q, -4 * r, -p, Int(1)});
}

ZPoly depress_quartic(const ZPoly& f) {
    if (f.degree() != 4 || !f.is_monic()) throw Error("expected a monic quartic");
    if (sgn(f.coeff(3)) == 0) return f;
    // g(y) = 4^4 f((y - a)/4), monic with integer coefficients
    Int a = f.coeff(3);
    std::vector<Int> g(5);
    // expand sum_i c_i (y-a)^i 4^{4-i}
    for (int i = 0; i <= 4; ++i) {
        Int ci = f.coeff(i);
        if (sgn(ci) == 0) continue;
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 4, 4 - i);
        // (y - a)^i binomial expansion
        Int binom = 1;
        Int apow = 1;
        for (int k = i; k >= 0; --k) {
            // coefficient of y^k in (y-a)^i: C(i,k) (-a)^{i-k}
            Int c;
            mpz_bin_uiui(c.get_mpz_t(), i, k);
            Int term = ci * scale * c * apow;
            if ((i - k) % 2 == 1) term = -term;
            g[k] += term;
            apow *= a;
        }
    }
    return ZPoly(std::move(g));
}

std::vector<Int> integer_roots(const ZPoly& f) {
    std::vector<Int> roots;
    if (f.degree() < 1) return roots;
    Int c0 = f.coeff(0);
    if (sgn(c0) == 0) {
        roots.push_back(Int(0));
        std::vector<Int> reduced(f.coeffs().begin() + 1, f.coeffs().end());
        for (const Int& r : integer_roots(ZPoly(reduced)))
            if (r != 0) roots.push_back(r);
        return roots;
    }
    Int a = abs(c0);
    // trial divisors of the constant term
    for (Int d = 1; d * d <= a; ++d) {
        if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) continue;
        Int other = a / d;
        for (const Int& cand : std::vector<Int>{d, other}) {
            for (int s : {1, -1}) {
                Int x = s > 0 ? cand : Int(-cand);
                if (sgn(f.eval(x)) == 0 &&
                    std::find(roots.begin(), roots.end(), x) == roots.end())
                    roots.push_back(x);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

// divisors of |n| with sign variants, or nullopt when n is too composite to
// factor by trial division at desk scale
std::optional<std::vector<Int>> signed_divisors(const Int& n, unsigned long limit = 2000000) {
    if (sgn(n) == 0) return std::nullopt;
    Int a = abs(n);
    std::vector<Int> divs;
    Int d = 1;
    for (; d * d <= a; ++d) {
        if (d.fits_ulong_p() && d.get_ui() > limit) return std::nullopt;
        if (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
            divs.push_back(d);
            if (d * d != a) divs.push_back(a / d);
        }
    }
    size_t k = divs.size();
    for (size_t i = 0; i < k; ++i) divs.push_back(-divs[i]);
    return divs;
}

}  // namespace

std::optional<bool> quartic_irreducible_over_q(const ZPoly& f) {
    if (f.degree() != 4 || !f.is_monic()) throw Error("expected a monic quartic");
    if (sgn(f.coeff(0)) == 0) return false;
    if (!integer_roots(f).empty()) return false;
    // monic quadratic factors (x^2+ax+b)(x^2+cx+d) over Z, Gauss lemma
    auto divs = signed_divisors(f.coeff(0));
    if (!divs) return std::nullopt;
    Int e3 = f.coeff(3), e2 = f.coeff(2), e1 = f.coeff(1), e0 = f.coeff(0);
    for (const Int& b : *divs) {
        if (!mpz_divisible_p(e0.get_mpz_t(), b.get_mpz_t())) continue;
        Int d = e0 / b;
        // a + c = e3, ac = e2 - b - d, ad + bc = e1
        Int s = e3, prod = e2 - b - d;
        Int disc = s * s - 4 * prod;
        if (!is_perfect_square(disc)) continue;
        Int root;
        mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
        for (int pick : {0, 1}) {
            Int twoa;
            if (pick) twoa = s - root;
            else twoa = s + root;
            if (!mpz_divisible_ui_p(twoa.get_mpz_t(), 2)) continue;
            Int a = twoa / 2, c = s - a;
            if (a * d + b * c == e1) return false;
        }
    }
    return true;
}

namespace {

bool pattern_is_irreducible(const std::vector<int>& pat, int deg) {
    return pat.size() == 1 && pat[0] == deg;
}

// a power of the Frobenius element is a transposition exactly when the
// pattern has a single even part 2m with m odd and every other part odd
bool pattern_gives_transposition(const std::vector<int>& pat) {
    int even_parts = 0;
    bool even_ok = false;
    for (int d : pat) {
        if (d % 2 == 0) {
            ++even_parts;
            even_ok = (d / 2) % 2 == 1;
        }
    }
    return even_parts == 1 && even_ok;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool pattern_has_long_prime_cycle(const std::vector<int>& pat, int deg) {
    for (int d : pat)
        if (2 * d > deg && d < deg && is_prime_u64(static_cast<std::uint64_t>(d))) return true;
    return false;
}

struct ScanResult {
    std::optional<ModpWitness> irr, transp, longcycle;
    bool complete() const { return irr && transp && longcycle; }
    void absorb(std::uint64_t p, const std::vector<int>& pat, int deg) {
        if (!irr && pattern_is_irreducible(pat, deg)) irr = ModpWitness{p, pat};
        if (!transp && pattern_gives_transposition(pat)) transp = ModpWitness{p, pat};
        if (!longcycle && pattern_has_long_prime_cycle(pat, deg)) longcycle = ModpWitness{p, pat};
    }
};

// Scan primes in ascending order; the parallel path works block-by-block and
// merges in prime order, so witnesses are the minimal ones either way.
ScanResult scan_witnesses(const ZPoly& f, const Int& disc, std::uint64_t bound, bool parallel) {
    ScanResult res;
    int deg = f.degree();
    auto primes = primes_up_to(bound);
    const size_t block = 64;
    for (size_t start = 0; start < primes.size() && !res.complete(); start += block) {
        size_t end = std::min(primes.size(), start + block);
        std::vector<std::vector<int>> pats(end - start);
        std::vector<char> valid(end - start, 0);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (long i = 0; i < static_cast<long>(end - start); ++i) {
            std::uint64_t p = primes[start + i];
            if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
            pats[i] = factor_pattern_mod_p(f, p);
            valid[i] = 1;
        }
        for (size_t i = 0; i < end - start && !res.complete(); ++i)
            if (valid[i]) res.absorb(primes[start + i], pats[i], deg);
    }
    return res;
}

}  // namespace

GaloisCertificate certify_symmetric_galois(const ZPoly& f, const CertifyOptions& opts) {
    if (!f.is_monic()) throw Error("certification requires a monic polynomial");
    GaloisCertificate cert;
    cert.degree = f.degree();
    cert.prime_bound = opts.prime_bound;
    if (cert.degree < 1) throw Error("certification requires positive degree");
    cert.disc = discriminant(f);
    if (sgn(cert.disc) == 0) {
        cert.verdict = GaloisVerdict::Refuted;
        cert.reason = "zero discriminant: repeated roots, no symmetric action on deg(f) roots";
        return cert;
    }
    if (cert.degree == 1) {
        cert.verdict = GaloisVerdict::Certified;
        cert.reason = "degree 1: trivial group is S_1";
        return cert;
    }
    if (is_perfect_square(cert.disc)) {
        cert.verdict = GaloisVerdict::Refuted;
        cert.reason = "square discriminant " + cert.disc.get_str() +
                      ": Galois group lies in the alternating group";
        return cert;
    }
    if (cert.degree == 2) {
        // non-square discriminant already implies irreducibility
        cert.verdict = GaloisVerdict::Certified;
        cert.reason = "irreducible quadratic with non-square discriminant: group is S_2";
        return cert;
    }
    if (cert.degree == 4) {
        ZPoly dep = depress_quartic(f);
        auto irr = quartic_irreducible_over_q(dep);
        if (!irr) {
            cert.verdict = GaloisVerdict::Inconclusive;
            cert.reason = "constant term too composite for exact quartic factor search";
            return cert;
        }
        cert.quartic_irreducible = *irr;
        if (!cert.quartic_irreducible) {
            cert.verdict = GaloisVerdict::Refuted;
            cert.reason = "quartic is reducible over Q";
            return cert;
        }
        cert.resolvent = resolvent_cubic(dep);
        // a monic cubic is irreducible over Q exactly when it has no integer root
        cert.resolvent_irreducible = integer_roots(*cert.resolvent).empty();
        if (cert.resolvent_irreducible) {
            cert.verdict = GaloisVerdict::Certified;
            cert.reason = "irreducible quartic, irreducible resolvent cubic, non-square discriminant";
        } else {
            cert.verdict = GaloisVerdict::Refuted;
            cert.reason = "resolvent cubic has a rational root: group is a proper subgroup of S_4";
        }
        return cert;
    }
    ScanResult scan = scan_witnesses(f, cert.disc, opts.prime_bound, opts.parallel);
    cert.irreducible_witness = scan.irr;
    cert.transposition_witness = scan.transp;
    cert.long_prime_cycle_witness = scan.longcycle;
    if (scan.complete()) {
        cert.verdict = GaloisVerdict::Certified;
        cert.reason =
            "transitive (irreducible mod p), contains a transposition and a prime cycle "
            "longer than deg/2 (Jordan)";
    } else {
        cert.verdict = GaloisVerdict::Inconclusive;
        cert.reason = "witness patterns not all found below prime bound " +
                      std::to_string(opts.prime_bound);
    }
    return cert;
}

}  // namespace nonproj
