#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quatlat/poly.hpp"
#include "quatlat/rational.hpp"

namespace quatlat {

// Dense univariate polynomial over F_p, coefficients reduced to [0, p),
// no trailing zeros.
class FpPoly {
  public:
    explicit FpPoly(Int p) : p_(std::move(p)) {}

    static FpPoly from_coeffs(Int p, std::vector<Int> c);
    // Reduces a rational polynomial mod p; throws BadDenominatorError if a
    // coefficient denominator is divisible by p.
    static FpPoly from_poly(const Poly& f, const Int& p);
    static FpPoly constant(Int p, const Int& c) { return from_coeffs(std::move(p), {c}); }
    static FpPoly variable(Int p) { return from_coeffs(std::move(p), {Int(0), Int(1)}); }

    const Int& modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const Int& coeff(int i) const;
    const Int& lc() const { return c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly mul_scalar(const Int& s) const;
    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    // Orders by degree, then ascending-index coefficient lexicographic; this
    // is the canonical factor ordering used everywhere for determinism.
    std::strong_ordering operator<=>(const FpPoly& o) const;

    std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
    FpPoly operator%(const FpPoly& d) const { return divmod(d).second; }
    FpPoly operator/(const FpPoly& d) const { return divmod(d).first; }

    FpPoly monic() const;
    FpPoly derivative() const;
    Int eval(const Int& x) const;
    FpPoly pow_mod(const Int& e, const FpPoly& m) const;

    // Lift to Z[x] with coefficients in [0, p).
    Poly lift() const;
    std::string to_string(const std::string& var = "t") const;

  private:
    Int reduce(const Int& v) const;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    Int p_;
    std::vector<Int> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);  // monic gcd

// Element of F_p[t]/(h), representative reduced mod h.
struct FpQuotientElem {
    FpPoly mod;  // h: nonconstant, monic
    FpPoly rep;

    FpQuotientElem(FpPoly h, FpPoly r) : mod(std::move(h)), rep(std::move(r)) { rep = rep % mod; }
    bool is_zero() const { return rep.is_zero(); }
    FpQuotientElem mul(const FpQuotientElem& o) const { return {mod, rep * o.rep}; }
    FpQuotientElem add(const FpQuotientElem& o) const { return {mod, rep + o.rep}; }
};

// g(x) for g over Q, reduced in F_p[t]/(h); throws BadDenominatorError if a
// denominator of g vanishes mod p.
FpQuotientElem evaluate_in_quotient(const Poly& g, const FpQuotientElem& x);
// Same with coefficients already in F_p.
FpQuotientElem evaluate_in_quotient(const FpPoly& g, const FpQuotientElem& x);

// Complete factorization into monic irreducibles with multiplicities:
// squarefree decomposition, then distinct-degree splitting, then seeded
// Cantor-Zassenhaus equal-degree splitting. Output sorted by (degree,
// ascending coefficient lex); deterministic for a fixed seed, and the sorted
// factor set is seed-independent. Throws CompositeModulusError.
std::vector<std::pair<FpPoly, int>> factor_mod_p(const FpPoly& f, std::uint64_t seed);

// Rabin irreducibility test (x^{p^d} = x ladder with gcd checks).
bool is_irreducible_mod_p(const FpPoly& f);

// Degree multiset of the factorization with multiplicity, ascending — the
// "decomposition type" of a polynomial mod p.
std::vector<int> decomposition_type(const FpPoly& f, std::uint64_t seed = 0);

}  // namespace quatlat
