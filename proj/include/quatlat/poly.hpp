#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quatlat/rational.hpp"

namespace quatlat {

// Dense univariate polynomial over Q, canonical form (no trailing zero
// coefficients). degree() of the zero polynomial is -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rat& c) : c_{c} { trim(); }
    explicit Poly(long c) : Poly(rat_of(c)) {}

    static Poly from_coeffs(std::vector<Rat> c) {
        Poly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }
    static Poly variable() { return from_coeffs({rat_of(0), rat_of(1)}); }
    // Monomial a * t^k.
    static Poly monomial(const Rat& a, int k);
    // Parses ASCII like "t^6-10*t^4+7*t^3+15*t^2-14*t+3" (integer coefficients).
    static Poly parse(const std::string& text);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int i) const;
    const Rat& lc() const { return c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool has_integer_coeffs() const;
    std::vector<Int> integer_coeffs() const;  // requires has_integer_coeffs

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // Euclidean division over Q; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    bool divides(const Poly& multiple) const;

    Poly derivative() const;
    Poly monic() const;
    Rat eval(const Rat& x) const;
    // Image of the closed interval [lo, hi] under this polynomial, by exact
    // interval-arithmetic Horner; the result contains {f(x) : lo <= x <= hi}.
    std::pair<Rat, Rat> eval_interval(const Rat& lo, const Rat& hi) const;
    // this(g) reduced mod m; m nonzero.
    Poly compose_mod(const Poly& g, const Poly& m) const;

    // Positive rational content and integer primitive part: *this == content * primitive.
    std::pair<Rat, std::vector<Int>> primitive_int() const;

    // 1 + max |c_i / lc|; every real root has absolute value strictly below.
    Rat cauchy_root_bound() const;

    std::string to_string(const std::string& var = "t") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

// Resultant by fraction-free subresultant PRS on the integer primitive parts
// (Cohen, Algorithm 3.3.7), rescaled exactly for rational inputs.
Rat resultant(const Poly& a, const Poly& b);

// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f). Requires deg f >= 1.
Rat discriminant(const Poly& f);

}  // namespace quatlat
