#include "quatlat/fppoly.hpp"

#include <algorithm>
#include <map>

#include "quatlat/errors.hpp"

namespace quatlat {

namespace {
const Int kZeroInt = 0;
}

Int FpPoly::reduce(const Int& v) const {
    Int r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());  // nonnegative remainder
    return r;
}

FpPoly FpPoly::from_coeffs(Int p, std::vector<Int> c) {
    FpPoly f(std::move(p));
    f.c_ = std::move(c);
    for (Int& v : f.c_) v = f.reduce(v);
    f.trim();
    return f;
}

FpPoly FpPoly::from_poly(const Poly& f, const Int& p) {
    std::vector<Int> c;
    c.reserve(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        const Rat& q = f.coeff(i);
        Int den_mod = q.get_den() % p;
        if (den_mod == 0)
            throw BadDenominatorError("coefficient denominator divisible by " + p.get_str());
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), den_mod.get_mpz_t(), p.get_mpz_t()) == 0)
            throw BadDenominatorError("denominator not invertible mod " + p.get_str());
        c.push_back(q.get_num() * inv);
    }
    return from_coeffs(p, std::move(c));
}

const Int& FpPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroInt;
    return c_[i];
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return from_coeffs(p_, std::move(c));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return from_coeffs(p_, std::move(c));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return FpPoly(p_);
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return from_coeffs(p_, std::move(c));
}

FpPoly FpPoly::mul_scalar(const Int& s) const {
    std::vector<Int> c = c_;
    for (Int& v : c) v *= s;
    return from_coeffs(p_, std::move(c));
}

std::strong_ordering FpPoly::operator<=>(const FpPoly& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    for (size_t i = 0; i < c_.size(); ++i)
        if (auto c = mpz_cmp(c_[i].get_mpz_t(), o.c_[i].get_mpz_t()) <=> 0; c != 0) return c;
    return std::strong_ordering::equal;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
    if (d.is_zero()) throw Error("FpPoly division by zero");
    Int lcinv;
    if (mpz_invert(lcinv.get_mpz_t(), d.lc().get_mpz_t(), p_.get_mpz_t()) == 0)
        throw CompositeModulusError("leading coefficient not invertible mod " + p_.get_str());
    FpPoly r = *this;
    std::vector<Int> q(std::max(0, degree() - d.degree() + 1), Int(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const int k = r.degree() - d.degree();
        Int factor = reduce(r.lc() * lcinv);
        q[k] = factor;
        std::vector<Int> sub(k + d.c_.size(), Int(0));
        for (size_t i = 0; i < d.c_.size(); ++i) sub[i + k] = factor * d.c_[i];
        r = r - from_coeffs(p_, std::move(sub));
    }
    return {from_coeffs(p_, std::move(q)), r};
}

FpPoly FpPoly::monic() const {
    if (is_zero() || lc() == 1) return *this;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), lc().get_mpz_t(), p_.get_mpz_t()) == 0)
        throw CompositeModulusError("leading coefficient not invertible mod " + p_.get_str());
    return mul_scalar(inv);
}

FpPoly FpPoly::derivative() const {
    if (degree() <= 0) return FpPoly(p_);
    std::vector<Int> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
    return from_coeffs(p_, std::move(c));
}

Int FpPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = reduce(acc * x + *it);
    return acc;
}

FpPoly FpPoly::pow_mod(const Int& e, const FpPoly& m) const {
    FpPoly base = *this % m;
    FpPoly acc = FpPoly::constant(p_, Int(1));
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (size_t i = bits; i-- > 0;) {
        acc = (acc * acc) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * base) % m;
    }
    return acc;
}

Poly FpPoly::lift() const {
    std::vector<Rat> c;
    c.reserve(c_.size());
    for (const Int& v : c_) c.push_back(rat_of(v, Int(1)));
    return Poly::from_coeffs(std::move(c));
}

std::string FpPoly::to_string(const std::string& var) const { return lift().to_string(var); }

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpQuotientElem evaluate_in_quotient(const Poly& g, const FpQuotientElem& x) {
    return evaluate_in_quotient(FpPoly::from_poly(g, x.mod.modulus()), x);
}

FpQuotientElem evaluate_in_quotient(const FpPoly& g, const FpQuotientElem& x) {
    const Int& p = x.mod.modulus();
    FpQuotientElem acc(x.mod, FpPoly(p));
    for (int i = g.degree(); i >= 0; --i) {
        acc = acc.mul(x);
        acc = acc.add(FpQuotientElem(x.mod, FpPoly::constant(p, g.coeff(i))));
    }
    return acc;
}

namespace {

// f(x) = g(x^p) over F_p has g with coefficients a_{ip} (Frobenius is the
// identity on the prime field).
FpPoly pth_root(const FpPoly& f) {
    const Int& p = f.modulus();
    const unsigned long pl = p.get_ui();
    std::vector<Int> c;
    for (int i = 0; i * static_cast<long>(pl) <= f.degree(); ++i)
        c.push_back(f.coeff(i * static_cast<int>(pl)));
    return FpPoly::from_coeffs(p, std::move(c));
}

void squarefree_decomposition(const FpPoly& f, int outer_mult,
                              std::map<int, FpPoly>& out) {
    const Int& p = f.modulus();
    if (f.degree() <= 0) return;
    FpPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree_decomposition(pth_root(f), outer_mult * static_cast<int>(p.get_ui()), out);
        return;
    }
    FpPoly c = gcd(f, d);
    FpPoly w = (f / c).monic();
    int i = 1;
    while (!w.is_one()) {
        FpPoly y = gcd(w, c);
        FpPoly z = (w / y).monic();
        if (!z.is_one()) {
            auto [it, inserted] = out.try_emplace(i * outer_mult, z);
            if (!inserted) it->second = it->second * z;
        }
        w = y;
        c = (c / y).monic();
        ++i;
    }
    if (!c.is_one())
        squarefree_decomposition(pth_root(c), outer_mult * static_cast<int>(p.get_ui()), out);
}

// Splits the monic squarefree product g of irreducibles of degree d.
void equal_degree_split(const FpPoly& g, int d, Lcg& rng, std::vector<FpPoly>& out) {
    const Int& p = g.modulus();
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    for (;;) {
        std::vector<Int> rc(g.degree());
        for (Int& v : rc) v = rng.below(p);
        FpPoly r = FpPoly::from_coeffs(p, std::move(rc));
        if (r.degree() < 1) continue;
        FpPoly u = gcd(r, g);
        if (u.degree() == 0) {
            if (p == 2) {
                // trace map sum r^{2^i} over the degree-d subfield
                FpPoly tr(p);
                FpPoly cur = r % g;
                for (int i = 0; i < d; ++i) {
                    tr = (tr + cur) % g;
                    cur = (cur * cur) % g;
                }
                u = gcd(tr, g);
            } else {
                Int e;
                mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), d);
                e = (e - 1) / 2;
                FpPoly s = r.pow_mod(e, g) - FpPoly::constant(p, Int(1));
                u = gcd(s, g);
            }
        }
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree_split(u, d, rng, out);
            equal_degree_split((g / u).monic(), d, rng, out);
            return;
        }
    }
}

// Distinct-degree then equal-degree factorization of monic squarefree f.
std::vector<FpPoly> factor_squarefree(FpPoly f, Lcg& rng) {
    const Int& p = f.modulus();
    std::vector<FpPoly> out;
    FpPoly x = FpPoly::variable(p);
    FpPoly h = x;
    for (int d = 1; f.degree() >= 2 * d; ++d) {
        h = h.pow_mod(p, f);
        FpPoly g = gcd(h - x, f);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            f = (f / g).monic();
            h = h % f;
        }
    }
    if (f.degree() > 0) out.push_back(f);
    return out;
}

}  // namespace

std::vector<std::pair<FpPoly, int>> factor_mod_p(const FpPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error("factor_mod_p: zero polynomial");
    if (!is_probable_prime(f.modulus()))
        throw CompositeModulusError("modulus " + f.modulus().get_str() + " is not prime");
    Lcg rng(seed);
    std::map<int, FpPoly> squarefree_parts;
    squarefree_decomposition(f.monic(), 1, squarefree_parts);
    std::vector<std::pair<FpPoly, int>> out;
    for (const auto& [mult, part] : squarefree_parts)
        for (FpPoly& irr : factor_squarefree(part, rng)) out.emplace_back(std::move(irr), mult);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (auto c = a.first <=> b.first; c != 0) return c < 0;
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible_mod_p(const FpPoly& f) {
    if (f.degree() < 1) return false;
    const Int& p = f.modulus();
    const int n = f.degree();
    const FpPoly x = FpPoly::variable(p);
    // x^{p^n} == x mod f, and gcd(x^{p^{n/q}} - x, f) == 1 for prime q | n
    FpPoly h = x;
    std::vector<FpPoly> powers;  // h_i = x^{p^i} mod f
    powers.push_back(h);
    for (int i = 1; i <= n; ++i) {
        h = h.pow_mod(p, f);
        powers.push_back(h);
    }
    if (!(powers[n] % f == x % f)) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q) continue;
        bool q_prime = true;
        for (int r = 2; r * r <= q; ++r)
            if (q % r == 0) q_prime = false;
        if (!q_prime) continue;
        if (gcd(powers[n / q] - x, f).degree() != 0) return false;
    }
    return true;
}

std::vector<int> decomposition_type(const FpPoly& f, std::uint64_t seed) {
    std::vector<int> type;
    for (const auto& [factor, mult] : factor_mod_p(f, seed))
        for (int i = 0; i < mult; ++i) type.push_back(factor.degree());
    std::sort(type.begin(), type.end());
    return type;
}

}  // namespace quatlat
