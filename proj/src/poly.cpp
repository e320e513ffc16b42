#include "quatlat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "quatlat/errors.hpp"

namespace quatlat {

namespace {
const Rat kZero = rat_of(0);
}

const Rat& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

Poly Poly::monomial(const Rat& a, int k) {
    std::vector<Rat> c(k + 1, rat_of(0));
    c[k] = a;
    return from_coeffs(std::move(c));
}

bool Poly::has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rat& q) { return q.get_den() == 1; });
}

std::vector<Int> Poly::integer_coeffs() const {
    std::vector<Int> out;
    out.reserve(c_.size());
    for (const Rat& q : c_) {
        if (q.get_den() != 1) throw Error("integer_coeffs: non-integer coefficient");
        out.push_back(q.get_num());
    }
    return out;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Rat& q : r.c_) q = -q;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), rat_of(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return from_coeffs(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, rat_of(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return from_coeffs(std::move(c));
}

Poly Poly::operator*(const Rat& s) const {
    Poly r = *this;
    for (Rat& q : r.c_) q *= s;
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    Poly r = *this;
    std::vector<Rat> q;
    if (degree() >= d.degree()) q.assign(degree() - d.degree() + 1, rat_of(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const int k = r.degree() - d.degree();
        const Rat factor = r.lc() / d.lc();
        q[k] = factor;
        r = r - Poly::monomial(factor, k) * d;
    }
    return {Poly::from_coeffs(std::move(q)), r};
}

bool Poly::divides(const Poly& multiple) const {
    if (is_zero()) return multiple.is_zero();
    return multiple.divmod(*this).second.is_zero();
}

Poly Poly::derivative() const {
    if (degree() <= 0) return Poly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * rat_of(static_cast<long>(i));
    return from_coeffs(std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return *this * (rat_of(1) / lc());
}

Rat Poly::eval(const Rat& x) const {
    Rat acc = rat_of(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<Rat, Rat> Poly::eval_interval(const Rat& lo, const Rat& hi) const {
    if (is_zero()) return {rat_of(0), rat_of(0)};
    Rat alo = c_.back(), ahi = c_.back();
    for (auto it = std::next(c_.rbegin()); it != c_.rend(); ++it) {
        const Rat p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
        alo = std::min({p1, p2, p3, p4}) + *it;
        ahi = std::max({p1, p2, p3, p4}) + *it;
    }
    return {alo, ahi};
}

Poly Poly::compose_mod(const Poly& g, const Poly& m) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * g + Poly(*it)) % m;
    return acc;
}

std::pair<Rat, std::vector<Int>> Poly::primitive_int() const {
    if (is_zero()) return {rat_of(0), {}};
    Int den_lcm = 1;
    for (const Rat& q : c_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    // scaled coefficients are integers with unit content once divided by num_gcd
    Int g = 0;
    std::vector<Int> scaled;
    scaled.reserve(c_.size());
    for (const Rat& q : c_) {
        Int v = q.get_num() * (den_lcm / q.get_den());
        scaled.push_back(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    for (Int& v : scaled) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return {rat_of(g, den_lcm), std::move(scaled)};
}

Rat Poly::cauchy_root_bound() const {
    if (degree() < 1) throw Error("cauchy_root_bound: constant polynomial");
    Rat m = rat_of(0);
    for (int i = 0; i < degree(); ++i) {
        const Rat v = abs(coeff(i) / lc());
        if (v > m) m = v;
    }
    return m + 1;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        const Rat a = abs(c);
        if (first) {
            if (sign(c) < 0) os << "-";
            first = false;
        } else {
            os << (sign(c) < 0 ? "-" : "+");
        }
        if (i == 0 || a != 1) {
            os << a.get_str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw InputError("polynomial parse error: expected integer at offset " + std::to_string(pos));
        return Int(s.substr(start, pos - start), 10);
    }
    bool at_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    bool at_var() {
        skip_ws();
        return pos < s.size() && (s[pos] == 't' || s[pos] == 'x');
    }

    // term := int ['*'] var ['^' int] | int | var ['^' int]
    Poly term() {
        Int coeff = 1;
        bool have_coeff = false;
        if (at_digit()) {
            coeff = integer();
            have_coeff = true;
        }
        int exp = 0;
        if (have_coeff && accept('*')) {
            if (!at_var()) throw InputError("polynomial parse error: expected variable after '*'");
            ++pos;
            exp = 1;
            if (accept('^')) exp = static_cast<int>(integer().get_si());
        } else if (at_var()) {
            ++pos;
            exp = 1;
            if (accept('^')) exp = static_cast<int>(integer().get_si());
        } else if (!have_coeff) {
            throw InputError("polynomial parse error: expected term at offset " + std::to_string(pos));
        }
        return Poly::monomial(rat_of(coeff, Int(1)), exp);
    }

    Poly poly() {
        Poly acc;
        int s0 = accept('-') ? -1 : (accept('+'), 1);
        acc = term() * rat_of(s0);
        for (;;) {
            skip_ws();
            if (pos >= s.size()) break;
            int sg;
            if (accept('+'))
                sg = 1;
            else if (accept('-'))
                sg = -1;
            else
                throw InputError("polynomial parse error: unexpected character at offset " + std::to_string(pos));
            acc = acc + term() * rat_of(sg);
        }
        return acc;
    }
};

}  // namespace

Poly Poly::parse(const std::string& text) {
    Parser p(text);
    Poly r = p.poly();
    return r;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

int ideg(const std::vector<Int>& v) { return static_cast<int>(v.size()) - 1; }

void itrim(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
std::vector<Int> pseudo_rem(std::vector<Int> r, const std::vector<Int>& b) {
    const Int d = b.back();
    int e = ideg(r) - ideg(b) + 1;
    while (!r.empty() && ideg(r) >= ideg(b)) {
        const int k = ideg(r) - ideg(b);
        const Int top = r.back();
        for (Int& c : r) c *= d;
        for (size_t i = 0; i < b.size(); ++i) r[i + k] -= top * b[i];
        itrim(r);
        --e;
    }
    if (e > 0) {
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), d.get_mpz_t(), e);
        for (Int& c : r) c *= scale;
    }
    return r;
}

Int ipow(const Int& base, int e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int icontent(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Resultant of nonzero integer polynomials via the subresultant PRS
// (Cohen, A Course in Computational Algebraic Number Theory, Alg. 3.3.7).
Int resultant_subresultant(std::vector<Int> a, std::vector<Int> b) {
    Int s = 1;
    if (ideg(a) < ideg(b)) {
        std::swap(a, b);
        if ((ideg(a) % 2) && (ideg(b) % 2)) s = -s;
    }
    if (ideg(b) == 0) return ideg(a) == 0 ? Int(1) : s * ipow(b[0], ideg(a));

    const Int ca = icontent(a), cb = icontent(b);
    for (Int& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
    for (Int& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
    Int t = ipow(ca, ideg(b)) * ipow(cb, ideg(a));

    Int g = 1, h = 1;
    for (;;) {
        const int delta = ideg(a) - ideg(b);
        if ((ideg(a) % 2) && (ideg(b) % 2)) s = -s;
        std::vector<Int> r = pseudo_rem(a, b);
        a = std::move(b);
        const Int div = g * ipow(h, delta);
        for (Int& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
        b = std::move(r);
        if (b.empty()) return Int(0);  // positive-degree common factor
        g = a.back();
        if (delta >= 1) {
            Int hn = ipow(g, delta);
            if (delta >= 2) mpz_divexact(hn.get_mpz_t(), hn.get_mpz_t(), ipow(h, delta - 1).get_mpz_t());
            h = hn;
        }
        if (ideg(b) == 0) break;
    }
    Int out = ipow(b[0], ideg(a));
    if (ideg(a) >= 2) mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), ipow(h, ideg(a) - 1).get_mpz_t());
    return s * t * out;
}

Rat rpow(const Rat& base, int e) {
    Rat r = rat_of(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

Rat resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        // res(0, g) = 0 for deg g >= 1; empty-product convention otherwise
        const Poly& other = a.is_zero() ? b : a;
        return other.degree() >= 1 ? rat_of(0) : rat_of(1);
    }
    auto [ca, pa] = a.primitive_int();
    auto [cb, pb] = b.primitive_int();
    const Int r = resultant_subresultant(pa, pb);
    return rat_of(r, Int(1)) * rpow(ca, b.degree()) * rpow(cb, a.degree());
}

Rat discriminant(const Poly& f) {
    if (f.degree() < 1) throw Error("discriminant: degree must be >= 1");
    const int n = f.degree();
    Rat r = resultant(f, f.derivative()) / f.lc();
    if ((n * (n - 1) / 2) % 2) r = -r;
    return r;
}

}  // namespace quatlat
