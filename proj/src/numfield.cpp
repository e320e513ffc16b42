#include "quatlat/numfield.hpp"

#include <algorithm>

#include "quatlat/errors.hpp"

namespace quatlat {

namespace {

// Irreducible mod p certifies irreducibility over Q for monic integer f.
bool certify_mod_p(const Poly& f, const std::vector<Int>& test_primes) {
    for (const Int& p : test_primes) {
        FpPoly fp = FpPoly::from_poly(f, p);
        if (fp.degree() != f.degree()) continue;
        if (is_irreducible_mod_p(fp)) return true;
    }
    return false;
}

// Degrees of proper rational factors are subset sums of the mod-p splitting
// type at every prime of squarefree reduction; an empty intersection over
// several primes rules them all out.
bool certify_degree_sieve(const Poly& f, const std::vector<Int>& test_primes) {
    const int n = f.degree();
    if (n >= 63) return false;
    std::uint64_t feasible = ~0ULL;
    bool any = false;
    for (const Int& p : test_primes) {
        FpPoly fp = FpPoly::from_poly(f, p);
        if (fp.degree() != n) continue;
        if (gcd(fp, fp.derivative()).degree() != 0) continue;  // needs squarefree reduction
        std::uint64_t sums = 1;
        for (int d : decomposition_type(fp)) sums |= sums << d;
        feasible &= sums;
        any = true;
        const std::uint64_t proper = feasible & ((1ULL << n) - 2);  // bits 1..n-1
        if (proper == 0) return true;
    }
    (void)any;
    return false;
}

// Monic integer f with f(0) != 0: search integer roots among divisors of the
// constant term (capped; a miss just means no certificate either way).
std::optional<Int> find_integer_root(const Poly& f) {
    const Int c0 = f.coeff(0).get_num();
    if (c0 == 0) return Int(0);
    auto factors = factor_integer(c0);
    std::vector<Int> divisors{Int(1)};
    for (const auto& [p, e] : factors) {
        const size_t sz = divisors.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) divisors.push_back(divisors[i] * pk);
        }
        if (divisors.size() > 4096) return std::nullopt;  // give up, no witness
    }
    for (const Int& d : divisors) {
        if (f.eval(rat_of(d, Int(1))) == 0) return d;
        if (f.eval(rat_of(-d, Int(1))) == 0) return -d;
    }
    return std::nullopt;
}

}  // namespace

NumberField::Ptr NumberField::make(const Poly& f, bool assume_irreducible, std::string label) {
    if (f.degree() < 1) throw InputError("defining polynomial must have degree >= 1");
    if (!f.is_monic()) throw InputError("defining polynomial must be monic");
    if (!f.has_integer_coeffs()) throw InputError("defining polynomial must have integer coefficients");
    if (gcd(f, f.derivative()).degree() > 0)
        throw InputError("defining polynomial has a repeated factor, hence is reducible");

    auto field = std::shared_ptr<NumberField>(new NumberField());
    field->poly_ = f;
    field->label_ = std::move(label);

    if (f.degree() == 1) {
        field->irred_ = IrreducibilityStatus::CertifiedModP;  // trivially irreducible
    } else {
        if (auto root = find_integer_root(f))
            throw InputError("defining polynomial has the rational root " + root->get_str());
        const std::vector<Int> test_primes = primes_up_to(Int(97));
        if (certify_mod_p(f, test_primes))
            field->irred_ = IrreducibilityStatus::CertifiedModP;
        else if (certify_degree_sieve(f, test_primes))
            field->irred_ = IrreducibilityStatus::CertifiedDegreeSieve;
        else if (assume_irreducible)
            field->irred_ = IrreducibilityStatus::AssertedByCaller;
        else
            field->irred_ = IrreducibilityStatus::Unverified;
    }

    field->real_roots_ = isolate_real_roots(f);
    field->r1_ = static_cast<int>(field->real_roots_.size());
    if ((f.degree() - field->r1_) % 2 != 0)
        throw Error("internal: real root count parity violation");
    field->r2_ = (f.degree() - field->r1_) / 2;

    const Rat disc = discriminant(f);
    field->disc_ = disc.get_num();  // monic integer f has integer discriminant

    if (field->disc_ != 0) {
        Int abs_disc = abs(field->disc_);
        if (abs_disc > 1) {
            for (const auto& [p, v] : factor_integer(abs_disc)) {
                if (v % 2 == 1) {
                    // odd valuation cannot come from the index square alone
                    field->ramified_.push_back(p);
                } else if (field->dedekind_index_check(p)) {
                    field->ramified_.push_back(p);
                } else {
                    field->undetermined_.push_back(p);
                }
            }
        }
    }
    return field;
}

NumberField::Ptr NumberField::rationals() {
    static Ptr q = make(Poly::variable(), false, "Q");
    return q;
}

bool NumberField::dedekind_index_check(const Int& p) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (auto it = dedekind_cache_.find(p); it != dedekind_cache_.end()) return it->second;
    }
    FpPoly fp = FpPoly::from_poly(poly_, p);
    auto factors = factor_mod_p(fp, 0);
    FpPoly gstar = FpPoly::constant(p, Int(1));
    FpPoly hstar = FpPoly::constant(p, Int(1));
    for (const auto& [h, e] : factors) {
        gstar = gstar * h;
        for (int i = 0; i < e - 1; ++i) hstar = hstar * h;
    }
    // T = (f - g h)/p for monic lifts g, h of the radical and cofactor
    Poly diff = poly_ - gstar.lift() * hstar.lift();
    Poly T = diff * rat_of(Int(1), p);
    if (!T.has_integer_coeffs()) throw Error("internal: Dedekind difference not divisible by p");
    FpPoly Tp = FpPoly::from_poly(T, p);
    const bool ok = gcd(gcd(gstar, hstar), Tp).degree() == 0;
    std::lock_guard<std::mutex> lock(cache_mutex_);
    dedekind_cache_.emplace(p, ok);
    return ok;
}

const PrimeDecomposition& NumberField::decompose(const Int& p, std::uint64_t seed) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (auto it = decomp_cache_.find(p); it != decomp_cache_.end()) {
            if (it->second.index_divisible)
                throw IndexDivisibleError(p.get_str(), label_.empty() ? poly_.to_string() : label_);
            return it->second;
        }
    }
    PrimeDecomposition dec = decompose_or_flag(p, seed);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, _] = decomp_cache_.emplace(p, std::move(dec));
    if (it->second.index_divisible)
        throw IndexDivisibleError(p.get_str(), label_.empty() ? poly_.to_string() : label_);
    return it->second;
}

PrimeDecomposition NumberField::decompose_or_flag(const Int& p, std::uint64_t seed) const {
    PrimeDecomposition dec;
    dec.p = p;
    if (!dedekind_index_check(p)) {
        dec.index_divisible = true;
        return dec;
    }
    FpPoly fp = FpPoly::from_poly(poly_, p);
    int total = 0;
    for (const auto& [factor, mult] : factor_mod_p(fp, seed)) {
        FinitePlaceData place{factor, mult, factor.degree()};
        total += place.local_degree();
        dec.places.push_back(std::move(place));
    }
    if (total != degree()) throw Error("internal: sum of e*f over places differs from the degree");
    return dec;
}

std::vector<InfinitePlace> NumberField::infinite_places() const {
    std::vector<InfinitePlace> out;
    for (int i = 0; i < r1_; ++i) out.push_back({InfinitePlace::Kind::Real, i});
    for (int i = 0; i < r2_; ++i) out.push_back({InfinitePlace::Kind::Complex, i});
    return out;
}

}  // namespace quatlat
