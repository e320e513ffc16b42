#include "quatlat/sturm.hpp"

#include <algorithm>

#include "quatlat/errors.hpp"

namespace quatlat {

namespace {

int ideg(const std::vector<Int>& v) { return static_cast<int>(v.size()) - 1; }

void itrim(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (Int& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^e * (a mod b) with e = deg a - deg b + 1.
std::vector<Int> pseudo_rem(std::vector<Int> r, const std::vector<Int>& b, int& used_exp) {
    const Int d = b.back();
    int e = ideg(r) - ideg(b) + 1;
    used_exp = e;
    while (!r.empty() && ideg(r) >= ideg(b)) {
        const int k = ideg(r) - ideg(b);
        const Int top = r.back();
        for (Int& c : r) c *= d;
        for (size_t i = 0; i < b.size(); ++i) r[i + k] -= top * b[i];
        itrim(r);
        --e;
    }
    // remaining powers of d only rescale; sign handling uses used_exp
    return r;
}

int sign_at(const std::vector<Int>& p, const Rat& x) {
    Rat acc = rat_of(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + rat_of(*it, Int(1));
    return sign(acc);
}

int count_variations(const std::vector<int>& signs) {
    int var = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

SturmChain::SturmChain(const Poly& f) {
    if (f.degree() < 1) {
        if (!f.is_zero()) seq_.push_back({Int(1)});
        return;
    }
    seq_.push_back(f.primitive_int().second);
    seq_.push_back(f.derivative().primitive_int().second);
    while (ideg(seq_.back()) >= 0) {
        const auto& a = seq_[seq_.size() - 2];
        const auto& b = seq_.back();
        if (ideg(b) == 0) break;
        int e = 0;
        std::vector<Int> r = pseudo_rem(a, b, e);
        if (r.empty()) break;
        // prem = lc(b)^e * rem; Sturm wants -rem up to positive factor
        const bool lc_pow_negative = sign(b.back()) < 0 && (e % 2) == 1;
        if (!lc_pow_negative)
            for (Int& c : r) c = -c;
        make_primitive(r);
        seq_.push_back(std::move(r));
    }
}

int SturmChain::variations_at(const Rat& x) const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& p : seq_) signs.push_back(sign_at(p, x));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const auto& p : seq_) {
        int s = sign(p.back());
        if (ideg(p) % 2) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const auto& p : seq_) signs.push_back(sign(p.back()));
    return count_variations(signs);
}

int SturmChain::count_in(const Rat& a, const Rat& b) const {
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_all() const {
    return variations_at_neg_inf() - variations_at_pos_inf();
}

int count_real_roots(const Poly& f) {
    if (f.degree() < 1) return 0;
    if (gcd(f, f.derivative()).degree() > 0)
        throw NonSquarefreeError("count_real_roots: input has repeated roots");
    return SturmChain(f).count_all();
}

namespace {

// A point in (lo, hi) where f does not vanish.
Rat nonroot_point(const Poly& f, const Rat& lo, const Rat& hi) {
    Rat mid = (lo + hi) / 2;
    for (long k = 1; f.eval(mid) == 0; ++k)
        mid = lo + (hi - lo) * rat_of(k, k + 2);
    return mid;
}

void isolate_rec(const Poly& f, const SturmChain& chain, const Rat& lo, const Rat& hi,
                 int count, std::vector<RootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({lo, hi});
        return;
    }
    const Rat mid = nonroot_point(f, lo, hi);
    const int left = chain.count_in(lo, mid);
    isolate_rec(f, chain, lo, mid, left, out);
    isolate_rec(f, chain, mid, hi, count - left, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Poly& f) {
    if (f.degree() < 1) return {};
    if (f.degree() == 1) {
        const Rat root = -f.coeff(0) / f.coeff(1);
        return {{root, root}};
    }
    if (gcd(f, f.derivative()).degree() > 0)
        throw NonSquarefreeError("isolate_real_roots: input has repeated roots");
    const Rat bound = f.cauchy_root_bound();
    SturmChain chain(f);
    std::vector<RootInterval> out;
    isolate_rec(f, chain, -bound, bound, chain.count_in(-bound, bound), out);
    return out;
}

void refine_interval(const Poly& f, RootInterval& iv) {
    if (iv.is_point()) return;
    const int slo = sign(f.eval(iv.lo));
    const Rat mid = nonroot_point(f, iv.lo, iv.hi);
    if (sign(f.eval(mid)) == slo)
        iv.lo = mid;
    else
        iv.hi = mid;
}

int match_image_to_root(const Poly& g, const Poly& f, RootInterval iv,
                        const std::vector<RootInterval>& targets) {
    constexpr int kHardCap = 4096;
    int budget = 64;
    int spent = 0;
    for (;;) {
        const auto [jlo, jhi] = iv.is_point()
                                    ? std::pair<Rat, Rat>{g.eval(iv.lo), g.eval(iv.lo)}
                                    : g.eval_interval(iv.lo, iv.hi);
        int hit = -1, hits = 0;
        for (size_t i = 0; i < targets.size(); ++i) {
            if (jlo <= targets[i].hi && targets[i].lo <= jhi) {
                hit = static_cast<int>(i);
                ++hits;
            }
        }
        if (hits == 1) return hit;
        if (hits == 0 && iv.is_point())
            throw Error("match_image_to_root: image misses every target interval");
        while (spent < budget && !iv.is_point()) {
            refine_interval(f, iv);
            ++spent;
        }
        if (spent >= budget) {
            if (budget >= kHardCap)
                throw IntervalSeparationError("root separation budget exhausted (cap " +
                                              std::to_string(kHardCap) + " bisections)");
            budget *= 2;
        }
    }
}

}  // namespace quatlat
