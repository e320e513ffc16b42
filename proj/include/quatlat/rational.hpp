#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace quatlat {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from_string(const std::string& s) { return Int(s, 10); }

// Reduced fraction with positive denominator (mpq keeps this canonical).
inline Rat rat_of(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_of(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

inline Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// All primes p <= bound, ascending.
std::vector<Int> primes_up_to(const Int& bound);

// Complete factorization of |n| for n != 0: trial division then Pollard rho
// with Miller-Rabin certificates. Returns prime -> exponent, ascending.
std::map<Int, int> factor_integer(Int n);

// Number of positive divisors, by trial division. Requires n >= 1.
Int divisor_count(const Int& n);

// Deterministic 64-bit linear congruential generator (Knuth MMIX constants);
// the only randomness source in the library, always seeded by the caller.
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }
    // Uniform-ish residue in [0, m), m > 0.
    Int below(const Int& m) {
        Int acc = 0;
        // 64 fresh bits per limb-sized chunk keeps this exact for big m.
        const int chunks = static_cast<int>(mpz_sizeinbase(m.get_mpz_t(), 2) / 64 + 1);
        for (int i = 0; i < chunks; ++i) {
            acc <<= 64;
            acc += Int(static_cast<unsigned long>(next() >> 32)) << 32 |
                   Int(static_cast<unsigned long>(next() & 0xffffffffULL));
        }
        return acc % m;
    }
};

}  // namespace quatlat
