#include "quatlat/rational.hpp"

#include <algorithm>

#include "quatlat/errors.hpp"

namespace quatlat {

std::vector<Int> primes_up_to(const Int& bound) {
    std::vector<Int> out;
    Int p = 2;
    while (p <= bound) {
        out.push_back(p);
        p = next_prime(p);
    }
    return out;
}

namespace {

// Pollard rho (Brent variant) for odd composite n with no small factors.
Int pollard_rho(const Int& n, unsigned long c0) {
    Int x = 2, y = 2, d = 1;
    Int c(c0);
    while (d == 1) {
        x = (x * x + c) % n;
        y = (y * y + c) % n;
        y = (y * y + c) % n;
        Int diff = x - y;
        if (diff < 0) diff = -diff;
        if (diff == 0) return 0;  // cycle without factor; retry with new c
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    return d == n ? Int(0) : d;
}

void factor_rec(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n]++;
        return;
    }
    for (unsigned long c = 1;; ++c) {
        Int d = pollard_rho(n, c);
        if (d != 0) {
            factor_rec(d, out);
            factor_rec(n / d, out);
            return;
        }
    }
}

}  // namespace

std::map<Int, int> factor_integer(Int n) {
    if (n == 0) throw Error("factor_integer: zero input");
    if (n < 0) n = -n;
    std::map<Int, int> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            out[Int(p)]++;
            n /= p;
        }
    }
    Int d = 17;
    while (n > 1 && d * d <= n && d < 100000) {
        while (n % d == 0) {
            out[d]++;
            n /= d;
        }
        d += 2;
    }
    if (n > 1) factor_rec(n, out);
    return out;
}

Int divisor_count(const Int& n) {
    if (n < 1) throw Error("divisor_count: input must be >= 1");
    Int count = 1;
    Int m = n;
    Int d = 2;
    while (d * d <= m) {
        int e = 0;
        while (m % d == 0) {
            ++e;
            m /= d;
        }
        count *= e + 1;
        d += 1;
    }
    if (m > 1) count *= 2;
    return count;
}

}  // namespace quatlat
