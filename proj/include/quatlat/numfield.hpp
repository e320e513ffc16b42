#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quatlat/fppoly.hpp"
#include "quatlat/poly.hpp"
#include "quatlat/sturm.hpp"

namespace quatlat {

// One prime of K above p, read off the factorization of the defining
// polynomial mod p (valid when p does not divide the index).
struct FinitePlaceData {
    FpPoly factor;  // monic irreducible, cuts out the place
    int e;          // ramification index
    int fdeg;       // residue degree
    int local_degree() const { return e * fdeg; }
};

struct PrimeDecomposition {
    Int p;
    bool index_divisible = false;
    std::vector<FinitePlaceData> places;  // sorted by factor order; empty iff index_divisible
};

struct InfinitePlace {
    enum class Kind { Real, Complex };
    Kind kind;
    int index;  // ordinal within its kind (real: by increasing root value)
};

enum class IrreducibilityStatus {
    CertifiedModP,        // irreducible mod some small prime
    CertifiedDegreeSieve, // factor-degree subset sums mod several primes exclude proper factors
    AssertedByCaller,
    Unverified,           // no certificate found; tool proceeds with a warning
};

// Q[t]/(f) for monic irreducible integer f. Immutable after construction;
// the prime-decomposition cache is write-once per prime and idempotent.
class NumberField {
  public:
    using Ptr = std::shared_ptr<const NumberField>;

    // Throws InputError on non-monic/non-integer input, a repeated factor, or
    // a rational root in degree >= 2.
    static Ptr make(const Poly& f, bool assume_irreducible = false, std::string label = "");
    // Q, represented uniformly as the degree-1 field with defining polynomial t.
    static Ptr rationals();

    const Poly& defining_poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    bool is_rational() const { return degree() == 1; }
    int real_place_count() const { return r1_; }     // r1
    int complex_place_count() const { return r2_; }  // r2
    const Int& poly_discriminant() const { return disc_; }
    // Primes certified ramified in K (they divide disc(f)).
    const std::vector<Int>& ramified_primes() const { return ramified_; }
    // Primes dividing disc(f) whose ramification this generator cannot decide
    // (Dedekind check fails and the discriminant valuation is even).
    const std::vector<Int>& undetermined_primes() const { return undetermined_; }
    IrreducibilityStatus irreducibility() const { return irred_; }
    const std::string& label() const { return label_; }
    const std::vector<RootInterval>& real_roots() const { return real_roots_; }

    // Dedekind criterion: true iff p does not divide [O_K : Z[theta]].
    bool dedekind_index_check(const Int& p) const;
    // Throws IndexDivisibleError when the Dedekind check fails. Ordering of
    // places is deterministic; the cached result is seed-independent.
    const PrimeDecomposition& decompose(const Int& p, std::uint64_t seed = 0) const;
    // Decomposition with index_divisible flag instead of an exception.
    PrimeDecomposition decompose_or_flag(const Int& p, std::uint64_t seed = 0) const;

    std::vector<InfinitePlace> infinite_places() const;
    bool divides_disc(const Int& p) const { return disc_ % p == 0; }

  private:
    NumberField() = default;

    Poly poly_;
    std::string label_;
    int r1_ = 0, r2_ = 0;
    Int disc_;
    std::vector<Int> ramified_;
    std::vector<Int> undetermined_;
    IrreducibilityStatus irred_ = IrreducibilityStatus::Unverified;
    std::vector<RootInterval> real_roots_;

    mutable std::mutex cache_mutex_;
    mutable std::map<Int, PrimeDecomposition> decomp_cache_;
    mutable std::map<Int, bool> dedekind_cache_;
};

}  // namespace quatlat
