#pragma once

#include <compare>
#include <optional>
#include <set>
#include <vector>

#include "quatlat/relext.hpp"

namespace quatlat {

// Finite place identifier: rational prime and index into the deterministic
// decomposition ordering of the field.
struct PlaceKey {
    Int p;
    int index;
    std::strong_ordering operator<=>(const PlaceKey& o) const {
        if (int c = mpz_cmp(p.get_mpz_t(), o.p.get_mpz_t()); c != 0)
            return c <=> 0;
        return index <=> o.index;
    }
    bool operator==(const PlaceKey& o) const = default;
};

struct FiniteRamSpec {
    Int p;
    std::optional<int> factor_index;  // nullopt: all places above p
};

// (a, b) = (split real places, complex places) of the algebra's field.
struct LatticeSignature {
    int split_real;       // a (or c)
    int complex_places;   // b (or d)
    bool operator==(const LatticeSignature&) const = default;
};

// A quaternion algebra represented by its Brauer-class data: the base field
// and the even-cardinality ramification set (finite places by PlaceKey, real
// places by index). Complex places never ramify.
class QuaternionAlgebra {
  public:
    // Resolves place specs through decompose(); validates parity
    // (OddRamificationError) and real indices (ComplexPlaceListedError).
    static QuaternionAlgebra make(NumberField::Ptr field, const std::vector<FiniteRamSpec>& finite,
                                  const std::vector<int>& real_indices, std::uint64_t seed = 0);
    static QuaternionAlgebra from_places(NumberField::Ptr field, std::set<PlaceKey> finite,
                                         std::set<int> real_indices);

    const NumberField::Ptr& field() const { return field_; }
    const std::set<PlaceKey>& ram_finite() const { return ram_finite_; }
    const std::set<int>& ram_real() const { return ram_real_; }
    bool ram_empty() const { return ram_finite_.empty() && ram_real_.empty(); }

    bool is_matrix_algebra() const { return ram_empty(); }
    // Cocompact iff the algebra is not the matrix algebra.
    bool cocompact() const { return !is_matrix_algebra(); }
    // Ramified at every archimedean place (no lattice in SL2 products).
    bool is_totally_definite() const;
    // Throws TotallyDefiniteError.
    LatticeSignature signature() const;

    bool operator==(const QuaternionAlgebra& o) const {
        return field_ == o.field_ && ram_finite_ == o.ram_finite_ && ram_real_ == o.ram_real_;
    }

  private:
    QuaternionAlgebra(NumberField::Ptr field, std::set<PlaceKey> finite, std::set<int> real)
        : field_(std::move(field)), ram_finite_(std::move(finite)), ram_real_(std::move(real)) {}
    NumberField::Ptr field_;
    std::set<PlaceKey> ram_finite_;
    std::set<int> ram_real_;
};

// Brauer-class base change along an embedding: a top place ramifies iff the
// base place under it ramifies and the local degree is odd (the Hasse
// invariant multiplies by the local degree in (1/2)Z/Z). Real places over a
// ramified real place transfer at local degree 1; complex places never
// ramify.
QuaternionAlgebra base_change(const QuaternionAlgebra& algebra, const SubfieldEmbedding& emb,
                              std::uint64_t seed = 0);

// True iff some verified automorphism maps Ram(B1) onto Ram(B2).
bool same_class(const QuaternionAlgebra& b1, const QuaternionAlgebra& b2,
                const AutomorphismGroup& autos, std::uint64_t seed = 0);

}  // namespace quatlat
