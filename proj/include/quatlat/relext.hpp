#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "quatlat/numfield.hpp"

namespace quatlat {

// Archimedean fiber data over one real place of the base field:
// relative_degree = real_ext + 2 * complex_ext.
struct ArchStats {
    int base_real_index;
    int real_ext;     // r_K(v)
    int complex_ext;  // c_K(v)
};

// Fiber structure over one rational prime: for each place of the top field
// (in decomposition order), the base place under it and the local degree
// [K_w : (K0)_v] = e(w|v) f(w|v).
struct FiniteMatch {
    Int p;
    std::vector<int> base_of_top;
    std::vector<int> local_degree;
};

struct ArchMatch {
    std::vector<int> base_of_top_real;  // per top real root index
    std::vector<ArchStats> stats;       // per base real place
};

// K0 -> K given by theta_0 |-> image(theta); construction verifies
// f_{K0}(image) = 0 mod f_K exactly.
class SubfieldEmbedding {
  public:
    using Ptr = std::shared_ptr<const SubfieldEmbedding>;

    // Throws DegreeMismatchError / NotAnEmbeddingError.
    static Ptr verify(NumberField::Ptr base, NumberField::Ptr top, const Poly& image);
    static Ptr identity(NumberField::Ptr field);

    const NumberField::Ptr& base() const { return base_; }
    const NumberField::Ptr& top() const { return top_; }
    const Poly& image() const { return image_; }
    int relative_degree() const { return relative_degree_; }

    // Requires the Dedekind check to pass in both fields (IndexDivisibleError
    // otherwise); MatchAmbiguousError signals inconsistent place data.
    const FiniteMatch& match_finite(const Int& p, std::uint64_t seed = 0) const;
    const ArchMatch& match_infinite() const;
    // Every complex base place has exactly relative_degree extensions, all
    // complex of local degree 1.
    int complex_base_extension_count() const { return relative_degree_; }

  private:
    SubfieldEmbedding() = default;
    NumberField::Ptr base_, top_;
    Poly image_;
    int relative_degree_ = 0;

    mutable std::mutex cache_mutex_;
    mutable std::map<Int, FiniteMatch> finite_cache_;
    mutable std::unique_ptr<ArchMatch> arch_cache_;
};

struct AutomorphismGroup {
    NumberField::Ptr field;
    std::vector<Poly> elements;             // reduced mod f; elements[0] is the identity
    std::vector<std::vector<int>> table;    // table[i][j] = index of elements[i] o elements[j]
    bool input_was_closed = true;

    int order() const { return static_cast<int>(elements.size()); }
};

// Accepts exactly those images h with f(h) = 0 mod f (NotAutomorphismError
// otherwise) and returns the closure under composition, with identity.
AutomorphismGroup verify_automorphisms(const NumberField::Ptr& field, const std::vector<Poly>& images);

// Trivial group {identity}.
AutomorphismGroup trivial_automorphisms(const NumberField::Ptr& field);

// Verified automorphisms of the top field fixing the embedded base pointwise
// (image o h = image mod f). Non-fixing automorphisms are dropped; the
// identity is always included. Throws NotAutomorphismError on bad input.
std::vector<Poly> verify_relative_automorphisms(const SubfieldEmbedding& emb,
                                                const std::vector<Poly>& images);

struct GaloisCertificate {
    bool certified = false;  // false: NotCertified (never proves non-Galois)
    int order = 0;
    bool even_degree() const { return certified && order % 2 == 0; }
};

// Galois(order) iff the verified relative automorphisms number exactly
// [K:K0].
GaloisCertificate is_relatively_galois(const SubfieldEmbedding& emb, const std::vector<Poly>& images);

// Index of the real place sigma maps real place `real_index` to.
int act_on_real_place(const NumberField& field, const Poly& sigma, int real_index);
// Index of the place above p that sigma maps place `place_index` to.
int act_on_finite_place(const NumberField& field, const Poly& sigma, const Int& p, int place_index,
                        std::uint64_t seed = 0);

}  // namespace quatlat
