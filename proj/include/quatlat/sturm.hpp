#pragma once

#include <vector>

#include "quatlat/poly.hpp"

namespace quatlat {

// Signed remainder sequence with integer primitive-part normalization; the
// positive rescaling preserves all sign information.
class SturmChain {
  public:
    explicit SturmChain(const Poly& f);

    int variations_at(const Rat& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;
    // Distinct real roots in the half-open interval (a, b].
    int count_in(const Rat& a, const Rat& b) const;
    // Distinct real roots on the whole line.
    int count_all() const;

  private:
    std::vector<std::vector<Int>> seq_;
};

// Number of distinct real roots of squarefree f; throws NonSquarefreeError
// (divide by gcd(f, f') first).
int count_real_roots(const Poly& f);

// Closed interval containing exactly one real root; lo == hi means the root
// is the rational number itself; otherwise both endpoints are non-roots and
// the root lies strictly inside.
struct RootInterval {
    Rat lo, hi;
    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }
};

// Disjoint isolating intervals for all real roots of squarefree f, sorted
// ascending. Throws NonSquarefreeError.
std::vector<RootInterval> isolate_real_roots(const Poly& f);

// One bisection step (no-op on point intervals). The interval must contain
// exactly one simple root of f with sign change across it.
void refine_interval(const Poly& f, RootInterval& iv);

// Index of the unique target interval that g(root of f in iv) lies in, where
// g maps that root to a root isolated by `targets` (pairwise disjoint).
// Refines iv until the image interval meets exactly one target; the budget
// doubles on exhaustion up to a hard cap, then IntervalSeparationError.
int match_image_to_root(const Poly& g, const Poly& f, RootInterval iv,
                        const std::vector<RootInterval>& targets);

}  // namespace quatlat
