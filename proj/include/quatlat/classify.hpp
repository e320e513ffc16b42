#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatlat/quat.hpp"

namespace quatlat {

// [K:K0] = (2b + a + sum r_K(v_j)) / (2d + c + #Ram_oo(B)), exact rational;
// the caller rejects non-integral values. Throws ZeroDenominatorError.
Rat degree_formula(int a, int b, int c, int d, const std::vector<int>& ram_arch_real_exts);

// Divisor count tau(n), n >= 1.
Int tau(const Int& n);

// A place of the base field of an embedding.
struct BasePlaceRef {
    enum class Kind { Finite, RealInf, ComplexInf };
    Kind kind = Kind::Finite;
    Int p;          // Finite only
    int index = 0;  // decomposition index / real root ordinal / complex ordinal

    bool operator==(const BasePlaceRef& o) const {
        return kind == o.kind && index == o.index && (kind != Kind::Finite || p == o.p);
    }
    std::string to_string() const;
};

enum class VerdictStatus { Forced, Forbidden, Free, Violation };
std::string to_string(VerdictStatus s);

struct FiberMember {
    PlaceKey key;          // top place (finite verdicts)
    int local_degree;      // [K_w : (K0)_v]
    bool ramified_in_A;
};

// Whether the base place must / must not / may lie in Ram(B) for B to
// base-change onto A:
//   Forced    iff A_v = Odd_v != {}    Forbidden iff A_v = {} != Odd_v
//   Free      iff A_v = Odd_v = {}     Violation otherwise
// where A_v is the ramified-in-A part of the fiber and Odd_v its
// odd-local-degree part.
struct PlaceVerdict {
    BasePlaceRef place;
    VerdictStatus status;
    std::vector<FiberMember> fiber;   // finite fibers
    std::vector<int> arch_real_fiber; // real verdicts: top real indices above
    std::vector<int> arch_ram;        // subset of arch_real_fiber ramified in A
    int complex_ext = 0;              // real verdicts: c_K(v); complex verdicts: fiber size
};

struct VerdictSet {
    std::vector<PlaceVerdict> verdicts;
    // primes <= bound skipped because the Dedekind check fails in one of the
    // fields; never contains primes under Ram(A) (those throw instead)
    std::vector<Int> skipped_primes;
};

// Verdicts for every base place under Ram(A), every archimedean base place,
// every base place over p <= prime_bound, and every base place over primes of
// the two polynomial discriminants (ramified places are always explicit).
VerdictSet place_verdicts(const QuaternionAlgebra& algebra, const SubfieldEmbedding& emb,
                          const Int& prime_bound, std::uint64_t seed = 0);

// User-asserted list of allowed fiber-degree multisets at unramified primes,
// standing in for Galois-closure Frobenius analysis. Sampled up to
// sample_bound before use.
struct SplittingTypeCertificate {
    std::vector<std::vector<int>> allowed_types;  // each multiset sorted ascending
    Int sample_bound;
    bool asserted_by_user = true;

    bool all_types_contain_odd() const;
};

// Checks every unramified prime <= sample_bound against the allowed set;
// throws InputError with the offending prime on violation.
void validate_certificate(const SubfieldEmbedding& emb, const SplittingTypeCertificate& cert,
                          std::uint64_t seed = 0);

enum class FreePlaceKnowledge {
    CertifiedInfinite,  // even-degree relative Galois: infinitely many free finite places
    CertifiedComplete,  // odd-degree Galois or splitting-type certificate: the found list is all of them
    SearchOnly,         // only the finite search below prime_bound
};

enum class Certification { CertifiedGalois, CertifiedByTypeCertificate, Uncertified };
std::string to_string(Certification c);

struct CriterionOutcome {
    enum class Status { Exists, NotExists, Inconclusive };
    Status status;
    std::vector<BasePlaceRef> forced;
    std::vector<BasePlaceRef> free_finite;
    std::vector<BasePlaceRef> free_arch;
    std::vector<PlaceVerdict> violations;
    FreePlaceKnowledge knowledge = FreePlaceKnowledge::SearchOnly;
    Certification certification = Certification::Uncertified;
    GaloisCertificate galois;
    VerdictSet verdicts;
    std::string detail;
};

// Lemma-style existence test: Exists iff no fiber violation under Ram(A) and
// the forced set has even cardinality or some free place exists. Free places
// are searched exactly (archimedean, ramified) and up to prime_bound
// (unramified finite); certificates settle the tail. Status Inconclusive when
// the parity needs a free place, none is found below the bound and no
// certificate applies.
CriterionOutcome embedding_criterion(const QuaternionAlgebra& algebra, const SubfieldEmbedding& emb,
                                     const Int& prime_bound, const std::vector<Poly>& relative_autos,
                                     const std::optional<SplittingTypeCertificate>& certificate,
                                     std::uint64_t seed = 0);

struct ClassRepresentative {
    QuaternionAlgebra algebra;  // over the base field
    bool trivial = false;       // K0 = K, B = A
};

struct SignatureGroup {
    int c = 0, d = 0;
    enum class Status { Finite, Infinite, LowerBound } status = Status::Finite;
    std::vector<ClassRepresentative> representatives;
    long exact_count = 0;                   // Finite: exact; LowerBound: proven distinct
    std::vector<BasePlaceRef> witness_free; // Infinite: two exhibited free places
    Int search_bound;                       // LowerBound
    std::string note;
};

struct ClassificationResult {
    CriterionOutcome criterion;
    Certification certification = Certification::Uncertified;
    std::vector<SignatureGroup> groups;  // sorted by (c, d) descending c

    bool inconclusive() const { return criterion.status == CriterionOutcome::Status::Inconclusive; }
    bool any_infinite() const;
};

// Solution set { Ram(B) = Forced u S : S subset of free places, |Forced u S|
// even }, grouped by (c, d) and quotiented by the verified Aut(K0/Q)-action.
// Totally definite combinations (c = d = 0) yield no lattice and are skipped.
ClassificationResult enumerate_classes(const QuaternionAlgebra& algebra,
                                       const SubfieldEmbedding& emb,
                                       const AutomorphismGroup& base_autos, const Int& prime_bound,
                                       const std::vector<Poly>& relative_autos,
                                       const std::optional<SplittingTypeCertificate>& certificate,
                                       std::uint64_t seed = 0);

// Ram(B') = Ram(B) u {p1, p2} for distinct free places; the base change is
// unchanged (verified by recomputation). Throws NotFreeError.
QuaternionAlgebra twist(const QuaternionAlgebra& algebra, const SubfieldEmbedding& emb,
                        const PlaceKey& p1, const PlaceKey& p2, std::uint64_t seed = 0);

// Up to `want` unramified rational primes <= bound all of whose base places
// have all-even fibers (may return fewer).
std::vector<Int> find_even_places(const SubfieldEmbedding& emb, const Int& bound, int want,
                                  std::uint64_t seed = 0);

struct SubfieldInput {
    std::string label;
    SubfieldEmbedding::Ptr embedding;
    AutomorphismGroup base_autos;
    std::vector<Poly> relative_autos;
    std::optional<SplittingTypeCertificate> certificate;
};

struct SubfieldReport {
    std::string label;
    int relative_degree = 0;
    bool rejected = false;  // degree screen
    std::string reject_reason;
    std::optional<ClassificationResult> result;
    std::string error;  // per-subfield failure, collected rather than fatal
};

struct Report {
    LatticeSignature ambient;  // (a, b) of A
    std::vector<SubfieldReport> subfields;

    bool any_infinite() const;
    bool any_inconclusive() const;
    // Exact total when every subfield is finite; counts trivial classes too.
    std::optional<long> total_classes() const;
    std::optional<long> nontrivial_classes() const;
};

Report full_sublattice_report(const QuaternionAlgebra& algebra,
                              const std::vector<SubfieldInput>& subfields, const Int& prime_bound,
                              std::uint64_t seed = 0);

}  // namespace quatlat
