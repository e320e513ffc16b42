#include "quatlat/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quatlat/errors.hpp"

namespace quatlat {

Rat degree_formula(int a, int b, int c, int d, const std::vector<int>& ram_arch_real_exts) {
    const long denom = 2L * d + c + static_cast<long>(ram_arch_real_exts.size());
    if (denom <= 0)
        throw ZeroDenominatorError("degree formula denominator 2d + c + #Ram_oo(B) is " +
                                   std::to_string(denom));
    long num = 2L * b + a;
    for (int r : ram_arch_real_exts) num += r;
    return rat_of(num, denom);
}

Int tau(const Int& n) { return divisor_count(n); }

std::string BasePlaceRef::to_string() const {
    switch (kind) {
        case Kind::Finite:
            return p.get_str() + "#" + std::to_string(index);
        case Kind::RealInf:
            return "oo_r" + std::to_string(index);
        case Kind::ComplexInf:
            return "oo_c" + std::to_string(index);
    }
    return "?";
}

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Forced: return "Forced";
        case VerdictStatus::Forbidden: return "Forbidden";
        case VerdictStatus::Free: return "Free";
        case VerdictStatus::Violation: return "Violation";
    }
    return "?";
}

std::string to_string(Certification c) {
    switch (c) {
        case Certification::CertifiedGalois: return "CertifiedGalois";
        case Certification::CertifiedByTypeCertificate: return "CertifiedByTypeCertificate";
        case Certification::Uncertified: return "Uncertified";
    }
    return "?";
}

namespace {

VerdictStatus fiber_status(bool any_ram, bool ram_equals_odd, bool any_odd) {
    if (ram_equals_odd) return any_ram ? VerdictStatus::Forced : VerdictStatus::Free;
    if (!any_ram && any_odd) return VerdictStatus::Forbidden;
    return VerdictStatus::Violation;
}

std::vector<Int> disc_support(const NumberField& field) {
    std::vector<Int> out = field.ramified_primes();
    const auto& undet = field.undetermined_primes();
    out.insert(out.end(), undet.begin(), undet.end());
    return out;
}

}  // namespace

VerdictSet place_verdicts(const QuaternionAlgebra& algebra, const SubfieldEmbedding& emb,
                          const Int& prime_bound, std::uint64_t seed) {
    const NumberField::Ptr& base = emb.base();
    const NumberField::Ptr& top = emb.top();

    std::set<Int> prime_set;
    for (const PlaceKey& v : algebra.ram_finite()) prime_set.insert(v.p);
    for (const Int& p : primes_up_to(prime_bound)) prime_set.insert(p);
    // ramified places are always handled explicitly, whatever the bound
    for (const Int& p : disc_support(*base)) prime_set.insert(p);
    for (const Int& p : disc_support(*top)) prime_set.insert(p);

    VerdictSet out;
    for (const Int& p : prime_set) {
        const bool under_ram = std::any_of(algebra.ram_finite().begin(), algebra.ram_finite().end(),
                                           [&](const PlaceKey& v) { return v.p == p; });
        if (!base->dedekind_index_check(p) || !top->dedekind_index_check(p)) {
            if (under_ram) {
                base->decompose(p, seed);  // throws IndexDivisibleError for the right field
                top->decompose(p, seed);
            }
            out.skipped_primes.push_back(p);
            continue;
        }
        const FiniteMatch& match = emb.match_finite(p, seed);
        const PrimeDecomposition& base_dec = base->decompose(p, seed);
        for (int i = 0; i < static_cast<int>(base_dec.places.size()); ++i) {
            PlaceVerdict v;
            v.place = {BasePlaceRef::Kind::Finite, p, i};
            bool any_ram = false, any_odd = false, ram_eq_odd = true;
            for (size_t j = 0; j < match.base_of_top.size(); ++j) {
                if (match.base_of_top[j] != i) continue;
                const PlaceKey key{p, static_cast<int>(j)};
                const bool odd = match.local_degree[j] % 2 == 1;
                const bool ram = algebra.ram_finite().count(key) > 0;
                v.fiber.push_back({key, match.local_degree[j], ram});
                any_ram |= ram;
                any_odd |= odd;
                ram_eq_odd &= (ram == odd);
            }
            v.status = fiber_status(any_ram, ram_eq_odd, any_odd);
            out.verdicts.push_back(std::move(v));
        }
    }

    const ArchMatch& arch = emb.match_infinite();
    for (const ArchStats& stat : arch.stats) {
        PlaceVerdict v;
        v.place = {BasePlaceRef::Kind::RealInf, Int(0), stat.base_real_index};
        v.complex_ext = stat.complex_ext;
        for (size_t j = 0; j < arch.base_of_top_real.size(); ++j) {
            if (arch.base_of_top_real[j] != stat.base_real_index) continue;
            v.arch_real_fiber.push_back(static_cast<int>(j));
            if (algebra.ram_real().count(static_cast<int>(j))) v.arch_ram.push_back(static_cast<int>(j));
        }
        // real extensions have local degree 1 (odd), complex ones degree 2,
        // so Odd_v is exactly the real part of the fiber
        if (v.arch_real_fiber.empty())
            v.status = VerdictStatus::Free;
        else if (v.arch_ram.size() == v.arch_real_fiber.size())
            v.status = VerdictStatus::Forced;
        else if (v.arch_ram.empty())
            v.status = VerdictStatus::Forbidden;
        else
            v.status = VerdictStatus::Violation;
        out.verdicts.push_back(std::move(v));
    }
    for (int i = 0; i < base->complex_place_count(); ++i) {
        PlaceVerdict v;
        v.place = {BasePlaceRef::Kind::ComplexInf, Int(0), i};
        v.complex_ext = emb.complex_base_extension_count();
        v.status = VerdictStatus::Forbidden;  // complex places never ramify
        out.verdicts.push_back(std::move(v));
    }
    return out;
}

bool SplittingTypeCertificate::all_types_contain_odd() const {
    return std::all_of(allowed_types.begin(), allowed_types.end(), [](const std::vector<int>& t) {
        return std::any_of(t.begin(), t.end(), [](int d) { return d % 2 == 1; });
    });
}

void validate_certificate(const SubfieldEmbedding& emb, const SplittingTypeCertificate& cert,
                          std::uint64_t seed) {
    std::set<std::vector<int>> allowed;
    for (std::vector<int> t : cert.allowed_types) {
        std::sort(t.begin(), t.end());
        allowed.insert(std::move(t));
    }
    for (const Int& p : primes_up_to(cert.sample_bound)) {
        if (emb.base()->divides_disc(p) || emb.top()->divides_disc(p)) continue;
        const FiniteMatch& match = emb.match_finite(p, seed);
        const int base_places = static_cast<int>(emb.base()->decompose(p, seed).places.size());
        for (int i = 0; i < base_places; ++i) {
            std::vector<int> type;
            for (size_t j = 0; j < match.base_of_top.size(); ++j)
                if (match.base_of_top[j] == i) type.push_back(match.local_degree[j]);
            std::sort(type.begin(), type.end());
            if (!allowed.count(type)) {
                std::string ts;
                for (int dgr : type) ts += (ts.empty() ? "" : ",") + std::to_string(dgr);
                throw InputError("splitting-type certificate violated at p = " + p.get_str() +
                                 ": observed type (" + ts + ")");
            }
        }
    }
}

CriterionOutcome embedding_criterion(const QuaternionAlgebra& algebra, const SubfieldEmbedding& emb,
                                     const Int& prime_bound, const std::vector<Poly>& relative_autos,
                                     const std::optional<SplittingTypeCertificate>& certificate,
                                     std::uint64_t seed) {
    CriterionOutcome out;
    out.verdicts = place_verdicts(algebra, emb, prime_bound, seed);

    for (const PlaceVerdict& v : out.verdicts.verdicts) {
        switch (v.status) {
            case VerdictStatus::Violation:
                out.violations.push_back(v);
                break;
            case VerdictStatus::Forced:
                out.forced.push_back(v.place);
                break;
            case VerdictStatus::Free:
                if (v.place.kind == BasePlaceRef::Kind::Finite)
                    out.free_finite.push_back(v.place);
                else
                    out.free_arch.push_back(v.place);
                break;
            case VerdictStatus::Forbidden:
                break;
        }
    }

    out.galois = is_relatively_galois(emb, relative_autos);
    if (out.galois.certified && out.galois.order % 2 == 0) {
        out.knowledge = FreePlaceKnowledge::CertifiedInfinite;
        out.certification = Certification::CertifiedGalois;
        out.detail = "K/K0 Galois of degree " + std::to_string(out.galois.order) +
                     " (even): infinitely many all-even places certified";
    } else if (out.galois.certified) {
        out.knowledge = FreePlaceKnowledge::CertifiedComplete;
        out.certification = Certification::CertifiedGalois;
        out.detail = "K/K0 Galois of degree " + std::to_string(out.galois.order) +
                     " (odd): every place has an odd-degree extension";
        if (!out.free_finite.empty() || !out.free_arch.empty())
            throw Error("internal: free place found under an odd-degree Galois certificate");
    } else if (certificate) {
        validate_certificate(emb, *certificate, seed);
        if (certificate->all_types_contain_odd()) {
            out.knowledge = FreePlaceKnowledge::CertifiedComplete;
            out.certification = Certification::CertifiedByTypeCertificate;
            out.detail = "splitting-type certificate: every allowed type contains an odd degree";
        } else {
            out.knowledge = FreePlaceKnowledge::SearchOnly;
            out.detail = "splitting-type certificate allows an all-even type; no absence certificate";
        }
    }
    if (out.knowledge == FreePlaceKnowledge::CertifiedComplete &&
        !out.verdicts.skipped_primes.empty()) {
        out.knowledge = FreePlaceKnowledge::SearchOnly;
        out.certification = Certification::Uncertified;
        out.detail += "; downgraded: index-divisible primes were skipped";
    }

    if (!out.violations.empty()) {
        out.status = CriterionOutcome::Status::NotExists;
    } else if (out.forced.size() % 2 == 0 || !out.free_finite.empty() || !out.free_arch.empty()) {
        out.status = CriterionOutcome::Status::Exists;
    } else if (out.knowledge == FreePlaceKnowledge::CertifiedInfinite) {
        out.status = CriterionOutcome::Status::Exists;  // parity fixed beyond the bound
    } else if (out.knowledge == FreePlaceKnowledge::CertifiedComplete) {
        out.status = CriterionOutcome::Status::NotExists;
        out.detail += "; odd forced set with certified absence of free places";
    } else {
        out.status = CriterionOutcome::Status::Inconclusive;
    }
    return out;
}

namespace {

struct RamSets {
    std::set<PlaceKey> finite;
    std::set<int> real;
};

RamSets split_refs(const std::vector<BasePlaceRef>& refs) {
    RamSets out;
    for (const BasePlaceRef& r : refs) {
        if (r.kind == BasePlaceRef::Kind::Finite)
            out.finite.insert({r.p, r.index});
        else if (r.kind == BasePlaceRef::Kind::RealInf)
            out.real.insert(r.index);
    }
    return out;
}

bool rep_less(const ClassRepresentative& x, const ClassRepresentative& y) {
    const size_t nx = x.algebra.ram_finite().size() + x.algebra.ram_real().size();
    const size_t ny = y.algebra.ram_finite().size() + y.algebra.ram_real().size();
    if (nx != ny) return nx < ny;
    if (x.algebra.ram_finite() != y.algebra.ram_finite())
        return x.algebra.ram_finite() < y.algebra.ram_finite();
    return x.algebra.ram_real() < y.algebra.ram_real();
}

// Quotient candidate algebras by the verified automorphism action; keeps the
// smallest member of each class, sorted.
std::vector<ClassRepresentative> quotient_classes(std::vector<QuaternionAlgebra> candidates,
                                                  const AutomorphismGroup& autos,
                                                  std::uint64_t seed) {
    std::vector<ClassRepresentative> reps;
    for (QuaternionAlgebra& cand : candidates) {
        bool merged = false;
        for (const ClassRepresentative& rep : reps) {
            if (same_class(rep.algebra, cand, autos, seed)) {
                merged = true;
                break;
            }
        }
        if (!merged) reps.push_back({std::move(cand), false});
    }
    std::sort(reps.begin(), reps.end(), rep_less);
    return reps;
}

void check_degree_formula(const QuaternionAlgebra& ambient, const SubfieldEmbedding& emb,
                          const QuaternionAlgebra& candidate) {
    const LatticeSignature ab = ambient.signature();
    const LatticeSignature cd = candidate.signature();
    const ArchMatch& arch = emb.match_infinite();
    std::vector<int> rs;
    for (int v : candidate.ram_real()) rs.push_back(arch.stats.at(v).real_ext);
    const Rat expected = degree_formula(ab.split_real, ab.complex_places, cd.split_real,
                                        cd.complex_places, rs);
    if (expected != rat_of(emb.relative_degree()))
        throw Error("internal: degree formula mismatch for an enumerated class");
}

}  // namespace

bool ClassificationResult::any_infinite() const {
    return std::any_of(groups.begin(), groups.end(), [](const SignatureGroup& g) {
        return g.status == SignatureGroup::Status::Infinite;
    });
}

ClassificationResult enumerate_classes(const QuaternionAlgebra& algebra,
                                       const SubfieldEmbedding& emb,
                                       const AutomorphismGroup& base_autos, const Int& prime_bound,
                                       const std::vector<Poly>& relative_autos,
                                       const std::optional<SplittingTypeCertificate>& certificate,
                                       std::uint64_t seed) {
    ClassificationResult result;
    result.criterion = embedding_criterion(algebra, emb, prime_bound, relative_autos, certificate, seed);
    result.certification = result.criterion.certification;
    if (result.criterion.status != CriterionOutcome::Status::Exists) return result;

    const RamSets forced = split_refs(result.criterion.forced);
    std::vector<BasePlaceRef> free_all = result.criterion.free_arch;
    free_all.insert(free_all.end(), result.criterion.free_finite.begin(),
                    result.criterion.free_finite.end());

    const int d = emb.base()->complex_place_count();
    const int r1 = emb.base()->real_place_count();
    const bool complete = result.criterion.knowledge == FreePlaceKnowledge::CertifiedComplete;
    const bool infinite = result.criterion.knowledge == FreePlaceKnowledge::CertifiedInfinite;

    // materialize Forced u S for subsets S of the found free places; under a
    // completeness certificate this is the whole solution set, otherwise the
    // searched part of it (subset size capped for the sampled statuses)
    const size_t n_free = free_all.size();
    if (complete && n_free > 20)
        throw Error("free place set too large for exhaustive enumeration");
    const int size_cap = complete ? static_cast<int>(n_free) : 2;

    std::map<std::pair<int, int>, std::vector<QuaternionAlgebra>> by_signature;
    std::vector<int> choice;
    auto emit = [&](const std::vector<int>& chosen) {
        if ((forced.finite.size() + forced.real.size() + chosen.size()) % 2 != 0) return;
        RamSets ram = forced;
        for (int idx : chosen) {
            const BasePlaceRef& r = free_all[idx];
            if (r.kind == BasePlaceRef::Kind::Finite)
                ram.finite.insert({r.p, r.index});
            else
                ram.real.insert(r.index);
        }
        const int c = r1 - static_cast<int>(ram.real.size());
        if (c == 0 && d == 0) return;  // totally definite: no lattice
        QuaternionAlgebra cand =
            QuaternionAlgebra::from_places(emb.base(), std::move(ram.finite), std::move(ram.real));
        if (!(base_change(cand, emb, seed) == algebra))
            throw Error("internal: enumerated candidate does not base-change to A");
        check_degree_formula(algebra, emb, cand);
        by_signature[{c, d}].push_back(std::move(cand));
    };
    // subsets in increasing size order
    for (int size = 0; size <= size_cap; ++size) {
        std::vector<int> idx(size);
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == size) {
                emit(idx);
                return;
            }
            for (int i = start; i < static_cast<int>(n_free); ++i) {
                idx[depth] = i;
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }

    // signatures reachable only through free places beyond the bound (parity
    // completion with one unseen finite free place)
    if (infinite) {
        std::vector<int> arch_free_indices;
        for (size_t i = 0; i < free_all.size(); ++i)
            if (free_all[i].kind != BasePlaceRef::Kind::Finite) arch_free_indices.push_back(static_cast<int>(i));
        for (size_t mask = 0; mask < (1u << arch_free_indices.size()); ++mask) {
            int extra_real = 0;
            for (size_t bit = 0; bit < arch_free_indices.size(); ++bit)
                if (mask & (1u << bit)) ++extra_real;
            const int c = r1 - static_cast<int>(forced.real.size()) - extra_real;
            if (c == 0 && d == 0) continue;
            by_signature.try_emplace({c, d});
        }
    }

    for (auto& [sig, candidates] : by_signature) {
        SignatureGroup group;
        group.c = sig.first;
        group.d = sig.second;
        group.representatives = quotient_classes(std::move(candidates), base_autos, seed);
        if (complete) {
            group.status = SignatureGroup::Status::Finite;
            group.exact_count = static_cast<long>(group.representatives.size());
        } else if (infinite) {
            group.status = SignatureGroup::Status::Infinite;
            group.exact_count = static_cast<long>(group.representatives.size());
            for (const BasePlaceRef& r : result.criterion.free_finite) {
                group.witness_free.push_back(r);
                if (group.witness_free.size() == 2) break;
            }
            group.note = "twist family: adjoin disjoint pairs of all-even places to Ram(B)";
            if (group.representatives.size() > 4)
                group.representatives.erase(group.representatives.begin() + 4,
                                            group.representatives.end());
        } else {
            group.status = SignatureGroup::Status::LowerBound;
            group.exact_count = static_cast<long>(group.representatives.size());
            group.search_bound = prime_bound;
            group.note = "free-place search exhausted the bound without a certificate";
        }
        result.groups.push_back(std::move(group));
    }
    std::sort(result.groups.begin(), result.groups.end(),
              [](const SignatureGroup& x, const SignatureGroup& y) {
                  return std::pair(x.c, x.d) < std::pair(y.c, y.d);
              });
    return result;
}

QuaternionAlgebra twist(const QuaternionAlgebra& algebra, const SubfieldEmbedding& emb,
                        const PlaceKey& p1, const PlaceKey& p2, std::uint64_t seed) {
    if (p1 == p2) throw NotFreeError("twist places must be distinct");
    for (const PlaceKey& key : {p1, p2}) {
        if (algebra.ram_finite().count(key))
            throw NotFreeError("place " + key.p.get_str() + "#" + std::to_string(key.index) +
                               " already ramifies in B");
        const FiniteMatch& match = emb.match_finite(key.p, seed);
        bool seen = false;
        for (size_t j = 0; j < match.base_of_top.size(); ++j) {
            if (match.base_of_top[j] != key.index) continue;
            seen = true;
            if (match.local_degree[j] % 2 == 1)
                throw NotFreeError("place " + key.p.get_str() + "#" + std::to_string(key.index) +
                                   " has an odd-degree extension");
        }
        if (!seen)
            throw NotFreeError("place index " + std::to_string(key.index) + " does not exist above " +
                               key.p.get_str());
    }
    std::set<PlaceKey> finite = algebra.ram_finite();
    finite.insert(p1);
    finite.insert(p2);
    QuaternionAlgebra twisted =
        QuaternionAlgebra::from_places(algebra.field(), std::move(finite), algebra.ram_real());
    if (!(base_change(twisted, emb, seed) == base_change(algebra, emb, seed)))
        throw Error("internal: twist changed the base change");
    return twisted;
}

std::vector<Int> find_even_places(const SubfieldEmbedding& emb, const Int& bound, int want,
                                  std::uint64_t seed) {
    std::vector<Int> out;
    for (const Int& p : primes_up_to(bound)) {
        if (static_cast<int>(out.size()) >= want) break;
        if (emb.base()->divides_disc(p) || emb.top()->divides_disc(p)) continue;
        const FiniteMatch& match = emb.match_finite(p, seed);
        const bool all_even = std::all_of(match.local_degree.begin(), match.local_degree.end(),
                                          [](int deg) { return deg % 2 == 0; });
        if (all_even) out.push_back(p);
    }
    return out;
}

bool Report::any_infinite() const {
    return std::any_of(subfields.begin(), subfields.end(), [](const SubfieldReport& s) {
        return s.result && s.result->any_infinite();
    });
}

bool Report::any_inconclusive() const {
    for (const SubfieldReport& s : subfields) {
        if (!s.error.empty()) return true;
        if (s.rejected) continue;
        if (!s.result) return true;
        if (s.result->inconclusive()) return true;
        for (const SignatureGroup& g : s.result->groups)
            if (g.status == SignatureGroup::Status::LowerBound) return true;
    }
    return false;
}

std::optional<long> Report::total_classes() const {
    if (any_infinite() || any_inconclusive()) return std::nullopt;
    long total = 0;
    for (const SubfieldReport& s : subfields) {
        if (s.rejected) continue;
        if (s.result)
            for (const SignatureGroup& g : s.result->groups) total += g.exact_count;
    }
    return total;
}

std::optional<long> Report::nontrivial_classes() const {
    auto total = total_classes();
    if (!total) return std::nullopt;
    long trivial = 0;
    for (const SubfieldReport& s : subfields)
        if (s.result)
            for (const SignatureGroup& g : s.result->groups)
                for (const ClassRepresentative& rep : g.representatives)
                    if (rep.trivial) ++trivial;
    return *total - trivial;
}

Report full_sublattice_report(const QuaternionAlgebra& algebra,
                              const std::vector<SubfieldInput>& subfields, const Int& prime_bound,
                              std::uint64_t seed) {
    Report report;
    report.ambient = algebra.signature();  // throws TotallyDefiniteError for definite input
    for (const SubfieldInput& input : subfields) {
        SubfieldReport sub;
        sub.label = input.label;
        sub.relative_degree = input.embedding->relative_degree();
        try {
            const bool both_totally_real = algebra.field()->complex_place_count() == 0 &&
                                           input.embedding->base()->complex_place_count() == 0;
            if (both_totally_real && report.ambient.split_real % sub.relative_degree != 0) {
                sub.rejected = true;
                sub.reject_reason = "degree screen: [K:K0] = " +
                                    std::to_string(sub.relative_degree) + " does not divide a = " +
                                    std::to_string(report.ambient.split_real);
            } else {
                ClassificationResult res =
                    enumerate_classes(algebra, *input.embedding, input.base_autos, prime_bound,
                                      input.relative_autos, input.certificate, seed);
                if (sub.relative_degree == 1)
                    for (SignatureGroup& g : res.groups)
                        for (ClassRepresentative& rep : g.representatives) rep.trivial = true;
                sub.result = std::move(res);
            }
        } catch (const Error& e) {
            sub.error = e.what();
        }
        report.subfields.push_back(std::move(sub));
    }
    return report;
}

}  // namespace quatlat
