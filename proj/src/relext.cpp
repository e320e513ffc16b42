#include "quatlat/relext.hpp"

#include <algorithm>

#include "quatlat/errors.hpp"

namespace quatlat {

SubfieldEmbedding::Ptr SubfieldEmbedding::verify(NumberField::Ptr base, NumberField::Ptr top,
                                                 const Poly& image) {
    if (top->degree() % base->degree() != 0)
        throw DegreeMismatchError("degree " + std::to_string(base->degree()) +
                                  " does not divide degree " + std::to_string(top->degree()));
    const Poly reduced = image % top->defining_poly();
    const Poly composed = base->defining_poly().compose_mod(reduced, top->defining_poly());
    if (!composed.is_zero())
        throw NotAnEmbeddingError("f_base(image) != 0 mod f_top for image " + reduced.to_string());
    auto emb = std::shared_ptr<SubfieldEmbedding>(new SubfieldEmbedding());
    emb->base_ = std::move(base);
    emb->top_ = std::move(top);
    emb->image_ = reduced;
    emb->relative_degree_ = emb->top_->degree() / emb->base_->degree();
    return emb;
}

SubfieldEmbedding::Ptr SubfieldEmbedding::identity(NumberField::Ptr field) {
    auto copy = field;
    return verify(std::move(field), std::move(copy), Poly::variable());
}

const FiniteMatch& SubfieldEmbedding::match_finite(const Int& p, std::uint64_t seed) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (auto it = finite_cache_.find(p); it != finite_cache_.end()) return it->second;
    }
    const PrimeDecomposition& base_dec = base_->decompose(p, seed);
    const PrimeDecomposition& top_dec = top_->decompose(p, seed);

    FiniteMatch match;
    match.p = p;
    const FpPoly image_p = FpPoly::from_poly(image_, p);
    for (const FinitePlaceData& w : top_dec.places) {
        const FpQuotientElem theta0(w.factor, image_p % w.factor);
        int found = -1;
        for (size_t i = 0; i < base_dec.places.size(); ++i) {
            if (evaluate_in_quotient(base_dec.places[i].factor, theta0).is_zero()) {
                if (found >= 0)
                    throw MatchAmbiguousError("two base places above " + p.get_str() +
                                              " annihilate the embedded generator");
                found = static_cast<int>(i);
            }
        }
        if (found < 0)
            throw Error("internal: no base place above " + p.get_str() + " matches a top place");
        const FinitePlaceData& v = base_dec.places[found];
        if (w.e % v.e != 0 || w.fdeg % v.fdeg != 0)
            throw Error("non-integral ramification/residue ratio above " + p.get_str() +
                        "; index divisibility missed upstream");
        match.base_of_top.push_back(found);
        match.local_degree.push_back((w.e / v.e) * (w.fdeg / v.fdeg));
    }
    // fiber sums must reproduce the relative degree over every base place
    for (size_t i = 0; i < base_dec.places.size(); ++i) {
        int total = 0;
        for (size_t j = 0; j < match.base_of_top.size(); ++j)
            if (match.base_of_top[j] == static_cast<int>(i)) total += match.local_degree[j];
        if (total != relative_degree_)
            throw Error("internal: fiber degree sum over place " + std::to_string(i) + " above " +
                        p.get_str() + " is " + std::to_string(total));
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return finite_cache_.emplace(p, std::move(match)).first->second;
}

const ArchMatch& SubfieldEmbedding::match_infinite() const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (arch_cache_) return *arch_cache_;
    }
    ArchMatch match;
    const auto& top_roots = top_->real_roots();
    const auto& base_roots = base_->real_roots();
    if (!top_roots.empty() && base_roots.empty())
        throw Error("internal: real place upstairs over a totally imaginary base");
    for (size_t j = 0; j < top_roots.size(); ++j) {
        int base_index = 0;
        if (base_roots.size() > 1)
            base_index = match_image_to_root(image_, top_->defining_poly(), top_roots[j], base_roots);
        match.base_of_top_real.push_back(base_index);
    }
    for (size_t i = 0; i < base_roots.size(); ++i) {
        const int r = static_cast<int>(
            std::count(match.base_of_top_real.begin(), match.base_of_top_real.end(), static_cast<int>(i)));
        if ((relative_degree_ - r) % 2 != 0)
            throw Error("internal: r_K(v) parity violation over real place " + std::to_string(i));
        match.stats.push_back({static_cast<int>(i), r, (relative_degree_ - r) / 2});
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (!arch_cache_) arch_cache_ = std::make_unique<ArchMatch>(std::move(match));
    return *arch_cache_;
}

namespace {

Poly reduce_candidate(const Poly& h, const NumberField& field) { return h % field.defining_poly(); }

bool is_automorphism_image(const Poly& h, const NumberField& field) {
    return field.defining_poly().compose_mod(h, field.defining_poly()).is_zero();
}

}  // namespace

AutomorphismGroup verify_automorphisms(const NumberField::Ptr& field, const std::vector<Poly>& images) {
    AutomorphismGroup group;
    group.field = field;
    const Poly identity = Poly::variable() % field->defining_poly();

    std::vector<Poly> accepted{identity};
    for (const Poly& h : images) {
        const Poly reduced = reduce_candidate(h, *field);
        if (!is_automorphism_image(reduced, *field))
            throw NotAutomorphismError("image " + reduced.to_string() +
                                       " does not satisfy f(h) = 0 mod f");
        if (std::find(accepted.begin(), accepted.end(), reduced) == accepted.end())
            accepted.push_back(reduced);
    }

    // close under composition; |Aut| is bounded by the degree
    group.elements = accepted;
    const int cap = field->degree();
    for (size_t i = 0; i < group.elements.size(); ++i) {
        for (size_t j = 0; j < group.elements.size(); ++j) {
            const Poly comp =
                group.elements[i].compose_mod(group.elements[j], field->defining_poly());
            if (std::find(group.elements.begin(), group.elements.end(), comp) == group.elements.end()) {
                group.elements.push_back(comp);
                if (static_cast<int>(group.elements.size()) > cap)
                    throw Error("internal: automorphism closure exceeds the field degree");
            }
        }
    }
    group.input_was_closed = group.elements.size() == accepted.size();

    group.table.assign(group.elements.size(), std::vector<int>(group.elements.size(), -1));
    for (size_t i = 0; i < group.elements.size(); ++i) {
        for (size_t j = 0; j < group.elements.size(); ++j) {
            const Poly comp =
                group.elements[i].compose_mod(group.elements[j], field->defining_poly());
            const auto it = std::find(group.elements.begin(), group.elements.end(), comp);
            group.table[i][j] = static_cast<int>(it - group.elements.begin());
        }
    }
    return group;
}

AutomorphismGroup trivial_automorphisms(const NumberField::Ptr& field) {
    return verify_automorphisms(field, {});
}

std::vector<Poly> verify_relative_automorphisms(const SubfieldEmbedding& emb,
                                                const std::vector<Poly>& images) {
    const NumberField& top = *emb.top();
    const Poly identity = Poly::variable() % top.defining_poly();
    std::vector<Poly> fixing{identity};
    for (const Poly& h : images) {
        const Poly reduced = reduce_candidate(h, top);
        if (!is_automorphism_image(reduced, top))
            throw NotAutomorphismError("image " + reduced.to_string() +
                                       " does not satisfy f(h) = 0 mod f");
        if (!(emb.image().compose_mod(reduced, top.defining_poly()) == emb.image()))
            continue;  // valid automorphism, but moves the base field
        if (std::find(fixing.begin(), fixing.end(), reduced) == fixing.end())
            fixing.push_back(reduced);
    }
    // compositions of fixing automorphisms fix; close so a single generator
    // certifies the whole relative group
    for (size_t i = 0; i < fixing.size(); ++i) {
        for (size_t j = 0; j < fixing.size(); ++j) {
            const Poly comp = fixing[i].compose_mod(fixing[j], top.defining_poly());
            if (std::find(fixing.begin(), fixing.end(), comp) == fixing.end()) {
                fixing.push_back(comp);
                if (static_cast<int>(fixing.size()) > top.degree())
                    throw Error("internal: relative automorphism closure exceeds the degree");
            }
        }
    }
    return fixing;
}

GaloisCertificate is_relatively_galois(const SubfieldEmbedding& emb, const std::vector<Poly>& images) {
    const auto fixing = verify_relative_automorphisms(emb, images);
    GaloisCertificate cert;
    cert.order = static_cast<int>(fixing.size());
    cert.certified = cert.order == emb.relative_degree();
    if (!cert.certified) cert.order = 0;
    return cert;
}

int act_on_real_place(const NumberField& field, const Poly& sigma, int real_index) {
    const auto& roots = field.real_roots();
    if (roots.size() == 1) return 0;
    return match_image_to_root(sigma % field.defining_poly(), field.defining_poly(),
                               roots.at(real_index), roots);
}

int act_on_finite_place(const NumberField& field, const Poly& sigma, const Int& p, int place_index,
                        std::uint64_t seed) {
    const PrimeDecomposition& dec = field.decompose(p, seed);
    const FpPoly sigma_p = FpPoly::from_poly(sigma % field.defining_poly(), p);
    const FpPoly& hj = dec.places.at(place_index).factor;
    int found = -1;
    for (size_t k = 0; k < dec.places.size(); ++k) {
        const FpQuotientElem image(dec.places[k].factor, sigma_p % dec.places[k].factor);
        if (evaluate_in_quotient(hj, image).is_zero()) {
            if (found >= 0)
                throw MatchAmbiguousError("automorphism image of a place above " + p.get_str() +
                                          " is ambiguous");
            found = static_cast<int>(k);
        }
    }
    if (found < 0) throw Error("internal: automorphism does not permute the places above " + p.get_str());
    return found;
}

}  // namespace quatlat
