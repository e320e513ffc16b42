#include "quatlat/quat.hpp"

#include "quatlat/errors.hpp"

namespace quatlat {

QuaternionAlgebra QuaternionAlgebra::make(NumberField::Ptr field,
                                          const std::vector<FiniteRamSpec>& finite,
                                          const std::vector<int>& real_indices,
                                          std::uint64_t seed) {
    std::set<PlaceKey> ram_finite;
    for (const FiniteRamSpec& spec : finite) {
        const PrimeDecomposition& dec = field->decompose(spec.p, seed);
        if (spec.factor_index) {
            if (*spec.factor_index < 0 || *spec.factor_index >= static_cast<int>(dec.places.size()))
                throw InputError("factor_index " + std::to_string(*spec.factor_index) +
                                 " out of range above " + spec.p.get_str());
            ram_finite.insert({spec.p, *spec.factor_index});
        } else {
            for (int j = 0; j < static_cast<int>(dec.places.size()); ++j)
                ram_finite.insert({spec.p, j});
        }
    }
    std::set<int> ram_real;
    for (int idx : real_indices) {
        if (idx < 0 || idx >= field->real_place_count())
            throw ComplexPlaceListedError("archimedean index " + std::to_string(idx) +
                                          " is not a real place (field has " +
                                          std::to_string(field->real_place_count()) +
                                          " real places)");
        ram_real.insert(idx);
    }
    return from_places(std::move(field), std::move(ram_finite), std::move(ram_real));
}

QuaternionAlgebra QuaternionAlgebra::from_places(NumberField::Ptr field, std::set<PlaceKey> finite,
                                                 std::set<int> real_indices) {
    if ((finite.size() + real_indices.size()) % 2 != 0)
        throw OddRamificationError("ramification set has odd cardinality " +
                                   std::to_string(finite.size() + real_indices.size()));
    for (int idx : real_indices)
        if (idx < 0 || idx >= field->real_place_count())
            throw ComplexPlaceListedError("archimedean index " + std::to_string(idx) +
                                          " is not a real place");
    return QuaternionAlgebra(std::move(field), std::move(finite), std::move(real_indices));
}

bool QuaternionAlgebra::is_totally_definite() const {
    return field_->complex_place_count() == 0 &&
           static_cast<int>(ram_real_.size()) == field_->real_place_count();
}

LatticeSignature QuaternionAlgebra::signature() const {
    if (is_totally_definite())
        throw TotallyDefiniteError("totally definite algebra admits no lattice in SL2 products");
    return {field_->real_place_count() - static_cast<int>(ram_real_.size()),
            field_->complex_place_count()};
}

QuaternionAlgebra base_change(const QuaternionAlgebra& algebra, const SubfieldEmbedding& emb,
                              std::uint64_t seed) {
    if (emb.base() != algebra.field())
        throw InputError("base_change: embedding base differs from the algebra's field");
    std::set<PlaceKey> top_finite;
    for (const PlaceKey& v : algebra.ram_finite()) {
        const FiniteMatch& match = emb.match_finite(v.p, seed);
        for (size_t j = 0; j < match.base_of_top.size(); ++j)
            if (match.base_of_top[j] == v.index && match.local_degree[j] % 2 == 1)
                top_finite.insert({v.p, static_cast<int>(j)});
    }
    std::set<int> top_real;
    const ArchMatch& arch = emb.match_infinite();
    for (int v : algebra.ram_real())
        for (size_t j = 0; j < arch.base_of_top_real.size(); ++j)
            if (arch.base_of_top_real[j] == v) top_real.insert(static_cast<int>(j));
    if ((top_finite.size() + top_real.size()) % 2 != 0)
        throw Error("internal: base change produced odd ramification");
    return QuaternionAlgebra::from_places(emb.top(), std::move(top_finite), std::move(top_real));
}

bool same_class(const QuaternionAlgebra& b1, const QuaternionAlgebra& b2,
                const AutomorphismGroup& autos, std::uint64_t seed) {
    if (b1.field() != b2.field()) return false;
    if (b1.ram_finite().size() != b2.ram_finite().size() ||
        b1.ram_real().size() != b2.ram_real().size())
        return false;
    const NumberField& field = *b1.field();
    for (const Poly& sigma : autos.elements) {
        std::set<PlaceKey> mapped_finite;
        for (const PlaceKey& v : b1.ram_finite())
            mapped_finite.insert({v.p, act_on_finite_place(field, sigma, v.p, v.index, seed)});
        std::set<int> mapped_real;
        for (int idx : b1.ram_real()) mapped_real.insert(act_on_real_place(field, sigma, idx));
        if (mapped_finite == b2.ram_finite() && mapped_real == b2.ram_real()) return true;
    }
    return false;
}

}  // namespace quatlat
