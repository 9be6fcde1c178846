#include "dp1/real_forms.hpp"

#include <map>
#include <mutex>

#include "dp1/errors.hpp"
#include "dp1/root_system.hpp"

namespace dp1 {

namespace {

PicClass cls(Int h, std::initializer_list<int> minus) {
    PicClass p;
    p[0] = h;
    for (int i : minus) p[static_cast<std::size_t>(i)] -= 1;
    return p;
}

PicClass diff(int i, int j) { return PicClass::exceptional(i) - PicClass::exceptional(j); }

std::vector<DeformationClass> build_classes() {
    using C = ClassId;
    auto code = PinModelKind::Code;
    auto vb = PinModelKind::VanishingBasis;
    return {
        {C::MConnected, "M-connected", "RP2#4T2", "M", "E8", 8, -7, C::MSplit, code},
        {C::M1Connected, "M-1-connected", "RP2#3T2", "M-1", "E7", 7, -5, C::M1Split, code},
        {C::M2Connected, "M-2-connected", "RP2#2T2", "M-2", "D6", 6, -3, C::M2Split, vb},
        {C::M3Connected, "M-3-connected", "RP2#T2", "M-3", "D4+A1", 5, -1, C::M3Split, vb},
        {C::M4, "M-4", "RP2", "M-4", "4A1", 4, 1, C::M4, vb},
        {C::M2IKlein, "M-2-I-a", "RP2+K", "(M-2)_I", "D4", 4, 1, C::M2IKlein, vb},
        {C::M2ISphere, "M-2-I-b", "(RP2#T2)+S2", "(M-2)_I", "D4", 4, 1, C::M2ISphere, vb},
        {C::MSplit, "M-split", "RP2+4S2", "M", "0", 0, 9, C::MConnected, vb},
        {C::M1Split, "M-1-split", "RP2+3S2", "M-1", "A1", 1, 7, C::M1Connected, vb},
        {C::M2Split, "M-2-split", "RP2+2S2", "M-2", "2A1", 2, 5, C::M2Connected, vb},
        {C::M3Split, "M-3-split", "RP2+S2", "M-3", "3A1", 3, 3, C::M3Connected, vb},
    };
}

}  // namespace

const std::vector<DeformationClass>& deformation_classes() {
    static const std::vector<DeformationClass> classes = build_classes();
    return classes;
}

const DeformationClass& deformation_class(ClassId id) {
    return deformation_classes()[static_cast<std::size_t>(id)];
}

const std::string& class_name(ClassId id) { return deformation_class(id).name; }

std::optional<ClassId> find_class(std::string_view key) {
    std::map<std::string, int> type_uses;
    for (const auto& c : deformation_classes()) ++type_uses[c.lambda_type];
    for (const auto& c : deformation_classes()) {
        if (c.name == key) return c.id;
        if (c.lambda_type == key && type_uses[c.lambda_type] == 1) return c.id;
    }
    return std::nullopt;
}

const DeformationClass& bertini_dual(const DeformationClass& c) { return deformation_class(c.dual); }

std::vector<std::pair<ClassId, ClassId>> bertini_pairs() {
    std::vector<std::pair<ClassId, ClassId>> out;
    for (const auto& c : deformation_classes())
        if (c.rank >= bertini_dual(c).rank && (c.rank != bertini_dual(c).rank || c.id <= c.dual))
            out.emplace_back(c.id, c.dual);
    return out;
}

Sublattice orthogonal_complement(const Sublattice& lattice) {
    const auto s = k_perp_basis();
    IntMatrix m(lattice.rank(), std::vector<Int>(s.size()));
    for (std::size_t i = 0; i < lattice.rank(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) m[i][j] = intersect(lattice.basis()[i], s[j]);
    std::vector<PicClass> basis;
    for (const auto& y : integer_kernel(m, s.size())) {
        PicClass v;
        for (std::size_t j = 0; j < s.size(); ++j) v += y[j] * s[j];
        basis.push_back(v);
    }
    return lll_reduce(Sublattice(std::move(basis)));
}

Sublattice saturation(const Sublattice& lattice) { return orthogonal_complement(orthogonal_complement(lattice)); }

Int expected_root_count(const std::string& lambda_type) {
    static const std::map<std::string, Int> counts = {
        {"E8", 240}, {"E7", 126}, {"D6", 60}, {"D4+A1", 26}, {"4A1", 8},
        {"D4", 24},  {"3A1", 6},  {"2A1", 4}, {"A1", 2},     {"0", 0},
    };
    auto it = counts.find(lambda_type);
    if (it == counts.end()) throw std::invalid_argument("unknown lattice type " + lambda_type);
    return it->second;
}

std::vector<PicClass> stored_lambda_basis(ClassId id) {
    switch (id) {
        case ClassId::MConnected: return k_perp_basis();
        case ClassId::M1Connected:
            return {diff(5, 6), diff(4, 5), diff(3, 4), diff(2, 3), diff(1, 2), cls(1, {1, 2, 3}), cls(1, {1, 7, 8})};
        case ClassId::M2Connected:
            return {diff(3, 4), diff(2, 3), diff(1, 2), cls(1, {1, 2, 3}), cls(1, {1, 5, 6}), cls(1, {1, 7, 8})};
        case ClassId::M3Connected:
            return {diff(1, 2), cls(1, {1, 3, 4}), cls(1, {1, 5, 6}), cls(1, {1, 7, 8}), cls(2, {3, 4, 5, 6, 7, 8})};
        case ClassId::M4:
            return {cls(2, {1, 2, 3, 4, 5, 6}), cls(2, {1, 2, 3, 4, 7, 8}), cls(2, {1, 2, 5, 6, 7, 8}),
                    cls(2, {3, 4, 5, 6, 7, 8})};
        case ClassId::M2IKlein: return {cls(1, {1, 2, 3}), diff(2, 3), diff(3, 4), diff(4, 5)};
        case ClassId::M2ISphere: return {diff(7, 8), diff(6, 7), cls(1, {1, 6, 7}), cls(2, {2, 3, 4, 5, 6, 7})};
        case ClassId::MSplit: return {};
        case ClassId::M1Split: return {diff(7, 8)};
        case ClassId::M2Split: return {diff(7, 8), diff(5, 6)};
        case ClassId::M3Split: return {diff(7, 8), diff(5, 6), diff(3, 4)};
    }
    return {};
}

std::vector<EmbeddingCheck> check_embedding(ClassId id, const Sublattice& lattice) {
    const auto& c = deformation_class(id);
    std::vector<EmbeddingCheck> out;

    const auto basis_type = classify_simple_system(lattice.gram());
    out.push_back({"simple-system-type", basis_type.label() == c.lambda_type,
                   "basis Gram is " + basis_type.label() + ", expected " + c.lambda_type});

    const auto roots = lattice.rank() ? enumerate_vectors(lattice, -2) : std::vector<PicClass>{};
    const Int want = expected_root_count(c.lambda_type);
    out.push_back({"root-count", static_cast<Int>(roots.size()) == want,
                   std::to_string(roots.size()) + " roots, expected " + std::to_string(want)});

    const auto comp = root_system_type(orthogonal_complement(lattice));
    const auto& dual_type = bertini_dual(c).lambda_type;
    out.push_back({"complement-type", comp.label() == dual_type,
                   "complement is " + comp.label() + ", expected " + dual_type});

    // Lambda is primitive in K-perp; equal discriminants mean the root
    // lattice is already saturated.
    const auto sat = saturation(lattice);
    const bool same = sat.rank() == lattice.rank() && sat.discriminant() == lattice.discriminant();
    out.push_back({"root-generated", same,
                   "saturation discriminant " + std::to_string(sat.discriminant()) + ", lattice discriminant " +
                       std::to_string(lattice.discriminant())});
    return out;
}

LambdaEmbedding make_embedding(ClassId id, const Sublattice& lattice) {
    for (const auto& check : check_embedding(id, lattice))
        if (!check.pass)
            throw InvariantViolation("embedding for " + class_name(id) + " fails " + check.name + ": " + check.detail);
    return {id, lattice};
}

const LambdaEmbedding& lambda_basis(ClassId id) {
    static std::once_flag once;
    static std::vector<LambdaEmbedding> cache;
    std::call_once(once, [] {
        for (const auto& c : deformation_classes())
            cache.push_back(make_embedding(c.id, Sublattice(stored_lambda_basis(c.id))));
    });
    return cache[static_cast<std::size_t>(id)];
}

}  // namespace dp1
