#pragma once

#include <vector>

#include "json.hpp"
#include "psingular/cyclotomic.hpp"
#include "psingular/group.hpp"

namespace psing {

/// Class multiplication constants a[i][j][k] = #{(x,y) in K_i x K_j : xy = z}
/// for a fixed z in K_k.
struct ClassAlgebra {
    int num_classes = 0;
    std::vector<long long> constants;  // flattened [i][j][k]

    long long at(int i, int j, int k) const {
        return constants[(static_cast<size_t>(i) * num_classes + j) * num_classes + k];
    }
};

ClassAlgebra class_constants(const FiniteGroup& G);

/// Exact ordinary character table. Rows are irreducible characters (row 0 is
/// the principal character, the rest sorted by degree then value vector);
/// columns follow the conjugacy class order of the group.
struct CharacterTable {
    int exponent = 1;
    long long group_order = 1;
    std::vector<int> class_orders;
    std::vector<int> class_sizes;
    std::vector<int> inverse_class;  // column j of the inverse elements
    std::vector<int> degrees;
    std::vector<std::vector<CyclotomicInt>> values;

    int num_classes() const { return static_cast<int>(class_sizes.size()); }
    int num_rows() const { return static_cast<int>(values.size()); }
};

/// Burnside-Dixon: split the class-sum matrices over a prime field with
/// l = 1 (mod exponent), l > 2|G|, then lift to exact cyclotomic values via
/// the power-map discrete Fourier inversion. Certified on construction by
/// exact row orthogonality and the degree-square sum.
CharacterTable character_table(const FiniteGroup& G);

/// Rows whose kernel contains N, i.e. chi(n) = chi(1) for all n in N; these
/// are the characters inflated from G/N.
std::vector<int> restrict_to_quotient(const FiniteGroup& G, const CharacterTable& T,
                                      const SubgroupHandle& N);

nlohmann::ordered_json table_to_json(const CharacterTable& T);
CharacterTable table_from_json(const nlohmann::json& j);

}  // namespace psing
