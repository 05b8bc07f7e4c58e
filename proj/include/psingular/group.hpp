#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "psingular/permutation.hpp"

namespace psing {

struct ConjugacyClassInfo {
    int representative;        // element index, least in BFS order
    int size;
    int element_order;
    std::vector<int> members;  // ascending element indices
};

/// Subgroup given by its sorted member indices inside the parent group.
struct SubgroupHandle {
    std::vector<int> members;

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int element) const;
};

/// Finite group on indices 0..n-1 with full multiplication and inverse
/// tables. Index 0 is the identity; indices follow breadth-first discovery
/// from the identity with generators applied in the given order.
class FiniteGroup {
public:
    static constexpr int kDefaultOrderCap = 5000;

    /// Enumerates the closure of `generators`. Throws OrderCapExceeded when
    /// the closure grows past `order_cap`.
    static FiniteGroup enumerate_group(const std::vector<Permutation>& generators,
                                       int order_cap = kDefaultOrderCap);

    /// Builds from explicit tables; used by quotient and direct_product.
    FiniteGroup(std::vector<uint16_t> mul, std::vector<uint16_t> inv, int order);

    int order() const { return order_; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int element_order(int x) const;
    int power(int x, long long k) const;

    bool has_carrier() const { return !carrier_.empty(); }
    const Permutation& carrier(int index) const { return carrier_[index]; }
    const std::vector<int>& generator_indices() const { return generator_indices_; }

    const std::vector<ConjugacyClassInfo>& conjugacy_classes() const;
    /// Class index of every element; parallel to element indices.
    const std::vector<int>& class_of_element() const;

    int exponent() const;

private:
    FiniteGroup() = default;

    int order_ = 0;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> inv_;
    std::vector<Permutation> carrier_;
    std::vector<int> generator_indices_;

    mutable std::vector<ConjugacyClassInfo> classes_;
    mutable std::vector<int> class_of_;
    mutable std::vector<int> element_order_cache_;
};

SubgroupHandle trivial_subgroup();
SubgroupHandle whole_group(const FiniteGroup& G);

/// Closure of `seed` under multiplication (subgroup generated by seed).
SubgroupHandle subgroup_closure(const FiniteGroup& G, const std::vector<int>& seed);

/// Smallest normal subgroup containing `seed`.
SubgroupHandle normal_closure(const FiniteGroup& G, const std::vector<int>& seed);

bool is_normal(const FiniteGroup& G, const SubgroupHandle& H);

/// O_p'(G): largest normal subgroup of order coprime to p.
SubgroupHandle p_prime_core(const FiniteGroup& G, int p);

/// O_p(G): largest normal p-subgroup.
SubgroupHandle p_core(const FiniteGroup& G, int p);

/// F(G): product of O_q(G) over primes q dividing |G|.
SubgroupHandle fitting_subgroup(const FiniteGroup& G);

struct QuotientResult {
    FiniteGroup group;
    std::vector<int> projection;  // element index in G -> coset index in G/N
};

/// Group on cosets of the normal subgroup N, cosets ordered by least member.
QuotientResult quotient(const FiniteGroup& G, const SubgroupHandle& N);

/// Group on ordered pairs, (a, b) at index a*|H| + b.
FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H,
                           int order_cap = FiniteGroup::kDefaultOrderCap);

/// Upper p-series test: alternate preimages of O_p' and O_p of quotients
/// from the trivial subgroup; true iff the series reaches G.
bool is_p_solvable(const FiniteGroup& G, int p);

/// True iff G has a proper nontrivial normal p-subgroup K with C_G(k) <= K
/// for every non-identity k in K.
bool is_frobenius_with_p_kernel(const FiniteGroup& G, int p);

/// Named generator sets; see README for the published list.
std::vector<Permutation> catalog(const std::string& name);
std::vector<std::string> catalog_names();

std::vector<int> prime_divisors(long long n);
bool is_prime(long long n);
/// Largest power of p dividing n.
long long p_part(long long n, int p);

}  // namespace psing
