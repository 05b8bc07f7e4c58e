#pragma once

#include <string>
#include <utility>
#include <vector>

#include "psingular/char_table.hpp"
#include "psingular/group.hpp"

namespace psing {

/// Census of the p-singular elements (order divisible by p) of a group.
struct PSingularProfile {
    int prime = 0;
    std::vector<int> class_indices;  // classes inside Omega_p, ascending
    std::vector<char> in_omega;      // per-element membership
    long long degree = 0;            // d_p = |Omega_p|, the graph valency
    SubgroupHandle span;             // H_p = <Omega_p>, normal
    long long component_count = 0;   // c_p = [G : H_p]
    SubgroupHandle core;             // O_p'(G)
    long long core_index = 0;        // r_p = [G : O_p']
};

PSingularProfile p_singular_profile(const FiniteGroup& G, int p);

/// Spectrum of the Cayley graph on Omega_p derived from character sums:
/// each row chi contributes the eigenvalue (sum over Omega_p classes of
/// |K| chi(x_K)) / chi(1) with multiplicity chi(1)^2.
struct SpectrumReport {
    std::vector<std::pair<long long, long long>> eigs;  // (value, multiplicity), descending
    long long nullity = 0;
    long long energy = 0;
    long long bound_additive = 0;
    double bound_sqrt = 0.0;
    int diameter = 0;  // of one connected component; components are isomorphic
    bool hyperenergetic = false;
    bool singular = false;
};

SpectrumReport spectrum(const FiniteGroup& G, const CharacterTable& T,
                        const PSingularProfile& prof);

/// Exact eigenvalue contributed by one character row.
long long row_eigenvalue(const CharacterTable& T, const PSingularProfile& prof, int row);

/// Exact test: sum over Omega_p of chi != 0.
bool principal_block_membership(const CharacterTable& T, const PSingularProfile& prof, int row);

/// p-blocks as connected components of the relation chi ~ psi iff
/// sum over p-regular classes of |K| chi(x_K) psi(x_K^{-1}) != 0.
struct BlockPartition {
    std::vector<std::vector<int>> blocks;  // row indices, each ascending; ordered by least row
    int principal_index = 0;
};

BlockPartition block_partition(const CharacterTable& T, int p);

long long nullity_via_blocks(const CharacterTable& T, const BlockPartition& blocks);

/// One checked clause of a theorem: `applicable` is the hypothesis,
/// `ok` the verified conclusion (vacuously true when not applicable).
struct Clause {
    std::string label;
    bool applicable = true;
    bool ok = true;
};

struct Verdict {
    std::string name;
    std::vector<Clause> clauses;
    bool passed() const;
};

Verdict verify_theorem_energy(const FiniteGroup& G, const CharacterTable& T, int p);
Verdict verify_theorem_nil(const FiniteGroup& G, const CharacterTable& T, int p);
Verdict verify_singularity_predicates(const FiniteGroup& G, const CharacterTable& T, int p);
Verdict verify_corollary_solvable(const FiniteGroup& G);
Verdict verify_corollary_large(const FiniteGroup& G);

/// True when the quotient G/O_p' is a p-group or a Frobenius group with
/// p-kernel (the hypothesis of the exact-energy theorem).
bool nil_hypothesis(const FiniteGroup& G, int p);

}  // namespace psing
