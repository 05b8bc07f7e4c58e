#pragma once

#include <string>

#include "nlohmann/json.hpp"
#include "psingular/char_table.hpp"
#include "psingular/group.hpp"
#include "psingular/spectra.hpp"

namespace psing {

/// Everything the report surface needs for one (group, prime) pair.
struct Analysis {
    std::string group;
    int prime = 0;
    PSingularProfile profile;
    SpectrumReport spectrum;
    BlockPartition blocks;
    bool energy_verdict_ran = false;
    Verdict energy_verdict;
    bool nil_verdict_ran = false;
    Verdict nil_verdict;
    Verdict singularity_verdict;
};

/// The theorem verdicts run only when their hypotheses hold (p-solvable,
/// and the p-group / Frobenius quotient shape for the exact-energy one).
Analysis analyze(const std::string& name, const FiniteGroup& G, const CharacterTable& T, int p);

nlohmann::ordered_json verdict_to_json(const Verdict& v);

/// Stable key order: group, order, prime, d_p, c_p, r_p, order_p, eigs,
/// nullity, energy, bound_additive, bound_sqrt, diameter_per_component,
/// singular, hyperenergetic, blocks, principal_block, verdicts.
nlohmann::ordered_json analysis_to_json(const FiniteGroup& G, const Analysis& a);

/// Human-readable rendering of the same data.
std::string analysis_to_text(const FiniteGroup& G, const Analysis& a);

}  // namespace psing
