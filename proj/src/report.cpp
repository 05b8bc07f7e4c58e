#include "psingular/report.hpp"

#include <sstream>

namespace psing {

Analysis analyze(const std::string& name, const FiniteGroup& G, const CharacterTable& T, int p) {
    Analysis a;
    a.group = name;
    a.prime = p;
    a.profile = p_singular_profile(G, p);
    a.spectrum = spectrum(G, T, a.profile);
    a.blocks = block_partition(T, p);
    if (is_p_solvable(G, p)) {
        a.energy_verdict = verify_theorem_energy(G, T, p);
        a.energy_verdict_ran = true;
        if (nil_hypothesis(G, p)) {
            a.nil_verdict = verify_theorem_nil(G, T, p);
            a.nil_verdict_ran = true;
        }
    }
    a.singularity_verdict = verify_singularity_predicates(G, T, p);
    return a;
}

nlohmann::ordered_json verdict_to_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["applicable"] = true;
    j["passed"] = v.passed();
    nlohmann::ordered_json clauses = nlohmann::ordered_json::array();
    for (const auto& c : v.clauses) {
        nlohmann::ordered_json cj;
        cj["label"] = c.label;
        cj["applicable"] = c.applicable;
        cj["ok"] = c.ok;
        clauses.push_back(cj);
    }
    j["clauses"] = clauses;
    return j;
}

namespace {

nlohmann::ordered_json skipped_verdict() {
    nlohmann::ordered_json j;
    j["applicable"] = false;
    j["passed"] = true;
    j["clauses"] = nlohmann::ordered_json::array();
    return j;
}

}  // namespace

nlohmann::ordered_json analysis_to_json(const FiniteGroup& G, const Analysis& a) {
    nlohmann::ordered_json j;
    j["group"] = a.group;
    j["order"] = G.order();
    j["prime"] = a.prime;
    j["d_p"] = a.profile.degree;
    j["c_p"] = a.profile.component_count;
    j["r_p"] = a.profile.core_index;
    j["order_p"] = p_part(G.order(), a.prime);
    nlohmann::ordered_json eigs = nlohmann::ordered_json::array();
    for (auto [value, mult] : a.spectrum.eigs)
        eigs.push_back(nlohmann::ordered_json::array({value, mult}));
    j["eigs"] = eigs;
    j["nullity"] = a.spectrum.nullity;
    j["energy"] = a.spectrum.energy;
    j["bound_additive"] = a.spectrum.bound_additive;
    j["bound_sqrt"] = a.spectrum.bound_sqrt;
    j["diameter_per_component"] = a.spectrum.diameter;
    j["singular"] = a.spectrum.singular;
    j["hyperenergetic"] = a.spectrum.hyperenergetic;
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const auto& block : a.blocks.blocks) blocks.push_back(block);
    j["blocks"] = blocks;
    j["principal_block"] = a.blocks.principal_index;
    nlohmann::ordered_json verdicts;
    verdicts["theorem_energy"] =
        a.energy_verdict_ran ? verdict_to_json(a.energy_verdict) : skipped_verdict();
    verdicts["theorem_nil"] = a.nil_verdict_ran ? verdict_to_json(a.nil_verdict) : skipped_verdict();
    verdicts["singularity_predicates"] = verdict_to_json(a.singularity_verdict);
    j["verdicts"] = verdicts;
    return j;
}

std::string analysis_to_text(const FiniteGroup& G, const Analysis& a) {
    std::ostringstream out;
    out << a.group << "  |G| = " << G.order() << "  p = " << a.prime << "\n";
    out << "  d_p = " << a.profile.degree << "  c_p = " << a.profile.component_count
        << "  r_p = " << a.profile.core_index << "  |G|_p = " << p_part(G.order(), a.prime)
        << "\n";
    out << "  spectrum:";
    for (auto [value, mult] : a.spectrum.eigs) out << " " << value << "^" << mult;
    out << "\n";
    out << "  nullity = " << a.spectrum.nullity << "  energy = " << a.spectrum.energy
        << "  diameter/component = " << a.spectrum.diameter << "\n";
    out << "  singular = " << (a.spectrum.singular ? "true" : "false")
        << "  hyperenergetic = " << (a.spectrum.hyperenergetic ? "true" : "false") << "\n";
    out << "  blocks:";
    for (size_t b = 0; b < a.blocks.blocks.size(); ++b) {
        out << " {";
        for (size_t i = 0; i < a.blocks.blocks[b].size(); ++i)
            out << (i ? " " : "") << a.blocks.blocks[b][i];
        out << "}";
        if (static_cast<int>(b) == a.blocks.principal_index) out << "*";
    }
    out << "\n";
    auto render = [&out](const char* name, const Verdict& v, bool ran) {
        out << "  " << name << ": ";
        if (!ran) {
            out << "skipped\n";
            return;
        }
        out << (v.passed() ? "pass" : "FAIL");
        for (const auto& c : v.clauses)
            if (c.applicable && !c.ok) out << " [" << c.label << "]";
        out << "\n";
    };
    render("theorem_energy", a.energy_verdict, a.energy_verdict_ran);
    render("theorem_nil", a.nil_verdict, a.nil_verdict_ran);
    render("singularity_predicates", a.singularity_verdict, true);
    return out.str();
}

}  // namespace psing
