// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "psingular/char_table.hpp"
#include "psingular/corpus.hpp"
#include "psingular/errors.hpp"
#include "psingular/group.hpp"
#include "psingular/oracle.hpp"
#include "psingular/partitions.hpp"
#include "psingular/report.hpp"
#include "psingular/spectra.hpp"

using namespace psing;

namespace {

constexpr double kZeroTol = 1e-6;             // oracle eigenvalue ~ 0
constexpr double kAnchorBudgetSeconds = 1.0;  // criterion 1
constexpr double kCorpusBudgetSeconds = 300.0;
constexpr long long kSolvableOrderCap = 500;
constexpr long long kOracleOrderCap = 300;

struct PairScan {
    int prime = 0;
    bool solvable = false;
    bool spectrum_ok = false;
    long long d_p = 0, c_p = 0, r_p = 0, order_p = 0, span_order = 0, core_order = 0;
    std::vector<std::pair<long long, long long>> eigs;
    std::vector<std::vector<int>> blocks;
    int principal_block = 0;
    long long nullity = 0, energy = 0;
    int diameter = 0;
    bool singular = false, hyperenergetic = false;
    bool membership_ok = false;
    bool principal_lift_ok = false;
    bool nil_hyp = false;
    bool predicates_ok = false;
    bool oracle_ran = false;
    bool oracle_spectrum_ok = false;
    bool oracle_components_ok = false;
    long long oracle_zero_count = -1;
};

struct GroupScan {
    std::string name;
    long long order = 0;
    bool solvable = false;
    bool nilpotent = false;
    bool table_ok = false;
    std::vector<int> degrees;
    bool cor_solvable_ok = false;
    bool cor_large_ran = false;
    bool cor_large_ok = false;
    std::vector<PairScan> pairs;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

PairScan scan_pair(const FiniteGroup& G, const CharacterTable& T, int p) {
    PairScan s;
    s.prime = p;
    s.solvable = is_p_solvable(G, p);
    Analysis a = analyze("", G, T, p);
    s.spectrum_ok = true;
    s.d_p = a.profile.degree;
    s.c_p = a.profile.component_count;
    s.r_p = a.profile.core_index;
    s.order_p = p_part(G.order(), p);
    s.span_order = a.profile.span.order();
    s.core_order = a.profile.core.order();
    s.eigs = a.spectrum.eigs;
    s.blocks = a.blocks.blocks;
    s.principal_block = a.blocks.principal_index;
    s.nullity = a.spectrum.nullity;
    s.energy = a.spectrum.energy;
    s.diameter = a.spectrum.diameter;
    s.singular = a.spectrum.singular;
    s.hyperenergetic = a.spectrum.hyperenergetic;

    s.membership_ok = true;
    const std::vector<int>& principal = a.blocks.blocks[a.blocks.principal_index];
    for (int r = 0; r < T.num_rows(); ++r) {
        bool in_principal = std::find(principal.begin(), principal.end(), r) != principal.end();
        if (principal_block_membership(T, a.profile, r) != in_principal) s.membership_ok = false;
    }
    s.principal_lift_ok =
        !s.solvable || principal == restrict_to_quotient(G, T, a.profile.core);
    s.nil_hyp = s.solvable && nil_hypothesis(G, p);
    s.predicates_ok = a.singularity_verdict.passed();

    if (G.order() <= kOracleOrderCap) {
        s.oracle_ran = true;
        AdjacencyMatrix A = build_adjacency(G, a.profile);
        std::vector<double> numeric = symmetric_eigenvalues(A);
        s.oracle_spectrum_ok = compare_spectra(a.spectrum.eigs, numeric);
        s.oracle_zero_count = 0;
        for (double v : numeric)
            if (v > -kZeroTol && v < kZeroTol) ++s.oracle_zero_count;
        ComponentsResult comps = components_and_diameter(A);
        s.oracle_components_ok = comps.count == s.c_p;
        for (int d : comps.diameters)
            if (d != s.diameter) s.oracle_components_ok = false;
    }
    return s;
}

GroupScan scan_group(const CorpusEntry& entry) {
    GroupScan g;
    g.name = entry.name;
    FiniteGroup G = FiniteGroup::enumerate_group(catalog(entry.name));
    g.order = G.order();
    g.solvable = true;
    for (int p : prime_divisors(G.order()))
        if (!is_p_solvable(G, p)) g.solvable = false;
    g.nilpotent = fitting_subgroup(G).order() == G.order();

    CharacterTable T = character_table(G);
    g.degrees = T.degrees;
    g.table_ok = true;
    for (const Clause& c : table_certificate(G, T))
        if (!c.ok) g.table_ok = false;

    g.cor_solvable_ok = !g.solvable || verify_corollary_solvable(G).passed();
    if (6 * G.order() <= 360) {
        g.cor_large_ran = true;
        g.cor_large_ok = verify_corollary_large(G).passed();
    }
    for (int p : prime_divisors(G.order())) {
        try {
            g.pairs.push_back(scan_pair(G, T, p));
        } catch (const Error&) {
            PairScan bad;
            bad.prime = p;
            g.pairs.push_back(bad);
        }
    }
    return g;
}

int failures = 0;

void report(int number, const std::string& label, bool ok, const std::string& detail = "") {
    std::printf("[%s] %2d. %s%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

std::string pair_tag(const GroupScan& g, const PairScan& s) {
    return "(" + g.name + ", " + std::to_string(s.prime) + ")";
}

bool mn_matches_dixon(int n) {
    MnTable mn = mn_table(n);
    FiniteGroup Sn = FiniteGroup::enumerate_group(catalog("S" + std::to_string(n)));
    CharacterTable T = character_table(Sn);
    const auto& classes = Sn.conjugacy_classes();
    const int k = T.num_classes();
    if (static_cast<int>(mn.partitions.size()) != k) return false;

    std::map<std::vector<int>, int> column_of_type;
    for (int j = 0; j < k; ++j)
        column_of_type[Sn.carrier(classes[j].representative).cycle_type()] = j;

    std::multiset<std::vector<long long>> table_rows;
    for (int r = 0; r < k; ++r) {
        std::vector<long long> row;
        for (int j = 0; j < k; ++j) {
            if (!T.values[r][j].is_rational_integer()) return false;
            row.push_back(T.values[r][j].rational_value());
        }
        table_rows.insert(std::move(row));
    }
    for (int r = 0; r < k; ++r) {
        std::vector<long long> row(k);
        for (int c = 0; c < k; ++c)
            row[column_of_type.at(mn.partitions[c].parts)] = mn.values[r][c];
        if (table_rows.count(row) != 1) return false;
    }
    return true;
}

/// Every removal order must reach the same q-core.
void all_cores(const Partition& lambda, int q, std::set<std::vector<int>>& leaves,
               std::map<std::vector<int>, std::set<std::vector<int>>>& memo) {
    auto hit = memo.find(lambda.parts);
    if (hit != memo.end()) {
        leaves.insert(hit->second.begin(), hit->second.end());
        return;
    }
    std::set<std::vector<int>> mine;
    bool removable = false;
    for (int i = 1; i <= lambda.rows(); ++i) {
        for (int j = 1; j <= lambda.parts[i - 1]; ++j) {
            HookData hook = hook_at(lambda, i, j);
            if (hook.length != q) continue;
            removable = true;
            auto [rest, leg] = remove_rim_hook(lambda, i, j, q);
            (void)leg;
            all_cores(rest, q, mine, memo);
        }
    }
    if (!removable) mine.insert(lambda.parts);
    memo[lambda.parts] = mine;
    leaves.insert(mine.begin(), mine.end());
}

bool q_core_checks(int max_n) {
    for (int n = 1; n <= max_n; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int q : {2, 3, 5}) {
                std::set<std::vector<int>> leaves;
                std::map<std::vector<int>, std::set<std::vector<int>>> memo;
                all_cores(lambda, q, leaves, memo);
                if (leaves.size() != 1 || *leaves.begin() != q_core(lambda, q).parts)
                    return false;
            }
    return true;
}

bool conjugation_sign_checks(int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        MnTable mn = mn_table(n);
        std::map<std::vector<int>, int> row_of;
        for (size_t r = 0; r < mn.partitions.size(); ++r) row_of[mn.partitions[r].parts] = r;
        for (size_t r = 0; r < mn.partitions.size(); ++r) {
            int rc = row_of.at(conjugate(mn.partitions[r]).parts);
            for (size_t c = 0; c < mn.partitions.size(); ++c) {
                const std::vector<int>& mu = mn.partitions[c].parts;
                int even_parts = 0;
                for (int part : mu)
                    if (part % 2 == 0) ++even_parts;
                long long sign = (even_parts % 2 == 0) ? 1 : -1;
                if (mn.values[rc][c] != sign * mn.values[r][c]) return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    std::printf("acceptance: spectra of p-singular Cayley graphs\n");

    // Criterion 1: the S4 anchor, timed on its own.
    {
        auto start = std::chrono::steady_clock::now();
        FiniteGroup S4 = FiniteGroup::enumerate_group(catalog("S4"));
        CharacterTable T = character_table(S4);
        Analysis a = analyze("S4", S4, T, 2);
        double elapsed = seconds_since(start);
        bool ok = a.spectrum.energy == 54 && a.spectrum.hyperenergetic &&
                  a.spectrum.energy > 2 * 24 - 2 && elapsed < kAnchorBudgetSeconds;
        report(1, "S4 anchor: energy 54, hyperenergetic past 46", ok,
               "energy=" + std::to_string(a.spectrum.energy) + ", " + std::to_string(elapsed) +
                   "s");
    }

    // One full corpus sweep feeds criteria 2 through 9 and 11.
    auto sweep_start = std::chrono::steady_clock::now();
    CorpusManifest manifest = default_manifest();
    std::vector<GroupScan> scan;
    for (const auto& entry : manifest.groups) scan.push_back(scan_group(entry));
    double sweep_elapsed = seconds_since(sweep_start);

    // Criterion 2: nullity = |G| - r_p on p-solvable pairs; oracle zero count agrees.
    {
        bool ok = sweep_elapsed < kCorpusBudgetSeconds;
        std::string culprit;
        for (const auto& g : scan)
            for (const auto& s : g.pairs) {
                if (!s.solvable || g.order > kSolvableOrderCap) continue;
                bool pair_ok = s.spectrum_ok && s.nullity == g.order - s.r_p;
                if (s.oracle_ran) pair_ok = pair_ok && s.oracle_zero_count == s.nullity;
                if (!pair_ok && culprit.empty()) culprit = pair_tag(g, s);
                ok = ok && pair_ok;
            }
        report(2, "nullity equals |G| - r_p on p-solvable pairs (+oracle zeros)", ok,
               culprit.empty() ? std::to_string(sweep_elapsed) + "s sweep" : culprit);
    }

    // Criterion 3: every eigenvalue over the whole corpus is a rational integer.
    {
        bool ok = true;
        std::string culprit;
        for (const auto& g : scan)
            for (const auto& s : g.pairs) {
                if (!s.spectrum_ok && culprit.empty()) culprit = pair_tag(g, s);
                ok = ok && s.spectrum_ok;
            }
        report(3, "integral spectrum over the whole corpus", ok, culprit);
    }

    // Criterion 4: oracle equivalence for |G| <= 300.
    {
        bool ok = true;
        std::string culprit;
        for (const auto& g : scan)
            for (const auto& s : g.pairs) {
                if (!s.oracle_ran) continue;
                bool pair_ok = s.oracle_spectrum_ok && s.oracle_components_ok &&
                               !s.eigs.empty() && s.eigs.front().first == s.d_p &&
                               s.eigs.front().second == s.c_p;
                if (!pair_ok && culprit.empty()) culprit = pair_tag(g, s);
                ok = ok && pair_ok;
            }
        report(4, "oracle spectrum/component equivalence for |G| <= 300", ok, culprit);
    }

    // Criterion 5: exact-energy suite and the structure identity.
    {
        const std::vector<std::tuple<std::string, int, long long>> anchors{
            {"C6", 2, 6}, {"S3", 3, 8}, {"A4", 3, 16}, {"F21", 3, 28}, {"F21", 7, 36}};
        bool ok = true;
        std::string culprit;
        auto find_pair = [&scan](const std::string& name, int p) -> const PairScan* {
            for (const auto& g : scan)
                if (g.name == name)
                    for (const auto& s : g.pairs)
                        if (s.prime == p) return &s;
            return nullptr;
        };
        for (const auto& [name, p, expected] : anchors) {
            const PairScan* s = find_pair(name, p);
            bool pair_ok = s != nullptr && s->energy == expected && !s->hyperenergetic;
            if (!pair_ok && culprit.empty()) culprit = "(" + name + ", " + std::to_string(p) + ")";
            ok = ok && pair_ok;
        }
        for (const auto& g : scan)
            for (const auto& s : g.pairs) {
                if (!s.nil_hyp) continue;
                long long order_pprime = g.order / s.order_p;
                bool pair_ok = s.energy == 2 * g.order - 2 * order_pprime &&
                               s.span_order == s.order_p * s.core_order &&
                               s.d_p == s.span_order - s.core_order && !s.hyperenergetic;
                if (!pair_ok && culprit.empty()) culprit = pair_tag(g, s);
                ok = ok && pair_ok;
            }
        report(5, "exact energy 2|G| - 2|G|_p' and d_p = |H_p| - |O_p'| on the nil suite", ok,
               culprit);
    }

    // Criterion 6: energy lower bound, exact integer comparisons.
    {
        bool ok = true;
        std::string culprit;
        for (const auto& g : scan)
            for (const auto& s : g.pairs) {
                if (!s.solvable) continue;
                long long additive = s.r_p + s.c_p * (s.d_p - 1);
                long long radicand = g.order * s.d_p + s.r_p * (s.r_p - 1);
                bool pair_ok = s.spectrum_ok && s.energy >= additive &&
                               s.energy * s.energy >= radicand;
                if (!pair_ok && culprit.empty()) culprit = pair_tag(g, s);
                ok = ok && pair_ok;
            }
        report(6, "energy >= max{r_p + c_p(d_p - 1), sqrt(|G|d_p + r_p(r_p - 1))}", ok, culprit);
    }

    // Criterion 7: per-component diameter bound.
    {
        bool ok = true;
        std::string culprit;
        for (const auto& g : scan)
            for (const auto& s : g.pairs) {
                if (!s.solvable) continue;
                bool pair_ok = s.spectrum_ok && s.diameter <= s.order_p;
                if (!pair_ok && culprit.empty()) culprit = pair_tag(g, s);
                ok = ok && pair_ok;
            }
        report(7, "component diameter <= |G|_p on p-solvable pairs", ok, culprit);
    }

    // Criterion 8: block consistency, the (A5,5) split, singular iff >= 2 blocks.
    {
        bool ok = true;
        std::string culprit;
        for (const auto& g : scan)
            for (const auto& s : g.pairs) {
                bool pair_ok = s.spectrum_ok && s.membership_ok && s.principal_lift_ok &&
                               s.singular == (s.blocks.size() >= 2);
                if (g.name == "A5" && s.prime == 5) {
                    std::vector<int> principal_degrees, rest_degrees;
                    if (s.blocks.size() == 2) {
                        for (int r : s.blocks[0]) principal_degrees.push_back(g.degrees[r]);
                        for (int r : s.blocks[1]) rest_degrees.push_back(g.degrees[r]);
                    }
                    pair_ok = pair_ok && s.blocks.size() == 2 && s.principal_block == 0 &&
                              principal_degrees == std::vector<int>{1, 3, 3, 4} &&
                              rest_degrees == std::vector<int>{5};
                }
                if (!pair_ok && culprit.empty()) culprit = pair_tag(g, s);
                ok = ok && pair_ok;
            }
        report(8, "block membership/lift consistency and the (A5,5) split {1,3,3,4}|{5}", ok,
               culprit);
    }

    // Criterion 9: corollaries and the nilpotent/odd-p predicates.
    {
        bool ok = true;
        std::string culprit;
        for (const auto& g : scan) {
            if (!g.cor_solvable_ok) {
                ok = false;
                if (culprit.empty()) culprit = g.name + " solvable corollary";
            }
        }
        for (const std::string name : {"C1", "C2", "S3", "A4"}) {
            const GroupScan* g = nullptr;
            for (const auto& cand : scan)
                if (cand.name == name) g = &cand;
            if (g == nullptr || !g->cor_large_ran || !g->cor_large_ok) {
                ok = false;
                if (culprit.empty()) culprit = name + " large corollary";
            }
        }
        for (const auto& g : scan)
            for (const auto& s : g.pairs) {
                if (g.nilpotent && g.order != s.order_p && !s.singular) {
                    ok = false;
                    if (culprit.empty()) culprit = pair_tag(g, s) + " nilpotent lemma";
                }
                if (!s.predicates_ok) {
                    ok = false;
                    if (culprit.empty()) culprit = pair_tag(g, s) + " predicates";
                }
            }
        report(9, "solvable/large corollaries and singularity predicates", ok, culprit);
    }

    // Criterion 10: Murnaghan-Nakayama suite.
    {
        bool mn_ok = true;
        for (int n = 2; n <= 6; ++n) mn_ok = mn_ok && mn_matches_dixon(n);
        bool degrees_ok = true;
        for (int n = 1; n <= 8; ++n) {
            MnTable mn = mn_table(n);
            int ones_column = static_cast<int>(mn.partitions.size()) - 1;
            for (size_t r = 0; r < mn.partitions.size(); ++r)
                degrees_ok = degrees_ok && mn.values[r][ones_column] ==
                                               degree_hook_length(mn.partitions[r]);
        }
        bool ok = mn_ok && degrees_ok && conjugation_sign_checks(6) && q_core_checks(8);
        report(10, "MN table = Dixon table (n <= 6), hook degrees, sign twist, q-cores", ok);
    }

    // Criterion 11: character table certificate for every corpus group.
    {
        bool ok = true;
        std::string culprit;
        for (const auto& g : scan) {
            if (!g.table_ok && culprit.empty()) culprit = g.name;
            ok = ok && g.table_ok;
        }
        report(11, "orthogonality, degree squares, and row sums for every corpus group", ok,
               culprit);
    }

    std::printf("%d of 11 criteria passed\n", 11 - failures);
    return failures == 0 ? 0 : 1;
}
