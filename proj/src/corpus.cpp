#include "psingular/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "psingular/char_table.hpp"
#include "psingular/cyclotomic.hpp"
#include "psingular/errors.hpp"
#include "psingular/oracle.hpp"
#include "psingular/report.hpp"

namespace psing {

bool CheckRow::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Clause& c) { return c.ok; });
}

CorpusManifest default_manifest() {
    CorpusManifest m;
    for (const auto& name : catalog_names()) {
        FiniteGroup G = FiniteGroup::enumerate_group(catalog(name));
        m.groups.push_back({name, G.order()});
    }
    return m;
}

CorpusManifest manifest_from_json(const nlohmann::json& j) {
    CorpusManifest m;
    m.version = j.at("version").get<int>();
    for (const auto& entry : j.at("groups"))
        m.groups.push_back({entry.at("name").get<std::string>(),
                            entry.at("order").get<long long>()});
    return m;
}

CorpusManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::ParseError, "cannot open manifest " + path);
    nlohmann::json j;
    in >> j;
    return manifest_from_json(j);
}

namespace {

void flatten(const Verdict& v, const std::string& prefix, std::vector<Clause>& out) {
    for (const auto& c : v.clauses) out.push_back({prefix + c.label, c.applicable, c.ok});
}

}  // namespace

std::vector<Clause> table_certificate(const FiniteGroup& G, const CharacterTable& T) {
    std::vector<Clause> out;
    long long squares = 0;
    for (int d : T.degrees) squares += static_cast<long long>(d) * d;
    out.push_back({"table.degree_squares", true, squares == G.order()});

    bool orth = true;
    for (int r = 0; r < T.num_rows() && orth; ++r) {
        for (int s = r; s < T.num_rows() && orth; ++s) {
            CyclotomicInt acc = CyclotomicInt::zero(T.exponent);
            for (size_t j = 0; j < T.class_sizes.size(); ++j)
                acc += (T.values[r][j] * T.values[s][j].conj()).scaled(T.class_sizes[j]);
            if (r == s)
                orth = acc.is_rational_integer() && acc.rational_value() == G.order();
            else
                orth = acc.is_zero();
        }
    }
    out.push_back({"table.row_orthogonality", true, orth});

    bool sums = true;
    for (int r = 0; r < T.num_rows() && sums; ++r) {
        CyclotomicInt acc = CyclotomicInt::zero(T.exponent);
        for (size_t j = 0; j < T.class_sizes.size(); ++j)
            acc += T.values[r][j].scaled(T.class_sizes[j]);
        if (r == 0)
            sums = acc.is_rational_integer() && acc.rational_value() == G.order();
        else
            sums = acc.is_zero();
    }
    out.push_back({"table.row_sums", true, sums});
    return out;
}

namespace {

CheckRow group_row(const std::string& name, const FiniteGroup& G, const CharacterTable& T) {
    CheckRow row{name, G.order(), 0, {}};
    for (const Clause& c : table_certificate(G, T)) row.checks.push_back(c);

    bool solvable = true;
    for (int p : prime_divisors(G.order()))
        if (!is_p_solvable(G, p)) solvable = false;
    if (solvable)
        flatten(verify_corollary_solvable(G), "solvable.", row.checks);
    else
        row.checks.push_back({"corollary_solvable", false, true});

    if (6 * G.order() <= 360)
        flatten(verify_corollary_large(G), "large.", row.checks);
    else
        row.checks.push_back({"corollary_large", false, true});
    return row;
}

CheckRow pair_row(const std::string& name, const FiniteGroup& G, const CharacterTable& T,
                  int p, const CorpusOptions& options) {
    CheckRow row{name, G.order(), p, {}};
    Analysis a = analyze(name, G, T, p);
    const SpectrumReport& rep = a.spectrum;

    long long mult_sum = 0, trace = 0, square_sum = 0;
    for (auto [v, m] : rep.eigs) {
        mult_sum += m;
        trace += v * m;
        square_sum += v * v * m;
    }
    row.checks.push_back({"spectrum.max_eig", true,
                          rep.eigs.front().first == a.profile.degree &&
                              rep.eigs.front().second == a.profile.component_count});
    row.checks.push_back({"spectrum.complete", true, mult_sum == G.order() && trace == 0});
    row.checks.push_back(
        {"spectrum.square_sum", true, square_sum == G.order() * a.profile.degree});

    row.checks.push_back({"blocks.singular_iff_split", true,
                          rep.singular == (a.blocks.blocks.size() >= 2)});
    row.checks.push_back(
        {"blocks.nullity", true, nullity_via_blocks(T, a.blocks) == rep.nullity});

    bool membership = true;
    const std::vector<int>& principal = a.blocks.blocks[a.blocks.principal_index];
    for (int r = 0; r < T.num_rows(); ++r) {
        bool in_principal =
            std::find(principal.begin(), principal.end(), r) != principal.end();
        if (principal_block_membership(T, a.profile, r) != in_principal) membership = false;
    }
    row.checks.push_back({"blocks.principal_rows", true, membership});

    bool solvable_pair = is_p_solvable(G, p);
    if (solvable_pair) {
        row.checks.push_back(
            {"blocks.principal_lift", true,
             principal == restrict_to_quotient(G, T, a.profile.core)});
        long long identity = 0;
        for (int r : principal) {
            long long eta = row_eigenvalue(T, a.profile, r);
            identity += static_cast<long long>(T.degrees[r]) * T.degrees[r] *
                        (eta < 0 ? -eta : eta);
        }
        row.checks.push_back({"blocks.energy_identity", true, identity == rep.energy});
    } else {
        row.checks.push_back({"blocks.principal_lift", false, true});
        row.checks.push_back({"blocks.energy_identity", false, true});
    }

    if (a.energy_verdict_ran)
        flatten(a.energy_verdict, "energy.", row.checks);
    else
        row.checks.push_back({"theorem_energy", false, true});
    if (a.nil_verdict_ran)
        flatten(a.nil_verdict, "nil.", row.checks);
    else
        row.checks.push_back({"theorem_nil", false, true});
    flatten(a.singularity_verdict, "predicates.", row.checks);

    bool oracle_on = options.with_oracle && G.order() <= options.oracle_max_order &&
                     G.order() <= kOracleCap;
    if (oracle_on) {
        AdjacencyMatrix A = build_adjacency(G, a.profile);
        row.checks.push_back(
            {"oracle.edges", true, edge_count(A) == G.order() * a.profile.degree / 2});
        std::vector<double> numeric = symmetric_eigenvalues(A);
        row.checks.push_back({"oracle.spectrum", true, compare_spectra(rep.eigs, numeric)});
        long long zeros = 0;
        for (double v : numeric)
            if (v > -kSpectrumMatchTol && v < kSpectrumMatchTol) ++zeros;
        row.checks.push_back({"oracle.nullity", true, zeros == rep.nullity});
        ComponentsResult comps = components_and_diameter(A);
        bool comp_ok = comps.count == a.profile.component_count;
        for (int d : comps.diameters)
            if (d != rep.diameter) comp_ok = false;
        row.checks.push_back({"oracle.components", true, comp_ok});
    } else {
        row.checks.push_back({"oracle", false, true});
    }
    return row;
}

}  // namespace

std::vector<CheckRow> run_corpus(const CorpusManifest& manifest, const CorpusOptions& options) {
    std::vector<CheckRow> rows;
    for (const auto& entry : manifest.groups) {
        if (entry.order > options.max_order) continue;
        FiniteGroup G = FiniteGroup::enumerate_group(catalog(entry.name));
        if (G.order() != entry.order) {
            rows.push_back({entry.name, entry.order, 0,
                            {{"manifest.order", true, false}}});
            continue;
        }
        CharacterTable T;
        try {
            T = character_table(G);
            rows.push_back(group_row(entry.name, G, T));
        } catch (const Error& e) {
            rows.push_back({entry.name, entry.order, 0,
                            {{std::string("exception.") + err_name(e.code()), true, false}}});
            continue;
        }
        for (int p : prime_divisors(G.order())) {
            try {
                rows.push_back(pair_row(entry.name, G, T, p, options));
            } catch (const Error& e) {
                rows.push_back({entry.name, entry.order, p,
                                {{std::string("exception.") + err_name(e.code()), true, false}}});
            }
        }
    }
    return rows;
}

std::string corpus_table(const std::vector<CheckRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(8) << "group" << std::right << std::setw(6) << "|G|"
        << std::setw(4) << "p" << std::setw(8) << "checks" << "  result\n";
    int failures = 0;
    for (const auto& row : rows) {
        long long applicable =
            std::count_if(row.checks.begin(), row.checks.end(),
                          [](const Clause& c) { return c.applicable; });
        out << std::left << std::setw(8) << row.group << std::right << std::setw(6)
            << row.order << std::setw(4) << (row.prime ? std::to_string(row.prime) : "-")
            << std::setw(8) << applicable << "  ";
        if (row.ok()) {
            out << "ok";
        } else {
            ++failures;
            out << "FAIL";
            for (const auto& c : row.checks)
                if (!c.ok) out << " " << c.label;
        }
        out << "\n";
    }
    out << rows.size() << " rows, " << failures << " failing\n";
    return out.str();
}

}  // namespace psing
