#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "psingular/char_table.hpp"
#include "psingular/corpus.hpp"
#include "psingular/errors.hpp"
#include "psingular/group.hpp"
#include "psingular/oracle.hpp"
#include "psingular/partitions.hpp"
#include "psingular/report.hpp"

using namespace psing;

namespace {

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Err::CertificationFailed:
        case Err::IntegralityViolation:
        case Err::ConvergenceFailure:
        case Err::CardinalityMismatch:
            return 2;
        default:
            return 1;
    }
}

struct GroupSource {
    std::string name;
    std::string gens_path;
};

FiniteGroup load_group(const GroupSource& src, std::string& display) {
    if (!src.name.empty() && !src.gens_path.empty())
        fail(Err::ParseError, "--group and --gens are mutually exclusive");
    if (src.name.empty() && src.gens_path.empty())
        fail(Err::ParseError, "one of --group or --gens is required");
    if (!src.name.empty()) {
        display = src.name;
        return FiniteGroup::enumerate_group(catalog(src.name));
    }
    std::ifstream in(src.gens_path);
    if (!in) fail(Err::ParseError, "cannot open generator file " + src.gens_path);
    std::stringstream buf;
    buf << in.rdbuf();
    display = src.gens_path;
    return FiniteGroup::enumerate_group(parse_generator_lines(buf.str()));
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
    std::ofstream out(path);
    if (!out) fail(Err::ParseError, "cannot write " + path);
    out << j.dump(2) << "\n";
}

int cmd_analyze(const GroupSource& src, int prime, bool with_oracle,
                const std::string& json_path) {
    std::string display;
    FiniteGroup G = load_group(src, display);
    CharacterTable T = character_table(G);
    Analysis a = analyze(display, G, T, prime);
    std::cout << analysis_to_text(G, a);

    bool verified = true;
    if (with_oracle) {
        AdjacencyMatrix A = build_adjacency(G, a.profile);
        verified = edge_count(A) == G.order() * a.profile.degree / 2;
        verified = verified && compare_spectra(a.spectrum.eigs, symmetric_eigenvalues(A));
        ComponentsResult comps = components_and_diameter(A);
        verified = verified && comps.count == a.profile.component_count;
        for (int d : comps.diameters) verified = verified && d == a.spectrum.diameter;
        std::cout << "  oracle: " << (verified ? "verified" : "MISMATCH") << "\n";
    }

    if (!json_path.empty()) {
        nlohmann::ordered_json j = analysis_to_json(G, a);
        if (with_oracle) j["verified"] = verified;
        write_json(json_path, j);
    }

    bool verdicts_ok = a.singularity_verdict.passed() &&
                       (!a.energy_verdict_ran || a.energy_verdict.passed()) &&
                       (!a.nil_verdict_ran || a.nil_verdict.passed());
    return (verified && verdicts_ok) ? 0 : 2;
}

int cmd_corpus(long long max_order, const std::string& json_path) {
    CorpusOptions options;
    options.max_order = max_order;
    std::vector<CheckRow> rows = run_corpus(default_manifest(), options);
    std::cout << corpus_table(rows);

    bool all_ok = true;
    nlohmann::ordered_json out;
    out["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        all_ok = all_ok && row.ok();
        if (json_path.empty()) continue;
        nlohmann::ordered_json rj;
        rj["group"] = row.group;
        rj["order"] = row.order;
        rj["prime"] = row.prime;
        rj["ok"] = row.ok();
        rj["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : row.checks)
            rj["checks"].push_back({{"label", c.label},
                                    {"applicable", c.applicable},
                                    {"ok", c.ok}});
        out["rows"].push_back(rj);
    }
    if (!json_path.empty()) write_json(json_path, out);
    return all_ok ? 0 : 2;
}

int cmd_blocks(const GroupSource& src, int prime, const std::string& json_path) {
    std::string display;
    FiniteGroup G = load_group(src, display);
    CharacterTable T = character_table(G);
    BlockPartition blocks = block_partition(T, prime);

    std::cout << display << "  p = " << prime << "  " << blocks.blocks.size()
              << (blocks.blocks.size() == 1 ? " block\n" : " blocks\n");
    for (size_t b = 0; b < blocks.blocks.size(); ++b) {
        std::cout << "  B" << b << (static_cast<int>(b) == blocks.principal_index ? "*" : " ")
                  << " rows {";
        for (size_t i = 0; i < blocks.blocks[b].size(); ++i)
            std::cout << (i ? " " : "") << blocks.blocks[b][i];
        std::cout << "} degrees {";
        for (size_t i = 0; i < blocks.blocks[b].size(); ++i)
            std::cout << (i ? " " : "") << T.degrees[blocks.blocks[b][i]];
        std::cout << "}\n";
    }

    if (!json_path.empty()) {
        nlohmann::ordered_json j;
        j["group"] = display;
        j["order"] = G.order();
        j["prime"] = prime;
        j["blocks"] = blocks.blocks;
        nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
        for (const auto& block : blocks.blocks) {
            std::vector<int> d;
            for (int r : block) d.push_back(T.degrees[r]);
            degrees.push_back(d);
        }
        j["block_degrees"] = degrees;
        j["principal_block"] = blocks.principal_index;
        write_json(json_path, j);
    }
    return 0;
}

int cmd_mn_table(int n, const std::string& json_path) {
    MnTable table = mn_table(n);
    nlohmann::ordered_json j;
    j["n"] = table.n;
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (const auto& lambda : table.partitions) parts.push_back(lambda.parts);
    j["partitions"] = parts;
    j["values"] = table.values;
    std::cout << j.dump(2) << "\n";
    if (!json_path.empty()) write_json(json_path, j);
    return 0;
}

int cmd_catalog() {
    for (const auto& name : catalog_names()) {
        FiniteGroup G = FiniteGroup::enumerate_group(catalog(name));
        std::cout << name << " " << G.order() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra, energy and p-blocks of Cayley graphs on p-singular elements"};
    app.require_subcommand(1);

    GroupSource src;
    int prime = 0;
    bool with_oracle = false;
    std::string json_path;
    long long max_order = 5000;
    int mn_n = 0;

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "full report for one (group, prime) pair");
    analyze_cmd->add_option("--group", src.name, "catalog group name");
    analyze_cmd->add_option("--gens", src.gens_path,
                            "generator file, one permutation per line in cycle notation");
    analyze_cmd->add_option("--prime", prime, "prime dividing the group order")->required();
    analyze_cmd->add_flag("--oracle", with_oracle, "cross-check against the adjacency oracle");
    analyze_cmd->add_option("--json", json_path, "also write the report to this path");

    CLI::App* corpus_cmd =
        app.add_subcommand("corpus", "run the verification suite over the built-in corpus");
    corpus_cmd->add_option("--max-order", max_order, "skip groups larger than this");
    corpus_cmd->add_option("--json", json_path, "also write all check rows to this path");

    CLI::App* blocks_cmd = app.add_subcommand("blocks", "p-block partition of Irr(G)");
    blocks_cmd->add_option("--group", src.name, "catalog group name");
    blocks_cmd->add_option("--gens", src.gens_path,
                           "generator file, one permutation per line in cycle notation");
    blocks_cmd->add_option("--prime", prime, "prime p")->required();
    blocks_cmd->add_option("--json", json_path, "also write the partition to this path");

    CLI::App* mn_cmd =
        app.add_subcommand("mn-table", "symmetric-group character table by rim-hook recursion");
    mn_cmd->add_option("--n", mn_n, "degree of the symmetric group (1..12)")->required();
    mn_cmd->add_option("--json", json_path, "also write the table to this path");

    app.add_subcommand("catalog", "list built-in groups and their orders");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(src, prime, with_oracle, json_path);
        if (corpus_cmd->parsed()) return cmd_corpus(max_order, json_path);
        if (blocks_cmd->parsed()) return cmd_blocks(src, prime, json_path);
        if (mn_cmd->parsed()) return cmd_mn_table(mn_n, json_path);
        return cmd_catalog();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
