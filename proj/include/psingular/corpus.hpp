#pragma once

#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "psingular/group.hpp"
#include "psingular/spectra.hpp"

namespace psing {

struct CorpusEntry {
    std::string name;
    long long order = 0;
};

struct CorpusManifest {
    int version = 1;
    std::vector<CorpusEntry> groups;
};

/// The built-in catalog with orders filled in; data/corpus.json mirrors this
/// and a test pins the two against each other.
CorpusManifest default_manifest();

CorpusManifest manifest_from_json(const nlohmann::json& j);
CorpusManifest load_manifest(const std::string& path);

/// One verification row: prime = 0 marks the group-level row (character
/// table certificate and the whole-group corollaries), otherwise the row
/// covers the pair (group, prime).
struct CheckRow {
    std::string group;
    long long order = 0;
    int prime = 0;
    std::vector<Clause> checks;

    bool ok() const;
};

struct CorpusOptions {
    long long max_order = 5000;
    bool with_oracle = true;
    long long oracle_max_order = 300;
};

/// Runs every applicable check over the manifest in order; rows come out
/// grouped by manifest position, group-level row first.
std::vector<CheckRow> run_corpus(const CorpusManifest& manifest, const CorpusOptions& options);

/// Exact re-derivation of the table certificate: degree squares sum to |G|,
/// weighted row orthogonality, and zero row sums off the principal row.
std::vector<Clause> table_certificate(const FiniteGroup& G, const CharacterTable& T);

std::string corpus_table(const std::vector<CheckRow>& rows);

}  // namespace psing
