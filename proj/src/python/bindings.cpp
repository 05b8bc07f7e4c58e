#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nlohmann/json.hpp"
#include "psingular/char_table.hpp"
#include "psingular/corpus.hpp"
#include "psingular/errors.hpp"
#include "psingular/group.hpp"
#include "psingular/oracle.hpp"
#include "psingular/partitions.hpp"
#include "psingular/permutation.hpp"
#include "psingular/report.hpp"

namespace py = pybind11;
using namespace psing;

namespace {

FiniteGroup group_by_name(const std::string& name) {
    return FiniteGroup::enumerate_group(catalog(name));
}

py::object json_to_py(const nlohmann::ordered_json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        default: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
    }
}

py::object py_analyze(const std::string& name, int p, bool oracle) {
    FiniteGroup G = group_by_name(name);
    CharacterTable T = character_table(G);
    Analysis a = analyze(name, G, T, p);
    nlohmann::ordered_json j = analysis_to_json(G, a);
    if (oracle) {
        AdjacencyMatrix A = build_adjacency(G, a.profile);
        bool verified = compare_spectra(a.spectrum.eigs, symmetric_eigenvalues(A));
        ComponentsResult comps = components_and_diameter(A);
        verified = verified && comps.count == a.profile.component_count;
        j["verified"] = verified;
    }
    return json_to_py(j);
}

py::object py_blocks(const std::string& name, int p) {
    FiniteGroup G = group_by_name(name);
    CharacterTable T = character_table(G);
    BlockPartition blocks = block_partition(T, p);
    nlohmann::ordered_json j;
    j["group"] = name;
    j["order"] = G.order();
    j["prime"] = p;
    j["blocks"] = blocks.blocks;
    nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
    for (const auto& block : blocks.blocks) {
        std::vector<int> d;
        for (int r : block) d.push_back(T.degrees[r]);
        degrees.push_back(d);
    }
    j["block_degrees"] = degrees;
    j["principal_block"] = blocks.principal_index;
    return json_to_py(j);
}

py::object py_character_table(const std::string& name) {
    FiniteGroup G = group_by_name(name);
    return json_to_py(table_to_json(character_table(G)));
}

py::object py_group_info(const std::string& name) {
    FiniteGroup G = group_by_name(name);
    nlohmann::ordered_json j;
    j["name"] = name;
    j["order"] = G.order();
    j["exponent"] = G.exponent();
    std::vector<int> sizes, orders;
    for (const auto& cls : G.conjugacy_classes()) {
        sizes.push_back(cls.size);
        orders.push_back(cls.element_order);
    }
    j["class_sizes"] = sizes;
    j["class_orders"] = orders;
    std::vector<std::string> gens;
    for (int g : G.generator_indices()) gens.push_back(format_cycles(G.carrier(g)));
    j["generators"] = gens;
    return json_to_py(j);
}

py::object py_mn_table(int n) {
    MnTable table = mn_table(n);
    nlohmann::ordered_json j;
    j["n"] = table.n;
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (const auto& lambda : table.partitions) parts.push_back(lambda.parts);
    j["partitions"] = parts;
    j["values"] = table.values;
    return json_to_py(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "spectra of p-singular Cayley graphs on finite groups";

    py::register_exception<Error>(m, "PsingularError");

    m.def("catalog_names", &catalog_names, "names of the built-in groups");
    m.def("group_info", &py_group_info, py::arg("name"),
          "order, exponent, conjugacy class data and generators");
    m.def("character_table", &py_character_table, py::arg("name"),
          "full character table in the JSON layout");
    m.def("analyze", &py_analyze, py::arg("name"), py::arg("prime"),
          py::arg("oracle") = false,
          "spectrum report for the Cayley graph on the p-singular elements");
    m.def("blocks", &py_blocks, py::arg("name"), py::arg("prime"),
          "p-block partition of the irreducible characters");
    m.def("mn_table", &py_mn_table, py::arg("n"),
          "symmetric-group character table by the rim-hook recursion");
}
