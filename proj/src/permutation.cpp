#include "psingular/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "psingular/errors.hpp"

namespace psing {

void check_bijection(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int v : images) {
        if (v < 0 || v >= n || seen[v])
            fail(Err::InvalidPermutation, "image array is not a bijection");
        seen[v] = 1;
    }
}

Permutation::Permutation(std::vector<int> imgs) : images(std::move(imgs)) {
    check_bijection(images);
}

Permutation Permutation::identity(int degree) {
    Permutation p;
    p.images.resize(degree);
    for (int i = 0; i < degree; ++i) p.images[i] = i;
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images[i] != i) return false;
    return true;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree())
        fail(Err::InvalidPermutation, "degree mismatch in composition");
    Permutation r;
    r.images.resize(degree());
    for (int i = 0; i < degree(); ++i) r.images[i] = images[other.images[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images.resize(degree());
    for (int i = 0; i < degree(); ++i) r.images[images[i]] = i;
    return r;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<char> seen(degree(), 0);
    std::vector<int> lengths;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images[j]) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

Permutation Permutation::extended(int degree) const {
    if (degree < this->degree())
        fail(Err::InvalidPermutation, "cannot shrink a permutation");
    Permutation r;
    r.images = images;
    for (int i = this->degree(); i < degree; ++i) r.images.push_back(i);
    return r;
}

namespace {

std::vector<std::vector<int>> read_cycle_list(const std::string& line) {
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    };
    skip_ws();
    while (pos < line.size()) {
        if (line[pos] != '(')
            fail(Err::ParseError, "expected '(' in cycle notation: " + line);
        ++pos;
        std::vector<int> cycle;
        skip_ws();
        while (pos < line.size() && line[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(line[pos])))
                fail(Err::ParseError, "expected a point in cycle notation: " + line);
            int value = 0;
            while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
                value = value * 10 + (line[pos] - '0');
                ++pos;
            }
            cycle.push_back(value);
            skip_ws();
            if (pos < line.size() && line[pos] == ',') {
                ++pos;
                skip_ws();
            }
        }
        if (pos >= line.size())
            fail(Err::ParseError, "unterminated cycle: " + line);
        ++pos;
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
        skip_ws();
    }
    return cycles;
}

}  // namespace

Permutation parse_cycles(const std::string& line) {
    auto cycles = read_cycle_list(line);
    int degree = 0;
    for (const auto& cycle : cycles)
        for (int point : cycle) degree = std::max(degree, point + 1);
    Permutation p = Permutation::identity(degree);
    for (const auto& cycle : cycles) {
        for (size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i];
            int to = cycle[(i + 1) % cycle.size()];
            if (p.images[from] != from)
                fail(Err::ParseError, "point repeated across cycles: " + line);
            p.images[from] = to;
        }
    }
    check_bijection(p.images);
    return p;
}

std::vector<Permutation> parse_generator_lines(const std::string& text) {
    std::vector<Permutation> gens;
    std::istringstream in(text);
    std::string line;
    int degree = 0;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos || line[first] == '#') continue;
        gens.push_back(parse_cycles(line));
        degree = std::max(degree, gens.back().degree());
    }
    if (gens.empty()) fail(Err::ParseError, "no generators found");
    for (auto& g : gens) g = g.extended(degree);
    return gens;
}

std::string format_cycles(const Permutation& p) {
    std::vector<char> seen(p.degree(), 0);
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i] || p.images[i] == i) {
            seen[i] = 1;
            continue;
        }
        out << '(';
        int j = i;
        bool first = true;
        do {
            if (!first) out << ' ';
            out << j;
            seen[j] = 1;
            j = p.images[j];
            first = false;
        } while (j != i);
        out << ')';
        any = true;
    }
    if (!any) return "()";
    return out.str();
}

}  // namespace psing
