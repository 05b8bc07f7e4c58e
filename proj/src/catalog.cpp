#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "psingular/errors.hpp"
#include "psingular/group.hpp"

namespace psing {

namespace {

Permutation cycle_on(int n) {
    std::vector<int> imgs(n);
    for (int i = 0; i < n; ++i) imgs[i] = (i + 1) % n;
    return Permutation(std::move(imgs));
}

Permutation negation_mod(int n) {
    std::vector<int> imgs(n);
    for (int i = 0; i < n; ++i) imgs[i] = (n - i) % n;
    return Permutation(std::move(imgs));
}

Permutation scaling_mod(int n, int factor) {
    std::vector<int> imgs(n);
    for (int i = 0; i < n; ++i) imgs[i] = (i * factor) % n;
    return Permutation(std::move(imgs));
}

std::vector<Permutation> cyclic(int n) {
    if (n == 1) return {Permutation::identity(1)};
    return {cycle_on(n)};
}

std::vector<Permutation> dihedral(int half) {
    if (half == 1) return {parse_cycles("(0 1)")};
    if (half == 2) return {parse_cycles("(0 1)").extended(4), parse_cycles("(2 3)")};
    return {cycle_on(half), negation_mod(half)};
}

std::vector<Permutation> symmetric(int n) {
    if (n == 1) return {Permutation::identity(1)};
    if (n == 2) return {parse_cycles("(0 1)")};
    return {cycle_on(n), parse_cycles("(0 1)").extended(n)};
}

std::vector<Permutation> alternating(int n) {
    if (n <= 2) return {Permutation::identity(std::max(n, 1))};
    if (n == 3) return {parse_cycles("(0 1 2)")};
    Permutation three = parse_cycles("(0 1 2)").extended(n);
    if (n % 2 == 1) return {three, cycle_on(n)};
    std::vector<int> imgs(n);
    imgs[0] = 0;
    for (int i = 1; i < n; ++i) imgs[i] = i % (n - 1) + 1;
    return {three, Permutation(std::move(imgs))};
}

std::vector<Permutation> quaternion8() {
    // Left regular representation on {1, i, -1, -i, j, k, -j, -k}.
    return {parse_cycles("(0 1 2 3)(4 5 6 7)"), parse_cycles("(0 4 2 6)(1 7 3 5)")};
}

std::vector<Permutation> special_linear_2_3() {
    // Action on the 8 nonzero vectors of F_3^2, listed in lex order.
    std::vector<std::pair<int, int>> vecs;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x || y) vecs.emplace_back(x, y);
    auto index_of = [&](int x, int y) {
        for (size_t i = 0; i < vecs.size(); ++i)
            if (vecs[i] == std::make_pair(x, y)) return static_cast<int>(i);
        fail(Err::SizeMismatch, "vector lookup");
    };
    auto matrix_perm = [&](int a, int b, int c, int d) {
        std::vector<int> imgs(vecs.size());
        for (size_t i = 0; i < vecs.size(); ++i) {
            auto [x, y] = vecs[i];
            imgs[i] = index_of((a * x + b * y) % 3, (c * x + d * y) % 3);
        }
        return Permutation(std::move(imgs));
    };
    return {matrix_perm(1, 1, 0, 1), matrix_perm(0, 2, 1, 0)};
}

std::vector<Permutation> frobenius21() { return {cycle_on(7), scaling_mod(7, 2)}; }

std::vector<Permutation> frobenius20() { return {cycle_on(5), scaling_mod(5, 2)}; }

std::vector<Permutation> a4_times_c2() {
    return {parse_cycles("(0 1 2)").extended(6), parse_cycles("(0 1)(2 3)").extended(6),
            parse_cycles("(4 5)").extended(6)};
}

}  // namespace

std::vector<Permutation> catalog(const std::string& name) {
    auto numeric_suffix = [&](char prefix) -> int {
        if (name.size() < 2 || name[0] != prefix) return -1;
        int value = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
            value = value * 10 + (name[i] - '0');
        }
        return value;
    };
    if (int n = numeric_suffix('C'); n >= 1 && n <= 30) return cyclic(n);
    if (int n = numeric_suffix('D'); n >= 2 && n <= 30 && n % 2 == 0) return dihedral(n / 2);
    if (int n = numeric_suffix('S'); n >= 1 && n <= 6) return symmetric(n);
    if (int n = numeric_suffix('A'); n >= 1 && n <= 6) return alternating(n);
    if (name == "Q8") return quaternion8();
    if (name == "SL23" || name == "SL(2,3)") return special_linear_2_3();
    if (name == "F21" || name == "C7:C3") return frobenius21();
    if (name == "F20" || name == "C5:C4") return frobenius20();
    if (name == "A4xC2") return a4_times_c2();
    fail(Err::UnknownGroupName, name);
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (int n = 1; n <= 30; ++n) names.push_back("C" + std::to_string(n));
    for (int n = 1; n <= 15; ++n) names.push_back("D" + std::to_string(2 * n));
    for (int n = 1; n <= 6; ++n) names.push_back("S" + std::to_string(n));
    for (int n = 1; n <= 6; ++n) names.push_back("A" + std::to_string(n));
    names.insert(names.end(), {"Q8", "SL23", "F21", "F20", "A4xC2"});
    return names;
}

}  // namespace psing
