#include "psingular/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "psingular/errors.hpp"

namespace psing {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) fail(Err::SizeMismatch, "partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            fail(Err::SizeMismatch, "partition parts must be weakly decreasing");
    }
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition conjugate(const Partition& lambda) {
    std::vector<int> t;
    for (int j = 1; lambda.rows() > 0 && j <= lambda.parts[0]; ++j) {
        int count = 0;
        for (int part : lambda.parts)
            if (part >= j) ++count;
        t.push_back(count);
    }
    return Partition(std::move(t));
}

HookData hook_at(const Partition& lambda, int i, int j) {
    if (i < 1 || i > lambda.rows() || j < 1 || j > lambda.parts[i - 1])
        fail(Err::NotAHook, "node outside the diagram");
    Partition t = conjugate(lambda);
    HookData h;
    h.row = i;
    h.col = j;
    h.hand = {i, lambda.parts[i - 1]};
    h.foot = {t.parts[j - 1], j};
    h.length = (lambda.parts[i - 1] - j) + (t.parts[j - 1] - i) + 1;
    return h;
}

std::pair<Partition, int> remove_rim_hook(const Partition& lambda, int i, int j, int q) {
    HookData h = hook_at(lambda, i, j);
    if (h.length != q) fail(Err::NotAHook, "hook length does not match");
    const int f = h.foot.first;
    std::vector<int> parts = lambda.parts;
    // The rim walk from hand to foot slides rows i..f-1 up by one cell and
    // truncates row f at column j-1.
    for (int r = i; r < f; ++r) parts[r - 1] = lambda.parts[r] - 1;
    parts[f - 1] = j - 1;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return {Partition(std::move(parts)), f - i};
}

namespace {

/// First node (row-major) whose hook length is q, or (0, 0).
std::pair<int, int> find_hook(const Partition& lambda, int q) {
    Partition t = conjugate(lambda);
    for (int i = 1; i <= lambda.rows(); ++i)
        for (int j = 1; j <= lambda.parts[i - 1]; ++j) {
            int len = (lambda.parts[i - 1] - j) + (t.parts[j - 1] - i) + 1;
            if (len == q) return {i, j};
        }
    return {0, 0};
}

}  // namespace

Partition q_core(const Partition& lambda, int q) {
    if (q < 2) fail(Err::SizeMismatch, "q must be at least 2");
    Partition cur = lambda;
    while (true) {
        auto [i, j] = find_hook(cur, q);
        if (i == 0) return cur;
        cur = remove_rim_hook(cur, i, j, q).first;
    }
}

namespace {

long long mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu, size_t t,
                     std::map<std::pair<std::vector<int>, size_t>, long long>& memo) {
    if (lambda.empty()) return 1;
    auto key = std::make_pair(lambda, t);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const int q = mu[t];
    const Partition shape{std::vector<int>(lambda)};
    long long total = 0;
    for (int i = 1; i <= shape.rows(); ++i)
        for (int j = 1; j <= shape.parts[i - 1]; ++j) {
            HookData h = hook_at(shape, i, j);
            if (h.length != q) continue;
            auto [rest, leg] = remove_rim_hook(shape, i, j, q);
            long long sub = mn_recurse(rest.parts, mu, t + 1, memo);
            total += (leg % 2 == 0) ? sub : -sub;
        }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        fail(Err::SizeMismatch, "lambda and mu must partition the same n");
    std::map<std::pair<std::vector<int>, size_t>, long long> memo;
    return mn_recurse(lambda.parts, mu.parts, 0, memo);
}

long long degree_hook_length(const Partition& lambda) {
    long long fact = 1;
    for (int i = 2; i <= lambda.n(); ++i) fact *= i;
    Partition t = conjugate(lambda);
    for (int i = 1; i <= lambda.rows(); ++i)
        for (int j = 1; j <= lambda.parts[i - 1]; ++j) {
            long long len = (lambda.parts[i - 1] - j) + (t.parts[j - 1] - i) + 1;
            if (fact % len != 0)
                fail(Err::IntegralityViolation, "hook product does not divide n!");
            fact /= len;
        }
    return fact;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        emit_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) fail(Err::SizeMismatch, "n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

MnTable mn_table(int n) {
    if (n < 1 || n > 12) fail(Err::NTooLarge, "table is limited to 1 <= n <= 12");
    MnTable table;
    table.n = n;
    table.partitions = partitions_of(n);
    for (const auto& lambda : table.partitions) {
        std::vector<long long> row;
        for (const auto& mu : table.partitions) row.push_back(mn_character(lambda, mu));
        table.values.push_back(std::move(row));
    }
    return table;
}

}  // namespace psing
