#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "psingular/char_table.hpp"
#include "psingular/errors.hpp"
#include "psingular/group.hpp"
#include "psingular/partitions.hpp"

using namespace psing;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

/// Every q-core reachable by some removal order.
std::set<std::vector<int>> all_cores(const Partition& lambda, int q,
                                     std::map<std::vector<int>, std::set<std::vector<int>>>& memo) {
    auto it = memo.find(lambda.parts);
    if (it != memo.end()) return it->second;
    std::set<std::vector<int>> cores;
    bool any = false;
    for (int i = 1; i <= lambda.rows(); ++i)
        for (int j = 1; j <= lambda.parts[i - 1]; ++j) {
            if (hook_at(lambda, i, j).length != q) continue;
            any = true;
            auto sub = all_cores(remove_rim_hook(lambda, i, j, q).first, q, memo);
            cores.insert(sub.begin(), sub.end());
        }
    if (!any) cores.insert(lambda.parts);
    memo[lambda.parts] = cores;
    return cores;
}

}  // namespace

TEST_CASE("partition validation and conjugation") {
    CHECK(P({3, 1}).n() == 4);
    CHECK_THROWS_AS(P({1, 3}), Error);
    CHECK_THROWS_AS(P({2, 0}), Error);
    CHECK(conjugate(P({4})) == P({1, 1, 1, 1}));
    CHECK(conjugate(P({2, 1})) == P({2, 1}));
    CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
    for (const auto& lambda : partitions_of(7))
        CHECK(conjugate(conjugate(lambda)) == lambda);
}

TEST_CASE("hook data") {
    HookData h = hook_at(P({4, 3, 1}), 1, 2);
    CHECK(h.length == (4 - 2) + (2 - 1) + 1);
    CHECK(h.hand == std::make_pair(1, 4));
    CHECK(h.foot == std::make_pair(2, 2));
    CHECK(hook_at(P({4, 3, 1}), 1, 1).length == 6);
    CHECK_THROWS_AS(hook_at(P({4, 3, 1}), 3, 2), Error);
}

TEST_CASE("rim hook removal") {
    auto [r1, l1] = remove_rim_hook(P({3}), 1, 1, 3);
    CHECK(r1.empty());
    CHECK(l1 == 0);

    auto [r2, l2] = remove_rim_hook(P({2, 1}), 1, 1, 3);
    CHECK(r2.empty());
    CHECK(l2 == 1);

    auto [r3, l3] = remove_rim_hook(P({3, 2}), 1, 2, 3);
    CHECK(r3 == P({1, 1}));
    CHECK(l3 == 1);

    auto [r4, l4] = remove_rim_hook(P({4, 4, 3}), 1, 2, 5);
    CHECK(r4 == P({3, 2, 1}));
    CHECK(l4 == 2);

    CHECK_THROWS_AS(remove_rim_hook(P({3, 2}), 1, 2, 4), Error);
}

TEST_CASE("removal keeps partitions valid") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int i = 1; i <= lambda.rows(); ++i)
                for (int j = 1; j <= lambda.parts[i - 1]; ++j) {
                    int q = hook_at(lambda, i, j).length;
                    auto [rest, leg] = remove_rim_hook(lambda, i, j, q);
                    CHECK(rest.n() == n - q);
                    CHECK(leg >= 0);
                }
}

TEST_CASE("q-cores") {
    CHECK(q_core(P({5}), 7) == P({5}));
    CHECK(q_core(P({2, 1}), 3).empty());
    CHECK(q_core(P({4, 1}), 3) == P({1, 1}));
    CHECK(q_core(P({6, 3, 1}), 2).empty());
}

TEST_CASE("q-core is removal-order independent") {
    for (int q : {2, 3, 5})
        for (int n = 1; n <= 8; ++n) {
            std::map<std::vector<int>, std::set<std::vector<int>>> memo;
            for (const auto& lambda : partitions_of(n)) {
                auto cores = all_cores(lambda, q, memo);
                CAPTURE(q);
                CAPTURE(lambda.parts);
                REQUIRE(cores.size() == 1);
                CHECK(*cores.begin() == q_core(lambda, q).parts);
            }
        }
}

TEST_CASE("murnaghan-nakayama values") {
    CHECK(mn_character(P({3}), P({3})) == 1);
    CHECK(mn_character(P({3}), P({2, 1})) == 1);
    CHECK(mn_character(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(mn_character(P({2, 1}), P({3})) == -1);
    CHECK(mn_character(P({2, 1}), P({2, 1})) == 0);
    // S5 row for (3,2) over the standard class list.
    CHECK(mn_character(P({3, 2}), P({1, 1, 1, 1, 1})) == 5);
    CHECK(mn_character(P({3, 2}), P({2, 1, 1, 1})) == 1);
    CHECK(mn_character(P({3, 2}), P({2, 2, 1})) == 1);
    CHECK(mn_character(P({3, 2}), P({3, 1, 1})) == -1);
    CHECK(mn_character(P({3, 2}), P({3, 2})) == 1);
    CHECK(mn_character(P({3, 2}), P({4, 1})) == -1);
    CHECK(mn_character(P({3, 2}), P({5})) == 0);
    CHECK_THROWS_AS(mn_character(P({3}), P({2})), Error);
}

TEST_CASE("trivial row is all ones") {
    for (const auto& mu : partitions_of(6)) CHECK(mn_character(P({6}), mu) == 1);
}

TEST_CASE("hook length degrees") {
    CHECK(degree_hook_length(P({5})) == 1);
    CHECK(degree_hook_length(P({2, 1})) == 2);
    CHECK(degree_hook_length(P({2, 2})) == 2);
    CHECK(degree_hook_length(P({4, 1})) == 4);
    CHECK(degree_hook_length(P({3, 2})) == 5);
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> ones(n, 1);
        long long sum = 0;
        for (const auto& lambda : partitions_of(n)) {
            long long d = degree_hook_length(lambda);
            CHECK(mn_character(lambda, P(ones)) == d);
            sum += d * d;
        }
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(sum == fact);
    }
}

TEST_CASE("conjugating lambda twists by the sign character") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                int sign = ((n - mu.rows()) % 2 == 0) ? 1 : -1;
                CHECK(mn_character(conjugate(lambda), mu) == sign * mn_character(lambda, mu));
            }
}

TEST_CASE("partition enumeration order") {
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == P({4}));
    CHECK(p4[1] == P({3, 1}));
    CHECK(p4[2] == P({2, 2}));
    CHECK(p4[3] == P({2, 1, 1}));
    CHECK(p4[4] == P({1, 1, 1, 1}));
    CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("mn table matches the group-theoretic table") {
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        MnTable mn = mn_table(n);
        FiniteGroup Sn = FiniteGroup::enumerate_group(catalog("S" + std::to_string(n)));
        CharacterTable T = character_table(Sn);
        const auto& classes = Sn.conjugacy_classes();
        const int k = T.num_classes();
        REQUIRE(static_cast<int>(mn.partitions.size()) == k);

        std::map<std::vector<int>, int> column_of_type;
        for (int j = 0; j < k; ++j)
            column_of_type[Sn.carrier(classes[j].representative).cycle_type()] = j;

        std::multiset<std::vector<long long>> table_rows;
        for (int r = 0; r < k; ++r) {
            std::vector<long long> row;
            for (int j = 0; j < k; ++j) row.push_back(T.values[r][j].rational_value());
            table_rows.insert(std::move(row));
        }
        for (int r = 0; r < k; ++r) {
            std::vector<long long> row(k);
            for (int c = 0; c < k; ++c) {
                std::vector<int> type = mn.partitions[c].parts;
                row[column_of_type.at(type)] = mn.values[r][c];
            }
            CAPTURE(mn.partitions[r].parts);
            CHECK(table_rows.count(row) == 1);
        }
    }
    CHECK_THROWS_AS(mn_table(13), Error);
}
