#pragma once

#include <utility>
#include <vector>

namespace psing {

/// Integer partition; the empty partition (of 0) is allowed.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int n() const;
    int rows() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

/// Hook at the 1-based node (i, j): arm to the right, leg below.
struct HookData {
    int row, col;
    int length;
    std::pair<int, int> hand;  // (i, lambda_i)
    std::pair<int, int> foot;  // (lambda'_j, j)
};

Partition conjugate(const Partition& lambda);

HookData hook_at(const Partition& lambda, int i, int j);

/// Deletes the rim hook with corner (i, j), which must have length q.
/// Returns the smaller partition and the leg length (rows spanned minus 1).
std::pair<Partition, int> remove_rim_hook(const Partition& lambda, int i, int j, int q);

/// Repeated rim-hook removal until no hook of length q remains; the result
/// does not depend on the removal order.
Partition q_core(const Partition& lambda, int q);

/// Murnaghan-Nakayama recursion for the symmetric-group character chi^lambda
/// at the class of cycle type mu.
long long mn_character(const Partition& lambda, const Partition& mu);

/// n! / product of hook lengths; equals mn_character(lambda, (1^n)).
long long degree_hook_length(const Partition& lambda);

/// All partitions of n in descending lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

struct MnTable {
    int n;
    std::vector<Partition> partitions;
    std::vector<std::vector<long long>> values;  // rows = lambda, cols = mu
};

/// Full S_n character table via the recursion; capped at n <= 12.
MnTable mn_table(int n);

}  // namespace psing
