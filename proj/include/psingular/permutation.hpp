#pragma once

#include <string>
#include <vector>

namespace psing {

/// Permutation of {0, ..., n-1}, stored as the image array.
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> imgs);

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int point) const { return images[point]; }
    bool is_identity() const;

    /// Composition acting left-to-right on the argument: (a*b)(x) = a(b(x)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    /// Cycle lengths including fixed points, weakly decreasing.
    std::vector<int> cycle_type() const;

    /// Pads with fixed points up to `degree`.
    Permutation extended(int degree) const;

    bool operator==(const Permutation& other) const { return images == other.images; }
    bool operator<(const Permutation& other) const { return images < other.images; }
};

/// Throws InvalidPermutation unless `images` is a bijection.
void check_bijection(const std::vector<int>& images);

/// Parses one line of disjoint-cycle notation with 0-based points,
/// e.g. "(0 1 2 3)(4 5)". Fixed points omitted; "()" or an empty line of
/// cycles denotes the identity. Degree is 1 + max point mentioned.
Permutation parse_cycles(const std::string& line);

/// Parses a whole generator file: one generator per nonempty, non-'#' line.
/// All generators are extended to the common degree.
std::vector<Permutation> parse_generator_lines(const std::string& text);

std::string format_cycles(const Permutation& p);

}  // namespace psing
