#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "psingular/group.hpp"
#include "psingular/spectra.hpp"

namespace psing {

constexpr int kOracleCap = 1024;
constexpr double kSpectrumMatchTol = 1e-6;

/// Dense symmetric 0/1 adjacency matrix, bits packed row-major, LSB first.
struct AdjacencyMatrix {
    int n = 0;
    std::vector<uint64_t> bits;

    explicit AdjacencyMatrix(int n_ = 0)
        : n(n_), bits((static_cast<size_t>(n_) * n_ + 63) / 64, 0) {}

    bool get(int i, int j) const {
        size_t idx = static_cast<size_t>(i) * n + j;
        return (bits[idx >> 6] >> (idx & 63)) & 1;
    }
    void set_edge(int i, int j) {
        size_t a = static_cast<size_t>(i) * n + j;
        size_t b = static_cast<size_t>(j) * n + i;
        bits[a >> 6] |= uint64_t(1) << (a & 63);
        bits[b >> 6] |= uint64_t(1) << (b & 63);
    }
};

/// A[u][v] = 1 iff v u^{-1} is p-singular. Throws DimensionCap past the cap.
AdjacencyMatrix build_adjacency(const FiniteGroup& G, const PSingularProfile& prof);

long long edge_count(const AdjacencyMatrix& A);

/// Cyclic Jacobi. Rotates until the off-diagonal Frobenius norm drops below
/// tol (hence below tol*n); eigenvalues returned in descending order.
std::vector<double> symmetric_eigenvalues(const AdjacencyMatrix& A, double tol = 1e-9);

struct ComponentsResult {
    int count = 0;
    std::vector<int> diameters;  // one per component, in discovery order
};

/// BFS components; each component's diameter is the max eccentricity over
/// all of its vertices.
ComponentsResult components_and_diameter(const AdjacencyMatrix& A);

/// Sorted multiset comparison of (value, multiplicity) pairs against raw
/// numeric output; throws CardinalityMismatch when the counts differ.
bool compare_spectra(const std::vector<std::pair<long long, long long>>& exact,
                     const std::vector<double>& numeric, double tol = kSpectrumMatchTol);

/// Regression fixture format: ceil(n*n/8) bytes, row-major, LSB first.
void dump_packed_bits(const AdjacencyMatrix& A, const std::string& path);
AdjacencyMatrix load_packed_bits(int n, const std::string& path);

}  // namespace psing
