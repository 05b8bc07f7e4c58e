#include "psingular/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "psingular/errors.hpp"

namespace psing {

AdjacencyMatrix build_adjacency(const FiniteGroup& G, const PSingularProfile& prof) {
    const int n = G.order();
    if (n > kOracleCap)
        fail(Err::DimensionCap, "oracle limited to " + std::to_string(kOracleCap) + " vertices");
    AdjacencyMatrix A(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (prof.in_omega[G.mul(v, G.inv(u))]) A.set_edge(u, v);
    return A;
}

long long edge_count(const AdjacencyMatrix& A) {
    long long total = 0;
    for (uint64_t w : A.bits) total += __builtin_popcountll(w);
    return total / 2;
}

std::vector<double> symmetric_eigenvalues(const AdjacencyMatrix& A, double tol) {
    const int n = A.n;
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (A.get(i, j)) at(i, j) = 1.0;

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        off = std::sqrt(2.0 * off);
        if (off < tol) {
            std::vector<double> eig(n);
            for (int i = 0; i < n; ++i) eig[i] = at(i, i);
            std::sort(eig.rbegin(), eig.rend());
            return eig;
        }
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    fail(Err::ConvergenceFailure, "jacobi sweep budget exhausted");
}

namespace {

/// Distances from `start`; unreachable vertices stay -1.
std::vector<int> bfs(const AdjacencyMatrix& A, int start) {
    std::vector<int> dist(A.n, -1);
    std::vector<int> queue{start};
    dist[start] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v = 0; v < A.n; ++v)
            if (dist[v] < 0 && A.get(u, v)) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

}  // namespace

ComponentsResult components_and_diameter(const AdjacencyMatrix& A) {
    ComponentsResult result;
    std::vector<char> seen(A.n, 0);
    for (int v = 0; v < A.n; ++v) {
        if (seen[v]) continue;
        std::vector<int> dist = bfs(A, v);
        std::vector<int> members;
        for (int u = 0; u < A.n; ++u)
            if (dist[u] >= 0) {
                seen[u] = 1;
                members.push_back(u);
            }
        int diameter = 0;
        for (int u : members) {
            std::vector<int> du = bfs(A, u);
            for (int w : members) diameter = std::max(diameter, du[w]);
        }
        ++result.count;
        result.diameters.push_back(diameter);
    }
    return result;
}

bool compare_spectra(const std::vector<std::pair<long long, long long>>& exact,
                     const std::vector<double>& numeric, double tol) {
    std::vector<double> expanded;
    for (auto [value, mult] : exact)
        for (long long i = 0; i < mult; ++i) expanded.push_back(static_cast<double>(value));
    if (expanded.size() != numeric.size())
        fail(Err::CardinalityMismatch, "spectrum sizes differ");
    std::sort(expanded.rbegin(), expanded.rend());
    std::vector<double> sorted = numeric;
    std::sort(sorted.rbegin(), sorted.rend());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (std::fabs(sorted[i] - expanded[i]) > tol) return false;
    return true;
}

void dump_packed_bits(const AdjacencyMatrix& A, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Err::ParseError, "cannot open " + path);
    size_t total_bits = static_cast<size_t>(A.n) * A.n;
    for (size_t byte = 0; byte * 8 < total_bits; ++byte) {
        unsigned char b = 0;
        for (int k = 0; k < 8; ++k) {
            size_t idx = byte * 8 + k;
            if (idx < total_bits && ((A.bits[idx >> 6] >> (idx & 63)) & 1)) b |= 1u << k;
        }
        out.put(static_cast<char>(b));
    }
}

AdjacencyMatrix load_packed_bits(int n, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Err::ParseError, "cannot open " + path);
    AdjacencyMatrix A(n);
    size_t total_bits = static_cast<size_t>(n) * n;
    for (size_t byte = 0; byte * 8 < total_bits; ++byte) {
        int c = in.get();
        if (c < 0) fail(Err::SizeMismatch, "file shorter than the matrix");
        for (int k = 0; k < 8; ++k) {
            size_t idx = byte * 8 + k;
            if (idx < total_bits && ((c >> k) & 1)) A.bits[idx >> 6] |= uint64_t(1) << (idx & 63);
        }
    }
    return A;
}

}  // namespace psing
