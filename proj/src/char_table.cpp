#include "psingular/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "psingular/errors.hpp"

namespace psing {

ClassAlgebra class_constants(const FiniteGroup& G) {
    const auto& classes = G.conjugacy_classes();
    const auto& class_of = G.class_of_element();
    const int k = static_cast<int>(classes.size());
    ClassAlgebra A;
    A.num_classes = k;
    A.constants.assign(static_cast<size_t>(k) * k * k, 0);
    for (int m = 0; m < k; ++m) {
        int z = classes[m].representative;
        for (int x = 0; x < G.order(); ++x) {
            int y = G.mul(G.inv(x), z);
            size_t idx = (static_cast<size_t>(class_of[x]) * k + class_of[y]) * k + m;
            ++A.constants[idx];
        }
    }
    return A;
}

namespace {

long long mod_pow(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

long long mod_inv(long long a, long long mod) { return mod_pow(a, mod - 2, mod); }

long long splitting_prime(int exponent, long long order) {
    for (long long l = exponent + 1;; l += exponent) {
        if (l <= 2 * order) continue;
        if (is_prime(l)) return l;
    }
}

long long primitive_root(long long l) {
    std::vector<int> qs = prime_divisors(l - 1);
    for (long long g = 2; g < l; ++g) {
        bool ok = true;
        for (int q : qs)
            if (mod_pow(g, (l - 1) / q, l) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    fail(Err::ConvergenceFailure, "no primitive root found");
}

struct ModMatrix {
    int n = 0;
    long long l = 0;
    std::vector<long long> a;

    ModMatrix(int n_, long long l_) : n(n_), l(l_), a(static_cast<size_t>(n_) * n_, 0) {}
    long long& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

ModMatrix mat_mul(const ModMatrix& A, const ModMatrix& B) {
    ModMatrix C(A.n, A.l);
    for (int i = 0; i < A.n; ++i)
        for (int t = 0; t < A.n; ++t) {
            long long v = A.at(i, t);
            if (v == 0) continue;
            for (int j = 0; j < A.n; ++j) C.at(i, j) = (C.at(i, j) + v * B.at(t, j)) % A.l;
        }
    return C;
}

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence; returns
/// coefficients lowest degree first, leading coefficient 1.
std::vector<long long> char_poly(const ModMatrix& A) {
    const int d = A.n;
    const long long l = A.l;
    std::vector<long long> c(d + 1, 0);
    c[d] = 1;
    ModMatrix B = A;
    for (int m = 1; m <= d; ++m) {
        if (m > 1) {
            ModMatrix shifted = B;
            for (int i = 0; i < d; ++i)
                shifted.at(i, i) = (shifted.at(i, i) + c[d - m + 1]) % l;
            B = mat_mul(A, shifted);
        }
        long long tr = 0;
        for (int i = 0; i < d; ++i) tr = (tr + B.at(i, i)) % l;
        c[d - m] = (l - tr % l) % l * mod_inv(m, l) % l;
    }
    return c;
}

std::vector<long long> poly_roots(const std::vector<long long>& p, long long l) {
    std::vector<long long> roots;
    for (long long x = 0; x < l; ++x) {
        long long v = 0;
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) v = (v * x + p[i]) % l;
        if (v == 0) roots.push_back(x);
    }
    return roots;
}

/// Reduced row echelon form in place; returns pivot column per rank row.
std::vector<int> rref(ModMatrix& M, int cols) {
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < cols && rank < M.n; ++col) {
        int pivot = -1;
        for (int r = rank; r < M.n; ++r)
            if (M.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(M.a[static_cast<size_t>(rank) * M.n + j],
                                                 M.a[static_cast<size_t>(pivot) * M.n + j]);
        long long inv = mod_inv(M.at(rank, col), M.l);
        for (int j = 0; j < cols; ++j) M.at(rank, j) = M.at(rank, j) * inv % M.l;
        for (int r = 0; r < M.n; ++r) {
            if (r == rank || M.at(r, col) == 0) continue;
            long long f = M.at(r, col);
            for (int j = 0; j < cols; ++j)
                M.at(r, j) = (M.at(r, j) - f * M.at(rank, j) % M.l + M.l) % M.l;
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

/// Nullspace basis of a square matrix, deterministic: one vector per free
/// column in increasing column order.
std::vector<std::vector<long long>> nullspace(ModMatrix M) {
    const int d = M.n;
    std::vector<int> pivots = rref(M, d);
    std::vector<int> pivot_of_col(d, -1);
    for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<int>(r);
    std::vector<std::vector<long long>> basis;
    for (int col = 0; col < d; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<long long> v(d, 0);
        v[col] = 1;
        for (int c = 0; c < d; ++c)
            if (pivot_of_col[c] >= 0)
                v[c] = (M.l - M.at(pivot_of_col[c], col)) % M.l;
        basis.push_back(std::move(v));
    }
    return basis;
}

using Basis = std::vector<std::vector<long long>>;  // vectors in global coordinates

/// Matrix of the action of M on span(basis) in basis coordinates. The span
/// must be M-invariant.
ModMatrix restrict_action(const ModMatrix& M, const Basis& basis) {
    const int k = M.n;
    const int d = static_cast<int>(basis.size());
    const long long l = M.l;
    // Augmented system [B | M*B] with basis vectors as columns, solved by RREF.
    std::vector<long long> wide(static_cast<size_t>(k) * 2 * d, 0);
    auto W = [&](int i, int j) -> long long& { return wide[static_cast<size_t>(i) * 2 * d + j]; };
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < k; ++i) {
            W(i, j) = basis[j][i];
            long long acc = 0;
            for (int t = 0; t < k; ++t)
                if (basis[j][t]) acc = (acc + M.at(i, t) * basis[j][t]) % l;
            W(i, d + j) = acc;
        }
    // RREF over the wide buffer.
    int rank = 0;
    for (int col = 0; col < d && rank < k; ++col) {
        int pivot = -1;
        for (int r = rank; r < k; ++r)
            if (W(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) fail(Err::CertificationFailed, "basis is not independent");
        if (pivot != rank)
            for (int j = 0; j < 2 * d; ++j) std::swap(W(rank, j), W(pivot, j));
        long long inv = mod_inv(W(rank, col), l);
        for (int j = 0; j < 2 * d; ++j) W(rank, j) = W(rank, j) * inv % l;
        for (int r = 0; r < k; ++r) {
            if (r == rank || W(r, col) == 0) continue;
            long long f = W(r, col);
            for (int j = 0; j < 2 * d; ++j) W(r, j) = (W(r, j) - f * W(rank, j) % l + l) % l;
        }
        ++rank;
    }
    for (int r = rank; r < k; ++r)
        for (int j = d; j < 2 * d; ++j)
            if (W(r, j) != 0) fail(Err::CertificationFailed, "subspace is not invariant");
    ModMatrix R(d, l);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) R.at(i, j) = W(i, d + j);
    return R;
}

std::vector<long long> combine(const Basis& basis, const std::vector<long long>& coords,
                               long long l) {
    const int k = static_cast<int>(basis[0].size());
    std::vector<long long> v(k, 0);
    for (size_t j = 0; j < basis.size(); ++j) {
        if (coords[j] == 0) continue;
        for (int i = 0; i < k; ++i) v[i] = (v[i] + coords[j] * basis[j][i]) % l;
    }
    return v;
}

long long integer_sqrt(long long n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

struct RawRow {
    int degree;
    std::vector<CyclotomicInt> values;
};

}  // namespace

CharacterTable character_table(const FiniteGroup& G) {
    const auto& classes = G.conjugacy_classes();
    const auto& class_of = G.class_of_element();
    const int k = static_cast<int>(classes.size());
    const long long n = G.order();
    const int e = G.exponent();
    const long long l = splitting_prime(e, n);
    const long long g = primitive_root(l);

    ClassAlgebra A = class_constants(G);
    std::vector<ModMatrix> mats;
    mats.reserve(k);
    for (int i = 0; i < k; ++i) {
        ModMatrix M(k, l);
        for (int j = 0; j < k; ++j)
            for (int m = 0; m < k; ++m) M.at(j, m) = A.at(i, j, m) % l;
        mats.push_back(std::move(M));
    }

    std::vector<Basis> spaces;
    {
        Basis full;
        for (int i = 0; i < k; ++i) {
            std::vector<long long> eV(k, 0);
            eV[i] = 1;
            full.push_back(std::move(eV));
        }
        spaces.push_back(std::move(full));
    }
    for (int i = 1; i < k; ++i) {
        bool done = std::all_of(spaces.begin(), spaces.end(),
                                [](const Basis& b) { return b.size() == 1; });
        if (done) break;
        std::vector<Basis> next;
        for (const Basis& V : spaces) {
            if (V.size() == 1) {
                next.push_back(V);
                continue;
            }
            ModMatrix R = restrict_action(mats[i], V);
            std::vector<long long> roots = poly_roots(char_poly(R), l);
            size_t dim_sum = 0;
            for (long long r : roots) {
                ModMatrix shifted = R;
                for (int t = 0; t < R.n; ++t) shifted.at(t, t) = (shifted.at(t, t) - r % l + l) % l;
                auto null_basis = nullspace(std::move(shifted));
                if (null_basis.empty()) continue;
                Basis sub;
                for (const auto& coords : null_basis) sub.push_back(combine(V, coords, l));
                dim_sum += sub.size();
                next.push_back(std::move(sub));
            }
            if (dim_sum != V.size())
                fail(Err::CertificationFailed, "class matrix failed to split the space");
        }
        spaces = std::move(next);
    }
    if (static_cast<int>(spaces.size()) != k)
        fail(Err::CertificationFailed, "expected one common eigenvector per class");

    // Normalize each eigenvector so the identity coordinate is 1; the entries
    // are then the central character values w(K_s) mod l.
    std::vector<std::vector<long long>> omega;
    for (const Basis& V : spaces) {
        std::vector<long long> v = V[0];
        if (v[0] == 0) fail(Err::CertificationFailed, "eigenvector with zero identity coordinate");
        long long scale = mod_inv(v[0], l);
        for (auto& x : v) x = x * scale % l;
        omega.push_back(std::move(v));
    }

    std::vector<long long> size_inv(k);
    for (int s = 0; s < k; ++s) size_inv[s] = mod_inv(classes[s].size % l, l);
    std::vector<int> inverse_class(k);
    for (int s = 0; s < k; ++s) inverse_class[s] = class_of[G.inv(classes[s].representative)];

    // Power maps: pc[s][t] = class of rep(K_s)^t.
    std::vector<std::vector<int>> power_class(k);
    for (int s = 0; s < k; ++s) {
        int o = classes[s].element_order;
        power_class[s].resize(o);
        int x = 0;
        for (int t = 0; t < o; ++t) {
            power_class[s][t] = class_of[x];
            x = G.mul(x, classes[s].representative);
        }
    }

    std::vector<RawRow> rows;
    for (const auto& w : omega) {
        long long s2 = 0;
        for (int s = 0; s < k; ++s)
            s2 = (s2 + w[s] * w[inverse_class[s]] % l * size_inv[s]) % l;
        if (s2 == 0) fail(Err::CertificationFailed, "degree norm vanished mod l");
        long long d2 = n % l * mod_inv(s2, l) % l;
        long long d = integer_sqrt(d2);
        if (d * d != d2 || d < 1 || d * d > n)
            fail(Err::CertificationFailed, "degree is not a small integer square root");

        std::vector<long long> chi_mod(k);
        for (int s = 0; s < k; ++s) chi_mod[s] = d % l * w[s] % l * size_inv[s] % l;

        RawRow row;
        row.degree = static_cast<int>(d);
        for (int s = 0; s < k; ++s) {
            int o = classes[s].element_order;
            long long w_o = mod_pow(g, (l - 1) / o, l);
            long long w_o_inv = mod_inv(w_o, l);
            long long o_inv = mod_inv(o, l);
            std::vector<long long> raw(e, 0);
            long long mult_total = 0;
            for (int u = 0; u < o; ++u) {
                long long acc = 0;
                long long wp = 1;  // w_o^{-u t}
                long long step = mod_pow(w_o_inv, u, l);
                for (int t = 0; t < o; ++t) {
                    acc = (acc + chi_mod[power_class[s][t]] * wp) % l;
                    wp = wp * step % l;
                }
                long long m_u = acc * o_inv % l;
                if (m_u > n)
                    fail(Err::CertificationFailed, "root-of-unity multiplicity out of range");
                mult_total += m_u;
                raw[static_cast<size_t>(u) * (e / o) % e] += m_u;
            }
            if (mult_total != d)
                fail(Err::CertificationFailed, "multiplicities do not sum to the degree");
            row.values.push_back(CyclotomicInt(e, std::move(raw)));
        }
        rows.push_back(std::move(row));
    }

    // Principal row first, the rest by degree then value vector.
    auto is_principal = [&](const RawRow& r) {
        CyclotomicInt one = CyclotomicInt::integer(e, 1);
        return std::all_of(r.values.begin(), r.values.end(),
                           [&](const CyclotomicInt& v) { return v == one; });
    };
    std::stable_sort(rows.begin(), rows.end(), [&](const RawRow& a, const RawRow& b) {
        bool pa = is_principal(a), pb = is_principal(b);
        if (pa != pb) return pa;
        if (a.degree != b.degree) return a.degree < b.degree;
        for (int s = 0; s < k; ++s) {
            if (a.values[s] == b.values[s]) continue;
            return a.values[s] < b.values[s];
        }
        return false;
    });
    if (rows.empty() || !is_principal(rows.front()))
        fail(Err::CertificationFailed, "missing principal character");

    CharacterTable T;
    T.exponent = e;
    T.group_order = n;
    T.inverse_class = inverse_class;
    for (int s = 0; s < k; ++s) {
        T.class_orders.push_back(classes[s].element_order);
        T.class_sizes.push_back(classes[s].size);
    }
    for (auto& row : rows) {
        T.degrees.push_back(row.degree);
        T.values.push_back(std::move(row.values));
    }

    long long degree_sum = 0;
    for (int d : T.degrees) degree_sum += static_cast<long long>(d) * d;
    if (degree_sum != n)
        fail(Err::CertificationFailed, "degree squares do not sum to the group order");
    for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) {
            CyclotomicInt acc = CyclotomicInt::zero(e);
            for (int j = 0; j < k; ++j)
                acc += (T.values[r][j] * T.values[s][inverse_class[j]]).scaled(T.class_sizes[j]);
            CyclotomicInt expect = CyclotomicInt::integer(e, r == s ? n : 0);
            if (acc != expect)
                fail(Err::CertificationFailed, "row orthogonality failed");
        }
    return T;
}

std::vector<int> restrict_to_quotient(const FiniteGroup& G, const CharacterTable& T,
                                      const SubgroupHandle& N) {
    const auto& class_of = G.class_of_element();
    std::vector<char> meets(T.num_classes(), 0);
    for (int x : N.members) meets[class_of[x]] = 1;
    std::vector<int> rows;
    for (int r = 0; r < T.num_rows(); ++r) {
        CyclotomicInt deg = CyclotomicInt::integer(T.exponent, T.degrees[r]);
        bool keep = true;
        for (int j = 0; j < T.num_classes() && keep; ++j)
            if (meets[j] && T.values[r][j] != deg) keep = false;
        if (keep) rows.push_back(r);
    }
    return rows;
}

nlohmann::ordered_json table_to_json(const CharacterTable& T) {
    nlohmann::ordered_json j;
    j["exponent"] = T.exponent;
    j["class_orders"] = T.class_orders;
    j["class_sizes"] = T.class_sizes;
    j["degrees"] = T.degrees;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : T.values) {
        auto jr = nlohmann::ordered_json::array();
        for (const auto& v : row) jr.push_back(v.coeffs());
        rows.push_back(std::move(jr));
    }
    j["values"] = std::move(rows);
    return j;
}

CharacterTable table_from_json(const nlohmann::json& j) {
    CharacterTable T;
    T.exponent = j.at("exponent").get<int>();
    T.class_orders = j.at("class_orders").get<std::vector<int>>();
    T.class_sizes = j.at("class_sizes").get<std::vector<int>>();
    T.degrees = j.at("degrees").get<std::vector<int>>();
    T.group_order = std::accumulate(T.class_sizes.begin(), T.class_sizes.end(), 0LL);
    for (const auto& jr : j.at("values")) {
        std::vector<CyclotomicInt> row;
        for (const auto& jv : jr)
            row.push_back(CyclotomicInt(T.exponent, jv.get<std::vector<long long>>()));
        T.values.push_back(std::move(row));
    }
    // The inverse-class pairing is recovered from the values: conjugating a
    // column entrywise yields the column of the inverse class, and columns
    // of a character table are pairwise distinct.
    const int k = T.num_classes();
    T.inverse_class.assign(k, -1);
    for (int jcol = 0; jcol < k; ++jcol) {
        for (int m = 0; m < k; ++m) {
            bool match = true;
            for (int r = 0; r < T.num_rows() && match; ++r)
                if (T.values[r][m] != T.values[r][jcol].conj()) match = false;
            if (match) {
                T.inverse_class[jcol] = m;
                break;
            }
        }
        if (T.inverse_class[jcol] < 0)
            fail(Err::CertificationFailed, "no inverse class column found");
    }
    return T;
}

}  // namespace psing
