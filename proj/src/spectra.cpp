#include "psingular/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "psingular/errors.hpp"

namespace psing {

PSingularProfile p_singular_profile(const FiniteGroup& G, int p) {
    if (!is_prime(p)) fail(Err::ParseError, "p must be prime");
    if (G.order() % p != 0)
        fail(Err::PrimeDoesNotDivideOrder, "p does not divide the group order");
    const auto& classes = G.conjugacy_classes();
    PSingularProfile prof;
    prof.prime = p;
    prof.in_omega.assign(G.order(), 0);
    std::vector<int> seed;
    for (size_t k = 0; k < classes.size(); ++k) {
        if (classes[k].element_order % p != 0) continue;
        prof.class_indices.push_back(static_cast<int>(k));
        prof.degree += classes[k].size;
        for (int m : classes[k].members) prof.in_omega[m] = 1;
        seed.push_back(classes[k].representative);
    }
    // Omega_p is conjugation-closed, so its span is already normal.
    prof.span = normal_closure(G, seed);
    prof.component_count = G.order() / prof.span.order();
    prof.core = p_prime_core(G, p);
    prof.core_index = G.order() / prof.core.order();
    return prof;
}

namespace {

/// Eccentricity of the identity inside its component of the Cayley graph on
/// Omega_p; every component is an isomorphic copy, and vertex transitivity
/// makes this eccentricity the component diameter.
int component_diameter(const FiniteGroup& G, const PSingularProfile& prof) {
    std::vector<int> generators;
    for (int x = 0; x < G.order(); ++x)
        if (prof.in_omega[x]) generators.push_back(x);
    std::vector<int> dist(G.order(), -1);
    std::vector<int> queue{0};
    dist[0] = 0;
    int far = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int a : generators) {
            int v = G.mul(a, u);
            if (dist[v] >= 0) continue;
            dist[v] = dist[u] + 1;
            far = std::max(far, dist[v]);
            queue.push_back(v);
        }
    }
    if (static_cast<long long>(queue.size()) != prof.span.order())
        fail(Err::CertificationFailed, "component size differs from the span order");
    return far;
}

}  // namespace

long long row_eigenvalue(const CharacterTable& T, const PSingularProfile& prof, int row) {
    CyclotomicInt acc = CyclotomicInt::zero(T.exponent);
    for (int j : prof.class_indices)
        acc += T.values[row][j].scaled(T.class_sizes[j]);
    if (!acc.is_rational_integer())
        fail(Err::IntegralityViolation, "character sum over the p-singular set is irrational");
    long long s = acc.rational_value();
    if (s % T.degrees[row] != 0)
        fail(Err::IntegralityViolation, "eigenvalue is not an integer");
    return s / T.degrees[row];
}

SpectrumReport spectrum(const FiniteGroup& G, const CharacterTable& T,
                        const PSingularProfile& prof) {
    if (T.group_order != G.order() || prof.in_omega.size() != static_cast<size_t>(G.order()))
        fail(Err::SizeMismatch, "table and profile must come from the same group");
    if (prof.degree == 0) fail(Err::SizeMismatch, "empty connection set");

    std::map<long long, long long> agg;
    for (int r = 0; r < T.num_rows(); ++r) {
        long long value = row_eigenvalue(T, prof, r);
        agg[value] += static_cast<long long>(T.degrees[r]) * T.degrees[r];
    }
    SpectrumReport rep;
    for (auto it = agg.rbegin(); it != agg.rend(); ++it) rep.eigs.emplace_back(it->first, it->second);
    long long total = 0, trace = 0;
    for (auto [v, m] : rep.eigs) {
        total += m;
        trace += v * m;
        rep.energy += (v < 0 ? -v : v) * m;
        if (v == 0) rep.nullity = m;
    }
    if (total != G.order() || trace != 0)
        fail(Err::CertificationFailed, "spectrum multiplicities are inconsistent");
    rep.singular = rep.nullity > 0;
    rep.hyperenergetic = rep.energy > 2 * static_cast<long long>(G.order()) - 2;
    rep.bound_additive = prof.core_index + prof.component_count * (prof.degree - 1);
    rep.bound_sqrt = std::sqrt(static_cast<double>(G.order()) * prof.degree +
                               static_cast<double>(prof.core_index) * (prof.core_index - 1));
    rep.diameter = component_diameter(G, prof);
    return rep;
}

bool principal_block_membership(const CharacterTable& T, const PSingularProfile& prof, int row) {
    CyclotomicInt acc = CyclotomicInt::zero(T.exponent);
    for (int j : prof.class_indices)
        acc += T.values[row][j].scaled(T.class_sizes[j]);
    // Omega_p is a Galois-closed union of classes, so the sum is rational.
    return acc.rational_value() != 0;
}

BlockPartition block_partition(const CharacterTable& T, int p) {
    const int k = T.num_classes();
    const int rows = T.num_rows();
    std::vector<int> regular;
    for (int j = 0; j < k; ++j)
        if (T.class_orders[j] % p != 0) regular.push_back(j);

    std::vector<int> parent(rows);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int r = 0; r < rows; ++r)
        for (int s = r + 1; s < rows; ++s) {
            CyclotomicInt acc = CyclotomicInt::zero(T.exponent);
            for (int j : regular)
                acc += (T.values[r][j] * T.values[s][T.inverse_class[j]]).scaled(T.class_sizes[j]);
            if (!acc.is_zero()) parent[find(r)] = find(s);
        }

    std::map<int, std::vector<int>> groups;
    for (int r = 0; r < rows; ++r) groups[find(r)].push_back(r);
    BlockPartition part;
    for (auto& [root, members] : groups) part.blocks.push_back(std::move(members));
    std::sort(part.blocks.begin(), part.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (size_t b = 0; b < part.blocks.size(); ++b)
        if (std::find(part.blocks[b].begin(), part.blocks[b].end(), 0) != part.blocks[b].end())
            part.principal_index = static_cast<int>(b);
    return part;
}

long long nullity_via_blocks(const CharacterTable& T, const BlockPartition& blocks) {
    long long inside = 0;
    for (int r : blocks.blocks[blocks.principal_index])
        inside += static_cast<long long>(T.degrees[r]) * T.degrees[r];
    return T.group_order - inside;
}

bool Verdict::passed() const {
    return std::all_of(clauses.begin(), clauses.end(),
                       [](const Clause& c) { return !c.applicable || c.ok; });
}

Verdict verify_theorem_energy(const FiniteGroup& G, const CharacterTable& T, int p) {
    if (!is_p_solvable(G, p)) fail(Err::NotPSolvable, "the group is not p-solvable");
    PSingularProfile prof = p_singular_profile(G, p);
    SpectrumReport rep = spectrum(G, T, prof);

    Verdict v;
    v.name = "energy";
    v.clauses.push_back({"nullity_equals_order_minus_core_index", true,
                         rep.nullity == G.order() - prof.core_index});
    v.clauses.push_back({"integral_spectrum", true, true});
    bool additive_ok = rep.energy >= rep.bound_additive;
    long long sq = static_cast<long long>(G.order()) * prof.degree +
                   prof.core_index * (prof.core_index - 1);
    bool sqrt_ok = rep.energy * rep.energy >= sq;
    v.clauses.push_back({"energy_lower_bound", true, additive_ok && sqrt_ok});
    long long order_p = p_part(G.order(), p);
    v.clauses.push_back({"component_diameter_bound", true, rep.diameter <= order_p});
    return v;
}

bool nil_hypothesis(const FiniteGroup& G, int p) {
    SubgroupHandle core = p_prime_core(G, p);
    FiniteGroup Q = quotient(G, core).group;
    if (p_part(Q.order(), p) == Q.order()) return true;
    return Q.order() % p == 0 && is_frobenius_with_p_kernel(Q, p);
}

Verdict verify_theorem_nil(const FiniteGroup& G, const CharacterTable& T, int p) {
    if (!is_p_solvable(G, p)) fail(Err::NotPSolvable, "the group is not p-solvable");
    if (!nil_hypothesis(G, p))
        fail(Err::HypothesisNotMet,
             "G/O_p' is neither a p-group nor Frobenius with p-kernel");
    PSingularProfile prof = p_singular_profile(G, p);
    SpectrumReport rep = spectrum(G, T, prof);

    long long order_p_prime = G.order() / p_part(G.order(), p);
    Verdict v;
    v.name = "nil";
    v.clauses.push_back({"exact_energy", true,
                         rep.energy == 2 * static_cast<long long>(G.order()) - 2 * order_p_prime});
    v.clauses.push_back({"not_hyperenergetic", true, !rep.hyperenergetic});
    bool span_ok = prof.span.order() == p_part(G.order(), p) * prof.core.order();
    bool census_ok = prof.degree == prof.span.order() - prof.core.order();
    v.clauses.push_back({"singular_set_is_span_minus_core", true, span_ok && census_ok});
    return v;
}

Verdict verify_singularity_predicates(const FiniteGroup& G, const CharacterTable& T, int p) {
    PSingularProfile prof = p_singular_profile(G, p);
    SpectrumReport rep = spectrum(G, T, prof);

    long long fitting_order = fitting_subgroup(G).order();
    bool fitting_hyp = p_part(fitting_order, p) != fitting_order;
    bool odd_hyp = p > 2 && p_core(G, p).order() == 1;
    bool nilpotent = fitting_order == G.order();
    bool nilpotent_hyp = nilpotent && p_part(G.order(), p) != G.order();

    Verdict v;
    v.name = "singularity";
    v.clauses.push_back({"fitting_not_a_p_group", fitting_hyp, !fitting_hyp || rep.singular});
    v.clauses.push_back({"odd_p_with_trivial_p_core", odd_hyp, !odd_hyp || rep.singular});
    v.clauses.push_back({"nilpotent_not_a_p_group", nilpotent_hyp, !nilpotent_hyp || rep.singular});
    return v;
}

Verdict verify_corollary_solvable(const FiniteGroup& G) {
    std::vector<int> primes = prime_divisors(G.order());
    for (int p : primes)
        if (!is_p_solvable(G, p)) fail(Err::NotPSolvable, "the group is not solvable");
    Verdict v;
    v.name = "solvable";
    if (primes.empty()) {
        v.clauses.push_back({"at_most_one_nonsingular_prime", true, true});
        return v;
    }
    CharacterTable T = character_table(G);
    int nonsingular = 0;
    for (int p : primes) {
        SpectrumReport rep = spectrum(G, T, p_singular_profile(G, p));
        if (!rep.singular) ++nonsingular;
    }
    v.clauses.push_back({"at_most_one_nonsingular_prime", true, nonsingular <= 1});
    return v;
}

Verdict verify_corollary_large(const FiniteGroup& G) {
    FiniteGroup C6 = FiniteGroup::enumerate_group(catalog("C6"));
    FiniteGroup prod = direct_product(G, C6);
    CharacterTable T = character_table(prod);
    Verdict v;
    v.name = "large";
    for (int p : prime_divisors(prod.order())) {
        SpectrumReport rep = spectrum(prod, T, p_singular_profile(prod, p));
        v.clauses.push_back({"singular_at_p" + std::to_string(p), true, rep.singular});
    }
    return v;
}

}  // namespace psing
