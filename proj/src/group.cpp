#include "psingular/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "psingular/errors.hpp"

namespace psing {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> prime_divisors(long long n) {
    std::vector<int> primes;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            primes.push_back(static_cast<int>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) primes.push_back(static_cast<int>(n));
    return primes;
}

long long p_part(long long n, int p) {
    long long q = 1;
    while (n % p == 0) {
        n /= p;
        q *= p;
    }
    return q;
}

bool SubgroupHandle::contains(int element) const {
    return std::binary_search(members.begin(), members.end(), element);
}

FiniteGroup::FiniteGroup(std::vector<uint16_t> mul, std::vector<uint16_t> inv, int order)
    : order_(order), mul_(std::move(mul)), inv_(std::move(inv)) {
    if (mul_.size() != static_cast<size_t>(order_) * order_ || inv_.size() != static_cast<size_t>(order_))
        fail(Err::SizeMismatch, "multiplication table shape mismatch");
}

FiniteGroup FiniteGroup::enumerate_group(const std::vector<Permutation>& generators, int order_cap) {
    if (generators.empty()) fail(Err::InvalidPermutation, "need at least one generator");
    if (order_cap > 65535) fail(Err::OrderCapExceeded, "order cap above table limit 65535");
    const int degree = generators.front().degree();
    for (const auto& g : generators)
        if (g.degree() != degree) fail(Err::InvalidPermutation, "generators have mixed degrees");

    std::vector<Permutation> elems;
    std::map<std::vector<int>, int> index_of;
    std::vector<int> parent, via;
    elems.push_back(Permutation::identity(degree));
    index_of[elems[0].images] = 0;
    parent.push_back(-1);
    via.push_back(-1);

    for (size_t head = 0; head < elems.size(); ++head) {
        Permutation base = elems[head];
        for (size_t t = 0; t < generators.size(); ++t) {
            Permutation cand = base.compose(generators[t]);
            if (index_of.count(cand.images)) continue;
            if (static_cast<int>(elems.size()) >= order_cap)
                fail(Err::OrderCapExceeded,
                     "closure exceeds cap " + std::to_string(order_cap));
            index_of[cand.images] = static_cast<int>(elems.size());
            elems.push_back(std::move(cand));
            parent.push_back(static_cast<int>(head));
            via.push_back(static_cast<int>(t));
        }
    }

    const int n = static_cast<int>(elems.size());
    FiniteGroup G;
    G.order_ = n;
    G.carrier_ = elems;
    G.mul_.assign(static_cast<size_t>(n) * n, 0);
    G.inv_.resize(n);

    std::vector<int> gen_index(generators.size());
    for (size_t t = 0; t < generators.size(); ++t)
        gen_index[t] = index_of.at(generators[t].images);
    G.generator_indices_ = gen_index;

    // Generator columns by direct composition, remaining columns by the
    // BFS decomposition b = parent(b) * gen(via(b)).
    std::vector<char> gen_col(n, 0);
    for (int e : gen_index) gen_col[e] = 1;
    for (int a = 0; a < n; ++a) {
        G.mul_[static_cast<size_t>(a) * n + 0] = static_cast<uint16_t>(a);
        for (size_t t = 0; t < generators.size(); ++t) {
            int e = gen_index[t];
            G.mul_[static_cast<size_t>(a) * n + e] =
                static_cast<uint16_t>(index_of.at(elems[a].compose(generators[t]).images));
        }
    }
    for (int b = 1; b < n; ++b) {
        if (gen_col[b]) continue;
        int pb = parent[b];
        int e = gen_index[via[b]];
        for (int a = 0; a < n; ++a) {
            int ap = G.mul_[static_cast<size_t>(a) * n + pb];
            G.mul_[static_cast<size_t>(a) * n + b] = G.mul_[static_cast<size_t>(ap) * n + e];
        }
    }
    for (int a = 0; a < n; ++a)
        G.inv_[a] = static_cast<uint16_t>(index_of.at(elems[a].inverse().images));
    return G;
}

int FiniteGroup::element_order(int x) const {
    if (element_order_cache_.empty()) {
        element_order_cache_.assign(order_, 0);
        element_order_cache_[0] = 1;
    }
    if (element_order_cache_[x]) return element_order_cache_[x];
    int k = 1, y = x;
    while (y != 0) {
        y = mul(y, x);
        ++k;
    }
    element_order_cache_[x] = k;
    return k;
}

int FiniteGroup::power(int x, long long k) const {
    int o = element_order(x);
    k %= o;
    if (k < 0) k += o;
    int r = 0;
    for (long long i = 0; i < k; ++i) r = mul(r, x);
    return r;
}

const std::vector<ConjugacyClassInfo>& FiniteGroup::conjugacy_classes() const {
    if (!classes_.empty() || order_ == 0) return classes_;
    std::vector<char> seen(order_, 0);
    std::vector<ConjugacyClassInfo> classes;
    for (int x = 0; x < order_; ++x) {
        if (seen[x]) continue;
        ConjugacyClassInfo info;
        for (int g = 0; g < order_; ++g) {
            int y = mul(mul(g, x), inv(g));
            if (!seen[y]) {
                seen[y] = 1;
                info.members.push_back(y);
            }
        }
        std::sort(info.members.begin(), info.members.end());
        info.representative = info.members.front();
        info.size = static_cast<int>(info.members.size());
        info.element_order = element_order(info.representative);
        classes.push_back(std::move(info));
    }
    std::sort(classes.begin(), classes.end(),
              [](const ConjugacyClassInfo& a, const ConjugacyClassInfo& b) {
                  if (a.element_order != b.element_order) return a.element_order < b.element_order;
                  if (a.size != b.size) return a.size < b.size;
                  return a.representative < b.representative;
              });
    classes_ = std::move(classes);
    class_of_.assign(order_, -1);
    for (size_t k = 0; k < classes_.size(); ++k)
        for (int m : classes_[k].members) class_of_[m] = static_cast<int>(k);
    return classes_;
}

const std::vector<int>& FiniteGroup::class_of_element() const {
    conjugacy_classes();
    return class_of_;
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (const auto& cls : conjugacy_classes())
        e = std::lcm(e, static_cast<long long>(cls.element_order));
    return static_cast<int>(e);
}

SubgroupHandle trivial_subgroup() { return SubgroupHandle{{0}}; }

SubgroupHandle whole_group(const FiniteGroup& G) {
    SubgroupHandle H;
    H.members.resize(G.order());
    std::iota(H.members.begin(), H.members.end(), 0);
    return H;
}

SubgroupHandle subgroup_closure(const FiniteGroup& G, const std::vector<int>& seed) {
    std::vector<char> in(G.order(), 0);
    std::vector<int> work;
    in[0] = 1;
    work.push_back(0);
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            work.push_back(x);
        }
    };
    for (int s : seed) {
        add(s);
        add(G.inv(s));
    }
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < work.size(); ++j) add(G.mul(work[i], work[j]));
    SubgroupHandle H;
    for (int x = 0; x < G.order(); ++x)
        if (in[x]) H.members.push_back(x);
    return H;
}

namespace {

std::vector<int> class_saturation(const FiniteGroup& G, const std::vector<int>& seed) {
    std::vector<char> in(G.order(), 0);
    std::vector<int> out;
    for (int s : seed) {
        for (int g = 0; g < G.order(); ++g) {
            int y = G.mul(G.mul(g, s), G.inv(g));
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    }
    return out;
}

}  // namespace

SubgroupHandle normal_closure(const FiniteGroup& G, const std::vector<int>& seed) {
    if (seed.empty()) fail(Err::SizeMismatch, "normal closure needs a nonempty seed");
    // The subgroup generated by full conjugacy classes is conjugation-stable.
    return subgroup_closure(G, class_saturation(G, seed));
}

bool is_normal(const FiniteGroup& G, const SubgroupHandle& H) {
    for (int h : H.members)
        for (int g = 0; g < G.order(); ++g)
            if (!H.contains(G.mul(G.mul(g, h), G.inv(g)))) return false;
    return true;
}

namespace {

SubgroupHandle join_of_class_closures(const FiniteGroup& G,
                                      const std::function<bool(int)>& keep_order) {
    std::vector<int> seed;
    for (const auto& cls : G.conjugacy_classes()) {
        SubgroupHandle N = normal_closure(G, {cls.representative});
        if (keep_order(N.order()))
            seed.insert(seed.end(), N.members.begin(), N.members.end());
    }
    if (seed.empty()) return trivial_subgroup();
    return subgroup_closure(G, seed);
}

}  // namespace

SubgroupHandle p_prime_core(const FiniteGroup& G, int p) {
    if (!is_prime(p)) fail(Err::ParseError, "p must be prime");
    SubgroupHandle H = join_of_class_closures(G, [&](int n) { return n % p != 0; });
    if (H.order() % p == 0 || !is_normal(G, H))
        fail(Err::CertificationFailed, "p'-core postcondition violated");
    return H;
}

SubgroupHandle p_core(const FiniteGroup& G, int p) {
    if (!is_prime(p)) fail(Err::ParseError, "p must be prime");
    SubgroupHandle H = join_of_class_closures(
        G, [&](int n) { return p_part(n, p) == static_cast<long long>(n); });
    if (p_part(H.order(), p) != H.order() || !is_normal(G, H))
        fail(Err::CertificationFailed, "p-core postcondition violated");
    return H;
}

SubgroupHandle fitting_subgroup(const FiniteGroup& G) {
    std::vector<int> seed;
    for (int q : prime_divisors(G.order())) {
        SubgroupHandle Oq = p_core(G, q);
        seed.insert(seed.end(), Oq.members.begin(), Oq.members.end());
    }
    if (seed.empty()) return trivial_subgroup();
    return subgroup_closure(G, seed);
}

QuotientResult quotient(const FiniteGroup& G, const SubgroupHandle& N) {
    if (!is_normal(G, N)) fail(Err::NotNormal, "quotient by a non-normal subgroup");
    const int n = G.order();
    std::vector<int> coset_min(n, -1);
    for (int x = 0; x < n; ++x) {
        if (coset_min[x] >= 0) continue;
        int least = x;
        std::vector<int> coset;
        for (int m : N.members) coset.push_back(G.mul(x, m));
        for (int y : coset) least = std::min(least, y);
        for (int y : coset) coset_min[y] = least;
    }
    std::vector<int> leaders;
    for (int x = 0; x < n; ++x)
        if (coset_min[x] == x) leaders.push_back(x);
    std::sort(leaders.begin(), leaders.end());
    std::vector<int> coset_index(n, -1);
    for (size_t i = 0; i < leaders.size(); ++i) coset_index[leaders[i]] = static_cast<int>(i);

    const int m = static_cast<int>(leaders.size());
    std::vector<uint16_t> mul(static_cast<size_t>(m) * m);
    std::vector<uint16_t> inv(m);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            int z = coset_min[G.mul(leaders[a], leaders[b])];
            mul[static_cast<size_t>(a) * m + b] = static_cast<uint16_t>(coset_index[z]);
        }
        inv[a] = static_cast<uint16_t>(coset_index[coset_min[G.inv(leaders[a])]]);
    }
    QuotientResult result{FiniteGroup(std::move(mul), std::move(inv), m), {}};
    result.projection.resize(n);
    for (int x = 0; x < n; ++x) result.projection[x] = coset_index[coset_min[x]];
    return result;
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H, int order_cap) {
    long long n = static_cast<long long>(G.order()) * H.order();
    if (n > order_cap) fail(Err::OrderCapExceeded, "direct product exceeds cap");
    const int nG = G.order(), nH = H.order(), m = static_cast<int>(n);
    std::vector<uint16_t> mul(static_cast<size_t>(m) * m);
    std::vector<uint16_t> inv(m);
    for (int a1 = 0; a1 < nG; ++a1)
        for (int b1 = 0; b1 < nH; ++b1) {
            int x = a1 * nH + b1;
            inv[x] = static_cast<uint16_t>(G.inv(a1) * nH + H.inv(b1));
            for (int a2 = 0; a2 < nG; ++a2)
                for (int b2 = 0; b2 < nH; ++b2)
                    mul[static_cast<size_t>(x) * m + a2 * nH + b2] =
                        static_cast<uint16_t>(G.mul(a1, a2) * nH + H.mul(b1, b2));
        }
    return FiniteGroup(std::move(mul), std::move(inv), m);
}

namespace {

SubgroupHandle preimage(const std::vector<int>& projection, const SubgroupHandle& sub) {
    SubgroupHandle H;
    for (size_t x = 0; x < projection.size(); ++x)
        if (sub.contains(projection[x])) H.members.push_back(static_cast<int>(x));
    return H;
}

}  // namespace

bool is_p_solvable(const FiniteGroup& G, int p) {
    SubgroupHandle N = trivial_subgroup();
    while (true) {
        int before = N.order();
        QuotientResult q1 = quotient(G, N);
        N = preimage(q1.projection, p_prime_core(q1.group, p));
        QuotientResult q2 = quotient(G, N);
        N = preimage(q2.projection, p_core(q2.group, p));
        if (N.order() == before) break;
    }
    return N.order() == G.order();
}

bool is_frobenius_with_p_kernel(const FiniteGroup& G, int p) {
    if (G.order() % p != 0) fail(Err::PrimeDoesNotDivideOrder, "p must divide the group order");
    // Any Frobenius kernel that is a p-group must equal O_p(G): the kernel is
    // the unique largest normal nilpotent subgroup meeting the centralizer
    // condition, and a strictly larger normal p-subgroup would centralize
    // part of it.
    SubgroupHandle K = p_core(G, p);
    if (K.order() <= 1 || K.order() == G.order()) return false;
    for (int k : K.members) {
        if (k == 0) continue;
        for (int g = 0; g < G.order(); ++g)
            if (G.mul(g, k) == G.mul(k, g) && !K.contains(g)) return false;
    }
    return true;
}

}  // namespace psing
