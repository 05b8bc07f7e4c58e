#include "psingular/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "psingular/errors.hpp"

namespace psing {

namespace {

/// Exact division of integer polynomials, constant term first; the divisor
/// must be monic and divide evenly.
std::vector<long long> poly_divide(std::vector<long long> num, const std::vector<long long>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<long long> quot(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        long long c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (long long r : num)
        if (r != 0) fail(Err::SizeMismatch, "inexact polynomial division");
    return quot;
}

std::map<int, std::vector<long long>>& phi_cache() {
    static std::map<int, std::vector<long long>> cache;
    return cache;
}

std::mutex& phi_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int e) {
    std::lock_guard<std::mutex> lock(phi_mutex());
    auto& cache = phi_cache();
    std::vector<int> todo{e};
    while (!todo.empty()) {
        int m = todo.back();
        if (cache.count(m)) {
            todo.pop_back();
            continue;
        }
        bool ready = true;
        for (int d = 1; d < m; ++d)
            if (m % d == 0 && !cache.count(d)) {
                todo.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        todo.pop_back();
        std::vector<long long> poly(m + 1, 0);
        poly[0] = -1;
        poly[m] = 1;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) poly = poly_divide(std::move(poly), cache.at(d));
        cache.emplace(m, std::move(poly));
    }
    return cache.at(e);
}

int euler_phi(int e) { return static_cast<int>(cyclotomic_polynomial(e).size()) - 1; }

CyclotomicInt::CyclotomicInt(int e, std::vector<long long> raw) : e_(e) {
    if (e < 1) fail(Err::SizeMismatch, "exponent must be positive");
    reduce(std::move(raw));
}

void CyclotomicInt::reduce(std::vector<long long> raw) {
    std::vector<long long> folded(e_, 0);
    for (size_t i = 0; i < raw.size(); ++i) folded[i % e_] += raw[i];
    const auto& phi = cyclotomic_polynomial(e_);
    const int deg = static_cast<int>(phi.size()) - 1;
    for (int i = e_ - 1; i >= deg; --i) {
        long long c = folded[i];
        if (c == 0) continue;
        for (int j = 0; j <= deg; ++j) folded[i - deg + j] -= c * phi[j];
    }
    coeffs_ = std::move(folded);
}

CyclotomicInt CyclotomicInt::zero(int e) { return CyclotomicInt(e, {}); }

CyclotomicInt CyclotomicInt::integer(int e, long long n) { return CyclotomicInt(e, {n}); }

CyclotomicInt CyclotomicInt::root_power(int e, long long k) {
    k %= e;
    if (k < 0) k += e;
    std::vector<long long> raw(k + 1, 0);
    raw[k] = 1;
    return CyclotomicInt(e, std::move(raw));
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
    if (e_ != o.e_) fail(Err::SizeMismatch, "mixed cyclotomic exponents");
    std::vector<long long> raw = coeffs_;
    for (int i = 0; i < e_; ++i) raw[i] += o.coeffs_[i];
    return CyclotomicInt(e_, std::move(raw));
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
    if (e_ != o.e_) fail(Err::SizeMismatch, "mixed cyclotomic exponents");
    std::vector<long long> raw = coeffs_;
    for (int i = 0; i < e_; ++i) raw[i] -= o.coeffs_[i];
    return CyclotomicInt(e_, std::move(raw));
}

CyclotomicInt CyclotomicInt::operator-() const {
    std::vector<long long> raw = coeffs_;
    for (auto& c : raw) c = -c;
    return CyclotomicInt(e_, std::move(raw));
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    if (e_ != o.e_) fail(Err::SizeMismatch, "mixed cyclotomic exponents");
    std::vector<long long> raw(e_, 0);
    for (int i = 0; i < e_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; j < e_; ++j) {
            if (o.coeffs_[j] == 0) continue;
            raw[(i + j) % e_] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return CyclotomicInt(e_, std::move(raw));
}

CyclotomicInt CyclotomicInt::scaled(long long c) const {
    std::vector<long long> raw = coeffs_;
    for (auto& x : raw) x *= c;
    return CyclotomicInt(e_, std::move(raw));
}

CyclotomicInt CyclotomicInt::galois(long long k) const {
    long long km = k % e_;
    if (km < 0) km += e_;
    if (std::gcd(km, static_cast<long long>(e_)) != 1)
        fail(Err::SizeMismatch, "galois exponent not coprime to the conductor");
    std::vector<long long> raw(e_, 0);
    for (int i = 0; i < e_; ++i) raw[(i * km) % e_] += coeffs_[i];
    return CyclotomicInt(e_, std::move(raw));
}

CyclotomicInt CyclotomicInt::conj() const { return galois(e_ == 1 ? 1 : e_ - 1); }

bool CyclotomicInt::is_zero() const {
    for (long long c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicInt::is_rational_integer() const {
    for (int i = 1; i < e_; ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

long long CyclotomicInt::rational_value() const {
    if (!is_rational_integer())
        fail(Err::IntegralityViolation, "value is not a rational integer: " + to_string());
    return coeffs_[0];
}

std::string CyclotomicInt::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < e_; ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) out << " + ";
        out << coeffs_[i];
        if (i > 0) out << "*z" << e_ << "^" << i;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace psing
