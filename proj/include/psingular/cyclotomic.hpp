#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace psing {

/// Monic minimal polynomial of a primitive e-th root of unity; coefficient
/// vector of length phi(e)+1, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int e);

int euler_phi(int e);

/// Element of Z[zeta_e] as a coefficient vector of length e over the powers
/// zeta_e^0..zeta_e^{e-1}. The stored form is canonical: the remainder modulo
/// the e-th cyclotomic polynomial, zero-padded, so equality is coefficient
/// equality and is_zero is an exact test.
class CyclotomicInt {
public:
    CyclotomicInt() : e_(1), coeffs_(1, 0) {}
    CyclotomicInt(int e, std::vector<long long> raw);

    static CyclotomicInt zero(int e);
    static CyclotomicInt integer(int e, long long n);
    static CyclotomicInt root_power(int e, long long k);

    int exponent() const { return e_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator-() const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt& operator+=(const CyclotomicInt& o) { return *this = *this + o; }
    CyclotomicInt& operator-=(const CyclotomicInt& o) { return *this = *this - o; }
    CyclotomicInt& operator*=(const CyclotomicInt& o) { return *this = *this * o; }

    CyclotomicInt scaled(long long c) const;

    /// Galois map zeta -> zeta^k; requires gcd(k, e) = 1.
    CyclotomicInt galois(long long k) const;
    /// Complex conjugation, zeta -> zeta^{-1}.
    CyclotomicInt conj() const;

    bool is_zero() const;
    bool is_rational_integer() const;
    /// Throws IntegralityViolation unless the value lies in Z.
    long long rational_value() const;

    bool operator==(const CyclotomicInt& o) const {
        return e_ == o.e_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }
    bool operator<(const CyclotomicInt& o) const { return coeffs_ < o.coeffs_; }

    std::string to_string() const;

private:
    void reduce(std::vector<long long> raw);

    int e_;
    std::vector<long long> coeffs_;
};

}  // namespace psing
