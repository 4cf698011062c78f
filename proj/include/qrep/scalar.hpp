#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrep {

// The cyclotomic field Q(zeta_N), stored as the power basis 1, z, ..., z^(phi-1)
// modulo the N-th cyclotomic polynomial.
class CyclotomicField {
public:
    explicit CyclotomicField(int order);

    int order() const { return order_; }
    int degree() const { return degree_; }

    // Reduction of z^e for 0 <= e < 2*degree, as integer coefficient vectors.
    const std::vector<long>& reduced_power(int e) const { return powers_[e]; }
    const std::vector<long>& minimal_polynomial() const { return poly_; }
    long max_reduction_coefficient() const { return max_red_; }

    static std::shared_ptr<const CyclotomicField> get(int order);

private:
    int order_;
    int degree_;
    std::vector<long> poly_;
    std::vector<std::vector<long>> powers_;
    long max_red_ = 1;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

class FieldMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact element of Q(zeta_N). Coefficients are num[i]/den with den > 0 and
// gcd(content(num), den) = 1, so equal elements have identical representations.
// Values whose integers all fit in 62 bits are stored inline as int64; larger
// values switch to GMP integers.
class Scalar {
public:
    Scalar() = default;
    Scalar(FieldPtr field, long value);
    Scalar(FieldPtr field, const mpq_class& value);

    static Scalar zero(FieldPtr field) { return Scalar(std::move(field), 0L); }
    static Scalar one(FieldPtr field) { return Scalar(std::move(field), 1L); }
    // zeta_N^power
    static Scalar root(FieldPtr field, long power);
    // zeta_order^power; order must divide N
    static Scalar root_of_unity(FieldPtr field, int order, long power);
    // Coefficients in the power basis 1, zeta, ..., zeta^{deg-1}.
    static Scalar from_coeffs(FieldPtr field, const std::vector<mpq_class>& c);

    const FieldPtr& field() const { return field_; }
    bool valid() const { return static_cast<bool>(field_); }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    mpq_class coeff(int i) const;
    std::vector<mpq_class> coeffs() const;
    // Number of nonzero coefficients.
    int support() const;
    // Valid only when is_rational().
    mpq_class rational() const { return coeff(0); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar scaled(const mpq_class& q) const;
    Scalar inverse() const;
    Scalar conj() const;
    // Image under the Galois automorphism zeta -> zeta^s, gcd(s, N) = 1.
    Scalar galois(long s) const;
    Scalar pow(long e) const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    using Wide = __int128;
    void check_same(const Scalar& o) const;
    void set_wide(std::vector<Wide>& num, Wide den);
    void set_big(std::vector<mpz_class>& num, mpz_class den);
    void big_parts(std::vector<mpz_class>& num, mpz_class& den) const;
    static Scalar add_big(const Scalar& a, const Scalar& b, bool negate_b);
    static Scalar mul_big(const Scalar& a, const Scalar& b);

    FieldPtr field_;
    bool big_ = false;
    std::vector<std::int64_t> sn_;
    std::int64_t sd_ = 1;
    std::vector<mpz_class> num_;
    mpz_class den_{1};
};

// Exact square root of a positive integer inside Q(zeta_{4n}) via a quadratic Gauss sum.
Scalar sqrt_integer(const FieldPtr& field, long n);

// Some y in the field with y * y = x, if one exists and is found. Candidates come from
// numerical square roots in all complex embeddings and are verified exactly.
std::optional<Scalar> square_root(const Scalar& x);

}  // namespace qrep
