#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace thetalab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense polynomial with arbitrary-precision integer coefficients.
/// Normalized: the stored top coefficient is nonzero, so the zero polynomial
/// has no coefficients and no degree.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long long> coefficients);
    explicit IntPoly(std::vector<Integer> coefficients);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, std::size_t k);
    /// (1 + x)^n
    static IntPoly one_plus_x_pow(std::size_t n);
    /// (1 - x)^n
    static IntPoly one_minus_x_pow(std::size_t n);

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] std::optional<std::size_t> degree() const noexcept;
    /// Coefficient of x^i; zero past the degree.
    [[nodiscard]] Integer coeff(std::size_t i) const;
    [[nodiscard]] const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    /// Number of stored coefficients (degree + 1, or 0).
    [[nodiscard]] std::size_t length() const noexcept { return coeffs_.size(); }

    IntPoly& operator+=(const IntPoly& other);
    IntPoly& operator-=(const IntPoly& other);
    IntPoly& operator*=(const IntPoly& other);
    IntPoly& operator*=(const Integer& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
    friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
    friend IntPoly operator-(IntPoly a);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Multiplies by x^k.
    [[nodiscard]] IntPoly shifted(std::size_t k) const;
    /// Exact division by x^k; throws if a low coefficient is nonzero.
    [[nodiscard]] IntPoly divided_by_x_pow(std::size_t k) const;
    /// Exact division by (1 - x); throws ConsistencyError if inexact.
    [[nodiscard]] IntPoly divided_by_one_minus_x() const;

    /// Text form, e.g. "1 + 4x + x^2" or "-x - x^2"; "0" for zero.
    [[nodiscard]] std::string to_string() const;
    /// Decimal strings a_0..a_m.
    [[nodiscard]] std::vector<std::string> coefficient_strings() const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

/// x^n p(1/x). Throws PreconditionError if deg p > n.
IntPoly reverse(const IntPoly& p, std::size_t n);

/// a_i = a_{n-i} for 0 <= i <= n (and deg p <= n).
bool is_symmetric(const IntPoly& p, std::size_t n);
/// a_0 <= ... <= a_k >= ... >= a_deg for some k; zero is unimodal.
bool is_unimodal(const IntPoly& p);
/// Unimodality of the padded sequence a_0, ..., a_n (deg p <= n required).
bool is_unimodal(const IntPoly& p, std::size_t n);
/// Every position k at which the coefficient sequence peaks.
std::vector<std::size_t> unimodal_peaks(const IntPoly& p);
bool is_nonnegative(const IntPoly& p);
/// a - b has nonnegative coefficients.
bool dominates(const IntPoly& a, const IntPoly& b);

/// Coefficients of p in the basis x^i (1+x)^{n-2i}.
struct GammaVector {
    std::vector<Integer> gamma;
    std::size_t center = 0;  // the n of the expansion

    [[nodiscard]] IntPoly reconstruct() const;
    [[nodiscard]] IntPoly as_poly() const;
    [[nodiscard]] bool is_nonnegative() const;
};

/// std::nullopt when p is not symmetric with respect to n.
std::optional<GammaVector> gamma_vector(const IntPoly& p, std::size_t n);
bool is_gamma_positive(const IntPoly& p, std::size_t n);

/// p = a + x b with x^n a(1/x) = a and x^{n-1} b(1/x) = b.
struct SymDecomp {
    IntPoly a;
    IntPoly b;
    std::size_t n = 0;
};

/// Throws PreconditionError if deg p > n.
SymDecomp symmetric_decomposition(const IntPoly& p, std::size_t n);

/// Every root real (or p ≡ 0), decided by Sturm sequences over the rationals.
bool is_real_rooted(const IntPoly& p);
/// Number of distinct real roots, by a Sturm sequence.
std::size_t count_distinct_real_roots(const IntPoly& p);

/// h_0 <= h_{n-1} <= h_1 <= h_{n-2} <= ... <= h_{floor(n/2)}.
bool is_alternatingly_increasing(const IntPoly& h, std::size_t n);

/// The polynomials p_{n,k} expressing h(sd(Δ)) in terms of h(Δ). Memoized.
/// Throws PreconditionError unless 0 <= k <= n.
IntPoly pnk(std::size_t n, std::size_t k);

}  // namespace thetalab
