#ifndef DCP_BIPOLY_HPP
#define DCP_BIPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dcp {

// Univariate integer polynomial / truncated power series. Coefficients are
// indexed by degree; a set truncation bound means every operation discards
// degrees above it.
class UniSeries {
public:
    UniSeries() = default;
    explicit UniSeries(std::vector<mpz_class> coeffs, int truncation = -1)
        : coeffs_(std::move(coeffs)), truncation_(truncation) {
        trim();
    }
    static UniSeries zero() { return UniSeries(); }
    static UniSeries one() { return UniSeries({mpz_class(1)}); }
    // the monomial c * q^d
    static UniSeries term(const mpz_class& c, int d);

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    mpz_class coeff(int d) const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    int truncation() const { return truncation_; }

    UniSeries operator+(const UniSeries& o) const;
    UniSeries operator-(const UniSeries& o) const;
    UniSeries operator*(const UniSeries& o) const;
    UniSeries scale(const mpz_class& c) const;
    // exact division; throws InexactDivision on a nonzero remainder
    UniSeries divide_exact(const UniSeries& o) const;
    UniSeries pow(int e) const;
    UniSeries truncated(int bound) const;

    mpz_class eval(const mpz_class& x) const;

    bool operator==(const UniSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UniSeries& o) const { return coeffs_ != o.coeffs_; }

    std::string to_string(const std::string& var = "q") const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
    int truncation_ = -1; // -1: exact polynomial
};

// Bivariate integer polynomial in (q, t); the shape taken by bigraded
// Poincare series, whose (i,j) coefficient is beta_{i,j}.
class BiPoly {
public:
    using Key = std::pair<int, int>; // (q-exponent, t-exponent)

    BiPoly() = default;
    static BiPoly zero() { return BiPoly(); }
    static BiPoly one();
    static BiPoly term(const mpz_class& c, int i, int j);

    const std::map<Key, mpz_class>& coeffs() const { return coeffs_; }
    mpz_class coeff(int i, int j) const;
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(int i, int j, const mpz_class& c);

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    bool operator==(const BiPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const BiPoly& o) const { return coeffs_ != o.coeffs_; }

    // substitute q -> value, keep t as the variable of the result
    UniSeries eval_q(const mpz_class& q) const;
    // substitute t -> 1
    UniSeries eval_t_one() const;

    std::string to_string() const; // "1 + q*t + 6*q*t^2 + ..."

private:
    std::map<Key, mpz_class> coeffs_;
};

} // namespace dcp

#endif
