#ifndef DCP_MONOMIAL_HPP
#define DCP_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dcp {

// Exponent vector over a fixed number of variables x1..xn.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    // squarefree monomial from ascending variable indices (1-based)
    static Monomial from_indices(const std::vector<int>& idx, int nvars);

    int nvars() const { return static_cast<int>(exps_.size()); }
    const std::vector<int>& exps() const { return exps_; }
    int exp(int var) const { return exps_[var - 1]; } // 1-based

    int degree() const;
    bool is_one() const { return degree() == 0; }
    bool squarefree() const;
    bool divides(const Monomial& m) const;
    Monomial lcm(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    // exact quotient; caller guarantees divisibility
    Monomial operator/(const Monomial& m) const;
    Monomial times_var(int var) const; // multiply by x_var (1-based)

    // ascending multiset of variable indices, e.g. x1^2 x3 -> (1,1,3)
    std::vector<int> index_tuple() const;

    bool operator==(const Monomial& m) const { return exps_ == m.exps_; }
    bool operator!=(const Monomial& m) const { return exps_ != m.exps_; }

    std::string to_string() const; // "x1^2*x3", "1" for the empty product

private:
    std::vector<int> exps_;
};

// Index-lex order: compare ascending index tuples lexicographically,
// shorter prefix first. On a fixed degree this gives x1x2 < x1x3 < x2x3,
// matching the generator order used for linear quotients.
bool index_lex_less(const Monomial& p, const Monomial& q);

struct IndexLexLess {
    bool operator()(const Monomial& p, const Monomial& q) const { return index_lex_less(p, q); }
};

// All monomials in n variables of total degree d, in ascending index-lex
// order; only squarefree ones when the flag is set.
std::vector<Monomial> monomials_of_degree(int nvars, int degree, bool squarefree_only = false);

} // namespace dcp

#endif
