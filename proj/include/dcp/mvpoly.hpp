#ifndef DCP_MVPOLY_HPP
#define DCP_MVPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcp/monomial.hpp"

namespace dcp {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in ascending index-lex order and never store zeros,
// so equality is structural.
class MvPoly {
public:
    using TermMap = std::map<Monomial, mpq_class, IndexLexLess>;

    explicit MvPoly(int nvars) : nvars_(nvars) {}
    static MvPoly zero(int nvars) { return MvPoly(nvars); }
    static MvPoly constant(int nvars, const mpq_class& c);
    static MvPoly monomial(const Monomial& m, const mpq_class& c = 1);
    static MvPoly variable(int var, int nvars);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const mpq_class& c);

    MvPoly operator+(const MvPoly& q) const;
    MvPoly operator-(const MvPoly& q) const;
    MvPoly operator*(const MvPoly& q) const;
    MvPoly scale(const mpq_class& c) const;
    bool operator==(const MvPoly& q) const { return nvars_ == q.nvars_ && terms_ == q.terms_; }
    bool operator!=(const MvPoly& q) const { return !(*this == q); }

    // common total degree of all terms, if the polynomial is homogeneous
    std::optional<int> homogeneous_degree() const;

    // "c*x1^e1*...*xn^en + ..." with ascending index-lex term order
    std::string to_string() const;

private:
    TermMap terms_;
    int nvars_;
};

// e_r over the variables indexed by S (ascending, 1-based): the sum of all
// squarefree degree-r monomials in those variables. r=0 gives 1, r>|S| gives 0.
MvPoly elementary_symmetric(const std::vector<int>& S, int r, int nvars);

// e_r(x1..xn)
MvPoly elementary_symmetric_full(int r, int nvars);

} // namespace dcp

#endif
