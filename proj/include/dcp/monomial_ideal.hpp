#ifndef DCP_MONOMIAL_IDEAL_HPP
#define DCP_MONOMIAL_IDEAL_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "dcp/monomial.hpp"
#include "dcp/partition.hpp"

namespace dcp {

// Monomial ideal given by its minimal generating set, kept sorted in
// ascending index-lex order. Constructors minimalize.
class MonomialIdeal {
public:
    MonomialIdeal(std::vector<Monomial> gens, int nvars);

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool contains(const Monomial& m) const; // membership: some generator divides m

    bool operator==(const MonomialIdeal& o) const {
        return nvars_ == o.nvars_ && gens_ == o.gens_;
    }

private:
    std::vector<Monomial> gens_;
    int nvars_;
};

// (I : m), computed generator-wise via lcm(g,m)/m and minimalized.
MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& m);

struct LinearQuotientsResult {
    bool linear = false;
    // |set(M_i)| per generator, in ascending index-lex generator order;
    // set(M_1) is empty. Meaningful only when linear.
    std::vector<int> set_sizes;
};

// Tests linear quotients along the ascending index-lex generator order.
// Warns on stderr when the ideal is not generated in a single degree.
LinearQuotientsResult linear_quotients_lex(const MonomialIdeal& I);

// Predicted multiset of |set(M)| over G(J_mu) for a hook: i -> C(b+i, b)
// for 0 <= i <= a.
std::map<int, mpz_class> set_size_multiset(const Hook& h);

// Minimal vertex covers of a squarefree monomial ideal, as ascending lists
// of variable indices; exhaustive search, n <= 20 enforced.
std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& I);

MonomialIdeal alexander_dual(const MonomialIdeal& I);

int krull_dim_quotient(const MonomialIdeal& I);

} // namespace dcp

#endif
