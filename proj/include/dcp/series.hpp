#ifndef DCP_SERIES_HPP
#define DCP_SERIES_HPP

#include <map>
#include <vector>

#include "dcp/bipoly.hpp"
#include "dcp/partition.hpp"

namespace dcp {

mpz_class binomial(long n, long k);

// P_{R/I_mu}(q,t) = prod_{k=1}^{b} (1+q t^k) *
//                   (1 + q t^{b+1} sum_{i=0}^{a} C(b+i,b) (1+qt)^i)
BiPoly poincare_hook(const Hook& h);

// the monomial-part factor: 1 + q t^{b+1} sum_{i=0}^{a} C(b+i,b) (1+qt)^i
BiPoly poincare_J_hook(const Hook& h);

// Herzog-Takayama shape from measured set sizes of a linear-quotient ideal
// generated in a single degree d: 1 + sum_M (1+qt)^{|set(M)|} q t^d
BiPoly herzog_takayama_poincare(const std::vector<int>& set_sizes, int gen_degree);

// multiply by (1 + q t^m): the Poincare shift for adjoining a degree-m
// nonzerodivisor via a mapping cone
BiPoly mapping_cone_shift(const BiPoly& P, int m);

// cell-by-cell recursion along the first row, graded and ungraded variants
BiPoly poincare_recursive_graded(const Hook& h);
UniSeries poincare_recursive_ungraded(const Hook& h);

// [j]_t = 1 + t + ... + t^{j-1}, [j]_t!, and the t-binomial
UniSeries t_bracket(int j);
UniSeries t_factorial(int j);
UniSeries t_binomial(int n, int k);

// prod_{k=1}^{n} (1+q t^k) == sum_k q^k t^{k(k+1)/2} C(n,k)_t, exactly
bool cauchy_identity_check(int n);

// [b]_q! * sum_{c=0}^{b} C(n,c) q^c (1-q)^{b-c}
UniSeries hilbert_hook(const Hook& h);

// replay of the factorization h = prod(1-q^i) * h_{R/J} with the truncated
// stars-and-bars series for h_{R/J}; asserts vanishing past b(b+1)/2
UniSeries hilbert_via_factorization(const Hook& h, int dmax);

// P(-1, q) == h(q) (1-q)^n
bool euler_identity_check(const Hook& h);

} // namespace dcp

#endif
