#ifndef DCP_TANISAKI_HPP
#define DCP_TANISAKI_HPP

#include <vector>

#include "dcp/monomial_ideal.hpp"
#include "dcp/mvpoly.hpp"
#include "dcp/partition.hpp"

namespace dcp {

// Tanisaki generating set C_mu: all e_r(S) with |S| = k >= 1 and
// k >= r > k - delta_k(mu). Deterministic order: k ascending, then S in
// lex order, then r ascending.
std::vector<MvPoly> tanisaki_generators(const Partition& p);

// Hook split I_mu = J_mu + E_mu.
struct GeneratorSet {
    MonomialIdeal monomial_part;       // J_mu: squarefree monomials of degree b+1
    std::vector<MvPoly> symmetric_part; // E_mu: e_1..e_b in all n variables
    std::vector<MvPoly> full_list;      // both parts flattened, J first
};

GeneratorSet hook_split(const Hook& h);

// True iff the two generator lists span the same ideal in every degree
// <= dmax, decided by exact rank computation.
bool equal_as_ideals_truncated(const std::vector<MvPoly>& A, const std::vector<MvPoly>& B,
                               int nvars, int dmax);

} // namespace dcp

#endif
