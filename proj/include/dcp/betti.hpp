#ifndef DCP_BETTI_HPP
#define DCP_BETTI_HPP

#include <map>
#include <string>

#include "dcp/bipoly.hpp"
#include "dcp/partition.hpp"

namespace dcp {

// Graded Betti numbers beta_{i,j} read off a Poincare series.
struct BettiTable {
    std::map<std::pair<int, int>, mpz_class> entries; // (i,j) -> beta_{i,j}
    int projective_dimension = 0;                     // max i with beta_{i,j} != 0

    mpz_class beta(int i, int j) const;
    mpz_class total(int i) const; // beta_i = sum_j beta_{i,j}
};

// Throws NegativeCoefficient unless P has nonnegative coefficients and
// constant term 1.
BettiTable betti_table(const BiPoly& P);

int regularity_from_table(const BettiTable& T);
int regularity_hook(const Hook& h); // b(b+1)/2

// Betti diagram, rows indexed by j-i and columns by i, dot for zero.
std::string render_betti_m2(const BettiTable& T);
// same diagram plus the beta list
std::string render_betti_text(const BettiTable& T);
// {"betti": [[i, j, value]...], "regularity": r, "projective_dimension": p}
std::string render_betti_json(const BettiTable& T);

} // namespace dcp

#endif
