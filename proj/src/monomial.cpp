#include "dcp/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "dcp/errors.hpp"

namespace dcp {

Monomial Monomial::from_indices(const std::vector<int>& idx, int nvars) {
    std::vector<int> e(nvars, 0);
    for (int i : idx) {
        if (i < 1 || i > nvars)
            throw IndexOutOfRange("variable index out of range");
        e[i - 1] += 1;
    }
    return Monomial(std::move(e));
}

int Monomial::degree() const {
    int d = 0;
    for (int e : exps_) d += e;
    return d;
}

bool Monomial::squarefree() const {
    for (int e : exps_)
        if (e > 1) return false;
    return true;
}

bool Monomial::divides(const Monomial& m) const {
    if (nvars() != m.nvars())
        throw DimensionMismatch("divides: nvars mismatch");
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > m.exps_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& m) const {
    if (nvars() != m.nvars())
        throw DimensionMismatch("lcm: nvars mismatch");
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] = std::max(e[i], m.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& m) const {
    if (nvars() != m.nvars())
        throw DimensionMismatch("mul: nvars mismatch");
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] += m.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& m) const {
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] -= m.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::times_var(int var) const {
    std::vector<int> e(exps_);
    e[var - 1] += 1;
    return Monomial(std::move(e));
}

std::vector<int> Monomial::index_tuple() const {
    std::vector<int> t;
    for (int i = 0; i < nvars(); ++i)
        for (int k = 0; k < exps_[i]; ++k) t.push_back(i + 1);
    return t;
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < nvars(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << '*';
        os << 'x' << (i + 1);
        if (exps_[i] > 1) os << '^' << exps_[i];
        first = false;
    }
    if (first) os << '1';
    return os.str();
}

bool index_lex_less(const Monomial& p, const Monomial& q) {
    // walk both index tuples without materializing them
    int i = 0, j = 0, ci = 0, cj = 0;
    const auto& a = p.exps();
    const auto& b = q.exps();
    const int na = p.nvars(), nb = q.nvars();
    for (;;) {
        while (i < na && ci >= a[i]) { ++i; ci = 0; }
        while (j < nb && cj >= b[j]) { ++j; cj = 0; }
        if (i == na) return j != nb; // shorter tuple first; equal -> false
        if (j == nb) return false;
        if (i + 1 != j + 1) return i < j;
        ++ci;
        ++cj;
    }
}

namespace {

void enumerate(int nvars, int degree, bool squarefree_only, int min_var,
               std::vector<int>& idx, std::vector<Monomial>& out) {
    if (degree == 0) {
        out.push_back(Monomial::from_indices(idx, nvars));
        return;
    }
    for (int v = min_var; v <= nvars; ++v) {
        idx.push_back(v);
        enumerate(nvars, degree - 1, squarefree_only, squarefree_only ? v + 1 : v, idx, out);
        idx.pop_back();
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree, bool squarefree_only) {
    if (nvars < 1)
        throw DimensionMismatch("monomials_of_degree: nvars must be >= 1");
    if (degree < 0)
        throw IndexOutOfRange("monomials_of_degree: degree must be >= 0");
    std::vector<Monomial> out;
    std::vector<int> idx;
    enumerate(nvars, degree, squarefree_only, 1, idx, out);
    return out;
}

} // namespace dcp
