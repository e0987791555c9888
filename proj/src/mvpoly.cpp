#include "dcp/mvpoly.hpp"

#include <numeric>
#include <sstream>

#include "dcp/errors.hpp"

namespace dcp {

MvPoly MvPoly::constant(int nvars, const mpq_class& c) {
    MvPoly p(nvars);
    p.add_term(Monomial::one(nvars), c);
    return p;
}

MvPoly MvPoly::monomial(const Monomial& m, const mpq_class& c) {
    MvPoly p(m.nvars());
    p.add_term(m, c);
    return p;
}

MvPoly MvPoly::variable(int var, int nvars) {
    return monomial(Monomial::from_indices({var}, nvars));
}

void MvPoly::add_term(const Monomial& m, const mpq_class& c) {
    if (m.nvars() != nvars_)
        throw DimensionMismatch("add_term: nvars mismatch");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MvPoly MvPoly::operator+(const MvPoly& q) const {
    if (nvars_ != q.nvars_)
        throw DimensionMismatch("add: nvars mismatch");
    MvPoly r(*this);
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

MvPoly MvPoly::operator-(const MvPoly& q) const {
    if (nvars_ != q.nvars_)
        throw DimensionMismatch("sub: nvars mismatch");
    MvPoly r(*this);
    for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
    return r;
}

MvPoly MvPoly::operator*(const MvPoly& q) const {
    if (nvars_ != q.nvars_)
        throw DimensionMismatch("mul: nvars mismatch");
    MvPoly r(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : q.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

MvPoly MvPoly::scale(const mpq_class& c) const {
    MvPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

std::optional<int> MvPoly::homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int dm = m.degree();
        if (!d)
            d = dm;
        else if (*d != dm)
            return std::nullopt;
    }
    return d;
}

std::string MvPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class a = c;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (m.is_one()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << '*';
            os << m.to_string();
        }
        first = false;
    }
    return os.str();
}

MvPoly elementary_symmetric(const std::vector<int>& S, int r, int nvars) {
    if (r < 0)
        throw IndexOutOfRange("elementary_symmetric: r must be >= 0");
    MvPoly p(nvars);
    int k = static_cast<int>(S.size());
    if (r > k) return p;
    std::vector<int> pick(r);
    // all r-subsets of S, ascending
    std::vector<int> pos(r);
    std::iota(pos.begin(), pos.end(), 0);
    for (;;) {
        for (int i = 0; i < r; ++i) pick[i] = S[pos[i]];
        p.add_term(Monomial::from_indices(pick, nvars), 1);
        if (r == 0) break;
        int i = r - 1;
        while (i >= 0 && pos[i] == k - r + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (int j = i + 1; j < r; ++j) pos[j] = pos[j - 1] + 1;
    }
    return p;
}

MvPoly elementary_symmetric_full(int r, int nvars) {
    std::vector<int> S(nvars);
    std::iota(S.begin(), S.end(), 1);
    return elementary_symmetric(S, r, nvars);
}

} // namespace dcp
