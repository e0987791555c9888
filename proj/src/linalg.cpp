#include "dcp/linalg.hpp"

namespace dcp {
namespace linalg {

uint64_t pack_monomial(const Monomial& m) {
    if (m.nvars() > 8)
        throw TooLarge("packed monomials support at most 8 variables");
    uint64_t key = 0;
    for (int v = 1; v <= m.nvars(); ++v) {
        int e = m.exp(v);
        if (e > 255)
            throw TooLarge("packed monomials support exponents up to 255");
        key |= static_cast<uint64_t>(e) << pack_shift(v);
    }
    return key;
}

Monomial unpack_monomial(uint64_t key, int nvars) {
    std::vector<int> e(nvars);
    for (int v = 1; v <= nvars; ++v)
        e[v - 1] = static_cast<int>((key >> pack_shift(v)) & 0xffu);
    return Monomial(std::move(e));
}

namespace {

// ascending index-lex == the order produced by placing degree into variables
// smallest-first recursively
void enum_packed(int nvars, int degree, int var, uint64_t key, std::vector<uint64_t>& out) {
    if (degree == 0) {
        out.push_back(key);
        return;
    }
    if (var > nvars) return;
    // exponent of x_var from high to... index tuples start with the smallest
    // variable, and more copies of it come first: x1^2 < x1x2, so exponent of
    // the current variable descends
    for (int e = degree; e >= 0; --e)
        enum_packed(nvars, degree - e, var + 1, key | (static_cast<uint64_t>(e) << pack_shift(var)),
                    out);
}

} // namespace

std::vector<uint64_t> packed_monomials_of_degree(int nvars, int degree) {
    if (nvars < 1 || nvars > 8)
        throw TooLarge("packed monomials support 1..8 variables");
    if (degree > 255)
        throw TooLarge("degree too large for packed monomials");
    std::vector<uint64_t> out;
    enum_packed(nvars, degree, 1, 0, out);
    return out;
}

void DegreeIndex::build(int nvars, int degree) {
    mons = packed_monomials_of_degree(nvars, degree);
    rank.clear();
    rank.reserve(mons.size() * 2);
    for (uint32_t i = 0; i < mons.size(); ++i) rank.emplace(mons[i], i);
}

} // namespace linalg
} // namespace dcp
