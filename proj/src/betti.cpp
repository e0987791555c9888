#include "dcp/betti.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

#include "dcp/errors.hpp"

namespace dcp {

mpz_class BettiTable::beta(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? mpz_class(0) : it->second;
}

mpz_class BettiTable::total(int i) const {
    mpz_class s = 0;
    for (const auto& [k, v] : entries)
        if (k.first == i) s += v;
    return s;
}

BettiTable betti_table(const BiPoly& P) {
    if (P.coeff(0, 0) != 1)
        throw NegativeCoefficient("Poincare series must have constant term 1");
    BettiTable T;
    for (const auto& [k, v] : P.coeffs()) {
        if (v < 0)
            throw NegativeCoefficient("Poincare series has a negative coefficient");
        T.entries.emplace(k, v);
        T.projective_dimension = std::max(T.projective_dimension, k.first);
    }
    return T;
}

int regularity_from_table(const BettiTable& T) {
    int reg = 0;
    for (const auto& [k, v] : T.entries) reg = std::max(reg, k.second - k.first);
    return reg;
}

int regularity_hook(const Hook& h) { return h.b * (h.b + 1) / 2; }

std::string render_betti_m2(const BettiTable& T) {
    const int pd = T.projective_dimension;
    const int reg = regularity_from_table(T);

    auto cell = [&](int r, int i) -> std::string {
        mpz_class v = T.beta(i, i + r);
        return v == 0 ? "." : v.get_str();
    };

    std::vector<std::string> totals(pd + 1);
    for (int i = 0; i <= pd; ++i) totals[i] = T.total(i).get_str();

    std::vector<size_t> width(pd + 1, 1);
    for (int i = 0; i <= pd; ++i) {
        width[i] = std::max(width[i], std::to_string(i).size());
        width[i] = std::max(width[i], totals[i].size());
        for (int r = 0; r <= reg; ++r) width[i] = std::max(width[i], cell(r, i).size());
    }

    size_t label_width = std::max<size_t>(5, std::to_string(reg).size());
    auto rjust = [](const std::string& s, size_t w) {
        return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
    };

    std::ostringstream os;
    os << std::string(label_width + 1, ' ');
    for (int i = 0; i <= pd; ++i) os << ' ' << rjust(std::to_string(i), width[i]);
    os << '\n';
    os << rjust("total", label_width) << ':';
    for (int i = 0; i <= pd; ++i) os << ' ' << rjust(totals[i], width[i]);
    os << '\n';
    for (int r = 0; r <= reg; ++r) {
        os << rjust(std::to_string(r), label_width) << ':';
        for (int i = 0; i <= pd; ++i) os << ' ' << rjust(cell(r, i), width[i]);
        os << '\n';
    }
    return os.str();
}

std::string render_betti_text(const BettiTable& T) {
    std::ostringstream os;
    os << render_betti_m2(T);
    os << "regularity: " << regularity_from_table(T) << '\n';
    os << "projective dimension: " << T.projective_dimension << '\n';
    return os.str();
}

std::string render_betti_json(const BettiTable& T) {
    nlohmann::json j;
    j["betti"] = nlohmann::json::array();
    for (const auto& [k, v] : T.entries)
        j["betti"].push_back({k.first, k.second, v.get_si()});
    j["regularity"] = regularity_from_table(T);
    j["projective_dimension"] = T.projective_dimension;
    return j.dump();
}

} // namespace dcp
