#include "dcp/bipoly.hpp"

#include <sstream>

#include "dcp/errors.hpp"

namespace dcp {

void UniSeries::trim() {
    if (truncation_ >= 0 && static_cast<int>(coeffs_.size()) > truncation_ + 1)
        coeffs_.resize(truncation_ + 1);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniSeries UniSeries::term(const mpz_class& c, int d) {
    std::vector<mpz_class> v(d + 1, mpz_class(0));
    v[d] = c;
    return UniSeries(std::move(v));
}

mpz_class UniSeries::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[d];
}

namespace {
int combine_trunc(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    return std::min(a, b);
}
} // namespace

UniSeries UniSeries::operator+(const UniSeries& o) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return UniSeries(std::move(v), combine_trunc(truncation_, o.truncation_));
}

UniSeries UniSeries::operator-(const UniSeries& o) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return UniSeries(std::move(v), combine_trunc(truncation_, o.truncation_));
}

UniSeries UniSeries::operator*(const UniSeries& o) const {
    if (is_zero() || o.is_zero())
        return UniSeries({}, combine_trunc(truncation_, o.truncation_));
    int tr = combine_trunc(truncation_, o.truncation_);
    size_t len = coeffs_.size() + o.coeffs_.size() - 1;
    if (tr >= 0) len = std::min(len, static_cast<size_t>(tr) + 1);
    std::vector<mpz_class> v(len, mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size() && i + j < len; ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return UniSeries(std::move(v), tr);
}

UniSeries UniSeries::scale(const mpz_class& c) const {
    std::vector<mpz_class> v(coeffs_);
    for (auto& x : v) x *= c;
    return UniSeries(std::move(v), truncation_);
}

UniSeries UniSeries::divide_exact(const UniSeries& o) const {
    if (o.is_zero())
        throw InexactDivision("division by zero polynomial");
    if (truncation_ >= 0 || o.truncation_ >= 0)
        throw InexactDivision("exact division requires untruncated polynomials");
    if (is_zero()) return UniSeries();
    std::vector<mpz_class> rem(coeffs_);
    int dq = static_cast<int>(rem.size()) - 1 - o.degree();
    if (dq < 0)
        throw InexactDivision("degree of divisor exceeds dividend");
    std::vector<mpz_class> quot(dq + 1, mpz_class(0));
    const mpz_class& lead = o.coeffs_.back();
    for (int k = dq; k >= 0; --k) {
        mpz_class c = rem[k + o.degree()];
        if (c == 0) continue;
        if (c % lead != 0)
            throw InexactDivision("leading coefficient does not divide");
        c /= lead;
        quot[k] = c;
        for (int j = 0; j <= o.degree(); ++j) rem[k + j] -= c * o.coeffs_[j];
    }
    for (const auto& r : rem)
        if (r != 0)
            throw InexactDivision("nonzero remainder");
    return UniSeries(std::move(quot));
}

UniSeries UniSeries::pow(int e) const {
    UniSeries r = UniSeries::one();
    if (truncation_ >= 0) r = r.truncated(truncation_);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

UniSeries UniSeries::truncated(int bound) const {
    UniSeries r = *this;
    r.truncation_ = bound;
    r.trim();
    return r;
}

mpz_class UniSeries::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

std::string UniSeries::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < coeffs_.size(); ++d) {
        const mpz_class& c = coeffs_[d];
        if (c == 0) continue;
        mpz_class a = c;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (d == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << var;
            if (d > 1) os << '^' << d;
        }
        first = false;
    }
    return os.str();
}

BiPoly BiPoly::one() { return term(1, 0, 0); }

BiPoly BiPoly::term(const mpz_class& c, int i, int j) {
    BiPoly p;
    p.add_term(i, j, c);
    return p;
}

mpz_class BiPoly::coeff(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void BiPoly::add_term(int i, int j, const mpz_class& c) {
    if (c == 0) return;
    auto it = coeffs_.find({i, j});
    if (it == coeffs_.end()) {
        coeffs_.emplace(Key{i, j}, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r(*this);
    for (const auto& [k, c] : o.coeffs_) r.add_term(k.first, k.second, c);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r(*this);
    for (const auto& [k, c] : o.coeffs_) r.add_term(k.first, k.second, -c);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [k1, c1] : coeffs_)
        for (const auto& [k2, c2] : o.coeffs_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

UniSeries BiPoly::eval_q(const mpz_class& q) const {
    int maxj = 0;
    for (const auto& [k, c] : coeffs_) maxj = std::max(maxj, k.second);
    std::vector<mpz_class> v(coeffs_.empty() ? 0 : maxj + 1, mpz_class(0));
    for (const auto& [k, c] : coeffs_) {
        mpz_class qp;
        mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), k.first);
        v[k.second] += c * qp;
    }
    return UniSeries(std::move(v));
}

UniSeries BiPoly::eval_t_one() const {
    int maxi = 0;
    for (const auto& [k, c] : coeffs_) maxi = std::max(maxi, k.first);
    std::vector<mpz_class> v(coeffs_.empty() ? 0 : maxi + 1, mpz_class(0));
    for (const auto& [k, c] : coeffs_) v[k.first] += c;
    return UniSeries(std::move(v));
}

std::string BiPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        auto [i, j] = k;
        bool unit_coef = (a == 1) && (i > 0 || j > 0);
        if (!unit_coef) os << a.get_str();
        bool need_star = !unit_coef;
        if (i > 0) {
            if (need_star) os << '*';
            os << 'q';
            if (i > 1) os << '^' << i;
            need_star = true;
        }
        if (j > 0) {
            if (need_star) os << '*';
            os << 't';
            if (j > 1) os << '^' << j;
        }
        first = false;
    }
    return os.str();
}

} // namespace dcp
