#ifndef DCP_LINALG_HPP
#define DCP_LINALG_HPP

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <vector>

#include "dcp/errors.hpp"
#include "dcp/mvpoly.hpp"

namespace dcp {
namespace linalg {

// thrown by Frac on int64 overflow; callers rerun with the big-rational field
struct Int64Overflow {};

// Reduced fraction over int64. Denominator always positive.
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n) : num(n), den(1) {}
    Frac(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den < 0) { num = -num; den = -den; }
        if (num == 0) { den = 1; return; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        num /= g;
        den /= g;
    }

    bool is_zero() const { return num == 0; }

    static long long checked_mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
        return r;
    }
    static long long checked_add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw Int64Overflow{};
        return r;
    }

    Frac operator+(const Frac& o) const {
        if (den == 1 && o.den == 1) {
            Frac r;
            r.num = checked_add(num, o.num);
            return r;
        }
        long long g = std::gcd(den, o.den);
        long long l = checked_mul(den / g, o.den);
        Frac r;
        r.num = checked_add(checked_mul(num, o.den / g), checked_mul(o.num, den / g));
        r.den = l;
        r.reduce();
        return r;
    }
    Frac operator*(const Frac& o) const {
        if (num == 0 || o.num == 0) return Frac();
        long long a = num, b = den, c = o.num, d = o.den;
        long long g1 = std::gcd(a < 0 ? -a : a, d);
        long long g2 = std::gcd(c < 0 ? -c : c, b);
        Frac r;
        r.num = checked_mul(a / g1, c / g2);
        r.den = checked_mul(b / g2, d / g1);
        return r;
    }
    Frac operator-() const {
        Frac r = *this;
        r.num = -r.num;
        return r;
    }
    Frac inv() const {
        Frac r;
        r.num = den;
        r.den = num;
        if (r.den < 0) { r.num = -r.num; r.den = -r.den; }
        return r;
    }
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
};

struct FracField {
    using Elem = Frac;
    static Elem zero() { return Frac(); }
    static bool is_zero(const Elem& e) { return e.is_zero(); }
    static Elem neg(const Elem& e) { return -e; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem inv(const Elem& e) { return e.inv(); }
    static void submul(Elem& acc, const Elem& c, const Elem& x) { acc = acc + (-(c * x)); }
    static Elem from_mpq(const mpq_class& q) {
        if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) throw Int64Overflow{};
        Frac r;
        r.num = mpz_get_si(q.get_num().get_mpz_t());
        r.den = mpz_get_si(q.get_den().get_mpz_t());
        return r;
    }
};

struct BigField {
    using Elem = mpq_class;
    static Elem zero() { return mpq_class(0); }
    static bool is_zero(const Elem& e) { return e == 0; }
    static Elem neg(const Elem& e) { return -e; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem inv(const Elem& e) { return mpq_class(1) / e; }
    static void submul(Elem& acc, const Elem& c, const Elem& x) { acc -= c * x; }
    static Elem from_mpq(const mpq_class& q) { return q; }
};

// GF(p) for a prime below 2^31; products fit in uint64.
struct ZpField {
    uint64_t p;
    using Elem = uint32_t;
    static Elem zero() { return 0; }
    static bool is_zero(const Elem& e) { return e == 0; }
    Elem neg(const Elem& e) const { return e == 0 ? 0 : static_cast<Elem>(p - e); }
    Elem mul(const Elem& a, const Elem& b) const {
        return static_cast<Elem>((static_cast<uint64_t>(a) * b) % p);
    }
    Elem inv(const Elem& e) const { return pow(e, p - 2); }
    Elem pow(Elem base, uint64_t exp) const {
        uint64_t r = 1, b = base;
        while (exp) {
            if (exp & 1) r = (r * b) % p;
            b = (b * b) % p;
            exp >>= 1;
        }
        return static_cast<Elem>(r);
    }
    void submul(Elem& acc, const Elem& c, const Elem& x) const {
        uint64_t t = (static_cast<uint64_t>(c) * x) % p;
        acc = static_cast<Elem>((acc + p - t) % p);
    }
    Elem from_mpq(const mpq_class& q) const {
        mpz_class num = q.get_num() % static_cast<long>(p);
        if (num < 0) num += static_cast<long>(p);
        mpz_class den = q.get_den() % static_cast<long>(p);
        Elem n = static_cast<Elem>(num.get_ui());
        Elem d = static_cast<Elem>(den.get_ui());
        if (d == 0) throw std::runtime_error("ZpField: denominator divisible by p");
        return mul(n, inv(d));
    }
};

// Sparse row echelon over an abstract field. Rows are kept normalized with
// pivot coefficient 1; a stored row with pivot column c and tail t encodes
// the vector e_c + t, so in quotient terms the pivot is congruent to -t.
// Tail columns are always strictly greater than the pivot column.
template <class F>
class Eliminator {
public:
    using Elem = typename F::Elem;
    using Entry = std::pair<uint32_t, Elem>;

    Eliminator(F field, uint32_t ncols)
        : field_(field), ncols_(ncols), pivot_of_col_(ncols, -1), acc_(ncols, field.zero()) {}

    uint32_t ncols() const { return ncols_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<int32_t>& pivot_of_col() const { return pivot_of_col_; }

    struct Row {
        uint32_t pivot;
        std::vector<Entry> tail; // sorted by column, ascending
    };
    const Row& row(size_t i) const { return rows_[i]; }

    // Reduce a sparse row (sorted by column) against the current basis.
    // Installs a new pivot if anything survives; returns the pivot column
    // or -1 when the row lies in the span.
    long long add_row(const std::vector<Entry>& entries) {
        for (const auto& [c, v] : entries) {
            if (F::is_zero(acc_[c])) heap_.push(c);
            acc_[c] = acc_[c] + v;
        }
        return finish_reduction();
    }

    // Same, but entries arrive as two parallel arrays.
    long long add_row(const uint32_t* cols, const Elem* vals, size_t len) {
        for (size_t k = 0; k < len; ++k) {
            uint32_t c = cols[k];
            if (F::is_zero(acc_[c])) heap_.push(c);
            acc_[c] = acc_[c] + vals[k];
        }
        return finish_reduction();
    }

    // Install a pivot with empty tail at column c without any arithmetic.
    // Caller guarantees the column is unclaimed.
    void claim_unit(uint32_t c) {
        pivot_of_col_[c] = static_cast<int32_t>(rows_.size());
        rows_.push_back(Row{c, {}});
    }

    // Rewrite all tails so they contain no pivot columns (reduced echelon).
    // Tail columns exceed the owning pivot, so processing pivots in
    // descending order substitutes only rows that are already clean; the
    // substituted tails are then pivot-free and need no further passes.
    void back_substitute() {
        std::vector<size_t> order(rows_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return rows_[a].pivot > rows_[b].pivot; });
        std::vector<uint32_t> touched;
        for (size_t idx : order) {
            Row& r = rows_[idx];
            bool dirty = false;
            for (const auto& [c, v] : r.tail)
                if (pivot_of_col_[c] >= 0) { dirty = true; break; }
            if (!dirty) continue;
            touched.clear();
            for (const auto& [c, v] : r.tail) {
                if (F::is_zero(acc_[c])) touched.push_back(c);
                acc_[c] = acc_[c] + v;
            }
            for (size_t k = 0; k < touched.size(); ++k) {
                uint32_t c = touched[k];
                Elem v = acc_[c];
                if (F::is_zero(v)) continue;
                int32_t pr = pivot_of_col_[c];
                if (pr < 0) continue;
                acc_[c] = field_.zero();
                for (const auto& [c2, v2] : rows_[pr].tail) {
                    if (F::is_zero(acc_[c2])) touched.push_back(c2);
                    field_.submul(acc_[c2], v, v2);
                }
            }
            std::vector<Entry> out;
            std::sort(touched.begin(), touched.end());
            for (uint32_t c : touched) {
                Elem v = acc_[c];
                if (F::is_zero(v)) continue;
                out.emplace_back(c, v);
                acc_[c] = field_.zero();
            }
            r.tail = std::move(out);
        }
    }

private:
    long long finish_reduction() {
        long long pivot_col = -1;
        Elem pivot_val = field_.zero();
        while (!heap_.empty()) {
            uint32_t c = heap_.top();
            heap_.pop();
            Elem v = acc_[c];
            if (F::is_zero(v)) continue;
            int32_t pr = pivot_of_col_[c];
            if (pr < 0) {
                pivot_col = c;
                pivot_val = v;
                acc_[c] = field_.zero();
                break;
            }
            acc_[c] = field_.zero();
            for (const auto& [c2, v2] : rows_[pr].tail) {
                if (F::is_zero(acc_[c2])) heap_.push(c2);
                field_.submul(acc_[c2], v, v2);
            }
        }
        if (pivot_col < 0) return -1;
        // drain the rest of the accumulator into the tail, normalized
        Elem ipv = field_.inv(pivot_val);
        std::vector<Entry> tail;
        while (!heap_.empty()) {
            uint32_t c = heap_.top();
            heap_.pop();
            Elem v = acc_[c];
            if (F::is_zero(v)) continue;
            acc_[c] = field_.zero();
            tail.emplace_back(c, field_.mul(v, ipv));
        }
        pivot_of_col_[static_cast<uint32_t>(pivot_col)] = static_cast<int32_t>(rows_.size());
        rows_.push_back(Row{static_cast<uint32_t>(pivot_col), std::move(tail)});
        return pivot_col;
    }

    F field_;
    uint32_t ncols_;
    std::vector<int32_t> pivot_of_col_;
    std::vector<Elem> acc_;
    std::priority_queue<uint32_t, std::vector<uint32_t>, std::greater<uint32_t>> heap_;
    std::vector<Row> rows_;
};

// ---- packed monomials for the oracle engines ----
// n <= 8 variables, 8 bits per exponent.

inline uint64_t pack_shift(int var) { return static_cast<uint64_t>(8 * (var - 1)); }

uint64_t pack_monomial(const Monomial& m);
Monomial unpack_monomial(uint64_t key, int nvars);

// degree-d monomials in index-lex ascending order, packed
std::vector<uint64_t> packed_monomials_of_degree(int nvars, int degree);

struct DegreeIndex {
    std::vector<uint64_t> mons;                      // ascending index-lex
    std::unordered_map<uint64_t, uint32_t> rank;

    void build(int nvars, int degree);
    uint32_t size() const { return static_cast<uint32_t>(mons.size()); }
};

} // namespace linalg
} // namespace dcp

#endif
