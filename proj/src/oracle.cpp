#include "dcp/oracle.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

#include "dcp/betti.hpp"
#include "dcp/errors.hpp"
#include "dcp/linalg.hpp"
#include "dcp/monomial_ideal.hpp"
#include "dcp/series.hpp"
#include "dcp/tanisaki.hpp"

namespace dcp {

using linalg::DegreeIndex;
using linalg::Eliminator;

namespace {

int checked_degree(const MvPoly& g) {
    auto d = g.homogeneous_degree();
    if (!d)
        throw NonHomogeneousGenerator("oracle requires homogeneous generators: " + g.to_string());
    return *d;
}

// Degree-by-degree reduced echelon of a homogeneous ideal. The degree-(d+1)
// slice of the ideal is spanned by x_j * (degree-d slice) together with the
// degree-(d+1) generators, so each step closes the previous echelon under
// multiplication by the variables. Reduced echelon form w.r.t. a fixed
// column order is unique, which makes every per-degree result independent
// of processing order. Pivot convention: smallest column (index-lex) of a
// row; tails then live strictly to the right.
template <class F>
class GradedEchelon {
public:
    GradedEchelon(F field, int nvars, const std::vector<MvPoly>& gens, bool keep_history)
        : field_(field), nvars_(nvars), keep_history_(keep_history) {
        for (const auto& g : gens) {
            if (g.nvars() != nvars)
                throw DimensionMismatch("oracle: generator nvars mismatch");
            if (g.is_zero()) continue;
            gens_by_degree_[checked_degree(g)].push_back(&g);
        }
    }

    struct DegreeData {
        DegreeIndex index;
        std::unique_ptr<Eliminator<F>> elim;
        long long quotient_dim = 0;
        std::vector<uint32_t> standard_cols;        // ascending
        std::vector<int32_t> standard_index_of_col; // -1 on pivot columns
    };

    int degree() const { return deg_; }

    // process the next degree; returns dim_k (R/I)_d for it
    long long advance() {
        const int d = deg_ + 1;
        auto cur = std::make_unique<DegreeData>();
        cur->index.build(nvars_, d);
        const uint32_t ncols = cur->index.size();
        cur->elim = std::make_unique<Eliminator<F>>(field_, ncols);
        Eliminator<F>& elim = *cur->elim;

        if (const DegreeData* pd = prev(); pd != nullptr) {
            // multiplication tables x_j * (degree-d-1 monomial)
            const auto& pmons = pd->index.mons;
            std::vector<std::vector<uint32_t>> mult(nvars_ + 1);
            for (int j = 1; j <= nvars_; ++j) {
                mult[j].resize(pmons.size());
                const uint64_t step = uint64_t(1) << linalg::pack_shift(j);
                for (size_t i = 0; i < pmons.size(); ++i)
                    mult[j][i] = cur->index.rank.at(pmons[i] + step);
            }

            const Eliminator<F>& pe = *pd->elim;
            // unit prolongations first: x_j * (monomial known to lie in I)
            for (uint32_t c = 0; c < pd->index.size(); ++c) {
                int32_t r = pe.pivot_of_col()[c];
                if (r < 0 || !pe.row(r).tail.empty()) continue;
                for (int j = 1; j <= nvars_; ++j) {
                    uint32_t target = mult[j][c];
                    int32_t tr = elim.pivot_of_col()[target];
                    if (tr < 0)
                        elim.claim_unit(target);
                    // an existing empty-tail pivot makes the candidate zero;
                    // an existing nonzero tail makes it -tail, which is
                    // already in the span: nothing to do either way
                    else if (!elim.row(tr).tail.empty())
                        elim.add_row({{target, one()}});
                }
            }
            // general prolongations
            std::vector<typename Eliminator<F>::Entry> row;
            for (uint32_t c = 0; c < pd->index.size(); ++c) {
                int32_t r = pe.pivot_of_col()[c];
                if (r < 0 || pe.row(r).tail.empty()) continue;
                for (int j = 1; j <= nvars_; ++j) {
                    row.clear();
                    row.emplace_back(mult[j][c], one());
                    for (const auto& [tc, tv] : pe.row(r).tail) row.emplace_back(mult[j][tc], tv);
                    elim.add_row(row);
                }
            }
        }

        // generators living in this degree
        auto git = gens_by_degree_.find(d);
        if (git != gens_by_degree_.end()) {
            std::vector<typename Eliminator<F>::Entry> row;
            for (const MvPoly* g : git->second) {
                row.clear();
                for (const auto& [m, c] : g->terms())
                    row.emplace_back(cur->index.rank.at(linalg::pack_monomial(m)),
                                     field_.from_mpq(c));
                elim.add_row(row);
            }
        }

        elim.back_substitute();
        cur->quotient_dim = static_cast<long long>(ncols) - static_cast<long long>(elim.rank());
        cur->standard_index_of_col.assign(ncols, -1);
        for (uint32_t c = 0; c < ncols; ++c) {
            if (elim.pivot_of_col()[c] < 0) {
                cur->standard_index_of_col[c] = static_cast<int32_t>(cur->standard_cols.size());
                cur->standard_cols.push_back(c);
            }
        }

        deg_ = d;
        long long dim = cur->quotient_dim;
        store_.push_back(std::move(cur)); // store_[d]
        if (!keep_history_ && d >= 1) store_[d - 1].reset();
        return dim;
    }

    const DegreeData& data(int d) const {
        if (d >= 0 && d < static_cast<int>(store_.size()) && store_[d]) return *store_[d];
        throw IndexOutOfRange("GradedEchelon: degree data not retained");
    }

private:
    typename F::Elem one() const { return field_.from_mpq(mpq_class(1)); }
    const DegreeData* prev() const { return deg_ >= 0 ? store_[deg_].get() : nullptr; }

    F field_;
    int nvars_;
    bool keep_history_;
    int deg_ = -1;
    std::map<int, std::vector<const MvPoly*>> gens_by_degree_;
    std::vector<std::unique_ptr<DegreeData>> store_; // store_[d], pruned unless history kept
};

template <class Fn>
auto with_field_fallback(Fn&& fn) {
    try {
        return fn(linalg::FracField{});
    } catch (linalg::Int64Overflow&) {
        return fn(linalg::BigField{});
    }
}

} // namespace

long long graded_dim(const std::vector<MvPoly>& gens, int nvars, int degree) {
    if (degree < 0)
        throw IndexOutOfRange("graded_dim: degree must be >= 0");
    for (const auto& g : gens)
        if (!g.is_zero()) checked_degree(g);

    return with_field_fallback([&](auto field) -> long long {
        using F = decltype(field);
        DegreeIndex idx;
        idx.build(nvars, degree);
        Eliminator<F> elim(field, idx.size());
        std::vector<typename Eliminator<F>::Entry> row;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            int dg = *g.homogeneous_degree();
            if (dg > degree) continue;
            // rows m * g over all monomial multipliers m of degree d - dg
            std::vector<std::pair<uint64_t, typename F::Elem>> terms;
            for (const auto& [m, c] : g.terms())
                terms.emplace_back(linalg::pack_monomial(m), field.from_mpq(c));
            for (uint64_t mk : linalg::packed_monomials_of_degree(nvars, degree - dg)) {
                row.clear();
                for (const auto& [tk, tc] : terms) row.emplace_back(idx.rank.at(mk + tk), tc);
                elim.add_row(row);
            }
        }
        return static_cast<long long>(idx.size()) - static_cast<long long>(elim.rank());
    });
}

GradedDims hilbert_oracle(const std::vector<MvPoly>& gens, int nvars, int dmax) {
    return with_field_fallback([&](auto field) -> GradedDims {
        using F = decltype(field);
        GradedDims out;
        GradedEchelon<F> eng(field, nvars, gens, /*keep_history=*/false);
        for (int d = 0; d <= dmax; ++d) {
            long long h = eng.advance();
            out.dims.push_back(h);
            if (h == 0) {
                // graded Nakayama: (R/I)_d = 0 forces m^d into I, so every
                // later graded piece vanishes as well
                out.stabilized_zero = true;
                break;
            }
        }
        return out;
    });
}

long long total_dimension(const std::vector<MvPoly>& gens, int nvars, int hard_cap) {
    GradedDims gd = hilbert_oracle(gens, nvars, hard_cap);
    if (!gd.stabilized_zero)
        throw NotArtinianWithinCap("no vanishing graded piece up to the cap");
    long long total = 0;
    for (long long d : gd.dims) total += d;
    return total;
}

bool nzd_truncated_check(const std::vector<MvPoly>& gens, const MvPoly& e, int nvars,
                         int dmax) {
    if (e.nvars() != nvars)
        throw DimensionMismatch("nzd check: nvars mismatch");
    const int m = checked_degree(e);
    if (m < 1)
        throw std::invalid_argument("nzd check: e must be a nonconstant form");

    return with_field_fallback([&](auto field) -> bool {
        using F = decltype(field);
        GradedEchelon<F> eng(field, nvars, gens, /*keep_history=*/true);
        std::vector<long long> h(dmax + m + 1);
        for (int d = 0; d <= dmax + m; ++d) h[d] = eng.advance();

        std::vector<std::pair<uint64_t, typename F::Elem>> eterms;
        for (const auto& [mon, c] : e.terms())
            eterms.emplace_back(linalg::pack_monomial(mon), field.from_mpq(c));

        for (int d = 0; d <= dmax; ++d) {
            const auto& D = eng.data(d);
            const auto& Dm = eng.data(d + m);
            if (h[d] == 0) continue; // nothing left to multiply
            if (h[d] > h[d + m]) return false;
            // matrix of multiplication by e on the standard bases
            Eliminator<F> elim(field, static_cast<uint32_t>(Dm.standard_cols.size()));
            std::vector<typename F::Elem> dense(Dm.standard_cols.size(), field.zero());
            std::vector<uint32_t> touched;
            std::vector<typename Eliminator<F>::Entry> row;
            for (uint32_t src : D.standard_cols) {
                touched.clear();
                uint64_t base = D.index.mons[src];
                for (const auto& [tk, tc] : eterms) {
                    uint32_t col = Dm.index.rank.at(base + tk);
                    int32_t pr = Dm.elim->pivot_of_col()[col];
                    if (pr < 0) {
                        int32_t si = Dm.standard_index_of_col[col];
                        if (F::is_zero(dense[si])) touched.push_back(si);
                        dense[si] = dense[si] + tc;
                    } else {
                        // pivot monomial is congruent to -tail
                        for (const auto& [c2, v2] : Dm.elim->row(pr).tail) {
                            int32_t si = Dm.standard_index_of_col[c2];
                            if (F::is_zero(dense[si])) touched.push_back(si);
                            field.submul(dense[si], tc, v2);
                        }
                    }
                }
                std::sort(touched.begin(), touched.end());
                row.clear();
                for (uint32_t si : touched) {
                    if (!F::is_zero(dense[si])) row.emplace_back(si, dense[si]);
                    dense[si] = field.zero();
                }
                elim.add_row(row);
            }
            if (static_cast<long long>(elim.rank()) != h[d]) return false;
        }
        return true;
    });
}

namespace {

int support_size(uint64_t key, int nvars) {
    int s = 0;
    for (int v = 1; v <= nvars; ++v)
        if ((key >> linalg::pack_shift(v)) & 0xffu) ++s;
    return s;
}

// standard monomials of R/J_mu in one degree: support bounded by b
struct StdIndex {
    std::vector<uint64_t> mons;
    std::unordered_map<uint64_t, uint32_t> rank;

    void build(int nvars, int degree, int b) {
        mons.clear();
        rank.clear();
        for (uint64_t key : linalg::packed_monomials_of_degree(nvars, degree))
            if (support_size(key, nvars) <= b) mons.push_back(key);
        rank.reserve(mons.size() * 2);
        for (uint32_t i = 0; i < mons.size(); ++i) rank.emplace(mons[i], i);
    }
};

// Checkpointed elimination for the stepwise regular-sequence check at one
// total degree D: over the standard monomials of R/J in degree D, add the
// rows e_k * u (u running over standard monomials of degree D-k) block by
// block for k = 1..kmax and record the rank after each block. The rank
// after block i is bounded by
//
//   T_i(D) = (dim J'_{i-1,D} - dim J_D) + dim (R/J'_{i-1})_{D-i}
//          = H0[D] - H[i-1][D] + H[i-1][D-i]
//
// with equality iff multiplication by e_i is injective in degree D-i over
// R/(J + (e_1..e_{i-1})). A mod-p rank can only drop, so measuring
// rank_p == T_i certifies the kernel is zero, exactly.
template <class F>
std::vector<long long> nzd_block_ranks(F field, int n, int b, int D, int kmax,
                                       const std::vector<std::vector<std::pair<uint64_t, mpq_class>>>& e_terms,
                                       StdIndex& cols, StdIndex& scratch) {
    cols.build(n, D, b);
    Eliminator<F> elim(field, static_cast<uint32_t>(cols.mons.size()));
    std::vector<long long> ranks(kmax + 1, 0);
    std::vector<typename Eliminator<F>::Entry> row;
    for (int k = 1; k <= kmax; ++k) {
        scratch.build(n, D - k, b);
        for (uint64_t u : scratch.mons) {
            row.clear();
            for (const auto& [tk, tc] : e_terms[k]) {
                auto it = cols.rank.find(u + tk);
                if (it != cols.rank.end()) row.emplace_back(it->second, field.from_mpq(tc));
            }
            if (!row.empty()) elim.add_row(row);
        }
        ranks[k] = static_cast<long long>(elim.rank());
    }
    return ranks;
}

} // namespace

std::vector<NzdStepReport> stepwise_nzd_hook(const Hook& h, int dmax) {
    const int n = h.n();
    const int b = h.b;
    std::vector<NzdStepReport> out;
    for (int i = 1; i <= b; ++i) out.push_back({i, true, dmax});
    if (b == 0) return out;

    // all elementary symmetric polynomials used, as packed term lists
    std::vector<std::vector<std::pair<uint64_t, mpq_class>>> e_terms(b + 1);
    for (int k = 1; k <= b; ++k) {
        const MvPoly ek = elementary_symmetric_full(k, n);
        for (const auto& [m, c] : ek.terms())
            e_terms[k].emplace_back(linalg::pack_monomial(m), c);
    }

    // H[i][d] = dim (R/(J + (e_1..e_i)))_d, exact. H[0] is counted directly
    // from the monomial ideal J; each later level follows from the exact
    // sequence h_i[D] = h_{i-1}[D] - h_{i-1}[D-i] once the kernel at D-i is
    // certified zero. Degrees are processed in increasing order so each
    // table entry is available exactly when a certificate needs it.
    const int top = dmax + b;
    std::vector<std::vector<long long>> H(b + 1, std::vector<long long>(top + 1, 0));
    {
        StdIndex si;
        for (int d = 0; d <= top; ++d) {
            si.build(n, d, b);
            H[0][d] = static_cast<long long>(si.mons.size());
        }
    }
    for (int i = 1; i <= b; ++i) H[i][0] = H[0][0]; // degree 0 is untouched

    const std::array<uint64_t, 3> primes = {2147483647ull, 2147483629ull, 2147483563ull};
    StdIndex cols, scratch;
    for (int D = 1; D <= top; ++D) {
        const int kmax = std::min(b, D);

        // Expectations are interleaved with the convolution: the target for
        // level i uses H[i-1] both at this degree (built level by level) and
        // at earlier degrees (already final). Returns the first failing
        // level, or 0 when every measured rank hits its target.
        std::vector<long long> hrow(b + 1, 0);
        auto judge = [&](const std::vector<long long>& ranks) -> int {
            hrow[0] = H[0][D];
            for (int i = 1; i <= b; ++i) {
                if (D < i) {
                    hrow[i] = hrow[i - 1]; // the shifted module vanishes here
                    continue;
                }
                long long expect = H[0][D] - hrow[i - 1] + H[i - 1][D - i];
                if (ranks[i] != expect) return i;
                hrow[i] = hrow[i - 1] - H[i - 1][D - i];
            }
            return 0;
        };

        std::vector<long long> ranks(kmax + 1, 0);
        int failing = 0;
        for (uint64_t p : primes) {
            linalg::ZpField zp{p};
            ranks = nzd_block_ranks(zp, n, b, D, kmax, e_terms, cols, scratch);
            failing = judge(ranks);
            if (failing == 0) break;
        }
        if (failing != 0) {
            // exact arithmetic settles the degree either way
            try {
                ranks = nzd_block_ranks(linalg::FracField{}, n, b, D, kmax, e_terms, cols, scratch);
            } catch (linalg::Int64Overflow&) {
                ranks = nzd_block_ranks(linalg::BigField{}, n, b, D, kmax, e_terms, cols, scratch);
            }
            failing = judge(ranks);
        }
        if (failing != 0) {
            // kernel of e_{failing} is nonzero in degree D-failing: that step
            // fails, and the exact dimension tables of every later level are
            // lost, so any step not yet fully judged fails with it
            for (int j = 1; j <= b; ++j)
                if (j >= failing || dmax + j >= D) out[j - 1].pass = false;
            return out;
        }
        for (int i = 1; i <= b; ++i) H[i][D] = hrow[i];
    }
    return out;
}

bool equal_as_ideals_truncated(const std::vector<MvPoly>& A, const std::vector<MvPoly>& B,
                               int nvars, int dmax) {
    for (const auto& g : A)
        if (!g.is_zero()) checked_degree(g);
    for (const auto& g : B)
        if (!g.is_zero()) checked_degree(g);
    std::vector<MvPoly> both = A;
    both.insert(both.end(), B.begin(), B.end());
    return with_field_fallback([&](auto field) -> bool {
        using F = decltype(field);
        GradedEchelon<F> ea(field, nvars, A, false);
        GradedEchelon<F> eb(field, nvars, B, false);
        GradedEchelon<F> eab(field, nvars, both, false);
        for (int d = 0; d <= dmax; ++d) {
            long long ha = ea.advance(), hb = eb.advance(), hab = eab.advance();
            // A_d and B_d sit inside (A+B)_d; equal dimensions force equality
            if (ha != hab || hb != hab) return false;
        }
        return true;
    });
}

bool VerificationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["hook"] = {hook.a, hook.b};
    j["dmax"] = dmax;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back(
            {{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"got", c.got}});
    return j.dump();
}

VerificationReport verify_hook(const Hook& h, int dmax) {
    const int n = h.n();
    const int reg = h.b * (h.b + 1) / 2;
    if (dmax < reg + 1)
        throw TruncationTooSmall("verify_hook: dmax must be at least b(b+1)/2 + 1");

    VerificationReport rep;
    rep.hook = h;
    rep.dmax = dmax;
    GeneratorSet gs = hook_split(h);

    // 1. oracle Hilbert series against the closed form
    UniSeries closed = hilbert_hook(h);
    GradedDims gd = hilbert_oracle(gs.full_list, n, dmax);
    {
        bool ok = gd.stabilized_zero;
        std::vector<mpz_class> v;
        for (long long x : gd.dims) v.emplace_back(static_cast<long>(x));
        UniSeries got(std::move(v));
        for (int d = 0; d <= dmax && ok; ++d) {
            long long dim = d < static_cast<int>(gd.dims.size()) ? gd.dims[d]
                            : (gd.stabilized_zero ? 0 : -1);
            if (closed.coeff(d) != static_cast<long>(dim)) ok = false;
        }
        rep.checks.push_back({"hilbert_series", ok, closed.to_string(), got.to_string()});
    }

    // 2. total dimension n!/(a+1)!
    {
        mpz_class expect = 1;
        for (int k = h.a + 2; k <= n; ++k) expect *= k;
        mpz_class got = 0;
        for (long long x : gd.dims) got += static_cast<long>(x);
        bool ok = gd.stabilized_zero && got == expect;
        rep.checks.push_back({"total_dimension", ok, expect.get_str(), got.get_str()});
    }

    BettiTable table = betti_table(poincare_hook(h));

    // 3. first total Betti number = number of minimal generators
    {
        mpz_class expect = binomial(n, h.b + 1) + h.b;
        mpz_class got = table.total(1);
        rep.checks.push_back({"beta1_count", got == expect, expect.get_str(), got.get_str()});
    }

    // 4. linear quotients and the set-size multiset
    {
        auto lq = linear_quotients_lex(gs.monomial_part);
        auto predicted = set_size_multiset(h);
        std::map<int, mpz_class> measured;
        for (int s : lq.set_sizes) measured[s] += 1;
        bool ok = lq.linear && measured == predicted;
        std::ostringstream pe, pg;
        for (const auto& [k, v] : predicted) pe << k << ":" << v.get_str() << " ";
        if (!lq.linear)
            pg << "no linear quotients";
        else
            for (const auto& [k, v] : measured) pg << k << ":" << v.get_str() << " ";
        rep.checks.push_back({"set_sizes", ok, pe.str(), pg.str()});
    }

    // 5. Euler characteristic identity P(-1,q) = h(q)(1-q)^n
    {
        bool ok = euler_identity_check(h);
        rep.checks.push_back({"euler_identity", ok, "P(-1,q) = h(q)*(1-q)^n",
                              ok ? "identity holds" : "identity fails"});
    }

    // 6. Krull dimension of R/J
    {
        int got = krull_dim_quotient(gs.monomial_part);
        rep.checks.push_back(
            {"krull_dim", got == h.b, std::to_string(h.b), std::to_string(got)});
    }

    // 7. Alexander dual of J: all squarefree monomials of degree n-b
    {
        MonomialIdeal expect(monomials_of_degree(n, n - h.b, /*squarefree=*/true), n);
        MonomialIdeal got = alexander_dual(gs.monomial_part);
        bool ok = got == expect;
        rep.checks.push_back({"alexander_dual", ok,
                              "all squarefree monomials of degree " + std::to_string(n - h.b),
                              ok ? "matches" : "differs"});
    }

    // 8. stepwise regular-sequence evidence (truncated, one-sided)
    {
        auto steps = stepwise_nzd_hook(h, dmax);
        bool ok = true;
        std::ostringstream got;
        for (const auto& s : steps) {
            if (!s.pass) {
                ok = false;
                got << "e_" << s.step << " fails ";
            }
        }
        if (ok) got << "verified up to degree " << dmax;
        rep.checks.push_back({"regular_sequence", ok,
                              "e_1..e_" + std::to_string(h.b) + " injective up to degree " +
                                  std::to_string(dmax),
                              got.str()});
    }

    // 9. regularity from the Betti table
    {
        int got = regularity_from_table(table);
        rep.checks.push_back(
            {"regularity", got == reg, std::to_string(reg), std::to_string(got)});
    }

    return rep;
}

} // namespace dcp
