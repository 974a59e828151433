#pragma once

// Batch verification suites. Each suite checks one identity for every size
// up to a bound and reports per-size counts.

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chromatic.hpp"

namespace chromllt {

struct SizeReport {
    int n = 0;
    long checked = 0;
    long failed = 0;
    std::string unit = "cases";
    std::string note;
    bool complete = true;  // false when the time budget ran out mid-size
};

struct SuiteReport {
    std::string name;
    int requested_n = 0;
    int ceiling = 0;
    std::vector<SizeReport> sizes;

    bool passed() const {
        for (auto& s : sizes) {
            if (s.failed) return false;
        }
        return true;
    }
    bool partial() const {
        if (requested_n > ceiling) return true;
        for (auto& s : sizes) {
            if (!s.complete) return true;
        }
        return false;
    }
};

// Wall-clock budget shared by the suites of one run.
class Budget {
public:
    Budget() = default;
    explicit Budget(std::chrono::duration<double> limit)
        : deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(limit)) {}
    bool expired() const { return deadline_ && std::chrono::steady_clock::now() > *deadline_; }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

struct Suite {
    std::string name;
    std::string description;
    int default_n;
    int min_n;
    std::function<SizeReport(int, const Budget&)> run_size;
};

namespace detail {

inline long catalan(int n) {
    long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

// Runs check on every Dyck graph of size n.
inline SizeReport per_graph(int n, const Budget& budget, const std::function<bool(const DyckGraph&)>& check) {
    SizeReport r{n, 0, 0, "graphs", "", true};
    for (auto& g : enumerate_dyck(n)) {
        if (budget.expired()) {
            r.complete = false;
            break;
        }
        ++r.checked;
        if (!check(g)) {
            ++r.failed;
            if (r.note.empty()) r.note = "first failure " + g.to_string();
        }
    }
    return r;
}

// Folds a fixed check into a report, counted as one extra case.
inline void add_golden(SizeReport& r, const std::string& what, bool ok) {
    if (!ok) {
        ++r.failed;
        r.note += (r.note.empty() ? "" : "; ") + what + " mismatch";
    } else {
        r.note += (r.note.empty() ? "" : "; ") + what + " ok";
    }
}

inline PackedWord pw(const char* s) { return PackedWord(parse_word(s)); }
inline Permutation perm(const char* s) { return Permutation(parse_word(s)); }

inline LinearCombination powers(Basis b, std::initializer_list<std::pair<int, const char*>> terms) {
    LinearCombination x(b);
    for (auto [power, key] : terms) x.add_term(parse_word(key), t_pow(power));
    return x;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Reference values for three vertices.

namespace golden {

inline const DyckGraph& edgeless3() { static const DyckGraph g({1, 2, 3}); return g; }
inline const DyckGraph& edge12() { static const DyckGraph g({2, 2, 3}); return g; }
inline const DyckGraph& edge23() { static const DyckGraph g({1, 3, 3}); return g; }
inline const DyckGraph& path3() { static const DyckGraph g({2, 3, 3}); return g; }
inline const DyckGraph& complete3() { static const DyckGraph g({3, 3, 3}); return g; }

struct Display {
    std::string label;
    LinearCombination value;
    LinearCombination expected;
};

inline std::vector<Display> phi_displays() {
    using detail::powers;
    const Basis P = Basis::WQSymPhi, C = Basis::WQSymPhiCheck;
    return {
        {"X(1) Phi", x_phi(DyckGraph({1})), powers(P, {{0, "1"}})},
        {"X(12 edgeless) Phi", x_phi(DyckGraph({1, 2})), powers(P, {{0, "11"}, {0, "21"}})},
        {"X(12 edge) Phi", x_phi(DyckGraph({2, 2})), powers(P, {{1, "12"}, {0, "21"}})},
        {"X(edgeless3) Phi", x_phi(edgeless3()),
         powers(P, {{0, "111"}, {0, "121"}, {0, "212"}, {0, "221"}, {0, "211"}, {0, "321"}})},
        {"X(edge12) Phi", x_phi(edge12()),
         powers(P, {{1, "122"}, {1, "121"}, {0, "212"}, {1, "231"}, {0, "211"}, {0, "321"}})},
        {"X(edge23) Phi", x_phi(edge23()),
         powers(P, {{1, "112"}, {0, "121"}, {1, "212"}, {0, "221"}, {1, "312"}, {0, "321"}})},
        {"X(path3) Phi", x_phi(path3()),
         powers(P, {{2, "123"}, {1, "121"}, {1, "212"}, {1, "231"}, {1, "312"}, {0, "321"}})},
        {"X(complete3) Phi", x_phi(complete3()),
         powers(P, {{3, "123"}, {2, "132"}, {2, "213"}, {1, "231"}, {1, "312"}, {0, "321"}})},
        {"X(edgeless3) PhiCheck", x_phicheck(edgeless3()),
         powers(C, {{0, "123"}, {0, "122"}, {0, "112"}, {0, "121"}, {0, "212"}, {0, "111"}})},
        {"X(edge12) PhiCheck", x_phicheck(edge12()),
         powers(C, {{1, "123"}, {1, "122"}, {0, "213"}, {1, "121"}, {0, "212"}, {0, "211"}})},
        {"X(edge23) PhiCheck", x_phicheck(edge23()),
         powers(C, {{1, "123"}, {0, "132"}, {1, "112"}, {0, "121"}, {1, "212"}, {0, "221"}})},
        {"X(path3) PhiCheck", x_phicheck(path3()),
         powers(C, {{2, "123"}, {1, "132"}, {1, "213"}, {1, "121"}, {1, "212"}, {0, "321"}})},
    };
}

inline std::vector<Display> llt_phicheck_displays() {
    using detail::powers;
    const Basis C = Basis::WQSymPhiCheck;
    return {
        {"LLT(edgeless3) PhiCheck", llt_phicheck(edgeless3()),
         powers(C, {{0, "123"}, {0, "122"}, {0, "112"}, {0, "121"}, {0, "212"}, {0, "111"}})},
        {"LLT(edge12) PhiCheck", llt_phicheck(edge12()),
         powers(C, {{1, "123"}, {1, "122"}, {0, "112"}, {1, "121"}, {0, "212"}, {0, "111"}})},
        {"LLT(edge23) PhiCheck", llt_phicheck(edge23()),
         powers(C, {{1, "123"}, {0, "122"}, {1, "112"}, {0, "121"}, {1, "212"}, {0, "111"}})},
        {"LLT(path3) PhiCheck", llt_phicheck(path3()),
         powers(C, {{2, "123"}, {1, "122"}, {1, "112"}, {1, "121"}, {1, "212"}, {0, "111"}})},
    };
}

inline std::vector<Display> mt_displays() {
    using detail::powers;
    const Basis T = Basis::WSymmt;
    return {
        {"X1(edgeless3) mt", x1_mt(edgeless3()), powers(T, {{0, "111"}, {0, "112"}, {0, "122"}, {0, "121"}, {0, "123"}})},
        {"X1(edge12) mt", x1_mt(edge12()), powers(T, {{0, "122"}, {0, "121"}, {0, "123"}})},
        {"X1(edge23) mt", x1_mt(edge23()), powers(T, {{0, "112"}, {0, "121"}, {0, "123"}})},
        {"X1(path3) mt", x1_mt(path3()), powers(T, {{0, "121"}, {0, "123"}})},
        {"X1(complete3) mt", x1_mt(complete3()), powers(T, {{0, "123"}})},
    };
}

inline bool displays_match(const std::vector<Display>& ds, std::string* first_bad = nullptr) {
    for (auto& d : ds) {
        if (d.value != d.expected || d.value.to_string() != d.expected.to_string()) {
            if (first_bad) *first_bad = d.label;
            return false;
        }
    }
    return true;
}

// The min_G and min'_G tables for the four non-complete graphs, columns in
// the order 123, 132, 213, 231, 312, 321.
inline bool min_tables_match() {
    const char* perms[] = {"123", "132", "213", "231", "312", "321"};
    struct Row {
        const DyckGraph* g;
        std::vector<std::vector<int>> s;
        std::vector<const char*> min, min_prime;
    };
    const std::vector<Row> rows = {
        {&edgeless3(), {{2, 3}, {2}, {3}, {3}, {2}, {}}, {"111", "121", "212", "221", "211", "321"},
         {"123", "122", "112", "121", "212", "111"}},
        {&edge12(), {{3}, {2}, {3}, {}, {2}, {}}, {"122", "121", "212", "231", "211", "321"},
         {"123", "122", "213", "121", "212", "211"}},
        {&edge23(), {{2}, {2}, {3}, {3}, {}, {}}, {"112", "121", "212", "221", "312", "321"},
         {"123", "132", "112", "121", "212", "221"}},
        {&path3(), {{}, {2}, {3}, {}, {}, {}}, {"123", "121", "212", "231", "312", "321"},
         {"123", "132", "213", "121", "212", "321"}},
    };
    for (auto& row : rows) {
        for (std::size_t k = 0; k < 6; ++k) {
            const auto s = detail::perm(perms[k]);
            if (min_g_merge_set(*row.g, s) != row.s[k]) return false;
            if (min_g(*row.g, s).to_string() != row.min[k]) return false;
            if (min_g_prime(*row.g, s).to_string() != row.min_prime[k]) return false;
        }
    }
    return true;
}

// Delta of X for the graph with the single edge 12 on three vertices.
inline bool coproduct_example_matches() {
    const Graph e(0);
    const RationalFunction one_plus_t = RationalFunction(1) + RationalFunction::t();
    GraphTensor expect(2);
    expect.add_term({edge12(), e}, 1);
    expect.add_term({DyckGraph({1}), DyckGraph({1, 2})}, one_plus_t);
    expect.add_term({DyckGraph({1}), DyckGraph({2, 2})}, 1);
    expect.add_term({DyckGraph({1, 2}), DyckGraph({1})}, one_plus_t);
    expect.add_term({DyckGraph({2, 2}), DyckGraph({1})}, 1);
    expect.add_term({e, edge12()}, 1);
    const auto d = gp_coproduct(edge12(), 2);
    return d == expect && x_tensor(d) == coproduct(x_wqsym(edge12()));
}

inline bool insertion_example_matches() {
    const DyckGraph g({2, 4, 4, 6, 6, 6});
    const auto s = detail::perm("52314");
    return render_increments(s, insertion_increments(g, s)) == "⁴5 ³2 ⁵3 ²1 ¹4 ⁰";
}

inline bool statistics_example_matches() {
    const DyckGraph g({2, 3, 5, 5, 5});
    const auto s = detail::perm("35142");
    return inv_g(g, s) == 2 && maj_g(g, s) == 6 && st_g(g, s) == 8;
}

}  // namespace golden

// ---------------------------------------------------------------------------
// Suites

namespace detail {

inline bool mahonian_graph(const DyckGraph& g) {
    std::vector<Rational> dist;
    for (auto& s : permutations(g.n())) {
        const auto k = static_cast<std::size_t>(st_g(g, s));
        if (dist.size() <= k) dist.resize(k + 1, 0);
        dist[k] += 1;
    }
    return RationalFunction(Polynomial(dist)) == q_factorial(g.n());
}

inline bool insertion_graph(const DyckGraph& g) {
    const int n = g.n();
    const auto h = g.restrict_interval(1, n - 1);
    for (auto& s : permutations(n - 1)) {
        const auto steps = insertion_steps(g, s);
        if (steps.size() != static_cast<std::size_t>(n) || steps.front().slot != s.size()) return false;
        for (std::size_t k = 0; k < steps.size(); ++k) {
            if (steps[k].increment != static_cast<int>(k)) return false;
        }
        RationalFunction lhs;
        for (std::size_t slot = 0; slot <= s.size(); ++slot) lhs += t_pow(st_g(g, insert_max(s, slot)));
        if (lhs != q_integer(n) * t_pow(st_g(h, s))) return false;
    }
    return true;
}

inline bool code_graph(const DyckGraph& g) {
    const auto vectors = subdiagonal_vectors(g.n());
    std::set<std::vector<int>> image;
    for (auto& s : permutations(g.n())) {
        auto c = code(g, s);
        if (decode(g, c) != s) return false;
        image.insert(std::move(c));
    }
    return image == std::set<std::vector<int>>(vectors.begin(), vectors.end());
}

inline bool all_monomial(const LinearCombination& x) {
    for (const auto& [k, c] : x) {
        if (!c.is_monomial()) return false;
    }
    return true;
}

inline SizeReport hopf_mul_size(int n, const Budget& budget) {
    SizeReport r{n, 0, 0, "pairs", "", true};
    for (int a = 0; a <= n; ++a) {
        const auto left = enumerate_dyck(a);
        const auto right = enumerate_dyck(n - a);
        for (auto& g : left) {
            const auto xg = x_wqsym(g);
            for (auto& h : right) {
                if (budget.expired()) {
                    r.complete = false;
                    return r;
                }
                ++r.checked;
                if (x_wqsym(gp_product(g, h)) != multiply(xg, x_wqsym(h))) ++r.failed;
            }
        }
    }
    return r;
}

inline SizeReport lemma_perm_size(int n, const Budget& budget) {
    SizeReport r{n, 0, 0, "words", "", true};
    std::mt19937 rng(static_cast<unsigned>(1000 + n));
    const auto perms = permutations(n);
    const auto comps = compositions(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1), pickc(0, comps.size() - 1);
    for (auto& u : packed_words(n)) {
        if (budget.expired()) {
            r.complete = false;
            break;
        }
        const auto& sigma = perms[pick(rng)];
        const auto s = hatS(comps[pickc(rng)]);
        ++r.checked;
        if (internal_product(N(right_action(u, sigma)), s) != n_right_action(internal_product(N(u), s), sigma)) ++r.failed;
    }
    return r;
}

inline SizeReport descent_algebra_size(int n, const Budget& budget) {
    SizeReport r{n, 0, 0, "cases", "", true};
    const auto comps = compositions(n);
    const auto words = packed_words(n);
    for (auto& i : comps) {
        const auto si = hatS(i);
        const auto fi = fqsym_S(i);
        for (auto& v : words) {
            if (budget.expired()) {
                r.complete = false;
                return r;
            }
            ++r.checked;
            const auto f = LinearCombination::single(Basis::FQSymF, standardize(v).letters());
            if (iota_star(internal_product(si, N(v))) != internal_product(fi, f)) ++r.failed;
        }
        // The integer-matrix formula for S^I * S^J against the FQSym route.
        for (auto& j : comps) {
            ++r.checked;
            if (sym_to_fqsym(sym_internal(i, j)) != iota_star(internal_product(si, hatS(j)))) ++r.failed;
        }
    }
    return r;
}

inline SizeReport smirnov_size(int n, const Budget&) {
    SizeReport r{n, 0, 0, "degrees", "", true};
    std::vector<LinearCombination> s, l;
    for (int k = 0; k <= n; ++k) {
        s.push_back(sigma_series(SeriesKind::Sigma1TMinus1, k));
        l.push_back(sigma_series(SeriesKind::LambdaMinus1TMinus1, k));
    }
    LinearCombination acc(Basis::WQSymM);
    for (int j = 0; j <= n; ++j) acc += multiply(s[static_cast<std::size_t>(j)], l[static_cast<std::size_t>(n - j)]);
    ++r.checked;
    if (acc != (n == 0 ? LinearCombination::one(Basis::WQSymM) : LinearCombination(Basis::WQSymM))) {
        ++r.failed;
        r.note = "sigma*lambda != 1";
    }
    ++r.checked;
    if (!smirnov_check(n)) {
        ++r.failed;
        r.note += (r.note.empty() ? "" : "; ") + std::string("path series inverse mismatch");
    }
    return r;
}

}  // namespace detail

inline const std::vector<Suite>& verify_suites() {
    using detail::per_graph;
    static const std::vector<Suite> suites = {
        {"main", "(t-1)^n X_G(t, A/(t-1)) = LLT_G in WQSym", 5, 0,
         [](int n, const Budget& b) { return per_graph(n, b, [](const DyckGraph& g) { return main_identity_check(g); }); }},
        {"x2llt", "X_G(t,X) = (t-1)^-n LLT_G(t,(t-1)X) in QSym", 6, 0,
         [](int n, const Budget& b) { return per_graph(n, b, [](const DyckGraph& g) { return x2llt_check(g); }); }},
        {"dyck-special", "X_G(t, 1/(t-1)) = (t-1)^-n", 6, 0,
         [](int n, const Budget& b) {
             return per_graph(n, b, [](const DyckGraph& g) { return dyck_specialization_check(g); });
         }},
        {"mahonian", "sum over S_n of t^st_G = [n]_t!", 6, 0,
         [](int n, const Budget& b) {
             auto r = per_graph(n, b, detail::mahonian_graph);
             if (n == 5) detail::add_golden(r, "st example", golden::statistics_example_matches());
             return r;
         }},
        {"insertion", "inserting n gives increments 0..n-1 and sum [n]_t t^st_H", 6, 1,
         [](int n, const Budget& b) {
             auto r = per_graph(n, b, detail::insertion_graph);
             if (n == 6) detail::add_golden(r, "worked example", golden::insertion_example_matches());
             return r;
         }},
        {"code", "code/decode round trip with subdiagonal image", 6, 0,
         [](int n, const Budget& b) { return per_graph(n, b, detail::code_graph); }},
        {"hopf-mul", "X of a shifted concatenation is the product", 6, 0, detail::hopf_mul_size},
        {"hopf-comul", "X is compatible with the graph coproduct; cocommutative at t=1", 6, 0,
         [](int n, const Budget& b) {
             auto r = per_graph(n, b, [](const DyckGraph& g) {
                 const auto d = gp_coproduct(g, 2);
                 return x_tensor(d) == coproduct(x_wqsym(g)) && d.evaluated_at(1) == d.evaluated_at(1).swapped();
             });
             if (n == 3) detail::add_golden(r, "coproduct example", golden::coproduct_example_matches());
             return r;
         }},
        {"phi", "Phi and PhiCheck expansions of X agree with the M basis", 6, 0,
         [](int n, const Budget& b) {
             auto r = per_graph(n, b, [](const DyckGraph& g) {
                 const auto x = x_wqsym(g);
                 const auto p = x_phi(g);
                 return detail::all_monomial(p) && m_from_phi(p) == x && m_from_phicheck(x_phicheck(g)) == x;
             });
             if (n == 3) {
                 detail::add_golden(r, "displays", golden::displays_match(golden::phi_displays()));
                 detail::add_golden(r, "min tables", golden::min_tables_match());
             }
             return r;
         }},
        {"phicheck-llt", "PhiCheck expansion of LLT agrees with the M basis", 6, 0,
         [](int n, const Budget& b) {
             auto r = per_graph(n, b, [](const DyckGraph& g) {
                 const auto l = llt_wqsym(g);
                 return detail::all_monomial(l) && m_from_phicheck(llt_phicheck(g)) == l;
             });
             if (n == 3) detail::add_golden(r, "displays", golden::displays_match(golden::llt_phicheck_displays()));
             return r;
         }},
        {"mt", "X_G(1) in the denesting basis agrees with the evaluation at t=1", 6, 0,
         [](int n, const Budget& b) {
             auto r = per_graph(n, b, [](const DyckGraph& g) { return m_to_mt(x1_wsym(g)) == x1_mt(g); });
             if (n == 3) detail::add_golden(r, "displays", golden::displays_match(golden::mt_displays()));
             return r;
         }},
        {"rank", "rank of {X_G(1)} equals Catalan(n)", 6, 0,
         [](int n, const Budget&) {
             const int rank = rank_at_t1(n);
             const long cat = detail::catalan(n);
             return SizeReport{n, 1, rank == cat ? 0 : 1, "ranks",
                               "rank " + std::to_string(rank) + (rank == cat ? " = " : " != ") + "Catalan(" +
                                   std::to_string(n) + ") = " + std::to_string(cat),
                               true};
         }},
        {"path", "Lambda expansions of LLT and X for path graphs", 6, 0,
         [](int n, const Budget&) {
             const long failed = (path_llt_check(n) ? 0 : 1) + (path_x_check(n) ? 0 : 1);
             return SizeReport{n, 2, failed, "identities", "", true};
         }},
        {"smirnov", "sigma_1 lambda_-1 = 1 and the inverse of the path series", 6, 0, detail::smirnov_size},
        {"lemma-perm", "N_{u.sigma} * S = (N_u * S).sigma for random sigma, S", 6, 0, detail::lemma_perm_size},
        {"descent-algebra", "iota*(S^I * N_v) = S^I * F_std(v); integer-matrix internal product", 5, 0,
         detail::descent_algebra_size},
        {"symmetry", "x_qsym(G) is symmetric", 6, 0,
         [](int n, const Budget& b) { return per_graph(n, b, [](const DyckGraph& g) { return is_symmetric(x_qsym(g)); }); }},
    };
    return suites;
}

inline const Suite& find_suite(std::string_view name) {
    for (auto& s : verify_suites()) {
        if (s.name == name) return s;
    }
    throw DomainError("unknown identity '" + std::string(name) + "'");
}

// Runs sizes min_n..min(n_max, ceiling), stopping early once the budget is spent.
inline SuiteReport run_suite(const Suite& suite, int n_max, int ceiling, const Budget& budget = Budget()) {
    if (n_max < 0) throw DomainError("verify: negative size");
    SuiteReport out{suite.name, n_max, ceiling, {}};
    for (int n = suite.min_n; n <= std::min(n_max, ceiling); ++n) {
        out.sizes.push_back(suite.run_size(n, budget));
        if (!out.sizes.back().complete) break;
    }
    return out;
}

inline std::string format_report(const SuiteReport& r) {
    std::string out;
    long total = 0, failed = 0;
    for (auto& s : r.sizes) {
        total += s.checked;
        failed += s.failed;
        out += "n=" + std::to_string(s.n) + ": " + std::to_string(s.checked) + " " + s.unit + " checked, " +
               std::to_string(s.failed) + " failed";
        if (!s.complete) out += " (stopped: time limit)";
        if (!s.note.empty()) out += " [" + s.note + "]";
        out += "\n";
    }
    if (r.requested_n > r.ceiling) {
        out += "sizes above " + std::to_string(r.ceiling) + " skipped (resource ceiling)\n";
    }
    std::string verdict = r.passed() ? (r.partial() ? "partial" : "pass") : "FAIL";
    out += r.name + ": " + verdict + ", " + std::to_string(total) + " checked, " + std::to_string(failed) + " failed";
    if (!r.sizes.empty()) {
        const auto& last = r.sizes.back();
        out += " (" + std::to_string(last.checked) + " " + last.unit + " at n=" + std::to_string(last.n) + ")";
    }
    return out + "\n";
}

}  // namespace chromllt
