#pragma once

// Chromatic quasi-symmetric functions and unicellular LLT polynomials, in
// QSym and WQSym, the Hopf algebra of graphs, and their expansions.

#include <map>
#include <string>
#include <vector>

#include "dyckgraph.hpp"
#include "transforms.hpp"

namespace chromllt {

namespace detail {

inline void require_dyck(const Graph& g, const char* op) {
    if (!g.is_dyck()) throw DomainError(std::string(op) + ": graph " + g.to_string() + " is not a Dyck graph");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Chromatic functions and LLT polynomials

// sum over proper packed colorings c of t^{asc_G(c)} M_c.
inline LinearCombination x_wqsym(const Graph& g) {
    LinearCombination out(Basis::WQSymM);
    for (auto& c : proper_packed_colorings(g)) out.add_term_unchecked(c.letters(), t_pow(asc(g, c)));
    return out;
}

inline LinearCombination x_qsym(const Graph& g) {
    LinearCombination out(Basis::QSymM);
    for (auto& c : proper_packed_colorings(g)) out.add_term_unchecked(evaluation(c).parts(), t_pow(asc(g, c)));
    return out;
}

// sum over all packed words u of length n of t^{asc_G(u)} M_u.
inline LinearCombination llt_wqsym(const Graph& g) {
    LinearCombination out(Basis::WQSymM);
    for (auto& u : packed_words(g.n())) out.add_term_unchecked(u.letters(), t_pow(asc(g, u)));
    return out;
}

inline LinearCombination llt_qsym(const Graph& g) {
    LinearCombination out(Basis::QSymM);
    for (auto& u : packed_words(g.n())) out.add_term_unchecked(evaluation(u).parts(), t_pow(asc(g, u)));
    return out;
}

// chi_T applied to a QSym or WQSym element: M_u -> M_{ev(u)}(T).
inline RationalFunction specialize(const LinearCombination& x, const VirtualAlphabet& a) {
    detail::require_kind(x, {Basis::QSymM, Basis::WQSymM}, "specialize");
    RationalFunction out;
    for (const auto& [key, c] : x) {
        const Composition i = x.basis() == Basis::QSymM ? Composition(key) : evaluation(WordView(key));
        out += c * specialize_M(a, i);
    }
    return out;
}

// M-coefficients agree on compositions that are rearrangements of each other.
inline bool is_symmetric(const LinearCombination& x) {
    detail::require_kind(x, {Basis::QSymM}, "is_symmetric");
    std::map<Word, RationalFunction> seen;
    for (const auto& [key, c] : x) {
        Word sorted = key;
        std::sort(sorted.begin(), sorted.end());
        auto [it, fresh] = seen.emplace(sorted, c);
        if (!fresh && it->second != c) return false;
    }
    // Every rearrangement must be present.
    for (const auto& [sorted, c] : seen) {
        Word k = sorted;
        do {
            if (x.coefficient(k) != c) return false;
        } while (std::next_permutation(k.begin(), k.end()));
    }
    return true;
}

// ---------------------------------------------------------------------------
// The Hopf algebra of graphs

inline Graph gp_product(const Graph& g, const Graph& h) { return shifted_concat(g, h); }
inline DyckGraph gp_product(const DyckGraph& g, const DyckGraph& h) { return shifted_concat(g, h); }

// Linear combination of tensors G_1 (x) ... (x) G_r of graphs.
class GraphTensor {
public:
    using Key = std::vector<Graph>;

    explicit GraphTensor(std::size_t arity) : arity_(arity) {}

    std::size_t arity() const { return arity_; }
    const std::map<Key, RationalFunction>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Key& k, const RationalFunction& c) {
        if (k.size() != arity_) throw SizeMismatch("GraphTensor: wrong number of factors");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    RationalFunction coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? RationalFunction() : it->second;
    }

    GraphTensor swapped() const {
        GraphTensor out(arity_);
        for (const auto& [k, c] : terms_) out.add_term(Key(k.rbegin(), k.rend()), c);
        return out;
    }

    GraphTensor evaluated_at(const Rational& value) const {
        GraphTensor out(arity_);
        for (const auto& [k, c] : terms_) out.add_term(k, RationalFunction(c.evaluate(value)));
        return out;
    }

    friend bool operator==(const GraphTensor& a, const GraphTensor& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            std::string factors;
            for (std::size_t i = 0; i < k.size(); ++i) {
                if (i) factors += " ⊗ ";
                factors += k[i].n() == 0 ? "1" : k[i].to_string();
            }
            out += detail::render_coefficient_term(c, factors, first);
            first = false;
        }
        return out;
    }

private:
    std::size_t arity_;
    std::map<Key, RationalFunction> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const GraphTensor& x) { return os << x.to_string(); }

// Delta^r G = sum over w in [r]^n of t^{asc_G(w)} G|_{w=1} (x) ... (x) G|_{w=r}.
inline GraphTensor gp_coproduct(const Graph& g, int r) {
    if (r < 1) throw DomainError("gp_coproduct: arity must be at least 1");
    const int n = g.n();
    GraphTensor out(static_cast<std::size_t>(r));
    Word w(static_cast<std::size_t>(n), 1);
    while (true) {
        GraphTensor::Key key;
        for (int k = 1; k <= r; ++k) {
            std::vector<int> part;
            for (int v = 1; v <= n; ++v) {
                if (w[static_cast<std::size_t>(v) - 1] == k) part.push_back(v);
            }
            key.push_back(g.restrict(part));
        }
        out.add_term(key, t_pow(asc(g, w)));
        int p = n - 1;
        while (p >= 0 && w[static_cast<std::size_t>(p)] == r) w[static_cast<std::size_t>(p--)] = 1;
        if (p < 0) break;
        ++w[static_cast<std::size_t>(p)];
    }
    return out;
}

// (X (x) X) applied to a two-fold graph tensor.
inline TensorElement x_tensor(const GraphTensor& x) {
    if (x.arity() != 2) throw SizeMismatch("x_tensor: expected a two-fold tensor");
    TensorElement out(Basis::WQSymM, Basis::WQSymM);
    for (const auto& [k, c] : x) {
        const auto a = x_wqsym(k[0]);
        const auto b = x_wqsym(k[1]);
        for (const auto& [u, cu] : a) {
            for (const auto& [v, cv] : b) out.add_term_unchecked(u, v, c * cu * cv);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Identities relating X_G and LLT_G

// (t-1)^n X_G(t, A/(t-1)) = LLT_G, with the transform on the right.
inline bool main_identity_check(const Graph& g) {
    detail::require_dyck(g, "main_identity_check");
    const int n = g.n();
    const auto llt = llt_wqsym(g);
    auto [nums, den] = detail::wqsym_transform_scaled(x_wqsym(g), alphabet_one_over_t_minus_one(), n);
    if (nums.size() != llt.size()) return false;
    const Polynomial scale = t_pow_minus_one(1).pow(static_cast<unsigned>(n));
    for (const auto& [key, c] : llt) {
        auto it = nums.find(key);
        if (it == nums.end() || it->second * scale != c.numerator() * den) return false;
    }
    return true;
}

// X_G(t, X) = (t-1)^{-n} LLT_G(t, (t-1)X) in QSym.
inline bool x2llt_check(const Graph& g) {
    const auto lhs = x_qsym(g) * RationalFunction(RationalFunction::t() - 1).pow(g.n());
    return lhs == qsym_transform(llt_qsym(g), alphabet_t_minus_one());
}

// X_G(t, 1/(t-1)) = 1/(t-1)^n.
inline bool dyck_specialization_check(const Graph& g) {
    detail::require_dyck(g, "dyck_specialization_check");
    return specialize(x_qsym(g), alphabet_one_over_t_minus_one()) ==
           RationalFunction(RationalFunction::t() - 1).pow(-g.n());
}

// ---------------------------------------------------------------------------
// Expansions

inline LinearCombination x_phi(const Graph& g) {
    detail::require_dyck(g, "x_phi");
    LinearCombination out(Basis::WQSymPhi);
    for (auto& s : permutations(g.n())) out.add_term_unchecked(min_g(g, s).letters(), t_pow(asc(g, s)));
    return out;
}

inline LinearCombination x_phicheck(const Graph& g) {
    detail::require_dyck(g, "x_phicheck");
    LinearCombination out(Basis::WQSymPhiCheck);
    for (auto& s : permutations(g.n())) out.add_term_unchecked(min_g_prime(g, s).letters(), t_pow(asc(g, s)));
    return out;
}

// The min' map is always taken for the edgeless graph; only the t-weights see G.
inline LinearCombination llt_phicheck(const Graph& g) {
    const Graph empty(g.n());
    LinearCombination out(Basis::WQSymPhiCheck);
    for (auto& s : permutations(g.n())) out.add_term_unchecked(min_g_prime(empty, s).letters(), t_pow(asc(g, s)));
    return out;
}

// X_G(1, A) = sum of m~_pi over nonnesting pi below pi_G in the diagram order.
inline LinearCombination x1_mt(const DyckGraph& g) {
    const auto top = pi_of(g);
    LinearCombination out(Basis::WSymmt);
    for (auto& p : nonnesting_partitions(g.n())) {
        if (nn_leq(p, top)) out.add_term_unchecked(p.word(), 1);
    }
    return out;
}

// X_G(1, A) pushed to WSym, in the m basis.
inline LinearCombination x1_wsym(const Graph& g) { return wqsym_to_wsym(evaluate_at(x_wqsym(g), 1)); }

// Rank over Q of {X_G(1, A) : G Dyck on [n]}.
inline int rank_at_t1(int n) {
    if (n < 0) throw DomainError("rank_at_t1: negative size");
    std::map<Word, std::size_t, ShortLex> column;
    std::vector<std::vector<Rational>> rows;
    for (auto& g : enumerate_dyck(n)) {
        const auto x = x1_wsym(g);
        std::vector<Rational> row;
        for (const auto& [key, c] : x) {
            const std::size_t j = column.try_emplace(key, column.size()).first->second;
            if (row.size() <= j) row.resize(j + 1, 0);
            row[j] = c.evaluate(0);
        }
        rows.push_back(std::move(row));
    }
    for (auto& row : rows) row.resize(column.size(), 0);
    int rank = 0;
    for (std::size_t col = 0; col < column.size() && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
        const auto& p = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
            const Rational f = rows[r][col] / p[col];
            for (std::size_t k = col; k < p.size(); ++k) rows[r][k] -= f * p[k];
        }
        ++rank;
    }
    return rank;
}

// X_G = sum over sigma of t^{inv_G(sigma)} F of the conjugate of DES_P(sigma).
inline LinearCombination sw_f_expansion(const Graph& g) {
    detail::require_dyck(g, "sw_f_expansion");
    const int n = g.n();
    LinearCombination out(Basis::QSymF);
    for (auto& s : permutations(n)) {
        const auto c = Composition::from_descent_set(n, des_set_g(g, s)).conjugate();
        out.add_term_unchecked(c.parts(), t_pow(inv_g(g, s)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Path graphs

// sum over I |= n of (t-1)^{n-l(I)} Lambda^I, in Sym.
inline LinearCombination path_llt_lambda(int n) {
    LinearCombination out(Basis::SymLambda);
    const RationalFunction tm1 = RationalFunction::t() - 1;
    for (auto& i : compositions(n)) out.add_term_unchecked(i.parts(), tm1.pow(n - static_cast<int>(i.length())));
    return out;
}

// sum over I |= n of Lambda^I(A(t-1)) / (t-1)^{l(I)}, in WQSym.
inline LinearCombination path_x_from_lambda(int n) {
    const RationalFunction tm1 = RationalFunction::t() - 1;
    std::vector<LinearCombination> lambda_t(static_cast<std::size_t>(n) + 1, LinearCombination(Basis::WQSymM));
    for (int k = 1; k <= n; ++k) {
        Word id(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) id[static_cast<std::size_t>(j)] = j + 1;
        lambda_t[static_cast<std::size_t>(k)] = wqsym_transform(M(PackedWord(id)), alphabet_t_minus_one()) * tm1.inverse();
    }
    LinearCombination out(Basis::WQSymM);
    for (auto& i : compositions(n)) {
        LinearCombination acc = LinearCombination::one(Basis::WQSymM);
        for (int part : i) acc = multiply(acc, lambda_t[static_cast<std::size_t>(part)]);
        out += acc;
    }
    return out;
}

inline bool path_llt_check(int n) {
    const auto g = DyckGraph::path(n);
    return llt_wqsym(g) == sym_to_wqsym(path_llt_lambda(n));
}

inline bool path_x_check(int n) { return x_wqsym(DyckGraph::path(n)) == path_x_from_lambda(n); }

// (sum_n X_{G_n})^{-1} = 1 + sum_{n>=1} (-1)^n sum over nondecreasing u of (1-t)^{max u - 1} M_u,
// through the given degree. At t = 1 this is the Smirnov-word identity.
inline std::vector<LinearCombination> path_series_inverse_closed_form(int degree) {
    const RationalFunction omt = RationalFunction(1) - RationalFunction::t();
    std::vector<LinearCombination> out{LinearCombination::one(Basis::WQSymM)};
    for (int n = 1; n <= degree; ++n) {
        LinearCombination x(Basis::WQSymM);
        for (auto& i : compositions(n)) {
            Word w;
            for (std::size_t k = 0; k < i.length(); ++k) w.insert(w.end(), static_cast<std::size_t>(i[k]), static_cast<int>(k) + 1);
            x.add_term_unchecked(w, detail::sign(n) * omt.pow(static_cast<int>(i.length()) - 1));
        }
        out.push_back(std::move(x));
    }
    return out;
}

inline bool smirnov_check(int degree) {
    std::vector<LinearCombination> paths{LinearCombination::one(Basis::WQSymM)};
    for (int n = 1; n <= degree; ++n) paths.push_back(x_wqsym(DyckGraph::path(n)));
    const auto inv = graded_series_inverse(paths);
    if (inv != path_series_inverse_closed_form(degree)) return false;
    // t = 1: the inverse of the sum of Smirnov words is 1 + sum (-1)^n M_{1^n}.
    for (int n = 1; n <= degree; ++n) {
        const auto& x = evaluate_at(inv[static_cast<std::size_t>(n)], 1);
        const auto expect = LinearCombination::single(Basis::WQSymM, Word(static_cast<std::size_t>(n), 1), detail::sign(n));
        if (x != expect) return false;
        LinearCombination smirnov(Basis::WQSymM);
        for (auto& u : packed_words(n)) {
            bool ok = true;
            for (std::size_t p = 0; p + 1 < u.size(); ++p) ok = ok && u[p] != u[p + 1];
            if (ok) smirnov.add_term_unchecked(u.letters(), 1);
        }
        if (evaluate_at(paths[static_cast<std::size_t>(n)], 1) != smirnov) return false;
    }
    return true;
}

}  // namespace chromllt
