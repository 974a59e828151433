#pragma once

// Virtual alphabets and the alphabet transforms on QSym, Sym, WQSym and WQSym*.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace chromllt {

// An algebra morphism chi_T: QSym -> Q(t), given by its values on M_I.
// M_() is always 1.
struct VirtualAlphabet {
    std::string name;
    std::function<RationalFunction(const Composition&)> value_on_M;
    // Values depend on the name only, so they may be memoized by name.
    bool cacheable = false;
};

namespace detail {

inline RationalFunction sign_power(std::size_t length) { return RationalFunction(length % 2 == 1 ? 1 : -1); }

}  // namespace detail

// M_I(1/(1-t)) = t^maj(I) / prod_k (1 - t^{i_1+...+i_k}).
inline VirtualAlphabet alphabet_one_over_one_minus_t() {
    return {"1/(1-t)",
            [](const Composition& i) {
                Polynomial den(1);
                for (int s : i.partial_sums()) den *= Polynomial(1) - Polynomial::monomial(1, s);
                return RationalFunction(Polynomial::monomial(1, i.maj()), den);
            },
            true};
}

// M_I(1/(t-1)) = 1 / prod_k (t^{i_1+...+i_k} - 1).
inline VirtualAlphabet alphabet_one_over_t_minus_one() {
    return {"1/(t-1)",
            [](const Composition& i) {
                Polynomial den(1);
                for (int s : i.partial_sums()) den *= t_pow_minus_one(s);
                return RationalFunction(Polynomial(1), den);
            },
            true};
}

// M_I(1-t) = (-1)^{l(I)-1} (t^{n-i_1} - t^n).
inline VirtualAlphabet alphabet_one_minus_t() {
    return {"1-t",
            [](const Composition& i) {
                const int n = i.weight();
                return detail::sign_power(i.length()) *
                       RationalFunction(Polynomial::monomial(1, n - i[0]) - Polynomial::monomial(1, n));
            },
            true};
}

// M_I(t-1) = (-1)^{l(I)-1} (t^{i_1} - 1).
inline VirtualAlphabet alphabet_t_minus_one() {
    return {"t-1",
            [](const Composition& i) {
                return detail::sign_power(i.length()) * RationalFunction(t_pow_minus_one(i[0]));
            },
            true};
}

inline std::vector<VirtualAlphabet> builtin_alphabets() {
    return {alphabet_one_over_one_minus_t(), alphabet_one_over_t_minus_one(), alphabet_one_minus_t(),
            alphabet_t_minus_one()};
}

inline VirtualAlphabet parse_alphabet(std::string_view name) {
    for (auto& a : builtin_alphabets()) {
        if (a.name == name) return a;
    }
    throw DomainError("unknown alphabet '" + std::string(name) + "' (expected 1/(1-t), 1/(t-1), 1-t or t-1)");
}

inline RationalFunction specialize_M(const VirtualAlphabet& a, const Composition& i) {
    if (i.empty()) return RationalFunction(1);
    if (!a.cacheable) return a.value_on_M(i);
    static detail::Memo<std::pair<std::string, Word>, RationalFunction> memo;
    return memo.get({a.name, i.parts()}, [&] { return a.value_on_M(i); });
}

namespace detail {

// Calls emit(J, coefficient) for every cut of I into consecutive segments
// I_1...I_s, with J = (|I_1|, ..., |I_s|) and coefficient prod_k M_{I_k}(T).
template <class Emit>
void for_each_cut(const VirtualAlphabet& a, const Composition& i, Emit&& emit) {
    if (i.empty()) {
        emit(Composition(), RationalFunction(1));
        return;
    }
    const std::size_t r = i.length();
    for (std::uint32_t mask = 0; mask < (1U << (r - 1)); ++mask) {
        std::vector<int> j;
        RationalFunction c(1);
        std::vector<int> seg{i[0]};
        for (std::size_t k = 1; k <= r; ++k) {
            // Bit k-1 set: part k joins the current segment.
            if (k < r && (mask & (1U << (k - 1)))) {
                seg.push_back(i[k]);
                continue;
            }
            Composition segment(seg);
            j.push_back(segment.weight());
            c *= specialize_M(a, segment);
            if (k < r) seg = {i[k]};
        }
        emit(Composition(j), c);
    }
}

}  // namespace detail

// M_I(XT) = sum_J <M_I(X), S^J(TA)> M_J(X).
inline LinearCombination qsym_transform(const LinearCombination& x, const VirtualAlphabet& a) {
    detail::require_kind(x, {Basis::QSymM}, "qsym_transform");
    LinearCombination out(Basis::QSymM);
    for (const auto& [key, c] : x) {
        detail::for_each_cut(a, Composition(key), [&](const Composition& j, const RationalFunction& k) {
            if (!k.is_zero()) out.add_term_unchecked(j.parts(), c * k);
        });
    }
    return out;
}

// The matrix of M_I -> M_I(XT) in degree n, as rows indexed by I.
inline std::map<Word, std::map<Word, RationalFunction>> qsym_transform_matrix(const VirtualAlphabet& a, int n) {
    std::map<Word, std::map<Word, RationalFunction>> out;
    for (auto& i : compositions(n)) {
        auto& row = out[i.parts()];
        detail::for_each_cut(a, i, [&](const Composition& j, const RationalFunction& k) {
            if (!k.is_zero()) row[j.parts()] += k;
        });
    }
    return out;
}

namespace detail {

struct InverseAlphabetState {
    VirtualAlphabet base;
    Memo<Word, RationalFunction> memo;

    RationalFunction value(const Composition& i) {
        return memo.get(i.parts(), [&] {
            RationalFunction rest(i.length() == 1 ? 1 : 0);
            for_each_cut(base, i, [&](const Composition& j, const RationalFunction& c) {
                if (j.length() < i.length()) rest -= c * value(j);
            });
            RationalFunction diag(1);
            for (int part : i) diag *= specialize_M(base, Composition{part});
            if (diag.is_zero()) throw ArithmeticError("alphabet '" + base.name + "' has no inverse");
            return rest / diag;
        });
    }
};

}  // namespace detail

// The alphabet T' with (XT)T' = X. Its values M_J(T') form the last column of
// the inverse of the degree-n transform matrix of T, which is triangular for
// refinement with diagonal entries prod_k M_{i_k}(T).
inline VirtualAlphabet inverse_alphabet(const VirtualAlphabet& a) {
    auto state = std::make_shared<detail::InverseAlphabetState>();
    state->base = a;
    return {"(" + a.name + ")^-1", [state](const Composition& i) { return state->value(i); }, false};
}

// S_n(TA) = sum_{I |= n} M_I(T) S^I(A), extended multiplicatively.
inline LinearCombination sym_transform(const LinearCombination& x, const VirtualAlphabet& a) {
    detail::require_kind(x, {Basis::SymS}, "sym_transform");
    LinearCombination out(Basis::SymS);
    for (const auto& [key, c] : x) {
        LinearCombination acc = LinearCombination::one(Basis::SymS) * c;
        for (int part : key) {
            LinearCombination factor(Basis::SymS);
            for (auto& i : compositions(part)) {
                const RationalFunction k = specialize_M(a, i);
                if (!k.is_zero()) factor.add_term_unchecked(i.parts(), k);
            }
            acc = multiply(acc, factor);
        }
        out += acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// WQSym

// w^(i): the packed subword of w at the positions where u equals i.
inline std::vector<PackedWord> split_words(const PackedWord& u, const PackedWord& w) {
    detail::require_same_size(u.size(), w.size(), "split_words");
    std::vector<Word> parts(static_cast<std::size_t>(u.max_letter()));
    for (std::size_t p = 0; p < u.size(); ++p) parts[static_cast<std::size_t>(u[p]) - 1].push_back(w[p]);
    std::vector<PackedWord> out;
    for (auto& part : parts) out.push_back(pack(part));
    return out;
}

// V(u, w) = {v : biletter_pack(u, v) = w}.
inline std::vector<PackedWord> v_set(const PackedWord& u, const PackedWord& w) {
    detail::require_same_size(u.size(), w.size(), "v_set");
    std::vector<PackedWord> out;
    if (!refines(w, u)) return out;
    // v is determined up to how the blocks of the different w^(i) interleave:
    // within each u-block, v must order positions exactly as w does.
    for (auto& v : packed_words(static_cast<int>(u.size()))) {
        if (biletter_pack(u, v) == w) out.push_back(v);
    }
    return out;
}

namespace detail {

struct ScaledCoefficients {
    Polynomial denominator;                                  // common denominator L
    std::map<std::pair<Word, std::uint32_t>, Polynomial> numerators;  // c * L
};

// Coefficient of M_{merge(u, mask)} in M_u(AT), for u of evaluation ev.
inline RationalFunction merge_coefficient(const VirtualAlphabet& a, const Word& ev, std::uint32_t mask) {
    RationalFunction c(1);
    std::vector<int> seg;
    for (std::size_t k = 0; k < ev.size(); ++k) {
        // Bit k-1 set: block k+1 merges into block k.
        if (k > 0 && !(mask & (1U << (k - 1)))) {
            c *= specialize_M(a, Composition(seg));
            seg.clear();
        }
        seg.push_back(ev[k]);
    }
    if (!seg.empty()) c *= specialize_M(a, Composition(seg));
    return c;
}

inline ScaledCoefficients build_scaled(const VirtualAlphabet& a, int n) {
    ScaledCoefficients s{Polynomial(1), {}};
    std::map<std::pair<Word, std::uint32_t>, RationalFunction> raw;
    for (auto& i : compositions(n)) {
        const std::size_t r = i.length();
        const std::uint32_t masks = r == 0 ? 1U : (1U << (r - 1));
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            RationalFunction c = merge_coefficient(a, i.parts(), mask);
            const Polynomial& d = c.denominator();
            if (!d.is_one()) {
                const Polynomial g = gcd(s.denominator, d);
                s.denominator = s.denominator * exact_quotient(d, g);
            }
            raw.emplace(std::make_pair(i.parts(), mask), std::move(c));
        }
    }
    for (auto& [key, c] : raw) {
        s.numerators.emplace(key, c.numerator() * exact_quotient(s.denominator, c.denominator()));
    }
    return s;
}

inline const ScaledCoefficients& scaled_coefficients(const VirtualAlphabet& a, int n) {
    if (!a.cacheable) throw DomainError("scaled coefficients are only kept for built-in alphabets");
    static Memo<std::pair<std::string, int>, ScaledCoefficients> memo;
    return memo.get({a.name, n}, [&] { return build_scaled(a, n); });
}

// For x homogeneous of degree n with polynomial coefficients: the numerators of
// x(AT) over the common denominator L of the degree-n coefficients.
inline std::pair<std::map<Word, Polynomial, ShortLex>, Polynomial> wqsym_transform_scaled(const LinearCombination& x,
                                                                                          const VirtualAlphabet& a,
                                                                                          int n) {
    const ScaledCoefficients& sc = scaled_coefficients(a, n);
    std::map<Word, Polynomial, ShortLex> out;
    for (const auto& [key, c] : x) {
        if (static_cast<int>(key.size()) != n) throw SizeMismatch("wqsym_transform: element is not homogeneous");
        if (!c.is_polynomial()) throw DomainError("wqsym_transform: scaled path needs polynomial coefficients");
        const PackedWord u(key);
        const Word ev = evaluation(u).parts();
        const int m = u.max_letter();
        const std::uint32_t masks = m <= 1 ? 1U : (1U << (m - 1));
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            const Polynomial& p = sc.numerators.at({ev, mask});
            if (p.is_zero()) continue;
            out[merge_blocks(u, mask).letters()] += c.numerator() * p;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return {std::move(out), sc.denominator};
}

}  // namespace detail

// M_u(AT) = sum over coarsenings v of u of c(v) M_v, where c(v) is the product
// of M_{I_k}(T) over the segments of ev(u) merged into the blocks of v.
inline LinearCombination wqsym_transform(const LinearCombination& x, const VirtualAlphabet& a) {
    detail::require_kind(x, {Basis::WQSymM}, "wqsym_transform");
    LinearCombination out(Basis::WQSymM);
    bool polynomial = true;
    for (const auto& [key, c] : x) polynomial = polynomial && c.is_polynomial();
    if (a.cacheable && polynomial) {
        for (int n = 0; n <= x.max_degree(); ++n) {
            auto part = x.homogeneous_component(n);
            if (part.is_zero()) continue;
            auto [nums, den] = detail::wqsym_transform_scaled(part, a, n);
            for (auto& [key, p] : nums) out.add_term_unchecked(key, RationalFunction(p, den));
        }
        return out;
    }
    for (const auto& [key, c] : x) {
        const PackedWord u(key);
        const Word ev = evaluation(u).parts();
        const int m = u.max_letter();
        const std::uint32_t masks = m <= 1 ? 1U : (1U << (m - 1));
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            const RationalFunction k = detail::merge_coefficient(a, ev, mask);
            if (!k.is_zero()) out.add_term_unchecked(merge_blocks(u, mask).letters(), c * k);
        }
    }
    return out;
}

// N_u(TA) = sum_w (M_{w^(1)} ... M_{w^(max u)})(T) N_w, the sum running over
// the w that refine u.
inline LinearCombination wqsymdual_transform(const PackedWord& u, const VirtualAlphabet& a) {
    LinearCombination out(Basis::WQSymDualN);
    for (auto& w : refinements(u)) {
        RationalFunction c(1);
        for (auto& part : split_words(u, w)) c *= specialize_M(a, evaluation(part));
        if (!c.is_zero()) out.add_term_unchecked(w.letters(), c);
    }
    return out;
}

inline LinearCombination wqsymdual_transform(const LinearCombination& x, const VirtualAlphabet& a) {
    detail::require_kind(x, {Basis::WQSymDualN}, "wqsymdual_transform");
    LinearCombination out(Basis::WQSymDualN);
    for (const auto& [key, c] : x) out += wqsymdual_transform(PackedWord(key), a) * c;
    return out;
}

// ---------------------------------------------------------------------------
// Series

enum class SeriesKind { Sigma1TMinus1, LambdaMinus1TMinus1 };

inline bool is_nonincreasing(const Word& w) { return std::is_sorted(w.rbegin(), w.rend()); }
inline bool is_nondecreasing(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

// Degree-n component of sigma_1(A(t-1)) or lambda_{-1}(A(t-1)).
//   sigma_1:      sum over nonincreasing u of t^{n-max u} (t-1)^{max u} M_u
//   lambda_{-1}:  sum over nondecreasing u of (1-t)^{max u} M_u
inline LinearCombination sigma_series(SeriesKind kind, int n) {
    if (n < 0) throw DomainError("sigma_series: negative degree");
    const RationalFunction t = RationalFunction::t();
    LinearCombination out(Basis::WQSymM);
    for (auto& i : compositions(n)) {
        Word w;
        const int m = static_cast<int>(i.length());
        for (int k = 0; k < m; ++k) {
            const int letter = kind == SeriesKind::Sigma1TMinus1 ? m - k : k + 1;
            w.insert(w.end(), static_cast<std::size_t>(i[static_cast<std::size_t>(k)]), letter);
        }
        const RationalFunction c = kind == SeriesKind::Sigma1TMinus1 ? t.pow(n - m) * (t - 1).pow(m)
                                                                     : (RationalFunction(1) - t).pow(m);
        out.add_term_unchecked(w, c);
    }
    return out;
}

// Inverse of a graded series f_0 + f_1 + ... in the WQSym product, up to the
// degree of the input: g_0 = 1/f_0, g_k = -g_0 sum_{j>=1} f_j g_{k-j}.
inline std::vector<LinearCombination> graded_series_inverse(const std::vector<LinearCombination>& f) {
    if (f.empty()) throw ArithmeticError("graded_series_inverse: empty series");
    const RationalFunction f0 = f[0].coefficient({});
    if (f0.is_zero() || f[0].size() != 1) throw ArithmeticError("graded_series_inverse: constant term is not invertible");
    const Basis b = f[0].basis();
    const RationalFunction g0 = f0.inverse();
    std::vector<LinearCombination> g{LinearCombination::one(b) * g0};
    for (std::size_t k = 1; k < f.size(); ++k) {
        LinearCombination acc(b);
        for (std::size_t j = 1; j <= k; ++j) acc += multiply(f[j], g[k - j]);
        g.push_back(acc * (-g0));
    }
    return g;
}

}  // namespace chromllt
