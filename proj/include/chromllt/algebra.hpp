#pragma once

// Products, coproducts, internal products and changes of basis in WQSym,
// WQSym*, QSym, Sym, FQSym and WSym.

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "lincomb.hpp"
#include "partitions.hpp"

namespace chromllt {

namespace detail {

// Pairs of strictly increasing maps f: [a] -> [k], g: [b] -> [k] whose images
// cover [k]; each step takes the next level of the left factor, of the right
// one, or of both at once.
inline void quasi_shuffle_levels(int a, int b, const std::function<void(const std::vector<int>&,
                                                                         const std::vector<int>&)>& emit) {
    std::vector<int> f(static_cast<std::size_t>(a)), g(static_cast<std::size_t>(b));
    std::function<void(int, int, int)> rec = [&](int i, int j, int k) {
        if (i == a && j == b) {
            emit(f, g);
            return;
        }
        if (i < a) {
            f[static_cast<std::size_t>(i)] = k + 1;
            rec(i + 1, j, k + 1);
        }
        if (j < b) {
            g[static_cast<std::size_t>(j)] = k + 1;
            rec(i, j + 1, k + 1);
        }
        if (i < a && j < b) {
            f[static_cast<std::size_t>(i)] = k + 1;
            g[static_cast<std::size_t>(j)] = k + 1;
            rec(i + 1, j + 1, k + 1);
        }
    };
    rec(0, 0, 0);
}

inline RationalFunction sign(int k) { return RationalFunction(k % 2 == 0 ? 1 : -1); }

// Thread-safe memo with idempotent fill.
template <class K, class V>
class Memo {
public:
    template <class F>
    const V& get(const K& key, F&& make) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        V value = make();
        std::lock_guard<std::mutex> lock(mu_);
        return map_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mu_;
    std::map<K, V> map_;
};

inline void require_kind(const LinearCombination& x, std::initializer_list<Basis> allowed, const char* op) {
    for (Basis b : allowed) {
        if (x.basis() == b) return;
    }
    throw BasisError(std::string(op) + ": not defined on basis " + std::string(basis_name(x.basis())));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// WQSym: M basis

// Words w = w'w'' with pack(w') = u and pack(w'') = v.
inline std::vector<PackedWord> wqsym_m_product_words(const PackedWord& u, const PackedWord& v) {
    std::vector<PackedWord> out;
    detail::quasi_shuffle_levels(u.max_letter(), v.max_letter(), [&](const auto& f, const auto& g) {
        Word w;
        w.reserve(u.size() + v.size());
        for (int x : u) w.push_back(f[static_cast<std::size_t>(x) - 1]);
        for (int x : v) w.push_back(g[static_cast<std::size_t>(x) - 1]);
        out.emplace_back(std::move(w));
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline LinearCombination wqsym_m_mul(const PackedWord& u, const PackedWord& v) {
    LinearCombination out(Basis::WQSymM);
    for (auto& w : wqsym_m_product_words(u, v)) out.add_term_unchecked(w.letters(), 1);
    return out;
}

// Delta M_u = sum_k M_{u|<=k} (x) M_{pack(u|>k)}.
inline TensorElement wqsym_m_coproduct(const PackedWord& u) {
    TensorElement out(Basis::WQSymM, Basis::WQSymM);
    for (int k = 0; k <= u.max_letter(); ++k) {
        Word lo, hi;
        for (int x : u) (x <= k ? lo : hi).push_back(x > k ? x - k : x);
        out.add_term_unchecked(lo, hi, 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// QSym: monomial basis, quasi-shuffle

inline LinearCombination qsym_m_mul(const Composition& i, const Composition& j) {
    LinearCombination out(Basis::QSymM);
    const auto& a = i.parts();
    const auto& b = j.parts();
    Word c;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t p, std::size_t q) {
        if (p == a.size() && q == b.size()) {
            out.add_term_unchecked(c, 1);
            return;
        }
        if (p < a.size()) {
            c.push_back(a[p]);
            rec(p + 1, q);
            c.pop_back();
        }
        if (q < b.size()) {
            c.push_back(b[q]);
            rec(p, q + 1);
            c.pop_back();
        }
        if (p < a.size() && q < b.size()) {
            c.push_back(a[p] + b[q]);
            rec(p + 1, q + 1);
            c.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

// ---------------------------------------------------------------------------
// WSym: monomial basis on set partitions

// Partitions whose blocks are blocks of pi1, shifted blocks of pi2, or unions
// of one block of each.
inline LinearCombination wsym_m_mul(const SetPartition& pi1, const SetPartition& pi2) {
    LinearCombination out(Basis::WSymm);
    const int b1 = pi1.block_count();
    const int b2 = pi2.block_count();
    std::vector<int> match(static_cast<std::size_t>(b2), 0);  // block of pi1 joined to, or 0
    std::vector<char> used(static_cast<std::size_t>(b1) + 1, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == b2) {
            Word w(pi1.word());
            for (int x : pi2.word()) {
                const int m = match[static_cast<std::size_t>(x) - 1];
                w.push_back(m ? m : b1 + x);
            }
            out.add_term_unchecked(SetPartition(WordView(w)).word(), 1);
            return;
        }
        match[static_cast<std::size_t>(k)] = 0;
        rec(k + 1);
        for (int b = 1; b <= b1; ++b) {
            if (used[static_cast<std::size_t>(b)]) continue;
            used[static_cast<std::size_t>(b)] = 1;
            match[static_cast<std::size_t>(k)] = b;
            rec(k + 1);
            used[static_cast<std::size_t>(b)] = 0;
        }
        match[static_cast<std::size_t>(k)] = 0;
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------------------
// WSym: the basis m~ indexed by nonnesting partitions

namespace detail {

// For each nonnesting partition of [n], the partitions denesting to it.
inline const std::map<Word, std::vector<Word>, ShortLex>& denesting_fibers(int n) {
    static Memo<int, std::map<Word, std::vector<Word>, ShortLex>> memo;
    return memo.get(n, [n] {
        std::map<Word, std::vector<Word>, ShortLex> fibers;
        for (auto& p : set_partitions(n)) fibers[denest(p).word()].push_back(p.word());
        return fibers;
    });
}

}  // namespace detail

inline std::vector<SetPartition> denesting_fiber(const SetPartition& pi) {
    if (!is_nonnesting(pi)) throw DomainError("denesting fiber of a nesting partition " + pi.to_string());
    std::vector<SetPartition> out;
    for (const auto& w : detail::denesting_fibers(static_cast<int>(pi.size())).at(pi.word())) {
        out.emplace_back(WordView(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline LinearCombination mt_to_m(const LinearCombination& x) {
    detail::require_kind(x, {Basis::WSymmt}, "mt_to_m");
    LinearCombination out(Basis::WSymm);
    for (const auto& [k, c] : x) {
        const auto& fibers = detail::denesting_fibers(static_cast<int>(k.size()));
        auto it = fibers.find(k);
        if (it == fibers.end()) throw DomainError("m~ key is not a nonnesting partition: " + detail::render_letters(k));
        for (const auto& w : it->second) out.add_term_unchecked(w, c);
    }
    return out;
}

// Inverse of mt_to_m on its image. The fibers of denesting partition the set
// partitions of each size, so x lies in the span iff its coefficients are
// constant on every fiber.
inline LinearCombination m_to_mt(const LinearCombination& x) {
    detail::require_kind(x, {Basis::WSymm}, "m_to_mt");
    std::map<Word, RationalFunction, ShortLex> rep;
    const auto outside = [](const Word& d) {
        return DomainError("element is not in the span of the m~ basis (fiber of " + detail::render_letters(d) + ")");
    };
    for (const auto& [k, c] : x) {
        const Word d = denest(SetPartition(WordView(k))).word();
        auto [it, inserted] = rep.try_emplace(d, c);
        if (!inserted && !(it->second == c)) throw outside(d);
    }
    LinearCombination out(Basis::WSymmt);
    for (const auto& [d, c] : rep) {
        for (const auto& w : detail::denesting_fibers(static_cast<int>(d.size())).at(d)) {
            if (!(x.coefficient(w) == c)) throw outside(d);
        }
        out.add_term_unchecked(d, c);
    }
    return out;
}

// WQSym elements that are symmetric in the sense of WSym (coefficients
// constant on words with the same equality pattern) as m-combinations.
inline LinearCombination wqsym_to_wsym(const LinearCombination& x) {
    detail::require_kind(x, {Basis::WQSymM}, "wqsym_to_wsym");
    LinearCombination out(Basis::WSymm);
    std::map<Word, std::pair<RationalFunction, std::size_t>, ShortLex> seen;
    for (const auto& [k, c] : x) {
        auto [it, inserted] = seen.try_emplace(SetPartition(WordView(k)).word(), c, 0);
        if (!(it->second.first == c)) throw DomainError("element of WQSym is not in WSym");
        ++it->second.second;
    }
    for (const auto& [k, cc] : seen) {
        int blocks = k.empty() ? 0 : *std::max_element(k.begin(), k.end());
        std::size_t orderings = 1;
        for (int i = 2; i <= blocks; ++i) orderings *= static_cast<std::size_t>(i);
        if (cc.second != orderings) throw DomainError("element of WQSym is not in WSym");
        out.add_term_unchecked(k, cc.first);
    }
    return out;
}

// ---------------------------------------------------------------------------
// WQSym*: internal product, right action, and the image of Sym

inline LinearCombination wqsymdual_internal(const PackedWord& u, const PackedWord& v) {
    if (u.size() != v.size()) throw SizeMismatch("internal product needs equal degrees");
    return LinearCombination::single(Basis::WQSymDualN, biletter_pack(u, v).letters());
}

// hat S^I = sum of N_u over packed words of evaluation I.
inline LinearCombination hatS(const Composition& i) {
    LinearCombination out(Basis::WQSymDualN);
    for (auto& u : words_with_evaluation(i)) out.add_term_unchecked(u.letters(), 1);
    return out;
}

// N_u . sigma = N_{u sigma}.
inline LinearCombination n_right_action(const LinearCombination& x, const Permutation& sigma) {
    detail::require_kind(x, {Basis::WQSymDualN}, "n_right_action");
    LinearCombination out(Basis::WQSymDualN);
    for (const auto& [k, c] : x) {
        detail::require_same_size(k.size(), sigma.size(), "n_right_action");
        out.add_term_unchecked(right_action(WordView(k), sigma), c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// FQSym

// S^I = sum of F_sigma over Des(sigma^-1) contained in Des(I).
inline LinearCombination fqsym_S(const Composition& i) {
    LinearCombination out(Basis::FQSymF);
    const auto d = i.descent_set();
    for (auto& s : permutations(i.weight())) {
        bool ok = true;
        for (int x : descent_positions(WordView(s.inverse()))) {
            if (std::find(d.begin(), d.end(), x) == d.end()) ok = false;
        }
        if (ok) out.add_term_unchecked(s.letters(), 1);
    }
    return out;
}

inline LinearCombination fqsym_f_from_g(const LinearCombination& x) {
    detail::require_kind(x, {Basis::FQSymG}, "fqsym_f_from_g");
    LinearCombination out(Basis::FQSymF);
    for (const auto& [k, c] : x) out.add_term_unchecked(Permutation(k).inverse().letters(), c);
    return out;
}

inline LinearCombination fqsym_g_from_f(const LinearCombination& x) {
    detail::require_kind(x, {Basis::FQSymF}, "fqsym_g_from_f");
    LinearCombination out(Basis::FQSymG);
    for (const auto& [k, c] : x) out.add_term_unchecked(Permutation(k).inverse().letters(), c);
    return out;
}

// G_sigma = sum over std(u) = sigma of M_u.
inline LinearCombination iota(const Permutation& sigma) {
    LinearCombination out(Basis::WQSymM);
    for (auto& u : dst_words(sigma)) out.add_term_unchecked(u.letters(), 1);
    return out;
}

inline LinearCombination iota(const LinearCombination& g) {
    detail::require_kind(g, {Basis::FQSymG}, "iota");
    LinearCombination out(Basis::WQSymM);
    for (const auto& [k, c] : g) {
        for (auto& u : dst_words(Permutation(k))) out.add_term_unchecked(u.letters(), c);
    }
    return out;
}

// N_u -> F_std(u).
inline LinearCombination iota_star(const PackedWord& u) {
    return LinearCombination::single(Basis::FQSymF, standardize(u).letters());
}

inline LinearCombination iota_star(const LinearCombination& x) {
    detail::require_kind(x, {Basis::WQSymDualN}, "iota_star");
    LinearCombination out(Basis::FQSymF);
    for (const auto& [k, c] : x) out.add_term_unchecked(standardize(WordView(k)).letters(), c);
    return out;
}

// F_sigma * F_tau = F_{sigma o tau}.
inline LinearCombination fqsym_internal(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) throw SizeMismatch("internal product needs equal degrees");
    return LinearCombination::single(Basis::FQSymF, compose(sigma, tau).letters());
}

// ---------------------------------------------------------------------------
// Sym

// Nonnegative integer matrices with row sums I and column sums J.
inline std::vector<std::vector<std::vector<int>>> integer_matrices(const Composition& i, const Composition& j) {
    std::vector<std::vector<std::vector<int>>> out;
    if (i.weight() != j.weight()) return out;
    const std::size_t r = i.length(), c = j.length();
    std::vector<std::vector<int>> m(r, std::vector<int>(c, 0));
    std::vector<int> col(j.parts());
    std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t row, std::size_t k, int left) {
        if (row == r) {
            out.push_back(m);
            return;
        }
        if (k == c - 1) {
            if (left > col[k]) return;
            m[row][k] = left;
            col[k] -= left;
            rec(row + 1, 0, row + 1 < r ? i[row + 1] : 0);
            col[k] += left;
            m[row][k] = 0;
            return;
        }
        for (int x = 0; x <= std::min(left, col[k]); ++x) {
            m[row][k] = x;
            col[k] -= x;
            rec(row, k + 1, left - x);
            col[k] += x;
        }
        m[row][k] = 0;
    };
    if (r == 0) {
        out.push_back(m);
        return out;
    }
    rec(0, 0, i[0]);
    return out;
}

// S^I * S^J = sum over Mat(I, J) of S^{nonzero entries read row by row}.
inline LinearCombination sym_internal(const Composition& i, const Composition& j) {
    if (i.weight() != j.weight()) throw SizeMismatch("internal product needs equal degrees");
    LinearCombination out(Basis::SymS);
    for (const auto& m : integer_matrices(i, j)) {
        Word reading;
        for (const auto& row : m) {
            for (int x : row) {
                if (x) reading.push_back(x);
            }
        }
        out.add_term_unchecked(reading, 1);
    }
    return out;
}

// Sym.S -> FQSym.F through S^I = sum F_sigma.
inline LinearCombination sym_to_fqsym(const LinearCombination& x) {
    detail::require_kind(x, {Basis::SymS}, "sym_to_fqsym");
    LinearCombination out(Basis::FQSymF);
    for (const auto& [k, c] : x) out += fqsym_S(Composition(k)) * c;
    return out;
}

// ---------------------------------------------------------------------------
// Generic bilinear operations

namespace detail {

template <class Kernel>
LinearCombination bilinear(const LinearCombination& x, const LinearCombination& y, Basis out_basis, Kernel&& kernel) {
    LinearCombination out(out_basis);
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) {
            const RationalFunction c = ca * cb;
            kernel(a, b, [&](const Word& w, const RationalFunction& k) { out.add_term_unchecked(w, k.is_one() ? c : c * k); });
        }
    }
    return out;
}

}  // namespace detail

// Outer product in the bases that carry one.
inline LinearCombination multiply(const LinearCombination& x, const LinearCombination& y) {
    detail::require_basis(x.basis(), y.basis(), "multiply");
    using Emit = std::function<void(const Word&, const RationalFunction&)>;
    switch (x.basis()) {
        case Basis::WQSymM:
            return detail::bilinear(x, y, Basis::WQSymM, [](const Word& a, const Word& b, const Emit& emit) {
                for (auto& w : wqsym_m_product_words(PackedWord(a), PackedWord(b))) emit(w.letters(), 1);
            });
        case Basis::QSymM:
            return detail::bilinear(x, y, Basis::QSymM, [](const Word& a, const Word& b, const Emit& emit) {
                for (const auto& [w, c] : qsym_m_mul(Composition(a), Composition(b))) emit(w, c);
            });
        case Basis::WSymm:
            return detail::bilinear(x, y, Basis::WSymm, [](const Word& a, const Word& b, const Emit& emit) {
                for (const auto& [w, c] : wsym_m_mul(SetPartition(WordView(a)), SetPartition(WordView(b)))) emit(w, c);
            });
        case Basis::WSymmt:
            return m_to_mt(multiply(mt_to_m(x), mt_to_m(y)));
        case Basis::SymS:
        case Basis::SymLambda:
            return detail::bilinear(x, y, x.basis(), [](const Word& a, const Word& b, const Emit& emit) {
                Word w(a);
                w.insert(w.end(), b.begin(), b.end());
                emit(w, 1);
            });
        default:
            throw BasisError("multiply: no product implemented on " + std::string(basis_name(x.basis())));
    }
}

// Internal product within one homogeneous degree.
inline LinearCombination internal_product(const LinearCombination& x, const LinearCombination& y) {
    detail::require_basis(x.basis(), y.basis(), "internal_product");
    using Emit = std::function<void(const Word&, const RationalFunction&)>;
    const auto same_degree = [](const Word& a, const Word& b) {
        if (a.size() != b.size()) throw SizeMismatch("internal product needs equal degrees");
    };
    switch (x.basis()) {
        case Basis::WQSymDualN:
            return detail::bilinear(x, y, x.basis(), [&](const Word& a, const Word& b, const Emit& emit) {
                same_degree(a, b);
                emit(biletter_pack(a, b).letters(), 1);
            });
        case Basis::FQSymF:
            return detail::bilinear(x, y, x.basis(), [&](const Word& a, const Word& b, const Emit& emit) {
                same_degree(a, b);
                emit(compose(Permutation(a), Permutation(b)).letters(), 1);
            });
        case Basis::FQSymG:
            return detail::bilinear(x, y, x.basis(), [&](const Word& a, const Word& b, const Emit& emit) {
                same_degree(a, b);
                emit(compose(Permutation(b), Permutation(a)).letters(), 1);
            });
        case Basis::SymS:
            return detail::bilinear(x, y, x.basis(), [&](const Word& a, const Word& b, const Emit& emit) {
                const Composition i(a), j(b);
                if (i.weight() != j.weight()) throw SizeMismatch("internal product needs equal degrees");
                for (const auto& [w, c] : sym_internal(i, j)) emit(w, c);
            });
        default:
            throw BasisError("internal_product: not defined on " + std::string(basis_name(x.basis())));
    }
}

inline TensorElement coproduct(const LinearCombination& x) {
    detail::require_kind(x, {Basis::WQSymM, Basis::QSymM}, "coproduct");
    TensorElement out(x.basis(), x.basis());
    for (const auto& [k, c] : x) {
        if (x.basis() == Basis::WQSymM) {
            for (const auto& [kk, cc] : wqsym_m_coproduct(PackedWord(k))) out.add_term_unchecked(kk.first, kk.second, c);
        } else {
            for (std::size_t s = 0; s <= k.size(); ++s) {
                out.add_term_unchecked(Word(k.begin(), k.begin() + static_cast<long>(s)),
                                       Word(k.begin() + static_cast<long>(s), k.end()), c);
            }
        }
    }
    return out;
}

// (a (x) b)(c (x) d) = ac (x) bd.
inline TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y) {
    TensorElement out(x.left_basis(), x.right_basis());
    for (const auto& [k1, c1] : x) {
        for (const auto& [k2, c2] : y) {
            auto l = multiply(LinearCombination::single(x.left_basis(), k1.first),
                              LinearCombination::single(y.left_basis(), k2.first));
            auto r = multiply(LinearCombination::single(x.right_basis(), k1.second),
                              LinearCombination::single(y.right_basis(), k2.second));
            const RationalFunction c = c1 * c2;
            for (const auto& [a, ca] : l) {
                for (const auto& [b, cb] : r) out.add_term_unchecked(a, b, c * ca * cb);
            }
        }
    }
    return out;
}

// <N_u, M_v> = delta_{u,v}.
inline RationalFunction duality_pairing(const LinearCombination& x, const LinearCombination& y) {
    detail::require_kind(x, {Basis::WQSymDualN}, "duality_pairing");
    detail::require_kind(y, {Basis::WQSymM}, "duality_pairing");
    RationalFunction acc;
    for (const auto& [k, c] : x) {
        auto it = y.terms().find(k);
        if (it != y.terms().end()) acc += c * it->second;
    }
    return acc;
}

// <M_I, S^J> = delta_{I,J}.
inline RationalFunction qsym_sym_pairing(const LinearCombination& x, const LinearCombination& y) {
    detail::require_kind(x, {Basis::QSymM}, "qsym_sym_pairing");
    detail::require_kind(y, {Basis::SymS}, "qsym_sym_pairing");
    RationalFunction acc;
    for (const auto& [k, c] : x) {
        auto it = y.terms().find(k);
        if (it != y.terms().end()) acc += c * it->second;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// QSym: F <-> M

inline LinearCombination qsym_m_from_f(const LinearCombination& x) {
    detail::require_kind(x, {Basis::QSymF}, "qsym_m_from_f");
    LinearCombination out(Basis::QSymM);
    for (const auto& [k, c] : x) {
        for (auto& j : finer_compositions(Composition(k))) out.add_term_unchecked(j.parts(), c);
    }
    return out;
}

inline LinearCombination qsym_f_from_m(const LinearCombination& x) {
    detail::require_kind(x, {Basis::QSymM}, "qsym_f_from_m");
    LinearCombination out(Basis::QSymF);
    for (const auto& [k, c] : x) {
        const Composition i(k);
        for (auto& j : finer_compositions(i)) {
            out.add_term_unchecked(j.parts(), detail::sign(static_cast<int>(j.length() - i.length())) * c);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// WQSym: Phi and PhiCheck

// Phi_u = sum over v strongly finer than u of M_v.
inline LinearCombination m_from_phi(const LinearCombination& x) {
    detail::require_kind(x, {Basis::WQSymPhi}, "m_from_phi");
    LinearCombination out(Basis::WQSymM);
    for (const auto& [k, c] : x) {
        for (auto& v : strong_refinement_set(PackedWord(k))) out.add_term_unchecked(v.letters(), c);
    }
    return out;
}

// M_u = sum over v strongly finer than u of (-1)^{max v - max u} Phi_v.
inline LinearCombination phi_from_m(const LinearCombination& x) {
    detail::require_kind(x, {Basis::WQSymM}, "phi_from_m");
    LinearCombination out(Basis::WQSymPhi);
    for (const auto& [k, c] : x) {
        const PackedWord u(k);
        for (auto& v : strong_refinement_set(u)) {
            out.add_term_unchecked(v.letters(), detail::sign(v.max_letter() - u.max_letter()) * c);
        }
    }
    return out;
}

// PhiCheck_u = sum over v strongly finer than bar(u) of M_{bar v}.
inline LinearCombination m_from_phicheck(const LinearCombination& x) {
    detail::require_kind(x, {Basis::WQSymPhiCheck}, "m_from_phicheck");
    LinearCombination out(Basis::WQSymM);
    for (const auto& [k, c] : x) {
        for (auto& v : strong_refinement_set(bar(PackedWord(k)))) out.add_term_unchecked(bar(WordView(v)), c);
    }
    return out;
}

inline LinearCombination phicheck_from_m(const LinearCombination& x) {
    detail::require_kind(x, {Basis::WQSymM}, "phicheck_from_m");
    LinearCombination out(Basis::WQSymPhiCheck);
    for (const auto& [k, c] : x) {
        const PackedWord ub = bar(PackedWord(k));
        for (auto& v : strong_refinement_set(ub)) {
            out.add_term_unchecked(bar(WordView(v)), detail::sign(v.max_letter() - ub.max_letter()) * c);
        }
    }
    return out;
}

// Any WQSym element in the M basis.
inline LinearCombination to_wqsym_m(const LinearCombination& x) {
    switch (x.basis()) {
        case Basis::WQSymM:
            return x;
        case Basis::WQSymPhi:
            return m_from_phi(x);
        case Basis::WQSymPhiCheck:
            return m_from_phicheck(x);
        default:
            throw BasisError("to_wqsym_m: not a WQSym element (" + std::string(basis_name(x.basis())) + ")");
    }
}

// Commutative image: M_u -> M_{ev(u)}.
inline LinearCombination wqsym_to_qsym(const LinearCombination& x) {
    const LinearCombination m = to_wqsym_m(x);
    LinearCombination out(Basis::QSymM);
    for (const auto& [k, c] : m) out.add_term_unchecked(evaluation(WordView(k)).parts(), c);
    return out;
}

// ---------------------------------------------------------------------------
// Sym inside WQSym: S_n -> sum of nonincreasing packed words, Lambda_n -> M_{12..n}

inline LinearCombination sym_to_wqsym(const LinearCombination& x) {
    detail::require_kind(x, {Basis::SymS, Basis::SymLambda}, "sym_to_wqsym");
    const bool lambda = x.basis() == Basis::SymLambda;
    const auto generator = [lambda](int n) {
        LinearCombination g(Basis::WQSymM);
        if (lambda) {
            Word w(static_cast<std::size_t>(n));
            std::iota(w.begin(), w.end(), 1);
            g.add_term_unchecked(w, 1);
        } else {
            for (auto& ev : compositions(n)) {
                Word w;
                for (std::size_t k = 0; k < ev.length(); ++k) {
                    w.insert(w.end(), static_cast<std::size_t>(ev[k]), static_cast<int>(ev.length() - k));
                }
                g.add_term_unchecked(w, 1);
            }
        }
        return g;
    };
    LinearCombination out(Basis::WQSymM);
    for (const auto& [k, c] : x) {
        LinearCombination term = LinearCombination::one(Basis::WQSymM);
        for (int part : k) term = multiply(term, generator(part));
        out += term * c;
    }
    return out;
}

}  // namespace chromllt
