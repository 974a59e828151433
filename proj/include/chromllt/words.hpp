#pragma once

// Packed words, permutations and compositions, together with the orders and
// actions on them (packing, standardization, biletter packing, refinement,
// strong refinement, destandardization lattices).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace chromllt {

using Word = std::vector<int>;
using WordView = std::span<const int>;

// Shortlex order: by length, then lexicographically. Canonical order of keys.
struct ShortLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

namespace detail {

inline std::strong_ordering shortlex_cmp(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a <=> b;
}

inline std::string render_letters(WordView w) {
    const bool small = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x <= 9; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!small && i > 0) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

}  // namespace detail

class PackedWord {
public:
    PackedWord() = default;
    explicit PackedWord(Word letters) : w_(std::move(letters)) {
        std::vector<char> seen;
        for (int x : w_) {
            if (x < 1) throw DomainError("packed word letters must be positive");
            if (static_cast<std::size_t>(x) > seen.size()) seen.resize(static_cast<std::size_t>(x), 0);
            seen[static_cast<std::size_t>(x) - 1] = 1;
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw DomainError("word is not packed");
        max_ = static_cast<int>(seen.size());
    }
    PackedWord(std::initializer_list<int> letters) : PackedWord(Word(letters)) {}

    std::size_t size() const { return w_.size(); }
    bool empty() const { return w_.empty(); }
    int max_letter() const { return max_; }
    const Word& letters() const { return w_; }
    int operator[](std::size_t i) const { return w_[i]; }
    auto begin() const { return w_.begin(); }
    auto end() const { return w_.end(); }
    operator WordView() const { return w_; }  // NOLINT(google-explicit-constructor)

    std::string to_string() const { return detail::render_letters(w_); }

    friend bool operator==(const PackedWord& a, const PackedWord& b) { return a.w_ == b.w_; }
    friend std::strong_ordering operator<=>(const PackedWord& a, const PackedWord& b) {
        return detail::shortlex_cmp(a.w_, b.w_);
    }

private:
    Word w_;
    int max_ = 0;
};

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(Word letters) : w_(std::move(letters)) {
        std::vector<char> seen(w_.size(), 0);
        for (int x : w_) {
            if (x < 1 || static_cast<std::size_t>(x) > w_.size() || seen[static_cast<std::size_t>(x) - 1]) {
                throw DomainError("word is not a permutation");
            }
            seen[static_cast<std::size_t>(x) - 1] = 1;
        }
    }
    Permutation(std::initializer_list<int> letters) : Permutation(Word(letters)) {}

    static Permutation identity(int n) {
        Word w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    std::size_t size() const { return w_.size(); }
    const Word& letters() const { return w_; }
    int operator[](std::size_t i) const { return w_[i]; }
    // sigma(i) with 1-based argument.
    int operator()(int i) const { return w_[static_cast<std::size_t>(i) - 1]; }
    auto begin() const { return w_.begin(); }
    auto end() const { return w_.end(); }
    operator WordView() const { return w_; }  // NOLINT(google-explicit-constructor)
    PackedWord as_packed() const { return PackedWord(w_); }

    Permutation inverse() const {
        Word inv(w_.size());
        for (std::size_t i = 0; i < w_.size(); ++i) inv[static_cast<std::size_t>(w_[i]) - 1] = static_cast<int>(i) + 1;
        return Permutation(std::move(inv));
    }

    // 1-based position of value v.
    int position_of(int v) const {
        return static_cast<int>(std::find(w_.begin(), w_.end(), v) - w_.begin()) + 1;
    }

    std::string to_string() const { return detail::render_letters(w_); }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return detail::shortlex_cmp(a.w_, b.w_);
    }

private:
    Word w_;
};

inline std::ostream& operator<<(std::ostream& os, const PackedWord& w) { return os << w.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.to_string(); }

// (sigma o tau)(i) = sigma(tau(i)).
inline Permutation compose(const Permutation& sigma, const Permutation& tau) {
    detail::require_same_size(sigma.size(), tau.size(), "compose");
    Word w(tau.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = sigma(tau[i]);
    return Permutation(std::move(w));
}

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : p_(std::move(parts)) {
        for (int x : p_) {
            if (x < 1) throw DomainError("composition parts must be positive");
        }
    }
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    // Composition of n whose descent set (set of partial sums) is `descents`.
    static Composition from_descent_set(int n, std::vector<int> descents) {
        std::sort(descents.begin(), descents.end());
        std::vector<int> parts;
        int prev = 0;
        for (int d : descents) {
            if (d <= prev || d >= n) throw DomainError("invalid descent set");
            parts.push_back(d - prev);
            prev = d;
        }
        if (n > 0) parts.push_back(n - prev);
        return Composition(std::move(parts));
    }

    std::size_t length() const { return p_.size(); }
    int weight() const { return std::accumulate(p_.begin(), p_.end(), 0); }
    const std::vector<int>& parts() const { return p_; }
    int operator[](std::size_t i) const { return p_[i]; }
    bool empty() const { return p_.empty(); }
    auto begin() const { return p_.begin(); }
    auto end() const { return p_.end(); }

    // Des(I) = {i1, i1+i2, ..., i1+...+i_{r-1}}.
    std::vector<int> descent_set() const {
        std::vector<int> d;
        int s = 0;
        for (std::size_t k = 0; k + 1 < p_.size(); ++k) d.push_back(s += p_[k]);
        return d;
    }
    // Partial sums including the total.
    std::vector<int> partial_sums() const {
        std::vector<int> s(p_.size());
        std::partial_sum(p_.begin(), p_.end(), s.begin());
        return s;
    }
    int maj() const {
        auto d = descent_set();
        return std::accumulate(d.begin(), d.end(), 0);
    }
    Composition reversed() const { return Composition(std::vector<int>(p_.rbegin(), p_.rend())); }

    // Ribbon transpose: complement the descent set in [1, n-1] and reverse it.
    Composition conjugate() const {
        const int n = weight();
        if (n == 0) return {};
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        for (int d : descent_set()) in[static_cast<std::size_t>(d)] = 1;
        std::vector<int> c;
        for (int i = 1; i < n; ++i) {
            if (!in[static_cast<std::size_t>(i)]) c.push_back(n - i);
        }
        return from_descent_set(n, std::move(c));
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(p_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const Composition& a, const Composition& b) { return a.p_ == b.p_; }
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        return detail::shortlex_cmp(a.p_, b.p_);
    }

private:
    std::vector<int> p_;
};

inline std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << c.to_string(); }

// I is finer than J (reverse refinement order I >= J): Des(J) is a subset of Des(I).
inline bool is_finer(const Composition& i, const Composition& j) {
    if (i.weight() != j.weight()) return false;
    auto si = i.partial_sums();
    for (int s : j.partial_sums()) {
        if (!std::binary_search(si.begin(), si.end(), s)) return false;
    }
    return true;
}

// All compositions of n, shortlex order.
inline std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        std::vector<int> d;
        for (int i = 1; i < n; ++i) {
            if (mask & (1U << (i - 1))) d.push_back(i);
        }
        out.push_back(Composition::from_descent_set(n, d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Compositions finer than J (including J).
inline std::vector<Composition> finer_compositions(const Composition& j) {
    std::vector<Composition> out;
    for (auto& i : compositions(j.weight())) {
        if (is_finer(i, j)) out.push_back(i);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Packing, standardization, evaluation

inline PackedWord pack(WordView w) {
    Word sorted(w.begin(), w.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), w[i]) - sorted.begin()) + 1;
    }
    return PackedWord(std::move(out));
}

// Equal letters are ranked left to right.
inline Permutation standardize(WordView w) {
    std::vector<std::size_t> idx(w.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
    Word out(w.size());
    for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<int>(r) + 1;
    return Permutation(std::move(out));
}

// Multiplicities of the occurring letters, in increasing letter order.
inline Composition evaluation(WordView w) {
    PackedWord p = pack(w);
    std::vector<int> ev(static_cast<std::size_t>(p.max_letter()), 0);
    for (int x : p) ++ev[static_cast<std::size_t>(x) - 1];
    return Composition(std::move(ev));
}

// pack of the biletter word (top over bottom), lexicographic with priority to the top.
inline PackedWord biletter_pack(WordView top, WordView bottom) {
    detail::require_same_size(top.size(), bottom.size(), "biletter_pack");
    std::vector<std::pair<int, int>> bi(top.size());
    for (std::size_t i = 0; i < top.size(); ++i) bi[i] = {top[i], bottom[i]};
    auto sorted = bi;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Word out(bi.size());
    for (std::size_t i = 0; i < bi.size(); ++i) {
        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), bi[i]) - sorted.begin()) + 1;
    }
    return PackedWord(std::move(out));
}

inline Word bar(WordView w) { return Word(w.rbegin(), w.rend()); }
inline PackedWord bar(const PackedWord& w) { return PackedWord(bar(WordView(w))); }
inline Permutation bar(const Permutation& w) { return Permutation(bar(WordView(w))); }

// (u sigma)_i = u_{sigma(i)}.
inline Word right_action(WordView u, const Permutation& sigma) {
    detail::require_same_size(u.size(), sigma.size(), "right_action");
    Word out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[static_cast<std::size_t>(sigma[i]) - 1];
    return out;
}
inline PackedWord right_action(const PackedWord& u, const Permutation& sigma) {
    return PackedWord(right_action(WordView(u), sigma));
}

// ---------------------------------------------------------------------------
// Refinement of set compositions

// v >=_ref u: every value block of u is a union of consecutive value blocks of v.
// Equivalently u_i < u_j implies v_i < v_j, and v_i = v_j implies u_i = u_j.
inline bool refines(const PackedWord& v, const PackedWord& u) {
    detail::require_same_size(v.size(), u.size(), "refines");
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (u[i] < u[j] && !(v[i] < v[j])) return false;
            if (v[i] == v[j] && u[i] != u[j]) return false;
        }
    }
    return true;
}

// The word obtained from u by merging value blocks: merge_after[k] (k = 1..m-1)
// tells whether block k+1 is merged into block k.
inline PackedWord merge_blocks(const PackedWord& u, std::uint32_t merge_mask) {
    const int m = u.max_letter();
    std::vector<int> relabel(static_cast<std::size_t>(m) + 1, 0);
    int cur = 0;
    for (int k = 1; k <= m; ++k) {
        if (k == 1 || !(merge_mask & (1U << (k - 2)))) ++cur;
        relabel[static_cast<std::size_t>(k)] = cur;
    }
    Word out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = relabel[static_cast<std::size_t>(u[i])];
    return PackedWord(std::move(out));
}

// All v with u >=_ref v, obtained by merging consecutive value blocks of u.
inline std::vector<PackedWord> coarsenings(const PackedWord& u) {
    std::vector<PackedWord> out;
    const int m = u.max_letter();
    if (m <= 1) return {u};
    for (std::uint32_t mask = 0; mask < (1U << (m - 1)); ++mask) out.push_back(merge_blocks(u, mask));
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Ordered set partitions of `items`, each emitted as a vector of blocks.
inline void ordered_set_partitions(const std::vector<std::size_t>& items,
                                   const std::function<void(const std::vector<int>&)>& emit) {
    // Assign each item a block index forming a surjection onto [1..k].
    const std::size_t n = items.size();
    std::vector<int> label(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int maxl) {
        if (pos == n) {
            // Every surjection onto 1..k where labels are packed.
            std::vector<char> seen(static_cast<std::size_t>(maxl) + 1, 0);
            for (int l : label) seen[static_cast<std::size_t>(l)] = 1;
            for (int l = 1; l <= maxl; ++l) {
                if (!seen[static_cast<std::size_t>(l)]) return;
            }
            emit(label);
            return;
        }
        for (int l = 1; l <= static_cast<int>(n); ++l) {
            label[pos] = l;
            rec(pos + 1, std::max(maxl, l));
        }
    };
    rec(0, 0);
}

}  // namespace detail

// All v with v >=_ref u.
inline std::vector<PackedWord> refinements(const PackedWord& u) {
    const int m = u.max_letter();
    std::vector<std::vector<std::size_t>> blocks(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < u.size(); ++i) blocks[static_cast<std::size_t>(u[i]) - 1].push_back(i);
    std::vector<PackedWord> out;
    Word v(u.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t b, int offset) {
        if (b == blocks.size()) {
            out.emplace_back(v);
            return;
        }
        detail::ordered_set_partitions(blocks[b], [&](const std::vector<int>& label) {
            int k = 0;
            for (std::size_t i = 0; i < label.size(); ++i) {
                v[blocks[b][i]] = offset + label[i];
                k = std::max(k, label[i]);
            }
            rec(b + 1, offset + k);
        });
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Destandardization lattices and the strong refinement order

// Values i in [1, n-1] such that i+1 is to the right of i.
inline std::vector<int> advances(const Permutation& sigma) {
    const auto inv = sigma.inverse();
    std::vector<int> a;
    for (int i = 1; i < static_cast<int>(sigma.size()); ++i) {
        if (inv(i + 1) > inv(i)) a.push_back(i);
    }
    return a;
}

// The packed word of standardization sigma attached to a subset S of the
// advances: the letter at the position of i+1 exceeds that at the position of i
// iff i is in S (non-advances always increase).
inline PackedWord dst_word(const Permutation& sigma, const std::vector<int>& subset) {
    const int n = static_cast<int>(sigma.size());
    const auto inv = sigma.inverse();
    std::vector<int> value(static_cast<std::size_t>(n) + 1, 0);  // value assigned to rank i
    if (n > 0) value[1] = 1;
    for (int i = 1; i < n; ++i) {
        const bool advance = inv(i + 1) > inv(i);
        const bool strict = !advance || std::find(subset.begin(), subset.end(), i) != subset.end();
        value[static_cast<std::size_t>(i) + 1] = value[static_cast<std::size_t>(i)] + (strict ? 1 : 0);
    }
    Word w(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) w[static_cast<std::size_t>(p)] = value[static_cast<std::size_t>(sigma[static_cast<std::size_t>(p)])];
    return PackedWord(std::move(w));
}

// Subset of advances(std(u)) encoding u in its destandardization lattice.
inline std::vector<int> dst_subset(const PackedWord& u) {
    const auto sigma = standardize(u);
    const auto inv = sigma.inverse();
    std::vector<int> s;
    for (int i : advances(sigma)) {
        if (u[static_cast<std::size_t>(inv(i + 1)) - 1] > u[static_cast<std::size_t>(inv(i)) - 1]) s.push_back(i);
    }
    return s;
}

// All packed words of standardization sigma; element k corresponds to the
// subset of advances selected by the bits of k.
inline std::vector<PackedWord> dst_words(const Permutation& sigma) {
    const auto a = advances(sigma);
    std::vector<PackedWord> out;
    for (std::uint32_t mask = 0; mask < (1U << a.size()); ++mask) {
        std::vector<int> s;
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (mask & (1U << k)) s.push_back(a[k]);
        }
        out.push_back(dst_word(sigma, s));
    }
    return out;
}

// v is strongly finer than u: same standardization and v >=_ref u.
inline bool strongly_finer(const PackedWord& v, const PackedWord& u) {
    detail::require_same_size(v.size(), u.size(), "strongly_finer");
    return standardize(v) == standardize(u) && refines(v, u);
}

// Words strongly finer than u (an upper interval of the boolean lattice).
inline std::vector<PackedWord> strong_refinement_set(const PackedWord& u) {
    const auto sigma = standardize(u);
    const auto a = advances(sigma);
    const auto s = dst_subset(u);
    std::vector<int> free;
    for (int i : a) {
        if (std::find(s.begin(), s.end(), i) == s.end()) free.push_back(i);
    }
    std::vector<PackedWord> out;
    for (std::uint32_t mask = 0; mask < (1U << free.size()); ++mask) {
        auto sub = s;
        for (std::size_t k = 0; k < free.size(); ++k) {
            if (mask & (1U << k)) sub.push_back(free[k]);
        }
        out.push_back(dst_word(sigma, sub));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Words strongly coarser than u (a lower interval of the boolean lattice).
inline std::vector<PackedWord> strong_coarsening_set(const PackedWord& u) {
    const auto sigma = standardize(u);
    const auto s = dst_subset(u);
    std::vector<PackedWord> out;
    for (std::uint32_t mask = 0; mask < (1U << s.size()); ++mask) {
        std::vector<int> sub;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (mask & (1U << k)) sub.push_back(s[k]);
        }
        out.push_back(dst_word(sigma, sub));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

// Packed words of length n in shortlex order.
inline std::vector<PackedWord> packed_words(int n) {
    std::vector<PackedWord> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    Word w(static_cast<std::size_t>(n), 0);
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    for (int m = 1; m <= n; ++m) {
        int missing = m;
        std::function<void(int)> rec = [&](int pos) {
            if (missing > n - pos) return;
            if (pos == n) {
                out.emplace_back(w);
                return;
            }
            for (int x = 1; x <= m; ++x) {
                w[static_cast<std::size_t>(pos)] = x;
                if (count[static_cast<std::size_t>(x)]++ == 0) --missing;
                rec(pos + 1);
                if (--count[static_cast<std::size_t>(x)] == 0) ++missing;
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Permutations of [n] in lexicographic order.
inline std::vector<Permutation> permutations(int n) {
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Packed words of evaluation I, shortlex order.
inline std::vector<PackedWord> words_with_evaluation(const Composition& ev) {
    Word w;
    for (std::size_t k = 0; k < ev.length(); ++k) w.insert(w.end(), static_cast<std::size_t>(ev[k]), static_cast<int>(k) + 1);
    std::vector<PackedWord> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Descent positions of a word: i with w_i > w_{i+1} (1-based).
inline std::vector<int> descent_positions(WordView w) {
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
    }
    return d;
}

inline int major_index(WordView w) {
    auto d = descent_positions(w);
    return std::accumulate(d.begin(), d.end(), 0);
}

inline int inversion_count(WordView w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j] ? 1 : 0;
    }
    return c;
}

// Parse "13132" (digits) or "1,3,13" (comma separated).
inline Word parse_word(const std::string& s) {
    Word w;
    if (s.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= s.size()) {
            auto end = s.find(',', start);
            if (end == std::string::npos) end = s.size();
            w.push_back(std::stoi(s.substr(start, end - start)));
            start = end + 1;
        }
    } else {
        for (char c : s) {
            if (c < '0' || c > '9') throw DomainError("invalid word: " + s);
            w.push_back(c - '0');
        }
    }
    return w;
}

}  // namespace chromllt
