#pragma once

// Set partitions as canonical words, denesting, nonnesting partitions and the
// bijection eta with Young diagrams inside the staircase.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "words.hpp"

namespace chromllt {

// A set partition of [n] stored as the word whose blocks are numbered by
// increasing minima (first occurrences of 1, 2, 3, ... appear in order).
class SetPartition {
public:
    SetPartition() = default;
    // Any word: positions with equal letters share a block.
    explicit SetPartition(WordView w) {
        std::vector<std::pair<int, int>> relabel;
        w_.reserve(w.size());
        for (int x : w) {
            auto it = std::find_if(relabel.begin(), relabel.end(), [x](const auto& p) { return p.first == x; });
            if (it == relabel.end()) {
                relabel.emplace_back(x, static_cast<int>(relabel.size()) + 1);
                w_.push_back(static_cast<int>(relabel.size()));
            } else {
                w_.push_back(it->second);
            }
        }
        blocks_ = static_cast<int>(relabel.size());
    }
    explicit SetPartition(const PackedWord& w) : SetPartition(WordView(w)) {}

    static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
        Word w(static_cast<std::size_t>(n), 0);
        int label = 0;
        for (const auto& b : blocks) {
            ++label;
            for (int x : b) {
                if (x < 1 || x > n || w[static_cast<std::size_t>(x) - 1] != 0) throw DomainError("invalid block list");
                w[static_cast<std::size_t>(x) - 1] = label;
            }
        }
        if (std::find(w.begin(), w.end(), 0) != w.end()) throw DomainError("blocks do not cover [n]");
        return SetPartition(WordView(w));
    }

    std::size_t size() const { return w_.size(); }
    int block_count() const { return blocks_; }
    const Word& word() const { return w_; }
    PackedWord packed() const { return PackedWord(w_); }
    // Block label of element i (1-based).
    int block_of(int i) const { return w_[static_cast<std::size_t>(i) - 1]; }

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> b(static_cast<std::size_t>(blocks_));
        for (std::size_t i = 0; i < w_.size(); ++i) b[static_cast<std::size_t>(w_[i]) - 1].push_back(static_cast<int>(i) + 1);
        return b;
    }

    // Pairs of consecutive elements inside each block, sorted.
    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> a;
        std::vector<int> last(static_cast<std::size_t>(blocks_) + 1, 0);
        for (std::size_t i = 0; i < w_.size(); ++i) {
            int& l = last[static_cast<std::size_t>(w_[i])];
            if (l) a.emplace_back(l, static_cast<int>(i) + 1);
            l = static_cast<int>(i) + 1;
        }
        std::sort(a.begin(), a.end());
        return a;
    }

    // Restriction to the interval [lo, hi], relabeled to start at 1.
    SetPartition restrict_interval(int lo, int hi) const {
        if (lo < 1 || hi > static_cast<int>(w_.size()) || lo > hi + 1) throw DomainError("invalid interval");
        return SetPartition(WordView(w_).subspan(static_cast<std::size_t>(lo) - 1, static_cast<std::size_t>(hi - lo + 1)));
    }

    std::string to_string() const { return detail::render_letters(w_); }

    friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.w_ == b.w_; }
    friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
        return detail::shortlex_cmp(a.w_, b.w_);
    }

private:
    Word w_;
    int blocks_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const SetPartition& p) { return os << p.to_string(); }

// All set partitions of [n] (restricted growth words) in lexicographic order.
inline std::vector<SetPartition> set_partitions(int n) {
    std::vector<SetPartition> out;
    Word w(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int m) {
        if (pos == n) {
            out.emplace_back(WordView(w));
            return;
        }
        for (int x = 1; x <= m + 1; ++x) {
            w[static_cast<std::size_t>(pos)] = x;
            rec(pos + 1, std::max(m, x));
        }
    };
    rec(0, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Denesting

enum class DenestOrder {
    SmallestRightEnd,  // smallest l first, then smallest i
    LargestRightEnd,   // largest l first, then largest i
    WidestFirst,       // largest l - i first
};

namespace detail {

// A consecutive arc (i, l) of one block strictly containing two elements of another block.
inline bool arc_is_nesting(const Word& w, int i, int l) {
    const int own = w[static_cast<std::size_t>(i) - 1];
    std::vector<int> seen;
    for (int r = i + 1; r < l; ++r) {
        const int b = w[static_cast<std::size_t>(r) - 1];
        if (b == own) return false;  // not a consecutive arc
        if (std::find(seen.begin(), seen.end(), b) != seen.end()) return true;
        seen.push_back(b);
    }
    return false;
}

}  // namespace detail

// Iterate the splitting rule until no consecutive arc (i, l) strictly contains two
// elements j < k of another block; each step splits one block between i and l.
inline SetPartition denest(const SetPartition& pi, DenestOrder order = DenestOrder::SmallestRightEnd) {
    Word w = pi.word();
    int fresh = pi.block_count();
    for (;;) {
        // Labels in w are arbitrary distinct integers while splitting.
        std::vector<std::pair<int, int>> found;
        for (auto [i, l] : SetPartition(WordView(w)).arcs()) {
            if (detail::arc_is_nesting(w, i, l)) found.emplace_back(i, l);
        }
        if (found.empty()) break;
        switch (order) {
            case DenestOrder::SmallestRightEnd:
                std::sort(found.begin(), found.end(), [](auto a, auto b) {
                    return a.second != b.second ? a.second < b.second : a.first < b.first;
                });
                break;
            case DenestOrder::LargestRightEnd:
                std::sort(found.begin(), found.end(), [](auto a, auto b) {
                    return a.second != b.second ? a.second > b.second : a.first > b.first;
                });
                break;
            case DenestOrder::WidestFirst:
                std::sort(found.begin(), found.end(), [](auto a, auto b) {
                    return a.second - a.first != b.second - b.first ? a.second - a.first > b.second - b.first
                                                                    : a < b;
                });
                break;
        }
        // Split the block of the chosen arc: elements >= l get a fresh label.
        auto [i, l] = found.front();
        const int label = w[static_cast<std::size_t>(i) - 1];
        ++fresh;
        for (std::size_t p = static_cast<std::size_t>(l) - 1; p < w.size(); ++p) {
            if (w[p] == label) w[p] = fresh;
        }
    }
    return SetPartition(WordView(w));
}

inline bool is_nonnesting(const SetPartition& pi) {
    for (auto [i, l] : pi.arcs()) {
        if (detail::arc_is_nesting(pi.word(), i, l)) return false;
    }
    return true;
}

// Nonnesting partitions of [n], lexicographic order.
inline std::vector<SetPartition> nonnesting_partitions(int n) {
    std::vector<SetPartition> out;
    for (auto& p : set_partitions(n)) {
        if (is_nonnesting(p)) out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Diagrams in the staircase

// A Young diagram inside the staircase (n-1, ..., 1). Cell (i, j) with i < j
// sits in the row of j; row k (0-based) is the row of j = n - k and holds the
// cells (1, j), ..., (rows[k], j).
class StaircaseDiagram {
public:
    StaircaseDiagram() = default;
    StaircaseDiagram(int n, std::vector<int> rows) : n_(n), rows_(std::move(rows)) {
        if (n < 0) throw DomainError("negative ambient size");
        const std::size_t nrows = n > 1 ? static_cast<std::size_t>(n - 1) : 0;
        if (rows_.size() > nrows) {
            if (std::any_of(rows_.begin() + static_cast<std::ptrdiff_t>(nrows), rows_.end(), [](int x) { return x != 0; })) {
                throw DomainError("diagram does not fit in the staircase");
            }
        }
        rows_.resize(nrows, 0);
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (rows_[k] < 0 || rows_[k] > n - 1 - static_cast<int>(k)) throw DomainError("diagram does not fit in the staircase");
            if (k > 0 && rows_[k] > rows_[k - 1]) throw DomainError("diagram rows must be weakly decreasing");
        }
    }

    static StaircaseDiagram full(int n) {
        std::vector<int> r;
        for (int k = 0; k + 1 < n; ++k) r.push_back(n - 1 - k);
        return {n, r};
    }

    int ambient() const { return n_; }
    // Row lengths, padded with zeros to n - 1 entries.
    const std::vector<int>& rows() const { return rows_; }
    // Partition with trailing zeros removed.
    std::vector<int> shape() const {
        std::vector<int> s = rows_;
        while (!s.empty() && s.back() == 0) s.pop_back();
        return s;
    }
    int size() const {
        int s = 0;
        for (int x : rows_) s += x;
        return s;
    }
    bool contains(int i, int j) const {
        if (!(1 <= i && i < j && j <= n_)) return false;
        return i <= rows_[static_cast<std::size_t>(n_ - j)];
    }
    bool is_contained_in(const StaircaseDiagram& o) const {
        detail::require_same_size(static_cast<std::size_t>(n_), static_cast<std::size_t>(o.n_), "diagram containment");
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (rows_[k] > o.rows_[k]) return false;
        }
        return true;
    }

    // Corners (removable cells) as (i, j).
    std::vector<std::pair<int, int>> corners() const {
        std::vector<std::pair<int, int>> c;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const int below = k + 1 < rows_.size() ? rows_[k + 1] : 0;
            if (rows_[k] > 0 && below < rows_[k]) c.emplace_back(rows_[k], n_ - static_cast<int>(k));
        }
        std::sort(c.begin(), c.end());
        return c;
    }

    std::string to_string() const {
        std::string out = "(";
        auto s = shape();
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(s[k]);
        }
        return out + ")@" + std::to_string(n_);
    }

    friend bool operator==(const StaircaseDiagram& a, const StaircaseDiagram& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    int n_ = 0;
    std::vector<int> rows_;
};

inline std::ostream& operator<<(std::ostream& os, const StaircaseDiagram& d) { return os << d.to_string(); }

// Parse "(2,2,1)@5" or "()@3".
inline StaircaseDiagram parse_diagram(const std::string& s) {
    auto at = s.find('@');
    if (s.empty() || s.front() != '(' || at == std::string::npos || at < 1 || s[at - 1] != ')') {
        throw DomainError("invalid diagram: " + s);
    }
    std::vector<int> rows;
    const std::string body = s.substr(1, at - 2);
    std::size_t start = 0;
    while (start < body.size()) {
        auto end = body.find(',', start);
        if (end == std::string::npos) end = body.size();
        rows.push_back(std::stoi(body.substr(start, end - start)));
        start = end + 1;
    }
    return {std::stoi(s.substr(at + 1)), rows};
}

// The diagram whose corners are the arcs of the nonnesting partition: a cell
// (i, j) belongs to it iff some arc (a, b) has i <= a < b <= j.
inline StaircaseDiagram eta(const SetPartition& pi) {
    if (!is_nonnesting(pi)) throw DomainError("eta requires a nonnesting partition: " + pi.to_string());
    const int n = static_cast<int>(pi.size());
    std::vector<int> rows(n > 1 ? static_cast<std::size_t>(n - 1) : 0, 0);
    for (auto [a, b] : pi.arcs()) {
        for (int j = b; j <= n; ++j) {
            int& r = rows[static_cast<std::size_t>(n - j)];
            r = std::max(r, a);
        }
    }
    return {n, rows};
}

inline SetPartition eta_inverse(const StaircaseDiagram& d) {
    const int n = d.ambient();
    Word w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i) - 1] = i;
    // Corners are arcs; join their endpoints (left to right keeps labels consistent).
    for (auto [i, j] : d.corners()) w[static_cast<std::size_t>(j) - 1] = w[static_cast<std::size_t>(i) - 1];
    return SetPartition(WordView(w));
}

// pi' <= pi iff eta(pi') is contained in eta(pi).
inline bool nn_leq(const SetPartition& lower, const SetPartition& upper) {
    detail::require_same_size(lower.size(), upper.size(), "nn_leq");
    return eta(lower).is_contained_in(eta(upper));
}

}  // namespace chromllt
