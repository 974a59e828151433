#pragma once

// Labeled graphs on [n], Dyck (unit interval) graphs with their Hessenberg and
// staircase encodings, coloring statistics, the st_G statistic with its
// insertion lemma and code, and the min_G / min'_G maps.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partitions.hpp"
#include "words.hpp"

namespace chromllt {

// Simple undirected graph on [n], n <= 63, adjacency as bit rows.
class Graph {
public:
    static constexpr int max_vertices = 63;

    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || n > max_vertices) throw DomainError("unsupported vertex count");
    }
    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [i, j] : edges) add_edge(i, j);
    }

    void add_edge(int i, int j) {
        if (i < 1 || j < 1 || i > n_ || j > n_ || i == j) throw DomainError("invalid edge");
        adj_[static_cast<std::size_t>(i) - 1] |= bit(j);
        adj_[static_cast<std::size_t>(j) - 1] |= bit(i);
    }

    int n() const { return n_; }
    bool adjacent(int i, int j) const { return (adj_[static_cast<std::size_t>(i) - 1] & bit(j)) != 0; }
    std::uint64_t neighbors(int i) const { return adj_[static_cast<std::size_t>(i) - 1]; }

    // Edges (i, j) with i < j in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i <= n_; ++i) {
            for (int j = i + 1; j <= n_; ++j) {
                if (adjacent(i, j)) e.emplace_back(i, j);
            }
        }
        return e;
    }
    std::size_t edge_count() const { return edges().size(); }

    // Interval property: (i, j) in E implies (i', j') in E for i <= i' < j' <= j.
    bool is_dyck() const {
        for (auto [i, j] : edges()) {
            if (j > i + 1 && (!adjacent(i + 1, j) || !adjacent(i, j - 1))) return false;
        }
        return true;
    }

    // Induced subgraph on the sorted vertex subset, relabeled 1..|S|.
    Graph restrict(std::vector<int> subset) const {
        std::sort(subset.begin(), subset.end());
        if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) throw DomainError("repeated vertex");
        for (int v : subset) {
            if (v < 1 || v > n_) throw DomainError("vertex out of range");
        }
        Graph g(static_cast<int>(subset.size()));
        for (std::size_t a = 0; a < subset.size(); ++a) {
            for (std::size_t b = a + 1; b < subset.size(); ++b) {
                if (adjacent(subset[a], subset[b])) g.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
            }
        }
        return g;
    }

    // Relabel i -> n + 1 - i.
    Graph mirror() const {
        Graph g(n_);
        for (auto [i, j] : edges()) g.add_edge(n_ + 1 - j, n_ + 1 - i);
        return g;
    }

    // G . H: disjoint union with the vertices of H shifted by n(G).
    friend Graph shifted_concat(const Graph& g, const Graph& h) {
        Graph r(g.n_ + h.n_);
        for (auto [i, j] : g.edges()) r.add_edge(i, j);
        for (auto [i, j] : h.edges()) r.add_edge(i + g.n_, j + g.n_);
        return r;
    }

    // "e:3;1-2,2-3".
    std::string to_string() const {
        std::string out = "e:" + std::to_string(n_) + ";";
        bool first = true;
        for (auto [i, j] : edges()) {
            if (!first) out += ',';
            first = false;
            out += std::to_string(i) + "-" + std::to_string(j);
        }
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }
    friend bool operator<(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.edges() < b.edges();
    }

private:
    static std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

inline std::ostream& operator<<(std::ostream& os, const Graph& g) { return os << g.to_string(); }

// Dyck graph stored by its Hessenberg vector h: edges are (i, j) with i < j <= h(i).
class DyckGraph {
public:
    DyckGraph() = default;
    explicit DyckGraph(std::vector<int> h) : h_(std::move(h)), g_(static_cast<int>(h_.size())) {
        const int n = static_cast<int>(h_.size());
        for (int i = 1; i <= n; ++i) {
            const int hi = h_[static_cast<std::size_t>(i) - 1];
            if (hi < i || hi > n) throw DomainError("Hessenberg entries must satisfy i <= h(i) <= n");
            if (i > 1 && hi < h_[static_cast<std::size_t>(i) - 2]) throw DomainError("Hessenberg vector must be nondecreasing");
            for (int j = i + 1; j <= hi; ++j) g_.add_edge(i, j);
        }
    }

    static DyckGraph from_graph(const Graph& g) {
        if (!g.is_dyck()) throw DomainError("graph is not a Dyck graph: " + g.to_string());
        std::vector<int> h(static_cast<std::size_t>(g.n()));
        for (int i = 1; i <= g.n(); ++i) {
            int hi = i;
            while (hi < g.n() && g.adjacent(i, hi + 1)) ++hi;
            h[static_cast<std::size_t>(i) - 1] = hi;
        }
        DyckGraph d(h);
        if (!(d.graph() == g)) throw DomainError("graph is not a Dyck graph: " + g.to_string());
        return d;
    }

    static DyckGraph edgeless(int n) {
        std::vector<int> h(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) h[static_cast<std::size_t>(i) - 1] = i;
        return DyckGraph(h);
    }
    static DyckGraph complete(int n) { return DyckGraph(std::vector<int>(static_cast<std::size_t>(n), n)); }
    // Path 1 - 2 - ... - n.
    static DyckGraph path(int n) {
        std::vector<int> h(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) h[static_cast<std::size_t>(i) - 1] = std::min(i + 1, n);
        return DyckGraph(h);
    }

    // Edges are the cells above the diagonal outside the diagram.
    static DyckGraph from_diagram(const StaircaseDiagram& d) {
        const int n = d.ambient();
        std::vector<int> h(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            int hi = i;
            while (hi < n && !d.contains(i, hi + 1)) ++hi;
            h[static_cast<std::size_t>(i) - 1] = hi;
        }
        return DyckGraph(h);
    }
    StaircaseDiagram to_diagram() const {
        const int n = this->n();
        std::vector<int> rows(n > 1 ? static_cast<std::size_t>(n - 1) : 0, 0);
        for (int k = 0; k + 1 < n; ++k) {
            const int j = n - k;
            rows[static_cast<std::size_t>(k)] =
                static_cast<int>(std::count_if(h_.begin(), h_.end(), [j](int hi) { return hi < j; }));
        }
        return {n, rows};
    }

    int n() const { return static_cast<int>(h_.size()); }
    const std::vector<int>& hessenberg() const { return h_; }
    const Graph& graph() const { return g_; }
    operator const Graph&() const { return g_; }  // NOLINT(google-explicit-constructor)
    bool adjacent(int i, int j) const { return g_.adjacent(i, j); }
    std::vector<std::pair<int, int>> edges() const { return g_.edges(); }

    DyckGraph restrict_interval(int lo, int hi) const {
        std::vector<int> s;
        for (int v = lo; v <= hi; ++v) s.push_back(v);
        return from_graph(g_.restrict(s));
    }
    DyckGraph mirror() const { return from_graph(g_.mirror()); }
    friend DyckGraph shifted_concat(const DyckGraph& g, const DyckGraph& h) {
        std::vector<int> v = g.h_;
        for (int x : h.h_) v.push_back(x + g.n());
        return DyckGraph(v);
    }

    // "D5:h=23555"; entries are comma separated once n exceeds 9.
    std::string to_string() const { return "D" + std::to_string(n()) + ":h=" + detail::render_letters(h_); }

    friend bool operator==(const DyckGraph& a, const DyckGraph& b) { return a.h_ == b.h_; }
    friend bool operator<(const DyckGraph& a, const DyckGraph& b) {
        if (a.h_.size() != b.h_.size()) return a.h_.size() < b.h_.size();
        return a.h_ < b.h_;
    }

private:
    std::vector<int> h_;
    Graph g_;
};

inline std::ostream& operator<<(std::ostream& os, const DyckGraph& g) { return os << g.to_string(); }

// All Dyck graphs on [n], lexicographic in the Hessenberg vector.
inline std::vector<DyckGraph> enumerate_dyck(int n) {
    std::vector<DyckGraph> out;
    std::vector<int> h(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int i, int lo) {
        if (i > n) {
            out.emplace_back(h);
            return;
        }
        for (int v = std::max(lo, i); v <= n; ++v) {
            h[static_cast<std::size_t>(i) - 1] = v;
            rec(i + 1, v);
        }
    };
    rec(1, 1);
    return out;
}

// The nonnesting partition whose diagram encodes G.
inline SetPartition pi_of(const DyckGraph& g) { return eta_inverse(g.to_diagram()); }

// ---------------------------------------------------------------------------
// Colorings (vertex p carries color c[p-1])

inline int asc(const Graph& g, WordView c) {
    detail::require_same_size(c.size(), static_cast<std::size_t>(g.n()), "asc");
    int a = 0;
    for (auto [i, j] : g.edges()) a += c[static_cast<std::size_t>(i) - 1] < c[static_cast<std::size_t>(j) - 1] ? 1 : 0;
    return a;
}

inline bool is_proper(const Graph& g, WordView c) {
    detail::require_same_size(c.size(), static_cast<std::size_t>(g.n()), "is_proper");
    for (auto [i, j] : g.edges()) {
        if (c[static_cast<std::size_t>(i) - 1] == c[static_cast<std::size_t>(j) - 1]) return false;
    }
    return true;
}

// Proper packed colorings in shortlex order: stable partitions of the vertices
// into independent sets, then every ordering of the blocks.
inline std::vector<PackedWord> proper_packed_colorings(const Graph& g) {
    const int n = g.n();
    std::vector<PackedWord> out;
    Word rgs(static_cast<std::size_t>(n), 0);
    std::vector<std::uint64_t> block_mask;
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            const int k = static_cast<int>(block_mask.size());
            Word labels(static_cast<std::size_t>(k));
            for (int b = 0; b < k; ++b) labels[static_cast<std::size_t>(b)] = b + 1;
            do {
                Word w(static_cast<std::size_t>(n));
                for (int p = 0; p < n; ++p) w[static_cast<std::size_t>(p)] = labels[static_cast<std::size_t>(rgs[static_cast<std::size_t>(p)]) - 1];
                out.emplace_back(std::move(w));
            } while (std::next_permutation(labels.begin(), labels.end()));
            return;
        }
        const std::uint64_t nb = g.neighbors(v);
        for (std::size_t b = 0; b < block_mask.size(); ++b) {
            if (block_mask[b] & nb) continue;
            block_mask[b] |= std::uint64_t{1} << (v - 1);
            rgs[static_cast<std::size_t>(v) - 1] = static_cast<int>(b) + 1;
            rec(v + 1);
            block_mask[b] &= ~(std::uint64_t{1} << (v - 1));
        }
        block_mask.push_back(std::uint64_t{1} << (v - 1));
        rgs[static_cast<std::size_t>(v) - 1] = static_cast<int>(block_mask.size());
        rec(v + 1);
        block_mask.pop_back();
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Permutation statistics (sigma is a word in the vertices)

// Edges (i < j) with i to the right of j in sigma.
inline int inv_g(const Graph& g, const Permutation& sigma) {
    detail::require_same_size(sigma.size(), static_cast<std::size_t>(g.n()), "inv_G");
    const auto pos = sigma.inverse();
    int c = 0;
    for (auto [i, j] : g.edges()) c += pos(i) > pos(j) ? 1 : 0;
    return c;
}

// Positions i with sigma_i > sigma_{i+1} and no edge between the two values.
inline std::vector<int> des_set_g(const Graph& g, const Permutation& sigma) {
    detail::require_same_size(sigma.size(), static_cast<std::size_t>(g.n()), "Des_G");
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
        if (sigma[i] > sigma[i + 1] && !g.adjacent(sigma[i + 1], sigma[i])) d.push_back(static_cast<int>(i) + 1);
    }
    return d;
}

inline int maj_g(const Graph& g, const Permutation& sigma) {
    int s = 0;
    for (int i : des_set_g(g, sigma)) s += i;
    return s;
}

inline std::vector<int> descent_bottoms(const Graph& g, const Permutation& sigma) {
    std::vector<int> b;
    for (int i : des_set_g(g, sigma)) b.push_back(sigma[static_cast<std::size_t>(i)]);
    std::sort(b.begin(), b.end());
    return b;
}

inline int st_g(const Graph& g, const Permutation& sigma) { return inv_g(g, sigma) + maj_g(g, sigma); }

// Subword of sigma made of the values <= k.
inline Permutation restrict_values(const Permutation& sigma, int k) {
    Word w;
    for (int x : sigma) {
        if (x <= k) w.push_back(x);
    }
    return Permutation(std::move(w));
}

// Insert n before position `slot` (0-based; slot = |sigma| appends).
inline Permutation insert_max(const Permutation& sigma, std::size_t slot) {
    Word w = sigma.letters();
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(slot), static_cast<int>(sigma.size()) + 1);
    return Permutation(std::move(w));
}

struct InsertionStep {
    std::size_t slot;  // insertion before sigma[slot]; slot == |sigma| is the end
    int increment;     // st_G(tau) - st_H(sigma)
};

// Increment of each insertion slot of n = |sigma| + 1, indexed by slot.
inline std::vector<int> insertion_increments(const DyckGraph& g, const Permutation& sigma) {
    const int n = g.n();
    if (static_cast<int>(sigma.size()) + 1 != n) throw SizeMismatch("insertion_increments: sigma must permute [n-1]");
    const auto h = g.restrict_interval(1, n - 1);
    const int base = st_g(h, sigma);
    std::vector<int> inc(static_cast<std::size_t>(n));
    for (std::size_t s = 0; s < inc.size(); ++s) inc[s] = st_g(g, insert_max(sigma, s)) - base;
    return inc;
}

// Slots visited in the order of the insertion lemma: the end, then from right to
// left the slots before values adjacent to n or that are descent bottoms of
// sigma in the restriction, then from left to right the remaining slots.
inline std::vector<std::size_t> insertion_order(const DyckGraph& g, const Permutation& sigma) {
    const int n = g.n();
    if (static_cast<int>(sigma.size()) + 1 != n) throw SizeMismatch("insertion_order: sigma must permute [n-1]");
    const auto h = g.restrict_interval(1, n - 1);
    const auto bottoms = descent_bottoms(h, sigma);
    std::vector<std::size_t> order{sigma.size()};
    std::vector<char> special(sigma.size(), 0);
    for (std::size_t p = 0; p < sigma.size(); ++p) {
        const int k = sigma[p];
        special[p] = g.adjacent(k, n) || std::binary_search(bottoms.begin(), bottoms.end(), k);
    }
    for (std::size_t p = sigma.size(); p-- > 0;) {
        if (special[p]) order.push_back(p);
    }
    for (std::size_t p = 0; p < sigma.size(); ++p) {
        if (!special[p]) order.push_back(p);
    }
    return order;
}

inline std::vector<InsertionStep> insertion_steps(const DyckGraph& g, const Permutation& sigma) {
    const auto inc = insertion_increments(g, sigma);
    std::vector<InsertionStep> steps;
    for (std::size_t s : insertion_order(g, sigma)) steps.push_back({s, inc[s]});
    return steps;
}

namespace detail {

inline std::string superscript(int k) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴",
                                   "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    for (char c : std::to_string(k)) out += digits[c - '0'];
    return out;
}

}  // namespace detail

// Slot increments written as exponents in front of the letter they precede,
// the end slot last: "⁴5 ³2 ⁵3 ²1 ¹4 ⁰".
inline std::string render_increments(const Permutation& sigma, const std::vector<int>& inc) {
    std::string out;
    for (std::size_t p = 0; p < sigma.size(); ++p) {
        out += detail::superscript(inc[p]) + std::to_string(sigma[p]) + " ";
    }
    return out + detail::superscript(inc.back());
}

// c(sigma) = (d_n, ..., d_1) with d_k = st(sigma|[1,k]) - st(sigma|[1,k-1]),
// each statistic taken in the restriction of G to [1, k]; 0 <= d_k <= k - 1.
inline std::vector<int> code(const DyckGraph& g, const Permutation& sigma) {
    const int n = g.n();
    detail::require_same_size(sigma.size(), static_cast<std::size_t>(n), "code");
    std::vector<int> v(static_cast<std::size_t>(n));
    int prev = 0;
    for (int k = 1; k <= n; ++k) {
        const int cur = st_g(g.restrict_interval(1, k), restrict_values(sigma, k));
        v[static_cast<std::size_t>(n - k)] = cur - prev;
        prev = cur;
    }
    return v;
}

// Inverse of code: insert 1, 2, ..., n successively at the slot with the
// prescribed increment.
inline Permutation decode(const DyckGraph& g, const std::vector<int>& v) {
    const int n = g.n();
    detail::require_same_size(v.size(), static_cast<std::size_t>(n), "decode");
    for (int i = 1; i <= n; ++i) {
        const int x = v[static_cast<std::size_t>(i) - 1];
        if (x < 0 || x > n - i) throw DomainError("code entry out of range");
    }
    Permutation sigma;
    for (int k = 1; k <= n; ++k) {
        const auto gk = g.restrict_interval(1, k);
        const auto order = insertion_order(gk, sigma);
        sigma = insert_max(sigma, order[static_cast<std::size_t>(v[static_cast<std::size_t>(n - k)])]);
    }
    return sigma;
}

// Subdiagonal vectors: v_i in [0, n - i] for i = 1..n.
inline std::vector<std::vector<int>> subdiagonal_vectors(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            out.push_back(v);
            return;
        }
        for (int x = 0; x <= n - i; ++x) {
            v[static_cast<std::size_t>(i) - 1] = x;
            rec(i + 1);
        }
    };
    rec(1);
    return out;
}

// ---------------------------------------------------------------------------
// min_G and min'_G (sigma read as a coloring: vertex p has color sigma_p)

// Values i such that i - 1 sits to the left of i and the two vertices carrying
// them are not adjacent.
inline std::vector<int> min_g_merge_set(const Graph& g, const Permutation& sigma) {
    detail::require_same_size(sigma.size(), static_cast<std::size_t>(g.n()), "min_G");
    const auto pos = sigma.inverse();
    std::vector<int> s;
    for (int i = 2; i <= static_cast<int>(sigma.size()); ++i) {
        if (pos(i - 1) < pos(i) && !g.adjacent(pos(i - 1), pos(i))) s.push_back(i);
    }
    return s;
}

// u_p = sigma_p - |S n [1, sigma_p]|.
inline PackedWord min_g(const Graph& g, const Permutation& sigma) {
    const auto s = min_g_merge_set(g, sigma);
    Word u(sigma.size());
    for (std::size_t p = 0; p < sigma.size(); ++p) {
        const int x = sigma[p];
        u[p] = x - static_cast<int>(std::upper_bound(s.begin(), s.end(), x) - s.begin());
    }
    return PackedWord(std::move(u));
}

// bar(min_{bar G}(bar sigma)).
inline PackedWord min_g_prime(const Graph& g, const Permutation& sigma) {
    return bar(min_g(g.mirror(), bar(sigma)));
}

// Parse "h:2,2,3" / "h:223" or "e:3;1-2,2-3".
inline Graph parse_graph(const std::string& spec) {
    if (spec.rfind("h:", 0) == 0) {
        const std::string body = spec.substr(2);
        if (body.empty()) return Graph(0);
        return DyckGraph(parse_word(body)).graph();
    }
    if (spec.rfind("e:", 0) == 0) {
        const auto semi = spec.find(';');
        const int n = std::stoi(spec.substr(2, semi == std::string::npos ? std::string::npos : semi - 2));
        Graph g(n);
        if (semi == std::string::npos) return g;
        std::string body = spec.substr(semi + 1);
        std::size_t start = 0;
        while (start < body.size()) {
            auto end = body.find(',', start);
            if (end == std::string::npos) end = body.size();
            const std::string e = body.substr(start, end - start);
            const auto dash = e.find('-');
            if (dash == std::string::npos) throw DomainError("invalid edge: " + e);
            g.add_edge(std::stoi(e.substr(0, dash)), std::stoi(e.substr(dash + 1)));
            start = end + 1;
        }
        return g;
    }
    throw DomainError("graph must start with h: or e:");
}

}  // namespace chromllt
