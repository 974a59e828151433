#pragma once

// Finite linear combinations of basis keys with rational-function
// coefficients, tagged by the (space, basis) pair they live in.

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ratfunc.hpp"
#include "words.hpp"

namespace chromllt {

enum class Basis {
    QSymM,
    QSymF,
    SymS,
    SymLambda,
    WQSymM,
    WQSymPhi,
    WQSymPhiCheck,
    WQSymDualN,
    WSymm,
    WSymmt,
    FQSymG,
    FQSymF,
};

enum class KeyKind { Composition, PackedWord, Permutation, SetPartition };

namespace detail {

struct BasisInfo {
    Basis basis;
    std::string_view name;
    std::string_view symbol;
    KeyKind kind;
};

inline constexpr std::array<BasisInfo, 12> basis_table{{
    {Basis::QSymM, "QSym.M", "M", KeyKind::Composition},
    {Basis::QSymF, "QSym.F", "F", KeyKind::Composition},
    {Basis::SymS, "Sym.S", "S", KeyKind::Composition},
    {Basis::SymLambda, "Sym.Lambda", "Lambda", KeyKind::Composition},
    {Basis::WQSymM, "WQSym.M", "M", KeyKind::PackedWord},
    {Basis::WQSymPhi, "WQSym.Phi", "Phi", KeyKind::PackedWord},
    {Basis::WQSymPhiCheck, "WQSym.PhiCheck", "PhiCheck", KeyKind::PackedWord},
    {Basis::WQSymDualN, "WQSymDual.N", "N", KeyKind::PackedWord},
    {Basis::WSymm, "WSym.m", "m", KeyKind::SetPartition},
    {Basis::WSymmt, "WSym.mt", "mt", KeyKind::SetPartition},
    {Basis::FQSymG, "FQSym.G", "G", KeyKind::Permutation},
    {Basis::FQSymF, "FQSym.F", "F", KeyKind::Permutation},
}};

inline const BasisInfo& info(Basis b) { return basis_table[static_cast<std::size_t>(b)]; }

}  // namespace detail

inline std::string_view basis_name(Basis b) { return detail::info(b).name; }
inline std::string_view basis_symbol(Basis b) { return detail::info(b).symbol; }
inline KeyKind key_kind(Basis b) { return detail::info(b).kind; }

inline Basis parse_basis(std::string_view s) {
    for (const auto& bi : detail::basis_table) {
        if (bi.name == s) return bi.basis;
    }
    throw BasisError("unknown basis '" + std::string(s) + "'");
}

// Throws BasisError if `key` is not a valid index for basis b.
inline void validate_key(Basis b, const Word& key) {
    const auto fail = [&](const char* what) {
        throw BasisError(std::string(basis_name(b)) + ": key " + detail::render_letters(key) + " is not " + what);
    };
    switch (key_kind(b)) {
        case KeyKind::Composition:
            for (int x : key) {
                if (x < 1) fail("a composition");
            }
            return;
        case KeyKind::PackedWord:
            try {
                PackedWord p(key);
            } catch (const DomainError&) {
                fail("a packed word");
            }
            return;
        case KeyKind::Permutation:
            try {
                Permutation p(key);
            } catch (const DomainError&) {
                fail("a permutation");
            }
            return;
        case KeyKind::SetPartition: {
            // Canonical restricted growth string: blocks ordered by minima.
            int m = 0;
            for (int x : key) {
                if (x < 1 || x > m + 1) fail("a canonical set-partition word");
                m = std::max(m, x);
            }
            return;
        }
    }
}

inline std::string render_key(Basis b, const Word& key) {
    if (key_kind(b) == KeyKind::Composition) return Composition(key).to_string();
    return detail::render_letters(key);
}

namespace detail {

inline std::string render_coefficient_term(const RationalFunction& c, const std::string& basis_part, bool first) {
    const bool neg = c.looks_negative();
    const RationalFunction mag = neg ? -c : c;
    std::string out;
    if (first) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (basis_part.empty()) return out + mag.to_string(false);
    if (mag.is_one()) return out + basis_part;
    std::string cs = mag.to_string(false);
    const bool atomic = mag.is_polynomial() && mag.numerator().term_count() == 1;
    if (!atomic) cs = "(" + cs + ")";
    return out + cs + "*" + basis_part;
}

inline void require_basis(Basis a, Basis b, const char* op) {
    if (a != b) {
        throw BasisError(std::string(op) + ": basis mismatch (" + std::string(basis_name(a)) + " vs " +
                         std::string(basis_name(b)) + ")");
    }
}

}  // namespace detail

class LinearCombination {
public:
    using Terms = std::map<Word, RationalFunction, ShortLex>;

    explicit LinearCombination(Basis b) : basis_(b) {}

    static LinearCombination single(Basis b, const Word& key, const RationalFunction& c = RationalFunction(1)) {
        LinearCombination x(b);
        x.add_term(key, c);
        return x;
    }
    static LinearCombination one(Basis b) { return single(b, {}); }

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    RationalFunction coefficient(const Word& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? RationalFunction() : it->second;
    }

    void add_term(const Word& key, const RationalFunction& c) {
        validate_key(basis_, key);
        add_term_unchecked(key, c);
    }

    // For producers that construct keys known to be valid.
    void add_term_unchecked(const Word& key, const RationalFunction& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Largest key length present, -1 for zero.
    int max_degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.size()));
        return d;
    }

    LinearCombination homogeneous_component(int degree) const {
        LinearCombination out(basis_);
        for (const auto& [k, c] : terms_) {
            if (static_cast<int>(k.size()) == degree) out.terms_.emplace(k, c);
        }
        return out;
    }

    LinearCombination& operator+=(const LinearCombination& o) {
        detail::require_basis(basis_, o.basis_, "add");
        for (const auto& [k, c] : o.terms_) add_term_unchecked(k, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o) {
        detail::require_basis(basis_, o.basis_, "subtract");
        for (const auto& [k, c] : o.terms_) add_term_unchecked(k, -c);
        return *this;
    }
    LinearCombination& operator*=(const RationalFunction& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator-(LinearCombination a) { return a *= RationalFunction(-1); }
    friend LinearCombination operator*(LinearCombination a, const RationalFunction& s) { return a *= s; }
    friend LinearCombination operator*(const RationalFunction& s, LinearCombination a) { return a *= s; }

    friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
        detail::require_basis(a.basis_, b.basis_, "compare");
        return a.terms_ == b.terms_;
    }

    // Apply f to every coefficient, dropping zeros.
    template <class F>
    LinearCombination map_coefficients(F&& f) const {
        LinearCombination out(basis_);
        for (const auto& [k, c] : terms_) out.add_term_unchecked(k, f(c));
        return out;
    }

    // Same keys, retagged (for identifications such as F_sigma = G_{sigma^-1} handled by callers).
    LinearCombination retagged(Basis b) const {
        LinearCombination out(b);
        for (const auto& [k, c] : terms_) out.add_term(k, c);
        return out;
    }

    // "t^2*M[123] + (t-1)*M[132]"; the empty key renders as the scalar alone.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            std::string part;
            if (!k.empty()) part = std::string(basis_symbol(basis_)) + "[" + render_key(basis_, k) + "]";
            out += detail::render_coefficient_term(c, part, first);
            first = false;
        }
        return out;
    }

private:
    Basis basis_;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LinearCombination& x) { return os << x.to_string(); }

// Every coefficient evaluated at t = value; result has constant coefficients.
inline LinearCombination evaluate_at(const LinearCombination& x, const Rational& value) {
    return x.map_coefficients([&](const RationalFunction& c) { return RationalFunction(c.evaluate(value)); });
}

// Elements of A (x) B.
class TensorElement {
public:
    using Key = std::pair<Word, Word>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            if (a.first != b.first) return ShortLex{}(a.first, b.first);
            return ShortLex{}(a.second, b.second);
        }
    };
    using Terms = std::map<Key, RationalFunction, KeyLess>;

    TensorElement(Basis left, Basis right) : left_(left), right_(right) {}

    Basis left_basis() const { return left_; }
    Basis right_basis() const { return right_; }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    RationalFunction coefficient(const Word& a, const Word& b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? RationalFunction() : it->second;
    }

    void add_term(const Word& a, const Word& b, const RationalFunction& c) {
        validate_key(left_, a);
        validate_key(right_, b);
        add_term_unchecked(a, b, c);
    }
    void add_term_unchecked(const Word& a, const Word& b, const RationalFunction& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorElement& operator+=(const TensorElement& o) {
        detail::require_basis(left_, o.left_, "tensor add");
        detail::require_basis(right_, o.right_, "tensor add");
        for (const auto& [k, c] : o.terms_) add_term_unchecked(k.first, k.second, c);
        return *this;
    }
    TensorElement& operator*=(const RationalFunction& s) {
        if (s.is_zero()) terms_.clear();
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    // The flip a (x) b -> b (x) a.
    TensorElement swapped() const {
        TensorElement out(right_, left_);
        for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.second, k.first}, c);
        return out;
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        detail::require_basis(a.left_, b.left_, "tensor compare");
        detail::require_basis(a.right_, b.right_, "tensor compare");
        return a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        const auto side = [](Basis b, const Word& k) {
            if (k.empty()) return std::string("1");
            return std::string(basis_symbol(b)) + "[" + render_key(b, k) + "]";
        };
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            out += detail::render_coefficient_term(c, side(left_, k.first) + " ⊗ " + side(right_, k.second), first);
            first = false;
        }
        return out;
    }

private:
    Basis left_;
    Basis right_;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const TensorElement& x) { return os << x.to_string(); }

// Shorthands for building single basis elements.
inline LinearCombination M(const PackedWord& u) { return LinearCombination::single(Basis::WQSymM, u.letters()); }
inline LinearCombination N(const PackedWord& u) { return LinearCombination::single(Basis::WQSymDualN, u.letters()); }
inline LinearCombination Phi(const PackedWord& u) { return LinearCombination::single(Basis::WQSymPhi, u.letters()); }
inline LinearCombination PhiCheck(const PackedWord& u) {
    return LinearCombination::single(Basis::WQSymPhiCheck, u.letters());
}
inline LinearCombination QM(const Composition& i) { return LinearCombination::single(Basis::QSymM, i.parts()); }
inline LinearCombination QF(const Composition& i) { return LinearCombination::single(Basis::QSymF, i.parts()); }
inline LinearCombination S(const Composition& i) { return LinearCombination::single(Basis::SymS, i.parts()); }

}  // namespace chromllt
