#pragma once

// Exact arithmetic in Q(t): dense univariate polynomials over GMP rationals and
// gcd-reduced fractions of them.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace chromllt {

using Rational = mpq_class;

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) {
            c_.push_back(c);
            c_.back().canonicalize();
        }
    }
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT(google-explicit-constructor)
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        for (auto& x : c_) x.canonicalize();
        trim();
    }
    Polynomial(std::initializer_list<long> coeffs) {
        for (long c : coeffs) c_.emplace_back(c);
        trim();
    }

    static Polynomial t() { return monomial(1, 1); }
    static Polynomial monomial(const Rational& c, int degree) {
        Polynomial p;
        if (c != 0) {
            p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
            p.c_.back() = c;
            p.c_.back().canonicalize();
        }
        return p;
    }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    // Single term c*t^k.
    bool is_monomial() const {
        return !c_.empty() && std::all_of(c_.begin(), c_.end() - 1, [](const Rational& x) { return x == 0; });
    }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coefficient(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Rational(0);
    }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Coefficients in reverse order: t^deg * p(1/t).
    Polynomial reversed() const {
        Polynomial r;
        r.c_.assign(c_.rbegin(), c_.rend());
        r.trim();
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
        } else {
            for (auto& x : c_) x *= s;
        }
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Polynomial r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        mpq_t tmp;
        mpq_init(tmp);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                mpq_mul(tmp, a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
                mpq_add(r.c_[i + j].get_mpq_t(), r.c_[i + j].get_mpq_t(), tmp);
            }
        }
        mpq_clear(tmp);
        r.trim();
        return r;
    }

    Polynomial pow(unsigned k) const {
        Polynomial result(1), base = *this;
        while (k) {
            if (k & 1U) result *= base;
            k >>= 1U;
            if (k) base *= base;
        }
        return result;
    }

    // Euclidean division; throws ArithmeticError on a zero divisor.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
        if (a.degree() < b.degree()) return {Polynomial{}, a};
        std::vector<Rational> rem = a.c_;
        std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
        const Rational inv_lead = 1 / b.leading();
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t k = quo.size(); k-- > 0;) {
            Rational q = rem[k + db] * inv_lead;
            if (q == 0) continue;
            quo[k] = q;
            for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.c_[j];
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    // Exact quotient; the caller guarantees divisibility.
    friend Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

    Polynomial monic() const {
        if (is_zero() || leading() == 1) return *this;
        return *this * Rational(1 / leading());
    }

    // Monic gcd; gcd(0, 0) = 0.
    friend Polynomial gcd(Polynomial a, Polynomial b) {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        if (a.is_constant() || b.is_constant()) return Polynomial(1);
        if (a.degree() < b.degree()) std::swap(a, b);
        b = b.monic();
        while (!b.is_zero()) {
            Polynomial r = divmod(a, b).second;
            a = std::move(b);
            b = r.monic();
            if (b.is_constant() && !b.is_zero()) return Polynomial(1);
        }
        return a.monic();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    // Human-readable form in descending degree. `spaced` controls whether
    // binary operators are surrounded by blanks ("t^2 - t" vs "t^2-t").
    std::string to_string(bool spaced = true) const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = c_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (first) {
                if (neg) out += "-";
            } else {
                out += spaced ? (neg ? " - " : " + ") : (neg ? "-" : "+");
            }
            first = false;
            std::string var;
            if (k == 1) var = "t";
            if (k > 1) var = "t^" + std::to_string(k);
            if (var.empty()) {
                out += mag.get_str();
            } else if (mag == 1) {
                out += var;
            } else {
                out += mag.get_str() + "*" + var;
            }
        }
        return out;
    }

    // Number of nonzero terms.
    std::size_t term_count() const {
        return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Rational& x) { return x != 0; }));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const Rational& c) : num_(c), den_(1) {}    // NOLINT(google-explicit-constructor)
    RationalFunction(long c) : num_(c), den_(1) {}               // NOLINT(google-explicit-constructor)
    RationalFunction(int c) : num_(c), den_(1) {}                // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
        normalize();
    }

    static RationalFunction t() { return Polynomial::t(); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    // c*t^k with k >= 0.
    bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }
    // Sign of the leading numerator coefficient; used for rendering only.
    bool looks_negative() const { return !num_.is_zero() && num_.leading() < 0; }

    RationalFunction inverse() const {
        if (is_zero()) throw ArithmeticError("division by zero rational function");
        return RationalFunction(den_, num_);
    }

    RationalFunction pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        RationalFunction r;
        r.num_ = num_.pow(static_cast<unsigned>(k));
        r.den_ = den_.pow(static_cast<unsigned>(k));
        return r;  // powers of coprime polynomials stay coprime
    }

    Rational evaluate(const Rational& x) const {
        Rational d = den_(x);
        if (d == 0) throw EvaluationError("pole at t = " + x.get_str());
        return num_(x) / d;
    }

    // f(1/t).
    RationalFunction substitute_reciprocal() const {
        const int dn = num_.degree();
        const int dd = den_.degree();
        if (num_.is_zero()) return {};
        Polynomial num = num_.reversed();
        Polynomial den = den_.reversed();
        if (dd > dn) num *= Polynomial::monomial(1, dd - dn);
        if (dn > dd) den *= Polynomial::monomial(1, dn - dd);
        return RationalFunction(num, den);
    }

    RationalFunction& operator+=(const RationalFunction& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        if (den_.is_one() && o.den_.is_one()) {
            num_ += o.num_;
            return *this;
        }
        if (den_ == o.den_) {
            num_ += o.num_;
            reduce_against(den_);
            return *this;
        }
        // a/b + c/d with g = gcd(b, d): only g can share factors with the new numerator.
        Polynomial g = gcd(den_, o.den_);
        if (g.is_one()) {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ = den_ * o.den_;
            return *this;  // coprime denominators: already reduced
        }
        Polynomial b1 = exact_quotient(den_, g);
        Polynomial d1 = exact_quotient(o.den_, g);
        num_ = num_ * d1 + o.num_ * b1;
        den_ = b1 * o.den_;
        reduce_against(g);
        return *this;
    }
    RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
    RationalFunction& operator*=(const RationalFunction& o) {
        if (is_zero() || o.is_zero()) return *this = RationalFunction();
        if (den_.is_one() && o.den_.is_one()) {
            num_ *= o.num_;
            return *this;
        }
        Polynomial g1 = gcd(num_, o.den_);
        Polynomial g2 = gcd(o.num_, den_);
        Polynomial n1 = g1.is_one() ? num_ : exact_quotient(num_, g1);
        Polynomial d2 = g1.is_one() ? o.den_ : exact_quotient(o.den_, g1);
        Polynomial n2 = g2.is_one() ? o.num_ : exact_quotient(o.num_, g2);
        Polynomial d1 = g2.is_one() ? den_ : exact_quotient(den_, g2);
        num_ = n1 * n2;
        den_ = d1 * d2;
        make_monic();
        return *this;
    }
    RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator-(RationalFunction a) {
        a.num_ = -a.num_;
        return a;
    }

    // Canonical forms make equality syntactic.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // "(t^2 - t)/(t + 1)"; compact form drops the blanks.
    std::string to_string(bool spaced = true) const {
        std::string n = num_.to_string(spaced);
        if (den_.is_one()) return n;
        if (num_.term_count() > 1) n = "(" + n + ")";
        std::string d = den_.to_string(spaced);
        if (den_.term_count() > 1 || !den_.is_monomial() || den_.leading() != 1) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        reduce_against(den_);
    }

    // Cancel gcd(num, h) where h is known to contain every common factor.
    void reduce_against(const Polynomial& h) {
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        Polynomial g = gcd(num_, h);
        if (!g.is_one()) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
        make_monic();
    }

    void make_monic() {
        if (den_.leading() != 1) {
            Rational s = 1 / den_.leading();
            num_ *= s;
            den_ *= s;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

// [n]_t = 1 + t + ... + t^{n-1}.
inline RationalFunction q_integer(int n) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(n, 0)), Rational(1));
    return Polynomial(std::move(c));
}

// [n]_t! ; q_factorial(0) = 1.
inline RationalFunction q_factorial(int n) {
    Polynomial acc(1);
    for (int k = 2; k <= n; ++k) acc *= q_integer(k).numerator();
    return acc;
}

// Shorthands used throughout: t^k and (t^k - 1).
inline RationalFunction t_pow(int k) {
    if (k >= 0) return Polynomial::monomial(1, k);
    return RationalFunction(Polynomial(1), Polynomial::monomial(1, -k));
}

inline Polynomial t_pow_minus_one(int k) { return Polynomial::monomial(1, k) - Polynomial(1); }

}  // namespace chromllt
