#pragma once

// JSON encoding of coefficients, elements and graphs.

#include <string>

#include <json.hpp>

#include "dyckgraph.hpp"
#include "lincomb.hpp"

namespace chromllt {

using Json = nlohmann::json;

namespace detail {

inline Rational parse_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw DomainError("rational must be a string \"p/q\" or an integer");
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) {
        throw DomainError("malformed rational '" + j.get<std::string>() + "'");
    }
    q.canonicalize();
    return q;
}

inline Json polynomial_to_json(const Polynomial& p) {
    Json out = Json::array();
    for (auto& c : p.coefficients()) out.push_back(c.get_str());
    return out;
}

inline Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("polynomial must be an array of coefficients");
    std::vector<Rational> c;
    for (auto& x : j) c.push_back(parse_rational(x));
    return Polynomial(std::move(c));
}

}  // namespace detail

inline Json to_json(const RationalFunction& f) {
    return {{"num", detail::polynomial_to_json(f.numerator())}, {"den", detail::polynomial_to_json(f.denominator())}};
}

inline RationalFunction rational_function_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string()) return RationalFunction(detail::parse_rational(j));
    if (!j.is_object() || !j.contains("num")) throw DomainError("coefficient must be {\"num\":[...],\"den\":[...]}");
    const Polynomial num = detail::polynomial_from_json(j.at("num"));
    const Polynomial den = j.contains("den") ? detail::polynomial_from_json(j.at("den")) : Polynomial(1);
    if (den.is_zero()) throw ArithmeticError("zero denominator");
    return RationalFunction(num, den);
}

inline Json to_json(const LinearCombination& x) {
    Json terms = Json::array();
    for (const auto& [key, c] : x) terms.push_back({{"key", key}, {"coeff", to_json(c)}});
    return {{"basis", std::string(basis_name(x.basis()))}, {"terms", terms}};
}

inline LinearCombination linear_combination_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms")) {
        throw DomainError("element must be {\"basis\":...,\"terms\":[...]}");
    }
    LinearCombination out(parse_basis(j.at("basis").get<std::string>()));
    for (auto& term : j.at("terms")) {
        out.add_term(term.at("key").get<Word>(), rational_function_from_json(term.at("coeff")));
    }
    return out;
}

inline Json to_json(const Graph& g) {
    if (g.is_dyck()) return {{"n", g.n()}, {"h", DyckGraph::from_graph(g).hessenberg()}};
    Json edges = Json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    return {{"n", g.n()}, {"edges", edges}};
}

inline Graph graph_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    if (j.contains("h")) {
        DyckGraph d(j.at("h").get<std::vector<int>>());
        if (d.n() != n) throw SizeMismatch("graph: n does not match the Hessenberg vector");
        return d.graph();
    }
    Graph g(n);
    if (j.contains("edges")) {
        for (auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return g;
}

}  // namespace chromllt
