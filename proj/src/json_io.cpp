#include "meixner/json_io.hpp"

#include <stdexcept>

namespace meixner {

nlohmann::json rational_to_json(const Rational& value) {
    return to_string(value);
}

Rational rational_from_json(const nlohmann::json& value) {
    if (value.is_number_integer()) {
        return Rational(static_cast<long>(value.get<long long>()));
    }
    if (!value.is_string()) {
        throw std::invalid_argument("rational_from_json: expected string \"p/q\"");
    }
    return parse_rational(value.get<std::string>());
}

nlohmann::json multi_index_to_json(const MultiIndex& index) {
    return nlohmann::json(index.entries());
}

MultiIndex multi_index_from_json(const nlohmann::json& value) {
    if (!value.is_array()) {
        throw std::invalid_argument("multi_index_from_json: expected an array");
    }
    std::vector<int> entries;
    entries.reserve(value.size());
    for (const auto& item : value) {
        entries.push_back(item.get<int>());
    }
    return MultiIndex(std::move(entries));
}

nlohmann::json polynomial_to_json(const SparsePolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exponent, coefficient] : p.terms()) {
        terms.push_back({{"exp", multi_index_to_json(exponent)},
                         {"coef", rational_to_json(coefficient)}});
    }
    return terms;
}

SparsePolynomial polynomial_from_json(const nlohmann::json& value, int dimension) {
    if (!value.is_array()) {
        throw std::invalid_argument("polynomial_from_json: expected an array of terms");
    }
    SparsePolynomial p(dimension);
    for (const auto& term : value) {
        p.add_term(multi_index_from_json(term.at("exp")),
                   rational_from_json(term.at("coef")));
    }
    return p;
}

nlohmann::json point_to_json(const MeixnerPoint& point) {
    nlohmann::json c = nlohmann::json::array();
    nlohmann::json c_tilde = nlohmann::json::array();
    for (int i = 0; i < point.dimension(); ++i) {
        c.push_back(rational_to_json(point.c()[static_cast<std::size_t>(i)]));
        c_tilde.push_back(rational_to_json(point.c_tilde()[static_cast<std::size_t>(i)]));
    }
    nlohmann::json u = nlohmann::json::array();
    for (const auto& row : point.U()) {
        nlohmann::json row_json = nlohmann::json::array();
        for (const Rational& entry : row) {
            row_json.push_back(rational_to_json(entry));
        }
        u.push_back(std::move(row_json));
    }
    return {{"d", point.dimension()},
            {"c0", rational_to_json(point.c0())},
            {"c", std::move(c)},
            {"c_tilde", std::move(c_tilde)},
            {"U", std::move(u)}};
}

MeixnerPoint point_from_json(const nlohmann::json& value, bool validate) {
    const int d = value.at("d").get<int>();
    const Rational c0 = rational_from_json(value.at("c0"));
    std::vector<Rational> c;
    for (const auto& item : value.at("c")) {
        c.push_back(rational_from_json(item));
    }
    std::vector<Rational> c_tilde;
    for (const auto& item : value.at("c_tilde")) {
        c_tilde.push_back(rational_from_json(item));
    }
    RationalMatrix u;
    for (const auto& row : value.at("U")) {
        std::vector<Rational> row_values;
        for (const auto& entry : row) {
            row_values.push_back(rational_from_json(entry));
        }
        u.push_back(std::move(row_values));
    }
    return validate ? MeixnerPoint::validated(d, c0, std::move(c), std::move(c_tilde),
                                              std::move(u))
                    : MeixnerPoint::unchecked(d, c0, std::move(c), std::move(c_tilde),
                                              std::move(u));
}

nlohmann::json spec_to_json(const MeixnerSpec& spec) {
    return {{"point", point_to_json(spec.point())}, {"beta", rational_to_json(spec.beta())}};
}

MeixnerSpec spec_from_json(const nlohmann::json& value, bool validate) {
    return MeixnerSpec(point_from_json(value.at("point"), validate),
                       rational_from_json(value.at("beta")));
}

nlohmann::json operator_to_json(const DifferenceOperator& op) {
    nlohmann::json terms = nlohmann::json::array();
    for (const OperatorTerm& term : op.terms()) {
        terms.push_back({{"coefficient", polynomial_to_json(term.coefficient)},
                         {"shift", nlohmann::json(term.shift)}});
    }
    return {{"dimension", op.dimension()}, {"terms", std::move(terms)}};
}

DifferenceOperator operator_from_json(const nlohmann::json& value) {
    const int d = value.at("dimension").get<int>();
    std::vector<OperatorTerm> terms;
    for (const auto& term : value.at("terms")) {
        std::vector<int> shift;
        for (const auto& entry : term.at("shift")) {
            shift.push_back(entry.get<int>());
        }
        terms.push_back(OperatorTerm{polynomial_from_json(term.at("coefficient"), d),
                                     std::move(shift)});
    }
    return DifferenceOperator(d, std::move(terms));
}

}  // namespace meixner
