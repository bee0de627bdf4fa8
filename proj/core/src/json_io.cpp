#include "bruhat/json_io.hpp"

#include <string>

namespace bruhat {

using nlohmann::json;

json padic_to_json(const PAdic& a) {
    json j;
    if (a.is_zero()) {
        j["val"] = a.abs_precision();
        j["digits"] = json::array();
    } else {
        j["val"] = a.valuation();
        j["digits"] = a.digits();
    }
    return j;
}

PAdic padic_from_json(const json& j, unsigned p, unsigned prec) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        try {
            mpz_class num(slash == std::string::npos ? s : s.substr(0, slash));
            mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
            return PAdic::from_rational(num, den, p, prec);
        } catch (const std::invalid_argument&) {
            throw parse_error("bad rational string: " + s);
        }
    }
    if (j.is_number_integer())
        return PAdic::from_int(j.get<long>(), p, prec);
    if (j.is_object() && j.contains("val") && j.contains("digits")) {
        long val = j.at("val").get<long>();
        auto digits = j.at("digits").get<std::vector<unsigned>>();
        if (digits.empty()) return PAdic::zero(p, val);
        mpz_class m = 0;
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
            if (*it >= p) throw parse_error("digit out of range");
            m = m * p + *it;
        }
        return PAdic::make(std::move(m), val, p, static_cast<long>(digits.size()));
    }
    throw parse_error("cannot parse p-adic value from JSON");
}

json matrix_to_json(const PMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(padic_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

PMatrix matrix_from_json(const json& j, unsigned p, unsigned prec) {
    if (!j.is_array() || j.empty()) throw parse_error("matrix JSON must be a non-empty array");
    int n = static_cast<int>(j.size());
    PMatrix m(n, p, prec);
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
            throw parse_error("matrix JSON must be square");
        for (int k = 0; k < n; ++k) m.at(i, k) = padic_from_json(j[i][k], p, prec);
    }
    return m;
}

json decomposition_to_json(const RBDecomposition& d, unsigned prec) {
    json j;
    j["w"] = d.w.str();
    j["r"] = matrix_to_json(d.r);
    j["b"] = matrix_to_json(d.b);
    j["precision"] = prec;
    return j;
}

Character character_from_json(const json& j) {
    unsigned p = j.at("p").get<unsigned>();
    unsigned m = j.value("m", 1u);
    std::vector<unsigned> modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<unsigned>>();
    auto field = FiniteField::create(p, m, std::move(modulus));
    Character chi{field, {}, {}};
    for (auto& fac : j.at("chi")) {
        KKElem c = fac.at("c").is_string() ? field->parse(fac.at("c").get<std::string>())
                                           : field->from_int(fac.at("c").get<long>());
        if (c.is_zero()) throw character_not_admissible("chi_i(p) must be non-zero");
        chi.c.push_back(c);
        chi.e.push_back(fac.at("e").get<long>());
    }
    if (chi.c.empty()) throw parse_error("character needs at least one factor");
    return chi;
}

json character_to_json(const Character& chi) {
    json j;
    j["p"] = chi.p();
    j["m"] = chi.field->m();
    json facs = json::array();
    for (int i = 0; i < chi.n(); ++i)
        facs.push_back({{"c", chi.c[i].str()}, {"e", chi.e[i]}});
    j["chi"] = facs;
    return j;
}

} // namespace bruhat
