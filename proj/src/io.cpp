#include "dp5/io.hpp"

#include <fstream>
#include <stdexcept>

namespace dp5 {

using nlohmann::json;

json integer_to_json(const Integer& x) {
    if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
    return json(x.get_str());
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
        return Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0)
            throw std::invalid_argument("not an integer: " + j.get<std::string>());
        return x;
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

json height_set_to_json(const HeightSet& ps) {
    json forms = json::array();
    for (const auto& f : ps.forms()) {
        json row = json::array();
        for (const auto& c : f.c) row.push_back(integer_to_json(c));
        forms.push_back(row);
    }
    return json{{"id", ps.name()}, {"forms", forms}};
}

HeightSet height_set_from_json(const json& j) {
    const json* rows = nullptr;
    HeightSetId id = HeightSetId::Custom;
    if (j.is_object()) {
        if (j.contains("id")) id = height_set_id_from_string(j.at("id").get<std::string>());
        if (j.contains("forms")) rows = &j.at("forms");
        if (!rows) {
            if (id == HeightSetId::Custom) throw std::invalid_argument("custom height set without forms");
            return HeightSet::builtin(id);
        }
    } else if (j.is_array()) {
        rows = &j;
    } else {
        throw std::invalid_argument("height set must be an object or an array of rows");
    }
    std::vector<QuadraticForm> forms;
    for (const auto& row : *rows) {
        if (!row.is_array() || row.size() != 6) throw std::invalid_argument("each form needs six coefficients");
        std::array<Integer, 6> c;
        for (int k = 0; k < 6; ++k) c[k] = integer_from_json(row[k]);
        forms.emplace_back(c);
    }
    if (id != HeightSetId::Custom) {
        HeightSet b = HeightSet::builtin(id);
        if (b.forms() != forms) throw std::invalid_argument("forms do not match built-in set " + b.name());
        return b;
    }
    return HeightSet::custom(std::move(forms));
}

HeightSet load_height_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open height set file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed height set file " + path + ": " + e.what());
    }
    return height_set_from_json(j);
}

json cox_tuple_to_json(const CoxTuple& a) {
    json arr = json::array();
    for (const auto& x : a.v) arr.push_back(integer_to_json(x));
    return arr;
}

CoxTuple cox_tuple_from_json(const json& j) {
    if (!j.is_array() || j.size() != 10) throw std::invalid_argument("a Cox tuple is an array of ten integers");
    CoxTuple a;
    for (int i = 0; i < 10; ++i) a[i] = integer_from_json(j[i]);
    return a;
}

json interval_to_json(const Interval& x, unsigned digits) {
    return json::array({to_decimal(x.lo, digits, false), to_decimal(x.hi, digits, true)});
}

json constant_report_to_json(const ConstantReport& r, unsigned digits) {
    json j;
    j["height_set"] = r.height_set;
    j["alpha"] = rational_string(r.alpha);
    j["omega_archimedean"] = interval_to_json(r.omega_archimedean, digits);
    j["euler_value"] = interval_to_json(r.euler_value, digits);
    j["c"] = interval_to_json(r.c, digits);
    j["log_exponent"] = r.log_exponent;
    j["prime_cutoff"] = r.prime_cutoff;
    j["quadrature_tolerance"] = r.quadrature_tolerance;
    j["decimal_digits"] = digits;
    return j;
}

}  // namespace dp5
