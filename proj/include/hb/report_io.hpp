#pragma once

// JSON-lines and CSV serialization of IdentityReport.

#include <cstdio>
#include <string>

#include <json.hpp>

#include "hb/identities.hpp"

namespace hb {

inline nlohmann::ordered_json to_json(const cplx& v) {
    return nlohmann::ordered_json{{"re", v.real()}, {"im", v.imag()}};
}

inline cplx complex_from_json(const nlohmann::ordered_json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

inline nlohmann::ordered_json to_json(const IdentityReport& r) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = to_json(v);
    return nlohmann::ordered_json{
        {"identity_name", r.identity_name},
        {"params", params},
        {"lhs", to_json(r.lhs)},
        {"rhs", to_json(r.rhs)},
        {"abs_residual", r.abs_residual},
        {"rel_residual", r.rel_residual},
        {"lhs_method", r.lhs_method},
        {"rhs_method", r.rhs_method},
        {"converged", r.converged},
    };
}

// ordered_json keeps params in emission order so a round trip is exact.
inline IdentityReport report_from_json(const nlohmann::ordered_json& j) {
    IdentityReport r;
    r.identity_name = j.at("identity_name").get<std::string>();
    for (const auto& [k, v] : j.at("params").items())
        r.params.emplace_back(k, complex_from_json(v));
    r.lhs = complex_from_json(j.at("lhs"));
    r.rhs = complex_from_json(j.at("rhs"));
    r.abs_residual = j.at("abs_residual").get<double>();
    r.rel_residual = j.at("rel_residual").get<double>();
    r.lhs_method = j.at("lhs_method").get<std::string>();
    r.rhs_method = j.at("rhs_method").get<std::string>();
    r.converged = j.at("converged").get<bool>();
    return r;
}

inline std::string report_json_line(const IdentityReport& r) { return to_json(r).dump(); }

namespace detail {

inline std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string csv_complex(const cplx& v) {
    if (v.imag() == 0.0) return g17(v.real());
    return g17(v.real()) + "+" + g17(v.imag()) + "i";
}

} // namespace detail

inline std::string report_csv_header() {
    return "identity_name,params,lhs,rhs,abs_residual,rel_residual,lhs_method,rhs_method,"
           "converged";
}

inline std::string report_csv_row(const IdentityReport& r) {
    std::string params;
    for (const auto& [k, v] : r.params) {
        if (!params.empty()) params += ';';
        params += k + "=" + detail::csv_complex(v);
    }
    return r.identity_name + ",\"" + params + "\"," + detail::csv_complex(r.lhs) + "," +
           detail::csv_complex(r.rhs) + "," + detail::g17(r.abs_residual) + "," +
           detail::g17(r.rel_residual) + "," + r.lhs_method + "," + r.rhs_method + "," +
           (r.converged ? "true" : "false");
}

} // namespace hb
