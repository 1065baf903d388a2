#include "padic/json_io.hpp"

#include <sstream>

namespace padic::io {

using nlohmann::json;

namespace {

json val_to_json(val_t v) {
    if (v >= kValInf) return "inf";
    return v;
}

val_t val_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "inf")
            throw std::invalid_argument("valuation: expected int or \"inf\"");
        return kValInf;
    }
    return j.get<val_t>();
}

cpp_int int_from_string(const std::string& s) { return cpp_int(s); }

}  // namespace

json scalar_to_json(const Scalar& s) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["p"] = s.context().p;
    if (s.is_exact_zero()) {
        j["valuation"] = "inf";
        j["unit"] = "0";
        j["precision"] = val_to_json(kValInf);
    } else {
        j["valuation"] = s.valuation_lower_bound();
        j["unit"] = s.is_regular() ? s.unit().str() : std::string("0");
        j["precision"] = s.precision();
    }
    return j;
}

Scalar scalar_from_json(const PrimeContext& ctx, const json& j) {
    if (j.at("p").get<long>() != ctx.p)
        throw std::invalid_argument("scalar import: prime mismatch");
    val_t prec = val_from_json(j.at("precision"));
    val_t v = val_from_json(j.at("valuation"));
    cpp_int unit = int_from_string(j.at("unit").get<std::string>());
    if (v >= kValInf) return Scalar::zero(ctx);
    if (unit == 0) return Scalar::zero_to_precision(ctx, prec);
    return Scalar::from_unit(ctx, unit, v, prec);
}

Scalar scalar_from_json(const json& j, int guard) {
    long p = j.at("p").get<long>();
    val_t prec = val_from_json(j.at("precision"));
    PrimeContext ctx(p, prec >= kValInf || prec < 1 ? 8 : static_cast<int>(prec),
                     guard);
    return scalar_from_json(ctx, j);
}

namespace {

template <typename Coeffs>
json series_body(const PrimeContext& ctx, const Coeffs& coeffs) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["p"] = ctx.p;
    j["P"] = ctx.precision;
    j["N"] = coeffs.size();
    j["coeffs"] = json::array();
    for (const Scalar& c : coeffs) j["coeffs"].push_back(scalar_to_json(c));
    return j;
}

std::vector<Scalar> coeffs_from_json(const PrimeContext& ctx, const json& j) {
    std::vector<Scalar> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(scalar_from_json(ctx, c));
    return coeffs;
}

}  // namespace

json series_to_json(const MahlerSeries& f) {
    json j = series_body(f.ctx, f.coeffs);
    j["tail_valuation"] = val_to_json(f.tail_valuation);
    return j;
}

MahlerSeries series_from_json(const json& j, int guard) {
    PrimeContext ctx(j.at("p").get<long>(), j.at("P").get<int>(), guard);
    return MahlerSeries{ctx, coeffs_from_json(ctx, j),
                        val_from_json(j.at("tail_valuation"))};
}

json power_series_to_json(const BoundedPowerSeries& F) {
    json j = series_body(F.ctx, F.coeffs);
    j["bound_valuation"] = val_to_json(F.bound_valuation);
    return j;
}

BoundedPowerSeries power_series_from_json(const json& j, int guard) {
    PrimeContext ctx(j.at("p").get<long>(), j.at("P").get<int>(), guard);
    return BoundedPowerSeries{ctx, coeffs_from_json(ctx, j),
                              val_from_json(j.at("bound_valuation"))};
}

json report_to_json(const VerificationReport& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["identity"] = r.identity;
    j["samples"] = r.samples;
    j["min_residual_valuation"] = val_to_json(r.min_residual_valuation);
    j["required_valuation"] = val_to_json(r.required_valuation);
    j["pass"] = r.pass;
    j["seed"] = r.seed;
    return j;
}

json reports_to_json(const std::vector<VerificationReport>& rs) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(report_to_json(r));
    return arr;
}

std::string series_to_csv(const MahlerSeries& f) {
    std::ostringstream out;
    out << "n,valuation\n";
    for (long n = 0; n < f.window(); ++n) {
        out << n << ",";
        val_t v = f.coeffs[n].valuation_lower_bound();
        if (v >= kValInf)
            out << "inf";
        else
            out << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace padic::io
