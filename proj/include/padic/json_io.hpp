#pragma once

#include <json.hpp>

#include "padic/ode.hpp"
#include "padic/report.hpp"

namespace padic::io {

inline constexpr int kSchemaVersion = 1;

/// Scalar JSON: {schema_version, p, valuation: int|"inf", unit: decimal
/// string, precision}. Exact zero has valuation "inf"; a
/// zero-to-precision value has unit "0" and valuation equal to the
/// certified lower bound (its precision).
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const PrimeContext& ctx, const nlohmann::json& j);
/// Standalone import: the context is derived from the stored p and
/// precision fields.
Scalar scalar_from_json(const nlohmann::json& j, int guard = 48);

/// Mahler series JSON: {schema_version, p, P, N, coeffs, tail_valuation}.
nlohmann::json series_to_json(const MahlerSeries& f);
MahlerSeries series_from_json(const nlohmann::json& j, int guard = 48);

/// Power series JSON: {schema_version, p, P, N, coeffs, bound_valuation}.
nlohmann::json power_series_to_json(const BoundedPowerSeries& F);
BoundedPowerSeries power_series_from_json(const nlohmann::json& j,
                                          int guard = 48);

nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json reports_to_json(const std::vector<VerificationReport>& rs);

/// CSV of (n, v_p(a_n)) rows; "inf" for exact zeros.
std::string series_to_csv(const MahlerSeries& f);

}  // namespace padic::io
