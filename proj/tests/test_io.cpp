#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/json_io.hpp"

using namespace padic;

TEST_CASE("scalar JSON round trip") {
    PrimeContext ctx(3, 10);
    for (const Scalar& s :
         {Scalar::from_integer(ctx, 122), Scalar::from_rational(ctx, cpp_rational(-5, 7)),
          Scalar::from_unit(ctx, 2, -3, 4), Scalar::zero(ctx),
          Scalar::zero_to_precision(ctx, 6)}) {
        Scalar back = io::scalar_from_json(ctx, io::scalar_to_json(s));
        CHECK(back.is_exact_zero() == s.is_exact_zero());
        if (!s.is_exact_zero()) {
            CHECK(back.precision() == s.precision());
            CHECK(back.valuation_lower_bound() == s.valuation_lower_bound());
            CHECK(back.unit() == s.unit());
        }
    }
    CHECK_THROWS_AS(
        io::scalar_from_json(PrimeContext(5, 10),
                             io::scalar_to_json(Scalar::from_integer(ctx, 1))),
        std::invalid_argument);
}

TEST_CASE("series JSON round trip") {
    PrimeContext ctx(3, 10);
    MahlerSeries q = q_series(ctx, 9);
    nlohmann::json j = io::series_to_json(q);
    CHECK(j["schema_version"] == io::kSchemaVersion);
    CHECK(j["p"] == 3);
    CHECK(j["N"] == 9);
    MahlerSeries back = io::series_from_json(j);
    CHECK(back.ctx == ctx);
    CHECK(back.tail_valuation == q.tail_valuation);
    CHECK(coefficient_residual(back, q) >= 10);
    // byte-identical re-export
    CHECK(io::series_to_json(back).dump() == j.dump());
}

TEST_CASE("power series JSON round trip") {
    PrimeContext ctx(5, 8);
    BoundedPowerSeries F{ctx,
                         {Scalar::from_integer(ctx, 3),
                          Scalar::zero_to_precision(ctx, 8), Scalar::zero(ctx)},
                         0};
    nlohmann::json j = io::power_series_to_json(F);
    BoundedPowerSeries back = io::power_series_from_json(j);
    CHECK(back.bound_valuation == 0);
    CHECK(back.window() == 3);
    CHECK(io::power_series_to_json(back).dump() == j.dump());
}

TEST_CASE("report JSON carries the pass criterion") {
    VerificationReport r{"demo", 4, 9, 8, true, 7};
    nlohmann::json j = io::report_to_json(r);
    CHECK(j["identity"] == "demo");
    CHECK(j["samples"] == 4);
    CHECK(j["min_residual_valuation"] == 9);
    CHECK(j["required_valuation"] == 8);
    CHECK(j["pass"] == true);
    CHECK(j["seed"] == 7);
    VerificationReport inf{"i", 1, kValInf, 5, true, 0};
    CHECK(io::report_to_json(inf)["min_residual_valuation"] == "inf");
}

TEST_CASE("CSV export shape") {
    PrimeContext ctx(2, 8);
    std::string csv = io::series_to_csv(q_series(ctx, 4));
    CHECK(csv == "n,valuation\n0,0\n1,0\n2,1\n3,1\n");
    MahlerSeries z = zero_series(ctx, 2);
    CHECK(io::series_to_csv(z) == "n,valuation\n0,inf\n1,inf\n");
}
