#pragma once

#include "padic/ode.hpp"
#include "padic/report.hpp"
#include "padic/sampling.hpp"

namespace padic::verify {

/// Per-suite sample counts; the defaults match the acceptance sweeps.
struct SweepConfig {
    long series = 100;     // round-trip series per prime
    long points = 30;      // pointwise samples per identity
    long pairs = 30;       // pairing samples
    long instances = 20;   // star/transform instances
    long solves = 20;      // DE instances
    long bfact = 10;       // Q-J law witnesses
    long lip_functions = 20;
    long lip_pairs = 50;
};

std::vector<VerificationReport> sigma_suite(const PrimeContext& ctx,
                                            std::uint64_t seed,
                                            const SweepConfig& cfg = {});
std::vector<VerificationReport> gamma_suite(const PrimeContext& ctx,
                                            std::uint64_t seed,
                                            const SweepConfig& cfg = {});
std::vector<VerificationReport> measures_suite(const PrimeContext& ctx,
                                               std::uint64_t seed,
                                               const SweepConfig& cfg = {});
std::vector<VerificationReport> ode_suite(const PrimeContext& ctx,
                                          std::uint64_t seed,
                                          const SweepConfig& cfg = {});

/// Every suite in order: sigma, gamma, measures, ode.
std::vector<VerificationReport> all_suites(const PrimeContext& ctx,
                                           std::uint64_t seed,
                                           const SweepConfig& cfg = {});

}  // namespace padic::verify
