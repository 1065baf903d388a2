#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/context.hpp"

namespace padic {

/// One row of a verification sweep: pass iff every sampled residual had
/// valuation >= required_valuation.
struct VerificationReport {
    std::string identity;
    long samples = 0;
    val_t min_residual_valuation = kValInf;
    val_t required_valuation = 0;
    bool pass = false;
    std::uint64_t seed = 0;
};

/// Accumulates residual valuations and freezes them into a report.
class ReportBuilder {
  public:
    ReportBuilder(std::string identity, val_t required, std::uint64_t seed)
        : identity_(std::move(identity)), required_(required), seed_(seed) {}

    void observe(val_t residual) {
        ++samples_;
        min_ = val_min(min_, residual);
    }

    VerificationReport finish() const {
        return {identity_, samples_, min_, required_, min_ >= required_, seed_};
    }

  private:
    std::string identity_;
    val_t required_;
    std::uint64_t seed_;
    long samples_ = 0;
    val_t min_ = kValInf;
};

inline bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace padic
