#pragma once

#include <cstdint>
#include <string>

namespace subcone {

struct SelftestOptions {
    std::uint64_t seed = 0;
    /// Negative control: feed the brushing property a non-increasing slope schedule.
    bool corrupt_slopes = false;
};

struct SelftestReport {
    bool passed = true;
    std::string first_failure;  ///< name of the first failing property
    std::string text;           ///< one line per property, deterministic for a seed
};

/// Runs a reduced-size copy of every module's property suite.
SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace subcone
