#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "thetalab/harness.hpp"

namespace thetalab {

struct SuiteOptions {
    /// all | locality | theta | kms | monotone | conjectures | properties
    std::string suite = "all";
    std::uint64_t seed = 1;
    int max_dim = 3;
    /// Random instances per (class, dimension).
    std::size_t random_count = 6;
    /// 0 picks thread_budget().
    std::size_t threads = 0;
};

struct SuiteResult {
    std::vector<VerificationReport> reports;
    Summary summary;
};

/// THETA_LAB_THREADS if set and positive, else the hardware concurrency.
std::size_t thread_budget();

/// Runs `task(i)` for i < count on up to `threads` workers; results keep
/// index order, so the output does not depend on scheduling.
std::vector<std::vector<VerificationReport>> parallel_reports(
    std::size_t count, std::size_t threads, const std::function<std::vector<VerificationReport>(std::size_t)>& task);

/// Throws PreconditionError for an unknown suite name.
SuiteResult run_suite(const SuiteOptions& options);

enum class ScanKind { theta_zero, monotone_ivp, real_rooted };

/// Evidence for open questions; reports are never defects.
SuiteResult run_scan(ScanKind kind, const SuiteOptions& options);

}  // namespace thetalab
