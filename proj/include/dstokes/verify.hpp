#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dstokes/signs.hpp"

namespace dstokes {

struct VerifyOptions {
    bool use_corpus = false;
    std::vector<std::string> paths;
    int random_count = 0;
    int max_crossings = 12;
    std::uint64_t seed = 1;
    EpsilonConvention convention = EpsilonConvention::Paper;
    bool records = false; // machine-readable one-line-per-check output
};

struct VerifyResult {
    std::string report;
    int exit_code = 0; // 0 pass, 1 identity failure, 2 input error
};

/// Runs every identity suite over the requested inputs and renders a
/// deterministic report: the difference backbone, the per-crossing boundary
/// compatibility, both three-level invariant families with a base-edge
/// sweep, the orientation-reversal checks, the triple-point sweep, and the
/// movie checks.
VerifyResult run_verify(const VerifyOptions& opt,
                        const std::function<std::string(const std::string&)>& read_file);

} // namespace dstokes
