#ifndef GTOP_VERIFY_HPP
#define GTOP_VERIFY_HPP

#include <string>
#include <vector>

#include "gtop/config.hpp"

namespace gtop::verify {

struct PropertyResult {
    std::string property;
    bool pass;
    std::string detail;
};

/// Suites: "duality", "nfgdt", "scale", "planar", or "all".
std::vector<PropertyResult> run_suite(const std::string& suite, const RunConfig& cfg);

bool all_pass(const std::vector<PropertyResult>& results);

}  // namespace gtop::verify

#endif
