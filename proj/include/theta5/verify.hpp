#ifndef THETA5_VERIFY_HPP
#define THETA5_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "theta5/numeric.hpp"

namespace theta5::verify {

struct CheckResult {
    std::string id;
    std::string title;
    bool pass = true;
    long checks = 0;
    long failures = 0;
    std::string worst;   // worst residual seen, where the check is numeric
    std::string detail;  // first failure or notable finding
};

struct Options {
    Prec prec = 128;
    std::uint64_t seed = 42;
    std::string suite = "all";  // "all" or one of "c1".."c10"
};

// Run the acceptance checks. Progress lines (with timings) go to *progress
// when non-null; the results themselves carry no timing so reports are
// byte-reproducible.
std::vector<CheckResult> run(const Options& opt, std::ostream* progress);

nlohmann::ordered_json report_json(const Options& opt, const std::vector<CheckResult>& results);
bool all_pass(const std::vector<CheckResult>& results);

}  // namespace theta5::verify

#endif
