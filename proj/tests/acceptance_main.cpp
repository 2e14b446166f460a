// Acceptance suite runner: one line per criterion, non-zero exit on failure.
#include <cstdio>
#include <iostream>

#include "theta5/verify.hpp"

int main() {
    theta5::verify::Options opt;  // prec 128, seed 42, suite "all"
    auto results = theta5::verify::run(opt, &std::cerr);
    bool ok = true;
    for (const auto& r : results) {
        std::printf("%-4s %s  %s (%ld checks, %ld failed%s%s)%s%s\n", r.id.c_str(),
                    r.pass ? "PASS" : "FAIL", r.title.c_str(), r.checks, r.failures,
                    r.worst.empty() ? "" : ", worst residual ", r.worst.c_str(),
                    r.detail.empty() ? "" : " -- ", r.detail.c_str());
        ok = ok && r.pass;
    }
    std::printf("acceptance: %s\n", ok ? "all criteria pass" : "criteria failing");
    return ok ? 0 : 1;
}
