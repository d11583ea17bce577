#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zqcode/json_io.hpp"
#include "zqcode/profile.hpp"
#include "zqcode/quasi.hpp"

namespace zqcode {

struct VerifyOptions {
    int max_q = 8;
    std::uint64_t oracle_budget = 100'000'000;
    int jobs = 1;
    bool greene = true;
};

struct VerifyOutcome {
    struct Line {
        std::string check;
        bool ok;
        std::string detail;  // first counterexample when not ok
    };
    std::vector<Line> lines;

    bool ok() const;
    void add(const std::string& check, bool passed, const std::string& detail = "");
};

/// Runs the oracle-vs-pipeline equality, structural profile invariants, evaluation
/// guards, minimum-weight constancy, and the Greene grids for one matrix.
VerifyOutcome verify_matrix(const IntMatrix& g, const VerifyOptions& options = {});

/// Everything verify_matrix does, plus bit-exact comparison of the computed
/// constituents against the fixture's expected weight quasi-polynomial.
VerifyOutcome verify_against_golden(const GoldenFixture& fixture, const VerifyOptions& options = {});

}  // namespace zqcode
