#pragma once

// Named verification suites behind `turan verify <suite>` and the acceptance
// runner: solver-versus-formula checks, exhaustive small-n lemma checks, and
// the bound-calculus property grids.

#include <iosfwd>
#include <string>
#include <vector>

#include "turan/solver.hpp"

namespace turan {

struct CheckLine {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckLine> checks;

    bool all_pass() const;
    void add(std::string label, bool pass, std::string detail = "");
};

struct VerifyParams {
    int max_n = -1;      // thm-max
    int n = -1;          // lem-components
    int max_l = -1;      // sandwich, average-lemma
    int count = -1;      // jensen random instances
    unsigned seed = 12345;
    bool extended = false;  // long non-gating instances
    SolveOptions solve;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const VerifyParams& params);
void print_report(std::ostream& out, const SuiteReport& report);

}
