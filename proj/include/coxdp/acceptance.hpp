#ifndef COXDP_ACCEPTANCE_HPP
#define COXDP_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace coxdp {

struct AcceptanceOptions {
    // Criterion 6 covers r = 3..6 unconditionally; the r = 7 numerator
    // takes about a minute and can be skipped for quick runs.
    bool include_r7_hilbert = true;
};

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail; // measured values on success, first failure otherwise
    double seconds = 0.0;
};

// Runs the ten acceptance criteria in order. Exceptions inside a
// criterion are caught and reported as failures; this never throws.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

// One "PASS"/"FAIL" line per criterion. Timings are appended only when
// with_seconds is set, keeping the default output reproducible.
void print_acceptance(const std::vector<CriterionResult>& results, std::ostream& out,
                      bool with_seconds = false);

bool acceptance_passed(const std::vector<CriterionResult>& results);

} // namespace coxdp

#endif
