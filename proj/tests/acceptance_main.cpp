// Standalone acceptance runner: one PASS/FAIL line per criterion, with
// timings; exit 0 only when every criterion passes. Set
// COXDP_ACCEPTANCE_SKIP_R7=1 to drop the r=7 Hilbert numerator (about a
// minute) from criterion 6.

#include <cstdlib>
#include <iostream>

#include "coxdp/acceptance.hpp"

int main()
{
    coxdp::AcceptanceOptions opt;
    if (const char* skip = std::getenv("COXDP_ACCEPTANCE_SKIP_R7"); skip && skip[0] == '1')
        opt.include_r7_hilbert = false;
    auto results = coxdp::run_acceptance(opt);
    coxdp::print_acceptance(results, std::cout, true);
    bool ok = coxdp::acceptance_passed(results);
    std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILURES present") << "\n";
    return ok ? 0 : 1;
}
