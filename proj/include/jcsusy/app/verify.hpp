#pragma once

#include <string>
#include <vector>

namespace jcsusy::app {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Intertwining, isospectrality, eigenvalue and closed-form/numeric oracle
// checks at the base parameters (delta, lambda) plus a fixed reference set.
std::vector<CheckResult> run_verification(double delta, double lambda);

}  // namespace jcsusy::app
