#pragma once

#include <string>
#include <vector>

namespace ddfkit {

struct CheckResult {
    std::string id;
    bool ok = false;
    std::string detail;
};

/// Runs the built-in golden-vector suite: the GF(3) worked construction
/// (impulse response, all sigma columns, both families), the PG(3,3) worked
/// families (base family, generator multiplier, alternate parallel class,
/// LFSR cross-check), the small difference-family examples, the equivalence
/// examples, and the full construction-correspondence matrix over
/// q in {2, 3, 4, 5} with q^n - 1 <= 80. Deterministic; no I/O.
std::vector<CheckResult> run_reference_checks();

bool all_ok(const std::vector<CheckResult>& results);

} // namespace ddfkit
