// Gate binary: runs every reproduction check and prints one line per check.
// Exit status is nonzero if any check fails or the expected set changes.

#include <cstdio>
#include <string>
#include <vector>

#include <knotsum/report.hpp>

int main() {
    const std::vector<std::string> expected = {
        "01_closed_form_solution",   "02_hyperbolicity_residuals",
        "03_complex_volumes",        "04_volume_additivity",
        "05_twisted_alexander",      "06_det_phi_generators",
        "07_conjugated_splice",      "08_property_suites",
        "09_roundtrip_block_diagonal"};

    std::vector<knotsum::CheckResult> results = knotsum::reproduction_checks();
    bool ok = results.size() == expected.size();
    if (!ok)
        std::printf("FAIL expected %zu checks, got %zu\n", expected.size(), results.size());
    for (size_t i = 0; i < results.size(); ++i) {
        const knotsum::CheckResult& r = results[i];
        bool named = i < expected.size() && r.name == expected[i];
        bool pass = r.pass && named;
        std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        ok = ok && pass;
    }
    return ok ? 0 : 1;
}
