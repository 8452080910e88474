#ifndef WITT_SELFCHECK_HPP
#define WITT_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace witt {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // failure description, empty on success
};

struct SelfcheckOptions {
    long long trials = 100;
    std::uint64_t seed = 0x5717c0de;
    long long universal_level = 24; // symbolic ghost-identity sweep bound
};

std::vector<CheckResult> selfcheck_rings(const SelfcheckOptions& opt);
std::vector<CheckResult> selfcheck_profiles(const SelfcheckOptions& opt);
std::vector<CheckResult> selfcheck_universal(const SelfcheckOptions& opt);
std::vector<CheckResult> selfcheck_witt(const SelfcheckOptions& opt);
std::vector<CheckResult> selfcheck_lambda(const SelfcheckOptions& opt);
std::vector<CheckResult> selfcheck_artin_hasse(const SelfcheckOptions& opt);
std::vector<CheckResult> selfcheck_canonical(const SelfcheckOptions& opt);
std::vector<CheckResult> selfcheck_padic(const SelfcheckOptions& opt);

/// Every suite in sequence.
std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& opt);

} // namespace witt

#endif
