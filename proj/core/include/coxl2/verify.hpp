#pragma once

#include <coxl2/coxeter.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coxl2 {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/** coxeter, algebra, growth, complexes, hecke, weighted, ra */
std::vector<std::string> suite_names();

/**
 * Runs the property checks of one suite ("all" runs every suite). Results
 * are sorted by suite, then check name. Random inputs come from the seed.
 */
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed = 1);

/**
 * Idempotent and projection identities of the Hecke algebra of w, with
 * symbolic parameters when q is empty. Finite groups also get the Solomon
 * decomposition at q (or at q = 1 when symbolic).
 */
std::vector<CheckResult> check_hecke_identities(const CoxeterSystem& w, const std::optional<Multiparam>& q);

}  // namespace coxl2
