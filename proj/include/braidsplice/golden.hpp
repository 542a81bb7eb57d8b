#pragma once

#include <string>
#include <vector>

#include "braidsplice/io.hpp"

namespace bsp {

// Checks against the worked examples stored under fixtures/paper. Each
// takes the parsed fixture file and reports every mismatch.

Json load_fixture(const std::string& name, const std::string& dir = BSP_FIXTURE_DIR);

CheckReport golden_braid_matrix(const Json& fx);        // long_example.json
CheckReport golden_cluster_variables(const Json& fx);   // long_example.json
CheckReport golden_exchange_matrices(const Json& fx);   // exchange_matrix_example.json
CheckReport golden_richardson(const Json& fx);          // richardson_example.json
CheckReport golden_splice_monomials(const Json& fx);    // intro_splice.json
CheckReport golden_intro_quiver(const Json& fx);        // intro_splice.json
CheckReport golden_computing_m(const Json& fx);         // computing_m.json
CheckReport golden_quasi_cluster(const Json& fx);       // quasi_cluster.json

std::vector<CheckReport> run_golden(const std::string& dir = BSP_FIXTURE_DIR);

}  // namespace bsp
