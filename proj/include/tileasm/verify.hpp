#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace tileasm {

// Names accepted by run_verify_suite, "all" excluded.
const std::vector<std::string>& verify_suite_names();

// Runs a property suite with `samples` random instances drawn from `seed`,
// printing one line per counterexample followed by a summary line. Returns
// the number of counterexamples. Unknown suites throw InvalidArgument.
std::size_t run_verify_suite(const std::string& suite, std::size_t samples, std::uint64_t seed, std::ostream& out);

}  // namespace tileasm
