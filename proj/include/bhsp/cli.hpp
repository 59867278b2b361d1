#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bhsp/bool_function.hpp"

namespace bhsp::cli {

// Resolves a function reference: @file.tt, delta:<n>:<x0>, ip:<n>,
// random:<n>:<seed>, const:<n>:<bit>, tree:<file>, or a bare path ending in
// .tt / .tree.
BooleanFunction resolve_function(const std::string& spec);

// Runs one CLI invocation. Exit codes: 0 success, 1 domain error (JSON error
// object on `out`) or failed selftest, 2 usage error (usage text on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bhsp::cli
