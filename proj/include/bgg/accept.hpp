#pragma once

#include <iosfwd>

namespace bgg {

// Runs the full acceptance suite, printing one PASS/FAIL line per
// criterion.  Returns the number of failed criteria.
int run_acceptance(std::ostream& out, unsigned long seed);

}  // namespace bgg
