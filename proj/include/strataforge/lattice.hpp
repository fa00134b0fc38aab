#pragma once

#include "strataforge/module.hpp"

namespace strataforge {

// Every submodule of m, as inclusion morphisms, deterministically ordered by
// (total dimension, canonical key).  Enumeration spins cyclic submodules from
// normalized fiber vectors and closes under sums, so it needs a finite
// coefficient field; over Q this throws UnsupportedError.  The budget caps
// the number of submodules and closure steps (ResourceError).
std::vector<SubmoduleResult> all_submodules(const Module& m, long long budget = 1 << 20);

// Every quotient of m, ordered by decreasing total dimension.
std::vector<QuotientModuleResult> all_quotients(const Module& m, long long budget = 1 << 20);

}  // namespace strataforge
