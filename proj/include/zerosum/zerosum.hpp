#pragma once

// Umbrella header: exact zero-sum subset counting over Z_n^k, congruence
// identity checks, Chevalley-Warning zero counting, constructive zero-sum
// solvers, and extremal configurations.

#include "chevalley.hpp"   // IWYU pragma: export
#include "counting.hpp"    // IWYU pragma: export
#include "errors.hpp"      // IWYU pragma: export
#include "extremal.hpp"    // IWYU pragma: export
#include "identities.hpp"  // IWYU pragma: export
#include "io.hpp"          // IWYU pragma: export
#include "numeric.hpp"     // IWYU pragma: export
#include "random.hpp"      // IWYU pragma: export
#include "residue.hpp"     // IWYU pragma: export
#include "solvers.hpp"     // IWYU pragma: export
