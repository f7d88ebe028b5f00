#pragma once

// Umbrella header for the exact-arithmetic library: generalized Stirling
// triangles, higher-order geometric polynomials by several independent
// routes, brute-force arrangement counting, the identity audit, and the
// truncated asymptotic expansion machinery.

#include "geomcomb/asymptotics.hpp"
#include "geomcomb/audit.hpp"
#include "geomcomb/audit_json.hpp"
#include "geomcomb/bpa.hpp"
#include "geomcomb/errors.hpp"
#include "geomcomb/factorials.hpp"
#include "geomcomb/geometric.hpp"
#include "geomcomb/polynomial.hpp"
#include "geomcomb/rational.hpp"
#include "geomcomb/series.hpp"
#include "geomcomb/stirling.hpp"
