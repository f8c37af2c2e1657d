#pragma once

// Spectral analysis workbench for graphs without short odd cycles:
// constructions, exact and floating spectral computations, per-theorem
// certificates, and isomorphism-free exhaustive search at small order.

#include "speclab/blowup.hpp"
#include "speclab/canonical.hpp"
#include "speclab/certify.hpp"
#include "speclab/charpoly.hpp"
#include "speclab/cliques.hpp"
#include "speclab/cycles.hpp"
#include "speclab/enumerate.hpp"
#include "speclab/exact.hpp"
#include "speclab/format.hpp"
#include "speclab/graph.hpp"
#include "speclab/graph6.hpp"
#include "speclab/isomorphism.hpp"
#include "speclab/quotient.hpp"
#include "speclab/search.hpp"
#include "speclab/spectrum.hpp"
