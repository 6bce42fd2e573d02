#pragma once

// Umbrella header: exact-arithmetic focal-locus analysis and classification
// of parametrized plane congruences in P^4.

#include "focal/binform.hpp"
#include "focal/chart.hpp"
#include "focal/classifier.hpp"
#include "focal/engine.hpp"
#include "focal/error.hpp"
#include "focal/generators.hpp"
#include "focal/jet.hpp"
#include "focal/linalg.hpp"
#include "focal/onedim.hpp"
#include "focal/poly.hpp"
#include "focal/projective.hpp"
#include "focal/report_json.hpp"
#include "focal/rng.hpp"
#include "focal/scalar.hpp"
