#pragma once

// Heavy-tail exponent estimation by max self-similarity.

#include "distributions.hpp"
#include "error.hpp"
#include "gls.hpp"
#include "inference.hpp"
#include "max_spectrum.hpp"
#include "parallel.hpp"
#include "psi.hpp"
#include "rng.hpp"
#include "scale_selection.hpp"
