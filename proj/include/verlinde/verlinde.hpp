#pragma once

// Umbrella header: the full library.
#include "verlinde/errors.hpp"
#include "verlinde/family.hpp"
#include "verlinde/io.hpp"
#include "verlinde/jumping.hpp"
#include "verlinde/matrix.hpp"
#include "verlinde/parallel.hpp"
#include "verlinde/pencil.hpp"
#include "verlinde/poly_io.hpp"
#include "verlinde/polynomial.hpp"
#include "verlinde/random.hpp"
#include "verlinde/rational.hpp"
#include "verlinde/schubert.hpp"
#include "verlinde/suites.hpp"
