#pragma once

// Umbrella header: exact counting of root-lattice states of level-q
// Chern-Simons theory on the torus for the simply-laced Lie algebras,
// by polytope enumeration, Omega-operator elimination, cyclotomic closed
// forms, and McKay-dual representation counting.

#include "adeq/algebra.hpp"
#include "adeq/cyclotomic.hpp"
#include "adeq/exact.hpp"
#include "adeq/genfun.hpp"
#include "adeq/io.hpp"
#include "adeq/laurent.hpp"
#include "adeq/matrix.hpp"
#include "adeq/mckay.hpp"
#include "adeq/omega.hpp"
#include "adeq/polytope.hpp"
#include "adeq/series.hpp"
#include "adeq/verify.hpp"
