#pragma once

// Everything: graphs and I/O, GF(2) solving, accessibility checks, exact
// κ / κ' / κ_Q solvers, perfect codes, reductions and property suites.

#include "kappa/accessibility.hpp"
#include "kappa/bitset.hpp"
#include "kappa/enumerate.hpp"
#include "kappa/error.hpp"
#include "kappa/families.hpp"
#include "kappa/gf2.hpp"
#include "kappa/graph.hpp"
#include "kappa/io.hpp"
#include "kappa/perfect_code.hpp"
#include "kappa/reductions.hpp"
#include "kappa/report.hpp"
#include "kappa/solvers.hpp"
#include "kappa/suites.hpp"
