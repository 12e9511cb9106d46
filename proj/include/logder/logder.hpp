#pragma once

// Exact bases of the logarithmic derivation modules of the coned extended
// Shi and Catalan arrangements of type A2, with certificate checks.

#include "logder/arrangement.hpp"
#include "logder/construction.hpp"
#include "logder/derivation.hpp"
#include "logder/invariant.hpp"
#include "logder/io.hpp"
#include "logder/matrix.hpp"
#include "logder/poly.hpp"
#include "logder/ratfunc.hpp"
#include "logder/rational.hpp"
#include "logder/runner.hpp"
