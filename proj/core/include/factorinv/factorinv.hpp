#pragma once

// Umbrella header for the whole library.
#include "factorinv/affine_monoid.hpp"
#include "factorinv/block_monoid.hpp"
#include "factorinv/corpus.hpp"
#include "factorinv/diophantine.hpp"
#include "factorinv/error.hpp"
#include "factorinv/factorization.hpp"
#include "factorinv/factorizations.hpp"
#include "factorinv/integer.hpp"
#include "factorinv/invariants.hpp"
#include "factorinv/length_sets.hpp"
#include "factorinv/monoid.hpp"
#include "factorinv/numerical_monoid.hpp"
#include "factorinv/presentations.hpp"
#include "factorinv/report.hpp"
#include "factorinv/unions.hpp"
