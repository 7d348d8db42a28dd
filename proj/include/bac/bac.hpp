#pragma once

// Umbrella header: exact n-equivalence of binary asymmetric channels,
// criteria enumeration, region geometry, and the brute-force oracles.

#include "bac/bac_function.hpp"
#include "bac/channel.hpp"
#include "bac/emit.hpp"
#include "bac/equivalence.hpp"
#include "bac/fraction.hpp"
#include "bac/geometry.hpp"
#include "bac/monomial.hpp"
#include "bac/oracle.hpp"
#include "bac/ordered_form.hpp"
#include "bac/rational.hpp"
#include "bac/transition_matrix.hpp"
