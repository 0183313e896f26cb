#pragma once

#include "supercong/checks.hpp"
#include "supercong/errors.hpp"
#include "supercong/exactq.hpp"
#include "supercong/identities.hpp"
#include "supercong/modring.hpp"
#include "supercong/primes.hpp"
#include "supercong/quadforms.hpp"
#include "supercong/report.hpp"
#include "supercong/sequences.hpp"
#include "supercong/sums.hpp"
#include "supercong/version.hpp"
