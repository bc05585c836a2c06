#pragma once

// Umbrella header for the planning library. io.hpp and cli.hpp are not
// included here since they pull in the JSON and argument-parsing headers.

#include "paraplan/configspace.hpp"
#include "paraplan/deformations.hpp"
#include "paraplan/error.hpp"
#include "paraplan/geometry.hpp"
#include "paraplan/planner.hpp"
#include "paraplan/random.hpp"
#include "paraplan/verifier.hpp"
