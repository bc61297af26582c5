#pragma once

// Umbrella header: cyclic descent machinery on Motzkin paths and three-row
// strip standard Young tableaux.

#include "motzcyc/ascii.hpp"
#include "motzcyc/descent_set.hpp"
#include "motzcyc/enumerate.hpp"
#include "motzcyc/errors.hpp"
#include "motzcyc/gamma.hpp"
#include "motzcyc/jdt.hpp"
#include "motzcyc/numbers.hpp"
#include "motzcyc/path.hpp"
#include "motzcyc/shape.hpp"
#include "motzcyc/shift.hpp"
#include "motzcyc/statistics.hpp"
#include "motzcyc/step.hpp"
#include "motzcyc/tableau.hpp"
#include "motzcyc/verify.hpp"
