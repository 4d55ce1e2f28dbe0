#pragma once

#include "adas/calibration.hpp"
#include "adas/curves.hpp"
#include "adas/dynamics.hpp"
#include "adas/efficiency.hpp"
#include "adas/equilibrium.hpp"
#include "adas/errors.hpp"
#include "adas/io.hpp"
#include "adas/matching.hpp"
#include "adas/ode.hpp"
#include "adas/policy.hpp"
#include "adas/root_finding.hpp"
#include "adas/statics.hpp"
