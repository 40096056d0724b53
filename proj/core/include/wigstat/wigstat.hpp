#pragma once

#include "wigstat/angular.hpp"
#include "wigstat/errors.hpp"
#include "wigstat/half_integer.hpp"
#include "wigstat/relaxation.hpp"
#include "wigstat/spectral.hpp"
#include "wigstat/sphere.hpp"
#include "wigstat/state.hpp"
#include "wigstat/statistics.hpp"
#include "wigstat/systems.hpp"
#include "wigstat/torus.hpp"
#include "wigstat/wfl.hpp"
