#pragma once

#include "spinitf/attainability.hpp"
#include "spinitf/config.hpp"
#include "spinitf/continued_fraction.hpp"
#include "spinitf/diophantine.hpp"
#include "spinitf/geometry.hpp"
#include "spinitf/itf.hpp"
#include "spinitf/lattice.hpp"
#include "spinitf/network.hpp"
#include "spinitf/routing.hpp"
#include "spinitf/spectra.hpp"
#include "spinitf/timing.hpp"
#include "spinitf/types.hpp"
