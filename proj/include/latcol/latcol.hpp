#pragma once

// Umbrella header for the latcol library.

#include "latcol/color.hpp"
#include "latcol/errors.hpp"
#include "latcol/generator.hpp"
#include "latcol/io.hpp"
#include "latcol/lattice.hpp"
#include "latcol/oracle.hpp"
#include "latcol/path.hpp"
#include "latcol/solver.hpp"
