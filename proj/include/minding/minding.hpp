#ifndef MINDING_MINDING_HPP
#define MINDING_MINDING_HPP

// Umbrella header.

#include "bounds.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "mixed_area.hpp"
#include "numeric.hpp"
#include "parser.hpp"
#include "point.hpp"
#include "polynomial.hpp"
#include "puiseux.hpp"
#include "resultant.hpp"
#include "subdivision.hpp"
#include "svg.hpp"

#endif  // MINDING_MINDING_HPP
