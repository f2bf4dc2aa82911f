#pragma once

// Umbrella header: everything needed to compute, construct, verify and render
// minimum coverings of lattice rectangles by monotone staircase polyominoes.

#include "construct.hpp"   // IWYU pragma: export
#include "errors.hpp"      // IWYU pragma: export
#include "extnat.hpp"      // IWYU pragma: export
#include "formulas.hpp"    // IWYU pragma: export
#include "geometry.hpp"    // IWYU pragma: export
#include "json_io.hpp"     // IWYU pragma: export
#include "normalize.hpp"   // IWYU pragma: export
#include "oracle.hpp"      // IWYU pragma: export
#include "rational.hpp"    // IWYU pragma: export
#include "render.hpp"      // IWYU pragma: export
