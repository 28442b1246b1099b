#pragma once

#include "mosaic/mosaic.hpp"
#include "mosaic/moves.hpp"

namespace mosaic {

struct AdjustResult {
  Mosaic mosaic;
  MoveCertificate certificate;
};

// Is the tangle already in adjusted form: odd dimension, every boundary
// connection at the center cell of its side, opposite sides when 2m = 2?
bool is_boundary_adjusted(const Mosaic& m);

// Produces an equivalent odd-dimension tangle whose boundary connections sit
// at side centers (opposite sides for a 1-tangle, all four sides for a
// 2-tangle). The input block is preserved verbatim; strand ends are rerouted
// through a blank padding annulus without introducing crossings, so the
// underlying tangle is unchanged up to sliding endpoints along the boundary.
// Throws std::invalid_argument for arities other than 2 or 4.
AdjustResult boundary_adjust(const Mosaic& m);

}  // namespace mosaic
