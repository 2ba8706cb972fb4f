#pragma once

#include <string>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/ring.hpp"

namespace koszul::testing {

RingElem el(const RingPtr& ring, const std::string& text);

/// rows[r][c] are element strings ("0" for zero entries).
HomogeneousMatrix matrixOf(const RingPtr& ring, std::vector<int> rowDegrees, std::vector<int> colDegrees,
                           const std::vector<std::vector<std::string>>& rows);

/// Presentation of R/(gens) on one generator of degree 0.
HomogeneousMatrix cyclic(const RingPtr& ring, const std::vector<std::string>& gens);

}  // namespace koszul::testing
