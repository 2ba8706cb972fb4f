#include "helpers.hpp"

#include "job.hpp"

namespace koszul::testing {

RingElem el(const RingPtr& ring, const std::string& text) { return cli::parseElement(text, ring); }

HomogeneousMatrix matrixOf(const RingPtr& ring, std::vector<int> rowDegrees, std::vector<int> colDegrees,
                           const std::vector<std::vector<std::string>>& rows) {
  HomogeneousMatrix m(ring, std::move(rowDegrees), std::move(colDegrees));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      RingElem e = el(ring, rows[r][c]);
      if (!e.isZero()) m.set(static_cast<int>(r), static_cast<int>(c), e);
    }
  return m;
}

HomogeneousMatrix cyclic(const RingPtr& ring, const std::vector<std::string>& gens) {
  HomogeneousMatrix m(ring, {0}, {});
  for (const auto& g : gens) {
    RingElem e = el(ring, g);
    m.appendColumn(e.degree(), {{0, e}});
  }
  return m;
}

}  // namespace koszul::testing
