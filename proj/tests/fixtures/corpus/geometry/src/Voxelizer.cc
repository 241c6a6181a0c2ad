/*
 * Voxelizer: splits a mother volume into slices.
 *
 * The algorithm is the classic one:
 *   1. build extents
 *   2. sort boundaries
 *   3. merge equivalent nodes
 */

#include <algorithm>
#include <vector>

#include "VoxelLimits.hh"

namespace geom {

class Voxelizer
{
  public:
    void BuildVoxelLimits(const std::vector<double>& bounds);   /* one pass */
    int CountNodes() const;

  private:
    std::vector<double> fBoundaries;   // sorted
    VoxelLimits fLimits;
};

void Voxelizer::BuildVoxelLimits(const std::vector<double>& bounds)
{
  fBoundaries = bounds; /* copy, then
                           sort in place */
  std::sort(fBoundaries.begin(), fBoundaries.end());
  /* dedupe */ fBoundaries.erase(std::unique(fBoundaries.begin(), fBoundaries.end()),
                                 fBoundaries.end());
  if (!fBoundaries.empty()) {
    fLimits.xmin = fBoundaries.front(); fLimits.xmax = fBoundaries.back();
  }
}

int Voxelizer::CountNodes() const
{
  int n = 0;
  for (std::size_t i = 0; i + 1 < fBoundaries.size(); ++i)
  {
    // Skip slices thinner than the tolerance.
    if (fBoundaries[i+1] - fBoundaries[i] > 1e-9) ++n;
  }
  return n;   /* trailing */ /* comments */
}

}  // namespace geom
