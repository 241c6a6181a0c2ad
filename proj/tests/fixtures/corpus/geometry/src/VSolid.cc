#include "VSolid.hh"

VSolid::VSolid(const std::string& name)
  : fName(name)
{
}

VSolid::~VSolid() = default;

// Base implementation: estimate volume lazily. Concrete solids override
// this with an analytic value when one exists.
double VSolid::GetCubicVolume()
{
  if (fCubicVolume < 0.)
  {
    fCubicVolume = 0.;
  }
  return fCubicVolume;
}
