#ifndef BOX_HH
#define BOX_HH

#include "VSolid.hh"

/*
 * A box with half-lengths dx, dy, dz
 * centred on the origin.
 */
class Box : public VSolid
{
  public:
    Box(const std::string& name, double dx, double dy, double dz);
    ~Box() override;

    EInside Inside(const ThreeVector& p) const override;
    double DistanceToIn(const ThreeVector& p) const override;
    double GetCubicVolume() override;

    double GetXHalfLength() const { return fDx; }   // accessor
    double GetYHalfLength() const { return fDy; }   /* accessor */
    double GetZHalfLength() const { return fDz; }

  private:
    double fDx, fDy, fDz;
    double delta = 1e-9;
};

#endif
