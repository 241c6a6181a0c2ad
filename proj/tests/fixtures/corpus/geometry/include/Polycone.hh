#ifndef POLYCONE_HH
#define POLYCONE_HH

#include <vector>

#include "VSolid.hh"

class PolyconeSide;

class Polycone : public VSolid
{
  public:
    Polycone(const std::string& name, int numZ);
    ~Polycone() override;

    EInside Inside(const ThreeVector& p) const override;
    double DistanceToIn(const ThreeVector& p) const override;

    inline int GetNumRZCorner() const;
    inline double GetStartPhi() const;
    inline bool IsOpen() const;

  private:
    std::vector<PolyconeSide*> fSides;
    int fNumCorner = 0;
    double fStartPhi = 0.;
    bool fOpen = false;
};

#include "Polycone.icc"

#endif
