#ifndef TUBS_HH
#define TUBS_HH

#include "VSolid.hh"

class Tubs : public VSolid
{
  public:
    enum ESide { kNull, kRMin, kRMax, kSPhi, kEPhi, kPZ, kMZ };

    Tubs(const std::string& name, double rmin, double rmax, double dz,
         double sphi, double dphi);
    ~Tubs() override = default;

    EInside Inside(const ThreeVector& p) const override;
    double DistanceToIn(const ThreeVector& p) const override;
    const char* SideName(ESide side) const;

  private:
    void CheckPhiAngles(double sphi, double dphi);

    double fRMin, fRMax, fDz, fSPhi, fDPhi;
    bool fPhiFullTube = true;
};

#endif
