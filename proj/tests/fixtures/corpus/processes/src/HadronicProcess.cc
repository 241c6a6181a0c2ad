#include "HadronicProcess.hh"

class HadronicInteraction
{
  public:
    virtual ~HadronicInteraction() = default;
    virtual double MeanFreePath(double energy) const { return energy; }
};

void HadronicProcess::RegisterMe(HadronicInteraction* model, double emin, double emax)
{
  if (model == nullptr || emax <= emin) { return; }
  fModels[emin] = model;
  ++fNModels;
}

HadronicInteraction* HadronicProcess::ChooseModel(double energy) const
{
  auto it = fModels.upper_bound(energy);
  if (it == fModels.begin()) { return nullptr; }
  --it;
  return it->second;
}

double HadronicProcess::PostStepGPIL(const Track&)
{
  const auto* model = ChooseModel(1.0);
  return model ? model->MeanFreePath(1.0) : 1e30;
}
