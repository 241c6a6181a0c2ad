#ifndef VOXELLIMITS_HH
#define VOXELLIMITS_HH

struct VoxelLimits
{
  double xmin = -1e30, xmax = 1e30;
  double ymin = -1e30, ymax = 1e30;

  bool IsLimited() const
  {
    return xmin > -1e30 || xmax < 1e30 || ymin > -1e30 || ymax < 1e30;
  }
};

#endif
