#pragma once

#include <stdexcept>
#include <vector>

namespace betalag {

enum class ChamberFlavor { Signed, Nonnegative };

// Ordered point of the Weyl chamber W^N (weakly increasing coordinates) or of
// its nonnegative part W^N_>=.
struct ChamberPoint {
  std::vector<double> coords;
  ChamberFlavor flavor = ChamberFlavor::Signed;

  ChamberPoint() = default;
  ChamberPoint(std::vector<double> c, ChamberFlavor f)
      : coords(std::move(c)), flavor(f) {
    validate();
  }

  int dim() const { return static_cast<int>(coords.size()); }

  void validate() const {
    for (size_t i = 0; i + 1 < coords.size(); ++i)
      if (!(coords[i] <= coords[i + 1]))
        throw std::invalid_argument("ChamberPoint: coordinates not ordered");
    if (flavor == ChamberFlavor::Nonnegative && !coords.empty() &&
        coords.front() < 0.0)
      throw std::invalid_argument("ChamberPoint: negative coordinate");
  }

  // all inequalities strict (and > 0 for the nonnegative flavor)
  bool strictly_interior() const {
    for (size_t i = 0; i + 1 < coords.size(); ++i)
      if (!(coords[i] < coords[i + 1])) return false;
    if (flavor == ChamberFlavor::Nonnegative && !coords.empty() &&
        !(coords.front() > 0.0))
      return false;
    return true;
  }
};

}  // namespace betalag
