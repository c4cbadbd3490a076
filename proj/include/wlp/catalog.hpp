#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wlp/constructions.hpp"

namespace wlp {

/// A named family of explicit dual witnesses. `build(n, d)` returns a
/// construction whose dual_witnesses are the family's polynomials for that
/// ideal; `grid` lists the (n, d) pairs in range with n <= 7, d <= 8.
struct WitnessFamily {
  std::string name;
  std::string formula;
  std::vector<std::pair<int, int>> grid;
  std::function<Construction(int n, int d)> build;
};

std::vector<WitnessFamily> dual_witness_catalog();

/// (X1-X2)^{floor((3d-3)/2)} (X3-X4)^{d-1} in five variables. Its X1-degree
/// reaches d, so x1^d kills it only when it vanishes; it is kept out of the
/// catalog and exposed for the test that documents this.
DualPolynomial split_aci_five_candidate(int d);

}  // namespace wlp
