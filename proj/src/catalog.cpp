#include "wlp/catalog.hpp"

#include <stdexcept>

namespace wlp {

namespace {

std::vector<std::pair<int, int>> grid_of(int n_lo, int n_hi, int d_lo, int d_hi,
                                         const std::function<bool(int, int)>& keep = nullptr) {
  std::vector<std::pair<int, int>> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int d = d_lo; d <= d_hi; ++d) {
      if (!keep || keep(n, d)) out.emplace_back(n, d);
    }
  }
  return out;
}

Construction only_witness(Construction c, std::size_t k) {
  c.dual_witnesses = {c.dual_witnesses.at(k)};
  return c;
}

}  // namespace

std::vector<WitnessFamily> dual_witness_catalog() {
  std::vector<WitnessFamily> out;
  out.push_back({"surjectivity-ternary", "(X1-X2)(X1-X3)(X2-X3)^(d-2)", grid_of(3, 3, 3, 8),
                 [](int n, int d) { return surjectivity_ideal(n, d); }});
  out.push_back({"surjectivity", "(X1-X2)(X3-X4)^(d-1)", grid_of(4, 7, 2, 8),
                 [](int n, int d) { return surjectivity_ideal(n, d); }});
  out.push_back({"vandermonde", "prod_{i<j} (X_i-X_j)", grid_of(3, 7, 3, 7, [](int n, int d) { return n == d; }),
                 [](int n, int) { return product_aci(n); }});
  out.push_back({"ci-square-lift", "F*(Y1-Y2)^(d-1) over a surjectivity ideal",
                 grid_of(5, 7, 2, 8, [](int n, int d) { return !(n == 5 && d == 2); }),
                 [](int n, int d) { return extend_by_ci_square(surjectivity_ideal(n - 2, d)); }});
  out.push_back({"ci-square-lift-togliatti", "V(X1,X2,X3)*(Y1-Y2)^2", {{5, 3}},
                 [](int, int) { return extend_by_ci_square(product_aci(3)); }});
  const auto star_a = [](int n, int d) { return n >= 5 && d >= 4; };
  const auto star_b = [](int n, int d) { return n >= 6 && d >= 3; };
  const auto star_c = [](int n, int d) { return n >= 7 && d >= 2; };
  out.push_back({"corner-star-a", "(X1-X2)(X1-X3)(X2-X3)^(d-2)(X4-X5)^(d-1)", grid_of(5, 7, 2, 8, star_a),
                 [](int n, int d) { return only_witness(corner_star(n, d), 0); }});
  out.push_back({"corner-star-b", "(X1-X6)(X2-X3)^(d-1)(X4-X5)^(d-1)", grid_of(6, 7, 2, 8, star_b),
                 [star_a](int n, int d) { return only_witness(corner_star(n, d), star_a(n, d) ? 1 : 0); }});
  out.push_back({"corner-star-c", "(X2-X3)(X4-X5)^(d-1)(X6-X7)^(d-1)", grid_of(7, 7, 2, 8, star_c),
                 [](int n, int d) {
                   Construction c = corner_star(n, d);
                   return only_witness(c, c.dual_witnesses.size() - 1);
                 }});
  out.push_back({"two-corners", "(X1-X2)^(d-1)(X3-X4)^(d-1)", grid_of(4, 4, 2, 8),
                 [](int, int d) { return two_corners(d); }});
  out.push_back({"split-aci-four", "(X1-X2)^(d-1)(X3-X4)^(d-1)", grid_of(4, 4, 5, 8),
                 [](int, int d) { return split_aci_four(d); }});
  out.push_back({"cubic-five", "(X3-X4)(X3-X5)(X4-X5)(X1-X2)^2", {{5, 3}},
                 [](int, int) { return cubic_five(false); }});
  out.push_back({"cubic-five-product", "(X3-X4)(X3-X5)(X4-X5)(X1-X2)^2", {{5, 3}},
                 [](int, int) { return cubic_five(true); }});
  out.push_back({"split-aci-five-sextic", "F_k*(X4-X5)^2(X3-X5)^2(X3-X4)^2(X1-X2)^4, k = 1..4", {{5, 6}},
                 [](int, int d) { return split_aci_five(d); }});
  out.push_back({"quartic-five", "f, (14)f, (24)f, g, (23)g", {{5, 4}}, [](int, int) { return quartic_five(); }});
  out.push_back({"togliatti-cube", "V(X1,X2,X3)*G, G spanning the dual kernel of (x4^3,x5^3,x6^3)", {{6, 3}},
                 [](int, int) { return togliatti_cube(); }});
  out.push_back({"injectivity-quadratic", "(X1-X2)(X3-X4)", {{4, 2}}, [](int n, int d) { return injectivity_ideal(n, d); }});
  return out;
}

DualPolynomial split_aci_five_candidate(int d) {
  if (d < 5) throw std::invalid_argument("split_aci_five_candidate needs d >= 5");
  return Polynomial::difference(5, 0, 1).pow((3 * d - 3) / 2) * Polynomial::difference(5, 2, 3).pow(d - 1);
}

}  // namespace wlp
