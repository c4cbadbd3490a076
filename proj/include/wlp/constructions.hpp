#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlp/engine.hpp"
#include "wlp/ideal.hpp"
#include "wlp/polynomial.hpp"

namespace wlp {

struct ExpectedFailure {
  int degree = 0;
  /// Unset when only the degree is known (for example after a tensor lift).
  std::optional<FailureMode> mode;
};

/// A failing ideal together with what is known about it.
///
/// Primal witnesses are nonzero elements f of degree `expected->degree` with
/// l*f in I; dual witnesses are elements of degree `expected->degree + 1` in
/// the inverse system of I + (l).
struct Construction {
  std::string family;
  int n = 0;
  int d = 0;
  std::int64_t mu = 0;
  std::vector<int> params;
  MonomialIdeal ideal;
  /// Unset means "verify by scan".
  std::optional<ExpectedFailure> expected;
  std::vector<Polynomial> primal_witnesses;
  std::vector<DualPolynomial> dual_witnesses;
  std::string description;
  /// Construction steps, base first.
  std::vector<std::string> derivation;
};

// Family tags.
inline constexpr const char* kInjectivity = "injectivity";
inline constexpr const char* kInjectivityAugmented = "injectivity-augmented";
inline constexpr const char* kSurjectivity = "surjectivity";
inline constexpr const char* kSurjectivitySubset = "surjectivity-subset";
inline constexpr const char* kCiSquareLift = "ci-square-lift";
inline constexpr const char* kEvenAci = "even-aci";
inline constexpr const char* kOddAci = "odd-aci";
inline constexpr const char* kTernaryAci = "ternary-aci";
inline constexpr const char* kQuadraticBlocks = "quadratic-blocks";
inline constexpr const char* kCornerStar = "corner-star";
inline constexpr const char* kTwoCorners = "two-corners";
inline constexpr const char* kCubicFive = "cubic-five";
inline constexpr const char* kTogliattiCube = "togliatti-cube";
inline constexpr const char* kQuarticFive = "quartic-five";
inline constexpr const char* kQuadraticSeven = "quadratic-seven";
inline constexpr const char* kProductAci = "product-aci";
inline constexpr const char* kSplitAci = "split-aci";

/// (x1^d..xn^d, x1 xn^{d-1}, ..., x_{n-1} xn^{d-1}), 2n-1 generators, failing by
/// injectivity in degree d-1 with kernel element xn^{d-1}. For (3,3) and (4,2)
/// the exceptional ideals with nu(n,d) generators are returned instead.
Construction injectivity_ideal(int n, int d);
/// Injectivity ideal plus the earliest missing monomials in canonical order;
/// mu in [nu(n,d), delta(n,d)].
Construction injectivity_augmented(int n, int d, std::int64_t mu);

/// Annihilator in S_d of (X1-X2)(X1-X3)(X2-X3)^{d-2} (n = 3) or
/// (X1-X2)(X3-X4)^{d-1} (n >= 4); beta(n,d) generators, failing by
/// surjectivity in degree d-1.
Construction surjectivity_ideal(int n, int d);
/// The surjectivity ideal minus the earliest non-pure-power generators in
/// canonical order; mu in [delta(n,d), beta(n,d)].
Construction surjectivity_subset(int n, int d, std::int64_t mu);

/// Union of generators, J's variables shifted past I's. Both ideals must be
/// generated in the same single degree.
MonomialIdeal tensor_ideal(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal extend_by_ci_square(const MonomialIdeal& ideal);
/// Adds y1^d, y2^d. The expected failure degree moves up by d-1 and its mode
/// is forgotten; witnesses f and F become f*(y1^d + (-1)^{d-1} y2^d)/(y1+y2)
/// and F*(Y1-Y2)^{d-1}.
Construction extend_by_ci_square(const Construction& base);
/// Tensor product of a failing construction with an algebra having an
/// isolated peak in degree j: failure degree i+j. Peak witnesses are taken
/// from kernels computed on the second factor.
Construction tensor_with_peak(const Construction& base, const MonomialIdeal& peak_factor);

/// (x1^d..xn^d, x1^3 x2^{d-3}) for d >= 5, x1x2x3x4 for d = 4, x1x2x3 for
/// d = 3 (n >= 6); n = 2m, failing in degree m(d-1)-1.
Construction even_aci(int n, int d);
/// (x1^d..xn^d, x1^{ceil(d/2)} x2^{floor(d/2)}) for d >= 5, x1x2x3x4 for
/// d = 4, x1x2x3 for d = 3; n = 2m+1.
Construction odd_aci(int n, int d);
/// (x1^d, x2^d, x3^d, x1^a x2^b x3^c), d = 6k+3, a+b+c = d,
/// 4k+2 > a >= b >= c with two of a, b, c equal.
Construction ternary_aci(int d, int a, int b, int c);
Construction ternary_aci(int d);
/// (x1^n..xn^n, x1...xn), failing by surjectivity in degree C(n,2)-1 with
/// the Vandermonde product as dual witness.
Construction product_aci(int n);

/// Whether the tensor product of Sym(V_i)/V_i^2 with block sizes (a threes,
/// b twos, c ones) fails the WLP.
bool quadratic_blocks_fail(int a, int b, int c);
/// Quadratic ideal with a blocks of size three, b of size two, c singletons:
/// all quadratic monomials inside each block. n + 3a + b generators.
Construction quadratic_blocks(int a, int b, int c);
/// Finds a failing block pattern with n variables and mu generators;
/// throws DomainError when none exists (for instance n = 6, mu = 10).
Construction quadratic_blocks_for(int n, std::int64_t mu);
/// (x1^2..x7^2, x1x7, x2x7, x3x7, x4x7).
Construction quadratic_seven();

/// (x1^d..xn^d, x1^{d-1}x2, ..., x1^{d-1}x_{n-1}), failing in degree 2d-2.
Construction corner_star(int n, int d);
/// (x1^d..x4^d, x1^{d-1}x2, x3^{d-1}x4), failing in degree 2d-3.
Construction two_corners(int d);
/// (x1^3..x5^3, x1^2x2, x1x2^2), plus x3x4x5 when `with_product`; failing in degree 4.
Construction cubic_five(bool with_product);
/// (x1^3..x6^3, x1x2x3), failing in degree 5.
Construction togliatti_cube();
/// (x1^4..x5^4, x1x2x3x4), failing by injectivity in degree 6.
Construction quartic_five();
/// (x1^d..x4^d, x1^3 x2^{d-3}), d >= 5, failing by surjectivity in degree 2d-3.
Construction split_aci_four(int d);
/// (x1^d..x5^d, x1^{ceil(d/2)} x2^{floor(d/2)}), d >= 5, failing in degree
/// floor((5d-5)/2)-1.
Construction split_aci_five(int d);

/// Follows the existence proof to produce a failing ideal with mu
/// generators. Throws DomainError when mu is not in sigma(n,d).
Construction construct_failing_ideal(int n, int d, std::int64_t mu);

/// Direct family access for the command line. `params` are the family's
/// integer parameters in documented order; see family_usage().
Construction construct_family(const std::string& tag, const std::vector<int>& params);
std::vector<std::string> family_tags();
std::string family_usage(const std::string& tag);

}  // namespace wlp
