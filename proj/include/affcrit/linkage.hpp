#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "affcrit/weyl.hpp"

namespace affcrit {

// One Kac-Kazhdan step: 2 (lam + rho, beta) = n (beta, beta), target = lam - n beta.
struct KKMove {
  AffineRoot beta;
  std::int64_t n = 0;
  AffineWeight target;
};

// The three deformation regimes: residue field (full integrality), quotient
// field (no real root survives) and the height-one localization at alpha^vee.
struct DeformationSpec {
  enum class Kind { Closed, Generic, Subgeneric };
  Kind kind = Kind::Closed;
  FiniteRoot alpha;  // Subgeneric only; positive

  static DeformationSpec closed() { return {}; }
  static DeformationSpec generic() { return {Kind::Generic, {}}; }
  static DeformationSpec subgeneric(FiniteRoot a) { return {Kind::Subgeneric, std::move(a)}; }
};

struct ClassReport {
  enum class Kind { Generic, Subgeneric, Higher };
  Kind kind = Kind::Generic;
  std::optional<FiniteRoot> alpha;          // Subgeneric only
  std::vector<RationalVector> finite_orbit;  // sorted
  std::vector<FiniteRoot> integral_finite;

  std::size_t orbit_size() const { return finite_orbit.size(); }

  friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

// Moves with target in the window. Real roots alpha + m delta are taken
// positive with |m| <= depth, so both signs of n occur; imaginary moves use
// beta = delta and appear only at the critical level.
std::vector<KKMove> kk_moves(const RootSystem& rs, const AffineWeight& lam, const Window& w);

// Closure of {lam} under Kac-Kazhdan moves inside the window.
OrbitResult classical_class(const RootSystem& rs, const AffineWeight& lam, const Window& w);

// Dot-orbit of the integral affine Weyl group inside the window (critical only).
OrbitResult restricted_class(const RootSystem& rs, const AffineWeight& lam, const Window& w);

IntegralRootDescription deformed_integral_roots(const RootSystem& rs, const AffineWeight& lam,
                                                const DeformationSpec& d);

// Exact, window independent: classifies by the finite dot-orbit of lam_bar
// under the finite integral Weyl group.
ClassReport classify_class(const RootSystem& rs, const AffineWeight& lam);

// Closure under the rank-one groups W_alpha (alpha positive integral) agrees
// with restricted_class inside the window.
bool refinement_check(const RootSystem& rs, const AffineWeight& lam, const Window& w);

// Finite dot action s_alpha . x = x - <x + rho_bar, alpha^vee> alpha.
RationalVector finite_dot_reflect(const RootSystem& rs, const FiniteRoot& alpha, const RationalVector& x);

std::vector<FiniteRoot> positive_only(const std::vector<FiniteRoot>& roots);

}  // namespace affcrit
