#pragma once

#include <cstdint>
#include <vector>

#include "affcrit/rootsys.hpp"
#include "affcrit/weights.hpp"

namespace affcrit {

// Solutions n of the integrality condition for alpha + n delta.
struct NConstraint {
  enum class Kind { AllIntegers, Residue };
  Kind kind = Kind::AllIntegers;
  // Residue: n == residue (mod modulus), 0 <= residue < modulus.
  std::int64_t residue = 0;
  std::int64_t modulus = 1;

  friend bool operator==(const NConstraint&, const NConstraint&) = default;
};

struct IntegralRootEntry {
  FiniteRoot alpha;
  NConstraint n;

  friend bool operator==(const IntegralRootEntry&, const IntegralRootEntry&) = default;
};

struct IntegralRootDescription {
  bool critical = false;
  std::vector<IntegralRootEntry> entries;  // in RootSystem::all_roots() order
  bool imaginary_integral = false;

  friend bool operator==(const IntegralRootDescription&, const IntegralRootDescription&) = default;
};

struct OrbitResult {
  std::vector<AffineWeight> members;  // sorted
  std::vector<AffineRoot> generators_used;
  bool truncated = false;
};

// s_beta(x) = x - <x, beta^vee> beta.
AffineWeight reflect(const RootSystem& rs, const AffineRoot& beta, const AffineWeight& x);
// s_beta . lam = s_beta(lam + rho) - rho.
AffineWeight dot_reflect(const RootSystem& rs, const AffineRoot& beta, const AffineWeight& lam);

IntegralRootDescription integral_roots(const RootSystem& rs, const AffineWeight& lam);
// {alpha in R : <lam_bar + rho_bar, alpha^vee> in Z}, in all_roots() order.
std::vector<FiniteRoot> finite_integral_roots(const RootSystem& rs, const RationalVector& lam_bar);

// {alpha + n delta : alpha in alphas, |n| <= bound}.
std::vector<AffineRoot> shifted_generators(const std::vector<FiniteRoot>& alphas, std::int64_t bound);

// Closure of {lam} under dot reflections by gens, clipped to the window.
OrbitResult orbit_dot(const RootSystem& rs, const AffineWeight& lam, const std::vector<AffineRoot>& gens,
                      const Window& w);

// The element of {s_alpha.lam, s_{-alpha+delta}.lam} above lam. Needs a
// critical lam, a positive root alpha and s_alpha.lam != lam.
AffineWeight alpha_up(const RootSystem& rs, const FiniteRoot& alpha, const AffineWeight& lam);
// Inverse of alpha_up: the element of the same pair below lam.
AffineWeight alpha_down(const RootSystem& rs, const FiniteRoot& alpha, const AffineWeight& lam);

}  // namespace affcrit
