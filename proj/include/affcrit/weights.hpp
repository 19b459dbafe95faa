#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "affcrit/rootsys.hpp"

namespace affcrit {

// lam - mu = c0 * alpha_0 + sum_i c_fin[i] * alpha_i with alpha_0 = -theta + delta.
struct OrderCertificate {
  std::int64_t c0 = 0;
  std::vector<std::int64_t> c_fin;

  friend bool operator==(const OrderCertificate&, const OrderCertificate&) = default;
};

// Certificate for mu <= lam, or nullopt when lam - mu is not a nonnegative
// integer combination of affine simple roots.
std::optional<OrderCertificate> leq(const RootSystem& rs, const AffineWeight& mu, const AffineWeight& lam);

std::int64_t height(const OrderCertificate& cert);

// lam minus the simple-root combination described by the certificate.
AffineWeight lower_by(const RootSystem& rs, const AffineWeight& lam, const OrderCertificate& cert);

// Lattice points of {c in N^vars : sum c <= depth}, by total then lexicographically.
std::vector<std::vector<int>> simplex_points(int vars, int depth);

// All mu <= lam with height(lam - mu) <= depth, lam first, heights nondecreasing.
std::vector<AffineWeight> enumerate_below(const RootSystem& rs, const AffineWeight& lam, int depth);

bool is_critical(const RootSystem& rs, const AffineWeight& lam);

inline const RationalVector& bar(const AffineWeight& lam) { return lam.finite; }

// Process-wide cap on enumeration depth. Defaults to 12, or to
// AFFCRIT_DEPTH_CAP when that variable holds a nonnegative integer.
int depth_cap();
void set_depth_cap(int cap);
// Throws PreconditionError if depth is negative or exceeds depth_cap().
void check_depth(int depth);

// Finite truncation of an open bounded set: every weight below some ceiling
// at height at most depth.
struct Window {
  std::vector<AffineWeight> ceilings;
  int depth = 0;

  static Window below(const AffineWeight& lam, int depth) { return {{lam}, depth}; }

  // Nonempty ceilings, one shared level, depth within the cap.
  void validate(const RootSystem& rs) const;
  bool contains(const RootSystem& rs, const AffineWeight& mu) const;
  // Deduplicated in order of first appearance, ceiling by ceiling.
  std::vector<AffineWeight> members(const RootSystem& rs) const;
};

}  // namespace affcrit
