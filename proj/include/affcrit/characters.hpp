#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "affcrit/rootsys.hpp"
#include "affcrit/weights.hpp"

namespace affcrit {

// Window-truncated element of the completed group algebra: integer
// coefficients on weights mu <= anchor with height(anchor - mu) <= depth.
struct FormalCharacter {
  AffineWeight anchor;
  int depth = 0;
  std::map<AffineWeight, std::int64_t> support;  // nonzero coefficients only

  std::int64_t coefficient(const AffineWeight& mu) const;

  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;
};

struct CoeffSeries {
  std::vector<std::int64_t> values;  // indices 0..N

  std::int64_t operator[](std::size_t n) const { return values[n]; }
  std::size_t size() const { return values.size(); }

  friend bool operator==(const CoeffSeries&, const CoeffSeries&) = default;
};

// prod_{l>=1} (1 - x^l)^{-rank} up to x^N.
CoeffSeries p_series(int rank, int n_max);
// prod_{l>=1} (1 - x^l)^{rank} up to x^N.
CoeffSeries q_series(int rank, int n_max);

// e^lam prod over positive affine roots of (1 - e^{-beta})^{-mult beta};
// imaginary roots carry multiplicity rank.
FormalCharacter verma_character(const RootSystem& rs, const AffineWeight& lam, int depth);
// Same product over positive real roots only. Critical lam required.
FormalCharacter restricted_verma_character(const RootSystem& rs, const AffineWeight& lam, int depth);

// sum_n series[n] * (ch shifted by -n delta), truncated to ch's window.
FormalCharacter convolve_delta(const RootSystem& rs, const CoeffSeries& series, const FormalCharacter& ch);

// Adds scale * term onto into, dropping weights outside into's window.
void accumulate(const RootSystem& rs, FormalCharacter& into, const FormalCharacter& term, std::int64_t scale);

// Restriction of ch to a smaller depth.
FormalCharacter truncate(const RootSystem& rs, const FormalCharacter& ch, int depth);

// Height of anchor - mu; throws if mu is not below the anchor.
std::int64_t support_height(const RootSystem& rs, const FormalCharacter& ch, const AffineWeight& mu);

// Positive affine roots of height <= depth as simple-root coordinate vectors
// (alpha_0 first). Imaginary roots appear once per colour unless real_only.
std::vector<std::vector<int>> positive_root_vectors(const RootSystem& rs, int depth, bool real_only);

}  // namespace affcrit
