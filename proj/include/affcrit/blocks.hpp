#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "affcrit/characters.hpp"
#include "affcrit/linkage.hpp"

namespace affcrit {

// Restricted Verma flag of a projective cover, submodule first.
struct FlagData {
  AffineWeight projective_of;
  std::vector<std::pair<AffineWeight, std::int64_t>> flag;
};

struct BlockClass {
  AffineWeight representative;
  std::vector<AffineWeight> members;  // sorted
};

struct BlockPartition {
  std::vector<BlockClass> classes;
  Window window;
};

// entries[i][j] = [restricted Verma(labels[i]) : L(labels[j])], read off the
// projective flags through reciprocity. Labels run from high to low along a
// linear extension of the order, so the matrix is upper unitriangular.
struct BgghMatrix {
  ClassReport::Kind kind = ClassReport::Kind::Generic;
  std::vector<AffineWeight> labels;
  std::vector<std::vector<std::int64_t>> entries;
  // Row i is incomplete when a composition factor of labels[i] lies outside the window.
  std::vector<bool> row_complete;
};

struct SimpleCharacter {
  AffineWeight weight;
  FormalCharacter character;  // depth == validity depth
  int validity_depth = 0;
};

// Partition of the window members into restricted classes. All ceilings critical.
BlockPartition block_partition(const RootSystem& rs, const Window& w);

// Generic: [(lam, 1)]. Subgeneric: [(alpha_up(alpha, lam), 1), (lam, 1)].
// Higher classes are refused.
FlagData projective_flag(const RootSystem& rs, const AffineWeight& lam);

BgghMatrix bggh_matrix(const RootSystem& rs, const AffineWeight& lam, const Window& w);

// Back-substitution of cha Dbar(mu) = sum_nu M[mu][nu] cha L(nu) from the
// bottom of the window upwards. Each result is exact up to its validity
// depth, which shrinks where a composition factor falls below the window.
std::vector<SimpleCharacter> derived_simple_characters(const RootSystem& rs, const AffineWeight& lam,
                                                       const Window& w, int depth);

// Linear functional that strictly increases along the order: minus the
// (possibly fractional or negative) height of ref - mu.
Rational order_potential(const RootSystem& rs, const AffineWeight& ref, const AffineWeight& mu);

}  // namespace affcrit
