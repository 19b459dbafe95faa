#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "affcrit/rational.hpp"

namespace affcrit {

// Simple type X_r. Valid ranks: A>=1, B/C>=2, D>=4, E 6..8, F 4, G 2.
struct CartanType {
  char family = 'A';
  int rank = 1;

  std::string name() const;
  // Accepts "A2", "g2", "E8"... Throws ParseError on bad syntax and
  // PreconditionError on a rank that is invalid for the family.
  static CartanType parse(std::string_view text);
  void validate() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

// Finite root in the simple-root basis.
struct FiniteRoot {
  std::vector<int> coords;

  int height() const;
  bool is_positive() const;
  FiniteRoot operator-() const;

  friend bool operator==(const FiniteRoot&, const FiniteRoot&) = default;
  friend auto operator<=>(const FiniteRoot&, const FiniteRoot&) = default;
};

// Real root alpha + n delta, or imaginary root n delta (n != 0).
struct AffineRoot {
  enum class Kind { Real, Imaginary };

  Kind kind = Kind::Real;
  FiniteRoot finite;  // empty coords for imaginary roots
  std::int64_t n = 0;

  static AffineRoot real(FiniteRoot alpha, std::int64_t n);
  static AffineRoot imaginary(std::int64_t n);

  bool is_real() const { return kind == Kind::Real; }
  // Positive affine roots: n > 0, or n == 0 and alpha positive.
  bool is_positive() const;

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

// Element of the affine weight space: finite part in the fundamental-weight
// basis, level (kappa coordinate) and delta coefficient.
struct AffineWeight {
  RationalVector finite;
  Rational level = 0;
  Rational delta = 0;

  static AffineWeight zero(int rank);
  static AffineWeight delta_weight(int rank);  // (0, 0, 1)
  static AffineWeight kappa(int rank);         // (0, 1, 0)

  AffineWeight& operator+=(const AffineWeight& o);
  AffineWeight& operator-=(const AffineWeight& o);
  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
  friend AffineWeight operator*(const Rational& s, AffineWeight a);
  AffineWeight operator-() const;

  // Shift by n * delta.
  AffineWeight shifted(const Rational& n) const;

  friend bool operator==(const AffineWeight& a, const AffineWeight& b);
  // Lexicographic on (finite, level, delta); only used for ordered containers.
  friend bool operator<(const AffineWeight& a, const AffineWeight& b);
};

class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }

  // a[i][j] = <alpha_j, alpha_i^vee>.
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  // Minimal integer symmetrizers, proportional to squared root lengths.
  const std::vector<int>& d_values() const { return d_; }
  // Ordered by height, then lexicographically.
  const std::vector<FiniteRoot>& positive_roots() const { return positive_; }
  // Positive roots followed by their negatives.
  std::vector<FiniteRoot> all_roots() const;
  const FiniteRoot& highest_root() const { return positive_.back(); }
  int dual_coxeter() const { return dual_coxeter_; }
  // Height of delta in the affine simple-root basis: 1 + ht(theta).
  int delta_height() const { return highest_root().height() + 1; }

  bool is_root(const FiniteRoot& alpha) const;

  // Fundamental-weight coordinates of an element of the root lattice.
  RationalVector root_to_weight(const std::vector<int>& coords) const;
  RationalVector root_to_weight(const RationalVector& coords) const;
  // Simple-root coordinates of a finite weight.
  RationalVector weight_to_root(const RationalVector& finite) const;

  // Normalized invariant form on the finite weight space, (theta, theta) = 2.
  Rational finite_pairing(const RationalVector& x, const RationalVector& y) const;
  Rational root_norm2(const FiniteRoot& alpha) const;
  // <x, alpha^vee> for a finite weight.
  Rational coroot_pairing(const RationalVector& x, const FiniteRoot& alpha) const;

  Rational pairing(const AffineWeight& x, const AffineWeight& y) const;
  AffineWeight embed_root(const AffineRoot& beta) const;
  // 2 (x, beta) / (beta, beta); beta must be real.
  Rational coroot_pairing(const AffineWeight& x, const AffineRoot& beta) const;

  RationalVector rho_finite() const;
  // (rho_bar, h^vee, 0).
  AffineWeight rho() const;
  // alpha_0 = -theta + delta, then alpha_1..alpha_r, as embedded weights.
  std::vector<AffineWeight> affine_simple_roots() const;
  AffineWeight critical_weight(const RationalVector& finite, const Rational& delta = 0) const;

  void check_weight(const AffineWeight& x) const;

 private:
  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<FiniteRoot> positive_;
  int dual_coxeter_ = 0;
  std::vector<RationalVector> inverse_cartan_;
  std::vector<RationalVector> omega_gram_;  // (omega_i, omega_j)
  std::vector<Rational> simple_norm2_;      // (alpha_i, alpha_i)
};

RootSystem build_root_system(const CartanType& type);

}  // namespace affcrit
