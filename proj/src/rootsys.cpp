#include "affcrit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <utility>

#include "affcrit/errors.hpp"

namespace affcrit {

// ---------------------------------------------------------------------------
// CartanType

std::string CartanType::name() const { return std::string(1, family) + std::to_string(rank); }

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0])))
    throw ParseError("malformed Cartan type '" + std::string(text) + "'");
  CartanType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string_view("ABCDEFG").find(t.family) == std::string_view::npos)
    throw ParseError("unknown Cartan family in '" + std::string(text) + "'");
  std::string digits(text.substr(1));
  if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw ParseError("malformed Cartan type '" + std::string(text) + "'");
  t.rank = std::stoi(digits);
  t.validate();
  return t;
}

void CartanType::validate() const {
  auto fail = [this](const std::string& why) {
    throw PreconditionError("invalid Cartan type " + name() + ": " + why);
  };
  switch (family) {
    case 'A':
      if (rank < 1) fail("rank must be >= 1");
      break;
    case 'B':
    case 'C':
      if (rank < 2) fail("rank must be >= 2");
      break;
    case 'D':
      if (rank == 3) fail("D3 is A3; use A3");
      if (rank < 4) fail("D2 is not simple; rank must be >= 4");
      break;
    case 'E':
      if (rank < 6 || rank > 8) fail("rank must be 6, 7 or 8");
      break;
    case 'F':
      if (rank != 4) fail("rank must be 4");
      break;
    case 'G':
      if (rank != 2) fail("rank must be 2");
      break;
    default:
      fail("unknown family");
  }
}

// ---------------------------------------------------------------------------
// Roots and weights

int FiniteRoot::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool FiniteRoot::is_positive() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; }) &&
         std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
}

FiniteRoot FiniteRoot::operator-() const {
  FiniteRoot r{coords};
  for (auto& c : r.coords) c = -c;
  return r;
}

AffineRoot AffineRoot::real(FiniteRoot alpha, std::int64_t n) { return {Kind::Real, std::move(alpha), n}; }

AffineRoot AffineRoot::imaginary(std::int64_t n) {
  if (n == 0) throw PreconditionError("imaginary root n*delta requires n != 0");
  return {Kind::Imaginary, {}, n};
}

bool AffineRoot::is_positive() const {
  if (n != 0) return n > 0;
  return is_real() && finite.is_positive();
}

AffineWeight AffineWeight::zero(int rank) { return {RationalVector(static_cast<std::size_t>(rank)), 0, 0}; }

AffineWeight AffineWeight::delta_weight(int rank) {
  auto w = zero(rank);
  w.delta = 1;
  return w;
}

AffineWeight AffineWeight::kappa(int rank) {
  auto w = zero(rank);
  w.level = 1;
  return w;
}

AffineWeight& AffineWeight::operator+=(const AffineWeight& o) {
  for (std::size_t i = 0; i < finite.size(); ++i) finite[i] += o.finite[i];
  level += o.level;
  delta += o.delta;
  return *this;
}

AffineWeight& AffineWeight::operator-=(const AffineWeight& o) {
  for (std::size_t i = 0; i < finite.size(); ++i) finite[i] -= o.finite[i];
  level -= o.level;
  delta -= o.delta;
  return *this;
}

AffineWeight operator*(const Rational& s, AffineWeight a) {
  for (auto& f : a.finite) f *= s;
  a.level *= s;
  a.delta *= s;
  return a;
}

AffineWeight AffineWeight::operator-() const { return Rational(-1) * *this; }

AffineWeight AffineWeight::shifted(const Rational& n) const {
  AffineWeight r = *this;
  r.delta += n;
  return r;
}

bool operator==(const AffineWeight& a, const AffineWeight& b) {
  return a.finite == b.finite && a.level == b.level && a.delta == b.delta;
}

bool operator<(const AffineWeight& a, const AffineWeight& b) {
  if (a.finite != b.finite)
    return std::lexicographical_compare(a.finite.begin(), a.finite.end(), b.finite.begin(), b.finite.end());
  if (a.level != b.level) return a.level < b.level;
  return a.delta < b.delta;
}

// ---------------------------------------------------------------------------
// Cartan data

namespace {

struct DynkinData {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> d;
};

DynkinData dynkin(const CartanType& t) {
  const int r = t.rank;
  DynkinData g;
  g.d.assign(static_cast<std::size_t>(r), 1);
  auto chain = [&](int n) {
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case 'A':
      chain(r);
      break;
    case 'B':
      chain(r);
      std::fill(g.d.begin(), g.d.end() - 1, 2);
      break;
    case 'C':
      chain(r);
      g.d.back() = 2;
      break;
    case 'D':
      chain(r - 1);
      g.edges.emplace_back(r - 3, r - 1);
      break;
    case 'E':
      // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
      g.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < r; ++i) g.edges.emplace_back(i, i + 1);
      break;
    case 'F':
      chain(4);
      g.d = {2, 2, 1, 1};
      break;
    case 'G':
      chain(2);
      g.d = {1, 3};
      break;
  }
  return g;
}

std::vector<RationalVector> invert(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  std::vector<RationalVector> m(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Cartan matrix");
    std::swap(m[col], m[piv]);
    Rational inv = 1 / m[col][col];
    for (auto& v : m[col]) v *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational f = m[row][col];
      for (std::size_t k = 0; k < 2 * n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  std::vector<RationalVector> inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace

RootSystem::RootSystem(CartanType type) : type_(type) {
  type_.validate();
  const int r = type_.rank;
  const auto n = static_cast<std::size_t>(r);
  DynkinData g = dynkin(type_);
  d_ = g.d;

  // Unnormalized symmetric form: (alpha_i, alpha_i) = 2 d_i, and a bond
  // between i and j has (alpha_i, alpha_j) = -max(d_i, d_j).
  std::vector<std::vector<int>> sym(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) sym[i][i] = 2 * d_[i];
  for (auto [i, j] : g.edges) {
    int v = -std::max(d_[i], d_[j]);
    sym[i][j] = sym[j][i] = v;
  }
  cartan_.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cartan_[i][j] = 2 * sym[i][j] / sym[i][i];

  const int dmax = *std::max_element(d_.begin(), d_.end());
  simple_norm2_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    simple_norm2_[i] = Rational(2 * d_[i], dmax);
    simple_norm2_[i].canonicalize();
  }

  inverse_cartan_ = invert(cartan_);
  omega_gram_.assign(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) omega_gram_[i][j] = inverse_cartan_[i][j] * simple_norm2_[i] / 2;

  // Positive roots layer by layer. For a positive root beta != alpha_i the
  // alpha_i-string through beta is beta - p alpha_i, ..., beta + q alpha_i
  // with p - q = <beta, alpha_i^vee>.
  std::set<FiniteRoot> known;
  std::vector<FiniteRoot> layer;
  for (std::size_t i = 0; i < n; ++i) {
    FiniteRoot a{std::vector<int>(n, 0)};
    a.coords[i] = 1;
    layer.push_back(a);
    known.insert(a);
  }
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    positive_.insert(positive_.end(), layer.begin(), layer.end());
    std::set<FiniteRoot> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        FiniteRoot down = beta;
        while (true) {
          down.coords[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (std::size_t j = 0; j < n; ++j) pair += beta.coords[j] * cartan_[i][j];
        if (p - pair > 0) {
          FiniteRoot up = beta;
          up.coords[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }

  // h^vee = 1 + <rho_bar, theta^vee>, and theta^vee = theta since (theta, theta) = 2.
  Rational rt = coroot_pairing(rho_finite(), highest_root());
  dual_coxeter_ = static_cast<int>(to_int64(rt)) + 1;
}

RootSystem build_root_system(const CartanType& type) { return RootSystem(type); }

std::vector<FiniteRoot> RootSystem::all_roots() const {
  std::vector<FiniteRoot> out = positive_;
  for (const auto& a : positive_) out.push_back(-a);
  return out;
}

bool RootSystem::is_root(const FiniteRoot& alpha) const {
  if (alpha.coords.size() != static_cast<std::size_t>(rank())) return false;
  FiniteRoot pos = alpha.is_positive() ? alpha : -alpha;
  return std::binary_search(positive_.begin(), positive_.end(), pos, [](const FiniteRoot& a, const FiniteRoot& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a < b;
  });
}

RationalVector RootSystem::root_to_weight(const std::vector<int>& coords) const {
  RationalVector c(coords.begin(), coords.end());
  return root_to_weight(c);
}

RationalVector RootSystem::root_to_weight(const RationalVector& coords) const {
  const auto n = static_cast<std::size_t>(rank());
  RationalVector w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (cartan_[i][j] != 0) w[i] += cartan_[i][j] * coords[j];
  return w;
}

RationalVector RootSystem::weight_to_root(const RationalVector& finite) const {
  const auto n = static_cast<std::size_t>(rank());
  RationalVector c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i] += inverse_cartan_[i][j] * finite[j];
  return c;
}

Rational RootSystem::finite_pairing(const RationalVector& x, const RationalVector& y) const {
  const auto n = static_cast<std::size_t>(rank());
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) s += x[i] * omega_gram_[i][j] * y[j];
  }
  return s;
}

Rational RootSystem::root_norm2(const FiniteRoot& alpha) const {
  // (alpha_k, alpha_l) = a[k][l] (alpha_k, alpha_k) / 2
  const auto n = static_cast<std::size_t>(rank());
  Rational s = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      s += alpha.coords[k] * alpha.coords[l] * cartan_[k][l] * simple_norm2_[k] / 2;
  return s;
}

Rational RootSystem::coroot_pairing(const RationalVector& x, const FiniteRoot& alpha) const {
  // (omega_k, alpha_l) = delta_kl (alpha_l, alpha_l) / 2
  Rational s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * alpha.coords[k] * simple_norm2_[k] / 2;
  return 2 * s / root_norm2(alpha);
}

Rational RootSystem::pairing(const AffineWeight& x, const AffineWeight& y) const {
  return finite_pairing(x.finite, y.finite) + x.level * y.delta + x.delta * y.level;
}

AffineWeight RootSystem::embed_root(const AffineRoot& beta) const {
  AffineWeight w = AffineWeight::zero(rank());
  if (beta.is_real()) w.finite = root_to_weight(beta.finite.coords);
  w.delta = static_cast<long>(beta.n);
  return w;
}

Rational RootSystem::coroot_pairing(const AffineWeight& x, const AffineRoot& beta) const {
  if (!beta.is_real()) throw PreconditionError("imaginary roots have no coroot");
  // (x, alpha + n delta) = (x_bar, alpha) + n * level(x)
  Rational norm = root_norm2(beta.finite);
  Rational xa = coroot_pairing(x.finite, beta.finite) * norm / 2 + Rational(static_cast<long>(beta.n)) * x.level;
  return 2 * xa / norm;
}

RationalVector RootSystem::rho_finite() const { return RationalVector(static_cast<std::size_t>(rank()), Rational(1)); }

AffineWeight RootSystem::rho() const { return {rho_finite(), dual_coxeter_, 0}; }

std::vector<AffineWeight> RootSystem::affine_simple_roots() const {
  std::vector<AffineWeight> out;
  out.push_back(embed_root(AffineRoot::real(-highest_root(), 1)));
  for (std::size_t i = 0; i < static_cast<std::size_t>(rank()); ++i) {
    FiniteRoot a{std::vector<int>(static_cast<std::size_t>(rank()), 0)};
    a.coords[i] = 1;
    out.push_back(embed_root(AffineRoot::real(a, 0)));
  }
  return out;
}

AffineWeight RootSystem::critical_weight(const RationalVector& finite, const Rational& delta) const {
  AffineWeight w{finite, -dual_coxeter_, delta};
  check_weight(w);
  return w;
}

void RootSystem::check_weight(const AffineWeight& x) const {
  if (x.finite.size() != static_cast<std::size_t>(rank()))
    throw PreconditionError("weight has " + std::to_string(x.finite.size()) + " finite coordinates, type " +
                            type_.name() + " needs " + std::to_string(rank()));
}

}  // namespace affcrit
