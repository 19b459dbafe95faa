#include "affcrit/characters.hpp"

#include <unordered_map>

#include "affcrit/errors.hpp"

namespace affcrit {

namespace {

std::uint64_t pack(const std::vector<int>& c) {
  std::uint64_t key = 0;
  for (int v : c) key = (key << 7) | static_cast<std::uint64_t>(v);
  return key;
}

FormalCharacter root_product(const RootSystem& rs, const AffineWeight& lam, int depth, bool real_only) {
  rs.check_weight(lam);
  check_depth(depth);
  const int vars = rs.rank() + 1;
  if (vars * 7 > 64 || depth > 127) throw PreconditionError("depth or rank too large for coefficient indexing");

  const auto points = simplex_points(vars, depth);
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) index.emplace(pack(points[i]), i);

  std::vector<std::int64_t> f(points.size(), 0);
  f[0] = 1;
  std::vector<int> lower(static_cast<std::size_t>(vars));
  for (const auto& v : positive_root_vectors(rs, depth, real_only)) {
    // multiply by 1 / (1 - x^v); points are ordered by height so lower
    // entries are already updated within this pass
    for (std::size_t i = 0; i < points.size(); ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < lower.size(); ++j) {
        lower[j] = points[i][j] - v[j];
        if (lower[j] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const std::int64_t below = f[index.at(pack(lower))];
      if (below != 0) f[i] = checked_add(f[i], below);
    }
  }

  FormalCharacter ch{lam, depth, {}};
  const auto simple = rs.affine_simple_roots();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (f[i] == 0) continue;
    AffineWeight mu = lam;
    for (std::size_t j = 0; j < points[i].size(); ++j)
      if (points[i][j] != 0) mu -= Rational(points[i][j]) * simple[j];
    ch.support.emplace(std::move(mu), f[i]);
  }
  return ch;
}

}  // namespace

std::int64_t FormalCharacter::coefficient(const AffineWeight& mu) const {
  auto it = support.find(mu);
  return it == support.end() ? 0 : it->second;
}

CoeffSeries p_series(int rank, int n_max) {
  if (rank < 1 || n_max < 0) throw PreconditionError("p_series needs rank >= 1 and N >= 0");
  CoeffSeries s{std::vector<std::int64_t>(static_cast<std::size_t>(n_max) + 1, 0)};
  s.values[0] = 1;
  for (int l = 1; l <= n_max; ++l)
    for (int c = 0; c < rank; ++c)
      for (int n = l; n <= n_max; ++n) s.values[n] = checked_add(s.values[n], s.values[n - l]);
  return s;
}

CoeffSeries q_series(int rank, int n_max) {
  if (rank < 1 || n_max < 0) throw PreconditionError("q_series needs rank >= 1 and N >= 0");
  CoeffSeries s{std::vector<std::int64_t>(static_cast<std::size_t>(n_max) + 1, 0)};
  s.values[0] = 1;
  for (int l = 1; l <= n_max; ++l)
    for (int c = 0; c < rank; ++c)
      for (int n = n_max; n >= l; --n) s.values[n] = checked_add(s.values[n], -s.values[n - l]);
  return s;
}

std::vector<std::vector<int>> positive_root_vectors(const RootSystem& rs, int depth, bool real_only) {
  const auto r = static_cast<std::size_t>(rs.rank());
  const auto& theta = rs.highest_root().coords;
  const int h = rs.delta_height();
  std::vector<std::vector<int>> out;
  // alpha + m delta = m alpha_0 + (alpha + m theta)
  auto push_real = [&](const FiniteRoot& alpha, int m) {
    if (alpha.height() + m * h > depth) return;
    std::vector<int> v(r + 1);
    v[0] = m;
    for (std::size_t i = 0; i < r; ++i) v[i + 1] = alpha.coords[i] + m * theta[i];
    out.push_back(std::move(v));
  };
  for (const auto& a : rs.positive_roots()) push_real(a, 0);
  for (int m = 1; m * h - rs.highest_root().height() <= depth; ++m) {
    for (const auto& a : rs.positive_roots()) {
      push_real(a, m);
      push_real(-a, m);
    }
    if (!real_only && m * h <= depth) {
      std::vector<int> v(r + 1);
      v[0] = m;
      for (std::size_t i = 0; i < r; ++i) v[i + 1] = m * theta[i];
      for (int colour = 0; colour < rs.rank(); ++colour) out.push_back(v);
    }
  }
  return out;
}

FormalCharacter verma_character(const RootSystem& rs, const AffineWeight& lam, int depth) {
  return root_product(rs, lam, depth, false);
}

FormalCharacter restricted_verma_character(const RootSystem& rs, const AffineWeight& lam, int depth) {
  rs.check_weight(lam);
  if (!is_critical(rs, lam)) throw PreconditionError("restricted Verma character needs a critical weight");
  return root_product(rs, lam, depth, true);
}

std::int64_t support_height(const RootSystem& rs, const FormalCharacter& ch, const AffineWeight& mu) {
  auto cert = leq(rs, mu, ch.anchor);
  if (!cert) throw PreconditionError("weight is not below the character anchor");
  return height(*cert);
}

FormalCharacter convolve_delta(const RootSystem& rs, const CoeffSeries& series, const FormalCharacter& ch) {
  const int h = rs.delta_height();
  const std::size_t needed = static_cast<std::size_t>(ch.depth / h) + 1;
  if (series.size() < needed)
    throw PreconditionError("series has " + std::to_string(series.size()) + " terms, depth " +
                            std::to_string(ch.depth) + " needs " + std::to_string(needed));
  std::map<AffineWeight, std::int64_t> acc;
  for (const auto& [nu, c] : ch.support) {
    const std::int64_t base = support_height(rs, ch, nu);
    for (std::int64_t n = 0; base + n * h <= ch.depth; ++n) {
      const std::int64_t s = series[static_cast<std::size_t>(n)];
      if (s == 0) continue;
      auto& slot = acc[nu.shifted(-n)];
      slot = checked_add(slot, checked_mul(s, c));
    }
  }
  FormalCharacter out{ch.anchor, ch.depth, {}};
  for (auto& [mu, c] : acc)
    if (c != 0) out.support.emplace(mu, c);
  return out;
}

void accumulate(const RootSystem& rs, FormalCharacter& into, const FormalCharacter& term, std::int64_t scale) {
  for (const auto& [mu, c] : term.support) {
    auto cert = leq(rs, mu, into.anchor);
    if (!cert || height(*cert) > into.depth) continue;
    auto& slot = into.support[mu];
    slot = checked_add(slot, checked_mul(scale, c));
    if (slot == 0) into.support.erase(mu);
  }
}

FormalCharacter truncate(const RootSystem& rs, const FormalCharacter& ch, int depth) {
  FormalCharacter out{ch.anchor, std::min(depth, ch.depth), {}};
  for (const auto& [mu, c] : ch.support)
    if (support_height(rs, ch, mu) <= out.depth) out.support.emplace(mu, c);
  return out;
}

}  // namespace affcrit
