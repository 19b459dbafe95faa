#include "oracles.hpp"

#include <deque>
#include <functional>
#include <stdexcept>

namespace affcrit::oracle {

std::set<std::vector<int>> reflection_closure_positive_roots(const std::vector<std::vector<int>>& cartan) {
  const std::size_t n = cartan.size();
  std::set<std::vector<int>> all;
  std::deque<std::vector<int>> todo;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    all.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    auto b = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int pair = 0;
      for (std::size_t j = 0; j < n; ++j) pair += cartan[i][j] * b[j];
      auto img = b;
      img[i] -= pair;
      if (all.insert(img).second) todo.push_back(img);
    }
  }
  std::set<std::vector<int>> pos;
  for (const auto& r : all) {
    bool nonneg = true;
    for (int c : r) nonneg = nonneg && c >= 0;
    if (nonneg) pos.insert(r);
  }
  return pos;
}

std::int64_t coloured_partitions(int rank, int n) {
  // Parts are (size, colour) pairs enumerated in nonincreasing order.
  std::function<std::int64_t(int, int, int)> rec = [&](int remaining, int max_size, int max_colour) -> std::int64_t {
    if (remaining == 0) return 1;
    std::int64_t total = 0;
    for (int s = std::min(remaining, max_size); s >= 1; --s)
      for (int c = (s == max_size ? max_colour : rank - 1); c >= 0; --c) total += rec(remaining - s, s, c);
    return total;
  };
  return rec(n, n, rank - 1);
}

std::vector<std::int64_t> expand_euler_product(int rank, int n_max) {
  std::vector<std::int64_t> poly{1};
  for (int l = 1; l <= n_max; ++l) {
    for (int c = 0; c < rank; ++c) {
      std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(l), 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        next[i + static_cast<std::size_t>(l)] -= poly[i];
      }
      next.resize(std::min<std::size_t>(next.size(), static_cast<std::size_t>(n_max) + 1));
      poly = std::move(next);
    }
  }
  poly.resize(static_cast<std::size_t>(n_max) + 1, 0);
  return poly;
}

std::vector<std::pair<int, int>> pentagonal_terms(int n_max) {
  std::vector<std::pair<int, int>> out;
  for (int k = -n_max; k <= n_max; ++k) {
    int p = k * (3 * k - 1) / 2;
    if (p >= 0 && p <= n_max) out.emplace_back(p, k % 2 == 0 ? 1 : -1);
  }
  return out;
}

namespace {

// Simple-root coordinates (alpha_0 first) of a level-0 element of the root lattice.
std::vector<std::int64_t> affine_coords(const RootSystem& rs, const AffineWeight& nu) {
  auto cert = leq(rs, AffineWeight::zero(rs.rank()), nu);
  if (!cert) throw std::invalid_argument("not a nonnegative combination of simple roots");
  std::vector<std::int64_t> v{cert->c0};
  v.insert(v.end(), cert->c_fin.begin(), cert->c_fin.end());
  return v;
}

}  // namespace

std::int64_t brute_force_root_partitions(const RootSystem& rs, const AffineWeight& nu, bool real_only, int depth) {
  const auto target = affine_coords(rs, nu);
  std::int64_t target_height = 0;
  for (auto c : target) target_height += c;
  if (target_height > depth) throw std::invalid_argument("height exceeds depth");

  // Enumerate candidate positive roots of height <= depth from scratch.
  std::vector<std::vector<std::int64_t>> roots;
  for (int m = 0; m <= depth; ++m) {
    for (const auto& a : rs.all_roots()) {
      AffineRoot beta = AffineRoot::real(a, m);
      if (!beta.is_positive()) continue;
      auto v = affine_coords(rs, rs.embed_root(beta));
      std::int64_t h = 0;
      for (auto c : v) h += c;
      if (h <= depth) roots.push_back(v);
    }
    if (!real_only && m >= 1) {
      auto v = affine_coords(rs, rs.embed_root(AffineRoot::imaginary(m)));
      std::int64_t h = 0;
      for (auto c : v) h += c;
      if (h <= depth)
        for (int colour = 0; colour < rs.rank(); ++colour) roots.push_back(v);
    }
  }

  std::function<std::int64_t(std::size_t, std::vector<std::int64_t>&)> rec =
      [&](std::size_t idx, std::vector<std::int64_t>& rem) -> std::int64_t {
    bool zero = true;
    for (auto c : rem) zero = zero && c == 0;
    if (zero) return 1;
    if (idx == roots.size()) return 0;
    std::int64_t total = rec(idx + 1, rem);
    const auto& r = roots[idx];
    int taken = 0;
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; i < rem.size(); ++i) {
        rem[i] -= r[i];
        ok = ok && rem[i] >= 0;
      }
      ++taken;
      if (!ok) break;
      total += rec(idx + 1, rem);
    }
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] += taken * r[i];
    return total;
  };
  auto rem = target;
  return rec(0, rem);
}

std::set<AffineWeight> critical_dot_orbit(const RootSystem& rs, const AffineWeight& lam, const Window& w,
                                          int bound) {
  RationalVector rho_bar(static_cast<std::size_t>(rs.rank()), Rational(1));
  std::set<AffineWeight> seen{lam};
  std::deque<AffineWeight> todo{lam};
  while (!todo.empty()) {
    auto mu = todo.front();
    todo.pop_front();
    RationalVector shifted = mu.finite;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += rho_bar[i];
    for (const auto& a : rs.all_roots()) {
      Rational m = 2 * rs.finite_pairing(shifted, rs.root_to_weight(a.coords)) / rs.root_norm2(a);
      RationalVector aw = rs.root_to_weight(a.coords);
      for (int n = -bound; n <= bound; ++n) {
        AffineWeight img = mu;
        for (std::size_t i = 0; i < aw.size(); ++i) img.finite[i] -= m * aw[i];
        img.delta -= m * n;
        if (img == mu || !w.contains(rs, img)) continue;
        if (seen.insert(img).second) todo.push_back(img);
      }
    }
  }
  return seen;
}

AffineWeight random_critical_weight(const RootSystem& rs, std::mt19937& rng, int den, int span) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> dl(-2, 2);
  RationalVector f;
  for (int i = 0; i < rs.rank(); ++i) {
    Rational q(num(rng), den);
    q.canonicalize();
    f.push_back(q);
  }
  return {f, -rs.dual_coxeter(), dl(rng)};
}

}  // namespace affcrit::oracle
