#include "affcrit/weights.hpp"

#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "affcrit/errors.hpp"

namespace affcrit {

namespace {

constexpr int kDefaultDepthCap = 12;

int initial_depth_cap() {
  if (const char* env = std::getenv("AFFCRIT_DEPTH_CAP")) {
    try {
      std::size_t used = 0;
      int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultDepthCap;
}

std::atomic<int>& cap_storage() {
  static std::atomic<int> cap{initial_depth_cap()};
  return cap;
}

void simplex_rec(int vars, int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == vars - 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    cur.push_back(c);
    simplex_rec(vars, remaining - c, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::optional<OrderCertificate> leq(const RootSystem& rs, const AffineWeight& mu, const AffineWeight& lam) {
  rs.check_weight(mu);
  rs.check_weight(lam);
  if (mu.level != lam.level) return std::nullopt;
  AffineWeight diff = lam - mu;
  if (!is_integer(diff.delta) || diff.delta < 0) return std::nullopt;
  OrderCertificate cert;
  cert.c0 = to_int64(diff.delta);
  // finite(lam - mu) = -c0 theta + sum c_i alpha_i
  RationalVector coords = rs.weight_to_root(diff.finite);
  const auto& theta = rs.highest_root().coords;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Rational c = coords[i] + Rational(cert.c0) * theta[i];
    if (!is_integer(c) || c < 0) return std::nullopt;
    cert.c_fin.push_back(to_int64(c));
  }
  return cert;
}

std::int64_t height(const OrderCertificate& cert) {
  return std::accumulate(cert.c_fin.begin(), cert.c_fin.end(), cert.c0);
}

AffineWeight lower_by(const RootSystem& rs, const AffineWeight& lam, const OrderCertificate& cert) {
  AffineWeight mu = lam;
  const auto simple = rs.affine_simple_roots();
  mu -= Rational(cert.c0) * simple[0];
  for (std::size_t i = 0; i < cert.c_fin.size(); ++i)
    if (cert.c_fin[i] != 0) mu -= Rational(cert.c_fin[i]) * simple[i + 1];
  return mu;
}

std::vector<std::vector<int>> simplex_points(int vars, int depth) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (int total = 0; total <= depth; ++total) simplex_rec(vars, total, cur, out);
  return out;
}

std::vector<AffineWeight> enumerate_below(const RootSystem& rs, const AffineWeight& lam, int depth) {
  rs.check_weight(lam);
  check_depth(depth);
  const auto simple = rs.affine_simple_roots();
  std::vector<AffineWeight> out;
  for (const auto& c : simplex_points(rs.rank() + 1, depth)) {
    AffineWeight mu = lam;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) mu -= Rational(c[i]) * simple[i];
    out.push_back(std::move(mu));
  }
  return out;
}

bool is_critical(const RootSystem& rs, const AffineWeight& lam) {
  return rs.pairing(lam + rs.rho(), AffineWeight::delta_weight(rs.rank())) == 0;
}

int depth_cap() { return cap_storage().load(); }

void set_depth_cap(int cap) { cap_storage().store(cap); }

void check_depth(int depth) {
  if (depth < 0) throw PreconditionError("depth must be nonnegative");
  if (depth > depth_cap())
    throw PreconditionError("depth " + std::to_string(depth) + " exceeds the safety cap " +
                            std::to_string(depth_cap()));
}

void Window::validate(const RootSystem& rs) const {
  if (ceilings.empty()) throw PreconditionError("window needs at least one ceiling");
  check_depth(depth);
  for (const auto& c : ceilings) {
    rs.check_weight(c);
    if (c.level != ceilings.front().level) throw PreconditionError("window ceilings must share one level");
  }
}

bool Window::contains(const RootSystem& rs, const AffineWeight& mu) const {
  for (const auto& c : ceilings) {
    auto cert = leq(rs, mu, c);
    if (cert && height(*cert) <= depth) return true;
  }
  return false;
}

std::vector<AffineWeight> Window::members(const RootSystem& rs) const {
  validate(rs);
  std::vector<AffineWeight> out;
  std::set<AffineWeight> seen;
  for (const auto& c : ceilings)
    for (auto& mu : enumerate_below(rs, c, depth))
      if (seen.insert(mu).second) out.push_back(std::move(mu));
  return out;
}

}  // namespace affcrit
