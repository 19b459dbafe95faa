#include "affcrit/linkage.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "affcrit/errors.hpp"

namespace affcrit {

namespace {

void require_critical(const RootSystem& rs, const AffineWeight& lam) {
  rs.check_weight(lam);
  if (!is_critical(rs, lam)) throw PreconditionError("weight is not critical (level must be -h^vee)");
}

void require_member(const RootSystem& rs, const AffineWeight& lam, const Window& w) {
  w.validate(rs);
  if (!w.contains(rs, lam)) throw PreconditionError("weight is not in the window");
}

}  // namespace

std::vector<FiniteRoot> positive_only(const std::vector<FiniteRoot>& roots) {
  std::vector<FiniteRoot> out;
  std::copy_if(roots.begin(), roots.end(), std::back_inserter(out), [](const auto& a) { return a.is_positive(); });
  return out;
}

std::vector<KKMove> kk_moves(const RootSystem& rs, const AffineWeight& lam, const Window& w) {
  require_member(rs, lam, w);
  const AffineWeight shifted = lam + rs.rho();
  std::vector<KKMove> moves;
  std::set<AffineWeight> targets;
  auto consider = [&](const AffineRoot& beta, std::int64_t n) {
    AffineWeight t = lam - Rational(static_cast<long>(n)) * rs.embed_root(beta);
    if (!w.contains(rs, t) || !targets.insert(t).second) return;
    moves.push_back({beta, n, std::move(t)});
  };
  const std::int64_t bound = w.depth;
  for (std::int64_t m = 0; m <= bound; ++m) {
    for (const auto& a : rs.positive_roots()) {
      for (const auto& alpha : {a, -a}) {
        if (m == 0 && !alpha.is_positive()) continue;
        AffineRoot beta = AffineRoot::real(alpha, m);
        Rational n = rs.coroot_pairing(shifted, beta);
        if (n == 0 || !is_integer(n)) continue;
        consider(beta, to_int64(n));
      }
    }
  }
  if (is_critical(rs, lam)) {
    for (std::int64_t k = 1; k <= bound; ++k) {
      consider(AffineRoot::imaginary(1), k);
      consider(AffineRoot::imaginary(1), -k);
    }
  }
  return moves;
}

OrbitResult classical_class(const RootSystem& rs, const AffineWeight& lam, const Window& w) {
  require_member(rs, lam, w);
  std::set<AffineWeight> seen{lam};
  std::deque<AffineWeight> frontier{lam};
  OrbitResult res;
  while (!frontier.empty()) {
    AffineWeight mu = std::move(frontier.front());
    frontier.pop_front();
    for (auto& mv : kk_moves(rs, mu, w)) {
      if (seen.insert(mv.target).second) {
        res.generators_used.push_back(mv.beta);
        frontier.push_back(std::move(mv.target));
      }
    }
  }
  res.members.assign(seen.begin(), seen.end());
  // Every class of an affine weight is infinite; inside a finite window it is always clipped.
  res.truncated = true;
  return res;
}

OrbitResult restricted_class(const RootSystem& rs, const AffineWeight& lam, const Window& w) {
  require_critical(rs, lam);
  require_member(rs, lam, w);
  auto alphas = positive_only(finite_integral_roots(rs, bar(lam)));
  return orbit_dot(rs, lam, shifted_generators(alphas, w.depth), w);
}

IntegralRootDescription deformed_integral_roots(const RootSystem& rs, const AffineWeight& lam,
                                                const DeformationSpec& d) {
  IntegralRootDescription full = integral_roots(rs, lam);
  switch (d.kind) {
    case DeformationSpec::Kind::Closed:
      return full;
    case DeformationSpec::Kind::Generic:
      full.entries.clear();
      return full;
    case DeformationSpec::Kind::Subgeneric: {
      if (!rs.is_root(d.alpha) || !d.alpha.is_positive())
        throw PreconditionError("subgeneric deformation needs a positive finite root");
      const FiniteRoot neg = -d.alpha;
      std::erase_if(full.entries, [&](const IntegralRootEntry& e) { return e.alpha != d.alpha && e.alpha != neg; });
      return full;
    }
  }
  return full;
}

RationalVector finite_dot_reflect(const RootSystem& rs, const FiniteRoot& alpha, const RationalVector& x) {
  RationalVector shifted = x;
  for (auto& v : shifted) v += 1;
  Rational m = rs.coroot_pairing(shifted, alpha);
  RationalVector a = rs.root_to_weight(alpha.coords);
  RationalVector out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= m * a[i];
  return out;
}

ClassReport classify_class(const RootSystem& rs, const AffineWeight& lam) {
  require_critical(rs, lam);
  ClassReport rep;
  rep.integral_finite = finite_integral_roots(rs, bar(lam));
  const auto alphas = positive_only(rep.integral_finite);
  std::set<RationalVector> seen{bar(lam)};
  std::deque<RationalVector> frontier{bar(lam)};
  while (!frontier.empty()) {
    RationalVector x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& a : alphas) {
      RationalVector y = finite_dot_reflect(rs, a, x);
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  rep.finite_orbit.assign(seen.begin(), seen.end());
  if (rep.orbit_size() == 1) {
    rep.kind = ClassReport::Kind::Generic;
  } else if (rep.orbit_size() == 2) {
    rep.kind = ClassReport::Kind::Subgeneric;
    for (const auto& a : alphas)
      if (finite_dot_reflect(rs, a, bar(lam)) != bar(lam)) {
        rep.alpha = a;
        break;
      }
  } else {
    rep.kind = ClassReport::Kind::Higher;
  }
  return rep;
}

bool refinement_check(const RootSystem& rs, const AffineWeight& lam, const Window& w) {
  require_critical(rs, lam);
  require_member(rs, lam, w);
  const auto alphas = positive_only(finite_integral_roots(rs, bar(lam)));
  std::set<AffineWeight> closure{lam};
  std::deque<AffineWeight> frontier{lam};
  while (!frontier.empty()) {
    AffineWeight mu = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& a : alphas) {
      for (auto& nu : orbit_dot(rs, mu, shifted_generators({a}, w.depth), w).members)
        if (closure.insert(nu).second) frontier.push_back(std::move(nu));
    }
  }
  const auto full = restricted_class(rs, lam, w).members;
  return std::equal(closure.begin(), closure.end(), full.begin(), full.end());
}

}  // namespace affcrit
