#include "affcrit/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "affcrit/errors.hpp"

namespace affcrit {

AffineWeight reflect(const RootSystem& rs, const AffineRoot& beta, const AffineWeight& x) {
  if (!beta.is_real()) throw PreconditionError("imaginary roots have no reflection");
  rs.check_weight(x);
  return x - rs.coroot_pairing(x, beta) * rs.embed_root(beta);
}

AffineWeight dot_reflect(const RootSystem& rs, const AffineRoot& beta, const AffineWeight& lam) {
  const AffineWeight rho = rs.rho();
  return reflect(rs, beta, lam + rho) - rho;
}

IntegralRootDescription integral_roots(const RootSystem& rs, const AffineWeight& lam) {
  rs.check_weight(lam);
  IntegralRootDescription d;
  d.critical = is_critical(rs, lam);
  d.imaginary_integral = d.critical;
  const AffineWeight shifted = lam + rs.rho();
  for (const auto& alpha : rs.all_roots()) {
    // 2 (lam + rho, alpha + n delta) / (alpha, alpha) = a + n s
    Rational a = rs.coroot_pairing(shifted.finite, alpha);
    Rational s = 2 * shifted.level / rs.root_norm2(alpha);
    if (s == 0) {
      if (is_integer(a)) d.entries.push_back({alpha, {}});
      continue;
    }
    // s = p/q in lowest terms; a + n p/q in Z  <=>  a q in Z and n p == -a q (mod q).
    mpz_class p = s.get_num(), q = s.get_den();
    Rational aq = a * Rational(q);
    if (!is_integer(aq)) continue;
    mpz_class target = -aq.get_num();
    mpz_class pinv;
    mpz_invert(pinv.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (q == 1) pinv = 0;
    mpz_class r = (target * pinv) % q;
    if (r < 0) r += q;
    NConstraint c;
    c.kind = NConstraint::Kind::Residue;
    c.residue = r.get_si();
    c.modulus = q.get_si();
    d.entries.push_back({alpha, c});
  }
  return d;
}

std::vector<FiniteRoot> finite_integral_roots(const RootSystem& rs, const RationalVector& lam_bar) {
  RationalVector shifted = lam_bar;
  for (auto& x : shifted) x += 1;  // rho_bar = sum of fundamental weights
  std::vector<FiniteRoot> out;
  for (const auto& alpha : rs.all_roots())
    if (is_integer(rs.coroot_pairing(shifted, alpha))) out.push_back(alpha);
  return out;
}

std::vector<AffineRoot> shifted_generators(const std::vector<FiniteRoot>& alphas, std::int64_t bound) {
  std::vector<AffineRoot> gens;
  for (const auto& a : alphas)
    for (std::int64_t n = -bound; n <= bound; ++n) gens.push_back(AffineRoot::real(a, n));
  return gens;
}

OrbitResult orbit_dot(const RootSystem& rs, const AffineWeight& lam, const std::vector<AffineRoot>& gens,
                      const Window& w) {
  w.validate(rs);
  if (!w.contains(rs, lam)) throw PreconditionError("weight is not in the window");
  OrbitResult res;
  std::set<AffineWeight> seen{lam};
  std::deque<AffineWeight> frontier{lam};
  std::vector<bool> used(gens.size(), false);
  while (!frontier.empty()) {
    AffineWeight mu = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      AffineWeight img = dot_reflect(rs, gens[g], mu);
      if (img == mu) continue;
      if (!w.contains(rs, img)) {
        res.truncated = true;
        continue;
      }
      used[g] = true;
      if (seen.insert(img).second) frontier.push_back(std::move(img));
    }
  }
  res.members.assign(seen.begin(), seen.end());
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (used[g]) res.generators_used.push_back(gens[g]);
  return res;
}

namespace {

std::pair<AffineWeight, AffineWeight> alpha_pair(const RootSystem& rs, const FiniteRoot& alpha,
                                                 const AffineWeight& lam) {
  if (!rs.is_root(alpha) || !alpha.is_positive()) throw PreconditionError("alpha must be a positive finite root");
  if (!is_critical(rs, lam)) throw PreconditionError("weight is not critical");
  AffineWeight s_alpha = dot_reflect(rs, AffineRoot::real(alpha, 0), lam);
  if (s_alpha == lam) throw PreconditionError("weight is fixed by s_alpha");
  return {std::move(s_alpha), dot_reflect(rs, AffineRoot::real(-alpha, 1), lam)};
}

}  // namespace

AffineWeight alpha_up(const RootSystem& rs, const FiniteRoot& alpha, const AffineWeight& lam) {
  auto [a, b] = alpha_pair(rs, alpha, lam);
  if (leq(rs, lam, a)) return a;
  if (leq(rs, lam, b)) return b;
  throw PreconditionError("alpha is not integral for the weight; neither reflection is comparable");
}

AffineWeight alpha_down(const RootSystem& rs, const FiniteRoot& alpha, const AffineWeight& lam) {
  auto [a, b] = alpha_pair(rs, alpha, lam);
  if (leq(rs, a, lam)) return a;
  if (leq(rs, b, lam)) return b;
  throw PreconditionError("alpha is not integral for the weight; neither reflection is comparable");
}

}  // namespace affcrit
