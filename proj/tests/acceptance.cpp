#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "affcrit/blocks.hpp"
#include "affcrit/characters.hpp"
#include "affcrit/cli.hpp"
#include "affcrit/linkage.hpp"
#include "affcrit/weyl.hpp"
#include "support/oracles.hpp"

using namespace affcrit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Result {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

const RootSystem& a1() {
  static const RootSystem rs(CartanType::parse("A1"));
  return rs;
}

const RootSystem& a2() {
  static const RootSystem rs(CartanType::parse("A2"));
  return rs;
}

AffineWeight crit(const RootSystem& rs, std::vector<Rational> f) { return rs.critical_weight(f); }

std::vector<AffineWeight> samples(const RootSystem& rs, bool integral_only) {
  std::vector<AffineWeight> out;
  if (rs.rank() == 1) {
    for (int k : {0, 1, -1, -2, 2}) out.push_back(crit(rs, {k}));
    if (!integral_only)
      for (const auto& f : {Rational(1, 2), Rational(-1, 2), Rational(1, 3)}) out.push_back(crit(rs, {f}));
  } else {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {1, 1}}) out.push_back(crit(rs, {a, b}));
    if (!integral_only) {
      out.push_back(crit(rs, {Rational(1, 2), Rational(1, 2)}));
      out.push_back(crit(rs, {Rational(1, 2), 0}));
      out.push_back(crit(rs, {Rational(1, 3), Rational(2, 3)}));
    }
  }
  return out;
}

bool strictly_above(const RootSystem& rs, const AffineWeight& x, const AffineWeight& lam) {
  return x != lam && leq(rs, lam, x).has_value();
}

AffineWeight mod_delta(AffineWeight w) {
  w.delta = 0;
  return w;
}

Result q_p_inversion() {
  Result r;
  auto t0 = Clock::now();
  for (int rank = 1; rank <= 4; ++rank) {
    auto p = p_series(rank, 30), q = q_series(rank, 30);
    for (std::size_t n = 0; n <= 30; ++n) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k <= n; ++k) s += p[k] * q[n - k];
      r.require(s == (n == 0 ? 1 : 0), "rank " + std::to_string(rank) + " n " + std::to_string(n));
    }
  }
  double t = seconds_since(t0);
  r.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  if (r.ok) r.detail = "ranks 1-4, N=30, " + std::to_string(t) + " s";
  return r;
}

Result pentagonal() {
  Result r;
  auto q = q_series(1, 26);
  auto expanded = oracle::expand_euler_product(1, 26);
  r.require(q.values == expanded, "differs from expanded product");
  std::vector<std::int64_t> pattern(27, 0);
  for (auto [n, sign] : oracle::pentagonal_terms(26)) pattern[static_cast<std::size_t>(n)] = sign;
  r.require(q.values == pattern, "nonzero pattern differs from pentagonal numbers");
  if (r.ok) r.detail = "q(1,26) matches product and pentagonal indices";
  return r;
}

Result character_conversion() {
  Result r;
  auto t0 = Clock::now();
  const int depth = 6;
  int count = 0;
  for (const auto* rs : {&a1(), &a2()}) {
    std::vector<AffineWeight> lams;
    if (rs->rank() == 1) {
      for (const auto& f : {Rational(0), Rational(1), Rational(-1), Rational(1, 3)}) lams.push_back(crit(*rs, {f}));
    } else {
      lams = {crit(*rs, {0, 0}), crit(*rs, {1, 0}), crit(*rs, {0, -1}), crit(*rs, {Rational(1, 3), Rational(1, 2)})};
    }
    for (const auto& lam : lams) {
      auto verma = verma_character(*rs, lam, depth);
      auto restricted = restricted_verma_character(*rs, lam, depth);
      r.require(convolve_delta(*rs, p_series(rs->rank(), depth), restricted) == verma, "p * restricted != verma");
      r.require(convolve_delta(*rs, q_series(rs->rank(), depth), verma) == restricted, "q * verma != restricted");
      ++count;
    }
  }
  double t = seconds_since(t0);
  r.require(t < 10.0, "runtime " + std::to_string(t) + " s");
  if (r.ok) r.detail = std::to_string(count) + " weights, depth 6, " + std::to_string(t) + " s";
  return r;
}

Result oracle_equivalence() {
  Result r;
  const int depth = 5;
  std::size_t checked = 0;
  for (const auto* rs : {&a1(), &a2()}) {
    auto lam = samples(*rs, false).back();
    auto verma = verma_character(*rs, lam, depth);
    auto restricted = restricted_verma_character(*rs, lam, depth);
    for (const auto& mu : enumerate_below(*rs, lam, depth)) {
      auto nu = lam - mu;
      r.require(verma.coefficient(mu) == oracle::brute_force_root_partitions(*rs, nu, false, depth), "verma coefficient");
      r.require(restricted.coefficient(mu) == oracle::brute_force_root_partitions(*rs, nu, true, depth),
                "restricted coefficient");
      ++checked;
    }
  }
  if (r.ok) r.detail = std::to_string(checked) + " coefficient pairs, depth 5";
  return r;
}

Result linkage() {
  Result r;
  const int depth = 6;
  int count = 0;
  for (const auto* rs : {&a1(), &a2()}) {
    for (const auto& lam : samples(*rs, false)) {
      Window w = Window::below(lam, depth);
      auto kk = classical_class(*rs, lam, w).members;
      auto restricted = restricted_class(*rs, lam, w).members;
      std::set<AffineWeight> saturated;
      for (const auto& mu : restricted)
        for (int k = -depth; k <= depth; ++k) {
          auto x = mu.shifted(k);
          if (w.contains(*rs, x)) saturated.insert(x);
        }
      r.require(std::set<AffineWeight>(kk.begin(), kk.end()) == saturated, "KK closure != restricted + Z delta");
      std::set<AffineWeight> q_kk, q_res;
      for (const auto& mu : kk) q_kk.insert(mod_delta(mu));
      for (const auto& mu : restricted) q_res.insert(mod_delta(mu));
      r.require(q_kk == q_res, "delta quotients differ");
      ++count;
    }
  }
  if (r.ok) r.detail = std::to_string(count) + " weights, depth 6";
  return r;
}

Result alpha_up_trichotomy() {
  Result r;
  std::mt19937 rng(20261019);
  int found = 0, attempts = 0;
  while (found < 100 && attempts < 100000) {
    ++attempts;
    const auto& rs = (attempts % 2) ? a1() : a2();
    auto lam = oracle::random_critical_weight(rs, rng, 2, 4);
    auto report = classify_class(rs, lam);
    if (report.kind != ClassReport::Kind::Subgeneric) continue;
    const auto& alpha = *report.alpha;
    auto s0 = dot_reflect(rs, AffineRoot::real(alpha, 0), lam);
    auto s1 = dot_reflect(rs, AffineRoot::real(-alpha, 1), lam);
    bool a0 = strictly_above(rs, s0, lam), a1v = strictly_above(rs, s1, lam);
    r.require(a0 != a1v, "not exactly one reflection above lambda");
    auto up = alpha_up(rs, alpha, lam);
    r.require(strictly_above(rs, up, lam), "alpha_up not above lambda");
    r.require(up == (a0 ? s0 : s1), "alpha_up differs from the reflection above");
    r.require(alpha_down(rs, alpha, up) == lam, "alpha_down does not invert alpha_up");
    ++found;
  }
  r.require(found == 100, "only " + std::to_string(found) + " subgeneric samples");
  if (r.ok) r.detail = "100 subgeneric samples";
  return r;
}

Result classification() {
  Result r;
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto& rs = (i % 2) ? a1() : a2();
    auto lam = oracle::random_critical_weight(rs, rng, 2, 4);
    auto base = classify_class(rs, lam);
    std::uniform_int_distribution<int> shift(-3, 3);
    r.require(classify_class(rs, lam.shifted(shift(rng))) == base, "not invariant under delta shift");
    auto roots = finite_integral_roots(rs, bar(lam));
    for (const auto& alpha : roots) {
      auto moved = dot_reflect(rs, AffineRoot::real(alpha, shift(rng)), lam);
      r.require(classify_class(rs, moved) == base, "not invariant under integral dot reflection");
    }
  }
  auto zero = classify_class(a1(), crit(a1(), {0}));
  r.require(zero.kind == ClassReport::Kind::Subgeneric, "A1 zero not subgeneric");
  r.require(zero.finite_orbit == std::vector<RationalVector>{{-2}, {0}}, "A1 zero orbit != {0, -2 omega}");
  if (r.ok) r.detail = "100 samples; A1 orbit {0, -2 omega}";
  return r;
}

Result bggh() {
  Result r;
  const auto& rs = a1();
  AffineWeight lam{{0}, -2, 0};
  Window w = Window::below(lam, 6);
  auto m = bggh_matrix(rs, lam, w);
  const std::size_t n = m.labels.size();
  auto cls = restricted_class(rs, lam, w).members;
  r.require(std::set<AffineWeight>(m.labels.begin(), m.labels.end()) == std::set<AffineWeight>(cls.begin(), cls.end()),
            "labels differ from the restricted class");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto e = m.entries[i][j];
      if (i == j) r.require(e == 1, "diagonal entry != 1");
      else if (j == i + 1) r.require(e == 0 || e == 1, "superdiagonal entry not 0/1");
      else r.require(e == 0, "entry off the two diagonals");
    }
  // Column nu read from the flag of its projective cover.
  for (std::size_t j = 0; j < n; ++j) {
    auto flag = projective_flag(rs, m.labels[j]);
    std::vector<std::int64_t> column(n, 0);
    for (const auto& [mu, mult] : flag.flag)
      for (std::size_t i = 0; i < n; ++i)
        if (m.labels[i] == mu) column[i] += mult;
    for (std::size_t i = 0; i < n; ++i) r.require(m.entries[i][j] == column[i], "matrix and flag disagree");
  }
  auto simples = derived_simple_characters(rs, lam, w, 6);
  std::size_t coeffs = 0;
  for (const auto& s : simples)
    for (const auto& [mu, c] : s.character.support) {
      r.require(c >= 0, "negative simple coefficient");
      ++coeffs;
    }
  if (r.ok) r.detail = std::to_string(n) + " labels, " + std::to_string(coeffs) + " simple coefficients >= 0";
  return r;
}

Result refinement() {
  Result r;
  int count = 0;
  for (const auto* rs : {&a1(), &a2()})
    for (const auto& lam : samples(*rs, true))
      for (int d = 0; d <= 6; ++d) {
        r.require(refinement_check(*rs, lam, Window::below(lam, d)), "refinement fails");
        ++count;
      }
  if (r.ok) r.detail = std::to_string(count) + " (weight, depth) pairs";
  return r;
}

Result cli_determinism() {
  Result r;
  const std::vector<std::vector<std::string>> commands = {
      {"rootsys", "A2"},
      {"pairing", "--weight", "1,-2,0", "--with", "0,-2,1"},
      {"critical", "--weight", "0,-2,0"},
      {"integral-roots", "--weight", "1/2,-2,0", "--deform", "generic"},
      {"orbit", "--weight", "0,-2,0", "--depth", "4"},
      {"class", "--weight", "0,-2,0", "--depth", "4", "--mode", "restricted"},
      {"classify", "--type", "A2", "--weight", "1/2,1/2,-3,0"},
      {"refine-check", "--type", "A2", "--weight", "0,0,-3,0", "--depth", "3"},
      {"qcoeff", "--rank", "2", "--n", "10"},
      {"pcoeff", "--rank", "2", "--n", "10"},
      {"char", "verma", "--type", "A2", "--weight", "0,0,-3,0", "--depth", "3"},
      {"blocks", "--weight", "0,-2,0", "--depth", "4"},
      {"flag", "--weight", "0,-2,0"},
      {"bggh", "--weight", "0,-2,0", "--depth", "4"},
      {"simples", "--weight", "0,-2,0", "--depth", "4"},
  };
  std::set<std::string> covered;
  for (const auto& args : commands) {
    std::string first;
    for (int rep = 0; rep < 3; ++rep) {
      std::ostringstream out, err;
      int code = cli::run(args, out, err);
      r.require(code == 0, args[0] + " exited " + std::to_string(code));
      if (rep == 0) first = out.str();
      else r.require(out.str() == first, args[0] + " output differs between runs");
    }
    covered.insert(args[0]);
  }
  for (const auto& name : cli::subcommands())
    if (name != "help") r.require(covered.count(name) > 0, "subcommand " + name + " not exercised");
  if (r.ok) r.detail = std::to_string(commands.size()) + " subcommands, 3 runs each";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"q/p inversion", q_p_inversion},
      {"pentagonal pattern", pentagonal},
      {"character conversion", character_conversion},
      {"oracle equivalence", oracle_equivalence},
      {"linkage", linkage},
      {"alpha-up trichotomy", alpha_up_trichotomy},
      {"classification", classification},
      {"BGGH consistency", bggh},
      {"refinement", refinement},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result res;
    try {
      res = criteria[i].second();
    } catch (const std::exception& e) {
      res = {false, std::string("exception: ") + e.what()};
    }
    if (!res.ok) ++failures;
    std::printf("criterion %2zu %-22s %s  %s\n", i + 1, criteria[i].first.c_str(), res.ok ? "PASS" : "FAIL",
                res.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
