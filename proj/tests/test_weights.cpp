#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "affcrit/errors.hpp"
#include "affcrit/weights.hpp"
#include "affcrit/weyl.hpp"
#include "support/oracles.hpp"

using namespace affcrit;

namespace {

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("leq on A1") {
  RootSystem rs(CartanType::parse("A1"));
  AffineWeight lam{{Rational(1, 3)}, 5, 2};
  auto alpha = rs.embed_root(AffineRoot::real(rs.highest_root(), 0));
  auto delta = AffineWeight::delta_weight(1);

  auto c1 = leq(rs, lam - alpha, lam);
  REQUIRE(c1);
  CHECK(c1->c0 == 0);
  CHECK(c1->c_fin == std::vector<std::int64_t>{1});
  CHECK(height(*c1) == 1);

  CHECK_FALSE(leq(rs, lam - alpha + delta, lam));

  auto c2 = leq(rs, lam - delta, lam);
  REQUIRE(c2);
  CHECK(c2->c0 == 1);
  CHECK(c2->c_fin == std::vector<std::int64_t>{1});
  CHECK(height(*c2) == 2);

  auto c3 = leq(rs, lam, lam);
  REQUIRE(c3);
  CHECK(height(*c3) == 0);
  CHECK(*c3 == OrderCertificate{0, {0}});

  CHECK_FALSE(leq(rs, AffineWeight{{Rational(1, 3)}, 4, 2}, lam));  // level differs
  CHECK_FALSE(leq(rs, lam.shifted(Rational(-1, 2)), lam));          // fractional delta
}

TEST_CASE("leq is a partial order with sound certificates") {
  std::mt19937 rng(11);
  for (const auto& name : {"A1", "A2", "B2", "G2"}) {
    RootSystem rs(CartanType::parse(name));
    const auto simple = rs.affine_simple_roots();
    std::uniform_int_distribution<int> c(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
      AffineWeight top = oracle::random_critical_weight(rs, rng, 2, 3);
      auto step = [&](const AffineWeight& w) {
        AffineWeight x = w;
        for (const auto& s : simple) x -= Rational(c(rng)) * s;
        return x;
      };
      AffineWeight mid = step(top), low = step(mid);
      auto c_mid = leq(rs, mid, top);
      auto c_low = leq(rs, low, mid);
      REQUIRE(c_mid);
      REQUIRE(c_low);
      CHECK(lower_by(rs, top, *c_mid) == mid);
      auto c_all = leq(rs, low, top);
      REQUIRE(c_all);
      CHECK(height(*c_all) == height(*c_mid) + height(*c_low));
      if (!(mid == top)) CHECK_FALSE(leq(rs, top, mid));
    }
  }
}

TEST_CASE("enumerate_below") {
  RootSystem a1(CartanType::parse("A1"));
  AffineWeight lam{{0}, -2, 0};
  auto alpha = a1.embed_root(AffineRoot::real(a1.highest_root(), 0));
  auto alpha0 = a1.embed_root(AffineRoot::real(-a1.highest_root(), 1));
  auto d1 = enumerate_below(a1, lam, 1);
  CHECK(std::set<AffineWeight>(d1.begin(), d1.end()) == std::set<AffineWeight>{lam, lam - alpha, lam - alpha0});
  CHECK(d1.front() == lam);
  CHECK(enumerate_below(a1, lam, 0) == std::vector<AffineWeight>{lam});

  RootSystem a2(CartanType::parse("A2"));
  AffineWeight l2{{1, 0}, -3, 0};
  CHECK(enumerate_below(a2, l2, 1).size() == 4);

  for (const auto& name : {"A1", "A2", "B3"}) {
    RootSystem rs(CartanType::parse(name));
    AffineWeight top = AffineWeight::zero(rs.rank());
    std::set<AffineWeight> prev;
    for (int d = 0; d <= 4; ++d) {
      auto below = enumerate_below(rs, top, d);
      std::set<AffineWeight> s(below.begin(), below.end());
      CHECK(s.size() == below.size());
      CHECK(static_cast<std::int64_t>(below.size()) == binomial(d + rs.rank() + 1, rs.rank() + 1));
      CHECK(std::includes(s.begin(), s.end(), prev.begin(), prev.end()));
      std::int64_t last = 0;
      for (const auto& mu : below) {
        auto cert = leq(rs, mu, top);
        REQUIRE(cert);
        CHECK(height(*cert) >= last);
        CHECK(height(*cert) <= d);
        last = height(*cert);
      }
      prev = s;
    }
  }
}

TEST_CASE("depth cap") {
  RootSystem rs(CartanType::parse("A1"));
  const int saved = depth_cap();
  set_depth_cap(3);
  CHECK_THROWS_AS(enumerate_below(rs, AffineWeight::zero(1), 4), PreconditionError);
  CHECK_THROWS_AS(enumerate_below(rs, AffineWeight::zero(1), -1), PreconditionError);
  set_depth_cap(saved);
  CHECK(enumerate_below(rs, AffineWeight::zero(1), 4).size() == 15);
}

TEST_CASE("is_critical and bar") {
  RootSystem a1(CartanType::parse("A1"));
  RootSystem a2(CartanType::parse("A2"));
  CHECK(is_critical(a1, {{0}, -2, 0}));
  CHECK_FALSE(is_critical(a1, {{0}, 0, 0}));
  CHECK(is_critical(a2, {{1, 0}, -3, 5}));

  AffineWeight lam{{Rational(3), Rational(-1, 2)}, 7, 4};
  CHECK(bar(lam) == RationalVector{3, Rational(-1, 2)});
  CHECK(bar(AffineWeight::delta_weight(2)) == RationalVector{0, 0});
  CHECK(bar(AffineWeight::kappa(2)) == RationalVector{0, 0});
  CHECK(bar(lam.shifted(9)) == bar(lam));

  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    auto w = oracle::random_critical_weight(a2, rng, 3, 4);
    CHECK(is_critical(a2, w.shifted(t - 20)));
    for (const auto& a : a2.all_roots())
      CHECK(is_critical(a2, dot_reflect(a2, AffineRoot::real(a, t % 3), w)));
  }
}

TEST_CASE("window membership") {
  RootSystem a1(CartanType::parse("A1"));
  AffineWeight lam{{0}, -2, 0};
  Window w = Window::below(lam, 3);
  CHECK(w.contains(a1, lam));
  CHECK(w.contains(a1, lam.shifted(-1)));
  CHECK_FALSE(w.contains(a1, lam.shifted(-2)));  // height 4
  CHECK_FALSE(w.contains(a1, lam.shifted(1)));
  CHECK(w.members(a1).size() == 10);

  Window mixed{{lam, AffineWeight{{0}, 0, 0}}, 2};
  CHECK_THROWS_AS(mixed.validate(a1), PreconditionError);
  CHECK_THROWS_AS(Window{}.validate(a1), PreconditionError);

  Window two{{lam, lam.shifted(-1)}, 1};
  CHECK(two.members(a1).size() == 6);
}
