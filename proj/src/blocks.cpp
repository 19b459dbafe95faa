#include "affcrit/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "affcrit/errors.hpp"

namespace affcrit {

namespace {

void require_flag_class(const ClassReport& rep) {
  if (rep.kind == ClassReport::Kind::Higher)
    throw PreconditionError("class is neither generic nor subgeneric (orbit size " + std::to_string(rep.orbit_size()) +
                            "); no flag structure is known");
}

}  // namespace

Rational order_potential(const RootSystem& rs, const AffineWeight& ref, const AffineWeight& mu) {
  AffineWeight diff = ref - mu;
  RationalVector c = rs.weight_to_root(diff.finite);
  const auto& theta = rs.highest_root().coords;
  Rational total = diff.delta;
  for (std::size_t i = 0; i < c.size(); ++i) total += c[i] + diff.delta * theta[i];
  return -total;
}

BlockPartition block_partition(const RootSystem& rs, const Window& w) {
  w.validate(rs);
  for (const auto& c : w.ceilings)
    if (!is_critical(rs, c)) throw PreconditionError("block partition needs critical ceilings");
  const auto members = w.members(rs);
  std::map<AffineWeight, std::size_t> index;
  for (std::size_t i = 0; i < members.size(); ++i) index.emplace(members[i], i);

  std::vector<std::size_t> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> done(members.size(), false);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (done[i]) continue;
    for (const auto& mu : restricted_class(rs, members[i], w).members) {
      std::size_t j = index.at(mu);
      done[j] = true;
      std::size_t a = find(i), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  BlockPartition part{{}, w};
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::size_t root = find(i);
    auto [it, fresh] = slot.emplace(root, part.classes.size());
    if (fresh) part.classes.push_back({members[root], {}});
    part.classes[it->second].members.push_back(members[i]);
  }
  for (auto& c : part.classes) std::sort(c.members.begin(), c.members.end());
  return part;
}

FlagData projective_flag(const RootSystem& rs, const AffineWeight& lam) {
  const ClassReport rep = classify_class(rs, lam);
  require_flag_class(rep);
  FlagData fd{lam, {}};
  if (rep.kind == ClassReport::Kind::Subgeneric) fd.flag.emplace_back(alpha_up(rs, *rep.alpha, lam), 1);
  fd.flag.emplace_back(lam, 1);
  return fd;
}

BgghMatrix bggh_matrix(const RootSystem& rs, const AffineWeight& lam, const Window& w) {
  const ClassReport rep = classify_class(rs, lam);
  require_flag_class(rep);
  BgghMatrix m;
  m.kind = rep.kind;
  m.labels = restricted_class(rs, lam, w).members;
  const AffineWeight& ref = w.ceilings.front();
  std::stable_sort(m.labels.begin(), m.labels.end(), [&](const AffineWeight& a, const AffineWeight& b) {
    return order_potential(rs, ref, a) > order_potential(rs, ref, b);
  });
  std::map<AffineWeight, std::size_t> index;
  for (std::size_t i = 0; i < m.labels.size(); ++i) index.emplace(m.labels[i], i);

  const std::size_t n = m.labels.size();
  m.entries.assign(n, std::vector<std::int64_t>(n, 0));
  // Column nu holds the flag of the projective cover of nu.
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [mu, mult] : projective_flag(rs, m.labels[j]).flag) {
      auto it = index.find(mu);
      if (it != index.end()) m.entries[it->second][j] = mult;
    }
  }
  m.row_complete.assign(n, true);
  if (rep.kind == ClassReport::Kind::Subgeneric)
    for (std::size_t i = 0; i < n; ++i) m.row_complete[i] = index.count(alpha_down(rs, *rep.alpha, m.labels[i])) > 0;
  return m;
}

std::vector<SimpleCharacter> derived_simple_characters(const RootSystem& rs, const AffineWeight& lam,
                                                       const Window& w, int depth) {
  check_depth(depth);
  const BgghMatrix m = bggh_matrix(rs, lam, w);
  const ClassReport rep = classify_class(rs, lam);
  const std::size_t n = m.labels.size();
  std::vector<SimpleCharacter> out(n);

  for (std::size_t ii = n; ii-- > 0;) {
    const AffineWeight& mu = m.labels[ii];
    int validity = depth;
    if (!m.row_complete[ii]) {
      auto cert = leq(rs, alpha_down(rs, *rep.alpha, mu), mu);
      validity = std::min<int>(validity, static_cast<int>(height(*cert)) - 1);
    }
    for (std::size_t j = ii + 1; j < n; ++j) {
      if (m.entries[ii][j] == 0) continue;
      auto cert = leq(rs, m.labels[j], mu);
      validity = std::min<int>(validity, static_cast<int>(height(*cert)) + out[j].validity_depth);
    }
    FormalCharacter ch = restricted_verma_character(rs, mu, validity);
    for (std::size_t j = ii + 1; j < n; ++j)
      if (m.entries[ii][j] != 0) accumulate(rs, ch, out[j].character, -m.entries[ii][j]);
    out[ii] = {mu, std::move(ch), validity};
  }
  return out;
}

}  // namespace affcrit
