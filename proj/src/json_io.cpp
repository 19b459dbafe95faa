#include "affcrit/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "affcrit/errors.hpp"

namespace affcrit {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

const char* kind_name(ClassReport::Kind k) {
  switch (k) {
    case ClassReport::Kind::Generic:
      return "generic";
    case ClassReport::Kind::Subgeneric:
      return "subgeneric";
    case ClassReport::Kind::Higher:
      return "higher";
  }
  return "";
}

}  // namespace

Json to_json(const RationalVector& finite) {
  Json a = Json::array();
  for (const auto& q : finite) a.push_back(format_rational(q));
  return a;
}

Json to_json(const AffineWeight& w) {
  Json j;
  j["finite"] = to_json(w.finite);
  j["level"] = format_rational(w.level);
  j["delta"] = format_rational(w.delta);
  return j;
}

AffineWeight weight_from_json(const Json& j) {
  try {
    AffineWeight w;
    for (const auto& f : j.at("finite")) w.finite.push_back(parse_rational(f.get<std::string>()));
    w.level = parse_rational(j.at("level").get<std::string>());
    w.delta = parse_rational(j.at("delta").get<std::string>());
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed weight JSON: ") + e.what());
  }
}

Json to_json(const FiniteRoot& alpha) { return Json(alpha.coords); }

Json to_json(const AffineRoot& beta) {
  Json j;
  j["kind"] = beta.is_real() ? "real" : "imaginary";
  j["finite"] = beta.is_real() ? to_json(beta.finite) : Json(nullptr);
  j["n"] = beta.n;
  return j;
}

Json to_json(const Window& w) {
  Json j;
  j["ceilings"] = Json::array();
  for (const auto& c : w.ceilings) j["ceilings"].push_back(to_json(c));
  j["depth"] = w.depth;
  return j;
}

Json to_json(const RootSystem& rs) {
  Json j;
  j["type"] = rs.type().name();
  j["rank"] = rs.rank();
  j["cartan_matrix"] = rs.cartan_matrix();
  j["d_values"] = rs.d_values();
  j["positive_roots"] = Json::array();
  for (const auto& a : rs.positive_roots()) j["positive_roots"].push_back(to_json(a));
  j["highest_root"] = to_json(rs.highest_root());
  j["dual_coxeter"] = rs.dual_coxeter();
  j["rho"] = to_json(rs.rho());
  return j;
}

Json to_json(const IntegralRootDescription& d) {
  Json j;
  j["critical"] = d.critical;
  j["imaginary_integral"] = d.imaginary_integral;
  j["entries"] = Json::array();
  for (const auto& e : d.entries) {
    Json x;
    x["alpha"] = to_json(e.alpha);
    if (e.n.kind == NConstraint::Kind::AllIntegers) {
      x["n"] = "all";
    } else {
      x["n"] = Json{{"residue", e.n.residue}, {"modulus", e.n.modulus}};
    }
    j["entries"].push_back(std::move(x));
  }
  return j;
}

Json to_json(const OrbitResult& o, const Window& w) {
  Json j;
  j["members"] = Json::array();
  for (const auto& m : o.members) j["members"].push_back(to_json(m));
  j["truncated"] = o.truncated;
  j["generators_used"] = Json::array();
  for (const auto& g : o.generators_used) j["generators_used"].push_back(to_json(g));
  j["window"] = to_json(w);
  return j;
}

Json to_json(const ClassReport& c) {
  Json j;
  j["kind"] = kind_name(c.kind);
  j["alpha"] = c.alpha ? to_json(*c.alpha) : Json(nullptr);
  j["orbit_size"] = c.orbit_size();
  j["finite_orbit"] = Json::array();
  for (const auto& x : c.finite_orbit) j["finite_orbit"].push_back(to_json(x));
  return j;
}

Json to_json(const FlagData& f) {
  Json j;
  j["projective_of"] = to_json(f.projective_of);
  j["flag"] = Json::array();
  for (const auto& [w, m] : f.flag) j["flag"].push_back(Json{{"weight", to_json(w)}, {"multiplicity", m}});
  return j;
}

Json to_json(const CoeffSeries& s) { return Json(s.values); }

namespace {

std::vector<std::tuple<std::int64_t, AffineWeight, std::int64_t>> sorted_terms(const RootSystem& rs,
                                                                               const FormalCharacter& ch) {
  std::vector<std::tuple<std::int64_t, AffineWeight, std::int64_t>> rows;
  for (const auto& [mu, c] : ch.support) rows.emplace_back(support_height(rs, ch, mu), mu, c);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  return rows;
}

}  // namespace

Json to_json(const RootSystem& rs, const FormalCharacter& ch) {
  Json j;
  j["anchor"] = to_json(ch.anchor);
  j["depth"] = ch.depth;
  j["terms"] = Json::array();
  for (const auto& [h, mu, c] : sorted_terms(rs, ch))
    j["terms"].push_back(Json{{"weight", to_json(mu)}, {"height", h}, {"coefficient", c}});
  return j;
}

Json to_json(const BlockPartition& b) {
  Json j;
  j["window"] = to_json(b.window);
  j["classes"] = Json::array();
  for (const auto& c : b.classes) {
    Json x;
    x["representative"] = to_json(c.representative);
    x["members"] = Json::array();
    for (const auto& m : c.members) x["members"].push_back(to_json(m));
    j["classes"].push_back(std::move(x));
  }
  return j;
}

Json to_json(const BgghMatrix& m, const Window& w) {
  Json j;
  j["kind"] = kind_name(m.kind);
  j["window"] = to_json(w);
  j["labels"] = Json::array();
  for (const auto& l : m.labels) j["labels"].push_back(to_json(l));
  j["matrix"] = m.entries;
  j["row_complete"] = m.row_complete;
  return j;
}

Json to_json(const RootSystem& rs, const std::vector<SimpleCharacter>& simples, const Window& w) {
  Json j;
  j["window"] = to_json(w);
  j["simples"] = Json::array();
  for (const auto& s : simples) {
    Json x = to_json(rs, s.character);
    x["validity_depth"] = s.validity_depth;
    j["simples"].push_back(std::move(x));
  }
  return j;
}

std::string weight_cell(const AffineWeight& w) { return to_json(w).dump(); }

std::string to_tsv(const RootSystem& rs, const FormalCharacter& ch) {
  std::ostringstream os;
  for (const auto& [h, mu, c] : sorted_terms(rs, ch)) os << weight_cell(mu) << '\t' << h << '\t' << c << '\n';
  return os.str();
}

std::string to_tsv(const CoeffSeries& s) {
  std::ostringstream os;
  for (std::size_t n = 0; n < s.size(); ++n) os << n << '\t' << s[n] << '\n';
  return os.str();
}

std::string to_tsv(const BgghMatrix& m) {
  std::ostringstream os;
  os << "row";
  for (const auto& l : m.labels) os << '\t' << weight_cell(l);
  os << "\tcomplete\n";
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    os << weight_cell(m.labels[i]);
    for (auto v : m.entries[i]) os << '\t' << v;
    os << '\t' << (m.row_complete[i] ? "true" : "false") << '\n';
  }
  return os.str();
}

AffineWeight parse_weight(std::string_view text, int rank) {
  auto parts = split(text, ',');
  if (static_cast<int>(parts.size()) != rank + 2)
    throw ParseError("weight '" + std::string(text) + "' needs " + std::to_string(rank + 2) +
                     " comma-separated rationals (finite part, level, delta)");
  AffineWeight w;
  for (int i = 0; i < rank; ++i) w.finite.push_back(parse_rational(parts[static_cast<std::size_t>(i)]));
  w.level = parse_rational(parts[static_cast<std::size_t>(rank)]);
  w.delta = parse_rational(parts[static_cast<std::size_t>(rank) + 1]);
  return w;
}

FiniteRoot parse_root(std::string_view text, const RootSystem& rs) {
  auto parts = split(text, ',');
  if (static_cast<int>(parts.size()) != rs.rank())
    throw ParseError("root '" + std::string(text) + "' needs " + std::to_string(rs.rank()) + " coordinates");
  FiniteRoot a;
  for (const auto& p : parts) {
    Rational q = parse_rational(p);
    if (!is_integer(q)) throw ParseError("root coordinates must be integers");
    a.coords.push_back(static_cast<int>(to_int64(q)));
  }
  if (!rs.is_root(a)) throw PreconditionError("'" + std::string(text) + "' is not a root of " + rs.type().name());
  return a;
}

}  // namespace affcrit
