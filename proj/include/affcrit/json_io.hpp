#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "affcrit/blocks.hpp"
#include "affcrit/characters.hpp"
#include "affcrit/linkage.hpp"
#include "affcrit/rootsys.hpp"
#include "affcrit/weyl.hpp"

namespace affcrit {

using Json = nlohmann::ordered_json;

// {"finite":["p/q",...],"level":"p/q","delta":"p/q"}
Json to_json(const AffineWeight& w);
AffineWeight weight_from_json(const Json& j);
Json to_json(const RationalVector& finite);
Json to_json(const FiniteRoot& alpha);
Json to_json(const AffineRoot& beta);
Json to_json(const Window& w);
Json to_json(const RootSystem& rs);
Json to_json(const IntegralRootDescription& d);
// {"members":[...],"truncated":bool} plus generators and the window.
Json to_json(const OrbitResult& o, const Window& w);
// {"kind":"generic|subgeneric|higher","alpha":coords|null,"orbit_size":n,"finite_orbit":[...]}
Json to_json(const ClassReport& c);
Json to_json(const FlagData& f);
Json to_json(const CoeffSeries& s);
Json to_json(const RootSystem& rs, const FormalCharacter& ch);
Json to_json(const BlockPartition& b);
Json to_json(const BgghMatrix& m, const Window& w);
Json to_json(const RootSystem& rs, const std::vector<SimpleCharacter>& simples, const Window& w);

// Compact single-line JSON of a weight, as used in TSV columns.
std::string weight_cell(const AffineWeight& w);

// One line per support weight: weight JSON, height, coefficient; sorted by
// (height, weight).
std::string to_tsv(const RootSystem& rs, const FormalCharacter& ch);
// One line per index: n, value.
std::string to_tsv(const CoeffSeries& s);
// Header row of labels, then one row per label with a trailing completeness flag.
std::string to_tsv(const BgghMatrix& m);

// "f1,...,fr,level,delta" in fundamental-weight coordinates.
AffineWeight parse_weight(std::string_view text, int rank);
// "c1,...,cr" in simple-root coordinates; must be a root of rs.
FiniteRoot parse_root(std::string_view text, const RootSystem& rs);

}  // namespace affcrit
