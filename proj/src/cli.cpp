#include "affcrit/cli.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "affcrit/blocks.hpp"
#include "affcrit/errors.hpp"
#include "affcrit/json_io.hpp"

namespace affcrit::cli {

namespace {

constexpr int kDefaultDepth = 4;

struct CommandConfig {
  std::string type = "A1";
  std::string weight;
  std::string other;
  std::vector<std::string> ceilings;
  int depth = kDefaultDepth;
  bool unsafe_depth = false;
  std::string format;
  // command specific
  std::string positional;
  std::string mode = "restricted";
  std::string deform = "closed";
  std::vector<std::string> roots;
  std::optional<int> bound;
  int series_rank = 1;
  int series_n = 10;
};

void add_type(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("--type", cfg.type, "Cartan type, e.g. A1, A2, G2")->capture_default_str();
}

void add_weight(CLI::App* sub, CommandConfig& cfg) {
  add_type(sub, cfg);
  sub->add_option("--weight", cfg.weight, "weight f1,...,fr,level,delta (fundamental-weight coordinates)")
      ->required();
}

void add_depth(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("--depth", cfg.depth, "truncation depth (height below the ceilings)")->capture_default_str();
  sub->add_flag("--unsafe-depth", cfg.unsafe_depth, "lift the depth safety cap");
}

void add_window(CLI::App* sub, CommandConfig& cfg) {
  add_depth(sub, cfg);
  sub->add_option("--ceiling", cfg.ceilings, "additional window ceiling (repeatable); the weight is always one");
}

void add_format(CLI::App* sub, CommandConfig& cfg, const std::string& def) {
  cfg.format = def;
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "tsv"}))->default_str(def);
}

struct Context {
  RootSystem rs;
  AffineWeight weight;
  Window window;
};

Context make_context(const CommandConfig& cfg, bool needs_weight) {
  Context ctx{RootSystem(CartanType::parse(cfg.type)), {}, {}};
  if (needs_weight) {
    ctx.weight = parse_weight(cfg.weight, ctx.rs.rank());
    ctx.window.ceilings.push_back(ctx.weight);
    for (const auto& c : cfg.ceilings) ctx.window.ceilings.push_back(parse_weight(c, ctx.rs.rank()));
  }
  ctx.window.depth = cfg.depth;
  return ctx;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_scalar(std::ostream& out, const CommandConfig& cfg, const Json& value, const std::string& plain) {
  if (cfg.format == "json")
    out << value.dump() << '\n';
  else
    out << plain << '\n';
}

using Handler = std::function<void(const CommandConfig&, std::ostream&)>;

struct Command {
  std::string name;
  std::string help;
  std::function<void(CLI::App*, CommandConfig&)> setup;
  Handler handler;
};

std::vector<Command> build_commands() {
  std::vector<Command> cmds;

  cmds.push_back({"rootsys", "finite root data and affine invariants of a type",
                  [](CLI::App* s, CommandConfig& c) {
                    s->add_option("cartan_type", c.positional, "Cartan type (alternative to --type)");
                    add_type(s, c);
                    add_format(s, c, "json");
                  },
                  [](const CommandConfig& c, std::ostream& out) {
                    RootSystem rs(CartanType::parse(c.positional.empty() ? c.type : c.positional));
                    print(out, to_json(rs));
                  }});

  cmds.push_back({"pairing", "invariant form (weight, with)",
                  [](CLI::App* s, CommandConfig& c) {
                    add_weight(s, c);
                    s->add_option("--with", c.other, "second weight")->required();
                    add_format(s, c, "tsv");
                  },
                  [](const CommandConfig& c, std::ostream& out) {
                    auto ctx = make_context(c, true);
                    auto other = parse_weight(c.other, ctx.rs.rank());
                    auto v = format_rational(ctx.rs.pairing(ctx.weight, other));
                    print_scalar(out, c, Json(v), v);
                  }});

  cmds.push_back({"critical", "whether the weight is at the critical level",
                  [](CLI::App* s, CommandConfig& c) {
                    add_weight(s, c);
                    add_format(s, c, "tsv");
                  },
                  [](const CommandConfig& c, std::ostream& out) {
                    auto ctx = make_context(c, true);
                    bool v = is_critical(ctx.rs, ctx.weight);
                    print_scalar(out, c, Json(v), v ? "true" : "false");
                  }});

  cmds.push_back({"integral-roots", "integral real roots, optionally under a deformation",
                  [](CLI::App* s, CommandConfig& c) {
                    add_weight(s, c);
                    s->add_option("--deform", c.deform, "closed | generic | subgeneric:<root coords>")
                        ->capture_default_str();
                    add_format(s, c, "json");
                  },
                  [](const CommandConfig& c, std::ostream& out) {
                    auto ctx = make_context(c, true);
                    DeformationSpec d;
                    if (c.deform == "closed") {
                      d = DeformationSpec::closed();
                    } else if (c.deform == "generic") {
                      d = DeformationSpec::generic();
                    } else if (c.deform.rfind("subgeneric:", 0) == 0) {
                      d = DeformationSpec::subgeneric(parse_root(c.deform.substr(11), ctx.rs));
                    } else {
                      throw ParseError("unknown deformation '" + c.deform + "'");
                    }
                    print(out, to_json(deformed_integral_roots(ctx.rs, ctx.weight, d)));
                  }});

  cmds.push_back({"orbit", "dot-orbit under shifted reflections alpha + n delta, clipped to the window",
                  [](CLI::App* s, CommandConfig& c) {
                    add_weight(s, c);
                    add_window(s, c);
                    s->add_option("--root", c.roots, "finite root c1,...,cr (repeatable); default: integral positive roots");
                    s->add_option("--bound", c.bound, "largest |n| for alpha + n delta (default: depth)");
                    add_format(s, c, "json");
                  },
                  [](const CommandConfig& c, std::ostream& out) {
                    auto ctx = make_context(c, true);
                    std::vector<FiniteRoot> alphas;
                    for (const auto& r : c.roots) alphas.push_back(parse_root(r, ctx.rs));
                    if (c.roots.empty()) alphas = positive_only(finite_integral_roots(ctx.rs, bar(ctx.weight)));
                    auto gens = shifted_generators(alphas, c.bound.value_or(ctx.window.depth));
                    print(out, to_json(orbit_dot(ctx.rs, ctx.weight, gens, ctx.window), ctx.window));
                  }});

  cmds.push_back({"class", "linkage class inside the window",
                  [](CLI::App* s, CommandConfig& c) {
                    add_weight(s, c);
                    add_window(s, c);
                    s->add_option("--mode", c.mode, "restricted | classical")
                        ->check(CLI::IsMember({"restricted", "classical"}))
                        ->capture_default_str();
                    add_format(s, c, "json");
                  },
                  [](const CommandConfig& c, std::ostream& out) {
                    auto ctx = make_context(c, true);
                    auto res = c.mode == "classical" ? classical_class(ctx.rs, ctx.weight, ctx.window)
                                                     : restricted_class(ctx.rs, ctx.weight, ctx.window);
                    print(out, to_json(res, ctx.window));
                  }});

  cmds.push_back({"classify", "generic / subgeneric / higher classification of a critical weight",
                  [](CLI::App* s, CommandConfig& c) {
                    add_weight(s, c);
                    add_format(s, c, "json");
                  },
                  [](const CommandConfig& c, std::ostream& out) {
                    auto ctx = make_context(c, true);
                    print(out, to_json(classify_class(ctx.rs, ctx.weight)));
                  }});

  cmds.push_back({"refine-check", "rank-one orbit closure equals the restricted class",
                  [](CLI::App* s, CommandConfig& c) {
                    add_weight(s, c);
                    add_window(s, c);
                    add_format(s, c, "tsv");
                  },
                  [](const CommandConfig& c, std::ostream& out) {
                    auto ctx = make_context(c, true);
                    bool v = refinement_check(ctx.rs, ctx.weight, ctx.window);
                    print_scalar(out, c, Json(v), v ? "true" : "false");
                  }});

  for (const std::string name : {"qcoeff", "pcoeff"}) {
    cmds.push_back({name, name == "qcoeff" ? "coefficients of prod (1 - x^l)^rank" : "coefficients of prod (1 - x^l)^-rank",
                    [](CLI::App* s, CommandConfig& c) {
                      s->add_option("--rank", c.series_rank, "rank")->capture_default_str();
                      s->add_option("--n", c.series_n, "largest exponent")->capture_default_str();
                      add_format(s, c, "tsv");
                    },
                    [name](const CommandConfig& c, std::ostream& out) {
                      auto s = name == "qcoeff" ? q_series(c.series_rank, c.series_n) : p_series(c.series_rank, c.series_n);
                      if (c.format == "json")
                        print(out, Json{{"rank", c.series_rank}, {"n", c.series_n}, {"values", to_json(s)}});
                      else
                        out << to_tsv(s);
                    }});
  }

  cmds.push_back({"char", "Verma (verma) or restricted Verma (rverma) character to a depth",
                  [](CLI::App* s, CommandConfig& c) {
                    s->add_option("kind", c.positional, "verma | rverma")
                        ->required()
                        ->check(CLI::IsMember({"verma", "rverma"}));
                    add_weight(s, c);
                    add_depth(s, c);
                    add_format(s, c, "tsv");
                  },
                  [](const CommandConfig& c, std::ostream& out) {
                    auto ctx = make_context(c, true);
                    auto ch = c.positional == "verma" ? verma_character(ctx.rs, ctx.weight, c.depth)
                                                      : restricted_verma_character(ctx.rs, ctx.weight, c.depth);
                    if (c.format == "json")
                      print(out, to_json(ctx.rs, ch));
                    else
                      out << to_tsv(ctx.rs, ch);
                  }});

  cmds.push_back({"blocks", "partition of the window into restricted classes",
                  [](CLI::App* s, CommandConfig& c) {
                    add_weight(s, c);
                    add_window(s, c);
                    add_format(s, c, "json");
                  },
                  [](const CommandConfig& c, std::ostream& out) {
                    auto ctx = make_context(c, true);
                    print(out, to_json(block_partition(ctx.rs, ctx.window)));
                  }});

  cmds.push_back({"flag", "restricted Verma flag of the projective cover (generic / subgeneric)",
                  [](CLI::App* s, CommandConfig& c) {
                    add_weight(s, c);
                    add_format(s, c, "json");
                  },
                  [](const CommandConfig& c, std::ostream& out) {
                    auto ctx = make_context(c, true);
                    print(out, to_json(projective_flag(ctx.rs, ctx.weight)));
                  }});

  cmds.push_back({"bggh", "multiplicity matrix [restricted Verma : simple] over the class in the window",
                  [](CLI::App* s, CommandConfig& c) {
                    add_weight(s, c);
                    add_window(s, c);
                    add_format(s, c, "tsv");
                  },
                  [](const CommandConfig& c, std::ostream& out) {
                    auto ctx = make_context(c, true);
                    auto m = bggh_matrix(ctx.rs, ctx.weight, ctx.window);
                    if (c.format == "json")
                      print(out, to_json(m, ctx.window));
                    else
                      out << to_tsv(m);
                  }});

  cmds.push_back({"simples", "simple characters of the class members by back-substitution",
                  [](CLI::App* s, CommandConfig& c) {
                    add_weight(s, c);
                    add_window(s, c);
                    add_format(s, c, "json");
                  },
                  [](const CommandConfig& c, std::ostream& out) {
                    auto ctx = make_context(c, true);
                    auto simples = derived_simple_characters(ctx.rs, ctx.weight, ctx.window, c.depth);
                    if (c.format == "json") {
                      print(out, to_json(ctx.rs, simples, ctx.window));
                    } else {
                      for (const auto& s : simples)
                        out << "# " << weight_cell(s.weight) << "\tvalidity_depth=" << s.validity_depth << '\n'
                            << to_tsv(ctx.rs, s.character);
                    }
                  }});

  return cmds;
}

std::string top_help(const std::vector<Command>& cmds) {
  std::string h =
      "affcrit: critical-level combinatorics of untwisted affine Kac-Moody algebras\n\n"
      "usage: affcrit <subcommand> [options]\n\nsubcommands:\n";
  for (const auto& c : cmds) {
    std::string pad(c.name.size() < 16 ? 16 - c.name.size() : 1, ' ');
    h += "  " + c.name + pad + c.help + "\n";
  }
  h +=
      "\nweights are f1,...,fr,level,delta in fundamental-weight coordinates with exact\n"
      "rationals (e.g. 1/2). --depth defaults to 4 and is capped at 12 unless\n"
      "--unsafe-depth is given; AFFCRIT_DEPTH_CAP overrides the cap.\n"
      "Run 'affcrit <subcommand> --help' for the options of a subcommand.\n";
  return h;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& c : build_commands()) n.push_back(c.name);
    return n;
  }();
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto cmds = build_commands();
  if (args.empty()) {
    err << top_help(cmds);
    return kExitUnknownCommand;
  }
  if (args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    out << top_help(cmds);
    return kExitOk;
  }
  auto it = std::find_if(cmds.begin(), cmds.end(), [&](const Command& c) { return c.name == args[0]; });
  if (it == cmds.end()) {
    err << "error: unknown subcommand '" << args[0] << "'\n";
    return kExitUnknownCommand;
  }

  CommandConfig cfg;
  CLI::App app{it->help, "affcrit " + it->name};
  it->setup(&app, cfg);
  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);  // CLI11 consumes a reversed vector
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  const int saved_cap = depth_cap();
  if (cfg.unsafe_depth) set_depth_cap(INT_MAX);
  int code = kExitOk;
  try {
    it->handler(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    code = kExitParse;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    code = kExitPrecondition;
  } catch (const OverflowError& e) {
    err << "precondition violated: " << e.what() << '\n';
    code = kExitPrecondition;
  }
  set_depth_cap(saved_cap);
  return code;
}

}  // namespace affcrit::cli
