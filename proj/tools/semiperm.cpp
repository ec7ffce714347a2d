// Command-line front end. Exit status: 0 when the checked property holds or
// the command succeeded, 1 when it fails (a witness is printed), 2 on usage
// or input errors.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "semiperm/congruence.hpp"
#include "semiperm/construction.hpp"
#include "semiperm/decomposition.hpp"
#include "semiperm/enumeration.hpp"
#include "semiperm/groups.hpp"
#include "semiperm/gset.hpp"
#include "semiperm/ideals.hpp"
#include "semiperm/properties.hpp"
#include "semiperm/sgp-io.hpp"

using json = nlohmann::json;
using namespace semiperm;

namespace {

  constexpr int exit_holds = 0;
  constexpr int exit_fails = 1;
  constexpr int exit_usage = 2;

  class UsageError : public Error {
   public:
    using Error::Error;
  };

  std::string element_name(FiniteSemigroup const& S, element_id a) {
    return S.labels().empty() ? "e" + std::to_string(a) : S.label(a);
  }

  std::string set_string(FiniteSemigroup const& S, element_set const& X) {
    std::string out = "{";
    for (std::size_t i = 0; i < X.size(); ++i) {
      out += (i == 0 ? "" : ",") + element_name(S, X[i]);
    }
    return out + "}";
  }

  std::string partition_string(FiniteSemigroup const& S, Partition const& p) {
    std::string out;
    for (auto const& c : p.classes()) {
      out += set_string(S, c);
    }
    return out;
  }

  std::string subgroup_string(FiniteGroup const& G, Subgroup const& H) {
    return set_string(G.carrier(), H.members);
  }

  FiniteGroup load_group(std::string const& path) {
    return as_group(load_semigroup(path));
  }

  element_set parse_id_list(std::string const& text, std::size_t bound) {
    element_set out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(item, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) {
        throw UsageError("expected a comma-separated list of ids, found \""
                         + text + "\"");
      }
      if (v >= bound) {
        throw UsageError("id " + item + " is out of range");
      }
      out.push_back(static_cast<element_id>(v));
    }
    return make_set(std::move(out));
  }

  Subgroup parse_subgroup(FiniteGroup const& G, std::string const& text) {
    auto members = parse_id_list(text, G.size());
    if (!is_subgroup(G, members)) {
      throw UsageError(set_string(G.carrier(), members)
                       + " is not a subgroup");
    }
    return Subgroup{members};
  }

  json witness_json(PermutabilityWitness const& w) {
    return {{"alpha", to_json(w.alpha)},
            {"beta", to_json(w.beta)},
            {"pair", {w.pair.first, w.pair.second}}};
  }

  json pair_json(std::optional<std::pair<Subgroup, Subgroup>> const& p) {
    if (!p) {
      return nullptr;
    }
    return {p->first.members, p->second.members};
  }

  struct Context {
    bool json_output = false;

    void print(json const& j, std::string const& text) const {
      if (json_output) {
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << text;
      }
    }

    void print_semigroup(FiniteSemigroup const& S) const {
      print(to_json(S), format_sgp(S));
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  int cmd_check(Context const& ctx, std::string const& path) {
    try {
      auto const S = load_semigroup(path);
      ctx.print({{"valid", true}, {"order", S.size()}},
                "associative table of order " + std::to_string(S.size())
                    + "\n");
      return exit_holds;
    } catch (NonAssociative const& e) {
      auto const& w = e.witness();
      ctx.print({{"valid", false}, {"witness", w}},
                "not associative: (ab)c != a(bc) at a = "
                    + std::to_string(w[0]) + ", b = " + std::to_string(w[1])
                    + ", c = " + std::to_string(w[2]) + "\n");
      return exit_fails;
    }
  }

  int cmd_congruences(Context const& ctx, std::string const& path,
                      std::size_t cap) {
    auto const S       = load_semigroup(path);
    auto const lattice = all_congruences(S, cap);
    json        j      = {{"count", lattice.size()},
                          {"congruences", json::array()}};
    std::string text   = std::to_string(lattice.size()) + " congruences\n";
    for (auto const& alpha : lattice) {
      j["congruences"].push_back(to_json(alpha));
      text += partition_string(S, alpha) + "\n";
    }
    ctx.print(j, text);
    return exit_holds;
  }

  int cmd_permutable(Context const& ctx, std::string const& path,
                     std::size_t cap) {
    auto const S = load_semigroup(path);
    auto const r = is_permutable(S, cap);
    json       j = {{"permutable", r.permutable},
                    {"congruences", r.lattice_size}};
    if (r.permutable) {
      ctx.print(j, "permutable (" + std::to_string(r.lattice_size)
                       + " congruences)\n");
      return exit_holds;
    }
    auto const& w    = *r.witness;
    j["witness"]     = witness_json(w);
    auto const pair  = "(" + element_name(S, w.pair.first) + ","
                      + element_name(S, w.pair.second) + ")";
    ctx.print(j, "not permutable\nalpha = " + partition_string(S, w.alpha)
                     + "\nbeta = " + partition_string(S, w.beta) + "\npair "
                     + pair + " is in alpha o beta but not in beta o alpha\n");
    return exit_fails;
  }

  int cmd_green(Context const& ctx, std::string const& path) {
    auto const S = load_semigroup(path);
    auto const g = green(S);
    json       j = {{"R", to_json(g.R)},
                    {"L", to_json(g.L)},
                    {"J", to_json(g.J)},
                    {"H", to_json(g.H)}};
    ctx.print(j, "R: " + partition_string(S, g.R) + "\nL: "
                     + partition_string(S, g.L) + "\nJ: "
                     + partition_string(S, g.J) + "\nH: "
                     + partition_string(S, g.H) + "\n");
    return exit_holds;
  }

  int cmd_ideals(Context const& ctx, std::string const& path) {
    auto const S = load_semigroup(path);
    auto const L = all_ideals(S);
    json       j = {{"chain", L.is_chain}, {"ideals", json::array()}};
    std::string text;
    for (auto const& I : L.ideals) {
      j["ideals"].push_back(I.members);
      text += set_string(S, I.members) + "\n";
    }
    text += std::string("chain: ") + (L.is_chain ? "yes" : "no") + "\n";
    ctx.print(j, text);
    return exit_holds;
  }

  int cmd_kernel(Context const& ctx, std::string const& path) {
    auto const S = load_semigroup(path);
    auto const K = kernel(S);
    ctx.print({{"kernel", K.members}}, set_string(S, K.members) + "\n");
    return exit_holds;
  }

  int cmd_decompose(Context const& ctx, std::string const& path) {
    auto const S = load_semigroup(path);
    auto const d = putcha_decomposition(S);
    json       j = {{"putcha", d.all_components_archimedean},
                    {"components", json::array()}};
    std::string text;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
      j["components"].push_back(
          {{"members", d.components[i]},
           {"archimedean", bool(d.component_archimedean[i])}});
      text += set_string(S, d.components[i])
              + (d.component_archimedean[i] ? " archimedean\n"
                                            : " not archimedean\n");
    }
    text += std::string("Putcha: ")
            + (d.all_components_archimedean ? "yes" : "no") + "\n";
    ctx.print(j, text);
    return d.all_components_archimedean ? exit_holds : exit_fails;
  }

  int cmd_classify(Context const& ctx, std::string const& path) {
    auto const S = load_semigroup(path);
    auto const r = classify(S);
    json       j = {{"case", r.name()}};
    std::string text = r.name() + "\n";
    auto const& ev   = r.evidence;
    if (ev.witness) {
      j["witness"] = witness_json(*ev.witness);
      text += "alpha = " + partition_string(S, ev.witness->alpha)
              + "\nbeta = " + partition_string(S, ev.witness->beta) + "\n";
    }
    if (ev.generator) {
      j["generator"] = *ev.generator;
      text += "generator: " + element_name(S, *ev.generator) + "\n";
    }
    if (r.kind == ClassificationCase::two_component) {
      j["upper"]  = ev.upper;
      j["lower"]  = ev.lower;
      j["kernel"] = ev.kernel;
      text += "upper: " + set_string(S, ev.upper) + "\nlower: "
              + set_string(S, ev.lower) + "\n";
    }
    ctx.print(j, text);
    // not a permutable Putcha semigroup
    bool const classified = r.kind != ClassificationCase::not_permutable
                            && r.kind != ClassificationCase::not_putcha;
    return classified ? exit_holds : exit_fails;
  }

  int cmd_rees(Context const& ctx, std::string const& group_path,
               std::size_t I, std::size_t J,
               std::vector<long long> const& P) {
    ReesMatrixSpec spec{load_group(group_path), I, J, {}};
    if (P.empty()) {
      spec.P.assign(J, std::vector<element_id>(I, spec.G.identity()));
    } else {
      if (P.size() != I * J) {
        throw UsageError("--P needs J * I = " + std::to_string(I * J)
                         + " entries");
      }
      spec.P.assign(J, std::vector<element_id>(I));
      for (std::size_t r = 0; r < J; ++r) {
        for (std::size_t c = 0; c < I; ++c) {
          auto const v = P[r * I + c];
          if (v < 0 || static_cast<std::size_t>(v) >= spec.G.size()) {
            throw UsageError("--P entry " + std::to_string(v)
                             + " is not a group element");
          }
          spec.P[r][c] = static_cast<element_id>(v);
        }
      }
    }
    ctx.print_semigroup(rees_matrix(spec));
    return exit_holds;
  }

  int cmd_rees_decompose(Context const& ctx, std::string const& path) {
    auto const S = load_semigroup(path);
    try {
      auto const d = rees_decompose(S);
      json       j = {{"I", d.spec.I_size},
                      {"J", d.spec.J_size},
                      {"group", to_json(d.spec.G.carrier())},
                      {"P", d.spec.P},
                      {"map", d.map}};
      std::ostringstream text;
      text << "I = " << d.spec.I_size << ", J = " << d.spec.J_size
           << ", |G| = " << d.spec.G.size() << "\nG:\n"
           << format_sgp(d.spec.G.carrier()) << "P:\n";
      for (auto const& row : d.spec.P) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          text << (i == 0 ? "" : " ") << row[i];
        }
        text << '\n';
      }
      text << "map:";
      for (auto x : d.map) {
        text << ' ' << x;
      }
      text << '\n';
      ctx.print(j, text.str());
      return exit_holds;
    } catch (NotCompletelySimple const& e) {
      ctx.print({{"completely_simple", false}}, std::string(e.what()) + "\n");
      return exit_fails;
    }
  }

  int cmd_gset(Context const& ctx, std::string const& group_path,
               std::string const& action_path, std::string const& subgroup,
               element_id point) {
    auto const G = load_group(group_path);
    if (action_path.empty() == subgroup.empty()) {
      throw UsageError("give exactly one of --action and --subgroup");
    }
    auto const X = action_path.empty()
                       ? coset_space(G, parse_subgroup(G, subgroup))
                       : parse_action(read_input(action_path), G);
    if (point >= X.points()) {
      throw UsageError("--point is out of range");
    }
    auto const orb   = orbits(X);
    auto const trans = is_transitive(X);
    auto const stab  = stabilizer(X, point);
    json       j     = {{"points", X.points()},
                        {"orbits", to_json(orb)},
                        {"transitive", trans},
                        {"stabilizer", stab.members}};
    std::string text = "points: " + std::to_string(X.points())
                       + "\norbits: " + format_partition(orb)
                       + "\ntransitive: " + (trans ? "yes" : "no")
                       + "\nstabilizer: " + subgroup_string(G, stab) + "\n";
    auto const lattice = all_gset_congruences(X);
    j["congruences"]   = json::array();
    text += std::to_string(lattice.size()) + " congruences\n";
    bool agree = true;
    for (auto const& alpha : lattice) {
      json entry = {{"classes", to_json(alpha)}};
      text += format_partition(alpha);
      if (trans) {
        auto const H      = phi(X, point, alpha);
        entry["subgroup"] = H.members;
        text += " -> " + subgroup_string(G, H);
      }
      j["congruences"].push_back(entry);
      text += "\n";
    }
    if (trans) {
      bool all_commute = true;
      for (std::size_t a = 0; a < lattice.size(); ++a) {
        for (std::size_t b = a + 1; b < lattice.size(); ++b) {
          auto const c = commutation_check(X, point, lattice[a], lattice[b]);
          agree        = agree && c.congruences_commute == c.subgroups_commute;
          all_commute  = all_commute && c.congruences_commute;
        }
      }
      j["congruences_commute"] = all_commute;
      j["criterion_agrees"]    = agree;
      text += std::string("congruences commute: ")
              + (all_commute ? "yes" : "no") + "\ncriterion agrees: "
              + (agree ? "yes" : "no") + "\n";
    }
    ctx.print(j, text);
    return agree ? exit_holds : exit_fails;
  }

  int cmd_theorem2(Context const& ctx, std::string const& path) {
    auto const S = load_semigroup(path);
    auto const r = theorem2_verify(S);
    bool const agrees
        = r.shape_ok ? r.condition.holds == r.permutable : !r.permutable;
    json j = {{"shape_ok", r.shape_ok},
              {"side", r.side == Side::right ? "right" : "left"},
              {"group", r.group_part},
              {"null", r.null_part},
              {"Ga", r.Ga.members},
              {"condition", r.condition.holds},
              {"failing_pair", pair_json(r.condition.failing_pair)},
              {"permutable", r.permutable},
              {"agrees", agrees}};
    std::string text
        = std::string("shape: ") + (r.shape_ok ? "ok" : "not transitive")
          + " (" + (r.side == Side::right ? "right" : "left")
          + ")\nGa: " + subgroup_string(r.G, r.Ga)
          + "\ncondition: " + (r.condition.holds ? "holds" : "fails");
    if (r.condition.failing_pair) {
      text += " at " + subgroup_string(r.G, r.condition.failing_pair->first)
              + ", " + subgroup_string(r.G, r.condition.failing_pair->second);
    }
    text += std::string("\npermutable: ") + (r.permutable ? "yes" : "no")
            + "\nagrees: " + (agrees ? "yes" : "no") + "\n";
    ctx.print(j, text);
    return agrees ? exit_holds : exit_fails;
  }

  int cmd_theorem3(Context const& ctx, std::string const& path) {
    auto const S          = load_semigroup(path);
    auto const r          = theorem3_verify(S);
    bool const permutable = is_permutable(S).permutable;
    bool const agrees     = r.verdict == permutable;
    json       j          = {{"degree", r.degree},
                             {"layers", json::array()},
                             {"verdict", r.verdict},
                             {"representative_invariant",
                              r.representative_invariant},
                             {"permutable", permutable},
                             {"agrees", agrees}};
    std::string text = "degree: " + std::to_string(r.degree) + "\n";
    for (std::size_t i = 0; i < r.layers.size(); ++i) {
      auto const& L = r.layers[i];
      j["layers"].push_back({{"layer", L.layer},
                             {"representative", L.representative},
                             {"covers_layer", L.covers_layer},
                             {"stabilizer", L.stabilizer.members},
                             {"interval_commutes", L.interval_commutes}});
      text += "layer " + std::to_string(i + 1) + ": "
              + set_string(S, L.layer) + " representative "
              + element_name(S, L.representative) + ", GaG "
              + (L.covers_layer ? "covers" : "does not cover")
              + ", stabilizer order " + std::to_string(L.stabilizer.size())
              + ", interval " + (L.interval_commutes ? "commutes" : "fails")
              + "\n";
    }
    text += std::string("verdict: ") + (r.verdict ? "holds" : "fails")
            + "\nrepresentative invariant: "
            + (r.representative_invariant ? "yes" : "no")
            + "\npermutable: " + (permutable ? "yes" : "no")
            + "\nagrees: " + (agrees ? "yes" : "no") + "\n";
    ctx.print(j, text);
    return agrees && r.representative_invariant ? exit_holds : exit_fails;
  }

  int cmd_enumerate(Context const& ctx, std::size_t order,
                    std::string const& mode_name, std::size_t jobs,
                    std::string const& verify, std::string const& dump,
                    bool print_tables) {
    auto const mode = parse_up_to(mode_name);
    if (!mode) {
      throw UsageError("--mode must be labeled, iso or isoanti");
    }
    if (verify.empty()) {
      auto const tables = enumerate_up_to(order, *mode, jobs);
      json       j = {{"order", order},
                      {"mode", to_string(*mode)},
                      {"count", tables.size()}};
      std::string text = "order " + std::to_string(order) + ", "
                         + to_string(*mode) + ": "
                         + std::to_string(tables.size()) + "\n";
      if (print_tables) {
        j["tables"] = json::array();
        for (auto const& S : tables) {
          j["tables"].push_back(to_json(S));
          text += "\n" + format_sgp(S);
        }
      }
      ctx.print(j, text);
      return exit_holds;
    }
    CensusConfig config;
    config.order          = order;
    config.up_to          = *mode;
    config.parallel_width = jobs;
    std::stringstream in(verify);
    std::string       name;
    while (std::getline(in, name, ',')) {
      if (find_predicate(name) == nullptr) {
        throw UsageError("unknown predicate \"" + name + "\"");
      }
      config.predicates.push_back(name);
    }
    auto const report = census_verify(config);
    json       j = {{"order", order},
                    {"mode", to_string(*mode)},
                    {"tables", report.tables},
                    {"predicates", json::array()}};
    for (auto const& p : report.predicates) {
      json entry = {{"name", p.name},
                    {"applicable", p.applicable},
                    {"holds", p.holds},
                    {"counterexamples", p.failures}};
      if (!p.counterexamples.empty()) {
        entry["examples"] = json::array();
        for (auto const& S : p.counterexamples) {
          entry["examples"].push_back(to_json(S));
        }
      }
      j["predicates"].push_back(entry);
      if (!dump.empty()) {
        std::filesystem::create_directories(dump);
        for (std::size_t i = 0; i < p.counterexamples.size(); ++i) {
          std::ofstream out(std::filesystem::path(dump)
                            / (p.name + "-" + std::to_string(i) + ".sgp"));
          out << format_sgp(p.counterexamples[i]);
        }
      }
    }
    ctx.print(j, format_census(report));
    return report.passed() ? exit_holds : exit_fails;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroups: congruence permutability, Putcha "
               "decompositions and the constructions around them"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Context              ctx;
  std::function<int()> action;
  std::string          file;
  std::size_t          cap = default_lattice_cap;

  auto with_file = [&](std::string const& name, std::string const& about) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("file", file, ".sgp or JSON table, '-' for stdin")
        ->required();
    sub->add_flag("--json", ctx.json_output, "Structured output");
    return sub;
  };

  auto* check = with_file("check", "Validate a Cayley table");
  check->callback([&] { action = [&] { return cmd_check(ctx, file); }; });

  auto* cong = with_file("congruences", "List all congruences");
  cong->add_option("--cap", cap, "Maximum lattice size");
  cong->callback(
      [&] { action = [&] { return cmd_congruences(ctx, file, cap); }; });

  auto* perm = with_file("permutable", "Decide congruence permutability");
  perm->add_option("--cap", cap, "Maximum lattice size");
  perm->callback(
      [&] { action = [&] { return cmd_permutable(ctx, file, cap); }; });

  with_file("green", "Green's relations")->callback([&] {
    action = [&] { return cmd_green(ctx, file); };
  });
  with_file("ideals", "All ideals")->callback([&] {
    action = [&] { return cmd_ideals(ctx, file); };
  });
  with_file("kernel", "The minimum ideal")->callback([&] {
    action = [&] { return cmd_kernel(ctx, file); };
  });
  with_file("decompose", "Semilattice of archimedean components")
      ->callback([&] { action = [&] { return cmd_decompose(ctx, file); }; });
  with_file("classify", "Classify a permutable Putcha semigroup")
      ->callback([&] { action = [&] { return cmd_classify(ctx, file); }; });
  with_file("rees-decompose", "Rees coordinates of a completely simple "
                              "semigroup")
      ->callback(
          [&] { action = [&] { return cmd_rees_decompose(ctx, file); }; });
  with_file("theorem2", "Check a group over a null ideal against the "
                        "subgroup criterion")
      ->callback([&] { action = [&] { return cmd_theorem2(ctx, file); }; });
  with_file("theorem3", "Check a group over a nilpotent ideal against the "
                        "layer criterion")
      ->callback([&] { action = [&] { return cmd_theorem3(ctx, file); }; });

  std::string            group_file;
  std::size_t            I = 1, J = 1;
  std::vector<long long> P;
  auto* rees = app.add_subcommand("rees", "Build a Rees matrix semigroup");
  rees->add_option("--group", group_file, "Group table")->required();
  rees->add_option("--I", I, "|I|")->check(CLI::PositiveNumber);
  rees->add_option("--J", J, "|J|")->check(CLI::PositiveNumber);
  rees->add_option("--P", P, "J x I sandwich matrix, row-major");
  rees->add_flag("--json", ctx.json_output, "Structured output");
  rees->callback(
      [&] { action = [&] { return cmd_rees(ctx, group_file, I, J, P); }; });

  std::string subgroup, side = "right";
  auto* c1 = app.add_subcommand("construct1",
                                "Group, cosets of a subgroup and a zero");
  c1->add_option("--group", group_file, "Group table")->required();
  c1->add_option("--subgroup", subgroup, "Subgroup ids, e.g. 0,3")
      ->required();
  c1->add_option("--side", side, "right or left")
      ->check(CLI::IsMember({"right", "left"}));
  c1->add_flag("--json", ctx.json_output, "Structured output");
  c1->callback([&] {
    action = [&] {
      auto const G = load_group(group_file);
      ctx.print_semigroup(construct1(
          {G, parse_subgroup(G, subgroup),
           side == "left" ? Side::left : Side::right}));
      return exit_holds;
    };
  });

  std::size_t order = 1;
  auto* cn = app.add_subcommand("cyclic-nilpotent",
                                "x, x^2, ..., x^(n-1), 0");
  cn->add_option("--order", order, "n")->required()->check(
      CLI::PositiveNumber);
  cn->add_flag("--json", ctx.json_output, "Structured output");
  cn->callback([&] {
    action = [&] {
      ctx.print_semigroup(cyclic_nilpotent(order));
      return exit_holds;
    };
  });

  auto* gz = app.add_subcommand("group-zero", "A group with a zero adjoined");
  gz->add_option("--group", group_file, "Group table")->required();
  gz->add_flag("--json", ctx.json_output, "Structured output");
  gz->callback([&] {
    action = [&] {
      ctx.print_semigroup(group_with_zero(load_group(group_file)));
      return exit_holds;
    };
  });

  std::string action_file;
  element_id  point = 0;
  auto* gs = app.add_subcommand("gset", "Congruences of a right G-set");
  gs->add_option("--group", group_file, "Group table")->required();
  gs->add_option("--action", action_file, "Action table");
  gs->add_option("--subgroup", subgroup, "Use the right cosets of H");
  gs->add_option("--point", point, "Base point");
  gs->add_flag("--json", ctx.json_output, "Structured output");
  gs->callback([&] {
    action = [&] {
      return cmd_gset(ctx, group_file, action_file, subgroup, point);
    };
  });

  std::string mode = "labeled", verify, dump;
  std::size_t jobs = 1;
  bool        print_tables = false;
  auto* en = app.add_subcommand("enumerate",
                                "All associative tables of a small order");
  en->add_option("--order", order, "n <= 5")->required()->check(
      CLI::PositiveNumber);
  en->add_option("--mode", mode, "labeled, iso or isoanti");
  en->add_option("--jobs", jobs, "Worker threads")->check(
      CLI::PositiveNumber);
  en->add_option("--verify", verify, "Comma-separated predicate names");
  en->add_option("--dump", dump, "Directory for counterexample tables");
  en->add_flag("--print", print_tables, "Print every table");
  en->add_flag("--json", ctx.json_output, "Structured output");
  en->callback([&] {
    action = [&] {
      return cmd_enumerate(ctx, order, mode, jobs, verify, dump,
                           print_tables);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    return action();
  } catch (InternalInconsistency const& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return exit_fails;
  } catch (ShapeMismatch const& e) {
    std::cerr << "shape mismatch: " << e.what() << '\n';
    return exit_usage;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
}
