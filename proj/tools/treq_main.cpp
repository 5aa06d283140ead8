#include <initializer_list>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "treq/errors.hpp"
#include "treq/grid.hpp"
#include "treq/quasigroup.hpp"
#include "treq/relation.hpp"
#include "treq/tables.hpp"
#include "treq/tree.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitBudget = 4;
constexpr int kExitOracle = 5;

constexpr int kDefaultMaxN = 14;
constexpr int kMaxNCeiling = 16;

void check_max_n(int max_n) {
  if (max_n > kMaxNCeiling) {
    throw treq::GuardError("--max-n must not exceed " +
                           std::to_string(kMaxNCeiling));
  }
}

struct RelationFlags {
  std::string relation;
  long long k = 0;
  long long l = 0;
  long long a = 0;
  long long b = 0;
  long long m = 0;
  std::string gens;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--relation", relation, "D, L, R, LR, abm or grid")
        ->required();
    cmd->add_option("--k", k, "period for D, L, R and LR");
    cmd->add_option("--l", l, "second period for LR");
    cmd->add_option("--a", a, "left-depth weight for abm");
    cmd->add_option("--b", b, "right-depth weight for abm");
    cmd->add_option("--m", m, "modulus for abm");
    cmd->add_option("--gens", gens, "grid generators \"r1,s1;r2,s2;...\"");
  }

  treq::RelationSpec build(CLI::App* cmd) const {
    auto has = [&](const char* name) { return cmd->count(name) > 0; };
    auto need = [&](std::initializer_list<const char*> required,
                    std::initializer_list<const char*> forbidden) {
      for (const char* name : required) {
        if (!has(name)) {
          throw std::invalid_argument("--relation " + relation + " requires " +
                                      name);
        }
      }
      for (const char* name : forbidden) {
        if (has(name)) {
          throw std::invalid_argument("--relation " + relation +
                                      " does not take " + name);
        }
      }
    };
    if (relation == "D") {
      need({"--k"}, {"--l", "--a", "--b", "--m", "--gens"});
      return treq::RelationSpec::depth(k);
    }
    if (relation == "L") {
      need({"--k"}, {"--l", "--a", "--b", "--m", "--gens"});
      return treq::RelationSpec::left(k);
    }
    if (relation == "R") {
      need({"--k"}, {"--l", "--a", "--b", "--m", "--gens"});
      return treq::RelationSpec::right(k);
    }
    if (relation == "LR") {
      need({"--k", "--l"}, {"--a", "--b", "--m", "--gens"});
      return treq::RelationSpec::left_right(k, l);
    }
    if (relation == "abm") {
      need({"--a", "--b", "--m"}, {"--k", "--l", "--gens"});
      return treq::RelationSpec::weighted(a, b, m);
    }
    if (relation == "grid") {
      need({"--gens"}, {"--k", "--l", "--a", "--b", "--m"});
      return treq::RelationSpec::from_grid(
          treq::canonical_grid(treq::parse_points(gens)));
    }
    throw std::invalid_argument("unknown relation: " + relation);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting and proving congruences of binary trees"};
  app.require_subcommand(1);

  // count
  auto* count_cmd =
      app.add_subcommand("count", "Count classes of n-leaf trees");
  RelationFlags count_flags;
  count_flags.add_to(count_cmd);
  int count_n = 0;
  int count_max_n = kDefaultMaxN;
  int count_threads = 0;
  count_cmd->add_option("--n", count_n, "number of leaves")->required();
  count_cmd->add_option("--max-n", count_max_n, "leaf-count guard");
  count_cmd->add_option("--threads", count_threads,
                        "worker threads (0 = machine)");

  // table
  auto* table_cmd =
      app.add_subcommand("table", "Print a class-count table as CSV or JSON");
  int table_number = 0;
  int table_max_n = kDefaultMaxN;
  int table_threads = 0;
  std::string table_format = "csv";
  table_cmd->add_option("table", table_number, "table number")
      ->required()
      ->check(CLI::Range(1, 4));
  table_cmd->add_option("--max-n", table_max_n, "largest leaf count");
  table_cmd->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--threads", table_threads,
                        "worker threads (0 = machine)");

  // grid
  auto* grid_cmd = app.add_subcommand("grid", "Grid algebra on subgroups of Z^2");
  grid_cmd->require_subcommand(1);
  std::string grid_gens, grid_with, grid_point;
  long long grid_p = 0;
  auto* canonical_cmd =
      grid_cmd->add_subcommand("canonical", "Canonical form of generators");
  canonical_cmd->add_option("--gens", grid_gens, "generators")->required();
  auto* contains_cmd =
      grid_cmd->add_subcommand("contains", "Membership of a point");
  contains_cmd->add_option("--gens", grid_gens, "generators")->required();
  contains_cmd->add_option("--point", grid_point, "point \"r,s\"")->required();
  auto* meet_cmd = grid_cmd->add_subcommand("meet", "Intersection of two grids");
  meet_cmd->add_option("--gens", grid_gens, "first grid")->required();
  meet_cmd->add_option("--with", grid_with, "second grid")->required();
  auto* join_cmd = grid_cmd->add_subcommand("join", "Join of two grids");
  join_cmd->add_option("--gens", grid_gens, "first grid")->required();
  join_cmd->add_option("--with", grid_with, "second grid")->required();
  auto* quotient_cmd =
      grid_cmd->add_subcommand("quotient", "Smith invariants of Z^2/grid");
  quotient_cmd->add_option("--gens", grid_gens, "generators")->required();
  auto* coatoms_cmd =
      grid_cmd->add_subcommand("coatoms", "All grids of prime index p");
  coatoms_cmd->add_option("--p", grid_p, "prime index")->required();
  auto* treealise_cmd = grid_cmd->add_subcommand(
      "treealise", "A tree pair whose difference span is the grid");
  treealise_cmd->add_option("--gens", grid_gens, "generators")->required();

  // identity
  auto* identity_cmd =
      app.add_subcommand("identity", "Check and compare bracketing identities");
  identity_cmd->require_subcommand(1);
  std::string id_lhs, id_rhs, id_quasigroup;
  std::string id_from_lhs, id_from_rhs, id_to_lhs, id_to_rhs;
  auto* check_cmd = identity_cmd->add_subcommand(
      "check", "Does a quasigroup satisfy an identity?");
  check_cmd->add_option("--lhs", id_lhs, "left bracketing")->required();
  check_cmd->add_option("--rhs", id_rhs, "right bracketing")->required();
  check_cmd->add_option("--quasigroup", id_quasigroup, "\"m:a,b;m:a,b;...\"")
      ->required();
  auto* consequence_cmd = identity_cmd->add_subcommand(
      "consequence", "Does one identity imply another?");
  consequence_cmd->add_option("--from-lhs", id_from_lhs, "premise left side")
      ->required();
  consequence_cmd->add_option("--from-rhs", id_from_rhs, "premise right side")
      ->required();
  consequence_cmd->add_option("--to-lhs", id_to_lhs, "conclusion left side")
      ->required();
  consequence_cmd->add_option("--to-rhs", id_to_rhs, "conclusion right side")
      ->required();

  // oracle
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Cross-check the three satisfaction methods");
  int oracle_n = 0;
  long long oracle_m = 0;
  long long oracle_budget = treq::kDefaultBudget;
  int oracle_threads = 0;
  oracle_cmd->add_option("--n", oracle_n, "number of leaves")->required();
  oracle_cmd->add_option("--m", oracle_m, "modulus")->required();
  oracle_cmd->add_option("--budget", oracle_budget, "brute-force budget");
  oracle_cmd->add_option("--threads", oracle_threads,
                         "worker threads (0 = machine)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count_cmd) {
      check_max_n(count_max_n);
      treq::RelationSpec spec = count_flags.build(count_cmd);
      std::cout << treq::count_classes(count_n, spec, count_threads, count_max_n)
                << "\n";
    } else if (*table_cmd) {
      check_max_n(table_max_n);
      treq::TableRequest req{table_number, table_max_n,
                             table_format == "json" ? treq::TableFormat::json
                                                    : treq::TableFormat::csv};
      treq::emit_table(req, std::cout, table_threads, table_max_n);
    } else if (*canonical_cmd) {
      std::cout << treq::grid_literal(
                       treq::canonical_grid(treq::parse_points(grid_gens)))
                << "\n";
    } else if (*contains_cmd) {
      treq::Grid g = treq::canonical_grid(treq::parse_points(grid_gens));
      bool inside = treq::contains(g, treq::parse_point(grid_point));
      std::cout << (inside ? "true" : "false") << "\n";
    } else if (*meet_cmd) {
      treq::Grid a = treq::canonical_grid(treq::parse_points(grid_gens));
      treq::Grid b = treq::canonical_grid(treq::parse_points(grid_with));
      std::cout << treq::grid_literal(treq::meet(a, b)) << "\n";
    } else if (*join_cmd) {
      treq::Grid a = treq::canonical_grid(treq::parse_points(grid_gens));
      treq::Grid b = treq::canonical_grid(treq::parse_points(grid_with));
      std::cout << treq::grid_literal(treq::join(a, b)) << "\n";
    } else if (*quotient_cmd) {
      treq::Grid g = treq::canonical_grid(treq::parse_points(grid_gens));
      auto [d1, d2] = treq::quotient_invariants(g);
      std::cout << d1 << "," << d2 << "\n";
    } else if (*coatoms_cmd) {
      for (const treq::Grid& g : treq::coatoms(grid_p)) {
        std::cout << treq::grid_literal(g) << "\n";
      }
    } else if (*treealise_cmd) {
      treq::Grid g = treq::canonical_grid(treq::parse_points(grid_gens));
      auto [lhs, rhs] = treq::treealise(g);
      std::cout << "lhs: "
                << treq::format_bracketing(lhs, treq::BracketingStyle::variables)
                << "\n"
                << "lhs structure: "
                << treq::format_bracketing(lhs,
                                           treq::BracketingStyle::structure_bits)
                << "\n"
                << "rhs: "
                << treq::format_bracketing(rhs, treq::BracketingStyle::variables)
                << "\n"
                << "rhs structure: "
                << treq::format_bracketing(rhs,
                                           treq::BracketingStyle::structure_bits)
                << "\n"
                << "leaves: " << lhs.leaf_count() << "\n"
                << "round-trip: OK\n";
    } else if (*check_cmd) {
      treq::Identity id = treq::make_identity(id_lhs, id_rhs);
      treq::LinearQuasigroup q = treq::parse_quasigroup(id_quasigroup);
      bool verdict = treq::satisfies(q, id, treq::CheckMethod::closed_form);
      treq::Grid fine = treq::fine_spectrum_grid(q);
      treq::Grid span = treq::span_difference(id.lhs.tree, id.rhs.tree);
      if (verdict != treq::subgrid(span, fine)) {
        throw treq::OracleError("closed form and grid containment disagree");
      }
      std::cout << (verdict ? "true" : "false") << "\n"
                << "fine-spectrum grid: " << treq::grid_literal(fine) << "\n"
                << "identity span: " << treq::grid_literal(span) << "\n";
    } else if (*consequence_cmd) {
      treq::Identity from = treq::make_identity(id_from_lhs, id_from_rhs);
      treq::Identity to = treq::make_identity(id_to_lhs, id_to_rhs);
      bool verdict = treq::consequence(from, to);
      treq::Grid from_span = treq::span_difference(from.lhs.tree, from.rhs.tree);
      treq::Grid to_span = treq::span_difference(to.lhs.tree, to.rhs.tree);
      std::cout << (verdict ? "true" : "false") << "\n"
                << "from span: " << treq::grid_literal(from_span) << "\n"
                << "to span: " << treq::grid_literal(to_span) << "\n";
    } else if (*oracle_cmd) {
      treq::OracleReport report =
          treq::cross_check(oracle_n, oracle_m, oracle_budget, oracle_threads);
      std::cout << "OK: " << report.unit_pairs << " unit pairs × "
                << report.bracketing_pairs << " bracketing pairs, all agree\n";
    }
    return 0;
  } catch (const treq::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const treq::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const treq::OracleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOracle;
  } catch (const treq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
