#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "tautint/detail/rng.hpp"
#include "tautint/io.hpp"
#include "tautint/tautint.hpp"

namespace {

struct CrossCheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Human, Json, Tsv };

Format parse_format(const std::string& text) {
  if (text == "human") return Format::Human;
  if (text == "json") return Format::Json;
  if (text == "tsv") return Format::Tsv;
  throw std::invalid_argument("unknown format: " + text);
}

using Fields = std::vector<std::pair<std::string, std::string>>;

void print_fields(const Fields& fields, Format format) {
  switch (format) {
    case Format::Human: {
      std::size_t width = 0;
      for (const auto& [name, value] : fields) {
        width = std::max(width, name.size());
      }
      for (const auto& [name, value] : fields) {
        std::cout << name << std::string(width - name.size() + 2, ' ')
                  << value << "\n";
      }
      return;
    }
    case Format::Json: {
      nlohmann::ordered_json doc;
      for (const auto& [name, value] : fields) doc[name] = value;
      std::cout << doc.dump() << "\n";
      return;
    }
    case Format::Tsv: {
      std::string header;
      std::string row;
      for (const auto& [name, value] : fields) {
        if (!header.empty()) {
          header += '\t';
          row += '\t';
        }
        header += name;
        row += value;
      }
      std::cout << header << "\n" << row << "\n";
      return;
    }
  }
}

Fields value_fields(const tautint::SymbolicValue& value) {
  return {{"scalar", tautint::format_rational(value.scalar)},
          {"omega2", tautint::format_rational(value.omega2)},
          {"phi", tautint::format_rational(value.phi)},
          {"hnt", tautint::format_rational(value.hnt)}};
}

struct GraphArgs {
  std::string file;
  std::string genus;
  bool oracle = false;
  std::uint64_t seed = 2026;
  std::string format = "human";
};

int run_graph(const GraphArgs& args) {
  const auto graph = tautint::load_graph_file(args.file);
  const auto genus = tautint::parse_rational(args.genus);
  const auto value = tautint::evaluate_graph(graph, genus);
  if (args.oracle) {
    tautint::detail::Rng rng(args.seed);
    for (int trial = 0; trial < 8; ++trial) {
      const auto contracted = tautint::contract_degree_two(
          graph, [&rng](std::size_t count) {
            return static_cast<std::size_t>(
                rng.below(static_cast<long>(count)));
          });
      if (!(tautint::evaluate_graph(contracted, genus) == value)) {
        throw CrossCheckFailure(
            "randomized contraction order changed the value");
      }
    }
  }
  print_fields(value_fields(value), parse_format(args.format));
  return 0;
}

struct IntersectArgs {
  std::string file;
  std::string genus;
  bool oracle = false;
  int jobs = 1;
  std::string format = "human";
};

int run_intersect(const IntersectArgs& args) {
  const auto tensor = tautint::load_tensor_file(args.file);
  const auto genus = tautint::parse_rational(args.genus);
  const int r = tensor.rank();
  const int n = tensor.factor_count();
  tautint::SymbolicValue value;
  if (n == r) {
    value = tautint::scalar_value(
        tautint::intersect_geometric(tensor, genus, args.jobs));
  } else if (n == r + 1) {
    value = tautint::intersect_arithmetic(tensor, genus, args.jobs);
  } else {
    throw std::invalid_argument(
        "factor count must be r or r+1 for a rank-r tensor");
  }
  if (args.oracle) {
    const auto expansion = tautint::expand_bruteforce(tensor, genus, args.jobs);
    if (!(expansion == value)) {
      throw CrossCheckFailure("closed form disagrees with the expansion: " +
                              tautint::format_value(value) + " vs " +
                              tautint::format_value(expansion));
    }
  }
  print_fields(value_fields(value), parse_format(args.format));
  return 0;
}

struct HeightArgs {
  std::string multipliers;
  long genus = 0;
  long field_degree = 1;
  std::string eval;
  std::string format = "human";
};

int run_height(const HeightArgs& args) {
  const tautint::PullbackSpec spec{tautint::parse_multipliers(args.multipliers)};
  const tautint::CurveParams params{args.genus, args.field_degree};
  const auto hc = tautint::height_coefficients(spec, params);
  if (!args.eval.empty()) {
    const auto invariants = tautint::parse_invariants(args.eval);
    const tautint::Rational height =
        hc.prefactor * (hc.a * invariants.omega2 + hc.b * invariants.phi +
                        hc.c * invariants.hnt);
    print_fields({{"height", tautint::format_rational(height)}},
                 parse_format(args.format));
    return 0;
  }
  print_fields({{"prefactor", tautint::format_rational(hc.prefactor)},
                {"a", tautint::format_rational(hc.a)},
                {"b", tautint::format_rational(hc.b)},
                {"c", tautint::format_rational(hc.c)}},
               parse_format(args.format));
  return 0;
}

struct BoundArgs {
  std::string multipliers;
  std::string genus;
  std::string matrix_file;
  bool alternating = false;
  int jobs = 1;
  std::string format = "human";
};

int run_bound(const BoundArgs& args) {
  const tautint::PullbackSpec spec{tautint::parse_multipliers(args.multipliers)};
  const auto genus = tautint::parse_rational(args.genus);
  if (args.alternating == !args.matrix_file.empty()) {
    throw std::invalid_argument(
        "give exactly one of a matrix file or --alternating");
  }
  const tautint::BoundMatrix matrix =
      args.alternating
          ? tautint::alternating_cycle_matrix(spec.rank(), spec)
          : tautint::load_bound_matrix_file(args.matrix_file);
  if (!tautint::check_constraint(matrix, genus)) {
    throw std::invalid_argument(
        "matrix violates the constraint g*trace = off-diagonal sum");
  }
  const auto value = tautint::hodge_form(spec, matrix, genus, args.jobs);
  const auto ratio = tautint::derive_phi_bound(value);
  Fields fields{{"ratio",
                 ratio ? tautint::format_rational(*ratio) : std::string("none")}};
  for (auto& field : value_fields(value)) fields.push_back(std::move(field));
  print_fields(fields, parse_format(args.format));
  return 0;
}

struct VerifyArgs {
  std::string suite;
  int max_r = 4;
  std::uint64_t seed = 2026;
  int jobs = 1;
};

int run_verify(const VerifyArgs& args) {
  const tautint::SuiteOptions options{args.max_r, args.seed, args.jobs};
  const auto results = tautint::run_suite(args.suite, options);
  bool all_pass = true;
  for (const auto& result : results) {
    std::cout << (result.pass ? "PASS " : "FAIL ") << result.name << " "
              << result.detail << "\n";
    all_pass = all_pass && result.pass;
  }
  std::cout << (all_pass ? "ok: " : "FAILED: ") << results.size()
            << " checks\n";
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact intersection numbers of tautological adelic bundles on "
      "self-products of a curve, with derived heights and bounds"};
  app.require_subcommand(1);

  GraphArgs graph_args;
  auto* graph_cmd = app.add_subcommand(
      "graph", "Evaluate an intersection graph at a given genus");
  graph_cmd->add_option("file", graph_args.file, "graph JSON file")->required();
  graph_cmd->add_option("--genus", graph_args.genus, "genus as a fraction")
      ->required();
  graph_cmd->add_flag("--oracle", graph_args.oracle,
                      "re-evaluate under randomized contraction orders");
  graph_cmd->add_option("--seed", graph_args.seed, "seed for --oracle");
  graph_cmd->add_option("--format", graph_args.format, "human|json|tsv");

  IntersectArgs intersect_args;
  auto* intersect_cmd = app.add_subcommand(
      "intersect", "Evaluate a coefficient tensor with the closed-form engine");
  intersect_cmd->add_option("file", intersect_args.file, "tensor JSON file")
      ->required();
  intersect_cmd
      ->add_option("--genus", intersect_args.genus, "genus as a fraction")
      ->required();
  intersect_cmd->add_flag("--oracle", intersect_args.oracle,
                          "cross-check against the multilinear expansion");
  intersect_cmd->add_option("--jobs", intersect_args.jobs, "parallel width");
  intersect_cmd->add_option("--format", intersect_args.format,
                            "human|json|tsv");

  HeightArgs height_args;
  auto* height_cmd = app.add_subcommand(
      "height", "Height coefficients of a tautological cycle");
  height_cmd
      ->add_option("--m", height_args.multipliers,
                   "comma-separated nonzero integers")
      ->required();
  height_cmd->add_option("--genus", height_args.genus, "integer genus >= 2")
      ->required();
  height_cmd->add_option("--dK", height_args.field_degree,
                         "number field degree >= 1");
  height_cmd->add_option(
      "--eval", height_args.eval,
      "evaluate numerically: omega2=<frac>,phi=<frac>,hnt=<frac>");
  height_cmd->add_option("--format", height_args.format, "human|json|tsv");

  BoundArgs bound_args;
  auto* bound_cmd = app.add_subcommand(
      "bound", "Lower bound for omega^2 from a coefficient matrix");
  bound_cmd
      ->add_option("--m", bound_args.multipliers,
                   "comma-separated nonzero integers")
      ->required();
  bound_cmd->add_option("--genus", bound_args.genus, "genus as a fraction")
      ->required();
  bound_cmd->add_option("matrix", bound_args.matrix_file, "matrix JSON file");
  bound_cmd->add_flag("--alternating", bound_args.alternating,
                      "use the alternating cycle matrix (even rank >= 4)");
  bound_cmd->add_option("--jobs", bound_args.jobs, "parallel width");
  bound_cmd->add_option("--format", bound_args.format, "human|json|tsv");

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the self-verification suites");
  verify_cmd->add_option("--suite", verify_args.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(tautint::suite_names()));
  verify_cmd->add_option("--max-r", verify_args.max_r,
                         "cap on the tensor rank");
  verify_cmd->add_option("--seed", verify_args.seed, "random seed");
  verify_cmd->add_option("--jobs", verify_args.jobs, "parallel width");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (graph_cmd->parsed()) return run_graph(graph_args);
    if (intersect_cmd->parsed()) return run_intersect(intersect_args);
    if (height_cmd->parsed()) return run_height(height_args);
    if (bound_cmd->parsed()) return run_bound(bound_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
  } catch (const CrossCheckFailure& e) {
    std::cerr << "cross-check failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
