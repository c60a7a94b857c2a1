#include "ssg/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ssg/benchmarks.hpp"
#include "ssg/errors.hpp"
#include "ssg/report.hpp"
#include "ssg/system.hpp"

namespace ssg {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceOptions {
  std::string file;
  std::string bench;
  std::optional<std::uint64_t> seed;
  std::string order = "grevlex";
  std::uint32_t modulus = PrimeField::kDefaultModulus;
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  cmd->add_option("--bench", src.bench, "Generate a benchmark system: <cyclic|katsura>:<n>[:p]");
  cmd->add_option("--seed", src.seed, "Generate a random test system from this seed");
  cmd->add_option("--order", src.order, "Monomial order for generated systems")
      ->check(CLI::IsMember({"grevlex", "lex"}));
  cmd->add_option("--modulus", src.modulus, "Prime modulus for random systems");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SystemDescription parse_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_system(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

SystemDescription parse_bench(const std::string& spec, OrderKind order) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3)
    throw UsageError("--bench expects <family>:<n>[:p], got '" + spec + "'");
  try {
    BenchmarkFamily family = benchmark_family_from_string(parts[0]);
    int n = std::stoi(parts[1]);
    std::uint32_t p = parts.size() == 3 ? static_cast<std::uint32_t>(std::stoul(parts[2]))
                                        : PrimeField::kDefaultModulus;
    return gen_benchmark(family, n, p, order);
  } catch (const std::invalid_argument&) {
    throw UsageError("--bench: malformed number in '" + spec + "'");
  } catch (const std::out_of_range&) {
    throw UsageError("--bench: number out of range in '" + spec + "'");
  } catch (const ContractError& e) {
    throw UsageError(std::string("--bench: ") + e.what());
  }
}

SystemDescription load_source(const SourceOptions& src) {
  const int given = int{!src.file.empty()} + int{!src.bench.empty()} + int{src.seed.has_value()};
  if (given != 1) throw UsageError("give exactly one of <file>, --bench or --seed");
  const OrderKind order = order_kind_from_string(src.order);
  if (!src.file.empty()) return parse_file(src.file);
  if (!src.bench.empty()) return parse_bench(src.bench, order);
  RandomSystemParams params;
  params.order = order;
  params.modulus = src.modulus;
  try {
    return random_system(*src.seed, params);
  } catch (const ContractError& e) {
    throw UsageError(e.what());
  }
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

int run_gb(const SourceOptions& src, const std::string& algorithm, RunOptions options, bool raw,
           const std::string& stats_path, std::ostream& out, std::ostream& err) {
  options.algorithm = algorithm_from_string(algorithm);
  if (options.certify && options.algorithm != Algorithm::ssg)
    throw UsageError("--certify requires --algorithm ssg");
  const SystemDescription desc = load_source(src);
  const RunReport report = run_system(desc, options);

  if (raw) {
    out << format_ring_header(desc) << "\n";
    for (const Polynomial& p : report.raw) out << format_polynomial(p, desc.variables) << "\n";
  } else {
    out << format_basis(report.basis, desc);
  }
  if (!stats_path.empty()) {
    std::ofstream stats(stats_path);
    if (!stats) throw UsageError("cannot write '" + stats_path + "'");
    stats << stats_to_json(report.stats);
  }
  const Verdicts& v = report.verdicts;
  if (v.gb_check) err << "gb-check: " << verdict(*v.gb_check) << "\n";
  if (v.ideal_equality) err << "ideal-equality: " << verdict(*v.ideal_equality) << "\n";
  if (v.certify)
    err << "certify: " << verdict(*v.certify) << " (" << report.certified_count
        << " labeled polynomials)\n";
  return v.all_passed() ? kExitOk : kExitVerifyFailed;
}

int run_verify(const std::string& system_path, const std::string& basis_path, std::ostream& out) {
  const SystemDescription system = parse_file(system_path);
  const SystemDescription basis = parse_file(basis_path);
  if (!(system.ring == basis.ring) || system.variables != basis.variables)
    throw UsageError("ring line of '" + basis_path + "' does not match '" + system_path + "'");
  const BasisCheck check = check_basis(system.ring, system.generators, basis.generators);
  out << "gb-check: " << verdict(check.groebner) << "\n";
  out << "ideal-equality: " << verdict(check.same_ideal) << "\n";
  return check.groebner && check.same_ideal ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases over prime fields with a signature-based algorithm", "ssg"};
  app.require_subcommand(1);

  SourceOptions gb_src;
  std::string algorithm = "ssg";
  std::string stats_path;
  bool raw = false;
  RunOptions options;
  auto* gb = app.add_subcommand("gb", "Compute the reduced Groebner basis of a system");
  gb->add_option("file", gb_src.file, "System file");
  add_source_options(gb, gb_src);
  gb->add_option("--algorithm", algorithm, "ssg (default) or buchberger")
      ->check(CLI::IsMember({"ssg", "buchberger"}));
  gb->add_flag("--raw", raw, "Print the unreduced output set, zeros and seeds included");
  gb->add_flag("--certify", options.certify, "Track cofactors and certify every labeled polynomial");
  gb->add_flag("--check-invariants", options.engine.check_invariants, "Assert the loop invariants");
  gb->add_flag("--verify", options.verify, "Cross-check the result against the Buchberger oracle");
  gb->add_flag("--sort-degree", options.engine.sort_by_degree, "Process generators by ascending degree");
  gb->add_option("--iteration-limit", options.engine.iteration_limit,
                 "Main-loop iterations allowed per increment");
  gb->add_option("--stats", stats_path, "Write run statistics as JSON to this path");

  std::string system_path;
  std::string basis_path;
  auto* verify = app.add_subcommand("verify", "Check that a basis is a Groebner basis of a system");
  verify->add_option("system", system_path, "System file")->required();
  verify->add_option("basis", basis_path, "Basis file")->required();

  SourceOptions gen_src;
  auto* generate = app.add_subcommand("generate", "Print a benchmark or random system");
  add_source_options(generate, gen_src);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*gb) return run_gb(gb_src, algorithm, options, raw, stats_path, out, err);
    if (*verify) return run_verify(system_path, basis_path, out);
    out << format_system(load_source(gen_src));
    return kExitOk;
  } catch (const UsageError& e) {
    err << "ssg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "ssg: invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "ssg: internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace ssg
