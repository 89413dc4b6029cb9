// Command-line front door: parse spec files, run pipeline stages, cache and
// emit reports.  Exit codes: 0 ok, 1 property violation, 2 input error,
// 3 internal invariant breach.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "trideco/report.hpp"
#include "trideco/specfile.hpp"
#include "trideco/zoo.hpp"

namespace {

using namespace trideco;

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunConfig {
  std::string command;
  std::string input;
  std::uint64_t seed = 0;
  int max_step = 6;
  int jobs = 1;
  std::string format = "text";
  std::string cache_dir;
  bool strict = false;
};

template <class F>
Json run_command(Bundle<F> bundle, const RunConfig& cfg) {
  Json out;
  out["schema"] = kReportSchema;
  out["command"] = cfg.command;
  out["name"] = bundle.name;
  out["field"] = bundle.alg->field.name();
  out["seed"] = cfg.seed;
  if (cfg.command == "verify") {
    out.update(report_verify(bundle));
    return out;
  }
  if (!bundle.has_triangular)
    throw input_error("command '" + cfg.command + "' needs a triangular section in the spec");
  auto tr = verify_triangular(bundle.td);
  if (!tr.pass)
    throw input_error("triangular decomposition fails verification: " + tr.failures.front());
  HwEngine<F> eng(std::move(bundle), cfg.seed, 64, false, cfg.jobs);
  PipelineOptions opt{cfg.seed, cfg.max_step, cfg.jobs, cfg.strict};
  if (cfg.command == "simples") out.update(report_simples(eng));
  else if (cfg.command == "matrices") out.update(report_matrices(eng));
  else if (cfg.command == "bgg") out.update(report_bgg(eng));
  else if (cfg.command == "tilting") out.update(report_tilting(eng));
  else if (cfg.command == "kl") out.update(report_kl(eng, cfg.max_step));
  else if (cfg.command == "blocks") out.update(report_blocks(eng));
  else if (cfg.command == "report") out.update(full_report(eng, opt));
  else throw input_error("unknown command: " + cfg.command);
  return out;
}

int exit_code_for(const RunConfig& cfg, const Json& report) {
  if (hard_violations(report)) return 1;
  if (cfg.strict && informational_negatives(report) > 0) return 1;
  return 0;
}

int run_pipeline(const RunConfig& cfg) {
  std::string spec_text = read_file(cfg.input);
  std::string cache_key;
  std::filesystem::path cache_path;
  if (!cfg.cache_dir.empty()) {
    std::ostringstream key;
    key << cfg.command << '\0' << cfg.seed << '\0' << cfg.max_step << '\0' << cfg.strict << '\0'
        << cfg.format << '\0' << spec_text;
    cache_key = std::to_string(fnv1a64(key.str()));
    std::filesystem::create_directories(cfg.cache_dir);
    cache_path = std::filesystem::path(cfg.cache_dir) / (cache_key + ".out");
    if (std::filesystem::exists(cache_path)) {
      std::ifstream in(cache_path, std::ios::binary);
      std::string line;
      std::getline(in, line);
      std::ostringstream rest;
      rest << in.rdbuf();
      std::cout << rest.str();
      return std::stoi(line);
    }
  }
  AnyBundle any = bundle_from_json(parse_spec_text(spec_text));
  Json report = std::visit([&](auto b) { return run_command(std::move(b), cfg); }, std::move(any));
  std::string payload =
      cfg.format == "json" ? report.dump(2) + "\n" : render_text(report);
  int code = exit_code_for(cfg, report);
  if (!cache_path.empty()) {
    std::ofstream out(cache_path, std::ios::binary);
    out << code << "\n" << payload;
  }
  std::cout << payload;
  return code;
}

int run_zoo(const std::string& name, const std::vector<std::string>& params,
            const std::string& emit, const std::string& c_params, int generic_attempt) {
  Json doc;
  auto want_int = [&](std::size_t i, const char* what) {
    if (params.size() <= i) throw input_error(std::string("missing parameter: ") + what);
    return std::stoi(params[i]);
  };
  if (name == "truncated_square") {
    doc = bundle_to_json(truncated_square(RationalField{}, want_int(0, "n")));
  } else if (name == "pathological4") {
    doc = bundle_to_json(pathological4(RationalField{}));
  } else if (name == "degenerate_triple") {
    doc = bundle_to_json(degenerate_triple(RationalField{}));
  } else if (name == "coinvariant_skew") {
    int m = want_int(0, "m");
    if (m == 2) {
      doc = bundle_to_json(coinvariant_skew(RationalField{}, 2, Rational(-1)));
    } else {
      CyclotomicField field(m);
      doc = bundle_to_json(coinvariant_skew(field, m, field.zeta()));
    }
  } else if (name == "restricted_sl2") {
    doc = bundle_to_json(restricted_sl2(want_int(0, "p")));
  } else if (name == "rrca_cyclic") {
    int ell = want_int(0, "l");
    CyclotomicField field(ell);
    std::vector<CycloElem> c;
    if (!c_params.empty()) {
      std::stringstream ss(c_params);
      std::string tok;
      while (std::getline(ss, tok, ',')) c.push_back(field.parse(tok));
      if (static_cast<int>(c.size()) != ell - 1)
        throw input_error("rrca_cyclic needs l-1 comma-separated parameters");
    } else {
      c = rrca_parameters(ell, generic_attempt);
    }
    doc = bundle_to_json(rrca_cyclic(ell, c));
  } else if (name == "small_quantum_sl2") {
    doc = bundle_to_json(small_quantum_sl2(want_int(0, "l")));
  } else {
    throw input_error("unknown zoo constructor: " + name);
  }
  std::string payload = doc.dump(2) + "\n";
  if (emit.empty() || emit == "-") {
    std::cout << payload;
  } else {
    std::ofstream out(emit, std::ios::binary);
    if (!out) throw input_error("cannot write " + emit);
    out << payload;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact highest-weight theory for graded algebras with triangular decomposition"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<CLI::App*> pipeline_cmds;
  for (const char* name : {"verify", "simples", "matrices", "bgg", "tilting", "kl", "blocks",
                           "report"}) {
    CLI::App* sub = app.add_subcommand(name, std::string("run the ") + name + " stage");
    sub->add_option("spec", cfg.input, "algebra spec file")->required();
    sub->add_option("--seed", cfg.seed, "random seed (default 0)");
    sub->add_option("--max-step", cfg.max_step, "resolution depth bound");
    sub->add_option("--jobs", cfg.jobs, "parallel workers for per-label work");
    sub->add_option("--format", cfg.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cache-dir", cfg.cache_dir, "content-addressed report cache");
    sub->add_flag("--strict", cfg.strict, "escalate informational negatives to exit 1");
    pipeline_cmds.push_back(sub);
  }

  std::string zoo_name, zoo_emit, zoo_c;
  std::vector<std::string> zoo_params;
  int zoo_attempt = 0;
  CLI::App* zoo = app.add_subcommand("zoo", "emit a built-in example algebra as a spec file");
  zoo->add_option("constructor", zoo_name,
                  "truncated_square | pathological4 | degenerate_triple | coinvariant_skew | "
                  "restricted_sl2 | rrca_cyclic | small_quantum_sl2")
      ->required();
  zoo->add_option("params", zoo_params, "numeric parameters");
  zoo->add_option("--emit", zoo_emit, "output path (default stdout)");
  zoo->add_option("--c", zoo_c, "rrca parameters, comma separated");
  zoo->add_option("--generic-attempt", zoo_attempt, "rrca deterministic parameter ladder index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (zoo->parsed()) return run_zoo(zoo_name, zoo_params, zoo_emit, zoo_c, zoo_attempt);
    for (std::size_t i = 0; i < pipeline_cmds.size(); ++i)
      if (pipeline_cmds[i]->parsed()) {
        cfg.command = pipeline_cmds[i]->get_name();
        return run_pipeline(cfg);
      }
    std::cerr << "no command given\n";
    return 2;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::kInput:
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
      case ErrorKind::kProperty:
        std::cerr << "property violation: " << e.what() << "\n";
        return 1;
      default:
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
