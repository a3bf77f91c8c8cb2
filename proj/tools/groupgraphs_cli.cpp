// Command-line front end: build the graphs of a finite group, analyze their
// invariants, print exact order spectra, and run the verification corpus.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "groupgraphs/groupgraphs.hpp"

namespace {

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
  }
}

gg::SimpleGraph build_kind(const gg::GroupSpec& spec, const std::string& kind, gg::i64 cap) {
  using namespace gg;
  if (kind == "power") return power_graph(realize(spec, cap));
  if (kind == "supergraph") return order_supergraph(realize(spec, cap));
  if (kind == "proper-power") return proper_graph(power_graph(realize(spec, cap)));
  if (kind == "proper-supergraph") return proper_graph(order_supergraph(realize(spec, cap)));
  if (kind == "order-graph") return order_graph(spec, cap);
  if (kind == "prime-graph") return prime_graph(spec, cap);
  throw ConfigError("unknown graph kind: " + kind);
}

int run(int argc, char** argv) {
  CLI::App app{"power graphs and order supergraphs of finite groups"};
  app.require_subcommand(1);

  std::string spec_text, kind = "supergraph", format = "json", out_path;
  gg::i64 max_group = gg::kDefaultRealizeCap;
  int max_exact = gg::kDefaultExactCap;
  int max_perfect = gg::kDefaultPerfectCap;
  std::string corpus_path, fixtures_path;

  auto add_common = [&](CLI::App* cmd, bool with_kind) {
    cmd->add_option("spec", spec_text, "group spec, e.g. Z6, D12, S5, Z2xZ4, SG(16,3)")
        ->required();
    if (with_kind)
      cmd->add_option("--kind", kind,
                      "power | supergraph | proper-power | proper-supergraph | "
                      "order-graph | prime-graph");
    cmd->add_option("--max-group-size", max_group, "realization size cap");
  };

  CLI::App* build = app.add_subcommand("build", "construct a graph and emit JSON or DOT");
  add_common(build, true);
  build->add_option("--format", format, "json | dot");
  build->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* exportc = app.add_subcommand("export", "like build, but writes to a file");
  add_common(exportc, true);
  exportc->add_option("--format", format, "json | dot");
  exportc->add_option("--out", out_path, "output path")->required();

  CLI::App* analyze = app.add_subcommand("analyze", "structural invariant report");
  add_common(analyze, true);
  analyze->add_option("--max-exact", max_exact, "exact solver vertex cap");
  analyze->add_option("--max-perfect", max_perfect, "perfectness search vertex cap");
  analyze->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* spectrum = app.add_subcommand("spectrum", "exact order spectrum as JSON");
  add_common(spectrum, false);
  spectrum->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run the theorem-check corpus");
  verify->add_option("--corpus", corpus_path, "corpus config (JSON); defaults built in");
  verify->add_option("--fixtures", fixtures_path, "sporadic fixture file override");
  verify->add_option("--format", format, "json | table");
  verify->add_option("--out", out_path, "output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  if (build->parsed() || exportc->parsed()) {
    gg::GroupSpec spec = gg::parse_group_spec(spec_text);
    gg::SimpleGraph g = build_kind(spec, kind, max_group);
    if (format == "json") {
      auto j = gg::graph_to_json(g);
      j["group"] = spec.to_string();
      j["kind"] = kind;
      write_output(j.dump(1), out_path);
    } else if (format == "dot") {
      write_output(gg::graph_to_dot(g), out_path);
    } else {
      throw gg::ConfigError("unknown format: " + format);
    }
    return 0;
  }

  if (analyze->parsed()) {
    gg::GroupSpec spec = gg::parse_group_spec(spec_text);
    gg::SimpleGraph g = build_kind(spec, kind, max_group);
    gg::GraphReport rep = gg::analyze_graph(g, max_exact, max_perfect);
    nlohmann::ordered_json j;
    j["group"] = spec.to_string();
    j["kind"] = kind;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["report"] = gg::report_to_json(rep);
    write_output(j.dump(1), out_path);
    return 0;
  }

  if (spectrum->parsed()) {
    gg::GroupSpec spec = gg::parse_group_spec(spec_text);
    auto j = gg::spectrum_to_json(gg::spectrum_of(spec, max_group));
    j["group"] = spec.to_string();
    write_output(j.dump(1), out_path);
    return 0;
  }

  if (verify->parsed()) {
    gg::CorpusConfig cfg;
    if (!corpus_path.empty()) {
      std::ifstream in(corpus_path);
      if (!in) throw gg::ConfigError("cannot open corpus config: " + corpus_path);
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw gg::ConfigError(std::string("corpus config: ") + e.what());
      }
      cfg = gg::CorpusConfig::from_json(j);
    }
    if (!fixtures_path.empty()) cfg.fixtures_path = fixtures_path;
    std::vector<gg::CheckResult> results = gg::run_corpus(cfg);
    if (format == "json") write_output(gg::check_results_to_json(results).dump(1), out_path);
    else if (format == "table") write_output(gg::check_results_table(results), out_path);
    else throw gg::ConfigError("unknown format: " + format);
    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.passed();
    return all_pass ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gg::ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return 2;
  } catch (const gg::ConfigError& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 2;
  } catch (const gg::DataError& e) {
    std::cerr << "error: data: " << e.what() << "\n";
    return 2;
  } catch (const gg::CapExceeded& e) {
    std::cerr << "error: cap: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
