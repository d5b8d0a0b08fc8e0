#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "hgls/error.hpp"
#include "report.hpp"

using hgls::cli::Json;

namespace {

struct Output {
  bool json = false;

  int emit(const Json& j, int code = 0) const {
    if (json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << hgls::cli::render_plain(j);
    return code;
  }

  int fail(const std::string& code, const std::string& message) const {
    Json j{{"error", hgls::cli::error_json(code, message)}};
    if (json)
      std::cout << j.dump(2) << "\n";
    else
      std::cerr << "error: " << message << "\n";
    return hgls::cli::exit_code_for(code);
  }
};

std::vector<hgls::MonomialForm> parse_forms(const std::vector<std::string>& texts) {
  std::vector<hgls::MonomialForm> out;
  for (const auto& t : texts) out.push_back(hgls::parse_form(t));
  return out;
}

Json batch_entry(std::size_t line, const std::string& input, const hgls::cli::ReportOptions& opts) {
  Json e{{"line", line}, {"input", input}};
  try {
    e["report"] = hgls::cli::analyze(hgls::parse_gamma(input), opts);
  } catch (const hgls::Error& err) {
    e["error"] = hgls::cli::error_json(err.code(), err.what());
  }
  return e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergeometric Landau-Ginzburg toolkit"};
  app.require_subcommand(1);
  Output out;
  hgls::cli::ReportOptions opts;
  std::vector<std::string> minimal_forms, gkz_forms;
  std::string gamma_text, file, model_file;
  std::size_t series_terms = 0, jobs = 1;
  bool check_annihilation = false;

  auto add_report_flags = [&](CLI::App* sub) {
    sub->add_flag("--json", out.json, "JSON output");
    sub->add_flag("--hodge", opts.hodge, "Hodge numbers");
    sub->add_flag("--model", opts.model, "toric model and polytope data");
    sub->add_flag("--cone", opts.cone, "cone census, weight dimensions and cohomology basis");
    sub->add_option("--minimal-op", minimal_forms, "minimal operator of the form k;b1,...,bd")->allow_extra_args(false);
    sub->add_option("--gkz-op", gkz_forms, "GKZ operator of the form k;b1,...,bd")->allow_extra_args(false);
    sub->add_flag("--monodromy", opts.monodromy, "Levelt monodromy triple");
    sub->add_option("--series", series_terms, "series coefficients up to this order");
    sub->add_flag("--covering", opts.covering, "quadrilateral covering data");
    sub->add_flag("--validate", opts.validate, "cross-checks between modules");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "report for one gamma vector");
  analyze->add_option("--gamma", gamma_text, "comma-separated gamma vector")->required();
  analyze->add_option("--model-file", model_file, "model JSON whose matrix A replaces the canonical choice");
  add_report_flags(analyze);

  CLI::App* batch = app.add_subcommand("batch", "report for every gamma vector in a file");
  batch->add_option("--file", file, "one gamma vector per line, # starts a comment")->required();
  batch->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  add_report_flags(batch);

  CLI::App* series = app.add_subcommand("series", "period series coefficients");
  series->add_option("--gamma", gamma_text, "comma-separated gamma vector")->required();
  series->add_option("--terms", series_terms, "highest coefficient index")->required();
  series->add_flag("--check-annihilation", check_annihilation, "apply the hypergeometric operator");
  series->add_flag("--json", out.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze || *batch) {
      opts.minimal_ops = parse_forms(minimal_forms);
      opts.gkz_ops = parse_forms(gkz_forms);
      if (series_terms > 0) opts.series_terms = series_terms;
    }

    if (*analyze) {
      hgls::GammaVector g = hgls::parse_gamma(gamma_text);
      if (!model_file.empty()) {
        std::ifstream in(model_file);
        if (!in) return out.fail("IOError", "cannot open " + model_file);
        Json j = Json::parse(in, nullptr, false);
        if (j.is_discarded()) return out.fail("InvalidInput", "model file is not JSON");
        opts.matrix = hgls::cli::matrix_from_model_json(j, g);
      }
      return out.emit(hgls::cli::analyze(g, opts));
    }

    if (*series) {
      hgls::GammaVector g = hgls::parse_gamma(gamma_text);
      Json j{{"gamma", g.entries()}, {"series", hgls::cli::series_section(g, series_terms, check_annihilation)}};
      return out.emit(j);
    }

    std::ifstream in(file);
    if (!in) return out.fail("IOError", "cannot open " + file);
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
      line = line.substr(0, line.find('#'));
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
      lines.emplace_back(n, line);
    }

    std::vector<Json> entries(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < lines.size();) entries[i] = batch_entry(lines[i].first, lines[i].second, opts);
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < std::min(jobs, lines.size()); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    if (out.json) return out.emit(Json{{"reports", entries}});
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) std::cout << "---\n";
      std::cout << hgls::cli::render_plain(entries[i]);
    }
    return 0;
  } catch (const hgls::Error& e) {
    return out.fail(e.code(), e.what());
  } catch (const std::exception& e) {
    return out.fail("Internal", e.what());
  }
}
