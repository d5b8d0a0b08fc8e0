#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgls/gamma.hpp"
#include "hgls/gauss_manin.hpp"

namespace hgls::cli {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  bool hodge = false;
  bool model = false;
  bool cone = false;
  bool monodromy = false;
  bool covering = false;
  bool validate = false;
  std::vector<MonomialForm> minimal_ops;
  std::vector<MonomialForm> gkz_ops;
  std::optional<std::size_t> series_terms;
  bool check_annihilation = true;
  // unimodular matrix to use instead of the canonical one
  std::optional<IntMatrix> matrix;

  // with no explicit section the light sections are all emitted
  bool any_section() const { return hodge || model || cone || monodromy || covering; }
};

// {"gamma": [...], "A": [[...]], ...}; throws Error("InvalidInput")
IntMatrix matrix_from_model_json(const Json& j, const GammaVector& g);

Json error_json(const std::string& code, const std::string& message);

// Throws hgls::Error for inputs that make the whole report meaningless.
Json analyze(const GammaVector& g, const ReportOptions& options);

Json series_section(const GammaVector& g, std::size_t terms, bool check_annihilation);

// "key.sub: value" lines of a report
std::string render_plain(const Json& j);

// 2 for invalid input, 3 for degenerate systems, 1 otherwise
int exit_code_for(const std::string& error_code);

}  // namespace hgls::cli
