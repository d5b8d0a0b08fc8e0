#include "report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hgls/covering.hpp"
#include "hgls/error.hpp"
#include "hgls/hodge.hpp"
#include "hgls/monodromy.hpp"
#include "hgls/ore.hpp"
#include "hgls/series.hpp"
#include "hgls/toric.hpp"

namespace hgls::cli {

namespace {

Json rationals(const std::vector<BigRational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json matrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

Json int_matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_si());
    rows.push_back(r);
  }
  return rows;
}

Json multiplicities(const std::map<long, long>& m) {
  Json a = Json::array();
  for (auto [n, c] : m) a.push_back(Json::array({n, c}));
  return a;
}

Json operator_json(const OreOperator& op) {
  Json j;
  j["order"] = op.order();
  j["text"] = op.to_string();
  j["coefficients"] = op.coefficient_strings();
  return j;
}

template <class F>
Json guarded(F&& f) {
  try {
    return Json(f());
  } catch (const Error& e) {
    return Json{{"error", error_json(e.code(), e.what())}};
  }
}

Json hodge_section(const GammaVector& g) {
  Json j;
  j["weight"] = hodge_weight(g);
  j["polynomial"] = hodge_polynomial(g).to_string("T");
  Json nums = Json::array();
  for (const auto& h : hodge_numbers(g)) nums.push_back({{"p", h.p}, {"q", h.q}, {"h", h.h}});
  j["numbers"] = nums;
  return j;
}

Json model_section(const ToricModel& model) {
  Json j;
  j["dimension"] = model.d();
  j["A"] = int_matrix_json(model.A);
  j["m"] = model.m;
  j["k"] = model.k;
  j["Gamma"] = to_string(gamma_constant(model.gamma));
  LatticePolytope p = newton_polytope(model);
  j["vertices"] = p.vertices();
  j["is_simplex"] = p.is_simplex();
  j["interior_points"] = p.interior_points();
  bool quasi = true;
  for (const auto& v : quasi_regularity_check(model)) quasi = quasi && v.passes;
  j["quasi_regular"] = quasi;
  j["hessian_determinant"] = hessian_determinant(model).get_str();
  j["lattice_primitive"] = lattice_primitivity(model);
  j["singular_point_at_t_1"] = guarded([&] {
    std::vector<BigRational> u;
    for (long x : model.gamma.entries()) u.emplace_back(x);
    SingularPoint s = singular_point(model, u);
    Json sp;
    sp["rational"] = s.rational;
    if (s.rational) sp["x"] = rationals(s.x);
    return sp;
  });
  return j;
}

Json cone_section(const CohomologyBasis& basis) {
  const auto& p = basis.polytope();
  const long d = static_cast<long>(basis.model().d());
  Json levels = Json::array();
  for (long k = 1; k <= d; ++k) {
    std::size_t points = 0, interior = 0;
    for (const auto& m : p.lattice_points(k)) {
      ++points;
      if (classify(p, ConePoint{k, m}).minimal_face_dim == static_cast<std::size_t>(d)) ++interior;
    }
    levels.push_back({{"pole_order", k}, {"points", points}, {"interior", interior}});
  }
  Json j;
  j["levels"] = levels;
  j["quotient_dimension"] = basis.dimension();
  Json b = Json::array();
  for (const auto& f : basis.basis()) b.push_back(f.to_string());
  j["basis"] = b;
  Json w = Json::array();
  for (long level = d + 1; level <= 2 * d; ++level)
    w.push_back({{"level", level}, {"dimension", weight_graded_dimension(basis, level)}});
  j["weight_dimensions"] = w;
  return j;
}

Json monodromy_section(const GammaVector& g) {
  MonodromyTriple t = levelt_triple(g);
  Json j;
  j["h0"] = matrix_json(t.h0);
  j["h1"] = matrix_json(t.h1);
  j["hinf"] = matrix_json(t.hinf);
  j["pseudoreflection_rank"] = pseudoreflection_rank(t.h1);
  j["charpoly_hinf"] = t.hinf.charpoly().to_string("T");
  j["charpoly_h0_inverse"] = t.h0.inverse().charpoly().to_string("T");
  return j;
}

Json covering_section(const GammaVector& g) {
  CoveringData c = quadrilateral_covering(g);
  Json j;
  j["normalized_gamma"] = c.normalized;
  j["sign"] = c.sign;
  j["permutation"] = c.permutation;
  j["case"] = c.case_name();
  Json exps = Json::array();
  for (std::size_t i = 0; i < 4; ++i)
    exps.push_back({{"slot", i + 1}, {"variable", c.variable[i] == 1 ? "y1" : "y2"}, {"exponent", c.exponents[i]}});
  j["covering_exponents"] = exps;
  Json integers{{"a", c.a}, {"A", c.A}, {"b", c.b}, {"B", c.B}, {"c", c.c}};
  if (c.equal_degrees) {
    integers["d"] = c.d;
    integers["e"] = c.e;
  }
  j["integers"] = integers;
  j["conditions"] = {{"gcd_y1", c.gcd_y1},
                     {"gcd_y2", c.gcd_y2},
                     {"degree_y1", c.degree_y1},
                     {"degree_y2", c.degree_y2},
                     {"hold", c.conditions_hold()}};
  j["etale_property_checked"] = false;
  return j;
}

Json minimal_op_entry(const CohomologyBasis& basis, const MonomialForm& f) {
  Json j;
  j["form"] = f.to_string();
  OreOperator L = minimal_operator(basis, f);
  j["operator"] = operator_json(L);
  auto [H, params] = build_gkz_operator(basis.model().gamma, solve_eta(basis.model(), f.beta0, f.beta));
  auto [a, b] = cancel_parameters(params.alpha_eta, params.beta_eta);
  j["divides_gkz"] = right_divide(H, L).second.is_zero();
  j["equals_cancelled_gkz"] = !a.empty() && equal_up_to_left_unit(L, build_hypergeometric(a, b));
  return j;
}

Json gkz_entry(const ToricModel& model, const MonomialForm& f) {
  Json j;
  j["form"] = f.to_string();
  if (f.beta.size() != model.d()) throw Error("DimensionMismatch", "form has the wrong dimension");
  if (f.beta0 < 1 || !newton_polytope(model).contains(f.beta0, f.beta))
    throw Error("PointOutsideCone", "form " + f.to_string() + " is not in the cone");
  std::vector<long> eta = solve_eta(model, f.beta0, f.beta);
  auto [H, params] = build_gkz_operator(model.gamma, eta);
  j["eta"] = eta;
  j["alpha_eta"] = rationals(params.alpha_eta);
  j["beta_eta"] = rationals(params.beta_eta);
  auto [a, b] = cancel_parameters(params.alpha_eta, params.beta_eta);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  j["cancelled"] = {{"alpha", rationals(a)}, {"beta", rationals(b)}};
  j["operator"] = operator_json(H);
  return j;
}

}  // namespace

IntMatrix matrix_from_model_json(const Json& j, const GammaVector& g) {
  try {
    if (j.contains("gamma") && j.at("gamma").get<std::vector<long>>() != g.entries())
      throw Error("InvalidInput", "model file is for a different gamma vector");
    auto rows = j.at("A").get<std::vector<std::vector<long>>>();
    if (rows.size() != g.size()) throw Error("InvalidInput", "matrix must be l x l");
    IntMatrix a(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != g.size()) throw Error("InvalidInput", "matrix must be l x l");
      for (std::size_t c = 0; c < rows[i].size(); ++c) a(i, c) = rows[i][c];
    }
    return a;
  } catch (const Json::exception& e) {
    throw Error("InvalidInput", std::string("malformed model file: ") + e.what());
  }
}

Json error_json(const std::string& code, const std::string& message) { return {{"code", code}, {"message", message}}; }

int exit_code_for(const std::string& code) {
  if (code == "TrivialSystem") return 3;
  static const std::vector<std::string> invalid{"ParseError", "InvalidEntry", "SumNotZero", "InvalidInput",
                                                "IOError",    "InvalidParameters", "DimensionMismatch",
                                                "RowOneNotOnes", "KernelConditionFailed", "TwistConditionFailed",
                                                "NotUnimodular"};
  return std::find(invalid.begin(), invalid.end(), code) != invalid.end() ? 2 : 1;
}

Json series_section(const GammaVector& g, std::size_t terms, bool check_annihilation) {
  HGParams p = hg_params(g);
  long negatives = std::count_if(g.entries().begin(), g.entries().end(), [](long x) { return x < 0; });
  Json j;
  j["terms"] = terms;
  TruncatedSeries hg = hg_series(p.alpha, p.beta, terms);
  TruncatedSeries s = hg;
  if (negatives == 1) {
    s = constant_term_series(g, terms);
    j["kind"] = "constant_term";
    j["matches_hypergeometric"] = s == hg;
  } else {
    j["kind"] = "hypergeometric";
  }
  j["coefficients"] = rationals(s.coeffs);
  if (check_annihilation) {
    j["annihilation"] = guarded([&] {
      AnnihilationVerdict v = annihilation_check(build_hypergeometric(p.alpha, p.beta), s);
      return Json{{"annihilated", v.annihilated}, {"checked", v.checked}, {"first_nonzero", v.first_nonzero}};
    });
  }
  return j;
}

Json analyze(const GammaVector& g, const ReportOptions& o) {
  Json r;
  r["gamma"] = g.entries();
  r["flags"] = {{"reduced", g.is_reduced()}, {"prime", g.is_prime()}};
  HGParams p = hg_params(g);
  if (p.rank() == 0) throw Error("TrivialSystem", "all parameters cancel");
  r["parameters"] = {{"alpha", rationals(p.alpha)}, {"beta", rationals(p.beta)}};
  FamilyParameter q = family_parameter(g);
  r["family_parameter"] = {{"numerator", multiplicities(q.numerator)}, {"denominator", multiplicities(q.denominator)}};
  r["rank"] = rank(g);
  r["volume"] = volume(g);

  const bool all = !o.any_section();
  if (all || o.hodge) r["hodge"] = guarded([&] { return hodge_section(g); });

  std::optional<ToricModel> model;
  std::string model_error_code, model_error_message;
  if (o.matrix) model = import_model(g, *o.matrix);
  try {
    if (!model) model = build_model(g);
  } catch (const Error& e) {
    model_error_code = e.code();
    model_error_message = e.what();
  }
  auto need_model = [&]() -> const ToricModel& {
    if (!model) throw Error(model_error_code, model_error_message);
    return *model;
  };
  if (all || o.model) r["model"] = guarded([&] { return model_section(need_model()); });

  std::optional<CohomologyBasis> basis;
  auto need_basis = [&]() -> const CohomologyBasis& {
    if (!basis) basis = build_basis(need_model());
    return *basis;
  };
  if (all || o.cone) r["cone"] = guarded([&] { return cone_section(need_basis()); });
  if (!o.minimal_ops.empty()) {
    Json a = Json::array();
    for (const auto& f : o.minimal_ops)
      a.push_back(guarded([&] { return minimal_op_entry(need_basis(), f); }));
    r["minimal_operators"] = a;
  }
  if (!o.gkz_ops.empty()) {
    Json a = Json::array();
    for (const auto& f : o.gkz_ops) a.push_back(guarded([&] { return gkz_entry(need_model(), f); }));
    r["gkz_operators"] = a;
  }
  if (all || o.monodromy) r["monodromy"] = guarded([&] { return monodromy_section(g); });
  if ((all && g.size() == 4) || o.covering) r["covering"] = guarded([&] { return covering_section(g); });
  if (o.series_terms) r["series"] = guarded([&] { return series_section(g, *o.series_terms, o.check_annihilation); });

  if (o.validate) {
    Json v;
    v["hodge_rank_equality"] = guarded([&] {
      long total = 0;
      for (const auto& h : hodge_numbers(g)) total += h.h;
      return Json(total == rank(g));
    });
    v["pseudoreflection"] = guarded([&] { return Json(pseudoreflection_rank(levelt_triple(g).h1) == 1); });
    v["hessian_law"] = guarded([&] {
      BigInt prod = 1;
      for (long x : g.entries()) prod *= x;
      return Json(hessian_determinant(need_model()) == -prod);
    });
    v["gkz_order_is_volume"] = guarded([&] {
      const ToricModel& m = need_model();
      std::vector<long> eta(m.l(), 0);
      eta[0] = -1;
      return Json(build_gkz_operator(g, eta).first.order() == volume(g));
    });
    r["validation"] = v;
  }
  return r;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_object(); })) {
    std::size_t i = 0;
    for (const auto& x : j) flatten(x, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_plain(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace hgls::cli
