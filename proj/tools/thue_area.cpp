#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "binform/area.hpp"
#include "binform/discriminant.hpp"
#include "binform/extremal.hpp"
#include "binform/families.hpp"
#include "binform/parse.hpp"
#include "binform/plot.hpp"
#include "binform/roots.hpp"
#include "binform/thue.hpp"

using json = nlohmann::ordered_json;
using namespace binform;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

struct Output {
  bool csv = false;
};

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + csv_cell(v[i]);
    return out;
  }
  return v.dump();
}

// Tables ("rows") print one line per row; anything else prints its scalar
// fields as a single row.
void emit(const json& doc, const Output& out) {
  if (!out.csv) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  const json* rows = doc.contains("rows") ? &doc["rows"] : nullptr;
  json table = rows ? *rows : json::array({doc});
  if (table.empty()) return;
  std::string header;
  for (const auto& [key, value] : table[0].items())
    if (!value.is_object()) header += (header.empty() ? "" : ",") + key;
  std::cout << header << "\n";
  for (const auto& row : table) {
    std::string line;
    bool first = true;
    for (const auto& [key, value] : row.items()) {
      if (value.is_object()) continue;
      line += (first ? "" : ",") + csv_cell(value);
      first = false;
    }
    std::cout << line << "\n";
  }
}

json coefficient_json(const BinaryForm& form) {
  json out = json::array();
  if (form.is_exact()) {
    for (const auto& q : form.exact_coeffs()) out.push_back(format_rational(q));
  } else {
    for (const auto& c : form.complex_coeffs()) out.push_back(c.real());
  }
  return out;
}

int fail(const std::string& name, const std::string& message, int code) {
  std::cout << json{{"error", name}, {"message", message}}.dump(2) << "\n";
  std::cerr << "error: " << message << "\n";
  return code;
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
      return kExitUsage;
    default:
      return kExitDomain;
  }
}

json count_json(const BinaryForm& form, const LatticeCount& c) {
  json out{{"form", format_form(form)}, {"h", c.h}, {"count", c.count}, {"strategy", to_string(c.strategy)}};
  if (c.strategy == CountStrategy::BoxRestricted) {
    out["box"] = *c.box;
    out["caveat"] = "count restricted to the box [-" + std::to_string(*c.box) + ", " +
                    std::to_string(*c.box) + "]^2";
  } else {
    out["radius"] = c.radius;
    json pts = json::array();
    for (const auto& p : c.points) pts.push_back(json::array({p[0], p[1]}));
    out["points"] = pts;
  }
  return out;
}

std::vector<long> parse_h_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad --h-list entry \"" + item + "\"");
    }
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "--h-list is empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Areas, discriminants and lattice counts for binary forms"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--csv", out.csv, "Print CSV instead of JSON");

  std::string form_text;
  double tol = kDefaultAreaTol;

  auto* area_cmd = app.add_subcommand("area", "Area of |F(x,y)| <= 1");
  area_cmd->add_option("form", form_text, "Binary form")->required();
  area_cmd->add_option("--tol", tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);

  auto* inv_cmd = app.add_subcommand("invariant", "|D_F|^{1/n(n-1)} A_F");
  inv_cmd->add_option("form", form_text, "Binary form")->required();
  inv_cmd->add_option("--tol", tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);

  auto* disc_cmd = app.add_subcommand("disc", "Discriminant");
  disc_cmd->add_option("form", form_text, "Binary form")->required();

  long h = 1;
  long box = -1;
  bool definite = false;
  auto* count_cmd = app.add_subcommand("count", "Number of integer solutions of |F(x,y)| <= h");
  count_cmd->add_option("form", form_text, "Binary form with integer coefficients")->required();
  count_cmd->add_option("--h", h, "Right-hand side")->required();
  auto* definite_flag = count_cmd->add_flag("--definite", definite, "Exact count over Z^2 (definite forms)");
  auto* box_opt = count_cmd->add_option("--box", box, "Count inside [-B, B]^2")->check(CLI::NonNegativeNumber);
  definite_flag->excludes(box_opt);

  std::string h_list = "1,2,4,8,16,32,64,128,256";
  auto* mahler_cmd = app.add_subcommand("mahler", "Scaled error |N - A h^{2/n}| / h^{1/(n-1)}");
  mahler_cmd->add_option("form", form_text, "Binary form with integer coefficients")->required();
  mahler_cmd->add_option("--h-list", h_list, "Comma-separated h values");
  mahler_cmd->add_option("--box", box, "Use box-restricted counts in [-B, B]^2")->check(CLI::NonNegativeNumber);

  int n_max = 6;
  MnOptions mn;
  auto* ext_cmd = app.add_subcommand("extremal", "Estimate M_n and compare with F_n*");
  ext_cmd->add_option("--n-max", n_max, "Largest degree")->check(CLI::Range(3, 12));
  ext_cmd->add_option("--restarts", mn.restarts, "Optimizer restarts per degree")->check(CLI::Range(1, 1000));
  ext_cmd->add_option("--seed", mn.seed, "Random seed");

  int k = 1;
  auto* pk_cmd = app.add_subcommand("pk", "Coefficients of P_k");
  pk_cmd->add_option("--k", k, "Index k >= 1")->required();

  int n = 3;
  auto* fstar_cmd = app.add_subcommand("fstar", "Coefficients of F_n*");
  fstar_cmd->add_option("--n", n, "Degree n >= 3")->required();

  PlotSpec plot;
  std::string plot_out;
  std::string plot_format = "csv";
  auto* plot_cmd = app.add_subcommand("plot", "Level curve |F(x,y)| = level");
  plot_cmd->add_option("form", form_text, "Binary form")->required();
  plot_cmd->add_option("--out", plot_out, "Output path")->required();
  plot_cmd->add_option("--level", plot.level, "Level (default 1)");
  plot_cmd->add_option("--window", plot.window, "Half-width of the square window");
  plot_cmd->add_option("--samples", plot.samples, "Grid nodes per axis");
  plot_cmd->add_option("--format", plot_format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));

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
    if (*area_cmd) {
      const BinaryForm form = parse_form(form_text);
      const AreaResult r = area(form, tol);
      emit({{"form", format_form(form)},
            {"area", r.area},
            {"error_estimate", r.abs_error_estimate},
            {"singular_angles", r.singular_angles},
            {"panels", r.panels},
            {"evaluations", r.evaluations}},
           out);
    } else if (*inv_cmd) {
      const BinaryForm form = parse_form(form_text);
      const InvariantValue v = invariant(form, tol);
      emit({{"form", format_form(form)},
            {"invariant", v.value},
            {"disc_abs", v.disc_magnitude},
            {"area", v.area}},
           out);
    } else if (*disc_cmd) {
      const BinaryForm form = parse_form(form_text);
      json doc{{"form", format_form(form)}};
      if (form.is_exact()) {
        const Rational d = discriminant_exact(form);
        doc["discriminant"] = format_rational(d);
        doc["exact"] = true;
        doc["value"] = d.get_d();
      } else {
        const Complex d = discriminant_float(roots(form));
        doc["discriminant"] = format_double(d.real());
        doc["exact"] = false;
        doc["value"] = d.real();
        if (d.imag() != 0.0) doc["imag"] = d.imag();
      }
      emit(doc, out);
    } else if (*count_cmd) {
      if (!definite && box < 0) return fail("UsageError", "count needs --definite or --box B", kExitUsage);
      const BinaryForm form = parse_form(form_text);
      const LatticeCount c = definite ? count_definite(form, h) : count_box(form, h, box);
      json doc = count_json(form, c);
      if (out.csv) doc.erase("points");
      emit(doc, out);
    } else if (*mahler_cmd) {
      const BinaryForm form = parse_form(form_text);
      const auto hs = parse_h_list(h_list);
      const bool boxed = box >= 0;
      const MahlerTable t = mahler_table(form, hs,
                                         boxed ? CountStrategy::BoxRestricted : CountStrategy::DefiniteExact,
                                         boxed ? std::optional<long>(box) : std::nullopt);
      json rows = json::array();
      for (const auto& r : t.rows)
        rows.push_back({{"h", r.h}, {"count", r.n_count}, {"area_term", r.area_term}, {"scaled_error", r.scaled_error}});
      json doc{{"form", format_form(form)},
               {"strategy", to_string(t.strategy)},
               {"area", t.area},
               {"empirical_c", t.empirical_c},
               {"rows", rows}};
      if (t.box) {
        doc["box"] = *t.box;
        doc["caveat"] = t.caveat;
      }
      emit(doc, out);
    } else if (*ext_cmd) {
      const ConjectureReport r = conjecture_report(n_max, mn);
      json rows = json::array();
      for (const auto& row : r.rows)
        rows.push_back({{"n", row.n},
                        {"mn", row.mn},
                        {"fstar", row.fstar},
                        {"gap_to_fstar", row.gap_to_fstar},
                        {"above_two_pi", row.above_two_pi},
                        {"monotone", row.monotone},
                        {"distance_to_fstar", row.distance_to_fstar},
                        {"converged", row.converged}});
      emit({{"restarts", mn.restarts},
            {"seed", mn.seed},
            {"two_pi", r.two_pi},
            {"monotone", r.monotone},
            {"all_above_two_pi", r.all_above_two_pi},
            {"rows", rows}},
           out);
    } else if (*pk_cmd) {
      const BinaryForm form = make_pk(k);
      emit({{"k", k}, {"form", format_form(form)}, {"coefficients", coefficient_json(form)}}, out);
    } else if (*fstar_cmd) {
      const BinaryForm form = make_fstar(n);
      emit({{"n", n}, {"form", format_form(form)}, {"coefficients", coefficient_json(form)}}, out);
    } else if (*plot_cmd) {
      const BinaryForm form = parse_form(form_text);
      const LevelSet set = level_set(form, plot);
      std::ofstream file(plot_out, std::ios::binary);
      if (!file) return fail("IOError", "cannot open " + plot_out, kExitUsage);
      file << (plot_format == "svg" ? to_svg(set, plot) : to_csv(set));
      if (set.empty())
        return fail("EmptyLevelSet", "the level set is empty inside the window", kExitDomain);
      emit({{"form", format_form(form)},
            {"out", plot_out},
            {"format", plot_format},
            {"segments", set.segments.size()},
            {"polylines", set.polylines.size()},
            {"closed", set.all_closed()}},
           out);
    }
  } catch (const Error& e) {
    return fail(std::string(e.name()), e.what(), exit_code(e));
  }
  return 0;
}
