// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "equicohom/classes.hpp"
#include "equicohom/expr.hpp"
#include "equicohom/verify.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace eqc;

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json envelope(const std::string& command) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

void check_format(const std::string& f, bool csv_ok) {
  if (f != "text" && f != "json" && !(csv_ok && f == "csv"))
    throw UsageError("unsupported --format " + f + (csv_ok ? " (text, json, csv)" : " (text, json)"));
}

void emit(const json& j, const std::string& format, const std::string& text) {
  if (format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::string grading_str(const std::optional<GradingBT2>& g) { return g ? g->str() : "none (zero)"; }

// ---- normalize / multiply ---------------------------------------------------

struct Normalized {
  std::string form;
  std::string grading;
  std::string extra;  // s* image for bu2
};

Normalized normalize_in(const std::string& ring, const std::vector<std::string>& exprs) {
  if (exprs.empty()) throw UsageError("missing --expr");
  if (ring == "bt2") {
    BT2Elem x = bt2().one();
    for (const auto& e : exprs) x = bt2().mul(x, parse_bt2(e));
    return {bt2().str(x), grading_str(bt2().grading(x)), ""};
  }
  if (ring == "bt1") {
    const auto& s = *bt1_system();
    BT1Elem x = s.constant(HCoeff(1));
    for (const auto& e : exprs) x = s.mul(x, parse_bt1(e));
    return {s.str(x), grading_str(s.grading(x)), ""};
  }
  if (ring == "bu2") {
    BU2Poly x = bu2_term(HCoeff(1), {});
    for (const auto& e : exprs) x = bu2_mul(x, parse_bu2(e));
    BT2Elem img = sstar(x);
    std::string g = x.empty() ? "none (zero)" : bu2_grading(x).str();
    return {bu2_str(x), g, bt2().str(img)};
  }
  if (ring == "h") {
    HCoeff x(1);
    for (const auto& e : exprs) x = x * eval_hcoeff(parse_expr(e));
    auto g = x.grading();
    return {x.str(), g ? g->str() : "none (zero)", ""};
  }
  if (ring == "phi" || ring == "rho") {
    const auto& m = ring == "phi" ? bt2_phi() : bt2_rho();
    PhiElem x = m.one();
    for (const auto& e : exprs) x = m.mul(x, ring == "phi" ? parse_bt2_phi(e) : parse_bt2_rho(e));
    return {m.str(x), "", ""};
  }
  throw UsageError("unknown --ring " + ring + " (bt2, bt1, bu2, h, phi, rho)");
}

int run_normalize(const std::string& command, const std::string& ring, const std::vector<std::string>& exprs,
                  const std::string& format) {
  check_format(format, false);
  Normalized n = normalize_in(ring, exprs);
  json j = envelope(command);
  j["ring"] = ring;
  j["input"] = exprs;
  j["normal_form"] = n.form;
  if (!n.grading.empty()) j["grading"] = n.grading;
  if (!n.extra.empty()) j["sstar"] = n.extra;
  std::string text = n.form + "\n";
  if (!n.extra.empty()) text += "s* = " + n.extra + "\n";
  emit(j, format, text);
  return kOk;
}

// ---- basis ---------------------------------------------------------------------

Window parse_window(const std::string& s) {
  std::vector<Int> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ':')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("bad --window '" + s + "', expected a0:a1:b0:b1");
    }
  }
  if (v.size() != 4) throw UsageError("bad --window '" + s + "', expected a0:a1:b0:b1");
  return {v[0], v[1], v[2], v[3]};
}

int run_basis(const std::string& ring, const std::string& coset_text, const std::string& window, bool flat,
              const std::string& format) {
  check_format(format, true);
  Window w = parse_window(window);
  std::vector<BasisCell> cells;
  std::string coset_str;
  const GeneratorSet* gens = nullptr;
  if (ring == "bt2") {
    GradingBT2 coset = parse_grading(coset_text);
    coset_str = coset.str();
    cells = flat ? flat_exclusion_enumerate(coset, w) : basis_enumerate(coset, w);
    gens = flat_generators().get();
  } else if (ring == "bt1") {
    if (flat) throw UsageError("--flat applies to bt2 only");
    GradingBT2 g = parse_grading(coset_text);
    // BT1 cosets are written with W00 standing for W0.
    if (g.m01() != 0 || g.m10() != 0) throw UsageError("bt1 coset must be a + b*s + m*W00 (W00 standing for W0)");
    GradingBT1 coset = GradingBT1::raw(g.a(), g.b(), g.m00(), 0);
    coset_str = coset.str();
    cells = bt1_basis_enumerate(coset, w);
    gens = bt1_generators().get();
  } else {
    throw UsageError("unknown --ring " + ring + " (bt2, bt1)");
  }
  if (format == "csv") {
    std::cout << "a,b,count\n";
    for (const auto& c : cells) std::cout << c.cell.a << "," << c.cell.b << "," << c.monomials.size() << "\n";
    return kOk;
  }
  json j = envelope("basis");
  j["coset"] = coset_str;
  j["cells"] = json::array();
  std::ostringstream text;
  text << "coset " << coset_str << "\n";
  for (const auto& c : cells) {
    json cell;
    cell["a"] = c.cell.a;
    cell["b"] = c.cell.b;
    cell["count"] = c.monomials.size();
    cell["monomials"] = json::array();
    text << "(" << c.cell.a << "," << c.cell.b << ") " << c.monomials.size() << ":";
    for (const auto& m : c.monomials) {
      cell["monomials"].push_back(gens->str(m));
      text << " " << gens->str(m);
    }
    text << "\n";
    j["cells"].push_back(cell);
  }
  emit(j, format, text.str());
  return kOk;
}

// ---- map -------------------------------------------------------------------------

int run_map(const std::string& name, const std::string& expr, const std::string& format) {
  check_format(format, false);
  json j = envelope("map");
  j["name"] = name;
  j["input"] = expr;
  std::string text;
  auto tuple_out = [&](const std::array<std::string, 4>& t) {
    j["value"] = json::array({t[0], t[1], t[2], t[3]});
    text = "(" + t[0] + ", " + t[1] + ", " + t[2] + ", " + t[3] + ")\n";
  };
  auto single = [&](const std::string& s) {
    j["value"] = s;
    text = s + "\n";
  };
  if (name == "rho") {
    single(rho_target().str(rho(parse_bt2(expr))));
  } else if (name == "phi") {
    auto t = phi(parse_bt2(expr));
    tuple_out({phi_target().str(t[0]), phi_target().str(t[1]), phi_target().str(t[2]), phi_target().str(t[3])});
  } else if (name == "eta") {
    auto t = eta(parse_bt2(expr));
    const auto& T = eta_target();
    tuple_out({T.str(t[0]), T.str(t[1]), T.str(t[2]), T.str(t[3])});
  } else if (name == "sstar") {
    single(bt2().str(sstar(parse_bu2(expr))));
  } else if (name == "delta" || name == "chi1" || name == "gamma") {
    single(bt2().str(pullback_bt2(name, parse_bt2(expr))));
  } else if (name == "t") {
    single(bt1_system()->str(t_star(parse_bt2(expr))));
  } else if (name == "pi1" || name == "pi2") {
    BT1Elem x = parse_bt1(expr);
    single(bt2().str(name == "pi1" ? pi1_star(x) : pi2_star(x)));
  } else if (name == "modn") {
    single(bt2_mod_n().str(mod_n(parse_bt2(expr))));
  } else {
    throw UsageError("unknown map " + name + " (rho, phi, eta, sstar, delta, chi1, gamma, t, pi1, pi2, modn)");
  }
  emit(j, format, text);
  return kOk;
}

// ---- euler / waner / units --------------------------------------------------------

int run_euler(Int m, Int n, bool twisted, const std::string& format) {
  check_format(format, false);
  BT2Elem e = euler_omn(m, n, twisted);
  std::string name = std::string(twisted ? "chi " : "") + "O(" + std::to_string(m) + "," + std::to_string(n) + ")";
  json j = envelope("euler");
  j["bundle"] = name;
  j["euler"] = bt2().str(e);
  j["zeta1"] = bt2().str(euler_zeta1(m, n, twisted));
  emit(j, format, "e(" + name + ") = " + bt2().str(e) + "\n");
  return kOk;
}

int run_waner(const std::string& bundles, const std::string& format) {
  check_format(format, false);
  std::vector<LineBundle> list;
  std::stringstream ss(bundles);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    try {
      list.push_back(line_bundle(part));
    } catch (const std::exception&) {
      std::string known;
      for (const auto& n : line_bundle_names()) known += " " + n;
      throw UsageError("unknown line bundle '" + part + "', expected one of" + known);
    }
  }
  if (list.empty()) throw UsageError("--bundles needs at least one line bundle");
  WanerClass w = waner_total(list);
  json j = envelope("waner");
  j["bundles"] = bundles;
  j["rank"] = w.rank();
  j["coefficients"] = json::array();
  std::ostringstream text;
  for (int k = 0; k <= w.rank(); ++k) {
    j["coefficients"].push_back(bt2().str(w.coeffs[k]));
    text << "t^" << k << ": " << bt2().str(w.coeffs[k]) << "\n";
  }
  emit(j, format, text.str());
  return kOk;
}

int run_units(const std::string& format) {
  check_format(format, false);
  UnitReport rep = unit_check(3);
  json j = envelope("units");
  j["pass"] = rep.pass();
  j["squares_to_one"] = rep.squares_to_one;
  j["units"] = json::array();
  std::ostringstream text;
  text << rep.units.size() << " units in the span of 1, g, eps1, eps2, eps_oplus (coefficients in [-3,3]):\n";
  for (const auto& u : rep.units) {
    std::string s = bt2().str(from_unit5(u));
    j["units"].push_back({{"coords", u}, {"element", s}});
    text << "  " << s << "\n";
  }
  for (const auto& f : rep.table_failures) text << "table failure: " << f << "\n";
  j["table_failures"] = rep.table_failures;
  emit(j, format, text.str());
  return rep.pass() ? kOk : kFailed;
}

// ---- push ------------------------------------------------------------------------

int run_push(const std::array<std::string, 4>& coeffs, const std::string& format) {
  check_format(format, false);
  DecomposedOverBU2 d;
  for (int i = 0; i < 4; ++i) d.a[i] = parse_bu2(coeffs[i].empty() ? "0" : coeffs[i]);
  BU2Poly v = pushforward(d);
  BT2Elem x = expand(d);
  json j = envelope("push");
  j["coefficients"] = json::array({bu2_str(d.a[0]), bu2_str(d.a[1]), bu2_str(d.a[2]), bu2_str(d.a[3])});
  j["element"] = bt2().str(x);
  j["pushforward"] = bu2_str(v);
  j["sstar_of_pushforward"] = bt2().str(sstar(v));
  emit(j, format, "x = " + bt2().str(x) + "\ns_!(x) = " + bu2_str(v) + "\n");
  return kOk;
}

// ---- verify ------------------------------------------------------------------------

int run_verify(const std::vector<int>& ids, bool confluence, bool notes, const std::string& format) {
  check_format(format, false);
  if (confluence) {
    const auto& two = *bt2_two_level();
    auto b1 = bt1_system()->check_confluence();
    auto rep = two.check_confluence();
    json j = envelope("verify");
    j["bt1"] = json::array();
    j["bt2"] = json::array();
    std::ostringstream text;
    for (const auto& p : b1.pairs) {
      j["bt1"].push_back({{"rules", {p.rule_i, p.rule_j}}, {"lcm", bt1_system()->gens().str(p.lcm)},
                          {"joined", p.joined}, {"normal_form", bt1_system()->str(p.nf_i)}});
      text << p.rule_i << "," << p.rule_j << " at " << bt1_system()->gens().str(p.lcm) << ": "
           << (p.joined ? "joined at " : "NOT joined ") << bt1_system()->str(p.nf_i) << "\n";
    }
    for (const auto& p : rep.pairs) {
      j["bt2"].push_back({{"rules", {p.rule_i, p.rule_j}}, {"lcm", two.gens().str(p.lcm)},
                          {"joined", p.joined}, {"normal_form", two.str(p.nf_i)}});
      text << p.rule_i << "," << p.rule_j << " at " << two.gens().str(p.lcm) << ": "
           << (p.joined ? "joined at " : "NOT joined ") << two.str(p.nf_i) << "\n";
    }
    bool ok = b1.pass() && rep.pass();
    j["pass"] = ok;
    emit(j, format, text.str());
    return ok ? kOk : kFailed;
  }
  for (int id : ids)
    if (id < 1 || id > kCriterionCount) throw UsageError("no criterion " + std::to_string(id));
  auto results = run_acceptance(ids);
  int code = acceptance_exit_code(results);
  json j = envelope("verify");
  j["criteria"] = json::array();
  for (const auto& r : results)
    j["criteria"].push_back({{"id", r.id},
                             {"title", r.title},
                             {"pass", r.pass},
                             {"known_unattainable", r.known_unattainable},
                             {"notes", r.notes}});
  j["exit_code"] = code;
  emit(j, format, format_report(results, notes));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the equivariant cohomology of BT^2"};
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) { sub->add_option("--format", format, "text, json (csv for basis)"); };

  std::string ring = "bt2";
  std::vector<std::string> exprs;
  auto* normalize = app.add_subcommand("normalize", "Normal form of an element");
  normalize->add_option("--ring", ring, "bt2, bt1, bu2, h, phi, rho");
  normalize->add_option("--expr", exprs, "Element")->required();
  add_format(normalize);

  auto* multiply = app.add_subcommand("multiply", "Normal form of a product");
  multiply->add_option("--ring", ring, "bt2, bt1, bu2, h, phi, rho");
  multiply->add_option("--expr", exprs, "Factors (repeat --expr)")->required();
  add_format(multiply);

  std::string coset = "0", window = "0:6:0:10";
  bool flat = false;
  auto* basis = app.add_subcommand("basis", "Basis monomials per RO(C2) cell");
  basis->add_option("--ring", ring, "bt2 or bt1");
  basis->add_option("--coset", coset, "Coset representative, e.g. W01+W10");
  basis->add_option("--window", window, "a0:a1:b0:b1");
  basis->add_flag("--flat", flat, "Use the 13-monomial exclusion list (not a basis)");
  add_format(basis);

  std::string map_name, expr;
  auto* map = app.add_subcommand("map", "Apply a ring map");
  map->add_option("--name", map_name, "rho, phi, eta, sstar, delta, chi1, gamma, t, pi1, pi2, modn")->required();
  map->add_option("--expr", expr, "Element of the source ring")->required();
  add_format(map);

  Int m = 0, n = 0;
  bool twisted = false;
  auto* euler = app.add_subcommand("euler", "Euler class of O(m,n) or chi O(m,n)");
  euler->add_option("--m", m)->required();
  euler->add_option("--n", n)->required();
  euler->add_flag("--twisted", twisted, "Twist by the sign representation");
  add_format(euler);

  std::string bundles;
  auto* waner = app.add_subcommand("waner", "Total Waner class of a sum of line bundles");
  waner->add_option("--bundles", bundles, "Comma-separated: 1, w1, xw1, w2, xw2, T, xT")->required();
  add_format(waner);

  auto* units = app.add_subcommand("units", "Units of the grading-0 part");
  add_format(units);

  std::array<std::string, 4> push_coeffs;
  auto* push = app.add_subcommand("push", "Pushforward of a1 + a2*z01^cw1 + a3*z10^cxw1 + a4*^cw1^cxw1");
  push->add_option("--a1", push_coeffs[0], "BU(2) coefficient of 1");
  push->add_option("--a2", push_coeffs[1], "BU(2) coefficient of z01 ^cw1");
  push->add_option("--a3", push_coeffs[2], "BU(2) coefficient of z10 ^cxw1");
  push->add_option("--a4", push_coeffs[3], "BU(2) coefficient of ^cw1 ^cxw1");
  add_format(push);

  std::vector<int> ids;
  bool confluence = false, no_notes = false;
  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--criterion", ids, "Criterion ids (default: all)");
  verify->add_flag("--confluence", confluence, "Print the overlap report of the rewriting systems");
  verify->add_flag("--no-notes", no_notes, "Only the PASS/FAIL lines");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*normalize) return run_normalize("normalize", ring, exprs, format);
    if (*multiply) return run_normalize("multiply", ring, exprs, format);
    if (*basis) return run_basis(ring, coset, window, flat, format);
    if (*map) return run_map(map_name, expr, format);
    if (*euler) return run_euler(m, n, twisted, format);
    if (*waner) return run_waner(bundles, format);
    if (*units) return run_units(format);
    if (*push) return run_push(push_coeffs, format);
    if (*verify) return run_verify(ids, confluence, !no_notes, format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
    return kUsage;
  } catch (const FragmentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
