// Copyright 2026 The ellded Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "checks.hpp"
#include "ellded/cli.hpp"
#include "ellded/exact.hpp"
#include "ellded/identities.hpp"
#include "ellded/serialize.hpp"
#include "ellded/symbols.hpp"

namespace ellded {

namespace {

using cli::CheckLine;

struct Settings {
  std::string format = "json";
  double tol = 0.0;
  long max_terms = 1'000'000;
  std::uint64_t seed = 7;
};

std::pair<double, double> parse_real_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected a pair 'u,v', got '" + s + "'");
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

std::pair<long, long> parse_int_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected a pair 'u,v', got '" + s + "'");
  return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
}

std::string params_text(const json& params) {
  std::string s;
  for (const auto& [k, v] : params.items()) {
    if (!s.empty()) s += ';';
    s += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

void emit_record(std::ostream& out, const Settings& st, const json& rec) {
  if (st.format == "json") {
    out << rec.dump() << '\n';
  } else if (st.format == "csv") {
    out << "op,params,value\n"
        << csv_field(rec["op"].get<std::string>()) << ',' << csv_field(params_text(rec["params"])) << ','
        << csv_field(rec["value"].is_string() ? rec["value"].get<std::string>() : rec["value"].dump()) << '\n';
  } else {
    out << rec["op"].get<std::string>() << " (" << params_text(rec["params"]) << ")\n  = "
        << (rec["value"].is_string() ? rec["value"].get<std::string>() : rec["value"].dump(2)) << '\n';
  }
}

int emit_checks(std::ostream& out, const Settings& st, const std::vector<CheckLine>& lines) {
  bool all = true;
  if (st.format == "csv") out << "check,params,residual,tol,pass\n";
  for (const CheckLine& l : lines) {
    all = all && l.pass;
    if (st.format == "json") {
      out << l.to_json().dump() << '\n';
    } else if (st.format == "csv") {
      out << csv_field(l.check) << ',' << csv_field(params_text(l.params)) << ','
          << csv_field(l.residual.is_string() ? l.residual.get<std::string>() : l.residual.dump()) << ','
          << json(l.tol).dump() << ',' << (l.pass ? "true" : "false") << '\n';
    } else {
      out << (l.pass ? "PASS " : "FAIL ") << l.check << "  " << params_text(l.params)
          << "  residual=" << (l.residual.is_string() ? l.residual.get<std::string>() : l.residual.dump())
          << "  tol=" << json(l.tol).dump() << '\n';
    }
  }
  return all ? 0 : 1;
}

json record(const std::string& op, json params, json value) {
  json r;
  r["op"] = op;
  r["params"] = std::move(params);
  r["value"] = std::move(value);
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic Apostol-Dedekind sums, their reciprocity functions and the q-series behind them."};
  app.name("ellded");
  app.require_subcommand(1);
  app.fallthrough();

  Settings st;
  bool tol_given = false;
  app.add_option("--format", st.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option_function<double>(
      "--tol", [&](double v) { st.tol = v; tol_given = true; }, "Check tolerance, in (0, 1e-3]");
  app.add_option("--max-terms", st.max_terms, "Cap on series terms")->check(CLI::PositiveNumber);
  app.add_option("--seed", st.seed, "Seed for pseudorandom tau samples");

  int n = 1, k = 1, w = 2, m = 1;
  long p = 3, q = 2;
  std::string tau_text = "0+1i";
  std::string x_text;
  double x = 0.0, y = 0.0;
  std::string z_text = "0.3+0.2i";
  std::string route = "zeta_derivative";
  std::string which = "D";
  bool normalized = false, derivative = false, periodic = false;
  int order = 0;
  std::string va = "1,1", vb = "1,1", vc = "1,1", vx = "0,0", vy = "0,0", vz = "0,0";

  std::function<int()> action;

  auto add_tau = [&](CLI::App* sub) { sub->add_option("--tau", tau_text, "Point in the upper half-plane, a+bi"); };

  // Evaluation subcommands.
  auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_k, polynomial B_k(x) or periodic function");
  bern->add_option("-k", k, "Index")->required();
  bern->add_option("-x", x_text, "Rational argument num/den; omit for the number");
  bern->add_flag("--periodic", periodic, "Periodic Bernoulli function instead of the polynomial");
  bern->callback([&] {
    action = [&] {
      json params = {{"k", k}};
      Rational v;
      if (x_text.empty()) {
        v = bernoulli_number(k);
      } else {
        const Rational xr = Rational::parse(x_text);
        params["x"] = xr.str();
        params["periodic"] = periodic;
        v = periodic ? bernoulli_function(k, xr) : bernoulli_polynomial(k, xr);
      }
      emit_record(out, st, record("bernoulli", params, to_json(v)));
      return 0;
    };
  });

  auto* apo = app.add_subcommand("apostol-sum", "Classical Apostol-Dedekind sum s_k(q, p)");
  apo->add_option("-k", k)->required();
  apo->add_option("-q", q)->required();
  apo->add_option("-p", p)->required();
  apo->callback([&] {
    action = [&] {
      emit_record(out, st, record("apostol-sum", {{"k", k}, {"q", q}, {"p", p}}, to_json(apostol_sum(k, q, p))));
      return 0;
    };
  });

  auto* gp = app.add_subcommand("g-poly", "Odd period polynomial g_w of the weight w+2 Eisenstein series");
  gp->add_option("-w", w)->required();
  gp->callback([&] {
    action = [&] {
      emit_record(out, st, record("g-poly", {{"w", w}}, to_json(g_poly(w))));
      return 0;
    };
  });

  auto* eis = app.add_subcommand("eisenstein", "Eisenstein series E_2n(tau)");
  eis->add_option("-n", n)->required();
  add_tau(eis);
  eis->add_flag("--normalized", normalized, "G_2n instead of E_2n");
  eis->add_flag("--derivative", derivative, "d/dtau of E_2n");
  eis->callback([&] {
    action = [&] {
      SeriesPolicy pol;
      pol.max_terms = st.max_terms;
      const TauPoint tau = TauPoint::parse(tau_text);
      if (normalized && derivative) throw std::invalid_argument("--normalized and --derivative are exclusive");
      const ComplexVal v = normalized ? eisenstein_normalized(n, tau, pol)
                                      : (derivative ? eisenstein_tau_derivative(n, tau, pol) : eisenstein(n, tau, pol));
      json params = {{"n", n}, {"tau", tau_text}, {"normalized", normalized}, {"derivative", derivative}};
      emit_record(out, st, record("eisenstein", params, to_json(v)));
      return 0;
    };
  });

  auto* eb = app.add_subcommand("elliptic-bernoulli", "Elliptic Bernoulli function B_m(x, y; tau)");
  eb->add_option("-m", m)->required();
  eb->add_option("-x", x)->required();
  eb->add_option("-y", y)->required();
  add_tau(eb);
  eb->callback([&] {
    action = [&] {
      SeriesPolicy pol;
      pol.max_terms = st.max_terms;
      const ComplexVal v = elliptic_bernoulli(m, x, y, TauPoint::parse(tau_text), pol);
      emit_record(out, st, record("elliptic-bernoulli", {{"m", m}, {"x", x}, {"y", y}, {"tau", tau_text}}, to_json(v)));
      return 0;
    };
  });

  auto* zw = app.add_subcommand("zeta-w", "Weierstrass zeta(z; tau) or its s-th derivative");
  zw->add_option("-z", z_text, "Complex argument a+bi");
  zw->add_option("-s", order, "Derivative order (0 for zeta itself)")->check(CLI::NonNegativeNumber);
  add_tau(zw);
  zw->callback([&] {
    action = [&] {
      SeriesPolicy pol;
      pol.max_terms = st.max_terms;
      const TauPoint tau = TauPoint::parse(tau_text);
      const cplx z = parse_complex(z_text);
      const ComplexVal v = order == 0 ? weierstrass_zeta(z, tau, pol) : zeta_derivative(order, z, tau, pol);
      emit_record(out, st, record("zeta-w", {{"z", z_text}, {"s", order}, {"tau", tau_text}}, to_json(v)));
      return 0;
    };
  });

  auto* es = app.add_subcommand("elliptic-sum", "Elliptic Apostol-Dedekind sum D-_2n(p, q; tau)");
  es->add_option("-n", n)->required();
  es->add_option("-p", p)->required();
  es->add_option("-q", q)->required();
  es->add_option("--route", route)->check(CLI::IsMember({"zeta_derivative", "bernoulli_product"}));
  add_tau(es);
  es->callback([&] {
    action = [&] {
      SeriesPolicy pol;
      pol.max_terms = st.max_terms;
      const EllipticSumResult r =
          elliptic_apostol_sum(n, CoprimePair(p, q), TauPoint::parse(tau_text), parse_route(route), pol);
      json rec = record("elliptic-sum", {{"n", n}, {"p", p}, {"q", q}, {"tau", tau_text}}, to_json(r.value));
      rec["route"] = route_name(r.route);
      emit_record(out, st, rec);
      return 0;
    };
  });

  auto* rr = app.add_subcommand("reciprocity-rhs", "Reciprocity function R-_2n(p, q; tau)");
  rr->add_option("-n", n)->required();
  rr->add_option("-p", p)->required();
  rr->add_option("-q", q)->required();
  add_tau(rr);
  rr->callback([&] {
    action = [&] {
      SeriesPolicy pol;
      pol.max_terms = st.max_terms;
      const ComplexVal v = reciprocity_rhs(n, CoprimePair(p, q), TauPoint::parse(tau_text), pol);
      emit_record(out, st, record("reciprocity-rhs", {{"n", n}, {"p", p}, {"q", q}, {"tau", tau_text}}, to_json(v)));
      return 0;
    };
  });

  auto* gen = app.add_subcommand("generating", "Generating functions D-(p, q; tau; x) and R-(p, q; tau; x)");
  gen->add_option("-p", p)->required();
  gen->add_option("-q", q)->required();
  gen->add_option("-x", x)->required();
  gen->add_option("--which", which)->check(CLI::IsMember({"D", "R"}));
  add_tau(gen);
  gen->callback([&] {
    action = [&] {
      SeriesPolicy pol;
      pol.max_terms = st.max_terms;
      const TauPoint tau = TauPoint::parse(tau_text);
      const CoprimePair pair(p, q);
      const ComplexVal v = which == "D" ? generating_D(pair, tau, x, pol) : generating_R(pair, tau, x, pol);
      emit_record(out, st,
                  record("generating", {{"which", which}, {"p", p}, {"q", q}, {"x", x}, {"tau", tau_text}}, to_json(v)));
      return 0;
    };
  });

  auto* mac = app.add_subcommand("machide", "Elliptic Dedekind-Rademacher sum S_{m,n}");
  mac->add_option("-m", m)->required();
  mac->add_option("-n", n)->required();
  mac->add_option("--a", va, "a',a");
  mac->add_option("--b", vb, "b',b");
  mac->add_option("--c", vc, "c',c");
  mac->add_option("--x", vx, "x',x");
  mac->add_option("--y", vy, "y',y");
  mac->add_option("--z", vz, "z',z");
  add_tau(mac);
  mac->callback([&] {
    action = [&] {
      SeriesPolicy pol;
      pol.max_terms = st.max_terms;
      MachideSpec spec;
      spec.m = m;
      spec.n = n;
      spec.a = parse_int_pair(va);
      spec.b = parse_int_pair(vb);
      spec.c = parse_int_pair(vc);
      spec.x = parse_real_pair(vx);
      spec.y = parse_real_pair(vy);
      spec.z = parse_real_pair(vz);
      const ComplexVal v = machide_sum(spec, TauPoint::parse(tau_text), pol);
      json params = {{"m", m}, {"n", n}, {"a", va}, {"b", vb}, {"c", vc}, {"x", vx}, {"y", vy}, {"z", vz}, {"tau", tau_text}};
      emit_record(out, st, record("machide", params, to_json(v)));
      return 0;
    };
  });

  auto* pdc = app.add_subcommand("period-data", "Period, Petersson norm and odd period polynomial of G_{2n+2}");
  pdc->add_option("-n", n)->required();
  pdc->callback([&] {
    action = [&] {
      const PeriodData d = eisenstein_period_data(n);
      json v;
      v["r2n"] = to_json(d.r2n);
      v["petersson"] = d.petersson;
      v["odd_period"] = to_json(d.odd_period);
      emit_record(out, st, record("period-data", {{"n", n}}, v));
      return 0;
    };
  });

  // Verification subcommands.
  auto* ver = app.add_subcommand("verify", "Numerical and exact identity checks");
  ver->require_subcommand(1);
  int w_max = 10, pq_max = 30, num_tau = 4;
  std::vector<double> xs{0.003, 0.007, 0.011};
  std::vector<double> ss{0.004, 0.009};
  std::vector<double> heights{10.0, 15.0, 20.0};
  double s_par = 0.013, t_par = 0.007;

  cli::ToleranceTable tols;
  SeriesPolicy vpol;
  vpol.tol = 1e-15;
  auto verify = [&](CLI::App* sub, std::function<std::vector<CheckLine>()> run) {
    sub->callback([&, run] {
      action = [&, run] { return emit_checks(out, st, run()); };
    });
  };
  auto tau_v = [&] { return TauPoint::parse(tau_text); };

  auto* v1 = ver->add_subcommand("apostol-reciprocity", "Exact reciprocity of the classical sums over a grid");
  v1->add_option("--w-max", w_max);
  v1->add_option("--pq-max", pq_max);
  verify(v1, [&] { return cli::check_apostol_reciprocity(w_max, pq_max); });

  auto* v2 = ver->add_subcommand("thm11", "Reciprocity, periodicity and oddness of D-_2n");
  v2->add_option("-n", n);
  v2->add_option("-p", p);
  v2->add_option("-q", q);
  add_tau(v2);
  verify(v2, [&] { return cli::check_symbol_reciprocity(n, p, q, tau_v(), tols, vpol); });

  auto* v3 = ver->add_subcommand("thm13", "Generating-function reciprocity: constant in x and its value");
  v3->add_option("-p", p);
  v3->add_option("-q", q);
  v3->add_option("-x", xs)->expected(1, 16);
  add_tau(v3);
  verify(v3, [&] { return cli::check_generating(p, q, tau_v(), xs, tols, vpol); });

  auto* v4 = ver->add_subcommand("prop31", "B_1 division-point sums: constant in s, value, B_2 closed form");
  v4->add_option("-p", p);
  v4->add_option("-q", q);
  v4->add_option("-s", ss)->expected(1, 16);
  add_tau(v4);
  verify(v4, [&] { return cli::check_b1_sums(p, q, tau_v(), ss, tols, vpol); });

  auto* v5 = ver->add_subcommand("lemma32", "Vanishing combinations of elliptic Dedekind-Rademacher sums");
  v5->add_option("-p", p);
  v5->add_option("-q", q);
  v5->add_option("-s", s_par);
  v5->add_option("-t", t_par);
  add_tau(v5);
  verify(v5, [&] { return cli::check_machide(p, q, s_par, t_par, tau_v(), tols, vpol); });

  int k_sel = 0;
  auto* v6 = ver->add_subcommand("eq73", "Binomial identities among Eisenstein products (all k if -k omitted)");
  v6->add_option("-n", n);
  v6->add_option("-k", k_sel);
  add_tau(v6);
  verify(v6, [&] { return cli::check_binomial(n, k_sel, tau_v(), tols, vpol); });

  auto* v7 = ver->add_subcommand("three-term", "Weighted three-term relation of T-_2n");
  v7->add_option("-n", n);
  v7->add_option("-p", p);
  v7->add_option("-q", q);
  add_tau(v7);
  verify(v7, [&] { return cli::check_three_term(n, p, q, tau_v(), tols, vpol); });

  auto* v8 = ver->add_subcommand("eq64", "R-_w against its single-Eisenstein expansion (no cusp forms)");
  v8->add_option("-w", w);
  add_tau(v8);
  verify(v8, [&] { return cli::check_eisenstein_expansion(w, tau_v(), tols, vpol); });

  auto* v9 = ver->add_subcommand("basis-rank", "Rank of R-_w coefficient vectors over sampled tau");
  v9->add_option("-w", w);
  v9->add_option("--num-tau", num_tau);
  verify(v9, [&] { return cli::check_basis_rank(w, num_tau, st.seed, vpol); });

  auto* v10 = ver->add_subcommand("limit", "Approach of D-_2n(p, q; it) to the classical sum as t grows");
  v10->add_option("-n", n);
  v10->add_option("-p", p);
  v10->add_option("-q", q);
  v10->add_option("--heights", heights)->expected(1, 16);
  verify(v10, [&] { return cli::check_limit(n, p, q, heights, tols, vpol); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (const char* env = std::getenv("ELLDED_TOL"); env != nullptr && !tol_given) {
    try {
      st.tol = std::stod(env);
      tol_given = true;
    } catch (const std::exception&) {
      err << "error: ELLDED_TOL is not a number\n";
      return 2;
    }
  }
  if (tol_given) {
    if (!(st.tol > 0.0 && st.tol <= 1e-3)) {
      err << "error: tolerance must lie in (0, 1e-3]\n";
      return 2;
    }
    tols.override_all(st.tol);
  }
  vpol.max_terms = st.max_terms;

  if (!action) {
    err << "error: no command\n";
    return 2;
  }
  try {
    return action();
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ellded
