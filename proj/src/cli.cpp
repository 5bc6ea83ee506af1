#include "opslice/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <memory>
#include <sstream>

#include "opslice/suites.hpp"

namespace opslice {

namespace {

Json load_payload(const std::string& input) {
  if (input.empty()) throw parse_error("empty --input");
  const size_t first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (input[first] == '{' || input[first] == '['))
    return Json::parse(input);
  std::ifstream in(input);
  if (!in) throw parse_error("cannot open input file: " + input);
  Json j;
  in >> j;
  return j;
}

// Holds the parsed algebra so connections and subspaces can point into it.
struct Workspace {
  std::shared_ptr<LieAlgebra> algebra;
  Sl2Triple triple;
  SlodowyData sd;
  ParabolicData pd;
};

Sl2Triple triple_from_payload(const Json& payload, const LieAlgebra& g) {
  if (payload.contains("triple")) {
    Sl2Triple t = triple_from_json(payload.at("triple"));
    if (!validate_triple(t)) throw error("supplied triple fails the bracket relations");
    return t;
  }
  if (payload.contains("e")) return jm_complete(qmatrix_from_json(payload.at("e")), g);
  throw parse_error("payload needs either \"e\" or \"triple\"");
}

Workspace workspace_from_payload(const Json& payload) {
  Workspace ws;
  ws.algebra = std::make_shared<LieAlgebra>(algebra_from_json(payload.at("algebra")));
  ws.triple = triple_from_payload(payload, *ws.algebra);
  GradedDecomposition gr = ad_h_grading(ws.triple, *ws.algebra);
  ws.sd = slodowy_data(ws.triple, *ws.algebra, gr);
  ws.pd = parabolic_data(ws.triple, *ws.algebra, std::move(gr));
  return ws;
}

Json grading_summary(const GradedDecomposition& gr) {
  Json j = Json::object();
  for (int w : gr.weights) j[std::to_string(w)] = gr.dim_at(w);
  return j;
}

Json multiplicities_to_json(const ModuleMultiplicities& mm) {
  Json j = Json::object();
  for (const auto& [w, n] : mm.entries) j[std::to_string(w)] = n;
  return j;
}

Json subspace_to_json(const SubspaceBasis& s) {
  Json arr = Json::array();
  for (const auto& v : s.vectors) arr.push_back(to_json(v));
  return arr;
}

Json suite_to_json(const SuiteResult& r) {
  Json j;
  j["trials"] = r.trials;
  j["passed"] = r.passed;
  Json fails = Json::array();
  for (const auto& f : r.failures) fails.push_back({{"trial", f.trial}, {"what", f.what}});
  j["failures"] = std::move(fails);
  return j;
}

Json table_to_json(const TableResult& t) {
  Json j;
  j["family"] = model_family_name(t.desc.family);
  j["n"] = t.desc.n;
  if (t.desc.k > 0) j["k"] = t.desc.k;
  j["computed"] = multiplicities_to_json(t.computed);
  j["expected"] = multiplicities_to_json(t.expected);
  j["centralizer_dim"] = t.centralizer_dim;
  j["match"] = t.ok();
  return j;
}

LambdaConnection connection_from_payload(const Json& j, std::shared_ptr<LieAlgebra>& holder) {
  holder = std::make_shared<LieAlgebra>(algebra_from_json(j.at("algebra")));
  LambdaConnection conn;
  conn.lambda = rational_from_json(j.at("lambda"));
  conn.A = pmatrix_from_json(j.at("A"));
  conn.algebra = holder.get();
  if (conn.A.rows() != holder->n || conn.A.cols() != holder->n)
    throw parse_error("connection matrix size does not match the algebra");
  return conn;
}

ModelDescriptor descriptor_from_flags(const std::string& family, int n, int k) {
  ModelDescriptor d;
  d.family = model_family_from_name(family);
  d.n = n;
  d.k = k;
  return d;
}

struct CommandIO {
  std::string input;
  std::string family;
  int n = 0, k = 0;
  int trials = 100;
  uint64_t seed = 1;
  int degree_cap = 3;
  std::string lambda = "1";
  std::string model_action;  // for the model subcommand
  std::string hitchin_action = "map";
};

}  // namespace

CliResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"computational Lie theory of even nilpotents and oper normal forms"};
  app.require_subcommand(1);
  CommandIO io;
  std::string json_out;

  auto add_common = [&](CLI::App* cmd, bool with_input, bool with_model_flags) {
    cmd->add_option("--json-out", json_out, "also write the report JSON to this path");
    if (with_input) cmd->add_option("--input", io.input, "payload path or inline JSON");
    if (with_model_flags) {
      cmd->add_option("--family", io.family, "model family")->required();
      cmd->add_option("--n", io.n, "size parameter")->required();
      cmd->add_option("--k", io.k, "flag depth (partial-flag family)");
    }
  };

  CLI::App* jm = app.add_subcommand("jm-complete", "complete a nilpotent to a triple");
  add_common(jm, true, false);
  CLI::App* sdata = app.add_subcommand("slodowy-data", "centralizer decomposition of an even triple");
  add_common(sdata, true, false);
  CLI::App* lynch = app.add_subcommand("lynch", "slice bijection, decompose or compose");
  add_common(lynch, true, false);
  CLI::App* build = app.add_subcommand("build-oper", "normal-form connection from coefficients");
  add_common(build, true, false);
  CLI::App* norm = app.add_subcommand("normalize-oper", "gauge a connection to normal form");
  add_common(norm, true, false);
  CLI::App* check = app.add_subcommand("check-oper", "oper position test");
  add_common(check, true, false);
  CLI::App* model = app.add_subcommand("model", "explicit model families");
  model->add_option("action", io.model_action, "triple | table-check | build")->required();
  add_common(model, true, true);
  model->add_option("--lambda", io.lambda, "lambda value for build");
  CLI::App* hitchin = app.add_subcommand("hitchin", "invariant coefficients and section");
  hitchin->add_option("action", io.hitchin_action, "map | section");
  add_common(hitchin, true, false);
  hitchin->add_option("--n", io.n, "size for the section");
  CLI::App* rsuite = app.add_subcommand("roundtrip-suite", "seeded build/gauge/normalize trials");
  add_common(rsuite, false, true);
  rsuite->add_option("--lambda", io.lambda, "lambda value");
  rsuite->add_option("--trials", io.trials, "number of trials");
  rsuite->add_option("--seed", io.seed, "seed");
  rsuite->add_option("--degree-cap", io.degree_cap, "max polynomial degree");
  CLI::App* tcheck = app.add_subcommand("table-check", "multiplicities against the closed-form table");
  add_common(tcheck, false, true);

  CliResult out;
  const auto t0 = std::chrono::steady_clock::now();
  std::string command;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    CLI::App* sub = app.get_subcommands().front();
    command = sub->get_name();
    out.report["command"] = command;
    Json results;

    if (sub == jm) {
      Json payload = load_payload(io.input);
      auto g = std::make_shared<LieAlgebra>(algebra_from_json(payload.at("algebra")));
      Sl2Triple t = jm_complete(qmatrix_from_json(payload.at("e")), *g);
      GradedDecomposition gr = ad_h_grading(t, *g);
      results["triple"] = triple_to_json(t);
      results["grading_dims"] = grading_summary(gr);
      results["even"] = is_even(gr);
      results["multiplicities"] = multiplicities_to_json(module_multiplicities(t, *g, gr));
    } else if (sub == sdata) {
      Workspace ws = workspace_from_payload(load_payload(io.input));
      Json exps = Json::array();
      for (int m : ws.sd.exponents) exps.push_back(m);
      results["exponents"] = std::move(exps);
      results["multiplicities"] =
          multiplicities_to_json(module_multiplicities(ws.triple, *ws.algebra, ws.sd.grading));
      results["c_basis"] = subspace_to_json(ws.sd.c_basis);
      Json hw = Json::object();
      for (const auto& [m, s] : ws.sd.hw_spaces) hw[std::to_string(m)] = subspace_to_json(s);
      results["hw_spaces"] = std::move(hw);
      results["vhat2"] = subspace_to_json(ws.sd.vhat2);
    } else if (sub == lynch) {
      Json payload = load_payload(io.input);
      Workspace ws = workspace_from_payload(payload);
      const std::string mode = payload.value("mode", "decompose");
      if (mode == "decompose") {
        LynchParts<Rational> parts =
            lynch_decompose(qmatrix_from_json(payload.at("a")), ws.sd, *ws.algebra);
        Json xp = Json::object();
        for (const auto& [w, m] : parts.x_parts) xp[std::to_string(w)] = to_json(m);
        results["x_parts"] = std::move(xp);
        results["v"] = to_json(parts.v);
      } else if (mode == "compose") {
        std::map<int, QMatrix> x_parts;
        for (const auto& [w, m] : payload.at("x_parts").items())
          x_parts.emplace(std::stoi(w), qmatrix_from_json(m));
        results["a"] = to_json(lynch_compose(x_parts, qmatrix_from_json(payload.at("v")), ws.sd));
      } else {
        throw parse_error("lynch mode must be decompose or compose");
      }
    } else if (sub == build) {
      Json payload = load_payload(io.input);
      Workspace ws = workspace_from_payload(payload);
      SlodowyCoefficients coeffs = coefficients_from_json(payload.at("coefficients"));
      LambdaConnection conn = slodowy_functor(ws.sd, coeffs, *ws.algebra);
      results["connection"] = connection_to_json(conn);
      results["oper"] = is_oper(conn, ws.pd);
    } else if (sub == norm) {
      Json payload = load_payload(io.input);
      Workspace ws = workspace_from_payload(payload);
      std::shared_ptr<LieAlgebra> holder;
      Json cj = payload.at("connection");
      LambdaConnection conn;
      conn.lambda = rational_from_json(cj.at("lambda"));
      conn.A = pmatrix_from_json(cj.at("A"));
      conn.algebra = ws.algebra.get();
      NormalizeResult nr = normalize(conn, ws.sd, ws.pd);
      results["gauge"] = gauge_to_json(nr.gauge);
      results["coefficients"] = coefficients_to_json(nr.coeffs);
    } else if (sub == check) {
      Json payload = load_payload(io.input);
      Workspace ws = workspace_from_payload(payload);
      Json cj = payload.at("connection");
      LambdaConnection conn;
      conn.lambda = rational_from_json(cj.at("lambda"));
      conn.A = pmatrix_from_json(cj.at("A"));
      conn.algebra = ws.algebra.get();
      OperCheck oc = check_oper(conn, ws.pd);
      results["oper"] = oc.ok;
      results["minor_gcd"] = to_json(oc.minor_gcd);
      if (!oc.ok) {
        results["reason"] = oc.reason;
        out.exit_code = 1;
      }
    } else if (sub == model) {
      ModelDescriptor d = descriptor_from_flags(io.family, io.n, io.k);
      if (io.model_action == "triple") {
        ModelContext mc = make_model_context(d);
        results["triple"] = triple_to_json(mc.triple);
        results["grading_dims"] = grading_summary(mc.sd.grading);
      } else if (io.model_action == "table-check") {
        TableResult tr = run_table_check(d);
        results = table_to_json(tr);
        if (!tr.ok()) out.exit_code = 1;
      } else if (io.model_action == "build") {
        ModelContext mc = make_model_context(d);
        Json payload = load_payload(io.input);
        Rational lambda = rational_from_string(io.lambda);
        LambdaConnection conn = [&] {
          switch (d.family) {
            case ModelFamily::sln_borel: {
              std::vector<Polynomial> psis;
              for (const auto& p : payload.value("psis", Json::array())) psis.push_back(polynomial_from_json(p));
              return build_borel_oper(mc, lambda, polynomial_from_json(payload.at("q")), psis);
            }
            case ModelFamily::tube_sl:
            case ModelFamily::tube_sp:
            case ModelFamily::tube_so4n:
              return build_tube_oper(mc, lambda, pmatrix_from_json(payload.at("psi0")),
                                     polynomial_from_json(payload.at("q")),
                                     pmatrix_from_json(payload.at("psi1")));
            default: {
              std::vector<Polynomial> borel, hat;
              for (const auto& p : payload.at("borel_psis")) borel.push_back(polynomial_from_json(p));
              for (const auto& p : payload.at("psihat_k")) hat.push_back(polynomial_from_json(p));
              return build_so_flag_oper(mc, lambda, pmatrix_from_json(payload.at("psi0")), borel, hat);
            }
          }
        }();
        results["connection"] = connection_to_json(conn);
        results["oper"] = is_oper(conn, mc.pd);
      } else {
        throw parse_error("model action must be triple, table-check or build");
      }
    } else if (sub == hitchin) {
      Json payload = load_payload(io.input);
      if (io.hitchin_action == "map") {
        std::shared_ptr<LieAlgebra> holder;
        LambdaConnection conn = connection_from_payload(payload.at("connection"), holder);
        Json ps = Json::array();
        for (const auto& p : hitchin_map(conn)) ps.push_back(to_json(p));
        results["p"] = std::move(ps);
      } else if (io.hitchin_action == "section") {
        ModelContext mc = make_model_context({ModelFamily::sln_borel, io.n, 0});
        std::vector<Polynomial> qs;
        for (const auto& p : payload.at("qs")) qs.push_back(polynomial_from_json(p));
        LambdaConnection conn = hitchin_section(qs, mc.sd, *mc.algebra);
        results["connection"] = connection_to_json(conn);
        SlodowyCoefficients sc = slice_coords(conn.A, mc.sd, *mc.algebra);
        results["slice_coords"] = coefficients_to_json(sc);
      } else {
        throw parse_error("hitchin action must be map or section");
      }
    } else if (sub == rsuite) {
      ModelDescriptor d = descriptor_from_flags(io.family, io.n, io.k);
      ModelContext mc = make_model_context(d);
      SuiteOptions opt;
      opt.desc = d;
      opt.lambda = rational_from_string(io.lambda);
      opt.trials = io.trials;
      opt.seed = io.seed;
      opt.degree_cap = io.degree_cap;
      SuiteResult sr = run_roundtrip_suite(mc, opt);
      results = suite_to_json(sr);
      if (!sr.ok()) out.exit_code = 1;
    } else if (sub == tcheck) {
      TableResult tr = run_table_check(descriptor_from_flags(io.family, io.n, io.k));
      results = table_to_json(tr);
      if (!tr.ok()) out.exit_code = 1;
    }

    out.report["results"] = std::move(results);
    out.report["status"] = out.exit_code == 0 ? "pass" : "fail";
  } catch (const CLI::ParseError& ex) {
    out.exit_code = 2;
    out.report["status"] = "error";
    out.report["error"] = ex.what();
  } catch (const parse_error& ex) {
    out.exit_code = 2;
    out.report["status"] = "error";
    out.report["error"] = ex.what();
  } catch (const Json::exception& ex) {
    out.exit_code = 2;
    out.report["status"] = "error";
    out.report["error"] = ex.what();
  } catch (const std::exception& ex) {
    out.exit_code = 1;
    out.report["status"] = "fail";
    out.report["error"] = ex.what();
  }

  const auto t1 = std::chrono::steady_clock::now();
  out.report["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  if (!json_out.empty()) {
    std::ofstream f(json_out);
    f << out.report.dump(2) << "\n";
  }
  return out;
}

}  // namespace opslice
