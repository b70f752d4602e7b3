// circact: batch subcommands over the JSON text formats.
//
// Document arguments accept either a file path or an inline JSON document
// (detected by a leading '{' or '['). Exit codes: 0 success, 2 invalid
// input, 3 inconclusive recovery.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "circact/circact.hpp"
#include "json.hpp"

namespace {

using namespace circact;
using nlohmann::json;

std::string load_doc(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    return arg;
  }
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_doc(const std::string& arg) {
  try {
    return json::parse(load_doc(arg));
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON document: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

Rational rat_field(const json& j) {
  if (!j.is_string()) {
    throw ParseError("rational values must be \"num/den\" strings");
  }
  return Rational::from_string(j.get<std::string>());
}

std::vector<Rational> split_rationals(const std::string& s) {
  std::vector<Rational> out;
  size_t pos = 0;
  while (true) {
    const size_t comma = s.find(',', pos);
    out.push_back(Rational::from_string(s.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::pair<Rational, Rational> parse_pair(const std::string& s) {
  const auto parts = split_rationals(s);
  if (parts.size() != 2) {
    throw ParseError("point must be two comma-separated rationals");
  }
  return {parts[0], parts[1]};
}

std::string pair_str(const Rational& a, const Rational& b) {
  return a.str() + "," + b.str();
}

std::pair<GapSet, SignAssignment> gap_lambda_fields(const json& j) {
  const json sub{{"blocks", field(j, "blocks")}, {"signs", field(j, "signs")}};
  return read_gap_lambda(sub.dump());
}

// Oracle fixtures name one of the model-action constructors plus its data;
// "query_only": true hides the image maps behind pointwise evaluation.
AnnulusOracle annulus_oracle_from(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  AnnulusOracle::Materializer mat;
  if (kind == "p") {
    mat = [](const CircleHomeo& f) { return act_p(f); };
  } else if (kind == "a_minus") {
    mat = [](const CircleHomeo& f) { return act_a_minus(f); };
  } else if (kind == "a_plus") {
    mat = [](const CircleHomeo& f) { return act_a_plus(f); };
  } else if (kind == "phi") {
    const auto [K, la] = gap_lambda_fields(j);
    mat = [K, la](const CircleHomeo& f) { return act_phi(K, la, f); };
  } else if (kind == "conjugated_phi") {
    const auto [K, la] = gap_lambda_fields(j);
    const IntervalHomeo base = read_interval_homeo(
        json{{"breakpoints", field(j, "base")}}.dump());
    const AnnulusMap h = lift_to_annulus(base);
    const AnnulusMap hinv = h.inverse();
    mat = [K, la, h, hinv](const CircleHomeo& f) {
      return h * act_phi(K, la, f) * hinv;
    };
  } else {
    throw ParseError("unknown annulus oracle kind \"" + kind + "\"");
  }
  if (j.value("query_only", false)) {
    return AnnulusOracle::from_query(
        [mat](const CircleHomeo& f, const AnnulusPoint& p) {
          return mat(f)(p);
        });
  }
  return AnnulusOracle::from_action(mat);
}

TorusOracle torus_oracle_from(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  TorusOracle::Materializer mat;
  if (kind == "diag") {
    mat = [](const CircleHomeo& f) { return act_torus_diag(f); };
  } else if (kind == "phi_torus") {
    const auto [K, la] = gap_lambda_fields(j);
    mat = [K, la](const CircleHomeo& f) { return act_phi_torus(K, la, f); };
  } else {
    throw ParseError("unknown torus oracle kind \"" + kind + "\"");
  }
  if (j.value("query_only", false)) {
    return TorusOracle::from_query(
        [mat](const CircleHomeo& f, const TorusPoint& p) {
          return mat(f)(p);
        });
  }
  return TorusOracle::from_action(mat);
}

LineOracle line_oracle_from(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  const LineHomeo h = read_line_homeo(field(j, "map").dump());
  if (kind == "line_conjugation") {
    const LineHomeo hinv = h.inverse();
    return LineOracle::from_action(
        [h, hinv](const LineHomeo& g) { return h * g * hinv; });
  }
  if (kind == "line_constant") {
    return LineOracle::from_action([h](const LineHomeo&) { return h; });
  }
  throw ParseError("unknown line oracle kind \"" + kind + "\"");
}

std::string run_eval(const std::string& map_arg, const std::string& point) {
  const CircleHomeo f = read_circle_homeo(load_doc(map_arg));
  return json(f(Rational::from_string(point)).str()).dump();
}

std::string run_act(const std::string& model, const std::string& data_arg,
                    const std::string& map_arg, const std::string& point) {
  const CircleHomeo f = read_circle_homeo(load_doc(map_arg));
  const bool needs_data = model.rfind("phi", 0) == 0;
  if (needs_data && data_arg.empty()) {
    throw ValidationError("model " + model + " requires --data");
  }
  if (!needs_data && !data_arg.empty()) {
    throw ValidationError("model " + model + " takes no --data");
  }
  GapSet K = GapSet::full_interval();
  SignAssignment la;
  if (needs_data) {
    std::tie(K, la) = read_gap_lambda(load_doc(data_arg));
  }

  if (model == "p" || model == "a-minus" || model == "a-plus" ||
      model == "phi") {
    const auto [r, th] = parse_pair(point);
    const AnnulusPoint p(r, th);
    AnnulusMap m;
    if (model == "p") m = act_p(f);
    if (model == "a-minus") m = act_a_minus(f);
    if (model == "a-plus") m = act_a_plus(f);
    if (model == "phi") m = act_phi(K, la, f);
    const AnnulusPoint q = m(p);
    return json(pair_str(q.r, q.theta)).dump();
  }
  if (model == "a-torus" || model == "phi-torus") {
    const auto [x, y] = parse_pair(point);
    const TorusMap m = model == "a-torus" ? act_torus_diag(f)
                                          : act_phi_torus(K, la, f);
    const TorusPoint q = m(TorusPoint(x, y));
    return json(pair_str(q.x, q.y)).dump();
  }
  if (model == "phi-disc") {
    const DiscMap m = act_phi_disc(K, la, f);
    const DiscPoint q = point == "cone"
                            ? m(DiscPoint::cone_point())
                            : m(DiscPoint(parse_pair(point).first,
                                          parse_pair(point).second));
    return json(q.cone ? std::string("cone") : pair_str(q.r, q.theta)).dump();
  }
  if (model == "phi-sphere") {
    const SphereMap m = act_phi_sphere(K, la, f);
    SpherePoint p = SpherePoint::south();
    if (point == "north") {
      p = SpherePoint::north();
    } else if (point != "south") {
      const auto [r, th] = parse_pair(point);
      p = SpherePoint(r, th);
    }
    const SpherePoint q = m(p);
    if (q.pole < 0) return json(std::string("south")).dump();
    if (q.pole > 0) return json(std::string("north")).dump();
    return json(pair_str(q.r, q.theta)).dump();
  }
  throw ValidationError("unknown model \"" + model + "\"");
}

std::string run_decide(const std::string& left_arg,
                       const std::string& right_arg) {
  const auto [K, la] = read_gap_lambda(load_doc(left_arg));
  const auto [Kp, lap] = read_gap_lambda(load_doc(right_arg));
  return write_verdict(decide_conjugacy(K, la, Kp, lap));
}

std::string run_verify(const std::string& witness_arg,
                       const std::string& left_arg,
                       const std::string& right_arg, int grid) {
  if (grid < 2) throw ValidationError("grid must be at least 2");
  const WitnessRecipe recipe = read_witness(load_doc(witness_arg));
  const auto [K, la] = read_gap_lambda(load_doc(left_arg));
  const auto [Kp, lap] = read_gap_lambda(load_doc(right_arg));
  const AnnulusMap w = assemble_witness(recipe.base, recipe.twists, Kp);
  const bool ok =
      verify_conjugacy(w, phi_family(K, la), phi_family(Kp, lap),
                       standard_test_family(), standard_grid(grid));
  const json out{{"grid", grid},
                 {"test_family", "rotations-bumps-composite"},
                 {"test_maps", standard_test_family().size()},
                 {"verified", ok}};
  return out.dump();
}

std::string run_recover_annulus(const std::string& oracle_arg,
                                const std::string& anchor, int budget) {
  const AnnulusOracle oracle = annulus_oracle_from(parse_doc(oracle_arg));
  const Rational theta0 = Rational::from_string(anchor);
  const GapSet K = recover_gapset(oracle, theta0, budget);
  const SignAssignment la = recover_signs(oracle, K, theta0);
  const bool certified = oracle.materializable();
  return write_annulus_report(K, la, certified,
                              certified ? Rational(0) : dyadic(20), budget);
}

std::string run_recover_torus(const std::string& oracle_arg,
                              const std::string& anchor, int budget) {
  const TorusOracle oracle = torus_oracle_from(parse_doc(oracle_arg));
  const GapSet K =
      recover_torus_circle(oracle, Rational::from_string(anchor), budget);
  const bool certified = oracle.materializable();
  return write_torus_report(K, certified,
                            certified ? Rational(0) : dyadic(20), budget);
}

std::string run_recover_line(const std::string& oracle_arg,
                             const std::string& grid_arg) {
  const LineOracle oracle = line_oracle_from(parse_doc(oracle_arg));
  const json g = parse_doc(grid_arg);
  const json& pts = field(g, "points");
  if (!pts.is_array() || pts.empty()) {
    throw ParseError("\"points\" must be a non-empty array");
  }
  std::vector<Rational> grid;
  for (const auto& p : pts) grid.push_back(rat_field(p));
  std::vector<Rational> schedule;
  if (g.contains("schedule")) {
    for (const auto& e : g["schedule"]) schedule.push_back(rat_field(e));
  } else {
    for (int k = 2; k <= 27; ++k) schedule.push_back(dyadic(k));
  }
  return write_line_report(recover_line_conjugacy(oracle, grid, schedule));
}

void emit(const std::string& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file: " + out_path);
  out << doc << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact actions of circle homeomorphisms on surfaces"};
  app.require_subcommand(1);

  std::string map_arg, data_arg, point, model;
  std::string left_arg, right_arg, witness_arg, oracle_arg, grid_arg;
  std::string anchor = "0", out_path;
  int grid_n = 20, budget = 4;

  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("-o,--out", out_path, "write the result document here");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a circle map");
  eval->add_option("--map", map_arg, "circle map document")->required();
  eval->add_option("--point", point, "rational point")->required();
  add_out(eval);

  CLI::App* act = app.add_subcommand("act", "apply a model action");
  act->add_option("--model", model,
                  "p, a-minus, a-plus, a-torus, phi, phi-torus, phi-disc, "
                  "phi-sphere")
      ->required();
  act->add_option("--data", data_arg, "(K, lambda) document for phi models");
  act->add_option("--map", map_arg, "circle map document")->required();
  act->add_option("--point", point, R"(surface point, e.g. "1/2,1/4")")
      ->required();
  add_out(act);

  CLI::App* decide = app.add_subcommand("decide", "decide conjugacy");
  decide->add_option("--left", left_arg, "(K, lambda) document")->required();
  decide->add_option("--right", right_arg, "(K', lambda') document")
      ->required();
  add_out(decide);

  CLI::App* verify =
      app.add_subcommand("verify", "check a conjugacy witness recipe");
  verify->add_option("--witness", witness_arg, "witness recipe document")
      ->required();
  verify->add_option("--left", left_arg, "(K, lambda) document")->required();
  verify->add_option("--right", right_arg, "(K', lambda') document")
      ->required();
  verify->add_option("--grid", grid_n, "sample grid size per side");
  add_out(verify);

  CLI::App* rec_a = app.add_subcommand(
      "recover-annulus", "recover (K, lambda) from an annulus oracle");
  rec_a->add_option("--oracle", oracle_arg, "oracle fixture document")
      ->required();
  rec_a->add_option("--budget", budget, "stabilizer generators to sample");
  rec_a->add_option("--anchor", anchor, "fiber anchor theta0");
  add_out(rec_a);

  CLI::App* rec_t = app.add_subcommand(
      "recover-torus", "recover the invariant circle from a torus oracle");
  rec_t->add_option("--oracle", oracle_arg, "oracle fixture document")
      ->required();
  rec_t->add_option("--budget", budget, "stabilizer generators to sample");
  rec_t->add_option("--anchor", anchor, "fiber anchor theta0");
  add_out(rec_t);

  CLI::App* rec_l = app.add_subcommand(
      "recover-line", "recover a hidden line conjugator on a grid");
  rec_l->add_option("--oracle", oracle_arg, "oracle fixture document")
      ->required();
  rec_l->add_option("--grid", grid_arg,
                    R"(grid document {"points": [...], "schedule": [...]})")
      ->required();
  add_out(rec_l);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::string doc;
    if (eval->parsed()) doc = run_eval(map_arg, point);
    if (act->parsed()) doc = run_act(model, data_arg, map_arg, point);
    if (decide->parsed()) doc = run_decide(left_arg, right_arg);
    if (verify->parsed())
      doc = run_verify(witness_arg, left_arg, right_arg, grid_n);
    if (rec_a->parsed()) doc = run_recover_annulus(oracle_arg, anchor, budget);
    if (rec_t->parsed()) doc = run_recover_torus(oracle_arg, anchor, budget);
    if (rec_l->parsed()) doc = run_recover_line(oracle_arg, grid_arg);
    emit(doc, out_path);
    return 0;
  } catch (const RecoveryFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
