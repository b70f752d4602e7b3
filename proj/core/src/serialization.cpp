#include "circact/serialization.hpp"

#include "circact/errors.hpp"
#include "json.hpp"

namespace circact {

namespace {

using nlohmann::json;

json parse(const std::string& doc) {
  try {
    return json::parse(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON document: ") + e.what());
  }
}

Rational rat(const json& j) {
  if (!j.is_string()) {
    throw ParseError("rational values must be \"num/den\" strings");
  }
  return Rational::from_string(j.get<std::string>());
}

template <typename Pts>
json points_json(const Pts& pts) {
  json arr = json::array();
  for (const auto& p : pts) {
    arr.push_back(json::array({p.first.str(), p.second.str()}));
  }
  return arr;
}

std::vector<std::pair<Rational, Rational>> points_from(const json& arr,
                                                       const char* what) {
  if (!arr.is_array()) {
    throw ParseError(std::string(what) + " must be an array of pairs");
  }
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(arr.size());
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2) {
      throw ParseError(std::string(what) + " entries must be pairs");
    }
    pts.emplace_back(rat(p[0]), rat(p[1]));
  }
  return pts;
}

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

json blocks_json(const GapSet& K) { return points_json(K.blocks()); }

json signs_json(const SignAssignment& lambda) {
  json arr = json::array();
  for (int s : lambda.signs()) arr.push_back(std::to_string(s));
  return arr;
}

SignAssignment signs_from(const json& arr) {
  if (!arr.is_array()) throw ParseError("\"signs\" must be an array");
  std::vector<int> out;
  out.reserve(arr.size());
  for (const auto& s : arr) {
    const Rational v = rat(s);
    if (v == Rational(1)) {
      out.push_back(1);
    } else if (v == Rational(-1)) {
      out.push_back(-1);
    } else {
      throw ValidationError("signs must be \"1\" or \"-1\"");
    }
  }
  return SignAssignment(std::move(out));
}

}  // namespace

std::string write_circle_homeo(const CircleHomeo& f) {
  return json{{"breakpoints", points_json(f.breakpoints())}}.dump();
}

CircleHomeo read_circle_homeo(const std::string& doc) {
  const json j = parse(doc);
  return make_circle_homeo(points_from(field(j, "breakpoints"), "breakpoints"));
}

std::string write_line_homeo(const LineHomeo& f) {
  return json{{"breakpoints", points_json(f.breakpoints())}}.dump();
}

LineHomeo read_line_homeo(const std::string& doc) {
  const json j = parse(doc);
  return make_line_homeo(points_from(field(j, "breakpoints"), "breakpoints"));
}

std::string write_interval_homeo(const IntervalHomeo& f) {
  return json{{"breakpoints", points_json(f.breakpoints())}}.dump();
}

IntervalHomeo read_interval_homeo(const std::string& doc) {
  const json j = parse(doc);
  return IntervalHomeo::from_breakpoints(
      points_from(field(j, "breakpoints"), "breakpoints"));
}

std::string write_gap_lambda(const GapSet& K, const SignAssignment& lambda) {
  return json{{"blocks", blocks_json(K)}, {"signs", signs_json(lambda)}}
      .dump();
}

std::pair<GapSet, SignAssignment> read_gap_lambda(const std::string& doc) {
  const json j = parse(doc);
  GapSet K = GapSet::from_blocks(points_from(field(j, "blocks"), "blocks"));
  SignAssignment lambda = signs_from(field(j, "signs"));
  if (lambda.size() != K.gap_count()) {
    throw SignMismatch("sign assignment length must equal the gap count");
  }
  return {std::move(K), std::move(lambda)};
}

namespace {

json witness_json(const IntervalHomeo& base,
                  const std::vector<TwistStep>& twists) {
  json tw = json::array();
  for (const TwistStep& t : twists) {
    tw.push_back(json{{"direction", t.direction},
                      {"gap", static_cast<long long>(t.gap_index)}});
  }
  return json{{"base", points_json(base.breakpoints())}, {"twists", tw}};
}

}  // namespace

std::string write_witness(const WitnessRecipe& w) {
  return witness_json(w.base, w.twists).dump();
}

WitnessRecipe read_witness(const std::string& doc) {
  const json j = parse(doc);
  WitnessRecipe w{
      IntervalHomeo::from_breakpoints(points_from(field(j, "base"), "base")),
      {}};
  const json& tw = field(j, "twists");
  if (!tw.is_array()) throw ParseError("\"twists\" must be an array");
  for (const auto& t : tw) {
    const json& gap = field(t, "gap");
    const json& dir = field(t, "direction");
    if (!gap.is_number_integer() || !dir.is_number_integer()) {
      throw ParseError("twist entries need integer \"gap\" and \"direction\"");
    }
    const long long g = gap.get<long long>();
    const int d = dir.get<int>();
    if (g < 0) throw ValidationError("twist gap index must be >= 0");
    if (d != 1 && d != -1) {
      throw ValidationError("twist direction must be 1 or -1");
    }
    w.twists.push_back({static_cast<size_t>(g), d});
  }
  return w;
}

std::string write_verdict(const ConjugacyVerdict& v) {
  json j{{"conjugate", v.conjugate}};
  switch (v.orientation) {
    case Orientation::increasing:
      j["orientation"] = "increasing";
      break;
    case Orientation::decreasing:
      j["orientation"] = "decreasing";
      break;
    case Orientation::none:
      j["orientation"] = "none";
      break;
  }
  if (v.conjugate) j["witness"] = witness_json(*v.base_homeo, v.twists);
  return j.dump();
}

std::string write_annulus_report(const GapSet& K, const SignAssignment& lambda,
                                 bool certified, const Rational& max_width,
                                 int generator_budget) {
  return json{{"K", blocks_json(K)},
              {"certified", certified},
              {"generator_budget", generator_budget},
              {"lambda", signs_json(lambda)},
              {"max_width", max_width.str()}}
      .dump();
}

std::string write_torus_report(const GapSet& K, bool certified,
                               const Rational& max_width,
                               int generator_budget) {
  return json{{"K", blocks_json(K)},
              {"certified", certified},
              {"generator_budget", generator_budget},
              {"max_width", max_width.str()}}
      .dump();
}

std::string write_line_report(const std::vector<LinePointEstimate>& points) {
  json arr = json::array();
  Rational max_width(0);
  for (const auto& p : points) {
    arr.push_back(json{{"value", p.value.str()},
                       {"width", p.width.str()},
                       {"x", p.x.str()}});
    if (max_width < p.width) max_width = p.width;
  }
  return json{{"max_width", max_width.str()}, {"points", arr}}.dump();
}

}  // namespace circact
