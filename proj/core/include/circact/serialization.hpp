#pragma once

#include <string>
#include <utility>
#include <vector>

#include "circact/circle_homeo.hpp"
#include "circact/conjugacy.hpp"
#include "circact/gap_set.hpp"
#include "circact/interval_homeo.hpp"
#include "circact/line_homeo.hpp"
#include "circact/recovery.hpp"

namespace circact {

// JSON documents with every rational written as its canonical "num/den"
// string ("num" when the denominator is 1), never as a float. Writers are
// deterministic: equal values produce byte-identical documents; readers
// throw ParseError on malformed documents and let constructor validation
// errors pass through.

// {"breakpoints": [["0","0"],["1/2","1/4"]]}
std::string write_circle_homeo(const CircleHomeo& f);
CircleHomeo read_circle_homeo(const std::string& doc);

std::string write_line_homeo(const LineHomeo& f);
LineHomeo read_line_homeo(const std::string& doc);

std::string write_interval_homeo(const IntervalHomeo& f);
IntervalHomeo read_interval_homeo(const std::string& doc);

// {"blocks": [["0","0"],["1/2","1"]], "signs": ["-1"]}
std::string write_gap_lambda(const GapSet& K, const SignAssignment& lambda);
std::pair<GapSet, SignAssignment> read_gap_lambda(const std::string& doc);

// Conjugating-map recipe: the base interval homeomorphism plus the twist
// steps on gaps of the right-hand GapSet.
struct WitnessRecipe {
  IntervalHomeo base;
  std::vector<TwistStep> twists;
};

// {"base": [["0","0"],["1","1"]], "twists": [{"direction":1,"gap":0}]}
std::string write_witness(const WitnessRecipe& w);
WitnessRecipe read_witness(const std::string& doc);

// {"conjugate": ..., "orientation": ..., "witness": {...}} with the witness
// field present only on positive verdicts.
std::string write_verdict(const ConjugacyVerdict& v);

std::string write_annulus_report(const GapSet& K, const SignAssignment& lambda,
                                 bool certified, const Rational& max_width,
                                 int generator_budget);
std::string write_torus_report(const GapSet& K, bool certified,
                               const Rational& max_width,
                               int generator_budget);
std::string write_line_report(const std::vector<LinePointEstimate>& points);

}  // namespace circact
