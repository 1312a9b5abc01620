#include "nsmean/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nsmean/bounds.hpp"
#include "nsmean/lemma_functions.hpp"
#include "nsmean/means.hpp"
#include "nsmean/series.hpp"

namespace nsmean {
namespace {

MonotoneCheck classify(const std::vector<double>& xs, const std::vector<double>& values) {
  MonotoneCheck out;
  out.points = values.size();
  if (values.size() < 2) {
    out.verdict = MonotoneVerdict::Increasing;
    out.constant = true;
    return out;
  }
  std::size_t up = 0, down = 0, flat = 0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double d = values[i + 1] - values[i];
    if (d > 0) {
      ++up;
    } else if (d < 0) {
      ++down;
    } else {
      ++flat;
    }
    min_gap = std::min(min_gap, std::fabs(d));
  }
  out.min_gap = min_gap;
  const std::size_t steps = values.size() - 1;
  if (flat == steps) {
    // Flat is not strictly monotone.
    out.verdict = MonotoneVerdict::Violation;
    out.constant = true;
    out.witness = MonotoneWitness{xs[0], xs[1], values[0], values[1]};
  } else if (down == steps) {
    out.verdict = MonotoneVerdict::Decreasing;
  } else if (up == steps) {
    out.verdict = MonotoneVerdict::Increasing;
  } else {
    out.verdict = MonotoneVerdict::Violation;
    const double overall = values.back() - values.front();
    const int direction = overall != 0 ? (overall > 0 ? 1 : -1) : (up >= down ? 1 : -1);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      const double d = values[i + 1] - values[i];
      if ((direction > 0 && !(d > 0)) || (direction < 0 && !(d < 0))) {
        out.witness = MonotoneWitness{xs[i], xs[i + 1], values[i], values[i + 1]};
        break;
      }
    }
  }
  return out;
}

std::vector<double> grid(double lo, double hi, std::size_t n) {
  if (!(lo < hi)) throw std::invalid_argument("monotone check: empty interval");
  if (n < 2) throw std::invalid_argument("monotone check: need at least 2 grid points");
  std::vector<double> xs(n);
  const double width = hi - lo;
  const double denom = static_cast<double>(n + 1);
  for (std::size_t i = 0; i < n; ++i) xs[i] = lo + width * (static_cast<double>(i + 1) / denom);
  return xs;
}

FunctionDescriptor ratio_part(std::string name, SequencePair pair, bool numerator) {
  return {std::move(name), 0.0, kTStar, [pair, numerator](double t) {
            const RatioParts p = ratio_function_parts(pair, t);
            return numerator ? p.numerator : p.denominator;
          }};
}

FunctionDescriptor lemma_descriptor(LemmaFunction which) {
  return {std::string(name(which)), 0.0, 1.0,
          [which](double x) { return x == 0.0 ? 0.0 : lemma24_aux(which, x); }};
}

}  // namespace

std::string_view name(MonotoneVerdict v) {
  switch (v) {
    case MonotoneVerdict::Increasing:
      return "monotone-increasing";
    case MonotoneVerdict::Decreasing:
      return "monotone-decreasing";
    case MonotoneVerdict::Violation:
      return "violation";
  }
  return "?";
}

MonotoneCheck monotone_grid_check(const std::function<double(double)>& f, double lo, double hi,
                                  std::size_t grid_n) {
  const std::vector<double> xs = grid(lo, hi, grid_n);
  std::vector<double> values(xs.size());
  std::transform(xs.begin(), xs.end(), values.begin(), f);
  return classify(xs, values);
}

MonotoneCheck monotone_ratio_check(const FunctionDescriptor& f1, const FunctionDescriptor& f2,
                                   double lo, double hi, std::size_t grid_n, Anchor anchor) {
  const double c = anchor == Anchor::Lower ? lo : hi;
  const double f1c = f1.eval(c);
  const double f2c = f2.eval(c);
  return monotone_grid_check(
      [&](double x) { return (f1.eval(x) - f1c) / (f2.eval(x) - f2c); }, lo, hi, grid_n);
}

FunctionDescriptor varphi_descriptor(double p) {
  return {"varphi_p", 0.0, 1.0, [p](double x) { return x == 0.0 ? 0.0 : varphi_p(x, p); }};
}

const std::vector<FunctionDescriptor>& descriptor_catalog() {
  static const std::vector<FunctionDescriptor> catalog = [] {
    std::vector<FunctionDescriptor> c;
    c.push_back({"phi", 0.0, kTStar, [](double t) { return phi(t); }});
    c.push_back({"f-ratio", 0.0, kTStar,
                 [](double t) { return ratio_function(SequencePair::Phi, t); }});
    c.push_back({"g-ratio", 0.0, kTStar,
                 [](double t) { return ratio_function(SequencePair::GRatio, t); }});
    c.push_back({"h-ratio", 0.0, kTStar,
                 [](double t) { return ratio_function(SequencePair::HRatio, t); }});
    c.push_back({"gc-ratio", 0.0, 1.0, [](double x) {
                   return ratio_R(MeanKind::Geometric, MeanKind::ContraHarmonic, x);
                 }});
    c.push_back(ratio_part("f1", SequencePair::Phi, true));
    c.push_back(ratio_part("f2", SequencePair::Phi, false));
    c.push_back(ratio_part("g1", SequencePair::GRatio, true));
    c.push_back(ratio_part("g2", SequencePair::GRatio, false));
    c.push_back(ratio_part("h1", SequencePair::HRatio, true));
    c.push_back(ratio_part("h2", SequencePair::HRatio, false));
    c.push_back(varphi_descriptor(5.0 / 9.0));
    c.push_back(lemma_descriptor(LemmaFunction::F));
    c.push_back(lemma_descriptor(LemmaFunction::G));
    c.push_back({"identity", -std::numeric_limits<double>::infinity(),
                 std::numeric_limits<double>::infinity(), [](double x) { return x; }});
    return c;
  }();
  return catalog;
}

const FunctionDescriptor& find_descriptor(std::string_view name) {
  for (const auto& d : descriptor_catalog()) {
    if (d.name == name) return d;
  }
  throw std::invalid_argument("unknown function descriptor '" + std::string(name) + "'");
}

}  // namespace nsmean
