#include <stdexcept>

#include "json.hpp"
#include "nsmean/verification.hpp"

namespace nsmean {

std::string to_json(const VerificationReport& report, int indent) {
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"a", v.a}, {"b", v.b}, {"exponent", v.exponent}, {"side", v.side}});
  }
  nlohmann::ordered_json j;
  j["certificate"] = report.certificate;
  j["alpha"] = report.alpha;
  j["beta"] = report.beta;
  j["samples"] = report.samples;
  j["violations"] = std::move(violations);
  j["extremal"] = {{"minRatio", report.extremal.min_ratio},
                   {"maxRatio", report.extremal.max_ratio},
                   {"argminX", report.extremal.argmin_x},
                   {"argmaxX", report.extremal.argmax_x}};
  j["seed"] = report.seed;
  j["elapsedSec"] = report.elapsed_sec;
  j["pass"] = report.passed();
  return j.dump(indent);
}

VerificationReport report_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    VerificationReport r;
    r.certificate = j.at("certificate").get<std::string>();
    r.alpha = j.at("alpha").get<double>();
    r.beta = j.at("beta").get<double>();
    r.samples = j.at("samples").get<std::uint64_t>();
    for (const auto& v : j.at("violations")) {
      r.violations.push_back({v.at("a").get<double>(), v.at("b").get<double>(),
                              v.at("exponent").get<double>(), v.at("side").get<std::string>()});
    }
    const auto& e = j.at("extremal");
    r.extremal = {e.at("minRatio").get<double>(), e.at("maxRatio").get<double>(),
                  e.at("argminX").get<double>(), e.at("argmaxX").get<double>()};
    r.seed = j.at("seed").get<std::uint64_t>();
    r.elapsed_sec = j.at("elapsedSec").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report_from_json: ") + e.what());
  }
}

}  // namespace nsmean
