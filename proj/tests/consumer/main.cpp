#include <cmath>
#include <cstdio>

#include "nsmean/bounds.hpp"
#include "nsmean/means.hpp"

int main() {
  const double m = nsmean::mean_eval(nsmean::MeanKind::NeumanSandor, nsmean::PositivePair(2, 1));
  const auto& cert = nsmean::find_certificate("HQ");
  std::printf("%.17g %s\n", m, cert.alpha_star.str().c_str());
  return std::fabs(m - 1.5269499789134872) < 1e-15 ? 0 : 1;
}
