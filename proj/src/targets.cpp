#include "cornerlight/targets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cornerlight::targets {

namespace {
constexpr double kPi = std::numbers::pi;
}

lightning::SlitFunction make(const std::string& id) {
  lightning::SlitFunction f;
  if (id == "zsqrt") {
    f.boundaryValue = [](Complex z) { return std::sqrt(z); };
    f.jump = [](double t) { return Complex(0.0, 2.0 * std::sqrt(-t)); };
    f.holderExponent = 0.5;
  } else if (id == "zpow03") {
    f.boundaryValue = [](Complex z) {
      return z == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : std::pow(z, 0.3);
    };
    f.jump = [](double t) {
      return Complex(0.0, 2.0 * std::sin(0.3 * kPi) * std::pow(-t, 0.3));
    };
    f.holderExponent = 0.3;
  } else if (id == "entire-z2") {
    f.boundaryValue = [](Complex z) { return z * z; };
    f.jump = [](double) { return Complex(0.0, 0.0); };
    f.holderExponent = 2.0;
  } else if (id == "zsqrt-times-exp") {
    f.boundaryValue = [](Complex z) { return std::sqrt(z) * std::exp(z); };
    f.jump = [](double t) { return Complex(0.0, 2.0 * std::sqrt(-t) * std::exp(t)); };
    f.holderExponent = 0.5;
  } else {
    throw std::invalid_argument("unknown target id: " + id);
  }
  return f;
}

const std::vector<std::string>& catalog() {
  static const std::vector<std::string> ids = {"zsqrt", "zpow03", "entire-z2",
                                               "zsqrt-times-exp"};
  return ids;
}

}  // namespace cornerlight::targets
