#pragma once

#include <string>
#include <vector>

#include "cornerlight/lightning.hpp"

namespace cornerlight::targets {

// Named slit-disc targets:
//   zsqrt           f(z) = z^{1/2}              jump 2i|t|^{1/2}        delta 0.5
//   zpow03          f(z) = z^{0.3}              jump 2i sin(0.3 pi)|t|^{0.3}, delta 0.3
//   entire-z2       f(z) = z^2                  jump 0                  delta 2
//   zsqrt-times-exp f(z) = z^{1/2} e^z          jump 2i|t|^{1/2} e^t    delta 0.5
lightning::SlitFunction make(const std::string& id);

const std::vector<std::string>& catalog();

}  // namespace cornerlight::targets
