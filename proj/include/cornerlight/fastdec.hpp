#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "cornerlight/geometry.hpp"

namespace cornerlight::fastdec {

// Complex value carried as (log modulus, phase) so that high powers never
// overflow. logMagnitude == -inf encodes an exact zero.
struct LogComplex {
  double logMagnitude = 0.0;
  double phase = 0.0;  // in (-pi, pi]

  double magnitude() const;
  Complex value() const;
};

double wrap_phase(double x);
LogComplex log_from_value(Complex v);

// r(z) = (1 + z)(1 + z^2), the degree-3 building block.
Complex eval_base(Complex z);

// R_n(z) = (r(z))^n evaluated in log space; R_n(0) = 1 for every n.
LogComplex eval_reference(long n, Complex z);

// R_n(z) composed with the rigid motion that carries the anchored square of
// half-side lambda onto the reference square S_{1/3} (division by 3*lambda).
// The reference power is degreeParam/3, so the polynomial degree is
// 3*(degreeParam/3) <= degreeParam.
struct AnchoredFastDec {
  long degreeParam = 1;
  geometry::AnchoredSquare square;
};

LogComplex eval_anchored(const AnchoredFastDec& fd, Complex z);

// Square-composed variant for two opposite sectors joined at the origin:
// pulls (zeta, z) through w = z^2 and evaluates the anchored polynomial for
// the convex image region, anchored at zeta^2. `rotation` and `halfSide`
// describe the anchored square in the image plane. The reference power is
// n/3; pass 3n to get a reference power of exactly n.
LogComplex eval_bowtie(long n, Complex zeta, Complex z, double rotation, double halfSide);

struct DecayProbe {
  double epsilon = 0.0;  // depth: d(z, boundary of S_{1/3}) = epsilon / 3
  double cHat = 0.0;     // measured -log|R_n(z)| / n
};

struct BoundReport {
  long n = 0;
  double supInner = 0.0;     // sup |R_n| over a grid of S_{1/3}
  double supExtended = 0.0;  // sup |R_n| over S_{1/3} grown by 1/n on every side
  std::vector<DecayProbe> probes;
};

// Grid certification of the two uniform bounds and the interior decay rate.
// gridDensity is the number of samples per axis (>= 10).
BoundReport certify_bounds(long n, int gridDensity);

void to_json(nlohmann::json& j, const DecayProbe& p);
void to_json(nlohmann::json& j, const BoundReport& r);

}  // namespace cornerlight::fastdec
