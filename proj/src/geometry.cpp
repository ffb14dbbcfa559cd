#include "cornerlight/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cornerlight::geometry {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClusterFloor = 1e-13;  // smallest clustered radius

ClosestPoint point_on_segment(Complex z, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  double t = len2 > 0.0 ? std::clamp((std::conj(ab) * (z - a)).real() / len2, 0.0, 1.0) : 0.0;
  const Complex p = a + t * ab;
  return {p, std::abs(z - p)};
}

// Lexicographic (distance, arg point) so equidistant candidates resolve
// deterministically toward the smallest argument.
void keep_best(ClosestPoint& best, const ClosestPoint& cand) {
  if (cand.distance < best.distance ||
      (cand.distance == best.distance && std::arg(cand.point) < std::arg(best.point))) {
    best = cand;
  }
}

void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

}  // namespace

SectorDomain::SectorDomain(double rho, double theta) : rho_(rho), theta_(theta) {
  if (!(rho > 0.0) || !(rho < 1.0)) {
    throw std::invalid_argument("sector radius must satisfy 0 < rho < 1");
  }
  if (!(theta > 0.0) || !(theta < kPi / 2.0)) {
    throw std::invalid_argument("sector half-angle must satisfy 0 < theta < pi/2");
  }
}

bool SectorDomain::strictly_inside(Complex z) const {
  const double a = std::abs(z);
  return a > 0.0 && a < rho_ && std::fabs(std::arg(z)) < theta_;
}

bool SectorDomain::contains(Complex z) const {
  const double a = std::abs(z);
  if (a == 0.0) return true;
  return a <= rho_ && std::fabs(std::arg(z)) <= theta_;
}

double SectorDomain::inradius() const {
  // Incircle center sits on the axis at rho/(1+sin theta).
  const double s = std::sin(theta_);
  return rho_ * s / (1.0 + s);
}

double SectorDomain::diameter() const {
  return std::max(rho_, 2.0 * rho_ * std::sin(theta_));
}

ConvexPolygon::ConvexPolygon(std::vector<Complex> vertices) : vertices_(std::move(vertices)) {
  const std::size_t k = vertices_.size();
  if (k < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (Complex v : vertices_) require_finite(v, "polygon vertex");
  for (std::size_t i = 0; i < k; ++i) {
    const Complex a = vertices_[i];
    const Complex b = vertices_[(i + 1) % k];
    const Complex c = vertices_[(i + 2) % k];
    const double cross = (std::conj(b - a) * (c - b)).imag();
    if (!(cross > 0.0)) {
      throw std::invalid_argument("polygon vertices must make a strictly convex ccw turn");
    }
  }
}

bool ConvexPolygon::strictly_inside(Complex z) const {
  const std::size_t k = vertices_.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Complex a = vertices_[i];
    const Complex b = vertices_[(i + 1) % k];
    if (!((std::conj(b - a) * (z - a)).imag() > 0.0)) return false;
  }
  return true;
}

double ConvexPolygon::inradius() const {
  // Chebyshev center: at most three edge constraints are active, so scan
  // all edge triples for the best feasible equidistant point.
  const std::size_t k = vertices_.size();
  struct Line {
    double nx, ny, c;  // nx x + ny y >= c inside, (nx, ny) unit inward normal
  };
  std::vector<Line> lines;
  lines.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Complex a = vertices_[i];
    const Complex b = vertices_[(i + 1) % k];
    Complex n = (b - a) * Complex(0.0, 1.0);  // inward for ccw
    n /= std::abs(n);
    lines.push_back({n.real(), n.imag(), n.real() * a.real() + n.imag() * a.imag()});
  }
  double best = 0.0;
  auto feasible = [&](double x, double y, double r) {
    for (const Line& l : lines) {
      if (l.nx * x + l.ny * y - l.c < r - 1e-12) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (std::size_t l = j + 1; l < k; ++l) {
        // Solve nx x + ny y - r = c for the three lines.
        const Line rows[3] = {lines[i], lines[j], lines[l]};
        double m[3][4];
        for (int r = 0; r < 3; ++r) {
          m[r][0] = rows[r].nx;
          m[r][1] = rows[r].ny;
          m[r][2] = -1.0;
          m[r][3] = rows[r].c;
        }
        // Gaussian elimination, 3x3.
        bool singular = false;
        for (int col = 0; col < 3 && !singular; ++col) {
          int piv = col;
          for (int r = col + 1; r < 3; ++r) {
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
          }
          if (std::fabs(m[piv][col]) < 1e-14) {
            singular = true;
            break;
          }
          std::swap(m[col], m[piv]);
          for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
          }
        }
        if (singular) continue;
        const double x = m[0][3] / m[0][0];
        const double y = m[1][3] / m[1][1];
        const double r = m[2][3] / m[2][2];
        if (r > best && feasible(x, y, r)) best = r;
      }
    }
  }
  return best;
}

double ConvexPolygon::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      best = std::max(best, std::abs(vertices_[i] - vertices_[j]));
    }
  }
  return best;
}

ClosestPoint closest_point(const SectorDomain& domain, Complex zeta) {
  require_finite(zeta, "query point");
  if (domain.strictly_inside(zeta)) {
    throw std::invalid_argument("anchor must be exterior or boundary");
  }
  const double rho = domain.rho();
  const double theta = domain.theta();
  const Complex lo = rho * std::polar(1.0, -theta);
  const Complex hi = rho * std::polar(1.0, theta);

  ClosestPoint best{Complex(0.0, 0.0), std::abs(zeta)};  // the corner
  keep_best(best, point_on_segment(zeta, Complex(0.0, 0.0), lo));
  keep_best(best, point_on_segment(zeta, Complex(0.0, 0.0), hi));
  if (std::abs(zeta) > 0.0) {
    const double phi = std::clamp(std::arg(zeta), -theta, theta);
    const Complex arcPoint = rho * std::polar(1.0, phi);
    keep_best(best, {arcPoint, std::abs(zeta - arcPoint)});
  }
  return best;
}

ClosestPoint closest_point(const ConvexPolygon& domain, Complex zeta) {
  require_finite(zeta, "query point");
  if (domain.strictly_inside(zeta)) {
    throw std::invalid_argument("anchor must be exterior or boundary");
  }
  const auto& v = domain.vertices();
  ClosestPoint best{v[0], std::abs(zeta - v[0])};
  for (std::size_t i = 0; i < v.size(); ++i) {
    keep_best(best, point_on_segment(zeta, v[i], v[(i + 1) % v.size()]));
  }
  return best;
}

double boundary_distance(const SectorDomain& domain, Complex z) {
  const double rho = domain.rho();
  const double theta = domain.theta();
  const Complex lo = rho * std::polar(1.0, -theta);
  const Complex hi = rho * std::polar(1.0, theta);
  double d = std::fabs(rho - std::abs(z));  // the arc, for points of the closed sector
  d = std::min(d, point_on_segment(z, Complex(0.0, 0.0), lo).distance);
  d = std::min(d, point_on_segment(z, Complex(0.0, 0.0), hi).distance);
  return d;
}

double boundary_distance(const ConvexPolygon& domain, Complex z) {
  const auto& v = domain.vertices();
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    d = std::min(d, point_on_segment(z, v[i], v[(i + 1) % v.size()]).distance);
  }
  return d;
}

namespace {

template <class Domain>
AnchoredSquare anchor_square_impl(const Domain& domain, Complex zeta, double halfSide) {
  if (!(halfSide > 0.0)) throw std::invalid_argument("square half-side must be positive");
  const ClosestPoint cp = closest_point(domain, zeta);
  if (cp.distance == 0.0) {
    throw std::invalid_argument(
        "anchor on the boundary: zero-length segment, rotation undefined");
  }
  return {zeta, std::arg(zeta - cp.point), halfSide};
}

template <class Domain>
double default_half_side(const Domain& domain, Complex zeta) {
  // diam of the d-neighbourhood of the domain, d = exterior distance.
  const ClosestPoint cp = closest_point(domain, zeta);
  return domain.diameter() + 2.0 * cp.distance;
}

}  // namespace

AnchoredSquare anchor_square(const SectorDomain& domain, Complex zeta, double halfSide) {
  return anchor_square_impl(domain, zeta, halfSide);
}

AnchoredSquare anchor_square(const ConvexPolygon& domain, Complex zeta, double halfSide) {
  return anchor_square_impl(domain, zeta, halfSide);
}

AnchoredSquare anchor_square(const SectorDomain& domain, Complex zeta) {
  return anchor_square_impl(domain, zeta, default_half_side(domain, zeta));
}

AnchoredSquare anchor_square(const ConvexPolygon& domain, Complex zeta) {
  return anchor_square_impl(domain, zeta, default_half_side(domain, zeta));
}

namespace {

// Geometric radii from near `scale` down to the cluster floor, descending.
std::vector<double> clustered_radii(double scale, int count) {
  std::vector<double> r(count);
  const double ratio = std::pow(kClusterFloor / scale, 1.0 / count);
  double cur = scale;
  for (int i = 0; i < count; ++i) {
    cur *= ratio;
    r[i] = cur;
  }
  r.back() = kClusterFloor;  // pin the innermost radius exactly
  return r;
}

}  // namespace

EvaluationGrid boundary_grid(const SectorDomain& domain, int count, Clustering clustering) {
  if (count < 2) throw std::invalid_argument("boundary grid needs at least 2 points");
  const double rho = domain.rho();
  const double theta = domain.theta();
  EvaluationGrid grid;
  grid.description = "boundary";
  grid.clustering = clustering;
  grid.points.reserve(static_cast<std::size_t>(count));

  if (clustering == Clustering::None) {
    // Uniform arclength along lower edge -> arc -> upper edge, starting at the corner.
    const double per = 2.0 * rho + 2.0 * theta * rho;
    for (int i = 0; i < count; ++i) {
      double t = per * static_cast<double>(i) / static_cast<double>(count);
      if (t <= rho) {
        grid.points.push_back(t * std::polar(1.0, -theta));
      } else if (t <= rho + 2.0 * theta * rho) {
        const double phi = -theta + (t - rho) / rho;
        grid.points.push_back(rho * std::polar(1.0, phi));
      } else {
        const double s = t - rho - 2.0 * theta * rho;
        grid.points.push_back((rho - s) * std::polar(1.0, theta));
      }
    }
    return grid;
  }

  // Exponential clustering into the corner on both edges; uniform on the arc.
  const int perEdge = std::max(1, count / 3);
  const int arcCount = std::max(0, count - 2 * perEdge);
  const auto radii = clustered_radii(rho, perEdge);
  for (double r : radii) grid.points.push_back(r * std::polar(1.0, -theta));  // descending
  for (int i = 0; i < arcCount; ++i) {
    const double phi = arcCount == 1 ? 0.0
                                     : -theta + 2.0 * theta * static_cast<double>(i) /
                                                    static_cast<double>(arcCount - 1);
    grid.points.push_back(rho * std::polar(1.0, phi));
  }
  for (int i = perEdge - 1; i >= 0; --i) grid.points.push_back(radii[i] * std::polar(1.0, theta));
  if (static_cast<int>(grid.points.size()) > count) grid.points.resize(count);
  return grid;
}

EvaluationGrid boundary_grid(const ConvexPolygon& domain, int count, Clustering clustering) {
  if (count < 2) throw std::invalid_argument("boundary grid needs at least 2 points");
  const auto& v = domain.vertices();
  const std::size_t k = v.size();
  EvaluationGrid grid;
  grid.description = "boundary";
  grid.clustering = clustering;

  if (clustering == Clustering::None) {
    double per = 0.0;
    for (std::size_t i = 0; i < k; ++i) per += std::abs(v[(i + 1) % k] - v[i]);
    double target = 0.0;
    const double step = per / static_cast<double>(count);
    std::size_t edge = 0;
    double walked = 0.0;
    for (int i = 0; i < count; ++i, target += step) {
      while (edge < k - 1 && walked + std::abs(v[(edge + 1) % k] - v[edge]) < target) {
        walked += std::abs(v[(edge + 1) % k] - v[edge]);
        ++edge;
      }
      const Complex a = v[edge];
      const Complex b = v[(edge + 1) % k];
      const double len = std::abs(b - a);
      grid.points.push_back(a + (b - a) * ((target - walked) / len));
    }
    return grid;
  }

  // Cluster toward every vertex: split each edge at its midpoint and walk
  // geometrically into the vertices at both ends.
  const int perHalf = std::max(1, count / static_cast<int>(2 * k));
  for (std::size_t i = 0; i < k; ++i) {
    const Complex a = v[i];
    const Complex b = v[(i + 1) % k];
    const Complex mid = (a + b) / 2.0;
    const double half = std::abs(mid - a);
    const auto dists = clustered_radii(half, perHalf);
    for (double d : dists) grid.points.push_back(a + (b - a) * (d / (2.0 * half)));
    for (int j = perHalf - 1; j >= 0; --j) {
      grid.points.push_back(b - (b - a) * (dists[j] / (2.0 * half)));
    }
  }
  if (static_cast<int>(grid.points.size()) > count) grid.points.resize(count);
  return grid;
}

namespace {

template <class Domain>
EvaluationGrid interior_grid_impl(const Domain& domain, double margin, int count,
                                  double rLo, double rHi, double phiLo, double phiHi,
                                  bool polar) {
  EvaluationGrid grid;
  grid.description = "interior";
  for (int res = std::max(2, static_cast<int>(std::ceil(std::sqrt(double(count)))));;
       res *= 2) {
    grid.points.clear();
    for (int i = 0; i < res && static_cast<int>(grid.points.size()) < count; ++i) {
      const double u = rLo + (rHi - rLo) * (i + 0.5) / res;
      for (int j = 0; j < res && static_cast<int>(grid.points.size()) < count; ++j) {
        const double w = phiLo + (phiHi - phiLo) * (j + 0.5) / res;
        const Complex z = polar ? u * std::polar(1.0, w) : Complex(u, w);
        if (domain.strictly_inside(z) && boundary_distance(domain, z) >= margin) {
          grid.points.push_back(z);
        }
      }
    }
    if (static_cast<int>(grid.points.size()) >= count) return grid;
    if (res > 1 << 14) {
      throw std::invalid_argument("margin too large: interior compact is empty");
    }
  }
}

}  // namespace

EvaluationGrid interior_compact_grid(const SectorDomain& domain, double margin, int count) {
  if (!(margin > 0.0)) throw std::invalid_argument("margin must be positive");
  if (count < 1) throw std::invalid_argument("count must be positive");
  if (margin >= domain.inradius()) {
    throw std::invalid_argument("margin too large: interior compact is empty");
  }
  return interior_grid_impl(domain, margin, count, margin, domain.rho() - margin,
                            -domain.theta(), domain.theta(), /*polar=*/true);
}

EvaluationGrid interior_compact_grid(const ConvexPolygon& domain, double margin, int count) {
  if (!(margin > 0.0)) throw std::invalid_argument("margin must be positive");
  if (count < 1) throw std::invalid_argument("count must be positive");
  if (margin >= domain.inradius()) {
    throw std::invalid_argument("margin too large: interior compact is empty");
  }
  double xLo = 1e300, xHi = -1e300, yLo = 1e300, yHi = -1e300;
  for (Complex v : domain.vertices()) {
    xLo = std::min(xLo, v.real());
    xHi = std::max(xHi, v.real());
    yLo = std::min(yLo, v.imag());
    yHi = std::max(yHi, v.imag());
  }
  return interior_grid_impl(domain, margin, count, xLo, xHi, yLo, yHi, /*polar=*/false);
}

EvaluationGrid polar_box_grid(double rmin, double rmax, double phiHalf, int radialCount,
                              int angularCount) {
  if (!(rmin > 0.0) || !(rmax > rmin) || !(phiHalf >= 0.0)) {
    throw std::invalid_argument("polar box requires 0 < rmin < rmax and phiHalf >= 0");
  }
  if (radialCount < 1 || angularCount < 1) {
    throw std::invalid_argument("polar box needs positive counts");
  }
  EvaluationGrid grid;
  grid.description = "interior";
  grid.points.reserve(static_cast<std::size_t>(radialCount) * angularCount);
  for (int i = 0; i < radialCount; ++i) {
    const double r = radialCount == 1 ? rmin : rmin + (rmax - rmin) * i / (radialCount - 1.0);
    for (int j = 0; j < angularCount; ++j) {
      const double phi =
          angularCount == 1 ? 0.0 : -phiHalf + 2.0 * phiHalf * j / (angularCount - 1.0);
      grid.points.push_back(r * std::polar(1.0, phi));
    }
  }
  return grid;
}

}  // namespace cornerlight::geometry
