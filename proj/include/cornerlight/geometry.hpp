#pragma once

#include <complex>
#include <string>
#include <vector>

namespace cornerlight {

using Complex = std::complex<double>;

namespace geometry {

// Circular sector {z: |z| <= rho * 1, |arg z| <= theta} scaled to radius rho,
// with its corner at the origin. Immutable after construction.
class SectorDomain {
 public:
  SectorDomain(double rho, double theta);

  double rho() const { return rho_; }
  double theta() const { return theta_; }

  bool strictly_inside(Complex z) const;
  bool contains(Complex z) const;  // closed set

  double inradius() const;
  double diameter() const;

 private:
  double rho_;
  double theta_;
};

// Counterclockwise convex polygon with a strict turn at every vertex.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Complex> vertices);

  const std::vector<Complex>& vertices() const { return vertices_; }

  bool strictly_inside(Complex z) const;
  double inradius() const;
  double diameter() const;

 private:
  std::vector<Complex> vertices_;
};

// Square anchored at the midpoint of one side. In rotated coordinates
// w = e^{-i rotation}(z - anchor) it occupies
//   {-2*halfSide <= Re w <= 0, |Im w| <= halfSide}.
struct AnchoredSquare {
  Complex anchor;
  double rotation = 0.0;
  double halfSide = 0.0;
};

enum class Clustering { None, ExponentialTowardOrigin };

struct EvaluationGrid {
  std::vector<Complex> points;
  std::string description;  // "boundary" | "interior" | "square"
  Clustering clustering = Clustering::None;
};

struct ClosestPoint {
  Complex point;
  double distance = 0.0;
};

// Metric projection of an exterior/boundary point onto the domain boundary.
// Equidistant candidates are resolved toward the smallest argument.
// Throws std::invalid_argument for strictly interior input.
ClosestPoint closest_point(const SectorDomain& domain, Complex zeta);
ClosestPoint closest_point(const ConvexPolygon& domain, Complex zeta);

// Distance from a point of the closed domain to the boundary (0 on the boundary).
double boundary_distance(const SectorDomain& domain, Complex z);
double boundary_distance(const ConvexPolygon& domain, Complex z);

// Square whose side through `zeta` is orthogonal to [closest boundary point, zeta],
// lying on the half-plane side that contains the domain. Throws if zeta is
// strictly interior, or if it lies exactly on the boundary (zero-length segment,
// rotation undefined).
AnchoredSquare anchor_square(const SectorDomain& domain, Complex zeta, double halfSide);
AnchoredSquare anchor_square(const ConvexPolygon& domain, Complex zeta, double halfSide);
// halfSide defaults to diam(K) + 2 d(zeta, K), the diameter of the
// d-neighbourhood of the domain.
AnchoredSquare anchor_square(const SectorDomain& domain, Complex zeta);
AnchoredSquare anchor_square(const ConvexPolygon& domain, Complex zeta);

// Deterministic boundary samples, ordered along the boundary. Exponential
// clustering pushes samples toward the corner at the origin (sector) or toward
// every vertex (polygon), down to radius 1e-13.
EvaluationGrid boundary_grid(const SectorDomain& domain, int count, Clustering clustering);
EvaluationGrid boundary_grid(const ConvexPolygon& domain, int count, Clustering clustering);

// Deterministic points with distance >= margin from the boundary.
// Throws when margin exhausts the inradius.
EvaluationGrid interior_compact_grid(const SectorDomain& domain, double margin, int count);
EvaluationGrid interior_compact_grid(const ConvexPolygon& domain, double margin, int count);

// Polar lattice over the annular sector {rmin <= |z| <= rmax, |arg z| <= phiHalf}.
EvaluationGrid polar_box_grid(double rmin, double rmax, double phiHalf,
                              int radialCount, int angularCount);

}  // namespace geometry
}  // namespace cornerlight
