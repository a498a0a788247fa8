#pragma once

#include <memory>
#include <string>

#include "otlab/geometry.hpp"

namespace otlab {

// Analytic density: Constant(c), AffineProduct(a) = 1 + a*x1*x2, or a scaled
// wrap Scaled(c, inner). All members of the family are polynomials of degree
// at most 2, which the quadrature below integrates exactly.
class DensityField {
 public:
  enum class Kind { Constant, AffineProduct, Scaled };

  static DensityField constant(double c);
  static DensityField affine_product(double a);
  static DensityField scaled(double c, DensityField inner);

  double operator()(const Vec2& p) const { return eval(p); }
  double eval(const Vec2& p) const;

  Kind kind() const { return kind_; }
  double param() const { return value_; }  // c for Constant/Scaled, a for AffineProduct
  const DensityField* inner() const { return inner_.get(); }

  std::string describe() const;

  // Strict positivity of the density over the polygon, checked on a sample
  // grid plus the vertices. Throws ParamError when the minimum drops below
  // `floor`.
  void require_positive_on(const Polygon& support, double floor = 1e-9) const;

 private:
  Kind kind_ = Kind::Constant;
  double value_ = 1.0;
  std::shared_ptr<const DensityField> inner_;
};

// Integral of f over a triangle via the degree-2 midpoint rule (exact for the
// analytic family). The triangle's signed area carries the sign.
double integrate_triangle(const DensityField& f, const Vec2& a, const Vec2& b, const Vec2& c);

// Integral of f over a closed polygon by fan triangulation with signed areas;
// exact (up to rounding) for degree <= 2 densities on weakly simple polygons.
double integrate(const DensityField& f, const std::vector<Vec2>& vertices);
double integrate(const DensityField& f, const Polygon& p);

// Line integral of f along segment [a, b] by Simpson's rule (exact for the
// family, whose restriction to a line has degree <= 2).
double integrate_segment(const DensityField& f, const Vec2& a, const Vec2& b);

}  // namespace otlab
