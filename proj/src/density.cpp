#include "otlab/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "otlab/errors.hpp"

namespace otlab {

DensityField DensityField::constant(double c) {
  DensityField f;
  f.kind_ = Kind::Constant;
  f.value_ = c;
  return f;
}

DensityField DensityField::affine_product(double a) {
  DensityField f;
  f.kind_ = Kind::AffineProduct;
  f.value_ = a;
  return f;
}

DensityField DensityField::scaled(double c, DensityField inner) {
  DensityField f;
  f.kind_ = Kind::Scaled;
  f.value_ = c;
  f.inner_ = std::make_shared<DensityField>(std::move(inner));
  return f;
}

double DensityField::eval(const Vec2& p) const {
  switch (kind_) {
    case Kind::Constant: return value_;
    case Kind::AffineProduct: return 1.0 + value_ * p.x * p.y;
    case Kind::Scaled: return value_ * inner_->eval(p);
  }
  return 0.0;
}

std::string DensityField::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Constant: os << "Constant(" << value_ << ")"; break;
    case Kind::AffineProduct: os << "AffineProduct(" << value_ << ")"; break;
    case Kind::Scaled: os << "Scaled(" << value_ << ", " << inner_->describe() << ")"; break;
  }
  return os.str();
}

void DensityField::require_positive_on(const Polygon& support, double floor) const {
  if (support.empty()) return;
  double mn = std::numeric_limits<double>::infinity();
  for (const Vec2& v : support.vertices) mn = std::min(mn, eval(v));
  const auto [lo, hi] = bounding_box(support);
  const int n = 32;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const Vec2 p{lo.x + (hi.x - lo.x) * i / n, lo.y + (hi.y - lo.y) * j / n};
      if (contains(support, p)) mn = std::min(mn, eval(p));
    }
  }
  if (!(mn >= floor)) {
    throw ParamError("density " + describe() + " not positive on support (min " +
                     std::to_string(mn) + ")");
  }
}

double integrate_triangle(const DensityField& f, const Vec2& a, const Vec2& b, const Vec2& c) {
  const double s = 0.5 * cross(b - a, c - a);
  const Vec2 mab = (a + b) * 0.5;
  const Vec2 mbc = (b + c) * 0.5;
  const Vec2 mca = (c + a) * 0.5;
  return s * (f.eval(mab) + f.eval(mbc) + f.eval(mca)) / 3.0;
}

double integrate(const DensityField& f, const std::vector<Vec2>& v) {
  const std::size_t n = v.size();
  if (n < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    s += integrate_triangle(f, v[0], v[i], v[i + 1]);
  }
  return s;
}

double integrate(const DensityField& f, const Polygon& p) { return integrate(f, p.vertices); }

double integrate_segment(const DensityField& f, const Vec2& a, const Vec2& b) {
  const double len = dist(a, b);
  return len * (f.eval(a) + 4.0 * f.eval((a + b) * 0.5) + f.eval(b)) / 6.0;
}

}  // namespace otlab
