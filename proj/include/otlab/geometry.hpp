#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace otlab {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator-() const { return {-x, -y}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm2(const Vec2& v) { return dot(v, v); }
inline double norm(const Vec2& v) { return std::sqrt(norm2(v)); }
inline double dist(const Vec2& a, const Vec2& b) { return norm(a - b); }
inline Vec2 normalized(const Vec2& v) { return v * (1.0 / norm(v)); }
inline Vec2 rot90(const Vec2& v) { return {-v.y, v.x}; }

// Simple planar polygon, counter-clockwise. Empty polygon = no vertices.
struct Polygon {
  std::vector<Vec2> vertices;

  bool empty() const { return vertices.empty(); }
  std::size_t size() const { return vertices.size(); }

  // Normalizes raw input: merges near-duplicate consecutive vertices and
  // reverses clockwise input. Throws ParamError on degenerate input
  // (fewer than 3 distinct vertices but not empty).
  static Polygon from_vertices(std::vector<Vec2> verts);
};

double signed_area(const std::vector<Vec2>& vertices);
double area(const Polygon& p);
Vec2 centroid(const Polygon& p);

// Axis-aligned bounding box as (lo, hi); polygon must be non-empty.
std::pair<Vec2, Vec2> bounding_box(const Polygon& p);

// Closure-inclusive point membership (crossing number; boundary counts as in).
bool contains(const Polygon& p, const Vec2& q, double boundary_tol = 1e-12);

// P intersected with the half-plane {x : (x - point) . normal <= 0}.
// Throws ParamError on a zero-length normal.
Polygon clip_halfplane(const Polygon& p, const Vec2& point, const Vec2& normal);

// Same clip but tracking an integer label per edge (edge k runs from vertex k
// to vertex k+1). Edges created on the clip line get `cut_label`. Used by the
// Laguerre construction to know which bisector produced each cell edge.
struct LabeledPolygon {
  std::vector<Vec2> vertices;
  std::vector<int> edge_labels;

  bool empty() const { return vertices.empty(); }
};

LabeledPolygon clip_halfplane_labeled(const LabeledPolygon& p, const Vec2& point,
                                      const Vec2& normal, int cut_label);

// ---------------------------------------------------------------------------
// Domain construction

struct DomainSpec {
  enum class Kind { Square, Rectangle, NotchedRectangle, Dumbbell, Disc, SmoothedNotch };

  Kind kind = Kind::Square;
  double side = 1.0;                       // Square
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;  // Rectangle
  double eps = 0.1;                        // NotchedRectangle, Dumbbell, SmoothedNotch
  int arc_vertices = 64;                   // Dumbbell, Disc
  double radius = 1.0;                     // Disc
  double alpha = 0.5;                      // SmoothedNotch
  double smoothing_radius = 0.0;           // SmoothedNotch; 0 means eps/4

  static DomainSpec square(double side);
  static DomainSpec rectangle(double x0, double x1, double y0, double y1);
  static DomainSpec notched_rectangle(double eps);
  static DomainSpec dumbbell(double eps, int arc_vertices = 256);
  static DomainSpec disc(double radius, int arc_vertices = 256);
  static DomainSpec smoothed_notch(double eps, double alpha, double smoothing_radius = 0.0);

  std::string kind_name() const;
};

// Dumbbell lobe radius: lobes plus corridor match the unit disc's area.
inline double dumbbell_lobe_radius(double eps) {
  return std::sqrt(1.0 - 4.0 * eps / M_PI);
}

// Builds the vertex list for a spec. Validates parameter ranges.
Polygon build_domain(const DomainSpec& spec);

}  // namespace otlab
