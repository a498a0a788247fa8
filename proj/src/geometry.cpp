#include "otlab/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "otlab/errors.hpp"

namespace otlab {

namespace {

constexpr double kMergeTol = 1e-12;

// Scale-aware duplicate merge: consecutive vertices closer than
// kMergeTol * (1 + |v|) collapse to one.
std::vector<Vec2> merge_close(std::vector<Vec2> v) {
  if (v.size() < 2) return v;
  std::vector<Vec2> out;
  out.reserve(v.size());
  for (const Vec2& p : v) {
    if (out.empty() || dist(out.back(), p) > kMergeTol * (1.0 + norm(p))) {
      out.push_back(p);
    }
  }
  while (out.size() >= 2 &&
         dist(out.front(), out.back()) <= kMergeTol * (1.0 + norm(out.back()))) {
    out.pop_back();
  }
  return out;
}

}  // namespace

Polygon Polygon::from_vertices(std::vector<Vec2> verts) {
  if (verts.empty()) return {};
  verts = merge_close(std::move(verts));
  if (verts.size() < 3) throw ParamError("polygon needs at least 3 distinct vertices");
  if (signed_area(verts) < 0.0) std::reverse(verts.begin(), verts.end());
  return Polygon{std::move(verts)};
}

double signed_area(const std::vector<Vec2>& v) {
  double s = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % n];
    s += cross(a, b);
  }
  return 0.5 * s;
}

double area(const Polygon& p) {
  if (p.empty()) return 0.0;
  return signed_area(p.vertices);
}

Vec2 centroid(const Polygon& p) {
  const std::size_t n = p.size();
  double a = 0.0;
  Vec2 c{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& u = p.vertices[i];
    const Vec2& v = p.vertices[(i + 1) % n];
    const double w = cross(u, v);
    a += w;
    c = c + (u + v) * w;
  }
  if (std::abs(a) < 1e-300) throw ParamError("centroid of a degenerate polygon");
  return c * (1.0 / (3.0 * a));
}

std::pair<Vec2, Vec2> bounding_box(const Polygon& p) {
  if (p.empty()) throw ParamError("bounding box of an empty polygon");
  Vec2 lo = p.vertices.front(), hi = lo;
  for (const Vec2& v : p.vertices) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    hi.x = std::max(hi.x, v.x);
    hi.y = std::max(hi.y, v.y);
  }
  return {lo, hi};
}

bool contains(const Polygon& p, const Vec2& q, double boundary_tol) {
  const std::size_t n = p.size();
  if (n < 3) return false;
  // Boundary check first: distance from q to each edge segment.
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = p.vertices[i];
    const Vec2& b = p.vertices[(i + 1) % n];
    const Vec2 ab = b - a;
    const double len2 = norm2(ab);
    double t = len2 > 0.0 ? dot(q - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    if (dist(q, a + ab * t) <= boundary_tol * (1.0 + norm(q))) return true;
  }
  // Crossing number with a horizontal ray.
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = p.vertices[i];
    const Vec2& b = p.vertices[(i + 1) % n];
    if ((a.y > q.y) != (b.y > q.y)) {
      const double xi = a.x + (q.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (q.x < xi) inside = !inside;
    }
  }
  return inside;
}

LabeledPolygon clip_halfplane_labeled(const LabeledPolygon& p, const Vec2& point,
                                      const Vec2& normal, int cut_label) {
  if (norm2(normal) == 0.0) throw ParamError("clip_halfplane: zero-length normal");
  const std::size_t n = p.vertices.size();
  if (n == 0) return {};

  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = dot(p.vertices[i] - point, normal);

  // Output vertices paired with the label of the edge *arriving* at them;
  // rotated into edge-from-vertex labels at the end.
  std::vector<Vec2> verts;
  std::vector<int> incoming;
  verts.reserve(n + 4);
  incoming.reserve(n + 4);

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const bool ain = d[i] <= 0.0;
    const bool bin = d[j] <= 0.0;
    const int lab = p.edge_labels[i];
    if (ain && bin) {
      verts.push_back(p.vertices[j]);
      incoming.push_back(lab);
    } else if (ain && !bin) {
      const double t = d[i] / (d[i] - d[j]);
      verts.push_back(p.vertices[i] + (p.vertices[j] - p.vertices[i]) * t);
      incoming.push_back(lab);
    } else if (!ain && bin) {
      const double t = d[i] / (d[i] - d[j]);
      verts.push_back(p.vertices[i] + (p.vertices[j] - p.vertices[i]) * t);
      incoming.push_back(cut_label);
      verts.push_back(p.vertices[j]);
      incoming.push_back(lab);
    }
  }

  // Merge duplicates, dropping the zero-length edge's incoming label.
  std::vector<Vec2> mv;
  std::vector<int> mi;
  for (std::size_t k = 0; k < verts.size(); ++k) {
    if (mv.empty() || dist(mv.back(), verts[k]) > kMergeTol * (1.0 + norm(verts[k]))) {
      mv.push_back(verts[k]);
      mi.push_back(incoming[k]);
    }
  }
  while (mv.size() >= 2 && dist(mv.front(), mv.back()) <= kMergeTol * (1.0 + norm(mv.back()))) {
    // Closing duplicate: its incoming label belongs to the first vertex.
    mi.front() = mi.back();
    mv.pop_back();
    mi.pop_back();
  }
  if (mv.size() < 3 || std::abs(signed_area(mv)) < 1e-300) return {};

  // incoming[k] labels the edge ending at vertex k; edge_labels[k] must label
  // the edge starting there.
  LabeledPolygon out;
  out.vertices = std::move(mv);
  out.edge_labels.resize(out.vertices.size());
  for (std::size_t k = 0; k < out.vertices.size(); ++k) {
    out.edge_labels[k] = mi[(k + 1) % out.vertices.size()];
  }
  return out;
}

Polygon clip_halfplane(const Polygon& p, const Vec2& point, const Vec2& normal) {
  if (norm2(normal) == 0.0) throw ParamError("clip_halfplane: zero-length normal");
  if (p.empty()) return {};
  LabeledPolygon lp;
  lp.vertices = p.vertices;
  lp.edge_labels.assign(p.size(), -1);
  LabeledPolygon res = clip_halfplane_labeled(lp, point, normal, -1);
  return Polygon{std::move(res.vertices)};
}

// ---------------------------------------------------------------------------

DomainSpec DomainSpec::square(double side) {
  DomainSpec s;
  s.kind = Kind::Square;
  s.side = side;
  return s;
}

DomainSpec DomainSpec::rectangle(double x0, double x1, double y0, double y1) {
  DomainSpec s;
  s.kind = Kind::Rectangle;
  s.x0 = x0;
  s.x1 = x1;
  s.y0 = y0;
  s.y1 = y1;
  return s;
}

DomainSpec DomainSpec::notched_rectangle(double eps) {
  DomainSpec s;
  s.kind = Kind::NotchedRectangle;
  s.eps = eps;
  return s;
}

DomainSpec DomainSpec::dumbbell(double eps, int arc_vertices) {
  DomainSpec s;
  s.kind = Kind::Dumbbell;
  s.eps = eps;
  s.arc_vertices = arc_vertices;
  return s;
}

DomainSpec DomainSpec::disc(double radius, int arc_vertices) {
  DomainSpec s;
  s.kind = Kind::Disc;
  s.radius = radius;
  s.arc_vertices = arc_vertices;
  return s;
}

DomainSpec DomainSpec::smoothed_notch(double eps, double alpha, double smoothing_radius) {
  DomainSpec s;
  s.kind = Kind::SmoothedNotch;
  s.eps = eps;
  s.alpha = alpha;
  s.smoothing_radius = smoothing_radius;
  return s;
}

std::string DomainSpec::kind_name() const {
  switch (kind) {
    case Kind::Square: return "Square";
    case Kind::Rectangle: return "Rectangle";
    case Kind::NotchedRectangle: return "NotchedRectangle";
    case Kind::Dumbbell: return "Dumbbell";
    case Kind::Disc: return "Disc";
    case Kind::SmoothedNotch: return "SmoothedNotch";
  }
  return "?";
}

namespace {

std::vector<Vec2> notched_rectangle_vertices(double eps) {
  return {{0.0, -2.0}, {4.0 + eps / 4.0, -2.0}, {4.0 + eps / 4.0, 2.0},
          {0.0, 2.0},  {0.0, 1.0},              {eps, 0.0},
          {0.0, -1.0}};
}

// Replaces the corner shared by edges (prev -> v -> next) with a C^{1,alpha}
// cap s = a + c|t|^{1+alpha} in corner-local coordinates, tangent-matched at
// the patch ends. `reach` is the distance along each edge where the patch
// attaches.
void append_cap(std::vector<Vec2>& out, const Vec2& prev, const Vec2& v, const Vec2& next,
                double reach, double alpha, int segments) {
  const Vec2 r1 = normalized(prev - v);
  const Vec2 r2 = normalized(next - v);
  Vec2 s_dir = r1 + r2;
  const double s_len = norm(s_dir);
  if (s_len < 1e-14) {
    out.push_back(v);  // straight-through "corner": nothing to smooth
    return;
  }
  s_dir = s_dir * (1.0 / s_len);
  Vec2 t_dir = normalized(r2 - r1);

  // Rays: r_i = -+ sin(theta) t_dir + cos(theta) s_dir; wedge graph s = m|t|.
  const double cos_t = dot(r2, s_dir);
  const double sin_t = dot(r2, t_dir);
  const double m = cos_t / sin_t;
  const double tw = reach * sin_t;  // patch half-width in t
  const double c = m / ((1.0 + alpha) * std::pow(tw, alpha));
  const double a = m * tw * alpha / (1.0 + alpha);

  for (int k = 0; k <= segments; ++k) {
    const double t = -tw + 2.0 * tw * k / segments;
    const double s = a + c * std::pow(std::abs(t), 1.0 + alpha);
    out.push_back(v + t_dir * t + s_dir * s);
  }
}

Polygon smoothed_notch_polygon(double eps, double alpha, double rho) {
  const std::vector<Vec2> base = notched_rectangle_vertices(eps);
  // Corners smoothed: indices 4, 5, 6 = (0,1), (eps,0), (0,-1).
  std::vector<Vec2> out;
  const int n = static_cast<int>(base.size());
  for (int i = 0; i < n; ++i) {
    if (i >= 4) {
      const Vec2& prev = base[(i + n - 1) % n];
      const Vec2& next = base[(i + 1) % n];
      const double reach =
          std::min({rho, 0.4 * dist(prev, base[i]), 0.4 * dist(base[i], next)});
      append_cap(out, prev, base[i], next, reach, alpha, 24);
    } else {
      out.push_back(base[i]);
    }
  }
  return Polygon::from_vertices(std::move(out));
}

Polygon dumbbell_polygon(double eps, int arc_n) {
  const double r = dumbbell_lobe_radius(eps);
  if (!(r > 0.0)) throw ParamError("Dumbbell: eps too large, lobe radius not positive");
  if (!(eps < r)) throw ParamError("Dumbbell: corridor taller than lobes");
  std::vector<Vec2> v;
  v.reserve(2 * arc_n + 8);
  // Counter-clockwise: corridor bottom, right lobe, corridor top, left lobe.
  v.push_back({-1.0, -eps});
  v.push_back({1.0, -eps});
  v.push_back({1.0, -r});
  const double half = M_PI / 2.0;
  for (int k = 1; k < arc_n; ++k) {
    const double th = -half + M_PI * k / arc_n;
    v.push_back({1.0 + r * std::cos(th), r * std::sin(th)});
  }
  v.push_back({1.0, r});
  v.push_back({1.0, eps});
  v.push_back({-1.0, eps});
  v.push_back({-1.0, r});
  for (int k = 1; k < arc_n; ++k) {
    const double th = half + M_PI * k / arc_n;
    v.push_back({-1.0 + r * std::cos(th), r * std::sin(th)});
  }
  v.push_back({-1.0, -r});
  return Polygon::from_vertices(std::move(v));
}

}  // namespace

Polygon build_domain(const DomainSpec& spec) {
  using Kind = DomainSpec::Kind;
  switch (spec.kind) {
    case Kind::Square: {
      if (!(spec.side > 0.0)) throw ParamError("Square: side must be positive");
      const double s = spec.side;
      return Polygon::from_vertices({{0.0, 0.0}, {s, 0.0}, {s, s}, {0.0, s}});
    }
    case Kind::Rectangle: {
      if (!(spec.x1 > spec.x0) || !(spec.y1 > spec.y0)) {
        throw ParamError("Rectangle: empty range");
      }
      return Polygon::from_vertices(
          {{spec.x0, spec.y0}, {spec.x1, spec.y0}, {spec.x1, spec.y1}, {spec.x0, spec.y1}});
    }
    case Kind::NotchedRectangle: {
      if (!(spec.eps > 0.0)) throw ParamError("NotchedRectangle: eps must be positive");
      return Polygon::from_vertices(notched_rectangle_vertices(spec.eps));
    }
    case Kind::Dumbbell: {
      if (!(spec.eps > 0.0)) throw ParamError("Dumbbell: eps must be positive");
      if (spec.arc_vertices < 16) throw ParamError("Dumbbell: arc_vertices < 16");
      return dumbbell_polygon(spec.eps, spec.arc_vertices);
    }
    case Kind::Disc: {
      if (!(spec.radius > 0.0)) throw ParamError("Disc: radius must be positive");
      if (spec.arc_vertices < 16) throw ParamError("Disc: arc_vertices < 16");
      std::vector<Vec2> v;
      v.reserve(spec.arc_vertices);
      for (int k = 0; k < spec.arc_vertices; ++k) {
        const double th = 2.0 * M_PI * k / spec.arc_vertices;
        v.push_back({spec.radius * std::cos(th), spec.radius * std::sin(th)});
      }
      return Polygon::from_vertices(std::move(v));
    }
    case Kind::SmoothedNotch: {
      if (!(spec.eps > 0.0)) throw ParamError("SmoothedNotch: eps must be positive");
      if (!(spec.alpha > 0.0 && spec.alpha < 1.0)) {
        throw ParamError("SmoothedNotch: alpha must be in (0,1)");
      }
      const double rho = spec.smoothing_radius > 0.0 ? spec.smoothing_radius : spec.eps / 4.0;
      if (!(rho > 0.0 && rho < spec.eps / 2.0)) {
        throw ParamError("SmoothedNotch: smoothing radius must be in (0, eps/2)");
      }
      return smoothed_notch_polygon(spec.eps, spec.alpha, rho);
    }
  }
  throw ParamError("build_domain: unknown kind");
}

}  // namespace otlab
