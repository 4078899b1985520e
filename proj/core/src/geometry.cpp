#include "tarski/geometry.hpp"

#include <cmath>

namespace tarski::geometry {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return Rational((a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x));
}

Rational dot(const Point2& o, const Point2& a, const Point2& b) {
  return Rational((a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y));
}

Rational squared_distance(const Point2& a, const Point2& b) {
  Rational dx = a.x - b.x;
  Rational dy = a.y - b.y;
  return Rational(dx * dx + dy * dy);
}

bool between(const Point2& a, const Point2& b, const Point2& c) {
  if (a == c) return b == a;
  if (cross(a, c, b) != 0) return false;
  Rational along = dot(a, b, c);
  return along >= 0 && along <= squared_distance(a, c);
}

Point2 affine(const Point2& a, const Point2& b, const Rational& t) {
  Point2 p{Rational(a.x + t * (b.x - a.x)), Rational(a.y + t * (b.y - a.y))};
  p.x.canonicalize();
  p.y.canonicalize();
  return p;
}

std::optional<Point2> line_intersection(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2) {
  // p1 + s (p2 - p1) = q1 + u (q2 - q1), solved by Cramer's rule.
  Rational rx = p2.x - p1.x, ry = p2.y - p1.y;
  Rational sx = q2.x - q1.x, sy = q2.y - q1.y;
  Rational det = rx * sy - ry * sx;
  if (det == 0) return std::nullopt;
  Rational s = ((q1.x - p1.x) * sy - (q1.y - p1.y) * sx) / det;
  return affine(p1, p2, s);
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  mpz_class num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(num), rd = sqrt(den);
  Rational out(rn, rd);
  out.canonicalize();
  return out;
}

Rational approximate_sqrt(const Rational& r) {
  if (auto e = exact_sqrt(r)) return *e;
  // Newton iteration from the double estimate, carried out exactly and then
  // truncated to a fixed denominator.
  Rational x(std::sqrt(r.get_d()));
  if (x <= 0) x = 1;
  for (int i = 0; i < 3; ++i) {
    x = (x + r / x) / 2;
    x.canonicalize();
  }
  const mpz_class scale("1000000000000000");
  mpz_class scaled(Rational(x * scale));
  Rational out(scaled, scale);
  out.canonicalize();
  return out;
}

}  // namespace tarski::geometry
