#pragma once

// Exact rational plane geometry.

#include "tarski/formula.hpp"

#include <optional>

namespace tarski::geometry {

Rational cross(const Point2& o, const Point2& a, const Point2& b);
Rational dot(const Point2& o, const Point2& a, const Point2& b);
Rational squared_distance(const Point2& a, const Point2& b);

/// b = a + t (c - a) for some t in [0, 1].
bool between(const Point2& a, const Point2& b, const Point2& c);

/// a + t (b - a).
Point2 affine(const Point2& a, const Point2& b, const Rational& t);

/// Intersection point of the lines through (p1, p2) and (q1, q2) when they
/// cross in a single point.
std::optional<Point2> line_intersection(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2);

/// Exact square root when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Rational approximation of sqrt(r) with absolute error below 1e-12.
Rational approximate_sqrt(const Rational& r);

}  // namespace tarski::geometry
