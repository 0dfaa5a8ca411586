#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace localcap {

/// Planar location in meters.
struct Point2D {
    double x = 0.0;
    double y = 0.0;

    friend Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2D operator*(double s, Point2D p) { return {s * p.x, s * p.y}; }
    friend Point2D operator*(Point2D p, double s) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point2D a, Point2D b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point2D a, Point2D b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2D a, Point2D b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point2D a) { return a.x * a.x + a.y * a.y; }
inline double norm(Point2D a) { return std::sqrt(norm2(a)); }
inline double distance2(Point2D a, Point2D b) { return norm2(a - b); }
inline double distance(Point2D a, Point2D b) { return std::sqrt(distance2(a, b)); }

inline bool is_finite(Point2D p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Rotate a vector clockwise by pi/2: (x, y) -> (y, -x).
inline Point2D rotate_cw(Point2D p) { return {p.y, -p.x}; }

/// Axis-aligned rectangle centered at the origin.
struct Region {
    double half_width = 0.0;   // meters
    double half_height = 0.0;  // meters

    double area() const { return 4.0 * half_width * half_height; }
    bool contains(Point2D p) const {
        return std::fabs(p.x) <= half_width && std::fabs(p.y) <= half_height;
    }
    static Region square(double side) { return {side / 2.0, side / 2.0}; }
};

/// Signed shoelace area of a closed polygon (positive when
/// counterclockwise). The polygon closes itself from back() to front().
double polygon_signed_area(std::span<const Point2D> vertices);

/// Even-odd point-in-polygon test. Points coinciding with a vertex are
/// treated as inside.
bool point_in_polygon(std::span<const Point2D> vertices, Point2D p);

}  // namespace localcap
