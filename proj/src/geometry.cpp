#include "localcap/geometry.hpp"

namespace localcap {

double polygon_signed_area(std::span<const Point2D> vertices) {
    const std::size_t n = vertices.size();
    if (n < 3) return 0.0;
    double sum = 0.0;
    // Anchor on vertex 0 to keep magnitudes small for far-from-origin loops.
    const Point2D a = vertices[0];
    for (std::size_t k = 1; k + 1 < n; ++k) {
        sum += cross(vertices[k] - a, vertices[k + 1] - a);
    }
    return 0.5 * sum;
}

bool point_in_polygon(std::span<const Point2D> vertices, Point2D p) {
    const std::size_t n = vertices.size();
    if (n < 3) return false;

    double scale2 = 0.0;
    for (const Point2D& v : vertices) scale2 = std::max(scale2, distance2(v, p));
    const double eps2 = scale2 * 1e-24;
    for (const Point2D& v : vertices) {
        if (distance2(v, p) <= eps2) return true;  // boundary vertex counts as inside
    }

    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2D vi = vertices[i];
        const Point2D vj = vertices[j];
        if ((vi.y > p.y) != (vj.y > p.y)) {
            const double x_cross = vi.x + (p.y - vi.y) / (vj.y - vi.y) * (vj.x - vi.x);
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside;
}

}  // namespace localcap
