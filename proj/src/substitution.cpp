#include "tiling/substitution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tiling {

double polygonArea(const std::vector<Vec2> &poly) {
    double s = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const Vec2 &a = poly[i], &b = poly[(i + 1) % poly.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return 0.5 * s;
}

Vec2 polygonCentroid(const std::vector<Vec2> &poly) {
    double a = 0, cx = 0, cy = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const Vec2 &p = poly[i], &q = poly[(i + 1) % poly.size()];
        double w = p.x * q.y - q.x * p.y;
        a += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    a *= 0.5;
    return {cx / (6 * a), cy / (6 * a)};
}

double signedDepth(const Shape &s, Vec2 p) {
    // positively oriented polygon: interior is left of every edge
    double best = std::numeric_limits<double>::infinity();
    const auto &v = s.base;
    for (size_t i = 0; i < v.size(); ++i) {
        const Vec2 &a = v[i], &b = v[(i + 1) % v.size()];
        double ex = b.x - a.x, ey = b.y - a.y;
        double len = std::hypot(ex, ey);
        double d = (ex * (p.y - a.y) - ey * (p.x - a.x)) / len;
        best = std::min(best, d);
    }
    return best;
}

double signedDepth(const Shape &s, Vec3 p) {
    double d = signedDepth(s, Vec2{p.x, p.y});
    d = std::min(d, p.z);
    d = std::min(d, s.height - p.z);
    return d;
}

Prototile makePrototile(int id, std::string label, Shape shape, int dimension) {
    Prototile pt;
    pt.id = id;
    pt.label = std::move(label);
    pt.shape = std::move(shape);
    Vec2 c = polygonCentroid(pt.shape.base);
    double h = dimension == 3 ? pt.shape.height : 0.0;
    pt.center = {c.x, c.y, h / 2};
    double r = 0, diam = 0;
    std::vector<Vec3> verts;
    for (double z : (dimension == 3 ? std::vector<double>{0.0, h} : std::vector<double>{0.0}))
        for (auto v : pt.shape.base) verts.push_back({v.x, v.y, z});
    for (const auto &v : verts) {
        r = std::max(r, std::hypot(v.x - pt.center.x, v.y - pt.center.y, v.z - pt.center.z));
        for (const auto &w : verts)
            diam = std::max(diam, std::hypot(v.x - w.x, v.y - w.y, v.z - w.z));
    }
    pt.boundingRadius = r;
    pt.diameter = diam;
    pt.measure = polygonArea(pt.shape.base) * (dimension == 3 ? pt.shape.height : 1.0);
    return pt;
}

namespace {

constexpr double kSatEps = 1e-9;

// 1D interval overlap test with a tolerance that errs toward intersection
bool overlaps(double lo1, double hi1, double lo2, double hi2) {
    return lo1 <= hi2 + kSatEps && lo2 <= hi1 + kSatEps;
}

}  // namespace

bool polygonIntersectsBox(const std::vector<Vec2> &poly, const Box &box) {
    // separating-axis test; both shapes convex
    auto project = [&](double ax, double ay, double &lo, double &hi) {
        lo = std::numeric_limits<double>::infinity();
        hi = -lo;
        for (const auto &v : poly) {
            double d = ax * v.x + ay * v.y;
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
    };
    auto boxProject = [&](double ax, double ay, double &lo, double &hi) {
        lo = std::numeric_limits<double>::infinity();
        hi = -lo;
        for (double x : {box.lo.x, box.hi.x})
            for (double y : {box.lo.y, box.hi.y}) {
                double d = ax * x + ay * y;
                lo = std::min(lo, d);
                hi = std::max(hi, d);
            }
    };
    std::vector<std::pair<double, double>> axes = {{1, 0}, {0, 1}};
    for (size_t i = 0; i < poly.size(); ++i) {
        const Vec2 &a = poly[i], &b = poly[(i + 1) % poly.size()];
        axes.push_back({a.y - b.y, b.x - a.x});
    }
    for (auto [ax, ay] : axes) {
        double n = std::hypot(ax, ay);
        if (n < 1e-15) continue;
        double l1, h1, l2, h2;
        project(ax / n, ay / n, l1, h1);
        boxProject(ax / n, ay / n, l2, h2);
        if (!overlaps(l1, h1, l2, h2)) return false;
    }
    return true;
}

bool prismIntersectsBox(const std::vector<Vec3> &verts, const Box &box) {
    // verts: bottom base then top base (same order); convex prism vs box SAT
    size_t n = verts.size() / 2;
    auto sub = [](Vec3 a, Vec3 b) { return Vec3{a.x - b.x, a.y - b.y, a.z - b.z}; };
    auto cross = [](Vec3 a, Vec3 b) {
        return Vec3{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    };
    std::vector<Vec3> axes = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    Vec3 lateral = sub(verts[n], verts[0]);
    std::vector<Vec3> edges;
    for (size_t i = 0; i < n; ++i) edges.push_back(sub(verts[(i + 1) % n], verts[i]));
    edges.push_back(lateral);
    axes.push_back(cross(edges[0], edges[1 % n]));  // base normal
    for (size_t i = 0; i < n; ++i) axes.push_back(cross(edges[i], lateral));  // side normals
    for (const auto &box_e : std::vector<Vec3>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})
        for (const auto &e : edges) axes.push_back(cross(box_e, e));
    for (const auto &ax : axes) {
        double nn = std::hypot(ax.x, ax.y, ax.z);
        if (nn < 1e-15) continue;
        double l1 = std::numeric_limits<double>::infinity(), h1 = -l1;
        for (const auto &v : verts) {
            double d = (ax.x * v.x + ax.y * v.y + ax.z * v.z) / nn;
            l1 = std::min(l1, d);
            h1 = std::max(h1, d);
        }
        double l2 = std::numeric_limits<double>::infinity(), h2 = -l2;
        for (double x : {box.lo.x, box.hi.x})
            for (double y : {box.lo.y, box.hi.y})
                for (double z : {box.lo.z, box.hi.z}) {
                    double d = (ax.x * x + ax.y * y + ax.z * z) / nn;
                    l2 = std::min(l2, d);
                    h2 = std::max(h2, d);
                }
        if (!overlaps(l1, h1, l2, h2)) return false;
    }
    return true;
}

EigenResult dominantEigen(const std::vector<std::vector<long>> &M) {
    size_t n = M.size();
    std::vector<double> v(n, 1.0 / n), w(n);
    double value = 0;
    for (int it = 0; it < 100000; ++it) {
        double norm = 0;
        for (size_t i = 0; i < n; ++i) {
            w[i] = 0;
            for (size_t j = 0; j < n; ++j) w[i] += (double)M[i][j] * v[j];
            norm += w[i];
        }
        if (norm == 0) throw std::runtime_error("dominantEigen: matrix annihilated the iterate");
        double next = norm;  // L1 norm of Mv with v L1-normalized
        for (size_t i = 0; i < n; ++i) w[i] /= norm;
        std::swap(v, w);
        if (it > 0 && std::fabs(next - value) <= 1e-12 * std::fabs(next)) {
            return {next, v};
        }
        value = next;
    }
    throw std::runtime_error("dominantEigen: no convergence after 1e5 iterations");
}

}  // namespace tiling
