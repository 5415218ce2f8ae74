#pragma once
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tiling/isometry.hpp"

#ifdef TILING_HAVE_OPENMP
#include <omp.h>
#endif

namespace tiling {

//--GEOMETRY-SUBSTRATE---------------------------------------------------------

// Tile geometry in prototile coordinates: a simple, positively oriented
// polygon; prisms add a height and live in z in [0, height].
struct Shape {
    std::vector<Vec2> base;
    double height = 0.0;  // 0 for plain polygons
};

double polygonArea(const std::vector<Vec2> &poly);
Vec2 polygonCentroid(const std::vector<Vec2> &poly);

// perpendicular distance to the nearest edge line, positive inside
double signedDepth(const Shape &s, Vec2 p);
double signedDepth(const Shape &s, Vec3 p);

struct Prototile {
    int id = 0;
    std::string label;
    Shape shape;
    // derived, filled by makePrototile
    Vec3 center{};
    double boundingRadius = 0;
    double diameter = 0;
    double measure = 0;  // area (2D) or volume (3D)
};

Prototile makePrototile(int id, std::string label, Shape shape, int dimension);

// axis-aligned window; z ignored in the plane
struct Box {
    Vec3 lo{}, hi{};
};

bool polygonIntersectsBox(const std::vector<Vec2> &poly, const Box &box);
bool prismIntersectsBox(const std::vector<Vec3> &verts, const Box &box);

//--SYSTEM-REPRESENTATION------------------------------------------------------

enum class OrientationKind { LetterOnly, Key2, Quat3 };

template <class Iso>
struct ChildPlacement {
    int proto;
    Iso iso;  // placement inside the parent scaled up by lambda
};

template <class Iso>
struct SubstitutionRule {
    int parent = 0;
    std::vector<ChildPlacement<Iso>> children;
};

template <class Iso>
struct SubstitutionSystem {
    std::string name;
    int dimension = 2;
    double lambda = 2.0;
    std::string lambdaNote;  // human-readable exact description
    std::vector<Prototile> prototiles;
    std::vector<SubstitutionRule<Iso>> rules;  // one per prototile, same index
    OrientationKind orientationKind = OrientationKind::Key2;
};

using System2 = SubstitutionSystem<Isometry2>;
using System3 = SubstitutionSystem<Isometry3>;
using AnySystem = std::variant<System2, System3>;

template <class Iso>
struct TileInstance {
    int proto = 0;
    Iso placement;
    std::vector<uint8_t> address;  // child indices from the root supertile
};

//--EXPANSION------------------------------------------------------------------

inline OrientationKey2 composeOrient(const Isometry2 &f, const Isometry2 &g) {
    return composeKey2(f.rot, g.rot);
}
inline RotationQuat composeOrient(const Isometry3 &f, const Isometry3 &g) {
    return quatMul(f.rot, g.rot);
}

// One substitution step.  `childScale` is the size of the produced children
// in the coordinates the instance lives in; rule translations are stored for
// unit children inside a lambda-sized parent, so a parent of size s yields
// children of size s/lambda placed at t_parent + (s/lambda) * R_parent * t_rule.
template <class Iso>
std::vector<TileInstance<Iso>> subdivide(const TileInstance<Iso> &inst,
                                         const SubstitutionSystem<Iso> &sys,
                                         double childScale = -1.0) {
    if (inst.proto < 0 || inst.proto >= (int)sys.rules.size() ||
        sys.rules[inst.proto].children.empty())
        throw std::invalid_argument(sys.name + ": no rule for prototile " +
                                    std::to_string(inst.proto));
    if (childScale <= 0) childScale = 1.0 / sys.lambda;
    const auto &rule = sys.rules[inst.proto];
    std::vector<TileInstance<Iso>> out;
    out.reserve(rule.children.size());
    for (size_t i = 0; i < rule.children.size(); ++i) {
        const auto &ch = rule.children[i];
        TileInstance<Iso> child;
        child.proto = ch.proto;
        child.placement.rot = composeOrient(inst.placement, ch.iso);
        child.placement.t = inst.placement.t +
                            childScale * inst.placement.applyLinear(ch.iso.t);
        child.address = inst.address;
        child.address.push_back(static_cast<uint8_t>(i));
        out.push_back(std::move(child));
    }
    return out;
}

namespace detail {

inline bool ballTouchesBox(Vec3 c, double r, const Box &b, int dim) {
    double d2 = 0;
    auto acc = [&](double v, double lo, double hi) {
        double e = v < lo ? lo - v : (v > hi ? v - hi : 0.0);
        d2 += e * e;
    };
    acc(c.x, b.lo.x, b.hi.x);
    acc(c.y, b.lo.y, b.hi.y);
    if (dim == 3) acc(c.z, b.lo.z, b.hi.z);
    return d2 <= r * r;
}

inline Vec3 centerOf(const Isometry2 &pl, Vec3 c, double s) {
    Vec2 p = pl.apply(s * Vec2{c.x, c.y});
    return {p.x, p.y, 0};
}
inline Vec3 centerOf(const Isometry3 &pl, Vec3 c, double s) {
    return pl.apply(s * c);
}

inline bool tileTouchesBox(const Isometry2 &pl, const Prototile &pt, const Box &box) {
    std::vector<Vec2> w;
    w.reserve(pt.shape.base.size());
    for (auto v : pt.shape.base) w.push_back(pl.apply(v));
    return polygonIntersectsBox(w, box);
}
inline bool tileTouchesBox(const Isometry3 &pl, const Prototile &pt, const Box &box) {
    std::vector<Vec3> w;
    w.reserve(pt.shape.base.size() * 2);
    for (double z : {0.0, pt.shape.height})
        for (auto v : pt.shape.base) w.push_back(pl.apply({v.x, v.y, z}));
    return prismIntersectsBox(w, box);
}

}  // namespace detail

// Serial reference expansion: all level-n descendants of the root supertile
// (prototile 0), in final coordinates where tiles are unit size and the
// supertile has diameter lambda^n * prototile diameter.
template <class Iso>
std::vector<TileInstance<Iso>> expandSerial(const SubstitutionSystem<Iso> &sys, int level,
                                            const Box *window = nullptr) {
    std::vector<TileInstance<Iso>> frontier{TileInstance<Iso>{0, Iso::identity(), {}}};
    for (int depth = 0; depth < level; ++depth) {
        double childScale = std::pow(sys.lambda, level - depth - 1);
        double tileScale = childScale * sys.lambda;
        std::vector<TileInstance<Iso>> next;
        next.reserve(frontier.size() * sys.rules[0].children.size());
        for (const auto &inst : frontier) {
            if (window) {
                const Prototile &pt = sys.prototiles[inst.proto];
                Vec3 c = detail::centerOf(inst.placement, pt.center, tileScale);
                double r = tileScale * pt.boundingRadius * (1 + 1e-12) + 1e-9;
                if (!detail::ballTouchesBox(c, r, *window, sys.dimension)) continue;
            }
            for (auto &ch : subdivide(inst, sys, childScale)) next.push_back(std::move(ch));
        }
        frontier = std::move(next);
    }
    if (window) {
        std::vector<TileInstance<Iso>> kept;
        kept.reserve(frontier.size());
        for (auto &inst : frontier)
            if (detail::tileTouchesBox(inst.placement, sys.prototiles[inst.proto], *window))
                kept.push_back(std::move(inst));
        frontier = std::move(kept);
    }
    return frontier;
}

// Parallel expansion.  Parents are processed in fixed-size chunks whose
// results are concatenated in chunk order, so the output sequence is
// identical for any worker count (and equal to the serial reference).
template <class Iso>
std::vector<TileInstance<Iso>> expand(const SubstitutionSystem<Iso> &sys, int level,
                                      const Box *window = nullptr, int workers = 0) {
#ifndef TILING_HAVE_OPENMP
    (void)workers;
    return expandSerial(sys, level, window);
#else
    constexpr size_t kChunk = 2048;
    std::vector<TileInstance<Iso>> frontier{TileInstance<Iso>{0, Iso::identity(), {}}};
    int nthreads = workers > 0 ? workers : omp_get_max_threads();
    for (int depth = 0; depth < level; ++depth) {
        double childScale = std::pow(sys.lambda, level - depth - 1);
        double tileScale = childScale * sys.lambda;
        size_t nchunks = (frontier.size() + kChunk - 1) / kChunk;
        std::vector<std::vector<TileInstance<Iso>>> parts(nchunks);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
        for (long long ci = 0; ci < (long long)nchunks; ++ci) {
            auto &out = parts[ci];
            size_t begin = ci * kChunk, end = std::min(begin + kChunk, frontier.size());
            for (size_t i = begin; i < end; ++i) {
                const auto &inst = frontier[i];
                if (window) {
                    const Prototile &pt = sys.prototiles[inst.proto];
                    Vec3 c = detail::centerOf(inst.placement, pt.center, tileScale);
                    double r = tileScale * pt.boundingRadius * (1 + 1e-12) + 1e-9;
                    if (!detail::ballTouchesBox(c, r, *window, sys.dimension)) continue;
                }
                for (auto &ch : subdivide(inst, sys, childScale)) out.push_back(std::move(ch));
            }
        }
        std::vector<TileInstance<Iso>> next;
        size_t total = 0;
        for (auto &p : parts) total += p.size();
        next.reserve(total);
        for (auto &p : parts)
            for (auto &inst : p) next.push_back(std::move(inst));
        frontier = std::move(next);
    }
    if (window) {
        std::vector<char> keep(frontier.size(), 0);
#pragma omp parallel for schedule(static) num_threads(nthreads)
        for (long long i = 0; i < (long long)frontier.size(); ++i)
            keep[i] = detail::tileTouchesBox(frontier[i].placement,
                                             sys.prototiles[frontier[i].proto], *window);
        std::vector<TileInstance<Iso>> kept;
        for (size_t i = 0; i < frontier.size(); ++i)
            if (keep[i]) kept.push_back(std::move(frontier[i]));
        frontier = std::move(kept);
    }
    return frontier;
#endif
}

// Recompute a placement from scratch by walking the address; used to check
// that incremental expansion and the rule composition agree.
template <class Iso>
Iso placementFromAddress(const SubstitutionSystem<Iso> &sys,
                         const std::vector<uint8_t> &address) {
    TileInstance<Iso> cur{0, Iso::identity(), {}};
    int level = (int)address.size();
    for (int depth = 0; depth < level; ++depth) {
        double childScale = std::pow(sys.lambda, level - depth - 1);
        auto kids = subdivide(cur, sys, childScale);
        cur = kids.at(address[depth]);
    }
    return cur.placement;
}

//--COUNTING-------------------------------------------------------------------

// M[i][j] = number of type-i children in the rule of type j
template <class Iso>
std::vector<std::vector<long>> substitutionMatrix(const SubstitutionSystem<Iso> &sys) {
    size_t n = sys.prototiles.size();
    std::vector<std::vector<long>> M(n, std::vector<long>(n, 0));
    for (size_t j = 0; j < n; ++j)
        for (const auto &ch : sys.rules[j].children) M[ch.proto][j]++;
    return M;
}

// per-type tile counts of the level-n supertile grown from prototile `root`
template <class Iso>
std::vector<unsigned long long> countsAtLevel(const SubstitutionSystem<Iso> &sys, int level,
                                              int root = 0) {
    auto M = substitutionMatrix(sys);
    size_t n = sys.prototiles.size();
    std::vector<unsigned long long> v(n, 0);
    v[root] = 1;
    for (int step = 0; step < level; ++step) {
        std::vector<unsigned long long> w(n, 0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) w[i] += (unsigned long long)M[i][j] * v[j];
        v = std::move(w);
    }
    return v;
}

struct EigenResult {
    double value;
    std::vector<double> vec;  // positive, L1-normalized
};

// power iteration to relative tolerance 1e-12 (requires M nonnegative primitive)
EigenResult dominantEigen(const std::vector<std::vector<long>> &M);

//--PARTITION-ORACLE-----------------------------------------------------------

struct PartitionReport {
    double measureResidual = 0;           // child measure sum minus parent measure
    long long multiplicityViolations = 0; // interior samples covered != exactly once
    long long samplesUsed = 0;
    long long boundaryRejected = 0;
    bool degenerateGeometry = false;
};

// counter-based generator: sample i depends only on (seed, i), so results
// are identical for any worker count
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

namespace detail {

struct TriFan {
    std::vector<std::array<Vec2, 3>> tris;
    std::vector<double> cumArea;  // normalized cumulative weights
    double height = 0;

    explicit TriFan(const Shape &s) : height(s.height) {
        double total = 0;
        for (size_t i = 1; i + 1 < s.base.size(); ++i) {
            std::array<Vec2, 3> t{s.base[0], s.base[i], s.base[i + 1]};
            double a = 0.5 * std::fabs((t[1].x - t[0].x) * (t[2].y - t[0].y) -
                                       (t[2].x - t[0].x) * (t[1].y - t[0].y));
            tris.push_back(t);
            total += a;
            cumArea.push_back(total);
        }
        for (auto &c : cumArea) c /= total;
    }

    template <class Rng>
    Vec2 sample2(Rng &&next) const {
        double u = next();
        size_t k = 0;
        while (k + 1 < cumArea.size() && u > cumArea[k]) ++k;
        const auto &t = tris[k];
        double r1 = std::sqrt(next()), r2 = next();
        double w0 = 1 - r1, w1 = r1 * (1 - r2), w2 = r1 * r2;
        return {w0 * t[0].x + w1 * t[1].x + w2 * t[2].x,
                w0 * t[0].y + w1 * t[1].y + w2 * t[2].y};
    }
};

inline int classify(const Shape &s, const Isometry2 &iso, Vec2 p, double tol) {
    double d = signedDepth(s, iso.applyInverse(p));
    return d > tol ? 1 : (d < -tol ? -1 : 0);
}
inline int classify(const Shape &s, const Isometry3 &iso, Vec3 p, double tol) {
    double d = signedDepth(s, iso.applyInverse(p));
    return d > tol ? 1 : (d < -tol ? -1 : 0);
}

inline Vec2 parentSample(const TriFan &fan, double lambda, const Shape &, int /*dim*/,
                         uint64_t seed, long long i, Vec2 *) {
    uint64_t state = seed + 0x632BE59BD9B4E019ULL * (uint64_t)(i + 1);
    auto next = [&]() { state = splitmix64(state); return (state >> 11) * 0x1.0p-53; };
    Vec2 p = fan.sample2(next);
    return {lambda * p.x, lambda * p.y};
}
inline Vec3 parentSample(const TriFan &fan, double lambda, const Shape &sh, int /*dim*/,
                         uint64_t seed, long long i, Vec3 *) {
    uint64_t state = seed + 0x632BE59BD9B4E019ULL * (uint64_t)(i + 1);
    auto next = [&]() { state = splitmix64(state); return (state >> 11) * 0x1.0p-53; };
    Vec2 p = fan.sample2(next);
    double z = next() * sh.height;
    return {lambda * p.x, lambda * p.y, lambda * z};
}

}  // namespace detail

// Checks that the rule of `protoId` really is a partition of the scaled
// parent: measures must balance, and uniformly sampled interior points
// (boundary-tolerance rejected) must land in exactly one child.
template <class Iso>
PartitionReport verifyPartitionSerial(const SubstitutionSystem<Iso> &sys, int protoId,
                                      long long sampleCount, double tolerance,
                                      uint64_t seed = 20260823ULL) {
    using Pt = typename Iso::Point;
    PartitionReport rep;
    const auto &rule = sys.rules.at(protoId);
    const Prototile &parent = sys.prototiles.at(protoId);
    if (parent.measure <= 0) {
        rep.degenerateGeometry = true;
        return rep;
    }
    double childSum = 0;
    for (const auto &ch : rule.children) {
        if (sys.prototiles[ch.proto].measure <= 0) rep.degenerateGeometry = true;
        childSum += sys.prototiles[ch.proto].measure;
    }
    if (rep.degenerateGeometry) return rep;
    rep.measureResidual = childSum - std::pow(sys.lambda, sys.dimension) * parent.measure;

    detail::TriFan fan(parent.shape);
    for (long long i = 0; i < sampleCount; ++i) {
        Pt p = detail::parentSample(fan, sys.lambda, parent.shape, sys.dimension, seed, i,
                                    (Pt *)nullptr);
        int hits = 0;
        bool boundary = false;
        for (const auto &ch : rule.children) {
            int c = detail::classify(sys.prototiles[ch.proto].shape, ch.iso, p, tolerance);
            if (c == 0) { boundary = true; break; }
            if (c > 0) ++hits;
        }
        if (boundary) { rep.boundaryRejected++; continue; }
        rep.samplesUsed++;
        if (hits != 1) rep.multiplicityViolations++;
    }
    return rep;
}

template <class Iso>
PartitionReport verifyPartition(const SubstitutionSystem<Iso> &sys, int protoId,
                                long long sampleCount, double tolerance,
                                uint64_t seed = 20260823ULL, int workers = 0) {
#ifndef TILING_HAVE_OPENMP
    (void)workers;
    return verifyPartitionSerial(sys, protoId, sampleCount, tolerance, seed);
#else
    using Pt = typename Iso::Point;
    PartitionReport rep;
    const auto &rule = sys.rules.at(protoId);
    const Prototile &parent = sys.prototiles.at(protoId);
    if (parent.measure <= 0) {
        rep.degenerateGeometry = true;
        return rep;
    }
    double childSum = 0;
    for (const auto &ch : rule.children) {
        if (sys.prototiles[ch.proto].measure <= 0) rep.degenerateGeometry = true;
        childSum += sys.prototiles[ch.proto].measure;
    }
    if (rep.degenerateGeometry) return rep;
    rep.measureResidual = childSum - std::pow(sys.lambda, sys.dimension) * parent.measure;

    detail::TriFan fan(parent.shape);
    long long violations = 0, used = 0, rejected = 0;
    int nthreads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) reduction(+ : violations, used, rejected) \
    num_threads(nthreads)
    for (long long i = 0; i < sampleCount; ++i) {
        Pt p = detail::parentSample(fan, sys.lambda, parent.shape, sys.dimension, seed, i,
                                    (Pt *)nullptr);
        int hits = 0;
        bool boundary = false;
        for (const auto &ch : rule.children) {
            int c = detail::classify(sys.prototiles[ch.proto].shape, ch.iso, p, tolerance);
            if (c == 0) { boundary = true; break; }
            if (c > 0) ++hits;
        }
        if (boundary) { rejected++; continue; }
        used++;
        if (hits != 1) violations++;
    }
    rep.multiplicityViolations = violations;
    rep.samplesUsed = used;
    rep.boundaryRejected = rejected;
    return rep;
#endif
}

}  // namespace tiling
