#include "tiling/io.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

namespace tiling {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

void writeStatsCsv(std::ostream &os, const std::vector<SpectrumRow> &rows) {
    os << "level,diameter,tile_count,orientation_count\n";
    for (const auto &r : rows)
        os << r.level << ',' << fmt12(r.diameter) << ',' << r.tileCount << ','
           << r.orientationCount << '\n';
}

void writeGroupCsv(std::ostream &os, const std::vector<GroupBallRow> &rows) {
    os << "word_length,distinct_elements,closed\n";
    for (const auto &r : rows)
        os << r.wordLength << ',' << r.distinctElements << ','
           << (r.closed ? "true" : "false") << '\n';
}

namespace {

using json = nlohmann::ordered_json;

json orientationJson(const OrientationKey2 &k) {
    return {{"alpha_count", k.alphaCount},
            {"turns", k.turns},
            {"reflected", k.reflected},
            {"modulus", k.turnModulus}};
}

json coeffJson(const QuadFieldElement &e) {
    // coefficients of 1, sqrt2, sqrt3, sqrt6 as exact fractions
    return json::array({ratString(e.a), ratString(e.b), ratString(e.c), ratString(e.d)});
}

json orientationJson(const RotationQuat &q) {
    return {{"w", coeffJson(q.w)}, {"x", coeffJson(q.x)}, {"y", coeffJson(q.y)},
            {"z", coeffJson(q.z)}};
}

std::vector<Vec2> worldPolygon(const System2 &sys, const TileInstance<Isometry2> &t) {
    std::vector<Vec2> out;
    for (auto v : sys.prototiles[t.proto].shape.base) out.push_back(t.placement.apply(v));
    return out;
}

std::vector<Vec3> worldPrism(const System3 &sys, const TileInstance<Isometry3> &t) {
    std::vector<Vec3> out;
    const Shape &sh = sys.prototiles[t.proto].shape;
    for (double z : {0.0, sh.height})
        for (auto v : sh.base) out.push_back(t.placement.apply({v.x, v.y, z}));
    return out;
}

json addressJson(const std::vector<uint8_t> &addr) {
    json a = json::array();
    for (uint8_t d : addr) a.push_back((int)d);
    return a;
}

const char *kFills[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                        "#b07aa1", "#76b7b2", "#edc948", "#9c755f"};

}  // namespace

nlohmann::ordered_json tilesJson(const System2 &sys, int level,
                                 const std::vector<TileInstance<Isometry2>> &tiles) {
    json doc;
    doc["system"] = sys.name;
    doc["level"] = level;
    doc["scale_factor"] = sys.lambdaNote;
    json arr = json::array();
    for (const auto &t : tiles) {
        json verts = json::array();
        for (auto v : worldPolygon(sys, t))
            verts.push_back(json::array({fmt12(v.x), fmt12(v.y)}));
        arr.push_back({{"proto", sys.prototiles[t.proto].label},
                       {"address", addressJson(t.address)},
                       {"orientation", orientationJson(t.placement.rot)},
                       {"vertices", verts}});
    }
    doc["tiles"] = std::move(arr);
    return doc;
}

nlohmann::ordered_json tilesJson(const System3 &sys, int level,
                                 const std::vector<TileInstance<Isometry3>> &tiles) {
    json doc;
    doc["system"] = sys.name;
    doc["level"] = level;
    doc["scale_factor"] = sys.lambdaNote;
    json arr = json::array();
    for (const auto &t : tiles) {
        json verts = json::array();
        for (auto v : worldPrism(sys, t))
            verts.push_back(json::array({fmt12(v.x), fmt12(v.y), fmt12(v.z)}));
        arr.push_back({{"proto", sys.prototiles[t.proto].label},
                       {"address", addressJson(t.address)},
                       {"orientation", orientationJson(t.placement.rot)},
                       {"vertices", verts}});
    }
    doc["tiles"] = std::move(arr);
    return doc;
}

void writeSvg(std::ostream &os, const System2 &sys,
              const std::vector<TileInstance<Isometry2>> &tiles) {
    double lox = 1e300, loy = 1e300, hix = -1e300, hiy = -1e300;
    for (const auto &t : tiles)
        for (auto v : worldPolygon(sys, t)) {
            lox = std::min(lox, v.x);
            hix = std::max(hix, v.x);
            loy = std::min(loy, v.y);
            hiy = std::max(hiy, v.y);
        }
    if (tiles.empty()) lox = loy = 0, hix = hiy = 1;
    double w = hix - lox, h = hiy - loy, pad = 0.03 * std::max(w, h);
    double legendH = 0.08 * (hiy - loy + 2 * pad) * (double)sys.prototiles.size() + 2 * pad;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << fmt12(lox - pad) << ' ' << fmt12(-(hiy + pad)) << ' '
       << fmt12(w + 2 * pad) << ' ' << fmt12(h + 2 * pad + legendH) << "\">\n";
    // one global flip: geometry below is in ordinary y-up coordinates
    os << "<g transform=\"scale(1,-1)\" stroke=\"#333333\" stroke-width=\""
       << fmt12(0.004 * std::max(w, h)) << "\" stroke-linejoin=\"round\">\n";
    for (const auto &t : tiles) {
        os << "<polygon fill=\"" << kFills[t.proto % 8] << "\" points=\"";
        bool first = true;
        for (auto v : worldPolygon(sys, t)) {
            if (!first) os << ' ';
            first = false;
            os << fmt12(v.x) << ',' << fmt12(v.y);
        }
        os << "\"/>\n";
        // orientation tick: centroid toward the image of the +x direction
        std::vector<Vec2> poly = worldPolygon(sys, t);
        Vec2 c = polygonCentroid(poly);
        Vec2 d = t.placement.applyLinear({1, 0});
        double len = 0.35 * sys.prototiles[t.proto].boundingRadius;
        os << "<line x1=\"" << fmt12(c.x) << "\" y1=\"" << fmt12(c.y) << "\" x2=\""
           << fmt12(c.x + len * d.x) << "\" y2=\"" << fmt12(c.y + len * d.y)
           << "\" stroke=\"#000000\"/>\n";
    }
    os << "</g>\n";
    // legend (unflipped so text reads normally)
    double fs = 0.045 * std::max(w, h);
    for (size_t i = 0; i < sys.prototiles.size(); ++i) {
        double y = (loy - pad) * -1 + pad + fs * 1.5 * (double)(i + 1);
        os << "<rect x=\"" << fmt12(lox) << "\" y=\"" << fmt12(y - fs) << "\" width=\""
           << fmt12(fs) << "\" height=\"" << fmt12(fs) << "\" fill=\"" << kFills[i % 8]
           << "\"/>\n";
        os << "<text x=\"" << fmt12(lox + 1.5 * fs) << "\" y=\"" << fmt12(y)
           << "\" font-size=\"" << fmt12(fs) << "\" font-family=\"sans-serif\">"
           << sys.prototiles[i].label << " (tick marks the tile's own x direction)</text>\n";
    }
    os << "</svg>\n";
}

void writeObj(std::ostream &os, const System3 &sys,
              const std::vector<TileInstance<Isometry3>> &tiles) {
    std::map<std::string, long> vertexIndex;  // formatted coordinate -> 1-based id
    std::vector<std::string> vertexLines;
    std::vector<std::array<long, 3>> faces;
    auto intern = [&](Vec3 v) {
        std::string key = fmt12(v.x) + " " + fmt12(v.y) + " " + fmt12(v.z);
        auto [it, fresh] = vertexIndex.insert({key, (long)vertexLines.size() + 1});
        if (fresh) vertexLines.push_back(key);
        return it->second;
    };
    for (const auto &t : tiles) {
        std::vector<Vec3> pv = worldPrism(sys, t);
        long id[6];
        for (int i = 0; i < 6; ++i) id[i] = intern(pv[i]);
        faces.push_back({id[0], id[2], id[1]});  // bottom, outward normal down
        faces.push_back({id[3], id[4], id[5]});  // top
        for (int i = 0; i < 3; ++i) {            // sides as triangle pairs
            int j = (i + 1) % 3;
            faces.push_back({id[i], id[j], id[3 + j]});
            faces.push_back({id[i], id[3 + j], id[3 + i]});
        }
    }
    os << "# " << sys.name << ": " << tiles.size() << " prisms, "
       << vertexLines.size() << " shared vertices\n";
    for (const auto &v : vertexLines) os << "v " << v << '\n';
    for (const auto &f : faces) os << "f " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

void writeHyperbolicSvg(std::ostream &os, const std::vector<BinaryTile> &tiles,
                        const std::vector<DiskCenter> &centers,
                        const HyperRenderOptions &opt) {
    double lox = 1e300, loy = 1e300, hix = -1e300, hiy = -1e300;
    for (const auto &t : tiles) {
        lox = std::min(lox, t.xStart().toDouble());
        hix = std::max(hix, t.xEnd().toDouble());
        loy = std::min(loy, t.yLow().toDouble());
        hiy = std::max(hiy, t.yHigh().toDouble());
    }
    if (tiles.empty()) lox = loy = 0, hix = hiy = 1;
    double pad = 0.05 * std::max(hix - lox, hiy - loy);
    double S = opt.scale;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << fmt12(S * (lox - pad)) << ' ' << fmt12(S * -(hiy + pad)) << ' '
       << fmt12(S * (hix - lox + 2 * pad)) << ' ' << fmt12(S * (hiy - loy + 2 * pad))
       << "\">\n";
    os << "<g transform=\"scale(" << fmt12(S) << ",-" << fmt12(S) << ")\">\n";
    for (const auto &t : tiles) {
        double x = t.xStart().toDouble(), y = t.yLow().toDouble();
        double w = t.width().toDouble();
        os << "<rect x=\"" << fmt12(x) << "\" y=\"" << fmt12(y) << "\" width=\"" << fmt12(w)
           << "\" height=\"" << fmt12(y) << "\" fill=\"none\" stroke=\"#333333\""
           << " stroke-width=\"" << fmt12(0.01 * w) << "\"/>\n";
        if (opt.bumps) {
            // decorative bump at the split point of the lower edge, marking
            // which child boundary continues downward
            os << "<circle cx=\"" << fmt12(x + w / 2) << "\" cy=\"" << fmt12(y)
               << "\" r=\"" << fmt12(w / 24) << "\" fill=\"#333333\"/>\n";
        }
    }
    for (const auto &c : centers) {
        // a hyperbolic circle of radius r at height y is the Euclidean circle
        // centered at (x, y*cosh r) with radius y*sinh r
        double x = ratToDouble(c.x), y = ratToDouble(c.y);
        os << "<circle cx=\"" << fmt12(x) << "\" cy=\"" << fmt12(y * std::cosh(opt.diskRadius))
           << "\" r=\"" << fmt12(y * std::sinh(opt.diskRadius))
           << "\" fill=\"#4e79a7\" fill-opacity=\"0.55\"/>\n";
    }
    os << "</g>\n</svg>\n";
}

nlohmann::ordered_json hyperbolicJson(const std::vector<BinaryTile> &tiles,
                                      const std::vector<DiskCenter> &centers) {
    json doc;
    json ta = json::array();
    for (const auto &t : tiles)
        ta.push_back({{"level", t.level},
                      {"x_start", ratString(t.xStart().toRational())},
                      {"x_end", ratString(t.xEnd().toRational())},
                      {"y_low", ratString(t.yLow().toRational())},
                      {"y_high", ratString(t.yHigh().toRational())}});
    doc["tiles"] = std::move(ta);
    json ca = json::array();
    for (const auto &c : centers)
        ca.push_back({{"x", ratString(c.x)},
                      {"y", ratString(c.y)},
                      {"tile_level", c.sourceTile.level},
                      {"tile_x_start", ratString(c.sourceTile.xStart().toRational())}});
    doc["centers"] = std::move(ca);
    return doc;
}

}  // namespace tiling
