#include "tiling/analysis.hpp"

#include <cmath>
#include <limits>
#include <variant>

namespace tiling {

std::vector<SpectrumRow> orientationSpectrum(const AnySystem &sys, int maxLevel) {
    return std::visit([&](const auto &s) { return orientationSpectrum(s, maxLevel); }, sys);
}

std::vector<GroupBallRow> groupBall(int p, int q, int maxWordLength) {
    RotationQuat g = axisRotation(p, 0);
    RotationQuat h = axisRotation(q, 2);
    std::vector<RotationQuat> gens = {g, g.inverse(), h, h.inverse()};

    std::set<RotationQuat> ball{RotationQuat::identity()};
    std::vector<RotationQuat> frontier{RotationQuat::identity()};
    std::vector<GroupBallRow> rows;
    for (int len = 1; len <= maxWordLength; ++len) {
        std::vector<RotationQuat> next;
        for (const auto &elem : frontier)
            for (const auto &gen : gens) {
                RotationQuat cand = quatMul(elem, gen);
                if (ball.insert(cand).second) next.push_back(cand);
            }
        frontier = std::move(next);
        rows.push_back({len, (long long)ball.size(), frontier.empty()});
    }
    return rows;
}

GrowthReport growthReport(const std::vector<SpectrumRow> &rows) {
    if (rows.size() < 3)
        throw std::invalid_argument("growthReport: need at least three rows");

    const size_t n = rows.size();
    std::vector<double> x(n), y(n);
    bool constant = true;
    for (size_t i = 0; i < n; ++i) {
        x[i] = std::log(rows[i].diameter);
        y[i] = (double)rows[i].orientationCount;
        if (y[i] != y[0]) constant = false;
    }

    GrowthReport rep;
    if (constant) {
        rep.kind = GrowthKind::Degenerate;
        rep.a = y[0];
        rep.b = 0;
        return rep;
    }

    auto fitLine = [&](const std::vector<double> &ys, double &a, double &b) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < n; ++i) {
            sx += x[i];
            sy += ys[i];
            sxx += x[i] * x[i];
            sxy += x[i] * ys[i];
        }
        double det = n * sxx - sx * sx;
        b = (n * sxy - sx * sy) / det;
        a = (sy - b * sx) / n;
    };

    // logarithmic model: y = a + b * log(diameter)
    double la, lb;
    fitLine(y, la, lb);
    // power model: log y = a + b * log(diameter)
    std::vector<double> ly(n);
    for (size_t i = 0; i < n; ++i) ly[i] = std::log(y[i]);
    double pa, pb;
    fitLine(ly, pa, pb);

    // Compare both in log-count space; a log-model prediction that is not
    // positive cannot match positive counts, so it forfeits.
    double logRes = 0, powRes = 0;
    for (size_t i = 0; i < n; ++i) {
        double pred = la + lb * x[i];
        if (pred <= 0) {
            logRes = std::numeric_limits<double>::infinity();
        } else if (logRes != std::numeric_limits<double>::infinity()) {
            double e = std::log(pred) - ly[i];
            logRes += e * e;
        }
        double ep = (pa + pb * x[i]) - ly[i];
        powRes += ep * ep;
    }

    rep.logResidual = logRes;
    rep.powerResidual = powRes;
    if (logRes <= powRes) {
        rep.kind = GrowthKind::Logarithmic;
        rep.a = la;
        rep.b = lb;
    } else {
        rep.kind = GrowthKind::Power;
        rep.a = pa;
        rep.b = pb;
    }
    return rep;
}

}  // namespace tiling
