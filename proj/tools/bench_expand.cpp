// Compares the serial reference kernels against the OpenMP ones and checks
// that they agree tile for tile.  Run with no arguments for the default mix.

#include <chrono>
#include <cstdio>
#include <string>

#include "tiling/catalog.hpp"

using namespace tiling;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class Iso>
void benchSystem(const SubstitutionSystem<Iso> &sys, int level, long long samples) {
    auto t0 = Clock::now();
    auto serial = expandSerial(sys, level);
    auto t1 = Clock::now();
    auto parallel = expand(sys, level);
    auto t2 = Clock::now();

    bool same = serial.size() == parallel.size();
    for (size_t i = 0; same && i < serial.size(); ++i)
        same = serial[i].address == parallel[i].address && serial[i].proto == parallel[i].proto;

    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("%-13s expand level %-2d  %9zu tiles  serial %7.3fs  parallel %7.3fs  "
                "speedup %5.2fx  %s\n",
                sys.name.c_str(), level, serial.size(), ts, tp, ts / tp,
                same ? "identical" : "MISMATCH");

    t0 = Clock::now();
    auto repS = verifyPartitionSerial(sys, 0, samples, 1e-9);
    t1 = Clock::now();
    auto repP = verifyPartition(sys, 0, samples, 1e-9);
    t2 = Clock::now();
    ts = seconds(t0, t1);
    tp = seconds(t1, t2);
    bool agree = repS.multiplicityViolations == repP.multiplicityViolations &&
                 repS.samplesUsed == repP.samplesUsed &&
                 repS.boundaryRejected == repP.boundaryRejected;
    std::printf("%-13s verify %-9lld samples        serial %7.3fs  parallel %7.3fs  "
                "speedup %5.2fx  %s\n",
                sys.name.c_str(), samples, ts, tp, ts / tp, agree ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char **argv) {
    long long samples = argc > 1 ? std::atoll(argv[1]) : 2000000;
    benchSystem(makeThueMorse(), 9, samples);
    benchSystem(makePinwheel(), 8, samples);
    benchSystem(makeKiteDart(), 14, samples);
    benchSystem(makeQuaquaversal(), 5, samples);
    return 0;
}
