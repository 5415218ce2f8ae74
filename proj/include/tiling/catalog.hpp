#pragma once
#include "tiling/substitution.hpp"

namespace tiling {

// The four Euclidean substitution systems from the catalog.
System2 makeThueMorse();
System2 makePinwheel();
System2 makeKiteDart();
System3 makeQuaquaversal();

// Closed-form letter oracle for the 2D Thue-Morse block substitution with
// root letter 'a': cell (i, j) is 'a' iff popcount(i) + popcount(j) is even.
char morseLabelAt(unsigned long long i, unsigned long long j);

// name in {"thue-morse", "pinwheel", "kite-dart", "quaquaversal"}
AnySystem systemByName(const std::string &name);
std::vector<std::string> systemNames();

}  // namespace tiling
