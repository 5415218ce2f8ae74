#include "tiling/catalog.hpp"

#include <cmath>

namespace tiling {

namespace {

Isometry2 iso2(OrientationKey2 k, double tx, double ty) { return {k, {tx, ty}}; }

}  // namespace

System2 makeThueMorse() {
    System2 sys;
    sys.name = "thue-morse";
    sys.dimension = 2;
    sys.lambda = 2.0;
    sys.lambdaNote = "2";
    sys.orientationKind = OrientationKind::LetterOnly;
    Shape square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 0};
    sys.prototiles = {makePrototile(0, "a", square, 2), makePrototile(1, "b", square, 2)};
    // doubling an 'a' gives the 2x2 block  b a   (letter flips when exactly
    //                                      a b   one coordinate bit is set)
    auto id = OrientationKey2::identity();
    sys.rules = {
        {0, {{0, iso2(id, 0, 0)}, {1, iso2(id, 1, 0)}, {1, iso2(id, 0, 1)}, {0, iso2(id, 1, 1)}}},
        {1, {{1, iso2(id, 0, 0)}, {0, iso2(id, 1, 0)}, {0, iso2(id, 0, 1)}, {1, iso2(id, 1, 1)}}},
    };
    return sys;
}

char morseLabelAt(unsigned long long i, unsigned long long j) {
    return ((__builtin_popcountll(i) + __builtin_popcountll(j)) % 2 == 0) ? 'a' : 'b';
}

System2 makePinwheel() {
    System2 sys;
    sys.name = "pinwheel";
    sys.dimension = 2;
    sys.lambda = std::sqrt(5.0);
    sys.lambdaNote = "sqrt(5)";
    sys.orientationKind = OrientationKind::Key2;
    Shape tri{{{0, 0}, {2, 0}, {0, 1}}, 0};
    sys.prototiles = {makePrototile(0, "T", tri, 2)};
    // The five placements tiling the sqrt5-scaled triangle.  Angles are
    // -alpha plus quarter turns (alpha = arctan(1/2)); two children are
    // direct copies, three are reflected, which is what makes the alpha
    // content of composed orientations spread level by level.
    const double s5 = std::sqrt(5.0);
    sys.rules = {{0,
                  {
                      {0, iso2({-1, 0, false}, 1 / s5, 2 / s5)},
                      {0, iso2({-1, 0, true}, 1 / s5, 2 / s5)},
                      {0, iso2({-1, 0, true}, 6 / s5, 2 / s5)},
                      {0, iso2({-1, 2, false}, 6 / s5, 2 / s5)},
                      {0, iso2({-1, 3, true}, 2 / s5, 4 / s5)},
                  }}};
    return sys;
}

System2 makeKiteDart() {
    // Robinson half-tiles: the half-kite K is the acute isoceles triangle
    // (apex pi/5, base 1, legs phi), the half-dart D the obtuse one
    // (apex 3*pi/5, base phi, legs 1).  The inflation splits phi*K into
    // K + phi*D and phi*D into K + D, so K -> 2K + D and D -> K + D.
    // All rotations are multiples of pi/5: orientation keys use tenth
    // turns (turnModulus 10) and never touch the alpha slot.
    System2 sys;
    sys.name = "kite-dart";
    sys.dimension = 2;
    const double phi = (1 + std::sqrt(5.0)) / 2;
    sys.lambda = phi;
    sys.lambdaNote = "golden ratio (1+sqrt(5))/2";
    sys.orientationKind = OrientationKind::Key2;
    const double hK = std::sqrt(phi * phi - 0.25);
    const double hD = std::sqrt(1 - phi * phi / 4);
    Shape kite{{{0, 0}, {1, 0}, {0.5, hK}}, 0};
    Shape dart{{{0, 0}, {phi, 0}, {phi / 2, hD}}, 0};
    sys.prototiles = {makePrototile(0, "half-kite", kite, 2),
                      makePrototile(1, "half-dart", dart, 2)};

    // cut points inside the phi-scaled half-kite (apex P, base corners Q, R)
    const double Px = phi / 2, Py = phi * hK;
    const double Rx = phi;
    const double Xx = Px - Px / phi, Xy = Py - Py / phi;              // |PX| = phi
    const double Yx = Px + (Rx - Px) / (phi * phi), Yy = Py - Py / (phi * phi);  // |PY| = 1

    auto key10 = [](int tenths, bool refl) { return OrientationKey2(0, tenths, refl, 10); };
    sys.rules = {
        {0,
         {
             {0, iso2(key10(7, false), Xx, Xy)},
             {1, iso2(key10(7, false), Px, Py)},
             {0, iso2(key10(6, false), Yx, Yy)},
         }},
        {1,
         {
             {1, iso2(key10(1, true), 0, 0)},
             {0, iso2(key10(2, true), 1, 0)},
         }},
    };
    return sys;
}

System3 makeQuaquaversal() {
    System3 sys;
    sys.name = "quaquaversal";
    sys.dimension = 3;
    sys.lambda = 2.0;
    sys.lambdaNote = "2";
    sys.orientationKind = OrientationKind::Quat3;
    const double s3 = std::sqrt(3.0);
    Shape prism{{{0, 0}, {1, 0}, {0, s3}}, s3};
    sys.prototiles = {makePrototile(0, "prism", prism, 3)};

    const BigRational half(1, 2);
    auto qf = [](long v) { return QuadFieldElement::ofInt(v); };
    QuadFieldElement zero = qf(0);
    QuadFieldElement s22 = QuadFieldElement::sqrt2().scaled(half);  // sqrt2/2
    QuadFieldElement s32 = QuadFieldElement::sqrt3().scaled(half);  // sqrt3/2
    RotationQuat ident = RotationQuat::identity();
    RotationQuat xNeg90(s22, -s22, zero, zero);          // quarter turn about x, downward
    RotationQuat diagFlip(zero, zero, s22, s22);         // half turn about (0,1,1)/sqrt2
    RotationQuat xHalf(zero, qf(1), zero, zero);         // half turn about x
    RotationQuat zThird(QuadFieldElement::ofRational(half), zero, zero, s32);  // 2*pi/3 about z
    RotationQuat tiltHalf(zero, -s32, QuadFieldElement::ofRational(half), zero);
    // ^ half turn about the horizontal axis at azimuth 150 degrees

    auto iso3 = [](RotationQuat r, double x, double y, double z) {
        return Isometry3{std::move(r), {x, y, z}};
    };
    // Doubled prism (legs 2 and 2*sqrt3, height 2*sqrt3) as eight unit
    // prisms: four upright in the bottom half (two corner columns and two
    // interlocking side-lying pieces), and a four-piece fan in the top half
    // whose rotations inject the 2*pi/3 generator.
    sys.rules = {{0,
                  {
                      {0, iso3(ident, 1, 0, 0)},
                      {0, iso3(ident, 0, s3, 0)},
                      {0, iso3(xNeg90, 0, 0, s3)},
                      {0, iso3(diagFlip, 1, 0, 0)},
                      {0, iso3(xHalf, 0, s3, 2 * s3)},
                      {0, iso3(ident, 0, s3, s3)},
                      {0, iso3(zThird, 1.5, s3 / 2, s3)},
                      {0, iso3(tiltHalf, 1.5, s3 / 2, 2 * s3)},
                  }}};
    return sys;
}

AnySystem systemByName(const std::string &name) {
    if (name == "thue-morse") return makeThueMorse();
    if (name == "pinwheel") return makePinwheel();
    if (name == "kite-dart") return makeKiteDart();
    if (name == "quaquaversal") return makeQuaquaversal();
    throw std::invalid_argument("unknown system: " + name);
}

std::vector<std::string> systemNames() {
    return {"thue-morse", "pinwheel", "kite-dart", "quaquaversal"};
}

}  // namespace tiling
