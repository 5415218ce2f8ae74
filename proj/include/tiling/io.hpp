#pragma once
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "tiling/analysis.hpp"
#include "tiling/hyperbolic.hpp"
#include "tiling/substitution.hpp"

// Byte-stable writers: every floating-point value that reaches an output
// stream goes through fmt12 (fixed scientific, 12 significant digits), exact
// quantities are emitted as "num/den" strings, and iteration orders are
// fully determined by the inputs.  Identical requests produce identical
// bytes regardless of worker count.

namespace tiling {

std::string fmt12(double v);

// header: level,diameter,tile_count,orientation_count
void writeStatsCsv(std::ostream &os, const std::vector<SpectrumRow> &rows);

// header: word_length,distinct_elements,closed
void writeGroupCsv(std::ostream &os, const std::vector<GroupBallRow> &rows);

nlohmann::ordered_json tilesJson(const System2 &sys, int level,
                                 const std::vector<TileInstance<Isometry2>> &tiles);
nlohmann::ordered_json tilesJson(const System3 &sys, int level,
                                 const std::vector<TileInstance<Isometry3>> &tiles);

void writeSvg(std::ostream &os, const System2 &sys,
              const std::vector<TileInstance<Isometry2>> &tiles);

// shared vertex list, triangulated faces
void writeObj(std::ostream &os, const System3 &sys,
              const std::vector<TileInstance<Isometry3>> &tiles);

struct HyperRenderOptions {
    double diskRadius = 0.2;  // hyperbolic radius, cosmetic only
    bool bumps = false;       // decorative boundary bumps marking the tree structure
    double scale = 120;       // pixels per half-plane unit
};

void writeHyperbolicSvg(std::ostream &os, const std::vector<BinaryTile> &tiles,
                        const std::vector<DiskCenter> &centers,
                        const HyperRenderOptions &opt);

nlohmann::ordered_json hyperbolicJson(const std::vector<BinaryTile> &tiles,
                                      const std::vector<DiskCenter> &centers);

}  // namespace tiling
