#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foliage/disc.hpp"
#include "foliage/embed.hpp"

namespace foliage {

// Lexicographically least rotation; digit 0 is a negative vertex when k = 2.
struct Necklace {
    std::vector<int> digits;
    std::string str() const;
    VertexString vertex_string() const;
};

// density counts nonzero digits
std::vector<Necklace> enumerate_necklaces(int length, int k, int density);

struct HalfPlane {
    std::vector<int> partner;  // other end of the b-arc at each position, -1 if none
    std::vector<int> region;   // 0 is the outer region
    bool operator==(const HalfPlane& o) const { return partner == o.partner; }
};

std::vector<HalfPlane> enumerate_half_planes(const VertexString& V);
HalfPlane make_half_plane(const VertexString& V, std::vector<int> partner);

struct SaddleTransition {
    int from = 0;
    int to = 0;
    int saddle = 0;   // index into the catalog
    int reverse = 0;  // index of the symmetric edge in adjacency[to]
};

struct HalfPlaneGraph {
    VertexString vertices;
    std::vector<HalfPlane> nodes;
    std::vector<std::vector<SaddleTransition>> adjacency;
    std::vector<Saddle> catalog;  // level unused, aa sign 0
    bool scrambled = false;
    std::uint64_t seed = 0;

    std::size_t edge_count() const;
};

HalfPlaneGraph make_graph(const VertexString& V, std::vector<HalfPlane> halfPlanes, bool scrambled = false,
                          std::uint64_t seed = 0);

struct ThetaStep {
    int node = 0;
    int saddle = 0;
    bool operator==(const ThetaStep&) const = default;
    auto operator<=>(const ThetaStep&) const = default;
};

// steps[k].saddle leads from steps[k].node to steps[k+1].node
struct ThetaCycle {
    std::vector<ThetaStep> steps;
    bool operator==(const ThetaCycle&) const = default;
};

// stopAt = 0 enumerates everything
std::vector<ThetaCycle> enumerate_cycles(const HalfPlaneGraph& G, int targetLength, std::size_t stopAt = 0,
                                         PairRule rule = kDefaultPairRule);
// Cycles whose skeleton starts at a given non-loop edge; roots partition the output.
std::vector<ThetaCycle> enumerate_cycles_from_root(const HalfPlaneGraph& G, int targetLength, std::size_t root,
                                                   std::size_t stopAt, PairRule rule);
std::vector<SaddleTransition> non_loop_edges(const HalfPlaneGraph& G);

SaddleCode cycle_code(const HalfPlaneGraph& G, const ThetaCycle& c);
bool end_tile_free(const SaddleCode& c);

struct CycleOptions {
    int threads = 1;
    std::size_t stopAt = 0;
    bool scrambled = false;
    std::uint64_t seed = 0;
    PairRule rule = kDefaultPairRule;
};

struct CycleRecord {
    std::size_t string = 0;  // index into CycleReport::strings
    ThetaCycle cycle;
    SaddleCode code;
    bool endTileFree = false;
};

struct CycleReport {
    std::vector<VertexString> strings;
    std::vector<CycleRecord> records;
    std::size_t end_tile_free() const;
};

CycleReport compute_cycles(int P, int N, const CycleOptions& opt = {});

std::vector<SaddleCode> assign_aa_signs(const SaddleCode& c);

}  // namespace foliage
