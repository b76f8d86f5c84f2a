#pragma once

#include <string>
#include <vector>

#include "foliage/braid.hpp"
#include "foliage/disc.hpp"
#include "foliage/embed.hpp"

namespace foliage {

// Open interval (lo, hi) on a circle 1..n; lo == hi is the whole circle.
struct CyclicInterval {
    int lo = 0;
    int hi = 0;
    std::string str() const { return std::to_string(lo) + "<x<" + std::to_string(hi); }
    bool operator==(const CyclicInterval&) const = default;
};

// Members k stand for the half-integer points k + 1/2.
std::vector<CyclicInterval> to_intervals(std::vector<int> members, int n);

struct InsertionArc {
    std::size_t start = 0;  // index of the first point in the boundary
    std::size_t length = 0;
    std::vector<BoundaryPoint> points;
    int initial = -1;  // positions of i(alpha), f(alpha)
    int final = -1;
    std::vector<int> vSlots;  // slot k lies between positive k and k+1
    std::vector<int> xGaps;   // gap g lies between old levels g and g+1
    std::vector<int> positiveSlots;
    std::vector<int> negativeSlots;

    std::vector<CyclicInterval> v_ranges(int P) const { return to_intervals(vSlots, P); }
    std::vector<CyclicInterval> x_ranges(int m) const { return to_intervals(xGaps, m); }
};

std::vector<InsertionArc> get_insertion_arcs(const BoundaryCode& bc);
// fills xGaps and the sign split; drops arcs with no admissible level
std::vector<InsertionArc> get_saddles(const BoundaryCode& bc, std::vector<InsertionArc> arcs);

bool permutation_pretest(const BraidWord& ew, int i, int f, int level, int sign);

// Axis indices at which a new negative vertex lands in slot k.
std::vector<int> slot_positions(const VertexString& V, int k);

// `position` is the index of the new vertex in the new string, `level` its new level (1..m+1).
BoundaryCode apply_insertion(const BoundaryCode& bc, const InsertionArc& arc, int position, int level, int sign);

struct InsertionResult {
    BoundaryCode code;
    std::size_t arc = 0;
    int position = 0;
    int level = 0;
    int sign = 1;
};

std::vector<InsertionResult> insert_once(const BoundaryCode& bc, PairRule rule = kDefaultPairRule);

// Codes produced by 1..depth insertions (depth < 0 exhausts); depth 0 returns the input.
std::vector<BoundaryCode> insert_vertices(const BoundaryCode& bc, int depth, PairRule rule = kDefaultPairRule,
                                          int threads = 1);

// All good words and their inverses, each carried through exactly N insertions; canonical codes.
std::vector<SaddleCode> discs_by_insertion(int P, int N, PairRule rule = kDefaultPairRule, int threads = 1);

}  // namespace foliage
