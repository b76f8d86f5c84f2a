#pragma once

#include <string>
#include <vector>

#include "foliage/braid.hpp"
#include "foliage/disc.hpp"

namespace foliage {

struct BArc {
    int positive = -1;
    int negative = -1;
    bool operator==(const BArc&) const = default;
};

struct GBArc {
    int a = -1;
    int b = -1;
    int level = 0;
    bool operator==(const GBArc&) const = default;
};

// Row r covers the level interval (r+1, r+2), the last one (m, 1).
struct ArcRow {
    int lo = 0;
    int hi = 0;
    std::vector<BArc> b;  // one per negative vertex, in axis order
    std::vector<GBArc> gb;
};

struct ArcTable {
    std::vector<ArcRow> rows;
};

// Chords {a,b} and {c,d} on a circle of L points separate each other.
bool interlocks(int a, int b, int c, int d, int L);

ArcTable build_arc_table(const SaddleCode& c);
std::string arc_row_str(const ArcRow& row, const VertexString& V);

bool is_essential(const SaddleCode& c);

struct EmbedViolation {
    int condition = 0;  // 1, 2 or 3
    int row = -1;       // 0-based row index, -1 if not row specific
    std::string witness;
};

struct EmbedReport {
    std::vector<EmbedViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

EmbedReport check_embedding(const SaddleCode& c, bool collectAll = false);
bool is_embeddable(const SaddleCode& c);

// Which saddle pairs may share the same two positive vertices.
enum class PairRule {
    OppositeAb,      // only two ab-saddles of opposite sign
    NoDoubleBb,      // two non-aa saddles of opposite sign, not both bb
    SharedNegative,  // as NoDoubleBb, and an ab+bb pair must share its negative vertex
};

std::string pair_rule_name(PairRule r);
PairRule parse_pair_rule(const std::string& s);
constexpr PairRule kDefaultPairRule = PairRule::NoDoubleBb;

bool pair_allowed(const Saddle& s, const Saddle& t, const VertexString& V, PairRule rule);
bool satisfies_pair_rule(const SaddleCode& c, PairRule rule = kDefaultPairRule);

// structure + essential + embeddable + pair rule
bool is_admissible(const SaddleCode& c, PairRule rule = kDefaultPairRule);

// Every code with extended word `ew` and N negative vertices that passes the structural checks;
// `embeddableOnly` keeps those that also pass the three-condition test.
std::vector<SaddleCode> realizations(const BraidWord& ew, int N, bool embeddableOnly = true);

}  // namespace foliage
