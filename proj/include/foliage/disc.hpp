#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "foliage/braid.hpp"

namespace foliage {

// Positive(k) has j == 0; Negative(k, j) is the j-th negative after positive k.
struct VertexName {
    int k = 0;
    int j = 0;

    bool positive() const { return j == 0; }
    std::string str() const;
    static VertexName parse(std::string_view s);
    auto operator<=>(const VertexName&) const = default;
};

class VertexString {
public:
    VertexString() = default;
    explicit VertexString(std::vector<bool> positive);

    static VertexString from_bits(std::string_view bits);  // '1' positive, '0' negative
    static VertexString from_names(std::vector<VertexName> names);

    int size() const { return static_cast<int>(pos_.size()); }
    int P() const { return P_; }
    int N() const { return size() - P_; }

    bool positive(int p) const { return pos_[p]; }
    const VertexName& name(int p) const { return names_[p]; }
    int position(const VertexName& v) const;
    int label(int p) const { return label_[p]; }
    int label_position(int k) const { return labelPos_[k - 1]; }

    std::vector<int> positives() const;
    std::vector<int> negatives() const;
    const std::vector<bool>& signs() const { return pos_; }
    std::string bits() const;

    bool adjacent(int a, int b) const;
    // strictly inside the cyclic open interval (a, b)
    bool between(int a, int x, int b) const;

    VertexString rotated(int r) const;  // new position t holds old position (t + r) mod size
    VertexString with_inserted(int at) const;  // new negative at index `at`
    VertexString with_removed(int at) const;

    bool operator==(const VertexString& o) const { return pos_ == o.pos_; }

private:
    std::vector<bool> pos_;
    std::vector<VertexName> names_;
    std::vector<int> label_;
    std::vector<int> labelPos_;
    int P_ = 0;
};

enum class SaddleKind { aa, ab, bb };

std::string kind_name(SaddleKind k);

// vertices are axis positions, sorted. sign 0 marks an aa-saddle with free sign.
struct Saddle {
    std::vector<int> vertices;
    int sign = 1;
    int level = 0;

    bool operator==(const Saddle&) const = default;
};

SaddleKind saddle_kind(const Saddle& s, const VertexString& V);
std::pair<int, int> positive_pair(const Saddle& s, const VertexString& V);
std::vector<int> negative_vertices(const Saddle& s, const VertexString& V);

// A negative vertex whose b-arc moves from positive `from` to positive `to` across the saddle.
struct Move {
    int v;
    int from;
    int to;
};

// Empty if the saddle's sign is inconsistent with its bb swap.
std::vector<Move> saddle_moves(const Saddle& s, const VertexString& V, bool* consistent = nullptr);

struct SaddleCode {
    VertexString vertices;
    std::vector<Saddle> saddles;  // saddles[k].level == k + 1

    int P() const { return vertices.P(); }
    int N() const { return vertices.N(); }
    int levels() const { return static_cast<int>(saddles.size()); }
    bool operator==(const SaddleCode&) const = default;
};

// Throws BadCode describing the first structural defect.
void check_structure(const SaddleCode& c, bool allowFreeSigns = false);
bool extended_word_conditions(const BraidWord& ew, int N);

BraidWord extended_word(const SaddleCode& c);

// Partner of every negative vertex in each level interval. Row r is the interval after level r+1.
struct PartnerRows {
    std::vector<std::vector<int>> partner;  // [row][position] = positive position or -1
    int failedCondition = 0;
    std::string why;
    bool ok() const { return failedCondition == 0; }
};

PartnerRows partner_rows(const SaddleCode& c);

struct BoundaryPoint {
    enum class Kind { Q, R };
    Kind kind = Kind::Q;
    int i = 0;
    int v = -1;
    int j = 0;
    int sign = 1;
    int level = 0;

    bool operator==(const BoundaryPoint&) const = default;
};

struct BoundaryCode {
    VertexString vertices;
    std::vector<BoundaryPoint> boundary;  // counterclockwise along the boundary circle
    std::vector<Saddle> bb;

    int levels() const { return vertices.P() + vertices.N() - 1; }
    bool operator==(const BoundaryCode&) const = default;
};

std::string point_str(const BoundaryPoint& p, const VertexString& V);
std::string boundary_str(const BoundaryCode& bc);
bool same_cyclic_boundary(const BoundaryCode& a, const BoundaryCode& b);

BoundaryCode boundary_code(const SaddleCode& c);
SaddleCode saddle_code(const BoundaryCode& bc);
BoundaryCode generate_disc_boundary(int n, const BraidWord& w);
SaddleCode positive_disc(const BraidWord& w);

struct VertexInfo {
    int valence = 0;
    std::string type;   // 'a' / 'b' per sector following each incident saddle
    std::string signs;  // '+' / '-' per incident saddle, in level order
    bool endTile = false;
};

std::vector<VertexInfo> classify_vertices(const SaddleCode& c);
bool has_end_tile(const SaddleCode& c);
// valence 2, one sector of each given type, saddles of opposite sign
bool has_exchange_vertex(const std::vector<VertexInfo>& info, char t1, char t2);

SaddleCode remove_end_tile(const SaddleCode& c, int position);
SaddleCode invert_code(const SaddleCode& c);
BoundaryCode rewrite_code_after_relation(const BoundaryCode& bc, std::size_t pos, Relation r);

// Same key iff the codes differ by a rotation of the axis and a cyclic shift of levels.
std::vector<int> disc_key(const SaddleCode& c);
SaddleCode canonical_code(const SaddleCode& c);

// Bracket notation: [[4.1,6,7],1],[9,10],-[3.1,5,8] ... Unsigned aa lists take `aaSign`.
SaddleCode parse_bracket_code(std::string_view text, int P = 0, int aaSign = 1);
std::string bracket_str(const SaddleCode& c);
std::string saddle_str(const Saddle& s, const VertexString& V);

}  // namespace foliage
