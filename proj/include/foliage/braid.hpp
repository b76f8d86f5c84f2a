#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace foliage {

// Band generator (i,j), always stored with i > j >= 1.
struct BandGenerator {
    int i = 2;
    int j = 1;

    BandGenerator() = default;
    BandGenerator(int a, int b);

    bool shares_index(const BandGenerator& o) const;
    auto operator<=>(const BandGenerator&) const = default;
};

struct Letter {
    BandGenerator gen;
    int sign = 1;

    Letter() = default;
    Letter(int a, int b, int s = 1);
    Letter(BandGenerator g, int s) : gen(g), sign(s) {}

    Letter inverse() const { return {gen, -sign}; }
    std::string str() const;
    bool operator==(const Letter&) const = default;
};

// (i, j, sign) with +1 before -1
bool letter_less(const Letter& a, const Letter& b);

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);
    explicit Permutation(std::vector<int> images);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_[k - 1]; }
    const std::vector<int>& images() const { return img_; }

    void swap_values(int a, int b);
    Permutation then(const Permutation& q) const;
    Permutation inverse() const;
    Permutation conjugate_shift(int k) const;

    std::vector<std::vector<int>> cycles() const;
    std::vector<int> fixed_points() const;
    std::vector<int> cycle_type() const;
    bool is_full_cycle() const;
    bool is_identity() const;
    std::string str() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

class BraidWord {
public:
    BraidWord() = default;
    explicit BraidWord(int n, std::vector<Letter> letters = {});

    int strands() const { return n_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t k) const { return letters_[k]; }

    int exponent_sum() const;
    std::string str() const;

    bool operator==(const BraidWord&) const = default;

private:
    int n_ = 0;
    std::vector<Letter> letters_;
};

bool word_less(const BraidWord& a, const BraidWord& b);

// n = 0 infers the strand count from the largest index.
BraidWord parse_word(std::string_view text, int n = 0);

Permutation induced_permutation(const BraidWord& w);
bool is_good_word(const BraidWord& w);

BraidWord delta_conjugate(const BraidWord& w, int k);
BraidWord rotate_conjugate(const BraidWord& w, int k);
BraidWord canonical_form(const BraidWord& w);
BraidWord invert_word(const BraidWord& w);
BraidWord free_reduce(const BraidWord& w);

enum class Relation { Commute, TripleForward, TripleBackward, Mixed };

std::string relation_name(Relation r);
Relation parse_relation(std::string_view s);

bool relation_applies(const BraidWord& w, std::size_t pos, Relation r);
// pos is 0-based: rewrites letters pos and pos+1
BraidWord apply_band_relation(const BraidWord& w, std::size_t pos, Relation r);

struct DeltaBlock {
    int p = 2;
    int q = 1;
    int sign = 1;
    std::string str() const;
    bool operator==(const DeltaBlock&) const = default;
};

using BoundaryToken = std::variant<Letter, DeltaBlock>;

struct BoundaryWord {
    int n = 0;
    std::vector<BoundaryToken> tokens;

    std::string str() const;
    bool operator==(const BoundaryWord&) const = default;
};

std::string token_str(const BoundaryToken& t);
BoundaryWord parse_boundary_word(std::string_view text, int n = 0);

// (p,p-1)(p-1,p-2)...(q+1,q), inverted blocks reversed with flipped signs
std::vector<Letter> delta_letters(int p, int q, int sign);
BraidWord delta_expand(const BoundaryWord& bw);

}  // namespace foliage
