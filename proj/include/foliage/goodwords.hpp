#pragma once

#include <vector>

#include "foliage/braid.hpp"

namespace foliage {

// One canonical representative per easy-conjugation orbit, in increasing order.
std::vector<BraidWord> enumerate_positive_good_words(int P);

// Every representative with 0..floor((P-1)/2) letters negated.
std::vector<BraidWord> enumerate_good_words(int P);

}  // namespace foliage
