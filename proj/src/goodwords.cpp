#include "foliage/goodwords.hpp"

#include <algorithm>
#include <numeric>

#include "foliage/errors.hpp"

namespace foliage {

namespace {

struct Forest {
    std::vector<int> parent;
    explicit Forest(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
};

void extend(int P, std::vector<Letter>& word, Forest& f, std::vector<BraidWord>& out) {
    if (static_cast<int>(word.size()) == P - 1) {
        BraidWord w(P, word);
        if (canonical_form(w) == w) out.push_back(std::move(w));
        return;
    }
    for (int i = 2; i <= P; ++i)
        for (int j = 1; j < i; ++j) {
            int ri = f.find(i), rj = f.find(j);
            if (ri == rj) continue;
            f.parent[ri] = rj;
            word.emplace_back(i, j, 1);
            extend(P, word, f, out);
            word.pop_back();
            f.parent[ri] = ri;
        }
}

}  // namespace

std::vector<BraidWord> enumerate_positive_good_words(int P) {
    if (P < 2) throw NotGoodWord("P must be at least 2");
    std::vector<BraidWord> out;
    std::vector<Letter> word;
    Forest f(P);
    extend(P, word, f, out);
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

std::vector<BraidWord> enumerate_good_words(int P) {
    std::vector<BraidWord> out;
    int len = P - 1;
    int maxNeg = (P - 1) / 2;
    for (auto& w : enumerate_positive_good_words(P)) {
        for (int k = 0; k <= maxNeg; ++k) {
            std::vector<bool> pick(len, false);
            std::fill(pick.begin(), pick.begin() + k, true);
            do {
                auto ls = w.letters();
                for (int t = 0; t < len; ++t)
                    if (pick[t]) ls[t].sign = -1;
                out.emplace_back(P, std::move(ls));
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
    }
    return out;
}

}  // namespace foliage
