#include "foliage/boundary.hpp"

#include <algorithm>
#include <set>

#include "foliage/errors.hpp"

namespace foliage {

BoundaryWord boundary_braid(const BraidWord& ew, int P, int N) {
    if (ew.strands() != P || !extended_word_conditions(ew, N))
        throw NotExtendedWord(ew.str() + " is not an extended word for P=" + std::to_string(P) + ", N=" + std::to_string(N));
    auto rho = induced_permutation(ew);
    std::set<int> L;
    if (N > 0)
        for (int x : rho.fixed_points()) L.insert(x);
    const std::set<int> start = L;
    BoundaryWord bw;
    bw.n = P - N;
    auto below = [&](int x) { return static_cast<int>(std::distance(L.begin(), L.lower_bound(x))); };
    for (auto& l : ew.letters()) {
        int h = l.gen.i, j = l.gen.j;
        int hp = below(h), jp = below(j);
        bool hin = L.count(h), jin = L.count(j);
        if (!hin && !jin) {
            bw.tokens.push_back(Letter(h - hp, j - jp, l.sign));
        } else if (jin && !hin) {
            if (h > j + 1) bw.tokens.push_back(DeltaBlock{h - hp, j - jp, 1});
            L.erase(j);
            L.insert(h);
        } else if (hin && !jin) {
            if (h > j + 1) bw.tokens.push_back(DeltaBlock{h - 1 - hp, j - jp, -1});
            L.erase(h);
            L.insert(j);
        }
    }
    if (L != start) throw NotExtendedWord("trivial strands do not return to their start");
    return bw;
}

BoundaryWord boundary_braid(const SaddleCode& c) { return boundary_braid(extended_word(c), c.P(), c.N()); }

BraidWord reduced_boundary(const BoundaryWord& bw) { return free_reduce(delta_expand(bw)); }

}  // namespace foliage
