// Brute-force references for the enumerators.
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "foliage/embed.hpp"
#include "foliage/errors.hpp"
#include "foliage/goodwords.hpp"
#include "foliage/hplane.hpp"

using namespace foliage;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int phi(int n) {
    int r = 0;
    for (int k = 1; k <= n; ++k) r += std::gcd(k, n) == 1;
    return r;
}

// Burnside over the cyclic group
long long necklaces(int l, int d) {
    long long s = 0;
    for (int g = 1; g <= l; ++g)
        if (l % g == 0 && d % g == 0) s += phi(g) * binom(l / g, d / g);
    return s / l;
}

std::string key(const BraidWord& w) { return w.str(); }

ThetaCycle least_rotation(ThetaCycle c) {
    auto best = c.steps;
    for (std::size_t r = 1; r < c.steps.size(); ++r) {
        std::rotate(c.steps.begin(), c.steps.begin() + 1, c.steps.end());
        best = std::min(best, c.steps);
    }
    return {best};
}

}  // namespace

TEST_CASE("necklaces against the counting formula") {
    for (int l = 1; l <= 16; ++l)
        for (int d = 0; d <= l; ++d) {
            CAPTURE(l);
            CAPTURE(d);
            CHECK(static_cast<long long>(enumerate_necklaces(l, 2, d).size()) == necklaces(l, d));
        }
}

TEST_CASE("positive good words against orbit search") {
    for (int P = 2; P <= 5; ++P) {
        std::vector<BandGenerator> gens;
        for (int i = 2; i <= P; ++i)
            for (int j = 1; j < i; ++j) gens.emplace_back(i, j);
        // every positive good word, then orbits by closure under the two moves
        std::vector<BraidWord> all;
        std::vector<int> idx(P - 1, 0);
        while (true) {
            std::vector<Letter> ls;
            for (int t : idx) ls.emplace_back(gens[t], 1);
            BraidWord w(P, ls);
            if (induced_permutation(w).is_full_cycle()) all.push_back(w);
            int k = 0;
            while (k < P - 1 && ++idx[k] == static_cast<int>(gens.size())) idx[k++] = 0;
            if (k == P - 1) break;
        }
        std::set<std::string> seen;
        int orbits = 0;
        for (auto& w : all) {
            if (seen.count(key(w))) continue;
            ++orbits;
            std::vector<BraidWord> todo{w};
            seen.insert(key(w));
            while (!todo.empty()) {
                auto u = todo.back();
                todo.pop_back();
                for (auto v : {delta_conjugate(u, 1), rotate_conjugate(u, 1)})
                    if (seen.insert(key(v)).second) todo.push_back(v);
            }
        }
        auto reps = enumerate_positive_good_words(P);
        CAPTURE(P);
        CHECK(static_cast<int>(reps.size()) == orbits);
        std::set<std::string> forms;
        for (auto& r : reps) {
            CHECK(is_good_word(r));
            forms.insert(key(canonical_form(r)));
        }
        CHECK(forms.size() == reps.size());
    }
}

TEST_CASE("half-planes against exhaustive assignment") {
    for (int l = 3; l <= 11; ++l)
        for (int d = 1; d < l; ++d)
            for (auto& n : enumerate_necklaces(l, 2, d)) {
                auto V = n.vertex_string();
                auto negs = V.negatives(), poss = V.positives();
                std::size_t count = 0;
                std::vector<int> choice(negs.size(), 0);
                while (true) {
                    bool ok = true;
                    for (std::size_t a = 0; a < negs.size() && ok; ++a) {
                        int v = negs[a], p = poss[choice[a]];
                        if (V.adjacent(v, p)) ok = false;
                        for (std::size_t b = 0; b < a && ok; ++b)
                            if (choice[a] == choice[b] || interlocks(v, p, negs[b], poss[choice[b]], l)) ok = false;
                    }
                    count += ok;
                    std::size_t k = 0;
                    while (k < choice.size() && ++choice[k] == static_cast<int>(poss.size())) choice[k++] = 0;
                    if (k == choice.size()) break;
                }
                CAPTURE(V.bits());
                CHECK(enumerate_half_planes(V).size() == count);
            }
}

TEST_CASE("cycle search against closed walks") {
    std::size_t graphs = 0;
    for (auto [P, N] : {std::pair{3, 1}, {4, 1}, {4, 2}, {5, 1}, {5, 2}, {6, 2}, {7, 3}}) {
        int m = P + N - 1;
        for (auto& n : enumerate_necklaces(P + N, 2, P)) {
            auto V = n.vertex_string();
            auto G = make_graph(V, enumerate_half_planes(V));
            if (G.nodes.size() > 10) continue;
            ++graphs;
            std::set<std::vector<ThetaStep>> brute;
            std::vector<ThetaStep> walk;
            std::vector<bool> used(G.catalog.size(), false);
            auto dfs = [&](auto&& self, int start, int node) -> void {
                if (static_cast<int>(walk.size()) == m) {
                    if (node != start) return;
                    auto code = cycle_code(G, {walk});
                    try {
                        check_structure(code, true);
                    } catch (const BadCode&) {
                        return;
                    }
                    if (!satisfies_pair_rule(code)) return;
                    brute.insert(least_rotation({walk}).steps);
                    return;
                }
                for (auto& e : G.adjacency[node]) {
                    if (used[e.saddle]) continue;
                    used[e.saddle] = true;
                    walk.push_back({node, e.saddle});
                    self(self, start, e.to);
                    walk.pop_back();
                    used[e.saddle] = false;
                }
            };
            for (int s = 0; s < static_cast<int>(G.nodes.size()); ++s) dfs(dfs, s, s);
            std::set<std::vector<ThetaStep>> fast;
            for (auto& c : enumerate_cycles(G, m)) fast.insert(least_rotation(c).steps);
            CAPTURE(V.bits());
            CHECK(fast == brute);
            for (auto& steps : brute)
                for (auto& d : assign_aa_signs(cycle_code(G, {steps}))) CHECK(is_admissible(d));
        }
    }
    MESSAGE("graphs checked: " << graphs);
    CHECK(graphs >= 8);
}
