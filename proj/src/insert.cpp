#include "foliage/insert.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "foliage/errors.hpp"
#include "foliage/goodwords.hpp"
#include "foliage/parallel.hpp"

namespace foliage {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// members of 1..n from a to b inclusive, walking up cyclically
std::vector<int> cyclic_range(int a, int b, int n) {
    std::vector<int> out;
    int len = mod(b - a, n) + 1;
    for (int t = 0; t < len; ++t) out.push_back(mod(a - 1 + t, n) + 1);
    return out;
}

std::vector<int> intersect(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// gaps a, a+1, ..., a+count-1 in 1..m
std::vector<int> gaps(int a, int count, int m) {
    std::vector<int> out;
    for (int t = 0; t < count; ++t) out.push_back(mod(a - 1 + t, m) + 1);
    return out;
}

int advance(int a, int b, int m) {
    int d = mod(b - a, m);
    return d ? d : m;
}

// slots v may occupy for the point to stay essential after insertion
std::vector<int> point_slots(const BoundaryPoint& pt, const VertexString& V) {
    int P = V.P();
    int li = V.label(pt.i), lj = V.label(pt.j);
    int lo = pt.sign > 0 ? li : lj, hi = pt.sign > 0 ? lj : li;
    if (mod(hi - lo, P) <= 2) return {};
    auto out = cyclic_range(lo + 1, hi - 2, P);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<CyclicInterval> to_intervals(std::vector<int> members, int n) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) return {};
    if (static_cast<int>(members.size()) == n) return {{members[0], members[0]}};
    std::vector<bool> in(n + 1, false);
    for (int k : members) in[k] = true;
    auto prev = [&](int k) { return k == 1 ? n : k - 1; };
    auto next = [&](int k) { return k == n ? 1 : k + 1; };
    std::vector<CyclicInterval> out;
    for (int k : members) {
        if (in[prev(k)]) continue;
        int e = k;
        while (in[next(e)]) e = next(e);
        out.push_back({k, next(e)});
    }
    return out;
}

std::vector<InsertionArc> get_insertion_arcs(const BoundaryCode& bc) {
    const auto& V = bc.vertices;
    const auto& B = bc.boundary;
    int m = bc.levels();
    std::size_t nb = B.size();
    std::vector<InsertionArc> out;
    for (std::size_t a = 0; a < nb; ++a) {
        std::vector<int> slots;
        std::set<int> levels;
        int span = 0;
        for (std::size_t len = 1; len < nb; ++len) {
            const auto& pt = B[(a + len - 1) % nb];
            if (!levels.insert(pt.level).second) break;
            if (len > 1) span += advance(B[(a + len - 2) % nb].level, pt.level, m);
            if (span >= m) break;
            auto ps = point_slots(pt, V);
            slots = len == 1 ? ps : intersect(slots, ps);
            if (slots.empty()) break;
            if (B[a].i == pt.j) continue;
            InsertionArc arc;
            arc.start = a;
            arc.length = len;
            for (std::size_t t = 0; t < len; ++t) arc.points.push_back(B[(a + t) % nb]);
            arc.initial = B[a].i;
            arc.final = pt.j;
            arc.vSlots = slots;
            out.push_back(std::move(arc));
        }
    }
    return out;
}

std::vector<InsertionArc> get_saddles(const BoundaryCode& bc, std::vector<InsertionArc> arcs) {
    const auto& V = bc.vertices;
    const auto& B = bc.boundary;
    int m = bc.levels(), P = V.P();
    std::size_t nb = B.size();
    std::vector<InsertionArc> out;
    for (auto& arc : arcs) {
        const auto& first = arc.points.front();
        const auto& last = arc.points.back();
        int before = B[(arc.start + nb - 1) % nb].level;
        int after = B[(arc.start + arc.length) % nb].level;
        int span = 0;
        for (std::size_t t = 1; t < arc.points.size(); ++t)
            span += advance(arc.points[t - 1].level, arc.points[t].level, m);
        auto xs = intersect(gaps(before, advance(before, first.level, m), m), gaps(last.level, advance(last.level, after, m), m));
        arc.xGaps = intersect(xs, gaps(last.level, m - span, m));
        if (arc.xGaps.empty()) continue;
        auto posSide = cyclic_range(V.label(arc.final), V.label(arc.initial) - 1, P);
        arc.positiveSlots = intersect(arc.vSlots, posSide);
        std::vector<int> neg;
        std::set_difference(arc.vSlots.begin(), arc.vSlots.end(), arc.positiveSlots.begin(), arc.positiveSlots.end(),
                            std::back_inserter(neg));
        arc.negativeSlots = neg;
        out.push_back(std::move(arc));
    }
    return out;
}

bool permutation_pretest(const BraidWord& ew, int i, int f, int level, int sign) {
    int N = static_cast<int>(ew.size()) - ew.strands() + 1;
    auto ls = ew.letters();
    if (level < 1 || level > static_cast<int>(ls.size()) + 1) return false;
    ls.insert(ls.begin() + (level - 1), Letter(i, f, sign));
    return extended_word_conditions(BraidWord(ew.strands(), std::move(ls)), N + 1);
}

std::vector<int> slot_positions(const VertexString& V, int k) {
    int P = V.P(), L = V.size();
    if (k < 1 || k > P) throw Inadmissible("slot out of range");
    int p = V.label_position(k);
    std::vector<int> out;
    if (k < P) {
        int q = V.label_position(k + 1);
        for (int x = p + 1; x <= q; ++x) out.push_back(x);
        return out;
    }
    for (int x = p + 1; x < L; ++x) out.push_back(x);
    for (int x = 0; x <= V.label_position(1); ++x) out.push_back(x);
    return out;
}

BoundaryCode apply_insertion(const BoundaryCode& bc, const InsertionArc& arc, int position, int level, int sign) {
    const auto& V = bc.vertices;
    int m = bc.levels(), L = V.size();
    if (position < 0 || position > L) throw Inadmissible("insertion position out of range");
    if (level < 1 || level > m + 1) throw Inadmissible("insertion level out of range");
    int gap = level == 1 ? m : level - 1;
    if (level == 1) level = m + 1;
    if (!std::binary_search(arc.xGaps.begin(), arc.xGaps.end(), gap))
        throw Inadmissible("level " + std::to_string(level) + " is outside the admissible x range");
    int slot = V.P();
    for (int x = position - 1; x >= 0; --x)
        if (V.positive(x)) {
            slot = V.label(x);
            break;
        }
    if (!std::binary_search(arc.vSlots.begin(), arc.vSlots.end(), slot))
        throw Inadmissible("vertex slot " + std::to_string(slot) + " is outside the admissible v range");
    bool positive = std::binary_search(arc.positiveSlots.begin(), arc.positiveSlots.end(), slot);
    if ((sign > 0) != positive) throw Inadmissible("sign does not match the side of the new vertex");

    auto mp = [&](int x) { return x < position ? x : x + 1; };
    auto ml = [&](int l) { return l >= level ? l + 1 : l; };
    int v = position;
    BoundaryCode out;
    out.vertices = V.with_inserted(position);

    std::set<int> arcLevels;
    for (auto& pt : arc.points) arcLevels.insert(pt.level);
    std::size_t nb = bc.boundary.size();
    out.boundary.push_back({BoundaryPoint::Kind::R, mp(arc.initial), v, mp(arc.final), sign, level});
    for (std::size_t t = arc.length; t < nb; ++t) {
        BoundaryPoint pt = bc.boundary[(arc.start + t) % nb];
        bool partnerInArc = pt.kind == BoundaryPoint::Kind::Q && arcLevels.count(pt.level);
        pt.i = mp(pt.i);
        pt.j = mp(pt.j);
        if (pt.v >= 0) pt.v = mp(pt.v);
        if (partnerInArc) {
            pt.kind = BoundaryPoint::Kind::R;
            pt.v = v;
        }
        pt.level = ml(pt.level);
        out.boundary.push_back(pt);
    }
    for (auto& pt : arc.points) {
        if (pt.kind != BoundaryPoint::Kind::R) continue;
        Saddle s{{mp(pt.i), mp(pt.v), mp(pt.j), v}, pt.sign, ml(pt.level)};
        std::sort(s.vertices.begin(), s.vertices.end());
        out.bb.push_back(std::move(s));
    }
    for (auto s : bc.bb) {
        for (int& x : s.vertices) x = mp(x);
        std::sort(s.vertices.begin(), s.vertices.end());
        s.level = ml(s.level);
        out.bb.push_back(std::move(s));
    }
    std::sort(out.bb.begin(), out.bb.end(), [](const Saddle& a, const Saddle& b) { return a.level < b.level; });
    return out;
}

std::vector<InsertionResult> insert_once(const BoundaryCode& bc, PairRule rule) {
    const auto& V = bc.vertices;
    auto arcs = get_saddles(bc, get_insertion_arcs(bc));
    auto ew = extended_word(saddle_code(bc));
    std::vector<InsertionResult> out;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        const auto& arc = arcs[a];
        int li = V.label(arc.initial), lf = V.label(arc.final);
        for (int slot : arc.vSlots) {
            int sign = std::binary_search(arc.positiveSlots.begin(), arc.positiveSlots.end(), slot) ? 1 : -1;
            for (int g : arc.xGaps) {
                int y = g + 1;
                if (!permutation_pretest(ew, li, lf, y, sign)) continue;
                for (int q : slot_positions(V, slot)) {
                    auto nb = apply_insertion(bc, arc, q, y, sign);
                    SaddleCode sc;
                    try {
                        sc = saddle_code(nb);
                    } catch (const BadCode&) {
                        continue;
                    }
                    // structure is preserved by construction and the permutation was pretested
                    if (!is_essential(sc) || !satisfies_pair_rule(sc, rule) || !is_embeddable(sc)) continue;
                    out.push_back({std::move(nb), a, q, y, sign});
                }
            }
        }
    }
    return out;
}

namespace {

using KeySet = std::set<std::vector<int>>;

// one round of insertions over a frontier, dropping anything already in `seen`
std::vector<BoundaryCode> grow(const std::vector<BoundaryCode>& frontier, KeySet& seen, PairRule rule, int threads) {
    std::vector<std::vector<std::pair<std::vector<int>, BoundaryCode>>> found(frontier.size());
    parallel_for(frontier.size(), threads, [&](std::size_t k, int) {
        for (auto& r : insert_once(frontier[k], rule)) found[k].push_back({disc_key(saddle_code(r.code)), std::move(r.code)});
    });
    std::vector<BoundaryCode> next;
    for (auto& list : found)
        for (auto& [key, code] : list)
            if (seen.insert(key).second) next.push_back(std::move(code));
    return next;
}

}  // namespace

std::vector<BoundaryCode> insert_vertices(const BoundaryCode& bc, int depth, PairRule rule, int threads) {
    if (depth == 0) return {bc};
    KeySet seen{disc_key(saddle_code(bc))};
    std::vector<BoundaryCode> out, frontier{bc};
    for (int d = 0; (depth < 0 || d < depth) && !frontier.empty(); ++d) {
        frontier = grow(frontier, seen, rule, threads);
        out.insert(out.end(), frontier.begin(), frontier.end());
    }
    return out;
}

std::vector<SaddleCode> discs_by_insertion(int P, int N, PairRule rule, int threads) {
    KeySet seen;
    std::vector<BoundaryCode> frontier;
    for (auto& w : enumerate_positive_good_words(P)) {
        for (unsigned mask = 0; mask < (1u << w.size()); ++mask) {
            auto ls = w.letters();
            for (std::size_t t = 0; t < ls.size(); ++t)
                if (mask >> t & 1) ls[t].sign = -1;
            auto bc = generate_disc_boundary(P, BraidWord(P, std::move(ls)));
            if (seen.insert(disc_key(saddle_code(bc))).second) frontier.push_back(std::move(bc));
        }
    }
    for (int d = 0; d < N; ++d) {
        KeySet level;
        frontier = grow(frontier, level, rule, threads);
    }
    std::vector<std::pair<std::vector<int>, SaddleCode>> keyed;
    for (auto& bc : frontier) {
        auto sc = saddle_code(bc);
        keyed.emplace_back(disc_key(sc), canonical_code(sc));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<SaddleCode> out;
    for (auto& [k, c] : keyed) out.push_back(std::move(c));
    return out;
}

}  // namespace foliage
