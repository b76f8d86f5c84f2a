#include "foliage/embed.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "foliage/errors.hpp"

namespace foliage {

bool interlocks(int a, int b, int c, int d, int L) {
    if (a == c || a == d || b == c || b == d) return false;
    auto inside = [&](int x) {
        int dx = ((x - a) % L + L) % L, db = ((b - a) % L + L) % L;
        return 0 < dx && dx < db;
    };
    return inside(c) != inside(d);
}

namespace {

std::string interval_str(int r, int m) {
    return "(" + std::to_string(r + 1) + "," + std::to_string(r + 1 == m ? 1 : r + 2) + ")";
}

std::string b_str(int p, int v, const VertexString& V) {
    return "b(" + V.name(p).str() + "," + V.name(v).str() + ")";
}

std::string gb_str(int a, int b, const VertexString& V) {
    if (a > b) std::swap(a, b);
    return "gb(" + V.name(a).str() + "," + V.name(b).str() + ")";
}

}  // namespace

ArcTable build_arc_table(const SaddleCode& c) {
    const auto& V = c.vertices;
    int m = c.levels();
    for (int v : V.negatives()) {
        int n = 0;
        for (auto& s : c.saddles) n += std::count(s.vertices.begin(), s.vertices.end(), v);
        if (n < 2) throw BadCode("negative vertex " + V.name(v).str() + " needs at least two saddles");
    }
    auto rows = partner_rows(c);
    if (!rows.ok()) throw BadCode(rows.why);
    ArcTable t;
    t.rows.resize(m);
    for (int r = 0; r < m; ++r) {
        t.rows[r].lo = r + 1;
        t.rows[r].hi = r + 1 == m ? 1 : r + 2;
        for (int v : V.negatives()) t.rows[r].b.push_back({rows.partner[r][v], v});
    }
    for (int k = 0; k < m; ++k) {
        const auto& s = c.saddles[k];
        if (saddle_kind(s, V) != SaddleKind::aa) continue;
        auto [a, b] = positive_pair(s, V);
        t.rows[(k - 1 + m) % m].gb.push_back({a, b, k + 1});
    }
    return t;
}

std::string arc_row_str(const ArcRow& row, const VertexString& V) {
    std::string s = "(" + std::to_string(row.lo) + "," + std::to_string(row.hi) + ")";
    for (auto& b : row.b) s += " " + b_str(b.positive, b.negative, V);
    for (auto& g : row.gb) s += " " + gb_str(g.a, g.b, V);
    return s;
}

bool is_essential(const SaddleCode& c) {
    const auto& V = c.vertices;
    for (auto& s : c.saddles)
        for (int v : s.vertices) {
            if (V.positive(v)) continue;
            for (int p : s.vertices)
                if (V.positive(p) && V.adjacent(p, v)) return false;
        }
    return true;
}

std::string EmbedReport::summary() const {
    if (ok()) return "embeddable";
    std::string s;
    for (auto& v : violations) {
        if (!s.empty()) s += "; ";
        s += "condition (" + std::to_string(v.condition) + "): " + v.witness;
    }
    return s;
}

namespace {

EmbedReport run_checks(const SaddleCode& c, bool collectAll, bool describe) {
    EmbedReport rep;
    const auto& V = c.vertices;
    int m = c.levels();
    int L = V.size();
    auto add = [&](int cond, int row, auto&& witness) {
        rep.violations.push_back({cond, row, describe ? witness() : std::string()});
        return !collectAll;
    };
    auto rows = partner_rows(c);
    if (!rows.ok()) {
        add(rows.failedCondition, -1, [&] { return rows.why; });
        return rep;
    }
    auto negs = V.negatives();
    for (int r = 0; r < m; ++r) {
        const auto& pr = rows.partner[r];
        for (std::size_t x = 0; x < negs.size(); ++x)
            for (std::size_t y = x + 1; y < negs.size(); ++y) {
                int v = negs[x], u = negs[y];
                if (pr[v] == pr[u]) {
                    if (add(1, r, [&] {
                            return "in " + interval_str(r, m) + " " + b_str(pr[v], v, V) + " and " + b_str(pr[u], u, V) +
                                   " share a positive vertex";
                        }))
                        return rep;
                } else if (interlocks(v, pr[v], u, pr[u], L)) {
                    if (add(3, r, [&] {
                            return "in " + interval_str(r, m) + " " + b_str(pr[v], v, V) + " interlocks " + b_str(pr[u], u, V);
                        }))
                        return rep;
                }
            }
    }
    for (int k = 0; k < m; ++k) {
        const auto& s = c.saddles[k];
        if (saddle_kind(s, V) != SaddleKind::aa) continue;
        auto [a, b] = positive_pair(s, V);
        int r = (k - 1 + m) % m;
        const auto& pr = rows.partner[r];
        for (int v : negs) {
            if (pr[v] == a || pr[v] == b) {
                if (add(1, r, [&] { return "in " + interval_str(r, m) + " " + gb_str(a, b, V) + " meets " + b_str(pr[v], v, V); }))
                    return rep;
            } else if (interlocks(a, b, v, pr[v], L)) {
                if (add(3, r, [&] { return "in " + interval_str(r, m) + " " + gb_str(a, b, V) + " interlocks " + b_str(pr[v], v, V); }))
                    return rep;
            }
        }
    }
    return rep;
}

}  // namespace

EmbedReport check_embedding(const SaddleCode& c, bool collectAll) { return run_checks(c, collectAll, true); }

bool is_embeddable(const SaddleCode& c) { return run_checks(c, false, false).ok(); }

std::string pair_rule_name(PairRule r) {
    switch (r) {
        case PairRule::OppositeAb: return "opposite-ab";
        case PairRule::NoDoubleBb: return "no-double-bb";
        case PairRule::SharedNegative: return "shared-negative";
    }
    return "?";
}

PairRule parse_pair_rule(const std::string& s) {
    for (auto r : {PairRule::OppositeAb, PairRule::NoDoubleBb, PairRule::SharedNegative})
        if (pair_rule_name(r) == s) return r;
    throw ParseError("unknown pair rule " + s);
}

bool pair_allowed(const Saddle& s, const Saddle& t, const VertexString& V, PairRule rule) {
    auto ks = saddle_kind(s, V), kt = saddle_kind(t, V);
    if (ks == SaddleKind::aa || kt == SaddleKind::aa) return false;
    if (s.sign == t.sign) return false;
    if (rule == PairRule::OppositeAb) return ks == SaddleKind::ab && kt == SaddleKind::ab;
    if (ks == SaddleKind::bb && kt == SaddleKind::bb) return false;
    if (rule == PairRule::SharedNegative && ks != kt) {
        auto ab = negative_vertices(ks == SaddleKind::ab ? s : t, V);
        auto bb = negative_vertices(ks == SaddleKind::bb ? s : t, V);
        return std::find(bb.begin(), bb.end(), ab[0]) != bb.end();
    }
    return true;
}

bool satisfies_pair_rule(const SaddleCode& c, PairRule rule) {
    std::map<std::pair<int, int>, std::vector<const Saddle*>> byPair;
    for (auto& s : c.saddles) byPair[positive_pair(s, c.vertices)].push_back(&s);
    for (auto& [pr, list] : byPair) {
        if (list.size() > 2) return false;
        if (list.size() == 2 && !pair_allowed(*list[0], *list[1], c.vertices, rule)) return false;
    }
    return true;
}

bool is_admissible(const SaddleCode& c, PairRule rule) {
    try {
        check_structure(c);
    } catch (const BadCode&) {
        return false;
    }
    return is_essential(c) && satisfies_pair_rule(c, rule) && is_embeddable(c);
}

std::vector<SaddleCode> realizations(const BraidWord& ew, int N, bool embeddableOnly) {
    int P = ew.strands();
    int m = static_cast<int>(ew.size());
    std::vector<SaddleCode> out;
    if (!extended_word_conditions(ew, N)) return out;
    // attachment options per letter: subsets of the negatives of size <= 2
    std::vector<std::vector<int>> subsets{{}};
    for (int a = 0; a < N; ++a) {
        subsets.push_back({a});
        for (int b = a + 1; b < N; ++b) subsets.push_back({a, b});
    }
    std::vector<int> counts(P, 0);
    std::function<void(int, int)> distribute = [&](int slot, int left) {
        if (slot == P - 1) {
            counts[slot] = left;
            // slot P (after the last positive) is written in front, as 0.j
            std::vector<bool> bits(counts[P - 1], false);
            for (int k = 0; k < P; ++k) {
                bits.push_back(true);
                if (k < P - 1) bits.insert(bits.end(), counts[k], false);
            }
            VertexString V(bits);
            auto negs = V.negatives();
            std::vector<int> choice(m, 0);
            while (true) {
                SaddleCode c;
                c.vertices = V;
                for (int k = 0; k < m; ++k) {
                    Saddle s;
                    s.vertices = {V.label_position(ew[k].gen.i), V.label_position(ew[k].gen.j)};
                    for (int t : subsets[choice[k]]) s.vertices.push_back(negs[t]);
                    std::sort(s.vertices.begin(), s.vertices.end());
                    s.sign = ew[k].sign;
                    s.level = k + 1;
                    c.saddles.push_back(std::move(s));
                }
                bool ok = true;
                try {
                    check_structure(c);
                } catch (const BadCode&) {
                    ok = false;
                }
                if (ok && (!embeddableOnly || is_embeddable(c))) out.push_back(std::move(c));
                int k = 0;
                while (k < m && ++choice[k] == static_cast<int>(subsets.size())) choice[k++] = 0;
                if (k == m) break;
            }
            return;
        }
        for (int c = 0; c <= left; ++c) {
            counts[slot] = c;
            distribute(slot + 1, left - c);
        }
    };
    distribute(0, N);
    return out;
}

}  // namespace foliage
