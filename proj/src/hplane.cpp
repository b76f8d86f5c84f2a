#include "foliage/hplane.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <map>
#include <random>

#include "foliage/errors.hpp"
#include "foliage/parallel.hpp"

namespace foliage {

// ---- necklaces

std::string Necklace::str() const {
    std::string s;
    for (int d : digits) s += static_cast<char>('0' + d);
    return s;
}

VertexString Necklace::vertex_string() const {
    std::vector<bool> b;
    for (int d : digits) {
        if (d > 1) throw BadCode("only binary necklaces are vertex strings");
        b.push_back(d == 1);
    }
    return VertexString(std::move(b));
}

std::vector<Necklace> enumerate_necklaces(int length, int k, int density) {
    std::vector<Necklace> out;
    if (length < 1 || k < 1 || density < 0 || density > length) return out;
    if (k == 1) {
        if (density == 0) out.push_back({std::vector<int>(length, 0)});
        return out;
    }
    std::vector<int> a(length + 1, 0);
    std::function<void(int, int, int)> gen = [&](int t, int p, int ones) {
        if (ones > density || ones + (length - t + 1) < density) return;
        if (t > length) {
            if (length % p == 0 && ones == density) out.push_back({std::vector<int>(a.begin() + 1, a.end())});
            return;
        }
        a[t] = a[t - p];
        gen(t + 1, p, ones + (a[t] != 0));
        for (int j = a[t - p] + 1; j < k; ++j) {
            a[t] = j;
            gen(t + 1, t, ones + 1);
        }
    };
    gen(1, 1, 0);
    return out;
}

// ---- half-planes

HalfPlane make_half_plane(const VertexString& V, std::vector<int> partner) {
    int L = V.size();
    HalfPlane h;
    h.partner = std::move(partner);
    std::vector<int> inner(L, -1);  // arc (by its left end) most tightly enclosing each position
    for (int x = 0; x < L; ++x) {
        int best = -1, span = L + 1;
        for (int lo = 0; lo < L; ++lo) {
            int hi = h.partner[lo];
            if (hi <= lo) continue;
            if (lo < x && x < hi && hi - lo < span) {
                best = lo;
                span = hi - lo;
            }
        }
        inner[x] = best;
    }
    std::map<int, int> ids{{-1, 0}};
    h.region.assign(L, 0);
    for (int x = 0; x < L; ++x) {
        auto it = ids.find(inner[x]);
        if (it == ids.end()) it = ids.emplace(inner[x], static_cast<int>(ids.size())).first;
        h.region[x] = it->second;
    }
    return h;
}

std::vector<HalfPlane> enumerate_half_planes(const VertexString& V) {
    auto negs = V.negatives();
    auto poss = V.positives();
    std::vector<HalfPlane> out;
    std::vector<int> partner(V.size(), -1);
    std::function<void(std::size_t)> rec = [&](std::size_t t) {
        if (t == negs.size()) {
            out.push_back(make_half_plane(V, partner));
            return;
        }
        int v = negs[t];
        for (int p : poss) {
            if (partner[p] >= 0 || V.adjacent(p, v)) continue;
            bool ok = true;
            for (std::size_t s = 0; s < t && ok; ++s) ok = !interlocks(v, p, negs[s], partner[negs[s]], V.size());
            if (!ok) continue;
            partner[v] = p;
            partner[p] = v;
            rec(t + 1);
            partner[v] = partner[p] = -1;
        }
    };
    rec(0);
    return out;
}

// ---- graph

std::size_t HalfPlaneGraph::edge_count() const {
    std::size_t n = 0;
    for (auto& a : adjacency) n += a.size();
    return n;
}

HalfPlaneGraph make_graph(const VertexString& V, std::vector<HalfPlane> halfPlanes, bool scrambled, std::uint64_t seed) {
    HalfPlaneGraph G;
    G.vertices = V;
    G.scrambled = scrambled;
    G.seed = seed;
    if (scrambled) {
        std::mt19937_64 rng(seed);
        std::shuffle(halfPlanes.begin(), halfPlanes.end(), rng);
    }
    G.nodes = std::move(halfPlanes);
    std::map<std::vector<int>, int> index;
    for (std::size_t k = 0; k < G.nodes.size(); ++k) index[G.nodes[k].partner] = static_cast<int>(k);
    std::map<std::pair<std::vector<int>, int>, int> saddleId;
    auto saddle = [&](std::vector<int> vs, int sign) {
        std::sort(vs.begin(), vs.end());
        auto key = std::make_pair(vs, sign);
        auto it = saddleId.find(key);
        if (it != saddleId.end()) return it->second;
        int id = static_cast<int>(G.catalog.size());
        G.catalog.push_back({vs, sign, 0});
        saddleId.emplace(key, id);
        return id;
    };
    auto negs = V.negatives();
    auto poss = V.positives();
    G.adjacency.resize(G.nodes.size());
    for (std::size_t a = 0; a < G.nodes.size(); ++a) {
        const auto& h = G.nodes[a].partner;
        auto& adj = G.adjacency[a];
        for (std::size_t t = 0; t < negs.size(); ++t) {
            int v = negs[t], x = h[v];
            for (int y : poss) {
                if (y == x || h[y] >= 0) continue;
                auto g = h;
                g[x] = -1;
                g[v] = y;
                g[y] = v;
                auto it = index.find(g);
                if (it == index.end()) continue;
                int sign = V.between(x, v, y) ? 1 : -1;
                adj.push_back({static_cast<int>(a), it->second, saddle({x, v, y}, sign), -1});
            }
        }
        for (std::size_t t = 0; t < negs.size(); ++t)
            for (std::size_t u = t + 1; u < negs.size(); ++u) {
                int v = negs[t], w = negs[u], x = h[v], y = h[w];
                auto g = h;
                g[v] = y;
                g[w] = x;
                g[x] = w;
                g[y] = v;
                auto it = index.find(g);
                if (it == index.end()) continue;
                int sign = V.between(x, v, y) ? 1 : -1;
                adj.push_back({static_cast<int>(a), it->second, saddle({x, y, v, w}, sign), -1});
            }
        const auto& reg = G.nodes[a].region;
        for (std::size_t s = 0; s < poss.size(); ++s)
            for (std::size_t t = s + 1; t < poss.size(); ++t) {
                int p = poss[s], q = poss[t];
                if (h[p] >= 0 || h[q] >= 0 || reg[p] != reg[q]) continue;
                int id = saddle({p, q}, 0);
                adj.push_back({static_cast<int>(a), static_cast<int>(a), id, static_cast<int>(adj.size())});
            }
    }
    for (std::size_t a = 0; a < G.adjacency.size(); ++a)
        for (auto& e : G.adjacency[a]) {
            if (e.from == e.to) continue;
            const auto& back = G.adjacency[e.to];
            for (std::size_t r = 0; r < back.size(); ++r)
                if (back[r].to == e.from && back[r].from != back[r].to &&
                    G.catalog[back[r].saddle].vertices == G.catalog[e.saddle].vertices) {
                    e.reverse = static_cast<int>(r);
                    break;
                }
        }
    return G;
}

std::vector<SaddleTransition> non_loop_edges(const HalfPlaneGraph& G) {
    std::vector<SaddleTransition> out;
    for (auto& adj : G.adjacency)
        for (auto& e : adj)
            if (e.from != e.to) out.push_back(e);
    return out;
}

// ---- cycle search

namespace {

struct SaddleInfo {
    int pair = 0;  // a * L + b over the two positive positions
    int a = 0, b = 0;
    int la = 0, lb = 0;  // 0-based positive labels
    int neg[2] = {-1, -1};
    bool aa = false;
};

class CycleSearch {
public:
    CycleSearch(const HalfPlaneGraph& G, int m, std::size_t stopAt, PairRule rule)
        : G_(G), V_(G.vertices), m_(m), stopAt_(stopAt), rule_(rule) {
        int L = V_.size();
        P_ = V_.P();
        N_ = V_.N();
        for (auto& s : G.catalog) {
            SaddleInfo in;
            auto [a, b] = positive_pair(s, V_);
            in.a = a;
            in.b = b;
            in.pair = a * L + b;
            in.la = V_.label(a) - 1;
            in.lb = V_.label(b) - 1;
            auto ng = negative_vertices(s, V_);
            for (std::size_t t = 0; t < ng.size(); ++t) in.neg[t] = ng[t];
            in.aa = ng.empty();
            info_.push_back(in);
        }
        edges_ = non_loop_edges(G);
        loops_.resize(G.nodes.size());
        for (auto& adj : G.adjacency)
            for (auto& e : adj)
                if (e.from == e.to) loops_[e.from].push_back(e.saddle);
        outOf_.resize(G.nodes.size());
        for (std::size_t k = 0; k < edges_.size(); ++k) outOf_[edges_[k].from].push_back(static_cast<int>(k));
        used_.assign(G.catalog.size(), 0);
        pairCount_.assign(L * L, 0);
        pairFirst_.assign(L * L, -1);
        cover_.assign(L, 0);
    }

    std::vector<ThetaCycle> run_root(std::size_t root) {
        out_.clear();
        if (N_ == 0) {
            if (root == 0) run_positive();
            return out_;
        }
        if (root >= edges_.size()) return out_;
        root_ = static_cast<int>(root);
        bfs();
        const auto& e = edges_[root];
        if (dist_[e.to] < 0 || 1 + dist_[e.to] > m_) return out_;
        skeleton_.clear();
        push(e.saddle);
        skeleton_.push_back(root_);
        dfs(e.to);
        skeleton_.pop_back();
        pop(e.saddle);
        return out_;
    }

    std::size_t roots() const { return N_ == 0 ? 1 : edges_.size(); }

private:
    const HalfPlaneGraph& G_;
    const VertexString& V_;
    int m_, P_ = 0, N_ = 0;
    std::size_t stopAt_;
    PairRule rule_;
    std::vector<SaddleInfo> info_;
    std::vector<SaddleTransition> edges_;
    std::vector<std::vector<int>> loops_;
    std::vector<std::vector<int>> outOf_;
    std::vector<int> dist_;
    std::vector<char> used_;
    std::vector<int> pairCount_, pairFirst_;
    std::vector<int> cover_;
    int coveredPos_ = 0, coveredNeg_ = 0;
    int root_ = 0;
    std::vector<int> skeleton_;
    std::vector<ThetaCycle> out_;

    // loops chosen per slot, and the running permutation of phase 2
    std::vector<std::vector<int>> slots_;
    std::vector<int> perm_;
    int cycles_ = 0;

    bool full() const { return stopAt_ && out_.size() >= stopAt_; }

    void bfs() {
        dist_.assign(G_.nodes.size(), -1);
        std::vector<std::vector<int>> into(G_.nodes.size());
        for (std::size_t k = root_ + 1; k < edges_.size(); ++k) into[edges_[k].to].push_back(edges_[k].from);
        std::deque<int> q{edges_[root_].from};
        dist_[edges_[root_].from] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : into[x])
                if (dist_[y] < 0) {
                    dist_[y] = dist_[x] + 1;
                    q.push_back(y);
                }
        }
    }

    bool pair_ok(int s) const {
        const auto& in = info_[s];
        int c = pairCount_[in.pair];
        if (c == 0) return true;
        if (c >= 2 || in.aa) return false;
        return pair_allowed(G_.catalog[pairFirst_[in.pair]], G_.catalog[s], V_, rule_);
    }

    void push(int s) {
        const auto& in = info_[s];
        used_[s] = 1;
        if (pairCount_[in.pair]++ == 0) pairFirst_[in.pair] = s;
        for (int x : {in.a, in.b, in.neg[0], in.neg[1]})
            if (x >= 0 && cover_[x]++ == 0) (V_.positive(x) ? coveredPos_ : coveredNeg_)++;
    }

    void pop(int s) {
        const auto& in = info_[s];
        used_[s] = 0;
        if (--pairCount_[in.pair] == 0) pairFirst_[in.pair] = -1;
        for (int x : {in.a, in.b, in.neg[0], in.neg[1]})
            if (x >= 0 && --cover_[x] == 0) (V_.positive(x) ? coveredPos_ : coveredNeg_)--;
    }

    int neg_need() const {
        int need = 0;
        for (int v = 0; v < V_.size(); ++v)
            if (!V_.positive(v) && cover_[v] < 2) need += 2 - cover_[v];
        return need;
    }

    void dfs(int u) {
        if (full()) return;
        int t = static_cast<int>(skeleton_.size());
        if (u == edges_[root_].from) fill();
        if (t == m_) return;
        for (int k : outOf_[u]) {
            if (k <= root_) continue;
            const auto& e = edges_[k];
            if (dist_[e.to] < 0 || t + 1 + dist_[e.to] > m_) continue;
            if (used_[e.saddle] || !pair_ok(e.saddle)) continue;
            push(e.saddle);
            int rest = m_ - t - 1;
            if (P_ - coveredPos_ <= 2 * rest && neg_need() <= 2 * rest) {
                skeleton_.push_back(k);
                dfs(e.to);
                skeleton_.pop_back();
            }
            pop(e.saddle);
            if (full()) return;
        }
    }

    // ---- phase 2

    bool same_cycle(int i, int j) const {
        for (int x = perm_[i];; x = perm_[x]) {
            if (x == j) return true;
            if (x == i) return false;
        }
    }

    void transpose(int i, int j) {
        cycles_ += same_cycle(i, j) ? 1 : -1;
        std::swap(perm_[i], perm_[j]);
    }

    void fill() {
        int T = static_cast<int>(skeleton_.size());
        if (neg_need() > 0 || coveredNeg_ != N_) return;
        slots_.assign(T, {});
        perm_.resize(P_);
        for (int i = 0; i < P_; ++i) perm_[i] = i;
        cycles_ = P_;
        place(0, 0, m_ - T);
    }

    // k: current slot, placed: letters so far, loopsLeft: loops still to insert
    void place(int k, int placed, int loopsLeft) {
        if (full()) return;
        int T = static_cast<int>(skeleton_.size());
        int rest = m_ - placed;
        if (std::abs(cycles_ - (N_ + 1)) > rest) return;
        if (P_ - coveredPos_ > 2 * loopsLeft + 2 * (T - k)) return;
        if (k == T) {
            if (loopsLeft == 0 && cycles_ == N_ + 1 && coveredPos_ == P_) emit();
            return;
        }
        int node = k == 0 ? edges_[root_].from : edges_[skeleton_[k - 1]].to;
        if (loopsLeft > 0) {
            for (int s : loops_[node]) {
                if (used_[s] || pairCount_[info_[s].pair]) continue;
                push(s);
                transpose(info_[s].la, info_[s].lb);
                slots_[k].push_back(s);
                place(k, placed + 1, loopsLeft - 1);
                slots_[k].pop_back();
                transpose(info_[s].la, info_[s].lb);
                pop(s);
            }
        }
        const auto& e = edges_[skeleton_[k]];
        transpose(info_[e.saddle].la, info_[e.saddle].lb);
        place(k + 1, placed + 1, loopsLeft);
        transpose(info_[e.saddle].la, info_[e.saddle].lb);
    }

    void emit() {
        ThetaCycle c;
        for (std::size_t k = 0; k < skeleton_.size(); ++k) {
            int node = k == 0 ? edges_[root_].from : edges_[skeleton_[k - 1]].to;
            for (int s : slots_[k]) c.steps.push_back({node, s});
            c.steps.push_back({node, edges_[skeleton_[k]].saddle});
        }
        out_.push_back(least_rotation(std::move(c)));
    }

    static ThetaCycle least_rotation(ThetaCycle c) {
        auto best = c.steps;
        auto cur = c.steps;
        for (std::size_t r = 1; r < cur.size(); ++r) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        c.steps = std::move(best);
        return c;
    }

    // single node, every saddle is an aa loop; the smallest loop goes first
    void run_positive() {
        const auto& ls = loops_[0];
        perm_.resize(P_);
        for (int i = 0; i < P_; ++i) perm_[i] = i;
        cycles_ = P_;
        std::vector<int> seq;
        std::function<void(int)> rec = [&](int first) {
            if (full()) return;
            int rest = m_ - static_cast<int>(seq.size());
            if (std::abs(cycles_ - (N_ + 1)) > rest || P_ - coveredPos_ > 2 * rest) return;
            if (rest == 0) {
                if (cycles_ == 1 && coveredPos_ == P_) {
                    ThetaCycle c;
                    for (int s : seq) c.steps.push_back({0, s});
                    out_.push_back(std::move(c));
                }
                return;
            }
            for (int s : ls) {
                if (used_[s] || s <= first || pairCount_[info_[s].pair]) continue;
                push(s);
                transpose(info_[s].la, info_[s].lb);
                seq.push_back(s);
                rec(first);
                seq.pop_back();
                transpose(info_[s].la, info_[s].lb);
                pop(s);
            }
        };
        for (int f : ls) {
            push(f);
            transpose(info_[f].la, info_[f].lb);
            seq = {f};
            rec(f);
            transpose(info_[f].la, info_[f].lb);
            pop(f);
        }
    }
};

}  // namespace

std::vector<ThetaCycle> enumerate_cycles_from_root(const HalfPlaneGraph& G, int targetLength, std::size_t root,
                                                   std::size_t stopAt, PairRule rule) {
    CycleSearch cs(G, targetLength, stopAt, rule);
    return cs.run_root(root);
}

std::vector<ThetaCycle> enumerate_cycles(const HalfPlaneGraph& G, int targetLength, std::size_t stopAt, PairRule rule) {
    CycleSearch cs(G, targetLength, 0, rule);
    std::vector<ThetaCycle> out;
    for (std::size_t r = 0; r < cs.roots(); ++r) {
        auto part = cs.run_root(r);
        for (auto& c : part) {
            if (stopAt && out.size() >= stopAt) return out;
            out.push_back(std::move(c));
        }
    }
    return out;
}

SaddleCode cycle_code(const HalfPlaneGraph& G, const ThetaCycle& c) {
    SaddleCode sc;
    sc.vertices = G.vertices;
    for (std::size_t k = 0; k < c.steps.size(); ++k) {
        Saddle s = G.catalog.at(c.steps[k].saddle);
        s.level = static_cast<int>(k) + 1;
        sc.saddles.push_back(std::move(s));
    }
    return sc;
}

bool end_tile_free(const SaddleCode& c) {
    const auto& V = c.vertices;
    std::vector<int> valence(V.size(), 0), lastKind(V.size(), 0);
    for (auto& s : c.saddles)
        for (int x : s.vertices) {
            ++valence[x];
            lastKind[x] = static_cast<int>(s.vertices.size());
        }
    for (int p : V.positives())
        if (valence[p] == 1 && lastKind[p] == 2) return false;
    return true;
}

std::size_t CycleReport::end_tile_free() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CycleRecord& r) { return r.endTileFree; }));
}

CycleReport compute_cycles(int P, int N, const CycleOptions& opt) {
    if (P < N + 2 || N < 0) throw Error("compute_cycles needs P > N + 1");
    int m = P + N - 1;
    CycleReport rep;
    for (auto& nk : enumerate_necklaces(P + N, 2, P)) rep.strings.push_back(nk.vertex_string());
    std::vector<HalfPlaneGraph> graphs(rep.strings.size());
    parallel_for(graphs.size(), opt.threads, [&](std::size_t k, int) {
        graphs[k] = make_graph(rep.strings[k], enumerate_half_planes(rep.strings[k]), opt.scrambled, opt.seed);
    });
    struct Task {
        std::size_t string, root;
    };
    std::vector<Task> tasks;
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        std::size_t roots = N == 0 ? 1 : non_loop_edges(graphs[k]).size();
        for (std::size_t r = 0; r < roots; ++r) tasks.push_back({k, r});
    }
    std::vector<std::vector<ThetaCycle>> found(tasks.size());
    if (opt.stopAt) {
        std::size_t total = 0;
        for (std::size_t t = 0; t < tasks.size() && total < opt.stopAt; ++t) {
            found[t] = enumerate_cycles_from_root(graphs[tasks[t].string], m, tasks[t].root, opt.stopAt - total, opt.rule);
            total += found[t].size();
        }
    } else {
        parallel_for(tasks.size(), opt.threads, [&](std::size_t t, int) {
            found[t] = enumerate_cycles_from_root(graphs[tasks[t].string], m, tasks[t].root, 0, opt.rule);
        });
    }
    for (std::size_t t = 0; t < tasks.size(); ++t)
        for (auto& c : found[t]) {
            CycleRecord r;
            r.string = tasks[t].string;
            r.code = cycle_code(graphs[r.string], c);
            r.endTileFree = end_tile_free(r.code);
            r.cycle = std::move(c);
            rep.records.push_back(std::move(r));
        }
    return rep;
}

std::vector<SaddleCode> assign_aa_signs(const SaddleCode& c) {
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < c.saddles.size(); ++k)
        if (c.saddles[k].vertices.size() == 2) free.push_back(k);
    std::vector<SaddleCode> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
        SaddleCode d = c;
        for (std::size_t t = 0; t < free.size(); ++t) d.saddles[free[t]].sign = (mask >> t & 1) ? -1 : 1;
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace foliage
