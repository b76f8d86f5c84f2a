#include "foliage/disc.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "foliage/errors.hpp"

namespace foliage {

// ---- names and strings

std::string VertexName::str() const {
    return positive() ? std::to_string(k) : std::to_string(k) + "." + std::to_string(j);
}

VertexName VertexName::parse(std::string_view s) {
    auto num = [&](std::string_view t) {
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("bad vertex name '" + std::string(s) + "'");
        return std::stoi(std::string(t));
    };
    auto dot = s.find('.');
    if (dot == std::string_view::npos) {
        int k = num(s);
        if (k < 1) throw ParseError("positive vertex names start at 1");
        return {k, 0};
    }
    int j = num(s.substr(dot + 1));
    if (j < 1) throw ParseError("negative ordinals start at 1");
    return {num(s.substr(0, dot)), j};
}

VertexString::VertexString(std::vector<bool> positive) : pos_(std::move(positive)) {
    int last = 0, cnt = 0;
    names_.reserve(pos_.size());
    labelPos_.reserve(pos_.size());
    label_.assign(pos_.size(), 0);
    for (std::size_t p = 0; p < pos_.size(); ++p) {
        if (pos_[p]) {
            last = ++P_;
            cnt = 0;
            label_[p] = last;
            labelPos_.push_back(static_cast<int>(p));
            names_.push_back({last, 0});
        } else {
            names_.push_back({last, ++cnt});
        }
    }
}

VertexString VertexString::from_bits(std::string_view bits) {
    std::vector<bool> b;
    for (char c : bits) {
        if (c == '1' || c == '+') b.push_back(true);
        else if (c == '0' || c == '-') b.push_back(false);
        else if (!std::isspace(static_cast<unsigned char>(c))) throw ParseError("bad vertex string character");
    }
    return VertexString(std::move(b));
}

VertexString VertexString::from_names(std::vector<VertexName> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::vector<bool> b;
    int expectK = 0, expectJ = 1;
    for (auto& n : names) {
        if (n.positive()) {
            if (n.k != expectK + 1) throw BadCode("positive vertices must be 1..P without gaps");
            expectK = n.k;
            expectJ = 1;
            b.push_back(true);
        } else {
            if (n.k != expectK || n.j != expectJ) throw BadCode("negative vertex " + n.str() + " out of sequence");
            ++expectJ;
            b.push_back(false);
        }
    }
    VertexString v(std::move(b));
    for (int p = 0; p < v.size(); ++p)
        if (!(v.name(p) == names[p])) throw BadCode("inconsistent vertex names");
    return v;
}

int VertexString::position(const VertexName& v) const {
    auto it = std::find(names_.begin(), names_.end(), v);
    if (it == names_.end()) throw BadCode("unknown vertex " + v.str());
    return static_cast<int>(it - names_.begin());
}

std::vector<int> VertexString::positives() const { return labelPos_; }

std::vector<int> VertexString::negatives() const {
    std::vector<int> out;
    for (int p = 0; p < size(); ++p)
        if (!pos_[p]) out.push_back(p);
    return out;
}

std::string VertexString::bits() const {
    std::string s;
    for (bool b : pos_) s += b ? '1' : '0';
    return s;
}

bool VertexString::adjacent(int a, int b) const {
    int L = size();
    int d = ((a - b) % L + L) % L;
    return d == 1 || d == L - 1;
}

bool VertexString::between(int a, int x, int b) const {
    int L = size();
    int dx = ((x - a) % L + L) % L, db = ((b - a) % L + L) % L;
    return 0 < dx && dx < db;
}

VertexString VertexString::rotated(int r) const {
    int L = size();
    std::vector<bool> b(L);
    for (int t = 0; t < L; ++t) b[t] = pos_[((t + r) % L + L) % L];
    return VertexString(std::move(b));
}

VertexString VertexString::with_inserted(int at) const {
    auto b = pos_;
    b.insert(b.begin() + at, false);
    return VertexString(std::move(b));
}

VertexString VertexString::with_removed(int at) const {
    auto b = pos_;
    b.erase(b.begin() + at);
    return VertexString(std::move(b));
}

// ---- saddles

std::string kind_name(SaddleKind k) {
    switch (k) {
        case SaddleKind::aa: return "aa";
        case SaddleKind::ab: return "ab";
        case SaddleKind::bb: return "bb";
    }
    return "?";
}

SaddleKind saddle_kind(const Saddle& s, const VertexString& V) {
    int pos = 0;
    for (int x : s.vertices) {
        if (x < 0 || x >= V.size()) throw BadCode("saddle vertex out of range");
        pos += V.positive(x);
    }
    if (pos != 2) throw BadCode("saddle must touch exactly two positive vertices");
    switch (s.vertices.size()) {
        case 2: return SaddleKind::aa;
        case 3: return SaddleKind::ab;
        case 4: return SaddleKind::bb;
        default: throw BadCode("saddle must touch 2 to 4 vertices");
    }
}

std::pair<int, int> positive_pair(const Saddle& s, const VertexString& V) {
    int a = -1, b = -1;
    for (int x : s.vertices)
        if (V.positive(x)) (a < 0 ? a : b) = x;
    return {a, b};
}

std::vector<int> negative_vertices(const Saddle& s, const VertexString& V) {
    std::vector<int> out;
    for (int x : s.vertices)
        if (!V.positive(x)) out.push_back(x);
    return out;
}

std::vector<Move> saddle_moves(const Saddle& s, const VertexString& V, bool* consistent) {
    auto [a, b] = positive_pair(s, V);
    std::vector<Move> out;
    for (int v : negative_vertices(s, V)) {
        bool inside = V.between(a, v, b);
        bool forward = inside == (s.sign > 0);
        out.push_back(forward ? Move{v, a, b} : Move{v, b, a});
    }
    bool ok = true;
    if (out.size() == 2) ok = out[0].from == out[1].to && out[1].from == out[0].to;
    if (consistent) *consistent = ok;
    if (!ok) out.clear();
    return out;
}

// ---- codes

void check_structure(const SaddleCode& c, bool allowFreeSigns) {
    const auto& V = c.vertices;
    int m = V.P() + V.N() - 1;
    if (c.levels() != m)
        throw BadCode("expected " + std::to_string(m) + " saddles, found " + std::to_string(c.levels()));
    std::vector<bool> covered(V.size(), false);
    for (int k = 0; k < m; ++k) {
        const auto& s = c.saddles[k];
        if (s.level != k + 1) throw BadCode("saddle levels must be 1..P+N-1 in order");
        auto kind = saddle_kind(s, V);
        auto vs = s.vertices;
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw BadCode("repeated vertex in a saddle");
        bool freeOk = allowFreeSigns && kind == SaddleKind::aa && s.sign == 0;
        if (s.sign != 1 && s.sign != -1 && !freeOk) throw BadCode("saddle sign must be +1 or -1");
        for (int x : s.vertices) covered[x] = true;
    }
    for (int p = 0; p < V.size(); ++p)
        if (!covered[p]) throw BadCode("vertex " + V.name(p).str() + " lies on no saddle");
    std::vector<Letter> ls;
    ls.reserve(c.saddles.size());
    for (auto& s : c.saddles) {
        auto [a, b] = positive_pair(s, V);
        ls.emplace_back(V.label(a), V.label(b), 1);
    }
    if (!extended_word_conditions(BraidWord(V.P(), ls), V.N()))
        throw BadCode("induced permutation is not one (P-N)-cycle plus N fixed points");
}

bool extended_word_conditions(const BraidWord& ew, int N) {
    int P = ew.strands();
    if (static_cast<int>(ew.size()) != P + N - 1 || N < 0 || P - N < 1) return false;
    auto t = induced_permutation(ew).cycle_type();
    std::vector<int> want(N, 1);
    want.push_back(P - N);
    std::sort(want.begin(), want.end());
    return t == want;
}

BraidWord extended_word(const SaddleCode& c) {
    std::vector<Letter> ls;
    ls.reserve(c.saddles.size());
    for (auto& s : c.saddles) {
        saddle_kind(s, c.vertices);
        if (s.sign != 1 && s.sign != -1) throw BadCode("extended word needs signed saddles");
        auto [a, b] = positive_pair(s, c.vertices);
        ls.emplace_back(c.vertices.label(a), c.vertices.label(b), s.sign);
    }
    return BraidWord(c.P(), std::move(ls));
}

PartnerRows partner_rows(const SaddleCode& c) {
    PartnerRows out;
    const auto& V = c.vertices;
    int m = c.levels();
    int L = V.size();
    out.partner.assign(m, std::vector<int>(L, -1));
    std::vector<std::vector<Move>> moves(m);
    for (int k = 0; k < m; ++k) {
        bool ok = true;
        moves[k] = saddle_moves(c.saddles[k], V, &ok);
        if (!ok) {
            out.failedCondition = 2;
            out.why = "bb-saddle at level " + std::to_string(k + 1) + " does not swap its b-arcs";
            return out;
        }
    }
    for (int v : V.negatives()) {
        std::vector<std::pair<int, Move>> ev;
        for (int k = 0; k < m; ++k)
            for (auto& mv : moves[k])
                if (mv.v == v) ev.push_back({k, mv});
        if (ev.empty()) {
            out.failedCondition = 1;
            out.why = "negative vertex " + V.name(v).str() + " lies on no saddle";
            return out;
        }
        for (std::size_t t = 0; t < ev.size(); ++t) {
            auto& [k, mv] = ev[t];
            auto& [k2, nx] = ev[(t + 1) % ev.size()];
            if (mv.to != nx.from) {
                out.failedCondition = 2;
                out.why = "saddles at levels " + std::to_string(k + 1) + " and " + std::to_string(k2 + 1) +
                          " disagree on the b-arc of " + V.name(v).str();
                return out;
            }
            int kk = k;
            do {
                out.partner[kk][v] = mv.to;
                kk = (kk + 1) % m;
            } while (kk != k2);
        }
    }
    return out;
}

// ---- boundary points

std::string point_str(const BoundaryPoint& p, const VertexString& V) {
    std::string s = p.sign < 0 ? "-" : "";
    if (p.kind == BoundaryPoint::Kind::Q) s += "Q_{" + V.name(p.i).str() + "," + V.name(p.j).str() + "}";
    else s += "R_{" + V.name(p.i).str() + "," + V.name(p.v).str() + "," + V.name(p.j).str() + "}";
    return s + "(" + std::to_string(p.level) + ")";
}

std::string saddle_str(const Saddle& s, const VertexString& V) {
    auto vs = s.vertices;
    std::sort(vs.begin(), vs.end());
    std::string inner;
    for (std::size_t t = 0; t < vs.size(); ++t) inner += (t ? "," : "") + V.name(vs[t]).str();
    if (s.sign == 0) return "[" + inner + "]";
    return "[[" + inner + "]," + std::to_string(s.sign) + "]";
}

std::string boundary_str(const BoundaryCode& bc) {
    std::string s = "{";
    for (std::size_t t = 0; t < bc.boundary.size(); ++t)
        s += (t ? "," : "") + point_str(bc.boundary[t], bc.vertices);
    s += "} bb={";
    for (std::size_t t = 0; t < bc.bb.size(); ++t)
        s += (t ? "," : "") + saddle_str(bc.bb[t], bc.vertices) + "(" + std::to_string(bc.bb[t].level) + ")";
    return s + "}";
}

bool same_cyclic_boundary(const BoundaryCode& a, const BoundaryCode& b) {
    if (!(a.vertices == b.vertices) || a.boundary.size() != b.boundary.size()) return false;
    auto sortedBb = [](std::vector<Saddle> v) {
        for (auto& s : v) std::sort(s.vertices.begin(), s.vertices.end());
        std::sort(v.begin(), v.end(), [](const Saddle& x, const Saddle& y) { return x.level < y.level; });
        return v;
    };
    if (sortedBb(a.bb) != sortedBb(b.bb)) return false;
    std::size_t n = a.boundary.size();
    if (n == 0) return true;
    for (std::size_t r = 0; r < n; ++r) {
        bool eq = true;
        for (std::size_t t = 0; t < n && eq; ++t) eq = a.boundary[t] == b.boundary[(t + r) % n];
        if (eq) return true;
    }
    return false;
}

BoundaryCode boundary_code(const SaddleCode& c) {
    auto rows = partner_rows(c);
    if (!rows.ok()) throw BadCode(rows.why);
    const auto& V = c.vertices;
    int m = c.levels();
    BoundaryCode bc;
    bc.vertices = V;
    std::vector<std::vector<bool>> isFree(m, std::vector<bool>(V.size(), false));
    std::size_t states = 0;
    for (int r = 0; r < m; ++r) {
        std::vector<bool> taken(V.size(), false);
        for (int x : rows.partner[r])
            if (x >= 0) taken[x] = true;
        for (int p : V.positives())
            if (!taken[p]) {
                isFree[r][p] = true;
                ++states;
            }
    }
    int r0 = -1, p0 = -1;
    for (int r = 0; r < m && r0 < 0; ++r)
        for (int p : V.positives())
            if (isFree[r][p]) {
                r0 = r;
                p0 = p;
                break;
            }
    if (r0 < 0) throw BadCode("no boundary: every positive vertex is paired");
    std::vector<std::vector<bool>> seen(m, std::vector<bool>(V.size(), false));
    int r = r0, p = p0;
    std::size_t visited = 0;
    do {
        if (!isFree[r][p] || seen[r][p]) throw BadCode("boundary walk leaves the a-arcs");
        seen[r][p] = true;
        ++visited;
        int k = (r + 1) % m;
        const auto& s = c.saddles[k];
        auto kind = saddle_kind(s, V);
        if (kind == SaddleKind::aa) {
            auto [a, b] = positive_pair(s, V);
            if (p == a || p == b) {
                int q = p == a ? b : a;
                bc.boundary.push_back({BoundaryPoint::Kind::Q, p, -1, q, s.sign, k + 1});
                p = q;
            }
        } else if (kind == SaddleKind::ab) {
            auto mv = saddle_moves(s, V).at(0);
            if (p == mv.to) {
                bc.boundary.push_back({BoundaryPoint::Kind::R, mv.to, mv.v, mv.from, s.sign, k + 1});
                p = mv.from;
            }
        }
        r = k;
    } while (r != r0 || p != p0);
    if (visited != states) throw BadCode("boundary is not a single circle");
    for (auto& s : c.saddles)
        if (saddle_kind(s, V) == SaddleKind::bb) bc.bb.push_back(s);
    return bc;
}

SaddleCode saddle_code(const BoundaryCode& bc) {
    const auto& V = bc.vertices;
    int m = bc.levels();
    std::vector<std::array<const BoundaryPoint*, 2>> byLevel(m + 1, {nullptr, nullptr});
    std::vector<int> count(m + 1, 0);
    for (auto& pt : bc.boundary) {
        if (pt.level < 1 || pt.level > m) throw BadCode("boundary point level out of range");
        if (count[pt.level] < 2) byLevel[pt.level][count[pt.level]] = &pt;
        ++count[pt.level];
    }
    std::vector<Saddle> sad(m);
    std::vector<bool> have(m + 1, false);
    for (auto& s : bc.bb) {
        if (s.level < 1 || s.level > m || have[s.level]) throw BadCode("bad bb-saddle level");
        have[s.level] = true;
        sad[s.level - 1] = s;
    }
    using K = BoundaryPoint::Kind;
    for (int l = 1; l <= m; ++l) {
        const auto& pts = byLevel[l];
        if (have[l]) {
            if (count[l]) throw BadCode("bb level also carries boundary points");
            continue;
        }
        Saddle s;
        s.level = l;
        if (count[l] == 2 && pts[0]->kind == K::Q && pts[1]->kind == K::Q) {
            if (pts[0]->i != pts[1]->j || pts[0]->j != pts[1]->i || pts[0]->sign != pts[1]->sign)
                throw BadCode("unmatched Q-points at level " + std::to_string(l));
            s.vertices = {pts[0]->i, pts[0]->j};
            s.sign = pts[0]->sign;
        } else if (count[l] == 1 && pts[0]->kind == K::R) {
            s.vertices = {pts[0]->i, pts[0]->v, pts[0]->j};
            s.sign = pts[0]->sign;
        } else {
            throw BadCode("level " + std::to_string(l) + " has no consistent saddle");
        }
        sad[l - 1] = std::move(s);
    }
    for (auto& s : sad) std::sort(s.vertices.begin(), s.vertices.end());
    return {V, std::move(sad)};
}

SaddleCode positive_disc(const BraidWord& w) {
    SaddleCode c;
    c.vertices = VertexString(std::vector<bool>(w.strands(), true));
    for (std::size_t k = 0; k < w.size(); ++k)
        c.saddles.push_back({{w[k].gen.j - 1, w[k].gen.i - 1}, w[k].sign, static_cast<int>(k) + 1});
    return c;
}

BoundaryCode generate_disc_boundary(int n, const BraidWord& w) {
    if (w.strands() != n || !is_good_word(w)) throw NotGoodWord(w.str() + " is not a good word in B_" + std::to_string(n));
    return boundary_code(positive_disc(w));
}

// ---- classification

std::vector<VertexInfo> classify_vertices(const SaddleCode& c) {
    auto rows = partner_rows(c);
    if (!rows.ok()) throw BadCode(rows.why);
    const auto& V = c.vertices;
    int m = c.levels();
    std::vector<std::vector<bool>> paired(m, std::vector<bool>(V.size(), false));
    for (int r = 0; r < m; ++r)
        for (int x : rows.partner[r])
            if (x >= 0) paired[r][x] = true;
    std::vector<VertexInfo> out(V.size());
    for (int k = 0; k < m; ++k) {
        const auto& s = c.saddles[k];
        for (int x : s.vertices) {
            auto& info = out[x];
            ++info.valence;
            info.type += (!V.positive(x) || paired[k][x]) ? 'b' : 'a';
            info.signs += s.sign > 0 ? '+' : (s.sign < 0 ? '-' : '0');
        }
    }
    for (int x = 0; x < V.size(); ++x) {
        if (!V.positive(x) || out[x].valence != 1) continue;
        for (auto& s : c.saddles)
            if (std::find(s.vertices.begin(), s.vertices.end(), x) != s.vertices.end())
                out[x].endTile = saddle_kind(s, V) == SaddleKind::aa;
    }
    return out;
}

bool has_end_tile(const SaddleCode& c) {
    for (auto& v : classify_vertices(c))
        if (v.endTile) return true;
    return false;
}

bool has_exchange_vertex(const std::vector<VertexInfo>& info, char t1, char t2) {
    std::string want{t1, t2};
    std::sort(want.begin(), want.end());
    for (auto& v : info) {
        if (v.valence != 2) continue;
        auto t = v.type;
        std::sort(t.begin(), t.end());
        auto s = v.signs;
        std::sort(s.begin(), s.end());
        if (t == want && s == "+-") return true;
    }
    return false;
}

SaddleCode remove_end_tile(const SaddleCode& c, int position) {
    auto info = classify_vertices(c);
    if (position < 0 || position >= c.vertices.size() || !info[position].endTile)
        throw NotEndTile("vertex is not an end-tile");
    SaddleCode out;
    out.vertices = c.vertices.with_removed(position);
    for (auto& s : c.saddles) {
        if (std::find(s.vertices.begin(), s.vertices.end(), position) != s.vertices.end()) continue;
        Saddle t = s;
        for (int& x : t.vertices)
            if (x > position) --x;
        t.level = static_cast<int>(out.saddles.size()) + 1;
        out.saddles.push_back(std::move(t));
    }
    return out;
}

SaddleCode invert_code(const SaddleCode& c) {
    SaddleCode out;
    out.vertices = c.vertices;
    for (auto it = c.saddles.rbegin(); it != c.saddles.rend(); ++it) {
        Saddle t = *it;
        t.sign = -t.sign;
        t.level = static_cast<int>(out.saddles.size()) + 1;
        out.saddles.push_back(std::move(t));
    }
    return out;
}

BoundaryCode rewrite_code_after_relation(const BoundaryCode& bc, std::size_t pos, Relation r) {
    if (bc.vertices.N() != 0) throw NotApplicable("code rewriting is defined for positive discs only");
    auto ew = extended_word(saddle_code(bc));
    return generate_disc_boundary(ew.strands(), apply_band_relation(ew, pos, r));
}

// ---- canonical keys

namespace {

using Block = std::array<int, 6>;

// rotation r and level shift sh giving the least encoding
std::pair<int, int> best_frame(const SaddleCode& c, std::vector<std::vector<Block>>* blocksOut = nullptr) {
    int L = c.vertices.size(), m = c.levels();
    std::string bits = c.vertices.bits();
    std::vector<int> rs;
    std::string bestBits;
    for (int r = 0; r < L; ++r) {
        std::string rb = bits.substr(r) + bits.substr(0, r);
        if (rs.empty() || rb < bestBits) {
            rs = {r};
            bestBits = rb;
        } else if (rb == bestBits) {
            rs.push_back(r);
        }
    }
    std::vector<std::vector<Block>> blocks(rs.size(), std::vector<Block>(m));
    for (std::size_t t = 0; t < rs.size(); ++t)
        for (int k = 0; k < m; ++k) {
            const auto& s = c.saddles[k];
            Block b;
            b.fill(-1);
            b[0] = static_cast<int>(s.vertices.size());
            for (std::size_t q = 0; q < s.vertices.size() && q < 4; ++q) b[1 + q] = ((s.vertices[q] - rs[t]) % L + L) % L;
            std::sort(b.begin() + 1, b.begin() + 1 + std::min<int>(b[0], 4));
            b[5] = s.sign;
            blocks[t][k] = b;
        }
    std::size_t bt = 0;
    int bs = 0;
    for (std::size_t t = 0; t < rs.size(); ++t)
        for (int sh = 0; sh < m; ++sh) {
            if (t == 0 && sh == 0) continue;
            for (int k = 0; k < m; ++k) {
                const auto& x = blocks[t][(k + sh) % m];
                const auto& y = blocks[bt][(k + bs) % m];
                if (x == y) continue;
                if (x < y) {
                    bt = t;
                    bs = sh;
                }
                break;
            }
        }
    int r = rs.empty() ? 0 : rs[bt];
    if (blocksOut) {
        std::vector<std::vector<Block>> one{std::move(blocks[bt])};
        *blocksOut = std::move(one);
    }
    return {r, bs};
}

}  // namespace

std::vector<int> disc_key(const SaddleCode& c) {
    std::vector<std::vector<Block>> blocks;
    auto [r, sh] = best_frame(c, &blocks);
    int L = c.vertices.size(), m = c.levels();
    std::vector<int> key;
    key.reserve(L + 6 * m);
    for (int t = 0; t < L; ++t) key.push_back(c.vertices.positive((t + r) % L));
    for (int k = 0; k < m; ++k) key.insert(key.end(), blocks[0][(k + sh) % m].begin(), blocks[0][(k + sh) % m].end());
    return key;
}

SaddleCode canonical_code(const SaddleCode& c) {
    auto [br, bs] = best_frame(c);
    int L = c.vertices.size();
    SaddleCode out;
    out.vertices = c.vertices.rotated(br);
    for (int k = 0; k < c.levels(); ++k) {
        Saddle s = c.saddles[(k + bs) % c.levels()];
        for (int& x : s.vertices) x = ((x - br) % L + L) % L;
        std::sort(s.vertices.begin(), s.vertices.end());
        s.level = k + 1;
        out.saddles.push_back(std::move(s));
    }
    return out;
}

// ---- bracket notation

namespace {

struct Node {
    bool bar = false;
    bool list = false;
    std::string atom;
    std::vector<Node> items;
};

struct BracketParser {
    std::string_view s;
    std::size_t p = 0;

    void ws() {
        while (p < s.size() && (std::isspace(static_cast<unsigned char>(s[p])) || s[p] == '{' || s[p] == '}' || s[p] == '\\'))
            ++p;
    }
    Node node() {
        ws();
        Node n;
        if (p < s.size() && (s[p] == '-' || s[p] == '~') && p + 1 < s.size() && s[p + 1] == '[') {
            n.bar = true;
            ++p;
        }
        if (p < s.size() && s[p] == '[') {
            ++p;
            n.list = true;
            ws();
            if (p < s.size() && s[p] == ']') {
                ++p;
                return n;
            }
            while (true) {
                n.items.push_back(node());
                ws();
                if (p < s.size() && s[p] == ',') {
                    ++p;
                    continue;
                }
                if (p < s.size() && s[p] == ']') {
                    ++p;
                    break;
                }
                throw ParseError("expected ',' or ']' in bracket code at offset " + std::to_string(p));
            }
            return n;
        }
        std::size_t b = p;
        while (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '.' || s[p] == '-' || s[p] == '+'))
            ++p;
        if (b == p) throw ParseError("unexpected character in bracket code at offset " + std::to_string(p));
        n.atom = std::string(s.substr(b, p - b));
        return n;
    }
};

bool flat(const Node& n) {
    return n.list && !n.items.empty() && std::all_of(n.items.begin(), n.items.end(), [](const Node& x) { return !x.list; });
}

bool signed_item(const Node& n) {
    return n.list && n.items.size() == 2 && flat(n.items[0]) && !n.items[1].list;
}

}  // namespace

SaddleCode parse_bracket_code(std::string_view text, int P, int aaSign) {
    BracketParser bp{text};
    std::vector<Node> top;
    while (true) {
        bp.ws();
        if (bp.p >= text.size()) break;
        top.push_back(bp.node());
        bp.ws();
        if (bp.p < text.size() && text[bp.p] == ',') ++bp.p;
    }
    if (top.size() == 1 && top[0].list && !signed_item(top[0]) && !flat(top[0])) {
        auto inner = std::move(top[0].items);
        top = std::move(inner);
    }
    struct Raw {
        std::vector<VertexName> names;
        int sign;
    };
    std::vector<Raw> raws;
    std::vector<VertexName> all;
    for (auto& n : top) {
        Raw r;
        const Node* list = nullptr;
        if (signed_item(n)) {
            list = &n.items[0];
            r.sign = std::stoi(n.items[1].atom);
            if (n.bar || list->bar) r.sign = -r.sign;
        } else if (flat(n)) {
            list = &n;
            r.sign = n.bar ? -1 : (n.items.size() == 2 ? aaSign : 1);
        } else {
            throw ParseError("unrecognised saddle entry in bracket code");
        }
        for (auto& a : list->items) r.names.push_back(VertexName::parse(a.atom));
        all.insert(all.end(), r.names.begin(), r.names.end());
        raws.push_back(std::move(r));
    }
    int maxK = P;
    for (auto& v : all) maxK = std::max(maxK, v.positive() ? v.k : v.k);
    for (int k = 1; k <= maxK; ++k) all.push_back({k, 0});
    SaddleCode c;
    c.vertices = VertexString::from_names(all);
    for (std::size_t k = 0; k < raws.size(); ++k) {
        Saddle s;
        for (auto& v : raws[k].names) s.vertices.push_back(c.vertices.position(v));
        std::sort(s.vertices.begin(), s.vertices.end());
        s.sign = raws[k].sign;
        s.level = static_cast<int>(k) + 1;
        c.saddles.push_back(std::move(s));
    }
    return c;
}

std::string bracket_str(const SaddleCode& c) {
    std::string s;
    for (std::size_t k = 0; k < c.saddles.size(); ++k) s += (k ? "," : "") + saddle_str(c.saddles[k], c.vertices);
    return s;
}

}  // namespace foliage
