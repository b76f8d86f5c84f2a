#include "foliage/braid.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "foliage/errors.hpp"

namespace foliage {

BandGenerator::BandGenerator(int a, int b) {
    if (a == b || a < 1 || b < 1)
        throw ParseError("bad band generator (" + std::to_string(a) + "," + std::to_string(b) + ")");
    i = std::max(a, b);
    j = std::min(a, b);
}

bool BandGenerator::shares_index(const BandGenerator& o) const {
    return i == o.i || i == o.j || j == o.i || j == o.j;
}

Letter::Letter(int a, int b, int s) : gen(a, b), sign(s) {
    if (s != 1 && s != -1) throw ParseError("letter sign must be +1 or -1");
}

std::string Letter::str() const {
    return (sign < 0 ? "-(" : "(") + std::to_string(gen.i) + "," + std::to_string(gen.j) + ")";
}

bool letter_less(const Letter& a, const Letter& b) {
    if (a.gen.i != b.gen.i) return a.gen.i < b.gen.i;
    if (a.gen.j != b.gen.j) return a.gen.j < b.gen.j;
    return a.sign > b.sign;
}

// ---- Permutation

Permutation::Permutation(int n) : img_(n) {
    for (int k = 0; k < n; ++k) img_[k] = k + 1;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int x : img_) {
        if (x < 1 || x > size() || seen[x]) throw ParseError("not a permutation");
        seen[x] = true;
    }
}

void Permutation::swap_values(int a, int b) {
    for (int& x : img_) {
        if (x == a) x = b;
        else if (x == b) x = a;
    }
}

Permutation Permutation::then(const Permutation& q) const {
    std::vector<int> r(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) r[k] = q(img_[k]);
    return Permutation(std::move(r));
}

Permutation Permutation::inverse() const {
    std::vector<int> r(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) r[img_[k] - 1] = static_cast<int>(k) + 1;
    return Permutation(std::move(r));
}

Permutation Permutation::conjugate_shift(int k) const {
    int n = size();
    if (n == 0) return *this;
    auto sh = [&](int x) { return ((x - 1 + k) % n + n) % n + 1; };
    std::vector<int> r(n);
    for (int x = 1; x <= n; ++x) r[sh(x) - 1] = sh((*this)(x));
    return Permutation(std::move(r));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size() + 1, false);
    for (int s = 1; s <= size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        for (int x = s; !seen[x]; x = (*this)(x)) {
            seen[x] = true;
            c.push_back(x);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> Permutation::fixed_points() const {
    std::vector<int> out;
    for (int x = 1; x <= size(); ++x)
        if ((*this)(x) == x) out.push_back(x);
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> t;
    for (auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
    std::sort(t.begin(), t.end());
    return t;
}

bool Permutation::is_full_cycle() const {
    auto c = cycles();
    return c.size() == 1 && size() > 0;
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= size(); ++x)
        if ((*this)(x) != x) return false;
    return true;
}

std::string Permutation::str() const {
    std::string s;
    for (auto& c : cycles()) {
        s += "(";
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(c[k]);
        }
        s += ")";
    }
    return s;
}

// ---- BraidWord

BraidWord::BraidWord(int n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
    for (auto& l : letters_)
        if (l.gen.i > n_) throw ParseError("letter " + l.str() + " exceeds strand count " + std::to_string(n_));
}

int BraidWord::exponent_sum() const {
    int s = 0;
    for (auto& l : letters_) s += l.sign;
    return s;
}

std::string BraidWord::str() const {
    std::string s;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (k) s += " ";
        s += letters_[k].str();
    }
    return s;
}

bool word_less(const BraidWord& a, const BraidWord& b) {
    return std::lexicographical_compare(a.letters().begin(), a.letters().end(), b.letters().begin(),
                                        b.letters().end(), letter_less);
}

namespace {

struct Scanner {
    std::string_view s;
    std::size_t p = 0;

    void skip() {
        while (p < s.size() && (std::isspace(static_cast<unsigned char>(s[p])) || s[p] == ',' || s[p] == '*'))
            ++p;
    }
    bool done() {
        skip();
        return p >= s.size();
    }
    bool eat(char c) {
        if (p < s.size() && s[p] == c) {
            ++p;
            return true;
        }
        return false;
    }
    void expect(char c) {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(p));
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    int integer() {
        std::size_t b = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (b == p) throw ParseError("expected integer at offset " + std::to_string(b));
        return std::stoi(std::string(s.substr(b, p - b)));
    }
    std::pair<int, int> pair() {
        expect('(');
        int a = integer();
        expect(',');
        int b = integer();
        expect(')');
        return {a, b};
    }
};

}  // namespace

BraidWord parse_word(std::string_view text, int n) {
    Scanner sc{text};
    std::vector<Letter> ls;
    int mx = 0;
    while (!sc.done()) {
        int sign = sc.eat('-') ? -1 : 1;
        auto [a, b] = sc.pair();
        ls.emplace_back(a, b, sign);
        mx = std::max(mx, ls.back().gen.i);
    }
    return BraidWord(n > 0 ? n : mx, std::move(ls));
}

Permutation induced_permutation(const BraidWord& w) {
    Permutation p(w.strands());
    for (auto& l : w.letters()) p.swap_values(l.gen.i, l.gen.j);
    return p;
}

bool is_good_word(const BraidWord& w) {
    if (w.strands() < 1 || static_cast<int>(w.size()) != w.strands() - 1) return false;
    return induced_permutation(w).is_full_cycle();
}

BraidWord delta_conjugate(const BraidWord& w, int k) {
    int n = w.strands();
    if (n == 0) return w;
    auto sh = [&](int x) { return ((x - 1 + k) % n + n) % n + 1; };
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto& l : w.letters()) out.emplace_back(sh(l.gen.i), sh(l.gen.j), l.sign);
    return BraidWord(n, std::move(out));
}

BraidWord rotate_conjugate(const BraidWord& w, int k) {
    auto ls = w.letters();
    if (ls.empty()) return w;
    int len = static_cast<int>(ls.size());
    k = ((k % len) + len) % len;
    std::rotate(ls.begin(), ls.begin() + k, ls.end());
    return BraidWord(w.strands(), std::move(ls));
}

BraidWord canonical_form(const BraidWord& w) {
    BraidWord best = w;
    int n = std::max(1, w.strands());
    int len = std::max<int>(1, static_cast<int>(w.size()));
    for (int k = 0; k < n; ++k) {
        BraidWord d = delta_conjugate(w, k);
        for (int r = 0; r < len; ++r) {
            BraidWord c = rotate_conjugate(d, r);
            if (word_less(c, best)) best = std::move(c);
        }
    }
    return best;
}

BraidWord invert_word(const BraidWord& w) {
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    for (auto& l : out) l.sign = -l.sign;
    return BraidWord(w.strands(), std::move(out));
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<Letter> st;
    for (auto& l : w.letters()) {
        if (!st.empty() && st.back().gen == l.gen && st.back().sign == -l.sign) st.pop_back();
        else st.push_back(l);
    }
    return BraidWord(w.strands(), std::move(st));
}

// ---- relations

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::Commute: return "commute";
        case Relation::TripleForward: return "forward";
        case Relation::TripleBackward: return "backward";
        case Relation::Mixed: return "mixed";
    }
    return "?";
}

Relation parse_relation(std::string_view s) {
    if (s == "commute") return Relation::Commute;
    if (s == "forward") return Relation::TripleForward;
    if (s == "backward") return Relation::TripleBackward;
    if (s == "mixed") return Relation::Mixed;
    throw ParseError("unknown relation " + std::string(s));
}

namespace {

using Pair2 = std::pair<Letter, Letter>;

bool commutes(const BandGenerator& a, const BandGenerator& b) {
    long long v = 1LL * (a.i - b.i) * (a.i - b.j) * (a.j - b.i) * (a.j - b.j);
    return v > 0;
}

// The three positive forms (ij)(jk), (jk)(ik), (ik)(ij) of the same braid, i > j > k.
std::array<std::pair<BandGenerator, BandGenerator>, 3> triple_forms(int i, int j, int k) {
    BandGenerator ij(i, j), jk(j, k), ik(i, k);
    return {{{ij, jk}, {jk, ik}, {ik, ij}}};
}

bool rewrite(const Letter& a, const Letter& b, Relation r, Pair2& out) {
    if (r == Relation::Commute) {
        if (!commutes(a.gen, b.gen)) return false;
        out = {b, a};
        return true;
    }
    if (a.gen == b.gen || !a.gen.shares_index(b.gen)) return false;
    std::vector<int> idx{a.gen.i, a.gen.j, b.gen.i, b.gen.j};
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    int i = idx[2], j = idx[1], k = idx[0];
    auto F = triple_forms(i, j, k);
    if (r == Relation::Mixed) {
        if (a.sign == b.sign) return false;
        // from F_s = F_t as (x y) = (z w): (y)(w)^-1 = (x)^-1 (z)
        for (int s = 0; s < 3; ++s)
            for (int t = 0; t < 3; ++t) {
                if (s == t) continue;
                Letter lhs1(F[s].second, 1), lhs2(F[t].second, -1);
                Letter rhs1(F[s].first, -1), rhs2(F[t].first, 1);
                if (a == lhs1 && b == lhs2) {
                    out = {rhs1, rhs2};
                    return true;
                }
                if (a == rhs1 && b == rhs2) {
                    out = {lhs1, lhs2};
                    return true;
                }
            }
        return false;
    }
    if (a.sign != b.sign) return false;
    int step = r == Relation::TripleForward ? 1 : 2;
    if (a.sign > 0) {
        for (int s = 0; s < 3; ++s)
            if (a.gen == F[s].first && b.gen == F[s].second) {
                auto& g = F[(s + step) % 3];
                out = {Letter(g.first, 1), Letter(g.second, 1)};
                return true;
            }
    } else {
        // negative forms are the inverses of the positive ones
        for (int s = 0; s < 3; ++s)
            if (a.gen == F[s].second && b.gen == F[s].first) {
                auto& g = F[(s + step) % 3];
                out = {Letter(g.second, -1), Letter(g.first, -1)};
                return true;
            }
    }
    return false;
}

}  // namespace

bool relation_applies(const BraidWord& w, std::size_t pos, Relation r) {
    if (pos + 1 >= w.size()) return false;
    Pair2 out;
    return rewrite(w[pos], w[pos + 1], r, out);
}

BraidWord apply_band_relation(const BraidWord& w, std::size_t pos, Relation r) {
    if (pos + 1 >= w.size()) throw NotApplicable("relation position out of range");
    Pair2 out;
    if (!rewrite(w[pos], w[pos + 1], r, out))
        throw NotApplicable(relation_name(r) + " does not apply to " + w[pos].str() + w[pos + 1].str());
    auto ls = w.letters();
    ls[pos] = out.first;
    ls[pos + 1] = out.second;
    return BraidWord(w.strands(), std::move(ls));
}

// ---- delta blocks

std::string DeltaBlock::str() const {
    return (sign < 0 ? "-d(" : "d(") + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::string token_str(const BoundaryToken& t) {
    return std::visit([](auto& x) { return x.str(); }, t);
}

std::string BoundaryWord::str() const {
    std::string s;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        if (k) s += " ";
        s += token_str(tokens[k]);
    }
    return s;
}

BoundaryWord parse_boundary_word(std::string_view text, int n) {
    Scanner sc{text};
    BoundaryWord bw;
    int mx = 0;
    while (!sc.done()) {
        int sign = sc.eat('-') ? -1 : 1;
        bool delta = sc.eat('d');
        auto [a, b] = sc.pair();
        if (delta) {
            if (a <= b) throw ParseError("delta block needs p > q");
            bw.tokens.push_back(DeltaBlock{a, b, sign});
            mx = std::max(mx, a);
        } else {
            Letter l(a, b, sign);
            bw.tokens.push_back(l);
            mx = std::max(mx, l.gen.i);
        }
    }
    bw.n = n > 0 ? n : mx;
    return bw;
}

std::vector<Letter> delta_letters(int p, int q, int sign) {
    std::vector<Letter> out;
    for (int x = p; x > q; --x) out.emplace_back(x, x - 1, 1);
    if (sign < 0) {
        std::reverse(out.begin(), out.end());
        for (auto& l : out) l.sign = -1;
    }
    return out;
}

BraidWord delta_expand(const BoundaryWord& bw) {
    std::vector<Letter> out;
    for (auto& t : bw.tokens) {
        if (auto l = std::get_if<Letter>(&t)) out.push_back(*l);
        else {
            auto& d = std::get<DeltaBlock>(t);
            auto e = delta_letters(d.p, d.q, d.sign);
            out.insert(out.end(), e.begin(), e.end());
        }
    }
    return BraidWord(bw.n, std::move(out));
}

}  // namespace foliage
