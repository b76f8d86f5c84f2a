#include "foliage/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "foliage/errors.hpp"

namespace foliage {

namespace {

std::string name_of(int p, const VertexString& V) { return V.name(p).str(); }

int position_of(const json& j, const VertexString& V) { return V.position(VertexName::parse(j.get<std::string>())); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

// ---- braid words

json to_json(const Letter& l) { return l.str(); }

Letter letter_from_json(const json& j) {
    auto w = parse_word(j.get<std::string>());
    if (w.size() != 1) throw ParseError("expected a single letter");
    return w[0];
}

json to_json(const BraidWord& w) {
    json ls = json::array();
    for (auto& l : w.letters()) ls.push_back(to_json(l));
    return {{"strands", w.strands()}, {"letters", ls}};
}

BraidWord word_from_json(const json& j) {
    int n = field(j, "strands").get<int>();
    std::vector<Letter> ls;
    for (auto& x : field(j, "letters")) ls.push_back(letter_from_json(x));
    return BraidWord(n, std::move(ls));
}

json to_json(const Permutation& p) { return {{"images", p.images()}, {"cycles", p.str()}}; }

Permutation permutation_from_json(const json& j) { return Permutation(field(j, "images").get<std::vector<int>>()); }

json to_json(const BoundaryWord& bw) {
    json ts = json::array();
    for (auto& t : bw.tokens) ts.push_back(token_str(t));
    return {{"strands", bw.n}, {"tokens", ts}};
}

BoundaryWord boundary_word_from_json(const json& j) {
    std::string text;
    for (auto& t : field(j, "tokens")) text += t.get<std::string>() + " ";
    return parse_boundary_word(text, field(j, "strands").get<int>());
}

// ---- codes

json to_json(const VertexString& V) {
    json a = json::array();
    for (int p = 0; p < V.size(); ++p) a.push_back(name_of(p, V));
    return a;
}

VertexString vertex_string_from_json(const json& j) {
    std::vector<VertexName> names;
    for (auto& x : j) names.push_back(VertexName::parse(x.get<std::string>()));
    auto V = VertexString::from_names(names);
    if (V.size() != static_cast<int>(j.size())) throw ParseError("repeated vertex in vertex string");
    return V;
}

json to_json(const Saddle& s, const VertexString& V) {
    json vs = json::array();
    for (int x : s.vertices) vs.push_back(name_of(x, V));
    return {{"vertices", vs}, {"sign", s.sign}, {"level", s.level}};
}

Saddle saddle_from_json(const json& j, const VertexString& V) {
    Saddle s;
    for (auto& x : field(j, "vertices")) s.vertices.push_back(position_of(x, V));
    std::sort(s.vertices.begin(), s.vertices.end());
    s.sign = field(j, "sign").get<int>();
    s.level = field(j, "level").get<int>();
    return s;
}

json to_json(const SaddleCode& c) {
    json j{{"P", c.P()}, {"N", c.N()}, {"vertexString", to_json(c.vertices)}};
    json ss = json::array();
    for (auto& s : c.saddles) ss.push_back(to_json(s, c.vertices));
    j["saddles"] = ss;
    try {
        auto bw = to_json(boundary_braid(c));
        j["boundaryWord"] = bw["tokens"];
    } catch (const Error&) {
    }
    return j;
}

SaddleCode code_from_json(const json& j) {
    SaddleCode c;
    c.vertices = vertex_string_from_json(field(j, "vertexString"));
    if (j.contains("P") && j["P"].get<int>() != c.P()) throw ParseError("P does not match the vertex string");
    if (j.contains("N") && j["N"].get<int>() != c.N()) throw ParseError("N does not match the vertex string");
    for (auto& s : field(j, "saddles")) c.saddles.push_back(saddle_from_json(s, c.vertices));
    std::sort(c.saddles.begin(), c.saddles.end(), [](const Saddle& a, const Saddle& b) { return a.level < b.level; });
    return c;
}

json to_json(const BoundaryPoint& p, const VertexString& V) {
    json j{{"kind", p.kind == BoundaryPoint::Kind::Q ? "Q" : "R"}, {"i", name_of(p.i, V)}, {"j", name_of(p.j, V)},
           {"sign", p.sign}, {"level", p.level}};
    if (p.kind == BoundaryPoint::Kind::R) j["v"] = name_of(p.v, V);
    return j;
}

BoundaryPoint point_from_json(const json& j, const VertexString& V) {
    BoundaryPoint p;
    auto kind = field(j, "kind").get<std::string>();
    if (kind != "Q" && kind != "R") throw ParseError("boundary point kind must be Q or R");
    p.kind = kind == "Q" ? BoundaryPoint::Kind::Q : BoundaryPoint::Kind::R;
    p.i = position_of(field(j, "i"), V);
    p.j = position_of(field(j, "j"), V);
    if (p.kind == BoundaryPoint::Kind::R) p.v = position_of(field(j, "v"), V);
    p.sign = field(j, "sign").get<int>();
    p.level = field(j, "level").get<int>();
    return p;
}

json to_json(const BoundaryCode& bc) {
    json pts = json::array(), bb = json::array();
    for (auto& p : bc.boundary) pts.push_back(to_json(p, bc.vertices));
    for (auto& s : bc.bb) bb.push_back(to_json(s, bc.vertices));
    return {{"P", bc.vertices.P()}, {"N", bc.vertices.N()}, {"vertexString", to_json(bc.vertices)}, {"boundary", pts}, {"bb", bb}};
}

BoundaryCode boundary_code_from_json(const json& j) {
    BoundaryCode bc;
    bc.vertices = vertex_string_from_json(field(j, "vertexString"));
    for (auto& p : field(j, "boundary")) bc.boundary.push_back(point_from_json(p, bc.vertices));
    for (auto& s : field(j, "bb")) bc.bb.push_back(saddle_from_json(s, bc.vertices));
    return bc;
}

// ---- enumeration objects

json to_json(const Necklace& n) { return n.str(); }

Necklace necklace_from_json(const json& j) {
    Necklace n;
    for (char ch : j.get<std::string>()) {
        if (ch < '0' || ch > '9') throw ParseError("necklace digits must be 0-9");
        n.digits.push_back(ch - '0');
    }
    return n;
}

json to_json(const HalfPlane& h) {
    json a = json::array();
    for (std::size_t x = 0; x < h.partner.size(); ++x) a.push_back({{"v", h.partner[x] + 1}, {"c", h.region[x]}});
    return a;
}

HalfPlane half_plane_from_json(const json& j) {
    HalfPlane h;
    for (auto& r : j) {
        h.partner.push_back(field(r, "v").get<int>() - 1);
        h.region.push_back(field(r, "c").get<int>());
    }
    return h;
}

json to_json(const ThetaCycle& c) {
    json a = json::array();
    for (auto& s : c.steps) a.push_back({{"node", s.node}, {"saddle", s.saddle}});
    return {{"steps", a}};
}

ThetaCycle cycle_from_json(const json& j) {
    ThetaCycle c;
    for (auto& s : field(j, "steps")) c.steps.push_back({field(s, "node").get<int>(), field(s, "saddle").get<int>()});
    return c;
}

json to_json(const InsertionArc& a, const VertexString& V, int m) {
    json pts = json::array();
    for (auto& p : a.points) pts.push_back(to_json(p, V));
    auto ranges = [](const std::vector<CyclicInterval>& iv) {
        json r = json::array();
        for (auto& x : iv) r.push_back({x.lo, x.hi});
        return r;
    };
    return {{"start", a.start},
            {"length", a.length},
            {"points", pts},
            {"initial", name_of(a.initial, V)},
            {"final", name_of(a.final, V)},
            {"vSlots", a.vSlots},
            {"xGaps", a.xGaps},
            {"positiveSlots", a.positiveSlots},
            {"negativeSlots", a.negativeSlots},
            {"vRange", ranges(a.v_ranges(V.P()))},
            {"xRange", ranges(a.x_ranges(m))}};
}

InsertionArc arc_from_json(const json& j, const VertexString& V) {
    InsertionArc a;
    a.start = field(j, "start").get<std::size_t>();
    a.length = field(j, "length").get<std::size_t>();
    for (auto& p : field(j, "points")) a.points.push_back(point_from_json(p, V));
    a.initial = position_of(field(j, "initial"), V);
    a.final = position_of(field(j, "final"), V);
    a.vSlots = field(j, "vSlots").get<std::vector<int>>();
    a.xGaps = field(j, "xGaps").get<std::vector<int>>();
    a.positiveSlots = field(j, "positiveSlots").get<std::vector<int>>();
    a.negativeSlots = field(j, "negativeSlots").get<std::vector<int>>();
    return a;
}

json to_json(const CycleRecord& r, const CycleReport& rep) {
    json j = to_json(r.code);
    j["string"] = rep.strings.at(r.string).bits();
    j["endTileFree"] = r.endTileFree;
    j["cycle"] = to_json(r.cycle)["steps"];
    return j;
}

SaddleCode read_code(const std::string& text) {
    auto b = text.find_first_not_of(" \t\r\n");
    if (b != std::string::npos && text[b] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad JSON: ") + e.what());
        }
        try {
            return code_from_json(j);
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad code document: ") + e.what());
        }
    }
    return parse_bracket_code(text);
}

// ---- cycles from codes

ThetaCycle theta_cycle(const HalfPlaneGraph& G, const SaddleCode& c) {
    if (!(G.vertices == c.vertices)) throw BadCode("code and graph have different vertex strings");
    auto rows = partner_rows(c);
    if (!rows.ok()) throw BadCode(rows.why);
    int m = c.levels();
    ThetaCycle out;
    for (int k = 0; k < m; ++k) {
        const auto& pr = rows.partner[(k - 1 + m) % m];
        std::vector<int> partner(c.vertices.size(), -1);
        for (int v = 0; v < c.vertices.size(); ++v)
            if (pr[v] >= 0) {
                partner[v] = pr[v];
                partner[pr[v]] = v;
            }
        auto it = std::find_if(G.nodes.begin(), G.nodes.end(), [&](const HalfPlane& h) { return h.partner == partner; });
        if (it == G.nodes.end()) throw BadCode("level " + std::to_string(k + 1) + " is preceded by an inessential half-plane");
        const auto& s = c.saddles[k];
        bool aa = s.vertices.size() == 2;
        int id = -1;
        for (std::size_t t = 0; t < G.catalog.size() && id < 0; ++t)
            if (G.catalog[t].vertices == s.vertices && (aa ? G.catalog[t].sign == 0 : G.catalog[t].sign == s.sign))
                id = static_cast<int>(t);
        if (id < 0) throw BadCode("saddle at level " + std::to_string(k + 1) + " is not a transition of the graph");
        out.steps.push_back({static_cast<int>(it - G.nodes.begin()), id});
    }
    return out;
}

// ---- pictures

std::string render_film(const HalfPlaneGraph& G, const ThetaCycle& c) {
    const auto& V = G.vertices;
    int L = V.size();
    int n = static_cast<int>(c.steps.size());
    const double panel = 110, gap = 28, top = 48, left = 24;
    double width = left * 2 + panel * std::max(n, 1);
    double height = top + gap * (L + 1) + 40;
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
      << width << ' ' << height << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<g font-family=\"sans-serif\" font-size=\"10\">\n";
    auto y = [&](int p) { return top + gap * (p + 1); };
    for (int k = 0; k < n; ++k) {
        const auto& h = G.nodes.at(c.steps[k].node);
        double x = left + panel * k;
        o << "<g class=\"panel\" id=\"panel" << k + 1 << "\">\n";
        o << "<line x1=\"" << x << "\" y1=\"" << top << "\" x2=\"" << x << "\" y2=\"" << y(L - 1) + gap
          << "\" stroke=\"black\"/>\n";
        for (int v = 0; v < L; ++v) {
            int p = h.partner[v];
            if (V.positive(v) || p < 0) continue;
            double bulge = std::min(panel - 30, 10.0 + 7.0 * std::abs(p - v));
            o << "<path d=\"M " << x << ' ' << y(v) << " C " << x + bulge << ' ' << y(v) << ' ' << x + bulge << ' ' << y(p)
              << ' ' << x << ' ' << y(p) << "\" fill=\"none\" stroke=\"#1f5fa8\"/>\n";
        }
        for (int v = 0; v < L; ++v) {
            o << "<circle cx=\"" << x << "\" cy=\"" << y(v) << "\" r=\"4\" stroke=\"black\" fill=\""
              << (V.positive(v) ? "black" : "white") << "\"/>\n";
            o << "<text x=\"" << x - 6 << "\" y=\"" << y(v) + 3 << "\" text-anchor=\"end\">" << name_of(v, V) << "</text>\n";
        }
        const auto& s = G.catalog.at(c.steps[k].saddle);
        std::string label = s.sign > 0 ? "+[" : (s.sign < 0 ? "-[" : "[");
        for (std::size_t t = 0; t < s.vertices.size(); ++t) label += (t ? "," : "") + name_of(s.vertices[t], V);
        label += "]";
        o << "<text x=\"" << x + panel / 2 << "\" y=\"" << top - 16 << "\" text-anchor=\"middle\">" << k + 1 << ": "
          << label << "</text>\n";
        o << "</g>\n";
    }
    auto code = cycle_code(G, c);
    for (auto& s : code.saddles)
        if (s.sign == 0) s.sign = 1;
    std::string footer;
    try {
        footer = "BW = " + boundary_braid(code).str();
    } catch (const Error&) {
        footer = "no boundary word";
    }
    o << "<text x=\"" << left << "\" y=\"" << height - 14 << "\">" << footer << "</text>\n";
    o << "</g>\n</svg>\n";
    return o.str();
}

std::string export_gml(const SaddleCode& c) {
    const auto& V = c.vertices;
    std::ostringstream o;
    o << "graph [\n  directed 0\n";
    for (int p = 0; p < V.size(); ++p)
        o << "  node [ id " << p << " label \"" << name_of(p, V) << "\" name \"" << name_of(p, V)
          << "\" kind \"vertex\" sign " << (V.positive(p) ? 1 : -1) << " ]\n";
    for (std::size_t k = 0; k < c.saddles.size(); ++k) {
        const auto& s = c.saddles[k];
        o << "  node [ id " << V.size() + static_cast<int>(k) << " label \"s" << s.level << "\" name \""
          << saddle_str(s, V) << "\" kind \"" << kind_name(saddle_kind(s, V)) << "\" sign " << s.sign << " level "
          << s.level << " ]\n";
    }
    for (std::size_t k = 0; k < c.saddles.size(); ++k)
        for (int x : c.saddles[k].vertices)
            o << "  edge [ source " << V.size() + static_cast<int>(k) << " target " << x << " ]\n";
    o << "]\n";
    return o.str();
}

std::string export_gml(const HalfPlaneGraph& G, const ThetaCycle& c) { return export_gml(cycle_code(G, c)); }

}  // namespace foliage
