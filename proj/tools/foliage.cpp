#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "foliage/boundary.hpp"
#include "foliage/embed.hpp"
#include "foliage/errors.hpp"
#include "foliage/goodwords.hpp"
#include "foliage/hplane.hpp"
#include "foliage/insert.hpp"
#include "foliage/io.hpp"
#include "foliage/parallel.hpp"

using namespace foliage;

namespace {

struct Globals {
    bool json = false;
    std::string out;
    std::uint64_t seed = 0;
    std::size_t stopAt = 0;
    int depth = 1;
    int threads = 0;
    bool expand = false;
    std::string pairRule = pair_rule_name(kDefaultPairRule);
};

struct ValidationFailure {
    std::string what;
};

std::string slurp(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw CLI::ValidationError("--out", "cannot write " + g.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int threads_of(const Globals& g) { return g.threads > 0 ? g.threads : default_threads(); }

CycleRecord pick_cycle(const CycleReport& rep, std::size_t index, bool etfOnly) {
    std::size_t seen = 0;
    for (auto& r : rep.records) {
        if (etfOnly && !r.endTileFree) continue;
        if (seen++ == index) return r;
    }
    throw ValidationFailure{"no cycle with index " + std::to_string(index)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate and test foliated discs spanning closed braids"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "machine readable output");
    app.add_option("--out", g.out, "write output to FILE");
    app.add_option("--seed", g.seed, "seed for scrambled graphs");
    app.add_option("--stop-at", g.stopAt, "stop after K cycles (0 = all)");
    app.add_option("--depth", g.depth, "insertion depth (-1 exhausts)");
    app.add_option("--threads", g.threads, "worker threads (default FOLIAGE_THREADS or all cores)");
    app.add_flag("--expand", g.expand, "expand delta blocks and free-reduce");
    app.add_option("--pair-rule", g.pairRule, "opposite-ab | no-double-bb | shared-negative");

    int P = 0, N = 0;
    bool positiveOnly = false, etfOnly = false, scramble = false;
    std::string input, bits;
    std::size_t index = 0;
    std::string target;
    std::vector<std::string> extra;

    auto* cGood = app.add_subcommand("goodwords", "good words of B_P up to easy conjugation");
    cGood->add_option("P", P)->required();
    cGood->add_flag("--positive-only", positiveOnly);

    auto* cNeck = app.add_subcommand("necklaces", "vertex strings with P positive and N negative vertices");
    cNeck->add_option("P", P)->required();
    cNeck->add_option("N", N)->required();

    auto* cHalf = app.add_subcommand("halfplanes", "essential half-planes over a vertex string (1 positive, 0 negative)");
    cHalf->add_option("string", bits)->required();

    auto* cCyc = app.add_subcommand("cycles", "H-theta sequences with (P,N) vertices");
    cCyc->add_option("P", P)->required();
    cCyc->add_option("N", N)->required();
    cCyc->add_flag("--end-tile-free", etfOnly);
    cCyc->add_flag("--scramble", scramble);

    auto* cIns = app.add_subcommand("insert", "insert negative vertices into a disc");
    cIns->add_option("code", input, "JSON file, JSON text or bracket code")->required();

    auto* cCheck = app.add_subcommand("check", "run the full embeddability test on a disc");
    cCheck->add_option("code", input)->required();

    auto* cBound = app.add_subcommand("boundary", "boundary braid of an extended word or a disc");
    cBound->add_option("input", input)->required();
    cBound->add_option("--strands", P, "strand count of the extended word");

    auto* cRender = app.add_subcommand("render", "SVG film of a disc, or of cycle INDEX for P N");
    cRender->add_option("target", target, "code, or P")->required();
    cRender->add_option("more", extra, "N [INDEX]")->expected(0, 2);
    cRender->add_flag("--end-tile-free", etfOnly);

    auto* cExport = app.add_subcommand("export", "GML graph of a disc, or of cycle INDEX for P N");
    cExport->add_option("target", target, "code, or P")->required();
    cExport->add_option("more", extra, "N [INDEX]")->expected(0, 2);
    cExport->add_flag("--end-tile-free", etfOnly);

    // codes and words may start with a minus sign
    std::vector<std::string> args;
    for (int k = argc - 1; k > 0; --k) {
        std::string a = argv[k];
        if (a.rfind("-[", 0) == 0 || a.rfind("-(", 0) == 0 || a.rfind("-d(", 0) == 0) a = " " + a;
        args.push_back(a);
    }
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        PairRule rule = parse_pair_rule(g.pairRule);

        if (*cGood) {
            if (P < 2) throw CLI::ValidationError("P", "must be at least 2");
            auto words = positiveOnly ? enumerate_positive_good_words(P) : enumerate_good_words(P);
            if (g.json) {
                json a = json::array();
                for (auto& w : words) a.push_back(to_json(w));
                emit(g, dump({{"P", P}, {"count", words.size()}, {"words", a}}));
            } else {
                std::string s;
                for (auto& w : words) s += w.str() + "\n";
                emit(g, s);
            }
        } else if (*cNeck) {
            auto ns = enumerate_necklaces(P + N, 2, P);
            if (g.json) {
                json a = json::array();
                for (auto& n : ns) a.push_back(to_json(n));
                emit(g, dump({{"P", P}, {"N", N}, {"count", ns.size()}, {"strings", a}}));
            } else {
                std::string s;
                for (auto& n : ns) s += n.str() + "\n";
                emit(g, s);
            }
        } else if (*cHalf) {
            auto V = VertexString::from_bits(bits);
            auto hs = enumerate_half_planes(V);
            if (g.json) {
                json a = json::array();
                for (auto& h : hs) a.push_back(to_json(h));
                emit(g, dump({{"vertexString", to_json(V)}, {"count", hs.size()}, {"halfPlanes", a}}));
            } else {
                std::string s;
                for (auto& h : hs) {
                    std::string line;
                    for (int v : V.negatives()) line += (line.empty() ? "" : " ") + std::string("b(") + V.name(h.partner[v]).str() + "," + V.name(v).str() + ")";
                    s += (line.empty() ? "-" : line) + "\n";
                }
                emit(g, s);
            }
        } else if (*cCyc) {
            if (P < N + 2 || N < 0) throw CLI::ValidationError("P N", "need P > N + 1");
            CycleOptions opt;
            opt.threads = threads_of(g);
            opt.stopAt = g.stopAt;
            opt.scrambled = scramble;
            opt.seed = g.seed;
            opt.rule = rule;
            auto rep = compute_cycles(P, N, opt);
            if (g.json) {
                json a = json::array();
                for (auto& r : rep.records)
                    if (!etfOnly || r.endTileFree) a.push_back(to_json(r, rep));
                json strings = json::array();
                for (auto& V : rep.strings) strings.push_back(V.bits());
                emit(g, dump({{"P", P},
                              {"N", N},
                              {"strings", strings},
                              {"total", rep.records.size()},
                              {"endTileFree", rep.end_tile_free()},
                              {"scrambled", scramble},
                              {"seed", g.seed},
                              {"pairRule", pair_rule_name(rule)},
                              {"cycles", a}}));
            } else {
                std::string s;
                for (auto& r : rep.records)
                    if (!etfOnly || r.endTileFree)
                        s += rep.strings[r.string].bits() + "  " + bracket_str(r.code) + (r.endTileFree ? "  end-tile-free" : "") + "\n";
                s += "# " + std::to_string(rep.records.size()) + " cycles, " + std::to_string(rep.end_tile_free()) +
                     " end-tile-free\n";
                emit(g, s);
            }
        } else if (*cIns) {
            auto code = read_code(slurp(input));
            if (!is_admissible(code, rule)) throw ValidationFailure{"input disc fails the embeddability test"};
            auto out = insert_vertices(boundary_code(code), g.depth, rule, threads_of(g));
            if (g.json) {
                json a = json::array();
                for (auto& bc : out) a.push_back(to_json(saddle_code(bc)));
                emit(g, dump({{"depth", g.depth}, {"count", out.size()}, {"discs", a}}));
            } else {
                std::string s;
                for (auto& bc : out) s += bracket_str(saddle_code(bc)) + "\n";
                emit(g, s);
            }
        } else if (*cCheck) {
            auto code = read_code(slurp(input));
            json r;
            std::string structure;
            try {
                check_structure(code);
            } catch (const BadCode& e) {
                structure = e.what();
            }
            r["structure"] = structure.empty();
            if (!structure.empty()) r["structureError"] = structure;
            bool ok = structure.empty();
            if (ok) {
                auto rep = check_embedding(code, true);
                bool ess = is_essential(code), pr = satisfies_pair_rule(code, rule);
                r["essential"] = ess;
                r["pairRule"] = pr;
                r["embeddable"] = rep.ok();
                json vs = json::array();
                for (auto& v : rep.violations) vs.push_back({{"condition", v.condition}, {"row", v.row + 1}, {"witness", v.witness}});
                r["violations"] = vs;
                r["extendedWord"] = extended_word(code).str();
                ok = ess && pr && rep.ok();
                if (ok) r["boundaryWord"] = boundary_braid(code).str();
            }
            r["pass"] = ok;
            if (g.json) {
                emit(g, dump(r));
            } else {
                std::string s = ok ? "pass\n" : "fail\n";
                if (!structure.empty()) s += "  structure: " + structure + "\n";
                if (r.contains("essential") && !r["essential"].get<bool>()) s += "  inessential b-arc\n";
                if (r.contains("pairRule") && !r["pairRule"].get<bool>()) s += "  positive pair shared illegally\n";
                if (r.contains("violations"))
                    for (auto& v : r["violations"])
                        s += "  condition (" + std::to_string(v["condition"].get<int>()) + "): " + v["witness"].get<std::string>() + "\n";
                if (ok) s += "  EW = " + r["extendedWord"].get<std::string>() + "\n  BW = " + r["boundaryWord"].get<std::string>() + "\n";
                emit(g, s);
            }
            if (!ok) return 2;
        } else if (*cBound) {
            auto text = slurp(input);
            BoundaryWord bw;
            if (text.find('[') != std::string::npos || text.find('{') != std::string::npos) {
                bw = boundary_braid(read_code(text));
            } else {
                auto w = parse_word(text, P);
                int n = w.strands();
                bw = boundary_braid(w, n, static_cast<int>(w.size()) - n + 1);
            }
            if (g.json) {
                json j = to_json(bw);
                if (g.expand) j["expanded"] = to_json(reduced_boundary(bw))["letters"];
                emit(g, dump(j));
            } else {
                emit(g, (g.expand ? reduced_boundary(bw).str() : bw.str()) + "\n");
            }
        } else if (*cRender || *cExport) {
            HalfPlaneGraph G;
            ThetaCycle cyc;
            if (extra.empty()) {
                auto code = read_code(slurp(target));
                G = make_graph(code.vertices, enumerate_half_planes(code.vertices));
                cyc = theta_cycle(G, code);
            } else {
                int p = std::stoi(target), n = std::stoi(extra[0]);
                if (p < n + 2 || n < 0) throw CLI::ValidationError("P N", "need P > N + 1");
                std::size_t idx = extra.size() > 1 ? std::stoul(extra[1]) : index;
                CycleOptions opt;
                opt.threads = threads_of(g);
                opt.rule = rule;
                auto rep = compute_cycles(p, n, opt);
                auto rec = pick_cycle(rep, idx, etfOnly);
                const auto& V = rep.strings[rec.string];
                G = make_graph(V, enumerate_half_planes(V));
                cyc = rec.cycle;
            }
            emit(g, *cRender ? render_film(G, cyc) : export_gml(G, cyc));
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "foliage: " << e.what() << "\n";
        return 1;
    } catch (const ValidationFailure& e) {
        std::cerr << "foliage: " << e.what << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "foliage: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "foliage: bad number\n";
        return 1;
    }
    return 0;
}
