#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "foliage/boundary.hpp"
#include "foliage/disc.hpp"
#include "foliage/embed.hpp"
#include "foliage/errors.hpp"
#include "foliage/goodwords.hpp"

using namespace foliage;

TEST_CASE("vertex names") {
    auto V = VertexString::from_bits("0101100");
    CHECK(V.P() == 3);
    CHECK(V.name(0).str() == "0.1");
    CHECK(V.name(1).str() == "1");
    CHECK(V.name(2).str() == "1.1");
    CHECK(V.name(6).str() == "3.2");
    CHECK(V.position(VertexName::parse("3.1")) == 5);
    CHECK(V.bits() == "0101100");
}

TEST_CASE("extended word of the sample disc") {
    auto D = parse_bracket_code(fx::kDisc);
    check_structure(D);
    CHECK(D.P() == 11);
    CHECK(D.N() == 5);
    CHECK(extended_word(D).str() == fx::kDiscEW);
    CHECK(extended_word_conditions(extended_word(D), 5));
}

TEST_CASE("too short for its strand count") {
    auto w = parse_word("(6,5)(5,2)-(4,1)", 6);
    CHECK_FALSE(extended_word_conditions(w, -2));
    CHECK_THROWS_AS(boundary_braid(w, 6, -2), NotExtendedWord);
}

TEST_CASE("extended word of a positive disc is its word") {
    auto w = parse_word("(2,1)(4,3)(4,1)", 4);
    CHECK(extended_word(positive_disc(w)) == w);
}

TEST_CASE("extended word of the large disc") {
    auto D = parse_bracket_code(fx::kBig, 13);
    check_structure(D);
    CHECK(extended_word(D).str() == fx::kBigEW);
    CHECK(induced_permutation(extended_word(D)).str() == "(1,6,10,5,12,13,2,11,9)(3)(4)(7)(8)");
}

TEST_CASE("boundary code of the sample disc") {
    auto D = parse_bracket_code(fx::kDisc);
    auto bc = boundary_code(D);
    CHECK(boundary_str(bc) ==
          "{Q_{1,5}(11),Q_{5,6}(10),R_{6,4.1,7}(1),-R_{7,0.1,3}(6),R_{3,0.1,8}(13),Q_{8,4}(5),"
          "-R_{4,8.1,11}(14),-R_{11,8.2,10}(15),Q_{10,9}(2),Q_{9,10}(2),R_{10,8.2,11}(3),R_{11,8.1,4}(4),"
          "Q_{4,8}(5),-R_{8,0.1,7}(7),-R_{7,0.2,6}(9),Q_{6,5}(10),Q_{5,1}(11)} "
          "bb={[[0.2,2,4.1,6],-1](8),[[0.2,2,4.1,7],1](12)}");
    CHECK(saddle_code(bc) == D);
    CHECK(boundary_code(saddle_code(bc)) == bc);
}

TEST_CASE("fan disc boundary") {
    auto w = parse_word("(2,1)(3,1)(4,1)", 4);
    auto bc = generate_disc_boundary(4, w);
    CHECK(bc.boundary.size() == 6);
    std::vector<int> levels;
    for (auto& p : bc.boundary) {
        CHECK(p.kind == BoundaryPoint::Kind::Q);
        levels.push_back(p.level);
    }
    std::sort(levels.begin(), levels.end());
    CHECK(levels == std::vector<int>{1, 1, 2, 2, 3, 3});
    CHECK(extended_word(saddle_code(bc)) == w);
    CHECK_THROWS_AS(generate_disc_boundary(3, parse_word("(2,1)(2,1)", 3)), NotGoodWord);
}

TEST_CASE("vertex classification") {
    auto fan = positive_disc(parse_word("(2,1)(3,1)(4,1)", 4));
    auto info = classify_vertices(fan);
    CHECK_FALSE(info[0].endTile);
    CHECK(info[0].valence == 3);
    for (int p = 1; p < 4; ++p) CHECK(info[p].endTile);
    for (auto* d : fx::kD) {
        auto c = parse_bracket_code(d, 8, 1);
        for (auto& v : classify_vertices(c)) CHECK(v.valence >= 2);
        CHECK_FALSE(has_end_tile(c));
    }
    auto big = parse_bracket_code(fx::kBig, 13);
    auto bi = classify_vertices(big);
    for (auto& v : bi) {
        CHECK(v.valence >= 2);
        CHECK(v.type.size() == static_cast<std::size_t>(v.valence));
        CHECK(v.signs.size() == static_cast<std::size_t>(v.valence));
    }
    CHECK_FALSE(has_exchange_vertex(bi, 'a', 'b'));
}

TEST_CASE("end-tile removal") {
    auto D = parse_bracket_code(fx::kDisc);
    int nine = D.vertices.position({9, 0});
    auto E = remove_end_tile(D, nine);
    CHECK(E.P() == 10);
    // 8.2 ends up next to the old 10
    CHECK(is_embeddable(E));
    CHECK_FALSE(is_essential(E));
    CHECK(boundary_braid(E).str() == "d(5,2) (5,2) d(4,2) (5,4) (4,1) -d(5,2) -d(5,2)");
    int one = E.vertices.position({1, 0});
    auto F = remove_end_tile(E, one);
    CHECK(F.P() - F.N() == D.P() - D.N() - 2);
    CHECK_THROWS_AS(remove_end_tile(D, D.vertices.position({7, 0})), NotEndTile);
}

TEST_CASE("code inversion") {
    auto D = parse_bracket_code(fx::kDisc);
    auto I = invert_code(D);
    CHECK(extended_word(I) == invert_word(extended_word(D)));
    CHECK(is_embeddable(I));
    CHECK(invert_code(I) == D);
}

TEST_CASE("code rewriting follows relations") {
    auto w1 = parse_word("(6,5)(5,4)-(4,2)(3,1)(5,3)", 6);
    auto w2 = parse_word("(6,5)-(5,2)(5,4)(3,1)(5,3)", 6);
    auto bc = generate_disc_boundary(6, w1);
    auto r = rewrite_code_after_relation(bc, 1, Relation::Mixed);
    CHECK(extended_word(saddle_code(r)) == w2);
    CHECK(same_cyclic_boundary(r, generate_disc_boundary(6, w2)));

    auto c = generate_disc_boundary(4, parse_word("(2,1)(4,3)(3,1)", 4));
    auto s = rewrite_code_after_relation(c, 0, Relation::Commute);
    CHECK(extended_word(saddle_code(s)).str() == "(4,3) (2,1) (3,1)");
    auto t = generate_disc_boundary(3, parse_word("(3,2)(2,1)", 3));
    auto u = rewrite_code_after_relation(t, 0, Relation::TripleForward);
    CHECK(extended_word(saddle_code(u)).str() == "(2,1) (3,1)");
    CHECK_THROWS_AS(rewrite_code_after_relation(bc, 0, Relation::Commute), NotApplicable);
}

TEST_CASE("disc keys identify rotations and level shifts") {
    auto D = parse_bracket_code(fx::kDisc);
    auto C = canonical_code(D);
    CHECK(disc_key(C) == disc_key(D));
    CHECK(canonical_code(C) == C);
    CHECK(disc_key(invert_code(D)) != disc_key(D));
}

TEST_CASE("bad codes rejected") {
    CHECK_THROWS_AS(check_structure(parse_bracket_code("[[1,2],1],[[1,2],1]")), BadCode);
    CHECK_THROWS_AS(parse_bracket_code("[[1,2],1"), ParseError);
}
