#include <doctest.h>

#include <map>

#include "bruhat/weyl.hpp"

using namespace bruhat;

namespace {

// Reflexive-transitive closure of length-decreasing right multiplication by
// transpositions: the chain form of the strong Bruhat order.
std::vector<std::vector<bool>> chain_order(int n) {
    auto ws = all_weyl(n);
    size_t k = ws.size();
    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < k; ++i) index[ws[i].images()] = i;
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    for (size_t i = 0; i < k; ++i) leq[i][i] = true;
    for (size_t i = 0; i < k; ++i)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                WeylElement u = ws[i] * WeylElement::transposition(n, a, b);
                if (u.length() < ws[i].length()) leq[index[u.images()]][i] = true;
            }
    for (size_t m = 0; m < k; ++m)
        for (size_t i = 0; i < k; ++i)
            if (leq[i][m])
                for (size_t j = 0; j < k; ++j)
                    if (leq[m][j]) leq[i][j] = true;
    return leq;
}

} // namespace

TEST_CASE("length is the inversion count") {
    CHECK(WeylElement::identity(3).length() == 0);
    CHECK(WeylElement::from_one_line({3, 2, 1}).length() == 3);
    CHECK(WeylElement::from_one_line({2, 3, 1}).length() == 2);
    CHECK(WeylElement::longest(4).length() == 6);
}

TEST_CASE("parse / str round trip and matrix convention") {
    WeylElement w = WeylElement::parse("2,3,1");
    CHECK(w.str() == "2,3,1");
    CHECK(w(0) == 1); // 0-based images
    CHECK(w.inverse() * w == WeylElement::identity(3));
}

TEST_CASE("bruhat_leq pinned examples") {
    WeylElement id = WeylElement::identity(3);
    for (auto& w : all_weyl(3)) CHECK(bruhat_leq(id, w));
    CHECK_FALSE(bruhat_leq(WeylElement::parse("2,1,3"), WeylElement::parse("1,3,2")));
    CHECK(bruhat_leq(WeylElement::parse("2,1,3"), WeylElement::parse("3,1,2")));
}

TEST_CASE("bruhat_leq equals the chain-closure oracle on S3 and S4") {
    for (int n : {3, 4}) {
        auto ws = all_weyl(n);
        auto leq = chain_order(n);
        for (size_t i = 0; i < ws.size(); ++i)
            for (size_t j = 0; j < ws.size(); ++j)
                CHECK(bruhat_leq(ws[i], ws[j]) == leq[i][j]);
    }
}

TEST_CASE("bruhat_leq is a partial order compatible with length") {
    auto ws = all_weyl(4);
    for (auto& u : ws)
        for (auto& w : ws) {
            bool uw = bruhat_leq(u, w);
            if (uw) {
                CHECK(u.length() <= w.length());
                if (u.length() == w.length()) CHECK(u == w);
                if (bruhat_leq(w, u)) CHECK(u == w);
            }
        }
}

TEST_CASE("right duality u <= w iff u w0 >= w w0 on S4") {
    auto ws = all_weyl(4);
    WeylElement w0 = WeylElement::longest(4);
    for (auto& u : ws)
        for (auto& w : ws)
            CHECK(bruhat_leq(u, w) == bruhat_leq(w * w0, u * w0));
}

TEST_CASE("standard orderings refine the Bruhat order") {
    auto d2 = standard_ordering(2, OrderingPreset::Default);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0] == WeylElement::identity(2));
    CHECK(d2[1] == WeylElement::longest(2));

    auto p3 = standard_ordering(3, OrderingPreset::PaperN3);
    std::vector<std::string> want = {"1,2,3", "2,1,3", "1,3,2", "3,1,2", "2,3,1", "3,2,1"};
    REQUIRE(p3.size() == 6);
    for (size_t i = 0; i < 6; ++i) CHECK(p3[i].str() == want[i]);

    for (auto preset : {OrderingPreset::Default, OrderingPreset::PaperN3}) {
        int n = preset == OrderingPreset::PaperN3 ? 3 : 4;
        auto ord = standard_ordering(n, preset);
        CHECK(ord.front() == WeylElement::identity(n));
        CHECK(ord.back() == WeylElement::longest(n));
        for (size_t i = 0; i < ord.size(); ++i)
            for (size_t j = 0; j < i; ++j) CHECK_FALSE(bruhat_leq(ord[i], ord[j]));
    }

    CHECK_THROWS_AS(standard_ordering(4, OrderingPreset::PaperN3), error);
    CHECK(parse_preset("paper-n3") == OrderingPreset::PaperN3);
    CHECK_THROWS_AS(parse_preset("nope"), invalid_preset);
    CHECK(ordering_index(p3, WeylElement::parse("2,3,1")) == 4);
}

TEST_CASE("position masks partition the strict upper triangle") {
    for (auto& w : all_weyl(4)) {
        auto nw = PositionMask::n_w(w);
        auto np = PositionMask::n_prime_w(w);
        CHECK(nw.intersect(np).pos.empty());
        CHECK(nw.pos.size() + np.pos.size() == 6); // C(4,2)
        CHECK(nw.pos.size() == w.length());
    }
    // N^{(1)}_{j0} positions: i+1 <= j0 <= j+1 crossing set
    auto m = PositionMask::level_one(3, 1);
    CHECK(m.contains(0, 1));
    CHECK(m.contains(0, 2));
    CHECK_FALSE(m.contains(1, 2));
}
