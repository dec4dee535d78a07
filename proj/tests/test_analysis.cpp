#include <catch_amalgamated.hpp>

#include <numeric>

#include "genwt/analysis.hpp"
#include "genwt/fixtures.hpp"

using namespace genwt;

TEST_CASE("the even-weight triple decomposes as a single block") {
    auto fx = load_fixture("parity3");
    BinaryOADecomposition D = classify_binary_oa(fx.code);
    CHECK(D.block_lengths == std::vector<int>{3});
    CHECK(D.f == 0);
    CHECK(D.soa_dim == 0);
    CHECK(D.perm == std::vector<int>{0, 1, 2});
}

TEST_CASE("a coordinate code is all SOA, no blocks") {
    GF F(2);
    LinearCode C = make_code(Space::hamming(4), F, Mat(F, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    BinaryOADecomposition D = classify_binary_oa(C);
    CHECK(D.block_lengths.empty());
    CHECK(D.f == 4);
    CHECK(D.soa_dim == 2);
    CHECK(D.perm == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("mixed OA splits into a block plus an SOA segment") {
    GF F(2);
    LinearCode C = make_code(Space::hamming(5), F,
                             Mat(F, {{1, 0, 1, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 0}}));
    BinaryOADecomposition D = classify_binary_oa(C);
    CHECK(D.block_lengths == std::vector<int>{3});
    CHECK(D.f == 2);
    CHECK(D.soa_dim == 1);

    LinearCode back = reconstruct_binary_oa(D, F);
    CHECK(back.sub == C.sub);  // already in standard position
}

TEST_CASE("classification permutes scattered block coordinates together") {
    GF F(2);
    LinearCode C = make_code(Space::hamming(4), F, Mat(F, {{1, 1, 0, 0}, {1, 0, 0, 1}}));
    BinaryOADecomposition D = classify_binary_oa(C);
    CHECK(D.block_lengths == std::vector<int>{3});
    CHECK(D.perm == std::vector<int>{0, 1, 3, 2});
    CHECK(D.f == 1);
    CHECK(D.soa_dim == 0);
}

TEST_CASE("the full even-weight code is one long block") {
    GF F(2);
    LinearCode C = make_code(Space::hamming(5), F,
                             Mat(F, {{1, 0, 0, 0, 1},
                                     {0, 1, 0, 0, 1},
                                     {0, 0, 1, 0, 1},
                                     {0, 0, 0, 1, 1}}));
    BinaryOADecomposition D = classify_binary_oa(C);
    CHECK(D.block_lengths == std::vector<int>{5});
    CHECK(D.f == 0);
}

TEST_CASE("classify_binary_oa rejects unsuitable inputs") {
    GF F2(2);
    GF F3(3);
    CHECK_THROWS_AS(classify_binary_oa(make_code(Space::hamming(3), F2, Mat(F2, {{1, 1, 0}}))),
                    std::invalid_argument);  // not an anticode
    CHECK_THROWS_AS(classify_binary_oa(make_code(Space::hamming(3), F3, Mat(F3, {{1, 0, 0}}))),
                    std::invalid_argument);  // not binary
    CHECK_THROWS_AS(
        classify_binary_oa(make_code(Space::rank(2, 2), F2, Mat(F2, {{1, 0, 0, 0}}))),
        std::invalid_argument);
}

TEST_CASE("every binary OA on four coordinates survives the round trip") {
    GF F(2);
    Space H = Space::hamming(4);
    int oas = 0;
    for (int d = 0; d <= 4; ++d) {
        enumerate_subspaces(4, d, F, [&](const Subspace& S) {
            LinearCode C = make_code(H, S);
            if (!is_optimal_anticode(C)) return true;
            ++oas;
            BinaryOADecomposition D = classify_binary_oa(C);  // throws on a bad round trip
            int covered = std::accumulate(D.block_lengths.begin(), D.block_lengths.end(), 0);
            CHECK(covered + D.f == 4);
            CHECK(D.soa_dim <= D.f);
            for (int len : D.block_lengths) {
                CHECK(len >= 3);
                CHECK(len % 2 == 1);
            }
            return true;
        });
    }
    CHECK(oas > 5);  // includes at least the coordinate codes of every dimension
}

TEST_CASE("an MDS flag through a Reed-Solomon code") {
    GF F(7);
    Space H = Space::hamming(4);
    LinearCode M = make_code(H, F, Mat(F, {{1, 1, 1, 1}, {0, 1, 2, 3}}));
    REQUIRE(is_mds(M));
    MdsChainSearchResult res = mds_chain_search(M);
    REQUIRE(res.found());
    const CodeChain& ch = *res.chain;
    CHECK(ch.links.size() == 5);
    CHECK(ch.step() == 1);
    CHECK(ch.links[2] == M.sub);
    for (std::size_t i = 0; i < ch.links.size(); ++i) {
        CHECK(ch.links[i].dim() == static_cast<int>(i));
        CHECK(is_mds(make_code(H, ch.links[i])));
    }
}

TEST_CASE("the complete-arc code stalls one dimension below itself") {
    auto fx = load_fixture("arc-6-3-7");
    REQUIRE(is_mds(fx.code));
    MdsChainSearchResult res = mds_chain_search(fx.code);
    CHECK_FALSE(res.found());
    CHECK(res.stuck_dim == 2);
    CHECK(res.note.find("below") != std::string::npos);
}

TEST_CASE("binary codes stall on whichever side lacks MDS neighbors") {
    GF F(2);
    auto parity = load_fixture("parity3");
    MdsChainSearchResult below = mds_chain_search(parity.code);
    CHECK_FALSE(below.found());
    CHECK(below.stuck_dim == 1);

    LinearCode rep = make_code(Space::hamming(3), F, Mat(F, {{1, 1, 1}}));
    MdsChainSearchResult above = mds_chain_search(rep);
    CHECK_FALSE(above.found());
    CHECK(above.stuck_dim == 2);
    CHECK(above.note.find("above") != std::string::npos);

    CHECK_THROWS_AS(mds_chain_search(make_code(Space::hamming(3), F, Mat(F, {{1, 1, 0}}))),
                    std::invalid_argument);  // not MDS
}

TEST_CASE("punctured ball sizes") {
    CHECK(hamming_ball_size(4, 1, 2) == 4);
    CHECK(hamming_ball_size(4, 2, 2) == 10);
    CHECK(hamming_ball_size(6, 3, 7) == 4896);
    CHECK(hamming_ball_size(3, 0, 5) == 0);
    CHECK_THROWS_AS(hamming_ball_size(3, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(hamming_ball_size(3, 1, 1), std::invalid_argument);
}

TEST_CASE("field-size threshold for MDS codes through every small code") {
    QThresholdReport rep = q_threshold_report(4, 1, 2);
    CHECK(rep.minimal_q == 4);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].q == 2);
    CHECK_FALSE(rep.rows[0].holds);
    CHECK(rep.rows[1].q == 3);
    CHECK_FALSE(rep.rows[1].holds);
    CHECK(rep.rows[2].q == 4);
    CHECK(rep.rows[2].holds);
    CHECK(rep.rows[2].lhs == 720);
    CHECK(rep.rows[2].rhs == 756);

    QThresholdReport arc = q_threshold_report(6, 2, 4);
    CHECK(arc.minimal_q == 19);
    CHECK(arc.rows.size() == 12);  // prime powers 2..19
    for (std::size_t i = 0; i + 1 < arc.rows.size(); ++i) CHECK_FALSE(arc.rows[i].holds);
    CHECK(arc.rows.back().holds);

    CHECK_THROWS_AS(q_threshold_report(6, 3, 4), std::invalid_argument);
}
