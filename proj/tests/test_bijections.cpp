#include "cspkit/actions.hpp"
#include "cspkit/bijections.hpp"
#include "cspkit/stats.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cspkit;

namespace {

void check_round_trip(BijectionId id, const FamilyParams& params) {
    FamilySpec src = bijection_source(id, params);
    FamilySpec tgt = bijection_target(id, params);
    auto sources = enumerate(src);
    std::vector<CombObject> images;
    for (const auto& x : sources) {
        CombObject y = apply_bijection(id, params, x);
        INFO(bijection_name(id) << " on " << family_name(src.id));
        CHECK(validate(y));
        CHECK(y.spec.id == tgt.id);
        CombObject back = inverse_bijection(id, params, y);
        CHECK(back == x);
        images.push_back(y);
    }
    // bijectivity onto the declared target family
    std::sort(images.begin(), images.end());
    auto targets = enumerate(tgt);
    REQUIRE(images.size() == targets.size());
    CHECK(std::equal(images.begin(), images.end(), targets.begin(),
                     [](const CombObject& a, const CombObject& b) { return a == b; }));
    // and the other direction round-trips too
    for (const auto& y : targets)
        CHECK(apply_bijection(id, params, inverse_bijection(id, params, y)) == y);
}

} // namespace

TEST_CASE("round trips cover the full source and target families") {
    for (long n = 0; n <= 8; ++n) {
        check_round_trip(BijectionId::NCM_TO_DYCK, {.n = n});
        check_round_trip(BijectionId::SYT_TO_NCM, {.n = n});
        check_round_trip(BijectionId::SYT_TO_DYCK, {.n = n});
        check_round_trip(BijectionId::DYCK_TO_NCC, {.n = n == 0 ? 1 : n});
    }
    for (long n = 1; n <= 8; ++n) {
        check_round_trip(BijectionId::NCP_TO_NCM, {.n = n});
        check_round_trip(BijectionId::NCP_TO_DYCK, {.n = n});
    }
    for (long n = 2; n <= 8; ++n)
        for (long k = 0; k <= n - 1; ++k)
            check_round_trip(BijectionId::SSYT_TO_NCP, {.n = n, .k = k});
    for (long n = 1; n <= 8; ++n)
        for (long s = 0; s <= n; ++s)
            check_round_trip(BijectionId::PHI_ROOT_IDEAL, {.n = n, .s = s});
}

TEST_CASE("period words and symmetric matchings") {
    // the target tag is NCM(n) but the image is the symmetric subset, so
    // the onto check is against the fixed diagonal-free matchings
    for (long n = 2; n <= 8; ++n)
        for (long d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            FamilyParams params{.n = n, .s = d};
            for_each_object(bijection_source(BijectionId::BW_TO_NCM_SYM, params),
                            [&](const CombObject& w) {
                                CombObject m = apply_bijection(BijectionId::BW_TO_NCM_SYM, params, w);
                                CHECK(validate(m));
                                CHECK(inverse_bijection(BijectionId::BW_TO_NCM_SYM, params, m) == w);
                            });
            // and the image is exactly the diagonal-free matchings fixed
            // by rotating 2d steps
            std::set<std::vector<int>> image;
            for_each_object(bijection_source(BijectionId::BW_TO_NCM_SYM, params),
                            [&](const CombObject& w) {
                                image.insert(as_matching(apply_bijection(
                                                 BijectionId::BW_TO_NCM_SYM, params, w))
                                                 .partner);
                            });
            long expected = 0;
            for_each_object({FamilyId::NCM, {.n = n}}, [&](const CombObject& x) {
                const Matching& m = as_matching(x);
                if (!(rotate_matching(m, static_cast<int>(2 * d)).partner == m.partner)) return;
                bool diagonal = false;
                for (int i = 1; i <= m.size(); ++i)
                    if (m.of(i) == mod1(i + static_cast<int>(n), m.size())) diagonal = true;
                if (diagonal) return;
                ++expected;
                CHECK(image.count(m.partner) == 1);
            });
            CHECK(static_cast<long>(image.size()) == expected);
        }
}

TEST_CASE("restricted period words land in cyclic-descent classes") {
    // a symmetric matching with k short edges reads off a period word with
    // d k / (2n) cyclic descents, and the correspondence is onto the class
    for (long n = 2; n <= 8; ++n)
        for (long d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            std::map<long, long> byCdes;
            for_each_object({FamilyId::BW, {.n = 2 * d, .k = d}}, [&](const CombObject& w) {
                Matching m = word_to_sym_ncm(as_word(w).bits, static_cast<int>(2 * n));
                long sml = matching_short_edges(m);
                REQUIRE((d * sml) % n == 0);
                CHECK(word_cdes(as_word(w).bits) == d * sml / n);
                byCdes[word_cdes(as_word(w).bits)] += 1;
            });
            for (auto& [k, cnt] : byCdes)
                CHECK(cnt == cardinality({FamilyId::BW_CDES, {.n = d, .k = k}}));
        }
}

TEST_CASE("worked examples") {
    // tableau 1 2 5 6 8 / 3 4 7 9 10 maps to {1-4, 2-3, 5-10, 6-7, 8-9}
    Bits w(10, 1);
    for (int i : {1, 2, 5, 6, 8}) w[static_cast<std::size_t>(i) - 1] = 0;
    CombObject t{{FamilyId::SYT2, {.n = 5}}, Word{w}};
    CombObject m = apply_bijection(BijectionId::SYT_TO_NCM, {.n = 5}, t);
    CHECK(as_matching(m).partner == std::vector<int>{4, 3, 2, 1, 10, 7, 6, 9, 8, 5});

    // the partition {1,2,4,5},{3},{6} maps to {1-2,3-6,4-5,7-8,9-12,10-11}
    CombObject pi{{FamilyId::NCP, {.n = 6}}, Partition{{{1, 2, 4, 5}, {3}, {6}}}};
    CombObject m2 = apply_bijection(BijectionId::NCP_TO_NCM, {.n = 6}, pi);
    CHECK(as_matching(m2).partner ==
          std::vector<int>{2, 1, 6, 5, 4, 3, 8, 7, 12, 11, 10, 9});

    // the laser figure: in the figure's convention ones are north steps,
    // so the canonical word is the complement
    Bits fig{1, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0};
    Bits canonical(fig.size());
    for (std::size_t i = 0; i < fig.size(); ++i) canonical[i] = 1 - fig[i];
    CombObject d{{FamilyId::DYCK, {.n = 6}}, Word{canonical}};
    CombObject cfg = apply_bijection(BijectionId::DYCK_TO_NCC, {.n = 6}, d);
    CHECK(as_config(cfg).partner == std::vector<int>{1, 0, 5, 4, 3});

    // phi applied twice to the path with north steps 2,5,7,8,10
    Bits alpha(10, 1);
    for (int i : {2, 5, 7, 8, 10}) alpha[static_cast<std::size_t>(i) - 1] = 0;
    CHECK(word_depth(alpha) == 2);
    Bits ideal = phi_step(phi_step(alpha));
    Bits expected(10, 1);
    for (int i : {1, 2, 4, 5, 7, 8, 10}) expected[static_cast<std::size_t>(i) - 1] = 0;
    CHECK(ideal == expected);
    CombObject viaBijection = apply_bijection(BijectionId::PHI_ROOT_IDEAL, {.n = 5, .s = 2},
                                              {{FamilyId::PATHS_S, {.n = 5, .s = 2}}, Word{alpha}});
    CHECK(as_word(viaBijection).bits == expected);

    // the two-column tableau with rows (1,2),(2,3),(3,4),(7,7) maps to
    // {{1,4},{2},{3},{7},{5,6,8}}
    Ssyt2Col ssyt{{{1, 2}, {2, 3}, {3, 4}, {7, 7}}};
    CombObject s{{FamilyId::SSYT2COL, {.n = 7, .k = 4}}, ssyt};
    CombObject p = apply_bijection(BijectionId::SSYT_TO_NCP, {.n = 8, .k = 4}, s);
    CHECK(as_partition(p).blocks ==
          std::vector<std::vector<int>>{{1, 4}, {2}, {3}, {5, 6, 8}, {7}});
}

TEST_CASE("declared statistic transport") {
    // partition blocks become even edges plus one
    for (long n = 1; n <= 8; ++n)
        for_each_object({FamilyId::NCP, {.n = n}}, [&](const CombObject& x) {
            CombObject y = apply_bijection(BijectionId::NCP_TO_NCM, {.n = n}, x);
            CHECK(statistic(StatId::BLOCKS, x) == statistic(StatId::EVEN_EDGES, y) + 1);
        });
    // partition blocks become path peaks
    for (long n = 1; n <= 8; ++n)
        for_each_object({FamilyId::NCP, {.n = n}}, [&](const CombObject& x) {
            CombObject y = apply_bijection(BijectionId::NCP_TO_DYCK, {.n = n}, x);
            CHECK(statistic(StatId::BLOCKS, x) == statistic(StatId::PEAKS, y));
        });
    // path valleys become edges plus loops under the laser map
    for (long n = 1; n <= 8; ++n)
        for_each_object({FamilyId::DYCK, {.n = n}}, [&](const CombObject& x) {
            CombObject y = apply_bijection(BijectionId::DYCK_TO_NCC, {.n = n}, x);
            CHECK(statistic(StatId::VALLEYS, x) ==
                  statistic(StatId::PROPER_EDGES, y) + statistic(StatId::LOOPS, y));
        });
    // two-column tableaux with k-1 rows hit partitions with k blocks
    for (long n = 2; n <= 8; ++n)
        for (long k = 1; k <= n; ++k)
            for_each_object({FamilyId::SSYT2COL, {.n = n - 1, .k = k - 1}}, [&](const CombObject& x) {
                CombObject y = apply_bijection(BijectionId::SSYT_TO_NCP, {.n = n, .k = k - 1}, x);
                CHECK(statistic(StatId::BLOCKS, y) == k);
            });
    // phi preserves pmaj and drops maj by one per application
    for (long n = 1; n <= 7; ++n)
        for_each_object({FamilyId::PATHS, {.n = n}}, [&](const CombObject& x) {
            const Bits& w = as_word(x).bits;
            if (word_depth(w) == 0) return;
            Bits next = phi_step(w);
            CHECK(word_pmaj(next) == word_pmaj(w));
            CHECK(word_maj(next) == word_maj(w) - 1);
        });
}

TEST_CASE("equivariance of the tableau and partition bijections") {
    for (long n = 1; n <= 5; ++n) {
        auto rep = check_equivariance(BijectionId::SYT_TO_NCM, {.n = n},
                                      ActionSpec{ActionId::PROMOTION, 2 * n},
                                      ActionSpec{ActionId::ROT, 2 * n},
                                      {FamilyId::SYT2, {.n = n}});
        CHECK(rep.ok());
        CHECK(rep.checked == catalan(n));
    }
    for (long n = 1; n <= 6; ++n) {
        auto rep = check_equivariance(BijectionId::NCP_TO_NCM, {.n = n},
                                      ActionSpec{ActionId::KREWERAS, 2 * n},
                                      ActionSpec{ActionId::ROT, 2 * n},
                                      {FamilyId::NCP, {.n = n}});
        CHECK(rep.ok());
    }
}

TEST_CASE("precondition violations surface as errors") {
    CombObject w{{FamilyId::BW, {.n = 4, .k = 2}}, Word{{1, 1, 0, 0}}};
    // d must properly divide n
    CHECK_THROWS_AS(apply_bijection(BijectionId::BW_TO_NCM_SYM, {.n = 2, .s = 2}, w),
                    PreconditionViolated);
    CombObject notDyck{{FamilyId::DYCK, {.n = 2}}, Word{{1, 0, 0, 1}}};
    CHECK_THROWS_AS(apply_bijection(BijectionId::DYCK_TO_NCC, {.n = 2}, notDyck),
                    PreconditionViolated);
}
