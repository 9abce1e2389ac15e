// Acceptance suite: every criterion is an exact integer or polynomial
// equality, checked at desk scale with zero tolerance.  One line per
// criterion; nonzero exit on any failure.

#include "cspkit/runner.hpp"
#include "cspkit/serialize.hpp"

#include <chrono>
#include <iostream>

using namespace cspkit;

namespace {

int failures = 0;

#define REQUIRE_EQ(what)                                                   \
    do {                                                                   \
        if (!(what)) {                                                     \
            ok = false;                                                    \
            std::cout << "    failed: " #what << "\n";                     \
        }                                                                  \
    } while (0)

void report(int number, const std::string& label, bool ok) {
    std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " - " << label
              << "\n";
    if (!ok) ++failures;
}

// ---------------------------------------------------------------------------
// A small skew semistandard grid, just enough to run Bender-Knuth
// promotion on the shape (2,2,1)/(1) counterexample.

struct SkewGrid {
    std::vector<int> start;                 // column offset per row
    std::vector<std::vector<int>> rows;     // entries left to right
    bool operator==(const SkewGrid&) const = default;

    bool has(int r, int c) const {
        if (r < 0 || r >= static_cast<int>(rows.size())) return false;
        int off = c - start[static_cast<std::size_t>(r)];
        return off >= 0 && off < static_cast<int>(rows[static_cast<std::size_t>(r)].size());
    }
    int& at(int r, int c) {
        return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - start[static_cast<std::size_t>(r)])];
    }
    int get(int r, int c) const {
        return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - start[static_cast<std::size_t>(r)])];
    }
};

void skew_bk(SkewGrid& g, int j) {
    auto lockedDown = [&](int r, int c) { return g.has(r + 1, c) && g.get(r + 1, c) == j + 1; };
    auto lockedUp = [&](int r, int c) { return g.has(r - 1, c) && g.get(r - 1, c) == j; };
    for (int r = 0; r < static_cast<int>(g.rows.size()); ++r) {
        std::vector<int> freeCols;
        int freeJ = 0, freeJ1 = 0;
        int s = g.start[static_cast<std::size_t>(r)];
        for (int c = s; c < s + static_cast<int>(g.rows[static_cast<std::size_t>(r)].size()); ++c) {
            int v = g.get(r, c);
            if (v == j && !lockedDown(r, c)) {
                freeCols.push_back(c);
                ++freeJ;
            } else if (v == j + 1 && !lockedUp(r, c)) {
                freeCols.push_back(c);
                ++freeJ1;
            }
        }
        for (std::size_t t = 0; t < freeCols.size(); ++t)
            g.at(r, freeCols[t]) = static_cast<int>(t) < freeJ1 ? j : j + 1;
    }
}

SkewGrid skew_promotion(SkewGrid g, int m) {
    for (int j = m - 1; j >= 1; --j) skew_bk(g, j);
    return g;
}

// ---------------------------------------------------------------------------

bool criterion1() {
    bool ok = true;
    for (long n = 0; n <= 30; ++n) {
        REQUIRE_EQ(cat_q(n) == q_binomial(2 * n, n) - q_binomial(2 * n, n - 1).shifted(1));
        REQUIRE_EQ(cat_q(n) == div_q_int(q_binomial(2 * n, n), n + 1));
    }
    for (long n = 1; n <= 30; ++n) {
        IntPoly sum;
        for (long k = 1; k <= n; ++k) sum += nar_q(n, k);
        REQUIRE_EQ(sum == cat_q(n));
    }
    for (long n = 0; n <= 30; ++n) {
        IntPoly sum;
        for (long k = 0; k <= n; ++k) sum += nar_b_q(n, k);
        REQUIRE_EQ(sum == cat_b_q(n));
    }
    for (long n = 2; n <= 30; ++n)
        for (long k = 2; k <= n; ++k)
            REQUIRE_EQ(g_cdes(n, k) == g_cdes_three_term(n, k));
    for (long n = 1; n <= 25; ++n)
        for (long k = 0; k <= n; ++k) {
            IntPoly sum;
            for (long e = 0; e <= k; ++e) sum += q_ncc(n, e, k - e);
            REQUIRE_EQ(sum == nar_q(n + 1, k + 1));
        }
    for (long n = 4; n <= 30; ++n) {
        IntPoly sum;
        for (long k = 2; 2 * k <= n; ++k) sum += tri_ear_q(n, k);
        REQUIRE_EQ(sum == cat_q(n - 2));
    }
    for (long n = 1; n <= 25; ++n) {
        auto pi = pi_b_polynomial(n);
        IntPoly total;
        for (const auto& c : pi) total += c;
        REQUIRE_EQ(total == cat_b_q(n));
        for (long k = 0; k <= n; ++k)
            REQUIRE_EQ(pi[static_cast<std::size_t>(2 * k)] +
                           pi[static_cast<std::size_t>(2 * k + 1)] ==
                       nar_b_q(n, k));
    }
    for (long n = 0; n <= 25; ++n)
        REQUIRE_EQ(twist_cat_q(n) == div_q_int(mul_q_int(q_binomial(2 * n + 1, n), 2), n + 2));
    // order ideal statistics against the two closed forms, all s at once
    for (long n = 1; n <= 10; ++n) {
        std::vector<IntPoly> pmajByDepth(static_cast<std::size_t>(n + 1));
        std::vector<IntPoly> majByDepth(static_cast<std::size_t>(n + 1));
        std::vector<std::map<long, Int>> ph(static_cast<std::size_t>(n + 1)),
            mh(static_cast<std::size_t>(n + 1));
        for_each_object({FamilyId::OI, {.n = n, .s = n}}, [&](const CombObject& x) {
            const Bits& w = as_word(x).bits;
            int d = oi_top_diagonal(w, static_cast<int>(n));
            ph[static_cast<std::size_t>(d)][word_pmaj(w)] += 1;
            mh[static_cast<std::size_t>(d)][word_maj(w)] += 1;
        });
        auto toPoly = [](const std::map<long, Int>& h) {
            IntPoly f;
            for (auto& [e, c] : h) f += IntPoly(c).shifted(e);
            return f;
        };
        IntPoly pmajSum, majSum;
        for (long s = 0; s <= n; ++s) {
            pmajSum += toPoly(ph[static_cast<std::size_t>(s)]);
            majSum += toPoly(mh[static_cast<std::size_t>(s)]);
            REQUIRE_EQ(pmajSum == x_ns(n, s));
            IntPoly expected = q_binomial(2 * n, n) - q_binomial(2 * n, n - s - 1).shifted(1);
            for (long d = 1; d <= s; ++d) {
                IntPoly b = q_binomial(2 * n, n - d);
                expected += b - b.shifted(1);
            }
            REQUIRE_EQ(majSum == expected);
        }
    }
    return ok;
}

bool criterion2() {
    bool ok = true;
    REQUIRE_EQ(tri_ear_sum_factor(6, 2) == IntPoly({1, 0, 0, 0, 1, 1, 0, 0, 1}));
    REQUIRE_EQ(tri_ear_q(6, 2) == q_int(6).divexact_monic(q_int(2)) * tri_ear_sum_factor(6, 2));
    REQUIRE_EQ(!tri_ear_q(6, 2).is_palindromic());
    REQUIRE_EQ(q_ncc(4, 2, 0) == IntPoly({1, 0, 1}).shifted(6));
    REQUIRE_EQ(q_ncc(4, 1, 1) == IntPoly({1, 2, 3, 3, 2, 1}).shifted(7));
    REQUIRE_EQ(q_ncc(4, 0, 2) == IntPoly({1, 1, 2, 1, 1}).shifted(10));
    REQUIRE_EQ(q_ncc(4, 2, 0) + q_ncc(4, 1, 1) + q_ncc(4, 0, 2) == nar_q(5, 3));
    REQUIRE_EQ(nar_q(5, 3) == IntPoly({1, 1, 3, 3, 4, 3, 3, 1, 1}).shifted(6));
    REQUIRE_EQ(y_ns(2, 1) == IntPoly({1, 1, 1, 1, 1}));
    REQUIRE_EQ(enumerate({FamilyId::NCM, {.n = 3}}).size() == 5);
    REQUIRE_EQ(enumerate({FamilyId::TRIB, {.n = 2}}).size() == 6);
    REQUIRE_EQ(enumerate({FamilyId::OI, {.n = 3, .s = 3}}).size() == 20);
    REQUIRE_EQ(cardinality({FamilyId::OI, {.n = 3, .s = 3}}) == 20);

    // the entry action on the worked two-column tableau
    Ssyt2Col t{{{1, 2}, {2, 3}, {3, 4}, {7, 7}}};
    CombObject x{{FamilyId::SSYT2COL, {.n = 7, .k = 4}}, t};
    REQUIRE_EQ(as_ssyt(act({ActionId::PHI_SSYT, 8}, x)) ==
               (Ssyt2Col{{{1, 3}, {2, 4}, {3, 5}, {4, 7}}}));

    // the twice-iterated boundary map on the path with norths 2,5,7,8,10
    Bits alpha(10, 1), expect(10, 1);
    for (int i : {2, 5, 7, 8, 10}) alpha[static_cast<std::size_t>(i) - 1] = 0;
    for (int i : {1, 2, 4, 5, 7, 8, 10}) expect[static_cast<std::size_t>(i) - 1] = 0;
    REQUIRE_EQ(phi_step(phi_step(alpha)) == expect);

    // the laser image of the figure path (figure uses ones for norths)
    Bits fig{1, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0}, canon(fig.size());
    for (std::size_t i = 0; i < fig.size(); ++i) canon[i] = 1 - fig[i];
    REQUIRE_EQ(dyck_to_ncc(canon).partner == (std::vector<int>{1, 0, 5, 4, 3}));

    // the matching of the worked partition example
    REQUIRE_EQ(ncp_to_ncm(Partition{{{1, 2, 4, 5}, {3}, {6}}}, 6).partner ==
               (std::vector<int>{2, 1, 6, 5, 4, 3, 8, 7, 12, 11, 10, 9}));
    return ok;
}

bool criterion3(long& millis) {
    auto t0 = std::chrono::steady_clock::now();
    auto summary = run_verification(all_triple_ids(), 1 << 20, default_thread_count());
    auto t1 = std::chrono::steady_clock::now();
    millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    bool ok = summary.all_ok && millis <= 300000;
    for (const auto& o : summary.outcomes)
        if (!o.as_expected)
            std::cout << "    " << o.id << ": " << o.failures << "/" << o.cases
                      << " unexpected failures\n";
    return ok;
}

bool criterion4() {
    bool ok = true;
    auto x2 = verify_triple(triple_by_id("X2"), {.n = 2});
    REQUIRE_EQ(!x2.pass);
    REQUIRE_EQ(x2.rows.size() >= 1);
    REQUIRE_EQ(x2.rows[0].d == 1);
    REQUIRE_EQ(x2.rows[0].fixed == 2);
    REQUIRE_EQ(x2.rows[0].integral && x2.rows[0].eval == 0);
    bool someFail = false;
    for (const auto& p : triple_by_id("X1").domain(6))
        if (!verify_triple(triple_by_id("X1"), p).pass) someFail = true;
    REQUIRE_EQ(someFail);
    return ok;
}

bool criterion5() {
    bool ok = true;
    for (long n = 1; n <= 5; ++n)
        REQUIRE_EQ(check_equivariance(BijectionId::SYT_TO_NCM, {.n = n},
                                      {ActionId::PROMOTION, 2 * n}, {ActionId::ROT, 2 * n},
                                      {FamilyId::SYT2, {.n = n}})
                       .ok());
    for (long n = 1; n <= 6; ++n)
        REQUIRE_EQ(check_equivariance(BijectionId::NCP_TO_NCM, {.n = n},
                                      {ActionId::KREWERAS, 2 * n}, {ActionId::ROT, 2 * n},
                                      {FamilyId::NCP, {.n = n}})
                       .ok());
    for (long n = 1; n <= 5; ++n) {
        bool same = true;
        for_each_object({FamilyId::SYT2, {.n = n}}, [&](const CombObject& x) {
            if (!(act({ActionId::PROMOTION, 2 * n}, x) == act({ActionId::JDT_PROMOTION, 2 * n}, x)))
                same = false;
        });
        REQUIRE_EQ(same);
    }

    auto roundTrip = [&](BijectionId id, const FamilyParams& params) {
        bool good = true;
        for_each_object(bijection_source(id, params), [&](const CombObject& x) {
            if (!(inverse_bijection(id, params, apply_bijection(id, params, x)) == x)) good = false;
        });
        return good;
    };
    for (long n = 1; n <= 8; ++n) {
        REQUIRE_EQ(roundTrip(BijectionId::NCM_TO_DYCK, {.n = n}));
        REQUIRE_EQ(roundTrip(BijectionId::SYT_TO_NCM, {.n = n}));
        REQUIRE_EQ(roundTrip(BijectionId::SYT_TO_DYCK, {.n = n}));
        REQUIRE_EQ(roundTrip(BijectionId::NCP_TO_NCM, {.n = n}));
        REQUIRE_EQ(roundTrip(BijectionId::NCP_TO_DYCK, {.n = n}));
        REQUIRE_EQ(roundTrip(BijectionId::DYCK_TO_NCC, {.n = n}));
        for (long s = 0; s <= n; ++s)
            REQUIRE_EQ(roundTrip(BijectionId::PHI_ROOT_IDEAL, {.n = n, .s = s}));
        for (long d = 1; d < n; ++d)
            if (n % d == 0) REQUIRE_EQ(roundTrip(BijectionId::BW_TO_NCM_SYM, {.n = n, .s = d}));
    }
    for (long n = 2; n <= 8; ++n)
        for (long k = 0; k <= n - 1; ++k)
            REQUIRE_EQ(roundTrip(BijectionId::SSYT_TO_NCP, {.n = n, .k = k}));
    return ok;
}

bool criterion6() {
    bool ok = true;
    for (long n = 2; n <= 8; ++n) {
        for (long k = 1; k <= n; ++k) {
            bool chain = true;
            for_each_object({FamilyId::SSYT2COL, {.n = n - 1, .k = k - 1}}, [&](const CombObject& x) {
                CombObject ncp = apply_bijection(BijectionId::SSYT_TO_NCP, {.n = n, .k = k - 1}, x);
                if (statistic(StatId::BLOCKS, ncp) != k) chain = false;
            });
            REQUIRE_EQ(chain);
        }
        bool blocksToEven = true, blocksToPeaks = true;
        for_each_object({FamilyId::NCP, {.n = n}}, [&](const CombObject& x) {
            long blocks = statistic(StatId::BLOCKS, x);
            CombObject ncm = apply_bijection(BijectionId::NCP_TO_NCM, {.n = n}, x);
            if (statistic(StatId::EVEN_EDGES, ncm) + 1 != blocks) blocksToEven = false;
            CombObject dyck = apply_bijection(BijectionId::NCP_TO_DYCK, {.n = n}, x);
            if (statistic(StatId::PEAKS, dyck) != blocks) blocksToPeaks = false;
        });
        REQUIRE_EQ(blocksToEven);
        REQUIRE_EQ(blocksToPeaks);
        bool valleysToConfig = true;
        for_each_object({FamilyId::DYCK, {.n = n}}, [&](const CombObject& x) {
            CombObject cfg = apply_bijection(BijectionId::DYCK_TO_NCC, {.n = n}, x);
            if (statistic(StatId::VALLEYS, x) !=
                statistic(StatId::PROPER_EDGES, cfg) + statistic(StatId::LOOPS, cfg))
                valleysToConfig = false;
        });
        REQUIRE_EQ(valleysToConfig);
    }
    return ok;
}

bool criterion7() {
    bool ok = true;
    // every registered triple: the induced permutation order divides the
    // declared group order, strict divisors flagged below
    long strictDivisors = 0;
    for (const auto& t : csp_registry()) {
        if (t.expect != Expectation::Pass) continue;
        for (const auto& p : t.domain(4)) {
            ActionSpec a = t.action(p);
            long ord = order_check(a, t.family(p));
            if (a.order % ord != 0) {
                std::cout << "    " << t.id << " " << p.to_string() << ": order " << ord
                          << " does not divide declared " << a.order << "\n";
                ok = false;
            } else if (ord != a.order) {
                if (++strictDivisors <= 4)
                    std::cout << "    note: " << t.id << " " << p.to_string()
                              << ": strict divisor " << ord << " of declared " << a.order << "\n";
            }
        }
    }
    if (strictDivisors > 4)
        std::cout << "    note: " << strictDivisors
                  << " small cases total where the induced order is a strict divisor\n";
    for (long n = 2; n <= 5; ++n)
        REQUIRE_EQ(order_check({ActionId::TWIST, 2 * n}, {FamilyId::NCC, {.n = n + 1}}) == 2 * n);
    // the ambient type B rotation is subscripted 2n; the induced order
    // divides it through the half-turn kernel
    for (long n = 2; n <= 5; ++n) {
        long ord = order_check({ActionId::ROT_B, n}, {FamilyId::NCPB, {.n = n}});
        REQUIRE_EQ((2 * n) % ord == 0);
    }
    for (long n = 1; n <= 4; ++n) {
        long ord = order_check({ActionId::ROWMOTION, 2 * n}, {FamilyId::OI, {.n = n, .s = n}});
        REQUIRE_EQ((2 * n) % ord == 0);
    }

    // the skew-shape counterexample: on the shape (2,2,1)/(1) with entries
    // at most 4, promotion has an orbit of size 3, not 4
    SkewGrid a{{1, 0, 0}, {{3}, {1, 4}, {2}}};
    SkewGrid cur = a;
    int period = 0;
    for (int i = 1; i <= 12; ++i) {
        cur = skew_promotion(cur, 4);
        if (cur == a) {
            period = i;
            break;
        }
    }
    REQUIRE_EQ(period == 3);
    // and the straight shapes of the same size do close up in 4 steps
    SkewGrid b{{0, 0}, {{1, 2}, {2, 4}}};
    SkewGrid cb = b;
    int pb = 0;
    for (int i = 1; i <= 12; ++i) {
        cb = skew_promotion(cb, 4);
        if (cb == b) {
            pb = i;
            break;
        }
    }
    REQUIRE_EQ(4 % pb == 0);
    return ok;
}

bool criterion8() {
    bool ok = true;
    for (long n = 1; n <= 40; ++n)
        for (long k = 0; k <= n; ++k)
            for (long o = 1; o <= 2 * n; ++o) {
                if ((2 * n) % o != 0) continue;
                auto lucas = q_lucas_eval(n, k, o);
                auto direct = eval_at_root(q_binomial(n, k), o, 1);
                bool agree = lucas.integral == direct.integral &&
                             (lucas.integral ? lucas.value == direct.value
                                             : lucas.residue == direct.residue);
                if (!agree) {
                    std::cout << "    disagreement at n=" << n << " k=" << k << " o=" << o << "\n";
                    ok = false;
                }
            }
    return ok;
}

} // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();

    report(1, "polynomial identity suite (exact)", criterion1());
    report(2, "worked golden values reproduced exactly", criterion2());
    long verifyMillis = 0;
    bool c3 = criterion3(verifyMillis);
    report(3, "full verification of the triple registry (" + std::to_string(verifyMillis) +
                  " ms, budget 300000 ms)",
           c3);
    report(4, "negative controls fail as predicted", criterion4());
    report(5, "equivariance and round-trip suite", criterion5());
    report(6, "statistic transport along the refinement chain", criterion6());
    report(7, "declared group orders and the size-3 skew orbit", criterion7());
    report(8, "q-Lucas agrees with cyclotomic reduction up to n = 40", criterion8());

    auto t1 = std::chrono::steady_clock::now();
    std::cout << "total "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms, " << (failures == 0 ? "all criteria passed" : "FAILURES PRESENT") << "\n";
    return failures == 0 ? 0 : 1;
}
