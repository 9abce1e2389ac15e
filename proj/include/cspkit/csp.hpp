#pragma once

/*
  The cyclic sieving verification engine.

  A registry entry binds a family template, an action with its declared
  group order m, and a polynomial recipe.  verify_triple() enumerates the
  family once, counts the fixed points of g^d for every divisor d of m by
  literal d-fold application, evaluates the polynomial at xi^d by exact
  cyclotomic reduction, and reports one row per divisor.  Divisors
  suffice because fixed-point counts and integral evaluations only depend
  on gcd(d, m); a seeded non-divisor spot check exercises exactly that.

  Negative controls are first-class: a triple whose polynomial evaluates
  non-integrally, or disagrees with a fixed-point count, fails its rows
  rather than erroring, and registry entries carry an expectation flag.
*/

#include "cspkit/actions.hpp"
#include "cspkit/named_poly.hpp"
#include "cspkit/stats.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace cspkit {

struct TripleParams {
    long n = 0, k = 0, e = 0, l = 0, r = 0;
    auto operator<=>(const TripleParams&) const = default;
    std::string to_string() const {
        std::ostringstream os;
        os << "n=" << n;
        if (k != 0) os << ",k=" << k;
        if (e != 0) os << ",e=" << e;
        if (l != 0) os << ",l=" << l;
        if (r != 0) os << ",r=" << r;
        return os.str();
    }
};

enum class Expectation { Pass, FailThis, FailSome };

struct CSPTriple {
    std::string id;
    std::string summary;
    std::function<FamilySpec(const TripleParams&)> family;
    std::function<ActionSpec(const TripleParams&)> action;
    std::function<IntPoly(const TripleParams&)> polynomial;
    std::function<std::vector<TripleParams>(long)> domain; // capped by max n
    long default_max_n = 0;
    Expectation expect = Expectation::Pass;
};

struct DivisorRow {
    long d = 0;
    long order = 0; // order of g^d
    Int fixed = 0;
    bool integral = true;
    Int eval = 0;
    bool ok = false;
};

struct SpotCheck {
    bool ran = false;
    long j = 0, g = 0;
    Int fixed_j = 0, fixed_g = 0;
    bool ok = true;
};

struct VerificationReport {
    std::string triple_id;
    std::string summary;
    TripleParams params;
    long group_order = 1;
    std::vector<DivisorRow> rows;
    SpotCheck spot;
    bool pass = false;
    long millis = 0;
};

/// |{x in X : a^d x = x}| by enumeration and d-fold application.
inline Int count_fixed(const FamilySpec& spec, const ActionSpec& a, long d) {
    Int cnt = 0;
    for_each_object(spec, [&](const CombObject& x) {
        if (act_pow(a, x, d) == x) cnt += 1;
    });
    return cnt;
}

inline std::vector<long> divisors_of(long m) {
    std::vector<long> ds;
    for (long d = 1; d <= m; ++d)
        if (m % d == 0) ds.push_back(d);
    return ds;
}

inline VerificationReport verify_triple(const CSPTriple& t, const TripleParams& p,
                                        bool fullSweep = false) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.triple_id = t.id;
    rep.summary = t.summary;
    rep.params = p;
    FamilySpec spec = t.family(p);
    ActionSpec a = t.action(p);
    IntPoly f = t.polynomial(p);
    long m = a.order;
    rep.group_order = m;

    std::vector<long> ds = fullSweep ? [&] {
        std::vector<long> all;
        for (long d = 1; d <= m; ++d) all.push_back(d);
        return all;
    }() : divisors_of(m);

    // one enumeration pass counts the fixed points of every power
    std::map<long, Int> fixed;
    for (long d : ds) fixed[d] = 0;
    for_each_object(spec, [&](const CombObject& x) {
        CombObject y = x;
        for (long step = 1; step <= ds.back(); ++step) {
            y = act(a, y);
            auto it = fixed.find(step);
            if (it != fixed.end() && y == x) it->second += 1;
        }
    });

    rep.pass = true;
    for (long d : ds) {
        DivisorRow row;
        row.d = d;
        row.order = reduced_order(m, d);
        row.fixed = fixed[d];
        RootOfUnityValue v = eval_at_root(f, m, d);
        row.integral = v.integral;
        if (v.integral) row.eval = v.value;
        row.ok = v.integral && v.value == row.fixed;
        if (!row.ok) rep.pass = false;
        rep.rows.push_back(row);
    }

    // seeded non-divisor spot check: counts and integral evaluations only
    // depend on gcd with the group order
    std::vector<long> nondiv;
    for (long j = 1; j < m; ++j)
        if (m % j != 0) nondiv.push_back(j);
    if (!nondiv.empty()) {
        std::seed_seq seq{static_cast<unsigned>(std::hash<std::string>{}(t.id)),
                          static_cast<unsigned>(p.n), static_cast<unsigned>(p.k),
                          static_cast<unsigned>(p.e), static_cast<unsigned>(p.l),
                          static_cast<unsigned>(p.r)};
        std::mt19937 rng(seq);
        long j = nondiv[rng() % nondiv.size()];
        rep.spot.ran = true;
        rep.spot.j = j;
        rep.spot.g = std::gcd(j, m);
        rep.spot.fixed_j = count_fixed(spec, a, j);
        rep.spot.fixed_g = count_fixed(spec, a, rep.spot.g);
        rep.spot.ok = rep.spot.fixed_j == rep.spot.fixed_g;
        RootOfUnityValue vj = eval_at_root(f, m, j);
        RootOfUnityValue vg = eval_at_root(f, m, rep.spot.g);
        if (vj.integral && vg.integral && vj.value != vg.value) rep.spot.ok = false;
        if (!rep.spot.ok) rep.pass = false;
    }

    auto t1 = std::chrono::steady_clock::now();
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// The registry.

namespace detail {

inline std::vector<TripleParams> range_n(long lo, long hi) {
    std::vector<TripleParams> out;
    for (long n = lo; n <= hi; ++n) out.push_back({.n = n});
    return out;
}

template <class F>
std::vector<TripleParams> range_nk(long lo, long hi, F&& kRange) {
    std::vector<TripleParams> out;
    for (long n = lo; n <= hi; ++n)
        for (long k : kRange(n)) out.push_back({.n = n, .k = k});
    return out;
}

inline std::vector<TripleParams> range_nel(long lo, long hi) {
    std::vector<TripleParams> out;
    for (long n = lo; n <= hi; ++n)
        for (long e = 0; 2 * e <= n; ++e)
            for (long l = 0; 2 * e + l <= n; ++l)
                out.push_back({.n = n, .e = e, .l = l});
    return out;
}

inline std::vector<long> seq(long lo, long hi) {
    std::vector<long> v;
    for (long x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

} // namespace detail

inline const std::vector<CSPTriple>& csp_registry() {
    static const std::vector<CSPTriple> reg = [] {
        using P = TripleParams;
        std::vector<CSPTriple> r;
        auto add = [&](CSPTriple t) { r.push_back(std::move(t)); };

        add({"T1", "triangulations of an n-gon under rotation vs Cat_q(n-2)",
             [](const P& p) { return FamilySpec{FamilyId::TRI, {.n = p.n}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT, p.n}; },
             [](const P& p) { return cat_q(p.n - 2); },
             [](long hi) { return detail::range_n(3, hi); }, 12});

        add({"T2", "triangulations with k ears under rotation vs Tri_q(n,k)",
             [](const P& p) { return FamilySpec{FamilyId::TRI_EAR, {.n = p.n, .k = p.k}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT, p.n}; },
             [](const P& p) { return tri_ear_q(p.n, p.k); },
             [](long hi) {
                 return detail::range_nk(4, hi, [](long n) { return detail::seq(2, n / 2); });
             },
             12});

        add({"T3", "two-row SYT under promotion vs Cat_q(n)",
             [](const P& p) { return FamilySpec{FamilyId::SYT2, {.n = p.n}}; },
             [](const P& p) { return ActionSpec{ActionId::PROMOTION, 2 * p.n}; },
             [](const P& p) { return cat_q(p.n); },
             [](long hi) { return detail::range_n(1, hi); }, 8});

        add({"T4", "non-crossing matchings under rotation vs Cat_q(n)",
             [](const P& p) { return FamilySpec{FamilyId::NCM, {.n = p.n}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT, 2 * p.n}; },
             [](const P& p) { return cat_q(p.n); },
             [](long hi) { return detail::range_n(1, hi); }, 9});

        add({"T5", "non-crossing partitions under Kreweras complementation vs Cat_q(n)",
             [](const P& p) { return FamilySpec{FamilyId::NCP, {.n = p.n}}; },
             [](const P& p) { return ActionSpec{ActionId::KREWERAS, 2 * p.n}; },
             [](const P& p) { return cat_q(p.n); },
             [](long hi) { return detail::range_n(1, hi); }, 8});

        add({"T6", "matchings with k short edges under rotation vs the cdes q-analog",
             [](const P& p) { return FamilySpec{FamilyId::NCM_SH, {.n = p.n, .k = p.k}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT, 2 * p.n}; },
             [](const P& p) { return g_cdes(p.n, p.k); },
             [](long hi) {
                 return detail::range_nk(2, hi, [](long n) { return detail::seq(2, n); });
             },
             9});

        add({"T7", "two-row SYT with k cyclic descents under promotion",
             [](const P& p) { return FamilySpec{FamilyId::SYT_CDES, {.n = p.n, .k = p.k}}; },
             [](const P& p) { return ActionSpec{ActionId::PROMOTION, 2 * p.n}; },
             [](const P& p) { return g_cdes(p.n, p.k); },
             [](long hi) {
                 return detail::range_nk(2, hi, [](long n) { return detail::seq(2, n); });
             },
             8});

        add({"T8", "non-crossing partitions with k blocks under rotation vs Nar_q(n,k)",
             [](const P& p) { return FamilySpec{FamilyId::NCP_BLOCKS, {.n = p.n, .k = p.k}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT, p.n}; },
             [](const P& p) { return nar_q(p.n, p.k); },
             [](long hi) {
                 return detail::range_nk(1, hi, [](long n) { return detail::seq(1, n); });
             },
             9});

        add({"T9", "matchings with k even edges under rotation vs Nar_q(n,k+1)",
             [](const P& p) { return FamilySpec{FamilyId::NCM_EVEN, {.n = p.n, .k = p.k}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT, p.n}; },
             [](const P& p) { return nar_q(p.n, p.k + 1); },
             [](long hi) {
                 return detail::range_nk(1, hi, [](long n) { return detail::seq(0, n - 1); });
             },
             9});

        add({"T10", "(1,2)-configurations under rotation vs Cat_q(n+1)",
             [](const P& p) { return FamilySpec{FamilyId::NCC, {.n = p.n + 1}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT, p.n}; },
             [](const P& p) { return cat_q(p.n + 1); },
             [](long hi) { return detail::range_n(2, hi); }, 10});

        add({"T11", "(1,2)-configurations with e edges, l loops under rotation vs qNCC",
             [](const P& p) { return FamilySpec{FamilyId::NCC_EL, {.n = p.n + 1, .e = p.e, .l = p.l}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT, p.n}; },
             [](const P& p) { return q_ncc(p.n, p.e, p.l); },
             [](long hi) { return detail::range_nel(2, hi); }, 9});

        add({"T12", "(1,2)-configurations with k-1 edges and loops vs Nar_q(n+1,k)",
             [](const P& p) { return FamilySpec{FamilyId::NCC_K, {.n = p.n + 1, .k = p.k}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT, p.n}; },
             [](const P& p) { return nar_q(p.n + 1, p.k); },
             [](long hi) {
                 return detail::range_nk(2, hi, [](long n) { return detail::seq(1, n + 1); });
             },
             10});

        add({"T13", "two-column SSYT under Bender-Knuth promotion vs Nar_q(n,k+1)",
             [](const P& p) { return FamilySpec{FamilyId::SSYT2COL, {.n = p.n - 1, .k = p.k}}; },
             [](const P& p) { return ActionSpec{ActionId::K_PROMOTION, p.n - 1}; },
             [](const P& p) { return nar_q(p.n, p.k + 1); },
             [](long hi) {
                 return detail::range_nk(2, hi, [](long n) { return detail::seq(1, n - 1); });
             },
             8});

        add({"T13B", "two-column SSYT under the order-n entry action vs Nar_q(n,k+1)",
             [](const P& p) { return FamilySpec{FamilyId::SSYT2COL, {.n = p.n - 1, .k = p.k}}; },
             [](const P& p) { return ActionSpec{ActionId::PHI_SSYT, p.n}; },
             [](const P& p) { return nar_q(p.n, p.k + 1); },
             [](long hi) {
                 return detail::range_nk(2, hi, [](long n) { return detail::seq(1, n - 1); });
             },
             8});

        add({"T14", "(1,2)-configurations under the twist action vs qbinom(2n,n)-q^2 qbinom(2n,n-2)",
             [](const P& p) { return FamilySpec{FamilyId::NCC, {.n = p.n + 1}}; },
             [](const P& p) { return ActionSpec{ActionId::TWIST, 2 * p.n}; },
             [](const P& p) { return twist_cat_q(p.n); },
             [](long hi) { return detail::range_n(1, hi); }, 10});

        add({"T15", "binary words under cyclic shift vs qbinom(2n,n)",
             [](const P& p) { return FamilySpec{FamilyId::BW, {.n = 2 * p.n, .k = p.n}}; },
             [](const P& p) { return ActionSpec{ActionId::SHIFT, 2 * p.n}; },
             [](const P& p) { return cat_b_q(p.n); },
             [](long hi) { return detail::range_n(1, hi); }, 7});

        add({"T16", "skew two-row SYT, promotion through the word encoding (equivariant restatement of T15)",
             [](const P& p) { return FamilySpec{FamilyId::SKEW_SYT, {.n = p.n, .s = p.n}}; },
             [](const P& p) { return ActionSpec{ActionId::PROMOTION_SKEW, 2 * p.n}; },
             [](const P& p) { return cat_b_q(p.n); },
             [](long hi) { return detail::range_n(1, hi); }, 7});

        add({"T17", "type B root poset order ideals under rowmotion vs qbinom(2n,n)",
             [](const P& p) { return FamilySpec{FamilyId::OI, {.n = p.n, .s = p.n}}; },
             [](const P& p) { return ActionSpec{ActionId::ROWMOTION, 2 * p.n}; },
             [](const P& p) { return cat_b_q(p.n); },
             [](long hi) { return detail::range_n(1, hi); }, 6});

        add({"T18", "half-turn symmetric partitions under rotation vs qbinom(2n,n)",
             [](const P& p) { return FamilySpec{FamilyId::NCPB, {.n = p.n}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT_B, p.n}; },
             [](const P& p) { return cat_b_q(p.n); },
             [](long hi) { return detail::range_n(1, hi); }, 7});

        add({"T19", "binary words with k cyclic descents under shift vs qBW(n,k)",
             [](const P& p) { return FamilySpec{FamilyId::BW_CDES, {.n = p.n, .k = p.k}}; },
             [](const P& p) { return ActionSpec{ActionId::SHIFT, 2 * p.n}; },
             [](const P& p) { return q_bw(p.n, p.k); },
             [](long hi) {
                 return detail::range_nk(1, hi, [](long n) { return detail::seq(1, n); });
             },
             7});

        add({"T20", "marked (1,2)-configurations under squared twist vs qbinom(2n,n)",
             [](const P& p) { return FamilySpec{FamilyId::NCCB, {.n = p.n + 1}}; },
             [](const P& p) { return ActionSpec{ActionId::TWIST_SQUARED, p.n}; },
             [](const P& p) { return cat_b_q(p.n); },
             [](long hi) { return detail::range_n(1, hi); }, 9});

        add({"T21", "marked (1,2)-configurations with e edges, l loops under rotation",
             [](const P& p) { return FamilySpec{FamilyId::NCCB_EL, {.n = p.n + 1, .e = p.e, .l = p.l}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT, p.n}; },
             [](const P& p) {
                 IntPoly base = q_ncc(p.n, p.e, p.l);
                 return base + base * q_int(p.e);
             },
             [](long hi) { return detail::range_nel(2, hi); }, 8});

        add({"T22", "marked (1,2)-configurations with k edges and loops vs U_{n,k}",
             [](const P& p) { return FamilySpec{FamilyId::NCCB_K, {.n = p.n + 1, .k = p.k}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT, p.n}; },
             [](const P& p) { return u_nk(p.n, p.k); },
             [](long hi) {
                 return detail::range_nk(2, hi, [](long n) { return detail::seq(0, n); });
             },
             8});

        add({"T23", "symmetric partitions with k blocks under rotation vs [t^k]Pi_n",
             [](const P& p) { return FamilySpec{FamilyId::NCPB_BLOCKS, {.n = p.n, .k = p.k}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT_B, p.n}; },
             [](const P& p) { return pi_b_coeff(p.n, p.k); },
             [](long hi) {
                 return detail::range_nk(1, hi, [](long n) { return detail::seq(1, 2 * n); });
             },
             7});

        add({"T23P", "symmetric partitions with 2k or 2k+1 blocks vs q^{k^2} qbinom(n,k)^2",
             [](const P& p) { return FamilySpec{FamilyId::NCPB_BLOCKS_PAIR, {.n = p.n, .k = p.k}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT_B, p.n}; },
             [](const P& p) { return nar_b_paired(p.n, p.k); },
             [](long hi) {
                 return detail::range_nk(1, hi, [](long n) { return detail::seq(0, n); });
             },
             7});

        add({"T23M", "symmetric matchings with k-1 even edges under rotation vs [t^k]Pi_n",
             [](const P& p) { return FamilySpec{FamilyId::NCMB_EVEN, {.n = p.n, .k = p.k - 1}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT_B, p.n}; },
             [](const P& p) { return pi_b_coeff(p.n, p.k); },
             [](long hi) {
                 return detail::range_nk(1, hi, [](long n) { return detail::seq(1, 2 * n); });
             },
             7});

        add({"T23MP", "symmetric matchings with 2k-1 or 2k even edges vs q^{k^2} qbinom(n,k)^2",
             [](const P& p) { return FamilySpec{FamilyId::NCMB_EVEN_PAIR, {.n = p.n, .k = p.k}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT_B, p.n}; },
             [](const P& p) { return nar_b_paired(p.n, p.k); },
             [](long hi) {
                 return detail::range_nk(1, hi, [](long n) { return detail::seq(0, n); });
             },
             7});

        add({"T24", "half-turn symmetric triangulations under rotation vs qbinom(2n,n)",
             [](const P& p) { return FamilySpec{FamilyId::TRIB, {.n = p.n}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT_B, p.n + 1}; },
             [](const P& p) { return cat_b_q(p.n); },
             [](long hi) { return detail::range_n(1, hi); }, 7});

        add({"T25", "region-marked matchings with k even edges under rotation",
             [](const P& p) {
                 return FamilySpec{FamilyId::NCM_MARKED_EVEN, {.n = p.n, .k = p.k, .r = p.r}};
             },
             [](const P& p) { return ActionSpec{ActionId::ROT, p.n}; },
             [](const P& p) { return marked_ncm_q(p.n, p.k, p.r); },
             [](long hi) {
                 std::vector<TripleParams> out;
                 for (long n = 1; n <= hi; ++n)
                     for (long k = 0; k <= n - 1; ++k)
                         for (long r = 0; r <= n + 1; ++r)
                             out.push_back({.n = n, .k = k, .r = r});
                 return out;
             },
             7});

        // Negative controls: the engine must prove these fail.
        add({"X1", "control: the marked-configuration q-analog that fails sieving",
             [](const P& p) { return FamilySpec{FamilyId::NCCB_EL, {.n = p.n + 1, .e = p.e, .l = p.l}}; },
             [](const P& p) { return ActionSpec{ActionId::ROT, p.n}; },
             [](const P& p) { return q_ncc_b(p.n, p.e, p.l); },
             [](long hi) { return detail::range_nel(2, hi); }, 6,
             Expectation::FailSome});

        add({"X2", "control: unsquared twist with qbinom(2n,n) fails at n=2",
             [](const P& p) { return FamilySpec{FamilyId::NCCB, {.n = p.n + 1}}; },
             [](const P& p) { return ActionSpec{ActionId::TWIST, 2 * p.n}; },
             [](const P& p) { return cat_b_q(p.n); },
             [](long hi) { return detail::range_n(2, hi); }, 2,
             Expectation::FailThis});

        return r;
    }();
    return reg;
}

inline const CSPTriple& triple_by_id(const std::string& id) {
    for (const auto& t : csp_registry())
        if (t.id == id) return t;
    throw OutOfDomain("unknown triple id: " + id);
}

// ---------------------------------------------------------------------------
// Refinements.

struct RefinementReport {
    std::string id;
    TripleParams params;
    bool sets_partition = false;
    bool polynomials_sum = false;
    bool children_stable = false;
    std::string witness;
    bool pass() const { return sets_partition && polynomials_sum && children_stable; }
};

/// Checks that the child triples partition the parent: disjoint union of
/// the child sets is the parent set, the child polynomials sum to the
/// parent polynomial, and the action maps each child set to itself.
inline RefinementReport verify_refinement(
    const std::string& id, const CSPTriple& parent, const TripleParams& pp,
    const std::vector<std::pair<const CSPTriple*, TripleParams>>& children) {
    RefinementReport rep;
    rep.id = id;
    rep.params = pp;

    std::vector<CombObject> parentObjs = enumerate(parent.family(pp));
    std::vector<CombObject> childUnion;
    for (auto& [ct, cp] : children) {
        auto objs = enumerate(ct->family(cp));
        childUnion.insert(childUnion.end(), objs.begin(), objs.end());
    }
    std::sort(childUnion.begin(), childUnion.end());
    rep.sets_partition = childUnion.size() == parentObjs.size() &&
                         std::equal(childUnion.begin(), childUnion.end(), parentObjs.begin(),
                                    [](const CombObject& a, const CombObject& b) { return a == b; });
    if (!rep.sets_partition) rep.witness = "child sets do not partition the parent set";

    IntPoly sum;
    for (auto& [ct, cp] : children) sum += ct->polynomial(cp);
    rep.polynomials_sum = sum == parent.polynomial(pp);
    if (!rep.polynomials_sum && rep.witness.empty())
        rep.witness = "child polynomials do not sum to the parent polynomial";

    rep.children_stable = true;
    for (auto& [ct, cp] : children) {
        ActionSpec a = ct->action(cp);
        auto objs = enumerate(ct->family(cp));
        for (const auto& x : objs) {
            CombObject y = act(a, x);
            if (!std::binary_search(objs.begin(), objs.end(), y)) {
                rep.children_stable = false;
                if (rep.witness.empty()) rep.witness = "action leaves a child set";
                break;
            }
        }
        if (!rep.children_stable) break;
    }
    return rep;
}

struct RefinementCase {
    std::string id;
    std::string parent_id;
    // enumerate (parent params, children) pairs up to a cap on n
    std::function<std::vector<std::pair<TripleParams, std::vector<std::pair<std::string, TripleParams>>>>(long)> cases;
    long default_max_n = 0;
};

inline const std::vector<RefinementCase>& refinement_registry() {
    using P = TripleParams;
    using Kids = std::vector<std::pair<std::string, P>>;
    using Case = std::pair<P, Kids>;
    static const std::vector<RefinementCase> reg = [] {
        std::vector<RefinementCase> r;
        r.push_back({"R1", "T4",
                     [](long cap) {
                         std::vector<Case> cs;
                         for (long n = 2; n <= std::min(8L, cap); ++n) {
                             Kids kids;
                             for (long k = 2; k <= n; ++k) kids.push_back({"T6", {.n = n, .k = k}});
                             cs.push_back({{.n = n}, kids});
                         }
                         return cs;
                     },
                     8});
        r.push_back({"R2", "T1",
                     [](long cap) {
                         std::vector<Case> cs;
                         for (long n = 4; n <= std::min(10L, cap); ++n) {
                             Kids kids;
                             for (long k = 2; 2 * k <= n; ++k) kids.push_back({"T2", {.n = n, .k = k}});
                             cs.push_back({{.n = n}, kids});
                         }
                         return cs;
                     },
                     10});
        r.push_back({"R3", "T10",
                     [](long cap) {
                         std::vector<Case> cs;
                         for (long n = 2; n <= std::min(8L, cap); ++n) {
                             Kids kids;
                             for (long e = 0; 2 * e <= n; ++e)
                                 for (long l = 0; 2 * e + l <= n; ++l)
                                     kids.push_back({"T11", {.n = n, .e = e, .l = l}});
                             cs.push_back({{.n = n}, kids});
                         }
                         return cs;
                     },
                     8});
        r.push_back({"R4", "T12",
                     [](long cap) {
                         std::vector<Case> cs;
                         for (long n = 2; n <= std::min(8L, cap); ++n)
                             for (long k = 1; k <= n + 1; ++k) {
                                 Kids kids;
                                 for (long e = 0; e <= k - 1; ++e)
                                     kids.push_back({"T11", {.n = n, .e = e, .l = k - 1 - e}});
                                 cs.push_back({{.n = n, .k = k}, kids});
                             }
                         return cs;
                     },
                     8});
        r.push_back({"R5", "T15",
                     [](long cap) {
                         std::vector<Case> cs;
                         for (long n = 1; n <= std::min(6L, cap); ++n) {
                             Kids kids;
                             for (long k = 1; k <= n; ++k) kids.push_back({"T19", {.n = n, .k = k}});
                             cs.push_back({{.n = n}, kids});
                         }
                         return cs;
                     },
                     6});
        r.push_back({"R6", "T18",
                     [](long cap) {
                         std::vector<Case> cs;
                         for (long n = 1; n <= std::min(6L, cap); ++n) {
                             Kids kids;
                             for (long k = 1; k <= 2 * n; ++k) kids.push_back({"T23", {.n = n, .k = k}});
                             cs.push_back({{.n = n}, kids});
                         }
                         return cs;
                     },
                     6});
        r.push_back({"R7", "T22",
                     [](long cap) {
                         std::vector<Case> cs;
                         for (long n = 2; n <= std::min(7L, cap); ++n)
                             for (long k = 0; k <= n; ++k) {
                                 Kids kids;
                                 for (long e = 0; e <= k; ++e)
                                     kids.push_back({"T21", {.n = n, .e = e, .l = k - e}});
                                 cs.push_back({{.n = n, .k = k}, kids});
                             }
                         return cs;
                     },
                     7});
        r.push_back({"R8", "T23P",
                     [](long cap) {
                         std::vector<Case> cs;
                         for (long n = 1; n <= std::min(6L, cap); ++n)
                             for (long k = 0; k <= n; ++k) {
                                 Kids kids;
                                 kids.push_back({"T23", {.n = n, .k = 2 * k}});
                                 kids.push_back({"T23", {.n = n, .k = 2 * k + 1}});
                                 cs.push_back({{.n = n, .k = k}, kids});
                             }
                         return cs;
                     },
                     6});
        return r;
    }();
    return reg;
}

inline RefinementReport run_refinement_case(const RefinementCase& rc, const TripleParams& pp,
                                            const std::vector<std::pair<std::string, TripleParams>>& kids) {
    std::vector<std::pair<const CSPTriple*, TripleParams>> children;
    children.reserve(kids.size());
    for (auto& [id, cp] : kids) children.push_back({&triple_by_id(id), cp});
    return verify_refinement(rc.id, triple_by_id(rc.parent_id), pp, children);
}

} // namespace cspkit
