#pragma once

/*
  Cyclic group actions with declared orders.  The declared order is part
  of the ActionSpec; rotations derive their step width from the acted-on
  family (step = vertex count / order), so order n on NCM(n) rotates two
  steps while order 2n rotates one.

  act() is a pure function; order_check() computes the exact order of the
  induced permutation on an enumerated family.
*/

#include "cspkit/bijections.hpp"
#include "cspkit/families.hpp"
#include "cspkit/maps.hpp"

#include <numeric>
#include <string>

namespace cspkit {

enum class ActionId {
    ROT,            // rotation, step = vertices / order
    ROT_B,          // type B rotation, same mechanics as ROT
    SHIFT,          // cyclic shift on words
    PROMOTION,      // two-row SYT promotion, conjugate of matching rotation
    PROMOTION_SKEW, // skew two-row promotion through the word encoding
    JDT_PROMOTION,  // jeu-de-taquin promotion (oracle for PROMOTION)
    KREWERAS,       // conjugate of matching rotation through NCP_TO_NCM
    FLIP,           // toggle the loop mark on vertex 1
    TWIST,          // rot o flip on (1,2)-configurations
    TWIST_SQUARED,  // twist applied twice
    K_PROMOTION,    // Bender-Knuth promotion on two-column SSYT
    PHI_SSYT,       // the order-(n) action on SSYT(2^k, n-1)
    ROWMOTION       // rowmotion on type B root poset order ideals
};

struct ActionSpec {
    ActionId id;
    long order = 1;
    auto operator<=>(const ActionSpec&) const = default;
};

inline long family_vertex_count(const FamilySpec& spec) {
    const auto& p = spec.p;
    switch (spec.id) {
    case FamilyId::NCM: case FamilyId::NCM_SH: case FamilyId::NCM_EVEN:
    case FamilyId::NCM_MARKED: case FamilyId::NCM_MARKED_EVEN:
        return 2 * p.n;
    case FamilyId::NCMB: case FamilyId::NCMB_EVEN: case FamilyId::NCMB_EVEN_PAIR:
        return 4 * p.n;
    case FamilyId::NCP: case FamilyId::NCP_BLOCKS:
        return p.n;
    case FamilyId::NCPB: case FamilyId::NCPB_BLOCKS: case FamilyId::NCPB_BLOCKS_PAIR:
        return 2 * p.n;
    case FamilyId::NCC: case FamilyId::NCC_EL: case FamilyId::NCC_K: case FamilyId::NCC_LOOPS:
    case FamilyId::NCCB: case FamilyId::NCCB_EL: case FamilyId::NCCB_K:
        return p.n - 1;
    case FamilyId::TRI: case FamilyId::TRI_EAR:
        return p.n;
    case FamilyId::TRIB:
        return 2 * p.n + 2;
    default:
        throw FamilyMismatch("family_vertex_count: family has no vertex circle");
    }
}

// ---------------------------------------------------------------------------
// Tableau promotions.

/// Jeu-de-taquin promotion on a two-row rectangular SYT: delete the
/// largest entry, slide the hole to the top-left corner moving the larger
/// neighbor in, add one to every entry and place 1 in the corner.
inline Bits jdt_promotion_two_row(const Bits& w) {
    int twoN = static_cast<int>(w.size());
    int n = twoN / 2;
    std::vector<int> r1, r2;
    for (int i = 1; i <= twoN; ++i)
        (w[static_cast<std::size_t>(i) - 1] == 0 ? r1 : r2).push_back(i);
    int hr = 2, hc = n - 1;
    while (!(hr == 1 && hc == 0)) {
        if (hr == 2) {
            int above = r1[static_cast<std::size_t>(hc)];
            int left = hc > 0 ? r2[static_cast<std::size_t>(hc) - 1] : -1;
            if (left > above) {
                r2[static_cast<std::size_t>(hc)] = left;
                --hc;
            } else {
                r2[static_cast<std::size_t>(hc)] = above;
                hr = 1;
            }
        } else {
            r1[static_cast<std::size_t>(hc)] = r1[static_cast<std::size_t>(hc) - 1];
            --hc;
        }
    }
    // all entries shift up by one (old value e lands at word index e), and
    // the fresh entry 1 sits in the corner; r1[0] is the stale hole slot
    Bits out(static_cast<std::size_t>(twoN), 1);
    out[0] = 0;
    for (int i = 1; i < n; ++i) out[static_cast<std::size_t>(r1[static_cast<std::size_t>(i)])] = 0;
    return out;
}

/// Bender-Knuth involution t_j on a two-column semistandard tableau.
inline void bk_involution(std::vector<std::array<int, 2>>& rows, int j) {
    int k = static_cast<int>(rows.size());
    auto locked = [&](int i, int c) {
        int v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        if (v == j)
            return i + 1 < k && rows[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(c)] == j + 1;
        return i > 0 && rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(c)] == j;
    };
    for (int i = 0; i < k; ++i) {
        int freeJ = 0, freeJ1 = 0;
        std::vector<int> slots;
        for (int c = 0; c < 2; ++c) {
            int v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if ((v == j || v == j + 1) && !locked(i, c)) {
                slots.push_back(c);
                if (v == j) ++freeJ;
                else ++freeJ1;
            }
        }
        for (std::size_t t = 0; t < slots.size(); ++t) {
            int val = (static_cast<int>(t) < freeJ1) ? j : j + 1;
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(slots[t])] = val;
        }
    }
}

/// Bender-Knuth promotion with maximal entry m: t_1 t_2 ... t_{m-1},
/// rightmost factor applied first.
inline Ssyt2Col bk_promotion(const Ssyt2Col& t, int m) {
    Ssyt2Col out = t;
    for (int j = m - 1; j >= 1; --j) bk_involution(out.rows, j);
    return out;
}

/// The explicit action of order n on SSYT(2^k, n-1): add one to every
/// entry, then repair the columns by removing b+1 / n and inserting
/// 1 / l+1, where l and b locate the block of n and n-1 under the
/// correspondence with non-crossing partitions.
inline Ssyt2Col phi_ssyt(const Ssyt2Col& t, int n) {
    std::vector<int> col1, col2;
    for (const auto& r : t.rows) {
        col1.push_back(r[0]);
        col2.push_back(r[1]);
    }
    auto countGe = [](const std::vector<int>& v, int j) {
        return static_cast<int>(std::count_if(v.begin(), v.end(), [&](int x) { return x >= j; }));
    };
    std::vector<char> occurs(static_cast<std::size_t>(n) + 1, 0);
    for (int x : col1) occurs[static_cast<std::size_t>(x)] = 1;
    for (int x : col2) occurs[static_cast<std::size_t>(x)] = 1;
    int ell = 0, b = 0;
    for (int j = 1; j <= n - 1; ++j) {
        if (countGe(col1, j) == countGe(col2, j)) {
            b = j;
            if (!occurs[static_cast<std::size_t>(j)]) ell = j;
        }
    }
    for (int& x : col1) ++x;
    for (int& x : col2) ++x;
    if (ell != n - 1) {
        auto erase_one = [](std::vector<int>& v, int val, const char* who) {
            auto it = std::find(v.begin(), v.end(), val);
            if (it == v.end()) throw std::logic_error(std::string("phi_ssyt: missing ") + who);
            v.erase(it);
        };
        erase_one(col1, b + 1, "b+1 in column one");
        col1.insert(col1.begin(), 1);
        erase_one(col2, n, "n in column two");
        col2.insert(std::lower_bound(col2.begin(), col2.end(), ell + 1), ell + 1);
    }
    Ssyt2Col out;
    for (std::size_t i = 0; i < col1.size(); ++i)
        out.rows.push_back({col1[i], col2[i]});
    return out;
}

// ---------------------------------------------------------------------------
// Configuration flip and twist.

inline Config flip_config(const Config& c) {
    Config r = c;
    int p1 = c.size() >= 1 ? c.of(1) : -1;
    if (p1 == 0) r.partner[0] = 1;
    else if (p1 == 1) r.partner[0] = 0;
    return r; // no-op when vertex 1 carries a proper edge
}

inline Config twist_config(const Config& c) { return rotate_config(flip_config(c), 1); }

// ---------------------------------------------------------------------------
// act().

inline CombObject act(const ActionSpec& a, const CombObject& x) {
    const FamilySpec& spec = x.spec;
    switch (a.id) {
    case ActionId::ROT:
    case ActionId::ROT_B: {
        // On half-turn-symmetric families the half-turn acts trivially, so
        // the order-m type B rotation advances v/(2m) ambient steps.
        long v = family_vertex_count(spec);
        long denom = (a.id == ActionId::ROT_B) ? 2 * a.order : a.order;
        if (a.order <= 0 || v % denom != 0)
            throw FamilyMismatch("rotation order must divide the vertex count");
        int step = static_cast<int>(v / denom);
        switch (spec.id) {
        case FamilyId::NCM: case FamilyId::NCM_SH: case FamilyId::NCM_EVEN:
        case FamilyId::NCMB: case FamilyId::NCMB_EVEN: case FamilyId::NCMB_EVEN_PAIR:
            return {spec, rotate_matching(as_matching(x), step)};
        case FamilyId::NCP: case FamilyId::NCP_BLOCKS:
        case FamilyId::NCPB: case FamilyId::NCPB_BLOCKS: case FamilyId::NCPB_BLOCKS_PAIR:
            return {spec, rotate_partition(as_partition(x), static_cast<int>(v), step)};
        case FamilyId::NCC: case FamilyId::NCC_EL: case FamilyId::NCC_K: case FamilyId::NCC_LOOPS:
        case FamilyId::NCCB: case FamilyId::NCCB_EL: case FamilyId::NCCB_K:
            return {spec, rotate_config(as_config(x), step)};
        case FamilyId::TRI: case FamilyId::TRI_EAR: case FamilyId::TRIB:
            return {spec, rotate_triangulation(as_triangulation(x), static_cast<int>(v), step)};
        case FamilyId::NCM_MARKED: case FamilyId::NCM_MARKED_EVEN:
            return {spec, rotate_marked(as_marked(x), step)};
        default:
            throw FamilyMismatch("rotation: unsupported family");
        }
    }
    case ActionId::SHIFT:
    case ActionId::PROMOTION_SKEW: {
        const Bits& w = as_word(x).bits;
        if (a.order != static_cast<long>(w.size()))
            throw FamilyMismatch("shift order must equal the word length");
        return {spec, Word{rotate_word(w, 1)}};
    }
    case ActionId::PROMOTION: {
        if (spec.id != FamilyId::SYT2 && spec.id != FamilyId::SYT_CDES)
            throw FamilyMismatch("PROMOTION expects a two-row SYT");
        Matching m = matching_from_starters(as_word(x).bits);
        return {spec, Word{starters_of_matching(rotate_matching(m, 1))}};
    }
    case ActionId::JDT_PROMOTION:
        if (spec.id != FamilyId::SYT2 && spec.id != FamilyId::SYT_CDES)
            throw FamilyMismatch("JDT_PROMOTION expects a two-row SYT");
        return {spec, Word{jdt_promotion_two_row(as_word(x).bits)}};
    case ActionId::KREWERAS: {
        if (spec.id != FamilyId::NCP && spec.id != FamilyId::NCP_BLOCKS)
            throw FamilyMismatch("KREWERAS expects a non-crossing partition");
        Matching m = ncp_to_ncm(as_partition(x), static_cast<int>(spec.p.n));
        return {spec, ncm_to_ncp(rotate_matching(m, 1))};
    }
    case ActionId::FLIP:
        return {spec, flip_config(as_config(x))};
    case ActionId::TWIST:
        return {spec, twist_config(as_config(x))};
    case ActionId::TWIST_SQUARED:
        return {spec, twist_config(twist_config(as_config(x)))};
    case ActionId::K_PROMOTION:
        if (spec.id != FamilyId::SSYT2COL) throw FamilyMismatch("K_PROMOTION expects SSYT2COL");
        return {spec, bk_promotion(as_ssyt(x), static_cast<int>(spec.p.n))};
    case ActionId::PHI_SSYT:
        if (spec.id != FamilyId::SSYT2COL) throw FamilyMismatch("PHI_SSYT expects SSYT2COL");
        return {spec, phi_ssyt(as_ssyt(x), static_cast<int>(spec.p.n) + 1)};
    case ActionId::ROWMOTION:
        // only the full ideal family: restricted to s < n the orbit
        // structure is not usable and the image may leave the family
        if (spec.id != FamilyId::OI || spec.p.s != spec.p.n)
            throw FamilyMismatch("ROWMOTION expects the full ideal family OI(n,n)");
        return {spec, Word{oi_rowmotion(as_word(x).bits, static_cast<int>(spec.p.n))}};
    }
    throw FamilyMismatch("act: unhandled action");
}

inline CombObject act_pow(const ActionSpec& a, CombObject x, long times) {
    for (long i = 0; i < times; ++i) x = act(a, x);
    return x;
}

// ---------------------------------------------------------------------------
// Exact order of the induced permutation.

inline long order_check(const ActionSpec& a, const FamilySpec& spec) {
    std::vector<CombObject> objs = enumerate(spec);
    auto index_of = [&](const CombObject& y) {
        auto it = std::lower_bound(objs.begin(), objs.end(), y);
        if (it == objs.end() || !(*it == y))
            throw std::logic_error("order_check: action leaves the family");
        return static_cast<std::size_t>(it - objs.begin());
    };
    std::vector<std::size_t> perm(objs.size());
    for (std::size_t i = 0; i < objs.size(); ++i) perm[i] = index_of(act(a, objs[i]));
    std::vector<char> seen(objs.size(), 0);
    long ord = 1;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = perm[j];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

/// Multiset of orbit sizes of the action on the family.
inline std::vector<long> orbit_profile(const ActionSpec& a, const FamilySpec& spec) {
    std::vector<CombObject> objs = enumerate(spec);
    auto index_of = [&](const CombObject& y) {
        auto it = std::lower_bound(objs.begin(), objs.end(), y);
        if (it == objs.end() || !(*it == y))
            throw std::logic_error("orbit_profile: action leaves the family");
        return static_cast<std::size_t>(it - objs.begin());
    };
    std::vector<char> seen(objs.size(), 0);
    std::vector<long> sizes;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        CombObject cur = objs[i];
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            cur = act(a, cur);
            j = index_of(cur);
            ++len;
        }
        sizes.push_back(len);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

// ---------------------------------------------------------------------------
// Equivariance checking (part of the bijection layer's contract).

struct EquivarianceReport {
    long checked = 0;
    std::vector<CombObject> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

inline EquivarianceReport check_equivariance(BijectionId bij, const FamilyParams& bijParams,
                                             const ActionSpec& srcAction,
                                             const ActionSpec& dstAction,
                                             const FamilySpec& srcSpec) {
    EquivarianceReport rep;
    for_each_object(srcSpec, [&](const CombObject& x) {
        ++rep.checked;
        CombObject lhs = apply_bijection(bij, bijParams, act(srcAction, x));
        CombObject rhs = act(dstAction, apply_bijection(bij, bijParams, x));
        if (!(lhs == rhs)) rep.counterexamples.push_back(x);
    });
    return rep;
}

inline std::string action_name(ActionId id) {
    switch (id) {
    case ActionId::ROT: return "rot";
    case ActionId::ROT_B: return "rot_b";
    case ActionId::SHIFT: return "shift";
    case ActionId::PROMOTION: return "promotion";
    case ActionId::PROMOTION_SKEW: return "promotion_skew";
    case ActionId::JDT_PROMOTION: return "jdt_promotion";
    case ActionId::KREWERAS: return "kreweras";
    case ActionId::FLIP: return "flip";
    case ActionId::TWIST: return "twist";
    case ActionId::TWIST_SQUARED: return "twist2";
    case ActionId::K_PROMOTION: return "k_promotion";
    case ActionId::PHI_SSYT: return "phi";
    case ActionId::ROWMOTION: return "rowmotion";
    }
    return "?";
}

inline ActionId action_from_name(const std::string& s) {
    static const std::map<std::string, ActionId> table = {
        {"rot", ActionId::ROT}, {"rot_b", ActionId::ROT_B}, {"shift", ActionId::SHIFT},
        {"promotion", ActionId::PROMOTION}, {"promotion_skew", ActionId::PROMOTION_SKEW},
        {"jdt_promotion", ActionId::JDT_PROMOTION}, {"kreweras", ActionId::KREWERAS},
        {"flip", ActionId::FLIP}, {"twist", ActionId::TWIST}, {"twist2", ActionId::TWIST_SQUARED},
        {"k_promotion", ActionId::K_PROMOTION}, {"phi", ActionId::PHI_SSYT},
        {"rowmotion", ActionId::ROWMOTION},
    };
    auto it = table.find(s);
    if (it == table.end()) throw OutOfDomain("unknown action: " + s);
    return it->second;
}

} // namespace cspkit
