#pragma once

/*
  Families of Catalan objects: canonical encodings, exhaustive
  deterministic enumerators, and closed-form cardinalities used as
  enumeration oracles.

  enumerate() materializes a family sorted lexicographically on the
  canonical encoding; for_each_object() streams the same set in a
  deterministic generation order when the order does not matter.

  Size conventions, fixed here once:
    - NCC(n) is the size-n family and lives on n-1 vertices; NCC(n,k)
      has k-1 proper edges plus loops.
    - NCM(n) lives on 2n vertices, NCP(n) on n, NCP^B(n) on 2n,
      NCM^B(n) on 4n.
    - TRI(n) triangulates an n-gon; TRI^B(n) is the half-turn symmetric
      subset of the (2n+2)-gon triangulations, generated by choosing the
      center edge and one half.
*/

#include "cspkit/maps.hpp"
#include "cspkit/qanalogs.hpp"

#include <functional>
#include <string>
#include <variant>

namespace cspkit {

enum class FamilyId {
    BW, BW_CDES, PATHS, PATHS_S, DYCK, SYT2, SYT_CDES, SKEW_SYT, OI,
    NCM, NCM_SH, NCM_EVEN, NCP, NCP_BLOCKS,
    NCC, NCC_EL, NCC_K, NCC_LOOPS, NCCB, NCCB_EL, NCCB_K,
    NCPB, NCPB_BLOCKS, NCPB_BLOCKS_PAIR, NCMB, NCMB_EVEN, NCMB_EVEN_PAIR,
    TRI, TRI_EAR, TRIB, SSYT2COL, NCM_MARKED, NCM_MARKED_EVEN
};

struct FamilyParams {
    long n = 0, s = 0, k = 0, e = 0, l = 0, r = 0;
    auto operator<=>(const FamilyParams&) const = default;
};

struct FamilySpec {
    FamilyId id;
    FamilyParams p;
    auto operator<=>(const FamilySpec&) const = default;
};

using Payload = std::variant<Word, Matching, Partition, Config, Triangulation, Ssyt2Col, MarkedMatching>;

struct CombObject {
    FamilySpec spec;
    Payload payload;
    bool operator==(const CombObject& o) const { return payload == o.payload; }
    bool operator<(const CombObject& o) const { return payload < o.payload; }
};

inline const Word& as_word(const CombObject& x) { return std::get<Word>(x.payload); }
inline const Matching& as_matching(const CombObject& x) { return std::get<Matching>(x.payload); }
inline const Partition& as_partition(const CombObject& x) { return std::get<Partition>(x.payload); }
inline const Config& as_config(const CombObject& x) { return std::get<Config>(x.payload); }
inline const Triangulation& as_triangulation(const CombObject& x) { return std::get<Triangulation>(x.payload); }
inline const Ssyt2Col& as_ssyt(const CombObject& x) { return std::get<Ssyt2Col>(x.payload); }
inline const MarkedMatching& as_marked(const CombObject& x) { return std::get<MarkedMatching>(x.payload); }

using ObjectSink = std::function<void(const CombObject&)>;

namespace detail {

// Lexicographic word generation with prefix-excess bound and a range of
// admissible one-counts.  excessMax < 0 means unbounded.
inline void gen_words(long len, long onesMin, long onesMax, long excessMax,
                      const FamilySpec& spec, const ObjectSink& sink) {
    Bits w(static_cast<std::size_t>(len), 0);
    std::function<void(long, long, long)> rec = [&](long pos, long ones, long excess) {
        if (pos == len) {
            if (ones >= onesMin && ones <= onesMax) sink({spec, Word{w}});
            return;
        }
        long rest = len - pos - 1;
        // try 0
        if (ones + rest >= onesMin) {
            w[static_cast<std::size_t>(pos)] = 0;
            rec(pos + 1, ones, excess - 1);
        }
        // try 1
        if (ones + 1 <= onesMax && (excessMax < 0 || excess + 1 <= excessMax)) {
            w[static_cast<std::size_t>(pos)] = 1;
            rec(pos + 1, ones + 1, excess + 1);
            w[static_cast<std::size_t>(pos)] = 0;
        }
    };
    if (len == 0) {
        if (onesMin <= 0 && 0 <= onesMax) sink({spec, Word{}});
        return;
    }
    rec(0, 0, 0);
}

inline void gen_ncm(std::vector<int>& partner, int lo, int hi,
                    const std::function<void()>& cont) {
    if (lo > hi) {
        cont();
        return;
    }
    for (int u = lo + 1; u <= hi; u += 2) {
        partner[static_cast<std::size_t>(lo) - 1] = u;
        partner[static_cast<std::size_t>(u) - 1] = lo;
        gen_ncm(partner, lo + 1, u - 1, [&, u] { gen_ncm(partner, u + 1, hi, cont); });
    }
}

inline void gen_ncc(std::vector<int>& partner, int lo, int hi,
                    const std::function<void()>& cont) {
    if (lo > hi) {
        cont();
        return;
    }
    partner[static_cast<std::size_t>(lo) - 1] = 0; // isolated
    gen_ncc(partner, lo + 1, hi, cont);
    partner[static_cast<std::size_t>(lo) - 1] = lo; // loop
    gen_ncc(partner, lo + 1, hi, cont);
    for (int u = lo + 1; u <= hi; ++u) {
        partner[static_cast<std::size_t>(lo) - 1] = u;
        partner[static_cast<std::size_t>(u) - 1] = lo;
        gen_ncc(partner, lo + 1, u - 1, [&, u] { gen_ncc(partner, u + 1, hi, cont); });
    }
    partner[static_cast<std::size_t>(lo) - 1] = 0;
}

inline void gen_ncp(std::vector<std::vector<int>>& blocks, int lo, int hi,
                    const std::function<void()>& cont) {
    if (lo > hi) {
        cont();
        return;
    }
    blocks.push_back({lo});
    const std::size_t bi = blocks.size() - 1; // the block containing lo
    std::function<void(int)> grow = [&](int last) {
        // close the block: the tail (last..hi] is independent
        gen_ncp(blocks, last + 1, hi, cont);
        // or extend with some x > last; the gap becomes independent
        for (int x = last + 1; x <= hi; ++x) {
            gen_ncp(blocks, last + 1, x - 1, [&, x] {
                blocks[bi].push_back(x);
                grow(x);
                blocks[bi].pop_back();
            });
        }
    };
    grow(lo);
    blocks.pop_back();
}

inline void gen_tri(std::vector<std::pair<int, int>>& diags, int lo, int hi,
                    const std::function<void()>& cont) {
    // triangulates the polygon path lo, lo+1, ..., hi with base edge {lo, hi}
    if (hi - lo < 2) {
        cont();
        return;
    }
    for (int apex = lo + 1; apex < hi; ++apex) {
        std::size_t pushed = 0;
        if (apex - lo >= 2) {
            diags.push_back({lo, apex});
            ++pushed;
        }
        if (hi - apex >= 2) {
            diags.push_back({apex, hi});
            ++pushed;
        }
        gen_tri(diags, lo, apex, [&, apex] { gen_tri(diags, apex, hi, cont); });
        for (std::size_t i = 0; i < pushed; ++i) diags.pop_back();
    }
}

inline void gen_ssyt2col(std::vector<std::array<int, 2>>& rows, long k, long maxEntry,
                         const std::function<void()>& cont) {
    if (static_cast<long>(rows.size()) == k) {
        cont();
        return;
    }
    int minA = rows.empty() ? 1 : rows.back()[0] + 1;
    int minBBase = rows.empty() ? 1 : rows.back()[1] + 1;
    for (int a = minA; a <= maxEntry; ++a)
        for (int b = std::max(a, minBBase); b <= maxEntry; ++b) {
            rows.push_back({a, b});
            gen_ssyt2col(rows, k, maxEntry, cont);
            rows.pop_back();
        }
}

inline void gen_subsets(const std::vector<std::vector<int>>& pool, long r,
                        std::vector<std::vector<int>>& chosen, std::size_t from,
                        const std::function<void()>& cont) {
    if (static_cast<long>(chosen.size()) == r) {
        cont();
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        chosen.push_back(pool[i]);
        gen_subsets(pool, r, chosen, i + 1, cont);
        chosen.pop_back();
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Streaming enumeration.

inline void for_each_object(const FamilySpec& spec, const ObjectSink& sink);

inline void for_each_ncm(const FamilySpec& spec, long n, const ObjectSink& sink,
                         const std::function<bool(const Matching&)>& keep) {
    if (n < 0) throw OutOfDomain("NCM: n < 0");
    std::vector<int> partner(static_cast<std::size_t>(2 * n), 0);
    detail::gen_ncm(partner, 1, static_cast<int>(2 * n), [&] {
        Matching m{partner};
        if (keep(m)) sink({spec, m});
    });
}

inline void for_each_ncc(const FamilySpec& spec, long sizeParam, const ObjectSink& sink,
                         const std::function<bool(const Config&)>& keep) {
    if (sizeParam < 1) throw OutOfDomain("NCC: size < 1");
    long v = sizeParam - 1;
    std::vector<int> partner(static_cast<std::size_t>(v), 0);
    detail::gen_ncc(partner, 1, static_cast<int>(v), [&] {
        Config c{partner};
        if (keep(c)) sink({spec, c});
    });
}

inline void for_each_object(const FamilySpec& spec, const ObjectSink& sink) {
    const auto& p = spec.p;
    switch (spec.id) {
    case FamilyId::BW:
        if (p.n < 0) throw OutOfDomain("BW: n < 0");
        detail::gen_words(p.n, p.k, p.k, -1, spec, sink);
        return;
    case FamilyId::BW_CDES:
        // words of length 2n with n ones and k cyclic descents
        if (p.n < 0) throw OutOfDomain("BW_CDES: n < 0");
        detail::gen_words(2 * p.n, p.n, p.n, -1, spec, [&](const CombObject& x) {
            if (word_cdes(as_word(x).bits) == p.k) sink({spec, x.payload});
        });
        return;
    case FamilyId::PATHS:
        if (p.n < 0) throw OutOfDomain("PATHS: n < 0");
        detail::gen_words(2 * p.n, p.n, p.n, -1, spec, sink);
        return;
    case FamilyId::PATHS_S:
    case FamilyId::SKEW_SYT:
        if (p.n < 0 || p.s < 0 || p.s > p.n) throw OutOfDomain("PATHS_S: need 0 <= s <= n");
        detail::gen_words(2 * p.n, p.n, p.n, p.s, spec, sink);
        return;
    case FamilyId::DYCK:
    case FamilyId::SYT2:
        if (p.n < 0) throw OutOfDomain("DYCK: n < 0");
        detail::gen_words(2 * p.n, p.n, p.n, 0, spec, sink);
        return;
    case FamilyId::SYT_CDES:
        if (p.n < 0) throw OutOfDomain("SYT_CDES: n < 0");
        detail::gen_words(2 * p.n, p.n, p.n, 0, {FamilyId::SYT2, p}, [&](const CombObject& x) {
            if (syt_cdes(as_word(x).bits) == p.k) sink({spec, x.payload});
        });
        return;
    case FamilyId::OI:
        if (p.n < 0 || p.s < 0 || p.s > p.n) throw OutOfDomain("OI: need 0 <= s <= n");
        detail::gen_words(2 * p.n, p.n - p.s, p.n, 0, spec, sink);
        return;
    case FamilyId::NCM:
        for_each_ncm(spec, p.n, sink, [](const Matching&) { return true; });
        return;
    case FamilyId::NCM_SH:
        for_each_ncm(spec, p.n, sink,
                     [&](const Matching& m) { return matching_short_edges(m) == p.k; });
        return;
    case FamilyId::NCM_EVEN:
        for_each_ncm(spec, p.n, sink,
                     [&](const Matching& m) { return matching_even_edges(m) == p.k; });
        return;
    case FamilyId::NCP:
    case FamilyId::NCP_BLOCKS: {
        if (p.n < 0) throw OutOfDomain("NCP: n < 0");
        std::vector<std::vector<int>> blocks;
        detail::gen_ncp(blocks, 1, static_cast<int>(p.n), [&] {
            if (spec.id == FamilyId::NCP_BLOCKS && static_cast<long>(blocks.size()) != p.k) return;
            Partition pi{blocks};
            std::sort(pi.blocks.begin(), pi.blocks.end(),
                      [](const auto& a, const auto& b) { return a.front() < b.front(); });
            sink({spec, pi});
        });
        return;
    }
    case FamilyId::NCC:
        for_each_ncc(spec, p.n, sink, [](const Config&) { return true; });
        return;
    case FamilyId::NCC_EL:
        for_each_ncc(spec, p.n, sink, [&](const Config& c) {
            return config_proper_edges(c) == p.e && config_loops(c) == p.l;
        });
        return;
    case FamilyId::NCC_K:
        for_each_ncc(spec, p.n, sink, [&](const Config& c) {
            return config_proper_edges(c) + config_loops(c) == p.k - 1;
        });
        return;
    case FamilyId::NCC_LOOPS:
        for_each_ncc(spec, p.n, sink,
                     [&](const Config& c) { return config_loops(c) == p.l; });
        return;
    case FamilyId::NCCB:
    case FamilyId::NCCB_EL:
    case FamilyId::NCCB_K: {
        auto keep = [&](const Config& c) {
            long e = config_proper_edges(c), l = config_loops(c);
            if (spec.id == FamilyId::NCCB_EL) return e == p.e && l == p.l;
            if (spec.id == FamilyId::NCCB_K) return e + l == p.k;
            return true;
        };
        for_each_ncc({FamilyId::NCC, p}, p.n, [&](const CombObject& x) {
            const Config& c = as_config(x);
            if (!keep(c)) return;
            sink({spec, c});
            for (int i = 1; i <= c.size(); ++i)
                if (c.of(i) > i) {
                    Config mc = c;
                    mc.mark = {i, c.of(i)};
                    sink({spec, mc});
                }
        }, [](const Config&) { return true; });
        return;
    }
    case FamilyId::NCMB:
    case FamilyId::NCMB_EVEN:
    case FamilyId::NCMB_EVEN_PAIR: {
        if (p.n < 1) throw OutOfDomain("NCMB: n < 1");
        detail::gen_words(2 * p.n, p.n, p.n, -1, spec, [&](const CombObject& x) {
            Matching m = word_to_sym_ncm(as_word(x).bits, static_cast<int>(4 * p.n));
            long ev = matching_even_edges(m);
            if (spec.id == FamilyId::NCMB_EVEN && ev != p.k) return;
            if (spec.id == FamilyId::NCMB_EVEN_PAIR && ev != 2 * p.k - 1 && ev != 2 * p.k) return;
            sink({spec, m});
        });
        return;
    }
    case FamilyId::NCPB:
    case FamilyId::NCPB_BLOCKS:
    case FamilyId::NCPB_BLOCKS_PAIR: {
        if (p.n < 1) throw OutOfDomain("NCPB: n < 1");
        detail::gen_words(2 * p.n, p.n, p.n, -1, spec, [&](const CombObject& x) {
            Matching m = word_to_sym_ncm(as_word(x).bits, static_cast<int>(4 * p.n));
            Partition pi = ncm_to_ncp(m);
            long blk = static_cast<long>(pi.blocks.size());
            if (spec.id == FamilyId::NCPB_BLOCKS && blk != p.k) return;
            if (spec.id == FamilyId::NCPB_BLOCKS_PAIR && blk != 2 * p.k && blk != 2 * p.k + 1) return;
            sink({spec, pi});
        });
        return;
    }
    case FamilyId::TRI:
    case FamilyId::TRI_EAR: {
        if (p.n < 3) throw OutOfDomain("TRI: n < 3");
        std::vector<std::pair<int, int>> diags;
        detail::gen_tri(diags, 1, static_cast<int>(p.n), [&] {
            Triangulation t{diags};
            std::sort(t.diagonals.begin(), t.diagonals.end());
            if (spec.id == FamilyId::TRI_EAR &&
                triangulation_ears(t, static_cast<int>(p.n)) != p.k) return;
            sink({spec, t});
        });
        return;
    }
    case FamilyId::TRIB: {
        if (p.n < 1) throw OutOfDomain("TRIB: n < 1");
        int big = static_cast<int>(2 * p.n + 2);
        int half = static_cast<int>(p.n + 2);
        for (int i = 1; i <= static_cast<int>(p.n) + 1; ++i) {
            std::vector<std::pair<int, int>> diags;
            detail::gen_tri(diags, 1, half, [&] {
                Triangulation t;
                t.diagonals.push_back({i, i + static_cast<int>(p.n) + 1});
                for (auto [a, b] : diags) {
                    int ra = mod1(i + a - 1, big), rb = mod1(i + b - 1, big);
                    t.diagonals.push_back({std::min(ra, rb), std::max(ra, rb)});
                    int ma = mod1(ra + static_cast<int>(p.n) + 1, big);
                    int mb = mod1(rb + static_cast<int>(p.n) + 1, big);
                    t.diagonals.push_back({std::min(ma, mb), std::max(ma, mb)});
                }
                std::sort(t.diagonals.begin(), t.diagonals.end());
                sink({spec, t});
            });
        }
        return;
    }
    case FamilyId::SSYT2COL: {
        if (p.k < 0 || p.n < 0) throw OutOfDomain("SSYT2COL: negative parameter");
        std::vector<std::array<int, 2>> rows;
        detail::gen_ssyt2col(rows, p.k, p.n, [&] { sink({spec, Ssyt2Col{rows}}); });
        return;
    }
    case FamilyId::NCM_MARKED:
    case FamilyId::NCM_MARKED_EVEN: {
        if (p.r < 0 || p.r > p.n + 1) throw OutOfDomain("NCM_MARKED: need 0 <= r <= n+1");
        for_each_ncm({FamilyId::NCM, p}, p.n, [&](const CombObject& x) {
            const Matching& m = as_matching(x);
            if (spec.id == FamilyId::NCM_MARKED_EVEN && matching_even_edges(m) != p.k) return;
            auto regions = matching_regions(m);
            std::vector<std::vector<int>> chosen;
            detail::gen_subsets(regions, p.r, chosen, 0, [&] {
                MarkedMatching mm{m.partner, chosen};
                std::sort(mm.marks.begin(), mm.marks.end());
                sink({spec, mm});
            });
        }, [](const Matching&) { return true; });
        return;
    }
    }
    throw OutOfDomain("for_each_object: unhandled family");
}

/// Every object exactly once, sorted lexicographically on the canonical
/// encoding.
inline std::vector<CombObject> enumerate(const FamilySpec& spec) {
    std::vector<CombObject> out;
    for_each_object(spec, [&](const CombObject& x) { out.push_back(x); });
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form cardinalities.

inline Int cardinality(const FamilySpec& spec) {
    const auto& p = spec.p;
    switch (spec.id) {
    case FamilyId::BW: return binomial(p.n, p.k);
    case FamilyId::BW_CDES:
        if (p.k == 0) return p.n == 0 ? 1 : 0;
        return 2 * binomial(p.n, p.k) * binomial(p.n - 1, p.k - 1);
    case FamilyId::PATHS: return binomial(2 * p.n, p.n);
    case FamilyId::PATHS_S:
    case FamilyId::SKEW_SYT:
        if (p.s < 0 || p.s > p.n) throw OutOfDomain("PATHS_S: need 0 <= s <= n");
        return binomial(2 * p.n, p.n) - binomial(2 * p.n, p.n - p.s - 1);
    case FamilyId::DYCK:
    case FamilyId::SYT2:
    case FamilyId::NCM:
    case FamilyId::NCP:
    case FamilyId::NCC: return catalan(p.n);
    case FamilyId::SYT_CDES:
    case FamilyId::NCM_SH:
        if (p.n <= 1 || p.k <= 1) return (p.n == p.k) ? 1 : 0;
        return 2 * binomial(p.n + 1, p.k) * binomial(p.n - 2, p.k - 2) / (p.n + 1);
    case FamilyId::OI:
        if (p.s < 0 || p.s > p.n) throw OutOfDomain("OI: need 0 <= s <= n");
        return binomial(2 * p.n, p.n) - binomial(2 * p.n, p.n - 1 - p.s);
    case FamilyId::NCM_EVEN: return narayana(p.n, p.k + 1);
    case FamilyId::NCP_BLOCKS:
    case FamilyId::NCC_K: return narayana(p.n, p.k);
    case FamilyId::NCC_EL:
        return binomial(p.n - 1, 2 * p.e) * catalan(p.e) * binomial(p.n - 1 - 2 * p.e, p.l);
    case FamilyId::NCC_LOOPS:
        return binomial(p.n - 1, p.l) * motzkin(p.n - 1 - p.l);
    case FamilyId::NCCB: return binomial(2 * (p.n - 1), p.n - 1);
    case FamilyId::NCCB_EL:
        return (p.e + 1) * binomial(p.n - 1, 2 * p.e) * catalan(p.e) *
               binomial(p.n - 1 - 2 * p.e, p.l);
    case FamilyId::NCCB_K: {
        Int b = binomial(p.n - 1, p.k);
        return b * b;
    }
    case FamilyId::NCPB:
    case FamilyId::NCMB:
    case FamilyId::TRIB: return binomial(2 * p.n, p.n);
    case FamilyId::NCPB_BLOCKS: {
        if (p.k < 0) return 0;
        long j = p.k / 2;
        if (p.k % 2 == 0) return binomial(p.n, j) * binomial(p.n - 1, j - 1);
        return binomial(p.n, j) * binomial(p.n - 1, j);
    }
    case FamilyId::NCPB_BLOCKS_PAIR:
    case FamilyId::NCMB_EVEN_PAIR: {
        Int b = binomial(p.n, p.k);
        return b * b;
    }
    case FamilyId::NCMB_EVEN: {
        FamilySpec s2{FamilyId::NCPB_BLOCKS, p};
        s2.p.k = p.k + 1;
        return cardinality(s2);
    }
    case FamilyId::TRI:
        if (p.n < 3) throw OutOfDomain("TRI: n < 3");
        return catalan(p.n - 2);
    case FamilyId::TRI_EAR: {
        if (p.n < 4 || p.k < 2 || 2 * p.k > p.n) throw OutOfDomain("TRI_EAR: bad (n,k)");
        Int a = Int(p.n) * binomial(p.n - 4, 2 * p.k - 4) * catalan(p.k - 2);
        for (long i = 0; i < p.n - 2 * p.k; ++i) a *= 2;
        if (a % p.k != 0) throw std::logic_error("TRI_EAR cardinality: non-integral");
        return a / p.k;
    }
    case FamilyId::SSYT2COL: return narayana(p.n + 1, p.k + 1);
    case FamilyId::NCM_MARKED: return binomial(p.n + 1, p.r) * catalan(p.n);
    case FamilyId::NCM_MARKED_EVEN: return binomial(p.n + 1, p.r) * narayana(p.n, p.k + 1);
    }
    throw OutOfDomain("cardinality: unhandled family");
}

// ---------------------------------------------------------------------------
// Validation: the TYPE invariants of each encoding.

inline bool validate(const CombObject& x) {
    const auto& p = x.spec.p;
    try {
        switch (x.spec.id) {
        case FamilyId::BW: {
            const Bits& w = as_word(x).bits;
            long ones = std::count(w.begin(), w.end(), 1);
            return static_cast<long>(w.size()) == p.n && ones == p.k;
        }
        case FamilyId::BW_CDES: {
            const Bits& w = as_word(x).bits;
            return static_cast<long>(w.size()) == 2 * p.n &&
                   std::count(w.begin(), w.end(), 1) == p.n && word_cdes(w) == p.k;
        }
        case FamilyId::PATHS: {
            const Bits& w = as_word(x).bits;
            return static_cast<long>(w.size()) == 2 * p.n &&
                   std::count(w.begin(), w.end(), 1) == p.n;
        }
        case FamilyId::PATHS_S:
        case FamilyId::SKEW_SYT: {
            const Bits& w = as_word(x).bits;
            return static_cast<long>(w.size()) == 2 * p.n &&
                   std::count(w.begin(), w.end(), 1) == p.n && word_depth(w) <= p.s;
        }
        case FamilyId::DYCK:
        case FamilyId::SYT2: {
            const Bits& w = as_word(x).bits;
            return static_cast<long>(w.size()) == 2 * p.n && is_lattice_word(w);
        }
        case FamilyId::SYT_CDES: {
            const Bits& w = as_word(x).bits;
            return static_cast<long>(w.size()) == 2 * p.n && is_lattice_word(w) &&
                   syt_cdes(w) == p.k;
        }
        case FamilyId::OI: {
            const Bits& w = as_word(x).bits;
            if (static_cast<long>(w.size()) != 2 * p.n || word_depth(w) != 0) return false;
            long ones = std::count(w.begin(), w.end(), 1);
            return ones >= p.n - p.s && ones <= p.n;
        }
        case FamilyId::NCM:
        case FamilyId::NCM_SH:
        case FamilyId::NCM_EVEN: {
            const Matching& m = as_matching(x);
            if (m.size() != 2 * p.n) return false;
            if (!is_involution_matching(m.partner) || !is_noncrossing_partner(m.partner)) return false;
            if (x.spec.id == FamilyId::NCM_SH) return matching_short_edges(m) == p.k;
            if (x.spec.id == FamilyId::NCM_EVEN) return matching_even_edges(m) == p.k;
            return true;
        }
        case FamilyId::NCP:
        case FamilyId::NCP_BLOCKS: {
            const Partition& pi = as_partition(x);
            if (!partition_valid(pi, static_cast<int>(p.n))) return false;
            if (x.spec.id == FamilyId::NCP_BLOCKS)
                return static_cast<long>(pi.blocks.size()) == p.k;
            return true;
        }
        case FamilyId::NCC:
        case FamilyId::NCC_EL:
        case FamilyId::NCC_K:
        case FamilyId::NCC_LOOPS: {
            const Config& c = as_config(x);
            if (c.size() != p.n - 1 || c.marked() || !config_valid(c)) return false;
            if (x.spec.id == FamilyId::NCC_EL)
                return config_proper_edges(c) == p.e && config_loops(c) == p.l;
            if (x.spec.id == FamilyId::NCC_K)
                return config_proper_edges(c) + config_loops(c) == p.k - 1;
            if (x.spec.id == FamilyId::NCC_LOOPS) return config_loops(c) == p.l;
            return true;
        }
        case FamilyId::NCCB:
        case FamilyId::NCCB_EL:
        case FamilyId::NCCB_K: {
            const Config& c = as_config(x);
            if (c.size() != p.n - 1 || !config_valid(c)) return false;
            long e = config_proper_edges(c), l = config_loops(c);
            if (x.spec.id == FamilyId::NCCB_EL && (e != p.e || l != p.l)) return false;
            if (x.spec.id == FamilyId::NCCB_K && e + l != p.k) return false;
            return true;
        }
        case FamilyId::NCMB:
        case FamilyId::NCMB_EVEN:
        case FamilyId::NCMB_EVEN_PAIR: {
            const Matching& m = as_matching(x);
            if (m.size() != 4 * p.n) return false;
            if (!is_involution_matching(m.partner) || !is_noncrossing_partner(m.partner)) return false;
            Matching rot = rotate_matching(m, static_cast<int>(2 * p.n));
            if (!(rot.partner == m.partner)) return false;
            long ev = matching_even_edges(m);
            if (x.spec.id == FamilyId::NCMB_EVEN) return ev == p.k;
            if (x.spec.id == FamilyId::NCMB_EVEN_PAIR) return ev == 2 * p.k - 1 || ev == 2 * p.k;
            return true;
        }
        case FamilyId::NCPB:
        case FamilyId::NCPB_BLOCKS:
        case FamilyId::NCPB_BLOCKS_PAIR: {
            const Partition& pi = as_partition(x);
            if (!partition_valid(pi, static_cast<int>(2 * p.n))) return false;
            Partition rot = rotate_partition(pi, static_cast<int>(2 * p.n), static_cast<int>(p.n));
            if (!(rot == pi)) return false;
            long blk = static_cast<long>(pi.blocks.size());
            if (x.spec.id == FamilyId::NCPB_BLOCKS) return blk == p.k;
            if (x.spec.id == FamilyId::NCPB_BLOCKS_PAIR) return blk == 2 * p.k || blk == 2 * p.k + 1;
            return true;
        }
        case FamilyId::TRI:
        case FamilyId::TRI_EAR: {
            const Triangulation& t = as_triangulation(x);
            if (!triangulation_valid(t, static_cast<int>(p.n))) return false;
            if (x.spec.id == FamilyId::TRI_EAR)
                return triangulation_ears(t, static_cast<int>(p.n)) == p.k;
            return true;
        }
        case FamilyId::TRIB: {
            const Triangulation& t = as_triangulation(x);
            int big = static_cast<int>(2 * p.n + 2);
            if (!triangulation_valid(t, big)) return false;
            return rotate_triangulation(t, big, static_cast<int>(p.n + 1)) == t;
        }
        case FamilyId::SSYT2COL: {
            const Ssyt2Col& t = as_ssyt(x);
            return static_cast<long>(t.rows.size()) == p.k &&
                   ssyt2col_valid(t, static_cast<int>(p.n));
        }
        case FamilyId::NCM_MARKED:
        case FamilyId::NCM_MARKED_EVEN: {
            const MarkedMatching& mm = as_marked(x);
            Matching m{mm.partner};
            if (m.size() != 2 * p.n) return false;
            if (!is_involution_matching(m.partner) || !is_noncrossing_partner(m.partner)) return false;
            if (static_cast<long>(mm.marks.size()) != p.r) return false;
            auto regions = matching_regions(m);
            for (const auto& key : mm.marks)
                if (!std::binary_search(regions.begin(), regions.end(), key)) return false;
            if (x.spec.id == FamilyId::NCM_MARKED_EVEN)
                return matching_even_edges(m) == p.k;
            return true;
        }
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Family id strings for the CLI and reports.

inline std::string family_name(FamilyId id) {
    switch (id) {
    case FamilyId::BW: return "BW";
    case FamilyId::BW_CDES: return "BW_CDES";
    case FamilyId::PATHS: return "PATHS";
    case FamilyId::PATHS_S: return "PATHS_S";
    case FamilyId::DYCK: return "DYCK";
    case FamilyId::SYT2: return "SYT2";
    case FamilyId::SYT_CDES: return "SYT_CDES";
    case FamilyId::SKEW_SYT: return "SKEW_SYT";
    case FamilyId::OI: return "OI";
    case FamilyId::NCM: return "NCM";
    case FamilyId::NCM_SH: return "NCM_SH";
    case FamilyId::NCM_EVEN: return "NCM_EVEN";
    case FamilyId::NCP: return "NCP";
    case FamilyId::NCP_BLOCKS: return "NCP_BLOCKS";
    case FamilyId::NCC: return "NCC";
    case FamilyId::NCC_EL: return "NCC_EL";
    case FamilyId::NCC_K: return "NCC_K";
    case FamilyId::NCC_LOOPS: return "NCC_LOOPS";
    case FamilyId::NCCB: return "NCCB";
    case FamilyId::NCCB_EL: return "NCCB_EL";
    case FamilyId::NCCB_K: return "NCCB_K";
    case FamilyId::NCPB: return "NCPB";
    case FamilyId::NCPB_BLOCKS: return "NCPB_BLOCKS";
    case FamilyId::NCPB_BLOCKS_PAIR: return "NCPB_BLOCKS_PAIR";
    case FamilyId::NCMB: return "NCMB";
    case FamilyId::NCMB_EVEN: return "NCMB_EVEN";
    case FamilyId::NCMB_EVEN_PAIR: return "NCMB_EVEN_PAIR";
    case FamilyId::TRI: return "TRI";
    case FamilyId::TRI_EAR: return "TRI_EAR";
    case FamilyId::TRIB: return "TRIB";
    case FamilyId::SSYT2COL: return "SSYT2COL";
    case FamilyId::NCM_MARKED: return "NCM_MARKED";
    case FamilyId::NCM_MARKED_EVEN: return "NCM_MARKED_EVEN";
    }
    return "?";
}

inline FamilyId family_from_name(const std::string& s) {
    static const std::map<std::string, FamilyId> table = {
        {"BW", FamilyId::BW}, {"BW_CDES", FamilyId::BW_CDES},
        {"NCPB_BLOCKS_PAIR", FamilyId::NCPB_BLOCKS_PAIR},
        {"NCMB_EVEN_PAIR", FamilyId::NCMB_EVEN_PAIR},
        {"PATHS", FamilyId::PATHS}, {"PATHS_S", FamilyId::PATHS_S},
        {"DYCK", FamilyId::DYCK}, {"SYT2", FamilyId::SYT2}, {"SYT_CDES", FamilyId::SYT_CDES},
        {"SKEW_SYT", FamilyId::SKEW_SYT}, {"OI", FamilyId::OI}, {"NCM", FamilyId::NCM},
        {"NCM_SH", FamilyId::NCM_SH}, {"NCM_EVEN", FamilyId::NCM_EVEN}, {"NCP", FamilyId::NCP},
        {"NCP_BLOCKS", FamilyId::NCP_BLOCKS}, {"NCC", FamilyId::NCC}, {"NCC_EL", FamilyId::NCC_EL},
        {"NCC_K", FamilyId::NCC_K}, {"NCC_LOOPS", FamilyId::NCC_LOOPS}, {"NCCB", FamilyId::NCCB},
        {"NCCB_EL", FamilyId::NCCB_EL}, {"NCCB_K", FamilyId::NCCB_K}, {"NCPB", FamilyId::NCPB},
        {"NCPB_BLOCKS", FamilyId::NCPB_BLOCKS}, {"NCMB", FamilyId::NCMB},
        {"NCMB_EVEN", FamilyId::NCMB_EVEN}, {"TRI", FamilyId::TRI}, {"TRI_EAR", FamilyId::TRI_EAR},
        {"TRIB", FamilyId::TRIB}, {"SSYT2COL", FamilyId::SSYT2COL},
        {"NCM_MARKED", FamilyId::NCM_MARKED}, {"NCM_MARKED_EVEN", FamilyId::NCM_MARKED_EVEN},
    };
    auto it = table.find(s);
    if (it == table.end()) throw OutOfDomain("unknown family: " + s);
    return it->second;
}

} // namespace cspkit
