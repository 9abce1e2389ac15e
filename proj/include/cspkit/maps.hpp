#pragma once

/*
  Raw constructions between object encodings.  These work on payloads and
  are wrapped by the bijection registry; the family enumerators reuse the
  type B symmetric completions directly.
*/

#include "cspkit/objects.hpp"

#include <deque>
#include <stdexcept>

namespace cspkit {

// ---------------------------------------------------------------------------
// Starter words and matchings.

/// The unique non-crossing matching whose starting vertices (smaller
/// endpoints) are the zeros of a lattice word: scan left to right, each
/// end vertex closes the most recent open starter.
inline Matching matching_from_starters(const Bits& w) {
    if (!is_lattice_word(w)) throw PreconditionViolated("matching_from_starters: not a lattice word");
    Matching m;
    m.partner.assign(w.size(), 0);
    std::vector<int> open;
    for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
        if (w[static_cast<std::size_t>(i) - 1] == 0) {
            open.push_back(i);
        } else {
            int j = open.back();
            open.pop_back();
            m.partner[static_cast<std::size_t>(i) - 1] = j;
            m.partner[static_cast<std::size_t>(j) - 1] = i;
        }
    }
    return m;
}

/// Inverse: 0 on the smaller endpoint of every edge.
inline Bits starters_of_matching(const Matching& m) {
    Bits w(static_cast<std::size_t>(m.size()), 0);
    for (int i = 1; i <= m.size(); ++i)
        if (m.of(i) < i) w[static_cast<std::size_t>(i) - 1] = 1;
    return w;
}

// ---------------------------------------------------------------------------
// B.4: non-crossing partitions <-> non-crossing matchings.
//
// Insert primed vertices (2j-1)' after j and (2j-2)' before j, with (2n)'
// before 1.  Evaluated in closed form, each block {b_1 < ... < b_m}
// contributes the chords {2b_i - 1, 2b_{i+1} - 2} plus the wrap chord
// {2b_m - 1, 2b_1 - 2}, indices taken in 1..2n.

inline Matching ncp_to_ncm(const Partition& pi, int n) {
    Matching m;
    m.partner.assign(static_cast<std::size_t>(2 * n), 0);
    auto link = [&](int a, int b) {
        m.partner[static_cast<std::size_t>(a) - 1] = b;
        m.partner[static_cast<std::size_t>(b) - 1] = a;
    };
    for (const auto& blk : pi.blocks) {
        int sz = static_cast<int>(blk.size());
        for (int i = 0; i < sz; ++i) {
            int b = blk[static_cast<std::size_t>(i)];
            int next = blk[static_cast<std::size_t>((i + 1) % sz)];
            link(2 * b - 1, mod1(2 * next - 2, 2 * n));
        }
    }
    return m;
}

/// Circular position of each point on the 3n-point circle obtained by
/// inserting the primed vertices around 1..n.
inline void ncp_circle_positions(int n, std::vector<int>& origPos, std::vector<int>& primePos) {
    origPos.assign(static_cast<std::size_t>(n) + 1, 0);
    primePos.assign(static_cast<std::size_t>(2 * n) + 1, 0);
    int pos = 0;
    for (int j = 1; j <= n; ++j) {
        primePos[static_cast<std::size_t>(mod1(2 * j - 2, 2 * n))] = pos++;
        origPos[static_cast<std::size_t>(j)] = pos++;
        primePos[static_cast<std::size_t>(2 * j - 1)] = pos++;
    }
}

inline bool chords_cross_circular(int a1, int b1, int a2, int b2, int modulus) {
    auto between = [&](int lo, int hi, int x) {
        // strictly between lo and hi going counterclockwise
        int span = (hi - lo + modulus) % modulus;
        int off = (x - lo + modulus) % modulus;
        return off > 0 && off < span;
    };
    if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;
    return between(a1, b1, a2) != between(a1, b1, b2);
}

/// Inverse of B.4: i and j belong to one block iff the chord between
/// them crosses no matching chord on the enriched circle.
inline Partition ncm_to_ncp(const Matching& m) {
    int twoN = m.size();
    if (twoN % 2 != 0) throw PreconditionViolated("ncm_to_ncp: odd vertex count");
    int n = twoN / 2;
    std::vector<int> origPos, primePos;
    ncp_circle_positions(n, origPos, primePos);
    int mod = 3 * n;

    std::vector<std::pair<int, int>> chords;
    for (int i = 1; i <= twoN; ++i)
        if (m.of(i) > i) chords.push_back({primePos[static_cast<std::size_t>(i)],
                                           primePos[static_cast<std::size_t>(m.of(i))]});
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool ok = true;
            for (auto [a, b] : chords)
                if (chords_cross_circular(origPos[static_cast<std::size_t>(i)],
                                          origPos[static_cast<std::size_t>(j)], a, b, mod)) {
                    ok = false;
                    break;
                }
            if (ok) parent[static_cast<std::size_t>(find(i))] = find(j);
        }
    std::map<int, std::vector<int>> groups;
    for (int i = 1; i <= n; ++i) groups[find(i)].push_back(i);
    Partition pi;
    for (auto& [root, blk] : groups) pi.blocks.push_back(blk);
    std::sort(pi.blocks.begin(), pi.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return pi;
}

// ---------------------------------------------------------------------------
// B.2: binary words <-> rotationally symmetric matchings.
//
// A matching on V vertices invariant under rotation by 2d steps (2d < V)
// and with no diagonal is determined by one period: zeros are left
// vertices, ones right; within a period left pairs to the nearest free
// right after it, and leftovers pair into the next period outside-in.

inline Matching word_to_sym_ncm(const Bits& c, int vertices) {
    int twoD = static_cast<int>(c.size());
    if (twoD % 2 != 0) throw PreconditionViolated("word_to_sym_ncm: odd word length");
    int d = twoD / 2;
    int ones = 0;
    for (auto b : c) ones += b;
    if (ones != d) throw PreconditionViolated("word_to_sym_ncm: word not balanced");
    if (vertices % twoD != 0 || vertices == twoD)
        throw PreconditionViolated("word_to_sym_ncm: period must properly divide vertex count");

    std::vector<std::pair<int, int>> periodChords; // (left, right) offsets in 1..(<=4d)
    std::vector<int> openLeft, freeRight;
    for (int i = 1; i <= twoD; ++i) {
        if (c[static_cast<std::size_t>(i) - 1] == 0) {
            openLeft.push_back(i);
        } else if (!openLeft.empty()) {
            periodChords.push_back({openLeft.back(), i});
            openLeft.pop_back();
        } else {
            freeRight.push_back(i);
        }
    }
    // leftover lefts pair outside-in with the next period's leftover rights
    int r = static_cast<int>(openLeft.size());
    for (int i = 0; i < r; ++i)
        periodChords.push_back({openLeft[static_cast<std::size_t>(r - 1 - i)],
                                freeRight[static_cast<std::size_t>(i)] + twoD});

    Matching m;
    m.partner.assign(static_cast<std::size_t>(vertices), 0);
    for (int t = 0; t < vertices / twoD; ++t)
        for (auto [a, b] : periodChords) {
            int va = mod1(a + t * twoD, vertices), vb = mod1(b + t * twoD, vertices);
            m.partner[static_cast<std::size_t>(va) - 1] = vb;
            m.partner[static_cast<std::size_t>(vb) - 1] = va;
        }
    if (!is_involution_matching(m.partner) || !is_noncrossing_partner(m.partner))
        throw std::logic_error("word_to_sym_ncm: completion failed");
    return m;
}

/// Inverse of B.2: repeatedly contract a short chord together with its
/// whole rotation orbit; the predecessor endpoint reads 0, the successor 1.
inline Bits sym_ncm_to_word(const Matching& m, int d) {
    int vertices = m.size();
    int twoD = 2 * d;
    if (vertices % twoD != 0 || vertices == twoD)
        throw PreconditionViolated("sym_ncm_to_word: bad period");
    Bits c(static_cast<std::size_t>(twoD), 2); // 2 = unset
    std::vector<int> alive;
    for (int i = 1; i <= vertices; ++i) alive.push_back(i);
    std::vector<char> dead(static_cast<std::size_t>(vertices) + 1, 0);
    while (!alive.empty()) {
        int sz = static_cast<int>(alive.size());
        int foundA = -1, foundB = -1;
        for (int idx = 0; idx < sz; ++idx) {
            int a = alive[static_cast<std::size_t>(idx)];
            int b = alive[static_cast<std::size_t>((idx + 1) % sz)];
            if (m.of(a) == b) {
                foundA = a;
                foundB = b;
                break;
            }
        }
        if (foundA < 0) throw std::logic_error("sym_ncm_to_word: no contractible chord");
        int wa = (foundA - 1) % twoD, wb = (foundB - 1) % twoD;
        if (c[static_cast<std::size_t>(wa)] == 1 || c[static_cast<std::size_t>(wb)] == 0)
            throw std::logic_error("sym_ncm_to_word: inconsistent orientation");
        c[static_cast<std::size_t>(wa)] = 0;
        c[static_cast<std::size_t>(wb)] = 1;
        for (int t = 0; t < vertices / twoD; ++t) {
            dead[static_cast<std::size_t>(mod1(foundA + t * twoD, vertices))] = 1;
            dead[static_cast<std::size_t>(mod1(foundB + t * twoD, vertices))] = 1;
        }
        std::vector<int> next;
        for (int v : alive)
            if (!dead[static_cast<std::size_t>(v)]) next.push_back(v);
        alive.swap(next);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Laser bijection: Dyck paths <-> (1,2)-configurations.
//
// With H(t) = (#norths before the t-th east) - t and H(n+1) = -1, east
// step t < n starts an edge iff it is followed by a north step; it is a
// loop when H(t+1) = H(t), and otherwise pairs with the first u > t such
// that H(u+1) = H(t).

inline std::vector<int> dyck_height_profile(const Bits& w) {
    int n = static_cast<int>(w.size()) / 2;
    std::vector<int> H(static_cast<std::size_t>(n) + 2, 0);
    int norths = 0, easts = 0;
    for (std::uint8_t b : w) {
        if (b == 0) ++norths;
        else {
            ++easts;
            H[static_cast<std::size_t>(easts)] = norths - easts;
        }
    }
    H[static_cast<std::size_t>(n) + 1] = -1;
    return H;
}

inline Config dyck_to_ncc(const Bits& w) {
    if (!is_lattice_word(w)) throw PreconditionViolated("dyck_to_ncc: not a Dyck word");
    int n = static_cast<int>(w.size()) / 2;
    auto H = dyck_height_profile(w);
    // valley flags: east #t immediately followed by a north step
    std::vector<char> valley(static_cast<std::size_t>(n) + 1, 0);
    int easts = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 1) {
            ++easts;
            if (i + 1 < w.size() && w[i + 1] == 0) valley[static_cast<std::size_t>(easts)] = 1;
        }
    }
    Config cfg;
    cfg.partner.assign(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
    for (int t = 1; t <= n - 1; ++t) {
        if (!valley[static_cast<std::size_t>(t)]) continue;
        if (H[static_cast<std::size_t>(t) + 1] == H[static_cast<std::size_t>(t)]) {
            cfg.partner[static_cast<std::size_t>(t) - 1] = t; // loop
        } else {
            int u = t + 1;
            while (H[static_cast<std::size_t>(u) + 1] != H[static_cast<std::size_t>(t)]) ++u;
            cfg.partner[static_cast<std::size_t>(t) - 1] = u;
            cfg.partner[static_cast<std::size_t>(u) - 1] = t;
        }
    }
    return cfg;
}

inline Bits ncc_to_dyck(const Config& cfg) {
    if (cfg.marked()) throw PreconditionViolated("ncc_to_dyck: marked configuration");
    int n = cfg.size() + 1;
    std::vector<int> G(static_cast<std::size_t>(n) + 2, 0);
    G[static_cast<std::size_t>(n) + 1] = -1;
    for (int t = n; t >= 1; --t) {
        int p = (t <= n - 1) ? cfg.of(t) : 0;
        if (t <= n - 1 && p == t) G[static_cast<std::size_t>(t)] = G[static_cast<std::size_t>(t) + 1];
        else if (t <= n - 1 && p > t) G[static_cast<std::size_t>(t)] = G[static_cast<std::size_t>(p) + 1];
        else G[static_cast<std::size_t>(t)] = G[static_cast<std::size_t>(t) + 1] + 1;
    }
    Bits w;
    w.reserve(static_cast<std::size_t>(2 * n));
    int prevX = 0;
    for (int t = 1; t <= n; ++t) {
        int x = G[static_cast<std::size_t>(t)] + t;
        for (int i = 0; i < x - prevX; ++i) w.push_back(0);
        w.push_back(1);
        prevX = x;
    }
    if (!is_lattice_word(w)) throw std::logic_error("ncc_to_dyck: produced invalid word");
    return w;
}

// ---------------------------------------------------------------------------
// B.5: non-crossing partitions <-> Dyck paths (blocks ordered by maximum;
// block j contributes max(B_j) - max(B_{j-1}) norths then |B_j| easts).

inline Bits ncp_to_dyck(const Partition& pi) {
    std::vector<std::vector<int>> blocks(pi.blocks);
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.back() < b.back(); });
    Bits w;
    int prevMax = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.back() - prevMax; ++i) w.push_back(0);
        for (std::size_t i = 0; i < b.size(); ++i) w.push_back(1);
        prevMax = b.back();
    }
    return w;
}

inline Partition dyck_to_ncp(const Bits& w) {
    if (!is_lattice_word(w)) throw PreconditionViolated("dyck_to_ncp: not a Dyck word");
    int n = static_cast<int>(w.size()) / 2;
    std::vector<std::pair<int, int>> runs; // (max so far, block size)
    int norths = 0;
    std::size_t i = 0;
    while (i < w.size()) {
        while (i < w.size() && w[i] == 0) {
            ++norths;
            ++i;
        }
        int sz = 0;
        while (i < w.size() && w[i] == 1) {
            ++sz;
            ++i;
        }
        runs.push_back({norths, sz});
    }
    std::set<int> avail;
    for (int x = 1; x <= n; ++x) avail.insert(x);
    Partition pi;
    for (auto [mx, sz] : runs) {
        std::vector<int> blk;
        auto it = avail.upper_bound(mx);
        for (int c = 0; c < sz; ++c) {
            if (it == avail.begin()) throw std::logic_error("dyck_to_ncp: exhausted candidates");
            --it;
            blk.push_back(*it);
            it = avail.erase(it);
        }
        std::sort(blk.begin(), blk.end());
        pi.blocks.push_back(std::move(blk));
    }
    std::sort(pi.blocks.begin(), pi.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return pi;
}

// ---------------------------------------------------------------------------
// Bijection 7.5: two-column SSYT <-> non-crossing partitions.

inline Partition ssyt_to_ncp(const Ssyt2Col& t, int n) {
    Partition pi;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> col1;
    for (const auto& row : t.rows) col1.push_back(row[0]);
    std::vector<char> inP(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& row : t.rows) {
        int x = row[1];
        int y = -1;
        for (int cand : col1)
            if (cand <= x && !inP[static_cast<std::size_t>(cand)]) y = std::max(y, cand);
        if (y < 0) throw std::logic_error("ssyt_to_ncp: no available column-one entry");
        std::vector<int> blk;
        for (int z = y; z <= x; ++z)
            if (!inP[static_cast<std::size_t>(z)]) blk.push_back(z);
        for (int z : blk) inP[static_cast<std::size_t>(z)] = 1;
        pi.blocks.push_back(std::move(blk));
    }
    std::vector<int> last;
    for (int z = 1; z <= n; ++z)
        if (!inP[static_cast<std::size_t>(z)]) last.push_back(z);
    pi.blocks.push_back(std::move(last));
    std::sort(pi.blocks.begin(), pi.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return pi;
}

inline Ssyt2Col ncp_to_ssyt(const Partition& pi, int n) {
    std::vector<std::vector<int>> rest;
    for (const auto& b : pi.blocks)
        if (std::find(b.begin(), b.end(), n) == b.end()) rest.push_back(b);
    std::vector<int> mins, maxs;
    for (const auto& b : rest) {
        mins.push_back(b.front());
        maxs.push_back(b.back());
    }
    std::sort(mins.begin(), mins.end());
    std::sort(maxs.begin(), maxs.end());
    Ssyt2Col t;
    for (std::size_t i = 0; i < mins.size(); ++i)
        t.rows.push_back({mins[static_cast<std::size_t>(i)], maxs[static_cast<std::size_t>(i)]});
    return t;
}

// ---------------------------------------------------------------------------
// The root-ideal map phi and its inverse, on path words.

/// Turn the east step just before the first maximal-depth point into a
/// north step.  Requires depth >= 1.
inline Bits phi_step(const Bits& w) {
    int depth = word_depth(w);
    if (depth < 1) throw PreconditionViolated("phi_step: path already has depth 0");
    int h = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        h += (w[i] == 1) ? 1 : -1;
        if (h == depth) {
            Bits r(w);
            r[i] = 0;
            return r;
        }
    }
    throw std::logic_error("phi_step: depth not reached");
}

/// Inverse: turn the north step right after the last point of maximal
/// prefix excess back into an east step.
inline Bits phi_inv_step(const Bits& w) {
    int h = 0, best = 0;
    std::size_t argbest = 0; // prefix length with maximal excess, latest
    for (std::size_t i = 0; i < w.size(); ++i) {
        h += (w[i] == 1) ? 1 : -1;
        if (h >= best) {
            best = h;
            argbest = i + 1;
        }
    }
    if (best < 0 || argbest >= w.size())
        throw PreconditionViolated("phi_inv_step: no north step after last maximum");
    if (w[argbest] != 0) throw std::logic_error("phi_inv_step: expected a north step");
    Bits r(w);
    r[argbest] = 1;
    return r;
}

// ---------------------------------------------------------------------------
// Type B root poset order ideals.
//
// Ideals are encoded by their boundary word of length 2n (depth-0 prefix
// of the reverse-complement symmetric Dyck path of size 2n).  The poset
// is realized on the boxes (c, r), 1 <= c < r <= 2n, of the A_{2n-1}
// root poset folded by (c, r) |-> (2n+1-r, 2n+1-c); a box lies in the
// ideal iff r <= x_c, where x_c counts norths before the c-th east of
// the full symmetric path.

struct BoxIdeal {
    int n = 0;                       // type B rank
    std::vector<std::vector<char>> in; // in[c-1][r-1], c < r <= 2n
    bool contains(int c, int r) const { return in[static_cast<std::size_t>(c) - 1][static_cast<std::size_t>(r) - 1] != 0; }
};

inline BoxIdeal oi_word_to_ideal(const Bits& half, int n) {
    Bits full(half);
    for (std::size_t i = half.size(); i-- > 0;) full.push_back(1 - half[i]);
    BoxIdeal I;
    I.n = n;
    I.in.assign(static_cast<std::size_t>(2 * n), std::vector<char>(static_cast<std::size_t>(2 * n), 0));
    int norths = 0, easts = 0;
    for (std::uint8_t b : full) {
        if (b == 0) ++norths;
        else {
            ++easts;
            for (int r = easts + 1; r <= norths; ++r)
                I.in[static_cast<std::size_t>(easts) - 1][static_cast<std::size_t>(r) - 1] = 1;
        }
    }
    return I;
}

inline Bits oi_ideal_to_word(const BoxIdeal& I) {
    int twoN = 2 * I.n;
    Bits full;
    int prevX = 0;
    for (int c = 1; c <= twoN; ++c) {
        int x = c;
        for (int r = twoN; r > c; --r)
            if (I.contains(c, r)) {
                x = r;
                break;
            }
        for (int i = 0; i < x - prevX; ++i) full.push_back(0);
        full.push_back(1);
        prevX = x;
    }
    return Bits(full.begin(), full.begin() + twoN);
}

/// Rowmotion: the ideal generated by the minimal elements of the
/// complement.  Covers go to (c+1, r) and (c, r-1).
inline BoxIdeal box_rowmotion(const BoxIdeal& I) {
    int twoN = 2 * I.n;
    BoxIdeal J;
    J.n = I.n;
    J.in.assign(static_cast<std::size_t>(twoN), std::vector<char>(static_cast<std::size_t>(twoN), 0));
    for (int c = 1; c < twoN; ++c)
        for (int r = c + 1; r <= twoN; ++r) {
            if (I.contains(c, r)) continue;
            bool downLeft = (c + 1 >= r) || I.contains(c + 1, r);
            bool downRight = (r - 1 <= c) || I.contains(c, r - 1);
            if (downLeft && downRight) {
                // generate the principal ideal below (c, r)
                for (int c2 = c; c2 < twoN; ++c2)
                    for (int r2 = c2 + 1; r2 <= r; ++r2)
                        J.in[static_cast<std::size_t>(c2) - 1][static_cast<std::size_t>(r2) - 1] = 1;
            }
        }
    return J;
}

inline Bits oi_rowmotion(const Bits& half, int n) {
    return oi_ideal_to_word(box_rowmotion(oi_word_to_ideal(half, n)));
}

/// Number of boxes fixed by the folding, c + r = 2n + 1, inside the
/// ideal: the number of elements on the top diagonal of the B_n poset.
inline int oi_top_diagonal(const Bits& half, int n) {
    int ones = 0;
    for (std::uint8_t b : half) ones += b;
    return n - ones;
}

} // namespace cspkit
