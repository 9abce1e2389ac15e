#pragma once

/*
  Canonical encodings of the combinatorial objects, their invariants, and
  the raw statistic primitives on those encodings.

  Conventions fixed once, here:
    - vertices are 1-indexed and arranged counterclockwise;
    - gap g lies between vertices g and g+1 (mod the vertex count);
    - paths are binary words with north = 0 and east = 1;
    - word positions are 1-based in all statistics.
*/

#include "cspkit/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace cspkit {

using Bits = std::vector<std::uint8_t>;

// ---------------------------------------------------------------------------
// Payload types.

/// Binary word; also encodes paths (north=0, east=1), two-row standard
/// tableaux and their skew variants (0 = entry in the top row), and root
/// ideals (boundary path).
struct Word {
    Bits bits;
    auto operator<=>(const Word&) const = default;
};

/// Perfect matching as a 1-indexed partner array: partner[i-1] = j.
struct Matching {
    std::vector<int> partner;
    auto operator<=>(const Matching&) const = default;
    int size() const { return static_cast<int>(partner.size()); }
    int of(int v) const { return partner[static_cast<std::size_t>(v) - 1]; }
};

/// Set partition with blocks sorted internally and by minimum element.
struct Partition {
    std::vector<std::vector<int>> blocks;
    auto operator<=>(const Partition&) const = default;
};

/// (1,2)-configuration: partner[i-1] = 0 isolated, i loop, j proper edge.
/// The optional mark singles out one proper edge (type B variant).
struct Config {
    std::vector<int> partner;
    std::pair<int, int> mark{0, 0}; // (0,0) = unmarked
    auto operator<=>(const Config&) const = default;
    int size() const { return static_cast<int>(partner.size()); }
    int of(int v) const { return partner[static_cast<std::size_t>(v) - 1]; }
    bool marked() const { return mark.first != 0; }
};

/// Triangulation of an n-gon as its sorted diagonal set.
struct Triangulation {
    std::vector<std::pair<int, int>> diagonals;
    auto operator<=>(const Triangulation&) const = default;
};

/// Two-column semistandard tableau: row i = (a_i, b_i).
struct Ssyt2Col {
    std::vector<std::array<int, 2>> rows;
    auto operator<=>(const Ssyt2Col&) const = default;
};

/// Non-crossing matching with a set of marked regions; each region is
/// keyed by its sorted set of adjacent circular gaps.
struct MarkedMatching {
    std::vector<int> partner;
    std::vector<std::vector<int>> marks; // sorted keys, sorted between them
    auto operator<=>(const MarkedMatching&) const = default;
};

// ---------------------------------------------------------------------------
// Word statistics.

inline int word_maj(const Bits& w) {
    int s = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) s += static_cast<int>(i) + 1;
    return s;
}

inline int word_inv(const Bits& w) {
    int inv = 0, ones = 0;
    for (std::uint8_t b : w) {
        if (b == 1) ++ones;
        else inv += ones;
    }
    return inv;
}

inline int word_des(const Bits& w) {
    int s = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) ++s;
    return s;
}

/// Descents with indices mod the word length.
inline int word_cdes(const Bits& w) {
    if (w.empty()) return 0;
    int s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > w[(i + 1) % w.size()]) ++s;
    return s;
}

/// Peaks: north (0) immediately followed by east (1).
inline int word_peaks(const Bits& w) {
    int s = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == 0 && w[i + 1] == 1) ++s;
    return s;
}

/// Valleys: east (1) immediately followed by north (0); same as descents.
inline int word_valleys(const Bits& w) { return word_des(w); }

/// Sum of the 1-based positions of the peaks.
inline int word_pmaj(const Bits& w) {
    int s = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == 0 && w[i + 1] == 1) s += static_cast<int>(i) + 1;
    return s;
}

/// Largest r >= 0 such that the path touches the line y = x - r.
inline int word_depth(const Bits& w) {
    int d = 0, h = 0;
    for (std::uint8_t b : w) {
        h += (b == 1) ? 1 : -1;
        d = std::max(d, h);
    }
    return std::max(d, 0);
}

/// Peaks, plus one if the path ends with a north step.
inline int word_modpeaks(const Bits& w) {
    int s = word_peaks(w);
    if (!w.empty() && w.back() == 0) ++s;
    return s;
}

/// Every prefix has at least as many zeros as ones (and balanced total).
inline bool is_lattice_word(const Bits& w) {
    int h = 0;
    for (std::uint8_t b : w) {
        h += (b == 0) ? 1 : -1;
        if (h < 0) return false;
    }
    return h == 0;
}

/// A Dyck word 0 w_2 ... w_{2n-1} 1 whose interior is again a Dyck word.
inline bool is_elevated_dyck(const Bits& w) {
    if (w.size() < 2) return false;
    if (w.front() != 0 || w.back() != 1) return false;
    Bits inner(w.begin() + 1, w.end() - 1);
    return is_lattice_word(inner);
}

/// For a two-row SYT encoded as a word (0 = top row): descents of the
/// tableau are the positions j with w_j = 0, w_{j+1} = 1.
inline int syt_maj(const Bits& w) { return word_pmaj(w); }
inline int syt_des(const Bits& w) { return word_peaks(w); }

/// Cyclic descents of a two-row SYT: 2n is a cyclic descent exactly when
/// the associated Dyck path is elevated.
inline int syt_cdes(const Bits& w) {
    return syt_des(w) + (is_elevated_dyck(w) ? 1 : 0);
}

// ---------------------------------------------------------------------------
// Matching / partition / configuration / triangulation statistics.

inline bool is_involution_matching(const std::vector<int>& p) {
    int v = static_cast<int>(p.size());
    for (int i = 1; i <= v; ++i) {
        int j = p[static_cast<std::size_t>(i) - 1];
        if (j < 1 || j > v || j == i) return false;
        if (p[static_cast<std::size_t>(j) - 1] != i) return false;
    }
    return true;
}

/// No i < j < p(i) < p(j).
inline bool is_noncrossing_partner(const std::vector<int>& p) {
    int v = static_cast<int>(p.size());
    for (int i = 1; i <= v; ++i) {
        int k = p[static_cast<std::size_t>(i) - 1];
        if (k <= i) continue;
        for (int j = i + 1; j < k; ++j) {
            int l = p[static_cast<std::size_t>(j) - 1];
            if (l > k || (l >= 1 && l < i)) return false;
        }
    }
    return true;
}

inline int matching_even_edges(const Matching& m) {
    int s = 0;
    for (int i = 1; i <= m.size(); ++i) {
        int j = m.of(i);
        if (j > i && i % 2 == 0) ++s;
    }
    return s;
}

inline int matching_short_edges(const Matching& m) {
    int v = m.size(), s = 0;
    for (int i = 1; i <= v; ++i) {
        int j = m.of(i);
        if (j == i + 1 || (i == 1 && j == v)) ++s;
    }
    return s;
}

inline int config_loops(const Config& c) {
    int s = 0;
    for (int i = 1; i <= c.size(); ++i)
        if (c.of(i) == i) ++s;
    return s;
}

inline int config_proper_edges(const Config& c) {
    int s = 0;
    for (int i = 1; i <= c.size(); ++i)
        if (c.of(i) > i) ++s;
    return s;
}

inline bool config_valid(const Config& c) {
    int v = c.size();
    std::vector<int> proper(c.partner);
    for (int i = 1; i <= v; ++i) {
        int j = c.of(i);
        if (j < 0 || j > v) return false;
        if (j != 0 && j != i && c.of(j) != i) return false;
        if (j == 0 || j == i) proper[static_cast<std::size_t>(i) - 1] = i; // neutral
    }
    // crossing test on proper edges only
    for (int i = 1; i <= v; ++i) {
        int k = c.of(i);
        if (k <= i) continue;
        for (int j = i + 1; j < k; ++j) {
            int l = c.of(j);
            if (l == 0 || l == j) continue;
            if (l > k || l < i) return false;
        }
    }
    if (c.marked()) {
        auto [a, b] = c.mark;
        if (a < 1 || b < 1 || a >= b || c.of(a) != b) return false;
    }
    return true;
}

inline bool partition_is_noncrossing(const Partition& pi) {
    const auto& bs = pi.blocks;
    for (std::size_t x = 0; x < bs.size(); ++x)
        for (std::size_t y = 0; y < bs.size(); ++y) {
            if (x == y) continue;
            // a < b < c < d with a,c in block x and b,d in block y
            for (std::size_t i = 0; i + 1 < bs[x].size(); ++i) {
                int a = bs[x][i], c = bs[x][i + 1];
                for (std::size_t j = 0; j + 1 < bs[y].size(); ++j) {
                    int b = bs[y][j], d = bs[y][j + 1];
                    if (a < b && b < c && c < d) return false;
                }
            }
        }
    return true;
}

inline bool partition_valid(const Partition& pi, int n) {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& b : pi.blocks) {
        if (b.empty() || !std::is_sorted(b.begin(), b.end())) return false;
        for (int x : b) {
            if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) return false;
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }
    for (int x = 1; x <= n; ++x)
        if (!seen[static_cast<std::size_t>(x)]) return false;
    for (std::size_t i = 0; i + 1 < pi.blocks.size(); ++i)
        if (pi.blocks[i].front() >= pi.blocks[i + 1].front()) return false;
    return partition_is_noncrossing(pi);
}

/// Diagonals {a,b} of an n-gon cross iff exactly one endpoint of one lies
/// strictly between the endpoints of the other (cyclically).
inline bool diagonals_cross(std::pair<int, int> d1, std::pair<int, int> d2) {
    auto [a, b] = d1;
    auto [c, d] = d2;
    auto strictly_between = [&](int x) { return a < x && x < b; };
    bool cIn = strictly_between(c), dIn = strictly_between(d);
    if (c == a || c == b || d == a || d == b) return false;
    return cIn != dIn;
}

inline bool triangulation_valid(const Triangulation& t, int n) {
    if (static_cast<int>(t.diagonals.size()) != n - 3) return false;
    for (auto [a, b] : t.diagonals) {
        if (a < 1 || b <= a || b > n) return false;
        int gap = b - a;
        if (gap < 2 || gap > n - 2) return false; // must be a real diagonal
    }
    if (!std::is_sorted(t.diagonals.begin(), t.diagonals.end())) return false;
    for (std::size_t i = 0; i < t.diagonals.size(); ++i)
        for (std::size_t j = i + 1; j < t.diagonals.size(); ++j)
            if (diagonals_cross(t.diagonals[i], t.diagonals[j])) return false;
    return true;
}

/// Ears: triangles on cyclically consecutive vertices i, i+1, i+2, i.e.
/// positions i whose short-cut diagonal {i, i+2} is present.
inline int triangulation_ears(const Triangulation& t, int n) {
    std::set<std::pair<int, int>> ds(t.diagonals.begin(), t.diagonals.end());
    int s = 0;
    for (int i = 1; i <= n; ++i) {
        int j = (i + 1) % n + 1; // i+2 cyclically
        int a = std::min(i, j), b = std::max(i, j);
        if (ds.count({a, b})) ++s;
    }
    return s;
}

inline bool ssyt2col_valid(const Ssyt2Col& t, int maxEntry) {
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        auto [a, b] = t.rows[i];
        if (a < 1 || b < a || b > maxEntry) return false;
        if (i + 1 < t.rows.size()) {
            if (t.rows[i + 1][0] <= a || t.rows[i + 1][1] <= b) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Regions of a non-crossing matching (for marked matchings).

/// The chords of a non-crossing matching cut the disk into n+1 regions;
/// each region is keyed by the sorted set of circular gaps on its
/// boundary.  Gap g belongs to the innermost chord containing it, or to
/// the outer region.
inline std::vector<std::vector<int>> matching_regions(const Matching& m) {
    int v = m.size();
    std::vector<std::pair<int, int>> chords;
    for (int i = 1; i <= v; ++i)
        if (m.of(i) > i) chords.push_back({i, m.of(i)});
    std::map<int, std::vector<int>> byChord; // index into chords, -1 = outer
    std::vector<int> outer;
    for (int g = 1; g <= v; ++g) {
        int best = -1, bestSpan = v + 1;
        for (std::size_t ci = 0; ci < chords.size(); ++ci) {
            auto [a, b] = chords[ci];
            if (a <= g && g < b && b - a < bestSpan) {
                best = static_cast<int>(ci);
                bestSpan = b - a;
            }
        }
        if (best < 0) outer.push_back(g);
        else byChord[best].push_back(g);
    }
    std::vector<std::vector<int>> regions;
    for (auto& [ci, gaps] : byChord) regions.push_back(gaps);
    if (!outer.empty()) regions.push_back(outer);
    std::sort(regions.begin(), regions.end());
    if (static_cast<int>(regions.size()) != v / 2 + 1)
        throw std::logic_error("matching_regions: face count is not n+1");
    return regions;
}

// ---------------------------------------------------------------------------
// Shared relabelings.

inline int mod1(int x, int m) { return (x - 1 + m) % m + 1; } // wrap into 1..m

inline Matching rotate_matching(const Matching& m, int step) {
    int v = m.size();
    Matching r;
    r.partner.assign(static_cast<std::size_t>(v), 0);
    for (int i = 1; i <= v; ++i)
        r.partner[static_cast<std::size_t>(mod1(i + step, v)) - 1] = mod1(m.of(i) + step, v);
    return r;
}

inline Config rotate_config(const Config& c, int step) {
    int v = c.size();
    Config r;
    r.partner.assign(static_cast<std::size_t>(v), 0);
    for (int i = 1; i <= v; ++i) {
        int j = c.of(i);
        int ni = mod1(i + step, v);
        if (j == 0) r.partner[static_cast<std::size_t>(ni) - 1] = 0;
        else if (j == i) r.partner[static_cast<std::size_t>(ni) - 1] = ni;
        else r.partner[static_cast<std::size_t>(ni) - 1] = mod1(j + step, v);
    }
    if (c.marked()) {
        int a = mod1(c.mark.first + step, v), b = mod1(c.mark.second + step, v);
        r.mark = {std::min(a, b), std::max(a, b)};
    }
    return r;
}

inline Partition rotate_partition(const Partition& pi, int n, int step) {
    Partition r;
    for (const auto& b : pi.blocks) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(mod1(x + step, n));
        std::sort(nb.begin(), nb.end());
        r.blocks.push_back(std::move(nb));
    }
    std::sort(r.blocks.begin(), r.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return r;
}

inline Triangulation rotate_triangulation(const Triangulation& t, int n, int step) {
    Triangulation r;
    for (auto [a, b] : t.diagonals) {
        int na = mod1(a + step, n), nb = mod1(b + step, n);
        r.diagonals.push_back({std::min(na, nb), std::max(na, nb)});
    }
    std::sort(r.diagonals.begin(), r.diagonals.end());
    return r;
}

inline Bits rotate_word(const Bits& w, int step) {
    std::size_t n = w.size();
    Bits r(n);
    for (std::size_t i = 0; i < n; ++i)
        r[(i + static_cast<std::size_t>(step)) % n] = w[i];
    return r;
}

inline MarkedMatching rotate_marked(const MarkedMatching& mm, int step) {
    int v = static_cast<int>(mm.partner.size());
    MarkedMatching r;
    r.partner = rotate_matching(Matching{mm.partner}, step).partner;
    for (const auto& key : mm.marks) {
        std::vector<int> nk;
        nk.reserve(key.size());
        for (int g : key) nk.push_back(mod1(g + step, v));
        std::sort(nk.begin(), nk.end());
        r.marks.push_back(std::move(nk));
    }
    std::sort(r.marks.begin(), r.marks.end());
    return r;
}

} // namespace cspkit
