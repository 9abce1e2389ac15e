#pragma once

/*
  Combinatorial statistics over the object families, plus generating
  polynomials of statistic distributions.  Word positions are 1-based;
  paths are words with north = 0 and east = 1, so valleys are descents
  and peaks are ascents of the word.
*/

#include "cspkit/families.hpp"
#include "cspkit/intpoly.hpp"
#include "cspkit/maps.hpp"

#include <string>

namespace cspkit {

enum class StatId {
    MAJ, INV, DES, CDES_WORD, CDES_SYT, PEAKS, VALLEYS, PMAJ, DEPTH, MODPEAKS,
    EVEN_EDGES, SHORT_EDGES, BLOCKS, EARS, LOOPS, PROPER_EDGES, MAJ_SYT, MAJ_VIA_NCP
};

inline bool is_word_family(FamilyId id) {
    switch (id) {
    case FamilyId::BW: case FamilyId::BW_CDES: case FamilyId::PATHS: case FamilyId::PATHS_S:
    case FamilyId::DYCK: case FamilyId::SYT2: case FamilyId::SYT_CDES: case FamilyId::SKEW_SYT:
    case FamilyId::OI:
        return true;
    default:
        return false;
    }
}

inline long statistic(StatId id, const CombObject& x) {
    const FamilyId fam = x.spec.id;
    auto wordStat = [&](auto&& f) -> long {
        if (!is_word_family(fam)) throw FamilyMismatch("word statistic on non-word family");
        return f(as_word(x).bits);
    };
    switch (id) {
    case StatId::MAJ: return wordStat(word_maj);
    case StatId::INV: return wordStat(word_inv);
    case StatId::DES: return wordStat(word_des);
    case StatId::CDES_WORD: return wordStat(word_cdes);
    case StatId::CDES_SYT:
        if (fam != FamilyId::SYT2 && fam != FamilyId::SYT_CDES)
            throw FamilyMismatch("CDES_SYT expects a two-row SYT");
        return syt_cdes(as_word(x).bits);
    case StatId::PEAKS: return wordStat(word_peaks);
    case StatId::VALLEYS: return wordStat(word_valleys);
    case StatId::PMAJ: return wordStat(word_pmaj);
    case StatId::DEPTH: return wordStat(word_depth);
    case StatId::MODPEAKS: return wordStat(word_modpeaks);
    case StatId::MAJ_SYT:
        if (fam != FamilyId::SYT2 && fam != FamilyId::SYT_CDES && fam != FamilyId::SKEW_SYT)
            throw FamilyMismatch("MAJ_SYT expects a tableau family");
        return syt_maj(as_word(x).bits);
    case StatId::EVEN_EDGES:
        switch (fam) {
        case FamilyId::NCM: case FamilyId::NCM_SH: case FamilyId::NCM_EVEN:
        case FamilyId::NCMB: case FamilyId::NCMB_EVEN:
            return matching_even_edges(as_matching(x));
        case FamilyId::NCM_MARKED: case FamilyId::NCM_MARKED_EVEN:
            return matching_even_edges(Matching{as_marked(x).partner});
        default: throw FamilyMismatch("EVEN_EDGES expects a matching family");
        }
    case StatId::SHORT_EDGES:
        switch (fam) {
        case FamilyId::NCM: case FamilyId::NCM_SH: case FamilyId::NCM_EVEN:
        case FamilyId::NCMB: case FamilyId::NCMB_EVEN:
            return matching_short_edges(as_matching(x));
        default: throw FamilyMismatch("SHORT_EDGES expects a matching family");
        }
    case StatId::BLOCKS:
        switch (fam) {
        case FamilyId::NCP: case FamilyId::NCP_BLOCKS:
        case FamilyId::NCPB: case FamilyId::NCPB_BLOCKS:
            return static_cast<long>(as_partition(x).blocks.size());
        default: throw FamilyMismatch("BLOCKS expects a partition family");
        }
    case StatId::EARS:
        switch (fam) {
        case FamilyId::TRI: case FamilyId::TRI_EAR:
            return triangulation_ears(as_triangulation(x), static_cast<int>(x.spec.p.n));
        case FamilyId::TRIB:
            return triangulation_ears(as_triangulation(x), static_cast<int>(2 * x.spec.p.n + 2));
        default: throw FamilyMismatch("EARS expects a triangulation family");
        }
    case StatId::LOOPS:
        switch (fam) {
        case FamilyId::NCC: case FamilyId::NCC_EL: case FamilyId::NCC_K: case FamilyId::NCC_LOOPS:
        case FamilyId::NCCB: case FamilyId::NCCB_EL: case FamilyId::NCCB_K:
            return config_loops(as_config(x));
        default: throw FamilyMismatch("LOOPS expects a configuration family");
        }
    case StatId::PROPER_EDGES:
        switch (fam) {
        case FamilyId::NCC: case FamilyId::NCC_EL: case FamilyId::NCC_K: case FamilyId::NCC_LOOPS:
        case FamilyId::NCCB: case FamilyId::NCCB_EL: case FamilyId::NCCB_K:
            return config_proper_edges(as_config(x));
        default: throw FamilyMismatch("PROPER_EDGES expects a configuration family");
        }
    case StatId::MAJ_VIA_NCP:
        switch (fam) {
        case FamilyId::NCP: case FamilyId::NCP_BLOCKS:
            return word_maj(ncp_to_dyck(as_partition(x)));
        default: throw FamilyMismatch("MAJ_VIA_NCP expects a partition family");
        }
    }
    throw FamilyMismatch("statistic: unhandled id");
}

/// Sum of q^{stat(x)+shift} over the family.
inline IntPoly distribution(const FamilySpec& spec, StatId id, long shift = 0) {
    std::map<long, Int> hist;
    for_each_object(spec, [&](const CombObject& x) { hist[statistic(id, x) + shift] += 1; });
    if (!hist.empty() && hist.begin()->first < 0)
        throw NegativeExponent("distribution: shift underflows an exponent");
    long deg = hist.empty() ? -1 : hist.rbegin()->first;
    std::vector<Int> coeffs(static_cast<std::size_t>(deg + 1), Int(0));
    for (auto& [e, c] : hist) coeffs[static_cast<std::size_t>(e)] = c;
    return IntPoly(std::move(coeffs));
}

/// Joint distribution: index t^{tStat}, entry sums q^{qStat+shift}.
inline std::vector<IntPoly> bivariate_distribution(const FamilySpec& spec, StatId qStat,
                                                   StatId tStat, long shift = 0) {
    std::map<long, std::map<long, Int>> hist;
    for_each_object(spec, [&](const CombObject& x) {
        hist[statistic(tStat, x)][statistic(qStat, x) + shift] += 1;
    });
    long tmax = hist.empty() ? -1 : hist.rbegin()->first;
    std::vector<IntPoly> out(static_cast<std::size_t>(tmax + 1));
    for (auto& [t, h] : hist) {
        if (!h.empty() && h.begin()->first < 0)
            throw NegativeExponent("bivariate_distribution: shift underflows");
        long deg = h.rbegin()->first;
        std::vector<Int> coeffs(static_cast<std::size_t>(deg + 1), Int(0));
        for (auto& [e, c] : h) coeffs[static_cast<std::size_t>(e)] = c;
        out[static_cast<std::size_t>(t)] = IntPoly(std::move(coeffs));
    }
    return out;
}

inline StatId stat_from_name(const std::string& s) {
    static const std::map<std::string, StatId> table = {
        {"maj", StatId::MAJ}, {"inv", StatId::INV}, {"des", StatId::DES},
        {"cdes", StatId::CDES_WORD}, {"cdes_syt", StatId::CDES_SYT},
        {"peaks", StatId::PEAKS}, {"valleys", StatId::VALLEYS}, {"pmaj", StatId::PMAJ},
        {"depth", StatId::DEPTH}, {"modpeaks", StatId::MODPEAKS},
        {"even_edges", StatId::EVEN_EDGES}, {"short_edges", StatId::SHORT_EDGES},
        {"blocks", StatId::BLOCKS}, {"ears", StatId::EARS}, {"loops", StatId::LOOPS},
        {"proper_edges", StatId::PROPER_EDGES}, {"maj_syt", StatId::MAJ_SYT},
        {"maj_via_ncp", StatId::MAJ_VIA_NCP},
    };
    auto it = table.find(s);
    if (it == table.end()) throw OutOfDomain("unknown statistic: " + s);
    return it->second;
}

inline std::string stat_name(StatId id) {
    switch (id) {
    case StatId::MAJ: return "maj";
    case StatId::INV: return "inv";
    case StatId::DES: return "des";
    case StatId::CDES_WORD: return "cdes";
    case StatId::CDES_SYT: return "cdes_syt";
    case StatId::PEAKS: return "peaks";
    case StatId::VALLEYS: return "valleys";
    case StatId::PMAJ: return "pmaj";
    case StatId::DEPTH: return "depth";
    case StatId::MODPEAKS: return "modpeaks";
    case StatId::EVEN_EDGES: return "even_edges";
    case StatId::SHORT_EDGES: return "short_edges";
    case StatId::BLOCKS: return "blocks";
    case StatId::EARS: return "ears";
    case StatId::LOOPS: return "loops";
    case StatId::PROPER_EDGES: return "proper_edges";
    case StatId::MAJ_SYT: return "maj_syt";
    case StatId::MAJ_VIA_NCP: return "maj_via_ncp";
    }
    return "?";
}

} // namespace cspkit
