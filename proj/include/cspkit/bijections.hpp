#pragma once

/*
  The explicit bijections between object families, each with its inverse.
  apply() checks that the input lies in the declared source family and
  tags the image with the declared target family.
*/

#include "cspkit/families.hpp"
#include "cspkit/maps.hpp"

#include <string>

namespace cspkit {

enum class BijectionId {
    NCM_TO_DYCK,    // starting vertices read as north steps
    BW_TO_NCM_SYM,  // period word to rotationally symmetric matching
    SYT_TO_NCM,     // first-row entries are starting vertices
    SYT_TO_DYCK,    // first-row entries are north steps
    NCP_TO_NCM,     // primed-vertex construction
    NCP_TO_DYCK,    // blocks ordered by maximum
    DYCK_TO_NCC,    // laser construction
    SSYT_TO_NCP,    // column pairs to block extremes
    PHI_ROOT_IDEAL  // iterate phi depth-many times
};

/// Source family of a bijection, in terms of its parameter set.
/// Parameters: n throughout; BW_TO_NCM_SYM uses (n, s=d) with d | n,
/// d < n; SSYT_TO_NCP uses (n, k) for SSYT(2^k, n-1) -> NCP(n, k+1);
/// PHI_ROOT_IDEAL uses (n, s).
inline FamilySpec bijection_source(BijectionId id, const FamilyParams& p) {
    switch (id) {
    case BijectionId::NCM_TO_DYCK: return {FamilyId::NCM, p};
    case BijectionId::BW_TO_NCM_SYM: {
        FamilyParams q;
        q.n = 2 * p.s;
        q.k = p.s;
        return {FamilyId::BW, q};
    }
    case BijectionId::SYT_TO_NCM:
    case BijectionId::SYT_TO_DYCK: return {FamilyId::SYT2, p};
    case BijectionId::NCP_TO_NCM:
    case BijectionId::NCP_TO_DYCK: return {FamilyId::NCP, p};
    case BijectionId::DYCK_TO_NCC: return {FamilyId::DYCK, p};
    case BijectionId::SSYT_TO_NCP: {
        FamilyParams q;
        q.k = p.k;
        q.n = p.n - 1;
        return {FamilyId::SSYT2COL, q};
    }
    case BijectionId::PHI_ROOT_IDEAL: return {FamilyId::PATHS_S, p};
    }
    throw OutOfDomain("bijection_source: unhandled id");
}

inline FamilySpec bijection_target(BijectionId id, const FamilyParams& p) {
    switch (id) {
    case BijectionId::NCM_TO_DYCK: return {FamilyId::DYCK, p};
    case BijectionId::BW_TO_NCM_SYM: return {FamilyId::NCM, p};
    case BijectionId::SYT_TO_NCM: return {FamilyId::NCM, p};
    case BijectionId::SYT_TO_DYCK: return {FamilyId::DYCK, p};
    case BijectionId::NCP_TO_NCM: return {FamilyId::NCM, p};
    case BijectionId::NCP_TO_DYCK: return {FamilyId::DYCK, p};
    case BijectionId::DYCK_TO_NCC: return {FamilyId::NCC, p};
    case BijectionId::SSYT_TO_NCP: {
        FamilyParams q;
        q.n = p.n;
        q.k = p.k + 1;
        return {FamilyId::NCP_BLOCKS, q};
    }
    case BijectionId::PHI_ROOT_IDEAL: return {FamilyId::OI, p};
    }
    throw OutOfDomain("bijection_target: unhandled id");
}

/// Forward application.  `params` carries the bijection parameters (the
/// object itself fixes most of them; see bijection_source).
inline CombObject apply_bijection(BijectionId id, const FamilyParams& params, const CombObject& x) {
    FamilySpec tgt = bijection_target(id, params);
    switch (id) {
    case BijectionId::NCM_TO_DYCK:
        return {tgt, Word{starters_of_matching(as_matching(x))}};
    case BijectionId::BW_TO_NCM_SYM: {
        long d = params.s;
        if (d < 1 || params.n % d != 0 || d >= params.n)
            throw PreconditionViolated("BW_TO_NCM_SYM: need d | n, d < n");
        return {tgt, word_to_sym_ncm(as_word(x).bits, static_cast<int>(2 * params.n))};
    }
    case BijectionId::SYT_TO_NCM:
        return {tgt, matching_from_starters(as_word(x).bits)};
    case BijectionId::SYT_TO_DYCK:
        return {tgt, as_word(x)};
    case BijectionId::NCP_TO_NCM:
        return {tgt, ncp_to_ncm(as_partition(x), static_cast<int>(params.n))};
    case BijectionId::NCP_TO_DYCK:
        return {tgt, Word{ncp_to_dyck(as_partition(x))}};
    case BijectionId::DYCK_TO_NCC:
        return {tgt, dyck_to_ncc(as_word(x).bits)};
    case BijectionId::SSYT_TO_NCP:
        return {tgt, ssyt_to_ncp(as_ssyt(x), static_cast<int>(params.n))};
    case BijectionId::PHI_ROOT_IDEAL: {
        Bits w = as_word(x).bits;
        int depth = word_depth(w);
        for (int i = 0; i < depth; ++i) w = phi_step(w);
        return {tgt, Word{w}};
    }
    }
    throw OutOfDomain("apply_bijection: unhandled id");
}

inline CombObject inverse_bijection(BijectionId id, const FamilyParams& params, const CombObject& y) {
    FamilySpec src = bijection_source(id, params);
    switch (id) {
    case BijectionId::NCM_TO_DYCK:
        return {src, matching_from_starters(as_word(y).bits)};
    case BijectionId::BW_TO_NCM_SYM:
        return {src, Word{sym_ncm_to_word(as_matching(y), static_cast<int>(params.s))}};
    case BijectionId::SYT_TO_NCM:
        return {src, Word{starters_of_matching(as_matching(y))}};
    case BijectionId::SYT_TO_DYCK:
        return {src, as_word(y)};
    case BijectionId::NCP_TO_NCM:
        return {src, ncm_to_ncp(as_matching(y))};
    case BijectionId::NCP_TO_DYCK:
        return {src, dyck_to_ncp(as_word(y).bits)};
    case BijectionId::DYCK_TO_NCC:
        return {src, Word{ncc_to_dyck(as_config(y))}};
    case BijectionId::SSYT_TO_NCP:
        return {src, ncp_to_ssyt(as_partition(y), static_cast<int>(params.n))};
    case BijectionId::PHI_ROOT_IDEAL: {
        Bits w = as_word(y).bits;
        long n = params.n;
        while (std::count(w.begin(), w.end(), 1) < n) w = phi_inv_step(w);
        return {src, Word{w}};
    }
    }
    throw OutOfDomain("inverse_bijection: unhandled id");
}

inline std::string bijection_name(BijectionId id) {
    switch (id) {
    case BijectionId::NCM_TO_DYCK: return "NCM_TO_DYCK";
    case BijectionId::BW_TO_NCM_SYM: return "BW_TO_NCM_SYM";
    case BijectionId::SYT_TO_NCM: return "SYT_TO_NCM";
    case BijectionId::SYT_TO_DYCK: return "SYT_TO_DYCK";
    case BijectionId::NCP_TO_NCM: return "NCP_TO_NCM";
    case BijectionId::NCP_TO_DYCK: return "NCP_TO_DYCK";
    case BijectionId::DYCK_TO_NCC: return "DYCK_TO_NCC";
    case BijectionId::SSYT_TO_NCP: return "SSYT_TO_NCP";
    case BijectionId::PHI_ROOT_IDEAL: return "PHI_ROOT_IDEAL";
    }
    return "?";
}

inline BijectionId bijection_from_name(const std::string& s) {
    static const std::map<std::string, BijectionId> table = {
        {"NCM_TO_DYCK", BijectionId::NCM_TO_DYCK},
        {"BW_TO_NCM_SYM", BijectionId::BW_TO_NCM_SYM},
        {"SYT_TO_NCM", BijectionId::SYT_TO_NCM},
        {"SYT_TO_DYCK", BijectionId::SYT_TO_DYCK},
        {"NCP_TO_NCM", BijectionId::NCP_TO_NCM},
        {"NCP_TO_DYCK", BijectionId::NCP_TO_DYCK},
        {"DYCK_TO_NCC", BijectionId::DYCK_TO_NCC},
        {"SSYT_TO_NCP", BijectionId::SSYT_TO_NCP},
        {"PHI_ROOT_IDEAL", BijectionId::PHI_ROOT_IDEAL},
    };
    auto it = table.find(s);
    if (it == table.end()) throw OutOfDomain("unknown bijection: " + s);
    return it->second;
}

} // namespace cspkit
