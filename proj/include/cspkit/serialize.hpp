#pragma once

/*
  JSON wire formats (schema 1).  Polynomials serialize as arrays of
  decimal-string coefficients, lowest degree first.  Matchings serialize
  as partner arrays, partitions as block lists, triangulations as
  diagonal lists, tableaux as row lists, and path-like objects as 0/1
  words.  Wall-time lives in a separate "meta" block so that data rows
  are byte-deterministic.
*/

#include "cspkit/csp.hpp"

#include <json.hpp>

namespace cspkit {

using json = nlohmann::json;

inline json params_to_json(const FamilyParams& p) {
    return json{{"n", p.n}, {"s", p.s}, {"k", p.k}, {"e", p.e}, {"l", p.l}, {"r", p.r}};
}

inline json params_to_json(const TripleParams& p) {
    return json{{"n", p.n}, {"k", p.k}, {"e", p.e}, {"l", p.l}, {"r", p.r}};
}

inline json poly_to_json(const IntPoly& f) {
    json a = json::array();
    for (const auto& s : f.coeff_strings()) a.push_back(s);
    return a;
}

inline json object_to_json(const CombObject& x) {
    json j;
    j["schema"] = 1;
    j["family"] = family_name(x.spec.id);
    j["params"] = params_to_json(x.spec.p);
    switch (x.spec.id) {
    case FamilyId::SYT2:
    case FamilyId::SYT_CDES:
    case FamilyId::SKEW_SYT: {
        const Bits& w = as_word(x).bits;
        std::vector<int> top, bottom;
        for (int i = 1; i <= static_cast<int>(w.size()); ++i)
            (w[static_cast<std::size_t>(i) - 1] == 0 ? top : bottom).push_back(i);
        j["rows"] = json::array({top, bottom});
        break;
    }
    case FamilyId::BW: case FamilyId::BW_CDES: case FamilyId::PATHS: case FamilyId::PATHS_S:
    case FamilyId::DYCK: case FamilyId::OI:
        j["word"] = as_word(x).bits;
        break;
    case FamilyId::NCM: case FamilyId::NCM_SH: case FamilyId::NCM_EVEN:
    case FamilyId::NCMB: case FamilyId::NCMB_EVEN: case FamilyId::NCMB_EVEN_PAIR:
        j["partner"] = as_matching(x).partner;
        break;
    case FamilyId::NCP: case FamilyId::NCP_BLOCKS:
    case FamilyId::NCPB: case FamilyId::NCPB_BLOCKS: case FamilyId::NCPB_BLOCKS_PAIR:
        j["blocks"] = as_partition(x).blocks;
        break;
    case FamilyId::NCC: case FamilyId::NCC_EL: case FamilyId::NCC_K: case FamilyId::NCC_LOOPS:
    case FamilyId::NCCB: case FamilyId::NCCB_EL: case FamilyId::NCCB_K: {
        const Config& c = as_config(x);
        j["partner"] = c.partner;
        if (c.marked()) j["marked"] = json::array({c.mark.first, c.mark.second});
        else j["marked"] = nullptr;
        break;
    }
    case FamilyId::TRI: case FamilyId::TRI_EAR: case FamilyId::TRIB: {
        json ds = json::array();
        for (auto [a, b] : as_triangulation(x).diagonals) ds.push_back(json::array({a, b}));
        j["diagonals"] = ds;
        break;
    }
    case FamilyId::SSYT2COL: {
        json rows = json::array();
        for (const auto& r : as_ssyt(x).rows) rows.push_back(json::array({r[0], r[1]}));
        j["rows"] = rows;
        break;
    }
    case FamilyId::NCM_MARKED: case FamilyId::NCM_MARKED_EVEN: {
        const MarkedMatching& mm = as_marked(x);
        j["partner"] = mm.partner;
        j["marks"] = mm.marks;
        break;
    }
    }
    return j;
}

inline FamilyParams params_from_json(const json& j) {
    FamilyParams p;
    if (j.contains("n")) p.n = j["n"].get<long>();
    if (j.contains("s")) p.s = j["s"].get<long>();
    if (j.contains("k")) p.k = j["k"].get<long>();
    if (j.contains("e")) p.e = j["e"].get<long>();
    if (j.contains("l")) p.l = j["l"].get<long>();
    if (j.contains("r")) p.r = j["r"].get<long>();
    return p;
}

inline CombObject object_from_json(const json& j) {
    FamilySpec spec{family_from_name(j.at("family").get<std::string>()),
                    params_from_json(j.value("params", json::object()))};
    switch (spec.id) {
    case FamilyId::SYT2:
    case FamilyId::SYT_CDES:
    case FamilyId::SKEW_SYT: {
        auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
        if (rows.size() != 2) throw OutOfDomain("tableau needs two rows");
        Bits w(rows[0].size() + rows[1].size(), 1);
        for (int i : rows[0]) {
            if (i < 1 || i > static_cast<int>(w.size())) throw OutOfDomain("bad tableau entry");
            w[static_cast<std::size_t>(i) - 1] = 0;
        }
        return {spec, Word{w}};
    }
    case FamilyId::BW: case FamilyId::BW_CDES: case FamilyId::PATHS: case FamilyId::PATHS_S:
    case FamilyId::DYCK: case FamilyId::OI:
        return {spec, Word{j.at("word").get<Bits>()}};
    case FamilyId::NCM: case FamilyId::NCM_SH: case FamilyId::NCM_EVEN:
    case FamilyId::NCMB: case FamilyId::NCMB_EVEN: case FamilyId::NCMB_EVEN_PAIR:
        return {spec, Matching{j.at("partner").get<std::vector<int>>()}};
    case FamilyId::NCP: case FamilyId::NCP_BLOCKS:
    case FamilyId::NCPB: case FamilyId::NCPB_BLOCKS: case FamilyId::NCPB_BLOCKS_PAIR:
        return {spec, Partition{j.at("blocks").get<std::vector<std::vector<int>>>()}};
    case FamilyId::NCC: case FamilyId::NCC_EL: case FamilyId::NCC_K: case FamilyId::NCC_LOOPS:
    case FamilyId::NCCB: case FamilyId::NCCB_EL: case FamilyId::NCCB_K: {
        Config c{j.at("partner").get<std::vector<int>>()};
        if (j.contains("marked") && !j["marked"].is_null()) {
            auto m = j["marked"].get<std::vector<int>>();
            if (m.size() != 2) throw OutOfDomain("marked edge needs two endpoints");
            c.mark = {m[0], m[1]};
        }
        return {spec, c};
    }
    case FamilyId::TRI: case FamilyId::TRI_EAR: case FamilyId::TRIB: {
        Triangulation t;
        for (const auto& d : j.at("diagonals")) {
            t.diagonals.push_back({d.at(0).get<int>(), d.at(1).get<int>()});
        }
        std::sort(t.diagonals.begin(), t.diagonals.end());
        return {spec, t};
    }
    case FamilyId::SSYT2COL: {
        Ssyt2Col t;
        for (const auto& r : j.at("rows"))
            t.rows.push_back({r.at(0).get<int>(), r.at(1).get<int>()});
        return {spec, t};
    }
    case FamilyId::NCM_MARKED: case FamilyId::NCM_MARKED_EVEN: {
        MarkedMatching mm;
        mm.partner = j.at("partner").get<std::vector<int>>();
        mm.marks = j.at("marks").get<std::vector<std::vector<int>>>();
        std::sort(mm.marks.begin(), mm.marks.end());
        return {spec, mm};
    }
    }
    throw OutOfDomain("object_from_json: unhandled family");
}

inline json report_to_json(const VerificationReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back(json{{"d", row.d},
                            {"order", row.order},
                            {"fixed", row.fixed.str()},
                            {"eval", row.integral ? json(row.eval.str()) : json(nullptr)},
                            {"integral", row.integral},
                            {"ok", row.ok}});
    }
    json j{{"schema", 1},
           {"triple", r.triple_id},
           {"params", params_to_json(r.params)},
           {"order", r.group_order},
           {"rows", rows},
           {"pass", r.pass}};
    if (r.spot.ran) {
        j["spotcheck"] = json{{"j", r.spot.j},
                              {"gcd", r.spot.g},
                              {"fixed_j", r.spot.fixed_j.str()},
                              {"fixed_gcd", r.spot.fixed_g.str()},
                              {"ok", r.spot.ok}};
    }
    j["meta"] = json{{"millis", r.millis}, {"summary", r.summary}};
    return j;
}

inline std::string report_csv_header() {
    return "triple,n,k,e,l,r,order,d,row_order,fixed,eval,integral,ok,pass";
}

inline std::vector<std::string> report_to_csv(const VerificationReport& r) {
    std::vector<std::string> lines;
    for (const auto& row : r.rows) {
        std::ostringstream os;
        os << r.triple_id << ',' << r.params.n << ',' << r.params.k << ',' << r.params.e << ','
           << r.params.l << ',' << r.params.r << ',' << r.group_order << ',' << row.d << ','
           << row.order << ',' << row.fixed.str() << ','
           << (row.integral ? row.eval.str() : std::string("non-integral")) << ','
           << (row.integral ? "1" : "0") << ',' << (row.ok ? "1" : "0") << ','
           << (r.pass ? "1" : "0");
        lines.push_back(os.str());
    }
    return lines;
}

inline json distribution_to_json(const FamilySpec& spec, StatId stat, long shift,
                                 const IntPoly& poly) {
    return json{{"schema", 1},
                {"family", family_name(spec.id)},
                {"params", params_to_json(spec.p)},
                {"stat", stat_name(stat)},
                {"shift", shift},
                {"coeffs", poly_to_json(poly)}};
}

} // namespace cspkit
