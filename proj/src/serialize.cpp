#include "phasebox/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace phasebox {

Json mpoly_to_json(const MPoly& p) {
    Json arr = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json exps = Json::object();
        for (const auto& [v, e2] : m) {
            if (!p.vars()) throw std::logic_error("mpoly_to_json: missing registry");
            exps[p.vars()->name(VarId{v})] = e2;
        }
        arr.push_back(Json{{"exps", std::move(exps)},
                           {"num", c.get_num().get_str()},
                           {"den", c.get_den().get_str()}});
    }
    return arr;
}

MPoly mpoly_from_json(const Json& j, VarTable& vt) {
    if (!j.is_array()) throw std::invalid_argument("mpoly_from_json: expected array");
    MPoly p = MPoly::zero_over(&vt);
    for (const auto& term : j) {
        Monomial m;
        for (const auto& [name, e2] : term.at("exps").items())
            m.emplace_back(vt.intern(name).index, e2.get<long>());
        std::sort(m.begin(), m.end());
        p.add_term(std::move(m),
                   rat_from_strings(term.at("num").get<std::string>(),
                                    term.at("den").get<std::string>()));
    }
    return p;
}

Json series_to_json(const Series& s) {
    if (s.bound2() % 2 != 0) throw std::logic_error("series_to_json: odd bound");
    return Json{{"bound", s.bound2() / 2}, {"terms", mpoly_to_json(s.poly())}};
}

Series series_from_json(const Json& j, VarTable& vt) {
    return Series(mpoly_from_json(j.at("terms"), vt), j.at("bound").get<long>());
}

Json partition_to_json(const Partition& p) {
    Json arr = Json::array();
    for (int x : p.parts()) arr.push_back(x);
    return arr;
}

Partition partition_from_json(const Json& j) {
    return Partition(j.get<std::vector<int>>());
}

Json plane_partition_to_json(const PlanePartition& p) {
    Json arr = Json::array();
    for (const auto& row : p.rows()) {
        Json r = Json::array();
        for (int x : row) r.push_back(x);
        arr.push_back(std::move(r));
    }
    return arr;
}

PlanePartition plane_partition_from_json(const Json& j) {
    return PlanePartition(j.get<std::vector<std::vector<int>>>());
}

Json uc_plane_partition_to_json(const UCPlanePartition& p) {
    return Json{{"first", plane_partition_to_json(p.first)},
                {"second", plane_partition_to_json(p.second)}};
}

UCPlanePartition uc_plane_partition_from_json(const Json& j) {
    return UCPlanePartition{plane_partition_from_json(j.at("first")),
                            plane_partition_from_json(j.at("second"))};
}

Json phase_vector_to_json(const PhaseVector& v) {
    Json terms = Json::array();
    for (const auto& [occ, c] : v.terms())
        terms.push_back(Json{{"n", occ.n}, {"coeff", mpoly_to_json(c)}});
    return Json{{"terms", std::move(terms)}};
}

PhaseVector phase_vector_from_json(const Json& j, VarTable& vt) {
    PhaseVector v;
    for (const auto& term : j.at("terms"))
        v.add(OccupationVector{term.at("n").get<std::vector<int>>()},
              mpoly_from_json(term.at("coeff"), vt));
    return v;
}

namespace {

Json sector_to_json(const SectorState& s) {
    return Json{{"charge", s.charge}, {"partition", partition_to_json(s.lambda)}};
}

SectorState sector_from_json(const Json& j) {
    return SectorState{j.at("charge").get<int>(), partition_from_json(j.at("partition"))};
}

}  // namespace

Json fock_state_to_json(const FockState& s) {
    return Json{{"psi", sector_to_json(s.psi)}, {"phi", sector_to_json(s.phi)}};
}

FockState fock_state_from_json(const Json& j) {
    return FockState{sector_from_json(j.at("psi")), sector_from_json(j.at("phi"))};
}

Json fock_vector_to_json(const FockVector& v) {
    Json terms = Json::array();
    for (const auto& [s, c] : v.terms())
        terms.push_back(Json{{"state", fock_state_to_json(s)},
                             {"coeff", series_to_json(Series::with_bound2(c, v.bound2()))}});
    return Json{{"terms", std::move(terms)}};
}

Json identity_report_to_json(const IdentityReport& r) {
    Json j{{"name", r.name}, {"equal", r.equal}};
    if (r.discrepancy) {
        j["discrepancy"] = Json{{"monomial", r.discrepancy->monomial},
                                {"lhs", rat_str(r.discrepancy->lhs)},
                                {"rhs", rat_str(r.discrepancy->rhs)}};
    } else {
        j["discrepancy"] = nullptr;
    }
    return j;
}

}  // namespace phasebox
