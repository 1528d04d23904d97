#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "twistlab/complex.hpp"
#include "twistlab/elliptic.hpp"
#include "twistlab/lattice.hpp"
#include "twistlab/laurent.hpp"
#include "twistlab/twists.hpp"

namespace twistlab {

using Json = nlohmann::ordered_json;

Json params_to_json(const ChainParams& p);
ChainParams params_from_json(const Json& j);

/// Basis with names and degrees, the nonzero products and the trace.
Json algebra_to_json(const ZigzagAlgebra& alg);

Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);
Json laurent_to_json(const LaurentVector& v);
Json laurent_to_json(const LaurentMatrix& m);

Json lattice_to_json(const IntersectionLattice& l);
IntersectionLattice lattice_from_json(const Json& j);
Json definiteness_to_json(const Definiteness& d);
Json mat2_to_json(const Mat2& m);

Json table_to_json(const BigradedTable& t);
Json relation_report_to_json(const RelationReport& r);
Json comparison_to_json(const ComparisonReport& r);

/// Elements as [[basis name, coefficient string], ...].
template <class K>
Json element_to_json(const ZigzagAlgebra& alg, const Element<K>& e) {
    Json out = Json::array();
    for (const auto& [b, c] : e.terms())
        out.push_back(Json::array({alg.basis(b).name, to_string(c)}));
    return out;
}

template <class K>
Element<K> element_from_json(const ZigzagAlgebra& alg, const Json& j) {
    Element<K> e;
    for (const auto& t : j) {
        auto name = t.at(0).get<std::string>();
        auto b = alg.find(name);
        if (!b)
            throw std::invalid_argument("unknown basis element '" + name + "'");
        e.add(*b, parse_scalar<K>(t.at(1).get<std::string>()));
    }
    return e;
}

/// {"params", "field", "terms": [{"degree", "summands": [[v, s], ...]}],
///  "differentials": [{"degree", "entries": [[row, col, element], ...]}]}
template <class K>
Json complex_to_json(const ProjComplex<K>& m) {
    const auto& alg = m.algebra();
    Json j;
    j["params"] = params_to_json(alg.params());
    j["field"] = field_name<K>();
    Json terms = Json::array();
    for (const auto& [t, sums] : m.terms()) {
        Json s = Json::array();
        for (const auto& x : sums)
            s.push_back(Json::array({x.vertex, x.shift}));
        terms.push_back({{"degree", t}, {"summands", s}});
    }
    j["terms"] = terms;
    Json diffs = Json::array();
    for (const auto& [t, d] : m.differentials()) {
        Json entries = Json::array();
        for (const auto& [rc, e] : d.entries)
            entries.push_back(Json::array({rc.first, rc.second, element_to_json(alg, e)}));
        diffs.push_back({{"degree", t}, {"entries", entries}});
    }
    j["differentials"] = diffs;
    return j;
}

template <class K>
ProjComplex<K> complex_from_json(const Json& j, AlgebraPtr alg = nullptr) {
    auto params = params_from_json(j.at("params"));
    if (!alg)
        alg = make_algebra(params);
    else if (!(alg->params() == params))
        throw std::invalid_argument("complex JSON was written for a different chain");
    if (j.contains("field") && j.at("field").get<std::string>() != field_name<K>())
        throw std::invalid_argument("complex JSON field " + j.at("field").get<std::string>() + " does not match " +
                                    field_name<K>());
    ProjComplex<K> m(alg);
    for (const auto& t : j.at("terms")) {
        std::vector<Summand> s;
        for (const auto& x : t.at("summands"))
            s.push_back({x.at(0).get<int>(), x.at(1).get<int>()});
        m.set_term(t.at("degree").get<int>(), std::move(s));
    }
    for (const auto& d : j.at("differentials")) {
        int t = d.at("degree").get<int>();
        for (const auto& e : d.at("entries"))
            m.set_entry(t, e.at(0).get<int>(), e.at(1).get<int>(), element_from_json<K>(*alg, e.at(2)));
    }
    m.validate();
    return m;
}

} // namespace twistlab
