#include "twistlab/serialize.hpp"

namespace twistlab {

namespace {

const char* kind_name(BasisKind k) {
    switch (k) {
    case BasisKind::Idempotent: return "idempotent";
    case BasisKind::Forward: return "forward";
    case BasisKind::Backward: return "backward";
    case BasisKind::Loop: return "loop";
    }
    return "?";
}

Json int_matrix(const std::vector<std::vector<int>>& m) {
    Json out = Json::array();
    for (const auto& row : m)
        out.push_back(row);
    return out;
}

} // namespace

Json params_to_json(const ChainParams& p) {
    return {{"n", p.n}, {"N", p.N}, {"edge_degrees", p.edge_degrees}};
}

ChainParams params_from_json(const Json& j) {
    ChainParams p;
    p.n = j.at("n").get<int>();
    p.N = j.at("N").get<int>();
    p.edge_degrees = j.at("edge_degrees").get<std::vector<int>>();
    p.validate();
    return p;
}

Json algebra_to_json(const ZigzagAlgebra& alg) {
    Json j;
    j["params"] = params_to_json(alg.params());
    j["dimension"] = alg.dimension();
    Json basis = Json::array();
    for (const auto& b : alg.basis())
        basis.push_back({{"name", b.name},
                         {"kind", kind_name(b.kind)},
                         {"source", b.source},
                         {"target", b.target},
                         {"degree", b.degree}});
    j["basis"] = basis;
    Json products = Json::array();
    for (int x = 0; x < alg.dimension(); ++x)
        for (int y = 0; y < alg.dimension(); ++y)
            if (auto p = alg.product(x, y))
                products.push_back(Json::array({alg.basis(x).name, alg.basis(y).name, alg.basis(*p).name}));
    j["products"] = products;
    Json tr = Json::object();
    for (int b = 0; b < alg.dimension(); ++b)
        if (alg.trace_of(b))
            tr[alg.basis(b).name] = alg.trace_of(b);
    j["trace"] = tr;
    return j;
}

Json laurent_to_json(const LaurentPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.coefficients())
        out.push_back(Json::array({e, c}));
    return out;
}

LaurentPoly laurent_from_json(const Json& j) {
    LaurentPoly p;
    for (const auto& t : j)
        p.add(t.at(0).get<int>(), t.at(1).get<long long>());
    return p;
}

Json laurent_to_json(const LaurentVector& v) {
    Json out = Json::array();
    for (const auto& p : v)
        out.push_back(laurent_to_json(p));
    return out;
}

Json laurent_to_json(const LaurentMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m)
        out.push_back(laurent_to_json(row));
    return out;
}

Json lattice_to_json(const IntersectionLattice& l) { return {{"rank", l.rank()}, {"form", l.form}}; }

IntersectionLattice lattice_from_json(const Json& j) {
    IntersectionLattice l{j.at("form").get<IntMatrix>()};
    l.validate();
    return l;
}

Json definiteness_to_json(const Definiteness& d) {
    return {{"verdict", to_string(d.kind)},
            {"signature", Json::array({d.positive, d.negative, d.kernel})},
            {"kernel_rank", d.kernel}};
}

Json mat2_to_json(const Mat2& m) {
    return Json::array({Json::array({m.a[0][0], m.a[0][1]}), Json::array({m.a[1][0], m.a[1][1]})});
}

Json table_to_json(const BigradedTable& t) {
    Json out = Json::array();
    for (const auto& [k, v] : t)
        out.push_back(Json::array({k.first, k.second, v}));
    return out;
}

Json relation_report_to_json(const RelationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"relation", c.relation},
                          {"lhs", to_string(c.lhs)},
                          {"rhs", to_string(c.rhs)},
                          {"object", c.object},
                          {"passed", c.passed},
                          {"detail", c.detail}});
    return {{"all_passed", r.all_passed()}, {"checks", checks}};
}

Json comparison_to_json(const ComparisonReport& r) {
    Json j;
    j["verdict"] = r.verdict == Verdict::Distinct ? "distinct" : "indistinguishable_on_objects";
    if (r.witness)
        j["witness"] = {{"object", r.witness->vertex}, {"invariant", r.witness->invariant}};
    else
        j["witness"] = nullptr;
    j["isomorphic_on_vertex"] = r.isomorphic_on_vertex;
    j["hom_matrix_w1"] = int_matrix(r.hom_matrix_w1);
    j["hom_matrix_w2"] = int_matrix(r.hom_matrix_w2);
    return j;
}

} // namespace twistlab
