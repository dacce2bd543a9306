#include "etaq/json_io.hpp"

#include "etaq/parse.hpp"

namespace etaq {

namespace {

Json upoly_json(const UPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p) arr.push_back(c.to_string());
    return arr;
}

Json scalar_pair(const Scalar& a, const Scalar& b) {
    return Json::array({a.to_string(), b.to_string()});
}

} // namespace

Json to_json(const BiForm& h) {
    Json rows = Json::array();
    for (int i = h.deg_x(); i >= 0; --i) {
        Json row = Json::array();
        for (int j = h.deg_y(); j >= 0; --j) row.push_back(h.coeff(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return Json{{"field", h.field().name()},
                {"bidegree", Json::array({h.deg_x(), h.deg_y()})},
                {"coeffs", std::move(rows)},
                {"expression", to_expression(h)}};
}

BiForm biform_from_json(const Json& j) {
    const FieldSpec& f = FieldSpec::parse(j.at("field").get<std::string>());
    const auto bd = j.at("bidegree");
    const int d1 = bd.at(0).get<int>();
    const int d2 = bd.at(1).get<int>();
    if (d1 < 0 || d2 < 0) fail(ErrorKind::ParseError, "negative bidegree in JSON form");
    const auto& rows = j.at("coeffs");
    if (static_cast<int>(rows.size()) != d1 + 1)
        fail(ErrorKind::ParseError, "coefficient row count does not match the bidegree");
    BiForm h(f, d1, d2);
    for (int r = 0; r <= d1; ++r) {
        const auto& row = rows.at(static_cast<std::size_t>(r));
        if (static_cast<int>(row.size()) != d2 + 1)
            fail(ErrorKind::ParseError, "coefficient column count does not match the bidegree");
        for (int c = 0; c <= d2; ++c)
            h.set_coeff(d1 - r, d2 - c,
                        parse_scalar(row.at(static_cast<std::size_t>(c)).get<std::string>(), f));
    }
    return h;
}

Json to_json(const SingularWitness& w) {
    Json j{{"chart", Json::array({w.chart_u, w.chart_v})},
           {"via_common_factor", w.via_common_factor}};
    if (w.is_point()) {
        const auto& p = w.point();
        j["type"] = "point";
        j["x"] = scalar_pair(p.x0, p.x1);
        j["y"] = scalar_pair(p.y0, p.y1);
    } else {
        const auto& t = w.triangular();
        j["type"] = "triangular";
        j["q"] = upoly_json(t.q);
        Json r = Json::array();
        for (const auto& c : t.r) r.push_back(upoly_json(c));
        j["r"] = std::move(r);
        j["shear"] = scalar_pair(t.shear_a, t.shear_b);
    }
    return j;
}

Json to_json(const SmoothnessReport& rep) {
    Json j{{"verdict", rep.verdict == SmoothVerdict::Smooth
                           ? "smooth"
                           : (rep.verdict == SmoothVerdict::Singular ? "singular" : "unchecked")}};
    Json ws = Json::array();
    for (const auto& w : rep.witnesses) ws.push_back(to_json(w));
    j["witnesses"] = std::move(ws);
    return j;
}

Json to_json(const GridReport& rep) {
    Json j{{"k", rep.k}, {"rank", rep.rank}, {"is_grid", rep.is_grid}};
    if (rep.factorization) {
        const auto& f = *rep.factorization;
        j["factorization"] = Json{{"f1", upoly_json(f.f1)},
                                  {"g2", upoly_json(f.g2)},
                                  {"g1", upoly_json(f.g1)},
                                  {"f2", upoly_json(f.f2)}};
    }
    return j;
}

Json to_json(const TorsionReport& rep) {
    Json dims = Json::array();
    for (const auto& [n, d] : rep.kernel_dims) dims.push_back(Json::array({n, d}));
    Json j{{"k", rep.k},
           {"n_max", rep.n_max},
           {"kernel_dims", std::move(dims)},
           {"lower_bound_note", rep.lower_bound_note}};
    if (rep.order) j["order"] = *rep.order;
    return j;
}

Json to_json(const GrilledReport& rep) {
    Json j{{"n", rep.n},
           {"dim_w1", rep.dim_w1},
           {"dim_w2", rep.dim_w2},
           {"dim_intersection", rep.dim_intersection},
           {"ambient", rep.ambient},
           {"clearing_exponent", rep.clearing_exponent},
           {"is_grilled", rep.is_grilled}};
    if (rep.certificate)
        j["certificate"] =
            Json{{"f", to_json(rep.certificate->first)}, {"c", to_json(rep.certificate->second)}};
    return j;
}

Json to_json(const FiniteGenerationVerdict& v) {
    const char* kind = "not_applicable";
    if (v.kind == FiniteGenerationVerdict::Kind::FinitelyGenerated) kind = "finitely_generated";
    if (v.kind == FiniteGenerationVerdict::Kind::OpenUpTo) kind = "open_up_to";
    Json j{{"kind", kind}, {"n_max", v.n_max}, {"note", v.note}};
    if (v.order) j["order"] = *v.order;
    return j;
}

Json to_json(const SymProdTable& t) {
    Json m = Json::array();
    for (const auto& row : t.gamma_matrix) m.push_back(Json::array({row[0], row[1], row[2]}));
    return Json{{"k", t.k},
                {"genus", t.g},
                {"K2", t.K2},
                {"K_Delta", t.KDelta},
                {"Delta2", t.Delta2},
                {"gamma_matrix", std::move(m)},
                {"genus_gamma", t.genus_gamma},
                {"kernel_vector", Json::array({t.kernel_vector[0], t.kernel_vector[1], t.kernel_vector[2]})},
                {"nef_ray_diag", Json::array({t.nef_ray_diag[0], t.nef_ray_diag[1]})},
                {"nef_ray_ruling", Json::array({t.nef_ray_ruling[0], t.nef_ray_ruling[1]})},
                {"checks",
                 Json{{"presentations_agree", t.presentations_agree},
                      {"kernel_annihilated", t.kernel_annihilated},
                      {"matrix_rank_two", t.matrix_rank_two},
                      {"ray_diag_orthogonal_delta", t.ray_diag_orthogonal_delta},
                      {"ray_ruling_isotropic", t.ray_ruling_isotropic},
                      {"ray_diag_self", t.ray_diag_self}}}};
}

Json to_json(const SurveyHistogram& h) {
    Json counts = Json::object();
    for (const auto& [order, count] : h.order_counts) counts[std::to_string(order)] = count;
    return Json{{"k", h.k},
                {"p", h.p},
                {"n_max", h.n_max},
                {"trials", h.trials},
                {"grid_sampler", h.grid_sampler},
                {"order_counts", std::move(counts)},
                {"singular", h.singular},
                {"order_not_found", h.order_not_found}};
}

} // namespace etaq
