#include "zqcode/json_io.hpp"

#include <fstream>

namespace zqcode {

Json to_json(const UniPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return coeffs;
}

UniPoly unipoly_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(parse_rational(c.get<std::string>()));
    return UniPoly(std::move(coeffs));
}

Json to_json(const QuasiPolynomial& qp) {
    Json constituents = Json::object();
    for (const auto& [m, poly] : qp.constituents) constituents[m.get_str()] = to_json(poly);
    return Json{{"period", qp.period.get_str()}, {"constituents", std::move(constituents)}};
}

QuasiPolynomial quasi_from_json(const Json& j) {
    QuasiPolynomial qp;
    qp.period = parse_bigint(j.at("period").get<std::string>());
    for (const auto& [key, value] : j.at("constituents").items())
        qp.constituents.emplace(parse_bigint(key), unipoly_from_json(value));
    return qp;
}

Json to_json(const WeightQuasi& wq) {
    Json weights = Json::array();
    for (int i = 0; i <= wq.n; ++i) weights.push_back(to_json(wq.weight_component(i)));
    return Json{{"n", wq.n},
                {"rank", wq.rank},
                {"rho0", wq.rho0.get_str()},
                {"weights", std::move(weights)}};
}

WeightQuasi weight_quasi_from_json(const Json& j) {
    WeightQuasi wq;
    wq.n = j.at("n").get<int>();
    wq.rank = j.at("rank").get<int>();
    wq.rho0 = parse_bigint(j.at("rho0").get<std::string>());
    const Json& weights = j.at("weights");
    if (static_cast<int>(weights.size()) != wq.n + 1)
        throw std::invalid_argument("weight quasi-polynomial must have n+1 components");
    for (int i = 0; i <= wq.n; ++i) {
        const QuasiPolynomial qp = quasi_from_json(weights[static_cast<std::size_t>(i)]);
        if (qp.period != wq.rho0)
            throw std::invalid_argument("component period differs from rho0");
        for (const auto& [m, poly] : qp.constituents) {
            auto [it, fresh] = wq.constituents.try_emplace(m);
            if (fresh) it->second.resize(static_cast<std::size_t>(wq.n) + 1);
            it->second[static_cast<std::size_t>(i)] = poly;
        }
    }
    return wq;
}

Json to_json(const WeightDistribution& dist) {
    Json counts = Json::array();
    for (const auto& c : dist.counts) counts.push_back(c.get_str());
    return Json{{"q", dist.q.get_str()}, {"counts", std::move(counts)}};
}

Json to_json(const TutteQuasi& tq) {
    Json constituents = Json::object();
    for (const auto& [m, poly] : tq.constituents) {
        Json terms = Json::array();
        for (const auto& [key, coeff] : poly.terms())
            terms.push_back(Json::array({key.first, key.second, to_string(coeff)}));
        constituents[m.get_str()] = std::move(terms);
    }
    return Json{{"period", tq.period.get_str()}, {"constituents", std::move(constituents)}};
}

TutteQuasi tutte_from_json(const Json& j) {
    TutteQuasi tq;
    tq.period = parse_bigint(j.at("period").get<std::string>());
    for (const auto& [key, terms] : j.at("constituents").items()) {
        BiPoly poly;
        for (const auto& term : terms)
            poly.add_term(term[0].get<int>(), term[1].get<int>(),
                          parse_rational(term[2].get<std::string>()));
        tq.constituents.emplace(parse_bigint(key), std::move(poly));
    }
    return tq;
}

namespace {

Json min_weight_json(const MinWeight& w) {
    return w.is_infinite() ? Json("inf") : Json(w.value());
}

}  // namespace

Json to_json(const MinWeightReport& report) {
    Json classes = Json::array();
    for (const auto& cr : report.classes) {
        Json samples = Json::array();
        for (const auto& [q, d] : cr.samples)
            samples.push_back(Json::array({q.get_str(), min_weight_json(d)}));
        classes.push_back(Json{{"m", cr.m.get_str()},
                               {"d_prime", min_weight_json(cr.d_prime)},
                               {"stable_at_m", cr.stable_at_m},
                               {"condition", cr.condition.empty() ? Json(nullptr) : Json(cr.condition)},
                               {"witness_subset", cr.witness_columns},
                               {"d_at_m", min_weight_json(cr.d_at_m)},
                               {"samples", std::move(samples)},
                               {"part2_applies", cr.coprime_to_last_divisor},
                               {"part2_converse_counterexample", cr.sufficiency_converse_fails},
                               {"part3_divides_e1", cr.divides_first_divisor},
                               {"part3_converse_counterexample", cr.necessity_converse_fails}});
    }
    return Json{{"rho0", report.rho0.get_str()},
                {"m0", report.m0.get_str()},
                {"d_m0", min_weight_json(report.d_m0)},
                {"classes", std::move(classes)}};
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols; ++j) {
            const BigInt& v = m.at(i, j);
            if (v.fits_slong_p())
                row.push_back(v.get_si());
            else
                row.push_back(v.get_str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a nonempty array");
    IntMatrix m(static_cast<int>(j.size()), static_cast<int>(j[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != m.cols)
            throw std::invalid_argument("ragged matrix JSON");
        for (int c = 0; c < m.cols; ++c) {
            const Json& cell = row[static_cast<std::size_t>(c)];
            m.at(i, c) = cell.is_string() ? parse_bigint(cell.get<std::string>())
                                          : BigInt(cell.get<long>());
        }
    }
    return m;
}

GoldenFixture load_golden_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fixture: " + path);
    Json j = Json::parse(in);
    GoldenFixture fx;
    fx.name = j.at("name").get<std::string>();
    fx.matrix = matrix_from_json(j.at("matrix"));
    fx.weight_quasi = weight_quasi_from_json(j.at("weight_quasi"));
    if (j.contains("notes"))
        for (const auto& note : j["notes"]) fx.notes.push_back(note.get<std::string>());
    return fx;
}

}  // namespace zqcode
