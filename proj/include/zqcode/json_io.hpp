#pragma once

#include <string>

#include <json.hpp>

#include "zqcode/minweight.hpp"
#include "zqcode/quasi.hpp"
#include "zqcode/tutte.hpp"

namespace zqcode {

using Json = nlohmann::json;

/// Coefficient arrays are strings, lowest degree first; class keys are the
/// decimal divisors of the period.
Json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

Json to_json(const QuasiPolynomial& qp);
QuasiPolynomial quasi_from_json(const Json& j);

Json to_json(const WeightQuasi& wq);
WeightQuasi weight_quasi_from_json(const Json& j);

Json to_json(const WeightDistribution& dist);
Json to_json(const TutteQuasi& tq);
TutteQuasi tutte_from_json(const Json& j);

Json to_json(const MinWeightReport& report);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// Golden fixture: a named matrix with its expected weight quasi-polynomial.
struct GoldenFixture {
    std::string name;
    IntMatrix matrix;
    WeightQuasi weight_quasi;
    std::vector<std::string> notes;
};

GoldenFixture load_golden_fixture(const std::string& path);

}  // namespace zqcode
