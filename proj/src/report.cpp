#include "conifold/report.hpp"

#include "conifold/errors.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace conifold {

namespace {

Json big_int_json(const BigInt& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

Json exponent_json(const Exponent& n)
{
    Json arr = Json::array();
    for (int x : n)
        arr.push_back(x);
    return arr;
}

Exponent exponent_from_json(const Json& arr, int dimension, const char* what)
{
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(dimension))
        throw Error(ErrorCode::InvalidInput, std::string(what) + " must be an array of length d");
    Exponent n;
    for (const auto& x : arr) {
        if (!x.is_number_integer())
            throw Error(ErrorCode::InvalidInput, std::string(what) + " entries must be integers");
        const auto v = x.get<long long>();
        if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
            throw Error(ErrorCode::InvalidInput, std::string(what) + " entry out of range");
        n.push_back(static_cast<int>(v));
    }
    return n;
}

int dimension_from_json(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("d") || !doc["d"].is_number_integer())
        throw Error(ErrorCode::InvalidInput, "document needs an integer field \"d\"");
    const auto d = doc["d"].get<long long>();
    if (d < 1 || d > 1000)
        throw Error(ErrorCode::InvalidInput, "\"d\" must be a positive dimension");
    return static_cast<int>(d);
}

Json double_array(std::span<const double> values)
{
    Json arr = Json::array();
    for (double v : values)
        arr.push_back(v);
    return arr;
}

}  // namespace

Json polynomial_to_json(const LaurentPolynomial& w)
{
    Json terms = Json::array();
    for (const auto& [n, a] : w.terms())
        terms.push_back(Json{{"e", exponent_json(n)}, {"c", to_string(a)}});
    return Json{{"d", w.dimension()}, {"terms", std::move(terms)}};
}

LaurentPolynomial polynomial_from_json(const Json& doc)
{
    const int d = dimension_from_json(doc);
    if (!doc.contains("terms") || !doc["terms"].is_array())
        throw Error(ErrorCode::InvalidInput, "polynomial document needs a \"terms\" array");
    std::vector<std::pair<Exponent, Rational>> terms;
    for (const auto& term : doc["terms"]) {
        if (!term.is_object() || !term.contains("e") || !term.contains("c"))
            throw Error(ErrorCode::InvalidInput, "each term needs \"e\" and \"c\"");
        Rational c;
        if (term["c"].is_string())
            c = parse_rational(term["c"].get<std::string>());
        else if (term["c"].is_number_integer())
            c = Rational(term["c"].get<long>());
        else
            throw Error(ErrorCode::InvalidInput, "coefficient must be a rational string");
        terms.emplace_back(exponent_from_json(term["e"], d, "exponent"), std::move(c));
    }
    if (terms.empty())
        throw Error(ErrorCode::InvalidInput, "polynomial has no terms");
    return LaurentPolynomial::from_terms(d, terms);
}

Json fan_to_json(const FanInput& fan)
{
    Json rays = Json::array();
    for (const auto& r : fan.rays)
        rays.push_back(exponent_json(r));
    return Json{{"d", fan.dimension}, {"rays", std::move(rays)}};
}

FanInput fan_from_json(const Json& doc)
{
    FanInput fan;
    fan.dimension = dimension_from_json(doc);
    if (!doc.contains("rays") || !doc["rays"].is_array())
        throw Error(ErrorCode::InvalidInput, "fan document needs a \"rays\" array");
    for (const auto& r : doc["rays"])
        fan.rays.push_back(exponent_from_json(r, fan.dimension, "ray"));
    return fan;
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FanInput load_fan_file(const std::filesystem::path& path)
{
    Json doc;
    try {
        doc = Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, path.string() + ": " + e.what());
    }
    return fan_from_json(doc);
}

Json to_json(const SupportValidation& v)
{
    Json doc;
    doc["dimension"] = v.dimension;
    doc["polytope_dim"] = v.polytope_dim;
    doc["linear_rank"] = v.linear_rank;
    doc["origin_interior"] = v.origin_interior;
    doc["interior_margin"] = v.interior_margin ? Json(to_string(*v.interior_margin)) : Json(nullptr);
    if (v.origin_interior) {
        Json cert = Json::array();
        for (const auto& [n, lambda] : v.certificate)
            cert.push_back(Json{{"e", exponent_json(n)}, {"lambda", to_string(lambda)}});
        doc["certificate"] = std::move(cert);
        const NonvanishingCertificate nv = nonvanishing_certificate(v);
        Json weights = Json::array();
        for (const auto& [n, m] : nv.weights)
            weights.push_back(Json{{"e", exponent_json(n)}, {"m", big_int_json(m)}});
        doc["nonvanishing"] = Json{{"weights", std::move(weights)}, {"period", nv.period}};
    }
    if (v.failure_direction) {
        Json dir = Json::array();
        for (const auto& x : *v.failure_direction)
            dir.push_back(big_int_json(x));
        doc["failure_direction"] = std::move(dir);
    }
    return doc;
}

Json to_json(const std::vector<IterationRecord>& trace)
{
    Json arr = Json::array();
    for (const auto& rec : trace)
        arr.push_back(Json{{"value", rec.value},
                           {"gradient_norm", rec.gradient_norm},
                           {"step", rec.step},
                           {"decrease", rec.decrease}});
    return arr;
}

Json to_json(const ConifoldReport& r)
{
    Json doc;
    doc["point_log"] = double_array(r.point_log.coords());
    doc["point_mult"] = double_array(r.point_mult);
    doc["critical_value"] = r.critical_value;
    doc["hessian_spectrum"] = double_array(r.hessian_spectrum);
    doc["morse"] = true;
    doc["iterations"] = r.iterations;
    doc["final_gradient_norm"] = r.final_gradient_norm;
    doc["trace"] = to_json(r.trace);
    return doc;
}

Json to_json(const MomentSequence& seq)
{
    Json values = Json::array();
    for (const auto& v : seq.values)
        values.push_back(to_string(v));
    Json doc;
    doc["kmax"] = seq.kmax;
    doc["period"] = seq.period ? Json(*seq.period) : Json(nullptr);
    doc["nonzero_count"] = seq.support.size();
    doc["values"] = std::move(values);
    return doc;
}

Json to_json(const DkReport& r)
{
    Json doc;
    doc["kmax"] = r.kmax;
    doc["critical_value"] = r.critical_value;
    doc["growth_estimate"] = r.estimate;
    doc["relative_gap"] = r.relative_gap;
    doc["radius"] = r.radius;
    return doc;
}

Json to_json(const ToricReport& r)
{
    Json doc;
    doc["critical_value"] = r.critical_value;
    doc["dimension"] = r.dimension;
    doc["ray_count"] = r.ray_count;
    doc["b2"] = r.b2;
    doc["upper_bound"] = r.upper_bound;
    doc["lower_bound_conjecture"] = r.lower_bound_conjecture;
    doc["upper_ok"] = r.upper_ok;
    doc["lower_ok"] = r.lower_ok;
    doc["rays_sum_to_zero"] = r.rays_sum_to_zero;
    doc["fan_checks"] = "primitive, distinct, spanning; smoothness and completeness not verified";
    doc["conifold"] = to_json(r.conifold);
    return doc;
}

}  // namespace conifold
