#include "toric_volume/serialization.hpp"

#include "toric_volume/errors.hpp"

#include <fstream>
#include <limits>

namespace toric {

std::vector<LatticeVector> parse_weight_pairs(std::string_view text)
{
    std::vector<LatticeVector> pairs;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto item = text.substr(start, end - start);
        auto colon = item.find(':');
        if (colon == std::string_view::npos)
            throw ValidationError("weight pair '" + std::string(item) + "' is not of the form p:q");
        pairs.push_back({parse_integer(item.substr(0, colon)), parse_integer(item.substr(colon + 1))});
        start = end + 1;
    }
    return pairs;
}

std::string format_weights(const WeightSequence& ws)
{
    std::string out;
    for (const auto& v : ws.pairs()) {
        if (!out.empty())
            out += ",";
        out += to_string(v.p) + ":" + to_string(v.q);
    }
    return out;
}

Json integer_to_json(const Integer& value)
{
    if (value.fits_slong_p())
        return Json(value.get_si());
    return Json(to_string(value));
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<long>());
    if (j.is_string())
        return parse_integer(j.get<std::string>());
    throw ValidationError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw ValidationError("expected an exact rational string \"num/den\", got " + j.dump());
}

Json weights_to_json(const WeightSequence& ws)
{
    Json arr = Json::array();
    for (const auto& v : ws.pairs())
        arr.push_back(Json::array({integer_to_json(v.p), integer_to_json(v.q)}));
    return arr;
}

std::vector<LatticeVector> weight_pairs_from_json(const Json& j)
{
    if (!j.is_array())
        throw ValidationError("weights must be a JSON array of [p, q] pairs");
    std::vector<LatticeVector> pairs;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            throw ValidationError("weight entry " + item.dump() + " is not a [p, q] pair");
        pairs.push_back({integer_from_json(item[0]), integer_from_json(item[1])});
    }
    return pairs;
}

Json germ_to_json(const GermParams& germ)
{
    return Json{{"b1_sq", to_string(germ.b1_sq)},
        {"l", integer_to_json(germ.l)},
        {"vol_x", to_string(germ.vol_x)},
        {"kb_dot_b2", to_string(germ.kb_dot_b2)},
        {"label", germ.label}};
}

RawGermParams raw_germ_from_json(const Json& j)
{
    if (!j.is_object())
        throw ValidationError("germ must be a JSON object");
    for (const char* key : {"b1_sq", "l", "vol_x", "kb_dot_b2"})
        if (!j.contains(key))
            throw ValidationError(std::string("germ is missing field '") + key + "'");
    RawGermParams raw;
    raw.b1_sq = rational_from_json(j.at("b1_sq"));
    raw.l = integer_from_json(j.at("l"));
    raw.vol_x = rational_from_json(j.at("vol_x"));
    raw.kb_dot_b2 = rational_from_json(j.at("kb_dot_b2"));
    if (j.contains("label"))
        raw.label = j.at("label").get<std::string>();
    return raw;
}

GermParams germ_from_json(const Json& j)
{
    return validate_germ(raw_germ_from_json(j));
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

GermParams load_germ_file(const std::filesystem::path& path)
{
    return germ_from_json(read_json_file(path));
}

Json matrix_to_json(const IntersectionMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (!m.defined(i, j)) {
                row.push_back("undefined");
                continue;
            }
            const auto& v = m.at(i, j);
            row.push_back(Json{{"num", to_string(v.get_num())}, {"den", to_string(v.get_den())}});
        }
        rows.push_back(std::move(row));
    }
    return Json{{"n", m.n()}, {"entries", std::move(rows)}};
}

Json volume_report_to_json(const VolumeReport& report)
{
    return Json{{"n", report.n},
        {"weights", weights_to_json(report.weights)},
        {"f_value", to_string(report.f_value)},
        {"vol_z", to_string(report.vol_z)},
        {"vol_x", to_string(report.vol_x)}};
}

Json factorization_to_json(const std::vector<FactorizationStep>& steps)
{
    Json arr = Json::array();
    for (const auto& s : steps) {
        arr.push_back(Json{{"index", s.index},
            {"singularity", Json{{"r", integer_to_json(s.singularity.r)}, {"a", integer_to_json(s.singularity.a)}}},
            {"c", integer_to_json(s.c)},
            {"weights", Json::array({to_string(s.weights.first), to_string(s.weights.second)})},
            {"normalized_weights",
                Json::array({integer_to_json(s.normalized_weights.first), integer_to_json(s.normalized_weights.second)})},
            {"multiplicity", integer_to_json(s.multiplicity)}});
    }
    return arr;
}

namespace {

Json level_to_json(const AccumulationCertificate& cert, std::size_t i)
{
    const auto& lvl = cert.levels[i];
    Json increment;
    if (lvl.level == 1)
        increment = Json{{"form", "f1"}, {"b1_sq", to_string(lvl.base_b1_sq)}};
    else
        increment = Json{{"form", "linear"},
            {"c", to_string(lvl.increment_coeff)},
            {"a", to_string(lvl.increment_a)},
            {"b", to_string(lvl.increment_b)}};
    Json out{{"level", lvl.level},
        {"limit_weights", weights_to_json(lvl.limit_weights)},
        {"limit_value", to_string(lvl.limit_value)},
        {"varying_p", to_string(lvl.varying_p)},
        {"m_start", to_string(lvl.m_start)},
        {"m_coprime_to", to_string(lvl.m_coprime_to)},
        {"increment", std::move(increment)}};
    out["child"] = i + 1 < cert.levels.size() ? level_to_json(cert, i + 1) : Json(nullptr);
    return out;
}

CertificateLevel level_from_json(const Json& j)
{
    CertificateLevel lvl;
    lvl.level = j.at("level").get<std::size_t>();
    lvl.limit_weights = WeightSequence(weight_pairs_from_json(j.at("limit_weights")));
    lvl.limit_value = rational_from_json(j.at("limit_value"));
    lvl.varying_p = integer_from_json(j.at("varying_p"));
    lvl.m_start = integer_from_json(j.at("m_start"));
    lvl.m_coprime_to = integer_from_json(j.at("m_coprime_to"));
    const auto& inc = j.at("increment");
    const auto form = inc.at("form").get<std::string>();
    if (form == "f1") {
        lvl.base_b1_sq = rational_from_json(inc.at("b1_sq"));
    } else if (form == "linear") {
        lvl.increment_coeff = rational_from_json(inc.at("c"));
        lvl.increment_a = integer_from_json(inc.at("a"));
        lvl.increment_b = integer_from_json(inc.at("b"));
    } else {
        throw ValidationError("unknown increment form '" + form + "'");
    }
    return lvl;
}

} // namespace

Json certificate_to_json(const AccumulationCertificate& cert)
{
    if (cert.levels.empty())
        throw ValidationError("certificate has no levels");
    return Json{{"germ", germ_to_json(cert.germ)}, {"certificate", level_to_json(cert, 0)}};
}

AccumulationCertificate certificate_from_json(const Json& j)
{
    try {
        AccumulationCertificate cert;
        cert.germ = germ_from_json(j.at("germ"));
        const Json* node = &j.at("certificate");
        while (node && !node->is_null()) {
            cert.levels.push_back(level_from_json(*node));
            node = node->contains("child") ? &node->at("child") : nullptr;
        }
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed certificate JSON: ") + e.what());
    }
}

} // namespace toric
