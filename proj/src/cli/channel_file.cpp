#include "cli/channel_file.hpp"

#include <fstream>

#include "pbec/errors.hpp"

namespace pbec::cli {

namespace {

std::vector<std::vector<Elem>> rows_of(const nlohmann::json& j, const Field& field, std::size_t n)
{
    if (!j.is_array()) throw ParameterError("descriptor rows must be a list of lists");
    std::vector<std::vector<Elem>> rows;
    const long long p = field->order();
    for (const auto& r : j) {
        if (!r.is_array() || r.size() != n) throw ParameterError("descriptor row length differs from n");
        std::vector<Elem> row;
        for (const auto& x : r) {
            if (!x.is_number_integer()) throw ParameterError("descriptor entries must be integers");
            long long v = x.get<long long>();
            // negative integers are read modulo q in prime fields
            if (v < 0 && field->is_prime_field()) v = ((v % p) + p) % p;
            if (v < 0 || v >= p) throw ParameterError("descriptor entry outside the field");
            row.push_back(static_cast<Elem>(v));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json rows_json(const FqMatrix& m)
{
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        out.push_back(std::vector<Elem>(row.begin(), row.end()));
    }
    return out;
}

std::size_t get_size(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0) {
        throw ParameterError(std::string("channel file: missing or invalid \"") + key + "\"");
    }
    return j[key].get<std::size_t>();
}

} // namespace

ErrorSet parse_descriptor(const nlohmann::json& j, const Field& field, std::size_t n)
{
    if (!j.is_object() || j.size() != 1) throw ParameterError("descriptor must be an object with one key");
    const auto it = j.begin();
    const std::string key = it.key();
    const nlohmann::json& val = it.value();
    if (key == "ball") return ErrorSet::hamming_ball(field, n, val.get<std::size_t>());
    if (key == "box") return ErrorSet::max_norm_box(field, n, val.get<std::uint32_t>());
    if (key == "subspace") return ErrorSet::subspace(FqMatrix::from_rows(field, n, rows_of(val, field, n)));
    if (key == "explicit") return ErrorSet::explicit_set(field, n, rows_of(val, field, n));
    throw ParameterError("unknown descriptor kind \"" + key + "\"");
}

nlohmann::json descriptor_json(const ErrorSet& s)
{
    switch (s.kind()) {
    case ErrorSet::Kind::HammingBall: return {{"ball", s.radius()}};
    case ErrorSet::Kind::MaxNormBox: return {{"box", s.half_width()}};
    case ErrorSet::Kind::Subspace: return {{"subspace", rows_json(s.basis())}};
    case ErrorSet::Kind::Explicit: return {{"explicit", s.elements()}};
    }
    return {};
}

PbeChannel parse_channel(const nlohmann::json& j, std::uint64_t budget)
{
    if (!j.is_object()) throw ParameterError("channel file: top level must be an object");
    const Field f = field_of_order(static_cast<std::uint32_t>(get_size(j, "q")));
    const std::size_t n = get_size(j, "n"), m = get_size(j, "m"), w = get_size(j, "w");
    if (!j.contains("E1") || !j.contains("E2")) throw ParameterError("channel file: E1 and E2 are required");
    return PbeChannel(m, parse_descriptor(j["E1"], f, n), parse_descriptor(j["E2"], f, n), w, budget);
}

nlohmann::json channel_json(const PbeChannel& ch)
{
    return {{"q", ch.field()->order()}, {"n", ch.n()}, {"m", ch.m()}, {"w", ch.w()},
            {"E1", descriptor_json(ch.e1())}, {"E2", descriptor_json(ch.e2())}};
}

nlohmann::json gcc_json(const GccCode& code)
{
    const GccSpec& s = code.spec();
    nlohmann::json levels = nlohmann::json::array();
    for (std::size_t j = 0; j < s.levels(); ++j) {
        levels.push_back({{"inner", rows_json(s.inner.codes[j].generator())},
                          {"degree", s.inner.gap(j)},
                          {"outer", rows_json(s.outer[j].generator())}});
    }
    return {{"q", code.code().field()->order()}, {"n", code.n()}, {"m", code.m()}, {"levels", levels}};
}

GccSpec parse_gcc(const nlohmann::json& j)
{
    const Field f = field_of_order(static_cast<std::uint32_t>(get_size(j, "q")));
    const std::size_t n = get_size(j, "n"), m = get_size(j, "m");
    if (!j.contains("levels") || !j["levels"].is_array() || j["levels"].empty()) throw ParameterError("gcc file: missing levels");
    std::vector<LinearCode> inner;
    std::vector<LinearCode> outer;
    for (const auto& lv : j["levels"]) {
        inner.push_back(LinearCode::from_generators(f, n, rows_of(lv.at("inner"), f, n)));
        const Field ext = FieldSpec::extension(f, lv.at("degree").get<std::uint32_t>());
        outer.push_back(LinearCode::from_generators(ext, m, rows_of(lv.at("outer"), ext, m)));
    }
    GccSpec spec;
    spec.inner = chain_make(std::move(inner));
    spec.outer = std::move(outer);
    return spec;
}

nlohmann::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(path + ": " + e.what());
    }
}

} // namespace pbec::cli
