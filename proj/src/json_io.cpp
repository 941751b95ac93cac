#include "orbit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace orbit::io {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

Eigen::Index count_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ParseError(std::string("field \"") + key + "\" must be a nonnegative integer");
    }
    return static_cast<Eigen::Index>(v.get<long long>());
}

void require_n(const Json& j, const ComplexMatrix& m, const char* key)
{
    const Eigen::Index n = count_field(j, "n");
    if (m.rows() != n || m.cols() != n) {
        throw ParseError(std::string("field \"") + key + "\" is not n x n");
    }
}

} // namespace

Json complex_to_json(Complex c)
{
    return Json::array({c.real(), c.imag()});
}

Complex complex_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("complex scalar must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const ComplexMatrix& m)
{
    Json entries = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            entries.push_back(complex_to_json(m(r, c)));
        }
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j)
{
    const Eigen::Index rows = count_field(j, "rows");
    const Eigen::Index cols = count_field(j, "cols");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != rows * cols) {
        throw ParseError("matrix entries count does not equal rows * cols");
    }
    ComplexMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = complex_from_json(entries[static_cast<std::size_t>(r * cols + c)]);
        }
    }
    if (!m.allFinite()) throw ParseError("matrix has non-finite entries");
    return m;
}

Json to_json(const BlockOperator& a)
{
    return {{"n", a.n()}, {"pp", to_json(a.pp())}, {"pm", to_json(a.pm())},
            {"mp", to_json(a.mp())}, {"mm", to_json(a.mm())}};
}

BlockOperator block_from_json(const Json& j)
{
    ComplexMatrix pp = matrix_from_json(field(j, "pp"));
    ComplexMatrix pm = matrix_from_json(field(j, "pm"));
    ComplexMatrix mp = matrix_from_json(field(j, "mp"));
    ComplexMatrix mm = matrix_from_json(field(j, "mm"));
    require_n(j, pp, "pp");
    require_n(j, pm, "pm");
    require_n(j, mp, "mp");
    require_n(j, mm, "mm");
    return {std::move(pp), std::move(pm), std::move(mp), std::move(mm)};
}

Json to_json(const SymplecticElement& a)
{
    return {{"n", a.g.rows()}, {"g", to_json(a.g)}, {"h", to_json(a.h)}};
}

SymplecticElement symplectic_from_json(const Json& j)
{
    SymplecticElement a{matrix_from_json(field(j, "g")), matrix_from_json(field(j, "h"))};
    require_n(j, a.g, "g");
    require_n(j, a.h, "h");
    return a;
}

Json to_json(const SpAlgebraElement& a)
{
    return {{"n", a.a1.rows()}, {"a1", to_json(a.a1)}, {"a2", to_json(a.a2)}};
}

SpAlgebraElement algebra_from_json(const Json& j)
{
    SpAlgebraElement a{matrix_from_json(field(j, "a1")), matrix_from_json(field(j, "a2"))};
    require_n(j, a.a1, "a1");
    require_n(j, a.a2, "a2");
    return a;
}

Json to_json(const SiegelPoint& z)
{
    return {{"n", z.z.rows()}, {"z", to_json(z.z)}};
}

SiegelPoint siegel_from_json(const Json& j)
{
    SiegelPoint z{matrix_from_json(field(j, "z"))};
    require_n(j, z.z, "z");
    return z;
}

Json to_json(const SiegelTangent& v)
{
    return {{"n", v.v.rows()}, {"v", to_json(v.v)}};
}

SiegelTangent tangent_from_json(const Json& j)
{
    SiegelTangent v{matrix_from_json(field(j, "v"))};
    require_n(j, v.v, "v");
    return v;
}

Json to_json(const ExtendedPredual& m)
{
    return {{"mu", to_json(m.mu.op)}, {"gamma", complex_to_json(m.gamma)}};
}

ExtendedPredual predual_from_json(const Json& j)
{
    return {PredualElement(block_from_json(field(j, "mu"))), complex_from_json(field(j, "gamma"))};
}

Json parse(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

} // namespace orbit::io
