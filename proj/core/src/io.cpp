#include "gwdesc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gwdesc/error.hpp"

namespace gwdesc {

using nlohmann::json;

namespace {

std::size_t label_index(const GeometryModel& model, const std::string& label)
{
    auto idx = model.index_of(label);
    if (!idx) {
        throw ValidationError("unknown basis label '" + label + "'");
    }
    return *idx;
}

Rational rational_field(const json& j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw ValidationError("expected a rational written as \"p/q\"");
}

CohClass class_from_json(const GeometryModel& model, const json& j)
{
    CohClass c(model.rank());
    if (!j.is_object()) {
        throw ValidationError("a class is an object {label: \"p/q\"}");
    }
    for (const auto& [label, v] : j.items()) {
        c.coeffs[label_index(model, label)] = rational_field(v);
    }
    return c;
}

json class_to_json(const GeometryModel& model, const CohClass& c)
{
    json out = json::object();
    for (std::size_t a = 0; a < c.rank(); ++a) {
        if (sgn(c.coeffs[a]) != 0) {
            out[model.basis[a].label] = to_string(c.coeffs[a]);
        }
    }
    return out;
}

json beta_json(const CurveClass& beta) { return json(beta.coords); }

GeometryModel geometry_from(const json& doc)
{
    GeometryModel m;
    m.name = doc.at("name").get<std::string>();
    m.dimension = doc.at("dimension").get<int>();
    for (const auto& b : doc.at("basis")) {
        m.basis.push_back({b.at("label").get<std::string>(), b.at("degree").get<int>()});
    }
    const auto r = m.rank();
    m.cup_table.assign(r, std::vector<CohClass>(r, CohClass(r)));
    for (const auto& entry : doc.at("cup")) {
        const auto a = label_index(m, entry.at("left").get<std::string>());
        const auto b = label_index(m, entry.at("right").get<std::string>());
        const auto c = class_from_json(m, entry.at("result"));
        m.cup_table[a][b] = c;
        m.cup_table[b][a] = c;
    }
    m.integral = class_from_json(m, doc.at("integral")).coeffs;
    m.lattice_rank = doc.at("curve_lattice_rank").get<std::size_t>();
    m.divisor_pairing.assign(r, std::vector<std::int64_t>(m.lattice_rank, 0));
    for (const auto& [label, row] : doc.at("divisor_pairing").items()) {
        auto v = row.get<std::vector<std::int64_t>>();
        if (v.size() != m.lattice_rank) {
            throw ValidationError("divisor_pairing row for '" + label + "' has the wrong length");
        }
        m.divisor_pairing[label_index(m, label)] = std::move(v);
    }
    m.ample_class = class_from_json(m, doc.at("ample_class"));
    for (const auto& c : doc.at("chern_classes")) {
        m.chern_classes.push_back(class_from_json(m, c));
    }
    return m;
}

PrimaryTable table_from(const json& records, const GeometryModel& model)
{
    PrimaryTable t;
    for (const auto& rec : records) {
        CurveClass beta(rec.at("beta").get<std::vector<std::int64_t>>());
        if (beta.rank() != model.lattice_rank) {
            throw ValidationError("primary table entry has a curve class of the wrong rank");
        }
        const auto labels = rec.at("classes").get<std::vector<std::string>>();
        if (labels.size() != 3) {
            throw ValidationError("primary table entries take exactly three classes");
        }
        t.insert(beta, {label_index(model, labels[0]), label_index(model, labels[1]), label_index(model, labels[2])},
                 rational_field(rec.at("value")));
    }
    return t;
}

json table_json(const PrimaryTable& table, const GeometryModel& model)
{
    json out = json::array();
    for (const auto& [key, value] : table.entries()) {
        const auto& [beta, cls] = key;
        out.push_back({{"beta", beta_json(beta)},
                       {"classes", {model.basis[cls[0]].label, model.basis[cls[1]].label, model.basis[cls[2]].label}},
                       {"value", to_string(value)}});
    }
    return out;
}

template <typename F>
auto guarded(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

json series_records(const std::vector<PhaseIndex>& indices, const NovikovSeries& s, const char* name)
{
    json out = json::array();
    json idx = json::array();
    for (const auto& p : indices) {
        idx.push_back({p.d, p.a});
    }
    for (const auto& [beta, c] : s.terms()) {
        out.push_back({{name, idx}, {"beta", beta_json(beta)}, {"value", to_string(c)}});
    }
    return out;
}

} // namespace

FixtureModel model_from_json(const std::string& text)
{
    return guarded([&] {
        const auto doc = json::parse(text);
        FixtureModel f;
        f.model = geometry_from(doc);
        const auto report = validate_model(f.model);
        for (const auto& c : report.checks) {
            if (!c.passed) {
                throw ValidationError("model '" + f.model.name + "' fails " + c.name + ": " + c.detail);
            }
        }
        if (doc.contains("primary_table")) {
            f.table = table_from(doc.at("primary_table"), f.model);
        }
        f.table.check_dimensions(f.model);
        return f;
    });
}

std::string model_to_json(const FixtureModel& fixture)
{
    const auto& m = fixture.model;
    json doc;
    doc["name"] = m.name;
    doc["dimension"] = m.dimension;
    doc["basis"] = json::array();
    for (const auto& b : m.basis) {
        doc["basis"].push_back({{"label", b.label}, {"degree", b.degree}});
    }
    doc["cup"] = json::array();
    for (std::size_t a = 0; a < m.rank(); ++a) {
        for (std::size_t b = a; b < m.rank(); ++b) {
            if (!m.cup_table[a][b].is_zero()) {
                doc["cup"].push_back({{"left", m.basis[a].label},
                                      {"right", m.basis[b].label},
                                      {"result", class_to_json(m, m.cup_table[a][b])}});
            }
        }
    }
    doc["integral"] = class_to_json(m, CohClass(m.integral));
    doc["curve_lattice_rank"] = m.lattice_rank;
    doc["divisor_pairing"] = json::object();
    for (std::size_t a = 0; a < m.rank(); ++a) {
        if (m.degree(a) == 1) {
            doc["divisor_pairing"][m.basis[a].label] = m.divisor_pairing[a];
        }
    }
    doc["ample_class"] = class_to_json(m, m.ample_class);
    doc["chern_classes"] = json::array();
    for (const auto& c : m.chern_classes) {
        doc["chern_classes"].push_back(class_to_json(m, c));
    }
    doc["primary_table"] = table_json(fixture.table, m);
    return doc.dump(2) + "\n";
}

PrimaryTable primary_table_from_json(const std::string& text, const GeometryModel& model)
{
    return guarded([&] {
        auto t = table_from(json::parse(text), model);
        t.check_dimensions(model);
        return t;
    });
}

std::string primary_table_to_json(const PrimaryTable& table, const GeometryModel& model)
{
    return table_json(table, model).dump(2) + "\n";
}

TautTable taut_table_from_json(const std::string& text)
{
    return guarded([&] {
        TautTable t;
        for (const auto& rec : json::parse(text)) {
            const int g = rec.at("g").get<int>();
            const int n = rec.at("n").get<int>();
            auto psi = rec.at("psi").get<std::vector<int>>();
            if (static_cast<int>(psi.size()) != n) {
                throw ValidationError("tautological entry: psi has length " + std::to_string(psi.size())
                                      + ", expected n = " + std::to_string(n));
            }
            t.insert(TautKey::make(g, std::move(psi), rec.value("lambda", std::vector<int>{})),
                     rational_field(rec.at("value")));
        }
        return t;
    });
}

std::string potential_to_json(const PotentialSeries& potential)
{
    json out = json::array();
    for (const auto& [key, series] : potential.terms) {
        for (auto& rec : series_records(key, series, "indices")) {
            out.push_back(std::move(rec));
        }
    }
    return out.dump(2) + "\n";
}

std::string transform_to_json(const GeometryModel& model, const TransformT& t, const TransformT& inverse)
{
    auto entries = [](const TransformT& m) {
        json out = json::array();
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m.size(); ++j) {
                for (const auto& [beta, c] : m.entries[i][j].terms()) {
                    out.push_back({{"row", {m.indices[i].d, m.indices[i].a}},
                                   {"col", {m.indices[j].d, m.indices[j].a}},
                                   {"beta", beta_json(beta)},
                                   {"value", to_string(c)}});
                }
            }
        }
        return out;
    };
    json doc;
    doc["model"] = model.name;
    doc["basis"] = json::array();
    for (const auto& b : model.basis) {
        doc["basis"].push_back(b.label);
    }
    doc["max_beta_degree"] = t.truncation.max_degree;
    doc["indices"] = json::array();
    for (const auto& p : t.indices) {
        doc["indices"].push_back({p.d, p.a});
    }
    doc["T"] = entries(t);
    doc["T_inverse"] = entries(inverse);
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read " + path.string());
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write " + path.string());
    }
    out << text;
}

std::vector<Insertion> parse_insertions(std::string_view text, const GeometryModel& model)
{
    std::vector<Insertion> out;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> void {
        throw ValidationError("insertion list, offset " + std::to_string(pos) + ": " + why);
    };
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    auto number = [&]() -> int {
        skip_space();
        const auto start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (start == pos) {
            fail("expected a non-negative integer");
        }
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    auto expect = [&](char c) {
        skip_space();
        if (pos >= text.size() || text[pos] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos;
    };
    skip_space();
    if (pos == text.size()) {
        return out;
    }
    while (true) {
        skip_space();
        if (text.substr(pos, 3) != "tau") {
            fail("expected 'tau('");
        }
        pos += 3;
        expect('(');
        Insertion ins;
        ins.d = number();
        skip_space();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            ins.e = number();
        }
        expect(')');
        expect(':');
        skip_space();
        const auto start = pos;
        while (pos < text.size() && text[pos] != ',' && !std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        const std::string label(text.substr(start, pos - start));
        auto idx = model.index_of(label);
        if (!idx) {
            pos = start;
            fail("unknown basis label '" + label + "'");
        }
        ins.a = *idx;
        out.push_back(ins);
        skip_space();
        if (pos == text.size()) {
            break;
        }
        expect(',');
    }
    return out;
}

CurveClass parse_beta(std::string_view text, std::size_t rank)
{
    std::vector<std::int64_t> coords;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const auto v = std::stoll(item, &used);
            if (used != item.size() || v < 0) {
                throw std::invalid_argument(item);
            }
            coords.push_back(v);
        } catch (const std::logic_error&) {
            throw ValidationError("curve class entries must be non-negative integers, got '" + item + "'");
        }
    }
    if (coords.size() != rank) {
        throw ValidationError("curve class needs " + std::to_string(rank) + " entries");
    }
    return CurveClass(std::move(coords));
}

CohClass parse_class(std::string_view text, const GeometryModel& model)
{
    CohClass c(model.rank());
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        const std::string label = item.substr(0, colon);
        const Rational coeff = colon == std::string::npos ? Rational(1) : parse_rational(item.substr(colon + 1));
        c.coeffs[label_index(model, label)] += coeff;
    }
    return c;
}

FixtureModel load_model(const std::string& name_or_path)
{
    for (const auto& n : fixture_names()) {
        if (n == name_or_path) {
            return load_fixture(n);
        }
    }
    if (!std::filesystem::exists(name_or_path)) {
        throw ConfigError("'" + name_or_path + "' is neither a fixture name nor a readable file");
    }
    return model_from_json(read_text_file(name_or_path));
}

} // namespace gwdesc
