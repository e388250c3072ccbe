#include "freedist/codefile.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace freedist {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

CodeFile parse_code(const std::string& text, const std::string& fallback_id) {
    const json j = parse_json(text);
    try {
        CodeFile code;
        code.id = j.value("id", fallback_id);

        const json& jf = j.at("field");
        galois::FieldSpec spec;
        spec.p = jf.at("p").get<std::uint32_t>();
        spec.m = jf.at("m").get<std::uint32_t>();
        if (jf.contains("modulus")) spec.modulus = jf.at("modulus").get<std::vector<std::uint32_t>>();
        auto field = std::make_shared<const galois::Field>(spec);

        const json& jg = j.at("generator");
        if (!jg.is_array() || jg.empty()) throw ParseError("generator must be a non-empty array of rows");
        GeneratorMatrix G;
        G.field = field;
        G.k = jg.size();
        for (const json& jrow : jg) {
            if (!jrow.is_array() || jrow.empty()) throw ParseError("each generator row must be a non-empty array");
            if (G.n == 0) G.n = jrow.size();
            if (jrow.size() != G.n) throw ParseError("generator rows have inconsistent lengths");
            PolyVector row;
            for (const json& jentry : jrow) {
                std::vector<galois::Elem> coeffs;
                for (const json& jc : jentry) {
                    const std::int64_t c = jc.get<std::int64_t>();
                    if (c < 0 || c >= static_cast<std::int64_t>(field->q()))
                        throw ParseError("coefficient " + std::to_string(c) + " is outside [0, q)");
                    coeffs.push_back(static_cast<galois::Elem>(c));
                }
                row.emplace_back(std::move(coeffs));
            }
            G.rows.push_back(std::move(row));
        }
        if (G.k > G.n) throw DimensionMismatch("generator must have k <= n");
        row_degrees(G);  // rejects zero rows
        return code;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid code file: ") + e.what());
    }
}

CodeFile load_code(const std::string& path) {
    return parse_code(read_file(path), std::filesystem::path(path).stem().string());
}

std::string code_to_json(const CodeFile& code) {
    json j;
    if (!code.id.empty()) j["id"] = code.id;
    j["field"]["p"] = code.G.field->p();
    j["field"]["m"] = code.G.field->m();
    if (code.G.field->m() > 1) j["field"]["modulus"] = code.G.field->spec().modulus;
    json rows = json::array();
    for (const auto& row : code.G.rows) {
        json jrow = json::array();
        for (const auto& p : row) jrow.push_back(p.c);
        rows.push_back(std::move(jrow));
    }
    j["generator"] = std::move(rows);
    return j.dump(2) + "\n";
}

void save_code(const CodeFile& code, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << code_to_json(code);
}

WeightedDigraph parse_graph(const std::string& text) {
    const json j = parse_json(text);
    try {
        WeightedDigraph g;
        g.vertices = j.at("vertices").get<std::vector<std::string>>();
        g.zero = j.at("zero").get<std::string>();
        for (const json& je : j.at("edges")) {
            if (!je.is_array() || je.size() != 3) throw ParseError("each edge must be [from, to, weight]");
            g.edges.push_back({je.at(0).get<std::string>(), je.at(1).get<std::string>(), je.at(2).get<int>()});
        }
        return g;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid graph file: ") + e.what());
    }
}

WeightedDigraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

}  // namespace freedist
