#include "chaincover/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace chaincover {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

json parse_json_file(const std::string& path) {
    json doc = json::parse(slurp(path));
    if (doc.contains("schema") && doc["schema"] != 1)
        throw std::runtime_error(path + ": unsupported schema version");
    return doc;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(field);
            field.clear();
        } else if (ch != '\r') {
            field += ch;
        }
    }
    out.push_back(field);
    return out;
}

Rational json_exact(const json& v, const std::string& what) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return parse_decimal(v.get<std::string>());
    throw std::runtime_error(what +
                             ": use integers or exact decimal strings, not "
                             "floating-point literals");
}

}  // namespace

FiniteSpace load_points_csv(const std::string& path, int basepoint) {
    std::istringstream in(slurp(path));
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    auto header = split_csv_line(line);
    if (header.empty() || header[0] != "id")
        throw std::runtime_error(path + ": header must start with 'id'");
    const std::size_t dim = header.size() - 1;
    if (dim == 0) throw std::runtime_error(path + ": no coordinate columns");

    std::map<int, std::vector<Rational>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != dim + 1)
            throw std::runtime_error(path + ": row width does not match header");
        int id = std::stoi(fields[0]);
        std::vector<Rational> coords;
        for (std::size_t k = 1; k < fields.size(); ++k)
            coords.push_back(parse_decimal(fields[k]));
        if (!rows.emplace(id, std::move(coords)).second)
            throw std::runtime_error(path + ": duplicate id " + fields[0]);
    }
    if (rows.empty()) throw std::runtime_error(path + ": no points");
    std::vector<std::vector<Rational>> coords;
    int expect = 0;
    for (auto& [id, c] : rows) {
        if (id != expect++)
            throw std::runtime_error(path + ": ids are not dense 0..n-1");
        coords.push_back(std::move(c));
    }
    return FiniteSpace::from_points(std::move(coords), basepoint);
}

FiniteSpace load_distance_table_json(const std::string& path, int basepoint) {
    json doc = parse_json_file(path);
    if (!doc.contains("n") || !doc.contains("d"))
        throw std::runtime_error(path + ": distance table needs 'n' and 'd'");
    const int n = doc["n"].get<int>();
    bool squared = doc.value("squared", false);
    const auto& d = doc["d"];
    if (static_cast<int>(d.size()) != n)
        throw std::runtime_error(path + ": 'd' must have n rows");
    std::vector<std::vector<Rational>> table(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(d[i].size()) != n)
            throw std::runtime_error(path + ": 'd' must be square");
        for (int j = 0; j < n; ++j)
            table[i].push_back(json_exact(d[i][j], path + ": d[" +
                                                       std::to_string(i) + "][" +
                                                       std::to_string(j) + "]"));
    }
    return FiniteSpace::from_distance_table(table, basepoint, squared);
}

namespace {

Entourage relation_from_json(const json& doc, const FiniteSpace& space,
                             const std::string& path) {
    if (doc.contains("pairs")) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& p : doc["pairs"]) {
            if (!p.is_array() || p.size() != 2)
                throw std::runtime_error(path + ": each pair must be [i,j]");
            pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
        }
        return entourage_from_pairs(space, pairs);
    }
    if (doc.contains("diff_intervals")) {
        std::vector<OpenInterval> intervals;
        for (const auto& iv : doc["diff_intervals"]) {
            if (!iv.is_array() || iv.size() != 2)
                throw std::runtime_error(path + ": each interval must be [lo,hi]");
            intervals.push_back({json_exact(iv[0], path + ": interval endpoint"),
                                 json_exact(iv[1], path + ": interval endpoint")});
        }
        return entourage_from_diff_intervals(space, intervals);
    }
    throw std::runtime_error(path + ": relation needs 'pairs' or 'diff_intervals'");
}

}  // namespace

Entourage load_relation_json(const std::string& path, const FiniteSpace& space) {
    return relation_from_json(parse_json_file(path), space, path);
}

std::pair<FiniteSpace, Entourage> load_relation_space_json(const std::string& path,
                                                           int basepoint) {
    json doc = parse_json_file(path);
    if (!doc.contains("pairs") || !doc.contains("n"))
        throw std::runtime_error(
            path + ": a relation used as input needs 'n' and 'pairs'");
    FiniteSpace space = FiniteSpace::from_size(doc["n"].get<int>(), basepoint);
    Entourage rel = relation_from_json(doc, space, path);
    return {std::move(space), std::move(rel)};
}

}  // namespace chaincover
