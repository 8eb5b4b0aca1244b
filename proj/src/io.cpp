#include "kaccoh/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

namespace kaccoh {

namespace {

std::vector<int> int_list(const Json& j, const std::string& field) {
    if (!j.is_array()) throw SchemaError("field '" + field + "' must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw SchemaError("field '" + field + "' must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("malformed JSON in '" + path + "': " + e.what());
    }
}

FiniteGroup group_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("group must be an object");
    if (j.contains("table")) {
        if (!j.contains("order") || !j["order"].is_number_integer())
            throw SchemaError("group with a table needs an integer 'order'");
        const int n = j["order"].get<int>();
        if (n <= 0 || !j["table"].is_array() || static_cast<int>(j["table"].size()) != n)
            throw SchemaError("'table' must be an order x order array");
        Eigen::MatrixXi table(n, n);
        for (int r = 0; r < n; ++r) {
            const auto row = int_list(j["table"][r], "table");
            if (static_cast<int>(row.size()) != n)
                throw SchemaError("'table' row " + std::to_string(r) + " has wrong length");
            for (int c = 0; c < n; ++c) table(r, c) = row[c];
        }
        return build_group_from_table(table);
    }
    if (j.contains("permutation_generators")) {
        if (!j.contains("degree") || !j["degree"].is_number_integer())
            throw SchemaError("permutation input needs an integer 'degree'");
        std::vector<std::vector<int>> gens;
        for (const auto& g : j["permutation_generators"])
            gens.push_back(int_list(g, "permutation_generators"));
        return build_group_from_permutations(j["degree"].get<int>(), gens);
    }
    throw SchemaError("group needs either 'table' or 'permutation_generators'");
}

MatchedPair matched_pair_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("group"))
        throw SchemaError("matched pair input needs a 'group'");
    FiniteGroup group = group_from_json(j["group"]);
    if (!j.contains("G1") || !j.contains("G2"))
        throw SchemaError("matched pair input needs 'G1' and 'G2'");
    std::vector<int> g1 = int_list(j["G1"], "G1");
    std::vector<int> g2 = int_list(j["G2"], "G2");
    const bool close = j.value("generators", false);
    if (close) {
        g1 = subgroup_closure(group, g1).elements;
        g2 = subgroup_closure(group, g2).elements;
    }
    return build_matched_pair(group, g1, g2);
}

MatchedPair load_matched_pair(const std::string& path) {
    return matched_pair_from_json(load_json_file(path));
}

namespace {

std::vector<TorusValue> values_from_json(const Json& j, const std::vector<int>& shape,
                                         const std::string& name) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("values"))
        throw SchemaError("'" + name + "' needs 'shape' and 'values'");
    const auto given = int_list(j["shape"], name + ".shape");
    if (given != shape) {
        std::ostringstream os;
        os << name << " shape mismatch, expected [";
        for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "," : "") << shape[i];
        os << "]";
        throw ShapeMismatch(os.str());
    }
    std::size_t total = 1;
    for (int s : shape) total *= static_cast<std::size_t>(s);
    if (!j["values"].is_array() || j["values"].size() != total)
        throw ShapeMismatch("'" + name + "' needs " + std::to_string(total) + " values");
    std::vector<TorusValue> out;
    out.reserve(total);
    for (const auto& v : j["values"]) {
        if (!v.is_string()) throw SchemaError("values must be exact rational strings");
        out.push_back(parse_torus_value(v.get<std::string>()));
    }
    return out;
}

Json values_to_json(const std::vector<TorusValue>& values, const std::vector<int>& shape) {
    Json out;
    out["shape"] = shape;
    Json vals = Json::array();
    for (const auto& v : values) vals.push_back(v.str());
    out["values"] = std::move(vals);
    return out;
}

void require_torus_coeff(const Json& j) {
    const std::string coeff = j.value("coeff", "T");
    if (coeff != "T" && coeff.rfind("Zm:", 0) != 0)
        throw SchemaError("cocycle files carry 'coeff' of T or Zm:<m>");
}

}  // namespace

CocyclePair cocycle_pair_from_json(const MatchedPair& mp, const Json& j) {
    require_torus_coeff(j);
    if (!j.contains("U") || !j.contains("V")) throw SchemaError("pair file needs 'U' and 'V'");
    const int n1 = mp.g1_size(), n2 = mp.g2_size();
    CocyclePair pair(n1, n2);
    pair.u = values_from_json(j["U"], {n2, n1, n1}, "U");
    pair.v = values_from_json(j["V"], {n2, n2, n1}, "V");
    return pair;
}

Json cocycle_pair_to_json(const MatchedPair& mp, const CocyclePair& pair) {
    Json out;
    out["coeff"] = "T";
    out["U"] = values_to_json(pair.u, {mp.g2_size(), mp.g1_size(), mp.g1_size()});
    out["V"] = values_to_json(pair.v, {mp.g2_size(), mp.g2_size(), mp.g1_size()});
    return out;
}

PentagonalCocycle theta_from_json(const MatchedPair& mp, const Json& j) {
    require_torus_coeff(j);
    if (!j.contains("theta")) throw SchemaError("theta file needs 'theta'");
    const int n = mp.group.order;
    return values_from_json(j["theta"], {n, n}, "theta");
}

Json theta_to_json(const MatchedPair& mp, const PentagonalCocycle& theta) {
    Json out;
    out["coeff"] = "T";
    out["theta"] = values_to_json(theta, {mp.group.order, mp.group.order});
    return out;
}

PentagonalCocycle load_theta(const MatchedPair& mp, const std::string& path) {
    return theta_from_json(mp, load_json_file(path));
}

Json info_to_json(const CoefficientModule& coeff, int degree, const AbelianGroupInfo& info) {
    Json out;
    out["degree"] = degree;
    out["coeff"] = coeff.str();
    out["free_rank"] = info.free_rank;
    out["torus_rank"] = info.torus_rank;
    out["torsion"] = info.torsion;
    return out;
}

void export_matrix(std::ostream& os, const SparseMatI& m) {
    std::vector<std::tuple<int, int, i64>> entries;
    for (int c = 0; c < m.outerSize(); ++c)
        for (SparseMatI::InnerIterator it(m, c); it; ++it)
            if (it.value() != 0) entries.emplace_back(static_cast<int>(it.row()), c, it.value());
    std::sort(entries.begin(), entries.end());
    os << m.rows() << " " << m.cols() << " " << entries.size() << "\n";
    for (const auto& [r, c, v] : entries) os << r << " " << c << " " << v << "\n";
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    std::uint64_t hash = 1469598103934665603ull;
    char ch;
    while (in.get(ch)) {
        hash ^= static_cast<unsigned char>(ch);
        hash *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << hash;
    return os.str();
}

}  // namespace kaccoh
