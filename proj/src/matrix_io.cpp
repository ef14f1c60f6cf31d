#include "oredet/matrix_io.hpp"

#include <fstream>

#include "oredet/errors.hpp"
#include "oredet/expr.hpp"

namespace oredet {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
    throw InputError(where.empty() ? msg : where + ": " + msg);
}

OreOp parse_entry(const json& e, const std::string& where) {
    if (!e.is_string()) bad(where, "expected an expression string");
    try {
        return parse_operator_expr(e.get<std::string>());
    } catch (const ParseError& err) {
        bad(where, err.what());
    }
}

std::vector<std::vector<OreOp>> parse_grid(const json& rows, const std::string& where) {
    if (!rows.is_array() || rows.empty()) bad(where, "expected a nonempty array of rows");
    const std::size_t n = rows.size();
    std::vector<std::vector<OreOp>> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string wi = where + "[" + std::to_string(i) + "]";
        if (!rows[i].is_array()) bad(wi, "expected an array");
        if (rows[i].size() != n)
            bad(wi, "grid is not square: row has " + std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) grid[i].push_back(parse_entry(rows[i][j], wi + "[" + std::to_string(j) + "]"));
    }
    return grid;
}

RatFunc parse_scalar(const json& e, const std::string& where) {
    OreOp a = parse_entry(e, where);
    if (a.ord() > OrderValue(0)) bad(where, "expected an element of Q(x), got an operator");
    return a.coeff_at(0);
}

Poly parse_poly(const json& e, const std::string& where) {
    RatFunc f = parse_scalar(e, where);
    if (!f.is_polynomial()) bad(where, "expected a polynomial in x");
    return f.num();
}

KMatrix parse_kmatrix(const json& rows, const std::string& where) {
    if (!rows.is_array()) bad(where, "expected an array of rows");
    KMatrix k;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string wi = where + "[" + std::to_string(i) + "]";
        if (!rows[i].is_array()) bad(wi, "expected an array");
        std::vector<RatFunc> row;
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            row.push_back(parse_scalar(rows[i][j], wi + "[" + std::to_string(j) + "]"));
        k.push_back(std::move(row));
    }
    return k;
}

std::vector<Poly> parse_poly_list(const json& a, const std::string& where) {
    if (!a.is_array()) bad(where, "expected an array");
    std::vector<Poly> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(parse_poly(a[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

json poly_list(const std::vector<Poly>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(p.to_string());
    return a;
}

Majorant parse_majorant(const json& j, const std::string& where) {
    try {
        return {j.at("N").get<std::vector<std::int64_t>>(), j.at("h").get<std::vector<std::int64_t>>()};
    } catch (const json::exception& e) {
        bad(where, e.what());
    }
}

}  // namespace

MatrixDocument parse_matrix_document(const json& doc) {
    if (!doc.is_object()) bad("", "matrix document must be a JSON object");
    if (!doc.contains("entries")) bad("", "missing \"entries\"");
    MatrixDocument out;
    out.matrix = OreMatrix(parse_grid(doc["entries"], "entries"));
    if (doc.contains("n")) {
        const json& n = doc["n"];
        if (!n.is_number_integer() || n.get<std::int64_t>() != static_cast<std::int64_t>(out.matrix.size()))
            bad("n", "does not match the " + std::to_string(out.matrix.size()) + "x" +
                         std::to_string(out.matrix.size()) + " entries grid");
    }
    if (doc.contains("meta")) out.meta = doc["meta"];
    return out;
}

MatrixDocument parse_matrix_document(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        bad("", std::string("malformed JSON: ") + e.what());
    }
    return parse_matrix_document(doc);
}

MatrixDocument read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return parse_matrix_document(in);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

json entries_to_json(const OreMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(render_operator(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_to_json(const OreMatrix& m, const json& meta) {
    json doc{{"n", m.size()}, {"entries", entries_to_json(m)}};
    if (!meta.empty()) doc["meta"] = meta;
    return doc;
}

json kmatrix_to_json(const KMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& f : r) row.push_back(f.to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json majorant_to_json(const Majorant& m) { return {{"N", m.N}, {"h", m.h}}; }

json certificate_to_json(const Dd1Certificate& c) {
    const UniformForm& u = c.uniform;
    return {
        {"input", matrix_to_json(c.input)},
        {"det", {{"det1", c.det.det1.to_string()}, {"d", c.det.d.value()}}},
        {"tord", c.tord},
        {"dd", c.tord - c.det.d.value()},
        {"majorant", majorant_to_json(c.majorant)},
        {"uniform",
         {{"entries", entries_to_json(u.Mp)},
          {"N", u.N},
          {"h", u.h},
          {"col_pads", u.col_pads},
          {"row_pads", u.row_pads}}},
        {"leading_split", {{"A", kmatrix_to_json(c.split.A)}, {"B", kmatrix_to_json(c.split.B)}}},
        {"relation", {{"c", poly_list(c.relation.c)}, {"pivot", c.relation.pivot}}},
        {"swapped_row", c.swapped_row},
        {"swap_sign", c.swap_sign},
        {"c", poly_list(c.c)},
        {"m2", entries_to_json(c.m2)},
        {"m2_majorant", majorant_to_json(c.m2_majorant)},
        {"m2_char", kmatrix_to_json(c.m2_char)},
        {"summands", poly_list(c.summands)},
        {"summand_quotients", poly_list(c.summand_quotients)},
        {"char_det", c.char_det.to_string()},
        {"c1", c.c.empty() ? std::string("0") : c.c[0].to_string()},
        {"D", c.D.to_string()},
        {"D_in_R", true},
    };
}

Dd1Certificate certificate_from_json(const json& j) {
    try {
        Dd1Certificate c;
        c.input = parse_matrix_document(j.at("input")).matrix;
        c.det.det1 = parse_scalar(j.at("det").at("det1"), "det.det1");
        c.det.d = j.at("det").at("d").get<std::int64_t>();
        c.tord = j.at("tord").get<std::int64_t>();
        c.majorant = parse_majorant(j.at("majorant"), "majorant");
        const json& u = j.at("uniform");
        c.uniform.Mp = OreMatrix(parse_grid(u.at("entries"), "uniform.entries"));
        c.uniform.N = u.at("N").get<std::int64_t>();
        c.uniform.h = u.at("h").get<std::int64_t>();
        c.uniform.col_pads = u.at("col_pads").get<std::vector<std::int64_t>>();
        c.uniform.row_pads = u.at("row_pads").get<std::vector<std::int64_t>>();
        c.split.A = parse_kmatrix(j.at("leading_split").at("A"), "leading_split.A");
        c.split.B = parse_kmatrix(j.at("leading_split").at("B"), "leading_split.B");
        c.relation.c = parse_poly_list(j.at("relation").at("c"), "relation.c");
        c.relation.pivot = j.at("relation").at("pivot").get<std::size_t>();
        c.swapped_row = j.at("swapped_row").get<std::size_t>();
        c.swap_sign = j.at("swap_sign").get<int>();
        c.c = parse_poly_list(j.at("c"), "c");
        c.m2 = OreMatrix(parse_grid(j.at("m2"), "m2"));
        c.m2_majorant = parse_majorant(j.at("m2_majorant"), "m2_majorant");
        c.m2_char = parse_kmatrix(j.at("m2_char"), "m2_char");
        c.summands = parse_poly_list(j.at("summands"), "summands");
        c.summand_quotients = parse_poly_list(j.at("summand_quotients"), "summand_quotients");
        c.char_det = parse_poly(j.at("char_det"), "char_det");
        c.D = parse_poly(j.at("D"), "D");
        return c;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace oredet
