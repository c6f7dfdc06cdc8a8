#pragma once

#include <tropical/cells.hpp>
#include <tropical/core.hpp>
#include <tropical/hull.hpp>
#include <tropical/phylo.hpp>
#include <tropical/subdivision.hpp>

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tropical {

using Json = nlohmann::ordered_json;

/// Input parse failure with 1-based line/column coordinates.
struct ParseError : std::runtime_error {
    int line = 0, column = 0;
    ParseError(const std::string& message, int line_, int column_)
        : std::runtime_error("parse error at line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + message),
          line(line_),
          column(column_) {}
};

namespace detail {

struct Token {
    std::string text;
    int line, column;
};

inline std::vector<std::vector<Token>> tokenize_rows(std::string_view text) {
    std::vector<std::vector<Token>> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        std::vector<Token> row;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',' ||
                                       line[i] == '\r'))
                ++i;
            if (i >= line.size() || line[i] == '#') break;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != ',' &&
                   line[i] != '\r' && line[i] != '#')
                ++i;
            row.push_back({std::string(line.substr(start, i - start)), line_no,
                           static_cast<int>(start) + 1});
        }
        if (!row.empty()) rows.push_back(std::move(row));
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return rows;
}

inline Rational parse_token(const Token& t) {
    try {
        return parse_rational(t.text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), t.line, t.column);
    }
}

}  // namespace detail

/// Parses a rational matrix from comma- or whitespace-separated rows.
/// Entries may be integers, fractions "p/q" or exact decimals.
inline Configuration parse_configuration(std::string_view text) {
    auto rows = detail::tokenize_rows(text);
    if (rows.empty()) throw ParseError("empty matrix", 1, 1);
    RatMatrix m;
    for (const auto& row : rows) {
        if (!m.empty() && row.size() != m[0].size())
            throw ParseError("ragged row: expected " + std::to_string(m[0].size()) + " entries, got " +
                                 std::to_string(row.size()),
                             row[0].line, row[0].column);
        RatVec r;
        for (const auto& t : row) r.push_back(detail::parse_token(t));
        m.push_back(std::move(r));
    }
    return Configuration(std::move(m));
}

/// Parses a metric: either a square matrix, or the lower-triangular text
/// format whose first line is the point count n and whose i-th following
/// row carries the distances to the earlier points (diagonal optional).
inline MetricMatrix parse_metric(std::string_view text) {
    auto rows = detail::tokenize_rows(text);
    if (rows.empty()) throw ParseError("empty metric", 1, 1);

    const bool triangular = rows[0].size() == 1 && rows.size() >= 2 &&
                            rows[0][0].text.find_first_not_of("0123456789") == std::string::npos;
    try {
        if (triangular) {
            const std::size_t n = std::stoul(rows[0][0].text);
            if (n == 0) throw ParseError("point count must be positive", rows[0][0].line, 1);
            // Strict lower-triangular input has an empty first row, which
            // the tokenizer drops; both n and n-1 data rows are accepted.
            const std::size_t data_rows = rows.size() - 1;
            if (data_rows != n && data_rows != n - 1)
                throw ParseError("expected " + std::to_string(n) + " rows after the count",
                                 rows[0][0].line, 1);
            const std::size_t offset = data_rows == n ? 1 : 0;
            RatMatrix d(n, RatVec(n, Rational(0)));
            for (std::size_t i = (offset ? 0 : 1); i < n; ++i) {
                const auto& row = rows[i + offset];
                const bool with_diagonal = row.size() == i + 1;
                if (!with_diagonal && row.size() != i)
                    throw ParseError("row for point " + std::to_string(i + 1) + " must have " +
                                         std::to_string(i) + " or " + std::to_string(i + 1) +
                                         " entries",
                                     row[0].line, 1);
                for (std::size_t j = 0; j < row.size(); ++j) {
                    Rational v = detail::parse_token(row[j]);
                    if (with_diagonal && j == i) {
                        if (v != 0) throw ParseError("diagonal must be zero", row[j].line, row[j].column);
                        continue;
                    }
                    d[i][j] = d[j][i] = v;
                }
            }
            return MetricMatrix(std::move(d));
        }
        Configuration square = parse_configuration(text);
        if (square.rows() != square.cols())
            throw ParseError("metric matrix must be square", rows[0][0].line, rows[0][0].column);
        return MetricMatrix(square.matrix());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), rows[0][0].line, rows[0][0].column);
    }
}

enum class MatrixKind { configuration, metric };

/// Unified matrix ingestion: a plain configuration, or a validated
/// metric in either square or lower-triangular form.
inline std::variant<Configuration, MetricMatrix> parse_matrix(std::string_view text,
                                                              MatrixKind kind) {
    if (kind == MatrixKind::metric) return parse_metric(text);
    return parse_configuration(text);
}

// ---------------------------------------------------------------------------
// JSON documents. Rationals are serialized as canonical "p" / "p/q" strings;
// generator and coordinate indices are 1-based on the wire.

inline Json rational_json(const Rational& q) { return to_string(q); }

inline Json vector_json(const RatVec& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(rational_json(c));
    return out;
}

inline Json matrix_json(const RatMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back(vector_json(row));
    return out;
}

inline RatVec vector_from_json(const Json& j) {
    RatVec out;
    for (const auto& c : j) out.push_back(parse_rational(c.get<std::string>()));
    return out;
}

inline RatMatrix matrix_from_json(const Json& j) {
    RatMatrix out;
    for (const auto& row : j) out.push_back(vector_from_json(row));
    return out;
}

inline Json type_json(const CellType& S) {
    Json out = Json::array();
    for (const auto& Sj : S) {
        Json part = Json::array();
        for (int i : Sj) part.push_back(i + 1);
        out.push_back(std::move(part));
    }
    return out;
}

inline CellType type_from_json(const Json& j) {
    CellType S;
    for (const auto& part : j) {
        std::vector<int> Sj;
        for (const auto& i : part) Sj.push_back(i.get<int>() - 1);
        S.push_back(std::move(Sj));
    }
    return S;
}

/// Self-contained description of a cell decomposition: configuration,
/// cells with types, dimensions, flags, vertices and defining
/// inequalities, the face relation, the f-vector and the dual
/// subdivision cells.
struct ComplexDocument {
    std::string format = "tropical-complex/1";
    RatMatrix configuration;
    bool bounded_only = false;
    RatMatrix vertices;
    struct CellEntry {
        CellType type;
        int dim = 0;
        bool bounded = false;
        std::vector<int> vertex_ids;
        RatMatrix rays;
        std::vector<DifferenceInequality> inequalities;
        friend bool operator==(const CellEntry&, const CellEntry&) = default;
    };
    std::vector<CellEntry> cells;
    std::vector<std::pair<int, int>> face_relations;
    std::vector<long> f_vector;
    std::vector<SubdivisionCell> dual_cells;

    friend bool operator==(const ComplexDocument&, const ComplexDocument&) = default;
};

inline ComplexDocument make_complex_document(const TropicalComplex& complex) {
    ComplexDocument doc;
    doc.configuration = complex.config.matrix();
    doc.bounded_only = complex.bounded_only;
    for (const auto& p : complex.vertices) doc.vertices.push_back(p.coords());
    for (const auto& c : complex.cells) {
        ComplexDocument::CellEntry e;
        e.type = c.type;
        e.dim = c.dim;
        e.bounded = c.bounded;
        e.vertex_ids = c.vertex_ids;
        e.rays = c.rays;
        e.inequalities = cell_inequalities(complex.config, c.type);
        doc.cells.push_back(std::move(e));
        if (c.bounded) {
            SubdivisionCell sc;
            for (std::size_t j = 0; j < c.type.size(); ++j)
                for (int i : c.type[j]) sc.pairs.emplace_back(i, static_cast<int>(j));
            std::sort(sc.pairs.begin(), sc.pairs.end());
            doc.dual_cells.push_back(std::move(sc));
        }
    }
    std::sort(doc.dual_cells.begin(), doc.dual_cells.end());
    doc.face_relations = complex.face_relations;
    doc.f_vector = complex.f_vector;
    return doc;
}

inline Json to_json(const ComplexDocument& doc) {
    Json j;
    j["format"] = doc.format;
    j["rows"] = doc.configuration.size();
    j["cols"] = doc.configuration.empty() ? 0 : doc.configuration[0].size();
    j["configuration"] = matrix_json(doc.configuration);
    j["bounded_only"] = doc.bounded_only;
    j["vertices"] = matrix_json(doc.vertices);
    Json cells = Json::array();
    for (const auto& c : doc.cells) {
        Json e;
        e["type"] = type_json(c.type);
        e["dim"] = c.dim;
        e["bounded"] = c.bounded;
        e["vertex_ids"] = c.vertex_ids;
        e["rays"] = matrix_json(c.rays);
        Json ineqs = Json::array();
        for (const auto& q : c.inequalities) {
            Json iq;
            iq["j"] = q.j + 1;
            iq["k"] = q.k + 1;
            iq["rhs"] = rational_json(q.rhs);
            ineqs.push_back(std::move(iq));
        }
        e["inequalities"] = std::move(ineqs);
        cells.push_back(std::move(e));
    }
    j["cells"] = std::move(cells);
    Json rel = Json::array();
    for (auto [a, b] : doc.face_relations) rel.push_back(Json::array({a, b}));
    j["face_relations"] = std::move(rel);
    j["f_vector"] = doc.f_vector;
    Json dual = Json::array();
    for (const auto& c : doc.dual_cells) {
        Json pairs = Json::array();
        for (auto [i, jj] : c.pairs) pairs.push_back(Json::array({i + 1, jj + 1}));
        dual.push_back(std::move(pairs));
    }
    j["dual_subdivision"] = std::move(dual);
    return j;
}

inline ComplexDocument complex_document_from_json(const Json& j) {
    ComplexDocument doc;
    doc.format = j.at("format").get<std::string>();
    doc.configuration = matrix_from_json(j.at("configuration"));
    doc.bounded_only = j.at("bounded_only").get<bool>();
    doc.vertices = matrix_from_json(j.at("vertices"));
    for (const auto& e : j.at("cells")) {
        ComplexDocument::CellEntry c;
        c.type = type_from_json(e.at("type"));
        c.dim = e.at("dim").get<int>();
        c.bounded = e.at("bounded").get<bool>();
        c.vertex_ids = e.at("vertex_ids").get<std::vector<int>>();
        c.rays = matrix_from_json(e.at("rays"));
        for (const auto& iq : e.at("inequalities"))
            c.inequalities.push_back({iq.at("j").get<int>() - 1, iq.at("k").get<int>() - 1,
                                      parse_rational(iq.at("rhs").get<std::string>())});
        doc.cells.push_back(std::move(c));
    }
    for (const auto& p : j.at("face_relations"))
        doc.face_relations.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    doc.f_vector = j.at("f_vector").get<std::vector<long>>();
    for (const auto& cj : j.at("dual_subdivision")) {
        SubdivisionCell c;
        for (const auto& p : cj) c.pairs.emplace_back(p.at(0).get<int>() - 1, p.at(1).get<int>() - 1);
        doc.dual_cells.push_back(std::move(c));
    }
    return doc;
}

}  // namespace tropical
