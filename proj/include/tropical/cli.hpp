#pragma once

#include <tropical/io.hpp>
#include <tropical/svg.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace tropical {

/// One batch job: a command plus its input/output locations and flags.
/// Exactly one command runs per invocation; outputs are deterministic for
/// fixed inputs (and seed, reserved for sampling-based commands).
struct JobSpec {
    std::string command;      ///< hull | member | separate | complex | dual | generic |
                              ///< tree-check | tight-span | fvector
    std::string input_path;
    std::string output_path;  ///< empty writes to stdout
    std::string svg_path;     ///< optional rendering target (three-coordinate data only)
    std::string point;        ///< query point for member/separate, one CSV row
    bool bounded_only = false;
    unsigned long long seed = 0;
    std::size_t size_limit = 62;
    long r = 0, n = 0;        ///< fvector arguments
};

namespace climpl {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::system_error(errno, std::generic_category(), "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + path);
    out << text;
}

inline Json certificate_json(const Configuration& V, const ProjectivePoint& x) {
    HullCertificate cert = separate(V, x);
    Json j;
    j["format"] = "tropical-membership/1";
    j["point"] = vector_json(x.coords());
    j["inside"] = is_inside(cert);
    if (is_inside(cert)) {
        j["lambdas"] = vector_json(std::get<InsideCertificate>(cert).lambdas);
    } else {
        const auto& h = std::get<OutsideCertificate>(cert).hyperplane;
        Json sep;
        sep["coefficients"] = vector_json(h.coefficients);
        sep["witness"] = h.witness + 1;
        j["separator"] = std::move(sep);
    }
    return j;
}

}  // namespace climpl

/// Executes a job. Returns 0 on success, 1 on domain errors (bad input
/// data, non-metric input, size limits), 2 on usage errors.
inline int run(const JobSpec& job, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    using climpl::slurp;
    using climpl::write_text;
    try {
        Json doc;
        std::optional<std::string> svg;

        if (job.command == "complex") {
            Configuration V = parse_configuration(slurp(job.input_path));
            TropicalComplex cx = enumerate_complex(V, job.bounded_only, job.size_limit);
            doc = to_json(make_complex_document(cx));
            if (!job.svg_path.empty()) svg = render_svg(cx);
        } else if (job.command == "hull") {
            Configuration V = parse_configuration(slurp(job.input_path));
            auto kept = minimal_generator_indices(V);
            doc["format"] = "tropical-hull/1";
            Json kept_j = Json::array(), removed_j = Json::array();
            RatMatrix rows;
            for (std::size_t i = 0; i < V.rows(); ++i) {
                if (std::find(kept.begin(), kept.end(), static_cast<int>(i)) != kept.end()) {
                    kept_j.push_back(i + 1);
                    rows.push_back(V.row(i));
                } else {
                    removed_j.push_back(i + 1);
                }
            }
            doc["kept"] = std::move(kept_j);
            doc["removed"] = std::move(removed_j);
            doc["generators"] = matrix_json(rows);
        } else if (job.command == "member" || job.command == "separate") {
            if (job.point.empty()) {
                err << "error: " << job.command << " requires --point\n";
                return 2;
            }
            Configuration V = parse_configuration(slurp(job.input_path));
            Configuration pt = parse_configuration(job.point);
            if (pt.rows() != 1 || pt.cols() != V.cols())
                throw std::invalid_argument("--point must be a single row matching the input width");
            doc = climpl::certificate_json(V, pt.normalized_row(0));
        } else if (job.command == "dual") {
            Configuration V = parse_configuration(slurp(job.input_path));
            auto cells = dual_subdivision(V, job.size_limit);
            DualityTransport dt = duality_transport(V, job.size_limit);
            doc["format"] = "tropical-dual/1";
            Json cells_j = Json::array();
            for (const auto& c : cells) {
                Json pairs = Json::array();
                for (auto [i, j] : c.pairs) pairs.push_back(Json::array({i + 1, j + 1}));
                cells_j.push_back(std::move(pairs));
            }
            doc["cells"] = std::move(cells_j);
            doc["is_triangulation"] = is_triangulation(cells, V.rows(), V.cols());
            doc["row_f_vector"] = dt.row_complex.f_vector;
            doc["col_f_vector"] = dt.col_complex.f_vector;
            doc["maps_verified"] = dt.maps_verified;
            doc["poset_isomorphic"] = dt.poset_isomorphic;
        } else if (job.command == "generic") {
            Configuration V = parse_configuration(slurp(job.input_path));
            GenericityReport rep = is_generic(V, job.size_limit);
            doc["format"] = "tropical-genericity/1";
            doc["generic"] = rep.generic;
            doc["triangulation"] = rep.triangulation;
            if (!rep.generic) {
                Json w;
                Json rows_j = Json::array(), cols_j = Json::array();
                for (int i : rep.witness_rows) rows_j.push_back(i + 1);
                for (int j : rep.witness_cols) cols_j.push_back(j + 1);
                w["rows"] = std::move(rows_j);
                w["cols"] = std::move(cols_j);
                doc["witness"] = std::move(w);
            }
        } else if (job.command == "tree-check") {
            MetricMatrix D = parse_metric(slurp(job.input_path));
            if (!is_metric(D)) throw std::invalid_argument("input violates the triangle inequality");
            TreeMetricReport rep = is_tree_metric(D, job.size_limit);
            doc["format"] = "tropical-treecheck/1";
            doc["tree_metric"] = rep.tree_metric;
            doc["dim"] = rep.dim_PD;
            doc["four_point"] = rep.four_point;
            doc["principal_4x4_singular"] = rep.principal_4x4_singular;
            doc["all_4x4_singular"] = rep.all_4x4_singular;
            doc["complex_route_skipped"] = rep.complex_route_skipped;
            doc["all_minors_skipped"] = rep.all_minors_skipped;
        } else if (job.command == "tight-span") {
            MetricMatrix D = parse_metric(slurp(job.input_path));
            if (!is_metric(D)) throw std::invalid_argument("input violates the triangle inequality");
            TightSpan span = tight_span(D, job.size_limit);
            doc["format"] = "tropical-tightspan/1";
            doc["span_vertices"] = matrix_json(span.span_vertices);
            Json faces = Json::array();
            for (const auto& f : span.faces) {
                Json fj;
                fj["vertex_ids"] = f.vertex_ids;
                fj["dim"] = f.dim;
                faces.push_back(std::move(fj));
            }
            doc["faces"] = std::move(faces);
            doc["f_vector"] = span.f_vector;
            doc["max_dim"] = span.max_dim();
            doc["envelope_identity"] = span.envelope_identity;
            Json leaves = Json::array();
            for (const auto& p : span.leaf_embedding) leaves.push_back(vector_json(p.coords()));
            doc["leaf_embedding"] = std::move(leaves);
            if (!job.svg_path.empty()) svg = render_svg(span.projective_complex);
        } else if (job.command == "fvector") {
            if (job.r < 1 || job.n < 1) {
                err << "error: fvector requires --r and --n\n";
                return 2;
            }
            doc["format"] = "tropical-fvector/1";
            doc["r"] = job.r;
            doc["n"] = job.n;
            doc["f_vector"] =
                generic_f_vector(static_cast<std::size_t>(job.r), static_cast<std::size_t>(job.n));
        } else {
            err << "error: unknown command '" << job.command << "'\n";
            return 2;
        }

        write_text(job.output_path, doc.dump(2) + "\n", out);
        if (svg) write_text(job.svg_path, *svg, out);
        return 0;
    } catch (const std::system_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace tropical
