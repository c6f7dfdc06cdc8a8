// Command-line front end for the tropical convexity library: ingests
// rational matrices, runs hull/complex/duality/tree pipelines and emits
// JSON documents plus optional SVG renderings of planar complexes.
#include <tropical/cli.hpp>

#include <CLI11.hpp>

int main(int argc, char** argv) {
    CLI::App app{"exact tropical (min-plus) convexity toolkit"};
    app.require_subcommand(1);

    tropical::JobSpec job;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("--input", job.input_path, "input matrix file")->required();
        cmd->add_option("--output", job.output_path, "output JSON path (default: stdout)");
        cmd->add_option("--seed", job.seed, "seed for sampling-based runs");
        cmd->add_option("--size-limit", job.size_limit,
                        "enumeration guard on the constraint count");
        cmd->callback([&job, cmd] { job.command = cmd->get_name(); });
    };

    CLI::App* complex_cmd = app.add_subcommand("complex", "cell decomposition of a configuration");
    add_common(complex_cmd, true);
    complex_cmd->add_flag("--bounded-only", job.bounded_only, "keep only bounded cells");
    complex_cmd->add_option("--svg", job.svg_path, "render the complex (three coordinates only)");

    CLI::App* hull_cmd = app.add_subcommand("hull", "minimal generating set of a hull");
    add_common(hull_cmd, true);

    CLI::App* member_cmd = app.add_subcommand("member", "hull membership with certificate");
    add_common(member_cmd, true);
    member_cmd->add_option("--point", job.point, "query point, one CSV row")->required();

    CLI::App* separate_cmd = app.add_subcommand("separate", "membership or separation certificate");
    add_common(separate_cmd, true);
    separate_cmd->add_option("--point", job.point, "query point, one CSV row")->required();

    CLI::App* dual_cmd = app.add_subcommand("dual", "dual subdivision and duality transport");
    add_common(dual_cmd, true);

    CLI::App* generic_cmd = app.add_subcommand("generic", "genericity certificate");
    add_common(generic_cmd, true);

    CLI::App* tree_cmd = app.add_subcommand("tree-check", "tree-metric characterizations");
    add_common(tree_cmd, true);

    CLI::App* span_cmd = app.add_subcommand("tight-span", "injective hull of a finite metric");
    add_common(span_cmd, true);
    span_cmd->add_option("--svg", job.svg_path, "render the complex (three coordinates only)");

    CLI::App* fvector_cmd = app.add_subcommand("fvector", "generic f-vector for given r, n");
    add_common(fvector_cmd, false);
    fvector_cmd->add_option("--r", job.r, "number of generators")->required();
    fvector_cmd->add_option("--n", job.n, "ambient coordinate count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return tropical::run(job);
}
