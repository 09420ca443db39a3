// bondc: solve, certify and generate Weighted c-Bond Cover instances.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bondcover/bench.hpp"
#include "bondcover/driver.hpp"
#include "bondcover/exact.hpp"
#include "bondcover/generate.hpp"
#include "bondcover/io.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bondc::Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw bondc::Error("cannot write " + path);
    out << content;
}

bondc::VertexSet parse_id_list(const std::string& text) {
    bondc::VertexSet out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.insert(std::stoi(item));
    return out;
}

struct SolveFlags {
    int c = 2;
    int t = 0, k = 0, r = 0, model_bound = 0;
    bool reverse_delete = false;
    long long budget = 10'000'000;

    bondc::SolveConfig config() const {
        bondc::SolveConfig cfg = bondc::SolveConfig::for_order(c);
        if (t > 0) cfg.params.t = t;
        if (k > 0) cfg.params.k = k;
        if (r > 0) cfg.params.r = r;
        if (model_bound > 0) cfg.params.model_bound = model_bound;
        cfg.reverse_delete = reverse_delete;
        cfg.budget.max_nodes = budget;
        return cfg;
    }
};

void add_structure_flags(CLI::App* cmd, SolveFlags& f) {
    cmd->add_option("-c,--order", f.c, "bond order c")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--t", f.t, "target contracted minimum edge-degree (default 8c)");
    cmd->add_option("--k", f.k, "heavy-vertex edge-degree threshold (default t)");
    cmd->add_option("--r", f.r, "multipath packing length (default 4k)");
    cmd->add_option("--model-bound", f.model_bound, "small-model size bound (default 16c)");
    cmd->add_option("--budget", f.budget, "exact search node budget");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted c-bond cover toolkit"};
    app.require_subcommand(1);

    SolveFlags solve_flags, exact_flags, verify_flags, detect_flags, structure_flags;
    std::string in_file, solution_text, out_file;

    auto* cmd_solve = app.add_subcommand("solve", "run the primal-dual approximation");
    add_structure_flags(cmd_solve, solve_flags);
    cmd_solve->add_flag("--reverse-delete", solve_flags.reverse_delete, "prune the reconstructed cover");
    bool solve_oracle = false;
    cmd_solve->add_flag("--oracle", solve_oracle, "also certify the optimum exactly");
    cmd_solve->add_option("file", in_file, "instance file")->required();

    auto* cmd_exact = app.add_subcommand("exact", "exact minimum-weight cover");
    cmd_exact->add_option("-c,--order", exact_flags.c, "bond order c")->required()->check(CLI::PositiveNumber);
    cmd_exact->add_option("--budget", exact_flags.budget, "exact search node budget");
    cmd_exact->add_option("file", in_file, "instance file")->required();

    auto* cmd_verify = app.add_subcommand("verify", "check a cover");
    cmd_verify->add_option("-c,--order", verify_flags.c, "bond order c")->required()->check(CLI::PositiveNumber);
    cmd_verify->add_option("--solution", solution_text, "comma-separated vertex ids")->required();
    cmd_verify->add_option("file", in_file, "instance file")->required();

    auto* cmd_detect = app.add_subcommand("detect", "exact theta_c-model detection");
    cmd_detect->add_option("-c,--order", detect_flags.c, "bond order c")->required()->check(CLI::PositiveNumber);
    cmd_detect->add_option("file", in_file, "instance file")->required();

    auto* cmd_structure = app.add_subcommand("structure", "one structure-theorem decomposition step");
    add_structure_flags(cmd_structure, structure_flags);
    cmd_structure->add_option("file", in_file, "instance file")->required();

    auto* cmd_gen = app.add_subcommand("gen", "generate an instance");
    std::string model = "gnp";
    int gen_n = 10, gen_c = 2, gen_mult = 1, gen_planted = 3, gen_extra = 8, gen_core = 4, gen_lobes = 2,
        gen_lobe_size = 3;
    double gen_p = 0.3;
    std::uint64_t gen_seed = 1;
    cmd_gen->add_option("--model", model, "gnp | planted | gadget-chain")->required();
    cmd_gen->add_option("--seed", gen_seed, "random seed")->required();
    cmd_gen->add_option("--n", gen_n, "vertex count");
    cmd_gen->add_option("--p", gen_p, "gnp edge probability");
    cmd_gen->add_option("--mult-max", gen_mult, "gnp maximum multiplicity");
    cmd_gen->add_option("-c,--order", gen_c, "bond order (planted, gadget-chain)");
    cmd_gen->add_option("--planted", gen_planted, "planted cover size");
    cmd_gen->add_option("--extra", gen_extra, "planted extra edges");
    cmd_gen->add_option("--core", gen_core, "gadget-chain core size");
    cmd_gen->add_option("--lobes", gen_lobes, "gadget-chain lobe count");
    cmd_gen->add_option("--lobe-size", gen_lobe_size, "gadget-chain lobe size");
    cmd_gen->add_option("--out", out_file, "output file (default stdout)");

    auto* cmd_bench = app.add_subcommand("bench", "run the solver over a corpus directory");
    std::string corpus_dir, csv_file;
    int bench_c = 2, bench_jobs = 0;
    bool bench_oracle = false, bench_no_timing = false;
    long long bench_budget = 10'000'000;
    cmd_bench->add_option("--corpus", corpus_dir, "directory of .bond files")->required();
    cmd_bench->add_option("--csv", csv_file, "output CSV file (default stdout)");
    cmd_bench->add_option("-c,--order", bench_c, "bond order c")->check(CLI::PositiveNumber);
    cmd_bench->add_flag("--oracle", bench_oracle, "certify optima where the budget allows");
    cmd_bench->add_flag("--no-timing", bench_no_timing, "zero the millis column for byte-stable output");
    cmd_bench->add_option("--jobs", bench_jobs, "worker threads (default hardware)");
    cmd_bench->add_option("--budget", bench_budget, "exact search node budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_solve->parsed()) {
            const auto g = bondc::parse_instance(read_file(in_file));
            const auto cfg = solve_flags.config();
            const auto res = bondc::solve(g, cfg);
            std::optional<bondc::Weight> opt;
            if (solve_oracle) opt = bondc::exact_cover(g, cfg.c, cfg.budget).weight;
            std::cout << bondc::solve_report(g, res, opt).dump(2) << "\n";
            return 0;
        }
        if (cmd_exact->parsed()) {
            const auto g = bondc::parse_instance(read_file(in_file));
            const auto res = bondc::exact_cover(g, exact_flags.c, bondc::SearchBudget{exact_flags.budget});
            nlohmann::json out;
            out["cover"] = std::vector<bondc::Vertex>(res.cover.begin(), res.cover.end());
            out["weight"] = bondc::weight_json(res.weight);
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_verify->parsed()) {
            const auto g = bondc::parse_instance(read_file(in_file));
            const bool ok = bondc::verify_cover(g, verify_flags.c, parse_id_list(solution_text));
            nlohmann::json out;
            out["feasible"] = ok;
            std::cout << out.dump(2) << "\n";
            return ok ? 0 : 1;
        }
        if (cmd_detect->parsed()) {
            const auto g = bondc::parse_instance(read_file(in_file));
            const auto m = bondc::find_theta_model(g, detect_flags.c);
            nlohmann::json out;
            out["found"] = m.has_value();
            if (m) {
                const auto slim = bondc::minimize_model(g, *m);
                out["x_side"] = std::vector<bondc::Vertex>(slim.x_side.begin(), slim.x_side.end());
                out["y_side"] = std::vector<bondc::Vertex>(slim.y_side.begin(), slim.y_side.end());
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_structure->parsed()) {
            const auto g = bondc::parse_instance(read_file(in_file));
            const auto cfg = structure_flags.config();
            const auto outcome = bondc::structure(g, cfg.c, cfg.params, cfg.budget);
            nlohmann::json out;
            if (outcome.is_theta_free()) {
                out["outcome"] = "theta_free";
            } else if (outcome.is_outgrowth()) {
                out["outcome"] = "large_outgrowth";
                out["anchors"] = {outcome.outgrowth().u, outcome.outgrowth().v};
                out["component"] =
                    std::vector<bondc::Vertex>(outcome.outgrowth().component.begin(), outcome.outgrowth().component.end());
            } else if (outcome.is_model()) {
                out["outcome"] = "small_model";
                out["x_side"] = std::vector<bondc::Vertex>(outcome.model().x_side.begin(), outcome.model().x_side.end());
                out["y_side"] = std::vector<bondc::Vertex>(outcome.model().y_side.begin(), outcome.model().y_side.end());
            } else {
                out["outcome"] = "clusters";
                nlohmann::json cl = nlohmann::json::array();
                for (const auto& c : outcome.clusters().clusters())
                    cl.push_back(std::vector<bondc::Vertex>(c.begin(), c.end()));
                out["clusters"] = std::move(cl);
                out["capacity"] = outcome.clusters().capacity();
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_gen->parsed()) {
            std::string body;
            if (model == "gnp") {
                body = bondc::serialize_instance(bondc::generate_gnp(gen_n, gen_p, gen_seed, gen_mult));
            } else if (model == "planted") {
                const auto inst = bondc::generate_planted(gen_n, gen_planted, gen_extra, gen_c, gen_seed);
                std::ostringstream head;
                head << "c planted";
                for (bondc::Vertex v : inst.planted) head << " " << v;
                head << "\n";
                body = head.str() + bondc::serialize_instance(inst.graph);
            } else if (model == "gadget-chain") {
                body = bondc::serialize_instance(
                    bondc::generate_gadget_chain(gen_core, gen_lobes, gen_lobe_size, gen_c, gen_seed));
            } else {
                throw bondc::ValidationError("unknown model '" + model + "'");
            }
            if (out_file.empty())
                std::cout << body;
            else
                write_file(out_file, body);
            return 0;
        }
        if (cmd_bench->parsed()) {
            bondc::BenchOptions opts;
            opts.config = bondc::SolveConfig::for_order(bench_c);
            opts.config.budget.max_nodes = bench_budget;
            opts.oracle = bench_oracle;
            opts.timing = !bench_no_timing;
            opts.jobs = bench_jobs > 0 ? static_cast<unsigned>(bench_jobs) : 0;
            const auto rows = bondc::bench_directory(corpus_dir, opts);
            const std::string csv = bondc::bench_csv(rows);
            if (csv_file.empty())
                std::cout << csv;
            else
                write_file(csv_file, csv);
            return 0;
        }
    } catch (const bondc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
