#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bondcover/driver.hpp"
#include "bondcover/exact.hpp"
#include "bondcover/io.hpp"

namespace bondc {

struct BenchOptions {
    SolveConfig config = SolveConfig::for_order(2);
    bool oracle = false;   // also certify opt via the exact cover search
    bool timing = true;    // emit wall-clock millis; off gives byte-stable CSV
    unsigned jobs = 0;     // 0 = hardware concurrency
};

struct BenchRow {
    std::string instance;
    std::size_t n = 0;
    std::size_t m = 0;
    int c = 0;
    Weight weight = 0;
    std::optional<Weight> opt;
    std::optional<Weight> ratio;
    Weight realized_alpha = 1;
    std::size_t iterations = 0;
    long long millis = 0;
    std::string error;
};

inline BenchRow bench_one(const std::string& name, const WeightedMultigraph& g, const BenchOptions& opts) {
    BenchRow row;
    row.instance = name;
    row.n = g.vertex_count();
    row.m = static_cast<std::size_t>(g.total_multiplicity());
    row.c = opts.config.c;
    const auto start = std::chrono::steady_clock::now();
    try {
        const SolveResult res = solve(g, opts.config);
        row.weight = res.weight;
        row.realized_alpha = res.realized_alpha;
        row.iterations = res.trace.events.size();
        if (opts.oracle) {
            try {
                const CoverResult exact = exact_cover(g, opts.config.c, opts.config.budget);
                row.opt = exact.weight;
                if (exact.weight > 0)
                    row.ratio = res.weight / exact.weight;
                else
                    row.ratio = res.weight == 0 ? Weight(1) : Weight(0);
            } catch (const BudgetError&) {
                // leave opt/ratio empty
            }
        }
    } catch (const Error& e) {
        row.error = e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    if (opts.timing)
        row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return row;
}

// Fans the corpus out across a worker pool; rows come back in corpus order.
inline std::vector<BenchRow> bench(const std::vector<std::pair<std::string, WeightedMultigraph>>& corpus,
                                   const BenchOptions& opts) {
    std::vector<BenchRow> rows(corpus.size());
    unsigned jobs = opts.jobs ? opts.jobs : std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    jobs = std::min<unsigned>(jobs, corpus.empty() ? 1 : static_cast<unsigned>(corpus.size()));
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= corpus.size()) return;
                rows[i] = bench_one(corpus[i].first, corpus[i].second, opts);
            }
        });
    for (auto& th : pool) th.join();
    return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "instance,n,m,c,weight,opt,ratio,realized_alpha,iterations,millis\n";
    for (const BenchRow& r : rows) {
        if (!r.error.empty()) {
            out << r.instance << ",,,,,,,,,error: " << r.error << "\n";
            continue;
        }
        out << r.instance << "," << r.n << "," << r.m << "," << r.c << "," << format_weight(r.weight) << ","
            << (r.opt ? format_weight(*r.opt) : "") << "," << (r.ratio ? format_weight(*r.ratio) : "") << ","
            << format_weight(r.realized_alpha) << "," << r.iterations << "," << r.millis << "\n";
    }
    return out.str();
}

// Runs the solver over every .bond file of the directory in name order.  A
// file that fails to parse becomes an error row; it never aborts the run.
inline std::vector<BenchRow> bench_directory(const std::string& dir, const BenchOptions& opts) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".bond") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<BenchRow> rows(files.size());
    std::vector<std::pair<std::string, WeightedMultigraph>> good;
    std::vector<std::size_t> good_index;
    for (std::size_t i = 0; i < files.size(); ++i) {
        rows[i].instance = files[i].filename().string();
        std::ifstream in(files[i]);
        if (!in) throw Error("cannot open " + files[i].string());
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            good.emplace_back(rows[i].instance, parse_instance(buf.str()));
            good_index.push_back(i);
        } catch (const ParseError& e) {
            rows[i].error = e.what();
        }
    }
    const auto solved = bench(good, opts);
    for (std::size_t j = 0; j < solved.size(); ++j) rows[good_index[j]] = solved[j];
    return rows;
}

}  // namespace bondc
