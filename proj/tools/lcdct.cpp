// Command-line front end: generate exact DCT matrices, run the minimal-angle
// searches, assess transforms under the Markov-1 model, double blocklengths,
// verify the factorized catalog, and run the image compression experiments.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcdct/lcdct.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace lcdct;

namespace {

struct RunConfig {
    std::string subcommand;
    json params;
};

void echo_config(const RunConfig& cfg, const std::string& out_path) {
    json j;
    j["subcommand"] = cfg.subcommand;
    j["params"] = cfg.params;
    std::cerr << "runconfig: " << j.dump() << "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path + ".runconfig.json");
        f << j.dump(2) << "\n";
    }
}

/// Resolve a transform argument: a catalog name, "dct"/"sdct", or a matrix
/// file. Kernels (dyadic files) are normalized; real files are used as-is.
/// n = 0 means "any size" (the caller infers it from the result).
RealMatrix resolve_transform(const std::string& arg, std::size_t n) {
    if (arg == "dct" || arg == "sdct") {
        if (n < 2)
            throw std::runtime_error("transform '" + arg + "' needs --n");
        return arg == "dct" ? exact_dct(n) : sdct(n).c_hat;
    }
    for (const std::string& name : catalog_names())
        if (name == arg) {
            const DyadicMatrix t = compose(catalog(name));
            if (n != 0 && t.rows() != n)
                throw std::runtime_error("transform " + arg + " is " +
                                         std::to_string(t.rows()) + "-point, not " +
                                         std::to_string(n));
            return orthogonalize(t, arg).c_hat;
        }
    if (!fs::exists(arg)) throw std::runtime_error("transform '" + arg + "' is neither a catalog name nor a file");
    if (file_is_dyadic_matrix(arg)) return orthogonalize(load_dyadic_matrix(arg), arg).c_hat;
    return load_real_matrix(arg);
}

int cmd_gen_dct(std::size_t n, const std::string& out) {
    const RealMatrix c = exact_dct(n);
    if (out.empty()) write_matrix(std::cout, c);
    else save_matrix(out, c);
    return 0;
}

int cmd_search(std::size_t n, const std::string& set_name, bool reduced, unsigned workers,
               const std::string& out) {
    const MultiplierSet set = multiplier_set(set_name);
    const RealMatrix c = exact_dct(n);
    const auto t0 = std::chrono::steady_clock::now();
    const SearchResult res = reduced ? reduced_search(c, set, workers)
                                     : greedy_row_search(c, set, workers);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (out.empty()) write_matrix(std::cout, res.t);
    else save_matrix(out, res.t);

    json meta;
    meta["set"] = set.name;
    meta["reduced"] = res.reduced;
    meta["wall_seconds"] = secs;
    json angles = json::array();
    {
        std::ostringstream os;
        for (double a : res.row_angles) {
            os.str("");
            os.precision(12);
            os << std::fixed << a;
            angles.push_back(os.str());
        }
    }
    meta["row_angles_rad"] = angles;
    if (out.empty()) {
        std::cout << meta.dump(2) << "\n";
    } else {
        std::ofstream f(out + ".meta.json");
        f << meta.dump(2) << "\n";
        std::cerr << "search finished in " << secs << " s; kernel written to " << out << "\n";
    }
    return 0;
}

int cmd_assess(const std::string& in, std::size_t n, double rho, const std::string& label,
               const std::string& out) {
    const RealMatrix m = resolve_transform(in, n);
    const MarkovModel model(m.rows(), rho);
    const MeritReport r = assess(m, model, label.empty() ? in : label);
    std::ostringstream os;
    os << merit_csv_header() << "\n" << to_csv_row(r) << "\n";
    if (out.empty()) std::cout << os.str();
    else {
        std::ofstream f(out);
        f << os.str();
    }
    return 0;
}

int cmd_jam(const std::string& in, std::size_t j, double rho, const std::string& out) {
    const DyadicMatrix t = load_dyadic_matrix(in);
    const ScaledTransform s = iterate_scale(t, j, in + "^" + std::to_string(j));
    if (out.empty()) write_matrix(std::cout, s.t_big);
    else save_matrix(out, s.t_big);
    const MarkovModel model(s.t_big.rows(), rho);
    const MeritReport r = assess(s.approx, model);
    std::cerr << merit_csv_header() << "\n" << to_csv_row(r) << "\n";
    return 0;
}

/// Table of before/after costs for every catalog entry.
int cmd_costs_csv(const std::string& out) {
    std::ostringstream os;
    os << "name,before_adds,before_shifts,after_adds,after_shifts,"
          "reduction_adds_pct,reduction_shifts_pct\n";
    for (const std::string& name : catalog_names()) {
        const FactorizedTransform f = catalog(name);
        const ArithmeticCost before = cost(compose(f));
        const ArithmeticCost after = cost_factorized(f);
        os << name << ',' << before.additions << ',' << before.bit_shifts << ','
           << after.additions << ',' << after.bit_shifts << ',';
        os.precision(4);
        os << 100.0 * (1.0 - static_cast<double>(after.additions) /
                                 static_cast<double>(before.additions))
           << ',';
        if (before.bit_shifts == 0) os << 0;
        else os << 100.0 * (1.0 - static_cast<double>(after.bit_shifts) /
                                      static_cast<double>(before.bit_shifts));
        os << '\n';
    }
    if (out.empty()) std::cout << os.str();
    else {
        std::ofstream fo(out);
        fo << os.str();
    }
    return 0;
}

int cmd_verify_fastalg(const std::string& name, double rho, std::uint64_t seed,
                       const std::string& export_dir) {
    const FactorizedTransform f = catalog(name);
    if (!export_dir.empty()) {
        fs::create_directories(export_dir);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            std::ostringstream fname;
            fname << export_dir << "/factor_" << i << ".txt";
            save_matrix(fname.str(), f.factors[i]);
        }
        std::cerr << "exported " << f.factors.size() << " factors to " << export_dir << "\n";
    }
    const DyadicMatrix composed = compose(f);
    const std::size_t n = composed.rows();
    bool ok = true;

    const MultiplierSet set = multiplier_set(f.multiplier_set_name);
    bool in_set = true;
    for (std::size_t i = 0; i < n && in_set; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool found = false;
            for (const Dyadic& d : set.elements) found |= d == composed(i, j);
            if (!found) { in_set = false; break; }
        }
    std::cout << (in_set ? "PASS" : "FAIL") << " entries of " << name << " lie in "
              << f.multiplier_set_name << "\n";
    ok &= in_set;

    const ArithmeticCost before = cost(composed);
    const ArithmeticCost after = cost_factorized(f);
    const bool cost_ok = after == f.declared_cost;
    std::cout << (cost_ok ? "PASS" : "FAIL") << " arithmetic cost: before (" << before.additions
              << " adds, " << before.bit_shifts << " shifts), after (" << after.additions
              << " adds, " << after.bit_shifts << " shifts)\n";
    ok &= cost_ok;

    // factor application against the dense product on seeded random vectors
    std::uint64_t s = seed ? seed : 0x5eedULL;
    const RealMatrix dense = composed.to_real();
    double worst = 0.0;
    std::vector<double> x(n);
    for (int trial = 0; trial < 1000; ++trial) {
        for (auto& v : x) {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            v = static_cast<double>(static_cast<std::int64_t>(s >> 11)) /
                static_cast<double>(1ll << 52) - 1.0;
        }
        const std::vector<double> got = lcdct::apply(f, x);
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j2 = 0; j2 < n; ++j2) acc += dense(i, j2) * x[j2];
            worst = std::max(worst, std::abs(acc - got[i]));
        }
    }
    const bool apply_ok = worst < 1e-12;
    std::cout << (apply_ok ? "PASS" : "FAIL")
              << " factored application vs dense product, max deviation " << worst << "\n";
    ok &= apply_ok;

    // merit row against the published reference values
    const MarkovModel model(n, rho);
    const MeritReport r = assess(orthogonalize(composed, name), model);
    std::string ref_label = name;
    for (auto& ch : ref_label)
        if (ch == 'T') ch = 'C';
    bool merit_ok = false, merit_found = false;
    for (const ReferenceMerit& ref : reference_merits()) {
        if (ref_label != ref.label) continue;
        merit_found = true;
        merit_ok = std::abs(r.epsilon - ref.epsilon) < 1e-3 &&
                   std::abs(r.mse - ref.mse) < 5e-4 &&
                   std::abs(r.coding_gain_db - ref.coding_gain_db) < 1e-3 &&
                   std::abs(r.efficiency_pct - ref.efficiency_pct) < 1e-2 &&
                   std::abs(r.delta_orth - ref.delta_orth) < 1e-3;
    }
    std::cout << ((merit_found && merit_ok) ? "PASS" : "FAIL")
              << " merit row matches the published figures: " << to_csv_row(r) << "\n";
    ok &= merit_found && merit_ok;

    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    return ok ? 0 : 1;
}

int cmd_compress(const std::string& image_path, const std::string& transform, std::size_t n,
                 std::optional<std::size_t> r_opt, unsigned workers, const std::string& out) {
    const GrayImage img = load_pgm(image_path);
    const std::size_t r = r_opt ? *r_opt : (n == 16 ? 50 : n == 32 ? 205 : n == 64 ? 820 : n * n / 5);
    const RealMatrix c = resolve_transform(transform, n);
    if (c.rows() != n)
        throw std::runtime_error("transform size " + std::to_string(c.rows()) +
                                 " does not match --n " + std::to_string(n));
    const GrayImage rec = compress_image(img, CompressionConfig{n, r, c}, workers);
    if (!out.empty()) save_pgm(out, rec);
    const QualityReport q = assess_images(img, rec);
    std::cout << benchmark_csv_header() << "\n";
    BenchmarkRow row{fs::path(image_path).filename().string(), transform, n, r,
                     compression_rate(r, n), q.mse_img, q.psnr_db, q.mssim};
    std::cout << to_csv_row(row) << "\n";
    return 0;
}

std::vector<std::size_t> parse_sweep(const std::string& sweep, std::size_t n) {
    std::vector<std::size_t> rs;
    if (sweep.empty()) return rs;
    std::size_t a = 0, b = 0, step = 1;
    if (std::sscanf(sweep.c_str(), "%zu:%zu:%zu", &a, &b, &step) != 3 || step == 0 || b > n * n)
        throw std::runtime_error("bad --r-sweep, expected a:b:step with b <= N^2");
    for (std::size_t r = a; r <= b; r += step) rs.push_back(r);
    return rs;
}

int cmd_benchmark(const std::string& corpus_dir, std::size_t n, const std::string& transforms_arg,
                  std::optional<std::size_t> r_opt, const std::string& sweep, unsigned workers,
                  const std::string& out, const std::string& ape_out, const std::string& svg_out) {
    std::vector<GrayImage> corpus;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.path().extension() == ".pgm") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
        try {
            corpus.push_back(load_pgm(p.string()));
        } catch (const std::exception& e) {
            std::cerr << "warning: skipping " << p << ": " << e.what() << "\n";
        }
    }
    if (corpus.empty()) throw std::runtime_error("no readable .pgm images in " + corpus_dir);

    std::vector<NamedTransform> ts;
    std::string token;
    std::istringstream ss(transforms_arg);
    while (std::getline(ss, token, ','))
        if (!token.empty()) ts.push_back({token, resolve_transform(token, n)});
    if (ts.empty()) throw std::runtime_error("no transforms given");

    std::vector<std::size_t> rs = parse_sweep(sweep, n);
    if (rs.empty())
        rs.push_back(r_opt ? *r_opt : (n == 16 ? 50 : n == 32 ? 205 : n == 64 ? 820 : n * n / 5));

    const auto rows = benchmark_corpus(corpus, ts, n, rs, workers);
    std::ostringstream csv;
    csv << benchmark_csv_header() << "\n";
    for (const auto& row : rows) csv << to_csv_row(row) << "\n";
    if (out.empty()) std::cout << csv.str();
    else {
        std::ofstream f(out);
        f << csv.str();
    }

    if (!ape_out.empty()) {
        std::ofstream f(ape_out);
        for (const std::string& line : ape_csv(rows)) f << line << "\n";
    }
    if (!svg_out.empty()) {
        std::vector<ChartSeries> series;
        for (const auto& t : ts) {
            ChartSeries s{t.name + " psnr", {}};
            for (const auto& row : rows)
                if (row.transform == t.name)
                    s.points.emplace_back(static_cast<double>(row.r), row.psnr_db);
            series.push_back(std::move(s));
        }
        std::ofstream f(svg_out);
        write_svg_chart(f, series, "corpus mean PSNR vs retained coefficients");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"low-complexity DCT approximation toolkit"};
    app.require_subcommand(1);

    std::size_t n = 16;
    std::string set_name = "d1";
    bool reduced = false;
    double rho = 0.95;
    unsigned workers = 0;
    std::string out, in_path, label, name, image, transform, corpus, sweep, ape_out, svg_out;
    std::optional<std::size_t> r_opt;
    std::uint64_t seed = 0;

    auto* gen = app.add_subcommand("gen-dct", "write the exact N-point DCT matrix");
    gen->add_option("--n", n, "blocklength")->required();
    gen->add_option("--out", out, "output matrix file (stdout if omitted)");

    auto* search = app.add_subcommand("search", "minimal-angle row search");
    search->add_option("--n", n, "blocklength")->required();
    search->add_option("--set", set_name, "multiplier set d1..d6")->required();
    search->add_flag("--reduced", reduced, "abs/sign half-row variant");
    search->add_option("--workers", workers, "worker threads (default: hardware)");
    search->add_option("--out", out, "output kernel file");

    std::size_t doublings = 1;
    std::size_t assess_n = 0;  // 0: take the size from the input
    auto* assess_cmd = app.add_subcommand("assess", "merit figures of a transform");
    assess_cmd->add_option("--in", in_path, "matrix file, catalog name, dct, or sdct")->required();
    assess_cmd->add_option("--n", assess_n, "blocklength (needed for dct/sdct)");
    assess_cmd->add_option("--rho", rho, "Markov correlation coefficient");
    assess_cmd->add_option("--label", label, "row label for the CSV output");
    assess_cmd->add_option("--out", out, "output CSV file (stdout if omitted)");

    auto* jam = app.add_subcommand("jam", "blocklength doubling of a kernel file");
    jam->add_option("--in", in_path, "dyadic kernel file")->required();
    jam->add_option("--j", doublings, "number of doublings")->required();
    jam->add_option("--rho", rho, "Markov correlation coefficient");
    jam->add_option("--out", out, "output kernel file");

    std::string export_dir, costs_csv;
    auto* verify = app.add_subcommand("verify-fastalg", "verify a catalog factorization");
    verify->add_option("--name", name, "catalog name (e.g. T16.5) or 'all'")->required();
    verify->add_option("--rho", rho, "Markov correlation coefficient");
    verify->add_option("--seed", seed, "seed for the random-vector check");
    verify->add_option("--export-dir", export_dir, "write each factor as a matrix text file");
    verify->add_option("--costs-csv", costs_csv, "also write the full cost table CSV");

    auto* comp = app.add_subcommand("compress", "block-transform compression of one image");
    comp->add_option("--image", image, "input PGM (P5)")->required();
    comp->add_option("--transform", transform, "catalog name, dct, sdct, or matrix file")->required();
    comp->add_option("--n", n, "block size")->required();
    comp->add_option("--r", r_opt, "retained zig-zag coefficients (defaults 50/205/820)");
    comp->add_option("--workers", workers, "worker threads");
    comp->add_option("--out", out, "output PGM");

    auto* bench = app.add_subcommand("benchmark", "corpus compression benchmark");
    bench->add_option("--corpus", corpus, "directory of PGM images")->required();
    bench->add_option("--n", n, "block size")->required();
    bench->add_option("--transforms", transform, "comma-separated transform list (first is the APE reference)")
        ->required();
    bench->add_option("--r", r_opt, "single retention level");
    bench->add_option("--r-sweep", sweep, "retention sweep a:b:step");
    bench->add_option("--workers", workers, "worker threads");
    bench->add_option("--out", out, "CSV output file");
    bench->add_option("--ape-out", ape_out, "companion APE CSV");
    bench->add_option("--svg", svg_out, "optional SVG chart");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            echo_config({"gen-dct", {{"n", n}, {"out", out}}}, out);
            return cmd_gen_dct(n, out);
        }
        if (search->parsed()) {
            echo_config({"search",
                         {{"n", n}, {"set", set_name}, {"reduced", reduced},
                          {"workers", workers}, {"out", out}}},
                        out);
            return cmd_search(n, set_name, reduced, workers, out);
        }
        if (assess_cmd->parsed()) {
            echo_config({"assess",
                         {{"in", in_path}, {"n", assess_n}, {"rho", rho}, {"label", label},
                          {"out", out}}},
                        out);
            return cmd_assess(in_path, assess_n, rho, label, out);
        }
        if (jam->parsed()) {
            echo_config({"jam", {{"in", in_path}, {"j", doublings}, {"rho", rho}, {"out", out}}},
                        out);
            return cmd_jam(in_path, doublings, rho, out);
        }
        if (verify->parsed()) {
            echo_config({"verify-fastalg",
                         {{"name", name}, {"rho", rho}, {"seed", seed},
                          {"export_dir", export_dir}, {"costs_csv", costs_csv}}},
                        "");
            if (!costs_csv.empty()) cmd_costs_csv(costs_csv);
            if (name == "all") {
                int worst = 0;
                for (const std::string& entry : catalog_names())
                    worst = std::max(worst, cmd_verify_fastalg(entry, rho, seed, export_dir.empty()
                                       ? export_dir : export_dir + "/" + entry));
                return worst;
            }
            return cmd_verify_fastalg(name, rho, seed, export_dir);
        }
        if (comp->parsed()) {
            echo_config({"compress",
                         {{"image", image}, {"transform", transform}, {"n", n},
                          {"r", r_opt ? json(*r_opt) : json()}, {"workers", workers}, {"out", out}}},
                        out);
            return cmd_compress(image, transform, n, r_opt, workers, out);
        }
        if (bench->parsed()) {
            echo_config({"benchmark",
                         {{"corpus", corpus}, {"n", n}, {"transforms", transform},
                          {"r", r_opt ? json(*r_opt) : json()}, {"r_sweep", sweep},
                          {"workers", workers}, {"out", out}, {"ape_out", ape_out},
                          {"svg", svg_out}}},
                        out);
            return cmd_benchmark(corpus, n, transform, r_opt, sweep, workers, out, ape_out, svg_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
