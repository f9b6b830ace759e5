// Command-line driver: encode/decode manifold codes, parameter selection,
// and the bound-verification suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "faber/corpus.hpp"
#include "faber/harness.hpp"
#include "faber/serialize.hpp"
#include "faber/textio.hpp"

using namespace faber;

namespace {

int cmd_encode(int dim, double alpha, int m, int n, const std::string& spec_text,
               const std::string& out_path) {
    FunctionSpec spec = FunctionSpec::parse_record(spec_text);
    if (dim > 0) spec.dim = dim;
    if (alpha > 0.0) spec.alpha = alpha;
    Oracle f = make_function(spec);
    ManifoldCode code = encode(f, m, n, spec.alpha);
    save_manifold(out_path, code);
    std::cout << "encoded " << spec.label() << " (d=" << spec.dim << ", alpha="
              << real_to_string(spec.alpha) << ", m=" << m << ", n=" << n << ")\n"
              << "parameters: " << code.parameter_count() << " (budget bound "
              << budget(m, n, spec.dim).n_mn_bound.to_decimal() << ")\n"
              << "wrote " << out_path << "\n";
    return 0;
}

int cmd_decode(const std::string& code_path, const std::string& points_path,
               const std::string& out_path) {
    ManifoldCode code = load_manifold(code_path);
    std::ifstream in(points_path);
    if (!in) throw std::runtime_error("cannot open '" + points_path + "'");
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    std::string line;
    long rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Point x;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) x.push_back(real_from_string(cell));
        if (static_cast<int>(x.size()) != code.dim)
            throw std::runtime_error("point row has " + std::to_string(x.size()) +
                                     " coordinates, code dimension is " + std::to_string(code.dim));
        out << real_to_string(code.eval(x)) << "\n";
        ++rows;
    }
    std::cout << "decoded " << rows << " points -> " << out_path << "\n";
    return 0;
}

int cmd_params(const std::string& n_text, int dim) {
    BigUint N = BigUint::from_decimal(n_text);
    SelectedParams sel = select_params(N, dim);
    std::cout << "N = " << N.to_decimal() << ", d = " << dim << "\n";
    if (!sel.feasible) {
        std::cout << "infeasible: no m, n >= 1 satisfy the budget split\n";
        return 1;
    }
    std::cout << "m = " << sel.m << ", n = " << sel.n << ", m* = " << sel.m_star << "\n";
    std::cout << "N(d) threshold = " << sel.threshold.to_decimal() << " -> "
              << (sel.meets_threshold ? "met" : "not met") << "\n";
    std::cout << "regime n >= m >= d+1: " << (sel.regime_ok ? "yes" : "no") << "\n";
    for (double a : {0.5, 1.0})
        std::cout << "decay bound (alpha=" << real_to_string(a)
                  << "): " << real_to_string(theorem_upper_bound(N, dim, a)) << "\n";
    return 0;
}

int run_and_write(const std::vector<std::string>& suites, const SuiteConfig& config,
                  const std::string& csv_path, const std::string& text_path) {
    std::vector<ErrorReport> all;
    for (const auto& name : suites) {
        auto reports = run_suite(name, config);
        all.insert(all.end(), reports.begin(), reports.end());
    }
    std::cout << reports_to_console(all);
    if (!csv_path.empty()) {
        std::ofstream os(csv_path);
        os << reports_to_csv(all);
        std::cout << "wrote " << csv_path << "\n";
    }
    if (!text_path.empty()) {
        std::ofstream os(text_path);
        os << reports_to_text(all);
        std::cout << "wrote " << text_path << "\n";
    }
    if (!all_pass(all)) {
        for (const auto& r : all)
            if (r.violation())
                std::cerr << "VIOLATION: " << r.suite << "/" << r.label << " ratio "
                          << real_to_string(r.ratio) << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse hierarchical-hat approximation and quantized manifold codec on [0,1]^d"};
    app.require_subcommand(1);

    auto* enc = app.add_subcommand("encode", "encode a corpus function into a manifold code file");
    int enc_dim = 0, enc_m = 1, enc_n = 1;
    double enc_alpha = 0.0;
    std::string enc_spec, enc_out = "code.txt";
    enc->add_option("--dim", enc_dim, "dimension override");
    enc->add_option("--alpha", enc_alpha, "smoothness override in (0,1]");
    enc->add_option("--m", enc_m, "quantization level")->required();
    enc->add_option("--n", enc_n, "truncation level")->required();
    enc->add_option("--function", enc_spec,
                    "function spec record, e.g. 'family=tensor-smooth d=2 alpha=1 g=poly'")
        ->required();
    enc->add_option("--out", enc_out, "output file");

    auto* dec = app.add_subcommand("decode", "evaluate a manifold code file at points");
    std::string dec_code, dec_points, dec_out = "values.csv";
    dec->add_option("--code", dec_code, "manifold code file")->required();
    dec->add_option("--points", dec_points, "CSV of evaluation points (one d-row per line)")
        ->required();
    dec->add_option("--out", dec_out, "output CSV of decoded values");

    auto* par = app.add_subcommand("params", "select (m, n) for a scalar parameter budget N");
    std::string par_n;
    int par_dim = 2;
    par->add_option("--N", par_n, "parameter budget (decimal integer, any size)")->required();
    par->add_option("--dim", par_dim, "dimension");

    auto* ver = app.add_subcommand("verify", "run one verification suite");
    std::string ver_suite, ver_out;
    SuiteConfig config;
    long long ver_seed = 0;
    ver->add_option("--suite", ver_suite,
                    "one of interp|lemma22|quantizer|covering|decomposition|pipeline|budget|params")
        ->required();
    ver->add_option("--dim", config.dim, "restrict to one dimension");
    ver->add_option("--alpha", config.alpha, "restrict to one smoothness");
    ver->add_option("--m", config.m, "restrict to one level m");
    ver->add_option("--n", config.n, "restrict to one level n");
    ver->add_option("--seed", ver_seed, "sampling seed");
    ver->add_option("--grid-level", config.grid_level, "sup-norm grid level");
    ver->add_option("--random-points", config.random_points, "extra random sample points");
    ver->add_option("--functions", config.functions, "corpus functions per configuration");
    ver->add_option("--out", ver_out, "output prefix (writes PREFIX.csv and PREFIX.txt)");

    auto* rep = app.add_subcommand("report", "run every suite at defaults and write a combined report");
    std::string rep_out = "report.csv";
    rep->add_option("--out", rep_out, "combined CSV path (text table goes to PATH.txt)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enc) return cmd_encode(enc_dim, enc_alpha, enc_m, enc_n, enc_spec, enc_out);
        if (*dec) return cmd_decode(dec_code, dec_points, dec_out);
        if (*par) return cmd_params(par_n, par_dim);
        if (*ver) {
            config.seed = static_cast<std::uint64_t>(ver_seed);
            std::string prefix = ver_out.empty() ? "verify_" + ver_suite : ver_out;
            return run_and_write({ver_suite}, config, prefix + ".csv", prefix + ".txt");
        }
        if (*rep) {
            SuiteConfig defaults;
            return run_and_write({"interp", "lemma22", "quantizer", "covering", "decomposition",
                                  "pipeline", "budget", "params"},
                                 defaults, rep_out, rep_out + ".txt");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
