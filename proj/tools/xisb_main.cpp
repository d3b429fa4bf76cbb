#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "xisb/cli_config.hpp"
#include "xisb/theorems.hpp"

using xisb::Complex;

namespace {

using Json = nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Accepts "1.5" or "0.5,14.1" (real,imag).
Complex parse_point(const std::string& text) {
    std::string::size_type comma = text.find(',');
    auto one = [](const std::string& s) {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("not a number: " + s);
        return v;
    };
    if (comma == std::string::npos) return Complex(one(text), 0.0);
    return Complex(one(text.substr(0, comma)), one(text.substr(comma + 1)));
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::fputs(payload.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << payload;
    if (!out) throw std::invalid_argument("write failed: " + path);
}

int cmd_eval(const xisb::RunConfig& cfg, const std::string& fn, const std::string& at) {
    Complex s = parse_point(at);
    if (s.imag() != 0.0 && fn != "xi" && fn != "zeta")
        throw std::invalid_argument(fn + " takes a real argument");
    std::string line;
    if (s.imag() != 0.0) {
        Complex v = (fn == "xi") ? xisb::xi(s) : xisb::zeta(s);
        double err = 1e-12 * (1.0 + std::abs(v));
        line = fmt17(v.real()) + " " + fmt17(v.imag()) + " " + fmt17(err) + "\n";
    } else {
        xisb::FunctionSet fns(cfg);
        xisb::EvalResult r = fns.eval(fn, s.real());
        line = fmt17(r.value) + " " + fmt17(r.err_estimate) + "\n";
    }
    write_output(cfg.out_path, line);
    return 0;
}

int cmd_table(const xisb::RunConfig& cfg, const std::string& fn) {
    xisb::FunctionSet fns(cfg);
    std::vector<double> xs = cfg.grid.knots();
    std::ostringstream out;
    if (cfg.format == "csv") {
        out << "x,value,err_estimate\n";
        for (double x : xs) {
            xisb::EvalResult r = fns.eval(fn, x);
            out << fmt17(x) << ',' << fmt17(r.value) << ',' << fmt17(r.err_estimate) << '\n';
        }
    } else {
        Json root;
        root["fn"] = fn;
        root["k"] = cfg.k;
        root["rows"] = Json::array();
        for (double x : xs) {
            xisb::EvalResult r = fns.eval(fn, x);
            root["rows"].push_back({x, r.value, r.err_estimate});
        }
        out << root.dump(2) << '\n';
    }
    write_output(cfg.out_path, out.str());
    return 0;
}

int cmd_sample(const xisb::RunConfig& cfg) {
    if (cfg.budget && static_cast<std::uint64_t>(cfg.n) > *cfg.budget)
        throw xisb::resource_error("sample count exceeds XISB_BUDGET");
    xisb::DistributionOptions opt;
    if (cfg.contour) opt.contour = cfg.contour;
    if (cfg.tol) opt.quad_tol = *cfg.tol;
    xisb::XiSizeBiased d = xisb::XiSizeBiased::build(cfg.k, opt);
    xisb::SamplerState state(cfg.seed);
    std::vector<double> draws = d.sample(static_cast<size_t>(cfg.n), state);
    std::ostringstream out;
    if (cfg.format == "csv") {
        for (double v : draws) out << fmt17(v) << '\n';
    } else {
        Json root;
        root["k"] = cfg.k;
        root["seed"] = cfg.seed;
        root["samples"] = draws;
        out << root.dump(2) << '\n';
    }
    write_output(cfg.out_path, out.str());
    return 0;
}

int cmd_verify(const xisb::RunConfig& cfg, std::vector<std::string> selection) {
    if (selection.empty()) selection = {"all"};
    std::vector<std::string> ids;
    for (const std::string& s : selection) {
        if (s == "all") {
            const auto& all = xisb::claim_ids();
            ids.insert(ids.end(), all.begin(), all.end());
        } else {
            ids.push_back(s);
        }
    }
    if (cfg.budget && ids.size() > *cfg.budget)
        throw xisb::resource_error("claim selection exceeds XISB_BUDGET");
    xisb::VerifyConfig vc;
    vc.seed = cfg.seed;
    if (cfg.tol) vc.quad_tol = *cfg.tol;
    xisb::ClaimRunner runner(vc);
    xisb::ClaimLedger ledger = runner.run(ids);
    write_output(cfg.out_path, cfg.format == "csv" ? ledger.to_text() : ledger.to_json());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"size-biased laws built from the completed zeta: evaluate, tabulate, "
                 "sample, verify"};
    app.require_subcommand(1);

    xisb::RunConfig cfg;
    std::string fn, at, grid_text, contour_text;
    double tol = 0.0;
    std::vector<std::string> selection;

    if (const char* raw = std::getenv("XISB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0') {
            std::fprintf(stderr, "XISB_BUDGET is not a count: %s\n", raw);
            return 1;
        }
        cfg.budget = v;
    }

    auto add_common = [&](CLI::App* sub, bool wants_grid) {
        sub->add_option("--k", cfg.k, "kernel power k")->check(CLI::Range(1, 8));
        sub->add_option("--format", cfg.format, "csv or json");
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
        sub->add_option("--contour", contour_text, "inversion contour c:T:step");
        sub->add_option("--tol", tol, "quadrature tolerance");
        if (wants_grid) sub->add_option("--grid", grid_text, "grid min:max:n:log|linear");
    };

    CLI::App* eval = app.add_subcommand("eval", "print one function value");
    eval->add_option("fn", fn, "function name")->required();
    eval->add_option("x", at, "evaluation point (re or re,im)")->required();
    add_common(eval, false);

    CLI::App* table = app.add_subcommand("table", "tabulate a function over a grid");
    table->add_option("fn", fn, "function name")->required();
    add_common(table, true);

    CLI::App* sample = app.add_subcommand("sample", "draw reproducible samples");
    sample->add_option("--n", cfg.n, "number of draws");
    sample->add_option("--seed", cfg.seed, "sampler seed");
    add_common(sample, false);

    CLI::App* verify = app.add_subcommand("verify", "run claim checks and write the ledger");
    verify->add_option("selection", selection, "claim ids or 'all'");
    verify->add_option("--seed", cfg.seed, "trial seed");
    add_common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (tol != 0.0) cfg.tol = tol;
        if (!contour_text.empty()) {
            xisb::ContourSpec base = xisb::VkEval::default_spec(cfg.k);
            if (cfg.tol) base.tol = *cfg.tol;
            cfg.contour = xisb::parse_contour(contour_text, base);
        }
        if (!grid_text.empty()) cfg.grid = xisb::parse_grid(grid_text);

        if (eval->parsed()) {
            cfg.command = "eval";
            cfg.validate();
            if (!xisb::FunctionSet::known(fn))
                throw std::invalid_argument("unknown function: " + fn);
            return cmd_eval(cfg, fn, at);
        }
        if (table->parsed()) {
            cfg.command = "table";
            cfg.validate();
            if (!xisb::FunctionSet::known(fn))
                throw std::invalid_argument("unknown function: " + fn);
            return cmd_table(cfg, fn);
        }
        if (sample->parsed()) {
            cfg.command = "sample";
            cfg.validate();
            return cmd_sample(cfg);
        }
        cfg.command = "verify";
        if (verify->count("--seed") == 0) cfg.seed = xisb::VerifyConfig{}.seed;
        // The ledger itself is a JSON document; csv here means the text view.
        if (verify->count("--format") == 0) cfg.format = "json";
        cfg.validate();
        return cmd_verify(cfg, selection);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        // Numeric breakdowns: non-convergence, truncation, domain, budget.
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return 2;
    }
}
