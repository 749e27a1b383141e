// fracdim command-line front end. Talks to the library exclusively through
// the C API in fracdim/fracdim.h.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracdim/fracdim.h"

using nlohmann::json;

namespace {

struct cli_error {
    int exit_code;
    std::string message;
};

int status_exit_code(fracdim_status st) {
    switch (st) {
        case FRACDIM_ERR_FORMAT: return 3;
        case FRACDIM_ERR_DOMAIN:
        case FRACDIM_ERR_NUMERIC: return 4;
        default: return 2;
    }
}

const char* status_name(fracdim_status st) {
    switch (st) {
        case FRACDIM_OK: return "ok";
        case FRACDIM_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case FRACDIM_ERR_DOMAIN: return "numeric-domain";
        case FRACDIM_ERR_FORMAT: return "file-format";
        case FRACDIM_ERR_GUARD: return "guard";
        case FRACDIM_ERR_IO: return "io";
        case FRACDIM_ERR_NUMERIC: return "non-finite";
    }
    return "unknown";
}

void check(fracdim_status st) {
    if (st == FRACDIM_OK) return;
    throw cli_error{status_exit_code(st),
                    std::string("error (") + status_name(st) + "): " + fracdim_last_error()};
}

using SurfacePtr = std::unique_ptr<fracdim_surface, decltype(&fracdim_surface_destroy)>;

SurfacePtr own(fracdim_surface* s) { return SurfacePtr(s, &fracdim_surface_destroy); }

double sup_abs(const fracdim_surface* s) {
    const double* v = fracdim_surface_values(s);
    const size_t n = static_cast<size_t>(fracdim_surface_nx(s)) * fracdim_surface_ny(s);
    double m = 0.0;
    for (size_t i = 0; i < n; ++i) m = std::max(m, std::abs(v[i]));
    return m;
}

// Shared --in/--fn source options. Exactly one of the two must be given.
struct SurfaceArgs {
    std::string in;
    std::string fn;
    int nx = 129;
    int ny = 129;
    double a = 0.0, b = 1.0, c = 0.0, d = 1.0;
    long seed = 0;

    void attach(CLI::App* cmd, bool input_only = false) {
        cmd->add_option("--in", in, "input surface CSV");
        if (!input_only) {
            cmd->add_option("--fn", fn, "generator spec, e.g. uv-m or monomial:1,1");
            cmd->add_option("--nx", nx, "x nodes (with --fn)")->check(CLI::Range(2, 1000000));
            cmd->add_option("--ny", ny, "y nodes (with --fn)")->check(CLI::Range(2, 1000000));
            cmd->add_option("--a", a, "left x bound");
            cmd->add_option("--b", b, "right x bound");
            cmd->add_option("--c", c, "lower y bound");
            cmd->add_option("--d", d, "upper y bound");
            cmd->add_option("--seed", seed, "reserved for future stochastic generators");
        }
    }

    SurfacePtr load() const {
        if (in.empty() == fn.empty())
            throw cli_error{2, "error (config): give exactly one of --in or --fn"};
        fracdim_surface* s = nullptr;
        if (!in.empty())
            check(fracdim_surface_read_csv(in.c_str(), &s));
        else
            check(fracdim_surface_generate(fn.c_str(), a, b, c, d, nx, ny, &s));
        return own(s);
    }

    json config_echo(const char* command) const {
        json cfg;
        cfg["command"] = command;
        if (!in.empty()) cfg["in"] = in;
        if (!fn.empty()) {
            cfg["fn"] = fn;
            cfg["nx"] = nx;
            cfg["ny"] = ny;
            cfg["a"] = a;
            cfg["b"] = b;
            cfg["c"] = c;
            cfg["d"] = d;
            cfg["seed"] = seed;
        }
        return cfg;
    }
};

void write_text_file(const std::string& path, const std::string& body) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw cli_error{2, "error (io): cannot open '" + tmp + "' for writing"};
        out << body;
        out.flush();
        if (!out) throw cli_error{2, "error (io): write to '" + tmp + "' failed"};
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw cli_error{2, "error (io): cannot rename temp file onto '" + path + "'"};
    }
}

void write_json_file(const std::string& path, const json& doc) { write_text_file(path, doc.dump(2) + "\n"); }

// --- analysis helpers shared by subcommands and `report` --------------------

json boxdim_report(const fracdim_surface* s, int k_min, int k_max) {
    const int n_levels = k_max - k_min + 1;
    std::vector<double> deltas(static_cast<size_t>(n_levels));
    std::vector<long long> counts(static_cast<size_t>(n_levels));
    double slope = 0.0, intercept = 0.0, r2 = 0.0;
    check(fracdim_box_dimension(s, k_min, k_max, deltas.data(), counts.data(), &slope, &intercept, &r2));
    json levels = json::array();
    for (int t = 0; t < n_levels; ++t)
        levels.push_back({{"k", k_min + t}, {"delta", deltas[static_cast<size_t>(t)]}, {"count", counts[static_cast<size_t>(t)]}});
    return json{{"levels", levels}, {"slope", slope}, {"intercept", intercept}, {"r_squared", r2}};
}

std::string boxdim_plot_csv(const json& rep) {
    std::string body = "log_inv_delta,log_count\n";
    char line[80];
    for (const json& level : rep.at("levels")) {
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", std::log(1.0 / level.at("delta").get<double>()),
                      std::log(static_cast<double>(level.at("count").get<long long>())));
        body += line;
    }
    return body;
}

json holder_report(const fracdim_surface* s, int k_min, int k_max) {
    const int n_lags = k_max - k_min + 1;
    std::vector<double> lags(static_cast<size_t>(n_lags));
    std::vector<double> sups(static_cast<size_t>(n_lags));
    int defined = 0;
    double exponent = 0.0, r2 = 0.0;
    check(fracdim_holder_exponent(s, k_min, k_max, lags.data(), sups.data(), &defined, &exponent, &r2));
    json jlags = json::array();
    for (int t = 0; t < n_lags; ++t)
        jlags.push_back({{"h", lags[static_cast<size_t>(t)]}, {"sup_increment", sups[static_cast<size_t>(t)]}});
    json rep{{"lags", jlags}};
    if (defined) {
        rep["exponent"] = exponent;
        rep["r_squared"] = r2;
    } else {
        rep["exponent"] = nullptr;
        rep["r_squared"] = nullptr;
    }
    return rep;
}

// Subsamples with stride 2 per axis (largest first) until the chain-search
// guard is satisfied. Keeps endpoints, so the result is again uniform.
SurfacePtr fit_under_chain_guard(const fracdim_surface* s, int* out_nx, int* out_ny) {
    int nx = fracdim_surface_nx(s);
    int ny = fracdim_surface_ny(s);
    int sx = 1, sy = 1;
    while (static_cast<long long>(nx) * ny > 8192) {
        const bool can_x = (nx - 1) % 2 == 0 && nx >= 3;
        const bool can_y = (ny - 1) % 2 == 0 && ny >= 3;
        if (can_x && (nx >= ny || !can_y)) {
            nx = (nx - 1) / 2 + 1;
            sx *= 2;
        } else if (can_y) {
            ny = (ny - 1) / 2 + 1;
            sy *= 2;
        } else {
            throw cli_error{2, "error (guard): grid too large for the chain search and not halvable"};
        }
    }
    *out_nx = nx;
    *out_ny = ny;
    if (sx == 1 && sy == 1) return SurfacePtr(nullptr, &fracdim_surface_destroy);

    const int full_nx = fracdim_surface_nx(s);
    const double* v = fracdim_surface_values(s);
    std::vector<double> picked(static_cast<size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            picked[static_cast<size_t>(j) * nx + i] =
                v[static_cast<size_t>(j) * sy * full_nx + static_cast<size_t>(i) * sx];
    double bounds[4];
    fracdim_surface_domain(s, bounds);
    fracdim_surface* sub = nullptr;
    check(fracdim_surface_create(picked.data(), nx, ny, bounds[0], bounds[1], bounds[2], bounds[3], &sub));
    return own(sub);
}

json variation_report(const fracdim_surface* s, int refine, json* config) {
    const int nx = fracdim_surface_nx(s);
    const int ny = fracdim_surface_ny(s);

    json lines = json::array();
    auto add_line = [&](char axis, int index) {
        const int len = axis == 'x' ? nx : ny;
        double v = 0.0;
        check(fracdim_line_variation(s, axis, index, 0, len - 1, &v));
        lines.push_back({{"axis", std::string(1, axis)}, {"index", index}, {"variation", v}});
    };
    int rows[3] = {0, ny / 2, ny - 1};
    int cols[3] = {0, nx / 2, nx - 1};
    for (int t = 0; t < 3; ++t)
        if (t == 0 || rows[t] != rows[t - 1]) add_line('x', rows[t]);
    for (int t = 0; t < 3; ++t)
        if (t == 0 || cols[t] != cols[t - 1]) add_line('y', cols[t]);

    int anx = 0, any = 0;
    SurfacePtr sub = fit_under_chain_guard(s, &anx, &any);
    const fracdim_surface* chain_surface = sub ? sub.get() : s;
    if (config) {
        (*config)["arzela_nx"] = anx;
        (*config)["arzela_ny"] = any;
    }
    double lb = 0.0;
    check(fracdim_arzela_lower_bound(chain_surface, &lb));

    // Coarse-to-fine study by stride subsampling of the guarded grid; every
    // coarse chain is also a fine chain, so values are nondecreasing.
    json study = json::array();
    for (int level = refine - 1; level >= 1; --level) {
        const int stride = 1 << level;
        if ((anx - 1) % stride != 0 || (any - 1) % stride != 0) continue;
        const int cnx = (anx - 1) / stride + 1;
        const int cny = (any - 1) / stride + 1;
        if (cnx < 2 || cny < 2) continue;
        const double* v = fracdim_surface_values(chain_surface);
        std::vector<double> picked(static_cast<size_t>(cnx) * cny);
        for (int j = 0; j < cny; ++j)
            for (int i = 0; i < cnx; ++i)
                picked[static_cast<size_t>(j) * cnx + i] =
                    v[static_cast<size_t>(j) * stride * anx + static_cast<size_t>(i) * stride];
        double bounds[4];
        fracdim_surface_domain(chain_surface, bounds);
        fracdim_surface* coarse = nullptr;
        check(fracdim_surface_create(picked.data(), cnx, cny, bounds[0], bounds[1], bounds[2], bounds[3],
                                     &coarse));
        SurfacePtr owned = own(coarse);
        double cv = 0.0;
        check(fracdim_arzela_lower_bound(owned.get(), &cv));
        study.push_back({{"nx", cnx}, {"ny", cny}, {"value", cv}});
    }
    if (refine >= 1) study.push_back({{"nx", anx}, {"ny", any}, {"value", lb}});

    return json{{"lines", lines}, {"arzela_lower_bound", lb}, {"refinement_study", study}};
}

// --- subcommand bodies -------------------------------------------------------

int run_generate(const SurfaceArgs& src, const std::string& out) {
    if (src.fn.empty()) throw cli_error{2, "error (config): generate requires --fn"};
    SurfacePtr s = src.load();
    check(fracdim_surface_write_csv(s.get(), out.c_str()));
    std::printf("generate fn=%s grid=%dx%d out=%s sup_abs=%.6g\n", src.fn.c_str(), fracdim_surface_nx(s.get()),
                fracdim_surface_ny(s.get()), out.c_str(), sup_abs(s.get()));
    return 0;
}

int run_integrate(const SurfaceArgs& src, double g1, double g2, const std::string& out) {
    SurfacePtr f = src.load();
    fracdim_surface* raw = nullptr;
    check(fracdim_mixed_integral(f.get(), g1, g2, &raw));
    SurfacePtr integral = own(raw);
    check(fracdim_surface_write_csv(integral.get(), out.c_str()));
    std::printf("integrate %s order=(%g,%g) grid=%dx%d out=%s sup_abs=%.6g\n",
                src.in.empty() ? src.fn.c_str() : src.in.c_str(), g1, g2, fracdim_surface_nx(integral.get()),
                fracdim_surface_ny(integral.get()), out.c_str(), sup_abs(integral.get()));
    return 0;
}

int run_boxdim(const SurfaceArgs& src, int k_min, int k_max, const std::string& json_path,
               const std::string& csv_path) {
    SurfacePtr s = src.load();
    json rep = boxdim_report(s.get(), k_min, k_max);
    json cfg = src.config_echo("boxdim");
    cfg["kmin"] = k_min;
    cfg["kmax"] = k_max;
    rep["config"] = cfg;
    if (!json_path.empty()) write_json_file(json_path, rep);
    if (!csv_path.empty()) write_text_file(csv_path, boxdim_plot_csv(rep));
    std::printf("boxdim grid=%dx%d k=%d..%d slope=%.6g r2=%.6g\n", fracdim_surface_nx(s.get()),
                fracdim_surface_ny(s.get()), k_min, k_max, rep["slope"].get<double>(),
                rep["r_squared"].get<double>());
    return 0;
}

int run_holder(const SurfaceArgs& src, int k_min, int k_max, const std::string& json_path) {
    SurfacePtr s = src.load();
    json rep = holder_report(s.get(), k_min, k_max);
    json cfg = src.config_echo("holder");
    cfg["kmin"] = k_min;
    cfg["kmax"] = k_max;
    rep["config"] = cfg;
    if (!json_path.empty()) write_json_file(json_path, rep);
    if (rep["exponent"].is_null())
        std::printf("holder grid=%dx%d k=%d..%d exponent=undefined\n", fracdim_surface_nx(s.get()),
                    fracdim_surface_ny(s.get()), k_min, k_max);
    else
        std::printf("holder grid=%dx%d k=%d..%d exponent=%.6g r2=%.6g\n", fracdim_surface_nx(s.get()),
                    fracdim_surface_ny(s.get()), k_min, k_max, rep["exponent"].get<double>(),
                    rep["r_squared"].get<double>());
    return 0;
}

int run_variation(const SurfaceArgs& src, int refine, const std::string& json_path) {
    SurfacePtr s = src.load();
    json cfg = src.config_echo("variation");
    cfg["refine"] = refine;
    json rep = variation_report(s.get(), refine, &cfg);
    rep["config"] = cfg;
    if (!json_path.empty()) write_json_file(json_path, rep);
    std::printf("variation grid=%dx%d arzela_lb=%.6g lines=%zu\n", fracdim_surface_nx(s.get()),
                fracdim_surface_ny(s.get()), rep["arzela_lower_bound"].get<double>(),
                rep["lines"].size());
    return 0;
}

int run_semigroup_check(const SurfaceArgs& src, double g1, double g2, double h1, double h2) {
    if (src.fn.empty() && src.in.empty()) throw cli_error{2, "error (config): give --fn or --in"};
    SurfacePtr f = src.load();
    double defect = 0.0;
    check(fracdim_semigroup_defect(f.get(), g1, g2, h1, h2, &defect));
    fracdim_surface* raw = nullptr;
    check(fracdim_mixed_integral(f.get(), g1 + h1, g2 + h2, &raw));
    SurfacePtr direct = own(raw);
    const double scale = sup_abs(direct.get());
    std::printf("semigroup-check %s order=(%g,%g)+(%g,%g) grid=%dx%d defect=%.6g relative=%.6g\n",
                src.in.empty() ? src.fn.c_str() : src.in.c_str(), g1, g2, h1, h2,
                fracdim_surface_nx(f.get()), fracdim_surface_ny(f.get()), defect,
                scale > 0.0 ? defect / scale : 0.0);
    return 0;
}

int run_report(const SurfaceArgs& src, double g1, double g2, int k_min, int k_max, int refine,
               const std::string& out) {
    SurfacePtr f = src.load();
    json cfg = src.config_echo("report");
    cfg["g1"] = g1;
    cfg["g2"] = g2;
    cfg["kmin"] = k_min;
    cfg["kmax"] = k_max;
    cfg["refine"] = refine;

    json doc;
    json surface;
    surface["sup_abs"] = sup_abs(f.get());
    surface["boxdim"] = boxdim_report(f.get(), k_min, k_max);
    surface["holder"] = holder_report(f.get(), k_min, k_max);
    surface["variation"] = variation_report(f.get(), refine, &cfg);
    doc["surface"] = surface;

    fracdim_surface* raw = nullptr;
    check(fracdim_mixed_integral(f.get(), g1, g2, &raw));
    SurfacePtr integral = own(raw);
    json ji;
    ji["sup_abs"] = sup_abs(integral.get());
    ji["boxdim"] = boxdim_report(integral.get(), k_min, k_max);
    ji["holder"] = holder_report(integral.get(), k_min, k_max);
    ji["variation"] = variation_report(integral.get(), refine, nullptr);
    doc["integral"] = ji;

    doc["config"] = cfg;
    write_json_file(out, doc);
    std::printf("report %s order=(%g,%g) k=%d..%d out=%s\n",
                src.in.empty() ? src.fn.c_str() : src.in.c_str(), g1, g2, k_min, k_max, out.c_str());
    return 0;
}

int apply_thread_env() {
    const char* env = std::getenv("FRACDIM_THREADS");
    if (!env || !*env) return 0;
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (!end || *end != '\0' || n <= 0 || n > 4096) {
        std::fprintf(stderr, "error (config): FRACDIM_THREADS must be a positive integer, got '%s'\n", env);
        return 2;
    }
    fracdim_set_max_threads(static_cast<int>(n));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const int rc = apply_thread_env()) return rc;

    CLI::App app{std::string("fracdim ") + fracdim_version() +
                 " - fractional integrals and fractal dimension of sampled surfaces"};
    app.require_subcommand(1);

    SurfaceArgs gen_src, int_src, box_src, hol_src, var_src, semi_src, rep_src;
    std::string gen_out, int_out, box_json, box_csv, hol_json, var_json, rep_out;
    double int_g1 = 0.5, int_g2 = 0.5;
    double semi_g1 = 0.5, semi_g2 = 0.5;
    std::optional<double> semi_h1, semi_h2;
    double rep_g1 = 0.5, rep_g2 = 0.5;
    int box_kmin = 3, box_kmax = 7, hol_kmin = 2, hol_kmax = 6, rep_kmin = 3, rep_kmax = 7;
    int var_refine = 1, rep_refine = 1;

    CLI::App* gen = app.add_subcommand("generate", "sample a built-in generator onto a grid and write CSV");
    gen_src.attach(gen);
    gen->get_option("--in")->group("");  // generator input only
    gen->add_option("--out", gen_out, "output surface CSV")->required();

    CLI::App* integ = app.add_subcommand("integrate", "mixed fractional integral of a surface");
    int_src.attach(integ);
    integ->add_option("--g1", int_g1, "order in x")->required();
    integ->add_option("--g2", int_g2, "order in y")->required();
    integ->add_option("--out", int_out, "output surface CSV")->required();

    CLI::App* box = app.add_subcommand("boxdim", "box-counting dimension estimate");
    box_src.attach(box);
    box->add_option("--kmin", box_kmin, "coarsest level (cells 2^k per side)");
    box->add_option("--kmax", box_kmax, "finest level");
    box->add_option("--json", box_json, "write the level/slope report here");
    box->add_option("--csv", box_csv, "write plot-ready log-log points here");

    CLI::App* hol = app.add_subcommand("holder", "empirical Holder exponent from dyadic lags");
    hol_src.attach(hol);
    hol->add_option("--kmin", hol_kmin, "smallest k (largest lag is 2^-kmin)");
    hol->add_option("--kmax", hol_kmax, "largest k");
    hol->add_option("--json", hol_json, "write the lag/exponent report here");

    CLI::App* var = app.add_subcommand(
        "variation", "line variations and monotone-chain lower bound (subsamples to 8192 nodes)");
    var_src.attach(var);
    var->add_option("--refine", var_refine, "number of coarse-to-fine study levels");
    var->add_option("--json", var_json, "write the variation report here");

    CLI::App* semi = app.add_subcommand("semigroup-check",
                                        "compare integrating twice against integrating once by the sum");
    semi_src.attach(semi);
    semi->add_option("--g1", semi_g1, "first order in x")->required();
    semi->add_option("--g2", semi_g2, "first order in y")->required();
    semi->add_option("--h1", semi_h1, "second order in x (default --g1)");
    semi->add_option("--h2", semi_h2, "second order in y (default --g2)");

    CLI::App* rep = app.add_subcommand("report", "combined dimension/variation report for f and its integral");
    rep_src.attach(rep);
    rep->add_option("--g1", rep_g1, "order in x");
    rep->add_option("--g2", rep_g2, "order in y");
    rep->add_option("--kmin", rep_kmin, "coarsest level");
    rep->add_option("--kmax", rep_kmax, "finest level");
    rep->add_option("--refine", rep_refine, "variation study levels");
    rep->add_option("--out", rep_out, "output JSON path")->required();

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return run_generate(gen_src, gen_out);
        if (integ->parsed()) return run_integrate(int_src, int_g1, int_g2, int_out);
        if (box->parsed()) return run_boxdim(box_src, box_kmin, box_kmax, box_json, box_csv);
        if (hol->parsed()) return run_holder(hol_src, hol_kmin, hol_kmax, hol_json);
        if (var->parsed()) return run_variation(var_src, var_refine, var_json);
        if (semi->parsed())
            return run_semigroup_check(semi_src, semi_g1, semi_g2, semi_h1.value_or(semi_g1),
                                       semi_h2.value_or(semi_g2));
        if (rep->parsed()) return run_report(rep_src, rep_g1, rep_g2, rep_kmin, rep_kmax, rep_refine, rep_out);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cli_error& e) {
        std::fprintf(stderr, "%s\n", e.message.c_str());
        return e.exit_code;
    }
}
