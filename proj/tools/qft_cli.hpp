/*
Copyright 2026 The qft Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

// Command-line front end. run_cli() is the whole program minus process
// setup, so tests can drive it in-process.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qft/qft.hpp"

namespace qft::cli
{

enum ExitCode : int { ok = 0, usage = 2, domain_error = 3, numerical = 4 };

/** Bad flag value or combination; reported with exit code 2. */
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail
{

inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_real(const std::string& text, const std::string& flag)
{
    const std::string s = trim(text);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
        throw UsageError("--" + flag + ": '" + text + "' is not a finite number");
    return v;
}

inline std::vector<double> parse_reals(const std::string& text, const std::string& flag)
{
    std::vector<double> out;
    for (const std::string& part : split(text, ',')) out.push_back(parse_real(part, flag));
    return out;
}

// "re,im" or a bare real.
inline Complex parse_complex(const std::string& text, const std::string& flag)
{
    const auto v = parse_reals(text, flag);
    if (v.size() == 1) return {v[0], 0.0};
    if (v.size() == 2) return {v[0], v[1]};
    throw UsageError("--" + flag + ": expected re,im");
}

inline double parse_positive_real(const std::string& text, const std::string& flag)
{
    const Complex z = parse_complex(text, flag);
    if (z.imag() != 0.0 || !(z.real() > 0.0)) throw UsageError("--" + flag + " must be a positive real");
    return z.real();
}

inline unsigned worker_count()
{
    const char* env = std::getenv("QFT_THREADS");
    long n = 0;
    if (env && *env) {
        char* end = nullptr;
        n = std::strtol(env, &end, 10);
        if (*end != '\0' || n < 0) n = 0;
    }
    if (n == 0) n = long(std::max(1u, std::thread::hardware_concurrency()));
    return unsigned(n);
}

// Runs f(i) for i in [0, n) on up to `workers` threads; results land by index.
template <class F>
void parallel_for(std::size_t n, unsigned workers, F&& f)
{
    workers = unsigned(std::min<std::size_t>(workers, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < n;) f(i);
        });
    for (auto& t : pool) t.join();
}

// Reads key=value lines; '#' and ';' start comments.
inline std::map<std::string, std::string> read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::map<std::string, std::string> out;
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(n) + ": expected key = value");
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

inline std::string long_name(const std::string& arg)
{
    if (arg == "-o") return "output";
    if (arg.rfind("--", 0) != 0) return {};
    return arg.substr(2, arg.find('=') - 2);
}

// Strips --config, then adds each config key the command line did not set.
// A `command` key supplies the subcommand when none is given.
inline std::vector<std::string> merge_config(std::vector<std::string> args)
{
    std::optional<std::string> path;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 == args.size()) throw UsageError("--config needs a file name");
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (!path) return rest;

    auto cfg = read_config(*path);
    const auto first_positional = std::find_if(rest.begin(), rest.end(), [](const std::string& a) { return a.empty() || a[0] != '-'; });
    if (const auto it = cfg.find("command"); it != cfg.end()) {
        if (first_positional == rest.end()) rest.insert(rest.begin(), it->second);
        cfg.erase(it);
    }
    for (const auto& [key, value] : cfg) {
        const bool given = std::any_of(rest.begin(), rest.end(), [&](const std::string& a) { return long_name(a) == key; });
        if (!given) rest.push_back("--" + key + "=" + value);
    }
    return rest;
}

// Writes to `path`, or to `out` when path is "-".
template <class Body>
void emit(const std::string& path, std::ostream& out, Body&& body)
{
    if (path == "-") {
        body(out);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "' for writing");
    body(f);
    if (!f) throw UsageError("write to '" + path + "' failed");
}

inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= double(x.size());
    my /= double(y.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
        sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
    }
    return sxy / sxx;
}

}  // namespace detail

// ---- group ----------------------------------------------------------------

struct GroupArgs {
    std::string lambda, tau, mu, output{"-"};
};

inline Json group_report(const FNCoords& coords)
{
    const GroupData g = build_group(coords);
    const auto [h1, h2] = coordinate_map(coords);
    Json j;
    j["coords"] = to_json(coords);
    j["generators"] = {{"S", matrix_json(g.S)}, {"Sprime", matrix_json(g.Sprime)},
                       {"T", matrix_json(g.T)}, {"K", matrix_json(g.K)}};
    j["traces"] = {{"S", complex_json(g.S.trace())}, {"T", complex_json(g.T.trace())},
                   {"K", complex_json(g.K.trace())}};
    j["h"] = {{"cosh2_lambda", complex_json(h1)}, {"exp_tau", complex_json(h2)}};
    j["mu"] = complex_json(mu_of(coords));
    j["fuchsian"] = coords.is_fuchsian();
    if (coords.lambda_is_real()) {
        const double lambda = coords.lambda().real();
        j["t"] = complex_json(plumbing_t(coords));
        j["theta0"] = theta0(lambda);
        j["tame"] = is_tame(coords);
        if (coords.theta() != 0.0)
            j["shear"] = complex_json(complex_shear(coords).sigma);
        else
            j["shear"] = nullptr;
    } else {
        j["t"] = nullptr;
        j["theta0"] = nullptr;
        j["tame"] = nullptr;
        j["shear"] = nullptr;
    }
    return j;
}

inline int cmd_group(const GroupArgs& a, std::ostream& out)
{
    const Complex lambda = detail::parse_complex(a.lambda, "lambda");
    if (!(lambda.real() > 0.0)) throw UsageError("--lambda must have a positive real part");
    Complex tau;
    if (!a.mu.empty()) {
        if (lambda.imag() != 0.0) throw UsageError("--mu needs a real --lambda");
        tau = Complex{0.0, kPi} - lambda * detail::parse_complex(a.mu, "mu");
    } else {
        tau = detail::parse_complex(a.tau, "tau");
    }
    if (!(std::abs(tau.imag()) < kPi)) throw UsageError("|Im tau| must be below pi");
    const Json report = group_report(FNCoords(lambda, tau));
    detail::emit(a.output, out, [&](std::ostream& os) { os << dump_json(report) << '\n'; });
    return ok;
}

// ---- ray ------------------------------------------------------------------

struct RayArgs {
    std::string lambda, range{"-1,1"}, side{"top"}, output{"-"};
    long slopes{3};
    double step{0.01}, tol{1e-10};
};

struct RayJob {
    Slope slope;
    RaySide side;
    std::optional<PleatingRay> ray;
    std::string failure;
};

inline std::vector<RaySide> parse_sides(const std::string& s)
{
    if (s == "top") return {RaySide::top};
    if (s == "bottom") return {RaySide::bottom};
    if (s == "both") return {RaySide::top, RaySide::bottom};
    throw UsageError("--side must be top, bottom or both");
}

// Every ray for slopes p/q, q <= max_q, in [lo, hi]: slope-major, then top before bottom.
inline std::vector<RayJob> trace_rays(double lambda, long max_q, double lo, double hi,
                                      const std::vector<RaySide>& sides, const RayOptions& opt)
{
    std::vector<RayJob> jobs;
    for (const Slope& s : enumerate_slopes(max_q, lo, hi))
        for (RaySide side : sides) jobs.push_back({s, side, std::nullopt, {}});
    detail::parallel_for(jobs.size(), detail::worker_count(), [&](std::size_t i) {
        RayJob& job = jobs[i];
        try {
            job.ray = trace_ray(lambda, job.slope, job.side, opt);
        } catch (const Error& e) {
            job.failure = e.what();
        }
    });
    return jobs;
}

inline void write_ray_csv(std::ostream& os, const std::vector<RayJob>& jobs)
{
    os << "p,q,side,re_tau,im_tau,re_tr,im_tr\n";
    for (const RayJob& job : jobs) {
        if (!job.ray) {
            os << "# FAILED " << job.slope.str() << ' ' << job.failure << '\n';
            continue;
        }
        const std::string prefix = std::to_string(job.slope.p()) + ',' + std::to_string(job.slope.q()) + ',' +
                                   to_string(job.side) + ',';
        for (const RaySample& s : job.ray->samples)
            os << prefix << format_real(s.tau.real()) << ',' << format_real(s.tau.imag()) << ','
               << format_real(s.tr.real()) << ',' << format_real(s.tr.imag()) << '\n';
    }
}

inline std::pair<double, double> parse_range(const std::string& text)
{
    const auto v = detail::parse_reals(text, "range");
    if (v.size() != 2 || !(v[0] <= v[1])) throw UsageError("--range must be a,b with a <= b");
    return {v[0], v[1]};
}

inline RayOptions ray_options(double step, double tol)
{
    if (!(step > 0.0) || !(tol > 0.0)) throw UsageError("--step and --tol must be positive");
    RayOptions opt;
    opt.step = step;
    opt.tol = tol;
    return opt;
}

inline int cmd_ray(const RayArgs& a, std::ostream& out)
{
    const double lambda = detail::parse_positive_real(a.lambda, "lambda");
    if (a.slopes < 1) throw UsageError("--slopes must be at least 1");
    const auto [lo, hi] = parse_range(a.range);
    const auto jobs = trace_rays(lambda, a.slopes, lo, hi, parse_sides(a.side), ray_options(a.step, a.tol));
    detail::emit(a.output, out, [&](std::ostream& os) { write_ray_csv(os, jobs); });
    const bool any = std::any_of(jobs.begin(), jobs.end(), [](const RayJob& j) { return j.ray.has_value(); });
    return any ? ok : numerical;
}

// ---- slice ----------------------------------------------------------------

struct SliceArgs {
    std::string lambda, trT, range{"-2,2"}, side{"both"}, output{"-"};
    long slopes{3};
    double step{0.01}, tol{1e-10};
    int px{800};
};

/** Image of tau under the 2 to 1 map tau -> i tr T = 2i cosh(tau/2) coth(lambda). */
inline Complex slice_image(double lambda, Complex tau)
{
    return Complex{0.0, 2.0} * std::cosh(tau / 2.0) / std::tanh(lambda);
}

/** lambda whose Fuchsian basepoint (tau = 0) has trace v: 2 coth(lambda) = v. */
inline double lambda_of_trT(double v)
{
    if (!(v > 2.0)) throw UsageError("--trT must exceed 2");
    return std::atanh(2.0 / v);
}

inline void write_slice_svg(std::ostream& os, double lambda, double lo, double hi,
                            const std::vector<RayJob>& rays, int px)
{
    std::vector<std::vector<Complex>> fuchsian(1), tame(2), paths;
    // Footpoints of slopes in [lo, hi] lie near -2 lambda p/q; the map is even in tau.
    const double reach = 2.0 * lambda * std::max({std::abs(lo), std::abs(hi), 0.5});
    const int n = 400;
    const double th0 = theta0(lambda);
    for (int i = 0; i <= n; ++i) {
        const double x = -reach + 2.0 * reach * i / n;
        if (x >= 0.0) fuchsian[0].push_back(slice_image(lambda, x));
        tame[0].push_back(slice_image(lambda, Complex{x, th0}));
        tame[1].push_back(slice_image(lambda, Complex{x, -th0}));
    }
    for (const RayJob& job : rays) {
        if (!job.ray) continue;
        paths.emplace_back();
        for (const RaySample& s : job.ray->samples) paths.back().push_back(slice_image(lambda, s.tau));
    }

    double x0 = HUGE_VAL, x1 = -HUGE_VAL, y0 = HUGE_VAL, y1 = -HUGE_VAL;
    for (const auto* group : {&fuchsian, &tame, &paths})
        for (const auto& line : *group)
            for (const Complex& w : line) {
                x0 = std::min(x0, w.real());
                x1 = std::max(x1, w.real());
                y0 = std::min(y0, w.imag());
                y1 = std::max(y1, w.imag());
            }
    const double span = std::max({x1 - x0, y1 - y0, 1e-9}) * 1.05;
    const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
    auto px_x = [&](const Complex& w) { return (w.real() - cx) / span * px + 0.5 * px; };
    auto px_y = [&](const Complex& w) { return (cy - w.imag()) / span * px + 0.5 * px; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << px << "\" viewBox=\"0 0 "
       << px << ' ' << px << "\">\n";
    os << "<title>lambda-slice at lambda=" << format_real(lambda) << ", w = i tr T</title>\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    auto polyline = [&](const std::vector<Complex>& line, const char* cls, const char* style) {
        os << "<polyline class=\"" << cls << "\" fill=\"none\" " << style << " points=\"";
        for (std::size_t i = 0; i < line.size(); ++i)
            os << (i ? " " : "") << format_real(px_x(line[i])) << ',' << format_real(px_y(line[i]));
        os << "\"/>\n";
    };
    for (const auto& line : tame) polyline(line, "tame", "stroke=\"gray\" stroke-dasharray=\"4 3\"");
    polyline(fuchsian[0], "fuchsian", "stroke=\"blue\" stroke-width=\"2\"");
    for (const auto& line : paths) polyline(line, "ray", "stroke=\"black\"");
    os << "</svg>\n";
}

inline int cmd_slice(const SliceArgs& a, std::ostream& out)
{
    if (a.lambda.empty() == a.trT.empty()) throw UsageError("give exactly one of --lambda and --trT");
    const double lambda = a.trT.empty() ? detail::parse_positive_real(a.lambda, "lambda")
                                        : lambda_of_trT(detail::parse_real(a.trT, "trT"));
    if (a.slopes < 1) throw UsageError("--slopes must be at least 1");
    if (a.px < 16) throw UsageError("--px must be at least 16");
    const auto [lo, hi] = parse_range(a.range);
    const auto jobs = trace_rays(lambda, a.slopes, lo, hi, parse_sides(a.side), ray_options(a.step, a.tol));
    if (!jobs.empty() && std::none_of(jobs.begin(), jobs.end(), [](const RayJob& j) { return j.ray.has_value(); }))
        throw Error(ErrorCode::ray_escaped, "every ray failed");
    detail::emit(a.output, out, [&](std::ostream& os) { write_slice_svg(os, lambda, lo, hi, jobs, a.px); });
    return ok;
}

// ---- limitset -------------------------------------------------------------

struct LimitsetArgs {
    std::string lambda, tau{"0,0"}, viewport{"-2,2,-2,2"}, px{"512"}, format, output;
    int maxlen{12};
    double eps{1e-3};
};

inline int cmd_limitset(const LimitsetArgs& a, std::ostream& out)
{
    const FNCoords coords(detail::parse_complex(a.lambda, "lambda"), detail::parse_complex(a.tau, "tau"));
    RenderConfig cfg;
    cfg.max_word_length = a.maxlen;
    cfg.contraction_eps = a.eps;
    const auto vp = detail::parse_reals(a.viewport, "viewport");
    if (vp.size() != 4) throw UsageError("--viewport must be re_min,re_max,im_min,im_max");
    cfg.viewport = {vp[0], vp[1], vp[2], vp[3]};
    const auto px = detail::parse_reals(a.px, "px");
    if (px.size() < 1 || px.size() > 2 || px[0] != std::floor(px[0]) || px.back() != std::floor(px.back()))
        throw UsageError("--px must be N or W,H");
    cfg.width = int(px[0]);
    cfg.height = int(px.back());
    cfg.threads = detail::worker_count();
    try {
        cfg.validate();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }

    std::string format = a.format;
    if (format.empty()) {
        const auto dot = a.output.rfind('.');
        format = (dot != std::string::npos && a.output.substr(dot) == ".svg") ? "svg" : "ppm";
    }
    if (format != "ppm" && format != "svg") throw UsageError("--format must be ppm or svg");
    const std::string path =
        a.output.empty() ? limitset_filename(coords.lambda().real(), coords.tau(), format) : a.output;

    const PointSet ps = limit_points(build_group(coords), cfg);
    detail::emit(path, out, [&](std::ostream& os) {
        if (format == "ppm")
            write_ppm(os, rasterize(ps, cfg));
        else
            write_svg(os, ps, cfg);
    });
    return ok;
}

// ---- maskit ---------------------------------------------------------------

struct MaskitArgs {
    std::string mu, lambdas{"0.1,0.01,0.001,0.0001"}, output{"-"};
};

inline Json maskit_report(Complex mu, const std::vector<double>& lambdas)
{
    Json rows = Json::array();
    std::vector<double> errors;
    for (double lambda : lambdas) {
        const double err = maskit_limit_error(lambda, mu);
        errors.push_back(err);
        const auto [lo, hi] = tame_mu_interval(lambda);
        rows.push_back({{"lambda", lambda},
                        {"error", err},
                        {"error_over_lambda", err / lambda},
                        {"tau", complex_json(Complex{0.0, kPi} - lambda * mu)},
                        {"tame_mu_interval", {lo, hi}}});
    }
    const auto [S0, T0] = maskit_generators(mu);
    Json j;
    j["mu"] = complex_json(mu);
    j["rows"] = std::move(rows);
    const bool fit = lambdas.size() >= 2 && std::all_of(errors.begin(), errors.end(), [](double e) { return e > 0.0; });
    if (fit)
        j["slope"] = detail::loglog_slope(lambdas, errors);
    else
        j["slope"] = nullptr;
    j["limit_shear"] = complex_json(Complex{0.0, kPi});
    j["limit"] = {{"S", matrix_json(S0)}, {"T", matrix_json(T0)}};
    return j;
}

inline int cmd_maskit(const MaskitArgs& a, std::ostream& out)
{
    const Complex mu = detail::parse_complex(a.mu, "mu");
    std::vector<double> lambdas = detail::parse_reals(a.lambdas, "lambdas");
    if (lambdas.empty() || std::any_of(lambdas.begin(), lambdas.end(), [](double l) { return !(l > 0.0); }))
        throw UsageError("--lambdas must be positive");
    const Json report = maskit_report(mu, lambdas);
    detail::emit(a.output, out, [&](std::ostream& os) { os << dump_json(report) << '\n'; });
    return ok;
}

// ---- entry ----------------------------------------------------------------

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Complex Fenchel-Nielsen coordinates on quasi-Fuchsian punctured-torus space", "qft"};
    app.require_subcommand(1);
    app.add_option("--config", "key = value file mirroring the flags (flags win; `command` picks the subcommand)");

    GroupArgs ga;
    auto* group = app.add_subcommand("group", "Report generators, traces and invariants as JSON");
    group->add_option("--lambda", ga.lambda, "lambda as re,im")->required();
    auto* tau_opt = group->add_option("--tau", ga.tau, "tau as re,im");
    auto* mu_opt = group->add_option("--mu", ga.mu, "plumbing parameter mu as re,im (tau = i pi - lambda mu)");
    tau_opt->excludes(mu_opt);
    group->add_option("-o,--output", ga.output, "output file, - for stdout");

    RayArgs ra;
    auto* ray = app.add_subcommand("ray", "Trace rational pleating rays as CSV");
    ray->add_option("--lambda", ra.lambda, "real lambda > 0")->required();
    ray->add_option("--slopes", ra.slopes, "largest denominator q");
    ray->add_option("--range", ra.range, "slope interval a,b");
    ray->add_option("--side", ra.side, "top, bottom or both");
    ray->add_option("--step", ra.step, "arclength step");
    ray->add_option("--tol", ra.tol, "corrector tolerance");
    ray->add_option("-o,--output", ra.output, "output file, - for stdout");

    SliceArgs sa;
    auto* slice = app.add_subcommand("slice", "Plot a lambda-slice in the i tr T plane as SVG");
    slice->add_option("--lambda", sa.lambda, "real lambda > 0");
    slice->add_option("--trT", sa.trT, "Fuchsian basepoint trace v = 2 coth(lambda) > 2");
    slice->add_option("--slopes", sa.slopes, "largest denominator q");
    slice->add_option("--range", sa.range, "slope interval a,b");
    slice->add_option("--side", sa.side, "top, bottom or both");
    slice->add_option("--step", sa.step, "arclength step");
    slice->add_option("--tol", sa.tol, "corrector tolerance");
    slice->add_option("--px", sa.px, "image size in pixels");
    slice->add_option("-o,--output", sa.output, "output file, - for stdout");

    LimitsetArgs la;
    auto* limitset = app.add_subcommand("limitset", "Render a limit set as PPM or SVG");
    limitset->add_option("--lambda", la.lambda, "lambda as re,im")->required();
    limitset->add_option("--tau", la.tau, "tau as re,im");
    limitset->add_option("--maxlen", la.maxlen, "maximal word length");
    limitset->add_option("--eps", la.eps, "contraction cutoff");
    limitset->add_option("--viewport", la.viewport, "re_min,re_max,im_min,im_max");
    limitset->add_option("--px", la.px, "N or W,H");
    limitset->add_option("--format", la.format, "ppm or svg (default from the output name, else ppm)");
    limitset->add_option("-o,--output", la.output, "output file, - for stdout (default limset_<lambda>_<retau>_<imtau>.<ext>)");

    MaskitArgs ma;
    auto* maskit = app.add_subcommand("maskit", "Tabulate the degeneration to the Maskit slice as JSON");
    maskit->add_option("--mu", ma.mu, "mu as re,im")->required();
    maskit->add_option("--lambdas", ma.lambdas, "comma-separated positive lambdas");
    maskit->add_option("-o,--output", ma.output, "output file, - for stdout");

    try {
        args = detail::merge_config(std::move(args));
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    try {
        if (*group) return cmd_group(ga, out);
        if (*ray) return cmd_ray(ra, out);
        if (*slice) return cmd_slice(sa, out);
        if (*limitset) return cmd_limitset(la, out);
        return cmd_maskit(ma, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_numerical(e.code()) ? numerical : domain_error;
    }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace qft::cli
