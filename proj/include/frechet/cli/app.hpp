#ifndef FRECHET_CLI_APP_HPP
#define FRECHET_CLI_APP_HPP

// Command-line front end. `run` takes the arguments after the program name
// and writes to the given streams, so it can be driven in-process by tests.
//
// Exit status: 0 success, 1 computation error, 2 usage or parse error,
// 3 refusal of a metric that is defined without an algorithm.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frechet/curve/closed_frechet.hpp"
#include "frechet/curve/free_space.hpp"
#include "frechet/curve/free_space_svg.hpp"
#include "frechet/curve/frechet_distance.hpp"
#include "frechet/curve/io.hpp"
#include "frechet/curve/sampled_metrics.hpp"
#include "frechet/detail/csv.hpp"
#include "frechet/detail/format.hpp"
#include "frechet/divergence/divergences.hpp"
#include "frechet/divergence/io.hpp"
#include "frechet/divergence/sinkhorn.hpp"
#include "frechet/error.hpp"
#include "frechet/gaussian/gaussian.hpp"
#include "frechet/gaussian/io.hpp"
#include "frechet/law/frechet1957.hpp"
#include "frechet/law/io.hpp"
#include "frechet/law/levy.hpp"
#include "frechet/law/transport.hpp"

namespace frechet::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_computation = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_refused = 3;

/// Digits after the decimal point in printed values.
inline constexpr int output_decimals = 12;

/// Default sampling step (absolute) of the sampled curve metrics.
inline constexpr double default_curve_resolution = 1e-3;

/// Numeric options shared by the subcommands. NaN means "metric default".
struct Options {
    std::string format;
    std::string output;
    double tol = default_frechet_tolerance;
    double p = 1.0;
    double resolution = std::numeric_limits<double>::quiet_NaN();
    double eps = std::numeric_limits<double>::quiet_NaN();
    double sigma = 1.0;
    std::size_t shifts = 4;
    int max_iters = SinkhornConfig{}.max_iters;
    double stop_tol = SinkhornConfig{}.stop_tol;
    std::string point_metric = "euclidean";
};

enum class InputKind { curve, law, samples, gaussian, batch, discrete };

using Input = std::variant<Polyline, Law1D, std::vector<double>, GaussianLaw, SampleBatch, DiscreteLawD>;

struct Value {
    Value(double v) : value(v) {}
    Value(double v, std::pair<double, double> b) : value(v), bracket(b) {}

    double value = 0.0;
    std::optional<std::pair<double, double>> bracket;
};

struct Metric {
    std::string name;
    std::string family;  ///< subcommand that owns the metric
    InputKind kind;
    std::vector<std::string> params;
    std::function<Value(const Input&, const Input&, const Options&)> eval;
};

namespace detail {

inline double or_default(double v, double fallback) { return std::isnan(v) ? fallback : v; }

inline SinkhornConfig sinkhorn_config(const Options& o) {
    return SinkhornConfig{or_default(o.eps, SinkhornConfig{}.epsilon), o.max_iters, o.stop_tol};
}

template <typename T>
const T& as(const Input& in) {
    return std::get<T>(in);
}

template <typename T, typename F>
Metric make(std::string name, std::string family, InputKind kind, std::vector<std::string> params, F f) {
    return Metric{std::move(name), std::move(family), kind, std::move(params),
                  [f](const Input& a, const Input& b, const Options& o) { return f(as<T>(a), as<T>(b), o); }};
}

inline Value curve_result(const CurveDistanceResult& r) { return Value{r.value, std::pair{r.lo, r.hi}}; }

}  // namespace detail

/// Every metric reachable from the command line.
inline const std::vector<Metric>& metrics() {
    using detail::make;
    using detail::or_default;
    static const std::vector<Metric> all = [] {
        std::vector<Metric> m;
        const auto curve = InputKind::curve;
        m.push_back(make<Polyline>("frechet", "curve-dist", curve, {"tol"},
                                   [](const Polyline& a, const Polyline& b, const Options& o) {
                                       return detail::curve_result(frechet_distance(a, b, o.tol));
                                   }));
        m.push_back(make<Polyline>("discrete-frechet", "curve-dist", curve, {},
                                   [](const Polyline& a, const Polyline& b, const Options&) {
                                       return Value{discrete_frechet(a, b)};
                                   }));
        m.push_back(make<Polyline>("dtw", "curve-dist", curve, {},
                                   [](const Polyline& a, const Polyline& b, const Options&) {
                                       return Value{dtw(a, b)};
                                   }));
        m.push_back(make<Polyline>("hausdorff", "curve-dist", curve, {"resolution"},
                                   [](const Polyline& a, const Polyline& b, const Options& o) {
                                       return Value{hausdorff(a, b, or_default(o.resolution, default_curve_resolution))};
                                   }));
        m.push_back(make<Polyline>("closed-frechet", "curve-dist", curve, {"tol", "shifts"},
                                   [](const Polyline& a, const Polyline& b, const Options& o) {
                                       return detail::curve_result(closed_frechet(a, b, o.tol, o.shifts));
                                   }));
        m.push_back(make<Polyline>("shortest", "curve-dist", curve, {"resolution"},
                                   [](const Polyline& a, const Polyline& b, const Options& o) {
                                       return Value{shortest_distance(
                                           a, b, or_default(o.resolution, default_curve_resolution))};
                                   }));
        m.push_back(make<Polyline>("maxmin", "curve-dist", curve, {"resolution"},
                                   [](const Polyline& a, const Polyline& b, const Options& o) {
                                       return Value{directed_maxmin(
                                           a, b, or_default(o.resolution, default_curve_resolution))};
                                   }));

        const auto law = InputKind::law;
        m.push_back(make<Law1D>("wasserstein", "law-dist", law, {"p"},
                                [](const Law1D& a, const Law1D& b, const Options& o) {
                                    return Value{wasserstein_p(a, b, o.p)};
                                }));
        m.push_back(make<Law1D>("w1-area", "law-dist", law, {},
                                [](const Law1D& a, const Law1D& b, const Options&) { return Value{w1_cdf_area(a, b)}; }));
        m.push_back(make<Law1D>("winf", "law-dist", law, {},
                                [](const Law1D& a, const Law1D& b, const Options&) { return Value{w_infinity(a, b)}; }));
        m.push_back(make<Law1D>("kolmogorov", "law-dist", law, {},
                                [](const Law1D& a, const Law1D& b, const Options&) { return Value{kolmogorov(a, b)}; }));
        m.push_back(make<Law1D>("levy1", "law-dist", law, {},
                                [](const Law1D& a, const Law1D& b, const Options&) {
                                    return Value{levy_1950_def1(a, b)};
                                }));
        m.push_back(make<Law1D>("levy2", "law-dist", law, {"resolution", "point-metric"},
                                [](const Law1D& a, const Law1D& b, const Options& o) {
                                    return Value{levy_1950_def2(a, b, parse_point_metric(o.point_metric),
                                                                or_default(o.resolution, levy_def2_resolution))};
                                }));
        m.push_back(make<Law1D>("frechet1957", "law-dist", law, {},
                                [](const Law1D& a, const Law1D& b, const Options&) {
                                    return Value{frechet_1957_distance(a, b)};
                                }));
        m.push_back(make<std::vector<double>>("gini", "law-dist", InputKind::samples, {"p"},
                                              [](const std::vector<double>& a, const std::vector<double>& b,
                                                 const Options& o) { return Value{gini_index(a, b, o.p)}; }));

        m.push_back(make<GaussianLaw>("w2", "gauss", InputKind::gaussian, {},
                                      [](const GaussianLaw& a, const GaussianLaw& b, const Options&) {
                                          return Value{gaussian_w2(a, b)};
                                      }));
        m.push_back(make<SampleBatch>("fid", "gauss", InputKind::batch, {},
                                      [](const SampleBatch& a, const SampleBatch& b, const Options&) {
                                          return Value{fid(a, b)};
                                      }));
        m.push_back(make<DiscreteLawD>("gelbrich", "gauss", InputKind::discrete, {},
                                       [](const DiscreteLawD& a, const DiscreteLawD& b, const Options&) {
                                           require_same_dimension(a, b);
                                           auto ma = law_moments(a), mb = law_moments(b);
                                           return Value{gelbrich_bound(ma.mean, ma.cov, mb.mean, mb.cov)};
                                       }));

        const auto disc = InputKind::discrete;
        auto div = [&](std::string name, double (*f)(const DiscreteLawD&, const DiscreteLawD&)) {
            m.push_back(make<DiscreteLawD>(std::move(name), "div", disc, {},
                                           [f](const DiscreteLawD& a, const DiscreteLawD& b, const Options&) {
                                               return Value{f(a, b)};
                                           }));
        };
        div("tv", total_variation);
        div("kl", kl);
        div("js", js);
        div("hellinger", hellinger);
        div("bhattacharyya", bhattacharyya_distance);
        div("energy", energy_distance);
        m.push_back(make<DiscreteLawD>("mmd", "div", disc, {"sigma"},
                                       [](const DiscreteLawD& a, const DiscreteLawD& b, const Options& o) {
                                           return Value{mmd(a, b, KernelSpec::gaussian(o.sigma))};
                                       }));
        m.push_back(make<DiscreteLawD>("sinkhorn", "div", disc, {"eps", "max-iters", "stop-tol"},
                                       [](const DiscreteLawD& a, const DiscreteLawD& b, const Options& o) {
                                           return Value{sinkhorn_divergence(a, b, detail::sinkhorn_config(o))};
                                       }));
        return m;
    }();
    return all;
}

/// Metrics that are defined without an algorithm; asking for them is
/// answered with an explanation and exit status 3.
inline std::optional<std::string> refusal(const std::string& metric) {
    if (metric == "prokhorov")
        return "the Prokhorov distance is defined as an infimum over all closed sets and has no "
               "implemented algorithm here; it is deliberately unimplemented";
    if (metric == "skorokhod")
        return "the Skorokhod distance is defined as an infimum over all time changes and has no "
               "implemented algorithm here; it is deliberately unimplemented";
    return std::nullopt;
}

inline const Metric* find_metric(const std::string& name) {
    for (const auto& m : metrics())
        if (m.name == name)
            return &m;
    return nullptr;
}

inline std::vector<std::string> metric_names(const std::string& family) {
    std::vector<std::string> names;
    for (const auto& m : metrics())
        if (m.family == family)
            names.push_back(m.name);
    return names;
}

namespace detail {

/// Usage problems detected after option parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::vector<double> read_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    auto table = frechet::detail::read_numeric_table(in, true);
    if (table.columns != 1)
        throw ParseError(path + ": sample files hold one value per line");
    std::vector<double> v;
    for (const auto& r : table.rows)
        v.push_back(r[0]);
    return v;
}

inline SampleBatch read_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return read_sample_batch(in);
}

inline Input load(InputKind kind, const std::string& path) {
    switch (kind) {
    case InputKind::curve:
        return read_polyline_csv(path);
    case InputKind::law:
        return read_law(path);
    case InputKind::samples:
        return read_samples(path);
    case InputKind::gaussian:
        return parse_gaussian(frechet::detail::read_file(path));
    case InputKind::batch:
        return read_batch(path);
    case InputKind::discrete:
        return read_discrete_law(path);
    }
    throw ParseError("unknown input kind");
}

inline nlohmann::json number(double v) {
    if (std::isfinite(v))
        return v;
    return frechet::detail::format_fixed(v, 0);
}

inline nlohmann::json params_json(const Metric& m, const Options& o) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& name : m.params) {
        if (name == "tol")
            j[name] = o.tol;
        else if (name == "p")
            j[name] = o.p;
        else if (name == "resolution")
            j[name] = or_default(o.resolution, m.name == "levy2" ? levy_def2_resolution : default_curve_resolution);
        else if (name == "shifts")
            j[name] = o.shifts;
        else if (name == "sigma")
            j[name] = o.sigma;
        else if (name == "eps")
            j[name] = sinkhorn_config(o).epsilon;
        else if (name == "max-iters")
            j[name] = o.max_iters;
        else if (name == "stop-tol")
            j[name] = o.stop_tol;
        else if (name == "point-metric")
            j[name] = o.point_metric;
    }
    return j;
}

inline std::string render_value(const Metric& m, const Value& v, const Options& o) {
    if (o.format == "json") {
        nlohmann::json j{{"metric", m.name}, {"value", number(v.value)}};
        if (v.bracket)
            j["bracket"] = {number(v.bracket->first), number(v.bracket->second)};
        j["params"] = params_json(m, o);
        return j.dump() + "\n";
    }
    return frechet::detail::format_fixed(v.value, output_decimals) + "\n";
}

inline void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.output, std::ios::binary);
    if (!file)
        throw ParseError("cannot write " + o.output);
    file << text;
}

inline void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (o.format == f)
            return;
    std::string list;
    for (const char* f : allowed)
        list += (list.empty() ? "" : ", ") + std::string(f);
    throw UsageError("--format must be one of: " + list);
}

inline const Metric& require_metric(const std::string& family, const std::string& name) {
    const Metric* m = find_metric(name);
    if (m && (family.empty() || m->family == family))
        return *m;
    std::string list;
    for (const auto& n : family.empty() ? std::vector<std::string>{} : metric_names(family))
        list += (list.empty() ? "" : ", ") + n;
    throw UsageError("unknown metric '" + name + "'" + (list.empty() ? "" : " (choose from: " + list + ")"));
}

/// Worker count for `matrix`: FRECHET_THREADS when set, else the hardware
/// concurrency.
inline std::size_t thread_count() {
    if (const char* env = std::getenv("FRECHET_THREADS")) {
        std::string s(env);
        std::size_t used = 0;
        long n = 0;
        try {
            n = std::stol(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || n < 1)
            throw UsageError("FRECHET_THREADS must be an integer >= 1");
        return static_cast<std::size_t>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// All ordered pairs (i, j) evaluated in parallel; the result and the first
/// error (in row-major order) do not depend on scheduling.
inline std::vector<double> pairwise(const Metric& m, const std::vector<Input>& inputs, const Options& o,
                                    std::size_t threads) {
    const std::size_t n = inputs.size();
    std::vector<double> values(n * n, 0.0);
    std::vector<std::exception_ptr> errors(n * n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < n * n; k = next++) {
            try {
                values[k] = m.eval(inputs[k / n], inputs[k % n], o).value;
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < std::min(threads, n * n); ++t)
            pool.emplace_back(work);
        work();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return values;
}

inline std::string render_matrix(const Metric& m, const std::vector<std::string>& names,
                                 const std::vector<double>& values, const Options& o) {
    const std::size_t n = names.size();
    if (o.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < n; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < n; ++j)
                row.push_back(number(values[i * n + j]));
            rows.push_back(row);
        }
        nlohmann::json j{{"metric", m.name}, {"files", names}, {"matrix", rows}, {"params", params_json(m, o)}};
        return j.dump() + "\n";
    }
    std::ostringstream s;
    const bool csv = o.format == "csv-matrix";
    if (csv) {
        s << "file";
        for (const auto& name : names)
            s << ',' << name;
        s << '\n';
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (csv)
            s << names[i] << ',';
        for (std::size_t j = 0; j < n; ++j)
            s << (j ? (csv ? "," : " ") : "") << frechet::detail::format_fixed(values[i * n + j], output_decimals);
        s << '\n';
    }
    return s.str();
}

}  // namespace detail

/// Runs the command line `args` (program name excluded).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distances between curves, probability laws, Gaussians and feature batches."};
    app.name("frechet");
    app.require_subcommand(1, 1);
    app.fallthrough();

    Options o;
    std::string metric, first, second, directory, svg_path;
    app.add_option("--format", o.format, "Output format: plain | json | csv-matrix | svg");
    app.add_option("-o,--output", o.output, "Write the result to this file instead of stdout");

    auto add_pair = [&](CLI::App* sub, const std::string& family) {
        std::string names;
        for (const auto& n : metric_names(family))
            names += (names.empty() ? "" : " | ") + n;
        sub->add_option("metric", metric, names)->required();
        sub->add_option("first", first, "First input file")->required();
        sub->add_option("second", second, "Second input file")->required();
    };
    auto add_numeric = [&](CLI::App* sub) {
        sub->add_option("--tol", o.tol, "Relative bracket tolerance of the continuous Frechet distance");
        sub->add_option("--p,--alpha", o.p, "Order of the Wasserstein distance or Gini index");
        sub->add_option("--resolution", o.resolution,
                        "Sampling step: absolute for curve metrics, relative to the graph extent for levy2");
        sub->add_option("--eps", o.eps, "Regularization of the Sinkhorn divergence");
        sub->add_option("--sigma", o.sigma, "Gaussian kernel bandwidth of mmd");
        sub->add_option("--shifts", o.shifts, "Start-point shifts per edge for closed-frechet");
        sub->add_option("--max-iters", o.max_iters, "Sinkhorn iteration cap");
        sub->add_option("--stop-tol", o.stop_tol, "Sinkhorn stopping tolerance");
        sub->add_option("--point-metric", o.point_metric, "Point distance of levy2: euclidean | taxicab");
    };

    auto* curve = app.add_subcommand("curve-dist", "Distance between two polylines (CSV, one vertex per row)");
    auto* law = app.add_subcommand("law-dist", "Distance between two laws on the line (JSON or sample CSV)");
    auto* gauss = app.add_subcommand("gauss", "Gaussian transport: w2 (Gaussian JSON), fid (batch CSV), gelbrich");
    auto* div = app.add_subcommand("div", "Divergence between two finitely supported laws (JSON)");
    for (auto [sub, family] : {std::pair{curve, "curve-dist"}, std::pair{law, "law-dist"},
                               std::pair{gauss, "gauss"}, std::pair{div, "div"}}) {
        add_pair(sub, family);
        add_numeric(sub);
    }
    auto* freespace = app.add_subcommand("freespace", "Free-space diagram of two polylines as SVG");
    double free_eps = std::numeric_limits<double>::quiet_NaN();
    freespace->add_option("first", first, "First polyline (horizontal axis)")->required();
    freespace->add_option("second", second, "Second polyline (vertical axis)")->required();
    freespace->add_option("--eps", free_eps, "Distance threshold")->required();
    freespace->add_option("--svg", svg_path, "Write the SVG here and print the decision");
    auto* matrix = app.add_subcommand("matrix", "Pairwise distances between all files of a directory");
    matrix->add_option("--metric", metric, "Any metric name of the other subcommands")->required();
    matrix->add_option("directory", directory, "Directory of inputs (sorted by file name)")->required();
    add_numeric(matrix);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "frechet: " << e.what() << "\n";
        return exit_usage;
    }

    if (auto why = refusal(metric)) {
        err << "frechet: " << metric << " is not implemented: " << *why << "\n";
        return exit_refused;
    }

    try {
        if (freespace->parsed()) {
            auto p = read_polyline_csv(first);
            auto q = read_polyline_csv(second);
            if (o.format.empty())
                o.format = svg_path.empty() ? "svg" : "plain";
            detail::require_format(o, {"svg", "plain", "json"});
            if (!svg_path.empty()) {
                std::ofstream file(svg_path, std::ios::binary);
                if (!file)
                    throw ParseError("cannot write " + svg_path);
                file << free_space_svg(p, q, free_eps);
            }
            if (o.format == "svg") {
                detail::emit(free_space_svg(p, q, free_eps), o, out);
                return exit_ok;
            }
            bool reachable = frechet_decision(p, q, free_eps);
            if (o.format == "json")
                detail::emit(nlohmann::json{{"metric", "freespace"},
                                            {"value", reachable},
                                            {"params", {{"eps", free_eps}}}}
                                     .dump() +
                                 "\n",
                             o, out);
            else
                detail::emit(reachable ? "reachable\n" : "blocked\n", o, out);
            return exit_ok;
        }

        if (matrix->parsed()) {
            const Metric& m = detail::require_metric("", metric);
            if (o.format.empty())
                o.format = "csv-matrix";
            detail::require_format(o, {"csv-matrix", "plain", "json"});
            namespace fs = std::filesystem;
            if (!fs::is_directory(directory))
                throw ParseError(directory + " is not a directory");
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(directory))
                if (entry.is_regular_file())
                    files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            if (files.empty())
                throw ParseError(directory + " holds no input files");
            std::vector<std::string> names;
            std::vector<Input> inputs;
            for (const auto& f : files) {
                names.push_back(f.filename().string());
                inputs.push_back(detail::load(m.kind, f.string()));
            }
            auto values = detail::pairwise(m, inputs, o, detail::thread_count());
            detail::emit(detail::render_matrix(m, names, values, o), o, out);
            return exit_ok;
        }

        std::string family = app.get_subcommands().front()->get_name();
        const Metric& m = detail::require_metric(family, metric);
        if (o.format.empty())
            o.format = "plain";
        detail::require_format(o, {"plain", "json"});
        auto a = detail::load(m.kind, first);
        auto b = detail::load(m.kind, second);
        detail::emit(detail::render_value(m, m.eval(a, b, o), o), o, out);
        return exit_ok;
    } catch (const detail::UsageError& e) {
        err << "frechet: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        err << "frechet: ParseError: " << e.what() << "\n";
        return exit_usage;
    } catch (const error& e) {
        err << "frechet: " << e.name() << ": " << e.what() << "\n";
        return exit_computation;
    } catch (const std::exception& e) {
        err << "frechet: " << e.what() << "\n";
        return exit_computation;
    }
}

}  // namespace frechet::cli

#endif  // FRECHET_CLI_APP_HPP
