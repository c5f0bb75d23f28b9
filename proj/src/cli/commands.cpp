#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cohpoly/asymptotics.hpp"
#include "cohpoly/cli.hpp"
#include "cohpoly/recurrence.hpp"
#include "cohpoly/zeros.hpp"

namespace cohpoly::cli {

namespace {

struct Common {
    double alpha = 0.5;
    double beta = 1.5;
    std::string format = "csv";
    std::string out;
    int threads = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_params = true) {
    if (with_params) {
        cmd->add_option("--alpha", c.alpha, "Parameter alpha, 0 <= alpha < beta")->capture_default_str();
        cmd->add_option("--beta", c.beta, "Parameter beta")->capture_default_str();
    }
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    cmd->add_option("--out", c.out, "Output file (default stdout)");
    cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

std::vector<double> to_doubles(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

// Runs fn(i) for i in [0, count) across workers; results keep index order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, int threads, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(count);
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(threads), 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

Cell opt(const std::optional<double>& v) { return v; }

const std::vector<std::string> kEvalColumns = {
    "n", "N", "t", "x", "exact_sign", "exact_log10", "uniform_sign", "uniform_log10", "outer_sign",
    "outer_log10", "inner_sign", "inner_log10", "rel_err_uniform", "rel_err_outer", "rel_err_inner"};

void push_scaled(std::vector<Cell>& row, const std::optional<ScaledReal>& v) {
    if (!v) {
        row.emplace_back();
        row.emplace_back();
        return;
    }
    row.emplace_back(static_cast<double>(v->sign()));
    row.push_back(v->is_zero() ? Cell{} : Cell{v->log10_abs()});
}

std::vector<Cell> eval_row(const EvalReport& r) {
    std::vector<Cell> row = {static_cast<double>(r.n), r.big_n, r.t, r.x};
    push_scaled(row, r.exact);
    push_scaled(row, r.airy_uniform);
    push_scaled(row, r.outer);
    push_scaled(row, r.inner);
    row.push_back(opt(r.rel_err_uniform));
    row.push_back(opt(r.rel_err_outer));
    row.push_back(opt(r.rel_err_inner));
    return row;
}

struct Point {
    std::int64_t n;
    double position;
};

Table eval_table(const Params& p, const std::vector<Point>& points, bool raw, int threads) {
    Table t;
    t.columns = kEvalColumns;
    t.rows = parallel_map<std::vector<Cell>>(points.size(), threads, [&](std::size_t i) {
        const Point& pt = points[i];
        const double t_val = raw ? pt.position / std::sqrt(p.big_n(pt.n)) : pt.position;
        return eval_row(evaluate(p, pt.n, t_val));
    });
    return t;
}

void require_params_n(const Params& p, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (!(p.big_n(n) > 0.0)) throw std::invalid_argument("N = n + beta - 1 must be positive");
}

// "2.5", "2*sqrt(n)", "sqrt(n)".
double parse_sum_x(const std::string& text, std::int64_t n) {
    const std::string tail = "sqrt(n)";
    std::string s;
    for (char ch : text) {
        if (ch != ' ') s += ch;
    }
    if (s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0) {
        std::string head = s.substr(0, s.size() - tail.size());
        double k = 1.0;
        if (!head.empty()) {
            if (head.back() != '*') throw std::invalid_argument("--x: expected k*sqrt(n), got '" + text + "'");
            head.pop_back();
            std::size_t used = 0;
            k = std::stod(head, &used);
            if (used != head.size()) throw std::invalid_argument("--x: bad coefficient in '" + text + "'");
        }
        return k * std::sqrt(static_cast<double>(n));
    }
    std::size_t used = 0;
    const double x = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("--x: not a number: '" + text + "'");
    return x;
}

struct Range {
    double start, stop, step;
};

Range parse_range(const std::string& s) {
    const auto a = s.find(':');
    const auto b = a == std::string::npos ? a : s.find(':', a + 1);
    if (b == std::string::npos) throw std::invalid_argument("--t-range must be start:stop:step");
    Range r{std::stod(s.substr(0, a)), std::stod(s.substr(a + 1, b - a - 1)), std::stod(s.substr(b + 1))};
    if (!(r.step > 0.0) || !(r.stop >= r.start)) throw std::invalid_argument("--t-range needs step > 0 and stop >= start");
    return r;
}

void emit(const Document& doc, Format f, const std::string& path, std::ostream& out) {
    const std::string text = render(doc, f);
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coherent-state orthogonal polynomials: exact evaluation, asymptotics and zeros"};
    app.name("cohpoly");
    app.require_subcommand(1);

    Common c;
    std::int64_t n = -1;
    std::vector<std::int64_t> n_list;
    std::vector<double> t_list;
    std::vector<double> x_list;
    std::string scale = "N-scaled";
    double t_single = 1.0;
    double zc = 1.0;
    std::string table = "histogram";
    std::string sum_x = "2*sqrt(n)";
    std::int64_t n_max = 50;
    std::string t_range;

    auto* eval = app.add_subcommand("eval", "Exact value and asymptotic approximations at given points");
    add_common(eval, c);
    eval->add_option("--n", n, "Degree");
    eval->add_option("--n-list", n_list, "Degrees, comma separated")->delimiter(',');
    eval->add_option("--t", t_list, "Positions, comma separated (t, or x with --scale raw)")->delimiter(',');
    eval->add_option("--x", x_list, "Raw positions x, comma separated")->delimiter(',');
    eval->add_option("--scale", scale, "Position scale")->check(CLI::IsMember({"N-scaled", "raw"}))->capture_default_str();

    auto* conv = app.add_subcommand("convergence", "Error of each formula along a ladder of degrees");
    add_common(conv, c);
    conv->add_option("--n-list", n_list, "Strictly increasing degrees >= 50")->delimiter(',')->required();
    conv->add_option("--t", t_single, "Position t")->required();

    auto* zeros = app.add_subcommand("zeros", "Zeros of phi_n and their rescaled distribution");
    add_common(zeros, c);
    zeros->add_option("--n", n, "Degree >= 2")->required();
    zeros->add_option("--c", zc, "Target ratio n/m")->capture_default_str();
    zeros->add_option("--table", table, "Rows to emit")
        ->check(CLI::IsMember({"histogram", "zeros", "summary"}))
        ->capture_default_str();

    auto* sum = app.add_subcommand("sum-lemma", "Sum identity check away from the oscillatory interval");
    add_common(sum, c, false);
    sum->add_option("--beta", c.beta, "Parameter beta > 0")->capture_default_str();
    sum->add_option("--n", n, "Number of terms");
    sum->add_option("--n-list", n_list, "Numbers of terms, comma separated")->delimiter(',');
    sum->add_option("--x", sum_x, "x as a number or k*sqrt(n)")->capture_default_str();

    auto* herm = app.add_subcommand("hermite-check", "Compare alpha=1/2, beta=3/2 against Hermite polynomials");
    add_common(herm, c, false);
    herm->add_option("--n-max", n_max, "Largest degree")->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "Dense t grid of eval rows");
    add_common(sweep, c);
    sweep->add_option("--n", n, "Degree")->required();
    sweep->add_option("--t-range", t_range, "start:stop:step")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const Format format = c.format == "json" ? Format::json : Format::csv;
        Document doc;
        const auto* cmd = app.get_subcommands().front();
        doc.config.emplace_back("command", cmd->get_name());

        if (cmd == herm) {
            if (n_max < 0) throw std::invalid_argument("--n-max must be non-negative");
            doc.config.emplace_back("alpha", 0.5);
            doc.config.emplace_back("beta", 1.5);
            doc.config.emplace_back("n_max", static_cast<double>(n_max));
            const std::vector<double> grid = {0.3, 1.1, 2.7, 5.0};
            doc.config.emplace_back("x", grid);
            const Params p(0.5, 1.5);
            doc.table.columns = {"x", "max_rel_dev", "n_at_max"};
            const auto rows = parallel_map<std::vector<Cell>>(grid.size(), c.threads, [&](std::size_t i) {
                double worst = 0.0;
                std::int64_t at = 0;
                for (std::int64_t k = 0; k <= n_max; ++k) {
                    const PhiPair e = eval_phi_pair(p, k, grid[i]);
                    const double dev = relative_gap(e.current, hermite_reference(k, grid[i]), e.magnitude());
                    if (dev > worst) {
                        worst = dev;
                        at = k;
                    }
                }
                return std::vector<Cell>{grid[i], worst, static_cast<double>(at)};
            });
            doc.table.rows = rows;
            double worst = 0.0;
            for (const auto& r : rows) worst = std::max(worst, *r[1]);
            doc.summary.emplace_back("max_rel_dev", worst);
            emit(doc, format, c.out, out);
            return kExitOk;
        }

        if (cmd == sum) {
            if (!(c.beta > 0.0)) throw std::invalid_argument("--beta must be positive");
            doc.config.emplace_back("beta", c.beta);
            std::vector<std::int64_t> ns = n_list;
            if (n >= 0) ns.insert(ns.begin(), n);
            if (ns.empty()) throw std::invalid_argument("sum-lemma needs --n or --n-list");
            doc.config.emplace_back("n", to_doubles(ns));
            doc.config.emplace_back("x", sum_x);
            doc.table.columns = {"n", "x", "lhs", "rhs", "gap"};
            std::vector<double> xs;
            for (std::int64_t k : ns) xs.push_back(parse_sum_x(sum_x, k));
            doc.table.rows = parallel_map<std::vector<Cell>>(ns.size(), c.threads, [&](std::size_t i) {
                const SumLemma s = sum_lemma(c.beta, ns[i], xs[i]);
                return std::vector<Cell>{static_cast<double>(ns[i]), xs[i], s.lhs, s.rhs, std::abs(s.gap())};
            });
            doc.summary.emplace_back("rows", static_cast<double>(doc.table.rows.size()));
            emit(doc, format, c.out, out);
            return kExitOk;
        }

        const Params p(c.alpha, c.beta);
        doc.config.emplace_back("alpha", p.alpha());
        doc.config.emplace_back("beta", p.beta());

        if (cmd == eval) {
            std::vector<std::int64_t> ns = n_list;
            if (n >= 0) ns.insert(ns.begin(), n);
            if (ns.empty()) throw std::invalid_argument("eval needs --n or --n-list");
            if (!t_list.empty() && !x_list.empty()) throw std::invalid_argument("give --t or --x, not both");
            const bool raw = !x_list.empty() || scale == "raw";
            const std::vector<double>& positions = x_list.empty() ? t_list : x_list;
            if (positions.empty()) throw std::invalid_argument("eval needs --t or --x");
            for (std::int64_t k : ns) require_params_n(p, k);
            std::vector<Point> points;
            for (std::int64_t k : ns) {
                for (double v : positions) points.push_back({k, v});
            }
            doc.config.emplace_back("n", to_doubles(ns));
            doc.config.emplace_back(raw ? "x" : "t", positions);
            doc.config.emplace_back("scale", raw ? "raw" : "N-scaled");
            doc.table = eval_table(p, points, raw, c.threads);
            doc.summary.emplace_back("rows", static_cast<double>(doc.table.rows.size()));
        } else if (cmd == sweep) {
            require_params_n(p, n);
            const Range r = parse_range(t_range);
            const auto count = static_cast<std::int64_t>(std::floor((r.stop - r.start) / r.step + 1e-9)) + 1;
            std::vector<Point> points;
            for (std::int64_t i = 0; i < count; ++i) points.push_back({n, r.start + static_cast<double>(i) * r.step});
            doc.config.emplace_back("n", static_cast<double>(n));
            doc.config.emplace_back("t_range", std::vector<double>{r.start, r.stop, r.step});
            doc.table = eval_table(p, points, false, c.threads);
            doc.summary.emplace_back("rows", static_cast<double>(doc.table.rows.size()));
        } else if (cmd == conv) {
            for (std::size_t i = 0; i < n_list.size(); ++i) {
                if (n_list[i] < 50) throw std::invalid_argument("--n-list entries must be >= 50");
                if (i > 0 && n_list[i] <= n_list[i - 1]) throw std::invalid_argument("--n-list must be strictly increasing");
            }
            doc.config.emplace_back("n_list", to_doubles(n_list));
            doc.config.emplace_back("t", t_single);
            const auto pts = parallel_map<ConvergencePoint>(n_list.size(), c.threads, [&](std::size_t i) {
                return convergence_point(p, n_list[i], t_single);
            });
            doc.table.columns = {"n", "N", "t", "t_eval", "err_uniform", "err_outer", "err_inner",
                                 "ratio_uniform", "ratio_outer", "ratio_inner"};
            const auto ratio = [](const std::optional<double>& prev, const std::optional<double>& cur) -> Cell {
                if (!prev || !cur || *cur == 0.0) return {};
                return *prev / *cur;
            };
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const ConvergencePoint& q = pts[i];
                std::vector<Cell> row = {static_cast<double>(q.n), q.big_n, q.t, q.t_eval,
                                         q.err_uniform, q.err_outer, q.err_inner};
                if (i == 0) {
                    row.insert(row.end(), 3, Cell{});
                } else {
                    row.push_back(ratio(pts[i - 1].err_uniform, q.err_uniform));
                    row.push_back(ratio(pts[i - 1].err_outer, q.err_outer));
                    row.push_back(ratio(pts[i - 1].err_inner, q.err_inner));
                }
                doc.table.rows.push_back(std::move(row));
            }
            doc.summary.emplace_back("rows", static_cast<double>(doc.table.rows.size()));
        } else if (cmd == zeros) {
            if (n < 2) throw std::invalid_argument("zeros needs --n >= 2");
            if (!(zc > 0.0)) throw std::invalid_argument("--c must be positive");
            const ZeroReport z = zero_report(p, n, zc, c.threads);
            doc.config.emplace_back("n", static_cast<double>(n));
            doc.config.emplace_back("c", zc);
            doc.config.emplace_back("table", table);
            doc.summary.emplace_back("n", static_cast<double>(z.n));
            doc.summary.emplace_back("m", static_cast<double>(z.m));
            doc.summary.emplace_back("c", z.c);
            doc.summary.emplace_back("ks", z.ks);
            doc.summary.emplace_back("min_rescaled", z.rescaled.front());
            doc.summary.emplace_back("max_rescaled", z.rescaled.back());
            if (table == "histogram") {
                doc.table.columns = {"bin", "center", "count", "model_density", "empirical_density"};
                const double width = (z.histogram.hi - z.histogram.lo) / kHistogramBins;
                for (int k = 0; k < kHistogramBins; ++k) {
                    const auto u = static_cast<std::size_t>(k);
                    const double count = static_cast<double>(z.histogram.counts[u]);
                    doc.table.rows.push_back({static_cast<double>(k), z.histogram.centers[u], count,
                                              z.histogram.model_density[u],
                                              count / (static_cast<double>(z.n) * width)});
                }
            } else if (table == "zeros") {
                doc.table.columns = {"index", "zero", "rescaled"};
                for (std::size_t i = 0; i < z.zeros.size(); ++i) {
                    doc.table.rows.push_back({static_cast<double>(i), z.zeros[i], z.rescaled[i]});
                }
            } else {
                doc.table.columns = {"n", "m", "c", "ks", "min_rescaled", "max_rescaled"};
                doc.table.rows.push_back({static_cast<double>(z.n), static_cast<double>(z.m), z.c, z.ks,
                                          z.rescaled.front(), z.rescaled.back()});
            }
        }
        emit(doc, format, c.out, out);
        return kExitOk;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
}

}  // namespace cohpoly::cli
