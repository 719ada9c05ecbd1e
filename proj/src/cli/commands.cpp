#include "ghost/cli.hpp"

#include "ghost/approximant.hpp"
#include "ghost/catalog.hpp"
#include "ghost/errors.hpp"
#include "ghost/fourier.hpp"
#include "ghost/linrep.hpp"
#include "ghost/measure.hpp"
#include "ghost/numeric.hpp"
#include "ghost/sequence.hpp"
#include "ghost/table.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace ghost {

namespace {

struct RunConfig {
    std::string catalog;
    std::vector<std::string> params;
    std::string n;
    std::optional<unsigned> region;
    unsigned level = 12;
    std::size_t grid = 1024;
    std::string t_range = "1..16";
    std::string mode = "limit";
    double tol = 1e-12;
    std::string format = "csv";
    std::string output;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string bits;
    bool bits_given = false;
    unsigned depth = 40;
    unsigned n_max = 10;
    unsigned sweep = 5;
    unsigned count = 100;
};

mpz_class parse_integer(const std::string& s, const char* what) {
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) {
        throw DomainError(std::string(what) + " must be an integer, got '" + s + "'");
    }
    return z;
}

AffineParams resolve_params(const RunConfig& cfg) {
    if (!cfg.catalog.empty() && !cfg.params.empty()) {
        throw DomainError("give either --catalog or --params, not both");
    }
    if (!cfg.catalog.empty()) {
        return catalog_lookup(cfg.catalog).params;
    }
    if (cfg.params.empty()) {
        throw DomainError("one of --catalog NAME or --params A0 A1 b0 b1 [f1] is required");
    }
    std::vector<mpz_class> v;
    for (const auto& s : cfg.params) {
        v.push_back(parse_integer(s, "parameter"));
    }
    return AffineParams::make(v[0], v[1], v[2], v[3], v.size() == 5 ? v[4] : mpz_class(1));
}

std::int64_t parse_i64(std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DomainError("bad integer '" + std::string(s) + "' in --t");
    }
    return v;
}

// "a..b", "a" or a comma-separated list of those.
std::vector<std::int64_t> parse_t_values(const std::string& spec) {
    std::vector<std::int64_t> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_i64(item));
            continue;
        }
        const std::int64_t lo = parse_i64(std::string_view(item).substr(0, dots));
        const std::int64_t hi = parse_i64(std::string_view(item).substr(dots + 2));
        if (hi < lo) {
            throw DomainError("empty range '" + item + "' in --t");
        }
        if (hi - lo >= (std::int64_t{1} << 24)) {
            throw ResourceError("--t range '" + item + "' has more than 2^24 values");
        }
        for (std::int64_t t = lo; t <= hi; ++t) {
            out.push_back(t);
        }
    }
    if (out.empty()) {
        throw DomainError("--t is empty");
    }
    return out;
}

// Evaluates job(k) for k < count on `threads` workers; results keep their index.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned threads, F job) {
    std::vector<T> out(count);
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t k = 0; k < count; ++k) {
            out[k] = job(k);
        }
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t k = w; k < count; k += threads) {
                    out[k] = job(k);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

void emit(const RunConfig& cfg, const Table& t, std::ostream& out) {
    const OutputFormat format = parse_format(cfg.format);
    if (cfg.output.empty()) {
        write_table(out, t, format);
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
        throw IoError("cannot open '" + cfg.output + "' for writing");
    }
    write_table(file, t, format);
    file.flush();
    if (!file) {
        throw IoError("failed writing '" + cfg.output + "'");
    }
}

std::string format_short(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5g", x);
    return buf;
}

std::string_view band_name(RatioBand b) {
    switch (b) {
    case RatioBand::Zero: return "0";
    case RatioBand::One: return "1";
    case RatioBand::Between: return "(0,1)";
    }
    return "?";
}

std::string kind_label(const LebesgueClass& c) {
    std::string s(to_string(c.kind));
    if (c.label == CaseLabel::k2D) {
        s += "(dyadic)";
    } else if (c.label == CaseLabel::k1C) {
        s += "(delta-at-0)";
    }
    return s;
}

void cmd_eval(const RunConfig& cfg, std::ostream& out) {
    std::optional<mpz_class> n;
    if (!cfg.n.empty()) {
        n = parse_integer(cfg.n, "n");
        if (*n < 1) {
            throw DomainError("n must be >= 1");
        }
    }
    if (!n && !cfg.region) {
        throw DomainError("eval needs --n or --region");
    }
    const AffineParams p = resolve_params(cfg);
    if (n) {
        out << eval_f(p, *n).get_str() << '\n';
    }
    if (cfg.region) {
        const auto values = eval_region(p, *cfg.region, RegionLimits::from_environment());
        for (std::size_t k = 0; k < values.size(); ++k) {
            out << (k ? "," : "") << values[k].get_str();
        }
        out << '\n';
    }
}

void cmd_classify(const RunConfig& cfg, std::ostream& out) {
    const AffineParams p = resolve_params(cfg);
    const LebesgueClass c = classify(p);
    out << to_string(c.label) << ' ' << kind_label(c);
    // Below A = 2 the ghost measure is Lebesgue measure whatever the radii say.
    if (c.label != CaseLabel::k2A) {
        out << " log_ratio=" << format_short(spectral_diagnostic(p).log_ratio);
    }
    out << '\n';
}

void cmd_cdf(const RunConfig& cfg, std::ostream& out) {
    const AffineParams p = resolve_params(cfg);
    const Approximant comb = build_comb(p, cfg.level, RegionLimits::from_environment());
    Table t{{"x", "F"}, {}};
    for (const auto& s : cdf_series(comb, cfg.grid)) {
        t.add_row({Cell::number(s.x), Cell::number(to_double(s.value))});
    }
    emit(cfg, t, out);
}

void cmd_fourier(const RunConfig& cfg, std::ostream& out) {
    if (!(cfg.tol > 0.0)) {
        throw DomainError("--tol must be positive");
    }
    const AffineParams p = resolve_params(cfg);
    const auto ts = parse_t_values(cfg.t_range);
    std::optional<Approximant> comb;
    if (cfg.mode == "direct") {
        comb = build_comb(p, cfg.level, RegionLimits::from_environment());
    } else if (cfg.mode != "limit" && cfg.mode != "recursive") {
        throw DomainError("unknown --mode '" + cfg.mode + "' (expected limit, recursive or direct)");
    }
    const auto values = parallel_map<CoeffValue>(ts.size(), cfg.threads, [&](std::size_t k) {
        if (cfg.mode == "limit") {
            return coeff_limit(p, ts[k], cfg.tol);
        }
        if (cfg.mode == "recursive") {
            return CoeffValue{coeff_recursive(p, cfg.level, ts[k]), 0.0, cfg.level};
        }
        return CoeffValue{direct_fourier(*comb, ts[k]), 0.0, cfg.level};
    });
    Table t{{"t", "re", "im", "abs", "tail_bound"}, {}};
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const auto& v = values[k];
        t.add_row({Cell::integer(ts[k]), Cell::number(v.value.real()), Cell::number(v.value.imag()),
                   Cell::number(std::abs(v.value)), Cell::number(v.tail_bound)});
    }
    emit(cfg, t, out);
}

void cmd_wiener(const RunConfig& cfg, std::ostream& out) {
    const AffineParams p = resolve_params(cfg);
    const WienerLimits limits = WienerLimits::from_environment();
    Table t{{"N", "W"}, {}};
    for (unsigned n = 0; n <= cfg.level; ++n) {
        t.add_row({Cell::integer(n), Cell::number(wiener_average(p, n, cfg.threads, limits))});
    }
    emit(cfg, t, out);
}

void cmd_density(const RunConfig& cfg, std::ostream& out) {
    const AffineParams p = resolve_params(cfg);
    Table t{{"x", "g", "tail_bound"}, {}};
    if (cfg.bits_given) {
        const Bits bits = parse_bits(cfg.bits);
        const DensityValue v = density(p, bits);
        t.add_row({Cell::number(to_double(bits_value(bits))), Cell::number(v.value),
                   Cell::number(v.tail_bound)});
    } else {
        const auto grid = density_grid(p, cfg.depth, RegionLimits::from_environment());
        // Every grid point is truncated after `depth` digits.
        const double tail = density(p, Bits(cfg.depth, 0)).tail_bound;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            t.add_row({Cell::number(std::ldexp(static_cast<double>(k), -static_cast<int>(cfg.depth))),
                       Cell::number(grid[k]), Cell::number(tail)});
        }
    }
    emit(cfg, t, out);
}

void cmd_interval(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.bits_given) {
        throw DomainError("interval needs --bits");
    }
    const AffineParams p = resolve_params(cfg);
    const DyadicInterval e{parse_bits(cfg.bits)};
    const mpq_class mu = interval_measure(p, e);
    Table t{{"bits", "N", "measure", "measure_exact", "approximant", "difference"}, {}};
    const unsigned first = static_cast<unsigned>(e.depth());
    const RegionLimits limits = RegionLimits::from_environment();
    for (unsigned n = first; n <= std::max(first, cfg.level); ++n) {
        const mpq_class mass = interval_mass(build_comb(p, n, limits), e);
        t.add_row({Cell::string(cfg.bits), Cell::integer(n), Cell::number(to_double(mu)),
                   Cell::string(to_string(mu)), Cell::number(to_double(mass)),
                   Cell::number(to_double(mu - mass))});
    }
    emit(cfg, t, out);
}

void cmd_points(const RunConfig& cfg, std::ostream& out) {
    const AffineParams p = resolve_params(cfg);
    Table t{{"n_max", "partial", "partial_exact", "tail_exact", "closed_total"}, {}};
    for (unsigned n = 0; n <= cfg.n_max; ++n) {
        const PointMassTotal m = point_mass_total(p, n);
        t.add_row({Cell::integer(n), Cell::number(to_double(m.partial)), Cell::string(to_string(m.partial)),
                   Cell::string(to_string(m.tail)), Cell::string(to_string(m.closed_total))});
    }
    emit(cfg, t, out);
}

void cmd_jsr_table(const RunConfig& cfg, std::ostream& out) {
    if (cfg.sweep > 64) {
        throw ResourceError("--sweep is capped at 64");
    }
    Table t{{"A0", "A1", "b0", "b1", "case", "kind", "rho", "rho_star", "log_ratio", "band"}, {}};
    const unsigned k = cfg.sweep;
    for (unsigned a0 = 0; a0 <= k; ++a0) {
        for (unsigned a1 = 0; a1 <= k; ++a1) {
            for (unsigned b0 = 0; b0 <= k; ++b0) {
                for (unsigned b1 = 0; b1 <= k; ++b1) {
                    if (a0 + a1 + b0 + b1 == 0) {
                        continue;
                    }
                    const AffineParams p = AffineParams::make(a0, a1, b0, b1);
                    const LebesgueClass c = classify(p);
                    const SpectralDiagnostic d = spectral_diagnostic(p);
                    t.add_row({Cell::integer(a0), Cell::integer(a1), Cell::integer(b0), Cell::integer(b1),
                               Cell::string(std::string(to_string(c.label))), Cell::string(kind_label(c)),
                               Cell::string(d.rho.get_str()), Cell::string(d.rho_star.get_str()),
                               Cell::number(d.log_ratio), Cell::string(std::string(band_name(d.band)))});
                }
            }
        }
    }
    emit(cfg, t, out);
}

// mu(E_j(x))/lambda(E_j(x)) along --bits, or at --depth for --count seeded fair-coin strings.
void cmd_ratio(const RunConfig& cfg, std::ostream& out) {
    const AffineParams p = resolve_params(cfg);
    Table t{{"string", "depth", "log_ratio", "ratio"}, {}};
    if (cfg.bits_given) {
        for (const auto& r : ratio_sequence(p, parse_bits(cfg.bits))) {
            t.add_row({Cell::integer(0), Cell::integer(r.depth), Cell::number(r.log_ratio),
                       Cell::number(r.ratio)});
        }
    } else {
        std::mt19937_64 rng(cfg.seed);
        std::bernoulli_distribution coin(0.5);
        for (unsigned s = 0; s < cfg.count; ++s) {
            Bits bits(cfg.depth);
            for (auto& b : bits) {
                b = coin(rng) ? 1 : 0;
            }
            const RatioPoint r = ratio_sequence(p, bits).back();
            t.add_row({Cell::integer(s), Cell::integer(r.depth), Cell::number(r.log_ratio),
                       Cell::number(r.ratio)});
        }
    }
    emit(cfg, t, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Affine 2-regular sequences and their ghost measures", "ghostctl"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto with_params = [&](CLI::App* sub) {
        auto* cat = sub->add_option("--catalog", cfg.catalog, "named sequence (see 'ghostctl catalog')");
        auto* par = sub->add_option("--params", cfg.params, "A0 A1 b0 b1 [f1]")->expected(4, 5);
        cat->excludes(par);
    };
    const auto with_output = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "csv or json")->capture_default_str();
        sub->add_option("--output", cfg.output, "write the table to this file");
    };
    const auto with_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", cfg.threads, "worker threads")->capture_default_str()->check(
            CLI::Range(1U, 256U));
    };

    auto* eval = app.add_subcommand("eval", "f(n) or a whole fundamental region");
    with_params(eval);
    eval->add_option("--n", cfg.n, "index n >= 1");
    eval->add_option("--region", cfg.region, "print f over [2^N, 2^(N+1))");

    auto* cls = app.add_subcommand("classify", "case label, Lebesgue type and log2(rho/rho*)");
    with_params(cls);

    auto* cdf_cmd = app.add_subcommand("cdf", "F_N(x) on a uniform grid");
    with_params(cdf_cmd);
    with_output(cdf_cmd);
    cdf_cmd->add_option("--N", cfg.level, "approximant level")->capture_default_str();
    cdf_cmd->add_option("--grid", cfg.grid, "grid points, endpoints included")->capture_default_str()->check(
        CLI::Range(std::size_t{2}, std::size_t{1} << 24));

    auto* fourier = app.add_subcommand("fourier", "Fourier coefficients");
    with_params(fourier);
    with_output(fourier);
    with_threads(fourier);
    fourier->add_option("--t", cfg.t_range, "values: a..b, a, or a comma list")->capture_default_str();
    fourier->add_option("--mode", cfg.mode, "limit, recursive or direct")->capture_default_str();
    fourier->add_option("--N", cfg.level, "level for recursive/direct")->capture_default_str();
    fourier->add_option("--tol", cfg.tol, "truncation tolerance for limit")->capture_default_str();

    auto* wiener = app.add_subcommand("wiener", "averages W_N of |coefficient|^2 for N = 0..--N");
    with_params(wiener);
    with_output(wiener);
    with_threads(wiener);
    wiener->add_option("--N", cfg.level, "largest level")->capture_default_str();

    auto* dens = app.add_subcommand("density", "Radon-Nikodym derivative (case 2B)");
    with_params(dens);
    with_output(dens);
    dens->add_option("--bits", cfg.bits, "binary digits of x");
    dens->add_option("--depth", cfg.depth, "grid 2^depth points when --bits is absent")->capture_default_str();

    auto* interval = app.add_subcommand("interval", "mu(E) against approximant masses");
    with_params(interval);
    with_output(interval);
    interval->add_option("--bits", cfg.bits, "digits x_1..x_i of the interval")->required();
    interval->add_option("--N", cfg.level, "largest approximant level")->capture_default_str();

    auto* points = app.add_subcommand("points", "pure-point mass totals (case 2D)");
    with_params(points);
    with_output(points);
    points->add_option("--nmax", cfg.n_max, "largest last-1-bit position")->capture_default_str();

    auto* jsr = app.add_subcommand("jsr-table", "spectral diagnostic over {0..K}^4");
    with_output(jsr);
    jsr->add_option("--sweep", cfg.sweep, "K")->capture_default_str();

    auto* ratio = app.add_subcommand("ratio", "mu(E_j)/lambda(E_j) along digit strings");
    with_params(ratio);
    with_output(ratio);
    ratio->add_option("--bits", cfg.bits, "a single digit string");
    ratio->add_option("--seed", cfg.seed, "seed for random strings")->capture_default_str();
    ratio->add_option("--count", cfg.count, "number of random strings")->capture_default_str();
    ratio->add_option("--depth", cfg.depth, "length of random strings")->capture_default_str();

    auto* catalog = app.add_subcommand("catalog", "list named sequences");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    cfg.bits_given = !dens->get_option("--bits")->empty() || !interval->get_option("--bits")->empty() ||
                     !ratio->get_option("--bits")->empty();
    if (ratio->parsed() && !ratio->get_option("--depth")->empty() && cfg.bits_given) {
        err << "usage error: --depth applies to random strings only\n";
        return kExitUsage;
    }
    if (ratio->parsed() && ratio->get_option("--depth")->empty()) {
        cfg.depth = 64;
    }
    if (dens->parsed() && dens->get_option("--depth")->empty()) {
        cfg.depth = 10;
    }

    try {
        if (eval->parsed()) {
            cmd_eval(cfg, out);
        } else if (cls->parsed()) {
            cmd_classify(cfg, out);
        } else if (cdf_cmd->parsed()) {
            cmd_cdf(cfg, out);
        } else if (fourier->parsed()) {
            cmd_fourier(cfg, out);
        } else if (wiener->parsed()) {
            cmd_wiener(cfg, out);
        } else if (dens->parsed()) {
            cmd_density(cfg, out);
        } else if (interval->parsed()) {
            cmd_interval(cfg, out);
        } else if (points->parsed()) {
            cmd_points(cfg, out);
        } else if (jsr->parsed()) {
            cmd_jsr_table(cfg, out);
        } else if (ratio->parsed()) {
            cmd_ratio(cfg, out);
        } else if (catalog->parsed()) {
            for (const auto& name : catalog_names()) {
                const CatalogEntry e = catalog_lookup(name);
                out << name << ' ' << e.params.to_string() << ' ' << to_string(e.expected_case) << ' '
                    << e.description << '\n';
            }
        }
    } catch (const DomainError& e) {
        err << e.what() << '\n';
        return kExitDomain;
    } catch (const ResourceError& e) {
        err << e.what() << '\n';
        return kExitResource;
    } catch (const IoError& e) {
        err << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace ghost
