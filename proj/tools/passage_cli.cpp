// Command-line front end: closed-form evaluations, Laplace inversion,
// Monte Carlo runs and the bundled verification suite.
//
// Exit codes: 0 success, 1 validation/usage error, 2 verification failure.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "passage/acceptance.hpp"
#include "passage/drawdown.hpp"
#include "passage/laplace.hpp"
#include "passage/levy.hpp"
#include "passage/montecarlo.hpp"
#include "passage/rbm.hpp"

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

// One subcommand's parameters: drives CLI11 options, the JSON config
// override (--config wins over flags), and the config echo in JSON output.
class ParamSet {
  public:
    using Ptr = std::variant<double*, uint64_t*, int*, bool*, std::string*,
                             std::vector<double>*>;

    ParamSet(CLI::App* cmd, std::string name) : cmd_(cmd), name_(std::move(name)) {}

    template <typename T>
    void add(const std::string& flag, T* value, const std::string& desc) {
        cmd_->add_option(flag, *value, desc);
        entries_.push_back({key_of(flag), Ptr{value}});
    }

    void add_flag(const std::string& flag, bool* value, const std::string& desc) {
        cmd_->add_flag(flag, *value, desc);
        entries_.push_back({key_of(flag), Ptr{value}});
    }

    const std::string& name() const { return name_; }

    void apply_config(const json& cfg) {
        if (!cfg.contains("schema_version") || cfg["schema_version"] != kSchemaVersion)
            throw std::invalid_argument("config: schema_version must be " +
                                        std::to_string(kSchemaVersion));
        for (const auto& [key, val] : cfg.items()) {
            if (key == "schema_version") continue;
            if (key == "command") {
                if (val != name_)
                    throw std::invalid_argument("config: command mismatch, expected " + name_);
                continue;
            }
            auto it = std::find_if(entries_.begin(), entries_.end(),
                                   [&](const Entry& e) { return e.key == key; });
            if (it == entries_.end())
                throw std::invalid_argument("config: unknown field '" + key + "'");
            std::visit([&val](auto* p) { *p = val.get<std::decay_t<decltype(*p)>>(); },
                       it->ptr);
            config_keys_.push_back(key);
        }
    }

    bool config_provided(const std::string& key) const {
        return std::find(config_keys_.begin(), config_keys_.end(), key) != config_keys_.end();
    }

    json echo() const {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["command"] = name_;
        for (const auto& e : entries_)
            std::visit([&](auto* p) { out[e.key] = *p; }, e.ptr);
        return out;
    }

  private:
    struct Entry {
        std::string key;
        Ptr ptr;
    };

    static std::string key_of(std::string flag) {
        while (!flag.empty() && flag.front() == '-') flag.erase(flag.begin());
        std::replace(flag.begin(), flag.end(), '-', '_');
        return flag;
    }

    CLI::App* cmd_;
    std::string name_;
    std::vector<Entry> entries_;
    std::vector<std::string> config_keys_;
};

struct CommonOut {
    std::string out_path;
    std::string format = "csv";
    std::string config_path;
};

void add_common(CLI::App* cmd, CommonOut* c) {
    cmd->add_option("--out", c->out_path, "write results to PATH instead of stdout");
    cmd->add_option("--format", c->format, "output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--config", c->config_path, "JSON config file overriding flags");
}

void maybe_apply_config(const CommonOut& c, ParamSet& params) {
    if (c.config_path.empty()) return;
    std::ifstream in(c.config_path);
    if (!in) throw std::invalid_argument("cannot open config file: " + c.config_path);
    json cfg = json::parse(in);
    params.apply_config(cfg);
}

void write_output(const CommonOut& c, const std::string& text) {
    if (c.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + c.out_path);
    out << text;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Scalar results: plain number in CSV mode, structured object in JSON mode.
void emit_scalar(const CommonOut& c, const ParamSet& params, double value,
                 const json& extra = json::object()) {
    if (c.format == "json") {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["command"] = params.name();
        out["config"] = params.echo();
        out["result"] = value;
        for (const auto& [k, v] : extra.items()) out[k] = v;
        write_output(c, out.dump(2) + "\n");
    } else {
        write_output(c, num(value) + "\n");
    }
}

void emit_table(const CommonOut& c, const ParamSet& params,
                const std::vector<std::string>& columns,
                const std::vector<std::vector<double>>& rows,
                const json& extra = json::object()) {
    if (c.format == "json") {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["command"] = params.name();
        out["config"] = params.echo();
        json data = json::array();
        for (const auto& row : rows) {
            json r;
            for (size_t i = 0; i < columns.size(); ++i) r[columns[i]] = row[i];
            data.push_back(r);
        }
        out["rows"] = data;
        for (const auto& [k, v] : extra.items()) out[k] = v;
        write_output(c, out.dump(2) + "\n");
        return;
    }
    std::ostringstream os;
    for (size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << num(row[i]);
        os << "\n";
    }
    write_output(c, os.str());
}

void emit_sample(const CommonOut& c, const ParamSet& params,
                 const passage::EmpiricalSample& s, const json& summary) {
    if (c.format == "json") {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["command"] = params.name();
        out["config"] = params.echo();
        out["n_total"] = s.n_total;
        out["n_censored"] = s.n_censored;
        out["censoring_fraction"] = s.censoring_fraction();
        out["excessive_censoring"] = s.excessive_censoring();
        for (const auto& [k, v] : summary.items()) out[k] = v;
        write_output(c, out.dump(2) + "\n");
        return;
    }
    std::ostringstream os;
    os << "# command=" << params.name() << "\n";
    json echo = params.echo();
    os << "#";
    for (const auto& [k, v] : echo.items())
        if (k != "schema_version" && k != "command") os << " " << k << "=" << v.dump();
    os << "\n";
    os << "# n_total=" << s.n_total << " n_censored=" << s.n_censored << "\n";
    os << "value\n";
    for (double v : s.values) os << num(v) << "\n";
    write_output(c, os.str());
}

passage::Scheme parse_scheme(const std::string& s) {
    if (s == "reflect_abs") return passage::Scheme::reflect_abs;
    if (s == "xi_sign") return passage::Scheme::xi_sign;
    if (s == "event_driven") return passage::Scheme::event_driven;
    throw std::invalid_argument("unknown scheme: " + s);
}

struct ModelFlags {
    std::string model = "bm";
    double mu = 1.0, sigma = 1.0;
    double c = 2.0, lambda = 1.0, jump_mu = 1.0;
    double beta = 1.5;

    void add_to(ParamSet& p) {
        p.add("--model", &model, "bm|cpp|caballero");
        p.add("--mu", &mu, "drift (bm)");
        p.add("--sigma", &sigma, "volatility (bm)");
        p.add("--c", &c, "upward drift (cpp)");
        p.add("--lambda", &lambda, "jump intensity (cpp)");
        p.add("--jump-mu", &jump_mu, "exponential jump parameter (cpp)");
        p.add("--beta", &beta, "stability-like index (caballero)");
    }

    passage::LevyModel build() const {
        if (model == "bm") return passage::BmDrift{mu, sigma};
        if (model == "cpp") return passage::CppExp{c, lambda, jump_mu};
        if (model == "caballero") return passage::CaballeroChaumont{beta};
        throw std::invalid_argument("unknown model: " + model);
    }
};

passage::PhiFunction build_phi(const std::string& phi_kind, double gamma_const) {
    passage::DiffusionSpec d;
    if (phi_kind == "const-gamma") {
        d.mu = [gamma_const](double) { return gamma_const; };
        d.sigma = [](double) { return 1.0; };
    } else if (phi_kind == "linear-phi") {
        // gamma(x) = -1/(2(x+2)): Phi(x) = (x+2)/2, domain [-1, inf)
        d.mu = [](double x) { return -1.0 / (2.0 * (x + 2.0)); };
        d.sigma = [](double) { return 1.0; };
        d.left_endpoint = -1.0;
    } else {
        throw std::invalid_argument("unknown --phi: " + phi_kind);
    }
    return passage::phi_from_gamma(d);
}

int run_verify(const std::string& suite) {
    auto results = passage::run_acceptance(suite);
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] %2d %-28s %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str());
        all = all && r.passed;
    }
    std::printf("%zu criteria, %s\n", results.size(), all ? "all passed" : "FAILURES present");
    return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"first-passage and drawdown laws: closed forms, quadrature and Monte Carlo"};
    app.require_subcommand(1);

    int rc = 0;
    std::string pending_error;

    // ---- rbm-lt -------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("rbm-lt",
                                       "Laplace transform of the reflected-BM first passage");
        auto common = std::make_shared<CommonOut>();
        auto params = std::make_shared<ParamSet>(cmd, "rbm-lt");
        auto p = std::make_shared<passage::RbmParams>();
        auto theta = std::make_shared<double>(1.0);
        params->add("--mu", &p->mu, "drift");
        params->add("--sigma", &p->sigma, "volatility");
        params->add("--x", &p->x, "start point");
        params->add("--delta", &p->delta, "barrier offset");
        params->add("--theta", theta.get(), "transform argument");
        add_common(cmd, common.get());
        cmd->callback([=] {
            maybe_apply_config(*common, *params);
            emit_scalar(*common, *params, passage::rbm_lt(*p, *theta));
        });
    }

    // ---- rbm-density --------------------------------------------------
    {
        auto* cmd = app.add_subcommand("rbm-density",
                                       "first-passage density by numerical Laplace inversion");
        auto common = std::make_shared<CommonOut>();
        auto params = std::make_shared<ParamSet>(cmd, "rbm-density");
        auto p = std::make_shared<passage::RbmParams>();
        auto t_min = std::make_shared<double>(0.1);
        auto t_max = std::make_shared<double>(5.0);
        auto t_points = std::make_shared<int>(50);
        auto method = std::make_shared<std::string>("talbot");
        auto order = std::make_shared<int>(0);
        auto with_cdf = std::make_shared<bool>(false);
        params->add("--mu", &p->mu, "drift");
        params->add("--sigma", &p->sigma, "volatility");
        params->add("--x", &p->x, "start point");
        params->add("--delta", &p->delta, "barrier offset");
        params->add("--t-min", t_min.get(), "first grid point");
        params->add("--t-max", t_max.get(), "last grid point");
        params->add("--t-points", t_points.get(), "grid size");
        params->add("--method", method.get(), "gaver_stehfest|talbot");
        params->add("--order", order.get(), "terms/nodes (0 = method default)");
        params->add_flag("--cdf", with_cdf.get(), "also output the CDF column");
        add_common(cmd, common.get());
        cmd->callback([=] {
            maybe_apply_config(*common, *params);
            passage::validate(*p);
            if (*t_points < 1 || !(*t_min > 0.0) || !(*t_max >= *t_min))
                throw std::invalid_argument("rbm-density: bad t grid");
            passage::InversionConfig cfg;
            cfg.method = *method == "gaver_stehfest"
                             ? passage::InversionMethod::gaver_stehfest
                             : passage::InversionMethod::talbot;
            cfg.order = *order > 0 ? *order
                        : cfg.method == passage::InversionMethod::talbot ? 32
                                                                         : 12;
            for (int i = 0; i < *t_points; ++i)
                cfg.t_grid.push_back(*t_points == 1 ? *t_min
                                                    : *t_min + (*t_max - *t_min) * i /
                                                          (*t_points - 1));
            passage::RbmParams pp = *p;
            passage::LtFunction f{
                [pp](std::complex<double> s) { return passage::rbm_lt(pp, s); },
                "reflected BM first-passage transform"};
            auto dens = passage::invert_density(f, cfg);
            std::vector<std::string> cols{"t", "density"};
            std::vector<std::vector<double>> rows;
            if (*with_cdf) {
                cols.push_back("cdf");
                auto cdf = passage::invert_cdf(f, cfg);
                for (size_t i = 0; i < dens.size(); ++i)
                    rows.push_back({dens[i].first, dens[i].second, cdf[i].second});
            } else {
                for (auto& [t, v] : dens) rows.push_back({t, v});
            }
            emit_table(*common, *params, cols, rows);
        });
    }

    // ---- rbm-mc -------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("rbm-mc", "Monte Carlo first-passage sample");
        auto common = std::make_shared<CommonOut>();
        auto params = std::make_shared<ParamSet>(cmd, "rbm-mc");
        auto p = std::make_shared<passage::RbmParams>();
        auto cfg = std::make_shared<passage::SimulationConfig>();
        auto scheme = std::make_shared<std::string>("reflect_abs");
        auto thetas = std::make_shared<std::vector<double>>();
        auto workers = std::make_shared<uint64_t>(1);
        auto seed = std::make_shared<uint64_t>(0);
        params->add("--mu", &p->mu, "drift");
        params->add("--sigma", &p->sigma, "volatility");
        params->add("--x", &p->x, "start point");
        params->add("--delta", &p->delta, "barrier offset");
        params->add("--scheme", scheme.get(), "reflect_abs|xi_sign");
        params->add("--n-paths", &cfg->n_paths, "number of paths");
        params->add("--dt", &cfg->dt, "time step");
        params->add("--t-max", &cfg->t_max, "censoring horizon");
        params->add("--workers", workers.get(), "worker threads");
        params->add("--theta", thetas.get(), "report empirical LT at these theta");
        params->add("--seed", seed.get(), "RNG seed (required, no wall-clock default)");
        auto seed_opt = cmd->get_option("--seed");
        add_common(cmd, common.get());
        cmd->callback([=] {
            maybe_apply_config(*common, *params);
            if (seed_opt->count() == 0 && !params->config_provided("seed"))
                throw std::invalid_argument("rbm-mc: --seed is required");
            cfg->seed = *seed;
            cfg->scheme = parse_scheme(*scheme);
            cfg->n_workers = static_cast<unsigned>(*workers);
            auto sample = passage::simulate_rbm_first_passage(*p, *cfg);
            json summary;
            json lts = json::array();
            for (double th : *thetas) {
                auto lt = passage::empirical_lt(sample, th);
                lts.push_back({{"theta", th},
                               {"estimate", lt.estimate},
                               {"std_error", lt.std_error},
                               {"censored_bound", lt.censored_bound},
                               {"analytic", passage::rbm_lt(*p, th)}});
            }
            summary["empirical_lt"] = lts;
            emit_sample(*common, *params, sample, summary);
        });
    }

    // ---- lehoczky-curve ----------------------------------------------
    {
        auto* cmd = app.add_subcommand("lehoczky-curve",
                                       "log-survival curve of the maximum before drawdown");
        auto common = std::make_shared<CommonOut>();
        auto params = std::make_shared<ParamSet>(cmd, "lehoczky-curve");
        auto phi_kind = std::make_shared<std::string>("const-gamma");
        auto gamma_c = std::make_shared<double>(1.0);
        auto delta = std::make_shared<double>(1.0);
        auto xi_max = std::make_shared<double>(3.0);
        auto xi_points = std::make_shared<int>(13);
        params->add("--phi", phi_kind.get(), "const-gamma|linear-phi");
        params->add("--gamma", gamma_c.get(), "constant gamma value");
        params->add("--delta", delta.get(), "drawdown threshold");
        params->add("--xi-max", xi_max.get(), "curve extent");
        params->add("--xi-points", xi_points.get(), "grid size");
        add_common(cmd, common.get());
        cmd->callback([=] {
            maybe_apply_config(*common, *params);
            if (*xi_points < 3) throw std::invalid_argument("lehoczky-curve: xi-points >= 3");
            auto phi = build_phi(*phi_kind, *gamma_c);
            std::vector<double> grid;
            for (int i = 0; i < *xi_points; ++i)
                grid.push_back(*xi_max * i / (*xi_points - 1));
            auto curve = passage::drawdown_survival(phi, *delta, grid);
            auto diag = passage::exponentiality_diagnostic(curve);
            std::vector<std::vector<double>> rows;
            for (size_t i = 0; i < curve.xi_grid.size(); ++i)
                rows.push_back({curve.xi_grid[i], curve.log_survival[i]});
            json extra;
            extra["diagnostic"] = {{"lambda_hat", diag.lambda_hat},
                                   {"max_abs_residual", diag.max_abs_residual}};
            emit_table(*common, *params, {"xi", "log_survival"}, rows, extra);
        });
    }

    // ---- lehoczky-rate ------------------------------------------------
    {
        auto* cmd = app.add_subcommand("lehoczky-rate", "local hazard rate of the drawdown law");
        auto common = std::make_shared<CommonOut>();
        auto params = std::make_shared<ParamSet>(cmd, "lehoczky-rate");
        auto phi_kind = std::make_shared<std::string>("const-gamma");
        auto gamma_c = std::make_shared<double>(1.0);
        auto delta = std::make_shared<double>(1.0);
        auto xi = std::make_shared<double>(0.0);
        params->add("--phi", phi_kind.get(), "const-gamma|linear-phi");
        params->add("--gamma", gamma_c.get(), "constant gamma value");
        params->add("--delta", delta.get(), "drawdown threshold");
        params->add("--xi", xi.get(), "evaluation point");
        add_common(cmd, common.get());
        cmd->callback([=] {
            maybe_apply_config(*common, *params);
            auto phi = build_phi(*phi_kind, *gamma_c);
            emit_scalar(*common, *params, passage::hazard(phi, *delta, *xi));
        });
    }

    // ---- dde-solve ----------------------------------------------------
    {
        auto* cmd = app.add_subcommand("dde-solve",
                                       "method-of-steps solution of Phi' = Lambda (Phi - lag Phi)");
        auto common = std::make_shared<CommonOut>();
        auto params = std::make_shared<ParamSet>(cmd, "dde-solve");
        auto initial = std::make_shared<std::string>("linear");
        auto beta = std::make_shared<double>(1.0);
        auto lambda = std::make_shared<double>(1.0);
        auto delta = std::make_shared<double>(1.0);
        auto xi_max = std::make_shared<double>(5.0);
        auto xi_points = std::make_shared<int>(101);
        params->add("--initial", initial.get(), "linear|const|exp (history on [-delta, 0])");
        params->add("--beta", beta.get(), "growth rate for the exp initial function");
        params->add("--lambda", lambda.get(), "hazard constant Lambda");
        params->add("--delta", delta.get(), "delay");
        params->add("--xi-max", xi_max.get(), "solve up to");
        params->add("--xi-points", xi_points.get(), "output grid size");
        add_common(cmd, common.get());
        cmd->callback([=] {
            maybe_apply_config(*common, *params);
            passage::PhiFunction init;
            init.lo = -*delta;
            init.hi = 0.0;
            if (*initial == "linear")
                init.eval = [](double x) { return 0.5 * (x + 2.0); };
            else if (*initial == "const")
                init.eval = [](double) { return 1.0; };
            else if (*initial == "exp")
                init.eval = [b = *beta](double x) { return std::exp(b * x); };
            else
                throw std::invalid_argument("dde-solve: unknown --initial");
            auto phi = passage::dde_solve(init, *lambda, *delta, *xi_max);
            std::vector<std::vector<double>> rows;
            for (int i = 0; i < *xi_points; ++i) {
                double x = *xi_max * i / (*xi_points - 1);
                rows.push_back({x, phi(x)});
            }
            emit_table(*common, *params, {"xi", "phi"}, rows);
        });
    }

    // ---- levy-rate ----------------------------------------------------
    {
        auto* cmd = app.add_subcommand("levy-rate", "drawdown rate W'(delta)/W(delta)");
        auto common = std::make_shared<CommonOut>();
        auto params = std::make_shared<ParamSet>(cmd, "levy-rate");
        auto flags = std::make_shared<ModelFlags>();
        auto delta = std::make_shared<double>(1.0);
        flags->add_to(*params);
        params->add("--delta", delta.get(), "drawdown threshold");
        add_common(cmd, common.get());
        cmd->callback([=] {
            maybe_apply_config(*common, *params);
            auto m = flags->build();
            const double rate = passage::drawdown_rate(m, *delta);
            json extra;
            if (flags->model == "cpp") {
                extra["rate_literature_display"] = passage::cpp_printed_rate(
                    passage::CppExp{flags->c, flags->lambda, flags->jump_mu}, *delta);
            }
            emit_scalar(*common, *params, rate, extra);
        });
    }

    // ---- levy-exit ----------------------------------------------------
    {
        auto* cmd = app.add_subcommand("levy-exit", "two-sided exit probability W(x)/W(x+y)");
        auto common = std::make_shared<CommonOut>();
        auto params = std::make_shared<ParamSet>(cmd, "levy-exit");
        auto flags = std::make_shared<ModelFlags>();
        auto x = std::make_shared<double>(1.0);
        auto y = std::make_shared<double>(1.0);
        flags->add_to(*params);
        params->add("--x", x.get(), "lower barrier distance");
        params->add("--y", y.get(), "upper barrier distance");
        add_common(cmd, common.get());
        cmd->callback([=] {
            maybe_apply_config(*common, *params);
            emit_scalar(*common, *params, passage::two_sided_exit(flags->build(), *x, *y));
        });
    }

    // ---- levy-mc ------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("levy-mc",
                                       "event-driven compound-Poisson Monte Carlo");
        auto common = std::make_shared<CommonOut>();
        auto params = std::make_shared<ParamSet>(cmd, "levy-mc");
        auto flags = std::make_shared<ModelFlags>();
        auto mode = std::make_shared<std::string>("drawdown");
        auto delta = std::make_shared<double>(1.0);
        auto x = std::make_shared<double>(1.0);
        auto y = std::make_shared<double>(1.0);
        auto cfg = std::make_shared<passage::SimulationConfig>();
        auto workers = std::make_shared<uint64_t>(1);
        auto seed = std::make_shared<uint64_t>(0);
        flags->add_to(*params);
        params->add("--mode", mode.get(), "drawdown|exit");
        params->add("--delta", delta.get(), "drawdown threshold");
        params->add("--x", x.get(), "lower barrier distance (exit mode)");
        params->add("--y", y.get(), "upper barrier distance (exit mode)");
        params->add("--n-paths", &cfg->n_paths, "number of paths");
        params->add("--t-max", &cfg->t_max, "censoring horizon");
        params->add("--workers", workers.get(), "worker threads");
        params->add("--seed", seed.get(), "RNG seed (required, no wall-clock default)");
        auto seed_opt = cmd->get_option("--seed");
        add_common(cmd, common.get());
        cmd->callback([=] {
            maybe_apply_config(*common, *params);
            if (seed_opt->count() == 0 && !params->config_provided("seed"))
                throw std::invalid_argument("levy-mc: --seed is required");
            if (flags->model != "cpp")
                throw std::invalid_argument("levy-mc: only the cpp model is simulated");
            passage::CppExp m{flags->c, flags->lambda, flags->jump_mu};
            cfg->seed = *seed;
            cfg->scheme = passage::Scheme::event_driven;
            cfg->n_workers = static_cast<unsigned>(*workers);
            if (*mode == "drawdown") {
                auto sample = passage::simulate_cpp_drawdown(m, *delta, *cfg);
                const double rate = passage::drawdown_rate(passage::LevyModel{m}, *delta);
                auto ks = passage::ks_exponential_test(sample, rate);
                json summary;
                summary["rate_from_scale_function"] = rate;
                summary["rate_literature_display"] = passage::cpp_printed_rate(m, *delta);
                summary["ks"] = {{"statistic", ks.statistic}, {"p_value", ks.p_value},
                                 {"n", ks.n}};
                emit_sample(*common, *params, sample, summary);
            } else if (*mode == "exit") {
                auto freq = passage::simulate_cpp_two_sided_exit(m, *x, *y, *cfg);
                json extra;
                extra["analytic"] = passage::two_sided_exit(passage::LevyModel{m}, *x, *y);
                extra["std_error"] = freq.std_error;
                extra["n_top"] = freq.n_top;
                emit_scalar(*common, *params, freq.frequency, extra);
            } else {
                throw std::invalid_argument("levy-mc: unknown --mode");
            }
        });
    }

    // ---- verify -------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("verify", "run the bundled verification suite");
        auto suite = std::make_shared<std::string>("all");
        cmd->add_option("--suite", *suite, "analytic|mc|all")
            ->check(CLI::IsMember({"analytic", "mc", "all"}));
        cmd->callback([=, &rc] { rc = run_verify(*suite); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
