// cliquex - command-line front end over the clique-statistics engine.
//
// Subcommands: exact, profile, argmax, asymptote, stationary, residual-sweep,
// simulate, oracle, hyper, conjecture. Reports are JSON (default) or CSV, to
// stdout or --output. Exit codes: 0 ok, 2 usage, 3 domain error, 4 resource
// cap, 5 I/O error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquex/cliquex.hpp"

using nlohmann::ordered_json;
using namespace cliquex;

namespace {

// Bad literals and malformed values are usage errors (exit 2), distinct from
// the domain errors computations raise (exit 3).
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

template <typename F>
auto as_usage(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

struct Output {
    std::string format = "json"; // json | csv
    std::string path;            // empty = stdout
};

void emit(const Output& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        if (!std::cout) throw IoError("failed writing report to stdout");
        return;
    }
    std::ofstream os(out.path);
    if (!os) throw IoError("cannot open output file: " + out.path);
    os << text;
    os.flush();
    if (!os) throw IoError("failed writing report to: " + out.path);
}

void emit_json(const Output& out, const ordered_json& j) { emit(out, j.dump() + "\n"); }

std::string csv_join(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ",";
        line += cells[i];
    }
    return line + "\n";
}

// Flag overrides environment overrides the built-in 128-bit default.
void apply_precision(long flag_bits) {
    if (flag_bits > 0) {
        Real::set_default_precision(static_cast<prec_t>(flag_bits));
        return;
    }
    if (const char* env = std::getenv("CLIQUEX_PRECISION_BITS")) {
        long bits = 0;
        try {
            bits = std::stol(env);
        } catch (...) {
            throw UsageError(std::string("bad CLIQUEX_PRECISION_BITS value: ") + env);
        }
        Real::set_default_precision(static_cast<prec_t>(bits));
    }
}

ordered_json rational_expectation_json(long n, const std::string& p_literal, const Rational& total,
                                       const std::map<long, Rational>& per_size) {
    ordered_json j;
    j["n"] = n;
    j["p"] = p_literal;
    j["total"] = to_string(total);
    ordered_json sizes = ordered_json::object();
    for (const auto& [k, v] : per_size) sizes[std::to_string(k)] = to_string(v);
    j["per_size"] = sizes;
    return j;
}

Rational require_exact(const ProbabilityLiteral& p) {
    if (!p.exact)
        throw UsageError("this mode needs an exact probability (a/b or a plain decimal): '" +
                         p.literal + "'");
    return *p.exact;
}

long bits_now() { return static_cast<long>(Real::default_precision()); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique statistics for Erdos-Renyi random graphs and r-uniform hypergraphs"};
    app.require_subcommand(1);

    // Options shared across subcommands (each holds its own copies).
    struct Common {
        long n = 0;
        std::string p;
        int r = 2;
        long precision_bits = 0;
        Output out;
    };

    auto add_common = [](CLI::App* sub, Common& c, bool needs_n = true) {
        if (needs_n) sub->add_option("-n,--n", c.n, "vertex count")->required();
        sub->add_option("-p,--p", c.p, "edge probability, decimal or a/b")->required();
        sub->add_option("--precision-bits", c.precision_bits, "working precision (>= 53)");
        sub->add_option("-f,--format", c.out.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("-o,--output", c.out.path, "write report to a file instead of stdout");
    };

    // exact ----------------------------------------------------------------
    auto ex = std::make_shared<Common>();
    auto ex_mode = std::make_shared<std::string>("log_domain");
    CLI::App* sub_exact = app.add_subcommand("exact", "total expectation E[X]");
    add_common(sub_exact, *ex);
    sub_exact->add_option("--mode", *ex_mode, "log_domain (default) or rational")
        ->check(CLI::IsMember({"rational", "log_domain"}));
    sub_exact->callback([ex, ex_mode]() {
        apply_precision(ex->precision_bits);
        const ProbabilityLiteral p = as_usage([&] { return parse_probability(ex->p); });
        if (*ex_mode == "rational") {
            const Rational q = require_exact(p);
            const ModelParams params = ModelParams::rational(ex->n, q);
            const Rational total = exact_rational_expectation(params.n, q);
            std::map<long, Rational> per_size;
            for (long k = 1; k <= params.n; ++k) per_size[k] = clique_term_rational(params.n, k, q);
            if (ex->out.format == "csv") {
                std::string text = csv_join({"n", "p", "total"});
                text += csv_join({std::to_string(ex->n), p.literal, to_string(total)});
                emit(ex->out, text);
            } else {
                emit_json(ex->out, rational_expectation_json(ex->n, p.literal, total, per_size));
            }
            return;
        }
        const ExpectationProfile prof = expectation_profile(ModelParams::log_domain(ex->n, p.value));
        if (ex->out.format == "csv") {
            std::string text = csv_join({"n", "p", "log_total"});
            text += csv_join({std::to_string(ex->n), p.literal, prof.log_total.str()});
            emit(ex->out, text);
        } else {
            ordered_json j;
            j["n"] = ex->n;
            j["p"] = p.literal;
            j["log_total"] = prof.log_total.str();
            j["precision_bits"] = bits_now();
            emit_json(ex->out, j);
        }
    });

    // profile ---------------------------------------------------------------
    auto pr = std::make_shared<Common>();
    CLI::App* sub_profile = app.add_subcommand("profile", "per-size log-terms ln F_n(k)");
    add_common(sub_profile, *pr);
    sub_profile->callback([pr]() {
        apply_precision(pr->precision_bits);
        const ProbabilityLiteral p = as_usage([&] { return parse_probability(pr->p); });
        const ExpectationProfile prof = expectation_profile(ModelParams::log_domain(pr->n, p.value));
        if (pr->out.format == "csv") {
            std::string text = csv_join({"k", "log_term"});
            for (long k = 1; k <= prof.n; ++k)
                text += csv_join({std::to_string(k), prof.log_term(k).str()});
            emit(pr->out, text);
        } else {
            ordered_json j;
            j["n"] = pr->n;
            j["p"] = p.literal;
            j["precision_bits"] = bits_now();
            j["argmax_k"] = prof.argmax_k;
            j["log_total"] = prof.log_total.str();
            ordered_json terms = ordered_json::array();
            for (long k = 1; k <= prof.n; ++k) terms.push_back(prof.log_term(k).str());
            j["log_terms"] = terms;
            emit_json(pr->out, j);
        }
    });

    // argmax ----------------------------------------------------------------
    auto am = std::make_shared<Common>();
    CLI::App* sub_argmax = app.add_subcommand("argmax", "most popular clique size");
    add_common(sub_argmax, *am);
    sub_argmax->callback([am]() {
        apply_precision(am->precision_bits);
        const ProbabilityLiteral p = as_usage([&] { return parse_probability(am->p); });
        const ExpectationProfile prof = expectation_profile(ModelParams::log_domain(am->n, p.value));
        const Real peak = prof.log_term(prof.argmax_k);
        if (am->out.format == "csv") {
            std::string text = csv_join({"n", "p", "argmax_k", "log_peak"});
            text += csv_join({std::to_string(am->n), p.literal, std::to_string(prof.argmax_k),
                              peak.str()});
            emit(am->out, text);
        } else {
            ordered_json j;
            j["n"] = am->n;
            j["p"] = p.literal;
            j["argmax_k"] = prof.argmax_k;
            j["log_peak"] = peak.str();
            j["precision_bits"] = bits_now();
            emit_json(am->out, j);
        }
    });

    // asymptote -------------------------------------------------------------
    auto as_ = std::make_shared<Common>();
    auto as_x = std::make_shared<std::string>();
    CLI::App* sub_asym = app.add_subcommand("asymptote", "envelope functions f,g,a,b,h at x");
    add_common(sub_asym, *as_);
    sub_asym->add_option("-x,--x", *as_x, "evaluation point, 0 < x < n")->required();
    sub_asym->callback([as_, as_x]() {
        apply_precision(as_->precision_bits);
        const ProbabilityLiteral p = as_usage([&] { return parse_probability(as_->p); });
        const Real x = as_usage([&] { return Real::from_string(*as_x); });
        const AsymptoticParams params(as_->n, p.value);
        const EnvelopeEval e = envelope(params, x);
        if (as_->out.format == "csv") {
            std::string text = csv_join({"x", "f", "g", "a", "b", "h"});
            text += csv_join({e.x.str(), e.f.str(), e.g.str(), e.a.str(), e.b.str(), e.h.str()});
            emit(as_->out, text);
        } else {
            ordered_json j;
            j["n"] = as_->n;
            j["p"] = p.literal;
            j["x"] = e.x.str();
            j["f"] = e.f.str();
            j["g"] = e.g.str();
            j["a"] = e.a.str();
            j["b"] = e.b.str();
            j["h"] = e.h.str();
            j["precision_bits"] = bits_now();
            emit_json(as_->out, j);
        }
    });

    // stationary ------------------------------------------------------------
    auto st = std::make_shared<Common>();
    CLI::App* sub_stat = app.add_subcommand("stationary", "Lambert-W stationary point of h");
    add_common(sub_stat, *st);
    sub_stat->callback([st]() {
        apply_precision(st->precision_bits);
        const ProbabilityLiteral p = as_usage([&] { return parse_probability(st->p); });
        const AsymptoticParams params(st->n, p.value);
        const Real xt = h_stationary_point(params);
        const Real hp = h_prime(params, xt);
        const Real mk = markov_threshold_log(params);
        if (st->out.format == "csv") {
            std::string text = csv_join({"n", "p", "x_tilde", "h_prime", "markov_threshold_log"});
            text += csv_join({std::to_string(st->n), p.literal, xt.str(), hp.str(), mk.str()});
            emit(st->out, text);
        } else {
            ordered_json j;
            j["n"] = st->n;
            j["p"] = p.literal;
            j["x_tilde"] = xt.str();
            j["h_prime"] = hp.str();
            j["markov_threshold_log"] = mk.str();
            j["precision_bits"] = bits_now();
            emit_json(st->out, j);
        }
    });

    // residual-sweep ---------------------------------------------------------
    auto rs = std::make_shared<Common>();
    auto rs_grid = std::make_shared<std::string>("2^10:2^20:x2");
    auto rs_ps = std::make_shared<std::vector<std::string>>();
    CLI::App* sub_sweep = app.add_subcommand("residual-sweep", "theorem residual over an n-grid");
    sub_sweep->add_option("--n-grid", *rs_grid, "inclusive grid start:stop:xK or start:stop:+K");
    sub_sweep->add_option("-p,--p", *rs_ps, "edge probability, repeatable")->required();
    sub_sweep->add_option("--precision-bits", rs->precision_bits, "working precision (>= 53)");
    sub_sweep->add_option("-f,--format", rs->out.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub_sweep->add_option("-o,--output", rs->out.path, "write report to a file instead of stdout");
    sub_sweep->callback([rs, rs_grid, rs_ps]() {
        apply_precision(rs->precision_bits);
        const std::vector<long> grid = as_usage([&] { return parse_grid(*rs_grid); });
        std::vector<ProbabilityLiteral> ps;
        for (const auto& s : *rs_ps) ps.push_back(as_usage([&] { return parse_probability(s); }));

        std::string csv = csv_join({"n", "p", "log_total", "residual"});
        ordered_json rows = ordered_json::array();
        for (const auto& p : ps) {
            for (long n : grid) {
                const ExpectationProfile prof =
                    expectation_profile(ModelParams::log_domain(n, p.value));
                const AsymptoticParams params(n, p.value);
                const Real rho = theorem_residual(params, prof.log_total);
                if (rs->out.format == "csv") {
                    csv += csv_join({std::to_string(n), p.literal, prof.log_total.str(), rho.str()});
                } else {
                    ordered_json row;
                    row["n"] = n;
                    row["p"] = p.literal;
                    row["log_total"] = prof.log_total.str();
                    row["residual"] = rho.str();
                    rows.push_back(row);
                }
            }
        }
        if (rs->out.format == "csv") {
            emit(rs->out, csv);
        } else {
            ordered_json j;
            j["precision_bits"] = bits_now();
            j["rows"] = rows;
            emit_json(rs->out, j);
        }
    });

    // simulate ---------------------------------------------------------------
    auto si = std::make_shared<Common>();
    auto si_trials = std::make_shared<long long>(0);
    auto si_seed = std::make_shared<std::uint64_t>(0);
    auto si_has_r = std::make_shared<bool>(false);
    CLI::App* sub_sim = app.add_subcommand("simulate", "seeded Monte Carlo estimate of E[X]");
    add_common(sub_sim, *si);
    sub_sim->add_option("-t,--trials", *si_trials, "number of trials")->required();
    sub_sim->add_option("-s,--seed", *si_seed, "master seed")->required();
    CLI::Option* sim_r = sub_sim->add_option("-r,--r", si->r, "hypergraph uniformity (omit for graphs)");
    sub_sim->callback([si, si_trials, si_seed, si_has_r, sim_r]() {
        *si_has_r = sim_r->count() > 0;
        apply_precision(si->precision_bits);
        const ProbabilityLiteral p = as_usage([&] { return parse_probability(si->p); });
        const MCEstimate est = *si_has_r
                                   ? mc_estimate(si->n, si->r, p.value, *si_trials, *si_seed)
                                   : mc_estimate(si->n, p.value, *si_trials, *si_seed);
        if (si->out.format == "csv") {
            std::vector<std::string> head{"n", "p", "trials", "master_seed", "mean", "std_error"};
            std::vector<std::string> row{std::to_string(si->n), p.literal,
                                         std::to_string(est.trials), std::to_string(est.master_seed),
                                         est.mean.str(), est.std_error.str()};
            if (*si_has_r) {
                head.insert(head.begin() + 1, "r");
                row.insert(row.begin() + 1, std::to_string(si->r));
            }
            emit(si->out, csv_join(head) + csv_join(row));
        } else {
            ordered_json j;
            j["n"] = si->n;
            if (*si_has_r) j["r"] = si->r;
            j["p"] = p.literal;
            j["trials"] = est.trials;
            j["master_seed"] = est.master_seed;
            j["mean"] = est.mean.str();
            j["std_error"] = est.std_error.str();
            j["precision_bits"] = bits_now();
            emit_json(si->out, j);
        }
    });

    // oracle -----------------------------------------------------------------
    auto oc = std::make_shared<Common>();
    auto oc_has_r = std::make_shared<bool>(false);
    CLI::App* sub_oracle = app.add_subcommand("oracle", "exhaustive exact expectation (tiny n)");
    add_common(sub_oracle, *oc);
    CLI::Option* oc_r = sub_oracle->add_option("-r,--r", oc->r, "hypergraph uniformity (omit for graphs)");
    sub_oracle->callback([oc, oc_has_r, oc_r]() {
        *oc_has_r = oc_r->count() > 0;
        apply_precision(oc->precision_bits);
        const ProbabilityLiteral p = as_usage([&] { return parse_probability(oc->p); });
        const Rational q = require_exact(p);
        const RationalExpectation res = *oc_has_r ? exhaustive_expected_hypercliques(oc->n, oc->r, q)
                                                  : exhaustive_expected_cliques(oc->n, q);
        if (oc->out.format == "csv") {
            std::vector<std::string> head{"n", "p", "total"};
            std::vector<std::string> row{std::to_string(oc->n), p.literal, to_string(res.total)};
            if (*oc_has_r) {
                head.insert(head.begin() + 1, "r");
                row.insert(row.begin() + 1, std::to_string(oc->r));
            }
            emit(oc->out, csv_join(head) + csv_join(row));
        } else {
            ordered_json j = rational_expectation_json(oc->n, p.literal, res.total, res.per_size);
            if (*oc_has_r) {
                ordered_json reordered;
                reordered["n"] = j["n"];
                reordered["r"] = oc->r;
                reordered["p"] = j["p"];
                reordered["total"] = j["total"];
                reordered["per_size"] = j["per_size"];
                j = reordered;
            }
            emit_json(oc->out, j);
        }
    });

    // hyper ------------------------------------------------------------------
    auto hy = std::make_shared<Common>();
    CLI::App* sub_hyper = app.add_subcommand("hyper", "r-uniform expectation ln E[X^(r)]");
    add_common(sub_hyper, *hy);
    sub_hyper->add_option("-r,--r", hy->r, "uniformity r >= 2")->required();
    sub_hyper->callback([hy]() {
        apply_precision(hy->precision_bits);
        const ProbabilityLiteral p = as_usage([&] { return parse_probability(hy->p); });
        const HyperModelParams params(hy->n, hy->r, p.value);
        if (hy->out.format == "csv") {
            std::string text = csv_join({"k", "log_term"});
            for (long k = 1; k <= params.n; ++k)
                text += csv_join({std::to_string(k), hyper_term_log(params, k).str()});
            emit(hy->out, text);
        } else {
            ordered_json j;
            j["n"] = hy->n;
            j["r"] = hy->r;
            j["p"] = p.literal;
            j["log_total"] = hyper_expectation_log(params).str();
            j["precision_bits"] = bits_now();
            emit_json(hy->out, j);
        }
    });

    // conjecture -------------------------------------------------------------
    auto cj = std::make_shared<Common>();
    auto cj_const = std::make_shared<std::string>("0");
    CLI::App* sub_conj = app.add_subcommand("conjecture", "conjectured exponent and lower-bound term");
    add_common(sub_conj, *cj);
    sub_conj->add_option("-r,--r", cj->r, "uniformity r >= 2")->required();
    sub_conj->add_option("-c,--const", *cj_const, "stand-in for the O(1) constant");
    sub_conj->callback([cj, cj_const]() {
        apply_precision(cj->precision_bits);
        const ProbabilityLiteral p = as_usage([&] { return parse_probability(cj->p); });
        const Real c = as_usage([&] { return Real::from_string(*cj_const); });
        const HyperModelParams params(cj->n, cj->r, p.value);
        const Real expo = conjecture_exponent(params, c);
        const Real lower = conjecture_lower_term_log(params);
        if (cj->out.format == "csv") {
            std::string text = csv_join({"n", "r", "p", "c", "exponent", "lower_term_log"});
            text += csv_join({std::to_string(cj->n), std::to_string(cj->r), p.literal, *cj_const,
                              expo.str(), lower.str()});
            emit(cj->out, text);
        } else {
            ordered_json j;
            j["n"] = cj->n;
            j["r"] = cj->r;
            j["p"] = p.literal;
            j["c"] = *cj_const;
            j["exponent"] = expo.str();
            j["lower_term_log"] = lower.str();
            j["precision_bits"] = bits_now();
            emit_json(cj->out, j);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
