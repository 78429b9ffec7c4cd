// qwit: command-line front end for the majorization-based quantumness
// witnesses. Every subcommand is deterministic for a fixed (fixtures, seed)
// pair; output is CSV on stdout by default, JSON with --json, and goes to a
// file with --out. Angles are degrees on the command line. Exit code is 0
// iff every verdict computed by the requested subcommand holds; otherwise
// the failed verdicts are listed as a JSON array on stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include "qwit/bounds.hpp"
#include "qwit/coherence.hpp"
#include "qwit/experiment.hpp"
#include "qwit/nonlocality.hpp"
#include "qwit/quantum_ops.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

namespace {

using namespace qwit;
using ordered_json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.7071067811865476;

double deg2rad(double d) { return d * kPi / 180.0; }

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct Emitter {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void row(std::vector<std::string> r) { rows.push_back(std::move(r)); }

    void flush(bool json, const std::string& out_path) const {
        std::string text;
        if (json) {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json obj;
                for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
                arr.push_back(obj);
            }
            text = arr.dump(2) + "\n";
        } else {
            std::string line;
            for (std::size_t i = 0; i < columns.size(); ++i)
                line += (i ? "," : "") + columns[i];
            text = line + "\n";
            for (const auto& r : rows) {
                line.clear();
                for (std::size_t i = 0; i < r.size(); ++i) line += (i ? "," : "") + r[i];
                text += line + "\n";
            }
        }
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot write output file: " + out_path);
            out << text;
        }
    }
};

struct Verdicts {
    std::vector<std::string> failures;

    void check(bool ok, const std::string& name) {
        if (!ok) failures.push_back(name);
    }
    int finish() const {
        if (failures.empty()) return 0;
        ordered_json arr = ordered_json::array();
        for (const auto& f : failures) arr.push_back(f);
        std::cerr << ordered_json{{"failed_verdicts", arr}}.dump() << "\n";
        return 1;
    }
};

struct Options {
    std::string entropy;  // empty = subcommand default
    double k = 2.0;
    std::vector<double> thetas;
    std::string fixtures = "fixtures";
    std::uint64_t seed = 1;
    std::size_t samples = 0;  // 0 = subcommand default
    std::string out_path;
    bool json = false;
};

EntropyKind parse_entropy(const std::string& s) {
    if (s == "shannon") return EntropyKind::Shannon;
    if (s == "renyi") return EntropyKind::Renyi;
    if (s == "tsallis") return EntropyKind::Tsallis;
    throw CLI::ValidationError("--entropy must be shannon, renyi or tsallis");
}

// ---------------------------------------------------------------------------

int cmd_bounds(const Options& opt) {
    Emitter em;
    em.columns = {"entropy", "k", "c", "mu", "vs", "fgg", "optimizer"};
    Verdicts v;
    auto mid_band = vs_numerical_mid_band();

    const std::string which = opt.entropy.empty() ? "all" : opt.entropy;
    struct Kind {
        std::string name;
        EntropyKind kind;
        double order;
    };
    std::vector<Kind> kinds;
    if (which == "all") {
        kinds = {{"shannon", EntropyKind::Shannon, 0.0},
                 {"renyi", EntropyKind::Renyi, 2.0},
                 {"tsallis", EntropyKind::Tsallis, 2.0}};
    } else {
        kinds = {{which, parse_entropy(which), which == "shannon" ? 0.0 : opt.k}};
    }

    const int points = 50;
    for (const Kind& kd : kinds) {
        for (int i = 0; i < points; ++i) {
            const double c = kInvSqrt2 + (1.0 - kInvSqrt2) * i / (points - 1);
            const double fgg =
                entropic_lower_bound(ReferenceBound::FGG, kd.kind, kd.order, c);
            const double optim =
                entropic_lower_bound(ReferenceBound::Optimizer, kd.kind, kd.order, c);
            std::string mu_s, vs_s;
            if (kd.kind == EntropyKind::Shannon) {
                const double mu =
                    entropic_lower_bound(ReferenceBound::MU, kd.kind, 0.0, c);
                const double vs =
                    entropic_lower_bound(ReferenceBound::VS, kd.kind, 0.0, c, &mid_band);
                mu_s = fmt(mu);
                vs_s = fmt(vs);
                v.check(mu <= optim + 1e-6, "bounds.mu_below_optimizer[c=" + fmt(c) + "]");
                v.check(vs <= optim + 1e-6, "bounds.vs_below_optimizer[c=" + fmt(c) + "]");
            }
            v.check(fgg <= optim + 1e-4, "bounds.fgg_below_optimizer[" + kd.name +
                                             ",c=" + fmt(c) + "]");
            em.row({kd.name, fmt(kd.order), fmt(c), mu_s, vs_s, fmt(fgg), fmt(optim)});
        }
    }
    em.flush(opt.json, opt.out_path);
    return v.finish();
}

// ---------------------------------------------------------------------------

struct BlockInfo {
    std::string pair_name;
    Measurement a, b;
};

BlockInfo block_info(const std::string& block) {
    if (block == "DA_HV") return {"X-Z", x_basis(), z_basis()};
    if (block == "DA_GK") return {"X-W", x_basis(), gk_basis()};
    if (block == "HV_GK") return {"Z-W", z_basis(), gk_basis()};
    throw std::runtime_error("unknown marginal block: " + block);
}

int cmd_entropy(const Options& opt) {
    const std::string which = opt.entropy.empty() ? "shannon" : opt.entropy;
    const EntropyKind kind = parse_entropy(which);
    const double order = which == "shannon" ? 0.0 : opt.k;
    auto rows = load_table2(opt.fixtures + "/table2.csv");

    Emitter em;
    em.columns = {"entropy", "k",           "theta_deg",     "pair",
                  "overlap", "ideal_total", "fixture_total", "deviation"};
    Verdicts v;
    for (const auto& r : rows) {
        BlockInfo info = block_info(r.block);
        DensityMatrix rho1 =
            partial_trace(phi_theta(deg2rad(r.theta_deg)).to_density(), 0, {2, 2});
        auto pa = born_probabilities(rho1, info.a);
        auto pb = born_probabilities(rho1, info.b);
        const double ideal =
            entropy_of(kind, order, pa) + entropy_of(kind, order, pb);
        auto ma = r.renormalized_a();
        auto mb = r.renormalized_b();
        const double measured =
            entropy_of(kind, order, ma) + entropy_of(kind, order, mb);
        const double c = max_overlap(info.a, info.b);
        if (kind == EntropyKind::Shannon) {
            const double mu = entropic_lower_bound(ReferenceBound::MU, kind, 0.0, c);
            v.check(ideal >= mu - 1e-9, "entropy.ideal_above_mu[" + info.pair_name +
                                            ",theta=" + fmt(r.theta_deg) + "]");
        }
        em.row({which, fmt(order), fmt(r.theta_deg), info.pair_name, fmt(c),
                fmt(ideal), fmt(measured), fmt(std::abs(measured - ideal))});
    }
    em.flush(opt.json, opt.out_path);
    return v.finish();
}

// ---------------------------------------------------------------------------

int cmd_coherence(const Options& opt) {
    auto rows = load_table3(opt.fixtures + "/table3.csv");
    // Group by theta, preserving file order.
    std::vector<double> thetas;
    for (const auto& r : rows)
        if (thetas.empty() || thetas.back() != r.theta_deg) thetas.push_back(r.theta_deg);

    Emitter em;
    em.columns = {"theta_deg", "d_h", "phi_at_min_deg", "error"};
    Verdicts v;
    for (double th : thetas) {
        std::vector<double> phis;
        std::vector<std::vector<double>> scans;
        std::vector<double> p_ref;
        for (const auto& r : rows) {
            if (r.theta_deg != th) continue;
            auto p = r.renormalized();
            if (r.phi_deg == 0.0) p_ref = {p[0], p[1]};
            phis.push_back(r.phi_deg);
            scans.push_back({p[0], p[1]});
        }
        if (p_ref.empty()) throw std::runtime_error("no phi=0 reference row for theta");
        MarginalScanResult res = d_h_from_marginals(p_ref, phis, scans);
        // The marginal of the prepared state is incoherent, so the ideal
        // witness value is zero and the error equals D_H itself.
        em.row({fmt(th), fmt(res.d_h), fmt(res.phi_at_min_deg), fmt(res.d_h)});
        v.check(std::abs(res.d_h) <= 0.0401, "coherence.d_h_within_bound[theta=" + fmt(th) + "]");
    }
    em.flush(opt.json, opt.out_path);
    return v.finish();
}

// ---------------------------------------------------------------------------

int cmd_chsh(const Options& opt) {
    auto rows = load_table4(opt.fixtures + "/table4.csv");
    std::vector<double> thetas = opt.thetas;
    if (thetas.empty())
        thetas.assign(kTable4Thetas.begin(), kTable4Thetas.end());
    const std::size_t n_samples = opt.samples ? opt.samples : kDefaultResamples;

    Emitter em;
    em.columns = {"theta_deg",        "s",          "std",        "p_value",
                  "below_resolution", "gauss_tail", "gamma",      "violates_classical",
                  "quantum_ok",       "ns_ok"};
    Verdicts v;
    for (double th : thetas) {
        auto recs = chsh_counts_at(rows, th);
        CorrelationTable t = table_from_counts(recs);
        ChshReport rep = check_chsh_relation(t);

        std::vector<double> counts;
        for (const auto& r : recs) counts.push_back(r.count);
        auto stat = [&recs](const std::vector<double>& c) {
            std::vector<CoincidenceRecord> rs = recs;
            for (std::size_t i = 0; i < rs.size(); ++i) rs[i].count = c[i];
            return chsh_value(table_from_counts(rs));
        };
        auto samples = poisson_resample(counts, stat, n_samples, opt.seed);
        ResampleReport boot = summarize_above_bound(samples, 2.0);

        const double gamma = quantum_chsh_value(deg2rad(th));
        em.row({fmt(th), fmt(rep.s), fmt(boot.stddev), fmt(boot.p_value),
                boot.below_resolution ? "1" : "0", fmt(boot.gaussian_tail_p), fmt(gamma),
                rep.classical_ok ? "0" : "1", rep.quantum_ok ? "1" : "0",
                rep.no_signaling_ok ? "1" : "0"});
        v.check(!rep.classical_ok, "chsh.violates_classical[theta=" + fmt(th) + "]");
        v.check(rep.quantum_ok, "chsh.quantum_ok[theta=" + fmt(th) + "]");
        v.check(rep.s > 2.0, "chsh.s_above_2[theta=" + fmt(th) + "]");
    }
    em.flush(opt.json, opt.out_path);
    return v.finish();
}

// ---------------------------------------------------------------------------

int cmd_svetlichny(const Options& opt) {
    Emitter em;
    em.columns = {"item", "value", "ok"};
    Verdicts v;

    GhzSvetlichnyResult ghz = ghz_optimal_svetlichny();
    const bool ghz_ok = std::abs(ghz.value - 4.0 * std::numbers::sqrt2) <= 1e-6;
    em.row({"ghz_optimum", fmt(ghz.value), ghz_ok ? "1" : "0"});
    v.check(ghz_ok, "svetlichny.ghz_optimum_4sqrt2");

    double det_max = 0.0;
    for (int mask = 0; mask < 64; ++mask) {
        std::array<int, 6> out{};
        for (int i = 0; i < 6; ++i) out[i] = (mask >> i) & 1;
        SvetlichnyReport rep = svetlichny_check(CorrelationTable3::deterministic(out));
        for (double p : sort_desc(rep.f).prefix_sums()) det_max = std::max(det_max, p);
    }
    const bool det_ok = det_max <= 4.0 + 1e-9;
    em.row({"deterministic_max_prefix", fmt(det_max), det_ok ? "1" : "0"});
    v.check(det_ok, "svetlichny.deterministic_below_4");

    SvetlichnyReport ns = svetlichny_check(CorrelationTable3::svetlichny_ns_box());
    const bool ns_ok = !ns.classical_ok && !ns.quantum_ok && ns.ns_ok;
    em.row({"ns_box_value", fmt(ns.s), ns_ok ? "1" : "0"});
    v.check(ns_ok, "svetlichny.ns_box_hierarchy");

    std::array<Observable, 2> a{xy_plane_observable(ghz.angles_rad[0]),
                                xy_plane_observable(ghz.angles_rad[1])};
    std::array<Observable, 2> b{xy_plane_observable(ghz.angles_rad[2]),
                                xy_plane_observable(ghz.angles_rad[3])};
    std::array<Observable, 2> c{xy_plane_observable(ghz.angles_rad[4]),
                                xy_plane_observable(ghz.angles_rad[5])};
    SvetlichnyReport box =
        svetlichny_check(CorrelationTable3::from_state(ghz3().to_density(), a, b, c));
    const bool box_ok = !box.classical_ok && box.quantum_ok;
    em.row({"ghz_box_value", fmt(box.s), box_ok ? "1" : "0"});
    v.check(box_ok, "svetlichny.ghz_box_hierarchy");

    em.flush(opt.json, opt.out_path);
    return v.finish();
}

// ---------------------------------------------------------------------------

int cmd_witness(const Options& opt) {
    Emitter em;
    em.columns = {"state", "value", "c_separable", "violated"};
    Verdicts v;
    WitnessOperator w = WitnessOperator::bell_phi_plus();

    WitnessReport ent = witness_uncertainty_relation(w, phi_theta(kPi / 4).to_density());
    em.row({"phi_plus", fmt(ent.value), fmt(ent.c_separable), ent.violated ? "1" : "0"});
    v.check(ent.violated, "witness.phi_plus_violates");
    v.check(std::abs(ent.value - 0.5) <= 1e-6, "witness.phi_plus_value_half");

    WitnessReport mix = witness_uncertainty_relation(w, DensityMatrix::maximally_mixed(4));
    em.row({"maximally_mixed", fmt(mix.value), fmt(mix.c_separable),
            mix.violated ? "1" : "0"});
    v.check(!mix.violated, "witness.mixed_state_passes");

    em.flush(opt.json, opt.out_path);
    return v.finish();
}

// ---------------------------------------------------------------------------

int cmd_tomography(const Options& opt) {
    std::vector<double> thetas = opt.thetas;
    if (thetas.empty()) thetas = {15.0, 30.0, 45.0, 60.0};
    const double mean_counts =
        opt.samples ? static_cast<double>(opt.samples) : 1e4;

    Emitter em;
    em.columns = {"theta_deg", "fidelity"};
    Verdicts v;
    for (double th : thetas) {
        DensityMatrix rho = phi_theta(deg2rad(th)).to_density();
        TomographyInput input = simulate_tomography_noisy(rho, mean_counts, opt.seed);
        DensityMatrix rec = tomography_reconstruct(input);
        const double f = fidelity(rec, rho);
        em.row({fmt(th), fmt(f)});
        v.check(f >= 0.98, "tomography.fidelity_above_098[theta=" + fmt(th) + "]");
    }
    em.flush(opt.json, opt.out_path);
    return v.finish();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Majorization-based quantumness witnesses"};
    app.require_subcommand(1);

    Options opt;
    std::string chosen;
    for (const char* name : {"bounds", "entropy", "coherence", "chsh", "svetlichny",
                             "witness", "tomography"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--entropy", opt.entropy, "entropy kind: shannon, renyi, tsallis")
            ->check(CLI::IsMember({"shannon", "renyi", "tsallis", "all"}));
        sub->add_option("--k", opt.k, "Renyi/Tsallis order (k > 0, k != 1)");
        sub->add_option("--theta", opt.thetas, "theta list in degrees");
        sub->add_option("--fixtures", opt.fixtures, "fixture directory");
        sub->add_option("--seed", opt.seed, "RNG seed");
        sub->add_option("--samples", opt.samples, "resample / count budget");
        sub->add_option("--out", opt.out_path, "write output to a file");
        sub->add_flag("--json", opt.json, "emit JSON instead of CSV");
        sub->callback([&chosen, name] { chosen = name; });
    }

    CLI11_PARSE(app, argc, argv);

    if (opt.k <= 0.0 || opt.k == 1.0) {
        std::cerr << "{\"failed_verdicts\":[\"cli.invalid_order\"]}\n";
        return 2;
    }
    for (double th : opt.thetas)
        if (th < 0.0 || th > 90.0) {
            std::cerr << "{\"failed_verdicts\":[\"cli.theta_out_of_range\"]}\n";
            return 2;
        }

    try {
        if (chosen == "bounds") return cmd_bounds(opt);
        if (chosen == "entropy") return cmd_entropy(opt);
        if (chosen == "coherence") return cmd_coherence(opt);
        if (chosen == "chsh") return cmd_chsh(opt);
        if (chosen == "svetlichny") return cmd_svetlichny(opt);
        if (chosen == "witness") return cmd_witness(opt);
        if (chosen == "tomography") return cmd_tomography(opt);
    } catch (const std::exception& e) {
        std::cerr << "{\"failed_verdicts\":[\"cli.error\"],\"message\":"
                  << ordered_json(e.what()).dump() << "}\n";
        return 2;
    }
    return 2;
}
