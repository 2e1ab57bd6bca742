#include "abcone/bg.hpp"
#include "abcone/cli.hpp"
#include "abcone/errors.hpp"
#include "abcone/ks.hpp"
#include "abcone/model.hpp"
#include "abcone/oracle.hpp"
#include "abcone/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace abcone::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kRangeHelp =
    "Ranges are lo:hi:step, inclusive of lo; hi is included only when hi-lo is an exact "
    "multiple of step. A bare number is a single point.";

struct Options {
    std::string format;
    std::string output;

    std::string effect = "ab";
    int s = 1;
    long long n = 0;
    std::string alpha_range = "0.05:1:0.05";
    std::string beta_range = "0:0.95:0.05";

    double alpha = 1.0;
    double phi = 0.0;
    double mass = 1.0;
    double g_factor = model::kElectronGFactor;

    std::string nu = "friedrichs";
    double k = 1.0;
    std::string m_range = "-5:5";

    std::string method = "bg";
    std::optional<double> j;
    std::optional<long long> m;
    std::optional<double> lambda;
    double r0 = 1e-3;
    std::string variant = "published";

    std::string r_range = "0.5:5:0.5";
    std::string varphi_range = "0";
    long long m_max = 30;
};

struct Output {
    std::string text;
    int code = kExitOk;
};

model::PhysicalConfig physical(const Options& o)
{
    model::PhysicalConfig cfg;
    cfg.alpha = o.alpha;
    cfg.phi = o.phi;
    cfg.s = o.s;
    cfg.mass = o.mass;
    cfg.g_factor = o.g_factor;
    cfg.validate();
    return cfg;
}

bg::ExtensionParam extension(const std::string& text)
{
    std::string lower = text;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "friedrichs" || lower == "inf" || lower == "infinity") {
        return bg::ExtensionParam::friedrichs();
    }
    const auto values = parse_range(text);
    if (values.size() != 1) {
        throw DomainError("nu takes a single number or 'friedrichs' (got '" + text + "')");
    }
    return bg::ExtensionParam::finite(values[0]);
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::string>& rows)
{
    std::string out = std::string(kUnitsBanner) + "\n";
    for (std::size_t i = 0; i < header.size(); ++i) {
        out += (i ? "," : "") + header[i];
    }
    out += "\n";
    for (const auto& r : rows) out += r + "\n";
    return out;
}

std::string json_text(const ordered_json& j)
{
    return std::string(kUnitsBanner) + "\n" + j.dump(2) + "\n";
}

// Rows are comma-joined numbers; re-read them as a JSON array of flat objects.
ordered_json rows_as_json(const std::vector<std::string>& header, const std::vector<std::string>& rows)
{
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json obj = ordered_json::object();
        std::stringstream ss(r);
        std::string cell;
        for (std::size_t i = 0; i < header.size() && std::getline(ss, cell, ','); ++i) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() + cell.size() && !cell.empty() && std::isfinite(v)) {
                obj[header[i]] = v;
            }
            else {
                obj[header[i]] = cell;
            }
        }
        arr.push_back(std::move(obj));
    }
    return arr;
}

std::string grid(const Options& o, const std::vector<std::string>& header,
                 const std::vector<std::string>& rows)
{
    if (o.format == "json") return json_text(rows_as_json(header, rows));
    return csv(header, rows);
}

std::string join(std::initializer_list<std::string> cells)
{
    std::string out;
    for (const auto& c : cells) {
        if (!out.empty()) out += ",";
        out += c;
    }
    return out;
}

Output cmd_planes(const Options& o)
{
    if (o.effect != "ab" && o.effect != "ac") {
        throw DomainError("effect must be 'ab' or 'ac' (got '" + o.effect + "')");
    }
    const auto effect = o.effect == "ab" ? model::Effect::AharonovBohm : model::Effect::AharonovCasher;
    const auto alphas = parse_range(o.alpha_range);
    const auto betas = parse_range(o.beta_range);
    // validate the whole grid before computing
    for (double a : alphas) model::planes(effect, a, 0.0, o.s, o.n);
    for (double b : betas) model::planes(effect, 1.0, b, o.s, o.n);

    const auto rows = parallel_rows(alphas.size() * betas.size(), thread_count(), [&](std::size_t i) {
        const double a = alphas[i / betas.size()];
        const double b = betas[i % betas.size()];
        const auto p = model::planes(effect, a, b, o.s, o.n);
        return join({format_number(a), format_number(b), format_number(p.pi_minus),
                     format_number(p.pi_plus)});
    });
    return {grid(o, {"alpha", "beta", "pi_minus", "pi_plus"}, rows)};
}

Output cmd_region(const Options& o)
{
    const auto cfg = physical(o);
    const auto flux = model::flux_decompose(cfg.phi);
    const auto p = model::planes_ab(cfg.alpha, flux.beta, cfg.s, flux.n_integer);
    const auto critical = model::critical_channels(cfg);
    const auto boundary = model::boundary_channels(cfg);

    if (o.format == "csv") {
        std::vector<std::string> rows;
        for (const auto& ch : critical) {
            rows.push_back(join({std::to_string(ch.m), format_number(ch.j), format_number(ch.lambda),
                                 "critical"}));
        }
        for (const auto& ch : boundary) {
            rows.push_back(join({std::to_string(ch.m), format_number(ch.j), format_number(ch.lambda),
                                 "boundary"}));
        }
        return {csv({"m", "j", "lambda", "status"}, rows)};
    }

    ordered_json out = ordered_json::object();
    out["alpha"] = cfg.alpha;
    out["phi"] = cfg.phi;
    out["s"] = cfg.s;
    out["n_integer"] = flux.n_integer;
    out["beta"] = flux.beta;
    out["pi_minus"] = p.pi_minus;
    out["pi_plus"] = p.pi_plus;
    const auto channel = [](const model::Channel& ch) {
        ordered_json c = ordered_json::object();
        c["m"] = ch.m;
        c["j"] = ch.j;
        c["lambda"] = ch.lambda;
        return c;
    };
    out["critical"] = ordered_json::array();
    for (const auto& ch : critical) out["critical"].push_back(channel(ch));
    out["boundary"] = ordered_json::array();
    for (const auto& ch : boundary) out["boundary"].push_back(channel(ch));
    out["beta_windows"] = ordered_json::array();
    for (const auto& w : model::critical_channels_over_beta(cfg.alpha, cfg.s, flux.n_integer)) {
        ordered_json b = ordered_json::object();
        b["m"] = w.m;
        b["beta_lo"] = w.beta_lo;
        b["beta_hi"] = w.beta_hi;
        out["beta_windows"].push_back(std::move(b));
    }
    const auto amin = model::alpha_min_for_two_channels(cfg.s);
    out["alpha_min"] = amin.alpha;
    out["alpha_min_attained"] = amin.attained;
    if (const auto at = model::alpha_min_at_beta(cfg.s, flux.beta)) {
        out["alpha_min_at_beta"] = at->alpha;
    }
    else {
        out["alpha_min_at_beta"] = nullptr;
    }
    return {json_text(out)};
}

Output cmd_scatter(const Options& o)
{
    const auto cfg = physical(o);
    const auto ext = extension(o.nu);
    if (!(o.k > 0.0)) detail::throw_domain("wavenumber must satisfy k > 0", o.k);
    const auto ms = parse_int_range(o.m_range);
    std::vector<model::Channel> channels;
    for (long long m : ms) {
        const auto ch = model::make_channel(cfg, m);
        if (ch.in_critical_subspace && !ext.is_friedrichs() && std::fabs(ch.j) < bg::kDegenerateJ) {
            throw DegenerateChannelError("channel m = " + std::to_string(m) +
                                         " has |j| < 1e-12; only the Friedrichs extension is defined");
        }
        channels.push_back(ch);
    }

    std::vector<std::string> rows(channels.size());
    for (std::size_t i = 0; i < channels.size(); ++i) {
        const auto& ch = channels[i];
        const auto use = ch.in_critical_subspace ? ext : bg::ExtensionParam::friedrichs();
        const double d_reg = bg::phase_shift_regular(ch.m, ch.j);
        try {
            const auto e = bg::scatter(ch.m, ch.j, use, o.k);
            if (std::fabs(std::abs(e.s_element) - 1.0) > 1e-12) {
                throw NumericalError("unitarity violated in channel m = " + std::to_string(ch.m));
            }
            rows[i] = join({std::to_string(ch.m), format_number(ch.j), format_number(e.delta_reg),
                            format_number(e.delta_nu), format_number(e.s_element.real()),
                            format_number(e.s_element.imag()), ch.in_critical_subspace ? "1" : "0"});
        }
        catch (const PoleError&) {
            rows[i] = join({std::to_string(ch.m), format_number(ch.j), format_number(d_reg), "pole",
                            "pole", "pole", ch.in_critical_subspace ? "1" : "0"});
        }
    }
    return {grid(o, {"m", "j", "delta_reg", "delta_nu", "re_s", "im_s", "critical"}, rows)};
}

Output cmd_bound(const Options& o)
{
    double j = 0.0;
    std::optional<model::PhysicalConfig> cfg;
    if (o.j) {
        j = *o.j;
    }
    else if (o.m) {
        cfg = physical(o);
        j = model::effective_j(*cfg, *o.m);
    }
    else {
        throw DomainError("bound needs --j or --m (with --alpha, --phi, --s) to fix the channel");
    }
    if (!(o.mass > 0.0)) detail::throw_domain("mass must satisfy M > 0", o.mass);

    ordered_json out = ordered_json::object();
    out["j"] = j;
    out["mass"] = o.mass;
    const auto put_state = [&](const bg::BoundState& b) {
        out["method_tag"] = bg::method_tag(b.method);
        out["kappa_b"] = b.kappa_b;
        out["energy"] = b.energy;
    };

    if (o.method == "bg") {
        const auto ext = extension(o.nu);
        if (ext.is_friedrichs()) {
            throw DomainError("bound state with method bg requires a finite nu < 0 (got friedrichs)");
        }
        out["nu"] = ext.nu();
        put_state(bg::bound_state_bg(ext, j, o.mass));
        return {json_text(out)};
    }
    if (o.method != "ks" && o.method != "shell") {
        throw DomainError("method must be one of bg, ks, shell (got '" + o.method + "')");
    }
    double lambda = 0.0;
    if (o.lambda) {
        lambda = *o.lambda;
    }
    else if (cfg) {
        lambda = model::coupling_lambda(*cfg);
    }
    else {
        throw DomainError("methods ks and shell need --lambda, or --m with --alpha, --phi, --s");
    }
    const ks::ShellConfig shell{o.r0, lambda};
    shell.validate();
    if (o.variant != "published" && o.variant != "corrected") {
        throw DomainError("variant must be 'published' or 'corrected' (got '" + o.variant + "')");
    }
    const auto variant = o.variant == "published" ? ks::Matching::Published : ks::Matching::Corrected;
    out["lambda"] = lambda;
    out["r0"] = o.r0;
    out["implied_nu"] = ks::nu_from_physical(shell, j).nu();

    if (o.method == "ks") {
        const auto b = ks::bound_state_ks(shell, j, o.mass, variant);
        put_state(b);
        out["variant"] = o.variant;
        out["small_argument_ok"] = b.kappa_b * o.r0 < 0.5;
        return {json_text(out)};
    }
    const auto b = oracle::delta_shell_bound_state(shell, j, o.mass);
    put_state(b);
    out["kappa_r0"] = b.kappa_b * o.r0;
    try {
        const auto k = ks::bound_state_ks(shell, j, o.mass, variant);
        out["ks_variant"] = o.variant;
        out["ks_kappa_b"] = k.kappa_b;
        out["ks_energy"] = k.energy;
        out["relative_gap"] = std::fabs(b.kappa_b - k.kappa_b) / k.kappa_b;
    }
    catch (const DomainError&) {
        out["ks_kappa_b"] = nullptr;
    }
    return {json_text(out)};
}

Output cmd_wavefunction(const Options& o, std::ostream& err)
{
    const auto cfg = physical(o);
    const auto ext = extension(o.nu);
    if (!(o.k > 0.0)) detail::throw_domain("wavenumber must satisfy k > 0", o.k);
    if (o.m_max < 1) detail::throw_domain("m_max must satisfy m_max >= 1", static_cast<double>(o.m_max));
    const auto rs = parse_range(o.r_range);
    const auto phis = parse_range(o.varphi_range);
    for (double r : rs) {
        if (!(r > 0.0)) detail::throw_domain("radius must satisfy r > 0", r);
    }
    // surfaces channel errors (degenerate |j|, poles) before the grid runs
    bg::partial_wave_sum(cfg, ext, o.k, rs.front(), phis.front(), o.m_max);

    std::vector<bool> truncated(rs.size() * phis.size());
    const auto rows = parallel_rows(rs.size() * phis.size(), thread_count(), [&](std::size_t i) {
        const double r = rs[i / phis.size()];
        const double vp = phis[i % phis.size()];
        const auto w = bg::partial_wave_sum(cfg, ext, o.k, r, vp, o.m_max);
        const double a = std::abs(w.psi);
        truncated[i] = w.tail_estimate > 1e-3 * a;
        return join({format_number(r), format_number(vp), format_number(w.psi.real()),
                     format_number(w.psi.imag()), format_number(a), format_number(w.tail_estimate)});
    });
    const auto n_trunc = std::count(truncated.begin(), truncated.end(), true);
    if (n_trunc > 0) {
        err << "warning: " << n_trunc << " of " << truncated.size()
            << " points have tail_estimate > 1e-3 abs_psi; raise --m-max\n";
    }
    return {grid(o, {"r", "varphi", "re_psi", "im_psi", "abs_psi", "tail_estimate"}, rows)};
}

Output cmd_verify(const Options& o)
{
    const auto report = verify::run_verify();
    const int code = report.all_passed() ? kExitOk : kExitNumerical;
    if (o.format == "json") {
        ordered_json out = ordered_json::object();
        out["all_passed"] = report.all_passed();
        out["checks"] = ordered_json::array();
        for (const auto& c : report.checks) {
            ordered_json e = ordered_json::object();
            e["module"] = c.module;
            e["check"] = c.name;
            e["passed"] = c.passed;
            e["metric"] = std::isfinite(c.metric) ? ordered_json(c.metric) : ordered_json("inf");
            e["tolerance"] = c.tolerance;
            out["checks"].push_back(std::move(e));
        }
        return {json_text(out), code};
    }
    return {std::string(kUnitsBanner) + "\n" + report.table(), code};
}

void add_physical(CLI::App* cmd, Options& o)
{
    cmd->add_option("--alpha", o.alpha, "cone parameter, 0 < alpha <= 1");
    cmd->add_option("--phi", o.phi, "flux in units of the flux quantum");
    cmd->add_option("--s", o.s, "spin projection, -1 or 1");
    cmd->add_option("--mass", o.mass, "mass M > 0");
    cmd->add_option("--g-factor", o.g_factor, "electron g-factor");
}

// Splices "--key value" pairs from a config file in right after the
// subcommand name, so flags given on the command line come later and win.
std::vector<std::string> apply_config(const std::vector<std::string>& args,
                                      const std::vector<std::string>& commands)
{
    std::vector<std::string> rest;
    std::optional<std::string> path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config") {
            if (i + 1 >= args.size()) throw DomainError("--config needs a file path");
            path = args[++i];
        }
        else if (a.rfind("--config=", 0) == 0) {
            path = a.substr(9);
        }
        else {
            rest.push_back(a);
        }
    }
    if (!path) return rest;
    const auto entries = read_config(*path);
    auto pos = std::find_if(rest.begin() + 1, rest.end(), [&](const std::string& a) {
        return std::find(commands.begin(), commands.end(), a) != commands.end();
    });
    if (pos == rest.end()) return rest;
    std::vector<std::string> injected;
    for (const auto& [key, value] : entries) {
        injected.push_back("--" + key);
        injected.push_back(value);
    }
    rest.insert(pos + 1, injected.begin(), injected.end());
    return rest;
}

}  // namespace

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Self-adjoint extensions of the spin-1/2 Aharonov-Bohm problem on a cone.", "abcone"};
    app.footer(std::string(kRangeHelp) +
               "\nA config file (--config FILE) holds 'key = value' lines with the flag names; "
               "flags on the command line win.\nEnvironment: " + kThreadsEnv +
               " sets the worker thread count.\nExit codes: 0 ok, 1 validation error, "
               "2 numerical failure, 3 I/O error.");
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.add_option("--config", "config file of key = value lines");

    auto* planes = app.add_subcommand("planes", "plane grid pi_-(alpha, beta), pi_+(alpha, beta)");
    planes->add_option("--effect", o.effect, "ab or ac");
    planes->add_option("--s", o.s, "spin projection, -1 or 1");
    planes->add_option("--n", o.n, "integer part N of the flux");
    planes->add_option("--alpha", o.alpha_range, "alpha range within (0, 1]");
    planes->add_option("--beta", o.beta_range, "beta range within [0, 1)");

    auto* region = app.add_subcommand("region", "channels where the radial operator is not self-adjoint");
    add_physical(region, o);

    auto* scatter = app.add_subcommand("scatter", "phase shifts and S-matrix per channel");
    add_physical(scatter, o);
    scatter->add_option("--nu", o.nu, "extension parameter: a number or 'friedrichs'");
    scatter->add_option("--k", o.k, "wavenumber k > 0");
    scatter->add_option("--m-range", o.m_range, "angular momentum range lo:hi[:step]");

    auto* bound = app.add_subcommand("bound", "bound state from the bg, ks or shell method");
    add_physical(bound, o);
    bound->add_option("--method", o.method, "bg, ks or shell");
    bound->add_option("--j", o.j, "effective angular momentum, 0 < |j| < 1");
    bound->add_option("--m", o.m, "channel; j then follows from alpha, phi, s");
    bound->add_option("--nu", o.nu, "extension parameter nu < 0 (bg)");
    bound->add_option("--lambda", o.lambda, "shell coupling (ks, shell); defaults to the channel coupling");
    bound->add_option("--r0", o.r0, "core radius r0 > 0 (ks, shell)");
    bound->add_option("--variant", o.variant, "ks matching value: published or corrected");

    auto* wave = app.add_subcommand("wavefunction", "truncated partial-wave sum on an (r, varphi) grid");
    add_physical(wave, o);
    wave->add_option("--nu", o.nu, "extension parameter: a number or 'friedrichs'");
    wave->add_option("--k", o.k, "wavenumber k > 0");
    wave->add_option("--r", o.r_range, "radius range, r > 0");
    wave->add_option("--varphi", o.varphi_range, "angle range");
    wave->add_option("--m-max", o.m_max, "channels m in [-m_max, m_max]");

    auto* ver = app.add_subcommand("verify", "run the invariant suite");

    const std::vector<std::string> names = {"planes", "region", "scatter", "bound", "wavefunction", "verify"};
    for (auto* cmd : {planes, region, scatter, bound, wave, ver}) {
        cmd->add_option("--format", o.format, "csv or json (default: csv for grids, json for region and bound, a text table for verify)")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("-o,--output", o.output, "write to this file instead of stdout");
        cmd->footer(kRangeHelp);
    }

    std::vector<std::string> args;
    try {
        args = apply_config(args_in, names);
    }
    catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    o.format.clear();
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    Output result;
    try {
        if (planes->parsed()) {
            if (o.format.empty()) o.format = "csv";
            result = cmd_planes(o);
        }
        else if (region->parsed()) {
            if (o.format.empty()) o.format = "json";
            result = cmd_region(o);
        }
        else if (scatter->parsed()) {
            if (o.format.empty()) o.format = "csv";
            result = cmd_scatter(o);
        }
        else if (bound->parsed()) {
            if (o.format.empty()) o.format = "json";
            result = cmd_bound(o);
        }
        else if (wave->parsed()) {
            if (o.format.empty()) o.format = "csv";
            result = cmd_wavefunction(o, err);
        }
        else {
            result = cmd_verify(o);
        }
    }
    catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }

    if (o.output.empty()) {
        out << result.text;
        out.flush();
        if (!out) {
            err << "error: failed writing to stdout\n";
            return kExitIo;
        }
    }
    else {
        std::ofstream file(o.output, std::ios::binary);
        file << result.text;
        file.close();
        if (!file) {
            err << "error: cannot write output file '" << o.output << "'\n";
            return kExitIo;
        }
    }
    return result.code;
}

}  // namespace abcone::cli
