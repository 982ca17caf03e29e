#include "cli/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "cli/channel_file.hpp"
#include "pbec/errors.hpp"
#include "pbec/gcc.hpp"
#include "pbec/oracle.hpp"
#include "pbec/rate_bounds.hpp"

namespace pbec::cli {

namespace {

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream os(path);
    if (!os) throw std::ios_base::failure("cannot write " + path);
    os << content;
    if (!os) throw std::ios_base::failure("write failed: " + path);
}

std::string sidecar_path(const std::string& code_path) { return code_path + ".gcc.json"; }

struct ConstructArgs {
    std::uint32_t q = 2;
    std::size_t n = 0, m = 0, t = 0, w = 0;
    std::string channel;
    int levels = 3;
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultBudget;
    std::string out;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out)
{
    std::optional<PbeChannel> ch;
    std::optional<AdmissibilityProfile> profile;
    if (!a.channel.empty()) {
        ch.emplace(parse_channel(read_json_file(a.channel), a.budget));
        try {
            profile = profile_empirical(ch->e1(), ch->e2(), a.budget);
        } catch (const BudgetExceeded&) {
        }
    } else {
        if (a.n == 0 || a.m == 0) throw ParameterError("construct: --n and --m are required without --channel");
        if (a.w > a.m) throw ParameterError("construct: --w exceeds --m");
        if (a.t > a.n) throw ParameterError("construct: --t exceeds --n");
        ch.emplace(PbeChannel::hamming(field_of_order(a.q), a.n, a.m, a.t, a.w));
        profile = profile_hamming(a.q, double(a.t) / double(a.n));
    }
    ConstructionOptions opt;
    opt.seed = a.seed;
    opt.budget = a.budget;
    const ConstructionResult r = a.levels == 2 ? construct_2level(*ch, opt) : construct_3level(*ch, opt);

    out << a.levels << "-level construction over GF(" << ch->field()->order() << "), n=" << ch->n() << " m=" << ch->m()
        << " w=" << ch->w() << "\n";
    out << "E1 = " << ch->e1().describe() << "\nE2 = " << ch->e2().describe() << "\n";
    if (a.levels == 3 && r.searched_dims.size() == 2) out << "middle level left empty: the 2-level chain is larger\n";
    out << "greedy inner dimensions:";
    for (auto k : r.searched_dims) out << ' ' << k;
    out << "\nchosen inner dimensions:";
    for (auto k : r.chosen_dims) out << ' ' << k;
    out << "\n" << r.certificate.report();
    out << "dimension " << r.code.dimension() << " of " << ch->n() * ch->m() << ", rate " << fmt(r.code.rate()) << "\n";
    if (profile) {
        const ChannelShape s{ch->field()->order(), double(ch->w()) / double(ch->m()), *profile};
        out << "formula rate (W = w/m): " << fmt(clamp_rate(a.levels == 2 ? rate_2lvl(s) : rate_3lvl(s))) << "\n";
    }
    if (!a.out.empty()) {
        std::ostringstream code;
        write_code(code, r.code.code(), std::make_pair(r.code.n(), r.code.m()));
        write_file(a.out, code.str());
        write_file(sidecar_path(a.out), gcc_json(r.code).dump(1) + "\n");
        out << "wrote " << a.out << " and " << sidecar_path(a.out) << "\n";
    }
    return r.certificate.valid() ? kOk : kNegative;
}

struct VerifyArgs {
    std::string code;
    std::string channel;
    bool oracle = false;
    bool force = false;
    std::uint64_t budget = kDefaultBudget;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    std::ifstream in(a.code);
    if (!in) throw std::ios_base::failure("cannot open " + a.code);
    const CodeFile file = read_code(in);
    const std::uint64_t budget = a.force ? std::numeric_limits<std::uint64_t>::max() : a.budget;
    const PbeChannel ch = parse_channel(read_json_file(a.channel), budget);
    if (file.code.field() != ch.field()) throw ParameterError("verify: code and channel use different fields");
    if (file.shape && (file.shape->first != ch.n() || file.shape->second != ch.m())) {
        throw ParameterError("verify: code shape differs from the channel's n x m");
    }
    if (file.code.n() != ch.n() * ch.m()) throw ParameterError("verify: code length is not n*m");

    try {
        if (!a.oracle && std::filesystem::exists(sidecar_path(a.code))) {
            const GccCode gcc = gcc_build(parse_gcc(read_json_file(sidecar_path(a.code))));
            if (!(gcc.code() == file.code)) throw ParameterError("verify: structure file does not describe this code");
            const PbecCertificate cert = certify_property1(gcc, ch.e1(), ch.e2(), ch.w(), budget);
            out << cert.report();
            out << (cert.valid() ? "CERTIFIED" : "NOT-CERTIFIED") << "\n";
            return cert.valid() ? kOk : kNegative;
        }
        const bool ok = is_pbecc_linear(file.code, ch, OracleBudget{budget, budget, budget});
        out << (ok ? "ORACLE-TRUE" : "ORACLE-FALSE") << "\n";
        return ok ? kOk : kNegative;
    } catch (const BudgetExceeded& e) {
        out << "UNKNOWN(budget): " << e.what() << "\n";
        return kBudget;
    }
}

int cmd_example(const std::string& name, std::ostream& out)
{
    std::vector<std::string> names = name == "all" ? example_names() : std::vector<std::string>{name};
    bool all_pass = true;
    for (const auto& nm : names) {
        out << "== " << nm << "\n";
        for (const auto& c : run_example(nm)) {
            out << (c.pass() ? "  [pass] " : "  [FAIL] ") << c.name << ": computed " << fmt(c.computed) << ", expected "
                << fmt(c.expected) << " (tol " << fmt(c.tolerance) << ")\n";
            all_pass = all_pass && c.pass();
        }
    }
    return all_pass ? kOk : kNegative;
}

} // namespace

std::string bounds_csv(const SweepRequest& req)
{
    if (req.steps < 2) throw ParameterError("bounds: need at least 2 grid steps");
    if (!(req.fixed >= 0 && req.fixed <= 1)) throw ParameterError("bounds: fixed value must lie in [0,1]");
    std::ostringstream os;
    os << "x,classical_gv,classical_h,gv,h,r2lvl,r3lvl\n";
    for (std::size_t i = 0; i < req.steps; ++i) {
        const double x = double(i) / double(req.steps - 1);
        const double T = req.mode == SweepRequest::Mode::FixT ? req.fixed : x;
        const double W = req.mode == SweepRequest::Mode::FixT ? x : req.fixed;
        const RatePoint p = rate_point_hamming(req.q, T, W);
        os << fmt(x) << ',' << fmt(clamp_rate(p.r_classical_gv)) << ',' << fmt(clamp_rate(p.r_classical_h)) << ','
           << fmt(clamp_rate(p.r_gv)) << ',' << fmt(clamp_rate(p.r_h)) << ',' << fmt(clamp_rate(p.r_2lvl)) << ','
           << fmt(clamp_rate(p.r_3lvl)) << '\n';
    }
    return os.str();
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Phased burst error correction: rate bounds, GCC constructions and exhaustive verification"};
    app.require_subcommand(1);

    SweepRequest sweep;
    std::optional<double> fix_t, fix_w;
    std::string bounds_out;
    auto* bounds = app.add_subcommand("bounds", "Rate curves of the Hamming family as CSV");
    bounds->add_option("--q", sweep.q, "Field size")->check(CLI::Range(2u, FieldSpec::kMaxOrder));
    auto* ft = bounds->add_option("--fix-T", fix_t, "Sweep W with T fixed");
    auto* fw = bounds->add_option("--fix-W", fix_w, "Sweep T with W fixed");
    ft->excludes(fw);
    bounds->add_option("--steps", sweep.steps, "Grid points (>= 2)");
    bounds->add_option("--out", bounds_out, "Output CSV path (stdout if omitted)");

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "Build a 2- or 3-level GCC and its certificate");
    construct->add_option("--q", cargs.q, "Field size");
    construct->add_option("--n", cargs.n, "Column length");
    construct->add_option("--m", cargs.m, "Number of columns");
    construct->add_option("--t", cargs.t, "Hamming radius of E2 (E1 = {0})");
    construct->add_option("--w", cargs.w, "Burst width");
    construct->add_option("--channel", cargs.channel, "Channel JSON file instead of --n/--m/--t/--w");
    construct->add_option("--levels", cargs.levels, "2 or 3")->check(CLI::IsMember({2, 3}));
    construct->add_option("--seed", cargs.seed, "Search seed");
    construct->add_option("--budget", cargs.budget, "Enumeration cap");
    construct->add_option("--out", cargs.out, "Code file to write");

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "Verify a code against a channel");
    verify->add_option("code", vargs.code, "Code file")->required();
    verify->add_option("channel", vargs.channel, "Channel JSON file")->required();
    verify->add_flag("--oracle", vargs.oracle, "Use the exhaustive oracle even if a structure file exists");
    verify->add_flag("--force", vargs.force, "Lift the enumeration cap");
    verify->add_option("--budget", vargs.budget, "Enumeration cap");

    std::string example_name;
    auto* example = app.add_subcommand("example", "Recompute a worked example");
    example->add_option("name", example_name, "e2, e4, e5, e6, remark1, fig2a, fig2b or all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParameter;
    }

    try {
        if (*bounds) {
            if (!fix_t && !fix_w) throw ParameterError("bounds: one of --fix-T or --fix-W is required");
            sweep.mode = fix_t ? SweepRequest::Mode::FixT : SweepRequest::Mode::FixW;
            sweep.fixed = fix_t ? *fix_t : *fix_w;
            const std::string csv = bounds_csv(sweep);
            if (bounds_out.empty()) {
                out << csv;
            } else {
                write_file(bounds_out, csv);
            }
            return kOk;
        }
        if (*construct) return cmd_construct(cargs, out);
        if (*verify) return cmd_verify(vargs, out);
        if (*example) return cmd_example(example_name, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const std::ios_base::failure& e) {
        err << "i/o error: " << e.what() << "\n";
        return kIo;
    } catch (const ParameterError& e) {
        err << "parameter error: " << e.what() << "\n";
        return kParameter;
    } catch (const SearchExhausted& e) {
        err << "search failed: " << e.what() << "\n";
        return kParameter;
    } catch (const nlohmann::json::exception& e) {
        err << "parameter error: " << e.what() << "\n";
        return kParameter;
    }
    return kParameter;
}

} // namespace pbec::cli
