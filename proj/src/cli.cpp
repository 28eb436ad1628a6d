#include "hypsum/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>

#include "hypsum/errors.hpp"
#include "hypsum/gamma.hpp"
#include "hypsum/hypergeometric.hpp"
#include "hypsum/identities.hpp"
#include "hypsum/report_format.hpp"

namespace hypsum {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    std::vector<IdentityId> identities;
    IntRange nu;
    IntRange i;
    std::vector<BigRational> alpha;
    EvalMode mode = EvalMode::exact();
    OutputFormat format = OutputFormat::Csv;
    std::optional<std::string> output_path;
    unsigned workers = 1;
    bool inject_fault = false;
};

/// Raw flag values shared by the subcommands.
struct Flags {
    std::string identity;
    std::string nu;
    std::string i;
    std::string n;
    std::vector<std::string> alpha;
    std::string mode = "exact";
    double tol = kDefaultTolerance;
    std::string format = "csv";
    std::string out;
    int workers = 1;
    bool inject_fault = false;
};

long parse_count(std::string_view text, std::string_view flag) {
    long value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || value < 0) {
        throw UsageError(std::string(flag) + ": expected a nonnegative integer, got '" +
                         std::string(text) + "'");
    }
    return value;
}

IntRange parse_range(std::string_view text, std::string_view flag) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const long v = parse_count(text, flag);
        return {v, v};
    }
    const IntRange range{parse_count(text.substr(0, dots), flag),
                         parse_count(text.substr(dots + 2), flag)};
    if (range.empty()) {
        throw UsageError(std::string(flag) + ": empty range '" + std::string(text) + "'");
    }
    return range;
}

std::vector<BigRational> parse_alphas(const std::vector<std::string>& texts) {
    std::vector<BigRational> out;
    for (const auto& t : texts) {
        try {
            out.push_back(BigRational::parse(t));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--alpha: ") + e.what());
        }
    }
    return out;
}

EvalMode parse_mode(const Flags& flags) {
    if (flags.mode == "exact") {
        return EvalMode::exact();
    }
    if (flags.mode == "float") {
        if (!(flags.tol > 0.0)) {
            throw UsageError("--tol must be positive");
        }
        return EvalMode::floating(flags.tol);
    }
    throw UsageError("--mode must be exact or float, got '" + flags.mode + "'");
}

std::vector<IdentityId> resolve_identities(const std::string& name, bool with_alpha) {
    using Kind = IdentityId::Kind;
    if (name == "all") {
        std::vector<IdentityId> ids = {Kind::KnuthEven,     Kind::KnuthOdd,     Kind::RiordanEven,
                                       Kind::RiordanOdd,    Kind::TheoremEven,  Kind::TheoremOdd,
                                       Kind::CorollaryEven, Kind::CorollaryOdd};
        if (with_alpha) {
            ids.emplace_back(Kind::MasterEven);
            ids.emplace_back(Kind::MasterOdd);
        }
        return ids;
    }
    if (name == "corollary") {
        return {Kind::CorollaryEven, Kind::CorollaryOdd};
    }
    if (auto id = IdentityId::from_name(name)) {
        return {*id};
    }
    throw UsageError("unknown identity '" + name + "'");
}

RunConfig build_config(const Flags& flags) {
    RunConfig config;
    config.alpha = parse_alphas(flags.alpha);
    config.identities = resolve_identities(flags.identity, !config.alpha.empty());
    config.nu = parse_range(flags.nu.empty() ? "0..10" : flags.nu, "--nu");
    config.i = parse_range(flags.i.empty() ? "0..3" : flags.i, "--i");
    config.mode = parse_mode(flags);
    const auto format = output_format_from_name(flags.format);
    if (!format) {
        throw UsageError("--format must be csv, json, markdown or latex");
    }
    config.format = *format;
    if (!flags.out.empty()) {
        config.output_path = flags.out;
    }
    if (flags.workers < 1) {
        throw UsageError("--workers must be at least 1");
    }
    config.workers = static_cast<unsigned>(flags.workers);
    config.inject_fault = flags.inject_fault;
    return config;
}

std::vector<VerificationReport> run_grid(const RunConfig& config, bool clamp_corollary) {
    std::vector<VerificationReport> reports;
    for (const IdentityId id : config.identities) {
        Grid grid{config.nu, config.i, config.alpha, config.mode};
        const bool corollary = id.kind() == IdentityId::Kind::CorollaryEven ||
                               id.kind() == IdentityId::Kind::CorollaryOdd;
        if (corollary && clamp_corollary) {
            grid.i.hi = std::min(grid.i.hi, 3L);
        }
        auto part = verify(id, grid, {config.workers, config.inject_fault});
        std::move(part.begin(), part.end(), std::back_inserter(reports));
    }
    return reports;
}

void write_output(const RunConfig& config, const std::string& text, std::ostream& out) {
    if (!config.output_path) {
        out << text;
        return;
    }
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file || !(file << text)) {
        throw UsageError("cannot write " + *config.output_path);
    }
}

std::string describe_point(const VerificationReport& r) {
    std::string s(r.identity.name());
    if (r.point.nu) s += " nu=" + std::to_string(*r.point.nu);
    if (r.point.i) s += " i=" + std::to_string(*r.point.i);
    if (r.point.alpha) s += " alpha=" + r.point.alpha->to_string();
    return s;
}

int run_verify(const Flags& flags, bool table_only, std::ostream& out, std::ostream& err) {
    const RunConfig config = build_config(flags);
    const auto reports = run_grid(config, flags.identity == "all");
    write_output(config, emit_table(reports, config.format), out);
    if (table_only) {
        return kExitOk;
    }
    int status = kExitOk;
    for (const auto& r : reports) {
        if (!r.matched) {
            err << "mismatch: " << describe_point(r) << " lhs=" << format_value(r.lhs)
                << " rhs=" << format_value(r.rhs) << '\n';
            status = kExitMismatch;
        }
    }
    return status;
}

unsigned long single_integer(const std::string& text, std::string_view flag) {
    if (text.empty()) {
        throw UsageError(std::string(flag) + " is required for this identity");
    }
    return static_cast<unsigned long>(parse_count(text, flag));
}

Value evaluate_single(const Flags& flags) {
    using Kind = IdentityId::Kind;
    // --nu and --n are accepted interchangeably for the single integer argument.
    const std::string& index_text = flags.n.empty() ? flags.nu : flags.n;
    const auto index = [&] { return single_integer(index_text, "--n/--nu"); };
    const auto shift = [&] { return single_integer(flags.i, "--i"); };
    const std::vector<BigRational> alphas = parse_alphas(flags.alpha);

    if (flags.identity == "knuth-lhs") {
        return knuth_lhs(index(), shift());
    }
    const auto id = IdentityId::from_name(flags.identity);
    if (!id) {
        throw UsageError("unknown identity '" + flags.identity + "' for eval");
    }
    switch (id->kind()) {
        case Kind::KnuthEven: return knuth_closed_form(index(), Parity::Even);
        case Kind::KnuthOdd: return knuth_closed_form(index(), Parity::Odd);
        case Kind::RiordanEven: return riordan_closed_form(index(), Parity::Even);
        case Kind::RiordanOdd: return riordan_closed_form(index(), Parity::Odd);
        case Kind::TheoremEven: return theorem_rhs(index(), shift(), Parity::Even);
        case Kind::TheoremOdd: return theorem_rhs(index(), shift(), Parity::Odd);
        case Kind::CorollaryEven:
        case Kind::CorollaryOdd: {
            const unsigned long i = shift();
            if (i > 3) {
                throw DomainError("corollary closed forms exist for i in 0..3 only");
            }
            return corollary_rhs(index(), i,
                                 id->kind() == Kind::CorollaryOdd ? Parity::Odd : Parity::Even);
        }
        case Kind::MasterEven:
        case Kind::MasterOdd: {
            if (alphas.size() != 1) {
                throw UsageError("master identities take exactly one --alpha");
            }
            const EvalMode mode = parse_mode(flags);
            const MasterValue v = id->kind() == Kind::MasterEven
                                      ? master_even(index(), alphas[0], shift(), mode)
                                      : master_odd(index(), alphas[0], shift(), mode);
            return v;
        }
        case Kind::GaussSecond: {
            if (alphas.size() != 2) {
                throw UsageError("gauss-second takes --alpha a --alpha b");
            }
            const auto a = HalfInt::from_rational(alphas[0]);
            const auto b = HalfInt::from_rational(alphas[1]);
            if (!a || !b) {
                throw UsageError("gauss-second needs half-integer a and b");
            }
            return pival_as_rational(gauss_second(*a, *b));
        }
    }
    throw UsageError("unsupported identity for eval");
}

int run_eval(const Flags& flags, std::ostream& out) {
    out << format_value(evaluate_single(flags)) << '\n';
    return kExitOk;
}

void add_grid_flags(CLI::App& cmd, Flags& flags) {
    cmd.add_option("--identity", flags.identity,
                   "Identity name, 'corollary' for both parities, or 'all'")
        ->required();
    cmd.add_option("--nu", flags.nu,
                   "Inclusive range a..b, default 0..10 (n for master, m for gauss-second)");
    cmd.add_option("--i", flags.i, "Inclusive range of shifts a..b, default 0..3");
    cmd.add_option("--alpha", flags.alpha, "Rational p/q; repeatable")->take_all();
    cmd.add_option("--mode", flags.mode, "exact or float");
    cmd.add_option("--tol", flags.tol, "Relative tolerance for float mode");
    cmd.add_option("--format", flags.format, "csv, json, markdown or latex");
    cmd.add_option("--out", flags.out, "Write the table to this file");
    cmd.add_option("--workers", flags.workers, "Parallel grid workers");
    cmd.add_flag("--inject-fault", flags.inject_fault)->group("");
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of terminating hypergeometric sums and binomial identities",
                 "hypsum"};
    app.require_subcommand(1);

    Flags verify_flags;
    Flags table_flags;
    Flags eval_flags;
    auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against direct sums");
    add_grid_flags(*verify_cmd, verify_flags);
    auto* table_cmd = app.add_subcommand("table", "Emit a table of both sides without gating");
    add_grid_flags(*table_cmd, table_flags);
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate one expression");
    eval_cmd->add_option("--identity", eval_flags.identity, "knuth-lhs or an identity name")
        ->required();
    eval_cmd->add_option("--n", eval_flags.n, "Summation index n");
    eval_cmd->add_option("--nu", eval_flags.nu, "nu");
    eval_cmd->add_option("--i", eval_flags.i, "Shift i");
    eval_cmd->add_option("--alpha", eval_flags.alpha, "Rational p/q; repeatable")->take_all();
    eval_cmd->add_option("--mode", eval_flags.mode, "exact or float");
    eval_cmd->add_option("--tol", eval_flags.tol, "Tolerance for float mode");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (verify_cmd->parsed()) {
            return run_verify(verify_flags, false, out, err);
        }
        if (table_cmd->parsed()) {
            return run_verify(table_flags, true, out, err);
        }
        return run_eval(eval_flags, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace hypsum
