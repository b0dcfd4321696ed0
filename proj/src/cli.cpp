#include "toric_volume/cli.hpp"

#include "toric_volume/accumulation.hpp"
#include "toric_volume/blowup_chain.hpp"
#include "toric_volume/errors.hpp"
#include "toric_volume/intersection.hpp"
#include "toric_volume/serialization.hpp"
#include "toric_volume/snp.hpp"
#include "toric_volume/volume.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace toric::cli {

namespace {

constexpr int kDefaultDecimalDigits = 12;

// Exact rendering, with an optional labeled decimal approximation.
struct Printer {
    std::optional<int> digits;

    std::string operator()(const Rational& v) const
    {
        if (!digits)
            return to_string(v);
        return to_string(v) + " (APPROX " + to_decimal(v, *digits) + ", " + std::to_string(*digits) + " digits)";
    }

    void annotate(Json& obj, const std::string& key, const Rational& v) const
    {
        obj[key] = to_string(v);
        if (digits)
            obj[key + "_approx"] = Json{{"value", to_decimal(v, *digits)}, {"digits", *digits}};
    }
};

GermParams require_germ(const CommandConfig& config)
{
    std::optional<std::string> path = config.germ_path;
    if (!path) {
        if (const char* env = std::getenv(kGermEnvVar); env && *env)
            path = env;
    }
    if (!path)
        throw UsageError(config.command + ": a germ file is required (--germ <file> or " + kGermEnvVar + ")");
    return load_germ_file(*path);
}

std::optional<GermParams> optional_germ(const CommandConfig& config)
{
    if (config.germ_path || (std::getenv(kGermEnvVar) && *std::getenv(kGermEnvVar)))
        return require_germ(config);
    return std::nullopt;
}

std::vector<LatticeVector> require_pairs(const CommandConfig& config)
{
    if (!config.weights)
        throw UsageError(config.command + ": --weights is required");
    const std::string& w = *config.weights;
    std::vector<LatticeVector> pairs =
        !w.empty() && w.front() == '@' ? weight_pairs_from_json(read_json_file(w.substr(1))) : parse_weight_pairs(w);
    if (pairs.empty())
        throw ValidationError("weights: need at least one pair");
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].p < 1 || pairs[i].q < 1)
            throw ValidationError("weights: pair " + std::to_string(i + 1) + " must have positive entries");
    return pairs;
}

WeightSequence require_weights(const CommandConfig& config)
{
    return WeightSequence(require_pairs(config));
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads; results keep index order.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, Fn fn)
{
    std::vector<T> results(count);
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < count; i = next++)
                    results[i] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c)
                width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                out << "  ";
            out << std::setw(static_cast<int>(width[c])) << row[c];
        }
        out << '\n';
    }
}

int cmd_intersect(const CommandConfig& config, std::ostream& out)
{
    const auto ws = require_weights(config);
    const auto germ = optional_germ(config);
    const auto m = intersection_matrix(ws, germ);

    if (config.format == OutputFormat::Json) {
        out << matrix_to_json(m).dump(2) << '\n';
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{""};
    for (std::size_t j = 0; j < m.dim(); ++j)
        header.push_back("C" + std::to_string(j));
    rows.push_back(header);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        std::vector<std::string> row{"C" + std::to_string(i)};
        for (std::size_t j = 0; j < m.dim(); ++j)
            row.push_back(m.defined(i, j) ? to_string(m.at(i, j)) : "undefined");
        rows.push_back(std::move(row));
    }
    if (config.format == OutputFormat::Csv) {
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? "," : "") << row[c];
            out << '\n';
        }
        return kExitOk;
    }
    print_table(out, rows);
    return kExitOk;
}

int cmd_check_snp(const CommandConfig& config, std::ostream& out, std::ostream& err)
{
    const auto pairs = require_pairs(config);
    const auto germ = require_germ(config);
    const auto verdict = check_membership(std::span<const LatticeVector>(pairs), germ);

    if (config.format == OutputFormat::Json) {
        Json failures = Json::array();
        for (const auto& f : verdict.failures)
            failures.push_back(Json{{"tag", f.tag()}, {"k", f.k}, {"detail", f.detail}});
        out << Json{{"member", verdict.member}, {"failures", std::move(failures)}}.dump(2) << '\n';
    } else {
        out << (verdict.member ? "member" : "not a member") << '\n';
        for (const auto& f : verdict.failures)
            out << f.diagnostic() << '\n';
    }
    if (!verdict.member) {
        err << verdict.failures.front().diagnostic() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_gen_snp(const CommandConfig& config, std::ostream& out)
{
    if (!config.n)
        throw UsageError("gen-snp: --n is required");
    const auto germ = require_germ(config);
    std::optional<Integer> p1;
    if (config.p1)
        p1 = parse_integer(*config.p1);
    const auto ws = seed(*config.n, germ, p1);
    if (config.format == OutputFormat::Json)
        out << Json{{"n", ws.size()}, {"weights", weights_to_json(ws)}}.dump(2) << '\n';
    else
        out << format_weights(ws) << '\n';
    return kExitOk;
}

int cmd_volume(const CommandConfig& config, std::ostream& out, std::ostream& err)
{
    const auto ws = require_weights(config);
    const auto germ = require_germ(config);
    const Printer show{config.decimal_digits};

    VolumeReport report;
    try {
        report = volume_z(ws, germ);
    } catch (const NotAdmissibleError& e) {
        for (const auto& f : e.verdict().failures)
            err << f.diagnostic() << '\n';
        return kExitFailure;
    }
    std::optional<Rational> oracle;
    if (config.oracle)
        oracle = volume_via_intersection(ws, germ);
    const bool agree = !oracle || *oracle == report.vol_z;

    if (config.format == OutputFormat::Json) {
        Json j = volume_report_to_json(report);
        if (config.decimal_digits) {
            show.annotate(j, "f_value", report.f_value);
            show.annotate(j, "vol_z", report.vol_z);
        }
        if (oracle) {
            show.annotate(j, "oracle", *oracle);
            j["agree"] = agree;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "f = " << show(report.f_value) << '\n';
        out << "vol_z = " << show(report.vol_z) << '\n';
        out << "vol_x = " << show(report.vol_x) << '\n';
        if (oracle) {
            out << "oracle = " << show(*oracle) << '\n';
            out << (agree ? "AGREE" : "DISAGREE") << '\n';
        }
    }
    return agree ? kExitOk : kExitFailure;
}

int cmd_factorize(const CommandConfig& config, std::ostream& out)
{
    const auto ws = require_weights(config);
    const auto steps = factorize(ws);
    if (config.format == OutputFormat::Json) {
        out << factorization_to_json(steps).dump(2) << '\n';
        return kExitOk;
    }
    for (const auto& s : steps) {
        out << "step " << s.index << ": 1/" << to_string(s.singularity.r) << "(1," << to_string(s.singularity.a)
            << "), weights (" << to_string(s.weights.first) << ", " << to_string(s.weights.second) << "), mult "
            << to_string(s.multiplicity) << '\n';
    }
    out << "multiplicities:";
    for (const auto& m : chain_multiplicities(ws))
        out << ' ' << to_string(m);
    out << '\n';
    return kExitOk;
}

struct ChainRow {
    std::size_t level = 0;
    Integer m;
    Rational value;
    Rational increment;
};

void write_chain_csv(std::ostream& os, const std::vector<ChainRow>& rows, bool volumes, const Printer& show)
{
    os << "level,m," << (volumes ? "vol" : "f_value") << ",increment";
    if (show.digits)
        os << ',' << (volumes ? "vol" : "f_value") << "_approx,increment_approx";
    os << '\n';
    for (const auto& r : rows) {
        os << r.level << ',' << to_string(r.m) << ',' << to_string(r.value) << ',' << to_string(r.increment);
        if (show.digits)
            os << ',' << to_decimal(r.value, *show.digits) << ',' << to_decimal(r.increment, *show.digits);
        os << '\n';
    }
}

int cmd_chain(const CommandConfig& config, std::ostream& out, std::ostream& err)
{
    if (!config.n)
        throw UsageError("chain: --n is required");
    if (config.samples < 1)
        throw UsageError("chain: --samples must be >= 1");
    const auto germ = require_germ(config);
    const Printer show{config.decimal_digits};

    const auto cert = build_chain(*config.n, germ);
    const bool verified = verify_certificate(cert, std::max<std::size_t>(config.samples, 2));

    struct Task {
        const CertificateLevel* level;
        Integer m;
    };
    std::vector<Task> tasks;
    for (const auto& lvl : cert.levels)
        for (auto& m : lvl.sample_ms(config.samples))
            tasks.push_back({&lvl, std::move(m)});

    auto rows = parallel_map<ChainRow>(tasks.size(), config.jobs, [&](std::size_t i) {
        const auto& t = tasks[i];
        Rational f = f_value(t.level->family_tuple(t.m), germ);
        Rational value = config.volumes ? Rational(germ.vol_x - f) : f;
        return ChainRow{t.level->level, t.m, value, Rational(f - t.level->limit_value)};
    });

    if (config.csv_path) {
        std::ofstream file(*config.csv_path);
        if (!file)
            throw ValidationError("cannot write '" + *config.csv_path + "'");
        write_chain_csv(file, rows, config.volumes, show);
    }

    if (config.format == OutputFormat::Json) {
        Json table = Json::array();
        for (const auto& r : rows) {
            Json row{{"level", r.level}, {"m", integer_to_json(r.m)}};
            show.annotate(row, config.volumes ? "vol" : "f_value", r.value);
            show.annotate(row, "increment", r.increment);
            table.push_back(std::move(row));
        }
        Json j = certificate_to_json(cert);
        j["verified"] = verified;
        j["rows"] = std::move(table);
        out << j.dump(2) << '\n';
    } else if (config.format == OutputFormat::Csv) {
        write_chain_csv(out, rows, config.volumes, show);
    } else {
        out << "certificate: " << cert.level() << " levels, p = (";
        for (std::size_t i = cert.levels.size(); i-- > 0;)
            out << to_string(cert.levels[i].varying_p) << (i ? ", " : "");
        out << "), " << (verified ? "VERIFIED" : "FAILED") << '\n';
        for (const auto& lvl : cert.levels)
            out << "level " << lvl.level << ": limit " << show(lvl.limit_value) << ", m >= " << to_string(lvl.m_start)
                << " coprime to " << to_string(lvl.m_coprime_to) << '\n';
        std::vector<std::vector<std::string>> table{{"level", "m", config.volumes ? "vol" : "f_value", "increment"}};
        for (const auto& r : rows)
            table.push_back({std::to_string(r.level), to_string(r.m), show(r.value), show(r.increment)});
        print_table(out, table);
    }
    if (!verified) {
        err << "chain: certificate verification FAILED\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_lift(const CommandConfig& config, std::ostream& out)
{
    if (!config.d || !config.v)
        throw UsageError("lift: --d and --v are required");
    const Printer show{config.decimal_digits};
    Rational value = lift_to_dimension(*config.d, parse_rational(*config.v));
    if (config.format == OutputFormat::Json) {
        Json j{{"d", *config.d}, {"v", to_string(parse_rational(*config.v))}};
        show.annotate(j, "volume", value);
        out << j.dump(2) << '\n';
    } else {
        out << show(value) << '\n';
    }
    return kExitOk;
}

int cmd_verify_cert(const CommandConfig& config, std::ostream& out)
{
    if (!config.cert_path)
        throw UsageError("verify-cert: --cert is required");
    const auto cert = certificate_from_json(read_json_file(*config.cert_path));
    const bool ok = verify_certificate(cert, std::max<std::size_t>(config.samples, 2));
    out << (ok ? "VERIFIED" : "FAILED") << '\n';
    return ok ? kExitOk : kExitFailure;
}

} // namespace

std::optional<CommandConfig> parse_command_line(
    const std::vector<std::string>& args, std::ostream& out, std::ostream& err, int& exit_code)
{
    CommandConfig config;
    CLI::App app{"Exact intersection numbers, admissible tuples, volumes and accumulation certificates "
                 "for toric weighted blow-ups of a surface germ"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    auto* decimal = app.add_option("--decimal", "Append labeled decimal approximations (default 12 digits)")
                        ->expected(0, 1);
    app.add_option("--jobs", config.jobs, "Worker threads for batch evaluation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto add_weights = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--weights", config.weights, "p1:q1,p2:q2,... or @file.json");
        if (required)
            o->required();
    };
    auto add_germ = [&](CLI::App* sub) {
        sub->add_option("--germ", config.germ_path, std::string("Germ JSON file (default: $") + kGermEnvVar + ")");
    };

    auto* intersect = app.add_subcommand("intersect", "Print the intersection matrix of C_0..C_{n+1}");
    add_weights(intersect, true);
    add_germ(intersect);

    auto* check = app.add_subcommand("check-snp", "Check the admissibility conditions of a tuple");
    add_weights(check, true);
    add_germ(check);

    auto* gen = app.add_subcommand("gen-snp", "Generate an admissible tuple of length n");
    gen->add_option("--n", config.n, "Tuple length")->required()->check(CLI::PositiveNumber);
    add_germ(gen);
    gen->add_option("--p1", config.p1, "First weight p1 (default l+n-1)");

    auto* volume = app.add_subcommand("volume", "Volume defect f and vol(Z) for an admissible tuple");
    add_weights(volume, true);
    add_germ(volume);
    volume->add_flag("--oracle", config.oracle, "Also compute the volume through the intersection matrix");

    auto* fact = app.add_subcommand("factorize", "Factor the toric morphism into weighted blow-ups");
    add_weights(fact, true);

    auto* chain = app.add_subcommand("chain", "Build, verify and sample a nested accumulation certificate");
    chain->add_option("--n", config.n, "Number of levels")->required()->check(CLI::PositiveNumber);
    add_germ(chain);
    chain->add_option("--samples", config.samples, "Rows per level")->check(CLI::PositiveNumber)->capture_default_str();
    chain->add_flag("--volumes", config.volumes, "Report vol_x - f instead of f");
    chain->add_option("--csv", config.csv_path, "Also write the table as CSV to this path");

    auto* lift = app.add_subcommand("lift", "Volume of the product with a general degree-(d+1) hypersurface");
    lift->add_option("--d", config.d, "Target dimension (>= 3)")->required();
    lift->add_option("--v", config.v, "Surface volume as an exact rational")->required();

    auto* verify = app.add_subcommand("verify-cert", "Verify a certificate JSON file");
    verify->add_option("--cert", config.cert_path, "Certificate file")->required();
    verify->add_option("--samples", config.samples, "Samples per level")->capture_default_str();

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        exit_code = app.exit(e, out, err);
        if (exit_code != 0)
            exit_code = kExitUsage;
        return std::nullopt;
    }

    config.command = app.get_subcommands().front()->get_name();
    config.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Text;
    if (decimal->count() > 0) {
        auto values = decimal->results();
        int digits = kDefaultDecimalDigits;
        if (!values.empty() && !values.front().empty()) {
            try {
                digits = std::stoi(values.front());
            } catch (const std::exception&) {
                err << "--decimal: not a digit count: " << values.front() << '\n';
                exit_code = kExitUsage;
                return std::nullopt;
            }
        }
        if (digits < 0) {
            err << "--decimal: digit count must be >= 0\n";
            exit_code = kExitUsage;
            return std::nullopt;
        }
        config.decimal_digits = digits;
    }
    exit_code = kExitOk;
    return config;
}

int run(const CommandConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        const auto& c = config.command;
        if (c == "intersect")
            return cmd_intersect(config, out);
        if (c == "check-snp")
            return cmd_check_snp(config, out, err);
        if (c == "gen-snp")
            return cmd_gen_snp(config, out);
        if (c == "volume")
            return cmd_volume(config, out, err);
        if (c == "factorize")
            return cmd_factorize(config, out);
        if (c == "chain")
            return cmd_chain(config, out, err);
        if (c == "lift")
            return cmd_lift(config, out);
        if (c == "verify-cert")
            return cmd_verify_cert(config, out);
        throw UsageError("unknown command '" + c + "'");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GermValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::logic_error& e) {
        // ValidationError, DomainError and PreconditionError all derive from logic_error.
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed JSON input: " << e.what() << '\n';
        return kExitFailure;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    int exit_code = kExitOk;
    auto config = parse_command_line(args, out, err, exit_code);
    if (!config)
        return exit_code;
    return run(*config, out, err);
}

} // namespace toric::cli
