#include "tribq/cli.hpp"

#include "tribq/audit.hpp"
#include "tribq/binet.hpp"
#include "tribq/errors.hpp"
#include "tribq/matrices.hpp"
#include "tribq/report.hpp"
#include "tribq/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace tribq {

namespace {

using nlohmann::json;

enum class OutputFormat { table, json, csv };

struct CommonFlags {
    OutputFormat format = OutputFormat::table;
    std::string out_path;
};

/// Raised for bad input that CLI11 cannot see (ranges, domains).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Rendered {
    std::string text;
    int code = kExitOk;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    std::map<std::string, OutputFormat> names{
        {"table", OutputFormat::table}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
    cmd->add_option("--format", flags.format, "table, json or csv")->transform(CLI::CheckedTransformer(names));
    cmd->add_option("--out", flags.out_path, "write output to PATH instead of stdout");
}

std::string dump(const json& j) { return serialize(j); }

// ---- seq ----------------------------------------------------------------

Rendered cmd_seq(const std::string& kind_name, Index from, Index to, OutputFormat format) {
    SequenceKind kind = parse_sequence_kind(kind_name);
    if (from > to) throw UsageError("--from must not exceed --to");
    if (from < domain_min(kind)) {
        throw UsageError(std::string(to_string(kind)) + " is defined for " + std::string(domain_text(kind)));
    }
    std::ostringstream os;
    json values = json::array();
    std::vector<std::pair<Index, std::string>> rows;
    for (Index n = from; n <= to; ++n) rows.emplace_back(n, to_decimal(sequence_value(kind, n)));

    switch (format) {
        case OutputFormat::csv:
            os << "n,value\n";
            for (const auto& [n, v] : rows) os << n << ',' << v << '\n';
            break;
        case OutputFormat::json:
            for (const auto& [n, v] : rows) values.push_back({{"n", n}, {"value", v}});
            os << dump({{"version", kReportSchemaVersion}, {"kind", to_string(kind)}, {"values", values}});
            break;
        case OutputFormat::table: {
            std::size_t w = 1;
            for (const auto& [n, v] : rows) w = std::max(w, std::to_string(n).size());
            os << std::setw(static_cast<int>(w)) << "n" << "  " << to_string(kind) << "_n\n";
            for (const auto& [n, v] : rows) os << std::setw(static_cast<int>(w)) << n << "  " << v << '\n';
            break;
        }
    }
    return {os.str(), kExitOk};
}

// ---- quat ---------------------------------------------------------------

Rendered cmd_quat(const std::string& kind_name, Index n, OutputFormat format) {
    QuatSeqKind kind = parse_quat_kind(kind_name);
    if (n < domain_min(kind)) throw UsageError(std::string(to_string(kind)) + " is defined for n >= 0");
    Quaternion q = seq_quaternion(kind, n);
    BigInt norm = qnorm(q);
    std::ostringstream os;
    switch (format) {
        case OutputFormat::csv:
            os << "kind,n,a0,a1,a2,a3,norm\n"
               << to_string(kind) << ',' << n << ',' << to_decimal(q.a0) << ',' << to_decimal(q.a1) << ','
               << to_decimal(q.a2) << ',' << to_decimal(q.a3) << ',' << to_decimal(norm) << '\n';
            break;
        case OutputFormat::json:
            os << dump({{"version", kReportSchemaVersion},
                        {"kind", to_string(kind)},
                        {"n", n},
                        {"quaternion", to_json(q)},
                        {"display", to_display(q)},
                        {"norm", to_decimal(norm)}});
            break;
        case OutputFormat::table:
            os << to_string(kind) << '_' << n << " = " << to_display(q) << '\n' << "norm = " << to_decimal(norm) << '\n';
            break;
    }
    return {os.str(), kExitOk};
}

// ---- binet --------------------------------------------------------------

int precision_floor_from_env() {
    const char* raw = std::getenv("TRIBQ_PRECISION_BITS");
    if (!raw || !*raw) return 0;
    try {
        std::size_t used = 0;
        int bits = std::stoi(raw, &used);
        if (used != std::string(raw).size()) throw std::invalid_argument(raw);
        return bits;
    } catch (const std::exception&) {
        throw UsageError(std::string("TRIBQ_PRECISION_BITS is not an integer: '") + raw + "'");
    }
}

json complex_json(const BigComplex& z) { return {{"re", z.re.to_fixed(12)}, {"im", z.im.to_sci(6)}}; }

Rendered cmd_binet(const std::string& kind_name, Index n, std::optional<int> precision, OutputFormat format) {
    int bits = precision ? *precision : std::max(policy_precision(n), precision_floor_from_env());
    if (bits < kMinPrecisionBits) throw UsageError("precision must be at least 64 bits");
    if (bits < policy_precision(n)) {
        throw UsageError("precision " + std::to_string(bits) + " is below the policy minimum " +
                         std::to_string(policy_precision(n)) + " for n = " + std::to_string(n));
    }
    Roots roots = compute_roots(bits);
    std::ostringstream os;

    if (kind_name == "T" || kind_name == "K") {
        SequenceKind kind = parse_sequence_kind(kind_name);
        ScalarBinet b = binet_scalar(kind, n, roots);
        BigInt exact = sequence_value(kind, n);
        bool match = b.rounded == exact;
        switch (format) {
            case OutputFormat::csv:
                os << "kind,n,precision_bits,approx_re,approx_im,residue,rounded,exact,match\n"
                   << kind_name << ',' << n << ',' << bits << ',' << b.approx.re.to_fixed(12) << ','
                   << b.approx.im.to_sci(6) << ',' << b.residue.to_sci(6) << ',' << to_decimal(b.rounded) << ','
                   << to_decimal(exact) << ',' << (match ? "MATCH" : "MISMATCH") << '\n';
                break;
            case OutputFormat::json:
                os << dump({{"version", kReportSchemaVersion},
                            {"kind", kind_name},
                            {"n", n},
                            {"precision_bits", bits},
                            {"approx", complex_json(b.approx)},
                            {"residue", b.residue.to_sci(6)},
                            {"rounded", to_decimal(b.rounded)},
                            {"exact", to_decimal(exact)},
                            {"match", match}});
                break;
            case OutputFormat::table:
                os << kind_name << '_' << n << " at " << bits << " bits\n"
                   << "approx   = " << b.approx.re.to_fixed(12) << " + (" << b.approx.im.to_sci(6) << ")i\n"
                   << "residue  = " << b.residue.to_sci(6) << '\n'
                   << "rounded  = " << to_decimal(b.rounded) << '\n'
                   << "exact    = " << to_decimal(exact) << '\n'
                   << (match ? "MATCH" : "MISMATCH") << '\n';
                break;
        }
        return {os.str(), match ? kExitOk : kExitMismatch};
    }

    QuatSeqKind kind = parse_quat_kind(kind_name);
    QuaternionBinet b = binet_quaternion(kind, n, roots);
    Quaternion exact = seq_quaternion(kind, n);
    bool match = b.rounded == exact;
    switch (format) {
        case OutputFormat::csv:
            os << "kind,n,precision_bits,residue,rounded_a0,rounded_a1,rounded_a2,rounded_a3,match\n"
               << kind_name << ',' << n << ',' << bits << ',' << b.residue.to_sci(6);
            for (std::size_t c = 0; c < 4; ++c) os << ',' << to_decimal(b.rounded[c]);
            os << ',' << (match ? "MATCH" : "MISMATCH") << '\n';
            break;
        case OutputFormat::json: {
            json approx = json::array();
            for (const auto& z : b.approx.c) approx.push_back(complex_json(z));
            os << dump({{"version", kReportSchemaVersion},
                        {"kind", kind_name},
                        {"n", n},
                        {"precision_bits", bits},
                        {"approx", approx},
                        {"residue", b.residue.to_sci(6)},
                        {"rounded", to_json(b.rounded)},
                        {"exact", to_json(exact)},
                        {"match", match}});
            break;
        }
        case OutputFormat::table:
            os << kind_name << '_' << n << " at " << bits << " bits\n";
            for (std::size_t c = 0; c < 4; ++c) {
                os << "approx a" << c << " = " << b.approx.c[c].re.to_fixed(12) << " + (" << b.approx.c[c].im.to_sci(6)
                   << ")i\n";
            }
            os << "residue  = " << b.residue.to_sci(6) << '\n'
               << "rounded  = " << to_display(b.rounded) << '\n'
               << "exact    = " << to_display(exact) << '\n'
               << (match ? "MATCH" : "MISMATCH") << '\n';
            break;
    }
    return {os.str(), match ? kExitOk : kExitMismatch};
}

// ---- series -------------------------------------------------------------

Rendered cmd_series(const std::string& name, Index count, OutputFormat format) {
    if (count < 0) throw UsageError("count must be >= 0");
    RationalSeries s = builtin_series(name);
    std::vector<Quaternion> coeffs = expand(s, static_cast<std::size_t>(count));
    const bool scalar = name != "G";
    std::ostringstream os;
    switch (format) {
        case OutputFormat::csv:
            os << (scalar ? "n,coefficient\n" : "n,a0,a1,a2,a3\n");
            for (std::size_t n = 0; n < coeffs.size(); ++n) {
                os << n;
                if (scalar) {
                    os << ',' << to_decimal(coeffs[n].a0);
                } else {
                    for (std::size_t c = 0; c < 4; ++c) os << ',' << to_decimal(coeffs[n][c]);
                }
                os << '\n';
            }
            break;
        case OutputFormat::json: {
            json list = json::array();
            for (const auto& q : coeffs) list.push_back(scalar ? json(to_decimal(q.a0)) : to_json(q));
            os << dump({{"version", kReportSchemaVersion}, {"name", name}, {"count", count}, {"coefficients", list}});
            break;
        }
        case OutputFormat::table:
            if (scalar) {
                for (std::size_t n = 0; n < coeffs.size(); ++n) os << (n ? "," : "") << to_decimal(coeffs[n].a0);
                os << '\n';
            } else {
                for (std::size_t n = 0; n < coeffs.size(); ++n) os << "[x^" << n << "] " << to_display(coeffs[n]) << '\n';
            }
            break;
    }
    return {os.str(), kExitOk};
}

// ---- matrix -------------------------------------------------------------

Rendered cmd_matrix(Index n, OutputFormat format) {
    Quaternion q = seq_quaternion(QuatSeqKind::Q, n);
    Mat2C x = phi(q);
    GaussInt d = det2(x);
    BigInt norm = qnorm(q);
    bool equal = d.im == 0 && d.re == norm;
    std::ostringstream os;
    switch (format) {
        case OutputFormat::csv:
            os << "n,m11,m12,m21,m22,det,norm,equal\n"
               << n << ',' << to_string(x.m[0][0]) << ',' << to_string(x.m[0][1]) << ',' << to_string(x.m[1][0]) << ','
               << to_string(x.m[1][1]) << ',' << to_string(d) << ',' << to_decimal(norm) << ','
               << (equal ? "MATCH" : "MISMATCH") << '\n';
            break;
        case OutputFormat::json: {
            json rows = json::array();
            for (const auto& row : x.m) rows.push_back({to_string(row[0]), to_string(row[1])});
            os << dump({{"version", kReportSchemaVersion},
                        {"n", n},
                        {"matrix", rows},
                        {"det", to_string(d)},
                        {"norm", to_decimal(norm)},
                        {"det_equals_norm", equal}});
            break;
        }
        case OutputFormat::table:
            os << "phi(Q_" << n << ") =\n"
               << to_display(x) << "det  = " << to_string(d) << '\n'
               << "norm = " << to_decimal(norm) << '\n'
               << (equal ? "MATCH" : "MISMATCH") << '\n';
            break;
    }
    return {os.str(), equal ? kExitOk : kExitMismatch};
}

// ---- pow ----------------------------------------------------------------

Rendered cmd_pow(const std::string& kind_name, Index n, OutputFormat format) {
    SequenceKind kind = parse_sequence_kind(kind_name);
    BigInt v = fast_seq(kind, n);
    std::size_t digits = decimal_digits(v);
    std::ostringstream os;
    switch (format) {
        case OutputFormat::csv: os << "kind,n,digits,value\n" << kind_name << ',' << n << ',' << digits << ',' << to_decimal(v) << '\n'; break;
        case OutputFormat::json:
            os << dump({{"version", kReportSchemaVersion}, {"kind", kind_name}, {"n", n}, {"digits", digits},
                        {"value", to_decimal(v)}});
            break;
        case OutputFormat::table:
            os << kind_name << '_' << n << " = " << to_decimal(v) << '\n' << "digits = " << digits << '\n';
            break;
    }
    return {os.str(), kExitOk};
}

// ---- audit --------------------------------------------------------------

std::string describe_point(const std::vector<std::string>& vars, const std::vector<Index>& p) {
    std::string s;
    for (std::size_t v = 0; v < vars.size(); ++v) s += (v ? ", " : "") + vars[v] + "=" + std::to_string(p[v]);
    return s;
}

Rendered cmd_audit(const std::string& ids_csv, Index max_n, Index max_m, const std::string& report_path,
                   bool timestamps, unsigned threads, OutputFormat format) {
    AuditProfile profile;
    profile.max_n = max_n;
    profile.max_m = max_m;
    profile.check.threads = threads;
    std::stringstream ids(ids_csv);
    for (std::string id; std::getline(ids, id, ',');) {
        if (id.empty()) continue;
        find_identity(id);
        profile.ids.push_back(id);
    }
    AuditResult result = run_audit(profile);
    json report = audit_to_json(result, profile, {timestamps});
    if (!report_path.empty()) write_file_atomically(report_path, serialize(report));

    bool all_pass = true;
    for (const auto& r : result.reports) all_pass = all_pass && r.status == Status::pass;

    std::ostringstream os;
    if (format == OutputFormat::json && report_path.empty()) {
        os << serialize(report);
    } else if (format == OutputFormat::csv) {
        os << "id,status,counterexample_count,minimal_counterexample\n";
        for (const auto& r : result.reports) {
            os << r.id << ',' << (r.status == Status::pass ? "pass" : "fail") << ',' << r.counterexample_count << ",\""
               << (r.minimal_counterexample ? describe_point(r.vars, *r.minimal_counterexample) : "") << "\"\n";
        }
    } else {
        std::size_t pass = 0;
        for (const auto& r : result.reports) {
            os << std::left << std::setw(7) << r.id << (r.status == Status::pass ? "pass" : "FAIL");
            if (r.status == Status::fail) {
                os << "  " << r.counterexample_count << " counterexample(s), minimal "
                   << describe_point(r.vars, *r.minimal_counterexample);
            } else {
                ++pass;
            }
            os << '\n';
        }
        os << pass << '/' << result.reports.size() << " identities pass\n";
        for (const auto& note : result.notes) os << "note: " << note << '\n';
        if (!report_path.empty()) os << "report written to " << report_path << '\n';
    }
    return {os.str(), all_pass ? kExitOk : kExitMismatch};
}

void emit(const Rendered& r, const CommonFlags& flags, std::ostream& out) {
    if (flags.out_path.empty()) {
        out << r.text;
    } else {
        write_file_atomically(flags.out_path, r.text);
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tribonacci and Tribonacci-Lucas quaternions: sequences, algebra, closed forms and identity audit",
                 "tribq"};
    app.require_subcommand(1);

    std::optional<Rendered> rendered;
    CommonFlags flags;
    // Audit writes its JSON report to --out itself; the summary always goes to stdout.
    bool audit_selected = false;

    std::string kind;
    Index from = 0, to = 0, n = 0, count = 0;

    auto* seq = app.add_subcommand("seq", "exact sequence values T, K, R, U, C or S over an index range");
    seq->add_option("kind", kind, "T, K, R, U, C or S")->required();
    seq->add_option("from", from, "first index")->required();
    seq->add_option("to", to, "last index")->required();
    add_common(seq, flags);
    seq->callback([&] { rendered = cmd_seq(kind, from, to, flags.format); });

    auto* quat = app.add_subcommand("quat", "a sequence quaternion Q, Qtilde, Rtilde, Utilde or Cunder with its norm");
    quat->add_option("kind", kind, "Q, Qtilde, Rtilde, Utilde or Cunder")->required();
    quat->add_option("n", n, "index")->required();
    add_common(quat, flags);
    quat->callback([&] { rendered = cmd_quat(kind, n, flags.format); });

    std::optional<int> precision;
    auto* binet = app.add_subcommand("binet", "closed-form evaluation of T, K, Q or Qtilde, checked against the exact value");
    binet->add_option("kind", kind, "T, K, Q or Qtilde")->required();
    binet->add_option("n", n, "index")->required();
    binet->add_option("--precision", precision, "working precision in bits (default: policy, raised by TRIBQ_PRECISION_BITS)");
    add_common(binet, flags);
    binet->callback([&] { rendered = cmd_binet(kind, n, precision, flags.format); });

    std::string name;
    auto* series = app.add_subcommand("series", "coefficients of the generating functions f, h, G or normT");
    series->add_option("name", name, "f, h, G or normT")->required();
    series->add_option("count", count, "number of coefficients")->required();
    add_common(series, flags);
    series->callback([&] { rendered = cmd_series(name, count, flags.format); });

    auto* matrix = app.add_subcommand("matrix", "2x2 complex matrix image of Q_n with determinant and norm");
    matrix->add_option("n", n, "index")->required();
    add_common(matrix, flags);
    matrix->callback([&] { rendered = cmd_matrix(n, flags.format); });

    auto* pow = app.add_subcommand("pow", "T_n or K_n through companion-matrix powers");
    pow->add_option("kind", kind, "T or K")->required();
    pow->add_option("n", n, "index")->required();
    add_common(pow, flags);
    pow->callback([&] { rendered = cmd_pow(kind, n, flags.format); });

    std::string ids;
    Index max_n = 200, max_m = 50;
    bool no_timestamps = false;
    unsigned threads = 0;
    auto* audit = app.add_subcommand("audit", "check the identity catalog over index grids");
    audit->add_option("--ids", ids, "comma-separated identity ids (default: all)");
    audit->add_option("--max-n", max_n, "upper bound for single-variable identities")->capture_default_str();
    audit->add_option("--max-m", max_m, "upper bound for both variables of two-variable identities")->capture_default_str();
    audit->add_flag("--no-timestamps", no_timestamps, "omit generated_at and zero elapsed_ms for reproducible reports");
    audit->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");
    add_common(audit, flags);
    audit->callback([&] {
        audit_selected = true;
        rendered = cmd_audit(ids, max_n, max_m, flags.out_path, !no_timestamps, threads, flags.format);
    });

    std::vector<std::string> argv_storage{"tribq"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnknownName& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PrecisionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (!rendered) return kExitUsage;
    try {
        if (audit_selected) {
            out << rendered->text;
        } else {
            emit(*rendered, flags, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return rendered->code;
}

}  // namespace tribq
