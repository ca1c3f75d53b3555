#include "figfig/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "figfig/asymptotics.hpp"
#include "figfig/bfile.hpp"
#include "figfig/diagnostics.hpp"
#include "figfig/seqcore.hpp"

namespace figfig {

namespace {

// 15 significant digits, '.' decimal separator regardless of locale
std::string fmt_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

struct Cell {
    std::string text;
    bool quoted = false;
};

// Writes rows as CSV (header row first) or JSONL with the same keys.
class TableWriter {
public:
    TableWriter(std::ostream& out, std::string format, std::vector<std::string> columns)
        : out_(out), jsonl_(format == "jsonl"), columns_(std::move(columns)) {
        if (!jsonl_) {
            for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
            out_ << '\n';
        }
    }

    void row(const std::vector<Cell>& cells) {
        if (jsonl_) {
            out_ << '{';
            for (std::size_t i = 0; i < cells.size(); ++i) {
                out_ << (i ? "," : "") << '"' << columns_[i] << "\":";
                if (cells[i].quoted) {
                    out_ << '"' << cells[i].text << '"';
                } else {
                    out_ << cells[i].text;
                }
            }
            out_ << "}\n";
        } else {
            for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i].text;
            out_ << '\n';
        }
    }

private:
    std::ostream& out_;
    bool jsonl_;
    std::vector<std::string> columns_;
};

Cell num(Term v) { return {std::to_string(v)}; }
Cell num(double v) { return {fmt_real(v)}; }

struct GenArgs {
    std::string seq;
    Term count = 0;
    std::string format = "bfile";
};

struct CoeffsArgs {
    int order = 0;
    std::string series = "u";
    std::string format = "list";
};

struct ApproxArgs {
    std::string seq;
    int order = 0;
    std::vector<Term> ns;
    std::string format = "csv";
};

struct RemainderArgs {
    std::string seq;
    int order = 0;
    std::vector<Term> ns;
    std::string decades;
    std::string format = "csv";
};

struct VerifyArgs {
    std::string check = "all";
    Term upto = 0;
};

struct CompareArgs {
    std::string seq;
    std::string path;
};

void run_gen(const GenArgs& args, std::ostream& out) {
    GenState state;
    if (args.format == "bfile") {
        const SeqId seq = parse_seq_id(args.seq);
        for (Term i = 0; i < args.count; ++i) {
            const Triple t = state.next();
            out << t.n << ' ' << t.get(seq) << '\n';
        }
        return;
    }
    if (args.seq == "triple") {
        TableWriter table(out, args.format, {"n", "a", "b", "u"});
        for (Term i = 0; i < args.count; ++i) {
            const Triple t = state.next();
            table.row({num(t.n), num(t.a), num(t.b), num(t.u)});
        }
        return;
    }
    const SeqId seq = parse_seq_id(args.seq);
    TableWriter table(out, args.format, {"n", args.seq});
    for (Term i = 0; i < args.count; ++i) {
        const Triple t = state.next();
        table.row({num(t.n), num(t.get(seq))});
    }
}

void run_coeffs(const CoeffsArgs& args, std::ostream& out) {
    const SeriesOrder order(args.order);
    auto coeff = [&](int k) { return args.series == "a" ? a_coeff(k) : alpha(k); };
    if (args.format == "list") {
        for (int k = 1; k <= order.value(); ++k) out << (k > 1 ? ", " : "") << coeff(k).to_string();
        out << '\n';
        return;
    }
    TableWriter table(out, args.format, {"k", "coefficient", "value"});
    for (int k = 1; k <= order.value(); ++k) {
        const Rational c = coeff(k);
        table.row({num(static_cast<Term>(k)), {c.to_string(), true}, num(c.to_double())});
    }
}

void run_approx(const ApproxArgs& args, std::ostream& out) {
    const SeqId seq = parse_seq_id(args.seq);
    const SeriesOrder order(args.order);
    TableWriter table(out, args.format, {"n", "K", "series"});
    for (Term n : args.ns) {
        double value = 0.0;
        switch (seq) {
        case SeqId::a: value = eval_a_series(n, order); break;
        case SeqId::b: value = eval_b_series(n, order); break;
        case SeqId::u: value = eval_u_series(n, order); break;
        }
        table.row({num(n), num(static_cast<Term>(order.value())), num(value)});
    }
}

std::vector<Term> decade_points(const std::string& spec) {
    int lo = 0;
    int hi = 0;
    char colon = 0;
    std::istringstream in(spec);
    if (!(in >> lo >> colon >> hi) || colon != ':' || !in.eof() || lo < 0 || hi < lo || hi > 18) {
        throw std::invalid_argument("--decades expects lo:hi with 0 <= lo <= hi <= 18, got '" + spec + "'");
    }
    std::vector<Term> ns;
    Term p = 1;
    for (int d = 0; d <= hi; ++d, p *= 10) {
        if (d >= lo) ns.push_back(p);
    }
    return ns;
}

void run_remainder(const RemainderArgs& args, std::ostream& out, std::ostream& err) {
    const SeqId seq = parse_seq_id(args.seq);
    const SeriesOrder order(args.order);
    const std::vector<Term> ns = args.decades.empty() ? args.ns : decade_points(args.decades);
    const auto rows = remainder_table(seq, order, ns);
    err << "# scaled = remainder / (n/2)^{" << (seq == SeqId::a ? "1+" : "") << "1/2^(K+1)}; "
        << "no explicit error constants are known, any tolerance applied to these columns is a local choice\n";
    TableWriter table(out, args.format, {"n", "K", "exact", "series", "remainder", "scaled"});
    for (const RemainderRow& r : rows) {
        table.row({num(r.n), num(static_cast<Term>(r.order)), num(r.exact), num(r.series), num(r.remainder),
                   num(r.scaled)});
    }
}

int run_verify(const VerifyArgs& args, std::ostream& out) {
    std::vector<CheckReport> reports;
    if (args.check == "partition" || args.check == "all") reports.push_back(check_partition(args.upto));
    if (args.check == "identities" || args.check == "all") reports.push_back(check_identities(args.upto));
    if (args.check == "bounds" || args.check == "all") reports.push_back(check_bounds(args.upto));

    bool ok = true;
    for (const CheckReport& r : reports) {
        out << r.name << " [" << r.lo << ", " << r.hi << "]: ";
        if (r.passed()) {
            out << "PASS\n";
        } else {
            ok = false;
            out << "FAIL at n=" << r.first_failure->n << ": " << r.first_failure->detail << '\n';
        }
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int run_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
    const SeqId seq = parse_seq_id(args.seq);
    std::ifstream in(args.path);
    if (!in) {
        err << "cannot open " << args.path << '\n';
        return kExitUsage;
    }
    const auto records = parse_bfile(in);
    if (records.empty()) {
        err << args.path << ": no records\n";
        return kExitUsage;
    }
    const CheckReport r = compare_reference(records, seq);
    out << r.name << " [" << r.lo << ", " << r.hi << "]: ";
    if (r.passed()) {
        out << "PASS\n";
        return kExitOk;
    }
    out << "FAIL at n=" << r.first_failure->n << ": " << r.first_failure->detail << '\n';
    return kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hofstadter figure-figure sequences: generation, asymptotic series and checks", "figfig"};
    app.require_subcommand(1);
    std::string out_path;

    const auto seq_names = CLI::IsMember({"a", "b", "u"});

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate terms");
    gen_cmd->add_option("--seq", gen.seq, "a, b, u or triple")->required()->check(CLI::IsMember({"a", "b", "u", "triple"}));
    gen_cmd->add_option("--count", gen.count, "Number of terms")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--format", gen.format, "bfile, csv or jsonl")->check(CLI::IsMember({"bfile", "csv", "jsonl"}));
    gen_cmd->add_option("--out", out_path, "Output file");

    CoeffsArgs coeffs;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "Exact series coefficients");
    coeffs_cmd->add_option("--order", coeffs.order, "Number of coefficients")->required()->check(CLI::Range(1, SeriesOrder::max));
    coeffs_cmd->add_option("--series", coeffs.series, "u (alpha_k) or a")->check(CLI::IsMember({"u", "a"}));
    coeffs_cmd->add_option("--format", coeffs.format, "list, csv or jsonl")->check(CLI::IsMember({"list", "csv", "jsonl"}));
    coeffs_cmd->add_option("--out", out_path, "Output file");

    ApproxArgs approx;
    auto* approx_cmd = app.add_subcommand("approx", "Evaluate the truncated series");
    approx_cmd->add_option("--seq", approx.seq, "a, b or u")->required()->check(seq_names);
    approx_cmd->add_option("--order", approx.order, "Series order K")->required()->check(CLI::Range(1, SeriesOrder::max));
    approx_cmd->add_option("--n", approx.ns, "Index (repeatable)")->required()->check(CLI::PositiveNumber);
    approx_cmd->add_option("--format", approx.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    approx_cmd->add_option("--out", out_path, "Output file");

    RemainderArgs rem;
    auto* rem_cmd = app.add_subcommand("remainder", "Remainder table of the truncated series");
    rem_cmd->add_option("--seq", rem.seq, "a, b or u")->required()->check(seq_names);
    rem_cmd->add_option("--order", rem.order, "Series order K")->required()->check(CLI::Range(1, SeriesOrder::max));
    auto* ns_opt = rem_cmd->add_option("--ns", rem.ns, "Comma-separated increasing indices")->delimiter(',')->check(CLI::PositiveNumber);
    auto* dec_opt = rem_cmd->add_option("--decades", rem.decades, "lo:hi, indices 10^lo .. 10^hi");
    ns_opt->excludes(dec_opt);
    rem_cmd->add_option("--format", rem.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    rem_cmd->add_option("--out", out_path, "Output file");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check identities, partition and bounds");
    verify_cmd->add_option("--check", verify.check, "partition, identities, bounds or all")
        ->check(CLI::IsMember({"partition", "identities", "bounds", "all"}));
    verify_cmd->add_option("--upto", verify.upto, "Largest index checked")->required()->check(CLI::Range(Term{1}, Term{4000000000}));
    verify_cmd->add_option("--out", out_path, "Output file");

    CompareArgs compare;
    auto* compare_cmd = app.add_subcommand("compare", "Compare against a reference b-file");
    compare_cmd->add_option("--seq", compare.seq, "a, b or u")->required()->check(seq_names);
    compare_cmd->add_option("--bfile", compare.path, "Path to the b-file")->required();
    compare_cmd->add_option("--out", out_path, "Output file");

    try {
        std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
        std::reverse(reversed.begin(), reversed.end());
        app.parse(reversed);
        if (rem_cmd->parsed() && rem.ns.empty() && rem.decades.empty()) {
            throw CLI::ValidationError("remainder: one of --ns or --decades is required");
        }
        if (gen_cmd->parsed() && gen.seq == "triple" && gen.format == "bfile") {
            throw CLI::ValidationError("gen: --seq triple needs --format csv or jsonl");
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            err << "cannot write " << out_path << '\n';
            return kExitUsage;
        }
    }
    std::ostream& sink = out_path.empty() ? out : file;

    try {
        int code = kExitOk;
        if (gen_cmd->parsed()) run_gen(gen, sink);
        if (coeffs_cmd->parsed()) run_coeffs(coeffs, sink);
        if (approx_cmd->parsed()) run_approx(approx, sink);
        if (rem_cmd->parsed()) run_remainder(rem, sink, err);
        if (verify_cmd->parsed()) code = run_verify(verify, sink);
        if (compare_cmd->parsed()) code = run_compare(compare, sink, err);
        sink.flush();
        return code;
    } catch (const BFileError& e) {
        err << compare.path << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace figfig
