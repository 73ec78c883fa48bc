#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "padic/big_rational.hpp"
#include "padic/core.hpp"
#include "padic/errors.hpp"
#include "padic/haar.hpp"
#include "padic/kernels.hpp"
#include "padic/schrodinger.hpp"
#include "padic/vladimirov.hpp"

namespace padic::cli {

namespace {

using json = nlohmann::ordered_json;

struct Common {
    std::string format;
    std::string out;
};

BigRational rational_arg(const std::string& text, const std::string& flag)
{
    try {
        return BigRational::parse(text);
    } catch (const ArgumentError& e) {
        throw ArgumentError(flag + ": " + e.what());
    }
}

long integer_arg(const std::string& text, const std::string& flag)
{
    const BigRational q = rational_arg(text, flag);
    if (!q.is_integer() || !q.numerator().fits_slong_p())
        throw ArgumentError(flag + ": expected an integer, got '" + text + "'");
    return q.numerator().get_si();
}

Prime prime_arg(const std::string& text)
{
    return Prime(integer_arg(text, "--p"));
}

void put(json& j, const std::string& key, const BigRational& q)
{
    j[key + "_rational"] = q.to_string();
    j[key + "_decimal"] = q.to_decimal();
}

std::string csv_field(const json& v)
{
    std::string s;
    if (v.is_string()) s = v.get<std::string>();
    else if (v.is_null()) s = "";
    else s = v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

std::string to_csv(const json& doc)
{
    const json rows = doc.contains("rows") ? doc["rows"] : json::array({doc});
    std::ostringstream os;
    if (rows.empty()) return "";
    std::vector<std::string> header;
    for (const auto& [key, value] : rows.front().items()) header.push_back(key);
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < header.size(); ++i)
            os << (i ? "," : "") << (row.contains(header[i]) ? csv_field(row[header[i]]) : "");
        os << '\n';
    }
    return os.str();
}

void emit(const json& doc, const Common& common, const std::string& default_format, std::ostream& out)
{
    const std::string format = common.format.empty() ? default_format : common.format;
    const std::string text = format == "csv" ? to_csv(doc) : doc.dump() + "\n";
    if (common.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(common.out, std::ios::binary);
    if (!file) throw ArgumentError("--out: cannot open '" + common.out + "' for writing");
    file << text;
}

json piecewise_json(const PiecewiseRadial& f)
{
    auto branch = [](const std::vector<PowerTerm>& terms) {
        json arr = json::array();
        for (const auto& t : terms) {
            json item;
            item["exponent"] = t.exponent;
            if (t.log_power != 0) item["log_power"] = t.log_power;
            put(item, "coefficient", t.coefficient);
            arr.push_back(std::move(item));
        }
        return arr;
    };
    json j;
    j["inside"] = branch(f.inside());
    j["outside"] = branch(f.outside());
    j["analytically_continued"] = f.analytically_continued();
    return j;
}

// --- subcommands -------------------------------------------------------------

struct ExpandArgs {
    std::string q, p, digits = "10";
};

json cmd_expand(const ExpandArgs& a)
{
    const PAdicApprox x = expand_rational(rational_arg(a.q, "q"), prime_arg(a.p), integer_arg(a.digits, "--digits"));
    json j;
    if (x.is_zero()) {
        j["zero"] = true;
        return j;
    }
    j["valuation"] = x.valuation();
    j["digits"] = x.digits();
    return j;
}

struct NormArgs {
    std::string q, p;
};

json cmd_norm(const NormArgs& a)
{
    const Prime p = prime_arg(a.p);
    const BigRational q = rational_arg(a.q, "q");
    json j;
    const Valuation v = valuation(q, p);
    if (v.is_infinite()) j["zero"] = true;
    else j["valuation"] = v.value();
    put(j, "value", padic_norm(q, p));
    return j;
}

struct GammaArgs {
    std::string p, x;
};

json cmd_gamma(const GammaArgs& a)
{
    json j;
    put(j, "value", gamma_p(prime_arg(a.p), integer_arg(a.x, "--x")));
    return j;
}

struct IntegrateArgs {
    std::string p, shell, ball, moment_zp, moment_complement, power, region = "whole", tol = "1e-30";
};

json cmd_integrate(const IntegrateArgs& a)
{
    const Prime p = prime_arg(a.p);
    json j;
    if (!a.shell.empty()) {
        j["quantity"] = "shell";
        put(j, "value", shell_measure(p, integer_arg(a.shell, "--shell")));
    } else if (!a.ball.empty()) {
        j["quantity"] = "ball";
        put(j, "value", ball_measure(p, integer_arg(a.ball, "--ball")));
    } else if (!a.moment_zp.empty()) {
        j["quantity"] = "moment_zp";
        put(j, "value", moment_zp(p, integer_arg(a.moment_zp, "--moment-zp")));
    } else if (!a.moment_complement.empty()) {
        j["quantity"] = "moment_complement";
        put(j, "value", moment_complement(p, integer_arg(a.moment_complement, "--moment-complement")));
    } else {
        const long s = integer_arg(a.power, "--power");
        std::optional<ShellRegion> region;
        if (a.region == "whole") region = ShellRegion::whole();
        else if (a.region == "zp") region = ShellRegion::ball(0);
        else if (a.region == "complement") region = ShellRegion::complement();
        else throw ArgumentError("--region: expected whole, zp or complement, got '" + a.region + "'");
        const SeriesSum sum = integrate_radial(p, RadialFunction::power(p, s), *region, rational_arg(a.tol, "--tol"));
        j["quantity"] = "shell_sum";
        put(j, "value", sum.value);
        j["tail_bound"] = sum.tail_bound.to_decimal();
        j["window"] = {sum.window.lo, sum.window.hi};
        j["terms"] = sum.terms;
    }
    return j;
}

struct DalphaArgs {
    std::string p, alpha = "2", monomial, f, g, at_shell, tol = "1e-30";
    bool verify = false;
};

json cmd_dalpha(const DalphaArgs& a)
{
    const Prime p = prime_arg(a.p);
    const long alpha = integer_arg(a.alpha, "--alpha");

    json j;
    j["alpha"] = alpha;
    std::optional<BasisTerm> term;
    if (!a.monomial.empty()) {
        const long n = integer_arg(a.monomial, "--monomial");
        const MonomialImage image = d_alpha_monomial(p, alpha, n);
        j["kind"] = "monomial";
        j["n"] = n;
        put(j, "coefficient", image.coefficient);
        j["exponent"] = image.exponent;
        j["analytically_continued"] = image.analytically_continued;
        term = BasisTerm{BasisTerm::Kind::Monomial, n};
    } else {
        const bool inside = !a.f.empty();
        const long n = inside ? integer_arg(a.f, "--f") : integer_arg(a.g, "--g");
        term = BasisTerm{inside ? BasisTerm::Kind::FInside : BasisTerm::Kind::GOutside, n};
        j["kind"] = inside ? "f" : "g";
        j["n"] = n;
        j.update(piecewise_json(d_alpha(p, alpha, *term)));
    }

    if (a.at_shell.empty()) {
        if (a.verify) throw ArgumentError("--verify needs --at-shell");
        return j;
    }
    const long t = integer_arg(a.at_shell, "--at-shell");
    const BigRational closed = d_alpha(p, alpha, *term).evaluate(t);
    j["shell"] = t;
    put(j, "value", closed);
    if (a.verify) {
        const SeriesSum oracle = d_alpha_oracle(p, alpha, basis_function(p, *term), t, rational_arg(a.tol, "--tol"));
        put(j, "oracle", oracle.value);
        j["tail_bound"] = oracle.tail_bound.to_decimal();
        j["match"] = (closed - oracle.value).abs() <= oracle.tail_bound;
    }
    return j;
}

struct SolveArgs {
    std::string p, B, N = "60", tol = "1e-12", lo, hi;
    std::vector<std::string> residual_shells;
};

json eigen_json(long p, const BigRational& B, const EigenResult& r)
{
    json j;
    j["p"] = p;
    j["B"] = B.to_string();
    put(j, "E", r.E);
    if (r.asymptotic) {
        j["asymptotic"] = r.asymptotic->to_string();
        j["asymptotic_decimal"] = r.asymptotic->to_decimal();
        j["scaled_error"] = r.scaled_error->to_decimal();
    }
    return j;
}

json cmd_solve(const SolveArgs& a)
{
    const Prime p = prime_arg(a.p);
    const BigRational B = rational_arg(a.B, "--B");
    const long N = integer_arg(a.N, "--N");
    if (a.lo.empty() != a.hi.empty()) throw ArgumentError("--lo and --hi go together");

    std::optional<std::pair<BigRational, BigRational>> bracket;
    if (!a.lo.empty()) bracket.emplace(rational_arg(a.lo, "--lo"), rational_arg(a.hi, "--hi"));
    const EigenResult r = solve_E(p, B, bracket, rational_arg(a.tol, "--tol"), N);

    json j = eigen_json(p.value(), B, r);
    j["bracket"] = {r.lo.to_string(), r.hi.to_string()};
    j["determinant"] = r.determinant.to_decimal();
    j["truncation"] = r.N;
    j["iterations"] = r.iterations;

    if (!a.residual_shells.empty()) {
        std::vector<long> shells;
        for (const auto& s : a.residual_shells) shells.push_back(integer_arg(s, "--residual-shells"));
        const ModelParams params{p, B, r.E, N};
        const CoefficientTable table = eigen_table(params);
        const std::vector<BigRational> absolute = parallel::residual_profile(params, table, shells);
        json rows = json::array();
        for (std::size_t i = 0; i < shells.size(); ++i) {
            const BigRational scale = (r.E * evaluate_psi(p, table, shells[i]).value).abs();
            json row;
            row["shell"] = shells[i];
            row["absolute"] = absolute[i].to_decimal();
            row["relative"] = scale.is_zero() ? json(nullptr) : json((absolute[i] / scale).to_decimal());
            rows.push_back(std::move(row));
        }
        j["residual"] = std::move(rows);
    }
    return j;
}

struct SweepArgs {
    std::vector<std::string> B{"1"}, primes;
    std::string N = "60", tol = "1e-12";
    bool serial = false;
};

json cmd_sweep(const SweepArgs& a)
{
    std::vector<long> primes;
    for (const auto& s : a.primes) primes.push_back(prime_arg(s).value());
    std::vector<BigRational> couplings;
    for (const auto& s : a.B) couplings.push_back(rational_arg(s, "--B"));
    const long N = integer_arg(a.N, "--N");
    const BigRational tol = rational_arg(a.tol, "--tol");

    const std::vector<SweepRow> rows =
        a.serial ? serial::sweep(primes, couplings, N, tol) : parallel::sweep(primes, couplings, N, tol);
    json out;
    out["rows"] = json::array();
    for (const auto& row : rows) {
        json j;
        j["p"] = row.p;
        j["B"] = row.B.to_string();
        put(j, "E", row.result.E);
        const BigRational asym = asymptotic_E(Prime(row.p), row.B);
        j["asymptotic"] = asym.to_string();
        j["asymptotic_decimal"] = asym.to_decimal();
        j["scaled_error"] = row.result.scaled_error->to_decimal();
        out["rows"].push_back(std::move(j));
    }
    return out;
}

struct TableArgs {
    std::string p, B, E = "0", N = "10", c0 = "1", k5 = "1";
    bool eigen = false;
};

json cmd_table(const TableArgs& a)
{
    const ModelParams params{prime_arg(a.p), rational_arg(a.B, "--B"), rational_arg(a.E, "--E"), integer_arg(a.N, "--N")};
    const CoefficientTable table = a.eigen ? eigen_table(params)
                                           : coefficient_table(params, rational_arg(a.c0, "--c0"), rational_arg(a.k5, "--k5"));
    json out;
    out["p"] = params.p.value();
    out["B"] = params.B.to_string();
    put(out, "E", params.E);
    out["truncation"] = params.N;
    out["rows"] = json::array();
    const std::size_t n = std::max(table.c.size(), table.k.size());
    for (std::size_t i = 0; i < n; ++i) {
        json row;
        row["n"] = i;
        const BigRational c = i < table.c.size() ? table.c[i] : BigRational(0);
        const BigRational k = i < table.k.size() ? table.k[i] : BigRational(0);
        put(row, "c", c);
        put(row, "k", k);
        out["rows"].push_back(std::move(row));
    }
    return out;
}

struct NaiveArgs {
    std::string p, B, N = "10", at_shell;
};

json cmd_naive(const NaiveArgs& a)
{
    const NaiveSeries series = naive_series(prime_arg(a.p), rational_arg(a.B, "--B"), integer_arg(a.N, "--N"));
    json out;
    put(out, "region_bound", series.region_bound);
    out["convergent_everywhere"] = series.convergent_everywhere;

    std::vector<BigRational> sums;
    if (!a.at_shell.empty()) {
        const long t = integer_arg(a.at_shell, "--at-shell");
        out["shell"] = t;
        out["converges_at_shell"] = series.converges_at_shell(t);
        sums = series.partial_sums(t);
    }
    out["rows"] = json::array();
    for (std::size_t j = 0, i = 0; j < series.b.size(); j += 4, ++i) {
        json row;
        row["n"] = j;
        put(row, "b", series.b[j]);
        if (!sums.empty()) row["partial_sum_decimal"] = sums[i].to_decimal();
        out["rows"].push_back(std::move(row));
    }
    return out;
}

void add_common(CLI::App* sub, Common& common)
{
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", common.out, "Write output to this file instead of stdout");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact p-adic analysis and the p-adic harmonic oscillator ground state", "padic"};
    app.require_subcommand(1);
    Common common;

    ExpandArgs expand;
    auto* s_expand = app.add_subcommand("expand", "Digits of a rational in Q_p");
    s_expand->add_option("q", expand.q, "Rational, as a/b or a decimal")->required();
    s_expand->add_option("--p", expand.p, "Prime")->required();
    s_expand->add_option("--digits", expand.digits, "Number of digits")->capture_default_str();
    add_common(s_expand, common);

    NormArgs norm;
    auto* s_norm = app.add_subcommand("norm", "Valuation and p-adic norm");
    s_norm->add_option("q", norm.q)->required();
    s_norm->add_option("--p", norm.p)->required();
    add_common(s_norm, common);

    GammaArgs gamma;
    auto* s_gamma = app.add_subcommand("gamma", "Gamma_p(x) = (1 - p^(x-1)) / (1 - p^-x)");
    s_gamma->add_option("--p", gamma.p)->required();
    s_gamma->add_option("--x", gamma.x)->required();
    add_common(s_gamma, common);

    IntegrateArgs integ;
    auto* s_int = app.add_subcommand("integrate", "Haar integrals in closed form or by shell sums");
    s_int->add_option("--p", integ.p)->required();
    auto* q_group = s_int->add_option_group("quantity");
    q_group->add_option("--shell", integ.shell, "Measure of the shell |x|_p = p^gamma");
    q_group->add_option("--ball", integ.ball, "Measure of the ball p^m Z_p");
    q_group->add_option("--moment-zp", integ.moment_zp, "Integral of |x|_p^s over Z_p");
    q_group->add_option("--moment-complement", integ.moment_complement, "Integral of |x|_p^s off Z_p");
    q_group->add_option("--power", integ.power, "Shell-sum integral of |x|_p^s over --region");
    q_group->require_option(1);
    s_int->add_option("--region", integ.region, "whole, zp or complement (with --power)")->capture_default_str();
    s_int->add_option("--tol", integ.tol, "Tail tolerance for shell sums")->capture_default_str();
    add_common(s_int, common);

    DalphaArgs dal;
    auto* s_dal = app.add_subcommand("dalpha", "Closed forms of D^alpha on the radial basis");
    s_dal->add_option("--p", dal.p)->required();
    s_dal->add_option("--alpha", dal.alpha, "Order")->capture_default_str();
    auto* b_group = s_dal->add_option_group("basis");
    b_group->add_option("--monomial", dal.monomial, "|x|_p^n on Q_p");
    b_group->add_option("--f", dal.f, "f_n: |x|_p^n on Z_p, 0 elsewhere");
    b_group->add_option("--g", dal.g, "g_n: |x|_p^n off Z_p, 0 on Z_p");
    b_group->require_option(1);
    s_dal->add_option("--at-shell", dal.at_shell, "Evaluate at |x|_p = p^t");
    s_dal->add_flag("--verify", dal.verify, "Compare with the singular-integral shell sums");
    s_dal->add_option("--tol", dal.tol, "Oracle tail tolerance")->capture_default_str();
    add_common(s_dal, common);

    SolveArgs solve;
    auto* s_solve = app.add_subcommand("solve", "Ground-state eigenvalue E from AD = FC");
    s_solve->add_option("--p", solve.p)->required();
    s_solve->add_option("--B", solve.B)->required();
    s_solve->add_option("--N", solve.N, "Truncation depth")->capture_default_str();
    s_solve->add_option("--tol", solve.tol, "Bisection width")->capture_default_str();
    s_solve->add_option("--lo", solve.lo, "Bracket lower end");
    s_solve->add_option("--hi", solve.hi, "Bracket upper end");
    s_solve->add_option("--residual-shells", solve.residual_shells, "Shells for the residual check")->delimiter(',');
    add_common(s_solve, common);

    SweepArgs sweep;
    auto* s_sweep = app.add_subcommand("sweep", "Solve over a grid of primes and couplings");
    s_sweep->add_option("--B", sweep.B, "Couplings")->capture_default_str()->delimiter(',');
    s_sweep->add_option("--primes", sweep.primes, "Primes")->delimiter(',')->required();
    s_sweep->add_option("--N", sweep.N, "Truncation depth")->capture_default_str();
    s_sweep->add_option("--tol", sweep.tol, "Bisection width")->capture_default_str();
    s_sweep->add_flag("--serial", sweep.serial, "Use the serial reference kernel");
    add_common(s_sweep, common);

    TableArgs table;
    auto* s_table = app.add_subcommand("table", "Coefficients c_n, k_n of the ground state");
    s_table->add_option("--p", table.p)->required();
    s_table->add_option("--B", table.B)->required();
    s_table->add_option("--E", table.E, "Eigenvalue")->capture_default_str();
    s_table->add_option("--N", table.N, "Truncation depth")->capture_default_str();
    s_table->add_option("--c0", table.c0, "c_0")->capture_default_str();
    s_table->add_option("--k5", table.k5, "k_5")->capture_default_str();
    s_table->add_flag("--eigen", table.eigen, "Use (c_0, k_5) = (F, A)");
    add_common(s_table, common);

    NaiveArgs naive;
    auto* s_naive = app.add_subcommand("naive", "Single power series with E = 0 and its convergence region");
    s_naive->add_option("--p", naive.p)->required();
    s_naive->add_option("--B", naive.B)->required();
    s_naive->add_option("--N", naive.N, "Number of nonzero terms minus one")->capture_default_str();
    s_naive->add_option("--at-shell", naive.at_shell, "Partial sums at |x|_p = p^t");
    add_common(s_naive, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "Run with --help for usage.\n";
        return kUsage;
    }

    const std::vector<std::pair<CLI::App*, std::function<json()>>> handlers{
        {s_expand, [&] { return cmd_expand(expand); }},   {s_norm, [&] { return cmd_norm(norm); }},
        {s_gamma, [&] { return cmd_gamma(gamma); }},      {s_int, [&] { return cmd_integrate(integ); }},
        {s_dal, [&] { return cmd_dalpha(dal); }},         {s_solve, [&] { return cmd_solve(solve); }},
        {s_sweep, [&] { return cmd_sweep(sweep); }},      {s_table, [&] { return cmd_table(table); }},
        {s_naive, [&] { return cmd_naive(naive); }},
    };

    try {
        for (const auto& [sub, handler] : handlers) {
            if (!sub->parsed()) continue;
            emit(handler(), common, sub == s_sweep ? "csv" : "json", out);
            return kOk;
        }
        return kUsage;
    } catch (const BracketError& e) {
        err << "error: " << e.what() << "\n";
        if (!e.g_lo().empty()) err << "G(lo) = " << e.g_lo() << ", G(hi) = " << e.g_hi() << "\n";
        return kBracket;
    } catch (const DivergenceError& e) {
        err << "error: " << e.what() << "\n";
        return kDivergence;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace padic::cli
