#include "qsign/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsign/catalog.hpp"
#include "qsign/dissection.hpp"
#include "qsign/qproducts.hpp"
#include "qsign/signpattern.hpp"

namespace qsign::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t listed_violations = 20;
constexpr long default_dissect_precision = 200;
constexpr long vanishing_horizon = 3000;

const char *command_name(Command c)
{
    switch (c) {
    case Command::Expand:
        return "expand";
    case Command::Dissect:
        return "dissect";
    case Command::Predict:
        return "predict";
    case Command::Verify:
        return "verify";
    case Command::Detect:
        return "detect";
    case Command::Census:
        return "census";
    case Command::Corpus:
        return "corpus";
    case Command::Catalog:
        break;
    }
    return "catalog";
}

template <typename T>
T require(const std::optional<T> &value, const char *name)
{
    if (!value) {
        throw InvalidParameter(name, "required for this command");
    }
    return *value;
}

std::size_t precision_of(const CommandRequest &req, long fallback)
{
    const long t = req.T.value_or(fallback);
    if (t < 0) {
        throw InvalidParameter("T", "must be >= 0, got " + std::to_string(t));
    }
    return static_cast<std::size_t>(t);
}

Json envelope(const CommandRequest &req)
{
    Json j;
    j["schema_version"] = schema_version;
    j["command"] = command_name(req.command);
    j["spec"] = req.spec;
    Json params = Json::object();
    const auto put = [&params](const char *name, const std::optional<long> &v) {
        if (v) {
            params[name] = *v;
        }
    };
    put("p", req.p);
    put("i", req.i);
    put("m", req.m);
    put("M", req.M);
    put("j", req.j);
    put("K", req.K);
    put("T", req.T);
    if (req.pattern) {
        params["pattern"] = *req.pattern;
        params["onset"] = req.onset;
    }
    j["parameters"] = params;
    return j;
}

std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

std::string sign_word(int s) { return s > 0 ? "positive" : (s < 0 ? "negative" : "zero"); }

Json violations_json(const PatternReport &report)
{
    Json v = Json::array();
    for (std::size_t k = 0; k < report.violations.size() && k < listed_violations; ++k) {
        const auto &x = report.violations[k];
        v.push_back({{"n", x.n}, {"expected", std::string(1, to_char(x.expected))}, {"actual", x.actual}});
    }
    return v;
}

int do_expand(const CommandRequest &req, std::ostream &out)
{
    const std::size_t t = precision_of(req, default_precision());
    const Series s = eta_quotient(parse_spec(req.spec), t);
    switch (req.format) {
    case OutputFormat::Json: {
        Json j = envelope(req);
        j["horizon"] = t;
        Json coeffs = Json::array();
        for (const auto &c : s.coefficients()) {
            coeffs.push_back(c.get_str());
        }
        j["coefficients"] = coeffs;
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "n,coefficient\n";
        for (std::size_t n = 0; n <= t; ++n) {
            out << n << ',' << s[n].get_str() << '\n';
        }
        break;
    case OutputFormat::Text:
        out << "# " << req.spec << " to q^" << t << '\n';
        for (std::size_t n = 0; n <= t; ++n) {
            out << n << ' ' << s[n].get_str() << '\n';
        }
        break;
    }
    return exit_pass;
}

int do_dissect(const CommandRequest &req, std::ostream &out)
{
    const long m = require(req.m, "m");
    const std::size_t t = precision_of(req, default_dissect_precision);
    const bool general = req.M || req.j;
    const DissectionExpression d = general ? quintuple_components(req.M.value_or(4), req.j.value_or(1), m)
                                           : qq_components(m);
    const Series target = quintuple_product(d.M, d.j, t);
    const bool ok = assemble(d, t) == target;

    switch (req.format) {
    case OutputFormat::Json: {
        Json j = envelope(req);
        j["horizon"] = t;
        j["M"] = d.M;
        j["j"] = d.j;
        Json comps = Json::array();
        for (const auto &c : d.components) {
            comps.push_back({{"r", c.r},
                             {"sign_exp", c.sign_exp},
                             {"offset", c.offset},
                             {"t1", c.t1},
                             {"t2", c.t2},
                             {"period1", c.period1},
                             {"period2", c.period2}});
        }
        j["components"] = comps;
        j["reassembly"] = verdict(ok);
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "r,sign_exp,offset,t1,t2,period1,period2\n";
        for (const auto &c : d.components) {
            out << c.r << ',' << c.sign_exp << ',' << c.offset << ',' << c.t1 << ',' << c.t2 << ',' << c.period1
                << ',' << c.period2 << '\n';
        }
        break;
    case OutputFormat::Text:
        out << "dissection M=" << d.M << " j=" << d.j << " m=" << m << '\n';
        out << "r s L t1 t2 period1 period2\n";
        for (const auto &c : d.components) {
            out << c.r << ' ' << c.sign_exp << ' ' << c.offset << ' ' << c.t1 << ' ' << c.t2 << ' ' << c.period1
                << ' ' << c.period2 << '\n';
        }
        out << "reassembly to q^" << t << ": " << verdict(ok) << '\n';
        break;
    }
    return ok ? exit_pass : exit_fail;
}

int do_predict(const CommandRequest &req, std::ostream &out)
{
    const auto cert = predict_theorem1(require(req.p, "p"), require(req.i, "i"));
    switch (req.format) {
    case OutputFormat::Json: {
        Json j = envelope(req);
        j["spec"] = to_string(theorem1_spec(cert.p, cert.i));
        j["modulus"] = cert.p;
        j["pattern"] = cert.pattern.class_string();
        j["N"] = cert.N;
        j["L"] = cert.L_values;
        j["s"] = cert.s_values;
        j["residues"] = cert.residue_map;
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "r,L,s,residue\n";
        for (std::size_t r = 0; r < cert.L_values.size(); ++r) {
            out << r << ',' << cert.L_values[r] << ',' << cert.s_values[r] << ',' << cert.residue_map[r] << '\n';
        }
        break;
    case OutputFormat::Text:
        out << "spec: " << to_string(theorem1_spec(cert.p, cert.i)) << '\n';
        out << "pattern: " << cert.pattern.class_string() << '\n';
        out << "N=" << cert.N << " (pattern holds for n >= " << cert.N + 1 << ")\n";
        break;
    }
    return exit_pass;
}

SignPattern requested_pattern(const CommandRequest &req)
{
    if (req.pattern) {
        return SignPattern::from_string(*req.pattern, req.onset);
    }
    return predict_theorem1(require(req.p, "p"), require(req.i, "i")).pattern;
}

int do_verify(const CommandRequest &req, std::ostream &out)
{
    const std::size_t t = precision_of(req, default_precision());
    const SignPattern pattern = requested_pattern(req);
    const PatternReport report = verify_pattern(eta_quotient(parse_spec(req.spec), t), pattern, t);
    switch (req.format) {
    case OutputFormat::Json: {
        Json j = envelope(req);
        j["horizon"] = t;
        j["pattern"] = pattern.class_string();
        j["onset"] = pattern.onset;
        j["verdict"] = verdict(report.passed());
        j["violation_count"] = report.violations.size();
        j["violations"] = violations_json(report);
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "n,expected,actual\n";
        for (std::size_t k = 0; k < report.violations.size() && k < listed_violations; ++k) {
            const auto &v = report.violations[k];
            out << v.n << ',' << to_char(v.expected) << ',' << v.actual << '\n';
        }
        break;
    case OutputFormat::Text:
        out << "spec: " << req.spec << '\n';
        out << "pattern: " << pattern.class_string() << " for " << pattern.onset << " < n <= " << t << '\n';
        out << "verdict: " << verdict(report.passed()) << '\n';
        if (!report.passed()) {
            const auto &v = report.violations.front();
            out << "violations: " << report.violations.size() << ", first at n=" << v.n << " (expected '"
                << to_char(v.expected) << "', got " << sign_word(v.actual) << ")\n";
        }
        break;
    }
    return report.passed() ? exit_pass : exit_fail;
}

int do_detect(const CommandRequest &req, std::ostream &out)
{
    const std::size_t t = precision_of(req, default_precision());
    const long m = require(req.m, "m");
    const DetectedPattern d = detect_pattern(eta_quotient(parse_spec(req.spec), t), m, t);
    switch (req.format) {
    case OutputFormat::Json: {
        Json j = envelope(req);
        j["horizon"] = t;
        j["pattern"] = d.pattern.class_string();
        j["onset"] = d.pattern.onset;
        j["sporadic_zeros"] = d.sporadic_zeros;
        j["empirical"] = true;
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "residue,class\n";
        for (long r = 0; r < m; ++r) {
            out << r << ',' << to_char(d.pattern.classes[static_cast<std::size_t>(r)]) << '\n';
        }
        break;
    case OutputFormat::Text:
        out << "spec: " << req.spec << '\n';
        out << "detected pattern mod " << m << ": " << d.pattern.class_string() << '\n';
        out << "onset: " << d.pattern.onset << '\n';
        out << "sporadic zeros: " << d.sporadic_zeros.size() << '\n';
        out << "empirical up to q^" << t << '\n';
        break;
    }
    return exit_pass;
}

int do_census(const CommandRequest &req, std::ostream &out)
{
    const long m = require(req.m, "m");
    const long k = require(req.K, "K");
    if (m < 1) {
        throw InvalidParameter("m", "must be >= 1");
    }
    if (k < 1) {
        throw InvalidParameter("K", "must be >= 1");
    }
    const auto t = static_cast<std::size_t>(m * k - 1);
    const auto rows = sign_census(eta_quotient(parse_spec(req.spec), t), m, k);
    switch (req.format) {
    case OutputFormat::Json: {
        Json j = envelope(req);
        j["horizon"] = t;
        Json table = Json::array();
        for (const auto &r : rows) {
            table.push_back({{"residue", r.residue}, {"negative", r.negative}, {"zero", r.zero},
                             {"positive", r.positive}});
        }
        j["rows"] = table;
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "residue,negative,zero,positive\n";
        for (const auto &r : rows) {
            out << r.residue << ',' << r.negative << ',' << r.zero << ',' << r.positive << '\n';
        }
        break;
    case OutputFormat::Text:
        out << "census of " << req.spec << ", " << k << " terms per residue mod " << m << '\n';
        out << "r - 0 +\n";
        for (const auto &r : rows) {
            out << r.residue << ' ' << r.negative << ' ' << r.zero << ' ' << r.positive << '\n';
        }
        break;
    }
    return exit_pass;
}

struct EntryResult {
    std::string name;
    std::string spec;
    std::string pattern;
    long onset;
    std::size_t horizon;
    std::size_t violations;
};

int emit_results(const CommandRequest &req, const std::vector<EntryResult> &results, std::ostream &out)
{
    bool all = true;
    for (const auto &r : results) {
        all = all && r.violations == 0;
    }
    switch (req.format) {
    case OutputFormat::Json: {
        Json j = envelope(req);
        Json entries = Json::array();
        for (const auto &r : results) {
            entries.push_back({{"name", r.name},
                               {"spec", r.spec},
                               {"pattern", r.pattern},
                               {"onset", r.onset},
                               {"horizon", r.horizon},
                               {"violations", r.violations},
                               {"verdict", verdict(r.violations == 0)}});
        }
        j["entries"] = entries;
        j["verdict"] = verdict(all);
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "name,spec,pattern,onset,horizon,violations,verdict\n";
        for (const auto &r : results) {
            out << r.name << ',' << r.spec << ',' << r.pattern << ',' << r.onset << ',' << r.horizon << ','
                << r.violations << ',' << verdict(r.violations == 0) << '\n';
        }
        break;
    case OutputFormat::Text:
        for (const auto &r : results) {
            out << verdict(r.violations == 0) << ' ' << r.name << " [" << r.spec << "] " << r.pattern << " n>"
                << r.onset << " to q^" << r.horizon << '\n';
        }
        out << "overall: " << verdict(all) << '\n';
        break;
    }
    return all ? exit_pass : exit_fail;
}

int do_corpus(const CommandRequest &req, std::ostream &out)
{
    std::vector<CorpusRecord> records;
    if (req.corpus_file) {
        std::ifstream in(*req.corpus_file);
        if (!in) {
            throw InvalidParameter("file", "cannot open '" + *req.corpus_file + "'");
        }
        records = read_corpus(in);
    } else {
        records = corpus();
    }
    std::vector<EntryResult> results;
    for (const auto &rec : records) {
        const auto report = verify_pattern(eta_quotient(parse_spec(rec.spec), rec.horizon), rec.pattern, rec.horizon);
        results.push_back({rec.name, rec.spec, rec.pattern.class_string(), rec.pattern.onset, rec.horizon,
                           report.violations.size()});
    }
    if (!req.corpus_file) {
        const Series s = eta_quotient(parse_spec(vanishing_set_spec), vanishing_horizon);
        std::size_t mismatches = 0;
        for (long n = 1; n <= vanishing_horizon; ++n) {
            mismatches += (s.sign_of(static_cast<std::size_t>(n)) == 0) != vanishing_predicate(n) ? 1 : 0;
        }
        results.push_back({"vanishing_set", std::string(vanishing_set_spec), "zero set", 0,
                           static_cast<std::size_t>(vanishing_horizon), mismatches});
    }
    return emit_results(req, results, out);
}

int do_catalog(const CommandRequest &req, std::ostream &out)
{
    const std::size_t t = precision_of(req, default_precision());
    std::vector<EntryResult> results;
    for (const auto &e : theorem2_catalog()) {
        const auto report = verify_pattern(eta_quotient(e.spec, t), e.pattern, t);
        std::string name = "case" + e.id;
        if (!e.parameters.empty()) {
            name += "(" + e.parameters + ")";
        }
        results.push_back({name, to_string(e.spec), e.pattern.class_string(), e.pattern.onset, t,
                           report.violations.size()});
    }
    return emit_results(req, results, out);
}

} // namespace

long default_precision()
{
    if (const char *env = std::getenv("QSIGN_DEFAULT_T")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) {
            return v;
        }
    }
    return 2000;
}

int run(const CommandRequest &request, std::ostream &out, std::ostream &err)
{
    try {
        switch (request.command) {
        case Command::Expand:
            return do_expand(request, out);
        case Command::Dissect:
            return do_dissect(request, out);
        case Command::Predict:
            return do_predict(request, out);
        case Command::Verify:
            return do_verify(request, out);
        case Command::Detect:
            return do_detect(request, out);
        case Command::Census:
            return do_census(request, out);
        case Command::Corpus:
            return do_corpus(request, out);
        case Command::Catalog:
            return do_catalog(request, out);
        }
    } catch (const InvalidParameter &e) {
        err << "error: invalid parameter " << e.what() << '\n';
    } catch (const BeyondPrecision &e) {
        err << "error: beyond precision: " << e.what() << '\n';
    } catch (const NonUnitConstantTerm &e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

int run_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-series expansion, dissection and sign-pattern verification", "qsign"};
    app.require_subcommand(1);

    CommandRequest req;
    std::string format = "text";
    std::string output;

    const std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::Text}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

    const auto common = [&](CLI::App *sub) {
        sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--output", output, "Write the report to this file");
    };
    const auto opt = [](CLI::App *sub, const char *flag, std::optional<long> &target, const char *help) {
        sub->add_option_function<long>(flag, [&target](const long &v) { target = v; }, help);
    };

    auto *expand = app.add_subcommand("expand", "Print coefficients of an eta quotient");
    expand->add_option("--spec", req.spec, "Eta-quotient spec, e.g. \"2^1 5^-1\"")->required();
    opt(expand, "--T", req.T, "Truncation order");
    common(expand);

    auto *dissect = app.add_subcommand("dissect", "Dissection component table and reassembly check");
    opt(dissect, "--m", req.m, "Dissection modulus (prime to 3)");
    opt(dissect, "--M", req.M, "Quintuple-product period (default 4)");
    opt(dissect, "--j", req.j, "Quintuple-product offset (default 1)");
    opt(dissect, "--T", req.T, "Reassembly check precision (default 200)");
    common(dissect);

    auto *predict = app.add_subcommand("predict", "Predicted sign pattern of (q^i;q^i)/(q^p;q^p)");
    opt(predict, "--p", req.p, "Prime > 3");
    opt(predict, "--i", req.i, "Integer > 1 not divisible by p");
    common(predict);

    auto *verify = app.add_subcommand("verify", "Check a sign pattern against an expansion");
    verify->add_option("--spec", req.spec, "Eta-quotient spec")->required();
    opt(verify, "--p", req.p, "Use the predicted pattern for this prime");
    opt(verify, "--i", req.i, "... and this i");
    verify->add_option_function<std::string>(
        "--pattern", [&req](const std::string &v) { req.pattern = v; }, "Explicit class string over +-0?");
    verify->add_option("--onset", req.onset, "Onset for an explicit pattern (default -1)");
    opt(verify, "--T", req.T, "Horizon");
    common(verify);

    auto *detect = app.add_subcommand("detect", "Empirical sign pattern");
    detect->add_option("--spec", req.spec, "Eta-quotient spec")->required();
    opt(detect, "--m", req.m, "Modulus");
    opt(detect, "--T", req.T, "Horizon");
    common(detect);

    auto *census = app.add_subcommand("census", "Per-residue sign counts");
    census->add_option("--spec", req.spec, "Eta-quotient spec")->required();
    opt(census, "--m", req.m, "Modulus");
    opt(census, "--K", req.K, "Terms per residue class");
    common(census);

    auto *corpus_cmd = app.add_subcommand("corpus", "Run the regression corpus");
    corpus_cmd->add_option_function<std::string>(
        "--file", [&req](const std::string &v) { req.corpus_file = v; }, "Corpus records file");
    common(corpus_cmd);

    auto *catalog = app.add_subcommand("catalog", "Verify the catalog of proved sign patterns");
    opt(catalog, "--T", req.T, "Horizon");
    common(catalog);

    const std::map<const CLI::App *, Command> commands{
        {expand, Command::Expand},   {dissect, Command::Dissect}, {predict, Command::Predict},
        {verify, Command::Verify},   {detect, Command::Detect},   {census, Command::Census},
        {corpus_cmd, Command::Corpus}, {catalog, Command::Catalog}};

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return exit_usage;
    }

    for (const auto &[sub, cmd] : commands) {
        if (sub->parsed()) {
            req.command = cmd;
        }
    }
    req.format = formats.at(format);
    if (!output.empty()) {
        req.output_path = output;
    }

    if (!req.output_path) {
        return run(req, out, err);
    }
    std::ostringstream buffer;
    const int status = run(req, buffer, err);
    std::ofstream file(*req.output_path, std::ios::binary);
    if (!file) {
        err << "error: cannot write '" << *req.output_path << "'\n";
        return exit_usage;
    }
    file << buffer.str();
    return status;
}

} // namespace qsign::cli
