#include "ncfrob/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "ncfrob/format.hpp"
#include "ncfrob/groupoid.hpp"
#include "ncfrob/json_io.hpp"
#include "ncfrob/nsy.hpp"
#include "ncfrob/qtg.hpp"
#include "ncfrob/whopf.hpp"

namespace ncfrob::cli {

namespace {

using fmt::Format;
using io::Json;

struct Options {
    std::string format = "markdown";
    std::string output;
    std::uint64_t seed = whopf::kDefaultIntegralSeed;
    Format fmt() const { return fmt::parse_format(format); }
};

/// Key/value fields and tables, rendered in the requested format.
class Report {
public:
    Report(Format f, const std::string& command, std::optional<std::uint64_t> seed) : format_(f) {
        json_["tool"] = "ncfrob";
        json_["version"] = kVersion;
        json_["command"] = command;
        if (format_ == Format::Markdown) text_ += "# ncfrob " + command + "\n\n";
        field("version", std::string(kVersion));
        if (seed) field("seed", std::to_string(*seed));
    }

    void field(const std::string& key, const std::string& value) { field(key, Json(value), value); }
    void field(const std::string& key, bool value) { field(key, Json(value), value ? "yes" : "no"); }
    void field(const std::string& key, std::size_t value) { field(key, Json(value), std::to_string(value)); }

    void table(const std::string& key, const fmt::Table& t) {
        if (format_ == Format::Json) {
            Json rows = Json::array();
            for (const auto& r : t.rows) {
                Json row;
                for (std::size_t i = 0; i < t.header.size(); ++i) row[t.header[i]] = r.at(i);
                rows.push_back(std::move(row));
            }
            json_[key] = std::move(rows);
        } else if (format_ == Format::Markdown) {
            text_ += "\n## " + key + "\n\n" + fmt::render(t, format_);
        } else {
            text_ += "\n" + fmt::render(t, format_);
        }
    }

    std::string str() const { return format_ == Format::Json ? io::dump(json_) : text_; }

private:
    void field(const std::string& key, Json value, const std::string& text) {
        json_[key] = std::move(value);
        if (format_ == Format::Markdown) {
            text_ += "- " + key + ": " + text + "\n";
        } else if (format_ == Format::Csv) {
            text_ += fmt::render(fmt::Table{{}, {{key, text}}}, format_).substr(1);
        }
    }

    Format format_;
    Json json_;
    std::string text_;
};

void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw InputError("cannot write '" + o.output + "'");
    f << text;
}

std::string table_text(const fmt::Table& t, Format f) {
    if (f != Format::Json) return fmt::render(t, f);
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json row;
        for (std::size_t i = 0; i < t.header.size(); ++i) row[t.header[i]] = r.at(i);
        rows.push_back(std::move(row));
    }
    return io::dump(rows);
}

std::optional<Witness> same_structure(const AlgebraData& a, const AlgebraData& b) {
    if (a.dim() != b.dim()) return Witness{{}, Vector(1), Vector(1)};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (a.product(i, j) != b.product(i, j)) return Witness{{i, j}, a.product(i, j), b.product(i, j)};
        }
    }
    if (a.unit() != b.unit()) return Witness{{}, a.unit(), b.unit()};
    return std::nullopt;
}

struct NsyCheck {
    VerificationReport report;
    Classification classification;
};

/// Every property checked per instance by `nsy check` and `nsy sweep`.
NsyCheck check_nsy(const nsy::Algebra& a) {
    const ComultData c = nsy::delta(a);
    NsyCheck out{check_algebra(*a.data), analyze(c)};
    out.report.record("oracle", same_structure(*a.data, nsy::build_oracle(a.params)));
    out.report.append(out.classification.report);
    out.report.append(check_casimir(nsy::casimir(a)));
    const bool frob = nsy::is_frobenius(a.params);
    const bool solved = out.classification.counit.counit.has_value();
    out.report.record("counit_iff_nakayama_condition",
                      solved == frob ? std::nullopt
                                     : std::optional(Witness{{}, Vector::unit_vector(1, 0, solved ? 1 : 0),
                                                             Vector::unit_vector(1, 0, frob ? 1 : 0)}));
    if (frob) {
        const auto formula = check_counit(c, nsy::formula_counit(a));
        for (const auto& r : formula.checks()) out.report.record("formula_" + r.name, r.witness);
    }
    return out;
}

std::map<std::string, std::size_t> parse_grid(const std::vector<std::string>& tokens) {
    std::map<std::string, std::size_t> out;
    for (const auto& tok : tokens) {
        const auto eq = tok.find('=');
        const std::string key = tok.substr(0, eq);
        if (eq == std::string::npos || (key != "nmax" && key != "lmax" && key != "mmax")) {
            throw InputError("sweep expects nmax=, lmax=, mmax=; got '" + tok + "'");
        }
        try {
            std::size_t used = 0;
            const auto v = std::stoul(tok.substr(eq + 1), &used);
            if (used != tok.size() - eq - 1 || v == 0) throw std::invalid_argument("bad");
            out[key] = v;
        } catch (const std::exception&) {
            throw InputError("invalid value in '" + tok + "'");
        }
    }
    for (const char* key : {"nmax", "lmax", "mmax"}) {
        if (!out.count(key)) throw InputError(std::string("sweep requires ") + key + "=");
    }
    return out;
}

int cmd_sweep(const std::vector<std::string>& tokens, const Options& o, std::ostream& out) {
    const auto grid = parse_grid(tokens);
    Report report(o.fmt(), "nsy sweep", std::nullopt);
    fmt::Table rows{{"params", "dim", "classification", "checks"}, {}};
    std::size_t total = 0;
    std::size_t frobenius = 0;
    std::size_t noncounital = 0;
    std::size_t failures = 0;
    for (std::size_t n = 1; n <= grid.at("nmax"); ++n) {
        for (std::size_t ell = 1; ell <= grid.at("lmax"); ++ell) {
            std::vector<std::size_t> mults(n, 1);
            while (true) {
                const nsy::Algebra a = nsy::build({n, ell, mults});
                const NsyCheck res = check_nsy(a);
                ++total;
                if (res.classification.kind == FrobeniusClass::Frobenius) ++frobenius;
                if (res.classification.kind == FrobeniusClass::NonCounitalOnly) ++noncounital;
                if (!res.report.passed()) ++failures;
                const auto* failed = res.report.first_failure();
                rows.rows.push_back({nsy::format_params(a.params), std::to_string(a.basis.size()),
                                     to_string(res.classification.kind), failed ? "FAIL " + failed->name : "PASS"});
                std::size_t k = 0;
                while (k < n && mults[k] == grid.at("mmax")) mults[k++] = 1;
                if (k == n) break;
                ++mults[k];
            }
        }
    }
    report.field("nmax", grid.at("nmax"));
    report.field("lmax", grid.at("lmax"));
    report.field("mmax", grid.at("mmax"));
    report.field("instances", total);
    report.field("frobenius", frobenius);
    report.field("non_counital_only", noncounital);
    report.field("failures", failures);
    report.table("instances", rows);
    emit(report.str(), o, out);
    return failures == 0 ? kOk : kCheckFailed;
}

int cmd_nsy(const std::string& action, const std::vector<std::string>& tokens, const Options& o, std::ostream& out) {
    if (action == "sweep") return cmd_sweep(tokens, o, out);
    const Format f = o.fmt();
    const nsy::Algebra a = nsy::build(nsy::parse_params(tokens));
    const ComultData c = nsy::delta(a);
    if (action == "build") {
        if (f == Format::Json) {
            emit(io::dump(io::to_json(ComultData(a.data, c.delta, nsy::epsilon(a)))), o, out);
            return kOk;
        }
        Report r(f, "nsy build", std::nullopt);
        r.field("params", nsy::format_params(a.params));
        r.field("dim", a.basis.size());
        r.field("frobenius", nsy::is_frobenius(a.params));
        r.table("multiplication", fmt::multiplication_table(*a.data));
        emit(r.str(), o, out);
        return kOk;
    }
    if (action == "table") {
        emit(table_text(fmt::multiplication_table(*a.data), f), o, out);
        return kOk;
    }
    if (action == "delta") {
        emit(table_text(fmt::delta_table(c), f), o, out);
        return kOk;
    }
    if (action == "counit") {
        Report r(f, "nsy counit", std::nullopt);
        r.field("params", nsy::format_params(a.params));
        const CounitSolution sol = solve_counit(c);
        r.field("counit_exists", sol.counit.has_value());
        if (sol.counit) {
            r.field("unique", sol.unique);
            r.table("counit", fmt::functional_table(*sol.counit, a.data->labels(), "eps"));
        } else {
            const Vector eps = nsy::formula_counit(a);
            fmt::Table t{{"x", "(eps (x) id)Delta(x)", "(id (x) eps)Delta(x)"}, {}};
            for (std::size_t x = 0; x < a.basis.size(); ++x) {
                const Vector l = counit_left(c, eps, a.data->basis(x));
                const Vector rr = counit_right(c, eps, a.data->basis(x));
                if (l != rr) {
                    t.rows.push_back({a.data->label(x), fmt::combination(l, a.data->labels()),
                                      fmt::combination(rr, a.data->labels())});
                }
            }
            r.table("mismatch", t);
        }
        emit(r.str(), o, out);
        return kOk;
    }
    if (action == "check") {
        const NsyCheck res = check_nsy(a);
        Report r(f, "nsy check", std::nullopt);
        r.field("params", nsy::format_params(a.params));
        r.field("dim", a.basis.size());
        r.field("classification", to_string(res.classification.kind));
        r.field("passed", res.report.passed());
        r.table("checks", fmt::report_table(res.report, a.data->labels()));
        emit(r.str(), o, out);
        return res.report.passed() ? kOk : kCheckFailed;
    }
    throw InputError("unknown nsy action '" + action + "'");
}

struct WhopfSource {
    whopf::WeakHopfData hopf;
    std::optional<qtg::QTGInput> qtg;
    std::string name;
};

WhopfSource load_whopf_file(const std::string& path) {
    const Json j = io::parse(io::read_input(path));
    if (j.is_object() && j.contains("morphisms")) return {groupoid_algebra(io::groupoid_from_json(j)), std::nullopt, path};
    return {io::weak_hopf_from_json(j), std::nullopt, path};
}

int whopf_check(const WhopfSource& s, const Options& o, std::ostream& out) {
    const VerificationReport report = whopf::check_weak_hopf(s.hopf);
    Report r(o.fmt(), "whopf check", std::nullopt);
    r.field("source", s.name);
    r.field("dim", s.hopf.dim());
    r.field("passed", report.passed());
    if (report.passed()) r.field("hopf", whopf::is_hopf(s.hopf));
    r.table("checks", fmt::report_table(report, s.hopf.algebra->labels()));
    emit(r.str(), o, out);
    return report.passed() ? kOk : kCheckFailed;
}

/// Runs the axiom check first; on failure prints it and returns false.
bool require_weak_hopf(const WhopfSource& s, const std::string& command, const Options& o, std::ostream& out) {
    const VerificationReport report = whopf::check_weak_hopf(s.hopf);
    if (report.passed()) return true;
    Report r(o.fmt(), command, std::nullopt);
    r.field("source", s.name);
    r.field("passed", false);
    r.table("checks", fmt::report_table(report, s.hopf.algebra->labels()));
    emit(r.str(), o, out);
    return false;
}

int whopf_integrals(const WhopfSource& s, const Options& o, std::ostream& out) {
    if (!require_weak_hopf(s, "whopf integrals", o, out)) return kCheckFailed;
    Report r(o.fmt(), "whopf integrals", std::nullopt);
    r.field("source", s.name);
    fmt::Table t{{"side", "k", "integral"}, {}};
    for (auto side : {whopf::Side::Left, whopf::Side::Right}) {
        const auto space = whopf::integral_space(s.hopf, side);
        const std::string name = side == whopf::Side::Left ? "left" : "right";
        r.field(name + "_dim", space.basis.size());
        for (std::size_t k = 0; k < space.basis.size(); ++k) {
            t.rows.push_back({name, std::to_string(k), fmt::combination(space.basis[k], s.hopf.algebra->labels())});
        }
    }
    r.table("integrals", t);
    emit(r.str(), o, out);
    return kOk;
}

int whopf_frobenius(const WhopfSource& s, const Options& o, std::ostream& out) {
    if (!require_weak_hopf(s, "whopf frobenius", o, out)) return kCheckFailed;
    const auto& labels = s.hopf.algebra->labels();
    Report r(o.fmt(), "whopf frobenius", o.seed);
    r.field("source", s.name);
    r.field("dim", s.hopf.dim());
    const auto search = whopf::find_nondegenerate_integral(s.hopf, o.seed);
    r.field("candidates_tried", search.candidates_tried);

    Vector lambda = search.found ? search.found->integral
                                 : whopf::integral_space(s.hopf, whopf::Side::Left).basis.front();
    if (search.found) {
        r.field("integral", fmt::combination(lambda, labels));
        r.field("dual", fmt::combination(search.found->dual, labels));
    } else {
        r.field("result", std::string("inconclusive: no non-degenerate left integral found; not a proof"));
        r.field("integral", fmt::combination(lambda, labels));
    }
    const bool psi = is_invertible(whopf::psi_map(s.hopf, lambda));
    const bool phi = is_invertible(whopf::phi_map(s.hopf, lambda));
    const bool phi_prime = is_invertible(whopf::phi_prime_map(s.hopf, lambda));
    r.field("psi_invertible", psi);
    r.field("phi_phi_prime_agree", psi == phi && psi == phi_prime);

    const ComultData c = whopf::frobenius_from_integral(s.hopf, lambda);
    Classification cls = analyze(c);
    VerificationReport report = cls.report;
    report.record("psi_phi_phi_prime_agreement",
                  psi == phi && psi == phi_prime ? std::nullopt : std::optional(Witness{{}, Vector(1), Vector(1)}));
    report.record("counit_iff_nondegenerate", cls.counit.counit.has_value() == psi
                                                  ? std::nullopt
                                                  : std::optional(Witness{{}, Vector(1), Vector(1)}));
    if (s.qtg) {
        const ComultData closed = qtg::frobenius(*s.qtg);
        const qtg::Integral in = qtg::integral(*s.qtg, s.hopf);
        r.field("closed_form_integral", fmt::combination(in.integral, labels));
        r.field("closed_form_matches_generic", true);
        cls = analyze(closed);
        report.append(check_counit(closed, *closed.counit));
        r.table("delta", fmt::delta_table(closed));
        r.table("counit", fmt::functional_table(*closed.counit, labels, "eps"));
    } else {
        r.table("delta", fmt::delta_table(c));
        if (cls.counit.counit) r.table("counit", fmt::functional_table(*cls.counit.counit, labels, "eps"));
    }
    r.field("classification", to_string(cls.kind));
    r.table("checks", fmt::report_table(report, labels));
    emit(r.str(), o, out);
    return report.passed() && cls.kind == FrobeniusClass::Frobenius ? kOk : kCheckFailed;
}

struct WhopfArgs {
    std::vector<std::string> words;
    std::size_t pair_objects = 0;
    std::string components;
    std::string file;
    std::size_t cyclic = 0;
    std::string l = "trivial";
    std::string b;
    std::string action = "trivial";
};

int cmd_whopf(const WhopfArgs& w, const Options& o, std::ostream& out) {
    if (w.words.empty()) throw InputError("whopf needs an action");
    const std::string& kind = w.words[0];
    std::optional<WhopfSource> source;
    std::string op;
    if (kind == "check" || kind == "integrals" || kind == "frobenius") {
        if (w.words.size() != 2) throw InputError("whopf " + kind + " takes exactly one input file (or -)");
        source = load_whopf_file(w.words[1]);
        op = kind;
    } else {
        if (w.words.size() > 2) throw InputError("unexpected argument '" + w.words[2] + "'");
        op = w.words.size() == 2 ? w.words[1] : "check";
        if (kind == "groupoid") {
            const int given = (w.pair_objects > 0) + !w.components.empty() + !w.file.empty();
            if (given != 1) throw InputError("groupoid needs exactly one of --pair-objects, --components, --file");
            if (w.pair_objects > 0) {
                source = WhopfSource{groupoid_algebra(pair_groupoid(w.pair_objects)), std::nullopt,
                                     "pair groupoid on " + std::to_string(w.pair_objects) + " objects"};
            } else if (!w.components.empty()) {
                source = WhopfSource{groupoid_algebra(groupoid_from_components(parse_components(w.components))),
                                     std::nullopt, "groupoid " + w.components};
            } else {
                source = WhopfSource{groupoid_algebra(io::groupoid_from_json(io::parse(io::read_input(w.file)))),
                                     std::nullopt, w.file};
            }
        } else if (kind == "group") {
            if (w.cyclic == 0) throw InputError("group needs --cyclic N");
            source = WhopfSource{hopf_group_algebra(cyclic_group(w.cyclic)), std::nullopt,
                                 "k[Z/" + std::to_string(w.cyclic) + "]"};
        } else if (kind == "qtg") {
            if (w.b.empty()) throw InputError("qtg needs --B");
            auto input = qtg::named_instance(w.l, w.b, w.action);
            source = WhopfSource{qtg::build(input), std::move(input),
                                 "H(L=" + w.l + ", B=" + w.b + ", action=" + w.action + ")"};
        } else {
            throw InputError("unknown whopf action '" + kind + "'");
        }
    }
    if (op == "check") return whopf_check(*source, o, out);
    if (op == "integrals") return whopf_integrals(*source, o, out);
    if (op == "frobenius") return whopf_frobenius(*source, o, out);
    if (op == "export") {
        emit(io::dump(io::to_json(source->hopf)), o, out);
        return kOk;
    }
    throw InputError("unknown whopf operation '" + op + "'; expected check, integrals, frobenius or export");
}

int cmd_verify(const std::string& path, const Options& o, std::ostream& out) {
    const ComultData c = io::comult_from_json(io::parse(io::read_input(path)));
    VerificationReport report = check_algebra(*c.algebra);
    const Classification cls = analyze(c);
    report.append(cls.report);
    Report r(o.fmt(), "verify", std::nullopt);
    r.field("source", path);
    r.field("dim", c.dim());
    r.field("classification", to_string(cls.kind));
    r.field("counit_provided", c.counit.has_value());
    if (cls.counit.counit) {
        r.field("counit_unique", cls.counit.unique);
        r.table("counit", fmt::functional_table(*cls.counit.counit, c.algebra->labels(), "eps"));
    }
    r.table("checks", fmt::report_table(report, c.algebra->labels()));
    emit(r.str(), o, out);
    return report.passed() ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of Frobenius and weak Hopf structures", "ncfrob"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json, markdown or csv")->capture_default_str();
        sub->add_option("--output", o.output, "write to this file instead of stdout");
        sub->add_option("--seed", o.seed, "seed for the integral search")->capture_default_str();
    };

    std::string nsy_action;
    std::vector<std::string> nsy_params;
    auto* nsy_cmd = app.add_subcommand("nsy", "NSY algebras B_{n,l}(m_0..m_{n-1})");
    nsy_cmd->add_option("action", nsy_action, "build, table, delta, counit, check or sweep")
        ->required()
        ->check(CLI::IsMember({"build", "table", "delta", "counit", "check", "sweep"}));
    nsy_cmd->add_option("params", nsy_params, "n=.. ell=.. m=a,b,.. (sweep: nmax=.. lmax=.. mmax=..)");
    add_common(nsy_cmd);

    WhopfArgs w;
    auto* whopf_cmd = app.add_subcommand("whopf", "weak Hopf algebras");
    whopf_cmd->add_option("words", w.words, "groupoid|group|qtg [check|integrals|frobenius|export], "
                                            "or check|integrals|frobenius <file|->");
    whopf_cmd->add_option("--pair-objects", w.pair_objects, "pair groupoid on N objects");
    whopf_cmd->add_option("--components", w.components, "groupoid components k:g,... (g = 1 or 2)");
    whopf_cmd->add_option("--file", w.file, "groupoid JSON file");
    whopf_cmd->add_option("--cyclic", w.cyclic, "order of the cyclic group");
    whopf_cmd->add_option("--L", w.l, "trivial or cyclic:N")->capture_default_str();
    whopf_cmd->add_option("--B", w.b, "matrix:D or group:N");
    whopf_cmd->add_option("--action", w.action, "trivial or inversion")->capture_default_str();
    add_common(whopf_cmd);

    std::string verify_path;
    auto* verify_cmd = app.add_subcommand("verify", "classify a comultiplication given as JSON");
    verify_cmd->add_option("input", verify_path, "JSON file, or - for stdin")->required();
    add_common(verify_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (nsy_cmd->parsed()) return cmd_nsy(nsy_action, nsy_params, o, out);
        if (whopf_cmd->parsed()) return cmd_whopf(w, o, out);
        return cmd_verify(verify_path, o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InternalError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kCheckFailed;
    }
}

}  // namespace ncfrob::cli
