#include "qmzv/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmzv/checks.hpp"
#include "qmzv/error.hpp"
#include "qmzv/relations.hpp"
#include "qmzv/serialize.hpp"

namespace qmzv {

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

struct Config {
    std::string q = "1/2";
    int truncation = 300;
    double tolerance = 1e-10;
    bool exact = false;
    bool zbar = false;
    std::string t = "1/2";
    int weight = 3;
    int max_weight = 7;
    bool no_hbar_lifts = false;
    bool json = false;
    std::string out;
    std::string in;
    std::string kind;
    std::string expr1;
    std::string expr2;
};

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string format_short(double v) {
    std::ostringstream os;
    os << std::setprecision(3) << v;
    return os.str();
}

Rational parse_unit_rational(const std::string& text, const char* name) {
    const Rational r = Rational::parse(text);
    if (r.sign() <= 0 || r >= Rational(1)) {
        throw ParseError(std::string(name) + " must satisfy 0 < " + name + " < 1, got " + text, 0);
    }
    return r;
}

QContext make_context(const Config& cfg) {
    if (cfg.truncation < 10) {
        throw ParseError("--N must be at least 10", 0);
    }
    if (!(cfg.tolerance > 0.0)) {
        throw ParseError("--tol must be positive", 0);
    }
    QContext ctx = QContext::rational(parse_unit_rational(cfg.q, "q"));
    ctx.truncation = cfg.truncation;
    ctx.tolerance = cfg.tolerance;
    if (cfg.exact) {
        ctx.mode = EvalMode::exact;
        ctx.adaptive = false;
    }
    return ctx;
}

AElement parse_a(const std::string& text) {
    auto parsed = parse_element(text);
    if (auto* a = std::get_if<AElement>(&parsed)) {
        return std::move(*a);
    }
    return contract_to_a(std::get<XElement>(parsed));
}

void write_output(const Config& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out);
    if (!file) {
        throw Error("cannot write '" + cfg.out + "'");
    }
    file << text;
}

void print_eval(const Config& cfg, const EvalResult& r, std::ostream& out) {
    if (cfg.json) {
        nlohmann::json doc{{"value", r.value},
                           {"tail_bound", r.tail_bound},
                           {"truncation", r.truncation},
                           {"certified", r.certified}};
        if (r.exact_partial) {
            doc["exact_partial"] = r.exact_partial->to_string();
        }
        out << doc.dump() << "\n";
        return;
    }
    out << format_double(r.value) << " +- " << format_short(r.tail_bound) << "\n";
    if (r.exact_partial) {
        out << "exact partial sum (N = " << r.truncation << "): " << r.exact_partial->to_string() << "\n";
    }
}

int cmd_product(const Config& cfg, std::ostream& out) {
    const ProductKind kind = parse_product_kind(cfg.kind);
    ProductCache cache;
    out << product(kind, parse_a(cfg.expr1), parse_a(cfg.expr2), cache).to_string() << "\n";
    return kOk;
}

int cmd_eval(const Config& cfg, std::ostream& out) {
    const QContext ctx = make_context(cfg);
    const AElement e = parse_a(cfg.expr1);
    print_eval(cfg, cfg.zbar ? zbar_q(e, ctx) : z_q(e, ctx), out);
    return kOk;
}

int cmd_polylog(const Config& cfg, std::ostream& out) {
    Config fixed = cfg;
    fixed.exact = false;
    const QContext ctx = make_context(fixed);
    const Rational t = Rational::parse(cfg.t);
    if (t.abs() >= Rational(1)) {
        throw ParseError("--t must satisfy |t| < 1", 0);
    }
    print_eval(cfg, l_value(parse_a(cfg.expr1), t.to_double(), ctx), out);
    return kOk;
}

void check_weight(int d, const char* flag) {
    if (d < 2 || d > 8) {
        throw ParseError(std::string(flag) + " must lie in 2..8", 0);
    }
}

ProgressFn progress_to(std::ostream& err) {
    return [&err](const std::string& msg) { err << msg << std::endl; };
}

std::string relation_text(const RelationBasis& b, std::size_t i) {
    std::string s;
    const RationalRow& row = b.rows[i];
    bool first = true;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j].is_zero()) {
            continue;
        }
        const bool negative = row[j].sign() < 0;
        if (first) {
            s += negative ? "-" : "";
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        const Rational c = row[j].abs();
        if (!c.is_one()) {
            s += c.to_string() + "*";
        }
        s += "zbar(" + b.index_basis[j].to_string() + ")";
    }
    return s + " = 0";
}

int cmd_relations(const Config& cfg, std::ostream& out, std::ostream& err) {
    check_weight(cfg.weight, "--weight");
    const RelationBasis basis = relation_basis(cfg.weight, !cfg.no_hbar_lifts, progress_to(err));
    if (cfg.json && cfg.out.empty()) {
        out << to_json(basis);
        return kOk;
    }
    if (!cfg.out.empty()) {
        write_output(cfg, to_json(basis), out);
    }
    out << "weight " << basis.weight << ": dimension " << basis.dimension() << "\n";
    if (cfg.out.empty()) {
        for (std::size_t i = 0; i < basis.rows.size(); ++i) {
            out << relation_text(basis, i) << "\n";
        }
    }
    return kOk;
}

int cmd_dims(const Config& cfg, std::ostream& out, std::ostream& err) {
    check_weight(cfg.max_weight, "--max-weight");
    const bool lifts = !cfg.no_hbar_lifts;
    const std::vector<DimsRow> table = dims_table(cfg.max_weight, lifts, progress_to(err));
    std::ostringstream text;
    auto line = [&](const char* label, auto&& value) {
        text << std::left << std::setw(26) << label;
        for (const DimsRow& r : table) {
            text << std::right << std::setw(5) << value(r);
        }
        text << "\n";
    };
    text << "hbar lifts: " << (lifts ? "on" : "off") << "\n";
    line("weight d", [](const DimsRow& r) { return static_cast<std::size_t>(r.weight); });
    line("# of admissible indices", [](const DimsRow& r) { return r.indices; });
    line("upper bound of dim Z<=d", [](const DimsRow& r) { return r.bound(); });
    line("dim N<=d", [](const DimsRow& r) { return r.dimension; });
    if (cfg.json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const DimsRow& r : table) {
            rows.push_back({{"weight", r.weight}, {"indices", r.indices}, {"dim_n", r.dimension}, {"bound", r.bound()}});
        }
        const nlohmann::json doc{{"mode", {{"hbar_lifts", lifts}}}, {"rows", rows}};
        if (cfg.out.empty()) {
            out << doc.dump(2) << "\n";
        } else {
            write_output(cfg, doc.dump(2) + "\n", out);
            out << text.str();
        }
        return kOk;
    }
    write_output(cfg, text.str(), out);
    if (!cfg.out.empty()) {
        out << text.str();
    }
    return kOk;
}

struct Family {
    explicit Family(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t count = 0;
    std::size_t failures = 0;
    double worst = 0.0;  // largest difference / allowance
    std::string first_failure;

    void add(const Check& c, const std::string& label) {
        ++count;
        worst = std::max(worst, c.allowance > 0 ? c.difference / c.allowance : c.difference);
        if (!c.ok) {
            if (failures == 0) {
                first_failure = label + ": |difference| " + format_short(c.difference) + " > " +
                                format_short(c.allowance);
            }
            ++failures;
        }
    }

    void print(std::ostream& out) const {
        out << name << ": " << count << " checks, worst ratio " << format_short(worst) << ", "
            << (failures == 0 ? "PASS" : "FAIL") << "\n";
        if (failures != 0) {
            out << "  first failure: " << first_failure << "\n";
        }
    }
};

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
    const QContext ctx = make_context(cfg);
    std::vector<Family> families;

    RelationBasis basis;
    if (!cfg.in.empty()) {
        std::ifstream file(cfg.in);
        if (!file) {
            throw Error("cannot read '" + cfg.in + "'");
        }
        std::stringstream buf;
        buf << file.rdbuf();
        basis = from_json(buf.str());
    } else {
        check_weight(cfg.weight, "--weight");
        basis = relation_basis(cfg.weight, !cfg.no_hbar_lifts, progress_to(err));
    }
    const int d = basis.weight;

    Family rel{"relations (weight " + std::to_string(d) + ")"};
    const NumericReport report = verify_numeric(basis, ctx);
    for (const RowCheck& r : report.rows) {
        rel.add(Check{std::abs(r.value), r.allowance, r.ok}, "row " + std::to_string(r.row) + " [" +
                                                                 relation_text(basis, r.row) + "]");
    }
    families.push_back(rel);

    if (cfg.in.empty()) {
        ProductCache cache;
        Family harm{"harmonic product theorem"};
        Family shuf{"shuffle product theorem"};
        for (int s = 2; s <= d; ++s) {
            for (int a = 1; 2 * a <= s; ++a) {
                for (const AWord& p : admissible_start_words(a)) {
                    for (const AWord& r : admissible_start_words(s - a)) {
                        const std::string label = p.to_string() + " , " + r.to_string();
                        harm.add(product_theorem(ProductKind::harmonic, p, r, ctx, cache), label);
                        shuf.add(product_theorem(ProductKind::shuffle, p, r, ctx, cache), label);
                    }
                }
            }
        }
        families.push_back(harm);
        families.push_back(shuf);

        Family ds{"double shuffle generators"};
        for (const Generator& g : gen_double_shuffle(d, &cache)) {
            ds.add(kernel_check(g.element, ctx), g.provenance);
        }
        families.push_back(ds);
        Family rs{"resummation generators"};
        for (const Generator& g : gen_resummation(d, !cfg.no_hbar_lifts)) {
            rs.add(kernel_check(g.element, ctx), g.provenance);
        }
        families.push_back(rs);
    }

    bool ok = true;
    for (const Family& f : families) {
        f.print(out);
        ok = ok && f.failures == 0;
    }
    return ok ? kOk : kVerifyFailed;
}

int cmd_hoffman(const Config& cfg, std::ostream& out) {
    out << gen_hoffman(Index::parse(cfg.expr1)).to_string() << "\n";
    return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Word algebra and q-series toolkit for q-analogue multiple zeta values", "qmzv"};
    app.require_subcommand(1);
    Config cfg;

    auto add_q = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q, "Rational q with 0 < q < 1")->capture_default_str();
        sub->add_option("--N", cfg.truncation, "Starting truncation (>= 10)")->capture_default_str();
        sub->add_option("--tol", cfg.tolerance, "Tolerance")->capture_default_str();
    };

    auto* product = app.add_subcommand("product", "Product of two elements");
    product->add_option("kind", cfg.kind, "harmonic | shuffle | star")->required();
    product->add_option("a", cfg.expr1, "First element")->required();
    product->add_option("b", cfg.expr2, "Second element")->required();

    auto* eval = app.add_subcommand("eval", "Evaluate Z_q on an element of H0hat");
    eval->add_option("expr", cfg.expr1, "Element")->required();
    add_q(eval);
    eval->add_flag("--exact", cfg.exact, "Exact rational partial sum at the fixed truncation --N");
    eval->add_flag("--zbar", cfg.zbar, "Evaluate the modified value (1-q)^{-d} Z_q");
    eval->add_flag("--json", cfg.json, "JSON output");

    auto* polylog = app.add_subcommand("polylog", "Evaluate L_w(t)");
    polylog->add_option("expr", cfg.expr1, "Element")->required();
    polylog->add_option("--t", cfg.t, "Rational t with |t| < 1")->capture_default_str();
    add_q(polylog);
    polylog->add_flag("--json", cfg.json, "JSON output");

    auto* relations = app.add_subcommand("relations", "Relation basis of N<=d over admissible indices");
    relations->add_option("--weight", cfg.weight, "Weight d (2..8)")->required();
    relations->add_flag("--no-hbar-lifts", cfg.no_hbar_lifts, "Omit h-multiples of lower-weight duality generators");
    relations->add_flag("--json", cfg.json, "Write the JSON document");
    relations->add_option("--out", cfg.out, "Write the JSON document to a file");

    auto* dims = app.add_subcommand("dims", "Dimension table of N<=d");
    dims->add_option("--max-weight", cfg.max_weight, "Largest weight (2..8)")->capture_default_str();
    dims->add_flag("--no-hbar-lifts", cfg.no_hbar_lifts, "Omit h-multiples of lower-weight duality generators");
    dims->add_flag("--json", cfg.json, "JSON output");
    dims->add_option("--out", cfg.out, "Output file");

    auto* verify = app.add_subcommand("verify", "Numerical verification of relations and product theorems");
    verify->add_option("--weight", cfg.weight, "Weight d (2..8)")->capture_default_str();
    verify->add_option("--in", cfg.in, "Verify a relation document instead of generating one");
    verify->add_flag("--no-hbar-lifts", cfg.no_hbar_lifts, "Omit h-multiples of lower-weight duality generators");
    add_q(verify);

    auto* hoffman = app.add_subcommand("hoffman", "Hoffman relation for an admissible index, e.g. 2,1");
    hoffman->add_option("index", cfg.expr1, "Comma separated index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*product) {
            return cmd_product(cfg, out);
        }
        if (*eval) {
            return cmd_eval(cfg, out);
        }
        if (*polylog) {
            return cmd_polylog(cfg, out);
        }
        if (*relations) {
            return cmd_relations(cfg, out, err);
        }
        if (*dims) {
            return cmd_dims(cfg, out, err);
        }
        if (*verify) {
            return cmd_verify(cfg, out, err);
        }
        if (*hoffman) {
            return cmd_hoffman(cfg, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace qmzv
