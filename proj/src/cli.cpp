#include "superirr/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "superirr/certificates.hpp"
#include "superirr/constructions.hpp"
#include "superirr/parse.hpp"
#include "superirr/search.hpp"
#include "superirr/serialize.hpp"
#include "superirr/weakcheck.hpp"
#include "superirr/zfactor.hpp"

namespace superirr {

namespace {

constexpr int kOk = 0;
constexpr int kWitness = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 3;

void emit(std::ostream& out, const ordered_json& j, bool as_json,
          const std::string& human) {
    if (as_json)
        out << j.dump(2) << "\n";
    else
        out << human;
}

std::string witness_text(const SubstitutionWitness& w) {
    std::string s;
    s += "  g        = " + render(w.substitution) + "\n";
    s += "  divisor  = " + render(w.divisor) + "\n";
    s += "  cofactor = " + render(w.cofactor) + "\n";
    s += "  scalar   = " + w.scalar.get_str() + "\n";
    return s;
}

IntPoly parse_integer_poly(const std::string& text) {
    RatPoly f = parse_polynomial(text);
    if (!f.is_integral())
        throw CLI::ValidationError("polynomial", "integer coefficients required here");
    return f.to_int();
}

int do_factor(const std::string& expr, bool as_json, std::ostream& out) {
    RatPoly f = parse_polynomial(expr);
    if (f.is_zero()) throw CLI::ValidationError("polynomial", "zero polynomial");
    auto [scalar, prim] = f.split_integer();
    Factorization fact = factor_over_integers(prim);
    fact.unit *= scalar;
    std::string human = "unit: " + fact.unit.get_str() + "\n";
    for (const auto& [q, e] : fact.factors) {
        human += "factor: " + render(q);
        if (e > 1) human += "  (multiplicity " + std::to_string(e) + ")";
        human += "\n";
    }
    emit(out, json_of(fact), as_json, human);
    return kOk;
}

int do_compose(const std::string& fe, const std::string& ge, bool as_json,
               std::ostream& out) {
    RatPoly f = parse_polynomial(fe);
    RatPoly g = parse_polynomial(ge);
    RatPoly comp = compose(f, g);
    emit(out, json_of(comp), as_json, render(comp) + "\n");
    return kOk;
}

int do_construct(const std::string& method, const std::string& expr, unsigned k,
                 bool as_json, std::ostream& out) {
    RatPoly f = parse_polynomial(expr);
    std::optional<SubstitutionWitness> w;
    if (method == "naive") {
        w = naive_substitution(parse_integer_poly(expr), k);
    } else if (method == "field") {
        w = field_substitution(f);
    } else if (method == "domain") {
        w = domain_substitution(parse_integer_poly(expr));
    } else if (method == "even-split") {
        w = even_split_substitution(f);
    } else if (method == "quartic") {
        w = quartic_witness(f);
        if (!w) {
            emit(out, ordered_json{{"witness", nullptr},
                                   {"note", "criterion value 8c - 4ab + a^3 is zero"}},
                 as_json, "inapplicable: criterion value 8c - 4ab + a^3 is zero\n");
            return kUnknown;
        }
    } else {
        throw CLI::ValidationError("--method", "unknown method " + method);
    }
    emit(out, json_of(*w), as_json, "witness verified\n" + witness_text(*w));
    return kWitness;
}

int do_certify(const std::string& expr, const CertifyOptions& opts, bool as_json,
               std::ostream& out) {
    Certificate cert = certify(parse_integer_poly(expr), opts);
    std::string human = "status: " + to_string(cert.status) + "\n";
    if (cert.rule) human += "rule:   " + *cert.rule + "\n";
    if (cert.triple)
        human += "dioph witness: (" + cert.triple->x.get_str() + ", " +
                 cert.triple->y.get_str() + ", " + cert.triple->z.get_str() + ")\n";
    if (cert.witness) human += witness_text(*cert.witness);
    if (!cert.note.empty()) human += "note:   " + cert.note + "\n";
    emit(out, json_of(cert), as_json, human);
    switch (cert.status) {
        case CertStatus::Certified: return kOk;
        case CertStatus::Refuted: return kWitness;
        default: return kUnknown;
    }
}

int do_search(const std::string& expr, long bound, bool rational, long denom,
              const SearchOptions& sopts, bool as_json, std::ostream& out) {
    SearchReport report =
        rational ? search_rational_witness(parse_polynomial(expr), bound, denom, sopts)
                 : search_integer_witness(parse_integer_poly(expr), bound, sopts);
    std::string human;
    human += "tested " + std::to_string(report.compositions_tested) + " compositions, " +
             (report.exhausted ? "box exhausted" : "stopped early") + "\n";
    for (const auto& w : report.witnesses) human += "witness found\n" + witness_text(w);
    if (report.witnesses.empty()) human += "no witness found\n";
    emit(out, json_of(report), as_json, human);
    return report.witnesses.empty() ? kOk : kWitness;
}

int do_weak_check(unsigned k, long bound, unsigned jobs, bool as_json,
                  std::ostream& out) {
    WeakCheckReport report = weak_check(k, Integer(bound), jobs);
    std::string human = "checked " + std::to_string(report.pairs_checked) +
                        " (a, b) pairs for k = " + std::to_string(k) + "\n";
    if (report.passed()) {
        human += "all compositions irreducible\n";
    } else {
        for (const auto& c : report.counterexamples)
            human += "counterexample: a = " + c.a.get_str() + ", b = " + c.b.get_str() +
                     ", power " + std::to_string(c.power) + "\n";
    }
    emit(out, json_of(report), as_json, human);
    return report.passed() ? kOk : kWitness;
}

int do_congruence(unsigned k, unsigned jobs, bool as_json, std::ostream& out) {
    CongruenceReport report = congruence_verify(k, jobs);
    std::string human = "checked " + std::to_string(report.vectors_checked) +
                        " primitive vectors mod 4, " +
                        std::to_string(report.violations.size()) + " violations\n";
    emit(out, json_of(report), as_json, human);
    return report.passed() ? kOk : kWitness;
}

int do_disc(const std::string& expr, int trinomial_k, bool as_json, std::ostream& out) {
    if (trinomial_k >= 0) {
        Integer d = trinomial_disc(static_cast<unsigned>(trinomial_k));
        ordered_json j;
        j["k"] = trinomial_k;
        j["discriminant"] = d.get_str();
        j["cross_checked"] = true;
        emit(out, j, as_json, d.get_str() + "\n");
        return kOk;
    }
    RatPoly f = parse_polynomial(expr);
    Rational d = discriminant(f);
    ordered_json j;
    j["input"] = json_of(f);
    j["discriminant"] = d.get_str();
    emit(out, j, as_json, d.get_str() + "\n");
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for reducing substitutions and 2-superirreducibility"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--format-json", as_json)->group("");  // hidden alias
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string expr, expr2, method = "domain", checkpoint;
    long bound = 10, denom = 1;
    unsigned k = 0, jobs = 0;
    int trinomial_k = -1;
    bool rational = false;
    CertifyOptions copts;
    long dioph_bound = 200;

    auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial over Q");
    factor_cmd->add_option("poly", expr, "polynomial expression")->required();

    auto* compose_cmd = app.add_subcommand("compose", "compose f with g");
    compose_cmd->add_option("f", expr, "outer polynomial")->required();
    compose_cmd->add_option("g", expr2, "inner polynomial")->required();

    auto* construct_cmd =
        app.add_subcommand("construct", "build a reducing substitution witness");
    construct_cmd->add_option("poly", expr, "polynomial expression")->required();
    construct_cmd
        ->add_option("--method", method,
                     "naive | field | domain | even-split | quartic")
        ->check(CLI::IsMember({"naive", "field", "domain", "even-split", "quartic"}));
    construct_cmd->add_option("--k", k, "degree offset for the naive method");

    auto* certify_cmd =
        app.add_subcommand("certify", "2-superirreducibility certificate for a*x^(4k)+b");
    certify_cmd->add_option("poly", expr, "polynomial expression")->required();
    certify_cmd->add_option("--bound", dioph_bound, "Diophantine search bound");
    certify_cmd->add_option("--witness-bound", copts.witness_coeff_bound,
                            "coefficient box for the refutation search");
    certify_cmd->add_option("--witness-denom", copts.witness_denom_bound,
                            "denominator bound for the refutation search");

    auto* search_cmd = app.add_subcommand("search", "sweep quadratic substitutions");
    search_cmd->add_option("poly", expr, "polynomial expression")->required();
    search_cmd->add_option("--bound", bound, "coefficient box bound")->required();
    search_cmd->add_flag("--rational", rational, "search rational substitutions");
    search_cmd->add_option("--denom", denom, "denominator bound (rational mode)");
    search_cmd->add_option("--checkpoint", checkpoint, "checkpoint file (resumes if present)");
    search_cmd->add_option("--jobs", jobs, "worker threads (0 = auto)");

    auto* weak_cmd = app.add_subcommand("weak-check", "verify the trinomial family");
    weak_cmd->add_option("--k", k, "family index (>= 2)")->required();
    weak_cmd->add_option("--bound", bound, "coefficient bound")->required();
    weak_cmd->add_option("--jobs", jobs, "worker threads (0 = auto)");

    auto* cong_cmd =
        app.add_subcommand("congruence-verify", "mod-4 obstruction for the trinomial family");
    cong_cmd->add_option("--k", k, "family index (2..5)")->required();
    cong_cmd->add_option("--jobs", jobs, "worker threads (0 = auto)");

    auto* disc_cmd = app.add_subcommand("disc", "discriminant");
    disc_cmd->add_option("poly", expr, "polynomial expression");
    disc_cmd->add_option("--trinomial-k", trinomial_k,
                         "discriminant of x^(2k+1)+2x+1 with cross-check");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    as_json = as_json || format == "json";

    try {
        if (app.got_subcommand(factor_cmd)) return do_factor(expr, as_json, out);
        if (app.got_subcommand(compose_cmd)) return do_compose(expr, expr2, as_json, out);
        if (app.got_subcommand(construct_cmd))
            return do_construct(method, expr, k, as_json, out);
        if (app.got_subcommand(certify_cmd)) {
            copts.diophantine_bound = Integer(dioph_bound);
            return do_certify(expr, copts, as_json, out);
        }
        if (app.got_subcommand(search_cmd)) {
            SearchOptions sopts;
            sopts.jobs = jobs;
            sopts.checkpoint_path = checkpoint;
            return do_search(expr, bound, rational, denom, sopts, as_json, out);
        }
        if (app.got_subcommand(weak_cmd)) return do_weak_check(k, bound, jobs, as_json, out);
        if (app.got_subcommand(cong_cmd)) return do_congruence(k, jobs, as_json, out);
        if (app.got_subcommand(disc_cmd)) {
            if (trinomial_k < 0 && expr.empty())
                throw CLI::ValidationError("disc", "need a polynomial or --trinomial-k");
            return do_disc(expr, trinomial_k, as_json, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << "no command\n";
    return kUsage;
}

}  // namespace superirr
