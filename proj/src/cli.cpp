// Command-line front end: problem files, decision commands, artifact
// emission and verification, schema generation, oracle runs.
#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cardcomp/decide.hpp"
#include "cardcomp/semantics.hpp"
#include "cardcomp/serialize.hpp"
#include "cardcomp/syntax.hpp"

namespace cardcomp {

namespace {

constexpr const char* kSolverName = "exact-rational-simplex+farkas";

struct GlobalOpts {
    std::string logic = "card";
    bool logic_given = false;
    std::string format = "text";
    std::uint64_t seed = 0;
    std::uint64_t step_budget = 10'000'000;
    std::size_t max_labels = kMaxLabels;
    bool timing = false;
};

// ---------------------------------------------------------------------------
// Problem files: line-oriented, '#' comments, directives
//   logic: fin|ded|card      (default logic; the --logic flag overrides)
//   labels: a b c            (optional; otherwise collected from formulas)
//   assume: <formula>        (any number)
//   goal: <formula>          (at most one; required by `entail`)
// ---------------------------------------------------------------------------

struct Problem {
    std::optional<Logic> logic;
    LabelRegistry labels;
    std::vector<FormulaPtr> assumptions;
    FormulaPtr goal;  // null when absent
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Problem load_problem(const std::string& path, std::size_t max_labels) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open problem file '" + path + "'");

    std::optional<Logic> logic;
    std::optional<std::vector<std::string>> declared_labels;
    std::vector<std::string> assume_texts;
    std::optional<std::string> goal_text;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto at = [&] { return path + ":" + std::to_string(line_no) + ": "; };
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw InputError(at() + "expected 'directive: content'");
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (key == "logic") {
            logic = logic_from_name(value);
        } else if (key == "labels") {
            std::vector<std::string> names;
            std::string token;
            for (char c : value) {
                if (c == ' ' || c == '\t' || c == ',') {
                    if (!token.empty()) names.push_back(token);
                    token.clear();
                } else {
                    token += c;
                }
            }
            if (!token.empty()) names.push_back(token);
            declared_labels = std::move(names);
        } else if (key == "assume") {
            if (value.empty()) throw InputError(at() + "empty assumption");
            assume_texts.push_back(value);
        } else if (key == "goal") {
            if (goal_text) throw InputError(at() + "multiple goals");
            if (value.empty()) throw InputError(at() + "empty goal");
            goal_text = value;
        } else {
            throw InputError(at() + "unknown directive '" + key + "'");
        }
    }

    std::vector<std::string> names;
    if (declared_labels) {
        names = *declared_labels;
    } else {
        for (const auto& t : assume_texts)
            for (auto& id : collect_identifiers(t)) names.push_back(std::move(id));
        if (goal_text)
            for (auto& id : collect_identifiers(*goal_text)) names.push_back(std::move(id));
    }

    Problem p;
    p.logic = logic;
    p.labels = LabelRegistry::from_names(std::move(names), max_labels);
    for (const auto& t : assume_texts) p.assumptions.push_back(parse_formula(t, p.labels));
    if (goal_text) p.goal = parse_formula(*goal_text, p.labels);
    return p;
}

Logic resolve_logic(const GlobalOpts& g, const Problem& p) {
    if (g.logic_given) return logic_from_name(g.logic);
    if (p.logic) return *p.logic;
    return logic_from_name(g.logic);
}

Limits make_limits(const GlobalOpts& g) {
    Limits lim;
    lim.max_labels = g.max_labels;
    lim.step_budget = g.step_budget;
    return lim;
}

// ---------------------------------------------------------------------------
// Text renderings
// ---------------------------------------------------------------------------

std::string atoms_text(const AtomSet& s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : s.to_indices()) {
        if (!first) out += ", ";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

std::string branch_literals_text(const Branch& b) {
    std::string out;
    for (std::size_t i = 0; i < b.literals.size(); ++i) {
        if (i) out += ", ";
        out += pretty_print(b.literals[i].source);
    }
    return out;
}

void render_certificate(std::ostream& os, const CancellationCertificate& c, const Branch& b) {
    os << "  certificate: |" << atoms_text(c.conclusion_e) << "| <= |" << atoms_text(c.conclusion_f)
       << "| at scale " << c.scale.str();
    if (c.refutes)
        os << ", refutes literal " << *c.refutes << "  (" << pretty_print(b.literals[*c.refutes].source)
           << ")";
    else
        os << ", refutes admissibility";
    os << "\n";
    for (const auto& use : c.premises) {
        os << "    " << use.multiplicity.str() << " x ";
        switch (use.kind) {
            case PremiseKind::PositiveLiteral:
                os << "literal " << use.index << "  (" << pretty_print(b.literals[use.index].source)
                   << ")";
                break;
            case PremiseKind::ReversedNegative:
                os << "reversed literal " << use.index << "  ("
                   << pretty_print(b.literals[use.index].source) << ")";
                break;
            case PremiseKind::AtomPositivity:
                os << "atom " << use.index;
                break;
        }
        os << "\n";
    }
    if (!c.coverage.empty()) {
        os << "    coverage chain: literals";
        for (std::size_t s : c.coverage) os << " " << s;
        os << "\n";
    }
}

void render_model(std::ostream& os, const MeasuresModel& m, const WitnessBundle* w) {
    os << "model kind: " << (m.kind == ModelKind::Finitary ? "finitary" : "infinitary") << "\n";
    os << "atoms: " << m.n_atoms() << "\n";
    for (std::size_t i = 0; i < m.labels.size(); ++i)
        os << "  " << m.labels.name(i) << " = " << atoms_text(m.valuation[i]) << "\n";
    for (std::size_t k = 0; k < m.measures.size(); ++k) {
        os << "  mu_" << k << " = [";
        for (std::size_t a = 0; a < m.measures[k].atom_values.size(); ++a) {
            if (a) os << ", ";
            os << m.measures[k].atom_values[a].to_string();
        }
        os << "]";
        if (w) {
            for (const auto& ann : w->annotations)
                if (ann.measure_index == k)
                    os << "  refutes literal " << ann.negative_index << (ann.rho_type ? " (rho)" : "");
            if (w->admissibility_measure == k) os << "  admissibility";
        }
        os << "\n";
    }
}

// ---------------------------------------------------------------------------
// Report assembly shared by sat / entail / model
// ---------------------------------------------------------------------------

Json engine_json(const GlobalOpts& g) {
    Json e = Json::object();
    e["solver"] = kSolverName;
    e["seed"] = g.seed;
    return e;
}

Json decision_report(const std::string& command, Logic logic, const GlobalOpts& g,
                     const Problem& p, const SatResult& r, const char* verdict_sat,
                     const char* verdict_unsat, bool with_symbolic) {
    Json rep = Json::object();
    rep["command"] = command;
    rep["logic"] = logic_name(logic);
    rep["verdict"] = r.sat ? verdict_sat : verdict_unsat;
    rep["engine"] = engine_json(g);
    rep["labels"] = p.labels.names();
    Json assumptions = Json::array();
    for (const auto& f : p.assumptions) assumptions.push_back(pretty_print(f));
    rep["assumptions"] = std::move(assumptions);
    if (p.goal) rep["goal"] = pretty_print(p.goal);
    Json branches = Json::array();
    for (std::size_t i = 0; i < r.branches.size(); ++i) {
        Json b = branch_to_json(r.branches[i]);
        if (r.sat && i == r.witness_branch) b["status"] = "satisfied";
        else if (r.sat && i > r.witness_branch) b["status"] = "skipped";
        else b["status"] = "refuted";
        Json certs = Json::array();
        for (const auto& c : r.branch_certificates[i]) certs.push_back(certificate_to_json(c));
        b["certificates"] = std::move(certs);
        branches.push_back(std::move(b));
    }
    rep["branches"] = std::move(branches);
    if (r.sat && r.witness) {
        Json w = witness_to_json(*r.witness);
        w["branch"] = r.witness_branch;
        if (with_symbolic) w["symbolic"] = symbolic_witness_to_json(symbolic_zf_witness(r.witness->model));
        rep["witness"] = std::move(w);
    }
    return rep;
}

void render_decision_text(std::ostream& os, const Json& rep, const SatResult& r,
                          bool with_symbolic) {
    os << "verdict: " << rep["verdict"].get<std::string>() << "\n";
    os << "logic: " << rep["logic"].get<std::string>() << "\n";
    for (std::size_t i = 0; i < r.branches.size(); ++i) {
        const Branch& b = r.branches[i];
        std::string status = rep["branches"][i]["status"].get<std::string>();
        os << "branch " << i + 1 << "/" << r.branches.size() << " " << status;
        if (!b.literals.empty()) os << ": " << branch_literals_text(b);
        os << "\n";
        for (const auto& c : r.branch_certificates[i]) render_certificate(os, c, b);
    }
    if (r.sat && r.witness) {
        render_model(os, r.witness->model, &*r.witness);
        if (with_symbolic) os << symbolic_zf_witness(r.witness->model).text;
    }
}

void emit(std::ostream& out, const GlobalOpts& g, const Json& rep,
          const std::function<void(std::ostream&)>& text) {
    if (g.format == "json") {
        out << rep.dump(2) << "\n";
    } else {
        text(out);
    }
}

void stamp_timing(Json& rep, const GlobalOpts& g,
                  std::chrono::steady_clock::time_point start) {
    if (!g.timing) return;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                    start)
                  .count();
    rep["elapsed_ms"] = static_cast<std::int64_t>(ms);
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

FormulaPtr conjoin(const std::vector<FormulaPtr>& fs) {
    if (fs.empty()) return mk_geq(mk_empty(), mk_empty());  // trivially true
    FormulaPtr acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = mk_and(acc, fs[i]);
    return acc;
}

int cmd_decide(const std::string& command, const std::string& file, const GlobalOpts& g,
               bool with_symbolic, std::ostream& out) {
    Problem p = load_problem(file, g.max_labels);
    Logic logic = resolve_logic(g, p);
    auto start = std::chrono::steady_clock::now();
    SatResult r;
    const char *verdict_sat = "sat", *verdict_unsat = "unsat";
    bool yes_exit_zero;
    if (command == "entail") {
        if (!p.goal) throw InputError("entail requires a 'goal:' line in the problem file");
        r = entails(p.assumptions, p.goal, logic, p.labels, make_limits(g));
        verdict_sat = "no";  // counterexample found
        verdict_unsat = "yes";
        yes_exit_zero = !r.sat;
    } else {
        r = sat(conjoin(p.assumptions), logic, p.labels, make_limits(g));
        yes_exit_zero = r.sat;
    }
    Json rep = decision_report(command, logic, g, p, r, verdict_sat, verdict_unsat, with_symbolic);
    stamp_timing(rep, g, start);
    emit(out, g, rep, [&](std::ostream& os) {
        render_decision_text(os, rep, r, with_symbolic);
        if (g.timing) os << "elapsed: " << rep["elapsed_ms"].get<std::int64_t>() << " ms\n";
    });
    return yes_exit_zero ? 0 : 1;
}

int cmd_schema(const std::string& kind, const std::vector<std::string>& s_texts,
               const std::vector<std::string>& t_texts, const std::string& e_text,
               const std::string& f_text, std::size_t l, std::optional<std::size_t> k,
               const std::string& tree_shape, const std::vector<std::string>& u_texts,
               const GlobalOpts& g, std::ostream& out) {
    std::vector<std::string> names;
    auto collect = [&](const std::string& t) {
        for (auto& id : collect_identifiers(t)) names.push_back(std::move(id));
    };
    for (const auto& t : s_texts) collect(t);
    for (const auto& t : t_texts) collect(t);
    collect(e_text);
    collect(f_text);
    for (const auto& t : u_texts) collect(t);
    LabelRegistry labels = LabelRegistry::from_names(std::move(names), g.max_labels);

    auto parse_all = [&](const std::vector<std::string>& texts) {
        std::vector<TermPtr> terms;
        for (const auto& t : texts) terms.push_back(parse_term(t, labels));
        return terms;
    };
    std::vector<TermPtr> s = parse_all(s_texts), t = parse_all(t_texts), u = parse_all(u_texts);
    if (e_text.empty() || f_text.empty())
        throw InputError("schema requires --e and --f terms");
    TermPtr e = parse_term(e_text, labels), f = parse_term(f_text, labels);
    if (k && *k != s.size())
        throw InputError("--k disagrees with the number of --s terms");

    FormulaPtr formula;
    if (kind == "fc") {
        formula = fc_schema(s, e, t, f);
    } else if (kind == "gfc") {
        formula = gfc_schema(s, e, t, f, l);
    } else {
        BinTree tree = BinTree::parse(tree_shape);
        formula = cgfc_schema(s, e, t, f, l, tree, u);
    }
    Json rep = Json::object();
    rep["command"] = "schema";
    rep["kind"] = kind;
    rep["engine"] = engine_json(g);
    rep["formula"] = pretty_print(formula);
    emit(out, g, rep, [&](std::ostream& os) { os << pretty_print(formula) << "\n"; });
    return 0;
}

int cmd_oracle(const std::string& file, std::size_t max_measures, std::uint64_t max_value,
               const GlobalOpts& g, std::ostream& out) {
    Problem p = load_problem(file, g.max_labels);
    Logic logic = resolve_logic(g, p);
    ModelKind kind = logic == Logic::Card ? ModelKind::Infinitary : ModelKind::Finitary;
    OracleBounds bounds;
    bounds.max_measures = max_measures;
    bounds.max_value = max_value;
    bounds.step_budget = g.step_budget;

    auto start = std::chrono::steady_clock::now();
    std::vector<std::vector<Literal>> branches = to_dnf(expand_abbreviations(conjoin(p.assumptions)));
    std::optional<MeasuresModel> found;
    std::size_t found_branch = 0;
    for (std::size_t i = 0; i < branches.size() && !found; ++i) {
        found = brute_force_sat(branches[i], p.labels, kind, bounds);
        if (found) found_branch = i;
    }
    Json rep = Json::object();
    rep["command"] = "oracle";
    rep["logic"] = logic_name(logic);
    rep["verdict"] = found ? "found" : "none";
    rep["engine"] = engine_json(g);
    rep["labels"] = p.labels.names();
    Json assumptions = Json::array();
    for (const auto& f : p.assumptions) assumptions.push_back(pretty_print(f));
    rep["assumptions"] = std::move(assumptions);
    if (found) {
        Json w = Json::object();
        w["model"] = model_to_json(*found);
        w["branch"] = found_branch;
        rep["witness"] = std::move(w);
    }
    stamp_timing(rep, g, start);
    emit(out, g, rep, [&](std::ostream& os) {
        os << "verdict: " << (found ? "found" : "none") << "\n";
        if (found) render_model(os, *found, nullptr);
    });
    return found ? 0 : 1;
}

// Rebuild the DNF branches a decision report refers to.
std::vector<Branch> rebuild_branches(const Problem& p, bool for_entail) {
    FormulaPtr formula;
    if (for_entail) {
        if (!p.goal) throw InputError("artifact claims an entailment but the problem has no goal");
        FormulaPtr acc = mk_not(p.goal);
        for (auto it = p.assumptions.rbegin(); it != p.assumptions.rend(); ++it)
            acc = mk_and(*it, acc);
        formula = acc;
    } else {
        formula = conjoin(p.assumptions);
    }
    std::vector<std::vector<Literal>> dnf = to_dnf(expand_abbreviations(formula));
    std::vector<Branch> out;
    out.reserve(dnf.size());
    for (const auto& lits : dnf) out.push_back(atomize_branch(lits, p.labels));
    return out;
}

int cmd_verify(const std::string& artifact_path, const std::string& problem_path,
               const GlobalOpts& g, std::ostream& out) {
    std::ifstream in(artifact_path);
    if (!in) throw InputError("cannot open artifact file '" + artifact_path + "'");
    Json art;
    try {
        art = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("artifact is not valid JSON: ") + e.what());
    }
    Problem p = load_problem(problem_path, g.max_labels);

    std::string failure;
    auto fail = [&](const std::string& why) {
        failure = why;
        return false;
    };

    auto check = [&]() -> bool {
        if (!art.is_object()) return fail("artifact is not an object");
        if (!art.contains("command") || !art["command"].is_string())
            return fail("artifact has no command");
        if (!art.contains("verdict") || !art["verdict"].is_string())
            return fail("artifact has no verdict");
        if (!art.contains("logic") || !art["logic"].is_string())
            return fail("artifact has no logic");
        std::string command = art["command"].get<std::string>();
        std::string verdict = art["verdict"].get<std::string>();
        Logic logic = logic_from_name(art["logic"].get<std::string>());
        bool for_entail = command == "entail";

        if (verdict == "sat" || verdict == "no" || verdict == "found") {
            if (!art.contains("witness") || !art["witness"].is_object() ||
                !art["witness"].contains("model"))
                return fail("positive verdict without a witness model");
            MeasuresModel m = model_from_json(art["witness"]["model"]);
            try {
                m.validate();
            } catch (const Error& e) {
                return fail(std::string("model is not well-formed: ") + e.what());
            }
            if (logic != Logic::Card && m.kind != ModelKind::Finitary)
                return fail("non-card witness must be finitary");
            if (!(m.labels == p.labels)) return fail("model labels differ from the problem's");
            for (std::size_t i = 0; i < p.assumptions.size(); ++i)
                if (!eval_formula(m, p.assumptions[i]))
                    return fail("model falsifies assumption " + std::to_string(i));
            if (for_entail && verdict == "no") {
                if (!p.goal) return fail("entail artifact but the problem has no goal");
                if (!eval_formula(m, mk_not(p.goal)))
                    return fail("countermodel satisfies the goal");
            }
            return true;
        }
        if (verdict == "unsat" || verdict == "yes") {
            std::vector<Branch> branches = rebuild_branches(p, for_entail);
            if (!art.contains("branches") || !art["branches"].is_array())
                return fail("refutation artifact without branches");
            const Json& jb = art["branches"];
            if (jb.size() != branches.size())
                return fail("artifact branch count differs from the problem's DNF");
            for (std::size_t i = 0; i < branches.size(); ++i) {
                const Json& entry = jb[i];
                if (!entry.is_object() || !entry.contains("certificates") ||
                    !entry["certificates"].is_array() || entry["certificates"].empty())
                    return fail("branch " + std::to_string(i) + " has no certificates");
                if (entry.contains("literals")) {
                    Json expect = branch_to_json(branches[i])["literals"];
                    if (entry["literals"] != expect)
                        return fail("branch " + std::to_string(i) +
                                    " literals differ from the problem's");
                }
                for (const auto& jc : entry["certificates"]) {
                    CancellationCertificate cert =
                        certificate_from_json(jc, branches[i].n_atoms());
                    if (cert.logic != logic)
                        return fail("certificate logic differs from the report's");
                    if (!verify_certificate(cert, branches[i]))
                        return fail("certificate for branch " + std::to_string(i) +
                                    " fails verification");
                }
            }
            return true;
        }
        return fail("verdict '" + verdict + "' is not verifiable");
    };

    bool ok;
    try {
        ok = check();
    } catch (const Error& e) {
        ok = false;
        failure = e.what();
    }
    Json rep = Json::object();
    rep["command"] = "verify";
    rep["verdict"] = ok ? "valid" : "invalid";
    if (!ok) rep["detail"] = failure;
    emit(out, g, rep, [&](std::ostream& os) {
        os << (ok ? "valid" : "invalid: " + failure) << "\n";
    });
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"decision procedures for cardinality comparison without choice"};
    app.require_subcommand(1);
    GlobalOpts g;

    auto* logic_opt =
        app.add_option("--logic", g.logic, "logic: fin, ded, or card (default card)")
            ->check(CLI::IsMember({"fin", "ded", "card"}));
    app.add_option("--format", g.format, "output format: text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "seed recorded in report metadata");
    app.add_option("--step-budget", g.step_budget, "work budget for searches");
    app.add_option("--max-labels", g.max_labels, "label cap (default 16)");
    app.add_flag("--timing", g.timing, "include elapsed time in reports");

    std::string file, artifact, problem;
    bool zf = false;
    auto* sat_cmd = app.add_subcommand("sat", "decide satisfiability of the assumptions");
    sat_cmd->add_option("file", file, "problem file")->required();
    sat_cmd->fallthrough();
    auto* entail_cmd = app.add_subcommand("entail", "decide whether the assumptions entail the goal");
    entail_cmd->add_option("file", file, "problem file with a goal")->required();
    entail_cmd->fallthrough();
    auto* model_cmd = app.add_subcommand("model", "emit a witness model for a satisfiable problem");
    model_cmd->add_option("file", file, "problem file")->required();
    model_cmd->add_flag("--zf", zf, "also emit the symbolic permutation-model witness");
    model_cmd->fallthrough();
    auto* verify_cmd = app.add_subcommand("verify", "check an emitted artifact against its problem");
    verify_cmd->add_option("artifact", artifact, "report JSON emitted by sat/entail/model/oracle")
        ->required();
    verify_cmd->add_option("problem", problem, "problem file the artifact was produced from")
        ->required();
    verify_cmd->fallthrough();

    std::string kind, e_text, f_text, tree_shape = ".";
    std::vector<std::string> s_texts, t_texts, u_texts;
    std::size_t l = 1;
    std::optional<std::size_t> k_opt;
    std::size_t k_val = 0;
    auto* schema_cmd = app.add_subcommand("schema", "print a cancellation schema instance");
    schema_cmd->add_option("kind", kind, "fc, gfc, or cgfc")
        ->required()
        ->check(CLI::IsMember({"fc", "gfc", "cgfc"}));
    schema_cmd->add_option("--s", s_texts, "premise left-hand terms (repeatable)");
    schema_cmd->add_option("--t", t_texts, "premise right-hand terms (repeatable)");
    schema_cmd->add_option("--e", e_text, "conclusion left term");
    schema_cmd->add_option("--f", f_text, "conclusion right term");
    schema_cmd->add_option("--l", l, "conclusion multiplicity (default 1)");
    auto* k_flag = schema_cmd->add_option("--k", k_val, "premise count (checked against --s)");
    schema_cmd->add_option("--tree", tree_shape, "cgfc cover tree shape, e.g. (.(..))");
    schema_cmd->add_option("--u", u_texts, "cgfc cover terms, one per tree node in preorder");
    schema_cmd->fallthrough();

    std::size_t max_measures = 3;
    std::uint64_t max_value = 4;
    auto* oracle_cmd = app.add_subcommand("oracle", "bounded brute-force model search");
    oracle_cmd->add_option("file", file, "problem file")->required();
    oracle_cmd->add_option("--max-measures", max_measures, "measure-count bound (default 3)");
    oracle_cmd->add_option("--max-value", max_value, "atom-value bound (default 4)");
    oracle_cmd->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("cardcomp");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    g.logic_given = logic_opt->count() > 0;
    if (k_flag->count() > 0) k_opt = k_val;

    try {
        if (app.got_subcommand(sat_cmd)) return cmd_decide("sat", file, g, false, out);
        if (app.got_subcommand(entail_cmd)) return cmd_decide("entail", file, g, false, out);
        if (app.got_subcommand(model_cmd)) return cmd_decide("model", file, g, zf, out);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(artifact, problem, g, out);
        if (app.got_subcommand(schema_cmd))
            return cmd_schema(kind, s_texts, t_texts, e_text, f_text, l, k_opt, tree_shape, u_texts,
                              g, out);
        if (app.got_subcommand(oracle_cmd))
            return cmd_oracle(file, max_measures, max_value, g, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const LimitExceeded& e) {
        err << "limit: " << e.what() << "\n";
        return 3;
    } catch (const BoundsTooLarge& e) {
        err << "limit: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cardcomp
