// End-to-end tests of the command-line tool (exit codes, report shapes,
// artifact round trips) and of the JSON artifact layer itself.
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "cardcomp/algebra.hpp"
#include "cardcomp/basics.hpp"
#include "cardcomp/decide.hpp"
#include "cardcomp/semantics.hpp"
#include "cardcomp/serialize.hpp"
#include "cardcomp/syntax.hpp"

using namespace cardcomp;

namespace {

struct CliResult {
    int exit_code;
    std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(CARDCOMP_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

// Problem files live in a per-run scratch directory.
std::filesystem::path scratch() {
    static std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / "cardcomp_cli_tests";
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    auto path = scratch() / name;
    std::ofstream out(path);
    out << content;
    out.close();
    return path.string();
}

std::string incomparable_file() {
    return write_file("incomparable.txt",
                      "labels: a b\n"
                      "assume: !(|a| >= |b|)\n"
                      "assume: !(|b| >= |a|)\n");
}

std::string subtraction_file() {
    return write_file("subtraction.txt",
                      "labels: x y z\n"
                      "assume: x & z = 0\n"
                      "assume: y & z = 0\n"
                      "assume: |z| <= |y|\n"
                      "assume: |x + z| <= |y + z|\n"
                      "goal: |x| <= |y|\n");
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: satisfiability verdicts and exit codes per logic") {
    std::string file = incomparable_file();

    CliResult fin = run_cli("sat " + file + " --logic fin");
    CHECK(fin.exit_code == 1);
    CHECK(contains(fin.output, "verdict: unsat"));
    CHECK(contains(fin.output, "logic: fin"));

    CliResult ded = run_cli("sat " + file + " --logic ded");
    CHECK(ded.exit_code == 0);
    CHECK(contains(ded.output, "verdict: sat"));

    CliResult card = run_cli("sat " + file + " --logic card");
    CHECK(card.exit_code == 0);
    CHECK(contains(card.output, "verdict: sat"));
}

TEST_CASE("cli: the problem file picks the logic, the flag overrides it") {
    std::string file = write_file("logic_directive.txt",
                                  "logic: ded\n"
                                  "labels: a b\n"
                                  "assume: !(|a| >= |b|)\n"
                                  "assume: !(|b| >= |a|)\n");
    CHECK(run_cli("sat " + file).exit_code == 0);             // ded from the file
    CHECK(run_cli("sat " + file + " --logic fin").exit_code == 1);
}

TEST_CASE("cli: entailment verdicts") {
    std::string file = subtraction_file();
    for (const char* logic : {"fin", "ded", "card"}) {
        CliResult r = run_cli("entail " + file + " --logic " + logic);
        CHECK(r.exit_code == 0);
        CHECK(contains(r.output, "verdict: yes"));
    }

    // dropping the covering premise breaks the entailment outside fin
    std::string uncovered = write_file("uncovered.txt",
                                       "labels: x y z\n"
                                       "assume: x & z = 0\n"
                                       "assume: y & z = 0\n"
                                       "assume: |x + z| <= |y + z|\n"
                                       "goal: |x| <= |y|\n");
    CliResult no = run_cli("entail " + uncovered + " --logic card");
    CHECK(no.exit_code == 1);
    CHECK(contains(no.output, "verdict: no"));
    CHECK(run_cli("entail " + uncovered + " --logic fin").exit_code == 0);
}

TEST_CASE("cli: json reports carry the full decision record") {
    std::string file = incomparable_file();
    CliResult r = run_cli("sat " + file + " --logic fin --format json --seed 7");
    CHECK(r.exit_code == 1);
    Json rep = Json::parse(r.output);
    CHECK(rep["command"] == "sat");
    CHECK(rep["logic"] == "fin");
    CHECK(rep["verdict"] == "unsat");
    CHECK(rep["engine"]["solver"] == "exact-rational-simplex+farkas");
    CHECK(rep["engine"]["seed"] == 7);
    CHECK(rep["labels"] == Json::array({"a", "b"}));
    REQUIRE(rep["assumptions"].size() == 2);
    CHECK(rep["assumptions"][0] == "!|a| >= |b|");
    REQUIRE(rep["branches"].size() == 1);
    const Json& b = rep["branches"][0];
    CHECK(b["status"] == "refuted");
    CHECK(b["literals"] == Json::array({"!|a| >= |b|", "!|b| >= |a|"}));
    REQUIRE(b["certificates"].size() == 1);
    const Json& c = b["certificates"][0];
    CHECK(c["logic"] == "fin");
    CHECK(c["scale"] == "1");
    CHECK(c["refutes"] == 0);
    CHECK(c["conclusion"]["e"] == Json::array({2, 3}));
    CHECK(c["conclusion"]["f"] == Json::array({1, 3}));
    CHECK(c["premises"].empty());
    CHECK(c["atoms"].empty());
    REQUIRE(c["reversed"].size() == 1);
    CHECK(c["reversed"][0]["index"] == 1);
    CHECK(c["reversed"][0]["multiplicity"] == "1");
    CHECK(c["coverage"].empty());
    CHECK_FALSE(rep.contains("witness"));

    CliResult sat_r = run_cli("sat " + file + " --logic ded --format json");
    Json sat_rep = Json::parse(sat_r.output);
    CHECK(sat_rep["verdict"] == "sat");
    REQUIRE(sat_rep.contains("witness"));
    CHECK(sat_rep["witness"]["branch"] == 0);
    CHECK(sat_rep["witness"]["model"]["kind"] == "finitary");
    REQUIRE(sat_rep["witness"]["annotations"].size() == 2);
    CHECK(sat_rep["witness"]["annotations"][0]["negative"] == 0);
    CHECK(sat_rep["witness"]["annotations"][0]["rho"] == false);
    CHECK(sat_rep["branches"][0]["status"] == "satisfied");
}

TEST_CASE("cli: emitted artifacts verify against their problem") {
    std::string file = incomparable_file();

    SUBCASE("refutation artifact") {
        CliResult r = run_cli("sat " + file + " --logic fin --format json");
        std::string artifact = write_file("fin_unsat.json", r.output);
        CliResult v = run_cli("verify " + artifact + " " + file);
        CHECK(v.exit_code == 0);
        CHECK(contains(v.output, "valid"));

        // tampering with the certificate is caught
        Json rep = Json::parse(r.output);
        rep["branches"][0]["certificates"][0]["scale"] = "0";
        std::string bad = write_file("fin_unsat_tampered.json", rep.dump(2));
        CliResult bv = run_cli("verify " + bad + " " + file);
        CHECK(bv.exit_code == 1);
        CHECK(contains(bv.output, "invalid: certificate for branch 0 fails verification"));

        // json format carries the failure detail
        CliResult bj = run_cli("verify " + bad + " " + file + " --format json");
        Json brep = Json::parse(bj.output);
        CHECK(brep["command"] == "verify");
        CHECK(brep["verdict"] == "invalid");
        CHECK(contains(brep["detail"].get<std::string>(), "fails verification"));
    }

    SUBCASE("witness artifact") {
        CliResult r = run_cli("sat " + file + " --logic ded --format json");
        std::string artifact = write_file("ded_sat.json", r.output);
        CHECK(run_cli("verify " + artifact + " " + file).exit_code == 0);

        // zeroing the measures leaves no admissible measure in the model
        Json rep = Json::parse(r.output);
        for (auto& row : rep["witness"]["model"]["measures"])
            for (auto& v : row) v = "0";
        std::string bad = write_file("ded_sat_tampered.json", rep.dump(2));
        CliResult bv = run_cli("verify " + bad + " " + file);
        CHECK(bv.exit_code == 1);
        CHECK(contains(bv.output, "invalid: model is not well-formed"));

        // a model that is well-formed but falsifies an assumption
        Json rep2 = Json::parse(r.output);
        rep2["witness"]["model"]["measures"] = Json::array({Json::array({"0", "1", "1", "0"})});
        std::string bad2 = write_file("ded_sat_tampered2.json", rep2.dump(2));
        CliResult bv2 = run_cli("verify " + bad2 + " " + file);
        CHECK(bv2.exit_code == 1);
        CHECK(contains(bv2.output, "invalid: model falsifies assumption 0"));
    }

    SUBCASE("entailment and oracle artifacts") {
        std::string sub = subtraction_file();
        CliResult yes = run_cli("entail " + sub + " --logic card --format json");
        std::string artifact = write_file("sub_yes.json", yes.output);
        CHECK(run_cli("verify " + artifact + " " + sub).exit_code == 0);

        CliResult found = run_cli("oracle " + file + " --logic ded --format json");
        CHECK(found.exit_code == 0);
        std::string oracle_art = write_file("oracle_found.json", found.output);
        CHECK(run_cli("verify " + oracle_art + " " + file).exit_code == 0);
    }

    SUBCASE("malformed artifacts are input errors, not crashes") {
        std::string garbled = write_file("garbled.json", "{ not json");
        CliResult r = run_cli("verify " + garbled + " " + file);
        CHECK(r.exit_code == 2);
        CHECK(contains(r.output, "error:"));
        CHECK(contains(r.output, "not valid JSON"));

        std::string hollow = write_file("hollow.json", "{\"command\": \"sat\"}");
        CliResult h = run_cli("verify " + hollow + " " + file);
        CHECK(h.exit_code == 1);
        CHECK(contains(h.output, "invalid: artifact has no verdict"));
    }
}

TEST_CASE("cli: model command emits a checkable witness") {
    std::string file = incomparable_file();
    CliResult r = run_cli("model " + file + " --logic card --format json");
    CHECK(r.exit_code == 0);
    Json rep = Json::parse(r.output);
    CHECK(rep["command"] == "model");
    REQUIRE(rep.contains("witness"));
    MeasuresModel m = model_from_json(rep["witness"]["model"]);
    CHECK_NOTHROW(m.validate());
    CHECK(m.kind == ModelKind::Infinitary);

    // the artifact itself passes verification
    std::string artifact = write_file("card_model.json", r.output);
    CHECK(run_cli("verify " + artifact + " " + file).exit_code == 0);

    // --zf adds the symbolic permutation-model section
    CliResult zf = run_cli("model " + file + " --logic card --format json --zf");
    Json zrep = Json::parse(zf.output);
    REQUIRE(zrep["witness"].contains("symbolic"));
    const Json& sym = zrep["witness"]["symbolic"];
    CHECK(sym.contains("families"));
    CHECK(sym.contains("label_sets"));
    CHECK(sym.contains("comparison_rule"));
    CHECK(contains(sym["text"].get<std::string>(), "amorphous"));

    CliResult text = run_cli("model " + file + " --logic card --zf");
    CHECK(contains(text.output, "amorphous"));

    // model on an unsatisfiable problem reports unsat and exits 1
    std::string allfalse = write_file("allfalse.txt", "assume: |0'| <= |0|\n");
    CliResult u = run_cli("model " + allfalse + " --logic card");
    CHECK(u.exit_code == 1);
    CHECK(contains(u.output, "verdict: unsat"));
}

TEST_CASE("cli: oracle searches bounded models") {
    std::string file = incomparable_file();
    CliResult r = run_cli("oracle " + file + " --logic ded --format json");
    CHECK(r.exit_code == 0);
    Json rep = Json::parse(r.output);
    CHECK(rep["command"] == "oracle");
    CHECK(rep["verdict"] == "found");
    CHECK(rep["witness"]["branch"] == 0);
    // the enumeration order makes the first model canonical
    CHECK(rep["witness"]["model"]["measures"] ==
          Json::array({Json::array({"0", "0", "1", "0"}), Json::array({"0", "1", "0", "0"})}));

    // a single finite measure cannot satisfy incomparability
    CliResult none = run_cli("oracle " + file + " --logic fin --max-measures 1");
    CHECK(none.exit_code == 1);
    CHECK(contains(none.output, "verdict: none"));

    // blown step budget is reported as a limit, not an error
    std::string wide = write_file("wide.txt",
                                  "labels: a b c\n"
                                  "assume: !(|a| >= |b|)\n");
    CliResult budget = run_cli("oracle " + wide + " --logic ded --max-value 9 --step-budget 10");
    CHECK(budget.exit_code == 3);
    CHECK(contains(budget.output, "limit:"));
}

TEST_CASE("cli: schema instances print as parseable formulas") {
    CliResult fc = run_cli("schema fc --s a --e b --t 'a + b' --f 'a & b'");
    CHECK(fc.exit_code == 0);
    LabelRegistry l = LabelRegistry::from_names({"a", "b"});
    std::string line = fc.output.substr(0, fc.output.find('\n'));
    FormulaPtr parsed = parse_formula(line, l);
    CHECK(parsed->kind == FormulaKind::Implies);
    CHECK(pretty_print(parsed) == line);

    CliResult gfc = run_cli("schema gfc --s a1 --s a2 --t b1 --t b2 --e e --f f --l 2 --k 2 "
                            "--format json");
    CHECK(gfc.exit_code == 0);
    Json grep_ = Json::parse(gfc.output);
    CHECK(grep_["command"] == "schema");
    CHECK(grep_["kind"] == "gfc");
    LabelRegistry gl = LabelRegistry::from_names({"a1", "a2", "b1", "b2", "e", "f"});
    CHECK_NOTHROW(parse_formula(grep_["formula"].get<std::string>(), gl));

    CliResult cg = run_cli("schema cgfc --s a --t b --e a --f b --tree '(..)' "
                           "--u 'a + b' --u a --u b");
    CHECK(cg.exit_code == 0);
    CHECK_NOTHROW(parse_formula(cg.output.substr(0, cg.output.find('\n')), l));

    CliResult bad_k = run_cli("schema gfc --s a --t b --e a --f b --k 2");
    CHECK(bad_k.exit_code == 2);
    CHECK(contains(bad_k.output, "error: --k disagrees with the number of --s terms"));

    CliResult no_e = run_cli("schema fc --s a --t b --f b");
    CHECK(no_e.exit_code == 2);
    CHECK(contains(no_e.output, "error: schema requires --e and --f terms"));

    CliResult bad_tree = run_cli("schema cgfc --s a --t b --e a --f b --tree '(..)' --u a");
    CHECK(bad_tree.exit_code == 2);
    CHECK(contains(bad_tree.output, "error: cover terms must match tree nodes one to one"));
}

TEST_CASE("cli: malformed input is diagnosed with its location") {
    std::string bad = write_file("bad_directive.txt",
                                 "labels: a\n"
                                 "frobnicate: a\n");
    CliResult r = run_cli("sat " + bad);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "error:"));
    CHECK(contains(r.output, bad + ":2: unknown directive 'frobnicate'"));

    std::string two_goals = write_file("two_goals.txt",
                                       "assume: |a| >= |b|\n"
                                       "goal: |a| >= |b|\n"
                                       "goal: |b| >= |a|\n");
    CliResult g = run_cli("entail " + two_goals);
    CHECK(g.exit_code == 2);
    CHECK(contains(g.output, two_goals + ":3: multiple goals"));

    std::string no_goal = write_file("no_goal.txt", "assume: |a| >= |b|\n");
    CliResult ng = run_cli("entail " + no_goal);
    CHECK(ng.exit_code == 2);
    CHECK(contains(ng.output, "error: entail requires a 'goal:' line in the problem file"));

    CliResult missing = run_cli("sat " + (scratch() / "does_not_exist.txt").string());
    CHECK(missing.exit_code == 2);
    CHECK(contains(missing.output, "cannot open problem file"));

    std::string bad_formula = write_file("bad_formula.txt", "assume: |a| >=\n");
    CliResult bf = run_cli("sat " + bad_formula);
    CHECK(bf.exit_code == 2);
    CHECK(contains(bf.output, "error:"));
}

TEST_CASE("cli: limit violations use their own exit code") {
    std::string file = write_file("three_labels.txt",
                                  "labels: a b c\n"
                                  "assume: |a| >= |b|\n");
    CliResult r = run_cli("sat " + file + " --max-labels 2");
    CHECK(r.exit_code == 3);
    CHECK(contains(r.output, "limit:"));
}

TEST_CASE("cli: reports are byte-identical across runs") {
    std::string file = incomparable_file();
    for (std::string cmd : {"sat " + file + " --logic ded --format json --seed 11",
                            "sat " + file + " --logic card --format json",
                            "entail " + subtraction_file() + " --logic fin --format json",
                            "oracle " + file + " --logic ded --format json",
                            "model " + file + " --logic card --format json --zf"}) {
        CliResult a = run_cli(cmd);
        CliResult b = run_cli(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("cli: --timing stamps the report") {
    std::string file = incomparable_file();
    CliResult text = run_cli("sat " + file + " --logic fin --timing");
    CHECK(contains(text.output, "elapsed:"));
    CliResult json = run_cli("sat " + file + " --logic fin --format json --timing");
    CHECK(Json::parse(json.output).contains("elapsed_ms"));
    CliResult plain = run_cli("sat " + file + " --logic fin --format json");
    CHECK_FALSE(Json::parse(plain.output).contains("elapsed_ms"));
}

// ---------------------------------------------------------------------------
// Artifact layer (direct, in-process)
// ---------------------------------------------------------------------------

namespace {

Branch incomparable_branch(const LabelRegistry& l) {
    TermPtr a = mk_label("a"), b = mk_label("b");
    return atomize_branch({{false, a, b}, {false, b, a}}, l);
}

}  // namespace

TEST_CASE("artifacts: certificates survive the json round trip") {
    LabelRegistry l = LabelRegistry::from_names({"a", "b"});
    Branch b = incomparable_branch(l);
    BranchOutcome fin = sat_branch(b, Logic::Fin);
    REQUIRE(fin.certificates.size() == 1);
    const CancellationCertificate& c = fin.certificates[0];

    Json j = certificate_to_json(c);
    CancellationCertificate back = certificate_from_json(j, b.n_atoms());
    CHECK(verify_certificate(back, b));
    CHECK(certificate_to_json(back).dump() == j.dump());

    CHECK(j["scale"].is_string());
    CHECK(j["refutes"] == 0);
    CHECK(j["coverage"] == Json::array());

    // a cert with a coverage chain keeps it (as one chain)
    LabelRegistry l1 = LabelRegistry::from_names({"a"});
    Branch adm = atomize_branch({{true, mk_empty(), mk_full()}}, l1);
    BranchOutcome card = sat_branch(adm, Logic::Card);
    REQUIRE(card.certificates.size() == 1);
    Json jc = certificate_to_json(card.certificates[0]);
    CHECK(jc["refutes"].is_null());
    CHECK(jc["coverage"] == Json::array({Json::array({0})}));
    CancellationCertificate cback = certificate_from_json(jc, adm.n_atoms());
    CHECK(cback.coverage == std::vector<std::size_t>{0});
    CHECK_FALSE(cback.refutes.has_value());
    CHECK(verify_certificate(cback, adm));
}

TEST_CASE("artifacts: certificate decoding rejects malformed input") {
    LabelRegistry l = LabelRegistry::from_names({"a", "b"});
    Branch b = incomparable_branch(l);
    Json good = certificate_to_json(sat_branch(b, Logic::Fin).certificates[0]);

    Json j = good;
    j.erase("scale");
    CHECK_THROWS_AS(certificate_from_json(j, 4), InputError);

    j = good;
    j["scale"] = "2x";
    CHECK_THROWS_AS(certificate_from_json(j, 4), InputError);

    j = good;
    j["scale"] = 1;  // integers must be decimal strings
    CHECK_THROWS_AS(certificate_from_json(j, 4), InputError);

    j = good;
    j["conclusion"]["e"] = Json::array({9});
    CHECK_THROWS_AS(certificate_from_json(j, 4), InputError);

    j = good;
    j["reversed"][0]["multiplicity"] = "-1";
    CHECK_THROWS_AS(certificate_from_json(j, 4), InputError);

    j = good;
    j["coverage"] = Json::array({0});  // chains must be arrays
    CHECK_THROWS_AS(certificate_from_json(j, 4), InputError);
}

TEST_CASE("artifacts: models with infinite entries round-trip") {
    LabelRegistry l = LabelRegistry::from_names({"a", "b"});
    Branch b = incomparable_branch(l);
    BranchOutcome card = sat_branch(b, Logic::Card);
    REQUIRE(card.sat);
    const MeasuresModel& m = card.witness->model;

    Json j = model_to_json(m);
    CHECK(j["kind"] == "infinitary");
    CHECK(j["atoms"] == 4);
    CHECK(j["valuation"]["a"] == Json::array({1, 3}));
    CHECK(j["measures"][0][0] == "inf");

    MeasuresModel back = model_from_json(j);
    CHECK_NOTHROW(back.validate());
    CHECK(model_to_json(back).dump() == j.dump());
    CHECK(branch_satisfied(back, b));

    Json bad = j;
    bad["atoms"] = 8;
    CHECK_THROWS_AS(model_from_json(bad), InputError);

    bad = j;
    bad["measures"][0] = Json::array({"1", "2"});
    CHECK_THROWS_AS(model_from_json(bad), InputError);

    bad = j;
    bad["labels"] = Json::array({"a", "a"});
    CHECK_THROWS_AS(model_from_json(bad), InputError);
}

TEST_CASE("artifacts: witness bundles and branches serialize faithfully") {
    LabelRegistry l = LabelRegistry::from_names({"a", "b"});
    Branch b = incomparable_branch(l);
    BranchOutcome ded = sat_branch(b, Logic::Ded);
    REQUIRE(ded.sat);

    Json j = witness_to_json(*ded.witness);
    CHECK(j["annotations"][0]["negative"] == 0);
    CHECK(j["annotations"][0]["measure"] == 0);
    CHECK(j["annotations"][0]["rho"] == false);
    CHECK(j["admissibility_measure"] == 2);
    WitnessBundle back = witness_from_json(j);
    CHECK(witness_to_json(back).dump() == j.dump());
    CHECK(branch_satisfied(back.model, b));

    Json jb = branch_to_json(b);
    CHECK(jb["literals"] == Json::array({"!|a| >= |b|", "!|b| >= |a|"}));

    SymbolicZfWitness w = symbolic_zf_witness(sat_branch(b, Logic::Card).witness->model);
    Json js = symbolic_witness_to_json(w);
    CHECK(js.contains("families"));
    CHECK(js.contains("label_sets"));
    CHECK(js.contains("comparison_rule"));
    CHECK(js["text"] == w.text);
}
