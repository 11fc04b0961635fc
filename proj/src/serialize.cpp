// JSON encoding/decoding for models, certificates, and witness bundles.
#include "cardcomp/serialize.hpp"

#include <cctype>

namespace cardcomp {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object()) throw InputError(std::string("expected an object with field '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
    return *it;
}

std::size_t read_index(const Json& v, const char* what) {
    if (!v.is_number_unsigned()) throw InputError(std::string(what) + " must be a nonnegative integer");
    return v.get<std::size_t>();
}

BigInt read_bigint(const Json& v, const char* what) {
    if (!v.is_string()) throw InputError(std::string(what) + " must be a decimal string");
    const std::string& s = v.get_ref<const std::string&>();
    if (s.empty()) throw InputError(std::string(what) + " is empty");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InputError(std::string(what) + " must be decimal digits, got '" + s + "'");
    return BigInt(s);
}

Json atoms_to_json(const AtomSet& s) {
    Json a = Json::array();
    for (std::size_t i : s.to_indices()) a.push_back(i);
    return a;
}

AtomSet atoms_from_json(const Json& v, std::size_t n_atoms, const char* what) {
    if (!v.is_array()) throw InputError(std::string(what) + " must be an array of atom indices");
    AtomSet s(n_atoms);
    for (const auto& e : v) {
        std::size_t i = read_index(e, what);
        if (i >= n_atoms) throw InputError(std::string(what) + " has an atom index out of range");
        s.set(i);
    }
    return s;
}

}  // namespace

Json model_to_json(const MeasuresModel& m) {
    Json j = Json::object();
    j["kind"] = m.kind == ModelKind::Finitary ? "finitary" : "infinitary";
    Json labels = Json::array();
    for (std::size_t i = 0; i < m.labels.size(); ++i) labels.push_back(m.labels.name(i));
    j["labels"] = std::move(labels);
    j["atoms"] = m.n_atoms();
    Json val = Json::object();
    for (std::size_t i = 0; i < m.labels.size(); ++i)
        val[m.labels.name(i)] = atoms_to_json(m.valuation[i]);
    j["valuation"] = std::move(val);
    Json measures = Json::array();
    for (const auto& mu : m.measures) {
        Json row = Json::array();
        for (const auto& v : mu.atom_values) row.push_back(v.to_string());
        measures.push_back(std::move(row));
    }
    j["measures"] = std::move(measures);
    return j;
}

MeasuresModel model_from_json(const Json& j) {
    MeasuresModel m;
    {
        const Json& kind = require(j, "kind");
        if (!kind.is_string()) throw InputError("kind must be a string");
        const std::string& k = kind.get_ref<const std::string&>();
        if (k == "finitary") m.kind = ModelKind::Finitary;
        else if (k == "infinitary") m.kind = ModelKind::Infinitary;
        else throw InputError("kind must be 'finitary' or 'infinitary'");
    }
    {
        const Json& labels = require(j, "labels");
        if (!labels.is_array()) throw InputError("labels must be an array");
        std::vector<std::string> names;
        for (const auto& l : labels) {
            if (!l.is_string()) throw InputError("labels must be strings");
            names.push_back(l.get<std::string>());
        }
        m.labels = LabelRegistry::from_names(names, kMaxLabels);
        if (m.labels.size() != names.size()) throw InputError("duplicate labels");
    }
    std::size_t n = m.n_atoms();
    if (read_index(require(j, "atoms"), "atoms") != n)
        throw InputError("atoms must equal 2^labels");
    {
        const Json& val = require(j, "valuation");
        for (std::size_t i = 0; i < m.labels.size(); ++i)
            m.valuation.push_back(atoms_from_json(require(val, m.labels.name(i).c_str()), n,
                                                  "valuation entry"));
    }
    {
        const Json& measures = require(j, "measures");
        if (!measures.is_array()) throw InputError("measures must be an array");
        for (const auto& row : measures) {
            if (!row.is_array() || row.size() != n)
                throw InputError("each measure must list one value per atom");
            Measure mu(n);
            for (std::size_t a = 0; a < n; ++a) {
                const Json& v = row[a];
                if (v.is_string() && v.get_ref<const std::string&>() == "inf")
                    mu.atom_values[a] = ExtNat::inf();
                else
                    mu.atom_values[a] = ExtNat::of(read_bigint(v, "measure value"));
            }
            m.measures.push_back(std::move(mu));
        }
    }
    return m;
}

Json certificate_to_json(const CancellationCertificate& c) {
    Json j = Json::object();
    j["logic"] = logic_name(c.logic);
    Json concl = Json::object();
    concl["e"] = atoms_to_json(c.conclusion_e);
    concl["f"] = atoms_to_json(c.conclusion_f);
    j["conclusion"] = std::move(concl);
    j["scale"] = c.scale.str();
    Json pos = Json::array(), atom = Json::array(), rev = Json::array();
    for (const auto& use : c.premises) {
        Json u = Json::object();
        switch (use.kind) {
            case PremiseKind::PositiveLiteral:
                u["index"] = use.index;
                u["multiplicity"] = use.multiplicity.str();
                pos.push_back(std::move(u));
                break;
            case PremiseKind::AtomPositivity:
                u["atom"] = use.index;
                u["multiplicity"] = use.multiplicity.str();
                atom.push_back(std::move(u));
                break;
            case PremiseKind::ReversedNegative:
                u["index"] = use.index;
                u["multiplicity"] = use.multiplicity.str();
                rev.push_back(std::move(u));
                break;
        }
    }
    j["premises"] = std::move(pos);
    j["atoms"] = std::move(atom);
    j["reversed"] = std::move(rev);
    Json cov = Json::array();
    if (!c.coverage.empty()) {
        Json chain = Json::array();
        for (std::size_t s : c.coverage) chain.push_back(s);
        cov.push_back(std::move(chain));
    }
    j["coverage"] = std::move(cov);
    j["refutes"] = c.refutes ? Json(*c.refutes) : Json(nullptr);
    return j;
}

CancellationCertificate certificate_from_json(const Json& j, std::size_t n_atoms) {
    CancellationCertificate c;
    {
        const Json& l = require(j, "logic");
        if (!l.is_string()) throw InputError("certificate logic must be a string");
        c.logic = logic_from_name(l.get<std::string>());
    }
    const Json& concl = require(j, "conclusion");
    c.conclusion_e = atoms_from_json(require(concl, "e"), n_atoms, "conclusion e");
    c.conclusion_f = atoms_from_json(require(concl, "f"), n_atoms, "conclusion f");
    c.scale = read_bigint(require(j, "scale"), "scale");
    auto read_uses = [&](const Json& arr, PremiseKind kind, const char* idx_key) {
        if (!arr.is_array()) throw InputError("certificate premise lists must be arrays");
        for (const auto& u : arr) {
            PremiseUse use;
            use.kind = kind;
            use.index = read_index(require(u, idx_key), idx_key);
            use.multiplicity = read_bigint(require(u, "multiplicity"), "multiplicity");
            c.premises.push_back(std::move(use));
        }
    };
    read_uses(require(j, "premises"), PremiseKind::PositiveLiteral, "index");
    read_uses(require(j, "reversed"), PremiseKind::ReversedNegative, "index");
    read_uses(require(j, "atoms"), PremiseKind::AtomPositivity, "atom");
    {
        const Json& cov = require(j, "coverage");
        if (!cov.is_array()) throw InputError("coverage must be an array of chains");
        for (const auto& chain : cov) {
            if (!chain.is_array()) throw InputError("coverage chains must be arrays");
            for (const auto& s : chain) c.coverage.push_back(read_index(s, "coverage step"));
        }
    }
    {
        const Json& r = require(j, "refutes");
        if (r.is_null()) c.refutes = std::nullopt;
        else c.refutes = read_index(r, "refutes");
    }
    return c;
}

Json witness_to_json(const WitnessBundle& w) {
    Json j = Json::object();
    j["model"] = model_to_json(w.model);
    Json ann = Json::array();
    for (const auto& a : w.annotations) {
        Json e = Json::object();
        e["negative"] = a.negative_index;
        e["measure"] = a.measure_index;
        e["rho"] = a.rho_type;
        ann.push_back(std::move(e));
    }
    j["annotations"] = std::move(ann);
    j["admissibility_measure"] = w.admissibility_measure;
    return j;
}

WitnessBundle witness_from_json(const Json& j) {
    WitnessBundle w;
    w.model = model_from_json(require(j, "model"));
    const Json& ann = require(j, "annotations");
    if (!ann.is_array()) throw InputError("annotations must be an array");
    for (const auto& e : ann) {
        WitnessAnnotation a{};
        a.negative_index = read_index(require(e, "negative"), "annotation negative");
        a.measure_index = read_index(require(e, "measure"), "annotation measure");
        const Json& rho = require(e, "rho");
        if (!rho.is_boolean()) throw InputError("annotation rho must be a boolean");
        a.rho_type = rho.get<bool>();
        w.annotations.push_back(a);
    }
    w.admissibility_measure = read_index(require(j, "admissibility_measure"), "admissibility_measure");
    return w;
}

Json branch_to_json(const Branch& b) {
    Json j = Json::object();
    Json lits = Json::array();
    for (const auto& lit : b.literals) lits.push_back(pretty_print(lit.source));
    j["literals"] = std::move(lits);
    return j;
}

Json symbolic_witness_to_json(const SymbolicZfWitness& w) {
    Json j = Json::object();
    j["families"] = w.family_names;
    Json sets = Json::object();
    for (const auto& [label, expr] : w.label_sets) sets[label] = expr;
    j["label_sets"] = std::move(sets);
    j["comparison_rule"] = w.comparison_rule;
    j["text"] = w.text;
    return j;
}

}  // namespace cardcomp
