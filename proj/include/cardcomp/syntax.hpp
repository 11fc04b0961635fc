// Terms and formulas of the cardinality-comparison language: ASTs, parser,
// pretty-printer, abbreviation expansion, DNF, and the cancellation-schema
// generators (FC / GFC / CGFC instances).
#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cardcomp/basics.hpp"

namespace cardcomp {

// Hard cap on distinct labels: the atom universe is 2^n, and 2^16 is the
// largest universe the bit-vector layers are designed for.
inline constexpr std::size_t kMaxLabels = 16;

// Sorted, duplicate-free list of label names; index = position.
class LabelRegistry {
  public:
    LabelRegistry() = default;
    // Sorts, dedups, validates shape ([a-zA-Z][a-zA-Z0-9_]*, not 'sub'),
    // enforces the label cap.
    static LabelRegistry from_names(std::vector<std::string> names,
                                    std::size_t max_labels = kMaxLabels);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    // Index of a label, or npos if absent.
    std::size_t index_of(const std::string& name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool operator==(const LabelRegistry&) const = default;

  private:
    std::vector<std::string> names_;
};

// ---------------------------------------------------------------------------
// Set terms:  t ::= label | 0 | 1 | t' | t & t | t + t
// Core forms after expansion: Label, Complement, Intersection, EmptyConst.
// ---------------------------------------------------------------------------

enum class TermKind { Label, Complement, Intersection, Union, EmptyConst, FullConst };

struct SetTerm;
using TermPtr = std::shared_ptr<const SetTerm>;

struct SetTerm {
    TermKind kind;
    std::string label;  // Label only
    TermPtr a, b;       // Complement uses a; the binary kinds use a and b
};

TermPtr mk_label(std::string name);
TermPtr mk_complement(TermPtr t);
TermPtr mk_intersection(TermPtr a, TermPtr b);
TermPtr mk_union(TermPtr a, TermPtr b);
TermPtr mk_empty();
TermPtr mk_full();

bool term_equal(const TermPtr& a, const TermPtr& b);

// ---------------------------------------------------------------------------
// Formulas:  φ ::= |s| >= |t| | ¬φ | φ∧φ  plus sugar kinds Or/Implies/Iff/Xor.
// Comparison atoms other than >= and the relational atoms (sub, term =)
// desugar already at parse time — they have no AST node.
// ---------------------------------------------------------------------------

enum class FormulaKind { Geq, Not, And, Or, Implies, Iff, Xor };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    FormulaKind kind;
    TermPtr s, t;     // Geq: |s| >= |t|
    FormulaPtr f, g;  // Not uses f; binary kinds use f and g
};

FormulaPtr mk_geq(TermPtr s, TermPtr t);
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_and(FormulaPtr f, FormulaPtr g);
FormulaPtr mk_or(FormulaPtr f, FormulaPtr g);
FormulaPtr mk_implies(FormulaPtr f, FormulaPtr g);
FormulaPtr mk_iff(FormulaPtr f, FormulaPtr g);
FormulaPtr mk_xor(FormulaPtr f, FormulaPtr g);

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

// Signed comparison literal: |lhs| >= |rhs| (positive) or its negation.
struct Literal {
    bool positive = true;
    TermPtr lhs, rhs;
};

// ---------------------------------------------------------------------------
// Parsing / printing
// ---------------------------------------------------------------------------

// Throws SyntaxError on malformed input, UnknownLabel for undeclared labels.
TermPtr parse_term(const std::string& text, const LabelRegistry& labels);
FormulaPtr parse_formula(const std::string& text, const LabelRegistry& labels);

// Minimal-parenthesis printers; parse(pretty_print(x)) reproduces x.
std::string pretty_print(const TermPtr& t);
std::string pretty_print(const FormulaPtr& f);
std::string pretty_print(const Literal& lit);

// Collect the identifiers that occur in raw term/formula source text
// (everything shaped like a label except the keyword 'sub').
std::vector<std::string> collect_identifiers(const std::string& text);

// ---------------------------------------------------------------------------
// Abbreviation expansion and disjunctive normal form
// ---------------------------------------------------------------------------

// Removes all sugar: formulas use only Geq/Not/And, terms only
// Label/Complement/Intersection/EmptyConst (1 becomes 0').
FormulaPtr expand_abbreviations(const FormulaPtr& f);
TermPtr expand_term(const TermPtr& t);

// pre: f is expanded. Returns the list of disjuncts, each a literal
// conjunction, in left-to-right distribution order.
std::vector<std::vector<Literal>> to_dnf(const FormulaPtr& f);

// ---------------------------------------------------------------------------
// Cancellation schema instances
// ---------------------------------------------------------------------------

// Full binary tree, nodes in preorder; node 0 is the root. A leaf has both
// children == npos. Parsed from a shape string:  tree := '.' | '(' tree tree ')'
struct BinTree {
    struct Node {
        std::size_t left = npos;
        std::size_t right = npos;
    };
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<Node> nodes;

    static BinTree parse(const std::string& shape);  // throws MalformedTree
    bool is_leaf(std::size_t i) const { return nodes[i].left == npos; }
    std::size_t size() const { return nodes.size(); }
    std::string shape_string() const;
};

// Finite-cancellation instance: premises |s_i| >= |t_i| (i = 1..n, n >= 1),
// conclusion |e| <= |f|, guarded by the balance conjunction over j = 0..n+1.
FormulaPtr fc_schema(const std::vector<TermPtr>& s, TermPtr e,
                     const std::vector<TermPtr>& t, TermPtr f);

// Generalized instance: e is counted with multiplicity l >= 1; k may be 0.
FormulaPtr gfc_schema(const std::vector<TermPtr>& s, TermPtr e,
                      const std::vector<TermPtr>& t, TermPtr f, std::size_t l);

// Covered variant: adds the bound conjuncts |s_i| <= |u_root| and the cover
// conditions down the tree (non-leaf: |u_σ| <= |u_σ0 + u_σ1|; leaf:
// |u_σ| <= |f|). u has one term per tree node, in preorder.
FormulaPtr cgfc_schema(const std::vector<TermPtr>& s, TermPtr e,
                       const std::vector<TermPtr>& t, TermPtr f, std::size_t l,
                       const BinTree& tree, const std::vector<TermPtr>& u);

}  // namespace cardcomp
