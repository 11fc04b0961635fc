// Parser, printer, abbreviation expansion, DNF, and schema generation.
#include "cardcomp/syntax.hpp"

#include <algorithm>
#include <cctype>

namespace cardcomp {

// ===========================================================================
// LabelRegistry
// ===========================================================================

namespace {

bool valid_label_shape(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return s != "sub";
}

}  // namespace

LabelRegistry LabelRegistry::from_names(std::vector<std::string> names, std::size_t max_labels) {
    for (const auto& n : names)
        if (!valid_label_shape(n)) throw InputError("invalid label '" + n + "'");
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    if (names.size() > max_labels)
        throw LimitExceeded("label count " + std::to_string(names.size()) + " exceeds cap " +
                            std::to_string(max_labels));
    LabelRegistry r;
    r.names_ = std::move(names);
    return r;
}

std::size_t LabelRegistry::index_of(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return npos;
    return static_cast<std::size_t>(it - names_.begin());
}

// ===========================================================================
// AST constructors / structural equality
// ===========================================================================

TermPtr mk_label(std::string name) {
    return std::make_shared<const SetTerm>(SetTerm{TermKind::Label, std::move(name), nullptr, nullptr});
}
TermPtr mk_complement(TermPtr t) {
    return std::make_shared<const SetTerm>(SetTerm{TermKind::Complement, "", std::move(t), nullptr});
}
TermPtr mk_intersection(TermPtr a, TermPtr b) {
    return std::make_shared<const SetTerm>(SetTerm{TermKind::Intersection, "", std::move(a), std::move(b)});
}
TermPtr mk_union(TermPtr a, TermPtr b) {
    return std::make_shared<const SetTerm>(SetTerm{TermKind::Union, "", std::move(a), std::move(b)});
}
TermPtr mk_empty() {
    return std::make_shared<const SetTerm>(SetTerm{TermKind::EmptyConst, "", nullptr, nullptr});
}
TermPtr mk_full() {
    return std::make_shared<const SetTerm>(SetTerm{TermKind::FullConst, "", nullptr, nullptr});
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case TermKind::Label: return a->label == b->label;
        case TermKind::Complement: return term_equal(a->a, b->a);
        case TermKind::Intersection:
        case TermKind::Union: return term_equal(a->a, b->a) && term_equal(a->b, b->b);
        case TermKind::EmptyConst:
        case TermKind::FullConst: return true;
    }
    return false;
}

FormulaPtr mk_geq(TermPtr s, TermPtr t) {
    return std::make_shared<const Formula>(Formula{FormulaKind::Geq, std::move(s), std::move(t), nullptr, nullptr});
}
namespace {
FormulaPtr mk_binary(FormulaKind k, FormulaPtr f, FormulaPtr g) {
    return std::make_shared<const Formula>(Formula{k, nullptr, nullptr, std::move(f), std::move(g)});
}
}  // namespace
FormulaPtr mk_not(FormulaPtr f) {
    return std::make_shared<const Formula>(Formula{FormulaKind::Not, nullptr, nullptr, std::move(f), nullptr});
}
FormulaPtr mk_and(FormulaPtr f, FormulaPtr g) { return mk_binary(FormulaKind::And, std::move(f), std::move(g)); }
FormulaPtr mk_or(FormulaPtr f, FormulaPtr g) { return mk_binary(FormulaKind::Or, std::move(f), std::move(g)); }
FormulaPtr mk_implies(FormulaPtr f, FormulaPtr g) { return mk_binary(FormulaKind::Implies, std::move(f), std::move(g)); }
FormulaPtr mk_iff(FormulaPtr f, FormulaPtr g) { return mk_binary(FormulaKind::Iff, std::move(f), std::move(g)); }
FormulaPtr mk_xor(FormulaPtr f, FormulaPtr g) { return mk_binary(FormulaKind::Xor, std::move(f), std::move(g)); }

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    if (a->kind == FormulaKind::Geq) return term_equal(a->s, b->s) && term_equal(a->t, b->t);
    if (a->kind == FormulaKind::Not) return formula_equal(a->f, b->f);
    return formula_equal(a->f, b->f) && formula_equal(a->g, b->g);
}

// ===========================================================================
// Lexer
// ===========================================================================

namespace {

enum class Tok {
    Ident, Zero, One, Apostrophe, Amp, Plus, LParen, RParen, Pipe,
    CmpGe, CmpLe, CmpEq, CmpGt, CmpLt, KwSub,
    Bang, OpAnd, OpOr, OpArrow, OpIff, OpXor,
    End
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0, n = src.size();
    auto push = [&](Tok k, std::size_t pos, std::string text) {
        out.push_back(Token{k, std::move(text), pos});
    };
    while (i < n) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        std::size_t at = i;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            std::string word = src.substr(i, j - i);
            push(word == "sub" ? Tok::KwSub : Tok::Ident, at, word);
            i = j;
            continue;
        }
        switch (c) {
            case '0': push(Tok::Zero, at, "0"); ++i; break;
            case '1': push(Tok::One, at, "1"); ++i; break;
            case '\'': push(Tok::Apostrophe, at, "'"); ++i; break;
            case '&': push(Tok::Amp, at, "&"); ++i; break;
            case '+': push(Tok::Plus, at, "+"); ++i; break;
            case '(': push(Tok::LParen, at, "("); ++i; break;
            case ')': push(Tok::RParen, at, ")"); ++i; break;
            case '|': push(Tok::Pipe, at, "|"); ++i; break;
            case '!': push(Tok::Bang, at, "!"); ++i; break;
            case '=': push(Tok::CmpEq, at, "="); ++i; break;
            case '>':
                if (i + 1 < n && src[i + 1] == '=') { push(Tok::CmpGe, at, ">="); i += 2; }
                else { push(Tok::CmpGt, at, ">"); ++i; }
                break;
            case '<':
                if (i + 1 < n && src[i + 1] == '=') { push(Tok::CmpLe, at, "<="); i += 2; }
                else if (i + 2 < n && src[i + 1] == '-' && src[i + 2] == '>') { push(Tok::OpIff, at, "<->"); i += 3; }
                else if (i + 2 < n && src[i + 1] == '+' && src[i + 2] == '>') { push(Tok::OpXor, at, "<+>"); i += 3; }
                else { push(Tok::CmpLt, at, "<"); ++i; }
                break;
            case '-':
                if (i + 1 < n && src[i + 1] == '>') { push(Tok::OpArrow, at, "->"); i += 2; }
                else throw SyntaxError(at, "'->'");
                break;
            case '/':
                if (i + 1 < n && src[i + 1] == '\\') { push(Tok::OpAnd, at, "/\\"); i += 2; }
                else throw SyntaxError(at, "'/\\'");
                break;
            case '\\':
                if (i + 1 < n && src[i + 1] == '/') { push(Tok::OpOr, at, "\\/"); i += 2; }
                else throw SyntaxError(at, "'\\/'");
                break;
            default:
                throw SyntaxError(at, "a term, formula, or operator");
        }
    }
    out.push_back(Token{Tok::End, "", n});
    return out;
}

// ===========================================================================
// Recursive-descent parser
// ===========================================================================

class Parser {
  public:
    Parser(const std::string& src, const LabelRegistry& labels)
        : tokens_(lex(src)), labels_(labels) {}

    TermPtr parse_full_term() {
        TermPtr t = parse_term();
        expect_end();
        return t;
    }

    FormulaPtr parse_full_formula() {
        FormulaPtr f = parse_formula();
        expect_end();
        return f;
    }

  private:
    std::vector<Token> tokens_;
    const LabelRegistry& labels_;
    std::size_t at_ = 0;

    const Token& peek() const { return tokens_[at_]; }
    const Token& advance() { return tokens_[at_++]; }
    bool check(Tok k) const { return peek().kind == k; }
    bool eat(Tok k) {
        if (check(k)) { ++at_; return true; }
        return false;
    }
    void expect(Tok k, const char* what) {
        if (!eat(k)) throw SyntaxError(peek().pos, what);
    }
    void expect_end() {
        if (!check(Tok::End)) throw SyntaxError(peek().pos, "end of input");
    }

    // ---- terms: precedence  '  >  &  >  +  (postfix, then left-assoc) ----

    TermPtr parse_term() {  // union level
        TermPtr t = parse_isect();
        while (eat(Tok::Plus)) t = mk_union(t, parse_isect());
        return t;
    }
    TermPtr parse_isect() {
        TermPtr t = parse_postfix();
        while (eat(Tok::Amp)) t = mk_intersection(t, parse_postfix());
        return t;
    }
    TermPtr parse_postfix() {
        TermPtr t = parse_term_primary();
        while (eat(Tok::Apostrophe)) t = mk_complement(t);
        return t;
    }
    TermPtr parse_term_primary() {
        const Token& tk = peek();
        switch (tk.kind) {
            case Tok::Ident: {
                advance();
                if (labels_.index_of(tk.text) == LabelRegistry::npos) throw UnknownLabel(tk.text);
                return mk_label(tk.text);
            }
            case Tok::Zero: advance(); return mk_empty();
            case Tok::One: advance(); return mk_full();
            case Tok::LParen: {
                advance();
                TermPtr t = parse_term();
                expect(Tok::RParen, "')'");
                return t;
            }
            default:
                throw SyntaxError(tk.pos, "a label, '0', '1', or '('");
        }
    }

    // ---- formulas ----
    // precedence (tight to loose):  !  /\  \/  <+>  ->  <->
    // '->' associates to the right, the other binaries to the left.

    FormulaPtr parse_formula() { return parse_iff(); }

    FormulaPtr parse_iff() {
        FormulaPtr f = parse_impl();
        while (eat(Tok::OpIff)) f = mk_iff(f, parse_impl());
        return f;
    }
    FormulaPtr parse_impl() {
        FormulaPtr f = parse_xor();
        if (eat(Tok::OpArrow)) return mk_implies(f, parse_impl());
        return f;
    }
    FormulaPtr parse_xor() {
        FormulaPtr f = parse_disj();
        while (eat(Tok::OpXor)) f = mk_xor(f, parse_disj());
        return f;
    }
    FormulaPtr parse_disj() {
        FormulaPtr f = parse_conj();
        while (eat(Tok::OpOr)) f = mk_or(f, parse_conj());
        return f;
    }
    FormulaPtr parse_conj() {
        FormulaPtr f = parse_neg();
        while (eat(Tok::OpAnd)) f = mk_and(f, parse_neg());
        return f;
    }
    FormulaPtr parse_neg() {
        if (eat(Tok::Bang)) return mk_not(parse_neg());
        return parse_atomic();
    }

    FormulaPtr parse_atomic() {
        const Token& tk = peek();
        if (tk.kind == Tok::Pipe) return parse_comparison();
        if (tk.kind == Tok::Ident || tk.kind == Tok::Zero || tk.kind == Tok::One)
            return parse_term_relation();
        if (tk.kind == Tok::LParen) {
            // '(' may open a parenthesized term (of a sub/= atom) or a
            // parenthesized formula. Try the term reading first; on failure
            // rewind and read a formula.
            std::size_t save = at_;
            try {
                return parse_term_relation();
            } catch (const Error&) {
                at_ = save;
            }
            advance();  // '('
            FormulaPtr f = parse_formula();
            expect(Tok::RParen, "')'");
            return f;
        }
        throw SyntaxError(tk.pos, "an atom: '|', a term, '!', or '('");
    }

    // |s| CMP |t| with CMP in {>=, <=, =, >, <}; desugars to core comparisons.
    FormulaPtr parse_comparison() {
        expect(Tok::Pipe, "'|'");
        TermPtr s = parse_term();
        expect(Tok::Pipe, "'|'");
        const Token& op = peek();
        switch (op.kind) {
            case Tok::CmpGe: case Tok::CmpLe: case Tok::CmpEq:
            case Tok::CmpGt: case Tok::CmpLt: advance(); break;
            default: throw SyntaxError(op.pos, "a comparison: >=, <=, =, >, or <");
        }
        expect(Tok::Pipe, "'|'");
        TermPtr t = parse_term();
        expect(Tok::Pipe, "'|'");
        switch (op.kind) {
            case Tok::CmpGe: return mk_geq(s, t);
            case Tok::CmpLe: return mk_geq(t, s);
            case Tok::CmpEq: return mk_and(mk_geq(s, t), mk_geq(t, s));
            case Tok::CmpGt: return mk_not(mk_geq(t, s));  // |s| > |t|  :=  !(|t| >= |s|)
            default:         return mk_not(mk_geq(s, t));  // |s| < |t|  :=  !(|s| >= |t|)
        }
    }

    // s sub t  (s is a subset of t: the part of s outside t is empty)
    // s = t    (both inclusions)
    FormulaPtr parse_term_relation() {
        TermPtr s = parse_term();
        const Token& op = peek();
        if (eat(Tok::KwSub)) {
            TermPtr t = parse_term();
            return mk_geq(mk_empty(), mk_intersection(s, mk_complement(t)));
        }
        if (eat(Tok::CmpEq)) {
            TermPtr t = parse_term();
            return mk_and(mk_geq(mk_empty(), mk_intersection(s, mk_complement(t))),
                          mk_geq(mk_empty(), mk_intersection(t, mk_complement(s))));
        }
        throw SyntaxError(op.pos, "'sub' or '='");
    }
};

}  // namespace

TermPtr parse_term(const std::string& text, const LabelRegistry& labels) {
    return Parser(text, labels).parse_full_term();
}

FormulaPtr parse_formula(const std::string& text, const LabelRegistry& labels) {
    return Parser(text, labels).parse_full_formula();
}

std::vector<std::string> collect_identifiers(const std::string& text) {
    std::vector<std::string> out;
    std::size_t i = 0, n = text.size();
    while (i < n) {
        if (std::isalpha(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            std::string word = text.substr(i, j - i);
            if (word != "sub" && std::find(out.begin(), out.end(), word) == out.end())
                out.push_back(word);
            i = j;
        } else {
            ++i;
        }
    }
    return out;
}

// ===========================================================================
// Pretty printing (minimal parentheses; inverse of the parser)
// ===========================================================================

namespace {

// Term binding levels: atoms 4, complement 3, & 2, + 1.
int term_level(const SetTerm& t) {
    switch (t.kind) {
        case TermKind::Label:
        case TermKind::EmptyConst:
        case TermKind::FullConst: return 4;
        case TermKind::Complement: return 3;
        case TermKind::Intersection: return 2;
        case TermKind::Union: return 1;
    }
    return 4;
}

void print_term(const TermPtr& t, int min_level, std::string& out) {
    int lvl = term_level(*t);
    bool paren = lvl < min_level;
    if (paren) out += '(';
    switch (t->kind) {
        case TermKind::Label: out += t->label; break;
        case TermKind::EmptyConst: out += '0'; break;
        case TermKind::FullConst: out += '1'; break;
        case TermKind::Complement:
            print_term(t->a, 3, out);
            out += '\'';
            break;
        case TermKind::Intersection:
            print_term(t->a, 2, out);
            out += " & ";
            print_term(t->b, 3, out);
            break;
        case TermKind::Union:
            print_term(t->a, 1, out);
            out += " + ";
            print_term(t->b, 2, out);
            break;
    }
    if (paren) out += ')';
}

// Formula binding levels: atoms 7, ! 6, /\ 5, \/ 4, <+> 3, -> 2, <-> 1.
int formula_level(const Formula& f) {
    switch (f.kind) {
        case FormulaKind::Geq: return 7;
        case FormulaKind::Not: return 6;
        case FormulaKind::And: return 5;
        case FormulaKind::Or: return 4;
        case FormulaKind::Xor: return 3;
        case FormulaKind::Implies: return 2;
        case FormulaKind::Iff: return 1;
    }
    return 7;
}

void print_formula(const FormulaPtr& f, int min_level, std::string& out) {
    int lvl = formula_level(*f);
    bool paren = lvl < min_level;
    if (paren) out += '(';
    switch (f->kind) {
        case FormulaKind::Geq:
            out += '|';
            print_term(f->s, 0, out);
            out += "| >= |";
            print_term(f->t, 0, out);
            out += '|';
            break;
        case FormulaKind::Not:
            out += '!';
            print_formula(f->f, 6, out);
            break;
        case FormulaKind::And:
            print_formula(f->f, 5, out);
            out += " /\\ ";
            print_formula(f->g, 6, out);
            break;
        case FormulaKind::Or:
            print_formula(f->f, 4, out);
            out += " \\/ ";
            print_formula(f->g, 5, out);
            break;
        case FormulaKind::Xor:
            print_formula(f->f, 3, out);
            out += " <+> ";
            print_formula(f->g, 4, out);
            break;
        case FormulaKind::Implies:  // right-assoc
            print_formula(f->f, 3, out);
            out += " -> ";
            print_formula(f->g, 2, out);
            break;
        case FormulaKind::Iff:
            print_formula(f->f, 1, out);
            out += " <-> ";
            print_formula(f->g, 2, out);
            break;
    }
    if (paren) out += ')';
}

}  // namespace

std::string pretty_print(const TermPtr& t) {
    std::string out;
    print_term(t, 0, out);
    return out;
}

std::string pretty_print(const FormulaPtr& f) {
    std::string out;
    print_formula(f, 0, out);
    return out;
}

std::string pretty_print(const Literal& lit) {
    FormulaPtr f = mk_geq(lit.lhs, lit.rhs);
    if (!lit.positive) f = mk_not(f);
    return pretty_print(f);
}

// ===========================================================================
// Abbreviation expansion
// ===========================================================================

TermPtr expand_term(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Label:
        case TermKind::EmptyConst:
            return t;
        case TermKind::FullConst:
            return mk_complement(mk_empty());
        case TermKind::Complement:
            return mk_complement(expand_term(t->a));
        case TermKind::Intersection:
            return mk_intersection(expand_term(t->a), expand_term(t->b));
        case TermKind::Union: {
            // a + b  =  (a' & b')'
            TermPtr a = expand_term(t->a), b = expand_term(t->b);
            return mk_complement(mk_intersection(mk_complement(a), mk_complement(b)));
        }
    }
    return t;
}

FormulaPtr expand_abbreviations(const FormulaPtr& f) {
    switch (f->kind) {
        case FormulaKind::Geq:
            return mk_geq(expand_term(f->s), expand_term(f->t));
        case FormulaKind::Not:
            return mk_not(expand_abbreviations(f->f));
        case FormulaKind::And:
            return mk_and(expand_abbreviations(f->f), expand_abbreviations(f->g));
        case FormulaKind::Or: {
            // f \/ g  =  !(!f /\ !g)
            FormulaPtr a = expand_abbreviations(f->f), b = expand_abbreviations(f->g);
            return mk_not(mk_and(mk_not(a), mk_not(b)));
        }
        case FormulaKind::Implies: {
            // f -> g  =  !(f /\ !g)
            FormulaPtr a = expand_abbreviations(f->f), b = expand_abbreviations(f->g);
            return mk_not(mk_and(a, mk_not(b)));
        }
        case FormulaKind::Iff: {
            // (f -> g) /\ (g -> f)
            FormulaPtr a = expand_abbreviations(f->f), b = expand_abbreviations(f->g);
            return mk_and(mk_not(mk_and(a, mk_not(b))), mk_not(mk_and(b, mk_not(a))));
        }
        case FormulaKind::Xor: {
            // (f \/ g) /\ !(f /\ g)
            FormulaPtr a = expand_abbreviations(f->f), b = expand_abbreviations(f->g);
            return mk_and(mk_not(mk_and(mk_not(a), mk_not(b))), mk_not(mk_and(a, b)));
        }
    }
    return f;
}

// ===========================================================================
// DNF
// ===========================================================================

namespace {

// Branches of f (positive polarity) / of !f (negative polarity).
std::vector<std::vector<Literal>> dnf_rec(const FormulaPtr& f, bool polarity) {
    switch (f->kind) {
        case FormulaKind::Geq:
            return {{Literal{polarity, f->s, f->t}}};
        case FormulaKind::Not:
            return dnf_rec(f->f, !polarity);
        case FormulaKind::And: {
            if (polarity) {
                auto left = dnf_rec(f->f, true);
                auto right = dnf_rec(f->g, true);
                std::vector<std::vector<Literal>> out;
                out.reserve(left.size() * right.size());
                for (const auto& lb : left)
                    for (const auto& rb : right) {
                        std::vector<Literal> branch = lb;
                        branch.insert(branch.end(), rb.begin(), rb.end());
                        out.push_back(std::move(branch));
                    }
                return out;
            }
            // !(f /\ g)  =  !f \/ !g
            auto out = dnf_rec(f->f, false);
            auto right = dnf_rec(f->g, false);
            out.insert(out.end(), right.begin(), right.end());
            return out;
        }
        default:
            throw Error("to_dnf expects an expanded formula (no sugar nodes)");
    }
}

}  // namespace

std::vector<std::vector<Literal>> to_dnf(const FormulaPtr& f) { return dnf_rec(f, true); }

// ===========================================================================
// Schema instances
// ===========================================================================

namespace {

FormulaPtr fold_and(const std::vector<FormulaPtr>& fs) {
    FormulaPtr acc = nullptr;
    for (const auto& f : fs) acc = acc ? mk_and(acc, f) : f;
    return acc;
}

TermPtr fold_union(const std::vector<TermPtr>& ts) {
    if (ts.empty()) return mk_empty();
    TermPtr acc = ts[0];
    for (std::size_t i = 1; i < ts.size(); ++i) acc = mk_union(acc, ts[i]);
    return acc;
}

// Both inclusions, via the 'the part outside is empty' encoding.
FormulaPtr term_equation(const TermPtr& a, const TermPtr& b) {
    return mk_and(mk_geq(mk_empty(), mk_intersection(a, mk_complement(b))),
                  mk_geq(mk_empty(), mk_intersection(b, mk_complement(a))));
}

// The set of points covered exactly j times by the multiset
// {base_1, ..., base_k, extra (l copies)}: a union of signed intersections.
// Subsets K of {1..k} are enumerated as ascending bitmasks; for each K, the
// extra set absent first, then present.
TermPtr coverage_term(const std::vector<TermPtr>& base, const TermPtr& extra, std::size_t l,
                      std::size_t j) {
    std::size_t k = base.size();
    std::vector<TermPtr> minterms;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        for (int b = 0; b <= 1; ++b) {
            std::size_t covered = static_cast<std::size_t>(__builtin_popcountll(mask)) +
                                  (b ? l : 0);
            if (covered != j) continue;
            TermPtr acc = b ? extra : mk_complement(extra);
            // Build right-to-left so the printed minterm reads s_1 & s_2 & ... & e.
            for (std::size_t i = k; i-- > 0;) {
                TermPtr part = (mask >> i) & 1 ? base[i] : mk_complement(base[i]);
                acc = mk_intersection(part, acc);
            }
            minterms.push_back(acc);
        }
    }
    return fold_union(minterms);
}

FormulaPtr balance_conjunction(const std::vector<TermPtr>& s, const TermPtr& e,
                               const std::vector<TermPtr>& t, const TermPtr& f, std::size_t l) {
    std::vector<FormulaPtr> eqs;
    for (std::size_t j = 0; j <= s.size() + l; ++j)
        eqs.push_back(term_equation(coverage_term(s, e, l, j), coverage_term(t, f, l, j)));
    return fold_and(eqs);
}

}  // namespace

FormulaPtr gfc_schema(const std::vector<TermPtr>& s, TermPtr e, const std::vector<TermPtr>& t,
                      TermPtr f, std::size_t l) {
    if (s.size() != t.size())
        throw DimensionMismatch("schema needs as many left premises as right premises");
    if (l < 1) throw Error("schema multiplicity l must be >= 1");
    if (s.size() > 20) throw LimitExceeded("schema premise count too large");

    FormulaPtr balance = balance_conjunction(s, e, t, f, l);
    FormulaPtr conclusion = mk_geq(f, e);  // |e| <= |f|
    std::vector<FormulaPtr> prem;
    for (std::size_t i = 0; i < s.size(); ++i) prem.push_back(mk_geq(s[i], t[i]));
    if (prem.empty()) return mk_implies(balance, conclusion);
    return mk_implies(balance, mk_implies(fold_and(prem), conclusion));
}

FormulaPtr fc_schema(const std::vector<TermPtr>& s, TermPtr e, const std::vector<TermPtr>& t,
                     TermPtr f) {
    if (s.empty()) throw Error("fc_schema needs at least one premise");
    return gfc_schema(s, std::move(e), t, std::move(f), 1);
}

// ---- binary trees ----

namespace {

std::size_t parse_tree_node(const std::string& s, std::size_t& pos, std::vector<BinTree::Node>& out) {
    if (pos >= s.size()) throw MalformedTree("tree shape ended early");
    if (s[pos] == '.') {
        ++pos;
        out.push_back(BinTree::Node{});
        return out.size() - 1;
    }
    if (s[pos] == '(') {
        ++pos;
        std::size_t self = out.size();
        out.push_back(BinTree::Node{});
        std::size_t left = parse_tree_node(s, pos, out);
        if (pos < s.size() && s[pos] == ')')
            throw MalformedTree("tree node with a single child");
        std::size_t right = parse_tree_node(s, pos, out);
        if (pos >= s.size() || s[pos] != ')')
            throw MalformedTree("tree node with more than two children");
        ++pos;
        out[self].left = left;
        out[self].right = right;
        return self;
    }
    throw MalformedTree(std::string("unexpected character '") + s[pos] + "' in tree shape");
}

void render_tree(const BinTree& t, std::size_t i, std::string& out) {
    if (t.is_leaf(i)) {
        out += '.';
        return;
    }
    out += '(';
    render_tree(t, t.nodes[i].left, out);
    render_tree(t, t.nodes[i].right, out);
    out += ')';
}

}  // namespace

BinTree BinTree::parse(const std::string& shape) {
    BinTree t;
    std::size_t pos = 0;
    parse_tree_node(shape, pos, t.nodes);
    if (pos != shape.size()) throw MalformedTree("trailing characters after tree shape");
    return t;
}

std::string BinTree::shape_string() const {
    std::string out;
    render_tree(*this, 0, out);
    return out;
}

FormulaPtr cgfc_schema(const std::vector<TermPtr>& s, TermPtr e, const std::vector<TermPtr>& t,
                       TermPtr f, std::size_t l, const BinTree& tree,
                       const std::vector<TermPtr>& u) {
    if (s.size() != t.size())
        throw DimensionMismatch("schema needs as many left premises as right premises");
    if (l < 1) throw Error("schema multiplicity l must be >= 1");
    if (u.size() != tree.size())
        throw MalformedTree("cover terms must match tree nodes one to one");
    if (tree.size() == 0) throw MalformedTree("empty tree");

    FormulaPtr balance = balance_conjunction(s, e, t, f, l);
    FormulaPtr conclusion = mk_geq(f, e);

    std::vector<FormulaPtr> ante;
    for (std::size_t i = 0; i < s.size(); ++i) ante.push_back(mk_geq(s[i], t[i]));
    // every left premise set fits inside the root cover set
    for (std::size_t i = 0; i < s.size(); ++i) ante.push_back(mk_geq(u[0], s[i]));
    // cover conditions down the tree (preorder)
    for (std::size_t node = 0; node < tree.size(); ++node) {
        if (tree.is_leaf(node)) {
            ante.push_back(mk_geq(f, u[node]));  // |u_sigma| <= |f|
        } else {
            ante.push_back(mk_geq(mk_union(u[tree.nodes[node].left], u[tree.nodes[node].right]),
                                  u[node]));  // |u_sigma| <= |u_left + u_right|
        }
    }
    return mk_implies(balance, mk_implies(fold_and(ante), conclusion));
}

}  // namespace cardcomp
