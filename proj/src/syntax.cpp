#include "tightlp/syntax.hpp"

#include "tightlp/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace tightlp {

bool is_identifier(std::string_view s) noexcept {
    if (s.empty() || s.front() < 'a' || s.front() > 'z') {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

Term::Term(std::string name) : value_(std::move(name)) {
    if (!is_identifier(std::get<std::string>(value_))) {
        throw Error("invalid constant '" + std::get<std::string>(value_) + "'");
    }
}

std::string Term::to_string() const {
    return is_integer() ? std::to_string(integer()) : name();
}

Atom::Atom(std::string predicate, std::vector<Term> args)
    : predicate_(std::move(predicate)), args_(std::move(args)) {
    if (!is_identifier(predicate_)) {
        throw Error("invalid predicate name '" + predicate_ + "'");
    }
}

std::string Atom::to_string() const {
    std::string out = predicate_;
    if (!args_.empty()) {
        out += '(';
        for (std::size_t i = 0; i < args_.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += args_[i].to_string();
        }
        out += ')';
    }
    return out;
}

std::string Literal::to_string() const {
    return negated ? "-" + atom.to_string() : atom.to_string();
}

Literal complement(const Literal& l) {
    return {l.atom, !l.negated};
}

/////////////////////////////////////////////////////////////////////////////////////////
// Formula
/////////////////////////////////////////////////////////////////////////////////////////
struct Formula::Node {
    Kind kind;
    std::optional<Literal> lit;
    std::optional<Formula> lhs;
    std::optional<Formula> rhs;
};

Formula Formula::top() {
    static const Formula f(std::make_shared<const Node>(Node{Kind::kTop, {}, {}, {}}));
    return f;
}

Formula Formula::bottom() {
    static const Formula f(std::make_shared<const Node>(Node{Kind::kBottom, {}, {}, {}}));
    return f;
}

Formula Formula::literal(Literal l) {
    return Formula(std::make_shared<const Node>(Node{Kind::kLiteral, std::move(l), {}, {}}));
}

Formula Formula::negation(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Kind::kNot, {}, std::move(f), {}}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<const Node>(Node{Kind::kAnd, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<const Node>(Node{Kind::kOr, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::conj(const std::vector<Formula>& parts) {
    if (parts.empty()) {
        return top();
    }
    Formula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        acc = conj(acc, parts[i]);
    }
    return acc;
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_elementary() const noexcept {
    return node_->kind == Kind::kLiteral || node_->kind == Kind::kTop || node_->kind == Kind::kBottom;
}

const Literal& Formula::lit() const {
    if (!node_->lit) {
        throw Error("formula is not a literal");
    }
    return *node_->lit;
}

const Formula& Formula::lhs() const {
    if (!node_->lhs) {
        throw Error("formula has no operand");
    }
    return *node_->lhs;
}

const Formula& Formula::rhs() const {
    if (!node_->rhs) {
        throw Error("formula has no right operand");
    }
    return *node_->rhs;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) {
        return std::strong_ordering::equal;
    }
    if (auto c = a.kind() <=> b.kind(); c != 0) {
        return c;
    }
    switch (a.kind()) {
        case Formula::Kind::kTop:
        case Formula::Kind::kBottom: return std::strong_ordering::equal;
        case Formula::Kind::kLiteral: return a.lit() <=> b.lit();
        case Formula::Kind::kNot: return a.lhs() <=> b.lhs();
        case Formula::Kind::kAnd:
        case Formula::Kind::kOr:
            if (auto c = a.lhs() <=> b.lhs(); c != 0) {
                return c;
            }
            return a.rhs() <=> b.rhs();
    }
    return std::strong_ordering::equal;
}

bool operator==(const Formula& a, const Formula& b) {
    return (a <=> b) == 0;
}

bool contains_negation_as_failure(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::kNot: return true;
        case Formula::Kind::kAnd:
        case Formula::Kind::kOr: return contains_negation_as_failure(f.lhs()) || contains_negation_as_failure(f.rhs());
        default: return false;
    }
}

std::strong_ordering operator<=>(const Rule& a, const Rule& b) {
    if (auto c = a.head <=> b.head; c != 0) {
        return c;
    }
    return a.body <=> b.body;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Program
/////////////////////////////////////////////////////////////////////////////////////////
namespace {
void collect_literals(const Formula& f, bool under_not, bool positive_only, std::set<Literal>& out) {
    switch (f.kind()) {
        case Formula::Kind::kLiteral:
            if (!positive_only || !under_not) {
                out.insert(f.lit());
            }
            break;
        case Formula::Kind::kNot: collect_literals(f.lhs(), true, positive_only, out); break;
        case Formula::Kind::kAnd:
        case Formula::Kind::kOr:
            collect_literals(f.lhs(), under_not, positive_only, out);
            collect_literals(f.rhs(), under_not, positive_only, out);
            break;
        default: break;
    }
}

bool formula_is_normal(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::kLiteral: return !f.lit().negated;
        case Formula::Kind::kNot: return formula_is_normal(f.lhs());
        case Formula::Kind::kAnd:
        case Formula::Kind::kOr: return formula_is_normal(f.lhs()) && formula_is_normal(f.rhs());
        default: return true;
    }
}
} // namespace

std::set<Literal> lit(const Formula& f) {
    std::set<Literal> out;
    collect_literals(f, false, false, out);
    return out;
}

std::set<Literal> poslit(const Formula& f) {
    std::set<Literal> out;
    collect_literals(f, false, true, out);
    return out;
}

bool is_normal(const Formula& f) { return formula_is_normal(f); }

bool is_normal(const Program& p) {
    for (const Rule& r : p.rules()) {
        if ((r.head && r.head->negated) || !formula_is_normal(r.body)) {
            return false;
        }
    }
    return std::none_of(p.declared().begin(), p.declared().end(), [](const Literal& l) { return l.negated; });
}

void Program::append(const Program& other) {
    rules_.insert(rules_.end(), other.rules_.begin(), other.rules_.end());
    declared_.insert(other.declared_.begin(), other.declared_.end());
}

std::set<Literal> Program::universe() const {
    std::set<Literal> out = declared_;
    for (const Rule& r : rules_) {
        if (r.head) {
            out.insert(*r.head);
        }
        collect_literals(r.body, false, false, out);
    }
    return out;
}

std::set<Atom> Program::atoms() const {
    std::set<Atom> out;
    for (const Literal& l : universe()) {
        out.insert(l.atom);
    }
    return out;
}

std::vector<Rule> Program::rule_set() const {
    std::vector<Rule> out = rules_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Program::same_as(const Program& other) const {
    return declared_ == other.declared_ && rule_set() == other.rule_set();
}

/////////////////////////////////////////////////////////////////////////////////////////
// Rendering
/////////////////////////////////////////////////////////////////////////////////////////
namespace {
void render_into(const Formula& f, std::string& out);

void render_operand(const Formula& f, bool parenthesize, std::string& out) {
    if (parenthesize) {
        out += '(';
        render_into(f, out);
        out += ')';
    } else {
        render_into(f, out);
    }
}

// `,` binds tighter than `;`; both associate to the left, so a right operand
// of the same connective keeps its parentheses.
void render_into(const Formula& f, std::string& out) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::kTop: out += "true"; break;
        case K::kBottom: out += "false"; break;
        case K::kLiteral: out += f.lit().to_string(); break;
        case K::kNot:
            out += "not ";
            render_operand(f.lhs(), f.lhs().kind() == K::kAnd || f.lhs().kind() == K::kOr, out);
            break;
        case K::kAnd:
            render_operand(f.lhs(), f.lhs().kind() == K::kOr, out);
            out += ", ";
            render_operand(f.rhs(), f.rhs().kind() == K::kOr || f.rhs().kind() == K::kAnd, out);
            break;
        case K::kOr:
            render_operand(f.lhs(), false, out);
            out += "; ";
            render_operand(f.rhs(), f.rhs().kind() == K::kOr, out);
            break;
    }
}
} // namespace

std::string render(const Formula& f) {
    std::string out;
    render_into(f, out);
    return out;
}

std::string render(const Rule& r) {
    std::string out;
    if (r.head) {
        out += r.head->to_string();
        if (r.body.kind() != Formula::Kind::kTop) {
            out += " :- ";
            render_into(r.body, out);
        }
    } else {
        out += ":- ";
        render_into(r.body, out);
    }
    out += '.';
    return out;
}

std::string render(const Program& p) {
    std::string out;
    if (!p.declared().empty()) {
        out += "#universe ";
        bool first = true;
        for (const Literal& l : p.declared()) {
            if (!first) {
                out += ", ";
            }
            first = false;
            out += l.to_string();
        }
        out += '.';
    }
    for (const Rule& r : p.rules()) {
        if (!out.empty()) {
            out += '\n';
        }
        out += render(r);
    }
    return out;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Parsing
/////////////////////////////////////////////////////////////////////////////////////////
namespace {
enum class Tok { kIdent, kInteger, kArrow, kDot, kComma, kSemicolon, kMinus, kLParen, kRParen, kLBrace, kRBrace, kDirective, kEnd };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            Token t{Tok::kEnd, {}, line_, col_};
            if (pos_ >= text_.size()) {
                out.push_back(t);
                return out;
            }
            char c = text_[pos_];
            if (std::islower(static_cast<unsigned char>(c))) {
                t.kind = Tok::kIdent;
                t.text = take_while([](unsigned char ch) { return std::isalnum(ch) || ch == '_'; });
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                t.kind = Tok::kInteger;
                t.text = take_while([](unsigned char ch) { return std::isdigit(ch) != 0; });
            } else if (c == '#') {
                advance();
                t.kind = Tok::kDirective;
                t.text = take_while([](unsigned char ch) { return std::isalnum(ch) || ch == '_'; });
            } else if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                advance();
                advance();
                t.kind = Tok::kArrow;
            } else {
                switch (c) {
                    case '.': t.kind = Tok::kDot; break;
                    case ',': t.kind = Tok::kComma; break;
                    case ';': t.kind = Tok::kSemicolon; break;
                    case '-': t.kind = Tok::kMinus; break;
                    case '(': t.kind = Tok::kLParen; break;
                    case ')': t.kind = Tok::kRParen; break;
                    case '{': t.kind = Tok::kLBrace; break;
                    case '}': t.kind = Tok::kRBrace; break;
                    default: throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
                }
                t.text = std::string(1, c);
                advance();
            }
            out.push_back(std::move(t));
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    template <class Pred>
    std::string take_while(Pred pred) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && pred(static_cast<unsigned char>(text_[pos_]))) {
            advance();
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

const char* describe(Tok t) {
    switch (t) {
        case Tok::kIdent: return "identifier";
        case Tok::kInteger: return "integer";
        case Tok::kArrow: return "':-'";
        case Tok::kDot: return "'.'";
        case Tok::kComma: return "','";
        case Tok::kSemicolon: return "';'";
        case Tok::kMinus: return "'-'";
        case Tok::kLParen: return "'('";
        case Tok::kRParen: return "')'";
        case Tok::kLBrace: return "'{'";
        case Tok::kRBrace: return "'}'";
        case Tok::kDirective: return "directive";
        case Tok::kEnd: return "end of input";
    }
    return "token";
}

bool is_keyword(std::string_view s) { return s == "not" || s == "true" || s == "false"; }

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

    ParseOutput program() {
        ParseOutput out;
        while (peek().kind != Tok::kEnd) {
            if (peek().kind == Tok::kDirective) {
                directive(out.program);
            } else {
                out.program.add(rule());
            }
        }
        out.warnings = std::move(warnings_);
        return out;
    }

    std::vector<Literal> literal_list() {
        std::vector<Literal> out;
        if (peek().kind == Tok::kEnd) {
            return out;
        }
        out.push_back(literal());
        while (accept(Tok::kComma)) {
            out.push_back(literal());
        }
        expect(Tok::kEnd);
        return out;
    }

private:
    const Token& peek() const { return toks_[pos_]; }

    const Token& next() {
        const Token& t = toks_[pos_];
        if (t.kind != Tok::kEnd) {
            ++pos_;
        }
        return t;
    }

    bool accept(Tok k) {
        if (peek().kind == k) {
            next();
            return true;
        }
        return false;
    }

    const Token& expect(Tok k) {
        if (peek().kind != k) {
            fail(std::string("expected ") + describe(k) + ", found " + describe(peek().kind));
        }
        return next();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }

    void directive(Program& p) {
        const Token& d = next();
        if (d.text != "universe") {
            throw ParseError("unknown directive '#" + d.text + "'", d.line, d.column);
        }
        if (!accept(Tok::kDot)) {
            p.declare(literal());
            while (accept(Tok::kComma)) {
                p.declare(literal());
            }
            expect(Tok::kDot);
        }
    }

    Rule rule() {
        if (accept(Tok::kArrow)) {
            Rule r{std::nullopt, body()};
            expect(Tok::kDot);
            return r;
        }
        if (peek().kind == Tok::kLBrace) {
            return choice();
        }
        if (peek().kind == Tok::kInteger) {
            fail("weight constraints are not supported; only {atom} choice rules are");
        }
        Literal head = literal();
        Formula b = Formula::top();
        if (accept(Tok::kArrow)) {
            b = body();
        }
        expect(Tok::kDot);
        return Rule{std::move(head), std::move(b)};
    }

    // {a}.  stands for  a :- not not a.
    Rule choice() {
        expect(Tok::kLBrace);
        if (peek().kind != Tok::kIdent) {
            fail("a choice rule must contain exactly one atom");
        }
        Atom a = atom();
        if (peek().kind != Tok::kRBrace) {
            fail("weight constraints are not supported; only {atom} choice rules are");
        }
        next();
        if (peek().kind != Tok::kDot) {
            fail("weight constraints are not supported; only {atom}. choice facts are");
        }
        next();
        Literal l = Literal::pos(std::move(a));
        return Rule{l, Formula::negation(Formula::negation(Formula::literal(l)))};
    }

    Formula body() {
        Formula f = conjunction();
        while (accept(Tok::kSemicolon)) {
            f = Formula::disj(f, conjunction());
        }
        return f;
    }

    Formula conjunction() {
        Formula f = unary();
        while (accept(Tok::kComma)) {
            f = Formula::conj(f, unary());
        }
        return f;
    }

    Formula unary() {
        if (peek().kind == Tok::kIdent && peek().text == "not") {
            next();
            return Formula::negation(unary());
        }
        if (accept(Tok::kLParen)) {
            Formula f = body();
            expect(Tok::kRParen);
            return f;
        }
        if (peek().kind == Tok::kIdent && peek().text == "true") {
            next();
            return Formula::top();
        }
        if (peek().kind == Tok::kIdent && peek().text == "false") {
            next();
            return Formula::bottom();
        }
        return Formula::literal(literal());
    }

    Literal literal() {
        bool negated = accept(Tok::kMinus);
        return Literal{atom(), negated};
    }

    Atom atom() {
        if (peek().kind != Tok::kIdent) {
            fail(std::string("expected atom, found ") + describe(peek().kind));
        }
        if (is_keyword(peek().text)) {
            fail("'" + peek().text + "' is a keyword and cannot name an atom");
        }
        const Token& name = next();
        std::vector<Term> args;
        if (accept(Tok::kLParen)) {
            args.push_back(term());
            while (accept(Tok::kComma)) {
                args.push_back(term());
            }
            expect(Tok::kRParen);
        }
        auto [it, inserted] = arity_.emplace(name.text, args.size());
        if (!inserted && it->second != args.size() && warned_.insert(name.text).second) {
            warnings_.push_back(std::to_string(name.line) + ":" + std::to_string(name.column) + ": predicate '" +
                                name.text + "' used with arities " + std::to_string(it->second) + " and " +
                                std::to_string(args.size()));
        }
        return Atom(name.text, std::move(args));
    }

    Term term() {
        bool minus = accept(Tok::kMinus);
        if (peek().kind == Tok::kInteger) {
            const Token& t = next();
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
                throw ParseError("integer out of range", t.line, t.column);
            }
            return Term(minus ? -v : v);
        }
        if (!minus && peek().kind == Tok::kIdent && !is_keyword(peek().text)) {
            return Term(next().text);
        }
        fail("expected a constant or an integer");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::map<std::string, std::size_t> arity_;
    std::set<std::string> warned_;
    std::vector<std::string> warnings_;
};
} // namespace

ParseOutput parse_program_with_warnings(std::string_view text) {
    return Parser(text).program();
}

Program parse_program(std::string_view text) {
    return parse_program_with_warnings(text).program;
}

std::vector<Literal> parse_literal_list(std::string_view text) {
    return Parser(text).literal_list();
}

} // namespace tightlp
