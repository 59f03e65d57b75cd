#pragma once

// Abstract syntax of propositional programs with nested expressions in rule
// bodies, plus the text format used by the command line tool.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tightlp {

// A ground argument: an integer or a lower-case identifier.
class Term {
public:
    Term(std::int64_t value) : value_(value) {}
    Term(int value) : value_(std::int64_t{value}) {}
    Term(std::string name);
    Term(const char* name) : Term(std::string(name)) {}

    bool is_integer() const noexcept { return std::holds_alternative<std::int64_t>(value_); }
    std::int64_t integer() const { return std::get<std::int64_t>(value_); }
    const std::string& name() const { return std::get<std::string>(value_); }

    std::string to_string() const;

    friend bool operator==(const Term&, const Term&) = default;
    friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

private:
    std::variant<std::int64_t, std::string> value_;
};

class Atom {
public:
    // Throws Error if `predicate` is not an identifier of the form [a-z][A-Za-z0-9_]*.
    explicit Atom(std::string predicate, std::vector<Term> args = {});

    const std::string& predicate() const noexcept { return predicate_; }
    const std::vector<Term>& args() const noexcept { return args_; }
    std::size_t arity() const noexcept { return args_.size(); }

    std::string to_string() const;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;

private:
    std::string predicate_;
    std::vector<Term> args_;
};

// An atom with a classical-negation flag; `negated` renders as a leading `-`.
struct Literal {
    Atom atom;
    bool negated = false;

    static Literal pos(Atom a) { return {std::move(a), false}; }
    static Literal neg(Atom a) { return {std::move(a), true}; }

    std::string to_string() const;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend std::strong_ordering operator<=>(const Literal&, const Literal&) = default;
};

Literal complement(const Literal& l);

bool is_identifier(std::string_view s) noexcept;

// Immutable formula tree. Copies share structure.
class Formula {
public:
    enum class Kind { kLiteral, kTop, kBottom, kNot, kAnd, kOr };

    static Formula top();
    static Formula bottom();
    static Formula literal(Literal l);
    static Formula negation(Formula f);
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    // Left-nested conjunction; the empty list yields top().
    static Formula conj(const std::vector<Formula>& parts);

    Formula(Literal l) : Formula(literal(std::move(l))) {}

    Kind kind() const noexcept;
    bool is_elementary() const noexcept;
    // Only valid for kLiteral.
    const Literal& lit() const;
    // Child of kNot, or left operand of kAnd / kOr.
    const Formula& lhs() const;
    const Formula& rhs() const;

    friend bool operator==(const Formula& a, const Formula& b);
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

    struct Node;

private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

bool contains_negation_as_failure(const Formula& f);

struct Rule {
    std::optional<Literal> head; // nullopt is the head ⊥ (a constraint)
    Formula body = Formula::top();

    bool is_constraint() const noexcept { return !head.has_value(); }
    bool is_fact() const noexcept { return head && body.kind() == Formula::Kind::kTop; }

    friend bool operator==(const Rule&, const Rule&) = default;
    friend std::strong_ordering operator<=>(const Rule& a, const Rule& b);
};

class Program {
public:
    Program() = default;
    explicit Program(std::vector<Rule> rules, std::set<Literal> declared = {})
        : rules_(std::move(rules)), declared_(std::move(declared)) {}

    const std::vector<Rule>& rules() const noexcept { return rules_; }
    // Literals added with `#universe`, independently of the rules.
    const std::set<Literal>& declared() const noexcept { return declared_; }

    void add(Rule r) { rules_.push_back(std::move(r)); }
    void declare(Literal l) { declared_.insert(std::move(l)); }
    // Appends the rules and declarations of `other`.
    void append(const Program& other);

    bool empty() const noexcept { return rules_.empty() && declared_.empty(); }

    // Literals with a regular occurrence in some rule, plus the declared ones.
    std::set<Literal> universe() const;
    std::set<Atom> atoms() const;

    // Sorted, duplicate-free rules: the program as a set.
    std::vector<Rule> rule_set() const;

    // Equality of the set views.
    bool same_as(const Program& other) const;

private:
    std::vector<Rule> rules_;
    std::set<Literal> declared_;
};

// Literals with regular occurrences in `f` (every literal is regular; an atom
// is singular only directly under classical negation).
std::set<Literal> lit(const Formula& f);
// Regular occurrences outside the scope of `not`.
std::set<Literal> poslit(const Formula& f);

bool is_normal(const Formula& f);
bool is_normal(const Program& p);

struct ParseOutput {
    Program program;
    std::vector<std::string> warnings; // e.g. a predicate used with two arities
};

// Throws ParseError.
ParseOutput parse_program_with_warnings(std::string_view text);
Program parse_program(std::string_view text);

// Parses a comma separated literal list such as "p, -q(1)".
std::vector<Literal> parse_literal_list(std::string_view text);

std::string render(const Formula& f);
std::string render(const Rule& r);
// One rule per line, joined by '\n' without a trailing newline. Declared
// universe literals come first as a `#universe` line.
std::string render(const Program& p);

} // namespace tightlp
