#include "hilbert/formula.hpp"

#include <cctype>
#include <unordered_map>
#include <utility>

namespace hilbert {

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t value) {
    // boost-style mix; good enough for hash tables, not for fingerprinting.
    return seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::var(std::string name) {
    if (!is_valid_variable_name(name))
        throw std::invalid_argument("Formula::var: bad variable name '" + name + "'");
    auto node = std::make_shared<Node>();
    node->var_index = 0;
    node->name = std::move(name);
    node->hash = hash_combine(0x56, std::hash<std::string>{}(node->name));
    node->height = 0;
    node->node_count = 1;
    return Formula(std::move(node));
}

Formula Formula::implies(Formula antecedent, Formula consequent) {
    auto node = std::make_shared<Node>();
    node->var_index = -1;
    node->left = std::move(antecedent.node_);
    node->right = std::move(consequent.node_);
    node->hash = hash_combine(hash_combine(0x49, node->left->hash), node->right->hash);
    node->height = 1 + std::max(node->left->height, node->right->height);
    node->node_count = 1 + node->left->node_count + node->right->node_count;
    return Formula(std::move(node));
}

const std::string& Formula::var_name() const {
    if (!is_var())
        throw std::logic_error("Formula::var_name on an implication");
    return node_->name;
}

const Formula& Formula::wrap(const NodePtr& node) {
    // Formula is exactly a NodePtr, so reinterpreting a child pointer as a
    // Formula reference is safe and avoids refcount churn on hot paths.
    static_assert(sizeof(Formula) == sizeof(NodePtr));
    return reinterpret_cast<const Formula&>(node);
}

const Formula& Formula::antecedent() const {
    if (is_var())
        throw std::logic_error("Formula::antecedent on a variable");
    return wrap(node_->left);
}

const Formula& Formula::consequent() const {
    if (is_var())
        throw std::logic_error("Formula::consequent on a variable");
    return wrap(node_->right);
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_)
        return true;
    if (a.node_->hash != b.node_->hash || a.node_->var_index != b.node_->var_index ||
        a.node_->height != b.node_->height || a.node_->node_count != b.node_->node_count)
        return false;
    if (a.is_var())
        return a.node_->name == b.node_->name;
    return a.antecedent() == b.antecedent() && a.consequent() == b.consequent();
}

// ---------------------------------------------------------------------------
// Measures
// ---------------------------------------------------------------------------

int height(const Formula& f) { return f.node_->height; }

std::size_t node_count(const Formula& f) { return f.node_->node_count; }

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
    if (f.is_var()) {
        out.insert(f.var_name());
        return;
    }
    collect_variables(f.antecedent(), out);
    collect_variables(f.consequent(), out);
}

}  // namespace

std::set<std::string> variables(const Formula& f) {
    std::set<std::string> out;
    collect_variables(f, out);
    return out;
}

FormulaMeasures measures(const Formula& f) {
    FormulaMeasures m;
    m.height = height(f);
    m.node_count = node_count(f);
    m.variables = variables(f);
    return m;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

void print_formula(const Formula& f, std::string& out) {
    if (f.is_var()) {
        out += f.var_name();
        return;
    }
    out += "Implies(";
    print_formula(f.antecedent(), out);
    out += ", ";
    print_formula(f.consequent(), out);
    out += ')';
}

std::string print_formula(const Formula& f) {
    std::string out;
    out.reserve(node_count(f) * 6);
    print_formula(f, out);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

FormulaParseError::FormulaParseError(std::string message, std::size_t offset)
    : std::runtime_error(message + " at byte " + std::to_string(offset)), offset_(offset) {}

bool is_valid_variable_name(const std::string& name) {
    if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0])))
        return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    }
    return true;
}

namespace {

// Recursive descent over
//   FORMULA := IDENT | IDENT '(' FORMULA ',' FORMULA ')'
// where the only callable identifier is "Implies". Whitespace is free between
// tokens.
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Formula run() {
        Formula f = parse();
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing input after formula");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw FormulaParseError(message, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c, const std::string& what) {
        if (peek() != c)
            fail("expected " + what);
        ++pos_;
    }

    std::string identifier() {
        if (!std::isupper(static_cast<unsigned char>(peek())))
            fail("expected identifier starting with an uppercase letter");
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++pos_;
            else
                break;
        }
        return text_.substr(start, pos_ - start);
    }

    Formula parse() {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        std::string name = identifier();
        skip_ws();
        if (peek() != '(')
            return Formula::var(std::move(name));
        if (name != "Implies")
            fail("unknown connective '" + name + "'");
        ++pos_;  // consume '('
        Formula a = parse();
        skip_ws();
        expect(',', "',' between the two arguments of Implies");
        Formula b = parse();
        skip_ws();
        expect(')', "')' closing Implies");
        return Formula::implies(std::move(a), std::move(b));
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Substitution
// ---------------------------------------------------------------------------

void Substitution::set(const std::string& var, Formula replacement) {
    if (!is_valid_variable_name(var))
        throw std::invalid_argument("Substitution::set: bad variable name '" + var + "'");
    map_.insert_or_assign(var, std::move(replacement));
}

const Formula* Substitution::find(const std::string& var) const {
    auto it = map_.find(var);
    return it == map_.end() ? nullptr : &it->second;
}

std::set<std::string> Substitution::domain() const {
    std::set<std::string> out;
    for (const auto& [name, value] : map_)
        out.insert(name);
    return out;
}

Formula Substitution::apply(const Formula& f) const {
    if (map_.empty())
        return f;
    if (f.is_var()) {
        const Formula* r = find(f.var_name());
        return r ? *r : f;
    }
    Formula a = apply(f.antecedent());
    Formula b = apply(f.consequent());
    // Keep the original node when nothing below changed.
    if (a == f.antecedent() && b == f.consequent())
        return f;
    return Formula::implies(std::move(a), std::move(b));
}

Substitution Substitution::compose_after(const Substitution& other) const {
    Substitution out;
    for (const auto& [name, value] : other.map_)
        out.map_.insert_or_assign(name, apply(value));
    for (const auto& [name, value] : map_)
        out.map_.insert(std::make_pair(name, value));  // keep entries `other` already set
    return out;
}

bool operator==(const Substitution& a, const Substitution& b) {
    return a.map_ == b.map_;
}

}  // namespace hilbert
