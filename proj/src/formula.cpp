#include "ppeval/formula.hpp"

#include "ppeval/errors.hpp"

namespace ppeval {

Formula Formula::constant(bool value) {
    Formula f;
    f.kind_ = Kind::Const;
    f.value_ = value;
    return f;
}

Formula Formula::var(std::string name) {
    Formula f;
    f.kind_ = Kind::Var;
    f.name_ = std::move(name);
    return f;
}

Formula Formula::negation(Formula child) {
    Formula f;
    f.kind_ = Kind::Not;
    f.children_.push_back(std::move(child));
    return f;
}

Formula Formula::conjunction(std::vector<Formula> children) {
    if (children.size() == 1)
        return std::move(children[0]);
    Formula f;
    f.kind_ = Kind::And;
    f.children_ = std::move(children);
    return f;
}

Formula Formula::disjunction(std::vector<Formula> children) {
    if (children.size() == 1)
        return std::move(children[0]);
    Formula f;
    f.kind_ = Kind::Or;
    f.children_ = std::move(children);
    return f;
}

bool Formula::eval(const State& s, const VariableTable& vars) const {
    switch (kind_) {
    case Kind::Const:
        return value_;
    case Kind::Var: {
        auto idx = vars.index_of(name_);
        if (!idx)
            throw Error("formula references unknown variable '" + name_ + "'");
        return s.get(*idx);
    }
    case Kind::Not:
        return !children_[0].eval(s, vars);
    case Kind::And:
        for (const Formula& c : children_)
            if (!c.eval(s, vars))
                return false;
        return true;
    case Kind::Or:
        for (const Formula& c : children_)
            if (c.eval(s, vars))
                return true;
        return false;
    }
    return false;
}

bool Formula::names_resolve(const VariableTable& vars, std::string* missing) const {
    if (kind_ == Kind::Var) {
        if (vars.index_of(name_))
            return true;
        if (missing)
            *missing = name_;
        return false;
    }
    for (const Formula& c : children_)
        if (!c.names_resolve(vars, missing))
            return false;
    return true;
}

namespace {
// Precedence: or (1) < and (2) < not (3) < atoms (4).
int precedence(Formula::Kind k) {
    switch (k) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    case Formula::Kind::Not: return 3;
    default: return 4;
    }
}
}  // namespace

void Formula::print(std::string& out, int parent_precedence) const {
    int prec = precedence(kind_);
    bool parens = prec < parent_precedence;
    if (parens)
        out += '(';
    switch (kind_) {
    case Kind::Const:
        out += value_ ? "true" : "false";
        break;
    case Kind::Var:
        out += name_;
        break;
    case Kind::Not:
        out += '!';
        children_[0].print(out, prec + 1);
        break;
    case Kind::And:
    case Kind::Or: {
        const char* sep = kind_ == Kind::And ? " & " : " | ";
        for (size_t i = 0; i < children_.size(); ++i) {
            if (i)
                out += sep;
            children_[i].print(out, prec);
        }
        break;
    }
    }
    if (parens)
        out += ')';
}

std::string Formula::to_string() const {
    std::string out;
    print(out, 0);
    return out;
}

bool operator==(const Formula& a, const Formula& b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_ && a.name_ == b.name_ &&
           a.children_ == b.children_;
}

}  // namespace ppeval
