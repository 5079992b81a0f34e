#ifndef PPEVAL_FORMULA_HPP
#define PPEVAL_FORMULA_HPP

#include <string>
#include <vector>

#include "ppeval/state.hpp"

namespace ppeval {

// Boolean condition over named state variables. Used for goal conditions,
// PSO case guards, and controller observation rules. Evaluation resolves
// names through the domain's variable table, so formulas can be parsed
// independently of any particular domain.
class Formula {
public:
    enum class Kind { Const, Var, Not, And, Or };

    static Formula constant(bool value);
    static Formula var(std::string name);
    static Formula negation(Formula f);
    static Formula conjunction(std::vector<Formula> children);
    static Formula disjunction(std::vector<Formula> children);

    Formula() : kind_(Kind::Const), value_(false) {}

    Kind kind() const { return kind_; }
    bool const_value() const { return value_; }
    const std::string& var_name() const { return name_; }
    const std::vector<Formula>& children() const { return children_; }

    bool is_const_true() const { return kind_ == Kind::Const && value_; }

    // Throws Error if the formula references a variable the table lacks.
    bool eval(const State& s, const VariableTable& vars) const;

    // Every variable name referenced exists in the table.
    bool names_resolve(const VariableTable& vars, std::string* missing = nullptr) const;

    std::string to_string() const;

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
    Kind kind_;
    bool value_ = false;
    std::string name_;
    std::vector<Formula> children_;

    void print(std::string& out, int parent_precedence) const;
};

}  // namespace ppeval

#endif
