#include "ppeval/domain.hpp"

#include <random>
#include <set>

#include "ppeval/errors.hpp"

namespace ppeval {

namespace {

void check_common(const VariableTable& vars, const State& initial, const Formula& goal,
                  const std::vector<std::string>& actions) {
    if (initial.width() != vars.size())
        throw Error("initial state width " + std::to_string(initial.width()) +
                    " does not match variable count " + std::to_string(vars.size()));
    std::string missing;
    if (!goal.names_resolve(vars, &missing))
        throw Error("goal references unknown variable '" + missing + "'");
    std::set<std::string> seen;
    for (const std::string& a : actions)
        if (!seen.insert(a).second)
            throw Error("duplicate action name '" + a + "'");
}

}  // namespace

State apply_effect(const State& s, const Effect& effect, const VariableTable& vars) {
    State out = s;
    for (const auto& [name, value] : effect) {
        auto idx = vars.index_of(name);
        if (!idx)
            throw Error("effect references unknown variable '" + name + "'");
        out.set(*idx, value);
    }
    return out;
}

PlanningDomain::PlanningDomain(std::string name, VariableTable variables, State initial,
                               Formula goal, std::vector<PsoOperator> operators)
    : name_(std::move(name)),
      vars_(std::move(variables)),
      initial_(std::move(initial)),
      goal_(std::move(goal)),
      backend_(BackendKind::Pso),
      pso_(std::move(operators)) {
    for (const PsoOperator& op : pso_)
        actions_.push_back(op.name);
    check_common(vars_, initial_, goal_, actions_);
    for (const PsoOperator& op : pso_) {
        if (op.cases.empty() || !op.cases.back().condition.is_const_true())
            throw Error("operator '" + op.name + "' must end with a catch-all \"true\" case");
        for (const PsoCase& c : op.cases) {
            std::string missing;
            if (!c.condition.names_resolve(vars_, &missing))
                throw Error("operator '" + op.name + "' condition references unknown variable '" +
                            missing + "'");
            for (const PsoOutcome& o : c.outcomes)
                for (const auto& [var, value] : o.effect) {
                    (void)value;
                    if (!vars_.index_of(var))
                        throw Error("operator '" + op.name +
                                    "' effect references unknown variable '" + var + "'");
                }
        }
    }
}

PlanningDomain::PlanningDomain(std::string name, VariableTable variables, State initial,
                               Formula goal, std::vector<std::string> action_names,
                               std::vector<TransitionCircuit> circuits)
    : name_(std::move(name)),
      vars_(std::move(variables)),
      initial_(std::move(initial)),
      goal_(std::move(goal)),
      actions_(std::move(action_names)),
      backend_(BackendKind::Circuit),
      circuits_(std::move(circuits)) {
    check_common(vars_, initial_, goal_, actions_);
    if (circuits_.size() != actions_.size())
        throw Error("circuit backend needs one circuit per action");
    for (const TransitionCircuit& c : circuits_) {
        if (c.before_width != vars_.size() || c.after_width != vars_.size())
            throw Error("circuit '" + c.name + "' width does not match the variable count");
        ValidationReport report = validate_circuit(c);
        if (!report.ok())
            throw Error("circuit '" + c.name + "' is malformed: " + report.to_string());
    }
}

PlanningDomain::PlanningDomain(std::string name, VariableTable variables, State initial,
                               Formula goal, std::vector<FlatAction> table)
    : name_(std::move(name)),
      vars_(std::move(variables)),
      initial_(std::move(initial)),
      goal_(std::move(goal)),
      backend_(BackendKind::Flat),
      flat_(std::move(table)) {
    for (const FlatAction& a : flat_)
        actions_.push_back(a.name);
    check_common(vars_, initial_, goal_, actions_);
    if (vars_.size() > 63)
        throw Error("flat backend supports at most 63 variables");
    std::uint64_t limit = std::uint64_t{1} << vars_.size();
    for (FlatAction& a : flat_)
        for (auto& [from, row] : a.rows) {
            if (from >= limit)
                throw Error("flat action '" + a.name + "' row state out of range");
            std::sort(row.begin(), row.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            for (const auto& [to, p] : row) {
                (void)p;
                if (to >= limit)
                    throw Error("flat action '" + a.name + "' successor state out of range");
            }
        }
}

int PlanningDomain::action_index(std::string_view name) const {
    for (int i = 0; i < static_cast<int>(actions_.size()); ++i)
        if (actions_[i] == name)
            return i;
    throw Error("unknown action '" + std::string(name) + "'");
}

const std::vector<PsoOperator>& PlanningDomain::pso_operators() const {
    if (backend_ != BackendKind::Pso)
        throw Error("domain '" + name_ + "' has no PSO backend");
    return pso_;
}

const std::vector<TransitionCircuit>& PlanningDomain::circuits() const {
    if (backend_ != BackendKind::Circuit)
        throw Error("domain '" + name_ + "' has no circuit backend");
    return circuits_;
}

const std::vector<FlatAction>& PlanningDomain::flat_actions() const {
    if (backend_ != BackendKind::Flat)
        throw Error("domain '" + name_ + "' has no flat backend");
    return flat_;
}

void PlanningDomain::check_width(const State& s) const {
    if (s.width() != vars_.size())
        throw Error("state width " + std::to_string(s.width()) + " does not match domain '" +
                    name_ + "' width " + std::to_string(vars_.size()));
}

bool PlanningDomain::is_goal(const State& s) const {
    check_width(s);
    return goal_.eval(s, vars_);
}

Rational PlanningDomain::transition_prob(const State& s, std::string_view action,
                                         const State& next) const {
    return transition_prob(s, action_index(action), next);
}

Rational PlanningDomain::transition_prob(const State& s, int action, const State& next) const {
    check_width(s);
    check_width(next);
    switch (backend_) {
    case BackendKind::Flat: {
        const FlatAction& a = flat_[action];
        auto it = a.rows.find(s.index());
        if (it == a.rows.end())
            return Rational(0);
        for (const auto& [to, p] : it->second)
            if (to == next.index())
                return p;
        return Rational(0);
    }
    case BackendKind::Pso: {
        const PsoOperator& op = pso_[action];
        for (const PsoCase& c : op.cases) {
            if (!c.condition.eval(s, vars_))
                continue;
            Rational total(0);
            for (const PsoOutcome& o : c.outcomes)
                if (apply_effect(s, o.effect, vars_) == next)
                    total += o.probability;
            return total;
        }
        return Rational(0);  // unreachable given the catch-all invariant
    }
    case BackendKind::Circuit:
        return eval_circuit(circuits_[action], s, next);
    }
    return Rational(0);
}

std::vector<std::pair<State, Rational>> PlanningDomain::successor_distribution(
    const State& s, std::string_view action, int enumeration_cap) const {
    return successor_distribution(s, action_index(action), enumeration_cap);
}

std::vector<std::pair<State, Rational>> PlanningDomain::successor_distribution(
    const State& s, int action, int enumeration_cap) const {
    check_width(s);
    std::vector<std::pair<State, Rational>> out;
    switch (backend_) {
    case BackendKind::Flat: {
        const FlatAction& a = flat_[action];
        auto it = a.rows.find(s.index());
        if (it != a.rows.end())
            for (const auto& [to, p] : it->second)
                if (!p.is_zero())
                    out.emplace_back(State::from_index(vars_.size(), to), p);
        return out;
    }
    case BackendKind::Pso: {
        const PsoOperator& op = pso_[action];
        std::map<State, Rational> acc;
        for (const PsoCase& c : op.cases) {
            if (!c.condition.eval(s, vars_))
                continue;
            for (const PsoOutcome& o : c.outcomes)
                acc[apply_effect(s, o.effect, vars_)] += o.probability;
            break;
        }
        for (auto& [to, p] : acc)
            if (!p.is_zero())
                out.emplace_back(to, std::move(p));
        return out;
    }
    case BackendKind::Circuit: {
        if (vars_.size() > enumeration_cap)
            throw CapExceeded("successor enumeration over " + std::to_string(vars_.size()) +
                              " variables exceeds the cap of " + std::to_string(enumeration_cap));
        CircuitEvaluator eval(circuits_[action]);
        eval.bind_before(s);
        std::uint64_t count = std::uint64_t{1} << vars_.size();
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            State next = State::from_index(vars_.size(), idx);
            std::uint64_t num;
            unsigned frac;
            if (eval.eval_after_dyadic(next, &num, &frac)) {
                if (num != 0)
                    out.emplace_back(std::move(next),
                                     Rational::dyadic(mpz_class(static_cast<unsigned long>(num)),
                                                      frac));
            } else {
                Rational p = eval.eval_after(next);
                if (!p.is_zero())
                    out.emplace_back(std::move(next), std::move(p));
            }
        }
        return out;
    }
    }
    return out;
}

ValidationReport validate_domain(const PlanningDomain& domain, int enumeration_cap) {
    ValidationReport report;
    int width = domain.width();
    const Rational one(1);

    auto check_row = [&](const State& s, int action) {
        Rational sum(0);
        bool range_ok = true;
        std::vector<std::pair<State, Rational>> successors =
            domain.successor_distribution(s, action, enumeration_cap);
        for (const auto& [to, p] : successors) {
            (void)to;
            if (!p.is_probability()) {
                range_ok = false;
                Violation v;
                v.context = "state=" + s.to_bits() + " action=" + domain.action_names()[action];
                v.message = "transition probability " + p.to_string() + " outside [0,1]";
                v.state = s;
                v.action = domain.action_names()[action];
                report.violations.push_back(std::move(v));
            }
            sum += p;
        }
        if (range_ok && sum != one) {
            Violation v;
            v.context = "state=" + s.to_bits() + " action=" + domain.action_names()[action];
            v.message = "successor probabilities sum to " + sum.to_string() + ", expected 1";
            v.state = s;
            v.action = domain.action_names()[action];
            v.offending_sum = sum;
            report.violations.push_back(std::move(v));
        }
    };

    if (width <= enumeration_cap) {
        std::uint64_t count = std::uint64_t{1} << width;
        for (int action = 0; action < domain.action_count(); ++action)
            for (std::uint64_t idx = 0; idx < count; ++idx)
                check_row(State::from_index(width, idx), action);
        return report;
    }

    // Past the cap: a fixed-seed pseudo-random sample of states per action.
    report.sampled_only = true;
    std::mt19937_64 rng(42);
    constexpr int kSamples = 256;
    for (int action = 0; action < domain.action_count(); ++action) {
        for (int i = 0; i < kSamples; ++i) {
            State s(width);
            for (int b = 0; b < width; ++b)
                s.set(b, (rng() >> 17) & 1);
            if (domain.backend() == BackendKind::Circuit) {
                // Successor sums are not computable without full enumeration;
                // check a sample of pairs for range violations instead.
                State next(width);
                for (int b = 0; b < width; ++b)
                    next.set(b, (rng() >> 23) & 1);
                Rational p = domain.transition_prob(s, action, next);
                if (!p.is_probability()) {
                    Violation v;
                    v.context =
                        "state=" + s.to_bits() + " action=" + domain.action_names()[action];
                    v.message = "transition probability " + p.to_string() + " outside [0,1]";
                    v.state = s;
                    v.action = domain.action_names()[action];
                    report.violations.push_back(std::move(v));
                }
            } else {
                check_row(s, action);
            }
        }
    }
    return report;
}

}  // namespace ppeval
