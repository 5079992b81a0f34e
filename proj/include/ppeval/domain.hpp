#ifndef PPEVAL_DOMAIN_HPP
#define PPEVAL_DOMAIN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppeval/circuit.hpp"
#include "ppeval/formula.hpp"
#include "ppeval/rational.hpp"
#include "ppeval/report.hpp"
#include "ppeval/state.hpp"

namespace ppeval {

// Operations that must enumerate all 2^n candidate successors refuse to run
// past this many variables rather than approximate.
inline constexpr int kDefaultEnumerationCap = 20;

// Partial assignment applied to the variables an outcome mentions; everything
// else persists.
using Effect = std::vector<std::pair<std::string, bool>>;

struct PsoOutcome {
    Rational probability;
    Effect effect;

    friend bool operator==(const PsoOutcome& a, const PsoOutcome& b) {
        return a.probability == b.probability && a.effect == b.effect;
    }
};

struct PsoCase {
    Formula condition;
    std::vector<PsoOutcome> outcomes;

    friend bool operator==(const PsoCase& a, const PsoCase& b) {
        return a.condition == b.condition && a.outcomes == b.outcomes;
    }
};

// Condition-guarded distribution over effect lists. Cases use first-match
// semantics; the final case's condition must be the constant "true".
struct PsoOperator {
    std::string name;
    std::vector<PsoCase> cases;

    friend bool operator==(const PsoOperator& a, const PsoOperator& b) {
        return a.name == b.name && a.cases == b.cases;
    }
};

// Explicit table rows, for small test domains.
struct FlatAction {
    std::string name;
    // state index -> sorted successor rows
    std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, Rational>>> rows;

    friend bool operator==(const FlatAction& a, const FlatAction& b) {
        return a.name == b.name && a.rows == b.rows;
    }
};

enum class BackendKind { Flat, Pso, Circuit };

// M = <S, s0, A, t, G>: boolean-variable state space, named actions, one of
// three interchangeable transition backends, and a goal condition.
class PlanningDomain {
public:
    PlanningDomain(std::string name, VariableTable variables, State initial, Formula goal,
                   std::vector<PsoOperator> operators);
    PlanningDomain(std::string name, VariableTable variables, State initial, Formula goal,
                   std::vector<std::string> action_names, std::vector<TransitionCircuit> circuits);
    PlanningDomain(std::string name, VariableTable variables, State initial, Formula goal,
                   std::vector<FlatAction> table);

    const std::string& name() const { return name_; }
    const VariableTable& variables() const { return vars_; }
    int width() const { return vars_.size(); }
    const State& initial() const { return initial_; }
    const Formula& goal() const { return goal_; }
    BackendKind backend() const { return backend_; }

    const std::vector<std::string>& action_names() const { return actions_; }
    int action_count() const { return static_cast<int>(actions_.size()); }
    // Throws on unknown action name.
    int action_index(std::string_view name) const;

    const std::vector<PsoOperator>& pso_operators() const;
    const std::vector<TransitionCircuit>& circuits() const;
    const std::vector<FlatAction>& flat_actions() const;

    bool is_goal(const State& s) const;

    Rational transition_prob(const State& s, std::string_view action, const State& next) const;
    Rational transition_prob(const State& s, int action, const State& next) const;

    // All successors with nonzero probability, ordered by state. For the
    // circuit backend this enumerates 2^width candidates and refuses past
    // `enumeration_cap` variables.
    std::vector<std::pair<State, Rational>> successor_distribution(
        const State& s, std::string_view action, int enumeration_cap = kDefaultEnumerationCap) const;
    std::vector<std::pair<State, Rational>> successor_distribution(
        const State& s, int action, int enumeration_cap = kDefaultEnumerationCap) const;

private:
    void check_width(const State& s) const;

    std::string name_;
    VariableTable vars_;
    State initial_;
    Formula goal_;
    std::vector<std::string> actions_;
    BackendKind backend_;
    std::vector<PsoOperator> pso_;
    std::vector<TransitionCircuit> circuits_;
    std::vector<FlatAction> flat_;
};

State apply_effect(const State& s, const Effect& effect, const VariableTable& vars);

// Checks the stochastic-matrix property: for every (state, action) the
// successor probabilities sum to exactly 1 and each lies in [0,1]. Past the
// enumeration cap a seeded pseudo-random sample of states is checked instead
// and the report is flagged sampled_only.
ValidationReport validate_domain(const PlanningDomain& domain,
                                 int enumeration_cap = kDefaultEnumerationCap);

}  // namespace ppeval

#endif
