#ifndef PPEVAL_CIRCUIT_HPP
#define PPEVAL_CIRCUIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ppeval/rational.hpp"
#include "ppeval/report.hpp"
#include "ppeval/state.hpp"

namespace ppeval {

enum class GateKind : std::uint8_t {
    Const0,
    Const1,
    InputBefore,
    InputAfter,
    Not,
    And,
    Or,
    Xor,
};

const char* gate_kind_name(GateKind kind);

struct Gate {
    GateKind kind;
    int input_index = -1;     // InputBefore / InputAfter only
    std::vector<int> inputs;  // positions of earlier gates
    std::string id;           // textual id, preserved across parse/print

    friend bool operator==(const Gate& a, const Gate& b) {
        return a.kind == b.kind && a.input_index == b.input_index && a.inputs == b.inputs &&
               a.id == b.id;
    }
};

// Gate-level encoding of one action's transition probability function
// t(s, a, s'): the gates read bits of the before and after states and the
// designated output gates spell the probability in fixed-point binary.
// Output bit j (0-based list position) carries weight 2^-j, so the first
// output bit is the ones bit and a circuit can express probability 1 exactly.
struct TransitionCircuit {
    std::string name;
    int before_width = 0;
    int after_width = 0;
    std::vector<Gate> gates;       // topological: inputs reference earlier positions
    std::vector<int> output_bits;  // gate positions; size m >= 1

    unsigned fraction_bits() const {
        return output_bits.empty() ? 0 : static_cast<unsigned>(output_bits.size() - 1);
    }

    friend bool operator==(const TransitionCircuit& a, const TransitionCircuit& b) {
        return a.name == b.name && a.before_width == b.before_width &&
               a.after_width == b.after_width && a.gates == b.gates &&
               a.output_bits == b.output_bits;
    }
};

// Structural checks: reference order (acyclicity), arity, input index bounds,
// output bit count. Defects are reported, never thrown.
ValidationReport validate_circuit(const TransitionCircuit& circuit);

// Single-shot exact evaluation.
Rational eval_circuit(const TransitionCircuit& circuit, const State& before, const State& after);

// Evaluator for enumerating many after-states against one before-state.
// bind_before() folds the cone that depends only on before bits to constants,
// so each eval_after() touches only the surviving after-dependent gates.
class CircuitEvaluator {
public:
    explicit CircuitEvaluator(const TransitionCircuit& circuit);

    void bind_before(const State& before);

    // Fast path: value as num / 2^frac with num guaranteed to fit 64 bits
    // (requires fraction_bits <= 63). Returns false when it does not apply.
    bool eval_after_dyadic(const State& after, std::uint64_t* num, unsigned* frac) const;
    Rational eval_after(const State& after) const;

    Rational eval(const State& before, const State& after) {
        bind_before(before);
        return eval_after(after);
    }

    // Number of gates re-evaluated per eval_after with the current binding.
    std::size_t live_gate_count() const { return live_.size(); }

private:
    struct LiveOp {
        GateKind kind;
        int gate;                  // position (also the value slot)
        int input_index;           // InputAfter
        bool parity_flip;          // folded Xor constants
        std::vector<int> operands; // positions of non-constant inputs
    };

    std::uint8_t scratch_read(int pos) const {
        return folded_[pos] >= 0 ? static_cast<std::uint8_t>(folded_[pos]) : scratch_[pos];
    }

    const TransitionCircuit& circuit_;
    State before_;
    std::vector<std::int8_t> folded_;    // 0 / 1 / -1 = depends on after bits
    std::vector<LiveOp> live_;
    mutable std::vector<std::uint8_t> scratch_;
    bool bound_ = false;
};

// Incremental construction with light simplification (constant folding,
// trivial conjunction/disjunction collapse, input dedup). Used by the PSO
// compiler and the reduction generators.
class CircuitBuilder {
public:
    CircuitBuilder(int before_width, int after_width);

    int const0();
    int const1();
    int input_before(int i);
    int input_after(int i);
    int land(std::vector<int> inputs);
    int lor(std::vector<int> inputs);
    int lnot(int input);
    int lxor(int a, int b);
    int xnor(int a, int b) { return lnot(lxor(a, b)); }
    // `gate` if value else !gate
    int literal(int gate, bool value) { return value ? gate : lnot(gate); }

    bool is_const0(int g) const { return g == const0_; }
    bool is_const1(int g) const { return g == const1_; }

    // Ripple-carry add of bit vectors indexed most-significant-first with
    // equal lengths; returns (carry_out, sum bits).
    std::pair<int, std::vector<int>> add_bits(const std::vector<int>& a,
                                              const std::vector<int>& b);

    TransitionCircuit build(std::vector<int> output_bits, std::string name);

private:
    int push(Gate g);

    TransitionCircuit circuit_;
    int const0_ = -1;
    int const1_ = -1;
    std::vector<int> before_gates_;
    std::vector<int> after_gates_;
    std::vector<int> not_cache_;
};

// Deterministic chain circuit with the requested gate count; the performance
// suite uses it to pin linear evaluation cost.
TransitionCircuit make_chain_circuit(int width, int gate_count);

}  // namespace ppeval

#endif
