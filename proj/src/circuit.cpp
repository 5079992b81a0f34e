#include "ppeval/circuit.hpp"

#include <algorithm>

#include "ppeval/errors.hpp"

namespace ppeval {

const char* gate_kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::Const0: return "CONST0";
    case GateKind::Const1: return "CONST1";
    case GateKind::InputBefore: return "INPUT_BEFORE";
    case GateKind::InputAfter: return "INPUT_AFTER";
    case GateKind::Not: return "NOT";
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    case GateKind::Xor: return "XOR";
    }
    return "?";
}

ValidationReport validate_circuit(const TransitionCircuit& circuit) {
    ValidationReport report;
    auto context = [&](int pos) {
        const std::string& id = circuit.gates[pos].id;
        return "gate " + (id.empty() ? "#" + std::to_string(pos) : id);
    };
    for (int pos = 0; pos < static_cast<int>(circuit.gates.size()); ++pos) {
        const Gate& g = circuit.gates[pos];
        size_t arity = g.inputs.size();
        switch (g.kind) {
        case GateKind::Const0:
        case GateKind::Const1:
            if (arity != 0)
                report.add(context(pos), "constant gate takes no inputs");
            break;
        case GateKind::InputBefore:
            if (arity != 0)
                report.add(context(pos), "input gate takes no gate inputs");
            if (g.input_index < 0 || g.input_index >= circuit.before_width)
                report.add(context(pos), "before-input index " + std::to_string(g.input_index) +
                                             " out of range [0," +
                                             std::to_string(circuit.before_width) + ")");
            break;
        case GateKind::InputAfter:
            if (arity != 0)
                report.add(context(pos), "input gate takes no gate inputs");
            if (g.input_index < 0 || g.input_index >= circuit.after_width)
                report.add(context(pos), "after-input index " + std::to_string(g.input_index) +
                                             " out of range [0," +
                                             std::to_string(circuit.after_width) + ")");
            break;
        case GateKind::Not:
            if (arity != 1)
                report.add(context(pos), "NOT takes exactly 1 input, has " + std::to_string(arity));
            break;
        case GateKind::And:
        case GateKind::Or:
        case GateKind::Xor:
            if (arity < 2)
                report.add(context(pos), std::string(gate_kind_name(g.kind)) +
                                             " takes at least 2 inputs, has " +
                                             std::to_string(arity));
            break;
        }
        for (int in : g.inputs) {
            if (in < 0 || in >= pos)
                report.add(context(pos),
                           "references gate #" + std::to_string(in) +
                               (in >= pos ? " which is not defined earlier" : " (negative)"));
        }
    }
    if (circuit.output_bits.empty())
        report.add("outputs", "circuit must declare at least one output bit");
    for (int out : circuit.output_bits) {
        if (out < 0 || out >= static_cast<int>(circuit.gates.size()))
            report.add("outputs", "output references undefined gate #" + std::to_string(out));
    }
    return report;
}

namespace {

void check_widths(const TransitionCircuit& c, const State& before, const State& after) {
    if (before.width() != c.before_width || after.width() != c.after_width)
        throw Error("state width mismatch: circuit expects before=" +
                    std::to_string(c.before_width) + " after=" + std::to_string(c.after_width) +
                    ", got before=" + std::to_string(before.width()) +
                    " after=" + std::to_string(after.width()));
}

Rational bits_to_rational(const std::vector<bool>& bits) {
    if (bits.empty())
        throw Error("circuit has no output bits");
    // Bit j weighs 2^-j: value = (sum bits[j] << (m-1-j)) / 2^(m-1).
    unsigned frac = static_cast<unsigned>(bits.size() - 1);
    mpz_class num = 0;
    for (size_t j = 0; j < bits.size(); ++j)
        if (bits[j])
            mpz_setbit(num.get_mpz_t(), frac - static_cast<unsigned>(j));
    return Rational::dyadic(num, frac);
}

}  // namespace

Rational eval_circuit(const TransitionCircuit& circuit, const State& before, const State& after) {
    check_widths(circuit, before, after);
    std::vector<std::uint8_t> val(circuit.gates.size());
    for (size_t pos = 0; pos < circuit.gates.size(); ++pos) {
        const Gate& g = circuit.gates[pos];
        std::uint8_t v = 0;
        switch (g.kind) {
        case GateKind::Const0: v = 0; break;
        case GateKind::Const1: v = 1; break;
        case GateKind::InputBefore: v = before.get(g.input_index); break;
        case GateKind::InputAfter: v = after.get(g.input_index); break;
        case GateKind::Not: v = !val[g.inputs[0]]; break;
        case GateKind::And:
            v = 1;
            for (int in : g.inputs)
                v &= val[in];
            break;
        case GateKind::Or:
            v = 0;
            for (int in : g.inputs)
                v |= val[in];
            break;
        case GateKind::Xor:
            v = 0;
            for (int in : g.inputs)
                v ^= val[in];
            break;
        }
        val[pos] = v;
    }
    std::vector<bool> bits;
    bits.reserve(circuit.output_bits.size());
    for (int out : circuit.output_bits)
        bits.push_back(val[out]);
    return bits_to_rational(bits);
}

CircuitEvaluator::CircuitEvaluator(const TransitionCircuit& circuit) : circuit_(circuit) {
    ValidationReport report = validate_circuit(circuit);
    if (!report.ok())
        throw Error("invalid circuit '" + circuit.name + "': " + report.to_string());
    folded_.assign(circuit_.gates.size(), -1);
    scratch_.assign(circuit_.gates.size(), 0);
}

void CircuitEvaluator::bind_before(const State& before) {
    if (before.width() != circuit_.before_width)
        throw Error("state width mismatch binding circuit '" + circuit_.name + "'");
    bound_ = true;
    before_ = before;
    live_.clear();

    // Needed cone of the outputs; everything else stays unevaluated.
    std::vector<std::uint8_t> needed(circuit_.gates.size(), 0);
    for (int out : circuit_.output_bits)
        needed[out] = 1;
    for (int pos = static_cast<int>(circuit_.gates.size()) - 1; pos >= 0; --pos) {
        if (!needed[pos])
            continue;
        for (int in : circuit_.gates[pos].inputs)
            needed[in] = 1;
    }

    for (size_t pos = 0; pos < circuit_.gates.size(); ++pos) {
        if (!needed[pos]) {
            folded_[pos] = 0;  // value irrelevant; keep it constant
            continue;
        }
        const Gate& g = circuit_.gates[pos];
        std::int8_t v = -1;
        LiveOp op;
        op.kind = g.kind;
        op.gate = static_cast<int>(pos);
        op.input_index = g.input_index;
        op.parity_flip = false;
        switch (g.kind) {
        case GateKind::Const0: v = 0; break;
        case GateKind::Const1: v = 1; break;
        case GateKind::InputBefore: v = before.get(g.input_index) ? 1 : 0; break;
        case GateKind::InputAfter: v = -1; break;
        case GateKind::Not: {
            std::int8_t in = folded_[g.inputs[0]];
            if (in >= 0)
                v = static_cast<std::int8_t>(1 - in);
            else
                op.operands.push_back(g.inputs[0]);
            break;
        }
        case GateKind::And: {
            bool have_depends = false;
            v = 1;
            for (int in : g.inputs) {
                std::int8_t f = folded_[in];
                if (f == 0) {
                    v = 0;
                    have_depends = false;
                    op.operands.clear();
                    break;
                }
                if (f < 0) {
                    have_depends = true;
                    op.operands.push_back(in);
                }
            }
            if (have_depends)
                v = -1;
            break;
        }
        case GateKind::Or: {
            bool have_depends = false;
            v = 0;
            for (int in : g.inputs) {
                std::int8_t f = folded_[in];
                if (f == 1) {
                    v = 1;
                    have_depends = false;
                    op.operands.clear();
                    break;
                }
                if (f < 0) {
                    have_depends = true;
                    op.operands.push_back(in);
                }
            }
            if (have_depends)
                v = -1;
            break;
        }
        case GateKind::Xor: {
            bool parity = false;
            for (int in : g.inputs) {
                std::int8_t f = folded_[in];
                if (f >= 0)
                    parity ^= (f == 1);
                else
                    op.operands.push_back(in);
            }
            if (op.operands.empty())
                v = parity ? 1 : 0;
            else
                op.parity_flip = parity;
            break;
        }
        }
        folded_[pos] = v;
        if (v < 0)
            live_.push_back(std::move(op));
    }
}

bool CircuitEvaluator::eval_after_dyadic(const State& after, std::uint64_t* num,
                                         unsigned* frac) const {
    if (!bound_)
        throw Error("CircuitEvaluator: eval_after before bind_before");
    if (after.width() != circuit_.after_width)
        throw Error("state width mismatch evaluating circuit '" + circuit_.name + "'");
    if (circuit_.output_bits.size() > 64)
        return false;

    for (const LiveOp& op : live_) {
        std::uint8_t v = 0;
        switch (op.kind) {
        case GateKind::InputAfter:
            v = after.get(op.input_index);
            break;
        case GateKind::Not:
            v = !scratch_read(op.operands[0]);
            break;
        case GateKind::And:
            v = 1;
            for (int in : op.operands)
                v &= scratch_read(in);
            break;
        case GateKind::Or:
            v = 0;
            for (int in : op.operands)
                v |= scratch_read(in);
            break;
        case GateKind::Xor:
            v = op.parity_flip ? 1 : 0;
            for (int in : op.operands)
                v ^= scratch_read(in);
            break;
        default:
            break;  // constants never stay live
        }
        scratch_[op.gate] = v;
    }

    unsigned m = static_cast<unsigned>(circuit_.output_bits.size());
    std::uint64_t acc = 0;
    for (unsigned j = 0; j < m; ++j) {
        int out = circuit_.output_bits[j];
        std::uint8_t bit = folded_[out] >= 0 ? static_cast<std::uint8_t>(folded_[out])
                                             : scratch_[out];
        if (bit)
            acc |= std::uint64_t{1} << (m - 1 - j);
    }
    *num = acc;
    *frac = m - 1;
    return true;
}

Rational CircuitEvaluator::eval_after(const State& after) const {
    std::uint64_t num;
    unsigned frac;
    if (eval_after_dyadic(after, &num, &frac))
        return Rational::dyadic(mpz_class(static_cast<unsigned long>(num)), frac);
    // Wide-output fallback: plain full evaluation.
    return eval_circuit(circuit_, before_, after);
}

TransitionCircuit make_chain_circuit(int width, int gate_count) {
    TransitionCircuit c;
    c.name = "chain";
    c.before_width = width;
    c.after_width = width;
    c.gates.reserve(gate_count);
    Gate in;
    in.kind = GateKind::InputAfter;
    in.input_index = 0;
    in.id = "g0";
    c.gates.push_back(in);
    for (int pos = 1; pos < gate_count; ++pos) {
        Gate g;
        if (pos % 17 == 0 && pos >= 2) {
            g.kind = GateKind::Xor;
            g.inputs = {pos - 1, pos / 2};
        } else {
            g.kind = GateKind::Not;
            g.inputs = {pos - 1};
        }
        g.id = "g" + std::to_string(pos);
        c.gates.push_back(std::move(g));
    }
    c.output_bits = {gate_count - 1};
    return c;
}

// ---- CircuitBuilder ----

CircuitBuilder::CircuitBuilder(int before_width, int after_width) {
    circuit_.before_width = before_width;
    circuit_.after_width = after_width;
    before_gates_.assign(before_width, -1);
    after_gates_.assign(after_width, -1);
}

int CircuitBuilder::push(Gate g) {
    int pos = static_cast<int>(circuit_.gates.size());
    g.id = "g" + std::to_string(pos);
    circuit_.gates.push_back(std::move(g));
    not_cache_.push_back(-1);
    return pos;
}

int CircuitBuilder::const0() {
    if (const0_ < 0)
        const0_ = push({GateKind::Const0, -1, {}, {}});
    return const0_;
}

int CircuitBuilder::const1() {
    if (const1_ < 0)
        const1_ = push({GateKind::Const1, -1, {}, {}});
    return const1_;
}

int CircuitBuilder::input_before(int i) {
    if (before_gates_[i] < 0)
        before_gates_[i] = push({GateKind::InputBefore, i, {}, {}});
    return before_gates_[i];
}

int CircuitBuilder::input_after(int i) {
    if (after_gates_[i] < 0)
        after_gates_[i] = push({GateKind::InputAfter, i, {}, {}});
    return after_gates_[i];
}

int CircuitBuilder::lnot(int input) {
    if (input == const0_ && const0_ >= 0)
        return const1();
    if (input == const1_ && const1_ >= 0)
        return const0();
    if (circuit_.gates[input].kind == GateKind::Not)
        return circuit_.gates[input].inputs[0];
    if (not_cache_[input] < 0)
        not_cache_[input] = push({GateKind::Not, -1, {input}, {}});
    return not_cache_[input];
}

int CircuitBuilder::land(std::vector<int> inputs) {
    std::vector<int> kept;
    for (int in : inputs) {
        if (const0_ >= 0 && in == const0_)
            return const0();
        if (const1_ >= 0 && in == const1_)
            continue;
        kept.push_back(in);
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.empty())
        return const1();
    if (kept.size() == 1)
        return kept[0];
    return push({GateKind::And, -1, std::move(kept), {}});
}

int CircuitBuilder::lor(std::vector<int> inputs) {
    std::vector<int> kept;
    for (int in : inputs) {
        if (const1_ >= 0 && in == const1_)
            return const1();
        if (const0_ >= 0 && in == const0_)
            continue;
        kept.push_back(in);
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.empty())
        return const0();
    if (kept.size() == 1)
        return kept[0];
    return push({GateKind::Or, -1, std::move(kept), {}});
}

int CircuitBuilder::lxor(int a, int b) {
    if (a == b)
        return const0();
    if (const0_ >= 0 && a == const0_)
        return b;
    if (const0_ >= 0 && b == const0_)
        return a;
    if (const1_ >= 0 && a == const1_)
        return lnot(b);
    if (const1_ >= 0 && b == const1_)
        return lnot(a);
    if (a > b)
        std::swap(a, b);
    return push({GateKind::Xor, -1, {a, b}, {}});
}

std::pair<int, std::vector<int>> CircuitBuilder::add_bits(const std::vector<int>& a,
                                                          const std::vector<int>& b) {
    if (a.size() != b.size())
        throw Error("add_bits: operand width mismatch");
    std::vector<int> sum(a.size());
    int carry = const0();
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        int half = lxor(a[i], b[i]);
        sum[i] = lxor(half, carry);
        carry = lor({land({a[i], b[i]}), land({half, carry})});
    }
    return {carry, std::move(sum)};
}

TransitionCircuit CircuitBuilder::build(std::vector<int> output_bits, std::string name) {
    TransitionCircuit out = std::move(circuit_);
    out.output_bits = std::move(output_bits);
    out.name = std::move(name);
    return out;
}

}  // namespace ppeval
