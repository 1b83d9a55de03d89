#include "pdp/scenario.hpp"

#include <algorithm>
#include <set>

namespace pdp {

Scenario::Scenario(std::vector<std::string> parties,
                   std::vector<std::vector<std::string>> inputs,
                   std::vector<std::vector<std::vector<std::string>>> outputs)
    : parties_(std::move(parties)), inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
    validate();
    build_layout();
}

Scenario Scenario::uniform(std::size_t n_parties, std::size_t n_inputs, std::size_t n_outputs) {
    std::vector<std::string> parties;
    std::vector<std::vector<std::string>> inputs;
    std::vector<std::vector<std::vector<std::string>>> outputs;
    for (std::size_t i = 0; i < n_parties; ++i) {
        parties.push_back("P" + std::to_string(i + 1));
        std::vector<std::string> ins;
        std::vector<std::vector<std::string>> outs;
        for (std::size_t x = 0; x < n_inputs; ++x) {
            ins.push_back("x" + std::to_string(x + 1));
            std::vector<std::string> o;
            for (std::size_t a = 0; a < n_outputs; ++a) o.push_back("a" + std::to_string(a + 1));
            outs.push_back(std::move(o));
        }
        inputs.push_back(std::move(ins));
        outputs.push_back(std::move(outs));
    }
    return Scenario(std::move(parties), std::move(inputs), std::move(outputs));
}

void Scenario::validate() const {
    if (parties_.empty()) throw ValidationError("scenario needs at least one party");
    if (inputs_.size() != parties_.size() || outputs_.size() != parties_.size())
        throw ValidationError("inputs/outputs shape does not match party list");
    std::set<std::string> party_names(parties_.begin(), parties_.end());
    if (party_names.size() != parties_.size()) throw ValidationError("duplicate party identifier");
    for (std::size_t i = 0; i < parties_.size(); ++i) {
        if (inputs_[i].empty()) throw ValidationError("party '" + parties_[i] + "' has no inputs");
        if (inputs_[i].size() > 31)
            throw ValidationError("party '" + parties_[i] + "' exceeds the 31-input limit");
        std::set<std::string> in_names(inputs_[i].begin(), inputs_[i].end());
        if (in_names.size() != inputs_[i].size())
            throw ValidationError("duplicate input identifier for party '" + parties_[i] + "'");
        if (outputs_[i].size() != inputs_[i].size())
            throw ValidationError("outputs shape mismatch for party '" + parties_[i] + "'");
        for (std::size_t x = 0; x < inputs_[i].size(); ++x) {
            if (outputs_[i][x].empty())
                throw ValidationError("input '" + inputs_[i][x] + "' of party '" + parties_[i] +
                                      "' has no outputs");
            std::set<std::string> out_names(outputs_[i][x].begin(), outputs_[i][x].end());
            if (out_names.size() != outputs_[i][x].size())
                throw ValidationError("duplicate output identifier under input '" + inputs_[i][x] + "'");
        }
    }
}

void Scenario::build_layout() {
    const std::size_t n = parties_.size();
    std::size_t n_contexts = 1;
    for (std::size_t i = 0; i < n; ++i) n_contexts *= inputs_[i].size();

    contexts_.reserve(n_contexts);
    std::vector<std::size_t> cur(n, 0);
    for (std::size_t c = 0; c < n_contexts; ++c) {
        contexts_.push_back(cur);
        for (std::size_t i = n; i-- > 0;) {
            if (++cur[i] < inputs_[i].size()) break;
            cur[i] = 0;
        }
    }
    offsets_.resize(n_contexts);
    outcome_counts_.resize(n_contexts);
    total_coords_ = 0;
    for (std::size_t c = 0; c < n_contexts; ++c) {
        offsets_[c] = total_coords_;
        std::size_t m = 1;
        for (std::size_t i = 0; i < n; ++i) m *= outputs_[i][contexts_[c][i]].size();
        outcome_counts_[c] = m;
        total_coords_ += m;
    }
}

std::size_t Scenario::party_index(const std::string& name) const {
    auto it = std::find(parties_.begin(), parties_.end(), name);
    if (it == parties_.end()) throw ValidationError("unknown party '" + name + "'");
    return static_cast<std::size_t>(it - parties_.begin());
}

std::size_t Scenario::input_index(std::size_t party, const std::string& name) const {
    const auto& ins = inputs_[party];
    auto it = std::find(ins.begin(), ins.end(), name);
    if (it == ins.end())
        throw ValidationError("unknown input '" + name + "' for party '" + parties_[party] + "'");
    return static_cast<std::size_t>(it - ins.begin());
}

bool Scenario::nontrivial() const {
    for (std::size_t i = 0; i < parties_.size(); ++i) {
        if (inputs_[i].size() < 2) return false;
        for (std::size_t x = 0; x < inputs_[i].size(); ++x)
            if (outputs_[i][x].size() < 2) return false;
    }
    return true;
}

std::size_t Scenario::context_of(const std::vector<std::size_t>& joint_input) const {
    if (joint_input.size() != parties_.size()) throw ValidationError("context arity mismatch");
    std::size_t c = 0;
    for (std::size_t i = 0; i < joint_input.size(); ++i) {
        if (joint_input[i] >= inputs_[i].size()) throw ValidationError("input index out of range");
        c = c * inputs_[i].size() + joint_input[i];
    }
    return c;
}

std::size_t Scenario::outcome_component(std::size_t c, std::size_t t, std::size_t i) const {
    const auto& ctx = contexts_[c];
    std::size_t rem = t;
    for (std::size_t j = parties_.size(); j-- > 0;) {
        const std::size_t radix = outputs_[j][ctx[j]].size();
        if (j == i) return rem % radix;
        rem /= radix;
    }
    throw ValidationError("party index out of range");
}

std::size_t Scenario::outcome_of(std::size_t c, const std::vector<std::size_t>& components) const {
    const auto& ctx = contexts_[c];
    std::size_t t = 0;
    for (std::size_t i = 0; i < parties_.size(); ++i) {
        const std::size_t radix = outputs_[i][ctx[i]].size();
        if (components[i] >= radix) throw ValidationError("outcome index out of range");
        t = t * radix + components[i];
    }
    return t;
}

Int Scenario::pironio_dimension() const {
    // D = sum over nonempty party subsets V of prod_{i in V} sum_{x_i} (|O_{x_i}| - 1),
    // computed as prod_i (1 + s_i) - 1 with s_i the per-party sum.
    Int prod = 1;
    for (std::size_t i = 0; i < parties_.size(); ++i) {
        Int s = 0;
        for (std::size_t x = 0; x < inputs_[i].size(); ++x)
            s += Int(outputs_[i][x].size()) - 1;
        prod *= (s + 1);
    }
    return prod - 1;
}

bool Scenario::operator==(const Scenario& other) const {
    return parties_ == other.parties_ && inputs_ == other.inputs_ && outputs_ == other.outputs_;
}

InputCollection InputCollection::empty(const Scenario& s) {
    return InputCollection(std::vector<std::uint32_t>(s.party_count(), 0));
}

InputCollection InputCollection::full(const Scenario& s) {
    std::vector<std::uint32_t> m(s.party_count());
    for (std::size_t i = 0; i < s.party_count(); ++i)
        m[i] = (s.input_count(i) >= 32) ? ~0u : ((1u << s.input_count(i)) - 1u);
    return InputCollection(std::move(m));
}

InputCollection InputCollection::party_block(const Scenario& s, const std::vector<std::size_t>& parties) {
    auto coll = InputCollection::empty(s);
    for (std::size_t i : parties) {
        if (i >= s.party_count()) throw ValidationError("party index out of range");
        coll.masks_[i] = (1u << s.input_count(i)) - 1u;
    }
    return coll;
}

void InputCollection::validate(const Scenario& s) const {
    if (masks_.size() != s.party_count())
        throw ValidationError("input collection party count mismatch");
    for (std::size_t i = 0; i < masks_.size(); ++i) {
        const std::uint32_t all = (1u << s.input_count(i)) - 1u;
        if (masks_[i] & ~all) throw ValidationError("input collection selects unknown input");
    }
}

std::size_t InputCollection::count(std::size_t party) const {
    return static_cast<std::size_t>(__builtin_popcount(masks_[party]));
}

bool InputCollection::is_empty() const {
    for (auto m : masks_)
        if (m) return false;
    return true;
}

bool InputCollection::is_full(const Scenario& s) const {
    for (std::size_t i = 0; i < masks_.size(); ++i)
        if (masks_[i] != ((1u << s.input_count(i)) - 1u)) return false;
    return true;
}

bool InputCollection::subset_of(const InputCollection& other) const {
    if (masks_.size() != other.masks_.size()) throw ValidationError("collection size mismatch");
    for (std::size_t i = 0; i < masks_.size(); ++i)
        if (masks_[i] & ~other.masks_[i]) return false;
    return true;
}

std::vector<std::size_t> InputCollection::selected(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < 32; ++x)
        if ((masks_[i] >> x) & 1u) out.push_back(x);
    return out;
}

InputCollection InputCollection::intersect(const InputCollection& other) const {
    if (masks_.size() != other.masks_.size()) throw ValidationError("collection size mismatch");
    std::vector<std::uint32_t> m(masks_.size());
    for (std::size_t i = 0; i < masks_.size(); ++i) m[i] = masks_[i] & other.masks_[i];
    return InputCollection(std::move(m));
}

InputCollection InputCollection::unite(const InputCollection& other) const {
    if (masks_.size() != other.masks_.size()) throw ValidationError("collection size mismatch");
    std::vector<std::uint32_t> m(masks_.size());
    for (std::size_t i = 0; i < masks_.size(); ++i) m[i] = masks_[i] | other.masks_[i];
    return InputCollection(std::move(m));
}

ContextPartition context_partition(const Scenario& s, const InputCollection& coll, std::size_t context) {
    coll.validate(s);
    ContextPartition p;
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        if (coll.contains(i, s.context_input(context, i)))
            p.predictable.push_back(i);
        else
            p.free.push_back(i);
    }
    return p;
}

Scenario restrict_scenario(const Scenario& s, const InputCollection& coll) {
    coll.validate(s);
    if (coll.is_empty()) throw ValidationError("empty restriction");
    std::vector<std::string> parties;
    std::vector<std::vector<std::string>> inputs;
    std::vector<std::vector<std::vector<std::string>>> outputs;
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        if (coll.party_empty(i)) continue;
        parties.push_back(s.party(i));
        std::vector<std::string> ins;
        std::vector<std::vector<std::string>> outs;
        for (std::size_t x : coll.selected(i)) {
            ins.push_back(s.inputs(i)[x]);
            outs.push_back(s.outputs(i, x));
        }
        inputs.push_back(std::move(ins));
        outputs.push_back(std::move(outs));
    }
    return Scenario(std::move(parties), std::move(inputs), std::move(outputs));
}

InputCollection complement(const Scenario& s, const InputCollection& coll) {
    coll.validate(s);
    std::vector<std::uint32_t> m(s.party_count());
    for (std::size_t i = 0; i < s.party_count(); ++i)
        m[i] = ((1u << s.input_count(i)) - 1u) & ~coll.mask(i);
    return InputCollection(std::move(m));
}

std::pair<std::optional<Scenario>, std::optional<Scenario>> bipartition(const Scenario& s,
                                                                        const InputCollection& coll) {
    coll.validate(s);
    const InputCollection comp = complement(s, coll);
    std::optional<Scenario> first, second;
    if (!coll.is_empty()) first = restrict_scenario(s, coll);
    if (!comp.is_empty()) second = restrict_scenario(s, comp);
    return {std::move(first), std::move(second)};
}

std::size_t collection_count(const Scenario& s) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        if (s.input_count(i) >= 8 * sizeof(std::size_t))
            throw BudgetExceeded("collection count overflow");
        n *= (std::size_t{1} << s.input_count(i));
    }
    return n;
}

void all_collections(const Scenario& s, bool include_trivial,
                     const std::function<void(const InputCollection&)>& visit) {
    const std::size_t n = s.party_count();
    std::vector<std::uint32_t> masks(n, 0);
    const auto total = collection_count(s);
    for (std::size_t k = 0; k < total; ++k) {
        InputCollection coll{std::vector<std::uint32_t>(masks)};
        if (include_trivial || (!coll.is_empty() && !coll.is_full(s))) visit(coll);
        for (std::size_t i = n; i-- > 0;) {
            if (++masks[i] <= ((1u << s.input_count(i)) - 1u)) break;
            masks[i] = 0;
        }
    }
}

InputCollection project_collection(const Scenario& s, const InputCollection& outer,
                                   const InputCollection& coll) {
    outer.validate(s);
    coll.validate(s);
    if (!coll.subset_of(outer)) throw ValidationError("collection not inside the restricted scenario");
    std::vector<std::uint32_t> m;
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        if (outer.party_empty(i)) continue;
        std::uint32_t bits = 0;
        std::size_t pos = 0;
        for (std::size_t x : outer.selected(i)) {
            if (coll.contains(i, x)) bits |= (1u << pos);
            ++pos;
        }
        m.push_back(bits);
    }
    return InputCollection(std::move(m));
}

}  // namespace pdp
