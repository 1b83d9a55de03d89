#ifndef PDP_SCENARIO_HPP
#define PDP_SCENARIO_HPP

#include "pdp/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pdp {

/// A correlation scenario: ordered parties, per-party ordered inputs, per-input
/// ordered outputs.  The declared orders define the canonical coordinate
/// layout: contexts are enumerated in mixed-radix order with the last party's
/// input varying fastest, and outcome tuples within a context likewise with
/// the last party's outcome varying fastest.
class Scenario {
  public:
    Scenario(std::vector<std::string> parties,
             std::vector<std::vector<std::string>> inputs,
             std::vector<std::vector<std::vector<std::string>>> outputs);

    /// Uniform scenario: n parties, m inputs each, k outputs each, with
    /// generated identifiers P1..Pn / x1..xm / a1..ak.
    static Scenario uniform(std::size_t n_parties, std::size_t n_inputs, std::size_t n_outputs);

    std::size_t party_count() const { return parties_.size(); }
    const std::vector<std::string>& parties() const { return parties_; }
    const std::string& party(std::size_t i) const { return parties_[i]; }
    std::size_t input_count(std::size_t i) const { return inputs_[i].size(); }
    const std::vector<std::string>& inputs(std::size_t i) const { return inputs_[i]; }
    std::size_t output_count(std::size_t i, std::size_t x) const { return outputs_[i][x].size(); }
    const std::vector<std::string>& outputs(std::size_t i, std::size_t x) const { return outputs_[i][x]; }

    std::size_t party_index(const std::string& name) const;
    std::size_t input_index(std::size_t party, const std::string& name) const;

    /// |M_i| >= 2 and |O_{x_i}| >= 2 for every party and input.
    bool nontrivial() const;

    std::size_t context_count() const { return contexts_.size(); }
    /// Input index chosen by party i in context c.
    std::size_t context_input(std::size_t c, std::size_t i) const { return contexts_[c][i]; }
    const std::vector<std::size_t>& context(std::size_t c) const { return contexts_[c]; }
    std::size_t context_of(const std::vector<std::size_t>& joint_input) const;
    /// Number of outcome tuples of context c.
    std::size_t outcome_count(std::size_t c) const { return outcome_counts_[c]; }
    /// Outcome index of party i within the tuple t of context c.
    std::size_t outcome_component(std::size_t c, std::size_t t, std::size_t i) const;
    std::size_t outcome_of(std::size_t c, const std::vector<std::size_t>& components) const;

    /// Flat coordinate of (context, outcome tuple) in the canonical layout.
    std::size_t coord(std::size_t c, std::size_t t) const { return offsets_[c] + t; }
    std::size_t context_offset(std::size_t c) const { return offsets_[c]; }

    /// Ambient coordinate count d = sum over contexts of |O_{x}|.
    std::size_t d() const { return total_coords_; }
    /// Dimension of E(S): d minus one normalization per context.
    std::size_t full_dimension() const { return total_coords_ - contexts_.size(); }
    /// Dimension of the no-signalling (and Bell) polytope.
    Int pironio_dimension() const;

    bool operator==(const Scenario& other) const;
    bool operator!=(const Scenario& other) const { return !(*this == other); }

  private:
    std::vector<std::string> parties_;
    std::vector<std::vector<std::string>> inputs_;
    std::vector<std::vector<std::vector<std::string>>> outputs_;

    std::vector<std::vector<std::size_t>> contexts_;
    std::vector<std::size_t> outcome_counts_;
    std::vector<std::size_t> offsets_;
    std::size_t total_coords_ = 0;

    void build_layout();
    void validate() const;
};

/// Per-party subset of inputs of a fixed parent scenario, stored as bitmasks
/// over the party's input list.  Parties are limited to 31 inputs.
class InputCollection {
  public:
    InputCollection() = default;
    explicit InputCollection(std::vector<std::uint32_t> masks) : masks_(std::move(masks)) {}

    static InputCollection empty(const Scenario& s);
    static InputCollection full(const Scenario& s);
    /// All inputs of the given parties, nothing elsewhere (the collection M^{I'}).
    static InputCollection party_block(const Scenario& s, const std::vector<std::size_t>& parties);

    void validate(const Scenario& s) const;

    std::size_t party_count() const { return masks_.size(); }
    std::uint32_t mask(std::size_t i) const { return masks_[i]; }
    bool contains(std::size_t party, std::size_t input) const {
        return (masks_[party] >> input) & 1u;
    }
    std::size_t count(std::size_t party) const;
    bool party_empty(std::size_t i) const { return masks_[i] == 0; }

    bool is_empty() const;
    bool is_full(const Scenario& s) const;
    /// Componentwise subset.
    bool subset_of(const InputCollection& other) const;
    bool operator==(const InputCollection& other) const { return masks_ == other.masks_; }
    bool operator!=(const InputCollection& other) const { return masks_ != other.masks_; }
    bool operator<(const InputCollection& other) const { return masks_ < other.masks_; }

    /// Sorted input indices selected for party i.
    std::vector<std::size_t> selected(std::size_t i) const;

    InputCollection intersect(const InputCollection& other) const;
    InputCollection unite(const InputCollection& other) const;

  private:
    std::vector<std::uint32_t> masks_;
};

/// Context-dependent party split F_x = {i : x_i in M'_i} and its complement.
struct ContextPartition {
    std::vector<std::size_t> predictable;  // F_x, sorted
    std::vector<std::size_t> free;         // I \ F_x, sorted
};

ContextPartition context_partition(const Scenario& s, const InputCollection& coll, std::size_t context);

Scenario restrict_scenario(const Scenario& s, const InputCollection& coll);
InputCollection complement(const Scenario& s, const InputCollection& coll);

/// (S_{|M'}, S_{|M'perp}); a side is absent when its collection is all-empty.
std::pair<std::optional<Scenario>, std::optional<Scenario>> bipartition(const Scenario& s,
                                                                        const InputCollection& coll);

/// Visits all prod_i 2^{|M_i|} collections in canonical order (per-party masks
/// counting up, last party fastest).  With include_trivial = false the
/// all-empty and full collections are skipped.
void all_collections(const Scenario& s, bool include_trivial,
                     const std::function<void(const InputCollection&)>& visit);
std::size_t collection_count(const Scenario& s);

/// The induced collection on a restricted scenario: inputs of `coll` (a subset
/// of `outer`) expressed as masks over S_{|outer}.
InputCollection project_collection(const Scenario& s, const InputCollection& outer,
                                   const InputCollection& coll);

}  // namespace pdp

#endif
