#ifndef ALGDIAG_AUTOMATON_HPP
#define ALGDIAG_AUTOMATON_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "algdiag/field.hpp"
#include "algdiag/series.hpp"

namespace algdiag {

/// Deterministic finite automaton with output over the digits {0..q-1}.
///
/// Digits of n are read least significant first and n = 0 is the empty word,
/// so u_{qn+r} is produced by the automaton re-rooted at next(initial, r).
class Dfao {
 public:
  /// Throws Error(SchemaError) when q < 2, the table is not total, an index is
  /// out of range, outputs are missing, or outputs mix fields.
  Dfao(unsigned q, std::size_t initial, std::vector<std::vector<std::size_t>> transitions,
       std::vector<Element> outputs, std::vector<std::string> labels = {});

  /// The single-state automaton with constant output c.
  static Dfao constant(unsigned q, const Element& c);

  unsigned q() const noexcept { return q_; }
  std::size_t size() const noexcept { return delta_.size(); }
  std::size_t initial() const noexcept { return initial_; }
  std::size_t next(std::size_t state, unsigned digit) const { return delta_.at(state).at(digit); }
  const std::vector<std::vector<std::size_t>>& transitions() const noexcept { return delta_; }
  const Element& output(std::size_t state) const { return out_.at(state); }
  const std::vector<Element>& outputs() const noexcept { return out_; }
  /// Either empty or one label per state.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Field& field() const { return out_.front().field(); }

  /// Same automaton with a different initial state.
  Dfao rerooted(std::size_t state) const;

  friend bool operator==(const Dfao& a, const Dfao& b);

 private:
  unsigned q_;
  std::size_t initial_;
  std::vector<std::vector<std::size_t>> delta_;
  std::vector<Element> out_;
  std::vector<std::string> labels_;
};

/// Output after reading the base-q digits of n from `state`.
Element run_from(const Dfao& a, std::size_t state, std::uint64_t n);
Element run(const Dfao& a, std::uint64_t n);

/// c_n = run(a, n) for 0 <= n <= N.
TruncSeries1 generate(const Dfao& a, std::size_t n_max);

/// Drops states unreachable from the initial state.
Dfao trim(const Dfao& a);

/// Moore partition refinement on the reachable part, then renumbering in
/// breadth-first order from the initial state (digits ascending). The result
/// is canonical: equivalent automata minimize to identical objects (labels
/// aside, which follow the smallest original index of each class).
Dfao minimize(const Dfao& a);

/// Equivalent automaton in which reading a digit 0 never changes the output,
/// i.e. out(next(s, 0)) = out(s). Leading zeros of the LSD-first word are
/// the most significant digits, so this is what makes the state series
/// G_s = sum_n run_from(s, n) X^n satisfy G_s = sum_r X^r G_{next(s,r)}(X^q).
Dfao zero_consistent(const Dfao& a);

/// Graphviz rendering; nodes "index:output", parallel edges merged into one
/// edge labelled with the sorted digit list.
std::string export_dot(const Dfao& a);

/// JSON document (see README for the schema).
std::string to_json(const Dfao& a);
/// Throws SchemaError with a JSON path such as "$.transitions[2][1]".
Dfao from_json(std::string_view text);

}  // namespace algdiag

#endif
