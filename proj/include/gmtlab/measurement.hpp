#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gmtlab/finset.hpp"
#include "gmtlab/rational.hpp"

namespace gmtlab {

// Canonical payloads, one alternative per measurement family. Each value is
// kept in its canonical form so that payload equality is bit-exact.

// A function from the state set S into the outcome set; table[s] is the outcome.
struct ClassicalFun {
  std::vector<int> table;
};

// An outcome-indexed partition of unity in the Boolean algebra 2^W, stored as
// the function sending each atom to its block.
struct BooleanPartition {
  std::vector<int> blocks;
};

// An outcome-indexed tuple of effect-algebra elements summing to 1.
struct EffectTuple {
  std::vector<int> effects;
};

// An exact probability distribution over the outcome set.
struct RationalDistribution {
  std::vector<Rational> probs;
};

// A distribution over functions S -> X; sparse, sorted by table, weights > 0.
struct RandomFunction {
  std::vector<std::pair<std::vector<int>, Rational>> weights;
};

// One outcome distribution per state in S.
struct DistributionTable {
  std::vector<RationalDistribution> rows;
};

// A nonempty set of functions S -> X; sorted, duplicate-free.
struct UnknownFunction {
  std::vector<std::vector<int>> tables;
};

// Either the trivial measurement or a genuinely ternary one given by a
// 3-element outcome subset (sorted ascending).
struct WeirdValue {
  std::optional<std::array<int, 3>> subset;
};

// An equivalence class of (generator, post-processing) pairs, identified by
// its least representative.
struct PresentedClass {
  int generator = 0;
  std::vector<int> table;
};

bool operator==(const ClassicalFun&, const ClassicalFun&);
bool operator<(const ClassicalFun&, const ClassicalFun&);
bool operator==(const BooleanPartition&, const BooleanPartition&);
bool operator<(const BooleanPartition&, const BooleanPartition&);
bool operator==(const EffectTuple&, const EffectTuple&);
bool operator<(const EffectTuple&, const EffectTuple&);
bool operator==(const RationalDistribution&, const RationalDistribution&);
bool operator<(const RationalDistribution&, const RationalDistribution&);
bool operator==(const RandomFunction&, const RandomFunction&);
bool operator<(const RandomFunction&, const RandomFunction&);
bool operator==(const DistributionTable&, const DistributionTable&);
bool operator<(const DistributionTable&, const DistributionTable&);
bool operator==(const UnknownFunction&, const UnknownFunction&);
bool operator<(const UnknownFunction&, const UnknownFunction&);
bool operator==(const WeirdValue&, const WeirdValue&);
bool operator<(const WeirdValue&, const WeirdValue&);
bool operator==(const PresentedClass&, const PresentedClass&);
bool operator<(const PresentedClass&, const PresentedClass&);

using Payload = std::variant<ClassicalFun, BooleanPartition, EffectTuple, RationalDistribution,
                             RandomFunction, DistributionTable, UnknownFunction, WeirdValue,
                             PresentedClass>;

// Family-agnostic printable form (presented classes resolve generator names
// through their family instead).
std::string payload_to_string(const Payload& p);

struct Measurement {
  FinObj outcomes;
  Payload payload;

  friend bool operator==(const Measurement& a, const Measurement& b) {
    return a.outcomes.size == b.outcomes.size && a.payload == b.payload;
  }
  friend bool operator!=(const Measurement& a, const Measurement& b) { return !(a == b); }
  friend bool operator<(const Measurement& a, const Measurement& b) {
    if (a.outcomes.size != b.outcomes.size) return a.outcomes.size < b.outcomes.size;
    return a.payload < b.payload;
  }
};

} // namespace gmtlab
