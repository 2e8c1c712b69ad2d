#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gmtlab/measurement.hpp"

namespace gmtlab {

// A finite effect algebra: a partial commutative sum on a finite carrier with
// constants 0 and 1, unique orthosupplements, and the zero-one law.
struct EffectAlgebra {
  std::vector<std::string> names;     // display names, one per element
  int zero = 0;
  int one = 0;
  std::vector<std::vector<int>> sum;  // sum[a][b] = index, or -1 when undefined

  int size() const { return static_cast<int>(names.size()); }
  std::optional<int> add(int a, int b) const;
  // Left-fold sum; order does not matter in a lawful algebra.
  std::optional<int> sum_of(const std::vector<int>& elems) const;
  // Empty iff the table satisfies the effect-algebra axioms; otherwise each
  // entry names a violated axiom with the offending instance.
  std::vector<std::string> axiom_violations() const;
};

// The two-element Boolean algebra {0, 1}.
EffectAlgebra boolean_algebra_2();

// Uniform handle over the concrete measurement families. A backend evaluates
// post-processing on payloads, decides canonical-form equality (payloads are
// canonical values, so operator== suffices), and optionally enumerates the
// full measurement set per outcome size.
class Family {
 public:
  virtual ~Family() = default;

  virtual std::string name() const = 0;
  // The unique one-outcome measurement payload.
  virtual Payload trivial() const = 0;
  virtual Payload pushforward(const FinFun& f, const Payload& p) const = 0;
  virtual bool enumerable() const = 0;
  // All payloads over an outcome set of the given size (enumerable families
  // only; throws std::logic_error otherwise). Size 0 yields the family's
  // choice of measurement set on the empty outcome set.
  virtual std::vector<Payload> enumerate(int outcome_size) const;
  // Validates arity and canonical form; throws std::invalid_argument.
  virtual void check_payload(const Payload& p, int outcome_size) const = 0;
  virtual std::string payload_text(const Payload& p) const;
};

using FamilyPtr = std::shared_ptr<const Family>;

FamilyPtr make_classical(int state_count);
FamilyPtr make_boolean(int atom_count);
// Throws std::invalid_argument naming the violated axiom instance if the
// table is not an effect algebra.
FamilyPtr make_effect_algebra(EffectAlgebra algebra);
FamilyPtr make_delta();
FamilyPtr make_prob_meas(int state_count);
FamilyPtr make_random_functions(int state_count);
FamilyPtr make_unknown_functions(int state_count);
FamilyPtr make_weird();

struct PresentedGenerator {
  std::string name;
  FinObj outcomes;
};

// Declares f_*(gen_left) = g_*(gen_right); both maps must share a codomain.
struct PresentedRelation {
  int left_gen = 0;
  FinFun left_map;
  int right_gen = 0;
  FinFun right_map;
};

// Measurement classes presented by generators and relations, closed under
// post-processing by congruence (union-find saturation up to the bound).
class PresentedFamily final : public Family {
 public:
  PresentedFamily(std::vector<PresentedGenerator> generators,
                  std::vector<PresentedRelation> relations, int bound);

  std::string name() const override;
  Payload trivial() const override;
  Payload pushforward(const FinFun& f, const Payload& p) const override;
  bool enumerable() const override { return false; }
  void check_payload(const Payload& p, int outcome_size) const override;
  std::string payload_text(const Payload& p) const override;

  // The classes of the identity post-processing on each generator.
  std::vector<Measurement> generator_measurements() const;
  int bound() const { return bound_; }

 private:
  int node_of(int gen, const FinFun& f) const;
  PresentedClass canonical(int gen, const FinFun& f) const;

  std::vector<PresentedGenerator> gens_;
  int bound_ = 0;
  std::vector<long long> gen_offset_;          // node index base per generator
  std::vector<std::vector<long long>> cod_offset_; // per generator, per codomain size
  std::vector<int> parent_;                    // union-find forest (path-halved on build)
  std::vector<PresentedClass> canon_;          // least representative per node's root
};

std::shared_ptr<const PresentedFamily> make_presented(std::vector<PresentedGenerator> generators,
                                                      std::vector<PresentedRelation> relations,
                                                      int bound);

} // namespace gmtlab
