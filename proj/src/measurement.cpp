#include "gmtlab/measurement.hpp"

#include <algorithm>
#include <sstream>

namespace gmtlab {

namespace {

void print_table(std::ostream& os, const std::vector<int>& t) {
  os << '[';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  os << ']';
}

} // namespace

bool operator==(const ClassicalFun& a, const ClassicalFun& b) { return a.table == b.table; }
bool operator<(const ClassicalFun& a, const ClassicalFun& b) { return a.table < b.table; }

bool operator==(const BooleanPartition& a, const BooleanPartition& b) { return a.blocks == b.blocks; }
bool operator<(const BooleanPartition& a, const BooleanPartition& b) { return a.blocks < b.blocks; }

bool operator==(const EffectTuple& a, const EffectTuple& b) { return a.effects == b.effects; }
bool operator<(const EffectTuple& a, const EffectTuple& b) { return a.effects < b.effects; }

bool operator==(const RationalDistribution& a, const RationalDistribution& b) {
  return a.probs == b.probs;
}
bool operator<(const RationalDistribution& a, const RationalDistribution& b) {
  return std::lexicographical_compare(a.probs.begin(), a.probs.end(), b.probs.begin(),
                                      b.probs.end());
}

bool operator==(const RandomFunction& a, const RandomFunction& b) { return a.weights == b.weights; }
bool operator<(const RandomFunction& a, const RandomFunction& b) {
  return std::lexicographical_compare(
      a.weights.begin(), a.weights.end(), b.weights.begin(), b.weights.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

bool operator==(const DistributionTable& a, const DistributionTable& b) { return a.rows == b.rows; }
bool operator<(const DistributionTable& a, const DistributionTable& b) {
  return std::lexicographical_compare(
      a.rows.begin(), a.rows.end(), b.rows.begin(), b.rows.end(),
      [](const RationalDistribution& x, const RationalDistribution& y) { return x < y; });
}

bool operator==(const UnknownFunction& a, const UnknownFunction& b) { return a.tables == b.tables; }
bool operator<(const UnknownFunction& a, const UnknownFunction& b) { return a.tables < b.tables; }

bool operator==(const WeirdValue& a, const WeirdValue& b) { return a.subset == b.subset; }
bool operator<(const WeirdValue& a, const WeirdValue& b) {
  if (a.subset.has_value() != b.subset.has_value()) return !a.subset.has_value();
  if (!a.subset) return false;
  return *a.subset < *b.subset;
}

bool operator==(const PresentedClass& a, const PresentedClass& b) {
  return a.generator == b.generator && a.table == b.table;
}
bool operator<(const PresentedClass& a, const PresentedClass& b) {
  if (a.generator != b.generator) return a.generator < b.generator;
  return a.table < b.table;
}

std::string payload_to_string(const Payload& p) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ClassicalFun>) {
          os << "fun";
          print_table(os, v.table);
        } else if constexpr (std::is_same_v<T, BooleanPartition>) {
          os << "partition";
          print_table(os, v.blocks);
        } else if constexpr (std::is_same_v<T, EffectTuple>) {
          os << "effects";
          print_table(os, v.effects);
        } else if constexpr (std::is_same_v<T, RationalDistribution>) {
          os << "dist[";
          for (std::size_t i = 0; i < v.probs.size(); ++i) {
            if (i) os << ',';
            os << v.probs[i];
          }
          os << ']';
        } else if constexpr (std::is_same_v<T, RandomFunction>) {
          os << "mix{";
          for (std::size_t i = 0; i < v.weights.size(); ++i) {
            if (i) os << ',';
            os << v.weights[i].second << '*';
            print_table(os, v.weights[i].first);
          }
          os << '}';
        } else if constexpr (std::is_same_v<T, DistributionTable>) {
          os << "rows{";
          for (std::size_t i = 0; i < v.rows.size(); ++i) {
            if (i) os << ';';
            os << "dist[";
            for (std::size_t j = 0; j < v.rows[i].probs.size(); ++j) {
              if (j) os << ',';
              os << v.rows[i].probs[j];
            }
            os << ']';
          }
          os << '}';
        } else if constexpr (std::is_same_v<T, UnknownFunction>) {
          os << "set{";
          for (std::size_t i = 0; i < v.tables.size(); ++i) {
            if (i) os << ',';
            print_table(os, v.tables[i]);
          }
          os << '}';
        } else if constexpr (std::is_same_v<T, WeirdValue>) {
          if (!v.subset) {
            os << "trivial";
          } else {
            os << "ternary{" << (*v.subset)[0] << ',' << (*v.subset)[1] << ',' << (*v.subset)[2]
               << '}';
          }
        } else if constexpr (std::is_same_v<T, PresentedClass>) {
          os << "gen" << v.generator;
          print_table(os, v.table);
        }
      },
      p);
  return os.str();
}

} // namespace gmtlab
