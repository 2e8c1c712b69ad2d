#pragma once

#include <string>
#include <vector>

namespace gmtlab {

// A canonical finite set: its elements are 0..size-1. Labels are display
// metadata only and never take part in equality.
struct FinObj {
  int size = 0;
  std::vector<std::string> labels; // empty, or exactly one label per element

  FinObj() = default;
  explicit FinObj(int n) : size(n) {}
  FinObj(int n, std::vector<std::string> names);

  std::string label(int x) const;

  friend bool operator==(const FinObj& a, const FinObj& b) { return a.size == b.size; }
  friend bool operator!=(const FinObj& a, const FinObj& b) { return !(a == b); }
};

// A total function between canonical finite sets, stored as a lookup table.
struct FinFun {
  int dom = 0;
  int cod = 0;
  std::vector<int> table; // table[i] in [0, cod)

  FinFun() = default;
  FinFun(int dom_size, int cod_size, std::vector<int> entries);

  int operator()(int x) const { return table[static_cast<std::size_t>(x)]; }
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const FinFun& a, const FinFun& b) {
    return a.dom == b.dom && a.cod == b.cod && a.table == b.table;
  }
  friend bool operator!=(const FinFun& a, const FinFun& b) { return !(a == b); }
  friend bool operator<(const FinFun& a, const FinFun& b);
};

FinFun identity_fun(int n);
FinFun constant_fun(int dom, int cod, int value);
// The element x seen as a function 1 -> cod.
FinFun point_fun(int x, int cod);
// The unique function dom -> 1.
FinFun bang_fun(int dom);

// Composition g after f; throws std::invalid_argument on a cod/dom mismatch.
FinFun compose(const FinFun& g, const FinFun& f);

// All |Y|^|X| functions X -> Y in lexicographic table order.
std::vector<FinFun> enumerate_functions(const FinObj& X, const FinObj& Y);
long long function_count(int dom, int cod);

// Rank of f among enumerate_functions(dom, cod), and its inverse.
int function_rank(const FinFun& f);
FinFun function_unrank(int dom, int cod, int rank);

// Row-major pairing: (x, y) |-> x * |Y| + y.
int pair_index(int x, int y, int y_size);

struct Product {
  FinObj object;
  FinFun onto_first;
  FinFun onto_second;
};
Product product(const FinObj& X, const FinObj& Y);

// The unique map into the row-major product with the given components.
FinFun tupling(const FinFun& f, const FinFun& g);

struct EqualizerResult {
  FinObj object;            // {x | f(x) = g(x)}, in element order
  FinFun include;           // monic inclusion into the common domain
};
EqualizerResult equalizer(const FinFun& f, const FinFun& g);

} // namespace gmtlab
