#include "gmtlab/finset.hpp"

#include <sstream>
#include <stdexcept>

namespace gmtlab {

FinObj::FinObj(int n, std::vector<std::string> names) : size(n), labels(std::move(names)) {
  if (!labels.empty() && static_cast<int>(labels.size()) != size) {
    throw std::invalid_argument("label list length must match object size");
  }
}

std::string FinObj::label(int x) const {
  if (x < 0 || x >= size) throw std::out_of_range("element out of range");
  if (!labels.empty()) return labels[static_cast<std::size_t>(x)];
  return std::to_string(x);
}

FinFun::FinFun(int dom_size, int cod_size, std::vector<int> entries)
    : dom(dom_size), cod(cod_size), table(std::move(entries)) {
  if (dom < 0 || cod < 0) throw std::invalid_argument("negative set size");
  if (static_cast<int>(table.size()) != dom) {
    throw std::invalid_argument("function table length must equal domain size");
  }
  for (int v : table) {
    if (v < 0 || v >= cod) throw std::invalid_argument("function table entry out of codomain");
  }
}

bool FinFun::is_identity() const {
  if (dom != cod) return false;
  for (int i = 0; i < dom; ++i) {
    if (table[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

std::string FinFun::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i) os << ',';
    os << table[i];
  }
  os << "]:" << dom << "->" << cod;
  return os.str();
}

bool operator<(const FinFun& a, const FinFun& b) {
  if (a.dom != b.dom) return a.dom < b.dom;
  if (a.cod != b.cod) return a.cod < b.cod;
  return a.table < b.table;
}

FinFun identity_fun(int n) {
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = i;
  return FinFun(n, n, std::move(t));
}

FinFun constant_fun(int dom, int cod, int value) {
  if (value < 0 || value >= cod) throw std::invalid_argument("constant value out of codomain");
  return FinFun(dom, cod, std::vector<int>(static_cast<std::size_t>(dom), value));
}

FinFun point_fun(int x, int cod) { return constant_fun(1, cod, x); }

FinFun bang_fun(int dom) { return FinFun(dom, 1, std::vector<int>(static_cast<std::size_t>(dom), 0)); }

FinFun compose(const FinFun& g, const FinFun& f) {
  if (f.cod != g.dom) {
    throw std::invalid_argument("compose: codomain of inner function (" + std::to_string(f.cod) +
                                ") does not match domain of outer function (" +
                                std::to_string(g.dom) + ")");
  }
  std::vector<int> t(static_cast<std::size_t>(f.dom));
  for (int i = 0; i < f.dom; ++i) t[static_cast<std::size_t>(i)] = g(f(i));
  return FinFun(f.dom, g.cod, std::move(t));
}

long long function_count(int dom, int cod) {
  long long n = 1;
  for (int i = 0; i < dom; ++i) n *= cod;
  return n;
}

std::vector<FinFun> enumerate_functions(const FinObj& X, const FinObj& Y) {
  std::vector<FinFun> out;
  if (X.size == 0) {
    out.push_back(FinFun(0, Y.size, {}));
    return out;
  }
  if (Y.size == 0) return out;
  out.reserve(static_cast<std::size_t>(function_count(X.size, Y.size)));
  std::vector<int> t(static_cast<std::size_t>(X.size), 0);
  while (true) {
    out.push_back(FinFun(X.size, Y.size, t));
    int i = X.size - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == Y.size - 1) {
      t[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
  return out;
}

int function_rank(const FinFun& f) {
  long long r = 0;
  for (int i = 0; i < f.dom; ++i) r = r * f.cod + f(i);
  return static_cast<int>(r);
}

FinFun function_unrank(int dom, int cod, int rank) {
  std::vector<int> t(static_cast<std::size_t>(dom));
  for (int i = dom - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = rank % cod;
    rank /= cod;
  }
  return FinFun(dom, cod, std::move(t));
}

int pair_index(int x, int y, int y_size) { return x * y_size + y; }

Product product(const FinObj& X, const FinObj& Y) {
  const int n = X.size * Y.size;
  std::vector<int> px(static_cast<std::size_t>(n));
  std::vector<int> py(static_cast<std::size_t>(n));
  for (int x = 0; x < X.size; ++x) {
    for (int y = 0; y < Y.size; ++y) {
      const int i = pair_index(x, y, Y.size);
      px[static_cast<std::size_t>(i)] = x;
      py[static_cast<std::size_t>(i)] = y;
    }
  }
  return Product{FinObj(n), FinFun(n, X.size, std::move(px)), FinFun(n, Y.size, std::move(py))};
}

FinFun tupling(const FinFun& f, const FinFun& g) {
  if (f.dom != g.dom) throw std::invalid_argument("tupling: domains differ");
  std::vector<int> t(static_cast<std::size_t>(f.dom));
  for (int i = 0; i < f.dom; ++i) t[static_cast<std::size_t>(i)] = pair_index(f(i), g(i), g.cod);
  return FinFun(f.dom, f.cod * g.cod, std::move(t));
}

EqualizerResult equalizer(const FinFun& f, const FinFun& g) {
  if (f.dom != g.dom || f.cod != g.cod) {
    throw std::invalid_argument("equalizer: functions must be a parallel pair");
  }
  std::vector<int> incl;
  for (int x = 0; x < f.dom; ++x) {
    if (f(x) == g(x)) incl.push_back(x);
  }
  const int n = static_cast<int>(incl.size());
  return EqualizerResult{FinObj(n), FinFun(n, f.dom, std::move(incl))};
}

} // namespace gmtlab
