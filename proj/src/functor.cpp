#include "metrize/functor.hpp"

#include <algorithm>
#include <set>

namespace metrize {

Element Element::set(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return {ElementKind::Set, std::move(indices)};
}

std::string to_string(const Element& e) {
  std::string out;
  switch (e.kind) {
    case ElementKind::Empty: return "{}";
    case ElementKind::Set: out = "{"; break;
    case ElementKind::Tuple: out = "("; break;
  }
  for (std::size_t i = 0; i < e.idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e.idx[i]);
  }
  out += e.kind == ElementKind::Set ? "}" : ")";
  return out;
}

namespace {

void check_map(const Element& a, std::span<const int> f) {
  for (int i : a.idx)
    if (i < 0 || i >= static_cast<int>(f.size()))
      throw Error("IndexOutOfRange", {i}, "transport map too short for element");
}

class PowerFunctor final : public Functor {
 public:
  explicit PowerFunctor(int k) : k_(k) {
    if (k < 0) throw Error("IndexOutOfRange", "power degree must be >= 0");
  }

  std::string name() const override { return "power(" + std::to_string(k_) + ")"; }
  int degree() const override { return k_; }

  std::vector<Element> carrier() const override {
    // All k^k tuples over {0..k-1}, odometer order.
    std::vector<Element> out;
    if (k_ == 0) {
      out.push_back(Element::tuple({}));
      return out;
    }
    std::vector<int> t(k_, 0);
    while (true) {
      out.push_back(Element::tuple(t));
      int pos = k_ - 1;
      while (pos >= 0 && t[pos] == k_ - 1) t[pos--] = 0;
      if (pos < 0) break;
      ++t[pos];
    }
    return out;
  }

  Element transport(const Element& a, std::span<const int> f) const override {
    check_map(a, f);
    std::vector<int> out;
    out.reserve(a.idx.size());
    for (int i : a.idx) out.push_back(f[i]);
    return Element::tuple(std::move(out));
  }

  bool preserves_supports() const override { return true; }
  bool preserves_singletons() const override { return true; }

  std::vector<int> support(const Element& a) const override {
    std::set<int> s(a.idx.begin(), a.idx.end());
    return {s.begin(), s.end()};
  }

 private:
  int k_;
};

std::vector<Element> subsets_up_to(int ground, int max_size, int min_size) {
  std::vector<Element> out;
  for (unsigned mask = 0; mask < (1u << ground); ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits < min_size || bits > max_size) continue;
    std::vector<int> idx;
    for (int i = 0; i < ground; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    out.push_back(Element::set(std::move(idx)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

class CappedHyperspace final : public Functor {
 public:
  explicit CappedHyperspace(int k) : k_(k) {
    if (k < 1) throw Error("IndexOutOfRange", "hyperspace cap must be >= 1");
  }

  std::string name() const override { return "capped-hyperspace(" + std::to_string(k_) + ")"; }
  int degree() const override { return k_; }
  std::vector<Element> carrier() const override { return subsets_up_to(k_, k_, 0); }

  Element transport(const Element& a, std::span<const int> f) const override {
    check_map(a, f);
    std::vector<int> out;
    out.reserve(a.idx.size());
    for (int i : a.idx) out.push_back(f[i]);
    return Element::set(std::move(out));
  }

  bool preserves_supports() const override { return true; }
  bool preserves_singletons() const override { return false; }  // |F1| = 2 (with empty set)

  std::vector<int> support(const Element& a) const override { return a.idx; }

 private:
  int k_;
};

class NonemptyPairs final : public Functor {
 public:
  std::string name() const override { return "nonempty-pairs"; }
  int degree() const override { return 2; }
  std::vector<Element> carrier() const override { return subsets_up_to(2, 2, 1); }

  Element transport(const Element& a, std::span<const int> f) const override {
    check_map(a, f);
    std::vector<int> out;
    out.reserve(a.idx.size());
    for (int i : a.idx) out.push_back(f[i]);
    return Element::set(std::move(out));
  }

  bool preserves_supports() const override { return true; }
  bool preserves_singletons() const override { return true; }

  std::vector<int> support(const Element& a) const override { return a.idx; }
};

class SymDiffPairs final : public Functor {
 public:
  std::string name() const override { return "symdiff-pairs"; }
  int degree() const override { return 2; }

  std::vector<Element> carrier() const override {
    return {Element::empty(), Element::set({0, 1})};
  }

  Element transport(const Element& a, std::span<const int> f) const override {
    if (a.kind == ElementKind::Empty) return Element::empty();
    check_map(a, f);
    if (f[a.idx[0]] == f[a.idx[1]]) return Element::empty();
    return Element::set({f[a.idx[0]], f[a.idx[1]]});
  }

  bool preserves_supports() const override { return false; }
  bool preserves_singletons() const override { return true; }  // F1 = {empty}

  std::vector<int> support(const Element& a) const override { return a.idx; }
};

}  // namespace

std::unique_ptr<Functor> make_power_functor(int k) { return std::make_unique<PowerFunctor>(k); }
std::unique_ptr<Functor> make_capped_hyperspace(int k) { return std::make_unique<CappedHyperspace>(k); }
std::unique_ptr<Functor> make_nonempty_pairs() { return std::make_unique<NonemptyPairs>(); }
std::unique_ptr<Functor> make_symdiff_pairs() { return std::make_unique<SymDiffPairs>(); }

std::unique_ptr<Functor> make_functor(const std::string& name, int degree) {
  if (name == "power") return make_power_functor(degree);
  if (name == "capped-hyperspace") return make_capped_hyperspace(degree);
  if (name == "nonempty-pairs") return make_nonempty_pairs();
  if (name == "symdiff-pairs") return make_symdiff_pairs();
  throw Error("UnknownFunctor", "no functor named '" + name + "'");
}

}  // namespace metrize
