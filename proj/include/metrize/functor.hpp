#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "metrize/error.hpp"

namespace metrize {

enum class ElementKind { Set, Tuple, Empty };

// Canonical form of a functor element: a sorted index set, a raw index
// tuple, or the empty marker. Canonical forms are equal iff the elements
// are equal.
struct Element {
  ElementKind kind = ElementKind::Empty;
  std::vector<int> idx;

  static Element set(std::vector<int> indices);
  static Element tuple(std::vector<int> indices) { return {ElementKind::Tuple, std::move(indices)}; }
  static Element empty() { return {ElementKind::Empty, {}}; }

  friend auto operator<=>(const Element&, const Element&) = default;
};

std::string to_string(const Element& e);

// A finitary functor of finite degree, given by its degree-n carrier Fn and
// the transport action along index maps. transport(a, f) computes Ff(a)
// where a lives over {0, ..., k-1} and f is a k-tuple of target indices;
// the same action implements both the carrier evaluation and Ff on FX.
class Functor {
 public:
  virtual ~Functor() = default;

  virtual std::string name() const = 0;
  virtual int degree() const = 0;
  virtual std::vector<Element> carrier() const = 0;  // F(degree), canonical order
  virtual Element transport(const Element& a, std::span<const int> f) const = 0;
  virtual bool preserves_supports() const = 0;
  virtual bool preserves_singletons() const = 0;

  // supp(a): the smallest index set the element factors through.
  virtual std::vector<int> support(const Element& a) const = 0;
};

// FX = X^k with Ff(t) = f o t. Preserves supports and singletons.
std::unique_ptr<Functor> make_power_functor(int k);

// FX = subsets of X of size <= k, including the empty set; Ff(a) = f[a].
std::unique_ptr<Functor> make_capped_hyperspace(int k);

// FX = subsets of size 1 or 2; Ff(a) = f[a].
std::unique_ptr<Functor> make_nonempty_pairs();

// FX = {empty} + two-element subsets; Ff({x,y}) = {f(x)} symdiff {f(y)}.
// The standard example of a functor that does not preserve supports.
std::unique_ptr<Functor> make_symdiff_pairs();

// Factory by CLI name: power | capped-hyperspace | nonempty-pairs |
// symdiff-pairs. Throws UnknownFunctor.
std::unique_ptr<Functor> make_functor(const std::string& name, int degree);

}  // namespace metrize
