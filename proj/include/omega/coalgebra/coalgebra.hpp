#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "omega/term.hpp"

namespace omega::coalgebra {

using FinSet = std::vector<Term>;
using Fn = std::function<Term(const Term&)>;

/// An endofunctor of finite sets.  Functors with infinitely many values on a
/// finite set (free monoid) carry a grade bound that cuts every application
/// down to a finite set.
class Endofunctor {
 public:
  virtual ~Endofunctor() = default;
  [[nodiscard]] virtual std::string name() const = 0;
  [[nodiscard]] virtual FinSet onObject(const FinSet& x) const = 0;
  /// F(f) applied to one element of F(X).
  [[nodiscard]] virtual Term onMorphism(const Fn& f, const Term& y) const = 0;
  [[nodiscard]] virtual nlohmann::json describe() const = 0;
};

using FunctorPtr = std::shared_ptr<const Endofunctor>;

FunctorPtr identity_functor();
/// X ↦ M × X.
FunctorPtr word_functor(std::vector<std::string> alphabet);
/// X ↦ strings over X of length <= grade.
FunctorPtr free_monoid_functor(std::size_t grade);
/// {"kind":"word","alphabet":[...]}, {"kind":"identity"},
/// {"kind":"free-monoid","grade":g}.
FunctorPtr functor_from_json(const nlohmann::json& j);

/// The terminal set {*}.
Term star();

/// 1 ← F1 ← F²1 ← ..., with stages memoised.
class ApproximantChain {
 public:
  explicit ApproximantChain(FunctorPtr f);

  [[nodiscard]] const FunctorPtr& functor() const { return f_; }
  [[nodiscard]] const FinSet& stage(std::size_t k) const;
  /// F^k(!) : F^{k+1}1 → F^k 1.
  [[nodiscard]] Term connect(std::size_t k, const Term& x) const;
  [[nodiscard]] Fn connectFn(std::size_t k) const;

 private:
  FunctorPtr f_;
  std::shared_ptr<std::mutex> mu_;
  std::shared_ptr<std::vector<std::unique_ptr<FinSet>>> stages_;
};

ApproximantChain adamek_chain(FunctorPtr f, std::size_t k);

struct Coalgebra {
  FinSet carrier;
  Fn structure;  // carrier → F(carrier)
};

/// Image of a in F^depth(1) under the unique cone from the coalgebra:
/// u_0 = !, u_{d+1} = F(u_d) ∘ structure.
Term unfold(const Endofunctor& f, const Coalgebra& c, const Term& a, std::size_t depth);
Fn unfoldFn(const Endofunctor& f, const Coalgebra& c, std::size_t depth);

/// Word-functor prefixes as a flat symbol list: (m, (m', (..., *))) ↦ [m, m', ...].
std::vector<std::string> flatten_word(const Term& t);

/// Word coalgebra on {0, .., k-1}: m given per state, f given as a map.
Coalgebra word_coalgebra(const std::vector<std::string>& labels, const std::vector<std::size_t>& next);

struct LambekReport {
  std::size_t depth = 0;
  std::size_t limitSize = 0;     // |L_{depth+1}|
  std::size_t appliedSize = 0;   // |F(L_depth)|
  bool bijective = false;
  std::optional<std::string> unmatched;
};

/// Compares F applied to the depth-d limit approximation L_d (compatible
/// sequences x_0..x_d) with L_{d+1} through the canonical map
/// y ↦ (*, F(π_0)y, ..., F(π_d)y), element by element.
LambekReport lambek_probe(const ApproximantChain& chain, std::size_t depth);

nlohmann::json to_json(const LambekReport& r);

}  // namespace omega::coalgebra
