#include "omega/coalgebra/coalgebra.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "omega/gcore/globset.hpp"

namespace omega::coalgebra {

using nlohmann::json;

Term star() { return Term::atom("*"); }

namespace {

class IdentityFunctor final : public Endofunctor {
 public:
  std::string name() const override { return "identity"; }
  FinSet onObject(const FinSet& x) const override { return x; }
  Term onMorphism(const Fn& f, const Term& y) const override { return f(y); }
  json describe() const override { return {{"kind", "identity"}}; }
};

class WordFunctor final : public Endofunctor {
 public:
  explicit WordFunctor(std::vector<std::string> alphabet) : alphabet_(std::move(alphabet)) {}
  std::string name() const override { return "word"; }
  FinSet onObject(const FinSet& x) const override {
    FinSet out;
    out.reserve(alphabet_.size() * x.size());
    for (const auto& m : alphabet_)
      for (const auto& e : x) out.push_back(Term::tuple({Term::atom(m), e}));
    return out;
  }
  Term onMorphism(const Fn& f, const Term& y) const override { return Term::tuple({y.arg(0), f(y.arg(1))}); }
  json describe() const override { return {{"kind", "word"}, {"alphabet", alphabet_}}; }

 private:
  std::vector<std::string> alphabet_;
};

class FreeMonoidFunctor final : public Endofunctor {
 public:
  explicit FreeMonoidFunctor(std::size_t grade) : grade_(grade) {}
  std::string name() const override { return "free-monoid"; }
  FinSet onObject(const FinSet& x) const override {
    FinSet out{Term::seq({})};
    std::vector<std::vector<Term>> layer{{}};
    for (std::size_t len = 1; len <= grade_; ++len) {
      std::vector<std::vector<Term>> next;
      for (const auto& w : layer)
        for (const auto& e : x) {
          auto v = w;
          v.push_back(e);
          out.push_back(Term::seq(v));
          next.push_back(std::move(v));
        }
      layer = std::move(next);
    }
    return out;
  }
  Term onMorphism(const Fn& f, const Term& y) const override {
    std::vector<Term> parts;
    parts.reserve(y.arity());
    for (const auto& e : y.args()) parts.push_back(f(e));
    return Term::seq(std::move(parts));
  }
  json describe() const override { return {{"kind", "free-monoid"}, {"grade", grade_}}; }

 private:
  std::size_t grade_;
};

}  // namespace

FunctorPtr identity_functor() { return std::make_shared<IdentityFunctor>(); }
FunctorPtr word_functor(std::vector<std::string> alphabet) {
  return std::make_shared<WordFunctor>(std::move(alphabet));
}
FunctorPtr free_monoid_functor(std::size_t grade) { return std::make_shared<FreeMonoidFunctor>(grade); }

FunctorPtr functor_from_json(const json& j) {
  using gcore::ParseError;
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw ParseError("functor descriptor needs a string 'kind'");
  auto kind = j.at("kind").get<std::string>();
  if (kind == "identity") return identity_functor();
  if (kind == "word") {
    if (!j.contains("alphabet") || !j.at("alphabet").is_array()) throw ParseError("word functor needs 'alphabet'");
    std::vector<std::string> m;
    for (const auto& s : j.at("alphabet")) {
      if (!s.is_string()) throw ParseError("alphabet symbols must be strings");
      m.push_back(s.get<std::string>());
    }
    return word_functor(std::move(m));
  }
  if (kind == "free-monoid") {
    if (!j.contains("grade") || !j.at("grade").is_number_unsigned()) throw ParseError("free-monoid needs 'grade'");
    return free_monoid_functor(j.at("grade").get<std::size_t>());
  }
  throw ParseError("unknown functor kind '" + kind + "'");
}

ApproximantChain::ApproximantChain(FunctorPtr f)
    : f_(std::move(f)),
      mu_(std::make_shared<std::mutex>()),
      stages_(std::make_shared<std::vector<std::unique_ptr<FinSet>>>()) {}

const FinSet& ApproximantChain::stage(std::size_t k) const {
  std::lock_guard lock(*mu_);
  auto& st = *stages_;
  if (st.empty()) st.push_back(std::make_unique<FinSet>(FinSet{star()}));
  while (st.size() <= k) st.push_back(std::make_unique<FinSet>(f_->onObject(*st.back())));
  return *st[k];
}

Term ApproximantChain::connect(std::size_t k, const Term& x) const {
  if (k == 0) return star();
  return f_->onMorphism(connectFn(k - 1), x);
}

Fn ApproximantChain::connectFn(std::size_t k) const {
  return [chain = *this, k](const Term& x) { return chain.connect(k, x); };
}

ApproximantChain adamek_chain(FunctorPtr f, std::size_t k) {
  ApproximantChain chain(std::move(f));
  (void)chain.stage(k);
  return chain;
}

Term unfold(const Endofunctor& f, const Coalgebra& c, const Term& a, std::size_t depth) {
  if (depth == 0) return star();
  return f.onMorphism(unfoldFn(f, c, depth - 1), c.structure(a));
}

Fn unfoldFn(const Endofunctor& f, const Coalgebra& c, std::size_t depth) {
  return [&f, c, depth](const Term& a) { return unfold(f, c, a, depth); };
}

std::vector<std::string> flatten_word(const Term& t) {
  std::vector<std::string> out;
  const Term* cur = &t;
  while (cur->is(Term::Kind::Tuple)) {
    out.push_back(cur->arg(0).name());
    cur = &cur->arg(1);
  }
  return out;
}

Coalgebra word_coalgebra(const std::vector<std::string>& labels, const std::vector<std::size_t>& next) {
  if (labels.size() != next.size()) throw std::invalid_argument("one label and one successor per state");
  Coalgebra c;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (next[i] >= labels.size()) throw std::invalid_argument("successor out of range");
    c.carrier.push_back(Term::atom(std::to_string(i)));
  }
  c.structure = [labels, next](const Term& a) {
    std::size_t i = std::stoul(a.name());
    return Term::tuple({Term::atom(labels.at(i)), Term::atom(std::to_string(next.at(i)))});
  };
  return c;
}

namespace {

/// Compatible sequences (x_0, ..., x_d), x_k ∈ F^k 1, connect(k, x_{k+1}) = x_k.
std::vector<Term> limitApprox(const ApproximantChain& chain, std::size_t d) {
  std::vector<Term> level{Term::seq({star()})};
  for (std::size_t k = 0; k < d; ++k) {
    std::unordered_map<Term, std::vector<Term>, TermHash> over;
    for (const auto& x : chain.stage(k + 1)) over[chain.connect(k, x)].push_back(x);
    std::vector<Term> next;
    for (const auto& s : level) {
      auto it = over.find(s.args().back());
      if (it == over.end()) continue;
      for (const auto& x : it->second) {
        auto parts = s.args();
        parts.push_back(x);
        next.push_back(Term::seq(std::move(parts)));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

LambekReport lambek_probe(const ApproximantChain& chain, std::size_t depth) {
  LambekReport r;
  r.depth = depth;
  const auto& f = *chain.functor();
  auto ld = limitApprox(chain, depth);
  auto next = limitApprox(chain, depth + 1);
  std::unordered_set<Term, TermHash> target(next.begin(), next.end());
  auto applied = f.onObject(ld);
  r.limitSize = next.size();
  r.appliedSize = applied.size();
  std::unordered_set<Term, TermHash> hit;
  for (const auto& y : applied) {
    std::vector<Term> parts{star()};
    for (std::size_t k = 0; k <= depth; ++k)
      parts.push_back(f.onMorphism([k](const Term& s) { return s.arg(k); }, y));
    Term image = Term::seq(std::move(parts));
    if (!target.contains(image)) {
      r.unmatched = y.str() + " maps outside the limit approximation";
      return r;
    }
    if (!hit.insert(image).second) {
      r.unmatched = image.str() + " is hit twice";
      return r;
    }
  }
  if (hit.size() != target.size()) {
    for (const auto& x : next)
      if (!hit.contains(x)) {
        r.unmatched = x.str() + " is not hit";
        return r;
      }
  }
  r.bijective = true;
  return r;
}

json to_json(const LambekReport& r) {
  json j{{"depth", r.depth}, {"limit_size", r.limitSize}, {"applied_size", r.appliedSize}, {"bijective", r.bijective}};
  if (r.unmatched) j["unmatched"] = *r.unmatched;
  return j;
}

}  // namespace omega::coalgebra
