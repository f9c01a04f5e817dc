#include "omega/term.hpp"

#include <functional>
#include <stdexcept>

namespace omega {

struct Term::Node {
  Kind kind;
  std::string name;
  std::vector<Term> args;
  std::size_t hash;
  std::size_t size;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term::Term() : Term(make(Kind::Tuple, {}, {})) {}

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Term Term::make(Kind kind, std::string name, std::vector<Term> args) {
  std::size_t h = mix(std::hash<std::string>{}(name), static_cast<std::size_t>(kind));
  std::size_t sz = 0;
  for (const auto& a : args) h = mix(h, a.hash());
  switch (kind) {
    case Kind::Hom:
      sz = args[0].size() + args[2].size();
      break;
    case Kind::Inj:
      sz = pathLength(args[0]) + args[1].size();
      break;
    case Kind::Tuple:
    case Kind::Seq:
      for (const auto& a : args) sz += a.size();
      break;
    case Kind::Space:
      sz = args.size() - 2;  // edges traversed
      break;
    default:
      break;
  }
  return Term(std::make_shared<const Node>(Node{kind, std::move(name), std::move(args), h, sz}));
}

Term Term::atom(std::string name) { return make(Kind::Atom, std::move(name), {}); }
Term Term::hom(Term a, Term b, Term c) {
  return make(Kind::Hom, {}, {std::move(a), std::move(b), std::move(c)});
}
Term Term::tuple(std::vector<Term> parts) { return make(Kind::Tuple, {}, std::move(parts)); }
Term Term::inj(Term tag, Term x) { return make(Kind::Inj, {}, {std::move(tag), std::move(x)}); }
Term Term::path(std::vector<Term> objects) {
  if (objects.empty()) throw std::invalid_argument("path index needs at least one object");
  return make(Kind::Path, {}, std::move(objects));
}
Term Term::seq(std::vector<Term> parts) { return make(Kind::Seq, {}, std::move(parts)); }
Term Term::mpath(std::vector<Term> parts) {
  if (parts.size() < 2) throw std::invalid_argument("model path needs two endpoints");
  return make(Kind::Space, {}, std::move(parts));
}
Term Term::cls(Term rep) { return make(Kind::Class, {}, {std::move(rep)}); }

Term::Kind Term::kind() const noexcept { return node_->kind; }
const std::string& Term::name() const noexcept { return node_->name; }
const std::vector<Term>& Term::args() const noexcept { return node_->args; }
const Term& Term::arg(std::size_t i) const {
  if (i >= node_->args.size()) throw std::out_of_range("term argument " + std::to_string(i) + " of " + str());
  return node_->args[i];
}
std::size_t Term::size() const noexcept { return node_->size; }
std::size_t Term::hash() const noexcept { return node_->hash; }

namespace {

void render(const Term& t, std::string& out);

void renderList(const std::vector<Term>& xs, std::string& out, char sep = ',') {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    render(xs[i], out);
  }
}

void render(const Term& t, std::string& out) {
  const auto& a = t.args();
  switch (t.kind()) {
    case Term::Kind::Atom:
      out += t.name();
      break;
    case Term::Kind::Hom:
      out += '{';
      render(a[0], out);
      out += '>';
      render(a[1], out);
      out += ':';
      render(a[2], out);
      out += '}';
      break;
    case Term::Kind::Tuple:
      out += '(';
      renderList(a, out);
      out += ')';
      break;
    case Term::Kind::Inj:
      render(a[0], out);
      out += "·";
      render(a[1], out);
      break;
    case Term::Kind::Path:
      out += '[';
      renderList(a, out);
      out += ']';
      break;
    case Term::Kind::Seq:
      out += '<';
      renderList(a, out);
      out += '>';
      break;
    case Term::Kind::Space: {
      render(a.front(), out);
      out += "~[";
      for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        if (i > 1) out += ',';
        render(a[i], out);
      }
      out += "]~";
      render(a.back(), out);
      break;
    }
    case Term::Kind::Class:
      out += '|';
      render(a[0], out);
      out += '|';
      break;
  }
}

}  // namespace

std::string Term::str() const {
  std::string out;
  render(*this, out);
  return out;
}

bool operator==(const Term& x, const Term& y) noexcept {
  if (x.node_ == y.node_) return true;
  if (x.node_->hash != y.node_->hash || x.node_->kind != y.node_->kind ||
      x.node_->name != y.node_->name || x.node_->args.size() != y.node_->args.size())
    return false;
  for (std::size_t i = 0; i < x.node_->args.size(); ++i)
    if (!(x.node_->args[i] == y.node_->args[i])) return false;
  return true;
}

std::strong_ordering operator<=>(const Term& x, const Term& y) noexcept {
  if (x.node_ == y.node_) return std::strong_ordering::equal;
  if (auto c = x.node_->kind <=> y.node_->kind; c != 0) return c;
  if (auto c = x.node_->name.compare(y.node_->name); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const auto& xa = x.node_->args;
  const auto& ya = y.node_->args;
  for (std::size_t i = 0; i < xa.size() && i < ya.size(); ++i)
    if (auto c = xa[i] <=> ya[i]; c != 0) return c;
  return xa.size() <=> ya.size();
}

std::size_t pathLength(const Term& tag) noexcept {
  return tag.is(Term::Kind::Path) ? tag.arity() - 1 : 0;
}

std::vector<std::string> renderAll(const std::vector<Term>& terms) {
  std::vector<std::string> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.str());
  return out;
}

}  // namespace omega
