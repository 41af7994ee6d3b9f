#include "hre/structure.hpp"

#include <stdexcept>

#include "hre/classifier.hpp"

namespace hre {

namespace {

enum class Role { OuterUnion, Repeat, Concat, InnerUnion, InnerPlus, None };

class Extractor {
 public:
  Extractor(const Regex& r, std::vector<Role> roles) : r_(r), roles_(std::move(roles)) {}

  Structure run() {
    parse_outer(r_.root(), 1);
    return std::move(out_);
  }

 private:
  Role role(std::size_t level) const {
    return level - 1 < roles_.size() ? roles_[level - 1] : Role::None;
  }

  [[noreturn]] static void mismatch() {
    throw std::invalid_argument("regex does not fit the engine's structure");
  }

  void parse_outer(Regex::NodeId id, std::size_t level) {
    const auto& n = r_.node(id);
    if (!n.leaf && role(level) == Role::OuterUnion) {
      for (auto k : n.kids) parse_branch(k, level + 1);
      return;
    }
    parse_branch(id, level);
  }

  void parse_branch(Regex::NodeId id, std::size_t level) {
    const auto& n = r_.node(id);
    if (n.leaf) {
      out_.singles.push_back(n.sym);
      return;
    }
    Structure::Branch b;
    if (role(level) == Role::Repeat) {
      b.repeat = true;
      parse_concat(n.kids[0], level + 1, b);
    } else {
      parse_concat(id, level, b);
    }
    out_.branches.push_back(std::move(b));
  }

  void parse_concat(Regex::NodeId id, std::size_t level, Structure::Branch& b) {
    const auto& n = r_.node(id);
    if (!n.leaf && role(level) == Role::Concat) {
      for (auto k : n.kids) b.factors.push_back(factor(k, level + 1));
      return;
    }
    b.factors.push_back(factor(id, level));
  }

  Structure::Factor factor(Regex::NodeId id, std::size_t level) {
    const auto& n = r_.node(id);
    Structure::Factor f;
    if (n.leaf) {
      f.syms.push_back(n.sym);
      return f;
    }
    Role ro = role(level);
    if (ro != Role::InnerUnion && ro != Role::InnerPlus) mismatch();
    for (auto k : n.kids) {
      if (!r_.node(k).leaf) mismatch();
      f.syms.push_back(r_.node(k).sym);
    }
    f.plus = ro == Role::InnerPlus;
    return f;
  }

  const Regex& r_;
  std::vector<Role> roles_;
  Structure out_;
};

}  // namespace

Structure extract_structure(const Regex& r, const TypeSeq& tmpl) {
  TypeSeq t = infer_type(r);
  if (!is_subsequence(t, tmpl))
    throw std::invalid_argument("type " + t.str() + " is not a subsequence of " + tmpl.str());
  std::vector<Role> roles;
  std::size_t k = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    while (tmpl[k] != t[i]) ++k;
    Role ro = Role::None;
    switch (k) {
      case 0: ro = Role::OuterUnion; break;
      case 1: ro = Role::Repeat; break;
      case 2: ro = Role::Concat; break;
      default: ro = tmpl[k] == Op::Union ? Role::InnerUnion : Role::InnerPlus; break;
    }
    roles.push_back(ro);
    ++k;
  }
  return Extractor(r, std::move(roles)).run();
}

}  // namespace hre
