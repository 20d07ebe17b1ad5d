#ifndef UPDLP_CORE_HPP
#define UPDLP_CORE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace updlp {

enum class Mode : std::uint8_t { Elp, Glp };

// A literal is an atom or its strongly negated form.  Weak negation is not
// part of a literal; it is tracked by the rule body slot an element sits in.
struct Literal {
  std::string atom;
  bool neg = false;

  auto operator<=>(const Literal&) const = default;

  Literal complement() const { return Literal{atom, !neg}; }
};

inline Literal pos(std::string atom) { return Literal{std::move(atom), false}; }
inline Literal sneg(std::string atom) { return Literal{std::move(atom), true}; }

inline std::string to_string(const Literal& l) {
  return l.neg ? "-" + l.atom : l.atom;
}

enum class HeadKind : std::uint8_t { Absent, Lit, NotAtom };

// Rule heads: absent (constraint), a literal, or "not a" (GLP only; the
// stored literal is then the positive atom).
struct Head {
  HeadKind kind = HeadKind::Absent;
  Literal lit{};

  auto operator<=>(const Head&) const = default;
};

inline Head no_head() { return Head{HeadKind::Absent, {}}; }
inline Head lit_head(Literal l) { return Head{HeadKind::Lit, std::move(l)}; }
inline Head not_head(std::string atom) {
  return Head{HeadKind::NotAtom, pos(std::move(atom))};
}

// Layer is the 1-based program index inside a sequence, position the 0-based
// rule index inside that program.  The pair is unique across a sequence.
struct RuleName {
  int layer = 1;
  int position = 0;

  auto operator<=>(const RuleName&) const = default;
};

inline std::string to_string(const RuleName& n) {
  return "r_" + std::to_string(n.layer) + "_" + std::to_string(n.position);
}

struct Rule {
  Head head;
  std::set<Literal> body_pos;   // elements that must hold
  std::set<Literal> body_wneg;  // elements under weak negation
  RuleName name{};

  bool is_constraint() const { return head.kind == HeadKind::Absent; }
  bool is_basic() const { return body_wneg.empty(); }
  bool is_fact() const { return body_pos.empty() && body_wneg.empty(); }

  // Content identity ignores the name; sequences may hold duplicate rules
  // that stay distinguishable through their names.
  bool same_content(const Rule& o) const {
    return head == o.head && body_pos == o.body_pos && body_wneg == o.body_wneg;
  }

  auto operator<=>(const Rule&) const = default;
};

inline Rule fact(Literal l) {
  Rule r;
  r.head = lit_head(std::move(l));
  return r;
}

// Rules r1, r2 conflict iff both have literal heads and H(r1) = complement of
// H(r2).  Constraints and GLP not-heads never participate.
inline bool conflicting(const Rule& r1, const Rule& r2) {
  return r1.head.kind == HeadKind::Lit && r2.head.kind == HeadKind::Lit &&
         r1.head.lit == r2.head.lit.complement();
}

struct Program {
  Mode mode = Mode::Elp;
  std::vector<Rule> rules;

  void collect_atoms(std::set<std::string>& out) const {
    for (const auto& r : rules) {
      if (r.head.kind != HeadKind::Absent) out.insert(r.head.lit.atom);
      for (const auto& l : r.body_pos) out.insert(l.atom);
      for (const auto& l : r.body_wneg) out.insert(l.atom);
    }
  }

  std::set<std::string> atoms() const {
    std::set<std::string> out;
    collect_atoms(out);
    return out;
  }

  // Literals occurring anywhere in heads or bodies (weakly negated elements
  // included).  GLP not-heads contribute the positive atom.
  void collect_literals(std::set<Literal>& out) const {
    for (const auto& r : rules) {
      if (r.head.kind != HeadKind::Absent) out.insert(r.head.lit);
      for (const auto& l : r.body_pos) out.insert(l);
      for (const auto& l : r.body_wneg) out.insert(l);
    }
  }

  std::set<Literal> literals() const {
    std::set<Literal> out;
    collect_literals(out);
    return out;
  }
};

// Renumber rule names: the program becomes layer `layer`, positions start at
// `base` and follow rule order.
inline Program renumbered(Program p, int layer, int base = 0) {
  int idx = base;
  for (auto& r : p.rules) r.name = RuleName{layer, idx++};
  return p;
}

struct UpdateSequence {
  Mode mode = Mode::Elp;
  std::vector<Program> programs;

  int size() const { return static_cast<int>(programs.size()); }

  std::set<std::string> atoms() const {
    std::set<std::string> out;
    for (const auto& p : programs) p.collect_atoms(out);
    return out;
  }

  std::set<Literal> occurring_literals() const {
    std::set<Literal> out;
    for (const auto& p : programs) p.collect_literals(out);
    return out;
  }

  // Flat union keeping names.
  Program joined() const {
    Program out;
    out.mode = mode;
    for (const auto& p : programs)
      out.rules.insert(out.rules.end(), p.rules.begin(), p.rules.end());
    return out;
  }
};

// Builds a sequence from bare programs, assigning names layer by layer.
inline UpdateSequence make_sequence(std::vector<Program> ps,
                                    Mode mode = Mode::Elp) {
  UpdateSequence seq;
  seq.mode = mode;
  int layer = 1;
  for (auto& p : ps) {
    p.mode = mode;
    seq.programs.push_back(renumbered(std::move(p), layer++));
  }
  return seq;
}

// A consistent set of literals.  Consistency (no atom together with its
// strong negation) is an invariant callers must keep; check() verifies it.
struct Interpretation {
  std::set<Literal> lits;

  bool contains(const Literal& l) const { return lits.count(l) != 0; }

  bool consistent() const {
    for (const auto& l : lits)
      if (!l.neg && lits.count(l.complement())) return false;
    return true;
  }

  auto operator<=>(const Interpretation&) const = default;
};

inline Interpretation interp(std::initializer_list<Literal> ls) {
  Interpretation i;
  i.lits.insert(ls.begin(), ls.end());
  return i;
}

// Body truth: every plain element is in I and no weakly negated element is.
inline bool body_true(const Interpretation& i, const Rule& r) {
  for (const auto& l : r.body_pos)
    if (!i.contains(l)) return false;
  for (const auto& l : r.body_wneg)
    if (i.contains(l)) return false;
  return true;
}

// ELP rule satisfaction.  Constraints are satisfied iff their body is false.
// GLP not-heads have no meaning over plain interpretations.
inline bool satisfies(const Interpretation& i, const Rule& r) {
  if (r.head.kind == HeadKind::NotAtom)
    throw std::invalid_argument("satisfies: weak-negation head");
  if (!body_true(i, r)) return true;
  if (r.head.kind == HeadKind::Absent) return false;
  return i.contains(r.head.lit);
}

inline bool satisfies(const Interpretation& i, const Program& p) {
  return std::all_of(p.rules.begin(), p.rules.end(),
                     [&](const Rule& r) { return satisfies(i, r); });
}

// All literals over an atom set.
inline std::set<Literal> literal_base(const std::set<std::string>& atoms) {
  std::set<Literal> out;
  for (const auto& a : atoms) {
    out.insert(pos(a));
    out.insert(sneg(a));
  }
  return out;
}

// Projection to the literals over `atoms`.
inline Interpretation project(const Interpretation& i,
                              const std::set<std::string>& atoms) {
  Interpretation out;
  for (const auto& l : i.lits)
    if (atoms.count(l.atom)) out.lits.insert(l);
  return out;
}

using AnswerSetList = std::vector<Interpretation>;

inline AnswerSetList project_all(const AnswerSetList& sets,
                                 const std::set<std::string>& atoms) {
  std::set<Interpretation> uniq;
  for (const auto& s : sets) uniq.insert(project(s, atoms));
  return AnswerSetList(uniq.begin(), uniq.end());
}

namespace detail {

template <typename F>
void each_consistent(const std::vector<std::string>& atoms, std::size_t idx,
                     Interpretation& cur, F&& f) {
  if (idx == atoms.size()) {
    f(cur);
    return;
  }
  each_consistent(atoms, idx + 1, cur, f);
  cur.lits.insert(pos(atoms[idx]));
  each_consistent(atoms, idx + 1, cur, f);
  cur.lits.erase(pos(atoms[idx]));
  cur.lits.insert(sneg(atoms[idx]));
  each_consistent(atoms, idx + 1, cur, f);
  cur.lits.erase(sneg(atoms[idx]));
}

// Visits every consistent interpretation over the given atoms, 3^n in all.
template <typename F>
void each_consistent(const std::set<std::string>& atoms, F&& f) {
  std::vector<std::string> v(atoms.begin(), atoms.end());
  Interpretation cur;
  each_consistent(v, 0, cur, std::forward<F>(f));
}

}  // namespace detail

}  // namespace updlp

#endif
