#ifndef UPDLP_UPDATE_HPP
#define UPDLP_UPDATE_HPP

#include <map>
#include <string>

#include "core.hpp"
#include "solver.hpp"

namespace updlp {

// Generated atom spellings.  User input can never collide: the parser
// rejects atoms beginning with a reserved prefix.
inline std::string layer_atom(int i, const std::string& name) {
  return "lv" + std::to_string(i) + "_" + name;
}

inline Literal layer_literal(int i, const Literal& l) {
  return Literal{layer_atom(i, l.atom), l.neg};
}

inline std::string rej_atom(const RuleName& n) {
  return "rej_" + std::to_string(n.layer) + "_" + std::to_string(n.position);
}

struct UpdateOptions {
  // Drop the "not rej(r)" guard on final-layer rules.  Final-layer rejection
  // atoms have no defining rules, so both forms project identically.
  bool simplify_last = false;
};

// Single-program compilation of a sequence.  Layer copies carry derivations
// per update step, bodies stay at base level, inertia links each layer to
// the next and grounds layer 1 at base level.
inline Program build_update_program(const UpdateSequence& seq,
                                    const UpdateOptions& opts = {}) {
  if (seq.mode != Mode::Elp)
    throw std::invalid_argument("build_update_program: ELP sequences only");
  const int n = seq.size();
  Program out;
  out.mode = Mode::Elp;
  auto add = [&out](Rule r) {
    r.name = RuleName{1, static_cast<int>(out.rules.size())};
    out.rules.push_back(std::move(r));
  };

  for (const auto& p : seq.programs)
    for (const auto& r : p.rules)
      if (r.is_constraint()) add(r);

  for (int i = 1; i <= n; ++i) {
    for (const auto& r : seq.programs[i - 1].rules) {
      if (r.is_constraint()) continue;
      Rule q;
      q.head = lit_head(layer_literal(i, r.head.lit));
      q.body_pos = r.body_pos;
      q.body_wneg = r.body_wneg;
      if (!(opts.simplify_last && i == n)) q.body_wneg.insert(pos(rej_atom(r.name)));
      add(std::move(q));
    }
  }

  for (int i = 1; i < n; ++i) {
    for (const auto& r : seq.programs[i - 1].rules) {
      if (r.is_constraint()) continue;
      Rule q;
      q.head = lit_head(pos(rej_atom(r.name)));
      q.body_pos = r.body_pos;
      q.body_pos.insert(layer_literal(i + 1, r.head.lit.complement()));
      q.body_wneg = r.body_wneg;
      add(std::move(q));
    }
  }

  // Inertia is instantiated for every literal occurring anywhere in the
  // sequence, at every layer boundary.
  for (const auto& l : seq.occurring_literals()) {
    for (int i = 1; i < n; ++i) {
      Rule q;
      q.head = lit_head(layer_literal(i, l));
      q.body_pos.insert(layer_literal(i + 1, l));
      add(std::move(q));
    }
    Rule ground;
    ground.head = lit_head(l);
    ground.body_pos.insert(layer_literal(1, l));
    add(std::move(ground));
  }
  return out;
}

// The base-alphabet capacity gate applies to the sequence; the compiled
// program legitimately needs more atoms, so the solver bound is widened to
// fit it.
inline AnswerSetList update_answer_sets(const UpdateSequence& seq,
                                        std::size_t atom_cap = kDefaultAtomCap,
                                        const UpdateOptions& opts = {}) {
  auto base = seq.atoms();
  if (base.size() > atom_cap) throw CapacityError(base.size(), atom_cap);
  Program compiled = build_update_program(seq, opts);
  std::size_t widened = std::max(atom_cap, compiled.atoms().size());
  return project_all(answer_sets(compiled, widened), base);
}

// Per-layer rejection sets.  The founded variant only lets unrejected later
// rules reject; the weak variant drops that restriction.
struct RejectionSet {
  std::map<int, std::set<RuleName>> by_layer;

  std::set<RuleName> total() const {
    std::set<RuleName> out;
    for (const auto& [_, s] : by_layer) out.insert(s.begin(), s.end());
    return out;
  }

  std::set<RuleName> layer(int i) const {
    auto it = by_layer.find(i);
    return it == by_layer.end() ? std::set<RuleName>{} : it->second;
  }

  bool operator==(const RejectionSet&) const = default;
};

inline RejectionSet rej(const UpdateSequence& seq, const Interpretation& s,
                        bool founded = true) {
  const int n = seq.size();
  RejectionSet out;
  for (int i = 1; i <= n; ++i) out.by_layer[i] = {};
  for (int i = n - 1; i >= 1; --i) {
    for (const auto& r : seq.programs[i - 1].rules) {
      if (r.is_constraint() || !body_true(s, r)) continue;
      bool rejected = false;
      for (int j = i + 1; j <= n && !rejected; ++j) {
        for (const auto& r2 : seq.programs[j - 1].rules) {
          if (!conflicting(r, r2) || !body_true(s, r2)) continue;
          if (founded && out.by_layer[j].count(r2.name)) continue;
          rejected = true;
          break;
        }
      }
      if (rejected) out.by_layer[i].insert(r.name);
    }
  }
  return out;
}

inline RejectionSet rej_weak(const UpdateSequence& seq,
                             const Interpretation& s) {
  return rej(seq, s, false);
}

enum class RejectionVariant { Founded, Weak };

// Residue characterisation: S is an update answer set iff it is the least
// model of the reduct of the sequence minus its rejected rules.  Holds for
// both rejection variants.
inline bool check_declarative(const UpdateSequence& seq,
                              const Interpretation& s,
                              RejectionVariant variant) {
  RejectionSet r =
      variant == RejectionVariant::Founded ? rej(seq, s) : rej_weak(seq, s);
  auto rejected = r.total();
  Program residue;
  residue.mode = Mode::Elp;
  for (const auto& p : seq.programs)
    for (const auto& rule : p.rules)
      if (!rejected.count(rule.name)) residue.rules.push_back(rule);
  auto lm = least_model(gl_reduct(residue, s));
  return lm.has_value() && *lm == s;
}

// Canonical witness over the compiled alphabet for an update answer set:
// the rejection atoms of Rej(S) plus layer copies of every head supported
// by an unrejected applicable rule at that layer or above.
inline Interpretation lift(const UpdateSequence& seq, const Interpretation& s,
                           const UpdateOptions& opts = {}) {
  RejectionSet r = rej(seq, s);
  auto rejected = r.total();
  Interpretation out = s;
  for (const auto& name : rejected) out.lits.insert(pos(rej_atom(name)));
  const int n = seq.size();
  for (int i = 1; i <= n; ++i) {
    for (const auto& rule : seq.programs[i - 1].rules) {
      if (rule.is_constraint() || rejected.count(rule.name)) continue;
      if (!body_true(s, rule)) continue;
      for (int j = 1; j <= i; ++j)
        out.lits.insert(layer_literal(j, rule.head.lit));
    }
  }
  if (!is_answer_set(build_update_program(seq, opts), out))
    throw std::invalid_argument("lift: not an update answer set");
  return out;
}

// Rule lookup by name within a sequence.
inline const Rule* find_rule(const UpdateSequence& seq, const RuleName& n) {
  if (n.layer < 1 || n.layer > seq.size()) return nullptr;
  for (const auto& r : seq.programs[n.layer - 1].rules)
    if (r.name == n) return &r;
  return nullptr;
}

}  // namespace updlp

#endif
