#ifndef UPDLP_SOLVER_HPP
#define UPDLP_SOLVER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace updlp {

inline constexpr int kDefaultAtomCap = 24;

struct CapacityError : std::runtime_error {
  CapacityError(std::size_t atoms, std::size_t cap)
      : std::runtime_error("capacity exceeded: " + std::to_string(atoms) +
                           " atoms over cap " + std::to_string(cap)) {}
};

// Gelfond-Lifschitz reduct: drop rules defeated by S (some weakly negated
// element in S), strip weak bodies of the rest.  Names survive.
inline Program gl_reduct(const Program& p, const Interpretation& s) {
  Program out;
  out.mode = p.mode;
  for (const auto& r : p.rules) {
    bool defeated = false;
    for (const auto& w : r.body_wneg)
      if (s.contains(w)) {
        defeated = true;
        break;
      }
    if (defeated) continue;
    Rule q = r;
    q.body_wneg.clear();
    out.rules.push_back(std::move(q));
  }
  return out;
}

// Least model of a basic program: closure of the definite rules, absent when
// the closure is inconsistent or violates a constraint.
inline std::optional<Interpretation> least_model(const Program& p) {
  for (const auto& r : p.rules)
    if (!r.is_basic())
      throw std::invalid_argument("least_model: program not basic");
  Interpretation m;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : p.rules) {
      if (r.is_constraint()) continue;
      if (body_true(m, r) && !m.contains(r.head.lit)) {
        m.lits.insert(r.head.lit);
        changed = true;
      }
    }
  }
  if (!m.consistent()) return std::nullopt;
  for (const auto& r : p.rules)
    if (r.is_constraint() && body_true(m, r)) return std::nullopt;
  return m;
}

inline bool is_answer_set(const Program& p, const Interpretation& s) {
  if (!s.consistent()) return false;
  auto lm = least_model(gl_reduct(p, s));
  return lm.has_value() && *lm == s;
}

namespace detail {

// Search state over literal slots: two slots per atom (plain, strong-neg).
enum class Lv : std::uint8_t { Unknown, In, Out };

struct CompiledRule {
  int head = -1;  // literal slot, -1 for constraints
  std::vector<int> pos;
  std::vector<int> wneg;
};

struct SolveCtx {
  std::vector<CompiledRule> rules;
  std::vector<std::vector<int>> head_rules;  // literal slot -> rule indices
  int nlits = 0;
  const Program* prog = nullptr;
  std::vector<std::string> atom_names;
  AnswerSetList found;

  Literal slot_literal(int slot) const {
    return Literal{atom_names[slot / 2], (slot & 1) != 0};
  }

  // 0 undecided, 1 true, -1 false under the partial assignment.
  static int body_state(const CompiledRule& r, const std::vector<Lv>& st) {
    bool undecided = false;
    for (int l : r.pos) {
      if (st[l] == Lv::Out) return -1;
      if (st[l] == Lv::Unknown) undecided = true;
    }
    for (int l : r.wneg) {
      if (st[l] == Lv::In) return -1;
      if (st[l] == Lv::Unknown) undecided = true;
    }
    return undecided ? 0 : 1;
  }

  bool assign(std::vector<Lv>& st, int slot, Lv v) {
    if (st[slot] != Lv::Unknown) return st[slot] == v;
    st[slot] = v;
    if (v == Lv::In) {
      int comp = slot ^ 1;
      if (st[comp] == Lv::In) return false;
      st[comp] = Lv::Out;
    }
    return true;
  }

  // Sound consequences only: heads of certainly-applicable rules are in,
  // literals with no rule left to support them are out, certainly-applicable
  // constraints close the branch.
  bool propagate(std::vector<Lv>& st) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : rules) {
        int bs = body_state(r, st);
        if (bs != 1) continue;
        if (r.head < 0) return false;
        if (st[r.head] != Lv::In) {
          if (!assign(st, r.head, Lv::In)) return false;
          changed = true;
        }
      }
      for (int l = 0; l < nlits; ++l) {
        if (st[l] == Lv::Out) continue;
        bool supportable = false;
        for (int ri : head_rules[l])
          if (body_state(rules[ri], st) != -1) {
            supportable = true;
            break;
          }
        if (!supportable) {
          if (st[l] == Lv::In) return false;
          st[l] = Lv::Out;
          changed = true;
        }
      }
    }
    return true;
  }

  void search(std::vector<Lv> st) {
    if (!propagate(st)) return;
    int pick = -1;
    for (int l = 0; l < nlits; ++l)
      if (st[l] == Lv::Unknown) {
        pick = l;
        break;
      }
    if (pick < 0) {
      Interpretation s;
      for (int l = 0; l < nlits; ++l)
        if (st[l] == Lv::In) s.lits.insert(slot_literal(l));
      if (is_answer_set(*prog, s)) found.push_back(std::move(s));
      return;
    }
    std::vector<Lv> st_in = st;
    if (assign(st_in, pick, Lv::In)) search(std::move(st_in));
    st[pick] = Lv::Out;
    search(std::move(st));
  }
};

}  // namespace detail

// Complete enumeration of the answer sets of a finite propositional ELP.
// Branch-and-propagate with a final exact check per leaf; output is sorted
// and duplicate free.
inline AnswerSetList answer_sets(const Program& p,
                                 std::size_t atom_cap = kDefaultAtomCap) {
  auto atoms = p.atoms();
  if (atoms.size() > atom_cap) throw CapacityError(atoms.size(), atom_cap);
  detail::SolveCtx ctx;
  ctx.prog = &p;
  ctx.atom_names.assign(atoms.begin(), atoms.end());
  std::map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(ctx.atom_names.size()); ++i)
    idx[ctx.atom_names[i]] = i;
  auto slot = [&](const Literal& l) { return idx[l.atom] * 2 + (l.neg ? 1 : 0); };
  ctx.nlits = static_cast<int>(ctx.atom_names.size()) * 2;
  ctx.head_rules.resize(ctx.nlits);
  for (const auto& r : p.rules) {
    if (r.head.kind == HeadKind::NotAtom)
      throw std::invalid_argument("answer_sets: weak-negation head");
    detail::CompiledRule cr;
    if (r.head.kind == HeadKind::Lit) cr.head = slot(r.head.lit);
    for (const auto& l : r.body_pos) cr.pos.push_back(slot(l));
    for (const auto& l : r.body_wneg) cr.wneg.push_back(slot(l));
    if (cr.head >= 0)
      ctx.head_rules[cr.head].push_back(static_cast<int>(ctx.rules.size()));
    ctx.rules.push_back(std::move(cr));
  }
  ctx.search(std::vector<detail::Lv>(ctx.nlits, detail::Lv::Unknown));
  std::set<Interpretation> uniq(ctx.found.begin(), ctx.found.end());
  return AnswerSetList(uniq.begin(), uniq.end());
}

// Belief-set membership: r holds in every answer set; vacuously true when
// there is none.
inline bool bel_contains(const Program& p, const Rule& r,
                         std::size_t atom_cap = kDefaultAtomCap) {
  for (const auto& s : answer_sets(p, atom_cap))
    if (!satisfies(s, r)) return false;
  return true;
}

inline bool bel_contains(const Program& p, const Program& q,
                         std::size_t atom_cap = kDefaultAtomCap) {
  for (const auto& s : answer_sets(p, atom_cap))
    for (const auto& r : q.rules)
      if (!satisfies(s, r)) return false;
  return true;
}

// Equivalence modulo an atom set: equal projected answer-set families.
inline bool equivalent(const Program& p1, const Program& p2,
                       const std::set<std::string>& atoms,
                       std::size_t atom_cap = kDefaultAtomCap) {
  return project_all(answer_sets(p1, atom_cap), atoms) ==
         project_all(answer_sets(p2, atom_cap), atoms);
}

}  // namespace updlp

#endif
