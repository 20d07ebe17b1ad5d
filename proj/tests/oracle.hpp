#ifndef UPDLP_TESTS_ORACLE_HPP
#define UPDLP_TESTS_ORACLE_HPP

// Reference answer-set enumeration, written independently of the library
// solver.  Usable up to a handful of atoms; everything is done by exhaustive
// enumeration and naive fixpoint iteration.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "updlp/core.hpp"

namespace oracle {

// Naive closure of the weak-negation-free part of `kept` rules.  Returns
// nullopt when the closure turns inconsistent or fires a constraint.
inline std::optional<std::set<updlp::Literal>> naive_closure(
    const std::vector<const updlp::Rule*>& kept) {
  std::set<updlp::Literal> der;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const updlp::Rule* r : kept) {
      bool fire = true;
      for (const auto& l : r->body_pos)
        if (!der.count(l)) {
          fire = false;
          break;
        }
      if (!fire) continue;
      if (r->head.kind == updlp::HeadKind::Absent) return std::nullopt;
      if (der.insert(r->head.lit).second) {
        if (der.count(r->head.lit.complement())) return std::nullopt;
        changed = true;
      }
    }
  }
  return der;
}

inline bool oracle_is_answer_set(const updlp::Program& p,
                                 const std::set<updlp::Literal>& s) {
  for (const auto& l : s)
    if (s.count(l.complement())) return false;
  std::vector<const updlp::Rule*> kept;
  for (const auto& r : p.rules) {
    if (r.head.kind == updlp::HeadKind::NotAtom)
      throw std::invalid_argument("oracle: weak-negation head");
    bool blocked = false;
    for (const auto& l : r.body_wneg)
      if (s.count(l)) {
        blocked = true;
        break;
      }
    if (!blocked) kept.push_back(&r);
  }
  auto closure = naive_closure(kept);
  return closure.has_value() && *closure == s;
}

inline std::vector<std::set<updlp::Literal>> oracle_answer_sets(
    const updlp::Program& p) {
  const std::set<std::string> atom_set = p.atoms();
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  if (atoms.size() > 10) throw std::invalid_argument("oracle: too many atoms");
  std::vector<std::set<updlp::Literal>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::set<updlp::Literal> s;
    std::size_t c = code;
    for (const auto& a : atoms) {
      switch (c % 3) {
        case 1: s.insert(updlp::pos(a)); break;
        case 2: s.insert(updlp::sneg(a)); break;
        default: break;
      }
      c /= 3;
    }
    if (oracle_is_answer_set(p, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<updlp::Literal> to_set(const updlp::Interpretation& i) {
  return i.lits;
}

inline std::vector<std::set<updlp::Literal>> to_sets(
    const updlp::AnswerSetList& sets) {
  std::vector<std::set<updlp::Literal>> out;
  for (const auto& s : sets) out.push_back(s.lits);
  return out;
}

}  // namespace oracle

#endif
