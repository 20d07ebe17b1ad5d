#ifndef UPDLP_ALT_SEMANTICS_HPP
#define UPDLP_ALT_SEMANTICS_HPP

#include <utility>
#include <vector>

#include "core.hpp"
#include "solver.hpp"

namespace updlp {

// A program distributed over objects with a strict partial specificity
// order.  less holds pairs (a, b) meaning object a is more specific than
// object b.
struct InheritanceProgram {
  std::vector<Program> objects;
  std::vector<std::pair<int, int>> less;

  bool more_specific(int a, int b) const {
    for (const auto& [x, y] : less)
      if (x == a && y == b) return true;
    return false;
  }

  std::set<std::string> atoms() const {
    std::set<std::string> out;
    for (const auto& p : objects) p.collect_atoms(out);
    return out;
  }
};

// A sequence becomes an inheritance program whose objects are the updates,
// each later update more specific than every earlier one.
inline InheritanceProgram to_inheritance(const UpdateSequence& seq) {
  InheritanceProgram ip;
  ip.objects = seq.programs;
  const int n = seq.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < a; ++b) ip.less.emplace_back(a, b);
  return ip;
}

// r1 (in object a) overrides r2 (in object b): a is more specific, the
// heads clash, r1 is applicable with its head standing, and r2's body
// applies.  Requiring r1's body keeps a rule from being displaced by a
// winner that never fires under i.
inline bool overrides(const InheritanceProgram& ip, const Interpretation& i,
                      int a, const Rule& r1, int b, const Rule& r2) {
  return ip.more_specific(a, b) && conflicting(r1, r2) &&
         i.contains(r1.head.lit) && body_true(i, r1) && body_true(i, r2);
}

// Keeps rules neither overridden nor defeated, then strips weak bodies.
inline Program inh_reduct(const InheritanceProgram& ip,
                          const Interpretation& i) {
  Program out;
  out.mode = Mode::Elp;
  const int n = static_cast<int>(ip.objects.size());
  for (int b = 0; b < n; ++b) {
    for (const auto& r : ip.objects[b].rules) {
      bool drop = false;
      for (const auto& l : r.body_wneg)
        if (i.contains(l)) {
          drop = true;
          break;
        }
      for (int a = 0; a < n && !drop; ++a)
        for (const auto& r1 : ip.objects[a].rules) {
          if (r1.is_constraint()) continue;
          if (overrides(ip, i, a, r1, b, r)) {
            drop = true;
            break;
          }
        }
      if (drop) continue;
      Rule kept = r;
      kept.body_wneg.clear();
      out.rules.push_back(std::move(kept));
    }
  }
  return out;
}

inline bool is_inh_answer_set(const InheritanceProgram& ip,
                              const Interpretation& i) {
  if (!i.consistent()) return false;
  auto lm = least_model(inh_reduct(ip, i));
  return lm.has_value() && *lm == i;
}

inline AnswerSetList inh_answer_sets(const InheritanceProgram& ip,
                                     std::size_t atom_cap = kDefaultAtomCap) {
  auto atoms = ip.atoms();
  if (atoms.size() > atom_cap) throw CapacityError(atoms.size(), atom_cap);
  AnswerSetList out;
  detail::each_consistent(atoms, [&](const Interpretation& i) {
    if (is_inh_answer_set(ip, i)) out.push_back(i);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Rules of update i discarded at state j: some later update up to j holds a
// conflicting rule and both bodies apply.
inline std::set<RuleName> rejected_between(const UpdateSequence& seq,
                                           const Interpretation& s, int i,
                                           int j) {
  std::set<RuleName> out;
  for (const auto& r : seq.programs[i - 1].rules) {
    if (r.is_constraint() || !body_true(s, r)) continue;
    for (int k = i + 1; k <= j && !out.count(r.name); ++k)
      for (const auto& r2 : seq.programs[k - 1].rules)
        if (conflicting(r, r2) && body_true(s, r2)) {
          out.insert(r.name);
          break;
        }
  }
  return out;
}

inline Program justified_residue(const UpdateSequence& seq,
                                 const Interpretation& s, int upto, int j) {
  Program out;
  out.mode = Mode::Elp;
  for (int i = 1; i <= upto; ++i) {
    auto dropped = rejected_between(seq, s, i, j);
    for (const auto& r : seq.programs[i - 1].rules)
      if (!dropped.count(r.name)) out.rules.push_back(r);
  }
  return out;
}

// S is a justified update at state j when it is an answer set of the rules
// surviving up to j and every earlier stage still has some answer set.
inline bool is_justified_update(const UpdateSequence& seq,
                                const Interpretation& s, int j,
                                std::size_t atom_cap = kDefaultAtomCap) {
  if (j < 1 || j > seq.size())
    throw std::invalid_argument("is_justified_update: state out of range");
  auto atoms = seq.atoms();
  if (atoms.size() > atom_cap) throw CapacityError(atoms.size(), atom_cap);
  if (!is_answer_set(justified_residue(seq, s, j, j), s)) return false;
  for (int l = 1; l < j; ++l)
    if (answer_sets(justified_residue(seq, s, l, j), atom_cap).empty())
      return false;
  return true;
}

inline AnswerSetList justified_updates(const UpdateSequence& seq, int j,
                                       std::size_t atom_cap = kDefaultAtomCap) {
  auto atoms = seq.atoms();
  if (atoms.size() > atom_cap) throw CapacityError(atoms.size(), atom_cap);
  AnswerSetList out;
  detail::each_consistent(atoms, [&](const Interpretation& s) {
    if (is_justified_update(seq, s, j, atom_cap)) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace updlp

#endif
