#ifndef UPDLP_MINIMALITY_HPP
#define UPDLP_MINIMALITY_HPP

#include <algorithm>
#include <string>

#include "core.hpp"
#include "solver.hpp"
#include "update.hpp"

namespace updlp {

namespace detail {

inline std::string keep_atom(const RuleName& n) {
  return "s_" + std::to_string(n.layer) + "_" + std::to_string(n.position);
}

inline std::string eq_atom(int i) { return "eq" + std::to_string(i); }
inline std::string ok_atom(int i) { return "ok" + std::to_string(i); }

template <typename T>
bool proper_subset(const std::set<T>& a, const std::set<T>& b) {
  return a.size() < b.size() &&
         std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

// S1 is preferred over S2 when its rejections shrink at some layer and
// coincide at every later layer.
inline bool is_preferred(const UpdateSequence& seq, const Interpretation& s1,
                         const Interpretation& s2) {
  RejectionSet r1 = rej(seq, s1);
  RejectionSet r2 = rej(seq, s2);
  const int n = seq.size();
  for (int i = 1; i <= n; ++i) {
    if (!detail::proper_subset(r1.layer(i), r2.layer(i))) continue;
    bool later_equal = true;
    for (int j = i + 1; j <= n; ++j)
      if (r1.layer(j) != r2.layer(j)) {
        later_equal = false;
        break;
      }
    if (later_equal) return true;
  }
  return false;
}

// Extends the compiled program so that its answer sets are exactly the
// witnesses rejecting a proper subset of what S rejects.  S must be an
// update answer set of the sequence.
inline Program build_min_test_program(const UpdateSequence& seq,
                                      const Interpretation& s) {
  lift(seq, s);
  Program t = build_update_program(seq);
  auto add = [&t](Rule r) {
    r.name = RuleName{1, static_cast<int>(t.rules.size())};
    t.rules.push_back(std::move(r));
  };
  for (const auto& p : seq.programs) {
    for (const auto& r : p.rules) {
      if (r.is_constraint()) continue;
      Rule c;
      c.body_pos.insert(pos(rej_atom(r.name)));
      c.body_wneg.insert(pos(detail::keep_atom(r.name)));
      add(std::move(c));
    }
  }
  for (const auto& name : rej(seq, s).total()) {
    Rule improves;
    improves.head = lit_head(pos("ok"));
    improves.body_wneg.insert(pos(rej_atom(name)));
    add(std::move(improves));
    add(fact(pos(detail::keep_atom(name))));
  }
  Rule require_ok;
  require_ok.body_wneg.insert(pos("ok"));
  add(std::move(require_ok));
  return t;
}

// Extends the compiled program so that its answer sets are exactly the
// witnesses preferred over S: rejections shrink at some layer and agree at
// all later layers.  The eq chain tracks agreement downward from the top.
inline Program build_strict_test_program(const UpdateSequence& seq,
                                         const Interpretation& s) {
  lift(seq, s);
  const int n = seq.size();
  Program t = build_update_program(seq);
  auto add = [&t](Rule r) {
    r.name = RuleName{1, static_cast<int>(t.rules.size())};
    t.rules.push_back(std::move(r));
  };
  for (const auto& p : seq.programs) {
    for (const auto& r : p.rules) {
      if (r.is_constraint()) continue;
      Rule c;
      c.body_pos.insert(pos(rej_atom(r.name)));
      c.body_pos.insert(pos(detail::eq_atom(r.name.layer + 1)));
      c.body_wneg.insert(pos(detail::keep_atom(r.name)));
      add(std::move(c));
    }
  }
  for (const auto& name : rej(seq, s).total()) {
    Rule improves;
    improves.head = lit_head(pos(detail::ok_atom(name.layer)));
    improves.body_pos.insert(pos(detail::eq_atom(name.layer + 1)));
    improves.body_wneg.insert(pos(rej_atom(name)));
    add(std::move(improves));
    add(fact(pos(detail::keep_atom(name))));
  }
  for (int i = 1; i <= n; ++i) {
    Rule chain;
    chain.head = lit_head(pos(detail::eq_atom(i)));
    chain.body_pos.insert(pos(detail::eq_atom(i + 1)));
    chain.body_wneg.insert(pos(detail::ok_atom(i)));
    add(std::move(chain));
    Rule lifts;
    lifts.head = lit_head(pos("ok"));
    lifts.body_pos.insert(pos(detail::ok_atom(i)));
    add(std::move(lifts));
  }
  Rule require_ok;
  require_ok.body_wneg.insert(pos("ok"));
  add(std::move(require_ok));
  add(fact(pos(detail::eq_atom(n + 1))));
  return t;
}

enum class MinimalityMethod { Direct, TestProgram };

namespace detail {

inline bool test_program_empty(const Program& t, std::size_t atom_cap) {
  std::size_t widened = std::max(atom_cap, t.atoms().size());
  return answer_sets(t, widened).empty();
}

}  // namespace detail

inline AnswerSetList minimal_answer_sets(
    const UpdateSequence& seq,
    MinimalityMethod method = MinimalityMethod::Direct,
    std::size_t atom_cap = kDefaultAtomCap) {
  AnswerSetList all = update_answer_sets(seq, atom_cap);
  AnswerSetList out;
  if (method == MinimalityMethod::Direct) {
    std::vector<std::set<RuleName>> rejs;
    rejs.reserve(all.size());
    for (const auto& s : all) rejs.push_back(rej(seq, s).total());
    for (std::size_t i = 0; i < all.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < all.size() && minimal; ++j)
        if (detail::proper_subset(rejs[j], rejs[i])) minimal = false;
      if (minimal) out.push_back(all[i]);
    }
  } else {
    for (const auto& s : all)
      if (detail::test_program_empty(build_min_test_program(seq, s), atom_cap))
        out.push_back(s);
  }
  return out;
}

inline AnswerSetList strictly_minimal_answer_sets(
    const UpdateSequence& seq,
    MinimalityMethod method = MinimalityMethod::Direct,
    std::size_t atom_cap = kDefaultAtomCap) {
  AnswerSetList all = update_answer_sets(seq, atom_cap);
  AnswerSetList out;
  if (method == MinimalityMethod::Direct) {
    for (const auto& s : all) {
      bool best = true;
      for (const auto& t : all)
        if (is_preferred(seq, t, s)) {
          best = false;
          break;
        }
      if (best) out.push_back(s);
    }
  } else {
    for (const auto& s : all)
      if (detail::test_program_empty(build_strict_test_program(seq, s),
                                     atom_cap))
        out.push_back(s);
  }
  return out;
}

}  // namespace updlp

#endif
