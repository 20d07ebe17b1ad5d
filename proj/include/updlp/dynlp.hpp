#ifndef UPDLP_DYNLP_HPP
#define UPDLP_DYNLP_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "solver.hpp"
#include "update.hpp"

namespace updlp {

// Total two-valued view over a fixed atom universe: atoms outside pos are
// weakly false.
struct GeneralizedInterpretation {
  std::set<std::string> pos;
  std::set<std::string> universe;

  auto operator<=>(const GeneralizedInterpretation&) const = default;

  bool holds(const std::string& a) const { return pos.count(a) != 0; }
  bool holds_not(const std::string& a) const { return pos.count(a) == 0; }
};

namespace detail {

inline void require_glp(const UpdateSequence& seq, const char* who) {
  if (seq.mode != Mode::Glp)
    throw std::invalid_argument(std::string(who) + ": GLP sequences only");
  for (const auto& p : seq.programs)
    for (const auto& r : p.rules) {
      if (r.head.kind == HeadKind::Absent)
        throw std::invalid_argument(std::string(who) + ": GLP rules need a head");
      if (r.head.lit.neg)
        throw std::invalid_argument(std::string(who) +
                                    ": strong negation not allowed");
    }
}

}  // namespace detail

inline bool gen_body_true(const GeneralizedInterpretation& i, const Rule& r) {
  for (const auto& l : r.body_pos)
    if (!i.holds(l.atom)) return false;
  for (const auto& l : r.body_wneg)
    if (i.holds(l.atom)) return false;
  return true;
}

// Heads A and not A over the same atom.
inline bool head_flip(const Rule& r1, const Rule& r2) {
  return ((r1.head.kind == HeadKind::Lit && r2.head.kind == HeadKind::NotAtom) ||
          (r1.head.kind == HeadKind::NotAtom && r2.head.kind == HeadKind::Lit)) &&
         r1.head.lit.atom == r2.head.lit.atom;
}

// Rules whose head is flipped by a later rule, both bodies applying.
inline std::set<RuleName> dyn_rejected(const UpdateSequence& seq,
                                       const GeneralizedInterpretation& i) {
  std::set<RuleName> out;
  const int n = seq.size();
  for (int a = 1; a <= n; ++a)
    for (const auto& r : seq.programs[a - 1].rules) {
      if (!gen_body_true(i, r)) continue;
      for (int b = a + 1; b <= n && !out.count(r.name); ++b)
        for (const auto& r2 : seq.programs[b - 1].rules)
          if (head_flip(r, r2) && gen_body_true(i, r2)) {
            out.insert(r.name);
            break;
          }
    }
  return out;
}

// Atoms with no applying rule anywhere in the sequence, rejected or not.
inline std::set<std::string> dyn_defaults(const UpdateSequence& seq,
                                          const GeneralizedInterpretation& i) {
  std::set<std::string> out = i.universe;
  for (const auto& p : seq.programs)
    for (const auto& r : p.rules)
      if (r.head.kind == HeadKind::Lit && gen_body_true(i, r))
        out.erase(r.head.lit.atom);
  return out;
}

// Horn closure treating weakly negated atoms as fresh propositional atoms.
// not_facts seeds the weak side; rule elements under weak negation are
// premises on that side.
inline std::pair<std::set<std::string>, std::set<std::string>> cn(
    const std::vector<const Rule*>& rules,
    const std::set<std::string>& not_facts) {
  std::set<std::string> der_pos;
  std::set<std::string> der_not = not_facts;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule* r : rules) {
      bool fire = true;
      for (const auto& l : r->body_pos)
        if (!der_pos.count(l.atom)) {
          fire = false;
          break;
        }
      for (const auto& l : r->body_wneg)
        if (fire && !der_not.count(l.atom)) fire = false;
      if (!fire) continue;
      if (r->head.kind == HeadKind::Lit) {
        if (der_pos.insert(r->head.lit.atom).second) changed = true;
      } else {
        if (der_not.insert(r->head.lit.atom).second) changed = true;
      }
    }
  }
  return {std::move(der_pos), std::move(der_not)};
}

inline bool is_dynamic_stable(const UpdateSequence& seq,
                              const GeneralizedInterpretation& i) {
  detail::require_glp(seq, "is_dynamic_stable");
  for (const auto& a : seq.atoms())
    if (!i.universe.count(a))
      throw std::invalid_argument("is_dynamic_stable: universe too small");
  auto rejected = dyn_rejected(seq, i);
  std::vector<const Rule*> residue;
  for (const auto& p : seq.programs)
    for (const auto& r : p.rules)
      if (!rejected.count(r.name)) residue.push_back(&r);
  auto [der_pos, der_not] = cn(residue, dyn_defaults(seq, i));
  if (der_pos != i.pos) return false;
  std::set<std::string> want_not;
  for (const auto& a : i.universe)
    if (!i.pos.count(a)) want_not.insert(a);
  return der_not == want_not;
}

inline std::vector<GeneralizedInterpretation> dynamic_stable_models(
    const UpdateSequence& seq, std::size_t atom_cap = kDefaultAtomCap) {
  detail::require_glp(seq, "dynamic_stable_models");
  auto universe = seq.atoms();
  if (universe.size() > atom_cap) throw CapacityError(universe.size(), atom_cap);
  std::vector<std::string> order(universe.begin(), universe.end());
  std::vector<GeneralizedInterpretation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << order.size());
       ++mask) {
    GeneralizedInterpretation i;
    i.universe = universe;
    for (std::size_t k = 0; k < order.size(); ++k)
      if (mask & (std::uint64_t{1} << k)) i.pos.insert(order[k]);
    if (is_dynamic_stable(seq, i)) out.push_back(std::move(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Spellings for the bottom-up compilation.  All carry reserved prefixes, so
// parsed input can never collide with them.
namespace detail {

inline std::string dp_step(int i, const std::string& a) {
  return "lv" + std::to_string(i) + "p_" + a;
}
inline std::string dp_step_dash(int i, const std::string& a) {
  return "lv" + std::to_string(i) + "pn_" + a;
}
inline std::string dp_level(int i, const std::string& a) {
  return "lv" + std::to_string(i) + "_" + a;
}
inline std::string dp_level_dash(int i, const std::string& a) {
  return "lv" + std::to_string(i) + "n_" + a;
}
inline std::string dp_dash(const std::string& a) { return "nn1_" + a; }
inline std::string dp_reject(int i, const std::string& a) {
  return "rej_p" + std::to_string(i) + "_" + a;
}
inline std::string dp_reject_dash(int i, const std::string& a) {
  return "rej_n" + std::to_string(i) + "_" + a;
}
inline std::string dp_not_marker(const std::string& a) { return "nn0_" + a; }

}  // namespace detail

// Bottom-up single-program compilation of a GLP sequence.  Weakly negated
// body atoms become dashed atoms, levels chain upward guarded by rejection
// atoms, level-0 dashes hold by default.  A weak head surfaces as a marker
// atom: an answer set of the result encodes a stable model exactly when no
// marker clashes with its positive atom.
inline Program build_dynamic_program(const UpdateSequence& seq) {
  detail::require_glp(seq, "build_dynamic_program");
  using namespace detail;
  const int n = seq.size();
  auto universe = seq.atoms();
  Program out;
  out.mode = Mode::Elp;
  auto add = [&out](Rule r) {
    r.name = RuleName{1, static_cast<int>(out.rules.size())};
    out.rules.push_back(std::move(r));
  };

  for (int i = 1; i <= n; ++i) {
    for (const auto& r : seq.programs[i - 1].rules) {
      Rule q;
      const std::string& a = r.head.lit.atom;
      q.head = lit_head(pos(r.head.kind == HeadKind::Lit ? dp_step(i, a)
                                                         : dp_step_dash(i, a)));
      q.body_pos = r.body_pos;
      for (const auto& l : r.body_wneg) q.body_pos.insert(pos(dp_dash(l.atom)));
      add(std::move(q));
    }
  }

  for (const auto& a : universe) {
    for (int i = 1; i <= n; ++i) {
      Rule up;
      up.head = lit_head(pos(dp_level(i, a)));
      up.body_pos.insert(pos(dp_step(i, a)));
      add(std::move(up));
      Rule kill_dash;
      kill_dash.head = lit_head(pos(dp_reject_dash(i - 1, a)));
      kill_dash.body_pos.insert(pos(dp_step(i, a)));
      add(std::move(kill_dash));
      Rule up_dash;
      up_dash.head = lit_head(pos(dp_level_dash(i, a)));
      up_dash.body_pos.insert(pos(dp_step_dash(i, a)));
      add(std::move(up_dash));
      Rule kill;
      kill.head = lit_head(pos(dp_reject(i - 1, a)));
      kill.body_pos.insert(pos(dp_step_dash(i, a)));
      add(std::move(kill));
      Rule inherit_dash;
      inherit_dash.head = lit_head(pos(dp_level_dash(i, a)));
      inherit_dash.body_pos.insert(pos(dp_level_dash(i - 1, a)));
      inherit_dash.body_wneg.insert(pos(dp_reject_dash(i - 1, a)));
      add(std::move(inherit_dash));
      Rule inherit;
      inherit.head = lit_head(pos(dp_level(i, a)));
      inherit.body_pos.insert(pos(dp_level(i - 1, a)));
      inherit.body_wneg.insert(pos(dp_reject(i - 1, a)));
      add(std::move(inherit));
    }
  }

  for (const auto& a : universe) {
    add(fact(pos(dp_level_dash(0, a))));
    Rule surface;
    surface.head = lit_head(pos(a));
    surface.body_pos.insert(pos(dp_level(n, a)));
    add(std::move(surface));
    Rule surface_dash;
    surface_dash.head = lit_head(pos(dp_dash(a)));
    surface_dash.body_pos.insert(pos(dp_level_dash(n, a)));
    add(std::move(surface_dash));
    Rule marker;
    marker.head = lit_head(pos(dp_not_marker(a)));
    marker.body_pos.insert(pos(dp_level_dash(n, a)));
    add(std::move(marker));
  }
  return out;
}

// Stable models read off the compiled program: answer sets whose weak-head
// markers are consistent, projected to the base universe.
inline std::vector<GeneralizedInterpretation> dynamic_program_stable_models(
    const UpdateSequence& seq, std::size_t atom_cap = kDefaultAtomCap) {
  auto universe = seq.atoms();
  if (universe.size() > atom_cap) throw CapacityError(universe.size(), atom_cap);
  Program compiled = build_dynamic_program(seq);
  std::size_t widened = std::max(atom_cap, compiled.atoms().size());
  std::set<GeneralizedInterpretation> uniq;
  for (const auto& s : answer_sets(compiled, widened)) {
    bool ok = true;
    GeneralizedInterpretation i;
    i.universe = universe;
    for (const auto& a : universe) {
      bool holds = s.contains(pos(a));
      if (holds && s.contains(pos(detail::dp_not_marker(a)))) {
        ok = false;
        break;
      }
      if (holds) i.pos.insert(a);
    }
    if (ok) uniq.insert(std::move(i));
  }
  return {uniq.begin(), uniq.end()};
}

// Rewrites weak heads to strong negation and closes the final update with
// default falsity, making every answer set total.
inline UpdateSequence q_translate(const UpdateSequence& seq) {
  detail::require_glp(seq, "q_translate");
  std::vector<Program> parts;
  for (const auto& p : seq.programs) {
    Program q;
    q.mode = Mode::Elp;
    for (const auto& r : p.rules) {
      Rule s = r;
      if (s.head.kind == HeadKind::NotAtom) s.head = lit_head(sneg(s.head.lit.atom));
      q.rules.push_back(std::move(s));
    }
    parts.push_back(std::move(q));
  }
  for (const auto& a : seq.atoms()) {
    Rule close;
    close.head = lit_head(sneg(a));
    close.body_wneg.insert(pos(a));
    parts.back().rules.push_back(std::move(close));
  }
  return make_sequence(std::move(parts), Mode::Elp);
}

// ELP sequences enter the dynamic semantics with strong negation spelled as
// fresh atoms and the final update extended by complement exclusion.
inline std::string embedded_atom(const Literal& l) {
  return l.neg ? "nn_" + l.atom : l.atom;
}

inline UpdateSequence embed_sequence(const UpdateSequence& seq) {
  if (seq.mode != Mode::Elp)
    throw std::invalid_argument("embed_sequence: ELP sequences only");
  std::vector<Program> parts;
  for (const auto& p : seq.programs) {
    Program g;
    g.mode = Mode::Glp;
    for (const auto& r : p.rules) {
      if (r.is_constraint())
        throw std::invalid_argument(
            "embed_sequence: constraints have no dynamic reading");
      Rule s;
      s.head = lit_head(pos(embedded_atom(r.head.lit)));
      for (const auto& l : r.body_pos) s.body_pos.insert(pos(embedded_atom(l)));
      for (const auto& l : r.body_wneg) s.body_wneg.insert(pos(embedded_atom(l)));
      g.rules.push_back(std::move(s));
    }
    parts.push_back(std::move(g));
  }
  for (const auto& a : seq.atoms()) {
    Rule down;
    down.head = not_head(a);
    down.body_pos.insert(pos("nn_" + a));
    parts.back().rules.push_back(std::move(down));
    Rule up;
    up.head = not_head("nn_" + a);
    up.body_pos.insert(pos(a));
    parts.back().rules.push_back(std::move(up));
  }
  return make_sequence(std::move(parts), Mode::Glp);
}

inline GeneralizedInterpretation totalize(const Interpretation& s,
                                          const std::set<std::string>& universe) {
  GeneralizedInterpretation i;
  i.universe = universe;
  for (const auto& l : s.lits) i.pos.insert(embedded_atom(l));
  return i;
}

inline AnswerSetList dynamic_answer_sets(const UpdateSequence& seq,
                                         std::size_t atom_cap = kDefaultAtomCap) {
  auto base = seq.atoms();
  if (base.size() > atom_cap) throw CapacityError(base.size(), atom_cap);
  UpdateSequence glp = embed_sequence(seq);
  auto universe = glp.atoms();
  AnswerSetList out;
  detail::each_consistent(base, [&](const Interpretation& s) {
    if (is_dynamic_stable(glp, totalize(s, universe))) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// AND/OR graph of a GLP sequence.  Rules are AND-nodes wired to their body
// elements; atoms and weakly negated atoms are OR-nodes wired to their head
// rules.  Atom nodes always carry a connector, possibly empty; weak nodes
// carry one only when some rule has that weak head.
struct GraphNode {
  bool is_rule = false;
  RuleName rule{};
  std::string atom;
  bool negated = false;

  auto operator<=>(const GraphNode&) const = default;
};

inline GraphNode rule_node(const RuleName& n) {
  return GraphNode{true, n, "", false};
}
inline GraphNode atom_node(std::string a) {
  return GraphNode{false, {}, std::move(a), false};
}
inline GraphNode weak_node(std::string a) {
  return GraphNode{false, {}, std::move(a), true};
}

inline std::string to_string(const GraphNode& n) {
  if (n.is_rule) return to_string(n.rule);
  return n.negated ? "not " + n.atom : n.atom;
}

struct AndOrGraph {
  std::set<GraphNode> nodes;
  std::map<GraphNode, std::vector<GraphNode>> connectors;

  bool has_node(const GraphNode& n) const { return nodes.count(n) != 0; }

  const std::vector<GraphNode>* connector(const GraphNode& n) const {
    auto it = connectors.find(n);
    return it == connectors.end() ? nullptr : &it->second;
  }
};

inline AndOrGraph build_andor_graph(const UpdateSequence& seq) {
  detail::require_glp(seq, "build_andor_graph");
  AndOrGraph g;
  auto literal_node = [](const Rule& r) {
    return r.head.kind == HeadKind::Lit ? atom_node(r.head.lit.atom)
                                        : weak_node(r.head.lit.atom);
  };
  for (const auto& p : seq.programs)
    for (const auto& r : p.rules) {
      GraphNode rn = rule_node(r.name);
      g.nodes.insert(rn);
      g.nodes.insert(literal_node(r));
      std::vector<GraphNode> outs;
      for (const auto& l : r.body_pos) {
        outs.push_back(atom_node(l.atom));
        g.nodes.insert(outs.back());
      }
      for (const auto& l : r.body_wneg) {
        outs.push_back(weak_node(l.atom));
        g.nodes.insert(outs.back());
      }
      g.connectors[rn] = std::move(outs);
    }
  for (const auto& n : g.nodes) {
    if (n.is_rule) continue;
    std::vector<GraphNode> heads;
    for (const auto& p : seq.programs)
      for (const auto& r : p.rules) {
        bool match = n.negated ? r.head.kind == HeadKind::NotAtom
                               : r.head.kind == HeadKind::Lit;
        if (match && r.head.lit.atom == n.atom) heads.push_back(rule_node(r.name));
      }
    if (!n.negated || !heads.empty()) g.connectors[n] = std::move(heads);
  }
  return g;
}

// Reduction against a generalized interpretation: rejected and inapplicable
// rules disappear, and a weak node earns a trivial connector when its atom
// lost every rule without any rejection being involved.
inline AndOrGraph reduce_graph(const AndOrGraph& g, const UpdateSequence& seq,
                               const GeneralizedInterpretation& i) {
  auto rejected = dyn_rejected(seq, i);
  std::set<GraphNode> removed;
  for (const auto& p : seq.programs)
    for (const auto& r : p.rules)
      if (rejected.count(r.name) || !gen_body_true(i, r))
        removed.insert(rule_node(r.name));

  AndOrGraph out;
  for (const auto& n : g.nodes)
    if (!removed.count(n)) out.nodes.insert(n);
  for (const auto& [n, outs] : g.connectors) {
    if (removed.count(n)) continue;
    std::vector<GraphNode> kept;
    for (const auto& o : outs)
      if (!removed.count(o)) kept.push_back(o);
    // An atom or weak node with no surviving rule has no derivation left;
    // dropping the connector keeps "empty" meaning "grounded".
    if (!n.is_rule && kept.empty()) continue;
    out.connectors[n] = std::move(kept);
  }

  std::set<std::string> rejected_heads;
  for (const auto& p : seq.programs)
    for (const auto& r : p.rules)
      if (rejected.count(r.name) && r.head.kind == HeadKind::Lit)
        rejected_heads.insert(r.head.lit.atom);

  for (const auto& n : g.nodes) {
    if (n.is_rule || !n.negated || !out.has_node(n)) continue;
    const auto* ac = out.connector(atom_node(n.atom));
    bool atom_empty =
        !out.has_node(atom_node(n.atom)) || ac == nullptr || ac->empty();
    if (atom_empty && !rejected_heads.count(n.atom)) out.connectors[n] = {};
  }
  return out;
}

namespace detail {

// Bottom-up closure of the marking game: empty connectors ground a node,
// AND-nodes need all outputs marked, OR-nodes need one.
inline std::set<GraphNode> acyclic_solved(const AndOrGraph& g) {
  std::set<GraphNode> solved;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [n, outs] : g.connectors) {
      if (solved.count(n)) continue;
      bool ok;
      if (outs.empty()) {
        ok = true;
      } else if (n.is_rule) {
        ok = true;
        for (const auto& o : outs)
          if (!solved.count(o)) {
            ok = false;
            break;
          }
      } else {
        ok = false;
        for (const auto& o : outs)
          if (solved.count(o)) {
            ok = true;
            break;
          }
      }
      if (ok) {
        solved.insert(n);
        changed = true;
      }
    }
  }
  return solved;
}

}  // namespace detail

// A path whose associated graph is acyclic exists exactly when the root is
// reached by the bottom-up closure.
inline bool acyclic_path_from(const AndOrGraph& g, const GraphNode& root) {
  if (!g.has_node(root))
    throw std::invalid_argument("acyclic_path_from: no such node");
  return detail::acyclic_solved(g).count(root) != 0;
}

namespace detail {

// Nodes and edges realized by some path, infinite ones included: a node
// survives while its connector keeps a usable continuation.
inline std::pair<std::set<GraphNode>, std::map<GraphNode, std::set<GraphNode>>>
admitted_subgraph(const AndOrGraph& g) {
  std::set<GraphNode> adm;
  for (const auto& [n, _] : g.connectors) adm.insert(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = adm.begin(); it != adm.end();) {
      const auto* outs = g.connector(*it);
      bool keep;
      if (outs->empty()) {
        keep = true;
      } else if (it->is_rule) {
        keep = true;
        for (const auto& o : *outs)
          if (!adm.count(o)) {
            keep = false;
            break;
          }
      } else {
        keep = false;
        for (const auto& o : *outs)
          if (adm.count(o)) {
            keep = true;
            break;
          }
      }
      if (!keep) {
        it = adm.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  std::map<GraphNode, std::set<GraphNode>> edges;
  for (const auto& n : adm) {
    const auto* outs = g.connector(n);
    for (const auto& o : *outs)
      if (adm.count(o)) edges[n].insert(o);
  }
  return {std::move(adm), std::move(edges)};
}

}  // namespace detail

// Static certificate: in the path-realizable part of the graph, every cycle
// through a weak node passes through its atom.  Reduction against a total
// candidate removes one side of each such pair, so no reduced graph keeps a
// cycle through a weak node.
inline bool cycle_certificate(const AndOrGraph& g) {
  auto [adm, edges] = detail::admitted_subgraph(g);
  for (const auto& n : adm) {
    if (n.is_rule || !n.negated) continue;
    GraphNode banned = atom_node(n.atom);
    std::set<GraphNode> seen;
    std::vector<GraphNode> stack;
    auto push = [&](const GraphNode& m) {
      if (m == banned || seen.count(m)) return;
      seen.insert(m);
      stack.push_back(m);
    };
    bool back = false;
    auto expand = [&](const GraphNode& from) {
      auto eit = edges.find(from);
      if (eit == edges.end()) return;
      for (const auto& o : eit->second) {
        if (o == n) {
          back = true;
          return;
        }
        push(o);
      }
    };
    expand(n);
    while (!stack.empty() && !back) {
      GraphNode cur = stack.back();
      stack.pop_back();
      expand(cur);
    }
    if (back) return false;
  }
  return true;
}

struct CoincidenceRecord {
  Interpretation answer_set;
  bool graph_verdict = false;
  bool fixpoint_verdict = false;
  std::string note;
};

struct CoincidenceReport {
  bool certificate = false;
  std::vector<CoincidenceRecord> records;

  bool all_agree() const {
    for (const auto& r : records)
      if (r.graph_verdict != r.fixpoint_verdict) return false;
    return true;
  }
};

namespace detail {

// An atom is settled when the reduced graph derives exactly its side of the
// candidate: grounded support for the atom itself iff it holds, and a
// default grant or grounded weak support iff it does not.  Checking both
// directions makes the verdict match the fixpoint even when displacement
// leaves a stray derivation or strips a conclusion of grounded support.
inline bool graph_conditions(const UpdateSequence& glp,
                             const std::set<GraphNode>& solved,
                             const GeneralizedInterpretation& gi,
                             const std::string& atom, std::string& note) {
  bool holds = gi.holds(atom);
  bool derivable = solved.count(atom_node(atom)) != 0;
  if (holds && !derivable) {
    note = "no acyclic support for " + atom;
    return false;
  }
  if (!holds && derivable) {
    note = "displaced conclusion " + atom + " stays derivable";
    return false;
  }
  bool quiet = true;
  for (const auto& p : glp.programs)
    for (const auto& r : p.rules)
      if (r.head.kind == HeadKind::Lit && r.head.lit.atom == atom &&
          gen_body_true(gi, r))
        quiet = false;
  bool weak_derivable = quiet || solved.count(weak_node(atom)) != 0;
  if (!holds && !weak_derivable) {
    note = "no acyclic support for not " + atom;
    return false;
  }
  if (holds && weak_derivable) {
    note = "weak complement of " + atom + " stays derivable";
    return false;
  }
  return true;
}

}  // namespace detail

// For each answer set of the closed translation of a GLP sequence, compare
// the graph characterisation of stability with the direct fixpoint check.
inline CoincidenceReport coincidence_check(const UpdateSequence& seq,
                                           std::size_t atom_cap = kDefaultAtomCap) {
  detail::require_glp(seq, "coincidence_check");
  CoincidenceReport report;
  AndOrGraph g = build_andor_graph(seq);
  report.certificate = cycle_certificate(g);
  auto universe = seq.atoms();
  for (const auto& s : update_answer_sets(q_translate(seq), atom_cap)) {
    CoincidenceRecord rec;
    rec.answer_set = s;
    GeneralizedInterpretation gi;
    gi.universe = universe;
    for (const auto& l : s.lits)
      if (!l.neg) gi.pos.insert(l.atom);
    AndOrGraph red = reduce_graph(g, seq, gi);
    auto solved = detail::acyclic_solved(red);
    rec.graph_verdict = true;
    for (const auto& a : universe) {
      std::string note;
      if (!detail::graph_conditions(seq, solved, gi, a, note)) {
        rec.graph_verdict = false;
        rec.note = note;
        break;
      }
    }
    rec.fixpoint_verdict = is_dynamic_stable(seq, gi);
    report.records.push_back(std::move(rec));
  }
  return report;
}

// ELP variant: answer sets of the sequence itself, checked over the
// embedded and complement-closed GLP sequence.
inline CoincidenceReport coincidence_check_elp(
    const UpdateSequence& seq, std::size_t atom_cap = kDefaultAtomCap) {
  UpdateSequence glp = embed_sequence(seq);
  CoincidenceReport report;
  AndOrGraph g = build_andor_graph(glp);
  report.certificate = cycle_certificate(g);
  auto universe = glp.atoms();
  for (const auto& s : update_answer_sets(seq, atom_cap)) {
    CoincidenceRecord rec;
    rec.answer_set = s;
    GeneralizedInterpretation gi = totalize(s, universe);
    AndOrGraph red = reduce_graph(g, glp, gi);
    auto solved = detail::acyclic_solved(red);
    rec.graph_verdict = true;
    for (const auto& a : universe) {
      std::string note;
      if (!detail::graph_conditions(glp, solved, gi, a, note)) {
        rec.graph_verdict = false;
        rec.note = note;
        break;
      }
    }
    rec.fixpoint_verdict = is_dynamic_stable(glp, gi);
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace updlp

#endif
